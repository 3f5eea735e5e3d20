//! Weyl groups by breadth-first search over simple reflections, against the
//! product of fundamental degrees, and the Bruhat count for G/B.

use motivic_chi::oracles::{degrees, poincare_coefficients};
use motivic_chi::roots::{chi_flag, weyl_data};
use motivic_chi::{CartanType, FieldModel};

fn main() {
    let m = FieldModel::GENERIC;
    for ct in CartanType::supported() {
        let entry = weyl_data(ct).expect("supported type");
        let (rs, wd) = (&entry.0, &entry.1);
        let agrees = poincare_coefficients(ct).ok().as_ref() == Some(&wd.length_counts);
        println!(
            "{:<4} |W| = {:<6} N = {:<3} degrees {:?}  Poincare ok: {agrees}",
            ct.to_string(),
            wd.order,
            rs.positive_root_count,
            degrees(ct).expect("supported type"),
        );
    }

    let g2: CartanType = "G,2".parse().expect("valid type");
    let entry = weyl_data(g2).expect("supported type");
    println!("\nG2 Cartan matrix {:?}", entry.0.cartan_matrix);
    println!("G2 length counts {}", entry.1.length_counts_json());
    let flag = chi_flag(g2, &m).expect("supported type");
    println!("chi(G2/B) = {}", m.render_value(&flag));

    let too_big: CartanType = "A,8".parse().expect("valid type");
    println!("A8: {}", weyl_data(too_big).expect_err("beyond the cap"));
}
