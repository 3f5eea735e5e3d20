//! The variety of maximal tori G/N(T) has Euler characteristic 1.
//!
//! Run with `cargo run --example maximal_tori`.

use motivic_chi::roots::{chi_g_mod_normalizer, weyl_data};
use motivic_chi::{CartanType, FieldModel};

fn main() {
    let models = [
        FieldModel::SQRT_MINUS_ONE,
        FieldModel::finite(5).expect("odd prime"),
        FieldModel::finite(7).expect("odd prime"),
        FieldModel::GENERIC,
        FieldModel::REAL_CLOSED,
    ];
    for ct in CartanType::supported() {
        let order = weyl_data(ct).expect("supported type").1.order;
        print!("{:<5} |W| = {order:>6}", ct.to_string());
        for m in &models {
            let v = chi_g_mod_normalizer(ct, m).expect("supported type");
            print!("   {m}: {}", m.render_value(&v));
        }
        println!();
    }
}
