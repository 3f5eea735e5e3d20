//! Diagonal forms over F_p classified by rank and discriminant, next to the
//! normal forms computed in the finite field models.

use motivic_chi::oracles::{classify_form_fp, gw_fp_relation_check, DiagonalForm};
use motivic_chi::FieldModel;

fn main() {
    for p in [3u64, 5, 7, 11, 13] {
        let m = FieldModel::finite(p).expect("odd prime");
        let relation = gw_fp_relation_check(p).expect("odd prime");
        println!("F_{p} (p = {} mod 4), relation holds: {relation}", p % 4);
        for rank in 1..=3usize {
            for b in 0..=rank {
                let form = DiagonalForm::signs(p, rank - b, b).expect("odd prime");
                let (r, square_disc) = classify_form_fp(&form);
                let nf = m.int((rank - b) as i64, b as i64);
                println!(
                    "  {}<1> + {b}<-1>: rank {r}, disc {}  normal form {}",
                    rank - b,
                    if square_disc { "square" } else { "non-square" },
                    m.render(&nf)
                );
            }
        }
    }
}
