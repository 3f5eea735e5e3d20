//! The same spaces computed through different decompositions: cells,
//! closed/open pairs, Mayer-Vietoris covers and torus localization.

use motivic_chi::{eval_str, FieldModel};

fn show(label: &str, src: &str, m: &FieldModel) {
    let v = eval_str(src, m).expect("valid expression").0;
    println!("  {label:<30} {}", m.render_value(&v));
}

fn main() {
    for m in [
        FieldModel::GENERIC,
        FieldModel::REAL_CLOSED,
        FieldModel::finite(3).expect("odd prime"),
    ] {
        println!("[{m}]");
        show("P^2 as an atom", "Projective(2)", &m);
        show(
            "P^2 by cells",
            "Stratified[(Affine(2), 0), (Affine(1), 1), (Point, 2)]",
            &m,
        );
        show(
            "P^2 = A^2 + P^1 at infinity",
            "ClosedOpenPair(Projective(2), Affine(2), Projective(1), 1)",
            &m,
        );
        show(
            "P^2 by torus fixed points",
            "TorusFixed(Projective(2), Stratified[(Point, 0), (Point, 0), (Point, 0)])",
            &m,
        );
        show(
            "P^1/Gm via MV",
            "MayerVietoris(Affine(1), Affine(1), Gm, Gm, Gm, Gm)",
            &m,
        );
        show("P^1/Gm as a cone", "PushoutCone(Projective(1), Gm)", &m);
        show("Thom space T^2 ^ Gm_+", "ThomTrivial(2, Gm)", &m);
        show("T ^ T", "Smash(TateTwist, TateTwist)", &m);
        show("T^2 x A^1 as a torus slice", "TorusSlice(2, Affine(1))", &m);
    }
}
