//! Evaluation with a full derivation: every node records the rule, its
//! citation, the assumptions taken on trust and the intermediate value.
//!
//! `cargo run --example derivations -- 'Projective(2)' finite:3`

use motivic_chi::{eval_str, replay, FieldModel};

fn main() {
    let mut args = std::env::args().skip(1);
    let expr = args
        .next()
        .unwrap_or_else(|| "TorusFixed(Projective(1), DisjointUnion(Point, Point))".into());
    let model: FieldModel = args
        .next()
        .unwrap_or_else(|| "generic".into())
        .parse()
        .expect("model selector");

    let (value, derivation) = match eval_str(&expr, &model) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("chi({expr}) = {}", model.render_value(&value));
    println!(
        "{} nodes, replay: {:?}\n",
        derivation.node_count(),
        replay(&derivation, &model).is_ok()
    );
    print!("{}", derivation.render_tree(&model));
    println!();
    let json = serde_json::to_string_pretty(&derivation.to_json(&model)).expect("serializes");
    println!("{json}");
}
