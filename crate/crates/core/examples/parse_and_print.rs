//! Parsing the expression language, validating pointedness, and printing
//! back in canonical form.

use motivic_chi::dsl::parse_file;
use motivic_chi::{parse, pretty_print, validate};

const SOURCES: &[&str] = &[
    "Product(Gm, Projective(2))",
    "Stratified[(Affine(2), 0), (Affine(1), 1), (Point, 2)]",
    "ClosedOpenPair(Affine(1), Gm, Point, 1)",
    "Smash(TateTwist, ThomTrivial(2, Point))",
    "TorusFixed(GModT(A,2), Stratified[])",
    // well formed, but Smash needs pointed arguments
    "Smash(Gm, TateTwist)",
    // errors with positions
    "Product(Gm,",
    "Torus(1, 2)",
    "Quotient(Gm)",
    "Flag(Z,3)",
];

fn main() {
    for src in SOURCES {
        match parse(src) {
            Ok(e) => {
                let diags = validate(&e);
                let pointed = if e.is_pointed() {
                    "pointed"
                } else {
                    "unpointed"
                };
                println!(
                    "{src}\n  -> {} ({pointed}, depth {})",
                    pretty_print(&e),
                    e.depth()
                );
                for d in diags {
                    println!("  invalid: {d}");
                }
            }
            Err(err) => println!("{src}\n  error: {err}"),
        }
    }

    let file = "# a comment line\nDisjointUnion(\n  Point,  # first\n  Gm      # second\n)\n";
    println!(
        "file form -> {}",
        pretty_print(&parse_file(file).expect("parses"))
    );
}
