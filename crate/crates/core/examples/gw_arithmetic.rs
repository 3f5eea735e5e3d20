//! Arithmetic in the subring of GW(k) spanned by <1> and <-1>, under each
//! field model.

use motivic_chi::gw::ElementJson;
use motivic_chi::FieldModel;

fn main() {
    let models = [
        FieldModel::GENERIC,
        FieldModel::SQRT_MINUS_ONE,
        FieldModel::REAL_CLOSED,
        FieldModel::finite(3).expect("odd prime"),
        FieldModel::finite(5).expect("odd prime"),
    ];
    for m in models {
        let h = m.hyperbolic_difference();
        let x = m.int(2, -1);
        println!("[{m}]");
        println!("  (1 - <-1>)^2 = {}", m.render(&m.mul(&h, &h)));
        println!("  2(1 - <-1>)  = {}", m.render(&m.scale(&h, 2)));
        println!(
            "  rank of {}  = {}",
            m.render(&x),
            m.coeffs().render(&x.rank(&m))
        );
        match m.inverse(&x) {
            Some(inv) => println!("  inverse      = {}", m.render(&inv)),
            None => println!("  not a unit"),
        }
        if let Ok(sig) = m.signature(&x) {
            println!("  signature    = {}", m.coeffs().render(&sig));
        }
    }

    // Z[1/p] coefficients only exist once the characteristic is inverted.
    let f7 = FieldModel::finite(7).expect("odd prime");
    let seventh = f7.parse_element("1/7^1<1>").expect("valid element");
    let x = f7.mul(&seventh, &f7.int(2, 5));
    println!("[finite:7] (1/7)(2<1> + 5<-1>) = {}", f7.render(&x));
    let seven = f7.int(7, 0);
    println!(
        "[finite:7] 7<1> is a unit: {}",
        f7.render(&f7.inverse(&seven).expect("p is inverted"))
    );
    println!(
        "{}",
        serde_json::to_string(&ElementJson::new(&x, &f7)).expect("serializes")
    );
    println!(
        "generic rejects it: {:?}",
        FieldModel::GENERIC.parse_element("1/7^1<1>").is_err()
    );
}
