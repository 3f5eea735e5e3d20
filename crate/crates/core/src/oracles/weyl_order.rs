//! Weyl group facts from the fundamental degrees: `|W| = Π d_i` and the
//! Poincaré polynomial `Π (1 + t + ... + t^{d_i - 1})`.

use super::OracleError;
use crate::dsl::{CartanType, Family};

/// Fundamental degrees of the invariant polynomials.
pub fn degrees(ct: CartanType) -> Result<Vec<u64>, OracleError> {
    if ct.constraint_violation().is_some() {
        return Err(OracleError::UnsupportedType(ct));
    }
    let n = ct.rank as u64;
    Ok(match ct.family {
        Family::A => (2..=n + 1).collect(),
        Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
        Family::D => {
            let mut d: Vec<u64> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d
        }
        Family::G => vec![2, 6],
        Family::F => vec![2, 6, 8, 12],
        Family::E => vec![2, 5, 6, 8, 9, 12],
    })
}

pub fn weyl_order_closed_form(ct: CartanType) -> Result<u64, OracleError> {
    Ok(degrees(ct)?.iter().product())
}

/// Coefficients of the Poincaré polynomial, i.e. the number of elements of
/// each length.
pub fn poincare_coefficients(ct: CartanType) -> Result<Vec<u64>, OracleError> {
    let mut poly = vec![1u64];
    for d in degrees(ct)? {
        let mut next = vec![0u64; poly.len() + d as usize - 1];
        for (i, &c) in poly.iter().enumerate() {
            for j in 0..d as usize {
                next[i + j] += c;
            }
        }
        poly = next;
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    fn factorial(n: u64) -> u64 {
        (1..=n).product()
    }

    #[test]
    fn orders() {
        assert_eq!(weyl_order_closed_form(ct("A,1")).unwrap(), 2);
        assert_eq!(weyl_order_closed_form(ct("B,2")).unwrap(), 8);
        assert_eq!(weyl_order_closed_form(ct("G,2")).unwrap(), 12);
        assert_eq!(weyl_order_closed_form(ct("F,4")).unwrap(), 1152);
        assert_eq!(weyl_order_closed_form(ct("E,6")).unwrap(), 51840);
        assert!(weyl_order_closed_form(ct("G,3")).is_err());
    }

    #[test]
    fn family_formulas() {
        for n in 1..=7u64 {
            assert_eq!(
                weyl_order_closed_form(CartanType::new(Family::A, n as u32)).unwrap(),
                factorial(n + 1)
            );
        }
        for n in 2..=6u64 {
            let bc = (1u64 << n) * factorial(n);
            assert_eq!(
                weyl_order_closed_form(CartanType::new(Family::B, n as u32)).unwrap(),
                bc
            );
            assert_eq!(
                weyl_order_closed_form(CartanType::new(Family::C, n as u32)).unwrap(),
                bc
            );
        }
        for n in 3..=6u64 {
            let d = (1u64 << (n - 1)) * factorial(n);
            assert_eq!(
                weyl_order_closed_form(CartanType::new(Family::D, n as u32)).unwrap(),
                d
            );
        }
    }

    #[test]
    fn poincare_polynomials() {
        assert_eq!(poincare_coefficients(ct("A,2")).unwrap(), vec![1, 2, 2, 1]);
        assert_eq!(
            poincare_coefficients(ct("G,2")).unwrap(),
            vec![1, 2, 2, 2, 2, 2, 1]
        );
    }
}
