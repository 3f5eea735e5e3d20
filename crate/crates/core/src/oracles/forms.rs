//! Diagonal quadratic forms over `F_p`, classified by rank and discriminant.
//!
//! Over a finite field of odd characteristic two non-degenerate forms are
//! isometric exactly when they have the same rank and the same discriminant
//! modulo squares. Arithmetic here is plain `u64` modular arithmetic and does
//! not touch the `gw` module.

use super::OracleError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForm {
    pub prime: u64,
    /// Entries as signed integers; they are reduced mod `prime`.
    pub entries: Vec<i64>,
}

impl DiagonalForm {
    pub fn new(prime: u64, entries: Vec<i64>) -> Result<Self, OracleError> {
        check_odd_prime(prime)?;
        if let Some(&bad) = entries.iter().find(|&&e| e.rem_euclid(prime as i64) == 0) {
            return Err(OracleError::DegenerateEntry { entry: bad, prime });
        }
        Ok(Self { prime, entries })
    }

    /// `⟨1⟩^{⊕ones} ⊕ ⟨-1⟩^{⊕minus_ones}`.
    pub fn signs(prime: u64, ones: usize, minus_ones: usize) -> Result<Self, OracleError> {
        let mut entries = vec![1; ones];
        entries.extend(std::iter::repeat_n(-1, minus_ones));
        Self::new(prime, entries)
    }
}

fn check_odd_prime(p: u64) -> Result<(), OracleError> {
    let prime = p >= 3
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d));
    if prime {
        Ok(())
    } else {
        Err(OracleError::NotAnOddPrime(p))
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank and whether the discriminant (product of entries) is a square,
/// decided by Euler's criterion.
pub fn classify_form_fp(f: &DiagonalForm) -> (usize, bool) {
    let p = f.prime;
    let disc = f
        .entries
        .iter()
        .fold(1u64, |acc, &e| acc * (e.rem_euclid(p as i64) as u64) % p);
    (f.entries.len(), pow_mod(disc, (p - 1) / 2, p) == 1)
}

/// Checks the relation the `F_p` model imposes on `⟨-1⟩`:
/// for `p ≡ 1 (mod 4)`, `⟨-1⟩ ≅ ⟨1⟩`; for `p ≡ 3 (mod 4)`,
/// `⟨-1⟩ ⊕ ⟨-1⟩ ≅ ⟨1⟩ ⊕ ⟨1⟩` while `⟨-1⟩ ≇ ⟨1⟩`.
pub fn gw_fp_relation_check(p: u64) -> Result<bool, OracleError> {
    let class = |ones, minus| DiagonalForm::signs(p, ones, minus).map(|f| classify_form_fp(&f));
    if p % 4 == 1 {
        Ok(class(0, 1)? == class(1, 0)?)
    } else {
        Ok(class(0, 2)? == class(2, 0)? && class(0, 1)? != class(1, 0)?)
    }
}
