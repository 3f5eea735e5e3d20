//! Elements `a⟨1⟩ + b⟨-1⟩` and the ring operations of each field model.
//!
//! Internally the subring is `Z[1/p][ε]/(ε² - 1)` with `ε = ⟨-1⟩`, further
//! divided by `ε - 1` (square root of -1 present) or by `2(1 - ε)`
//! (finite fields with `p ≡ 3 mod 4`). Elements are kept in normal form, so
//! structural equality is equality in the model ring.

use super::{CoeffRing, Coefficient, FieldModel, GwError, ModelKind};

/// `unit·⟨1⟩ + twist·⟨-1⟩`, normalized for the model it was built in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GwElement {
    unit: Coefficient,
    twist: Coefficient,
}

impl GwElement {
    pub fn unit_coeff(&self) -> &Coefficient {
        &self.unit
    }

    pub fn twist_coeff(&self) -> &Coefficient {
        &self.twist
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.twist.is_zero()
    }

    /// Rank: the ring map `ε ↦ 1`.
    pub fn rank(&self, m: &FieldModel) -> Coefficient {
        m.coeffs().add(&self.unit, &self.twist)
    }

    /// Image in the quotient by the ideal `(1 - ⟨-1⟩)`. The quotient map
    /// sends `⟨-1⟩` to 1, so this agrees with [`GwElement::rank`].
    pub fn reduce_mod_fundamental(&self, m: &FieldModel) -> Coefficient {
        self.rank(m)
    }
}

impl FieldModel {
    pub fn coeffs(&self) -> CoeffRing {
        CoeffRing::new(self.char_exponent())
    }

    /// `a⟨1⟩ + b⟨-1⟩` in normal form. Fails if a coefficient carries a
    /// denominator in characteristic zero.
    pub fn make(&self, a: &Coefficient, b: &Coefficient) -> Result<GwElement, GwError> {
        let c = self.coeffs();
        let a = c.admit(a)?;
        let b = c.admit(b)?;
        Ok(self.normal_form(a, b))
    }

    /// Integer shorthand for [`FieldModel::make`].
    pub fn int(&self, a: i64, b: i64) -> GwElement {
        self.normal_form(Coefficient::integer(a), Coefficient::integer(b))
    }

    pub fn zero(&self) -> GwElement {
        self.int(0, 0)
    }

    pub fn one(&self) -> GwElement {
        self.int(1, 0)
    }

    /// `⟨-1⟩` itself.
    pub fn twist(&self) -> GwElement {
        self.int(0, 1)
    }

    /// `1 - ⟨-1⟩`, the value of the multiplicative group.
    pub fn hyperbolic_difference(&self) -> GwElement {
        self.int(1, -1)
    }

    /// Applies the model relations to a raw pair of reduced coefficients.
    pub fn normal_form(&self, a: Coefficient, b: Coefficient) -> GwElement {
        let c = self.coeffs();
        if self.twist_is_trivial() {
            return GwElement {
                unit: c.add(&a, &b),
                twist: Coefficient::zero(),
            };
        }
        if self.twist_has_order_two() {
            // b⟨-1⟩ = 2q⟨-1⟩ + r⟨-1⟩ and 2⟨-1⟩ = 2⟨1⟩
            let (q, r) = c.div_rem_two(&b);
            let unit = c.add(&a, &c.scale(&q, 2));
            return GwElement { unit, twist: r };
        }
        GwElement { unit: a, twist: b }
    }

    pub fn add(&self, x: &GwElement, y: &GwElement) -> GwElement {
        let c = self.coeffs();
        self.normal_form(c.add(&x.unit, &y.unit), c.add(&x.twist, &y.twist))
    }

    pub fn neg(&self, x: &GwElement) -> GwElement {
        let c = self.coeffs();
        self.normal_form(c.neg(&x.unit), c.neg(&x.twist))
    }

    pub fn sub(&self, x: &GwElement, y: &GwElement) -> GwElement {
        self.add(x, &self.neg(y))
    }

    /// Multiplies by an integer multiplicity.
    pub fn scale(&self, x: &GwElement, k: i64) -> GwElement {
        let c = self.coeffs();
        self.normal_form(c.scale(&x.unit, k), c.scale(&x.twist, k))
    }

    /// Product in `Z[1/p][ε]/(ε² - 1)` followed by the model relations.
    pub fn mul(&self, x: &GwElement, y: &GwElement) -> GwElement {
        let c = self.coeffs();
        let unit = c.add(&c.mul(&x.unit, &y.unit), &c.mul(&x.twist, &y.twist));
        let twist = c.add(&c.mul(&x.unit, &y.twist), &c.mul(&x.twist, &y.unit));
        self.normal_form(unit, twist)
    }

    pub fn pow(&self, x: &GwElement, mut n: u64) -> GwElement {
        let mut base = x.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// `⟨-1⟩^c`, decided by the parity of `c`.
    pub fn pow_twist(&self, c: u64) -> GwElement {
        if c.is_multiple_of(2) {
            self.one()
        } else {
            self.twist()
        }
    }

    /// `⟨-1⟩^c · x`; swapping the two coefficients is multiplication by `ε`.
    pub fn twist_by(&self, x: &GwElement, c: u64) -> GwElement {
        if c.is_multiple_of(2) {
            x.clone()
        } else {
            self.normal_form(x.twist.clone(), x.unit.clone())
        }
    }

    /// Signature: the ring map `ε ↦ -1`. Only defined for real closed fields.
    pub fn signature(&self, x: &GwElement) -> Result<Coefficient, GwError> {
        if self.kind() != ModelKind::RealClosed {
            return Err(GwError::SignatureNeedsRealClosed(*self));
        }
        Ok(self.coeffs().sub(&x.unit, &x.twist))
    }

    /// Invertibility in the model ring.
    ///
    /// Generic and real closed: both character images `ε ↦ ±1` must be units
    /// of `Z[1/p]`. Otherwise the fundamental ideal is nilpotent (or zero)
    /// and a unit rank suffices.
    pub fn is_unit(&self, x: &GwElement) -> bool {
        let c = self.coeffs();
        let rank = x.rank(self);
        match self.kind() {
            ModelKind::Generic | ModelKind::RealClosed => {
                c.is_unit(&rank) && c.is_unit(&c.sub(&x.unit, &x.twist))
            }
            ModelKind::SqrtMinusOne | ModelKind::Finite(_) => c.is_unit(&rank),
        }
    }

    /// The multiplicative inverse, when [`FieldModel::is_unit`] holds.
    pub fn inverse(&self, x: &GwElement) -> Option<GwElement> {
        if !self.is_unit(x) {
            return None;
        }
        let c = self.coeffs();
        let rank_inv = c.inverse(&x.rank(self))?;
        match self.kind() {
            ModelKind::Generic | ModelKind::RealClosed => {
                // recover a + bε from its images u = a + b, v = a - b
                let v_inv = c.inverse(&c.sub(&x.unit, &x.twist))?;
                let (sum_half, sum_rem) = c.div_rem_two(&c.add(&rank_inv, &v_inv));
                let (diff_half, diff_rem) = c.div_rem_two(&c.sub(&rank_inv, &v_inv));
                debug_assert!(sum_rem.is_zero() && diff_rem.is_zero());
                Some(self.normal_form(sum_half, diff_half))
            }
            ModelKind::SqrtMinusOne | ModelKind::Finite(_) => {
                // x = r + q with q = b(ε - 1) and q² = 0 whenever q survives
                let q = self.normal_form(c.neg(&x.twist), x.twist.clone());
                debug_assert!(self.mul(&q, &q).is_zero());
                let correction = self.mul(
                    &q,
                    &self.normal_form(c.mul(&rank_inv, &rank_inv), Coefficient::zero()),
                );
                let lead = self.normal_form(rank_inv, Coefficient::zero());
                Some(self.sub(&lead, &correction))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldModel {
        FieldModel::finite(p).unwrap()
    }

    fn pair(x: &GwElement) -> (i64, i64) {
        (
            x.unit_coeff().to_i64().unwrap(),
            x.twist_coeff().to_i64().unwrap(),
        )
    }

    #[test]
    fn make_examples() {
        let g = FieldModel::GENERIC;
        assert_eq!(pair(&g.int(1, -1)), (1, -1));
        assert_eq!(pair(&FieldModel::SQRT_MINUS_ONE.int(0, 1)), (1, 0));
        assert_eq!(pair(&f(7).int(0, 2)), (2, 0));
        let half = g.coeffs().make(1, 0).unwrap();
        assert!(g.make(&half, &Coefficient::zero()).is_ok());
        let bad = Coefficient::integer(1);
        assert!(f(5).make(&f(5).coeffs().make(1, 2).unwrap(), &bad).is_ok());
    }

    #[test]
    fn denominator_rejected_in_char_zero() {
        let frac = f(5).coeffs().make(1, 1).unwrap();
        assert_eq!(
            FieldModel::GENERIC.make(&frac, &Coefficient::zero()),
            Err(GwError::DenominatorWithoutCharacteristic)
        );
    }

    #[test]
    fn addition_examples() {
        let g = FieldModel::GENERIC;
        assert_eq!(g.add(&g.hyperbolic_difference(), &g.twist()), g.one());
        let x = g.int(3, -7);
        assert_eq!(g.add(&x, &g.zero()), x);
        let f3 = f(3);
        let h = f3.hyperbolic_difference();
        assert!(f3.add(&h, &h).is_zero());
    }

    #[test]
    fn multiplication_examples() {
        let g = FieldModel::GENERIC;
        assert_eq!(g.mul(&g.twist(), &g.twist()), g.one());
        let h = g.hyperbolic_difference();
        assert_eq!(pair(&g.mul(&h, &h)), (2, -2));
        let f3 = f(3);
        let h3 = f3.hyperbolic_difference();
        assert!(f3.mul(&h3, &h3).is_zero());
    }

    #[test]
    fn twist_powers() {
        let g = FieldModel::GENERIC;
        assert_eq!(g.pow_twist(0), g.one());
        assert_eq!(g.pow_twist(1), g.twist());
        assert_eq!(g.pow_twist(u64::MAX), g.twist());
        assert_eq!(
            FieldModel::SQRT_MINUS_ONE.pow_twist(3),
            FieldModel::SQRT_MINUS_ONE.one()
        );
    }

    #[test]
    fn normal_form_examples() {
        let c = |n: i64| Coefficient::integer(n);
        assert_eq!(
            pair(&FieldModel::SQRT_MINUS_ONE.normal_form(c(1), c(2))),
            (3, 0)
        );
        assert_eq!(pair(&f(7).normal_form(c(0), c(3))), (2, 1));
        assert_eq!(
            pair(&FieldModel::REAL_CLOSED.normal_form(c(1), c(-1))),
            (1, -1)
        );
        assert_eq!(pair(&f(13).normal_form(c(4), c(-9))), (-5, 0));
        assert_eq!(pair(&f(3).normal_form(c(0), c(-3))), (-4, 1));
    }

    #[test]
    fn rank_and_signature() {
        let r = FieldModel::REAL_CLOSED;
        let one = Coefficient::one();
        assert!(r.hyperbolic_difference().rank(&r).is_zero());
        assert_eq!(r.int(1, 1).rank(&r), Coefficient::integer(2));
        assert_eq!(r.one().rank(&r), one);
        assert_eq!(r.signature(&r.twist()).unwrap(), Coefficient::integer(-1));
        assert!(r.signature(&r.int(1, 1)).unwrap().is_zero());
        assert_eq!(r.signature(&r.int(2, 1)).unwrap(), one);
        assert!(matches!(
            FieldModel::GENERIC.signature(&FieldModel::GENERIC.one()),
            Err(GwError::SignatureNeedsRealClosed(_))
        ));
    }

    #[test]
    fn fundamental_reduction() {
        let g = FieldModel::GENERIC;
        let h = g.hyperbolic_difference();
        assert!(h.reduce_mod_fundamental(&g).is_zero());
        assert!(g.pow(&h, 2).reduce_mod_fundamental(&g).is_zero());
        assert!(g.pow(&h, 3).reduce_mod_fundamental(&g).is_zero());
        assert_eq!(g.one().reduce_mod_fundamental(&g), Coefficient::one());
    }

    #[test]
    fn unit_examples() {
        let f3 = f(3);
        let x = f3.add(&f3.one(), &f3.hyperbolic_difference());
        assert!(f3.is_unit(&x));
        let inv = f3.inverse(&x).unwrap();
        assert_eq!(f3.mul(&x, &inv), f3.one());
        for m in [FieldModel::GENERIC, FieldModel::REAL_CLOSED, f(3), f(7)] {
            assert!(!m.is_unit(&m.hyperbolic_difference()), "{m}");
        }
        let r = FieldModel::REAL_CLOSED;
        assert!(!r.is_unit(&r.int(1, 1)));
        assert!(r.is_unit(&r.twist()));
        assert_eq!(r.inverse(&r.twist()).unwrap(), r.twist());
    }

    #[test]
    fn fractional_inverse_in_finite_model() {
        let f5 = f(5);
        let c = f5.coeffs();
        let x = f5
            .make(&c.make(1, 2).unwrap(), &Coefficient::integer(4))
            .unwrap();
        // rank 1/25 + 4 = 101/25 is not a unit
        assert!(!f5.is_unit(&x));
        let y = f5
            .make(&c.make(1, 2).unwrap(), &Coefficient::zero())
            .unwrap();
        assert_eq!(f5.mul(&y, &f5.inverse(&y).unwrap()), f5.one());
    }
}
