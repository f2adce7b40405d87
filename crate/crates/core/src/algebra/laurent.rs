//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse Laurent polynomial; only nonzero coefficients are stored, so the
/// zero polynomial is the empty map.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        LaurentPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPolynomial::monomial(c, 0)
    }

    /// `c · t^exponent`.
    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPolynomial { terms }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        LaurentPolynomial::monomial(1, 1)
    }

    /// Sums `(exponent, coefficient)` pairs, merging repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPolynomial::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `1 + t + … + t^{n-1}`.
    pub fn geometric_sum(n: usize) -> Self {
        LaurentPolynomial::from_terms((0..n as i64).map(|e| (e, 1)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn high_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn reflect(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact value at an integer point. `None` when a negative power would
    /// leave the integers (any negative exponent with `|t| ≠ 1`).
    pub fn evaluate(&self, t: i64) -> Option<BigInt> {
        let t = BigInt::from(t);
        let unit = t.abs().is_one();
        let mut total = BigInt::zero();
        for (&e, c) in &self.terms {
            let power = if e >= 0 {
                num_traits::pow(t.clone(), e as usize)
            } else if unit {
                num_traits::pow(t.clone(), e.unsigned_abs() as usize)
            } else {
                return None;
            };
            total += c * power;
        }
        Some(total)
    }

    /// `self / divisor` when the quotient is again an integer Laurent
    /// polynomial, otherwise `None`.
    pub fn exact_div(&self, divisor: &LaurentPolynomial) -> Option<LaurentPolynomial> {
        let (d_high, d_lead) = divisor.terms.iter().next_back()?;
        if self.is_zero() {
            return Some(LaurentPolynomial::zero());
        }
        let d_low = divisor.low_degree()?;
        let q_low = self.low_degree()? - d_low;

        let mut remainder = self.clone();
        let mut quotient = LaurentPolynomial::zero();
        while let Some((&r_high, r_lead)) = remainder.terms.iter().next_back() {
            let q_exp = r_high - d_high;
            if q_exp < q_low {
                return None;
            }
            let (q_coef, rest) = r_lead.div_rem(d_lead);
            if !rest.is_zero() {
                return None;
            }
            let step = LaurentPolynomial::monomial(q_coef, q_exp);
            remainder = &remainder - &(&step * divisor);
            quotient = &quotient + &step;
        }
        Some(quotient)
    }

    /// Normal form up to units `±t^k`: lowest exponent 0 and positive
    /// leading coefficient.
    pub fn normalized(&self) -> LaurentPolynomial {
        let Some(low) = self.low_degree() else {
            return LaurentPolynomial::zero();
        };
        let shifted = self.shift(-low);
        let lead_negative = shifted
            .terms
            .values()
            .next_back()
            .is_some_and(|c| c.is_negative());
        if lead_negative {
            -shifted
        } else {
            shifted
        }
    }

    /// Whether `P(t) = ±t^m · P(1/t)` for some `m`.
    pub fn is_symmetric_up_to_unit(&self) -> bool {
        let (Some(low), Some(high)) = (self.low_degree(), self.high_degree()) else {
            return true;
        };
        let mirrored = self.reflect().shift(low + high);
        mirrored == *self || mirrored == -self.clone()
    }

    /// Coefficients from exponent `low_degree()` upward, zeros included.
    pub fn dense_coefficients(&self) -> Vec<BigInt> {
        let (Some(low), Some(high)) = (self.low_degree(), self.high_degree()) else {
            return Vec::new();
        };
        (low..=high).map(|e| self.coefficient(e)).collect()
    }

    fn add_term(&mut self, exponent: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(mut self) -> LaurentPolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;

            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Renders ascending powers, e.g. `1 - t + t^2`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let power = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if power.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{magnitude}{power}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let p = poly(&[(1, 2), (1, -2), (0, 0)]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPolynomial::zero());
        let q = &poly(&[(0, 1), (1, 1)]) - &poly(&[(1, 1)]);
        assert_eq!(q, LaurentPolynomial::one());
        assert_eq!(q.terms().count(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(0, 1), (1, -1), (2, 1)]).to_string(), "1 - t + t^2");
        assert_eq!(poly(&[(-1, -3), (2, 2)]).to_string(), "-3t^-1 + 2t^2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        // (1 + t^3) / (1 + t) = 1 - t + t^2
        let num = poly(&[(0, 1), (3, 1)]);
        let q = num.exact_div(&LaurentPolynomial::geometric_sum(2)).unwrap();
        assert_eq!(q, poly(&[(0, 1), (1, -1), (2, 1)]));
        // 1 / (1 + t) is not a Laurent polynomial
        assert_eq!(
            LaurentPolynomial::one().exact_div(&LaurentPolynomial::geometric_sum(2)),
            None
        );
        // 3t / 2 is not integral
        assert_eq!(
            poly(&[(1, 3)]).exact_div(&LaurentPolynomial::constant(2)),
            None
        );
        assert_eq!(poly(&[(1, 3)]).exact_div(&LaurentPolynomial::zero()), None);
        assert_eq!(
            poly(&[(-2, 6), (0, -4)]).exact_div(&poly(&[(-1, 2)])),
            Some(poly(&[(-1, 3), (1, -2)]))
        );
    }

    #[test]
    fn evaluation() {
        let p = poly(&[(-1, 1), (0, 1), (2, 3)]);
        assert_eq!(p.evaluate(-1), Some(BigInt::from(3)));
        assert_eq!(p.evaluate(1), Some(BigInt::from(5)));
        assert_eq!(p.evaluate(2), None);
        assert_eq!(poly(&[(0, 1), (2, 3)]).evaluate(2), Some(BigInt::from(13)));
    }

    #[test]
    fn normalization_and_symmetry() {
        let p = poly(&[(-3, 1), (-2, 3), (-1, -1)]);
        assert_eq!(
            p.normalized(),
            poly(&[(0, -1), (1, -3), (2, 1)]).normalized()
        );
        assert_eq!(p.normalized(), poly(&[(0, -1), (1, -3), (2, 1)]));
        let trefoil = poly(&[(5, 1), (6, -1), (7, 1)]);
        assert_eq!(trefoil.normalized(), poly(&[(0, 1), (1, -1), (2, 1)]));
        assert!(trefoil.is_symmetric_up_to_unit());
        assert!(poly(&[(0, 1), (1, -1)]).is_symmetric_up_to_unit());
        assert!(!poly(&[(0, 1), (1, 2)]).is_symmetric_up_to_unit());
        assert_eq!(
            LaurentPolynomial::zero().normalized(),
            LaurentPolynomial::zero()
        );
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-4i64..5, -6i64..7), 0..6).prop_map(|t| poly(&t))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(-(-a.clone()), a.clone());
        }

        #[test]
        fn product_divides_exactly(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
            for t in [-1i64, 1] {
                let ab = (&a * &b).evaluate(t).unwrap();
                prop_assert_eq!(ab, a.evaluate(t).unwrap() * b.evaluate(t).unwrap());
            }
        }
    }
}
