use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial in `z` with arbitrary-precision integer coefficients.
///
/// Coefficient `i` multiplies `z^i`. Trailing zeros are always trimmed, so
/// the zero polynomial has no coefficients and structural equality is
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

/// Where to evaluate a [`UniPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalPoint {
    Integer(i64),
    /// `z = sqrt(-1)`, only for even polynomials (`z^2 := -1`).
    GaussianUnit,
}

impl UniPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c · z^degree`
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs)
    }

    /// `1 + c · z^degree`
    pub fn one_plus(c: impl Into<BigInt>, degree: usize) -> Self {
        Self::one() + Self::monomial(c, degree)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(Signed::is_negative)
    }

    /// True when every odd-power coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(z^k)`
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k > 0, "substitution z -> z^0 is not a polynomial map");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Coefficient-wise division by a positive integer that must be exact.
    pub fn div_exact(&self, divisor: u64, context: &str) -> Result<Self> {
        let d = BigInt::from(divisor);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(&d);
            if !r.is_zero() {
                return Err(Error::InexactDivision {
                    divisor,
                    context: context.to_string(),
                });
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// Quotient by `1 + z`; fails unless `-1` is a root.
    pub fn div_one_plus_z(&self) -> Result<Self> {
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        // Synthetic division from the top: q_{i-1} = a_i - q_i.
        let mut quotient = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for i in (1..=deg).rev() {
            carry = &self.coeffs[i] - carry;
            quotient[i - 1] = carry.clone();
        }
        if self.coeffs[0] != carry {
            return Err(Error::Consistency(
                "polynomial is not divisible by 1 + z".to_string(),
            ));
        }
        Ok(Self::new(quotient))
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// Sum of all coefficients, `p(1)`.
    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_at(&self, at: EvalPoint) -> Result<BigInt> {
        match at {
            EvalPoint::Integer(z) => Ok(self.eval(&BigInt::from(z))),
            EvalPoint::GaussianUnit => {
                if !self.is_even() {
                    return Err(Error::domain(
                        "z = sqrt(-1) needs a polynomial without odd powers",
                    ));
                }
                Ok(self
                    .coeffs
                    .iter()
                    .step_by(2)
                    .enumerate()
                    .map(|(half, c)| if half % 2 == 0 { c.clone() } else { -c })
                    .sum())
            }
        }
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> std::result::Result<Self, String> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<BigInt>()
                    .map_err(|e| format!("bad coefficient {:?}: {e}", s.as_ref()))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

/// Evaluate at `-1`, `1`, any integer, or at the gaussian unit.
pub fn eval_poly(p: &UniPoly, at: EvalPoint) -> Result<BigInt> {
    p.eval_at(at)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{mag}z^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        Self::from_decimal_strings(&items).map_err(serde::de::Error::custom)
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        UniPoly::new(coeffs)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        UniPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly { (&self).$m(&rhs) }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly { (&self).$m(rhs) }
        }
        impl $tr<UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|v| UniPoly::from_i64s(&v))
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = UniPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert!(UniPoly::from_i64s(&[0, 0]).is_zero());
        assert_eq!(UniPoly::from_i64s(&[0]).degree(), None);
    }

    #[test]
    fn binomial_power() {
        let p = UniPoly::one_plus(1, 1).pow(4);
        assert_eq!(p, UniPoly::from_i64s(&[1, 4, 6, 4, 1]));
        assert_eq!(UniPoly::zero().pow(0), UniPoly::one());
    }

    #[test]
    fn evaluation_points() {
        // Undirected circulants of order 13 by valency.
        let cu13 = UniPoly::from_i64s(&[1, 0, 1, 0, 3, 0, 4, 0, 3, 0, 1, 0, 1]);
        assert_eq!(
            cu13.eval_at(EvalPoint::GaussianUnit).unwrap(),
            BigInt::from(2)
        );
        let cd13 = UniPoly::from_i64s(&[1, 1, 6, 19, 43, 66, 80, 66, 43, 19, 6, 1, 1]);
        assert_eq!(
            cd13.eval_at(EvalPoint::Integer(-1)).unwrap(),
            BigInt::from(8)
        );
        assert_eq!(
            UniPoly::zero().eval_at(EvalPoint::Integer(-1)).unwrap(),
            BigInt::zero()
        );
        assert!(matches!(
            cd13.eval_at(EvalPoint::GaussianUnit),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn exact_division() {
        let p = UniPoly::from_i64s(&[6, 12, -18]);
        assert_eq!(
            p.div_exact(6, "t").unwrap(),
            UniPoly::from_i64s(&[1, 2, -3])
        );
        assert!(matches!(
            p.div_exact(5, "t"),
            Err(Error::InexactDivision { divisor: 5, .. })
        ));
    }

    #[test]
    fn division_by_one_plus_z() {
        let q = UniPoly::from_i64s(&[1, 2, 5, 8]);
        let p = &q * &UniPoly::one_plus(1, 1);
        assert_eq!(p.div_one_plus_z().unwrap(), q);
        assert!(UniPoly::from_i64s(&[1, 1, 1]).div_one_plus_z().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(
            UniPoly::from_i64s(&[1, 0, -1, 3]).to_string(),
            "1 - z^2 + 3z^3"
        );
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in poly(), b in poly(), z in -5i64..5) {
            let z = BigInt::from(z);
            prop_assert_eq!((&a * &b).eval(&z), a.eval(&z) * b.eval(&z));
            prop_assert_eq!((&a + &b).eval(&z), a.eval(&z) + b.eval(&z));
        }

        #[test]
        fn json_round_trip(a in poly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: UniPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
