//! Sparse multivariate polynomials with rational coefficients over the two
//! indexed variable families `x_1, x_2, ...` and `y_1, y_2, ...`.
//!
//! Used only for formal identities between cycle indices, where the point is
//! exact structural equality rather than evaluation.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub family: Family,
    pub index: u64,
}

impl Var {
    pub fn x(index: u64) -> Self {
        Var {
            family: Family::X,
            index,
        }
    }

    pub fn y(index: u64) -> Self {
        Var {
            family: Family::Y,
            index,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::X => 'x',
            Family::Y => 'y',
        };
        write!(f, "{letter}{}", self.index)
    }
}

impl std::str::FromStr for Var {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (family, rest) = match s.split_at_checked(1) {
            Some(("x", rest)) => (Family::X, rest),
            Some(("y", rest)) => (Family::Y, rest),
            _ => return Err(format!("bad variable name {s:?}")),
        };
        let index = rest
            .parse()
            .map_err(|_| format!("bad variable index in {s:?}"))?;
        Ok(Var { family, index })
    }
}

/// Product of variables with positive exponents, kept sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary factors, merging repeated variables
    /// and dropping zero exponents.
    pub fn from_factors(factors: impl IntoIterator<Item = (Var, u64)>) -> Self {
        let mut merged: BTreeMap<Var, u64> = BTreeMap::new();
        for (v, e) in factors {
            *merged.entry(v).or_default() += e;
        }
        Monomial(merged.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn factors(&self) -> &[(Var, u64)] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_factors(self.0.iter().chain(&other.0).copied())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigRational::one(), Monomial::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return SymPoly::zero();
        }
        SymPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }
}

/// Which arithmetic operation [`sym_arith`] applies.
#[derive(Clone, Debug)]
pub enum SymOp {
    Add,
    Sub,
    Mul,
    /// Scale the left operand; the right operand is ignored.
    Scale(BigRational),
}

pub fn sym_arith(a: &SymPoly, b: &SymPoly, op: SymOp) -> SymPoly {
    match op {
        SymOp::Add => a + b,
        SymOp::Sub => a - b,
        SymOp::Mul => a * b,
        SymOp::Scale(k) => a.scale(&k),
    }
}

impl Add<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

impl Mul<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<SymPoly> for SymPoly {
            type Output = SymPoly;
            fn $m(self, rhs: SymPoly) -> SymPoly { (&self).$m(&rhs) }
        }
        impl $tr<&SymPoly> for SymPoly {
            type Output = SymPoly;
            fn $m(self, rhs: &SymPoly) -> SymPoly { (&self).$m(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{m}")?;
            } else if m.0.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    monomial: Vec<(String, u64)>,
    num: String,
    den: String,
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(m, c)| TermRecord {
                monomial: m.0.iter().map(|(v, e)| (v.to_string(), *e)).collect(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut p = SymPoly::zero();
        for r in records {
            let factors = r
                .monomial
                .iter()
                .map(|(v, e)| v.parse::<Var>().map(|v| (v, *e)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(D::Error::custom)?;
            let num: BigInt = r.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = r.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            p.add_term(Monomial::from_factors(factors), BigRational::new(num, den));
        }
        Ok(p)
    }
}
