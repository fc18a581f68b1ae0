//! Cycle index of the regular cyclic group of degree `n`,
//! `I_n(x) = (1/n) Σ_{r|n} φ(r) x_r^{n/r}`, and the two ways of using it:
//! substituting polynomials in `z` for the variables, or rewriting it into a
//! formal [`SymPoly`].

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::sympoly::{Monomial, SymPoly, Var};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};
use crate::number_theory::{divisors, euler_phi};

/// The term `weight · x_var^exponent` of a cycle index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleTerm {
    pub var: u64,
    pub weight: u64,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleIndex {
    order: u64,
    terms: Vec<CycleTerm>,
}

pub fn cycle_index(n: u64) -> Result<CycleIndex> {
    let terms = divisors(n)?
        .into_iter()
        .map(|r| {
            Ok(CycleTerm {
                var: r,
                weight: euler_phi(r)?,
                exponent: n / r,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CycleIndex { order: n, terms })
}

/// Value assigned to a cycle-index variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    /// `x_r := q(z)`
    Value(UniPoly),
    /// `x_r^2 := q(z)`; only even powers of `x_r` can be resolved.
    SquareValue(UniPoly),
}

/// Which variable indices a clause of a [`SubstitutionRule`] covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    All,
    Even,
    Odd,
    Indices(Vec<u64>),
}

impl Selector {
    pub fn matches(&self, r: u64) -> bool {
        match self {
            Selector::All => true,
            Selector::Even => r.is_multiple_of(2),
            Selector::Odd => r % 2 == 1,
            Selector::Indices(list) => list.contains(&r),
        }
    }
}

type AssignFn = Arc<dyn Fn(u64) -> Target + Send + Sync>;

#[derive(Clone)]
struct Clause {
    selector: Selector,
    assign: AssignFn,
}

/// Per-index assignment of polynomials to the variables `x_r` (or `x_r^2`).
///
/// Built from clauses; every index met during substitution must be matched
/// by exactly one clause.
#[derive(Clone, Default)]
pub struct SubstitutionRule {
    clauses: Vec<Clause>,
}

impl fmt::Debug for SubstitutionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.clauses.iter().map(|c| &c.selector))
            .finish()
    }
}

impl SubstitutionRule {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn when<F>(mut self, selector: Selector, assign: F) -> Self
    where
        F: Fn(u64) -> Target + Send + Sync + 'static,
    {
        self.clauses.push(Clause {
            selector,
            assign: Arc::new(assign),
        });
        self
    }

    pub fn all<F>(self, assign: F) -> Self
    where
        F: Fn(u64) -> Target + Send + Sync + 'static,
    {
        self.when(Selector::All, assign)
    }

    pub fn even<F>(self, assign: F) -> Self
    where
        F: Fn(u64) -> Target + Send + Sync + 'static,
    {
        self.when(Selector::Even, assign)
    }

    pub fn odd<F>(self, assign: F) -> Self
    where
        F: Fn(u64) -> Target + Send + Sync + 'static,
    {
        self.when(Selector::Odd, assign)
    }

    /// Same constant for every variable.
    pub fn constant(c: i64) -> Self {
        Self::new().all(move |_| Target::Value(UniPoly::constant(c)))
    }

    pub fn target(&self, r: u64) -> Result<Target> {
        let mut hits = self.clauses.iter().filter(|c| c.selector.matches(r));
        let clause = hits.next().ok_or(Error::UncoveredIndex(r))?;
        if hits.next().is_some() {
            return Err(Error::AmbiguousIndex(r));
        }
        Ok((clause.assign)(r))
    }

    /// The value of `x_r^exponent` under this rule.
    pub fn power(&self, r: u64, exponent: u64) -> Result<UniPoly> {
        match self.target(r)? {
            Target::Value(q) => Ok(q.pow(exponent)),
            Target::SquareValue(q) => {
                if !exponent.is_multiple_of(2) {
                    return Err(Error::Parity { var: r, exponent });
                }
                Ok(q.pow(exponent / 2))
            }
        }
    }
}

/// Argument fed into a cycle-index variable by [`CycleIndex::to_sym`].
///
/// `Monomial { factors, denom }` stands for `Π v^(k/denom)`; raised to the
/// term exponent `e`, each factor gets exponent `e·k/denom`, which must be
/// an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Zero,
    Monomial {
        factors: Vec<(Var, u64)>,
        denom: u64,
    },
}

impl Arg {
    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    /// `v^k`
    pub fn power(v: Var, k: u64) -> Self {
        Arg::Monomial {
            factors: vec![(v, k)],
            denom: 1,
        }
    }

    /// `sqrt(v)`
    pub fn sqrt(v: Var) -> Self {
        Arg::Monomial {
            factors: vec![(v, 1)],
            denom: 2,
        }
    }

    /// `v_1 · v_2 · ...`
    pub fn product(vars: impl IntoIterator<Item = Var>) -> Self {
        Arg::Monomial {
            factors: vars.into_iter().map(|v| (v, 1)).collect(),
            denom: 1,
        }
    }
}

impl CycleIndex {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn terms(&self) -> &[CycleTerm] {
        &self.terms
    }

    /// `Σ φ(r) · value(r, n/r)`, the cycle index times its order.
    pub fn numerator<F>(&self, mut value: F) -> Result<UniPoly>
    where
        F: FnMut(u64, u64) -> Result<UniPoly>,
    {
        let mut acc = UniPoly::zero();
        for t in &self.terms {
            let v = value(t.var, t.exponent)?;
            acc = acc + v.scale(&BigInt::from(t.weight));
        }
        Ok(acc)
    }

    pub fn substitute(&self, rule: &SubstitutionRule) -> Result<UniPoly> {
        self.numerator(|r, e| rule.power(r, e))?
            .div_exact(self.order, &format!("cycle index of order {}", self.order))
    }

    /// The cycle index as a formal polynomial, with variable `x_r` replaced
    /// by `arg(r)`.
    pub fn to_sym<F>(&self, mut arg: F) -> Result<SymPoly>
    where
        F: FnMut(u64) -> Arg,
    {
        let mut out = SymPoly::zero();
        for t in &self.terms {
            let Arg::Monomial { factors, denom } = arg(t.var) else {
                continue;
            };
            let mut mono = Vec::with_capacity(factors.len());
            for (v, k) in factors {
                let scaled = t.exponent * k;
                if scaled % denom != 0 {
                    return Err(Error::Parity {
                        var: t.var,
                        exponent: scaled,
                    });
                }
                mono.push((v, scaled / denom));
            }
            let coeff = BigRational::new(BigInt::from(t.weight), BigInt::from(self.order));
            out = &out + &SymPoly::term(coeff, Monomial::from_factors(mono));
        }
        Ok(out)
    }

    /// `to_sym` with `x_r` kept as the variable `x_r` (or `y_r`).
    pub fn to_sym_plain(&self, family: super::sympoly::Family) -> SymPoly {
        self.to_sym(|r| Arg::var(Var { family, index: r }))
            .expect("identity rewriting has integral exponents")
    }
}

/// Free-function form of [`CycleIndex::substitute`].
pub fn substitute(ci: &CycleIndex, rule: &SubstitutionRule) -> Result<UniPoly> {
    ci.substitute(rule)
}

#[cfg(test)]
mod tests {
    use super::super::sympoly::Family;
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn terms(n: u64) -> Vec<(u64, u64, u64)> {
        cycle_index(n)
            .unwrap()
            .terms()
            .iter()
            .map(|t| (t.var, t.weight, t.exponent))
            .collect()
    }

    /// Binary necklaces of length n by merging rotation classes of bit strings.
    fn necklaces_brute_force(n: u32) -> u64 {
        let mask = (1u64 << n) - 1;
        let rotate = |w: u64| ((w << 1) | (w >> (n - 1))) & mask;
        (0..=mask)
            .filter(|&w| {
                let mut r = w;
                (0..n).all(|_| {
                    r = rotate(r);
                    r >= w
                })
            })
            .count() as u64
    }

    /// Burnside: average number of fixed strings over the rotations.
    fn necklaces_burnside(n: u64) -> BigInt {
        let total: BigInt = (0..n)
            .map(|shift| BigInt::from(2u32).pow(num_integer::gcd(shift, n) as u32))
            .sum();
        total / BigInt::from(n)
    }

    #[test]
    fn cycle_index_examples() {
        assert_eq!(terms(1), vec![(1, 1, 1)]);
        assert_eq!(terms(6), vec![(1, 1, 6), (2, 1, 3), (3, 2, 2), (6, 2, 1)]);
        let weights: Vec<u64> = terms(12).iter().map(|t| t.1).collect();
        assert_eq!(weights, vec![1, 1, 2, 2, 2, 4]);
        assert!(cycle_index(0).is_err());
    }

    #[test]
    fn weights_sum_to_order() {
        for n in 1..=500u64 {
            let ci = cycle_index(n).unwrap();
            assert_eq!(ci.terms().iter().map(|t| t.weight).sum::<u64>(), n);
            for t in ci.terms() {
                assert_eq!(t.var * t.exponent, n);
            }
        }
    }

    #[test]
    fn substitution_examples() {
        let four = cycle_index(4).unwrap();
        assert_eq!(
            four.substitute(&SubstitutionRule::constant(2)).unwrap(),
            UniPoly::constant(6)
        );
        let one = cycle_index(1).unwrap();
        let rule = SubstitutionRule::new().all(|r| Target::Value(UniPoly::one_plus(1, r as usize)));
        assert_eq!(one.substitute(&rule).unwrap(), UniPoly::from_i64s(&[1, 1]));
        for m in 1..=100 {
            let ci = cycle_index(m).unwrap();
            assert_eq!(
                ci.substitute(&SubstitutionRule::constant(1)).unwrap(),
                UniPoly::one()
            );
        }
    }

    #[test]
    fn necklace_counts() {
        for n in 1..=20u32 {
            let ci = cycle_index(n as u64).unwrap();
            let v = ci.substitute(&SubstitutionRule::constant(2)).unwrap();
            assert_eq!(v, UniPoly::constant(necklaces_brute_force(n)), "n = {n}");
        }
        for n in 1..=200u64 {
            let ci = cycle_index(n).unwrap();
            let v = ci.substitute(&SubstitutionRule::constant(2)).unwrap();
            assert_eq!(v, UniPoly::constant(necklaces_burnside(n)), "n = {n}");
        }
    }

    #[test]
    fn substitution_is_linear_in_constants() {
        let one = cycle_index(1).unwrap();
        for (a, b) in [(2, 3), (-1, 5), (0, 7)] {
            let sum = one.substitute(&SubstitutionRule::constant(a + b)).unwrap();
            let parts = one.substitute(&SubstitutionRule::constant(a)).unwrap()
                + one.substitute(&SubstitutionRule::constant(b)).unwrap();
            assert_eq!(sum, parts);
        }
    }

    #[test]
    fn rule_coverage_errors() {
        let ci = cycle_index(6).unwrap();
        let partial = SubstitutionRule::new().even(|_| Target::Value(UniPoly::one()));
        assert_eq!(ci.substitute(&partial), Err(Error::UncoveredIndex(1)));
        let overlapping = SubstitutionRule::constant(1).odd(|_| Target::Value(UniPoly::one()));
        assert_eq!(ci.substitute(&overlapping), Err(Error::AmbiguousIndex(1)));
        let explicit = SubstitutionRule::new()
            .when(Selector::Indices(vec![1, 2, 3]), |_| {
                Target::Value(UniPoly::one())
            })
            .when(Selector::Indices(vec![6]), |_| {
                Target::Value(UniPoly::constant(4))
            });
        // (1 + 1 + 2 + 2·4) / 6 = 2
        assert_eq!(ci.substitute(&explicit).unwrap(), UniPoly::constant(2));
    }

    #[test]
    fn square_values_need_even_exponents() {
        let ci = cycle_index(6).unwrap();
        let rule = SubstitutionRule::new().all(|_| Target::SquareValue(UniPoly::constant(4)));
        // x_3^2 resolves, x_1^6 resolves, x_2^3 does not.
        assert!(matches!(
            ci.substitute(&rule),
            Err(Error::Parity {
                var: 2,
                exponent: 3
            })
        ));
    }

    #[test]
    fn inexact_division_is_reported() {
        let ci = cycle_index(3).unwrap();
        let rule = SubstitutionRule::new()
            .when(
                Selector::Indices(vec![1]),
                |_| Target::Value(UniPoly::one()),
            )
            .when(Selector::Indices(vec![3]), |_| {
                Target::Value(UniPoly::zero())
            });
        assert!(matches!(
            ci.substitute(&rule),
            Err(Error::InexactDivision { divisor: 3, .. })
        ));
    }

    #[test]
    fn to_sym_examples() {
        let two = cycle_index(2).unwrap();
        let plain = two.to_sym_plain(Family::X);
        let expected = &SymPoly::term(q(1, 2), Monomial::from_factors([(Var::x(1), 2)]))
            + &SymPoly::term(q(1, 2), Monomial::var(Var::x(2)));
        assert_eq!(plain, expected);

        let squared = two.to_sym(|r| Arg::power(Var::x(r), 2)).unwrap();
        let expected = &SymPoly::term(q(1, 2), Monomial::from_factors([(Var::x(1), 4)]))
            + &SymPoly::term(q(1, 2), Monomial::from_factors([(Var::x(2), 2)]));
        assert_eq!(squared, expected);

        let shifted = cycle_index(3)
            .unwrap()
            .to_sym(|r| Arg::var(Var::x(4 * r)))
            .unwrap();
        let expected = &SymPoly::term(q(1, 3), Monomial::from_factors([(Var::x(4), 3)]))
            + &SymPoly::term(q(2, 3), Monomial::var(Var::x(12)));
        assert_eq!(shifted, expected);
    }

    #[test]
    fn to_sym_rejects_fractional_exponents() {
        let six = cycle_index(6).unwrap();
        assert!(matches!(
            six.to_sym(|r| Arg::sqrt(Var::x(r))),
            Err(Error::Parity { .. })
        ));
        // Square roots of odd-indexed variables only: exponents 6 and 2 halve cleanly.
        let ok = six.to_sym(|r| {
            if r % 2 == 1 {
                Arg::sqrt(Var::x(r))
            } else {
                Arg::Zero
            }
        });
        assert!(ok.is_ok());
    }
}
