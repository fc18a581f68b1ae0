use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{count, prime_enumerator, prime_squared_enumerator, CirculantClass, CountResult};
use crate::algebra::{EvalPoint, UniPoly};
use crate::error::{Error, Result};

use CirculantClass::*;

fn valency_series(order: u64, class: CirculantClass) -> Result<UniPoly> {
    match class {
        Directed | Undirected | Oriented => Ok(count(order, class)?.series()?.clone()),
        _ => Err(Error::domain(format!(
            "class {class} has no valency series"
        ))),
    }
}

/// `c(n, -1)` for d and o; `c(n, sqrt(-1))` for u, which requires odd `n`.
pub fn alternating_sum(order: u64, class: CirculantClass) -> Result<BigInt> {
    let series = valency_series(order, class)?;
    match class {
        Undirected if order.is_multiple_of(2) => Err(Error::unsupported(
            order,
            class,
            "the undirected alternating sum is defined for odd orders only",
        )),
        Undirected => series.eval_at(EvalPoint::GaussianUnit),
        _ => series.eval_at(EvalPoint::Integer(-1)),
    }
}

/// Counts of even and odd valency (d), or of even and odd semi-valency,
/// i.e. valency 0 or 2 mod 4 (u, odd orders only).
pub fn even_odd_split(order: u64, class: CirculantClass) -> Result<(BigInt, BigInt)> {
    let (period, odd_residue) = match class {
        Directed => (2, 1),
        Undirected if order % 2 == 1 => (4, 2),
        Undirected => {
            return Err(Error::unsupported(
                order,
                class,
                "semi-valency splits are defined for odd orders only",
            ))
        }
        _ => return Err(Error::domain(format!("no parity split for class {class}"))),
    };
    let series = valency_series(order, class)?;
    let mut even = BigInt::from(0);
    let mut odd = BigInt::from(0);
    for (r, c) in series.coeffs().iter().enumerate() {
        match r % period {
            0 => even += c,
            x if x == odd_residue => odd += c,
            _ => {}
        }
    }
    Ok((even, odd))
}

/// The three equivalent expressions for the mixed self-complementary count
/// at order `p^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedForms {
    /// `C_sd(p^2) - C_su(p^2) - C_t(p^2)`
    pub subtraction: BigInt,
    /// `2 C_su(p) C_t(p)`
    pub product: BigInt,
    /// `C_sd(p)^2 - C_su(p)^2 - C_t(p)^2`
    pub squares: BigInt,
}

pub fn mixed_sd_forms(p: u64) -> Result<MixedForms> {
    let big = |c| prime_squared_enumerator(p, c).map(|r| r.total);
    let small = |c| prime_enumerator(p, c).map(|r| r.total);
    let (sd2, su2, t2) = (
        big(SelfComplementaryDirected)?,
        big(SelfComplementaryUndirected)?,
        big(Tournament)?,
    );
    let (sd, su, t) = (
        small(SelfComplementaryDirected)?,
        small(SelfComplementaryUndirected)?,
        small(Tournament)?,
    );
    Ok(MixedForms {
        subtraction: sd2 - su2 - t2,
        product: BigInt::from(2) * &su * &t,
        squares: &sd * &sd - &su * &su - &t * &t,
    })
}

/// Mixed self-complementary circulants of order `p^2`: self-complementary
/// digraphs that are neither undirected nor tournaments.
pub fn mixed_sd(p: u64) -> Result<BigInt> {
    let forms = mixed_sd_forms(p)?;
    if forms.subtraction != forms.product || forms.subtraction != forms.squares {
        return Err(Error::Consistency(format!(
            "mixed count at p = {p}: subtraction {}, product {}, squares {}",
            forms.subtraction, forms.product, forms.squares
        )));
    }
    Ok(forms.subtraction)
}

/// Non-CI circulants of order `p^2` per class: `D_i(p^2) = C_i(p)^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonCiCounts {
    #[serde(with = "crate::decimal")]
    pub sd: BigInt,
    #[serde(with = "crate::decimal")]
    pub su: BigInt,
    #[serde(with = "crate::decimal")]
    pub t: BigInt,
}

pub fn non_ci_counts(p: u64) -> Result<NonCiCounts> {
    let sq = |c| prime_enumerator(p, c).map(|r| &r.total * &r.total);
    Ok(NonCiCounts {
        sd: sq(SelfComplementaryDirected)?,
        su: sq(SelfComplementaryUndirected)?,
        t: sq(Tournament)?,
    })
}

/// An interior index where `a_r^2 < a_(r-1) a_(r+1)` for the sequence
/// `a_r = C_u(n, 2r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub r: usize,
    #[serde(with = "crate::decimal")]
    pub square: BigInt,
    #[serde(with = "crate::decimal")]
    pub product: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogConcavityReport {
    pub order: u64,
    pub violations: Vec<Violation>,
}

impl LogConcavityReport {
    pub fn is_log_concave(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `a_r^2 >= a_(r-1) a_(r+1)` where `a_r` is the number of undirected
/// circulants of order `n` and valency `2r`.
///
/// With `m = (n-1)/2` the sequence `a_0..a_m` is palindromic and the ends
/// `r = 1` and `r = m-1` fail trivially, so only `2 <= r <= m-2` is checked.
pub fn log_concavity_of(order: u64, undirected: &UniPoly) -> LogConcavityReport {
    let top = (order.saturating_sub(1) / 2) as usize;
    let a = |r: usize| undirected.coeff(2 * r);
    let violations = (2..top.saturating_sub(1))
        .filter_map(|r| {
            let square = a(r) * a(r);
            let product = a(r - 1) * a(r + 1);
            (square < product).then_some(Violation { r, square, product })
        })
        .collect();
    LogConcavityReport { order, violations }
}

pub fn log_concavity_probe(order: u64) -> Result<LogConcavityReport> {
    let result: CountResult = count(order, Undirected)?;
    Ok(log_concavity_of(order, result.series()?))
}
