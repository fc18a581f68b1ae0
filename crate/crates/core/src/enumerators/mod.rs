//! Closed-form counts of circulant graphs of prime, twice-prime and
//! prime-squared order, together with the quantities derived from them
//! (alternating sums, parity splits, mixed and non-CI self-complementary
//! counts, log-concavity).

mod derived;
mod formulas;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::algebra::UniPoly;
use crate::error::{Error, Result};
use crate::number_theory::{is_prime_u64, prime_power};

pub use derived::{
    alternating_sum, even_odd_split, log_concavity_of, log_concavity_probe, mixed_sd,
    mixed_sd_forms, non_ci_counts, LogConcavityReport, MixedForms, NonCiCounts, Violation,
};
pub use formulas::{
    formal_undirected, prime_enumerator, prime_squared_enumerator, twice_prime_enumerator,
};

/// The six kinds of circulants that are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CirculantClass {
    #[serde(rename = "d")]
    Directed,
    #[serde(rename = "u")]
    Undirected,
    #[serde(rename = "o")]
    Oriented,
    #[serde(rename = "sd")]
    SelfComplementaryDirected,
    #[serde(rename = "su")]
    SelfComplementaryUndirected,
    #[serde(rename = "t")]
    Tournament,
}

impl CirculantClass {
    pub const ALL: [CirculantClass; 6] = [
        CirculantClass::Directed,
        CirculantClass::Undirected,
        CirculantClass::Oriented,
        CirculantClass::SelfComplementaryDirected,
        CirculantClass::SelfComplementaryUndirected,
        CirculantClass::Tournament,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CirculantClass::Directed => "d",
            CirculantClass::Undirected => "u",
            CirculantClass::Oriented => "o",
            CirculantClass::SelfComplementaryDirected => "sd",
            CirculantClass::SelfComplementaryUndirected => "su",
            CirculantClass::Tournament => "t",
        }
    }

    /// d, u and o are counted by valency; sd, su and t only as totals.
    pub fn has_valency_series(self) -> bool {
        matches!(
            self,
            CirculantClass::Directed | CirculantClass::Undirected | CirculantClass::Oriented
        )
    }
}

impl fmt::Display for CirculantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CirculantClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CirculantClass::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| format!("unknown class {s:?} (expected d, u, o, sd, su or t)"))
    }
}

/// Where a number came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A counting formula applied within its range of validity.
    Formula,
    /// A counting formula applied outside it; not a graph count.
    Formal,
    /// Brute-force enumeration up to isomorphism.
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Formula => "formula",
            Provenance::Formal => "formal",
            Provenance::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult {
    pub order: u64,
    pub class: CirculantClass,
    #[serde(with = "crate::decimal")]
    pub total: BigInt,
    pub by_valency: Option<UniPoly>,
    pub provenance: Provenance,
}

impl CountResult {
    pub(crate) fn from_series(
        order: u64,
        class: CirculantClass,
        series: UniPoly,
        provenance: Provenance,
    ) -> Self {
        if class.has_valency_series() {
            CountResult {
                order,
                class,
                total: series.total(),
                by_valency: Some(series),
                provenance,
            }
        } else {
            CountResult {
                order,
                class,
                total: series.total(),
                by_valency: None,
                provenance,
            }
        }
    }

    /// Number of circulants of valency `r`; `None` for classes without a
    /// valency series.
    pub fn at_valency(&self, r: usize) -> Option<BigInt> {
        self.by_valency.as_ref().map(|p| p.coeff(r))
    }

    pub fn series(&self) -> Result<&UniPoly> {
        self.by_valency
            .as_ref()
            .ok_or_else(|| Error::domain(format!("class {} has no valency series", self.class)))
    }

    /// The total agrees with the series and nothing is negative.
    pub fn check_invariants(&self) -> Result<()> {
        if self.total.is_negative() {
            return Err(Error::Consistency(format!("negative total {}", self.total)));
        }
        if let Some(p) = &self.by_valency {
            if p.has_negative_coeff() {
                return Err(Error::Consistency("negative coefficient".into()));
            }
            if p.total() != self.total {
                return Err(Error::Consistency(format!(
                    "series sums to {} but total is {}",
                    p.total(),
                    self.total
                )));
            }
        }
        Ok(())
    }
}

/// The shape of an order as far as the counting formulas are concerned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// `n = p`; includes `p = 2`, where only some classes have a formula.
    Prime(u64),
    /// `n = 2p`, `p` an odd prime.
    TwicePrime(u64),
    /// `n = p^2`, `p` an odd prime.
    PrimeSquared(u64),
    Other,
}

pub fn classify_order(n: u64) -> OrderKind {
    if is_prime_u64(n) {
        return OrderKind::Prime(n);
    }
    if n.is_multiple_of(2) && n > 2 && is_prime_u64(n / 2) && n / 2 > 2 {
        return OrderKind::TwicePrime(n / 2);
    }
    match prime_power(n) {
        Some((p, 2)) if p > 2 => OrderKind::PrimeSquared(p),
        _ => OrderKind::Other,
    }
}

/// Count via whichever formula covers `order`, or fail with
/// [`Error::UnsupportedOrder`].
pub fn count(order: u64, class: CirculantClass) -> Result<CountResult> {
    match classify_order(order) {
        OrderKind::Prime(p) => prime_enumerator(p, class),
        OrderKind::TwicePrime(p) => twice_prime_enumerator(p, class),
        OrderKind::PrimeSquared(p) => prime_squared_enumerator(p, class),
        OrderKind::Other => Err(Error::unsupported(
            order,
            class,
            "not a prime, twice a prime or the square of an odd prime",
        )),
    }
}

/// Whether [`count`] has a formula for this order and class.
pub fn formula_supported(order: u64, class: CirculantClass) -> bool {
    match classify_order(order) {
        OrderKind::Prime(2) => matches!(
            class,
            CirculantClass::Directed | CirculantClass::SelfComplementaryDirected
        ),
        OrderKind::Prime(_) | OrderKind::PrimeSquared(_) => true,
        OrderKind::TwicePrime(_) => class.has_valency_series(),
        OrderKind::Other => false,
    }
}
