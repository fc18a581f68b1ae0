//! Brute-force counting of circulants up to isomorphism.
//!
//! Every connection set of the requested class is generated, sets related by
//! a multiplier `S -> mS` are merged (such a map is an isomorphism), and the
//! remaining representatives are grouped by a canonical labeling of the
//! digraph. Nothing here uses the counting formulas.

mod canon;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::UniPoly;
use crate::enumerators::{CirculantClass, CountResult, Provenance};
use crate::error::{Error, Result};

use canon::{bits, canonical_form_with, full_mask};
pub use canon::{CanonicalForm, Digraph};

use CirculantClass::*;

/// Largest order the oracle accepts without `allow_slow`.
pub const DEFAULT_MAX_ORDER: u64 = 16;
/// Largest order accepted with `allow_slow`.
pub const SLOW_MAX_ORDER: u64 = 32;
/// Cap on generated connection sets with `allow_slow`.
pub const SLOW_CANDIDATE_LIMIT: u128 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_order: u64,
    pub candidate_limit: u128,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_order: DEFAULT_MAX_ORDER,
            candidate_limit: 1 << 15,
        }
    }
}

impl OracleLimits {
    pub fn slow() -> Self {
        OracleLimits {
            max_order: SLOW_MAX_ORDER,
            candidate_limit: SLOW_CANDIDATE_LIMIT,
        }
    }

    pub fn with_slow(allow_slow: bool) -> Self {
        if allow_slow {
            Self::slow()
        } else {
            Self::default()
        }
    }
}

/// A subset of `Z_n \ {0}`, stored as a bitmask with bit `s` for member `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionSet {
    order: u64,
    mask: u64,
}

impl ConnectionSet {
    pub fn new(order: u64, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        if order == 0 || order > 64 {
            return Err(Error::domain(format!("order {order} outside 1..=64")));
        }
        let mut mask = 0u64;
        for s in members {
            if s == 0 || s >= order {
                return Err(Error::domain(format!(
                    "{s} is not a nonzero residue mod {order}"
                )));
            }
            mask |= 1 << s;
        }
        Ok(ConnectionSet { order, mask })
    }

    pub(crate) fn from_mask(order: u64, mask: u64) -> Self {
        debug_assert_eq!(mask & 1, 0);
        debug_assert_eq!(mask & !full_mask(order as usize), 0);
        ConnectionSet { order, mask }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn members(&self) -> Vec<u64> {
        bits(self.mask).map(|s| s as u64).collect()
    }

    pub fn valency(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn contains(&self, s: u64) -> bool {
        s < self.order && self.mask >> s & 1 == 1
    }

    /// `-S`
    pub fn negate(&self) -> Self {
        let n = self.order;
        let mask = bits(self.mask).fold(0, |m, s| m | 1 << ((n - s as u64) % n));
        Self::from_mask(n, mask)
    }

    /// `mS`; an isomorphism of circulants when `m` is a unit.
    pub fn multiply(&self, m: u64) -> Self {
        let n = self.order;
        let mask = bits(self.mask).fold(0, |acc, s| acc | 1 << ((s as u64 * m) % n));
        Self::from_mask(n, mask)
    }

    /// `(Z_n \ {0}) \ S`
    pub fn complement(&self) -> Self {
        Self::from_mask(self.order, full_mask(self.order as usize) & !1 & !self.mask)
    }

    pub fn is_undirected(&self) -> bool {
        self.negate() == *self
    }

    pub fn is_oriented(&self) -> bool {
        self.negate().mask & self.mask == 0
    }

    pub fn is_tournament(&self) -> bool {
        self.order % 2 == 1 && self.is_oriented() && self.valency() as u64 == (self.order - 1) / 2
    }

    pub fn digraph(&self) -> Digraph {
        let n = self.order as usize;
        Digraph::from_arcs(
            n,
            (0..n).flat_map(|u| bits(self.mask).map(move |s| (u, (u + s) % n))),
        )
    }

    /// Automorphisms that are visible without search: the rotation and the
    /// multipliers fixing `S`.
    fn obvious_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut out = Vec::new();
        if n > 1 {
            out.push((0..n).map(|i| ((i + 1) % n) as usize).collect());
        }
        for m in units(n).into_iter().skip(1) {
            if self.multiply(m) == *self {
                out.push((0..n).map(|i| (i * m % n) as usize).collect());
            }
        }
        out
    }

    /// Sort key for the lexicographic order on member lists.
    fn lex_key(&self) -> Vec<u64> {
        self.members()
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members().iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

/// Canonical form of the circulant digraph `Cay(Z_n, S)`.
pub fn canonical_form(s: &ConnectionSet) -> CanonicalForm {
    canonical_form_with(&s.digraph(), &s.obvious_automorphisms())
}

fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|m| m.gcd(&n) == 1).collect()
}

/// Orbit of `S` under the multiplier group, sorted and deduplicated.
fn multiplier_orbit(s: &ConnectionSet, units: &[u64]) -> Vec<ConnectionSet> {
    let mut orbit: Vec<ConnectionSet> = units.iter().map(|&m| s.multiply(m)).collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

fn candidate_count(n: u64, class: CirculantClass) -> u128 {
    let pairs = ((n - 1) / 2) as u32;
    let involution = u32::from(n.is_multiple_of(2));
    let odd = n % 2 == 1;
    match class {
        Directed => 1u128 << (n - 1),
        Undirected => 1u128 << (pairs + involution),
        Oriented => 3u128.pow(pairs),
        Tournament if odd => 1u128 << pairs,
        SelfComplementaryDirected if odd => binomial(n - 1, pairs as u64),
        SelfComplementaryUndirected if odd && pairs.is_multiple_of(2) => {
            binomial(pairs as u64, pairs as u64 / 2)
        }
        _ => 0,
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Every connection set of order `n` that can belong to `class`. For sd and
/// su this is the sets of the right size; self-complementarity is decided
/// later by canonical forms.
fn candidates(n: u64, class: CirculantClass) -> Vec<ConnectionSet> {
    let pair_reps: Vec<u64> = (1..n).filter(|&s| s < n - s).collect();
    let pair_mask = |s: u64| (1u64 << s) | (1u64 << (n - s));
    let half = (n - 1) / 2;
    let odd = n % 2 == 1;
    let subsets_of = |items: &[u64]| -> Vec<u64> {
        (0..1u64 << items.len())
            .map(|choice| bits(choice).fold(0u64, |m, i| m | items[i]))
            .collect()
    };
    let masks: Vec<u64> = match class {
        Directed => (0..1u64 << (n - 1)).map(|m| m << 1).collect(),
        Undirected => {
            let mut items: Vec<u64> = pair_reps.iter().map(|&s| pair_mask(s)).collect();
            if !odd && n > 1 {
                items.push(1 << (n / 2));
            }
            subsets_of(&items)
        }
        Oriented => {
            let mut out = vec![0u64];
            for &s in &pair_reps {
                out = out
                    .into_iter()
                    .flat_map(|m| [m, m | 1 << s, m | 1 << (n - s)])
                    .collect();
            }
            out
        }
        Tournament if odd => (0..1u64 << pair_reps.len())
            .map(|choice| {
                pair_reps.iter().enumerate().fold(0, |m, (i, &s)| {
                    m | if choice >> i & 1 == 1 {
                        1 << s
                    } else {
                        1 << (n - s)
                    }
                })
            })
            .collect(),
        SelfComplementaryDirected if odd => (0..1u64 << (n - 1))
            .filter(|m| m.count_ones() as u64 == half)
            .map(|m| m << 1)
            .collect(),
        SelfComplementaryUndirected if odd => {
            let items: Vec<u64> = pair_reps.iter().map(|&s| pair_mask(s)).collect();
            subsets_of(&items)
                .into_iter()
                .filter(|m| m.count_ones() as u64 == half)
                .collect()
        }
        _ => Vec::new(),
    };
    masks
        .into_iter()
        .map(|m| ConnectionSet::from_mask(n, m))
        .collect()
}

fn check_range(n: u64, class: CirculantClass, limits: &OracleLimits) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("order must be positive"));
    }
    if n > limits.max_order {
        return Err(Error::OracleRange {
            order: n,
            max: limits.max_order,
        });
    }
    let candidates = candidate_count(n, class);
    if candidates > limits.candidate_limit {
        return Err(Error::Resource {
            order: n,
            candidates,
            limit: limits.candidate_limit,
        });
    }
    Ok(())
}

/// One multiplier orbit of eligible connection sets.
#[derive(Clone, Debug)]
struct Orbit {
    /// Numerically least mask in the orbit.
    rep: ConnectionSet,
    lex_min: ConnectionSet,
    size: u64,
}

fn orbits(n: u64, class: CirculantClass) -> Vec<Orbit> {
    let units = units(n);
    candidates(n, class)
        .into_par_iter()
        .filter_map(|s| {
            let orbit = multiplier_orbit(&s, &units);
            (orbit[0] == s).then(|| Orbit {
                rep: s,
                lex_min: *orbit
                    .iter()
                    .min_by_key(|o| o.lex_key())
                    .expect("orbit is nonempty"),
                size: orbit.len() as u64,
            })
        })
        .collect()
}

/// An isomorphism class of circulants found by the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    pub valency: u32,
    /// Lexicographically least connection set in the class.
    pub representative: ConnectionSet,
    /// Number of connection sets in the class.
    pub size: u64,
    /// Number of multiplier orbits the class splits into.
    pub multiplier_orbits: u64,
}

/// All isomorphism classes of `class` circulants of order `n`, sorted by
/// valency and then representative.
pub fn iso_classes(n: u64, class: CirculantClass, limits: &OracleLimits) -> Result<Vec<IsoClass>> {
    check_range(n, class, limits)?;
    let orbits = orbits(n, class);
    let self_complementary = matches!(
        class,
        SelfComplementaryDirected | SelfComplementaryUndirected
    );
    let labelled: Vec<(CanonicalForm, Orbit)> = orbits
        .into_par_iter()
        .filter_map(|o| {
            let form = canonical_form(&o.rep);
            if self_complementary && canonical_form(&o.rep.complement()) != form {
                return None;
            }
            Some((form, o))
        })
        .collect();
    let mut grouped: BTreeMap<CanonicalForm, IsoClass> = BTreeMap::new();
    for (form, o) in labelled {
        let entry = grouped.entry(form).or_insert(IsoClass {
            valency: o.rep.valency(),
            representative: o.lex_min,
            size: 0,
            multiplier_orbits: 0,
        });
        debug_assert_eq!(
            entry.valency,
            o.rep.valency(),
            "valency is an isomorphism invariant"
        );
        entry.size += o.size;
        entry.multiplier_orbits += 1;
        if o.lex_min.lex_key() < entry.representative.lex_key() {
            entry.representative = o.lex_min;
        }
    }
    let mut out: Vec<IsoClass> = grouped.into_values().collect();
    out.sort_by(|a, b| {
        (a.valency, a.representative.lex_key()).cmp(&(b.valency, b.representative.lex_key()))
    });
    Ok(out)
}

/// Counts `class` circulants of order `n` up to isomorphism.
pub fn enumerate(n: u64, class: CirculantClass, limits: &OracleLimits) -> Result<CountResult> {
    let classes = iso_classes(n, class, limits)?;
    let mut by_valency = vec![0i64; n as usize];
    for c in &classes {
        by_valency[c.valency as usize] += 1;
    }
    let series = UniPoly::new(by_valency.into_iter().map(BigInt::from).collect());
    let mut result = CountResult::from_series(n, class, series, Provenance::Oracle);
    result.total = BigInt::from(classes.len());
    Ok(result)
}

/// Number of multiplier orbits of eligible connection sets. For sd and su
/// eligibility needs canonical forms, so the oracle range applies.
pub fn cayley_classes(n: u64, class: CirculantClass, limits: &OracleLimits) -> Result<u64> {
    match class {
        SelfComplementaryDirected | SelfComplementaryUndirected => {
            Ok(iso_classes(n, class, limits)?
                .iter()
                .map(|c| c.multiplier_orbits)
                .sum())
        }
        _ => {
            let wide = OracleLimits {
                max_order: limits.max_order.max(40),
                ..*limits
            };
            check_range(n, class, &wide)?;
            Ok(orbits(n, class).len() as u64)
        }
    }
}

/// Circulants that are isomorphic to some circulant without being Cayley
/// isomorphic to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonCiCount {
    /// Isomorphism classes made of two or more multiplier orbits.
    pub classes: u64,
    /// Connection sets lying in such classes.
    pub sets: u64,
}

pub fn non_ci_count(n: u64, class: CirculantClass, limits: &OracleLimits) -> Result<NonCiCount> {
    let split: Vec<IsoClass> = iso_classes(n, class, limits)?
        .into_iter()
        .filter(|c| c.multiplier_orbits > 1)
        .collect();
    Ok(NonCiCount {
        classes: split.len() as u64,
        sets: split.iter().map(|c| c.size).sum(),
    })
}

/// Self-complementary circulants split by shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfComplementarySplit {
    pub undirected: u64,
    pub tournament: u64,
    pub mixed: u64,
}

impl SelfComplementarySplit {
    pub fn total(&self) -> u64 {
        self.undirected + self.tournament + self.mixed
    }
}

pub fn classify_self_complementary(
    n: u64,
    limits: &OracleLimits,
) -> Result<SelfComplementarySplit> {
    if n.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "self-complementary circulants need odd order, got {n}"
        )));
    }
    let mut split = SelfComplementarySplit {
        undirected: 0,
        tournament: 0,
        mixed: 0,
    };
    for c in iso_classes(n, SelfComplementaryDirected, limits)? {
        let s = c.representative;
        if s.is_undirected() {
            split.undirected += 1;
        } else if s.is_tournament() {
            split.tournament += 1;
        } else {
            split.mixed += 1;
        }
    }
    Ok(split)
}

/// One line per isomorphism class: `n;valency;lex-min connection set;class size`.
pub fn representative_lines(
    n: u64,
    class: CirculantClass,
    limits: &OracleLimits,
) -> Result<Vec<String>> {
    Ok(iso_classes(n, class, limits)?
        .iter()
        .map(|c| format!("{n};{};{};{}", c.valency, c.representative, c.size))
        .collect())
}
