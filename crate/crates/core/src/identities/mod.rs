//! Registry of identities between circulant counts, each with an
//! applicability predicate and an exact checker, plus symbolic checks of the
//! cycle-index lemmas they rest on.

mod checks;
mod lemmas;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerators::Provenance;
use crate::error::Result;
use crate::number_theory::{factorize, is_prime_u64, prime_power};

pub use lemmas::check_lemma;

macro_rules! identity_keys {
    ($($variant:ident => $id:literal),* $(,)?) => {
        /// An identity id such as `"4.6"` or `"L2.1"`.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(into = "String", try_from = "String")]
        pub enum IdentityKey {
            $($variant),*
        }

        impl IdentityKey {
            pub const ALL: &'static [IdentityKey] = &[$(IdentityKey::$variant),*];

            pub fn id(self) -> &'static str {
                match self {
                    $(IdentityKey::$variant => $id),*
                }
            }
        }
    };
}

identity_keys! {
    E3_1 => "3.1", E3_1p => "3.1'", E3_2 => "3.2", E3_3 => "3.3", E3_3p => "3.3'",
    E3_4 => "3.4", E3_5 => "3.5", E3_6 => "3.6", E3_7 => "3.7", E3_8 => "3.8",
    E4_1 => "4.1", E4_1p => "4.1'", E4_1pp => "4.1''", E4_2 => "4.2", E4_3 => "4.3",
    E4_3p => "4.3'", E4_4 => "4.4", E4_5 => "4.5", E4_6 => "4.6", E4_6p => "4.6'",
    E4_7 => "4.7", E4_7p => "4.7'",
    E5_2 => "5.2", E5_3 => "5.3", E5_4 => "5.4", E5_5 => "5.5", E5_6 => "5.6",
    E6_1 => "6.1", E6_2 => "6.2", E6_3 => "6.3", E6_4 => "6.4", E6_5 => "6.5",
    E6_6 => "6.6", E6_7 => "6.7",
    L2_1 => "L2.1", L2_4 => "L2.4", L2_6 => "L2.6", L2_7 => "L2.7",
}

use IdentityKey::*;

impl IdentityKey {
    pub fn is_lemma(self) -> bool {
        matches!(self, L2_1 | L2_4 | L2_6 | L2_7)
    }

    /// Identities between counts, i.e. everything except the lemmas.
    pub fn counting() -> impl Iterator<Item = IdentityKey> {
        Self::ALL.iter().copied().filter(|k| !k.is_lemma())
    }

    pub fn lemmas() -> impl Iterator<Item = IdentityKey> {
        Self::ALL.iter().copied().filter(|k| k.is_lemma())
    }

    /// Whether `check_valency` can single out one coefficient.
    pub fn is_polynomial(self) -> bool {
        matches!(
            self,
            E3_1 | E3_3 | E3_8 | E4_3 | E4_3p | E4_5 | E4_7 | E4_7p
        )
    }

    pub fn info(self) -> IdentityInfo {
        let (table_no, formula, orders, restrictions, types) = match self {
            E3_1 => (Some(17), "c_u(p,z) = c_d(q,z^2)", "p,q", "p+1=2q", "u, d"),
            E3_1p => (Some(11), "C_u(p) = C_d(q)", "p,q", "p+1=2q", "u, d"),
            E3_2 => (Some(10), "C_su(p) = C_sd(q)", "p,q", "p+1=2q", "su, sd"),
            E3_3 => (
                Some(18),
                "2c_o(p,z) = c_o(p+1,z) + 1",
                "p,p+1",
                "p+1=2q, p>3",
                "o",
            ),
            E3_3p => (
                Some(12),
                "2C_o(p) = C_o(p+1) + 1",
                "p,p+1",
                "p+1=2q, p>3",
                "o",
            ),
            E3_4 => (
                Some(1),
                "C_su(n) = 0",
                "n",
                "some prime p|n, p=3 (mod 4)",
                "su",
            ),
            E3_5 => (
                Some(2),
                "C_sd(n) = C_t(n)",
                "p or p^2",
                "p=3 (mod 4)",
                "t, sd",
            ),
            E3_6 => (
                Some(9),
                "C_su(p) = C_t(q)",
                "p,q",
                "p+1=2q, p=5 (mod 8)",
                "su, t",
            ),
            E3_7 => (Some(3), "C_sd(p) = C_t(p) + C_su(p)", "p", "-", "su, t, sd"),
            E3_8 => (Some(23), "C_u(2p,2r+1) = C_u(2p,2r)", "2p", "p odd", "u"),
            E4_1 => (
                Some(4),
                "2C_sd(p) = C_u(p) + C_su(p)",
                "p",
                "-",
                "u, su, sd",
            ),
            E4_1p => (
                Some(5),
                "C_u(p) = 2C_sd(p) = 2C_t(p)",
                "p",
                "p=3 (mod 4)",
                "u, sd",
            ),
            E4_1pp => (
                Some(6),
                "C_u(p) = C_sd(p) + C_t(p) = C_su(p) + 2C_t(p)",
                "p",
                "-",
                "u, su, t",
            ),
            E4_2 => (
                Some(13),
                "4C_u(p) = C_u(p+1) + 2C'_u(2p~+1)",
                "p,p+1",
                "p+1=2q, q odd",
                "u",
            ),
            E4_3 => (
                Some(19),
                "2c_u(p,z) = c_u(p+1,z)/(1+z) + c'_u(2p~+1,z^(2^k))",
                "p,p+1",
                "p+1=2q, q odd",
                "u",
            ),
            E4_3p => (
                Some(20),
                "2C_u(p,4r+2) = C_u(p+1,4r+2)",
                "p,p+1",
                "p+1=2q, q odd",
                "u",
            ),
            E4_4 => (
                Some(14),
                "4C_d(p) = C_d(p+1) + 2C'_u(2p~+1)",
                "p,p+1",
                "p+1=2q, q odd",
                "u, d",
            ),
            E4_5 => (
                Some(21),
                "2c_d(p,z) = c_d(p+1,z)/(1+z) + c'_u(2p~+1,z^(2^k))",
                "p,p+1",
                "p+1=2q, q odd",
                "u, d",
            ),
            E4_6 => (
                Some(15),
                "4C_d(p) - C_d(p+1) = 4C_u(p) - C_u(p+1)",
                "p,p+1",
                "p+1=2q, q odd",
                "u, d",
            ),
            E4_6p => (
                Some(16),
                "4C_d\\u(p) = C_d\\u(p+1)",
                "p,p+1",
                "p+1=2q, q odd",
                "d\\u",
            ),
            E4_7 => (
                Some(22),
                "2(1+z)c_d\\u(p,z) = c_d\\u(p+1,z)",
                "p,p+1",
                "p+1=2q, q odd",
                "d\\u",
            ),
            E4_7p => (
                None,
                "2(C_d\\u(p,r) + C_d\\u(p,r-1)) = C_d\\u(p+1,r)",
                "p,p+1",
                "p+1=2q, q odd",
                "d\\u",
            ),
            E5_2 => (
                Some(28),
                "D_i(p^2) = C_i(p)^2, i in {sd,su,t}",
                "p,p^2",
                "-",
                "su, t, sd",
            ),
            E5_3 => (
                Some(29),
                "C_sd^mixed(p^2) = 2C_su(p)C_t(p)",
                "p,p^2",
                "-",
                "su, t, sd",
            ),
            E5_4 => (
                Some(30),
                "C_sd^mixed(p^2) = D_sd(p^2) - D_su(p^2) - D_t(p^2)",
                "p^2",
                "-",
                "su, t, sd",
            ),
            E5_5 => (
                Some(7),
                "C_sd(p^2) - C_su(p^2) - C_t(p^2) = C_sd(p)^2 - C_su(p)^2 - C_t(p)^2",
                "p,p^2",
                "-",
                "su, t, sd",
            ),
            E5_6 => (
                Some(8),
                "C_sd(p^2) = C_su(p^2) + C_t(p^2) + 2C_su(p)C_t(p)",
                "p,p^2",
                "-",
                "su, t, sd",
            ),
            E6_1 => (
                Some(24),
                "c_d(n,-1) = C_sd(n)",
                "n",
                "p^2 or square-free",
                "d, sd",
            ),
            E6_2 => (
                Some(25),
                "c_u(n,i) = C_su(n)",
                "n",
                "odd; p^2 or square-free",
                "u, su",
            ),
            E6_3 => (
                Some(26),
                "c_o(n,-1) = 0 or 1",
                "n",
                "p^2 or square-free; 2n', 4n'",
                "o",
            ),
            E6_4 => (
                Some(27),
                "2c_d(p,-1) = c_u(p,1) + c_u(p,i)",
                "p",
                "-",
                "u, d",
            ),
            E6_5 => (
                None,
                "C_d^e(n), C_d^o(n) = (C_d(n) +- C_sd(n))/2",
                "n",
                "p^2 or square-free",
                "d, sd",
            ),
            E6_6 => (
                None,
                "C_u^e(n), C_u^o(n) = (C_u(n) +- C_su(n))/2",
                "n",
                "odd; p^2 or square-free",
                "u, su",
            ),
            E6_7 => (Some(31), "C_u^e(p) = C_sd(p)", "p", "-", "u^e, sd"),
            L2_1 => (
                None,
                "2I_2m(x) = I_m(x^2) + I_m'(x_(k+1))",
                "m",
                "m = 2^k m', m' odd",
                "-",
            ),
            L2_4 => (
                None,
                "2I_2m(0,x1,0,x2,...) = I_m(x) + I_m(0,x2,0,x4,...)",
                "m",
                "-",
                "-",
            ),
            L2_6 => (
                None,
                "I_m(x) = I_2m(sqrt x1, x1, sqrt x3, x2, ...)",
                "m",
                "-",
                "-",
            ),
            L2_7 => (
                None,
                "I_2m(0,x1,0,x2,...) = I_2m(sqrt x1,0,sqrt x3,0,...) + I_m(0,x2,0,x4,...)",
                "m",
                "-",
                "-",
            ),
        };
        IdentityInfo {
            key: self,
            table_no,
            formula,
            orders,
            restrictions,
            types,
        }
    }
}

impl fmt::Display for IdentityKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for IdentityKey {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        // Accept typographic primes as well as ASCII quotes.
        let normalized = s
            .replace(['\u{2032}', '\u{2019}'], "'")
            .replace('\u{2033}', "''");
        IdentityKey::ALL
            .iter()
            .copied()
            .find(|k| k.id() == normalized)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

impl From<IdentityKey> for String {
    fn from(k: IdentityKey) -> String {
        k.id().to_string()
    }
}

impl TryFrom<String> for IdentityKey {
    type Error = String;
    fn try_from(s: String) -> std::result::Result<Self, String> {
        s.parse()
    }
}

/// One row of the identity table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityInfo {
    pub key: IdentityKey,
    pub table_no: Option<u32>,
    pub formula: &'static str,
    pub orders: &'static str,
    pub restrictions: &'static str,
    pub types: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
    /// The hypotheses hold but no formula or oracle run covers this order.
    Unsupported,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::NotApplicable => "not-applicable",
            Status::Unsupported => "unsupported",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub key: IdentityKey,
    pub order: u64,
    /// Set when a single coefficient of a polynomial identity was checked.
    pub valency: Option<usize>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    /// Where the numbers on both sides came from.
    pub sources: Vec<Provenance>,
    pub note: Option<String>,
    pub elapsed_us: u64,
}

impl IdentityReport {
    fn skipped(
        key: IdentityKey,
        order: u64,
        valency: Option<usize>,
        status: Status,
        note: String,
    ) -> Self {
        IdentityReport {
            key,
            order,
            valency,
            status,
            lhs: String::new(),
            rhs: String::new(),
            sources: Vec::new(),
            note: Some(note),
            elapsed_us: 0,
        }
    }
}

fn is_odd_prime(n: u64) -> bool {
    n > 2 && is_prime_u64(n)
}

/// `q = (p+1)/2` when `p` is an odd prime and `q` is prime.
fn nearly_doubled(p: u64) -> Option<u64> {
    (is_odd_prime(p) && is_prime_u64(p.div_ceil(2))).then_some(p.div_ceil(2))
}

fn odd_prime_square_root(n: u64) -> Option<u64> {
    match prime_power(n) {
        Some((p, 2)) if p > 2 => Some(p),
        _ => None,
    }
}

fn is_square_free(n: u64) -> bool {
    factorize(n)
        .map(|f| f.iter().all(|&(_, e)| e == 1))
        .unwrap_or(false)
}

fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n)
        .map(|f| f.into_iter().map(|(p, _)| p).collect())
        .unwrap_or_default()
}

/// Whether the hypotheses of `key` hold at `n`. For lemmas `n` is `m`.
pub fn applicable(key: IdentityKey, n: u64) -> bool {
    if key.is_lemma() {
        return n >= 1;
    }
    if n < 2 {
        return false;
    }
    let odd_sf_or_p2 = n % 2 == 1 && (is_square_free(n) || odd_prime_square_root(n).is_some());
    match key {
        E3_1 | E3_1p | E3_2 => nearly_doubled(n).is_some(),
        E3_3 | E3_3p => nearly_doubled(n).is_some_and(|q| q > 2),
        E3_4 => prime_divisors(n).iter().any(|p| p % 4 == 3),
        E3_5 => {
            let base = if is_odd_prime(n) {
                Some(n)
            } else {
                odd_prime_square_root(n)
            };
            base.is_some_and(|p| p % 4 == 3)
        }
        E3_6 => nearly_doubled(n).is_some() && n % 8 == 5,
        E3_7 | E4_1 | E4_1pp | E6_4 | E6_7 => is_odd_prime(n),
        E4_1p => is_odd_prime(n) && n % 4 == 3,
        E3_8 => n.is_multiple_of(2) && is_odd_prime(n / 2),
        E4_2 | E4_3 | E4_3p | E4_4 | E4_5 | E4_6 | E4_6p | E4_7 | E4_7p => {
            nearly_doubled(n).is_some_and(|q| q > 2)
        }
        E5_2 | E5_3 | E5_4 | E5_5 | E5_6 => odd_prime_square_root(n).is_some(),
        E6_1 | E6_5 => is_square_free(n) || odd_prime_square_root(n).is_some(),
        E6_2 | E6_6 => odd_sf_or_p2,
        E6_3 => {
            odd_sf_or_p2
                || (n % 4 == 2 && is_square_free(n / 2))
                || (n % 8 == 4 && is_square_free(n / 4))
        }
        L2_1 | L2_4 | L2_6 | L2_7 => unreachable!("lemmas handled above"),
    }
}

fn timed(key: IdentityKey, n: u64, valency: Option<usize>) -> Result<IdentityReport> {
    if !applicable(key, n) {
        return Ok(IdentityReport::skipped(
            key,
            n,
            valency,
            Status::NotApplicable,
            format!("hypotheses of {key} do not hold at {n}"),
        ));
    }
    let start = Instant::now();
    let mut report = if key.is_lemma() {
        check_lemma(key, n)?
    } else {
        checks::run(key, n, valency)?
    };
    report.elapsed_us = start.elapsed().as_micros() as u64;
    Ok(report)
}

/// Evaluates both sides of `key` at `n` and compares them exactly.
pub fn check(key: IdentityKey, n: u64) -> Result<IdentityReport> {
    timed(key, n, None)
}

/// Like [`check`] for a polynomial identity, comparing only the
/// coefficient of `z^r`. For "3.8" `r` is the `r` of `C_u(2p, 2r+1)`.
pub fn check_valency(key: IdentityKey, n: u64, r: usize) -> Result<IdentityReport> {
    if !key.is_polynomial() {
        return Err(crate::error::Error::domain(format!(
            "{key} is not an identity between polynomials"
        )));
    }
    timed(key, n, Some(r))
}

/// Runs every applicable `(key, n)` with `n <= bound`, in key order and then
/// by `n`.
pub fn verify_range(keys: &[IdentityKey], bound: u64) -> Result<Vec<IdentityReport>> {
    let mut keys = keys.to_vec();
    keys.sort();
    keys.dedup();
    let cells: Vec<(IdentityKey, u64)> = keys
        .iter()
        .flat_map(|&k| {
            (1..=bound)
                .filter(move |&n| applicable(k, n))
                .map(move |n| (k, n))
        })
        .collect();
    cells.into_par_iter().map(|(k, n)| check(k, n)).collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub holds: usize,
    pub fails: usize,
    pub unsupported: usize,
    pub not_applicable: usize,
}

impl Summary {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Holds => s.holds += 1,
                Status::Fails => s.fails += 1,
                Status::Unsupported => s.unsupported += 1,
                Status::NotApplicable => s.not_applicable += 1,
            }
        }
        s
    }

    pub fn any_failed(&self) -> bool {
        self.fails > 0
    }
}
