//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed. The
//! process fails if any criterion fails, except for deviations listed in
//! `KNOWN_DEVIATIONS`, which must reproduce exactly.

#[path = "../../core/tests/golden/mod.rs"]
mod golden;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use circulant_core::algebra::EvalPoint;
use circulant_core::enumerators::{count, formula_supported, log_concavity_probe, mixed_sd};
use circulant_core::identities::{check, check_valency, IdentityKey, Status};
use circulant_core::number_theory::{
    cunningham_pairs, is_prime_u64, nearly_doubled_primes, DEFAULT_MR_ROUNDS,
};
use circulant_core::oracle::{self, classify_self_complementary, OracleLimits};
use circulant_core::{CirculantClass, CountResult};
use num_bigint::BigInt;

use CirculantClass::*;

type Verdict = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Verdict);

/// Failures that are expected, with the exact detail they must print.
const KNOWN_DEVIATIONS: &[(u32, &str)] = &[(
    4,
    "oracle != Table 1 at C_o(8): 9 vs 7; C_o(12): 70 vs 64; C_o(15): 290 vs 276",
)];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn formula(n: u64, class: CirculantClass) -> Result<CountResult, String> {
    count(n, class).map_err(|e| e.to_string())
}

fn table1_formula_path() -> Verdict {
    let primes = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
    let twice = [6u64, 10, 14, 22, 26, 34, 38, 46];
    let squares = [9u64, 25, 49];
    let mut cells = 0;
    for n in primes.into_iter().chain(squares).chain(twice) {
        let row = golden::table1_row(n).unwrap();
        let classes: &[CirculantClass] = if twice.contains(&n) {
            &[Directed, Undirected, Oriented]
        } else {
            &CirculantClass::ALL
        };
        for &class in classes {
            let got = formula(n, class)?.total;
            let want = row[golden::column(class.tag())];
            ensure(got == BigInt::from(want), || {
                format!("C_{class}({n}) = {got}, table {want}")
            })?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells"))
}

fn table2_columns() -> Verdict {
    let mut cells = 0;
    for (class, block) in [
        (Undirected, golden::TABLE2_U),
        (Directed, golden::TABLE2_D),
        (Oriented, golden::TABLE2_O),
    ] {
        for &(n, column) in block {
            let r = formula(n, class)?;
            for &(v, want) in column {
                let got = r.at_valency(v).unwrap();
                ensure(got == BigInt::from(want), || {
                    format!("c_{class}({n}, {v}) = {got}, table {want}")
                })?;
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} coefficients"))
}

fn big_integer_example() -> Verdict {
    let want = [
        (SelfComplementaryDirected, "123992391755402970674764"),
        (SelfComplementaryUndirected, "56385212104"),
        (Tournament, "123992391755346585462636"),
    ];
    for (class, value) in want {
        let got = formula(169, class)?.total.to_string();
        ensure(got == value, || format!("C_{class}(169) = {got}"))?;
    }
    let mixed = mixed_sd(13).map_err(|e| e.to_string())?;
    ensure(mixed == BigInt::from(24), || format!("mixed = {mixed}"))?;
    Ok("C_sd, C_su, C_t at 169 and mixed = 24".into())
}

fn oracle_equivalence() -> Verdict {
    let limits = OracleLimits::default();
    for n in [3u64, 5, 6, 7, 9, 10, 11, 13, 14] {
        for class in CirculantClass::ALL {
            let got = oracle::enumerate(n, class, &limits).map_err(|e| e.to_string())?;
            if formula_supported(n, class) {
                let want = formula(n, class)?;
                ensure(
                    got.total == want.total && got.by_valency == want.by_valency,
                    || format!("oracle != formula for {class} at {n}"),
                )?;
            } else {
                let want = golden::table1_row(n).unwrap()[golden::column(class.tag())];
                ensure(got.total == BigInt::from(want), || {
                    format!("oracle C_{class}({n}) = {}", got.total)
                })?;
            }
        }
    }
    let mut mismatches = Vec::new();
    for n in [2u64, 4, 8, 12, 15] {
        let row = golden::table1_row(n).unwrap();
        for class in CirculantClass::ALL {
            let got = oracle::enumerate(n, class, &limits)
                .map_err(|e| e.to_string())?
                .total;
            let want = row[golden::column(class.tag())];
            if got != BigInt::from(want) {
                mismatches.push(format!("C_{class}({n}): {got} vs {want}"));
            }
        }
    }
    if mismatches.is_empty() {
        Ok("formula orders and Table 1 at 2, 4, 8, 12, 15".into())
    } else {
        Err(format!("oracle != Table 1 at {}", mismatches.join("; ")))
    }
}

fn identity_suite() -> Verdict {
    let out = Command::new(env!("CARGO_BIN_EXE_circulant"))
        .args(["verify", "--all", "--max", "100", "--format", "json"])
        .env_remove("CIRCULANT_FORMAT")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("exit status {:?}", out.status.code())
    })?;
    let text = String::from_utf8_lossy(&out.stdout);
    let (mut holds, mut unsupported, mut lemmas) = (0, 0, 0);
    for line in text.lines() {
        let r: serde_json::Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let order = r["order"].as_u64().unwrap();
        let key: IdentityKey = r["key"].as_str().unwrap().parse()?;
        match r["status"].as_str().unwrap() {
            "holds" => {
                holds += 1;
                if key.is_lemma() && order <= 64 {
                    lemmas += 1;
                }
            }
            // Only acceptable where no formula covers the order and the
            // oracle cannot reach it.
            "unsupported" => {
                ensure(order > oracle::DEFAULT_MAX_ORDER, || {
                    format!("{key} at {order} unsupported")
                })?;
                unsupported += 1;
            }
            other => return Err(format!("{key} at {order}: {other}")),
        }
    }
    ensure(lemmas == 4 * 64, || {
        format!("{lemmas} lemma instances up to 64")
    })?;
    Ok(format!(
        "{holds} hold, 0 fail, {unsupported} beyond formula and oracle range"
    ))
}

fn spot_checks() -> Verdict {
    let total = |n, class| formula(n, class).map(|r| r.total);
    let four = BigInt::from(4);
    let lhs = &four * total(13, Directed)? - total(14, Directed)?;
    let rhs = &four * total(13, Undirected)? - total(14, Undirected)?;
    ensure(lhs == BigInt::from(8) && rhs == BigInt::from(8), || {
        format!("4.6 at 13: {lhs} vs {rhs}")
    })?;
    let d73 = total(73, Directed)?;
    ensure(d73.to_string() == "65588423374144427520", || {
        format!("C_d(73) = {d73}")
    })?;
    let r = check(IdentityKey::E4_6, 73).map_err(|e| e.to_string())?;
    ensure(
        r.status == Status::Holds && r.lhs == "120" && r.rhs == "120",
        || format!("4.6 at 73: {r:?}"),
    )?;
    let d37 = formula(37, Directed)?;
    let d38 = formula(38, Directed)?;
    let pair = (
        d37.at_valency(4).unwrap(),
        d37.at_valency(3).unwrap(),
        d38.at_valency(4).unwrap(),
    );
    ensure(pair == (1641.into(), 199.into(), 3679.into()), || {
        format!("{pair:?}")
    })?;
    let r = check_valency(IdentityKey::E4_5, 37, 4).map_err(|e| e.to_string())?;
    ensure(
        r.status == Status::Holds && r.lhs == "3680" && r.rhs == "3680",
        || format!("4.5: {r:?}"),
    )?;
    Ok("4.6 at 13 and 73, 4.5 at 37 r=4".into())
}

fn alternating_sums() -> Verdict {
    let mut orders = 0;
    for n in 2u64..=100 {
        if formula_supported(n, Directed) && formula_supported(n, SelfComplementaryDirected) {
            let alt = formula(n, Directed)?
                .series()
                .unwrap()
                .eval_at(EvalPoint::Integer(-1))
                .unwrap();
            let sd = formula(n, SelfComplementaryDirected)?.total;
            ensure(alt == sd, || format!("c_d({n}, -1) = {alt}, C_sd = {sd}"))?;
            orders += 1;
        }
        if n % 2 == 1 && formula_supported(n, Undirected) {
            let u = formula(n, Undirected)?;
            let alt = u
                .series()
                .unwrap()
                .eval_at(EvalPoint::GaussianUnit)
                .unwrap();
            let su = formula(n, SelfComplementaryUndirected)?.total;
            ensure(alt == su, || format!("c_u({n}, i) = {alt}, C_su = {su}"))?;
        }
        if formula_supported(n, Oriented) {
            let alt = formula(n, Oriented)?
                .series()
                .unwrap()
                .eval_at(EvalPoint::Integer(-1))
                .unwrap();
            let odd: Vec<u64> = (3..=n).filter(|p| n % p == 0 && is_prime_u64(*p)).collect();
            let want = if n % 4 == 2 {
                1
            } else if odd.iter().any(|p| p % 4 == 3) {
                0
            } else {
                1
            };
            ensure(alt == BigInt::from(want), || {
                format!("c_o({n}, -1) = {alt}, expected {want}")
            })?;
        }
    }
    Ok(format!("{orders} orders"))
}

fn mixed_classification() -> Verdict {
    let limits = OracleLimits::default();
    let s15 = classify_self_complementary(15, &limits).map_err(|e| e.to_string())?;
    let s13 = classify_self_complementary(13, &limits).map_err(|e| e.to_string())?;
    let got = [
        (s15.undirected, s15.tournament, s15.mixed),
        (s13.undirected, s13.tournament, s13.mixed),
    ];
    ensure(got == [(0, 16, 4), (2, 6, 0)], || format!("{got:?}"))?;
    Ok("15 -> (0, 16, 4), 13 -> (2, 6, 0)".into())
}

fn number_theory() -> Verdict {
    let pairs = nearly_doubled_primes(999);
    ensure(pairs.len() == 21, || format!("{} pairs", pairs.len()))?;
    let first: Vec<u64> = pairs.iter().take(6).map(|p| p.p).collect();
    ensure(first == [3, 5, 13, 37, 61, 73], || format!("{first:?}"))?;
    let cases: [(u64, u32, &[u32]); 5] = [
        (3, 50, &[1, 5]),
        (9, 50, &[1, 2, 6, 42]),
        (15, 40, &[1, 9, 37]),
        (21, 200, &[4, 16, 128]),
        (27, 50, &[19, 46]),
    ];
    for (t, k, want) in cases {
        let got = cunningham_pairs(t, k, DEFAULT_MR_ROUNDS).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("cunningham({t}, {k}) = {got:?}"))?;
    }
    Ok("21 pairs, five chain tables".into())
}

fn log_concavity() -> Verdict {
    for n in [121u64, 169] {
        let r = log_concavity_probe(n).map_err(|e| e.to_string())?;
        ensure(r.violations.first().map(|v| v.r) == Some(2), || {
            format!("{n}: {:?}", r.violations)
        })?;
    }
    let u27 =
        oracle::enumerate(27, Undirected, &OracleLimits::slow()).map_err(|e| e.to_string())?;
    let r = circulant_core::enumerators::log_concavity_of(27, u27.series().unwrap());
    ensure(r.violations.first().map(|v| v.r) == Some(2), || {
        format!("27: {:?}", r.violations)
    })?;
    for p in (3u64..=199).filter(|&p| is_prime_u64(p)) {
        let r = log_concavity_probe(p).map_err(|e| e.to_string())?;
        ensure(r.is_log_concave(), || format!("{p}: {:?}", r.violations))?;
    }
    Ok("r = 2 at 27 (oracle), 121, 169; primes <= 199 log-concave".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            1,
            "Table 1 reproduction (formula path)",
            5,
            table1_formula_path,
        ),
        (2, "Table 2 reproduction", 5, table2_columns),
        (3, "big-integer example at 169", 1, big_integer_example),
        (4, "oracle/formula equivalence", 60, oracle_equivalence),
        (
            5,
            "identity suite: verify --all --max 100",
            30,
            identity_suite,
        ),
        (6, "worked identity spot checks", 30, spot_checks),
        (7, "alternating sums", 30, alternating_sums),
        (
            8,
            "mixed self-complementary classification",
            30,
            mixed_classification,
        ),
        (9, "number theory", 30, number_theory),
        (10, "log-concavity", 600, log_concavity),
    ];
    let mut unexpected = 0;
    for (no, title, budget, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(d) if elapsed > Duration::from_secs(budget) => {
                Err(format!("{d}, but over the {budget} s budget"))
            }
            v => v,
        };
        match verdict {
            Ok(detail) => println!(
                "PASS {no:>2}  {title}: {detail} [{:.2} s]",
                elapsed.as_secs_f64()
            ),
            Err(detail) => {
                println!(
                    "FAIL {no:>2}  {title}: {detail} [{:.2} s]",
                    elapsed.as_secs_f64()
                );
                if KNOWN_DEVIATIONS.contains(&(no, detail.as_str())) {
                    println!("         known deviation, see README");
                } else {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failures");
        ExitCode::FAILURE
    }
}
