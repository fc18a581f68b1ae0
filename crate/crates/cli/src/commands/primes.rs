use circulant_core::number_theory::{cunningham_pairs, nearly_doubled_primes};
use num_bigint::BigUint;
use serde_json::json;

use crate::failure::{Failure, Outcome};
use crate::output::{Format, Sink};
use crate::PrimesArgs;

pub fn primes(sink: &mut Sink, a: PrimesArgs, rounds: u32) -> Outcome {
    if a.nearly_doubled {
        let pairs = nearly_doubled_primes(a.limit);
        match sink.format {
            Format::Text => {
                for pair in &pairs {
                    sink.line(&format!("q={} p={}", pair.q, pair.p))?;
                }
                sink.line(&format!("{} pairs with p <= {}", pairs.len(), a.limit))?;
            }
            Format::Csv => {
                sink.row(&["q", "p"])?;
                for pair in &pairs {
                    sink.row(&[pair.q.to_string(), pair.p.to_string()])?;
                }
            }
            Format::Json => {
                for pair in &pairs {
                    sink.record(json!({ "q": pair.q.to_string(), "p": pair.p.to_string() }))?;
                }
            }
        }
        return Ok(());
    }

    let (Some(ptilde), Some(kmax)) = (a.ptilde, a.kmax) else {
        return Err(Failure::Usage("--chain needs --ptilde and --kmax".into()));
    };
    if ptilde % 2 == 0 {
        return Err(Failure::Usage(format!(
            "--ptilde must be odd, got {ptilde}"
        )));
    }
    let ks = cunningham_pairs(ptilde, kmax, rounds)?;
    let base = BigUint::from(ptilde);
    if sink.is(Format::Csv) {
        sink.row(&["ptilde", "k", "q", "p"])?;
    }
    for &k in &ks {
        let q = (&base << k) + 1u32;
        let p = (&base << (k + 1)) + 1u32;
        match sink.format {
            Format::Text => sink.line(&format!("k={k}  q={ptilde}*2^{k}+1={q}  p=2q-1={p}"))?,
            Format::Csv => sink.row(&[
                ptilde.to_string(),
                k.to_string(),
                q.to_string(),
                p.to_string(),
            ])?,
            Format::Json => sink.record(json!({
                "ptilde": ptilde.to_string(),
                "k": k,
                "q": q.to_string(),
                "p": p.to_string(),
            }))?,
        }
    }
    if sink.is(Format::Text) {
        sink.line(&format!("{} values of k <= {kmax}", ks.len()))?;
    }
    Ok(())
}
