use circulant_core::identities::{
    applicable, check_valency, verify_range, IdentityKey, IdentityReport, Status, Summary,
};
use serde_json::json;

use crate::failure::{Failure, Outcome};
use crate::output::{Format, Sink};
use crate::VerifyArgs;

pub fn verify(sink: &mut Sink, a: VerifyArgs) -> Outcome {
    let keys: Vec<IdentityKey> = if a.all {
        IdentityKey::ALL.to_vec()
    } else {
        a.identity
            .iter()
            .map(|s| s.parse().map_err(Failure::Usage))
            .collect::<Result<_, _>>()?
    };
    let reports = match a.valency {
        None => verify_range(&keys, a.max)?,
        Some(r) => {
            let [key] = keys[..] else {
                return Err(Failure::Usage(
                    "--valency needs exactly one --identity".into(),
                ));
            };
            (1..=a.max)
                .filter(|&n| applicable(key, n))
                .map(|n| check_valency(key, n, r))
                .collect::<Result<_, _>>()?
        }
    };

    match sink.format {
        Format::Text => {
            for r in &reports {
                sink.line(&text_line(r))?;
            }
        }
        Format::Csv => {
            sink.row(&[
                "identity", "order", "valency", "status", "lhs", "rhs", "sources", "note",
            ])?;
            for r in &reports {
                sink.row(&[
                    r.key.id().to_string(),
                    r.order.to_string(),
                    r.valency.map_or(String::new(), |v| v.to_string()),
                    r.status.to_string(),
                    r.lhs.clone(),
                    r.rhs.clone(),
                    sources(r),
                    r.note.clone().unwrap_or_default(),
                ])?;
            }
        }
        Format::Json => {
            for r in &reports {
                sink.record(json!(r))?;
            }
        }
    }

    let s = Summary::of(&reports);
    let summary = format!(
        "{} checked: {} hold, {} fail, {} unsupported",
        reports.len(),
        s.holds,
        s.fails,
        s.unsupported
    );
    if sink.is(Format::Text) {
        sink.line(&summary)?;
    } else {
        eprintln!("{summary}");
    }
    if s.any_failed() {
        return Err(Failure::Violation(format!(
            "{} instantiations failed",
            s.fails
        )));
    }
    Ok(())
}

fn sources(r: &IdentityReport) -> String {
    r.sources
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

fn text_line(r: &IdentityReport) -> String {
    let at = if r.key.is_lemma() { "m" } else { "n" };
    let mut line = format!("{} {at}={}", r.key, r.order);
    if let Some(v) = r.valency {
        line += &format!(" r={v}");
    }
    line += &format!(": {}", r.status);
    match r.status {
        Status::Holds | Status::Fails => {
            let rel = if r.status == Status::Holds { "=" } else { "!=" };
            line += &format!("  {} {rel} {}", r.lhs, r.rhs);
            if !r.sources.is_empty() {
                line += &format!("  ({})", sources(r));
            }
        }
        Status::NotApplicable | Status::Unsupported => {}
    }
    if let Some(note) = &r.note {
        line += &format!("  [{note}]");
    }
    line
}
