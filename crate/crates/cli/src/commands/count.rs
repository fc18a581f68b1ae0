use circulant_core::oracle::OracleLimits;
use serde_json::json;

use super::Source;
use crate::failure::{Failure, Outcome};
use crate::output::{Format, Sink};
use crate::CountArgs;

pub fn count(sink: &mut Sink, a: CountArgs) -> Outcome {
    if (a.poly || a.valency.is_some()) && !a.class.has_valency_series() {
        return Err(Failure::Usage(format!(
            "class {} is counted only as a total; --poly and --valency need d, u or o",
            a.class
        )));
    }
    let source = Source {
        oracle: a.oracle,
        force_oracle: a.oracle,
        limits: OracleLimits::with_slow(a.allow_slow),
    };
    let r = source.evaluate(a.order, a.class)?;
    let prov = r.provenance;
    let at = a.valency.map(|v| (v, r.at_valency(v).unwrap_or_default()));
    let series = r.by_valency.as_ref().filter(|_| a.poly);

    match sink.format {
        Format::Text => {
            sink.line(&format!("{} ({prov})", r.total))?;
            if let Some((v, c)) = &at {
                sink.line(&format!("c_{}({}, {v}) = {c} ({prov})", r.class, r.order))?;
            }
            if let Some(p) = series {
                sink.line(&format!("c_{}({}, z) = {p} ({prov})", r.class, r.order))?;
            }
        }
        Format::Csv => {
            let mut header = vec!["order", "class", "total", "provenance"];
            let mut row = vec![
                r.order.to_string(),
                r.class.to_string(),
                r.total.to_string(),
                prov.to_string(),
            ];
            if let Some((v, c)) = &at {
                header.extend(["valency", "count"]);
                row.extend([v.to_string(), c.to_string()]);
            }
            if let Some(p) = series {
                header.push("by_valency");
                row.push(p.to_decimal_strings().join(" "));
            }
            sink.row(&header)?;
            sink.row(&row)?;
        }
        Format::Json => {
            let mut v = json!({
                "order": r.order,
                "class": r.class,
                "total": r.total.to_string(),
                "provenance": prov,
            });
            if let Some((valency, c)) = &at {
                v["valency"] = json!(valency);
                v["count"] = json!(c.to_string());
            }
            if let Some(p) = series {
                v["by_valency"] = json!(p.to_decimal_strings());
            }
            sink.record(v)?;
        }
    }
    Ok(())
}
