use circulant_core::enumerators::log_concavity_of;
use circulant_core::oracle::{classify_self_complementary, iso_classes, OracleLimits};
use circulant_core::CirculantClass;
use serde_json::json;

use super::Source;
use crate::failure::{Failure, Outcome};
use crate::output::{align, Format, Sink};
use crate::{ClassesArgs, LogConcaveArgs};

pub fn logconcave(sink: &mut Sink, a: LogConcaveArgs) -> Outcome {
    if a.order.is_multiple_of(2) {
        return Err(Failure::Usage(format!(
            "log-concavity is checked at odd orders, got {}",
            a.order
        )));
    }
    let source = Source {
        oracle: a.oracle,
        force_oracle: a.oracle,
        limits: OracleLimits::with_slow(a.allow_slow),
    };
    let r = source.evaluate(a.order, CirculantClass::Undirected)?;
    let report = log_concavity_of(a.order, r.series()?);
    let n = a.order;
    let prov = r.provenance;

    match sink.format {
        Format::Text => {
            let verdict = if report.is_log_concave() {
                "log-concave"
            } else {
                "not log-concave"
            };
            sink.line(&format!("n={n}: {verdict} ({prov})"))?;
            for v in &report.violations {
                sink.line(&format!(
                    "  r={}: C_u({n},{})^2 = {} < C_u({n},{})*C_u({n},{}) = {}",
                    v.r,
                    2 * v.r,
                    v.square,
                    2 * v.r - 2,
                    2 * v.r + 2,
                    v.product
                ))?;
            }
        }
        Format::Csv => {
            sink.row(&["order", "r", "square", "product", "provenance"])?;
            for v in &report.violations {
                sink.row(&[
                    n.to_string(),
                    v.r.to_string(),
                    v.square.to_string(),
                    v.product.to_string(),
                    prov.to_string(),
                ])?;
            }
        }
        Format::Json => sink.record(json!({
            "order": n,
            "log_concave": report.is_log_concave(),
            "violations": report.violations,
            "provenance": prov,
        }))?,
    }
    if report.is_log_concave() {
        Ok(())
    } else {
        let rs: Vec<String> = report.violations.iter().map(|v| v.r.to_string()).collect();
        Err(Failure::Violation(format!(
            "order {n} violates log-concavity at r = {}",
            rs.join(", ")
        )))
    }
}

pub fn classes(sink: &mut Sink, a: ClassesArgs) -> Outcome {
    let limits = OracleLimits::with_slow(a.allow_slow);
    if a.shapes {
        if a.class != CirculantClass::SelfComplementaryDirected {
            return Err(Failure::Usage("--shapes applies to class sd".into()));
        }
        let s = classify_self_complementary(a.order, &limits)?;
        match sink.format {
            Format::Text => sink.line(&format!(
                "n={}: {} undirected, {} tournaments, {} mixed (oracle)",
                a.order, s.undirected, s.tournament, s.mixed
            ))?,
            Format::Csv => {
                sink.row(&["order", "undirected", "tournament", "mixed", "provenance"])?;
                sink.row(&[
                    a.order.to_string(),
                    s.undirected.to_string(),
                    s.tournament.to_string(),
                    s.mixed.to_string(),
                    "oracle".to_string(),
                ])?;
            }
            Format::Json => sink.record(json!({
                "order": a.order,
                "undirected": s.undirected.to_string(),
                "tournament": s.tournament.to_string(),
                "mixed": s.mixed.to_string(),
                "provenance": "oracle",
            }))?,
        }
        return Ok(());
    }

    let classes = iso_classes(a.order, a.class, &limits)?;
    match sink.format {
        Format::Text => {
            let mut grid = vec![vec![
                "valency".to_string(),
                "representative".to_string(),
                "sets".to_string(),
                "multiplier orbits".to_string(),
            ]];
            for c in &classes {
                grid.push(vec![
                    c.valency.to_string(),
                    c.representative.to_string(),
                    c.size.to_string(),
                    c.multiplier_orbits.to_string(),
                ]);
            }
            for line in align(&grid) {
                sink.line(&line)?;
            }
            sink.line(&format!("{} classes (oracle)", classes.len()))?;
        }
        Format::Csv => {
            sink.row(&[
                "order",
                "valency",
                "representative",
                "sets",
                "multiplier_orbits",
                "provenance",
            ])?;
            for c in &classes {
                sink.row(&[
                    a.order.to_string(),
                    c.valency.to_string(),
                    c.representative.to_string(),
                    c.size.to_string(),
                    c.multiplier_orbits.to_string(),
                    "oracle".to_string(),
                ])?;
            }
        }
        Format::Json => {
            for c in &classes {
                sink.record(json!({
                    "order": a.order,
                    "valency": c.valency,
                    "representative": c.representative.members(),
                    "sets": c.size.to_string(),
                    "multiplier_orbits": c.multiplier_orbits.to_string(),
                    "provenance": "oracle",
                }))?;
            }
        }
    }
    Ok(())
}
