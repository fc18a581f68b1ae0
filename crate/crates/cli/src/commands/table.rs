use circulant_core::identities::IdentityKey;
use circulant_core::oracle::OracleLimits;
use circulant_core::{CirculantClass, Provenance, UniPoly};
use num_bigint::BigInt;
use serde_json::{json, Value};

use super::Source;
use crate::failure::{Failure, Outcome};
use crate::output::{align, Format, Sink};
use crate::TableArgs;

use CirculantClass::*;

const TABLE1_COLUMNS: [&str; 6] = ["C_d", "C_u", "C_o", "C_sd", "C_su", "C_t"];

/// Orders shown in each block of table 2 when none are given.
fn default_orders(class: CirculantClass) -> Vec<u64> {
    match class {
        Undirected => vec![7, 13, 14, 19, 37, 38, 61, 62, 73, 74],
        Directed => vec![7, 13, 14, 19, 31, 37, 38],
        _ => vec![13, 14, 37, 38],
    }
}

pub fn table(sink: &mut Sink, a: TableArgs) -> Outcome {
    let source = Source {
        oracle: a.oracle,
        force_oracle: false,
        limits: OracleLimits::with_slow(a.allow_slow),
    };
    let missing = match a.which {
        1 => {
            if a.class.is_some() {
                return Err(Failure::Usage("--class applies to table 2 only".into()));
            }
            let orders = a
                .orders
                .clone()
                .unwrap_or_else(|| (2..=a.max.unwrap_or(50)).collect());
            table1(sink, &orders, &source)?
        }
        2 => {
            if a.max.is_some() {
                return Err(Failure::Usage("table 2 takes --orders, not --max".into()));
            }
            let blocks = match a.class {
                Some(c) if c.has_valency_series() => vec![c],
                Some(c) => {
                    return Err(Failure::Usage(format!("class {c} has no valency series")));
                }
                None => vec![Undirected, Directed, Oriented],
            };
            let mut missing = 0;
            for (i, class) in blocks.into_iter().enumerate() {
                if i > 0 && sink.is(Format::Text) {
                    sink.line("")?;
                }
                let orders = a.orders.clone().unwrap_or_else(|| default_orders(class));
                missing += table2(sink, class, &orders, &source)?;
            }
            missing
        }
        _ => {
            table3(sink)?;
            0
        }
    };
    if a.strict && missing > 0 {
        return Err(Failure::Unsupported(format!("{missing} cells are n/a")));
    }
    Ok(())
}

/// `None` where neither a formula nor (if allowed) the oracle covers the cell.
fn cell<T>(
    source: &Source,
    n: u64,
    class: CirculantClass,
    pick: impl FnOnce(circulant_core::CountResult) -> T,
) -> Result<Option<(T, Provenance)>, Failure> {
    match source.evaluate(n, class) {
        Ok(r) => {
            let prov = r.provenance;
            Ok(Some((pick(r), prov)))
        }
        Err(Failure::Unsupported(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

type Cell = Option<(BigInt, Provenance)>;

fn table1(sink: &mut Sink, orders: &[u64], source: &Source) -> Result<usize, Failure> {
    let mut rows: Vec<(u64, Vec<Cell>)> = Vec::new();
    for &n in orders {
        let cells = CirculantClass::ALL
            .into_iter()
            .map(|class| cell(source, n, class, |r| r.total))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((n, cells));
    }
    let missing = rows
        .iter()
        .flat_map(|(_, c)| c)
        .filter(|c| c.is_none())
        .count();

    match sink.format {
        Format::Text => {
            let mut grid = vec![std::iter::once("n")
                .chain(TABLE1_COLUMNS)
                .map(String::from)
                .collect()];
            for (n, cells) in &rows {
                let mut line = vec![n.to_string()];
                line.extend(cells.iter().map(|c| match c {
                    Some((v, p)) => format!("{v} ({p})"),
                    None => "n/a".into(),
                }));
                grid.push(line);
            }
            for line in align(&grid) {
                sink.line(&line)?;
            }
        }
        Format::Csv => {
            let mut header = vec!["n".to_string()];
            header.extend(TABLE1_COLUMNS.map(String::from));
            header.extend(TABLE1_COLUMNS.map(|c| format!("{c}_provenance")));
            sink.row(&header)?;
            for (n, cells) in &rows {
                let mut line = vec![n.to_string()];
                line.extend(
                    cells
                        .iter()
                        .map(|c| c.as_ref().map_or("n/a".into(), |(v, _)| v.to_string())),
                );
                line.extend(
                    cells
                        .iter()
                        .map(|c| c.as_ref().map_or(String::new(), |(_, p)| p.to_string())),
                );
                sink.row(&line)?;
            }
        }
        Format::Json => {
            for (n, cells) in &rows {
                let mut v = json!({ "n": n });
                for (name, c) in TABLE1_COLUMNS.iter().zip(cells) {
                    v[*name] = match c {
                        Some((value, p)) => json!({ "value": value.to_string(), "provenance": p }),
                        None => json!({ "value": Value::Null, "provenance": "n/a" }),
                    };
                }
                sink.record(v)?;
            }
        }
    }
    Ok(missing)
}

fn table2(
    sink: &mut Sink,
    class: CirculantClass,
    orders: &[u64],
    source: &Source,
) -> Result<usize, Failure> {
    let mut columns: Vec<(u64, Option<(UniPoly, Provenance)>)> = Vec::new();
    for &n in orders {
        let c = cell(source, n, class, |r| r.by_valency.expect("valency series"))?;
        columns.push((n, c));
    }
    let missing = columns.iter().filter(|(_, c)| c.is_none()).count();
    let top = columns
        .iter()
        .filter_map(|(_, c)| c.as_ref().and_then(|(p, _)| p.degree()))
        .max()
        .unwrap_or(0);
    // The undirected block lists even valencies only.
    let step = if class == Undirected { 2 } else { 1 };
    let valencies: Vec<usize> = (0..=top).step_by(step).collect();
    let value = |c: &Option<(UniPoly, Provenance)>, r: usize| {
        c.as_ref()
            .filter(|(p, _)| p.degree().is_some_and(|d| r <= d))
            .map(|(p, _)| p.coeff(r))
    };

    match sink.format {
        Format::Text => {
            let title = if class == Undirected {
                "c_u(n, r), r even".to_string()
            } else {
                format!("c_{class}(n, r)")
            };
            sink.line(&title)?;
            let mut grid = vec![std::iter::once("r".to_string())
                .chain(columns.iter().map(|(n, _)| n.to_string()))
                .collect()];
            grid.push(
                std::iter::once(String::new())
                    .chain(
                        columns.iter().map(|(_, c)| {
                            c.as_ref().map_or("n/a".into(), |(_, p)| format!("({p})"))
                        }),
                    )
                    .collect(),
            );
            for &r in &valencies {
                let mut line = vec![r.to_string()];
                line.extend(
                    columns
                        .iter()
                        .map(|(_, c)| value(c, r).map_or(String::new(), |v| v.to_string())),
                );
                grid.push(line);
            }
            for line in align(&grid) {
                sink.line(&line)?;
            }
        }
        Format::Csv => {
            let mut header = vec!["class".to_string(), "r".to_string()];
            header.extend(columns.iter().map(|(n, _)| n.to_string()));
            sink.row(&header)?;
            let mut prov = vec![class.to_string(), "provenance".to_string()];
            prov.extend(
                columns
                    .iter()
                    .map(|(_, c)| c.as_ref().map_or("n/a".into(), |(_, p)| p.to_string())),
            );
            sink.row(&prov)?;
            for &r in &valencies {
                let mut line = vec![class.to_string(), r.to_string()];
                line.extend(
                    columns
                        .iter()
                        .map(|(_, c)| value(c, r).map_or(String::new(), |v| v.to_string())),
                );
                sink.row(&line)?;
            }
        }
        Format::Json => {
            for (n, c) in &columns {
                match c {
                    None => {
                        sink.record(json!({ "class": class, "order": n, "provenance": "n/a" }))?
                    }
                    Some((_, p)) => {
                        for &r in &valencies {
                            if let Some(v) = value(c, r) {
                                sink.record(json!({
                                    "class": class,
                                    "order": n,
                                    "r": r,
                                    "count": v.to_string(),
                                    "provenance": p,
                                }))?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(missing)
}

fn table3(sink: &mut Sink) -> Outcome {
    let mut keys = IdentityKey::ALL.to_vec();
    keys.sort_by_key(|k| (k.info().table_no.unwrap_or(u32::MAX), *k));
    let header = ["No", "Id", "Formula", "Orders", "Restrictions", "Types"];
    let rows: Vec<Vec<String>> = keys
        .iter()
        .map(|k| {
            let i = k.info();
            vec![
                i.table_no.map_or(String::new(), |n| n.to_string()),
                k.id().to_string(),
                i.formula.to_string(),
                i.orders.to_string(),
                i.restrictions.to_string(),
                i.types.to_string(),
            ]
        })
        .collect();
    match sink.format {
        Format::Text => {
            // Left-aligned: the formulas are long.
            let mut grid = vec![header.map(String::from).to_vec()];
            grid.extend(rows);
            let widths: Vec<usize> = (0..header.len())
                .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
                .collect();
            for r in &grid {
                let cells: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:<w$}"))
                    .collect();
                sink.line(cells.join("  ").trim_end())?;
            }
        }
        Format::Csv => {
            sink.row(&header)?;
            for r in &rows {
                sink.row(r)?;
            }
        }
        Format::Json => {
            for r in rows {
                let no = r[0].parse::<u32>().ok();
                sink.record(json!({
                    "no": no,
                    "id": r[1],
                    "formula": r[2],
                    "orders": r[3],
                    "restrictions": r[4],
                    "types": r[5],
                }))?;
            }
        }
    }
    Ok(())
}
