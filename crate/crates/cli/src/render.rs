use std::fmt::Write as _;

use num_bigint::BigInt;
use rnpoly::verify::VerificationReport;
use rnpoly::{DegreeSequence, Multigraph, Polynomial};
use serde_json::json;

use crate::Format;

fn csv_rows<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string(v).expect("json value");
    s.push('\n');
    s
}

pub fn polynomial(p: &Polynomial, fmt: Format) -> String {
    match fmt {
        Format::Json => format!("{}\n", p.to_json()),
        Format::Csv => csv_rows(
            &["coeff", "sequence"],
            p.terms()
                .map(|(m, c)| [c.to_string(), m.to_sequence().to_string()]),
        ),
        _ => format!("{p}\n"),
    }
}

pub fn sequences(seqs: &[DegreeSequence], fmt: Format) -> String {
    match fmt {
        Format::Json => json_line(&json!(seqs)),
        Format::Csv => csv_rows(&["sequence"], seqs.iter().map(|s| [s.to_string()])),
        _ => seqs.iter().map(|s| format!("{s}\n")).collect(),
    }
}

pub fn dnsg_count(n: u32, count: usize, dns: &BigInt, fmt: Format) -> String {
    let sum = 2 * u64::from(n);
    match fmt {
        Format::Json => json_line(&json!({
            "n": n,
            "count": count,
            "degree_sum": sum,
            "dns_count": dns.to_string(),
        })),
        Format::Csv => csv_rows(
            &["n", "count", "degree_sum", "dns_count"],
            [[
                n.to_string(),
                count.to_string(),
                sum.to_string(),
                dns.to_string(),
            ]],
        ),
        _ => format!("{count}\nd_ns({sum}) = {dns}\n"),
    }
}

/// One input, one output value.
pub fn scalar(in_name: &str, input: &str, out_name: &str, value: &str, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let mut m = serde_json::Map::new();
            m.insert(
                in_name.into(),
                json!(input.parse::<i64>().unwrap_or_default()),
            );
            m.insert(out_name.into(), json!(value));
            json_line(&serde_json::Value::Object(m))
        }
        Format::Csv => csv_rows(&[in_name, out_name], [[input, value]]),
        _ => format!("{value}\n"),
    }
}

pub fn graph(d: &DegreeSequence, g: &Multigraph, fmt: Format) -> String {
    match fmt {
        Format::Dot => g.to_dot("G"),
        Format::Json => format!("{}\n", g.to_json()),
        Format::Csv => csv_rows(
            &["u", "v"],
            g.sorted_edges()
                .into_iter()
                .map(|(u, v)| [(u + 1).to_string(), (v + 1).to_string()]),
        ),
        Format::Text => {
            let mut s = format!(
                "degree sequence {d}: {} vertices, {} edges, non-separable\n",
                g.vertex_count(),
                g.edge_count()
            );
            for (u, v) in g.sorted_edges() {
                let _ = writeln!(s, "{} -- {}", u + 1, v + 1);
            }
            s
        }
    }
}

pub fn reports(reports: &[VerificationReport], fmt: Format) -> String {
    match fmt {
        Format::Json => json_line(&json!(reports)),
        Format::Csv => csv_rows(
            &["n", "check", "passed"],
            reports.iter().flat_map(|r| {
                r.checks
                    .iter()
                    .map(move |(name, c)| [r.n.to_string(), name.clone(), c.passed.to_string()])
            }),
        ),
        _ => text_table(reports),
    }
}

fn text_table(reports: &[VerificationReport]) -> String {
    let names: Vec<&String> = reports
        .first()
        .map(|r| r.checks.keys().collect())
        .unwrap_or_default();
    let mut s = format!("{:>4}", "n");
    for name in &names {
        let _ = write!(s, "  {name:>9}");
    }
    s.push('\n');
    let mut failures = Vec::new();
    for r in reports {
        let _ = write!(s, "{:>4}", r.n);
        for (name, c) in &r.checks {
            let _ = write!(s, "  {:>9}", if c.passed { "ok" } else { "FAIL" });
            if !c.passed {
                failures.push((r.n, name, &c.detail));
            }
        }
        s.push('\n');
    }
    if failures.is_empty() {
        let _ = writeln!(s, "all {} report(s) passed", reports.len());
    } else {
        for (n, name, detail) in failures {
            let _ = writeln!(
                s,
                "n = {n}, {name}: {}",
                serde_json::to_string(detail).expect("detail serializes")
            );
        }
    }
    s
}
