//! Human-readable output. Tables are indexed by `q`-degree with `q = t^2`
//! whenever all odd Betti numbers vanish; otherwise by real degree.

use std::fmt::Write;

use coadjoint_core::{GradedDims, SplitCertificate};

const Q_HEADER: &str = "grading: q = t^2, row k is H^{2k}";
const T_HEADER: &str = "grading: real cohomological degree";

fn use_q(series: &[&GradedDims]) -> bool {
    series.iter().all(|s| s.odd_degrees_vanish())
}

/// Compact one-line form in the table's grading.
pub fn compact(s: &GradedDims, q: bool) -> String {
    let entries: Vec<String> = if q {
        s.q_coefficients()
            .unwrap_or_default()
            .iter()
            .map(ToString::to_string)
            .collect()
    } else {
        s.betti().iter().map(ToString::to_string).collect()
    };
    if entries.is_empty() {
        "0".into()
    } else {
        entries.join(" ")
    }
}

/// Aligned table with one dimension column per named series.
pub fn table(columns: &[(&str, &GradedDims)]) -> String {
    let all: Vec<&GradedDims> = columns.iter().map(|(_, s)| *s).collect();
    let q = use_q(&all);
    let rows = all.iter().map(|s| s.betti().len()).max().unwrap_or(0);
    let degrees: Vec<usize> = if q {
        (0..rows).step_by(2).collect()
    } else {
        (0..rows).collect()
    };

    let mut header = vec![if q { "q-deg".to_string() } else { "deg".to_string() }];
    if q {
        header.push("H^d".into());
    }
    header.extend(columns.iter().map(|(name, _)| name.to_string()));
    let mut body: Vec<Vec<String>> = Vec::new();
    for d in degrees {
        let mut row = vec![if q { (d / 2).to_string() } else { d.to_string() }];
        if q {
            row.push(d.to_string());
        }
        row.extend(all.iter().map(|s| s.get(d).to_string()));
        body.push(row);
    }
    let mut totals = vec!["total".to_string()];
    if q {
        totals.push(String::new());
    }
    totals.extend(all.iter().map(|s| s.total_dim().to_string()));

    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            std::iter::once(&header)
                .chain(&body)
                .chain(std::iter::once(&totals))
                .map(|r| r[i].len())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |r: &[String]| {
        r.iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };

    let mut out = String::new();
    writeln!(out, "{}", if q { Q_HEADER } else { T_HEADER }).unwrap();
    writeln!(out, "{}", line(&header)).unwrap();
    for r in &body {
        writeln!(out, "{}", line(r)).unwrap();
    }
    writeln!(out, "{}", line(&totals)).unwrap();
    out
}

pub fn certificate(title: &str, c: &SplitCertificate) -> String {
    let mut out = String::new();
    writeln!(out, "== {title}").unwrap();
    let all: Vec<&GradedDims> = c.factors.iter().map(|f| &f.series).collect();
    let q = use_q(&all);
    for f in &c.factors {
        writeln!(out, "  [{}] {}: {}", f.side.as_str(), f.label, compact(&f.series, q)).unwrap();
    }
    for line in table(&[("lhs", &c.lhs), ("rhs", &c.rhs)]).lines() {
        writeln!(out, "  {line}").unwrap();
    }
    for note in &c.hypothesis_notes {
        writeln!(out, "  note: {note}").unwrap();
    }
    writeln!(out, "  verdict: {}", c.verdict).unwrap();
    out
}
