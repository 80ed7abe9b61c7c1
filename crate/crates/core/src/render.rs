//! Text, CSV and JSON forms of triangles and enumeration listings.
//!
//! JSON carries every integer as a decimal string; CSV cells are plain
//! decimal. Both parse back into the same [`Triangle`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{DoublePartition, Family};
use crate::triangle::{Method, Triangle, TriangleParams};
use crate::ArbInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidParams(format!("unknown format `{other}`"))),
        }
    }
}

pub fn render_triangle(t: &Triangle, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => triangle_table(t),
        OutputFormat::Csv => triangle_csv(t),
        OutputFormat::Json => triangle_json(t),
    }
}

fn sums(t: &Triangle) -> Vec<ArbInt> {
    t.rows().iter().map(|r| r.iter().sum()).collect()
}

/// Aligned table with a trailing sum column. Cells with `k > n` are blank.
pub fn triangle_table(t: &Triangle) -> String {
    let sums = sums(t);
    let n_width = "n\\k".len().max(t.n_max().to_string().len());
    let col_widths: Vec<usize> = (0..=t.n_max())
        .map(|k| {
            t.rows()
                .iter()
                .skip(k)
                .map(|r| r[k].to_string().len())
                .chain(std::iter::once(k.to_string().len()))
                .max()
                .unwrap_or(1)
        })
        .collect();
    let sum_width = sums
        .iter()
        .map(|s| s.to_string().len())
        .chain(std::iter::once(3))
        .max()
        .unwrap_or(3);

    let mut out = String::new();
    let header: Vec<String> = col_widths
        .iter()
        .enumerate()
        .map(|(k, w)| format!("{k:>w$}"))
        .collect();
    let _ = writeln!(
        out,
        "{:>n_width$} | {} | {:>sum_width$}",
        "n\\k",
        header.join(" "),
        "sum"
    );
    let inner = col_widths.iter().sum::<usize>() + col_widths.len().saturating_sub(1);
    let _ = writeln!(
        out,
        "{}-+-{}-+-{}",
        "-".repeat(n_width),
        "-".repeat(inner),
        "-".repeat(sum_width)
    );
    for (n, row) in t.rows().iter().enumerate() {
        let cells: Vec<String> = col_widths
            .iter()
            .enumerate()
            .map(|(k, w)| match row.get(k) {
                Some(v) => format!("{:>w$}", v.to_string()),
                None => " ".repeat(*w),
            })
            .collect();
        let _ = writeln!(
            out,
            "{n:>n_width$} | {} | {:>sum_width$}",
            cells.join(" "),
            sums[n].to_string()
        );
    }
    out
}

/// Header `n,k0,...,k{n_max},sum`; cells beyond the diagonal are empty.
pub fn triangle_csv(t: &Triangle) -> String {
    let sums = sums(t);
    let mut out = String::from("n");
    for k in 0..=t.n_max() {
        let _ = write!(out, ",k{k}");
    }
    out.push_str(",sum\n");
    for (n, row) in t.rows().iter().enumerate() {
        let _ = write!(out, "{n}");
        for k in 0..=t.n_max() {
            out.push(',');
            if let Some(v) = row.get(k) {
                let _ = write!(out, "{v}");
            }
        }
        let _ = writeln!(out, ",{}", sums[n]);
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct TriangleJson {
    p: u32,
    n_max: usize,
    method: String,
    rows: Vec<Vec<String>>,
    sums: Vec<String>,
}

pub fn triangle_json(t: &Triangle) -> String {
    let doc = TriangleJson {
        p: t.p(),
        n_max: t.n_max(),
        method: t.method().to_string(),
        rows: t
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect(),
        sums: sums(t).iter().map(ToString::to_string).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn parse_big(format: &'static str, s: &str) -> Result<ArbInt> {
    s.trim().parse::<BigInt>().map_err(|_| Error::Parse {
        format,
        message: format!("`{s}` is not a decimal integer"),
    })
}

fn check_sums(format: &'static str, t: &Triangle, declared: &[ArbInt]) -> Result<()> {
    let actual = sums(t);
    if actual != declared {
        return Err(Error::Parse {
            format,
            message: "declared row sums do not match the cells".into(),
        });
    }
    Ok(())
}

pub fn parse_triangle_json(text: &str) -> Result<Triangle> {
    let doc: TriangleJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        format: "json",
        message: e.to_string(),
    })?;
    let rows = doc
        .rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| parse_big("json", c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let declared = doc
        .sums
        .iter()
        .map(|c| parse_big("json", c))
        .collect::<Result<Vec<_>>>()?;
    let t = Triangle::from_rows(
        TriangleParams::new(doc.p, doc.n_max)?,
        doc.method.parse()?,
        rows,
    )?;
    check_sums("json", &t, &declared)?;
    Ok(t)
}

/// CSV does not record `p` or the method, so the caller supplies them.
pub fn parse_triangle_csv(text: &str, p: u32, method: Method) -> Result<Triangle> {
    let malformed = |message: String| Error::Parse {
        format: "csv",
        message,
    };
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| malformed("empty input".into()))?;
    let width = header.split(',').count();
    if width < 3 || !header.starts_with("n,") || !header.ends_with(",sum") {
        return Err(malformed(format!("bad header `{header}`")));
    }
    let n_max = width - 3;
    let mut rows = Vec::new();
    let mut declared = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != width || fields[0].trim() != i.to_string() {
            return Err(malformed(format!("bad row `{line}`")));
        }
        let row = fields[1..=i + 1]
            .iter()
            .map(|c| parse_big("csv", c))
            .collect::<Result<Vec<_>>>()?;
        if fields[i + 2..width - 1]
            .iter()
            .any(|c| !c.trim().is_empty())
        {
            return Err(malformed(format!("row {i} has cells beyond the diagonal")));
        }
        rows.push(row);
        declared.push(parse_big("csv", fields[width - 1])?);
    }
    let t = Triangle::from_rows(TriangleParams::new(p, n_max)?, method, rows)?;
    check_sums("csv", &t, &declared)?;
    Ok(t)
}

/// `{1:7, 2:4, 3:1}`.
pub fn format_histogram(hist: &BTreeMap<usize, ArbInt>) -> String {
    let parts: Vec<String> = hist.iter().map(|(b, c)| format!("{b}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Canonical notation: `[1 4][2 3]` for a plain diagram, `P1/P2` for a
/// double partition.
pub fn object_notation(family: Family, d: &DoublePartition) -> String {
    match family {
        Family::Partitions | Family::Matchings => d.p1().to_string(),
        Family::DoublePartitions | Family::MatchingDoubles => d.to_string(),
    }
}

#[derive(Serialize)]
struct EnumerationEntry {
    object: String,
    boxes: usize,
}

#[derive(Serialize)]
struct EnumerationJson<'a> {
    family: &'a str,
    n: usize,
    count: usize,
    objects: Vec<EnumerationEntry>,
    histogram: BTreeMap<String, String>,
}

/// One object per line with its box count, then the histogram.
pub fn render_enumeration(
    family: Family,
    n: usize,
    diagrams: &[DoublePartition],
    hist: &BTreeMap<usize, ArbInt>,
    format: OutputFormat,
) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Table => {
            let width = diagrams
                .iter()
                .map(|d| object_notation(family, d).len())
                .max()
                .unwrap_or(0)
                .max("object".len());
            let _ = writeln!(out, "{:<width$}  boxes", "object");
            for d in diagrams {
                let _ = writeln!(
                    out,
                    "{:<width$}  {}",
                    object_notation(family, d),
                    d.box_count()
                );
            }
            let _ = writeln!(out, "histogram {}", format_histogram(hist));
        }
        OutputFormat::Csv => {
            out.push_str("object,boxes\n");
            for d in diagrams {
                let _ = writeln!(out, "{},{}", object_notation(family, d), d.box_count());
            }
            let _ = writeln!(
                out,
                "histogram,{}",
                format_histogram(hist).replace(", ", " ")
            );
        }
        OutputFormat::Json => {
            let doc = EnumerationJson {
                family: family.as_str(),
                n,
                count: diagrams.len(),
                objects: diagrams
                    .iter()
                    .map(|d| EnumerationEntry {
                        object: object_notation(family, d),
                        boxes: d.box_count(),
                    })
                    .collect(),
                histogram: hist
                    .iter()
                    .map(|(b, c)| (b.to_string(), c.to_string()))
                    .collect(),
            };
            out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::box_distribution;
    use crate::partition::enumerate_family;
    use crate::triangle::{build, triangle_convolution};

    fn t(p: u32, n_max: usize) -> Triangle {
        triangle_convolution(TriangleParams::new(p, n_max).unwrap())
    }

    #[test]
    fn csv_layout() {
        let csv = triangle_csv(&t(3, 3));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,k0,k1,k2,k3,sum");
        assert_eq!(lines[1], "0,1,,,,1");
        assert_eq!(lines[4], "3,1,4,7,0,12");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let json = triangle_json(&t(10, 30));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["p"], 10);
        assert_eq!(v["method"], "convolution");
        assert!(v["rows"][30][29].is_string());
        assert!(v["sums"][30].is_string());
    }

    #[test]
    fn round_trips() {
        for method in Method::ALL {
            let tri = build(TriangleParams::new(7, 25).unwrap(), method).unwrap();
            assert_eq!(parse_triangle_json(&triangle_json(&tri)).unwrap(), tri);
            assert_eq!(
                parse_triangle_csv(&triangle_csv(&tri), 7, method).unwrap(),
                tri
            );
        }
    }

    #[test]
    fn parsers_reject_tampering() {
        let csv = triangle_csv(&t(3, 3)).replace("3,1,4,7,0,12", "3,1,4,7,0,13");
        assert!(parse_triangle_csv(&csv, 3, Method::Convolution).is_err());
        let json = triangle_json(&t(2, 2))
            .replace("\"closed-form\"", "x")
            .replace("\"convolution\"", "\"bogus\"");
        assert!(parse_triangle_json(&json).is_err());
        assert!(parse_triangle_csv("", 2, Method::Convolution).is_err());
    }

    #[test]
    fn table_layout_for_order_one() {
        let table = triangle_table(&t(1, 3));
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[0], "n\\k | 0 1 2 3 | sum");
        assert_eq!(lines[2], "  0 | 1       |   1");
        assert_eq!(lines[5], "  3 | 1 0 0 0 |   1");
    }

    #[test]
    fn enumeration_listing() {
        let ds = enumerate_family(Family::Matchings, 2).unwrap();
        let hist = box_distribution(2, Family::Matchings).unwrap();
        let text = render_enumeration(Family::Matchings, 2, &ds, &hist, OutputFormat::Table);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "[1 2][3 4]  2");
        assert_eq!(lines[2], "[1 4][2 3]  1");
        assert_eq!(lines[3], "histogram {1:1, 2:1}");

        let csv = render_enumeration(Family::Matchings, 2, &ds, &hist, OutputFormat::Csv);
        assert!(csv.starts_with("object,boxes\n[1 2][3 4],2\n"));
        let json = render_enumeration(Family::Matchings, 2, &ds, &hist, OutputFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["count"], 2);
        assert_eq!(v["histogram"]["1"], "1");
    }
}
