//! Golden reference values and the checks that compare generated triangles
//! against them.
//!
//! The data lives in `data/` as plain text and is embedded at compile time.
//! `signed_sums.txt` holds one sequence per `p`: a header line
//! `p=<p> start=<n>` followed by a line of space-separated decimal integers.
//! `p5_triangle.txt` holds one row per line as `n: cells... | sum`. Lines
//! starting with `#` are comments.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::triangle::{triangle_alternating, triangle_convolution, Triangle, TriangleParams};
use crate::ArbInt;

const SIGNED_SUMS_TXT: &str = include_str!("../data/signed_sums.txt");
const P5_TRIANGLE_TXT: &str = include_str!("../data/p5_triangle.txt");

/// A named exact sequence whose first value sits at `start_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    name: String,
    start_index: i64,
    values: Vec<ArbInt>,
}

impl SequenceTable {
    pub fn new(name: impl Into<String>, start_index: i64, values: Vec<ArbInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParams("sequence has no values".into()));
        }
        Ok(Self {
            name: name.into(),
            start_index,
            values,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn start_index(&self) -> i64 {
        self.start_index
    }

    pub fn values(&self) -> &[ArbInt] {
        &self.values
    }

    /// `(index, value)` pairs.
    pub fn indexed(&self) -> impl Iterator<Item = (i64, &ArbInt)> {
        (self.start_index..).zip(self.values.iter())
    }
}

/// One printed row of the order-5 table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedRow {
    pub n: usize,
    pub cells: Vec<ArbInt>,
    pub sum: ArbInt,
}

#[derive(Debug, Clone)]
pub struct ReferenceData {
    signed_sums: BTreeMap<u32, SequenceTable>,
    p5_triangle: Vec<PrintedRow>,
}

impl ReferenceData {
    pub fn parse(signed_sums: &str, p5_triangle: &str) -> Result<Self> {
        Ok(Self {
            signed_sums: parse_signed_sums(signed_sums)?,
            p5_triangle: parse_p5_table(p5_triangle)?,
        })
    }

    pub fn signed_sums(&self, p: u32) -> Option<&SequenceTable> {
        self.signed_sums.get(&p)
    }

    pub fn orders(&self) -> impl Iterator<Item = u32> + '_ {
        self.signed_sums.keys().copied()
    }

    pub fn p5_triangle(&self) -> &[PrintedRow] {
        &self.p5_triangle
    }

    pub fn p5_cell_count(&self) -> usize {
        self.p5_triangle.iter().map(|r| r.cells.len()).sum()
    }
}

/// The embedded golden data.
pub fn reference() -> &'static ReferenceData {
    static DATA: OnceLock<ReferenceData> = OnceLock::new();
    DATA.get_or_init(|| {
        ReferenceData::parse(SIGNED_SUMS_TXT, P5_TRIANGLE_TXT)
            .expect("embedded reference data is well formed")
    })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_int(line: usize, s: &str) -> Result<ArbInt> {
    s.parse::<BigInt>().map_err(|_| Error::ReferenceData {
        line,
        message: format!("`{s}` is not a decimal integer"),
    })
}

fn parse_signed_sums(text: &str) -> Result<BTreeMap<u32, SequenceTable>> {
    let mut out = BTreeMap::new();
    let mut lines = content_lines(text);
    while let Some((line, header)) = lines.next() {
        let bad_header = || Error::ReferenceData {
            line,
            message: format!("expected `p=<p> start=<n>`, found `{header}`"),
        };
        let mut fields = header.split_whitespace();
        let p: u32 = fields
            .next()
            .and_then(|f| f.strip_prefix("p="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(bad_header)?;
        let start: i64 = fields
            .next()
            .and_then(|f| f.strip_prefix("start="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(bad_header)?;
        let (vline, body) = lines.next().ok_or(Error::ReferenceData {
            line,
            message: format!("sequence p={p} has no values line"),
        })?;
        let values = body
            .split_whitespace()
            .map(|s| parse_int(vline, s))
            .collect::<Result<Vec<_>>>()?;
        let table =
            SequenceTable::new(format!("signed sums p={p}"), start, values).map_err(|e| {
                Error::ReferenceData {
                    line: vline,
                    message: e.to_string(),
                }
            })?;
        if out.insert(p, table).is_some() {
            return Err(Error::ReferenceData {
                line,
                message: format!("duplicate sequence for p={p}"),
            });
        }
    }
    Ok(out)
}

fn parse_p5_table(text: &str) -> Result<Vec<PrintedRow>> {
    content_lines(text)
        .map(|(line, l)| {
            let malformed = || Error::ReferenceData {
                line,
                message: format!("expected `n: cells | sum`, found `{l}`"),
            };
            let (n, rest) = l.split_once(':').ok_or_else(malformed)?;
            let (cells, sum) = rest.split_once('|').ok_or_else(malformed)?;
            let n: usize = n.trim().parse().map_err(|_| malformed())?;
            let cells = cells
                .split_whitespace()
                .map(|s| parse_int(line, s))
                .collect::<Result<Vec<_>>>()?;
            if cells.is_empty() || cells.len() > n + 1 {
                return Err(malformed());
            }
            Ok(PrintedRow {
                n,
                cells,
                sum: parse_int(line, sum.trim())?,
            })
        })
        .collect()
}

/// A generated value that disagrees with the golden one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub p: u32,
    pub n: usize,
    /// `None` for row-level quantities (sums).
    pub k: Option<usize>,
    pub expected: ArbInt,
    pub actual: Option<ArbInt>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} n={}", self.p, self.n)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        write!(f, ": expected {}, got ", self.expected)?;
        match &self.actual {
            Some(a) => write!(f, "{a}"),
            None => f.write_str("nothing"),
        }
    }
}

/// Compares `signed_row_sum` of `t` against a golden sequence.
pub fn signed_sum_mismatches(t: &Triangle, golden: &SequenceTable) -> Vec<Mismatch> {
    golden
        .indexed()
        .filter_map(|(n, expected)| {
            let actual = usize::try_from(n)
                .ok()
                .and_then(|n| t.signed_row_sum(n).ok());
            (actual.as_ref() != Some(expected)).then(|| Mismatch {
                p: t.p(),
                n: n.max(0) as usize,
                k: None,
                expected: expected.clone(),
                actual,
            })
        })
        .collect()
}

/// Mismatches of the signed sums for order `p`, checked against both the
/// convolution and the alternating triangles.
pub fn check_signed_sums_detailed(p: u32) -> Result<Vec<Mismatch>> {
    let golden = reference()
        .signed_sums(p)
        .ok_or_else(|| Error::InvalidParams(format!("no reference sequence for p={p}")))?;
    let last = golden.start_index() + golden.values().len() as i64 - 1;
    let params = TriangleParams::new(p, last.max(0) as usize)?;
    let mut out = signed_sum_mismatches(&triangle_convolution(params), golden);
    out.extend(signed_sum_mismatches(&triangle_alternating(params), golden));
    Ok(out)
}

pub fn check_signed_sums(p: u32) -> bool {
    check_signed_sums_detailed(p).is_ok_and(|m| m.is_empty())
}

/// Compares a generated triangle with every printed cell and row sum.
pub fn p5_table_mismatches(t: &Triangle) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for row in reference().p5_triangle() {
        for (k, expected) in row.cells.iter().enumerate() {
            let actual = t.get(row.n, k);
            if actual != Some(expected) {
                out.push(Mismatch {
                    p: t.p(),
                    n: row.n,
                    k: Some(k),
                    expected: expected.clone(),
                    actual: actual.cloned(),
                });
            }
        }
        let actual = t.row_sum(row.n).ok();
        if actual.as_ref() != Some(&row.sum) {
            out.push(Mismatch {
                p: t.p(),
                n: row.n,
                k: None,
                expected: row.sum.clone(),
                actual,
            });
        }
    }
    out
}

pub fn check_p5_table() -> bool {
    let n_max = reference()
        .p5_triangle()
        .iter()
        .map(|r| r.n)
        .max()
        .unwrap_or(0);
    let params = TriangleParams::new(5, n_max).expect("p = 5 is valid");
    p5_table_mismatches(&triangle_convolution(params)).is_empty()
}
