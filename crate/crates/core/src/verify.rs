//! Property sweeps behind `verify`. Each check reports pass/fail and, on
//! failure, the first counterexample.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{fuss_catalan, verify_binomial_identity_e4};
use crate::error::{Error, Result};
use crate::lattice::{calibrate, count_constrained_paths, PathCountQuery, PATH_CONVENTION};
use crate::partition::{box_distribution, enumerate_family, verify_f_recurrence, Family};
use crate::sequences::{check_signed_sums_detailed, p5_table_mismatches, reference};
use crate::triangle::{
    triangle_alternating, triangle_closed_form, triangle_closed_form_cell, triangle_convolution,
    Triangle, TriangleParams,
};

pub const DEFAULT_P_MAX: u32 = 10;
pub const DEFAULT_TRIANGLE_N_MAX: usize = 30;
pub const DEFAULT_PATH_N_MAX: usize = 6;
pub const DEFAULT_PARTITION_N_MAX: usize = 6;
/// Upper bound on `--n-max` for the partition scope.
pub const MAX_PARTITION_VERIFY_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Triangles,
    Paths,
    Partitions,
    Sequences,
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Scope::All),
            "triangles" => Ok(Scope::Triangles),
            "paths" => Ok(Scope::Paths),
            "partitions" => Ok(Scope::Partitions),
            "sequences" => Ok(Scope::Sequences),
            other => Err(Error::InvalidParams(format!("unknown scope `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    /// First counterexample when the check failed.
    pub failure: Option<String>,
}

impl CheckResult {
    fn from_first_failure(name: impl Into<String>, failure: Option<String>) -> Self {
        Self {
            name: name.into(),
            failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}", self.name),
            Some(why) => write!(f, "FAIL {}: {why}", self.name),
        }
    }
}

/// Runs every check in `scope`. `n_max = None` picks each sub-suite's default.
pub fn run(scope: Scope, p_max: u32, n_max: Option<usize>) -> Result<Vec<CheckResult>> {
    if p_max == 0 {
        return Err(Error::InvalidParams("p-max must be at least 1".into()));
    }
    if let Some(n) = n_max {
        if matches!(scope, Scope::Partitions | Scope::All) && n > MAX_PARTITION_VERIFY_N {
            return Err(Error::InvalidParams(format!(
                "partition checks are limited to n-max <= {MAX_PARTITION_VERIFY_N}"
            )));
        }
    }
    let mut out = Vec::new();
    if matches!(scope, Scope::All | Scope::Triangles) {
        out.extend(triangle_checks(
            p_max,
            n_max.unwrap_or(DEFAULT_TRIANGLE_N_MAX),
        )?);
    }
    if matches!(scope, Scope::All | Scope::Paths) {
        out.extend(path_checks(p_max, n_max.unwrap_or(DEFAULT_PATH_N_MAX))?);
    }
    if matches!(scope, Scope::All | Scope::Partitions) {
        out.extend(partition_checks(n_max.unwrap_or(DEFAULT_PARTITION_N_MAX))?);
    }
    if matches!(scope, Scope::All | Scope::Sequences) {
        out.extend(sequence_checks()?);
    }
    Ok(out)
}

fn first_cell_difference(a: &Triangle, b: &Triangle) -> Option<String> {
    for (n, (ra, rb)) in a.rows().iter().zip(b.rows()).enumerate() {
        for (k, (x, y)) in ra.iter().zip(rb).enumerate() {
            if x != y {
                return Some(format!(
                    "({n},{k}): {} gives {x}, {} gives {y}",
                    a.method(),
                    b.method()
                ));
            }
        }
    }
    None
}

pub fn triangle_checks(p_max: u32, n_max: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for p in 1..=p_max {
        let params = TriangleParams::new(p, n_max)?;
        let conv = triangle_convolution(params);
        let alt = triangle_alternating(params);
        let closed = triangle_closed_form(params)?;

        let diff =
            first_cell_difference(&conv, &alt).or_else(|| first_cell_difference(&conv, &closed));
        out.push(CheckResult::from_first_failure(
            format!("p={p}: convolution = alternating = closed form (n <= {n_max})"),
            diff,
        ));

        let mut bad_sum = None;
        for n in 0..=n_max {
            let expected = fuss_catalan(p, n)?;
            let actual = conv.row_sum(n)?;
            if actual != expected {
                bad_sum = Some(format!("n={n}: row sum {actual}, Fuss-Catalan {expected}"));
                break;
            }
        }
        out.push(CheckResult::from_first_failure(
            format!("p={p}: row sums are Fuss-Catalan numbers"),
            bad_sum,
        ));

        let mut bad_cell = None;
        'rows: for (n, row) in alt.rows().iter().enumerate() {
            if n > 0 && (row[0] != BigInt::from(1) || !row[n].is_zero()) {
                bad_cell = Some(format!("n={n}: boundary cells {} and {}", row[0], row[n]));
                break;
            }
            for (k, cell) in row.iter().enumerate() {
                if cell.is_negative() {
                    bad_cell = Some(format!("({n},{k}) = {cell}"));
                    break 'rows;
                }
            }
        }
        out.push(CheckResult::from_first_failure(
            format!("p={p}: boundary values and non-negativity"),
            bad_cell,
        ));
    }

    if p_max >= 2 {
        let t = triangle_convolution(TriangleParams::new(2, n_max)?);
        let mut bad = None;
        'outer: for n in 2..=n_max {
            for k in 1..n {
                let rhs = &t.rows()[n][k - 1] + &t.rows()[n - 1][k];
                if t.rows()[n][k] != rhs {
                    bad = Some(format!("({n},{k})"));
                    break 'outer;
                }
            }
        }
        out.push(CheckResult::from_first_failure(
            "p=2: T(n,k) = T(n,k-1) + T(n-1,k)",
            bad,
        ));
    }

    let e4_bad = (0..=12u32)
        .flat_map(|m| (0..=12u32).map(move |h| (m, h)))
        .find(|&(m, h)| !verify_binomial_identity_e4(m, h))
        .map(|(m, h)| format!("m={m} h={h}"));
    out.push(CheckResult::from_first_failure(
        "binomial alternating-sum identity, 0 <= m, h <= 12",
        e4_bad,
    ));
    Ok(out)
}

pub fn path_checks(p_max: u32, n_max: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let found = calibrate(&[2, 3, 4, 5], 4, |p, n, k| {
        triangle_closed_form_cell(p, n, k).expect("calibration grid is inside the triangle")
    });
    out.push(CheckResult::from_first_failure(
        "lattice path convention is uniquely calibrated",
        (found != [PATH_CONVENTION]).then(|| format!("matching conventions: {found:?}")),
    ));
    for p in 2..=p_max {
        let mut bad = None;
        'outer: for n in 1..=n_max {
            for k in 0..=n {
                let paths = count_constrained_paths(&PathCountQuery::new(p, n, k)?);
                let closed = triangle_closed_form_cell(p, n, k)?;
                if paths != closed {
                    bad = Some(format!("n={n} k={k}: {paths} paths, closed form {closed}"));
                    break 'outer;
                }
            }
        }
        out.push(CheckResult::from_first_failure(
            format!("p={p}: lattice paths = closed form (n <= {n_max})"),
            bad,
        ));
    }
    Ok(out)
}

pub fn partition_checks(n_max: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for family in [
        Family::Partitions,
        Family::Matchings,
        Family::DoublePartitions,
        Family::MatchingDoubles,
    ] {
        let order = family.triangle_order().unwrap_or(2);
        let mut count_bad = None;
        let mut hist_bad = None;
        for n in 0..=n_max {
            let diagrams = enumerate_family(family, n)?;
            let expected = fuss_catalan(order, n)?;
            if count_bad.is_none() && BigInt::from(diagrams.len()) != expected {
                count_bad = Some(format!(
                    "n={n}: {} objects, expected {expected}",
                    diagrams.len()
                ));
            }
            if let (Some(p), true, None) = (family.triangle_order(), n >= 1, &hist_bad) {
                let hist = box_distribution(n, family)?;
                let row = triangle_convolution(TriangleParams::new(p, n)?);
                for b in 0..=n {
                    let got = hist.get(&b).cloned().unwrap_or_default();
                    let want = &row.rows()[n][n - b];
                    if &got != want {
                        hist_bad = Some(format!(
                            "n={n}, {b} boxes: {got}, T^{p}({n},{}) = {want}",
                            n - b
                        ));
                        break;
                    }
                }
            }
        }
        out.push(CheckResult::from_first_failure(
            format!("{family}: count = A^{order}_n (n <= {n_max})"),
            count_bad,
        ));
        if let Some(p) = family.triangle_order() {
            out.push(CheckResult::from_first_failure(
                format!("{family}: box histogram = T^{p}(n, n-b) (n <= {n_max})"),
                hist_bad,
            ));
        }
    }
    if n_max >= 1 {
        out.push(CheckResult::from_first_failure(
            format!("box-count recurrence matches brute force (n <= {n_max})"),
            (!verify_f_recurrence(n_max)?).then(|| "table differs from histograms".to_string()),
        ));
    }
    Ok(out)
}

pub fn sequence_checks() -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for p in reference().orders() {
        let mismatches = check_signed_sums_detailed(p)?;
        out.push(CheckResult::from_first_failure(
            format!("p={p}: signed row sums n = 1..20 match reference"),
            mismatches.first().map(ToString::to_string),
        ));
    }
    let n_max = reference()
        .p5_triangle()
        .iter()
        .map(|r| r.n)
        .max()
        .unwrap_or(0);
    let t = triangle_convolution(TriangleParams::new(5, n_max)?);
    out.push(CheckResult::from_first_failure(
        "p=5 reference table cells and row sums",
        p5_table_mismatches(&t).first().map(ToString::to_string),
    ));
    Ok(out)
}
