//! Construction of the triangles `T^p(n, k)`.
//!
//! Three constructions are provided and are expected to agree cell for cell:
//!
//! - [`triangle_convolution`]: each cell is a binomially weighted sum over the
//!   previous row, `T(n,k) = sum_{j<=k} C(k-j+p-2, p-2) T(n-1, j)`.
//! - [`triangle_alternating`]: each cell is the cell above plus a signed
//!   combination of the `p - 1` cells to its left in the same row.
//! - [`triangle_closed_form`]: every cell evaluated independently from
//!   `(p-1)(n-k) / ((p-1)n+k) * C((p-1)n+k, k)`.
//!
//! In all cases `T(0,0) = 1` and `T(n,n) = 0` for `n > 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, exact_div};
use crate::error::{Error, Result};
use crate::ArbInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleParams {
    p: u32,
    n_max: usize,
}

impl TriangleParams {
    pub fn new(p: u32, n_max: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidParams("p must be at least 1".into()));
        }
        Ok(Self { p, n_max })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }
}

/// Which construction produced a [`Triangle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Convolution,
    Alternating,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Convolution, Method::Alternating, Method::ClosedForm];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Convolution => "convolution",
            Method::Alternating => "alternating",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "convolution" => Ok(Method::Convolution),
            "alternating" => Ok(Method::Alternating),
            "closed-form" => Ok(Method::ClosedForm),
            other => Err(Error::InvalidParams(format!("unknown method `{other}`"))),
        }
    }
}

/// Dense lower-triangular array of exact cells, row `n` holding `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    params: TriangleParams,
    rows: Vec<Vec<ArbInt>>,
    method: Method,
}

impl Triangle {
    /// Assembles a triangle from explicit rows, checking the shape and the
    /// boundary conditions `T(0,0) = 1`, `T(n,n) = 0`.
    pub fn from_rows(
        params: TriangleParams,
        method: Method,
        rows: Vec<Vec<ArbInt>>,
    ) -> Result<Self> {
        if rows.len() != params.n_max + 1 {
            return Err(Error::InvalidParams(format!(
                "expected {} rows, got {}",
                params.n_max + 1,
                rows.len()
            )));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::InvalidParams(format!(
                    "row {n} has {} cells, expected {}",
                    row.len(),
                    n + 1
                )));
            }
            let diagonal_ok = if n == 0 {
                row[0].is_one()
            } else {
                row[n].is_zero()
            };
            if !diagonal_ok {
                return Err(Error::InvalidParams(format!(
                    "row {n} violates T(n,n) boundary"
                )));
            }
        }
        Ok(Self {
            params,
            rows,
            method,
        })
    }

    pub fn params(&self) -> TriangleParams {
        self.params
    }

    pub fn p(&self) -> u32 {
        self.params.p
    }

    pub fn n_max(&self) -> usize {
        self.params.n_max
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn rows(&self) -> &[Vec<ArbInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Result<&[ArbInt]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or(Error::RowOutOfRange {
                n,
                n_max: self.params.n_max,
            })
    }

    /// Cell `T(n,k)`, or `None` outside the stored triangle.
    pub fn get(&self, n: usize, k: usize) -> Option<&ArbInt> {
        self.rows.get(n).and_then(|row| row.get(k))
    }

    /// Same cells, ignoring which method produced them.
    pub fn same_cells(&self, other: &Triangle) -> bool {
        self.params == other.params && self.rows == other.rows
    }

    pub fn row_sum(&self, n: usize) -> Result<ArbInt> {
        Ok(self.row(n)?.iter().sum())
    }

    /// `sum_k (-1)^(n+k+1) T(n,k)`.
    pub fn signed_row_sum(&self, n: usize) -> Result<ArbInt> {
        let row = self.row(n)?;
        Ok(row
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (k, cell)| {
                if (n + k + 1).is_multiple_of(2) {
                    acc + cell
                } else {
                    acc - cell
                }
            }))
    }
}

/// Free-function forms mirroring the triangle methods.
pub fn row_sum(t: &Triangle, n: usize) -> Result<ArbInt> {
    t.row_sum(n)
}

pub fn signed_row_sum(t: &Triangle, n: usize) -> Result<ArbInt> {
    t.signed_row_sum(n)
}

pub fn triangle_convolution(params: TriangleParams) -> Triangle {
    let p = i64::from(params.p);
    // weights[d] = C(d + p - 2, p - 2) for d = k - j
    let weights: Vec<ArbInt> = (0..=params.n_max as i64)
        .map(|d| binomial(d + p - 2, p - 2))
        .collect();

    let mut rows: Vec<Vec<ArbInt>> = Vec::with_capacity(params.n_max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=params.n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..n {
            let cell = (0..=k).fold(BigInt::zero(), |acc, j| acc + &weights[k - j] * &prev[j]);
            row.push(cell);
        }
        row.push(BigInt::zero());
        rows.push(row);
    }
    Triangle {
        params,
        rows,
        method: Method::Convolution,
    }
}

pub fn triangle_alternating(params: TriangleParams) -> Triangle {
    let p = i64::from(params.p);
    // signed[j] = (-1)^(j-1) C(p-1, j) for j = 1..p-1
    let signed: Vec<(usize, ArbInt)> = (1..p)
        .map(|j| {
            let c = binomial(p - 1, j);
            (j as usize, if j % 2 == 1 { c } else { -c })
        })
        .collect();

    let mut rows: Vec<Vec<ArbInt>> = Vec::with_capacity(params.n_max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=params.n_max {
        let mut row: Vec<ArbInt> = Vec::with_capacity(n + 1);
        for k in 0..n {
            let mut cell = rows[n - 1][k].clone();
            // cells at negative k read as zero and are never stored
            for (j, coeff) in signed.iter().take_while(|(j, _)| *j <= k) {
                cell += coeff * &row[k - j];
            }
            row.push(cell);
        }
        row.push(BigInt::zero());
        rows.push(row);
    }
    Triangle {
        params,
        rows,
        method: Method::Alternating,
    }
}

/// `T^p(n,k)` from the closed form, with the multiplication done before the
/// single checked division.
///
/// Where the denominator `(p-1)n + k` vanishes (the apex `(0,0)`, and the
/// whole `k = 0` column when `p = 1`) the cell is 1.
pub fn triangle_closed_form_cell(p: u32, n: usize, k: usize) -> Result<ArbInt> {
    if p == 0 {
        return Err(Error::InvalidParams("p must be at least 1".into()));
    }
    if k > n {
        return Err(Error::CellOutOfRange { n, k });
    }
    let q = i64::from(p - 1);
    let (n, k) = (n as i64, k as i64);
    let denominator = q * n + k;
    if denominator == 0 {
        return Ok(BigInt::one());
    }
    let numerator = BigInt::from(q * (n - k)) * binomial(denominator, k);
    exact_div(&numerator, &BigInt::from(denominator), "closed form")
}

pub fn triangle_closed_form(params: TriangleParams) -> Result<Triangle> {
    let rows = (0..=params.n_max)
        .map(|n| {
            (0..=n)
                .map(|k| triangle_closed_form_cell(params.p, n, k))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangle {
        params,
        rows,
        method: Method::ClosedForm,
    })
}

/// Builds the triangle with the requested construction.
pub fn build(params: TriangleParams, method: Method) -> Result<Triangle> {
    match method {
        Method::Convolution => Ok(triangle_convolution(params)),
        Method::Alternating => Ok(triangle_alternating(params)),
        Method::ClosedForm => triangle_closed_form(params),
    }
}
