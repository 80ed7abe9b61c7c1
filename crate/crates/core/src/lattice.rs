//! Brute-force counting of constrained lattice paths.
//!
//! Paths use unit east `(1,0)` and north `(0,1)` steps from `(0,0)` to
//! `((p-1)n - 1, k)`. The constraint relating each visited point to the line
//! `x = (p-1)y` is a [`Convention`]; [`PATH_CONVENTION`] is the one that
//! reproduces the closed form for `T^p(n,k)`: every point on the path,
//! endpoints included, satisfies `x >= (p-1)y`.
//!
//! Counting is a dynamic program over lattice points and shares no code with
//! the triangle module.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ArbInt;

/// Relation required between `x` and `(p-1)y` at a constrained point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    LessEq,
    Greater,
    GreaterEq,
}

impl Relation {
    pub const ALL: [Relation; 4] = [
        Relation::Less,
        Relation::LessEq,
        Relation::Greater,
        Relation::GreaterEq,
    ];

    fn holds(self, x: u64, line: u64) -> bool {
        match self {
            Relation::Less => x < line,
            Relation::LessEq => x <= line,
            Relation::Greater => x > line,
            Relation::GreaterEq => x >= line,
        }
    }
}

/// Which points of the path the relation is enforced on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    AllPoints,
    InteriorOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Convention {
    pub relation: Relation,
    pub scope: Scope,
}

impl Convention {
    /// All eight relation/scope combinations.
    pub fn candidates() -> Vec<Convention> {
        Relation::ALL
            .into_iter()
            .flat_map(|relation| {
                [Scope::AllPoints, Scope::InteriorOnly]
                    .into_iter()
                    .map(move |scope| Convention { relation, scope })
            })
            .collect()
    }
}

/// Weak inequality `x >= (p-1)y` at every point, endpoints included.
pub const PATH_CONVENTION: Convention = Convention {
    relation: Relation::GreaterEq,
    scope: Scope::AllPoints,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathCountQuery {
    p: u32,
    n: usize,
    k: usize,
}

impl PathCountQuery {
    pub fn new(p: u32, n: usize, k: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidParams(
                "lattice paths need p >= 2; p = 1 has no valid target".into(),
            ));
        }
        if n == 0 {
            return Err(Error::InvalidParams("lattice paths need n >= 1".into()));
        }
        if k > n {
            return Err(Error::CellOutOfRange { n, k });
        }
        Ok(Self { p, n, k })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `((p-1)n - 1, k)`.
    pub fn target(&self) -> (u64, u64) {
        (u64::from(self.p - 1) * self.n as u64 - 1, self.k as u64)
    }
}

pub fn count_constrained_paths(q: &PathCountQuery) -> ArbInt {
    count_paths_with(q, PATH_CONVENTION)
}

pub fn count_paths_with(q: &PathCountQuery, convention: Convention) -> ArbInt {
    BigInt::from(
        path_table(q, convention)
            .pop()
            .and_then(|mut r| r.pop())
            .unwrap_or_default(),
    )
}

/// Full DP table `table[y][x]` of path counts from the origin.
pub fn path_table(q: &PathCountQuery, convention: Convention) -> Vec<Vec<BigUint>> {
    let (tx, ty) = q.target();
    let slope = u64::from(q.p - 1);
    let allowed = |x: u64, y: u64| {
        let endpoint = (x, y) == (0, 0) || (x, y) == (tx, ty);
        (convention.scope == Scope::InteriorOnly && endpoint)
            || convention.relation.holds(x, slope * y)
    };

    let width = tx as usize + 1;
    let mut table: Vec<Vec<BigUint>> = Vec::with_capacity(ty as usize + 1);
    for y in 0..=ty {
        let mut row: Vec<BigUint> = Vec::with_capacity(width);
        for x in 0..=tx {
            let count = if !allowed(x, y) {
                BigUint::zero()
            } else if x == 0 && y == 0 {
                BigUint::one()
            } else {
                let from_west = if x > 0 {
                    row[x as usize - 1].clone()
                } else {
                    BigUint::zero()
                };
                let from_south = if y > 0 {
                    table[y as usize - 1][x as usize].clone()
                } else {
                    BigUint::zero()
                };
                from_west + from_south
            };
            row.push(count);
        }
        table.push(row);
    }
    table
}

/// Returns every candidate convention that reproduces `reference(p, n, k)`
/// on `p` in `orders`, `1 <= n <= n_max`, `0 <= k <= n`.
pub fn calibrate<F>(orders: &[u32], n_max: usize, reference: F) -> Vec<Convention>
where
    F: Fn(u32, usize, usize) -> ArbInt,
{
    Convention::candidates()
        .into_iter()
        .filter(|&convention| {
            orders.iter().all(|&p| {
                (1..=n_max).all(|n| {
                    (0..=n).all(|k| {
                        let q = PathCountQuery::new(p, n, k).expect("calibration grid is valid");
                        count_paths_with(&q, convention) == reference(p, n, k)
                    })
                })
            })
        })
        .collect()
}
