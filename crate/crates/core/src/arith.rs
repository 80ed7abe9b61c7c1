//! Exact binomial coefficients and Fuss-Catalan numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ArbInt;

/// Binomial coefficient with the truncated convention used by the triangle
/// recurrences.
///
/// Returns zero for `k < 0`, for `0 <= n < k`, and for `n < 0 <= k`. The one
/// exception is `binomial(-1, -1) = 1`, which is what makes the convolution
/// weight `binomial(k - j - 1, -1)` at order 1 select exactly the `j = k` term.
pub fn binomial(n: i64, k: i64) -> ArbInt {
    if k == -1 {
        return if n == -1 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    falling_ratio(n, k.min(n - k))
}

/// Binomial coefficient `n (n-1) ... (n-k+1) / k!` for any integer `n`,
/// zero for `k < 0`. Agrees with [`binomial`] whenever `n >= 0`.
pub fn falling_binomial(n: i64, k: i64) -> ArbInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        if k > n {
            return BigInt::zero();
        }
        return falling_ratio(n, k.min(n - k));
    }
    // (-m choose k) = (-1)^k (m + k - 1 choose k)
    let m = -n;
    let magnitude = falling_ratio(m + k - 1, k);
    if k % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

// Product of k consecutive integers ending at n, divided by k!. Each partial
// quotient is itself a binomial coefficient, so every division is exact.
fn falling_ratio(n: i64, k: i64) -> ArbInt {
    debug_assert!(0 <= k && k <= n);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Divides and fails unless the remainder is zero.
pub(crate) fn exact_div(
    numerator: &ArbInt,
    denominator: &ArbInt,
    context: &'static str,
) -> Result<ArbInt> {
    let (q, r) = numerator.div_rem(denominator);
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            context,
            numerator: numerator.clone(),
            denominator: denominator.clone(),
        });
    }
    Ok(q)
}

/// The Fuss-Catalan number `binomial(pn + 1, n) / (pn + 1)`.
pub fn fuss_catalan(p: u32, n: usize) -> Result<ArbInt> {
    if p == 0 {
        return Err(Error::InvalidParams("p must be at least 1".into()));
    }
    let top = i64::from(p) * n as i64 + 1;
    exact_div(&binomial(top, n as i64), &BigInt::from(top), "fuss_catalan")
}

/// Checks `C(m+h, h) = sum_{r=1}^{h+1} (-1)^(r-1) C(h+1, r) C(m+h-r, h)`.
///
/// At `m = 0` the last term has upper index `-1`, so this uses
/// [`falling_binomial`]; the truncated [`binomial`] would zero it out.
pub fn verify_binomial_identity_e4(m: u32, h: u32) -> bool {
    let (m, h) = (i64::from(m), i64::from(h));
    let lhs = falling_binomial(m + h, h);
    let rhs = (1..=h + 1).fold(BigInt::zero(), |acc, r| {
        let term = falling_binomial(h + 1, r) * falling_binomial(m + h - r, h);
        if r % 2 == 1 {
            acc + term
        } else {
            acc - term
        }
    });
    lhs == rhs
}
