//! Exact counting sequences used as ground truth: Catalan numbers, the West
//! two-stack-sortable count 2(3n)!/((n+1)!(2n+1)!), and the Baxter numbers.
//!
//! Everything here is exact big-integer arithmetic; a division that leaves a
//! remainder is an arithmetic bug, not a rounding, and panics.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// n! as a big integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = exact_div(acc * BigUint::from(n - j), &BigUint::from(j + 1));
    }
    acc
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let r = &num % den;
    assert!(r.is_zero(), "inexact division: remainder {r} by {den}");
    num / den
}

/// Cat_n = C(2n, n) / (n + 1), for n >= 1.
pub fn catalan(n: usize) -> BigUint {
    assert!(n >= 1);
    exact_div(binomial(2 * n, n), &BigUint::from(n + 1))
}

/// 2 (3n)! / ((n+1)! (2n+1)!), the number of two-stack-sortable permutations
/// of size n, for n >= 1.
pub fn west_two_stack(n: usize) -> BigUint {
    assert!(n >= 1);
    let num = BigUint::from(2u32) * factorial(3 * n);
    exact_div(num, &(factorial(n + 1) * factorial(2 * n + 1)))
}

/// b_n = 2 / (n (n+1)^2) * sum_{k=1}^{n} C(n+1, k-1) C(n+1, k) C(n+1, k+1),
/// the n-th Baxter number, for n >= 1.
pub fn baxter(n: usize) -> BigUint {
    assert!(n >= 1);
    let mut sum = BigUint::zero();
    for k in 1..=n {
        sum += binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1);
    }
    let den = BigUint::from(n) * BigUint::from(n + 1) * BigUint::from(n + 1);
    exact_div(BigUint::from(2u32) * sum, &den)
}
