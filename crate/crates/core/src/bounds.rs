//! Exact threshold arithmetic. Values grow quickly, so everything is in
//! arbitrary precision and only converted down when compared to sizes.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

pub fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

pub fn binom2(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    n * (n - 1u32) / 2u32
}

/// Ramsey threshold for c-closed graphs: any c-closed graph on at least
/// this many vertices has a clique of size `a` or an independent set of
/// size `b`. Zero when `a` or `b` is zero, since the empty set is both.
pub fn r_c(c: &BigUint, a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_zero() || b.is_zero() {
        return BigUint::zero();
    }
    let c1 = c - 1u32;
    let b1 = b - 1u32;
    let a1 = a - 1u32;
    c1 * binom2(&b1) + a1 * &b1 + 1u32
}

pub fn q_c(c: &BigUint, b: &BigUint) -> BigUint {
    2u32 * c * b * b + 2u32 * b
}

pub fn q1_c(c: &BigUint, a: &BigUint, b: &BigUint) -> BigUint {
    q_c(c, &r_c(c, a, b))
}

pub fn q2_c(c: &BigUint, a: &BigUint, b: &BigUint) -> BigUint {
    q1_c(c, a, &r_c(c, a, b))
}

/// Smallest integer `t` with `t ≥ m·x^{3/2}`, i.e. `t² ≥ m²x³`.
pub fn ceil_mul_pow_three_halves(m: &BigUint, x: &BigUint) -> BigUint {
    let target = m * m * x * x * x;
    let t = target.sqrt();
    if &t * &t == target {
        t
    } else {
        t + 1u32
    }
}

/// Non-isolated vertex count that forces an induced matching of size `b` in
/// a bipartite graph of maximum degree `delta`: `⌈6Δ^{3/2}b⌉ + 2Δb`.
pub fn dense_bipartite_threshold(delta: usize, b: usize) -> BigUint {
    let (d, b) = (big(delta), big(b));
    ceil_mul_pow_three_halves(&(6u32 * &b), &d) + 2u32 * d * b
}

/// `ρ = R_c(ck, k + 1)` for the dominating-set rules.
pub fn rho(c: usize, k: usize) -> BigUint {
    r_c(&big(c), &big(c * k), &big(k + 1))
}

/// Thresholds of the irredundant-set kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrsThresholds {
    pub alpha_prime: BigUint,
    pub alpha: BigUint,
    pub total: BigUint,
}

impl IrsThresholds {
    pub fn new(c: usize, k: usize) -> Self {
        let cb = big(c);
        let kb = big(k);
        let alpha_prime = ceil_mul_pow_three_halves(&(6u32 * &kb), &cb) + 2u32 * &cb * &kb + 1u32;
        Self::with_alpha_prime(c, k, alpha_prime)
    }

    pub fn with_alpha_prime(c: usize, k: usize, alpha_prime: BigUint) -> Self {
        let cb = big(c);
        let kb = big(k);
        let alpha = r_c(&cb, &alpha_prime, &kb);
        let total = r_c(&cb, &(&cb * &alpha + 1u32), &kb);
        IrsThresholds {
            alpha_prime,
            alpha,
            total,
        }
    }
}

/// Converts a threshold to `usize`, saturating at `usize::MAX`.
pub fn saturate(x: &BigUint) -> usize {
    x.to_usize().unwrap_or(usize::MAX)
}

/// `true` iff the size `n` reaches `threshold`.
pub fn reaches(n: usize, threshold: &BigUint) -> bool {
    &big(n) >= threshold
}

pub fn pow(base: usize, exp: usize) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}
