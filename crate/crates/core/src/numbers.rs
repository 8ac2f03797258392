//! Exact integer/rational utilities: factorials, binomials, Bernoulli
//! numbers, Euler polynomial values at zero, and integer composition
//! enumeration.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `B_0 .. B_n` with the `B_1 = -1/2` convention.
pub fn bernoulli_upto(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
        let mut sum = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            sum += BigRational::from(binomial(m as u64 + 1, k as u64)) * bk;
        }
        b.push(-sum / BigRational::from(BigInt::from(m as i64 + 1)));
    }
    b
}

/// Euler polynomial values `E_0(0) .. E_n(0)`.
///
/// `E_0(0) = 1` and `E_j(0) = -2 (2^{j+1} - 1) B_{j+1} / (j+1)` for `j >= 1`;
/// these are the coefficients of the Boole summation formula used for
/// alternating tails.
pub fn euler_at_zero_upto(n: usize) -> Vec<BigRational> {
    let bern = bernoulli_upto(n + 1);
    let mut e = Vec::with_capacity(n + 1);
    e.push(BigRational::one());
    for j in 1..=n {
        let pow = BigInt::from(2u8).pow(j as u32 + 1) - BigInt::one();
        let val = rat(-2, 1) * BigRational::from(pow) * &bern[j + 1]
            / BigRational::from(BigInt::from(j as i64 + 1));
        e.push(val);
    }
    e
}

/// All compositions of `total` into exactly `parts` positive integers,
/// in lexicographic order. The count is `C(total-1, parts-1)`.
pub fn compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if parts == 0 {
        return out;
    }
    if parts > total {
        return out;
    }
    let mut acc = vec![0u32; parts as usize];
    fn rec(remaining: u32, idx: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let left = acc.len() - idx;
        if left == 1 {
            acc[idx] = remaining;
            out.push(acc.clone());
            return;
        }
        // leave at least 1 for each later slot
        for v in 1..=(remaining - (left as u32 - 1)) {
            acc[idx] = v;
            rec(remaining - v, idx + 1, acc, out);
        }
    }
    rec(total, 0, &mut acc, &mut out);
    out
}
