//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the library's arithmetic: every value is computed
//! from its definition by the most direct method available.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// f0 from its definition, with floor(log2) taken from the bit length.
pub fn f0_oracle(n: u64) -> BigInt {
    fn floor_log2(x: u64) -> u64 {
        63 - x.leading_zeros() as u64
    }
    if n <= 52 {
        assert!(
            n >= 2 && n.is_multiple_of(2),
            "f0 oracle outside its domain: {n}"
        );
        return BigInt::from(n / 2 + 1);
    }
    let s = floor_log2(n) + floor_log2(n + 2) - 2;
    let factor = (BigInt::one() << s as usize) - 1;
    factor * f0_oracle(2 * ((3 * n - 4) / 8))
}

/// Enclosure of -ln(1 - 1/q) = sum_{k >= 1} 1/(k q^k) from `terms` terms.
/// The tail is at most 1/((N+1) q^N (q-1)).
pub fn mercator_enclosure(q: u64, terms: u32) -> (BigRational, BigRational) {
    let mut sum = BigRational::zero();
    let mut power = BigInt::one();
    for k in 1..=terms {
        power *= q;
        sum += BigRational::new(BigInt::one(), BigInt::from(k) * &power);
    }
    let tail = BigRational::new(
        BigInt::one(),
        BigInt::from(terms + 1) * &power * BigInt::from(q - 1),
    );
    let hi = &sum + tail;
    (sum, hi)
}

/// ln 2 = -ln(1 - 1/2).
pub fn ln2_oracle(terms: u32) -> (BigRational, BigRational) {
    mercator_enclosure(2, terms)
}

/// ln(4/3) = -ln(1 - 1/4).
pub fn ln_four_thirds_oracle(terms: u32) -> (BigRational, BigRational) {
    mercator_enclosure(4, terms)
}

/// Largest minimum weight of a binary code of length m and dimension r, for
/// every m <= m_max, found by exhaustive enumeration.
///
/// A binary linear code is determined up to coordinate permutation (which
/// preserves weights) by the multiset of columns of a generator matrix. The
/// weight of the codeword u G is the number of columns c with <u, c> = 1.
/// Zero columns only lengthen a code, so they never help; a generator of
/// rank below r yields a zero codeword and is skipped (minimum weight 0).
/// Entry m of the result is 0 when no code of full rank exists.
pub fn max_min_weight(r: u32, m_max: usize) -> Vec<u32> {
    assert!((1..=4).contains(&r));
    let messages = (1u32 << r) - 1;
    let mut best = vec![0u32; m_max + 1];
    let mut weights = vec![0u32; messages as usize + 1];
    fn rec(
        first: u32,
        depth: usize,
        messages: u32,
        m_max: usize,
        weights: &mut Vec<u32>,
        best: &mut Vec<u32>,
    ) {
        if depth == m_max {
            return;
        }
        for col in first..=messages {
            for u in 1..=messages {
                weights[u as usize] += (u & col).count_ones() & 1;
            }
            let d = (1..=messages).map(|u| weights[u as usize]).min().unwrap();
            if d > best[depth + 1] {
                best[depth + 1] = d;
            }
            rec(col, depth + 1, messages, m_max, weights, best);
            for u in 1..=messages {
                weights[u as usize] -= (u & col).count_ones() & 1;
            }
        }
    }
    rec(1, 0, messages, m_max, &mut weights, &mut best);
    best
}

/// sum_{i < r} ceil(w / 2^i), term by term.
pub fn griesmer_oracle(r: u32, w: u64) -> u64 {
    (0..r).map(|i| w.div_ceil(1u64 << i)).sum()
}

/// chi of SO(p+m)/SO(p)xSO(m) as twice the Euler characteristic of the
/// unoriented Grassmannian, C(floor(n/2), floor(p/2)) when p m is even.
pub fn oriented_grassmannian_chi(p: u32, m: u32) -> BigInt {
    let n = p + m;
    if (p * m) % 2 == 1 {
        return BigInt::zero();
    }
    let (top, k) = (n / 2, p / 2);
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(top - i) / BigInt::from(i + 1);
    }
    c * 2
}
