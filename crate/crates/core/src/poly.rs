//! Dense signed integer polynomials, lowest degree first.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// `1 - t^d`.
pub(crate) fn one_minus_power(d: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); d + 1];
    p[0] += BigInt::one();
    p[d] -= BigInt::one();
    trim(&mut p);
    p
}

/// Exact quotient `num / den` over the integers, or `None` if the division
/// leaves a remainder or needs non-integer coefficients.
///
/// `den` must have a nonzero constant term.
pub(crate) fn div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    debug_assert!(den.first().is_some_and(|c| !c.is_zero()));
    let mut rem: Vec<BigInt> = num.to_vec();
    trim(&mut rem);
    if rem.is_empty() {
        return Some(Vec::new());
    }
    let mut den = den.to_vec();
    trim(&mut den);
    if rem.len() < den.len() {
        return None;
    }
    let qlen = rem.len() - den.len() + 1;
    let lead = &den[0];
    let mut quot = Vec::with_capacity(qlen);
    // Division from the low end; the constant term of den is the pivot.
    for i in 0..qlen {
        let c = &rem[i];
        if (c % lead).is_zero() {
            let q = c / lead;
            if !q.is_zero() {
                for (j, d) in den.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quot.push(q);
        } else {
            return None;
        }
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

pub(crate) fn is_nonnegative(p: &[BigInt]) -> bool {
    !p.iter().any(Signed::is_negative)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn divides_cyclotomic_style() {
        // (1 - t^3) / (1 - t) = 1 + t + t^2
        let q = div_exact(&one_minus_power(3), &one_minus_power(1)).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert_eq!(div_exact(&one_minus_power(3), &one_minus_power(2)), None);
        assert_eq!(div_exact(&p(&[2, 1]), &p(&[2])), None);
        assert_eq!(mul(&p(&[1, 1]), &p(&[1, -1])), p(&[1, 0, -1]));
    }
}
