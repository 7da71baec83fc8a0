//! Graded dimension series: Betti numbers indexed by real cohomological
//! degree, with the tensor (Kunneth) product as degree-wise convolution.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly;

/// Betti numbers `b_0, b_1, b_2, ...` of a space, finitely supported.
///
/// Trailing zeros are never stored, so derived equality is equality of
/// series. Odd degrees are kept even when they vanish: `CP^1` is `(1,0,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedDims {
    betti: Vec<BigUint>,
}

impl GradedDims {
    pub fn new(mut betti: Vec<BigUint>) -> Self {
        while betti.last().is_some_and(Zero::is_zero) {
            betti.pop();
        }
        GradedDims { betti }
    }

    pub fn from_u64s(betti: &[u64]) -> Self {
        Self::new(betti.iter().map(|&b| BigUint::from(b)).collect())
    }

    /// The zero series (cohomology of the empty space).
    pub fn zero() -> Self {
        GradedDims { betti: Vec::new() }
    }

    /// `(1)`, the cohomology of a point and the unit of [`tensor`](Self::tensor).
    pub fn one() -> Self {
        GradedDims {
            betti: vec![BigUint::one()],
        }
    }

    /// Spreads coefficients in `q = t^2` onto even real degrees.
    pub fn from_q_coefficients(q: Vec<BigUint>) -> Self {
        let mut betti = Vec::with_capacity(2 * q.len());
        for (i, c) in q.into_iter().enumerate() {
            if i > 0 {
                betti.push(BigUint::zero());
            }
            betti.push(c);
        }
        Self::new(betti)
    }

    pub(crate) fn from_signed_q(q: Vec<BigInt>) -> Option<Self> {
        let mut out = Vec::with_capacity(q.len());
        for c in q {
            match c.sign() {
                Sign::Minus => return None,
                _ => out.push(c.magnitude().clone()),
            }
        }
        Some(Self::from_q_coefficients(out))
    }

    pub fn betti(&self) -> &[BigUint] {
        &self.betti
    }

    /// Betti number in real degree `d`, zero beyond the support.
    pub fn get(&self, d: usize) -> BigUint {
        self.betti.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.betti.is_empty()
    }

    /// Highest degree with a nonzero entry.
    pub fn top_degree(&self) -> Option<usize> {
        self.betti.len().checked_sub(1)
    }

    /// Nonzero entries as `(degree, dimension)`.
    pub fn sparse(&self) -> Vec<(usize, &BigUint)> {
        self.betti
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .collect()
    }

    pub fn odd_degrees_vanish(&self) -> bool {
        self.betti.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Coefficients in `q = t^2`, when every odd degree vanishes.
    pub fn q_coefficients(&self) -> Option<Vec<BigUint>> {
        self.odd_degrees_vanish()
            .then(|| self.betti.iter().step_by(2).cloned().collect())
    }

    /// Degree-wise convolution.
    pub fn tensor(&self, other: &GradedDims) -> GradedDims {
        if self.is_zero() || other.is_zero() {
            return GradedDims::zero();
        }
        let mut out = vec![BigUint::zero(); self.betti.len() + other.betti.len() - 1];
        for (i, a) in self.betti.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.betti.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        GradedDims::new(out)
    }

    /// Tensor product of any number of series; the empty product is `(1)`.
    pub fn tensor_all<'a, I>(factors: I) -> GradedDims
    where
        I: IntoIterator<Item = &'a GradedDims>,
    {
        factors
            .into_iter()
            .fold(GradedDims::one(), |acc, f| acc.tensor(f))
    }

    /// Equality after trimming trailing zeros.
    pub fn equals(&self, other: &GradedDims) -> bool {
        self == other
    }

    /// `b_d = b_{D-d}` for `D` the top degree.
    pub fn is_palindromic(&self) -> bool {
        self.betti.iter().eq(self.betti.iter().rev())
    }

    /// Sum of all Betti numbers.
    pub fn total_dim(&self) -> BigUint {
        self.betti.iter().sum()
    }

    /// The series `q` with `q.tensor(den) == self` and nonnegative entries,
    /// if there is one.
    pub fn divide_exact(&self, den: &GradedDims) -> Result<Option<GradedDims>> {
        if den.betti.first().is_none_or(Zero::is_zero) {
            return Err(Error::ZeroConstantTerm);
        }
        let num = to_signed(&self.betti);
        let den = to_signed(&den.betti);
        let Some(q) = poly::div_exact(&num, &den) else {
            return Ok(None);
        };
        if !poly::is_nonnegative(&q) {
            return Ok(None);
        }
        Ok(Some(GradedDims::new(
            q.into_iter().map(|c| c.magnitude().clone()).collect(),
        )))
    }
}

fn to_signed(v: &[BigUint]) -> Vec<BigInt> {
    v.iter().map(|c| BigInt::from(c.clone())).collect()
}

impl Mul for &GradedDims {
    type Output = GradedDims;

    fn mul(self, rhs: &GradedDims) -> GradedDims {
        self.tensor(rhs)
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if self.betti.is_empty() {
            f.write_str("0")?;
        }
        for (i, b) in self.betti.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// Hilbert series of the polynomial algebra on even-degree generators,
/// truncated at `max_degree`.
pub fn free_algebra_series(generator_degrees: &[usize], max_degree: usize) -> Result<GradedDims> {
    if let Some(&g) = generator_degrees.iter().find(|&&g| g == 0 || g % 2 == 1) {
        return Err(Error::InvalidArgument(alloc::format!(
            "generator degree {g} must be positive and even"
        )));
    }
    let mut count = vec![BigUint::zero(); max_degree + 1];
    count[0] = BigUint::one();
    // Monomials counted one generator at a time, unbounded multiplicity.
    for &g in generator_degrees {
        for d in g..=max_degree {
            let prev = count[d - g].clone();
            count[d] += prev;
        }
    }
    Ok(GradedDims::new(count))
}

/// Expands `prod_r (1 - t^r) / prod_g (1 - t^g)`, which must be a
/// polynomial with nonnegative coefficients.
pub fn complete_intersection_series(
    generator_degrees: &[usize],
    relation_degrees: &[usize],
) -> Result<GradedDims> {
    if let Some(&g) = generator_degrees.iter().find(|&&g| g == 0) {
        return Err(Error::InvalidArgument(alloc::format!(
            "generator degree {g} must be positive"
        )));
    }
    if relation_degrees.contains(&0) {
        return Err(Error::NotCompleteIntersection(
            "a degree-0 relation kills the unit".into(),
        ));
    }
    let mut num = vec![BigInt::one()];
    for &r in relation_degrees {
        num = poly::mul(&num, &poly::one_minus_power(r));
    }
    for &g in generator_degrees {
        num = poly::div_exact(&num, &poly::one_minus_power(g)).ok_or_else(|| {
            Error::NotCompleteIntersection(alloc::format!(
                "1 - t^{g} does not divide the relation product"
            ))
        })?;
    }
    if !poly::is_nonnegative(&num) {
        return Err(Error::NotCompleteIntersection(
            "quotient has a negative coefficient".into(),
        ));
    }
    Ok(GradedDims::new(
        num.into_iter().map(|c| c.magnitude().clone()).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(b: &[u64]) -> GradedDims {
        GradedDims::from_u64s(b)
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(g(&[1, 0, 1]).tensor(&g(&[1, 0, 1])), g(&[1, 0, 2, 0, 1]));
        assert_eq!(
            g(&[1, 0, 1, 0, 2, 0, 1, 0, 1]).tensor(&g(&[1, 0, 2, 0, 1])),
            g(&[1, 0, 3, 0, 5, 0, 6, 0, 5, 0, 3, 0, 1])
        );
        let x = g(&[3, 1, 4, 1, 5]);
        assert_eq!(&x * &GradedDims::one(), x);
        assert!(x.tensor(&GradedDims::zero()).is_zero());
    }

    #[test]
    fn equality_ignores_trailing_zeros() {
        assert!(g(&[1, 0, 1]).equals(&g(&[1, 0, 1, 0])));
        assert!(!g(&[1, 0, 1]).equals(&g(&[1, 0, 2])));
    }

    #[test]
    fn palindromes() {
        assert!(g(&[1, 0, 1, 0, 2, 0, 1, 0, 1]).is_palindromic());
        assert!(!g(&[1, 0, 2, 0, 1, 0, 1]).is_palindromic());
        assert!(g(&[1]).is_palindromic());
    }

    #[test]
    fn total_dims() {
        assert_eq!(g(&[1, 0, 1, 0, 2, 0, 1, 0, 1]).total_dim(), BigUint::from(6u32));
        assert_eq!(
            g(&[1, 0, 3, 0, 5, 0, 6, 0, 5, 0, 3, 0, 1]).total_dim(),
            BigUint::from(24u32)
        );
    }

    #[test]
    fn divide_examples() {
        let f4 = g(&[1, 0, 3, 0, 5, 0, 6, 0, 5, 0, 3, 0, 1]);
        let cp1_sq = g(&[1, 0, 2, 0, 1]);
        assert_eq!(
            f4.divide_exact(&cp1_sq).unwrap(),
            Some(g(&[1, 0, 1, 0, 2, 0, 1, 0, 1]))
        );
        assert_eq!(f4.divide_exact(&g(&[1, 0, 3])).unwrap(), None);
        assert_eq!(f4.divide_exact(&f4).unwrap(), Some(GradedDims::one()));
        assert_eq!(f4.divide_exact(&g(&[0, 1])), Err(Error::ZeroConstantTerm));
        assert_eq!(f4.divide_exact(&GradedDims::zero()), Err(Error::ZeroConstantTerm));
        // Integer quotient required.
        assert_eq!(g(&[1, 1]).divide_exact(&g(&[2])).unwrap(), None);
    }

    #[test]
    fn free_algebra_examples() {
        assert_eq!(free_algebra_series(&[2, 4], 8).unwrap(), g(&[1, 0, 1, 0, 2, 0, 2, 0, 3]));
        assert_eq!(free_algebra_series(&[2], 6).unwrap(), g(&[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(free_algebra_series(&[], 4).unwrap(), g(&[1]));
        assert!(free_algebra_series(&[3], 4).is_err());
    }

    #[test]
    fn complete_intersection_examples() {
        assert_eq!(
            complete_intersection_series(&[2, 4], &[6, 8]).unwrap(),
            g(&[1, 0, 1, 0, 2, 0, 1, 0, 1])
        );
        for j in 0..6 {
            let cp = complete_intersection_series(&[2], &[2 * (j + 1)]).unwrap();
            assert_eq!(cp.total_dim(), BigUint::from(j as u32 + 1));
            assert!(cp.odd_degrees_vanish());
        }
        let g33 = complete_intersection_series(&[2, 4, 6], &[8, 10, 12]).unwrap();
        assert_eq!(g33.total_dim(), BigUint::from(20u32));
        assert!(matches!(
            complete_intersection_series(&[2, 4], &[6]),
            Err(Error::NotCompleteIntersection(_))
        ));
        assert!(matches!(
            complete_intersection_series(&[4], &[6]),
            Err(Error::NotCompleteIntersection(_))
        ));
    }

    #[test]
    fn q_regrading() {
        let s = GradedDims::from_q_coefficients(vec![BigUint::one(), BigUint::from(2u8)]);
        assert_eq!(s, g(&[1, 0, 2]));
        assert_eq!(s.q_coefficients().unwrap(), vec![BigUint::one(), BigUint::from(2u8)]);
        assert_eq!(g(&[1, 1]).q_coefficients(), None);
    }
}
