//! Brute-force recomputation of the orbit series by enumeration.
//!
//! Nothing in this module outside [`cross`] touches the closed forms in
//! [`crate::orbits`]. Flag and partial flag series come from counting
//! permutations by inversion number (the Coxeter length in `S_n`), and
//! Grassmannian series from counting partitions in a box.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::combinatorics::{BoxPartition, Composition};
use crate::error::{Error, Result};
use crate::graded::GradedDims;

mod cross;

pub use cross::{cross_check, cross_check_flag, CrossCheckReport};

/// Largest `n` for permutation enumeration (`11! ~ 4e7`).
pub const MAX_ENUMERATION_N: usize = 11;
/// Largest `n` for the box-partition Grassmannian oracle.
pub const MAX_BOX_N: usize = 14;

/// Permutations of `{1..n}` counted by inversion number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTable {
    pub n: usize,
    pub length_histogram: Vec<u64>,
}

impl PermutationTable {
    pub fn total(&self) -> u64 {
        self.length_histogram.iter().sum()
    }

    /// Betti number `h[l]` placed in real degree `2l`.
    pub fn to_series(&self) -> GradedDims {
        histogram_series(&self.length_histogram)
    }
}

fn histogram_series(hist: &[u64]) -> GradedDims {
    GradedDims::from_q_coefficients(hist.iter().map(|&c| BigUint::from(c)).collect())
}

fn check_cap(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::InstanceTooLarge { what, n, max });
    }
    Ok(())
}

/// Histogram of inversion numbers over permutations `w` of `{0..n}` whose
/// values increase along each block of positions. Block ids are given per
/// position and must be contiguous.
///
/// Values are placed position by position in increasing order, so the
/// permutations are visited lexicographically. Placing `x` while the set
/// `unused` is still open adds one inversion for every smaller unused value.
fn inversion_histogram(block_of: &[usize]) -> Vec<u64> {
    let n = block_of.len();
    let max_len = n * n.saturating_sub(1) / 2;
    let mut hist = vec![0u64; max_len + 1];
    if n == 0 {
        hist[0] = 1;
        return hist;
    }

    struct Walk<'a> {
        block_of: &'a [usize],
        hist: &'a mut [u64],
        n: usize,
    }

    impl Walk<'_> {
        fn go(&mut self, pos: usize, unused: u32, floor: usize, inversions: usize) {
            if pos == self.n {
                self.hist[inversions] += 1;
                return;
            }
            // A new block may start from any value; within a block values rise.
            let mut candidates = unused & !((1u32 << floor) - 1);
            while candidates != 0 {
                let x = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                let smaller = (unused & ((1u32 << x) - 1)).count_ones() as usize;
                let next_floor = match self.block_of.get(pos + 1) {
                    Some(&b) if b == self.block_of[pos] => x + 1,
                    _ => 0,
                };
                self.go(pos + 1, unused & !(1u32 << x), next_floor, inversions + smaller);
            }
        }
    }

    let mut walk = Walk {
        block_of,
        hist: &mut hist,
        n,
    };
    walk.go(0, (1u32 << n) - 1, 0, 0);
    while hist.len() > 1 && hist.last() == Some(&0) {
        hist.pop();
    }
    hist
}

/// Inversion histogram of all of `S_n`.
pub fn permutation_table(n: usize) -> Result<PermutationTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("S_0 has no flag manifold".into()));
    }
    check_cap("permutation enumeration", n, MAX_ENUMERATION_N)?;
    let block_of: Vec<usize> = (0..n).collect();
    Ok(PermutationTable {
        n,
        length_histogram: inversion_histogram(&block_of),
    })
}

/// Betti numbers of `F_n`: degree `2l` counts permutations with `l` inversions.
pub fn flag_series_by_enumeration(n: usize) -> Result<GradedDims> {
    Ok(permutation_table(n)?.to_series())
}

/// Histogram over the minimal-length coset representatives of the Young
/// subgroup `S_{i_1} x ... x S_{i_s}`.
pub fn coset_histogram(p: &Composition) -> Result<Vec<u64>> {
    check_cap("coset enumeration", p.n(), MAX_ENUMERATION_N)?;
    let block_of: Vec<usize> = p
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(b, &size)| core::iter::repeat_n(b, size))
        .collect();
    Ok(inversion_histogram(&block_of))
}

/// Betti numbers of `F_p` from block-increasing permutations.
pub fn partial_flag_series_by_cosets(p: &Composition) -> Result<GradedDims> {
    Ok(histogram_series(&coset_histogram(p)?))
}

/// Betti numbers of the Grassmannian of `k`-planes in `C^n`, one Schubert
/// cell per partition in the `k x (n-k)` box.
pub fn grassmannian_series_by_boxes(k: usize, n: usize) -> Result<GradedDims> {
    if k > n {
        return Err(Error::InvalidArgument(alloc::format!(
            "Grassmannian of {k}-planes in C^{n}"
        )));
    }
    check_cap("box enumeration", n, MAX_BOX_N)?;
    let cells = BoxPartition::all_in_box(k, n - k);
    let mut hist = vec![0u64; k * (n - k) + 1];
    for cell in &cells {
        hist[cell.weight()] += 1;
    }
    Ok(histogram_series(&hist))
}
