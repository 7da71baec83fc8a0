//! Compositions of `n`, the contiguous refinement order between them, and
//! partitions fitting in a box.
//!
//! A composition `(i_1, ..., i_s)` stands for the block-diagonal subgroup
//! `U(i_1) x ... x U(i_s)` of `U(n)`. One such subgroup sits inside another
//! exactly when consecutive blocks of the first group together into the
//! blocks of the second, i.e. when the prefix sums of the coarse composition
//! are a subset of those of the fine one.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default cap on `n` for chain enumeration.
pub const DEFAULT_CHAIN_BOUND: usize = 9;

/// Hard cap for listing every composition of `n` (there are `2^(n-1)`).
pub const MAX_COMPOSITION_LISTING: usize = 24;

/// An ordered sequence of positive block sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart { index, value: 0 });
        }
        Ok(Composition { parts })
    }

    /// Validates possibly signed input.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let mut out = Vec::with_capacity(parts.len());
        for (index, &value) in parts.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositivePart { index, value });
            }
            out.push(value as usize);
        }
        Ok(Composition { parts: out })
    }

    /// The one-block composition `(n)`, i.e. the whole group.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// `(1, ..., 1)`, the maximal torus.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The ambient rank.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_full_group(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Running sums `i_1, i_1 + i_2, ..., n`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Parts sorted in descending order.
    pub fn sorted_descending(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition { parts }
    }

    /// Bit `j - 1` is set when `j < n` is a prefix sum.
    fn cut_mask(&self) -> u64 {
        let n = self.n();
        self.prefix_sums()
            .into_iter()
            .filter(|&s| s < n)
            .fold(0u64, |m, s| m | (1u64 << (s - 1)))
    }

    fn from_cut_mask(n: usize, mask: u64) -> Self {
        let mut parts = Vec::new();
        let mut last = 0;
        for j in 1..n {
            if mask & (1u64 << (j - 1)) != 0 {
                parts.push(j - last);
                last = j;
            }
        }
        parts.push(n - last);
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `"1,1,2"`. Whitespace around parts is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Err(Error::EmptyComposition);
        }
        let mut parts = Vec::new();
        for tok in trimmed.split(',') {
            let tok = tok.trim();
            let value: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("{tok:?} is not an integer in {s:?}")))?;
            parts.push(value);
        }
        Composition::from_signed(&parts)
    }
}

/// Parses a pipe-separated chain `"1,1,1,1|2,1,1|2,2|4"`.
pub fn parse_chain(s: &str) -> Result<Vec<Composition>> {
    s.split('|').map(str::parse).collect()
}

/// Renders a chain in the pipe-separated form.
pub fn format_chain(chain: &[Composition]) -> String {
    chain
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("|")
}

/// Which consecutive fine parts make up each coarse part.
///
/// Ranges are 0-based and half-open over the fine composition's parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementWitness {
    grouping: Vec<Range<usize>>,
}

impl RefinementWitness {
    pub fn grouping(&self) -> &[Range<usize>] {
        &self.grouping
    }

    pub fn identity(len: usize) -> Self {
        RefinementWitness {
            grouping: (0..len).map(|i| i..i + 1).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.grouping.iter().all(|r| r.len() == 1)
    }

    /// The fine parts grouped under each coarse block.
    pub fn blocks<'a>(&'a self, fine: &'a Composition) -> impl Iterator<Item = &'a [usize]> + 'a {
        self.grouping.iter().map(move |r| &fine.parts[r.clone()])
    }

    /// Sums each group of fine parts, reconstructing the coarse composition.
    pub fn coarsen(&self, fine: &Composition) -> Composition {
        Composition {
            parts: self.blocks(fine).map(|b| b.iter().sum()).collect(),
        }
    }

    /// Witness for `fine -> coarser` given `self: fine -> mid` and
    /// `next: mid -> coarser`.
    pub fn then(&self, next: &RefinementWitness) -> RefinementWitness {
        RefinementWitness {
            grouping: next
                .grouping
                .iter()
                .map(|r| self.grouping[r.start].start..self.grouping[r.end - 1].end)
                .collect(),
        }
    }
}

/// Returns the contiguous grouping of `fine` into `coarse`, or `None` when
/// the prefix sums of `coarse` are not all prefix sums of `fine`.
pub fn refines(fine: &Composition, coarse: &Composition) -> Result<Option<RefinementWitness>> {
    if fine.n() != coarse.n() {
        return Err(Error::RankMismatch {
            left: fine.n(),
            right: coarse.n(),
        });
    }
    let mut grouping = Vec::with_capacity(coarse.len());
    let mut start = 0;
    let mut idx = 0;
    for &target in coarse.parts() {
        let mut acc = 0;
        while acc < target && idx < fine.len() {
            acc += fine.parts[idx];
            idx += 1;
        }
        if acc != target {
            return Ok(None);
        }
        grouping.push(start..idx);
        start = idx;
    }
    Ok(Some(RefinementWitness { grouping }))
}

/// All compositions of `n` in order of their cut masks.
pub fn compositions(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::InvalidArgument("compositions of 0".into()));
    }
    if n > MAX_COMPOSITION_LISTING {
        return Err(Error::InstanceTooLarge {
            what: "composition listing",
            n,
            max: MAX_COMPOSITION_LISTING,
        });
    }
    Ok((0..1u64 << (n - 1))
        .map(|mask| Composition::from_cut_mask(n, mask))
        .collect())
}

/// [`refinement_chains_bounded`] with the default bound.
pub fn refinement_chains(
    n: usize,
    from: &Composition,
    to: &Composition,
) -> Result<Vec<Vec<Composition>>> {
    refinement_chains_bounded(n, from, to, DEFAULT_CHAIN_BOUND)
}

/// Every strictly increasing chain `from = c_0 < c_1 < ... < c_k = to` in
/// the refinement order. `from == to` gives the single one-element chain.
pub fn refinement_chains_bounded(
    n: usize,
    from: &Composition,
    to: &Composition,
    max_n: usize,
) -> Result<Vec<Vec<Composition>>> {
    if n > max_n || n > 63 {
        return Err(Error::InstanceTooLarge {
            what: "refinement chain enumeration",
            n,
            max: max_n.min(63),
        });
    }
    for c in [from, to] {
        if c.n() != n {
            return Err(Error::RankMismatch {
                left: n,
                right: c.n(),
            });
        }
    }
    if refines(from, to)?.is_none() {
        return Err(Error::NotARefinement {
            fine: from.clone(),
            coarse: to.clone(),
        });
    }

    fn walk(n: usize, cur: u64, target: u64, path: &mut Vec<u64>, out: &mut Vec<Vec<Composition>>) {
        if cur == target {
            out.push(
                path.iter()
                    .map(|&m| Composition::from_cut_mask(n, m))
                    .collect(),
            );
            return;
        }
        // Strictly coarser masks that still contain the target's cuts.
        let free = cur & !target;
        let mut sub = free;
        loop {
            sub = sub.wrapping_sub(1) & free;
            let next = target | sub;
            path.push(next);
            walk(n, next, target, path, out);
            path.pop();
            if sub == 0 {
                break;
            }
        }
    }

    let start = from.cut_mask();
    let mut out = Vec::new();
    let mut path = vec![start];
    walk(n, start, to.cut_mask(), &mut path, &mut out);
    Ok(out)
}

/// A partition drawn inside a `height x width` box of cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxPartition {
    rows: Vec<usize>,
    height: usize,
    width: usize,
}

impl BoxPartition {
    /// `rows` must be weakly decreasing; trailing zero rows are dropped.
    pub fn new(mut rows: Vec<usize>, height: usize, width: usize) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.len() > height {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} nonzero rows do not fit in height {height}",
                rows.len()
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument("rows must be weakly decreasing".into()));
        }
        if rows.first().is_some_and(|&r| r > width) {
            return Err(Error::InvalidArgument(alloc::format!(
                "row longer than width {width}"
            )));
        }
        Ok(BoxPartition {
            rows,
            height,
            width,
        })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn weight(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Every partition fitting in the box, by explicit listing.
    pub fn all_in_box(height: usize, width: usize) -> Vec<BoxPartition> {
        fn fill(
            height: usize,
            width: usize,
            cap: usize,
            rows: &mut Vec<usize>,
            out: &mut Vec<BoxPartition>,
        ) {
            out.push(BoxPartition {
                rows: rows.clone(),
                height,
                width,
            });
            if rows.len() == height {
                return;
            }
            for r in 1..=cap {
                rows.push(r);
                fill(height, width, r, rows, out);
                rows.pop();
            }
        }
        let mut out = Vec::new();
        fill(height, width, width, &mut Vec::new(), &mut out);
        out
    }
}

/// Number of partitions of `weight` with at most `height` parts, each at
/// most `width`. Out-of-range weights give zero.
pub fn box_partitions(height: usize, width: usize, weight: usize) -> BigUint {
    if weight > height.saturating_mul(width) {
        return BigUint::zero();
    }
    // table[c][w]: partitions using parts of the sizes seen so far,
    // with exactly c parts and total w.
    let mut table = vec![vec![BigUint::zero(); weight + 1]; height + 1];
    table[0][0] = BigUint::one();
    for size in 1..=width.min(weight) {
        for c in 1..=height {
            for w in size..=weight {
                let add = table[c - 1][w - size].clone();
                if !add.is_zero() {
                    table[c][w] += add;
                }
            }
        }
    }
    table.iter().map(|row| &row[weight]).sum()
}
