use alloc::string::String;
use core::fmt;

use crate::combinatorics::Composition;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A composition was empty.
    EmptyComposition,
    /// A composition part was zero or negative.
    NonPositivePart { index: usize, value: i64 },
    /// Text that should have been a composition or series did not parse.
    Parse(String),
    /// Two compositions that must describe the same `U(n)` do not.
    RankMismatch { left: usize, right: usize },
    /// `fine` does not regroup into `coarse` by contiguous blocks.
    NotARefinement { fine: Composition, coarse: Composition },
    /// A tower link at `position` (0-based, pairing `position` and `position + 1`) is broken.
    BrokenChain {
        position: usize,
        fine: Composition,
        coarse: Composition,
    },
    /// Towers need at least two compositions.
    ChainTooShort(usize),
    /// The tower ends at the whole group without permission.
    FullGroupEndpoint(usize),
    /// An enumeration or oracle was asked for more than its hard cap.
    InstanceTooLarge { what: &'static str, n: usize, max: usize },
    /// A numeric argument is outside the operation's domain.
    InvalidArgument(String),
    /// Division by a series whose constant term vanishes.
    ZeroConstantTerm,
    /// Generator and relation degrees do not give a polynomial Hilbert series.
    NotCompleteIntersection(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyComposition => write!(f, "a composition needs at least one part"),
            Error::NonPositivePart { index, value } => {
                write!(f, "composition part {} is {}, parts must be positive", index + 1, value)
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::RankMismatch { left, right } => {
                write!(f, "compositions of different integers: {left} vs {right}")
            }
            Error::NotARefinement { fine, coarse } => write!(
                f,
                "not a refinement: {fine} does not group contiguously into {coarse} \
                 (prefix sums {:?} are not all among {:?})",
                coarse.prefix_sums(),
                fine.prefix_sums()
            ),
            Error::BrokenChain {
                position,
                fine,
                coarse,
            } => write!(
                f,
                "chain broken at link {}: {fine} does not refine {coarse}",
                position + 1
            ),
            Error::ChainTooShort(len) => {
                write!(f, "a tower needs at least 2 compositions, got {len}")
            }
            Error::FullGroupEndpoint(n) => write!(
                f,
                "tower ends at ({n}), the whole group U({n}); pass allow_full_group to permit it"
            ),
            Error::InstanceTooLarge { what, n, max } => {
                write!(f, "instance too large: {what} with n = {n} exceeds the cap {max}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::ZeroConstantTerm => write!(f, "divisor has zero constant term"),
            Error::NotCompleteIntersection(msg) => {
                write!(f, "not a complete intersection: {msg}")
            }
        }
    }
}

impl core::error::Error for Error {}
