//! Exact Betti numbers of coadjoint orbits of `U(n)` and certificates for
//! their cohomological splitting along the orbit fibration hierarchy.
//!
//! Every coadjoint orbit of `U(n)` is a partial flag manifold
//! `U(n)/(U(i_1) x ... x U(i_s))`, indexed here by a [`Composition`]. An
//! inclusion of stabilizers is a contiguous regrouping of blocks
//! ([`refines`]), and each such inclusion yields a fibration whose rational
//! cohomology splits additively as base tensor fiber. The [`orbits`] module
//! checks that identity on Poincare series; the [`oracle`] module recomputes
//! every series by brute-force enumeration.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod combinatorics;
mod error;
pub mod graded;
pub mod oracle;
pub mod orbits;
mod poly;

pub use combinatorics::{
    box_partitions, refinement_chains, refinement_chains_bounded, refines, BoxPartition,
    Composition, RefinementWitness,
};
pub use error::{Error, Result};
pub use graded::GradedDims;
pub use orbits::{
    build_fibration, poincare_cpn, poincare_flag, poincare_partial_flag, verify_flag_corollary,
    verify_split, verify_tower, verify_u4_example, FibrationDescriptor, OrbitDescriptor,
    SplitCertificate, SweepReport, Tower, TowerOptions,
};
