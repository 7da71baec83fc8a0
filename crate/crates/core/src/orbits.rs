//! Coadjoint orbits of `U(n)`, the fibrations between them, and
//! certificates for the additive splitting of their cohomology.
//!
//! The orbit with stabilizer `U(i_1) x ... x U(i_s)` is the partial flag
//! manifold `F_p`, whose Poincare series in `q = t^2` is the Gaussian
//! multinomial `prod_{j<=n} (1 - q^j) / prod_b prod_{j<=i_b} (1 - q^j)`.
//! For stabilizers `G_1 = G_fine` inside `G_2 = G_coarse`, the orbit of the
//! fine point fibers over the coarse orbit with fiber `G_2 / G_1`, which is
//! itself a product of partial flag manifolds, one per coarse block.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{compositions, refines, Composition, RefinementWitness};
use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::poly;

/// `U(n) / G_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDescriptor {
    ambient_n: usize,
    stabilizer: Composition,
    label: String,
}

impl OrbitDescriptor {
    pub fn new(stabilizer: Composition) -> Self {
        OrbitDescriptor {
            ambient_n: stabilizer.n(),
            label: orbit_label(&stabilizer),
            stabilizer,
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn stabilizer(&self) -> &Composition {
        &self.stabilizer
    }

    /// `"F_4"`, `"G_{2,2}"`, `"CP^3"`, `"point"`, or `"F_{2,1,1}"`.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// `(n^2 - sum i_j^2) / 2`.
    pub fn complex_dim(&self) -> usize {
        let n = self.ambient_n;
        let blocks: usize = self.stabilizer.parts().iter().map(|i| i * i).sum();
        let real = n * n - blocks;
        assert!(
            real.is_multiple_of(2),
            "odd real dimension {real} for stabilizer ({})",
            self.stabilizer
        );
        real / 2
    }

    pub fn poincare(&self) -> GradedDims {
        poincare_partial_flag(&self.stabilizer)
    }
}

fn orbit_label(p: &Composition) -> String {
    let n = p.n();
    match p.parts() {
        [_] => "point".to_string(),
        [1, m] | [m, 1] => format!("CP^{m}"),
        [a, b] => format!("G_{{{a},{b}}}"),
        _ if p.is_all_ones() => format!("F_{n}"),
        _ => format!("F_{{{p}}}"),
    }
}

/// One step of the orbit hierarchy: `total` fibers over `base` with fiber
/// the product of `fiber_factors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationDescriptor {
    total: OrbitDescriptor,
    base: OrbitDescriptor,
    fiber_factors: Vec<OrbitDescriptor>,
    witness: RefinementWitness,
}

impl FibrationDescriptor {
    pub fn total(&self) -> &OrbitDescriptor {
        &self.total
    }

    pub fn base(&self) -> &OrbitDescriptor {
        &self.base
    }

    /// One partial flag manifold inside `U(coarse_b)` per coarse block `b`.
    pub fn fiber_factors(&self) -> &[OrbitDescriptor] {
        &self.fiber_factors
    }

    pub fn witness(&self) -> &RefinementWitness {
        &self.witness
    }

    /// Complex dimension of the fiber `G_coarse / G_fine`.
    pub fn fiber_complex_dim(&self) -> usize {
        self.fiber_factors.iter().map(OrbitDescriptor::complex_dim).sum()
    }
}

pub fn build_fibration(fine: &Composition, coarse: &Composition) -> Result<FibrationDescriptor> {
    let witness = refines(fine, coarse)?.ok_or_else(|| Error::NotARefinement {
        fine: fine.clone(),
        coarse: coarse.clone(),
    })?;
    let fiber_factors: Vec<OrbitDescriptor> = witness
        .blocks(fine)
        .map(|block| {
            OrbitDescriptor::new(Composition::new(block.to_vec()).expect("blocks of a composition"))
        })
        .collect();
    let fib = FibrationDescriptor {
        total: OrbitDescriptor::new(fine.clone()),
        base: OrbitDescriptor::new(coarse.clone()),
        fiber_factors,
        witness,
    };
    assert_eq!(
        fib.total.complex_dim(),
        fib.base.complex_dim() + fib.fiber_complex_dim(),
        "dimension bookkeeping failed for {fine} -> {coarse}"
    );
    Ok(fib)
}

/// `(1, 0, 1, ..., 0, 1)` with `j + 1` ones.
pub fn poincare_cpn(j: usize) -> GradedDims {
    GradedDims::from_q_coefficients(vec![One::one(); j + 1])
}

/// The Gaussian multinomial `[n; i_1, ..., i_s]_q` with `q = t^2`.
pub fn poincare_partial_flag(p: &Composition) -> GradedDims {
    let mut series = vec![BigInt::one()];
    for j in 1..=p.n() {
        series = poly::mul(&series, &poly::one_minus_power(j));
    }
    for &block in p.parts() {
        for j in 1..=block {
            series = poly::div_exact(&series, &poly::one_minus_power(j))
                .expect("q-multinomial denominators divide the numerator");
        }
    }
    GradedDims::from_signed_q(series).expect("q-multinomial coefficients are nonnegative")
}

/// The complete flag manifold `F_n = U(n) / T`.
pub fn poincare_flag(n: usize) -> Result<GradedDims> {
    if n == 0 {
        return Err(Error::InvalidArgument("flag manifold of C^0".into()));
    }
    Ok(poincare_partial_flag(&Composition::ones(n)?))
}

/// Which side of a certificate a factor multiplies into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lhs => "lhs",
            Side::Rhs => "rhs",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub side: Side,
    pub label: String,
    pub series: GradedDims,
}

impl Factor {
    pub fn new(side: Side, label: impl Into<String>, series: GradedDims) -> Self {
        Factor {
            side,
            label: label.into(),
            series,
        }
    }
}

/// Both sides of a claimed identity of graded dimensions.
///
/// `lhs` is the tensor product of the `Lhs` factors and `rhs` that of the
/// `Rhs` factors, so the verdict can be recomputed from the factors alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCertificate {
    pub lhs: GradedDims,
    pub rhs: GradedDims,
    pub factors: Vec<Factor>,
    pub verdict: bool,
    pub hypothesis_notes: Vec<String>,
}

impl SplitCertificate {
    pub fn from_factors(factors: Vec<Factor>, hypothesis_notes: Vec<String>) -> Self {
        let lhs = side_product(&factors, Side::Lhs);
        let rhs = side_product(&factors, Side::Rhs);
        SplitCertificate {
            verdict: lhs == rhs,
            lhs,
            rhs,
            factors,
            hypothesis_notes,
        }
    }

    /// Recomputes both sides from the factors and compares.
    pub fn recheck(&self) -> bool {
        let lhs = side_product(&self.factors, Side::Lhs);
        let rhs = side_product(&self.factors, Side::Rhs);
        lhs == self.lhs && rhs == self.rhs && (lhs == rhs) == self.verdict
    }

    pub fn factors_on(&self, side: Side) -> impl Iterator<Item = &Factor> {
        self.factors.iter().filter(move |f| f.side == side)
    }
}

fn side_product(factors: &[Factor], side: Side) -> GradedDims {
    GradedDims::tensor_all(factors.iter().filter(|f| f.side == side).map(|f| &f.series))
}

fn connectedness_note(coarse: &Composition) -> String {
    let blocks: Vec<String> = coarse.parts().iter().map(|b| format!("U({b})")).collect();
    format!(
        "stabilizer {} is connected (a product of unitary groups)",
        blocks.join(" x ")
    )
}

fn fibration_notes(fine: &Composition, coarse: &Composition) -> Vec<String> {
    let mut notes = vec![connectedness_note(coarse)];
    if fine == coarse {
        notes.push("degenerate split: equal stabilizers, every fiber factor is a point".into());
    }
    if coarse.is_full_group() {
        notes.push(format!(
            "coarse stabilizer is all of U({}); the base is a point",
            coarse.n()
        ));
    }
    notes
}

/// Compares `P(F_fine)` with `P(F_coarse)` tensored with every fiber factor.
pub fn verify_split(fine: &Composition, coarse: &Composition) -> Result<SplitCertificate> {
    let fib = build_fibration(fine, coarse)?;
    let mut factors = vec![
        Factor::new(Side::Lhs, fib.total.label.clone(), fib.total.poincare()),
        Factor::new(Side::Rhs, format!("base {}", fib.base.label), fib.base.poincare()),
    ];
    for (b, f) in fib.fiber_factors.iter().enumerate() {
        factors.push(Factor::new(
            Side::Rhs,
            format!("fiber {} in U({})", f.label, coarse.parts()[b]),
            f.poincare(),
        ));
    }
    Ok(SplitCertificate::from_factors(
        factors,
        fibration_notes(fine, coarse),
    ))
}

/// Generic check for externally supplied series: is `total` the tensor of
/// `base` with every fiber?
pub fn check_supplied(
    total: GradedDims,
    base: GradedDims,
    fibers: Vec<GradedDims>,
) -> SplitCertificate {
    let mut factors = vec![
        Factor::new(Side::Lhs, "total", total),
        Factor::new(Side::Rhs, "base", base),
    ];
    for (i, f) in fibers.into_iter().enumerate() {
        factors.push(Factor::new(Side::Rhs, format!("fiber {}", i + 1), f));
    }
    SplitCertificate::from_factors(
        factors,
        vec!["supplied series; no stabilizer hypotheses checked".into()],
    )
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TowerOptions {
    /// Permit the chain to end at `(n)`, i.e. at the whole group.
    pub allow_full_group: bool,
}

/// A refinement chain with a certificate per link and one for the full
/// factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    pub chain: Vec<Composition>,
    pub step_certificates: Vec<SplitCertificate>,
    pub product_certificate: SplitCertificate,
}

impl Tower {
    pub fn all_true(&self) -> bool {
        self.product_certificate.verdict && self.step_certificates.iter().all(|c| c.verdict)
    }
}

/// `P(F_first)` against `P(F_last)` tensored with the fibers of every link.
pub fn verify_tower(chain: &[Composition], options: TowerOptions) -> Result<Tower> {
    if chain.len() < 2 {
        return Err(Error::ChainTooShort(chain.len()));
    }
    let n = chain[0].n();
    let last = &chain[chain.len() - 1];
    if last.is_full_group() && !options.allow_full_group {
        return Err(Error::FullGroupEndpoint(n));
    }
    let mut fibrations = Vec::with_capacity(chain.len() - 1);
    for (position, pair) in chain.windows(2).enumerate() {
        if pair[1].n() != n {
            return Err(Error::RankMismatch {
                left: n,
                right: pair[1].n(),
            });
        }
        match build_fibration(&pair[0], &pair[1]) {
            Ok(f) => fibrations.push(f),
            Err(Error::NotARefinement { fine, coarse }) => {
                return Err(Error::BrokenChain {
                    position,
                    fine,
                    coarse,
                })
            }
            Err(e) => return Err(e),
        }
    }

    let step_certificates = chain
        .windows(2)
        .map(|pair| verify_split(&pair[0], &pair[1]))
        .collect::<Result<Vec<_>>>()?;

    let first = OrbitDescriptor::new(chain[0].clone());
    let top = OrbitDescriptor::new(last.clone());
    let mut factors = vec![
        Factor::new(Side::Lhs, first.label.clone(), first.poincare()),
        Factor::new(Side::Rhs, format!("base {}", top.label), top.poincare()),
    ];
    for (step, fib) in fibrations.iter().enumerate() {
        for f in &fib.fiber_factors {
            if f.stabilizer.is_full_group() {
                continue;
            }
            factors.push(Factor::new(
                Side::Rhs,
                format!("step {} fiber {}", step + 1, f.label),
                f.poincare(),
            ));
        }
    }
    let mut notes: Vec<String> = chain[1..].iter().map(connectedness_note).collect();
    if last.is_full_group() {
        notes.push(format!("chain ends at U({n}) itself (permitted by flag)"));
    }
    Ok(Tower {
        chain: chain.to_vec(),
        step_certificates,
        product_certificate: SplitCertificate::from_factors(factors, notes),
    })
}

/// `P(F_n)` against `P(CP^1) x ... x P(CP^{n-1})`.
pub fn verify_flag_corollary(n: usize) -> Result<SplitCertificate> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "flag splitting needs n >= 2, got {n}"
        )));
    }
    let mut factors = vec![Factor::new(Side::Lhs, format!("F_{n}"), poincare_flag(n)?)];
    for j in 1..n {
        factors.push(Factor::new(Side::Rhs, format!("CP^{j}"), poincare_cpn(j)));
    }
    Ok(SplitCertificate::from_factors(
        factors,
        vec![format!(
            "tower of connected stabilizers U(1)^{n} < ... < U(1) x U({})",
            n - 1
        )],
    ))
}

/// The three `U(4)` identities: `F_4` over `G_{2,2}`, the two
/// factorizations of `P(F_4)`, and the Betti table of `G_{2,2}`.
pub fn verify_u4_example() -> Vec<SplitCertificate> {
    let ones = Composition::ones(4).expect("valid");
    let two_two = Composition::new(vec![2, 2]).expect("valid");
    let over_grassmannian = verify_split(&ones, &two_two).expect("(1,1,1,1) refines (2,2)");

    let g22 = poincare_partial_flag(&two_two);
    let two_ways = SplitCertificate::from_factors(
        vec![
            Factor::new(Side::Lhs, "G_{2,2}", g22.clone()),
            Factor::new(Side::Lhs, "CP^1", poincare_cpn(1)),
            Factor::new(Side::Lhs, "CP^1", poincare_cpn(1)),
            Factor::new(Side::Rhs, "CP^1", poincare_cpn(1)),
            Factor::new(Side::Rhs, "CP^2", poincare_cpn(2)),
            Factor::new(Side::Rhs, "CP^3", poincare_cpn(3)),
        ],
        vec!["both sides are factorizations of P(F_4)".into()],
    );

    let table = GradedDims::from_u64s(&[1, 0, 1, 0, 2, 0, 1, 0, 1]);
    let betti_table = SplitCertificate::from_factors(
        vec![
            Factor::new(Side::Lhs, "G_{2,2}", g22),
            Factor::new(Side::Rhs, "table 1,1,2,1,1 in degrees 0,2,4,6,8", table),
        ],
        vec!["H^4(G_{2,2}) is spanned by c_1^2 and c_2".into()],
    );

    vec![over_grassmannian, two_ways, betti_table]
}

/// Outcome of checking every refining pair among the compositions of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub n: usize,
    pub compositions: usize,
    /// Ordered pairs `(fine, coarse)` with a refinement witness, including
    /// `fine == coarse`.
    pub pairs: usize,
    pub proper_pairs: usize,
    pub failures: Vec<(Composition, Composition)>,
}

/// Runs [`verify_split`] on every refining pair of compositions of `n`.
pub fn sweep_refinement_pairs(n: usize) -> Result<SweepReport> {
    let all = compositions(n)?;
    let mut report = SweepReport {
        n,
        compositions: all.len(),
        pairs: 0,
        proper_pairs: 0,
        failures: Vec::new(),
    };
    for fine in &all {
        for coarse in &all {
            if refines(fine, coarse)?.is_none() {
                continue;
            }
            report.pairs += 1;
            if fine != coarse {
                report.proper_pairs += 1;
            }
            if !verify_split(fine, coarse)?.verdict {
                report.failures.push((fine.clone(), coarse.clone()));
            }
        }
    }
    Ok(report)
}
