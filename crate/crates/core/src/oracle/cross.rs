use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::Composition;
use crate::error::Result;
use crate::graded::GradedDims;
use crate::orbits::{poincare_flag, poincare_partial_flag, Factor, Side, SplitCertificate};

use super::{grassmannian_series_by_boxes, partial_flag_series_by_cosets, permutation_table};

/// Closed form against the enumeration oracles for one orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub subject: String,
    pub closed_form: GradedDims,
    pub coset_oracle: GradedDims,
    pub box_oracle: Option<GradedDims>,
    /// Objects enumerated by the coset oracle.
    pub enumeration_size: u64,
    /// Degrees where any route disagrees with the closed form.
    pub mismatched_degrees: Vec<usize>,
    pub certificates: Vec<SplitCertificate>,
}

impl CrossCheckReport {
    pub fn agree(&self) -> bool {
        self.mismatched_degrees.is_empty()
    }

    fn build(
        subject: String,
        closed_form: GradedDims,
        coset_oracle: GradedDims,
        box_oracle: Option<GradedDims>,
    ) -> Self {
        let mut others = vec![&coset_oracle];
        others.extend(box_oracle.as_ref());
        let top = others
            .iter()
            .chain([&&closed_form])
            .map(|s| s.betti().len())
            .max()
            .unwrap_or(0);
        let mismatched_degrees = (0..top)
            .filter(|&d| others.iter().any(|o| o.get(d) != closed_form.get(d)))
            .collect();

        let compare = |label: &str, oracle: &GradedDims| {
            SplitCertificate::from_factors(
                vec![
                    Factor::new(Side::Lhs, "closed-form", closed_form.clone()),
                    Factor::new(Side::Rhs, label, oracle.clone()),
                ],
                vec![],
            )
        };
        let mut certificates = vec![compare("coset-oracle", &coset_oracle)];
        if let Some(b) = &box_oracle {
            certificates.push(compare("box-oracle", b));
        }
        let enumeration_size = coset_oracle
            .total_dim()
            .try_into()
            .unwrap_or(u64::MAX);

        CrossCheckReport {
            subject,
            closed_form,
            coset_oracle,
            box_oracle,
            enumeration_size,
            mismatched_degrees,
            certificates,
        }
    }
}

/// Compares `poincare_partial_flag(p)` with coset enumeration and, for two
/// blocks, with the box-partition count.
pub fn cross_check(p: &Composition) -> Result<CrossCheckReport> {
    let coset = partial_flag_series_by_cosets(p)?;
    let boxes = match p.parts() {
        [k, _] => Some(grassmannian_series_by_boxes(*k, p.n())?),
        _ => None,
    };
    Ok(CrossCheckReport::build(
        alloc::format!("({p})"),
        poincare_partial_flag(p),
        coset,
        boxes,
    ))
}

/// Compares `poincare_flag(n)` with the full `S_n` inversion histogram.
pub fn cross_check_flag(n: usize) -> Result<CrossCheckReport> {
    let table = permutation_table(n)?;
    Ok(CrossCheckReport::build(
        alloc::format!("F_{n}"),
        poincare_flag(n)?,
        table.to_series(),
        None,
    ))
}
