use crate::error::{Error, Result};
use crate::graph::BeckGraph;
use crate::ring::FiniteRing;
use crate::solvers::{chromatic_number, max_clique, Coloring, SolverConfig};

use super::{canonical_an_ring, chi_bounds, omega_product_formula, product_coloring_n, SMode};

/// Products above this size skip the direct clique solve.
pub const DIRECT_OMEGA_CAP: usize = 128;
/// Products above this size skip the direct chromatic solve.
pub const DIRECT_CHI_CAP: usize = 64;

#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub product: FiniteRing,
    /// From the clique-split product formula.
    pub omega: usize,
    /// `5 + sum omega_i - (n - 1)`, with `n` counting the seed ring.
    pub omega_closed_form: usize,
    /// `6 + sum chi_i - (n - 1)`.
    pub chi_closed_form: usize,
    pub chi_lower: usize,
    /// Size of the constructed product colouring.
    pub chi_upper: usize,
    pub coloring: Coloring,
    pub direct_omega: Option<usize>,
    pub direct_chi: Option<usize>,
}

impl FamilyReport {
    /// `chi` when the bounds pinch.
    pub fn chi(&self) -> Option<usize> {
        (self.chi_lower == self.chi_upper).then_some(self.chi_lower)
    }

    pub fn gap(&self) -> Option<isize> {
        self.chi().map(|c| c as isize - self.omega as isize)
    }

    /// Every independently computed quantity agrees.
    pub fn consistent(&self) -> bool {
        self.omega == self.omega_closed_form
            && self.chi() == Some(self.chi_closed_form)
            && self.direct_omega.is_none_or(|w| w == self.omega)
            && self.direct_chi.is_none_or(|c| Some(c) == self.chi())
    }
}

/// Analyses `AN x R_1 x ... x R_k` for nonzero reduced `R_i`.
pub fn counterexample_family(reduced_factors: &[FiniteRing], cfg: &SolverConfig) -> Result<FamilyReport> {
    for f in reduced_factors {
        if f.size() < 2 || !f.is_reduced() {
            return Err(Error::Precondition(format!("{} is not a nonzero reduced ring", f.name())));
        }
    }
    let mut rings = vec![canonical_an_ring()?];
    rings.extend_from_slice(reduced_factors);

    let omega = omega_product_formula(&rings, cfg)?;
    let bounds = chi_bounds(&rings, SMode::AnyOptimal, cfg)?;
    let colorings: Vec<Coloring> = bounds.factors.iter().map(|f| f.coloring.clone()).collect();
    let built = product_coloring_n(&rings, &colorings)?;

    let k = reduced_factors.len();
    let seed = &bounds.factors[0];
    let omega_closed_form = omega.factors[0].omega + omega.factors[1..].iter().map(|f| f.omega).sum::<usize>() - k;
    let chi_closed_form = seed.chi + bounds.factors[1..].iter().map(|f| f.chi).sum::<usize>() - k;

    let size = built.product.size();
    let graph = if size <= DIRECT_OMEGA_CAP { Some(BeckGraph::build(&built.product)?) } else { None };
    let direct_omega = graph.as_ref().map(|g| max_clique(g, cfg).map(|c| c.size())).transpose()?;
    let direct_chi = match &graph {
        Some(g) if size <= DIRECT_CHI_CAP => Some(chromatic_number(g, cfg)?.0),
        _ => None,
    };

    Ok(FamilyReport {
        omega: omega.predicted,
        omega_closed_form,
        chi_closed_form,
        chi_lower: bounds.lower,
        chi_upper: built.coloring.k(),
        coloring: built.coloring,
        product: built.product,
        direct_omega,
        direct_chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    #[test]
    fn seed_alone() {
        let r = counterexample_family(&[], &SolverConfig::default()).unwrap();
        assert_eq!((r.omega, r.chi(), r.gap()), (5, Some(6), Some(1)));
        assert_eq!((r.direct_omega, r.direct_chi), (Some(5), Some(6)));
        assert!(r.consistent());
    }

    #[test]
    fn with_z2() {
        let r = counterexample_family(&[make_zmod(2).unwrap()], &SolverConfig::default()).unwrap();
        assert_eq!((r.omega, r.chi(), r.gap()), (6, Some(7), Some(1)));
        assert_eq!(r.direct_omega, Some(6));
        assert!(r.consistent());
    }

    #[test]
    fn rejects_non_reduced() {
        let e = counterexample_family(&[make_zmod(4).unwrap()], &SolverConfig::default());
        assert!(matches!(e, Err(Error::Precondition(_))));
    }
}
