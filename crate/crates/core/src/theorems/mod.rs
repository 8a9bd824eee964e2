//! Product formulas for clique and chromatic numbers, and the consequences
//! that can be checked on finite rings.

mod chi;
mod family;
mod nil;
mod omega;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::BeckGraph;
use crate::ring::{AnVariant, FiniteRing};
use crate::solvers::{self, SolverConfig};

pub use chi::{chi_bounds, product_coloring, product_coloring_n, ChiBounds, FactorColoring, ProductColoring, SMode};
pub use family::{counterexample_family, FamilyReport};
pub use nil::{
    check_an_condition, natural_an_type, nilradical_bound, AnConditionReport, AnType, NilBound, NilFactor,
};
pub use omega::{omega_product_formula, FactorSplit, OmegaPrediction};

/// Clique and chromatic number of one ring, solved directly.
pub fn omega_chi(r: &FiniteRing, cfg: &SolverConfig) -> Result<(usize, usize)> {
    let g = BeckGraph::build(r)?;
    let omega = solvers::max_clique(&g, cfg)?.size();
    let (chi, _) = solvers::chromatic_number(&g, cfg)?;
    Ok((omega, chi))
}

/// `(variant, omega, chi)` for both readings of the Anderson–Naseer ring.
pub fn an_variant_invariants(cfg: &SolverConfig) -> Result<Vec<(AnVariant, usize, usize)>> {
    AnVariant::ALL
        .iter()
        .map(|&v| {
            let (w, c) = omega_chi(&v.ring(), cfg)?;
            Ok((v, w, c))
        })
        .collect()
}

/// The variant whose Beck graph has clique number 5 and chromatic number 6.
/// Decided once per process by running the exact solvers on both variants.
pub fn canonical_an_variant() -> Result<AnVariant> {
    static CANONICAL: OnceLock<Result<AnVariant>> = OnceLock::new();
    CANONICAL
        .get_or_init(|| {
            let found: Vec<AnVariant> = an_variant_invariants(&SolverConfig::default())?
                .into_iter()
                .filter(|&(_, w, c)| (w, c) == (5, 6))
                .map(|(v, _, _)| v)
                .collect();
            match found.as_slice() {
                [v] => Ok(*v),
                _ => Err(Error::Internal(format!("{} variants have (omega, chi) = (5, 6)", found.len()))),
            }
        })
        .clone()
}

pub fn canonical_an_ring() -> Result<FiniteRing> {
    Ok(canonical_an_variant()?.ring().renamed("AN"))
}

/// Closed form for `Z_N`: with `N = prod p_i^(2 n_i) * prod q_j^(2 m_j + 1)`,
/// `omega = chi = prod p_i^(n_i) * prod q_j^(m_j) + r`, `r` the number of
/// odd-exponent primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZnFormula {
    pub n: u64,
    pub factorization: Vec<(u64, u32)>,
    pub odd_primes: usize,
    pub value: u64,
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn zn_formula(n: u64) -> Result<ZnFormula> {
    if n == 0 {
        return Err(Error::InvalidModulus(0));
    }
    let factorization = factorize(n);
    let odd_primes = factorization.iter().filter(|(_, e)| e % 2 == 1).count();
    let product: u64 = factorization.iter().map(|&(p, e)| p.pow(e / 2)).product();
    Ok(ZnFormula { n, factorization, odd_primes, value: product + odd_primes as u64 })
}

/// For a nonzero reduced ring with `r` field factors, `omega = chi = r + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedCheck {
    pub field_factors: usize,
    pub omega: usize,
    pub chi: usize,
    pub consistent: bool,
}

pub fn reduced_theorem_check(r: &FiniteRing, cfg: &SolverConfig) -> Result<ReducedCheck> {
    if r.size() < 2 {
        return Err(Error::Precondition("the zero ring is excluded".into()));
    }
    let field_factors = r.field_factor_count()?;
    let (omega, chi) = omega_chi(r, cfg)?;
    Ok(ReducedCheck { field_factors, omega, chi, consistent: omega == chi && chi == field_factors + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_product, make_zmod};

    #[test]
    fn zn_closed_form() {
        assert_eq!(zn_formula(12).unwrap().value, 3);
        assert_eq!(zn_formula(1).unwrap().value, 1);
        let f = zn_formula(72).unwrap();
        assert_eq!((f.value, f.factorization.clone(), f.odd_primes), (7, vec![(2, 3), (3, 2)], 1));
        assert_eq!(zn_formula(36).unwrap().value, 6);
        assert_eq!(zn_formula(13).unwrap().value, 2);
        assert!(zn_formula(0).is_err());
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(4_294_967_291), vec![(4_294_967_291, 1)]);
    }

    #[test]
    fn canonical_variant_is_z_squared_zero() {
        assert_eq!(canonical_an_variant().unwrap(), AnVariant::ZSquaredZero);
    }

    #[test]
    fn reduced_rings() {
        let cfg = SolverConfig::default();
        let c = reduced_theorem_check(&make_zmod(30).unwrap(), &cfg).unwrap();
        assert_eq!((c.field_factors, c.omega, c.chi, c.consistent), (3, 4, 4, true));
        let c = reduced_theorem_check(&make_zmod(7).unwrap(), &cfg).unwrap();
        assert_eq!((c.field_factors, c.omega, c.chi, c.consistent), (1, 2, 2, true));
        let z2 = make_zmod(2).unwrap();
        let r = make_product(&[z2.clone(), z2, make_zmod(3).unwrap()]).unwrap();
        let c = reduced_theorem_check(&r, &cfg).unwrap();
        assert_eq!((c.field_factors, c.omega, c.chi, c.consistent), (3, 4, 4, true));
        assert!(matches!(reduced_theorem_check(&make_zmod(4).unwrap(), &cfg), Err(Error::Precondition(_))));
    }
}
