use crate::error::{Error, Result};
use crate::graph::BeckGraph;
use crate::ring::{make_product, Elem, FiniteRing};
use crate::solvers::{best_clique_split, CliqueSplit, SolverConfig};

/// Per-factor data: `omega`, and the split of a maximum clique chosen to
/// maximise its square-zero part `B`.
#[derive(Debug, Clone)]
pub struct FactorSplit {
    pub omega: usize,
    pub b: usize,
    pub c: usize,
    pub split: CliqueSplit,
}

#[derive(Debug, Clone)]
pub struct OmegaPrediction {
    pub factors: Vec<FactorSplit>,
    /// `prod |B_i| + sum |C_i|`
    pub predicted: usize,
    /// `B_1 x ... x B_n` together with each `C_i` embedded on its own axis,
    /// as elements of the product ring. Verified to be a clique.
    pub witness: Vec<Elem>,
    pub product: FiniteRing,
}

impl OmegaPrediction {
    /// The same value written as `prod (omega_i - |C_i|) + sum (omega_i - |B_i|)`.
    pub fn complement_form(&self) -> usize {
        let prod: usize = self.factors.iter().map(|f| f.omega - f.c).product();
        let sum: usize = self.factors.iter().map(|f| f.omega - f.b).sum();
        prod + sum
    }
}

pub fn omega_product_formula(factors: &[FiniteRing], cfg: &SolverConfig) -> Result<OmegaPrediction> {
    let product = make_product(factors)?;
    let splits = factors
        .iter()
        .map(|r| {
            let split = best_clique_split(&BeckGraph::build(r)?, cfg)?;
            Ok(FactorSplit { omega: split.clique.size(), b: split.b.len(), c: split.c.len(), split })
        })
        .collect::<Result<Vec<_>>>()?;
    let predicted = splits.iter().map(|f| f.b).product::<usize>() + splits.iter().map(|f| f.c).sum::<usize>();

    let mut witness = Vec::with_capacity(predicted);
    // Cartesian product of the B parts.
    let mut tuple = vec![0usize; splits.len()];
    if splits.iter().all(|f| f.b > 0) {
        'outer: loop {
            let parts: Vec<Elem> = tuple.iter().zip(&splits).map(|(&i, f)| f.split.b[i]).collect();
            witness.push(product.embed(&parts)?);
            for (slot, f) in tuple.iter_mut().zip(&splits) {
                *slot += 1;
                if *slot < f.b {
                    continue 'outer;
                }
                *slot = 0;
            }
            break;
        }
    }
    for (i, f) in splits.iter().enumerate() {
        for &c in &f.split.c {
            let mut parts = vec![Elem::ZERO; splits.len()];
            parts[i] = c;
            witness.push(product.embed(&parts)?);
        }
    }
    witness.sort_unstable();
    witness.dedup();
    if witness.len() != predicted {
        return Err(Error::Internal(format!("witness has {} elements, formula gives {predicted}", witness.len())));
    }
    for (i, &a) in witness.iter().enumerate() {
        for &b in &witness[i + 1..] {
            if product.mul_idx(a.0, b.0) != 0 {
                return Err(Error::Internal(format!(
                    "witness is not a clique: {} * {} != 0",
                    product.format_element(a),
                    product.format_element(b)
                )));
            }
        }
    }
    Ok(OmegaPrediction { factors: splits, predicted, witness, product })
}
