use crate::error::{Error, Result};
use crate::graph::BeckGraph;
use crate::ring::{make_product, FiniteRing};
use crate::solvers::{chromatic_number, min_s_optimal_coloring, s_of, Coloring, SolverConfig};

/// How the per-factor colouring (and hence `s`) is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SMode {
    /// Whatever optimal colouring the chromatic solver returns.
    AnyOptimal,
    /// An optimal colouring with the fewest square-zero-bearing classes.
    MinS,
}

#[derive(Debug, Clone)]
pub struct FactorColoring {
    pub chi: usize,
    pub s: usize,
    /// Only `MinS` can prove minimality, and only below the exhaustive cap.
    pub s_proven_min: bool,
    pub coloring: Coloring,
}

#[derive(Debug, Clone)]
pub struct ChiBounds {
    pub factors: Vec<FactorColoring>,
    /// `sum chi_i - (n - 1)`
    pub lower: usize,
    /// `sum (chi_i - s_i) + prod s_i`
    pub upper: usize,
}

pub fn chi_bounds(factors: &[FiniteRing], mode: SMode, cfg: &SolverConfig) -> Result<ChiBounds> {
    if factors.is_empty() {
        return Err(Error::Precondition("need at least one factor".into()));
    }
    let per = factors
        .iter()
        .map(|r| {
            let g = BeckGraph::build(r)?;
            match mode {
                SMode::AnyOptimal => {
                    let (chi, coloring) = chromatic_number(&g, cfg)?;
                    let s = s_of(&g, &coloring)?.0;
                    Ok(FactorColoring { chi, s, s_proven_min: false, coloring })
                }
                SMode::MinS => {
                    let m = min_s_optimal_coloring(&g, cfg)?;
                    Ok(FactorColoring { chi: m.coloring.k(), s: m.s.0, s_proven_min: m.exact, coloring: m.coloring })
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let n = per.len();
    let lower = per.iter().map(|f| f.chi).sum::<usize>() - (n - 1);
    let upper = per.iter().map(|f| f.chi - f.s).sum::<usize>() + per.iter().map(|f| f.s).product::<usize>();
    Ok(ChiBounds { factors: per, lower, upper })
}

#[derive(Debug, Clone)]
pub struct ProductColoring {
    pub product: FiniteRing,
    pub coloring: Coloring,
    /// Square-zero-bearing classes of the result; always `s1 * s2`.
    pub s: usize,
}

/// Ordered pairs `(a, b)` with `ab = 0`, including `a = b`.
fn zero_pairs(r: &FiniteRing) -> Vec<(usize, usize)> {
    let n = r.size();
    (0..n).flat_map(|a| (0..n).filter(move |&b| r.mul_idx(a, b) == 0).map(move |b| (a, b))).collect()
}

fn check_proper(r: &FiniteRing, c: &Coloring, pairs: &[(usize, usize)]) -> Result<()> {
    if c.class_of().len() != r.size() {
        return Err(Error::Contract(format!(
            "colouring covers {} elements, {} has {}",
            c.class_of().len(),
            r.name(),
            r.size()
        )));
    }
    let cls = c.class_of();
    match pairs.iter().find(|&&(a, b)| a != b && cls[a] == cls[b]) {
        Some(&(a, b)) => Err(Error::Contract(format!(
            "colouring of {} is not proper: {} and {} share a class",
            r.name(),
            r.format_element(crate::ring::Elem(a)),
            r.format_element(crate::ring::Elem(b))
        ))),
        None => Ok(()),
    }
}

/// Class permutation putting square-zero-bearing classes first (stably);
/// returns `(new class of each old class, s)`.
fn square_zero_first(r: &FiniteRing, c: &Coloring) -> (Vec<usize>, usize) {
    let mut bearing = vec![false; c.k()];
    for (v, &cls) in c.class_of().iter().enumerate() {
        if r.mul_idx(v, v) == 0 {
            bearing[cls] = true;
        }
    }
    let order: Vec<usize> = (0..c.k()).filter(|&i| bearing[i]).chain((0..c.k()).filter(|&i| !bearing[i])).collect();
    let mut new_of = vec![0; c.k()];
    for (new, &old) in order.iter().enumerate() {
        new_of[old] = new;
    }
    (new_of, bearing.iter().filter(|&&b| b).count())
}

/// Colours `R1 x R2` from proper colourings of the factors with
/// `s1 s2 + (k1 - s1) + (k2 - s2)` colours. With classes reordered so the
/// square-zero-bearing ones come first, `(x, y)` with `x` in class `i` and
/// `y` in class `j` (0-based) gets
///
/// * `s2 i + j` when `i < s1`, `j < s2`;
/// * `s1 s2 + (j - s2)` when `i < s1`, `j >= s2`;
/// * `s1 s2 + (k2 - s2) + (i - s1)` when `i >= s1`.
///
/// The result is checked to be proper before it is returned.
pub fn product_coloring(r1: &FiniteRing, c1: &Coloring, r2: &FiniteRing, c2: &Coloring) -> Result<ProductColoring> {
    let pairs1 = zero_pairs(r1);
    let pairs2 = zero_pairs(r2);
    check_proper(r1, c1, &pairs1)?;
    check_proper(r2, c2, &pairs2)?;
    let (map1, s1) = square_zero_first(r1, c1);
    let (map2, s2) = square_zero_first(r2, c2);
    let (k1, k2) = (c1.k(), c2.k());
    let product = make_product(&[r1.clone(), r2.clone()])?;
    let n1 = r1.size();

    let colour = |x: usize, y: usize| -> usize {
        let i = map1[c1.class_of()[x]];
        let j = map2[c2.class_of()[y]];
        if i < s1 && j < s2 {
            s2 * i + j
        } else if i < s1 {
            s1 * s2 + (j - s2)
        } else {
            s1 * s2 + (k2 - s2) + (i - s1)
        }
    };
    let mut labels = vec![0; product.size()];
    for y in 0..r2.size() {
        for x in 0..n1 {
            labels[x + n1 * y] = colour(x, y);
        }
    }

    // (x, y) ~ (a, b) iff xa = 0 and yb = 0 and the pairs differ.
    for &(x, a) in &pairs1 {
        for &(y, b) in &pairs2 {
            let (u, v) = (x + n1 * y, a + n1 * b);
            if u != v && labels[u] == labels[v] {
                return Err(Error::Internal(format!(
                    "product colouring is improper at {} ~ {}",
                    product.format_element(crate::ring::Elem(u)),
                    product.format_element(crate::ring::Elem(v))
                )));
            }
        }
    }
    let coloring = Coloring::new(labels).map_err(|e| Error::Internal(e.to_string()))?;
    let expected = s1 * s2 + (k1 - s1) + (k2 - s2);
    if coloring.k() != expected {
        return Err(Error::Internal(format!("product colouring uses {} colours, expected {expected}", coloring.k())));
    }
    let (_, s) = square_zero_first(&product, &coloring);
    Ok(ProductColoring { product, coloring, s })
}

/// Folds `product_coloring` left to right over `n` factors; the result has
/// `sum (k_i - s_i) + prod s_i` colours.
pub fn product_coloring_n(rings: &[FiniteRing], colorings: &[Coloring]) -> Result<ProductColoring> {
    if rings.is_empty() || rings.len() != colorings.len() {
        return Err(Error::Precondition("need one colouring per factor, at least one factor".into()));
    }
    let first = &rings[0];
    let mut acc = ProductColoring {
        product: first.clone(),
        coloring: colorings[0].clone(),
        s: square_zero_first(first, &colorings[0]).1,
    };
    check_proper(first, &colorings[0], &zero_pairs(first))?;
    for (r, c) in rings.iter().zip(colorings).skip(1) {
        acc = product_coloring(&acc.product, &acc.coloring, r, c)?;
    }
    if rings.len() > 1 {
        // The nested product encodes elements exactly like the flat one.
        let flat = make_product(rings)?;
        acc.product = flat;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    fn z(n: u64) -> FiniteRing {
        make_zmod(n).unwrap()
    }

    fn exact_chi(r: &FiniteRing) -> usize {
        chromatic_number(&BeckGraph::build(r).unwrap(), &SolverConfig::default()).unwrap().0
    }

    #[test]
    fn z4_times_z2() {
        let c4 = Coloring::new(vec![0, 1, 1, 1]).unwrap();
        let c2 = Coloring::new(vec![0, 1]).unwrap();
        let p = product_coloring(&z(4), &c4, &z(2), &c2).unwrap();
        assert_eq!(p.coloring.k(), 3);
        assert_eq!(p.s, 2);
    }

    #[test]
    fn z2_times_z2_is_optimal() {
        let c2 = Coloring::new(vec![0, 1]).unwrap();
        let p = product_coloring(&z(2), &c2, &z(2), &c2).unwrap();
        assert_eq!(p.coloring.k(), 3);
        assert_eq!(exact_chi(&p.product), 3);
    }

    #[test]
    fn z9_times_z9() {
        // {0},{3},{6,...}: all three classes hold a square-zero element.
        let mut labels = vec![2; 9];
        labels[0] = 0;
        labels[3] = 1;
        let c9 = Coloring::new(labels).unwrap();
        let p = product_coloring(&z(9), &c9, &z(9), &c9).unwrap();
        assert_eq!(p.coloring.k(), 9);
        assert_eq!(crate::theorems::zn_formula(81).unwrap().value, 9);
    }

    #[test]
    fn rejects_improper_input() {
        let bad = Coloring::new(vec![0, 0, 1, 1]).unwrap();
        let c2 = Coloring::new(vec![0, 1]).unwrap();
        assert!(matches!(product_coloring(&z(4), &bad, &z(2), &c2), Err(Error::Contract(_))));
        let short = Coloring::new(vec![0, 1]).unwrap();
        assert!(matches!(product_coloring(&z(4), &short, &z(2), &c2), Err(Error::Contract(_))));
    }

    #[test]
    fn bounds_examples() {
        let cfg = SolverConfig::default();
        let b = chi_bounds(&[z(4), z(4)], SMode::MinS, &cfg).unwrap();
        assert_eq!((b.lower, b.upper), (3, 4));
        assert_eq!(exact_chi(&make_product(&[z(4), z(4)]).unwrap()), 4);

        let b = chi_bounds(&[z(2), z(2), z(2)], SMode::AnyOptimal, &cfg).unwrap();
        assert_eq!((b.lower, b.upper), (4, 4));

        let b = chi_bounds(&[z(8), z(8)], SMode::MinS, &cfg).unwrap();
        assert_eq!((b.lower, b.upper), (5, 6));
    }

    #[test]
    fn n_fold_matches_upper_bound() {
        let cfg = SolverConfig::default();
        let rings = [z(4), z(2), z(3)];
        let b = chi_bounds(&rings, SMode::MinS, &cfg).unwrap();
        let cols: Vec<Coloring> = b.factors.iter().map(|f| f.coloring.clone()).collect();
        let p = product_coloring_n(&rings, &cols).unwrap();
        assert_eq!(p.coloring.k(), b.upper);
        assert_eq!(p.product.size(), 24);
        assert_eq!(p.product.name(), "Z4 x Z2 x Z3");
    }
}
