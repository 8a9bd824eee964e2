//! The fixed set of small rings the verification suite runs over.

use crate::dsl;
use crate::error::Result;
use crate::ring::FiniteRing;

pub const CATALOG: [&str; 8] = ["Z2", "Z3", "Z4", "Z8", "Z9", "Z12", "Z2[t]/(t^2)", "AN"];

/// Finite fields used for the reduced-ring checks; the last one is GF(4).
pub const FIELDS: [&str; 5] = ["Z2", "Z3", "Z5", "Z7", "Z2[t]/(t^2+t+1)"];

fn build(tokens: &[&str]) -> Result<Vec<FiniteRing>> {
    tokens.iter().map(|t| dsl::ring(t)).collect()
}

pub fn catalog() -> Result<Vec<FiniteRing>> {
    build(&CATALOG)
}

pub fn fields() -> Result<Vec<FiniteRing>> {
    build(&FIELDS)
}

fn size_of(rings: &[&FiniteRing]) -> u128 {
    rings.iter().map(|r| r.size() as u128).product()
}

/// Unordered selections with repetition of `k` rings whose sizes multiply to
/// at most `max_size`, in lexicographic order of catalog position.
pub fn combinations(rings: &[FiniteRing], k: usize, max_size: usize) -> Vec<Vec<FiniteRing>> {
    fn go(rings: &[FiniteRing], k: usize, max: u128, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<FiniteRing>>) {
        if cur.len() == k {
            out.push(cur.iter().map(|&i| rings[i].clone()).collect());
            return;
        }
        for i in start..rings.len() {
            cur.push(i);
            let picked: Vec<&FiniteRing> = cur.iter().map(|&j| &rings[j]).collect();
            if size_of(&picked) <= max {
                go(rings, k, max, i, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rings, k, max_size as u128, 0, &mut Vec::new(), &mut out);
    out
}

/// `R1 x ... x Rk` written the way the DSL prints it.
pub fn product_name(rings: &[FiniteRing]) -> String {
    rings.iter().map(FiniteRing::name).collect::<Vec<_>>().join(" x ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let c = catalog().unwrap();
        let sizes: Vec<usize> = c.iter().map(FiniteRing::size).collect();
        assert_eq!(sizes, vec![2, 3, 4, 8, 9, 12, 4, 32]);
        assert!(fields().unwrap().iter().all(FiniteRing::is_reduced));
    }

    #[test]
    fn combination_counts() {
        let c = catalog().unwrap();
        assert_eq!(combinations(&c, 2, usize::MAX).len(), 36);
        let triples = combinations(&c, 3, 256);
        assert!(triples.iter().all(|t| t.iter().map(FiniteRing::size).product::<usize>() <= 256));
        assert!(triples.iter().any(|t| product_name(t) == "Z2 x Z2 x AN"));
        assert!(!triples.iter().any(|t| product_name(t) == "Z3 x Z3 x AN"));
    }
}
