//! Ideals as explicit element sets, closed by a worklist fixed point.

use std::sync::Arc;

use super::{Elem, FiniteRing};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Ideal {
    ring: FiniteRing,
    /// Sorted element indices.
    elements: Vec<Elem>,
    generators: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.elements == other.elements
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.elements == [Elem::ZERO]
    }

    /// Membership mask indexed by element.
    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.ring.size()];
        for e in &self.elements {
            m[e.0] = true;
        }
        m
    }

    /// Re-checks closure under addition and under multiplication by every
    /// ring element.
    pub fn is_closed(&self) -> bool {
        let m = self.mask();
        let r = &self.ring;
        m[0] && self.elements.iter().all(|a| {
            self.elements.iter().all(|b| m[r.add_idx(a.0, b.0)]) && r.elements().all(|x| m[r.mul_idx(x.0, a.0)])
        })
    }

    /// `IJ`: the ideal generated by all products `ab`, `a in I`, `b in J`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::Precondition("ideals belong to different rings".into()));
        }
        let r = &self.ring;
        let mut gens: Vec<Elem> = self
            .elements
            .iter()
            .flat_map(|a| other.elements.iter().map(move |b| Elem(r.mul_idx(a.0, b.0))))
            .collect();
        gens.sort_unstable();
        gens.dedup();
        r.ideal_generate(&gens)
    }

    /// `I^k` for `k >= 1`.
    pub fn power(&self, k: usize) -> Result<Ideal> {
        if k == 0 {
            return Err(Error::Precondition("ideal powers start at 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            if acc.is_zero() {
                break;
            }
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

/// The nilradical `J` with its index of nilpotency `m` (least `m` with
/// `J^m = 0`) and the chain `J, J^2, ..., J^m`.
#[derive(Debug, Clone)]
pub struct NilradicalProfile {
    pub ideal: Ideal,
    pub index_of_nilpotency: usize,
    pub power_sizes: Vec<usize>,
    powers: Vec<Ideal>,
}

impl NilradicalProfile {
    /// `J^k` for `k >= 1`; zero for `k >= m`.
    pub fn power(&self, k: usize) -> &Ideal {
        assert!(k >= 1, "nilradical powers start at 1");
        &self.powers[(k - 1).min(self.powers.len() - 1)]
    }
}

impl FiniteRing {
    pub(crate) fn same_ring(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
    }

    /// Smallest ideal containing `gens`: the additive subgroup generated by
    /// all multiples `x g`.
    pub fn ideal_generate(&self, gens: &[Elem]) -> Result<Ideal> {
        for &g in gens {
            self.check(g)?;
        }
        let n = self.size();
        let mut multiples = vec![false; n];
        for g in gens {
            for x in 0..n {
                multiples[self.mul_idx(x, g.0)] = true;
            }
        }
        let steps: Vec<usize> = (1..n).filter(|&a| multiples[a]).collect();
        let mut member = vec![false; n];
        member[0] = true;
        let mut work = vec![0usize];
        while let Some(a) = work.pop() {
            for &s in &steps {
                let b = self.add_idx(a, s);
                if !member[b] {
                    member[b] = true;
                    work.push(b);
                }
            }
        }
        let elements = (0..n).filter(|&a| member[a]).map(Elem).collect();
        Ok(Ideal { ring: self.clone(), elements, generators: gens.to_vec() })
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal { ring: self.clone(), elements: vec![Elem::ZERO], generators: vec![] }
    }

    pub fn nilradical(&self) -> NilradicalProfile {
        let nil: Vec<Elem> = self.elements().filter(|&a| self.is_nilpotent(a)).collect();
        let ideal = self.ideal_generate(&nil).expect("nilpotents are valid elements");
        debug_assert_eq!(ideal.elements, nil, "nilpotents of a commutative ring form an ideal");
        let mut powers = vec![ideal.clone()];
        while !powers.last().expect("non-empty").is_zero() {
            let next = powers.last().expect("non-empty").product(&ideal).expect("same ring");
            powers.push(next);
        }
        NilradicalProfile {
            index_of_nilpotency: powers.len(),
            power_sizes: powers.iter().map(Ideal::size).collect(),
            ideal,
            powers,
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::ring::{make_zmod, Elem};

    fn idx(v: &[Elem]) -> Vec<usize> {
        v.iter().map(|e| e.0).collect()
    }

    #[test]
    fn generate_in_z8() {
        let r = make_zmod(8).unwrap();
        let i = r.ideal_generate(&[Elem(2)]).unwrap();
        assert_eq!(idx(i.elements()), vec![0, 2, 4, 6]);
        assert!(i.is_closed());
        assert_eq!(idx(i.power(2).unwrap().elements()), vec![0, 4]);
        assert!(r.ideal_generate(&[Elem(0)]).unwrap().is_zero());
        assert_eq!(r.ideal_generate(&[Elem(3)]).unwrap().size(), 8);
    }

    #[test]
    fn nilradical_profiles() {
        let p = make_zmod(4).unwrap().nilradical();
        assert_eq!(idx(p.ideal.elements()), vec![0, 2]);
        assert_eq!((p.index_of_nilpotency, p.power_sizes.clone()), (2, vec![2, 1]));

        let p = make_zmod(8).unwrap().nilradical();
        assert_eq!(idx(p.ideal.elements()), vec![0, 2, 4, 6]);
        assert_eq!((p.index_of_nilpotency, p.power_sizes.clone()), (3, vec![4, 2, 1]));
        assert_eq!(idx(p.power(2).elements()), vec![0, 4]);
        assert!(p.power(7).is_zero());

        let p = make_zmod(6).unwrap().nilradical();
        assert_eq!((p.index_of_nilpotency, p.power_sizes.clone()), (1, vec![1]));
    }

    #[test]
    fn prime_power_nilradicals() {
        for p in [2u64, 3, 5] {
            for k in 1..=4u32 {
                let n = p.pow(k);
                if n > 4096 {
                    continue;
                }
                let r = make_zmod(n).unwrap();
                let prof = r.nilradical();
                let expected: Vec<usize> = (0..n as usize).step_by(p as usize).collect();
                assert_eq!(idx(prof.ideal.elements()), expected, "Z{n}");
                assert_eq!(prof.index_of_nilpotency, k as usize, "Z{n}");
                assert_eq!(r.is_reduced(), prof.index_of_nilpotency == 1);
            }
        }
    }
}
