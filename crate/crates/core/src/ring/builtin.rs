//! The 32-element local ring `Z4[X,Y,Z]/M` of Anderson and Naseer.
//!
//! The generator list of `M` as usually quoted contains both `Z^2 - 2` and
//! `Z^2`, which cannot hold together in a ring of this size. Both readings are
//! built here; which one has clique number 5 and chromatic number 6 is decided
//! by the solvers (see `theorems::canonical_an_variant`).

use super::{make_structure_ring, FiniteRing, StructureTable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnVariant {
    /// `z^2 = 0`
    ZSquaredZero,
    /// `z^2 = 2`
    ZSquaredTwo,
}

impl AnVariant {
    pub const ALL: [AnVariant; 2] = [AnVariant::ZSquaredZero, AnVariant::ZSquaredTwo];

    pub fn z_squared(self) -> u64 {
        match self {
            AnVariant::ZSquaredZero => 0,
            AnVariant::ZSquaredTwo => 2,
        }
    }

    /// Name used by the ring-expression syntax.
    pub fn token(self) -> &'static str {
        match self {
            AnVariant::ZSquaredZero => "AN0",
            AnVariant::ZSquaredTwo => "AN2",
        }
    }

    pub fn ring(self) -> FiniteRing {
        make_anderson_naseer(self.z_squared()).expect("both built-in variants are rings")
    }
}

/// Basis `{1, x, y, z}` with additive orders `(4, 2, 2, 2)` and
/// `x^2 = y^2 = yz = 2`, `xy = xz = 0`, `z^2 = z_squared`.
pub fn make_anderson_naseer(z_squared: u64) -> Result<FiniteRing> {
    let variant = match z_squared {
        0 => AnVariant::ZSquaredZero,
        2 => AnVariant::ZSquaredTwo,
        other => return Err(Error::Precondition(format!("z^2 must be 0 or 2, got {other}"))),
    };
    let two = vec![2, 0, 0, 0];
    let zero = vec![0, 0, 0, 0];
    let mut t = StructureTable::new();
    for i in 0..4 {
        let mut e = vec![0; 4];
        e[i] = 1;
        t.insert((0, i), e);
    }
    t.insert((1, 1), two.clone());
    t.insert((2, 2), two.clone());
    t.insert((3, 3), vec![z_squared, 0, 0, 0]);
    t.insert((1, 2), zero.clone());
    t.insert((1, 3), zero);
    t.insert((2, 3), two);
    Ok(make_structure_ring(&[4, 2, 2, 2], &[1, 0, 0, 0], &t)?.renamed(variant.token()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Elem;

    fn basis(r: &FiniteRing, i: usize) -> Elem {
        // orders (4,2,2,2): 1 -> 1, x -> 4, y -> 8, z -> 16
        let idx = [1, 4, 8, 16][i];
        r.element(idx).unwrap()
    }

    #[test]
    fn both_variants_are_local_with_sixteen_units() {
        for v in AnVariant::ALL {
            let r = v.ring();
            assert_eq!(r.size(), 32);
            r.validate().unwrap();
            assert_eq!(r.units().len(), 16);
            // units are exactly the elements with odd constant coordinate
            for a in r.elements() {
                assert_eq!(r.is_unit(a), r.coords(a)[0] % 2 == 1);
            }
            assert!(r.is_local());
        }
    }

    #[test]
    fn generator_relations() {
        let r = AnVariant::ZSquaredZero.ring();
        let (x, y, z) = (basis(&r, 1), basis(&r, 2), basis(&r, 3));
        assert_eq!(r.mul(x, y).unwrap(), Elem::ZERO);
        assert_eq!(r.mul(x, z).unwrap(), Elem::ZERO);
        assert_eq!(r.mul(y, z).unwrap(), Elem(2));
        assert_eq!(r.mul(x, x).unwrap(), Elem(2));
        assert_eq!(r.mul(z, z).unwrap(), Elem::ZERO);
        let r2 = AnVariant::ZSquaredTwo.ring();
        let z2 = basis(&r2, 3);
        assert_eq!(r2.mul(z2, z2).unwrap(), Elem(2));
    }

    #[test]
    fn rejects_other_z_squared() {
        assert!(matches!(make_anderson_naseer(1), Err(Error::Precondition(_))));
    }
}
