//! Finite commutative rings with unity.
//!
//! Every ring is enumerable: its elements are the integers `0..size`, where
//! an index is the mixed-radix encoding of the element's coordinate tuple
//! (first coordinate fastest-varying). Index 0 is always the additive zero.
//!
//! Three concrete kinds exist:
//! * `Z_n`, one coordinate of order `n`;
//! * direct products, encoded mixed-radix over the factor encodings;
//! * structure-constant rings: a free choice of additive orders for a basis
//!   `e_0..e_{d-1}` together with the products `e_i e_j` as coordinate tuples.
//!   Quotients such as `Z4[X,Y,Z]/M` are entered this way.

mod builtin;
mod ideal;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Law, Result};

pub use builtin::{make_anderson_naseer, AnVariant};
pub use ideal::{Ideal, NilradicalProfile};

/// Rings at or below this size are validated exhaustively on construction.
pub const VALIDATION_CAP: usize = 64;

/// Construction of rings larger than this is refused unless a larger cap is
/// passed explicitly.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Rings at or below this size get precomputed addition and multiplication tables.
pub const TABLE_CAP: usize = 256;

/// An element of a finite ring, identified by its canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    Zmod,
    Product,
    Structure,
}

/// Products of basis elements for a structure-constant ring, keyed by the
/// (unordered) basis pair. A pair may be given in either order.
pub type StructureTable = BTreeMap<(usize, usize), Vec<u64>>;

#[derive(Debug)]
struct StructureData {
    orders: Vec<usize>,
    unity: Vec<usize>,
    /// `consts[i * dim + j]` is the coordinate tuple of `e_i e_j`.
    consts: Vec<Vec<usize>>,
}

impl StructureData {
    fn dim(&self) -> usize {
        self.orders.len()
    }

    fn decode(&self, mut index: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|&o| {
                let c = index % o;
                index /= o;
                c
            })
            .collect()
    }

    fn encode(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .rev()
            .fold(0, |acc, (&c, &o)| acc * o + c % o)
    }

    fn mul_coords(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let d = self.dim();
        let mut out = vec![0u64; d];
        for i in 0..d {
            if a[i] == 0 {
                continue;
            }
            for j in 0..d {
                if b[j] == 0 {
                    continue;
                }
                let coef = (a[i] * b[j]) as u64;
                for (k, &t) in self.consts[i * d + j].iter().enumerate() {
                    out[k] = (out[k] + coef * t as u64) % self.orders[k] as u64;
                }
            }
        }
        out.into_iter().map(|c| c as usize).collect()
    }
}

#[derive(Debug)]
enum Descriptor {
    Zmod(usize),
    Product { factors: Vec<FiniteRing> },
    Structure(StructureData),
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

#[derive(Debug)]
struct RingData {
    size: usize,
    unity: usize,
    descriptor: Descriptor,
    tables: Option<Tables>,
}

/// An immutable, validated finite commutative ring with unity.
///
/// Cloning is cheap; the ring data is shared.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    data: Arc<RingData>,
    name: Arc<str>,
}

/// `Z_n`. For `n = 1` this is the zero ring, whose unity is zero.
pub fn make_zmod(n: u64) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::InvalidModulus(n));
    }
    if n > DEFAULT_SIZE_CAP as u64 {
        return Err(Error::Capacity { size: n as u128, cap: DEFAULT_SIZE_CAP });
    }
    let n = n as usize;
    Ok(FiniteRing::finish(format!("Z{n}"), n, 1 % n, Descriptor::Zmod(n)))
}

/// Direct product of `factors` under the default size cap.
pub fn make_product(factors: &[FiniteRing]) -> Result<FiniteRing> {
    make_product_with_cap(factors, DEFAULT_SIZE_CAP)
}

pub fn make_product_with_cap(factors: &[FiniteRing], cap: usize) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(Error::Descriptor("a direct product needs at least one factor".into()));
    }
    let size: u128 = factors.iter().map(|f| f.size() as u128).product();
    if size > cap as u128 {
        return Err(Error::Capacity { size, cap });
    }
    let size = size as usize;
    let unity = encode_mixed(factors.iter().map(|f| (f.unity().0, f.size())));
    let name = factors.iter().map(|f| f.name_for_product()).collect::<Vec<_>>().join(" x ");
    let ring = FiniteRing::finish(name, size, unity, Descriptor::Product { factors: factors.to_vec() });
    if size <= VALIDATION_CAP {
        ring.validate()?;
    }
    Ok(ring)
}

/// Structure-constant ring under the default size cap.
pub fn make_structure_ring(
    additive_orders: &[u64],
    unity_coords: &[u64],
    products: &StructureTable,
) -> Result<FiniteRing> {
    make_structure_ring_with_cap(additive_orders, unity_coords, products, DEFAULT_SIZE_CAP)
}

pub fn make_structure_ring_with_cap(
    additive_orders: &[u64],
    unity_coords: &[u64],
    products: &StructureTable,
    cap: usize,
) -> Result<FiniteRing> {
    let d = additive_orders.len();
    if d == 0 {
        return Err(Error::Descriptor("structure ring needs a non-empty basis".into()));
    }
    if let Some(&o) = additive_orders.iter().find(|&&o| o == 0) {
        return Err(Error::InvalidModulus(o));
    }
    let size: u128 = additive_orders.iter().map(|&o| o as u128).product();
    if size > cap as u128 {
        return Err(Error::Capacity { size, cap });
    }
    if unity_coords.len() != d {
        return Err(Error::Descriptor(format!("unity has {} coordinates, basis has {d}", unity_coords.len())));
    }
    let orders: Vec<usize> = additive_orders.iter().map(|&o| o as usize).collect();
    let reduce = |t: &[u64]| -> Vec<usize> { t.iter().zip(&orders).map(|(&c, &o)| (c % o as u64) as usize).collect() };

    let mut consts = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let t = products
                .get(&(i, j))
                .or_else(|| products.get(&(j, i)))
                .ok_or_else(|| Error::Descriptor(format!("missing product e{i}*e{j}")))?;
            if t.len() != d {
                return Err(Error::Descriptor(format!("product e{i}*e{j} has {} coordinates, basis has {d}", t.len())));
            }
            consts.push(reduce(t));
        }
    }
    let unity = reduce(unity_coords);
    let data = StructureData { orders, unity, consts };
    let size = size as usize;
    let unity = data.encode(&data.unity);
    let name = format!("S{:?}", additive_orders);
    check_structure_constants(&data)?;
    let ring = FiniteRing::finish(name, size, unity, Descriptor::Structure(data));
    if size <= VALIDATION_CAP {
        ring.validate()?;
    }
    Ok(ring)
}

/// Axiom check on basis elements. For a bilinear product defined by
/// structure constants this is equivalent to the exhaustive check, and it
/// runs in O(d^4) regardless of ring size.
fn check_structure_constants(s: &StructureData) -> Result<()> {
    let d = s.dim();
    let basis = |i: usize| -> Vec<usize> {
        let mut v = vec![0; d];
        v[i] = 1 % s.orders[i];
        v
    };
    let show = |i: usize| format!("e{i}");
    let fail = |law, a: String, b: String, c: String| Err(Error::NotARing { law, a, b, c });
    for i in 0..d {
        // o_i * e_i = 0, so o_i * (e_i e_j) must vanish for the product to be well defined.
        for j in 0..d {
            let t = &s.consts[i * d + j];
            let ok = t.iter().zip(&s.orders).all(|(&c, &o)| (c * s.orders[i]).is_multiple_of(o));
            if !ok {
                return fail(Law::Distributive, show(i), show(j), format!("{}*e{j}", s.orders[i]));
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            if s.consts[i * d + j] != s.consts[j * d + i] {
                return fail(Law::MulCommutative, show(i), show(j), "-".into());
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let left = s.mul_coords(&s.consts[i * d + j], &basis(k));
                let right = s.mul_coords(&basis(i), &s.consts[j * d + k]);
                if left != right {
                    return fail(Law::MulAssociative, show(i), show(j), show(k));
                }
            }
        }
    }
    for i in 0..d {
        let b = basis(i);
        if s.mul_coords(&s.unity, &b) != b {
            return fail(Law::Unity, "1".into(), show(i), "-".into());
        }
    }
    Ok(())
}

fn encode_mixed(parts: impl DoubleEndedIterator<Item = (usize, usize)>) -> usize {
    parts.rev().fold(0, |acc, (digit, radix)| acc * radix + digit)
}

impl FiniteRing {
    fn finish(name: String, size: usize, unity: usize, descriptor: Descriptor) -> FiniteRing {
        let name: Arc<str> = Arc::from(name);
        let mut data = RingData { size, unity, descriptor, tables: None };
        if size <= TABLE_CAP && !matches!(data.descriptor, Descriptor::Zmod(_)) {
            let probe = FiniteRing { data: Arc::new(data), name: Arc::clone(&name) };
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    add.push(probe.add_slow(a, b) as u32);
                    mul.push(probe.mul_slow(a, b) as u32);
                }
            }
            data = Arc::into_inner(probe.data).expect("probe ring is uniquely owned");
            data.tables = Some(Tables { add, mul });
        }
        FiniteRing { data: Arc::new(data), name }
    }

    /// Human-readable name, e.g. `Z4 x Z3`.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Returns a copy of this ring carrying a different display name.
    pub fn renamed(&self, name: impl Into<String>) -> FiniteRing {
        FiniteRing { data: Arc::clone(&self.data), name: Arc::from(name.into()) }
    }

    fn name_for_product(&self) -> String {
        self.name.to_string()
    }

    pub fn kind(&self) -> RingKind {
        match self.data.descriptor {
            Descriptor::Zmod(_) => RingKind::Zmod,
            Descriptor::Product { .. } => RingKind::Product,
            Descriptor::Structure(_) => RingKind::Structure,
        }
    }

    pub fn size(&self) -> usize {
        self.data.size
    }

    pub fn unity(&self) -> Elem {
        Elem(self.data.unity)
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    /// Factors of a direct product, `None` for the other kinds.
    pub fn factors(&self) -> Option<&[FiniteRing]> {
        match &self.data.descriptor {
            Descriptor::Product { factors } => Some(factors),
            _ => None,
        }
    }

    /// Modulus of a `Z_n` ring.
    pub fn modulus(&self) -> Option<usize> {
        match self.data.descriptor {
            Descriptor::Zmod(n) => Some(n),
            _ => None,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size()).map(Elem)
    }

    pub fn element(&self, index: usize) -> Result<Elem> {
        self.check(Elem(index))
    }

    fn check(&self, a: Elem) -> Result<Elem> {
        if a.0 < self.size() {
            Ok(a)
        } else {
            Err(Error::Element { index: a.0, size: self.size() })
        }
    }

    pub fn add(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(Elem(self.add_idx(a.0, b.0)))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(Elem(self.mul_idx(a.0, b.0)))
    }

    pub fn neg(&self, a: Elem) -> Result<Elem> {
        self.check(a)?;
        Ok(Elem(self.neg_idx(a.0)))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Result<Elem> {
        let nb = self.neg(b)?;
        self.add(a, nb)
    }

    /// Addition on raw indices. Indices must be in range.
    #[inline]
    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        match &self.data.tables {
            Some(t) => t.add[a * self.data.size + b] as usize,
            None => self.add_slow(a, b),
        }
    }

    /// Multiplication on raw indices. Indices must be in range.
    #[inline]
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        match &self.data.tables {
            Some(t) => t.mul[a * self.data.size + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    pub fn neg_idx(&self, a: usize) -> usize {
        match &self.data.descriptor {
            Descriptor::Zmod(n) => (n - a) % n,
            Descriptor::Product { factors } => self.map_factors(a, factors, |f, x| f.neg_idx(x)),
            Descriptor::Structure(s) => {
                let c: Vec<usize> = s.decode(a).iter().zip(&s.orders).map(|(&c, &o)| (o - c) % o).collect();
                s.encode(&c)
            }
        }
    }

    fn add_slow(&self, a: usize, b: usize) -> usize {
        match &self.data.descriptor {
            Descriptor::Zmod(n) => (a + b) % n,
            Descriptor::Product { factors } => self.zip_factors(a, b, factors, |f, x, y| f.add_idx(x, y)),
            Descriptor::Structure(s) => {
                let (ca, cb) = (s.decode(a), s.decode(b));
                let c: Vec<usize> = ca.iter().zip(&cb).zip(&s.orders).map(|((x, y), o)| (x + y) % o).collect();
                s.encode(&c)
            }
        }
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        match &self.data.descriptor {
            Descriptor::Zmod(n) => (a * b) % n,
            Descriptor::Product { factors } => self.zip_factors(a, b, factors, |f, x, y| f.mul_idx(x, y)),
            Descriptor::Structure(s) => s.encode(&s.mul_coords(&s.decode(a), &s.decode(b))),
        }
    }

    fn zip_factors(
        &self,
        mut a: usize,
        mut b: usize,
        factors: &[FiniteRing],
        op: impl Fn(&FiniteRing, usize, usize) -> usize,
    ) -> usize {
        let mut out = 0;
        let mut scale = 1;
        for f in factors {
            let n = f.size();
            out += scale * op(f, a % n, b % n);
            a /= n;
            b /= n;
            scale *= n;
        }
        out
    }

    fn map_factors(&self, mut a: usize, factors: &[FiniteRing], op: impl Fn(&FiniteRing, usize) -> usize) -> usize {
        let mut out = 0;
        let mut scale = 1;
        for f in factors {
            let n = f.size();
            out += scale * op(f, a % n);
            a /= n;
            scale *= n;
        }
        out
    }

    /// Splits a product-ring element into its factor components.
    pub fn project(&self, a: Elem) -> Result<Vec<Elem>> {
        self.check(a)?;
        match &self.data.descriptor {
            Descriptor::Product { factors } => {
                let mut rest = a.0;
                Ok(factors
                    .iter()
                    .map(|f| {
                        let e = Elem(rest % f.size());
                        rest /= f.size();
                        e
                    })
                    .collect())
            }
            _ => Ok(vec![a]),
        }
    }

    /// Builds a product-ring element from factor components.
    pub fn embed(&self, parts: &[Elem]) -> Result<Elem> {
        match &self.data.descriptor {
            Descriptor::Product { factors } if factors.len() == parts.len() => {
                for (f, p) in factors.iter().zip(parts) {
                    f.check(*p)?;
                }
                Ok(Elem(encode_mixed(factors.iter().zip(parts).map(|(f, p)| (p.0, f.size())))))
            }
            Descriptor::Product { factors } => Err(Error::Descriptor(format!(
                "expected {} components, got {}",
                factors.len(),
                parts.len()
            ))),
            _ if parts.len() == 1 => self.check(parts[0]),
            _ => Err(Error::Descriptor("only product rings have several components".into())),
        }
    }

    /// Coordinate tuple of an element (factor components are flattened for products).
    pub fn coords(&self, a: Elem) -> Vec<usize> {
        match &self.data.descriptor {
            Descriptor::Zmod(_) => vec![a.0],
            Descriptor::Structure(s) => s.decode(a.0),
            Descriptor::Product { factors } => {
                let mut rest = a.0;
                let mut out = Vec::new();
                for f in factors {
                    out.extend(f.coords(Elem(rest % f.size())));
                    rest /= f.size();
                }
                out
            }
        }
    }

    /// Coordinate-tuple rendering: `5` in `Z_n`, `(a,b,...)` for structure
    /// rings, and nested tuples for products.
    pub fn format_element(&self, a: Elem) -> String {
        match &self.data.descriptor {
            Descriptor::Zmod(_) => a.0.to_string(),
            Descriptor::Structure(s) => {
                let parts: Vec<String> = s.decode(a.0).iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
            Descriptor::Product { factors } => {
                let mut rest = a.0;
                let parts: Vec<String> = factors
                    .iter()
                    .map(|f| {
                        let s = f.format_element(Elem(rest % f.size()));
                        rest /= f.size();
                        s
                    })
                    .collect();
                format!("({})", parts.join(","))
            }
        }
    }

    /// Exhaustive O(size^3) check of the commutative ring axioms.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        let show = |x: usize| self.format_element(Elem(x));
        let fail = |law, a, b, c| Err(Error::NotARing { law, a: show(a), b: show(b), c: show(c) });
        let one = self.data.unity;
        for a in 0..n {
            if self.mul_idx(one, a) != a {
                return fail(Law::Unity, one, a, a);
            }
            if self.mul_idx(0, a) != 0 {
                return fail(Law::ZeroAbsorbs, 0, a, a);
            }
            for b in 0..n {
                if self.add_idx(a, b) != self.add_idx(b, a) {
                    return fail(Law::AddCommutative, a, b, b);
                }
                let ab = self.mul_idx(a, b);
                if ab != self.mul_idx(b, a) {
                    return fail(Law::MulCommutative, a, b, b);
                }
                let a_plus_b = self.add_idx(a, b);
                for c in 0..n {
                    if self.add_idx(a_plus_b, c) != self.add_idx(a, self.add_idx(b, c)) {
                        return fail(Law::AddAssociative, a, b, c);
                    }
                    if self.mul_idx(ab, c) != self.mul_idx(a, self.mul_idx(b, c)) {
                        return fail(Law::MulAssociative, a, b, c);
                    }
                    if self.mul_idx(a, self.add_idx(b, c)) != self.add_idx(ab, self.mul_idx(a, c)) {
                        return fail(Law::Distributive, a, b, c);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_square_zero(&self, a: Elem) -> bool {
        self.mul_idx(a.0, a.0) == 0
    }

    /// `u` is a unit iff some `v` satisfies `uv = 1` (exhaustive partner scan).
    pub fn is_unit(&self, a: Elem) -> bool {
        let one = self.data.unity;
        (0..self.size()).any(|v| self.mul_idx(a.0, v) == one)
    }

    /// Nonzero `a` with `ab = 0` for some nonzero `b`.
    pub fn is_zero_divisor(&self, a: Elem) -> bool {
        a.0 != 0 && (1..self.size()).any(|b| self.mul_idx(a.0, b) == 0)
    }

    /// Iterates powers of `a` until zero appears (nilpotent) or a power
    /// repeats (not nilpotent). Terminates within `size` steps.
    pub fn is_nilpotent(&self, a: Elem) -> bool {
        let mut seen = vec![false; self.size()];
        let mut p = a.0;
        loop {
            if p == 0 {
                return true;
            }
            if seen[p] {
                return false;
            }
            seen[p] = true;
            p = self.mul_idx(p, a.0);
        }
    }

    pub fn units(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    pub fn zero_divisors(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_zero_divisor(a)).collect()
    }

    /// Local iff the non-units are closed under addition. The zero ring has
    /// no maximal ideal and is not local.
    pub fn is_local(&self) -> bool {
        self.local_witness().is_none() && self.size() > 1
    }

    /// Two non-units whose sum is a unit, if any.
    pub fn local_witness(&self) -> Option<(Elem, Elem)> {
        let unit: Vec<bool> = self.elements().map(|a| self.is_unit(a)).collect();
        let non_units: Vec<usize> = (0..self.size()).filter(|&a| !unit[a]).collect();
        for (i, &a) in non_units.iter().enumerate() {
            for &b in &non_units[i..] {
                if unit[self.add_idx(a, b)] {
                    return Some((Elem(a), Elem(b)));
                }
            }
        }
        None
    }

    pub fn is_reduced(&self) -> bool {
        (1..self.size()).all(|a| !self.is_nilpotent(Elem(a)))
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.mul_idx(e.0, e.0) == e.0).collect()
    }

    /// Number of field factors of a finite reduced ring, counted as the
    /// primitive idempotents: nonzero idempotents `e` with no splitting
    /// `e = e1 + e2`, `e1 e2 = 0`, `e1, e2` nonzero idempotents.
    pub fn field_factor_count(&self) -> Result<usize> {
        if !self.is_reduced() {
            return Err(Error::Precondition(format!("{} is not reduced", self.name())));
        }
        Ok(self.primitive_idempotents().len())
    }

    /// `e` splits as `f + (e - f)` exactly when some nonzero idempotent
    /// `f != e` lies below it (`ef = f`), so that is what is checked.
    pub fn primitive_idempotents(&self) -> Vec<Elem> {
        let nonzero: Vec<usize> = self.idempotents().into_iter().map(|e| e.0).filter(|&e| e != 0).collect();
        nonzero
            .iter()
            .copied()
            .filter(|&e| !nonzero.iter().any(|&f| f != e && self.mul_idx(e, f) == f))
            .map(Elem)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FiniteRing {
        make_zmod(n).unwrap()
    }

    #[test]
    fn zmod_arithmetic() {
        let r = z(12);
        assert_eq!(r.size(), 12);
        assert_eq!(r.mul(Elem(4), Elem(3)).unwrap(), Elem(0));
        assert_eq!(r.add(Elem(7), Elem(8)).unwrap(), Elem(3));
        assert_eq!(r.neg(Elem(5)).unwrap(), Elem(7));
        assert!(matches!(r.mul(Elem(12), Elem(1)), Err(Error::Element { index: 12, size: 12 })));
    }

    #[test]
    fn zero_ring_and_invalid_modulus() {
        let r = z(1);
        assert_eq!(r.size(), 1);
        assert_eq!(r.unity(), Elem::ZERO);
        assert_eq!(make_zmod(0).unwrap_err(), Error::InvalidModulus(0));
    }

    #[test]
    fn z4_has_single_nonzero_nilpotent() {
        let r = z(4);
        assert_eq!(r.mul_idx(2, 2), 0);
        let nil: Vec<usize> = (1..4).filter(|&a| r.is_nilpotent(Elem(a))).collect();
        assert_eq!(nil, vec![2]);
    }

    #[test]
    fn product_is_componentwise() {
        let r = make_product(&[z(2), z(2)]).unwrap();
        assert_eq!(r.size(), 4);
        let a = r.embed(&[Elem(1), Elem(0)]).unwrap();
        let b = r.embed(&[Elem(0), Elem(1)]).unwrap();
        assert_eq!(r.mul(a, b).unwrap(), Elem::ZERO);
        assert_eq!(r.unity(), r.embed(&[Elem(1), Elem(1)]).unwrap());
        assert_eq!(r.format_element(a), "(1,0)");
        assert_eq!(r.embed(&[Elem(0), Elem(0)]).unwrap(), Elem::ZERO);
    }

    #[test]
    fn product_encoding_first_factor_fastest() {
        let r = make_product(&[z(4), z(3)]).unwrap();
        assert_eq!(r.embed(&[Elem(1), Elem(0)]).unwrap(), Elem(1));
        assert_eq!(r.embed(&[Elem(0), Elem(1)]).unwrap(), Elem(4));
        assert_eq!(r.project(Elem(11)).unwrap(), vec![Elem(3), Elem(2)]);
    }

    #[test]
    fn empty_product_and_capacity() {
        assert!(matches!(make_product(&[]), Err(Error::Descriptor(_))));
        let big = z(100);
        assert!(matches!(make_product(&[big.clone(), big]), Err(Error::Capacity { size: 10000, cap: 4096 })));
    }

    fn table(entries: &[((usize, usize), &[u64])]) -> StructureTable {
        entries.iter().map(|(k, v)| (*k, v.to_vec())).collect()
    }

    #[test]
    fn structure_ring_z4_t_mod_t2_minus_2() {
        let t = table(&[((0, 0), &[1, 0]), ((0, 1), &[0, 1]), ((1, 1), &[2, 0])]);
        let r = make_structure_ring(&[4, 2], &[1, 0], &t).unwrap();
        assert_eq!(r.size(), 8);
        r.validate().unwrap();
        // t = index 4 (coords (0,1)); t*t = 2.
        assert_eq!(r.mul_idx(4, 4), 2);
    }

    #[test]
    fn structure_ring_dual_numbers_over_z2() {
        let t = table(&[((0, 0), &[1, 0]), ((0, 1), &[0, 1]), ((1, 1), &[0, 0])]);
        let r = make_structure_ring(&[2, 2], &[1, 0], &t).unwrap();
        let nil: Vec<usize> = r.elements().filter(|&a| r.is_nilpotent(a)).map(|a| a.0).collect();
        assert_eq!(nil, vec![0, 2]);
    }

    #[test]
    fn structure_ring_missing_entry() {
        let t = table(&[((0, 0), &[1, 0]), ((0, 1), &[0, 1])]);
        assert!(matches!(make_structure_ring(&[2, 2], &[1, 0], &t), Err(Error::Descriptor(_))));
    }

    #[test]
    fn structure_ring_non_associative_rejected() {
        // e1*e1 = e2, e1*e2 = e1, e2*e2 = 0: (e1 e1) e2 = 0 but e1 (e1 e2) = e2.
        let t = table(&[
            ((0, 0), &[1, 0, 0]),
            ((0, 1), &[0, 1, 0]),
            ((0, 2), &[0, 0, 1]),
            ((1, 1), &[0, 0, 1]),
            ((1, 2), &[0, 1, 0]),
            ((2, 2), &[0, 0, 0]),
        ]);
        let err = make_structure_ring(&[2, 2, 2], &[1, 0, 0], &t).unwrap_err();
        assert!(matches!(err, Error::NotARing { law: Law::MulAssociative, .. }), "{err:?}");
    }

    #[test]
    fn unity_must_act_as_identity() {
        let t = table(&[((0, 0), &[1, 0]), ((0, 1), &[1, 1]), ((1, 1), &[1, 1])]);
        let err = make_structure_ring(&[2, 2], &[1, 0], &t).unwrap_err();
        assert!(matches!(err, Error::NotARing { .. }), "{err:?}");
    }

    #[test]
    fn structure_ring_ill_defined_product_rejected() {
        // e1 has additive order 2 but e1*e1 = 1 in Z4 would need order 4.
        let t = table(&[((0, 0), &[1, 0]), ((0, 1), &[0, 1]), ((1, 1), &[1, 0])]);
        let err = make_structure_ring(&[4, 2], &[1, 0], &t).unwrap_err();
        assert!(matches!(err, Error::NotARing { law: Law::Distributive, .. }), "{err:?}");
    }

    #[test]
    fn exhaustive_validation_agrees_with_basis_check_on_gf4() {
        let t = table(&[((0, 0), &[1, 0]), ((0, 1), &[0, 1]), ((1, 1), &[1, 1])]);
        let r = make_structure_ring(&[2, 2], &[1, 0], &t).unwrap();
        r.validate().unwrap();
        assert!((1..4).all(|a| r.is_unit(Elem(a))));
    }

    #[test]
    fn predicates_on_zmod() {
        let r12 = z(12);
        assert!(r12.is_zero_divisor(Elem(6)));
        assert!(r12.is_unit(Elem(5)));
        assert!(!r12.is_zero_divisor(Elem(0)));
        let r8 = z(8);
        assert!(r8.is_nilpotent(Elem(2)));
        assert!(r8.is_nilpotent(Elem(6)));
        assert!(!r8.is_nilpotent(Elem(3)));
    }

    #[test]
    fn locality() {
        assert!(z(4).is_local());
        assert!(!z(6).is_local());
        let (a, b) = z(6).local_witness().unwrap();
        assert!(z(6).is_unit(Elem((a.0 + b.0) % 6)));
        assert!(!z(1).is_local());
    }

    #[test]
    fn field_factors() {
        assert_eq!(z(30).field_factor_count().unwrap(), 3);
        let prims: Vec<usize> = z(30).primitive_idempotents().iter().map(|e| e.0).collect();
        assert_eq!(prims, vec![6, 10, 15]);
        assert_eq!(z(7).field_factor_count().unwrap(), 1);
        let r = make_product(&[z(2), z(2)]).unwrap();
        assert_eq!(r.field_factor_count().unwrap(), 2);
        assert!(matches!(z(4).field_factor_count(), Err(Error::Precondition(_))));
    }
}
