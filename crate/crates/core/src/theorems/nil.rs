use crate::error::{Error, Result};
use crate::graph::BeckGraph;
use crate::ring::{make_product, Elem, FiniteRing, NilradicalProfile, TABLE_CAP};
use crate::solvers::{max_clique, SolverConfig};

use super::omega_chi;

/// Parity class of an index of nilpotency: `2n` or `2m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnType {
    EvenN(usize),
    OddM(usize),
}

impl AnType {
    /// The power of `J` the bound is built from: `J^n` or `J^m`.
    pub fn exponent(self) -> usize {
        match self {
            AnType::EvenN(n) => n,
            AnType::OddM(m) => m,
        }
    }

    pub fn index(self) -> usize {
        match self {
            AnType::EvenN(n) => 2 * n,
            AnType::OddM(m) => 2 * m - 1,
        }
    }
}

/// Reduced rings have index 1 and land in the odd class with `m = 1`.
pub fn natural_an_type(profile: &NilradicalProfile) -> AnType {
    let idx = profile.index_of_nilpotency;
    if idx.is_multiple_of(2) {
        AnType::EvenN(idx / 2)
    } else {
        AnType::OddM(idx.div_ceil(2))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilFactor {
    pub name: String,
    pub index: usize,
    pub kind: AnType,
    /// `|J^n|` or `|J^m|`.
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilBound {
    pub factors: Vec<NilFactor>,
    /// Number of odd-type factors.
    pub r: usize,
    pub bound: usize,
    /// Direct clique number of the product, when it fits in a table.
    pub omega: Option<usize>,
}

impl NilBound {
    pub fn respected(&self) -> Option<bool> {
        self.omega.map(|w| self.bound <= w)
    }
}

pub fn nilradical_bound(factors: &[FiniteRing], cfg: &SolverConfig) -> Result<NilBound> {
    if factors.is_empty() {
        return Err(Error::Precondition("need at least one factor".into()));
    }
    let per: Vec<NilFactor> = factors
        .iter()
        .map(|f| {
            let p = f.nilradical();
            let kind = natural_an_type(&p);
            NilFactor { name: f.name().to_string(), index: p.index_of_nilpotency, kind, size: p.power(kind.exponent()).size() }
        })
        .collect();
    let r = per.iter().filter(|f| matches!(f.kind, AnType::OddM(_))).count();
    let bound = per.iter().map(|f| f.size).product::<usize>() + r;
    let size: u128 = factors.iter().map(|f| f.size() as u128).product();
    let omega = if size <= TABLE_CAP as u128 {
        let product = make_product(factors)?;
        Some(max_clique(&BeckGraph::build(&product)?, cfg)?.size())
    } else {
        None
    };
    Ok(NilBound { factors: per, r, bound, omega })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnConditionReport {
    pub kind: AnType,
    /// Every `xy = 0` has `x` or `y` in `J^k`.
    pub membership: bool,
    /// Even type only: every `xy = 0` with `x` outside `J^(n+1)` has `y` in `J^n`.
    pub even_clause: Option<bool>,
    /// First pair breaking a clause, as element indices.
    pub counterexample: Option<(Elem, Elem)>,
    pub holds: bool,
    /// `(bound, omega, chi)` for the single ring, filled in when `holds`.
    pub equality: Option<(usize, usize, usize)>,
}

impl AnConditionReport {
    pub fn equality_holds(&self) -> Option<bool> {
        self.equality.map(|(b, w, c)| b == w && w == c)
    }
}

pub fn check_an_condition(r: &FiniteRing, kind: AnType, cfg: &SolverConfig) -> Result<AnConditionReport> {
    let profile = r.nilradical();
    let natural = natural_an_type(&profile);
    if kind != natural {
        return Err(Error::Precondition(format!(
            "{} has index of nilpotency {}, which is {natural:?}, not {kind:?}",
            r.name(),
            profile.index_of_nilpotency
        )));
    }
    let k = kind.exponent();
    let jk = profile.power(k).mask();
    let jk1 = profile.power(k + 1).mask();
    let even = matches!(kind, AnType::EvenN(_));

    let n = r.size();
    let mut membership = true;
    let mut even_clause = true;
    let mut counterexample = None;
    for x in 0..n {
        for y in 0..n {
            if r.mul_idx(x, y) != 0 {
                continue;
            }
            let in_member = jk[x] || jk[y];
            let in_even = !even || jk1[x] || jk[y];
            if !in_member {
                membership = false;
            }
            if !in_even {
                even_clause = false;
            }
            if (!in_member || !in_even) && counterexample.is_none() {
                counterexample = Some((Elem(x), Elem(y)));
            }
        }
    }
    let holds = membership && even_clause;
    let equality = if holds {
        let bound = profile.power(k).size() + usize::from(!even);
        let (w, c) = omega_chi(r, cfg)?;
        Some((bound, w, c))
    } else {
        None
    };
    Ok(AnConditionReport { kind, membership, even_clause: even.then_some(even_clause), counterexample, holds, equality })
}
