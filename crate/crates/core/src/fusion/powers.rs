use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;

use super::RingElement;
use crate::error::{Error, Result};
use crate::exact::{last_dependence, relation_to_monic, IntMatrix, IntPoly};

/// The Z-span of `1, u, u², …` once it has stabilised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanResult {
    /// Irreducibles occurring in some power, ascending.
    pub support: Vec<usize>,
    /// Column `n` holds the coordinates of `u^n` over `support`, for
    /// `n = 0..=degree`.
    pub coordinates: IntMatrix,
    /// Least `n` with `u^n` in the span of the lower powers.
    pub degree: usize,
    /// Primitive relation `Σ c_n u^n = 0` among those columns, `c_degree > 0`.
    pub relation: Vec<BigInt>,
}

/// Computes successive powers of `u` until one depends linearly on the
/// previous ones. `cap` bounds the size of the support; it only matters for
/// lazily presented rings, since a finite ring can never exceed its rank.
pub fn powers_span(u: &RingElement, cap: usize) -> Result<SpanResult> {
    let ring = u.ring();
    let finite = ring.rank().is_some();
    let mut support: BTreeSet<usize> = BTreeSet::new();
    let mut powers = vec![RingElement::unit(ring)];
    support.insert(ring.unit());
    loop {
        let next = powers.last().unwrap().multiply(u)?;
        let before = support.len();
        support.extend(next.support());
        if !finite && support.len() > cap {
            return Err(Error::CapExceeded {
                cap,
                reached: support.len(),
            });
        }
        powers.push(next);
        // A new irreducible in the support rules out a dependence.
        if support.len() > before {
            continue;
        }
        let index: Vec<usize> = support.iter().copied().collect();
        let columns: Vec<Vec<BigInt>> = powers
            .iter()
            .map(|p| index.iter().map(|&i| p.coeff(i)).collect())
            .collect();
        if let Some(relation) = last_dependence(index.len(), &columns) {
            return Ok(SpanResult {
                coordinates: IntMatrix::from_columns(index.len(), &columns),
                support: index,
                degree: powers.len() - 1,
                relation,
            });
        }
    }
}

/// Monic integer polynomial of least degree annihilating `u`.
pub fn element_min_poly(u: &RingElement, cap: usize) -> Result<IntPoly> {
    relation_to_monic(powers_span(u, cap)?.relation)
}

/// Irreducibles occurring in the tensor powers of `u ⊕ u*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    /// Ascending basis indices, always containing the unit and `u`.
    pub members: Vec<usize>,
}

impl Closure {
    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Smallest set containing the unit and the irreducible `u` that is closed
/// under taking constituents of products with `u` and `u*`.
pub fn generated_closure(u: &RingElement, cap: usize) -> Result<Closure> {
    let ring = u.ring();
    let Some(gen) = u.as_irreducible() else {
        return Err(Error::NotIrreducible(u.to_string()));
    };
    let finite = ring.rank().is_some();
    let gens = [gen, ring.dual_index(gen)];
    let mut members: BTreeSet<usize> = [ring.unit(), gen].into_iter().collect();
    let mut queue: VecDeque<usize> = members.iter().copied().collect();
    let check = |members: &BTreeSet<usize>| {
        if !finite && members.len() > cap {
            Err(Error::CapExceeded {
                cap,
                reached: members.len(),
            })
        } else {
            Ok(())
        }
    };
    check(&members)?;
    while let Some(i) = queue.pop_front() {
        for &g in &gens {
            for &(k, _) in ring.fuse(i, g).iter() {
                if members.insert(k) {
                    check(&members)?;
                    queue.push_back(k);
                }
            }
        }
    }
    Ok(Closure {
        members: members.into_iter().collect(),
    })
}
