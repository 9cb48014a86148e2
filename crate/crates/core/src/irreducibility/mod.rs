//! Zero-divisor certificates and domain decisions for fusion rings, group
//! rings and multimatrix algebras.
//!
//! A nontrivial irreducible `u` with integer dimension `d` and minimal
//! polynomial `p` always yields a witness: the dimension homomorphism forces
//! `p(d) = 0`, so `p = (x - d)·q` and `(u - d)·q(u) = p(u) = 0`, while
//! `q(u) ≠ 0` by minimality of `p`.

mod domain;
mod multimatrix;
mod search;
mod witness;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::synthetic_divide;
use crate::fusion::{element_min_poly, RingElement};

pub use domain::{commutative_domain_decision, DomainDecision, DEFAULT_SEED};
pub use multimatrix::{multimatrix_zero_divisor, MultimatrixElement};
pub use search::{bounded_group_ring_search, bounded_zero_divisor_search};
pub use witness::{verify_witness, Derivation, WitnessPair, ZeroDivisorWitness};

/// Witness `(u - dim(u)·1, q(u))` from the minimal polynomial of a nontrivial
/// irreducible `u`. `cap` bounds the power span for lazy rings.
pub fn witness_from_torsion(u: &RingElement, cap: usize) -> Result<ZeroDivisorWitness> {
    let Some(index) = u.as_irreducible() else {
        return Err(Error::NotIrreducible(u.to_string()));
    };
    if u.is_unit() {
        return Err(Error::TrivialRepresentation);
    }
    let ring = u.ring();
    let d = u.dim()?;
    let p = element_min_poly(u, cap)?;
    if !p.eval(&d).is_zero() {
        return Err(Error::InconsistentDimension {
            label: ring.label(index),
            dim: d.to_string(),
            poly: p.to_string(),
        });
    }
    let q = synthetic_divide(&p, &d)?;
    let a = u - &RingElement::unit(ring).scale(&d);
    let b = u.eval_poly(&q);
    ZeroDivisorWitness::new(
        WitnessPair::Fusion { a, b },
        Derivation::TorsionMinPoly {
            u: index,
            min_poly: p,
            dim: d,
            cofactor: q,
        },
    )
}
