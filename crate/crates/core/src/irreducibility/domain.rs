use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::witness::{Derivation, WitnessPair, ZeroDivisorWitness};
use crate::error::{Error, Result};
use crate::exact::{factor_over_integers, minimal_polynomial, IntMatrix, IntPoly};
use crate::fusion::{RingElement, RingRef};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainDecision {
    /// `x` generates `R ⊗ Q` as a field: its minimal polynomial is
    /// irreducible of degree equal to the rank.
    Domain {
        x: RingElement,
        min_poly: IntPoly,
        seed: u64,
    },
    NotDomain {
        witness: Box<ZeroDivisorWitness>,
        seed: u64,
    },
    /// No sample settled the question.
    Undecided { trials: usize, seed: u64 },
    Inapplicable { reason: String },
}

impl DomainDecision {
    pub fn kind(&self) -> &'static str {
        match self {
            DomainDecision::Domain { .. } => "domain",
            DomainDecision::NotDomain { .. } => "not_domain",
            DomainDecision::Undecided { .. } => "undecided",
            DomainDecision::Inapplicable { .. } => "inapplicable",
        }
    }
}

/// Matrix of `y ↦ x·y` on the irreducible basis of a finite ring.
fn left_multiplication(x: &RingElement, rank: usize) -> Result<IntMatrix> {
    let ring = x.ring();
    let columns = (0..rank)
        .map(|j| {
            let p = x.multiply(&RingElement::basis(ring, j)?)?;
            Ok((0..rank).map(|i| p.coeff(i)).collect())
        })
        .collect::<Result<Vec<Vec<BigInt>>>>()?;
    Ok(IntMatrix::from_columns(rank, &columns))
}

enum Outcome {
    Domain(IntPoly),
    NotDomain(ZeroDivisorWitness),
    Neither,
}

fn examine(x: &RingElement, rank: usize) -> Result<Outcome> {
    let m = minimal_polynomial(&left_multiplication(x, rank)?)?;
    let factors = match factor_over_integers(&m) {
        Ok(f) => f,
        Err(Error::Unsupported(_)) => return Ok(Outcome::Neither),
        Err(e) => return Err(e),
    };
    if factors.is_irreducible() {
        return Ok(if m.degree() == Some(rank) {
            Outcome::Domain(m)
        } else {
            Outcome::Neither
        });
    }
    let f = factors.factors[0].0.clone();
    let h = m.div_exact(&f).expect("factor divides its product");
    let witness = ZeroDivisorWitness::new(
        WitnessPair::Fusion {
            a: x.eval_poly(&f),
            b: x.eval_poly(&h),
        },
        Derivation::MinPolyFactorSplit {
            x: x.clone(),
            min_poly: m,
            factor: f,
            cofactor: h,
        },
    )?;
    Ok(Outcome::NotDomain(witness))
}

/// Decides whether a commutative finite fusion ring has zero divisors by
/// looking at minimal polynomials of multiplication operators.
///
/// The nontrivial basis elements are tried first (the unit as well when it
/// is the only one), then `trials` random combinations with coefficients in
/// `-height..=height` drawn from a generator seeded with `seed`.
pub fn commutative_domain_decision(
    ring: &RingRef,
    trials: usize,
    height: u64,
    seed: u64,
) -> Result<DomainDecision> {
    let Some(finite) = ring.as_finite() else {
        return Ok(DomainDecision::Inapplicable {
            reason: "the ring is not of finite rank".into(),
        });
    };
    if !finite.is_commutative() {
        return Ok(DomainDecision::Inapplicable {
            reason: "the structure constants are not commutative".into(),
        });
    }
    let rank = finite.rank();
    let settle = |x: RingElement| -> Result<Option<DomainDecision>> {
        Ok(match examine(&x, rank)? {
            Outcome::Domain(min_poly) => Some(DomainDecision::Domain { x, min_poly, seed }),
            Outcome::NotDomain(w) => Some(DomainDecision::NotDomain {
                witness: Box::new(w),
                seed,
            }),
            Outcome::Neither => None,
        })
    };

    for i in (0..rank).filter(|&i| rank == 1 || i != finite.unit()) {
        if let Some(d) = settle(RingElement::basis(ring, i)?)? {
            return Ok(d);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = height as i64;
    for _ in 0..trials {
        let coeffs: Vec<i64> = (0..rank).map(|_| rng.gen_range(-h..=h)).collect();
        let x = RingElement::from_coeffs(ring, &coeffs)?;
        if x.is_zero() {
            continue;
        }
        if let Some(d) = settle(x)? {
            return Ok(d);
        }
    }
    Ok(DomainDecision::Undecided { trials, seed })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fusion::fixtures::*;
    use crate::fusion::{FusionRing, Su2};
    use crate::group::{group_fusion_ring, Group};

    fn decide(ring: FusionRing) -> DomainDecision {
        commutative_domain_decision(&ring.into_ref(), 20, 3, DEFAULT_SEED).unwrap()
    }

    #[test]
    fn rank_one() {
        let DomainDecision::Domain { x, min_poly, .. } = decide(trivial()) else { panic!() };
        assert!(x.is_unit());
        assert_eq!(min_poly, IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn fibonacci_is_domain() {
        let DomainDecision::Domain { x, min_poly, .. } = decide(fibonacci()) else { panic!() };
        assert_eq!(x.to_string(), "tau");
        assert_eq!(min_poly, IntPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn z2_and_ising_are_not() {
        let DomainDecision::NotDomain { witness, .. } = decide(cyclic(2)) else { panic!() };
        assert_eq!(witness.factors_display(), ("g - 1".into(), "g + 1".into()));
        let DomainDecision::NotDomain { witness, .. } = decide(ising()) else { panic!() };
        assert_eq!(witness.factors_display(), ("eps - 1".into(), "eps + 1".into()));
        assert!(witness.verify());
    }

    #[test]
    fn inapplicable() {
        let s3 = group_fusion_ring(&Group::symmetric(3).unwrap()).unwrap();
        assert!(matches!(decide(s3), DomainDecision::Inapplicable { .. }));
        let su2: RingRef = Arc::new(Su2);
        assert!(matches!(
            commutative_domain_decision(&su2, 1, 1, 0).unwrap(),
            DomainDecision::Inapplicable { .. }
        ));
    }
}
