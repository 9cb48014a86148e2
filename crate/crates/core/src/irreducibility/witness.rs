use std::fmt;

use num_bigint::BigInt;

use super::multimatrix::MultimatrixElement;
use crate::error::{Error, Result};
use crate::exact::IntPoly;
use crate::fusion::RingElement;
use crate::group::{GroupElement, GroupRingElement};

/// The two factors of a zero product, in whichever ambient ring produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessPair {
    Fusion {
        a: RingElement,
        b: RingElement,
    },
    Group {
        a: GroupRingElement,
        b: GroupRingElement,
    },
    Multimatrix {
        a: MultimatrixElement,
        b: MultimatrixElement,
    },
}

/// How a witness was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    /// `a = u - d·1`, `b = q(u)` where `p = (x - d)·q` is the minimal
    /// polynomial of the torsion irreducible `u` and `d = dim u`.
    TorsionMinPoly {
        u: usize,
        min_poly: IntPoly,
        dim: BigInt,
        cofactor: IntPoly,
    },
    /// `a = f(x)`, `b = h(x)` where `m = f·h` is the minimal polynomial of `x`.
    MinPolyFactorSplit {
        x: RingElement,
        min_poly: IntPoly,
        factor: IntPoly,
        cofactor: IntPoly,
    },
    /// First hit of an exhaustive enumeration.
    BruteForce { support_cap: usize, height_cap: u64 },
    /// `(1 - g)(1 + g + … + g^(n-1)) = 0` for `g` of order `n`.
    GroupTorsion { g: GroupElement, order: u64 },
    /// Orthogonal central idempotents of a multimatrix algebra.
    CentralIdempotents,
}

impl Derivation {
    pub fn kind(&self) -> &'static str {
        match self {
            Derivation::TorsionMinPoly { .. } => "torsion_min_poly",
            Derivation::MinPolyFactorSplit { .. } => "min_poly_factor_split",
            Derivation::BruteForce { .. } => "brute_force",
            Derivation::GroupTorsion { .. } => "group_torsion",
            Derivation::CentralIdempotents => "central_idempotents",
        }
    }
}

/// A certificate that a ring is not a domain: nonzero `a`, `b` with `a·b = 0`.
///
/// [`ZeroDivisorWitness::new`] re-checks the product; the fields are public
/// so that deserialised or hand-built witnesses can be checked with
/// [`verify_witness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDivisorWitness {
    pub pair: WitnessPair,
    pub derivation: Derivation,
}

impl ZeroDivisorWitness {
    pub fn new(pair: WitnessPair, derivation: Derivation) -> Result<Self> {
        let w = ZeroDivisorWitness { pair, derivation };
        match w.check() {
            Ok(()) => Ok(w),
            Err(reason) => Err(Error::WitnessRejected(reason)),
        }
    }

    fn check(&self) -> std::result::Result<(), String> {
        let (a_zero, b_zero, product_zero) = match &self.pair {
            WitnessPair::Fusion { a, b } => {
                let ab = a.multiply(b).map_err(|e| e.to_string())?;
                (a.is_zero(), b.is_zero(), ab.is_zero())
            }
            WitnessPair::Group { a, b } => {
                let ab = a.multiply(b).map_err(|e| e.to_string())?;
                (a.is_zero(), b.is_zero(), ab.is_zero())
            }
            WitnessPair::Multimatrix { a, b } => {
                let ab = a.multiply(b).map_err(|e| e.to_string())?;
                (a.is_zero(), b.is_zero(), ab.is_zero())
            }
        };
        if a_zero {
            return Err("first factor is zero".into());
        }
        if b_zero {
            return Err("second factor is zero".into());
        }
        if !product_zero {
            return Err("product is not zero".into());
        }
        Ok(())
    }

    pub fn verify(&self) -> bool {
        self.check().is_ok()
    }

    pub fn factors_display(&self) -> (String, String) {
        match &self.pair {
            WitnessPair::Fusion { a, b } => (a.to_string(), b.to_string()),
            WitnessPair::Group { a, b } => (a.to_string(), b.to_string()),
            WitnessPair::Multimatrix { a, b } => (a.to_string(), b.to_string()),
        }
    }
}

/// Recomputes `a·b` in the ambient ring and checks `a ≠ 0`, `b ≠ 0`, `a·b = 0`.
pub fn verify_witness(w: &ZeroDivisorWitness) -> bool {
    w.verify()
}

impl fmt::Display for ZeroDivisorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.factors_display();
        write!(f, "({a}) * ({b}) = 0")
    }
}
