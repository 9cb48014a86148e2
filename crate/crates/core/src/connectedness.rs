//! Torsion of irreducible representations and connectedness at the level of
//! the fusion ring.
//!
//! An irreducible `u` is torsion when the tensor powers of `u ⊕ u*` involve
//! only finitely many irreducibles; the group is connected when the trivial
//! representation is the only torsion irreducible. For finite rings the
//! closure is always finite. For lazy rings the search is cut off at a cap and
//! reported as inconclusive, never as non-torsion.

use crate::error::{Error, Result};
use crate::fusion::{generated_closure, Closure, RingElement, RingRef};

pub const DEFAULT_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionVerdict {
    Torsion { closure: Closure },
    /// The closure outgrew the cap. `support` is its size when the search
    /// stopped and `stage` the cap in force.
    Inconclusive { stage: usize, support: usize },
}

impl TorsionVerdict {
    pub fn is_torsion(&self) -> bool {
        matches!(self, TorsionVerdict::Torsion { .. })
    }
}

pub fn torsion_check(u: &RingElement, cap: usize) -> Result<TorsionVerdict> {
    match generated_closure(u, cap) {
        Ok(closure) => Ok(TorsionVerdict::Torsion { closure }),
        Err(Error::CapExceeded { cap, reached }) => Ok(TorsionVerdict::Inconclusive {
            stage: cap,
            support: reached,
        }),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionIrreducible {
    pub index: usize,
    pub label: String,
    pub closure: Closure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectednessReport {
    Connected,
    NotConnected { torsion: Vec<TorsionIrreducible> },
}

/// Every irreducible of a finite fusion ring is torsion, so the ring is
/// connected exactly when its rank is one. The report lists each nontrivial
/// irreducible with its closure as evidence.
pub fn connectedness_report(ring: &RingRef) -> Result<ConnectednessReport> {
    let Some(rank) = ring.rank() else {
        return Err(Error::LazyRingRejected);
    };
    let mut torsion = Vec::new();
    for i in (0..rank).filter(|&i| i != ring.unit()) {
        let u = RingElement::basis(ring, i)?;
        match torsion_check(&u, rank)? {
            TorsionVerdict::Torsion { closure } => torsion.push(TorsionIrreducible {
                index: i,
                label: ring.label(i),
                closure,
            }),
            TorsionVerdict::Inconclusive { .. } => unreachable!("finite closure"),
        }
    }
    if torsion.is_empty() {
        Ok(ConnectednessReport::Connected)
    } else {
        Ok(ConnectednessReport::NotConnected { torsion })
    }
}
