use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{FusionRing, FusionRules};

/// One violated fusion-ring axiom together with the index tuple witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `unit ⊗ j` or `j ⊗ unit` is not exactly `j`.
    Unit { j: usize },
    /// `(i⊗j)⊗k` and `i⊗(j⊗k)` differ in the multiplicity of `l`.
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        left: u64,
        right: u64,
    },
    UnitNotSelfDual,
    DualNotInvolution { i: usize },
    /// `N_ij^unit` differs from `δ_{j, i*}`.
    DualPairing { i: usize, j: usize, value: u64 },
    /// `N_ij^k != N_{j* i*}^{k*}`.
    DualReversal { i: usize, j: usize, k: usize },
    /// `N_ij^k` differs from `N_{i* k}^j` or `N_{k j*}^i`.
    FrobeniusReciprocity { i: usize, j: usize, k: usize },
    DimUnit { value: BigInt },
    DimNotPositive { i: usize },
    DimDual { i: usize },
    /// `Σ_k N_ij^k d_k != d_i d_j`.
    DimHomomorphism {
        i: usize,
        j: usize,
        left: BigInt,
        right: BigInt,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Unit { j } => write!(f, "unit axiom fails for {j}"),
            Associativity { i, j, k, l, left, right } => write!(
                f,
                "associativity fails at ({i},{j},{k},{l}): (ij)k has {left}, i(jk) has {right}"
            ),
            UnitNotSelfDual => write!(f, "unit is not self-dual"),
            DualNotInvolution { i } => write!(f, "dual is not an involution at {i}"),
            DualPairing { i, j, value } => {
                write!(f, "N_({i},{j})^unit = {value} contradicts the dual pairing")
            }
            DualReversal { i, j, k } => write!(f, "N_({i},{j})^{k} != N_(j*,i*)^(k*)"),
            FrobeniusReciprocity { i, j, k } => {
                write!(f, "Frobenius reciprocity fails at ({i},{j},{k})")
            }
            DimUnit { value } => write!(f, "dimension of the unit is {value}, not 1"),
            DimNotPositive { i } => write!(f, "dimension of {i} is not positive"),
            DimDual { i } => write!(f, "dimension of {i} differs from that of its dual"),
            DimHomomorphism { i, j, left, right } => write!(
                f,
                "dimension is not multiplicative at ({i},{j}): dim(i*j) = {left}, dim(i)dim(j) = {right}"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every fusion-ring axiom on a finite ring. The dimension checks run
/// only when the ring carries dimensions.
pub fn validate(ring: &FusionRing) -> ValidationReport {
    let all: Vec<usize> = (0..ring.rank()).collect();
    check(ring, &all, true)
}

/// Checks the axioms on every tuple drawn from `0..window`, for rings that
/// can only be queried (multiplicities of constituents outside the window
/// are still compared exactly).
pub fn spot_check(rules: &dyn FusionRules, window: usize) -> ValidationReport {
    let window = rules.rank().map_or(window, |r| r.min(window));
    let indices: Vec<usize> = (0..window).collect();
    check(rules, &indices, rules.rank() == Some(window))
}

fn n(rules: &dyn FusionRules, i: usize, j: usize, k: usize) -> u64 {
    rules
        .fuse(i, j)
        .iter()
        .find(|&&(kk, _)| kk == k)
        .map_or(0, |&(_, n)| n)
}

fn check(rules: &dyn FusionRules, idx: &[usize], complete: bool) -> ValidationReport {
    let mut v = Vec::new();
    let unit = rules.unit();

    for &j in idx {
        let expected = [(j, 1u64)];
        if rules.fuse(unit, j).as_ref() != expected || rules.fuse(j, unit).as_ref() != expected {
            v.push(Violation::Unit { j });
        }
    }

    for &i in idx {
        for &j in idx {
            let ij = rules.fuse(i, j);
            for &k in idx {
                let mut left: BTreeMap<usize, u64> = BTreeMap::new();
                for &(m, a) in ij.iter() {
                    for &(l, b) in rules.fuse(m, k).iter() {
                        *left.entry(l).or_default() += a * b;
                    }
                }
                let mut right: BTreeMap<usize, u64> = BTreeMap::new();
                for &(m, a) in rules.fuse(j, k).iter() {
                    for &(l, b) in rules.fuse(i, m).iter() {
                        *right.entry(l).or_default() += a * b;
                    }
                }
                if left != right {
                    let l = left
                        .keys()
                        .chain(right.keys())
                        .copied()
                        .find(|l| left.get(l) != right.get(l))
                        .unwrap();
                    v.push(Violation::Associativity {
                        i,
                        j,
                        k,
                        l,
                        left: left.get(&l).copied().unwrap_or(0),
                        right: right.get(&l).copied().unwrap_or(0),
                    });
                }
            }
        }
    }

    if rules.dual_index(unit) != unit {
        v.push(Violation::UnitNotSelfDual);
    }
    for &i in idx {
        if rules.dual_index(rules.dual_index(i)) != i {
            v.push(Violation::DualNotInvolution { i });
        }
    }
    for &i in idx {
        for &j in idx {
            let value = n(rules, i, j, unit);
            let expected = u64::from(j == rules.dual_index(i));
            if value != expected {
                v.push(Violation::DualPairing { i, j, value });
            }
        }
    }
    for &i in idx {
        let di = rules.dual_index(i);
        for &j in idx {
            let dj = rules.dual_index(j);
            // Constituents on either side of each identity, so that a
            // missing entry on one side is also caught.
            let mut ks: BTreeSet<usize> = rules.fuse(i, j).iter().map(|&(k, _)| k).collect();
            if complete {
                ks.extend(idx.iter().copied());
            } else {
                ks.extend(rules.fuse(dj, di).iter().map(|&(k, _)| rules.dual_index(k)));
            }
            for k in ks {
                let nijk = n(rules, i, j, k);
                let dk = rules.dual_index(k);
                if nijk != n(rules, dj, di, dk) {
                    v.push(Violation::DualReversal { i, j, k });
                }
                if nijk != n(rules, di, k, j) || nijk != n(rules, k, dj, i) {
                    v.push(Violation::FrobeniusReciprocity { i, j, k });
                }
            }
        }
    }

    if rules.has_dimensions() {
        let d = |i: usize| rules.dimension(i).expect("dims present");
        if !d(unit).is_one() {
            v.push(Violation::DimUnit { value: d(unit) });
        }
        for &i in idx {
            if !d(i).is_positive() {
                v.push(Violation::DimNotPositive { i });
            }
            if d(i) != d(rules.dual_index(i)) {
                v.push(Violation::DimDual { i });
            }
        }
        for &i in idx {
            for &j in idx {
                let left: BigInt = rules.fuse(i, j).iter().map(|&(k, m)| d(k) * m).sum();
                let right = d(i) * d(j);
                if left != right {
                    v.push(Violation::DimHomomorphism { i, j, left, right });
                }
            }
        }
    }

    ValidationReport { violations: v }
}
