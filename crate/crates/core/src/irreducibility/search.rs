use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;

use super::witness::{Derivation, WitnessPair, ZeroDivisorWitness};
use crate::error::{Error, Result};
use crate::fusion::{RingElement, RingRef};
use crate::group::{Group, GroupElement, GroupRingElement};

/// Coefficient patterns for elements supported on `k` given positions:
/// first coefficient in `1..=h`, the rest in `-h..=h` without zero, each
/// position running from the smallest value upwards.
fn coefficient_patterns(k: usize, h: i64) -> Vec<Vec<i64>> {
    let others: Vec<i64> = (-h..=h).filter(|&c| c != 0).collect();
    let mut out: Vec<Vec<i64>> = (1..=h).map(|c| vec![c]).collect();
    for _ in 1..k {
        out = out
            .into_iter()
            .flat_map(|p| {
                others.iter().map(move |&c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Candidate elements over `n` basis positions in canonical order: by
/// support size, then index combination, then coefficient pattern.
fn candidates(n: usize, support_cap: usize, height_cap: u64) -> Vec<Vec<(usize, i64)>> {
    let h = height_cap as i64;
    let mut out = Vec::new();
    for k in 1..=support_cap.min(n) {
        let patterns = coefficient_patterns(k, h);
        for combo in combinations(n, k) {
            for pattern in &patterns {
                out.push(combo.iter().copied().zip(pattern.iter().copied()).collect());
            }
        }
    }
    out
}

/// Exhaustive search for `a·b = 0` among elements of a finite fusion ring
/// with at most `support_cap` nonzero coefficients of absolute value at most
/// `height_cap`. Returns the first pair in canonical order.
///
/// `None` only means there is no witness at this scale.
pub fn bounded_zero_divisor_search(
    ring: &RingRef,
    support_cap: usize,
    height_cap: u64,
) -> Result<Option<ZeroDivisorWitness>> {
    let Some(rank) = ring.rank() else {
        return Err(Error::LazyRingRejected);
    };
    let elements = candidates(rank, support_cap, height_cap)
        .into_iter()
        .map(|terms| {
            RingElement::from_terms(ring, terms.into_iter().map(|(i, c)| (i, BigInt::from(c))))
        })
        .collect::<Result<Vec<_>>>()?;
    for a in &elements {
        for b in &elements {
            if a.multiply(b)?.is_zero() {
                let w = ZeroDivisorWitness::new(
                    WitnessPair::Fusion {
                        a: a.clone(),
                        b: b.clone(),
                    },
                    Derivation::BruteForce {
                        support_cap,
                        height_cap,
                    },
                )?;
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Same search in the integral group ring, with supports drawn from the
/// ball of radius `window_radius` in the standard generators.
pub fn bounded_group_ring_search(
    group: &Arc<Group>,
    window_radius: usize,
    support_cap: usize,
    height_cap: u64,
) -> Result<Option<ZeroDivisorWitness>> {
    let gens = group.standard_generators();
    let id = group.identity();
    let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    for _ in 0..window_radius {
        let mut next = Vec::new();
        for x in &frontier {
            for s in &gens {
                let y = group.multiply(x, s);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut window: Vec<GroupElement> = seen.into_iter().collect();
    window.sort();
    let elements = candidates(window.len(), support_cap, height_cap)
        .into_iter()
        .map(|terms| {
            GroupRingElement::from_terms(
                group,
                terms.into_iter().map(|(i, c)| (window[i].clone(), BigInt::from(c))),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    for a in &elements {
        for b in &elements {
            if a.multiply(b)?.is_zero() {
                let w = ZeroDivisorWitness::new(
                    WitnessPair::Group {
                        a: a.clone(),
                        b: b.clone(),
                    },
                    Derivation::BruteForce {
                        support_cap,
                        height_cap,
                    },
                )?;
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}
