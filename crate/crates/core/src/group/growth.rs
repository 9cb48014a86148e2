use std::collections::HashSet;

use super::{Group, GroupElement};
use crate::error::{Error, Result};

/// Default cap on the number of distinct elements a ball search may hold.
pub const DEFAULT_BALL_LIMIT: usize = 5_000_000;

/// Sphere growth ratio at or above which growth is reported as exponential.
pub const SPHERE_RATIO_THRESHOLD: f64 = 1.5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallSizes {
    /// `sizes[k] = |B_k|`.
    pub sizes: Vec<u64>,
    /// Set when the element limit stopped the search before radius `n`.
    pub truncated: bool,
}

/// Breadth-first search of the Cayley graph from the identity.
///
/// The generating set must be closed under inverses; it is not symmetrised.
pub fn ball_sizes(group: &Group, gens: &[GroupElement], n: usize, limit: usize) -> Result<BallSizes> {
    for s in gens {
        group.check(s)?;
    }
    for s in gens {
        let inv = group.inverse(s);
        if !gens.contains(&inv) {
            return Err(Error::NotInverseClosed(group.label(s)));
        }
    }
    let id = group.identity();
    let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    let mut sizes = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::new();
        for x in &frontier {
            for s in gens {
                let y = group.multiply(x, s);
                if !seen.contains(&y) {
                    if seen.len() >= limit {
                        return Ok(BallSizes { sizes, truncated: true });
                    }
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        sizes.push(seen.len() as u64);
        frontier = next;
    }
    Ok(BallSizes { sizes, truncated: false })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthClass {
    Polynomial(u32),
    ExponentialSuspected,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthEstimate {
    pub balls: Vec<u64>,
    /// `log2(|B_2m| / |B_m|)` at the largest `m` with `2m` in range.
    pub slope: f64,
    pub m: usize,
    pub classification: GrowthClass,
}

/// Doubling-slope estimate of the growth degree from `|B_0|, …, |B_n|`.
///
/// Growth counts as exponential when every sphere ratio `|S_{k+1}| / |S_k|`
/// in the upper half of the range is at least [`SPHERE_RATIO_THRESHOLD`].
pub fn growth_degree_estimate(balls: &[u64]) -> Result<GrowthEstimate> {
    if balls.len() < 4 {
        return Err(Error::InsufficientData { needed: 4, got: balls.len() });
    }
    let n = balls.len() - 1;
    let m = n / 2;
    let slope = (balls[2 * m] as f64 / balls[m] as f64).log2();

    let spheres: Vec<u64> = std::iter::once(balls[0])
        .chain(balls.windows(2).map(|w| w[1].saturating_sub(w[0])))
        .collect();
    let classification = if spheres.iter().skip(1).any(|&s| s == 0) {
        GrowthClass::Polynomial(0)
    } else {
        let start = (n / 2).max(1);
        let exponential = (start..n).all(|k| {
            spheres[k + 1] as f64 / spheres[k] as f64 >= SPHERE_RATIO_THRESHOLD
        });
        if exponential {
            GrowthClass::ExponentialSuspected
        } else {
            GrowthClass::Polynomial(slope.round().max(0.0) as u32)
        }
    };
    Ok(GrowthEstimate {
        balls: balls.to_vec(),
        slope,
        m,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn balls(group: &Group, n: usize) -> Vec<u64> {
        let r = ball_sizes(group, &group.standard_generators(), n, DEFAULT_BALL_LIMIT).unwrap();
        assert!(!r.truncated);
        r.sizes
    }

    #[test]
    fn integers() {
        let b = balls(&Group::free_abelian(1), 5);
        assert_eq!(b, [1, 3, 5, 7, 9, 11]);
    }

    #[test]
    fn lattice_and_free_group() {
        assert_eq!(balls(&Group::free_abelian(2), 3), [1, 5, 13, 25]);
        assert_eq!(balls(&Group::free(2).unwrap(), 3), [1, 5, 17, 53]);
    }

    #[test]
    fn heisenberg_first_balls() {
        assert_eq!(balls(&Group::Heisenberg, 4), [1, 5, 17, 53, 135]);
    }

    #[test]
    fn finite_group_saturates() {
        let b = balls(&Group::symmetric(3).unwrap(), 6);
        assert_eq!(*b.last().unwrap(), 6);
        let est = growth_degree_estimate(&b).unwrap();
        assert_eq!(est.classification, GrowthClass::Polynomial(0));
    }

    #[test]
    fn rejects_non_symmetric_generators() {
        let z = Group::free_abelian(1);
        let err = ball_sizes(&z, &[GroupElement::Vector(vec![1])], 3, 100).unwrap_err();
        assert!(matches!(err, Error::NotInverseClosed(_)));
    }

    #[test]
    fn memory_guard() {
        let f2 = Group::free(2).unwrap();
        let r = ball_sizes(&f2, &f2.standard_generators(), 10, 100).unwrap();
        assert!(r.truncated);
        assert_eq!(r.sizes, [1, 5, 17, 53]);
    }

    #[test]
    fn estimates() {
        let z2: Vec<u64> = (0..=64u64).map(|n| 2 * n * n + 2 * n + 1).collect();
        let est = growth_degree_estimate(&z2).unwrap();
        assert_eq!(est.classification, GrowthClass::Polynomial(2));
        assert!((est.slope - 2.0).abs() < 0.2);

        let f2: Vec<u64> = (0..=10u32).map(|k| if k == 0 { 1 } else { 2 * 3u64.pow(k) - 1 }).collect();
        assert_eq!(
            growth_degree_estimate(&f2).unwrap().classification,
            GrowthClass::ExponentialSuspected
        );
        assert!(matches!(
            growth_degree_estimate(&[1, 3, 5]),
            Err(Error::InsufficientData { needed: 4, got: 3 })
        ));
    }
}
