//! Fusion rings: free Z-modules on a set of irreducible labels with
//! nonnegative integer structure constants, a duality involution and an
//! optional integer dimension function.
//!
//! Finite rings store their structure constants sparsely. Infinite rings such
//! as Rep SU(2) are presented through [`FusionRules`] as product oracles and
//! share every operation with the finite case.

mod element;
mod lazy;
mod powers;
mod validate;

use std::borrow::Cow;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub use element::RingElement;
pub use lazy::Su2;
pub use powers::{element_min_poly, generated_closure, powers_span, Closure, SpanResult};
pub use validate::{spot_check, validate, ValidationReport, Violation};

/// Decomposition of a product of two irreducibles: `(k, N_ij^k)` pairs with
/// `k` ascending and every multiplicity positive.
pub type Decomposition = [(usize, u64)];

/// The operation surface shared by finite and lazily presented fusion rings.
pub trait FusionRules: fmt::Debug + Send + Sync {
    fn unit(&self) -> usize;

    /// Number of irreducibles, or `None` for an infinite ring.
    fn rank(&self) -> Option<usize>;

    fn label(&self, i: usize) -> String;

    fn index_of(&self, label: &str) -> Option<usize>;

    fn dual_index(&self, i: usize) -> usize;

    fn fuse(&self, i: usize, j: usize) -> Cow<'_, Decomposition>;

    /// Integer dimension of irreducible `i`, when the ring carries one.
    fn dimension(&self, i: usize) -> Option<BigInt>;

    fn has_dimensions(&self) -> bool;

    fn as_finite(&self) -> Option<&FusionRing> {
        None
    }

    /// Stable identifier for built-in lazy rings, used for ring equality.
    fn builtin_id(&self) -> Option<&'static str> {
        None
    }

    fn contains_index(&self, i: usize) -> bool {
        self.rank().is_none_or(|r| i < r)
    }
}

pub type RingRef = Arc<dyn FusionRules>;

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    if std::ptr::addr_eq(Arc::as_ptr(a), Arc::as_ptr(b)) {
        return true;
    }
    match (a.as_finite(), b.as_finite()) {
        (Some(x), Some(y)) => x == y,
        (None, None) => a.builtin_id().is_some() && a.builtin_id() == b.builtin_id(),
        _ => false,
    }
}

/// A fusion ring of finite rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    products: BTreeMap<(usize, usize), Vec<(usize, u64)>>,
    dims: Option<Vec<BigInt>>,
}

impl FusionRing {
    /// Builds a ring from sparse structure constants `(i, j, k, N_ij^k)`.
    ///
    /// Only the shape is checked here (index ranges, label uniqueness, no
    /// duplicate triples). The ring axioms are checked by [`validate`], which
    /// reports violations instead of failing.
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        triples: impl IntoIterator<Item = (usize, usize, usize, u64)>,
        dims: Option<Vec<BigInt>>,
    ) -> Result<Self> {
        let rank = labels.len();
        let bad = |msg: String| Err(Error::InvalidRing(msg));
        if rank == 0 {
            return bad("a fusion ring needs at least one label".into());
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains(char::is_whitespace) || l.contains(['+', '*']) {
                return bad(format!("label {l:?} must be nonempty without spaces, '+' or '*'"));
            }
            if let Some(j) = seen.insert(l.as_str(), i) {
                return bad(format!("label {l:?} used for both {j} and {i}"));
            }
        }
        if unit >= rank {
            return bad(format!("unit index {unit} out of range"));
        }
        if dual.len() != rank || dual.iter().any(|&d| d >= rank) {
            return bad("dual must map every index into 0..rank".into());
        }
        if let Some(d) = &dims {
            if d.len() != rank {
                return bad(format!("{} dims for rank {rank}", d.len()));
            }
        }
        let mut products: BTreeMap<(usize, usize), Vec<(usize, u64)>> = BTreeMap::new();
        for (i, j, k, n) in triples {
            if i >= rank || j >= rank || k >= rank {
                return bad(format!("triple ({i}, {j}, {k}) out of range"));
            }
            if n == 0 {
                continue;
            }
            let entry = products.entry((i, j)).or_default();
            if entry.iter().any(|&(kk, _)| kk == k) {
                return bad(format!("triple ({i}, {j}, {k}) given twice"));
            }
            entry.push((k, n));
        }
        for dec in products.values_mut() {
            dec.sort_unstable();
        }
        Ok(FusionRing {
            labels,
            unit,
            dual,
            products,
            dims,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    pub fn dims(&self) -> Option<&[BigInt]> {
        self.dims.as_deref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u64 {
        self.products
            .get(&(i, j))
            .and_then(|dec| dec.iter().find(|&&(kk, _)| kk == k))
            .map_or(0, |&(_, n)| n)
    }

    /// All nonzero structure constants in `(i, j, k)` order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize, u64)> + '_ {
        self.products
            .iter()
            .flat_map(|(&(i, j), dec)| dec.iter().map(move |&(k, n)| (i, j, k, n)))
    }

    pub fn is_commutative(&self) -> bool {
        self.products
            .iter()
            .all(|(&(i, j), dec)| self.products.get(&(j, i)) == Some(dec))
    }

    /// Same ring with the dimension function replaced.
    pub fn with_dims(&self, dims: Option<Vec<BigInt>>) -> Result<Self> {
        Self::new(
            self.labels.clone(),
            self.unit,
            self.dual.clone(),
            self.triples(),
            dims,
        )
    }

    pub fn into_ref(self) -> RingRef {
        Arc::new(self)
    }
}

impl FusionRules for FusionRing {
    fn unit(&self) -> usize {
        self.unit
    }

    fn rank(&self) -> Option<usize> {
        Some(self.labels.len())
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }

    fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn dual_index(&self, i: usize) -> usize {
        self.dual[i]
    }

    fn fuse(&self, i: usize, j: usize) -> Cow<'_, Decomposition> {
        match self.products.get(&(i, j)) {
            Some(dec) => Cow::Borrowed(dec.as_slice()),
            None => Cow::Borrowed(&[]),
        }
    }

    fn dimension(&self, i: usize) -> Option<BigInt> {
        self.dims.as_ref().map(|d| d[i].clone())
    }

    fn has_dimensions(&self) -> bool {
        self.dims.is_some()
    }

    fn as_finite(&self) -> Option<&FusionRing> {
        Some(self)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn dims(d: &[i64]) -> Option<Vec<BigInt>> {
        Some(d.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Group ring of Z/n with basis 1, g, …, g^(n-1).
    pub fn cyclic(n: usize) -> FusionRing {
        let names: Vec<String> = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let triples = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n, 1)));
        let dual = (0..n).map(|i| (n - i) % n).collect();
        FusionRing::new(names, 0, dual, triples, Some(vec![BigInt::from(1); n])).unwrap()
    }

    /// Representation ring of S3 with basis triv, sgn, std.
    pub fn s3() -> FusionRing {
        let t = vec![
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (0, 2, 2, 1),
            (1, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 2, 2, 1),
            (2, 0, 2, 1),
            (2, 1, 2, 1),
            (2, 2, 0, 1),
            (2, 2, 1, 1),
            (2, 2, 2, 1),
        ];
        FusionRing::new(labels(&["triv", "sgn", "std"]), 0, vec![0, 1, 2], t, dims(&[1, 1, 2]))
            .unwrap()
    }

    /// Ising fusion rules with basis 1, eps, sigma (no integer dimensions).
    pub fn ising() -> FusionRing {
        let t = vec![
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (0, 2, 2, 1),
            (1, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 2, 2, 1),
            (2, 0, 2, 1),
            (2, 1, 2, 1),
            (2, 2, 0, 1),
            (2, 2, 1, 1),
        ];
        FusionRing::new(labels(&["1", "eps", "sigma"]), 0, vec![0, 1, 2], t, None).unwrap()
    }

    /// Fibonacci fusion rules with basis 1, tau (no integer dimensions).
    pub fn fibonacci() -> FusionRing {
        let t = vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)];
        FusionRing::new(labels(&["1", "tau"]), 0, vec![0, 1], t, None).unwrap()
    }

    pub fn trivial() -> FusionRing {
        FusionRing::new(labels(&["1"]), 0, vec![0], [(0, 0, 0, 1)], dims(&[1])).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn shape_errors() {
        let l = vec!["a".to_string(), "b".to_string()];
        assert!(FusionRing::new(l.clone(), 2, vec![0, 1], [], None).is_err());
        assert!(FusionRing::new(l.clone(), 0, vec![0], [], None).is_err());
        assert!(FusionRing::new(l.clone(), 0, vec![0, 1], [(0, 0, 5, 1)], None).is_err());
        assert!(FusionRing::new(l.clone(), 0, vec![0, 1], [(0, 0, 0, 1), (0, 0, 0, 2)], None).is_err());
        let dup = vec!["a".to_string(), "a".to_string()];
        assert!(FusionRing::new(dup, 0, vec![0, 1], [], None).is_err());
    }

    #[test]
    fn commutativity() {
        assert!(cyclic(4).is_commutative());
        assert!(s3().is_commutative());
        let l = vec!["1".into(), "a".into(), "b".into()];
        let t = [(0, 0, 0, 1), (1, 2, 1, 1), (2, 1, 2, 1)];
        assert!(!FusionRing::new(l, 0, vec![0, 1, 2], t, None).unwrap().is_commutative());
    }

    #[test]
    fn ring_identity() {
        let a: RingRef = Arc::new(s3());
        let b: RingRef = Arc::new(s3());
        let c: RingRef = Arc::new(cyclic(3));
        assert!(same_ring(&a, &b));
        assert!(!same_ring(&a, &c));
        let su2: RingRef = Arc::new(Su2);
        let other: RingRef = Arc::new(Su2);
        assert!(same_ring(&su2, &other));
        assert!(!same_ring(&su2, &a));
    }

    #[test]
    fn rings_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FusionRing>();
        assert_send_sync::<RingRef>();
        assert_send_sync::<RingElement>();
    }
}
