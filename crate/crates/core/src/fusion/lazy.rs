use std::borrow::Cow;

use num_bigint::BigInt;

use super::{Decomposition, FusionRules};

/// Rep SU(2) presented by the Clebsch-Gordan rule
/// `u_m ⊗ u_n = u_|m-n| ⊕ u_|m-n|+2 ⊕ … ⊕ u_m+n`.
///
/// Index `n` is the irreducible of dimension `n + 1` (spin `n/2`), labelled
/// `u<n>`. Every irreducible is self-dual.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Su2;

impl FusionRules for Su2 {
    fn unit(&self) -> usize {
        0
    }

    fn rank(&self) -> Option<usize> {
        None
    }

    fn label(&self, i: usize) -> String {
        format!("u{i}")
    }

    fn index_of(&self, label: &str) -> Option<usize> {
        let digits = label.strip_prefix('u')?;
        if digits.is_empty() || (digits.len() > 1 && digits.starts_with('0')) {
            return None;
        }
        digits.parse().ok()
    }

    fn dual_index(&self, i: usize) -> usize {
        i
    }

    fn fuse(&self, m: usize, n: usize) -> Cow<'_, Decomposition> {
        let lo = m.abs_diff(n);
        Cow::Owned((lo..=m + n).step_by(2).map(|k| (k, 1)).collect())
    }

    fn dimension(&self, i: usize) -> Option<BigInt> {
        Some(BigInt::from(i) + 1)
    }

    fn has_dimensions(&self) -> bool {
        true
    }

    fn builtin_id(&self) -> Option<&'static str> {
        Some("su2")
    }
}
