use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::witness::{Derivation, WitnessPair, ZeroDivisorWitness};
use crate::error::{Error, Result};

/// Element of a direct sum of full matrix algebras `M_{n_1} ⊕ … ⊕ M_{n_r}`,
/// stored sparsely as `(block, row, col) -> entry`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultimatrixElement {
    blocks: Vec<usize>,
    entries: BTreeMap<(usize, usize, usize), BigInt>,
}

impl MultimatrixElement {
    pub fn zero(blocks: &[usize]) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::Shape(format!("invalid block sizes {blocks:?}")));
        }
        Ok(MultimatrixElement {
            blocks: blocks.to_vec(),
            entries: BTreeMap::new(),
        })
    }

    /// Identity matrix of block `b`, zero elsewhere: a central idempotent.
    pub fn block_unit(blocks: &[usize], b: usize) -> Result<Self> {
        let mut e = Self::zero(blocks)?;
        let n = *blocks
            .get(b)
            .ok_or_else(|| Error::Shape(format!("no block {b}")))?;
        for i in 0..n {
            e.entries.insert((b, i, i), BigInt::one());
        }
        Ok(e)
    }

    pub fn from_entries(
        blocks: &[usize],
        entries: impl IntoIterator<Item = ((usize, usize, usize), BigInt)>,
    ) -> Result<Self> {
        let mut e = Self::zero(blocks)?;
        for ((b, r, c), v) in entries {
            if b >= blocks.len() || r >= blocks[b] || c >= blocks[b] {
                return Err(Error::Shape(format!("entry ({b},{r},{c}) out of range")));
            }
            if !v.is_zero() {
                *e.entries.entry((b, r, c)).or_default() += v;
            }
        }
        e.entries.retain(|_, v| !v.is_zero());
        Ok(e)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &BigInt)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.blocks != other.blocks {
            return Err(Error::Shape("block structures differ".into()));
        }
        Self::from_entries(
            &self.blocks,
            self.entries
                .iter()
                .chain(&other.entries)
                .map(|(&k, v)| (k, v.clone())),
        )
    }

    /// Blockwise matrix product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.blocks != other.blocks {
            return Err(Error::Shape("block structures differ".into()));
        }
        let mut out: BTreeMap<(usize, usize, usize), BigInt> = BTreeMap::new();
        for (&(b, i, k), x) in &self.entries {
            for (&(_, _, j), y) in other.entries.range((b, k, 0)..=(b, k, usize::MAX)) {
                *out.entry((b, i, j)).or_default() += x * y;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(MultimatrixElement {
            blocks: self.blocks.clone(),
            entries: out,
        })
    }
}

impl fmt::Display for MultimatrixElement {
    /// Sums of block units print as `e1 + e2`; anything else lists entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut units = Vec::new();
        for b in 0..self.blocks.len() {
            let unit = Self::block_unit(&self.blocks, b).expect("valid block");
            let restricted: BTreeMap<_, _> = self
                .entries
                .iter()
                .filter(|((bb, _, _), _)| *bb == b)
                .map(|(k, v)| (*k, v.clone()))
                .collect();
            if restricted == unit.entries {
                units.push(format!("e{}", b + 1));
            } else if !restricted.is_empty() {
                let terms: Vec<String> = restricted
                    .iter()
                    .map(|((_, r, c), v)| format!("{v}*E{}[{},{}]", b + 1, r + 1, c + 1))
                    .collect();
                units.push(terms.join(" + "));
            }
        }
        write!(f, "{}", units.join(" + "))
    }
}

/// Zero-divisor pair in a nontrivial direct sum of matrix algebras: the unit
/// of the first block and the sum of the units of the remaining blocks.
pub fn multimatrix_zero_divisor(blocks: &[usize]) -> Result<ZeroDivisorWitness> {
    if blocks.len() < 2 {
        MultimatrixElement::zero(blocks)?;
        return Err(Error::SingleBlock);
    }
    let a = MultimatrixElement::block_unit(blocks, 0)?;
    let mut b = MultimatrixElement::zero(blocks)?;
    for k in 1..blocks.len() {
        b = b.add(&MultimatrixElement::block_unit(blocks, k)?)?;
    }
    ZeroDivisorWitness::new(WitnessPair::Multimatrix { a, b }, Derivation::CentralIdempotents)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_scalars() {
        let w = multimatrix_zero_divisor(&[1, 1]).unwrap();
        assert!(w.verify());
        assert_eq!(w.factors_display(), ("e1".into(), "e2".into()));
    }

    #[test]
    fn kac_type_shape() {
        let w = multimatrix_zero_divisor(&[1, 1, 1, 1, 2]).unwrap();
        assert!(w.verify());
        assert_eq!(w.factors_display().1, "e2 + e3 + e4 + e5");
    }

    #[test]
    fn single_block() {
        assert_eq!(multimatrix_zero_divisor(&[3]), Err(Error::SingleBlock));
        assert!(matches!(multimatrix_zero_divisor(&[]), Err(Error::Shape(_))));
        assert!(matches!(multimatrix_zero_divisor(&[2, 0]), Err(Error::Shape(_))));
    }

    #[test]
    fn block_products() {
        let blocks = [2, 1];
        let m = MultimatrixElement::from_entries(
            &blocks,
            [((0, 0, 1), BigInt::from(1))], // nilpotent E12
        )
        .unwrap();
        assert!(m.multiply(&m).unwrap().is_zero());
        let e = MultimatrixElement::block_unit(&blocks, 0).unwrap();
        assert_eq!(e.multiply(&m).unwrap(), m);
        assert_eq!(m.to_string(), "1*E1[1,2]");
    }
}
