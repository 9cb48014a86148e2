//! Integer character tables of finite groups: exact orthonormality checks
//! and conversion to the representation ring.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fusion::{validate, FusionRing};

/// Rows are irreducible characters, columns conjugacy classes. Column 0 must
/// be the identity class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub order: BigInt,
    pub class_sizes: Vec<BigInt>,
    pub chars: Vec<Vec<BigInt>>,
    pub labels: Vec<String>,
}

impl CharacterTable {
    pub fn new(order: i64, class_sizes: &[i64], chars: &[Vec<i64>], labels: &[&str]) -> Result<Self> {
        let t = CharacterTable {
            order: order.into(),
            class_sizes: class_sizes.iter().map(|&c| c.into()).collect(),
            chars: chars.iter().map(|r| r.iter().map(|&c| c.into()).collect()).collect(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
        };
        t.check_shape()?;
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.chars.len()
    }

    pub fn check_shape(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedTable(m));
        let n = self.class_sizes.len();
        if n == 0 {
            return bad("no conjugacy classes".into());
        }
        if self.chars.len() != n {
            return bad(format!("{} characters for {n} classes", self.chars.len()));
        }
        if let Some(i) = self.chars.iter().position(|r| r.len() != n) {
            return bad(format!("character {i} has {} values for {n} classes", self.chars[i].len()));
        }
        if self.labels.len() != n {
            return bad(format!("{} labels for {n} characters", self.labels.len()));
        }
        if !self.order.is_positive() {
            return bad("group order must be positive".into());
        }
        if self.class_sizes.iter().any(|c| !c.is_positive()) {
            return bad("class sizes must be positive".into());
        }
        if !self.class_sizes[0].is_one() {
            return bad("the first class must be the identity class of size 1".into());
        }
        let total: BigInt = self.class_sizes.iter().sum();
        if total != self.order {
            return bad(format!("class sizes sum to {total}, not {}", self.order));
        }
        Ok(())
    }

    /// `(1/|G|) Σ_c |c| f(c)` for a class function given by its values.
    fn average(&self, values: impl Iterator<Item = BigInt>) -> BigRational {
        let sum: BigInt = values.zip(&self.class_sizes).map(|(v, c)| v * c).sum();
        BigRational::new(sum, self.order.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramReport {
    /// `G_ij = (1/|G|) Σ_c |c| χ_i(c) χ_j(c)`.
    pub gram: Vec<Vec<BigRational>>,
    /// Entries differing from the identity matrix.
    pub deviations: Vec<(usize, usize, BigRational)>,
}

impl GramReport {
    pub fn passed(&self) -> bool {
        self.deviations.is_empty()
    }
}

/// Exact Gram matrix of the characters under the Haar average.
pub fn haar_orthonormality_check(table: &CharacterTable) -> Result<GramReport> {
    table.check_shape()?;
    let n = table.rank();
    let gram: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| table.average(table.chars[i].iter().zip(&table.chars[j]).map(|(a, b)| a * b)))
                .collect()
        })
        .collect();
    let mut deviations = Vec::new();
    for (i, row) in gram.iter().enumerate() {
        for (j, g) in row.iter().enumerate() {
            let expected = if i == j { BigRational::one() } else { BigRational::zero() };
            if *g != expected {
                deviations.push((i, j, g.clone()));
            }
        }
    }
    Ok(GramReport { gram, deviations })
}

/// Representation ring of the group: `N_ij^k = h(χ_i χ_j χ_k)`, self-dual
/// basis, dimensions `χ_i(e)`.
pub fn char_table_to_fusion_ring(table: &CharacterTable) -> Result<FusionRing> {
    table.check_shape()?;
    let n = table.rank();
    if table.chars[0].iter().any(|v| !v.is_one()) {
        return Err(Error::MalformedTable("the first character must be trivial".into()));
    }
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let values = (0..n).map(|c| &table.chars[i][c] * &table.chars[j][c] * &table.chars[k][c]);
                let m = table.average(values);
                let names = || (table.labels[i].clone(), table.labels[j].clone(), table.labels[k].clone());
                if !m.is_integer() {
                    let (i, j, k) = names();
                    return Err(Error::NonIntegralMultiplicity { i, j, k, value: m.to_string() });
                }
                if m.is_negative() {
                    let (i, j, k) = names();
                    return Err(Error::NegativeMultiplicity { i, j, k, value: m.to_string() });
                }
                let m: u64 = m
                    .to_integer()
                    .try_into()
                    .map_err(|_| Error::MalformedTable("multiplicity too large".into()))?;
                triples.push((i, j, k, m));
            }
        }
    }
    if !haar_orthonormality_check(table)?.passed() {
        return Err(Error::NotOrthonormal);
    }
    let dims = table.chars.iter().map(|r| r[0].clone()).collect();
    let ring = FusionRing::new(table.labels.clone(), 0, (0..n).collect(), triples, Some(dims))?;
    let report = validate(&ring);
    if let Some(v) = report.violations.first() {
        return Err(Error::MalformedTable(format!("resulting ring is inconsistent: {v}")));
    }
    Ok(ring)
}
