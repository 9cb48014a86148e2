use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{bigint_text, GroupDoc, RingSource};
use crate::error::{Error, Result};
use crate::exact::IntPoly;
use crate::fusion::{RingElement, RingRef};
use crate::group::{Group, GroupRingElement};
use crate::irreducibility::{Derivation, MultimatrixElement, WitnessPair, ZeroDivisorWitness};

/// One term `[basis label, coefficient]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc(pub String, #[serde(with = "bigint_text")] pub BigInt);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AmbientDoc {
    FusionRing { ring: RingSource },
    Group { group: GroupDoc },
    Multimatrix { blocks: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DerivationDoc {
    TorsionMinPoly {
        u: String,
        #[serde(with = "bigint_text::vec")]
        min_poly: Vec<BigInt>,
        #[serde(with = "bigint_text")]
        dim: BigInt,
        #[serde(with = "bigint_text::vec")]
        cofactor: Vec<BigInt>,
    },
    MinPolyFactorSplit {
        x: Vec<TermDoc>,
        #[serde(with = "bigint_text::vec")]
        min_poly: Vec<BigInt>,
        #[serde(with = "bigint_text::vec")]
        factor: Vec<BigInt>,
        #[serde(with = "bigint_text::vec")]
        cofactor: Vec<BigInt>,
    },
    BruteForce {
        support_cap: usize,
        height_cap: u64,
    },
    GroupTorsion {
        g: String,
        order: u64,
    },
    CentralIdempotents,
}

/// Serialised zero-divisor witness. Polynomials are ascending coefficient
/// lists; `display` and `verified` are informational and recomputed by
/// readers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub ambient: AmbientDoc,
    pub a: Vec<TermDoc>,
    pub b: Vec<TermDoc>,
    pub derivation: DerivationDoc,
    pub display: String,
    pub verified: bool,
}

fn ring_terms(x: &RingElement) -> Vec<TermDoc> {
    x.terms().map(|(i, c)| TermDoc(x.ring().label(i), c.clone())).collect()
}

fn group_terms(x: &GroupRingElement) -> Vec<TermDoc> {
    x.terms().map(|(g, c)| TermDoc(x.group().label(g), c.clone())).collect()
}

fn matrix_terms(x: &MultimatrixElement) -> Vec<TermDoc> {
    x.entries()
        .map(|(&(b, r, c), v)| TermDoc(format!("E{}[{},{}]", b + 1, r + 1, c + 1), v.clone()))
        .collect()
}

fn read_ring_terms(ring: &RingRef, terms: &[TermDoc]) -> Result<RingElement> {
    let pairs = terms
        .iter()
        .map(|TermDoc(l, c)| {
            let i = ring.index_of(l).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            Ok((i, c.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    RingElement::from_terms(ring, pairs)
}

fn read_group_terms(group: &Arc<Group>, terms: &[TermDoc]) -> Result<GroupRingElement> {
    let pairs = terms
        .iter()
        .map(|TermDoc(l, c)| Ok((group.parse_element(l)?, c.clone())))
        .collect::<Result<Vec<_>>>()?;
    GroupRingElement::from_terms(group, pairs)
}

fn read_matrix_terms(blocks: &[usize], terms: &[TermDoc]) -> Result<MultimatrixElement> {
    let bad = |l: &str| Error::Parse(format!("cannot read matrix unit `{l}`"));
    let entries = terms
        .iter()
        .map(|TermDoc(l, c)| {
            let body = l.strip_prefix('E').ok_or_else(|| bad(l))?;
            let (b, rest) = body.split_once('[').ok_or_else(|| bad(l))?;
            let (r, col) = rest
                .strip_suffix(']')
                .and_then(|s| s.split_once(','))
                .ok_or_else(|| bad(l))?;
            let one_based = |s: &str| match s.trim().parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(bad(l)),
            };
            Ok(((one_based(b)?, one_based(r)?, one_based(col)?), c.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    MultimatrixElement::from_entries(blocks, entries)
}

impl WitnessDoc {
    pub fn from_witness(w: &ZeroDivisorWitness) -> Result<Self> {
        let (ambient, a, b) = match &w.pair {
            WitnessPair::Fusion { a, b } => (
                AmbientDoc::FusionRing {
                    ring: RingSource::from_ring(a.ring())?,
                },
                ring_terms(a),
                ring_terms(b),
            ),
            WitnessPair::Group { a, b } => (
                AmbientDoc::Group {
                    group: GroupDoc::from_group(a.group()),
                },
                group_terms(a),
                group_terms(b),
            ),
            WitnessPair::Multimatrix { a, b } => (
                AmbientDoc::Multimatrix {
                    blocks: a.blocks().to_vec(),
                },
                matrix_terms(a),
                matrix_terms(b),
            ),
        };
        let derivation = match &w.derivation {
            Derivation::TorsionMinPoly { u, min_poly, dim, cofactor } => {
                let WitnessPair::Fusion { a: x, .. } = &w.pair else {
                    return Err(Error::Unsupported("torsion derivation outside a fusion ring".into()));
                };
                DerivationDoc::TorsionMinPoly {
                    u: x.ring().label(*u),
                    min_poly: min_poly.coeffs().to_vec(),
                    dim: dim.clone(),
                    cofactor: cofactor.coeffs().to_vec(),
                }
            }
            Derivation::MinPolyFactorSplit { x, min_poly, factor, cofactor } => DerivationDoc::MinPolyFactorSplit {
                x: ring_terms(x),
                min_poly: min_poly.coeffs().to_vec(),
                factor: factor.coeffs().to_vec(),
                cofactor: cofactor.coeffs().to_vec(),
            },
            Derivation::BruteForce { support_cap, height_cap } => DerivationDoc::BruteForce {
                support_cap: *support_cap,
                height_cap: *height_cap,
            },
            Derivation::GroupTorsion { g, order } => {
                let WitnessPair::Group { a: x, .. } = &w.pair else {
                    return Err(Error::Unsupported("group torsion derivation outside a group ring".into()));
                };
                DerivationDoc::GroupTorsion {
                    g: x.group().label(g),
                    order: *order,
                }
            }
            Derivation::CentralIdempotents => DerivationDoc::CentralIdempotents,
        };
        Ok(WitnessDoc {
            ambient,
            a,
            b,
            derivation,
            display: w.to_string(),
            verified: w.verify(),
        })
    }

    /// Rebuilds the witness without re-verifying it; call
    /// [`ZeroDivisorWitness::verify`] on the result.
    pub fn to_witness(&self) -> Result<ZeroDivisorWitness> {
        let poly = |c: &[BigInt]| IntPoly::new(c.to_vec());
        let mut fusion_ring = None;
        let mut group = None;
        let pair = match &self.ambient {
            AmbientDoc::FusionRing { ring } => {
                let ring = ring.to_ring()?;
                let pair = WitnessPair::Fusion {
                    a: read_ring_terms(&ring, &self.a)?,
                    b: read_ring_terms(&ring, &self.b)?,
                };
                fusion_ring = Some(ring);
                pair
            }
            AmbientDoc::Group { group: doc } => {
                let g = Arc::new(doc.to_group()?);
                let pair = WitnessPair::Group {
                    a: read_group_terms(&g, &self.a)?,
                    b: read_group_terms(&g, &self.b)?,
                };
                group = Some(g);
                pair
            }
            AmbientDoc::Multimatrix { blocks } => WitnessPair::Multimatrix {
                a: read_matrix_terms(blocks, &self.a)?,
                b: read_matrix_terms(blocks, &self.b)?,
            },
        };
        let mismatch = || Error::Parse("derivation does not fit the ambient ring".into());
        let derivation = match &self.derivation {
            DerivationDoc::TorsionMinPoly { u, min_poly, dim, cofactor } => {
                let ring = fusion_ring.as_ref().ok_or_else(mismatch)?;
                Derivation::TorsionMinPoly {
                    u: ring.index_of(u).ok_or_else(|| Error::UnknownLabel(u.clone()))?,
                    min_poly: poly(min_poly),
                    dim: dim.clone(),
                    cofactor: poly(cofactor),
                }
            }
            DerivationDoc::MinPolyFactorSplit { x, min_poly, factor, cofactor } => {
                let ring = fusion_ring.as_ref().ok_or_else(mismatch)?;
                Derivation::MinPolyFactorSplit {
                    x: read_ring_terms(ring, x)?,
                    min_poly: poly(min_poly),
                    factor: poly(factor),
                    cofactor: poly(cofactor),
                }
            }
            DerivationDoc::BruteForce { support_cap, height_cap } => Derivation::BruteForce {
                support_cap: *support_cap,
                height_cap: *height_cap,
            },
            DerivationDoc::GroupTorsion { g, order } => {
                let group = group.as_ref().ok_or_else(mismatch)?;
                Derivation::GroupTorsion {
                    g: group.parse_element(g)?,
                    order: *order,
                }
            }
            DerivationDoc::CentralIdempotents => Derivation::CentralIdempotents,
        };
        Ok(ZeroDivisorWitness { pair, derivation })
    }
}

pub fn parse_witness(text: &str) -> Result<ZeroDivisorWitness> {
    serde_json::from_str::<WitnessDoc>(text)
        .map_err(|e| Error::Parse(format!("not a witness document: {e}")))?
        .to_witness()
}
