//! JSON documents for rings, groups, character tables and witnesses.
//!
//! Big integers are written as decimal strings and accepted either as
//! strings or as JSON numbers. Field order is fixed by the struct
//! definitions and maps are ordered, so serialisation is byte-stable.

mod verdict;
mod witness;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chartable::CharacterTable;
use crate::error::{Error, Result};
use crate::fusion::{FusionRing, RingRef, Su2};
use crate::group::{cycle_string, Group, GroupElement};

pub use verdict::*;
pub use witness::{parse_witness, AmbientDoc, DerivationDoc, TermDoc, WitnessDoc};

/// Serde adapter writing a `BigInt` as decimal text.
pub mod bigint_text {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Text(String),
        Signed(i64),
        Unsigned(u64),
    }

    fn parse(raw: Raw) -> std::result::Result<BigInt, String> {
        match raw {
            Raw::Text(s) => s.trim().parse().map_err(|_| format!("`{s}` is not an integer")),
            Raw::Signed(v) => Ok(v.into()),
            Raw::Unsigned(v) => Ok(v.into()),
        }
    }

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        parse(Raw::deserialize(d)?).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(|x| x.to_string()))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
            Vec::<Raw>::deserialize(d)?
                .into_iter()
                .map(|r| parse(r).map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod opt_vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> std::result::Result<S::Ok, S::Error> {
            match v {
                Some(v) => vec::serialize(v, s),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Vec<BigInt>>, D::Error> {
            Option::<Vec<Raw>>::deserialize(d)?
                .map(|v| {
                    v.into_iter()
                        .map(|r| parse(r).map_err(serde::de::Error::custom))
                        .collect()
                })
                .transpose()
        }
    }

    pub mod matrix {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<BigInt>>, D::Error> {
            Vec::<Vec<Raw>>::deserialize(d)?
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|r| parse(r).map_err(serde::de::Error::custom))
                        .collect()
                })
                .collect()
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FusionRingDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// `[i, j, k, N_ij^k]` with `N > 0`.
    pub triples: Vec<[u64; 4]>,
    #[serde(default, with = "bigint_text::opt_vec", skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<BigInt>>,
}

impl FusionRingDoc {
    pub fn from_ring(ring: &FusionRing, name: Option<String>) -> Self {
        FusionRingDoc {
            name,
            labels: ring.labels().to_vec(),
            unit: ring.unit(),
            dual: ring.dual_map().to_vec(),
            triples: ring
                .triples()
                .map(|(i, j, k, n)| [i as u64, j as u64, k as u64, n])
                .collect(),
            dims: ring.dims().map(<[BigInt]>::to_vec),
        }
    }

    pub fn to_ring(&self) -> Result<FusionRing> {
        let idx = |v: u64| usize::try_from(v).map_err(|_| Error::InvalidRing(format!("index {v} too large")));
        let triples = self
            .triples
            .iter()
            .map(|&[i, j, k, n]| Ok((idx(i)?, idx(j)?, idx(k)?, n)))
            .collect::<Result<Vec<_>>>()?;
        FusionRing::new(self.labels.clone(), self.unit, self.dual.clone(), triples, self.dims.clone())
    }
}

/// Either a finite ring or a reference to a built-in lazy ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingSource {
    Builtin { builtin: String },
    Finite(FusionRingDoc),
}

impl RingSource {
    pub fn from_ring(ring: &RingRef) -> Result<Self> {
        if let Some(f) = ring.as_finite() {
            return Ok(RingSource::Finite(FusionRingDoc::from_ring(f, None)));
        }
        match ring.builtin_id() {
            Some(id) => Ok(RingSource::Builtin { builtin: id.into() }),
            None => Err(Error::Unsupported("ring has no document form".into())),
        }
    }

    pub fn to_ring(&self) -> Result<RingRef> {
        match self {
            RingSource::Builtin { builtin } if builtin == "su2" => Ok(Arc::new(Su2)),
            RingSource::Builtin { builtin } => Err(Error::Parse(format!("unknown built-in ring `{builtin}`"))),
            RingSource::Finite(doc) => Ok(doc.to_ring()?.into_ref()),
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            RingSource::Builtin { builtin } => Some(builtin),
            RingSource::Finite(doc) => doc.name.as_deref(),
        }
    }
}

pub fn parse_ring(text: &str) -> Result<RingRef> {
    serde_json::from_str::<RingSource>(text)
        .map_err(|e| Error::Parse(format!("not a fusion ring document: {e}")))?
        .to_ring()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyDoc {
    Cyclic { n: u64 },
    FreeAbelian { rank: usize },
    Free { rank: usize },
    Heisenberg,
    Symmetric { n: usize },
    /// Generators in cycle notation, e.g. `"(1 2)(3 4)"`.
    Permutation { degree: usize, generators: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub family: FamilyDoc,
    /// Named elements, each written as a normal form.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub elements: BTreeMap<String, String>,
}

impl GroupDoc {
    pub fn from_group(group: &Group) -> Self {
        let family = match group {
            Group::FiniteCyclic(n) => FamilyDoc::Cyclic { n: *n },
            Group::FreeAbelian(d) => FamilyDoc::FreeAbelian { rank: *d },
            Group::FreeGroup(k) => FamilyDoc::Free { rank: *k },
            Group::Heisenberg => FamilyDoc::Heisenberg,
            Group::FinitePermutation { degree, generators } => FamilyDoc::Permutation {
                degree: *degree,
                generators: generators.iter().map(|p| cycle_string(p)).collect(),
            },
        };
        GroupDoc {
            name: None,
            family,
            elements: BTreeMap::new(),
        }
    }

    pub fn to_group(&self) -> Result<Group> {
        match &self.family {
            FamilyDoc::Cyclic { n } => Group::cyclic(*n),
            FamilyDoc::FreeAbelian { rank } => Ok(Group::free_abelian(*rank)),
            FamilyDoc::Free { rank } => Group::free(*rank),
            FamilyDoc::Heisenberg => Ok(Group::Heisenberg),
            FamilyDoc::Symmetric { n } => Group::symmetric(*n),
            FamilyDoc::Permutation { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| crate::group::parse_cycles(g, *degree))
                    .collect::<Result<Vec<_>>>()?;
                Group::permutation(*degree, gens)
            }
        }
    }

    /// Resolves a named element, falling back to reading `text` as a normal
    /// form.
    pub fn element(&self, group: &Group, text: &str) -> Result<GroupElement> {
        let t = self.elements.get(text).map_or(text, String::as_str);
        group.parse_element(t)
    }

    /// Named elements in name order.
    pub fn named_elements(&self, group: &Group) -> Result<Vec<(String, GroupElement)>> {
        self.elements
            .iter()
            .map(|(k, v)| Ok((k.clone(), group.parse_element(v)?)))
            .collect()
    }
}

pub fn parse_group(text: &str) -> Result<(GroupDoc, Group)> {
    let doc: GroupDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("not a group document: {e}")))?;
    let group = doc.to_group()?;
    doc.named_elements(&group)?;
    Ok((doc, group))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterTableDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(with = "bigint_text")]
    pub order: BigInt,
    #[serde(with = "bigint_text::vec")]
    pub class_sizes: Vec<BigInt>,
    pub labels: Vec<String>,
    #[serde(with = "bigint_text::matrix")]
    pub chars: Vec<Vec<BigInt>>,
}

impl CharacterTableDoc {
    pub fn from_table(t: &CharacterTable, name: Option<String>) -> Self {
        CharacterTableDoc {
            name,
            order: t.order.clone(),
            class_sizes: t.class_sizes.clone(),
            labels: t.labels.clone(),
            chars: t.chars.clone(),
        }
    }

    pub fn to_table(&self) -> Result<CharacterTable> {
        let t = CharacterTable {
            order: self.order.clone(),
            class_sizes: self.class_sizes.clone(),
            chars: self.chars.clone(),
            labels: self.labels.clone(),
        };
        t.check_shape()?;
        Ok(t)
    }
}

pub fn parse_table(text: &str) -> Result<CharacterTable> {
    serde_json::from_str::<CharacterTableDoc>(text)
        .map_err(|e| Error::Parse(format!("not a character table document: {e}")))?
        .to_table()
}
