use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::Group;
use crate::error::Result;
use crate::fusion::FusionRing;

/// Representation ring of the dual of a finite group: basis the group
/// elements, `g ⊗ h = gh`, dual the inverse, all dimensions one.
pub fn group_fusion_ring(group: &Group) -> Result<FusionRing> {
    let elements = group.elements()?;
    let index: HashMap<_, _> = elements.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
    let labels = elements.iter().map(|g| group.label(g)).collect();
    let dual = elements.iter().map(|g| index[&group.inverse(g)]).collect();
    let mut triples = Vec::with_capacity(elements.len() * elements.len());
    for (i, g) in elements.iter().enumerate() {
        for (j, h) in elements.iter().enumerate() {
            triples.push((i, j, index[&group.multiply(g, h)], 1));
        }
    }
    let dims = vec![BigInt::one(); elements.len()];
    FusionRing::new(labels, 0, dual, triples, Some(dims))
}
