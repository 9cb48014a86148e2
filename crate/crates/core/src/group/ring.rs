use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Group, GroupElement};
use crate::error::{Error, Result};
use crate::irreducibility::{Derivation, WitnessPair, ZeroDivisorWitness};

/// Finitely supported integer combination of group elements.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Arc<Group>,
    support: BTreeMap<GroupElement, BigInt>,
}

impl GroupRingElement {
    pub fn zero(group: &Arc<Group>) -> Self {
        GroupRingElement {
            group: group.clone(),
            support: BTreeMap::new(),
        }
    }

    /// The delta function at `g`.
    pub fn delta(group: &Arc<Group>, g: GroupElement) -> Result<Self> {
        Self::from_terms(group, [(g, BigInt::one())])
    }

    pub fn one(group: &Arc<Group>) -> Self {
        Self::delta(group, group.identity()).expect("identity is an element")
    }

    pub fn from_terms(
        group: &Arc<Group>,
        terms: impl IntoIterator<Item = (GroupElement, BigInt)>,
    ) -> Result<Self> {
        let mut e = Self::zero(group);
        for (g, c) in terms {
            group.check(&g)?;
            e.add_term(g, &c);
        }
        Ok(e)
    }

    fn add_term(&mut self, g: GroupElement, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.support.entry(g.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.support.remove(&g);
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn coeff(&self, g: &GroupElement) -> BigInt {
        self.support.get(g).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.support.iter()
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.group);
        for (g, c) in &self.support {
            out.add_term(g.clone(), &(c * k));
        }
        out
    }

    /// Convolution product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let mut out = Self::zero(&self.group);
        for (g, a) in &self.support {
            for (h, b) in &other.support {
                out.add_term(self.group.multiply(g, h), &(a * b));
            }
        }
        Ok(out)
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    /// Panics if the operands live over different groups.
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        assert!(self.group == rhs.group, "adding elements over different groups");
        let mut out = self.clone();
        for (g, c) in &rhs.support {
            out.add_term(g.clone(), c);
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;

    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &-rhs
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "0");
        }
        let id = self.group.identity();
        for (n, (g, c)) in self.support.iter().rev().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let label = if *g == id { "1".to_string() } else { self.group.label(g) };
            match (mag.is_one(), *g == id) {
                (true, _) => write!(f, "{label}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{label}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Order(u64),
    ExceedsCap,
}

/// Least `n ≤ cap` with `g^n = e`.
pub fn element_order(group: &Group, g: &GroupElement, cap: u64) -> Result<ElementOrder> {
    group.check(g)?;
    let id = group.identity();
    let mut x = g.clone();
    for n in 1..=cap {
        if x == id {
            return Ok(ElementOrder::Order(n));
        }
        x = group.multiply(&x, g);
    }
    Ok(ElementOrder::ExceedsCap)
}

/// `(1 - g)·(1 + g + … + g^(n-1)) = 0` for `g` of order `n ≥ 2`.
pub fn kaplansky_witness(group: &Arc<Group>, g: &GroupElement, cap: u64) -> Result<ZeroDivisorWitness> {
    if *g == group.identity() {
        group.check(g)?;
        return Err(Error::IdentityElement);
    }
    let n = match element_order(group, g, cap)? {
        ElementOrder::Order(n) => n,
        ElementOrder::ExceedsCap => return Err(Error::TorsionFreeAtCap(cap)),
    };
    let one = GroupRingElement::one(group);
    let a = &one - &GroupRingElement::delta(group, g.clone())?;
    let mut b = GroupRingElement::zero(group);
    let mut power = group.identity();
    for _ in 0..n {
        b = &b + &GroupRingElement::delta(group, power.clone())?;
        power = group.multiply(&power, g);
    }
    ZeroDivisorWitness::new(
        WitnessPair::Group { a, b },
        Derivation::GroupTorsion { g: g.clone(), order: n },
    )
}
