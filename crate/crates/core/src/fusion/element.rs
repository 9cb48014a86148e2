use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{same_ring, RingRef};
use crate::error::{Error, Result};
use crate::exact::IntPoly;

/// A virtual representation: an integer combination of irreducibles.
#[derive(Clone)]
pub struct RingElement {
    ring: RingRef,
    coeffs: BTreeMap<usize, BigInt>,
}

impl RingElement {
    pub fn zero(ring: &RingRef) -> Self {
        RingElement {
            ring: ring.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::basis_unchecked(ring, ring.unit())
    }

    pub fn basis(ring: &RingRef, i: usize) -> Result<Self> {
        if !ring.contains_index(i) {
            return Err(Error::InvalidRing(format!("basis index {i} out of range")));
        }
        Ok(Self::basis_unchecked(ring, i))
    }

    fn basis_unchecked(ring: &RingRef, i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, BigInt::one());
        RingElement {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn from_label(ring: &RingRef, label: &str) -> Result<Self> {
        let i = ring
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        Ok(Self::basis_unchecked(ring, i))
    }

    pub fn from_terms(
        ring: &RingRef,
        terms: impl IntoIterator<Item = (usize, BigInt)>,
    ) -> Result<Self> {
        let mut e = Self::zero(ring);
        for (i, c) in terms {
            if !ring.contains_index(i) {
                return Err(Error::InvalidRing(format!("basis index {i} out of range")));
            }
            e.add_term(i, &c);
        }
        Ok(e)
    }

    /// Dense coefficients over a finite basis.
    pub fn from_coeffs(ring: &RingRef, coeffs: &[i64]) -> Result<Self> {
        Self::from_terms(
            ring,
            coeffs.iter().enumerate().map(|(i, &c)| (i, BigInt::from(c))),
        )
    }

    /// Parses an integer combination of labels such as `std - 2*triv` or
    /// `1 + g`. A term that is exactly a label wins over reading it as an
    /// integer; bare integers are multiples of the unit.
    pub fn parse(ring: &RingRef, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut e = Self::zero(ring);
        let mut depth = 0i32;
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        for (pos, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-'
                    if depth == 0 && pos > start && !matches!(bytes[pos - 1], b'*' | b'+' | b'-') =>
                {
                    pieces.push(&compact[start..pos]);
                    start = pos;
                }
                _ => {}
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            let (coeff, index) = parse_term(ring, body)?;
            e.add_term(index, &if neg { -coeff } else { coeff });
        }
        Ok(e)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    /// Nonzero `(index, coefficient)` pairs in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The basis index if this element is a single irreducible with
    /// multiplicity one.
    pub fn as_irreducible(&self) -> Option<usize> {
        match self.coeffs.iter().next() {
            Some((&i, c)) if self.coeffs.len() == 1 && c.is_one() => Some(i),
            _ => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_irreducible() == Some(self.ring.unit())
    }

    fn add_term(&mut self, i: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(i).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.ring);
        for (&i, c) in &self.coeffs {
            out.add_term(i, &(c * k));
        }
        out
    }

    pub fn same_ring_as(&self, other: &RingElement) -> bool {
        same_ring(&self.ring, &other.ring)
    }

    /// Tensor product extended bilinearly.
    pub fn multiply(&self, other: &RingElement) -> Result<RingElement> {
        if !self.same_ring_as(other) {
            return Err(Error::RingMismatch);
        }
        let mut out = Self::zero(&self.ring);
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                let ab = a * b;
                for &(k, n) in self.ring.fuse(i, j).iter() {
                    out.add_term(k, &(&ab * n));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> RingElement {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..e {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// Applies the duality involution to each basis element.
    pub fn dual(&self) -> RingElement {
        let mut out = Self::zero(&self.ring);
        for (&i, c) in &self.coeffs {
            out.add_term(self.ring.dual_index(i), c);
        }
        out
    }

    pub fn dim(&self) -> Result<BigInt> {
        if !self.ring.has_dimensions() {
            return Err(Error::NoDimensionFunction);
        }
        Ok(self
            .coeffs
            .iter()
            .map(|(&i, c)| c * self.ring.dimension(i).expect("dims present"))
            .sum())
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &IntPoly) -> RingElement {
        let unit = Self::unit(&self.ring);
        p.coeffs().iter().rev().fold(Self::zero(&self.ring), |acc, c| {
            &acc.multiply(self).expect("same ring") + &unit.scale(c)
        })
    }
}

fn parse_term(ring: &RingRef, body: &str) -> Result<(BigInt, usize)> {
    if body.is_empty() {
        return Err(Error::Parse("dangling sign".into()));
    }
    if let Some(i) = ring.index_of(body) {
        return Ok((BigInt::one(), i));
    }
    if let Some((c, label)) = body.split_once('*') {
        let c: BigInt = c
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient in `{body}`")))?;
        let i = ring
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        return Ok((c, i));
    }
    if let Ok(c) = body.parse::<BigInt>() {
        return Ok((c, ring.unit()));
    }
    let split = body
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(body.len());
    if split > 0 {
        if let (Ok(c), Some(i)) = (body[..split].parse::<BigInt>(), ring.index_of(&body[split..])) {
            return Ok((c, i));
        }
    }
    Err(Error::UnknownLabel(body.to_string()))
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring_as(other) && self.coeffs == other.coeffs
    }
}

impl Eq for RingElement {}

impl Add for &RingElement {
    type Output = RingElement;

    /// Panics if the operands live in different rings.
    fn add(self, rhs: &RingElement) -> RingElement {
        assert!(self.same_ring_as(rhs), "adding elements of different rings");
        let mut out = self.clone();
        for (&i, c) in &rhs.coeffs {
            out.add_term(i, c);
        }
        out
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &-rhs
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for RingElement {
    /// Highest index first, so `g - 1` rather than `-1 + g`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (&i, c)) in self.coeffs.iter().rev().enumerate() {
            let label = self.ring.label(i);
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({self})")
    }
}
