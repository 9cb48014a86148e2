//! Discrete groups with canonical normal forms, their integral group rings,
//! Kaplansky witnesses from torsion elements, and Cayley-graph growth.
//!
//! Only families with an easy normal form are supported:
//!
//! | family        | normal form                                   |
//! |---------------|-----------------------------------------------|
//! | Z/n           | residue in `0..n`                             |
//! | Z^d           | integer vector                                |
//! | free group    | freely reduced word                           |
//! | Heisenberg    | `(a, b, c)` for the matrix `[[1,a,c],[0,1,b],[0,0,1]]` |
//! | permutations  | image array of a permutation in the subgroup  |
//!
//! Heisenberg multiplication is `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
//! Permutations compose right to left: `(p*q)(i) = p(q(i))`.

mod fusion;
mod growth;
mod ring;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use fusion::group_fusion_ring;
pub use growth::{
    ball_sizes, growth_degree_estimate, BallSizes, GrowthClass, GrowthEstimate,
    DEFAULT_BALL_LIMIT, SPHERE_RATIO_THRESHOLD,
};
pub use ring::{element_order, kaplansky_witness, ElementOrder, GroupRingElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Residue(u64),
    Vector(Vec<i64>),
    /// Letters are `±(i + 1)` for generator `i` and its inverse.
    Word(Vec<i32>),
    Triple([i64; 3]),
    Perm(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    FiniteCyclic(u64),
    FreeAbelian(usize),
    FreeGroup(usize),
    Heisenberg,
    FinitePermutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl Group {
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("Z/0 is not finite; use free_abelian(1)".into()));
        }
        Ok(Group::FiniteCyclic(n))
    }

    pub fn free_abelian(rank: usize) -> Self {
        Group::FreeAbelian(rank)
    }

    pub fn free(rank: usize) -> Result<Self> {
        if rank > 26 {
            return Err(Error::InvalidGroup("free groups of rank above 26 are not supported".into()));
        }
        Ok(Group::FreeGroup(rank))
    }

    pub fn permutation(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        for g in &generators {
            check_perm(g, degree)?;
        }
        Ok(Group::FinitePermutation { degree, generators })
    }

    /// Symmetric group on `n` points generated by `(1 2)` and `(1 2 … n)`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n < 2 {
            return Self::permutation(n.max(1), Vec::new());
        }
        let mut transposition: Vec<usize> = (0..n).collect();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::permutation(n, vec![transposition, cycle])
    }

    pub fn family_name(&self) -> String {
        match self {
            Group::FiniteCyclic(n) => format!("Z/{n}"),
            Group::FreeAbelian(d) => format!("Z^{d}"),
            Group::FreeGroup(k) => format!("F{k}"),
            Group::Heisenberg => "Heisenberg".into(),
            Group::FinitePermutation { degree, generators } => {
                format!("permutation group of degree {degree} on {} generators", generators.len())
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Group::FiniteCyclic(_) | Group::FinitePermutation { .. } => true,
            Group::FreeAbelian(d) | Group::FreeGroup(d) => *d == 0,
            Group::Heisenberg => false,
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            Group::FiniteCyclic(_) => GroupElement::Residue(0),
            Group::FreeAbelian(d) => GroupElement::Vector(vec![0; *d]),
            Group::FreeGroup(_) => GroupElement::Word(Vec::new()),
            Group::Heisenberg => GroupElement::Triple([0; 3]),
            Group::FinitePermutation { degree, .. } => GroupElement::Perm((0..*degree).collect()),
        }
    }

    /// Checks that `g` is a normal form belonging to this group.
    pub fn check(&self, g: &GroupElement) -> Result<()> {
        let bad = || Err(Error::InvalidElement(format!("{g:?} is not an element of {}", self.family_name())));
        match (self, g) {
            (Group::FiniteCyclic(n), GroupElement::Residue(r)) if r < n => Ok(()),
            (Group::FreeAbelian(d), GroupElement::Vector(v)) if v.len() == *d => Ok(()),
            (Group::FreeGroup(k), GroupElement::Word(w)) => {
                let k = *k as i32;
                let letters_ok = w.iter().all(|&l| l != 0 && l.abs() <= k);
                let reduced = w.windows(2).all(|p| p[0] != -p[1]);
                if letters_ok && reduced {
                    Ok(())
                } else {
                    bad()
                }
            }
            (Group::Heisenberg, GroupElement::Triple(_)) => Ok(()),
            (Group::FinitePermutation { degree, .. }, GroupElement::Perm(p)) => {
                check_perm(p, *degree)?;
                if self.elements()?.binary_search(g).is_ok() {
                    Ok(())
                } else {
                    Err(Error::InvalidElement(format!(
                        "{} is not in the subgroup generated by the given permutations",
                        self.label(g)
                    )))
                }
            }
            _ => bad(),
        }
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        use GroupElement::*;
        match (self, a, b) {
            (Group::FiniteCyclic(n), Residue(x), Residue(y)) => Residue(((*x as u128 + *y as u128) % *n as u128) as u64),
            (Group::FreeAbelian(_), Vector(x), Vector(y)) => {
                Vector(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Group::FreeGroup(_), Word(x), Word(y)) => {
                let mut out = x.clone();
                for &l in y {
                    if out.last() == Some(&-l) {
                        out.pop();
                    } else {
                        out.push(l);
                    }
                }
                Word(out)
            }
            (Group::Heisenberg, Triple([a1, b1, c1]), Triple([a2, b2, c2])) => {
                Triple([a1 + a2, b1 + b2, c1 + c2 + a1 * b2])
            }
            (Group::FinitePermutation { .. }, Perm(p), Perm(q)) => Perm(q.iter().map(|&i| p[i]).collect()),
            _ => panic!("{a:?} and {b:?} are not normal forms of {}", self.family_name()),
        }
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        use GroupElement::*;
        match (self, a) {
            (Group::FiniteCyclic(n), Residue(x)) => Residue((n - x) % n),
            (Group::FreeAbelian(_), Vector(x)) => Vector(x.iter().map(|v| -v).collect()),
            (Group::FreeGroup(_), Word(x)) => Word(x.iter().rev().map(|l| -l).collect()),
            (Group::Heisenberg, Triple([a, b, c])) => Triple([-a, -b, -c + a * b]),
            (Group::FinitePermutation { .. }, Perm(p)) => {
                let mut inv = vec![0; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    inv[j] = i;
                }
                Perm(inv)
            }
            _ => panic!("{a:?} is not a normal form of {}", self.family_name()),
        }
    }

    pub fn power(&self, g: &GroupElement, e: u64) -> GroupElement {
        (0..e).fold(self.identity(), |acc, _| self.multiply(&acc, g))
    }

    /// Standard inverse-closed generating set: `±1`, `±e_i`, letters and
    /// their inverses, `x^±1, y^±1` for Heisenberg, the given permutations
    /// and their inverses.
    pub fn standard_generators(&self) -> Vec<GroupElement> {
        let mut gens: Vec<GroupElement> = match self {
            Group::FiniteCyclic(n) => {
                vec![GroupElement::Residue(1 % n), GroupElement::Residue((n - 1) % n)]
            }
            Group::FreeAbelian(d) => (0..*d)
                .flat_map(|i| {
                    [1, -1].map(|s| {
                        let mut v = vec![0; *d];
                        v[i] = s;
                        GroupElement::Vector(v)
                    })
                })
                .collect(),
            Group::FreeGroup(k) => (1..=*k as i32)
                .flat_map(|l| [GroupElement::Word(vec![l]), GroupElement::Word(vec![-l])])
                .collect(),
            Group::Heisenberg => vec![
                GroupElement::Triple([1, 0, 0]),
                GroupElement::Triple([-1, 0, 0]),
                GroupElement::Triple([0, 1, 0]),
                GroupElement::Triple([0, -1, 0]),
            ],
            Group::FinitePermutation { generators, .. } => generators
                .iter()
                .flat_map(|p| {
                    let g = GroupElement::Perm(p.clone());
                    [g.clone(), self.inverse(&g)]
                })
                .collect(),
        };
        let mut seen = BTreeSet::new();
        gens.retain(|g| seen.insert(g.clone()));
        gens
    }

    /// All elements in canonical (ascending normal form) order, identity
    /// first. Only for finite groups.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        match self {
            Group::FiniteCyclic(n) => Ok((0..*n).map(GroupElement::Residue).collect()),
            Group::FinitePermutation { .. } => {
                let gens = self.standard_generators();
                let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
                let id = self.identity();
                seen.insert(id.clone());
                let mut queue = VecDeque::from([id]);
                while let Some(x) = queue.pop_front() {
                    for s in &gens {
                        let y = self.multiply(&x, s);
                        if seen.insert(y.clone()) {
                            queue.push_back(y);
                        }
                    }
                }
                Ok(seen.into_iter().collect())
            }
            _ if self.is_finite() => Ok(vec![self.identity()]),
            _ => Err(Error::InfiniteGroup),
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            Group::FiniteCyclic(_) | Group::FreeAbelian(_) => true,
            Group::FreeGroup(k) => *k <= 1,
            Group::Heisenberg => false,
            Group::FinitePermutation { generators, .. } => generators.iter().all(|p| {
                generators.iter().all(|q| {
                    let (p, q) = (GroupElement::Perm(p.clone()), GroupElement::Perm(q.clone()));
                    self.multiply(&p, &q) == self.multiply(&q, &p)
                })
            }),
        }
    }

    /// Display name of an element, free of whitespace so it can serve as a
    /// fusion-ring label.
    pub fn label(&self, g: &GroupElement) -> String {
        match g {
            GroupElement::Residue(0) => "1".into(),
            GroupElement::Residue(1) => "g".into(),
            GroupElement::Residue(k) => format!("g^{k}"),
            GroupElement::Vector(v) => format!("({})", join(v)),
            GroupElement::Word(w) if w.is_empty() => "e".into(),
            GroupElement::Word(w) => word_string(w),
            GroupElement::Triple(t) => format!("({})", join(t)),
            GroupElement::Perm(p) => cycle_string(p),
        }
    }

    /// Inverse of [`Group::label`] for every family, also accepting cycle
    /// notation with spaces and plain integer residues.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let t = text.trim();
        let g = match self {
            Group::FiniteCyclic(n) => {
                let r: u64 = match t {
                    "1" | "e" => 0,
                    "g" => 1,
                    _ => match t.strip_prefix("g^") {
                        Some(k) => k.parse().map_err(|_| parse_err(t))?,
                        None => t.parse().map_err(|_| parse_err(t))?,
                    },
                };
                GroupElement::Residue(r % n)
            }
            Group::FreeAbelian(_) => GroupElement::Vector(parse_ints(t)?),
            Group::Heisenberg => {
                let v = parse_ints(t)?;
                let arr: [i64; 3] = v.try_into().map_err(|_| parse_err(t))?;
                GroupElement::Triple(arr)
            }
            Group::FreeGroup(_) => {
                if t == "e" || t.is_empty() {
                    GroupElement::Word(Vec::new())
                } else {
                    let letters: Vec<GroupElement> = t
                        .chars()
                        .map(|c| {
                            let l = match c {
                                'a'..='z' => c as i32 - 'a' as i32 + 1,
                                'A'..='Z' => -(c as i32 - 'A' as i32 + 1),
                                _ => return Err(parse_err(t)),
                            };
                            Ok(GroupElement::Word(vec![l]))
                        })
                        .collect::<Result<_>>()?;
                    letters
                        .iter()
                        .fold(self.identity(), |acc, l| self.multiply(&acc, l))
                }
            }
            Group::FinitePermutation { degree, .. } => GroupElement::Perm(parse_cycles(t, *degree)?),
        };
        self.check(&g)?;
        Ok(g)
    }
}

fn parse_err(t: &str) -> Error {
    Error::Parse(format!("cannot read group element `{t}`"))
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn parse_ints(t: &str) -> Result<Vec<i64>> {
    let inner = t
        .strip_prefix(['(', '['])
        .and_then(|s| s.strip_suffix([')', ']']))
        .ok_or_else(|| parse_err(t))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| parse_err(t)))
        .collect()
}

pub(crate) fn word_string(w: &[i32]) -> String {
    w.iter()
        .map(|&l| {
            let c = (b'a' + (l.unsigned_abs() as u8) - 1) as char;
            if l > 0 {
                c
            } else {
                c.to_ascii_uppercase()
            }
        })
        .collect()
}

fn check_perm(p: &[usize], degree: usize) -> Result<()> {
    let mut seen = vec![false; degree];
    if p.len() != degree {
        return Err(Error::InvalidElement(format!("{p:?} does not have degree {degree}")));
    }
    for &i in p {
        if i >= degree || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidElement(format!("{p:?} is not a permutation")));
        }
    }
    Ok(())
}

/// Cycle notation with 1-based points, each cycle starting at its smallest
/// point, cycles ordered by that point, fixed points omitted; `e` for the
/// identity.
pub fn cycle_string(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i + 1);
            i = p[i];
        }
        out.push_str(&format!("({})", join(&cycle)));
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// Reads cycle notation like `(1 2)(3 4 5)` or `(1,2)`; `e` or `()` is the
/// identity.
pub fn parse_cycles(t: &str, degree: usize) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = (0..degree).collect();
    let t = t.trim();
    if t == "e" || t == "()" {
        return Ok(p);
    }
    let mut rest = t;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| parse_err(t))?;
        let end = body.find(')').ok_or_else(|| parse_err(t))?;
        let points: Vec<usize> = body[..end]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| parse_err(t)))
            .collect::<Result<_>>()?;
        if points.iter().any(|&x| x == 0 || x > degree) {
            return Err(parse_err(t));
        }
        // Cycles compose right to left.
        let mut cycle: Vec<usize> = (0..degree).collect();
        for (k, &x) in points.iter().enumerate() {
            cycle[x - 1] = points[(k + 1) % points.len()] - 1;
        }
        check_perm(&cycle, degree)?;
        p = cycle.iter().map(|&i| p[i]).collect();
        rest = body[end + 1..].trim_start();
    }
    Ok(p)
}
