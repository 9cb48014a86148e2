//! Acceptance suite. Each test checks one criterion and prints a single
//! `criterion N: PASS|FAIL` line; run with
//! `cargo test -p cqg-core --test acceptance -- --nocapture --test-threads=1`.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use cqg_core::chartable::{char_table_to_fusion_ring, haar_orthonormality_check, CharacterTable};
use cqg_core::connectedness::{torsion_check, TorsionVerdict};
use cqg_core::corpus;
use cqg_core::exact::{kernel_basis, minimal_polynomial, IntMatrix, IntPoly};
use cqg_core::fusion::{validate, RingElement, RingRef, Su2};
use cqg_core::group::{
    ball_sizes, element_order, growth_degree_estimate, kaplansky_witness, ElementOrder, Group, GroupElement,
    GrowthClass, DEFAULT_BALL_LIMIT,
};
use cqg_core::irreducibility::{
    bounded_group_ring_search, bounded_zero_divisor_search, commutative_domain_decision, multimatrix_zero_divisor,
    verify_witness, witness_from_torsion, DomainDecision, WitnessPair, DEFAULT_SEED,
};
use cqg_core::Error;

/// Prints the verdict line, then fails the test on any recorded problem.
fn conclude(criterion: &str, what: &str, problems: &[String]) {
    if problems.is_empty() {
        println!("criterion {criterion}: PASS ({what})");
    } else {
        println!("criterion {criterion}: FAIL ({what}); {} problem(s)", problems.len());
        for p in problems {
            println!("    {p}");
        }
    }
    assert!(problems.is_empty(), "criterion {criterion} failed: {problems:#?}");
}

fn el(ring: &RingRef, s: &str) -> RingElement {
    RingElement::parse(ring, s).unwrap()
}

#[test]
fn criterion_01_theorem_chain() {
    let mut problems = Vec::new();
    let rings = corpus::dimensioned_rings();
    let expected: HashSet<&str> = [
        "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9", "z10", "z11", "z12", "s3", "s4", "d4", "s3_group",
    ]
    .into_iter()
    .collect();
    let names: HashSet<&str> = rings.iter().map(|(n, _)| *n).collect();
    if names != expected {
        problems.push(format!("corpus rings with dimensions: {names:?}"));
    }
    let mut count = 0;
    for (name, ring) in &rings {
        for i in (0..ring.rank().unwrap()).filter(|&i| i != ring.unit()) {
            let u = RingElement::basis(ring, i).unwrap();
            match witness_from_torsion(&u, 64) {
                Ok(w) if verify_witness(&w) => count += 1,
                Ok(_) => problems.push(format!("{name}/{}: witness does not verify", ring.label(i))),
                Err(e) => problems.push(format!("{name}/{}: {e}", ring.label(i))),
            }
        }
    }
    conclude("1", &format!("{count} witnesses over {} rings", rings.len()), &problems);
}

/// Hand-written S3 representation ring: `S3_TABLE[i][j]` lists the
/// multiplicities of triv, sgn, std in `i ⊗ j`.
const S3_TABLE: [[[i64; 3]; 3]; 3] = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[0, 0, 1], [0, 0, 1], [1, 1, 1]],
];

fn s3_product(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    let mut out = [0; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                out[k] += a[i] * b[j] * S3_TABLE[i][j][k];
            }
        }
    }
    out
}

fn coords(x: &RingElement, n: usize) -> Vec<i64> {
    (0..n).map(|i| i64::try_from(x.coeff(i)).unwrap()).collect()
}

#[test]
fn criterion_02_hand_derived_witnesses() {
    let mut problems = Vec::new();
    let pair = |ring: &str, irrep: &str| {
        let r = corpus::ring(ring).unwrap();
        let w = witness_from_torsion(&el(&r, irrep), 64).unwrap();
        match w.pair.clone() {
            WitnessPair::Fusion { a, b } => (r, w, a, b),
            _ => unreachable!(),
        }
    };

    let (_, _, a, b) = pair("z2", "g");
    if (coords(&a, 2), coords(&b, 2)) != (vec![-1, 1], vec![1, 1]) {
        problems.push(format!("Z/2: got ({a}, {b})"));
    }
    let (_, _, a3, b3) = pair("z3", "g");
    if (coords(&a3, 3), coords(&b3, 3)) != (vec![-1, 1, 0], vec![1, 1, 1]) {
        problems.push(format!("Z/3: got ({a3}, {b3})"));
    }
    // (g - 1)(g^2 + g + 1) expanded with g^3 = 1 by hand: g^3 - 1 = 0.
    let mut conv = [0i64; 3];
    for (i, x) in coords(&a3, 3).iter().enumerate() {
        for (j, y) in coords(&b3, 3).iter().enumerate() {
            conv[(i + j) % 3] += x * y;
        }
    }
    if conv != [0, 0, 0] {
        problems.push(format!("Z/3 hand convolution gives {conv:?}"));
    }

    let (_, w, a, b) = pair("s3", "std");
    let (ca, cb) = (coords(&a, 3), coords(&b, 3));
    if (ca.clone(), cb.clone()) != (vec![-2, 0, 1], vec![1, 1, 2]) {
        problems.push(format!("S3: got ({a}, {b})"));
    }
    if s3_product([ca[0], ca[1], ca[2]], [cb[0], cb[1], cb[2]]) != [0, 0, 0] {
        problems.push("S3 hand expansion of a*b is not zero".into());
    }
    let std = [0, 0, 1];
    let std2 = s3_product(std, std);
    let std3 = s3_product(std2, std);
    if std2 != [1, 1, 1] || std3 != [1, 1, 3] {
        problems.push(format!("hand powers std^2 = {std2:?}, std^3 = {std3:?}"));
    }
    if let cqg_core::irreducibility::Derivation::TorsionMinPoly { min_poly, dim, .. } = &w.derivation {
        if *min_poly != IntPoly::from_i64(&[0, -2, -1, 1]) {
            problems.push(format!("S3 minimal polynomial {min_poly}"));
        }
        if !min_poly.eval(&BigInt::from(2)).is_zero() || *dim != BigInt::from(2) {
            problems.push("p(2) != 0 or dim std != 2".into());
        }
    } else {
        problems.push("S3 derivation is not TorsionMinPoly".into());
    }
    conclude("2", "Z/2, Z/3 and S3 std witnesses", &problems);
}

fn domain_verdict(name: &str) -> DomainDecision {
    let r = corpus::ring(name).unwrap();
    commutative_domain_decision(&r, 64, 3, DEFAULT_SEED).unwrap()
}

fn cyclic_names() -> Vec<String> {
    (2..=12).map(|n| format!("z{n}")).collect()
}

#[test]
fn criterion_03a_domain_decisions() {
    let mut problems = Vec::new();
    match domain_verdict("fibonacci") {
        DomainDecision::Domain { x, min_poly, .. } => {
            if x.to_string() != "tau" || min_poly != IntPoly::from_i64(&[-1, -1, 1]) {
                problems.push(format!("Fibonacci certificate ({x}, {min_poly})"));
            }
        }
        other => problems.push(format!("Fibonacci: {}", other.kind())),
    }
    if !matches!(domain_verdict("trivial"), DomainDecision::Domain { .. }) {
        problems.push("rank-1 ring is not a domain".into());
    }
    for name in std::iter::once("ising".to_string()).chain(cyclic_names()) {
        match domain_verdict(&name) {
            DomainDecision::NotDomain { witness, .. } if witness.verify() => {}
            other => problems.push(format!("{name}: {}", other.kind())),
        }
    }
    conclude("3a", "domain decisions for Fibonacci, rank 1, Ising, Z/2..Z/12", &problems);
}

/// Cross-check of the domain decisions against brute force at support 2 and
/// height 2. For odd `n`, no pair of elements of `Z[Z/n]` with at most two
/// terms each multiplies to zero, so those cases cannot pass.
#[test]
fn criterion_03b_bounded_search_cross_check() {
    let mut problems = Vec::new();
    let mut names = vec!["fibonacci".to_string(), "trivial".to_string(), "ising".to_string()];
    names.extend(cyclic_names());
    for name in names {
        let not_domain = matches!(domain_verdict(&name), DomainDecision::NotDomain { .. });
        let found = bounded_zero_divisor_search(&corpus::ring(&name).unwrap(), 2, 2).unwrap();
        match (&found, not_domain) {
            (Some(w), true) if w.verify() => {}
            (None, false) => {}
            (Some(_), false) => problems.push(format!("{name}: witness found on a Domain case")),
            (Some(_), true) => problems.push(format!("{name}: search witness does not verify")),
            (None, true) => problems.push(format!("{name}: NotDomain but no witness at support 2, height 2")),
        }
    }
    conclude("3b", "bounded search agrees with the domain decisions", &problems);
}

fn mutations(t: &CharacterTable) -> Vec<CharacterTable> {
    let mut out = Vec::new();
    for i in 0..t.chars.len() {
        for c in 0..t.chars.len() {
            for delta in [-3i64, -2, -1, 1, 2, 3] {
                let mut m = t.clone();
                m.chars[i][c] += delta;
                out.push(m);
            }
        }
    }
    out
}

#[test]
fn criterion_04_orthonormality() {
    let mut problems = Vec::new();
    let mut mutated = 0;
    for name in ["z2", "s3", "s4", "d4"] {
        let t = corpus::table(name).unwrap();
        let report = haar_orthonormality_check(&t).unwrap();
        let n = t.chars.len();
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j { BigRational::one() } else { BigRational::zero() };
                if report.gram[i][j] != expected {
                    problems.push(format!("{name}: G[{i}][{j}] = {}", report.gram[i][j]));
                }
            }
        }
        for m in mutations(&t) {
            mutated += 1;
            if haar_orthonormality_check(&m).is_ok_and(|r| r.passed()) {
                problems.push(format!("{name}: mutation {:?} undetected", m.chars));
            }
        }
    }
    conclude("4", &format!("4 tables orthonormal, {mutated} mutations detected"), &problems);
}

#[test]
fn criterion_05_fusion_ingestion() {
    let mut problems = Vec::new();
    let ring = char_table_to_fusion_ring(&corpus::table("s3").unwrap()).unwrap();
    let r = ring.clone().into_ref();
    let std = el(&r, "std");
    if std.multiply(&std).unwrap() != el(&r, "triv + sgn + std") {
        problems.push("std * std".into());
    }
    if let Some(t) = ring.triples().find(|&(_, _, _, n)| n > 1) {
        problems.push(format!("multiplicity above 1 at {t:?}"));
    }
    let report = validate(&ring);
    if !report.passed() {
        problems.push(format!("validate: {:?}", report.violations));
    }
    let dims = ring.dims().unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let lhs: BigInt = (0..3).map(|k| ring.structure_constant(i, j, k) * &dims[k]).sum();
            if lhs != &dims[i] * &dims[j] {
                problems.push(format!("dimension sum at ({i}, {j})"));
            }
        }
    }
    conclude("5", "S3 table to fusion ring", &problems);
}

#[test]
fn criterion_06_kaplansky() {
    let mut problems = Vec::new();
    let mut witnesses = 0;
    for n in 2..=10u64 {
        let g = Arc::new(Group::cyclic(n).unwrap());
        let w = kaplansky_witness(&g, &GroupElement::Residue(1), 64).unwrap();
        let WitnessPair::Group { a, b } = &w.pair else { unreachable!() };
        if !(a.multiply(b).unwrap().is_zero() && verify_witness(&w)) || b.support_len() != n as usize {
            problems.push(format!("Z/{n}"));
        }
        witnesses += 1;
    }
    for (name, degree) in [("s3", 3), ("s4", 4)] {
        let g = Arc::new(Group::symmetric(degree).unwrap());
        for i in 1..=degree {
            for j in i + 1..=degree {
                let t = g.parse_element(&format!("({i} {j})")).unwrap();
                match kaplansky_witness(&g, &t, 64) {
                    Ok(w) if verify_witness(&w) => witnesses += 1,
                    _ => problems.push(format!("{name}: ({i} {j})")),
                }
            }
        }
    }
    let torsion_free: Vec<(&str, Group)> = vec![
        ("Z", Group::free_abelian(1)),
        ("Z^2", Group::free_abelian(2)),
        ("Z^3", Group::free_abelian(3)),
        ("F2", Group::free(2).unwrap()),
        ("Heisenberg", Group::Heisenberg),
    ];
    for (name, g) in torsion_free {
        let g = Arc::new(g);
        for s in g.standard_generators() {
            if element_order(&g, &s, 64).unwrap() != ElementOrder::ExceedsCap {
                problems.push(format!("{name}: generator {} has finite order", g.label(&s)));
            }
        }
        if kaplansky_witness(&g, &g.standard_generators()[0], 64) != Err(Error::TorsionFreeAtCap(64)) {
            problems.push(format!("{name}: kaplansky did not report torsion-free at cap"));
        }
        if let Some(w) = bounded_group_ring_search(&g, 2, 2, 1).unwrap() {
            problems.push(format!("{name}: search found {w}"));
        }
    }
    conclude("6", &format!("{witnesses} torsion witnesses; 5 torsion-free groups clean"), &problems);
}

/// Heisenberg ball sizes computed on 3x3 unipotent integer matrices.
fn heisenberg_matrix_balls(n: usize) -> Vec<u64> {
    type M = [[i64; 3]; 3];
    fn mul(a: &M, b: &M) -> M {
        let mut c = [[0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    }
    let id: M = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let gens: [M; 4] = [
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[1, -1, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
        [[1, 0, 0], [0, 1, -1], [0, 0, 1]],
    ];
    let mut seen = HashSet::from([id]);
    let mut frontier = vec![id];
    let mut sizes = vec![1];
    for _ in 0..n {
        let mut next = Vec::new();
        for x in &frontier {
            for s in &gens {
                let y = mul(x, s);
                if seen.insert(y) {
                    next.push(y);
                }
            }
        }
        sizes.push(seen.len() as u64);
        frontier = next;
    }
    sizes
}

#[test]
fn criterion_07_growth() {
    let mut problems = Vec::new();
    let balls = |g: &Group, n: usize| ball_sizes(g, &g.standard_generators(), n, DEFAULT_BALL_LIMIT).unwrap().sizes;

    let z = balls(&Group::free_abelian(1), 256);
    if z.iter().enumerate().any(|(n, &b)| b != 2 * n as u64 + 1) {
        problems.push("Z balls differ from 2n+1".into());
    }

    let z2 = balls(&Group::free_abelian(2), 64);
    if z2.iter().enumerate().any(|(n, &b)| b != 2 * (n * n) as u64 + 2 * n as u64 + 1) {
        problems.push("Z^2 balls differ from 2n^2+2n+1".into());
    }
    let est = growth_degree_estimate(&z2).unwrap();
    if est.m != 32 || (est.slope - 2.0).abs() >= 0.2 || est.classification != GrowthClass::Polynomial(2) {
        problems.push(format!("Z^2 estimate {est:?}"));
    }

    let h = balls(&Group::Heisenberg, 14);
    if h != heisenberg_matrix_balls(14) {
        problems.push("Heisenberg balls differ from the matrix BFS".into());
    }
    let est = growth_degree_estimate(&h).unwrap();
    if est.m != 7 || !(3.4..=4.6).contains(&est.slope) || est.classification != GrowthClass::Polynomial(4) {
        problems.push(format!("Heisenberg estimate slope {} class {:?}", est.slope, est.classification));
    }
    let heis_slope = est.slope;

    let f2 = balls(&Group::free(2).unwrap(), 10);
    let est = growth_degree_estimate(&f2).unwrap();
    if est.classification != GrowthClass::ExponentialSuspected {
        problems.push(format!("F2 classified {:?}", est.classification));
    }
    conclude("7", &format!("Heisenberg slope {heis_slope:.3}"), &problems);
}

#[test]
fn criterion_08_su2() {
    let mut problems = Vec::new();
    let r: RingRef = Arc::new(Su2);
    let u1 = el(&r, "u1");
    if u1.multiply(&u1).unwrap() != el(&r, "u0 + u2") {
        problems.push(format!("u1 * u1 = {}", u1.multiply(&u1).unwrap()));
    }
    match torsion_check(&u1, 32).unwrap() {
        TorsionVerdict::Inconclusive { .. } => {}
        v => problems.push(format!("u1 at cap 32: {v:?}")),
    }
    match torsion_check(&el(&r, "u0"), 32).unwrap() {
        TorsionVerdict::Torsion { closure } if closure.members == [0] => {}
        v => problems.push(format!("u0: {v:?}")),
    }
    conclude("8", "Clebsch-Gordan ring", &problems);
}

#[test]
fn criterion_09_multimatrix() {
    let mut problems = Vec::new();
    let mut lists: Vec<Vec<usize>> = vec![vec![]];
    let mut checked = 0;
    for _ in 0..4 {
        lists = lists
            .into_iter()
            .flat_map(|l| {
                (1..=4).map(move |s| {
                    let mut m = l.clone();
                    m.push(s);
                    m
                })
            })
            .collect();
        for blocks in &lists {
            match multimatrix_zero_divisor(blocks) {
                Ok(w) if blocks.len() >= 2 && verify_witness(&w) => checked += 1,
                Err(Error::SingleBlock) if blocks.len() == 1 => checked += 1,
                other => problems.push(format!("{blocks:?}: {other:?}")),
            }
        }
    }
    conclude("9", &format!("{checked} block lists up to length 4"), &problems);
}

#[test]
fn criterion_10_exact_kernel() {
    let mut problems = Vec::new();
    for coeffs in [&[-1i64, 0, 1][..], &[-1, 0, 0, 1], &[0, -2, -1, 1]] {
        let p = IntPoly::from_i64(coeffs);
        let m = minimal_polynomial(&IntMatrix::companion(&p).unwrap()).unwrap();
        if m != p {
            problems.push(format!("companion of {p} gives {m}"));
        }
    }
    let matrices = vec![
        IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]),
        IntMatrix::from_rows(&[vec![2, 3, 0], vec![0, 4, 6]]),
        IntMatrix::from_rows(&[vec![6, 10, 15, 4], vec![12, 20, 30, 8]]),
        IntMatrix::zeros(2, 2),
        IntMatrix::identity(3),
        IntMatrix::companion(&IntPoly::from_i64(&[0, -2, -1, 1])).unwrap(),
    ];
    let mut vectors = 0;
    for m in &matrices {
        for v in kernel_basis(m) {
            vectors += 1;
            let content = v.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            if !content.is_one() {
                problems.push(format!("kernel vector {v:?} is not primitive"));
            }
            if m.mul_vec(&v).unwrap().iter().any(|x| !x.is_zero()) {
                problems.push(format!("kernel vector {v:?} not annihilated"));
            }
        }
    }
    conclude("10", &format!("3 companion matrices, {vectors} kernel vectors"), &problems);
}
