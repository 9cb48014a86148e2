//! Factorization of integer polynomials of small degree.
//!
//! Linear factors are split off with the rational-root test. What remains is
//! handled by Kronecker's method: a factor of degree `d` is pinned down by its
//! values at `d + 1` integer points, each of which must divide the value of
//! the input there. A cheap mod-`p` irreducibility test short-circuits the
//! search whenever some prime certifies irreducibility outright.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Largest degree handed to the Kronecker search.
pub const MAX_KRONECKER_DEGREE: usize = 12;

/// Integers larger than this in absolute value are not trial-divided.
const MAX_TRIAL_DIVISION: u64 = 1_000_000_000_000;

/// Upper bound on the number of candidate value tuples inspected per degree.
const KRONECKER_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Signed content; `content * Π fᵢ^mᵢ` is the input.
    pub content: BigInt,
    /// Primitive irreducible factors with positive leading coefficient,
    /// ordered by degree and then by ascending coefficient vectors.
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.content.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }

    /// True when the input was (up to a unit) a single irreducible of
    /// positive degree.
    pub fn is_irreducible(&self) -> bool {
        self.content.abs().is_one() && self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn factor_count(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

pub fn factor_over_integers(p: &IntPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut content = p.content();
    if p.leading().unwrap().is_negative() {
        content = -content;
    }
    let mut rest = p.primitive_part();
    let mut found = Vec::new();

    while rest.degree().unwrap_or(0) > 0 {
        match rational_root_factor(&rest)? {
            Some(lin) => {
                rest = rest.div_exact(&lin).expect("root factor divides");
                found.push(lin);
            }
            None => break,
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        split_without_roots(rest, &mut found)?;
    }

    found.sort_by(IntPoly::canonical_cmp);
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    for f in found {
        match factors.last_mut() {
            Some((g, m)) if *g == f => *m += 1,
            _ => factors.push((f, 1)),
        }
    }
    Ok(Factorization { content, factors })
}

/// Finds a factor `s*x - r` for a rational root `r/s` of a primitive polynomial.
fn rational_root_factor(p: &IntPoly) -> Result<Option<IntPoly>> {
    let a0 = p.coeff(0);
    if a0.is_zero() {
        return Ok(Some(IntPoly::x()));
    }
    let lead = p.leading().unwrap().clone();
    let nums = divisors(&a0)?;
    let dens = divisors(&lead)?;
    let n = p.degree().unwrap();
    let mut candidates = Vec::new();
    for s in &dens {
        for r in &nums {
            if !r.gcd(s).is_one() {
                continue;
            }
            candidates.push((r.clone(), s.clone()));
            candidates.push((-r, s.clone()));
        }
    }
    candidates.sort_by(|(r1, s1), (r2, s2)| {
        (r1.abs(), s1, r1.is_negative()).cmp(&(r2.abs(), s2, r2.is_negative()))
    });
    for (r, s) in candidates {
        // s^n p(r/s) = Σ a_i r^i s^(n-i)
        let mut acc = BigInt::zero();
        let mut rp = BigInt::one();
        for (i, a) in p.coeffs().iter().enumerate() {
            acc += a * &rp * num_traits::pow(s.clone(), n - i);
            rp *= &r;
        }
        if acc.is_zero() {
            return Ok(Some(IntPoly::new(vec![-r, s])));
        }
    }
    Ok(None)
}

/// Splits a primitive polynomial without rational roots into irreducibles.
fn split_without_roots(p: IntPoly, out: &mut Vec<IntPoly>) -> Result<()> {
    let n = p.degree().unwrap();
    if n <= 3 || irreducible_mod_some_prime(&p) {
        out.push(p);
        return Ok(());
    }
    if n > MAX_KRONECKER_DEGREE {
        return Err(Error::Unsupported(format!(
            "factoring degree {n} exceeds the Kronecker limit of {MAX_KRONECKER_DEGREE}"
        )));
    }
    for d in 2..=n / 2 {
        if let Some(g) = kronecker_factor(&p, d)? {
            let h = p.div_exact(&g).expect("kronecker factor divides");
            split_without_roots(g, out)?;
            split_without_roots(h.primitive_part(), out)?;
            return Ok(());
        }
    }
    out.push(p);
    Ok(())
}

fn kronecker_factor(p: &IntPoly, d: usize) -> Result<Option<IntPoly>> {
    // No integer roots remain, so p(x) != 0 at every integer.
    let mut points: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    let span = (3 * d + 6) as i64;
    for k in 0..=2 * span {
        let x = BigInt::from(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
        let v = p.eval(&x);
        if v.abs().to_u64().is_none_or(|a| a > MAX_TRIAL_DIVISION) {
            continue;
        }
        points.push((x, divisors(&v)?));
    }
    if points.len() < d + 1 {
        return Err(Error::Unsupported(format!(
            "values of {p} too large for Kronecker's method"
        )));
    }
    points.sort_by_key(|(_, divs)| divs.len());
    points.truncate(d + 1);

    let budget: u64 = points
        .iter()
        .enumerate()
        .map(|(i, (_, divs))| divs.len() as u64 * if i == 0 { 1 } else { 2 })
        .try_fold(1u64, |acc, k| acc.checked_mul(k))
        .unwrap_or(u64::MAX);
    if budget > KRONECKER_BUDGET {
        return Err(Error::Unsupported(format!(
            "Kronecker search for a degree-{d} factor of {p} needs {budget} candidates"
        )));
    }

    let xs: Vec<BigInt> = points.iter().map(|(x, _)| x.clone()).collect();
    let choices: Vec<Vec<BigInt>> = points
        .iter()
        .enumerate()
        .map(|(i, (_, divs))| {
            if i == 0 {
                divs.clone()
            } else {
                divs.iter().flat_map(|v| [v.clone(), -v]).collect()
            }
        })
        .collect();
    let lead = p.leading().unwrap().clone();
    let mut chosen = Vec::with_capacity(d + 1);
    Ok(search_values(p, &lead, d, &xs, &choices, &mut chosen))
}

fn search_values(
    p: &IntPoly,
    lead: &BigInt,
    d: usize,
    xs: &[BigInt],
    choices: &[Vec<BigInt>],
    chosen: &mut Vec<BigInt>,
) -> Option<IntPoly> {
    let depth = chosen.len();
    if depth == xs.len() {
        let g = interpolate(xs, chosen)?;
        if g.degree() != Some(d) || !lead.is_multiple_of(g.leading().unwrap()) {
            return None;
        }
        let g = g.primitive_part();
        return p.div_exact(&g).map(|_| g);
    }
    for v in &choices[depth] {
        // (a - b) | (g(a) - g(b)) for any integer polynomial g.
        let consistent = chosen
            .iter()
            .zip(xs)
            .all(|(w, x)| (v - w).is_multiple_of(&(&xs[depth] - x)));
        if !consistent {
            continue;
        }
        chosen.push(v.clone());
        if let Some(g) = search_values(p, lead, d, xs, choices, chosen) {
            return Some(g);
        }
        chosen.pop();
    }
    None
}

/// Newton interpolation; `None` if the interpolant has non-integral coefficients.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Option<IntPoly> {
    let n = xs.len();
    let mut coef: Vec<BigRational> = ys.iter().map(|y| BigRational::from(y.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = BigRational::from(&xs[i] - &xs[i - level]);
            coef[i] = num / den;
        }
    }
    // Expand Σ c_k Π_{j<k} (x - x_j) from the innermost term outward.
    let mut acc: Vec<BigRational> = vec![coef[n - 1].clone()];
    for k in (0..n - 1).rev() {
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * BigRational::from(xs[k].clone());
        }
        next[0] += &coef[k];
        acc = next;
    }
    let ints: Option<Vec<BigInt>> = acc
        .into_iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect();
    ints.map(IntPoly::new)
}

/// Positive divisors of `n != 0`, ascending.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let a = n
        .abs()
        .to_u64()
        .filter(|&a| a <= MAX_TRIAL_DIVISION)
        .ok_or_else(|| Error::Unsupported(format!("trial division of {n}")))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= a {
        if a % k == 0 {
            small.push(k);
            if k * k != a {
                large.push(a / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small.into_iter().map(BigInt::from).collect())
}

const SMALL_PRIMES: [u64; 15] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// True if `p` stays irreducible of the same degree modulo one of a few small
/// primes, which certifies irreducibility over the rationals.
fn irreducible_mod_some_prime(p: &IntPoly) -> bool {
    SMALL_PRIMES.iter().any(|&q| {
        let lead = mod_u64(p.leading().unwrap(), q);
        if lead == 0 {
            return false;
        }
        let inv = pow_mod(lead, q - 2, q);
        let f: Vec<u64> = p
            .coeffs()
            .iter()
            .map(|c| mod_u64(c, q) * inv % q)
            .collect();
        rabin_irreducible(&f, q)
    })
}

fn mod_u64(c: &BigInt, q: u64) -> u64 {
    c.mod_floor(&BigInt::from(q)).to_u64().unwrap()
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `f` over F_q.
fn rem_monic(mut a: Vec<u64>, f: &[u64], q: u64) -> Vec<u64> {
    let n = f.len() - 1;
    while a.len() > n {
        let top = a.pop().unwrap();
        if top == 0 {
            continue;
        }
        let shift = a.len() - n;
        for (i, c) in f[..n].iter().enumerate() {
            a[shift + i] = (a[shift + i] + q - top * c % q) % q;
        }
    }
    trim(a)
}

fn mul_mod(a: &[u64], b: &[u64], f: &[u64], q: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % q;
        }
    }
    rem_monic(out, f, q)
}

fn frobenius(a: &[u64], f: &[u64], q: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = a.to_vec();
    let mut e = q;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &base, f, q);
        }
        base = mul_mod(&base, &base, f, q);
        e >>= 1;
    }
    result
}

fn gcd_is_one(a: &[u64], b: &[u64], q: u64) -> bool {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), q - 2, q);
        let monic: Vec<u64> = b.iter().map(|c| c * inv % q).collect();
        let r = if a.len() >= monic.len() {
            rem_monic(a, &monic, q)
        } else {
            a
        };
        a = monic;
        b = r;
    }
    a.len() == 1
}

/// Rabin's test for a monic `f` over F_q.
fn rabin_irreducible(f: &[u64], q: u64) -> bool {
    let n = f.len() - 1;
    let x = rem_monic(vec![0, 1], f, q);
    // powers[k] = x^(q^k) mod f
    let mut powers = vec![x.clone()];
    for _ in 0..n {
        let next = frobenius(powers.last().unwrap(), f, q);
        powers.push(next);
    }
    if powers[n] != x {
        return false;
    }
    let mut m = n;
    let mut prime_divisors = Vec::new();
    let mut r = 2;
    while r * r <= m {
        if m.is_multiple_of(r) {
            prime_divisors.push(r);
            while m.is_multiple_of(r) {
                m /= r;
            }
        }
        r += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    prime_divisors.into_iter().all(|r| {
        let mut diff = powers[n / r].clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + q - 1) % q;
        gcd_is_one(f, &trim(diff), q)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn difference_of_squares() {
        let f = factor_over_integers(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        assert!(f.content.is_one());
    }

    #[test]
    fn golden_ratio_polynomial_is_irreducible() {
        let f = factor_over_integers(&p(&[-1, -1, 1])).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn cube_minus_one() {
        let f = factor_over_integers(&p(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(factor_over_integers(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn content_and_repeated_factors() {
        // -6 (x - 1)^2 (2x + 1)
        let g = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[1, 2]);
        let f = factor_over_integers(&g.scale(&BigInt::from(-6))).unwrap();
        assert_eq!(f.content, BigInt::from(-6));
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 2), (p(&[1, 2]), 1)]);
    }

    #[test]
    fn x_to_the_twelve_minus_one() {
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let f = factor_over_integers(&p(&c)).unwrap();
        // cyclotomic polynomials for the divisors of 12
        let expected = vec![
            (p(&[-1, 1]), 1),
            (p(&[1, 1]), 1),
            (p(&[1, -1, 1]), 1),
            (p(&[1, 0, 1]), 1),
            (p(&[1, 1, 1]), 1),
            (p(&[1, 0, -1, 0, 1]), 1),
        ];
        assert_eq!(f.factors, expected);
    }

    #[test]
    fn product_of_quartics_without_roots() {
        // (x^4 + 1)(x^4 + x + 1) has no linear factor and x^4 + 1 is
        // reducible mod every prime, so Kronecker has to find it.
        let g = &p(&[1, 0, 0, 0, 1]) * &p(&[1, 1, 0, 0, 1]);
        let f = factor_over_integers(&g).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), g);
        assert!(f.factors.contains(&(p(&[1, 0, 0, 0, 1]), 1)));
    }

    #[test]
    fn irreducible_sextic() {
        let g = p(&[1, 1, 1, 1, 1, 1, 1]); // seventh cyclotomic
        assert!(factor_over_integers(&g).unwrap().is_irreducible());
    }

    #[test]
    fn high_degree_irreducible_beyond_kronecker_limit_needs_certificate() {
        // x^13 - x - 1 is irreducible; a prime certificate may or may not
        // exist, but the answer must never be an unsound split.
        let mut c = vec![0i64; 14];
        c[0] = -1;
        c[1] = -1;
        c[13] = 1;
        match factor_over_integers(&p(&c)) {
            Ok(f) => assert!(f.is_irreducible()),
            Err(e) => assert!(matches!(e, Error::Unsupported(_))),
        }
    }

    #[test]
    fn rabin_detects_reducible() {
        // x^2 + 1 = (x + 2)(x + 3) mod 5
        assert!(!rabin_irreducible(&[1, 0, 1], 5));
        assert!(rabin_irreducible(&[1, 0, 1], 3));
    }
}
