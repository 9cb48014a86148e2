use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from nested rows. Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(height: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(height, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), height, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    /// Companion matrix of a monic polynomial (ones on the subdiagonal, the
    /// negated low coefficients in the last column).
    pub fn companion(p: &IntPoly) -> Result<Self> {
        if !p.is_monic() || p.degree().unwrap_or(0) == 0 {
            return Err(Error::Unsupported(format!(
                "companion matrix of non-monic or constant polynomial {p}"
            )));
        }
        let n = p.degree().unwrap();
        let mut m = Self::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = BigInt::one();
        }
        for i in 0..n {
            m[(i, n - 1)] = -p.coeff(i);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn add_scaled_identity(&self, c: &BigInt) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            out[(i, i)] += c;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        reduce(self).pivots.len()
    }

    /// Evaluates `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &IntPoly) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Self::zeros(self.rows, self.cols);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?.add_scaled_identity(c)?;
        }
        Ok(acc)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

struct Reduced {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content and makes the first nonzero entry positive.
pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let g = content(v);
    if g.is_zero() {
        return;
    }
    let negate = v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
    for x in v.iter_mut() {
        *x = &*x / &g;
        if negate {
            *x = -&*x;
        }
    }
}

/// Fraction-free Gauss-Jordan elimination. Every nonzero row is kept
/// primitive, so entries stay small; pivot columns are cleared above and below.
fn reduce(m: &IntMatrix) -> Reduced {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
        let Some(p) = best else { continue };
        rows.swap(r, p);
        make_primitive(&mut rows[r]);
        if rows[r][c].is_negative() {
            rows[r].iter_mut().for_each(|x| *x = -&*x);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let g = pivot_row[c].gcd(&row[c]);
            let scale_row = &pivot_row[c] / &g;
            let scale_pivot = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &scale_row - y * &scale_pivot;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    Reduced { rows, pivots }
}

/// Basis of the rational kernel of `m`, one primitive integer vector per free
/// column, each with its first nonzero entry positive.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let red = reduce(m);
    let lcm = red
        .pivots
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (r, &c)| acc.lcm(&red.rows[r][c]));
    let mut basis = Vec::new();
    let mut next_pivot = 0;
    for free in 0..m.cols {
        if red.pivots.get(next_pivot) == Some(&free) {
            next_pivot += 1;
            continue;
        }
        let mut v = vec![BigInt::zero(); m.cols];
        v[free] = lcm.clone();
        for (r, &c) in red.pivots.iter().enumerate() {
            let entry = &red.rows[r][free];
            if !entry.is_zero() {
                v[c] = -(entry * &lcm) / &red.rows[r][c];
            }
        }
        make_primitive(&mut v);
        basis.push(v);
    }
    basis
}

/// Given vectors `v_0, …, v_k` with `v_0, …, v_{k-1}` independent, returns
/// the primitive relation `Σ c_i v_i = 0` normalised so `c_k > 0`, or `None`
/// if `v_k` is independent of the rest.
pub(crate) fn last_dependence(height: usize, vectors: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    let m = IntMatrix::from_columns(height, vectors);
    let mut ker = kernel_basis(&m);
    debug_assert!(ker.len() <= 1, "leading vectors were not independent");
    let mut rel = ker.pop()?;
    if rel.last().is_some_and(Signed::is_negative) {
        rel.iter_mut().for_each(|x| *x = -&*x);
    }
    Some(rel)
}

/// Converts a relation among successive powers into a monic polynomial.
pub(crate) fn relation_to_monic(rel: Vec<BigInt>) -> Result<IntPoly> {
    let lead = rel.last().cloned().unwrap_or_default();
    if !lead.is_one() {
        return Err(Error::Unsupported(format!(
            "power relation has leading coefficient {lead}; element is not integral"
        )));
    }
    Ok(IntPoly::new(rel))
}

/// Monic minimal polynomial via the first linear dependence among
/// `I, M, M², …` (Krylov iteration on the flattened powers).
pub fn minimal_polynomial(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let mut powers = vec![IntMatrix::identity(n).data];
    let mut current = IntMatrix::identity(n);
    for _ in 0..n {
        current = current.mul(m)?;
        powers.push(current.data.clone());
        if let Some(rel) = last_dependence(n * n, &powers) {
            return relation_to_monic(rel);
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(kernel_basis(&IntMatrix::identity(2)).is_empty());
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(kernel_basis(&m), vec![big(&[1, -1])]);
    }

    #[test]
    fn kernel_of_zero_matrix() {
        let ker = kernel_basis(&IntMatrix::zeros(2, 2));
        assert_eq!(ker, vec![big(&[1, 0]), big(&[0, 1])]);
    }

    #[test]
    fn kernel_needs_scaling() {
        let m = IntMatrix::from_rows(&[vec![2, 3, 0], vec![0, 4, 6]]);
        let ker = kernel_basis(&m);
        assert_eq!(ker, vec![big(&[9, -6, 4])]);
    }

    #[test]
    fn min_poly_small_cases() {
        assert_eq!(
            minimal_polynomial(&IntMatrix::zeros(3, 3)).unwrap(),
            IntPoly::from_i64(&[0, 1])
        );
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            minimal_polynomial(&swap).unwrap(),
            IntPoly::from_i64(&[-1, 0, 1])
        );
        assert_eq!(
            minimal_polynomial(&IntMatrix::identity(4)).unwrap(),
            IntPoly::from_i64(&[-1, 1])
        );
    }

    #[test]
    fn min_poly_rejects_rectangular() {
        let m = IntMatrix::zeros(2, 3);
        assert_eq!(
            minimal_polynomial(&m),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn min_poly_of_jordan_block() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![0, 2]]);
        assert_eq!(
            minimal_polynomial(&m).unwrap(),
            IntPoly::from_i64(&[4, -4, 1])
        );
    }
}
