//! Dense matrices over an exact field, row reduction, kernels and inverses.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{shape, Error, Result};
use crate::field::Field;

/// A linear map between coordinate spaces. Entry `(r, c)` is the coefficient
/// of output basis vector `r` in the image of input basis vector `c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> LinearMap<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinearMap { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    /// Builds a map from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(shape(format!("{} entries for a {}x{} matrix", data.len(), rows, cols)));
        }
        Ok(LinearMap { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(shape("ragged rows"));
        }
        Ok(LinearMap { rows: rows.len(), cols, data: rows.iter().flatten().cloned().collect() })
    }

    /// Builds a map whose `c`-th column is `columns[c]`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(shape("column length differs from row count"));
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        LinearMap { rows, cols, data }
    }

    /// Map with the given values on each input basis vector.
    pub fn from_images(rows: usize, cols: usize, mut image: impl FnMut(usize) -> Vec<F>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for c in 0..cols {
            let v = image(c);
            debug_assert_eq!(v.len(), rows);
            for (r, x) in v.into_iter().enumerate() {
                m.data[r * cols + c] = x;
            }
        }
        m
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

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: F) {
        self.data[r * self.cols + c] = value;
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [F] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Matrix-vector product. Panics if `v` has the wrong length.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix");
        let mut out = vec![F::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                o.mul_add_assign(&self.data[r * self.cols + c], x);
            }
        }
        out
    }

    /// `self ∘ rhs`. Panics on mismatched inner dimensions.
    pub fn compose(&self, rhs: &LinearMap<F>) -> LinearMap<F> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    out.data[r * rhs.cols + c].mul_add_assign(a, &rhs.data[k * rhs.cols + c]);
                }
            }
        }
        out
    }

    /// Kronecker product, matching the lexicographic tensor basis.
    pub fn kron(&self, other: &LinearMap<F>) -> LinearMap<F> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a.mul_ref(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> LinearMap<F> {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &LinearMap<F>) -> LinearMap<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        LinearMap { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &LinearMap<F>) -> LinearMap<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        LinearMap { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F) -> LinearMap<F> {
        let data = self.data.iter().map(|a| a.mul_ref(s)).collect();
        LinearMap { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub(crate) fn require_shape(&self, rows: usize, cols: usize, what: &str) -> Result<()> {
        if self.rows == rows && self.cols == cols {
            Ok(())
        } else {
            Err(shape(format!("{what}: expected {rows}x{cols}, got {}x{}", self.rows, self.cols)))
        }
    }
}

/// Reduced row-echelon form and the pivot columns, in increasing order.
pub fn row_reduce<F: Field>(m: &LinearMap<F>) -> (LinearMap<F>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                a.data.swap(p * cols + k, r * cols + k);
            }
        }
        let inv = a.get(r, c).inv().expect("pivot is nonzero");
        for k in c..cols {
            let x = a.get(r, k).mul_ref(&inv);
            a.set(r, k, x);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for k in c..cols {
                let x = f.mul_ref(a.get(r, k));
                a.data[i * cols + k].sub_assign_ref(&x);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &LinearMap<F>) -> usize {
    row_reduce(m).1.len()
}

/// Basis of the null space, one vector per free column in increasing order,
/// normalised so that its own free coordinate is 1 and the others are 0.
pub fn kernel_basis<F: Field>(m: &LinearMap<F>) -> Vec<Vec<F>> {
    let (rref, pivots) = row_reduce(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![F::zero(); n];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rref.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// Two-sided inverse of a square matrix.
pub fn invert<F: Field>(m: &LinearMap<F>) -> Result<LinearMap<F>> {
    if !m.is_square() {
        return Err(shape(format!("cannot invert a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut aug = LinearMap::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, n + r, F::one());
    }
    let (rref, pivots) = row_reduce(&aug);
    if pivots.iter().filter(|&&p| p < n).count() < n {
        return Err(Error::SingularMap);
    }
    Ok(LinearMap::from_fn(n, n, |r, c| rref.get(r, n + c).clone()))
}

/// Some solution `x` of `m x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(m: &LinearMap<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(b.len(), m.rows);
    let n = m.cols;
    let mut aug = LinearMap::zeros(m.rows, n + 1);
    for r in 0..m.rows {
        for c in 0..n {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, n, b[r].clone());
    }
    let (rref, pivots) = row_reduce(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = rref.get(i, n).clone();
    }
    Some(x)
}

pub fn zero_vec<F: Field>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

pub fn unit_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = zero_vec(n);
    v[i] = F::one();
    v
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(Field::is_zero)
}

pub fn add_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale_vec<F: Field>(s: &F, a: &[F]) -> Vec<F> {
    a.iter().map(|x| s.mul_ref(x)).collect()
}

/// `acc += s * v`.
pub fn axpy<F: Field>(acc: &mut [F], s: &F, v: &[F]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.mul_add_assign(s, x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn mat(rows: &[&[i64]]) -> LinearMap<Rational> {
        LinearMap::from_rows(&rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn reduces_dependent_rows() {
        let (r, p) = row_reduce(&mat(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, mat(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn identity_and_zero_reduce_to_themselves() {
        let (r, p) = row_reduce(&LinearMap::<Rational>::identity(2));
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1]);
        let (r, p) = row_reduce(&LinearMap::<Rational>::zeros(3, 3));
        assert!(r.is_zero() && p.is_empty());
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&LinearMap::<Rational>::identity(3)).is_empty());
        assert_eq!(kernel_basis(&mat(&[&[1, 1]])), vec![vec![q(-1), q(1)]]);
        let z = kernel_basis(&LinearMap::<Rational>::zeros(3, 3));
        assert_eq!(z, (0..3).map(|i| unit_vec(3, i)).collect::<Vec<_>>());
    }

    #[test]
    fn inverses() {
        assert_eq!(invert(&mat(&[&[1, 1], &[0, 1]])).unwrap(), mat(&[&[1, -1], &[0, 1]]));
        let swap = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&swap).unwrap(), swap);
        assert_eq!(invert(&mat(&[&[1, 2], &[2, 4]])), Err(Error::SingularMap));
        assert!(matches!(invert(&mat(&[&[1, 2]])), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn kron_follows_lexicographic_basis() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.row(0).to_vec(), vec![q(0), q(1), q(0), q(2)]);
        assert_eq!(k.row(3).to_vec(), vec![q(3), q(0), q(4), q(0)]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&m, &[q(3), q(6)]), Some(vec![q(3), q(0)]));
        assert_eq!(solve(&m, &[q(3), q(5)]), None);
    }
}
