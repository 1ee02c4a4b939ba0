//! Quotients of coordinate spaces by relation spans.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::LinearMap;

/// Sparse vector as `(index, value)` pairs with strictly increasing indices.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn to_sparse<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense<F: Field>(n: usize, v: &SparseVec<F>) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Free(usize),
    Pivot(usize),
}

/// `V / R` for a relation span `R ⊆ V`.
///
/// Quotient coordinates are the non-pivot columns of the reduced row-echelon
/// basis of `R`; the section sends quotient basis vector `i` to the ambient
/// basis vector at the `i`-th non-pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace<F> {
    ambient_dim: usize,
    rows: Vec<SparseVec<F>>,
    free: Vec<usize>,
    slots: Vec<Slot>,
}

/// Incrementally maintained reduced row-echelon basis.
struct Echelon<F> {
    rows: Vec<SparseVec<F>>,
    row_of: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    fn new(n: usize) -> Self {
        Echelon { rows: Vec::new(), row_of: vec![None; n] }
    }

    fn insert(&mut self, v: SparseVec<F>) {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        let mut eliminations = Vec::new();
        for (c, x) in v {
            if x.is_zero() {
                continue;
            }
            match self.row_of[c] {
                Some(r) => eliminations.push((r, x)),
                None => acc.entry(c).or_insert_with(F::zero).add_assign_ref(&x),
            }
        }
        for (r, x) in eliminations {
            // Row r is (pivot, 1) followed by non-pivot entries only.
            for (c, y) in self.rows[r].iter().skip(1) {
                let e = acc.entry(*c).or_insert_with(F::zero);
                e.sub_assign_ref(&x.mul_ref(y));
            }
        }
        acc.retain(|_, x| !x.is_zero());
        let Some((&p, lead)) = acc.iter().next() else {
            return;
        };
        let inv = lead.inv().expect("nonzero lead");
        let new_row: SparseVec<F> = acc.into_iter().map(|(c, x)| (c, x.mul_ref(&inv))).collect();
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&p, |(c, _)| *c) {
                let f = row[pos].1.clone();
                *row = axpy_sparse(row, &-f, &new_row);
            }
        }
        self.row_of[p] = Some(self.rows.len());
        self.rows.push(new_row);
    }
}

/// `a + s * b` for sparse vectors.
fn axpy_sparse<F: Field>(a: &SparseVec<F>, s: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s.mul_ref(&b[j].1)));
            j += 1;
        } else {
            let mut x = a[i].1.clone();
            x.mul_add_assign(s, &b[j].1);
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<F: Field> QuotientSpace<F> {
    /// Quotient by the span of sparse relation vectors.
    pub fn from_sparse(ambient_dim: usize, relations: impl IntoIterator<Item = SparseVec<F>>) -> Self {
        let mut ech = Echelon::new(ambient_dim);
        for r in relations {
            debug_assert!(r.iter().all(|(c, _)| *c < ambient_dim));
            ech.insert(r);
        }
        let mut rows = ech.rows;
        rows.sort_by_key(|r| r[0].0);
        let mut slots = vec![Slot::Free(0); ambient_dim];
        for (i, r) in rows.iter().enumerate() {
            slots[r[0].0] = Slot::Pivot(i);
        }
        let mut free = Vec::new();
        for (c, slot) in slots.iter_mut().enumerate() {
            if let Slot::Free(_) = slot {
                *slot = Slot::Free(free.len());
                free.push(c);
            }
        }
        QuotientSpace { ambient_dim, rows, free, slots }
    }

    /// The trivial quotient `V / 0`.
    pub fn identity(ambient_dim: usize) -> Self {
        Self::from_sparse(ambient_dim, core::iter::empty())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Reduced row-echelon basis of the relation span.
    pub fn relations(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|r| to_dense(self.ambient_dim, r)).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient_dim, "vector is not in the ambient space");
        let mut out = vec![F::zero(); self.dim()];
        for (c, x) in v.iter().enumerate() {
            if !x.is_zero() {
                self.add_image(&mut out, c, x);
            }
        }
        out
    }

    pub fn project_sparse(&self, v: &SparseVec<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (c, x) in v {
            self.add_image(&mut out, *c, x);
        }
        out
    }

    fn add_image(&self, out: &mut [F], c: usize, x: &F) {
        match self.slots[c] {
            Slot::Free(i) => out[i].add_assign_ref(x),
            Slot::Pivot(r) => {
                for (col, y) in self.rows[r].iter().skip(1) {
                    let Slot::Free(i) = self.slots[*col] else { unreachable!("reduced row has a pivot entry") };
                    out[i].sub_assign_ref(&x.mul_ref(y));
                }
            }
        }
    }

    /// Coset representative of a quotient vector.
    pub fn lift(&self, q: &[F]) -> Vec<F> {
        assert_eq!(q.len(), self.dim());
        let mut out = vec![F::zero(); self.ambient_dim];
        for (i, x) in q.iter().enumerate() {
            out[self.free[i]] = x.clone();
        }
        out
    }

    /// Ambient column chosen to represent quotient basis vector `i`.
    pub fn representative(&self, i: usize) -> usize {
        self.free[i]
    }

    pub fn projection(&self) -> LinearMap<F> {
        LinearMap::from_images(self.dim(), self.ambient_dim, |c| {
            let mut out = vec![F::zero(); self.dim()];
            self.add_image(&mut out, c, &F::one());
            out
        })
    }

    pub fn section(&self) -> LinearMap<F> {
        LinearMap::from_images(self.ambient_dim, self.dim(), |i| {
            let mut out = vec![F::zero(); self.ambient_dim];
            out[self.free[i]] = F::one();
            out
        })
    }

    pub fn same_class(&self, a: &[F], b: &[F]) -> bool {
        self.project(a) == self.project(b)
    }

    /// Induces `V / R → target` from a map defined on `V`, checking that the
    /// relations land in the kernel of `target_projection` (or are zero when
    /// the target is not a quotient).
    pub fn descend(&self, map: &LinearMap<F>, target: Option<&QuotientSpace<F>>, what: &str) -> Result<LinearMap<F>> {
        assert_eq!(map.cols(), self.ambient_dim);
        for r in &self.rows {
            let mut image = vec![F::zero(); map.rows()];
            for (c, x) in r {
                for (k, o) in image.iter_mut().enumerate() {
                    o.mul_add_assign(map.get(k, *c), x);
                }
            }
            let vanishes = match target {
                Some(t) => t.project(&image).iter().all(Field::is_zero),
                None => image.iter().all(Field::is_zero),
            };
            if !vanishes {
                return Err(Error::NonDescendingMap(format!("{what} does not vanish on a relation")));
            }
        }
        Ok(LinearMap::from_images(map.rows(), self.dim(), |i| map.column(self.free[i])))
    }
}

/// `f ⊗ g` applied to sparse vectors without forming the Kronecker matrix.
pub struct KronImage<F> {
    f: Vec<SparseVec<F>>,
    g: Vec<SparseVec<F>>,
    g_rows: usize,
    rows: usize,
}

impl<F: Field> KronImage<F> {
    pub fn new(f: &LinearMap<F>, g: &LinearMap<F>) -> Self {
        let f_cols = (0..f.cols()).map(|c| to_sparse(&f.column(c))).collect();
        let g_cols = (0..g.cols()).map(|c| to_sparse(&g.column(c))).collect();
        KronImage { f: f_cols, g: g_cols, g_rows: g.rows(), rows: f.rows() * g.rows() }
    }

    pub fn apply(&self, v: &SparseVec<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.rows];
        for (c, x) in v {
            let (i, j) = (c / self.g.len(), c % self.g.len());
            for (p, y) in &self.f[i] {
                let xy = x.mul_ref(y);
                for (q, z) in &self.g[j] {
                    out[p * self.g_rows + q].mul_add_assign(&xy, z);
                }
            }
        }
        out
    }

    /// `target ∘ (f ⊗ g) ∘ section` of `source`, after checking that every
    /// relation of `source` lands in the relations of `target`.
    pub fn descend(&self, source: &QuotientSpace<F>, target: &QuotientSpace<F>, what: &str) -> Result<LinearMap<F>> {
        for r in &source.rows {
            if !target.project(&self.apply(r)).iter().all(Field::is_zero) {
                return Err(Error::NonDescendingMap(format!("{what} does not vanish on a relation")));
            }
        }
        Ok(self.induced(source, target))
    }

    /// As [`Self::descend`] without the relation check.
    pub fn induced(&self, source: &QuotientSpace<F>, target: &QuotientSpace<F>) -> LinearMap<F> {
        LinearMap::from_images(target.dim(), source.dim(), |i| target.project(&self.apply(&vec![(source.free[i], F::one())])))
    }
}

/// Quotient of `k^ambient_dim` by the span of dense relation vectors.
pub fn build_quotient<F: Field>(ambient_dim: usize, relations: &[Vec<F>]) -> QuotientSpace<F> {
    QuotientSpace::from_sparse(
        ambient_dim,
        relations.iter().map(|r| {
            assert_eq!(r.len(), ambient_dim, "relation length differs from the ambient dimension");
            to_sparse(r)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::linalg::{rank, row_reduce};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn single_relation_identifies_basis_vectors() {
        let quo = build_quotient(2, &[vec![q(1), q(-1)]]);
        assert_eq!(quo.dim(), 1);
        assert_eq!(quo.project(&[q(1), q(0)]), quo.project(&[q(0), q(1)]));
    }

    #[test]
    fn empty_and_full_relations() {
        let quo = build_quotient::<Rational>(3, &[]);
        assert!(quo.projection().is_identity());
        let full = build_quotient(2, &[vec![q(1), q(1)], vec![q(1), q(2)]]);
        assert_eq!(full.dim(), 0);
    }

    #[test]
    fn matches_dense_row_reduction() {
        let rels = vec![
            vec![q(0), q(2), q(4), q(0), q(1)],
            vec![q(1), q(0), q(1), q(1), q(0)],
            vec![q(1), q(2), q(5), q(1), q(1)],
            vec![q(0), q(0), q(0), q(3), q(-3)],
        ];
        let quo = build_quotient(5, &rels);
        let m = LinearMap::from_rows(&rels).unwrap();
        let (rref, pivots) = row_reduce(&m);
        assert_eq!(quo.pivots(), pivots);
        let dense: Vec<Vec<Rational>> = (0..pivots.len()).map(|i| rref.row(i).to_vec()).collect();
        assert_eq!(quo.relations(), dense);
        assert_eq!(quo.dim(), 5 - rank(&m));
        assert!(quo.projection().compose(&quo.section()).is_identity());
        for r in &rels {
            assert!(quo.project(r).iter().all(Field::is_zero));
        }
    }
}
