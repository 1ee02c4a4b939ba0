//! Tensor products over a Hom-algebra.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{invert, unit_vec, LinearMap};
use crate::quotient::{to_sparse, KronImage, QuotientSpace, SparseVec};
use crate::tensor::pair;

use super::algebra::HomAlgebra;
use super::module::{HomBimodule, ModuleWitness, Side};

/// `M ⊗_A N` as a quotient of `M ⊗ N` together with the induced automorphism `μ ⊗ ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTensor<F> {
    left_dim: usize,
    right_dim: usize,
    quotient: QuotientSpace<F>,
    mu: LinearMap<F>,
}

impl<F: Field> BalancedTensor<F> {
    /// Relations `ma ⊗ n − μ(m) ⊗ aν⁻¹(n)` for right action `M ⊗ A → M` and left action `A ⊗ N → N`.
    pub fn new(a: &HomAlgebra<F>, mu: &LinearMap<F>, right: &LinearMap<F>, nu: &LinearMap<F>, left: &LinearMap<F>) -> Result<Self> {
        let (dm, dn, da) = (mu.rows(), nu.rows(), a.dim());
        right.require_shape(dm, dm * da, "right action")?;
        left.require_shape(dn, da * dn, "left action")?;
        let nu_inv = invert(nu)?;
        let sparse_cols = |m: &LinearMap<F>| -> Vec<SparseVec<F>> { (0..m.cols()).map(|c| to_sparse(&m.column(c))).collect() };
        let (mu_cols, right_cols, left_cols, nu_inv_cols) = (sparse_cols(mu), sparse_cols(right), sparse_cols(left), sparse_cols(&nu_inv));
        // a ν⁻¹(n) for every basis pair (a, n).
        let acted: Vec<SparseVec<F>> = (0..da * dn)
            .map(|jk| {
                let (j, k) = (jk / dn, jk % dn);
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for (l, x) in &nu_inv_cols[k] {
                    for (r, y) in &left_cols[j * dn + l] {
                        acc.entry(*r).or_insert_with(F::zero).mul_add_assign(x, y);
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        let mut relations: Vec<SparseVec<F>> = Vec::with_capacity(dm * da * dn);
        for i in 0..dm {
            for j in 0..da {
                for k in 0..dn {
                    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                    for (p, x) in &right_cols[i * da + j] {
                        acc.entry(p * dn + k).or_insert_with(F::zero).add_assign_ref(x);
                    }
                    for (u, x) in &mu_cols[i] {
                        for (v, y) in &acted[j * dn + k] {
                            acc.entry(u * dn + v).or_insert_with(F::zero).sub_assign_ref(&x.mul_ref(y));
                        }
                    }
                    let rel: SparseVec<F> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                    if !rel.is_empty() {
                        relations.push(rel);
                    }
                }
            }
        }
        let quotient = QuotientSpace::from_sparse(dm * dn, relations);
        let induced = KronImage::new(mu, nu).descend(&quotient, &quotient, "induced automorphism")?;
        if invert(&induced).is_err() {
            return Err(Error::NotAutomorphism("induced automorphism on the balanced tensor is singular".into()));
        }
        Ok(BalancedTensor { left_dim: dm, right_dim: dn, quotient, mu: induced })
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.left_dim * self.right_dim
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn quotient(&self) -> &QuotientSpace<F> {
        &self.quotient
    }

    /// The automorphism induced by `μ ⊗ ν`.
    pub fn mu(&self) -> &LinearMap<F> {
        &self.mu
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        self.quotient.project(v)
    }

    pub fn lift(&self, q: &[F]) -> Vec<F> {
        self.quotient.lift(q)
    }

    /// `m ⊗_A n` in quotient coordinates.
    pub fn class_of(&self, m: &[F], n: &[F]) -> Vec<F> {
        self.quotient.project(&pair(m, n))
    }

    /// `f ⊗ g` pushed through representatives: `proj ∘ (f ⊗ g) ∘ section`.
    pub fn induced_map(&self, target: &BalancedTensor<F>, f: &LinearMap<F>, g: &LinearMap<F>) -> LinearMap<F> {
        KronImage::new(f, g).induced(&self.quotient, &target.quotient)
    }

    /// As [`Self::induced_map`], but fails with `NonDescendingMap` unless `f ⊗ g` respects the relations.
    pub fn descend_map(&self, target: &BalancedTensor<F>, f: &LinearMap<F>, g: &LinearMap<F>) -> Result<LinearMap<F>> {
        KronImage::new(f, g).descend(&self.quotient, &target.quotient, "tensor of maps")
    }
}

/// `M ⊗_A N` for a right `A`-module `M` and a left `A`-module `N`.
pub fn tensor_over_a<F: Field>(a: &HomAlgebra<F>, m: &ModuleWitness<F>, n: &ModuleWitness<F>) -> Result<BalancedTensor<F>> {
    let right = m.action_map(Side::Right, a.dim())?;
    let left = n.action_map(Side::Left, a.dim())?;
    BalancedTensor::new(a, m.mu(), right, n.mu(), left)
}

/// `M ⊗_B N` of an `(A, B)`-bimodule and a `(B, C)`-bimodule, with
/// `a(x ⊗ y) = α⁻¹(a)x ⊗ ν(y)` and `(x ⊗ y)c = μ(x) ⊗ yγ⁻¹(c)`.
pub fn tensor_bimodules<F: Field>(
    a: &HomAlgebra<F>,
    b: &HomAlgebra<F>,
    c: &HomAlgebra<F>,
    m: &HomBimodule<F>,
    n: &HomBimodule<F>,
) -> Result<(BalancedTensor<F>, HomBimodule<F>)> {
    let t = BalancedTensor::new(b, m.mu(), m.right(), n.mu(), n.left())?;
    let bimodule = induced_bimodule(a, c, &t, m, n)?;
    Ok((t, bimodule))
}

/// The bimodule structure induced on an already built `M ⊗_B N`.
pub fn induced_bimodule<F: Field>(
    a: &HomAlgebra<F>,
    c: &HomAlgebra<F>,
    t: &BalancedTensor<F>,
    m: &HomBimodule<F>,
    n: &HomBimodule<F>,
) -> Result<HomBimodule<F>> {
    let (da, dc, dq) = (a.dim(), c.dim(), t.dim());
    let (dm, dn) = (m.dim(), n.dim());
    m.left().require_shape(dm, da * dm, "left action")?;
    n.right().require_shape(dn, dn * dc, "right action")?;
    let left = LinearMap::from_images(dq, da * dq, |col| {
        let (i, q) = (col / dq, col % dq);
        let x = a.alpha_inv().column(i);
        let rep = t.quotient.representative(q);
        let (xm, yn) = (rep / dn, rep % dn);
        let ax = m.act_left(&x, &unit_vec(dm, xm));
        t.class_of(&ax, &n.mu().column(yn))
    });
    let right = LinearMap::from_images(dq, dq * dc, |col| {
        let (q, i) = (col / dc, col % dc);
        let x = c.alpha_inv().column(i);
        let rep = t.quotient.representative(q);
        let (xm, yn) = (rep / dn, rep % dn);
        let yc = n.act_right(&unit_vec(dn, yn), &x);
        t.class_of(&m.mu().column(xm), &yc)
    });
    HomBimodule::new(t.mu.clone(), left, right)
}
