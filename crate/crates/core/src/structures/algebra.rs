use alloc::format;
use alloc::vec::Vec;

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::error::{shape, Result};
use crate::field::Field;
use crate::linalg::{invert, unit_vec, LinearMap};

/// A monoidal Hom-algebra `(A, α)` given by structure constants.
///
/// `mult` is the map `A ⊗ A → A`, so the coefficient of `e_k` in `e_i e_j`
/// is `mult[k, i * dim + j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra<F> {
    dim: usize,
    mult: LinearMap<F>,
    unit: Vec<F>,
    alpha: LinearMap<F>,
    alpha_inv: LinearMap<F>,
}

impl<F: Field> HomAlgebra<F> {
    pub fn new(mult: LinearMap<F>, unit: Vec<F>, alpha: LinearMap<F>) -> Result<Self> {
        let dim = unit.len();
        mult.require_shape(dim, dim * dim, "multiplication")?;
        alpha.require_shape(dim, dim, "algebra automorphism")?;
        let alpha_inv = invert(&alpha)?;
        Ok(HomAlgebra { dim, mult, unit, alpha, alpha_inv })
    }

    /// From a table `t[i][j][k]` = coefficient of `e_k` in `e_i e_j`.
    pub fn from_table(table: &[Vec<Vec<F>>], unit: Vec<F>, alpha: LinearMap<F>) -> Result<Self> {
        let d = unit.len();
        if table.len() != d || table.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(shape(format!("multiplication table is not {d}x{d}x{d}")));
        }
        let mult = LinearMap::from_fn(d, d * d, |k, c| table[c / d][c % d][k].clone());
        Self::new(mult, unit, alpha)
    }

    /// The ground field as the one-dimensional Hom-algebra with `α = id`.
    pub fn ground() -> Self {
        Self::new(LinearMap::identity(1), unit_vec(1, 0), LinearMap::identity(1)).expect("ground field")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &LinearMap<F> {
        &self.mult
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn alpha(&self) -> &LinearMap<F> {
        &self.alpha
    }

    pub fn alpha_inv(&self) -> &LinearMap<F> {
        &self.alpha_inv
    }

    /// `α^n` for any integer `n`.
    pub fn alpha_pow(&self, n: i32) -> LinearMap<F> {
        let base = if n >= 0 { &self.alpha } else { &self.alpha_inv };
        let mut out = LinearMap::identity(self.dim);
        for _ in 0..n.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    /// Coefficient of `e_k` in `e_i e_j`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &F {
        self.mult.get(k, i * self.dim + j)
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let d = self.dim;
        let mut out: Vec<F> = crate::linalg::zero_vec(d);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul_ref(y);
                for (k, o) in out.iter_mut().enumerate() {
                    o.mul_add_assign(&xy, self.mult.get(k, i * d + j));
                }
            }
        }
        out
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<F> {
        self.mult.column(i * self.dim + j)
    }

    /// Same space and automorphism, multiplication legs swapped.
    pub fn opposite(&self) -> Self {
        let d = self.dim;
        let mult = LinearMap::from_fn(d, d * d, |k, c| self.mult.get(k, (c % d) * d + c / d).clone());
        HomAlgebra { dim: d, mult, unit: self.unit.clone(), alpha: self.alpha.clone(), alpha_inv: self.alpha_inv.clone() }
    }

    /// `A ⊗ B` with componentwise product and automorphism `α ⊗ β`.
    pub fn tensor(&self, other: &HomAlgebra<F>) -> Self {
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 * d2;
        let mut mult = LinearMap::zeros(d, d * d);
        for a in 0..d1 {
            for b in 0..d2 {
                for c in 0..d1 {
                    for e in 0..d2 {
                        let p = self.mul_basis(a, c);
                        let q = other.mul_basis(b, e);
                        let col = (a * d2 + b) * d + c * d2 + e;
                        for (i, x) in p.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            for (j, y) in q.iter().enumerate() {
                                if !y.is_zero() {
                                    mult.set(i * d2 + j, col, x.mul_ref(y));
                                }
                            }
                        }
                    }
                }
            }
        }
        let unit = crate::tensor::pair(&self.unit, &other.unit);
        let alpha = self.alpha.kron(&other.alpha);
        let alpha_inv = self.alpha_inv.kron(&other.alpha_inv);
        HomAlgebra { dim: d, mult, unit, alpha, alpha_inv }
    }

    /// Replaces the automorphism, keeping the multiplication.
    pub fn with_alpha(&self, alpha: LinearMap<F>) -> Result<Self> {
        Self::new(self.mult.clone(), self.unit.clone(), alpha)
    }
}

pub(crate) fn hom_algebra_flow<F: Field>(a: &HomAlgebra<F>) -> Flow<F> {
    let d = a.dim;
    let basis: Vec<Vec<F>> = (0..d).map(|i| unit_vec(d, i)).collect();
    let alpha: Vec<Vec<F>> = (0..d).map(|i| a.alpha.column(i)).collect();
    let prod: Vec<Vec<Vec<F>>> = (0..d).map(|i| (0..d).map(|j| a.mul_basis(i, j)).collect()).collect();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let lhs = a.mul(&alpha[i], &a.mul(&basis[j], &basis[k]));
                let rhs = a.mul(&prod[i][j], &alpha[k]);
                expect_eq("hom-associativity", &[i, j, k], lhs, rhs)?;
            }
        }
    }
    for i in 0..d {
        expect_eq("unit-right", &[i], a.mul(&basis[i], &a.unit), alpha[i].clone())?;
        expect_eq("unit-left", &[i], a.mul(&a.unit, &basis[i]), alpha[i].clone())?;
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = a.alpha.apply(&prod[i][j]);
            let rhs = a.mul(&alpha[i], &alpha[j]);
            expect_eq("alpha-multiplicative", &[i, j], lhs, rhs)?;
        }
    }
    expect_eq("alpha-unit", &[], a.alpha.apply(&a.unit), a.unit.clone())
}

/// Checks `α(a)(bc) = (ab)α(c)`, `a1 = 1a = α(a)`, `α(ab) = α(a)α(b)` and
/// `α(1) = 1` on all basis tuples.
pub fn check_hom_algebra<F: Field>(a: &HomAlgebra<F>) -> Result<Verdict<F>> {
    finish(hom_algebra_flow(a))
}

/// A linear map between Hom-algebras, to be checked as a morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism<F> {
    pub source: HomAlgebra<F>,
    pub target: HomAlgebra<F>,
    pub matrix: LinearMap<F>,
}

impl<F: Field> AlgebraMorphism<F> {
    pub fn new(source: HomAlgebra<F>, target: HomAlgebra<F>, matrix: LinearMap<F>) -> Result<Self> {
        matrix.require_shape(target.dim(), source.dim(), "algebra morphism")?;
        Ok(AlgebraMorphism { source, target, matrix })
    }

    pub fn identity(a: &HomAlgebra<F>) -> Self {
        AlgebraMorphism { source: a.clone(), target: a.clone(), matrix: LinearMap::identity(a.dim()) }
    }

    /// The unit map `k → A`.
    pub fn unit_map(a: &HomAlgebra<F>) -> Self {
        let matrix = LinearMap::from_columns(a.dim(), &[a.unit().to_vec()]).expect("unit column");
        AlgebraMorphism { source: HomAlgebra::ground(), target: a.clone(), matrix }
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.matrix.apply(v)
    }
}

pub(crate) fn morphism_flow<F: Field>(f: &AlgebraMorphism<F>) -> Flow<F> {
    let (s, t) = (&f.source, &f.target);
    let d = s.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = f.apply(&s.mul_basis(i, j));
            let rhs = t.mul(&f.matrix.column(i), &f.matrix.column(j));
            expect_eq("morphism-multiplicative", &[i, j], lhs, rhs)?;
        }
    }
    expect_eq("morphism-unit", &[], f.apply(s.unit()), t.unit().to_vec())?;
    expect_eq("morphism-automorphism", &[], f.matrix.compose(s.alpha()).into_data(), t.alpha().compose(&f.matrix).into_data())
}

pub fn check_algebra_morphism<F: Field>(f: &AlgebraMorphism<F>) -> Result<Verdict<F>> {
    finish(morphism_flow(f))
}
