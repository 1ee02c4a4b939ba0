//! Trivial and Sweedler corings and base ring extension.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{unit_vec, LinearMap};
use crate::quotient::QuotientSpace;
use crate::structures::algebra::{AlgebraMorphism, HomAlgebra};
use crate::structures::balanced::{induced_bimodule, tensor_bimodules, BalancedTensor};
use crate::structures::module::HomBimodule;
use crate::tensor::pair;

use super::HomCoring;

/// `A` over itself with `Δ(a) = α⁻¹(a) ⊗ 1` and `ε = id`.
pub fn trivial_coring<F: Field>(a: &HomAlgebra<F>) -> HomCoring<F> {
    let d = a.dim();
    let comult = LinearMap::from_images(d * d, d, |i| pair(&a.alpha_inv().column(i), a.unit()));
    HomCoring::from_bimodule(a.clone(), HomBimodule::regular(a), comult, LinearMap::identity(d)).expect("trivial coring shapes")
}

/// `x ⊗ b ↦ xφ(b)` as a right action of `B` on the target algebra.
fn right_along<F: Field>(phi: &AlgebraMorphism<F>) -> LinearMap<F> {
    let (t, db) = (&phi.target, phi.source.dim());
    let d = t.dim();
    LinearMap::from_images(d, d * db, |col| t.mul(&unit_vec(d, col / db), &phi.matrix.column(col % db)))
}

/// `b ⊗ x ↦ φ(b)x` as a left action of `B` on the target algebra.
fn left_along<F: Field>(phi: &AlgebraMorphism<F>) -> LinearMap<F> {
    let (t, d) = (&phi.target, phi.target.dim());
    LinearMap::from_images(d, phi.source.dim() * d, |col| t.mul(&phi.matrix.column(col / d), &unit_vec(d, col % d)))
}

/// Fails unless `map` sends every vector of `kernel` to zero (or into the relations of `target`).
fn require_vanishing<F: Field>(map: &LinearMap<F>, kernel: &[Vec<F>], target: Option<&QuotientSpace<F>>, what: &str) -> Result<()> {
    for v in kernel {
        let image = map.apply(v);
        let zero = match target {
            Some(t) => t.project(&image).iter().all(Field::is_zero),
            None => image.iter().all(Field::is_zero),
        };
        if !zero {
            return Err(Error::NonDescendingMap(alloc::format!("{what} is not well defined on the balanced tensor")));
        }
    }
    Ok(())
}

/// `A ⊗_B A` for `φ: B → A`, with `B` acting through `φ`.
pub fn sweedler_carrier<F: Field>(phi: &AlgebraMorphism<F>) -> Result<BalancedTensor<F>> {
    let a = &phi.target;
    BalancedTensor::new(&phi.source, a.alpha(), &right_along(phi), a.alpha(), &left_along(phi))
}

/// The Sweedler coring `A ⊗_B A` of `φ: B → A`, with
/// `Δ(a ⊗ a') = (α⁻¹(a) ⊗ 1) ⊗_A (1 ⊗ α⁻¹(a'))` and `ε(a ⊗ a') = aa'`.
pub fn sweedler_coring<F: Field>(phi: &AlgebraMorphism<F>) -> Result<HomCoring<F>> {
    let a = &phi.target;
    let d = a.dim();
    let t = sweedler_carrier(phi)?;
    let m = HomBimodule::new(a.alpha().clone(), a.mult().clone(), right_along(phi))?;
    let n = HomBimodule::new(a.alpha().clone(), left_along(phi), a.mult().clone())?;
    let bimodule = induced_bimodule(a, a, &t, &m, &n)?;
    let dq = t.dim();
    let placeholder = HomCoring::from_bimodule(a.clone(), bimodule, LinearMap::zeros(dq * dq, dq), LinearMap::zeros(d, dq))?;
    let (q2, _) = placeholder.tensor_square()?;
    let delta = LinearMap::from_images(dq * dq, d * d, |col| {
        let (i, j) = (col / d, col % d);
        let left = t.class_of(&a.alpha_inv().column(i), a.unit());
        let right = t.class_of(a.unit(), &a.alpha_inv().column(j));
        pair(&left, &right)
    });
    let eps = LinearMap::from_images(d, d * d, |col| a.mul_basis(col / d, col % d));
    let comult = t.quotient().descend(&delta, Some(q2.quotient()), "comultiplication")?;
    let counit = t.quotient().descend(&eps, None, "counit")?;
    HomCoring::from_bimodule(a.clone(), placeholder.bimodule, comult, counit)
}

/// The mutually inverse maps `A → A ⊗_B B`, `a ↦ α⁻¹(a) ⊗ 1` and `A ⊗_B B → A`, `a ⊗ b ↦ aφ(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweedlerIdentification<F> {
    pub tensor: BalancedTensor<F>,
    pub phi: LinearMap<F>,
    pub psi: LinearMap<F>,
}

pub fn sweedler_identifications<F: Field>(phi: &AlgebraMorphism<F>) -> Result<SweedlerIdentification<F>> {
    let (a, b) = (&phi.target, &phi.source);
    let (da, db) = (a.dim(), b.dim());
    let tensor = BalancedTensor::new(b, a.alpha(), &right_along(phi), b.alpha(), b.mult())?;
    let forward = LinearMap::from_images(tensor.dim(), da, |i| tensor.class_of(&a.alpha_inv().column(i), b.unit()));
    let back = LinearMap::from_images(da, da * db, |col| a.mul(&unit_vec(da, col / db), &phi.matrix.column(col % db)));
    let psi = tensor.quotient().descend(&back, None, "identification")?;
    Ok(SweedlerIdentification { tensor, phi: forward, psi })
}

/// Extension of an `A`-coring `C` along `φ: A → B` to the `B`-coring `(B ⊗_A C) ⊗_A B`, with
/// `Δ((b ⊗ c) ⊗ b') = ((β⁻¹(b) ⊗ c₁) ⊗ 1) ⊗_B ((1 ⊗ c₂) ⊗ β⁻¹(b'))` and
/// `ε((b ⊗ c) ⊗ b') = (bφ(ε(c)))b'`.
pub fn base_ring_extension<F: Field>(c: &HomCoring<F>, phi: &AlgebraMorphism<F>) -> Result<HomCoring<F>> {
    let (a, b) = (&phi.source, &phi.target);
    if c.base() != a {
        return Err(Error::ShapeMismatch("morphism source is not the coring base".into()));
    }
    let (db, n) = (b.dim(), c.dim());
    let b_over_a = HomBimodule::new(b.alpha().clone(), b.mult().clone(), right_along(phi))?;
    let (t1, t1_bimodule) = tensor_bimodules(b, a, a, &b_over_a, c.bimodule())?;
    let a_over_b = HomBimodule::new(b.alpha().clone(), left_along(phi), b.mult().clone())?;
    let (t, bimodule) = tensor_bimodules(b, a, b, &t1_bimodule, &a_over_b)?;
    let dq = t.dim();
    let placeholder = HomCoring::from_bimodule(b.clone(), bimodule, LinearMap::zeros(dq * dq, dq), LinearMap::zeros(db, dq))?;
    let (q2, _) = placeholder.tensor_square()?;

    // Formulas on the free space B ⊗ C ⊗ B, checked against both layers of relations.
    let triple = db * n * db;
    let delta = LinearMap::from_images(dq * dq, triple, |col| {
        let (x, c_idx, y) = (col / (n * db), (col / db) % n, col % db);
        let mut out = alloc::vec![F::zero(); dq * dq];
        for (idx, coef) in c.delta(&unit_vec(n, c_idx)).terms() {
            let left = t.class_of(&t1.class_of(&b.alpha_inv().column(x), &unit_vec(n, idx[0])), b.unit());
            let right = t.class_of(&t1.class_of(b.unit(), &unit_vec(n, idx[1])), &b.alpha_inv().column(y));
            crate::linalg::axpy(&mut out, coef, &pair(&left, &right));
        }
        out
    });
    let eps = LinearMap::from_images(db, triple, |col| {
        let (x, c_idx, y) = (col / (n * db), (col / db) % n, col % db);
        let e = phi.apply(&c.counit().column(c_idx));
        b.mul(&b.mul(&unit_vec(db, x), &e), &unit_vec(db, y))
    });
    let sec1 = t1.quotient().section();
    let lift_t1 = sec1.kron(&LinearMap::identity(db));
    let mut kernel: Vec<Vec<F>> = Vec::new();
    for r in t1.quotient().relations() {
        for y in 0..db {
            kernel.push(pair(&r, &unit_vec(db, y)));
        }
    }
    for s in t.quotient().relations() {
        kernel.push(lift_t1.apply(&s));
    }
    require_vanishing(&delta, &kernel, Some(q2.quotient()), "comultiplication")?;
    require_vanishing(&eps, &kernel, None, "counit")?;
    let lift = lift_t1.compose(&t.quotient().section());
    let comult = delta.compose(&lift);
    let counit = eps.compose(&lift);
    HomCoring::from_bimodule(b.clone(), placeholder.bimodule, comult, counit)
}
