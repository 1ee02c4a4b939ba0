//! Hom-corings over a monoidal Hom-algebra.
//!
//! A coring is stored on a plain coordinate space `C` with its bimodule
//! actions, a lift `C → C ⊗ C` of the comultiplication and the counit
//! `C → A`. Every identity involving `C ⊗_A C` is compared only after
//! projecting into the balanced tensor.

mod comodule;
mod constructions;
mod dual;

pub use comodule::check_comodule_over_coring;
pub use constructions::{base_ring_extension, sweedler_carrier, sweedler_coring, sweedler_identifications, trivial_coring, SweedlerIdentification};
pub use dual::{dual_algebra, dual_product, DualAlgebra, DualSide};

use alloc::vec::Vec;

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::error::{shape, Result};
use crate::field::Field;
use crate::linalg::{unit_vec, LinearMap};
use crate::structures::algebra::HomAlgebra;
use crate::structures::balanced::{induced_bimodule, BalancedTensor};
use crate::structures::module::{bimodule_flow, HomBimodule};
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoring<F> {
    base: HomAlgebra<F>,
    bimodule: HomBimodule<F>,
    comult: LinearMap<F>,
    counit: LinearMap<F>,
}

impl<F: Field> HomCoring<F> {
    /// `chi` is the automorphism of `C`; `left: A ⊗ C → C`, `right: C ⊗ A → C`,
    /// `comult: C → C ⊗ C` (any lift of `Δ`) and `counit: C → A`.
    pub fn new(base: HomAlgebra<F>, chi: LinearMap<F>, left: LinearMap<F>, right: LinearMap<F>, comult: LinearMap<F>, counit: LinearMap<F>) -> Result<Self> {
        let n = chi.rows();
        let da = base.dim();
        chi.require_shape(n, n, "coring automorphism")?;
        left.require_shape(n, da * n, "left action")?;
        right.require_shape(n, n * da, "right action")?;
        let bimodule = HomBimodule::new(chi, left, right)?;
        Self::from_bimodule(base, bimodule, comult, counit)
    }

    pub fn from_bimodule(base: HomAlgebra<F>, bimodule: HomBimodule<F>, comult: LinearMap<F>, counit: LinearMap<F>) -> Result<Self> {
        let (n, da) = (bimodule.dim(), base.dim());
        if bimodule.left().cols() != da * n || bimodule.right().cols() != n * da {
            return Err(shape("bimodule actions do not match the base algebra"));
        }
        comult.require_shape(n * n, n, "comultiplication")?;
        counit.require_shape(da, n, "counit")?;
        Ok(HomCoring { base, bimodule, comult, counit })
    }

    pub fn base(&self) -> &HomAlgebra<F> {
        &self.base
    }

    /// Dimension of the carrier `C`.
    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    pub fn chi(&self) -> &LinearMap<F> {
        self.bimodule.mu()
    }

    pub fn chi_inv(&self) -> &LinearMap<F> {
        self.bimodule.mu_inv()
    }

    pub fn bimodule(&self) -> &HomBimodule<F> {
        &self.bimodule
    }

    pub fn left_action(&self) -> &LinearMap<F> {
        self.bimodule.left()
    }

    pub fn right_action(&self) -> &LinearMap<F> {
        self.bimodule.right()
    }

    pub fn comult_lift(&self) -> &LinearMap<F> {
        &self.comult
    }

    pub fn counit(&self) -> &LinearMap<F> {
        &self.counit
    }

    /// `Δ(c)` in the lift, as a two-leg tensor.
    pub fn delta(&self, c: &[F]) -> Tensor<F> {
        let n = self.dim();
        Tensor::new(&[n, n], self.comult.apply(c))
    }

    /// `C ⊗_A C` with its induced bimodule structure.
    pub fn tensor_square(&self) -> Result<(BalancedTensor<F>, HomBimodule<F>)> {
        let b = &self.bimodule;
        let t = BalancedTensor::new(&self.base, b.mu(), b.right(), b.mu(), b.left())?;
        let m = induced_bimodule(&self.base, &self.base, &t, b, b)?;
        Ok((t, m))
    }

    /// `x ↦ a·x` as a matrix on `C`.
    pub fn left_multiplication(&self, a: &[F]) -> LinearMap<F> {
        let n = self.dim();
        LinearMap::from_images(n, n, |x| self.bimodule.act_left(a, &unit_vec(n, x)))
    }

    /// `x ↦ x·a` as a matrix on `C`.
    pub fn right_multiplication(&self, a: &[F]) -> LinearMap<F> {
        let n = self.dim();
        LinearMap::from_images(n, n, |x| self.bimodule.act_right(&unit_vec(n, x), a))
    }
}

pub(crate) fn coring_flow<F: Field>(c: &HomCoring<F>) -> Flow<F> {
    let a = &c.base;
    let (n, da) = (c.dim(), a.dim());
    bimodule_flow(a, a, &c.bimodule)?;
    let (chi, chi_inv, eps) = (c.chi(), c.chi_inv(), &c.counit);
    for x in 0..n {
        let lhs = eps.apply(&chi.column(x));
        let rhs = a.alpha().apply(&eps.column(x));
        expect_eq("counit-chi", &[x], lhs, rhs)?;
    }
    for i in 0..da {
        for x in 0..n {
            let lhs = eps.apply(&c.left_action().column(i * n + x));
            let rhs = a.mul(&unit_vec(da, i), &eps.column(x));
            expect_eq("counit-left-linear", &[i, x], lhs, rhs)?;
            let lhs = eps.apply(&c.right_action().column(x * da + i));
            let rhs = a.mul(&eps.column(x), &unit_vec(da, i));
            expect_eq("counit-right-linear", &[x, i], lhs, rhs)?;
        }
    }
    let (q2, q2_bimodule) = c.tensor_square()?;
    let deltas: Vec<Tensor<F>> = (0..n).map(|x| c.delta(&unit_vec(n, x))).collect();
    for x in 0..n {
        let lhs = q2.project(&c.comult.apply(&chi.column(x)));
        let rhs = q2.project(deltas[x].apply_leg(0, chi).apply_leg(1, chi).data());
        expect_eq("comult-chi", &[x], lhs, rhs)?;
    }
    for i in 0..da {
        let a_inv = a.alpha_inv().column(i);
        let (l, r) = (c.left_multiplication(&a_inv), c.right_multiplication(&a_inv));
        for x in 0..n {
            let lhs = q2.project(&c.comult.apply(&c.left_action().column(i * n + x)));
            let rhs = q2.project(deltas[x].apply_leg(0, &l).apply_leg(1, chi).data());
            expect_eq("comult-left-linear", &[i, x], lhs, rhs)?;
            let lhs = q2.project(&c.comult.apply(&c.right_action().column(x * da + i)));
            let rhs = q2.project(deltas[x].apply_leg(0, chi).apply_leg(1, &r).data());
            expect_eq("comult-right-linear", &[x, i], lhs, rhs)?;
        }
    }
    for x in 0..n {
        let e = unit_vec(n, x);
        let lhs = deltas[x].apply_leg(0, eps).apply(0, 2, c.left_action(), &[n]).into_data();
        expect_eq("counit-law-left", &[x], lhs, e.clone())?;
        let rhs = deltas[x].apply_leg(1, eps).apply(0, 2, c.right_action(), &[n]).into_data();
        expect_eq("counit-law-right", &[x], rhs, e)?;
    }
    let q3 = BalancedTensor::new(a, chi, c.right_action(), q2.mu(), q2_bimodule.left())?;
    let proj2 = q2.quotient().projection();
    let d2 = q2.dim();
    for x in 0..n {
        let lhs = deltas[x].apply(1, 1, &c.comult, &[n, n]).apply(1, 2, &proj2, &[d2]);
        let rhs = deltas[x].apply(0, 1, &c.comult, &[n, n]).apply_leg(0, chi).apply_leg(2, chi_inv).apply(1, 2, &proj2, &[d2]);
        expect_eq("hom-coassociativity", &[x], q3.project(lhs.data()), q3.project(rhs.data()))?;
    }
    Ok(())
}

/// Bimodule axioms, `ε_C` and `Δ_C` commuting with the automorphisms and
/// `A`-bilinear, the counit laws `ε(c₁)c₂ = c = c₁ε(c₂)`, and
/// Hom-coassociativity `c₁ ⊗ Δ(c₂) = χ(c₁₁) ⊗ (c₁₂ ⊗ χ⁻¹(c₂))` in `C ⊗_A (C ⊗_A C)`.
pub fn check_coring<F: Field>(c: &HomCoring<F>) -> Result<Verdict<F>> {
    finish(coring_flow(c))
}

pub(crate) fn coring_morphism_flow<F: Field>(c: &HomCoring<F>, d: &HomCoring<F>, f: &LinearMap<F>) -> Flow<F> {
    let (n, m, da) = (c.dim(), d.dim(), c.base.dim());
    if c.base != d.base {
        return Err(shape("corings over different base algebras").into());
    }
    f.require_shape(m, n, "coring morphism")?;
    expect_eq("morphism-chi", &[], f.compose(c.chi()).into_data(), d.chi().compose(f).into_data())?;
    for i in 0..da {
        for x in 0..n {
            let lhs = f.apply(&c.left_action().column(i * n + x));
            let rhs = d.bimodule.act_left(&unit_vec(da, i), &f.column(x));
            expect_eq("morphism-left-linear", &[i, x], lhs, rhs)?;
            let lhs = f.apply(&c.right_action().column(x * da + i));
            let rhs = d.bimodule.act_right(&f.column(x), &unit_vec(da, i));
            expect_eq("morphism-right-linear", &[x, i], lhs, rhs)?;
        }
    }
    expect_eq("morphism-counit", &[], d.counit.compose(f).into_data(), c.counit.data().to_vec())?;
    let (q2, _) = d.tensor_square()?;
    for x in 0..n {
        let lhs = q2.project(&d.comult.apply(&f.column(x)));
        let rhs = q2.project(c.delta(&unit_vec(n, x)).apply_leg(0, f).apply_leg(1, f).data());
        expect_eq("morphism-comult", &[x], lhs, rhs)?;
    }
    Ok(())
}

/// A bimodule map `f: C → D` with `fχ = χ'f`, `ε_D f = ε_C` and `Δ_D f = (f ⊗ f)Δ_C`.
pub fn check_coring_morphism<F: Field>(c: &HomCoring<F>, d: &HomCoring<F>, f: &LinearMap<F>) -> Result<Verdict<F>> {
    finish(coring_morphism_flow(c, d, f))
}
