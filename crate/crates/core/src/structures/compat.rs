//! Module and comodule structures that respect an algebra or coalgebra structure.

use alloc::vec;

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{scale_vec, unit_vec, LinearMap};
use crate::tensor::{pair, Tensor};

use super::algebra::{hom_algebra_flow, HomAlgebra};
use super::bialgebra::{mul_tensor, HomBialgebra};
use super::coalgebra::{hom_coalgebra_flow, HomCoalgebra};
use super::module::{left_comodule_flow, left_module_flow, right_comodule_flow, right_module_flow};

pub(crate) fn comodule_algebra_flow<F: Field>(b: &HomBialgebra<F>, a: &HomAlgebra<F>, rho: &LinearMap<F>) -> Flow<F> {
    let (da, db) = (a.dim(), b.dim());
    hom_algebra_flow(a)?;
    right_comodule_flow(b.coalgebra(), da, a.alpha(), a.alpha_inv(), rho)?;
    let images: alloc::vec::Vec<Tensor<F>> = (0..da).map(|i| Tensor::new(&[da, db], rho.column(i))).collect();
    for i in 0..da {
        for j in 0..da {
            let lhs = rho.apply(&a.mul_basis(i, j));
            let rhs = mul_tensor(a, b.algebra(), &images[i], &images[j]).into_data();
            expect_eq("coaction-multiplicative", &[i, j], lhs, rhs)?;
        }
    }
    expect_eq("coaction-unit", &[], rho.apply(a.unit()), pair(a.unit(), b.algebra().unit()))
}

/// `(A, α)` is a right `(B, β)`-Hom-comodule algebra: `ρ(aa') = a₀a'₀ ⊗ a₁a'₁`
/// and `ρ(1) = 1 ⊗ 1`, on top of the algebra and comodule axioms.
pub fn check_comodule_algebra<F: Field>(b: &HomBialgebra<F>, a: &HomAlgebra<F>, coaction: &LinearMap<F>) -> Result<Verdict<F>> {
    finish(comodule_algebra_flow(b, a, coaction))
}

pub(crate) fn module_coalgebra_flow<F: Field>(b: &HomBialgebra<F>, c: &HomCoalgebra<F>, act: &LinearMap<F>) -> Flow<F> {
    let (dc, db) = (c.dim(), b.dim());
    hom_coalgebra_flow(c)?;
    right_module_flow(b.algebra(), dc, c.gamma(), act)?;
    for i in 0..dc {
        let dci = c.delta(&unit_vec(dc, i));
        for j in 0..db {
            let lhs = c.comult().apply(&act.column(i * db + j));
            let rhs = dci.outer(&b.coalgebra().delta(&unit_vec(db, j))).permute(&[0, 2, 1, 3]).apply(0, 2, act, &[dc]).apply(1, 2, act, &[dc]).into_data();
            expect_eq("action-comultiplicative", &[i, j], lhs, rhs)?;
            let lhs = c.eps(&act.column(i * db + j));
            let rhs = c.counit().get(0, i).mul_ref(b.coalgebra().counit().get(0, j));
            expect_eq("action-counit", &[i, j], vec![lhs], vec![rhs])?;
        }
    }
    Ok(())
}

/// `(C, γ)` is a right `(B, β)`-Hom-module coalgebra: `Δ(cb) = c₁b₁ ⊗ c₂b₂`
/// and `ε(cb) = ε(c)ε(b)`, on top of the coalgebra and module axioms.
pub fn check_module_coalgebra<F: Field>(b: &HomBialgebra<F>, c: &HomCoalgebra<F>, action: &LinearMap<F>) -> Result<Verdict<F>> {
    finish(module_coalgebra_flow(b, c, action))
}

pub(crate) fn module_algebra_flow<F: Field>(b: &HomBialgebra<F>, a: &HomAlgebra<F>, act: &LinearMap<F>) -> Flow<F> {
    let (da, db) = (a.dim(), b.dim());
    hom_algebra_flow(a)?;
    left_module_flow(b.algebra(), da, a.alpha(), act)?;
    for k in 0..db {
        let dk = b.coalgebra().delta(&unit_vec(db, k));
        for i in 0..da {
            for j in 0..da {
                let lhs = act.apply(&pair(&unit_vec(db, k), &a.mul_basis(i, j)));
                let rhs = dk
                    .outer(&Tensor::basis(&[da, da], &[i, j]))
                    .permute(&[0, 2, 1, 3])
                    .apply(0, 2, act, &[da])
                    .apply(1, 2, act, &[da])
                    .apply(0, 2, a.mult(), &[da])
                    .into_data();
                expect_eq("action-multiplicative", &[k, i, j], lhs, rhs)?;
            }
        }
        let lhs = act.apply(&pair(&unit_vec(db, k), a.unit()));
        let rhs = scale_vec(b.coalgebra().counit().get(0, k), a.unit());
        expect_eq("action-unit", &[k], lhs, rhs)?;
    }
    Ok(())
}

/// `(A, α)` is a left `(B, β)`-Hom-module algebra: `b·(aa') = (b₁·a)(b₂·a')`
/// and `b·1 = ε(b)1`, on top of the algebra and module axioms.
pub fn check_module_algebra<F: Field>(b: &HomBialgebra<F>, a: &HomAlgebra<F>, action: &LinearMap<F>) -> Result<Verdict<F>> {
    finish(module_algebra_flow(b, a, action))
}

pub(crate) fn comodule_coalgebra_flow<F: Field>(b: &HomBialgebra<F>, c: &HomCoalgebra<F>, rho: &LinearMap<F>) -> Flow<F> {
    let (dc, db) = (c.dim(), b.dim());
    hom_coalgebra_flow(c)?;
    left_comodule_flow(b.coalgebra(), dc, c.gamma(), c.gamma_inv(), rho)?;
    for i in 0..dc {
        let r = Tensor::new(&[db, dc], rho.column(i));
        let lhs = r.apply(1, 1, c.comult(), &[dc, dc]).into_data();
        let rhs = c
            .delta(&unit_vec(dc, i))
            .apply(0, 1, rho, &[db, dc])
            .apply(2, 1, rho, &[db, dc])
            .permute(&[0, 2, 1, 3])
            .apply(0, 2, b.algebra().mult(), &[db])
            .into_data();
        expect_eq("coaction-comultiplicative", &[i], lhs, rhs)?;
        let lhs = r.apply(1, 1, c.counit(), &[1]).into_data();
        let rhs = scale_vec(c.counit().get(0, i), b.algebra().unit());
        expect_eq("coaction-counit", &[i], lhs, rhs)?;
    }
    Ok(())
}

/// `(C, γ)` is a left `(B, β)`-Hom-comodule coalgebra:
/// `c₍₋₁₎ ⊗ c₍₀₎₁ ⊗ c₍₀₎₂ = c₁₍₋₁₎c₂₍₋₁₎ ⊗ c₁₍₀₎ ⊗ c₂₍₀₎` and `c₍₋₁₎ε(c₍₀₎) = ε(c)1`.
pub fn check_comodule_coalgebra<F: Field>(b: &HomBialgebra<F>, c: &HomCoalgebra<F>, coaction: &LinearMap<F>) -> Result<Verdict<F>> {
    finish(comodule_coalgebra_flow(b, c, coaction))
}
