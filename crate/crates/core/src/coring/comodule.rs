//! Right comodules over a Hom-coring.

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{unit_vec, LinearMap};
use crate::structures::balanced::BalancedTensor;
use crate::structures::module::{right_module_flow, ModuleWitness, Side};
use crate::tensor::Tensor;

use super::HomCoring;

pub(crate) fn coring_comodule_flow<F: Field>(c: &HomCoring<F>, dim: usize, mu: &LinearMap<F>, act: &LinearMap<F>, rho: &LinearMap<F>) -> Flow<F> {
    let a = c.base();
    let (n, da) = (c.dim(), a.dim());
    rho.require_shape(dim * n, dim, "coring coaction")?;
    right_module_flow(a, dim, mu, act)?;
    let rhos: alloc::vec::Vec<Tensor<F>> = (0..dim).map(|m| Tensor::new(&[dim, n], rho.column(m))).collect();
    for m in 0..dim {
        let lhs = rhos[m].apply_leg(1, c.counit()).apply(0, 2, act, &[dim]).into_data();
        expect_eq("comodule-counit", &[m], lhs, unit_vec(dim, m))?;
    }
    let mc = BalancedTensor::new(a, mu, act, c.chi(), c.left_action())?;
    for m in 0..dim {
        let lhs = mc.project(&rho.apply(&mu.column(m)));
        let rhs = mc.project(rhos[m].apply_leg(0, mu).apply_leg(1, c.chi()).data());
        expect_eq("comodule-mu-compatibility", &[m], lhs, rhs)?;
    }
    for i in 0..da {
        let r = c.right_multiplication(&a.alpha_inv().column(i));
        for m in 0..dim {
            let lhs = mc.project(&rho.apply(&act.column(m * da + i)));
            let rhs = mc.project(rhos[m].apply_leg(0, mu).apply_leg(1, &r).data());
            expect_eq("comodule-right-linear", &[m, i], lhs, rhs)?;
        }
    }
    let (q2, q2_bimodule) = c.tensor_square()?;
    let q3 = BalancedTensor::new(a, mu, act, q2.mu(), q2_bimodule.left())?;
    let proj2 = q2.quotient().projection();
    let d2 = q2.dim();
    for m in 0..dim {
        let lhs = rhos[m].apply(1, 1, c.comult_lift(), &[n, n]).apply(1, 2, &proj2, &[d2]);
        let rhs = rhos[m].apply(0, 1, rho, &[dim, n]).apply_leg(0, mu).apply_leg(2, c.chi_inv()).apply(1, 2, &proj2, &[d2]);
        expect_eq("comodule-hom-coassociativity", &[m], q3.project(lhs.data()), q3.project(rhs.data()))?;
    }
    Ok(())
}

/// A right `A`-module `M` with a coaction lift `M → M ⊗ C`: the module axioms,
/// `m₀ε(m₁) = m`, `ρμ = (μ ⊗ χ)ρ`, `ρ(ma) = μ(m₀) ⊗ m₁α⁻¹(a)` and
/// `m₀ ⊗ Δ(m₁) = μ(m₀₀) ⊗ (m₀₁ ⊗ χ⁻¹(m₁))`, all compared in `M ⊗_A C` or `M ⊗_A (C ⊗_A C)`.
pub fn check_comodule_over_coring<F: Field>(c: &HomCoring<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    let act = m.action_map(Side::Right, c.base().dim())?;
    let rho = m.coaction_map(Side::Right, c.dim())?;
    finish(coring_comodule_flow(c, m.dim(), m.mu(), act, rho))
}
