//! Entwined Hom-modules and their translation to comodules over the associated coring.

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{invert, unit_vec, LinearMap};
use crate::structures::balanced::BalancedTensor;
use crate::structures::module::{right_comodule_flow, right_module_flow, ModuleWitness, Side};
use crate::tensor::{pair, Tensor};

use super::{coring_from_entwining, EntwiningStructure};

pub(crate) fn entwined_module_flow<F: Field>(
    e: &EntwiningStructure<F>,
    dim: usize,
    mu: &LinearMap<F>,
    mu_inv: &LinearMap<F>,
    act: &LinearMap<F>,
    rho: &LinearMap<F>,
) -> Flow<F> {
    let (a, c) = (e.algebra(), e.coalgebra());
    let (da, dc) = (a.dim(), c.dim());
    right_module_flow(a, dim, mu, act)?;
    right_comodule_flow(c, dim, mu, mu_inv, rho)?;
    for m in 0..dim {
        let rm = Tensor::new(&[dim, dc], rho.column(m));
        for i in 0..da {
            let lhs = rho.apply(&act.column(m * da + i));
            let rhs = e.entwine(&rm.outer(&Tensor::vector(a.alpha_inv().column(i))), 1).apply(0, 2, act, &[dim]).apply_leg(1, c.gamma()).into_data();
            expect_eq("entwined-compatibility", &[m, i], lhs, rhs)?;
        }
    }
    Ok(())
}

/// Right `A`-module and right `C`-comodule axioms, then
/// `ρ(ma) = m₀α⁻¹(a)_κ ⊗ γ(m₁^κ)` on all basis pairs.
pub fn check_entwined_module<F: Field>(e: &EntwiningStructure<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    let act = m.action_map(Side::Right, e.algebra().dim())?;
    let rho = m.coaction_map(Side::Right, e.coalgebra().dim())?;
    finish(entwined_module_flow(e, m.dim(), m.mu(), m.mu_inv(), act, rho))
}

/// `M ⊗_A (A ⊗ C) ≅ M ⊗ C`, `m ⊗ (a ⊗ c) ↦ μ⁻¹(m)a ⊗ γ(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwinedIdentification<F> {
    pub tensor: BalancedTensor<F>,
    /// From quotient coordinates of `M ⊗_A (A ⊗ C)` to `M ⊗ C`.
    pub phi: LinearMap<F>,
    pub phi_inv: LinearMap<F>,
}

/// Builds the identification for a right `A`-module `M`, failing unless it descends and is invertible.
pub fn identification_map<F: Field>(e: &EntwiningStructure<F>, m: &ModuleWitness<F>) -> Result<EntwinedIdentification<F>> {
    let (a, c) = (e.algebra(), e.coalgebra());
    let (da, dc, dm) = (a.dim(), c.dim(), m.dim());
    let act = m.action_map(Side::Right, da)?;
    let coring = coring_from_entwining(e)?;
    let tensor = BalancedTensor::new(a, m.mu(), act, coring.chi(), coring.left_action())?;
    let ambient = LinearMap::from_images(dm * dc, dm * da * dc, |col| {
        let (x, i, k) = (col / (da * dc), (col / dc) % da, col % dc);
        let ma = act.apply(&pair(&m.mu_inv().column(x), &unit_vec(da, i)));
        pair(&ma, &c.gamma().column(k))
    });
    let phi = tensor.quotient().descend(&ambient, None, "identification map")?;
    if phi.rows() != phi.cols() {
        return Err(Error::NotAutomorphism("identification map is not square".into()));
    }
    let phi_inv = invert(&phi)?;
    Ok(EntwinedIdentification { tensor, phi, phi_inv })
}

/// `ρ(m) = m₀ ⊗ (1 ⊗ γ⁻¹(m₁))`, a lift of the coaction into `M ⊗_A (A ⊗ C)`.
pub fn comodule_from_entwined<F: Field>(e: &EntwiningStructure<F>, m: &ModuleWitness<F>) -> Result<ModuleWitness<F>> {
    let (a, c) = (e.algebra(), e.coalgebra());
    let (da, dc) = (a.dim(), c.dim());
    let act = m.action_map(Side::Right, da)?;
    let rho = m.coaction_map(Side::Right, dc)?;
    let embed = LinearMap::from_images(da * dc, dc, |k| pair(a.unit(), &c.gamma_inv().column(k)));
    let lifted = LinearMap::from_images(m.dim() * da * dc, m.dim(), |x| Tensor::new(&[m.dim(), dc], rho.column(x)).apply_leg(1, &embed).into_data());
    Ok(ModuleWitness::new(m.mu().clone())?.with_action(Side::Right, act.clone()).with_coaction(Side::Right, lifted))
}

/// The `C`-coaction `φ ∘ ρ` of a comodule over the associated coring.
pub fn entwined_from_comodule<F: Field>(e: &EntwiningStructure<F>, w: &ModuleWitness<F>) -> Result<ModuleWitness<F>> {
    let n = e.algebra().dim() * e.coalgebra().dim();
    let act = w.action_map(Side::Right, e.algebra().dim())?;
    let rho = w.coaction_map(Side::Right, n)?;
    let id = identification_map(e, w)?;
    let coaction = id.phi.compose(&id.tensor.quotient().projection()).compose(rho);
    Ok(ModuleWitness::new(w.mu().clone())?.with_action(Side::Right, act.clone()).with_coaction(Side::Right, coaction))
}

/// Coaction classes `M → M ⊗_A (A ⊗ C)` of a coring-comodule witness, for comparing lifts.
pub fn coaction_classes<F: Field>(e: &EntwiningStructure<F>, w: &ModuleWitness<F>) -> Result<LinearMap<F>> {
    let n = e.algebra().dim() * e.coalgebra().dim();
    let rho = w.coaction_map(Side::Right, n)?;
    let id = identification_map(e, w)?;
    Ok(id.tensor.quotient().projection().compose(rho))
}
