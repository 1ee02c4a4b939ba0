//! Alternative Hom-Doi-Koppinen data: a left module algebra and a left comodule coalgebra.

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::entwining::EntwiningStructure;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{invert, LinearMap};
use crate::structures::algebra::HomAlgebra;
use crate::structures::bialgebra::{HomBialgebra, HomHopfAlgebra};
use crate::structures::coalgebra::HomCoalgebra;
use crate::structures::compat::{comodule_coalgebra_flow, module_algebra_flow};
use crate::structures::examples::{adjoint_action, coadjoint_coaction, cyclic_group_hopf, dual_hopf};
use crate::structures::module::{right_comodule_flow, right_module_flow, ModuleWitness, Side};
use crate::structures::twist::yau_twist_hopf;
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternativeDkDatum<F> {
    pub bialgebra: HomBialgebra<F>,
    pub algebra: HomAlgebra<F>,
    /// `B ⊗ A → A`.
    pub action: LinearMap<F>,
    pub coalgebra: HomCoalgebra<F>,
    /// `C → B ⊗ C`.
    pub coaction: LinearMap<F>,
}

impl<F: Field> AlternativeDkDatum<F> {
    pub fn new(bialgebra: HomBialgebra<F>, algebra: HomAlgebra<F>, action: LinearMap<F>, coalgebra: HomCoalgebra<F>, coaction: LinearMap<F>) -> Result<Self> {
        let (db, da, dc) = (bialgebra.dim(), algebra.dim(), coalgebra.dim());
        action.require_shape(da, db * da, "module algebra action")?;
        coaction.require_shape(db * dc, dc, "comodule coalgebra coaction")?;
        Ok(AlternativeDkDatum { bialgebra, algebra, action, coalgebra, coaction })
    }
}

/// The left module algebra and left comodule coalgebra axioms.
pub fn check_alt_dk_datum<F: Field>(d: &AlternativeDkDatum<F>) -> Result<Verdict<F>> {
    finish((|| {
        module_algebra_flow(&d.bialgebra, &d.algebra, &d.action)?;
        comodule_coalgebra_flow(&d.bialgebra, &d.coalgebra, &d.coaction)
    })())
}

/// `ψ(c ⊗ a) = c₋₁ · α⁻¹(a) ⊗ γ(c₀)`.
pub fn entwining_from_alt_dk<F: Field>(d: &AlternativeDkDatum<F>) -> Result<EntwiningStructure<F>> {
    let (da, db, dc) = (d.algebra.dim(), d.bialgebra.dim(), d.coalgebra.dim());
    let psi = LinearMap::from_images(da * dc, dc * da, |col| {
        let (x, i) = (col / da, col % da);
        Tensor::new(&[db, dc], d.coaction.column(x))
            .outer(&Tensor::vector(d.algebra.alpha_inv().column(i)))
            .permute(&[0, 2, 1])
            .apply(0, 2, &d.action, &[da])
            .apply_leg(1, d.coalgebra.gamma())
            .into_data()
    });
    EntwiningStructure::new(d.algebra.clone(), d.coalgebra.clone(), psi)
}

fn alt_dk_module_flow<F: Field>(d: &AlternativeDkDatum<F>, m: &ModuleWitness<F>) -> Flow<F> {
    let (da, db, dc, dm) = (d.algebra.dim(), d.bialgebra.dim(), d.coalgebra.dim(), m.dim());
    let act = m.action_map(Side::Right, da)?;
    let rho = m.coaction_map(Side::Right, dc)?;
    right_module_flow(&d.algebra, dm, m.mu(), act)?;
    right_comodule_flow(&d.coalgebra, dm, m.mu(), m.mu_inv(), rho)?;
    let alpha_m2 = d.algebra.alpha_pow(-2);
    let gamma2 = d.coalgebra.gamma_pow(2);
    for x in 0..dm {
        let rx = Tensor::new(&[dm, dc], rho.column(x)).apply(1, 1, &d.coaction, &[db, dc]);
        for i in 0..da {
            let lhs = rho.apply(&act.column(x * da + i));
            let rhs = rx
                .outer(&Tensor::vector(alpha_m2.column(i)))
                .permute(&[0, 1, 3, 2])
                .apply(1, 2, &d.action, &[da])
                .apply(0, 2, act, &[dm])
                .apply_leg(1, &gamma2)
                .into_data();
            expect_eq("alt-dk-compatibility", &[x, i], lhs, rhs)?;
        }
    }
    Ok(())
}

/// Module and comodule axioms, then `ρ(ma) = m₀(m₁₋₁ · α⁻²(a)) ⊗ γ²(m₁₀)`.
pub fn check_alt_dk_module<F: Field>(d: &AlternativeDkDatum<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    finish(alt_dk_module_flow(d, m))
}

/// `kZ2` acting on itself by `g · g = −g`, with `(kZ2)*` graded by `δ_x ↦ x ⊗ δ_x`.
pub fn sign_z2_alt_dk<F: Field>() -> AlternativeDkDatum<F> {
    let h = cyclic_group_hopf::<F>(2);
    let action = LinearMap::from_fn(2, 4, |r, c| match (c / 2, c % 2) {
        (1, 1) if r == 1 => F::one().neg(),
        (_, a) if r == a => F::one(),
        _ => F::zero(),
    });
    let coalgebra = dual_hopf(&h).coalgebra().clone();
    let coaction = LinearMap::from_fn(4, 2, |r, c| if r == c * 2 + c { F::one() } else { F::zero() });
    AlternativeDkDatum::new(h.bialgebra().clone(), h.algebra().clone(), action, coalgebra, coaction).expect("2-dimensional shapes")
}

/// A classical Hopf algebra twisted along `σ`, acting on its algebra by `σ` after the adjoint action
/// and coacting on its coalgebra by the coadjoint coaction after `σ⁻¹`.
pub fn adjoint_alt_dk<F: Field>(h: &HomHopfAlgebra<F>, twist: &LinearMap<F>) -> Result<AlternativeDkDatum<F>> {
    let t = yau_twist_hopf(h, twist)?;
    let action = twist.compose(&adjoint_action(h));
    let coaction = coadjoint_coaction(h).compose(&invert(twist)?);
    AlternativeDkDatum::new(t.bialgebra().clone(), t.algebra().clone(), action, t.coalgebra().clone(), coaction)
}
