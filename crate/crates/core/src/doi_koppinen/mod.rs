//! Hom-Doi-Koppinen data, alternative data, and the Hopf-type modules they specialize to.

mod alternative;
mod specialized;
mod yetter_drinfeld;

pub use alternative::{adjoint_alt_dk, check_alt_dk_datum, check_alt_dk_module, entwining_from_alt_dk, sign_z2_alt_dk, AlternativeDkDatum};
pub use specialized::{alt_dk_right_action, dual_relative_right_action, long_right_action, relative_right_action, yd_right_action};
pub use yetter_drinfeld::{check_automorphism_pair, check_yd_equivalent_condition, check_yd_module, yd_datum, yetter_drinfeld_entwining, HopfAutomorphismPair};

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::entwining::EntwiningStructure;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{unit_vec, LinearMap};
use crate::structures::algebra::HomAlgebra;
use crate::structures::bialgebra::HomBialgebra;
use crate::structures::coalgebra::HomCoalgebra;
use crate::structures::compat::{comodule_algebra_flow, module_coalgebra_flow};
use crate::structures::module::{right_comodule_flow, right_module_flow, ModuleWitness, Side};
use crate::tensor::Tensor;

/// `(B, β)`, a right `B`-comodule algebra `(A, α)` and a right `B`-module coalgebra `(C, γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoiKoppinenDatum<F> {
    pub bialgebra: HomBialgebra<F>,
    pub algebra: HomAlgebra<F>,
    /// `A → A ⊗ B`.
    pub coaction: LinearMap<F>,
    pub coalgebra: HomCoalgebra<F>,
    /// `C ⊗ B → C`.
    pub action: LinearMap<F>,
}

impl<F: Field> DoiKoppinenDatum<F> {
    pub fn new(bialgebra: HomBialgebra<F>, algebra: HomAlgebra<F>, coaction: LinearMap<F>, coalgebra: HomCoalgebra<F>, action: LinearMap<F>) -> Result<Self> {
        let (db, da, dc) = (bialgebra.dim(), algebra.dim(), coalgebra.dim());
        coaction.require_shape(da * db, da, "comodule algebra coaction")?;
        action.require_shape(dc, dc * db, "module coalgebra action")?;
        Ok(DoiKoppinenDatum { bialgebra, algebra, coaction, coalgebra, action })
    }
}

/// The comodule algebra and module coalgebra axioms.
pub fn check_dk_datum<F: Field>(d: &DoiKoppinenDatum<F>) -> Result<Verdict<F>> {
    finish((|| {
        comodule_algebra_flow(&d.bialgebra, &d.algebra, &d.coaction)?;
        module_coalgebra_flow(&d.bialgebra, &d.coalgebra, &d.action)
    })())
}

/// `ψ(c ⊗ a) = α(a₀) ⊗ γ⁻¹(c)a₁`.
pub fn entwining_from_dk<F: Field>(d: &DoiKoppinenDatum<F>) -> Result<EntwiningStructure<F>> {
    let (da, db, dc) = (d.algebra.dim(), d.bialgebra.dim(), d.coalgebra.dim());
    let psi = LinearMap::from_images(da * dc, dc * da, |col| {
        let (x, i) = (col / da, col % da);
        Tensor::new(&[da, db], d.coaction.column(i))
            .apply_leg(0, d.algebra.alpha())
            .outer(&Tensor::vector(d.coalgebra.gamma_inv().column(x)))
            .permute(&[0, 2, 1])
            .apply(1, 2, &d.action, &[dc])
            .into_data()
    });
    EntwiningStructure::new(d.algebra.clone(), d.coalgebra.clone(), psi)
}

fn dk_module_flow<F: Field>(d: &DoiKoppinenDatum<F>, m: &ModuleWitness<F>) -> Flow<F> {
    let (da, db, dc, dm) = (d.algebra.dim(), d.bialgebra.dim(), d.coalgebra.dim(), m.dim());
    let act = m.action_map(Side::Right, da)?;
    let rho = m.coaction_map(Side::Right, dc)?;
    right_module_flow(&d.algebra, dm, m.mu(), act)?;
    right_comodule_flow(&d.coalgebra, dm, m.mu(), m.mu_inv(), rho)?;
    for x in 0..dm {
        let rx = Tensor::new(&[dm, dc], rho.column(x));
        for i in 0..da {
            let lhs = rho.apply(&act.column(x * da + i));
            let rhs = rx
                .outer(&Tensor::new(&[da, db], d.coaction.column(i)))
                .permute(&[0, 2, 1, 3])
                .apply(0, 2, act, &[dm])
                .apply(1, 2, &d.action, &[dc])
                .into_data();
            expect_eq("dk-compatibility", &[x, i], lhs, rhs)?;
        }
    }
    Ok(())
}

/// Module and comodule axioms, then `ρ(ma) = m₀a₀ ⊗ m₁a₁`.
pub fn check_dk_module<F: Field>(d: &DoiKoppinenDatum<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    finish(dk_module_flow(d, m))
}

/// The datum `[A, B, B]` with `B` acting on itself by multiplication.
pub fn relative_datum<F: Field>(b: &HomBialgebra<F>, a: &HomAlgebra<F>, coaction: &LinearMap<F>) -> Result<DoiKoppinenDatum<F>> {
    DoiKoppinenDatum::new(b.clone(), a.clone(), coaction.clone(), b.coalgebra().clone(), b.algebra().mult().clone())
}

/// `ψ(b ⊗ a) = α(a₀) ⊗ β⁻¹(b)a₁`.
pub fn relative_entwining<F: Field>(b: &HomBialgebra<F>, a: &HomAlgebra<F>, coaction: &LinearMap<F>) -> Result<EntwiningStructure<F>> {
    entwining_from_dk(&relative_datum(b, a, coaction)?)
}

/// The datum `[A, A, C]` with `A` coacting on itself by `Δ`.
pub fn dual_relative_datum<F: Field>(a: &HomBialgebra<F>, c: &HomCoalgebra<F>, action: &LinearMap<F>) -> Result<DoiKoppinenDatum<F>> {
    DoiKoppinenDatum::new(a.clone(), a.algebra().clone(), a.coalgebra().comult().clone(), c.clone(), action.clone())
}

/// `ψ(c ⊗ a) = α(a₁) ⊗ γ⁻¹(c)a₂`.
pub fn dual_relative_entwining<F: Field>(a: &HomBialgebra<F>, c: &HomCoalgebra<F>, action: &LinearMap<F>) -> Result<EntwiningStructure<F>> {
    entwining_from_dk(&dual_relative_datum(a, c, action)?)
}

/// `g · h = α(g)ε(h)`.
pub fn trivial_action<F: Field>(h: &HomBialgebra<F>) -> LinearMap<F> {
    h.alpha().kron(h.coalgebra().counit())
}

/// The datum `[H, H, H]` with coaction `Δ` and the trivial action.
pub fn long_datum<F: Field>(h: &HomBialgebra<F>) -> Result<DoiKoppinenDatum<F>> {
    DoiKoppinenDatum::new(h.clone(), h.algebra().clone(), h.coalgebra().comult().clone(), h.coalgebra().clone(), trivial_action(h))
}

/// The flip `g ⊗ h ↦ h ⊗ g`.
pub fn long_entwining<F: Field>(h: &HomBialgebra<F>) -> EntwiningStructure<F> {
    EntwiningStructure::flip(h.algebra().clone(), h.coalgebra().clone())
}

fn long_module_flow<F: Field>(h: &HomBialgebra<F>, m: &ModuleWitness<F>) -> Flow<F> {
    let (d, dm) = (h.dim(), m.dim());
    let act = m.action_map(Side::Right, d)?;
    let rho = m.coaction_map(Side::Right, d)?;
    right_module_flow(h.algebra(), dm, m.mu(), act)?;
    right_comodule_flow(h.coalgebra(), dm, m.mu(), m.mu_inv(), rho)?;
    let alpha_inv = h.algebra().alpha_inv();
    for x in 0..dm {
        let rx = Tensor::new(&[dm, d], rho.column(x));
        for i in 0..d {
            let lhs = rho.apply(&act.column(x * d + i));
            let rhs = rx.outer(&Tensor::vector(alpha_inv.column(i))).permute(&[0, 2, 1]).apply(0, 2, act, &[dm]).apply_leg(1, h.alpha()).into_data();
            expect_eq("long-compatibility", &[x, i], lhs, rhs)?;
        }
    }
    Ok(())
}

/// Module and comodule axioms, then `ρ(mh) = m₀α⁻¹(h) ⊗ α(m₁)`.
pub fn check_long_module<F: Field>(h: &HomBialgebra<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    finish(long_module_flow(h, m))
}

pub(crate) fn left_multiplication<F: Field>(a: &HomAlgebra<F>, x: &[F]) -> LinearMap<F> {
    let d = a.dim();
    LinearMap::from_images(d, d, |j| a.mul(x, &unit_vec(d, j)))
}
