//! `(φ, φ′)`-Hom-Yetter-Drinfeld modules.

use alloc::format;

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::entwining::EntwiningStructure;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{unit_vec, LinearMap};
use crate::structures::bialgebra::{hopf_automorphism_flow, HomHopfAlgebra};
use crate::structures::module::{check_right_comodule, check_right_module, right_comodule_flow, right_module_flow, ModuleWitness, Side};
use crate::tensor::Tensor;

use super::{left_multiplication, DoiKoppinenDatum};

/// A Hom-Hopf algebra with two Hopf automorphisms: `phi` enters as `φ(h₂₂)` and
/// `varphi` as `φ′(S(h₁))` in the compatibility condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAutomorphismPair<F> {
    pub hopf: HomHopfAlgebra<F>,
    pub phi: LinearMap<F>,
    pub varphi: LinearMap<F>,
}

impl<F: Field> HopfAutomorphismPair<F> {
    pub fn new(hopf: HomHopfAlgebra<F>, phi: LinearMap<F>, varphi: LinearMap<F>) -> Result<Self> {
        let d = hopf.dim();
        phi.require_shape(d, d, "phi")?;
        varphi.require_shape(d, d, "varphi")?;
        Ok(HopfAutomorphismPair { hopf, phi, varphi })
    }

    /// `φ = φ′ = id`: plain Hom-Yetter-Drinfeld modules.
    pub fn plain(hopf: HomHopfAlgebra<F>) -> Self {
        let id = LinearMap::identity(hopf.dim());
        HopfAutomorphismPair { hopf, phi: id.clone(), varphi: id }
    }

    /// `φ = id`, `φ′ = S⁻²`: anti-Hom-Yetter-Drinfeld modules. Fails with `SingularMap` unless `S` is invertible.
    pub fn anti(hopf: HomHopfAlgebra<F>) -> Result<Self> {
        let s_inv = hopf.antipode_inv()?;
        let varphi = s_inv.compose(&s_inv);
        let phi = LinearMap::identity(hopf.dim());
        Ok(HopfAutomorphismPair { hopf, phi, varphi })
    }
}

/// Both maps are Hom-Hopf automorphisms.
pub fn check_automorphism_pair<F: Field>(p: &HopfAutomorphismPair<F>) -> Result<Verdict<F>> {
    finish((|| {
        hopf_automorphism_flow(&p.hopf, &p.phi)?;
        hopf_automorphism_flow(&p.hopf, &p.varphi)
    })())
}

/// The datum `[H, H^op ⊗ H, H]` with `ρ(h) = α(h₂₁) ⊗ (α⁻¹(φ′(S(h₁))) ⊗ h₂₂)`
/// and `g · (h ⊗ k) = (hα⁻¹(g))φ(α(k))`.
pub fn yd_datum<F: Field>(p: &HopfAutomorphismPair<F>) -> Result<DoiKoppinenDatum<F>> {
    let h = &p.hopf;
    let (a, c) = (h.algebra(), h.coalgebra());
    let d = h.dim();
    let tilde = h.bialgebra().opposite().tensor(h.bialgebra());
    let twisted_antipode = a.alpha_inv().compose(&p.varphi).compose(h.antipode());
    let coaction = LinearMap::from_images(d * d * d, d, |x| {
        c.delta(&unit_vec(d, x)).apply(1, 1, c.comult(), &[d, d]).apply_leg(0, &twisted_antipode).apply_leg(1, a.alpha()).permute(&[1, 0, 2]).into_data()
    });
    let phi_alpha = p.phi.compose(a.alpha());
    let action = LinearMap::from_images(d, d * d * d, |col| {
        let (g, hk) = (col / (d * d), col % (d * d));
        let (x, k) = (hk / d, hk % d);
        let left = a.mul(&unit_vec(d, x), &a.alpha_inv().column(g));
        a.mul(&left, &phi_alpha.column(k))
    });
    DoiKoppinenDatum::new(tilde, a.clone(), coaction, c.clone(), action)
}

/// `ψ(g ⊗ h) = α²(h₂₁) ⊗ φ′(S(h₁))(α⁻²(g)φ(h₂₂))`, computed directly.
pub fn yetter_drinfeld_entwining<F: Field>(p: &HopfAutomorphismPair<F>) -> Result<EntwiningStructure<F>> {
    let h = &p.hopf;
    let (a, c) = (h.algebra(), h.coalgebra());
    let d = h.dim();
    let varphi_s = p.varphi.compose(h.antipode());
    let alpha2 = a.alpha_pow(2);
    let alpha_m2 = a.alpha_pow(-2);
    let psi = LinearMap::from_images(d * d, d * d, |col| {
        let (g, x) = (col / d, col % d);
        let times_g = left_multiplication(a, &alpha_m2.column(g));
        c.delta(&unit_vec(d, x))
            .apply(1, 1, c.comult(), &[d, d])
            .apply_leg(2, &times_g.compose(&p.phi))
            .apply_leg(0, &varphi_s)
            .permute(&[1, 0, 2])
            .apply(1, 2, a.mult(), &[d])
            .apply_leg(0, &alpha2)
            .into_data()
    });
    EntwiningStructure::new(a.clone(), c.clone(), psi)
}

fn cond_a<F: Field>(p: &HopfAutomorphismPair<F>, m: &ModuleWitness<F>, act: &LinearMap<F>, rho: &LinearMap<F>) -> Flow<F> {
    let h = &p.hopf;
    let (a, c) = (h.algebra(), h.coalgebra());
    let (d, dm) = (h.dim(), m.dim());
    let varphi_s = p.varphi.compose(h.antipode());
    for x in 0..dm {
        let rx = Tensor::new(&[dm, d], rho.column(x));
        for i in 0..d {
            let lhs = rho.apply(&act.column(x * d + i));
            let rhs = rx
                .outer(&c.delta(&unit_vec(d, i)).apply(1, 1, c.comult(), &[d, d]))
                .apply_leg(1, a.alpha_inv())
                .apply_leg(2, &varphi_s)
                .apply_leg(3, a.alpha())
                .apply_leg(4, &p.phi)
                .permute(&[0, 3, 2, 1, 4])
                .apply(3, 2, a.mult(), &[d])
                .apply(2, 2, a.mult(), &[d])
                .apply(0, 2, act, &[dm])
                .into_data();
            expect_eq("yd-compatibility", &[x, i], lhs, rhs)?;
        }
    }
    Ok(())
}

fn cond_b<F: Field>(p: &HopfAutomorphismPair<F>, m: &ModuleWitness<F>, act: &LinearMap<F>, rho: &LinearMap<F>) -> Flow<F> {
    let h = &p.hopf;
    let (a, c) = (h.algebra(), h.coalgebra());
    let (d, dm) = (h.dim(), m.dim());
    let phi_alpha_inv = p.phi.compose(a.alpha_inv());
    for x in 0..dm {
        let rx = Tensor::new(&[dm, d], rho.column(x));
        for i in 0..d {
            let di = c.delta(&unit_vec(d, i));
            let lhs = rx
                .outer(&di)
                .apply_leg(2, a.alpha_inv())
                .apply_leg(3, &phi_alpha_inv)
                .permute(&[0, 2, 1, 3])
                .apply(0, 2, act, &[dm])
                .apply(1, 2, a.mult(), &[d])
                .into_data();
            let rhs = Tensor::vector(unit_vec(dm, x))
                .outer(&di)
                .permute(&[0, 2, 1])
                .apply(0, 2, act, &[dm])
                .apply(0, 1, rho, &[dm, d])
                .apply_leg(2, &p.varphi)
                .permute(&[0, 2, 1])
                .apply(1, 2, a.mult(), &[d])
                .apply_leg(1, a.alpha_inv())
                .into_data();
            expect_eq("yd-equivalent", &[x, i], lhs, rhs)?;
        }
    }
    Ok(())
}

/// Module and comodule axioms, then `ρ(mh) = m₀α(h₂₁) ⊗ φ′(S(h₁))(α⁻¹(m₁)φ(h₂₂))`.
pub fn check_yd_module<F: Field>(p: &HopfAutomorphismPair<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    let d = p.hopf.dim();
    let act = m.action_map(Side::Right, d)?;
    let rho = m.coaction_map(Side::Right, d)?;
    finish((|| {
        right_module_flow(p.hopf.algebra(), m.dim(), m.mu(), act)?;
        right_comodule_flow(p.hopf.coalgebra(), m.dim(), m.mu(), m.mu_inv(), rho)?;
        cond_a(p, m, act, rho)
    })())
}

/// Evaluates the compatibility condition and the equivalent form
/// `m₀α⁻¹(h₁) ⊗ m₁φ(α⁻¹(h₂)) = (mh₂)₀ ⊗ α⁻¹(φ′(h₁)(mh₂)₁)` independently.
///
/// Fails with `PreconditionFailed` unless `m` is a right module and a right comodule.
pub fn check_yd_equivalent_condition<F: Field>(p: &HopfAutomorphismPair<F>, m: &ModuleWitness<F>) -> Result<(Verdict<F>, Verdict<F>)> {
    let d = p.hopf.dim();
    let act = m.action_map(Side::Right, d)?;
    let rho = m.coaction_map(Side::Right, d)?;
    for (what, v) in [("right module", check_right_module(p.hopf.algebra(), m)?), ("right comodule", check_right_comodule(p.hopf.coalgebra(), m)?)] {
        if let Some(violation) = v.violation() {
            return Err(Error::PreconditionFailed(format!("witness is not a {what}: {}", violation.identity)));
        }
    }
    let a = finish(cond_a(p, m, act, rho));
    let b = finish(cond_b(p, m, act, rho));
    Ok((a?, b?))
}
