use alloc::format;
use alloc::vec::Vec;

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::error::{shape, Result};
use crate::field::Field;
use crate::linalg::{invert, unit_vec, LinearMap};
use crate::tensor::{pair, Tensor};

use super::algebra::HomAlgebra;
use super::coalgebra::HomCoalgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A Hom-action. Right actions are maps `M ⊗ A → M`, left actions `A ⊗ M → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action<F> {
    pub side: Side,
    pub map: LinearMap<F>,
}

/// A Hom-coaction. Right coactions are maps `M → M ⊗ C`, left ones `M → C ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction<F> {
    pub side: Side,
    pub map: LinearMap<F>,
}

/// A candidate `(M, μ)` with an optional action and an optional coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleWitness<F> {
    dim: usize,
    mu: LinearMap<F>,
    mu_inv: LinearMap<F>,
    pub action: Option<Action<F>>,
    pub coaction: Option<Coaction<F>>,
}

impl<F: Field> ModuleWitness<F> {
    pub fn new(mu: LinearMap<F>) -> Result<Self> {
        if !mu.is_square() {
            return Err(shape("module automorphism is not square"));
        }
        let mu_inv = invert(&mu)?;
        Ok(ModuleWitness { dim: mu.rows(), mu, mu_inv, action: None, coaction: None })
    }

    pub fn with_action(mut self, side: Side, map: LinearMap<F>) -> Self {
        self.action = Some(Action { side, map });
        self
    }

    pub fn with_coaction(mut self, side: Side, map: LinearMap<F>) -> Self {
        self.coaction = Some(Coaction { side, map });
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu(&self) -> &LinearMap<F> {
        &self.mu
    }

    pub fn mu_inv(&self) -> &LinearMap<F> {
        &self.mu_inv
    }

    /// Action map with the given side, checked against the acting dimension.
    pub fn action_map(&self, side: Side, acting_dim: usize) -> Result<&LinearMap<F>> {
        match &self.action {
            Some(a) if a.side == side => {
                a.map.require_shape(self.dim, self.dim * acting_dim, "action")?;
                Ok(&a.map)
            }
            _ => Err(shape(format!("witness has no {side:?} action"))),
        }
    }

    pub fn coaction_map(&self, side: Side, coacting_dim: usize) -> Result<&LinearMap<F>> {
        match &self.coaction {
            Some(c) if c.side == side => {
                c.map.require_shape(self.dim * coacting_dim, self.dim, "coaction")?;
                Ok(&c.map)
            }
            _ => Err(shape(format!("witness has no {side:?} coaction"))),
        }
    }

    /// `A` acting on itself by multiplication, `μ = α`.
    pub fn regular(a: &HomAlgebra<F>, side: Side) -> Self {
        let map = match side {
            Side::Right | Side::Left => a.mult().clone(),
        };
        Self::new(a.alpha().clone()).expect("α is invertible").with_action(side, map)
    }

    /// `C` coacting on itself by `Δ`, `μ = γ`.
    pub fn coregular(c: &HomCoalgebra<F>, side: Side) -> Self {
        Self::new(c.gamma().clone()).expect("γ is invertible").with_coaction(side, c.comult().clone())
    }
}

/// `m · a` for a right action map.
pub fn act_right<F: Field>(map: &LinearMap<F>, m: &[F], a: &[F]) -> Vec<F> {
    map.apply(&pair(m, a))
}

/// `a · m` for a left action map.
pub fn act_left<F: Field>(map: &LinearMap<F>, a: &[F], m: &[F]) -> Vec<F> {
    map.apply(&pair(a, m))
}

pub(crate) fn right_module_flow<F: Field>(a: &HomAlgebra<F>, dim: usize, mu: &LinearMap<F>, act: &LinearMap<F>) -> Flow<F> {
    let da = a.dim();
    act.require_shape(dim, dim * da, "right action")?;
    mu.require_shape(dim, dim, "module automorphism")?;
    let ab: Vec<Vec<Vec<F>>> = (0..da).map(|i| (0..da).map(|j| a.mul_basis(i, j)).collect()).collect();
    for m in 0..dim {
        let em = unit_vec(dim, m);
        let mu_m = mu.column(m);
        for i in 0..da {
            let ma = act_right(act, &em, &unit_vec(da, i));
            for j in 0..da {
                let lhs = act_right(act, &mu_m, &ab[i][j]);
                let rhs = act_right(act, &ma, &a.alpha().column(j));
                expect_eq("module-hom-associativity", &[m, i, j], lhs, rhs)?;
            }
        }
    }
    for m in 0..dim {
        let lhs = act_right(act, &unit_vec(dim, m), a.unit());
        expect_eq("module-unit", &[m], lhs, mu.column(m))?;
    }
    for m in 0..dim {
        for i in 0..da {
            let lhs = mu.apply(&act_right(act, &unit_vec(dim, m), &unit_vec(da, i)));
            let rhs = act_right(act, &mu.column(m), &a.alpha().column(i));
            expect_eq("module-mu-compatibility", &[m, i], lhs, rhs)?;
        }
    }
    Ok(())
}

pub(crate) fn left_module_flow<F: Field>(a: &HomAlgebra<F>, dim: usize, mu: &LinearMap<F>, act: &LinearMap<F>) -> Flow<F> {
    let da = a.dim();
    act.require_shape(dim, da * dim, "left action")?;
    mu.require_shape(dim, dim, "module automorphism")?;
    for i in 0..da {
        let alpha_a = a.alpha().column(i);
        for j in 0..da {
            let ab = a.mul_basis(i, j);
            for m in 0..dim {
                let bm = act_left(act, &unit_vec(da, j), &unit_vec(dim, m));
                let lhs = act_left(act, &alpha_a, &bm);
                let rhs = act_left(act, &ab, &mu.column(m));
                expect_eq("module-hom-associativity", &[i, j, m], lhs, rhs)?;
            }
        }
    }
    for m in 0..dim {
        let lhs = act_left(act, a.unit(), &unit_vec(dim, m));
        expect_eq("module-unit", &[m], lhs, mu.column(m))?;
    }
    for i in 0..da {
        for m in 0..dim {
            let lhs = mu.apply(&act_left(act, &unit_vec(da, i), &unit_vec(dim, m)));
            let rhs = act_left(act, &a.alpha().column(i), &mu.column(m));
            expect_eq("module-mu-compatibility", &[i, m], lhs, rhs)?;
        }
    }
    Ok(())
}

/// `μ(m)(ab) = (ma)α(b)`, `m1 = μ(m)` and `μ(ma) = μ(m)α(a)` on basis tuples.
pub fn check_right_module<F: Field>(a: &HomAlgebra<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    let act = m.action_map(Side::Right, a.dim())?;
    finish(right_module_flow(a, m.dim, &m.mu, act))
}

/// `α(a)(bm) = (ab)μ(m)`, `1m = μ(m)` and `μ(am) = α(a)μ(m)` on basis tuples.
pub fn check_left_module<F: Field>(a: &HomAlgebra<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    let act = m.action_map(Side::Left, a.dim())?;
    finish(left_module_flow(a, m.dim, &m.mu, act))
}

pub(crate) fn right_comodule_flow<F: Field>(c: &HomCoalgebra<F>, dim: usize, mu: &LinearMap<F>, mu_inv: &LinearMap<F>, rho: &LinearMap<F>) -> Flow<F> {
    let dc = c.dim();
    rho.require_shape(dim * dc, dim, "right coaction")?;
    for m in 0..dim {
        let r = Tensor::new(&[dim, dc], rho.column(m));
        let lhs = r.apply(1, 1, c.counit(), &[1]).into_data();
        expect_eq("comodule-counit", &[m], lhs, mu_inv.column(m))?;
    }
    for m in 0..dim {
        let r = Tensor::new(&[dim, dc], rho.column(m));
        let lhs = r.apply_leg(0, mu_inv).apply(1, 1, c.comult(), &[dc, dc]);
        let rhs = r.apply(0, 1, rho, &[dim, dc]).apply_leg(2, c.gamma_inv());
        expect_eq("comodule-hom-coassociativity", &[m], lhs.into_data(), rhs.into_data())?;
    }
    for m in 0..dim {
        let lhs = rho.apply(&mu.column(m));
        let rhs = Tensor::new(&[dim, dc], rho.column(m)).apply_leg(0, mu).apply_leg(1, c.gamma()).into_data();
        expect_eq("comodule-mu-compatibility", &[m], lhs, rhs)?;
    }
    Ok(())
}

pub(crate) fn left_comodule_flow<F: Field>(c: &HomCoalgebra<F>, dim: usize, mu: &LinearMap<F>, mu_inv: &LinearMap<F>, rho: &LinearMap<F>) -> Flow<F> {
    let dc = c.dim();
    rho.require_shape(dc * dim, dim, "left coaction")?;
    for m in 0..dim {
        let r = Tensor::new(&[dc, dim], rho.column(m));
        let lhs = r.apply(0, 1, c.counit(), &[1]).into_data();
        expect_eq("comodule-counit", &[m], lhs, mu_inv.column(m))?;
    }
    for m in 0..dim {
        let r = Tensor::new(&[dc, dim], rho.column(m));
        let lhs = r.apply(0, 1, c.comult(), &[dc, dc]).apply_leg(2, mu_inv);
        let rhs = r.apply_leg(0, c.gamma_inv()).apply(1, 1, rho, &[dc, dim]);
        expect_eq("comodule-hom-coassociativity", &[m], lhs.into_data(), rhs.into_data())?;
    }
    for m in 0..dim {
        let lhs = rho.apply(&mu.column(m));
        let rhs = Tensor::new(&[dc, dim], rho.column(m)).apply_leg(0, c.gamma()).apply_leg(1, mu).into_data();
        expect_eq("comodule-mu-compatibility", &[m], lhs, rhs)?;
    }
    Ok(())
}

/// Hom-coassociativity `μ⁻¹(m₀) ⊗ Δ(m₁) = m₀₀ ⊗ (m₀₁ ⊗ γ⁻¹(m₁))`, the counit
/// law `m₀ε(m₁) = μ⁻¹(m)` (scalars act through `μ`), and `ρμ = (μ ⊗ γ)ρ`.
pub fn check_right_comodule<F: Field>(c: &HomCoalgebra<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    let rho = m.coaction_map(Side::Right, c.dim())?;
    finish(right_comodule_flow(c, m.dim, &m.mu, &m.mu_inv, rho))
}

/// Mirror image of [`check_right_comodule`] for `ρ: M → C ⊗ M`.
pub fn check_left_comodule<F: Field>(c: &HomCoalgebra<F>, m: &ModuleWitness<F>) -> Result<Verdict<F>> {
    let rho = m.coaction_map(Side::Left, c.dim())?;
    finish(left_comodule_flow(c, m.dim, &m.mu, &m.mu_inv, rho))
}

/// An `(A, B)`-Hom-bimodule: left `A`-action `A ⊗ M → M`, right `B`-action `M ⊗ B → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBimodule<F> {
    dim: usize,
    mu: LinearMap<F>,
    mu_inv: LinearMap<F>,
    left: LinearMap<F>,
    right: LinearMap<F>,
}

impl<F: Field> HomBimodule<F> {
    pub fn new(mu: LinearMap<F>, left: LinearMap<F>, right: LinearMap<F>) -> Result<Self> {
        if !mu.is_square() {
            return Err(shape("bimodule automorphism is not square"));
        }
        let dim = mu.rows();
        if left.rows() != dim || right.rows() != dim || !left.cols().is_multiple_of(dim.max(1)) || !right.cols().is_multiple_of(dim.max(1)) {
            return Err(shape("bimodule actions do not land in the module"));
        }
        let mu_inv = invert(&mu)?;
        Ok(HomBimodule { dim, mu, mu_inv, left, right })
    }

    /// `A` over itself.
    pub fn regular(a: &HomAlgebra<F>) -> Self {
        Self::new(a.alpha().clone(), a.mult().clone(), a.mult().clone()).expect("regular bimodule")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu(&self) -> &LinearMap<F> {
        &self.mu
    }

    pub fn mu_inv(&self) -> &LinearMap<F> {
        &self.mu_inv
    }

    pub fn left(&self) -> &LinearMap<F> {
        &self.left
    }

    pub fn right(&self) -> &LinearMap<F> {
        &self.right
    }

    pub fn act_left(&self, a: &[F], m: &[F]) -> Vec<F> {
        act_left(&self.left, a, m)
    }

    pub fn act_right(&self, m: &[F], a: &[F]) -> Vec<F> {
        act_right(&self.right, m, a)
    }

    pub fn left_witness(&self) -> ModuleWitness<F> {
        ModuleWitness { dim: self.dim, mu: self.mu.clone(), mu_inv: self.mu_inv.clone(), action: None, coaction: None }
            .with_action(Side::Left, self.left.clone())
    }

    pub fn right_witness(&self) -> ModuleWitness<F> {
        ModuleWitness { dim: self.dim, mu: self.mu.clone(), mu_inv: self.mu_inv.clone(), action: None, coaction: None }
            .with_action(Side::Right, self.right.clone())
    }
}

pub(crate) fn bimodule_flow<F: Field>(a: &HomAlgebra<F>, b: &HomAlgebra<F>, m: &HomBimodule<F>) -> Flow<F> {
    left_module_flow(a, m.dim, &m.mu, &m.left)?;
    right_module_flow(b, m.dim, &m.mu, &m.right)?;
    for i in 0..a.dim() {
        for k in 0..m.dim {
            let am = m.act_left(&unit_vec(a.dim(), i), &unit_vec(m.dim, k));
            for j in 0..b.dim() {
                let lhs = m.act_right(&am, &b.alpha().column(j));
                let mb = m.act_right(&unit_vec(m.dim, k), &unit_vec(b.dim(), j));
                let rhs = m.act_left(&a.alpha().column(i), &mb);
                expect_eq("bimodule-compatibility", &[i, k, j], lhs, rhs)?;
            }
        }
    }
    Ok(())
}

/// Both one-sided module checks and `(am)β(b) = α(a)(mb)`.
pub fn check_bimodule<F: Field>(a: &HomAlgebra<F>, b: &HomAlgebra<F>, m: &HomBimodule<F>) -> Result<Verdict<F>> {
    finish(bimodule_flow(a, b, m))
}
