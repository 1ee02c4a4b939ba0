use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::error::{shape, Result};
use crate::field::Field;
use crate::linalg::{invert, unit_vec, LinearMap};
use crate::tensor::Tensor;

/// A monoidal Hom-coalgebra `(C, γ)`.
///
/// `comult` is the map `C → C ⊗ C`; the coefficient of `e_j ⊗ e_k` in
/// `Δ(e_i)` is `comult[j * dim + k, i]`. `counit` is a `1 × dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra<F> {
    dim: usize,
    comult: LinearMap<F>,
    counit: LinearMap<F>,
    gamma: LinearMap<F>,
    gamma_inv: LinearMap<F>,
}

impl<F: Field> HomCoalgebra<F> {
    pub fn new(comult: LinearMap<F>, counit: Vec<F>, gamma: LinearMap<F>) -> Result<Self> {
        let dim = counit.len();
        comult.require_shape(dim * dim, dim, "comultiplication")?;
        gamma.require_shape(dim, dim, "coalgebra automorphism")?;
        let gamma_inv = invert(&gamma)?;
        let counit = LinearMap::from_vec(1, dim, counit)?;
        Ok(HomCoalgebra { dim, comult, counit, gamma, gamma_inv })
    }

    /// From a table `t[i][j][k]` = coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    pub fn from_table(table: &[Vec<Vec<F>>], counit: Vec<F>, gamma: LinearMap<F>) -> Result<Self> {
        let d = counit.len();
        if table.len() != d || table.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(shape(format!("comultiplication table is not {d}x{d}x{d}")));
        }
        let comult = LinearMap::from_fn(d * d, d, |r, i| table[i][r / d][r % d].clone());
        Self::new(comult, counit, gamma)
    }

    /// The ground field as a Hom-coalgebra.
    pub fn ground() -> Self {
        Self::new(LinearMap::identity(1), vec![F::one()], LinearMap::identity(1)).expect("ground coalgebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &LinearMap<F> {
        &self.comult
    }

    pub fn counit(&self) -> &LinearMap<F> {
        &self.counit
    }

    pub fn gamma(&self) -> &LinearMap<F> {
        &self.gamma
    }

    pub fn gamma_inv(&self) -> &LinearMap<F> {
        &self.gamma_inv
    }

    pub fn gamma_pow(&self, n: i32) -> LinearMap<F> {
        let base = if n >= 0 { &self.gamma } else { &self.gamma_inv };
        let mut out = LinearMap::identity(self.dim);
        for _ in 0..n.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    /// `Δ(c)` as a two-leg tensor.
    pub fn delta(&self, c: &[F]) -> Tensor<F> {
        Tensor::new(&[self.dim, self.dim], self.comult.apply(c))
    }

    pub fn eps(&self, c: &[F]) -> F {
        self.counit.apply(c).pop().expect("counit is a covector")
    }

    /// `C ⊗ C` with the tensor factors swapped in `Δ`.
    pub fn coopposite(&self) -> Self {
        let flip = crate::tensor::flip_map(self.dim, self.dim);
        HomCoalgebra {
            dim: self.dim,
            comult: flip.compose(&self.comult),
            counit: self.counit.clone(),
            gamma: self.gamma.clone(),
            gamma_inv: self.gamma_inv.clone(),
        }
    }

    /// `C ⊗ D` with `Δ(c ⊗ d) = (c₁ ⊗ d₁) ⊗ (c₂ ⊗ d₂)`.
    pub fn tensor(&self, other: &HomCoalgebra<F>) -> Self {
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 * d2;
        let comult = LinearMap::from_images(d * d, d, |col| {
            let (i, j) = (col / d2, col % d2);
            let t = self.delta(&unit_vec(d1, i)).outer(&other.delta(&unit_vec(d2, j)));
            t.permute(&[0, 2, 1, 3]).into_data()
        });
        let counit = self.counit.kron(&other.counit);
        HomCoalgebra { dim: d, comult, counit, gamma: self.gamma.kron(&other.gamma), gamma_inv: self.gamma_inv.kron(&other.gamma_inv) }
    }
}

pub(crate) fn hom_coalgebra_flow<F: Field>(c: &HomCoalgebra<F>) -> Flow<F> {
    let d = c.dim;
    for i in 0..d {
        let e = unit_vec(d, i);
        let delta = c.delta(&e);
        let lhs = delta.apply_leg(0, c.gamma_inv()).apply(1, 1, &c.comult, &[d, d]);
        let rhs = delta.apply(0, 1, &c.comult, &[d, d]).apply_leg(2, c.gamma_inv());
        expect_eq("hom-coassociativity", &[i], lhs.into_data(), rhs.into_data())?;
    }
    for i in 0..d {
        let e = unit_vec(d, i);
        let delta = c.delta(&e);
        let target = c.gamma_inv.column(i);
        let left = delta.apply(0, 1, &c.counit, &[1]).into_data();
        expect_eq("counit-left", &[i], left, target.clone())?;
        let right = delta.apply(1, 1, &c.counit, &[1]).into_data();
        expect_eq("counit-right", &[i], right, target)?;
    }
    for i in 0..d {
        let lhs = c.comult.apply(&c.gamma.column(i));
        let rhs = c.delta(&unit_vec(d, i)).apply_leg(0, &c.gamma).apply_leg(1, &c.gamma).into_data();
        expect_eq("gamma-comultiplicative", &[i], lhs, rhs)?;
    }
    expect_eq("gamma-counit", &[], c.counit.compose(&c.gamma).into_data(), c.counit.data().to_vec())
}

/// Checks Hom-coassociativity `γ⁻¹(c₁) ⊗ Δ(c₂) = c₁₁ ⊗ (c₁₂ ⊗ γ⁻¹(c₂))`, the
/// counit laws, `Δγ = (γ ⊗ γ)Δ` and `εγ = ε`.
///
/// Scalars act on `(C, γ)` through `γ`, so the counit laws read
/// `ε(c₁)c₂ = γ⁻¹(c) = c₁ε(c₂)` in plain coordinates.
pub fn check_hom_coalgebra<F: Field>(c: &HomCoalgebra<F>) -> Result<Verdict<F>> {
    finish(hom_coalgebra_flow(c))
}
