//! Hom-entwining structures, their associated corings and entwined modules.
//!
//! `ψ: C ⊗ A → A ⊗ C` is written `ψ(c ⊗ a) = a_κ ⊗ c^κ`.

mod modules;
mod smash;

pub use modules::{check_entwined_module, coaction_classes, comodule_from_entwined, entwined_from_comodule, identification_map, EntwinedIdentification};
pub use smash::{
    check_koppinen_anti_isomorphism, check_koppinen_anti_isomorphism_with, koppinen_product, koppinen_smash, koppinen_smash_with, KoppinenAlgebra, LegOrder,
};

use alloc::format;

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::coring::HomCoring;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{scale_vec, unit_vec, LinearMap};
use crate::structures::algebra::HomAlgebra;
use crate::structures::coalgebra::HomCoalgebra;
use crate::tensor::{pair, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwiningStructure<F> {
    algebra: HomAlgebra<F>,
    coalgebra: HomCoalgebra<F>,
    psi: LinearMap<F>,
}

impl<F: Field> EntwiningStructure<F> {
    /// `psi` has shape `(dim A · dim C) × (dim C · dim A)`.
    pub fn new(algebra: HomAlgebra<F>, coalgebra: HomCoalgebra<F>, psi: LinearMap<F>) -> Result<Self> {
        let (da, dc) = (algebra.dim(), coalgebra.dim());
        psi.require_shape(da * dc, dc * da, "entwining map")?;
        Ok(EntwiningStructure { algebra, coalgebra, psi })
    }

    /// `ψ(c ⊗ a) = a ⊗ c`.
    pub fn flip(algebra: HomAlgebra<F>, coalgebra: HomCoalgebra<F>) -> Self {
        let psi = crate::tensor::flip_map(coalgebra.dim(), algebra.dim());
        EntwiningStructure { algebra, coalgebra, psi }
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra<F> {
        &self.coalgebra
    }

    pub fn psi(&self) -> &LinearMap<F> {
        &self.psi
    }

    /// `ψ(c ⊗ a)` as a tensor with legs `A, C`.
    pub fn apply(&self, c: &[F], a: &[F]) -> Tensor<F> {
        Tensor::new(&[self.algebra.dim(), self.coalgebra.dim()], self.psi.apply(&pair(c, a)))
    }

    /// Applies `ψ` to legs `leg` (in `C`) and `leg + 1` (in `A`), which become `A` and `C`.
    ///
    /// Every doubled index such as `a_{κλ}` or `c^{κλ}` is computed by
    /// chaining this on the right legs.
    pub fn entwine(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        t.apply(leg, 2, &self.psi, &[self.algebra.dim(), self.coalgebra.dim()])
    }
}

pub(crate) fn entwining_flow<F: Field>(e: &EntwiningStructure<F>) -> Flow<F> {
    let (a, c) = (&e.algebra, &e.coalgebra);
    let (da, dc) = (a.dim(), c.dim());
    let one = a.unit().to_vec();
    for x in 0..dc {
        let lhs = e.psi.apply(&pair(&unit_vec(dc, x), &one));
        expect_eq("entwining-unit", &[x], lhs, pair(&one, &unit_vec(dc, x)))?;
    }
    for x in 0..dc {
        for i in 0..da {
            let lhs = e.apply(&unit_vec(dc, x), &unit_vec(da, i)).apply_leg(1, c.counit()).into_data();
            let rhs = scale_vec(c.counit().get(0, x), &unit_vec(da, i));
            expect_eq("entwining-counit", &[x, i], lhs, rhs)?;
        }
    }
    for x in 0..dc {
        for i in 0..da {
            let lhs = e.psi.apply(&pair(&c.gamma().column(x), &a.alpha().column(i)));
            let rhs = e.apply(&unit_vec(dc, x), &unit_vec(da, i)).apply_leg(0, a.alpha()).apply_leg(1, c.gamma()).into_data();
            expect_eq("entwining-morphism", &[x, i], lhs, rhs)?;
        }
    }
    for x in 0..dc {
        let gc = c.gamma().column(x);
        for i in 0..da {
            for j in 0..da {
                let lhs = e.psi.apply(&pair(&gc, &a.mul_basis(i, j)));
                let t = Tensor::basis(&[dc, da, da], &[x, i, j]);
                let rhs = e.entwine(&e.entwine(&t, 0), 1).apply(0, 2, a.mult(), &[da]).apply_leg(1, c.gamma()).into_data();
                expect_eq("entwining-multiplicative", &[x, i, j], lhs, rhs)?;
            }
        }
    }
    for x in 0..dc {
        let dx = c.delta(&unit_vec(dc, x));
        for i in 0..da {
            let lhs = e.apply(&unit_vec(dc, x), &unit_vec(da, i)).apply_leg(0, a.alpha_inv()).apply(1, 1, c.comult(), &[dc, dc]);
            let rhs = e.entwine(&e.entwine(&dx.outer(&Tensor::vector(a.alpha_inv().column(i))), 1), 0);
            expect_eq("entwining-comultiplicative", &[x, i], lhs.into_data(), rhs.into_data())?;
        }
    }
    Ok(())
}

/// `1_κ ⊗ c^κ = 1 ⊗ c`, `a_κε(c^κ) = aε(c)`, `α(a)_κ ⊗ γ(c)^κ = α(a_κ) ⊗ γ(c^κ)`,
/// `(aa')_κ ⊗ γ(c)^κ = a_κa'_λ ⊗ γ(c^{κλ})` and
/// `α⁻¹(a_κ) ⊗ c^κ₁ ⊗ c^κ₂ = α⁻¹(a)_{κλ} ⊗ c₁^λ ⊗ c₂^κ`, in that order.
pub fn check_entwining<F: Field>(e: &EntwiningStructure<F>) -> Result<Verdict<F>> {
    finish(entwining_flow(e))
}

/// The carrier `A ⊗ C` with `χ = α ⊗ γ`, `a(a' ⊗ c) = α⁻¹(a)a' ⊗ γ(c)`,
/// `(a' ⊗ c)a = a'α⁻¹(a)_κ ⊗ γ(c^κ)`, `Δ(a ⊗ c) = (α⁻¹(a) ⊗ c₁) ⊗_A (1 ⊗ c₂)` and `ε(a ⊗ c) = α(a)ε(c)`.
pub fn coring_from_entwining<F: Field>(e: &EntwiningStructure<F>) -> Result<HomCoring<F>> {
    let (a, c) = (&e.algebra, &e.coalgebra);
    let (da, dc) = (a.dim(), c.dim());
    let n = da * dc;
    let left = standard_left_action(a, c);
    let right = LinearMap::from_images(n, n * da, |col| {
        let (x, i) = (col / da, col % da);
        let (a1, c1) = (x / dc, x % dc);
        let l = left_multiplication(a, &unit_vec(da, a1));
        e.apply(&unit_vec(dc, c1), &a.alpha_inv().column(i)).apply_leg(0, &l).apply_leg(1, c.gamma()).into_data()
    });
    HomCoring::new(a.clone(), a.alpha().kron(c.gamma()), left, right, standard_comult(a, c), standard_counit(a, c))
}

fn left_multiplication<F: Field>(a: &HomAlgebra<F>, x: &[F]) -> LinearMap<F> {
    let d = a.dim();
    LinearMap::from_images(d, d, |j| a.mul(x, &unit_vec(d, j)))
}

fn standard_left_action<F: Field>(a: &HomAlgebra<F>, c: &HomCoalgebra<F>) -> LinearMap<F> {
    let (da, dc) = (a.dim(), c.dim());
    let n = da * dc;
    LinearMap::from_images(n, da * n, |col| {
        let (i, x) = (col / n, col % n);
        let (a1, c1) = (x / dc, x % dc);
        pair(&a.mul(&a.alpha_inv().column(i), &unit_vec(da, a1)), &c.gamma().column(c1))
    })
}

fn standard_comult<F: Field>(a: &HomAlgebra<F>, c: &HomCoalgebra<F>) -> LinearMap<F> {
    let (da, dc) = (a.dim(), c.dim());
    let n = da * dc;
    LinearMap::from_images(n * n, n, |x| {
        let (a1, c1) = (x / dc, x % dc);
        Tensor::vector(a.alpha_inv().column(a1)).outer(&c.delta(&unit_vec(dc, c1))).outer(&Tensor::vector(a.unit().to_vec())).permute(&[0, 1, 3, 2]).into_data()
    })
}

fn standard_counit<F: Field>(a: &HomAlgebra<F>, c: &HomCoalgebra<F>) -> LinearMap<F> {
    a.alpha().kron(c.counit())
}

/// Recovers `ψ(c ⊗ a) = (1 ⊗ γ⁻¹(c))a` from a coring on `A ⊗ C` whose
/// automorphism, left action, comultiplication lift and counit are literally
/// those of [`coring_from_entwining`].
pub fn entwining_from_coring<F: Field>(coring: &HomCoring<F>, coalgebra: &HomCoalgebra<F>) -> Result<EntwiningStructure<F>> {
    let a = coring.base();
    let (da, dc) = (a.dim(), coalgebra.dim());
    if coring.dim() != da * dc {
        return Err(Error::NotStandardForm(format!("carrier has dimension {}, expected {}", coring.dim(), da * dc)));
    }
    let expected = [
        ("automorphism", a.alpha().kron(coalgebra.gamma()), coring.chi()),
        ("left action", standard_left_action(a, coalgebra), coring.left_action()),
        ("comultiplication", standard_comult(a, coalgebra), coring.comult_lift()),
        ("counit", standard_counit(a, coalgebra), coring.counit()),
    ];
    for (what, want, got) in &expected {
        if want != *got {
            return Err(Error::NotStandardForm(format!("{what} differs from the standard form")));
        }
    }
    let psi = LinearMap::from_images(da * dc, dc * da, |col| {
        let (x, i) = (col / da, col % da);
        let carrier = pair(a.unit(), &coalgebra.gamma_inv().column(x));
        coring.bimodule().act_right(&carrier, &unit_vec(da, i))
    });
    EntwiningStructure::new(a.clone(), coalgebra.clone(), psi)
}
