use alloc::vec;
use alloc::vec::Vec;

use crate::check::{expect_eq, finish, resume, Flow, Verdict};
use crate::error::{shape, Error, Result};
use crate::field::Field;
use crate::linalg::{invert, unit_vec, LinearMap};
use crate::tensor::Tensor;

use super::algebra::{hom_algebra_flow, HomAlgebra};
use super::coalgebra::{hom_coalgebra_flow, HomCoalgebra};

/// A Hom-algebra and a Hom-coalgebra on the same space with the same automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBialgebra<F> {
    algebra: HomAlgebra<F>,
    coalgebra: HomCoalgebra<F>,
}

impl<F: Field> HomBialgebra<F> {
    pub fn new(algebra: HomAlgebra<F>, coalgebra: HomCoalgebra<F>) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(shape("algebra and coalgebra dimensions differ"));
        }
        if algebra.alpha() != coalgebra.gamma() {
            return Err(shape("algebra and coalgebra automorphisms differ"));
        }
        Ok(HomBialgebra { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra<F> {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn alpha(&self) -> &LinearMap<F> {
        self.algebra.alpha()
    }

    /// `B ⊗ B'` with componentwise structure.
    pub fn tensor(&self, other: &HomBialgebra<F>) -> Self {
        HomBialgebra { algebra: self.algebra.tensor(&other.algebra), coalgebra: self.coalgebra.tensor(&other.coalgebra) }
    }

    /// Opposite multiplication, same comultiplication.
    pub fn opposite(&self) -> Self {
        HomBialgebra { algebra: self.algebra.opposite(), coalgebra: self.coalgebra.clone() }
    }
}

/// Product of two elements of `B ⊗ B` with the componentwise multiplication.
pub(crate) fn mul_pair<F: Field>(a: &HomAlgebra<F>, x: &Tensor<F>, y: &Tensor<F>) -> Tensor<F> {
    mul_tensor(a, a, x, y)
}

/// `(a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'` in `A ⊗ B`.
pub(crate) fn mul_tensor<F: Field>(a: &HomAlgebra<F>, b: &HomAlgebra<F>, x: &Tensor<F>, y: &Tensor<F>) -> Tensor<F> {
    x.outer(y).permute(&[0, 2, 1, 3]).apply(0, 2, a.mult(), &[a.dim()]).apply(1, 2, b.mult(), &[b.dim()])
}

pub(crate) fn bialgebra_flow<F: Field>(b: &HomBialgebra<F>) -> Flow<F> {
    hom_algebra_flow(&b.algebra)?;
    hom_coalgebra_flow(&b.coalgebra)?;
    let (a, c) = (&b.algebra, &b.coalgebra);
    let d = b.dim();
    let deltas: Vec<Tensor<F>> = (0..d).map(|i| c.delta(&unit_vec(d, i))).collect();
    for i in 0..d {
        for j in 0..d {
            let lhs = c.comult().apply(&a.mul_basis(i, j));
            let rhs = mul_pair(a, &deltas[i], &deltas[j]).into_data();
            expect_eq("comult-multiplicative", &[i, j], lhs, rhs)?;
        }
    }
    let one = a.unit().to_vec();
    expect_eq("comult-unit", &[], c.comult().apply(&one), crate::tensor::pair(&one, &one))?;
    for i in 0..d {
        for j in 0..d {
            let lhs = c.eps(&a.mul_basis(i, j));
            let rhs = c.counit().get(0, i).mul_ref(c.counit().get(0, j));
            expect_eq("counit-multiplicative", &[i, j], vec![lhs], vec![rhs])?;
        }
    }
    expect_eq("counit-unit", &[], vec![c.eps(&one)], vec![F::one()])
}

/// Hom-algebra and Hom-coalgebra axioms plus `Δ(hh') = Δ(h)Δ(h')`,
/// `Δ(1) = 1 ⊗ 1`, `ε(hh') = ε(h)ε(h')` and `ε(1) = 1`.
pub fn check_hom_bialgebra<F: Field>(b: &HomBialgebra<F>) -> Result<Verdict<F>> {
    finish(bialgebra_flow(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfAlgebra<F> {
    bialgebra: HomBialgebra<F>,
    antipode: LinearMap<F>,
}

impl<F: Field> HomHopfAlgebra<F> {
    pub fn new(bialgebra: HomBialgebra<F>, antipode: LinearMap<F>) -> Result<Self> {
        antipode.require_shape(bialgebra.dim(), bialgebra.dim(), "antipode")?;
        Ok(HomHopfAlgebra { bialgebra, antipode })
    }

    pub fn bialgebra(&self) -> &HomBialgebra<F> {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        self.bialgebra.algebra()
    }

    pub fn coalgebra(&self) -> &HomCoalgebra<F> {
        self.bialgebra.coalgebra()
    }

    pub fn antipode(&self) -> &LinearMap<F> {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Result<LinearMap<F>> {
        invert(&self.antipode)
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn alpha(&self) -> &LinearMap<F> {
        self.bialgebra.alpha()
    }
}

/// Convolution `(f ∗ g)(h) = f(h₁)g(h₂)` of two endomorphisms.
pub fn convolution<F: Field>(b: &HomBialgebra<F>, f: &LinearMap<F>, g: &LinearMap<F>) -> LinearMap<F> {
    let d = b.dim();
    LinearMap::from_images(d, d, |i| b.coalgebra().delta(&unit_vec(d, i)).apply_leg(0, f).apply_leg(1, g).apply(0, 2, b.algebra().mult(), &[d]).into_data())
}

pub(crate) fn antipode_flow<F: Field>(h: &HomHopfAlgebra<F>) -> Flow<F> {
    bialgebra_flow(&h.bialgebra)?;
    let (a, c) = (h.algebra(), h.coalgebra());
    let d = h.dim();
    let s = &h.antipode;
    let id = LinearMap::identity(d);
    let unit_counit = LinearMap::from_columns(d, &[a.unit().to_vec()])?.compose(c.counit());
    let left = convolution(&h.bialgebra, s, &id);
    let right = convolution(&h.bialgebra, &id, s);
    for i in 0..d {
        expect_eq("antipode-left", &[i], left.column(i), unit_counit.column(i))?;
        expect_eq("antipode-right", &[i], right.column(i), unit_counit.column(i))?;
    }
    expect_eq("antipode-alpha", &[], s.compose(a.alpha()).into_data(), a.alpha().compose(s).into_data())?;
    for i in 0..d {
        for j in 0..d {
            let lhs = s.apply(&a.mul_basis(i, j));
            let rhs = a.mul(&s.column(j), &s.column(i));
            expect_eq("antipode-antimultiplicative", &[i, j], lhs, rhs)?;
        }
    }
    expect_eq("antipode-unit", &[], s.apply(a.unit()), a.unit().to_vec())?;
    for i in 0..d {
        let lhs = c.comult().apply(&s.column(i));
        let rhs = c.delta(&unit_vec(d, i)).apply_leg(0, s).apply_leg(1, s).permute(&[1, 0]).into_data();
        expect_eq("antipode-anticomultiplicative", &[i], lhs, rhs)?;
    }
    expect_eq("antipode-counit", &[], c.counit().compose(s).into_data(), c.counit().data().to_vec())
}

/// Bialgebra axioms, `S ∗ id = id ∗ S = ηε`, `Sα = αS`, and the derived
/// identities `S(gh) = S(h)S(g)`, `S(1) = 1`, `Δ(S(h)) = S(h₂) ⊗ S(h₁)`, `εS = ε`.
pub fn check_antipode<F: Field>(h: &HomHopfAlgebra<F>) -> Result<Verdict<F>> {
    finish(antipode_flow(h))
}

/// A Hom-Hopf algebra automorphism: invertible, multiplicative, unital,
/// comultiplicative, counital, and commuting with `α` and `S`.
pub fn check_hopf_automorphism<F: Field>(h: &HomHopfAlgebra<F>, phi: &LinearMap<F>) -> Result<Verdict<F>> {
    finish(hopf_automorphism_flow(h, phi))
}

pub(crate) fn hopf_automorphism_flow<F: Field>(h: &HomHopfAlgebra<F>, phi: &LinearMap<F>) -> Flow<F> {
    let d = h.dim();
    phi.require_shape(d, d, "Hopf automorphism")?;
    if invert(phi).is_err() {
        return Err(Error::NotAutomorphism("map is singular".into()).into());
    }
    resume(bialgebra_morphism(h.bialgebra(), phi))?;
    let s = h.antipode();
    expect_eq("automorphism-antipode", &[], phi.compose(s).into_data(), s.compose(phi).into_data())
}

/// Checks that an endomorphism of a Hom-bialgebra preserves all structure maps.
pub fn bialgebra_morphism<F: Field>(b: &HomBialgebra<F>, phi: &LinearMap<F>) -> Result<Verdict<F>> {
    let flow = (|| -> Flow<F> {
        let d = b.dim();
        let (a, c) = (b.algebra(), b.coalgebra());
        for i in 0..d {
            for j in 0..d {
                let lhs = phi.apply(&a.mul_basis(i, j));
                let rhs = a.mul(&phi.column(i), &phi.column(j));
                expect_eq("automorphism-multiplicative", &[i, j], lhs, rhs)?;
            }
        }
        expect_eq("automorphism-unit", &[], phi.apply(a.unit()), a.unit().to_vec())?;
        for i in 0..d {
            let lhs = c.comult().apply(&phi.column(i));
            let rhs = c.delta(&unit_vec(d, i)).apply_leg(0, phi).apply_leg(1, phi).into_data();
            expect_eq("automorphism-comultiplicative", &[i], lhs, rhs)?;
        }
        expect_eq("automorphism-counit", &[], c.counit().compose(phi).into_data(), c.counit().data().to_vec())?;
        expect_eq("automorphism-alpha", &[], phi.compose(a.alpha()).into_data(), a.alpha().compose(phi).into_data())
    })();
    finish(flow)
}
