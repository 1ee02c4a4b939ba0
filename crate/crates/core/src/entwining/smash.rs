//! The Koppinen smash `Hom_ψ(C, A)` and its anti-isomorphism with the left dual of the associated coring.

use alloc::vec::Vec;

use crate::check::{expect_eq, finish, Flow, Verdict};
use crate::coring::{dual_algebra, dual_product, DualSide};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{unit_vec, LinearMap};
use crate::maps::MapAlgebra;
use crate::tensor::pair;

use super::{coring_from_entwining, EntwiningStructure};

/// Which comultiplication legs feed `f` and `g` in the smash product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LegOrder {
    /// `(f ∗ g)(c) = f(c₂)_κ g(c₁^κ)`.
    Displayed,
    /// `(f ∗ g)(c) = f(c₁)_κ g(c₂^κ)`.
    Swapped,
}

/// Maps `f: C → A` with `fγ = αf` under `∗_ψ`, with unit `ηε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoppinenAlgebra<F> {
    pub order: LegOrder,
    pub maps: MapAlgebra<F>,
}

impl<F: Field> KoppinenAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.maps.dim()
    }

    /// Associativity and unit laws on the computed basis.
    pub fn check(&self) -> Result<Verdict<F>> {
        self.maps.check()
    }
}

/// `f ∗_ψ g` with the given leg order.
pub fn koppinen_product<F: Field>(e: &EntwiningStructure<F>, order: LegOrder, f: &LinearMap<F>, g: &LinearMap<F>) -> LinearMap<F> {
    let (a, c) = (e.algebra(), e.coalgebra());
    let (da, dc) = (a.dim(), c.dim());
    LinearMap::from_images(da, dc, |x| {
        let d = c.delta(&unit_vec(dc, x));
        let t = match order {
            LegOrder::Displayed => d.apply_leg(1, f),
            LegOrder::Swapped => d.apply_leg(0, f).permute(&[1, 0]),
        };
        e.entwine(&t, 0).apply_leg(1, g).apply(0, 2, a.mult(), &[da]).into_data()
    })
}

fn unit_counit<F: Field>(e: &EntwiningStructure<F>) -> LinearMap<F> {
    let (a, c) = (e.algebra(), e.coalgebra());
    LinearMap::from_columns(a.dim(), &[a.unit().to_vec()]).expect("unit column").compose(c.counit())
}

fn constraints<F: Field>(e: &EntwiningStructure<F>) -> LinearMap<F> {
    let (a, c) = (e.algebra(), e.coalgebra());
    let (da, dc) = (a.dim(), c.dim());
    let rows: Vec<Vec<F>> = (0..da * dc)
        .map(|rx| {
            let (r, x) = (rx / dc, rx % dc);
            let mut row = alloc::vec![F::zero(); da * dc];
            for k in 0..dc {
                row[r * dc + k].add_assign_ref(c.gamma().get(k, x));
            }
            for k in 0..da {
                row[k * dc + x].sub_assign_ref(a.alpha().get(r, k));
            }
            row
        })
        .collect();
    LinearMap::from_rows(&rows).expect("rows of equal length")
}

/// `Hom_ψ(C, A)` with the displayed product.
pub fn koppinen_smash<F: Field>(e: &EntwiningStructure<F>) -> Result<KoppinenAlgebra<F>> {
    koppinen_smash_with(e, LegOrder::Displayed)
}

pub fn koppinen_smash_with<F: Field>(e: &EntwiningStructure<F>, order: LegOrder) -> Result<KoppinenAlgebra<F>> {
    let (da, dc) = (e.algebra().dim(), e.coalgebra().dim());
    let maps = MapAlgebra::from_constraints(da, dc, &constraints(e), &unit_counit(e), |f, g| koppinen_product(e, order, f, g), "Koppinen smash")?;
    Ok(KoppinenAlgebra { order, maps })
}

fn anti_isomorphism_flow<F: Field>(e: &EntwiningStructure<F>, order: LegOrder) -> Flow<F> {
    let (a, c) = (e.algebra(), e.coalgebra());
    let (da, dc) = (a.dim(), c.dim());
    let coring = coring_from_entwining(e)?;
    let dual = dual_algebra(&coring, DualSide::Left)?.maps;
    let smash = koppinen_smash_with(e, order)?.maps;
    let embed = LinearMap::from_images(da * dc, dc, |k| pair(a.unit(), &c.gamma_inv().column(k)));
    let to_smash = |xi: &LinearMap<F>| xi.compose(&embed);
    let to_dual = |f: &LinearMap<F>| LinearMap::from_images(da, da * dc, |col| a.mul(&unit_vec(da, col / dc), &f.column(col % dc)));
    let mut forward = Vec::with_capacity(dual.dim());
    for (i, xi) in dual.basis().iter().enumerate() {
        let image = to_smash(xi);
        match smash.coordinates(&image) {
            Some(v) => forward.push(v),
            None => expect_eq("anti-iso-image", &[i], image.into_data(), Vec::new())?,
        }
    }
    let mut backward = Vec::with_capacity(smash.dim());
    for (j, f) in smash.basis().iter().enumerate() {
        let image = to_dual(f);
        match dual.coordinates(&image) {
            Some(v) => backward.push(v),
            None => expect_eq("anti-iso-inverse-image", &[j], image.into_data(), Vec::new())?,
        }
    }
    let phi = LinearMap::from_columns(smash.dim(), &forward)?;
    let psi = LinearMap::from_columns(dual.dim(), &backward)?;
    expect_eq("anti-iso-inverse", &[0], phi.compose(&psi).into_data(), LinearMap::identity(smash.dim()).into_data())?;
    expect_eq("anti-iso-inverse", &[1], psi.compose(&phi).into_data(), LinearMap::identity(dual.dim()).into_data())?;
    expect_eq("anti-iso-unit", &[], to_smash(coring.counit()).into_data(), unit_counit(e).into_data())?;
    let images: Vec<LinearMap<F>> = dual.basis().iter().map(&to_smash).collect();
    for (i, xi) in dual.basis().iter().enumerate() {
        for (j, xj) in dual.basis().iter().enumerate() {
            let lhs = to_smash(&dual_product(&coring, DualSide::Left, xi, xj));
            let rhs = koppinen_product(e, order, &images[j], &images[i]);
            expect_eq("anti-multiplicative", &[i, j], lhs.into_data(), rhs.into_data())?;
        }
    }
    Ok(())
}

/// `φ(ξ)(c) = ξ(1 ⊗ γ⁻¹(c))` from `*C` to `Hom_ψ(C, A)`: both directions land in the
/// other algebra, they are mutually inverse, `φ(ε_C) = ηε` and `φ(ξ ∗ˡ ξ') = φ(ξ') ∗_ψ φ(ξ)`.
pub fn check_koppinen_anti_isomorphism<F: Field>(e: &EntwiningStructure<F>) -> Result<Verdict<F>> {
    check_koppinen_anti_isomorphism_with(e, LegOrder::Displayed)
}

pub fn check_koppinen_anti_isomorphism_with<F: Field>(e: &EntwiningStructure<F>, order: LegOrder) -> Result<Verdict<F>> {
    finish(anti_isomorphism_flow(e, order))
}
