//! Twisting classical structures into Hom-structures along an automorphism.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{invert, LinearMap};

use super::algebra::HomAlgebra;
use super::bialgebra::{bialgebra_morphism, HomBialgebra, HomHopfAlgebra};
use super::coalgebra::HomCoalgebra;

/// `mult' = σ ∘ mult`, `Δ' = Δ ∘ σ⁻¹`, automorphism `σ`, unit and counit unchanged.
///
/// The input must have identity automorphism and `σ` must be a bialgebra automorphism of it.
pub fn yau_twist<F: Field>(b: &HomBialgebra<F>, twist: &LinearMap<F>) -> Result<HomBialgebra<F>> {
    let d = b.dim();
    twist.require_shape(d, d, "twist")?;
    if !b.alpha().is_identity() {
        return Err(Error::PreconditionFailed("twisting expects a structure with identity automorphism".into()));
    }
    let twist_inv = invert(twist).map_err(|_| Error::NotAutomorphism("twist is singular".into()))?;
    if let Some(v) = bialgebra_morphism(b, twist)?.violation() {
        return Err(Error::NotAutomorphism(alloc::format!("twist breaks {}", v.identity)));
    }
    let (a, c) = (b.algebra(), b.coalgebra());
    let algebra = HomAlgebra::new(twist.compose(a.mult()), a.unit().to_vec(), twist.clone())?;
    let coalgebra = HomCoalgebra::new(c.comult().compose(&twist_inv), c.counit().data().to_vec(), twist.clone())?;
    HomBialgebra::new(algebra, coalgebra)
}

/// [`yau_twist`] keeping the antipode.
pub fn yau_twist_hopf<F: Field>(h: &HomHopfAlgebra<F>, twist: &LinearMap<F>) -> Result<HomHopfAlgebra<F>> {
    let b = yau_twist(h.bialgebra(), twist)?;
    if twist.compose(h.antipode()) != h.antipode().compose(twist) {
        return Err(Error::NotAutomorphism("twist does not commute with the antipode".into()));
    }
    HomHopfAlgebra::new(b, h.antipode().clone())
}
