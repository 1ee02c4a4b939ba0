//! Right actions of the corings attached to each specialization, written out directly.

use crate::field::Field;
use crate::linalg::{unit_vec, LinearMap};
use crate::structures::algebra::HomAlgebra;
use crate::structures::bialgebra::HomBialgebra;
use crate::structures::coalgebra::HomCoalgebra;
use crate::tensor::Tensor;

use super::alternative::AlternativeDkDatum;
use super::left_multiplication;
use super::yetter_drinfeld::HopfAutomorphismPair;

/// `(a' ⊗ b)a = a'a₀ ⊗ ba₁` on `A ⊗ B`.
pub fn relative_right_action<F: Field>(b: &HomBialgebra<F>, a: &HomAlgebra<F>, coaction: &LinearMap<F>) -> LinearMap<F> {
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    LinearMap::from_images(n, n * da, |col| {
        let (x, i) = (col / da, col % da);
        let (a1, b1) = (x / db, x % db);
        let right_b = LinearMap::from_images(db, db, |k| b.algebra().mul(&unit_vec(db, b1), &unit_vec(db, k)));
        Tensor::new(&[da, db], coaction.column(i)).apply_leg(0, &left_multiplication(a, &unit_vec(da, a1))).apply_leg(1, &right_b).into_data()
    })
}

/// `(a' ⊗ c)a = a'a₁ ⊗ ca₂` on `A ⊗ C`.
pub fn dual_relative_right_action<F: Field>(a: &HomBialgebra<F>, c: &HomCoalgebra<F>, action: &LinearMap<F>) -> LinearMap<F> {
    let (da, dc) = (a.dim(), c.dim());
    let n = da * dc;
    LinearMap::from_images(n, n * da, |col| {
        let (x, i) = (col / da, col % da);
        let (a1, c1) = (x / dc, x % dc);
        let c_times = LinearMap::from_images(dc, da, |k| action.apply(&crate::tensor::pair(&unit_vec(dc, c1), &unit_vec(da, k))));
        a.coalgebra().delta(&unit_vec(da, i)).apply_leg(0, &left_multiplication(a.algebra(), &unit_vec(da, a1))).apply_leg(1, &c_times).into_data()
    })
}

/// `(h ⊗ h')g = hα(g₂₁) ⊗ φ′(S(g₁))(α⁻¹(h')φ(g₂₂))` on `H ⊗ H`.
pub fn yd_right_action<F: Field>(p: &HopfAutomorphismPair<F>) -> LinearMap<F> {
    let h = &p.hopf;
    let (a, c) = (h.algebra(), h.coalgebra());
    let d = h.dim();
    let varphi_s = p.varphi.compose(h.antipode());
    LinearMap::from_images(d * d, d * d * d, |col| {
        let (x, g) = (col / d, col % d);
        let (h1, h2) = (x / d, x % d);
        let times_h2 = left_multiplication(a, &a.alpha_inv().column(h2));
        c.delta(&unit_vec(d, g))
            .apply(1, 1, c.comult(), &[d, d])
            .apply_leg(1, &left_multiplication(a, &unit_vec(d, h1)).compose(a.alpha()))
            .apply_leg(2, &times_h2.compose(&p.phi))
            .apply_leg(0, &varphi_s)
            .permute(&[1, 0, 2])
            .apply(1, 2, a.mult(), &[d])
            .into_data()
    })
}

/// `(h ⊗ h')g = hα⁻¹(g) ⊗ α(h')` on `H ⊗ H`.
pub fn long_right_action<F: Field>(h: &HomBialgebra<F>) -> LinearMap<F> {
    let a = h.algebra();
    let d = h.dim();
    LinearMap::from_images(d * d, d * d * d, |col| {
        let (x, g) = (col / d, col % d);
        let (h1, h2) = (x / d, x % d);
        crate::tensor::pair(&a.mul(&unit_vec(d, h1), &a.alpha_inv().column(g)), &a.alpha().column(h2))
    })
}

/// `(a' ⊗ c)a = a'(c₋₁ · α⁻²(a)) ⊗ γ²(c₀)` on `A ⊗ C`.
pub fn alt_dk_right_action<F: Field>(d: &AlternativeDkDatum<F>) -> LinearMap<F> {
    let (da, db, dc) = (d.algebra.dim(), d.bialgebra.dim(), d.coalgebra.dim());
    let n = da * dc;
    let alpha_m2 = d.algebra.alpha_pow(-2);
    let gamma2 = d.coalgebra.gamma_pow(2);
    LinearMap::from_images(n, n * da, |col| {
        let (x, i) = (col / da, col % da);
        let (a1, c1) = (x / dc, x % dc);
        Tensor::new(&[db, dc], d.coaction.column(c1))
            .outer(&Tensor::vector(alpha_m2.column(i)))
            .permute(&[0, 2, 1])
            .apply(0, 2, &d.action, &[da])
            .apply_leg(0, &left_multiplication(&d.algebra, &unit_vec(da, a1)))
            .apply_leg(1, &gamma2)
            .into_data()
    })
}
