//! Standard small Hopf algebras used throughout the tests and the gallery.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;
use crate::linalg::{invert, LinearMap};

use super::algebra::HomAlgebra;
use super::bialgebra::{HomBialgebra, HomHopfAlgebra};
use super::coalgebra::HomCoalgebra;
use super::twist::yau_twist_hopf;

fn hopf_from_parts<F: Field>(
    dim: usize,
    product: impl Fn(usize, usize) -> Vec<F>,
    unit: Vec<F>,
    coproduct: impl Fn(usize) -> Vec<F>,
    counit: Vec<F>,
    antipode: LinearMap<F>,
) -> HomHopfAlgebra<F> {
    let mult = LinearMap::from_images(dim, dim * dim, |c| product(c / dim, c % dim));
    let comult = LinearMap::from_images(dim * dim, dim, coproduct);
    let id = LinearMap::identity(dim);
    let algebra = HomAlgebra::new(mult, unit, id.clone()).expect("algebra shapes");
    let coalgebra = HomCoalgebra::new(comult, counit, id).expect("coalgebra shapes");
    let bialgebra = HomBialgebra::new(algebra, coalgebra).expect("bialgebra shapes");
    HomHopfAlgebra::new(bialgebra, antipode).expect("antipode shape")
}

/// The ground field as a Hopf algebra.
pub fn ground_hopf<F: Field>() -> HomHopfAlgebra<F> {
    cyclic_group_hopf(1)
}

/// `k[Z/n]` with basis `1, g, …, g^{n-1}` and identity automorphism.
pub fn cyclic_group_hopf<F: Field>(n: usize) -> HomHopfAlgebra<F> {
    let e = |i: usize| crate::linalg::unit_vec::<F>(n, i % n);
    let antipode = LinearMap::from_images(n, n, |i| e(n - i));
    hopf_from_parts(n, |i, j| e(i + j), e(0), |i| crate::linalg::unit_vec(n * n, i * n + i), vec![F::one(); n], antipode)
}

/// The group automorphism `g ↦ g^k` of `k[Z/n]` as a matrix.
pub fn cyclic_power_map<F: Field>(n: usize, k: usize) -> LinearMap<F> {
    LinearMap::from_images(n, n, |i| crate::linalg::unit_vec(n, (i * k) % n))
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`.
pub fn sweedler_h4<F: Field>() -> HomHopfAlgebra<F> {
    let v = |c: [i64; 4]| c.iter().map(|&x| F::from_i64(x)).collect::<Vec<F>>();
    #[rustfmt::skip]
    let table: [[[i64; 4]; 4]; 4] = [
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        [[0, 0, 1, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0]],
        [[0, 0, 0, 1], [0, 0, -1, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    ];
    let coproduct = |i: usize| -> Vec<F> {
        let mut out = vec![F::zero(); 16];
        let terms: &[(usize, usize)] = match i {
            0 => &[(0, 0)],
            1 => &[(1, 1)],
            2 => &[(2, 0), (1, 2)],
            _ => &[(3, 1), (0, 3)],
        };
        for &(a, b) in terms {
            out[a * 4 + b] = F::one();
        }
        out
    };
    let antipode = LinearMap::from_rows(&[v([1, 0, 0, 0]), v([0, 1, 0, 0]), v([0, 0, 0, 1]), v([0, 0, -1, 0])]).expect("4x4 antipode");
    hopf_from_parts(4, |i, j| v(table[i][j]), v([1, 0, 0, 0]), coproduct, v([1, 1, 0, 0]), antipode)
}

/// The Hopf automorphism `x ↦ λx` of Sweedler's algebra.
pub fn h4_scaling<F: Field>(lambda: F) -> LinearMap<F> {
    let mut m = LinearMap::identity(4);
    m.set(2, 2, lambda.clone());
    m.set(3, 3, lambda);
    m
}

/// Sweedler's algebra twisted along `x ↦ λx`.
pub fn twisted_h4<F: Field>(lambda: F) -> HomHopfAlgebra<F> {
    yau_twist_hopf(&sweedler_h4(), &h4_scaling(lambda)).expect("x ↦ λx is a Hopf automorphism for λ ≠ 0")
}

/// The linear dual `(H*, (α⁻¹)*)` with transposed structure maps.
pub fn dual_hopf<F: Field>(h: &HomHopfAlgebra<F>) -> HomHopfAlgebra<F> {
    let (a, c) = (h.algebra(), h.coalgebra());
    let alpha = invert(&h.alpha().transpose()).expect("α is invertible");
    let algebra = HomAlgebra::new(c.comult().transpose(), c.counit().data().to_vec(), alpha.clone()).expect("dual algebra");
    let coalgebra = HomCoalgebra::new(a.mult().transpose(), a.unit().to_vec(), alpha).expect("dual coalgebra");
    let bialgebra = HomBialgebra::new(algebra, coalgebra).expect("dual bialgebra");
    HomHopfAlgebra::new(bialgebra, h.antipode().transpose()).expect("dual antipode")
}

/// Left adjoint action `b·a = b₁aS(b₂)` of a Hopf algebra with identity automorphism on itself.
pub fn adjoint_action<F: Field>(h: &HomHopfAlgebra<F>) -> LinearMap<F> {
    let d = h.dim();
    let m = h.algebra().mult();
    LinearMap::from_images(d, d * d, |col| {
        let (b, a) = (col / d, col % d);
        h.coalgebra()
            .delta(&crate::linalg::unit_vec(d, b))
            .outer(&crate::tensor::Tensor::vector(crate::linalg::unit_vec(d, a)))
            .apply_leg(1, h.antipode())
            .permute(&[0, 2, 1])
            .apply(0, 2, m, &[d])
            .apply(0, 2, m, &[d])
            .into_data()
    })
}

/// Left coadjoint coaction `c ↦ c₁S(c₃) ⊗ c₂` of a Hopf algebra with identity automorphism.
pub fn coadjoint_coaction<F: Field>(h: &HomHopfAlgebra<F>) -> LinearMap<F> {
    let d = h.dim();
    let c = h.coalgebra();
    LinearMap::from_images(d * d, d, |i| {
        c.delta(&crate::linalg::unit_vec(d, i))
            .apply(1, 1, c.comult(), &[d, d])
            .apply_leg(2, h.antipode())
            .permute(&[0, 2, 1])
            .apply(0, 2, h.algebra().mult(), &[d])
            .into_data()
    })
}
