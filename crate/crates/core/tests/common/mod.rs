#![allow(dead_code)]

use homent::linalg::LinearMap;
use homent::structures::module::{ModuleWitness, Side};
use homent::witness::transport;
use homent::{Field, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

/// A product of `n` random transvections `I ± E_rc`.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> LinearMap<Rational> {
    let mut t = LinearMap::identity(n);
    if n < 2 {
        return t;
    }
    for _ in 0..n {
        let r = rng.gen_range(0..n);
        let c = (r + rng.gen_range(1..n)) % n;
        let s = if rng.gen_bool(0.5) { q(1) } else { q(-1) };
        let mut e = LinearMap::identity(n);
        e.set(r, c, s);
        t = e.compose(&t);
    }
    t
}

/// Transports a right module and right comodule along a random change of basis.
pub fn scramble(rng: &mut ChaCha8Rng, m: &ModuleWitness<Rational>, da: usize, dc: usize) -> ModuleWitness<Rational> {
    let t = random_invertible(rng, m.dim());
    transport(m, &t, da, dc).unwrap()
}

/// The right coaction with one entry bumped by one.
pub fn bump_coaction(rng: &mut ChaCha8Rng, m: &ModuleWitness<Rational>, dc: usize) -> ModuleWitness<Rational> {
    let rho = m.coaction_map(Side::Right, dc).unwrap();
    let (r, c) = (rng.gen_range(0..rho.rows()), rng.gen_range(0..rho.cols()));
    let mut out = m.clone();
    out.coaction.as_mut().unwrap().map = homent::witness::bump(rho, r, c);
    out
}
