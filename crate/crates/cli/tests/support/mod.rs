#![allow(dead_code)]

pub mod classical;

use homent::linalg::LinearMap;
use homent::structures::module::{ModuleWitness, Side};
use homent::witness::{bump, transport};
use homent::{Field, Rational};
use homent_cli::gallery::{build, GALLERY};
use homent_cli::scalar::FieldKind;
use homent_cli::store::Store;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn gallery_store(name: &str) -> Store<Rational> {
    Store::load(&build(name).unwrap(), FieldKind::Rational).unwrap()
}

pub fn gallery_stores() -> Vec<(&'static str, Store<Rational>)> {
    GALLERY.iter().map(|(n, _)| (*n, gallery_store(n))).collect()
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
        let mut e = LinearMap::identity(n);
        e.set(r, c, if rng.gen_bool(0.5) { q(1) } else { q(-1) });
        t = e.compose(&t);
    }
    t
}

/// Transports a right module and right comodule along a random change of basis.
pub fn scramble(rng: &mut ChaCha8Rng, m: &ModuleWitness<Rational>, da: usize, dc: usize) -> ModuleWitness<Rational> {
    transport(m, &random_invertible(rng, m.dim()), da, dc).unwrap()
}

/// The right coaction with one random entry bumped by one.
pub fn bump_coaction(rng: &mut ChaCha8Rng, m: &ModuleWitness<Rational>, dc: usize) -> ModuleWitness<Rational> {
    let rho = m.coaction_map(Side::Right, dc).unwrap();
    let (r, c) = (rng.gen_range(0..rho.rows()), rng.gen_range(0..rho.cols()));
    let mut out = m.clone();
    out.coaction.as_mut().unwrap().map = bump(rho, r, c);
    out
}

/// The right action with one random entry bumped by one.
pub fn bump_action(rng: &mut ChaCha8Rng, m: &ModuleWitness<Rational>, da: usize) -> ModuleWitness<Rational> {
    let act = m.action_map(Side::Right, da).unwrap();
    let (r, c) = (rng.gen_range(0..act.rows()), rng.gen_range(0..act.cols()));
    let mut out = m.clone();
    out.action.as_mut().unwrap().map = bump(act, r, c);
    out
}

/// `map` with one random entry bumped by one.
pub fn bump_random(rng: &mut ChaCha8Rng, map: &LinearMap<Rational>) -> LinearMap<Rational> {
    bump(map, rng.gen_range(0..map.rows()), rng.gen_range(0..map.cols()))
}
