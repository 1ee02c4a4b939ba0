mod common;

use common::{bump_coaction, q, random_invertible};
use homent::coring::check_coring;
use homent::doi_koppinen::*;
use homent::entwining::*;
use homent::linalg::{rank, LinearMap};
use homent::structures::examples::*;
use homent::structures::module::{check_right_comodule, check_right_module, ModuleWitness, Side};
use homent::structures::*;
use homent::tensor::{pair, Tensor};
use homent::witness::{direct_sum, free_entwined_module, free_right_module, transport};
use homent::{build_quotient, Field, Fp, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-3i64..=3).prop_map(q), n)
}

fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("nonzero", |x| !x.is_zero())
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn rational_arithmetic_is_exact(a in small(), b in small()) {
        let mut x = a.clone();
        x.add_assign_ref(&b);
        x.sub_assign_ref(&b);
        prop_assert_eq!(x, a);
    }

    #[test]
    fn prime_field_arithmetic_is_exact(a in 0u64..101, b in 0u64..101) {
        let (a, b) = (Fp::<101>::new(a), Fp::<101>::new(b));
        let mut x = a;
        x.add_assign_ref(&b);
        x.sub_assign_ref(&b);
        prop_assert_eq!(x, a);
        if !b.is_zero() {
            prop_assert_eq!(a.mul_ref(&b).checked_div(&b), Some(a));
        }
    }

    #[test]
    fn quotient_invariants(rels in prop::collection::vec(vector(6), 0..5)) {
        let quot = build_quotient(6, &rels);
        let proj = quot.projection();
        prop_assert!(proj.compose(&quot.section()).is_identity());
        for r in &rels {
            prop_assert!(proj.apply(r).iter().all(|x| x.is_zero()));
        }
        let relation_rank = if rels.is_empty() { 0 } else { rank(&LinearMap::from_columns(6, &rels).unwrap()) };
        prop_assert_eq!(quot.dim(), 6 - relation_rank);
    }
}

#[test]
fn division_by_zero_is_rejected() {
    assert_eq!(Rational::zero().inv(), None);
    assert_eq!(q(3).checked_div(&q(0)), None);
    assert_eq!(Fp::<7>::new(0).inv(), None);
    assert!(LinearMap::<Rational>::from_vec(2, 2, vec![q(1); 3]).is_err());
}

fn algebras() -> Vec<HomHopfAlgebra<Rational>> {
    vec![cyclic_group_hopf(2), yau_twist_hopf(&cyclic_group_hopf(3), &cyclic_power_map(3, 2)).unwrap(), twisted_h4(q(2))]
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn hom_associativity_holds_on_random_vectors(idx in 0usize..3, x in vector(4), y in vector(4), z in vector(4)) {
        let h = &algebras()[idx];
        let a = h.algebra();
        let d = a.dim();
        let (x, y, z) = (&x[..d], &y[..d], &z[..d]);
        let lhs = a.mul(&a.alpha().apply(x), &a.mul(y, z));
        let rhs = a.mul(&a.mul(x, y), &a.alpha().apply(z));
        prop_assert_eq!(lhs, rhs);
        let c = h.coalgebra();
        let delta = c.delta(x);
        let lhs = delta.apply_leg(0, c.gamma_inv()).apply(1, 1, c.comult(), &[d, d]);
        let rhs = delta.apply(0, 1, c.comult(), &[d, d]).apply_leg(2, c.gamma_inv());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(c.comult().apply(&a.mul(x, y)), pair_product(h, &c.delta(x), &c.delta(y)));
    }

    #[test]
    fn entwining_axioms_hold_on_random_vectors(x in vector(4), y in vector(4), z in vector(4)) {
        let h = twisted_h4(q(2));
        let e = yetter_drinfeld_entwining(&HopfAutomorphismPair::plain(h.clone())).unwrap();
        let (a, c) = (e.algebra(), e.coalgebra());
        let lhs = e.psi().apply(&pair(&c.gamma().apply(&x), &a.mul(&y, &z)));
        let t = Tensor::vector(x.clone()).outer(&Tensor::vector(y.clone())).outer(&Tensor::vector(z));
        let rhs = e.entwine(&e.entwine(&t, 0), 1).apply(0, 2, a.mult(), &[4]).apply_leg(1, c.gamma()).into_data();
        prop_assert_eq!(lhs, rhs);
        let lhs = e.apply(&x, &y).apply_leg(0, a.alpha_inv()).apply(1, 1, c.comult(), &[4, 4]);
        let rhs = e.entwine(&e.entwine(&c.delta(&x).outer(&Tensor::vector(a.alpha_inv().apply(&y))), 1), 0);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn yau_twists_pass_every_checker(lambda in nonzero()) {
        let h = twisted_h4(lambda.clone());
        prop_assert!(check_hom_bialgebra(h.bialgebra()).unwrap().is_pass());
        prop_assert!(check_antipode(&h).unwrap().is_pass());
        let t = yau_twist(sweedler_h4::<Rational>().bialgebra(), &LinearMap::identity(4)).unwrap();
        let classical = sweedler_h4::<Rational>();
        prop_assert_eq!(&t, classical.bialgebra());
    }

    #[test]
    fn balanced_square_of_an_algebra_has_its_dimension(lambda in nonzero()) {
        let h = twisted_h4(lambda);
        let a = h.algebra();
        let m = ModuleWitness::regular(a, Side::Right);
        let n = ModuleWitness::regular(a, Side::Left);
        prop_assert_eq!(tensor_over_a(a, &m, &n).unwrap().dim(), 4);
    }

    #[test]
    fn self_relative_entwinings_round_trip(lambda in nonzero()) {
        let h = twisted_h4(lambda);
        let e = relative_entwining(h.bialgebra(), h.algebra(), h.coalgebra().comult()).unwrap();
        prop_assert!(check_entwining(&e).unwrap().is_pass());
        let coring = coring_from_entwining(&e).unwrap();
        prop_assert!(check_coring(&coring).unwrap().is_pass());
        let back = entwining_from_coring(&coring, e.coalgebra()).unwrap();
        prop_assert_eq!(back.psi(), e.psi());
    }
}

fn pair_product(h: &HomHopfAlgebra<Rational>, x: &Tensor<Rational>, y: &Tensor<Rational>) -> Vec<Rational> {
    let d = h.dim();
    x.outer(y).permute(&[0, 2, 1, 3]).apply(0, 2, h.algebra().mult(), &[d]).apply(1, 2, h.algebra().mult(), &[d]).into_data()
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn transport_and_sums_preserve_entwined_modules(seed in any::<u64>(), which in 0usize..3) {
        let h = twisted_h4(q(2));
        let e = match which {
            0 => relative_entwining(h.bialgebra(), h.algebra(), h.coalgebra().comult()).unwrap(),
            1 => yetter_drinfeld_entwining(&HopfAutomorphismPair::anti(h.clone()).unwrap()).unwrap(),
            _ => entwining_from_alt_dk(&adjoint_alt_dk(&sweedler_h4(), &h4_scaling(q(2))).unwrap()).unwrap(),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let free = free_entwined_module(&e, &free_right_module(e.algebra(), 1).unwrap()).unwrap();
        let sum = direct_sum(&free, &free, 4, 4).unwrap();
        let t = random_invertible(&mut rng, sum.dim());
        let w = transport(&sum, &t, 4, 4).unwrap();
        prop_assert!(check_right_module(e.algebra(), &w).unwrap().is_pass());
        prop_assert!(check_right_comodule(e.coalgebra(), &w).unwrap().is_pass());
        prop_assert!(check_entwined_module(&e, &w).unwrap().is_pass());
    }

    #[test]
    fn datum_conditions_agree_with_the_entwined_condition(seed in any::<u64>(), mutate in any::<bool>()) {
        let h = twisted_h4(q(2));
        let p = HopfAutomorphismPair::anti(h.clone()).unwrap();
        let e = yetter_drinfeld_entwining(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let free = free_entwined_module(&e, &free_right_module(e.algebra(), 1).unwrap()).unwrap();
        let t = random_invertible(&mut rng, free.dim());
        let mut w = transport(&free, &t, 4, 4).unwrap();
        if mutate {
            w = bump_coaction(&mut rng, &w, 4);
        }
        prop_assert_eq!(check_yd_module(&p, &w).unwrap().is_pass(), check_entwined_module(&e, &w).unwrap().is_pass());
        let d = yd_datum(&p).unwrap();
        prop_assert_eq!(check_dk_module(&d, &w).unwrap().is_pass(), check_entwined_module(&e, &w).unwrap().is_pass());
    }

    #[test]
    fn translation_round_trips_on_random_witnesses(seed in any::<u64>()) {
        let h = twisted_h4(q(2));
        let e = relative_entwining(h.bialgebra(), h.algebra(), h.coalgebra().comult()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let free = free_entwined_module(&e, &free_right_module(e.algebra(), 1).unwrap()).unwrap();
        let w = transport(&free, &random_invertible(&mut rng, free.dim()), 4, 4).unwrap();
        let back = entwined_from_comodule(&e, &comodule_from_entwined(&e, &w).unwrap()).unwrap();
        prop_assert_eq!(back, w);
    }
}

#[test]
fn free_modules_over_two_copies() {
    let h = twisted_h4(q(2));
    let m = free_right_module(h.algebra(), 2).unwrap();
    assert_eq!(m.dim(), 8);
    assert!(check_right_module(h.algebra(), &m).unwrap().is_pass());
}
