use homent::linalg::{unit_vec, LinearMap};
use homent::structures::examples::{adjoint_action, coadjoint_coaction, cyclic_group_hopf, cyclic_power_map, dual_hopf, h4_scaling, sweedler_h4, twisted_h4};
use homent::structures::*;
use homent::{Field, Rational};

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn z3_twist() -> HomHopfAlgebra<Rational> {
    yau_twist_hopf(&cyclic_group_hopf(3), &cyclic_power_map(3, 2)).unwrap()
}

fn gallery() -> Vec<HomHopfAlgebra<Rational>> {
    vec![cyclic_group_hopf(1), cyclic_group_hopf(2), z3_twist(), sweedler_h4(), twisted_h4(q(2)), dual_hopf(&twisted_h4(q(2)))]
}

#[test]
fn gallery_hopf_algebras_pass_every_axiom() {
    for h in gallery() {
        assert!(check_hom_algebra(h.algebra()).unwrap().is_pass());
        assert!(check_hom_coalgebra(h.coalgebra()).unwrap().is_pass());
        assert!(check_hom_bialgebra(h.bialgebra()).unwrap().is_pass());
        assert!(check_antipode(&h).unwrap().is_pass(), "{:?}", check_antipode(&h));
    }
}

#[test]
fn z3_twist_multiplication() {
    let h = z3_twist();
    // g·g = α(g²) = g⁴ = g
    assert_eq!(h.algebra().mul_basis(1, 1), unit_vec(3, 1));
    assert_eq!(h.algebra().mul_basis(1, 2), unit_vec(3, 0));
}

#[test]
fn mutated_multiplication_breaks_hom_associativity() {
    let a = z3_twist().algebra().clone();
    let mut mult = a.mult().clone();
    let x = mult.get(1, 4).clone() + q(1);
    mult.set(1, 4, x);
    let bad = HomAlgebra::new(mult, a.unit().to_vec(), a.alpha().clone()).unwrap();
    assert_eq!(check_hom_algebra(&bad).unwrap().identity(), Some("hom-associativity"));
}

#[test]
fn zeroed_counit_breaks_counit_law() {
    let c = twisted_h4(q(2)).coalgebra().clone();
    let bad = HomCoalgebra::new(c.comult().clone(), vec![q(0); 4], c.gamma().clone()).unwrap();
    assert_eq!(check_hom_coalgebra(&bad).unwrap().identity(), Some("counit-left"));
}

#[test]
fn identity_antipode_fails() {
    let h = twisted_h4(q(2));
    let bad = HomHopfAlgebra::new(h.bialgebra().clone(), LinearMap::identity(4)).unwrap();
    assert_eq!(check_antipode(&bad).unwrap().identity(), Some("antipode-left"));
}

#[test]
fn regular_modules_and_comodules() {
    for h in gallery() {
        for side in [Side::Left, Side::Right] {
            let m = ModuleWitness::regular(h.algebra(), side);
            let c = ModuleWitness::coregular(h.coalgebra(), side);
            match side {
                Side::Right => {
                    assert!(check_right_module(h.algebra(), &m).unwrap().is_pass());
                    assert!(check_right_comodule(h.coalgebra(), &c).unwrap().is_pass());
                }
                Side::Left => {
                    assert!(check_left_module(h.algebra(), &m).unwrap().is_pass());
                    assert!(check_left_comodule(h.coalgebra(), &c).unwrap().is_pass());
                }
            }
        }
        assert!(check_bimodule(h.algebra(), h.algebra(), &HomBimodule::regular(h.algebra())).unwrap().is_pass());
    }
}

#[test]
fn unit_law_uses_mu() {
    let h = twisted_h4(q(2));
    let m = ModuleWitness::new(LinearMap::identity(4)).unwrap().with_action(Side::Right, h.algebra().mult().clone());
    assert!(!check_right_module(h.algebra(), &m).unwrap().is_pass());
    let zero = ModuleWitness::new(h.alpha().clone()).unwrap().with_action(Side::Right, LinearMap::zeros(4, 16));
    assert_eq!(check_right_module(h.algebra(), &zero).unwrap().identity(), Some("module-unit"));
}

#[test]
fn scaled_coaction_fails_counit() {
    let h = twisted_h4(q(2));
    let c = ModuleWitness::new(h.alpha().clone()).unwrap().with_coaction(Side::Right, h.coalgebra().comult().scale(&q(2)));
    assert_eq!(check_right_comodule(h.coalgebra(), &c).unwrap().identity(), Some("comodule-counit"));
}

#[test]
fn self_compatibilities() {
    for h in gallery() {
        let b = h.bialgebra();
        assert!(check_comodule_algebra(b, h.algebra(), h.coalgebra().comult()).unwrap().is_pass());
        assert!(check_module_coalgebra(b, h.coalgebra(), h.algebra().mult()).unwrap().is_pass());
        assert!(check_module_algebra(b, h.algebra(), &adjoint_or_trivial(&h)).unwrap().is_pass());
        let d = h.dim();
        // c ↦ 1 ⊗ γ⁻¹(c)
        let trivial_co = LinearMap::from_images(d * d, d, |c| {
            let g = h.coalgebra().gamma_inv().column(c);
            homent::tensor::pair(h.algebra().unit(), &g)
        });
        assert!(check_comodule_coalgebra(b, h.coalgebra(), &trivial_co).unwrap().is_pass());
        assert!(!check_comodule_coalgebra(b, h.coalgebra(), h.coalgebra().comult()).unwrap().is_pass() || d == 1);
        // g·h = α(g)ε(h)
        let trivial = LinearMap::from_images(d, d * d, |c| {
            let eps = h.coalgebra().counit().get(0, c % d).clone();
            h.alpha().column(c / d).into_iter().map(|x| x * eps.clone()).collect()
        });
        assert!(check_module_coalgebra(b, h.coalgebra(), &trivial).unwrap().is_pass());
    }
}

/// `b·a = ε(b)α(a)`, a module algebra structure for every bialgebra.
fn adjoint_or_trivial(h: &HomHopfAlgebra<Rational>) -> LinearMap<Rational> {
    let d = h.dim();
    LinearMap::from_images(d, d * d, |c| {
        let eps = h.coalgebra().counit().get(0, c / d).clone();
        h.alpha().column(c % d).into_iter().map(|x| x * eps.clone()).collect()
    })
}

#[test]
fn balanced_tensor_dimensions() {
    for h in gallery() {
        let a = h.algebra();
        let t = tensor_over_a(a, &ModuleWitness::regular(a, Side::Right), &ModuleWitness::regular(a, Side::Left)).unwrap();
        assert_eq!(t.dim(), a.dim());
        let qi = t.quotient();
        assert!(qi.projection().compose(&qi.section()).is_identity());
        for r in qi.relations() {
            assert!(qi.project(&r).iter().all(Field::is_zero));
        }
    }
    let k = HomAlgebra::<Rational>::ground();
    let m = ModuleWitness::regular(&k, Side::Right);
    let t = tensor_over_a(&k, &m, &ModuleWitness::regular(&k, Side::Left)).unwrap();
    assert_eq!(t.dim(), 1);
}

#[test]
fn tensor_of_regular_bimodules_is_a_bimodule() {
    for h in gallery() {
        let a = h.algebra();
        let r = HomBimodule::regular(a);
        let (t, m) = tensor_bimodules(a, a, a, &r, &r).unwrap();
        assert_eq!(t.dim(), a.dim());
        assert!(check_bimodule(a, a, &m).unwrap().is_pass());
    }
}

#[test]
fn yau_twist_with_identity_is_identity() {
    let h = sweedler_h4::<Rational>();
    let t = yau_twist(h.bialgebra(), &LinearMap::identity(4)).unwrap();
    assert_eq!(&t, h.bialgebra());
}

#[test]
fn yau_twist_rejects_non_automorphisms() {
    let h = sweedler_h4::<Rational>();
    let mut m = LinearMap::identity(4);
    m.set(1, 1, q(2));
    assert!(matches!(yau_twist(h.bialgebra(), &m), Err(homent::Error::NotAutomorphism(_))));
}

#[test]
fn adjoint_structures_and_their_twists() {
    let h = sweedler_h4::<Rational>();
    let act = adjoint_action(&h);
    let co = coadjoint_coaction(&h);
    assert!(check_module_algebra(h.bialgebra(), h.algebra(), &act).unwrap().is_pass());
    assert!(check_comodule_coalgebra(h.bialgebra(), h.coalgebra(), &co).unwrap().is_pass());
    let sigma = h4_scaling(q(2));
    let t = twisted_h4(q(2));
    let sigma_inv = homent::linalg::invert(&sigma).unwrap();
    assert!(check_module_algebra(t.bialgebra(), t.algebra(), &sigma.compose(&act)).unwrap().is_pass());
    assert!(check_comodule_coalgebra(t.bialgebra(), t.coalgebra(), &co.compose(&sigma_inv)).unwrap().is_pass());
    assert!(!check_module_algebra(t.bialgebra(), t.algebra(), &act).unwrap().is_pass());
}
