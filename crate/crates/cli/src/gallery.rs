//! Built-in example files.

use homent::coring::{base_ring_extension, sweedler_coring, trivial_coring};
use homent::doi_koppinen::{
    adjoint_alt_dk, entwining_from_alt_dk, entwining_from_dk, long_entwining, relative_datum, sign_z2_alt_dk, yetter_drinfeld_entwining, HopfAutomorphismPair,
};
use homent::entwining::{comodule_from_entwined, coring_from_entwining, EntwiningStructure};
use homent::structures::examples::{cyclic_group_hopf, cyclic_power_map, h4_scaling, sweedler_h4, twisted_h4};
use homent::structures::module::{ModuleWitness, Side};
use homent::structures::{yau_twist_hopf, AlgebraMorphism, HomAlgebra, HomHopfAlgebra};
use homent::witness::{counit_module, free_entwined_module, free_right_module};
use homent::{Field, Rational};

use crate::format::Document;
use crate::scalar::FieldKind;
use crate::store::{encode_morphism, LoadError, Store};

pub const GALLERY: &[(&str, &str)] = &[
    ("group_z2", "k[Z/2] with identity twist"),
    ("group_z3_twist", "k[Z/3] twisted along g -> g^2"),
    ("h4_twisted", "Sweedler's Hopf algebra twisted along x -> 2x"),
    ("flip_entwining_z2", "the flip entwining on k[Z/2], its coring and a comodule over it"),
    ("dk_self_h4", "twisted H4 as a relative datum over itself"),
    ("yd_z2_id", "Yetter-Drinfeld entwining on k[Z/2] with identity automorphisms"),
    ("yd_h4_antipode_sq_inv", "anti Yetter-Drinfeld entwining on twisted H4 (phi = id, phi' = S^-2)"),
    ("long_z2", "Long entwining on k[Z/2]"),
    ("sweedler_coring_z2_over_k", "Sweedler coring of k -> k[Z/2] and the extension of the trivial k-coring"),
    ("alt_dk_z2", "alternative datum: k[Z/2] acting on itself by g.g = -g, coacting on its dual"),
    ("alt_dk_h4_adjoint", "alternative datum: twisted H4 acting adjointly on itself, coacting coadjointly"),
];

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown example {0:?}")]
pub struct UnknownExample(pub String);

pub fn build(name: &str) -> Result<Document, UnknownExample> {
    let mut s = Store::<Rational>::new(FieldKind::Rational);
    let built = match name {
        "group_z2" => hopf_with_regular(&mut s, "Z2", &cyclic_group_hopf(2)),
        "group_z3_twist" => hopf_with_regular(&mut s, "Z3t", &z3_twisted()),
        "h4_twisted" => hopf_with_regular(&mut s, "H4t", &twisted_h4(Rational::from_i64(2))),
        "flip_entwining_z2" => flip(&mut s),
        "dk_self_h4" => dk_self(&mut s),
        "yd_z2_id" => yd(&mut s, "Z2", HopfAutomorphismPair::plain(cyclic_group_hopf(2))),
        "yd_h4_antipode_sq_inv" => yd(&mut s, "H4t", HopfAutomorphismPair::anti(twisted_h4(Rational::from_i64(2))).expect("S is invertible")),
        "long_z2" => long(&mut s),
        "sweedler_coring_z2_over_k" => sweedler(&mut s),
        "alt_dk_z2" => alt(&mut s, "Z2", "sign", &sign_z2_alt_dk()),
        "alt_dk_h4_adjoint" => {
            alt(&mut s, "H4t", "adjoint", &adjoint_alt_dk(&sweedler_h4(), &h4_scaling(Rational::from_i64(2))).expect("x -> 2x is a Hopf automorphism"))
        }
        _ => return Err(UnknownExample(name.into())),
    };
    built.expect("gallery objects are well formed");
    Ok(s.document())
}

fn z3_twisted() -> HomHopfAlgebra<Rational> {
    yau_twist_hopf(&cyclic_group_hopf(3), &cyclic_power_map(3, 2)).expect("g -> g^2 is a Hopf automorphism")
}

/// `H` with the regular action and comultiplication coaction, a relative Hopf module over `H` itself.
fn hopf_with_regular(s: &mut Store<Rational>, name: &str, h: &HomHopfAlgebra<Rational>) -> Result<(), LoadError> {
    s.ensure_hopf(h, name)?;
    let (a, c) = s.bialgebra_parts(name)?;
    let d = relative_datum(h.bialgebra(), h.algebra(), h.coalgebra().comult()).expect("matching shapes");
    let relative = format!("{name}.relative");
    s.ensure_dk(&d, &relative)?;
    let w = ModuleWitness::regular(h.algebra(), Side::Right).with_coaction(Side::Right, h.coalgebra().comult().clone());
    s.push_witness(&format!("{name}.regular"), &w, &[&a, &c, &relative])
}

/// The free entwined module on the regular module, checked over every name in `over`.
fn free_witness(s: &mut Store<Rational>, name: &str, e: &EntwiningStructure<Rational>, over: &[&str]) -> Result<(), LoadError> {
    let w = free_entwined_module(e, &free_right_module(e.algebra(), 1).expect("regular module")).expect("valid module");
    s.push_witness(name, &w, over)
}

fn flip(s: &mut Store<Rational>) -> Result<(), LoadError> {
    let h = cyclic_group_hopf::<Rational>(2);
    s.ensure_hopf(&h, "Z2")?;
    let e = EntwiningStructure::flip(h.algebra().clone(), h.coalgebra().clone());
    s.ensure_entwining(&e, "flip")?;
    let coring = coring_from_entwining(&e).expect("entwinings give corings");
    s.ensure_coring(&coring, "flip.coring")?;
    let w = free_entwined_module(&e, &counit_module(h.bialgebra())).expect("valid module");
    s.push_witness("flip.free", &w, &["flip"])?;
    let comodule = comodule_from_entwined(&e, &w).expect("entwined modules translate");
    s.push_witness("flip.free.comodule", &comodule, &["flip.coring"])
}

fn dk_self(s: &mut Store<Rational>) -> Result<(), LoadError> {
    let h = twisted_h4(Rational::from_i64(2));
    s.ensure_hopf(&h, "H4t")?;
    let d = relative_datum(h.bialgebra(), h.algebra(), h.coalgebra().comult()).expect("4-dimensional shapes");
    s.ensure_dk(&d, "self")?;
    let e = entwining_from_dk(&d).expect("valid datum");
    s.ensure_entwining(&e, "self.psi")?;
    free_witness(s, "self.free", &e, &["self", "self.psi"])
}

fn yd(s: &mut Store<Rational>, hopf: &str, p: HopfAutomorphismPair<Rational>) -> Result<(), LoadError> {
    s.ensure_hopf(&p.hopf, hopf)?;
    s.ensure_pair(&p, "yd")?;
    let e = yetter_drinfeld_entwining(&p).expect("valid pair");
    s.ensure_entwining(&e, "yd.psi")?;
    free_witness(s, "yd.free", &e, &["yd", "yd.psi"])
}

fn long(s: &mut Store<Rational>) -> Result<(), LoadError> {
    let h = cyclic_group_hopf::<Rational>(2);
    s.ensure_hopf(&h, "Z2")?;
    let e = long_entwining(h.bialgebra());
    s.ensure_entwining(&e, "long")?;
    free_witness(s, "long.free", &e, &["Z2.bialgebra", "long"])
}

fn sweedler(s: &mut Store<Rational>) -> Result<(), LoadError> {
    let k = HomAlgebra::<Rational>::ground();
    let a = cyclic_group_hopf::<Rational>(2).algebra().clone();
    s.ensure_algebra(&k, "k")?;
    s.ensure_algebra(&a, "Z2.algebra")?;
    let phi = AlgebraMorphism::unit_map(&a);
    s.push(encode_morphism("unit", &phi, "k", "Z2.algebra"))?;
    s.ensure_coring(&sweedler_coring(&phi).expect("valid morphism"), "sweedler")?;
    let trivial = trivial_coring(&k);
    s.ensure_coring(&trivial, "k.trivial")?;
    s.ensure_coring(&base_ring_extension(&trivial, &phi).expect("valid morphism"), "k.trivial.extended")?;
    Ok(())
}

fn alt(s: &mut Store<Rational>, hopf: &str, name: &str, d: &homent::doi_koppinen::AlternativeDkDatum<Rational>) -> Result<(), LoadError> {
    s.ensure_bialgebra(&d.bialgebra, &format!("{hopf}.bialgebra"))?;
    s.ensure_coalgebra(&d.coalgebra, &format!("{name}.coalgebra"))?;
    s.ensure_alt_dk(d, name)?;
    let e = entwining_from_alt_dk(d).expect("valid datum");
    let psi = format!("{name}.psi");
    s.ensure_entwining(&e, &psi)?;
    free_witness(s, &format!("{name}.free"), &e, &[name, &psi])
}
