//! Constructions that add derived objects to a store.

use std::collections::BTreeMap;

use homent::coring::{base_ring_extension, dual_algebra, sweedler_coring, trivial_coring, DualSide};
use homent::doi_koppinen::{entwining_from_alt_dk, entwining_from_dk, long_entwining, yd_datum, yetter_drinfeld_entwining};
use homent::entwining::{comodule_from_entwined, coring_from_entwining, entwined_from_comodule, entwining_from_coring, koppinen_smash_with, LegOrder};
use homent::Error;

use crate::format::Object;
use crate::scalar::Scalar;
use crate::store::{encode_algebra, encode_coring, encode_entwining, LoadError, Store, Value};

/// Name, required arguments and what it adds.
pub const CONSTRUCTIONS: &[(&str, &[&str], &str)] = &[
    ("trivial_coring", &["algebra"], "the trivial coring over an algebra"),
    ("sweedler_coring", &["morphism"], "the Sweedler coring of B -> A, over A"),
    ("base_ring_extension", &["coring", "morphism"], "the extension of an A-coring along A -> B"),
    ("coring_from_entwining", &["entwining"], "the coring A (x) C of an entwining"),
    ("entwining_from_coring", &["coring", "coalgebra"], "the entwining recovered from a coring A (x) C"),
    ("entwining_from_dk", &["datum"], "the entwining of a Doi-Koppinen datum"),
    ("entwining_from_alt_dk", &["datum"], "the entwining of an alternative datum"),
    ("yetter_drinfeld_entwining", &["pair"], "the Yetter-Drinfeld entwining of an automorphism pair"),
    ("yd_datum", &["pair"], "the Doi-Koppinen datum of an automorphism pair"),
    ("long_entwining", &["bialgebra"], "the Long entwining of a bialgebra"),
    ("koppinen_smash", &["entwining"], "the smash algebra of maps C -> A (optional order=displayed|swapped)"),
    ("dual_algebra", &["coring", "side"], "a dual algebra of a coring, side=left|right|two-sided"),
    ("comodule_from_entwined", &["entwining", "witness"], "the coring comodule of an entwined module"),
    ("entwined_from_comodule", &["entwining", "witness"], "the entwined module of a coring comodule"),
];

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("unknown construction {0:?}")]
    Unknown(String),
    #[error("argument error: {0}")]
    Argument(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("construction failed: {0}")]
    Failed(String),
}

fn failed(e: Error) -> ConstructError {
    ConstructError::Failed(e.to_string())
}

/// Runs `construction` on `store`, appending its output objects; returns the new names.
pub fn construct<F: Scalar>(store: &mut Store<F>, construction: &str, args: &BTreeMap<String, String>) -> Result<Vec<String>, ConstructError> {
    let (_, required, _) = CONSTRUCTIONS.iter().find(|(n, _, _)| *n == construction).ok_or_else(|| ConstructError::Unknown(construction.into()))?;
    for key in args.keys() {
        if !required.contains(&key.as_str()) && key != "name" && !(construction == "koppinen_smash" && key == "order") {
            return Err(ConstructError::Argument(format!("{construction} does not take {key:?}")));
        }
    }
    let arg = |key: &str| -> Result<String, ConstructError> {
        args.get(key).cloned().ok_or_else(|| ConstructError::Argument(format!("{construction} needs {key}=NAME")))
    };
    let before = store.entries.len();
    let out = |default: String| args.get("name").cloned().unwrap_or(default);
    match construction {
        "trivial_coring" => {
            let a = arg("algebra")?;
            let c = trivial_coring(store.algebra(&a)?);
            store.push(encode_coring(&out(format!("{a}.trivial")), &c, &a))?;
        }
        "sweedler_coring" => {
            let m = arg("morphism")?;
            let (phi, base) = morphism(store, &m)?;
            let c = sweedler_coring(&phi).map_err(failed)?;
            store.push(encode_coring(&out(format!("{m}.sweedler")), &c, &base))?;
        }
        "base_ring_extension" => {
            let (c, m) = (arg("coring")?, arg("morphism")?);
            let coring = coring(store, &c)?;
            let (phi, base) = morphism(store, &m)?;
            let ext = base_ring_extension(&coring, &phi).map_err(failed)?;
            store.push(encode_coring(&out(format!("{c}.extended")), &ext, &base))?;
        }
        "coring_from_entwining" => {
            let e = arg("entwining")?;
            let (a, _) = entwining_parts(store, &e)?;
            let c = coring_from_entwining(&entwining(store, &e)?).map_err(failed)?;
            store.push(encode_coring(&out(format!("{e}.coring")), &c, &a))?;
        }
        "entwining_from_coring" => {
            let (c, g) = (arg("coring")?, arg("coalgebra")?);
            let base = match &store.get(&c)?.object {
                Object::Coring { base, .. } => base.clone(),
                _ => return Err(LoadError::Validation(format!("{c:?} is not a coring")).into()),
            };
            let e = entwining_from_coring(&coring(store, &c)?, store.coalgebra(&g)?).map_err(failed)?;
            store.push(encode_entwining(&out(format!("{c}.entwining")), &e, &base, &g))?;
        }
        "entwining_from_dk" | "entwining_from_alt_dk" => {
            let d = arg("datum")?;
            let (e, a, c) = match (&store.get(&d)?.value, &store.get(&d)?.object) {
                (Value::Dk(v), Object::DkDatum { algebra, coalgebra, .. }) if construction == "entwining_from_dk" => {
                    (entwining_from_dk(v).map_err(failed)?, algebra.clone(), coalgebra.clone())
                }
                (Value::AltDk(v), Object::AltDkDatum { algebra, coalgebra, .. }) if construction == "entwining_from_alt_dk" => {
                    (entwining_from_alt_dk(v).map_err(failed)?, algebra.clone(), coalgebra.clone())
                }
                _ => return Err(LoadError::Validation(format!("{d:?} is not a datum of the right kind")).into()),
            };
            store.push(encode_entwining(&out(format!("{d}.psi")), &e, &a, &c))?;
        }
        "yetter_drinfeld_entwining" | "yd_datum" => {
            let p = arg("pair")?;
            let pair = match &store.get(&p)?.value {
                Value::Pair(v) => v.clone(),
                _ => return Err(LoadError::Validation(format!("{p:?} is not an automorphism pair")).into()),
            };
            if construction == "yd_datum" {
                let d = yd_datum(&pair).map_err(failed)?;
                store.ensure_dk(&d, &out(format!("{p}.datum")))?;
            } else {
                let hopf = match &store.get(&p)?.object {
                    Object::AutomorphismPair { hopf, .. } => hopf.clone(),
                    _ => unreachable!("value and object kinds agree"),
                };
                let (a, c) = store.bialgebra_parts(&hopf)?;
                let e = yetter_drinfeld_entwining(&pair).map_err(failed)?;
                store.push(encode_entwining(&out(format!("{p}.psi")), &e, &a, &c))?;
            }
        }
        "long_entwining" => {
            let b = arg("bialgebra")?;
            let e = long_entwining(store.bialgebra(&b)?);
            let (a, c) = store.bialgebra_parts(&b)?;
            store.push(encode_entwining(&out(format!("{b}.long")), &e, &a, &c))?;
        }
        "koppinen_smash" => {
            let e = arg("entwining")?;
            let order = match args.get("order").map(String::as_str) {
                None | Some("displayed") => LegOrder::Displayed,
                Some("swapped") => LegOrder::Swapped,
                Some(o) => return Err(ConstructError::Argument(format!("order must be displayed or swapped, not {o:?}"))),
            };
            let smash = koppinen_smash_with(&entwining(store, &e)?, order).map_err(failed)?;
            store.push(encode_algebra(&out(format!("{e}.smash")), smash.maps.algebra()))?;
        }
        "dual_algebra" => {
            let c = arg("coring")?;
            let side = match arg("side")?.as_str() {
                "left" => DualSide::Left,
                "right" => DualSide::Right,
                "two-sided" => DualSide::TwoSided,
                s => return Err(ConstructError::Argument(format!("side must be left, right or two-sided, not {s:?}"))),
            };
            let dual = dual_algebra(&coring(store, &c)?, side).map_err(failed)?;
            store.push(encode_algebra(&out(format!("{c}.dual.{}", arg("side")?)), dual.maps.algebra()))?;
        }
        "comodule_from_entwined" | "entwined_from_comodule" => {
            let (e, w) = (arg("entwining")?, arg("witness")?);
            let ent = entwining(store, &e)?;
            let witness = match &store.get(&w)?.value {
                Value::Witness(v) => v.clone(),
                _ => return Err(LoadError::Validation(format!("{w:?} is not a module witness")).into()),
            };
            if construction == "comodule_from_entwined" {
                let coring_name = format!("{e}.coring");
                if store.get(&coring_name).is_err() {
                    let (a, _) = entwining_parts(store, &e)?;
                    let c = coring_from_entwining(&ent).map_err(failed)?;
                    store.push(encode_coring(&coring_name, &c, &a))?;
                }
                let m = comodule_from_entwined(&ent, &witness).map_err(failed)?;
                store.push_witness(&out(format!("{w}.comodule")), &m, &[&coring_name])?;
            } else {
                let m = entwined_from_comodule(&ent, &witness).map_err(failed)?;
                store.push_witness(&out(format!("{w}.entwined")), &m, &[&e])?;
            }
        }
        _ => unreachable!("listed constructions are handled"),
    }
    Ok(store.entries[before..].iter().map(|e| e.object.name().to_string()).collect())
}

fn morphism<F: Scalar>(store: &Store<F>, name: &str) -> Result<(homent::structures::AlgebraMorphism<F>, String), ConstructError> {
    match (&store.get(name)?.value, &store.get(name)?.object) {
        (Value::Morphism(m), Object::AlgebraMorphism { target, .. }) => Ok((m.clone(), target.clone())),
        _ => Err(LoadError::Validation(format!("{name:?} is not an algebra morphism")).into()),
    }
}

fn coring<F: Scalar>(store: &Store<F>, name: &str) -> Result<homent::coring::HomCoring<F>, ConstructError> {
    match &store.get(name)?.value {
        Value::Coring(c) => Ok(c.clone()),
        _ => Err(LoadError::Validation(format!("{name:?} is not a coring")).into()),
    }
}

fn entwining<F: Scalar>(store: &Store<F>, name: &str) -> Result<homent::entwining::EntwiningStructure<F>, ConstructError> {
    match &store.get(name)?.value {
        Value::Entwining(e) => Ok(e.clone()),
        _ => Err(LoadError::Validation(format!("{name:?} is not an entwining")).into()),
    }
}

fn entwining_parts<F: Scalar>(store: &Store<F>, name: &str) -> Result<(String, String), ConstructError> {
    match &store.get(name)?.object {
        Object::Entwining { algebra, coalgebra, .. } => Ok((algebra.clone(), coalgebra.clone())),
        _ => Err(LoadError::Validation(format!("{name:?} is not an entwining")).into()),
    }
}
