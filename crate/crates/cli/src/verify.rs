//! Running checkers over the objects of a loaded store.

use std::collections::BTreeSet;
use std::time::Instant;

use homent::coring::{check_comodule_over_coring, check_coring};
use homent::doi_koppinen::{
    check_alt_dk_datum, check_alt_dk_module, check_automorphism_pair, check_dk_datum, check_dk_module, check_long_module, check_yd_module,
};
use homent::entwining::{check_entwined_module, check_entwining};
use homent::structures::module::{check_left_comodule, check_left_module, check_right_comodule, check_right_module, ModuleWitness, Side};
use homent::structures::{check_algebra_morphism, check_antipode, check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra};
use homent::{Result as CoreResult, Verdict};
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;
use crate::store::{Entry, LoadError, Store, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One checker run on one object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub object: String,
    pub check: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lhs: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rhs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub micros: u64,
}

/// A check to run: its name and, for witnesses, the object it is checked over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planned {
    pub check: &'static str,
    pub over: Option<String>,
}

/// The checks that apply to `entry`.
pub fn plan<F: Scalar>(store: &Store<F>, entry: &Entry<F>) -> Vec<Planned> {
    let own = |check| vec![Planned { check, over: None }];
    match &entry.value {
        Value::Algebra(_) => own("hom-algebra"),
        Value::Coalgebra(_) => own("hom-coalgebra"),
        Value::Bialgebra(_) => own("hom-bialgebra"),
        Value::Hopf(_) => own("antipode"),
        Value::Morphism(_) => own("algebra-morphism"),
        Value::Entwining(_) => own("entwining"),
        Value::Coring(_) => own("coring"),
        Value::Dk(_) => own("dk-datum"),
        Value::AltDk(_) => own("alt-dk-datum"),
        Value::Pair(_) => own("automorphism-pair"),
        Value::Witness(w) => entry
            .object
            .references()
            .into_iter()
            .filter_map(|target| {
                let check = witness_check(&store.get(target).ok()?.value, w)?;
                Some(Planned { check, over: Some(target.to_string()) })
            })
            .collect(),
    }
}

fn witness_check<F>(target: &Value<F>, w: &ModuleWitness<F>) -> Option<&'static str> {
    let action = w.action.as_ref().map(|a| a.side);
    let coaction = w.coaction.as_ref().map(|c| c.side);
    Some(match target {
        Value::Algebra(_) => match action? {
            Side::Right => "right-module",
            Side::Left => "left-module",
        },
        Value::Coalgebra(_) => match coaction? {
            Side::Right => "right-comodule",
            Side::Left => "left-comodule",
        },
        Value::Coring(_) => "coring-comodule",
        Value::Entwining(_) => "entwined-module",
        Value::Dk(_) => "dk-module",
        Value::AltDk(_) => "alt-dk-module",
        Value::Pair(_) => "yd-module",
        Value::Bialgebra(_) | Value::Hopf(_) => "long-module",
        Value::Morphism(_) | Value::Witness(_) => return None,
    })
}

fn evaluate<F: Scalar>(store: &Store<F>, entry: &Entry<F>, p: &Planned) -> std::result::Result<CoreResult<Verdict<F>>, LoadError> {
    let target = p.over.as_deref().map(|t| store.get(t).map(|e| &e.value)).transpose()?;
    Ok(match (&entry.value, target) {
        (Value::Algebra(a), None) => check_hom_algebra(a),
        (Value::Coalgebra(c), None) => check_hom_coalgebra(c),
        (Value::Bialgebra(b), None) => check_hom_bialgebra(b),
        (Value::Hopf(h), None) => check_antipode(h),
        (Value::Morphism(m), None) => check_algebra_morphism(m),
        (Value::Entwining(e), None) => check_entwining(e),
        (Value::Coring(c), None) => check_coring(c),
        (Value::Dk(d), None) => check_dk_datum(d),
        (Value::AltDk(d), None) => check_alt_dk_datum(d),
        (Value::Pair(p), None) => check_automorphism_pair(p),
        (Value::Witness(w), Some(t)) => match (p.check, t) {
            ("right-module", Value::Algebra(a)) => check_right_module(a, w),
            ("left-module", Value::Algebra(a)) => check_left_module(a, w),
            ("right-comodule", Value::Coalgebra(c)) => check_right_comodule(c, w),
            ("left-comodule", Value::Coalgebra(c)) => check_left_comodule(c, w),
            (_, Value::Coring(c)) => check_comodule_over_coring(c, w),
            (_, Value::Entwining(e)) => check_entwined_module(e, w),
            (_, Value::Dk(d)) => check_dk_module(d, w),
            (_, Value::AltDk(d)) => check_alt_dk_module(d, w),
            (_, Value::Pair(p)) => check_yd_module(p, w),
            (_, Value::Bialgebra(b)) => check_long_module(b, w),
            (_, Value::Hopf(h)) => check_long_module(h.bialgebra(), w),
            _ => unreachable!("planned checks match their targets"),
        },
        _ => unreachable!("planned checks match their objects"),
    })
}

pub fn run<F: Scalar>(store: &Store<F>, entry: &Entry<F>, p: &Planned) -> Record {
    let start = Instant::now();
    let outcome = evaluate(store, entry, p);
    let mut record = Record {
        object: entry.object.name().to_string(),
        check: p.check.to_string(),
        over: p.over.clone(),
        status: Status::Pass,
        identity: None,
        indices: Vec::new(),
        lhs: Vec::new(),
        rhs: Vec::new(),
        message: None,
        micros: 0,
    };
    match outcome {
        Ok(Ok(Verdict::Pass)) => {}
        Ok(Ok(Verdict::Fail(v))) => {
            record.status = Status::Fail;
            record.identity = Some(v.identity);
            record.indices = v.indices;
            record.lhs = v.lhs.iter().map(Scalar::render).collect();
            record.rhs = v.rhs.iter().map(Scalar::render).collect();
        }
        Ok(Err(e)) => {
            record.status = Status::Error;
            record.message = Some(e.to_string());
        }
        Err(e) => {
            record.status = Status::Error;
            record.message = Some(e.to_string());
        }
    }
    record.micros = start.elapsed().as_micros() as u64;
    record
}

#[derive(Clone, Debug, Default)]
pub struct Selection {
    pub object: Option<String>,
    pub check: Option<String>,
    /// Restrict to these objects.
    pub only: Option<BTreeSet<String>>,
    /// Stop after the first record that does not pass.
    pub fail_fast: bool,
}

pub fn verify<F: Scalar>(store: &Store<F>, sel: &Selection) -> Vec<Record> {
    let mut out = Vec::new();
    for entry in &store.entries {
        let name = entry.object.name();
        if sel.object.as_deref().is_some_and(|o| o != name) || sel.only.as_ref().is_some_and(|s| !s.contains(name)) {
            continue;
        }
        for p in plan(store, entry) {
            if sel.check.as_deref().is_some_and(|c| c != p.check) {
                continue;
            }
            let record = run(store, entry, &p);
            let stop = sel.fail_fast && record.status != Status::Pass;
            out.push(record);
            if stop {
                return out;
            }
        }
    }
    out
}

/// `names` together with every object that refers to one of them, directly or not.
pub fn dependents<F>(store: &Store<F>, names: &[&str]) -> BTreeSet<String> {
    let mut set: BTreeSet<String> = names.iter().map(|s| s.to_string()).collect();
    for entry in &store.entries {
        if entry.object.references().iter().any(|r| set.contains(*r)) {
            set.insert(entry.object.name().to_string());
        }
    }
    set
}
