//! Resolving a document into checked core values, and encoding values back into objects.

use homent::coring::HomCoring;
use homent::doi_koppinen::{AlternativeDkDatum, DoiKoppinenDatum, HopfAutomorphismPair};
use homent::entwining::EntwiningStructure;
use homent::structures::module::{Action, Coaction, ModuleWitness, Side};
use homent::structures::{AlgebraMorphism, HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra};
use homent::{Error, LinearMap};

use crate::format::{canonical_axes, Document, MapData, Object, SideName, SidedMap, FORMAT_VERSION};
use crate::scalar::{FieldKind, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

fn built<T>(name: &str, r: Result<T, Error>) -> Result<T, LoadError> {
    r.map_err(|e| invalid(format!("{name}: {e}")))
}

fn invalid(msg: impl Into<String>) -> LoadError {
    LoadError::Validation(msg.into())
}

/// Parses JSON text into a document, reporting syntax and schema errors with their position.
pub fn parse_document(text: &str) -> Result<(Document, FieldKind), LoadError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| LoadError::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(LoadError::Parse(format!("unsupported format_version {}", doc.format_version)));
    }
    let kind = FieldKind::parse(&doc.field).map_err(LoadError::Parse)?;
    Ok((doc, kind))
}

#[derive(Clone, Debug)]
pub enum Value<F> {
    Algebra(HomAlgebra<F>),
    Coalgebra(HomCoalgebra<F>),
    Bialgebra(HomBialgebra<F>),
    Hopf(HomHopfAlgebra<F>),
    Morphism(AlgebraMorphism<F>),
    Witness(ModuleWitness<F>),
    Entwining(EntwiningStructure<F>),
    Coring(HomCoring<F>),
    Dk(DoiKoppinenDatum<F>),
    AltDk(AlternativeDkDatum<F>),
    Pair(HopfAutomorphismPair<F>),
}

#[derive(Clone, Debug)]
pub struct Entry<F> {
    pub object: Object,
    pub value: Value<F>,
}

#[derive(Clone, Debug)]
pub struct Store<F> {
    pub field: FieldKind,
    pub entries: Vec<Entry<F>>,
}

impl<F: Scalar> Store<F> {
    pub fn new(field: FieldKind) -> Self {
        Store { field, entries: Vec::new() }
    }

    pub fn get(&self, name: &str) -> Result<&Entry<F>, LoadError> {
        self.entries.iter().find(|e| e.object.name() == name).ok_or_else(|| invalid(format!("unknown object {name:?}")))
    }

    /// Resolves `object` against the entries loaded so far and appends it.
    /// Adds an object, storing its coefficients in canonical form.
    pub fn push(&mut self, mut object: Object) -> Result<(), LoadError> {
        if self.get(object.name()).is_ok() {
            return Err(invalid(format!("duplicate object name {:?}", object.name())));
        }
        let value = self.resolve(&object)?;
        for map in object.maps_mut() {
            for x in &mut map.data {
                if let Some(v) = F::parse(x) {
                    *x = v.render();
                }
            }
        }
        self.entries.push(Entry { object, value });
        Ok(())
    }

    pub fn load(doc: &Document, field: FieldKind) -> Result<Self, LoadError> {
        let mut store = Store::new(field);
        for object in &doc.objects {
            store.push(object.clone())?;
        }
        Ok(store)
    }

    pub fn document(&self) -> Document {
        Document { format_version: FORMAT_VERSION, field: self.field.descriptor(), objects: self.entries.iter().map(|e| e.object.clone()).collect() }
    }

    pub fn algebra(&self, name: &str) -> Result<&HomAlgebra<F>, LoadError> {
        match &self.get(name)?.value {
            Value::Algebra(a) => Ok(a),
            _ => Err(invalid(format!("{name:?} is not a hom-algebra"))),
        }
    }

    pub fn coalgebra(&self, name: &str) -> Result<&HomCoalgebra<F>, LoadError> {
        match &self.get(name)?.value {
            Value::Coalgebra(c) => Ok(c),
            _ => Err(invalid(format!("{name:?} is not a hom-coalgebra"))),
        }
    }

    /// A hom-bialgebra, or the bialgebra underlying a hom-hopf object.
    pub fn bialgebra(&self, name: &str) -> Result<&HomBialgebra<F>, LoadError> {
        match &self.get(name)?.value {
            Value::Bialgebra(b) => Ok(b),
            Value::Hopf(h) => Ok(h.bialgebra()),
            _ => Err(invalid(format!("{name:?} is not a hom-bialgebra"))),
        }
    }

    pub fn hopf(&self, name: &str) -> Result<&HomHopfAlgebra<F>, LoadError> {
        match &self.get(name)?.value {
            Value::Hopf(h) => Ok(h),
            _ => Err(invalid(format!("{name:?} is not a hom-hopf object"))),
        }
    }

    fn resolve(&self, object: &Object) -> Result<Value<F>, LoadError> {
        let name = object.name();
        let ctx = |what: &str| format!("{name}.{what}");
        Ok(match object {
            Object::HomAlgebra { dim, mult, unit, alpha, .. } => {
                let d = *dim;
                let mult = decode(mult, &[d], &[d, d], &ctx("mult"))?;
                let unit = decode(unit, &[d], &[], &ctx("unit"))?;
                let alpha = decode(alpha, &[d], &[d], &ctx("alpha"))?;
                Value::Algebra(built(name, HomAlgebra::new(mult, unit.into_data(), alpha))?)
            }
            Object::HomCoalgebra { dim, comult, counit, gamma, .. } => {
                let d = *dim;
                let comult = decode(comult, &[d, d], &[d], &ctx("comult"))?;
                let counit = decode(counit, &[], &[d], &ctx("counit"))?;
                let gamma = decode(gamma, &[d], &[d], &ctx("gamma"))?;
                Value::Coalgebra(built(name, HomCoalgebra::new(comult, counit.into_data(), gamma))?)
            }
            Object::HomBialgebra { algebra, coalgebra, .. } => {
                let (a, c) = (self.algebra(algebra)?.clone(), self.coalgebra(coalgebra)?.clone());
                Value::Bialgebra(built(name, HomBialgebra::new(a, c))?)
            }
            Object::HomHopf { bialgebra, antipode, .. } => {
                let b = self.bialgebra(bialgebra)?.clone();
                let d = b.dim();
                let s = decode(antipode, &[d], &[d], &ctx("antipode"))?;
                Value::Hopf(built(name, HomHopfAlgebra::new(b, s))?)
            }
            Object::AlgebraMorphism { source, target, matrix, .. } => {
                let (s, t) = (self.algebra(source)?.clone(), self.algebra(target)?.clone());
                let m = decode(matrix, &[t.dim()], &[s.dim()], &ctx("matrix"))?;
                Value::Morphism(built(name, AlgebraMorphism::new(s, t, m))?)
            }
            Object::ModuleWitness { dim, mu, action, coaction, over, .. } => {
                let n = *dim;
                let mut w = built(name, ModuleWitness::new(decode(mu, &[n], &[n], &ctx("mu"))?))?;
                if let Some(SidedMap { side, map }) = action {
                    let k = acting_dim(map, *side, n, &ctx("action"))?;
                    let (ins, side) = match side {
                        SideName::Right => ([n, k], Side::Right),
                        SideName::Left => ([k, n], Side::Left),
                    };
                    w.action = Some(Action { side, map: decode(map, &[n], &ins, &ctx("action"))? });
                }
                if let Some(SidedMap { side, map }) = coaction {
                    let k = coacting_dim(map, *side, n, &ctx("coaction"))?;
                    let (outs, side) = match side {
                        SideName::Right => ([n, k], Side::Right),
                        SideName::Left => ([k, n], Side::Left),
                    };
                    w.coaction = Some(Coaction { side, map: decode(map, &outs, &[n], &ctx("coaction"))? });
                }
                for target in over {
                    self.witness_requirements(&w, target).map_err(|m| invalid(format!("{name}: {m}")))?;
                }
                Value::Witness(w)
            }
            Object::Entwining { algebra, coalgebra, psi, .. } => {
                let (a, c) = (self.algebra(algebra)?.clone(), self.coalgebra(coalgebra)?.clone());
                let psi = decode(psi, &[a.dim(), c.dim()], &[c.dim(), a.dim()], &ctx("psi"))?;
                Value::Entwining(built(name, EntwiningStructure::new(a, c, psi))?)
            }
            Object::Coring { base, dim, chi, left_action, right_action, comult, counit, .. } => {
                let a = self.algebra(base)?.clone();
                let (n, da) = (*dim, a.dim());
                let chi = decode(chi, &[n], &[n], &ctx("chi"))?;
                let left = decode(left_action, &[n], &[da, n], &ctx("left_action"))?;
                let right = decode(right_action, &[n], &[n, da], &ctx("right_action"))?;
                let comult = decode(comult, &[n, n], &[n], &ctx("comult"))?;
                let counit = decode(counit, &[da], &[n], &ctx("counit"))?;
                Value::Coring(built(name, HomCoring::new(a, chi, left, right, comult, counit))?)
            }
            Object::DkDatum { bialgebra, algebra, coaction, coalgebra, action, .. } => {
                let b = self.bialgebra(bialgebra)?.clone();
                let (a, c) = (self.algebra(algebra)?.clone(), self.coalgebra(coalgebra)?.clone());
                let coaction = decode(coaction, &[a.dim(), b.dim()], &[a.dim()], &ctx("coaction"))?;
                let action = decode(action, &[c.dim()], &[c.dim(), b.dim()], &ctx("action"))?;
                Value::Dk(built(name, DoiKoppinenDatum::new(b, a, coaction, c, action))?)
            }
            Object::AltDkDatum { bialgebra, algebra, action, coalgebra, coaction, .. } => {
                let b = self.bialgebra(bialgebra)?.clone();
                let (a, c) = (self.algebra(algebra)?.clone(), self.coalgebra(coalgebra)?.clone());
                let action = decode(action, &[a.dim()], &[b.dim(), a.dim()], &ctx("action"))?;
                let coaction = decode(coaction, &[b.dim(), c.dim()], &[c.dim()], &ctx("coaction"))?;
                Value::AltDk(built(name, AlternativeDkDatum::new(b, a, action, c, coaction))?)
            }
            Object::AutomorphismPair { hopf, phi, varphi, .. } => {
                let h = self.hopf(hopf)?.clone();
                let d = h.dim();
                let phi = decode(phi, &[d], &[d], &ctx("phi"))?;
                let varphi = decode(varphi, &[d], &[d], &ctx("varphi"))?;
                for (what, m) in [("phi", &phi), ("varphi", &varphi)] {
                    if homent::linalg::invert(m).is_err() {
                        return Err(invalid(format!("{name}.{what} is singular")));
                    }
                }
                Value::Pair(built(name, HopfAutomorphismPair::new(h, phi, varphi))?)
            }
        })
    }

    /// The acting and coacting dimensions a witness needs for the checks selected by `target`.
    fn witness_requirements(&self, w: &ModuleWitness<F>, target: &str) -> Result<(), String> {
        let need = |action: Option<usize>, coaction: Option<usize>| -> Result<(), String> {
            if let Some(k) = action {
                let side = w.action.as_ref().map(|a| a.side).ok_or_else(|| format!("{target:?} needs an action"))?;
                w.action_map(side, k).map_err(|e| format!("action over {target:?}: {e}"))?;
            }
            if let Some(k) = coaction {
                let side = w.coaction.as_ref().map(|c| c.side).ok_or_else(|| format!("{target:?} needs a coaction"))?;
                w.coaction_map(side, k).map_err(|e| format!("coaction over {target:?}: {e}"))?;
            }
            Ok(())
        };
        let right = |da: usize, dc: usize| -> Result<(), String> {
            w.action_map(Side::Right, da).map_err(|e| format!("{target:?} needs a right action: {e}"))?;
            w.coaction_map(Side::Right, dc).map_err(|e| format!("{target:?} needs a right coaction: {e}"))?;
            Ok(())
        };
        match &self.get(target).map_err(|e| e.to_string())?.value {
            Value::Algebra(a) => need(Some(a.dim()), None),
            Value::Coalgebra(c) => need(None, Some(c.dim())),
            Value::Coring(c) => right(c.base().dim(), c.dim()),
            Value::Entwining(e) => right(e.algebra().dim(), e.coalgebra().dim()),
            Value::Dk(d) => right(d.algebra.dim(), d.coalgebra.dim()),
            Value::AltDk(d) => right(d.algebra.dim(), d.coalgebra.dim()),
            Value::Pair(p) => right(p.hopf.dim(), p.hopf.dim()),
            Value::Bialgebra(b) => right(b.dim(), b.dim()),
            Value::Hopf(h) => right(h.dim(), h.dim()),
            Value::Morphism(_) | Value::Witness(_) => Err(format!("{target:?} does not define module checks")),
        }
    }
}

fn acting_dim(map: &MapData, side: SideName, n: usize, what: &str) -> Result<usize, LoadError> {
    match (map.dims.as_slice(), side) {
        ([_, m, k], SideName::Right) | ([_, k, m], SideName::Left) if *m == n => Ok(*k),
        _ => Err(invalid(format!("{what}: dims {:?} do not describe a {side:?} action on dimension {n}", map.dims))),
    }
}

fn coacting_dim(map: &MapData, side: SideName, n: usize, what: &str) -> Result<usize, LoadError> {
    match (map.dims.as_slice(), side) {
        ([m, k, _], SideName::Right) | ([k, m, _], SideName::Left) if *m == n => Ok(*k),
        _ => Err(invalid(format!("{what}: dims {:?} do not describe a {side:?} coaction on dimension {n}", map.dims))),
    }
}

/// Reads a map whose legs must be `outs` then `ins`.
pub fn decode<F: Scalar>(m: &MapData, outs: &[usize], ins: &[usize], what: &str) -> Result<LinearMap<F>, LoadError> {
    let axes = canonical_axes(outs.len(), ins.len());
    if m.axes != axes {
        return Err(invalid(format!("{what}: axes {:?}, expected {axes:?}", m.axes)));
    }
    let dims: Vec<usize> = outs.iter().chain(ins).copied().collect();
    if m.dims != dims {
        return Err(invalid(format!("{what}: dims {:?}, expected {dims:?}", m.dims)));
    }
    let (rows, cols) = (outs.iter().product::<usize>(), ins.iter().product::<usize>());
    if m.data.len() != rows * cols {
        return Err(invalid(format!("{what}: {} coefficients, expected {}", m.data.len(), rows * cols)));
    }
    let data = m
        .data
        .iter()
        .enumerate()
        .map(|(i, s)| F::parse(s).ok_or_else(|| LoadError::Parse(format!("{what}[{i}]: {s:?} is not an exact scalar of the field"))))
        .collect::<Result<Vec<F>, _>>()?;
    LinearMap::from_vec(rows, cols, data).map_err(|e| invalid(format!("{what}: {e}")))
}

pub fn encode<F: Scalar>(m: &LinearMap<F>, outs: &[usize], ins: &[usize]) -> MapData {
    MapData {
        axes: canonical_axes(outs.len(), ins.len()),
        dims: outs.iter().chain(ins).copied().collect(),
        data: m.data().iter().map(Scalar::render).collect(),
    }
}

fn sided(side: Side) -> SideName {
    match side {
        Side::Left => SideName::Left,
        Side::Right => SideName::Right,
    }
}

pub fn encode_algebra<F: Scalar>(name: &str, a: &HomAlgebra<F>) -> Object {
    let d = a.dim();
    Object::HomAlgebra {
        name: name.into(),
        dim: d,
        mult: encode(a.mult(), &[d], &[d, d]),
        unit: encode(&LinearMap::from_vec(d, 1, a.unit().to_vec()).expect("unit has length d"), &[d], &[]),
        alpha: encode(a.alpha(), &[d], &[d]),
    }
}

pub fn encode_coalgebra<F: Scalar>(name: &str, c: &HomCoalgebra<F>) -> Object {
    let d = c.dim();
    Object::HomCoalgebra {
        name: name.into(),
        dim: d,
        comult: encode(c.comult(), &[d, d], &[d]),
        counit: encode(c.counit(), &[], &[d]),
        gamma: encode(c.gamma(), &[d], &[d]),
    }
}

pub fn encode_witness<F: Scalar>(name: &str, w: &ModuleWitness<F>, over: &[&str]) -> Object {
    let n = w.dim();
    let action = w.action.as_ref().map(|a| {
        let k = a.map.cols() / n;
        let ins = match a.side {
            Side::Right => [n, k],
            Side::Left => [k, n],
        };
        SidedMap { side: sided(a.side), map: encode(&a.map, &[n], &ins) }
    });
    let coaction = w.coaction.as_ref().map(|c| {
        let k = c.map.rows() / n;
        let outs = match c.side {
            Side::Right => [n, k],
            Side::Left => [k, n],
        };
        SidedMap { side: sided(c.side), map: encode(&c.map, &outs, &[n]) }
    });
    Object::ModuleWitness { name: name.into(), dim: n, mu: encode(w.mu(), &[n], &[n]), action, coaction, over: over.iter().map(|s| s.to_string()).collect() }
}

pub fn encode_entwining<F: Scalar>(name: &str, e: &EntwiningStructure<F>, algebra: &str, coalgebra: &str) -> Object {
    let (da, dc) = (e.algebra().dim(), e.coalgebra().dim());
    Object::Entwining { name: name.into(), algebra: algebra.into(), coalgebra: coalgebra.into(), psi: encode(e.psi(), &[da, dc], &[dc, da]) }
}

pub fn encode_coring<F: Scalar>(name: &str, c: &HomCoring<F>, base: &str) -> Object {
    let (n, da) = (c.dim(), c.base().dim());
    Object::Coring {
        name: name.into(),
        base: base.into(),
        dim: n,
        chi: encode(c.chi(), &[n], &[n]),
        left_action: encode(c.left_action(), &[n], &[da, n]),
        right_action: encode(c.right_action(), &[n], &[n, da]),
        comult: encode(c.comult_lift(), &[n, n], &[n]),
        counit: encode(c.counit(), &[da], &[n]),
    }
}

pub fn encode_dk<F: Scalar>(name: &str, d: &DoiKoppinenDatum<F>, refs: [&str; 3]) -> Object {
    let (da, db, dc) = (d.algebra.dim(), d.bialgebra.dim(), d.coalgebra.dim());
    Object::DkDatum {
        name: name.into(),
        bialgebra: refs[0].into(),
        algebra: refs[1].into(),
        coaction: encode(&d.coaction, &[da, db], &[da]),
        coalgebra: refs[2].into(),
        action: encode(&d.action, &[dc], &[dc, db]),
    }
}

pub fn encode_alt_dk<F: Scalar>(name: &str, d: &AlternativeDkDatum<F>, refs: [&str; 3]) -> Object {
    let (da, db, dc) = (d.algebra.dim(), d.bialgebra.dim(), d.coalgebra.dim());
    Object::AltDkDatum {
        name: name.into(),
        bialgebra: refs[0].into(),
        algebra: refs[1].into(),
        action: encode(&d.action, &[da], &[db, da]),
        coalgebra: refs[2].into(),
        coaction: encode(&d.coaction, &[db, dc], &[dc]),
    }
}

pub fn encode_pair<F: Scalar>(name: &str, p: &HopfAutomorphismPair<F>, hopf: &str) -> Object {
    let d = p.hopf.dim();
    Object::AutomorphismPair { name: name.into(), hopf: hopf.into(), phi: encode(&p.phi, &[d], &[d]), varphi: encode(&p.varphi, &[d], &[d]) }
}

pub fn encode_morphism<F: Scalar>(name: &str, m: &AlgebraMorphism<F>, source: &str, target: &str) -> Object {
    Object::AlgebraMorphism { name: name.into(), source: source.into(), target: target.into(), matrix: encode(&m.matrix, &[m.target.dim()], &[m.source.dim()]) }
}

impl<F: Scalar> Store<F> {
    fn find(&self, pick: impl Fn(&Value<F>) -> bool) -> Option<String> {
        self.entries.iter().find(|e| pick(&e.value)).map(|e| e.object.name().to_string())
    }

    /// The name of an algebra object equal to `a`, adding one called `name` if there is none.
    pub fn ensure_algebra(&mut self, a: &HomAlgebra<F>, name: &str) -> Result<String, LoadError> {
        if let Some(n) = self.find(|v| matches!(v, Value::Algebra(x) if x == a)) {
            return Ok(n);
        }
        self.push(encode_algebra(name, a))?;
        Ok(name.into())
    }

    pub fn ensure_coalgebra(&mut self, c: &HomCoalgebra<F>, name: &str) -> Result<String, LoadError> {
        if let Some(n) = self.find(|v| matches!(v, Value::Coalgebra(x) if x == c)) {
            return Ok(n);
        }
        self.push(encode_coalgebra(name, c))?;
        Ok(name.into())
    }

    /// Adds the algebra and coalgebra as needed, named after `name` without a `.bialgebra` suffix.
    pub fn ensure_bialgebra(&mut self, b: &HomBialgebra<F>, name: &str) -> Result<String, LoadError> {
        if let Some(n) = self.find(|v| matches!(v, Value::Bialgebra(x) if x == b)) {
            return Ok(n);
        }
        let prefix = name.strip_suffix(".bialgebra").unwrap_or(name);
        let a = self.ensure_algebra(b.algebra(), &format!("{prefix}.algebra"))?;
        let c = self.ensure_coalgebra(b.coalgebra(), &format!("{prefix}.coalgebra"))?;
        self.push(Object::HomBialgebra { name: name.into(), algebra: a, coalgebra: c })?;
        Ok(name.into())
    }

    /// Adds `{name}.bialgebra`, `{name}.algebra` and `{name}.coalgebra` as needed.
    pub fn ensure_hopf(&mut self, h: &HomHopfAlgebra<F>, name: &str) -> Result<String, LoadError> {
        if let Some(n) = self.find(|v| matches!(v, Value::Hopf(x) if x == h)) {
            return Ok(n);
        }
        let d = h.dim();
        let b = self.ensure_bialgebra(h.bialgebra(), &format!("{name}.bialgebra"))?;
        self.push(Object::HomHopf { name: name.into(), bialgebra: b, antipode: encode(h.antipode(), &[d], &[d]) })?;
        Ok(name.into())
    }

    /// Names of the algebra and coalgebra objects of a bialgebra or Hopf object.
    pub fn bialgebra_parts(&self, name: &str) -> Result<(String, String), LoadError> {
        match &self.get(name)?.object {
            Object::HomHopf { bialgebra, .. } => self.bialgebra_parts(bialgebra),
            Object::HomBialgebra { algebra, coalgebra, .. } => Ok((algebra.clone(), coalgebra.clone())),
            _ => Err(invalid(format!("{name:?} is not a hom-bialgebra or hom-hopf object"))),
        }
    }

    pub fn ensure_entwining(&mut self, e: &EntwiningStructure<F>, name: &str) -> Result<String, LoadError> {
        let a = self.ensure_algebra(e.algebra(), &format!("{name}.algebra"))?;
        let c = self.ensure_coalgebra(e.coalgebra(), &format!("{name}.coalgebra"))?;
        self.push(encode_entwining(name, e, &a, &c))?;
        Ok(name.into())
    }

    pub fn ensure_coring(&mut self, c: &HomCoring<F>, name: &str) -> Result<String, LoadError> {
        let base = self.ensure_algebra(c.base(), &format!("{name}.base"))?;
        self.push(encode_coring(name, c, &base))?;
        Ok(name.into())
    }

    pub fn ensure_dk(&mut self, d: &DoiKoppinenDatum<F>, name: &str) -> Result<String, LoadError> {
        let b = self.ensure_bialgebra(&d.bialgebra, &format!("{name}.bialgebra"))?;
        let a = self.ensure_algebra(&d.algebra, &format!("{name}.algebra"))?;
        let c = self.ensure_coalgebra(&d.coalgebra, &format!("{name}.coalgebra"))?;
        self.push(encode_dk(name, d, [&b, &a, &c]))?;
        Ok(name.into())
    }

    pub fn ensure_alt_dk(&mut self, d: &AlternativeDkDatum<F>, name: &str) -> Result<String, LoadError> {
        let b = self.ensure_bialgebra(&d.bialgebra, &format!("{name}.bialgebra"))?;
        let a = self.ensure_algebra(&d.algebra, &format!("{name}.algebra"))?;
        let c = self.ensure_coalgebra(&d.coalgebra, &format!("{name}.coalgebra"))?;
        self.push(encode_alt_dk(name, d, [&b, &a, &c]))?;
        Ok(name.into())
    }

    pub fn ensure_pair(&mut self, p: &HopfAutomorphismPair<F>, name: &str) -> Result<String, LoadError> {
        let h = self.ensure_hopf(&p.hopf, &format!("{name}.hopf"))?;
        self.push(encode_pair(name, p, &h))?;
        Ok(name.into())
    }

    pub fn push_witness(&mut self, name: &str, w: &ModuleWitness<F>, over: &[&str]) -> Result<(), LoadError> {
        self.push(encode_witness(name, w, over))
    }
}
