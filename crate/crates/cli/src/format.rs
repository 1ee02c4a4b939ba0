//! The JSON container: a versioned list of named objects with dense coefficient arrays.

use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format_version: u32,
    /// `"rational"` or `"prime:p"`.
    pub field: String,
    pub objects: Vec<Object>,
}

/// A dense map. `axes` names the legs, outputs first (`"out,in1,in2"`), and `data` is
/// row-major over those legs with exact scalars written as `"p/q"` or integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapData {
    pub axes: String,
    pub dims: Vec<usize>,
    pub data: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideName {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SidedMap {
    pub side: SideName,
    pub map: MapData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Object {
    HomAlgebra {
        name: String,
        dim: usize,
        mult: MapData,
        unit: MapData,
        alpha: MapData,
    },
    HomCoalgebra {
        name: String,
        dim: usize,
        comult: MapData,
        counit: MapData,
        gamma: MapData,
    },
    HomBialgebra {
        name: String,
        algebra: String,
        coalgebra: String,
    },
    HomHopf {
        name: String,
        bialgebra: String,
        antipode: MapData,
    },
    AlgebraMorphism {
        name: String,
        source: String,
        target: String,
        matrix: MapData,
    },
    /// A space with an automorphism and optional action and coaction. Every name in `over`
    /// selects the checks to run: modules over an algebra, comodules over a coalgebra,
    /// comodules over a coring, and the compatibility condition of an entwining, a datum,
    /// an automorphism pair (Yetter-Drinfeld) or a bialgebra (Long).
    ModuleWitness {
        name: String,
        dim: usize,
        mu: MapData,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        action: Option<SidedMap>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coaction: Option<SidedMap>,
        #[serde(default)]
        over: Vec<String>,
    },
    Entwining {
        name: String,
        algebra: String,
        coalgebra: String,
        psi: MapData,
    },
    Coring {
        name: String,
        base: String,
        dim: usize,
        chi: MapData,
        left_action: MapData,
        right_action: MapData,
        /// A lift of `Δ` into `C ⊗ C`; only its class in `C ⊗_A C` matters.
        comult: MapData,
        counit: MapData,
    },
    DkDatum {
        name: String,
        bialgebra: String,
        algebra: String,
        coaction: MapData,
        coalgebra: String,
        action: MapData,
    },
    AltDkDatum {
        name: String,
        bialgebra: String,
        algebra: String,
        action: MapData,
        coalgebra: String,
        coaction: MapData,
    },
    AutomorphismPair {
        name: String,
        hopf: String,
        phi: MapData,
        varphi: MapData,
    },
}

impl Object {
    pub fn name(&self) -> &str {
        match self {
            Object::HomAlgebra { name, .. }
            | Object::HomCoalgebra { name, .. }
            | Object::HomBialgebra { name, .. }
            | Object::HomHopf { name, .. }
            | Object::AlgebraMorphism { name, .. }
            | Object::ModuleWitness { name, .. }
            | Object::Entwining { name, .. }
            | Object::Coring { name, .. }
            | Object::DkDatum { name, .. }
            | Object::AltDkDatum { name, .. }
            | Object::AutomorphismPair { name, .. } => name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Object::HomAlgebra { .. } => "hom-algebra",
            Object::HomCoalgebra { .. } => "hom-coalgebra",
            Object::HomBialgebra { .. } => "hom-bialgebra",
            Object::HomHopf { .. } => "hom-hopf",
            Object::AlgebraMorphism { .. } => "algebra-morphism",
            Object::ModuleWitness { .. } => "module-witness",
            Object::Entwining { .. } => "entwining",
            Object::Coring { .. } => "coring",
            Object::DkDatum { .. } => "dk-datum",
            Object::AltDkDatum { .. } => "alt-dk-datum",
            Object::AutomorphismPair { .. } => "automorphism-pair",
        }
    }

    /// Names of the objects this one refers to.
    pub fn references(&self) -> Vec<&str> {
        match self {
            Object::HomAlgebra { .. } | Object::HomCoalgebra { .. } => vec![],
            Object::HomBialgebra { algebra, coalgebra, .. } => vec![algebra, coalgebra],
            Object::HomHopf { bialgebra, .. } => vec![bialgebra],
            Object::AlgebraMorphism { source, target, .. } => vec![source, target],
            Object::ModuleWitness { over, .. } => over.iter().map(String::as_str).collect(),
            Object::Entwining { algebra, coalgebra, .. } => vec![algebra, coalgebra],
            Object::Coring { base, .. } => vec![base],
            Object::DkDatum { bialgebra, algebra, coalgebra, .. } | Object::AltDkDatum { bialgebra, algebra, coalgebra, .. } => {
                vec![bialgebra, algebra, coalgebra]
            }
            Object::AutomorphismPair { hopf, .. } => vec![hopf],
        }
    }

    /// Every coefficient array, in declaration order.
    pub fn maps_mut(&mut self) -> Vec<&mut MapData> {
        match self {
            Object::HomAlgebra { mult, unit, alpha, .. } => vec![mult, unit, alpha],
            Object::HomCoalgebra { comult, counit, gamma, .. } => vec![comult, counit, gamma],
            Object::HomBialgebra { .. } => vec![],
            Object::HomHopf { antipode, .. } => vec![antipode],
            Object::AlgebraMorphism { matrix, .. } => vec![matrix],
            Object::ModuleWitness { mu, action, coaction, .. } => {
                let mut out = vec![mu];
                out.extend(action.as_mut().map(|a| &mut a.map));
                out.extend(coaction.as_mut().map(|c| &mut c.map));
                out
            }
            Object::Entwining { psi, .. } => vec![psi],
            Object::Coring { chi, left_action, right_action, comult, counit, .. } => vec![chi, left_action, right_action, comult, counit],
            Object::DkDatum { coaction, action, .. } | Object::AltDkDatum { action, coaction, .. } => vec![coaction, action],
            Object::AutomorphismPair { phi, varphi, .. } => vec![phi, varphi],
        }
    }
}

/// `"out"` or `"out1,out2"`, then `"in"` or `"in1,in2,..."`.
pub fn canonical_axes(outs: usize, ins: usize) -> String {
    let legs = |prefix: &str, n: usize| -> Vec<String> {
        match n {
            0 => vec![],
            1 => vec![prefix.to_string()],
            _ => (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    };
    let mut all = legs("out", outs);
    all.extend(legs("in", ins));
    all.join(",")
}
