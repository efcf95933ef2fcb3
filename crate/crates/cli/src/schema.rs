//! The JSON input format.
//!
//! Scalars are strings in the field's syntax (`"3/2"`, `"(q+1)/q"`),
//! algebra elements are polynomial strings over the declared generators
//! (`"-x*g"`), finite-dimensional elements are maps from basis names to
//! coefficients. Every map is a `BTreeMap`, so the canonical rendering has
//! sorted keys.

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

pub type Table = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkbenchInput {
    /// `"Q"` or `"Q(<var>)"`.
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finite_hopf: Option<FiniteHopfSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation_hopf: Option<PresentationSpec>,
    /// Rows of `F` for `H(F)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hf_matrix: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sle_tensor: Option<SleSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub characters: Vec<CharacterSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coreps: Vec<CorepSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cobraiding: Option<CobraidingSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cotwist: Vec<CotwistSpec>,
    #[serde(default)]
    pub options: Options,
}

/// Structure constants on a named basis. Each list entry is one nonzero
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteHopfSpec {
    pub label: String,
    pub basis: Vec<String>,
    /// `[a, b, c, k]`: `a·b` has coefficient `k` on `c`.
    pub mult: Vec<[String; 4]>,
    pub unit: Table,
    /// `[a, b, c, k]`: `Δ(a)` has coefficient `k` on `b⊗c`.
    pub comult: Vec<[String; 4]>,
    pub counit: Table,
    /// `[a, b, k]`: `S(a)` has coefficient `k` on `b`.
    pub antipode: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<Vec<[String; 3]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    pub label: String,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    /// Per generator, the coproduct as a list of `[left, right]` legs.
    pub comult: BTreeMap<String, Vec<[String; 2]>>,
    pub counit: Table,
    pub antipode: Table,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<Table>,
    /// Matrix representations that kill the relations; used to refute
    /// non-members soundly.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sovereign_elements: Vec<GroupLikeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSpec {
    pub label: String,
    pub images: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupLikeSpec {
    pub label: String,
    pub element: String,
    pub inverse: String,
}

/// A multilinear form `E` on `kⁿ`; `entries` maps 1-based index tuples such
/// as `"1,2"` to the nonzero values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SleSpec {
    pub n: usize,
    pub arity: usize,
    pub entries: Table,
}

/// Values on generators (presented) or on basis elements (finite).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterSpec {
    pub label: String,
    pub values: Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Poly(String),
    Coords(Table),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorepSpec {
    pub label: String,
    /// Matrix coefficients `a_ij`, row by row.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<ElementSpec>>>,
    /// The regular corepresentation of a finite-dimensional algebra.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub regular: bool,
}

/// `sigma[x][y] = σ(x, y)` on generators. With `solve`, the table is
/// obtained by the constraint solver; when both are present they are
/// cross-checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CobraidingSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<BTreeMap<String, Table>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_inv: Option<BTreeMap<String, Table>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solve: Option<SolveSpec>,
}

/// Unknowns are named `s_<x>_<y>`. `fixed` pins a branch before solving;
/// `defaults` binds parameters left free by the constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveSpec {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub fixed: Table,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub defaults: Table,
}

/// A cotwist `τ` and its claimed inverse as convolution products of
/// factors: `eps`, `lambda`, `beta`, a character label, or `<label>^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CotwistSpec {
    pub label: String,
    pub tau: Vec<String>,
    pub tau_inv: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DegreeBound {
    #[default]
    Auto,
    Fixed(usize),
}

impl Serialize for DegreeBound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DegreeBound::Auto => s.serialize_str("auto"),
            DegreeBound::Fixed(d) => s.serialize_u64(*d as u64),
        }
    }
}

impl<'de> Deserialize<'de> for DegreeBound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(DegreeBound::Fixed(n)),
            Raw::Text(t) if t == "auto" => Ok(DegreeBound::Auto),
            Raw::Text(t) => Err(de::Error::custom(format!("degree_bound must be \"auto\" or a number, got {t:?}"))),
        }
    }
}

fn default_cap() -> usize {
    6
}

fn default_word_degree() -> usize {
    3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default)]
    pub degree_bound: DegreeBound,
    #[serde(default = "default_cap")]
    pub degree_cap: usize,
    /// Word length for the cobraiding and cotwist identities.
    #[serde(default = "default_word_degree")]
    pub word_degree: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { degree_bound: DegreeBound::Auto, degree_cap: default_cap(), word_degree: default_word_degree() }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("schema types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}
