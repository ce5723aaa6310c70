//! JSON file formats. Every index is 0-based, scalars are strings `"n"` or
//! `"n/d"`, and zero entries are omitted on output.

use hopfbrace_core::brace::{CoStructure, HopfBraceData, HopfCoBraceData, HopfStructure};
use hopfbrace_core::lsa::LeftSymmetricAlgebra;
use hopfbrace_core::matched::MatchedPairData;
use hopfbrace_core::skew::{FiniteGroup, SkewBrace};
use hopfbrace_core::yang_baxter::SetSolution;
use hopfbrace_core::{FieldSpec, HopfAlgebraData, LinMap, Scalar, Space};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

/// Input that does not match its declared schema; maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaError(pub String);

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for SchemaError {}

impl From<hopfbrace_core::Error> for SchemaError {
    fn from(e: hopfbrace_core::Error) -> Self {
        SchemaError(e.to_string())
    }
}

pub type SchemaResult<T> = Result<T, SchemaError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum FieldJson {
    Q,
    GF { p: u64 },
}

impl FieldJson {
    pub fn spec(self) -> SchemaResult<FieldSpec> {
        match self {
            FieldJson::Q => Ok(FieldSpec::Rationals),
            FieldJson::GF { p } => Ok(FieldSpec::prime(p)?),
        }
    }
}

impl From<FieldSpec> for FieldJson {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldJson::Q,
            FieldSpec::Prime(p) => FieldJson::GF { p: p.into() },
        }
    }
}

/// `Q`, `GF:p` or `GF(p)`, as accepted by `--field`.
pub fn parse_field(text: &str) -> SchemaResult<FieldSpec> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let p = t
        .strip_prefix("GF:")
        .or_else(|| t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')))
        .ok_or_else(|| SchemaError(format!("unknown field {text:?}; expected Q or GF:p")))?;
    let p: u64 = p.parse().map_err(|_| SchemaError(format!("bad modulus in {text:?}")))?;
    Ok(FieldSpec::prime(p)?)
}

pub type Entry3 = (usize, usize, usize, String);
pub type Entry2 = (usize, usize, String);
pub type Entry1 = (usize, String);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfJson {
    pub field: FieldJson,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub mul: Vec<Entry3>,
    pub unit: Vec<Entry1>,
    pub comul: Vec<Entry3>,
    pub counit: Vec<Entry1>,
    pub antipode: Vec<Entry2>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureJson {
    pub mul: Vec<Entry3>,
    pub unit: Vec<Entry1>,
    pub antipode: Vec<Entry2>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceJson {
    pub field: FieldJson,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub comul: Vec<Entry3>,
    pub counit: Vec<Entry1>,
    pub dot: StructureJson,
    pub circ: StructureJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoStructureJson {
    pub comul: Vec<Entry3>,
    pub counit: Vec<Entry1>,
    pub antipode: Vec<Entry2>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoBraceJson {
    pub field: FieldJson,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub mul: Vec<Entry3>,
    pub unit: Vec<Entry1>,
    pub dot: CoStructureJson,
    pub circ: CoStructureJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedJson {
    pub hopf: HopfJson,
    pub left: Vec<Entry3>,
    pub right: Vec<Entry3>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkewJson {
    pub n: usize,
    pub dot: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
    pub identity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LsaJson {
    pub field: FieldJson,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub prod: Vec<Entry3>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSolutionJson {
    pub n: usize,
    pub r: Vec<[usize; 4]>,
}

impl From<&SetSolution> for SetSolutionJson {
    fn from(s: &SetSolution) -> Self {
        let r = (0..s.n)
            .flat_map(|i| (0..s.n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let (a, b) = s.apply(i, j);
                [i, j, a, b]
            })
            .collect();
        SetSolutionJson { n: s.n, r }
    }
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> SchemaResult<T> {
    serde_json::from_str(text).map_err(|e| SchemaError(format!("malformed input: {e}")))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Resolves the file's field against a `--field` override.
fn field_of(declared: FieldJson, over: Option<FieldSpec>) -> SchemaResult<FieldSpec> {
    match over {
        Some(f) => Ok(f),
        None => declared.spec(),
    }
}

fn scalar(field: FieldSpec, text: &str) -> SchemaResult<Scalar> {
    field.parse(text).map_err(|e| SchemaError(format!("{e} in field {field}")))
}

fn check_index(name: &str, i: usize, dim: usize) -> SchemaResult<()> {
    if i < dim {
        Ok(())
    } else {
        Err(SchemaError(format!("{name}: index {i} out of range for dimension {dim}")))
    }
}

fn build(field: FieldSpec, dom: &[usize], cod: &[usize], name: &str, entries: impl Iterator<Item = (Vec<usize>, Vec<usize>, String)>) -> SchemaResult<LinMap> {
    let mut m = LinMap::zero(field, dom, cod);
    for (out, inp, c) in entries {
        for (i, d) in inp.iter().zip(dom).chain(out.iter().zip(cod)) {
            check_index(name, *i, *d)?;
        }
        m.add(&out, &inp, scalar(field, &c)?)?;
    }
    Ok(m)
}

fn mul_map(f: FieldSpec, n: usize, name: &str, e: &[Entry3]) -> SchemaResult<LinMap> {
    build(f, &[n, n], &[n], name, e.iter().map(|(i, j, k, c)| (vec![*k], vec![*i, *j], c.clone())))
}

fn comul_map(f: FieldSpec, n: usize, name: &str, e: &[Entry3]) -> SchemaResult<LinMap> {
    build(f, &[n], &[n, n], name, e.iter().map(|(i, j, k, c)| (vec![*j, *k], vec![*i], c.clone())))
}

fn unit_map(f: FieldSpec, n: usize, name: &str, e: &[Entry1]) -> SchemaResult<LinMap> {
    build(f, &[], &[n], name, e.iter().map(|(k, c)| (vec![*k], vec![], c.clone())))
}

fn counit_map(f: FieldSpec, n: usize, name: &str, e: &[Entry1]) -> SchemaResult<LinMap> {
    build(f, &[n], &[], name, e.iter().map(|(i, c)| (vec![], vec![*i], c.clone())))
}

fn endo_map(f: FieldSpec, n: usize, name: &str, e: &[Entry2]) -> SchemaResult<LinMap> {
    build(f, &[n], &[n], name, e.iter().map(|(i, k, c)| (vec![*k], vec![*i], c.clone())))
}

fn mul_entries(m: &LinMap) -> Vec<Entry3> {
    m.entries().map(|(o, i, c)| (i[0], i[1], o[0], c.encode())).collect()
}

fn comul_entries(m: &LinMap) -> Vec<Entry3> {
    m.entries().map(|(o, i, c)| (i[0], o[0], o[1], c.encode())).collect()
}

fn unit_entries(m: &LinMap) -> Vec<Entry1> {
    m.entries().map(|(o, _, c)| (o[0], c.encode())).collect()
}

fn counit_entries(m: &LinMap) -> Vec<Entry1> {
    m.entries().map(|(_, i, c)| (i[0], c.encode())).collect()
}

fn endo_entries(m: &LinMap) -> Vec<Entry2> {
    m.entries().map(|(o, i, c)| (i[0], o[0], c.encode())).collect()
}

fn space(field: FieldSpec, dim: usize, basis: &Option<Vec<String>>) -> SchemaResult<Space> {
    match basis {
        Some(labels) if labels.len() != dim => Err(SchemaError(format!("basis has {} labels, dim is {dim}", labels.len()))),
        Some(labels) => Ok(Space::new(field, labels.clone())?),
        None => Ok(Space::numbered(field, dim)?),
    }
}

fn labels_out(s: &Space) -> Option<Vec<String>> {
    Some(s.labels.clone())
}

impl HopfJson {
    pub fn decode(&self, over: Option<FieldSpec>) -> SchemaResult<HopfAlgebraData> {
        let f = field_of(self.field, over)?;
        let n = self.dim;
        Ok(HopfAlgebraData::new(
            space(f, n, &self.basis)?,
            mul_map(f, n, "mul", &self.mul)?,
            unit_map(f, n, "unit", &self.unit)?,
            comul_map(f, n, "comul", &self.comul)?,
            counit_map(f, n, "counit", &self.counit)?,
            endo_map(f, n, "antipode", &self.antipode)?,
        )?)
    }

    pub fn encode(h: &HopfAlgebraData) -> Self {
        HopfJson {
            field: h.field().into(),
            dim: h.dim(),
            basis: labels_out(&h.space),
            mul: mul_entries(&h.mul),
            unit: unit_entries(&h.unit),
            comul: comul_entries(&h.comul),
            counit: counit_entries(&h.counit),
            antipode: endo_entries(&h.antipode),
        }
    }
}

impl StructureJson {
    fn decode(&self, f: FieldSpec, n: usize, prefix: &str) -> SchemaResult<HopfStructure> {
        Ok(HopfStructure {
            mul: mul_map(f, n, &format!("{prefix}.mul"), &self.mul)?,
            unit: unit_map(f, n, &format!("{prefix}.unit"), &self.unit)?,
            antipode: endo_map(f, n, &format!("{prefix}.antipode"), &self.antipode)?,
        })
    }

    fn encode(s: &HopfStructure) -> Self {
        StructureJson { mul: mul_entries(&s.mul), unit: unit_entries(&s.unit), antipode: endo_entries(&s.antipode) }
    }
}

impl BraceJson {
    pub fn decode(&self, over: Option<FieldSpec>) -> SchemaResult<HopfBraceData> {
        let f = field_of(self.field, over)?;
        let n = self.dim;
        Ok(HopfBraceData {
            space: space(f, n, &self.basis)?,
            comul: comul_map(f, n, "comul", &self.comul)?,
            counit: counit_map(f, n, "counit", &self.counit)?,
            dot: self.dot.decode(f, n, "dot")?,
            circ: self.circ.decode(f, n, "circ")?,
        })
    }

    pub fn encode(b: &HopfBraceData) -> Self {
        BraceJson {
            field: b.field().into(),
            dim: b.dim(),
            basis: labels_out(&b.space),
            comul: comul_entries(&b.comul),
            counit: counit_entries(&b.counit),
            dot: StructureJson::encode(&b.dot),
            circ: StructureJson::encode(&b.circ),
        }
    }
}

impl CoStructureJson {
    fn decode(&self, f: FieldSpec, n: usize, prefix: &str) -> SchemaResult<CoStructure> {
        Ok(CoStructure {
            comul: comul_map(f, n, &format!("{prefix}.comul"), &self.comul)?,
            counit: counit_map(f, n, &format!("{prefix}.counit"), &self.counit)?,
            antipode: endo_map(f, n, &format!("{prefix}.antipode"), &self.antipode)?,
        })
    }

    fn encode(s: &CoStructure) -> Self {
        CoStructureJson { comul: comul_entries(&s.comul), counit: counit_entries(&s.counit), antipode: endo_entries(&s.antipode) }
    }
}

impl CoBraceJson {
    pub fn decode(&self, over: Option<FieldSpec>) -> SchemaResult<HopfCoBraceData> {
        let f = field_of(self.field, over)?;
        let n = self.dim;
        Ok(HopfCoBraceData {
            space: space(f, n, &self.basis)?,
            mul: mul_map(f, n, "mul", &self.mul)?,
            unit: unit_map(f, n, "unit", &self.unit)?,
            dot: self.dot.decode(f, n, "dot")?,
            circ: self.circ.decode(f, n, "circ")?,
        })
    }

    pub fn encode(cb: &HopfCoBraceData) -> Self {
        CoBraceJson {
            field: cb.space.field.into(),
            dim: cb.space.dim(),
            basis: labels_out(&cb.space),
            mul: mul_entries(&cb.mul),
            unit: unit_entries(&cb.unit),
            dot: CoStructureJson::encode(&cb.dot),
            circ: CoStructureJson::encode(&cb.circ),
        }
    }
}

impl MatchedJson {
    pub fn decode(&self, over: Option<FieldSpec>) -> SchemaResult<MatchedPairData> {
        let h = self.hopf.decode(over)?;
        let (f, n) = (h.field(), h.dim());
        let left = mul_map(f, n, "left", &self.left)?;
        let right = mul_map(f, n, "right", &self.right)?;
        Ok(MatchedPairData { circ_hopf: h, left, right })
    }

    pub fn encode(mp: &MatchedPairData) -> Self {
        MatchedJson { hopf: HopfJson::encode(&mp.circ_hopf), left: mul_entries(&mp.left), right: mul_entries(&mp.right) }
    }
}

/// A skew-brace file whose tables may fail the group axioms; that is an
/// audit outcome, not a schema error.
pub struct SkewTables {
    pub dot: Result<FiniteGroup, String>,
    pub circ: Result<FiniteGroup, String>,
    pub identity: usize,
}

impl SkewJson {
    pub fn decode(&self) -> SchemaResult<SkewTables> {
        for (name, t) in [("dot", &self.dot), ("circ", &self.circ)] {
            if t.len() != self.n || t.iter().any(|row| row.len() != self.n || row.iter().any(|&x| x >= self.n)) {
                return Err(SchemaError(format!("{name} is not an {0}x{0} table of indices below {0}", self.n)));
            }
        }
        check_index("identity", self.identity, self.n)?;
        let group = |t: &Vec<Vec<usize>>| FiniteGroup::new(t.clone()).map_err(|e| e.to_string());
        Ok(SkewTables { dot: group(&self.dot), circ: group(&self.circ), identity: self.identity })
    }

    pub fn encode(sb: &SkewBrace) -> Self {
        SkewJson { n: sb.order(), dot: sb.dot.table().to_vec(), circ: sb.circ.table().to_vec(), identity: sb.dot.identity() }
    }
}

impl LsaJson {
    pub fn decode(&self, over: Option<FieldSpec>) -> SchemaResult<LeftSymmetricAlgebra> {
        let f = field_of(self.field, over)?;
        if let Some(names) = &self.names {
            if names.len() != self.dim {
                return Err(SchemaError(format!("names has {} entries, dim is {}", names.len(), self.dim)));
            }
        }
        let mut entries = Vec::with_capacity(self.prod.len());
        for (i, j, k, c) in &self.prod {
            for x in [i, j, k] {
                check_index("prod", *x, self.dim)?;
            }
            entries.push((*i, *j, *k, scalar(f, c)?));
        }
        Ok(LeftSymmetricAlgebra::new(f, self.dim, &entries)?)
    }

    pub fn names(&self) -> Vec<String> {
        match &self.names {
            Some(n) => n.clone(),
            None => (0..self.dim).map(|i| format!("v{i}")).collect(),
        }
    }

    pub fn encode(v: &LeftSymmetricAlgebra, names: Option<Vec<String>>) -> Self {
        LsaJson {
            field: v.field().into(),
            dim: v.dim(),
            names,
            prod: v.entries().into_iter().map(|(i, j, k, c)| (i, j, k, c.encode())).collect(),
        }
    }
}
