//! JSON relation files.
//!
//! ```json
//! { "elements": ["a","b","c"], "equal": [["a","b"]], "less": [["a","b"]] }
//! ```
//!
//! `equal` is optional. A partial order uses `sim` in place of `less`.
//! Loaded matrices are taken as written, without saturation, and then
//! validated, so a file that disagrees with its own equality is rejected.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::OrdError;
use crate::matrix::BoolMatrix;
use crate::seq::EvConstSeq;
use crate::setoid::{check_well_defined, PosetRel, Setoid, StrictRel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub equal: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub less: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sim: Option<Vec<[String; 2]>>,
}

fn labelled_pairs(base: &Setoid, pairs: impl Iterator<Item = (usize, usize)>) -> Vec<[String; 2]> {
    pairs.map(|(i, j)| [base.label(i).to_string(), base.label(j).to_string()]).collect()
}

impl RelationFile {
    /// Lists every related pair, so the emitted file is well defined as written.
    pub fn from_strict(r: &StrictRel) -> Self {
        let base = r.base();
        RelationFile {
            elements: base.labels().to_vec(),
            equal: labelled_pairs(base, base.equal_pairs().into_iter()),
            less: Some(labelled_pairs(base, r.matrix().pairs())),
            sim: None,
        }
    }

    pub fn from_poset(p: &PosetRel) -> Self {
        let base = p.base();
        RelationFile {
            elements: base.labels().to_vec(),
            equal: labelled_pairs(base, base.equal_pairs().into_iter()),
            less: None,
            sim: Some(labelled_pairs(base, p.matrix().pairs())),
        }
    }

    pub fn to_structure(&self) -> Result<Instance, LoadError> {
        let base = Setoid::new(self.elements.iter().cloned(), self.equal.iter().map(|[a, b]| (a, b)))?;
        let matrix = |pairs: &[[String; 2]]| -> Result<BoolMatrix, LoadError> {
            let mut m = BoolMatrix::new(base.len());
            for [a, b] in pairs {
                m.set(base.index_of(a)?, base.index_of(b)?, true);
            }
            Ok(m)
        };
        match (&self.less, &self.sim) {
            (Some(less), None) => {
                let r = StrictRel::raw(base.clone(), matrix(less)?)?;
                if let Some(w) = check_well_defined(&r).witness() {
                    let l = |i: usize| base.label(i).to_string();
                    return Err(LoadError::IllDefined { x: l(w[0]), x2: l(w[1]), y: l(w[2]), y2: l(w[3]) });
                }
                Ok(Instance::Strict(r))
            }
            (None, Some(sim)) => {
                let m = matrix(sim)?;
                PosetRel::from_matrix(base.clone(), m).map(Instance::Poset).map_err(|e| match e {
                    OrdError::IllDefined((x, y), (x2, y2)) => {
                        let l = |i: usize| base.label(i).to_string();
                        LoadError::IllDefined { x: l(x), x2: l(x2), y: l(y), y2: l(y2) }
                    }
                    other => LoadError::Invalid(other),
                })
            }
            _ => Err(LoadError::Schema("expected exactly one of `less` or `sim`".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "relation", rename_all = "lowercase")]
pub enum Instance {
    Strict(StrictRel),
    Poset(PosetRel),
}

impl Serialize for StrictRel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RelationFile::from_strict(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for StrictRel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match RelationFile::deserialize(d)?.to_structure() {
            Ok(Instance::Strict(r)) => Ok(r),
            Ok(Instance::Poset(_)) => Err(serde::de::Error::custom("expected `less`, found `sim`")),
            Err(e) => Err(serde::de::Error::custom(e)),
        }
    }
}

impl Serialize for PosetRel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RelationFile::from_poset(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PosetRel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match RelationFile::deserialize(d)?.to_structure() {
            Ok(Instance::Poset(p)) => Ok(p),
            Ok(Instance::Strict(_)) => Err(serde::de::Error::custom("expected `sim`, found `less`")),
            Err(e) => Err(serde::de::Error::custom(e)),
        }
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid structure: {0}")]
    Invalid(#[from] OrdError),
    #[error("relation is not well defined: {x} < {y} but not {x2} < {y2}, although {x} = {x2} and {y} = {y2}")]
    IllDefined { x: String, x2: String, y: String, y2: String },
}

impl LoadError {
    /// 1 for anything wrong with the text, 2 when the structure it describes
    /// violates its own invariants.
    pub fn exit_code(&self) -> i32 {
        match self {
            LoadError::Json(_) | LoadError::Schema(_) => 1,
            LoadError::Invalid(OrdError::NotPoset { .. }) | LoadError::IllDefined { .. } => 2,
            LoadError::Invalid(_) => 1,
        }
    }
}

pub fn parse_relation(text: &str) -> Result<Instance, LoadError> {
    serde_json::from_str::<RelationFile>(text)?.to_structure()
}

pub fn parse_strict(text: &str) -> Result<StrictRel, LoadError> {
    match parse_relation(text)? {
        Instance::Strict(r) => Ok(r),
        Instance::Poset(_) => Err(LoadError::Schema("expected a strict relation (`less`)".into())),
    }
}

pub fn emit_strict(r: &StrictRel) -> String {
    serde_json::to_string_pretty(&RelationFile::from_strict(r)).expect("plain data serializes")
}

pub fn emit_poset(p: &PosetRel) -> String {
    serde_json::to_string_pretty(&RelationFile::from_poset(p)).expect("plain data serializes")
}

pub fn emit(instance: &Instance) -> String {
    match instance {
        Instance::Strict(r) => emit_strict(r),
        Instance::Poset(p) => emit_poset(p),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeqSpec {
    #[serde(default)]
    pub prefix: Vec<String>,
    pub tail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeqCompareFile {
    pub base: RelationFile,
    pub f: SeqSpec,
    pub g: SeqSpec,
}

/// Both sequences share one base structure.
pub fn parse_seq_compare(text: &str) -> Result<(EvConstSeq, EvConstSeq), LoadError> {
    let file: SeqCompareFile = serde_json::from_str(text)?;
    let base = match file.base.to_structure()? {
        Instance::Strict(r) => Arc::new(r),
        Instance::Poset(_) => return Err(LoadError::Schema("`base` must be a strict relation".into())),
    };
    let f = EvConstSeq::from_labels(Arc::clone(&base), &file.f.prefix, &file.f.tail)?;
    let g = EvConstSeq::from_labels(base, &file.g.prefix, &file.g.tail)?;
    Ok((f, g))
}
