//! JSON documents for algebras and modules.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BasisElem, BoundQuiver, PathAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::Module;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub label: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coef: i64,
    pub elem: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDoc {
    pub left: String,
    pub right: String,
    pub terms: Vec<TermDoc>,
}

/// An algebra given by structure constants.  Only nonzero products are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraTableDoc {
    pub field: u32,
    pub vertices: Vec<String>,
    pub basis: Vec<BasisDoc>,
    pub idempotents: Vec<String>,
    pub products: Vec<ProductDoc>,
}

impl AlgebraTableDoc {
    pub fn from_algebra(a: &Algebra) -> Self {
        let name = |v: usize| a.vertex_name(v).to_string();
        let label = |k: usize| a.elem(k).label.clone();
        let mut products = Vec::new();
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let t = a.product(x, y);
                if t.is_empty() {
                    continue;
                }
                products.push(ProductDoc {
                    left: label(x),
                    right: label(y),
                    terms: t.iter().map(|&(k, c)| TermDoc { coef: c as i64, elem: label(k) }).collect(),
                });
            }
        }
        AlgebraTableDoc {
            field: a.modulus(),
            vertices: a.vertices().to_vec(),
            basis: a
                .basis()
                .iter()
                .map(|b| BasisDoc { label: b.label.clone(), source: name(b.source), target: name(b.target) })
                .collect(),
            idempotents: a.idempotents().iter().map(|&k| label(k)).collect(),
            products,
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let vidx = |s: &str| {
            self.vertices.iter().position(|v| v == s).ok_or_else(|| Error::Parse(format!("unknown vertex {s}")))
        };
        let bidx = |s: &str| {
            self.basis
                .iter()
                .position(|b| b.label == s)
                .ok_or_else(|| Error::Parse(format!("unknown basis element {s}")))
        };
        let mut basis = Vec::new();
        for (k, b) in self.basis.iter().enumerate() {
            if self.basis[..k].iter().any(|c| c.label == b.label) {
                return Err(Error::Parse(format!("duplicate basis label {}", b.label)));
            }
            basis.push(BasisElem { label: b.label.clone(), source: vidx(&b.source)?, target: vidx(&b.target)? });
        }
        let idempotents = self.idempotents.iter().map(|l| bidx(l)).collect::<Result<Vec<_>>>()?;
        let p = self.field;
        let mut products = BTreeMap::new();
        for pr in &self.products {
            let key = (bidx(&pr.left)?, bidx(&pr.right)?);
            if products.contains_key(&key) {
                return Err(Error::Parse(format!("product {}·{} listed twice", pr.left, pr.right)));
            }
            let terms = pr
                .terms
                .iter()
                .map(|t| Ok((bidx(&t.elem)?, t.coef.rem_euclid(p.max(1) as i64) as u32)))
                .collect::<Result<Vec<_>>>()?;
            products.insert(key, terms);
        }
        Algebra::from_table(p, self.vertices.clone(), basis, idempotents, products)
    }
}

/// A bound quiver document, optionally pinning the path-length bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    #[serde(flatten)]
    pub quiver: BoundQuiver,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
}

/// Either kind of algebra document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraDoc {
    Table(AlgebraTableDoc),
    Quiver(QuiverDoc),
}

/// An algebra read from a document, with its quiver data when it has one.
#[derive(Clone, Debug)]
pub struct LoadedAlgebra {
    pub algebra: Algebra,
    pub path: Option<PathAlgebra>,
}

/// Largest path length tried when a quiver document does not pin one.
pub const AUTO_MAX_LEN: usize = 32;

pub fn parse_algebra(text: &str) -> Result<LoadedAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    load_algebra_doc(&doc)
}

pub fn load_algebra_doc(doc: &AlgebraDoc) -> Result<LoadedAlgebra> {
    match doc {
        AlgebraDoc::Table(t) => Ok(LoadedAlgebra { algebra: t.to_algebra()?, path: None }),
        AlgebraDoc::Quiver(q) => {
            let pa = match q.max_len {
                Some(m) => q.quiver.path_algebra(m)?,
                None => q.quiver.path_algebra_auto(AUTO_MAX_LEN)?,
            };
            Ok(LoadedAlgebra { algebra: pa.algebra.clone(), path: Some(pa) })
        }
    }
}

/// Canonical serialization: pretty JSON with a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// A module over an algebra given by the full action matrix (row-vector
/// convention, total space ordered vertex by vertex) of each basis element.
/// Idempotents may be omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleDoc {
    /// The algebra's fingerprint, or an inline algebra document.
    pub algebra: serde_json::Value,
    pub dims: Vec<usize>,
    pub action: BTreeMap<String, Vec<Vec<i64>>>,
}

impl ModuleDoc {
    pub fn from_module(m: &Module) -> Self {
        let a = m.algebra();
        let mut action = BTreeMap::new();
        for (k, b) in a.basis().iter().enumerate() {
            if a.is_idempotent(k) {
                continue;
            }
            action.insert(b.label.clone(), m.total_matrix(k).to_i64_rows());
        }
        ModuleDoc { algebra: serde_json::Value::String(a.fingerprint().to_string()), dims: m.dims().to_vec(), action }
    }

    /// Reads the module over `alg`; an inline algebra must match it.
    pub fn to_module(&self, alg: &std::sync::Arc<Algebra>) -> Result<Module> {
        match &self.algebra {
            serde_json::Value::String(h) => {
                if h != alg.fingerprint() {
                    return Err(Error::AlgebraMismatch);
                }
            }
            other => {
                let doc: AlgebraDoc = serde_json::from_value(other.clone()).map_err(|e| Error::Parse(e.to_string()))?;
                if load_algebra_doc(&doc)?.algebra != **alg {
                    return Err(Error::AlgebraMismatch);
                }
            }
        }
        let p = alg.modulus();
        if self.dims.len() != alg.n_vertices() {
            return Err(Error::Parse("dims has the wrong length".into()));
        }
        let total: usize = self.dims.iter().sum();
        let mut mats = Vec::new();
        for (k, b) in alg.basis().iter().enumerate() {
            let m = match self.action.get(&b.label) {
                Some(rows) => {
                    if rows.len() != total || rows.iter().any(|r| r.len() != total) {
                        return Err(Error::Parse(format!("action of {} is not {total}x{total}", b.label)));
                    }
                    Mat::from_rows(p, total, rows)
                }
                None if alg.is_idempotent(k) => Module::idempotent_total(&self.dims, b.source, p),
                None => Mat::zeros(p, total, total),
            };
            mats.push(m);
        }
        for l in self.action.keys() {
            if alg.basis_index(l).is_none() {
                return Err(Error::Parse(format!("unknown basis element {l}")));
            }
        }
        Module::from_total(alg.clone(), self.dims.clone(), &mats)
    }
}
