//! Finite-dimensional basic algebras presented by structure constants.
//!
//! An [`Algebra`] carries a basis in which every element lies in a single
//! Peirce block `e_i A e_j`, the primitive idempotents are basis elements, and
//! (when the basis is radical adapted) the remaining basis elements span the
//! Jacobson radical.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::{self, EchelonBasis, Mat};

/// One basis vector, living in `e_source · A · e_target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisElem {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// Sparse linear combination of basis elements: `(index, coefficient)`.
pub type Terms = Vec<(usize, u32)>;

#[derive(Clone)]
pub struct Algebra {
    p: u32,
    vertices: Vec<String>,
    basis: Vec<BasisElem>,
    idempotents: Vec<usize>,
    table: Vec<Terms>,
    radical: Vec<usize>,
    generators: Vec<usize>,
    adapted: std::result::Result<usize, String>,
    by_tag: Vec<Vec<usize>>,
    fingerprint: String,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(F{}, dim {}, vertices {:?})", self.p, self.dim(), self.vertices)
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}
impl Eq for Algebra {}

impl Algebra {
    /// Builds an algebra from structure constants and checks the axioms:
    /// Peirce consistency, idempotent units and associativity.  Radical
    /// adaptation is checked too but only recorded; see [`Algebra::radical`].
    pub fn from_table(
        p: u32,
        vertices: Vec<String>,
        basis: Vec<BasisElem>,
        idempotents: Vec<usize>,
        products: BTreeMap<(usize, usize), Terms>,
    ) -> Result<Algebra> {
        linalg::check_prime(p)?;
        let n = vertices.len();
        let d = basis.len();
        if idempotents.len() != n {
            return Err(Error::Parse(format!("{} idempotents for {} vertices", idempotents.len(), n)));
        }
        for b in &basis {
            if b.source >= n || b.target >= n {
                return Err(Error::Parse(format!("basis element {} has an unknown vertex", b.label)));
            }
        }
        let mut table = vec![Vec::new(); d * d];
        for ((a, b), terms) in products {
            if a >= d || b >= d {
                return Err(Error::Parse(format!("product ({a},{b}) out of range")));
            }
            let mut t: BTreeMap<usize, u32> = BTreeMap::new();
            for (k, c) in terms {
                if k >= d {
                    return Err(Error::Parse(format!("product term {k} out of range")));
                }
                let e = t.entry(k).or_insert(0);
                *e = linalg::add(*e, c % p, p);
            }
            table[a * d + b] = t.into_iter().filter(|&(_, c)| c != 0).collect();
        }
        let mut by_tag = vec![Vec::new(); n * n];
        for (k, b) in basis.iter().enumerate() {
            by_tag[b.source * n + b.target].push(k);
        }
        let mut alg = Algebra {
            p,
            vertices,
            basis,
            idempotents,
            table,
            radical: Vec::new(),
            generators: Vec::new(),
            adapted: Ok(0),
            by_tag,
            fingerprint: String::new(),
        };
        alg.check_axioms()?;
        alg.radical = (0..d).filter(|k| !alg.idempotents.contains(k)).collect();
        alg.adapted = alg.check_radical();
        alg.generators = match alg.adapted {
            Ok(_) => alg.compute_generators(),
            Err(_) => alg.radical.clone(),
        };
        alg.fingerprint = alg.compute_fingerprint();
        Ok(alg)
    }

    fn check_axioms(&self) -> Result<()> {
        let d = self.dim();
        let n = self.n_vertices();
        for (i, &e) in self.idempotents.iter().enumerate() {
            if e >= d || self.basis[e].source != i || self.basis[e].target != i {
                return Err(Error::Parse(format!("idempotent {i} is not a basis element of tag ({i},{i})")));
            }
        }
        let bad = |m: String| Err(Error::Parse(m));
        for a in 0..d {
            for b in 0..d {
                let (ba, bb) = (&self.basis[a], &self.basis[b]);
                let prod = &self.table[a * d + b];
                if ba.target != bb.source {
                    if !prod.is_empty() {
                        return bad(format!("{}·{} must vanish by Peirce tags", ba.label, bb.label));
                    }
                    continue;
                }
                for &(k, _) in prod {
                    let bk = &self.basis[k];
                    if bk.source != ba.source || bk.target != bb.target {
                        return bad(format!("{}·{} leaves its Peirce block", ba.label, bb.label));
                    }
                }
            }
        }
        for i in 0..n {
            let e = self.idempotents[i];
            for x in 0..d {
                let bx = &self.basis[x];
                let want: Terms = if bx.source == i { vec![(x, 1)] } else { vec![] };
                if self.table[e * d + x] != want {
                    return bad(format!("e{}·{} is wrong", i, bx.label));
                }
                let want: Terms = if bx.target == i { vec![(x, 1)] } else { vec![] };
                if self.table[x * d + e] != want {
                    return bad(format!("{}·e{} is wrong", bx.label, i));
                }
            }
        }
        // associativity on composable triples
        for a in 0..d {
            for b in self.starting_at(self.basis[a].target) {
                let ab = &self.table[a * d + b];
                for c in self.starting_at(self.basis[b].target) {
                    let left = self.mul_terms(ab, &[(c, 1)]);
                    let bc = &self.table[b * d + c];
                    let right = self.mul_terms(&[(a, 1)], bc);
                    if left != right {
                        return bad(format!(
                            "associativity fails on ({}, {}, {})",
                            self.basis[a].label, self.basis[b].label, self.basis[c].label
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn starting_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n_vertices();
        (0..n).flat_map(move |t| self.by_tag[v * n + t].iter().copied())
    }

    /// Verifies that the non-idempotent span is a nilpotent ideal; returns
    /// the Loewy length on success.
    fn check_radical(&self) -> std::result::Result<usize, String> {
        let d = self.dim();
        let p = self.p;
        for &r in &self.radical {
            for b in 0..d {
                for prod in [&self.table[r * d + b], &self.table[b * d + r]] {
                    if prod.iter().any(|(k, _)| self.idempotents.contains(k)) {
                        return Err(format!("product involving {} has an idempotent component", self.basis[r].label));
                    }
                }
            }
        }
        // powers of the radical as spans
        let mut layer: Vec<Vec<u32>> = self.radical.iter().map(|&r| unit(d, r)).collect();
        let mut power = 1;
        while !layer.is_empty() {
            if power > d + 1 {
                return Err("radical span is not nilpotent".into());
            }
            let mut next = Vec::new();
            for v in &layer {
                for &r in &self.radical {
                    let w = self.mul_vec(v, &unit(d, r));
                    if w.iter().any(|&x| x != 0) {
                        next.push(w);
                    }
                }
            }
            layer = if next.is_empty() { next } else { EchelonBasis::new(&rows_to_mat(p, d, &next)).basis.row_vecs() };
            power += 1;
        }
        Ok(power)
    }

    /// Radical basis elements independent modulo rad²; together with the
    /// idempotents they generate the algebra.
    fn compute_generators(&self) -> Vec<usize> {
        let d = self.dim();
        let mut rows = Vec::new();
        for &a in &self.radical {
            for &b in &self.radical {
                let t = &self.table[a * d + b];
                if !t.is_empty() {
                    rows.push(terms_to_vec(d, t));
                }
            }
        }
        let mut gens = Vec::new();
        let mut rank = EchelonBasis::new(&rows_to_mat(self.p, d, &rows)).dim();
        for &r in &self.radical {
            rows.push(unit(d, r));
            let r2 = EchelonBasis::new(&rows_to_mat(self.p, d, &rows)).dim();
            if r2 > rank {
                gens.push(r);
                rank = r2;
            } else {
                rows.pop();
            }
        }
        gens
    }

    fn compute_fingerprint(&self) -> String {
        let doc = crate::io::AlgebraTableDoc::from_algebra(self);
        let bytes = serde_json::to_vec(&doc).expect("serializable");
        hex(&Sha256::digest(&bytes))
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }
    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }
    pub fn elem(&self, k: usize) -> &BasisElem {
        &self.basis[k]
    }
    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }
    pub fn is_idempotent(&self, k: usize) -> bool {
        self.idempotents.contains(&k)
    }
    /// Basis indices of the Peirce block `e_i A e_j`.
    pub fn block(&self, i: usize, j: usize) -> &[usize] {
        &self.by_tag[i * self.n_vertices() + j]
    }
    /// Position of basis element `k` inside its Peirce block.
    pub fn block_pos(&self, k: usize) -> usize {
        let b = &self.basis[k];
        self.block(b.source, b.target).iter().position(|&x| x == k).expect("element lies in its block")
    }
    pub fn product(&self, a: usize, b: usize) -> &[(usize, u32)] {
        &self.table[a * self.dim() + b]
    }
    /// Generators of the radical modulo rad² (all radical elements when the
    /// basis is not radical adapted).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    /// Content hash of the structure constants.
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    /// The radical basis, or `NotBasisAdapted` when the non-idempotent span
    /// is not a nilpotent ideal.
    pub fn radical(&self) -> Result<&[usize]> {
        match &self.adapted {
            Ok(_) => Ok(&self.radical),
            Err(m) => Err(Error::NotBasisAdapted(m.clone())),
        }
    }

    /// Smallest `k` with rad^k = 0.
    pub fn loewy_length(&self) -> Result<usize> {
        self.adapted.clone().map_err(Error::NotBasisAdapted)
    }

    pub fn is_radical_adapted(&self) -> bool {
        self.adapted.is_ok()
    }

    pub fn mul_terms(&self, x: &[(usize, u32)], y: &[(usize, u32)]) -> Terms {
        let p = self.p;
        let d = self.dim();
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                let c = linalg::mul(ca, cb, p);
                if c == 0 {
                    continue;
                }
                for &(k, ck) in &self.table[a * d + b] {
                    let e = acc.entry(k).or_insert(0);
                    *e = linalg::add(*e, linalg::mul(c, ck, p), p);
                }
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    /// Product of dense coefficient vectors.
    pub fn mul_vec(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let d = self.dim();
        let p = self.p;
        let mut out = vec![0u32; d];
        for (a, &ca) in x.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in y.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let c = linalg::mul(ca, cb, p);
                for &(k, ck) in &self.table[a * d + b] {
                    out[k] = linalg::add(out[k], linalg::mul(c, ck, p), p);
                }
            }
        }
        out
    }

    /// Dimensions of rad^k A / rad^{k+1} A for k = 0, 1, ….
    pub fn radical_layers(&self) -> Result<Vec<usize>> {
        self.radical()?;
        let d = self.dim();
        let mut dims = vec![self.n_vertices()];
        let mut layer: Vec<Vec<u32>> = self.radical.iter().map(|&r| unit(d, r)).collect();
        let mut prev = layer.len();
        while prev > 0 {
            let mut next = Vec::new();
            for v in &layer {
                for &r in &self.radical {
                    let w = self.mul_vec(v, &unit(d, r));
                    if w.iter().any(|&x| x != 0) {
                        next.push(w);
                    }
                }
            }
            let nb = EchelonBasis::new(&rows_to_mat(self.p, d, &next));
            dims.push(prev - nb.dim());
            prev = nb.dim();
            layer = nb.basis.row_vecs();
        }
        Ok(dims)
    }

    /// The dual bimodule DA with its left and right actions.
    pub fn dual_bimodule(&self) -> BimoduleDual {
        let d = self.dim();
        // (a·x*)(y) = x*(y a): coefficient of x in y·a
        // (x*·b)(y) = x*(b y): coefficient of x in b·y
        let mut left = vec![Vec::new(); d * d];
        let mut right = vec![Vec::new(); d * d];
        for a in 0..d {
            for y in 0..d {
                for &(x, c) in self.product(y, a) {
                    left[a * d + x].push((y, c));
                }
                for &(x, c) in self.product(a, y) {
                    right[x * d + a].push((y, c));
                }
            }
        }
        for t in left.iter_mut().chain(right.iter_mut()) {
            t.sort();
        }
        let labels = self.basis.iter().map(|b| format!("{}*", b.label)).collect();
        let tags = self.basis.iter().map(|b| (b.target, b.source)).collect();
        BimoduleDual { dim: d, labels, tags, left, right }
    }

    /// The duplicated algebra: lower triangular matrices `[[a, 0], [f, b]]`
    /// with `a` in the plain copy, `b` in the dotted copy and `f` in DA.
    pub fn duplicated(&self) -> Result<Algebra> {
        let d = self.dim();
        let n = self.n_vertices();
        let dual = self.dual_bimodule();
        let mut vertices = self.vertices.clone();
        vertices.extend(self.vertices.iter().map(|v| dotted_name(v)));
        let mut basis = self.basis.clone();
        basis.extend(self.basis.iter().map(|b| BasisElem {
            label: dotted_name(&b.label),
            source: b.source + n,
            target: b.target + n,
        }));
        // f in DA with Peirce tag (j, i) sits in e_{j•} Ā e_i
        basis.extend((0..d).map(|k| BasisElem {
            label: dual.labels[k].clone(),
            source: dual.tags[k].0 + n,
            target: dual.tags[k].1,
        }));
        let mut idempotents = self.idempotents.clone();
        idempotents.extend(self.idempotents.iter().map(|&e| e + d));
        let mut products = BTreeMap::new();
        let shift = |t: &[(usize, u32)], s: usize| -> Terms { t.iter().map(|&(k, c)| (k + s, c)).collect() };
        for a in 0..d {
            for b in 0..d {
                let t = self.product(a, b);
                if !t.is_empty() {
                    products.insert((a, b), t.to_vec());
                    products.insert((a + d, b + d), shift(t, d));
                }
                // corner · plain = right action f·a
                let t = &dual.right[a * d + b];
                if !t.is_empty() {
                    products.insert((a + 2 * d, b), shift(t, 2 * d));
                }
                // dotted · corner = left action b·f
                let t = &dual.left[a * d + b];
                if !t.is_empty() {
                    products.insert((a + d, b + 2 * d), shift(t, 2 * d));
                }
            }
        }
        Algebra::from_table(self.p, vertices, basis, idempotents, products)
    }

    /// `A / ⟨e⟩` for `e` the sum of the idempotents at `killed`.
    pub fn quotient_by_idempotent(&self, killed: &[usize]) -> Result<QuotientAlgebra> {
        let d = self.dim();
        let n = self.n_vertices();
        let p = self.p;
        let mut rows = Vec::new();
        for &i in killed {
            for x in (0..n).flat_map(|s| self.block(s, i).to_vec()) {
                for y in (0..n).flat_map(|t| self.block(i, t).to_vec()) {
                    let t = self.product(x, y);
                    if !t.is_empty() {
                        rows.push(terms_to_vec(d, t));
                    }
                }
            }
        }
        // order columns so idempotents are pivoted last and survive as
        // representatives of the quotient
        let mut order: Vec<usize> = (0..d).filter(|k| !self.is_idempotent(*k)).collect();
        order.extend(self.idempotents.iter().copied());
        let permuted: Vec<Vec<u32>> = rows.iter().map(|r| order.iter().map(|&k| r[k]).collect()).collect();
        let ideal = EchelonBasis::new(&rows_to_mat(p, d, &permuted));
        let keep: Vec<usize> = {
            let mut k: Vec<usize> = ideal.complement().iter().map(|&c| order[c]).collect();
            k.sort();
            k
        };
        let kept_vertices: Vec<usize> = (0..n).filter(|v| !killed.contains(v)).collect();
        let vmap: HashMap<usize, usize> = kept_vertices.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let kmap: HashMap<usize, usize> = keep.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let reduce = |t: &[(usize, u32)]| -> Terms {
            let v = terms_to_vec(d, t);
            let pv: Vec<u32> = order.iter().map(|&k| v[k]).collect();
            let q = ideal.quotient_coords(&pv);
            // complement columns are in permuted order; translate back
            let comp = ideal.complement();
            let mut out: Vec<(usize, u32)> =
                comp.iter().zip(q).filter(|(_, c)| *c != 0).map(|(&col, c)| (kmap[&order[col]], c)).collect();
            out.sort();
            out
        };
        let mut basis = Vec::new();
        for &k in &keep {
            let b = &self.basis[k];
            let (Some(&s), Some(&t)) = (vmap.get(&b.source), vmap.get(&b.target)) else {
                return Err(Error::AssertionFailure(format!(
                    "{} survives the quotient but touches a killed vertex",
                    b.label
                )));
            };
            basis.push(BasisElem { label: b.label.clone(), source: s, target: t });
        }
        let mut products = BTreeMap::new();
        for (a2, &a) in keep.iter().enumerate() {
            for (b2, &b) in keep.iter().enumerate() {
                let t = reduce(self.product(a, b));
                if !t.is_empty() {
                    products.insert((a2, b2), t);
                }
            }
        }
        let idempotents = kept_vertices.iter().map(|&v| kmap[&self.idempotents[v]]).collect();
        let vertices = kept_vertices.iter().map(|&v| self.vertices[v].clone()).collect();
        let algebra = Algebra::from_table(p, vertices, basis, idempotents, products)?;
        Ok(QuotientAlgebra { algebra, kept_basis: keep, kept_vertices })
    }

    /// Compares structure constants up to a relabeling of the basis that
    /// preserves order.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        if self.p != other.p || self.dim() != other.dim() || self.idempotents != other.idempotents {
            return false;
        }
        let d = self.dim();
        self.basis.iter().zip(&other.basis).all(|(a, b)| a.source == b.source && a.target == b.target)
            && (0..d * d).all(|k| self.table[k] == other.table[k])
    }
}

/// Result of [`Algebra::quotient_by_idempotent`]: the quotient together with
/// the original indices of its basis elements and vertices.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: Algebra,
    pub kept_basis: Vec<usize>,
    pub kept_vertices: Vec<usize>,
}

/// The dual space DA with its bimodule structure; element `k` is the
/// functional dual to basis element `k` of A.
#[derive(Clone, Debug)]
pub struct BimoduleDual {
    pub dim: usize,
    pub labels: Vec<String>,
    /// Peirce tag of each dual element: the dual of an (i, j)-element is (j, i).
    pub tags: Vec<(usize, usize)>,
    /// `left[a * dim + k]` is `a · k*`.
    pub left: Vec<Terms>,
    /// `right[k * dim + b]` is `k* · b`.
    pub right: Vec<Terms>,
}

impl BimoduleDual {
    pub fn left_act(&self, a: usize, f: usize) -> &[(usize, u32)] {
        &self.left[a * self.dim + f]
    }
    pub fn right_act(&self, f: usize, b: usize) -> &[(usize, u32)] {
        &self.right[f * self.dim + b]
    }
}

pub fn dotted_name(s: &str) -> String {
    format!("{s}•")
}

/// An arrow of a quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// One term of a relation: a coefficient times a path read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coef: i64,
    pub path: Vec<String>,
}

/// A quiver with relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundQuiver {
    pub field: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTerm>>,
}

/// A path algebra together with the path represented by each basis element.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub algebra: Algebra,
    /// Arrow indices of each basis path (empty for trivial paths).
    pub paths: Vec<Vec<usize>>,
    pub max_len: usize,
}

impl BoundQuiver {
    fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| Error::Parse(format!("unknown vertex {name}")))
    }

    fn validate(&self) -> Result<(Vec<(usize, usize)>, Vec<Vec<(Vec<usize>, u32)>>)> {
        linalg::check_prime(self.field)?;
        let p = self.field;
        for (k, v) in self.vertices.iter().enumerate() {
            if self.vertices[..k].contains(v) {
                return Err(Error::Parse(format!("duplicate vertex {v}")));
            }
        }
        let mut ends = Vec::new();
        for (k, a) in self.arrows.iter().enumerate() {
            if self.arrows[..k].iter().any(|b| b.name == a.name) {
                return Err(Error::Parse(format!("duplicate arrow {}", a.name)));
            }
            ends.push((self.vertex_index(&a.from)?, self.vertex_index(&a.to)?));
        }
        let mut rels = Vec::new();
        for rel in &self.relations {
            let show = || rel.iter().map(|t| format!("{}·{}", t.coef, t.path.join(""))).collect::<Vec<_>>().join(" + ");
            let mut terms = Vec::new();
            let mut ends_of_rel: Option<(usize, usize)> = None;
            for t in rel {
                if t.path.len() < 2 {
                    return Err(Error::BadRelation(show()));
                }
                let mut path = Vec::new();
                for name in &t.path {
                    path.push(self.arrow_index(name).ok_or_else(|| Error::Parse(format!("unknown arrow {name}")))?);
                }
                for w in path.windows(2) {
                    if ends[w[0]].1 != ends[w[1]].0 {
                        return Err(Error::BadRelation(show()));
                    }
                }
                let e = (ends[path[0]].0, ends[*path.last().unwrap()].1);
                match ends_of_rel {
                    None => ends_of_rel = Some(e),
                    Some(prev) if prev != e => return Err(Error::BadRelation(show())),
                    _ => {}
                }
                let c = t.coef.rem_euclid(p as i64) as u32;
                if c != 0 {
                    terms.push((path, c));
                }
            }
            if !terms.is_empty() {
                rels.push(terms);
            }
        }
        Ok((ends, rels))
    }

    /// Builds `kQ / I` assuming every path longer than `max_len` lies in the
    /// ideal of relations.
    pub fn path_algebra(&self, max_len: usize) -> Result<PathAlgebra> {
        let (ends, rels) = self.validate()?;
        let p = self.field;
        let n = self.vertices.len();
        let top = max_len + 1;
        // all paths of length ≤ top, ordered by (length, arrow names)
        let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..n).map(|v| (v, v, Vec::new())).collect();
        let mut by_len: Vec<Vec<usize>> = vec![(0..n).collect()];
        let arrow_order: Vec<usize> = {
            let mut o: Vec<usize> = (0..self.arrows.len()).collect();
            o.sort_by(|&a, &b| self.arrows[a].name.cmp(&self.arrows[b].name));
            o
        };
        for len in 1..=top {
            let mut fresh: Vec<(usize, usize, Vec<usize>)> = Vec::new();
            if len == 1 {
                for &a in &arrow_order {
                    fresh.push((ends[a].0, ends[a].1, vec![a]));
                }
            } else {
                for &k in &by_len[len - 1] {
                    let (s, t, ref path) = paths[k];
                    for &a in &arrow_order {
                        if ends[a].0 == t {
                            let mut q = path.clone();
                            q.push(a);
                            fresh.push((s, ends[a].1, q));
                        }
                    }
                }
            }
            let names = |q: &Vec<usize>| q.iter().map(|&a| self.arrows[a].name.clone()).collect::<Vec<_>>();
            fresh.sort_by_key(|x| names(&x.2));
            if fresh.len() > 20_000 || paths.len() > 20_000 {
                return Err(Error::NotFiniteDimensional { max_len });
            }
            let start = paths.len();
            by_len.push((start..start + fresh.len()).collect());
            paths.extend(fresh);
        }
        let index: HashMap<Vec<usize>, usize> =
            paths.iter().enumerate().filter(|(_, x)| !x.2.is_empty()).map(|(k, x)| (x.2.clone(), k)).collect();
        let np = paths.len();
        let len_of = |k: usize| if k < n { 0 } else { paths[k].2.len() };
        // the ideal, truncated above length `top`
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for rel in &rels {
            let (rs, rt) = (ends[rel[0].0[0]].0, ends[*rel[0].0.last().unwrap()].1);
            let minlen = rel.iter().map(|(q, _)| q.len()).min().unwrap();
            for u in 0..np {
                if paths[u].1 != rs || len_of(u) + minlen > top {
                    continue;
                }
                for v in 0..np {
                    if paths[v].0 != rt || len_of(u) + minlen + len_of(v) > top {
                        continue;
                    }
                    let mut row = vec![0u32; np];
                    for (q, c) in rel {
                        let mut full = if u < n { Vec::new() } else { paths[u].2.clone() };
                        full.extend(q);
                        if v >= n {
                            full.extend(&paths[v].2);
                        }
                        if full.len() <= top {
                            let k = index[&full];
                            row[k] = linalg::add(row[k], *c, p);
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
        // pivot on the longest, lexicographically last paths first
        let order: Vec<usize> = (0..np).rev().collect();
        let permuted: Vec<Vec<u32>> = rows.iter().map(|r| order.iter().map(|&k| r[k]).collect()).collect();
        let ideal = EchelonBasis::new(&rows_to_mat(p, np, &permuted));
        let pos_of = |k: usize| np - 1 - k;
        for &k in &by_len[top] {
            let mut v = vec![0u32; np];
            v[pos_of(k)] = 1;
            if !ideal.contains(&v) {
                return Err(Error::NotFiniteDimensional { max_len });
            }
        }
        let mut keep: Vec<usize> = ideal.complement().iter().map(|&c| order[c]).collect();
        keep.sort();
        let kmap: HashMap<usize, usize> = keep.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let comp = ideal.complement();
        let reduce = |k: usize| -> Terms {
            let mut v = vec![0u32; np];
            v[pos_of(k)] = 1;
            let q = ideal.quotient_coords(&v);
            let mut out: Terms =
                comp.iter().zip(q).filter(|(_, c)| *c != 0).map(|(&col, c)| (kmap[&order[col]], c)).collect();
            out.sort();
            out
        };
        let single_char = self.arrows.iter().all(|a| a.name.chars().count() == 1);
        let basis: Vec<BasisElem> = keep
            .iter()
            .map(|&k| {
                let (s, t, ref q) = paths[k];
                let label = if q.is_empty() {
                    format!("e{}", self.vertices[s])
                } else {
                    let names: Vec<&str> = q.iter().map(|&a| self.arrows[a].name.as_str()).collect();
                    names.join(if single_char { "" } else { "·" })
                };
                BasisElem { label, source: s, target: t }
            })
            .collect();
        let mut products = BTreeMap::new();
        for (a2, &a) in keep.iter().enumerate() {
            for (b2, &b) in keep.iter().enumerate() {
                let (sa, ta, ref qa) = paths[a];
                let (sb, _, ref qb) = paths[b];
                if ta != sb {
                    continue;
                }
                let t: Terms = if a < n {
                    vec![(b2, 1)]
                } else if b < n {
                    vec![(a2, 1)]
                } else {
                    let mut full = qa.clone();
                    full.extend(qb);
                    if full.len() > top {
                        vec![]
                    } else {
                        reduce(index[&full])
                    }
                };
                let _ = sa;
                if !t.is_empty() {
                    products.insert((a2, b2), t);
                }
            }
        }
        let idempotents: Vec<usize> = (0..n).map(|v| kmap[&v]).collect();
        let algebra = Algebra::from_table(p, self.vertices.clone(), basis, idempotents, products)?;
        let paths = keep.iter().map(|&k| paths[k].2.clone()).collect();
        Ok(PathAlgebra { algebra, paths, max_len })
    }

    /// Tries `max_len = 1, 2, …, limit` and returns the first that works.
    pub fn path_algebra_auto(&self, limit: usize) -> Result<PathAlgebra> {
        let mut last = Error::NotFiniteDimensional { max_len: limit };
        for m in 0..=limit {
            match self.path_algebra(m) {
                Ok(a) => return Ok(a),
                Err(e @ Error::NotFiniteDimensional { .. }) => last = e,
                Err(e) => return Err(e),
            }
        }
        Err(last)
    }
}

pub(crate) fn unit(d: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[k] = 1;
    v
}

pub(crate) fn terms_to_vec(d: usize, t: &[(usize, u32)]) -> Vec<u32> {
    let mut v = vec![0; d];
    for &(k, c) in t {
        v[k] = c;
    }
    v
}

pub(crate) fn rows_to_mat(p: u32, cols: usize, rows: &[Vec<u32>]) -> Mat {
    let mut data = Vec::with_capacity(rows.len() * cols);
    for r in rows {
        data.extend_from_slice(r);
    }
    Mat::from_data(p, rows.len(), cols, data)
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
