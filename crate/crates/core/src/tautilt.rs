//! Indecomposables, support τ-tilting posets and their combinatorics.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::decompose::{decompose, is_indecomposable, iso_indecomposables};
use crate::endo::endomorphism_algebra;
use crate::error::{Error, Result};
use crate::homological::{ext1, is_injective, is_projective, pd_at_most_one, tau};
use crate::linalg::{EchelonBasis, Mat};
use crate::module::{hom_basis, hom_dim, injective, proj_sum, projective, trace, GradedMap, Module, Subspace};

/// An indecomposable module with cached invariants.
#[derive(Clone, Debug)]
pub struct Indec {
    pub module: Module,
    pub label: String,
    pub tau: Module,
    pub tau_rigid: bool,
    pub projective: bool,
    pub injective: bool,
    pub pd_le_one: bool,
}

/// The indecomposables of total dimension at most `bound`, up to isomorphism.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub algebra: Arc<Algebra>,
    pub bound: usize,
    pub items: Vec<Indec>,
}

/// Enumerates indecomposables of dimension ≤ `bound` as quotients `P(T)/N`
/// with `N ⊆ rad P(T)`, walking down from `rad P(T)` one composition factor
/// at a time.
pub fn enumerate_indecomposables(alg: &Arc<Algebra>, bound: usize) -> Result<Vec<Module>> {
    let nv = alg.n_vertices();
    let p = alg.modulus();
    let mut found: Vec<Module> = Vec::new();
    let mut tops: Vec<Vec<usize>> = vec![vec![]];
    let mut all_tops = Vec::new();
    for _ in 0..bound {
        let mut next = Vec::new();
        for t in &tops {
            let start = t.last().copied().unwrap_or(0);
            for v in start..nv {
                let mut u = t.clone();
                u.push(v);
                next.push(u);
            }
        }
        all_tops.extend(next.iter().cloned());
        tops = next;
    }
    for t in &all_tops {
        let big = proj_sum(alg, t);
        let rad = big.radical_sub();
        let mut level = vec![rad];
        let mut seen: HashSet<Vec<Vec<u32>>> = HashSet::new();
        while !level.is_empty() {
            let mut next_level = Vec::new();
            for n in level {
                let codim = big.dim() - n.dim();
                if codim > bound {
                    continue;
                }
                let q = big.quotient(&n).target;
                if is_indecomposable(&q)? && !found.iter().any(|f| iso_indecomposables(f, &q)) {
                    found.push(q);
                }
                if codim == bound {
                    continue;
                }
                for child in maximal_submodules(&big, &n) {
                    let key: Vec<Vec<u32>> = child.parts.iter().map(|e| e.basis.data().to_vec()).collect();
                    if seen.insert(key) {
                        next_level.push(child);
                    }
                }
            }
            level = next_level;
        }
        let _ = p;
    }
    Ok(found)
}

/// Maximal submodules of the submodule `n` of `big`, as subspaces of `big`.
fn maximal_submodules(big: &Module, n: &Subspace) -> Vec<Subspace> {
    let p = big.modulus();
    let inc = big.submodule(n);
    let sub = &inc.source;
    let rad = sub.radical_sub();
    let nv = sub.dims().len();
    let comps: Vec<Vec<usize>> = rad.parts.iter().map(|e| e.complement()).collect();
    let mut out = Vec::new();
    for v in 0..nv {
        let t = comps[v].len();
        if t == 0 {
            continue;
        }
        for lambda in projective_points(p, t) {
            let mut rows: Vec<Mat> = Vec::new();
            for u in 0..nv {
                let d = sub.dims()[u];
                let mut r = rad.parts[u].basis.clone();
                if u != v {
                    for &c in &comps[u] {
                        let mut e = vec![0; d];
                        e[c] = 1;
                        r = r.vstack(&Mat::row_vector(p, &e));
                    }
                } else {
                    let lam = Mat::from_data(p, t, 1, lambda.clone());
                    let ker = lam.left_kernel_basis();
                    for k in 0..ker.rows() {
                        let mut e = vec![0; d];
                        for (idx, &c) in comps[u].iter().enumerate() {
                            e[c] = ker.get(k, idx);
                        }
                        r = r.vstack(&Mat::row_vector(p, &e));
                    }
                }
                rows.push(r.mul(&inc.map.blocks[u]));
            }
            out.push(Subspace::from_rows(rows));
        }
    }
    out
}

/// Nonzero vectors of 𝔽_p^t whose first nonzero entry is 1.
fn projective_points(p: u32, t: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for lead in 0..t {
        let free = t - lead - 1;
        let count = (p as usize).pow(free as u32);
        for mut code in 0..count {
            let mut v = vec![0u32; t];
            v[lead] = 1;
            for x in v.iter_mut().skip(lead + 1) {
                *x = (code % p as usize) as u32;
                code /= p as usize;
            }
            out.push(v);
        }
    }
    out
}

/// Largest dimension of an indecomposable projective or injective module; a
/// sensible enumeration bound for representation-finite algebras of small
/// Loewy length.
pub fn default_bound(alg: &Arc<Algebra>) -> usize {
    (0..alg.n_vertices()).map(|v| projective(alg, v).dim().max(injective(alg, v).dim())).max().unwrap_or(0)
}

impl Catalog {
    pub fn enumerate(alg: &Arc<Algebra>, bound: usize) -> Result<Catalog> {
        let mods = enumerate_indecomposables(alg, bound)?;
        Ok(Catalog::from_modules(alg, bound, mods))
    }

    pub fn from_modules(alg: &Arc<Algebra>, bound: usize, mods: Vec<Module>) -> Catalog {
        let mut items: Vec<Indec> = mods
            .into_iter()
            .map(|m| {
                let t = tau(&m);
                let tau_rigid = hom_dim(&m, &t) == 0;
                Indec {
                    label: m.label(),
                    projective: is_projective(&m),
                    injective: is_injective(&m),
                    pd_le_one: pd_at_most_one(&m),
                    tau: t,
                    tau_rigid,
                    module: m,
                }
            })
            .collect();
        items.sort_by(|a, b| (a.module.dim(), &a.label).cmp(&(b.module.dim(), &b.label)));
        // disambiguate colliding labels
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        for it in &items {
            *counts.entry(it.label.clone()).or_default() += 1;
        }
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        for it in items.iter_mut() {
            if counts[&it.label] > 1 {
                let k = seen.entry(it.label.clone()).or_default();
                *k += 1;
                it.label = format!("{}#{}", it.label, k);
            }
        }
        Catalog { algebra: alg.clone(), bound, items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
    pub fn module(&self, k: usize) -> &Module {
        &self.items[k].module
    }
    pub fn label(&self, k: usize) -> &str {
        &self.items[k].label
    }
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.items.iter().position(|it| it.label == label)
    }

    /// Catalog index of an indecomposable module.
    pub fn identify(&self, m: &Module) -> Option<usize> {
        self.items.iter().position(|it| iso_indecomposables(&it.module, m))
    }

    /// Catalog indices of the indecomposable summands of `m` (sorted).
    pub fn decompose(&self, m: &Module) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for s in decompose(m)? {
            let k = self.identify(&s.module).ok_or_else(|| {
                Error::BoundTooSmall(format!(
                    "summand {} (dimension {}) is missing from the catalog of bound {}",
                    s.module.label(),
                    s.module.dim(),
                    self.bound
                ))
            })?;
            out.push(k);
        }
        out.sort();
        Ok(out)
    }

    /// Catalog index of the indecomposable projective at vertex `v`.
    pub fn projective_index(&self, v: usize) -> Result<usize> {
        let pv = crate::module::projective(&self.algebra, v);
        self.identify(&pv).ok_or_else(|| {
            Error::BoundTooSmall(format!("P({}) has dimension {}", self.algebra.vertex_name(v), pv.dim()))
        })
    }

    pub fn direct_sum(&self, idx: &[usize]) -> Module {
        let parts: Vec<Module> = idx.iter().map(|&k| self.items[k].module.clone()).collect();
        Module::direct_sum_of(&self.algebra, &parts)
    }
}

/// A basic pair `(M, P)`: catalog indices of the summands of `M` and the
/// vertices of the indecomposable projectives in `P`, both sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SttPair {
    pub modules: Vec<usize>,
    pub support: Vec<usize>,
}

impl SttPair {
    pub fn new(mut modules: Vec<usize>, mut support: Vec<usize>) -> SttPair {
        modules.sort();
        modules.dedup();
        support.sort();
        support.dedup();
        SttPair { modules, support }
    }
    pub fn size(&self) -> usize {
        self.modules.len() + self.support.len()
    }
    /// `other` is a summand of `self`.
    pub fn contains(&self, other: &SttPair) -> bool {
        other.modules.iter().all(|m| self.modules.contains(m)) && other.support.iter().all(|s| self.support.contains(s))
    }
}

/// A finite poset given by its order matrix, with its Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    /// `leq[a][b]` iff a ≤ b.
    pub leq: Vec<Vec<bool>>,
    /// Cover relations `(upper, lower)`.
    pub hasse: Vec<(usize, usize)>,
}

impl Poset {
    pub fn from_leq(leq: Vec<Vec<bool>>) -> Result<Poset> {
        let n = leq.len();
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::AssertionFailure(format!("order is not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::AssertionFailure(format!("order is not antisymmetric at ({a}, {b})")));
                }
                if leq[a][b] {
                    for c in 0..n {
                        if leq[b][c] && !leq[a][c] {
                            return Err(Error::AssertionFailure(format!("order is not transitive at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        }
        let mut hasse = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq[b][a] {
                    continue;
                }
                let covered = !(0..n).any(|c| c != a && c != b && leq[b][c] && leq[c][a]);
                if covered {
                    hasse.push((a, b));
                }
            }
        }
        Ok(Poset { leq, hasse })
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }
    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn maxima(&self) -> Vec<usize> {
        let n = self.len();
        (0..n).filter(|&a| (0..n).all(|b| b == a || !self.leq[a][b])).collect()
    }
    pub fn minima(&self) -> Vec<usize> {
        let n = self.len();
        (0..n).filter(|&a| (0..n).all(|b| b == a || !self.leq[b][a])).collect()
    }
    /// The greatest element, if there is one.
    pub fn max(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&a| (0..n).all(|b| self.leq[b][a]))
    }
    pub fn min(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&a| (0..n).all(|b| self.leq[a][b]))
    }

    pub fn is_cover(&self, upper: usize, lower: usize) -> bool {
        self.hasse.contains(&(upper, lower))
    }

    /// The induced subposet on `idx` (in that order).
    pub fn restrict(&self, idx: &[usize]) -> Poset {
        let leq = idx.iter().map(|&a| idx.iter().map(|&b| self.leq[a][b]).collect()).collect();
        Poset::from_leq(leq).expect("restriction of a poset is a poset")
    }

    /// All maximal chains from the greatest to the least element along
    /// cover relations, in lexicographic order of indices.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let (Some(top), Some(bottom)) = (self.max(), self.min()) else {
            return Vec::new();
        };
        let mut down: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for &(u, l) in &self.hasse {
            down[u].push(l);
        }
        for d in down.iter_mut() {
            d.sort();
        }
        let mut out = Vec::new();
        let mut stack = vec![top];
        fn walk(x: usize, bottom: usize, down: &[Vec<usize>], stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if x == bottom {
                out.push(stack.clone());
                return;
            }
            for &y in &down[x] {
                stack.push(y);
                walk(y, bottom, down, stack, out);
                stack.pop();
            }
        }
        walk(top, bottom, &down, &mut stack, &mut out);
        out
    }

    /// Whether `f` (a bijection from `self` to `other`) preserves and
    /// reflects the order.
    pub fn is_order_isomorphism(&self, other: &Poset, f: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || f.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in f {
            if x >= n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        (0..n).all(|a| (0..n).all(|b| self.leq[a][b] == other.leq[f[a]][f[b]]))
    }

    /// In- plus out-degree of each element in the Hasse diagram.
    pub fn hasse_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for &(u, l) in &self.hasse {
            d[u] += 1;
            d[l] += 1;
        }
        d
    }
}

/// The support τ-tilting poset of an algebra, with the data used to build it.
#[derive(Clone, Debug)]
pub struct SttPoset {
    pub catalog: Catalog,
    pub elements: Vec<SttPair>,
    pub labels: Vec<String>,
    pub poset: Poset,
    /// `hom_tau[a][b]` = dim Hom(X_a, τX_b).
    pub hom_tau: Vec<Vec<usize>>,
    /// `traces[y][x]` = trace of X_y in X_x.
    pub traces: Vec<Vec<Subspace>>,
}

/// The label of a pair, e.g. `(1/2 ⊕ 2, P(1))`.
pub fn pair_label(cat: &Catalog, pair: &SttPair) -> String {
    let alg = &cat.algebra;
    let mut mods: Vec<&str> = pair.modules.iter().map(|&k| cat.label(k)).collect();
    mods.sort();
    let m = if mods.is_empty() { "0".to_string() } else { mods.join(" ⊕ ") };
    let p = if pair.support.is_empty() {
        "0".to_string()
    } else {
        pair.support.iter().map(|&v| format!("P({})", alg.vertex_name(v))).collect::<Vec<_>>().join("⊕")
    };
    format!("({m}, {p})")
}

fn compatible_modules(hom_tau: &[Vec<usize>], a: usize, b: usize) -> bool {
    hom_tau[a][b] == 0 && hom_tau[b][a] == 0
}

impl SttPoset {
    /// Enumerates sτ-tilt of the algebra from the catalog of its
    /// indecomposables: all compatible sets of size n.
    pub fn build(catalog: Catalog) -> Result<SttPoset> {
        let nv = catalog.algebra.n_vertices();
        let k = catalog.len();
        let hom_tau: Vec<Vec<usize>> =
            (0..k).map(|a| (0..k).map(|b| hom_dim(catalog.module(a), &catalog.items[b].tau)).collect()).collect();
        // vertices of the compatibility graph: τ-rigid modules, then support marks
        #[derive(Clone, Copy)]
        enum V {
            M(usize),
            S(usize),
        }
        let mut verts: Vec<V> = (0..k).filter(|&a| catalog.items[a].tau_rigid).map(V::M).collect();
        verts.extend((0..nv).map(V::S));
        let compat = |x: V, y: V| match (x, y) {
            (V::M(a), V::M(b)) => compatible_modules(&hom_tau, a, b),
            (V::M(a), V::S(i)) | (V::S(i), V::M(a)) => catalog.module(a).dims()[i] == 0,
            (V::S(_), V::S(_)) => true,
        };
        let nn = verts.len();
        let adj: Vec<Vec<bool>> = (0..nn).map(|x| (0..nn).map(|y| compat(verts[x], verts[y])).collect()).collect();
        let mut cliques = Vec::new();
        let mut cur = Vec::new();
        fn grow(start: usize, need: usize, adj: &[Vec<bool>], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == need {
                out.push(cur.clone());
                return;
            }
            let nn = adj.len();
            // not enough vertices left
            if nn - start < need - cur.len() {
                return;
            }
            for v in start..nn {
                if cur.iter().all(|&u| adj[u][v]) {
                    cur.push(v);
                    grow(v + 1, need, adj, cur, out);
                    cur.pop();
                }
            }
        }
        grow(0, nv, &adj, &mut cur, &mut cliques);
        let mut elements: Vec<SttPair> = cliques
            .into_iter()
            .map(|c| {
                let mut mods = Vec::new();
                let mut sup = Vec::new();
                for x in c {
                    match verts[x] {
                        V::M(a) => mods.push(a),
                        V::S(i) => sup.push(i),
                    }
                }
                SttPair::new(mods, sup)
            })
            .collect();
        elements
            .sort_by(|a, b| (a.support.len(), &a.support, &a.modules).cmp(&(b.support.len(), &b.support, &b.modules)));
        if elements.is_empty() {
            return Err(Error::BoundTooSmall(format!(
                "no support τ-tilting pair found with indecomposables of dimension ≤ {}",
                catalog.bound
            )));
        }
        let traces: Vec<Vec<Subspace>> =
            (0..k).map(|y| (0..k).map(|x| trace(catalog.module(y), catalog.module(x))).collect()).collect();
        let labels = elements.iter().map(|e| pair_label(&catalog, e)).collect();
        let mut st =
            SttPoset { catalog, elements, labels, poset: Poset { leq: vec![], hasse: vec![] }, hom_tau, traces };
        let n = st.elements.len();
        let leq: Vec<Vec<bool>> =
            (0..n).map(|a| (0..n).map(|b| st.leq_pairs(&st.elements[a], &st.elements[b])).collect()).collect();
        st.poset = Poset::from_leq(leq)?;
        let (Some(_), Some(_)) = (st.poset.max(), st.poset.min()) else {
            return Err(Error::BoundTooSmall("poset has no unique maximum or minimum".into()));
        };
        st.check_extremes()?;
        Ok(st)
    }

    fn check_extremes(&self) -> Result<()> {
        let nv = self.catalog.algebra.n_vertices();
        let top = &self.elements[self.poset.max().unwrap()];
        let bottom = &self.elements[self.poset.min().unwrap()];
        let proj: Vec<usize> = (0..nv).map(|v| self.catalog.projective_index(v)).collect::<Result<_>>()?;
        if top.modules != SttPair::new(proj, vec![]).modules || !top.support.is_empty() {
            return Err(Error::BoundTooSmall("maximum is not (Λ, 0)".into()));
        }
        if !bottom.modules.is_empty() || bottom.support.len() != nv {
            return Err(Error::AssertionFailure("minimum is not (0, Λ)".into()));
        }
        Ok(())
    }

    pub fn enumerate(alg: &Arc<Algebra>, bound: usize) -> Result<SttPoset> {
        SttPoset::build(Catalog::enumerate(alg, bound)?)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `a ≤ b` iff every summand of `M_a` lies in Fac `M_b`.
    pub fn leq_pairs(&self, a: &SttPair, b: &SttPair) -> bool {
        a.modules.iter().all(|&x| {
            let target = self.catalog.module(x).dim();
            let p = self.catalog.algebra.modulus();
            let mut acc = Subspace::zero(p, self.catalog.module(x).dims());
            for &y in &b.modules {
                acc = acc.sum(&self.traces[y][x]);
            }
            acc.dim() == target
        })
    }

    pub fn index_of(&self, pair: &SttPair) -> Option<usize> {
        self.elements.iter().position(|e| e == pair)
    }

    /// Looks up an element by label or by index.
    pub fn resolve(&self, id: &str) -> Result<usize> {
        if let Some(k) = self.labels.iter().position(|l| l == id) {
            return Ok(k);
        }
        if let Ok(k) = id.trim().parse::<usize>() {
            if k < self.len() {
                return Ok(k);
            }
        }
        Err(Error::NotFound(format!("no element {id}")))
    }

    pub fn is_tau_rigid_pair(&self, pair: &SttPair) -> bool {
        pair.modules.iter().all(|&a| pair.modules.iter().all(|&b| self.hom_tau[a][b] == 0))
            && pair.modules.iter().all(|&a| pair.support.iter().all(|&i| self.catalog.module(a).dims()[i] == 0))
    }

    /// Elements containing `pair` as a summand.
    pub fn bongartz_interval(&self, pair: &SttPair) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.elements[k].contains(pair)).collect()
    }

    pub fn bongartz_completion(&self, pair: &SttPair) -> Result<usize> {
        let iv = self.bongartz_interval(pair);
        let sub = self.poset.restrict(&iv);
        sub.max().map(|k| iv[k]).ok_or_else(|| Error::NotFound("interval has no maximum".into()))
    }

    pub fn bongartz_cocompletion(&self, pair: &SttPair) -> Result<usize> {
        let iv = self.bongartz_interval(pair);
        let sub = self.poset.restrict(&iv);
        sub.min().map(|k| iv[k]).ok_or_else(|| Error::NotFound("interval has no minimum".into()))
    }

    /// Elements `(T, 0)` with `T` tilting.
    pub fn tilt_subposet(&self) -> Vec<usize> {
        let k = self.catalog.len();
        let mut ext = vec![vec![None; k]; k];
        let mut e = |a: usize, b: usize| -> usize {
            *ext[a][b].get_or_insert_with(|| ext1(self.catalog.module(a), self.catalog.module(b)))
        };
        let mut out = Vec::new();
        for (idx, el) in self.elements.iter().enumerate() {
            if !el.support.is_empty() || !el.modules.iter().all(|&a| self.catalog.items[a].pd_le_one) {
                continue;
            }
            let mut rigid = true;
            'outer: for &a in &el.modules {
                for &b in &el.modules {
                    if e(a, b) != 0 {
                        rigid = false;
                        break 'outer;
                    }
                }
            }
            if rigid {
                out.push(idx);
            }
        }
        out
    }

    /// Maximal green sequences: maximal chains from (Λ, 0) to (0, Λ).
    pub fn maximal_green_sequences(&self) -> Vec<Vec<usize>> {
        self.poset.maximal_chains()
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("// dimension bound: {}\ndigraph stt {{\n  rankdir=TB;\n", self.catalog.bound);
        for (k, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        let mut edges = self.poset.hasse.clone();
        edges.sort();
        for (u, l) in edges {
            let _ = writeln!(s, "  n{u} -> n{l};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> PosetJson {
        let n = self.len();
        let mut order_pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.poset.leq[a][b] {
                    order_pairs.push([a, b]);
                }
            }
        }
        let mut hasse_edges: Vec<[usize; 2]> = self.poset.hasse.iter().map(|&(u, l)| [u, l]).collect();
        hasse_edges.sort();
        PosetJson {
            dimension_bound: self.catalog.bound,
            elements: self.labels.clone(),
            order_pairs,
            hasse_edges,
            max: self.poset.max().unwrap_or(0),
            min: self.poset.min().unwrap_or(0),
        }
    }
}

/// JSON form of a poset: element labels, strict order pairs `[a, b]` with
/// a < b, cover edges `[upper, lower]`, and the extreme elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    /// Dimension bound of the indecomposables the poset was built from.
    pub dimension_bound: usize,
    pub elements: Vec<String>,
    pub order_pairs: Vec<[usize; 2]>,
    pub hasse_edges: Vec<[usize; 2]>,
    pub max: usize,
    pub min: usize,
}

/// Direct check of the defining conditions on an explicit module and
/// projective: τ-rigidity, vanishing of Hom(P, M), and |M| + |P| = n.
pub fn is_support_tau_tilting(m: &Module, support: &[usize]) -> Result<bool> {
    let n = m.algebra().n_vertices();
    if !is_tau_rigid_pair(m, support) {
        return Ok(false);
    }
    Ok(count_nonisomorphic_summands(m)? + support.len() == n)
}

pub fn is_tau_rigid_pair(m: &Module, support: &[usize]) -> bool {
    support.iter().all(|&i| m.dims()[i] == 0) && hom_dim(m, &tau(m)) == 0
}

pub fn count_nonisomorphic_summands(m: &Module) -> Result<usize> {
    let parts = decompose(m)?;
    let mut reps: Vec<Module> = Vec::new();
    for s in parts {
        if !reps.iter().any(|r| iso_indecomposables(r, &s.module)) {
            reps.push(s.module);
        }
    }
    Ok(reps.len())
}

/// Tilting: rigid, pd ≤ 1, and n nonisomorphic summands.
pub fn is_tilting(m: &Module) -> Result<bool> {
    let n = m.algebra().n_vertices();
    Ok(pd_at_most_one(m) && ext1(m, m) == 0 && count_nonisomorphic_summands(m)? == n)
}

/// Exhaustive oracle: tests every n-subset of (indecomposables ∪ support
/// marks) with [`is_support_tau_tilting`] on the actual direct sum.
pub fn stt_by_exhaustion(cat: &Catalog) -> Result<Vec<SttPair>> {
    let nv = cat.algebra.n_vertices();
    let k = cat.len();
    let total = k + nv;
    let mut out = Vec::new();
    for subset in subsets(total, nv) {
        let mods: Vec<usize> = subset.iter().copied().filter(|&x| x < k).collect();
        let sup: Vec<usize> = subset.iter().copied().filter(|&x| x >= k).map(|x| x - k).collect();
        let m = cat.direct_sum(&mods);
        if is_support_tau_tilting(&m, &sup)? {
            out.push(SttPair::new(mods, sup));
        }
    }
    out.sort();
    Ok(out)
}

/// Exhaustive oracle using the additivity of Hom and τ: a subset passes iff
/// every ordered pair of its members does.  The pairwise data are computed
/// here from scratch, independently of the clique search.
pub fn stt_by_exhaustion_pairwise(cat: &Catalog) -> Result<Vec<SttPair>> {
    let nv = cat.algebra.n_vertices();
    let k = cat.len();
    let taus: Vec<Module> = (0..k).map(|a| tau(cat.module(a))).collect();
    let bad: Vec<Vec<bool>> = (0..k).map(|a| (0..k).map(|b| hom_dim(cat.module(a), &taus[b]) != 0).collect()).collect();
    let total = k + nv;
    let mut out = Vec::new();
    for subset in subsets(total, nv) {
        let mods: Vec<usize> = subset.iter().copied().filter(|&x| x < k).collect();
        let sup: Vec<usize> = subset.iter().copied().filter(|&x| x >= k).map(|x| x - k).collect();
        let ok = mods.iter().all(|&a| mods.iter().all(|&b| !bad[a][b]))
            && mods.iter().all(|&a| sup.iter().all(|&i| cat.module(a).dims()[i] == 0));
        if ok {
            out.push(SttPair::new(mods, sup));
        }
    }
    out.sort();
    Ok(out)
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < r - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    go(0, n, r, &mut cur, &mut out);
    out
}

/// The reduction of a Bongartz interval to sτ-tilt of `C = End(T)/⟨e_M⟩`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub completion: usize,
    pub interval: Vec<usize>,
    pub reduced_algebra: Arc<Algebra>,
    pub reduced: SttPoset,
    /// Image of each interval element in `reduced`.
    pub image: Vec<usize>,
}

impl Reduction {
    /// Whether the map interval → sτ-tilt C is an order isomorphism.
    pub fn is_order_isomorphism(&self, ambient: &SttPoset) -> bool {
        let sub = ambient.poset.restrict(&self.interval);
        sub.is_order_isomorphism(&self.reduced.poset, &self.image)
    }
}

/// `N ↦ Hom(T, fN)` for `N` in the Bongartz interval of `pair`, where `T`
/// is the Bongartz completion and `f` the torsion-free part for Fac M.
pub fn jasso_reduction(stt: &SttPoset, pair: &SttPair, reduced_bound: usize) -> Result<Reduction> {
    let cat = &stt.catalog;
    let p = cat.algebra.modulus();
    let interval = stt.bongartz_interval(pair);
    let completion = stt.bongartz_completion(pair)?;
    let tmods = stt.elements[completion].modules.clone();
    let summands: Vec<Module> = tmods.iter().map(|&k| cat.module(k).clone()).collect();
    let end = endomorphism_algebra(&summands)?;
    let killed: Vec<usize> = (0..tmods.len()).filter(|&i| pair.modules.contains(&tmods[i])).collect();
    let q = end.algebra.quotient_by_idempotent(&killed)?;
    let c_alg = Arc::new(q.algebra.clone());
    let reduced = SttPoset::enumerate(&c_alg, reduced_bound)?;
    let m = cat.direct_sum(&pair.modules);
    let mut image = Vec::new();
    for &idx in &interval {
        let el = &stt.elements[idx];
        let parts: Vec<Module> = el
            .modules
            .iter()
            .map(|&x| {
                let xm = cat.module(x);
                xm.quotient(&trace(&m, xm)).target
            })
            .collect();
        let fnm = Module::direct_sum_of(&cat.algebra, &parts);
        // vertex i of C is summand kept[i] of T
        let spaces: Vec<Vec<GradedMap>> = q.kept_vertices.iter().map(|&i| hom_basis(&summands[i], &fnm)).collect();
        let dims: Vec<usize> = spaces.iter().map(|s| s.len()).collect();
        let mut act = Vec::new();
        for (cb, e) in c_alg.basis().iter().enumerate() {
            let b = q.kept_basis[cb];
            let (si, ti) = (e.source, e.target);
            let mut block = Mat::zeros(p, dims[si], dims[ti]);
            if dims[si] > 0 && dims[ti] > 0 {
                let tgt_rows: Vec<Vec<u32>> = spaces[ti].iter().map(|h| h.flatten()).collect();
                let basis_mat = crate::algebra::rows_to_mat(p, tgt_rows[0].len(), &tgt_rows);
                for (r, h) in spaces[si].iter().enumerate() {
                    let comp = end.maps[b].then(h);
                    let c = basis_mat
                        .solve_left(&Mat::row_vector(p, &comp.flatten()))
                        .map_err(|_| Error::AssertionFailure("composite leaves Hom(T_j, fN)".into()))?;
                    block.row_mut(r).copy_from_slice(c.row(0));
                }
            }
            act.push(block);
        }
        let y = Module::new(c_alg.clone(), dims, act)?;
        let mods = reduced.catalog.decompose(&y)?;
        let hits: Vec<usize> = (0..reduced.len()).filter(|&k| reduced.elements[k].modules == mods).collect();
        match hits.as_slice() {
            [k] => image.push(*k),
            [] => return Err(Error::NotFound(format!("reduction of {} is not support τ-tilting", stt.labels[idx]))),
            _ => return Err(Error::NotUnique(format!("reduction of {}", stt.labels[idx]))),
        }
    }
    Ok(Reduction { completion, interval, reduced_algebra: c_alg, reduced, image })
}

/// Rank of a vertex-graded subspace inside a module, for reports.
pub fn subspace_codim(m: &Module, s: &Subspace) -> usize {
    m.dim() - s.dim()
}

#[allow(dead_code)]
fn echelon_dims(parts: &[EchelonBasis]) -> Vec<usize> {
    parts.iter().map(|e| e.dim()).collect()
}
