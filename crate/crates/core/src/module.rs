//! Right modules over an [`Algebra`], graded by vertex.
//!
//! A module stores, for each vertex `i`, the dimension of `M e_i`, and for
//! each basis element `b` of Peirce tag `(i, j)` the block of its action
//! `M e_i → M e_j`, written for row vectors: `v ↦ v · ρ(b)`.  Hence
//! `ρ(b) ρ(b') = ρ(b b')`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, Terms};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Mat};

#[derive(Clone)]
pub struct Module {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    act: Vec<Mat>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims)
    }
}

/// A vertex-graded linear map: one block `M e_i → N e_i` per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMap {
    pub blocks: Vec<Mat>,
}

/// A homomorphism together with its source and target.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub map: GradedMap,
}

/// A vertex-graded subspace, each part in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub parts: Vec<EchelonBasis>,
}

impl Subspace {
    pub fn zero(p: u32, dims: &[usize]) -> Subspace {
        Subspace { parts: dims.iter().map(|&d| EchelonBasis::new(&Mat::zeros(p, 0, d))).collect() }
    }
    pub fn full(p: u32, dims: &[usize]) -> Subspace {
        Subspace { parts: dims.iter().map(|&d| EchelonBasis::new(&Mat::identity(p, d))).collect() }
    }
    pub fn from_rows(rows: Vec<Mat>) -> Subspace {
        Subspace { parts: rows.iter().map(EchelonBasis::new).collect() }
    }
    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(|e| e.dim()).collect()
    }
    pub fn dim(&self) -> usize {
        self.parts.iter().map(|e| e.dim()).sum()
    }
    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_rows(self.parts.iter().zip(&other.parts).map(|(a, b)| a.basis.vstack(&b.basis)).collect())
    }
    pub fn contains(&self, other: &Subspace) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| (0..b.basis.rows()).all(|r| a.contains(b.basis.row(r))))
    }
}

impl GradedMap {
    pub fn zero(p: u32, src: &[usize], tgt: &[usize]) -> GradedMap {
        GradedMap { blocks: src.iter().zip(tgt).map(|(&a, &b)| Mat::zeros(p, a, b)).collect() }
    }
    pub fn identity(p: u32, dims: &[usize]) -> GradedMap {
        GradedMap { blocks: dims.iter().map(|&d| Mat::identity(p, d)).collect() }
    }
    /// `self` followed by `g`.
    pub fn then(&self, g: &GradedMap) -> GradedMap {
        GradedMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.mul(b)).collect() }
    }
    pub fn add(&self, g: &GradedMap) -> GradedMap {
        GradedMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.add(b)).collect() }
    }
    pub fn sub(&self, g: &GradedMap) -> GradedMap {
        GradedMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.sub(b)).collect() }
    }
    pub fn scale(&self, c: u32) -> GradedMap {
        GradedMap { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }
    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }
    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }
    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }
    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }
    pub fn is_nilpotent(&self) -> bool {
        self.blocks.iter().all(|b| b.is_nilpotent())
    }
    pub fn pow(&self, k: u32) -> GradedMap {
        GradedMap { blocks: self.blocks.iter().map(|b| b.pow(k)).collect() }
    }
    pub fn src_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.rows()).collect()
    }
    pub fn tgt_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.cols()).collect()
    }
    /// Concatenated entries of all blocks.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }
    pub fn unflatten(p: u32, src: &[usize], tgt: &[usize], v: &[u32]) -> GradedMap {
        let mut off = 0;
        let mut blocks = Vec::new();
        for (&a, &b) in src.iter().zip(tgt) {
            blocks.push(Mat::from_data(p, a, b, v[off..off + a * b].to_vec()));
            off += a * b;
        }
        GradedMap { blocks }
    }
    /// Image of each block: a subspace of the target.
    pub fn image(&self) -> Subspace {
        Subspace::from_rows(self.blocks.clone())
    }
    /// Kernel of each block: a subspace of the source.
    pub fn kernel(&self) -> Subspace {
        Subspace::from_rows(self.blocks.iter().map(|b| b.left_kernel_basis()).collect())
    }
    /// Block-diagonal sum of two maps.
    pub fn direct_sum(&self, g: &GradedMap) -> GradedMap {
        GradedMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.block_diag(b)).collect() }
    }
    /// `[self g]`: the map into the direct sum of the two targets.
    pub fn hcat(&self, g: &GradedMap) -> GradedMap {
        GradedMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.hstack(b)).collect() }
    }
    /// `[self; g]`: the map out of the direct sum of the two sources.
    pub fn vcat(&self, g: &GradedMap) -> GradedMap {
        GradedMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.vstack(b)).collect() }
    }
}

impl Module {
    /// Builds a module and checks that it is one.
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, act: Vec<Mat>) -> Result<Module> {
        let m = Module::from_blocks_unchecked(alg, dims, act);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn from_blocks_unchecked(alg: Arc<Algebra>, dims: Vec<usize>, act: Vec<Mat>) -> Module {
        debug_assert_eq!(act.len(), alg.dim());
        Module { alg, dims, act }
    }

    /// Builds a module from total-space action matrices (vertex-ordered basis).
    pub fn from_total(alg: Arc<Algebra>, dims: Vec<usize>, mats: &[Mat]) -> Result<Module> {
        let offs = offsets(&dims);
        let total: usize = dims.iter().sum();
        let mut act = Vec::new();
        for (k, m) in mats.iter().enumerate() {
            let b = alg.elem(k);
            if m.rows() != total || m.cols() != total {
                return Err(Error::Parse(format!("action of {} has the wrong shape", b.label)));
            }
            for r in 0..total {
                for c in 0..total {
                    let inside = r >= offs[b.source]
                        && r < offs[b.source] + dims[b.source]
                        && c >= offs[b.target]
                        && c < offs[b.target] + dims[b.target];
                    if !inside && m.get(r, c) != 0 {
                        return Err(Error::Parse(format!("action of {} leaves its Peirce block", b.label)));
                    }
                }
            }
            let rows: Vec<usize> = (offs[b.source]..offs[b.source] + dims[b.source]).collect();
            let cols: Vec<usize> = (offs[b.target]..offs[b.target] + dims[b.target]).collect();
            act.push(m.submatrix(&rows, &cols));
        }
        Module::new(alg, dims, act)
    }

    pub fn idempotent_total(dims: &[usize], v: usize, p: u32) -> Mat {
        let total: usize = dims.iter().sum();
        let off: usize = dims[..v].iter().sum();
        let mut m = Mat::zeros(p, total, total);
        for r in off..off + dims[v] {
            m.set(r, r, 1);
        }
        m
    }

    pub fn zero(alg: Arc<Algebra>) -> Module {
        let n = alg.n_vertices();
        let dims = vec![0; n];
        Module::from_dims_zero_action(alg, dims)
    }

    /// The semisimple module with the given dimension vector.
    pub fn semisimple(alg: Arc<Algebra>, dims: Vec<usize>) -> Module {
        Module::from_dims_zero_action(alg, dims)
    }

    pub fn simple(alg: Arc<Algebra>, v: usize) -> Module {
        let mut dims = vec![0; alg.n_vertices()];
        dims[v] = 1;
        Module::semisimple(alg, dims)
    }

    fn from_dims_zero_action(alg: Arc<Algebra>, dims: Vec<usize>) -> Module {
        let p = alg.modulus();
        let act = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(k, b)| {
                if alg.is_idempotent(k) {
                    Mat::identity(p, dims[b.source])
                } else {
                    Mat::zeros(p, dims[b.source], dims[b.target])
                }
            })
            .collect();
        Module { alg, dims, act }
    }

    /// Checks unit, Peirce and multiplicativity constraints exhaustively.
    pub fn check(&self) -> Result<()> {
        let a = &*self.alg;
        let p = a.modulus();
        if self.dims.len() != a.n_vertices() || self.act.len() != a.dim() {
            return Err(Error::Parse("module shape does not match its algebra".into()));
        }
        for (k, b) in a.basis().iter().enumerate() {
            let m = &self.act[k];
            if m.rows() != self.dims[b.source] || m.cols() != self.dims[b.target] || m.modulus() != p {
                return Err(Error::Parse(format!("action block of {} has the wrong shape", b.label)));
            }
            if a.is_idempotent(k) && !m.is_identity() {
                return Err(Error::Parse(format!("idempotent {} does not act as identity", b.label)));
            }
        }
        for x in 0..a.dim() {
            let t = a.elem(x).target;
            for y in (0..a.n_vertices()).flat_map(|v| a.block(t, v).to_vec()) {
                let lhs = self.act[x].mul(&self.act[y]);
                let rhs = self.combination(a.product(x, y), a.elem(x).source, a.elem(y).target);
                if lhs != rhs {
                    return Err(Error::Parse(format!(
                        "action is not multiplicative on ({}, {})",
                        a.elem(x).label,
                        a.elem(y).label
                    )));
                }
            }
        }
        Ok(())
    }

    /// `Σ c_k ρ(k)` as a block from vertex `s` to vertex `t`.
    pub fn combination(&self, terms: &[(usize, u32)], s: usize, t: usize) -> Mat {
        let mut out = Mat::zeros(self.alg.modulus(), self.dims[s], self.dims[t]);
        for &(k, c) in terms {
            out.add_scaled(&self.act[k], c);
        }
        out
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }
    pub fn modulus(&self) -> u32 {
        self.alg.modulus()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn act(&self, b: usize) -> &Mat {
        &self.act[b]
    }
    pub fn actions(&self) -> &[Mat] {
        &self.act
    }
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Action of basis element `b` on the whole space.
    pub fn total_matrix(&self, b: usize) -> Mat {
        let offs = offsets(&self.dims);
        let e = self.alg.elem(b);
        let mut m = Mat::zeros(self.modulus(), self.dim(), self.dim());
        m.paste(offs[e.source], offs[e.target], &self.act[b]);
        m
    }

    pub fn same_algebra(&self, other: &Module) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || *self.alg == *other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let act = self.act.iter().zip(&other.act).map(|(a, b)| a.block_diag(b)).collect();
        Module { alg: self.alg.clone(), dims, act }
    }

    pub fn direct_sum_of(alg: &Arc<Algebra>, parts: &[Module]) -> Module {
        parts.iter().fold(Module::zero(alg.clone()), |acc, m| acc.direct_sum(m))
    }

    /// `v · ρ(b)` for a vector `v` at the source vertex of `b`.
    pub fn apply(&self, v: &[u32], b: usize) -> Vec<u32> {
        Mat::row_vector(self.modulus(), v).mul(&self.act[b]).row(0).to_vec()
    }

    /// Generators of the algebra leaving vertex `v`.
    fn gens_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.alg.generators().iter().copied().filter(move |&g| self.alg.elem(g).source == v)
    }

    /// Smallest submodule containing the given vectors (rows, per vertex).
    pub fn closure(&self, seeds: &[Mat]) -> Subspace {
        let p = self.modulus();
        let n = self.dims.len();
        let mut parts: Vec<EchelonBasis> = (0..n).map(|v| EchelonBasis::new(&seeds[v])).collect();
        let mut queue: Vec<(usize, Vec<u32>)> = Vec::new();
        for (v, part) in parts.iter().enumerate() {
            for r in 0..part.dim() {
                queue.push((v, part.basis.row(r).to_vec()));
            }
        }
        while let Some((v, x)) = queue.pop() {
            for g in self.gens_from(v) {
                let t = self.alg.elem(g).target;
                let y = self.apply(&x, g);
                if y.iter().all(|&c| c == 0) || parts[t].contains(&y) {
                    continue;
                }
                let stacked = parts[t].basis.vstack(&Mat::row_vector(p, &y));
                parts[t] = EchelonBasis::new(&stacked);
                queue.push((t, y));
            }
        }
        Subspace { parts }
    }

    /// Checks that a subspace is closed under the action.
    pub fn is_submodule(&self, s: &Subspace) -> bool {
        (0..self.dims.len()).all(|v| {
            let part = &s.parts[v];
            (0..part.dim()).all(|r| {
                self.gens_from(v).all(|g| s.parts[self.alg.elem(g).target].contains(&self.apply(part.basis.row(r), g)))
            })
        })
    }

    /// The submodule spanned by a closed subspace, with its inclusion.
    pub fn submodule(&self, s: &Subspace) -> ModuleMap {
        let a = &self.alg;
        let dims = s.dims();
        let act = a
            .basis()
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let src = &s.parts[b.source];
                let tgt = &s.parts[b.target];
                let img = src.basis.mul(&self.act[k]);
                let mut out = Mat::zeros(a.modulus(), src.dim(), tgt.dim());
                for r in 0..src.dim() {
                    let c = tgt.coords(img.row(r)).expect("subspace is a submodule");
                    out.row_mut(r).copy_from_slice(&c);
                }
                out
            })
            .collect();
        let sub = Module { alg: a.clone(), dims, act };
        let map = GradedMap { blocks: s.parts.iter().map(|e| e.basis.clone()).collect() };
        ModuleMap { source: sub, target: self.clone(), map }
    }

    /// The quotient by a closed subspace, with the projection.
    pub fn quotient(&self, s: &Subspace) -> ModuleMap {
        let a = &self.alg;
        let p = a.modulus();
        let comps: Vec<Vec<usize>> = s.parts.iter().map(|e| e.complement()).collect();
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let act = a
            .basis()
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let mut out = Mat::zeros(p, dims[b.source], dims[b.target]);
                for (r, &c) in comps[b.source].iter().enumerate() {
                    let q = s.parts[b.target].quotient_coords(self.act[k].row(c));
                    out.row_mut(r).copy_from_slice(&q);
                }
                out
            })
            .collect();
        let quo = Module { alg: a.clone(), dims: dims.clone(), act };
        let blocks = (0..self.dims.len())
            .map(|v| {
                let mut m = Mat::zeros(p, self.dims[v], dims[v]);
                for r in 0..self.dims[v] {
                    let mut e = vec![0; self.dims[v]];
                    e[r] = 1;
                    m.row_mut(r).copy_from_slice(&s.parts[v].quotient_coords(&e));
                }
                m
            })
            .collect();
        ModuleMap { source: self.clone(), target: quo, map: GradedMap { blocks } }
    }

    /// rad M = M · rad A, as a subspace.
    pub fn radical_sub(&self) -> Subspace {
        self.times_radical(&Subspace::full(self.modulus(), &self.dims))
    }

    /// `W · rad A` for a submodule `W`.
    pub fn times_radical(&self, w: &Subspace) -> Subspace {
        let p = self.modulus();
        let mut rows: Vec<Mat> = self.dims.iter().map(|&d| Mat::zeros(p, 0, d)).collect();
        for &g in self.alg.generators() {
            let b = self.alg.elem(g);
            let img = w.parts[b.source].basis.mul(&self.act[g]);
            rows[b.target] = rows[b.target].vstack(&img);
        }
        Subspace::from_rows(rows)
    }

    /// soc M = { m : m · rad A = 0 }.
    pub fn socle_sub(&self) -> Subspace {
        let p = self.modulus();
        let rows = (0..self.dims.len())
            .map(|v| {
                let mut h = Mat::zeros(p, self.dims[v], 0);
                for g in self.gens_from(v) {
                    h = h.hstack(&self.act[g]);
                }
                h.left_kernel_basis()
            })
            .collect();
        Subspace::from_rows(rows)
    }

    /// Projection onto top M = M / rad M.
    pub fn top(&self) -> ModuleMap {
        self.quotient(&self.radical_sub())
    }

    /// Inclusion of rad M.
    pub fn radical_of(&self) -> ModuleMap {
        self.submodule(&self.radical_sub())
    }

    /// Inclusion of soc M.
    pub fn socle(&self) -> ModuleMap {
        self.submodule(&self.socle_sub())
    }

    pub fn top_dims(&self) -> Vec<usize> {
        let r = self.radical_sub().dims();
        self.dims.iter().zip(r).map(|(a, b)| a - b).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_sub().dims()
    }

    /// Dimension vectors of the radical layers rad^k M / rad^{k+1} M.
    pub fn loewy_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut w = Subspace::full(self.modulus(), &self.dims);
        while w.dim() > 0 {
            let next = self.times_radical(&w);
            layers.push(w.dims().iter().zip(next.dims()).map(|(a, b)| a - b).collect());
            if next.dim() == w.dim() {
                break; // only possible over a non-adapted basis
            }
            w = next;
        }
        layers
    }

    /// Loewy-layer label: layers top-down joined by `/`, each layer listing
    /// its composition factors by vertex name.
    pub fn label(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.loewy_layers()
            .iter()
            .map(|layer| {
                let mut names = Vec::new();
                for (v, &m) in layer.iter().enumerate() {
                    for _ in 0..m {
                        names.push(self.alg.vertex_name(v).to_string());
                    }
                }
                names.join(",")
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl ModuleMap {
    pub fn new(source: Module, target: Module, map: GradedMap) -> Result<ModuleMap> {
        source.same_algebra(&target)?;
        let m = ModuleMap { source, target, map };
        if !m.is_homomorphism() {
            return Err(Error::Precondition("matrices do not intertwine the actions".into()));
        }
        Ok(m)
    }

    pub fn identity(m: &Module) -> ModuleMap {
        ModuleMap { source: m.clone(), target: m.clone(), map: GradedMap::identity(m.modulus(), m.dims()) }
    }

    /// Checks `ρ_src(b) · F_j = F_i · ρ_tgt(b)` on algebra generators and
    /// the shapes of all blocks.
    pub fn is_homomorphism(&self) -> bool {
        let a = self.source.algebra();
        let shapes_ok = self.map.blocks.len() == a.n_vertices()
            && self
                .map
                .blocks
                .iter()
                .enumerate()
                .all(|(v, b)| b.rows() == self.source.dims()[v] && b.cols() == self.target.dims()[v]);
        shapes_ok
            && a.generators().iter().all(|&g| {
                let e = a.elem(g);
                self.source.act(g).mul(&self.map.blocks[e.target]) == self.map.blocks[e.source].mul(self.target.act(g))
            })
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { source: self.source.clone(), target: g.target.clone(), map: self.map.then(&g.map) }
    }

    pub fn kernel(&self) -> ModuleMap {
        self.source.submodule(&self.map.kernel())
    }

    pub fn image(&self) -> ModuleMap {
        self.target.submodule(&self.map.image())
    }

    pub fn cokernel(&self) -> ModuleMap {
        self.target.quotient(&self.map.image())
    }

    pub fn is_injective(&self) -> bool {
        self.map.is_injective()
    }
    pub fn is_surjective(&self) -> bool {
        self.map.is_surjective()
    }
    pub fn is_isomorphism(&self) -> bool {
        self.map.is_invertible()
    }
}

pub fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for &d in dims {
        out.push(acc);
        acc += d;
    }
    out
}

/// A basis of Hom(M, N), as solutions of the intertwining equations on
/// generators.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<GradedMap> {
    let a = m.algebra();
    let p = a.modulus();
    let (dm, dn) = (m.dims(), n.dims());
    let nv = dm.len();
    let mut off = vec![0usize; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + dm[v] * dn[v];
    }
    let unknowns = off[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &g in a.generators() {
        let e = a.elem(g);
        let (i, j) = (e.source, e.target);
        let (rm, rn) = (m.act(g), n.act(g));
        for r in 0..dm[i] {
            for c in 0..dn[j] {
                let mut row = vec![0u32; unknowns];
                // (ρ_M(g) F_j)[r][c] = Σ_k ρ_M(g)[r][k] F_j[k][c]
                for k in 0..dm[j] {
                    let x = rm.get(r, k);
                    if x != 0 {
                        let idx = off[j] + k * dn[j] + c;
                        row[idx] = crate::linalg::add(row[idx], x, p);
                    }
                }
                // − (F_i ρ_N(g))[r][c] = − Σ_k F_i[r][k] ρ_N(g)[k][c]
                for k in 0..dn[i] {
                    let x = rn.get(k, c);
                    if x != 0 {
                        let idx = off[i] + r * dn[i] + k;
                        row[idx] = crate::linalg::sub(row[idx], x, p);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = crate::algebra::rows_to_mat(p, unknowns, &rows);
    let ker = sys.kernel_basis();
    (0..ker.rows()).map(|r| GradedMap::unflatten(p, dm, dn, ker.row(r))).collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).len()
}

/// Sum of the images of all maps M → N (the trace of M in N).
pub fn trace(m: &Module, n: &Module) -> Subspace {
    let p = n.modulus();
    let mut rows: Vec<Mat> = n.dims().iter().map(|&d| Mat::zeros(p, 0, d)).collect();
    for h in hom_basis(m, n) {
        for (v, b) in h.blocks.iter().enumerate() {
            rows[v] = rows[v].vstack(b);
        }
    }
    Subspace::from_rows(rows)
}

/// Torsion part `tN` (trace of M) and torsion-free part `fN = N / tN`.
pub struct CanonicalSequence {
    pub torsion: ModuleMap,
    pub free: ModuleMap,
}

pub fn canonical_sequence(m: &Module, n: &Module) -> CanonicalSequence {
    let t = trace(m, n);
    CanonicalSequence { torsion: n.submodule(&t), free: n.quotient(&t) }
}

/// The indecomposable projective `e_i A`.
pub fn projective(alg: &Arc<Algebra>, i: usize) -> Module {
    let n = alg.n_vertices();
    let p = alg.modulus();
    let dims: Vec<usize> = (0..n).map(|j| alg.block(i, j).len()).collect();
    let act = alg
        .basis()
        .iter()
        .enumerate()
        .map(|(b, e)| {
            let mut m = Mat::zeros(p, dims[e.source], dims[e.target]);
            for (r, &x) in alg.block(i, e.source).iter().enumerate() {
                for &(y, c) in alg.product(x, b) {
                    m.set(r, alg.block_pos(y), c);
                }
            }
            m
        })
        .collect();
    Module::from_blocks_unchecked(alg.clone(), dims, act)
}

/// The indecomposable injective `D(A e_i)`; the dual of `x` sits at the
/// source vertex of `x`.
pub fn injective(alg: &Arc<Algebra>, i: usize) -> Module {
    let n = alg.n_vertices();
    let p = alg.modulus();
    let dims: Vec<usize> = (0..n).map(|j| alg.block(j, i).len()).collect();
    let act = alg
        .basis()
        .iter()
        .enumerate()
        .map(|(b, e)| {
            // x*·b = Σ_y [coefficient of x in b·y] y*
            let mut m = Mat::zeros(p, dims[e.source], dims[e.target]);
            for (col, &y) in alg.block(e.target, i).iter().enumerate() {
                for &(x, c) in alg.product(b, y) {
                    m.set(alg.block_pos(x), col, c);
                }
            }
            m
        })
        .collect();
    Module::from_blocks_unchecked(alg.clone(), dims, act)
}

/// `⊕_k P(tops[k])`.
pub fn proj_sum(alg: &Arc<Algebra>, tops: &[usize]) -> Module {
    let parts: Vec<Module> = tops.iter().map(|&i| projective(alg, i)).collect();
    Module::direct_sum_of(alg, &parts)
}

/// `⊕_k I(socs[k])`.
pub fn inj_sum(alg: &Arc<Algebra>, socs: &[usize]) -> Module {
    let parts: Vec<Module> = socs.iter().map(|&i| injective(alg, i)).collect();
    Module::direct_sum_of(alg, &parts)
}

/// Offset of each summand inside each vertex block of a direct sum.
pub fn summand_offsets(parts: &[Vec<usize>], nv: usize) -> Vec<Vec<usize>> {
    let mut acc = vec![0usize; nv];
    parts
        .iter()
        .map(|d| {
            let o = acc.clone();
            for v in 0..nv {
                acc[v] += d[v];
            }
            o
        })
        .collect()
}

/// Components of a map between sums of indecomposable projectives:
/// `comps[l][k] ∈ e_{tgt[l]} A e_{src[k]}` is the image of the top of
/// source summand `k` in target summand `l`.
pub type ProjComponents = Vec<Vec<Terms>>;

pub fn proj_components(alg: &Arc<Algebra>, src: &[usize], tgt: &[usize], map: &GradedMap) -> ProjComponents {
    let nv = alg.n_vertices();
    let sdims: Vec<Vec<usize>> = src.iter().map(|&i| (0..nv).map(|v| alg.block(i, v).len()).collect()).collect();
    let tdims: Vec<Vec<usize>> = tgt.iter().map(|&j| (0..nv).map(|v| alg.block(j, v).len()).collect()).collect();
    let soff = summand_offsets(&sdims, nv);
    let toff = summand_offsets(&tdims, nv);
    let mut comps = vec![vec![Vec::new(); src.len()]; tgt.len()];
    for (k, &i) in src.iter().enumerate() {
        let row = soff[k][i] + alg.block_pos(alg.idempotent(i));
        let img = map.blocks[i].row(row);
        for (l, &j) in tgt.iter().enumerate() {
            let mut t: Terms = Vec::new();
            for (pos, &y) in alg.block(j, i).iter().enumerate() {
                let c = img[toff[l][i] + pos];
                if c != 0 {
                    t.push((y, c));
                }
            }
            comps[l][k] = t;
        }
    }
    comps
}

pub fn proj_map_from_components(alg: &Arc<Algebra>, src: &[usize], tgt: &[usize], comps: &ProjComponents) -> ModuleMap {
    let nv = alg.n_vertices();
    let p = alg.modulus();
    let source = proj_sum(alg, src);
    let target = proj_sum(alg, tgt);
    let sdims: Vec<Vec<usize>> = src.iter().map(|&i| (0..nv).map(|v| alg.block(i, v).len()).collect()).collect();
    let tdims: Vec<Vec<usize>> = tgt.iter().map(|&j| (0..nv).map(|v| alg.block(j, v).len()).collect()).collect();
    let soff = summand_offsets(&sdims, nv);
    let toff = summand_offsets(&tdims, nv);
    let mut blocks: Vec<Mat> = (0..nv).map(|v| Mat::zeros(p, source.dims()[v], target.dims()[v])).collect();
    for (k, &i) in src.iter().enumerate() {
        for v in 0..nv {
            for (r, &x) in alg.block(i, v).iter().enumerate() {
                for (l, _) in tgt.iter().enumerate() {
                    for (y, c) in alg.mul_terms(&comps[l][k], &[(x, 1)]) {
                        let col = toff[l][v] + alg.block_pos(y);
                        let row = soff[k][v] + r;
                        let old = blocks[v].get(row, col);
                        blocks[v].set(row, col, crate::linalg::add(old, c, p));
                    }
                }
            }
        }
    }
    ModuleMap { source, target, map: GradedMap { blocks } }
}

/// The Nakayama functor on a map between sums of projectives given by its
/// components: `ν(P(i)) = I(i)` and `x* ↦ Σ_y [x in y·a] y*`.
pub fn nakayama_map(alg: &Arc<Algebra>, src: &[usize], tgt: &[usize], comps: &ProjComponents) -> ModuleMap {
    let nv = alg.n_vertices();
    let p = alg.modulus();
    let source = inj_sum(alg, src);
    let target = inj_sum(alg, tgt);
    let sdims: Vec<Vec<usize>> = src.iter().map(|&i| (0..nv).map(|v| alg.block(v, i).len()).collect()).collect();
    let tdims: Vec<Vec<usize>> = tgt.iter().map(|&j| (0..nv).map(|v| alg.block(v, j).len()).collect()).collect();
    let soff = summand_offsets(&sdims, nv);
    let toff = summand_offsets(&tdims, nv);
    let mut blocks: Vec<Mat> = (0..nv).map(|v| Mat::zeros(p, source.dims()[v], target.dims()[v])).collect();
    for (k, &i) in src.iter().enumerate() {
        for (l, &j) in tgt.iter().enumerate() {
            let a = &comps[l][k];
            if a.is_empty() {
                continue;
            }
            for v in 0..nv {
                for (col, &y) in alg.block(v, j).iter().enumerate() {
                    for (x, c) in alg.mul_terms(&[(y, 1)], a) {
                        let row = soff[k][v] + alg.block_pos(x);
                        let cc = toff[l][v] + col;
                        let old = blocks[v].get(row, cc);
                        blocks[v].set(row, cc, crate::linalg::add(old, c, p));
                    }
                }
            }
            let _ = i;
        }
    }
    ModuleMap { source, target, map: GradedMap { blocks } }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{Arrow, BoundQuiver, RelationTerm};

    pub(crate) fn quiver_alg(n: usize, arrows: &[(&str, usize, usize)], rels: &[&[&str]]) -> Arc<Algebra> {
        let q = BoundQuiver {
            field: 2,
            vertices: (1..=n).map(|v| v.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|&(a, s, t)| Arrow { name: a.into(), from: s.to_string(), to: t.to_string() })
                .collect(),
            relations: rels
                .iter()
                .map(|r| vec![RelationTerm { coef: 1, path: r.iter().map(|s| s.to_string()).collect() }])
                .collect(),
        };
        Arc::new(q.path_algebra_auto(8).unwrap().algebra)
    }

    pub(crate) fn a2() -> Arc<Algebra> {
        quiver_alg(2, &[("a", 1, 2)], &[])
    }

    pub(crate) fn a3rel() -> Arc<Algebra> {
        quiver_alg(3, &[("a", 1, 2), ("b", 2, 3)], &[&["a", "b"]])
    }

    #[test]
    fn projectives_and_injectives_are_modules() {
        for alg in [a2(), a3rel(), Arc::new(a2().duplicated().unwrap())] {
            for i in 0..alg.n_vertices() {
                projective(&alg, i).check().unwrap();
                injective(&alg, i).check().unwrap();
            }
        }
    }

    #[test]
    fn a2_modules() {
        let a = a2();
        let p1 = projective(&a, 0);
        assert_eq!(p1.dims(), &[1, 1]);
        assert_eq!(p1.label(), "1/2");
        let i2 = injective(&a, 1);
        assert_eq!(i2.dims(), &[1, 1]);
        assert_eq!(i2.label(), "1/2");
        let i1 = injective(&a, 0);
        assert_eq!(i1.label(), "1");
        assert_eq!(hom_dim(&p1, &p1), 1);
        let (s1, s2) = (Module::simple(a.clone(), 0), Module::simple(a.clone(), 1));
        assert_eq!(hom_dim(&s1, &s2), 0);
        assert_eq!(hom_dim(&p1, &s2), 0);
        assert_eq!(hom_dim(&p1, &s1), 1);
        assert_eq!(hom_dim(&s2, &p1), 1);
    }

    #[test]
    fn top_radical_socle() {
        let a = a2();
        let p1 = projective(&a, 0);
        assert_eq!(p1.top().target.dims(), &[1, 0]);
        assert_eq!(p1.radical_of().source.dims(), &[0, 1]);
        assert_eq!(p1.socle().source.dims(), &[0, 1]);
        let ss = Module::semisimple(a.clone(), vec![2, 1]);
        assert_eq!(ss.top().target.dim(), 3);
    }

    #[test]
    fn maps_compose_and_factor() {
        let a = a2();
        let p1 = projective(&a, 0);
        let s1 = Module::simple(a.clone(), 0);
        let h = hom_basis(&p1, &s1);
        let f = ModuleMap::new(p1.clone(), s1.clone(), h[0].clone()).unwrap();
        assert!(f.is_surjective());
        let k = f.kernel();
        assert_eq!(k.source.dims(), &[0, 1]);
        assert!(k.then(&f).map.is_zero());
        let c = k.cokernel();
        assert_eq!(c.target.dims(), &[1, 0]);
    }

    #[test]
    fn components_round_trip() {
        let a = a3rel();
        let comps = vec![vec![vec![(a.basis_index("a").unwrap(), 1)]]];
        let f = proj_map_from_components(&a, &[1], &[0], &comps);
        assert!(f.is_homomorphism());
        assert_eq!(proj_components(&a, &[1], &[0], &f.map), comps);
        let nu = nakayama_map(&a, &[1], &[0], &comps);
        assert!(nu.is_homomorphism());
    }
}
