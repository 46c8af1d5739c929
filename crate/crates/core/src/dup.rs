//! Maps between modules over an algebra Λ and over its duplicated algebra Λ̄.
//!
//! Vertex `i` of Λ is vertex `i` of Λ̄ and its dotted copy is `i + n`;
//! basis element `k` of Λ is `k` (plain) and `k + d` (dotted) in Λ̄.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::decompose::{decompose, is_isomorphic, iso_indecomposables};
use crate::error::{Error, Result};
use crate::homological::{cosyzygy, injective_envelope, is_projective_injective, minimal_presentation, pd_at_most_one};
use crate::linalg::Mat;
use crate::module::{
    hom_basis, proj_map_from_components, proj_sum, trace, GradedMap, Module, ModuleMap, ProjComponents,
};
use crate::tautilt::{SttPair, SttPoset};

/// F(M) with the comparison map `π_M: F(M) ↠ M` and its kernel.
#[derive(Clone, Debug)]
pub struct FImage {
    pub module: Module,
    pub pi: ModuleMap,
    pub ker_pi: ModuleMap,
}

/// G(M) with `ρ_M: G(M) ↠ M•` and its kernel.
#[derive(Clone, Debug)]
pub struct GImage {
    pub module: Module,
    pub rho: ModuleMap,
    pub ker_rho: ModuleMap,
}

/// Λ, Λ̄ and the data of Λ̄ that the maps keep reusing.
#[derive(Clone, Debug)]
pub struct DupContext {
    pub lam: Arc<Algebra>,
    pub bar: Arc<Algebra>,
    /// Number of vertices of Λ.
    pub n: usize,
    /// Dimension of Λ.
    pub d: usize,
    /// The sum of all indecomposable projective-injective Λ̄-modules.
    pub q: Module,
    /// `P(i•)` for each vertex `i` of Λ.
    pub q_summands: Vec<Module>,
    /// Ω⁻¹ over Λ̄ of each indecomposable projective Λ-module.
    pub omega_inv: Vec<Module>,
    /// Indecomposables that a module in H(Λ̄) may not have as summands.
    pub forbidden: Vec<Module>,
}

/// Support τ-tilting posets of Λ and Λ̄.
#[derive(Clone, Debug)]
pub struct DupPosets {
    pub base: SttPoset,
    pub bar: SttPoset,
}

fn factor_through(q: &GradedMap, phi: &GradedMap) -> Result<GradedMap> {
    let blocks = q
        .blocks
        .iter()
        .zip(&phi.blocks)
        .map(|(a, b)| a.solve(b))
        .collect::<Result<Vec<Mat>>>()
        .map_err(|_| Error::AssertionFailure("map does not factor through the quotient".into()))?;
    Ok(GradedMap { blocks })
}

/// Extends `j: K → E` along the inclusion `ι: K ↪ P`.
fn extend_along(iota: &ModuleMap, j: &GradedMap, target: &Module) -> Result<GradedMap> {
    let p = target.modulus();
    let big = &iota.target;
    let hs = hom_basis(big, target);
    let want = j.flatten();
    if want.iter().all(|&x| x == 0) {
        return Ok(GradedMap::zero(p, big.dims(), target.dims()));
    }
    let rows: Vec<Vec<u32>> = hs.iter().map(|h| iota.map.then(h).flatten()).collect();
    if rows.is_empty() {
        return Err(Error::AssertionFailure("no extension exists".into()));
    }
    let a = crate::algebra::rows_to_mat(p, want.len(), &rows);
    let c =
        a.solve_left(&Mat::row_vector(p, &want)).map_err(|_| Error::AssertionFailure("no extension exists".into()))?;
    let mut g = GradedMap::zero(p, big.dims(), target.dims());
    for (h, &x) in hs.iter().zip(c.row(0)) {
        if x != 0 {
            g = g.add(&h.scale(x));
        }
    }
    Ok(g)
}

impl DupContext {
    pub fn new(lam: Arc<Algebra>) -> Result<DupContext> {
        let bar = Arc::new(lam.duplicated()?);
        let n = lam.n_vertices();
        let d = lam.dim();
        let q_summands: Vec<Module> = (0..n).map(|i| crate::module::projective(&bar, i + n)).collect();
        let q = Module::direct_sum_of(&bar, &q_summands);
        let mut ctx = DupContext { lam, bar, n, d, q, q_summands, omega_inv: Vec::new(), forbidden: Vec::new() };
        ctx.omega_inv = (0..n).map(|i| cosyzygy(&ctx.embed_plain(&crate::module::projective(&ctx.lam, i)))).collect();
        let mut forbidden = ctx.q_summands.clone();
        for m in &ctx.omega_inv {
            for s in decompose(m)? {
                if !forbidden.iter().any(|f| iso_indecomposables(f, &s.module)) {
                    forbidden.push(s.module);
                }
            }
        }
        ctx.forbidden = forbidden;
        Ok(ctx)
    }

    fn check_base(&self, m: &Module) -> Result<()> {
        if m.algebra().fingerprint() != self.lam.fingerprint() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    fn check_bar(&self, m: &Module) -> Result<()> {
        if m.algebra().fingerprint() != self.bar.fingerprint() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// A Λ-module viewed as a Λ̄-module supported on plain vertices.
    pub fn embed_plain(&self, m: &Module) -> Module {
        let p = m.modulus();
        let mut dims = m.dims().to_vec();
        dims.extend(std::iter::repeat_n(0, self.n));
        let act = self
            .bar
            .basis()
            .iter()
            .enumerate()
            .map(|(k, e)| if k < self.d { m.act(k).clone() } else { Mat::zeros(p, dims[e.source], dims[e.target]) })
            .collect();
        Module::new(self.bar.clone(), dims, act).expect("plain embedding is a module")
    }

    /// `M•`: a Λ-module placed on the dotted vertices.
    pub fn dotted(&self, m: &Module) -> Module {
        let p = m.modulus();
        let mut dims = vec![0; self.n];
        dims.extend_from_slice(m.dims());
        let act = self
            .bar
            .basis()
            .iter()
            .enumerate()
            .map(|(k, e)| {
                if (self.d..2 * self.d).contains(&k) {
                    m.act(k - self.d).clone()
                } else {
                    Mat::zeros(p, dims[e.source], dims[e.target])
                }
            })
            .collect();
        Module::new(self.bar.clone(), dims, act).expect("dotted copy is a module")
    }

    pub fn embed_map(&self, g: &GradedMap) -> GradedMap {
        let p = self.lam.modulus();
        let mut blocks = g.blocks.clone();
        blocks.extend((0..self.n).map(|_| Mat::zeros(p, 0, 0)));
        GradedMap { blocks }
    }

    pub fn dotted_map(&self, g: &GradedMap) -> GradedMap {
        let p = self.lam.modulus();
        let mut blocks: Vec<Mat> = (0..self.n).map(|_| Mat::zeros(p, 0, 0)).collect();
        blocks.extend(g.blocks.iter().cloned());
        GradedMap { blocks }
    }

    /// The submodule of a Λ̄-module at the plain vertices, as a Λ-module.
    pub fn plain_part(&self, x: &Module) -> Module {
        let dims = x.dims()[..self.n].to_vec();
        let act = (0..self.d).map(|k| x.act(k).clone()).collect();
        Module::new(self.lam.clone(), dims, act).expect("plain part is a module")
    }

    /// The quotient of a Λ̄-module at the dotted vertices, as a Λ-module.
    pub fn dotted_part(&self, x: &Module) -> Module {
        let dims = x.dims()[self.n..].to_vec();
        let act = (0..self.d).map(|k| x.act(k + self.d).clone()).collect();
        Module::new(self.lam.clone(), dims, act).expect("dotted part is a module")
    }

    pub fn is_plain(&self, x: &Module) -> bool {
        x.dims()[self.n..].iter().all(|&v| v == 0)
    }

    pub fn is_dotted(&self, x: &Module) -> bool {
        x.dims()[..self.n].iter().all(|&v| v == 0)
    }

    /// F(M): the cokernel of `[f g]: P¹ → P⁰ ⊕ E` where `f` is the minimal
    /// presentation of M and `g` extends an injective envelope
    /// `Ω²M ↪ E` over Λ̄ along `Ω²M ⊆ P¹`.
    pub fn map_f(&self, m: &Module) -> Result<FImage> {
        self.check_base(m)?;
        let p = m.modulus();
        let pres = minimal_presentation(m);
        let f = proj_map_from_components(&self.bar, &pres.p1, &pres.p0, &pres.comps);
        let k = f.kernel();
        let env = injective_envelope(&k.source);
        let e = env.map.target.clone();
        let g = extend_along(&k, &env.map.map, &e)?;
        let big = ModuleMap { source: f.source.clone(), target: f.target.direct_sum(&e), map: f.map.hcat(&g) };
        let q = big.cokernel();
        let fm = q.target.clone();
        let em = self.embed_plain(m);
        let cover = self.embed_map(&pres.cover.map.map);
        let phi = cover.vcat(&GradedMap::zero(p, e.dims(), em.dims()));
        let pi = ModuleMap { source: fm.clone(), target: em, map: factor_through(&q.map, &phi)? };
        let ker_pi = pi.kernel();
        for s in decompose(&fm)? {
            if is_projective_injective(&s.module) {
                return Err(Error::AssertionFailure(format!(
                    "F({}) has a projective-injective summand {}",
                    m.label(),
                    s.module.label()
                )));
            }
        }
        Ok(FImage { module: fm, pi, ker_pi })
    }

    pub fn f(&self, m: &Module) -> Result<Module> {
        Ok(self.map_f(m)?.module)
    }

    /// Membership in H(Λ̄): pd ≤ 1 and no summand that is projective-injective
    /// or a summand of Ω⁻¹(proj Λ).
    pub fn in_h(&self, x: &Module) -> Result<bool> {
        self.check_bar(x)?;
        if !pd_at_most_one(x) {
            return Ok(false);
        }
        for s in decompose(x)? {
            if self.forbidden.iter().any(|f| iso_indecomposables(f, &s.module)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The inverse of F on H(Λ̄): the cokernel of the plain part of the
    /// minimal presentation.
    pub fn map_f_inverse(&self, x: &Module) -> Result<Module> {
        if !self.in_h(x)? {
            return Err(Error::NotInH);
        }
        let pres = minimal_presentation(x);
        if pres.p1.iter().any(|&i| i >= self.n) {
            return Err(Error::NotInH);
        }
        let keep: Vec<usize> = (0..pres.p0.len()).filter(|&l| pres.p0[l] < self.n).collect();
        let p0: Vec<usize> = keep.iter().map(|&l| pres.p0[l]).collect();
        let comps: ProjComponents = keep.iter().map(|&l| pres.comps[l].clone()).collect();
        if comps.iter().flatten().flatten().any(|&(k, _)| k >= self.d) {
            return Err(Error::AssertionFailure("plain component outside Λ".into()));
        }
        let f = proj_map_from_components(&self.lam, &pres.p1, &p0, &comps);
        let m = f.cokernel().target;
        if !is_isomorphic(&self.f(&m)?, x)? {
            return Err(Error::AssertionFailure(format!("F(F⁻¹({})) differs from the input", x.label())));
        }
        Ok(m)
    }

    /// F̄(M, P) = F(M) ⊕ Ω⁻¹P ⊕ Q.
    pub fn fbar_module(&self, m: &Module, support: &[usize]) -> Result<Module> {
        let mut parts = vec![self.f(m)?];
        parts.extend(support.iter().map(|&i| self.omega_inv[i].clone()));
        parts.push(self.q.clone());
        Ok(Module::direct_sum_of(&self.bar, &parts))
    }

    /// G(M): the cokernel of the presentation of M moved to the dotted copy.
    pub fn map_g(&self, m: &Module) -> Result<GImage> {
        self.check_base(m)?;
        let p = m.modulus();
        let pres = minimal_presentation(m);
        let src: Vec<usize> = pres.p1.iter().map(|&i| i + self.n).collect();
        let tgt: Vec<usize> = pres.p0.iter().map(|&i| i + self.n).collect();
        let comps: ProjComponents = pres
            .comps
            .iter()
            .map(|row| row.iter().map(|t| t.iter().map(|&(k, c)| (k + self.d, c)).collect()).collect())
            .collect();
        let gf = proj_map_from_components(&self.bar, &src, &tgt, &comps);
        let q = gf.cokernel();
        let gp0 = &gf.target;
        // ρ on G(P⁰): identity at the dotted vertices
        let mut rho0 = Vec::new();
        for v in 0..2 * self.n {
            if v < self.n {
                rho0.push(Mat::zeros(p, gp0.dims()[v], 0));
            } else {
                rho0.push(Mat::identity(p, gp0.dims()[v]));
            }
        }
        let rho0 = GradedMap { blocks: rho0 };
        let dm = self.dotted(m);
        let phi = rho0.then(&self.dotted_map(&pres.cover.map.map));
        let rho = ModuleMap { source: q.target.clone(), target: dm, map: factor_through(&q.map, &phi)? };
        let ker_rho = rho.kernel();
        Ok(GImage { module: q.target, rho, ker_rho })
    }

    pub fn g(&self, m: &Module) -> Result<Module> {
        Ok(self.map_g(m)?.module)
    }

    /// G(P) for P = ⊕ P(i), i ∈ `support`: the dotted vertices.
    pub fn g_support(&self, support: &[usize]) -> Vec<usize> {
        support.iter().map(|&i| i + self.n).collect()
    }

    pub fn g_proj(&self, support: &[usize]) -> Module {
        proj_sum(&self.bar, &self.g_support(support))
    }

    pub fn posets(&self, base_bound: usize, bar_bound: usize) -> Result<DupPosets> {
        let base = SttPoset::enumerate(&self.lam, base_bound)?;
        let bar = SttPoset::enumerate(&self.bar, bar_bound)?;
        Ok(DupPosets { base, bar })
    }

    fn base_module(&self, ps: &DupPosets, idx: usize) -> Module {
        ps.base.catalog.direct_sum(&ps.base.elements[idx].modules)
    }

    /// The pair (G(M), G(P)) over Λ̄, in catalog indices of Λ̄.
    pub fn g_pair(&self, ps: &DupPosets, idx: usize) -> Result<SttPair> {
        let el = &ps.base.elements[idx];
        let gm = self.g(&self.base_module(ps, idx))?;
        Ok(SttPair::new(ps.bar.catalog.decompose(&gm)?, self.g_support(&el.support)))
    }

    /// Ḡ(M, P) = (G(M) ⊕ Λ, G(P)) as an element of sτ-tilt Λ̄.
    pub fn gbar(&self, ps: &DupPosets, idx: usize) -> Result<usize> {
        let gp = self.g_pair(ps, idx)?;
        let mut mods = gp.modules.clone();
        for v in 0..self.n {
            mods.push(ps.bar.catalog.projective_index(v)?);
        }
        let pair = SttPair::new(mods, gp.support.clone());
        let k = ps
            .bar
            .index_of(&pair)
            .ok_or_else(|| Error::AssertionFailure(format!("Ḡ({}) is not support τ-tilting", ps.base.labels[idx])))?;
        let completion = ps.bar.bongartz_completion(&gp)?;
        if completion != k {
            return Err(Error::AssertionFailure(format!(
                "Ḡ({}) is not the Bongartz completion of G of it",
                ps.base.labels[idx]
            )));
        }
        Ok(k)
    }

    /// F̄(M, P) as an element of sτ-tilt Λ̄.
    pub fn fbar(&self, ps: &DupPosets, idx: usize) -> Result<usize> {
        let el = &ps.base.elements[idx];
        let t = self.fbar_module(&self.base_module(ps, idx), &el.support)?;
        let mods = ps.bar.catalog.decompose(&t)?;
        let pair = SttPair::new(mods, vec![]);
        ps.bar
            .index_of(&pair)
            .ok_or_else(|| Error::AssertionFailure(format!("F̄({}) is not support τ-tilting", ps.base.labels[idx])))
    }

    /// F̄_M(M', P'): the element `N` of the Bongartz interval of G(M, P) whose
    /// torsion-free part for (Fac G(M), G(M)^⊥) is M'.
    pub fn fm(&self, ps: &DupPosets, anchor: usize, target: usize) -> Result<usize> {
        let gp = self.g_pair(ps, anchor)?;
        let gm = ps.bar.catalog.direct_sum(&gp.modules);
        let want = {
            let mp = self.embed_plain(&self.base_module(ps, target));
            let mut v = ps.bar.catalog.decompose(&mp)?;
            v.sort();
            v
        };
        let cat = &ps.bar.catalog;
        let mut free_parts: Vec<Option<Vec<usize>>> = vec![None; cat.len()];
        let mut hits = Vec::new();
        for k in ps.bar.bongartz_interval(&gp) {
            let mut got = Vec::new();
            for &x in &ps.bar.elements[k].modules {
                if free_parts[x].is_none() {
                    let xm = cat.module(x);
                    let fx = xm.quotient(&trace(&gm, xm)).target;
                    free_parts[x] = Some(cat.decompose(&fx)?);
                }
                got.extend(free_parts[x].clone().unwrap());
            }
            got.sort();
            if got == want {
                hits.push(k);
            }
        }
        match hits.as_slice() {
            [k] => Ok(*k),
            [] => Err(Error::NotFound(format!(
                "no element over {} with torsion-free part {}",
                ps.base.labels[anchor], ps.base.labels[target]
            ))),
            _ => Err(Error::NotUnique(format!(
                "{} elements over {} with torsion-free part {}",
                hits.len(),
                ps.base.labels[anchor],
                ps.base.labels[target]
            ))),
        }
    }

    /// φ((M, P), (M', P')) = F̄_M(M', P').
    pub fn phi(&self, ps: &DupPosets, left: usize, right: usize) -> Result<usize> {
        self.fm(ps, left, right)
    }

    /// ψ(𝓜, 𝓜') = F̄₀(𝓜') ∘ Ḡ(𝓜): Ḡ applied to `first`, followed by F̄₀
    /// applied to `second`, glued at (Λ, Q).
    pub fn psi(&self, ps: &DupPosets, first: &[usize], second: &[usize]) -> Result<Vec<usize>> {
        let bottom = ps.base.poset.min().ok_or_else(|| Error::Precondition("base poset has no minimum".into()))?;
        let mut chain = Vec::new();
        for &x in first {
            chain.push(self.gbar(ps, x)?);
        }
        for (pos, &x) in second.iter().enumerate() {
            let y = self.fm(ps, bottom, x)?;
            if pos == 0 {
                if chain.last() != Some(&y) {
                    return Err(Error::NotMaximalChain("the two halves do not meet at (Λ, Q)".into()));
                }
                continue;
            }
            chain.push(y);
        }
        check_maximal_chain(&ps.bar, &chain)?;
        Ok(chain)
    }
}

/// A chain from the maximum to the minimum along cover relations.
pub fn check_maximal_chain(st: &SttPoset, chain: &[usize]) -> Result<()> {
    if chain.first().copied() != st.poset.max() || chain.last().copied() != st.poset.min() {
        return Err(Error::NotMaximalChain("chain does not run from (Λ, 0) to (0, Λ)".into()));
    }
    for w in chain.windows(2) {
        if !st.poset.is_cover(w[0], w[1]) {
            return Err(Error::NotMaximalChain(format!("{} does not cover {}", st.labels[w[0]], st.labels[w[1]])));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homological::is_projective;
    use crate::module::projective;
    use crate::module::tests::{a2, a3rel};

    #[test]
    fn f_of_simple_top() {
        let ctx = DupContext::new(a3rel()).unwrap();
        let s1 = Module::simple(ctx.lam.clone(), 0);
        let img = ctx.map_f(&s1).unwrap();
        assert_eq!(img.module.dims(), &[1, 1, 0, 0, 0, 1]);
        assert!(img.pi.is_homomorphism() && img.pi.is_surjective());
        assert!(ctx.in_h(&img.module).unwrap());
        let back = ctx.map_f_inverse(&img.module).unwrap();
        assert!(is_isomorphic(&back, &s1).unwrap());
    }

    #[test]
    fn f_fixes_projectives() {
        let ctx = DupContext::new(a2()).unwrap();
        for i in 0..2 {
            let p = projective(&ctx.lam, i);
            assert!(is_isomorphic(&ctx.f(&p).unwrap(), &ctx.embed_plain(&p)).unwrap());
        }
        assert!(ctx.f(&Module::zero(ctx.lam.clone())).unwrap().is_zero());
    }

    #[test]
    fn g_of_a2_modules() {
        let ctx = DupContext::new(a2()).unwrap();
        let gs = ctx.map_g(&Module::simple(ctx.lam.clone(), 0)).unwrap();
        assert!(is_isomorphic(&gs.module, &Module::simple(ctx.bar.clone(), 2)).unwrap());
        let gp = ctx.g(&projective(&ctx.lam, 0)).unwrap();
        assert!(is_isomorphic(&gp, &projective(&ctx.bar, 2)).unwrap());
        assert_eq!(gp.label(), "1•/2•/1");
        assert!(gs.rho.is_homomorphism() && gs.rho.is_surjective());
        assert!(ctx.g(&Module::zero(ctx.lam.clone())).unwrap().is_zero());
    }

    #[test]
    fn context_data() {
        let ctx = DupContext::new(a2()).unwrap();
        assert_eq!(ctx.q.dim(), 6);
        assert!(ctx.q_summands.iter().all(is_projective_injective));
        // Ω⁻¹ P(2) = 2•/1
        assert_eq!(ctx.omega_inv[1].label(), "2•/1");
        assert!(!ctx.in_h(&ctx.omega_inv[1]).unwrap());
        assert!(!ctx.in_h(&ctx.q_summands[0]).unwrap());
        assert!(!is_projective(&ctx.omega_inv[0]));
    }

    #[test]
    fn pentagon_images() {
        let ctx = DupContext::new(a2()).unwrap();
        let ps = ctx.posets(2, 3).unwrap();
        let top = ps.base.poset.max().unwrap();
        let bottom = ps.base.poset.min().unwrap();
        assert_eq!(ctx.gbar(&ps, top).unwrap(), ps.bar.poset.max().unwrap());
        assert_eq!(ps.bar.labels[ctx.gbar(&ps, bottom).unwrap()], "(1/2 ⊕ 2, P(1•)⊕P(2•))");
        assert_eq!(ctx.phi(&ps, bottom, bottom).unwrap(), ps.bar.poset.min().unwrap());
        assert_eq!(ctx.fbar(&ps, top).unwrap(), ctx.fm(&ps, top, top).unwrap());
        let mgs = ps.base.maximal_green_sequences();
        let chain = ctx.psi(&ps, &mgs[0], &mgs[1]).unwrap();
        assert_eq!(chain.len(), mgs[0].len() + mgs[1].len() - 1);
    }
}
