//! Covers, envelopes, presentations and the Auslander–Reiten translate.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::linalg::Mat;
use crate::module::{
    hom_basis, inj_sum, nakayama_map, proj_components, proj_sum, summand_offsets, GradedMap, Module, ModuleMap,
    ProjComponents,
};

/// A projective cover `⊕ P(tops[k]) ↠ M`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub tops: Vec<usize>,
    pub map: ModuleMap,
}

/// An injective envelope `M ↪ ⊕ I(socs[k])`.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub socs: Vec<usize>,
    pub map: ModuleMap,
}

/// A minimal projective presentation `P1 → P0 → M → 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    pub map: ModuleMap,
    pub comps: ProjComponents,
    pub cover: Cover,
    /// Ω M ↪ P0.
    pub omega: ModuleMap,
    /// Ω² M ↪ P1.
    pub omega2: ModuleMap,
}

/// Projective cover: the top representatives `m` (unit vectors off the
/// pivots of rad M) receive `e_i ↦ m`.
pub fn projective_cover(m: &Module) -> Cover {
    let alg = m.algebra();
    let p = alg.modulus();
    let nv = alg.n_vertices();
    let rad = m.radical_sub();
    let mut tops = Vec::new();
    let mut reps = Vec::new();
    for v in 0..nv {
        for c in rad.parts[v].complement() {
            tops.push(v);
            reps.push(c);
        }
    }
    let source = proj_sum(alg, &tops);
    let pdims: Vec<Vec<usize>> = tops.iter().map(|&i| (0..nv).map(|v| alg.block(i, v).len()).collect()).collect();
    let off = summand_offsets(&pdims, nv);
    let mut blocks: Vec<Mat> = (0..nv).map(|v| Mat::zeros(p, source.dims()[v], m.dims()[v])).collect();
    for (k, (&i, &c)) in tops.iter().zip(&reps).enumerate() {
        for v in 0..nv {
            for (r, &x) in alg.block(i, v).iter().enumerate() {
                blocks[v].row_mut(off[k][v] + r).copy_from_slice(m.act(x).row(c));
            }
        }
    }
    Cover { tops, map: ModuleMap { source, target: m.clone(), map: GradedMap { blocks } } }
}

/// Injective envelope: each socle basis vector (reduced echelon form) is
/// detected by the coordinate at its pivot, and `m ↦ Σ_x φ(m·x) x*`.
pub fn injective_envelope(m: &Module) -> Envelope {
    let alg = m.algebra();
    let p = alg.modulus();
    let nv = alg.n_vertices();
    let soc = m.socle_sub();
    let mut socs = Vec::new();
    let mut cols = Vec::new();
    for v in 0..nv {
        for &c in &soc.parts[v].pivots {
            socs.push(v);
            cols.push(c);
        }
    }
    let target = inj_sum(alg, &socs);
    let idims: Vec<Vec<usize>> = socs.iter().map(|&i| (0..nv).map(|v| alg.block(v, i).len()).collect()).collect();
    let off = summand_offsets(&idims, nv);
    let mut blocks: Vec<Mat> = (0..nv).map(|v| Mat::zeros(p, m.dims()[v], target.dims()[v])).collect();
    for (k, (&i, &c)) in socs.iter().zip(&cols).enumerate() {
        for v in 0..nv {
            for (pos, &x) in alg.block(v, i).iter().enumerate() {
                let rho = m.act(x);
                for r in 0..m.dims()[v] {
                    blocks[v].set(r, off[k][v] + pos, rho.get(r, c));
                }
            }
        }
    }
    let map = ModuleMap { source: m.clone(), target, map: GradedMap { blocks } };
    debug_assert!(map.is_injective());
    Envelope { socs, map }
}

pub fn syzygy(m: &Module) -> Module {
    projective_cover(m).map.kernel().source
}

pub fn cosyzygy(m: &Module) -> Module {
    injective_envelope(m).map.cokernel().target
}

pub fn minimal_presentation(m: &Module) -> Presentation {
    let alg = m.algebra();
    let cover = projective_cover(m);
    let omega = cover.map.kernel();
    let c1 = projective_cover(&omega.source);
    let omega2 = c1.map.kernel();
    let map =
        ModuleMap { source: c1.map.source.clone(), target: cover.map.source.clone(), map: c1.map.map.then(&omega.map) };
    let comps = proj_components(alg, &c1.tops, &cover.tops, &map.map);
    Presentation { p1: c1.tops, p0: cover.tops.clone(), map, comps, cover, omega, omega2 }
}

pub fn second_syzygy(m: &Module) -> Module {
    minimal_presentation(m).omega2.source
}

/// ν(⊕ P(i)) = ⊕ I(i).
pub fn nakayama_of_projective(alg: &Arc<Algebra>, tops: &[usize]) -> Module {
    inj_sum(alg, tops)
}

/// τM = ker ν(f) for the minimal presentation f: P1 → P0.
pub fn tau(m: &Module) -> Module {
    let pres = minimal_presentation(m);
    nakayama_map(m.algebra(), &pres.p1, &pres.p0, &pres.comps).kernel().source
}

/// τ computed from an already available minimal presentation.
pub fn tau_from_presentation(alg: &Arc<Algebra>, pres: &Presentation) -> Module {
    nakayama_map(alg, &pres.p1, &pres.p0, &pres.comps).kernel().source
}

/// dim Ext¹(M, N) = dim Hom(ΩM, N) − rank of restriction from Hom(P0, N).
pub fn ext1(m: &Module, n: &Module) -> usize {
    let cover = projective_cover(m);
    let omega = cover.map.kernel();
    let hk = hom_basis(&omega.source, n);
    if hk.is_empty() {
        return 0;
    }
    let p = m.modulus();
    let rows: Vec<Vec<u32>> = hom_basis(&cover.map.source, n).iter().map(|h| omega.map.then(h).flatten()).collect();
    let width = hk[0].flatten().len();
    let rank = if rows.is_empty() || width == 0 { 0 } else { crate::algebra::rows_to_mat(p, width, &rows).rank() };
    hk.len() - rank
}

pub fn is_projective(m: &Module) -> bool {
    projective_cover(m).map.source.dim() == m.dim()
}

pub fn is_injective(m: &Module) -> bool {
    injective_envelope(m).map.target.dim() == m.dim()
}

pub fn is_projective_injective(m: &Module) -> bool {
    is_projective(m) && is_injective(m)
}

/// pd M ≤ 1 iff Ω M is projective.
pub fn pd_at_most_one(m: &Module) -> bool {
    is_projective(&syzygy(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::{a2, a3rel};
    use crate::module::{hom_dim, injective, projective};

    #[test]
    fn covers_and_syzygies() {
        let a = a2();
        let s1 = Module::simple(a.clone(), 0);
        let c = projective_cover(&s1);
        assert_eq!(c.tops, vec![0]);
        assert!(c.map.is_homomorphism() && c.map.is_surjective());
        assert_eq!(syzygy(&s1).dims(), &[0, 1]);
        let p1 = projective(&a, 0);
        assert_eq!(projective_cover(&p1).map.source.dim(), 2);
        assert!(syzygy(&Module::simple(a.clone(), 1)).is_zero());
        let z = Module::zero(a.clone());
        assert!(projective_cover(&z).tops.is_empty());
    }

    #[test]
    fn presentation_over_relation_algebra() {
        let a = a3rel();
        let s1 = Module::simple(a.clone(), 0);
        let pres = minimal_presentation(&s1);
        assert_eq!(pres.p0, vec![0]);
        assert_eq!(pres.p1, vec![1]);
        assert_eq!(pres.omega.source.dims(), &[0, 1, 0]);
        assert_eq!(pres.omega2.source.dims(), &[0, 0, 1]);
        assert!(pres.map.is_homomorphism());
        assert!(!pd_at_most_one(&s1));
        assert!(pd_at_most_one(&projective(&a, 0)));
    }

    #[test]
    fn envelopes() {
        let a = a2();
        let p1 = projective(&a, 0);
        let e = injective_envelope(&p1);
        assert_eq!(e.socs, vec![1]);
        assert!(e.map.is_homomorphism() && e.map.is_injective());
        assert!(is_injective(&injective(&a, 0)));
        assert!(is_projective(&Module::simple(a.clone(), 1)));
        assert!(!is_injective(&Module::simple(a.clone(), 1)));
        assert!(injective_envelope(&Module::zero(a.clone())).socs.is_empty());
    }

    #[test]
    fn translate_and_ext() {
        let a = a2();
        let (s1, s2) = (Module::simple(a.clone(), 0), Module::simple(a.clone(), 1));
        assert_eq!(tau(&s1).dims(), &[0, 1]);
        assert!(tau(&projective(&a, 0)).is_zero());
        assert_eq!(ext1(&s1, &s2), 1);
        assert_eq!(ext1(&s2, &s1), 0);
        assert_eq!(ext1(&projective(&a, 0), &s2), 0);
        // ν P(1) = I(1) = S(1)
        assert_eq!(nakayama_of_projective(&a, &[0]).dims(), &[1, 0]);
        // Auslander–Reiten formula for pd ≤ 1
        assert_eq!(ext1(&s1, &s2), hom_dim(&s2, &tau(&s1)));
    }
}
