//! Krull–Schmidt decomposition and isomorphism tests.
//!
//! A module is split by the Fitting decomposition of an endomorphism that is
//! neither nilpotent nor invertible.  Locality of End(M) with End/rad = k is
//! certified in polynomial time; the exhaustive scan is only a fallback.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::module::{hom_basis, GradedMap, Module, Subspace};

/// Default largest |End(M)| that the exhaustive fallback is allowed to scan.
pub const END_SCAN_LIMIT: u64 = 1 << 20;

static SCAN_LIMIT: AtomicU64 = AtomicU64::new(END_SCAN_LIMIT);

/// Current scan threshold (process wide).
pub fn end_scan_limit() -> u64 {
    SCAN_LIMIT.load(Ordering::Relaxed)
}

/// Changes the scan threshold for the whole process.
pub fn set_end_scan_limit(limit: u64) {
    SCAN_LIMIT.store(limit, Ordering::Relaxed);
}

/// An indecomposable summand with its inclusion into the decomposed module.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: GradedMap,
}

/// Outcome of analysing End(M).
#[derive(Clone, Debug)]
pub enum EndShape {
    /// End(M) = k·id ⊕ N with N the nilpotent radical (basis given).
    SplitLocal(Vec<GradedMap>),
    /// An endomorphism that is neither nilpotent nor invertible.
    Splitting(GradedMap),
}

fn identity_like(m: &Module) -> GradedMap {
    GradedMap::identity(m.modulus(), m.dims())
}

fn breaks(phi: &GradedMap) -> bool {
    let total_rank = phi.rank();
    let dim: usize = phi.src_dims().iter().sum();
    total_rank < dim && !phi.is_nilpotent()
}

/// Analyses End(M) for a nonzero module `m`.
pub fn end_shape(m: &Module) -> Result<EndShape> {
    let p = m.modulus();
    let basis = hom_basis(m, m);
    let id = identity_like(m);
    let r = basis.len();
    // stage 1: translates of basis elements by scalars
    let mut shifted = Vec::with_capacity(r);
    for b in &basis {
        let mut found = None;
        for c in 0..p {
            let phi = b.sub(&id.scale(c));
            if breaks(&phi) {
                return Ok(EndShape::Splitting(phi));
            }
            if phi.is_nilpotent() {
                found = Some(phi);
            }
        }
        shifted.push(found);
    }
    // stage 2: certify k·id ⊕ N with N a nilpotent subalgebra of codimension 1
    if shifted.iter().all(|s| s.is_some()) {
        let ns: Vec<GradedMap> = shifted.into_iter().map(|s| s.unwrap()).collect();
        if let Some(rad) = certify_radical(m, &ns, r) {
            return Ok(EndShape::SplitLocal(rad));
        }
    }
    // stage 3: two-term combinations
    for i in 0..r {
        for j in i + 1..r {
            for a in 1..p {
                let base = basis[i].add(&basis[j].scale(a));
                for c in 0..p {
                    let phi = base.sub(&id.scale(c));
                    if breaks(&phi) {
                        return Ok(EndShape::Splitting(phi));
                    }
                }
            }
        }
    }
    // stage 4: every element
    let size = (p as u64).checked_pow(r as u32).unwrap_or(u64::MAX);
    if size > end_scan_limit() {
        return Err(Error::EndTooLarge { dim: r, modulus: p });
    }
    let mut coeffs = vec![0u32; r];
    loop {
        let mut k = 0;
        while k < r {
            coeffs[k] += 1;
            if coeffs[k] < p {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
        let mut phi = GradedMap::zero(p, m.dims(), m.dims());
        for (b, &c) in basis.iter().zip(&coeffs) {
            if c != 0 {
                phi = phi.add(&b.scale(c));
            }
        }
        if breaks(&phi) {
            return Ok(EndShape::Splitting(phi));
        }
    }
    // local, but End/rad is a proper extension of the base field
    Err(Error::NotAbsolutelyIndecomposable(r))
}

/// Checks that `span(ns)` is a nilpotent subalgebra of codimension 1 in an
/// `r`-dimensional End; returns a basis of it.
fn certify_radical(m: &Module, ns: &[GradedMap], r: usize) -> Option<Vec<GradedMap>> {
    let p = m.modulus();
    let dims = m.dims();
    let width: usize = dims.iter().map(|d| d * d).sum();
    if r == 0 {
        return None;
    }
    let rows: Vec<Vec<u32>> = ns.iter().map(|g| g.flatten()).collect();
    let span = crate::linalg::EchelonBasis::new(&crate::algebra::rows_to_mat(p, width, &rows));
    if span.dim() != r - 1 {
        return None;
    }
    let nb: Vec<GradedMap> = (0..span.dim()).map(|k| GradedMap::unflatten(p, dims, dims, span.basis.row(k))).collect();
    for a in &nb {
        for b in &nb {
            if !span.contains(&a.then(b).flatten()) {
                return None;
            }
        }
    }
    // nilpotency of the subalgebra: N^k = 0 for k = dim M + 1 at most
    let mut power: Vec<GradedMap> = nb.clone();
    for _ in 0..=m.dim() {
        if power.iter().all(|g| g.is_zero()) {
            return Some(nb);
        }
        let mut next = Vec::new();
        for a in &power {
            for b in &nb {
                let c = a.then(b);
                if !c.is_zero() {
                    next.push(c.flatten());
                }
            }
        }
        if next.is_empty() {
            return Some(nb);
        }
        let e = crate::linalg::EchelonBasis::new(&crate::algebra::rows_to_mat(p, width, &next));
        power = (0..e.dim()).map(|k| GradedMap::unflatten(p, dims, dims, e.basis.row(k))).collect();
    }
    None
}

/// Radical of End(M) for an indecomposable M whose End is split local.
pub fn local_radical(m: &Module) -> Result<Vec<GradedMap>> {
    match end_shape(m)? {
        EndShape::SplitLocal(n) => Ok(n),
        EndShape::Splitting(_) => Err(Error::Precondition("module is decomposable".into())),
    }
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(matches!(end_shape(m)?, EndShape::SplitLocal(_)))
}

/// Fitting decomposition M = ker φ^n ⊕ im φ^n.
fn fitting(m: &Module, phi: &GradedMap) -> (Subspace, Subspace) {
    let big = phi.pow(m.dim() as u32);
    (big.kernel(), big.image())
}

/// Splits `m` into indecomposable summands.
pub fn decompose(m: &Module) -> Result<Vec<Summand>> {
    let mut out = Vec::new();
    let id = identity_like(m);
    decompose_into(m, id, &mut out)?;
    Ok(out)
}

fn decompose_into(m: &Module, inclusion: GradedMap, out: &mut Vec<Summand>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    match end_shape(m)? {
        EndShape::SplitLocal(_) => out.push(Summand { module: m.clone(), inclusion }),
        EndShape::Splitting(phi) => {
            let (k, i) = fitting(m, &phi);
            for part in [k, i] {
                let inc = m.submodule(&part);
                decompose_into(&inc.source, inc.map.then(&inclusion), out)?;
            }
        }
    }
    Ok(())
}

/// Isomorphism of indecomposables: some composite of basis maps
/// M → N → M is invertible.
pub fn iso_indecomposables(m: &Module, n: &Module) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    let fs = hom_basis(m, n);
    if fs.is_empty() {
        return m.is_zero();
    }
    let gs = hom_basis(n, m);
    fs.iter().any(|f| f.is_invertible()) || fs.iter().any(|f| gs.iter().any(|g| f.then(g).is_invertible()))
}

/// Isomorphism of arbitrary modules, decided exactly: quick invariants, a
/// direct search among basis maps, then comparison of decompositions.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let fs = hom_basis(m, n);
    if fs.iter().any(|f| f.is_invertible()) {
        return Ok(true);
    }
    let (hmm, hnn) = (hom_basis(m, m).len(), hom_basis(n, n).len());
    if hmm != hnn || hmm != fs.len() || hom_basis(n, m).len() != hmm {
        return Ok(false);
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for a in &dm {
        let hit = dn.iter().enumerate().position(|(k, b)| !used[k] && iso_indecomposables(&a.module, &b.module));
        match hit {
            Some(k) => used[k] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Searches for an injective homomorphism M → N among basis maps and their
/// small combinations; exhaustive when |Hom| ≤ 2¹⁶.
pub fn find_mono(m: &Module, n: &Module) -> Option<GradedMap> {
    let p = m.modulus();
    let hs = hom_basis(m, n);
    if m.is_zero() {
        return Some(GradedMap::zero(p, m.dims(), n.dims()));
    }
    if let Some(h) = hs.iter().find(|h| h.is_injective()) {
        return Some(h.clone());
    }
    let r = hs.len();
    let size = (p as u64).checked_pow(r as u32).unwrap_or(u64::MAX);
    if size > 1 << 16 {
        return None;
    }
    let mut coeffs = vec![0u32; r];
    loop {
        let mut k = 0;
        while k < r {
            coeffs[k] += 1;
            if coeffs[k] < p {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
        if k == r {
            return None;
        }
        let mut phi = GradedMap::zero(p, m.dims(), n.dims());
        for (b, &c) in hs.iter().zip(&coeffs) {
            if c != 0 {
                phi = phi.add(&b.scale(c));
            }
        }
        if phi.is_injective() {
            return Some(phi);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::projective;
    use crate::module::tests::{a2, a3rel};

    #[test]
    fn projectives_are_indecomposable() {
        for a in [a2(), a3rel()] {
            for i in 0..a.n_vertices() {
                let p = projective(&a, i);
                let d = decompose(&p).unwrap();
                assert_eq!(d.len(), 1);
                assert!(is_indecomposable(&p).unwrap());
            }
        }
    }

    #[test]
    fn sums_split() {
        let a = a2();
        let m = projective(&a, 0).direct_sum(&Module::simple(a.clone(), 0));
        let d = decompose(&m).unwrap();
        assert_eq!(d.len(), 2);
        let total: usize = d.iter().map(|s| s.module.dim()).sum();
        assert_eq!(total, 3);
        for s in &d {
            let inc = crate::module::ModuleMap::new(s.module.clone(), m.clone(), s.inclusion.clone()).unwrap();
            assert!(inc.is_injective());
        }
        let sq = Module::simple(a.clone(), 0).direct_sum(&Module::simple(a.clone(), 0));
        assert_eq!(decompose(&sq).unwrap().len(), 2);
    }

    #[test]
    fn isomorphism() {
        let a = a2();
        let p1 = projective(&a, 0);
        let i2 = crate::module::injective(&a, 1);
        assert!(is_isomorphic(&p1, &i2).unwrap());
        assert!(is_isomorphic(&p1, &p1).unwrap());
        let ss = Module::semisimple(a.clone(), vec![1, 1]);
        assert!(!is_isomorphic(&p1, &ss).unwrap());
        let x = p1.direct_sum(&Module::simple(a.clone(), 0));
        let y = Module::simple(a.clone(), 0).direct_sum(&i2);
        assert!(is_isomorphic(&x, &y).unwrap());
        let dup = std::sync::Arc::new(a.duplicated().unwrap());
        let (p1d, p2d) = (projective(&dup, 2), projective(&dup, 3));
        assert_eq!(p1d.dim(), 3);
        assert_eq!(p2d.dim(), 3);
        assert!(!is_isomorphic(&p1d, &p2d).unwrap());
    }
}
