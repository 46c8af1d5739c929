//! Executable checks of the statements relating Λ and Λ̄.
//!
//! Each check runs over the complete enumerated data and yields a
//! [`Report`]; failures are report content, not errors.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::decompose::{decompose, find_mono, is_isomorphic};
use crate::dup::{check_maximal_chain, DupContext, DupPosets};
use crate::error::{Error, Result};
use crate::homological::{ext1, is_projective, pd_at_most_one, tau};
use crate::module::{hom_dim, Module};
use crate::tautilt::{jasso_reduction, SttPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check: `{theorem, status, counts, witnesses}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub theorem: String,
    pub status: Status,
    pub counts: BTreeMap<String, usize>,
    pub witnesses: Vec<String>,
}

const MAX_WITNESSES: usize = 20;

impl Report {
    pub fn new(theorem: &str) -> Report {
        Report { theorem: theorem.to_string(), status: Status::Pass, counts: BTreeMap::new(), witnesses: Vec::new() }
    }
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.status = Status::Fail;
        *self.counts.entry("failures".into()).or_default() += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness.into());
        }
    }
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        *self.counts.entry("checked".into()).or_default() += 1;
        if !ok {
            self.fail(witness());
        }
    }
    pub fn count(&mut self, key: &str, v: usize) {
        self.counts.insert(key.to_string(), v);
    }
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Check identifiers, each with the alternative names it answers to.
pub const THEOREMS: &[(&str, &[&str])] = &[
    ("f-bijection", &["thm:bij"]),
    ("rigid-bijection", &["thm:rigid_bij"]),
    ("fbar-tilting", &["thm:f"]),
    ("gbar-completion", &["thm:g"]),
    ("gbar-interval", &["cor:g"]),
    ("fbar-equals-f-lambda", &["prop:fg"]),
    ("tilt-interval", &["cor:all"]),
    ("phi-embedding", &["cor:cross"]),
    ("psi-injective", &["thm:psi"]),
    ("reduction", &["thm:red"]),
];

pub fn canonical_theorem_id(id: &str) -> Option<&'static str> {
    THEOREMS.iter().find(|(name, aliases)| *name == id || aliases.contains(&id)).map(|(name, _)| *name)
}

pub fn verify(ctx: &DupContext, ps: &DupPosets, id: &str) -> Result<Report> {
    let name = canonical_theorem_id(id).ok_or_else(|| Error::NotFound(format!("unknown check {id}")))?;
    let mut r = Report::new(name);
    match name {
        "f-bijection" => f_bijection(ctx, ps, &mut r)?,
        "rigid-bijection" => rigid_bijection(ctx, ps, &mut r)?,
        "fbar-tilting" => fbar_tilting(ctx, ps, &mut r)?,
        "gbar-completion" => gbar_completion(ctx, ps, &mut r)?,
        "gbar-interval" => gbar_interval(ctx, ps, &mut r)?,
        "fbar-equals-f-lambda" => fbar_equals_f_lambda(ctx, ps, &mut r)?,
        "tilt-interval" => tilt_interval(ctx, ps, &mut r)?,
        "phi-embedding" => phi_embedding(ctx, ps, &mut r)?,
        "psi-injective" => psi_injective(ctx, ps, &mut r)?,
        "reduction" => reduction(ctx, ps, &mut r)?,
        _ => unreachable!(),
    }
    Ok(r)
}

pub fn verify_all(ctx: &DupContext, ps: &DupPosets) -> Result<Vec<Report>> {
    THEOREMS.iter().map(|(name, _)| verify(ctx, ps, name)).collect()
}

/// Runs `body`, turning an error into a failure of the report.
fn guarded<T>(r: &mut Report, what: impl FnOnce() -> String, body: impl FnOnce() -> Result<T>) -> Option<T> {
    match body() {
        Ok(v) => Some(v),
        Err(e) => {
            r.fail(format!("{}: {e}", what()));
            None
        }
    }
}

/// `f` (from `base` into `bar`) reflects and preserves the order.
fn is_order_embedding(ps: &DupPosets, f: &[usize]) -> bool {
    let n = f.len();
    (0..n).all(|a| (0..n).all(|b| ps.base.poset.leq[a][b] == ps.bar.poset.leq[f[a]][f[b]]))
}

fn same_set(a: &[usize], b: &[usize]) -> bool {
    a.iter().collect::<BTreeSet<_>>() == b.iter().collect::<BTreeSet<_>>()
}

fn f_bijection(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    let base = &ps.base.catalog;
    let bar = &ps.bar.catalog;
    let mut images = Vec::new();
    for k in 0..base.len() {
        let m = base.module(k);
        let Some(fm) = guarded(r, || format!("F({})", base.label(k)), || ctx.f(m)) else { continue };
        let idx = bar.identify(&fm);
        r.check(idx.is_some(), || format!("F({}) = {} is not indecomposable", base.label(k), fm.label()));
        if let Some(i) = idx {
            r.check(ctx.in_h(&fm)?, || format!("F({}) = {} is not in H", base.label(k), bar.label(i)));
            images.push(i);
        }
    }
    let h: Vec<usize> = (0..bar.len()).filter(|&i| ctx.in_h(bar.module(i)).unwrap_or(false)).collect();
    let distinct: BTreeSet<usize> = images.iter().copied().collect();
    r.check(distinct.len() == images.len(), || "F is not injective on indecomposables".into());
    r.check(same_set(&images, &h), || format!("image of F has {} modules, H has {}", distinct.len(), h.len()));
    for &i in &h {
        let x = bar.module(i);
        if let Some(m) = guarded(r, || format!("F⁻¹({})", bar.label(i)), || ctx.map_f_inverse(x)) {
            r.check(base.identify(&m).is_some(), || format!("F⁻¹({}) is not an indecomposable Λ-module", bar.label(i)));
        }
    }
    r.count("indecomposables", base.len());
    r.count("h_indecomposables", h.len());
    Ok(())
}

fn rigid_bijection(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    let base = &ps.base.catalog;
    let mut tested = Vec::new();
    for a in 0..base.len() {
        tested.push(vec![a]);
        for b in a..base.len() {
            tested.push(vec![a, b]);
        }
    }
    let mut rigid = 0;
    for idx in &tested {
        let m = base.direct_sum(idx);
        let name = idx.iter().map(|&k| base.label(k)).collect::<Vec<_>>().join(" ⊕ ");
        let Some(fm) = guarded(r, || format!("F({name})"), || ctx.f(&m)) else { continue };
        let lhs = hom_dim(&m, &tau(&m)) == 0;
        let rhs = ext1(&fm, &fm) == 0;
        rigid += lhs as usize;
        r.check(lhs == rhs, || format!("{name}: τ-rigid {lhs}, F rigid {rhs}"));
    }
    r.count("modules", tested.len());
    r.count("tau_rigid", rigid);
    Ok(())
}

fn images(r: &mut Report, ps: &DupPosets, what: &str, mut f: impl FnMut(usize) -> Result<usize>) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..ps.base.len() {
        match f(k) {
            Ok(v) => out.push(v),
            Err(e) => {
                r.fail(format!("{what}{}: {e}", ps.base.labels[k]));
                return None;
            }
        }
    }
    Some(out)
}

fn fbar_tilting(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    let tilt = ps.bar.tilt_subposet();
    r.count("stt_base", ps.base.len());
    r.count("tilt_bar", tilt.len());
    let Some(img) = images(r, ps, "F̄", |k| ctx.fbar(ps, k)) else { return Ok(()) };
    r.check(same_set(&img, &tilt) && img.len() == tilt.len(), || "F̄ is not a bijection onto tilt Λ̄".into());
    r.check(is_order_embedding(ps, &img), || "F̄ is not an order isomorphism".into());
    Ok(())
}

fn gbar_completion(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    for k in 0..ps.base.len() {
        let ok = guarded(r, || format!("Ḡ{}", ps.base.labels[k]), || ctx.gbar(ps, k)).is_some();
        r.check(ok, || format!("Ḡ{} failed", ps.base.labels[k]));
    }
    r.count("stt_base", ps.base.len());
    Ok(())
}

fn plain_projectives(ctx: &DupContext, ps: &DupPosets) -> Result<SttPair> {
    let mods = (0..ctx.n).map(|v| ps.bar.catalog.projective_index(v)).collect::<Result<Vec<_>>>()?;
    Ok(SttPair::new(mods, vec![]))
}

fn gbar_interval(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    let interval = ps.bar.bongartz_interval(&plain_projectives(ctx, ps)?);
    r.count("interval", interval.len());
    r.count("stt_base", ps.base.len());
    let Some(img) = images(r, ps, "Ḡ", |k| ctx.gbar(ps, k)) else { return Ok(()) };
    r.check(same_set(&img, &interval) && img.len() == interval.len(), || {
        "Ḡ is not a bijection onto the Bongartz interval of Λ".into()
    });
    r.check(is_order_embedding(ps, &img), || "Ḡ is not an order isomorphism".into());
    Ok(())
}

fn fbar_equals_f_lambda(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    let top = ps.base.poset.max().ok_or_else(|| Error::Precondition("no maximum".into()))?;
    for k in 0..ps.base.len() {
        let a = guarded(r, || format!("F̄{}", ps.base.labels[k]), || ctx.fbar(ps, k));
        let b = guarded(r, || format!("F̄_Λ{}", ps.base.labels[k]), || ctx.fm(ps, top, k));
        if let (Some(a), Some(b)) = (a, b) {
            r.check(a == b, || {
                format!("{}: F̄ gives {}, F̄_Λ gives {}", ps.base.labels[k], ps.bar.labels[a], ps.bar.labels[b])
            });
        }
    }
    r.count("stt_base", ps.base.len());
    Ok(())
}

fn tilt_interval(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    let q = (0..ctx.n).map(|v| ps.bar.catalog.projective_index(v + ctx.n)).collect::<Result<Vec<_>>>()?;
    let interval = ps.bar.bongartz_interval(&SttPair::new(vec![], vec![]));
    let interval: Vec<usize> =
        interval.into_iter().filter(|&k| q.iter().all(|x| ps.bar.elements[k].modules.contains(x))).collect();
    let tilt = ps.bar.tilt_subposet();
    r.count("interval", interval.len());
    r.count("tilt_bar", tilt.len());
    r.count("stt_base", ps.base.len());
    r.check(same_set(&interval, &tilt), || "the interval of Q differs from tilt Λ̄".into());
    r.check(interval.len() == ps.base.len(), || "the interval of Q has the wrong size".into());
    // cover-preserving: covers inside tilt Λ̄ are covers of sτ-tilt Λ̄
    let sub = ps.bar.poset.restrict(&tilt);
    for &(u, l) in &sub.hasse {
        r.check(ps.bar.poset.is_cover(tilt[u], tilt[l]), || {
            format!("{} > {} is not a cover", ps.bar.labels[tilt[u]], ps.bar.labels[tilt[l]])
        });
    }
    Ok(())
}

fn phi_embedding(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    let n = ps.base.len();
    let mut val = vec![vec![0usize; n]; n];
    for a in 0..n {
        let Some(img) = images(r, ps, &format!("φ{}, ", ps.base.labels[a]), |b| ctx.phi(ps, a, b)) else {
            return Ok(());
        };
        let gp = ctx.g_pair(ps, a)?;
        let interval = ps.bar.bongartz_interval(&gp);
        r.check(same_set(&img, &interval) && interval.len() == n, || {
            format!("image of F̄ over {} is not the interval of G of it", ps.base.labels[a])
        });
        r.check(is_order_embedding(ps, &img), || format!("F̄ over {} is not an order isomorphism", ps.base.labels[a]));
        val[a] = img;
    }
    let all: BTreeSet<usize> = val.iter().flatten().copied().collect();
    r.count("values", n * n);
    r.count("distinct_values", all.len());
    r.check(all.len() == n * n, || "φ is not injective".into());
    let leq = &ps.base.poset.leq;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !leq[a][c] {
                    continue;
                }
                for d in 0..n {
                    if leq[b][d] {
                        let ok = ps.bar.poset.leq[val[a][b]][val[c][d]];
                        r.check(ok, || {
                            format!(
                                "φ({}, {}) ≰ φ({}, {})",
                                ps.base.labels[a], ps.base.labels[b], ps.base.labels[c], ps.base.labels[d]
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn psi_injective(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    let mgs = ps.base.maximal_green_sequences();
    let mut seen = BTreeSet::new();
    for (i, m1) in mgs.iter().enumerate() {
        for (j, m2) in mgs.iter().enumerate() {
            if let Some(chain) = guarded(r, || format!("ψ({i}, {j})"), || ctx.psi(ps, m1, m2)) {
                r.check(check_maximal_chain(&ps.bar, &chain).is_ok(), || format!("ψ({i}, {j}) is not maximal"));
                r.check(seen.insert(chain), || format!("ψ({i}, {j}) repeats an earlier value"));
            }
        }
    }
    r.count("mgs_base", mgs.len());
    r.count("psi_images", seen.len());
    Ok(())
}

fn reduction(ctx: &DupContext, ps: &DupPosets, r: &mut Report) -> Result<()> {
    let bound = ps.base.catalog.bound;
    for k in 0..ps.base.len() {
        let gp = ctx.g_pair(ps, k)?;
        let Some(red) =
            guarded(r, || format!("reduction at {}", ps.base.labels[k]), || jasso_reduction(&ps.bar, &gp, bound))
        else {
            continue;
        };
        r.check(red.reduced_algebra.dim() == ctx.lam.dim(), || {
            format!("{}: reduced algebra has dimension {}", ps.base.labels[k], red.reduced_algebra.dim())
        });
        r.check(red.reduced.len() == ps.base.len(), || {
            format!("{}: reduced poset has the wrong size", ps.base.labels[k])
        });
        r.check(red.is_order_isomorphism(&ps.bar), || {
            format!("{}: reduction is not an order isomorphism", ps.base.labels[k])
        });
    }
    r.count("anchors", ps.base.len());
    Ok(())
}

/// Per-module statements, each checked for a single Λ-module.
pub const MODULE_PROPERTIES: &[&str] = &[
    "F-pd-at-most-one",
    "F-fixes-exactly-pd-one",
    "F-preserves-indecomposability",
    "F-round-trip",
    "F-rigid-iff-tau-rigid",
    "tau-plain-part",
    "tau-hom-restriction",
    "tau-F-embedding",
    "G-indecomposability",
    "G-kernel-plain",
    "G-tau",
    "G-tau-rigid-pairs",
    "hom-ext-vanishing",
];

/// Outcome of one property on one input.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub property: &'static str,
    pub ok: bool,
    pub detail: String,
}

fn outcome(property: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    Outcome { property, ok, detail: if ok { String::new() } else { detail() } }
}

fn count_summands(m: &Module) -> Result<usize> {
    Ok(decompose(m)?.len())
}

/// Checks every statement of [`MODULE_PROPERTIES`] for a Λ-module `m`.
pub fn module_properties(ctx: &DupContext, m: &Module) -> Result<Vec<Outcome>> {
    let name = m.label();
    let mut out = Vec::new();
    let fimg = ctx.map_f(m)?;
    let fm = &fimg.module;
    let em = ctx.embed_plain(m);
    let pd1 = pd_at_most_one(m);
    out.push(outcome("F-pd-at-most-one", pd_at_most_one(fm), || format!("pd F({name}) > 1")));
    let fixed = is_isomorphic(fm, &em)?;
    out.push(outcome("F-fixes-exactly-pd-one", fixed == pd1, || format!("{name}: F fixes {fixed}, pd ≤ 1 {pd1}")));
    let (cm, cf) = (count_summands(m)?, count_summands(fm)?);
    out.push(outcome("F-preserves-indecomposability", (cm == 1) == (cf == 1) && cm == cf, || {
        format!("{name} has {cm} summands, F of it has {cf}")
    }));
    let rt = ctx.in_h(fm)? && is_isomorphic(&ctx.map_f_inverse(fm)?, m)?;
    out.push(outcome("F-round-trip", rt, || format!("F⁻¹(F({name})) ≇ {name}")));
    let tau_m = tau(m);
    let rigid = hom_dim(m, &tau_m) == 0;
    let frigid = ext1(fm, fm) == 0;
    out.push(outcome("F-rigid-iff-tau-rigid", rigid == frigid, || {
        format!("{name}: τ-rigid {rigid}, F rigid {frigid}")
    }));
    // τ over Λ̄ of the plain module
    let tau_bar = tau(&em);
    let plain = ctx.plain_part(&tau_bar);
    out.push(outcome("tau-plain-part", is_isomorphic(&plain, &tau_m)?, || {
        format!("{name}: plain part of τ over Λ̄ is {}, τ is {}", plain.label(), tau_m.label())
    }));
    let (h1, h2) = (hom_dim(&em, &tau_bar), hom_dim(m, &tau_m));
    out.push(outcome("tau-hom-restriction", h1 == h2, || format!("{name}: Hom over Λ̄ {h1}, over Λ {h2}")));
    let tau_f = tau(fm);
    let mono = find_mono(&tau_f, &tau_bar).is_some();
    let pdims = tau_f.dims()[..ctx.n] == tau_bar.dims()[..ctx.n];
    out.push(outcome("tau-F-embedding", mono && pdims, || {
        format!("{name}: τF = {} does not embed in τ = {} with equal plain part", tau_f.label(), tau_bar.label())
    }));
    let gimg = ctx.map_g(m)?;
    let gm = &gimg.module;
    let cg = count_summands(gm)?;
    out.push(outcome("G-indecomposability", (cm == 1) == (cg == 1) && cm == cg, || {
        format!("{name} has {cm} summands, G of it has {cg}")
    }));
    let kr = &gimg.ker_rho.source;
    let ok = gimg.rho.is_homomorphism() && gimg.rho.is_surjective() && ctx.is_plain(kr);
    out.push(outcome("G-kernel-plain", ok, || format!("{name}: ker ρ = {} is not a Λ-module", kr.label())));
    let tau_g = tau(gm);
    let dt = ctx.dotted(&tau_m);
    out.push(outcome("G-tau", is_isomorphic(&tau_g, &dt)?, || {
        format!("{name}: τG = {}, (τM)• = {}", tau_g.label(), dt.label())
    }));
    let grigid = hom_dim(gm, &tau_g) == 0;
    let mut ok = true;
    for s in 0..(1usize << ctx.n) {
        let sup: Vec<usize> = (0..ctx.n).filter(|i| s >> i & 1 == 1).collect();
        let lhs = rigid && sup.iter().all(|&i| m.dims()[i] == 0);
        let rhs = grigid && sup.iter().all(|&i| gm.dims()[i + ctx.n] == 0);
        ok &= lhs == rhs;
    }
    out.push(outcome("G-tau-rigid-pairs", ok, || format!("{name}: τ-rigid pairs differ under G")));
    let mut ok = true;
    let mut bad = String::new();
    for i in 0..ctx.n {
        let om = &ctx.omega_inv[i];
        let lhs = m.dims()[i] == 0;
        let rhs = ext1(fm, om) == 0 && ext1(om, fm) == 0;
        if lhs != rhs {
            ok = false;
            bad = format!("{name}, P({}): Hom vanishes {lhs}, Ext vanishes {rhs}", ctx.lam.vertex_name(i));
        }
    }
    out.push(outcome("hom-ext-vanishing", ok, || bad));
    Ok(out)
}

/// F(M₁ ⊕ … ⊕ M_r) ≅ F(M₁) ⊕ … ⊕ F(M_r).
pub fn additivity(ctx: &DupContext, parts: &[Module]) -> Result<Outcome> {
    let sum = Module::direct_sum_of(&ctx.lam, parts);
    let lhs = ctx.f(&sum)?;
    let fs = parts.iter().map(|m| ctx.f(m)).collect::<Result<Vec<_>>>()?;
    let rhs = Module::direct_sum_of(&ctx.bar, &fs);
    let ok = is_isomorphic(&lhs, &rhs)?;
    Ok(outcome("F-additive", ok, || format!("F({}) ≇ ⊕ F(summands)", sum.label())))
}

/// Ω⁻¹Λ over Λ̄ is rigid of projective dimension one (or zero).
pub fn omega_property(ctx: &DupContext) -> Outcome {
    let x = Module::direct_sum_of(&ctx.bar, &ctx.omega_inv);
    let ok = ext1(&x, &x) == 0 && pd_at_most_one(&x) && (x.is_zero() || !is_projective(&x));
    outcome("omega-rigid", ok, || format!("Ω⁻¹Λ = {} is not rigid of pd one", x.label()))
}

/// Collects outcomes into one report per property.
pub fn summarize(outcomes: &[Outcome]) -> Vec<Report> {
    let mut by: BTreeMap<&str, Report> = BTreeMap::new();
    for o in outcomes {
        let r = by.entry(o.property).or_insert_with(|| Report::new(o.property));
        r.check(o.ok, || o.detail.clone());
    }
    by.into_values().collect()
}

/// All property checks over the given modules and direct sums.
pub fn property_reports(ctx: &DupContext, corpus: &[Module], sums: &[Vec<Module>]) -> Result<Vec<Report>> {
    let mut outs = vec![omega_property(ctx)];
    for m in corpus {
        outs.extend(module_properties(ctx, m)?);
    }
    for parts in sums {
        outs.push(additivity(ctx, parts)?);
        outs.extend(module_properties(ctx, &Module::direct_sum_of(&ctx.lam, parts))?);
    }
    Ok(summarize(&outs))
}
