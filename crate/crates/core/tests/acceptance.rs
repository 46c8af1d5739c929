//! Acceptance criteria, one PASS/FAIL line each.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use duptilt::dup::{check_maximal_chain, DupContext};
use duptilt::io::parse_algebra;
use duptilt::module::Module;
use duptilt::tautilt::{is_support_tau_tilting, jasso_reduction, stt_by_exhaustion, Catalog, Poset, SttPair, SttPoset};
use duptilt::verify::{property_reports, verify};
use duptilt::Algebra;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T>(r: duptilt::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn load(name: &str) -> Arc<Algebra> {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    Arc::new(parse_algebra(&text).expect("fixture parses").algebra)
}

/// Fixtures with their dimension bounds.
const FIXTURES: &[(&str, usize)] = &[("a2.json", 2), ("a3rel.json", 3), ("a2_dup.json", 3), ("a3rel_dup.json", 4)];

fn index(st: &SttPoset, label: &str) -> std::result::Result<usize, String> {
    st.labels.iter().position(|l| l == label).ok_or_else(|| format!("no element labelled {label}"))
}

fn hasse_labels(st: &SttPoset, idx: Option<&[usize]>) -> BTreeSet<(String, String)> {
    let keep = |k: usize| idx.is_none_or(|s| s.contains(&k));
    st.poset
        .hasse
        .iter()
        .filter(|&&(u, l)| keep(u) && keep(l))
        .map(|&(u, l)| (st.labels[u].clone(), st.labels[l].clone()))
        .collect()
}

fn expected_edges(edges: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    edges.iter().map(|&(u, l)| (u.to_string(), l.to_string())).collect()
}

const PENTAGON: &[(&str, &str)] = &[
    ("(1/2 ⊕ 2, 0)", "(1 ⊕ 1/2, 0)"),
    ("(1/2 ⊕ 2, 0)", "(2, P(1))"),
    ("(1 ⊕ 1/2, 0)", "(1, P(2))"),
    ("(2, P(1))", "(0, P(1)⊕P(2))"),
    ("(1, P(2))", "(0, P(1)⊕P(2))"),
];

fn pentagon() -> Check {
    let st = lib(SttPoset::enumerate(&load("a2.json"), 2))?;
    ensure!(st.len() == 5, "{} pairs instead of 5", st.len());
    let got = hasse_labels(&st, None);
    ensure!(got == expected_edges(PENTAGON), "Hasse diagram differs: {got:?}");
    let mut lens: Vec<usize> = st.maximal_green_sequences().iter().map(Vec::len).collect();
    lens.sort();
    ensure!(lens == [3, 4], "maximal chain lengths {lens:?}");
    Ok(())
}

/// Positions of the A3-with-relation diagrams: the pair on the left and the
/// summands of its tilting image besides Q (the projective-injectives).
const A3REL_NODES: &[(&str, &str, &[&str])] = &[
    ("top", "(1/2 ⊕ 2/3 ⊕ 3, 0)", &["1/2", "2/3", "3"]),
    ("b1", "(2/3 ⊕ 3, P(1))", &["2/3", "3", "2•/3•"]),
    ("b2", "(1 ⊕ 1/2 ⊕ 3, 0)", &["1/2", "1,3•/2", "3"]),
    ("b3", "(1/2 ⊕ 2 ⊕ 2/3, 0)", &["1/2", "2/3", "2"]),
    ("c1", "(1 ⊕ 3, P(2))", &["1,3•/2", "3", "3•"]),
    ("c2", "(1/2 ⊕ 2, P(3))", &["1/2", "2", "3•/2"]),
    ("d1", "(2 ⊕ 2/3, P(1))", &["2/3", "2", "2•/3•"]),
    ("d2", "(1 ⊕ 1/2, P(3))", &["1/2", "1,3•/2", "3•/2"]),
    ("e1", "(3, P(1)⊕P(2))", &["3", "2•/3•", "3•"]),
    ("e2", "(2, P(1)⊕P(3))", &["2", "2•/3•", "3•/2"]),
    ("e3", "(1, P(2)⊕P(3))", &["1,3•/2", "3•", "3•/2"]),
    ("bot", "(0, P(1)⊕P(2)⊕P(3))", &["2•/3•", "3•", "3•/2"]),
];

const A3REL_EDGES: &[(&str, &str)] = &[
    ("top", "b1"),
    ("top", "b2"),
    ("top", "b3"),
    ("b1", "e1"),
    ("b1", "d1"),
    ("b2", "d2"),
    ("b2", "c1"),
    ("b3", "c2"),
    ("b3", "d1"),
    ("c1", "e3"),
    ("c1", "e1"),
    ("c2", "d2"),
    ("c2", "e2"),
    ("d1", "e2"),
    ("d2", "e3"),
    ("e1", "bot"),
    ("e2", "bot"),
    ("e3", "bot"),
];

const Q_A3REL: &[&str] = &["1•/2•/1", "2•/1,3•/2", "3•/2/3"];

fn tilting_label(extra: &[&str]) -> String {
    let mut mods: Vec<&str> = extra.iter().chain(Q_A3REL).copied().collect();
    mods.sort();
    format!("({}, 0)", mods.join(" ⊕ "))
}

fn a3rel_diagrams() -> Check {
    let ctx = lib(DupContext::new(load("a3rel.json")))?;
    let ps = lib(ctx.posets(3, 4))?;
    ensure!(ps.base.len() == 12, "{} pairs instead of 12", ps.base.len());
    let name: BTreeMap<&str, (&str, String)> =
        A3REL_NODES.iter().map(|&(n, l, t)| (n, (l, tilting_label(t)))).collect();
    let left: BTreeSet<(String, String)> =
        A3REL_EDGES.iter().map(|(u, l)| (name[u].0.to_string(), name[l].0.to_string())).collect();
    ensure!(hasse_labels(&ps.base, None) == left, "left diagram differs");
    let tilt = ps.bar.tilt_subposet();
    ensure!(tilt.len() == 12, "{} tilting modules instead of 12", tilt.len());
    let right: BTreeSet<(String, String)> =
        A3REL_EDGES.iter().map(|(u, l)| (name[u].1.clone(), name[l].1.clone())).collect();
    let got = hasse_labels(&ps.bar, Some(&tilt));
    ensure!(got == right, "right diagram differs: {got:?}");
    let mut f = Vec::new();
    for (l, t) in name.values() {
        let k = index(&ps.base, l)?;
        let img = lib(ctx.fbar(&ps, k))?;
        ensure!(&ps.bar.labels[img] == t, "F̄{l} = {}, expected {t}", ps.bar.labels[img]);
        f.push((k, tilt.iter().position(|&x| x == img).ok_or("F̄ image is not tilting")?));
    }
    f.sort();
    let f: Vec<usize> = f.into_iter().map(|(_, v)| v).collect();
    ensure!(ps.base.poset.is_order_isomorphism(&ps.bar.poset.restrict(&tilt), &f), "F̄ is not an order isomorphism");
    for id in ["fbar-tilting", "fbar-equals-f-lambda"] {
        let r = lib(verify(&ctx, &ps, id))?;
        ensure!(r.passed(), "{id}: {:?}", r.witnesses);
    }
    Ok(())
}

fn dup_a3rel_counts() -> Check {
    let ctx = lib(DupContext::new(load("a3rel.json")))?;
    let s1 = Module::simple(ctx.lam.clone(), 0);
    let f = lib(ctx.f(&s1))?;
    // vertex order 1, 2, 3, 1•, 2•, 3•
    ensure!(f.dims() == [1, 1, 0, 0, 0, 1], "F(S(1)) has dimension vector {:?}", f.dims());
    ensure!(f.label() == "1,3•/2", "F(S(1)) = {}", f.label());
    let cat = lib(Catalog::enumerate(&ctx.bar, 4))?;
    ensure!(cat.len() == 17, "{} indecomposables over the duplicated algebra", cat.len());
    let mut h = 0;
    for it in &cat.items {
        h += lib(ctx.in_h(&it.module))? as usize;
    }
    ensure!(h == 5, "H contains {h} indecomposables");
    let pi = cat.items.iter().filter(|i| i.projective && i.injective).count();
    ensure!(pi == 3, "{pi} projective-injectives");
    let pd1 = cat.items.iter().filter(|i| i.pd_le_one).count();
    ensure!(pd1 == 11, "{pd1} indecomposables of projective dimension ≤ 1");
    Ok(())
}

// sτ-tilt of the duplicated A2: node name, height in a layered drawing, label.
const DUP_A2_NODES: &[(&str, f64, &str)] = &[
    ("A", 30.0, "(1/2 ⊕ 1•/2•/1 ⊕ 2 ⊕ 2•/1/2, 0)"),
    ("B", 27.0, "(1•/2•/1 ⊕ 2 ⊕ 2• ⊕ 2•/1/2, 0)"),
    ("C", 28.0, "(1 ⊕ 1/2 ⊕ 1•/2•/1 ⊕ 2•/1/2, 0)"),
    ("D", 26.0, "(1 ⊕ 1•/2•/1 ⊕ 2•/1 ⊕ 2•/1/2, 0)"),
    ("E", 24.0, "(1•/2•/1 ⊕ 2• ⊕ 2•/1 ⊕ 2•/1/2, 0)"),
    ("H", 23.0, "(1/2 ⊕ 2 ⊕ 2•/1/2, P(1•))"),
    ("K", 20.0, "(2 ⊕ 2• ⊕ 2•/1/2, P(1•))"),
    ("M", 21.0, "(1 ⊕ 1/2 ⊕ 2•/1/2, P(1•))"),
    ("Q", 19.0, "(1 ⊕ 2•/1 ⊕ 2•/1/2, P(1•))"),
    ("R", 17.0, "(2• ⊕ 2•/1 ⊕ 2•/1/2, P(1•))"),
    ("L", 22.0, "(1/2 ⊕ 1• ⊕ 1•/2•/1 ⊕ 2, 0)"),
    ("P", 20.0, "(1 ⊕ 1/2 ⊕ 1• ⊕ 1•/2•/1, 0)"),
    ("O", 19.0, "(1• ⊕ 1•/2• ⊕ 1•/2•/1 ⊕ 2, 0)"),
    ("U", 16.0, "(1• ⊕ 1•/2• ⊕ 1•/2•/1, P(2))"),
    ("V", 18.0, "(1 ⊕ 1• ⊕ 1•/2•/1, P(2))"),
    ("X", 14.0, "(1/2 ⊕ 1• ⊕ 2, P(2•))"),
    ("AC", 11.0, "(1• ⊕ 2, P(1)⊕P(2•))"),
    ("AE", 8.0, "(1•, P(1)⊕P(2)⊕P(2•))"),
    ("AD", 10.0, "(1 ⊕ 1•, P(2)⊕P(2•))"),
    ("Z", 12.0, "(1 ⊕ 1/2 ⊕ 1•, P(2•))"),
    ("AG", 6.0, "(1/2 ⊕ 2, P(1•)⊕P(2•))"),
    ("AH", 3.0, "(2, P(1)⊕P(1•)⊕P(2•))"),
    ("AK", 0.0, "(0, P(1)⊕P(2)⊕P(1•)⊕P(2•))"),
    ("AJ", 2.0, "(1, P(2)⊕P(1•)⊕P(2•))"),
    // easily mislabelled (1/2, P(1•)⊕P(2•)⊕P(1)), which is not a pair: see dup_a2_poset
    ("AI", 4.0, "(1 ⊕ 1/2, P(1•)⊕P(2•))"),
    ("AF", 6.0, "(2•, P(1)⊕P(2)⊕P(1•))"),
    ("AA", 14.0, "(2 ⊕ 2•, P(1)⊕P(1•))"),
    ("AB", 8.0, "(2• ⊕ 2•/1, P(2)⊕P(1•))"),
    ("W", 11.0, "(1 ⊕ 2•/1, P(2)⊕P(1•))"),
    ("Y", 9.0, "(1• ⊕ 1•/2•, P(1)⊕P(2))"),
    ("T", 14.0, "(1•/2• ⊕ 2•, P(1)⊕P(2))"),
    ("S", 12.5, "(1• ⊕ 1•/2• ⊕ 2, P(1))"),
    ("N", 17.0, "(1•/2• ⊕ 1•/2•/1 ⊕ 2•, P(2))"),
    ("J", 16.0, "(1•/2• ⊕ 2 ⊕ 2•, P(1))"),
    ("I", 20.0, "(1•/2•/1 ⊕ 2• ⊕ 2•/1, P(2))"),
    ("G", 24.0, "(1 ⊕ 1•/2•/1 ⊕ 2•/1, P(2))"),
    ("F", 24.0, "(1•/2• ⊕ 1•/2•/1 ⊕ 2 ⊕ 2•, 0)"),
];

const DUP_A2_EDGES: &[(&str, &str)] = &[
    ("AK", "AF"),
    ("AJ", "W"),
    ("AH", "AA"),
    ("AE", "Y"),
    ("AC", "S"),
    ("Y", "U"),
    ("U", "N"),
    ("V", "G"),
    ("O", "F"),
    ("S", "O"),
    ("AA", "K"),
    ("AB", "R"),
    ("W", "Q"),
    ("I", "E"),
    ("F", "B"),
    ("G", "D"),
    ("AF", "AA"),
    ("AF", "AB"),
    ("AF", "T"),
    ("AA", "J"),
    ("AB", "W"),
    ("AB", "I"),
    ("Y", "S"),
    ("Y", "T"),
    ("W", "G"),
    ("T", "J"),
    ("T", "N"),
    ("S", "J"),
    ("N", "I"),
    ("N", "F"),
    ("J", "F"),
    ("I", "G"),
    ("A", "H"),
    ("B", "K"),
    ("C", "M"),
    ("D", "Q"),
    ("E", "R"),
    ("A", "L"),
    ("C", "P"),
    ("L", "X"),
    ("P", "Z"),
    ("V", "AD"),
    ("X", "AG"),
    ("H", "AG"),
    ("M", "AI"),
    ("Z", "AI"),
    ("AD", "AJ"),
    ("AK", "AE"),
    ("AC", "AH"),
    ("A", "B"),
    ("B", "E"),
    ("E", "D"),
    ("D", "C"),
    ("C", "A"),
    ("H", "K"),
    ("K", "R"),
    ("R", "Q"),
    ("Q", "M"),
    ("M", "H"),
    ("L", "O"),
    ("O", "U"),
    ("U", "V"),
    ("V", "P"),
    ("P", "L"),
    ("X", "AC"),
    ("AC", "AE"),
    ("AE", "AD"),
    ("AD", "Z"),
    ("Z", "X"),
    ("AG", "AH"),
    ("AH", "AK"),
    ("AK", "AJ"),
    ("AJ", "AI"),
    ("AI", "AG"),
];

const DUP_A2_PENTAGONS: &[[&str; 5]] = &[
    ["A", "B", "E", "D", "C"],
    ["H", "K", "R", "Q", "M"],
    ["L", "O", "U", "V", "P"],
    ["X", "AC", "AE", "AD", "Z"],
    ["AG", "AH", "AK", "AJ", "AI"],
];

fn dup_a2_poset() -> Check {
    let ctx = lib(DupContext::new(load("a2.json")))?;
    let ps = lib(ctx.posets(2, 3))?;
    // the fixture table must give the same poset as duplicating on the fly
    let direct = lib(SttPoset::enumerate(&load("a2_dup.json"), 3))?;
    ensure!(direct.labels == ps.bar.labels, "fixture and computed duplicated algebra disagree");
    let st = &ps.bar;
    ensure!(st.len() == DUP_A2_NODES.len(), "{} elements instead of {}", st.len(), DUP_A2_NODES.len());
    let node: BTreeMap<&str, (f64, &str)> = DUP_A2_NODES.iter().map(|&(n, y, l)| (n, (y, l))).collect();
    let mut expected = BTreeSet::new();
    for &(a, b) in DUP_A2_EDGES {
        let (u, l) = if node[a].0 > node[b].0 { (a, b) } else { (b, a) };
        expected.insert((node[u].1.to_string(), node[l].1.to_string()));
    }
    ensure!(expected.len() == 74, "expected {} edges", expected.len());
    let got = hasse_labels(st, None);
    ensure!(got == expected, "Hasse diagram differs from the frozen one");
    let mut highlighted: Vec<BTreeSet<usize>> = Vec::new();
    for p in DUP_A2_PENTAGONS {
        let set = p.iter().map(|n| index(st, node[n].1)).collect::<std::result::Result<BTreeSet<_>, _>>()?;
        highlighted.push(set);
    }
    let mut seen = BTreeSet::new();
    for a in 0..ps.base.len() {
        let mut img = Vec::new();
        for b in 0..ps.base.len() {
            img.push(lib(ctx.phi(&ps, a, b))?);
        }
        let set: BTreeSet<usize> = img.iter().copied().collect();
        ensure!(highlighted.contains(&set), "φ-interval over {} is not highlighted", ps.base.labels[a]);
        ensure!(seen.is_disjoint(&set), "φ-intervals overlap");
        seen.extend(set);
        ensure!(ps.base.poset.is_order_isomorphism(&st.poset.restrict(&sorted(&img)), &rank(&img)), "not a pentagon");
    }
    ensure!(seen.len() == 25, "φ covers {} elements", seen.len());
    // the tempting label (1/2, P(1•)⊕P(2•)⊕P(1)) at AI fails the defining conditions
    let half = st.catalog.module(st.catalog.find_label("1/2").ok_or("1/2 missing")?).clone();
    ensure!(!lib(is_support_tau_tilting(&half, &[0, 2, 3]))?, "(1/2, P(1•)⊕P(2•)⊕P(1)) is support τ-tilting");
    Ok(())
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort();
    s
}

/// Position of each entry of `v` in `sorted(v)`.
fn rank(v: &[usize]) -> Vec<usize> {
    let s = sorted(v);
    v.iter().map(|x| s.binary_search(x).unwrap()).collect()
}

const GBAR: &[(&str, &str)] = &[
    ("(1/2 ⊕ 2, 0)", "(1/2 ⊕ 1•/2•/1 ⊕ 2 ⊕ 2•/1/2, 0)"),
    ("(1 ⊕ 1/2, 0)", "(1/2 ⊕ 1• ⊕ 1•/2•/1 ⊕ 2, 0)"),
    ("(2, P(1))", "(1/2 ⊕ 2 ⊕ 2•/1/2, P(1•))"),
    ("(1, P(2))", "(1/2 ⊕ 1• ⊕ 2, P(2•))"),
    ("(0, P(1)⊕P(2))", "(1/2 ⊕ 2, P(1•)⊕P(2•))"),
];

fn gbar_image() -> Check {
    let ctx = lib(DupContext::new(load("a2.json")))?;
    let ps = lib(ctx.posets(2, 3))?;
    let lam: Vec<usize> = (0..ctx.n)
        .map(|v| ps.bar.catalog.projective_index(v))
        .collect::<duptilt::Result<_>>()
        .map_err(|e| e.to_string())?;
    let interval = ps.bar.bongartz_interval(&SttPair::new(lam, vec![]));
    ensure!(interval.len() == 5, "interval has {} elements", interval.len());
    let mut f = vec![0; ps.base.len()];
    for &(l, r) in GBAR {
        let k = index(&ps.base, l)?;
        let img = lib(ctx.gbar(&ps, k))?;
        ensure!(ps.bar.labels[img] == r, "Ḡ{l} = {}, expected {r}", ps.bar.labels[img]);
        f[k] = interval.iter().position(|&x| x == img).ok_or("Ḡ leaves the interval")?;
    }
    ensure!(ps.base.poset.is_order_isomorphism(&ps.bar.poset.restrict(&interval), &f), "Ḡ is not an order isomorphism");
    Ok(())
}

const PSI: &[&str] = &[
    "(1/2 ⊕ 1•/2•/1 ⊕ 2 ⊕ 2•/1/2, 0)",
    "(1/2 ⊕ 1• ⊕ 1•/2•/1 ⊕ 2, 0)",
    "(1/2 ⊕ 1• ⊕ 2, P(2•))",
    "(1/2 ⊕ 2, P(1•)⊕P(2•))",
    "(2, P(1)⊕P(1•)⊕P(2•))",
    "(0, P(1)⊕P(2)⊕P(1•)⊕P(2•))",
];

fn psi_sequences() -> Check {
    let ctx = lib(DupContext::new(load("a2.json")))?;
    let ps = lib(ctx.posets(2, 3))?;
    let mgs = ps.base.maximal_green_sequences();
    ensure!(mgs.len() == 2, "{} maximal green sequences", mgs.len());
    let long = mgs.iter().find(|c| c.len() == 4).ok_or("no sequence of length 4")?;
    let short = mgs.iter().find(|c| c.len() == 3).ok_or("no sequence of length 3")?;
    let mut images = BTreeSet::new();
    for a in &mgs {
        for b in &mgs {
            let c = lib(ctx.psi(&ps, a, b))?;
            lib(check_maximal_chain(&ps.bar, &c))?;
            images.insert(c);
        }
    }
    ensure!(images.len() == 4, "ψ-images are not pairwise distinct");
    let c = lib(ctx.psi(&ps, long, short))?;
    let got: Vec<&str> = c.iter().map(|&k| ps.bar.labels[k].as_str()).collect();
    ensure!(got == PSI, "ψ(𝓜, 𝓜′) = {got:?}");
    Ok(())
}

fn property_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut modules = 0;
    for &(name, bound) in FIXTURES {
        let ctx = lib(DupContext::new(load(name)))?;
        let cat = lib(Catalog::enumerate(&ctx.lam, bound))?;
        let corpus: Vec<Module> = cat.items.iter().map(|i| i.module.clone()).collect();
        let sums: Vec<Vec<Module>> = (0..100)
            .map(|_| {
                let r = rng.gen_range(2..=3);
                (0..r).map(|_| corpus.choose(&mut rng).unwrap().clone()).collect()
            })
            .collect();
        modules += corpus.len() + sums.len();
        for r in lib(property_reports(&ctx, &corpus, &sums))? {
            ensure!(r.passed(), "{name}: {} fails: {:?}", r.theorem, r.witnesses.first());
        }
        for id in ["f-bijection", "rigid-bijection"] {
            if name.contains("dup") {
                // round trips are covered per module above; the posets of the twice
                // duplicated algebra are beyond desk scale
                continue;
            }
            let ps = lib(ctx.posets(bound, bound + 1))?;
            let r = lib(verify(&ctx, &ps, id))?;
            ensure!(r.passed(), "{name}: {id}: {:?}", r.witnesses.first());
        }
    }
    ensure!(modules > 400, "only {modules} modules checked");
    Ok(())
}

fn oracle() -> Check {
    for &(name, bound) in FIXTURES {
        let st = lib(SttPoset::enumerate(&load(name), bound))?;
        let mut found = st.elements.clone();
        found.sort();
        let brute = lib(stt_by_exhaustion(&st.catalog))?;
        ensure!(brute == found, "{name}: clique search {} vs exhaustion {}", found.len(), brute.len());
    }
    let ctx = lib(DupContext::new(load("a2.json")))?;
    let ps = lib(ctx.posets(2, 3))?;
    for k in 0..ps.base.len() {
        let gp = lib(ctx.g_pair(&ps, k))?;
        let red = lib(jasso_reduction(&ps.bar, &gp, 2))?;
        ensure!(
            red.reduced_algebra.dim() == ctx.lam.dim(),
            "dim C = {} at {}",
            red.reduced_algebra.dim(),
            ps.base.labels[k]
        );
        ensure!(red.is_order_isomorphism(&ps.bar), "reduction at {} is not an order isomorphism", ps.base.labels[k]);
        let p: &Poset = &red.reduced.poset;
        ensure!(p.len() == 5 && p.hasse.len() == 5, "reduced poset at {} is not a pentagon", ps.base.labels[k]);
    }
    let ctx = lib(DupContext::new(load("a3rel.json")))?;
    let ps = lib(ctx.posets(3, 4))?;
    let r = lib(verify(&ctx, &ps, "reduction"))?;
    ensure!(r.passed(), "reduction over A3 with relation: {:?}", r.witnesses.first());
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Check); 8] = [
        ("A2 pentagon", Duration::from_secs(1), pentagon),
        ("A3 with relation: sτ-tilt, tilt of the duplicated algebra, F̄", Duration::from_secs(10), a3rel_diagrams),
        ("F(S(1)), H, projective-injectives, pd ≤ 1 over the duplicated A3", Duration::MAX, dup_a3rel_counts),
        ("sτ-tilt of the duplicated A2 and its five φ-intervals", Duration::MAX, dup_a2_poset),
        ("Ḡ onto the Bongartz interval of Λ", Duration::MAX, gbar_image),
        ("ψ on maximal green sequences of A2", Duration::MAX, psi_sequences),
        ("module property suite with random direct sums", Duration::from_secs(30), property_suite),
        ("exhaustive oracle and reduction", Duration::MAX, oracle),
    ];
    let mut failed = 0;
    for (k, (what, limit, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = run();
        let dt = t.elapsed();
        let res = res.and_then(|()| if dt > *limit { Err(format!("took {dt:?}, limit {limit:?}")) } else { Ok(()) });
        match res {
            Ok(()) => println!("PASS criterion {}: {what} ({:.2?})", k + 1, dt),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {what}: {e}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
