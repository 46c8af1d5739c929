//! Command-line front end for the `duptilt` library.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use duptilt::dup::{DupContext, DupPosets};
use duptilt::io::{load_algebra_doc, to_canonical_json, AlgebraDoc, AlgebraTableDoc, ModuleDoc};
use duptilt::tautilt::{default_bound, Poset, SttPoset};
use duptilt::verify::{canonical_theorem_id, property_reports, verify, verify_all, Report, THEOREMS};
use duptilt::{Algebra, Error, Module};

#[derive(Parser)]
#[command(name = "duptilt", version, about = "Support τ-tilting posets and duplicated algebras over prime fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the result to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Override the prime field of a quiver document.
    #[arg(long, global = true)]
    field: Option<u32>,
    /// Dimension bound for indecomposables over the input algebra.
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    /// Dimension bound for indecomposables over the duplicated algebra.
    #[arg(long, global = true)]
    dup_max_dim: Option<usize>,
    /// Largest endomorphism ring the exhaustive locality scan may visit.
    #[arg(long, global = true)]
    end_limit: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Basic invariants of an algebra.
    Info { algebra: PathBuf },
    /// The duplicated algebra as a structure-constant table.
    Dup { algebra: PathBuf },
    /// Indecomposable modules up to the dimension bound.
    Indecs { algebra: PathBuf },
    /// The support τ-tilting poset.
    Stt {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        export: Export,
    },
    /// The tilting modules, as a subposet of the support τ-tilting poset.
    Tilt {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        export: Export,
    },
    /// Apply F to a module over the input algebra.
    #[command(name = "mapF", alias = "map-f")]
    MapF {
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
    },
    /// Apply G to a module over the input algebra.
    #[command(name = "mapG", alias = "map-g")]
    MapG {
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
    },
    /// Image of a support τ-tilting pair under Ḡ.
    Gbar {
        algebra: PathBuf,
        /// Pair label or index.
        #[arg(long)]
        pair: String,
    },
    /// Image of a support τ-tilting pair under F̄.
    Fbar {
        algebra: PathBuf,
        #[arg(long)]
        pair: String,
    },
    /// Image of (left ≤ right) under φ.
    Phi {
        algebra: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Maximal green sequences, as chains of pair labels.
    Mgs { algebra: PathBuf },
    /// Image of a pair of maximal green sequences (by index) under ψ.
    Psi {
        algebra: PathBuf,
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
    },
    /// Run one check (by id or alias), `all`, or `properties`.
    Verify {
        algebra: PathBuf,
        #[arg(long, default_value = "all")]
        theorem: String,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    /// A check failed; the report is still written out.
    Verification(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(..) => 1,
            Failure::Lib(e) => match e {
                Error::EndTooLarge { .. } | Error::NotFiniteDimensional { .. } | Error::BoundTooSmall(_) => 3,
                Error::Parse(_)
                | Error::NotPrime(_)
                | Error::BadRelation(_)
                | Error::NotBasisAdapted(_)
                | Error::AlgebraMismatch
                | Error::NotInH
                | Error::Precondition(_) => 2,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(s) | Failure::Verification(s, _) => s.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

type Out = std::result::Result<String, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

struct Opts {
    field: Option<u32>,
    max_dim: Option<usize>,
    dup_max_dim: Option<usize>,
}

impl Opts {
    fn load(&self, path: &Path) -> std::result::Result<Arc<Algebra>, Failure> {
        let text = read(path)?;
        let mut doc: AlgebraDoc = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(p) = self.field {
            match &mut doc {
                AlgebraDoc::Quiver(q) => q.quiver.field = p,
                AlgebraDoc::Table(t) if t.field != p => {
                    return Err(Failure::Usage(format!("table is over F_{}, not F_{p}", t.field)))
                }
                AlgebraDoc::Table(_) => {}
            }
        }
        Ok(Arc::new(load_algebra_doc(&doc)?.algebra))
    }

    fn bound(&self, alg: &Arc<Algebra>) -> usize {
        self.max_dim.unwrap_or_else(|| default_bound(alg) + 1)
    }

    fn dup_bound(&self, ctx: &DupContext) -> usize {
        self.dup_max_dim.unwrap_or_else(|| default_bound(&ctx.bar) + 1)
    }

    fn context(&self, path: &Path) -> std::result::Result<DupContext, Failure> {
        Ok(DupContext::new(self.load(path)?)?)
    }

    fn posets(&self, ctx: &DupContext) -> std::result::Result<DupPosets, Failure> {
        Ok(ctx.posets(self.bound(&ctx.lam), self.dup_bound(ctx))?)
    }
}

fn poset_text(bound: usize, labels: &[String], poset: &Poset) -> String {
    let mut s = format!("# dimension bound: {bound}\n");
    let _ = writeln!(s, "# elements: {}", labels.len());
    for (k, l) in labels.iter().enumerate() {
        let _ = writeln!(s, "{k}\t{l}");
    }
    let mut edges = poset.hasse.clone();
    edges.sort();
    let _ = writeln!(s, "# cover relations (upper > lower): {}", edges.len());
    for (u, l) in edges {
        let _ = writeln!(s, "{u} > {l}");
    }
    if let (Some(mx), Some(mn)) = (poset.max(), poset.min()) {
        let _ = writeln!(s, "# max {mx}\n# min {mn}");
    }
    s
}

fn export_poset(st: &SttPoset, idx: Option<&[usize]>, how: Export) -> String {
    match idx {
        None => match how {
            Export::Text => poset_text(st.catalog.bound, &st.labels, &st.poset),
            Export::Json => to_canonical_json(&st.to_json()),
            Export::Dot => st.to_dot(),
        },
        Some(idx) => {
            let labels: Vec<String> = idx.iter().map(|&k| st.labels[k].clone()).collect();
            let sub = st.poset.restrict(idx);
            match how {
                Export::Text => poset_text(st.catalog.bound, &labels, &sub),
                Export::Json => {
                    let mut hasse: Vec<[usize; 2]> = sub.hasse.iter().map(|&(u, l)| [u, l]).collect();
                    hasse.sort();
                    to_canonical_json(&serde_json::json!({
                        "dimension_bound": st.catalog.bound,
                        "elements": labels,
                        "hasse_edges": hasse,
                    }))
                }
                Export::Dot => {
                    let mut s = format!("// dimension bound: {}\ndigraph tilt {{\n  rankdir=TB;\n", st.catalog.bound);
                    for (k, l) in labels.iter().enumerate() {
                        let _ = writeln!(s, "  n{k} [label=\"{}\"];", l.replace('"', "\\\""));
                    }
                    let mut edges = sub.hasse.clone();
                    edges.sort();
                    for (u, l) in edges {
                        let _ = writeln!(s, "  n{u} -> n{l};");
                    }
                    s.push_str("}\n");
                    s
                }
            }
        }
    }
}

fn module_arg(alg: &Arc<Algebra>, path: &Path) -> std::result::Result<Module, Failure> {
    let doc: ModuleDoc = serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(doc.to_module(alg)?)
}

fn reports_out(mut reports: Vec<Report>, bounds: &[(&str, usize)]) -> Out {
    for r in reports.iter_mut() {
        for &(k, v) in bounds {
            r.count(k, v);
        }
    }
    let text = to_canonical_json(&reports);
    if let Some(r) = reports.iter().find(|r| !r.passed()) {
        return Err(Failure::Verification(format!("{} failed", r.theorem), text));
    }
    Ok(text)
}

fn note_bounds(ps: &DupPosets) {
    eprintln!("dimension bounds: {} (algebra), {} (duplicated)", ps.base.catalog.bound, ps.bar.catalog.bound);
}

fn run(cli: Cli) -> Out {
    if let Some(l) = cli.end_limit {
        duptilt::decompose::set_end_scan_limit(l);
    }
    let o = Opts { field: cli.field, max_dim: cli.max_dim, dup_max_dim: cli.dup_max_dim };
    match cli.cmd {
        Cmd::Info { algebra } => {
            let a = o.load(&algebra)?;
            let layers = a.radical_layers()?;
            Ok(to_canonical_json(&serde_json::json!({
                "field": a.modulus(),
                "vertices": a.vertices(),
                "dim": a.dim(),
                "radical_dim": a.radical()?.len(),
                "radical_layers": layers,
                "loewy_length": a.loewy_length()?,
                "fingerprint": a.fingerprint(),
            })))
        }
        Cmd::Dup { algebra } => {
            let a = o.load(&algebra)?;
            Ok(to_canonical_json(&AlgebraTableDoc::from_algebra(&a.duplicated()?)))
        }
        Cmd::Indecs { algebra } => {
            let a = o.load(&algebra)?;
            let st = SttPoset::enumerate(&a, o.bound(&a))?;
            let mut s = format!("# dimension bound: {}\n", st.catalog.bound);
            s.push_str("label\tdims\ttau\ttau_rigid\tprojective\tinjective\tpd_le_one\n");
            for it in &st.catalog.items {
                let _ = writeln!(
                    s,
                    "{}\t{:?}\t{}\t{}\t{}\t{}\t{}",
                    it.label,
                    it.module.dims(),
                    it.tau.label(),
                    it.tau_rigid,
                    it.projective,
                    it.injective,
                    it.pd_le_one
                );
            }
            Ok(s)
        }
        Cmd::Stt { algebra, export } => {
            let a = o.load(&algebra)?;
            let st = SttPoset::enumerate(&a, o.bound(&a))?;
            Ok(export_poset(&st, None, export))
        }
        Cmd::Tilt { algebra, export } => {
            let a = o.load(&algebra)?;
            let st = SttPoset::enumerate(&a, o.bound(&a))?;
            let idx = st.tilt_subposet();
            Ok(export_poset(&st, Some(&idx), export))
        }
        Cmd::MapF { algebra, module } => {
            let ctx = o.context(&algebra)?;
            let m = module_arg(&ctx.lam, &module)?;
            Ok(to_canonical_json(&ModuleDoc::from_module(&ctx.f(&m)?)))
        }
        Cmd::MapG { algebra, module } => {
            let ctx = o.context(&algebra)?;
            let m = module_arg(&ctx.lam, &module)?;
            Ok(to_canonical_json(&ModuleDoc::from_module(&ctx.g(&m)?)))
        }
        Cmd::Gbar { algebra, pair } => {
            let ctx = o.context(&algebra)?;
            let ps = o.posets(&ctx)?;
            note_bounds(&ps);
            let k = ps.base.resolve(&pair)?;
            Ok(format!("{}\n", ps.bar.labels[ctx.gbar(&ps, k)?]))
        }
        Cmd::Fbar { algebra, pair } => {
            let ctx = o.context(&algebra)?;
            let ps = o.posets(&ctx)?;
            note_bounds(&ps);
            let k = ps.base.resolve(&pair)?;
            Ok(format!("{}\n", ps.bar.labels[ctx.fbar(&ps, k)?]))
        }
        Cmd::Phi { algebra, left, right } => {
            let ctx = o.context(&algebra)?;
            let ps = o.posets(&ctx)?;
            note_bounds(&ps);
            let (l, r) = (ps.base.resolve(&left)?, ps.base.resolve(&right)?);
            if !ps.base.poset.leq[l][r] {
                return Err(Failure::Usage(format!("{left} is not below {right}")));
            }
            Ok(format!("{}\n", ps.bar.labels[ctx.phi(&ps, l, r)?]))
        }
        Cmd::Mgs { algebra } => {
            let a = o.load(&algebra)?;
            let st = SttPoset::enumerate(&a, o.bound(&a))?;
            let mut s = format!("# dimension bound: {}\n", st.catalog.bound);
            for (k, chain) in st.maximal_green_sequences().iter().enumerate() {
                let labels: Vec<&str> = chain.iter().map(|&i| st.labels[i].as_str()).collect();
                let _ = writeln!(s, "{k}\t{}", labels.join(" > "));
            }
            Ok(s)
        }
        Cmd::Psi { algebra, left, right } => {
            let ctx = o.context(&algebra)?;
            let ps = o.posets(&ctx)?;
            note_bounds(&ps);
            let mgs = ps.base.maximal_green_sequences();
            let pick = |i: usize| {
                mgs.get(i).ok_or_else(|| Failure::Usage(format!("no maximal green sequence with index {i}")))
            };
            let chain = ctx.psi(&ps, pick(left)?, pick(right)?)?;
            let mut s = String::new();
            for k in chain {
                let _ = writeln!(s, "{}", ps.bar.labels[k]);
            }
            Ok(s)
        }
        Cmd::Verify { algebra, theorem } => {
            let ctx = o.context(&algebra)?;
            if theorem == "properties" {
                let cat = duptilt::tautilt::Catalog::enumerate(&ctx.lam, o.bound(&ctx.lam))?;
                let corpus: Vec<Module> = cat.items.iter().map(|i| i.module.clone()).collect();
                let mut sums = Vec::new();
                for i in 0..corpus.len() {
                    for j in i..corpus.len() {
                        sums.push(vec![corpus[i].clone(), corpus[j].clone()]);
                    }
                }
                return reports_out(property_reports(&ctx, &corpus, &sums)?, &[("dimension_bound", cat.bound)]);
            }
            let ps = o.posets(&ctx)?;
            let reports = if theorem == "all" {
                verify_all(&ctx, &ps)?
            } else {
                let id = canonical_theorem_id(&theorem).ok_or_else(|| {
                    let ids: Vec<&str> = THEOREMS.iter().map(|t| t.0).collect();
                    Failure::Usage(format!("unknown theorem {theorem:?}; expected one of {}", ids.join(", ")))
                })?;
                vec![verify(&ctx, &ps, id)?]
            };
            reports_out(
                reports,
                &[("dimension_bound", ps.base.catalog.bound), ("dup_dimension_bound", ps.bar.catalog.bound)],
            )
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> bool {
    match output {
        Some(p) => match fs::write(p, text) {
            Ok(()) => true,
            Err(e) => {
                eprintln!("error: {}: {e}", p.display());
                false
            }
        },
        None => {
            print!("{text}");
            true
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok(text) => {
            if emit(output.as_deref(), &text) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(f) => {
            if let Failure::Verification(_, text) = &f {
                emit(output.as_deref(), text);
            }
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
