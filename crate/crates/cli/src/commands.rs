//! Argument parsing and the commands themselves.

use clap::{Args, Parser, Subcommand};
use dcx_core::algebra::{Algebra, Vector};
use dcx_core::cplx::Complex;
use dcx_core::derived::{Engine, Settings};
use dcx_core::exact::Field;
use dcx_core::resolve::{detect_periodicity, Budget};
use dcx_core::verdict::{
    check_anni, check_auslander_char, check_bass_criterion, check_grade_cm, check_main_equiv, check_module_cor,
    check_tak, check_type_equiv, cut_regular, explore_question, Conclusion, Named, Question, TheoremId,
    TheoremReport,
};
use serde_json::{json, Map};

use crate::corpus::{self, Cell, Outcome};
use crate::error::{CliError, Result};
use crate::files::{builtin_module, parse_object, parse_ring, ring_to_toml, AnyRing, Source};
use crate::report::{self, Input, Report};

pub const DEFAULT_SEED: u64 = 0xDC0DE;

#[derive(Debug, Parser)]
#[command(name = "dcx", version, about = "Exact derived invariants and semidualizing complexes over Artinian local rings")]
pub struct Cli {
    /// Extra degrees computed past what the inputs force (default 2·dim R + 4).
    #[arg(long, global = true)]
    pub window: Option<i64>,
    /// Total free rank a resolution may reach.
    #[arg(long = "rank-budget", global = true, default_value_t = 4096)]
    pub rank_budget: usize,
    /// Seed for randomized isomorphism searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Module and derived invariants of a module or complex.
    Invariants(ObjectArgs),
    /// Minimal free resolution ranks and any periodicity found.
    Resolve {
        #[command(flatten)]
        object: ObjectArgs,
        /// Last degree to resolve.
        #[arg(long, default_value_t = 6)]
        degree: i64,
    },
    /// Runs one theorem checker.
    Theorem(TheoremArgs),
    /// The built-in corpus.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Args)]
pub struct ObjectArgs {
    /// Ring file, or corpus:<name>.
    #[arg(long)]
    pub ring: String,
    /// Module: builtin:<name> or a module file, with an optional @<shift>.
    #[arg(long, conflicts_with = "complex", required_unless_present = "complex")]
    pub module: Option<String>,
    /// Complex file, with an optional @<shift>.
    #[arg(long)]
    pub complex: Option<String>,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    /// One of anni, bass_criterion, type_equiv, tak, module_cor, grade_cm,
    /// main_equiv, auslander_char, cut_regular, q_bass, q_amp.
    pub theorem: String,
    #[arg(long)]
    pub ring: String,
    /// The candidate semidualizing complex.
    #[arg(long = "C")]
    pub c: String,
    /// The second complex for grade_cm and main_equiv.
    #[arg(long = "X")]
    pub x: Option<String>,
    /// The module for tak and cut_regular.
    #[arg(long = "M")]
    pub m: Option<String>,
    /// Pool members for existential conditions (repeatable). Defaults to R, k
    /// and the canonical module.
    #[arg(long)]
    pub pool: Vec<String>,
    /// Ring elements for cut_regular (repeatable).
    #[arg(long = "x-elem")]
    pub elems: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    /// Lists the corpus rings.
    List,
    /// Runs every checker on every corpus instance.
    Run {
        /// Restrict to these rings (repeatable).
        #[arg(long)]
        ring: Vec<String>,
        /// Restrict to these theorems (repeatable).
        #[arg(long)]
        theorem: Vec<String>,
    },
    /// Writes the corpus files into a directory.
    Export {
        #[arg(long)]
        dir: String,
        /// Also write each ring as explicit structure constants.
        #[arg(long)]
        expanded: bool,
    },
}

/// What a run produces: the exit code and the text for standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
}

fn settings(cli: &Cli) -> Settings {
    Settings {
        window: cli.window,
        budget: Budget { rank: cli.rank_budget, ..Budget::default() },
        seed: cli.seed,
    }
}

fn load_ring(spec: &str) -> Result<Source> {
    match spec.strip_prefix("corpus:") {
        Some(name) => corpus::ring_source(name).ok_or_else(|| CliError::Usage(format!("no corpus ring \"{name}\""))),
        None => Source::read(spec),
    }
}

fn split_shift(spec: &str) -> Result<(&str, i64)> {
    match spec.rsplit_once('@') {
        Some((base, n)) => {
            let n = n.parse().map_err(|_| CliError::Usage(format!("bad shift in \"{spec}\"")))?;
            Ok((base, n))
        }
        None => Ok((spec, 0)),
    }
}

/// A module or complex from `builtin:<name>` or a file, plus its input record.
fn load_object<F: Field>(alg: &Algebra<F>, role: &str, spec: &str) -> Result<(Named<F>, Input)> {
    let (base, shift) = split_shift(spec)?;
    let (complex, sha) = match base.strip_prefix("builtin:") {
        Some(name) => {
            let m = builtin_module(alg, name).ok_or_else(|| CliError::Usage(format!("unknown builtin \"{name}\"")))?;
            (Complex::of_module(&m, 0), Source::new(base, base).sha256())
        }
        None => {
            let src = Source::read(base)?;
            (parse_object(&src, alg)?, src.sha256())
        }
    };
    let input = Input { role: role.into(), source: spec.into(), sha256: sha };
    Ok((Named::new(spec, complex.shift(shift)), input))
}

fn ring_input(src: &Source) -> Input {
    Input { role: "ring".into(), source: src.name.clone(), sha256: src.sha256() }
}

fn object_spec(o: &ObjectArgs) -> &str {
    o.module.as_deref().or(o.complex.as_deref()).expect("clap requires one")
}

fn invariants<F: Field>(alg: &Algebra<F>, src: &Source, o: &ObjectArgs, s: Settings) -> Result<Report> {
    let mut rep = Report::new("invariants", s.seed);
    rep.inputs.push(ring_input(src));
    let (x, input) = load_object(alg, "object", object_spec(o))?;
    rep.inputs.push(input);
    let c = &x.complex;
    if let (Some(0), Some(i)) = (c.amp().finite(), c.inf().finite()) {
        rep.results.insert("module".into(), report::module_invariants(&c.homology(i).invariants()));
    }
    let e = Engine::new(alg, s);
    let inv = e.invariants(c)?;
    let (results, certs) = report::derived_invariants(&inv);
    rep.results.insert("derived".into(), results);
    rep.certificates = certs;
    Ok(rep)
}

/// The report, and whether the budget stopped the resolution early.
fn resolve<F: Field>(alg: &Algebra<F>, src: &Source, o: &ObjectArgs, degree: i64, s: Settings) -> Result<(Report, bool)> {
    let mut rep = Report::new("resolve", s.seed);
    rep.inputs.push(ring_input(src));
    let (x, input) = load_object(alg, "object", object_spec(o))?;
    rep.inputs.push(input);
    let e = Engine::new(alg, s);
    let res = e.resolution(&x.complex, degree);
    let ranks: Map<String, serde_json::Value> = res.betti().into_iter().map(|(i, r)| (i.to_string(), json!(r))).collect();
    rep.results.insert("ranks".into(), json!(ranks));
    rep.results.insert("terminated".into(), json!(res.terminated()));
    rep.results.insert("stopped".into(), json!(res.stopped().map(|e| e.to_string())));
    if let Some(p) = detect_periodicity(&res, s.seed) {
        rep.results.insert(
            "periodicity".into(),
            json!({"start": p.start, "period": p.period, "multiplicity": p.multiplicity}),
        );
        rep.certificates.insert(
            "periodicity".into(),
            report::certificate(&dcx_core::derived::Certificate::Periodic {
                start: p.start,
                period: p.period,
                multiplicity: p.multiplicity,
            }),
        );
    }
    Ok((rep, res.stopped().is_some()))
}

fn theorem<F: Field>(alg: &Algebra<F>, src: &Source, a: &TheoremArgs, s: Settings) -> Result<(Report, Conclusion)> {
    let id = TheoremId::parse(&a.theorem).ok_or_else(|| CliError::Usage(format!("unknown theorem \"{}\"", a.theorem)))?;
    let mut rep = Report::new(format!("theorem {id}"), s.seed);
    rep.inputs.push(ring_input(src));
    let (c, input) = load_object(alg, "C", &a.c)?;
    rep.inputs.push(input);
    let mut need = |role: &str, spec: &Option<String>| -> Result<Named<F>> {
        let spec = spec.as_deref().ok_or_else(|| CliError::Usage(format!("theorem {id} needs --{role}")))?;
        let (n, input) = load_object(alg, role, spec)?;
        rep.inputs.push(input);
        Ok(n)
    };
    let x = match id {
        TheoremId::GradeCm | TheoremId::MainEquiv => Some(need("X", &a.x)?),
        _ => None,
    };
    let m = match id {
        TheoremId::Tak | TheoremId::CutRegular => Some(need("M", &a.m)?),
        _ => None,
    };
    let pool_specs: Vec<String> = if a.pool.is_empty() {
        ["builtin:free:1", "builtin:residue_field", "builtin:canonical"].map(String::from).to_vec()
    } else {
        a.pool.clone()
    };
    let mut pool = Vec::new();
    for (i, p) in pool_specs.iter().enumerate() {
        let (n, input) = load_object(alg, &format!("pool{i}"), p)?;
        rep.inputs.push(input);
        pool.push(n);
    }
    let elems: Vec<Vector<F>> = a
        .elems
        .iter()
        .map(|s| alg.parse_element(s).map_err(|e| CliError::Usage(format!("--x-elem {s}: {e}"))))
        .collect::<Result<_>>()?;
    let e = Engine::new(alg, s);
    let r: TheoremReport = match id {
        TheoremId::Anni => check_anni(&e, &c)?,
        TheoremId::BassCriterion => check_bass_criterion(&e, &c)?,
        TheoremId::TypeEquiv => check_type_equiv(&e, &c, &pool)?,
        TheoremId::Tak => check_tak(&e, &c, m.as_ref().unwrap())?,
        TheoremId::ModuleCor => check_module_cor(&e, &c, &pool)?,
        TheoremId::GradeCm => check_grade_cm(&e, &c, x.as_ref().unwrap())?,
        TheoremId::MainEquiv => check_main_equiv(&e, &c, x.as_ref().unwrap())?,
        TheoremId::AuslanderChar => check_auslander_char(&e, &c, &pool)?,
        TheoremId::CutRegular => cut_regular(&e, &c, m.as_ref().unwrap(), &elems)?,
        TheoremId::QBass => explore_question(&e, Question::Bass, &c, &pool)?,
        TheoremId::QAmp => explore_question(&e, Question::Amp, &c, &pool)?,
    };
    let (results, certs) = report::theorem(&r);
    rep.results = results.as_object().cloned().unwrap_or_default();
    rep.certificates = certs;
    Ok((rep, r.conclusion))
}

fn cell_json(c: &Cell) -> serde_json::Value {
    let mut j = json!({
        "ring": c.ring,
        "theorem": c.theorem.name(),
        "instance": c.instance,
        "status": c.status(),
    });
    let obj = j.as_object_mut().unwrap();
    match &c.outcome {
        Outcome::Report(r) => {
            let (results, certs) = report::theorem(r);
            obj.insert("detail".into(), json!(r.conclusion.detail()));
            obj.insert("values".into(), results["values"].clone());
            obj.insert("certificates".into(), json!(certs));
        }
        Outcome::Skipped(s) | Outcome::Failed(s) => {
            obj.insert("detail".into(), json!(s));
        }
    }
    let weak = c.weak_falsifications();
    if !weak.is_empty() {
        obj.insert("weak_falsifications".into(), json!(weak));
    }
    j
}

fn corpus_run(rings: &[String], theorems: &[String], s: Settings) -> Result<(Report, i32)> {
    let only = theorems
        .iter()
        .map(|t| TheoremId::parse(t).ok_or_else(|| CliError::Usage(format!("unknown theorem \"{t}\""))))
        .collect::<Result<Vec<_>>>()?;
    for r in rings {
        corpus::ring_source(r).ok_or_else(|| CliError::Usage(format!("no corpus ring \"{r}\"")))?;
    }
    let cells = corpus::run(rings, &only, s)?;
    let mut rep = Report::new("corpus run", s.seed);
    for (name, _) in corpus::RINGS.iter().filter(|(n, _)| rings.is_empty() || rings.iter().any(|r| r == n)) {
        let src = corpus::ring_source(name).unwrap();
        rep.inputs.push(Input { role: name.to_string(), source: src.name.clone(), sha256: src.sha256() });
        for (m, msrc) in corpus::module_sources(name) {
            rep.inputs.push(Input { role: format!("{name}_{m}"), source: msrc.name.clone(), sha256: msrc.sha256() });
        }
    }
    let mut counts = Map::new();
    for c in &cells {
        let n = counts.get(c.status()).and_then(|v| v.as_u64()).unwrap_or(0);
        counts.insert(c.status().into(), json!(n + 1));
    }
    let inconsistent = cells.iter().filter(|c| c.inconsistent()).count();
    let weak: usize = cells.iter().map(|c| c.weak_falsifications().len()).sum();
    rep.results.insert("cells".into(), json!(cells.iter().map(cell_json).collect::<Vec<_>>()));
    rep.results.insert("counts".into(), json!(counts));
    rep.results.insert("inconsistent".into(), json!(inconsistent));
    rep.results.insert("weak_falsifications".into(), json!(weak));
    Ok((rep, if inconsistent > 0 { 2 } else { 0 }))
}

fn corpus_list() -> Result<String> {
    let mut out = String::new();
    for (name, _) in corpus::RINGS {
        let src = corpus::ring_source(name).unwrap();
        let (dim, edim) = match parse_ring(&src)? {
            AnyRing::Fp(a) => (a.dim(), a.embedding_dim()),
            AnyRing::Q(a) => (a.dim(), a.embedding_dim()),
        };
        let extra: Vec<String> = corpus::module_sources(name).into_iter().map(|(m, _)| m).collect();
        out.push_str(&format!("{name:<5} dim {dim:<3} edim {edim}"));
        if !extra.is_empty() {
            out.push_str(&format!("  modules: {}", extra.join(", ")));
        }
        out.push('\n');
    }
    Ok(out)
}

fn corpus_export(dir: &str, expanded: bool) -> Result<String> {
    let io = |path: &std::path::Path, source| CliError::Io { path: path.display().to_string(), source };
    let dir = std::path::Path::new(dir);
    std::fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let mut written = Vec::new();
    let mut write = |name: String, text: &str| -> Result<()> {
        let p = dir.join(&name);
        std::fs::write(&p, text).map_err(|e| io(&p, e))?;
        written.push(name);
        Ok(())
    };
    for (name, text) in corpus::RINGS {
        write(format!("{name}.toml"), text)?;
        if expanded {
            let src = corpus::ring_source(name).unwrap();
            let t = match parse_ring(&src)? {
                AnyRing::Fp(a) => ring_to_toml(&a),
                AnyRing::Q(a) => ring_to_toml(&a),
            };
            write(format!("{name}.expanded.toml"), &t)?;
        }
    }
    for (ring, m, text) in corpus::MODULES {
        write(format!("{ring}_{m}.toml"), text)?;
    }
    Ok(written.into_iter().map(|w| w + "\n").collect())
}

/// Dispatches a ring-dependent command on the ring's field.
macro_rules! with_ring {
    ($src:expr, |$a:ident| $body:expr) => {
        match parse_ring($src)? {
            AnyRing::Fp($a) => $body,
            AnyRing::Q($a) => $body,
        }
    };
}

fn exit_for(c: &Conclusion, rep: &Report) -> i32 {
    match c {
        Conclusion::Inconsistent(_) => 2,
        Conclusion::Inconclusive(_)
            if rep.certificates.values().any(|v| v["kind"] == "UpToBound") =>
        {
            3
        }
        _ => 0,
    }
}

fn execute(cli: &Cli) -> Result<RunOutput> {
    let s = settings(cli);
    let ok = |stdout: String| RunOutput { code: 0, stdout };
    match &cli.command {
        Command::Invariants(o) => {
            let src = load_ring(&o.ring)?;
            let rep = with_ring!(&src, |a| invariants(&a, &src, o, s)?);
            Ok(ok(rep.render()))
        }
        Command::Resolve { object, degree } => {
            let src = load_ring(&object.ring)?;
            let (rep, stopped) = with_ring!(&src, |a| resolve(&a, &src, object, *degree, s)?);
            Ok(RunOutput { code: if stopped { 3 } else { 0 }, stdout: rep.render() })
        }
        Command::Theorem(t) => {
            let src = load_ring(&t.ring)?;
            let (rep, c) = with_ring!(&src, |a| theorem(&a, &src, t, s)?);
            Ok(RunOutput { code: exit_for(&c, &rep), stdout: rep.render() })
        }
        Command::Corpus(CorpusCommand::List) => Ok(ok(corpus_list()?)),
        Command::Corpus(CorpusCommand::Run { ring, theorem }) => {
            let (rep, code) = corpus_run(ring, theorem, s)?;
            Ok(RunOutput { code, stdout: rep.render() })
        }
        Command::Corpus(CorpusCommand::Export { dir, expanded }) => Ok(ok(corpus_export(dir, *expanded)?)),
    }
}

/// Runs the command line. Errors become a message on the returned output
/// with exit code 1 (bad input) or 3 (budget exhausted).
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, if code == 0 { e.to_string() } else { String::new() }, if code == 0 { String::new() } else { e.to_string() });
        }
    };
    match execute(&cli) {
        Ok(o) => (o.code, o.stdout, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
