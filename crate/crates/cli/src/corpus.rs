//! The shipped corpus and the runner that applies every checker to it.

use dcx_core::cplx::Complex;
use dcx_core::derived::{Engine, Settings};
use dcx_core::exact::Field;
use dcx_core::fgmod::FgModule;
use dcx_core::sdc::is_semidualizing;
use dcx_core::verdict::{
    check_anni, check_auslander_char, check_bass_criterion, check_grade_cm, check_main_equiv, check_module_cor,
    check_tak, check_type_equiv, cut_regular, explore_question, Conclusion, Named, Question, TheoremId,
    TheoremReport, Value,
};
use rayon::prelude::*;

use crate::error::Result;
use crate::files::{parse_module, parse_ring, AnyRing, Source};

/// Ring files, by corpus name.
pub const RINGS: [(&str, &str); 9] = [
    ("pt", include_str!("../corpus/pt.toml")),
    ("d2", include_str!("../corpus/d2.toml")),
    ("d3", include_str!("../corpus/d3.toml")),
    ("d4", include_str!("../corpus/d4.toml")),
    ("ci2", include_str!("../corpus/ci2.toml")),
    ("fat", include_str!("../corpus/fat.toml")),
    ("fat3", include_str!("../corpus/fat3.toml")),
    ("prod", include_str!("../corpus/prod.toml")),
    ("triv", include_str!("../corpus/triv.toml")),
];

/// Extra semidualizing candidates: (ring, name, module file).
pub const MODULES: [(&str, &str, &str); 2] = [
    ("prod", "canonical_left", include_str!("../corpus/prod_canonical_left.toml")),
    ("prod", "canonical_right", include_str!("../corpus/prod_canonical_right.toml")),
];

pub fn ring_source(name: &str) -> Option<Source> {
    RINGS.iter().find(|(n, _)| *n == name).map(|(n, t)| Source::new(format!("corpus:{n}"), *t))
}

pub fn module_sources(ring: &str) -> Vec<(String, Source)> {
    MODULES
        .iter()
        .filter(|(r, _, _)| *r == ring)
        .map(|(r, n, t)| (n.to_string(), Source::new(format!("corpus:{r}_{n}"), *t)))
        .collect()
}

/// The result of one checker on one instance.
#[derive(Debug, Clone)]
pub struct Cell {
    pub ring: String,
    pub theorem: TheoremId,
    pub instance: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Report(TheoremReport),
    /// The checker does not apply, with the reason.
    Skipped(String),
    Failed(String),
}

impl Cell {
    pub fn status(&self) -> &str {
        match &self.outcome {
            Outcome::Report(r) => r.conclusion.label(),
            Outcome::Skipped(_) => "skipped",
            Outcome::Failed(_) => "error",
        }
    }

    pub fn inconsistent(&self) -> bool {
        matches!(&self.outcome, Outcome::Report(r) if matches!(r.conclusion, Conclusion::Inconsistent(_)))
    }

    /// Truth values that are false, not merely absent from a pool, and rest
    /// on something weaker than an exact computation.
    pub fn weak_falsifications(&self) -> Vec<String> {
        let Outcome::Report(r) = &self.outcome else { return Vec::new() };
        r.values
            .iter()
            .filter_map(|(k, v)| match v {
                Value::Truth(t)
                    if t.value == Some(false)
                        && !t.pool_relative
                        && t.certificate != dcx_core::derived::Certificate::Exact =>
                {
                    Some(format!("{k}: {}", t.render()))
                }
                _ => None,
            })
            .collect()
    }
}

/// The instances of one ring: semidualizing candidates and the pool.
struct Instances<F: Field> {
    candidates: Vec<(Named<F>, Option<String>)>,
    pool: Vec<Named<F>>,
}

fn instances<F: Field>(e: &Engine<F>, extra: Vec<Named<F>>) -> Instances<F> {
    let a = e.algebra();
    let r = Named::new("R", Complex::of_module(&FgModule::free(a, 1), 0));
    let w = Named::new("canonical", Complex::of_module(&FgModule::free(a, 1).k_dual(), 0));
    let k = Named::new("k", Complex::of_module(&FgModule::residue_field(a), 0));
    let mut pool = vec![r.clone(), k, w.clone()];
    pool.extend(extra.iter().cloned());
    let candidates = [r, w]
        .into_iter()
        .chain(extra)
        .map(|c| {
            let why = match is_semidualizing(e, &c.complex) {
                Ok(v) if v.holds == Some(true) => None,
                Ok(v) => Some(format!(
                    "not semidualizing ({})",
                    v.witness.map(|w| w.to_string()).unwrap_or_else(|| "undecided".into())
                )),
                Err(err) => Some(err.to_string()),
            };
            (c, why)
        })
        .collect();
    Instances { candidates, pool }
}

fn run_one<F: Field>(e: &Engine<F>, t: TheoremId, c: &Named<F>, pool: &[Named<F>]) -> Vec<(String, Outcome)> {
    let wrap = |name: String, r: dcx_core::Result<TheoremReport>| {
        let o = match r {
            Ok(rep) => Outcome::Report(rep),
            Err(dcx_core::Error::NotModule(a)) => Outcome::Skipped(format!("C has amplitude {a}")),
            Err(err) => Outcome::Failed(err.to_string()),
        };
        (name, o)
    };
    let cname = c.name.clone();
    let modules: Vec<&Named<F>> = pool.iter().filter(|m| m.complex.amp().finite() == Some(0)).collect();
    let mut with_c = pool.to_vec();
    if !with_c.iter().any(|m| m.name == c.name) {
        with_c.push(c.clone());
    }
    match t {
        TheoremId::Anni => vec![wrap(cname, check_anni(e, c))],
        TheoremId::BassCriterion => vec![wrap(cname, check_bass_criterion(e, c))],
        TheoremId::TypeEquiv => vec![wrap(cname, check_type_equiv(e, c, &with_c))],
        TheoremId::Tak => modules.iter().map(|m| wrap(format!("{cname}/{}", m.name), check_tak(e, c, m))).collect(),
        TheoremId::ModuleCor => {
            let ms: Vec<Named<F>> = modules.iter().map(|m| (*m).clone()).collect();
            vec![wrap(cname, check_module_cor(e, c, &ms))]
        }
        TheoremId::GradeCm => {
            with_c.iter().map(|x| wrap(format!("{cname}/{}", x.name), check_grade_cm(e, c, x))).collect()
        }
        TheoremId::MainEquiv => {
            with_c.iter().map(|x| wrap(format!("{cname}/{}", x.name), check_main_equiv(e, c, x))).collect()
        }
        TheoremId::AuslanderChar => vec![wrap(cname, check_auslander_char(e, c, &with_c))],
        TheoremId::CutRegular => {
            let m = &pool[2];
            let mut out = vec![wrap(format!("{cname}/{}/[]", m.name), cut_regular(e, c, m, &[]))];
            if let Some((v, x)) = e.algebra().vars().first() {
                out.push(wrap(format!("{cname}/{}/[{v}]", m.name), cut_regular(e, c, m, std::slice::from_ref(x))));
            }
            out
        }
        TheoremId::QBass => vec![wrap(cname, explore_question(e, Question::Bass, c, pool))],
        TheoremId::QAmp => vec![wrap(cname, explore_question(e, Question::Amp, c, pool))],
    }
}

/// Every checker on every semidualizing candidate of one ring, in parallel
/// over (candidate, theorem).
pub fn run_ring<F: Field>(ring: &str, e: &Engine<F>, extra: Vec<Named<F>>, only: &[TheoremId]) -> Vec<Cell> {
    let inst = instances(e, extra);
    let theorems: Vec<TheoremId> = if only.is_empty() { TheoremId::ALL.to_vec() } else { only.to_vec() };
    let jobs: Vec<(usize, TheoremId)> =
        (0..inst.candidates.len()).flat_map(|i| theorems.iter().map(move |&t| (i, t))).collect();
    let mut cells: Vec<Cell> = jobs
        .par_iter()
        .flat_map_iter(|&(i, t)| {
            let (c, why) = &inst.candidates[i];
            let rows = match why {
                Some(reason) => vec![(c.name.clone(), Outcome::Skipped(reason.clone()))],
                None => run_one(e, t, c, &inst.pool),
            };
            rows.into_iter().map(move |(instance, outcome)| Cell { ring: ring.to_string(), theorem: t, instance, outcome })
        })
        .collect();
    cells.sort_by(|a, b| (a.theorem, &a.instance).cmp(&(b.theorem, &b.instance)));
    cells
}

fn run_named<F: Field>(name: &str, alg: &dcx_core::algebra::Algebra<F>, settings: Settings, only: &[TheoremId]) -> Result<Vec<Cell>> {
    let e = Engine::new(alg, settings);
    let mut extra = Vec::new();
    for (n, src) in module_sources(name) {
        let m = parse_module(&src, alg)?;
        extra.push(Named::new(n, Complex::of_module(&m, 0)));
    }
    Ok(run_ring(name, &e, extra, only))
}

/// Runs the selected corpus rings (all when `rings` is empty), rings in
/// parallel. Cells come back sorted by ring order, theorem and instance.
pub fn run(rings: &[String], only: &[TheoremId], settings: Settings) -> Result<Vec<Cell>> {
    let names: Vec<&str> = RINGS
        .iter()
        .map(|(n, _)| *n)
        .filter(|n| rings.is_empty() || rings.iter().any(|r| r == n))
        .collect();
    let per_ring: Vec<Result<Vec<Cell>>> = names
        .par_iter()
        .map(|name| {
            let src = ring_source(name).expect("corpus ring");
            match parse_ring(&src)? {
                AnyRing::Fp(a) => run_named(name, &a, settings, only),
                AnyRing::Q(a) => run_named(name, &a, settings, only),
            }
        })
        .collect();
    let mut cells = Vec::new();
    for r in per_ring {
        cells.extend(r?);
    }
    Ok(cells)
}
