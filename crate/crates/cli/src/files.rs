//! Ring, module and complex files. Every error points at a line and column.

use std::collections::BTreeMap;
use std::ops::Range;

use dcx_core::algebra::{Algebra, Vector};
use dcx_core::cplx::Complex;
use dcx_core::exact::{Field, FieldSpec, Fp, Mat, Rationals};
use dcx_core::fgmod::FgModule;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use toml::Spanned;

use crate::error::{CliError, Result};

/// File contents with a display name, kept for error locations and hashing.
#[derive(Debug, Clone)]
pub struct Source {
    pub name: String,
    pub text: String,
}

impl Source {
    pub fn new(name: impl Into<String>, text: impl Into<String>) -> Self {
        Source { name: name.into(), text: text.into() }
    }

    pub fn read(path: &str) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        Ok(Source::new(path, text))
    }

    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.text.as_bytes()))
    }

    /// 1-based line and column of a byte offset.
    pub fn location(&self, offset: usize) -> (usize, usize) {
        let before = &self.text[..offset.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map(|l| l.chars().count()).unwrap_or(0) + 1;
        (line, col)
    }

    pub fn error_at(&self, span: Range<usize>, msg: impl Into<String>) -> CliError {
        let (line, col) = self.location(span.start);
        CliError::Parse { file: self.name.clone(), line, col, msg: msg.into() }
    }

    fn toml_error(&self, e: toml::de::Error) -> CliError {
        let span = e.span().unwrap_or(0..0);
        self.error_at(span, e.message().trim().to_string())
    }

    fn invalid(&self, e: dcx_core::Error) -> CliError {
        CliError::Invalid { file: self.name.clone(), source: e }
    }

    fn parse<T: for<'de> Deserialize<'de>>(&self) -> Result<T> {
        toml::from_str(&self.text).map_err(|e| self.toml_error(e))
    }
}

fn required<'a, T>(src: &Source, v: &'a Option<T>, key: &str, kind: &Spanned<String>) -> Result<&'a T> {
    v.as_ref().ok_or_else(|| src.error_at(kind.span(), format!("kind \"{}\" needs `{key}`", kind.get_ref())))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingTable {
    kind: Spanned<String>,
    field: Option<Spanned<String>>,
    p: Option<Spanned<u64>>,
    vars: Option<Vec<String>>,
    relations: Option<Vec<Spanned<String>>>,
    labels: Option<Vec<String>>,
    table: Option<Vec<Vec<Vec<Spanned<String>>>>>,
    unit: Option<Vec<Spanned<String>>>,
    left: Option<Box<RingTable>>,
    right: Option<Box<RingTable>>,
    base: Option<Box<RingTable>>,
    module: Option<ModuleTable>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingDoc {
    ring: RingTable,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleTable {
    kind: Spanned<String>,
    gens: Option<usize>,
    matrix: Option<Vec<Vec<Spanned<String>>>>,
    name: Option<Spanned<String>>,
    actions: Option<Vec<Vec<Vec<Spanned<String>>>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleDoc {
    module: ModuleTable,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexTable {
    kind: Spanned<String>,
    degrees: Option<Spanned<Vec<i64>>>,
    ranks: Option<Vec<usize>>,
    diffs: Option<Vec<Vec<Vec<Spanned<String>>>>>,
    shift: Option<i64>,
    module: Option<ModuleTable>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexDoc {
    complex: ComplexTable,
}

/// A ring over one of the supported fields.
#[derive(Debug, Clone)]
pub enum AnyRing {
    Fp(Algebra<Fp>),
    Q(Algebra<Rationals>),
}

#[derive(Debug, Clone, PartialEq)]
enum FieldChoice {
    Fp(u64),
    Q,
}

fn field_choice(src: &Source, t: &RingTable) -> Result<Option<FieldChoice>> {
    let Some(name) = &t.field else { return Ok(None) };
    match name.get_ref().as_str() {
        "Fp" => {
            let p = t.p.as_ref().ok_or_else(|| src.error_at(name.span(), "field \"Fp\" needs `p`"))?;
            Ok(Some(FieldChoice::Fp(*p.get_ref())))
        }
        "Q" => Ok(Some(FieldChoice::Q)),
        other => Err(src.error_at(name.span(), format!("unknown field \"{other}\" (expected \"Fp\" or \"Q\")"))),
    }
}

/// The field of a ring table, looking through tensor and trivial-extension
/// nesting. Nested declarations must agree.
fn resolve_field(src: &Source, t: &RingTable) -> Result<FieldChoice> {
    let own = field_choice(src, t)?;
    let mut nested = Vec::new();
    for sub in [&t.left, &t.right, &t.base].into_iter().flatten() {
        nested.push((sub.kind.span(), resolve_field(src, sub)?));
    }
    let mut choice = own;
    for (span, c) in nested {
        match &choice {
            None => choice = Some(c),
            Some(prev) if *prev != c => return Err(src.error_at(span, "nested rings declare different fields")),
            _ => {}
        }
    }
    choice.ok_or_else(|| src.error_at(t.kind.span(), "no field declared"))
}

pub fn parse_ring(src: &Source) -> Result<AnyRing> {
    let doc: RingDoc = src.parse()?;
    match resolve_field(src, &doc.ring)? {
        FieldChoice::Fp(p) => {
            let f = Fp::new(p).map_err(|e| {
                let span = doc.ring.p.as_ref().map(|p| p.span()).unwrap_or(0..0);
                src.error_at(span, e.to_string())
            })?;
            Ok(AnyRing::Fp(build_ring(src, &doc.ring, &f)?))
        }
        FieldChoice::Q => Ok(AnyRing::Q(build_ring(src, &doc.ring, &Rationals)?)),
    }
}

fn scalar<F: Field>(src: &Source, field: &F, s: &Spanned<String>) -> Result<F::Elem> {
    field
        .parse(s.get_ref().trim())
        .ok_or_else(|| src.error_at(s.span(), format!("\"{}\" is not an element of {}", s.get_ref(), field.spec())))
}

fn element<F: Field>(src: &Source, alg: &Algebra<F>, s: &Spanned<String>) -> Result<Vector<F>> {
    alg.parse_element(s.get_ref()).map_err(|e| src.error_at(s.span(), e.to_string()))
}

fn build_ring<F: Field>(src: &Source, t: &RingTable, field: &F) -> Result<Algebra<F>> {
    match t.kind.get_ref().as_str() {
        "monomial_quotient" => {
            let vars = required(src, &t.vars, "vars", &t.kind)?;
            let rels = required(src, &t.relations, "relations", &t.kind)?;
            // Syntax is checked one relation at a time so errors carry a location.
            for r in rels {
                if let Err(e @ dcx_core::Error::Parse(_)) =
                    Algebra::monomial_quotient(field, vars, std::slice::from_ref(r.get_ref()))
                {
                    return Err(src.error_at(r.span(), e.to_string()));
                }
            }
            let rels: Vec<String> = rels.iter().map(|r| r.get_ref().clone()).collect();
            Algebra::monomial_quotient(field, vars, &rels).map_err(|e| src.invalid(e))
        }
        "structure_constants" => {
            let labels = required(src, &t.labels, "labels", &t.kind)?;
            let table = required(src, &t.table, "table", &t.kind)?;
            let unit = required(src, &t.unit, "unit", &t.kind)?;
            let table = table
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(|s| scalar(src, field, s)).collect()).collect())
                .collect::<Result<Vec<Vec<Vector<F>>>>>()?;
            let unit = unit.iter().map(|s| scalar(src, field, s)).collect::<Result<Vector<F>>>()?;
            Algebra::from_structure(field, labels.clone(), &table, unit).map_err(|e| src.invalid(e))
        }
        "tensor" => {
            let l = build_ring(src, required(src, &t.left, "left", &t.kind)?, field)?;
            let r = build_ring(src, required(src, &t.right, "right", &t.kind)?, field)?;
            Algebra::tensor(&l, &r).map_err(|e| src.invalid(e))
        }
        "trivial_extension" => {
            let base = build_ring(src, required(src, &t.base, "base", &t.kind)?, field)?;
            let m = build_module(src, &base, required(src, &t.module, "module", &t.kind)?)?;
            Algebra::trivial_extension(&base, &m).map_err(|e| src.invalid(e))
        }
        other => Err(src.error_at(
            t.kind.span(),
            format!("unknown ring kind \"{other}\" (expected monomial_quotient, structure_constants, tensor or trivial_extension)"),
        )),
    }
}

/// `canonical`, `residue_field` or `free:<n>`.
pub fn builtin_module<F: Field>(alg: &Algebra<F>, name: &str) -> Option<FgModule<F>> {
    match name {
        "canonical" => Some(FgModule::free(alg, 1).k_dual()),
        "residue_field" => Some(FgModule::residue_field(alg)),
        _ => name.strip_prefix("free:").and_then(|n| n.parse().ok()).map(|n| FgModule::free(alg, n)),
    }
}

fn build_module<F: Field>(src: &Source, alg: &Algebra<F>, t: &ModuleTable) -> Result<FgModule<F>> {
    match t.kind.get_ref().as_str() {
        "presentation" => {
            let gens = *required(src, &t.gens, "gens", &t.kind)?;
            let rows = t.matrix.clone().unwrap_or_default();
            if !rows.is_empty() && rows.len() != gens {
                return Err(src.error_at(t.kind.span(), format!("matrix has {} rows but gens = {gens}", rows.len())));
            }
            let mut matrix = rows
                .iter()
                .map(|row| row.iter().map(|s| element(src, alg, s)).collect())
                .collect::<Result<Vec<Vec<Vector<F>>>>>()?;
            if matrix.is_empty() {
                matrix = vec![Vec::new(); gens];
            }
            FgModule::from_presentation(alg, gens, &matrix).map_err(|e| src.invalid(e))
        }
        "builtin" => {
            let name = required(src, &t.name, "name", &t.kind)?;
            builtin_module(alg, name.get_ref())
                .ok_or_else(|| src.error_at(name.span(), format!("unknown builtin module \"{}\"", name.get_ref())))
        }
        "actions" => {
            let acts = required(src, &t.actions, "actions", &t.kind)?;
            let f = alg.field();
            let mats = acts
                .iter()
                .map(|m| {
                    let rows = m
                        .iter()
                        .map(|row| row.iter().map(|s| scalar(src, f, s)).collect())
                        .collect::<Result<Vec<Vector<F>>>>()?;
                    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
                    Ok(Mat::from_rows(f, cols, rows))
                })
                .collect::<Result<Vec<_>>>()?;
            FgModule::new(alg, mats).map_err(|e| src.invalid(e))
        }
        other => Err(src.error_at(
            t.kind.span(),
            format!("unknown module kind \"{other}\" (expected presentation, builtin or actions)"),
        )),
    }
}

pub fn parse_module<F: Field>(src: &Source, alg: &Algebra<F>) -> Result<FgModule<F>> {
    let doc: ModuleDoc = src.parse()?;
    build_module(src, alg, &doc.module)
}

/// The k-matrix of a map of free modules given by ring elements, in the
/// coordinates gen·dim R + t.
fn free_map<F: Field>(alg: &Algebra<F>, rows: usize, cols: usize, entries: &[Vec<Vector<F>>]) -> Mat<F> {
    let n = alg.dim();
    let mut m = Mat::zeros(alg.field(), rows * n, cols * n);
    for (i, row) in entries.iter().enumerate() {
        for (j, r) in row.iter().enumerate() {
            m.set_block(i * n, j * n, &alg.mul_matrix(r));
        }
    }
    m
}

fn build_complex<F: Field>(src: &Source, alg: &Algebra<F>, t: &ComplexTable) -> Result<Complex<F>> {
    match t.kind.get_ref().as_str() {
        "free_complex" => {
            let degrees = required(src, &t.degrees, "degrees", &t.kind)?;
            let ranks = required(src, &t.ranks, "ranks", &t.kind)?;
            let diffs = t.diffs.clone().unwrap_or_default();
            let ds = degrees.get_ref();
            if ds.len() != ranks.len() || ds.windows(2).any(|w| w[1] != w[0] - 1) {
                return Err(src.error_at(
                    degrees.span(),
                    "degrees must descend by one and match ranks in length",
                ));
            }
            if diffs.len() + 1 != ds.len().max(1) {
                return Err(src.error_at(t.kind.span(), format!("expected {} differentials", ds.len().saturating_sub(1))));
            }
            let mut entries = BTreeMap::new();
            for (d, r) in ds.iter().zip(ranks) {
                entries.insert(*d, FgModule::free(alg, *r));
            }
            let mut maps = BTreeMap::new();
            for (k, m) in diffs.iter().enumerate() {
                let (rows, cols) = (ranks[k + 1], ranks[k]);
                let parsed = m
                    .iter()
                    .map(|row| row.iter().map(|s| element(src, alg, s)).collect())
                    .collect::<Result<Vec<Vec<Vector<F>>>>>()?;
                if parsed.len() != rows || parsed.iter().any(|r| r.len() != cols) {
                    let span = m.first().and_then(|r| r.first()).map(|s| s.span()).unwrap_or(t.kind.span());
                    return Err(src.error_at(span, format!("differential from degree {} must be {rows}x{cols}", ds[k])));
                }
                maps.insert(ds[k], free_map(alg, rows, cols, &parsed));
            }
            Complex::new(alg, entries, maps).map_err(|e| src.invalid(e))
        }
        "shifted_module" => {
            let m = build_module(src, alg, required(src, &t.module, "module", &t.kind)?)?;
            Ok(Complex::of_module(&m, 0).shift(t.shift.unwrap_or(0)))
        }
        other => Err(src.error_at(
            t.kind.span(),
            format!("unknown complex kind \"{other}\" (expected free_complex or shifted_module)"),
        )),
    }
}

pub fn parse_complex<F: Field>(src: &Source, alg: &Algebra<F>) -> Result<Complex<F>> {
    let doc: ComplexDoc = src.parse()?;
    build_complex(src, alg, &doc.complex)
}

/// A module or complex file, told apart by its top-level table.
pub fn parse_object<F: Field>(src: &Source, alg: &Algebra<F>) -> Result<Complex<F>> {
    let table: toml::Table = src.parse()?;
    if table.contains_key("complex") {
        parse_complex(src, alg)
    } else if table.contains_key("module") {
        Ok(Complex::of_module(&parse_module(src, alg)?, 0))
    } else {
        Err(src.error_at(0..0, "expected a [module] or [complex] table"))
    }
}

#[derive(Serialize)]
struct RingOut {
    ring: RingOutTable,
}

#[derive(Serialize)]
struct RingOutTable {
    kind: &'static str,
    field: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    labels: Vec<String>,
    table: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
}

fn field_fields(spec: FieldSpec) -> (&'static str, Option<u64>) {
    match spec {
        FieldSpec::Prime(p) => ("Fp", Some(p)),
        FieldSpec::Rational => ("Q", None),
    }
}

/// The ring as an explicit structure-constant file.
pub fn ring_to_toml<F: Field>(alg: &Algebra<F>) -> String {
    let f = alg.field();
    let n = alg.dim();
    let render = |v: &[F::Elem]| v.iter().map(|a| f.render(a)).collect::<Vec<_>>();
    let table = (0..n)
        .map(|i| (0..n).map(|j| render(&alg.mul(&alg.basis_vector(i), &alg.basis_vector(j)))).collect())
        .collect();
    let (field, p) = field_fields(alg.spec());
    let out = RingOut {
        ring: RingOutTable {
            kind: "structure_constants",
            field,
            p,
            labels: alg.labels().to_vec(),
            table,
            unit: render(alg.unit()),
        },
    };
    toml::to_string(&out).expect("ring tables serialize")
}

#[derive(Serialize)]
struct ModuleOut {
    module: ModuleOutTable,
}

#[derive(Serialize)]
struct ModuleOutTable {
    kind: &'static str,
    actions: Vec<Vec<Vec<String>>>,
}

/// The module as explicit action matrices, one per basis element of the ring.
pub fn module_to_toml<F: Field>(m: &FgModule<F>) -> String {
    let f = m.field();
    let actions = m
        .actions()
        .iter()
        .map(|a| (0..a.rows()).map(|r| a.row(r).iter().map(|x| f.render(x)).collect()).collect())
        .collect();
    toml::to_string(&ModuleOut { module: ModuleOutTable { kind: "actions", actions } }).expect("module tables serialize")
}
