//! Theorem checkers. Each statement about semidualizing complexes is evaluated
//! on concrete inputs by computing every condition independently, then the
//! claimed implications are compared.
//!
//! A report is INCONSISTENT only when two conditions decided with Exact or
//! Periodic certificates contradict a claimed implication. Anything resting
//! on an UpToBound value is at best inconclusive. Existential conditions are
//! searched in a supplied pool, so a failed search is a weak "false" that can
//! never contradict anything.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Vector;
use crate::cplx::{ChainMap, Complex};
use crate::derived::{Certificate, Engine};
use crate::exact::Field;
use crate::fgmod::FgModule;
use crate::sdc::{
    auslander_membership, gc_dimension, grade_c, is_dualizing_direct, is_semidualizing, is_shift_of_ring,
    rhom_as_complex, GcValue, SdcVerdict,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Anni,
    BassCriterion,
    TypeEquiv,
    Tak,
    ModuleCor,
    GradeCm,
    MainEquiv,
    AuslanderChar,
    CutRegular,
    QBass,
    QAmp,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Anni,
        TheoremId::BassCriterion,
        TheoremId::TypeEquiv,
        TheoremId::Tak,
        TheoremId::ModuleCor,
        TheoremId::GradeCm,
        TheoremId::MainEquiv,
        TheoremId::AuslanderChar,
        TheoremId::CutRegular,
        TheoremId::QBass,
        TheoremId::QAmp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::Anni => "anni",
            TheoremId::BassCriterion => "bass_criterion",
            TheoremId::TypeEquiv => "type_equiv",
            TheoremId::Tak => "tak",
            TheoremId::ModuleCor => "module_cor",
            TheoremId::GradeCm => "grade_cm",
            TheoremId::MainEquiv => "main_equiv",
            TheoremId::AuslanderChar => "auslander_char",
            TheoremId::CutRegular => "cut_regular",
            TheoremId::QBass => "q_bass",
            TheoremId::QAmp => "q_amp",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A truth value with its guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tri {
    pub value: Option<bool>,
    pub certificate: Certificate,
    /// False only because a finite pool held no witness.
    pub pool_relative: bool,
}

impl Tri {
    pub fn exact(v: bool) -> Self {
        Tri { value: Some(v), certificate: Certificate::Exact, pool_relative: false }
    }

    pub fn unknown(certificate: Certificate) -> Self {
        Tri { value: None, certificate, pool_relative: false }
    }

    fn of_verdict(v: &SdcVerdict) -> Self {
        Tri { value: v.holds, certificate: v.certificate, pool_relative: false }
    }

    fn of_result(r: Result<bool>) -> Self {
        match r {
            Ok(b) => Tri::exact(b),
            Err(e) => Tri::unknown(bound_of(&e)),
        }
    }

    /// Decided, on certified data, and not a mere failed search.
    pub fn strong(&self) -> Option<bool> {
        match (self.value, self.certificate) {
            (_, Certificate::UpToBound(_)) => None,
            (Some(false), _) if self.pool_relative => None,
            (v, _) => v,
        }
    }

    /// Kleene conjunction: a certified false wins, then any unknown.
    pub fn and(parts: &[Tri]) -> Tri {
        let falses: Vec<&Tri> = parts.iter().filter(|t| t.value == Some(false)).collect();
        if let Some(best) = falses.iter().max_by_key(|t| (!t.pool_relative, t.certificate)) {
            return **best;
        }
        let cert = parts.iter().map(|t| t.certificate).min().unwrap_or(Certificate::Exact);
        if parts.iter().any(|t| t.value.is_none()) {
            return Tri::unknown(cert);
        }
        Tri { value: Some(true), certificate: cert, pool_relative: false }
    }

    /// Existential over a pool: a witness is definite, absence is pool-relative.
    pub fn exists(parts: &[Tri]) -> Tri {
        if let Some(w) = parts.iter().filter(|t| t.value == Some(true)).max_by_key(|t| t.certificate) {
            return *w;
        }
        let cert = parts.iter().map(|t| t.certificate).min().unwrap_or(Certificate::Exact);
        if parts.iter().any(|t| t.value.is_none()) {
            return Tri::unknown(cert);
        }
        Tri { value: Some(false), certificate: cert, pool_relative: true }
    }

    pub fn render(&self) -> String {
        let v = match self.value {
            Some(true) => "true",
            Some(false) if self.pool_relative => "false (in pool)",
            Some(false) => "false",
            None => "unknown",
        };
        format!("{v} [{}]", self.certificate.label())
    }
}

fn bound_of(e: &Error) -> Certificate {
    match e {
        Error::WindowExceeded { limit, .. } => Certificate::UpToBound(*limit),
        Error::RankBudgetExceeded { degree, .. } => Certificate::UpToBound(*degree - 1),
        _ => Certificate::UpToBound(-1),
    }
}

/// A recorded quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Truth(Tri),
    Int(i64),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Truth(t) => f.write_str(&t.render()),
            Value::Int(n) => write!(f, "{n}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conclusion {
    Consistent,
    Inconsistent(String),
    /// Lists the certificates or reasons that prevented a decision.
    Inconclusive(Vec<String>),
    HypothesesNotMet(String),
}

impl Conclusion {
    pub fn label(&self) -> &'static str {
        match self {
            Conclusion::Consistent => "consistent",
            Conclusion::Inconsistent(_) => "INCONSISTENT",
            Conclusion::Inconclusive(_) => "inconclusive",
            Conclusion::HypothesesNotMet(_) => "hypotheses-not-met",
        }
    }

    pub fn detail(&self) -> String {
        match self {
            Conclusion::Consistent => String::new(),
            Conclusion::Inconsistent(s) | Conclusion::HypothesesNotMet(s) => s.clone(),
            Conclusion::Inconclusive(v) => v.join("; "),
        }
    }

    /// Combines conclusions of several checks on one instance.
    fn merge(parts: Vec<Conclusion>) -> Conclusion {
        let mut reasons = Vec::new();
        for p in &parts {
            if let Conclusion::Inconsistent(_) = p {
                return p.clone();
            }
        }
        for p in parts {
            if let Conclusion::Inconclusive(r) = p {
                reasons.extend(r);
            }
        }
        if reasons.is_empty() {
            Conclusion::Consistent
        } else {
            Conclusion::Inconclusive(reasons)
        }
    }
}

/// A named input complex.
#[derive(Debug, Clone)]
pub struct Named<F: Field> {
    pub name: String,
    pub complex: Complex<F>,
}

impl<F: Field> Named<F> {
    pub fn new(name: impl Into<String>, complex: Complex<F>) -> Self {
        Named { name: name.into(), complex }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    /// Role → input name.
    pub inputs: BTreeMap<String, String>,
    pub values: BTreeMap<String, Value>,
    pub conclusion: Conclusion,
    pub notes: Vec<String>,
}

impl TheoremReport {
    fn new(theorem: TheoremId) -> Self {
        TheoremReport {
            theorem,
            inputs: BTreeMap::new(),
            values: BTreeMap::new(),
            conclusion: Conclusion::Consistent,
            notes: Vec::new(),
        }
    }

    fn input(&mut self, role: &str, name: &str) {
        self.inputs.insert(role.into(), name.into());
    }

    fn truth(&mut self, key: &str, t: Tri) -> Tri {
        self.values.insert(key.into(), Value::Truth(t));
        t
    }

    fn int(&mut self, key: &str, n: i64) {
        self.values.insert(key.into(), Value::Int(n));
    }

    fn text(&mut self, key: &str, s: impl Into<String>) {
        self.values.insert(key.into(), Value::Text(s.into()));
    }
}

/// The conclusion for a claimed equivalence between named conditions.
pub fn equivalence(conds: &[(&str, Tri)]) -> Conclusion {
    let t = conds.iter().find(|(_, c)| c.strong() == Some(true));
    let f = conds.iter().find(|(_, c)| c.strong() == Some(false));
    if let (Some((a, _)), Some((b, _))) = (t, f) {
        return Conclusion::Inconsistent(format!("{a} holds but {b} fails"));
    }
    let mut reasons = Vec::new();
    for (name, c) in conds {
        if c.strong().is_none() && !(c.value == Some(false) && t.is_none()) {
            reasons.push(format!("{name}: {}", c.render()));
        }
    }
    if reasons.is_empty() {
        Conclusion::Consistent
    } else {
        Conclusion::Inconclusive(reasons)
    }
}

/// The conclusion for a claimed implication p ⇒ q.
pub fn implication(p: (&str, Tri), q: (&str, Tri)) -> Conclusion {
    match (p.1.strong(), q.1.strong()) {
        (Some(true), Some(false)) => Conclusion::Inconsistent(format!("{} holds but {} fails", p.0, q.0)),
        (Some(false), _) | (_, Some(true)) => Conclusion::Consistent,
        _ if p.1.value == Some(false) => Conclusion::Consistent,
        _ => Conclusion::Inconclusive(vec![format!("{}: {}", p.0, p.1.render()), format!("{}: {}", q.0, q.1.render())]),
    }
}

fn require_sd<F: Field>(e: &Engine<F>, c: &Complex<F>) -> Result<Tri> {
    let v = is_semidualizing(e, c)?;
    if v.holds == Some(false) {
        let why = v.witness.map(|w| w.to_string()).unwrap_or_default();
        return Err(Error::NotSemidualizing(why));
    }
    Ok(Tri::of_verdict(&v))
}

fn ring<F: Field>(e: &Engine<F>) -> Complex<F> {
    Complex::of_module(&FgModule::free(e.algebra(), 1), 0)
}

fn inf_of<F: Field>(x: &Complex<F>) -> Result<i64> {
    x.inf().finite().ok_or(Error::ZeroComplex)
}

/// An integer that may be unavailable, with the reason as a certificate.
type Num = std::result::Result<i64, Certificate>;

fn num<T: TryInto<i64>>(r: Result<T>) -> Num {
    match r {
        Ok(v) => Ok(v.try_into().unwrap_or(i64::MAX)),
        Err(e) => Err(bound_of(&e)),
    }
}

fn eq_tri(a: Num, b: Num) -> Tri {
    match (a, b) {
        (Ok(a), Ok(b)) => Tri::exact(a == b),
        (Err(c), _) | (_, Err(c)) => Tri::unknown(c),
    }
}

impl TheoremReport {
    fn num(&mut self, key: &str, n: &Num) {
        match n {
            Ok(v) => self.int(key, *v),
            Err(c) => self.text(key, format!("unknown [{}]", c.label())),
        }
    }
}

fn bass_at<F: Field>(e: &Engine<F>, x: &Complex<F>, i: i64) -> Num {
    match e.bass_numbers(x, i..=i) {
        Ok(n) => Ok(n.values[&i] as i64),
        Err(err) => Err(bound_of(&err)),
    }
}

fn betti_at<F: Field>(e: &Engine<F>, x: &Complex<F>, i: i64) -> Num {
    match e.betti_numbers(x, i..=i) {
        Ok(n) => Ok(n.values[&i] as i64),
        Err(err) => Err(bound_of(&err)),
    }
}

fn gc_finite<F: Field>(e: &Engine<F>, c: &Complex<F>, x: &Complex<F>) -> Result<(Tri, Option<i64>)> {
    let g = gc_dimension(e, c, x)?;
    Ok(match g.value {
        GcValue::Finite(n) => (Tri { value: Some(true), certificate: g.certificate, pool_relative: false }, Some(n)),
        GcValue::Infinite => (Tri { value: Some(false), certificate: g.certificate, pool_relative: false }, None),
        GcValue::Unknown => (Tri::unknown(g.certificate), None),
    })
}

/// C is a Cohen-Macaulay semidualizing complex of type 1 iff it is dualizing.
pub fn check_anni<F: Field>(e: &Engine<F>, c: &Named<F>) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(TheoremId::Anni);
    r.input("C", &c.name);
    let sd = r.truth("semidualizing", Tri::of_verdict(&is_semidualizing(e, &c.complex)?));
    let cm = r.truth("cohen_macaulay", Tri::of_result(e.is_cohen_macaulay(&c.complex)));
    let ty = num(e.type_of(&c.complex));
    r.num("type", &ty);
    let t1 = r.truth("type_one", eq_tri(ty, Ok(1)));
    let lhs = r.truth("lhs", Tri::and(&[sd, cm, t1]));
    let rhs = r.truth("dualizing", Tri::of_verdict(&is_dualizing_direct(&c.complex)));
    r.conclusion = equivalence(&[("CM semidualizing of type 1", lhs), ("dualizing", rhs)]);
    Ok(r)
}

/// C is dualizing iff μ^{inf C + dim C}(R) = β_{inf C}(C).
pub fn check_bass_criterion<F: Field>(e: &Engine<F>, c: &Named<F>) -> Result<TheoremReport> {
    require_sd(e, &c.complex)?;
    let mut r = TheoremReport::new(TheoremId::BassCriterion);
    r.input("C", &c.name);
    let inf = inf_of(&c.complex)?;
    let idx = inf + e.kdim(&c.complex)?;
    let mu = bass_at(e, &ring(e), idx);
    let beta = betti_at(e, &c.complex, inf);
    r.int("bass_index", idx);
    r.num("mu_R", &mu);
    r.num("beta_C", &beta);
    let eq = r.truth("equality", eq_tri(mu, beta));
    let d = r.truth("dualizing", Tri::of_verdict(&is_dualizing_direct(&c.complex)));
    r.conclusion = equivalence(&[("Bass equality", eq), ("dualizing", d)]);
    Ok(r)
}

/// (i) some Z of finite G_C-dimension has type 1; (ii) r(R) = β_{inf C}(C);
/// (iii) r(C) = 1. Also checks r(R) = β_{inf C}(C)·μ^{depth C}(C) and, for
/// each Z of finite G_C-dimension s, r(Z) = β_{inf C}(Σ^s RHom(Z, C))·μ^{depth C}(C).
pub fn check_type_equiv<F: Field>(e: &Engine<F>, c: &Named<F>, zs: &[Named<F>]) -> Result<TheoremReport> {
    require_sd(e, &c.complex)?;
    let mut r = TheoremReport::new(TheoremId::TypeEquiv);
    r.input("C", &c.name);
    let inf = inf_of(&c.complex)?;
    let type_r = num(e.type_of(&ring(e)));
    let type_c = num(e.type_of(&c.complex));
    let beta = betti_at(e, &c.complex, inf);
    r.num("type_R", &type_r);
    r.num("type_C", &type_c);
    r.num("beta_inf_C", &beta);
    let ii = r.truth("ii", eq_tri(type_r, beta));
    let iii = r.truth("iii", eq_tri(type_c, Ok(1)));

    let mut witnesses = Vec::new();
    let mut identities = Vec::new();
    for z in zs {
        r.input(&format!("Z:{}", z.name), &z.name);
        let (fin, s) = gc_finite(e, &c.complex, &z.complex)?;
        let tz = num(e.type_of(&z.complex));
        r.num(&format!("type[{}]", z.name), &tz);
        r.truth(&format!("gc_finite[{}]", z.name), fin);
        witnesses.push(Tri::and(&[fin, eq_tri(tz, Ok(1))]));
        if let (Some(s), Ok(tz), Ok(tc)) = (s, tz, type_c) {
            if let Some(dag) = rhom_as_complex(e, &z.complex, &c.complex)? {
                let b = betti_at(e, &dag, inf - s);
                r.num(&format!("beta_dagger[{}]", z.name), &b);
                let lhs = ("type of Z", Tri::exact(true));
                let ok = eq_tri(Ok(tz), b.map(|b| b * tc));
                let ok = Tri { certificate: ok.certificate.weakest(fin.certificate), ..ok };
                r.truth(&format!("eq_z[{}]", z.name), ok);
                identities.push(implication(lhs, ("r(Z) = β·μ", ok)).with_name(&z.name));
            }
        }
    }
    let i = r.truth("i", Tri::exists(&witnesses));
    let prod = match (beta, type_c) {
        (Ok(b), Ok(t)) => Ok(b * t),
        (Err(c), _) | (_, Err(c)) => Err(c),
    };
    let eq34 = r.truth("eq_ring", eq_tri(type_r, prod));
    identities.push(implication(("identity", Tri::exact(true)), ("r(R) = β·μ", eq34)));
    let mut parts = vec![equivalence(&[("(i)", i), ("(ii)", ii), ("(iii)", iii)])];
    parts.extend(identities);
    r.conclusion = Conclusion::merge(parts);
    Ok(r)
}

impl Conclusion {
    fn with_name(self, name: &str) -> Conclusion {
        match self {
            Conclusion::Inconsistent(s) => Conclusion::Inconsistent(format!("{name}: {s}")),
            other => other,
        }
    }
}

/// Hypotheses of a conditional statement: None when all hold, otherwise a
/// conclusion to report instead.
fn hypotheses(hyps: &[(&str, Tri)]) -> Option<Conclusion> {
    if let Some((name, t)) = hyps.iter().find(|(_, t)| t.value == Some(false)) {
        return Some(Conclusion::HypothesesNotMet(format!("{name}: {}", t.render())));
    }
    let open: Vec<String> =
        hyps.iter().filter(|(_, t)| t.strong().is_none()).map(|(n, t)| format!("{n}: {}", t.render())).collect();
    (!open.is_empty()).then_some(Conclusion::Inconclusive(open))
}

/// r(C) = 1 and a Cohen-Macaulay module of finite G_C-dimension force C to
/// be dualizing.
pub fn check_tak<F: Field>(e: &Engine<F>, c: &Named<F>, m: &Named<F>) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(TheoremId::Tak);
    r.input("C", &c.name);
    r.input("M", &m.name);
    let sd = r.truth("semidualizing", Tri::of_verdict(&is_semidualizing(e, &c.complex)?));
    if sd.value == Some(false) {
        r.conclusion = Conclusion::HypothesesNotMet("C is not semidualizing".into());
        return Ok(r);
    }
    let ty = num(e.type_of(&c.complex));
    r.num("type_C", &ty);
    let t1 = r.truth("type_one", eq_tri(ty, Ok(1)));
    let module = r.truth("M_is_module", Tri::exact(m.complex.amp().finite() == Some(0)));
    let cm = r.truth("M_cohen_macaulay", Tri::of_result(e.is_cohen_macaulay(&m.complex)));
    let (fin, g) = gc_finite(e, &c.complex, &m.complex)?;
    r.truth("gc_finite", fin);
    if let Some(g) = g {
        r.int("gc_dimension", g);
    }
    let hyps = [("semidualizing", sd), ("r(C) = 1", t1), ("M module", module), ("M CM", cm), ("G_C-dim M finite", fin)];
    let d = r.truth("dualizing", Tri::of_verdict(&is_dualizing_direct(&c.complex)));
    r.conclusion = match hypotheses(&hyps) {
        Some(c) => c,
        None => implication(("hypotheses", Tri::and(&hyps.map(|h| h.1))), ("dualizing", d)),
    };
    Ok(r)
}

fn require_module<F: Field>(c: &Complex<F>) -> Result<()> {
    match c.amp().finite() {
        Some(0) => Ok(()),
        Some(a) => Err(Error::NotModule(a)),
        None => Err(Error::ZeroComplex),
    }
}

/// For a semidualizing module C: (i) C dualizing; (ii) a CM module of type 1
/// and finite G_C-dimension exists; (iii) r(R) = β_0(C) and a CM module of
/// finite G_C-dimension exists.
pub fn check_module_cor<F: Field>(e: &Engine<F>, c: &Named<F>, ms: &[Named<F>]) -> Result<TheoremReport> {
    require_module(&c.complex)?;
    require_sd(e, &c.complex)?;
    let mut r = TheoremReport::new(TheoremId::ModuleCor);
    r.input("C", &c.name);
    let i = r.truth("i", Tri::of_verdict(&is_dualizing_direct(&c.complex)));
    let mut with_type = Vec::new();
    let mut any = Vec::new();
    for m in ms {
        r.input(&format!("M:{}", m.name), &m.name);
        let module = Tri::exact(m.complex.amp().finite() == Some(0));
        let cm = Tri::of_result(e.is_cohen_macaulay(&m.complex));
        let (fin, _) = gc_finite(e, &c.complex, &m.complex)?;
        let ty = num(e.type_of(&m.complex));
        r.truth(&format!("gc_finite[{}]", m.name), fin);
        r.num(&format!("type[{}]", m.name), &ty);
        let base = Tri::and(&[module, cm, fin]);
        any.push(base);
        with_type.push(Tri::and(&[base, eq_tri(ty, Ok(1))]));
    }
    let ii = r.truth("ii", Tri::exists(&with_type));
    let type_r = num(e.type_of(&ring(e)));
    let beta0 = betti_at(e, &c.complex, inf_of(&c.complex)?);
    r.num("type_R", &type_r);
    r.num("beta0_C", &beta0);
    let iii = r.truth("iii", Tri::and(&[eq_tri(type_r, beta0), Tri::exists(&any)]));
    r.conclusion = equivalence(&[("(i)", i), ("(ii)", ii), ("(iii)", iii)]);
    Ok(r)
}

/// If X is Cohen-Macaulay of finite G_C-dimension with
/// dim X = dim C − gr_C(X), then C is Cohen-Macaulay.
pub fn check_grade_cm<F: Field>(e: &Engine<F>, c: &Named<F>, x: &Named<F>) -> Result<TheoremReport> {
    require_sd(e, &c.complex)?;
    let mut r = TheoremReport::new(TheoremId::GradeCm);
    r.input("C", &c.name);
    r.input("X", &x.name);
    let (fin, _) = gc_finite(e, &c.complex, &x.complex)?;
    r.truth("gc_finite", fin);
    let cm_x = r.truth("X_cohen_macaulay", Tri::of_result(e.is_cohen_macaulay(&x.complex)));
    let dim_x = num(e.kdim(&x.complex));
    let dim_c = num(e.kdim(&c.complex));
    let gr = num(grade_c(e, &c.complex, &x.complex));
    r.num("dim_X", &dim_x);
    r.num("dim_C", &dim_c);
    r.num("grade", &gr);
    let rhs = match (dim_c, gr) {
        (Ok(a), Ok(b)) => Ok(a - b),
        (Err(c), _) | (_, Err(c)) => Err(c),
    };
    let eq = r.truth("dimension_equality", eq_tri(dim_x, rhs));
    let cm_c = r.truth("C_cohen_macaulay", Tri::of_result(e.is_cohen_macaulay(&c.complex)));
    let hyps = [("G_C-dim X finite", fin), ("X CM", cm_x), ("dim X = dim C − gr_C X", eq)];
    r.conclusion = match hypotheses(&hyps) {
        Some(c) => c,
        None => implication(("hypotheses", Tri::and(&hyps.map(|h| h.1))), ("C CM", cm_c)),
    };
    Ok(r)
}

/// Conditions (i)–(iv) of the main theorem, with the pool {X, C} for the
/// existential parts, and (iv) ⇒ (i) asserted when X falls under a case.
pub fn check_main_equiv<F: Field>(e: &Engine<F>, c: &Named<F>, x: &Named<F>) -> Result<TheoremReport> {
    require_sd(e, &c.complex)?;
    let mut r = TheoremReport::new(TheoremId::MainEquiv);
    r.input("C", &c.name);
    r.input("X", &x.name);
    let i = r.truth("i", Tri::of_verdict(&is_dualizing_direct(&c.complex)));
    let mut cands = Vec::new();
    let mut typed = Vec::new();
    let mut x_cand = Tri::exact(false);
    for (k, z) in [("X", x), ("C", c)] {
        let cm = Tri::of_result(e.is_cohen_macaulay(&z.complex));
        let (fin, _) = gc_finite(e, &c.complex, &z.complex)?;
        let ty = num(e.type_of(&z.complex));
        let cand = r.truth(&format!("cm_finite_gc[{k}]"), Tri::and(&[cm, fin]));
        r.num(&format!("type[{k}]"), &ty);
        if k == "X" {
            x_cand = cand;
        }
        cands.push(cand);
        typed.push(Tri::and(&[cand, eq_tri(ty, Ok(1))]));
    }
    let exists = Tri::exists(&cands);
    let ii = r.truth("ii", Tri::exists(&typed));
    let inf = inf_of(&c.complex)?;
    let type_r = num(e.type_of(&ring(e)));
    let beta = betti_at(e, &c.complex, inf);
    let type_c = num(e.type_of(&c.complex));
    let iii = r.truth("iii", Tri::and(&[eq_tri(type_r, beta), exists]));
    let t1 = eq_tri(type_c, Ok(1));
    let iv = r.truth("iv", Tri::and(&[t1, exists]));

    let mut parts = vec![
        implication(("(i)", i), ("(ii)", ii)),
        implication(("(ii)", ii), ("(iii)", iii)),
        equivalence(&[("(iii)", iii), ("(iv)", iv)]),
    ];
    let mut cases = Vec::new();
    if x.complex.amp().finite() == Some(0) {
        cases.push("1");
    }
    if is_dualizing_direct(&x.complex).holds == Some(true) {
        cases.push("2");
    }
    if let (Ok(dx), Ok(dc), Ok(g)) =
        (e.kdim(&x.complex), e.kdim(&c.complex), grade_c(e, &c.complex, &x.complex))
    {
        if dx == dc - g {
            cases.push("3");
        }
    }
    r.text("cases", cases.join(","));
    if cases.is_empty() {
        r.notes.push("X falls under none of the cases; (iv) ⇒ (i) not asserted".into());
    } else {
        let iv_x = Tri::and(&[t1, x_cand]);
        parts.push(implication(("(iv) witnessed by X", iv_x), ("(i)", i)));
    }
    r.conclusion = Conclusion::merge(parts);
    Ok(r)
}

/// (i) C ∼ R; (ii) k ∈ A_C; (iii) a CM module of type 1 lies in A_C.
pub fn check_auslander_char<F: Field>(e: &Engine<F>, c: &Named<F>, ms: &[Named<F>]) -> Result<TheoremReport> {
    require_sd(e, &c.complex)?;
    let mut r = TheoremReport::new(TheoremId::AuslanderChar);
    r.input("C", &c.name);
    let i = r.truth("i", Tri::exact(is_shift_of_ring(&c.complex)));
    let k = Complex::of_module(&FgModule::residue_field(e.algebra()), 0);
    let ii = r.truth("ii", Tri::of_verdict(&auslander_membership(e, &c.complex, &k)?));
    let mut found = Vec::new();
    for m in ms {
        r.input(&format!("M:{}", m.name), &m.name);
        let module = Tri::exact(m.complex.amp().finite() == Some(0));
        let cm = Tri::of_result(e.is_cohen_macaulay(&m.complex));
        let ty = num(e.type_of(&m.complex));
        let pre = Tri::and(&[module, cm, eq_tri(ty, Ok(1))]);
        // Membership is only worth computing for type-1 CM modules.
        let member = if pre.value == Some(true) {
            Tri::of_verdict(&auslander_membership(e, &c.complex, &m.complex)?)
        } else {
            pre
        };
        r.truth(&format!("member[{}]", m.name), member);
        found.push(Tri::and(&[pre, member]));
    }
    let iii = r.truth("iii", Tri::exists(&found));
    r.conclusion = equivalence(&[("(i)", i), ("(ii)", ii), ("(iii)", iii)]);
    Ok(r)
}

fn render_coords<F: Field>(field: &F, v: &[F::Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|a| field.render(a)).collect();
    format!("({})", parts.join(", "))
}

/// Cutting by an M-sequence raises G_C-dimension by its length. Over an
/// Artinian ring every element of m kills the socle of M, so no x ∈ m is
/// M-regular and only the empty sequence survives.
pub fn cut_regular<F: Field>(
    e: &Engine<F>,
    c: &Named<F>,
    m: &Named<F>,
    xs: &[Vector<F>],
) -> Result<TheoremReport> {
    let alg = e.algebra();
    let mut r = TheoremReport::new(TheoremId::CutRegular);
    r.input("C", &c.name);
    r.input("M", &m.name);
    r.int("n", xs.len() as i64);
    let module = match (m.complex.amp().finite(), m.complex.inf().finite()) {
        (Some(0), Some(i)) => m.complex.homology(i),
        _ => {
            r.conclusion = Conclusion::HypothesesNotMet("M is not a nonzero module".into());
            return Ok(r);
        }
    };
    if xs.is_empty() {
        if let Ok(g) = gc_dimension(e, &c.complex, &m.complex) {
            r.text("gc_dimension", format!("{:?}", g.value));
        }
        r.notes.push("empty sequence: M/0M = M and the identity holds".into());
        r.conclusion = Conclusion::Consistent;
        return Ok(r);
    }
    let mut cur = module;
    for (idx, x) in xs.iter().enumerate() {
        let label = alg.render_element(x);
        if !alg.in_maximal_ideal(x) {
            r.conclusion = Conclusion::HypothesesNotMet(format!("x{} = {label} is not in m", idx + 1));
            return Ok(r);
        }
        let kernel = cur.act_matrix(x).kernel_vectors();
        if !kernel.is_empty() {
            // The socle is killed by x and is nonzero whenever the quotient is.
            let w = cur.socle().into_iter().next().unwrap_or_else(|| kernel[0].clone());
            r.text("witness", render_coords(alg.field(), &w));
            r.conclusion = Conclusion::HypothesesNotMet(format!(
                "NoRegularElement: x{} = {label} annihilates {} in the current quotient",
                idx + 1,
                render_coords(alg.field(), &w)
            ));
            return Ok(r);
        }
        let image: Vec<Vector<F>> =
            (0..cur.dim()).map(|j| cur.act(x, &unit_vec(alg.field(), cur.dim(), j))).collect();
        cur = cur.quotient(&image).0;
    }
    // Only reachable when every quotient was zero from the start.
    r.conclusion = Conclusion::HypothesesNotMet("M/xM vanished".into());
    Ok(r)
}

fn unit_vec<F: Field>(field: &F, n: usize, j: usize) -> Vector<F> {
    let mut v = vec![field.zero(); n];
    v[j] = field.one();
    v
}

/// The open questions. Both sides are evaluated and compared; a single
/// instance never settles a question.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Question {
    /// μ^{dim C}(C) = 1 against μ^{inf C + dim C}(R) = β_{inf C}(C).
    Bass,
    /// Does a CM complex of positive amplitude and finite G_C-dimension,
    /// together with r(C) = 1, force C to be Cohen-Macaulay?
    Amp,
}

pub fn explore_question<F: Field>(
    e: &Engine<F>,
    kind: Question,
    c: &Named<F>,
    pool: &[Named<F>],
) -> Result<TheoremReport> {
    require_sd(e, &c.complex)?;
    match kind {
        Question::Bass => explore_bass(e, c),
        Question::Amp => explore_amp(e, c, pool),
    }
}

fn explore_bass<F: Field>(e: &Engine<F>, c: &Named<F>) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(TheoremId::QBass);
    r.input("C", &c.name);
    let inf = inf_of(&c.complex)?;
    let dim = num(e.kdim(&c.complex));
    r.num("dim_C", &dim);
    let (mu_c, mu_r) = match dim {
        Ok(d) => (bass_at(e, &c.complex, d), bass_at(e, &ring(e), inf + d)),
        Err(cert) => (Err(cert), Err(cert)),
    };
    let beta = betti_at(e, &c.complex, inf);
    r.num("mu_dim_C", &mu_c);
    r.num("mu_R", &mu_r);
    r.num("beta_inf_C", &beta);
    let i = r.truth("i", eq_tri(mu_c, Ok(1)));
    let ii = r.truth("ii", eq_tri(mu_r, beta));
    match (i.strong(), ii.strong()) {
        (Some(a), Some(b)) if a == b => r.notes.push(format!("both sides {a}: agreement")),
        (Some(a), Some(b)) => r.notes.push(format!("sides separate: (i) {a}, (ii) {b}")),
        _ => r.notes.push("a side is undecided".into()),
    }
    // Only (ii) ⇒ (i) is proven; a violation of it is a genuine inconsistency.
    r.conclusion = implication(("(ii)", ii), ("(i)", i));
    Ok(r)
}

/// Positive-amplitude complexes built from a pool element: X ⊕ ΣX and the
/// cones of multiplication by each generator of m.
fn amp_candidates<F: Field>(e: &Engine<F>, x: &Named<F>) -> Result<Vec<Named<F>>> {
    let mut out = vec![Named::new(format!("{0}+S{0}", x.name), x.complex.direct_sum(&x.complex.shift(1))?)];
    for (var, a) in e.algebra().vars() {
        let comps = x.complex.entries().iter().map(|(&i, m)| (i, m.act_matrix(a))).collect();
        let f = ChainMap::new(&x.complex, &x.complex, comps)?;
        out.push(Named::new(format!("cone({var}|{})", x.name), Complex::cone(&f)));
    }
    Ok(out)
}

fn explore_amp<F: Field>(e: &Engine<F>, c: &Named<F>, pool: &[Named<F>]) -> Result<TheoremReport> {
    let mut r = TheoremReport::new(TheoremId::QAmp);
    r.input("C", &c.name);
    let type_c = num(e.type_of(&c.complex));
    r.num("type_C", &type_c);
    let t1 = eq_tri(type_c, Ok(1));
    let cm_c = r.truth("C_cohen_macaulay", Tri::of_result(e.is_cohen_macaulay(&c.complex)));
    let mut hits = Vec::new();
    for x in pool {
        r.input(&format!("pool:{}", x.name), &x.name);
        for cand in amp_candidates(e, x)? {
            let amp = cand.complex.amp().finite();
            if !matches!(amp, Some(a) if a > 0) {
                continue;
            }
            let (fin, _) = gc_finite(e, &c.complex, &cand.complex)?;
            let cm = Tri::of_result(e.is_cohen_macaulay(&cand.complex));
            r.truth(&format!("gc_finite[{}]", cand.name), fin);
            r.truth(&format!("cm[{}]", cand.name), cm);
            let both = Tri::and(&[fin, cm]);
            if both.value == Some(true) {
                hits.push(cand.name.clone());
            }
        }
    }
    r.text("candidates_meeting_hypotheses", hits.join(","));
    r.notes.push("over a zero-dimensional ring depth X = -sup X, so a CM complex has amplitude 0".into());
    r.conclusion = if hits.is_empty() {
        Conclusion::HypothesesNotMet("no positive-amplitude CM complex of finite G_C-dimension in the pool".into())
    } else {
        implication(("r(C) = 1 with a witness", t1), ("C CM", cm_c))
    };
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::derived::Settings;
    use crate::exact::Fp;

    fn ring_of(vars: &[&str], rels: &[&str]) -> Algebra<Fp> {
        Algebra::monomial_quotient(&Fp::new(101).unwrap(), vars, rels).unwrap()
    }

    fn fat() -> Algebra<Fp> {
        ring_of(&["x", "y"], &["x^2", "x*y", "y^2"])
    }

    fn dual() -> Algebra<Fp> {
        ring_of(&["x"], &["x^2"])
    }

    fn r(a: &Algebra<Fp>) -> Named<Fp> {
        Named::new("R", Complex::of_module(&FgModule::free(a, 1), 0))
    }

    fn w(a: &Algebra<Fp>) -> Named<Fp> {
        Named::new("w", Complex::of_module(&FgModule::free(a, 1).k_dual(), 0))
    }

    fn k(a: &Algebra<Fp>) -> Named<Fp> {
        Named::new("k", Complex::of_module(&FgModule::residue_field(a), 0))
    }

    fn truth(rep: &TheoremReport, key: &str) -> Option<bool> {
        match rep.values.get(key) {
            Some(Value::Truth(t)) => t.value,
            other => panic!("{key}: {other:?}"),
        }
    }

    fn int(rep: &TheoremReport, key: &str) -> i64 {
        match rep.values.get(key) {
            Some(Value::Int(n)) => *n,
            other => panic!("{key}: {other:?}"),
        }
    }

    #[test]
    fn anni_examples() {
        let a = fat();
        let e = Engine::new(&a, Settings::default());
        let rep = check_anni(&e, &w(&a)).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(truth(&rep, "lhs"), Some(true));
        let rep = check_anni(&e, &r(&a)).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(truth(&rep, "lhs"), Some(false));
        assert_eq!(truth(&rep, "dualizing"), Some(false));

        let d = dual();
        let e = Engine::new(&d, Settings::default());
        let c = Named::new("S3R", r(&d).complex.shift(3));
        let rep = check_anni(&e, &c).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(truth(&rep, "dualizing"), Some(true));
    }

    #[test]
    fn bass_criterion_examples() {
        let a = fat();
        let e = Engine::new(&a, Settings::default());
        let rep = check_bass_criterion(&e, &r(&a)).unwrap();
        assert_eq!((int(&rep, "mu_R"), int(&rep, "beta_C")), (2, 1));
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        let rep = check_bass_criterion(&e, &w(&a)).unwrap();
        assert_eq!((int(&rep, "mu_R"), int(&rep, "beta_C")), (2, 2));
        assert_eq!(truth(&rep, "dualizing"), Some(true));
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert!(matches!(check_bass_criterion(&e, &k(&a)), Err(Error::NotSemidualizing(_))));

        let d = dual();
        let e = Engine::new(&d, Settings::default());
        let rep = check_bass_criterion(&e, &r(&d)).unwrap();
        assert_eq!((int(&rep, "mu_R"), int(&rep, "beta_C")), (1, 1));
        assert_eq!(rep.conclusion, Conclusion::Consistent);
    }

    #[test]
    fn type_equiv_examples() {
        let a = fat();
        let e = Engine::new(&a, Settings::default());
        let rep = check_type_equiv(&e, &w(&a), &[r(&a), w(&a), k(&a)]).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        for key in ["i", "ii", "iii", "eq_ring"] {
            assert_eq!(truth(&rep, key), Some(true), "{key}");
        }
        let rep = check_type_equiv(&e, &r(&a), &[r(&a)]).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(truth(&rep, "ii"), Some(false));
        assert_eq!(truth(&rep, "iii"), Some(false));
        // 2 = 1·2
        assert_eq!((int(&rep, "type_R"), int(&rep, "beta_inf_C"), int(&rep, "type_C")), (2, 1, 2));
        assert_eq!(truth(&rep, "eq_ring"), Some(true));

        let c = ring_of(&["x"], &["x^3"]);
        let e = Engine::new(&c, Settings::default());
        let rep = check_type_equiv(&e, &r(&c), &[r(&c)]).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        for key in ["i", "ii", "iii"] {
            assert_eq!(truth(&rep, key), Some(true), "{key}");
        }
    }

    #[test]
    fn tak_examples() {
        let a = fat();
        let e = Engine::new(&a, Settings::default());
        let rep = check_tak(&e, &w(&a), &w(&a)).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(truth(&rep, "dualizing"), Some(true));
        let rep = check_tak(&e, &r(&a), &r(&a)).unwrap();
        assert_eq!(rep.conclusion.label(), "hypotheses-not-met");
        let rep = check_tak(&e, &k(&a), &r(&a)).unwrap();
        assert_eq!(rep.conclusion.label(), "hypotheses-not-met");

        let d = dual();
        let e = Engine::new(&d, Settings::default());
        let rep = check_tak(&e, &r(&d), &k(&d)).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(int(&rep, "gc_dimension"), 0);
    }

    #[test]
    fn module_cor_examples() {
        let d = dual();
        let e = Engine::new(&d, Settings::default());
        let rep = check_module_cor(&e, &r(&d), &[k(&d)]).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(truth(&rep, "i"), Some(true));

        let a = fat();
        let e = Engine::new(&a, Settings::default());
        // ω is dualizing but the pool holds no type-1 module.
        let rep = check_module_cor(&e, &w(&a), &[r(&a)]).unwrap();
        assert_eq!(rep.conclusion.label(), "inconclusive");
        let rep = check_module_cor(&e, &w(&a), &[r(&a), k(&a)]).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        let two = Named::new("R+SR", r(&a).complex.direct_sum(&r(&a).complex.shift(1)).unwrap());
        assert_eq!(check_module_cor(&e, &two, &[]).unwrap_err(), Error::NotModule(1));
    }

    #[test]
    fn grade_cm_examples() {
        let a = fat();
        let e = Engine::new(&a, Settings::default());
        for x in [w(&a), r(&a), Named::new("S1w", w(&a).complex.shift(1))] {
            let rep = check_grade_cm(&e, &w(&a), &x).unwrap();
            assert_eq!(rep.conclusion, Conclusion::Consistent, "{}", x.name);
            assert_eq!(truth(&rep, "dimension_equality"), Some(true));
            assert_eq!(truth(&rep, "C_cohen_macaulay"), Some(true));
        }
    }

    #[test]
    fn main_equiv_examples() {
        let a = fat();
        let e = Engine::new(&a, Settings::default());
        let rep = check_main_equiv(&e, &w(&a), &w(&a)).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(rep.values.get("cases"), Some(&Value::Text("1,2,3".into())));
        let rep = check_main_equiv(&e, &r(&a), &r(&a)).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(truth(&rep, "iv"), Some(false));

        let d = dual();
        let e = Engine::new(&d, Settings::default());
        let rep = check_main_equiv(&e, &r(&d), &k(&d)).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert!(matches!(rep.values.get("cases"), Some(Value::Text(s)) if s.starts_with('1')));
    }

    #[test]
    fn auslander_char_examples() {
        let a = fat();
        let e = Engine::new(&a, Settings::default());
        let pool = [r(&a), k(&a), w(&a)];
        let rep = check_auslander_char(&e, &r(&a), &pool).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!((truth(&rep, "i"), truth(&rep, "ii"), truth(&rep, "iii")), (Some(true), Some(true), Some(true)));
        let rep = check_auslander_char(&e, &w(&a), &pool).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!((truth(&rep, "i"), truth(&rep, "ii"), truth(&rep, "iii")), (Some(false), Some(false), Some(false)));

        let c = ring_of(&["x"], &["x^3"]);
        let e = Engine::new(&c, Settings::default());
        let rep = check_auslander_char(&e, &w(&c), &[k(&c)]).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        assert_eq!(truth(&rep, "iii"), Some(true));
    }

    #[test]
    fn cut_regular_examples() {
        let a = fat();
        let e = Engine::new(&a, Settings::default());
        let rep = cut_regular(&e, &w(&a), &w(&a), &[]).unwrap();
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        let x = a.parse_element("x").unwrap();
        let rep = cut_regular(&e, &w(&a), &r(&a), &[x]).unwrap();
        assert!(rep.conclusion.detail().starts_with("NoRegularElement"), "{:?}", rep.conclusion);
        assert!(rep.values.contains_key("witness"));
        let u = a.parse_element("1 + x").unwrap();
        let rep = cut_regular(&e, &w(&a), &r(&a), &[u]).unwrap();
        assert!(rep.conclusion.detail().contains("not in m"));
    }

    #[test]
    fn bass_question_examples() {
        let a = fat();
        let e = Engine::new(&a, Settings::default());
        let rep = explore_question(&e, Question::Bass, &w(&a), &[]).unwrap();
        assert_eq!((truth(&rep, "i"), truth(&rep, "ii")), (Some(true), Some(true)));
        assert_eq!(rep.conclusion, Conclusion::Consistent);
        let rep = explore_question(&e, Question::Bass, &r(&a), &[]).unwrap();
        assert_eq!(int(&rep, "mu_dim_C"), 2);
        assert_eq!((truth(&rep, "i"), truth(&rep, "ii")), (Some(false), Some(false)));
        assert!(rep.notes[0].contains("agreement"));
    }

    #[test]
    fn amp_question_finds_no_candidate() {
        let d = dual();
        let e = Engine::new(&d, Settings::default());
        let rep = explore_question(&e, Question::Amp, &r(&d), &[r(&d), k(&d)]).unwrap();
        assert_eq!(rep.conclusion.label(), "hypotheses-not-met");
        assert!(rep.values.keys().any(|k| k.starts_with("cm[cone(x|k)")));
    }
}
