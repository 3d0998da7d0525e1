//! Derived functors with explicit guarantees, and the numerical invariants
//! built on them.
//!
//! `rhom` and `dtensor` compute homology of Hom(F, Y) and F ⊗ Y where F is a
//! minimal free resolution of X truncated at some degree. Each result records
//! the degrees it knows exactly and what is known about the unbounded tail.
//!
//! Tail rules for RHom(X, Y) (homological degree n → −∞), with F resolving X:
//! - pd X < ∞ (F_{sup X + 1} = 0): the computation is complete.
//! - id Y < ∞ (μ^{1 − inf Y}(Y) = 0): H_n = 0 for n < inf Y − sup X.
//! - Ω^{s+p} ≅ (Ω^s)^c: e_n = c·e_{n+p} for n ≤ inf' Y − s − p − 1, where
//!   inf' Y is the lowest entry of Y.
//! - Ω^s ≅ k^a, or Y ≃ Σ^d k^a, with both dimensions infinite: unbounded.
//!
//! The Tor rules are the mirror images, with pd Y in place of id Y.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use crate::algebra::Algebra;
use crate::cplx::{hom_kcomplex, tensor_kcomplex, Complex};
use crate::exact::Field;
use crate::fgmod::{FgModule, DEFAULT_SEED};
use crate::resolve::{detect_periodicity, Budget, PeriodicityCert, Resolution};
use crate::{Error, Result};

/// How much of an infinite answer is known. Ordered weakest first, so the
/// weakest of several certificates is their minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Certificate {
    /// Values are certified for functor index ≤ N only.
    UpToBound(i64),
    /// The tail follows from a validated syzygy isomorphism.
    Periodic { start: i64, period: i64, multiplicity: usize },
    /// Finite data determines the full answer.
    Exact,
}

impl Certificate {
    pub fn weakest(self, other: Certificate) -> Certificate {
        self.min(other)
    }

    pub fn label(&self) -> String {
        match self {
            Certificate::Exact => "Exact".into(),
            Certificate::Periodic { start, period, multiplicity } => {
                if *multiplicity == 1 {
                    format!("Periodic(start={start}, period={period})")
                } else {
                    format!("Periodic(start={start}, period={period}, multiplicity={multiplicity})")
                }
            }
            Certificate::UpToBound(n) => format!("UpToBound({n})"),
        }
    }
}

/// Behaviour of the homology past the computed degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    /// Zero from `from` on (in the tail direction, inclusive).
    Vanishes { from: i64 },
    /// h(n) = c·h(n ∓ p) for degrees at or beyond `from`.
    Recurrence { from: i64, period: i64, multiplicity: usize },
    /// Nonzero in infinitely many degrees.
    Unbounded,
    Unknown,
}

/// Which functor a [`Derived`] came from; fixes the tail direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Functor {
    /// H_n(RHom), tail toward n → −∞; Ext^j = H_{−j}.
    Hom,
    /// H_n(⊗^L), tail toward n → +∞.
    Tensor,
}

/// Homology dimensions of a derived functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derived {
    pub functor: Functor,
    /// Exact values for homological degrees in [lo, hi].
    pub dims: BTreeMap<i64, usize>,
    pub lo: i64,
    pub hi: i64,
    pub tail: Tail,
    pub certificate: Certificate,
}

impl Derived {
    fn zero(functor: Functor) -> Self {
        Derived {
            functor,
            dims: BTreeMap::new(),
            lo: 0,
            hi: -1,
            tail: Tail::Vanishes { from: 0 },
            certificate: Certificate::Exact,
        }
    }

    /// dim H_n, when known.
    pub fn dim_at(&self, n: i64) -> Option<usize> {
        if self.hi < self.lo {
            return match self.tail {
                Tail::Vanishes { .. } => Some(0),
                _ => None,
            };
        }
        if (self.lo..=self.hi).contains(&n) {
            return Some(self.dims.get(&n).copied().unwrap_or(0));
        }
        // Toward the head the functor is zero for degree reasons.
        let (head, beyond) = match self.functor {
            Functor::Hom => (n > self.hi, self.lo - n),
            Functor::Tensor => (n < self.lo, n - self.hi),
        };
        if head {
            return Some(0);
        }
        let step = match self.functor {
            Functor::Hom => 1,
            Functor::Tensor => -1,
        };
        match self.tail {
            Tail::Vanishes { from } => {
                let past = match self.functor {
                    Functor::Hom => n <= from,
                    Functor::Tensor => n >= from,
                };
                past.then_some(0)
            }
            Tail::Recurrence { period, multiplicity, .. } => {
                // Walk back into the computed range in steps of `period`.
                let k = (beyond + period - 1) / period;
                let base = self.dim_at(n + step * k * period)?;
                Some(base * multiplicity.pow(k as u32))
            }
            Tail::Unbounded | Tail::Unknown => None,
        }
    }

    /// Whether dim H_n was computed directly rather than inferred from the tail.
    pub fn computed(&self, n: i64) -> bool {
        (self.lo..=self.hi).contains(&n)
            || match self.functor {
                Functor::Hom => n > self.hi,
                Functor::Tensor => n < self.lo,
            }
    }

    /// Ext^j, reading a Hom result.
    pub fn ext(&self, j: i64) -> Option<usize> {
        self.dim_at(-j)
    }

    /// Tor_n, reading a tensor result.
    pub fn tor(&self, n: i64) -> Option<usize> {
        self.dim_at(n)
    }

    /// Whether only finitely many degrees are nonzero, with the strength of
    /// that conclusion.
    pub fn bounded(&self) -> (Option<bool>, Certificate) {
        match self.tail {
            Tail::Vanishes { .. } => (Some(true), self.certificate),
            // A recurrence tail repeats a nonzero block with multiplicity ≥ 1
            // forever, which no bounded complex can do.
            Tail::Recurrence { .. } | Tail::Unbounded => (Some(false), Certificate::Exact),
            Tail::Unknown => (None, self.certificate),
        }
    }

    /// Largest degree with nonzero homology (−∞ as None).
    pub fn sup(&self) -> Option<i64> {
        self.dims.iter().rev().find(|(_, d)| **d > 0).map(|(i, _)| *i)
    }

    /// Lowest known degree with nonzero homology.
    pub fn inf(&self) -> Option<i64> {
        self.dims.iter().find(|(_, d)| **d > 0).map(|(i, _)| *i)
    }
}

/// Knobs shared by every computation of an [`Engine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    /// Extra degrees computed beyond what the inputs force; None means
    /// 2·dim R + 4.
    pub window: Option<i64>,
    pub budget: Budget,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { window: None, budget: Budget::default(), seed: DEFAULT_SEED }
    }
}

struct Cached<F: Field> {
    res: Resolution<F>,
    /// Periodicity search result, with the top degree it was run at.
    periodicity: Option<(i64, Option<PeriodicityCert<F>>)>,
    residue_summand: Option<bool>,
}

/// Syzygies larger than this are not searched for a residue-field summand.
const SUMMAND_SEARCH_DIM: usize = 512;

/// Computes derived functors over one algebra, memoising resolutions.
pub struct Engine<F: Field> {
    alg: Algebra<F>,
    settings: Settings,
    cache: Mutex<HashMap<u64, Arc<Mutex<Cached<F>>>>>,
    /// Homology dimensions already known exactly, per (X, Y, functor).
    known: Mutex<HashMap<(u64, u64, Functor), BTreeMap<i64, usize>>>,
}

fn fingerprint<F: Field>(x: &Complex<F>) -> u64 {
    let mut h = DefaultHasher::new();
    for (i, m) in x.entries() {
        i.hash(&mut h);
        m.dim().hash(&mut h);
        for a in m.actions() {
            a.entries().hash(&mut h);
        }
    }
    for (i, _) in x.entries() {
        let d = x.diff(*i);
        (i, d.rows(), d.cols()).hash(&mut h);
        d.entries().hash(&mut h);
    }
    h.finish()
}

fn homology_range<F: Field>(x: &Complex<F>) -> Option<(i64, i64)> {
    match (x.inf().finite(), x.sup().finite()) {
        (Some(a), Some(b)) => Some((a, b)),
        _ => None,
    }
}

impl<F: Field> Engine<F> {
    pub fn new(alg: &Algebra<F>, settings: Settings) -> Self {
        Engine { alg: alg.clone(), settings, cache: Mutex::new(HashMap::new()), known: Mutex::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn settings(&self) -> &Settings {
        &self.settings
    }

    pub fn window(&self) -> i64 {
        self.settings.window.unwrap_or(2 * self.alg.dim() as i64 + 4)
    }

    fn check(&self, x: &Complex<F>) -> Result<()> {
        if x.algebra().same(&self.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn entry(&self, x: &Complex<F>) -> Arc<Mutex<Cached<F>>> {
        let key = fingerprint(x);
        let mut cache = self.cache.lock().unwrap();
        cache
            .entry(key)
            .or_insert_with(|| {
                Arc::new(Mutex::new(Cached { res: Resolution::new(x, self.settings.budget), periodicity: None, residue_summand: None }))
            })
            .clone()
    }

    /// The cached resolution of X, extended (as far as the budget allows) to
    /// degree t.
    pub fn resolution(&self, x: &Complex<F>, t: i64) -> Resolution<F> {
        let e = self.entry(x);
        let mut g = e.lock().unwrap();
        let _ = g.res.extend_to(t);
        g.res.clone()
    }

    fn with_resolution<T>(&self, x: &Complex<F>, t: i64, f: impl FnOnce(&mut Cached<F>) -> T) -> T {
        let e = self.entry(x);
        let mut g = e.lock().unwrap();
        let _ = g.res.extend_to(t);
        f(&mut g)
    }

    fn periodicity(&self, c: &mut Cached<F>) -> Option<PeriodicityCert<F>> {
        let top = c.res.top();
        if let Some((t, p)) = &c.periodicity {
            if *t == top || p.is_some() {
                return p.clone();
            }
        }
        let p = detect_periodicity(&c.res, self.settings.seed);
        c.periodicity = Some((top, p.clone()));
        p
    }

    /// The residue field as a complex in degree 0.
    pub fn k(&self) -> Complex<F> {
        Complex::of_module(&FgModule::residue_field(&self.alg), 0)
    }

    /// Some(true) when F_{sup X + 1} = 0, which forces F_i = 0 above sup X.
    pub fn pd_finite(&self, x: &Complex<F>) -> Result<Option<bool>> {
        self.check(x)?;
        let Some((_, s)) = homology_range(x) else { return Ok(Some(true)) };
        Ok(self.with_resolution(x, s + 1, |c| (c.res.top() >= s + 1).then(|| c.res.rank(s + 1) == 0)))
    }

    /// Projective dimension when finite: the top nonzero degree of F.
    pub fn pd(&self, x: &Complex<F>) -> Result<Option<i64>> {
        if self.pd_finite(x)? != Some(true) {
            return Ok(None);
        }
        let (_, s) = homology_range(x).ok_or(Error::ZeroComplex)?;
        let res = self.resolution(x, s + 1);
        Ok(res.full_free().support().map(|(_, hi)| hi))
    }

    /// Some(true) when μ^{1 − inf Y}(Y) = 0, which forces a finite injective
    /// resolution ending in degree inf Y.
    pub fn id_finite(&self, y: &Complex<F>) -> Result<Option<bool>> {
        self.check(y)?;
        let Some((i, _)) = homology_range(y) else { return Ok(Some(true)) };
        let d = self.hom_raw(&self.k(), y, i - 1);
        Ok(d.dim_at(i - 1).map(|h| h == 0))
    }
}

/// Homology is a single copy of k^a in one degree.
fn residue_concentrated<F: Field>(y: &Complex<F>) -> bool {
    let nz: Vec<i64> = y.homology_dims().into_iter().filter(|(_, d)| *d > 0).map(|(i, _)| i).collect();
    nz.len() == 1 && y.homology(nz[0]).killed_by_m()
}

impl<F: Field> Engine<F> {
    /// Homology of Hom(F_{≤t}, Y) in the degrees where it equals RHom(X, Y),
    /// aiming for every degree ≥ `floor`. Only termination is used for the tail.
    fn hom_raw(&self, x: &Complex<F>, y: &Complex<F>, floor: i64) -> Derived {
        let (Some(_), Some(_)) = (homology_range(x), homology_range(y)) else {
            return Derived::zero(Functor::Hom);
        };
        let (ylo, yhi) = y.support().unwrap();
        let (xlo, _) = x.support().unwrap();
        let want = yhi - floor + 1;
        self.with_resolution(x, want, |c| {
            let done = c.res.terminated().is_some();
            let t = want.min(c.res.top());
            let fc = if done { c.res.full_free().clone() } else { c.res.free(t) };
            let hi = yhi - xlo;
            let lo = match (done, fc.support()) {
                (true, Some((_, fhi))) => ylo - fhi,
                (true, None) => hi + 1,
                (false, _) => yhi - t + 1,
            };
            let dims = self.known_dims((x, y, Functor::Hom), lo..=hi, |a, b| {
                hom_kcomplex(&fc, y, Some(a..=b + 1)).homology_dims_in(a..=b)
            });
            let (tail, certificate) = if done {
                (Tail::Vanishes { from: lo - 1 }, Certificate::Exact)
            } else {
                (Tail::Unknown, Certificate::UpToBound(-lo))
            };
            Derived { functor: Functor::Hom, dims, lo, hi, tail, certificate }
        })
    }

    /// Homology of F_{≤t} ⊗ Y where it equals X ⊗^L Y, aiming for every
    /// degree ≤ `ceil`.
    fn tensor_raw(&self, x: &Complex<F>, y: &Complex<F>, ceil: i64) -> Derived {
        let (Some(_), Some(_)) = (homology_range(x), homology_range(y)) else {
            return Derived::zero(Functor::Tensor);
        };
        let (ylo, yhi) = y.support().unwrap();
        let (xlo, _) = x.support().unwrap();
        let want = ceil - ylo + 1;
        self.with_resolution(x, want, |c| {
            let done = c.res.terminated().is_some();
            let t = want.min(c.res.top());
            let fc = if done { c.res.full_free().clone() } else { c.res.free(t) };
            let lo = xlo + ylo;
            let hi = match (done, fc.support()) {
                (true, Some((_, fhi))) => fhi + yhi,
                (true, None) => lo - 1,
                (false, _) => t + ylo - 1,
            };
            let dims = self.known_dims((x, y, Functor::Tensor), lo..=hi, |a, b| {
                tensor_kcomplex(&fc, y, Some(a..=b + 1)).homology_dims_in(a..=b)
            });
            let (tail, certificate) = if done {
                (Tail::Vanishes { from: hi + 1 }, Certificate::Exact)
            } else {
                (Tail::Unknown, Certificate::UpToBound(hi))
            };
            Derived { functor: Functor::Tensor, dims, lo, hi, tail, certificate }
        })
    }

    /// Homology dimensions over `range`, computing only the degrees not seen
    /// before for this pair. Every degree passed in must be exact.
    fn known_dims(
        &self,
        (x, y, functor): (&Complex<F>, &Complex<F>, Functor),
        range: std::ops::RangeInclusive<i64>,
        compute: impl FnOnce(i64, i64) -> BTreeMap<i64, usize>,
    ) -> BTreeMap<i64, usize> {
        if range.is_empty() {
            return BTreeMap::new();
        }
        let key = (fingerprint(x), fingerprint(y), functor);
        let mut known = self.known.lock().unwrap().get(&key).cloned().unwrap_or_default();
        let missing: Vec<i64> = range.clone().filter(|n| !known.contains_key(n)).collect();
        if let (Some(&a), Some(&b)) = (missing.first(), missing.last()) {
            known.extend(compute(a, b));
            self.known.lock().unwrap().insert(key, known.clone());
        }
        range.map(|n| (n, known[&n])).collect()
    }

    fn periodicity_of(&self, x: &Complex<F>) -> Option<PeriodicityCert<F>> {
        let e = self.entry(x);
        let mut g = e.lock().unwrap();
        self.periodicity(&mut g)
    }

    fn has_residue_summand(&self, x: &Complex<F>) -> bool {
        let e = self.entry(x);
        let mut g = e.lock().unwrap();
        if let Some(b) = g.residue_summand {
            return b;
        }
        let floor = g.res.syzygy_floor();
        let top = g.res.top().min(floor + self.window());
        let b = (floor..top)
            .filter(|&s| g.res.syzygy_dim(s).is_some_and(|d| d <= SUMMAND_SEARCH_DIM))
            .any(|s| g.res.residue_summand(s));
        g.residue_summand = Some(b);
        b
    }

    /// RHom(X, Y) through the default window: degrees ≥ inf Y − sup X − window.
    pub fn rhom(&self, x: &Complex<F>, y: &Complex<F>) -> Result<Derived> {
        let floor = match (homology_range(x), homology_range(y)) {
            (Some((_, sx)), Some((iy, _))) => iy - sx - self.window(),
            _ => 0,
        };
        self.rhom_to(x, y, floor)
    }

    /// RHom(X, Y) aiming for every degree ≥ `floor`, with the tail analysed.
    pub fn rhom_to(&self, x: &Complex<F>, y: &Complex<F>, floor: i64) -> Result<Derived> {
        self.check(x)?;
        self.check(y)?;
        let d = self.hom_raw(x, y, floor);
        let (Some((_, sx)), Some((iy, _))) = (homology_range(x), homology_range(y)) else {
            return Ok(d);
        };
        if matches!(d.tail, Tail::Vanishes { .. }) {
            return Ok(d);
        }
        let (ylo, yhi) = y.support().unwrap();
        let (_, xhi) = x.support().unwrap();
        let pd_x = self.pd_finite(x)?;
        if pd_x == Some(true) {
            // F stops by degree max(hi X, sup X + 1).
            return Ok(self.hom_raw(x, y, floor.min(yhi - xhi.max(sx + 1))));
        }
        if self.id_finite(y)? == Some(true) {
            let edge = iy - sx;
            let mut d = self.hom_raw(x, y, floor.min(edge));
            d.tail = Tail::Vanishes { from: edge - 1 };
            if d.lo > edge {
                d.certificate = Certificate::UpToBound(-d.lo);
            } else {
                d.certificate = Certificate::Exact;
            }
            return Ok(d);
        }
        if let Some(pc) = self.periodicity_of(x) {
            let (s, p, c) = (pc.start, pc.period, pc.multiplicity);
            let m0 = ylo - s - p - 1;
            let block = m0 - p + 1;
            let mut d = self.hom_raw(x, y, floor.min(block));
            if d.lo <= block {
                let cert = Certificate::Periodic { start: s, period: p, multiplicity: c };
                d.certificate = cert;
                d.tail = if (block..=m0).all(|n| d.dims.get(&n).copied().unwrap_or(0) == 0) {
                    Tail::Vanishes { from: m0 }
                } else {
                    Tail::Recurrence { from: m0, period: p, multiplicity: c }
                };
                return Ok(d);
            }
        }
        let mut d = d;
        if pd_x == Some(false)
            && (residue_concentrated(y) || (self.id_finite(y)? == Some(false) && self.has_residue_summand(x)))
        {
            d.tail = Tail::Unbounded;
        }
        Ok(d)
    }

    /// X ⊗^L Y through the default window: degrees ≤ sup X + sup Y + window.
    pub fn dtensor(&self, x: &Complex<F>, y: &Complex<F>) -> Result<Derived> {
        let ceil = match (homology_range(x), homology_range(y)) {
            (Some((_, sx)), Some((_, sy))) => sx + sy + self.window(),
            _ => 0,
        };
        self.dtensor_to(x, y, ceil)
    }

    /// X ⊗^L Y aiming for every degree ≤ `ceil`, with the tail analysed.
    pub fn dtensor_to(&self, x: &Complex<F>, y: &Complex<F>, ceil: i64) -> Result<Derived> {
        self.check(x)?;
        self.check(y)?;
        let d = self.tensor_raw(x, y, ceil);
        let (Some((_, sx)), Some(_)) = (homology_range(x), homology_range(y)) else {
            return Ok(d);
        };
        if matches!(d.tail, Tail::Vanishes { .. }) {
            return Ok(d);
        }
        let (ylo, yhi) = y.support().unwrap();
        let (_, xhi) = x.support().unwrap();
        let pd_x = self.pd_finite(x)?;
        if pd_x == Some(true) {
            return Ok(self.tensor_raw(x, y, ceil.max(xhi.max(sx + 1) + ylo)));
        }
        let pd_y = self.pd_finite(y)?;
        if pd_y == Some(true) {
            if let Some(p) = self.pd(y)? {
                let edge = sx + p;
                let mut d = self.tensor_raw(x, y, ceil.max(edge));
                d.tail = Tail::Vanishes { from: edge + 1 };
                d.certificate = if d.hi >= edge { Certificate::Exact } else { Certificate::UpToBound(d.hi) };
                return Ok(d);
            }
        }
        if let Some(pc) = self.periodicity_of(x) {
            let (s, p, c) = (pc.start, pc.period, pc.multiplicity);
            let n0 = s + p + 1 + yhi;
            let block = n0 - p;
            let mut d = self.tensor_raw(x, y, ceil.max(n0 - 1));
            if d.hi >= n0 - 1 {
                d.certificate = Certificate::Periodic { start: s, period: p, multiplicity: c };
                d.tail = if (block..n0).all(|n| d.dims.get(&n).copied().unwrap_or(0) == 0) {
                    Tail::Vanishes { from: block }
                } else {
                    Tail::Recurrence { from: n0, period: p, multiplicity: c }
                };
                return Ok(d);
            }
        }
        let mut d = d;
        if pd_x == Some(false)
            && (residue_concentrated(y) || (pd_y == Some(false) && self.has_residue_summand(x)))
        {
            d.tail = Tail::Unbounded;
        }
        Ok(d)
    }
}

/// The numerical invariants of a complex with nonzero homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedInvariants {
    pub inf: i64,
    pub sup: i64,
    pub amp: i64,
    pub depth: i64,
    pub kdim: i64,
    pub type_: usize,
    /// μ^i for the certified part of 0..=window.
    pub bass: BTreeMap<i64, usize>,
    pub bass_certificate: Certificate,
    /// β_i for the certified part of 0..=window.
    pub betti: BTreeMap<i64, usize>,
    pub betti_certificate: Certificate,
    pub cm: bool,
}

/// A sequence of Bass or Betti numbers with its guarantee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numbers {
    pub values: BTreeMap<i64, usize>,
    pub certificate: Certificate,
}

impl<F: Field> Engine<F> {
    fn nonzero(&self, x: &Complex<F>) -> Result<(i64, i64)> {
        self.check(x)?;
        homology_range(x).ok_or(Error::ZeroComplex)
    }

    /// sup RHom(k, X) and the dimension of Ext there. The sup lies in
    /// [inf X, sup X] since −sup X ≤ depth X ≤ dim X = −inf X.
    fn depth_and_type(&self, x: &Complex<F>) -> Result<(i64, usize)> {
        let (ix, sx) = self.nonzero(x)?;
        let d = self.hom_raw(&self.k(), x, ix);
        for n in (ix..=sx).rev() {
            match d.dim_at(n) {
                Some(0) => continue,
                Some(h) => return Ok((-n, h)),
                None => {
                    return Err(Error::WindowExceeded { requested: -n, limit: match d.certificate {
                        Certificate::UpToBound(b) => b,
                        _ => -d.lo,
                    } })
                }
            }
        }
        Err(Error::InvalidComplex("Ext(k, X) vanishes between inf X and sup X".into()))
    }

    /// depth X = −sup RHom(k, X).
    pub fn depth(&self, x: &Complex<F>) -> Result<i64> {
        Ok(self.depth_and_type(x)?.0)
    }

    /// Krull dimension; −inf X over an Artinian ring.
    pub fn kdim(&self, x: &Complex<F>) -> Result<i64> {
        Ok(-self.nonzero(x)?.0)
    }

    /// μ^{depth X}(X).
    pub fn type_of(&self, x: &Complex<F>) -> Result<usize> {
        Ok(self.depth_and_type(x)?.1)
    }

    pub fn is_cohen_macaulay(&self, x: &Complex<F>) -> Result<bool> {
        Ok(self.depth(x)? == self.kdim(x)?)
    }

    /// μ^i(X) = dim Ext^i(k, X) for i in the range.
    pub fn bass_numbers(&self, x: &Complex<F>, range: std::ops::RangeInclusive<i64>) -> Result<Numbers> {
        self.nonzero(x)?;
        let d = self.rhom_to(&self.k(), x, -*range.end())?;
        collect(&d, range, |d, i| d.ext(i), |i| -i)
    }

    /// β_i(X) = dim Tor_i(k, X) for i in the range.
    pub fn betti_numbers(&self, x: &Complex<F>, range: std::ops::RangeInclusive<i64>) -> Result<Numbers> {
        self.nonzero(x)?;
        let d = self.dtensor_to(&self.k(), x, *range.end())?;
        collect(&d, range, |d, i| d.tor(i), |i| i)
    }

    /// Everything at once; Bass and Betti numbers are reported as far as
    /// they are certified inside 0..=window.
    pub fn invariants(&self, x: &Complex<F>) -> Result<DerivedInvariants> {
        let (inf, sup) = self.nonzero(x)?;
        let (depth, type_) = self.depth_and_type(x)?;
        let kdim = -inf;
        let w = self.window();
        let bass_d = self.rhom_to(&self.k(), x, -w)?;
        let betti_d = self.dtensor_to(&self.k(), x, w)?;
        let known = |d: &Derived, f: &dyn Fn(&Derived, i64) -> Option<usize>| -> BTreeMap<i64, usize> {
            (0..=w).map_while(|i| f(d, i).map(|v| (i, v))).collect()
        };
        Ok(DerivedInvariants {
            inf,
            sup,
            amp: sup - inf,
            depth,
            kdim,
            type_,
            bass: known(&bass_d, &|d, i| d.ext(i)),
            bass_certificate: bass_d.certificate,
            betti: known(&betti_d, &|d, i| d.tor(i)),
            betti_certificate: betti_d.certificate,
            cm: depth == kdim,
        })
    }
}

fn collect(
    d: &Derived,
    range: std::ops::RangeInclusive<i64>,
    get: impl Fn(&Derived, i64) -> Option<usize>,
    degree: impl Fn(i64) -> i64,
) -> Result<Numbers> {
    let mut values = BTreeMap::new();
    let direct = range.clone().all(|i| d.computed(degree(i)));
    for i in range {
        match get(d, i) {
            Some(v) => {
                values.insert(i, v);
            }
            None => {
                let limit = match d.certificate {
                    Certificate::UpToBound(b) => b,
                    _ => i - 1,
                };
                return Err(Error::WindowExceeded { requested: i, limit });
            }
        }
    }
    let certificate = if direct { Certificate::Exact } else { d.certificate };
    Ok(Numbers { values, certificate })
}
