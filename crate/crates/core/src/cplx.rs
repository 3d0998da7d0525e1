//! Bounded chain complexes of modules, free complexes, and k-linear shadows.
//!
//! Grading is homological: ∂_i maps degree i to degree i − 1. The n-fold shift
//! Σⁿ moves X_i to degree i + n and multiplies differentials by (−1)ⁿ. The Hom
//! complex uses ∂f = ∂∘f − (−1)ⁿ f∘∂ and tensor products use Koszul signs,
//! so that Hom(F, ΣⁿY) = Σⁿ Hom(F, Y) and ΣⁿF ⊗ Y = Σⁿ(F ⊗ Y) hold on the nose.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use crate::algebra::{Algebra, Vector};
use crate::exact::{Field, Mat};
use crate::fgmod::FgModule;
use crate::{Error, Result};

/// Integers extended by ±∞, used for inf/sup of possibly zero homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Fin(v) => write!(f, "{v}"),
            ExtInt::PosInf => write!(f, "+inf"),
        }
    }
}

pub(crate) fn sign<F: Field>(f: &F, n: i64) -> F::Elem {
    if n.rem_euclid(2) == 0 {
        f.one()
    } else {
        f.neg(&f.one())
    }
}

/// A bounded complex of finitely generated modules.
#[derive(Clone, Debug)]
pub struct Complex<F: Field> {
    alg: Algebra<F>,
    entries: BTreeMap<i64, FgModule<F>>,
    /// `diffs[i]`: X_i → X_{i−1}; present only when both ends are nonzero.
    diffs: BTreeMap<i64, Mat<F>>,
}

impl<F: Field> Complex<F> {
    /// Validates shapes, R-linearity of each differential, and ∂² = 0.
    pub fn new(
        alg: &Algebra<F>,
        entries: BTreeMap<i64, FgModule<F>>,
        diffs: BTreeMap<i64, Mat<F>>,
    ) -> Result<Self> {
        let c = Self::unchecked(alg, entries, diffs);
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn unchecked(
        alg: &Algebra<F>,
        entries: BTreeMap<i64, FgModule<F>>,
        diffs: BTreeMap<i64, Mat<F>>,
    ) -> Self {
        let entries: BTreeMap<i64, FgModule<F>> = entries.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        let diffs = diffs
            .into_iter()
            .filter(|(i, _)| entries.contains_key(i) && entries.contains_key(&(i - 1)))
            .collect();
        Complex { alg: alg.clone(), entries, diffs }
    }

    pub fn validate(&self) -> Result<()> {
        for (i, m) in &self.entries {
            if !m.algebra().same(&self.alg) {
                return Err(Error::AlgebraMismatch);
            }
            if let Some(d) = self.diffs.get(i) {
                let tgt = &self.entries[&(i - 1)];
                if d.rows() != tgt.dim() || d.cols() != m.dim() {
                    return Err(Error::InvalidComplex(format!("differential in degree {i} has the wrong shape")));
                }
                for (a, b) in m.actions().iter().zip(tgt.actions()) {
                    if d.mul(a) != b.mul(d) {
                        return Err(Error::InvalidComplex(format!("differential in degree {i} is not R-linear")));
                    }
                }
            }
        }
        for (i, d) in &self.diffs {
            if let Some(d2) = self.diffs.get(&(i - 1)) {
                if !d2.mul(d).is_zero() {
                    return Err(Error::InvalidComplex(format!("∂∘∂ ≠ 0 from degree {i}")));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Algebra<F>) -> Self {
        Complex { alg: alg.clone(), entries: BTreeMap::new(), diffs: BTreeMap::new() }
    }

    /// M concentrated in degree n.
    pub fn of_module(m: &FgModule<F>, n: i64) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(n, m.clone());
        Self::unchecked(m.algebra(), entries, BTreeMap::new())
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn field(&self) -> &F {
        self.alg.field()
    }

    pub fn entries(&self) -> &BTreeMap<i64, FgModule<F>> {
        &self.entries
    }

    pub fn entry(&self, i: i64) -> Option<&FgModule<F>> {
        self.entries.get(&i)
    }

    pub fn dim_at(&self, i: i64) -> usize {
        self.entries.get(&i).map(|m| m.dim()).unwrap_or(0)
    }

    /// ∂_i as a (possibly empty) matrix.
    pub fn diff(&self, i: i64) -> Mat<F> {
        self.diffs
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(self.field(), self.dim_at(i - 1), self.dim_at(i)))
    }

    /// Lowest and highest nonzero entry.
    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.entries.keys().next()?, *self.entries.keys().next_back()?))
    }

    pub fn shift(&self, n: i64) -> Self {
        let f = self.field();
        let s = sign(f, n);
        Complex {
            alg: self.alg.clone(),
            entries: self.entries.iter().map(|(i, m)| (i + n, m.clone())).collect(),
            diffs: self.diffs.iter().map(|(i, d)| (i + n, d.scaled(&s))).collect(),
        }
    }

    /// Degreewise direct sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !self.alg.same(&other.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let degrees: std::collections::BTreeSet<i64> =
            self.entries.keys().chain(other.entries.keys()).copied().collect();
        let zero = FgModule::zero(&self.alg);
        let mut entries = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        for &i in &degrees {
            let a = self.entries.get(&i).unwrap_or(&zero);
            let b = other.entries.get(&i).unwrap_or(&zero);
            entries.insert(i, FgModule::direct_sum(&[a.clone(), b.clone()])?);
            diffs.insert(i, self.diff(i).direct_sum(&other.diff(i)));
        }
        Ok(Self::unchecked(&self.alg, entries, diffs))
    }

    pub fn to_k(&self) -> KComplex<F> {
        KComplex {
            field: self.field().clone(),
            dims: self.entries.iter().map(|(i, m)| (*i, m.dim())).collect(),
            diffs: self.diffs.clone(),
        }
    }

    pub fn homology_dims(&self) -> BTreeMap<i64, usize> {
        self.to_k().homology_dims()
    }

    /// H_i with its module structure.
    pub fn homology(&self, i: i64) -> FgModule<F> {
        let Some(m) = self.entries.get(&i) else {
            return FgModule::zero(&self.alg);
        };
        let ker = self.diff(i).kernel_vectors();
        let (z, incl) = m.submodule(&ker).expect("kernels are submodules");
        let img = self.diff(i + 1).columns();
        let img_in_z: Vec<Vector<F>> = if img.is_empty() || z.dim() == 0 {
            Vec::new()
        } else {
            let rhs = Mat::from_cols(self.field(), m.dim(), &img);
            incl.solve_many(&rhs).expect("shape").expect("boundaries are cycles").columns()
        };
        z.quotient(&img_in_z).0
    }

    pub fn inf(&self) -> ExtInt {
        self.to_k().inf()
    }

    pub fn sup(&self) -> ExtInt {
        self.to_k().sup()
    }

    /// sup − inf; −∞ for exact complexes.
    pub fn amp(&self) -> ExtInt {
        match (self.inf(), self.sup()) {
            (ExtInt::Fin(a), ExtInt::Fin(b)) => ExtInt::Fin(b - a),
            _ => ExtInt::NegInf,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.homology_dims().values().all(|&d| d == 0)
    }

    /// Mapping cone: C_n = X_{n−1} ⊕ Y_n, d(x, y) = (−∂x, f(x) + ∂y).
    pub fn cone(f: &ChainMap<F>) -> Self {
        let (x, y) = (&f.source, &f.target);
        let fld = x.field();
        let alg = &x.alg;
        let mut degrees: Vec<i64> = x.entries.keys().map(|i| i + 1).chain(y.entries.keys().copied()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut entries = BTreeMap::new();
        for &n in &degrees {
            let parts: Vec<FgModule<F>> =
                [x.entry(n - 1), y.entry(n)].into_iter().flatten().cloned().collect();
            if !parts.is_empty() {
                entries.insert(n, FgModule::direct_sum(&parts).expect("same algebra"));
            }
        }
        let mut diffs = BTreeMap::new();
        for &n in &degrees {
            let (xs, ys) = (x.dim_at(n - 1), y.dim_at(n));
            let (xt, yt) = (x.dim_at(n - 2), y.dim_at(n - 1));
            if xs + ys == 0 || xt + yt == 0 {
                continue;
            }
            let mut d = Mat::zeros(fld, xt + yt, xs + ys);
            d.set_block(0, 0, &x.diff(n - 1).scaled(&fld.neg(&fld.one())));
            d.set_block(xt, 0, &f.component(n - 1));
            d.set_block(xt, xs, &y.diff(n));
            diffs.insert(n, d);
        }
        Self::unchecked(alg, entries, diffs)
    }

    /// Quotient truncation τ_{≤b}: degrees < b kept, X_b / ∂(X_{b+1}) in degree b.
    /// Returns the truncation and the projection X → τ_{≤b}X.
    pub fn truncate_above(&self, b: i64) -> (Self, ChainMap<F>) {
        let mut entries = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        let mut comps = BTreeMap::new();
        for (&i, m) in self.entries.range(..b) {
            entries.insert(i, m.clone());
            comps.insert(i, Mat::identity(self.field(), m.dim()));
            if let Some(d) = self.diffs.get(&i) {
                diffs.insert(i, d.clone());
            }
        }
        if let Some(m) = self.entries.get(&b) {
            let (q, proj) = m.quotient(&self.diff(b + 1).columns());
            if let Some(d) = self.diffs.get(&b) {
                // ∂_b factors through the quotient; lift by the standard section.
                let lift = proj.solve_many(&Mat::identity(self.field(), q.dim())).unwrap().unwrap();
                diffs.insert(b, d.mul(&lift));
            }
            comps.insert(b, proj);
            entries.insert(b, q);
        }
        let t = Self::unchecked(&self.alg, entries, diffs);
        let map = ChainMap { source: self.clone(), target: t.clone(), comps };
        (t, map)
    }

    /// Kernel truncation τ_{≥a}: degrees > a kept, cycles Z_a in degree a.
    /// Returns the truncation and the inclusion τ_{≥a}X → X.
    pub fn truncate_below(&self, a: i64) -> (Self, ChainMap<F>) {
        let mut entries = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        let mut comps = BTreeMap::new();
        for (&i, m) in self.entries.range(a + 1..) {
            entries.insert(i, m.clone());
            comps.insert(i, Mat::identity(self.field(), m.dim()));
            if i > a + 1 {
                if let Some(d) = self.diffs.get(&i) {
                    diffs.insert(i, d.clone());
                }
            }
        }
        if let Some(m) = self.entries.get(&a) {
            let (z, incl) = m.submodule(&self.diff(a).kernel_vectors()).expect("cycles form a submodule");
            if let Some(d) = self.diffs.get(&(a + 1)) {
                if z.dim() > 0 {
                    let sol = incl.solve_many(d).unwrap().expect("boundaries are cycles");
                    diffs.insert(a + 1, sol);
                }
            }
            comps.insert(a, incl);
            entries.insert(a, z);
        }
        let t = Self::unchecked(&self.alg, entries, diffs);
        let map = ChainMap { source: t.clone(), target: self.clone(), comps };
        (t, map)
    }
}

/// A chain map; absent components are zero.
#[derive(Clone, Debug)]
pub struct ChainMap<F: Field> {
    pub source: Complex<F>,
    pub target: Complex<F>,
    pub comps: BTreeMap<i64, Mat<F>>,
}

impl<F: Field> ChainMap<F> {
    pub fn new(source: &Complex<F>, target: &Complex<F>, comps: BTreeMap<i64, Mat<F>>) -> Result<Self> {
        let m = ChainMap { source: source.clone(), target: target.clone(), comps };
        m.validate()?;
        Ok(m)
    }

    pub fn identity(x: &Complex<F>) -> Self {
        let comps = x.entries.iter().map(|(i, m)| (*i, Mat::identity(x.field(), m.dim()))).collect();
        ChainMap { source: x.clone(), target: x.clone(), comps }
    }

    pub fn zero(source: &Complex<F>, target: &Complex<F>) -> Self {
        ChainMap { source: source.clone(), target: target.clone(), comps: BTreeMap::new() }
    }

    pub fn component(&self, i: i64) -> Mat<F> {
        self.comps
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(self.source.field(), self.target.dim_at(i), self.source.dim_at(i)))
    }

    /// Checks shapes, R-linearity, and ∂f = f∂.
    pub fn validate(&self) -> Result<()> {
        let (x, y) = (&self.source, &self.target);
        let mut degrees: Vec<i64> = x.entries.keys().copied().collect();
        degrees.extend(y.entries.keys().copied());
        degrees.sort_unstable();
        degrees.dedup();
        for &i in &degrees {
            let f = self.component(i);
            if f.rows() != y.dim_at(i) || f.cols() != x.dim_at(i) {
                return Err(Error::InvalidComplex(format!("chain map component {i} has the wrong shape")));
            }
            if let (Some(a), Some(b)) = (x.entry(i), y.entry(i)) {
                for (s, t) in a.actions().iter().zip(b.actions()) {
                    if f.mul(s) != t.mul(&f) {
                        return Err(Error::InvalidComplex(format!("chain map component {i} is not R-linear")));
                    }
                }
            }
            let lhs = y.diff(i).mul(&f);
            let rhs = self.component(i - 1).mul(&x.diff(i));
            if lhs != rhs {
                return Err(Error::InvalidComplex(format!("chain map does not commute in degree {i}")));
            }
        }
        Ok(())
    }

    pub fn is_quasi_iso(&self) -> bool {
        Complex::cone(self).is_exact()
    }
}

/// A degreewise free complex: `diffs[i]` lists, for each basis element of F_i,
/// its image in F_{i−1} = R^{r_{i−1}} as a stacked coordinate vector.
#[derive(Clone, Debug)]
pub struct FreeComplex<F: Field> {
    pub alg: Algebra<F>,
    pub ranks: BTreeMap<i64, usize>,
    pub diffs: BTreeMap<i64, Vec<Vector<F>>>,
}

impl<F: Field> FreeComplex<F> {
    pub fn new(alg: &Algebra<F>) -> Self {
        FreeComplex { alg: alg.clone(), ranks: BTreeMap::new(), diffs: BTreeMap::new() }
    }

    pub fn rank(&self, i: i64) -> usize {
        self.ranks.get(&i).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        let mut it = self.ranks.iter().filter(|(_, &r)| r > 0).map(|(i, _)| *i);
        let lo = it.next()?;
        let hi = it.last().unwrap_or(lo);
        Some((lo, hi))
    }

    /// Ring element at row d, column c of ∂_i.
    pub fn entry(&self, i: i64, d: usize, c: usize) -> &[F::Elem] {
        let n = self.alg.dim();
        &self.diffs[&i][c][d * n..(d + 1) * n]
    }

    /// The k-matrix of ∂_i: R^{r_i} → R^{r_{i−1}}.
    pub fn k_diff(&self, i: i64) -> Mat<F> {
        let f = self.alg.field();
        let n = self.alg.dim();
        let (rs, rt) = (self.rank(i), self.rank(i - 1));
        let mut m = Mat::zeros(f, rt * n, rs * n);
        if rs == 0 || rt == 0 {
            return m;
        }
        for (c, col) in self.diffs[&i].iter().enumerate() {
            for t in 0..n {
                let img = mul_blocks(&self.alg, t, col);
                for (row, e) in img.into_iter().enumerate() {
                    m.set(row, c * n + t, e);
                }
            }
        }
        m
    }

    /// Brutal truncation to degrees ≤ t.
    pub fn truncated(&self, t: i64) -> Self {
        FreeComplex {
            alg: self.alg.clone(),
            ranks: self.ranks.range(..=t).map(|(a, b)| (*a, *b)).collect(),
            diffs: self.diffs.range(..=t).map(|(a, b)| (*a, b.clone())).collect(),
        }
    }

    pub fn shift(&self, n: i64) -> Self {
        let f = self.alg.field();
        let s = sign(f, n);
        FreeComplex {
            alg: self.alg.clone(),
            ranks: self.ranks.iter().map(|(i, r)| (i + n, *r)).collect(),
            diffs: self
                .diffs
                .iter()
                .map(|(i, cols)| {
                    let cols = cols
                        .iter()
                        .map(|c| {
                            let mut c = c.clone();
                            f.scale(&mut c, &s);
                            c
                        })
                        .collect();
                    (i + n, cols)
                })
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Complex<F> {
        let entries = self
            .ranks
            .iter()
            .filter(|(_, &r)| r > 0)
            .map(|(i, &r)| (*i, FgModule::free(&self.alg, r)))
            .collect();
        let diffs = self.ranks.keys().map(|&i| (i, self.k_diff(i))).collect();
        Complex::unchecked(&self.alg, entries, diffs)
    }
}

/// Multiplies every R-block of a stacked vector by the t-th basis element.
pub(crate) fn mul_blocks<F: Field>(alg: &Algebra<F>, t: usize, v: &[F::Elem]) -> Vector<F> {
    let n = alg.dim();
    let l = alg.lmul(t);
    let mut out = Vec::with_capacity(v.len());
    for blk in v.chunks(n) {
        out.extend(l.mul_vec(blk));
    }
    out
}

/// A complex of k-vector spaces; used where only ranks matter.
#[derive(Clone, Debug)]
pub struct KComplex<F: Field> {
    pub field: F,
    pub dims: BTreeMap<i64, usize>,
    pub diffs: BTreeMap<i64, Mat<F>>,
}

impl<F: Field> KComplex<F> {
    pub fn dim_at(&self, i: i64) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn diff(&self, i: i64) -> Mat<F> {
        self.diffs
            .get(&i)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(&self.field, self.dim_at(i - 1), self.dim_at(i)))
    }

    fn diff_rank(&self, i: i64) -> usize {
        match self.diffs.get(&i) {
            Some(d) => d.rank(),
            None => 0,
        }
    }

    pub fn homology_dim(&self, i: i64) -> usize {
        let d = self.dim_at(i);
        if d == 0 {
            return 0;
        }
        d - self.diff_rank(i) - self.diff_rank(i + 1)
    }

    pub fn homology_dims(&self) -> BTreeMap<i64, usize> {
        match (self.dims.keys().next(), self.dims.keys().next_back()) {
            (Some(&lo), Some(&hi)) => self.homology_dims_in(lo..=hi),
            _ => BTreeMap::new(),
        }
    }

    /// Homology dimensions over a range, ranking each differential once.
    pub fn homology_dims_in(&self, range: std::ops::RangeInclusive<i64>) -> BTreeMap<i64, usize> {
        let (lo, hi) = (*range.start(), *range.end());
        if lo > hi {
            return BTreeMap::new();
        }
        let ranks: BTreeMap<i64, usize> = self.diffs.range(lo..=hi + 1).map(|(&i, d)| (i, d.rank())).collect();
        let rank = |i: i64| ranks.get(&i).copied().unwrap_or(0);
        range.map(|i| (i, self.dim_at(i).saturating_sub(rank(i) + rank(i + 1)))).collect()
    }

    pub fn inf(&self) -> ExtInt {
        self.homology_dims()
            .into_iter()
            .find(|(_, d)| *d > 0)
            .map(|(i, _)| ExtInt::Fin(i))
            .unwrap_or(ExtInt::PosInf)
    }

    pub fn sup(&self) -> ExtInt {
        self.homology_dims()
            .into_iter()
            .rev()
            .find(|(_, d)| *d > 0)
            .map(|(i, _)| ExtInt::Fin(i))
            .unwrap_or(ExtInt::NegInf)
    }

    pub fn is_valid(&self) -> bool {
        self.diffs.iter().all(|(i, d)| match self.diffs.get(&(i - 1)) {
            Some(d2) => d2.mul(d).is_zero(),
            None => true,
        })
    }
}

/// Homology dimensions of the cone of a k-linear chain map `comps`: src → tgt,
/// in the given degrees.
pub fn cone_homology_dims<F: Field>(
    src: &KComplex<F>,
    tgt: &KComplex<F>,
    comps: &BTreeMap<i64, Mat<F>>,
    degrees: RangeInclusive<i64>,
) -> BTreeMap<i64, usize> {
    let f = &src.field;
    let cone_diff = |n: i64| -> Mat<F> {
        let (xs, ys) = (src.dim_at(n - 1), tgt.dim_at(n));
        let (xt, yt) = (src.dim_at(n - 2), tgt.dim_at(n - 1));
        let mut d = Mat::zeros(f, xt + yt, xs + ys);
        if xs + ys == 0 || xt + yt == 0 {
            return d;
        }
        d.set_block(0, 0, &src.diff(n - 1).scaled(&f.neg(&f.one())));
        let phi = comps.get(&(n - 1)).cloned().unwrap_or_else(|| Mat::zeros(f, yt, xs));
        d.set_block(xt, 0, &phi);
        d.set_block(xt, xs, &tgt.diff(n));
        d
    };
    let mut ranks = BTreeMap::new();
    let mut rank_at = |n: i64| -> usize { *ranks.entry(n).or_insert_with(|| cone_diff(n).rank()) };
    let mut out = BTreeMap::new();
    for n in degrees {
        let dim = src.dim_at(n - 1) + tgt.dim_at(n);
        let h = if dim == 0 { 0 } else { dim - rank_at(n) - rank_at(n + 1) };
        out.insert(n, h);
    }
    out
}

/// Which degrees of a Hom or tensor complex to build.
fn collect_degrees(lo: i64, hi: i64, only: Option<&RangeInclusive<i64>>) -> Vec<i64> {
    (lo..=hi).filter(|n| only.map_or(true, |r| r.contains(n))).collect()
}

pub(crate) struct Blocks {
    /// (free degree i, companion degree j, offset, rank, dim Y_j)
    pub(crate) parts: Vec<(i64, i64, usize, usize, usize)>,
    pub(crate) total: usize,
}

/// Hom(F, Y) with F free: Hom_n = ⊕_i Y_{i+n}^{r_i}. Only degrees in `only` are
/// built when given; the differential out of each built degree is included.
pub fn hom_kcomplex<F: Field>(
    fc: &FreeComplex<F>,
    y: &Complex<F>,
    only: Option<RangeInclusive<i64>>,
) -> KComplex<F> {
    build_hom(fc, y, only.as_ref(), false).0
}

/// Hom(F, Y) with module structure.
pub fn hom_complex<F: Field>(fc: &FreeComplex<F>, y: &Complex<F>) -> Complex<F> {
    let (k, mods) = build_hom(fc, y, None, true);
    Complex::unchecked(&fc.alg, mods.into_iter().collect(), k.diffs)
}

/// Hom(F, Y) with module structure, restricted to the given degrees.
pub fn hom_complex_in<F: Field>(fc: &FreeComplex<F>, y: &Complex<F>, only: RangeInclusive<i64>) -> Complex<F> {
    let (k, mods) = build_hom(fc, y, Some(&only), true);
    let diffs = k.diffs.into_iter().filter(|(n, _)| *n > *only.start()).collect();
    Complex::unchecked(&fc.alg, mods.into_iter().collect(), diffs)
}

pub(crate) fn hom_layout<F: Field>(fc: &FreeComplex<F>, y: &Complex<F>, n: i64) -> Blocks {
    let mut parts = Vec::new();
    let mut off = 0;
    for (&i, &r) in &fc.ranks {
        let d = y.dim_at(i + n);
        if r > 0 && d > 0 {
            parts.push((i, i + n, off, r, d));
            off += r * d;
        }
    }
    Blocks { parts, total: off }
}

fn build_hom<F: Field>(
    fc: &FreeComplex<F>,
    y: &Complex<F>,
    only: Option<&RangeInclusive<i64>>,
    with_modules: bool,
) -> (KComplex<F>, BTreeMap<i64, FgModule<F>>) {
    let f = fc.alg.field();
    let mut dims = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    let mut mods = BTreeMap::new();
    let (Some((flo, fhi)), Some((ylo, yhi))) = (fc.support(), y.support()) else {
        return (KComplex { field: f.clone(), dims, diffs }, mods);
    };
    for n in collect_degrees(ylo - fhi, yhi - flo, only) {
        let src = hom_layout(fc, y, n);
        if src.total == 0 {
            continue;
        }
        dims.insert(n, src.total);
        if with_modules {
            let parts: Vec<FgModule<F>> =
                src.parts.iter().map(|&(_, j, _, r, _)| y.entry(j).unwrap().power(r)).collect();
            mods.insert(n, FgModule::direct_sum(&parts).unwrap());
        }
        let tgt = hom_layout(fc, y, n - 1);
        if tgt.total == 0 {
            continue;
        }
        let mut d = Mat::zeros(f, tgt.total, src.total);
        let eps = f.neg(&sign(f, n));
        for &(i, j, so, r, dy) in &src.parts {
            // ∂_Y ∘ f_i, into block (i, j − 1).
            if let Some(&(_, _, to, _, dt)) = tgt.parts.iter().find(|p| p.0 == i) {
                let dyj = y.diff(j);
                for c in 0..r {
                    d.set_block(to + c * dt, so + c * dy, &dyj);
                }
            }
            // −(−1)ⁿ f_i ∘ ∂_{i+1}, into block (i + 1, j).
            if let Some(&(_, _, to, r2, dt)) = tgt.parts.iter().find(|p| p.0 == i + 1) {
                let ym = y.entry(j).unwrap();
                debug_assert_eq!(dt, dy);
                for c in 0..r2 {
                    for dd in 0..r {
                        let a = fc.entry(i + 1, dd, c);
                        if a.iter().all(|e| f.is_zero(e)) {
                            continue;
                        }
                        let blk = ym.act_matrix(a).scaled(&eps);
                        d.set_block(to + c * dt, so + dd * dy, &blk);
                    }
                }
            }
        }
        diffs.insert(n, d);
    }
    (KComplex { field: f.clone(), dims, diffs }, mods)
}

pub(crate) fn tensor_layout<F: Field>(fc: &FreeComplex<F>, y: &Complex<F>, n: i64) -> Blocks {
    let mut parts = Vec::new();
    let mut off = 0;
    for (&i, &r) in &fc.ranks {
        let d = y.dim_at(n - i);
        if r > 0 && d > 0 {
            parts.push((i, n - i, off, r, d));
            off += r * d;
        }
    }
    Blocks { parts, total: off }
}

/// F ⊗ Y with F free: (F ⊗ Y)_n = ⊕_i Y_{n−i}^{r_i}.
pub fn tensor_kcomplex<F: Field>(
    fc: &FreeComplex<F>,
    y: &Complex<F>,
    only: Option<RangeInclusive<i64>>,
) -> KComplex<F> {
    build_tensor(fc, y, only.as_ref(), false).0
}

/// F ⊗ Y with module structure.
pub fn tensor_complex<F: Field>(fc: &FreeComplex<F>, y: &Complex<F>) -> Complex<F> {
    let (k, mods) = build_tensor(fc, y, None, true);
    Complex::unchecked(&fc.alg, mods.into_iter().collect(), k.diffs)
}

/// F ⊗ Y with module structure, restricted to the given degrees.
pub fn tensor_complex_in<F: Field>(fc: &FreeComplex<F>, y: &Complex<F>, only: RangeInclusive<i64>) -> Complex<F> {
    let (k, mods) = build_tensor(fc, y, Some(&only), true);
    let diffs = k.diffs.into_iter().filter(|(n, _)| *n > *only.start()).collect();
    Complex::unchecked(&fc.alg, mods.into_iter().collect(), diffs)
}

fn build_tensor<F: Field>(
    fc: &FreeComplex<F>,
    y: &Complex<F>,
    only: Option<&RangeInclusive<i64>>,
    with_modules: bool,
) -> (KComplex<F>, BTreeMap<i64, FgModule<F>>) {
    let f = fc.alg.field();
    let mut dims = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    let mut mods = BTreeMap::new();
    let (Some((flo, fhi)), Some((ylo, yhi))) = (fc.support(), y.support()) else {
        return (KComplex { field: f.clone(), dims, diffs }, mods);
    };
    for n in collect_degrees(flo + ylo, fhi + yhi, only) {
        let src = tensor_layout(fc, y, n);
        if src.total == 0 {
            continue;
        }
        dims.insert(n, src.total);
        if with_modules {
            let parts: Vec<FgModule<F>> =
                src.parts.iter().map(|&(_, j, _, r, _)| y.entry(j).unwrap().power(r)).collect();
            mods.insert(n, FgModule::direct_sum(&parts).unwrap());
        }
        let tgt = tensor_layout(fc, y, n - 1);
        if tgt.total == 0 {
            continue;
        }
        let mut d = Mat::zeros(f, tgt.total, src.total);
        for &(i, j, so, r, dy) in &src.parts {
            // (−1)^i e ⊗ ∂y, into block (i, j − 1).
            if let Some(&(_, _, to, _, dt)) = tgt.parts.iter().find(|p| p.0 == i) {
                let dyj = y.diff(j).scaled(&sign(f, i));
                for c in 0..r {
                    d.set_block(to + c * dt, so + c * dy, &dyj);
                }
            }
            // ∂e ⊗ y, into block (i − 1, j).
            if let Some(&(_, _, to, r2, dt)) = tgt.parts.iter().find(|p| p.0 == i - 1) {
                let ym = y.entry(j).unwrap();
                debug_assert_eq!(dt, dy);
                for c in 0..r {
                    for dd in 0..r2 {
                        let a = fc.entry(i, dd, c);
                        if a.iter().all(|e| f.is_zero(e)) {
                            continue;
                        }
                        d.set_block(to + dd * dt, so + c * dy, &ym.act_matrix(a));
                    }
                }
            }
        }
        diffs.insert(n, d);
    }
    (KComplex { field: f.clone(), dims, diffs }, mods)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Fp;

    fn d2() -> Algebra<Fp> {
        Algebra::monomial_quotient(&Fp::new(101).unwrap(), &["x"], &["x^2"]).unwrap()
    }

    /// R --x--> R in degrees 1, 0.
    fn mult_by_x(a: &Algebra<Fp>) -> FreeComplex<Fp> {
        let mut fc = FreeComplex::new(a);
        fc.ranks.insert(0, 1);
        fc.ranks.insert(1, 1);
        fc.diffs.insert(1, vec![a.parse_element("x").unwrap()]);
        fc
    }

    #[test]
    fn module_complexes_and_infinities() {
        let a = d2();
        let k = FgModule::residue_field(&a);
        let c = Complex::of_module(&k, 0);
        assert_eq!((c.inf(), c.sup()), (ExtInt::Fin(0), ExtInt::Fin(0)));
        let z = Complex::of_module(&FgModule::zero(&a), 5);
        assert_eq!((z.inf(), z.sup()), (ExtInt::PosInf, ExtInt::NegInf));
        let r = Complex::of_module(&FgModule::free(&a, 1), -2);
        assert_eq!((r.inf(), r.amp()), (ExtInt::Fin(-2), ExtInt::Fin(0)));
    }

    #[test]
    fn homology_of_multiplication_by_x() {
        let a = d2();
        let c = mult_by_x(&a).to_complex();
        c.validate().unwrap();
        assert_eq!(c.homology_dims(), BTreeMap::from([(0, 1), (1, 1)]));
        let k = FgModule::residue_field(&a);
        assert!(FgModule::is_isomorphic(&c.homology(0), &k, 1).is_yes());
        assert!(FgModule::is_isomorphic(&c.homology(1), &k, 1).is_yes());
    }

    #[test]
    fn exact_two_term_complex() {
        let a = d2();
        let mut fc = FreeComplex::new(&a);
        fc.ranks.insert(0, 1);
        fc.ranks.insert(1, 1);
        fc.diffs.insert(1, vec![a.unit().clone()]);
        assert!(fc.to_complex().is_exact());
    }

    #[test]
    fn shift_laws() {
        let a = d2();
        let c = mult_by_x(&a).to_complex();
        assert_eq!(c.shift(0).diffs, c.diffs);
        let s = c.shift(2).shift(-5);
        let t = c.shift(-3);
        assert_eq!(s.diffs, t.diffs);
        for n in -3..=3 {
            let h = c.shift(n).homology_dims();
            for (i, d) in c.homology_dims() {
                assert_eq!(h[&(i + n)], d);
            }
        }
    }

    #[test]
    fn cones() {
        let a = d2();
        let c = mult_by_x(&a).to_complex();
        assert!(Complex::cone(&ChainMap::identity(&c)).is_exact());
        let z = ChainMap::zero(&Complex::zero(&a), &c);
        assert_eq!(Complex::cone(&z).homology_dims(), c.homology_dims());
        Complex::cone(&ChainMap::identity(&c)).validate().unwrap();
    }

    #[test]
    fn hom_and_tensor_with_ring() {
        let a = d2();
        let mut r = FreeComplex::new(&a);
        r.ranks.insert(0, 1);
        let y = mult_by_x(&a).to_complex();
        let h = hom_complex(&r, &y);
        h.validate().unwrap();
        assert_eq!(h.homology_dims(), y.homology_dims());
        let t = tensor_complex(&r, &y);
        t.validate().unwrap();
        assert_eq!(t.diffs, y.diffs);
    }

    #[test]
    fn hom_shift_identity_is_exact() {
        let a = d2();
        let fc = mult_by_x(&a);
        let y = mult_by_x(&a).to_complex();
        for n in -3..=3 {
            let lhs = hom_complex(&fc, &y.shift(n));
            let rhs = hom_complex(&fc, &y).shift(n);
            lhs.validate().unwrap();
            assert_eq!(lhs.diffs, rhs.diffs, "shift {n}");
            let lt = tensor_complex(&fc.shift(n), &y);
            let rt = tensor_complex(&fc, &y).shift(n);
            lt.validate().unwrap();
            assert_eq!(lt.diffs, rt.diffs, "shift {n}");
        }
    }

    #[test]
    fn truncations() {
        let a = d2();
        let c = mult_by_x(&a).to_complex();
        let (t, p) = c.truncate_above(0);
        t.validate().unwrap();
        p.validate().unwrap();
        assert_eq!(t.dim_at(0), 1);
        let (b, i) = c.truncate_below(1);
        b.validate().unwrap();
        i.validate().unwrap();
        assert_eq!(b.homology_dims(), BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn windowed_homology_matches_per_degree() {
        let a = d2();
        let fc = mult_by_x(&a);
        let y = mult_by_x(&a).to_complex().shift(1);
        let full = hom_kcomplex(&fc, &y, None);
        for (lo, hi) in [(-2, 2), (-1, 0), (0, 1), (1, 1)] {
            let cut = hom_kcomplex(&fc, &y, Some(lo..=hi + 1));
            let got = cut.homology_dims_in(lo..=hi);
            for n in lo..=hi {
                assert_eq!(got[&n], full.homology_dim(n), "hom window {lo}..={hi}, degree {n}");
            }
            let cut = tensor_kcomplex(&fc, &y, Some(lo..=hi + 1));
            let full_t = tensor_kcomplex(&fc, &y, None);
            let got = cut.homology_dims_in(lo..=hi);
            for n in lo..=hi {
                assert_eq!(got[&n], full_t.homology_dim(n), "tensor window {lo}..={hi}, degree {n}");
            }
        }
        assert_eq!(Mat::zeros(a.field(), 3, 4).rank(), 0);
        assert_eq!(Mat::zeros(a.field(), 0, 2).rank(), 0);
    }
}
