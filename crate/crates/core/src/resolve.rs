//! Minimal free resolutions of modules and bounded complexes.
//!
//! A resolution F → X is grown one degree at a time by making the mapping cone
//! exact: with C_n = F_{n−1} ⊕ X_n and d(f, x) = (−∂f, φ(f) + ∂x), the new
//! generators of F_n are lifts of a k-basis of Z_n(C) / (B'_n + m·Z_n(C)),
//! where B'_n = {(0, ∂x)}. Taking a basis modulo m·Z makes the result minimal.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Vector};
use crate::cplx::{cone_homology_dims, ChainMap, Complex, FreeComplex};
use crate::exact::{Echelon, Field, Mat};
use crate::fgmod::{FgModule, Isomorphism, ModuleHom};
use crate::{Error, Result};

/// Limits on how much of a resolution may be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Total free rank over all computed degrees.
    pub rank: usize,
    /// Largest k-dimension of a single cone term to be row-reduced.
    pub step_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { rank: 4096, step_dim: 1536 }
    }
}

/// Ω^{start+period} ≅ (Ω^{start})^{⊕multiplicity}, with an explicit isomorphism.
#[derive(Clone, Debug)]
pub struct PeriodicityCert<F: Field> {
    pub start: i64,
    pub period: i64,
    pub multiplicity: usize,
    pub witness: ModuleHom<F>,
}

/// A minimal free resolution, computed lazily in increasing degree.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    target: Complex<F>,
    free: FreeComplex<F>,
    /// φ_n: image in X_n of each generator of F_n.
    aug: BTreeMap<i64, Vec<Vector<F>>>,
    lo: i64,
    hi: i64,
    /// Highest degree computed so far (lo − 1 before the first step).
    top: i64,
    terminated: Option<i64>,
    total_rank: usize,
    budget: Budget,
    stopped: Option<Error>,
}

impl<F: Field> Resolution<F> {
    pub fn new(x: &Complex<F>, budget: Budget) -> Self {
        let (lo, hi) = x.support().unwrap_or((0, 0));
        let mut r = Resolution {
            target: x.clone(),
            free: FreeComplex::new(x.algebra()),
            aug: BTreeMap::new(),
            lo,
            hi,
            top: lo - 1,
            terminated: None,
            total_rank: 0,
            budget,
            stopped: None,
        };
        if x.support().is_none() {
            r.terminated = Some(lo);
        }
        r
    }

    pub fn algebra(&self) -> &Algebra<F> {
        self.target.algebra()
    }

    pub fn target(&self) -> &Complex<F> {
        &self.target
    }

    /// Highest degree computed; F_i for i ≤ top is final.
    pub fn top(&self) -> i64 {
        match self.terminated {
            Some(_) => i64::MAX,
            None => self.top,
        }
    }

    /// Some(j) when F_i = 0 for every i ≥ j.
    pub fn terminated(&self) -> Option<i64> {
        self.terminated
    }

    pub fn stopped(&self) -> Option<&Error> {
        self.stopped.as_ref()
    }

    pub fn rank(&self, i: i64) -> usize {
        self.free.rank(i)
    }

    /// Betti numbers computed so far.
    pub fn betti(&self) -> BTreeMap<i64, usize> {
        (self.lo..=self.top.min(self.computed_top())).map(|i| (i, self.free.rank(i))).collect()
    }

    fn computed_top(&self) -> i64 {
        self.top
    }

    /// F truncated to degrees ≤ t (everything if terminated).
    pub fn free(&self, t: i64) -> FreeComplex<F> {
        self.free.truncated(t.min(self.top))
    }

    pub fn full_free(&self) -> &FreeComplex<F> {
        &self.free
    }

    /// φ_n column images.
    pub fn aug(&self, n: i64) -> &[Vector<F>] {
        self.aug.get(&n).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// k-matrix of φ_n: F_n → X_n.
    pub fn aug_matrix(&self, n: i64) -> Mat<F> {
        let alg = self.algebra();
        let f = alg.field();
        let dx = self.target.dim_at(n);
        let r = self.rank(n);
        let nr = alg.dim();
        let mut m = Mat::zeros(f, dx, r * nr);
        if let Some(xm) = self.target.entry(n) {
            for (c, x) in self.aug(n).iter().enumerate() {
                for t in 0..nr {
                    let v = xm.action(t).mul_vec(x);
                    for (row, e) in v.into_iter().enumerate() {
                        m.set(row, c * nr + t, e);
                    }
                }
            }
        }
        m
    }

    /// The augmentation F_{≤t} → X as a chain map.
    pub fn augmentation(&self, t: i64) -> ChainMap<F> {
        let fc = self.free(t).to_complex();
        let comps = fc.entries().keys().map(|&n| (n, self.aug_matrix(n))).collect();
        ChainMap { source: fc, target: self.target.clone(), comps }
    }

    /// Whether F_{≤t} → X induces isomorphisms in homology below t, i.e. its
    /// cone is exact in degrees ≤ t.
    pub fn is_quasi_iso_through(&self, t: i64) -> bool {
        let map = self.augmentation(t);
        let src = map.source.to_k();
        let tgt = self.target.to_k();
        let lo = self.lo.min(src.dims.keys().next().copied().unwrap_or(self.lo));
        let t = t.min(self.top.max(self.hi));
        cone_homology_dims(&src, &tgt, &map.comps, lo..=t).values().all(|&h| h == 0)
    }

    /// Computes F_i for all i ≤ t. On budget exhaustion the computed part is kept
    /// and the error returned (again on later calls).
    pub fn extend_to(&mut self, t: i64) -> Result<()> {
        while self.terminated.is_none() && self.top < t {
            if let Some(e) = &self.stopped {
                return Err(e.clone());
            }
            let n = self.top + 1;
            if let Err(e) = self.step(n) {
                self.stopped = Some(e.clone());
                return Err(e);
            }
        }
        Ok(())
    }

    fn step(&mut self, n: i64) -> Result<()> {
        let alg = self.algebra().clone();
        let f = alg.field().clone();
        let nr = alg.dim();
        let x = &self.target;
        let (fp, fpp) = (self.free.rank(n - 1), self.free.rank(n - 2));
        let (dxn, dxm) = (x.dim_at(n), x.dim_at(n - 1));
        let cn = nr * fp + dxn;
        let cm = nr * fpp + dxm;
        if cn > self.budget.step_dim {
            return Err(Error::RankBudgetExceeded { budget: self.budget.rank, degree: n });
        }
        let lower = (cn.saturating_sub(cm + x.dim_at(n + 1)) + nr - 1) / nr;
        if self.total_rank + lower > self.budget.rank {
            return Err(Error::RankBudgetExceeded { budget: self.budget.rank, degree: n });
        }

        let mut d = Mat::zeros(&f, cm, cn);
        if fp > 0 && fpp > 0 {
            d.set_block(0, 0, &self.free.k_diff(n - 1).scaled(&f.neg(&f.one())));
        }
        if fp > 0 && dxm > 0 {
            d.set_block(nr * fpp, 0, &self.aug_matrix(n - 1));
        }
        if dxn > 0 && dxm > 0 {
            d.set_block(nr * fpp, nr * fp, &x.diff(n));
        }
        let z = d.kernel_vectors();

        let mut ech = Echelon::new(&f, cn);
        if dxn > 0 {
            for col in x.diff(n + 1).columns() {
                let mut v = vec![f.zero(); nr * fp];
                v.extend(col);
                ech.insert(&v);
            }
        }
        let xm = x.entry(n);
        for g in &alg.local().m_generators {
            let lg = alg.mul_matrix(g);
            let xg = xm.map(|m| m.act_matrix(g));
            for v in &z {
                let mut w = Vec::with_capacity(cn);
                for blk in v[..nr * fp].chunks(nr) {
                    w.extend(lg.mul_vec(blk));
                }
                if let Some(xg) = &xg {
                    w.extend(xg.mul_vec(&v[nr * fp..]));
                }
                ech.insert(&w);
            }
        }
        let mut diffs = Vec::new();
        let mut aug = Vec::new();
        for v in z {
            if ech.insert(&v) {
                let mut fpart = v[..nr * fp].to_vec();
                f.scale(&mut fpart, &f.neg(&f.one()));
                diffs.push(fpart);
                aug.push(v[nr * fp..].to_vec());
            }
        }
        let r = diffs.len();
        if self.total_rank + r > self.budget.rank {
            return Err(Error::RankBudgetExceeded { budget: self.budget.rank, degree: n });
        }
        self.total_rank += r;
        self.free.ranks.insert(n, r);
        if r > 0 {
            self.free.diffs.insert(n, diffs);
            self.aug.insert(n, aug);
        }
        self.top = n;
        if r == 0 && n >= self.hi {
            self.terminated = Some(n);
        }
        Ok(())
    }

    /// Every differential has entries in m.
    pub fn is_minimal(&self) -> bool {
        let alg = self.algebra();
        self.free.diffs.values().all(|cols| cols.iter().all(|c| c.chunks(alg.dim()).all(|e| alg.in_maximal_ideal(e))))
    }

    /// Lowest degree s with H_i(X) = 0 for i > s, at which syzygies make sense.
    pub fn syzygy_floor(&self) -> i64 {
        match self.target.sup().finite() {
            Some(s) => s.max(self.lo),
            None => self.lo,
        }
    }

    /// Ω^s = coker(∂_{s+1}), needing F up to s + 1.
    pub fn syzygy(&self, s: i64) -> Option<FgModule<F>> {
        if s < self.syzygy_floor() || s + 1 > self.top() {
            return None;
        }
        let free = FgModule::free(self.algebra(), self.rank(s));
        let img = self.free.k_diff(s + 1).columns();
        Some(free.quotient(&img).0)
    }

    /// Some(a) when Ω^s ≅ k^a, read off from ranks alone.
    pub fn residue_syzygy(&self, s: i64) -> Option<usize> {
        if s < self.syzygy_floor() || s + 1 > self.top() {
            return None;
        }
        let r = self.rank(s);
        let n = self.algebra().dim();
        let rk = if self.rank(s + 1) == 0 { 0 } else { self.free.k_diff(s + 1).rank() };
        (rk == r * (n - 1)).then_some(r)
    }

    /// Whether k is a direct summand of Ω^s: some socle element lies outside
    /// mΩ^s, and then a functional on Ω^s/mΩ^s splits it off.
    pub fn residue_summand(&self, s: i64) -> bool {
        if self.residue_syzygy(s).is_some_and(|a| a > 0) {
            return true;
        }
        let Some(m) = self.syzygy(s) else { return false };
        let mut span = crate::exact::Echelon::new(m.field(), m.dim());
        for a in m.m_generator_actions() {
            for v in a.columns() {
                span.insert(&v);
            }
        }
        m.socle().iter().any(|v| !span.contains(v))
    }

    /// k-dimension of Ω^s.
    pub fn syzygy_dim(&self, s: i64) -> Option<usize> {
        if s < self.syzygy_floor() || s + 1 > self.top() {
            return None;
        }
        let rk = if self.rank(s + 1) == 0 { 0 } else { self.free.k_diff(s + 1).rank() };
        Some(self.rank(s) * self.algebra().dim() - rk)
    }
}

/// Minimal free resolution of a module through degree `depth_n`.
pub fn minimal_free_resolution<F: Field>(m: &FgModule<F>, depth_n: i64, budget: Budget) -> (Resolution<F>, Result<()>) {
    let mut r = Resolution::new(&Complex::of_module(m, 0), budget);
    let res = r.extend_to(depth_n);
    (r, res)
}

/// Resolution of a bounded complex down to (homological) degree sup + window.
pub fn resolve_complex<F: Field>(x: &Complex<F>, window: i64, budget: Budget) -> (Resolution<F>, Result<()>) {
    let mut r = Resolution::new(x, budget);
    let top = x.support().map(|s| s.1).unwrap_or(0) + window;
    let res = r.extend_to(top);
    (r, res)
}

/// Looks for Ω^{s+p} ≅ (Ω^s)^{⊕c} among computed syzygies, scanning by
/// increasing s + p and then decreasing p.
pub fn detect_periodicity<F: Field>(res: &Resolution<F>, seed: u64) -> Option<PeriodicityCert<F>> {
    if res.terminated().is_some() {
        return None;
    }
    let floor = res.syzygy_floor();
    let top = res.top() - 1;
    for end in floor + 1..=top {
        for start in (floor..end).rev() {
            if let Some(c) = check_pair(res, start, end, seed) {
                return Some(c);
            }
        }
    }
    None
}

/// Tests the single pair (s, s + p).
pub fn check_pair<F: Field>(res: &Resolution<F>, s: i64, e: i64, seed: u64) -> Option<PeriodicityCert<F>> {
    let (rs, re) = (res.rank(s), res.rank(e));
    if rs == 0 || re == 0 || re % rs != 0 {
        return None;
    }
    let c = re / rs;
    let (ds, de) = (res.syzygy_dim(s)?, res.syzygy_dim(e)?);
    if de != c * ds {
        return None;
    }
    let om_s = res.syzygy(s)?;
    let om_e = res.syzygy(e)?;
    let target = om_s.power(c);
    let witness = if res.residue_syzygy(s).is_some() && res.residue_syzygy(e).is_some() {
        // Both are k-vector spaces with m acting as zero: any bijection is R-linear.
        ModuleHom { source: om_e.clone(), target: target.clone(), matrix: Mat::identity(om_e.field(), de) }
    } else {
        match FgModule::is_isomorphic(&om_e, &target, seed) {
            Isomorphism::Yes(h) => h,
            _ => return None,
        }
    };
    debug_assert!(witness.validate().is_ok());
    Some(PeriodicityCert { start: s, period: e - s, multiplicity: c, witness })
}
