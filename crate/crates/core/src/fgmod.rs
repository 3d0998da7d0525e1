//! Finitely generated modules as finite-dimensional representations.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Vector};
use crate::exact::{Echelon, Field, Mat};
use crate::{Error, Result};

/// Default seed for randomized searches.
pub const DEFAULT_SEED: u64 = 0xDC0DE;

/// Generator data computed on first use.
#[derive(Debug)]
struct Gens<F: Field> {
    /// Basis of mM.
    m_part: Vec<Vector<F>>,
    /// Minimal generators g_1..g_b (their classes form a basis of M/mM).
    gens: Vec<Vector<F>>,
    /// π: R^b → M, (r_c) ↦ Σ r_c g_c, as a k-matrix with column index c·n + t.
    cover: Mat<F>,
    /// A k-linear section of π.
    section: Mat<F>,
    /// R-module generators of ker π.
    relations: Vec<Vector<F>>,
}

/// A finitely generated module over an [`Algebra`], given by one action matrix per
/// algebra basis element.
#[derive(Clone)]
pub struct FgModule<F: Field> {
    alg: Algebra<F>,
    dim: usize,
    actions: Arc<Vec<Mat<F>>>,
    gens: Arc<OnceLock<Gens<F>>>,
}

impl<F: Field> fmt::Debug for FgModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgModule(dim {})", self.dim)
    }
}

/// Numerical invariants of a module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuleInvariants {
    pub length: usize,
    pub min_gens: usize,
    pub socle_dim: usize,
    pub annihilator_dim: usize,
}

/// An R-linear map between modules.
#[derive(Clone, Debug)]
pub struct ModuleHom<F: Field> {
    pub source: FgModule<F>,
    pub target: FgModule<F>,
    pub matrix: Mat<F>,
}

/// Hom_R(M, N) as a module, with the k-matrix of each basis homomorphism.
#[derive(Clone, Debug)]
pub struct HomModule<F: Field> {
    pub module: FgModule<F>,
    /// Generator images: column j lists (f_j(g_1), ..., f_j(g_b)) stacked.
    pub coords: Mat<F>,
    source: FgModule<F>,
    target: FgModule<F>,
}

#[derive(Clone, Debug)]
pub enum Isomorphism<F: Field> {
    Yes(ModuleHom<F>),
    No(String),
    Unknown,
}

impl<F: Field> Isomorphism<F> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Isomorphism::Yes(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, Isomorphism::No(_))
    }
}

impl<F: Field> FgModule<F> {
    /// Validates the module axioms for the given action matrices.
    pub fn new(alg: &Algebra<F>, actions: Vec<Mat<F>>) -> Result<Self> {
        let n = alg.dim();
        if actions.len() != n {
            return Err(Error::InvalidModule(format!("{} action matrices for a {n}-dimensional algebra", actions.len())));
        }
        let d = actions.first().map(|a| a.rows()).unwrap_or(0);
        if actions.iter().any(|a| a.rows() != d || a.cols() != d) {
            return Err(Error::InvalidModule("action matrices must be square of equal size".into()));
        }
        let m = Self::unchecked(alg, d, actions);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn unchecked(alg: &Algebra<F>, dim: usize, actions: Vec<Mat<F>>) -> Self {
        FgModule { alg: alg.clone(), dim, actions: Arc::new(actions), gens: Arc::new(OnceLock::new()) }
    }

    pub fn validate(&self) -> Result<()> {
        let f = self.alg.field();
        let unit = self.act_matrix(self.alg.unit());
        if unit != Mat::identity(f, self.dim) {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        let n = self.alg.dim();
        for i in 0..n {
            for j in 0..n {
                let prod = self.actions[i].mul(&self.actions[j]);
                let expect = self.act_matrix(&self.alg.lmul(i).col(j));
                if prod != expect {
                    let l = self.alg.labels();
                    return Err(Error::InvalidModule(format!(
                        "action of {}*{} is not the composite of the actions",
                        l[i], l[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Algebra<F>) -> Self {
        let f = alg.field();
        Self::unchecked(alg, 0, (0..alg.dim()).map(|_| Mat::zeros(f, 0, 0)).collect())
    }

    /// R^n with the block-diagonal regular representation.
    pub fn free(alg: &Algebra<F>, rank: usize) -> Self {
        let id = Mat::identity(alg.field(), rank);
        let actions = (0..alg.dim()).map(|i| id.kron(alg.lmul(i))).collect();
        Self::unchecked(alg, rank * alg.dim(), actions)
    }

    /// k = R/m.
    pub fn residue_field(alg: &Algebra<F>) -> Self {
        let f = alg.field();
        let actions = (0..alg.dim())
            .map(|i| Mat::from_rows(f, 1, vec![vec![alg.residue(&alg.basis_vector(i))]]))
            .collect();
        Self::unchecked(alg, 1, actions)
    }

    /// Cokernel of R^r → R^g given by a g×r matrix of ring elements.
    pub fn from_presentation(alg: &Algebra<F>, rows: usize, matrix: &[Vec<Vector<F>>]) -> Result<Self> {
        if matrix.len() != rows {
            return Err(Error::Dimension(format!("presentation has {} rows, expected {rows}", matrix.len())));
        }
        let r = matrix.first().map(|row| row.len()).unwrap_or(0);
        let n = alg.dim();
        if matrix.iter().any(|row| row.len() != r || row.iter().any(|e| e.len() != n)) {
            return Err(Error::Dimension("ragged presentation matrix".into()));
        }
        let free = Self::free(alg, rows);
        let mut image = Vec::with_capacity(r * n);
        for j in 0..r {
            let mut col = Vec::with_capacity(rows * n);
            for row in matrix {
                col.extend(row[j].iter().cloned());
            }
            for t in 0..n {
                image.push(free.actions[t].mul_vec(&col));
            }
        }
        Ok(free.quotient(&image).0)
    }

    /// The k-dual Hom_k(M, k) with transposed actions.
    pub fn k_dual(&self) -> Self {
        let actions = self.actions.iter().map(|a| a.transpose()).collect();
        Self::unchecked(&self.alg, self.dim, actions)
    }

    pub fn direct_sum(parts: &[FgModule<F>]) -> Result<Self> {
        let alg = match parts.first() {
            Some(p) => p.alg.clone(),
            None => return Err(Error::InvalidModule("empty direct sum needs an algebra".into())),
        };
        if parts.iter().any(|p| !p.alg.same(&alg)) {
            return Err(Error::AlgebraMismatch);
        }
        let f = alg.field();
        let dim = parts.iter().map(|p| p.dim).sum();
        let actions = (0..alg.dim())
            .map(|i| {
                let mut m = Mat::zeros(f, dim, dim);
                let mut o = 0;
                for p in parts {
                    m.set_block(o, o, &p.actions[i]);
                    o += p.dim;
                }
                m
            })
            .collect();
        Ok(Self::unchecked(&alg, dim, actions))
    }

    /// M^{⊕c}.
    pub fn power(&self, c: usize) -> Self {
        let id = Mat::identity(self.alg.field(), c);
        let actions = self.actions.iter().map(|a| id.kron(a)).collect();
        Self::unchecked(&self.alg, self.dim * c, actions)
    }

    /// M ⊗_k N over A ⊗_k B, where `ab` was built by [`Algebra::tensor`] from the
    /// two underlying algebras.
    pub fn external_tensor(m: &Self, n: &Self, ab: &Algebra<F>) -> Result<Self> {
        if ab.dim() != m.alg.dim() * n.alg.dim() {
            return Err(Error::AlgebraMismatch);
        }
        let mut actions = Vec::with_capacity(ab.dim());
        for i in 0..m.alg.dim() {
            for j in 0..n.alg.dim() {
                actions.push(m.actions[i].kron(&n.actions[j]));
            }
        }
        Self::new(ab, actions)
    }

    /// Restriction of scalars along A ⋉ C → A.
    pub fn inflate(&self, ext: &Algebra<F>) -> Result<Self> {
        let n = self.alg.dim();
        if ext.dim() < n {
            return Err(Error::AlgebraMismatch);
        }
        let f = self.alg.field();
        let mut actions: Vec<Mat<F>> = self.actions.to_vec();
        actions.extend((n..ext.dim()).map(|_| Mat::zeros(f, self.dim, self.dim)));
        Self::new(ext, actions)
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn field(&self) -> &F {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self, i: usize) -> &Mat<F> {
        &self.actions[i]
    }

    pub fn actions(&self) -> &[Mat<F>] {
        &self.actions
    }

    /// Matrix of multiplication by a ring element.
    pub fn act_matrix(&self, r: &[F::Elem]) -> Mat<F> {
        let f = self.alg.field();
        let mut m = Mat::zeros(f, self.dim, self.dim);
        for (t, c) in r.iter().enumerate() {
            if !f.is_zero(c) {
                m.add_scaled(c, &self.actions[t]);
            }
        }
        m
    }

    pub fn act(&self, r: &[F::Elem], v: &[F::Elem]) -> Vector<F> {
        let f = self.alg.field();
        let mut out = vec![f.zero(); self.dim];
        for (t, c) in r.iter().enumerate() {
            if !f.is_zero(c) {
                let w = self.actions[t].mul_vec(v);
                f.axpy(&mut out, c, &w);
            }
        }
        out
    }

    /// Matrices of the minimal generators of m acting on M.
    pub fn m_generator_actions(&self) -> Vec<Mat<F>> {
        self.alg.local().m_generators.iter().map(|g| self.act_matrix(g)).collect()
    }

    /// Socle {v : m·v = 0}.
    pub fn socle(&self) -> Vec<Vector<F>> {
        let f = self.alg.field();
        let acts = self.m_generator_actions();
        if acts.is_empty() || self.dim == 0 {
            return Mat::<F>::identity(f, self.dim).columns();
        }
        let stacked = acts.into_iter().reduce(|a, b| a.vstack(&b)).unwrap();
        stacked.kernel_vectors()
    }

    fn gens(&self) -> &Gens<F> {
        self.gens.get_or_init(|| self.compute_gens())
    }

    fn compute_gens(&self) -> Gens<F> {
        let f = self.alg.field().clone();
        let n = self.alg.dim();
        let mut ech = Echelon::new(&f, self.dim);
        for a in self.m_generator_actions() {
            for v in a.columns() {
                ech.insert(&v);
            }
        }
        let m_part = ech.basis().to_vec();
        let mut gens = Vec::new();
        for j in 0..self.dim {
            let mut e = vec![f.zero(); self.dim];
            e[j] = f.one();
            if ech.insert(&e) {
                gens.push(e);
            }
        }
        let b = gens.len();
        let mut cols = Vec::with_capacity(b * n);
        for g in &gens {
            for t in 0..n {
                cols.push(self.actions[t].mul_vec(g));
            }
        }
        let cover = Mat::from_cols(&f, self.dim, &cols);
        let section = cover
            .solve_many(&Mat::identity(&f, self.dim))
            .expect("dimensions agree")
            .expect("minimal generators generate");
        let kernel = cover.kernel_vectors();
        // Reduce the kernel basis to R-module generators.
        let free = FgModule::free(&self.alg, b);
        let mut mk = Echelon::new(&f, b * n);
        for a in free.m_generator_actions() {
            for v in &kernel {
                mk.insert(&a.mul_vec(v));
            }
        }
        let relations = kernel.into_iter().filter(|v| mk.insert(v)).collect();
        Gens { m_part, gens, cover, section, relations }
    }

    /// Minimal generators as vectors of M.
    pub fn minimal_generators(&self) -> &[Vector<F>] {
        &self.gens().gens
    }

    pub fn min_gens(&self) -> usize {
        self.gens().gens.len()
    }

    /// Basis of mM.
    pub fn m_times(&self) -> &[Vector<F>] {
        &self.gens().m_part
    }

    /// R-module generators of the first syzygy inside R^{min_gens}.
    pub fn relations(&self) -> &[Vector<F>] {
        &self.gens().relations
    }

    /// The k-matrix of the minimal cover R^b → M.
    pub fn cover_matrix(&self) -> &Mat<F> {
        &self.gens().cover
    }

    pub fn killed_by_m(&self) -> bool {
        self.gens().m_part.is_empty()
    }

    pub fn socle_dim(&self) -> usize {
        if self.dim == 0 {
            0
        } else {
            self.socle().len()
        }
    }

    pub fn annihilator_dim(&self) -> usize {
        let f = self.alg.field();
        let n = self.alg.dim();
        if self.dim == 0 {
            return n;
        }
        let cols: Vec<Vector<F>> = self.actions.iter().map(|a| a.entries().to_vec()).collect();
        let m = Mat::from_cols(f, self.dim * self.dim, &cols);
        n - m.rank()
    }

    pub fn invariants(&self) -> ModuleInvariants {
        ModuleInvariants {
            length: self.dim,
            min_gens: self.min_gens(),
            socle_dim: self.socle_dim(),
            annihilator_dim: self.annihilator_dim(),
        }
    }

    /// The submodule spanned (over k) by `basis`, which must be R-stable.
    /// Returns the module and its inclusion matrix.
    pub fn submodule(&self, basis: &[Vector<F>]) -> Result<(Self, Mat<F>)> {
        let f = self.alg.field();
        let mut ech = Echelon::new(f, self.dim);
        let indep: Vec<Vector<F>> = basis.iter().filter(|v| ech.insert(v)).cloned().collect();
        let incl = Mat::from_cols(f, self.dim, &indep);
        let mut actions = Vec::with_capacity(self.alg.dim());
        for a in self.actions.iter() {
            let img = a.mul(&incl);
            let sol = incl
                .solve_many(&img)?
                .ok_or_else(|| Error::InvalidModule("span is not closed under the action".into()))?;
            actions.push(sol);
        }
        Ok((Self::unchecked(&self.alg, indep.len(), actions), incl))
    }

    /// M / N for the R-submodule N spanned by `sub` (closed under the action by
    /// assumption). Returns the quotient and the projection matrix.
    pub fn quotient(&self, sub: &[Vector<F>]) -> (Self, Mat<F>) {
        let f = self.alg.field();
        let mut ech = Echelon::new(f, self.dim);
        for v in sub {
            ech.insert(v);
        }
        let basis = ech.basis().to_vec();
        let pivots: Vec<usize> = basis
            .iter()
            .map(|v| v.iter().position(|e| !f.is_zero(e)).unwrap())
            .collect();
        let keep: Vec<usize> = (0..self.dim).filter(|j| !pivots.contains(j)).collect();
        let q = keep.len();
        let mut proj = Mat::zeros(f, q, self.dim);
        for j in 0..self.dim {
            let mut e = vec![f.zero(); self.dim];
            e[j] = f.one();
            ech.reduce(&mut e);
            for (r, &k) in keep.iter().enumerate() {
                proj.set(r, j, e[k].clone());
            }
        }
        let lift = Mat::<F>::identity(f, self.dim).select_cols(&keep);
        let actions = self.actions.iter().map(|a| proj.mul(&a.mul(&lift))).collect();
        (Self::unchecked(&self.alg, q, actions), proj)
    }

    /// Hom_R(M, N), computed from a presentation of M: a homomorphism is a tuple
    /// of generator images killing every relation.
    pub fn hom(m: &Self, n: &Self) -> Result<HomModule<F>> {
        if !m.alg.same(&n.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let f = m.alg.field();
        let ra = m.alg.dim();
        let b = m.min_gens();
        let dn = n.dim;
        let rels = m.relations();
        let mut cons = Mat::zeros(f, rels.len() * dn, b * dn);
        for (k, rho) in rels.iter().enumerate() {
            for c in 0..b {
                let blk = n.act_matrix(&rho[c * ra..(c + 1) * ra]);
                cons.set_block(k * dn, c * dn, &blk);
            }
        }
        let coords = cons.kernel_basis();
        let h = coords.cols();
        let mut actions = Vec::with_capacity(ra);
        let id_b = Mat::identity(f, b);
        for t in 0..ra {
            let big = id_b.kron(&n.actions[t]);
            let img = big.mul(&coords);
            let sol = coords.solve_many(&img)?.expect("Hom is an R-module");
            actions.push(sol);
        }
        let module = Self::unchecked(&m.alg, h, actions);
        Ok(HomModule { module, coords, source: m.clone(), target: n.clone() })
    }

    /// M ⊗_R N as the quotient of M ⊗_k N by am⊗n − m⊗an.
    pub fn tensor(m: &Self, n: &Self) -> Result<(Self, Mat<F>)> {
        if !m.alg.same(&n.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let f = m.alg.field();
        let idm = Mat::identity(f, m.dim);
        let idn = Mat::identity(f, n.dim);
        let mut rel = Vec::new();
        let gens: Vec<usize> = (0..m.alg.dim()).collect();
        for &t in &gens {
            let d = m.actions[t].kron(&idn).sub(&idm.kron(&n.actions[t]));
            rel.extend(d.columns());
        }
        let mut actions = Vec::with_capacity(m.alg.dim());
        for t in 0..m.alg.dim() {
            actions.push(m.actions[t].kron(&idn));
        }
        let big = Self::unchecked(&m.alg, m.dim * n.dim, actions);
        Ok(big.quotient(&rel))
    }

    /// Searches for an isomorphism M → N.
    pub fn is_isomorphic(m: &Self, n: &Self, seed: u64) -> Isomorphism<F> {
        if !m.alg.same(&n.alg) {
            return Isomorphism::No("different algebras".into());
        }
        if m.dim != n.dim {
            return Isomorphism::No(format!("length {} vs {}", m.dim, n.dim));
        }
        if m.dim == 0 {
            let f = m.alg.field();
            return Isomorphism::Yes(ModuleHom { source: m.clone(), target: n.clone(), matrix: Mat::zeros(f, 0, 0) });
        }
        if m.min_gens() != n.min_gens() {
            return Isomorphism::No(format!("min_gens {} vs {}", m.min_gens(), n.min_gens()));
        }
        let (sm, sn) = (m.socle_dim(), n.socle_dim());
        if sm != sn {
            return Isomorphism::No(format!("socle_dim {sm} vs {sn}"));
        }
        let (b1m, b1n) = (m.first_syzygy_gens(), n.first_syzygy_gens());
        if b1m != b1n {
            return Isomorphism::No(format!("Betti prefix (.., {b1m}) vs (.., {b1n})"));
        }
        let hom = match Self::hom(m, n) {
            Ok(h) => h,
            Err(_) => return Isomorphism::Unknown,
        };
        let f = m.alg.field();
        let h = hom.coords.cols();
        if h == 0 {
            return Isomorphism::No("Hom(M, N) = 0".into());
        }
        let try_coords = |c: &[F::Elem]| -> Option<ModuleHom<F>> {
            if n.images_generate(c) {
                Some(hom.to_hom(c))
            } else {
                None
            }
        };
        for j in 0..h {
            if let Some(iso) = try_coords(&hom.coords.col(j)) {
                return Isomorphism::Yes(iso);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..200 {
            let w: Vec<F::Elem> = (0..h).map(|_| f.random(&mut rng)).collect();
            let c = hom.coords.mul_vec(&w);
            if let Some(iso) = try_coords(&c) {
                return Isomorphism::Yes(iso);
            }
        }
        if let Some(q) = f.size() {
            if h <= 6 && (q as f64).powi(h as i32) <= 1e6 {
                let total = q.pow(h as u32);
                for idx in 0..total {
                    let mut rest = idx;
                    let w: Vec<F::Elem> = (0..h)
                        .map(|_| {
                            let e = f.element(rest % q);
                            rest /= q;
                            e
                        })
                        .collect();
                    let c = hom.coords.mul_vec(&w);
                    if let Some(iso) = try_coords(&c) {
                        return Isomorphism::Yes(iso);
                    }
                }
                return Isomorphism::No("no element of Hom(M, N) is surjective (exhaustive search)".into());
            }
        }
        Isomorphism::Unknown
    }

    /// Number of minimal generators of the first syzygy.
    fn first_syzygy_gens(&self) -> usize {
        self.relations().len()
    }

    /// Whether the given generator images of some map into `self` (stacked) span
    /// self/m·self, i.e. the map is onto by Nakayama.
    fn images_generate(&self, stacked: &[F::Elem]) -> bool {
        let f = self.alg.field();
        let mut ech = Echelon::new(f, self.dim);
        for v in self.m_times() {
            ech.insert(v);
        }
        let base = ech.dim();
        for chunk in stacked.chunks(self.dim.max(1)) {
            ech.insert(chunk);
        }
        ech.dim() - base == self.min_gens()
    }
}

impl<F: Field> HomModule<F> {
    pub fn dim(&self) -> usize {
        self.coords.cols()
    }

    /// The homomorphism with generator images `c` (stacked) as a k-matrix.
    pub fn to_hom(&self, c: &[F::Elem]) -> ModuleHom<F> {
        let (m, n) = (&self.source, &self.target);
        let f = m.alg.field();
        let ra = m.alg.dim();
        let b = m.min_gens();
        let mut cols = Vec::with_capacity(b * ra);
        for cidx in 0..b {
            let img = &c[cidx * n.dim..(cidx + 1) * n.dim];
            for t in 0..ra {
                cols.push(n.actions[t].mul_vec(img));
            }
        }
        let e = Mat::from_cols(f, n.dim, &cols);
        let matrix = e.mul(&m.gens().section);
        ModuleHom { source: m.clone(), target: n.clone(), matrix }
    }

    /// All basis homomorphisms.
    pub fn basis_homs(&self) -> Vec<ModuleHom<F>> {
        (0..self.dim()).map(|j| self.to_hom(&self.coords.col(j))).collect()
    }
}

impl<F: Field> ModuleHom<F> {
    pub fn new(source: &FgModule<F>, target: &FgModule<F>, matrix: Mat<F>) -> Result<Self> {
        let h = ModuleHom { source: source.clone(), target: target.clone(), matrix };
        h.validate()?;
        Ok(h)
    }

    pub fn identity(m: &FgModule<F>) -> Self {
        ModuleHom { source: m.clone(), target: m.clone(), matrix: Mat::identity(m.field(), m.dim()) }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.source.alg.same(&self.target.alg) {
            return Err(Error::AlgebraMismatch);
        }
        if self.matrix.rows() != self.target.dim || self.matrix.cols() != self.source.dim {
            return Err(Error::Dimension("homomorphism matrix has the wrong shape".into()));
        }
        for (a, b) in self.source.actions.iter().zip(self.target.actions.iter()) {
            if self.matrix.mul(a) != b.mul(&self.matrix) {
                return Err(Error::InvalidModule("matrix does not intertwine the actions".into()));
            }
        }
        Ok(())
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim == self.target.dim && self.matrix.rank() == self.source.dim
    }
}

/// The space of k-matrices X with X·A_i = B_i·X for all i, computed directly from
/// the intertwining equations. Slow; meant for cross-checking [`FgModule::hom`].
pub fn intertwiner_space<F: Field>(m: &FgModule<F>, n: &FgModule<F>) -> Vec<Mat<F>> {
    let f = m.field();
    let (dm, dn) = (m.dim, n.dim);
    let vars = dm * dn;
    let mut rows: Vec<Vector<F>> = Vec::new();
    for (a, b) in m.actions.iter().zip(n.actions.iter()) {
        // (X A)_{rc} − (B X)_{rc} with X_{rk} at index r*dm + k.
        for r in 0..dn {
            for c in 0..dm {
                let mut row = vec![f.zero(); vars];
                for k in 0..dm {
                    let v = a.get(k, c);
                    if !f.is_zero(v) {
                        row[r * dm + k] = f.add(&row[r * dm + k], v);
                    }
                }
                for k in 0..dn {
                    let v = b.get(r, k);
                    if !f.is_zero(v) {
                        row[k * dm + c] = f.sub(&row[k * dm + c], v);
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = Mat::from_rows(f, vars, rows);
    sys.kernel_vectors()
        .into_iter()
        .map(|v| Mat::from_vec(f, dn, dm, v).expect("shape"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Fp;

    fn f() -> Fp {
        Fp::new(101).unwrap()
    }
    fn ring(vars: &[&str], rels: &[&str]) -> Algebra<Fp> {
        Algebra::monomial_quotient(&f(), vars, rels).unwrap()
    }

    #[test]
    fn free_modules() {
        let d2 = ring(&["x"], &["x^2"]);
        assert_eq!(FgModule::free(&d2, 0).dim(), 0);
        let r = FgModule::free(&d2, 1);
        assert_eq!(r.min_gens(), 1);
        let r2 = FgModule::free(&d2, 2);
        assert_eq!(r2.dim(), 4);
        r2.validate().unwrap();
    }

    #[test]
    fn presentations() {
        let d3 = ring(&["x"], &["x^3"]);
        let one = d3.unit().clone();
        let zero = FgModule::from_presentation(&d3, 1, &[vec![one]]).unwrap();
        assert_eq!(zero.dim(), 0);
        let x = d3.parse_element("x").unwrap();
        let k = FgModule::from_presentation(&d3, 1, &[vec![x]]).unwrap();
        assert_eq!(k.dim(), 1);
        let x2 = d3.parse_element("x^2").unwrap();
        let m = FgModule::from_presentation(&d3, 1, &[vec![x2]]).unwrap();
        assert_eq!(m.dim(), 2);
        m.validate().unwrap();
    }

    #[test]
    fn invariants_over_fat() {
        let fat = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let r = FgModule::free(&fat, 1);
        let i = r.invariants();
        assert_eq!((i.length, i.min_gens, i.socle_dim), (3, 1, 2));
        let w = r.k_dual();
        let i = w.invariants();
        assert_eq!((i.length, i.min_gens, i.socle_dim), (3, 2, 1));
        let k = FgModule::residue_field(&fat);
        let i = k.invariants();
        assert_eq!((i.length, i.min_gens, i.socle_dim), (1, 1, 1));
    }

    #[test]
    fn hom_matches_intertwiners() {
        let fat = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let r = FgModule::free(&fat, 1);
        let k = FgModule::residue_field(&fat);
        let w = r.k_dual();
        for (a, b) in [(&r, &k), (&k, &r), (&w, &r), (&r, &w), (&w, &w), (&k, &w)] {
            let h = FgModule::hom(a, b).unwrap();
            assert_eq!(h.dim(), intertwiner_space(a, b).len());
            for hm in h.basis_homs() {
                hm.validate().unwrap();
            }
            h.module.validate().unwrap();
        }
        assert_eq!(FgModule::hom(&k, &r).unwrap().dim(), 2);
    }

    #[test]
    fn tensor_of_residue_fields() {
        let d2 = ring(&["x"], &["x^2"]);
        let k = FgModule::residue_field(&d2);
        let (t, _) = FgModule::tensor(&k, &k).unwrap();
        assert_eq!(t.dim(), 1);
        let r = FgModule::free(&d2, 1);
        let (t, _) = FgModule::tensor(&r, &k).unwrap();
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn isomorphism_search() {
        let d2 = ring(&["x"], &["x^2"]);
        let k = FgModule::residue_field(&d2);
        let r = FgModule::free(&d2, 1);
        assert!(FgModule::is_isomorphic(&r, &r, DEFAULT_SEED).is_yes());
        assert!(FgModule::is_isomorphic(&r, &k, DEFAULT_SEED).is_no());
        // The syzygy of k is the ideal (x), which is isomorphic to k.
        let x = d2.parse_element("x").unwrap();
        let (syz, _) = r.submodule(&[x]).unwrap();
        match FgModule::is_isomorphic(&syz, &k, DEFAULT_SEED) {
            Isomorphism::Yes(h) => {
                h.validate().unwrap();
                assert!(h.is_iso());
            }
            other => panic!("{other:?}"),
        }
        assert!(FgModule::is_isomorphic(&r.k_dual(), &r, DEFAULT_SEED).is_yes());
    }
}
