//! Finite-dimensional commutative local algebras given by structure constants.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::exact::{Echelon, Field, FieldSpec, Mat};
use crate::fgmod::FgModule;
use crate::{Error, Result};

/// Coordinates of an algebra or module element in the fixed k-basis.
pub type Vector<F> = Vec<<F as Field>::Elem>;

/// The maximal ideal and related data of a local algebra.
#[derive(Clone, Debug)]
pub struct LocalData<F: Field> {
    pub m_basis: Vec<Vector<F>>,
    pub socle_basis: Vec<Vector<F>>,
    /// Least N with m^N = 0.
    pub nilpotency_index: usize,
    /// A minimal generating set of m, i.e. a basis of m modulo m².
    pub m_generators: Vec<Vector<F>>,
}

struct Inner<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    /// `lmul[i]` is the matrix of multiplication by the i-th basis element.
    lmul: Vec<Mat<F>>,
    unit: Vector<F>,
    vars: Vec<(String, Vector<F>)>,
    /// The residue map R → k as a row vector.
    aug: Vector<F>,
    local: LocalData<F>,
}

/// A validated Artinian local commutative algebra. Cheap to clone.
#[derive(Clone)]
pub struct Algebra<F: Field>(Arc<Inner<F>>);

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, basis [{}])", self.dim(), self.0.labels.join(", "))
    }
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl<F: Field> Algebra<F> {
    /// Builds an algebra from structure constants `table[i][j][t]`, the coefficient
    /// of `e_t` in `e_i · e_j`.
    pub fn from_structure(
        field: &F,
        labels: Vec<String>,
        table: &[Vec<Vector<F>>],
        unit: Vector<F>,
    ) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(Error::Dimension(format!("structure table must be {n}x{n}x{n}")));
        }
        if unit.len() != n {
            return Err(Error::Dimension(format!("unit has {} coordinates, expected {n}", unit.len())));
        }
        let lmul = (0..n)
            .map(|i| Mat::from_cols(field, n, &table[i]))
            .collect::<Vec<_>>();
        let vars = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), basis_vector(field, n, i)))
            .collect();
        Self::build(field, labels, lmul, unit, vars)
    }

    /// k[vars]/(relations) for monomial relations given as strings such as `"x^2"`
    /// or `"x*y"`.
    pub fn monomial_quotient<S: AsRef<str>>(field: &F, vars: &[S], relations: &[S]) -> Result<Self> {
        let names: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| parse_monomial(r.as_ref(), &names))
            .collect::<Result<Vec<_>>>()?;
        Self::monomial_quotient_exps(field, &names, &rels)
    }

    pub fn monomial_quotient_exps(field: &F, names: &[String], rels: &[Vec<u32>]) -> Result<Self> {
        let nv = names.len();
        let mut bounds = vec![0u32; nv];
        for (v, bound) in bounds.iter_mut().enumerate() {
            let pure = rels
                .iter()
                .filter(|r| r.iter().enumerate().all(|(w, &e)| w == v || e == 0))
                .map(|r| r[v])
                .min();
            match pure {
                Some(e) => *bound = e,
                None => {
                    return Err(Error::NotArtinian(format!(
                        "no power of {} lies in the relation ideal",
                        names[v]
                    )))
                }
            }
        }
        let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
        let mut basis: Vec<Vec<u32>> = vec![vec![]];
        for &b in &bounds {
            basis = basis
                .into_iter()
                .flat_map(|m| {
                    (0..b).map(move |e| {
                        let mut m2 = m.clone();
                        m2.push(e);
                        m2
                    })
                })
                .collect();
        }
        basis.retain(|m| !rels.iter().any(|r| divides(r, m)));
        basis.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let n = basis.len();
        let index: BTreeMap<Vec<u32>, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut lmul = Vec::with_capacity(n);
        for a in &basis {
            let mut m = Mat::zeros(field, n, n);
            for (j, b) in basis.iter().enumerate() {
                let prod: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if let Some(&t) = index.get(&prod) {
                    m.set(t, j, field.one());
                }
            }
            lmul.push(m);
        }
        let labels = basis.iter().map(|m| monomial_label(m, names)).collect();
        let vars = (0..nv)
            .map(|v| {
                let mut e = vec![0u32; nv];
                e[v] = 1;
                let coords = match index.get(&e) {
                    Some(&i) => basis_vector(field, n, i),
                    None => vec![field.zero(); n],
                };
                (names[v].clone(), coords)
            })
            .collect();
        Self::build(field, labels, lmul, basis_vector(field, n, 0), vars)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: &F) -> Self {
        Self::monomial_quotient_exps(field, &[], &[]).expect("k is a local algebra")
    }

    /// A ⊗_k B with basis ordered row-major over (basis A) × (basis B).
    pub fn tensor(a: &Self, b: &Self) -> Result<Self> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch(a.spec().to_string(), b.spec().to_string()));
        }
        let f = a.field();
        let mut lmul = Vec::with_capacity(a.dim() * b.dim());
        let mut labels = Vec::with_capacity(a.dim() * b.dim());
        for i in 0..a.dim() {
            for j in 0..b.dim() {
                lmul.push(a.0.lmul[i].kron(&b.0.lmul[j]));
                labels.push(match (a.0.labels[i].as_str(), b.0.labels[j].as_str()) {
                    ("1", l) | (l, "1") => l.to_string(),
                    (l, r) => format!("{l}*{r}"),
                });
            }
        }
        let unit = kron_vec(f, &a.0.unit, &b.0.unit);
        let mut vars: Vec<(String, Vector<F>)> = Vec::new();
        for (name, v) in &a.0.vars {
            vars.push((name.clone(), kron_vec(f, v, &b.0.unit)));
        }
        for (name, v) in &b.0.vars {
            let mut name = name.clone();
            while vars.iter().any(|(n, _)| *n == name) {
                name.push('\'');
            }
            vars.push((name, kron_vec(f, &a.0.unit, v)));
        }
        if labels.iter().collect::<std::collections::BTreeSet<_>>().len() != labels.len() {
            labels = (0..labels.len()).map(|i| format!("e{i}")).collect();
        }
        Self::build(f, labels, lmul, unit, vars)
    }

    /// The trivial extension A ⋉ M: the space A ⊕ M with M² = 0.
    pub fn trivial_extension(a: &Self, m: &FgModule<F>) -> Result<Self> {
        if !m.algebra().same(a) {
            return Err(Error::AlgebraMismatch);
        }
        let f = a.field();
        let (n, d) = (a.dim(), m.dim());
        let mut lmul = Vec::with_capacity(n + d);
        for i in 0..n {
            lmul.push(a.0.lmul[i].direct_sum(m.action(i)));
        }
        for k in 0..d {
            let mut l = Mat::zeros(f, n + d, n + d);
            for j in 0..n {
                let col = m.action(j).col(k);
                for (r, e) in col.into_iter().enumerate() {
                    l.set(n + r, j, e);
                }
            }
            lmul.push(l);
        }
        let mut unit = a.0.unit.clone();
        unit.extend(std::iter::repeat(f.zero()).take(d));
        let mut labels = a.0.labels.clone();
        labels.extend((1..=d).map(|k| format!("u{k}")));
        let mut vars: Vec<(String, Vector<F>)> = a
            .0
            .vars
            .iter()
            .map(|(s, v)| {
                let mut v = v.clone();
                v.extend(std::iter::repeat(f.zero()).take(d));
                (s.clone(), v)
            })
            .collect();
        for (g, gen) in m.minimal_generators().iter().enumerate() {
            let mut v = vec![f.zero(); n];
            v.extend(gen.iter().cloned());
            vars.push((format!("e{}", g + 1), v));
        }
        Self::build(f, labels, lmul, unit, vars)
    }

    fn build(
        field: &F,
        labels: Vec<String>,
        lmul: Vec<Mat<F>>,
        unit: Vector<F>,
        vars: Vec<(String, Vector<F>)>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Dimension("the zero ring is not local".into()));
        }
        let lbl = |i: usize| labels[i].clone();
        for i in 0..n {
            for j in i + 1..n {
                if lmul[i].col(j) != lmul[j].col(i) {
                    return Err(Error::NotCommutative(format!("{}*{} != {}*{}", lbl(i), lbl(j), lbl(j), lbl(i))));
                }
            }
        }
        let combo = |v: &[F::Elem]| -> Mat<F> {
            let mut m = Mat::zeros(field, n, n);
            for (t, c) in v.iter().enumerate() {
                if !field.is_zero(c) {
                    m.add_scaled(c, &lmul[t]);
                }
            }
            m
        };
        for i in 0..n {
            for j in 0..n {
                let lhs = combo(&lmul[i].col(j));
                let rhs = lmul[i].mul(&lmul[j]);
                if lhs != rhs {
                    let k = (0..n).find(|&k| lhs.col(k) != rhs.col(k)).unwrap_or(0);
                    return Err(Error::NotAssociative(format!(
                        "({a}*{b})*{c} != {a}*({b}*{c})",
                        a = lbl(i),
                        b = lbl(j),
                        c = lbl(k)
                    )));
                }
            }
        }
        let lu = combo(&unit);
        if lu != Mat::identity(field, n) {
            let j = (0..n).find(|&j| lu.col(j) != basis_vector(field, n, j)).unwrap_or(0);
            return Err(Error::NoUnit(format!("1*{} != {}", lbl(j), lbl(j))));
        }

        // Residue map: each basis element must be a scalar plus a nilpotent.
        let mut aug = Vec::with_capacity(n);
        for i in 0..n {
            let lambda = scalar_part(field, &lmul, &unit, i).ok_or_else(|| {
                Error::NotLocal(format!("{} is neither a unit nor nilpotent modulo scalars", lbl(i)))
            })?;
            aug.push(lambda);
        }
        let eps = |v: &[F::Elem]| -> F::Elem {
            let mut acc = field.zero();
            for (a, b) in aug.iter().zip(v) {
                acc = field.add(&acc, &field.mul(a, b));
            }
            acc
        };
        for i in 0..n {
            for j in i..n {
                let prod = lmul[i].col(j);
                if eps(&prod) != field.mul(&aug[i], &aug[j]) {
                    return Err(Error::NotLocal(format!(
                        "{}*{} shows more than one maximal ideal",
                        lbl(i),
                        lbl(j)
                    )));
                }
            }
        }
        if !field.is_one(&eps(&unit)) {
            return Err(Error::NotLocal("the unit lies in the candidate maximal ideal".into()));
        }

        let aug_row = Mat::from_rows(field, n, vec![aug.clone()]);
        let m_basis = aug_row.kernel_vectors();
        let mul_vec = |a: &[F::Elem], b: &[F::Elem]| -> Vector<F> { combo(a).mul_vec(b) };

        // Powers of m until zero.
        let mut power = m_basis.clone();
        let mut nilpotency_index = 1;
        let mut m2 = None;
        while !power.is_empty() {
            let mut next = Echelon::new(field, n);
            for a in &m_basis {
                for b in &power {
                    next.insert(&mul_vec(a, b));
                }
            }
            if next.dim() == power.len() {
                return Err(Error::NotArtinian(format!(
                    "m^{} = m^{} != 0: the maximal ideal is not nilpotent",
                    nilpotency_index,
                    nilpotency_index + 1
                )));
            }
            nilpotency_index += 1;
            power = next.basis().to_vec();
            if m2.is_none() {
                m2 = Some(power.clone());
            }
        }
        let m2 = m2.unwrap_or_default();

        let socle_basis = if m_basis.is_empty() {
            vec![unit.clone()]
        } else {
            let stacked = m_basis
                .iter()
                .map(|v| combo(v))
                .reduce(|acc, m| acc.vstack(&m))
                .expect("m is nonzero");
            stacked.kernel_vectors()
        };

        let mut ech = Echelon::new(field, n);
        for v in &m2 {
            ech.insert(v);
        }
        let mut m_generators = Vec::new();
        let candidates = vars
            .iter()
            .map(|(_, v)| {
                let e = eps(v);
                let mut w = v.clone();
                field.axpy(&mut w, &field.neg(&e), &unit);
                w
            })
            .chain(m_basis.iter().cloned());
        for v in candidates {
            if ech.insert(&v) {
                m_generators.push(v);
            }
        }

        let local = LocalData { m_basis, socle_basis, nilpotency_index, m_generators };
        Ok(Algebra(Arc::new(Inner { field: field.clone(), dim: n, labels, lmul, unit, vars, aug, local })))
    }

    pub fn field(&self) -> &F {
        &self.0.field
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.field.spec()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn unit(&self) -> &Vector<F> {
        &self.0.unit
    }

    pub fn vars(&self) -> &[(String, Vector<F>)] {
        &self.0.vars
    }

    pub fn local(&self) -> &LocalData<F> {
        &self.0.local
    }

    pub fn embedding_dim(&self) -> usize {
        self.0.local.m_generators.len()
    }

    pub fn basis_vector(&self, i: usize) -> Vector<F> {
        basis_vector(&self.0.field, self.0.dim, i)
    }

    pub fn zero_vec(&self) -> Vector<F> {
        vec![self.0.field.zero(); self.0.dim]
    }

    /// Matrix of multiplication by the i-th basis element.
    pub fn lmul(&self, i: usize) -> &Mat<F> {
        &self.0.lmul[i]
    }

    /// Matrix of multiplication by an arbitrary element.
    pub fn mul_matrix(&self, a: &[F::Elem]) -> Mat<F> {
        let f = &self.0.field;
        let mut m = Mat::zeros(f, self.0.dim, self.0.dim);
        for (t, c) in a.iter().enumerate() {
            if !f.is_zero(c) {
                m.add_scaled(c, &self.0.lmul[t]);
            }
        }
        m
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        self.mul_matrix(a).mul_vec(b)
    }

    /// Structure constant: coefficient of e_t in e_i·e_j.
    pub fn coeff(&self, i: usize, j: usize, t: usize) -> F::Elem {
        self.0.lmul[i].get(t, j).clone()
    }

    /// Image in the residue field.
    pub fn residue(&self, a: &[F::Elem]) -> F::Elem {
        let f = &self.0.field;
        let mut acc = f.zero();
        for (x, y) in self.0.aug.iter().zip(a) {
            acc = f.add(&acc, &f.mul(x, y));
        }
        acc
    }

    pub fn in_maximal_ideal(&self, a: &[F::Elem]) -> bool {
        self.0.field.is_zero(&self.residue(a))
    }

    /// Same structure constants over the same field.
    pub fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.dim == other.0.dim
                && self.0.unit == other.0.unit
                && self.0.lmul == other.0.lmul)
    }

    /// Parses a polynomial expression in the algebra's variables, e.g. `"2*x*y - y^2 + 1"`.
    pub fn parse_element(&self, s: &str) -> Result<Vector<F>> {
        let mut p = ExprParser { alg: self, src: s, chars: s.char_indices().collect(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(v)
    }

    /// Human-readable form in terms of basis labels.
    pub fn render_element(&self, a: &[F::Elem]) -> String {
        let f = &self.0.field;
        let mut terms = Vec::new();
        for (c, l) in a.iter().zip(&self.0.labels) {
            if f.is_zero(c) {
                continue;
            }
            let cs = f.render(c);
            terms.push(match (cs.as_str(), l.as_str()) {
                (_, "1") => cs,
                ("1", _) => l.clone(),
                _ => format!("{cs}*{l}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn basis_vector<F: Field>(f: &F, n: usize, i: usize) -> Vector<F> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

fn kron_vec<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(f.mul(x, y));
        }
    }
    out
}

fn monomial_label(m: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = m
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn parse_monomial(s: &str, names: &[String]) -> Result<Vec<u32>> {
    let mut exps = vec![0u32; names.len()];
    for factor in s.split('*') {
        let factor = factor.trim();
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in monomial '{s}'")))?,
            ),
            None => (factor, 1),
        };
        let v = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable '{name}' in monomial '{s}'")))?;
        exps[v] += e;
    }
    if exps.iter().all(|&e| e == 0) {
        return Err(Error::Parse(format!("relation '{s}' is a unit")));
    }
    Ok(exps)
}

/// The scalar λ with e_i − λ nilpotent, read off from the minimal polynomial
/// of e_i, which must then be a power of (t − λ).
fn scalar_part<F: Field>(f: &F, lmul: &[Mat<F>], unit: &[F::Elem], i: usize) -> Option<F::Elem> {
    let n = unit.len();
    let mut powers: Vec<Vector<F>> = vec![unit.to_vec()];
    let coeffs = loop {
        let next = lmul[i].mul_vec(powers.last().unwrap());
        let basis = Mat::from_cols(f, n, &powers);
        if let Ok(Some(c)) = basis.solve(&next) {
            break c;
        }
        powers.push(next);
    };
    // t^k = Σ c_j t^j, so the monic polynomial has coefficient −c_j at t^j.
    let k = coeffs.len();
    let (q, b) = match f.spec() {
        FieldSpec::Prime(p) => {
            let mut q = 1usize;
            let mut b = k;
            while b % p as usize == 0 {
                b /= p as usize;
                q *= p as usize;
            }
            (q, b)
        }
        FieldSpec::Rational => (1, k),
    };
    // (t^q − λ)^b has coefficient −bλ at t^{q(b−1)}.
    let c = f.neg(&coeffs[q * (b - 1)]);
    let lambda = f.neg(&f.mul(&c, &f.inv(&f.from_i64(b as i64))?));
    // Verify nilpotency of e_i − λ.
    let mut shifted = lmul[i].clone();
    let id = Mat::identity(f, n);
    shifted.add_scaled(&f.neg(&lambda), &id);
    let mut p = shifted.clone();
    for _ in 1..n {
        p = p.mul(&shifted);
    }
    if p.is_zero() {
        Some(lambda)
    } else {
        None
    }
}

struct ExprParser<'a, F: Field> {
    alg: &'a Algebra<F>,
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a, F: Field> ExprParser<'a, F> {
    fn err(&self, msg: &str) -> Error {
        let col = self.chars.get(self.pos).map(|(i, _)| *i).unwrap_or(self.src.len()) + 1;
        Error::Parse(format!("{msg} at column {col} of '{}'", self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn expr(&mut self) -> Result<Vector<F>> {
        let f = self.alg.field();
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            if c != '+' && c != '-' {
                break;
            }
            self.pos += 1;
            let t = self.term()?;
            let s = if c == '+' { f.one() } else { f.neg(&f.one()) };
            f.axpy(&mut acc, &s, &t);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Vector<F>> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let t = self.unary()?;
            acc = self.alg.mul(&acc, &t);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Vector<F>> {
        if self.peek() == Some('-') {
            self.pos += 1;
            let mut v = self.unary()?;
            let f = self.alg.field();
            f.scale(&mut v, &f.neg(&f.one()));
            return Ok(v);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Vector<F>> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
            let e: u32 = digits.parse().map_err(|_| self.err("expected exponent"))?;
            let mut acc = self.alg.unit().clone();
            for _ in 0..e {
                acc = self.alg.mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Vector<F>> {
        let f = self.alg.field();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].1.is_ascii_digit() || self.chars[self.pos].1 == '/')
                {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
                let c = f.parse(&text).ok_or_else(|| self.err("bad number"))?;
                let mut v = self.alg.unit().clone();
                f.scale(&mut v, &c);
                Ok(v)
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len() {
                    let ch = self.chars[self.pos].1;
                    if ch.is_alphanumeric() || ch == '_' || ch == '\'' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let name: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
                self.alg
                    .vars()
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|(_, v)| v.clone())
                    .ok_or_else(|| {
                        self.pos = start;
                        self.err(&format!("unknown variable '{name}'"))
                    })
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}
