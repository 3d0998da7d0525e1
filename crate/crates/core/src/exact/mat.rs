use std::fmt;

use super::field::Field;
use crate::Error;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| self.field.render(e)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Mat { field: field.clone(), rows: n, cols, data }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(field: &F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), rows, "column length mismatch");
            for (r, e) in v.iter().enumerate() {
                m.data[r * m.cols + c] = e.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [F::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if !self.field.is_zero(a) {
                    self.field.axpy(dst, a, other.row(k));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scaled(&self, a: &F::Elem) -> Mat<F> {
        let mut m = self.clone();
        self.field.scale(&mut m.data, a);
        m
    }

    /// `self += a * other`.
    pub fn add_scaled(&mut self, a: &F::Elem, other: &Mat<F>) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, a, &other.data);
    }

    pub fn hstack(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Mat { field: self.field.clone(), rows: self.rows, cols, data }
    }

    pub fn vstack(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Mat<F>) -> Mat<F> {
        let mut m = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat<F>) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let dst = &mut self.data[(r0 + r) * self.cols + c0..(r0 + r) * self.cols + c0 + block.cols];
            dst.clone_from_slice(block.row(r));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat<F> {
        let mut m = Self::zeros(&self.field, rows, cols);
        for r in 0..rows {
            m.row_mut(r)
                .clone_from_slice(&self.data[(r0 + r) * self.cols + c0..(r0 + r) * self.cols + c0 + cols]);
        }
        m
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Mat<F>) -> Mat<F> {
        let f = &self.field;
        let mut m = Self::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if f.is_zero(a) {
                    continue;
                }
                m.set_block(r * other.rows, c * other.cols, &other.scaled(a));
            }
        }
        m
    }

    /// Reduced row-echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat<F>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..cols {
            if prow == self.rows {
                break;
            }
            let Some(src) = (prow..self.rows).find(|&r| !f.is_zero(&self.data[r * cols + c])) else {
                continue;
            };
            if src != prow {
                for k in 0..cols {
                    self.data.swap(src * cols + k, prow * cols + k);
                }
            }
            let inv = f.inv(&self.data[prow * cols + c]).expect("nonzero pivot");
            f.scale(&mut self.data[prow * cols..(prow + 1) * cols], &inv);
            let (head, tail) = self.data.split_at_mut(prow * cols);
            let (pivot_row, rest) = tail.split_at_mut(cols);
            let pivot_row = &pivot_row[c..];
            for r in 0..self.rows {
                if r == prow {
                    continue;
                }
                let row = if r < prow {
                    &mut head[r * cols..(r + 1) * cols]
                } else {
                    let o = (r - prow - 1) * cols;
                    &mut rest[o..o + cols]
                };
                if f.is_zero(&row[c]) {
                    continue;
                }
                let factor = f.neg(&row[c]);
                f.axpy(&mut row[c..], &factor, pivot_row);
            }
            pivots.push(c);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Minimal resolutions make many differentials vanish outright.
        if self.data.iter().all(|a| self.field.is_zero(a)) {
            return 0;
        }
        self.clone().forward_rank()
    }

    /// Rank by forward elimination only; rows above a pivot are left alone.
    fn forward_rank(mut self) -> usize {
        let f = self.field.clone();
        let cols = self.cols;
        let mut prow = 0;
        for c in 0..cols {
            if prow == self.rows {
                break;
            }
            let Some(src) = (prow..self.rows).find(|&r| !f.is_zero(&self.data[r * cols + c])) else {
                continue;
            };
            if src != prow {
                for k in c..cols {
                    self.data.swap(src * cols + k, prow * cols + k);
                }
            }
            let inv = f.inv(&self.data[prow * cols + c]).expect("nonzero pivot");
            let (head, rest) = self.data.split_at_mut((prow + 1) * cols);
            let pivot_row = &head[prow * cols + c..];
            for row in rest.chunks_mut(cols) {
                if f.is_zero(&row[c]) {
                    continue;
                }
                let factor = f.neg(&f.mul(&row[c], &inv));
                f.axpy(&mut row[c..], &factor, pivot_row);
            }
            prow += 1;
        }
        prow
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_vectors(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            out.push(v);
        }
        out
    }

    /// Null-space basis as the columns of a `cols x nullity` matrix.
    pub fn kernel_basis(&self) -> Mat<F> {
        Mat::from_cols(&self.field, self.cols, &self.kernel_vectors())
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>, Error> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Mat::from_cols(&self.field, self.rows, &[b.to_vec()]);
        Ok(self.solve_many(&rhs)?.map(|x| x.col(0)))
    }

    /// Solve `self * X = B` for all columns of `B` at once.
    pub fn solve_many(&self, b: &Mat<F>) -> Result<Option<Mat<F>>, Error> {
        if b.rows != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side with {} rows for {} rows",
                b.rows, self.rows
            )));
        }
        let f = &self.field;
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(f, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, aug.get(i, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat<F>> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve_many(&Mat::identity(&self.field, self.rows)).ok()??;
        if self.mul(&x) == Mat::identity(&self.field, self.rows) {
            Some(x)
        } else {
            None
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat<F> {
        let mut m = Self::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c).clone();
            }
        }
        m
    }
}

/// Incrementally maintained reduced echelon basis of a subspace of F^n.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    len: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, len: usize) -> Self {
        Echelon { field: field.clone(), len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[p]) {
                let a = f.neg(&v[p]);
                f.axpy(v, &a, row);
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|e| self.field.is_zero(e))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.len);
        let f = self.field.clone();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|e| !f.is_zero(e)) else {
            return false;
        };
        let inv = f.inv(&w[p]).unwrap();
        f.scale(&mut w, &inv);
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[p]) {
                let a = f.neg(&row[p]);
                f.axpy(row, &a, &w);
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Fp, Rationals};

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let f = f2();
        let (r, p) = Mat::identity(&f, 2).rref();
        assert_eq!(r, Mat::identity(&f, 2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_zero_matrix() {
        let f = f2();
        let z = Mat::zeros(&f, 3, 2);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_over_f2_hand_reduction() {
        let f = f2();
        let a = Mat::from_rows(&f, 2, vec![vec![1, 1], vec![1, 1]]);
        let (r, p) = a.rref();
        assert_eq!(r, Mat::from_rows(&f, 2, vec![vec![1, 1], vec![0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let f = Fp::new(5).unwrap();
        assert_eq!(Mat::identity(&f, 3).kernel_basis().cols(), 0);
        let k = Mat::zeros(&f, 3, 3).kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank(), 3);
    }

    #[test]
    fn kernel_over_q_is_proportional_to_minus_two_one() {
        let q = Rationals;
        let a = Mat::from_rows(&q, 2, vec![vec![q.from_i64(1), q.from_i64(2)]]);
        let k = a.kernel_vectors();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // v = t * (-2, 1)
        assert_eq!(q.mul(&v[1], &q.from_i64(-2)), v[0]);
        assert!(!q.is_zero(&v[1]));
    }

    #[test]
    fn solve_examples() {
        let f = Fp::new(3).unwrap();
        let a = Mat::from_rows(&f, 1, vec![vec![2]]);
        assert_eq!(a.solve(&[1]).unwrap(), Some(vec![2]));
        let z = Mat::zeros(&f, 1, 1);
        assert_eq!(z.solve(&[1]).unwrap(), None);
        let id = Mat::identity(&f, 3);
        assert_eq!(id.solve(&[1, 2, 0]).unwrap(), Some(vec![1, 2, 0]));
        assert!(id.solve(&[1]).is_err());
    }

    #[test]
    fn echelon_tracks_span() {
        let f = Fp::new(7).unwrap();
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(&[1, 2, 3]));
        assert!(!e.insert(&[2, 4, 6]));
        assert!(e.insert(&[0, 1, 0]));
        assert!(e.contains(&[1, 0, 3]));
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(e.dim(), 2);
    }
}
