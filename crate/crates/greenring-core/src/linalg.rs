//! Exact linear algebra over the rationals.
//!
//! Generator matrices of modules are stored column-sparse (they have a
//! handful of entries per column even on 300-dimensional tensor products);
//! solves, ranks and nullspaces run on dense matrices with zero-skipping
//! elimination.  Everything is exact.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::scalars::Scalar;

/// Dense vector of scalars.
pub type SVec = Vec<Scalar>;

pub fn zero_vec(n: usize) -> SVec {
    vec![Scalar::zero(); n]
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_scaled(dst: &mut [Scalar], src: &[Scalar], c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += s * c;
        }
    }
}

/// Column-sparse matrix: `col[j]` lists the nonzero entries of column `j`
/// as `(row, value)` pairs sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpMat {
    pub rows: usize,
    pub cols: usize,
    pub col: Vec<Vec<(usize, Scalar)>>,
}

impl SpMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SpMat { rows, cols, col: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let col = (0..n).map(|j| vec![(j, Scalar::one())]).collect();
        SpMat { rows: n, cols: n, col }
    }

    /// Builds from per-column entry lists, merging duplicates and dropping
    /// zeros.
    pub fn from_cols(rows: usize, cols: Vec<Vec<(usize, Scalar)>>) -> Self {
        let n = cols.len();
        let col = cols.into_iter().map(normalize_col).collect();
        SpMat { rows, cols: n, col }
    }

    pub fn nnz(&self) -> usize {
        self.col.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.col.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.col[c].binary_search_by_key(&r, |e| e.0) {
            Ok(i) => self.col[c][i].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// `y = A v` for a dense vector.
    pub fn apply(&self, v: &[Scalar]) -> SVec {
        debug_assert_eq!(v.len(), self.cols);
        let mut y = zero_vec(self.rows);
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, a) in &self.col[j] {
                y[*i] += a * vj;
            }
        }
        y
    }

    /// Applies to a sparse column, returning a normalized sparse column.
    pub fn apply_sparse(&self, v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (j, vj) in v {
            for (i, a) in &self.col[*j] {
                acc.push((*i, a * vj));
            }
        }
        normalize_col(acc)
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SpMat) -> SpMat {
        debug_assert_eq!(self.cols, rhs.rows);
        let col = rhs.col.iter().map(|c| self.apply_sparse(c)).collect();
        SpMat { rows: self.rows, cols: rhs.cols, col }
    }

    pub fn add_scaled(&self, rhs: &SpMat, c: &Scalar) -> SpMat {
        debug_assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let col = self
            .col
            .iter()
            .zip(&rhs.col)
            .map(|(a, b)| {
                let mut acc = a.clone();
                for (i, v) in b {
                    acc.push((*i, v * c));
                }
                normalize_col(acc)
            })
            .collect();
        SpMat { rows: self.rows, cols: self.cols, col }
    }

    pub fn add(&self, rhs: &SpMat) -> SpMat {
        self.add_scaled(rhs, &Scalar::one())
    }

    pub fn sub(&self, rhs: &SpMat) -> SpMat {
        self.add_scaled(rhs, &-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> SpMat {
        if c.is_zero() {
            return SpMat::zero(self.rows, self.cols);
        }
        let col = self
            .col
            .iter()
            .map(|cl| cl.iter().map(|(i, v)| (*i, v * c)).collect())
            .collect();
        SpMat { rows: self.rows, cols: self.cols, col }
    }

    pub fn transpose(&self) -> SpMat {
        let mut col = vec![Vec::new(); self.rows];
        for (j, cl) in self.col.iter().enumerate() {
            for (i, v) in cl {
                col[*i].push((j, v.clone()));
            }
        }
        SpMat { rows: self.cols, cols: self.rows, col }
    }

    /// Keeps only the rows selected by the predicate (a degree projector).
    pub fn filter_rows(&self, keep: impl Fn(usize) -> bool) -> SpMat {
        let col = self
            .col
            .iter()
            .map(|cl| cl.iter().filter(|(i, _)| keep(*i)).cloned().collect())
            .collect();
        SpMat { rows: self.rows, cols: self.cols, col }
    }

    pub fn to_dense(&self) -> DMat {
        let mut m = DMat::zero(self.rows, self.cols);
        for (j, cl) in self.col.iter().enumerate() {
            for (i, v) in cl {
                m.a[*i][j] = v.clone();
            }
        }
        m
    }

    pub fn column_dense(&self, j: usize) -> SVec {
        let mut v = zero_vec(self.rows);
        for (i, a) in &self.col[j] {
            v[*i] = a.clone();
        }
        v
    }
}

fn normalize_col(mut entries: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
    entries.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<SVec>,
}

impl DMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        DMat { rows, cols, a: vec![zero_vec(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DMat::zero(n, n);
        for i in 0..n {
            m.a[i][i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<SVec>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|x| x.len() == c));
        DMat { rows: r, cols: c, a: rows }
    }

    pub fn from_cols(cols: Vec<SVec>, rows: usize) -> Self {
        let mut m = DMat::zero(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.a[i][j] = v.clone();
            }
        }
        m
    }

    pub fn col(&self, j: usize) -> SVec {
        self.a.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> DMat {
        let mut m = DMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.a[i][j].is_zero() {
                    m.a[j][i] = self.a[i][j].clone();
                }
            }
        }
        m
    }

    pub fn mul(&self, rhs: &DMat) -> DMat {
        debug_assert_eq!(self.cols, rhs.rows);
        let mut out = DMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = &self.a[i][k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.a[k][j];
                    if !b.is_zero() {
                        out.a[i][j] += aik * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> SVec {
        debug_assert_eq!(v.len(), self.cols);
        let mut y = zero_vec(self.rows);
        for (i, row) in self.a.iter().enumerate() {
            let mut acc = Scalar::zero();
            for (x, r) in v.iter().zip(row) {
                if !r.is_zero() && !x.is_zero() {
                    acc += r * x;
                }
            }
            y[i] = acc;
        }
        y
    }

    pub fn add_scaled(&self, rhs: &DMat, c: &Scalar) -> DMat {
        debug_assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            add_scaled(&mut out.a[i], &rhs.a[i], c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|r| is_zero_vec(r))
    }

    pub fn to_sparse(&self) -> SpMat {
        let mut cols = vec![Vec::new(); self.cols];
        for (i, row) in self.a.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    cols[j].push((i, v.clone()));
                }
            }
        }
        SpMat::from_cols(self.rows, cols)
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // Pick the sparsest nonzero pivot row to limit fill-in.
            let mut best: Option<(usize, usize)> = None;
            for i in r..self.rows {
                if !self.a[i][c].is_zero() {
                    let w = self.a[i].iter().filter(|x| !x.is_zero()).count();
                    if best.map_or(true, |(_, bw)| w < bw) {
                        best = Some((i, w));
                    }
                }
            }
            let Some((p, _)) = best else { continue };
            self.a.swap(r, p);
            let inv = self.a[r][c].recip();
            for v in self.a[r].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            let pivot_row = self.a[r].clone();
            for i in 0..self.rows {
                if i != r && !self.a[i][c].is_zero() {
                    let f = -self.a[i][c].clone();
                    add_scaled(&mut self.a[i], &pivot_row, &f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<SVec> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = zero_vec(self.cols);
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.a[r][f].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b` for each column of `b`; `None` if inconsistent.
    pub fn solve(&self, b: &DMat) -> Option<DMat> {
        debug_assert_eq!(self.rows, b.rows);
        let mut aug = DMat::zero(self.rows, self.cols + b.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.a[i][j] = self.a[i][j].clone();
            }
            for j in 0..b.cols {
                aug.a[i][self.cols + j] = b.a[i][j].clone();
            }
        }
        let pivots = aug.rref();
        // Inconsistent if any pivot lands in the augmented block.
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = DMat::zero(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.a[p][j] = aug.a[r][self.cols + j].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<DMat> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&DMat::identity(self.rows))?;
        // solve() returns some solution; for square full-rank systems it is
        // the inverse, otherwise the product check fails.
        if self.mul(&x) == DMat::identity(self.rows) {
            Some(x)
        } else {
            None
        }
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self.a[i][i];
        }
        t
    }
}

/// Incrementally built echelonized span with coordinates relative to the
/// inserted basis vectors.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    pub dim: usize,
    /// The inserted vectors that increased the rank, in insertion order.
    pub basis: Vec<SVec>,
    ech: Vec<SVec>,
    /// `expr[i]` expresses `ech[i]` in terms of `basis`.
    expr: Vec<SVec>,
    pivot: Vec<usize>,
}

impl SpanBasis {
    pub fn new(dim: usize) -> Self {
        SpanBasis { dim, basis: Vec::new(), ech: Vec::new(), expr: Vec::new(), pivot: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn reduce_tracked(&self, v: &mut SVec, combo: &mut SVec) {
        for (k, &p) in self.pivot.iter().enumerate() {
            if !v[p].is_zero() {
                let f = v[p].clone();
                let row = self.ech[k].clone();
                add_scaled(v, &row, &-f.clone());
                let e = self.expr[k].clone();
                for (c, ei) in combo.iter_mut().zip(&e) {
                    *c -= ei * &f;
                }
            }
        }
    }

    /// Inserts `v` into the span; returns true if the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        let mut combo = zero_vec(self.basis.len());
        self.reduce_tracked(&mut w, &mut combo);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // Record the original vector as a basis member; the echelon row is
        // w = v - (reductions), so w = v*1 + basis*combo.
        self.basis.push(v.to_vec());
        combo.push(Scalar::one());
        for e in self.expr.iter_mut() {
            e.push(Scalar::zero());
        }
        let inv = w[p].recip();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for c in combo.iter_mut() {
            if !c.is_zero() {
                *c *= &inv;
            }
        }
        self.ech.push(w);
        self.expr.push(combo);
        self.pivot.push(p);
        true
    }

    /// Coordinates of `v` in terms of the recorded basis, or `None` when
    /// `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<SVec> {
        let mut w = v.to_vec();
        let mut combo = zero_vec(self.basis.len());
        self.reduce_tracked(&mut w, &mut combo);
        if is_zero_vec(&w) {
            Some(combo.iter().map(|c| -c.clone()).collect())
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        let mut combo = zero_vec(self.basis.len());
        self.reduce_tracked(&mut w, &mut combo);
        is_zero_vec(&w)
    }
}

/// Dense univariate polynomial with rational coefficients (used for the
/// pencil determinant in parameter recovery).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Scalar>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }

    /// `a + b x`
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        let mut p = Poly(vec![a, b]);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Scalar::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] += c;
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|x| x * c).collect())
    }

    /// `(x - r)^k` scaled by `lead`.
    pub fn scaled_linear_power(lead: &Scalar, r: &Scalar, k: usize) -> Poly {
        let mut p = Poly::constant(lead.clone());
        let lin = Poly::linear(-r.clone(), Scalar::one());
        for _ in 0..k {
            p = p.mul(&lin);
        }
        p
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
/// Intended for tiny matrices (pencil sizes up to the omega bound).
pub fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(Scalar::one());
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect())
            .collect();
        let term = m[0][j].mul(&poly_det(&minor));
        det = if j % 2 == 0 { det.add(&term) } else { det.add(&term.neg()) };
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{frac, int};

    #[test]
    fn rref_and_nullspace() {
        // x + 2y + 3z = 0 has a 2-dimensional kernel.
        let m = DMat::from_rows(vec![vec![int(1), int(2), int(3)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(is_zero_vec(&m.apply(v)));
        }
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_and_inverse() {
        let m = DMat::from_rows(vec![
            vec![int(2), int(1)],
            vec![int(1), int(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), DMat::identity(2));
        assert_eq!(inv.a[0][0], int(1));
        assert_eq!(inv.a[0][1], int(-1));
        // Singular matrix has no inverse.
        let s = DMat::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn sparse_dense_round_trip() {
        let mut d = DMat::zero(3, 2);
        d.a[0][1] = frac(1, 2);
        d.a[2][0] = int(-3);
        let s = d.to_sparse();
        assert_eq!(s.nnz(), 2);
        assert_eq!(s.to_dense(), d);
        let v = s.apply(&[int(1), int(2)]);
        assert_eq!(v, vec![int(1), int(0), int(-3)]);
    }

    #[test]
    fn span_basis_coords() {
        let mut sb = SpanBasis::new(3);
        assert!(sb.insert(&[int(1), int(1), int(0)]));
        assert!(sb.insert(&[int(0), int(2), int(0)]));
        assert!(!sb.insert(&[int(2), int(0), int(0)]));
        let c = sb.coords(&[int(3), int(1), int(0)]).unwrap();
        // 3*(1,1,0) - 1*(0,2,0) = (3,1,0)
        assert_eq!(c, vec![int(3), int(-1)]);
        assert!(sb.coords(&[int(0), int(0), int(1)]).is_none());
    }

    #[test]
    fn poly_det_of_pencil() {
        // det(x*I2 - diag(1,2)) = (x-1)(x-2)
        let m = vec![
            vec![Poly::linear(int(-1), int(1)), Poly::zero()],
            vec![Poly::zero(), Poly::linear(int(-2), int(1))],
        ];
        let d = poly_det(&m);
        assert_eq!(d, Poly(vec![int(2), int(-3), int(1)]));
    }
}
