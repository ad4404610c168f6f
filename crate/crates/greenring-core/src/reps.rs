//! Graded modules and the category machinery: tensor and dual functors,
//! hom spaces, socle/head, composition counts, endomorphism radicals,
//! indecomposability and isomorphism tests.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::rngs::SmallRng;
use rand::Rng;

use crate::algebra::{GroupElt, Transposition};
use crate::error::Error;
use crate::linalg::{add_scaled, zero_vec, DMat, SVec, SpMat, SpanBasis};
use crate::scalars::{int, ParameterPoint, Scalar};
use crate::Result;

/// A finite-dimensional S3-graded module, given by the three generator
/// matrices and a degree per basis vector.  The idempotents `delta_g` act
/// as the coordinate projectors of the degree decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    pub dim: usize,
    pub degree: Vec<GroupElt>,
    /// Generator matrices indexed by `Transposition::index()`.
    pub gens: [SpMat; 3],
}

impl GradedModule {
    pub fn zero_module() -> Self {
        GradedModule {
            dim: 0,
            degree: Vec::new(),
            gens: [SpMat::zero(0, 0), SpMat::zero(0, 0), SpMat::zero(0, 0)],
        }
    }

    pub fn x(&self, t: Transposition) -> &SpMat {
        &self.gens[t.index()]
    }

    /// Indices of the degree-`g` component.
    pub fn component(&self, g: GroupElt) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.degree[i] == g).collect()
    }

    pub fn component_dim(&self, g: GroupElt) -> usize {
        self.degree.iter().filter(|&&d| d == g).count()
    }

    /// Zeroes the coordinates of `v` outside the degree-`g` component.
    pub fn project(&self, v: &[Scalar], g: GroupElt) -> SVec {
        v.iter()
            .enumerate()
            .map(|(i, x)| if self.degree[i] == g { x.clone() } else { Scalar::zero() })
            .collect()
    }
}

/// A module map, stored as its (target-dim x source-dim) matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub mat: DMat,
}

impl Morphism {
    /// Wraps a matrix after verifying that it commutes with the generator
    /// action and preserves the grading.
    pub fn verified(source: &GradedModule, target: &GradedModule, mat: DMat) -> Result<Self> {
        if mat.rows != target.dim || mat.cols != source.dim {
            return Err(Error::Domain("morphism matrix has wrong shape".into()));
        }
        for j in 0..source.dim {
            for i in 0..target.dim {
                if !mat.a[i][j].is_zero() && target.degree[i] != source.degree[j] {
                    return Err(Error::Domain("morphism does not preserve degree".into()));
                }
            }
        }
        for t in Transposition::ALL {
            let lhs = mat.mul(&source.x(t).to_dense());
            let rhs = target.x(t).to_dense().mul(&mat);
            if lhs != rhs {
                return Err(Error::Domain("morphism does not intertwine the action".into()));
            }
        }
        Ok(Morphism { mat })
    }
}

/// Verifies every defining relation on the module; the error names the
/// first violated relation.
pub fn check_module(point: &ParameterPoint, m: &GradedModule) -> Result<()> {
    for (name, ok) in crate::algebra::relation_table(point, m) {
        if !ok {
            return Err(Error::Module(name));
        }
    }
    Ok(())
}

/// Tensor product module via the coproduct.  Basis pairs are enumerated as
/// `(i, j) -> i * dim(N) + j` and the degree of a pair is the product of
/// the degrees.
pub fn tensor(m: &GradedModule, n: &GradedModule) -> GradedModule {
    let dim = m.dim * n.dim;
    let mut degree = Vec::with_capacity(dim);
    for i in 0..m.dim {
        for j in 0..n.dim {
            degree.push(m.degree[i].mul(n.degree[j]));
        }
    }
    let gens = Transposition::ALL.map(|t| {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim];
        for jm in 0..m.dim {
            let sign = int(m.degree[jm].sign() as i64);
            let conj = t.conj_by(m.degree[jm]);
            for jn in 0..n.dim {
                let c = &mut cols[jm * n.dim + jn];
                // x (x) 1 term.
                for (im, v) in &m.x(t).col[jm] {
                    c.push((im * n.dim + jn, v.clone()));
                }
                // sgn(h) delta_h (x) x_(h^-1 (ij) h) term at h = deg(jm).
                for (in_, v) in &n.x(conj).col[jn] {
                    c.push((jm * n.dim + in_, v * &sign));
                }
            }
        }
        SpMat::from_cols(dim, cols)
    });
    GradedModule { dim, degree, gens }
}

/// Dual module: the generators act on the dual basis through the transpose
/// of the antipode action, and degrees invert.
pub fn dual(m: &GradedModule) -> GradedModule {
    let degree = m.degree.iter().map(|g| g.inv()).collect();
    let gens = Transposition::ALL.map(|t| {
        // S(x_t) = -sum_h sgn(h) x_(h^-1 t h) delta_(h^-1 t); on a column of
        // degree g exactly one h contributes, namely h = t g^-1.
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m.dim];
        for (j, col) in cols.iter_mut().enumerate() {
            let g = m.degree[j];
            let h = t.group().mul(g.inv());
            let sign = int(-(h.sign() as i64));
            let conj = t.conj_by(h);
            for (i, v) in &m.x(conj).col[j] {
                col.push((*i, v * &sign));
            }
        }
        SpMat::from_cols(m.dim, cols).transpose()
    });
    GradedModule { dim: m.dim, degree, gens }
}

/// Block direct sum.
pub fn direct_sum(m: &GradedModule, n: &GradedModule) -> GradedModule {
    let dim = m.dim + n.dim;
    let mut degree = m.degree.clone();
    degree.extend_from_slice(&n.degree);
    let gens = Transposition::ALL.map(|t| {
        let mut cols = Vec::with_capacity(dim);
        for j in 0..m.dim {
            cols.push(m.x(t).col[j].clone());
        }
        for j in 0..n.dim {
            cols.push(n.x(t).col[j].iter().map(|(i, v)| (i + m.dim, v.clone())).collect());
        }
        SpMat::from_cols(dim, cols)
    });
    GradedModule { dim, degree, gens }
}

/// Basis of the space of module maps `M -> N`: all degree-preserving
/// matrices commuting with the three generator matrices, computed as the
/// kernel of the stacked intertwiner system.
pub fn hom_space(m: &GradedModule, n: &GradedModule) -> Vec<DMat> {
    if m.dim == 0 || n.dim == 0 {
        return Vec::new();
    }
    // Unknowns: entries T[i][j] with matching degrees.
    let mut var: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..n.dim {
        for j in 0..m.dim {
            if n.degree[i] == m.degree[j] {
                let k = var.len();
                var.insert((i, j), k);
            }
        }
    }
    let nvars = var.len();
    let mut rows: Vec<SVec> = Vec::new();
    for t in Transposition::ALL {
        let xm = m.x(t);
        let xn_t = n.x(t).transpose(); // column i of the transpose lists (k, Xn[i,k])
        for j in 0..m.dim {
            for i in 0..n.dim {
                // Equation entry (i,j) of T Xm - Xn T = 0; nonzero only when
                // deg_n(i) = t * deg_m(j).
                if n.degree[i] != t.group().mul(m.degree[j]) {
                    continue;
                }
                let mut row = zero_vec(nvars);
                let mut nonzero = false;
                for (k, c) in &xm.col[j] {
                    if let Some(&v) = var.get(&(i, *k)) {
                        row[v] += c;
                        nonzero = true;
                    }
                }
                for (k, c) in &xn_t.col[i] {
                    if let Some(&v) = var.get(&(*k, j)) {
                        row[v] -= c;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        // No constraints: every degree-preserving matrix is a morphism.
        (0..nvars)
            .map(|k| {
                let mut v = zero_vec(nvars);
                v[k] = Scalar::one();
                v
            })
            .collect()
    } else {
        DMat::from_rows(rows).nullspace()
    };
    basis
        .into_iter()
        .map(|sol| {
            let mut mat = DMat::zero(n.dim, m.dim);
            for (&(i, j), &k) in &var {
                if !sol[k].is_zero() {
                    mat.a[i][j] = sol[k].clone();
                }
            }
            mat
        })
        .collect()
}

/// Closes a set of vectors under the generator action and the degree
/// projectors; returns the spanned submodule with an adapted homogeneous
/// basis and the inclusion map.
pub fn submodule(m: &GradedModule, gens: &[SVec]) -> (GradedModule, Morphism) {
    let mut span = SpanBasis::new(m.dim);
    let mut degs: Vec<GroupElt> = Vec::new();
    let mut frontier: Vec<(SVec, GroupElt)> = Vec::new();
    for v in gens {
        for g in GroupElt::ALL {
            let part = m.project(v, g);
            if !crate::linalg::is_zero_vec(&part) && span.insert(&part) {
                degs.push(g);
                frontier.push((part, g));
            }
        }
    }
    while let Some((v, g)) = frontier.pop() {
        for t in Transposition::ALL {
            let w = m.x(t).apply(&v);
            if !crate::linalg::is_zero_vec(&w) && span.insert(&w) {
                let h = t.group().mul(g);
                degs.push(h);
                frontier.push((w, h));
            }
        }
    }
    let sub_dim = span.rank();
    let gens_mats = Transposition::ALL.map(|t| {
        let mut cols = Vec::with_capacity(sub_dim);
        for b in &span.basis {
            let img = m.x(t).apply(b);
            let coords = span.coords(&img).expect("submodule closure is invariant");
            let col = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            cols.push(col);
        }
        SpMat::from_cols(sub_dim, cols)
    });
    let sub = GradedModule { dim: sub_dim, degree: degs, gens: gens_mats };
    let incl = DMat::from_cols(span.basis.clone(), m.dim);
    (sub, Morphism { mat: incl })
}

/// Quotient by an invariant subspace spanned by homogeneous vectors;
/// returns the quotient with induced action and the projection map.
pub fn quotient(m: &GradedModule, sub_basis: &[SVec]) -> Result<(GradedModule, Morphism)> {
    // Invariance check.
    let mut span = SpanBasis::new(m.dim);
    for v in sub_basis {
        span.insert(v);
    }
    for v in sub_basis {
        for t in Transposition::ALL {
            if !span.contains(&m.x(t).apply(v)) {
                return Err(Error::Domain("subspace is not invariant".into()));
            }
        }
    }
    let mut rows = DMat::from_rows(sub_basis.to_vec());
    if sub_basis.is_empty() {
        rows = DMat::zero(0, m.dim);
    }
    let pivots = rows.rref();
    let mut is_pivot = vec![false; m.dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let reps: Vec<usize> = (0..m.dim).filter(|&i| !is_pivot[i]).collect();
    let qdim = reps.len();
    let reduce = |v: &[Scalar]| -> SVec {
        let mut w = v.to_vec();
        for (r, &p) in pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let f = -w[p].clone();
                add_scaled(&mut w, &rows.a[r], &f);
            }
        }
        reps.iter().map(|&i| w[i].clone()).collect()
    };
    let degree: Vec<GroupElt> = reps.iter().map(|&i| m.degree[i]).collect();
    let gens = Transposition::ALL.map(|t| {
        let mut cols = Vec::with_capacity(qdim);
        for &i in &reps {
            let img = m.x(t).column_dense(i);
            let q = reduce(&img);
            cols.push(
                q.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>(),
            );
        }
        SpMat::from_cols(qdim, cols)
    });
    let quot = GradedModule { dim: qdim, degree, gens };
    let mut proj = DMat::zero(qdim, m.dim);
    for j in 0..m.dim {
        let mut e = zero_vec(m.dim);
        e[j] = Scalar::one();
        let q = reduce(&e);
        for (i, c) in q.into_iter().enumerate() {
            proj.a[i][j] = c;
        }
    }
    Ok((quot, Morphism { mat: proj }))
}

/// Vectors spanning the images of all maps from the two simple modules:
/// the largest semisimple submodule.
fn socle_vectors(point: &ParameterPoint, m: &GradedModule) -> Vec<SVec> {
    let mut out: Vec<SVec> = Vec::new();
    // Maps from the trivial simple: degree-e vectors killed by every x.
    let e_idx = m.component(GroupElt::E);
    if !e_idx.is_empty() {
        let mut rows: Vec<SVec> = Vec::new();
        for t in Transposition::ALL {
            // Rows of X_t restricted to the e-columns.
            let mut block: Vec<SVec> = vec![zero_vec(e_idx.len()); m.dim];
            for (cpos, &j) in e_idx.iter().enumerate() {
                for (i, v) in &m.x(t).col[j] {
                    block[*i][cpos] = v.clone();
                }
            }
            rows.extend(block.into_iter().filter(|r| !crate::linalg::is_zero_vec(r)));
        }
        let sols = if rows.is_empty() {
            DMat::zero(0, e_idx.len()).nullspace()
        } else {
            DMat::from_rows(rows).nullspace()
        };
        for s in sols {
            let mut v = zero_vec(m.dim);
            for (pos, &j) in e_idx.iter().enumerate() {
                v[j] = s[pos].clone();
            }
            out.push(v);
        }
    }
    // Maps from the five-dimensional simple.
    let l = crate::zoo::build_simple(point, crate::zoo::SimpleType::L)
        .expect("simple module always builds");
    for t_mat in hom_space(&l, m) {
        for j in 0..l.dim {
            let col = t_mat.col(j);
            if !crate::linalg::is_zero_vec(&col) {
                out.push(col);
            }
        }
    }
    out
}

/// The socle as a submodule with inclusion.
pub fn socle(point: &ParameterPoint, m: &GradedModule) -> (GradedModule, Morphism) {
    submodule(m, &socle_vectors(point, m))
}

/// Homogeneous basis of the radical (the intersection of the kernels of
/// all maps to semisimples), computed as the pairing-perp of the socle of
/// the dual.
pub fn radical_vectors(point: &ParameterPoint, m: &GradedModule) -> Vec<SVec> {
    let d = dual(m);
    let socv = socle_vectors(point, &d);
    if socv.is_empty() {
        return (0..m.dim)
            .map(|i| {
                let mut v = zero_vec(m.dim);
                v[i] = Scalar::one();
                v
            })
            .collect();
    }
    // The dual-basis pairing is coordinatewise, so the perp is a plain
    // nullspace; socle vectors are homogeneous, hence so is the kernel.
    DMat::from_rows(socv).nullspace()
}

/// The head `M/rad(M)` with projection.
pub fn head(point: &ParameterPoint, m: &GradedModule) -> Result<(GradedModule, Morphism)> {
    let rad = radical_vectors(point, m);
    quotient(m, &rad)
}

/// Composition-factor counts `([M : L_e], [M : L])`, read off the degree
/// components at `e` and `(123)`.
pub fn composition_counts(m: &GradedModule) -> Result<(usize, usize)> {
    let n_e = m.component_dim(GroupElt::E);
    let n_l = m.component_dim(GroupElt::C123);
    if m.dim != n_e + 5 * n_l {
        return Err(Error::Count(alloc::format!(
            "dim {} != {} + 5*{}",
            m.dim,
            n_e,
            n_l
        )));
    }
    Ok((n_e, n_l))
}

/// Endomorphism algebra basis together with a basis of its Jacobson
/// radical (the trace-form radical, valid in characteristic zero).
pub fn end_radical(m: &GradedModule) -> (Vec<DMat>, Vec<DMat>) {
    let ends = hom_space(m, m);
    let k = ends.len();
    if k == 0 {
        return (ends, Vec::new());
    }
    let mut gram = DMat::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            gram.a[i][j] = ends[i].mul(&ends[j]).trace();
        }
    }
    let rad = gram
        .nullspace()
        .into_iter()
        .map(|combo| {
            let mut mat = DMat::zero(m.dim, m.dim);
            for (c, e) in combo.iter().zip(&ends) {
                if !c.is_zero() {
                    mat = mat.add_scaled(e, c);
                }
            }
            mat
        })
        .collect();
    (ends, rad)
}

/// True iff `End(M)/rad` is one-dimensional.
pub fn is_indecomposable(m: &GradedModule) -> Result<bool> {
    if m.dim == 0 {
        return Err(Error::Domain("the zero module is neither".into()));
    }
    let (ends, rad) = end_radical(m);
    Ok(ends.len() - rad.len() == 1)
}

/// Isomorphism test: equal dimensions and an invertible element of the hom
/// space, searched through seeded random combinations with a deterministic
/// decomposition-label fallback.
pub fn iso_test(
    point: &ParameterPoint,
    m: &GradedModule,
    n: &GradedModule,
    rng: &mut SmallRng,
) -> bool {
    if m.dim != n.dim {
        return false;
    }
    if m.dim == 0 {
        return true;
    }
    let homs = hom_space(m, n);
    if homs.is_empty() {
        return false;
    }
    for h in &homs {
        // Single basis elements first; often one is already invertible.
        if h.rank() == m.dim {
            return true;
        }
    }
    for _ in 0..20 {
        let mut cand = DMat::zero(n.dim, m.dim);
        for h in &homs {
            let c = int(rng.gen_range(-20i64..=20));
            if !c.is_zero() {
                cand = cand.add_scaled(h, &c);
            }
        }
        if cand.rank() == m.dim {
            return true;
        }
    }
    // Deterministic fallback: compare decomposition labels.
    let dm = crate::decomp::decompose(point, m, rng);
    let dn = crate::decomp::decompose(point, n, rng);
    match (dm, dn) {
        (Ok(a), Ok(b)) => a.summands == b.summands,
        _ => false,
    }
}

/// Conjugates the module by a random degree-preserving change of basis
/// (unit-triangular blocks per degree, so the inverse is exact).
pub fn random_base_change(m: &GradedModule, rng: &mut SmallRng) -> GradedModule {
    let mut t = DMat::identity(m.dim);
    for g in GroupElt::ALL {
        let idx = m.component(g);
        let k = idx.len();
        // Unit lower times unit upper triangular with small integer entries.
        for a in 0..k {
            for b in 0..a {
                let c = int(rng.gen_range(-2i64..=2));
                if !c.is_zero() {
                    t.a[idx[a]][idx[b]] = c;
                }
            }
        }
        for a in 0..k {
            for b in (a + 1)..k {
                let c = int(rng.gen_range(-2i64..=2));
                if !c.is_zero() {
                    t.a[idx[a]][idx[b]] = c.clone();
                }
            }
        }
    }
    let tinv = t.inverse().expect("triangular base change is invertible");
    let ts = t.to_sparse();
    let tinvs = tinv.to_sparse();
    let gens = Transposition::ALL.map(|tr| tinvs.mul(&m.x(tr).mul(&ts)));
    GradedModule { dim: m.dim, degree: m.degree.clone(), gens }
}
