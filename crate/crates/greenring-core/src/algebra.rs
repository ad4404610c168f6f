//! The Hopf algebra itself: the group S3, generator words, coproduct /
//! antipode / counit tables, the distinguished elements, and the concrete
//! 72-dimensional matrix realization check.
//!
//! Products in S3 compose right-to-left: `g * h` applies `h` first.  All
//! degree bookkeeping in the module category follows this convention;
//! a basis vector of degree `h` hit by `x_(ij)` lands in degree `(ij)h`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::SpMat;
use crate::reps::GradedModule;
use crate::scalars::{int, ParameterPoint, Scalar, Triple};
use crate::Result;

/// An element of the symmetric group S3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElt {
    E,
    T12,
    T13,
    T23,
    C123,
    C132,
}

use GroupElt::*;

impl GroupElt {
    pub const ALL: [GroupElt; 6] = [E, T12, T13, T23, C123, C132];

    /// One-line notation on {0,1,2}.
    fn perm(self) -> [usize; 3] {
        match self {
            E => [0, 1, 2],
            T12 => [1, 0, 2],
            T13 => [2, 1, 0],
            T23 => [0, 2, 1],
            C123 => [1, 2, 0],
            C132 => [2, 0, 1],
        }
    }

    fn from_perm(p: [usize; 3]) -> GroupElt {
        match p {
            [0, 1, 2] => E,
            [1, 0, 2] => T12,
            [2, 1, 0] => T13,
            [0, 2, 1] => T23,
            [1, 2, 0] => C123,
            [2, 0, 1] => C132,
            _ => unreachable!("not a permutation of 3 letters"),
        }
    }

    /// `self * rhs`, applying `rhs` first.
    pub fn mul(self, rhs: GroupElt) -> GroupElt {
        let a = self.perm();
        let b = rhs.perm();
        GroupElt::from_perm([a[b[0]], a[b[1]], a[b[2]]])
    }

    pub fn inv(self) -> GroupElt {
        let p = self.perm();
        let mut q = [0; 3];
        for (i, &pi) in p.iter().enumerate() {
            q[pi] = i;
        }
        GroupElt::from_perm(q)
    }

    pub fn sign(self) -> i8 {
        match self {
            E | C123 | C132 => 1,
            _ => -1,
        }
    }

    pub fn index(self) -> usize {
        match self {
            E => 0,
            T12 => 1,
            T13 => 2,
            T23 => 3,
            C123 => 4,
            C132 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            E => "e",
            T12 => "(12)",
            T13 => "(13)",
            T23 => "(23)",
            C123 => "(123)",
            C132 => "(132)",
        }
    }
}

impl core::fmt::Display for GroupElt {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the three transpositions, indexing the skew generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Transposition {
    X12,
    X13,
    X23,
}

use Transposition::*;

impl Transposition {
    pub const ALL: [Transposition; 3] = [X12, X13, X23];

    pub fn group(self) -> GroupElt {
        match self {
            X12 => T12,
            X13 => T13,
            X23 => T23,
        }
    }

    pub fn from_group(g: GroupElt) -> Option<Transposition> {
        match g {
            T12 => Some(X12),
            T13 => Some(X13),
            T23 => Some(X23),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        match self {
            X12 => 0,
            X13 => 1,
            X23 => 2,
        }
    }

    /// Conjugate `g^{-1} (ij) g`, again a transposition.
    pub fn conj_by(self, g: GroupElt) -> Transposition {
        Transposition::from_group(g.inv().mul(self.group()).mul(g))
            .expect("conjugate of a transposition is a transposition")
    }

    pub fn name(self) -> &'static str {
        match self {
            X12 => "x12",
            X13 => "x13",
            X23 => "x23",
        }
    }
}

/// Weight entry of the structure triple `(1, a, -1-a)` attached to a
/// transposition.
pub fn weight(point: &ParameterPoint, t: Transposition) -> Scalar {
    match t {
        X23 => int(1),
        X12 => point.a.clone(),
        X13 => -int(1) - &point.a,
    }
}

/// The function `f_(ij)`: its value on the group element `g` is
/// `a_(ij) - a_(g^{-1} (ij) g)`.
pub fn f_value(point: &ParameterPoint, ij: Transposition, g: GroupElt) -> Scalar {
    weight(point, ij) - weight(point, ij.conj_by(g))
}

/// The full weight table of `f_(ij)` indexed by `GroupElt::index`.
pub fn f_weight(point: &ParameterPoint, ij: Transposition) -> [Scalar; 6] {
    GroupElt::ALL.map(|g| f_value(point, ij, g))
}

/// One letter of a generator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X(Transposition),
    Delta(GroupElt),
}

/// A formal product of generators, acting left-to-right as operators
/// (the rightmost letter acts first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn xs(ts: &[Transposition]) -> Self {
        Word(ts.iter().map(|&t| Letter::X(t)).collect())
    }
}

/// Formal scalar combination of words, evaluable on any module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSum(pub Vec<(Scalar, Word)>);

/// Evaluates a word on a module as a matrix product.
pub fn word_matrix(m: &GradedModule, w: &Word) -> SpMat {
    let mut acc = SpMat::identity(m.dim);
    for letter in w.0.iter().rev() {
        acc = match letter {
            Letter::X(t) => m.x(*t).mul(&acc),
            Letter::Delta(g) => {
                // The projector keeps the rows of degree g.
                let filtered = acc.filter_rows(|i| m.degree[i] == *g);
                filtered
            }
        };
    }
    acc
}

/// Matrix of a formal combination of words on a module.
pub fn word_action(m: &GradedModule, ws: &WordSum) -> SpMat {
    let mut acc = SpMat::zero(m.dim, m.dim);
    for (c, w) in &ws.0 {
        acc = acc.add_scaled(&word_matrix(m, w), c);
    }
    acc
}

/// Applies a word to a single vector (cheaper than building the matrix).
pub fn word_apply(m: &GradedModule, w: &Word, v: &[Scalar]) -> Vec<Scalar> {
    let mut acc = v.to_vec();
    for letter in w.0.iter().rev() {
        match letter {
            Letter::X(t) => acc = m.x(*t).apply(&acc),
            Letter::Delta(g) => {
                for (i, x) in acc.iter_mut().enumerate() {
                    if m.degree[i] != *g {
                        *x = Scalar::zero();
                    }
                }
            }
        }
    }
    acc
}

pub fn word_sum_apply(m: &GradedModule, ws: &WordSum, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = crate::linalg::zero_vec(m.dim);
    for (c, w) in &ws.0 {
        if c.is_zero() {
            continue;
        }
        let t = word_apply(m, w, v);
        crate::linalg::add_scaled(&mut out, &t, c);
    }
    out
}

/// Names of the distinguished elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distinguished {
    /// `x13 x12 x23 x12`, spanning the top socle word of the trivial block.
    XTop,
    /// `(-1-2a)(1-a) - x_top`.
    XSoc,
    /// `-t12 x13 x12 + t13 x12 x23`, generating a (1,1)-family inside the
    /// nontrivial projective.
    XLt,
    /// `-t12 x12 x13 + t13 x23 x12`, the mirror word inside the trivial
    /// projective.
    XEt,
}

/// The formal combination of words attached to a distinguished name.
/// `t` is required for the two parametrised words.
pub fn distinguished(
    point: &ParameterPoint,
    name: Distinguished,
    t: Option<&Triple>,
) -> Result<WordSum> {
    let need_t = || -> Result<&Triple> {
        t.ok_or_else(|| Error::Domain("this distinguished element needs a triple".into()))
    };
    Ok(match name {
        Distinguished::XTop => WordSum(vec![(int(1), Word::xs(&[X13, X12, X23, X12]))]),
        Distinguished::XSoc => {
            let a = &point.a;
            let c = (-int(1) - int(2) * a) * (int(1) - a);
            WordSum(vec![(c, Word::one()), (-int(1), Word::xs(&[X13, X12, X23, X12]))])
        }
        Distinguished::XLt => {
            let t = need_t()?;
            WordSum(vec![
                (-t.c12.clone(), Word::xs(&[X13, X12])),
                (t.c13.clone(), Word::xs(&[X12, X23])),
            ])
        }
        Distinguished::XEt => {
            let t = need_t()?;
            WordSum(vec![
                (-t.c12.clone(), Word::xs(&[X12, X13])),
                (t.c13.clone(), Word::xs(&[X23, X12])),
            ])
        }
    })
}

/// Static coproduct / antipode / counit data for the generators.
pub struct GeneratorData {
    /// Coproduct of `x_(ij)` as `(coefficient, left word, right word)`.
    pub coproduct_x: [Vec<(Scalar, Word, Word)>; 3],
    /// Coproduct of `delta_g`.
    pub coproduct_delta: [Vec<(Scalar, Word, Word)>; 6],
    /// Antipode of `x_(ij)` as a word combination.
    pub antipode_x: [WordSum; 3],
    /// Antipode of `delta_g` (a single delta word).
    pub antipode_delta: [Word; 6],
    /// Counit values on `x_(ij)` (all zero).
    pub counit_x: [Scalar; 3],
    /// Counit values on `delta_g`.
    pub counit_delta: [Scalar; 6],
}

/// The coproduct, antipode and counit tables of the generators:
/// `D(x_(ij)) = x_(ij) (x) 1 + sum_h sgn(h) delta_h (x) x_(h^-1 (ij) h)`,
/// `D(delta_g) = sum_h delta_h (x) delta_(h^-1 g)`,
/// `S(x_(ij)) = -sum_h sgn(h) x_(h^-1 (ij) h) delta_(h^-1 (ij))`,
/// `S(delta_g) = delta_(g^-1)`, `eps(x) = 0`, `eps(delta_g) = [g = e]`.
pub fn generator_table() -> GeneratorData {
    let coproduct_x = Transposition::ALL.map(|t| {
        let mut terms = vec![(int(1), Word(vec![Letter::X(t)]), Word::one())];
        for h in GroupElt::ALL {
            terms.push((
                int(h.sign() as i64),
                Word(vec![Letter::Delta(h)]),
                Word(vec![Letter::X(t.conj_by(h))]),
            ));
        }
        terms
    });
    let coproduct_delta = GroupElt::ALL.map(|g| {
        GroupElt::ALL
            .map(|h| {
                (
                    int(1),
                    Word(vec![Letter::Delta(h)]),
                    Word(vec![Letter::Delta(h.inv().mul(g))]),
                )
            })
            .to_vec()
    });
    let antipode_x = Transposition::ALL.map(|t| {
        WordSum(
            GroupElt::ALL
                .map(|h| {
                    (
                        -int(h.sign() as i64),
                        Word(vec![
                            Letter::X(t.conj_by(h)),
                            Letter::Delta(h.inv().mul(t.group())),
                        ]),
                    )
                })
                .to_vec(),
        )
    });
    let antipode_delta = GroupElt::ALL.map(|g| Word(vec![Letter::Delta(g.inv())]));
    let counit_x = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
    let counit_delta = GroupElt::ALL.map(|g| if g == E { Scalar::one() } else { Scalar::zero() });
    GeneratorData {
        coproduct_x,
        coproduct_delta,
        antipode_x,
        antipode_delta,
        counit_x,
        counit_delta,
    }
}

/// Outcome of the concrete realization check.
#[derive(Clone, Debug)]
pub struct RealizationReport {
    /// Dimension of the span closure of generator products on the direct
    /// sum of the two projectives.
    pub closure_dim: usize,
    /// Per-relation check results `(name, holds)`.
    pub relations: Vec<(String, bool)>,
}

impl RealizationReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok) && self.closure_dim == 72
    }
}

/// Verifies every defining relation as a matrix identity on a module and
/// returns the list of named results.
pub fn relation_table(point: &ParameterPoint, m: &GradedModule) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    // x_(ij)^2 = f_(ij), acting diagonally through the grading.
    for t in Transposition::ALL {
        let sq = m.x(t).mul(m.x(t));
        let mut f_diag = SpMat::zero(m.dim, m.dim);
        for i in 0..m.dim {
            let c = f_value(point, t, m.degree[i]);
            if !c.is_zero() {
                f_diag.col[i].push((i, c));
            }
        }
        out.push((alloc::format!("{}^2 = f{}", t.name(), &t.name()[1..]), sq == f_diag));
    }
    // delta_g x_(ij) = x_(ij) delta_((ij)g): columns of degree g map into
    // rows of degree (ij)g.
    for t in Transposition::ALL {
        let mut ok = true;
        for (j, col) in m.x(t).col.iter().enumerate() {
            let target = t.group().mul(m.degree[j]);
            if col.iter().any(|(i, _)| m.degree[*i] != target) {
                ok = false;
                break;
            }
        }
        out.push((alloc::format!("delta_g {} = {} delta_((ij)g)", t.name(), t.name()), ok));
    }
    // The two braided three-term relations.
    let r1 = m
        .x(X23)
        .mul(m.x(X12))
        .add(&m.x(X13).mul(m.x(X23)))
        .add(&m.x(X12).mul(m.x(X13)));
    out.push(("x23 x12 + x13 x23 + x12 x13 = 0".into(), r1.is_zero()));
    let r2 = m
        .x(X12)
        .mul(m.x(X23))
        .add(&m.x(X23).mul(m.x(X13)))
        .add(&m.x(X13).mul(m.x(X12)));
    out.push(("x12 x23 + x23 x13 + x13 x12 = 0".into(), r2.is_zero()));
    out
}

/// Realizes the algebra on the direct sum of the two projective modules,
/// verifies all defining relations there, and computes the dimension of the
/// span closure of generator products (which must be 72: the regular module
/// is a direct sum of copies of the two projectives, so the action is
/// faithful).
pub fn realize_algebra(point: &ParameterPoint) -> Result<RealizationReport> {
    let pe = crate::zoo::build_projective(point, crate::zoo::SimpleType::E)?;
    let pl = crate::zoo::build_projective(point, crate::zoo::SimpleType::L)?;
    let p = crate::reps::direct_sum(&pe.module, &pl.module);
    let relations = relation_table(point, &p);

    // Span closure of words in the nine generator matrices, as vectors of
    // length dim^2.
    let dim = p.dim;
    let mut gens: Vec<SpMat> = Vec::new();
    for t in Transposition::ALL {
        gens.push(p.x(t).clone());
    }
    for g in GroupElt::ALL {
        let mut proj = SpMat::zero(dim, dim);
        for i in 0..dim {
            if p.degree[i] == g {
                proj.col[i].push((i, Scalar::one()));
            }
        }
        gens.push(proj);
    }
    let flatten = |m: &SpMat| -> Vec<Scalar> {
        let mut v = crate::linalg::zero_vec(dim * dim);
        for (j, col) in m.col.iter().enumerate() {
            for (i, c) in col {
                v[i * dim + j] = c.clone();
            }
        }
        v
    };
    let mut span = crate::linalg::SpanBasis::new(dim * dim);
    let mut frontier: Vec<SpMat> = vec![SpMat::identity(dim)];
    span.insert(&flatten(&frontier[0]));
    while let Some(mat) = frontier.pop() {
        for g in &gens {
            let prod = g.mul(&mat);
            if span.insert(&flatten(&prod)) {
                frontier.push(prod);
            }
        }
        if span.rank() > 72 {
            break;
        }
    }
    let report = RealizationReport { closure_dim: span.rank(), relations };
    if !report.all_pass() {
        let first_bad = report
            .relations
            .iter()
            .find(|(_, ok)| !ok)
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| alloc::format!("closure dimension {} != 72", report.closure_dim));
        return Err(Error::Realization(first_bad));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{frac, int};

    // Independent permutation-composition oracle on one-line arrays.
    fn compose(a: [usize; 3], b: [usize; 3]) -> [usize; 3] {
        [a[b[0]], a[b[1]], a[b[2]]]
    }

    #[test]
    fn group_multiplication_matches_oracle() {
        for g in GroupElt::ALL {
            for h in GroupElt::ALL {
                let expect = compose(g.perm(), h.perm());
                assert_eq!(g.mul(h).perm(), expect, "{g} * {h}");
            }
            assert_eq!(g.mul(g.inv()), E);
        }
        // Spot products fixing the composition convention: (13)(23) applies
        // (23) first and equals (132).
        assert_eq!(T13.mul(T23), C132);
        assert_eq!(T12.mul(C123), T23);
        assert_eq!(C123.mul(C123), C132);
    }

    #[test]
    fn sign_is_a_homomorphism() {
        for g in GroupElt::ALL {
            for h in GroupElt::ALL {
                assert_eq!(g.mul(h).sign(), g.sign() * h.sign());
            }
        }
    }

    #[test]
    fn f_values_from_conjugation_oracle() {
        let p = ParameterPoint::default_point();
        let a = p.a.clone();
        // f_(ij)(e) = 0 and f_(ij)((ij)) = 0.
        for t in Transposition::ALL {
            assert_eq!(f_value(&p, t, E), int(0));
            assert_eq!(f_value(&p, t, t.group()), int(0));
        }
        // (13)^-1 (12) (13) = (23), so f_12((13)) = a - 1.
        assert_eq!(X12.conj_by(T13), X23);
        assert_eq!(f_value(&p, X12, T13), &a - int(1));
        // (12)^-1 (23) (12) = (13), so f_23((12)) = 1 - (-1-a) = a + 2.
        assert_eq!(X23.conj_by(T12), X13);
        assert_eq!(f_value(&p, X23, T12), &a + int(2));
        // At a = 2 the six nonzero weights are as tabulated.
        assert_eq!(f_value(&p, X12, T23), int(2) * &a + int(1));
        assert_eq!(f_value(&p, X13, T12), -&a - int(2));
        assert_eq!(f_value(&p, X13, T23), -int(1) - int(2) * &a);
        assert_eq!(f_value(&p, X23, T13), int(1) - &a);
    }

    #[test]
    fn generator_table_entries() {
        let gd = generator_table();
        // counit(x13) = 0; counit(delta_e) = 1.
        assert_eq!(gd.counit_x[X13.index()], int(0));
        assert_eq!(gd.counit_delta[E.index()], int(1));
        assert_eq!(gd.counit_delta[T12.index()], int(0));
        // antipode(delta_(123)) = delta_(132).
        assert_eq!(gd.antipode_delta[C123.index()], Word(vec![Letter::Delta(C132)]));
        // coproduct(delta_e) = sum_h delta_h (x) delta_(h^-1).
        let cop = &gd.coproduct_delta[E.index()];
        assert_eq!(cop.len(), 6);
        for (c, l, r) in cop {
            assert_eq!(c, &int(1));
            let (Letter::Delta(h), Letter::Delta(k)) = (l.0[0], r.0[0]) else {
                panic!("delta coproduct has delta letters");
            };
            assert_eq!(k, h.inv());
        }
        // coproduct(x) has the unit term plus six graded terms.
        assert_eq!(gd.coproduct_x[X12.index()].len(), 7);
    }

    #[test]
    fn distinguished_shapes() {
        let p = ParameterPoint::default_point();
        let top = distinguished(&p, Distinguished::XTop, None).unwrap();
        assert_eq!(top.0.len(), 1);
        assert_eq!(top.0[0].1 .0.len(), 4);
        // (-1-2a)(1-a) at a = 2 is (-5)(-1) = 5.
        let soc = distinguished(&p, Distinguished::XSoc, None).unwrap();
        assert_eq!(soc.0[0].0, int(5));
        assert_eq!(soc.0[0].1, Word::one());
        assert_eq!(soc.0[1].0, int(-1));
        // x_Lt with t = (-5,2,3) is -2 x13x12 + 3 x12x23.
        let lt = distinguished(&p, Distinguished::XLt, Some(&p.t)).unwrap();
        assert_eq!(lt.0[0].0, int(-2));
        assert_eq!(lt.0[0].1, Word::xs(&[X13, X12]));
        assert_eq!(lt.0[1].0, int(3));
        assert_eq!(lt.0[1].1, Word::xs(&[X12, X23]));
        assert!(distinguished(&p, Distinguished::XLt, None).is_err());
        let _ = frac(1, 2);
    }
}
