//! Exact base-field arithmetic and validated parameter points.
//!
//! The engine works over the rationals with the structure parameters
//! specialized at generic rational values.  The parameter `a` fixes the
//! algebra itself; the zero-sum triples `t` and `s` index the two default
//! classes of (k,k)-type modules.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Exact rational scalar; every computation in the crate is over this field.
pub type Scalar = num_rational::BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `n/d`, `d != 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"-5"` or `"-1/2"` into a scalar.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let err = || Error::Parse(alloc::format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".to_string()));
            }
            Ok(Scalar::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| err())?;
            Ok(Scalar::from_integer(n))
        }
    }
}

/// A zero-sum triple `(c_(23), c_(12), c_(13))` of scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub c23: Scalar,
    pub c12: Scalar,
    pub c13: Scalar,
}

impl Triple {
    pub fn new(c23: Scalar, c12: Scalar, c13: Scalar) -> Self {
        Triple { c23, c12, c13 }
    }

    pub fn from_ints(c23: i64, c12: i64, c13: i64) -> Self {
        Triple::new(int(c23), int(c12), int(c13))
    }

    pub fn sums_to_zero(&self) -> bool {
        (&self.c23 + &self.c12 + &self.c13).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.c23.is_zero() && self.c12.is_zero() && self.c13.is_zero()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c23, self.c12, self.c13)
    }
}

/// Returns true iff `t = lambda * s` for some nonzero scalar, computed as
/// the vanishing of `t12*s13 - t13*s12`.
///
/// Both triples must be nonzero elements of the zero-sum plane.
pub fn proportional(t: &Triple, s: &Triple) -> Result<bool> {
    if t.is_zero() || s.is_zero() {
        return Err(Error::Domain("proportionality needs nonzero triples".into()));
    }
    if !t.sums_to_zero() || !s.sums_to_zero() {
        return Err(Error::Domain("triples must sum to zero".into()));
    }
    Ok((&t.c12 * &s.c13 - &t.c13 * &s.c12).is_zero())
}

/// Canonical representative of a line of zero-sum triples, stored as the
/// pair `(t12 : t13)` with the first nonzero entry normalized to 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjParam {
    p12: Scalar,
    p13: Scalar,
}

impl ProjParam {
    /// Canonicalizes a nonzero zero-sum triple.
    pub fn from_triple(t: &Triple) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::Domain("zero triple has no projective class".into()));
        }
        Self::from_pair(t.c12.clone(), t.c13.clone())
    }

    /// Canonicalizes a nonzero pair `(t12 : t13)`.
    pub fn from_pair(p12: Scalar, p13: Scalar) -> Result<Self> {
        if p12.is_zero() && p13.is_zero() {
            // A zero-sum triple with t12 = t13 = 0 forces t23 = 0 as well.
            return Err(Error::Domain("zero pair has no projective class".into()));
        }
        if !p12.is_zero() {
            let q = &p13 / &p12;
            Ok(ProjParam { p12: Scalar::one(), p13: q })
        } else {
            Ok(ProjParam { p12: Scalar::zero(), p13: Scalar::one() })
        }
    }

    pub fn coords(&self) -> (&Scalar, &Scalar) {
        (&self.p12, &self.p13)
    }

    /// The class as a coprime integer pair with positive leading entry,
    /// used by the compact textual form `[p:q]`.
    pub fn integer_pair(&self) -> (BigInt, BigInt) {
        let d = self.p12.denom() * self.p13.denom();
        let mut a = (&self.p12 * &d).to_integer();
        let mut b = (&self.p13 * &d).to_integer();
        let g = num_integer::Integer::gcd(&a, &b);
        if !g.is_zero() {
            a = &a / &g;
            b = &b / &g;
        }
        let lead_neg = if a.is_zero() { b.is_negative() } else { a.is_negative() };
        if lead_neg {
            a = -a;
            b = -b;
        }
        (a, b)
    }
}

impl fmt::Display for ProjParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.integer_pair();
        write!(f, "[{a}:{b}]")
    }
}

/// A validated parameter point: the algebra parameter `a` and the two
/// module-family triples `t`, `s` together with auto-chosen companions
/// `t_hat`, `s_hat` (linearly independent deformations used by the (k,k)
/// constructors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterPoint {
    pub a: Scalar,
    pub t: Triple,
    pub s: Triple,
    pub t_hat: Triple,
    pub s_hat: Triple,
}

fn choose_hat(t: &Triple) -> Triple {
    // (-1, 1, 0) unless (t12, t13) is proportional to (1, 0).
    if t.c13.is_zero() {
        Triple::from_ints(-1, 0, 1)
    } else {
        Triple::from_ints(-1, 1, 0)
    }
}

fn independent(t: &Triple, u: &Triple) -> bool {
    !(&t.c12 * &u.c13 - &t.c13 * &u.c12).is_zero()
}

/// Validates and assembles a parameter point.
///
/// Fails with `GenericityError` when `a` is one of the excluded values
/// `1`, `-1/2`, `-2`, and with `DomainError` when a triple does not sum to
/// zero or is zero.
pub fn make_point(a: Scalar, t: Triple, s: Triple) -> Result<ParameterPoint> {
    for bad in [int(1), frac(-1, 2), int(-2)] {
        if a == bad {
            return Err(Error::Genericity(alloc::format!(
                "a = {bad} is a non-generic parameter"
            )));
        }
    }
    for (name, tr) in [("t", &t), ("s", &s)] {
        if !tr.sums_to_zero() {
            return Err(Error::Domain(alloc::format!("triple {name} = {tr} does not sum to zero")));
        }
        if tr.is_zero() {
            return Err(Error::Domain(alloc::format!("triple {name} must be nonzero")));
        }
    }
    let t_hat = choose_hat(&t);
    let s_hat = choose_hat(&s);
    debug_assert!(independent(&t, &t_hat) && independent(&s, &s_hat));
    Ok(ParameterPoint { a, t, s, t_hat, s_hat })
}

impl ParameterPoint {
    /// Default generic point: a = 2, t = (-5, 2, 3), s = (-7, 3, 4).
    pub fn default_point() -> Self {
        make_point(
            int(2),
            Triple::from_ints(-5, 2, 3),
            Triple::from_ints(-7, 3, 4),
        )
        .expect("default point is generic")
    }

    pub fn t_class(&self) -> ProjParam {
        ProjParam::from_triple(&self.t).expect("t is nonzero")
    }

    pub fn s_class(&self) -> ProjParam {
        ProjParam::from_triple(&self.s).expect("s is nonzero")
    }

    /// The companion deformation triple for an arbitrary family triple,
    /// following the same selection rule used for `t_hat`.
    pub fn hat_for(&self, t: &Triple) -> Triple {
        choose_hat(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_point_accepts_default() {
        let p = ParameterPoint::default_point();
        assert_eq!(p.a, int(2));
        // t and s are not proportional: det(2*4 - 3*3) = -1.
        assert!(!proportional(&p.t, &p.s).unwrap());
        assert!(independent(&p.t, &p.t_hat));
    }

    #[test]
    fn make_point_rejects_non_generic_a() {
        for a in [int(1), frac(-1, 2), int(-2)] {
            let r = make_point(a, Triple::from_ints(-5, 2, 3), Triple::from_ints(-7, 3, 4));
            assert!(matches!(r, Err(Error::Genericity(_))));
        }
    }

    #[test]
    fn make_point_rejects_bad_triple() {
        let r = make_point(int(2), Triple::from_ints(1, 2, 3), Triple::from_ints(-7, 3, 4));
        assert!(matches!(r, Err(Error::Domain(_))));
        let r = make_point(int(2), Triple::from_ints(0, 0, 0), Triple::from_ints(-7, 3, 4));
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn proportional_examples() {
        let t = Triple::from_ints(-5, 2, 3);
        assert!(proportional(&t, &Triple::from_ints(-10, 4, 6)).unwrap());
        assert!(!proportional(&t, &Triple::from_ints(-7, 3, 4)).unwrap());
        assert!(proportional(&t, &t).unwrap());
        assert!(proportional(&Triple::from_ints(0, 0, 0), &t).is_err());
    }

    #[test]
    fn proj_param_canonical() {
        let t = Triple::from_ints(-5, 2, 3);
        let p = ProjParam::from_triple(&t).unwrap();
        assert_eq!(p.coords().0, &int(1));
        assert_eq!(p.coords().1, &frac(3, 2));
        assert_eq!(p.integer_pair(), (2.into(), 3.into()));
        assert_eq!(alloc::format!("{p}"), "[2:3]");
        // t12 = 0 normalizes on the second coordinate.
        let q = ProjParam::from_triple(&Triple::from_ints(-7, 0, 7)).unwrap();
        assert_eq!(alloc::format!("{q}"), "[0:1]");
    }

    #[test]
    fn hat_rule_switches_when_t13_vanishes() {
        let p = make_point(int(2), Triple::from_ints(-2, 2, 0), Triple::from_ints(-7, 3, 4)).unwrap();
        assert_eq!(p.t_hat, Triple::from_ints(-1, 0, 1));
        assert!(independent(&p.t, &p.t_hat));
    }

    #[test]
    fn parse_scalar_forms() {
        assert_eq!(parse_scalar("-1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse_scalar(" 7 ").unwrap(), int(7));
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1/0").is_err());
    }
}
