use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{integral_rational, reduce_curve, reduce_point, EPoint, EllCurve, EllError};
use crate::exactfield::{Field, PolyRing, Rationals};
use crate::numberfield::{NFElement, NumberField, NumberFieldSpec, PrimeSpec, UnramifiedPrime};

/// How the stored discriminant is normalized.
pub const DISC_NORMALIZATION: &str = "disc = 16 * disc(x^3 + a2 x^2 + a4 x + a6) = -16(4a^3 + 27b^2) when a2 = 0";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub field: NumberFieldSpec,
    pub a2: Vec<String>,
    pub a4: Vec<String>,
    pub a6: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSpec {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

impl CurveSpec {
    pub fn of(e: &EllCurve<NumberField>) -> Self {
        CurveSpec {
            field: e.field().spec(),
            a2: e.a2().to_strings(),
            a4: e.a4().to_strings(),
            a6: e.a6().to_strings(),
        }
    }

    pub fn build(&self, prime_bound: u64) -> Result<EllCurve<NumberField>, EllError> {
        let k = NumberField::from_spec(&self.field, prime_bound)?;
        let a2 = k.element_from_strings(&self.a2)?;
        let a4 = k.element_from_strings(&self.a4)?;
        let a6 = k.element_from_strings(&self.a6)?;
        EllCurve::general(k, a2, a4, a6)
    }
}

impl PointSpec {
    pub fn of(p: &EPoint<NFElement>) -> Option<Self> {
        match p {
            EPoint::Infinity => None,
            EPoint::Affine { x, y } => Some(PointSpec { x: x.to_strings(), y: y.to_strings() }),
        }
    }

    pub fn build(&self, e: &EllCurve<NumberField>) -> Result<EPoint<NFElement>, EllError> {
        let k = e.field();
        e.point(k.element_from_strings(&self.x)?, k.element_from_strings(&self.y)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum InfOrderMethod {
    /// Integral point with `y != 0` and `y^2` not dividing the cubic's discriminant.
    LutzNagell { cubic_disc: String, y: String, remainder: String },
    /// Reduction at a small and a large degree-one prime.
    TwoPrime {
        small: PrimeSpec,
        large: PrimeSpec,
        count_small: u64,
        count_large: u64,
        order_mod_large: u64,
    },
    /// Different orders modulo two primes of good reduction.
    OrderMismatch {
        first: PrimeSpec,
        second: PrimeSpec,
        count_first: u64,
        count_second: u64,
        order_first: u64,
        order_second: u64,
    },
}

/// Certificate that a point of an elliptic curve over a number field has infinite order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EInfOrderCert {
    pub curve: CurveSpec,
    pub point: PointSpec,
    pub disc: Vec<String>,
    pub disc_normalization: String,
    #[serde(flatten)]
    pub method: InfOrderMethod,
    pub transcript: Vec<String>,
}

fn affine(p: &EPoint<NFElement>) -> Result<(&NFElement, &NFElement), EllError> {
    match p {
        EPoint::Affine { x, y } => Ok((x, y)),
        EPoint::Infinity => Err(EllError::Hypothesis("point at infinity has finite order".into())),
    }
}

fn skeleton(e: &EllCurve<NumberField>, p: &EPoint<NFElement>, method: InfOrderMethod, transcript: Vec<String>) -> EInfOrderCert {
    EInfOrderCert {
        curve: CurveSpec::of(e),
        point: PointSpec::of(p).expect("affine point"),
        disc: e.disc().to_strings(),
        disc_normalization: DISC_NORMALIZATION.into(),
        method,
        transcript,
    }
}

/// Lutz–Nagell over `Q`: an integral torsion point has `y = 0` or `y^2 | disc(cubic)`.
pub fn lutz_nagell(e: &EllCurve<NumberField>, p: &EPoint<NFElement>) -> Result<EInfOrderCert, EllError> {
    let k = e.field();
    if k.degree() != 1 {
        return Err(EllError::Hypothesis("Lutz-Nagell needs a curve over Q".into()));
    }
    let coeffs: Option<Vec<BigInt>> = [e.a2(), e.a4(), e.a6()].into_iter().map(integral_rational).collect();
    let Some(c) = coeffs else {
        return Err(EllError::Hypothesis("coefficients must be integers".into()));
    };
    if !e.contains(p) {
        return Err(EllError::NotOnCurve);
    }
    let (x, y) = affine(p)?;
    let (Some(_), Some(y)) = (integral_rational(x), integral_rational(y)) else {
        return Err(EllError::Hypothesis("point must be integral".into()));
    };
    if y.is_zero() {
        return Err(EllError::Inconclusive("y = 0: the point has order 2".into()));
    }
    let ring = PolyRing::new(Rationals);
    let cubic = ring.from_coeffs(vec![c[2].clone().into(), c[1].clone().into(), c[0].clone().into(), BigInt::from(1).into()]);
    let dc = ring.discriminant(&cubic).numer().clone();
    let y2 = &y * &y;
    let remainder = dc.mod_floor(&y2);
    if remainder.is_zero() {
        return Err(EllError::Inconclusive(format!("y^2 = {y2} divides {dc}")));
    }
    let transcript = vec![
        format!("y = {y} != 0, so the point is not 2-torsion"),
        format!("disc of the cubic = {dc}; {dc} mod {y2} = {remainder} != 0"),
        "an integral torsion point would have y^2 | disc, so the point has infinite order".into(),
    ];
    Ok(skeleton(
        e,
        p,
        InfOrderMethod::LutzNagell { cubic_disc: dc.to_string(), y: y.to_string(), remainder: remainder.to_string() },
        transcript,
    ))
}

fn check_good_prime(k: &NumberField, e: &EllCurve<NumberField>, prime: &UnramifiedPrime) -> Result<(), EllError> {
    match reduce_curve(k, e, prime) {
        Ok(_) => Ok(()),
        Err(EllError::BadReduction(p)) => Err(EllError::Hypothesis(format!("disc lies in the prime over {p}"))),
        Err(EllError::NotIntegral(p)) => {
            Err(EllError::Hypothesis(format!("coefficients not integral at the prime over {p}")))
        }
        Err(err) => Err(err),
    }
}

/// `q > p + 1 + 2 sqrt(p)`, decided exactly as `q > p + 1` and `(q - p - 1)^2 > 4p`.
pub fn hasse_gap(p: u64, q: u64) -> bool {
    q > p + 1 && {
        let g = (q - p - 1) as u128;
        g * g > 4 * p as u128
    }
}

/// Infinite order from a small prime `small` and a large prime `large`.
///
/// If `P` had finite order `m`, then `m > 2` as `y != 0`. Torsion of order prime
/// to `q` injects modulo `large`, where `P` has order 2, so `q | m`. A point of
/// order `q` then injects modulo `small`, forcing `q <= #E(F_p) <= p + 1 + 2 sqrt(p)`.
pub fn nontorsion_two_prime(
    e: &EllCurve<NumberField>,
    p: &EPoint<NFElement>,
    small: &UnramifiedPrime,
    large: &UnramifiedPrime,
    count_bound: u64,
) -> Result<EInfOrderCert, EllError> {
    let k = e.field();
    if !e.contains(p) {
        return Err(EllError::NotOnCurve);
    }
    let (_, y) = affine(p)?;
    if small.residue_degree() != 1 || large.residue_degree() != 1 {
        return Err(EllError::Hypothesis("residue fields must have prime order".into()));
    }
    let (ps, qs) = (small.p, large.p);
    if !hasse_gap(ps, qs) {
        return Err(EllError::Hypothesis(format!("Hasse gap fails: {qs} <= {ps} + 1 + 2 sqrt({ps})")));
    }
    check_good_prime(k, e, small)?;
    check_good_prime(k, e, large)?;
    if k.is_zero(y) {
        return Err(EllError::Hypothesis("y = 0: the point is 2-torsion".into()));
    }
    let e_small = reduce_curve(k, e, small)?;
    let e_large = reduce_curve(k, e, large)?;
    let p_large = reduce_point(k, p, large)
        .map_err(|_| EllError::Hypothesis(format!("point not integral at the prime over {qs}")))?;
    let order_large = e_large.point_order(&p_large, count_bound)?;
    if order_large != 2 {
        return Err(EllError::Hypothesis(format!(
            "point has order {order_large}, not 2, modulo the prime over {qs}"
        )));
    }
    let count_small = e_small.count_points(count_bound)?;
    let count_large = e_large.count_points(count_bound)?;
    if count_small >= qs {
        return Err(EllError::Hypothesis(format!("#E(F_{ps}) = {count_small} >= {qs}")));
    }
    let gap = (qs - ps - 1) as u128;
    let transcript = vec![
        format!("{} and {} have residue fields F_{ps} and F_{qs}", small.describe(), large.describe()),
        format!("{qs} > {ps} + 1 + 2 sqrt({ps}): ({qs} - {}) ^ 2 = {} > {}", ps + 1, gap * gap, 4 * ps),
        format!("good reduction at both primes (disc = {})", k.render(e.disc())),
        format!("y = {} != 0", k.render(y)),
        format!("the point has order {order_large} modulo the prime over {qs}"),
        format!("#E(F_{ps}) = {count_small} < {qs}; #E(F_{qs}) = {count_large}"),
    ];
    Ok(skeleton(
        e,
        p,
        InfOrderMethod::TwoPrime {
            small: small.spec(),
            large: large.spec(),
            count_small,
            count_large,
            order_mod_large: order_large,
        },
        transcript,
    ))
}

/// Infinite order from different reduced orders at two primes of good reduction.
///
/// At an odd unramified prime, reduction is injective on all of `E(K)_tors`,
/// so a torsion point has the same order modulo every such prime.
pub fn nontorsion_order_mismatch(
    e: &EllCurve<NumberField>,
    p: &EPoint<NFElement>,
    first: &UnramifiedPrime,
    second: &UnramifiedPrime,
    count_bound: u64,
) -> Result<EInfOrderCert, EllError> {
    let k = e.field();
    if !e.contains(p) {
        return Err(EllError::NotOnCurve);
    }
    affine(p)?;
    let mut orders = Vec::new();
    for prime in [first, second] {
        let er = reduce_curve(k, e, prime)?;
        let pr = reduce_point(k, p, prime)?;
        orders.push((er.count_points(count_bound)?, er.point_order(&pr, count_bound)?));
    }
    let [(count_first, order_first), (count_second, order_second)] = [orders[0], orders[1]];
    if order_first == order_second {
        return Err(EllError::Inconclusive(format!("equal reduced orders {order_first}")));
    }
    let transcript = vec![
        format!("good reduction at {} and {}", first.describe(), second.describe()),
        format!("#E = {count_first} and {count_second} over the residue fields"),
        format!("reduced orders {order_first} != {order_second}"),
        "torsion injects under reduction at odd unramified primes, so the point has infinite order".into(),
    ];
    Ok(skeleton(
        e,
        p,
        InfOrderMethod::OrderMismatch {
            first: first.spec(),
            second: second.spec(),
            count_first,
            count_second,
            order_first,
            order_second,
        },
        transcript,
    ))
}

impl EInfOrderCert {
    /// Rebuilds curve, point and primes from the stored data and re-runs the argument.
    pub fn verify(&self, prime_bound: u64, count_bound: u64) -> Result<(), EllError> {
        let e = self.curve.build(prime_bound)?;
        let p = self.point.build(&e)?;
        let k = e.field();
        if e.disc().to_strings() != self.disc {
            return Err(EllError::Verification("discriminant mismatch".into()));
        }
        let again = match &self.method {
            InfOrderMethod::LutzNagell { .. } => lutz_nagell(&e, &p)?,
            InfOrderMethod::TwoPrime { small, large, .. } => {
                let small = k.prime_from_spec(small)?;
                let large = k.prime_from_spec(large)?;
                nontorsion_two_prime(&e, &p, &small, &large, count_bound)?
            }
            InfOrderMethod::OrderMismatch { first, second, .. } => {
                let first = k.prime_from_spec(first)?;
                let second = k.prime_from_spec(second)?;
                nontorsion_order_mismatch(&e, &p, &first, &second, count_bound)?
            }
        };
        if again.method != self.method {
            return Err(EllError::Verification("stored witnesses differ from recomputation".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::DEFAULT_COUNT_BOUND;
    use crate::exactfield::{mul_mod, PrimeField};

    fn orig(k: &NumberField, d: &NFElement) -> (EllCurve<NumberField>, EPoint<NFElement>) {
        let e = EllCurve::new(k.clone(), k.one(), k.square(d)).unwrap();
        let p = e.point(k.zero(), d.clone()).unwrap();
        (e, p)
    }

    #[test]
    fn lutz_nagell_family() {
        let q = NumberField::rationals();
        for d in 3..=100 {
            let (e, p) = orig(&q, &q.from_i64(d));
            let cert = lutz_nagell(&e, &p).unwrap_or_else(|err| panic!("d = {d}: {err}"));
            cert.verify(100, DEFAULT_COUNT_BOUND).unwrap();
        }
        let (e, p) = orig(&q, &q.from_i64(7));
        match lutz_nagell(&e, &p).unwrap().method {
            InfOrderMethod::LutzNagell { cubic_disc, remainder, .. } => {
                assert_eq!(cubic_disc, "-64831");
                // -64831 = -1324 * 49 + 45, i.e. 64831 = 1323 * 49 + 4
                assert_eq!(remainder, "45");
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn lutz_nagell_gaps() {
        let q = NumberField::rationals();
        for d in [1, 2] {
            let (e, p) = orig(&q, &q.from_i64(d));
            assert!(matches!(lutz_nagell(&e, &p), Err(EllError::Inconclusive(_))));
        }
        // y^2 = x^3 - x has the 2-torsion point (1, 0)
        let e = EllCurve::new(q.clone(), q.from_i64(-1), q.zero()).unwrap();
        let t = e.point(q.one(), q.zero()).unwrap();
        assert!(matches!(lutz_nagell(&e, &t), Err(EllError::Inconclusive(_))));
    }

    #[test]
    fn two_prime_over_q_sqrt_minus_647() {
        let k = NumberField::parse("t^2+647", 1000).unwrap();
        let d = k.parse_element("98+t").unwrap();
        let (e, p) = orig(&k, &d);
        let small = k.prime_with_root(29, 22).unwrap();
        let large = k.prime_with_root(67, 36).unwrap();
        let cert = nontorsion_two_prime(&e, &p, &small, &large, DEFAULT_COUNT_BOUND).unwrap();
        cert.verify(1000, DEFAULT_COUNT_BOUND).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: EInfOrderCert = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        back.verify(1000, DEFAULT_COUNT_BOUND).unwrap();
    }

    #[test]
    fn two_prime_rejects_small_gap() {
        let k = NumberField::parse("t^2+647", 1000).unwrap();
        let d = k.parse_element("98+t").unwrap();
        let (e, p) = orig(&k, &d);
        let p29 = k.prime_with_root(29, 22).unwrap();
        let p31 = k.primes_above(31).unwrap().into_iter().find(|q| q.residue_degree() == 1);
        if let Some(p31) = p31 {
            assert!(matches!(nontorsion_two_prime(&e, &p, &p29, &p31, 1000), Err(EllError::Hypothesis(_))));
        }
        assert!(!hasse_gap(29, 31));
        assert!(hasse_gap(29, 67));
        // 29 + 1 + 2 sqrt(29) = 40.77
        assert!(!hasse_gap(29, 40));
        assert!(hasse_gap(29, 41));
    }

    #[test]
    fn two_prime_over_q_sqrt_94546() {
        let k = NumberField::parse("t^2-94546", 1000).unwrap();
        let d = k.parse_element("5905-265t").unwrap();
        let beta = k.parse_element("-104-195t").unwrap();
        let e = EllCurve::new(k.clone(), k.neg(&k.square(&beta)), k.square(&d)).unwrap();
        let small = k.prime_with_root(29, 21).unwrap();
        let large = k.prime_with_root(67, 64).unwrap();
        for x in [k.zero(), beta.clone()] {
            let pt = e.point(x, d.clone()).unwrap();
            let cert = nontorsion_two_prime(&e, &pt, &small, &large, DEFAULT_COUNT_BOUND).unwrap();
            cert.verify(1000, DEFAULT_COUNT_BOUND).unwrap();
        }
    }

    /// Independent oracle: order by repeated addition over `F_p` with explicit formulas.
    fn naive_order(p: u64, a: u64, pt: (u64, u64)) -> u64 {
        let f = PrimeField::new(p).unwrap();
        let add = |u: Option<(u64, u64)>, v: (u64, u64)| -> Option<(u64, u64)> {
            let Some(u) = u else { return Some(v) };
            let lam = if u.0 == v.0 {
                if (u.1 + v.1) % p == 0 {
                    return None;
                }
                mul_mod((3 * mul_mod(u.0, u.0, p) + a) % p, f.inv(&(2 * u.1 % p)).unwrap(), p)
            } else {
                mul_mod((v.1 + p - u.1) % p, f.inv(&((v.0 + p - u.0) % p)).unwrap(), p)
            };
            let x3 = (mul_mod(lam, lam, p) + 2 * p - u.0 - v.0) % p;
            let y3 = (p - (u.1 + mul_mod(lam, (x3 + p - u.0) % p, p)) % p) % p;
            Some((x3, y3))
        };
        let mut acc = Some(pt);
        let mut n = 1;
        while acc.is_some() {
            acc = add(acc, pt);
            n += 1;
        }
        n
    }

    #[test]
    fn order_mismatch_over_q() {
        let q = NumberField::rationals();
        let (e, p) = orig(&q, &q.from_i64(7));
        let p3 = &q.primes_above(3).unwrap()[0];
        let p5 = &q.primes_above(5).unwrap()[0];
        // y^2 = x^3 + x + 1 with (0, 1) mod 3, and y^2 = x^3 + x + 4 with (0, 2) mod 5
        let o3 = naive_order(3, 1, (0, 1));
        let o5 = naive_order(5, 1, (0, 2));
        // both points generate: #E(F_3) = 4, #E(F_5) = 9
        assert_eq!((o3, o5), (4, 9));
        let cert = nontorsion_order_mismatch(&e, &p, p3, p5, 1000).unwrap();
        match &cert.method {
            InfOrderMethod::OrderMismatch { order_first, order_second, .. } => {
                assert_eq!((*order_first, *order_second), (o3, o5));
            }
            _ => unreachable!(),
        }
        cert.verify(100, 1000).unwrap();
    }

    #[test]
    fn order_mismatch_inconclusive_and_bad_reduction() {
        let q = NumberField::rationals();
        // (1, 0) on y^2 = x^3 - x is 2-torsion everywhere
        let e = EllCurve::new(q.clone(), q.from_i64(-1), q.zero()).unwrap();
        let t = e.point(q.one(), q.zero()).unwrap();
        let p3 = &q.primes_above(3).unwrap()[0];
        let p5 = &q.primes_above(5).unwrap()[0];
        assert!(matches!(nontorsion_order_mismatch(&e, &t, p3, p5, 1000), Err(EllError::Inconclusive(_))));
        // y^2 = x^3 + x + 9 has disc -16 * 2191 = -16 * 7 * 313
        let (e, p) = orig(&q, &q.from_i64(3));
        let p7 = &q.primes_above(7).unwrap()[0];
        assert_eq!(nontorsion_order_mismatch(&e, &p, p7, p5, 1000), Err(EllError::BadReduction(7)));
    }

    #[test]
    fn tampered_witness_fails() {
        let k = NumberField::parse("t^2+647", 1000).unwrap();
        let (e, p) = orig(&k, &k.parse_element("98+t").unwrap());
        let small = k.prime_with_root(29, 22).unwrap();
        let large = k.prime_with_root(67, 36).unwrap();
        let mut cert = nontorsion_two_prime(&e, &p, &small, &large, DEFAULT_COUNT_BOUND).unwrap();
        if let InfOrderMethod::TwoPrime { count_small, .. } = &mut cert.method {
            *count_small += 1;
        }
        assert!(cert.verify(1000, DEFAULT_COUNT_BOUND).is_err());
    }
}
