//! Elliptic curves `y^2 = x^3 + a2 x^2 + a4 x + a6` over exact fields of
//! characteristic other than 2, point counting over finite fields, and
//! certificates that a point has infinite order.

mod cert;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::exactfield::{order_dividing, Field, FieldError, FiniteField, GaloisField, PolyRing};
use crate::numberfield::{NfError, NumberField, UnramifiedPrime};

pub use cert::{
    hasse_gap, lutz_nagell, nontorsion_order_mismatch, nontorsion_two_prime, CurveSpec, EInfOrderCert, InfOrderMethod,
    PointSpec, DISC_NORMALIZATION,
};

/// Largest finite field that point counting will sweep.
pub const DEFAULT_COUNT_BOUND: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EllError {
    #[error("characteristic 2 is not supported for Weierstrass curves")]
    CharTwo,
    #[error("curve is singular")]
    Singular,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("field of order {q} exceeds the counting bound {bound}; use a smaller prime")]
    TooLarge { q: u64, bound: u64 },
    #[error("bad reduction at the prime over {0}")]
    BadReduction(u64),
    #[error("not integral at the prime over {0}")]
    NotIntegral(u64),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("certificate does not re-verify: {0}")]
    Verification(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    NumberField(#[from] NfError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EPoint<E> {
    Infinity,
    Affine { x: E, y: E },
}

impl<E> EPoint<E> {
    pub fn affine(x: E, y: E) -> Self {
        EPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, EPoint::Infinity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllCurve<F: Field> {
    field: F,
    a2: F::Elem,
    a4: F::Elem,
    a6: F::Elem,
    disc: F::Elem,
}

impl<F: Field> EllCurve<F> {
    /// `y^2 = x^3 + a x + b`.
    pub fn new(field: F, a: F::Elem, b: F::Elem) -> Result<Self, EllError> {
        let zero = field.zero();
        Self::general(field, zero, a, b)
    }

    /// `y^2 = x^3 + a2 x^2 + a4 x + a6`.
    pub fn general(field: F, a2: F::Elem, a4: F::Elem, a6: F::Elem) -> Result<Self, EllError> {
        if field.characteristic() == 2 {
            return Err(EllError::CharTwo);
        }
        let disc = discriminant(&field, &a2, &a4, &a6);
        if field.is_zero(&disc) {
            return Err(EllError::Singular);
        }
        Ok(EllCurve { field, a2, a4, a6, disc })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn a2(&self) -> &F::Elem {
        &self.a2
    }

    pub fn a4(&self) -> &F::Elem {
        &self.a4
    }

    pub fn a6(&self) -> &F::Elem {
        &self.a6
    }

    /// `-16(4 a^3 + 27 b^2)` when `a2 = 0`; in general `16 disc(x^3 + a2 x^2 + a4 x + a6)`.
    pub fn disc(&self) -> &F::Elem {
        &self.disc
    }

    /// `j = c4^3 / disc`.
    pub fn j_invariant(&self) -> F::Elem {
        let f = &self.field;
        // c4 = b2^2 - 24 b4 with b2 = 4 a2, b4 = 2 a4
        let b2 = f.mul(&f.from_i64(4), &self.a2);
        let b4 = f.mul(&f.from_i64(2), &self.a4);
        let c4 = f.sub(&f.square(&b2), &f.mul(&f.from_i64(24), &b4));
        f.div(&f.mul(&f.square(&c4), &c4), &self.disc).unwrap()
    }

    /// `x^3 + a2 x^2 + a4 x + a6`.
    pub fn rhs(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let t = f.add(&f.mul(&f.add(x, &self.a2), x), &self.a4);
        f.add(&f.mul(&t, x), &self.a6)
    }

    pub fn contains(&self, p: &EPoint<F::Elem>) -> bool {
        match p {
            EPoint::Infinity => true,
            EPoint::Affine { x, y } => self.field.square(y) == self.rhs(x),
        }
    }

    pub fn point(&self, x: F::Elem, y: F::Elem) -> Result<EPoint<F::Elem>, EllError> {
        let p = EPoint::affine(x, y);
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(EllError::NotOnCurve)
        }
    }

    pub fn neg(&self, p: &EPoint<F::Elem>) -> EPoint<F::Elem> {
        match p {
            EPoint::Infinity => EPoint::Infinity,
            EPoint::Affine { x, y } => EPoint::affine(x.clone(), self.field.neg(y)),
        }
    }

    /// Chord-and-tangent addition with `Infinity` as identity.
    pub fn add(&self, p: &EPoint<F::Elem>, q: &EPoint<F::Elem>) -> EPoint<F::Elem> {
        let f = &self.field;
        let (x1, y1, x2, y2) = match (p, q) {
            (EPoint::Infinity, _) => return q.clone(),
            (_, EPoint::Infinity) => return p.clone(),
            (EPoint::Affine { x: x1, y: y1 }, EPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if f.is_zero(&f.add(y1, y2)) {
                return EPoint::Infinity;
            }
            // (3x^2 + 2 a2 x + a4) / 2y
            let num = f.add(
                &f.add(&f.mul(&f.from_i64(3), &f.square(x1)), &f.mul(&f.from_i64(2), &f.mul(&self.a2, x1))),
                &self.a4,
            );
            f.div(&num, &f.mul(&f.from_i64(2), y1)).unwrap()
        } else {
            f.div(&f.sub(y2, y1), &f.sub(x2, x1)).unwrap()
        };
        let x3 = f.sub(&f.sub(&f.sub(&f.square(&lambda), &self.a2), x1), x2);
        let y3 = f.neg(&f.add(y1, &f.mul(&lambda, &f.sub(&x3, x1))));
        EPoint::affine(x3, y3)
    }

    pub fn double(&self, p: &EPoint<F::Elem>) -> EPoint<F::Elem> {
        self.add(p, p)
    }

    /// `n P` by double-and-add; negative `n` negates.
    pub fn smul(&self, n: &BigInt, p: &EPoint<F::Elem>) -> EPoint<F::Elem> {
        let base = if n.is_negative() { self.neg(p) } else { p.clone() };
        let m = n.abs();
        let mut acc = EPoint::Infinity;
        for i in (0..m.bits()).rev() {
            acc = self.double(&acc);
            if m.bit(i) {
                acc = self.add(&acc, &base);
            }
        }
        acc
    }

    pub fn smul_u64(&self, n: u64, p: &EPoint<F::Elem>) -> EPoint<F::Elem> {
        self.smul(&BigInt::from(n), p)
    }

    /// Maps coefficients through a ring homomorphism into another field.
    pub fn map<G: Field>(
        &self,
        target: G,
        phi: impl Fn(&F::Elem) -> Result<G::Elem, EllError>,
    ) -> Result<EllCurve<G>, EllError> {
        EllCurve::general(target, phi(&self.a2)?, phi(&self.a4)?, phi(&self.a6)?)
    }

    pub fn render(&self) -> String {
        let f = &self.field;
        let cubic = vec![self.a6.clone(), self.a4.clone(), self.a2.clone(), f.one()];
        let ring = PolyRing::new(f.clone());
        format!("y^2 = {}", ring.render(&ring.from_coeffs(cubic), "x"))
    }

    pub fn render_point(&self, p: &EPoint<F::Elem>) -> String {
        match p {
            EPoint::Infinity => "O".into(),
            EPoint::Affine { x, y } => format!("({}, {})", self.field.render(x), self.field.render(y)),
        }
    }
}

/// `16 disc(x^3 + a2 x^2 + a4 x + a6)`, the Weierstrass discriminant.
fn discriminant<F: Field>(f: &F, a2: &F::Elem, a4: &F::Elem, a6: &F::Elem) -> F::Elem {
    let c = |n: i64| f.from_i64(n);
    let b2 = f.mul(&c(4), a2);
    let b4 = f.mul(&c(2), a4);
    let b6 = f.mul(&c(4), a6);
    let b8 = f.sub(&f.mul(&c(4), &f.mul(a2, a6)), &f.square(a4));
    // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    let t1 = f.neg(&f.mul(&f.square(&b2), &b8));
    let t2 = f.mul(&c(8), &f.mul(&f.square(&b4), &b4));
    let t3 = f.mul(&c(27), &f.square(&b6));
    let t4 = f.mul(&c(9), &f.mul(&b2, &f.mul(&b4, &b6)));
    f.add(&f.sub(&f.sub(&t1, &t2), &t3), &t4)
}

impl<F: FiniteField> EllCurve<F> {
    fn check_bound(&self, bound: u64) -> Result<(), EllError> {
        let q = self.field.order();
        if q > bound {
            return Err(EllError::TooLarge { q, bound });
        }
        Ok(())
    }

    /// `#E(F_q)` by sweeping `x` and testing `rhs(x)` for squares.
    pub fn count_points(&self, bound: u64) -> Result<u64, EllError> {
        self.check_bound(bound)?;
        let f = &self.field;
        let mut n = 1u64;
        for x in f.elements() {
            n += (1 + f.legendre(&self.rhs(&x))) as u64;
        }
        Ok(n)
    }

    /// All affine points, in order of `x` index then `y` index.
    pub fn points(&self, bound: u64) -> Result<Vec<EPoint<F::Elem>>, EllError> {
        self.check_bound(bound)?;
        let f = &self.field;
        let mut out = Vec::new();
        for x in f.elements() {
            let r = self.rhs(&x);
            if let Some(y) = f.sqrt(&r) {
                let ny = f.neg(&y);
                let mut ys = vec![y];
                if ny != ys[0] {
                    ys.push(ny);
                }
                ys.sort_by_key(|y| f.index_of(y));
                out.extend(ys.into_iter().map(|y| EPoint::affine(x.clone(), y)));
            }
        }
        Ok(out)
    }

    /// Exact order of `p`, found among the divisors of `#E(F_q)`.
    pub fn point_order(&self, p: &EPoint<F::Elem>, bound: u64) -> Result<u64, EllError> {
        if !self.contains(p) {
            return Err(EllError::NotOnCurve);
        }
        let n = self.count_points(bound)?;
        Ok(order_dividing(n, |k| self.smul_u64(k, p).is_infinity()))
    }
}

/// Reduces a curve over `K` at `prime`; fails on bad reduction or non-integral coefficients.
pub fn reduce_curve(
    k: &NumberField,
    e: &EllCurve<NumberField>,
    prime: &UnramifiedPrime,
) -> Result<EllCurve<GaloisField>, EllError> {
    let red = |a: &crate::numberfield::NFElement| {
        k.reduce(a, prime).map_err(|e| match e {
            NfError::NotIntegral(p) => EllError::NotIntegral(p),
            e => e.into(),
        })
    };
    e.map(prime.residue.clone(), red).map_err(|e| match e {
        EllError::Singular => EllError::BadReduction(prime.p),
        e => e,
    })
}

/// Reduction of a `P`-integral point.
pub fn reduce_point(
    k: &NumberField,
    p: &EPoint<crate::numberfield::NFElement>,
    prime: &UnramifiedPrime,
) -> Result<EPoint<Vec<u64>>, EllError> {
    match p {
        EPoint::Infinity => Ok(EPoint::Infinity),
        EPoint::Affine { x, y } => {
            if !k.is_integral_at(x, prime.p) || !k.is_integral_at(y, prime.p) {
                return Err(EllError::NotIntegral(prime.p));
            }
            Ok(EPoint::affine(k.reduce(x, prime)?, k.reduce(y, prime)?))
        }
    }
}

/// Whether `y^2 = x^3 + x + d^2` and `y^2 = x^3 + x + d'^2` are isomorphic over the algebraic closure.
///
/// Equal `j`-invariants `6912 / (4 + 27 d^4)` is the same as `d^4 = d'^4`.
pub fn qbar_isomorphic<F: Field>(field: &F, d: &F::Elem, d2: &F::Elem) -> Result<bool, EllError> {
    let e1 = EllCurve::new(field.clone(), field.one(), field.square(d))?;
    let e2 = EllCurve::new(field.clone(), field.one(), field.square(d2))?;
    let fourth = |a: &F::Elem| field.square(&field.square(a));
    let same = fourth(d) == fourth(d2);
    debug_assert_eq!(same, e1.j_invariant() == e2.j_invariant());
    Ok(same)
}

/// `P1 + P2 + P3 = O` for three points on a common horizontal line.
pub fn collinear_sum_zero<F: Field>(
    e: &EllCurve<F>,
    p1: &EPoint<F::Elem>,
    p2: &EPoint<F::Elem>,
    p3: &EPoint<F::Elem>,
) -> Result<bool, EllError> {
    for p in [p1, p2, p3] {
        if !e.contains(p) || p.is_infinity() {
            return Err(EllError::NotOnCurve);
        }
    }
    Ok(e.add(&e.add(p1, p2), p3).is_infinity())
}

/// `true` when every coordinate of the point is a rational integer (degree-one fields).
pub(crate) fn integral_rational(a: &crate::numberfield::NFElement) -> Option<BigInt> {
    a.as_rational().filter(|c| c.denom().is_one()).map(|c| c.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, ratio, PrimeField, Rational, Rationals};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fp_curve(p: u64, a: i64, b: i64) -> EllCurve<PrimeField> {
        let f = PrimeField::new(p).unwrap();
        EllCurve::new(f, f.reduce_i64(a), f.reduce_i64(b)).unwrap()
    }

    fn q82() -> EllCurve<Rationals> {
        EllCurve::new(Rationals, rat(1), rat(6724)).unwrap()
    }

    #[test]
    fn creation() {
        let e = q82();
        assert_eq!(*e.disc(), rat(-16 * (4 + 27 * 6724 * 6724)));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(EllCurve::new(f5, 0, 0).unwrap_err(), EllError::Singular);
        let k = NumberField::parse("t^2+647", 1000).unwrap();
        let d = k.parse_element("98+t").unwrap();
        assert!(EllCurve::new(k.clone(), k.one(), k.square(&d)).is_ok());
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(EllCurve::new(f2, 1, 1).unwrap_err(), EllError::CharTwo);
    }

    #[test]
    fn general_discriminant_matches_cubic_discriminant() {
        // y^2 = (x-1)(x-2)(x-3) + 25
        let e = EllCurve::general(Rationals, rat(-6), rat(11), rat(19)).unwrap();
        let ring = crate::exactfield::PolyRing::new(Rationals);
        let cubic = ring.from_i64s(&[19, 11, -6, 1]);
        assert_eq!(*e.disc(), rat(16) * ring.discriminant(&cubic));
    }

    #[test]
    fn generators_and_chord() {
        let e = q82();
        for (x, y) in [(rat(0), rat(82)), (rat(12), rat(92)), (rat(60), rat(472)), (ratio(465, 4), ratio(10049, 8))] {
            assert!(e.contains(&EPoint::affine(x, y)));
        }
        assert!(!e.contains(&EPoint::affine(rat(1), rat(1))));
        let p = e.point(rat(0), rat(82)).unwrap();
        let q = e.point(rat(12), rat(92)).unwrap();
        // slope 10/12 = 5/6; x3 = 25/36 - 12, y3 = -(82 + 5/6 x3)
        assert_eq!(e.add(&p, &q), EPoint::affine(ratio(-407, 36), ratio(-15677, 216)));
        assert_eq!(e.add(&p, &EPoint::Infinity), p);
        assert!(e.add(&p, &e.neg(&p)).is_infinity());
    }

    #[test]
    fn small_counts() {
        assert_eq!(fp_curve(3, 1, 0).count_points(100).unwrap(), 4);
        assert_eq!(fp_curve(5, 1, 1).count_points(100).unwrap(), 9);
        let e = fp_curve(3, 1, 0);
        assert_eq!(e.point_order(&EPoint::affine(2, 1), 100).unwrap(), 4);
        assert_eq!(e.point_order(&EPoint::affine(0, 0), 100).unwrap(), 2);
        assert_eq!(e.point_order(&EPoint::Infinity, 100).unwrap(), 1);
        assert!(matches!(fp_curve(101, 1, 1).count_points(100), Err(EllError::TooLarge { .. })));
    }

    /// Independent oracle: count pairs `(x, y)` directly.
    fn brute_count(p: u64, a: u64, b: u64) -> u64 {
        let mut n = 1;
        for x in 0..p {
            for y in 0..p {
                if (y * y) % p == (x * x % p * x + a * x + b) % p {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn counts_match_brute_force_and_hasse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let primes = crate::exactfield::primes_up_to(97);
        let mut tested = 0;
        while tested < 100 {
            let p = primes[1 + rand::Rng::gen_range(&mut rng, 0..primes.len() - 1)];
            let a = rand::Rng::gen_range(&mut rng, 0..p);
            let b = rand::Rng::gen_range(&mut rng, 0..p);
            let f = PrimeField::new(p).unwrap();
            let Ok(e) = EllCurve::new(f, a, b) else { continue };
            let n = e.count_points(1000).unwrap();
            assert_eq!(n, brute_count(p, a, b));
            let t = n as i64 - p as i64 - 1;
            assert!((t * t) as u64 <= 4 * p, "Hasse fails for p={p} a={a} b={b}");
            tested += 1;
        }
    }

    #[test]
    fn extension_field_counting() {
        let f = GaloisField::new(3, 2).unwrap();
        let e = EllCurve::new(f.clone(), f.one(), f.zero()).unwrap();
        // over F_3, a_p = 0 so #E(F_9) = 9 + 1 - (a^2 - 2*3) = 16
        assert_eq!(e.count_points(100).unwrap(), 16);
        for p in e.points(100).unwrap() {
            assert!(e.smul_u64(16, &p).is_infinity());
        }
    }

    #[test]
    fn qbar_isomorphism() {
        let q = Rationals;
        assert!(qbar_isomorphic(&q, &rat(3), &rat(3)).unwrap());
        assert!(qbar_isomorphic(&q, &rat(3), &rat(-3)).unwrap());
        assert!(!qbar_isomorphic(&q, &rat(3), &rat(5)).unwrap());
        let k = NumberField::parse("t^2+1", 100).unwrap();
        let d = k.from_i64(3);
        let id = k.mul(&k.theta(), &d);
        assert!(qbar_isomorphic(&k, &d, &id).unwrap());
        assert_eq!(
            EllCurve::new(q, rat(1), rat(6724)).unwrap().j_invariant(),
            ratio(6912, 4 + 27 * 6724 * 6724)
        );
    }

    #[test]
    fn collinear_points() {
        // (x-1)(x-2)(x-3) + 25
        let e = EllCurve::general(Rationals, rat(-6), rat(11), rat(19)).unwrap();
        let pts: Vec<_> = [1, 2, 3].iter().map(|&a| EPoint::affine(rat(a), rat(5))).collect();
        assert!(collinear_sum_zero(&e, &pts[0], &pts[1], &pts[2]).unwrap());
        // x(x - b)(x + b) + d^2 with b = 4, d = 7
        let e = EllCurve::new(Rationals, rat(-16), rat(49)).unwrap();
        let pts: Vec<_> = [0, 4, -4].iter().map(|&a| EPoint::affine(rat(a), rat(7))).collect();
        assert!(collinear_sum_zero(&e, &pts[0], &pts[1], &pts[2]).unwrap());
        assert!(collinear_sum_zero(&e, &pts[0], &pts[1], &EPoint::affine(rat(1), rat(1))).is_err());
    }

    #[test]
    fn shanks_points_are_collinear() {
        let k = NumberField::parse("t^3-50t^2-53t-1", 1000).unwrap();
        let rho = k.theta();
        let rho2 = k.neg(&k.inv(&k.add(&k.one(), &rho)).unwrap());
        let rho3 = k.neg(&k.inv(&k.add(&k.one(), &rho2)).unwrap());
        let d = k.from_i64(50);
        // (x - rho)(x - rho2)(x - rho3) + d^2 = f(x) + d^2
        let e = EllCurve::general(k.clone(), k.from_i64(-50), k.from_i64(-53), k.from_i64(-1 + 2500)).unwrap();
        let pts: Vec<_> = [rho, rho2, rho3].into_iter().map(|r| EPoint::affine(r, d.clone())).collect();
        assert!(collinear_sum_zero(&e, &pts[0], &pts[1], &pts[2]).unwrap());
    }

    #[test]
    fn reduction_commutes_with_addition() {
        let k = NumberField::parse("t^2+647", 1000).unwrap();
        let d = k.parse_element("98+t").unwrap();
        let e = EllCurve::new(k.clone(), k.one(), k.square(&d)).unwrap();
        let p = e.point(k.zero(), d.clone()).unwrap();
        let prime = k.prime_with_root(29, 22).unwrap();
        let er = reduce_curve(&k, &e, &prime).unwrap();
        let pr = reduce_point(&k, &p, &prime).unwrap();
        let mut acc = p.clone();
        let mut acc_r = pr.clone();
        for _ in 0..4 {
            acc = e.add(&acc, &p);
            acc_r = er.add(&acc_r, &pr);
            if let Ok(red) = reduce_point(&k, &acc, &prime) {
                assert_eq!(red, acc_r);
            }
        }
    }

    fn group_law_axioms<F: FiniteField>(e: &EllCurve<F>, seed: u64) {
        let pts = e.points(100_000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pick = || {
            let i = rand::Rng::gen_range(&mut rng, 0..=pts.len());
            pts.get(i).cloned().unwrap_or(EPoint::Infinity)
        };
        for _ in 0..500 {
            let (p, q, r) = (pick(), pick(), pick());
            assert_eq!(e.add(&e.add(&p, &q), &r), e.add(&p, &e.add(&q, &r)));
            assert_eq!(e.add(&p, &q), e.add(&q, &p));
            assert_eq!(e.add(&p, &EPoint::Infinity), p);
            assert!(e.add(&p, &e.neg(&p)).is_infinity());
            assert!(e.contains(&e.add(&p, &q)));
        }
    }

    #[test]
    fn group_axioms_on_sample_curves() {
        group_law_axioms(&fp_curve(101, 1, 82 * 82), 1);
        group_law_axioms(&fp_curve(67, 1, 0), 2);
        let f = PrimeField::new(97).unwrap();
        group_law_axioms(&EllCurve::general(f, 91, 11, 19).unwrap(), 3);
        let g = GaloisField::new(5, 2).unwrap();
        let e = EllCurve::new(g.clone(), g.generator(), g.one()).unwrap();
        group_law_axioms(&e, 4);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn lagrange(pi in 1usize..25, a in 0u64..1000, b in 0u64..1000) {
            let p = crate::exactfield::primes_up_to(100)[pi];
            let f = PrimeField::new(p).unwrap();
            let Ok(e) = EllCurve::new(f, a % p, b % p) else { return Ok(()) };
            let n = e.count_points(1000).unwrap();
            for pt in e.points(1000).unwrap() {
                prop_assert!(e.smul_u64(n, &pt).is_infinity());
            }
        }

        #[test]
        fn smul_is_additive(m in -20i64..20, n in -20i64..20) {
            let e = fp_curve(1009, 1, 49);
            let p = e.points(10_000).unwrap()[5].clone();
            let lhs = e.smul(&BigInt::from(m + n), &p);
            let rhs = e.add(&e.smul(&BigInt::from(m), &p), &e.smul(&BigInt::from(n), &p));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rational_curve_doubling() {
        let e = q82();
        let p = e.point(rat(0), rat(82)).unwrap();
        let two = e.double(&p);
        assert!(e.contains(&two));
        assert_eq!(e.smul(&BigInt::from(2), &p), two);
        let _: Rational = match two {
            EPoint::Affine { x, .. } => x,
            EPoint::Infinity => unreachable!(),
        };
    }
}
