//! Odd-degree hyperelliptic curves `y^2 + h(x) y = g(x)`, Mumford divisors
//! with Cantor's algorithm, L-polynomials over finite fields, and
//! certificates for non-torsion points and Jacobian rank.

mod cert;
mod jacobian;
mod lpoly;

use thiserror::Error;

use crate::exactfield::{Field, FieldError, FiniteField, GaloisField, Poly, PolyRing};
use crate::numberfield::{NFElement, NfError, NumberField, UnramifiedPrime};

pub use cert::{coleman_rank, nontorsion_weierstrass, HCurveSpec, HInfOrderCert, HPointSpec, HRankCert, WEIERSTRASS_ARGUMENT};
pub use jacobian::MumfordDivisor;
pub use lpoly::{embed_into_extension, LPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypError {
    #[error("g must be monic of odd degree at least 3")]
    BadDegree,
    #[error("deg h must not exceed the genus")]
    HTooLarge,
    #[error("curve is singular")]
    Singular,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("pair (u, v) violates the Mumford condition")]
    InvalidDivisor,
    #[error("field of order {q} exceeds the counting bound {bound}; use a smaller prime")]
    TooLarge { q: u64, bound: u64 },
    #[error("point counts are inconsistent: {0}")]
    CountMismatch(String),
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

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypCurve<F: Field> {
    field: F,
    h: Poly<F::Elem>,
    g: Poly<F::Elem>,
    genus: usize,
}

impl<F: Field> HypCurve<F> {
    /// `y^2 + h y = g` with `g` monic of degree `2 genus + 1`.
    pub fn new(field: F, h: Poly<F::Elem>, g: Poly<F::Elem>) -> Result<Self, HypError> {
        let ring = PolyRing::new(field.clone());
        let n = g.degree().ok_or(HypError::BadDegree)?;
        if n < 3 || n % 2 == 0 || !ring.is_monic(&g) {
            return Err(HypError::BadDegree);
        }
        let genus = (n - 1) / 2;
        if h.degree().is_some_and(|dh| dh > genus) {
            return Err(HypError::HTooLarge);
        }
        let curve = HypCurve { field, h, g, genus };
        if !curve.is_nonsingular() {
            return Err(HypError::Singular);
        }
        Ok(curve)
    }

    /// `y^2 = g`.
    pub fn simple(field: F, g: Poly<F::Elem>) -> Result<Self, HypError> {
        let h = PolyRing::new(field.clone()).zero();
        Self::new(field, h, g)
    }

    fn is_nonsingular(&self) -> bool {
        let ring = self.ring();
        if self.field.characteristic() == 2 {
            if self.h.is_zero() {
                return false;
            }
            // singular points satisfy h = 0 and g'^2 + h'^2 g = 0
            let dg = ring.derivative(&self.g);
            let dh = ring.derivative(&self.h);
            let w = ring.add(&ring.square(&dg), &ring.mul(&ring.square(&dh), &self.g));
            return ring.is_one(&ring.gcd(&self.h, &w));
        }
        ring.is_separable(&self.two_torsion_poly())
    }

    /// `h^2 + 4 g`; its roots are the `x`-coordinates of the Weierstrass points.
    pub fn two_torsion_poly(&self) -> Poly<F::Elem> {
        let ring = self.ring();
        ring.add(&ring.square(&self.h), &ring.scale(&self.field.from_i64(4), &self.g))
    }

    pub(crate) fn ring(&self) -> PolyRing<F> {
        PolyRing::new(self.field.clone())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn h(&self) -> &Poly<F::Elem> {
        &self.h
    }

    pub fn g(&self) -> &Poly<F::Elem> {
        &self.g
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn contains(&self, x: &F::Elem, y: &F::Elem) -> bool {
        let ring = self.ring();
        let f = &self.field;
        let lhs = f.add(&f.square(y), &f.mul(&ring.eval(&self.h, x), y));
        lhs == ring.eval(&self.g, x)
    }

    /// Fixed by the hyperelliptic involution `y -> -y - h(x)`.
    pub fn is_weierstrass(&self, x: &F::Elem, y: &F::Elem) -> bool {
        let f = &self.field;
        f.is_zero(&f.add(&f.add(y, y), &self.ring().eval(&self.h, x)))
    }

    /// Maps coefficients into another field.
    pub fn map<G: Field>(
        &self,
        target: G,
        phi: impl Fn(&F::Elem) -> Result<G::Elem, HypError>,
    ) -> Result<HypCurve<G>, HypError> {
        let ring = PolyRing::new(target.clone());
        let mp = |p: &Poly<F::Elem>| -> Result<Poly<G::Elem>, HypError> {
            Ok(ring.from_coeffs(p.coeffs().iter().map(&phi).collect::<Result<_, _>>()?))
        };
        HypCurve::new(target, mp(&self.h)?, mp(&self.g)?)
    }

    pub fn render(&self) -> String {
        let ring = self.ring();
        if self.h.is_zero() {
            format!("y^2 = {}", ring.render(&self.g, "x"))
        } else {
            format!("y^2 + ({})y = {}", ring.render(&self.h, "x"), ring.render(&self.g, "x"))
        }
    }
}

/// Absolute trace to the prime field.
fn absolute_trace<F: FiniteField>(f: &F, z: &F::Elem) -> F::Elem {
    let p = f.characteristic();
    let mut acc = f.zero();
    let mut t = z.clone();
    for _ in 0..f.degree() {
        acc = f.add(&acc, &t);
        t = f.pow_u64(&t, p);
    }
    acc
}

impl<F: FiniteField> HypCurve<F> {
    fn check_bound(&self, bound: u64) -> Result<(), HypError> {
        let q = self.field.order();
        if q > bound {
            return Err(HypError::TooLarge { q, bound });
        }
        Ok(())
    }

    /// Number of `y` with `y^2 + h(x) y = g(x)` for fixed `x`.
    fn solutions_at(&self, x: &F::Elem) -> u64 {
        let f = &self.field;
        let ring = self.ring();
        let hx = ring.eval(&self.h, x);
        let gx = ring.eval(&self.g, x);
        if f.characteristic() != 2 {
            let disc = f.add(&f.square(&hx), &f.mul(&f.from_i64(4), &gx));
            return (1 + f.legendre(&disc)) as u64;
        }
        if f.is_zero(&hx) {
            return 1;
        }
        // y = h z turns the equation into z^2 + z = g / h^2
        let c = f.div(&gx, &f.square(&hx)).unwrap();
        if f.is_zero(&absolute_trace(f, &c)) {
            2
        } else {
            0
        }
    }

    /// `#C(F_q)`: affine points plus the single point at infinity.
    pub fn count_points(&self, bound: u64) -> Result<u64, HypError> {
        self.check_bound(bound)?;
        Ok(1 + self.field.elements().map(|x| self.solutions_at(&x)).sum::<u64>())
    }

    /// All affine points, by `x` index then `y` index.
    pub fn points(&self, bound: u64) -> Result<Vec<(F::Elem, F::Elem)>, HypError> {
        self.check_bound(bound)?;
        let f = &self.field;
        let mut out = Vec::new();
        for x in f.elements() {
            if self.solutions_at(&x) == 0 {
                continue;
            }
            for y in f.elements() {
                if self.contains(&x, &y) {
                    out.push((x.clone(), y));
                }
            }
        }
        Ok(out)
    }
}

/// The curve over `K` reduced at `prime`; fails on bad reduction.
pub fn reduce_curve(
    k: &NumberField,
    c: &HypCurve<NumberField>,
    prime: &UnramifiedPrime,
) -> Result<HypCurve<GaloisField>, HypError> {
    let red = |a: &NFElement| {
        k.reduce(a, prime).map_err(|e| match e {
            NfError::NotIntegral(p) => HypError::NotIntegral(p),
            e => e.into(),
        })
    };
    c.map(prime.residue.clone(), red).map_err(|e| match e {
        HypError::Singular | HypError::BadDegree | HypError::HTooLarge => HypError::BadReduction(prime.p),
        e => e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, PrimeField, Rationals};

    fn fp_curve(p: u64, g: &[i64]) -> HypCurve<PrimeField> {
        let f = PrimeField::new(p).unwrap();
        HypCurve::simple(f, PolyRing::new(f).from_i64s(g)).unwrap()
    }

    #[test]
    fn creation() {
        let q = PolyRing::new(Rationals);
        let c = HypCurve::simple(Rationals, q.from_i64s(&[-1 + 49, -1, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.genus(), 2);
        let c = HypCurve::simple(Rationals, q.from_i64s(&[3 + 121, -7, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.genus(), 3);
        let f5 = PrimeField::new(5).unwrap();
        let r = PolyRing::new(f5);
        // (x - 1)^2 (x^3 + x + 1)
        let g = r.mul(&r.square(&r.from_i64s(&[-1, 1])), &r.from_i64s(&[1, 1, 0, 1]));
        assert_eq!(HypCurve::simple(f5, g).unwrap_err(), HypError::Singular);
        assert_eq!(HypCurve::simple(Rationals, q.from_i64s(&[1, 0, 0, 0, 1])).unwrap_err(), HypError::BadDegree);
        let _ = rat(0);
    }

    #[test]
    fn counts() {
        assert_eq!(fp_curve(5, &[0, -1, 0, 0, 0, 1]).count_points(100).unwrap(), 6);
        assert_eq!(fp_curve(5, &[1, 1, 0, 0, 0, 1]).count_points(100).unwrap(), 6);
        // (x+19)(x+20)(x+21)(x+22)(x+23) + 400 mod 5
        let f5 = PrimeField::new(5).unwrap();
        let r = PolyRing::new(f5);
        let mut g = r.one();
        for a in 19..=23 {
            g = r.mul(&g, &r.from_i64s(&[a, 1]));
        }
        g = r.add(&g, &r.from_i64s(&[400]));
        assert_eq!(g, r.from_i64s(&[0, -1, 0, 0, 0, 1]));
        assert_eq!(HypCurve::simple(f5, g).unwrap().count_points(100).unwrap(), 6);
    }

    #[test]
    fn counts_match_enumeration() {
        for (p, g) in [(7u64, vec![1i64, 2, 0, 3, 0, 1]), (11, vec![5, 0, 1, 0, 0, 0, 0, 1]), (13, vec![2, 1, 1, 1])] {
            let c = fp_curve(p, &g);
            assert_eq!(c.count_points(1000).unwrap(), 1 + c.points(1000).unwrap().len() as u64);
        }
    }

    #[test]
    fn characteristic_two() {
        // y^2 + y = x^5 over F_2 and F_4
        let f2 = GaloisField::prime(2).unwrap();
        let r = PolyRing::new(f2.clone());
        let g = r.monomial(f2.one(), 5);
        let c = HypCurve::new(f2.clone(), r.one(), g.clone()).unwrap();
        assert_eq!(c.count_points(100).unwrap(), 1 + c.points(100).unwrap().len() as u64);
        assert!(HypCurve::simple(f2, g).is_err());
        let f4 = GaloisField::new(2, 2).unwrap();
        let r4 = PolyRing::new(f4.clone());
        let c4 = HypCurve::new(f4.clone(), r4.one(), r4.monomial(f4.one(), 5)).unwrap();
        assert_eq!(c4.count_points(100).unwrap(), 1 + c4.points(100).unwrap().len() as u64);
    }
}
