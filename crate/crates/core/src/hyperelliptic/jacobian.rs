//! Mumford representation and Cantor's algorithm.

use num_bigint::BigInt;
use num_traits::Signed;

use super::{HypCurve, HypError};
use crate::exactfield::{order_dividing, Field, FiniteField, Poly};

/// The class of `div(u, v) - deg(u) * infinity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MumfordDivisor<E> {
    pub u: Poly<E>,
    pub v: Poly<E>,
}

impl<F: Field> HypCurve<F> {
    pub fn neutral(&self) -> MumfordDivisor<F::Elem> {
        let ring = self.ring();
        MumfordDivisor { u: ring.one(), v: ring.zero() }
    }

    pub fn is_neutral(&self, d: &MumfordDivisor<F::Elem>) -> bool {
        *d == self.neutral()
    }

    /// `u` monic, `deg v < deg u <= genus` and `u | v^2 + h v - g`.
    pub fn is_reduced_divisor(&self, d: &MumfordDivisor<F::Elem>) -> bool {
        let ring = self.ring();
        let du = d.u.degree().unwrap_or(usize::MAX);
        ring.is_monic(&d.u)
            && du <= self.genus
            && d.v.degree().map_or(true, |dv| dv < du)
            && ring.divides(&d.u, &self.mumford_residual(&d.v))
    }

    fn mumford_residual(&self, v: &Poly<F::Elem>) -> Poly<F::Elem> {
        let ring = self.ring();
        ring.sub(&ring.add(&ring.square(v), &ring.mul(&self.h, v)), &self.g)
    }

    pub fn divisor(&self, u: Poly<F::Elem>, v: Poly<F::Elem>) -> Result<MumfordDivisor<F::Elem>, HypError> {
        let d = MumfordDivisor { u, v };
        if self.is_reduced_divisor(&d) {
            Ok(d)
        } else {
            Err(HypError::InvalidDivisor)
        }
    }

    /// `[P - infinity]` as `(x - x_P, y_P)`.
    pub fn embed(&self, x: &F::Elem, y: &F::Elem) -> Result<MumfordDivisor<F::Elem>, HypError> {
        if !self.contains(x, y) {
            return Err(HypError::NotOnCurve);
        }
        let ring = self.ring();
        Ok(MumfordDivisor { u: ring.linear(x), v: ring.constant(y.clone()) })
    }

    /// `(u, -h - v mod u)`.
    pub fn neg(&self, d: &MumfordDivisor<F::Elem>) -> MumfordDivisor<F::Elem> {
        let ring = self.ring();
        let v = ring.rem(&ring.neg(&ring.add(&self.h, &d.v)), &d.u);
        MumfordDivisor { u: d.u.clone(), v }
    }

    /// Cantor composition followed by reduction.
    pub fn add(&self, d1: &MumfordDivisor<F::Elem>, d2: &MumfordDivisor<F::Elem>) -> MumfordDivisor<F::Elem> {
        let ring = self.ring();
        let (da, e1, e2) = ring.xgcd(&d1.u, &d2.u);
        let w = ring.add(&ring.add(&d1.v, &d2.v), &self.h);
        let (d, c1, c2) = ring.xgcd(&da, &w);
        let s1 = ring.mul(&c1, &e1);
        let s2 = ring.mul(&c1, &e2);
        let s3 = c2;
        let u = ring.div_exact(&ring.mul(&d1.u, &d2.u), &ring.square(&d)).expect("d^2 divides u1 u2");
        let vv = ring.add(&ring.mul(&d1.v, &d2.v), &self.g);
        let num = ring.add(
            &ring.add(&ring.mul(&s1, &ring.mul(&d1.u, &d2.v)), &ring.mul(&s2, &ring.mul(&d2.u, &d1.v))),
            &ring.mul(&s3, &vv),
        );
        let v = ring.rem(&ring.div_exact(&num, &d).expect("d divides the numerator"), &u);
        self.reduce(MumfordDivisor { u, v })
    }

    fn reduce(&self, mut d: MumfordDivisor<F::Elem>) -> MumfordDivisor<F::Elem> {
        let ring = self.ring();
        while d.u.degree().unwrap() > self.genus {
            let t = ring.sub(&ring.sub(&self.g, &ring.mul(&d.v, &self.h)), &ring.square(&d.v));
            let u = ring.monic(&ring.div_exact(&t, &d.u).expect("u divides g - v h - v^2"));
            let v = ring.rem(&ring.neg(&ring.add(&self.h, &d.v)), &u);
            d = MumfordDivisor { u, v };
        }
        d.u = ring.monic(&d.u);
        d.v = ring.rem(&d.v, &d.u);
        d
    }

    pub fn double(&self, d: &MumfordDivisor<F::Elem>) -> MumfordDivisor<F::Elem> {
        self.add(d, d)
    }

    pub fn smul(&self, n: &BigInt, d: &MumfordDivisor<F::Elem>) -> MumfordDivisor<F::Elem> {
        let base = if n.is_negative() { self.neg(d) } else { d.clone() };
        let m = n.abs();
        let mut acc = self.neutral();
        for i in (0..m.bits()).rev() {
            acc = self.double(&acc);
            if m.bit(i) {
                acc = self.add(&acc, &base);
            }
        }
        acc
    }

    pub fn smul_u64(&self, n: u64, d: &MumfordDivisor<F::Elem>) -> MumfordDivisor<F::Elem> {
        self.smul(&BigInt::from(n), d)
    }

    pub fn render_divisor(&self, d: &MumfordDivisor<F::Elem>) -> String {
        let ring = self.ring();
        format!("({}, {})", ring.render(&d.u, "x"), ring.render(&d.v, "x"))
    }
}

impl<F: FiniteField> HypCurve<F> {
    /// Exact order of `d` given the group order `#J(F_q)`.
    pub fn divisor_order(&self, d: &MumfordDivisor<F::Elem>, jacobian_order: u64) -> u64 {
        order_dividing(jacobian_order, |k| self.is_neutral(&self.smul_u64(k, d)))
    }
}
