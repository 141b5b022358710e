use std::fmt;
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;

use super::Rational;

/// A field given as a value; elements are plain data interpreted by the field.
///
/// Element equality must be structural equality: every implementation keeps
/// its elements in a canonical form.
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of an integer under the canonical map `Z -> F`.
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    /// Zero for characteristic zero.
    fn characteristic(&self) -> u64;
    /// Human-readable rendering, used in reports.
    fn render(&self, a: &Self::Elem) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut result = self.one();
        for i in (0..e.bits()).rev() {
            result = self.square(&result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    fn pow_u64(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        self.pow(a, &BigUint::from(e))
    }
}

/// Finite fields small enough to enumerate.
///
/// Elements are indexed by `0..order()`; index 0 is zero and index 1 is one.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    fn degree(&self) -> u32;
    fn element(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;

    fn prime(&self) -> u64 {
        self.characteristic()
    }

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.element(i)))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.element(rng.gen_range(0..self.order()))
    }

    /// Quadratic character: 0 for zero, 1 for nonzero squares, -1 otherwise.
    fn legendre(&self, a: &Self::Elem) -> i8 {
        if self.is_zero(a) {
            return 0;
        }
        if self.characteristic() == 2 {
            return 1;
        }
        let e = BigUint::from((self.order() - 1) / 2);
        if self.is_one(&self.pow(a, &e)) {
            1
        } else {
            -1
        }
    }

    fn is_square(&self, a: &Self::Elem) -> bool {
        self.legendre(a) >= 0
    }

    /// A square root of `a`, if one exists (Tonelli-Shanks; Frobenius inverse in characteristic 2).
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        let q = self.order();
        if self.characteristic() == 2 {
            return Some(self.pow(a, &BigUint::from(q / 2)));
        }
        if self.legendre(a) != 1 {
            return None;
        }
        let mut s = 0u32;
        let mut t = q - 1;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        let nonresidue = (2..q)
            .map(|i| self.element(i))
            .find(|z| self.legendre(z) == -1)?;
        let mut m = s;
        let mut c = self.pow_u64(&nonresidue, t);
        let mut r = self.pow_u64(a, (t + 1) / 2);
        let mut tt = self.pow_u64(a, t);
        while !self.is_one(&tt) {
            let mut i = 0u32;
            let mut probe = tt.clone();
            while !self.is_one(&probe) {
                probe = self.square(&probe);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = self.square(&b);
            }
            m = i;
            c = self.square(&b);
            tt = self.mul(&tt, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_int(&self, n: &BigInt) -> Rational {
        Rational::from_integer(n.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn render(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
}

/// `true` when `a` is a rational integer.
pub fn is_integral(a: &Rational) -> bool {
    a.denom().is_one()
}
