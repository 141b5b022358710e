use num_bigint::BigUint;

use super::Field;

/// Dense univariate polynomial, constant term first, no trailing zeros.
///
/// The zero polynomial has an empty coefficient vector and degree `None`.
/// Values are only built through [`PolyRing`], which owns the notion of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// Polynomial arithmetic over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(&self, coeffs: &[i64]) -> Poly<F::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn x(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn monomial(&self, c: F::Elem, n: usize) -> Poly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); n];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    /// `x - a`
    pub fn linear(&self, a: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![self.field.neg(a), self.field.one()])
    }

    pub fn is_one(&self, f: &Poly<F::Elem>) -> bool {
        f.coeffs.len() == 1 && self.field.is_one(&f.coeffs[0])
    }

    pub fn is_monic(&self, f: &Poly<F::Elem>) -> bool {
        f.lead().is_some_and(|c| self.field.is_one(c))
    }

    fn coeff_or_zero(&self, f: &Poly<F::Elem>, i: usize) -> F::Elem {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.field.add(x, y),
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly { coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect() }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                let t = self.field.mul(x, y);
                coeffs[i + j] = self.field.add(&coeffs[i + j], &t);
            }
        }
        self.from_coeffs(coeffs)
    }

    pub fn square(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.mul(a, a)
    }

    pub fn scale(&self, c: &F::Elem, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(c, x)).collect())
    }

    pub fn pow(&self, a: &Poly<F::Elem>, mut e: u64) -> Poly<F::Elem> {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.square(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        let lead_inv = self.field.inv(b.lead().unwrap()).expect("nonzero lead");
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return (self.zero(), a.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = self.field.mul(&rem[i + db], &lead_inv);
            if !self.field.is_zero(&c) {
                for (j, bj) in b.coeffs.iter().enumerate() {
                    let t = self.field.mul(&c, bj);
                    rem[i + j] = self.field.sub(&rem[i + j], &t);
                }
            }
            quot[i] = c;
        }
        rem.truncate(db);
        (self.from_coeffs(quot), self.from_coeffs(rem))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divrem(a, b).1
    }

    /// Quotient when `b` divides `a`; `None` otherwise.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let (q, r) = self.divrem(a, b);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, b: &Poly<F::Elem>, a: &Poly<F::Elem>) -> bool {
        self.rem(a, b).is_zero()
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.lead() {
            None => self.zero(),
            Some(c) => self.scale(&self.field.inv(c).unwrap(), a),
        }
    }

    /// Monic greatest common divisor; `gcd(f, 0) = monic(f)`, `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        while !r1.is_zero() {
            let r = self.rem(&r0, &r1);
            r0 = r1;
            r1 = r;
        }
        self.monic(&r0)
    }

    /// Returns `(g, s, t)` with `g = s*a + t*b` and `g` the monic gcd.
    pub fn xgcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(c) => {
                let ci = self.field.inv(c).unwrap();
                (self.scale(&ci, &r0), self.scale(&ci, &s0), self.scale(&ci, &t0))
            }
        }
    }

    /// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
    pub fn inv_mod(&self, a: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let (g, s, _) = self.xgcd(a, m);
        self.is_one(&g).then(|| self.rem(&s, m))
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let coeffs = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(&self.field.from_i64(i as i64), c))
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        a.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| self.field.add(&self.field.mul(&acc, x), c))
    }

    /// `f(g(x))`
    pub fn compose(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        f.coeffs.iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, g), &self.constant(c.clone()))
        })
    }

    pub fn mul_mod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(
        &self,
        base: &Poly<F::Elem>,
        e: &BigUint,
        m: &Poly<F::Elem>,
    ) -> Poly<F::Elem> {
        let base = self.rem(base, m);
        let mut acc = self.rem(&self.one(), m);
        for i in (0..e.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mul_mod(&acc, &base, m);
            }
        }
        acc
    }

    /// `true` iff `gcd(f, f') = 1`.
    pub fn is_separable(&self, f: &Poly<F::Elem>) -> bool {
        !f.is_zero() && self.is_one(&self.gcd(f, &self.derivative(f)))
    }

    /// Resultant via the Euclidean algorithm.
    pub fn resultant(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> F::Elem {
        let field = &self.field;
        let (Some(_), Some(_)) = (a.degree(), b.degree()) else {
            return field.zero();
        };
        let mut a = a.clone();
        let mut b = b.clone();
        let mut acc = field.one();
        loop {
            let da = a.degree().unwrap();
            let Some(db) = b.degree() else {
                return field.zero();
            };
            if db == 0 {
                return field.mul(&acc, &field.pow_u64(b.lead().unwrap(), da as u64));
            }
            let r = self.rem(&a, &b);
            let Some(dr) = r.degree() else {
                return field.zero();
            };
            // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
            let mut factor = field.pow_u64(b.lead().unwrap(), (da - dr) as u64);
            if da % 2 == 1 && db % 2 == 1 {
                factor = field.neg(&factor);
            }
            acc = field.mul(&acc, &factor);
            a = b;
            b = r;
        }
    }

    /// `disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)`.
    pub fn discriminant(&self, f: &Poly<F::Elem>) -> F::Elem {
        let n = f.degree().unwrap_or(0);
        let res = self.resultant(f, &self.derivative(f));
        let mut d = self.field.div(&res, f.lead().unwrap()).unwrap();
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            d = self.field.neg(&d);
        }
        d
    }

    pub fn render(&self, f: &Poly<F::Elem>, var: &str) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in f.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let cs = self.field.render(c);
            // a leading minus on a compound coefficient belongs to its first term only
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(m) if !m.contains(' ') => (true, m.to_string()),
                _ => (false, cs),
            };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let term = if i == 0 {
                if mag.contains(' ') {
                    format!("({mag})")
                } else {
                    mag
                }
            } else if mag == "1" {
                mono
            } else if mag.bytes().all(|b| b.is_ascii_digit()) {
                format!("{mag}{mono}")
            } else {
                format!("({mag}){mono}")
            };
            out.push_str(match (out.is_empty(), neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            out.push_str(&term);
        }
        out
    }

    pub fn coeff(&self, f: &Poly<F::Elem>, i: usize) -> F::Elem {
        self.coeff_or_zero(f, i)
    }
}

/// Coefficient-wise image of `f` under a map of coefficient rings.
pub fn map_poly<F: Field, G: Field>(
    target: &PolyRing<G>,
    f: &Poly<F::Elem>,
    mut map: impl FnMut(&F::Elem) -> G::Elem,
) -> Poly<G::Elem> {
    target.from_coeffs(f.coeffs().iter().map(&mut map).collect())
}
