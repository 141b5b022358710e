use num_bigint::BigInt;

use super::prime::mul_mod;
use super::{Field, FieldError, FiniteField, Poly, PolyRing, PrimeField};

/// `F_{p^k} = F_p[x]/(modulus)`, elements as coefficient vectors of length `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaloisField {
    base: PrimeField,
    modulus: Vec<u64>,
    order: u64,
}

impl GaloisField {
    /// Uses the first monic irreducible of degree `k` in lexicographic order of
    /// its coefficient vector `(c_0, ..., c_{k-1})` read from the top down.
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        let base = PrimeField::new(p)?;
        let modulus = first_irreducible(&base, k)?;
        Self::build(base, modulus)
    }

    /// Field with an explicit modulus; the modulus must be monic and irreducible.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self, FieldError> {
        let base = PrimeField::new(p)?;
        let ring = PolyRing::new(base);
        let m = ring.from_coeffs(modulus.iter().map(|c| c % p).collect());
        if m.degree().unwrap_or(0) == 0 || !ring.is_monic(&m) {
            return Err(FieldError::BadModulus("modulus must be monic of degree >= 1".into()));
        }
        if !ring.is_irreducible(&m) {
            return Err(FieldError::BadModulus("modulus is reducible".into()));
        }
        Self::build(base, m.into_coeffs())
    }

    /// `F_p` viewed as a degree-one extension with modulus `x`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::with_modulus(p, &[0, 1])
    }

    fn build(base: PrimeField, modulus: Vec<u64>) -> Result<Self, FieldError> {
        let k = (modulus.len() - 1) as u32;
        let order = base
            .p()
            .checked_pow(k)
            .ok_or(FieldError::TooLarge(base.p()))?;
        Ok(GaloisField { base, modulus, order })
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn k(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Embeds an `F_p` residue.
    pub fn from_base(&self, c: u64) -> Vec<u64> {
        let mut v = vec![0; self.k()];
        v[0] = c % self.base.p();
        v
    }

    /// The class of `x`, a generator of the field over `F_p`.
    pub fn generator(&self) -> Vec<u64> {
        let ring = PolyRing::new(self.base);
        self.from_poly(&ring.x())
    }

    /// Reduces an `F_p[x]` polynomial into the field.
    pub fn from_poly(&self, f: &Poly<u64>) -> Vec<u64> {
        let p = self.base.p();
        let k = self.k();
        let mut c: Vec<u64> = f.coeffs().to_vec();
        reduce_in_place(&mut c, &self.modulus, p);
        c.resize(k, 0);
        c
    }

    pub fn to_poly(&self, a: &[u64]) -> Poly<u64> {
        PolyRing::new(self.base).from_coeffs(a.to_vec())
    }
}

fn reduce_in_place(c: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let k = modulus.len() - 1;
    while c.len() > k {
        let top = c.pop().unwrap();
        if top == 0 {
            continue;
        }
        let base = c.len() - k;
        for (j, &mj) in modulus[..k].iter().enumerate() {
            let t = mul_mod(top, mj, p);
            c[base + j] = (c[base + j] + p - t) % p;
        }
    }
}

fn first_irreducible(base: &PrimeField, k: u32) -> Result<Vec<u64>, FieldError> {
    if k == 0 {
        return Err(FieldError::BadModulus("extension degree must be >= 1".into()));
    }
    let p = base.p();
    let ring = PolyRing::new(*base);
    let count = p
        .checked_pow(k)
        .ok_or(FieldError::TooLarge(p))?;
    for idx in 0..count {
        // digits of idx, most significant first, are c_{k-1}, ..., c_0
        let mut coeffs = vec![0u64; k as usize + 1];
        coeffs[k as usize] = 1;
        let mut rest = idx;
        for i in 0..k as usize {
            coeffs[i] = rest % p;
            rest /= p;
        }
        let f = ring.from_coeffs(coeffs.clone());
        if ring.is_irreducible(&f) {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field for GaloisField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.k()]
    }
    fn one(&self) -> Vec<u64> {
        self.from_base(1)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let k = self.k();
        if k == 1 {
            return vec![self.base.mul(&a[0], &b[0])];
        }
        let p = self.base.p();
        let mut c = vec![0u64; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                c[i + j] = (c[i + j] + mul_mod(*x, *y, p)) % p;
            }
        }
        reduce_in_place(&mut c, &self.modulus, p);
        c.resize(k, 0);
        c
    }
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        let ring = PolyRing::new(self.base);
        let m = ring.from_coeffs(self.modulus.clone());
        let inv = ring.inv_mod(&ring.from_coeffs(a.clone()), &m)?;
        Some(self.from_poly(&inv))
    }
    fn from_int(&self, n: &BigInt) -> Vec<u64> {
        self.from_base(self.base.from_int(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.p()
    }
    fn render(&self, a: &Vec<u64>) -> String {
        if self.k() == 1 {
            return a[0].to_string();
        }
        PolyRing::new(self.base).render(&self.to_poly(a), "z")
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
}

impl FiniteField for GaloisField {
    fn order(&self) -> u64 {
        self.order
    }
    fn degree(&self) -> u32 {
        self.k() as u32
    }
    fn element(&self, index: u64) -> Vec<u64> {
        let p = self.base.p();
        let mut rest = index % self.order;
        (0..self.k())
            .map(|_| {
                let d = rest % p;
                rest /= p;
                d
            })
            .collect()
    }
    fn index_of(&self, a: &Vec<u64>) -> u64 {
        let p = self.base.p();
        a.iter().rev().fold(0, |acc, &d| acc * p + d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn default_modulus_is_lexicographically_first() {
        // over F_2 the first irreducible quadratic is x^2 + x + 1
        assert_eq!(GaloisField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // over F_3: x^2 + 1 (x^2, x^2+2 = (x+1)(x+2), x^2+1 irreducible)
        assert_eq!(GaloisField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        // over F_5: x^2 + 2 is the first (x^2+1 = (x-2)(x+2))
        assert_eq!(GaloisField::new(5, 2).unwrap().modulus(), &[2, 0, 1]);
    }

    #[test]
    fn rejects_reducible_modulus() {
        assert!(GaloisField::with_modulus(5, &[1, 0, 1]).is_err());
    }

    #[test]
    fn index_round_trip_and_frobenius() {
        let f = GaloisField::new(7, 3).unwrap();
        assert_eq!(f.order(), 343);
        for i in [0u64, 1, 2, 48, 342] {
            assert_eq!(f.index_of(&f.element(i)), i);
        }
        assert_eq!(f.element(0), f.zero());
        assert_eq!(f.element(1), f.one());
        // a^q = a for every element
        for i in 0..343 {
            let a = f.element(i);
            assert_eq!(f.pow_u64(&a, 343), a);
        }
    }

    #[test]
    fn field_axioms_random_triples() {
        for (p, k) in [(5u64, 1u32), (5, 2), (7, 3), (2, 4), (3, 3)] {
            let f = GaloisField::new(p, k).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p * 100 + k as u64);
            for _ in 0..1000 {
                let a = f.random(&mut rng);
                let b = f.random(&mut rng);
                let c = f.random(&mut rng);
                assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
                assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
                assert_eq!(
                    f.mul(&a, &f.add(&b, &c)),
                    f.add(&f.mul(&a, &b), &f.mul(&a, &c))
                );
                assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
                if !f.is_zero(&a) {
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn square_roots() {
        let f = GaloisField::new(3, 2).unwrap();
        for a in f.elements() {
            let s = f.square(&a);
            let r = f.sqrt(&s).unwrap();
            assert_eq!(f.square(&r), s);
        }
        let f2 = GaloisField::new(2, 3).unwrap();
        for a in f2.elements() {
            let r = f2.sqrt(&a).unwrap();
            assert_eq!(f2.square(&r), a);
        }
    }
}
