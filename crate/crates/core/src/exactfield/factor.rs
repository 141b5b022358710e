//! Factorization over finite fields: distinct-degree splitting for cycle
//! types and irreducibility, Cantor-Zassenhaus equal-degree splitting for
//! roots and full factorizations.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FieldError, FiniteField, Poly, PolyRing};

/// Default seed for the randomized equal-degree splitting.
pub const DEFAULT_SEED: u64 = 0;

impl<F: FiniteField> PolyRing<F> {
    /// `x^(q^n) mod m`, by repeated q-th powering.
    fn frobenius_power(&self, start: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let q = BigUint::from(self.field().order());
        self.pow_mod(start, &q, m)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    ///
    /// Returns `(d, product of all irreducible factors of degree d)` for each
    /// degree that occurs, in increasing order of `d`.
    pub fn ddf(&self, f: &Poly<F::Elem>) -> Result<Vec<(usize, Poly<F::Elem>)>, FieldError> {
        if f.degree().is_none() || !self.is_monic(f) {
            return Err(FieldError::NotMonic);
        }
        if !self.is_separable(f) {
            return Err(FieldError::NotSquarefree);
        }
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x = self.x();
        let mut h = self.rem(&x, &rest);
        let mut d = 0;
        while rest.degree().unwrap() >= 2 * (d + 1) {
            d += 1;
            h = self.frobenius_power(&h, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &x));
            if !self.is_one(&g) {
                rest = self.div_exact(&rest, &g).unwrap();
                h = self.rem(&h, &rest);
                out.push((d, g));
            }
        }
        if let Some(dr) = rest.degree().filter(|&dr| dr > 0) {
            out.push((dr, rest));
        }
        Ok(out)
    }

    /// Multiset of irreducible-factor degrees, sorted ascending.
    pub fn factor_degrees(&self, f: &Poly<F::Elem>) -> Result<Vec<usize>, FieldError> {
        let mut degs = Vec::new();
        for (d, part) in self.ddf(f)? {
            degs.extend(std::iter::repeat(d).take(part.degree().unwrap() / d));
        }
        Ok(degs)
    }

    /// Irreducibility via distinct-degree factorization.
    pub fn is_irreducible(&self, f: &Poly<F::Elem>) -> bool {
        let Some(n) = f.degree().filter(|&n| n > 0) else {
            return false;
        };
        let f = self.monic(f);
        match self.ddf(&f) {
            Ok(parts) => parts.len() == 1 && parts[0].0 == n,
            Err(_) => false,
        }
    }

    /// Splits a monic squarefree product of irreducibles all of degree `d`.
    pub fn edf(&self, f: &Poly<F::Elem>, d: usize, seed: u64) -> Vec<Poly<F::Elem>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        let mut stack = vec![f.clone()];
        while let Some(g) = stack.pop() {
            let n = g.degree().unwrap();
            if n == d {
                out.push(g);
                continue;
            }
            if n == 0 {
                continue;
            }
            loop {
                let a = self.random_poly(n, &mut rng);
                let b = self.splitting_element(&a, d, &g);
                let h = self.gcd(&g, &b);
                let dh = h.degree().unwrap_or(0);
                if dh > 0 && dh < n {
                    let other = self.div_exact(&g, &h).unwrap();
                    stack.push(h);
                    stack.push(other);
                    break;
                }
            }
        }
        out.sort_by(|a, b| self.cmp_polys(a, b));
        out
    }

    fn random_poly(&self, below: usize, rng: &mut ChaCha8Rng) -> Poly<F::Elem> {
        self.from_coeffs((0..below).map(|_| self.field().random(rng)).collect())
    }

    /// `a^((q^d - 1)/2) - 1` for odd q, the trace `a + a^2 + ... + a^(2^(kd-1))` for q = 2^k.
    fn splitting_element(&self, a: &Poly<F::Elem>, d: usize, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let q = self.field().order();
        if q % 2 == 1 {
            let e = (BigUint::from(q).pow(d as u32) - 1u32) / 2u32;
            self.sub(&self.pow_mod(a, &e, m), &self.one())
        } else {
            let k = self.field().degree() as usize;
            let mut t = self.rem(a, m);
            let mut acc = t.clone();
            for _ in 1..k * d {
                t = self.mul_mod(&t, &t, m);
                acc = self.add(&acc, &t);
            }
            acc
        }
    }

    /// Ordering by degree, then by element indices from the top coefficient down.
    pub fn cmp_polys(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> std::cmp::Ordering {
        let key = |p: &Poly<F::Elem>| {
            let mut k: Vec<u64> = p.coeffs().iter().map(|c| self.field().index_of(c)).collect();
            k.reverse();
            (p.degree(), k)
        };
        key(a).cmp(&key(b))
    }

    /// Monic irreducible factors of a squarefree polynomial, sorted.
    pub fn factor_squarefree(
        &self,
        f: &Poly<F::Elem>,
        seed: u64,
    ) -> Result<Vec<Poly<F::Elem>>, FieldError> {
        let f = self.monic(f);
        let mut out = Vec::new();
        for (i, (d, part)) in self.ddf(&f)?.into_iter().enumerate() {
            out.extend(self.edf(&part, d, seed.wrapping_add(i as u64)));
        }
        out.sort_by(|a, b| self.cmp_polys(a, b));
        Ok(out)
    }

    /// Distinct roots in the field, ordered by element index.
    pub fn roots(&self, f: &Poly<F::Elem>) -> Vec<F::Elem> {
        self.roots_seeded(f, DEFAULT_SEED)
    }

    pub fn roots_seeded(&self, f: &Poly<F::Elem>, seed: u64) -> Vec<F::Elem> {
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.monic(f);
        let x = self.x();
        let xq = self.frobenius_power(&self.rem(&x, &f), &f);
        let g = self.gcd(&f, &self.sub(&xq, &x));
        if g.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots: Vec<F::Elem> = self
            .edf(&g, 1, seed)
            .into_iter()
            .map(|lin| self.field().neg(&lin.coeffs()[0]))
            .collect();
        roots.sort_by_key(|r| self.field().index_of(r));
        roots
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{Field, GaloisField, PrimeField};
    use proptest::prelude::*;

    fn fp(p: u64) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(p).unwrap())
    }

    /// Brute-force roots by evaluating at every element.
    fn brute_roots(r: &PolyRing<PrimeField>, f: &Poly<u64>) -> Vec<u64> {
        let p = r.field().p();
        (0..p).filter(|&a| r.eval(f, &a) == 0).collect()
    }

    #[test]
    fn gcd_x7_minus_7x_plus_3_with_derivative_mod_11() {
        let r = fp(11);
        let f = r.from_i64s(&[3, -7, 0, 0, 0, 0, 0, 1]);
        let fprime = r.from_i64s(&[-7, 0, 0, 0, 0, 0, 7]);
        assert_eq!(r.gcd(&f, &fprime), r.one());
        // oracle: no common root in F_11 or F_121
        assert!(brute_roots(&r, &f).iter().all(|a| r.eval(&fprime, a) != 0));
        let big = GaloisField::new(11, 2).unwrap();
        let rb = PolyRing::new(big.clone());
        let fb = rb.from_i64s(&[3, -7, 0, 0, 0, 0, 0, 1]);
        let fpb = rb.from_i64s(&[-7, 0, 0, 0, 0, 0, 7]);
        assert!(big
            .elements()
            .all(|a| !(big.is_zero(&rb.eval(&fb, &a)) && big.is_zero(&rb.eval(&fpb, &a)))));
        assert!(r.is_separable(&f));
    }

    #[test]
    fn ddf_of_x5_minus_x_minus_1_over_f2() {
        let r = fp(2);
        let f = r.from_i64s(&[-1, -1, 0, 0, 0, 1]);
        let parts = r.ddf(&f).unwrap();
        assert_eq!(
            parts,
            vec![(2, r.from_i64s(&[1, 1, 1])), (3, r.from_i64s(&[1, 0, 1, 1]))]
        );
        // multiply-back oracle
        assert_eq!(r.mul(&parts[0].1, &parts[1].1), f);
        assert!(!r.is_irreducible(&f));
    }

    #[test]
    fn ddf_small_cases() {
        let r3 = fp(3);
        let quad = r3.from_i64s(&[1, 0, 1]);
        assert_eq!(r3.ddf(&quad).unwrap(), vec![(2, quad.clone())]);
        let r5 = fp(5);
        let f = r5.from_i64s(&[0, -1, 0, 1]);
        assert_eq!(r5.ddf(&f).unwrap(), vec![(1, f.clone())]);
        assert!(r5.ddf(&r5.from_i64s(&[1, 2, 1])).is_err());
    }

    #[test]
    fn roots_match_brute_force() {
        let r = fp(29);
        let f = r.from_i64s(&[647, 0, 1]);
        assert_eq!(r.roots(&f), vec![7, 22]);
        assert_eq!(brute_roots(&r, &f), vec![7, 22]);
        let r3 = fp(3);
        assert!(r3.roots(&r3.from_i64s(&[1, 0, 1])).is_empty());
        assert_eq!(r3.roots(&r3.from_i64s(&[0, -1, 0, 1])), vec![0, 1, 2]);
    }

    #[test]
    fn irreducibility_examples() {
        let r5 = fp(5);
        // discriminant 12 = 2 is a non-square mod 5; squares are {0, 1, 4}
        assert!(r5.is_irreducible(&r5.from_i64s(&[1, 4, 1])));
        let r2 = fp(2);
        assert!(r2.is_irreducible(&r2.from_i64s(&[1, 1, 1])));
        assert!(!r2.is_irreducible(&r2.from_i64s(&[1, 1, 0, 0, 0, 1])));
    }

    #[test]
    fn factorization_over_extension_field() {
        let f4 = GaloisField::new(2, 2).unwrap();
        let r = PolyRing::new(f4.clone());
        // x^4 - x splits completely over F_4
        let f = r.from_i64s(&[0, -1, 0, 0, 1]);
        assert_eq!(r.roots(&f).len(), 4);
        // x^2 + x + 1 irreducible over F_2 splits over F_4
        assert_eq!(r.roots(&r.from_i64s(&[1, 1, 1])).len(), 2);
        let f9 = GaloisField::new(3, 2).unwrap();
        let r9 = PolyRing::new(f9);
        let g = r9.from_i64s(&[1, 0, 1, 0, 0, 1]);
        let factors = r9.factor_squarefree(&g, 7).unwrap();
        let prod = factors.iter().fold(r9.one(), |acc, h| r9.mul(&acc, h));
        assert_eq!(prod, g);
        assert!(factors.iter().all(|h| r9.is_irreducible(h)));
    }

    fn squarefree_monic(p: u64, coeffs: Vec<u64>) -> Option<Poly<u64>> {
        let r = fp(p);
        let mut c = coeffs;
        c.push(1);
        let f = r.from_coeffs(c);
        r.is_separable(&f).then_some(f)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn ddf_multiplies_back(
            p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]),
            raw in prop::collection::vec(0u64..1000, 1..10),
        ) {
            let r = fp(p);
            let coeffs: Vec<u64> = raw.iter().map(|c| c % p).collect();
            if let Some(f) = squarefree_monic(p, coeffs) {
                let parts = r.ddf(&f).unwrap();
                let prod = parts.iter().fold(r.one(), |acc, (_, g)| r.mul(&acc, g));
                prop_assert_eq!(prod, f.clone());
                let total: usize = r.factor_degrees(&f).unwrap().iter().sum();
                prop_assert_eq!(total, f.degree().unwrap());
            }
        }

        #[test]
        fn roots_are_zeros(
            p in prop::sample::select(vec![3u64, 5, 7, 31]),
            raw in prop::collection::vec(0u64..1000, 1..8),
        ) {
            let r = fp(p);
            let mut c: Vec<u64> = raw.iter().map(|c| c % p).collect();
            c.push(1);
            let f = r.from_coeffs(c);
            let roots = r.roots(&f);
            prop_assert!(roots.len() <= f.degree().unwrap());
            prop_assert_eq!(roots, brute_roots(&r, &f));
        }
    }
}
