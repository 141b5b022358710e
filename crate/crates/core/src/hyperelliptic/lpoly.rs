//! L-polynomials from point counts over `F_q, ..., F_{q^g}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{HypCurve, HypError};
use crate::exactfield::{Field, FiniteField, GaloisField, PolyRing};

/// `P(T) = 1 + a_1 T + ... + a_{2g} T^{2g}` with `#J(F_q) = P(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPolynomial {
    pub q: u64,
    pub genus: usize,
    /// `a_0, ..., a_{2g}`.
    pub coeffs: Vec<BigInt>,
    /// `#C(F_{q^i})` for `i = 1..=g`, plus `i = g + 1` when it was within the bound.
    pub counts: Vec<u64>,
}

impl LPolynomial {
    pub fn jacobian_order(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

/// Image of `base` inside `ext`, sending the generator to a root of the base modulus.
pub fn embed_into_extension(base: &GaloisField, ext: &GaloisField) -> Result<impl Fn(&Vec<u64>) -> Vec<u64>, HypError> {
    let ring = PolyRing::new(ext.clone());
    let m = ring.from_coeffs(base.modulus().iter().map(|&c| ext.from_base(c)).collect());
    let root = ring
        .roots(&m)
        .into_iter()
        .next()
        .ok_or_else(|| HypError::CountMismatch("base field does not embed".into()))?;
    let ext = ext.clone();
    Ok(move |a: &Vec<u64>| {
        let mut acc = ext.zero();
        for c in a.iter().rev() {
            acc = ext.add(&ext.mul(&acc, &root), &ext.from_base(*c));
        }
        acc
    })
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

impl HypCurve<GaloisField> {
    /// `#C(F_{q^i})`.
    pub fn count_over_extension(&self, i: usize, bound: u64) -> Result<u64, HypError> {
        let base = self.field();
        if i == 1 {
            return self.count_points(bound);
        }
        let q = base.order();
        let order = (q as u128).pow(i as u32);
        if order > bound as u128 {
            return Err(HypError::TooLarge { q: order.min(u64::MAX as u128) as u64, bound });
        }
        let ext = GaloisField::new(base.prime(), (base.k() * i) as u32)?;
        let phi = embed_into_extension(base, &ext)?;
        let lifted = self.map(ext, |a| Ok(phi(a)))?;
        lifted.count_points(bound)
    }

    /// Newton-identity reconstruction of the L-polynomial from point counts.
    pub fn lpoly(&self, bound: u64) -> Result<LPolynomial, HypError> {
        let g = self.genus();
        let q = self.field().order();
        let qb = BigInt::from(q);
        let mut counts = Vec::new();
        for i in 1..=g {
            counts.push(self.count_over_extension(i, bound)?);
        }
        let s: Vec<BigInt> = counts
            .iter()
            .enumerate()
            .map(|(i, &n)| qb.pow(i as u32 + 1) + 1 - BigInt::from(n))
            .collect();
        let mut a = vec![BigInt::zero(); 2 * g + 1];
        a[0] = BigInt::one();
        for i in 1..=g {
            let sum: BigInt = (1..=i).map(|j| &s[j - 1] * &a[i - j]).sum();
            let (quo, rem) = (-sum).div_rem(&BigInt::from(i));
            if !rem.is_zero() {
                return Err(HypError::CountMismatch(format!("{i} does not divide the Newton sum")));
            }
            a[i] = quo;
        }
        for i in 0..g {
            a[2 * g - i] = qb.pow((g - i) as u32) * &a[i];
        }
        for (i, ai) in a.iter().enumerate() {
            // |a_i| <= C(2g, i) q^(i/2)
            let c = binomial(2 * g, i);
            if ai * ai > &c * &c * qb.pow(i as u32) {
                return Err(HypError::CountMismatch(format!("a_{i} = {ai} violates the Weil bound")));
            }
        }
        for i in 0..=2 * g {
            // P(T) = q^g T^{2g} P(1/(qT))
            if a[2 * g - i] != qb.pow((g as u32).saturating_sub(i as u32)) * &a[i] / qb.pow((i as u32).saturating_sub(g as u32)) {
                return Err(HypError::CountMismatch("functional equation fails".into()));
            }
        }
        let mut lp = LPolynomial { q, genus: g, coeffs: a, counts };
        if let Ok(n) = self.count_over_extension(g + 1, bound) {
            let predicted = lp.predicted_count(g + 1);
            if predicted != BigInt::from(n) {
                return Err(HypError::CountMismatch(format!(
                    "#C(F_q^{}) = {n} but the L-polynomial predicts {predicted}",
                    g + 1
                )));
            }
            lp.counts.push(n);
        }
        Ok(lp)
    }
}

impl LPolynomial {
    /// `#C(F_{q^r}) = q^r + 1 - s_r`, with `s_r` from the Newton identities.
    pub fn predicted_count(&self, r: usize) -> BigInt {
        let g = self.genus;
        let a = |i: usize| if i <= 2 * g { self.coeffs[i].clone() } else { BigInt::zero() };
        let mut s: Vec<BigInt> = Vec::with_capacity(r);
        for k in 1..=r {
            // s_k = -k a_k - sum_{j<k} s_j a_{k-j}
            let mut v = -BigInt::from(k) * a(k);
            for j in 1..k {
                v -= &s[j - 1] * a(k - j);
            }
            s.push(v);
        }
        BigInt::from(self.q).pow(r as u32) + 1 - &s[r - 1]
    }

    pub fn jacobian_order_u64(&self) -> Option<u64> {
        let n = self.jacobian_order();
        (!n.is_negative()).then(|| n.to_u64()).flatten()
    }
}
