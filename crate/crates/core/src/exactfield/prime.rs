use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Field, FieldError, FiniteField};

/// The prime field `F_p`, elements stored as canonical residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= 1 << 62 {
            return Err(FieldError::TooLarge(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let e = (*a as i128).extended_gcd(&(self.p as i128));
        Some(e.x.rem_euclid(self.p as i128) as u64)
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits u64")
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn pow(&self, a: &u64, e: &BigUint) -> u64 {
        if *a == 0 {
            return if e.bits() == 0 { 1 % self.p } else { 0 };
        }
        // Fermat: exponents of units fold modulo p - 1.
        let e = e.mod_floor(&BigUint::from(self.p - 1));
        pow_mod(*a, e.to_u64().expect("reduced exponent"), self.p)
    }
}

impl FiniteField for PrimeField {
    fn order(&self) -> u64 {
        self.p
    }
    fn degree(&self) -> u32 {
        1
    }
    fn element(&self, index: u64) -> u64 {
        index % self.p
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
    fn legendre(&self, a: &u64) -> i8 {
        if *a == 0 {
            0
        } else if self.p == 2 {
            1
        } else if pow_mod(*a, (self.p - 1) / 2, self.p) == 1 {
            1
        } else {
            -1
        }
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `<= bound` in increasing order.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &is_p)| is_p.then_some(k as u64))
        .collect()
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Exact order of an element of a finite abelian group of known exponent-multiple `n`.
///
/// `is_identity_after(k)` must report whether `k` times the element is the identity.
pub fn order_dividing(n: u64, mut is_identity_after: impl FnMut(u64) -> bool) -> u64 {
    let mut order = n;
    for (prime, _) in factor_u64(n) {
        while order % prime == 0 && is_identity_after(order / prime) {
            order /= prime;
        }
    }
    order
}
