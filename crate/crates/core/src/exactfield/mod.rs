//! Exact arithmetic: integers, rationals, prime and extension finite fields,
//! and dense polynomials over any of them.

mod extension;
mod factor;
mod field;
mod parse;
mod poly;
mod prime;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use extension::GaloisField;
pub use factor::DEFAULT_SEED;
pub use field::{is_integral, Field, FiniteField, Rationals};
pub use parse::{integer_coeffs, parse_curve_rhs, parse_poly};
pub use poly::{map_poly, Poly, PolyRing};
pub use prime::{factor_u64, is_prime, mul_mod, order_dividing, pow_mod, primes_up_to, PrimeField};

pub type Integer = BigInt;
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order overflows with characteristic {0}")]
    TooLarge(u64),
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("polynomial must be monic and nonzero")]
    NotMonic,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("denominator divisible by {0}")]
    NotIntegralAt(u64),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub fn int(n: i64) -> Integer {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a"` or `"a/b"`.
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Parse(s.to_string());
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Residue of a rational number modulo `p`, if its denominator is prime to `p`.
pub fn reduce_rational(a: &Rational, p: u64) -> Result<u64, FieldError> {
    let pb = BigInt::from(p);
    let den = a.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(FieldError::NotIntegralAt(p));
    }
    let field = PrimeField::new(p)?;
    let n = field.from_int(a.numer());
    let d = field.from_int(&den);
    Ok(field.mul(&n, &field.inv(&d).unwrap()))
}

/// Coefficient-wise reduction of a rational polynomial into `F_p[x]`.
pub fn reduce_poly_mod_p(
    f: &Poly<Rational>,
    ring: &PolyRing<PrimeField>,
) -> Result<Poly<u64>, FieldError> {
    let p = ring.field().p();
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| reduce_rational(c, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ring.from_coeffs(coeffs))
}

/// `Some(r)` with `r >= 0` and `r^2 = n`, when `n` is a perfect square.
pub fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// A rational is a square in Q iff numerator and denominator are (in lowest terms).
pub fn is_rational_square(a: &Rational) -> bool {
    integer_sqrt_exact(a.numer()).is_some() && integer_sqrt_exact(a.denom()).is_some()
}

/// `true` when every coefficient is an integer.
pub fn is_integer_poly(f: &Poly<Rational>) -> bool {
    f.coeffs().iter().all(is_integral)
}

/// Integer value of a rational that must be integral.
pub fn to_integer(a: &Rational) -> Option<Integer> {
    is_integral(a).then(|| a.numer().clone())
}

pub fn to_i64(a: &Integer) -> Option<i64> {
    a.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_reduce() {
        assert_eq!(parse_rational("465/4").unwrap(), ratio(465, 4));
        assert_eq!(parse_rational("-10049/8").unwrap(), ratio(-10049, 8));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(reduce_rational(&ratio(1, 2), 7).unwrap(), 4);
        assert!(reduce_rational(&ratio(1, 14), 7).is_err());
    }

    #[test]
    fn square_tests() {
        assert_eq!(integer_sqrt_exact(&int(2659 * 2659)), Some(int(2659)));
        assert_eq!(integer_sqrt_exact(&int(2869)), None);
        assert_eq!(integer_sqrt_exact(&int(-4)), None);
        assert!(is_rational_square(&ratio(9, 4)));
        assert!(!is_rational_square(&ratio(2, 1)));
    }

    proptest! {
        #[test]
        fn rational_inverse_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
            prop_assume!(n != 0);
            let a = ratio(n, d);
            let b = ratio(d, n);
            prop_assert_eq!(&a * &b, rat(1));
            prop_assert!(a.denom().is_positive());
            prop_assert_eq!(a.numer().gcd(a.denom()), int(1));
        }

        #[test]
        fn rational_ops_stay_reduced(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500) {
            let x = ratio(a, b);
            let y = ratio(c, d);
            for z in [&x + &y, &x - &y, &x * &y] {
                prop_assert!(z.denom().is_positive());
                prop_assert_eq!(z.numer().gcd(z.denom()), int(1));
            }
        }
    }
}
