//! Frobenius cycle types, irreducibility over Q, symmetric/alternating
//! Galois group certificates and the table of minimal faithful rational
//! representation dimensions.

mod certify;
mod irreducible;
mod mg;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactfield::{
    is_integer_poly, is_rational_square, primes_up_to, reduce_poly_mod_p, FieldError, Poly,
    PolyRing, PrimeField, Rational, Rationals,
};

pub use certify::{certify_an, certify_sn, cite_group, GaloisCert, GaloisEvidence, GaloisStatus, Primitivity};
pub use irreducible::{irreducible_over_q, Irreducibility, IrreducibilityCert, IrreducibilityMethod, ReducibilityWitness};
pub use mg::{MGEntry, MGFamily, MGTable, MGValue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("polynomial must be monic with integer coefficients")]
    NotMonicInteger,
    #[error("polynomial has a repeated factor")]
    NotSquarefree,
    #[error("unknown group {0:?}: supply an external m(G) value")]
    UnknownGroup(String),
    #[error("certificate does not re-verify: {0}")]
    Verification(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Degrees of the irreducible factors of `f mod p`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleType {
    pub p: u64,
    pub degrees: Vec<usize>,
}

impl CycleType {
    /// Even permutation iff the number of even-length cycles is even.
    pub fn is_even(&self) -> bool {
        self.degrees.iter().filter(|&&d| d % 2 == 0).count() % 2 == 0
    }

    /// `true` if some power of this permutation is a single cycle of length `l`.
    ///
    /// That holds exactly when one cycle has length `l` and no other cycle
    /// length is divisible by `l` (for prime `l`).
    pub fn yields_pure_cycle(&self, l: usize) -> bool {
        self.degrees.iter().filter(|&&d| d == l).count() == 1
            && self.degrees.iter().filter(|&&d| d != l && d % l == 0).count() == 0
    }
}

pub(crate) fn check_monic_integer(f: &Poly<Rational>) -> Result<usize, GaloisError> {
    let ring = PolyRing::new(Rationals);
    match f.degree() {
        Some(n) if n >= 1 && ring.is_monic(f) && is_integer_poly(f) => Ok(n),
        _ => Err(GaloisError::NotMonicInteger),
    }
}

/// Discriminant of a monic integer polynomial (an integer, kept as a rational).
pub fn discriminant(f: &Poly<Rational>) -> Rational {
    PolyRing::new(Rationals).discriminant(f)
}

/// `true` iff `disc(f)` is a nonzero perfect square in Q, i.e. the Galois group lies in `A_n`.
pub fn disc_square(f: &Poly<Rational>) -> Result<bool, GaloisError> {
    check_monic_integer(f)?;
    let d = discriminant(f);
    if d == Rational::from_integer(0.into()) {
        return Err(GaloisError::NotSquarefree);
    }
    Ok(is_rational_square(&d))
}

fn divides_disc(disc: &Rational, p: u64) -> bool {
    (disc.numer() % num_bigint::BigInt::from(p)) == num_bigint::BigInt::from(0)
}

/// Cycle type of Frobenius at `p`, or `None` when `p` divides the discriminant.
pub fn cycle_type_at(f: &Poly<Rational>, p: u64) -> Result<Option<CycleType>, GaloisError> {
    check_monic_integer(f)?;
    let disc = discriminant(f);
    cycle_type_with_disc(f, &disc, p)
}

pub(crate) fn cycle_type_with_disc(
    f: &Poly<Rational>,
    disc: &Rational,
    p: u64,
) -> Result<Option<CycleType>, GaloisError> {
    if divides_disc(disc, p) {
        return Ok(None);
    }
    let ring = PolyRing::new(PrimeField::new(p)?);
    let fp = reduce_poly_mod_p(f, &ring)?;
    let degrees = ring.factor_degrees(&fp)?;
    Ok(Some(CycleType { p, degrees }))
}

/// Cycle types at every prime `p <= prime_bound` not dividing `disc(f)`, in increasing `p`.
pub fn cycle_types(f: &Poly<Rational>, prime_bound: u64) -> Result<Vec<CycleType>, GaloisError> {
    check_monic_integer(f)?;
    let disc = discriminant(f);
    if disc == Rational::from_integer(0.into()) {
        return Err(GaloisError::NotSquarefree);
    }
    let mut out = Vec::new();
    for p in primes_up_to(prime_bound) {
        if let Some(ct) = cycle_type_with_disc(f, &disc, p)? {
            out.push(ct);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{parse_poly, rat};

    fn poly(s: &str) -> Poly<Rational> {
        parse_poly(s, 'x').unwrap()
    }

    #[test]
    fn cycle_types_of_examples() {
        let f = poly("x^5-x-1");
        assert_eq!(cycle_type_at(&f, 2).unwrap().unwrap().degrees, vec![2, 3]);
        let g = poly("x^2+647");
        assert_eq!(cycle_type_at(&g, 29).unwrap().unwrap().degrees, vec![1, 1]);
        // 2 | disc(x^2 + 647)
        assert_eq!(cycle_type_at(&g, 2).unwrap(), None);
        for ct in cycle_types(&f, 200).unwrap() {
            assert_eq!(ct.degrees.iter().sum::<usize>(), 5);
        }
    }

    #[test]
    fn splitting_prime_gives_all_ones() {
        // x^3 - x splits mod every odd prime
        let f = poly("x^3-x");
        assert_eq!(cycle_type_at(&f, 7).unwrap().unwrap().degrees, vec![1, 1, 1]);
    }

    #[test]
    fn discriminant_squares() {
        // disc of the simplest cubic with a = 50 is (a^2 + 3a + 9)^2 = 2659^2
        let shanks = poly("x^3-50x^2-53x-1");
        assert_eq!(discriminant(&shanks), rat(2659 * 2659));
        assert!(disc_square(&shanks).unwrap());
        assert!(disc_square(&poly("x^7-7x+3")).unwrap());
        assert_eq!(discriminant(&poly("x^5-x-1")), rat(2869));
        assert!(!disc_square(&poly("x^5-x-1")).unwrap());
    }

    #[test]
    fn disc_square_implies_even_cycle_types() {
        for f in [poly("x^7-7x+3"), poly("x^3-50x^2-53x-1"), poly("x^3-36x^2-39x-1")] {
            assert!(disc_square(&f).unwrap());
            for ct in cycle_types(&f, 500).unwrap() {
                assert!(ct.is_even(), "odd cycle type {:?}", ct);
            }
        }
    }

    #[test]
    fn pure_cycle_extraction() {
        let ct = CycleType { p: 2, degrees: vec![2, 3] };
        assert!(ct.yields_pure_cycle(2));
        assert!(ct.yields_pure_cycle(3));
        let ct = CycleType { p: 3, degrees: vec![2, 4] };
        assert!(!ct.yields_pure_cycle(2));
        assert!(!ct.is_even() || ct.degrees.len() == 2);
    }

    #[test]
    fn chebotarev_frequency_is_logged() {
        // statistical sanity only: proportion of 5-cycles should be near 1/5
        let f = poly("x^5-x-1");
        let types = cycle_types(&f, 10_000).unwrap();
        let five = types.iter().filter(|ct| ct.degrees == vec![5]).count() as f64;
        let n = types.len() as f64;
        let sigma = (n * 0.2 * 0.8).sqrt();
        let z = (five - 0.2 * n) / sigma;
        eprintln!("5-cycle frequency {:.4} over {} primes (z = {:.2})", five / n, n, z);
    }
}
