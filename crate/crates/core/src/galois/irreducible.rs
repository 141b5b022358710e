use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{check_monic_integer, cycle_type_with_disc, discriminant, CycleType, GaloisError};
use crate::exactfield::{factor_u64, primes_up_to, Poly, PolyRing, Rational, Rationals};
use crate::schema::{poly_from_strings, poly_to_strings};

/// Largest constant term whose divisors are enumerated in the rational-root check.
const ROOT_SEARCH_LIMIT: u64 = 1 << 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IrreducibilityMethod {
    /// Degree one.
    Linear,
    /// A single prime at which the reduction is irreducible.
    IrreducibleReduction,
    /// Proper sub-degree sums realizable at every listed prime have empty intersection.
    DegreeSumExclusion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityCert {
    pub poly: Vec<String>,
    pub method: IrreducibilityMethod,
    pub evidence: Vec<CycleType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReducibilityWitness {
    RationalRoot { root: String },
    RepeatedFactor { gcd_degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(IrreducibilityCert),
    Reducible(ReducibilityWitness),
    Inconclusive { primes_tried: usize },
}

/// Proper sub-sums `1..n-1` attainable by a sub-multiset of `degrees`.
fn proper_subsums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach[0] = false;
    reach[n] = false;
    reach
}

fn integer_root(f: &Poly<Rational>) -> Option<BigInt> {
    let ring = PolyRing::new(Rationals);
    let c0 = f.coeffs()[0].numer().clone();
    if c0.is_zero() {
        return Some(BigInt::zero());
    }
    let c = c0.abs().to_u64().filter(|&c| c <= ROOT_SEARCH_LIMIT)?;
    let mut divisors = vec![1u64];
    for (q, e) in factor_u64(c) {
        let mut next = Vec::new();
        for &d in &divisors {
            let mut m = d;
            for _ in 0..=e {
                next.push(m);
                m *= q;
            }
        }
        divisors = next;
    }
    divisors.sort_unstable();
    for d in divisors {
        for r in [BigInt::from(d), -BigInt::from(d)] {
            if ring.eval(f, &Rational::from_integer(r.clone())).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

/// Irreducibility of a monic integer polynomial over Q from reductions at primes up to `prime_bound`.
pub fn irreducible_over_q(f: &Poly<Rational>, prime_bound: u64) -> Result<Irreducibility, GaloisError> {
    let n = check_monic_integer(f)?;
    let poly = poly_to_strings(f);
    if n == 1 {
        return Ok(Irreducibility::Irreducible(IrreducibilityCert {
            poly,
            method: IrreducibilityMethod::Linear,
            evidence: vec![],
        }));
    }
    if let Some(r) = integer_root(f) {
        return Ok(Irreducibility::Reducible(ReducibilityWitness::RationalRoot { root: r.to_string() }));
    }
    let ring = PolyRing::new(Rationals);
    let g = ring.gcd(f, &ring.derivative(f));
    if g.degree().unwrap_or(0) > 0 {
        return Ok(Irreducibility::Reducible(ReducibilityWitness::RepeatedFactor {
            gcd_degree: g.degree().unwrap(),
        }));
    }
    let disc = discriminant(f);
    let mut feasible = vec![true; n + 1];
    let mut evidence: Vec<CycleType> = Vec::new();
    let mut tried = 0;
    for p in primes_up_to(prime_bound) {
        let Some(ct) = cycle_type_with_disc(f, &disc, p)? else {
            continue;
        };
        tried += 1;
        if ct.degrees == [n] {
            return Ok(Irreducibility::Irreducible(IrreducibilityCert {
                poly,
                method: IrreducibilityMethod::IrreducibleReduction,
                evidence: vec![ct],
            }));
        }
        let sums = proper_subsums(&ct.degrees, n);
        let shrinks = (1..n).any(|s| feasible[s] && !sums[s]);
        if shrinks {
            for s in 1..n {
                feasible[s] &= sums[s];
            }
            evidence.push(ct);
        }
        if (1..n).all(|s| !feasible[s]) {
            return Ok(Irreducibility::Irreducible(IrreducibilityCert {
                poly,
                method: IrreducibilityMethod::DegreeSumExclusion,
                evidence,
            }));
        }
    }
    Ok(Irreducibility::Inconclusive { primes_tried: tried })
}

impl IrreducibilityCert {
    pub fn polynomial(&self) -> Result<Poly<Rational>, GaloisError> {
        Ok(poly_from_strings(&self.poly)?)
    }

    /// Recomputes every cycle type and the sub-sum argument.
    pub fn verify(&self) -> Result<(), GaloisError> {
        let fail = |m: &str| Err(GaloisError::Verification(m.to_string()));
        let f = self.polynomial()?;
        let n = check_monic_integer(&f)?;
        let disc = discriminant(&f);
        if disc.is_zero() {
            return fail("polynomial is not squarefree");
        }
        for ct in &self.evidence {
            match cycle_type_with_disc(&f, &disc, ct.p)? {
                Some(actual) if actual == *ct => {}
                Some(_) => return fail("recorded cycle type differs from recomputation"),
                None => return fail("evidence prime divides the discriminant"),
            }
        }
        match self.method {
            IrreducibilityMethod::Linear if n == 1 => Ok(()),
            IrreducibilityMethod::Linear => fail("not linear"),
            IrreducibilityMethod::IrreducibleReduction => {
                if self.evidence.iter().any(|ct| ct.degrees == [n]) {
                    Ok(())
                } else {
                    fail("no irreducible reduction in evidence")
                }
            }
            IrreducibilityMethod::DegreeSumExclusion => {
                let mut feasible = vec![true; n + 1];
                for ct in &self.evidence {
                    let sums = proper_subsums(&ct.degrees, n);
                    for s in 1..n {
                        feasible[s] &= sums[s];
                    }
                }
                if (1..n).all(|s| !feasible[s]) {
                    Ok(())
                } else {
                    fail("a proper factor degree remains feasible")
                }
            }
        }
    }
}

impl Irreducibility {
    pub fn certificate(&self) -> Option<&IrreducibilityCert> {
        match self {
            Irreducibility::Irreducible(c) => Some(c),
            _ => None,
        }
    }
}
