use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{reduce_curve, HypCurve, HypError};
use crate::exactfield::{Field, PolyRing};
use crate::numberfield::{NFElement, NumberField, NumberFieldSpec, PrimeSpec, UnramifiedPrime};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HCurveSpec {
    pub field: NumberFieldSpec,
    /// Coefficients of `h`, constant term first, each an element of `K`.
    pub h: Vec<Vec<String>>,
    pub g: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPointSpec {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

impl HCurveSpec {
    pub fn of(c: &HypCurve<NumberField>) -> Self {
        let enc = |p: &crate::exactfield::Poly<NFElement>| p.coeffs().iter().map(NFElement::to_strings).collect();
        HCurveSpec { field: c.field().spec(), h: enc(c.h()), g: enc(c.g()) }
    }

    pub fn build(&self, prime_bound: u64) -> Result<HypCurve<NumberField>, HypError> {
        let k = NumberField::from_spec(&self.field, prime_bound)?;
        let ring = PolyRing::new(k.clone());
        let dec = |v: &[Vec<String>]| -> Result<_, HypError> {
            let c = v.iter().map(|s| k.element_from_strings(s)).collect::<Result<Vec<_>, _>>()?;
            Ok(ring.from_coeffs(c))
        };
        HypCurve::new(k.clone(), dec(&self.h)?, dec(&self.g)?)
    }
}

impl HPointSpec {
    pub fn of(x: &NFElement, y: &NFElement) -> Self {
        HPointSpec { x: x.to_strings(), y: y.to_strings() }
    }

    pub fn build(&self, c: &HypCurve<NumberField>) -> Result<(NFElement, NFElement), HypError> {
        let k = c.field();
        let (x, y) = (k.element_from_strings(&self.x)?, k.element_from_strings(&self.y)?);
        if !c.contains(&x, &y) {
            return Err(HypError::NotOnCurve);
        }
        Ok((x, y))
    }
}

/// Certificate that `[P - infinity]` has infinite order in `J(K)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HInfOrderCert {
    pub curve: HCurveSpec,
    pub point: HPointSpec,
    pub prime: PrimeSpec,
    pub argument: String,
    pub residue_degree: usize,
    /// Mumford coordinates of the reduced class, as residue-field vectors.
    pub reduced_u: Vec<Vec<u64>>,
    pub reduced_v: Vec<Vec<u64>>,
    pub order_mod_prime: u64,
    pub transcript: Vec<String>,
}

/// Certificate that `rank J(K) >= genus` from Coleman's bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRankCert {
    pub curve: HCurveSpec,
    pub points: Vec<HPointSpec>,
    pub includes_infinity: bool,
    pub prime: PrimeSpec,
    pub residue_degree: usize,
    pub genus: usize,
    pub point_count: u64,
    pub residue_count: u64,
    pub coleman_bound: u64,
    pub rank_lower_bound: usize,
    pub transcript: Vec<String>,
}

pub const WEIERSTRASS_ARGUMENT: &str = "weierstrass-reduction";

fn good_reduction(
    k: &NumberField,
    c: &HypCurve<NumberField>,
    prime: &UnramifiedPrime,
) -> Result<HypCurve<crate::exactfield::GaloisField>, HypError> {
    reduce_curve(k, c, prime).map_err(|e| match e {
        HypError::BadReduction(p) => HypError::Hypothesis(format!("bad reduction at the prime over {p}")),
        HypError::NotIntegral(p) => HypError::Hypothesis(format!("coefficients not integral at the prime over {p}")),
        e => e,
    })
}

/// `[P - infinity]` has infinite order when `P` reduces to a Weierstrass point
/// at an odd unramified prime of good reduction but is not Weierstrass over `K`.
///
/// Torsion injects under such a reduction, the reduced class is 2-torsion, so a
/// torsion `P` would have order at most 2 and be fixed by the involution.
pub fn nontorsion_weierstrass(
    c: &HypCurve<NumberField>,
    point: (&NFElement, &NFElement),
    prime: &UnramifiedPrime,
) -> Result<HInfOrderCert, HypError> {
    let k = c.field();
    let (x, y) = point;
    if !c.contains(x, y) {
        return Err(HypError::NotOnCurve);
    }
    if prime.p == 2 {
        return Err(HypError::Hypothesis("residue characteristic must be odd".into()));
    }
    if k.disc().numer() % prime.p == 0u32.into() {
        return Err(HypError::Hypothesis(format!("{} divides disc(K)", prime.p)));
    }
    let cr = good_reduction(k, c, prime)?;
    if c.is_weierstrass(x, y) {
        return Err(HypError::Hypothesis("P is a Weierstrass point over K: 2y + h(x) = 0".into()));
    }
    let red = |a: &NFElement| {
        k.reduce(a, prime)
            .map_err(|_| HypError::Hypothesis(format!("P is not integral at the prime over {}", prime.p)))
    };
    let (xr, yr) = (red(x)?, red(y)?);
    if !cr.is_weierstrass(&xr, &yr) {
        return Err(HypError::Hypothesis(format!(
            "d in the prime fails: P does not reduce to a Weierstrass point modulo the prime over {}",
            prime.p
        )));
    }
    let d = cr.embed(&xr, &yr)?;
    let two = cr.double(&d);
    if cr.is_neutral(&d) || !cr.is_neutral(&two) {
        return Err(HypError::Verification("reduced class is not of order 2".into()));
    }
    let transcript = vec![
        format!("{} is odd and unramified (disc(K) = {})", prime.describe(), k.disc()),
        format!("good reduction: {}", cr.render()),
        format!("P reduces to ({}, {}), a Weierstrass point", cr.field().render(&xr), cr.field().render(&yr)),
        format!("reduced class {} has order 2 by Cantor doubling", cr.render_divisor(&d)),
        format!("2y + h(x) = {} != 0, so P is not a Weierstrass point over K", k.render(&k.add(&k.add(y, y), &PolyRing::new(k.clone()).eval(c.h(), x)))),
        "torsion injects at odd unramified primes of good reduction, so P has infinite order".into(),
    ];
    Ok(HInfOrderCert {
        curve: HCurveSpec::of(c),
        point: HPointSpec::of(x, y),
        prime: prime.spec(),
        argument: WEIERSTRASS_ARGUMENT.into(),
        residue_degree: prime.residue_degree(),
        reduced_u: d.u.coeffs().to_vec(),
        reduced_v: d.v.coeffs().to_vec(),
        order_mod_prime: 2,
        transcript,
    })
}

/// Coleman: if `rank J(K) < g`, then `#C(K) <= 2g - 2 + #C(O_K / P)` for a prime
/// `P` of good reduction with residue characteristic `p > 2g`. More points force
/// `rank J(K) >= g`.
pub fn coleman_rank(
    c: &HypCurve<NumberField>,
    points: &[(NFElement, NFElement)],
    includes_infinity: bool,
    prime: &UnramifiedPrime,
    count_bound: u64,
) -> Result<HRankCert, HypError> {
    let k = c.field();
    let g = c.genus();
    if g < 2 {
        return Err(HypError::Hypothesis("genus must be at least 2".into()));
    }
    if prime.p <= 2 * g as u64 {
        return Err(HypError::Hypothesis(format!("p = {} <= 2g = {}", prime.p, 2 * g)));
    }
    let mut seen = HashSet::new();
    for (x, y) in points {
        if !c.contains(x, y) {
            return Err(HypError::NotOnCurve);
        }
        if !seen.insert((x.clone(), y.clone())) {
            return Err(HypError::Hypothesis(format!("repeated point ({}, {})", k.render(x), k.render(y))));
        }
    }
    let cr = good_reduction(k, c, prime)?;
    let residue_count = cr.count_points(count_bound)?;
    let point_count = points.len() as u64 + includes_infinity as u64;
    let coleman_bound = 2 * g as u64 - 2 + residue_count;
    if point_count <= coleman_bound {
        return Err(HypError::Inconclusive(format!(
            "{point_count} points do not exceed 2g - 2 + #C(F_q) = {coleman_bound}"
        )));
    }
    let inf = if includes_infinity { " including infinity" } else { "" };
    let transcript = vec![
        format!("genus {g}, {} with residue field of order {}", prime.describe(), prime.norm()),
        format!("p = {} > 2g = {}", prime.p, 2 * g),
        format!("good reduction: {}", cr.render()),
        format!("#C(F_{}) = {residue_count}", prime.norm()),
        format!("{point_count} distinct K-points{inf} > 2g - 2 + {residue_count} = {coleman_bound}"),
        format!("so rank J(K) >= {g}"),
    ];
    Ok(HRankCert {
        curve: HCurveSpec::of(c),
        points: points.iter().map(|(x, y)| HPointSpec::of(x, y)).collect(),
        includes_infinity,
        prime: prime.spec(),
        residue_degree: prime.residue_degree(),
        genus: g,
        point_count,
        residue_count,
        coleman_bound,
        rank_lower_bound: g,
        transcript,
    })
}

impl HInfOrderCert {
    pub fn verify(&self, prime_bound: u64) -> Result<(), HypError> {
        if self.argument != WEIERSTRASS_ARGUMENT {
            return Err(HypError::Verification(format!("unknown argument {}", self.argument)));
        }
        let c = self.curve.build(prime_bound)?;
        let (x, y) = self.point.build(&c)?;
        let prime = c.field().prime_from_spec(&self.prime)?;
        let again = nontorsion_weierstrass(&c, (&x, &y), &prime)?;
        if again != *self {
            return Err(HypError::Verification("recomputed certificate differs".into()));
        }
        Ok(())
    }
}

impl HRankCert {
    pub fn verify(&self, prime_bound: u64, count_bound: u64) -> Result<(), HypError> {
        let c = self.curve.build(prime_bound)?;
        let points = self.points.iter().map(|p| p.build(&c)).collect::<Result<Vec<_>, _>>()?;
        let prime = c.field().prime_from_spec(&self.prime)?;
        let again = coleman_rank(&c, &points, self.includes_infinity, &prime, count_bound)?;
        if again != *self {
            return Err(HypError::Verification("recomputed certificate differs".into()));
        }
        Ok(())
    }
}
