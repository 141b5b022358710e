use anyhow::{bail, Result};
use curvecert::elliptic::EllCurve;
use curvecert::exactfield::{parse_curve_rhs, parse_poly, reduce_rational, Field, FiniteField, GaloisField, Poly, PolyRing, Rational, Rationals};
use curvecert::galois::{certify_an, certify_sn, cycle_types, discriminant};
use curvecert::hyperelliptic::HypCurve;
use curvecert::schema::rat_str;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::report::{CountResult, GaloisResult, JacobianResult};

fn field_name(p: u64, k: u32) -> String {
    if k == 1 {
        format!("F_{p}")
    } else {
        format!("F_{p}^{k}")
    }
}

fn reduce(f: &Poly<Rational>, field: &GaloisField) -> Result<Poly<Vec<u64>>> {
    let p = field.prime();
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| Ok(field.from_base(reduce_rational(c, p)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyRing::new(field.clone()).from_coeffs(coeffs))
}

fn equation(rhs: &Poly<Rational>) -> String {
    format!("y^2 = {}", PolyRing::new(Rationals).render(rhs, "x"))
}

pub fn count(curve: &str, p: u64, k: u32, bound: u64) -> Result<CountResult> {
    let field = GaloisField::new(p, k)?;
    let rhs = parse_curve_rhs(curve)?;
    let g = reduce(&rhs, &field)?;
    let name = field_name(p, k);
    if g.degree() == Some(3) {
        let c = g.coeffs();
        if c[3] != field.one() {
            bail!("cubic must be monic");
        }
        let e = EllCurve::general(field, c[2].clone(), c[1].clone(), c[0].clone())?;
        let count = e.count_points(bound)?;
        return Ok(CountResult { curve: equation(&rhs), field: name, model: "elliptic".into(), genus: 1, count });
    }
    let c = HypCurve::simple(field, g)?;
    let count = c.count_points(bound)?;
    Ok(CountResult { curve: equation(&rhs), field: name, model: "hyperelliptic".into(), genus: c.genus(), count })
}

pub fn galois(poly: &str, bound: u64) -> Result<GaloisResult> {
    let f = parse_poly(poly, 'x')?;
    let cycle_types = cycle_types(&f, bound)?;
    let cert = match certify_sn(&f, bound)? {
        Some(c) => Some(c),
        None => certify_an(&f, bound)?,
    };
    Ok(GaloisResult {
        poly: PolyRing::new(Rationals).render(&f, "x"),
        discriminant: rat_str(&discriminant(&f)),
        cycle_types,
        group: cert.as_ref().map(|c| c.group.clone()),
        certificate: cert,
    })
}

fn render_lpoly(a: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = if c < &BigInt::zero() { -c } else { c.clone() };
        if out.is_empty() {
            if c < &BigInt::zero() {
                out.push('-');
            }
        } else {
            out.push_str(if c < &BigInt::zero() { " - " } else { " + " });
        }
        let mono = match i {
            0 => String::new(),
            1 => "T".into(),
            _ => format!("T^{i}"),
        };
        if mono.is_empty() || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&mono);
    }
    out
}

pub fn jacobian(curve: &str, p: u64, k: u32, bound: u64) -> Result<JacobianResult> {
    let field = GaloisField::new(p, k)?;
    let rhs = parse_curve_rhs(curve)?;
    let c = HypCurve::simple(field.clone(), reduce(&rhs, &field)?)?;
    let lp = c.lpoly(bound)?;
    Ok(JacobianResult {
        curve: equation(&rhs),
        q: lp.q,
        genus: lp.genus,
        lpoly: lp.coeffs.iter().map(BigInt::to_string).collect(),
        lpoly_text: render_lpoly(&lp.coeffs),
        jacobian_order: lp.jacobian_order().to_string(),
        counts: lp.counts,
    })
}
