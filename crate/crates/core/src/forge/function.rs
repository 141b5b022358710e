use super::{
    Certificate, ConclusionStatus, CurveDesc, FieldDesc, ForgeError, ForgeOptions, HypothesisCheck, PointEntry, Request,
    TheoremInstance,
};
use crate::exactfield::{factor_u64, Field, FiniteField, GaloisField, Poly, PolyRing};
use crate::funcfield::{ff_separable, ff_trinomial, FFCurve, FFQuotientRing, RatFunc, RatFuncField, RatFuncSpec};

pub const PGL_CITATION: &str = "Abhyankar, Projective polynomials (1997)";
pub const M24_CITATION: &str = "Conway, Hulpke, McKay (2010)";

type FPoly = Poly<RatFunc<Vec<u64>>>;

fn specs(k: &RatFuncField<GaloisField>, p: &FPoly) -> Vec<RatFuncSpec> {
    p.coeffs().iter().map(|c| k.spec(c)).collect()
}

fn descs(k: &RatFuncField<GaloisField>, c: &FFCurve<GaloisField>, modulus: &FPoly) -> (FieldDesc, CurveDesc) {
    let base = k.base();
    (
        FieldDesc::FunctionField { p: base.prime(), modulus: base.modulus().to_vec() },
        CurveDesc::FunctionField {
            equation: c.render(),
            genus: c.genus(),
            h: specs(k, c.h()),
            g: specs(k, c.g()),
            modulus: specs(k, modulus),
        },
    )
}

pub(super) fn check_points(
    field: &FieldDesc,
    curve: &CurveDesc,
    points: &[PointEntry],
    checks: &mut Vec<String>,
) -> Result<(), ForgeError> {
    let (FieldDesc::FunctionField { p, modulus: base_modulus }, CurveDesc::FunctionField { h, g, modulus, .. }) =
        (field, curve)
    else {
        return Err(ForgeError::Verification("function-field curve over a number field".into()));
    };
    let k = RatFuncField::new(GaloisField::with_modulus(*p, base_modulus)?);
    let ring = PolyRing::new(k.clone());
    let poly = |v: &[RatFuncSpec]| -> Result<FPoly, ForgeError> {
        Ok(ring.from_coeffs(v.iter().map(|s| k.from_spec(s)).collect::<Result<Vec<_>, _>>()?))
    };
    let c = FFCurve::new(k.clone(), poly(h)?, poly(g)?)?;
    let r = FFQuotientRing::new(k.clone(), poly(modulus)?)?;
    for pt in points {
        let PointEntry::RootClass { label, y } = pt else {
            return Err(ForgeError::Verification(format!("{} is not a root-class point", pt.label())));
        };
        let y = r.constant(k.from_spec(y)?);
        if !r.on_curve(c.h(), c.g(), &y) {
            return Err(ForgeError::Verification(format!("{label} is not on the curve")));
        }
    }
    checks.push(format!("{} points (u, y) satisfy {} in K[U]/(f)", points.len(), c.render()));
    Ok(())
}

fn prime_power(q: u64) -> Result<(u64, u32), ForgeError> {
    match factor_u64(q).as_slice() {
        [(p, k)] => Ok((*p, *k)),
        _ => Err(ForgeError::Invalid(format!("q = {q} is not a prime power"))),
    }
}

fn cite(inst: &mut TheoremInstance, group: &str, citation: &str) {
    let b = inst.attach(Certificate::CitedGalois { group: group.into(), citation: citation.into() });
    let cond = format!("cited from {citation}");
    inst.conclude(format!("Gal(L_f/K) = {group}"), ConclusionStatus::Conditional, &[&b, &cond]);
    inst.unresolved.push(format!("Gal(L_f/K) = {group} is cited from {citation}, not verified"));
}

/// `y^2 = U^N + U + t + d^2` over `F_q(t)`, `N = (q^m - 1)/(q - 1)`, `q` odd.
pub fn forge_pgl(q: u64, m: u32, d: &str, opts: &ForgeOptions) -> Result<TheoremInstance, ForgeError> {
    let (p, e) = prime_power(q)?;
    if p == 2 {
        return Err(ForgeError::Invalid("q must be odd; characteristic 2 uses the m24 model".into()));
    }
    let k = RatFuncField::new(GaloisField::new(p, e)?);
    let dd = k.parse(d)?;
    if k.is_zero(&dd) {
        return Err(ForgeError::Invalid("d must be nonzero".into()));
    }
    let ring = PolyRing::new(k.clone());
    let f = ff_trinomial(&k, m)?;
    let g = ring.add(&f, &ring.constant(k.square(&dd)));
    if !ff_separable(&k, &g) {
        return Err(ForgeError::Invalid("g = f + d^2 has a repeated root".into()));
    }
    let c = FFCurve::new(k.clone(), ring.zero(), g.clone())?;
    let r = FFQuotientRing::new(k.clone(), f.clone())?;
    let n = f.degree().unwrap();
    let (fd, cd) = descs(&k, &c, &f);
    let mut inst = TheoremInstance::new("th3.5", Request::Pgl { q, m, d: d.to_string() }, fd, cd, opts);
    for (label, y) in [("(u, d)", dd.clone()), ("(u, -d)", k.neg(&dd))] {
        if !r.on_curve(c.h(), c.g(), &r.constant(y.clone())) {
            return Err(ForgeError::Verification(format!("{label} is not on the curve")));
        }
        inst.points.push(PointEntry::RootClass { label: label.into(), y: k.spec(&y) });
    }
    let hb = inst.attach(Certificate::Hypotheses {
        checks: vec![
            HypothesisCheck {
                id: "f".into(),
                statement: format!("f = {} is separable", ring.render(&f, "U")),
                detail: format!("N = (q^m - 1)/(q - 1) = {n}"),
            },
            HypothesisCheck {
                id: "g".into(),
                statement: "g = f + d^2 is separable".into(),
                detail: format!("d = {}", k.render(&dd)),
            },
        ],
    });
    inst.certify("(u, +-d) lie on C over K[U]/(f)", &["points"]);
    inst.certify(format!("|C(L_f)| >= 2N = {}", 2 * n), &[&hb, "points"]);
    cite(&mut inst, &format!("PGL({m}, F_{q})"), PGL_CITATION);
    Ok(inst)
}

/// `y^2 + alpha y = f(U) + d(d + alpha)` over `F_2(t)` for a degree-24 `f`.
pub fn forge_m24(f_text: &str, alpha: &str, d: &str, opts: &ForgeOptions) -> Result<TheoremInstance, ForgeError> {
    let k = RatFuncField::new(GaloisField::prime(2)?);
    let ring = PolyRing::new(k.clone());
    let f = k.parse_upoly(f_text)?;
    if f.degree() != Some(24) || !ring.is_monic(&f) {
        return Err(ForgeError::Invalid("f must be monic of degree 24 in U".into()));
    }
    let a = k.parse(alpha)?;
    if k.is_zero(&a) {
        return Err(ForgeError::Invalid("alpha = 0 degenerates the model".into()));
    }
    let dd = k.parse(d)?;
    if k.is_zero(&dd) {
        return Err(ForgeError::Invalid("d must be nonzero".into()));
    }
    let shift = k.mul(&dd, &k.add(&dd, &a));
    if k.add(&k.square(&dd), &k.mul(&a, &dd)) != shift {
        return Err(ForgeError::Verification("d^2 + alpha d != d(d + alpha)".into()));
    }
    let g = ring.add(&f, &ring.constant(shift.clone()));
    if !ff_separable(&k, &g) {
        return Err(ForgeError::Invalid("g = f + d(d + alpha) has a repeated root".into()));
    }
    let c = FFCurve::new(k.clone(), ring.constant(a.clone()), g)?;
    let r = FFQuotientRing::new(k.clone(), f.clone())?;
    let (fd, cd) = descs(&k, &c, &f);
    let request = Request::M24 { f: f_text.to_string(), alpha: alpha.to_string(), d: d.to_string() };
    let mut inst = TheoremInstance::new("th3.6", request, fd, cd, opts);
    for (label, y) in [("(u, d)", dd.clone()), ("(u, d + alpha)", k.add(&dd, &a))] {
        if !r.on_curve(c.h(), c.g(), &r.constant(y.clone())) {
            return Err(ForgeError::Verification(format!("{label} is not on the curve")));
        }
        inst.points.push(PointEntry::RootClass { label: label.into(), y: k.spec(&y) });
    }
    let hb = inst.attach(Certificate::Hypotheses {
        checks: vec![
            HypothesisCheck {
                id: "identity".into(),
                statement: "d^2 + alpha d = d(d + alpha)".into(),
                detail: format!("= {}", k.render(&shift)),
            },
            HypothesisCheck {
                id: "model".into(),
                statement: "f separable and the model nonsingular".into(),
                detail: format!("genus {}", c.genus()),
            },
        ],
    });
    inst.certify("(u, d) and (u, d + alpha) lie on C over K[U]/(f)", &[&hb, "points"]);
    inst.certify("|C(L_f)| >= 48", &[&hb, "points"]);
    cite(&mut inst, "M24", M24_CITATION);
    Ok(inst)
}
