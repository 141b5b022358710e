use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::elliptic::odd_prime_divisors;
use super::{
    Certificate, Citation, ConclusionStatus, CurveDesc, FieldDesc, ForgeError, ForgeOptions, HypothesisCheck,
    PointEntry, PrimeChoice, Request, TheoremInstance,
};
use crate::exactfield::{integer_coeffs, map_poly, parse_poly, Field, Poly, PolyRing, Rational, Rationals};
use crate::galois::{certify_an, certify_sn, cite_group, GaloisCert, MGTable};
use crate::hyperelliptic::{
    coleman_rank, nontorsion_weierstrass, reduce_curve, HCurveSpec, HInfOrderCert, HPointSpec, HypCurve,
};
use crate::numberfield::{NFElement, NumberField, UnramifiedPrime};
use crate::schema::rat_str;

/// Why a non-torsion point with conjugates summing to zero spans the standard representation.
const SPAN_ARGUMENT: &str = "div(y - d) = sum of (u_i, d) - n infinity, so the n conjugate classes sum to 0; \
                             Gal(L_f/Q) acts 2-transitively on the roots, so their rational span is 0 or the \
                             irreducible (n-1)-dimensional standard representation, and it is nonzero";

fn entry(label: impl Into<String>, x: &NFElement, y: &NFElement) -> PointEntry {
    let s = HPointSpec::of(x, y);
    PointEntry::Affine { label: label.into(), x: s.x, y: s.y }
}

fn hyper_desc(c: &HypCurve<NumberField>) -> (FieldDesc, CurveDesc) {
    (
        FieldDesc::NumberField { spec: c.field().spec() },
        CurveDesc::Hyperelliptic { equation: c.render(), genus: c.genus(), spec: HCurveSpec::of(c) },
    )
}

pub(super) fn check_points(
    spec: &HCurveSpec,
    points: &[PointEntry],
    prime_bound: u64,
    checks: &mut Vec<String>,
) -> Result<(), ForgeError> {
    let c = spec.build(prime_bound)?;
    for p in points {
        let PointEntry::Affine { label, x, y } = p else {
            return Err(ForgeError::Verification(format!("{} is not an affine point", p.label())));
        };
        HPointSpec { x: x.clone(), y: y.clone() }
            .build(&c)
            .map_err(|_| ForgeError::Verification(format!("{label} is not on the curve")))?;
    }
    checks.push(format!("{} points lie on {}", points.len(), c.render()));
    Ok(())
}

fn degree_one_prime(k: &NumberField, p: u64, root: Option<u64>) -> Result<UnramifiedPrime, ForgeError> {
    match root {
        Some(r) => Ok(k.prime_with_root(p, r)?),
        None => k
            .primes_above(p)?
            .into_iter()
            .find(|q| q.residue_degree() == 1)
            .ok_or_else(|| ForgeError::Invalid(format!("no prime over {p} has residue field F_{p}"))),
    }
}

/// `y^2 = (x - a_1)...(x - a_q) + d^2` with the `a_i` covering the residues of a degree-one prime.
pub fn forge_residue_cover(
    field: &str,
    p: u64,
    root: Option<u64>,
    d: &str,
    reps: Option<&[String]>,
    opts: &ForgeOptions,
) -> Result<TheoremInstance, ForgeError> {
    let k = NumberField::parse(field, opts.prime_bound)?;
    if p < 5 {
        return Err(ForgeError::Invalid(format!("residue field must have prime order q >= 5, got {p}")));
    }
    let prime = degree_one_prime(&k, p, root)?;
    let reps: Vec<String> = match reps {
        Some(r) => r.to_vec(),
        None => (0..p).map(|i| i.to_string()).collect(),
    };
    let elems = reps.iter().map(|s| k.parse_element(s)).collect::<Result<Vec<_>, _>>()?;
    let mut residues = Vec::with_capacity(elems.len());
    for (s, a) in reps.iter().zip(&elems) {
        let r = k
            .reduce(a, &prime)
            .map_err(|_| ForgeError::Invalid(format!("{s} is not integral at the {}", prime.describe())))?;
        residues.push(r[0]);
    }
    let mut sorted = residues.clone();
    sorted.sort_unstable();
    if sorted != (0..p).collect::<Vec<_>>() {
        return Err(ForgeError::Invalid(format!(
            "residue classes not covered exactly once: representatives reduce to {residues:?} modulo the {}",
            prime.describe()
        )));
    }
    let de = k.parse_element(d)?;
    if k.is_zero(&de) {
        return Err(ForgeError::Invalid("d must be nonzero".into()));
    }
    if !k.is_integral_at(&de, p) || !k.in_prime(&de, &prime)? {
        return Err(ForgeError::Invalid(format!("d is not in the {}", prime.describe())));
    }
    let ring = PolyRing::new(k.clone());
    let prod = elems.iter().fold(ring.one(), |acc, a| ring.mul(&acc, &ring.linear(a)));
    let c = HypCurve::simple(k.clone(), ring.add(&prod, &ring.constant(k.square(&de))))?;
    let mut pts = Vec::new();
    for a in &elems {
        pts.push((a.clone(), de.clone()));
        pts.push((a.clone(), k.neg(&de)));
    }
    let cert = coleman_rank(&c, &pts, true, &prime, opts.count_bound)?;
    let reduced = reduce_curve(&k, &c, &prime)?;
    let fermat = {
        let r = PolyRing::new(prime.residue.clone());
        let f = prime.residue.clone();
        r.sub(&r.monomial(f.one(), p as usize), &r.x())
    };
    if *reduced.g() != fermat {
        return Err(ForgeError::Verification("reduction is not y^2 = x^q - x".into()));
    }

    let (fd, cd) = hyper_desc(&c);
    let request = Request::ResidueCover {
        field: field.to_string(),
        p,
        root: prime.root(),
        d: d.to_string(),
        reps: Some(reps.clone()),
    };
    let mut inst = TheoremInstance::new("th3.1", request, fd, cd, opts);
    for (s, pair) in reps.iter().zip(pts.chunks(2)) {
        inst.points.push(entry(format!("({s}, d)"), &pair[0].0, &pair[0].1));
        inst.points.push(entry(format!("({s}, -d)"), &pair[1].0, &pair[1].1));
    }
    let g = c.genus();
    let hb = inst.attach(Certificate::Hypotheses {
        checks: vec![
            HypothesisCheck {
                id: "cover".into(),
                statement: format!("a_1, ..., a_{p} meet every residue class modulo the prime once"),
                detail: format!("residues {residues:?}"),
            },
            HypothesisCheck {
                id: "d".into(),
                statement: "0 != d in the prime".into(),
                detail: format!("d = {} reduces to 0 at the {}", k.render(&de), prime.describe()),
            },
            HypothesisCheck {
                id: "reduction".into(),
                statement: format!("C reduces to y^2 = x^{p} - x"),
                detail: reduced.render(),
            },
        ],
    });
    let cb = inst.attach(Certificate::ColemanRank { cert });
    inst.certify(format!("C has {} K-points including infinity", 2 * p + 1), &["points"]);
    inst.certify(format!("C reduces to y^2 = x^{p} - x modulo the {}", prime.describe()), &[&hb]);
    inst.certify(format!("rank J(K) >= g = {g}"), &[&hb, &cb]);
    if std::iter::once(&de).chain(&elems).any(|a| k.generates(a)) {
        inst.certify("K = Q(a_1, ..., a_q, d)", &[]);
    }
    Ok(inst)
}

enum Galois {
    Symmetric(GaloisCert),
    Alternating(GaloisCert),
    Cited(GaloisCert, Citation),
    Unknown,
}

/// `y^2 = f(x) + d^2` over `Q` with the points `(u, +-d)` over `Q(u) = Q[x]/(f)`.
pub fn forge_trinomial(
    f_text: &str,
    d: &str,
    cited: Option<&Citation>,
    prime: &PrimeChoice,
    opts: &ForgeOptions,
) -> Result<TheoremInstance, ForgeError> {
    let f = parse_poly(f_text, 'x')?;
    let n = f.degree().unwrap_or(0);
    if integer_coeffs(&f).is_none() || f.lead() != Some(&Rational::one()) {
        return Err(ForgeError::Invalid("f must be monic with integer coefficients".into()));
    }
    if n < 5 || n % 2 == 0 {
        return Err(ForgeError::Invalid(format!("deg f = {n}: need odd degree n >= 5")));
    }
    let dr = crate::exactfield::parse_rational(d.trim())
        .map_err(|_| ForgeError::Invalid(format!("d must be rational, got {d:?}")))?;
    if dr.is_zero() {
        return Err(ForgeError::Invalid(
            "d = 0: the d^2 term vanishes and the points collapse to Weierstrass points".into(),
        ));
    }
    let qr = PolyRing::new(Rationals);
    let g = qr.add(&f, &qr.constant(&dr * &dr));
    if !qr.is_separable(&g) {
        return Err(ForgeError::Invalid("g = f + d^2 has a repeated root".into()));
    }
    let k = NumberField::certified(f.clone(), opts.prime_bound)?;
    let kr = PolyRing::new(k.clone());
    let lift = |h: &Poly<Rational>| map_poly::<Rationals, NumberField>(&kr, h, |c| k.from_rational(c.clone()));
    let c = HypCurve::simple(k.clone(), lift(&g))?;
    let u = k.theta();
    let dk = k.from_rational(dr.clone());
    let (yp, ym) = (dk.clone(), k.neg(&dk));
    for y in [&yp, &ym] {
        if !c.contains(&u, y) {
            return Err(ForgeError::Verification("(u, d) is not on the curve".into()));
        }
    }

    let galois = if let Some(cert) = certify_sn(&f, opts.prime_bound)? {
        Galois::Symmetric(cert)
    } else if let Some(cert) = certify_an(&f, opts.prime_bound)? {
        Galois::Alternating(cert)
    } else if let Some(cit) = cited {
        Galois::Cited(cite_group(&f, &cit.group, &cit.citation, opts.prime_bound)?, cit.clone())
    } else {
        Galois::Unknown
    };

    let (prime, cert) = weierstrass_prime(&k, &c, (&u, &dk), &dr, prime, opts)?;
    let theorem = match (&galois, cert.is_some()) {
        (Galois::Symmetric(_) | Galois::Alternating(_), true) => "th3.8",
        (Galois::Symmetric(_), false) => "th3.3",
        (Galois::Alternating(_), false) => "th3.4",
        _ => "th3.2",
    };
    let (fd, cd) = hyper_desc(&c);
    let request = Request::Trinomial { f: f_text.to_string(), d: rat_str(&dr), cited: cited.cloned(), prime };
    let mut inst = TheoremInstance::new(theorem, request, fd, cd, opts);
    inst.points.push(entry("(u, d)", &u, &yp));
    inst.points.push(entry("(u, -d)", &u, &ym));

    let mut checks = vec![
        HypothesisCheck {
            id: "f".into(),
            statement: format!("f is irreducible of odd degree {n}"),
            detail: format!("{:?}", k.irreducibility().method),
        },
        HypothesisCheck {
            id: "g".into(),
            statement: "g = f + d^2 has distinct roots".into(),
            detail: format!("disc(g) = {}", rat_str(&qr.discriminant(&g))),
        },
    ];
    if let Some(c) = &cert {
        checks.push(HypothesisCheck {
            id: "prime".into(),
            statement: format!("d lies in a prime over {} and f is separable modulo it", c.prime.p),
            detail: format!("{} does not divide disc(f) = {}", c.prime.p, rat_str(k.disc())),
        });
    }
    let hb = inst.attach(Certificate::Hypotheses { checks });
    inst.certify(
        format!("|C(L_f)| >= 2n = {}: the points (u_i, +-d) over the n distinct roots of f", 2 * n),
        &[&hb, "points"],
    );
    let gb = match &galois {
        Galois::Symmetric(g) | Galois::Alternating(g) | Galois::Cited(g, _) => {
            let b = inst.attach(Certificate::Galois { cert: g.clone() });
            if g.is_certified() {
                inst.certify(format!("Gal(L_f/Q) = {}", g.group), &[&b]);
            }
            Some(b)
        }
        Galois::Unknown => None,
    };
    let nb = cert.map(|cert| {
        let b = inst.attach(Certificate::JacobianInfiniteOrder { point: "(u, d)".into(), cert });
        inst.certify("[(u, d) - infinity] has infinite order in J(Q(u))", &[&b]);
        b
    });
    match (&galois, gb, nb) {
        (Galois::Symmetric(g) | Galois::Alternating(g), Some(gb), Some(nb)) => {
            let statement = match MGTable::builtin().lookup(&g.group) {
                Ok(m) if m.m == n - 1 => format!("rank J(L_f) >= m({}) = {}", g.group, m.m),
                _ => format!("rank J(L_f) >= n - 1 = {}", n - 1),
            };
            inst.certify(statement, &[&gb, &nb, SPAN_ARGUMENT]);
        }
        (Galois::Cited(g, cit), Some(gb), Some(nb)) => {
            match MGTable::builtin().lookup(&g.group) {
                Ok(m) => {
                    let cond = format!("conditional on the cited identification Gal(L_f/Q) = {}", g.group);
                    inst.conclude(
                        format!("rank J(L_f) >= m({}) = {}", g.group, m.m),
                        ConclusionStatus::Conditional,
                        &[&gb, &nb, &cond],
                    );
                }
                Err(_) => inst.unresolved.push(format!("m({}) is not in the table", g.group)),
            }
            inst.unresolved.push(format!("Gal(L_f/Q) = {} is cited from {}, not verified", g.group, cit.citation));
        }
        (_, _, None) => inst.unresolved.push(
            "(u, d) has infinite order: no prime over a divisor of d satisfies the reduction hypotheses".into(),
        ),
        _ => inst.unresolved.push("Gal(L_f/Q) is not identified, so no rank bound is drawn".into()),
    }
    Ok(inst)
}

fn weierstrass_prime(
    k: &NumberField,
    c: &HypCurve<NumberField>,
    point: (&NFElement, &NFElement),
    d: &Rational,
    choice: &PrimeChoice,
    opts: &ForgeOptions,
) -> Result<(PrimeChoice, Option<HInfOrderCert>), ForgeError> {
    match choice {
        PrimeChoice::Pinned { prime } => {
            let pr = k.prime_from_spec(prime)?;
            Ok((choice.clone(), Some(nontorsion_weierstrass(c, point, &pr)?)))
        }
        PrimeChoice::NotFound => Ok((PrimeChoice::NotFound, None)),
        PrimeChoice::Search => {
            for p in odd_prime_divisors(d, opts.prime_bound) {
                for pr in k.primes_above(p).unwrap_or_default() {
                    if let Ok(cert) = nontorsion_weierstrass(c, point, &pr) {
                        return Ok((PrimeChoice::Pinned { prime: pr.spec() }, Some(cert)));
                    }
                }
            }
            Ok((PrimeChoice::NotFound, None))
        }
    }
}

/// `x^n + a x^s + b` as a coefficient list, constant term first.
pub fn trinomial_text(n: usize, s: usize, a: &BigInt, b: &BigInt) -> String {
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] += 1;
    c[s] += a;
    c[0] += b;
    format!("[{}]", c.iter().map(BigInt::to_string).collect::<Vec<_>>().join(","))
}
