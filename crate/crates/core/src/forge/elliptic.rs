use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{
    Certificate, ConclusionStatus, CurveDesc, FieldDesc, ForgeError, ForgeOptions, HypothesisCheck, PointEntry,
    PrimeChoice, Request, TheoremInstance,
};
use crate::elliptic::{
    collinear_sum_zero, hasse_gap, lutz_nagell, nontorsion_two_prime, CurveSpec, EPoint, EllCurve, EllError, PointSpec,
};
use crate::exactfield::{factor_u64, map_poly, parse_rational, primes_up_to, Field, PolyRing, Rational, Rationals};
use crate::galois::certify_an;
use crate::hyperelliptic::{nontorsion_weierstrass, HypCurve, HypError};
use crate::numberfield::{NFElement, NumberField, PrimeSpec, UnramifiedPrime};
use crate::schema::rat_str;

/// The generators of `y^2 = x^3 + x + 82^2` besides `(0, 82)`.
pub const PUBLISHED_82: [(&str, &str); 3] = [("12", "92"), ("60", "472"), ("465/4", "10049/8")];

pub(super) fn parse_int(s: &str) -> Result<BigInt, ForgeError> {
    s.trim().parse::<BigInt>().map_err(|_| ForgeError::Invalid(format!("not an integer: {s}")))
}

fn parse_rat(s: &str, what: &str) -> Result<Rational, ForgeError> {
    parse_rational(s.trim()).map_err(|_| ForgeError::Invalid(format!("{what} must be rational, got {s:?}")))
}

fn affine_entry(label: impl Into<String>, p: &EPoint<NFElement>) -> PointEntry {
    let s = PointSpec::of(p).expect("affine point");
    PointEntry::Affine { label: label.into(), x: s.x, y: s.y }
}

fn elliptic_desc(e: &EllCurve<NumberField>) -> (FieldDesc, CurveDesc) {
    (
        FieldDesc::NumberField { spec: e.field().spec() },
        CurveDesc::Elliptic { equation: e.render(), spec: CurveSpec::of(e) },
    )
}

pub(super) fn check_points(
    spec: &CurveSpec,
    points: &[PointEntry],
    prime_bound: u64,
    checks: &mut Vec<String>,
) -> Result<(), ForgeError> {
    let e = spec.build(prime_bound)?;
    for p in points {
        let PointEntry::Affine { label, x, y } = p else {
            return Err(ForgeError::Verification(format!("{} is not an affine point", p.label())));
        };
        PointSpec { x: x.clone(), y: y.clone() }
            .build(&e)
            .map_err(|_| ForgeError::Verification(format!("{label} is not on the curve")))?;
    }
    checks.push(format!("{} points lie on {}", points.len(), e.render()));
    Ok(())
}

/// `y^2 = x^3 + x + d^2` over `Q` with the point `(0, d)`.
pub fn forge_orig(d: &BigInt, opts: &ForgeOptions) -> Result<TheoremInstance, ForgeError> {
    if d.is_zero() {
        return Err(ForgeError::Invalid("d must be nonzero".into()));
    }
    let k = NumberField::rationals();
    let dd = k.from_int(d);
    let e = EllCurve::new(k.clone(), k.one(), k.square(&dd))?;
    let p = e.point(k.zero(), dd.clone())?;
    let (field, curve) = elliptic_desc(&e);
    let mut inst = TheoremInstance::new("orig", Request::Orig { d: d.to_string() }, field, curve, opts);
    inst.points.push(affine_entry("P", &p));
    inst.points.push(affine_entry("-P", &e.neg(&p)));
    if *d == BigInt::from(82) {
        for (i, (x, y)) in PUBLISHED_82.iter().enumerate() {
            let q = e.point(k.from_rational(parse_rat(x, "x")?), k.from_rational(parse_rat(y, "y")?))?;
            inst.points.push(affine_entry(format!("G{}", i + 2), &q));
        }
    }
    if d.abs() >= BigInt::from(3) {
        match lutz_nagell(&e, &p) {
            Ok(cert) => {
                let b = inst.attach(Certificate::EllipticInfiniteOrder { point: "P".into(), cert });
                inst.certify("P = (0, d) has infinite order in E(Q)", &[&b]);
                inst.certify("rank E(Q) >= 1", &[&b]);
            }
            Err(EllError::Inconclusive(m) | EllError::Hypothesis(m)) => {
                inst.unresolved.push(format!("rank E(Q) >= 1: Lutz-Nagell inconclusive ({m})"));
            }
            Err(err) => return Err(err.into()),
        }
    } else {
        inst.unresolved.push("rank E(Q) >= 1: for |d| <= 2, y^2 divides the discriminant and Lutz-Nagell does not apply".into());
    }
    Ok(inst)
}

/// `y^2 = (x - a)(x - b)(x - c) + d^2` over `Q`.
pub fn forge_orig2(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, opts: &ForgeOptions) -> Result<TheoremInstance, ForgeError> {
    let k = NumberField::rationals();
    let int = |n: &BigInt| k.from_int(n);
    let a2 = int(&-(a + b + c));
    let a4 = int(&(a * b + b * c + c * a));
    let a6 = int(&(d * d - a * b * c));
    let e = EllCurve::general(k.clone(), a2, a4, a6)?;
    let (field, curve) = elliptic_desc(&e);
    let request = Request::Orig2 { a: a.to_string(), b: b.to_string(), c: c.to_string(), d: d.to_string() };
    let mut inst = TheoremInstance::new("orig2", request, field, curve, opts);
    let dd = int(d);
    let mut line = Vec::new();
    for r in [a, b, c] {
        let p = e.point(int(r), dd.clone())?;
        let m = e.point(int(r), k.neg(&dd))?;
        inst.points.push(affine_entry(format!("({r}, {d})"), &p));
        inst.points.push(affine_entry(format!("({r}, {})", -d), &m));
        line.push(p);
    }
    if !collinear_sum_zero(&e, &line[0], &line[1], &line[2])? {
        return Err(ForgeError::Verification("points on y = d do not sum to zero".into()));
    }
    let labels = [a, b, c].iter().map(|r| format!("({r}, {d})")).collect();
    let basis = inst.attach(Certificate::Collinear { points: labels, line: format!("y = {d}") });
    inst.certify(format!("({a}, {d}) + ({b}, {d}) + ({c}, {d}) = 0"), &[&basis]);
    if a.is_zero() && *b == -c && !b.is_zero() {
        inst.certify(format!("E is y^2 = x^3 - {}x + {}", b * b, d * d), &[]);
    }
    inst.unresolved.push("rank E(Q) >= 2: independence of the points needs heights".into());
    Ok(inst)
}

fn degree_one_primes(k: &NumberField, bound: u64) -> Vec<UnramifiedPrime> {
    primes_up_to(bound)
        .into_iter()
        .filter(|&p| p > 2)
        .filter_map(|p| k.primes_above(p).ok())
        .flatten()
        .filter(|q| q.residue_degree() == 1)
        .collect()
}

fn hyp(number: u8, text: impl Into<String>) -> ForgeError {
    ForgeError::Hypothesis { number, text: text.into() }
}

fn check(id: u8, statement: &str, detail: String) -> HypothesisCheck {
    HypothesisCheck { id: format!("({id})"), statement: statement.into(), detail }
}

/// Shared checks on the prime pair for the two-prime families.
fn check_pair(k: &NumberField, small: &UnramifiedPrime, large: &UnramifiedPrime, d: &NFElement) -> Result<(), ForgeError> {
    for pr in [small, large] {
        if pr.residue_degree() != 1 {
            return Err(ForgeError::Invalid(format!("{} does not have a residue field of prime order", pr.describe())));
        }
        if !k.is_integral_at(d, pr.p) {
            return Err(ForgeError::Invalid(format!("d is not integral at {}", pr.describe())));
        }
    }
    if !hasse_gap(small.p, large.p) {
        return Err(ForgeError::Invalid(format!("{} <= {} + 1 + 2 sqrt({})", large.p, small.p, small.p)));
    }
    if k.is_zero(d) {
        return Err(ForgeError::Invalid("d must be nonzero".into()));
    }
    Ok(())
}

/// Tries the given pair, or searches pairs in increasing `(p, q)` order.
fn with_pair(
    k: &NumberField,
    primes: Option<&[PrimeSpec; 2]>,
    opts: &ForgeOptions,
    mut attempt: impl FnMut(&UnramifiedPrime, &UnramifiedPrime, Option<BigInt>) -> Result<TheoremInstance, ForgeError>,
) -> Result<TheoremInstance, ForgeError> {
    if let Some([s, l]) = primes {
        let (s, l) = (k.prime_from_spec(s)?, k.prime_from_spec(l)?);
        return attempt(&s, &l, None);
    }
    let list = degree_one_primes(k, opts.prime_bound);
    for small in &list {
        for large in list.iter().filter(|l| hasse_gap(small.p, l.p)) {
            if let Ok(inst) = attempt(small, large, Some(BigInt::from(small.p) * large.p)) {
                return Ok(inst);
            }
        }
    }
    Err(ForgeError::NoPrimePair(opts.prime_bound))
}

fn multiplier_of(multiplier: Option<&BigInt>, searched: Option<BigInt>) -> BigInt {
    searched.or_else(|| multiplier.cloned()).unwrap_or_else(BigInt::one)
}

/// `y^2 = x^3 + x + d^2` over `K` with `d = multiplier * d1` and a two-prime certificate for `(0, d)`.
pub fn forge_nf_rank1(
    field: &str,
    d1: &str,
    multiplier: Option<&BigInt>,
    primes: Option<&[PrimeSpec; 2]>,
    opts: &ForgeOptions,
) -> Result<TheoremInstance, ForgeError> {
    let k = NumberField::parse(field, opts.prime_bound)?;
    let d1e = k.parse_element(d1)?;
    if !k.generates(&d1e) {
        return Err(hyp(1, "K = Q(d1) fails: d1 lies in a proper subfield"));
    }
    with_pair(&k, primes, opts, |small, large, searched| {
        let m = multiplier_of(multiplier, searched.clone());
        let d = k.mul(&k.from_int(&m), &d1e);
        check_pair(&k, small, large, &d)?;
        let mut checks = vec![];
        if !k.generates(&d) {
            return Err(hyp(1, "K = Q(d) fails"));
        }
        checks.push(check(1, "K = Q(d)", format!("1, d, ..., d^{} are independent", k.degree() - 1)));
        let d4 = k.square(&k.square(&d));
        let disc = k.mul(&k.from_i64(16), &k.add(&k.from_i64(4), &k.mul(&k.from_i64(27), &d4)));
        if k.in_prime(&disc, small)? {
            return Err(hyp(2, format!("16(4 + 27d^4) lies in the {}", small.describe())));
        }
        checks.push(check(2, "16(4 + 27d^4) not in the small prime", format!("residue {:?} at the {}", k.reduce(&disc, small)?, small.describe())));
        if !k.in_prime(&d, large)? {
            return Err(hyp(3, format!("d is not in the {}", large.describe())));
        }
        checks.push(check(3, "d in the large prime", format!("d reduces to 0 at the {}", large.describe())));
        let e = EllCurve::new(k.clone(), k.one(), k.square(&d))?;
        let p = e.point(k.zero(), d.clone())?;
        let cert = nontorsion_two_prime(&e, &p, small, large, opts.count_bound)?;
        let (fd, cd) = elliptic_desc(&e);
        let request = Request::NfRank1 {
            field: field.to_string(),
            d1: d1.to_string(),
            multiplier: Some(m.to_string()),
            primes: Some([small.spec(), large.spec()]),
        };
        let mut inst = TheoremInstance::new("th2.1", request, fd, cd, opts);
        inst.points.push(affine_entry("P", &p));
        let hb = inst.attach(Certificate::Hypotheses { checks });
        let cb = inst.attach(Certificate::EllipticInfiniteOrder { point: "P".into(), cert });
        inst.certify(format!("d = {} satisfies hypotheses (1)-(3)", k.render(&d)), &[&hb]);
        inst.certify("P = (0, d) has infinite order in E(K)", &[&hb, &cb]);
        inst.certify("rank E(K) >= 1", &[&cb]);
        inst.certify("P is not defined over a proper subfield of K", &[&hb]);
        Ok(inst)
    })
}

/// `y^2 = x^3 - beta^2 x + d^2` over `K` with certificates for `(0, d)` and `(beta, d)`.
pub fn forge_nf_rank2(
    field: &str,
    d1: &str,
    beta: &str,
    multiplier: Option<&BigInt>,
    primes: Option<&[PrimeSpec; 2]>,
    opts: &ForgeOptions,
) -> Result<TheoremInstance, ForgeError> {
    let k = NumberField::parse(field, opts.prime_bound)?;
    let d1e = k.parse_element(d1)?;
    let b = k.parse_element(beta)?;
    if k.is_zero(&b) {
        return Err(ForgeError::Invalid("beta must be nonzero: the family degenerates".into()));
    }
    if !k.generates(&d1e) || !k.generates(&b) {
        return Err(hyp(1, "K = Q(d1) = Q(beta) fails"));
    }
    with_pair(&k, primes, opts, |small, large, searched| {
        let m = multiplier_of(multiplier, searched.clone());
        let d = k.mul(&k.from_int(&m), &d1e);
        check_pair(&k, small, large, &d)?;
        for pr in [small, large] {
            if !k.is_integral_at(&b, pr.p) {
                return Err(ForgeError::Invalid(format!("beta is not integral at the {}", pr.describe())));
            }
        }
        let mut checks = vec![];
        if !k.generates(&d) {
            return Err(hyp(1, "K = Q(d) fails"));
        }
        checks.push(check(1, "K = Q(d) = Q(beta)", "both generate K".into()));
        let b2 = k.square(&b);
        let b6 = k.mul(&b2, &k.square(&b2));
        let d4 = k.square(&k.square(&d));
        let disc = k.mul(&k.from_i64(16), &k.sub(&k.mul(&k.from_i64(27), &d4), &k.mul(&k.from_i64(4), &b6)));
        if k.in_prime(&disc, small)? {
            return Err(hyp(2, format!("16(-4beta^6 + 27d^4) lies in the {}", small.describe())));
        }
        checks.push(check(2, "16(-4beta^6 + 27d^4) not in the small prime", format!("residue {:?}", k.reduce(&disc, small)?)));
        if !k.in_prime(&d, large)? {
            return Err(hyp(3, format!("d is not in the {}", large.describe())));
        }
        checks.push(check(3, "d in the large prime", format!("d reduces to 0 at the {}", large.describe())));
        if k.in_prime(&b, small)? {
            return Err(hyp(4, format!("beta lies in the {}", small.describe())));
        }
        checks.push(check(4, "beta not in the small prime", format!("residue {:?}", k.reduce(&b, small)?)));
        if k.in_prime(&b, large)? {
            return Err(hyp(5, format!("beta lies in the {}", large.describe())));
        }
        checks.push(check(5, "beta not in the large prime", format!("residue {:?}", k.reduce(&b, large)?)));
        let e = EllCurve::new(k.clone(), k.neg(&b2), k.square(&d))?;
        let p = e.point(k.zero(), d.clone())?;
        let q = e.point(b.clone(), d.clone())?;
        let cp = nontorsion_two_prime(&e, &p, small, large, opts.count_bound)?;
        let cq = nontorsion_two_prime(&e, &q, small, large, opts.count_bound)?;
        let (fd, cd) = elliptic_desc(&e);
        let request = Request::NfRank2 {
            field: field.to_string(),
            d1: d1.to_string(),
            beta: beta.to_string(),
            multiplier: Some(m.to_string()),
            primes: Some([small.spec(), large.spec()]),
        };
        let mut inst = TheoremInstance::new("th2.3", request, fd, cd, opts);
        inst.points.push(affine_entry("P", &p));
        inst.points.push(affine_entry("Q", &q));
        let hb = inst.attach(Certificate::Hypotheses { checks });
        let pb = inst.attach(Certificate::EllipticInfiniteOrder { point: "P".into(), cert: cp });
        let qb = inst.attach(Certificate::EllipticInfiniteOrder { point: "Q".into(), cert: cq });
        inst.certify(format!("d = {}, beta = {} satisfy hypotheses (1)-(5)", k.render(&d), k.render(&b)), &[&hb]);
        inst.certify("P = (0, d) has infinite order in E(K)", &[&pb]);
        inst.certify("Q = (beta, d) has infinite order in E(K)", &[&qb]);
        inst.certify("P and Q are not defined over a proper subfield of K", &[&hb]);
        inst.unresolved.push("P and Q are linearly independent: needs heights".into());
        Ok(inst)
    })
}

/// `y^2 = f(x) + d^2` for the simplest cubic `f = x^3 - a x^2 - (a + 3) x - 1`.
pub fn forge_shanks(a: &BigInt, d: &str, prime: &PrimeChoice, opts: &ForgeOptions) -> Result<TheoremInstance, ForgeError> {
    if !a.is_positive() {
        return Err(ForgeError::Invalid("a must be at least 1".into()));
    }
    let dr = parse_rat(d, "d")?;
    if dr.is_zero() {
        return Err(ForgeError::Invalid("d must be nonzero".into()));
    }
    let qr = PolyRing::new(Rationals);
    let ri = Rational::from_integer;
    let f = qr.from_coeffs(vec![ri(BigInt::from(-1)), ri(-(a + BigInt::from(3))), ri(-a.clone()), Rational::one()]);
    let g = qr.add(&f, &qr.constant(&dr * &dr));
    if !qr.is_separable(&g) {
        return Err(ForgeError::Invalid("g = f + d^2 has a repeated root".into()));
    }
    let k = NumberField::certified(f.clone(), opts.prime_bound)?;
    let disc = qr.discriminant(&f);
    let root: BigInt = a * a + 3 * a + 9;
    if disc != ri(&root * &root) {
        return Err(ForgeError::Verification("disc(f) is not (a^2 + 3a + 9)^2".into()));
    }
    let galois = certify_an(&f, opts.prime_bound)?
        .ok_or_else(|| ForgeError::Verification("cyclic cubic not certified".into()))?;

    let rho = k.theta();
    let next = |r: &NFElement| k.neg(&k.inv(&k.add(&k.one(), r)).expect("1 + rho is a unit"));
    let rho2 = next(&rho);
    let rho3 = next(&rho2);
    let kr = PolyRing::new(k.clone());
    let fk = map_poly::<Rationals, NumberField>(&kr, &f, |c| k.from_rational(c.clone()));
    for (name, r) in [("rho2", &rho2), ("rho3", &rho3)] {
        if !k.is_zero(&kr.eval(&fk, r)) {
            return Err(ForgeError::Verification(format!("f({name}) != 0")));
        }
    }
    if next(&rho3) != rho || rho2 == rho || rho3 == rho || rho2 == rho3 {
        return Err(ForgeError::Verification("rho -> -1/(1 + rho) is not a 3-cycle on the roots".into()));
    }
    let norms: Vec<Rational> = [&rho, &rho2, &rho3].iter().map(|r| k.norm(r)).collect();
    if norms.iter().any(|n| !n.is_one()) {
        return Err(ForgeError::Verification("a root has norm != 1".into()));
    }

    let dk = k.from_rational(dr.clone());
    let e = EllCurve::general(k.clone(), k.from_int(&-a), k.from_int(&-(a + BigInt::from(3))), k.sub(&k.square(&dk), &k.one()))?;
    let p = e.point(rho.clone(), dk.clone())?;
    let q = e.point(rho2.clone(), dk.clone())?;
    let r = e.point(rho3.clone(), dk.clone())?;
    if !collinear_sum_zero(&e, &p, &q, &r)? {
        return Err(ForgeError::Verification("P + Q + R != 0".into()));
    }
    let p1 = e.add(&p, &q);
    let p2 = e.add(&p, &e.neg(&q));

    let hc = HypCurve::simple(k.clone(), map_poly::<Rationals, NumberField>(&kr, &g, |c| k.from_rational(c.clone())))?;
    let (prime, certs) = shanks_prime(&k, &hc, &[&rho, &rho2, &rho3], &dk, &dr, prime, opts)?;

    let (fd, cd) = elliptic_desc(&e);
    let request = Request::Shanks { a: a.to_string(), d: rat_str(&dr), prime: prime.clone() };
    let theorem = if certs.is_some() { "th3.9" } else { "shanks" };
    let mut inst = TheoremInstance::new(theorem, request, fd, cd, opts);
    for (label, pt) in [("P", &p), ("Q", &q), ("R", &r)] {
        inst.points.push(affine_entry(label, pt));
        inst.points.push(affine_entry(format!("-{label}"), &e.neg(pt)));
    }
    for (label, pt) in [("P1", &p1), ("P2", &p2)] {
        if !pt.is_infinity() {
            inst.points.push(affine_entry(label, pt));
        }
    }
    let gb = inst.attach(Certificate::Galois { cert: galois });
    let rb = inst.attach(Certificate::RootRelations {
        relations: vec![
            format!("rho2 = -1/(1 + rho) = {}", k.render(&rho2)),
            format!("rho3 = -1/(1 + rho2) = {}", k.render(&rho3)),
            "-1/(1 + rho3) = rho".into(),
        ],
        norms: norms.iter().map(rat_str).collect(),
        disc: rat_str(&disc),
        disc_root: root.to_string(),
    });
    let lb = inst.attach(Certificate::Collinear { points: vec!["P".into(), "Q".into(), "R".into()], line: format!("y = {}", rat_str(&dr)) });
    inst.certify(format!("disc(f) = ({root})^2 and Gal(L_f/Q) = A3 = Z/3"), &[&gb, &rb]);
    inst.certify("rho2 = -1/(1 + rho) and rho3 = -1/(1 + rho2) are the other roots of f", &[&rb]);
    inst.certify("rho, rho2, rho3 are units of norm 1", &[&rb]);
    inst.certify("P + Q + R = 0", &[&lb]);
    match certs {
        Some(certs) => {
            let mut bases = Vec::new();
            for (label, cert) in ["P", "Q", "R"].into_iter().zip(certs) {
                bases.push(inst.attach(Certificate::JacobianInfiniteOrder { point: label.into(), cert }));
            }
            let refs: Vec<&str> = bases.iter().map(String::as_str).collect();
            inst.certify("P, Q and R have infinite order in E(L_f)", &refs);
            let mut basis: Vec<&str> = vec![&bases[0], &lb, &rb];
            let argument = "rho -> rho2 generates Gal(L_f/Q) and fixes d, so it permutes P -> Q -> R; \
                            with P + Q + R = 0 their rational span is a quotient of the irreducible \
                            2-dimensional rational representation of Z/3, and P is non-torsion";
            basis.push(argument);
            inst.conclude("rank E(L_f) >= 2", ConclusionStatus::Argued, &basis);
        }
        None => inst.unresolved.push(
            "P, Q, R have infinite order: no odd unramified prime over a divisor of d reduces them to 2-torsion".into(),
        ),
    }
    inst.conjectures.push("P1 = P + Q and P2 = P - Q are orthogonal for the canonical height".into());
    Ok(inst)
}

type ShanksCerts = Option<Vec<crate::hyperelliptic::HInfOrderCert>>;

fn shanks_prime(
    k: &NumberField,
    c: &HypCurve<NumberField>,
    roots: &[&NFElement],
    d: &NFElement,
    dr: &Rational,
    choice: &PrimeChoice,
    opts: &ForgeOptions,
) -> Result<(PrimeChoice, ShanksCerts), ForgeError> {
    let all = |pr: &UnramifiedPrime| -> Result<Vec<_>, HypError> {
        roots.iter().map(|x| nontorsion_weierstrass(c, (x, d), pr)).collect()
    };
    match choice {
        PrimeChoice::Pinned { prime } => {
            let pr = k.prime_from_spec(prime)?;
            Ok((choice.clone(), Some(all(&pr)?)))
        }
        PrimeChoice::NotFound => Ok((PrimeChoice::NotFound, None)),
        PrimeChoice::Search => {
            for p in odd_prime_divisors(dr, opts.prime_bound) {
                for pr in k.primes_above(p).unwrap_or_default() {
                    if let Ok(certs) = all(&pr) {
                        return Ok((PrimeChoice::Pinned { prime: pr.spec() }, Some(certs)));
                    }
                }
            }
            Ok((PrimeChoice::NotFound, None))
        }
    }
}

/// Odd primes up to `bound` dividing the numerator of `d`, ascending.
pub(super) fn odd_prime_divisors(d: &Rational, bound: u64) -> Vec<u64> {
    let n = d.numer().abs();
    match n.to_u64() {
        Some(n) => factor_u64(n).into_iter().map(|(p, _)| p).filter(|&p| p > 2 && p <= bound).collect(),
        None => primes_up_to(bound)
            .into_iter()
            .filter(|&p| p > 2 && (&n % p).is_zero())
            .collect(),
    }
}
