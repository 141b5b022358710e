//! Number fields `K = Q[t]/(m(t))`, their unramified primes in the order
//! `Z[t]`, and reduction into residue fields.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactfield::{
    parse_poly, reduce_poly_mod_p, Field, FieldError, FiniteField, GaloisField, Poly, PolyRing,
    PrimeField, Rational, Rationals, DEFAULT_SEED,
};
use crate::galois::{irreducible_over_q, GaloisError, Irreducibility, IrreducibilityCert};
use crate::schema::{poly_from_strings, poly_to_strings, rat_str, rats_from_strings, rats_to_strings};

/// Variable name used when rendering and parsing elements.
pub const VAR: char = 't';

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NfError {
    #[error("minimal polynomial must be monic with integer coefficients")]
    NotMonic,
    #[error("minimal polynomial is reducible: {0}")]
    Reducible(String),
    #[error("irreducibility could not be certified")]
    Inconclusive,
    #[error("irreducibility certificate is for a different polynomial")]
    CertificateMismatch,
    #[error("p = 2 is excluded")]
    EvenPrime,
    #[error("{0} divides disc(m): ramified or index obstruction, pick another prime")]
    Ramified(u64),
    #[error("element is not integral at {0}")]
    NotIntegral(u64),
    #[error("element has {got} coordinates, field degree is {want}")]
    WrongLength { got: usize, want: usize },
    #[error("no prime over {p} with t = {root}")]
    NoSuchPrime { p: u64, root: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

/// An element `c_0 + c_1 t + ... + c_{n-1} t^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NFElement {
    coeffs: Vec<Rational>,
}

impl NFElement {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `Some(c)` when the element is the rational `c`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    pub fn to_strings(&self) -> Vec<String> {
        rats_to_strings(&self.coeffs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    minpoly: Poly<Rational>,
    degree: usize,
    disc: Rational,
    cert: IrreducibilityCert,
}

/// Serialized form of a number field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberFieldSpec {
    pub minpoly: Vec<String>,
    pub disc: String,
    /// Re-verified on load; when absent, irreducibility is certified afresh.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducibility: Option<IrreducibilityCert>,
}

impl NumberField {
    /// Builds `K` from a monic integer polynomial and a certificate of its irreducibility.
    pub fn new(minpoly: Poly<Rational>, cert: IrreducibilityCert) -> Result<Self, NfError> {
        if cert.poly != poly_to_strings(&minpoly) {
            return Err(NfError::CertificateMismatch);
        }
        cert.verify()?;
        let ring = PolyRing::new(Rationals);
        let degree = minpoly.degree().ok_or(NfError::NotMonic)?;
        let disc = ring.discriminant(&minpoly);
        Ok(NumberField { minpoly, degree, disc, cert })
    }

    /// Certifies irreducibility with primes up to `prime_bound`, then builds `K`.
    pub fn certified(minpoly: Poly<Rational>, prime_bound: u64) -> Result<Self, NfError> {
        match irreducible_over_q(&minpoly, prime_bound) {
            Ok(Irreducibility::Irreducible(cert)) => Self::new(minpoly, cert),
            Ok(Irreducibility::Reducible(w)) => Err(NfError::Reducible(format!("{w:?}"))),
            Ok(Irreducibility::Inconclusive { .. }) => Err(NfError::Inconclusive),
            Err(GaloisError::NotMonicInteger) => Err(NfError::NotMonic),
            Err(e) => Err(e.into()),
        }
    }

    pub fn parse(minpoly: &str, prime_bound: u64) -> Result<Self, NfError> {
        Self::certified(parse_poly(minpoly, VAR).or_else(|_| parse_poly(minpoly, 'x'))?, prime_bound)
    }

    /// `Q` as the degree-one field `Q[t]/(t)`.
    pub fn rationals() -> Self {
        Self::certified(PolyRing::new(Rationals).x(), 2).expect("t is irreducible")
    }

    pub fn from_spec(spec: &NumberFieldSpec, prime_bound: u64) -> Result<Self, NfError> {
        let m = poly_from_strings(&spec.minpoly)?;
        let k = match &spec.irreducibility {
            Some(cert) => Self::new(m, cert.clone())?,
            None => Self::certified(m, prime_bound)?,
        };
        if rat_str(&k.disc) != spec.disc {
            return Err(NfError::Field(FieldError::Parse(format!("discriminant {}", spec.disc))));
        }
        Ok(k)
    }

    pub fn spec(&self) -> NumberFieldSpec {
        NumberFieldSpec {
            minpoly: poly_to_strings(&self.minpoly),
            disc: rat_str(&self.disc),
            irreducibility: Some(self.cert.clone()),
        }
    }

    pub fn minpoly(&self) -> &Poly<Rational> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn disc(&self) -> &Rational {
        &self.disc
    }

    pub fn irreducibility(&self) -> &IrreducibilityCert {
        &self.cert
    }

    fn ring(&self) -> PolyRing<Rationals> {
        PolyRing::new(Rationals)
    }

    /// The generator `t`.
    pub fn theta(&self) -> NFElement {
        self.from_poly(&self.ring().x())
    }

    pub fn from_rational(&self, c: Rational) -> NFElement {
        self.from_poly(&self.ring().constant(c))
    }

    /// Reduces an arbitrary polynomial in `t` modulo `m`.
    pub fn from_poly(&self, f: &Poly<Rational>) -> NFElement {
        let r = self.ring().rem(f, &self.minpoly);
        let mut coeffs = r.into_coeffs();
        coeffs.resize(self.degree, Rational::zero());
        NFElement { coeffs }
    }

    pub fn to_poly(&self, a: &NFElement) -> Poly<Rational> {
        self.ring().from_coeffs(a.coeffs.clone())
    }

    pub fn element(&self, coeffs: Vec<Rational>) -> Result<NFElement, NfError> {
        if coeffs.len() != self.degree {
            return Err(NfError::WrongLength { got: coeffs.len(), want: self.degree });
        }
        Ok(NFElement { coeffs })
    }

    pub fn element_from_strings(&self, v: &[String]) -> Result<NFElement, NfError> {
        self.element(rats_from_strings(v)?)
    }

    /// Parses an expression in `t`, e.g. `98+t` or `5905-265t`.
    pub fn parse_element(&self, text: &str) -> Result<NFElement, NfError> {
        Ok(self.from_poly(&parse_poly(text, VAR)?))
    }

    /// `N_{K/Q}(a) = res(m, a)`, the product of the conjugates of `a`.
    pub fn norm(&self, a: &NFElement) -> Rational {
        let ring = self.ring();
        let ap = self.to_poly(a);
        if ap.is_zero() {
            return Rational::zero();
        }
        ring.resultant(&self.minpoly, &ap)
    }

    /// `true` iff `1, a, ..., a^{n-1}` are linearly independent, i.e. `K = Q(a)`.
    pub fn generates(&self, a: &NFElement) -> bool {
        let mut rows = Vec::with_capacity(self.degree);
        let mut power = self.one();
        for _ in 0..self.degree {
            rows.push(power.coeffs.clone());
            power = self.mul(&power, a);
        }
        rank(rows) == self.degree
    }

    /// One unramified prime per irreducible factor of `m mod p`.
    pub fn primes_above(&self, p: u64) -> Result<Vec<UnramifiedPrime>, NfError> {
        if p == 2 {
            return Err(NfError::EvenPrime);
        }
        let fp = PrimeField::new(p)?;
        if (self.disc.numer() % BigInt::from(p)).is_zero() {
            return Err(NfError::Ramified(p));
        }
        let ring = PolyRing::new(fp);
        let mp = reduce_poly_mod_p(&self.minpoly, &ring)?;
        let mut primes = ring
            .factor_squarefree(&mp, DEFAULT_SEED)?
            .into_iter()
            .map(|h| UnramifiedPrime::build(p, h.into_coeffs()))
            .collect::<Result<Vec<_>, _>>()?;
        primes.sort_by_key(|q| (q.residue_degree(), q.root(), q.h.clone()));
        Ok(primes)
    }

    /// The degree-one prime over `p` at which `t` reduces to `root`.
    pub fn prime_with_root(&self, p: u64, root: u64) -> Result<UnramifiedPrime, NfError> {
        self.primes_above(p)?
            .into_iter()
            .find(|q| q.root() == Some(root % p))
            .ok_or(NfError::NoSuchPrime { p, root })
    }

    /// Rebuilds a prime from `{p, h}`, checking that `h` divides `m mod p`.
    pub fn prime_from_spec(&self, spec: &PrimeSpec) -> Result<UnramifiedPrime, NfError> {
        let want = UnramifiedPrime::build(spec.p, spec.h.clone())?;
        self.primes_above(spec.p)?
            .into_iter()
            .find(|q| *q == want)
            .ok_or(NfError::NoSuchPrime { p: spec.p, root: want.root().unwrap_or(0) })
    }

    pub fn is_integral_at(&self, a: &NFElement, p: u64) -> bool {
        let pb = BigInt::from(p);
        a.coeffs.iter().all(|c| !c.denom().is_multiple_of(&pb))
    }

    /// Image of `a` in the residue field of `prime`: `t` maps to the class of `x`.
    pub fn reduce(&self, a: &NFElement, prime: &UnramifiedPrime) -> Result<Vec<u64>, NfError> {
        if !self.is_integral_at(a, prime.p) {
            return Err(NfError::NotIntegral(prime.p));
        }
        let ring = PolyRing::new(*prime.residue.base());
        let ap = reduce_poly_mod_p(&self.to_poly(a), &ring)?;
        Ok(prime.residue.from_poly(&ap))
    }

    /// `true` iff `a` lies in `prime`.
    pub fn in_prime(&self, a: &NFElement, prime: &UnramifiedPrime) -> Result<bool, NfError> {
        Ok(prime.residue.is_zero(&self.reduce(a, prime)?))
    }
}

/// Rank over Q by fraction-free row reduction.
fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &rows[r][c];
            for j in c..cols {
                let sub = &factor * &rows[r][j];
                rows[i][j] -= sub;
            }
        }
        r += 1;
    }
    r
}

impl Field for NumberField {
    type Elem = NFElement;

    fn zero(&self) -> NFElement {
        NFElement { coeffs: vec![Rational::zero(); self.degree] }
    }
    fn one(&self) -> NFElement {
        let mut coeffs = vec![Rational::zero(); self.degree];
        coeffs[0] = Rational::one();
        NFElement { coeffs }
    }
    fn add(&self, a: &NFElement, b: &NFElement) -> NFElement {
        NFElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }
    fn sub(&self, a: &NFElement, b: &NFElement) -> NFElement {
        NFElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }
    fn neg(&self, a: &NFElement) -> NFElement {
        NFElement { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }
    fn mul(&self, a: &NFElement, b: &NFElement) -> NFElement {
        let ring = self.ring();
        self.from_poly(&ring.mul(&self.to_poly(a), &self.to_poly(b)))
    }
    fn inv(&self, a: &NFElement) -> Option<NFElement> {
        let ap = self.to_poly(a);
        if ap.is_zero() {
            return None;
        }
        self.ring().inv_mod(&ap, &self.minpoly).map(|i| self.from_poly(&i))
    }
    fn from_int(&self, n: &BigInt) -> NFElement {
        self.from_rational(Rational::from_integer(n.clone()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn render(&self, a: &NFElement) -> String {
        self.ring().render(&self.to_poly(a), &VAR.to_string())
    }
}

/// A prime `(p, h(t))` of `Z[t]` with `p` odd, `p` prime to `disc(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnramifiedPrime {
    pub p: u64,
    /// Monic irreducible factor of `m mod p`, constant term first.
    pub h: Vec<u64>,
    pub residue: GaloisField,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSpec {
    pub p: u64,
    pub h: Vec<u64>,
}

impl UnramifiedPrime {
    fn build(p: u64, h: Vec<u64>) -> Result<Self, NfError> {
        let residue = GaloisField::with_modulus(p, &h)?;
        Ok(UnramifiedPrime { p, h: residue.modulus().to_vec(), residue })
    }

    pub fn residue_degree(&self) -> usize {
        self.h.len() - 1
    }

    /// Size of the residue field.
    pub fn norm(&self) -> u64 {
        self.residue.order()
    }

    /// For a degree-one prime, the residue of `t`.
    pub fn root(&self) -> Option<u64> {
        (self.residue_degree() == 1).then(|| (self.p - self.h[0]) % self.p)
    }

    pub fn spec(&self) -> PrimeSpec {
        PrimeSpec { p: self.p, h: self.h.clone() }
    }

    /// Human-readable description, e.g. `prime over 67 with t = 36`.
    pub fn describe(&self) -> String {
        match self.root() {
            Some(r) => format!("prime over {} with t = {}", self.p, r),
            None => {
                let ring = PolyRing::new(*self.residue.base());
                format!("prime over {} with h = {}", self.p, ring.render(&ring.from_coeffs(self.h.clone()), "t"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, ratio};
    use proptest::prelude::*;

    fn k647() -> NumberField {
        NumberField::parse("t^2+647", 1000).unwrap()
    }

    fn k94546() -> NumberField {
        NumberField::parse("t^2-94546", 1000).unwrap()
    }

    fn shanks(a: i64) -> NumberField {
        NumberField::parse(&format!("t^3-{a}t^2-{}t-1", a + 3), 1000).unwrap()
    }

    #[test]
    fn creation() {
        let k = k647();
        assert_eq!(k.degree(), 2);
        assert_eq!(*k.disc(), rat(-4 * 647));
        let q = NumberField::parse("t-1", 10).unwrap();
        assert_eq!(q.degree(), 1);
        assert!(matches!(NumberField::parse("t^2-1", 100), Err(NfError::Reducible(_))));
        assert!(matches!(NumberField::parse("2t^2-1", 100), Err(NfError::NotMonic)));
        assert!(matches!(NumberField::parse("t^4-10t^2+1", 200), Err(NfError::Inconclusive)));
    }

    #[test]
    fn certificate_must_match() {
        let other = NumberField::parse("t^2+5", 100).unwrap().irreducibility().clone();
        let m = parse_poly("t^2+647", 't').unwrap();
        assert_eq!(NumberField::new(m, other), Err(NfError::CertificateMismatch));
    }

    #[test]
    fn primes_of_q_sqrt_minus_647() {
        let k = k647();
        let roots: Vec<_> = k.primes_above(29).unwrap().iter().map(|q| q.root().unwrap()).collect();
        assert_eq!(roots, vec![7, 22]);
        let above67 = k.primes_above(67).unwrap();
        assert_eq!(above67.len(), 2);
        assert!(above67.iter().any(|q| q.root() == Some(36)));
        assert_eq!(k.primes_above(2), Err(NfError::EvenPrime));
        assert_eq!(k.primes_above(647), Err(NfError::Ramified(647)));
    }

    #[test]
    fn septic_has_no_degree_one_prime_over_11() {
        let k = NumberField::parse("t^7-7t+3", 1000).unwrap();
        let primes = k.primes_above(11).unwrap();
        assert!(primes.iter().all(|q| q.residue_degree() > 1));
        assert_eq!(primes.iter().map(|q| q.residue_degree()).sum::<usize>(), 7);
    }

    #[test]
    fn published_elements_in_primes() {
        let k = k647();
        let q = k.prime_with_root(67, 36).unwrap();
        let d = k.parse_element("98+t").unwrap();
        assert_eq!(k.reduce(&d, &q).unwrap(), vec![0]);
        assert!(k.in_prime(&d, &q).unwrap());

        let k = k94546();
        let q = k.prime_with_root(67, 64).unwrap();
        let d = k.parse_element("5905-265t").unwrap();
        assert!(k.in_prime(&d, &q).unwrap());
        let beta = k.parse_element("-104-195t").unwrap();
        assert!(!k.in_prime(&beta, &q).unwrap());
        assert!(k.in_prime(&k.zero(), &q).unwrap());
        let p29 = k.prime_with_root(29, 21).unwrap();
        assert_eq!(p29.describe(), "prime over 29 with t = 21");
    }

    #[test]
    fn non_integral_elements_rejected() {
        let k = k647();
        let q = k.prime_with_root(29, 7).unwrap();
        let a = k.element(vec![ratio(1, 29), rat(0)]).unwrap();
        assert_eq!(k.reduce(&a, &q), Err(NfError::NotIntegral(29)));
        let b = k.element(vec![ratio(1, 2), rat(1)]).unwrap();
        assert!(k.reduce(&b, &q).is_ok());
    }

    #[test]
    fn norms() {
        let k = k647();
        assert_eq!(k.norm(&k.theta()), rat(647));
        assert_eq!(k.norm(&k.from_i64(5)), rat(25));
        let s = shanks(50);
        assert_eq!(s.norm(&s.theta()), rat(1));
        assert_eq!(s.norm(&s.from_i64(-3)), rat(-27));
    }

    #[test]
    fn arithmetic() {
        let k = k647();
        let t = k.theta();
        assert_eq!(k.mul(&t, &t), k.from_i64(-647));
        let s = shanks(50);
        let rho = s.theta();
        let one_plus = s.add(&s.one(), &rho);
        let rho2 = s.neg(&s.inv(&one_plus).unwrap());
        assert_eq!(s.mul(&one_plus, &s.neg(&rho2)), s.one());
        // rho2 = -1/(1 + rho) is again a root of the cubic
        let f = s.minpoly().clone();
        let ring = PolyRing::new(s.clone());
        let f_over_k = ring.from_coeffs(f.coeffs().iter().map(|c| s.from_rational(c.clone())).collect());
        assert!(s.is_zero(&ring.eval(&f_over_k, &rho2)));
        assert!(s.inv(&s.zero()).is_none());
    }

    #[test]
    fn generators() {
        let k = k647();
        assert!(k.generates(&k.parse_element("98+t").unwrap()));
        assert!(!k.generates(&k.from_i64(98)));
        let s = shanks(50);
        assert!(s.generates(&s.theta()));
    }

    #[test]
    fn degree_one_field_matches_integers() {
        let q = NumberField::rationals();
        let p7 = &q.primes_above(7).unwrap()[0];
        for n in -30..30 {
            assert_eq!(q.reduce(&q.from_i64(n), p7).unwrap(), vec![n.rem_euclid(7) as u64]);
        }
    }

    fn element_strategy(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
        proptest::collection::vec((-1000i64..1000, prop_oneof![Just(1i64), Just(2), Just(3), Just(4)]), n)
    }

    proptest! {
        #[test]
        fn residue_degrees_sum_to_degree(idx in 2usize..60) {
            let p = crate::exactfield::primes_up_to(400)[idx];
            for k in [k647(), shanks(36), NumberField::parse("t^7-7t+3", 500).unwrap()] {
                match k.primes_above(p) {
                    Ok(ps) => prop_assert_eq!(ps.iter().map(|q| q.residue_degree()).sum::<usize>(), k.degree()),
                    Err(NfError::Ramified(_)) => {}
                    Err(e) => prop_assert!(false, "{e}"),
                }
            }
        }

        #[test]
        fn reduction_is_a_ring_morphism(a in element_strategy(3), b in element_strategy(3)) {
            let k = shanks(50);
            let mk = |v: &Vec<(i64, i64)>| k.element(v.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap();
            let (a, b) = (mk(&a), mk(&b));
            for p in [5u64, 11, 37] {
                for q in k.primes_above(p).unwrap() {
                    let f = &q.residue;
                    let ra = k.reduce(&a, &q).unwrap();
                    let rb = k.reduce(&b, &q).unwrap();
                    prop_assert_eq!(k.reduce(&k.add(&a, &b), &q).unwrap(), f.add(&ra, &rb));
                    prop_assert_eq!(k.reduce(&k.mul(&a, &b), &q).unwrap(), f.mul(&ra, &rb));
                }
            }
        }

        #[test]
        fn norm_is_multiplicative(a in element_strategy(3), b in element_strategy(3)) {
            let k = shanks(36);
            let mk = |v: &Vec<(i64, i64)>| k.element(v.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap();
            let (a, b) = (mk(&a), mk(&b));
            prop_assert_eq!(k.norm(&k.mul(&a, &b)), k.norm(&a) * k.norm(&b));
        }

        #[test]
        fn inverse_round_trip(a in element_strategy(2)) {
            let k = k647();
            let a = k.element(a.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap();
            prop_assume!(!k.is_zero(&a));
            prop_assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
        }
    }
}
