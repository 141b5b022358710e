//! `F_q(t)`, polynomials in `U` over it, and the quotient rings `F_q(t)[U]/(f)`
//! in which a single root of `f` lives.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactfield::{parse_poly, Field, FieldError, FiniteField, Poly, PolyRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfError {
    #[error("m must be at least 2")]
    SmallM,
    #[error("degree (q^m - 1)/(q - 1) overflows")]
    TooLarge,
    #[error("modulus must be monic of positive degree")]
    NotMonic,
    #[error("modulus is not separable")]
    Inseparable,
    #[error("curve is singular")]
    Singular,
    #[error("g - f must be constant in U")]
    ModulusMismatch,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("bad rational function: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<E> {
    num: Poly<E>,
    den: Poly<E>,
}

impl<E> RatFunc<E> {
    pub fn num(&self) -> &Poly<E> {
        &self.num
    }

    pub fn den(&self) -> &Poly<E> {
        &self.den
    }
}

/// Serialized form: coefficient indices in the base field, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncSpec {
    pub num_coeffs: Vec<u64>,
    pub den_coeffs: Vec<u64>,
}

/// The rational function field `F(t)` over a finite field `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFuncField<F: FiniteField> {
    base: F,
    ring: PolyRing<F>,
}

impl<F: FiniteField> RatFuncField<F> {
    pub fn new(base: F) -> Self {
        RatFuncField { ring: PolyRing::new(base.clone()), base }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    /// `F[t]`.
    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn make(&self, num: Poly<F::Elem>, den: Poly<F::Elem>) -> Result<RatFunc<F::Elem>, FfError> {
        if den.is_zero() {
            return Err(FfError::ZeroDenominator);
        }
        Ok(self.normalize(num, den))
    }

    fn normalize(&self, num: Poly<F::Elem>, den: Poly<F::Elem>) -> RatFunc<F::Elem> {
        let r = &self.ring;
        if num.is_zero() {
            return RatFunc { num, den: r.one() };
        }
        let g = r.gcd(&num, &den);
        let (num, den) = (r.div_exact(&num, &g).unwrap(), r.div_exact(&den, &g).unwrap());
        let c = self.base.inv(den.lead().unwrap()).unwrap();
        RatFunc { num: r.scale(&c, &num), den: r.scale(&c, &den) }
    }

    pub fn from_poly(&self, p: Poly<F::Elem>) -> RatFunc<F::Elem> {
        RatFunc { num: p, den: self.ring.one() }
    }

    pub fn from_base(&self, c: F::Elem) -> RatFunc<F::Elem> {
        self.from_poly(self.ring.constant(c))
    }

    /// The variable `t`.
    pub fn t(&self) -> RatFunc<F::Elem> {
        self.from_poly(self.ring.x())
    }

    /// `a(t)` or `a(t)/b(t)` with integer coefficients, e.g. `t^2 + 1` or `(t)/(t + 1)`.
    pub fn parse(&self, text: &str) -> Result<RatFunc<F::Elem>, FfError> {
        let text = text.trim();
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in text.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => split = Some(i),
                _ => {}
            }
        }
        let side = |s: &str| -> Result<Poly<F::Elem>, FfError> {
            let s = s.trim();
            let s = s.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(s);
            let q = parse_poly(s, 't').map_err(|e| FfError::Parse(e.to_string()))?;
            let coeffs = q
                .coeffs()
                .iter()
                .map(|c| {
                    self.base
                        .div(&self.base.from_int(c.numer()), &self.base.from_int(c.denom()))
                        .ok_or_else(|| FfError::Parse(format!("denominator of {c} vanishes")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(self.ring.from_coeffs(coeffs))
        };
        match split {
            Some(i) => self.make(side(&text[..i])?, side(&text[i + 1..])?),
            None => Ok(self.from_poly(side(text)?)),
        }
    }

    pub fn spec(&self, a: &RatFunc<F::Elem>) -> RatFuncSpec {
        let idx = |p: &Poly<F::Elem>| p.coeffs().iter().map(|c| self.base.index_of(c)).collect();
        RatFuncSpec { num_coeffs: idx(&a.num), den_coeffs: idx(&a.den) }
    }

    pub fn from_spec(&self, s: &RatFuncSpec) -> Result<RatFunc<F::Elem>, FfError> {
        let q = self.base.order();
        let poly = |v: &[u64]| -> Result<Poly<F::Elem>, FfError> {
            if v.iter().any(|&i| i >= q) {
                return Err(FfError::Parse("coefficient index out of range".into()));
            }
            Ok(self.ring.from_coeffs(v.iter().map(|&i| self.base.element(i)).collect()))
        };
        let f = self.make(poly(&s.num_coeffs)?, poly(&s.den_coeffs)?)?;
        if self.spec(&f) != *s {
            return Err(FfError::Parse("rational function is not in reduced form".into()));
        }
        Ok(f)
    }
}

/// Splits at `sep` outside parentheses.
fn split_top(text: &str, sep: impl Fn(char) -> bool) -> Vec<(usize, &str)> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if depth == 0 && i > start && sep(c) => {
                parts.push((start, &text[start..i]));
                start = i;
            }
            _ => {}
        }
    }
    parts.push((start, &text[start..]));
    parts
}

impl<F: FiniteField> RatFuncField<F> {
    /// A polynomial in `U` over `F(t)`.
    ///
    /// ```text
    /// upoly  := term (('+' | '-') term)*  |  '[' ratfunc (',' ratfunc)* ']'
    /// term   := factor ('*' factor)*
    /// factor := 'U' ('^' digits)?  |  ratfunc
    /// ```
    ///
    /// e.g. `U^24 + (t^2 + 1)*U^3 + t` or `[t, 1, 0, 0, 1]`.
    pub fn parse_upoly(&self, text: &str) -> Result<Poly<RatFunc<F::Elem>>, FfError> {
        let ring = PolyRing::new(self.clone());
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(FfError::Parse(text.to_string()));
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coeffs = split_top(inner, |c| c == ',')
                .into_iter()
                .map(|(_, c)| self.parse(c.trim_start_matches(',')))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(ring.from_coeffs(coeffs));
        }
        let mut acc = ring.zero();
        for (_, term) in split_top(&s, |c| c == '+' || c == '-') {
            let (neg, body) = match term.chars().next() {
                Some('-') => (true, &term[1..]),
                Some('+') => (false, &term[1..]),
                _ => (false, term),
            };
            let mut value = ring.one();
            for (_, factor) in split_top(body, |c| c == '*') {
                let factor = factor.trim_start_matches('*');
                let part = if let Some(rest) = factor.strip_prefix('U') {
                    let e = match rest.strip_prefix('^') {
                        Some(digits) => digits.parse::<usize>().map_err(|_| FfError::Parse(factor.to_string()))?,
                        None if rest.is_empty() => 1,
                        None => return Err(FfError::Parse(factor.to_string())),
                    };
                    ring.monomial(self.one(), e)
                } else {
                    ring.constant(self.parse(factor)?)
                };
                value = ring.mul(&value, &part);
            }
            acc = if neg { ring.sub(&acc, &value) } else { ring.add(&acc, &value) };
        }
        Ok(acc)
    }
}

impl<F: FiniteField> Field for RatFuncField<F> {
    type Elem = RatFunc<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.from_poly(self.ring.zero())
    }

    fn one(&self) -> Self::Elem {
        self.from_poly(self.ring.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.ring;
        if a.den == b.den {
            return self.normalize(r.add(&a.num, &b.num), a.den.clone());
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.normalize(num, r.mul(&a.den, &b.den))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc { num: self.ring.neg(&a.num), den: a.den.clone() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.ring;
        self.normalize(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_zero() {
            return None;
        }
        Some(self.normalize(a.den.clone(), a.num.clone()))
    }

    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.from_base(self.base.from_int(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn render(&self, a: &Self::Elem) -> String {
        let show = |p: &Poly<F::Elem>| match p.degree() {
            None | Some(0) => self.base.render(&self.ring.coeff(p, 0)),
            _ => self.ring.render(p, "t"),
        };
        if self.ring.is_one(&a.den) {
            show(&a.num)
        } else {
            format!("({})/({})", show(&a.num), show(&a.den))
        }
    }
}

/// `U^N + U + t` with `N = (q^m - 1)/(q - 1)` over `F_q(t)`.
pub fn ff_trinomial<F: FiniteField>(k: &RatFuncField<F>, m: u32) -> Result<Poly<RatFunc<F::Elem>>, FfError> {
    if m < 2 {
        return Err(FfError::SmallM);
    }
    let q = k.base().order();
    let n = (0..m).try_fold(0u64, |acc, i| q.checked_pow(i).and_then(|v| acc.checked_add(v))).ok_or(FfError::TooLarge)?;
    if n > 1 << 16 {
        return Err(FfError::TooLarge);
    }
    let r = PolyRing::new(k.clone());
    Ok(r.add(&r.monomial(k.one(), n as usize), &r.from_coeffs(vec![k.t(), k.one()])))
}

/// `gcd(g, g') = 1` over `F_q(t)`.
pub fn ff_separable<F: FiniteField>(k: &RatFuncField<F>, g: &Poly<RatFunc<F::Elem>>) -> bool {
    let r = PolyRing::new(k.clone());
    g.degree().unwrap_or(0) > 0 && r.is_separable(g)
}

/// `F_q(t)[U]/(f)` for monic separable `f`.
#[derive(Clone, Debug)]
pub struct FFQuotientRing<F: FiniteField> {
    field: RatFuncField<F>,
    ring: PolyRing<RatFuncField<F>>,
    modulus: Poly<RatFunc<F::Elem>>,
}

impl<F: FiniteField> FFQuotientRing<F> {
    pub fn new(field: RatFuncField<F>, modulus: Poly<RatFunc<F::Elem>>) -> Result<Self, FfError> {
        let ring = PolyRing::new(field.clone());
        if modulus.degree().unwrap_or(0) == 0 || !ring.is_monic(&modulus) {
            return Err(FfError::NotMonic);
        }
        if !ring.is_separable(&modulus) {
            return Err(FfError::Inseparable);
        }
        Ok(FFQuotientRing { field, ring, modulus })
    }

    pub fn field(&self) -> &RatFuncField<F> {
        &self.field
    }

    pub fn modulus(&self) -> &Poly<RatFunc<F::Elem>> {
        &self.modulus
    }

    pub fn reduce(&self, a: &Poly<RatFunc<F::Elem>>) -> Poly<RatFunc<F::Elem>> {
        self.ring.rem(a, &self.modulus)
    }

    /// The class `u` of `U`.
    pub fn root(&self) -> Poly<RatFunc<F::Elem>> {
        self.reduce(&self.ring.x())
    }

    pub fn constant(&self, c: RatFunc<F::Elem>) -> Poly<RatFunc<F::Elem>> {
        self.ring.constant(c)
    }

    pub fn add(&self, a: &Poly<RatFunc<F::Elem>>, b: &Poly<RatFunc<F::Elem>>) -> Poly<RatFunc<F::Elem>> {
        self.reduce(&self.ring.add(a, b))
    }

    pub fn mul(&self, a: &Poly<RatFunc<F::Elem>>, b: &Poly<RatFunc<F::Elem>>) -> Poly<RatFunc<F::Elem>> {
        self.ring.mul_mod(a, b, &self.modulus)
    }

    /// `p(u)` for `p` in `F_q(t)[U]`.
    pub fn eval(&self, p: &Poly<RatFunc<F::Elem>>) -> Poly<RatFunc<F::Elem>> {
        self.reduce(p)
    }

    /// Whether `(u, y)` satisfies `y^2 + h(u) y = g(u)`.
    pub fn on_curve(
        &self,
        h: &Poly<RatFunc<F::Elem>>,
        g: &Poly<RatFunc<F::Elem>>,
        y: &Poly<RatFunc<F::Elem>>,
    ) -> bool {
        let lhs = self.add(&self.mul(y, y), &self.mul(&self.eval(h), y));
        lhs == self.eval(g)
    }

    /// Whether `(u, d)` lies on `y^2 = g` where `g = f + c` for a constant `c`.
    pub fn eval_point(&self, g: &Poly<RatFunc<F::Elem>>, d: &RatFunc<F::Elem>) -> Result<bool, FfError> {
        if self.ring.sub(g, &self.modulus).degree().unwrap_or(0) > 0 {
            return Err(FfError::ModulusMismatch);
        }
        Ok(self.on_curve(&self.ring.zero(), g, &self.constant(d.clone())))
    }

    pub fn element_spec(&self, a: &Poly<RatFunc<F::Elem>>) -> Vec<RatFuncSpec> {
        a.coeffs().iter().map(|c| self.field.spec(c)).collect()
    }
}

/// `y^2 + h(U) y = g(U)` over `F_q(t)`, with `g` of any degree.
#[derive(Clone, Debug)]
pub struct FFCurve<F: FiniteField> {
    field: RatFuncField<F>,
    h: Poly<RatFunc<F::Elem>>,
    g: Poly<RatFunc<F::Elem>>,
}

impl<F: FiniteField> FFCurve<F> {
    /// Nonsingular affine model: `h^2 + 4g` separable in odd characteristic;
    /// in characteristic 2, `h != 0` and `gcd(h, g'^2 + h'^2 g) = 1`.
    pub fn new(field: RatFuncField<F>, h: Poly<RatFunc<F::Elem>>, g: Poly<RatFunc<F::Elem>>) -> Result<Self, FfError> {
        let r = PolyRing::new(field.clone());
        let ok = if field.characteristic() == 2 {
            let (dh, dg) = (r.derivative(&h), r.derivative(&g));
            let w = r.add(&r.square(&dg), &r.mul(&r.square(&dh), &g));
            !h.is_zero() && r.gcd(&h, &w).degree() == Some(0)
        } else {
            let four = field.from_i64(4);
            let disc = r.add(&r.square(&h), &r.scale(&four, &g));
            disc.degree().unwrap_or(0) > 0 && r.is_separable(&disc)
        };
        if !ok || g.degree().unwrap_or(0) < 3 {
            return Err(FfError::Singular);
        }
        Ok(FFCurve { field, h, g })
    }

    pub fn field(&self) -> &RatFuncField<F> {
        &self.field
    }

    pub fn h(&self) -> &Poly<RatFunc<F::Elem>> {
        &self.h
    }

    pub fn g(&self) -> &Poly<RatFunc<F::Elem>> {
        &self.g
    }

    /// `floor((deg g - 1) / 2)` for a nonsingular model.
    pub fn genus(&self) -> usize {
        (self.g.degree().unwrap() - 1) / 2
    }

    pub fn render(&self) -> String {
        let r = PolyRing::new(self.field.clone());
        if self.h.is_zero() {
            format!("y^2 = {}", r.render(&self.g, "U"))
        } else {
            format!("y^2 + ({})y = {}", r.render(&self.h, "U"), r.render(&self.g, "U"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::GaloisField;
    use proptest::prelude::*;

    fn f3t() -> RatFuncField<GaloisField> {
        RatFuncField::new(GaloisField::prime(3).unwrap())
    }

    #[test]
    fn upoly_grammar() {
        let k = RatFuncField::new(GaloisField::prime(2).unwrap());
        let r = PolyRing::new(k.clone());
        let f = k.parse_upoly("U^3 + (t^2 + 1)*U + t").unwrap();
        let t = k.t();
        let want = r.from_coeffs(vec![t.clone(), k.add(&k.mul(&t, &t), &k.one()), k.zero(), k.one()]);
        assert_eq!(f, want);
        assert_eq!(k.parse_upoly("[t, t^2+1, 0, 1]").unwrap(), want);
        assert_eq!(k.parse_upoly("t*U - U").unwrap(), r.from_coeffs(vec![k.zero(), k.sub(&t, &k.one())]));
        assert!(k.parse_upoly("U^x").is_err());
    }

    #[test]
    fn trinomial_degrees() {
        let k = f3t();
        let r = PolyRing::new(k.clone());
        assert_eq!(r.render(&ff_trinomial(&k, 2).unwrap(), "U"), "U^4 + U + t");
        assert_eq!(ff_trinomial(&k, 3).unwrap().degree(), Some(13));
        let k5 = RatFuncField::new(GaloisField::prime(5).unwrap());
        assert_eq!(ff_trinomial(&k5, 2).unwrap().degree(), Some(6));
        let k4 = RatFuncField::new(GaloisField::new(2, 2).unwrap());
        assert_eq!(ff_trinomial(&k4, 2).unwrap().degree(), Some(5));
        assert_eq!(ff_trinomial(&k, 1).unwrap_err(), FfError::SmallM);
    }

    #[test]
    fn separability() {
        let k = f3t();
        let r = PolyRing::new(k.clone());
        let f = ff_trinomial(&k, 2).unwrap();
        let t2 = k.mul(&k.t(), &k.t());
        let g = r.add(&f, &r.constant(t2));
        assert!(ff_separable(&k, &f));
        assert!(ff_separable(&k, &g));
        // Res(g, g') in F_3[t], from an independent resultant computation
        let pt = k.poly_ring();
        assert_eq!(r.resultant(&f, &r.derivative(&f)), k.from_poly(pt.from_i64s(&[0, 0, 0, 1])));
        assert_eq!(r.resultant(&g, &r.derivative(&g)), k.from_poly(pt.from_i64s(&[0, 0, 0, 1, 0, 0, 1])));
        let sq = r.square(&r.linear(&k.t()));
        assert!(!ff_separable(&k, &sq));
    }

    #[test]
    fn points_in_quotient_ring() {
        let k = f3t();
        let r = PolyRing::new(k.clone());
        let f = ff_trinomial(&k, 2).unwrap();
        let d = k.t();
        let g = r.add(&f, &r.constant(k.mul(&d, &d)));
        let qr = FFQuotientRing::new(k.clone(), f.clone()).unwrap();
        assert!(qr.eval_point(&g, &d).unwrap());
        assert!(qr.eval_point(&g, &k.neg(&d)).unwrap());
        assert!(!qr.eval_point(&g, &k.add(&d, &k.one())).unwrap());
        let off = r.add(&g, &r.x());
        assert_eq!(qr.eval_point(&off, &d).unwrap_err(), FfError::ModulusMismatch);
        assert_eq!(qr.reduce(&f), r.zero());
        assert_eq!(qr.root(), r.x());
    }

    #[test]
    fn char_two_variant() {
        // y^2 + alpha y = f + d (d + alpha) at (u, d) and (u, d + alpha)
        let k = RatFuncField::new(GaloisField::prime(2).unwrap());
        let r = PolyRing::new(k.clone());
        let f = ff_trinomial(&k, 3).unwrap();
        let (alpha, d) = (k.one(), k.t());
        let g = r.add(&f, &r.constant(k.mul(&d, &k.add(&d, &alpha))));
        let h = r.constant(alpha.clone());
        let qr = FFQuotientRing::new(k.clone(), f).unwrap();
        assert!(qr.on_curve(&h, &g, &qr.constant(d.clone())));
        assert!(qr.on_curve(&h, &g, &qr.constant(k.add(&d, &alpha))));
        assert!(!qr.on_curve(&h, &g, &qr.constant(k.add(&d, &k.t()))));
        let c = FFCurve::new(k.clone(), h, g).unwrap();
        assert_eq!(c.genus(), 3);
    }

    #[test]
    fn curve_models() {
        let k = f3t();
        let r = PolyRing::new(k.clone());
        let f = ff_trinomial(&k, 3).unwrap();
        let g = r.add(&f, &r.constant(k.mul(&k.t(), &k.t())));
        assert_eq!(FFCurve::new(k.clone(), r.zero(), g).unwrap().genus(), 6);
        let sq = r.mul(&r.square(&r.linear(&k.t())), &r.from_coeffs(vec![k.one(), k.zero(), k.one()]));
        assert_eq!(FFCurve::new(k, r.zero(), sq).unwrap_err(), FfError::Singular);
    }

    #[test]
    fn parsing_and_serialization() {
        let k = RatFuncField::new(GaloisField::prime(5).unwrap());
        let a = k.parse("(t^2 - 1)/(2t + 2)").unwrap();
        // (t - 1)(t + 1) / (2 (t + 1)) = 3 (t - 1)
        assert_eq!(a, k.from_poly(k.poly_ring().from_i64s(&[-3, 3])));
        let b = k.parse("t/(t + 1)").unwrap();
        assert_eq!(k.render(&b), "(t)/(t + 1)");
        assert_eq!(k.from_spec(&k.spec(&b)).unwrap(), b);
        assert!(k.parse("1/0").is_err());
        assert!(k.from_spec(&RatFuncSpec { num_coeffs: vec![0, 2], den_coeffs: vec![0, 1] }).is_err());
    }

    fn arb_ratfunc() -> impl Strategy<Value = (Vec<u64>, Vec<u64>)> {
        (prop::collection::vec(0u64..5, 0..4), prop::collection::vec(0u64..5, 1..4))
    }

    fn build(k: &RatFuncField<GaloisField>, (n, d): (Vec<u64>, Vec<u64>)) -> RatFunc<Vec<u64>> {
        let r = k.poly_ring();
        let den = r.from_coeffs(d.iter().map(|&c| k.base().element(c)).collect());
        let den = if den.is_zero() { r.one() } else { den };
        k.make(r.from_coeffs(n.iter().map(|&c| k.base().element(c)).collect()), den).unwrap()
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
            let k = RatFuncField::new(GaloisField::prime(5).unwrap());
            let (a, b, c) = (build(&k, a), build(&k, b), build(&k, c));
            prop_assert_eq!(k.mul(&k.add(&a, &b), &c), k.add(&k.mul(&a, &c), &k.mul(&b, &c)));
            prop_assert_eq!(k.add(&k.add(&a, &b), &c), k.add(&a, &k.add(&b, &c)));
            prop_assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
            prop_assert!(k.is_zero(&k.sub(&a, &a)));
            if let Some(ai) = k.inv(&a) {
                prop_assert!(k.is_one(&k.mul(&a, &ai)));
            }
            for x in [&a, &b, &c] {
                let r = k.poly_ring();
                prop_assert!(r.is_monic(&x.den) && r.gcd(&x.num, &x.den).degree() == Some(0) || x.num.is_zero());
            }
        }

        #[test]
        fn forged_points_verify(m in 2u32..4, dn in prop::collection::vec(0u64..3, 1..3)) {
            let k = f3t();
            let r = PolyRing::new(k.clone());
            let f = ff_trinomial(&k, m).unwrap();
            let d = k.add(&k.t(), &k.from_poly(k.poly_ring().from_coeffs(dn.iter().map(|&c| k.base().element(c)).collect())));
            let g = r.add(&f, &r.constant(k.mul(&d, &d)));
            prop_assume!(ff_separable(&k, &g));
            let qr = FFQuotientRing::new(k.clone(), f).unwrap();
            prop_assert!(qr.eval_point(&g, &d).unwrap());
            prop_assert!(qr.eval_point(&g, &k.neg(&d)).unwrap());
        }
    }
}
