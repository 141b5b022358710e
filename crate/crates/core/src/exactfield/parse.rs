//! Compact polynomial grammar shared by the CLI and the JSON schema.
//!
//! ```text
//! poly  := term (('+' | '-') term)*  |  '[' c0 ',' c1 ',' ... ']'
//! term  := coeff? ('*'? var ('^'? digits)?)?
//! coeff := integer | integer '/' integer
//! ```
//!
//! `x^5-x-1`, `x5 - x - 1`, `3/2*x^2 + 1` and `[-1,-1,0,0,0,1]` are all
//! accepted. A curve is written `y2=<poly>` or `y^2=<poly>`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{parse_rational, FieldError, Poly, PolyRing, Rational, Rationals};

pub fn parse_poly(text: &str, var: char) -> Result<Poly<Rational>, FieldError> {
    let ring = PolyRing::new(Rationals);
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || FieldError::Parse(text.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let coeffs = inner
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(ring.from_coeffs(coeffs));
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = Rational::one();
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
            i += 1;
        }
        let coeff = if i > start {
            let c: String = chars[start..i].iter().collect();
            parse_rational(&c).map_err(|_| err())?
        } else {
            Rational::one()
        };
        if i < chars.len() && chars[i] == '*' {
            i += 1;
        }
        let mut exp = 0usize;
        if i < chars.len() && chars[i] == var {
            i += 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
            }
            let es = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            exp = if i > es {
                chars[es..i].iter().collect::<String>().parse().map_err(|_| err())?
            } else {
                1
            };
        } else if i == start {
            return Err(err());
        }
        if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
            return Err(err());
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Rational::zero());
        }
        coeffs[exp] += sign * coeff;
    }
    Ok(ring.from_coeffs(coeffs))
}

/// Parses `y2=<poly>` / `y^2=<poly>` into the right-hand side.
pub fn parse_curve_rhs(text: &str) -> Result<Poly<Rational>, FieldError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let rhs = s
        .strip_prefix("y^2=")
        .or_else(|| s.strip_prefix("y2="))
        .ok_or_else(|| FieldError::Parse(text.to_string()))?;
    parse_poly(rhs, 'x')
}

/// Integer coefficient list of `f`, constant first; `None` if any coefficient is fractional.
pub fn integer_coeffs(f: &Poly<Rational>) -> Option<Vec<BigInt>> {
    f.coeffs().iter().map(|c| c.is_integer().then(|| c.numer().clone())).collect()
}
