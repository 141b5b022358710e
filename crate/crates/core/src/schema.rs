//! String encodings of exact values used throughout the JSON schema.
//!
//! Rationals are written `"n"` or `"n/d"`; polynomials are arrays of such
//! strings, constant term first.

use crate::exactfield::{parse_rational, FieldError, Poly, PolyRing, Rational, Rationals};

/// Version tag written into every report and instance.
pub const SCHEMA_VERSION: u32 = 1;

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn rat_str(a: &Rational) -> String {
    a.to_string()
}

pub fn rats_to_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat_str).collect()
}

pub fn rats_from_strings(v: &[String]) -> Result<Vec<Rational>, FieldError> {
    v.iter().map(|s| parse_rational(s)).collect()
}

pub fn poly_to_strings(f: &Poly<Rational>) -> Vec<String> {
    rats_to_strings(f.coeffs())
}

pub fn poly_from_strings(v: &[String]) -> Result<Poly<Rational>, FieldError> {
    Ok(PolyRing::new(Rationals).from_coeffs(rats_from_strings(v)?))
}
