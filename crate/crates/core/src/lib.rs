//! Exact-arithmetic constructions of elliptic and hyperelliptic curve
//! families, with certificates that can be re-verified from their JSON form.

pub mod exactfield;
pub mod forge;
pub mod funcfield;
pub mod elliptic;
pub mod galois;
pub mod hyperelliptic;
pub mod numberfield;
pub mod schema;
