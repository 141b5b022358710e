//! Family constructors that assemble curves, points and certificates into
//! self-verifying theorem instances.

mod elliptic;
mod function;
mod hyper;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elliptic::{CurveSpec, EInfOrderCert, EllError, DEFAULT_COUNT_BOUND};
use crate::exactfield::FieldError;
use crate::funcfield::{FfError, RatFuncSpec};
use crate::galois::{GaloisCert, GaloisError};
use crate::hyperelliptic::{HCurveSpec, HInfOrderCert, HRankCert, HypError};
use crate::numberfield::{NfError, NumberFieldSpec, PrimeSpec};
use crate::schema::{SCHEMA_VERSION, TOOLKIT_VERSION};

pub use elliptic::{forge_nf_rank1, forge_nf_rank2, forge_orig, forge_orig2, forge_shanks, PUBLISHED_82};
pub use function::{forge_m24, forge_pgl};
pub use hyper::{forge_residue_cover, forge_trinomial, trinomial_text};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForgeError {
    #[error("hypothesis ({number}) fails: {text}")]
    Hypothesis { number: u8, text: String },
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("no admissible prime pair below {0}; raise --prime-bound")]
    NoPrimePair(u64),
    #[error("instance does not verify: {0}")]
    Verification(String),
    #[error(transparent)]
    Elliptic(#[from] EllError),
    #[error(transparent)]
    Hyperelliptic(#[from] HypError),
    #[error(transparent)]
    NumberField(#[from] NfError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
    #[error(transparent)]
    FunctionField(#[from] FfError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForgeOptions {
    pub prime_bound: u64,
    pub count_bound: u64,
    pub seed: u64,
}

impl Default for ForgeOptions {
    fn default() -> Self {
        ForgeOptions { prime_bound: 1000, count_bound: DEFAULT_COUNT_BOUND, seed: 0 }
    }
}

/// A prime that is searched for, fixed in advance, or known to be unavailable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "choice", rename_all = "kebab-case")]
pub enum PrimeChoice {
    Search,
    Pinned { prime: PrimeSpec },
    NotFound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Citation {
    pub group: String,
    pub citation: String,
}

/// Constructor inputs, with every search result pinned so that replay is exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "constructor", rename_all = "kebab-case")]
pub enum Request {
    Orig { d: String },
    Orig2 { a: String, b: String, c: String, d: String },
    NfRank1 { field: String, d1: String, multiplier: Option<String>, primes: Option<[PrimeSpec; 2]> },
    NfRank2 { field: String, d1: String, beta: String, multiplier: Option<String>, primes: Option<[PrimeSpec; 2]> },
    ResidueCover { field: String, p: u64, root: Option<u64>, d: String, reps: Option<Vec<String>> },
    Trinomial { f: String, d: String, cited: Option<Citation>, prime: PrimeChoice },
    Shanks { a: String, d: String, prime: PrimeChoice },
    Pgl { q: u64, m: u32, d: String },
    M24 { f: String, alpha: String, d: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldDesc {
    NumberField { spec: NumberFieldSpec },
    /// `F_q(t)` with `F_q = F_p[x]/(modulus)`.
    FunctionField { p: u64, modulus: Vec<u64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CurveDesc {
    Elliptic { equation: String, spec: CurveSpec },
    Hyperelliptic { equation: String, genus: usize, spec: HCurveSpec },
    /// `y^2 + h y = g` over `F_q(t)`, points checked in `F_q(t)[U]/(modulus)`.
    FunctionField {
        equation: String,
        genus: usize,
        h: Vec<RatFuncSpec>,
        g: Vec<RatFuncSpec>,
        modulus: Vec<RatFuncSpec>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PointEntry {
    Affine { label: String, x: Vec<String>, y: Vec<String> },
    /// `(u, y)` with `u` the class of `U` in the quotient ring.
    RootClass { label: String, y: RatFuncSpec },
}

impl PointEntry {
    pub fn label(&self) -> &str {
        match self {
            PointEntry::Affine { label, .. } | PointEntry::RootClass { label, .. } => label,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub id: String,
    pub statement: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Galois { cert: GaloisCert },
    CitedGalois { group: String, citation: String },
    EllipticInfiniteOrder { point: String, cert: EInfOrderCert },
    JacobianInfiniteOrder { point: String, cert: HInfOrderCert },
    ColemanRank { cert: HRankCert },
    Collinear { points: Vec<String>, line: String },
    Hypotheses { checks: Vec<HypothesisCheck> },
    RootRelations { relations: Vec<String>, norms: Vec<String>, disc: String, disc_root: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConclusionStatus {
    Certified,
    /// Follows from the certified facts in `basis` by the argument recorded there.
    #[serde(rename = "paper-argued")]
    Argued,
    /// Holds if the cited facts listed in `basis` hold.
    Conditional,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    pub statement: String,
    pub status: ConclusionStatus,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremInstance {
    pub schema_version: u32,
    pub toolkit_version: String,
    pub theorem: String,
    pub parameters: Request,
    pub field: FieldDesc,
    pub curve: CurveDesc,
    pub points: Vec<PointEntry>,
    pub certificates: Vec<Certificate>,
    pub conclusions: Vec<Conclusion>,
    pub unresolved: Vec<String>,
    /// Experimental statements the instance is set up to probe but does not decide.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conjectures: Vec<String>,
    pub seed: u64,
    pub prime_bound: u64,
    pub count_bound: u64,
}

impl TheoremInstance {
    fn new(theorem: &str, parameters: Request, field: FieldDesc, curve: CurveDesc, opts: &ForgeOptions) -> Self {
        TheoremInstance {
            schema_version: SCHEMA_VERSION,
            toolkit_version: TOOLKIT_VERSION.to_string(),
            theorem: theorem.to_string(),
            parameters,
            field,
            curve,
            points: Vec::new(),
            certificates: Vec::new(),
            conclusions: Vec::new(),
            unresolved: Vec::new(),
            conjectures: Vec::new(),
            seed: opts.seed,
            prime_bound: opts.prime_bound,
            count_bound: opts.count_bound,
        }
    }

    pub fn options(&self) -> ForgeOptions {
        ForgeOptions { prime_bound: self.prime_bound, count_bound: self.count_bound, seed: self.seed }
    }

    pub fn is_certified(&self) -> bool {
        self.unresolved.is_empty()
    }

    fn certify(&mut self, statement: impl Into<String>, basis: &[&str]) {
        self.conclude(statement, ConclusionStatus::Certified, basis);
    }

    fn conclude(&mut self, statement: impl Into<String>, status: ConclusionStatus, basis: &[&str]) {
        self.conclusions.push(Conclusion {
            statement: statement.into(),
            status,
            basis: basis.iter().map(|s| s.to_string()).collect(),
        });
    }

    fn attach(&mut self, c: Certificate) -> String {
        self.certificates.push(c);
        format!("certificate {}", self.certificates.len() - 1)
    }
}

/// Runs the constructor named by `request`.
pub fn forge(request: &Request, opts: &ForgeOptions) -> Result<TheoremInstance, ForgeError> {
    match request {
        Request::Orig { d } => forge_orig(&elliptic::parse_int(d)?, opts),
        Request::Orig2 { a, b, c, d } => {
            let p = |s: &String| elliptic::parse_int(s);
            forge_orig2(&p(a)?, &p(b)?, &p(c)?, &p(d)?, opts)
        }
        Request::NfRank1 { field, d1, multiplier, primes } => {
            let m = multiplier.as_deref().map(elliptic::parse_int).transpose()?;
            forge_nf_rank1(field, d1, m.as_ref(), primes.as_ref(), opts)
        }
        Request::NfRank2 { field, d1, beta, multiplier, primes } => {
            let m = multiplier.as_deref().map(elliptic::parse_int).transpose()?;
            forge_nf_rank2(field, d1, beta, m.as_ref(), primes.as_ref(), opts)
        }
        Request::ResidueCover { field, p, root, d, reps } => forge_residue_cover(field, *p, *root, d, reps.as_deref(), opts),
        Request::Trinomial { f, d, cited, prime } => forge_trinomial(f, d, cited.as_ref(), prime, opts),
        Request::Shanks { a, d, prime } => forge_shanks(&elliptic::parse_int(a)?, d, prime, opts),
        Request::Pgl { q, m, d } => forge_pgl(*q, *m, d, opts),
        Request::M24 { f, alpha, d } => forge_m24(f, alpha, d, opts),
    }
}

/// Outcome of [`verify`]: what was re-checked and what stays open.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<String>,
    pub unresolved: Vec<String>,
}

/// Re-checks points and certificate witnesses independently, then replays the
/// constructor with all search results pinned and compares the result.
pub fn verify(inst: &TheoremInstance) -> Result<VerifyReport, ForgeError> {
    if inst.schema_version != SCHEMA_VERSION {
        return Err(ForgeError::Verification(format!("unsupported schema version {}", inst.schema_version)));
    }
    let opts = inst.options();
    let mut checks = Vec::new();
    match &inst.curve {
        CurveDesc::Elliptic { spec, .. } => elliptic::check_points(spec, &inst.points, opts.prime_bound, &mut checks)?,
        CurveDesc::Hyperelliptic { spec, .. } => hyper::check_points(spec, &inst.points, opts.prime_bound, &mut checks)?,
        CurveDesc::FunctionField { .. } => function::check_points(&inst.field, &inst.curve, &inst.points, &mut checks)?,
    }
    for (i, c) in inst.certificates.iter().enumerate() {
        match c {
            Certificate::Galois { cert } => {
                cert.verify()?;
                checks.push(format!("certificate {i}: Galois group {} re-verified", cert.group));
            }
            Certificate::EllipticInfiniteOrder { point, cert } => {
                if let CurveDesc::Elliptic { spec, .. } = &inst.curve {
                    if cert.curve != *spec {
                        return Err(ForgeError::Verification(format!("certificate {i} is for another curve")));
                    }
                }
                cert.verify(opts.prime_bound, opts.count_bound)?;
                checks.push(format!("certificate {i}: {point} has infinite order, re-verified"));
            }
            Certificate::JacobianInfiniteOrder { point, cert } => {
                cert.verify(opts.prime_bound)?;
                checks.push(format!("certificate {i}: [{point} - infinity] has infinite order, re-verified"));
            }
            Certificate::ColemanRank { cert } => {
                if let CurveDesc::Hyperelliptic { spec, .. } = &inst.curve {
                    if cert.curve != *spec {
                        return Err(ForgeError::Verification(format!("certificate {i} is for another curve")));
                    }
                }
                cert.verify(opts.prime_bound, opts.count_bound)?;
                checks.push(format!("certificate {i}: rank >= {} re-verified", cert.rank_lower_bound));
            }
            Certificate::CitedGalois { group, citation } => {
                checks.push(format!("certificate {i}: {group} cited from {citation}, not verified"));
            }
            Certificate::Collinear { .. } | Certificate::Hypotheses { .. } | Certificate::RootRelations { .. } => {}
        }
    }
    let mut replay = forge(&inst.parameters, &opts)?;
    replay.toolkit_version = inst.toolkit_version.clone();
    if replay != *inst {
        let what = [
            ("theorem", replay.theorem != inst.theorem),
            ("field", replay.field != inst.field),
            ("curve", replay.curve != inst.curve),
            ("points", replay.points != inst.points),
            ("certificates", replay.certificates != inst.certificates),
            ("conclusions", replay.conclusions != inst.conclusions),
            ("unresolved", replay.unresolved != inst.unresolved),
        ]
        .iter()
        .filter(|(_, differs)| *differs)
        .map(|(name, _)| *name)
        .collect::<Vec<_>>()
        .join(", ");
        return Err(ForgeError::Verification(format!("replay differs in: {what}")));
    }
    checks.push("replay from pinned parameters reproduces the instance".into());
    Ok(VerifyReport { checks, unresolved: inst.unresolved.clone() })
}

#[cfg(test)]
mod tests;
