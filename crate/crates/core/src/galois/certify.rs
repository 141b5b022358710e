use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::irreducible::{irreducible_over_q, IrreducibilityCert};
use super::{check_monic_integer, cycle_type_with_disc, discriminant, CycleType, GaloisError};
use crate::exactfield::{is_prime, is_rational_square, primes_up_to, Poly, Rational};
use crate::schema::{poly_from_strings, poly_to_strings, rat_str};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GaloisStatus {
    /// Every claim in the evidence is re-checkable.
    Certified,
    /// Identification taken from the literature; carries no proof weight by default.
    CitedUnverified { citation: String },
}

/// Why a transitive group on `n` points is primitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Primitivity {
    /// Transitive groups of prime degree are primitive.
    PrimeDegree,
    /// A Frobenius cycle of prime length `l > n/2`.
    LargePrimeCycle { witness: CycleType, length: usize },
    /// A Frobenius of type `(n-1, 1)` makes the group 2-transitive.
    TwoTransitive { witness: CycleType },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisEvidence {
    pub irreducibility: Option<IrreducibilityCert>,
    pub discriminant: String,
    pub disc_square: bool,
    pub primitivity: Option<Primitivity>,
    /// A Frobenius some power of which is a single cycle of prime length `cycle_length`.
    pub cycle_witness: Option<CycleType>,
    pub cycle_length: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisCert {
    pub poly: Vec<String>,
    pub group: String,
    pub status: GaloisStatus,
    pub evidence: GaloisEvidence,
}

fn symmetric(n: usize) -> String {
    format!("S{n}")
}

fn alternating(n: usize) -> String {
    format!("A{n}")
}

/// Prime lengths `l` for which primitive + `l`-cycle forces `A_n` (Jordan).
fn jordan_length(l: usize, n: usize) -> bool {
    l == 3 || (is_prime(l as u64) && l + 3 <= n)
}

fn primitivity_from(ct: &CycleType, n: usize) -> Option<Primitivity> {
    let mut rev = ct.degrees.clone();
    rev.sort_unstable();
    if rev == [1, n - 1] {
        return Some(Primitivity::TwoTransitive { witness: ct.clone() });
    }
    ct.degrees
        .iter()
        .find(|&&l| 2 * l > n && is_prime(l as u64))
        .map(|&l| Primitivity::LargePrimeCycle { witness: ct.clone(), length: l })
}

fn check_primitivity(prim: &Primitivity, n: usize) -> bool {
    match prim {
        Primitivity::PrimeDegree => is_prime(n as u64),
        Primitivity::LargePrimeCycle { witness, length } => {
            2 * length > n && is_prime(*length as u64) && witness.degrees.contains(length)
        }
        Primitivity::TwoTransitive { witness } => {
            let mut d = witness.degrees.clone();
            d.sort_unstable();
            d == [1, n - 1]
        }
    }
}

struct Scan {
    n: usize,
    disc: Rational,
    disc_square: bool,
    irreducibility: IrreducibilityCert,
}

fn prepare(f: &Poly<Rational>, prime_bound: u64) -> Result<Option<Scan>, GaloisError> {
    let n = check_monic_integer(f)?;
    let disc = discriminant(f);
    if disc.is_zero() {
        return Err(GaloisError::NotSquarefree);
    }
    let Some(irreducibility) = irreducible_over_q(f, prime_bound)?.certificate().cloned() else {
        return Ok(None);
    };
    let disc_square = is_rational_square(&disc);
    Ok(Some(Scan { n, disc, disc_square, irreducibility }))
}

/// Scans primes for a primitivity witness and a cycle witness accepted by `accept`.
fn search(
    f: &Poly<Rational>,
    scan: &Scan,
    prime_bound: u64,
    accept: impl Fn(usize) -> bool,
) -> Result<Option<(Primitivity, CycleType, usize)>, GaloisError> {
    let n = scan.n;
    let mut prim = is_prime(n as u64).then_some(Primitivity::PrimeDegree);
    let mut witness: Option<(CycleType, usize)> = None;
    for p in primes_up_to(prime_bound) {
        let Some(ct) = cycle_type_with_disc(f, &scan.disc, p)? else {
            continue;
        };
        if prim.is_none() {
            prim = primitivity_from(&ct, n);
        }
        if witness.is_none() {
            let mut lengths: Vec<usize> = ct.degrees.clone();
            lengths.dedup();
            witness = lengths
                .into_iter()
                .find(|&l| is_prime(l as u64) && accept(l) && ct.yields_pure_cycle(l))
                .map(|l| (ct.clone(), l));
        }
        if let (Some(pr), Some((w, l))) = (&prim, &witness) {
            return Ok(Some((pr.clone(), w.clone(), *l)));
        }
    }
    Ok(None)
}

fn small_cert(f: &Poly<Rational>, scan: Scan, group: String) -> GaloisCert {
    GaloisCert {
        poly: poly_to_strings(f),
        group,
        status: GaloisStatus::Certified,
        evidence: GaloisEvidence {
            irreducibility: Some(scan.irreducibility),
            discriminant: rat_str(&scan.disc),
            disc_square: scan.disc_square,
            primitivity: None,
            cycle_witness: None,
            cycle_length: None,
        },
    }
}

fn full_cert(f: &Poly<Rational>, scan: Scan, group: String, found: (Primitivity, CycleType, usize)) -> GaloisCert {
    let mut cert = small_cert(f, scan, group);
    cert.evidence.primitivity = Some(found.0);
    cert.evidence.cycle_witness = Some(found.1);
    cert.evidence.cycle_length = Some(found.2);
    cert
}

/// Certifies `Gal(f) = S_n`, or `None` when the sampled primes do not suffice.
///
/// Transitivity comes from an irreducibility certificate. A primitive group
/// containing a transposition is `S_n`; one containing a prime cycle of
/// length 3 or at most `n - 3` contains `A_n`, and a non-square
/// discriminant then forces `S_n`.
pub fn certify_sn(f: &Poly<Rational>, prime_bound: u64) -> Result<Option<GaloisCert>, GaloisError> {
    let Some(scan) = prepare(f, prime_bound)? else {
        return Ok(None);
    };
    let n = scan.n;
    if n <= 3 {
        if n == 3 && scan.disc_square {
            return Ok(None);
        }
        return Ok(Some(small_cert(f, scan, symmetric(n))));
    }
    let square = scan.disc_square;
    let found = search(f, &scan, prime_bound, |l| l == 2 || (!square && jordan_length(l, n)))?;
    Ok(found.map(|found| full_cert(f, scan, symmetric(n), found)))
}

/// Certifies `Gal(f) = A_n` from a square discriminant plus primitivity and a Jordan cycle.
pub fn certify_an(f: &Poly<Rational>, prime_bound: u64) -> Result<Option<GaloisCert>, GaloisError> {
    let Some(scan) = prepare(f, prime_bound)? else {
        return Ok(None);
    };
    let n = scan.n;
    if !scan.disc_square || n < 3 {
        return Ok(None);
    }
    if n == 3 {
        return Ok(Some(small_cert(f, scan, alternating(3))));
    }
    let found = search(f, &scan, prime_bound, |l| jordan_length(l, n))?;
    Ok(found.map(|found| full_cert(f, scan, alternating(n), found)))
}

/// Records a group identification from the literature without proof weight.
///
/// The discriminant and, when obtainable, an irreducibility certificate are
/// still attached and re-checked.
pub fn cite_group(
    f: &Poly<Rational>,
    group: &str,
    citation: &str,
    prime_bound: u64,
) -> Result<GaloisCert, GaloisError> {
    check_monic_integer(f)?;
    let disc = discriminant(f);
    if disc.is_zero() {
        return Err(GaloisError::NotSquarefree);
    }
    let irreducibility = irreducible_over_q(f, prime_bound)?.certificate().cloned();
    Ok(GaloisCert {
        poly: poly_to_strings(f),
        group: group.to_string(),
        status: GaloisStatus::CitedUnverified { citation: citation.to_string() },
        evidence: GaloisEvidence {
            irreducibility,
            discriminant: rat_str(&disc),
            disc_square: is_rational_square(&disc),
            primitivity: None,
            cycle_witness: None,
            cycle_length: None,
        },
    })
}

impl GaloisCert {
    pub fn polynomial(&self) -> Result<Poly<Rational>, GaloisError> {
        Ok(poly_from_strings(&self.poly)?)
    }

    pub fn degree(&self) -> usize {
        self.poly.len().saturating_sub(1)
    }

    pub fn is_certified(&self) -> bool {
        self.status == GaloisStatus::Certified
    }

    /// Whether rank bounds may rely on this identification.
    pub fn carries_proof_weight(&self, allow_cited: bool) -> bool {
        self.is_certified() || allow_cited
    }

    /// Re-derives every recorded fact from the polynomial.
    pub fn verify(&self) -> Result<(), GaloisError> {
        let fail = |m: &str| Err(GaloisError::Verification(m.to_string()));
        let f = self.polynomial()?;
        let n = check_monic_integer(&f)?;
        let disc = discriminant(&f);
        let ev = &self.evidence;
        if rat_str(&disc) != ev.discriminant {
            return fail("discriminant mismatch");
        }
        if is_rational_square(&disc) != ev.disc_square {
            return fail("discriminant square flag mismatch");
        }
        if let Some(ic) = &ev.irreducibility {
            if ic.poly != self.poly {
                return fail("irreducibility certificate is for another polynomial");
            }
            ic.verify()?;
        }
        if let GaloisStatus::CitedUnverified { .. } = self.status {
            return Ok(());
        }
        if ev.irreducibility.is_none() {
            return fail("no irreducibility certificate");
        }
        let is_s = self.group == symmetric(n);
        let is_a = self.group == alternating(n);
        if !is_s && !is_a {
            return fail("only symmetric and alternating groups are certified");
        }
        if is_a && !ev.disc_square {
            return fail("alternating group needs a square discriminant");
        }
        if is_s && ev.disc_square && n >= 2 {
            return fail("symmetric group needs a non-square discriminant");
        }
        if n <= 3 {
            return Ok(());
        }
        let (Some(prim), Some(w), Some(l)) = (&ev.primitivity, &ev.cycle_witness, ev.cycle_length) else {
            return fail("missing primitivity or cycle witness");
        };
        if !check_primitivity(prim, n) {
            return fail("primitivity witness invalid");
        }
        let prim_witness = match prim {
            Primitivity::PrimeDegree => None,
            Primitivity::LargePrimeCycle { witness, .. } | Primitivity::TwoTransitive { witness } => Some(witness),
        };
        for ct in prim_witness.into_iter().chain(Some(w)) {
            if cycle_type_with_disc(&f, &disc, ct.p)?.as_ref() != Some(ct) {
                return fail("recorded cycle type differs from recomputation");
            }
        }
        if !is_prime(l as u64) || !w.yields_pure_cycle(l) {
            return fail("cycle witness does not give a prime cycle");
        }
        let ok = if is_s { l == 2 || jordan_length(l, n) } else { jordan_length(l, n) };
        if ok {
            Ok(())
        } else {
            fail("cycle length outside Jordan's criterion")
        }
    }
}
