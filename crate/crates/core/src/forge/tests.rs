use super::*;
use crate::elliptic::InfOrderMethod;
use num_bigint::BigInt;

fn opts() -> ForgeOptions {
    ForgeOptions::default()
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn roundtrip(inst: &TheoremInstance) -> VerifyReport {
    let json = serde_json::to_string(inst).unwrap();
    let back: TheoremInstance = serde_json::from_str(&json).unwrap();
    assert_eq!(&back, inst);
    verify(&back).unwrap()
}

fn statements(inst: &TheoremInstance, status: ConclusionStatus) -> Vec<&str> {
    inst.conclusions.iter().filter(|c| c.status == status).map(|c| c.statement.as_str()).collect()
}

#[test]
fn orig_82_carries_published_generators() {
    let inst = forge_orig(&int(82), &opts()).unwrap();
    assert_eq!(inst.points.len(), 5);
    assert!(inst.is_certified());
    let labels: Vec<_> = inst.points.iter().map(PointEntry::label).collect();
    assert_eq!(labels, ["P", "-P", "G2", "G3", "G4"]);
    roundtrip(&inst);
}

#[test]
fn orig_small_d() {
    assert!(forge_orig(&int(3), &opts()).unwrap().is_certified());
    assert!(forge_orig(&int(-7), &opts()).unwrap().is_certified());
    for d in [1, 2, -2] {
        let inst = forge_orig(&int(d), &opts()).unwrap();
        assert_eq!(inst.unresolved.len(), 1);
        let report = roundtrip(&inst);
        assert_eq!(report.unresolved, inst.unresolved);
    }
    assert!(matches!(forge_orig(&int(0), &opts()), Err(ForgeError::Invalid(_))));
}

#[test]
fn orig2_relation() {
    let inst = forge_orig2(&int(1), &int(2), &int(3), &int(5), &opts()).unwrap();
    assert_eq!(inst.points.len(), 6);
    assert!(statements(&inst, ConclusionStatus::Certified).contains(&"(1, 5) + (2, 5) + (3, 5) = 0"));
    assert!(!inst.is_certified());
    roundtrip(&inst);

    let fam = forge_orig2(&int(0), &int(4), &int(-4), &int(3), &opts()).unwrap();
    assert!(statements(&fam, ConclusionStatus::Certified).contains(&"E is y^2 = x^3 - 16x + 9"));

    // a repeated root is fine once d^2 moves the cubic off it
    assert!(forge_orig2(&int(1), &int(1), &int(2), &int(5), &opts()).is_ok());
    assert!(matches!(
        forge_orig2(&int(1), &int(1), &int(1), &int(0), &opts()),
        Err(ForgeError::Elliptic(crate::elliptic::EllError::Singular))
    ));
}

fn nf_primes(field: &str, small: (u64, u64), large: (u64, u64)) -> [crate::numberfield::PrimeSpec; 2] {
    let k = crate::numberfield::NumberField::parse(field, 1000).unwrap();
    [k.prime_with_root(small.0, small.1).unwrap().spec(), k.prime_with_root(large.0, large.1).unwrap().spec()]
}

#[test]
fn nf_rank1_published_example() {
    let primes = nf_primes("t^2 + 647", (29, 22), (67, 36));
    let inst = forge_nf_rank1("t^2 + 647", "98 + t", None, Some(&primes), &opts()).unwrap();
    assert_eq!(inst.theorem, "th2.1");
    assert!(inst.is_certified());
    let Certificate::EllipticInfiniteOrder { cert, .. } = &inst.certificates[1] else { panic!() };
    assert!(matches!(cert.method, InfOrderMethod::TwoPrime { order_mod_large: 2, .. }));
    roundtrip(&inst);
}

#[test]
fn nf_rank1_search_over_q() {
    let inst = forge_nf_rank1("t", "1", None, None, &opts()).unwrap();
    let Request::NfRank1 { multiplier, primes: Some([s, l]), .. } = &inst.parameters else { panic!() };
    assert_eq!((s.p, l.p), (3, 11));
    assert_eq!(multiplier.as_deref(), Some("33"));
    roundtrip(&inst);
    let again = forge_nf_rank1("t", "1", None, None, &opts()).unwrap();
    assert_eq!(serde_json::to_string(&inst).unwrap(), serde_json::to_string(&again).unwrap());
}

#[test]
fn nf_rank1_errors() {
    let tiny = ForgeOptions { prime_bound: 3, ..opts() };
    assert_eq!(forge_nf_rank1("t^2 + 1", "t", None, None, &tiny).unwrap_err(), ForgeError::NoPrimePair(3));
    let primes = nf_primes("t^2 + 647", (29, 22), (67, 36));
    assert!(matches!(
        forge_nf_rank1("t^2 + 647", "99 + t", None, Some(&primes), &opts()),
        Err(ForgeError::Hypothesis { number: 3, .. })
    ));
    assert!(matches!(
        forge_nf_rank1("t^2 + 647", "5", None, Some(&primes), &opts()),
        Err(ForgeError::Hypothesis { number: 1, .. })
    ));
}

#[test]
fn nf_rank2_published_example() {
    let primes = nf_primes("t^2 - 94546", (29, 21), (67, 64));
    let inst = forge_nf_rank2("t^2 - 94546", "5905 - 265t", "-104 - 195t", None, Some(&primes), &opts()).unwrap();
    assert_eq!(inst.theorem, "th2.3");
    let certs = inst.certificates.iter().filter(|c| matches!(c, Certificate::EllipticInfiniteOrder { .. })).count();
    assert_eq!(certs, 2);
    assert_eq!(inst.unresolved, ["P and Q are linearly independent: needs heights"]);
    roundtrip(&inst);
}

#[test]
fn nf_rank2_errors() {
    let primes = nf_primes("t^2 - 94546", (29, 21), (67, 64));
    let e = forge_nf_rank2("t^2 - 94546", "5905 - 265t", "t - 64", None, Some(&primes), &opts()).unwrap_err();
    assert!(matches!(e, ForgeError::Hypothesis { number: 5, .. }), "{e}");
    let e = forge_nf_rank2("t^2 - 94546", "5905 - 265t", "t - 21", None, Some(&primes), &opts()).unwrap_err();
    assert!(matches!(e, ForgeError::Hypothesis { number: 4, .. }), "{e}");
    assert!(matches!(
        forge_nf_rank2("t^2 - 94546", "5905 - 265t", "0", None, Some(&primes), &opts()),
        Err(ForgeError::Invalid(_))
    ));
}

#[test]
fn residue_cover_instances() {
    let inst = forge_residue_cover("t", 5, None, "5", None, &opts()).unwrap();
    assert!(inst.is_certified());
    assert_eq!(inst.points.len(), 10);
    let Certificate::ColemanRank { cert } = &inst.certificates[1] else { panic!() };
    assert_eq!((cert.point_count, cert.coleman_bound, cert.rank_lower_bound), (11, 8, 2));
    assert!(statements(&inst, ConclusionStatus::Certified).contains(&"C reduces to y^2 = x^5 - x modulo the prime over 5 with t = 0"));
    roundtrip(&inst);

    let reps: Vec<String> = (19..=23).map(|i| format!("-{i}")).collect();
    let gallegos = forge_residue_cover("t", 5, None, "20", Some(&reps), &opts()).unwrap();
    let Certificate::ColemanRank { cert } = &gallegos.certificates[1] else { panic!() };
    assert_eq!((cert.residue_count, cert.rank_lower_bound), (6, 2));
    roundtrip(&gallegos);

    let bad: Vec<String> = ["0", "1", "2", "3", "3"].map(String::from).to_vec();
    assert!(matches!(forge_residue_cover("t", 5, None, "5", Some(&bad), &opts()), Err(ForgeError::Invalid(_))));
    assert!(matches!(forge_residue_cover("t", 5, None, "7", None, &opts()), Err(ForgeError::Invalid(_))));
}

#[test]
fn trinomial_quintic_is_settled() {
    let f = trinomial_text(5, 1, &int(-1), &int(-1));
    let inst = forge_trinomial(&f, "7", None, &PrimeChoice::Search, &opts()).unwrap();
    assert_eq!(inst.theorem, "th3.8");
    assert!(inst.is_certified(), "{:?}", inst.unresolved);
    assert!(statements(&inst, ConclusionStatus::Certified).contains(&"rank J(L_f) >= m(S5) = 4"));
    let Request::Trinomial { prime: PrimeChoice::Pinned { prime }, .. } = &inst.parameters else { panic!() };
    assert_eq!(prime.p, 7);
    roundtrip(&inst);
}

#[test]
fn trinomial_septic_is_conditional() {
    let cited = Citation { group: "PSL(2,7)".into(), citation: "classical".into() };
    let inst = forge_trinomial("x^7 - 7x + 3", "11", Some(&cited), &PrimeChoice::Search, &opts()).unwrap();
    assert_eq!(statements(&inst, ConclusionStatus::Conditional), ["rank J(L_f) >= m(PSL(2,7)) = 6"]);
    assert_eq!(inst.unresolved.len(), 1);
    let cert = inst.certificates.iter().find_map(|c| match c {
        Certificate::JacobianInfiniteOrder { cert, .. } => Some(cert),
        _ => None,
    });
    assert!(cert.unwrap().residue_degree > 1);
    let galois = inst.certificates.iter().find_map(|c| match c {
        Certificate::Galois { cert } => Some(cert),
        _ => None,
    });
    assert!(galois.unwrap().evidence.disc_square);
    roundtrip(&inst);
}

#[test]
fn trinomial_errors() {
    assert!(matches!(forge_trinomial("x^5 - x - 1", "0", None, &PrimeChoice::Search, &opts()), Err(ForgeError::Invalid(_))));
    assert!(matches!(forge_trinomial("x^6 - x - 1", "7", None, &PrimeChoice::Search, &opts()), Err(ForgeError::Invalid(_))));
    // x^5 - 5x + 4 + d^2 with d^2 = -1 is impossible over Q, so pick g with a double root: x^5 - 5x + 3 + 1
    assert!(matches!(forge_trinomial("x^5 - 5x + 3", "1", None, &PrimeChoice::Search, &opts()), Err(ForgeError::Invalid(_))));
}

#[test]
fn shanks_instances() {
    let inst = forge_shanks(&int(50), "50", &PrimeChoice::Search, &opts()).unwrap();
    assert_eq!(inst.theorem, "th3.9");
    assert!(inst.is_certified(), "{:?}", inst.unresolved);
    assert_eq!(statements(&inst, ConclusionStatus::Argued), ["rank E(L_f) >= 2"]);
    let Certificate::RootRelations { disc, disc_root, norms, .. } = &inst.certificates[1] else { panic!() };
    assert_eq!((disc.as_str(), disc_root.as_str()), ("7070281", "2659"));
    assert_eq!(norms, &["1", "1", "1"]);
    roundtrip(&inst);

    let inst = forge_shanks(&int(36), "36", &PrimeChoice::Search, &opts()).unwrap();
    assert_eq!(inst.theorem, "shanks");
    assert!(statements(&inst, ConclusionStatus::Certified).contains(&"P + Q + R = 0"));
    assert_eq!(inst.unresolved.len(), 1);
    roundtrip(&inst);

    assert!(matches!(forge_shanks(&int(745), "u^2 - u - 3", &PrimeChoice::Search, &opts()), Err(ForgeError::Invalid(_))));
    assert!(matches!(forge_shanks(&int(0), "5", &PrimeChoice::Search, &opts()), Err(ForgeError::Invalid(_))));
}

#[test]
fn function_field_instances() {
    let inst = forge_pgl(3, 2, "t", &opts()).unwrap();
    let CurveDesc::FunctionField { equation, genus, .. } = &inst.curve else { panic!() };
    assert_eq!(equation, "y^2 = U^4 + U + (t^2 + t)");
    assert_eq!(*genus, 1);
    assert_eq!(inst.unresolved, ["Gal(L_f/K) = PGL(2, F_3) is cited from Abhyankar, Projective polynomials (1997), not verified"]);
    roundtrip(&inst);

    let inst = forge_pgl(3, 3, "t", &opts()).unwrap();
    let CurveDesc::FunctionField { genus, .. } = &inst.curve else { panic!() };
    assert_eq!(*genus, 6);
    assert!(statements(&inst, ConclusionStatus::Certified).contains(&"|C(L_f)| >= 2N = 26"));
    assert!(matches!(forge_pgl(4, 2, "t", &opts()), Err(ForgeError::Invalid(_))));

    let inst = forge_m24("U^24 + U + t", "1", "t", &opts()).unwrap();
    assert!(statements(&inst, ConclusionStatus::Certified).contains(&"|C(L_f)| >= 48"));
    roundtrip(&inst);
    assert!(matches!(forge_m24("U^24 + U + t", "0", "t", &opts()), Err(ForgeError::Invalid(_))));
    assert!(matches!(forge_m24("U^23 + U + t", "1", "t", &opts()), Err(ForgeError::Invalid(_))));
}

#[test]
fn tampering_is_detected() {
    let mut inst = forge_nf_rank1("t", "1", None, None, &opts()).unwrap();
    for c in &mut inst.certificates {
        if let Certificate::EllipticInfiniteOrder { cert, .. } = c {
            if let InfOrderMethod::TwoPrime { order_mod_large, .. } = &mut cert.method {
                *order_mod_large = 4;
            }
        }
    }
    assert!(verify(&inst).is_err());

    let mut inst = forge_orig(&int(82), &opts()).unwrap();
    if let PointEntry::Affine { y, .. } = &mut inst.points[4] {
        y[0] = "10049/7".into();
    }
    assert!(matches!(verify(&inst), Err(ForgeError::Verification(_))));

    let mut inst = forge_orig(&int(1), &opts()).unwrap();
    inst.unresolved.clear();
    assert!(verify(&inst).is_err());
}

#[test]
fn forge_dispatch_replays() {
    let inst = forge_shanks(&int(50), "50", &PrimeChoice::Search, &opts()).unwrap();
    assert_eq!(forge(&inst.parameters, &inst.options()).unwrap(), inst);
}
