mod ops;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use curvecert::elliptic::DEFAULT_COUNT_BOUND;
use curvecert::forge::{self, trinomial_text, Citation, ForgeOptions, PrimeChoice, Request};
use curvecert::numberfield::PrimeSpec;
use num_bigint::BigInt;
use serde::Serialize;

use report::{emit, read_instance, Outcome, Report};

const CERTIFIED: u8 = 0;
const ERROR: u8 = 1;
const UNRESOLVED: u8 = 2;

/// Exact certificates for points of infinite order and rank lower bounds.
#[derive(Parser)]
#[command(name = "curvecert", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Seed for every random choice (recorded in the report).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest prime searched, and bound for irreducibility and cycle-type checks.
    #[arg(long, global = true, default_value_t = 1000)]
    prime_bound: u64,
    /// Largest finite field that is counted by brute force.
    #[arg(long, global = true, default_value_t = DEFAULT_COUNT_BOUND)]
    count_bound: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a theorem instance and certify what can be certified.
    #[command(subcommand)]
    Forge(ForgeCmd),
    /// Re-run every check in a report or theorem instance.
    Verify { file: PathBuf },
    /// Count points on y^2 = g(x) over F_q.
    Count(CurveArgs),
    /// Cycle types and a Galois group certificate for a monic integer polynomial.
    Galois {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 200)]
        bound: u64,
    },
    /// L-polynomial P(T) and #J(F_q) = P(1) of y^2 = g(x) over F_q.
    Jacobian(CurveArgs),
}

#[derive(Args, Serialize)]
struct CurveArgs {
    /// Curve as `y2=<poly in x>`, e.g. `y2=x5+x+1`.
    #[arg(long, allow_hyphen_values = true)]
    curve: String,
    #[arg(long)]
    p: u64,
    /// Extension degree: the field is F_{p^k}.
    #[arg(long, default_value_t = 1)]
    k: u32,
}

/// Degree-one primes are `p:r` (the prime over `p` with `t = r`); others are `p:[h0,h1,...]`.
#[derive(Subcommand, Serialize)]
#[serde(tag = "constructor", rename_all = "kebab-case")]
enum ForgeCmd {
    /// y^2 = x^3 + x + d^2 over Q with P = (0, d).
    Orig {
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// y^2 = (x-a)(x-b)(x-c) + d^2 over Q.
    Orig2 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// y^2 = x^3 + x + d^2 over a number field, one point of infinite order.
    NfRank1 {
        /// Minimal polynomial of the generator t.
        #[arg(long, default_value = "t", allow_hyphen_values = true)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        d1: String,
        /// Fix d = multiplier * d1 instead of searching.
        #[arg(long, allow_hyphen_values = true)]
        multiplier: Option<String>,
        #[arg(long, requires = "large")]
        small: Option<String>,
        #[arg(long, requires = "small")]
        large: Option<String>,
    },
    /// y^2 = x^3 + a x + d^2 through (0, d) and (beta, d), two points of infinite order.
    NfRank2 {
        #[arg(long, default_value = "t", allow_hyphen_values = true)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        d1: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        multiplier: Option<String>,
        #[arg(long, requires = "large")]
        small: Option<String>,
        #[arg(long, requires = "small")]
        large: Option<String>,
    },
    /// y^2 = prod (x - a_i) + d^2 with the a_i covering a residue field of order p.
    ResidueCover {
        #[arg(long, default_value = "t", allow_hyphen_values = true)]
        field: String,
        #[arg(long)]
        p: u64,
        /// Root of the minimal polynomial mod p picking the prime (degree-one primes only).
        #[arg(long)]
        root: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        /// Comma-separated representatives a_1, ..., a_p.
        #[arg(long, allow_hyphen_values = true)]
        reps: Option<String>,
    },
    /// y^2 = f(x) + d^2 for an odd-degree f, over the field L_f of f.
    Trinomial {
        /// f directly; otherwise x^n + a x^s + b.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["n", "s", "a", "b"])]
        f: Option<String>,
        #[arg(long, requires_all = ["s", "a", "b"])]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        /// Galois group taken from the literature when it cannot be certified.
        #[arg(long, requires = "citation")]
        cite_group: Option<String>,
        #[arg(long, requires = "cite_group")]
        citation: Option<String>,
        #[arg(long)]
        prime: Option<String>,
    },
    /// E: y^2 = x^3 - a x^2 - (a+3) x + d^2 - 1 over the simplest cubic field.
    Shanks {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long)]
        prime: Option<String>,
    },
    /// y^2 = U^N + U + t + d^2 over F_q(t), N = (q^m - 1)/(q - 1).
    Pgl {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "t", allow_hyphen_values = true)]
        d: String,
    },
    /// y^2 + alpha y = f(U) + d(d + alpha) over F_2(t), f of degree 24.
    M24 {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "t", allow_hyphen_values = true)]
        d: String,
    },
}

fn parse_prime(text: &str) -> Result<PrimeSpec> {
    let bad = || format!("prime {text:?}: expected p:r or p:[h0,h1,...]");
    let (p, rest) = text.split_once(':').with_context(bad)?;
    let p: u64 = p.trim().parse().with_context(bad)?;
    let rest = rest.trim();
    let h = match rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        Some(list) => list.split(',').map(|c| c.trim().parse::<u64>()).collect::<Result<Vec<_>, _>>().with_context(bad)?,
        None => {
            let r: u64 = rest.parse().with_context(bad)?;
            if p == 0 {
                bail!(bad());
            }
            vec![(p - r % p) % p, 1]
        }
    };
    Ok(PrimeSpec { p, h })
}

fn prime_pair(small: &Option<String>, large: &Option<String>) -> Result<Option<[PrimeSpec; 2]>> {
    match (small, large) {
        (Some(s), Some(l)) => Ok(Some([parse_prime(s)?, parse_prime(l)?])),
        _ => Ok(None),
    }
}

fn prime_choice(prime: &Option<String>) -> Result<PrimeChoice> {
    Ok(match prime {
        Some(t) => PrimeChoice::Pinned { prime: parse_prime(t)? },
        None => PrimeChoice::Search,
    })
}

fn request(cmd: &ForgeCmd) -> Result<Request> {
    Ok(match cmd {
        ForgeCmd::Orig { d } => Request::Orig { d: d.clone() },
        ForgeCmd::Orig2 { a, b, c, d } => Request::Orig2 { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() },
        ForgeCmd::NfRank1 { field, d1, multiplier, small, large } => Request::NfRank1 {
            field: field.clone(),
            d1: d1.clone(),
            multiplier: multiplier.clone(),
            primes: prime_pair(small, large)?,
        },
        ForgeCmd::NfRank2 { field, d1, beta, multiplier, small, large } => Request::NfRank2 {
            field: field.clone(),
            d1: d1.clone(),
            beta: beta.clone(),
            multiplier: multiplier.clone(),
            primes: prime_pair(small, large)?,
        },
        ForgeCmd::ResidueCover { field, p, root, d, reps } => Request::ResidueCover {
            field: field.clone(),
            p: *p,
            root: *root,
            d: d.clone(),
            reps: reps.as_ref().map(|r| r.split(',').map(|s| s.trim().to_string()).collect()),
        },
        ForgeCmd::Trinomial { f, n, s, a, b, d, cite_group, citation, prime } => {
            let f = match (f, n, s, a, b) {
                (Some(f), ..) => f.clone(),
                (None, Some(n), Some(s), Some(a), Some(b)) => {
                    let int = |t: &String| t.parse::<BigInt>().with_context(|| format!("{t:?} is not an integer"));
                    if *s == 0 || s >= n {
                        bail!("need 0 < s < n");
                    }
                    trinomial_text(*n, *s, &int(a)?, &int(b)?)
                }
                _ => bail!("give --f, or all of --n --s --a --b"),
            };
            let cited = match (cite_group, citation) {
                (Some(g), Some(c)) => Some(Citation { group: g.clone(), citation: c.clone() }),
                _ => None,
            };
            Request::Trinomial { f, d: d.clone(), cited, prime: prime_choice(prime)? }
        }
        ForgeCmd::Shanks { a, d, prime } => Request::Shanks { a: a.clone(), d: d.clone(), prime: prime_choice(prime)? },
        ForgeCmd::Pgl { q, m, d } => Request::Pgl { q: *q, m: *m, d: d.clone() },
        ForgeCmd::M24 { f, alpha, d } => Request::M24 { f: f.clone(), alpha: alpha.clone(), d: d.clone() },
    })
}

fn run(cli: &Cli, command: Vec<String>) -> Result<u8> {
    let opts = ForgeOptions { prime_bound: cli.prime_bound, count_bound: cli.count_bound, seed: cli.seed };
    let out = cli.out.as_deref();
    let write = |inputs: serde_json::Value, result: Outcome| emit(&Report::new(command.clone(), inputs, cli.seed, result).to_json(), out);
    match &cli.cmd {
        Cmd::Forge(sub) => {
            let inst = forge::forge(&request(sub)?, &opts)?;
            forge::verify(&inst).context("refusing to emit an instance that does not self-verify")?;
            let code = if inst.is_certified() { CERTIFIED } else { UNRESOLVED };
            for u in &inst.unresolved {
                eprintln!("unresolved: {u}");
            }
            write(serde_json::to_value(sub)?, Outcome::Instance { instance: inst })?;
            Ok(code)
        }
        Cmd::Verify { file } => {
            let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let inst = read_instance(&text)?;
            let report = forge::verify(&inst)?;
            for c in &report.checks {
                println!("ok: {c}");
            }
            println!("verified {} ({} checks)", inst.theorem, report.checks.len());
            for u in &report.unresolved {
                eprintln!("warning: unresolved: {u}");
            }
            Ok(CERTIFIED)
        }
        Cmd::Count(args) => {
            let r = ops::count(&args.curve, args.p, args.k, cli.count_bound)?;
            write(serde_json::to_value(args)?, Outcome::Count(r))?;
            Ok(CERTIFIED)
        }
        Cmd::Galois { poly, bound } => {
            let r = ops::galois(poly, *bound)?;
            let code = if r.certificate.is_some() { CERTIFIED } else { UNRESOLVED };
            if code == UNRESOLVED {
                eprintln!("unresolved: no S_n or A_n certificate from primes up to {bound}");
            }
            write(serde_json::json!({ "poly": poly, "bound": bound }), Outcome::Galois(r))?;
            Ok(code)
        }
        Cmd::Jacobian(args) => {
            let r = ops::jacobian(&args.curve, args.p, args.k, cli.count_bound)?;
            write(serde_json::to_value(args)?, Outcome::Jacobian(r))?;
            Ok(CERTIFIED)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect();
    match run(&cli, command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ERROR)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_syntax() {
        assert_eq!(parse_prime("29:22").unwrap(), PrimeSpec { p: 29, h: vec![7, 1] });
        assert_eq!(parse_prime("5:0").unwrap(), PrimeSpec { p: 5, h: vec![0, 1] });
        assert_eq!(parse_prime("11:[1,0,1]").unwrap(), PrimeSpec { p: 11, h: vec![1, 0, 1] });
        assert!(parse_prime("29").is_err());
        assert!(parse_prime("x:1").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
