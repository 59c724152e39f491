//! `primroot`: find and verify primitive roots of primes, inspect
//! multiplicative orders and polynomial congruences, and run the library's
//! invariant sweeps. Results go to stdout (text or JSON), diagnostics to
//! stderr. Exit status: 0 success, 1 failed verification, 2 bad usage or
//! violated precondition.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use primroot::{
    all_powers, decompose_with_witnesses, is_primitive_root, order, run_selftest,
    witness_with_order, Error, IntPolynomial, Prime,
};

/// Upper bound (exclusive) every numeric argument must respect.
const ARG_BOUND: u64 = primroot::MODULUS_BOUND;

fn arg_in_bound() -> clap::builder::RangedU64ValueParser {
    clap::value_parser!(u64).range(..ARG_BOUND)
}

#[derive(Parser)]
#[command(name = "primroot", version, about = "Primitive roots of primes, constructively")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Find a primitive root of the prime p, with its factor/witness trail.
    Find {
        #[arg(value_parser = arg_in_bound())]
        p: u64,
    },
    /// Check whether g is a primitive root of p (exit 1 if it is not).
    Verify {
        #[arg(value_parser = arg_in_bound())]
        g: u64,
        #[arg(value_parser = arg_in_bound())]
        p: u64,
    },
    /// Multiplicative order of a modulo p, with the full power trace.
    Order {
        #[arg(value_parser = arg_in_bound())]
        a: u64,
        #[arg(value_parser = arg_in_bound())]
        p: u64,
    },
    /// Smallest element of order q^n modulo p (q prime, q^n | p-1).
    Witness {
        #[arg(value_parser = arg_in_bound())]
        q: u64,
        #[arg(value_parser = arg_in_bound())]
        n: u64,
        #[arg(value_parser = arg_in_bound())]
        p: u64,
    },
    /// Distinct roots mod p of c0 + c1 x + ... + ck x^k.
    Roots {
        #[arg(value_parser = arg_in_bound())]
        p: u64,
        /// Ascending coefficients c0 c1 ... ck.
        #[arg(required = true, value_parser = arg_in_bound())]
        coeffs: Vec<u64>,
    },
    /// Run every invariant sweep up to a prime bound and report each one.
    Selftest {
        /// Largest prime included in the sweeps.
        #[arg(long, default_value_t = 211, value_parser = arg_in_bound())]
        bound: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Find { p } => find(*p, cli.format),
        Command::Verify { g, p } => verify(*g, *p, cli.format),
        Command::Order { a, p } => order_cmd(*a, *p, cli.format),
        Command::Witness { q, n, p } => witness(*q, *n, *p, cli.format),
        Command::Roots { p, coeffs } => roots(*p, coeffs, cli.format),
        Command::Selftest { bound } => selftest(*bound, cli.format),
    }
}

fn find(p: u64, format: Format) -> Result<ExitCode, Error> {
    let p = Prime::new(p)?;
    let trail = decompose_with_witnesses(p);
    let root_order = order(trail.root())?;
    let witnesses: Vec<u64> = trail.witnesses().iter().map(|w| w.residue()).collect();
    match format {
        Format::Text => {
            println!("p = {}", p.value());
            println!("root = {}", trail.root().residue());
            println!("order = {}", root_order);
            let factors = trail
                .factors()
                .iter()
                .map(|f| format!("{}^{}", f.base().value(), f.exponent()))
                .collect::<Vec<_>>()
                .join(" * ");
            println!("factors = {}", or_none(&factors));
            println!("witnesses = {}", or_none(&join(&witnesses)));
        }
        Format::Json => {
            let factors: Vec<serde_json::Value> = trail
                .factors()
                .iter()
                .map(|f| serde_json::json!({ "q": f.base().value(), "n": f.exponent() }))
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "p": p.value(),
                    "root": trail.root().residue(),
                    "order": root_order,
                    "factors": factors,
                    "witnesses": witnesses,
                })
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(g: u64, p: u64, format: Format) -> Result<ExitCode, Error> {
    let p = Prime::new(p)?;
    let candidate = p.reduce(g);
    let pass = is_primitive_root(candidate);
    match format {
        Format::Text => {
            if pass {
                println!("{} is a primitive root of {}", g, p.value());
            } else {
                println!("{} is not a primitive root of {}", g, p.value());
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({ "p": p.value(), "g": g, "pass": pass })
            );
        }
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn order_cmd(a: u64, p: u64, format: Format) -> Result<ExitCode, Error> {
    let p = Prime::new(p)?;
    let a_reduced = p.reduce(a);
    let trace = all_powers(a_reduced)?;
    let powers: Vec<u64> = trace.entries().iter().map(|e| e.residue()).collect();
    match format {
        Format::Text => {
            println!("order({} mod {}) = {}", a, p.value(), trace.len());
            println!("trace = {}", join(&powers));
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "p": p.value(),
                    "a": a,
                    "order": trace.len(),
                    "trace": powers,
                })
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn witness(q: u64, n: u64, p: u64, format: Format) -> Result<ExitCode, Error> {
    let q = Prime::new(q)?;
    let p = Prime::new(p)?;
    let w = witness_with_order(q, n, p)?;
    let w_order = order(w)?;
    match format {
        Format::Text => {
            println!(
                "witness(q={}, n={}, p={}) = {}",
                q.value(),
                n,
                p.value(),
                w.residue()
            );
            println!("order = {}", w_order);
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "p": p.value(),
                    "q": q.value(),
                    "n": n,
                    "witness": w.residue(),
                    "order": w_order,
                })
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn roots(p: u64, coeffs: &[u64], format: Format) -> Result<ExitCode, Error> {
    let p = Prime::new(p)?;
    let as_i64: Vec<i64> = coeffs.iter().map(|&c| c as i64).collect();
    let poly = IntPolynomial::from_i64(&as_i64).reduce_mod(p).normalized();
    if poly.is_empty() {
        return Err(Error::Domain(
            "the polynomial is zero mod p, so every residue is a root",
        ));
    }
    let roots: Vec<u64> = poly.roots(p)?.iter().map(|r| r.residue()).collect();
    match format {
        Format::Text => {
            println!("polynomial = {:?} (mod {})", coeffs, p.value());
            println!("roots = {}", or_none(&join(&roots)));
            println!("count = {}", roots.len());
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "p": p.value(),
                    "coeffs": coeffs,
                    "roots": roots,
                    "count": roots.len(),
                })
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn selftest(bound: u64, format: Format) -> Result<ExitCode, Error> {
    let results = run_selftest(bound);
    let all_pass = results.iter().all(|r| r.pass);
    match format {
        Format::Text => {
            for r in &results {
                let tag = if r.pass { "PASS" } else { "FAIL" };
                println!("{} {} ({})", tag, r.name, r.detail);
            }
            let passed = results.iter().filter(|r| r.pass).count();
            println!(
                "selftest: {}/{} properties passed (bound {})",
                passed,
                results.len(),
                bound
            );
        }
        Format::Json => {
            let properties: Vec<serde_json::Value> = results
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "property": r.name,
                        "pass": r.pass,
                        "detail": r.detail,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "bound": bound,
                    "pass": all_pass,
                    "properties": properties,
                })
            );
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn join(items: &[u64]) -> String {
    items
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn or_none(s: &str) -> &str {
    if s.is_empty() {
        "(none)"
    } else {
        s
    }
}
