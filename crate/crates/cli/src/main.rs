//! `mq`: certificates, Newton polygons, Galois groups and density runs for
//! the quartic families `x^4 + a x + b` and `x^4 + c x^3 + d`.

mod parse;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monoquartic::density::{
    decimal15, family_density, prachar_check, theta_generates_scan, DensityOptions, DensityReport,
    SieveRange, Slice, DEFAULT_SEGMENT,
};
use monoquartic::families::{Certificate, Certifier, Verdict};
use monoquartic::intpoly::check_prime;
use monoquartic::montes::{index_report_with, phi_development, polygon_shape, render_polygon, IndexOptions};
use monoquartic::quartic::{galois_group, GaloisGroup, QuarticShape};
use monoquartic::DEFAULT_SEED;
use num_bigint::BigInt;
use serde_json::json;

use parse::parse_poly;

/// The range used for the full-scale heuristic replication.
const FULL_RANGE: i64 = 2_500_000;

#[derive(Parser, Debug)]
#[command(name = "mq", version, about = "Monogenicity certificates for x^4+ax+b and x^4+cx^3+d")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Seed for randomized factoring; MQ_SEED takes precedence.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for range scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Scan [-hi, hi] instead of [lo, hi].
    #[arg(long, global = true)]
    symmetric: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify x^4 + a x + b.
    CheckF {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
    },
    /// Certify x^4 + c x^3 + d.
    CheckG {
        #[arg(long, allow_hyphen_values = true)]
        c: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        d: BigInt,
    },
    /// Certify x^4 + b x + b and classify its Galois group.
    CheckFbb {
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
    },
    /// Certify x^4 + x^3 + d and classify its Galois group.
    CheckG1d {
        #[arg(long, allow_hyphen_values = true)]
        d: BigInt,
    },
    /// Certify the resolvent cubic y^3 - 4 d y - d.
    CheckCubic {
        #[arg(long, allow_hyphen_values = true)]
        d: BigInt,
    },
    /// Galois group of a monic quartic.
    Galois {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Newton polygon of a polynomial along phi, or all polygons at p.
    Newton {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        p: BigInt,
        /// Develop along this polynomial; without it every repeated factor
        /// of the reduction is used.
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
    },
    /// Square-free densities for x^4+bx+b (f) or x^4+x^3+d (g).
    Density {
        #[command(flatten)]
        range: RangeArgs,
        /// Also run the family certificate on each candidate parameter.
        #[arg(long)]
        certify: bool,
        /// Also run the Dedekind scan on each parameter.
        #[arg(long)]
        theta: bool,
    },
    /// Square-free density in the class m mod k up to x.
    Prachar {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        x: u64,
    },
    /// Fraction of irreducible members whose root generates the ring of integers.
    ThetaScan {
        #[command(flatten)]
        range: RangeArgs,
        /// Scan [-2500000, 2500000]; a long-running job.
        #[arg(long)]
        full_range: bool,
    },
}

#[derive(Args, Debug)]
struct RangeArgs {
    /// f for x^4+bx+b, g for x^4+x^3+d.
    #[arg(long)]
    family: Slice,
    /// First parameter (inclusive).
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    lo: i64,
    /// Last parameter (inclusive).
    #[arg(long, allow_hyphen_values = true)]
    hi: i64,
    #[arg(long, default_value_t = DEFAULT_SEGMENT)]
    segment_size: u64,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] monoquartic::Error),
    #[error("cannot parse polynomial: {0}")]
    Parse(#[from] parse::ParseError),
    #[error("{0}")]
    Usage(String),
}

/// A finished computation: what to print and how it ended.
struct Outcome {
    text: String,
    /// The hypotheses failed or the input was reducible.
    negative: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, negative: false }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            if out.negative {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("mq: {e}");
            ExitCode::from(1)
        }
    }
}

fn seed(cli: &Cli) -> Result<u64, CliError> {
    match std::env::var("MQ_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("MQ_SEED={s:?} is not a u64"))),
        Err(_) => Ok(cli.seed.unwrap_or(DEFAULT_SEED)),
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let seed = seed(&cli)?;
    let certifier = Certifier { seed, ..Certifier::default() };
    let format = cli.format;
    match &cli.command {
        Command::CheckF { a, b } => Ok(certificate(&certifier.f(a, b), format)),
        Command::CheckG { c, d } => Ok(certificate(&certifier.g(c, d), format)),
        Command::CheckFbb { b } => Ok(certificate(&certifier.f_bb(b), format)),
        Command::CheckG1d { d } => Ok(certificate(&certifier.g_1d(d), format)),
        Command::CheckCubic { d } => Ok(certificate(&certifier.resolvent_cubic(d), format)),
        Command::Galois { poly } => galois(poly, format),
        Command::Newton { poly, p, phi } => newton(poly, p, phi.as_deref(), seed, format),
        Command::Density { range, certify, theta } => {
            let r = sieve_range(range, cli.symmetric)?;
            let opts = DensityOptions { segment_size: range.segment_size, certify: *certify, theta: *theta, seed };
            Ok(density(&family_density(range.family, &r, &opts), format))
        }
        Command::Prachar { m, k, x } => {
            let report = prachar_check(*m, *k, *x)?;
            Ok(Outcome::ok(match format {
                Format::Human => report.to_human(),
                Format::Json => pretty(&serde_json::to_value(&report).expect("serializes")),
                Format::Csv => format!(
                    "m,k,x,total,squarefree,density,target\n{},{},{},{},{},{},{}\n",
                    report.m,
                    report.k,
                    report.x,
                    report.density.total,
                    report.density.count,
                    decimal15(report.density.to_f64()),
                    decimal15(report.target)
                ),
            }))
        }
        Command::ThetaScan { range, full_range } => {
            let r = if *full_range { SieveRange::symmetric(FULL_RANGE)? } else { sieve_range(range, cli.symmetric)? };
            Ok(density(&theta_generates_scan(range.family, &r, seed), format))
        }
    }
}

fn sieve_range(args: &RangeArgs, symmetric: bool) -> Result<SieveRange, CliError> {
    let r = if symmetric { SieveRange::symmetric(args.hi) } else { SieveRange::inclusive(args.lo, args.hi) };
    r.map_err(|e| CliError::Usage(e.to_string()))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

fn certificate(cert: &Certificate, format: Format) -> Outcome {
    let text = match format {
        Format::Human => cert.to_human(),
        Format::Json => {
            let mut s = cert.to_json();
            s.push('\n');
            s
        }
        Format::Csv => {
            let params: Vec<String> = cert.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let group = cert.galois.as_ref().map(|g| g.group.tag()).unwrap_or("");
            format!(
                "family,params,polynomial,verdict,discriminant,galois,seed\n{},{},{},{},{},{},{}\n",
                cert.family,
                params.join(";"),
                cert.polynomial,
                cert.verdict,
                cert.discriminant,
                group,
                cert.rng_seed
            )
        }
    };
    Outcome { text, negative: cert.verdict != Verdict::MonogenicGenerator }
}

fn density(report: &DensityReport, format: Format) -> Outcome {
    eprintln!("mq: finished in {:.3} s", report.runtime.as_secs_f64());
    Outcome::ok(match format {
        Format::Human => report.to_human(),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => report.to_csv(),
    })
}

fn galois(poly: &str, format: Format) -> Result<Outcome, CliError> {
    let (h, _) = parse_poly(poly)?;
    let shape = QuarticShape::from_poly(&h)?;
    let report = galois_group(&shape);
    let text = match format {
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "polynomial  {}", h);
            let _ = writeln!(s, "irreducible {}", report.irreducibility);
            let _ = writeln!(s, "disc        {} (square: {})", report.disc, report.disc_is_square);
            let _ = writeln!(
                s,
                "resolvent   {} ({})",
                report.resolvent.display_with("y"),
                if report.resolvent_irreducible { "irreducible" } else { "reducible" }
            );
            let _ = writeln!(s, "galois      {}", report.group);
            s
        }
        Format::Json => pretty(&json!({ "polynomial": h.to_string(), "report": report })),
        Format::Csv => format!(
            "polynomial,group,discriminant,disc_is_square,resolvent_irreducible\n{},{},{},{},{}\n",
            h, report.group.tag(), report.disc, report.disc_is_square, report.resolvent_irreducible
        ),
    };
    Ok(Outcome { text, negative: report.group == GaloisGroup::NotIrreducible })
}

fn newton(poly: &str, p: &BigInt, phi: Option<&str>, seed: u64, format: Format) -> Result<Outcome, CliError> {
    let (f, var) = parse_poly(poly)?;
    let var = var.unwrap_or('x').to_string();
    check_prime(p)?;
    let Some(phi) = phi else {
        let report = index_report_with(&f, p, IndexOptions { seed, shortcuts: false })?;
        let text = match format {
            Format::Json => pretty(&serde_json::to_value(&report).expect("serializes")),
            Format::Csv => {
                let mut s = String::from("phi,multiplicity,lattice_count,ind,separable\n");
                for e in &report.entries {
                    let _ = writeln!(s, "{},{},{},{},{}", e.phi.display_with(&var), e.multiplicity, e.lattice_count, e.ind, e.separable);
                }
                s
            }
            Format::Human => {
                let mut s = String::new();
                for e in &report.entries {
                    let _ = writeln!(s, "phi = {} (multiplicity {})", e.phi.display_with(&var), e.multiplicity);
                    if let Some(poly) = &e.polygon {
                        s.push_str(&render_polygon(&poly.shape));
                        for (k, side) in poly.residuals.iter().enumerate() {
                            let coeffs: Vec<String> = side.iter().map(|c| c.display_with(&var)).collect();
                            let _ = writeln!(s, "residual {k}: [{}] separable {}", coeffs.join(", "), poly.residual_separable[k]);
                        }
                    }
                    let _ = writeln!(s, "ind_phi = {}\n", e.ind);
                }
                let _ = writeln!(
                    s,
                    "lower bound v_p(index) >= {}{}",
                    report.lower_bound,
                    if report.exact { " (exact)" } else { "" }
                );
                s
            }
        };
        return Ok(Outcome::ok(text));
    };
    let (phi, _) = parse_poly(phi)?;
    let dev = phi_development(&f, &phi)?;
    let shape = polygon_shape(&dev, p);
    let degree = phi.degree().unwrap_or(0) as u64;
    let ind = degree * shape.lattice_count();
    let text = match format {
        Format::Human => {
            let mut s = render_polygon(&shape);
            if degree > 1 {
                let _ = writeln!(s, "ind_phi = deg(phi) * {} = {ind}", shape.lattice_count());
            }
            s
        }
        Format::Json => pretty(&json!({
            "p": p.to_string(),
            "phi": phi.display_with(&var),
            "development": dev.coeffs().iter().map(|c| c.display_with(&var)).collect::<Vec<_>>(),
            "polygon": shape,
            "lattice_count": shape.lattice_count(),
            "ind": ind,
        })),
        Format::Csv => {
            let vs: Vec<String> = shape.principal_vertices().iter().map(|v| format!("({};{})", v.x, v.y)).collect();
            format!("p,phi,principal_vertices,ind\n{},{},{},{}\n", p, phi.display_with(&var), vs.join(" "), ind)
        }
    };
    Ok(Outcome::ok(text))
}
