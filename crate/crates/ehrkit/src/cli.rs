//! Command-line driver. [`run`] returns the process exit status:
//! 0 on success, 1 on internal failure, 2 on bad input, 3 when `--oracle`
//! disagrees with the generating-function answer.

use std::ffi::OsString;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use ehrkit_core::barvinok::polytope_rgf;
use ehrkit_core::ehrhart::{is_period, min_period, quasipolynomial, DefaultFactoring, DilationCounter, PipelineOptions};
use ehrkit_core::oracle::{brute_min_period, brute_quasipolynomial, enumerate, expand_dense, vertex_denominator, BruteCounter};
use ehrkit_core::polytope::Polytope;
use ehrkit_core::rgf::specialize_all_ones;
use ehrkit_core::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::format::{parse_polytope, write_polytope, FormatError, QuasiPolynomialJson, ShortRgfJson};

#[derive(Debug, Parser)]
#[command(name = "ehrkit", version, about = "Ehrhart quasi-polynomials and their periods")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Recompute the answer by brute-force enumeration and exit with status 3 on disagreement.
    #[arg(long, global = true)]
    oracle: bool,
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Exponent box LO:HI (in every coordinate) for dense output of dump-gf.
    #[arg(long, global = true, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<(i64, i64)>,
    /// Largest denominator for which quasipoly expands constituents.
    #[arg(long, global = true, default_value_t = PipelineOptions::default().dense_limit)]
    dense_limit: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of lattice points in tP.
    Count {
        #[arg(long)]
        t: BigInt,
        file: PathBuf,
    },
    /// Constituents of the Ehrhart quasi-polynomial.
    Quasipoly { file: PathBuf },
    /// Whether n is a period of the Ehrhart quasi-polynomial.
    Period {
        #[arg(long)]
        n: BigInt,
        file: PathBuf,
    },
    /// Minimum period of the Ehrhart quasi-polynomial.
    MinPeriod { file: PathBuf },
    /// Least D such that DP has integral vertices.
    Denominator { file: PathBuf },
    /// Short rational generating function of the lattice points.
    DumpGf { file: PathBuf },
    /// Write an H-representation of a known instance.
    #[command(subcommand)]
    Gen(Family),
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Pentagon with denominator D and minimum period s.
    Pentagon {
        #[arg(long = "D")]
        big_d: i64,
        #[arg(long)]
        s: i64,
    },
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err("LO exceeds HI".into());
    }
    Ok((lo, hi))
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Input(_) => 2,
            Failure::Mismatch(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Internal(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let m = e.to_string();
        match e {
            Error::DimensionMismatch { .. }
            | Error::NoInequalities
            | Error::NotAPolytope
            | Error::InvalidArgument(_)
            | Error::ShiftOutOfRange { .. }
            | Error::NonPositivePeriod
            | Error::ExpansionGuard { .. } => Failure::Input(m),
            Error::OracleMismatch(_) => Failure::Mismatch(m),
            _ => Failure::Internal(m),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Core(e) => e.into(),
            e => Failure::Input(e.to_string()),
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// result to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = catch_unwind(AssertUnwindSafe(|| execute(&cli)))
        .unwrap_or_else(|_| Err(Failure::Internal("internal assertion failed".into())));
    match result {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn load(path: &Path) -> Result<Polytope, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_polytope(&text)?)
}

fn check(agree: bool, what: &str, ours: &dyn std::fmt::Display, brute: &dyn std::fmt::Display) -> Result<(), Failure> {
    if agree {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{what}: generating functions give {ours}, enumeration gives {brute}")))
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let opts = PipelineOptions { dense_limit: cli.dense_limit, ..PipelineOptions::default() };
    match &cli.command {
        Command::Count { t, file } => {
            if t.is_negative() {
                return Err(Failure::Input("t must be nonnegative".into()));
            }
            let p = load(file)?;
            let c = DilationCounter::new(&p).count(t);
            if cli.oracle {
                let small = t.to_u64().ok_or_else(|| Failure::Input("--oracle needs t below 2^64".into()))?;
                let brute = BruteCounter::new(&p).count(small);
                check(c == BigInt::from(brute), "count", &c, &brute)?;
            }
            Ok(if cli.json { json!({"t": t.to_string(), "count": c.to_string()}).to_string() } else { c.to_string() })
        }
        Command::Quasipoly { file } => {
            let p = load(file)?;
            let q = quasipolynomial(&p, &opts)?;
            if cli.oracle {
                let brute = brute_quasipolynomial(&p)?;
                check(q == brute, "quasi-polynomial", &q.period, &brute.period)?;
            }
            if cli.json {
                return Ok(serde_json::to_string(&QuasiPolynomialJson::from_quasipolynomial(&q)).expect("serializable"));
            }
            let mut lines = vec![format!("period {}", q.period)];
            for (i, c) in q.constituents.iter().enumerate() {
                let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                lines.push(format!("{i}: {}", cs.join(" ")));
            }
            Ok(lines.join("\n"))
        }
        Command::Period { n, file } => {
            if !n.is_positive() {
                return Err(Failure::Input("n must be positive".into()));
            }
            let p = load(file)?;
            let yes = is_period(&p, n)?;
            if cli.oracle {
                let brute = brute_quasipolynomial(&p)?;
                let k = (n % BigInt::from(brute.period)).to_usize().expect("residue fits");
                let len = brute.constituents.len();
                let rotates = (0..len).all(|i| brute.constituents[i] == brute.constituents[(i + k) % len]);
                check(yes == rotates, "period", &yes, &rotates)?;
            }
            Ok(if cli.json {
                json!({"n": n.to_string(), "period": yes}).to_string()
            } else if yes {
                "yes".into()
            } else {
                "no".into()
            })
        }
        Command::MinPeriod { file } => {
            let p = load(file)?;
            let m = min_period(&p, &DefaultFactoring)?;
            if cli.oracle {
                let brute = brute_min_period(&brute_quasipolynomial(&p)?);
                check(m == BigInt::from(brute), "minimum period", &m, &brute)?;
            }
            Ok(if cli.json { json!({"min_period": m.to_string()}).to_string() } else { m.to_string() })
        }
        Command::Denominator { file } => {
            let p = load(file)?;
            let d = p.denominator();
            if cli.oracle {
                let brute = vertex_denominator(&p);
                check(d == BigInt::from(brute), "denominator", &d, &brute)?;
            }
            Ok(if cli.json { json!({"denominator": d.to_string()}).to_string() } else { d.to_string() })
        }
        Command::DumpGf { file } => {
            let p = load(file)?;
            let f = polytope_rgf(&p);
            let Some((lo, hi)) = cli.window else {
                if cli.oracle {
                    let total = specialize_all_ones(&f)?;
                    let brute = enumerate(&p).len();
                    check(total == BigInt::from(brute).into(), "lattice point total", &total, &brute)?;
                }
                return Ok(serde_json::to_string(&ShortRgfJson::from_rgf(&f)?).expect("serializable"));
            };
            let d = p.dim();
            let s = expand_dense(&f, &vec![lo; d], &vec![hi; d]);
            if cli.oracle {
                let inside: Vec<Vec<i64>> = enumerate(&p)
                    .iter()
                    .map(|x| x.iter().map(|v| v.to_i64().expect("small coordinates")).collect())
                    .filter(|x: &Vec<i64>| x.iter().all(|v| (lo..=hi).contains(v)))
                    .collect();
                let indicator = inside.len() == s.coeffs.len()
                    && inside.iter().all(|x| s.coeffs.get(x).is_some_and(|c| c.is_one()));
                check(indicator, "window expansion", &s.coeffs.len(), &inside.len())?;
            }
            let entries = s.coeffs.iter().filter(|(_, c)| !c.is_zero());
            if cli.json {
                let cs: Vec<_> = entries.map(|(e, c)| json!({"e": e, "c": c.to_string()})).collect();
                return Ok(json!({"lo": s.lo, "hi": s.hi, "coefficients": cs}).to_string());
            }
            let lines: Vec<String> = entries
                .map(|(e, c)| {
                    let es: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                    format!("{} {c}", es.join(" "))
                })
                .collect();
            Ok(lines.join("\n"))
        }
        Command::Gen(Family::Pentagon { big_d, s }) => Ok(write_polytope(&Polytope::pentagon(*big_d, *s)?)?),
    }
}
