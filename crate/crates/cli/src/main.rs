//! `ordcert` command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 mathematical inconsistency, 3 resource cap.

mod cache;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ordcert::certifier::{self, BoundKind, FamilyDescriptor, PrimeReport};
use ordcert::cyclotomic::{cyclotomic_norm, norm, residue_places};
use ordcert::frey::{frey_curve_at_place, h_polynomial, FreyData, ParameterClass, Signature};
use ordcert::parallel::Execution;
use ordcert::supersingular::{DEFAULT_POINT_COUNT_CAP, DEFAULT_SUPERSINGULAR_CAP};
use ordcert::Error;

#[derive(Parser, Debug)]
#[command(name = "ordcert", version, about = "Certify good ordinary reduction along cyclotomic towers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Supersingular j-invariants in characteristic p.
    Supersingular {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_SUPERSINGULAR_CAP)]
        cap: u64,
        #[command(flatten)]
        io: Io,
    },
    /// Certificate for a family: threshold past which every level is ordinary above p.
    Certify {
        #[command(flatten)]
        fam: Family,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 7)]
        rmin: u64,
        #[arg(long, value_enum, default_value_t = Bound::Refined)]
        bound: Bound,
        #[command(flatten)]
        io: Io,
    },
    /// Norm of h(xi_r) from Q(zeta_r), and from Q(xi_r), for one parameter class.
    Norm {
        #[arg(long)]
        r: u64,
        #[arg(long, value_parser = parse_signature)]
        k: Signature,
        #[arg(long, value_parser = parse_class)]
        ab: ParameterClass,
        #[command(flatten)]
        io: Io,
    },
    /// Per-place statuses at one level.
    Check {
        #[command(flatten)]
        fam: Family,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long)]
        r: u64,
        /// Restrict to one parameter class.
        #[arg(long, value_parser = parse_class)]
        ab: Option<ParameterClass>,
        #[command(flatten)]
        io: Io,
    },
    /// Traces of Frobenius by exhaustive point counting.
    Trace {
        #[command(flatten)]
        fam: Family,
        #[arg(long)]
        r: u64,
        #[arg(long, value_parser = parse_class)]
        ab: ParameterClass,
        #[arg(long, default_value_t = DEFAULT_POINT_COUNT_CAP)]
        cap: u64,
        #[command(flatten)]
        io: Io,
    },
    /// Dump the family polynomials for one parameter class.
    Frey {
        #[arg(long, value_parser = parse_signature)]
        k: Signature,
        #[arg(long, value_parser = parse_class)]
        ab: ParameterClass,
    },
}

#[derive(Args, Debug)]
struct Family {
    #[arg(long, value_enum, default_value_t = FamilyName::Frey)]
    family: FamilyName,
    #[arg(long, value_parser = parse_signature)]
    k: Signature,
}

#[derive(Args, Debug)]
struct Io {
    /// Cache directory; overrides ORDCERT_CACHE_DIR.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyName {
    Frey,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Bound {
    Eq2,
    Refined,
}

impl From<Bound> for BoundKind {
    fn from(b: Bound) -> Self {
        match b {
            Bound::Eq2 => BoundKind::Eq2,
            Bound::Refined => BoundKind::Refined,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_class(s: &str) -> Result<ParameterClass, String> {
    let (a, b) = s.split_once(',').ok_or("expected `a,b`")?;
    let a = a.trim().parse::<i64>().map_err(|e| e.to_string())?;
    let b = b.trim().parse::<i64>().map_err(|e| e.to_string())?;
    ParameterClass::of(a, b).map_err(|e| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconsistency(_) => 2,
        Error::CapExceeded { .. } | Error::DegreeBoundTooLarge { .. } | Error::FieldTooLarge { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn run(cmd: Command) -> ordcert::Result<String> {
    match cmd {
        Command::Supersingular { p, cap, io } => {
            let ss = cache::supersingular(p, cap, io.cache.as_deref())?;
            Ok(match io.format {
                Some(Format::Json) => json(&serde_json::json!({
                    "p": p,
                    "count": ss.count(),
                    "coefficients": ss.polynomial().raw_coefficients(),
                })),
                _ => format!("count={}, poly={}\n", ss.count(), ss.polynomial()),
            })
        }
        Command::Certify { fam, p, rmin, bound, io } => {
            let desc = descriptor(&fam, p)?;
            let ss = cache::supersingular(p, DEFAULT_SUPERSINGULAR_CAP, io.cache.as_deref())?;
            let cert = certifier::certify_with(&desc, rmin, bound.into(), &ss, Execution::default())?;
            Ok(match io.format {
                Some(Format::Text) => {
                    let mut s = format!(
                        "family={} k={} p={} bound={} d={} r_min={}\n",
                        cert.family,
                        fam.k,
                        cert.p,
                        cert.bound_kind,
                        cert.d,
                        cert.r_min
                    );
                    for rep in &cert.exceptional {
                        s += &report_text(rep);
                    }
                    let _ = writeln!(s, "threshold={}", cert.threshold);
                    s
                }
                _ => json(&cert),
            })
        }
        Command::Norm { r, k, ab, io } => {
            let h = h_polynomial(k, ab);
            let n = cyclotomic_norm(r, &h)?;
            let real = norm(r, &h)?;
            Ok(match io.format {
                Some(Format::Json) => json(&serde_json::json!({
                    "r": r,
                    "norm": n.magnitude().to_string(),
                    "sign": n.sign(),
                    "real_norm": real.value.to_string(),
                })),
                _ => format!("{n} real_norm={}\n", real.value),
            })
        }
        Command::Check { fam, p, r, ab, io } => {
            let mut desc = descriptor(&fam, p)?;
            if let Some(cls) = ab {
                desc.classes.retain(|c| c.label == cls.to_string());
            }
            let ss = cache::supersingular(p, DEFAULT_SUPERSINGULAR_CAP, io.cache.as_deref())?;
            let rep = certifier::check_at_prime(&desc, r, &ss)?;
            Ok(match io.format {
                Some(Format::Json) => json(&rep),
                _ => report_text(&rep),
            })
        }
        Command::Trace { fam, r, ab, cap, io } => {
            descriptor(&fam, 3)?;
            let mut rows = Vec::new();
            for place in residue_places(r, 3)? {
                let curve = frey_curve_at_place(fam.k, ab, &place)?;
                let a = curve.trace_of_frobenius(cap)?;
                rows.push((place.degree(), a));
            }
            Ok(match io.format {
                Some(Format::Json) => json(&serde_json::json!({
                    "r": r,
                    "class": ab.to_string(),
                    "places": rows.iter().map(|&(f, a)| serde_json::json!({"degree": f, "trace": a})).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut s = String::new();
                    for (i, (f, a)) in rows.iter().enumerate() {
                        let kind = if a.rem_euclid(3) == 0 { "supersingular" } else { "ordinary" };
                        let _ = writeln!(s, "place {i} degree={f} trace={a} mod3={} {kind}", a.rem_euclid(3));
                    }
                    s
                }
            })
        }
        Command::Frey { k, ab } => Ok(json(&FreyData::new(k, ab))),
    }
}

fn descriptor(fam: &Family, p: u64) -> ordcert::Result<FamilyDescriptor> {
    match fam.family {
        FamilyName::Frey => FamilyDescriptor::frey(fam.k, p),
    }
}

fn report_text(rep: &PrimeReport) -> String {
    let mut s = String::new();
    for (i, place) in rep.places.iter().enumerate() {
        let cols: Vec<String> = place.class_statuses.iter().map(|c| format!("{} {}", c.class, c.status)).collect();
        let _ = writeln!(s, "r={} place {i} degree={}: {}", rep.r, place.degree, cols.join(", "));
    }
    s
}
