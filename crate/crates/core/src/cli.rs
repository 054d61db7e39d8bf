//! Command-line front end.

use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, ToPrimitive};
use serde_json::json;

use crate::einstein::{
    analyze, default_eps, existence_certificate, published_rows, table4, Coord, EinsteinSolution, ExistenceCertificate, Family,
    Kind, SpaceReport, SpaceSpec, Table4Row,
};
use crate::flag::{classify, ClassifiedSpace};
use crate::polyalg::Rational;
use crate::rootsystem::{build_root_system, LieType, RootSystem, Series};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNRESOLVED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "flagmetric", version, about = "Invariant Einstein metrics on flag manifolds with five isotropy summands")]
pub struct Cli {
    /// Worker threads for concurrent solves (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List painted diagrams with a given number of isotropy summands.
    Classify {
        #[arg(long = "type")]
        lie_type: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 5)]
        summands: usize,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Find all invariant Einstein metrics of a space: E6A, E7A or so:m,p.
    Solve {
        #[arg(long)]
        space: String,
        /// Interval width for refined coordinates, e.g. 2^-80 or 1e-20.
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Sign-change certificate for non-Kähler metrics on SO(m).
    Certify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Emit a counts table.
    Table {
        #[arg(long, default_value = "table4")]
        name: String,
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Print a root system as JSON.
    DumpRoots {
        #[arg(long = "type")]
        lie_type: String,
        #[arg(long)]
        rank: Option<usize>,
    },
}

fn lie_type(name: &str, rank: Option<usize>) -> Result<LieType, Error> {
    let series: Series = name.parse()?;
    match rank {
        Some(r) => LieType::new(series, r),
        None => LieType::exceptional(series),
    }
}

fn root_system(name: &str, rank: Option<usize>) -> Result<Arc<RootSystem>, Error> {
    Ok(Arc::new(build_root_system(lie_type(name, rank)?)?))
}

pub fn parse_space(s: &str) -> Result<Family, Error> {
    match s {
        "E6A" | "e6a" => Ok(Family::E6),
        "E7A" | "e7a" => Ok(Family::E7),
        _ => {
            let rest = s
                .strip_prefix("so:")
                .or_else(|| s.strip_prefix("SO:"))
                .ok_or_else(|| Error::Input(format!("unknown space `{s}`")))?;
            let (m, p) = rest.split_once(',').ok_or_else(|| Error::Input(format!("expected so:m,p, got `{s}`")))?;
            let m = m.trim().parse().map_err(|_| Error::Input(format!("bad m in `{s}`")))?;
            let p = p.trim().parse().map_err(|_| Error::Input(format!("bad p in `{s}`")))?;
            crate::einstein::so_admissible(m, p)?;
            Ok(Family::So { m, p })
        }
    }
}

pub fn parse_eps(s: Option<&str>) -> Result<Rational, Error> {
    let Some(s) = s else { return Ok(default_eps()) };
    let bad = || Error::Input(format!("bad eps `{s}`"));
    let r = if let Some(e) = s.strip_prefix("2^-") {
        let e: usize = e.parse().map_err(|_| bad())?;
        Rational::new(BigInt::one(), BigInt::one() << e)
    } else {
        let v: f64 = s.parse().map_err(|_| bad())?;
        Rational::from_f64(v).ok_or_else(bad)?
    };
    if r <= Rational::from_integer(0.into()) || r >= Rational::one() {
        return Err(bad());
    }
    Ok(r)
}

/// Ten significant digits plus the half-width of the enclosing interval.
fn show(c: &Coord) -> String {
    match c {
        Coord::Exact(r) => r.to_string(),
        Coord::Approx(i) => {
            let half = (i.width() / Rational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN);
            format!("{:.10} ± {:.1e}", significant(i.mid_f64(), 10), half)
        }
    }
}

fn significant(v: f64, digits: i32) -> f64 {
    if v == 0.0 {
        return 0.0;
    }
    let scale = 10f64.powi(digits - 1 - v.abs().log10().floor() as i32);
    (v * scale).round() / scale
}

fn kind_label(s: &EinsteinSolution) -> &'static str {
    match (s.kind, s.is_symmetric()) {
        (Kind::Kahler, _) => "Kähler",
        (Kind::NonKahler, true) => "non-Kähler (a)",
        (Kind::NonKahler, false) => "non-Kähler (b)",
    }
}

fn render_classify(spaces: &[ClassifiedSpace], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => s = serde_json::to_string_pretty(spaces).expect("serializable") + "\n",
        Format::Md => {
            s.push_str("| painted | kind | dims |\n|---|---|---|\n");
            for c in spaces {
                let p: Vec<String> = c.painted.iter().map(|l| format!("a{l}")).collect();
                s.push_str(&format!("| {{{}}} | {} | {:?} |\n", p.join(", "), c.kind, c.dims));
            }
        }
        Format::Csv => {
            s.push_str("painted,kind,dims\n");
            for c in spaces {
                let p: Vec<String> = c.painted.iter().map(|l| l.to_string()).collect();
                let d: Vec<String> = c.dims.iter().map(|l| l.to_string()).collect();
                s.push_str(&format!("{},{},{}\n", p.join(" "), c.kind, d.join(" ")));
            }
        }
    }
    s
}

fn render_solve(r: &SpaceReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("serializable") + "\n",
        Format::Md => {
            let mut s = format!("{}: dims {:?}\n\n| # | kind | x1 | x2 | x3 | x4 | x5 |\n|---|---|---|---|---|---|---|\n", r.space, r.dims);
            for (i, sol) in r.solutions.iter().enumerate() {
                let c: Vec<String> = sol.coeffs.iter().map(show).collect();
                s.push_str(&format!("| {} | {} | {} |\n", i + 1, kind_label(sol), c.join(" | ")));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("index,kind,branch,x1,x2,x3,x4,x5,residual_bound\n");
            for (i, sol) in r.solutions.iter().enumerate() {
                let c: Vec<String> = sol.approx().iter().map(|v| format!("{v:.16e}")).collect();
                let branch = if sol.is_symmetric() { "x5_eq_x1" } else { "x5_neq_x1" };
                s.push_str(&format!(
                    "{},{},{},{},{:e}\n",
                    i + 1,
                    kind_label(sol),
                    branch,
                    c.join(","),
                    sol.residual_bound.to_f64().unwrap_or(f64::NAN)
                ));
            }
            s
        }
    }
}

fn render_certificate(c: &ExistenceCertificate, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(c).expect("serializable") + "\n",
        Format::Md => {
            let mut s = format!(
                "SO({}), p = {}: eliminant degree {}, {} (at least {} positive roots)\n\n| point | sign | expected |\n|---|---|---|\n",
                c.m,
                c.p,
                c.eliminant_degree,
                if c.valid { "valid" } else { "invalid" },
                c.conclusion
            );
            for k in &c.checks {
                s.push_str(&format!("| {} | {} | {} |\n", k.point, k.sign, k.expected));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("m,p,point,sign,expected\n");
            for k in &c.checks {
                s.push_str(&format!("{},{},{},{},{}\n", c.m, c.p, k.point, k.sign, k.expected));
            }
            s
        }
    }
}

fn render_table(rows: &[Table4Row], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).expect("serializable") + "\n",
        Format::Md => {
            let mut s = String::from("| series | l | p | type a | type b | Kähler | complete |\n|---|---|---|---|---|---|---|\n");
            for r in rows {
                s.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} |\n",
                    r.series, r.rank, r.p, r.type_a, r.type_b, r.kahler, r.complete
                ));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("series,l,p,type_a,type_b,kahler,complete\n");
            for r in rows {
                s.push_str(&format!("{},{},{},{},{},{},{}\n", r.series, r.rank, r.p, r.type_a, r.type_b, r.kahler, r.complete));
            }
            s
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Input(e.to_string());
    match cli.command {
        Command::Classify { lie_type, rank, summands, format } => {
            let rs = root_system(&lie_type, rank)?;
            out.write_all(render_classify(&classify(&rs, summands), format).as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Solve { space, eps, format } => {
            let family = parse_space(&space)?;
            let eps = parse_eps(eps.as_deref())?;
            let report = analyze(&SpaceSpec::new(family)?, &eps)?;
            out.write_all(render_solve(&report, format).as_bytes()).map_err(io)?;
            for w in report.warnings.iter().chain(&report.symmetric_branch.diagnostics).chain(&report.general_branch.diagnostics) {
                writeln!(err, "warning: {w}").map_err(io)?;
            }
            for u in [&report.symmetric_branch.unresolved, &report.general_branch.unresolved].into_iter().flatten() {
                writeln!(err, "unresolved: {u}").map_err(io)?;
            }
            Ok(if report.complete { EXIT_OK } else { EXIT_UNRESOLVED })
        }
        Command::Certify { m, p, format } => {
            let c = existence_certificate(m, p)?;
            out.write_all(render_certificate(&c, format).as_bytes()).map_err(io)?;
            if let Some(f) = &c.failure {
                writeln!(err, "certificate invalid: {f}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Table { name, eps, format } => {
            if name != "table4" {
                return Err(Error::Input(format!("unknown table `{name}`")));
            }
            let eps = parse_eps(eps.as_deref())?;
            let input: Vec<(Series, usize, usize)> = published_rows().iter().map(|r| (r.0, r.1, r.2)).collect();
            let rows: Vec<Table4Row> = table4(&input, &eps).into_iter().collect::<Result<_, _>>()?;
            out.write_all(render_table(&rows, format).as_bytes()).map_err(io)?;
            Ok(if rows.iter().all(|r| r.complete) { EXIT_OK } else { EXIT_UNRESOLVED })
        }
        Command::DumpRoots { lie_type, rank } => {
            let rs = root_system(&lie_type, rank)?;
            let v = json!(rs.to_json());
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable")).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

/// Run with explicit arguments (including the program name) and sinks.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            let _ = writeln!(err, "error: --threads must be positive");
            return EXIT_USAGE;
        }
        // A second build in the same process fails harmlessly and keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e @ Error::Unresolved(_)) | Err(e @ Error::PositiveDimensional(_)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_UNRESOLVED
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn main_exit() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
