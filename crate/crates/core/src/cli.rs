//! Command-line front end. [`run`] parses arguments, writes to the given
//! sinks and returns the process exit code, so the binary stays a one-liner.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, Expectation};
use crate::classify::{ClassProfile, Structure};
use crate::error::Error;
use crate::group::{Group, PrimeSet};
use crate::lattice::{to_dot, SubgroupLattice};
use crate::verify::{self, Options, Selector, SuiteRun};
use crate::{io, SubgroupId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_LOAD: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "modlattice", version, about = "Subgroup lattices, modular subgroups and supersolubility classes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Override the group order cap.
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<usize>,

    /// Worker threads for suite runs (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class membership and residuals of a group.
    Classify(Source),
    /// Subgroups with their embedding flags, or the cover diagram as DOT.
    Lattice {
        #[command(flatten)]
        source: Source,
        /// Only list the n-maximal subgroups.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: Option<u64>,
    },
    /// Modular and S-quasinormal counts among the n-maximal subgroups.
    Census {
        #[command(flatten)]
        source: Source,
        /// Only report depth n.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: Option<u64>,
    },
    /// Run theorem and lemma checks; exits 3 on a soundness violation.
    Verify {
        /// all, theorems, lemmas, sharpness, or a single check id such as ThmA.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Groups to check (repeatable); defaults to the standard suite.
        #[arg(long = "group", value_name = "SOURCE")]
        groups: Vec<String>,
        /// Skip conclusions whose hypothesis fails.
        #[arg(long)]
        fast: bool,
        /// Record wall-clock milliseconds in reports (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// List the standard suite with orders, prime sets and golden fields.
    Catalog,
}

#[derive(Args, Debug)]
pub struct Source {
    /// `catalog:NAME`, a path to a group JSON file, or a bare catalog name.
    pub source: String,
}

#[derive(Serialize)]
struct ClassifyOutput {
    group: String,
    order: usize,
    primes: Vec<u64>,
    #[serde(flatten)]
    profile: ClassProfile,
    residual_u_order: usize,
    residual_us_order: usize,
}

#[derive(Serialize)]
struct SubgroupRow {
    id: SubgroupId,
    order: usize,
    generators: Vec<usize>,
    normal: bool,
    modular: bool,
    quasinormal: bool,
    s_quasinormal: bool,
    subnormal: bool,
    maximal_subgroups: Vec<SubgroupId>,
}

#[derive(Serialize)]
struct CatalogRow {
    name: String,
    order: usize,
    primes: Vec<u64>,
    expected: std::collections::BTreeMap<String, Expectation>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::UnknownSelector(_) | Error::BadDepth(_) | Error::BadParameters(_) => EXIT_USAGE,
                _ => EXIT_LOAD,
            }
        }
    }
}

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> crate::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}").map_err(|e| Error::Load(e.to_string()))
}

fn emit(out: &mut dyn Write, text: std::fmt::Arguments) -> crate::Result<()> {
    out.write_fmt(text).map_err(|e| Error::Load(e.to_string()))
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => { emit($out, format_args!("{}\n", format_args!($($arg)*)))? };
}

fn execute(cli: &Cli, out: &mut dyn Write) -> crate::Result<i32> {
    let cap = cli.max_order;
    match &cli.command {
        Command::Classify(src) => {
            let g = io::resolve(&src.source, cap)?;
            classify(cli.format, &g, out)?;
        }
        Command::Lattice { source, n } => {
            let g = io::resolve(&source.source, cap)?;
            lattice(cli.format, &g, n.map(|n| n as usize), out)?;
        }
        Command::Census { source, n } => {
            let g = io::resolve(&source.source, cap)?;
            let lat = SubgroupLattice::enumerate(&g);
            let mut c = verify::census(&lat);
            if let Some(n) = n {
                c.rows.retain(|r| r.n as u64 == *n);
            }
            if cli.format == Format::Json {
                json(out, &c)?;
            } else {
                let show = |m: Option<usize>| m.map_or("none".to_string(), |m| m.to_string());
                say!(out, "{} (order {})", c.group, g.order());
                say!(out, "{:>4} {:>6} {:>8} {:>14} {:>8}", "n", "count", "modular", "s-quasinormal", "neither");
                for r in &c.rows {
                    say!(out, "{:>4} {:>6} {:>8} {:>14} {:>8}", r.n, r.count, r.modular, r.s_quasinormal, r.neither);
                }
                say!(out, "min_n_all_modular={}", show(c.min_n_all_modular));
                say!(out, "min_n_all_modular_or_s_quasinormal={}", show(c.min_n_all_modular_or_s_quasinormal));
            }
        }
        Command::Verify { suite, groups, fast, timings } => {
            let selector: Selector = suite.parse()?;
            let groups: Vec<Group> = if groups.is_empty() {
                catalog::standard_suite()
                    .iter()
                    .map(|e| catalog::construct_with_cap(&e.name, cap.unwrap_or(crate::group::DEFAULT_MAX_ORDER)))
                    .collect::<crate::Result<_>>()?
            } else {
                groups.iter().map(|s| io::resolve(s, cap)).collect::<crate::Result<_>>()?
            };
            let opts = Options { fast: *fast, timings: *timings };
            let run = verify::run_suite(&groups, &selector, cli.jobs, opts)?;
            render_run(cli.format, &run, out)?;
            if run.violations().next().is_some() {
                return Ok(EXIT_VIOLATION);
            }
        }
        Command::Catalog => {
            let rows = catalog::standard_suite()
                .into_iter()
                .map(|e| {
                    let g = e.construct()?;
                    Ok(CatalogRow {
                        order: g.order(),
                        primes: PrimeSet::of(g.order() as u64).as_slice().to_vec(),
                        name: e.name,
                        expected: e.expected,
                    })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            if cli.format == Format::Json {
                json(out, &rows)?;
            } else {
                for r in &rows {
                    let fields: Vec<String> = r.expected.iter().map(|(k, v)| format!("{k}={}", v.value)).collect();
                    say!(out, "{:<16} {:>5}  π={:?}  {}", r.name, r.order, r.primes, fields.join(" "));
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn classify(format: Format, g: &Group, out: &mut dyn Write) -> crate::Result<()> {
    let lat = SubgroupLattice::enumerate(g);
    let s = Structure::of_group(&lat);
    let output = ClassifyOutput {
        group: g.name().to_string(),
        order: g.order(),
        primes: s.prime_spectrum().as_slice().to_vec(),
        profile: s.profile(),
        residual_u_order: lat.order_of(s.residual_u()?),
        residual_us_order: lat.order_of(s.residual_us()?),
    };
    if format == Format::Json {
        return json(out, &output);
    }
    say!(out, "{} (order {}, π = {:?})", output.group, output.order, output.primes);
    let value = serde_json::to_value(&output.profile).expect("profile serializes");
    for (k, v) in value.as_object().expect("flat object") {
        say!(out, "  {k} = {v}");
    }
    say!(out, "  |G^U| = {}", output.residual_u_order);
    say!(out, "  |G^Us| = {}", output.residual_us_order);
    Ok(())
}

fn lattice(format: Format, g: &Group, n: Option<usize>, out: &mut dyn Write) -> crate::Result<()> {
    let lat = SubgroupLattice::enumerate(g);
    if format == Format::Dot {
        emit(out, format_args!("{}", to_dot(&lat)))?;
        return Ok(());
    }
    let ids: Vec<SubgroupId> = match n {
        Some(n) => lat.n_maximal_set(n)?,
        None => (0..lat.len()).collect(),
    };
    let rows: Vec<SubgroupRow> = ids
        .into_iter()
        .map(|h| SubgroupRow {
            id: h,
            order: lat.order_of(h),
            generators: lat.generators_of(h).to_vec(),
            normal: lat.is_normal(h),
            modular: lat.is_modular(h),
            quasinormal: lat.is_quasinormal(h),
            s_quasinormal: lat.is_s_quasinormal(h),
            subnormal: lat.is_subnormal(h),
            maximal_subgroups: lat.maximal_subgroups(h).to_vec(),
        })
        .collect();
    if format == Format::Json {
        return json(out, &rows);
    }
    say!(out, "{} (order {}, {} subgroups)", g.name(), g.order(), lat.len());
    say!(out, "{:>4} {:>6}  flags  generators", "id", "order");
    for r in &rows {
        let flag = |b: bool, c: char| if b { c } else { '.' };
        let flags: String = [
            flag(r.normal, 'N'),
            flag(r.modular, 'M'),
            flag(r.quasinormal, 'Q'),
            flag(r.s_quasinormal, 'S'),
            flag(r.subnormal, 's'),
        ]
        .iter()
        .collect();
        say!(out, "{:>4} {:>6}  {flags}  {:?}", r.id, r.order, r.generators);
    }
    say!(out, "flags: N normal, M modular, Q quasinormal, S S-quasinormal, s subnormal");
    Ok(())
}

fn render_run(format: Format, run: &SuiteRun, out: &mut dyn Write) -> crate::Result<()> {
    if format == Format::Json {
        return json(out, run);
    }
    for r in &run.reports {
        let mark = if r.is_violation() { "VIOLATION" } else { "ok" };
        say!(out, "{:<16} {:<14} hypothesis={:<8} conclusion={:<13} {mark}", r.group, r.theorem, r.hypothesis, r.conclusion);
        for w in &r.witnesses {
            say!(out, "    {w}");
        }
    }
    let s = run.summary;
    say!(out, "pass={} fail={} vacuous={}", s.pass, s.fail, s.vacuous);
    Ok(())
}
