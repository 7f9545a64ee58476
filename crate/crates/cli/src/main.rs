//! `flagweak`: explore and check the flag weak order on colored permutation groups.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage or parse error, 3 size cap exceeded.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use flagweak::chains::{diameter, gamma_graph, is_connected, DEFAULT_CHAIN_CAP};
use flagweak::checks::{run_all, run_suite, CheckOptions, Suite};
use flagweak::export::{chain_graph_to_dot, hasse_to_dot, hasse_to_json, mobius_rows};
use flagweak::genfun::{
    bivariate_closed_form, bivariate_genfun, finv_genfun, prod_q_int, wdes_closed_form, wdes_genfun,
};
use flagweak::group::DEFAULT_ELEMENT_CAP;
use flagweak::lattice::{classify_homotopy, mobius};
use flagweak::order::{build_hasse, build_interval_capped, HasseDiagram};
use flagweak::presentation::{
    a_generators, closure_order, standard_generators, verify_relations_a, verify_relations_b,
    verify_remark_derivation, RelationReport, DEFAULT_CLOSURE_CAP,
};
use flagweak::{ColoredPermutation, Error, GroupContext};

#[derive(Parser)]
#[command(name = "flagweak", version, about = "Flag weak order on colored permutation groups G(r,n)")]
struct Cli {
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GroupArgs {
    /// Number of colors.
    #[arg(long)]
    r: u32,
    /// Number of letters.
    #[arg(long)]
    n: usize,
    /// Largest group order accepted.
    #[arg(long, env = "FLAGWEAK_CAP", default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: u64,
    /// Print elements in signed notation when r <= 2.
    #[arg(long)]
    signed: bool,
}

#[derive(Args, Clone)]
struct IntervalArgs {
    /// Bottom of the interval (default: identity).
    #[arg(long, allow_hyphen_values = true)]
    from: Option<String>,
    /// Top of the interval (default: the maximum element).
    #[arg(long, allow_hyphen_values = true)]
    to: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Lattice,
    Order,
    Mobius,
    Tits,
    Genfun,
    Present,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Distribution {
    Finv,
    Wdes,
    Bivariate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PresentAction {
    Verify,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Hasse diagram of the group or of an interval.
    Hasse {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        interval: IntervalArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run oracle-agreement suites.
    Check {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        group: GroupArgs,
        /// Intervals with more maximal chains are skipped by the tits suite.
        #[arg(long, default_value_t = CheckOptions::default().interval_chain_cap)]
        chain_cap: u128,
    },
    /// Möbius function of one interval, or of every comparable pair.
    Mobius {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        interval: IntervalArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Maximal chains of an interval and their move graph.
    Chains {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        interval: IntervalArgs,
        /// Also compute the diameter of the chain graph.
        #[arg(long)]
        diameter: bool,
        /// Largest number of maximal chains accepted.
        #[arg(long, default_value_t = DEFAULT_CHAIN_CAP)]
        chain_cap: u128,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generating functions over the group, checked against their closed forms.
    Genfun {
        #[arg(value_enum)]
        which: Distribution,
        #[command(flatten)]
        group: GroupArgs,
        /// Emit coefficient arrays as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Relation checks for the group presentations.
    Present {
        #[arg(value_enum)]
        action: PresentAction,
        #[command(flatten)]
        group: GroupArgs,
    },
}

enum Failure {
    Check(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

type Outcome = Result<(), Failure>;

fn context(group: &GroupArgs) -> Result<GroupContext, Error> {
    GroupContext::with_cap(group.r, group.n, group.cap)
}

fn endpoints(
    ctx: GroupContext,
    interval: &IntervalArgs,
) -> Result<(ColoredPermutation, ColoredPermutation), Error> {
    let from = match &interval.from {
        Some(s) => ctx.parse(s)?,
        None => ctx.identity(),
    };
    let to = match &interval.to {
        Some(s) => ctx.parse(s)?,
        None => ctx.mu0(),
    };
    Ok((from, to))
}

fn diagram(ctx: GroupContext, interval: &IntervalArgs) -> Result<HasseDiagram, Error> {
    if interval.from.is_none() && interval.to.is_none() {
        return Ok(build_hasse(ctx));
    }
    let (from, to) = endpoints(ctx, interval)?;
    build_interval_capped(&from, &to, usize::MAX)
}

fn cmd_hasse(out: &mut dyn Write, group: &GroupArgs, interval: &IntervalArgs, format: Format) -> Outcome {
    let ctx = context(group)?;
    let hasse = diagram(ctx, interval)?;
    match format {
        Format::Dot => out.write_all(hasse_to_dot(&hasse, group.signed).as_bytes())?,
        Format::Json => {
            serde_json::to_writer(&mut *out, &hasse_to_json(&hasse))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["from", "to", "gen"])?;
            for e in hasse.edges() {
                w.write_record([
                    hasse.element(e.from).format(group.signed),
                    hasse.element(e.to).format(group.signed),
                    e.label.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "nodes={} edges={}", hasse.len(), hasse.edges().len())?;
            for (id, g) in hasse.elements().iter().enumerate() {
                writeln!(out, "{id} finv={} {}", g.finv(), g.format(group.signed))?;
            }
            for e in hasse.edges() {
                writeln!(out, "{} -> {} {}", e.from, e.to, e.label)?;
            }
        }
    }
    Ok(())
}

fn cmd_check(out: &mut dyn Write, suite: SuiteArg, group: &GroupArgs, chain_cap: u128) -> Outcome {
    let ctx = context(group)?;
    let opts = CheckOptions {
        interval_chain_cap: chain_cap,
    };
    let reports = match suite {
        SuiteArg::All => run_all(ctx, &opts),
        one => {
            let s = match one {
                SuiteArg::Lattice => Suite::Lattice,
                SuiteArg::Order => Suite::Order,
                SuiteArg::Mobius => Suite::Mobius,
                SuiteArg::Tits => Suite::Tits,
                SuiteArg::Genfun => Suite::Genfun,
                SuiteArg::Present => Suite::Present,
                SuiteArg::All => unreachable!(),
            };
            vec![run_suite(s, ctx, &opts)]
        }
    };
    for report in &reports {
        writeln!(out, "{report}")?;
    }
    match reports.iter().filter(|r| !r.passed()).count() {
        0 => Ok(()),
        k => Err(Failure::Check(format!("{k} suite(s) failed"))),
    }
}

fn sign(mu: i64) -> String {
    if mu > 0 {
        format!("+{mu}")
    } else {
        mu.to_string()
    }
}

fn cmd_mobius(out: &mut dyn Write, group: &GroupArgs, interval: &IntervalArgs, format: Format) -> Outcome {
    let ctx = context(group)?;
    if interval.from.is_none() && interval.to.is_none() {
        let rows = mobius_rows(&build_hasse(ctx), group.signed);
        if format == Format::Json {
            serde_json::to_writer(&mut *out, &rows)?;
            writeln!(out)?;
        } else {
            let mut w = csv::Writer::from_writer(&mut *out);
            for row in &rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        return Ok(());
    }
    let (from, to) = endpoints(ctx, interval)?;
    let mu = mobius(&from, &to)?;
    let class = classify_homotopy(&from, &to)?;
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "from": from.format(group.signed),
                "to": to.format(group.signed),
                "mobius": mu,
                "class": class.to_string(),
            });
            writeln!(out, "{value}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["from", "to", "mobius", "class"])?;
            w.write_record([from.format(group.signed), to.format(group.signed), mu.to_string(), class.to_string()])?;
            w.flush()?;
        }
        _ => {
            writeln!(out, "{}", sign(mu))?;
            writeln!(out, "class={class}")?;
        }
    }
    Ok(())
}

fn cmd_chains(
    out: &mut dyn Write,
    group: &GroupArgs,
    interval: &IntervalArgs,
    want_diameter: bool,
    chain_cap: u128,
    format: Format,
) -> Outcome {
    let ctx = context(group)?;
    let (from, to) = endpoints(ctx, interval)?;
    let interval = build_interval_capped(&from, &to, usize::MAX)?;
    let gamma = gamma_graph(&interval, chain_cap)?;
    if format == Format::Dot {
        out.write_all(chain_graph_to_dot(&gamma).as_bytes())?;
        return Ok(());
    }
    let mut line = format!(
        "chains={} connected={}",
        gamma.vertices().len(),
        is_connected(&gamma)
    );
    if want_diameter {
        line.push_str(&format!(" diameter={}", diameter(&gamma)));
    }
    writeln!(out, "{line}")?;
    writeln!(out, "edges={}", gamma.edges().len())?;
    if gamma.is_empirical() {
        writeln!(out, "moves=generic (empirical)")?;
    }
    Ok(())
}

fn cmd_genfun(out: &mut dyn Write, which: Distribution, group: &GroupArgs, json: bool) -> Outcome {
    let ctx = context(group)?;
    let (r, n) = (ctx.r(), ctx.n());
    let agrees = match which {
        Distribution::Finv => {
            let p = finv_genfun(ctx);
            if json {
                writeln!(out, "{}", serde_json::to_string(p.coeffs())?)?;
            } else {
                writeln!(out, "{p}")?;
            }
            p == prod_q_int(r, n)
        }
        Distribution::Wdes => {
            let p = wdes_genfun(ctx);
            if json {
                writeln!(out, "{}", serde_json::to_string(p.coeffs())?)?;
            } else {
                writeln!(out, "{p}")?;
            }
            p == wdes_closed_form(r, n)
        }
        Distribution::Bivariate => {
            let p = bivariate_genfun(ctx);
            if json {
                writeln!(out, "{}", serde_json::to_string(&p)?)?;
            } else {
                writeln!(out, "{p}")?;
            }
            p == bivariate_closed_form(r, n)
        }
    };
    if agrees {
        Ok(())
    } else {
        Err(Failure::Check("distribution differs from its closed form".into()))
    }
}

fn write_relations(out: &mut dyn Write, report: &RelationReport) -> io::Result<()> {
    for fam in &report.families {
        let status = if fam.failures == 0 { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{status} {:<3} instances={} failures={}",
            fam.relation.to_string(),
            fam.instances,
            fam.failures
        )?;
    }
    for f in &report.failures {
        writeln!(out, "  witness: {} at {:?}: {} != {}", f.relation, f.indices, f.lhs, f.rhs)?;
    }
    Ok(())
}

fn cmd_present(out: &mut dyn Write, group: &GroupArgs) -> Outcome {
    let ctx = context(group)?;
    let (r, n) = (ctx.r(), ctx.n());
    let mut ok = true;
    let report = verify_relations_b(ctx);
    ok &= report.passed();
    write_relations(out, &report)?;

    let mut order_line = |label: &str, got: u64, expected: u64| -> io::Result<bool> {
        let status = if got == expected { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {label} order={got} expected={expected}")?;
        Ok(got == expected)
    };
    let factorial: u64 = (1..=n as u64).product();
    let full = closure_order(ctx, &standard_generators(ctx), DEFAULT_CLOSURE_CAP)?;
    ok &= order_line("closure(a,b)", full, (r as u64).pow(n as u32) * factorial)?;
    if r == 2 && n >= 2 {
        let alt = closure_order(ctx, &a_generators(ctx), DEFAULT_CLOSURE_CAP)?;
        ok &= order_line("closure(a)", alt, (1u64 << (n - 1)) * factorial)?;
        let report = verify_relations_a(n)?;
        ok &= report.passed();
        write_relations(out, &report)?;
        if n >= 3 {
            let replay = verify_remark_derivation(n)?;
            ok &= replay;
            writeln!(out, "{} derivation of A4 from B1-B8", if replay { "PASS" } else { "FAIL" })?;
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check("relation check failed".into()))
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Hasse { group, interval, format } => cmd_hasse(out, group, interval, *format),
        Command::Check { suite, group, chain_cap } => cmd_check(out, *suite, group, *chain_cap),
        Command::Mobius { group, interval, format } => cmd_mobius(out, group, interval, *format),
        Command::Chains {
            group,
            interval,
            diameter,
            chain_cap,
            format,
        } => cmd_chains(out, group, interval, *diameter, *chain_cap, *format),
        Command::Genfun { which, group, json } => cmd_genfun(out, *which, group, *json),
        Command::Present { action: PresentAction::Verify, group } => cmd_present(out, group),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(2),
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e @ Error::CapExceeded { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
