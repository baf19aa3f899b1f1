//! `tubular`: command-line front end to the tubular-core library.
//!
//! Exit codes: 0 success (verdicts such as "incompatible" included), 1 a
//! verification that did not hold, 2 usage or input error, 3 a bounded
//! search ran out, 4 an internal invariant was violated.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tubular::acceptance::run_all;
use tubular::arcs::{intersection_number, render, svg_export, Sign, SvgItem, TaggedArc, UntaggedArc};
use tubular::exchange::{explore, export_graph, GraphFormat, DEFAULT_SEARCH_HEIGHT};
use tubular::lattice::{euler, slope_of};
use tubular::quiver::{fixture, mutate_seq, mutation_class, verify_sequence, Order, Verdict, FIXTURE_NAMES};
use tubular::roots::{compatible, enumerate_schur, is_isotropic_schur, recognize};
use tubular::{ClassVector, Error, QuatUnit, RootIndex, Slope};

#[derive(Parser)]
#[command(
    name = "tubular",
    version,
    about = "Roots, arcs, quivers and exchange graphs for the tubular cluster algebra of type (2,2,2,2)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a class vector given as six comma-separated integers.
    Classify {
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Decide whether two indexed roots `q:x` are compatible.
    Compat {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// List the real Schur roots with |a| + b <= N.
    Roots {
        #[arg(long)]
        max_height: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    #[command(subcommand)]
    Arc(ArcCmd),
    #[command(subcommand)]
    Quiver(QuiverCmd),
    #[command(subcommand)]
    Exchange(ExchangeCmd),
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Subcommand)]
enum ArcCmd {
    /// Draw an arc to SVG; the second argument is a sign (+, -) or a unit (1, -i, ...).
    Render {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[arg(allow_hyphen_values = true)]
        which: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Minimal intersection number of two untagged arcs `p:+`, `q:-`.
    Intersect {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// Mutate a fixture along a sequence of 1-based vertices.
    Mutate {
        #[arg(long)]
        fixture: String,
        #[arg(long, value_delimiter = ',')]
        seq: Vec<usize>,
        #[arg(long, default_value = "rl")]
        order: String,
    },
    /// Check a mutation sequence (e6, e7, e8) or the d4 mutation class (d4-class).
    Verify { target: String },
}

#[derive(Subcommand)]
enum ExchangeCmd {
    /// Breadth-first exploration from the initial seed.
    Explore {
        #[arg(long)]
        depth: usize,
        /// Complement search bound; defaults to $TUBULAR_MAX_HEIGHT or 64.
        #[arg(long)]
        height: Option<u64>,
        #[arg(long, value_enum, default_value_t = GraphOut::Dot)]
        format: GraphOut,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOut {
    Dot,
    Json,
}

/// Outcome of a command that ran: success or a failed verification.
enum Status {
    Ok,
    Failed,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::SearchExhausted(_)) => 3,
        Some(Error::InvariantViolation(_) | Error::Inconsistent(_) | Error::Geometry(_)) => 4,
        _ => 2,
    }
}

fn default_height() -> Result<u64> {
    match std::env::var("TUBULAR_MAX_HEIGHT") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("TUBULAR_MAX_HEIGHT={v:?} is not a positive integer")),
        Err(_) => Ok(DEFAULT_SEARCH_HEIGHT),
    }
}

fn classify(out: &mut String, s: &str) -> Result<Status> {
    let v: ClassVector = s.parse()?;
    if let Some(r) = recognize(v) {
        writeln!(out, "real Schur root {r}")?;
    } else if is_isotropic_schur(v) {
        writeln!(out, "isotropic Schur root h_{}", slope_of(v)?)?;
    } else {
        writeln!(out, "neither")?;
    }
    Ok(Status::Ok)
}

fn compat(out: &mut String, a: &str, b: &str) -> Result<Status> {
    let (r1, r2): (RootIndex, RootIndex) = (a.parse()?, b.parse()?);
    let ok = compatible(r1, r2);
    let verdict = if ok { "compatible" } else { "incompatible" };
    let rule = if r1.slope == r2.slope {
        if ok {
            "same slope, x ≠ −y".to_string()
        } else {
            "same slope, x = −y".to_string()
        }
    } else {
        let (hi, lo) = if r1.slope > r2.slope { (r1, r2) } else { (r2, r1) };
        format!("⟨{hi}, {lo}⟩ = {}", euler(hi.vector(), lo.vector()))
    };
    writeln!(out, "{verdict} ({rule})")?;
    Ok(Status::Ok)
}

fn roots(out: &mut String, max_height: u64, format: Format) -> Result<Status> {
    let all = enumerate_schur(max_height);
    match format {
        Format::Text => {
            for r in &all {
                writeln!(out, "{r}\t{}", r.vector())?;
            }
        }
        Format::Json => {
            let items: Vec<_> = all
                .iter()
                .map(|r| json!({ "index": r.to_string(), "vector": r.vector().coords() }))
                .collect();
            let mut doc = serde_json::Map::new();
            doc.insert("schema".into(), json!("tubular.roots/v1"));
            doc.insert("max_height".into(), json!(max_height));
            doc.insert("roots".into(), json!(items));
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(Status::Ok)
}

fn arc_render(out: &mut String, slope: &str, which: &str, output: &Path) -> Result<Status> {
    let p: Slope = slope.parse()?;
    let item = if let Ok(sign) = which.parse::<Sign>() {
        SvgItem::untagged(render(p, sign))
    } else {
        let x: QuatUnit = which
            .parse()
            .map_err(|_| Error::Parse(format!("expected +, - or a unit, got {which:?}")))?;
        let a = TaggedArc::new(p, x);
        SvgItem {
            drawing: render(p, a.sign()),
            tags: Some(a.tags()),
            label: a.to_string(),
        }
    };
    item.drawing.check()?;
    svg_export(std::slice::from_ref(&item), output)?;
    writeln!(out, "wrote {} ({})", output.display(), item.label)?;
    Ok(Status::Ok)
}

fn arc_intersect(out: &mut String, a: &str, b: &str) -> Result<Status> {
    let (x, y): (UntaggedArc, UntaggedArc) = (a.parse()?, b.parse()?);
    writeln!(out, "{}", intersection_number(x.slope, x.sign, y.slope, y.sign))?;
    Ok(Status::Ok)
}

fn quiver_mutate(out: &mut String, name: &str, seq: &[usize], order: &str) -> Result<Status> {
    let order: Order = order.parse()?;
    let b = fixture(name).with_context(|| format!("fixtures: {}", FIXTURE_NAMES.join(", ")))?;
    write!(out, "{}", mutate_seq(&b, seq, order)?)?;
    Ok(Status::Ok)
}

fn quiver_verify(out: &mut String, target: &str) -> Result<Status> {
    if target == "d4-class" {
        let class = mutation_class(&fixture("delta_d4")?, 100_000);
        let contains = class.contains(&fixture("bt_sphere")?);
        let ok = class.verdict == Verdict::Finite && contains && class.max_abs_entry() <= 2;
        writeln!(
            out,
            "{} (class size {}, max |entry| {}, contains bt_sphere: {contains})",
            if ok { "OK" } else { "FAIL" },
            class.members.len(),
            class.max_abs_entry()
        )?;
        return Ok(if ok { Status::Ok } else { Status::Failed });
    }
    let r = verify_sequence(target)?;
    match r.order() {
        Some(o) => {
            writeln!(out, "OK (order={o})")?;
            Ok(Status::Ok)
        }
        None => {
            writeln!(out, "FAIL (no composition order reaches delta_{target})")?;
            Ok(Status::Failed)
        }
    }
}

fn exchange_explore(
    out: &mut String,
    depth: usize,
    height: Option<u64>,
    format: GraphOut,
    output: Option<&Path>,
) -> Result<Status> {
    let height = match height {
        Some(h) => h,
        None => default_height()?,
    };
    let g = explore(depth, height)?;
    let format = match format {
        GraphOut::Dot => GraphFormat::Dot,
        GraphOut::Json => GraphFormat::Json,
    };
    let doc = export_graph(&g, format);
    match output {
        Some(path) => {
            std::fs::write(path, doc).map_err(Error::from)?;
            eprintln!(
                "wrote {} ({} nodes, {} edges)",
                path.display(),
                g.nodes.len(),
                g.edges.len()
            );
        }
        None => out.push_str(&doc),
    }
    Ok(Status::Ok)
}

fn selftest(out: &mut String) -> Result<Status> {
    let outcomes = run_all();
    for o in &outcomes {
        writeln!(out, "{o}")?;
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    writeln!(out, "{passed}/{} criteria pass", outcomes.len())?;
    Ok(if passed == outcomes.len() {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn run(cli: Cli, out: &mut String) -> Result<Status> {
    match cli.cmd {
        Cmd::Classify { vector } => classify(out, &vector),
        Cmd::Compat { a, b } => compat(out, &a, &b),
        Cmd::Roots { max_height, format } => roots(out, max_height, format),
        Cmd::Arc(ArcCmd::Render { slope, which, output }) => arc_render(out, &slope, &which, &output),
        Cmd::Arc(ArcCmd::Intersect { a, b }) => arc_intersect(out, &a, &b),
        Cmd::Quiver(QuiverCmd::Mutate { fixture, seq, order }) => quiver_mutate(out, &fixture, &seq, &order),
        Cmd::Quiver(QuiverCmd::Verify { target }) => quiver_verify(out, &target),
        Cmd::Exchange(ExchangeCmd::Explore {
            depth,
            height,
            format,
            output,
        }) => exchange_explore(out, depth, height, format, output.as_deref()),
        Cmd::Selftest => selftest(out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    if let Err(e) = std::io::stdout().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
