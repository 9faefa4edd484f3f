//! `lcg`: build the classified solvable Lie algebras of dimension <= 4 over a
//! finite field, compute the connected components of their commuting graphs
//! by brute force, and verify counts, sizes, and shapes against the
//! closed-form predictions.
//!
//! Exit codes: 0 all verdicts pass, 1 some verification failed, 2 usage or
//! configuration error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use lcg_core::catalog::{admissible_ids, check_conditions, family_skips, AlgebraId, Family};
use lcg_core::field::{Field, FieldRef};
use lcg_core::graph::CommutingGraph;
use lcg_core::lie::{algebra_from_json, LieAlgebra};
use lcg_core::verify::{sweep, verify, SweepOptions, VerificationReport};

#[derive(Parser)]
#[command(name = "lcg", version, about = "Commuting graphs of small solvable Lie algebras over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog: bracket tables, side conditions, and (with --field)
    /// the admissible parameters over that field.
    List(ListArgs),
    /// Verify one algebra against its predicted component structure.
    Verify(VerifyArgs),
    /// Verify every admissible catalog algebra over every prime power q <= max-q.
    Sweep(SweepArgs),
    /// Export a commuting graph as edge and vertex-label CSV files.
    Graph(GraphArgs),
}

#[derive(Args)]
struct FieldArg {
    /// Field order as "p" or "p^k" (a plain prime power like "9" also works).
    #[arg(long = "q", visible_alias = "field")]
    q: Option<String>,
    /// Modulus polynomial override, high-to-low coefficients: c_k,...,c_0.
    #[arg(long, value_delimiter = ',')]
    poly: Option<Vec<u64>>,
}

impl FieldArg {
    fn build(&self) -> Result<FieldRef> {
        let desc = self.q.as_deref().context("--q is required")?;
        Ok(Field::parse_with_poly(desc, self.poly.as_deref())?)
    }
}

#[derive(Args)]
struct AlgebraArg {
    /// Catalog family name (N2, N3_1, ..., N4_13).
    #[arg(long)]
    algebra: Option<String>,
    /// First parameter, as a field-element index.
    #[arg(long)]
    alpha: Option<u64>,
    /// Second parameter, as a field-element index.
    #[arg(long)]
    beta: Option<u64>,
}

impl AlgebraArg {
    fn build(&self, field: &FieldRef) -> Result<AlgebraId> {
        let name = self.algebra.as_deref().context("--algebra is required")?;
        let family = Family::parse(name)?;
        let mut params = Vec::new();
        let arity = family.param_count();
        if arity >= 1 {
            let a = self.alpha.with_context(|| format!("{family} requires --alpha"))?;
            params.push(field.checked_elt(a)?);
        } else if self.alpha.is_some() {
            bail!("{family} takes no --alpha parameter");
        }
        if arity >= 2 {
            let b = self.beta.with_context(|| format!("{family} requires --beta"))?;
            params.push(field.checked_elt(b)?);
        } else if self.beta.is_some() {
            bail!("{family} takes no --beta parameter");
        }
        Ok(AlgebraId::new(family, params))
    }
}

#[derive(Args)]
struct ListArgs {
    #[command(flatten)]
    field: FieldArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    #[command(flatten)]
    field: FieldArg,
    /// Also verify per-component shapes (complete / windmill / clique union).
    #[arg(long)]
    shapes: bool,
    /// Write the full JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest field order to test (prime powers up to this bound).
    #[arg(long, default_value_t = 5)]
    max_q: u64,
    /// Algebra dimensions to include.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4])]
    dims: Vec<usize>,
    /// Skip the per-component shape checks (counts and sizes only).
    #[arg(long)]
    no_shapes: bool,
    /// Write the aggregate JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// JSON file with a custom algebra description (instead of --algebra).
    #[arg(long, conflicts_with = "algebra")]
    custom: Option<PathBuf>,
    #[command(flatten)]
    field: FieldArg,
    /// Edge list output: "u_index,v_index" with u < v.
    #[arg(long)]
    edges: PathBuf,
    /// Vertex labels output: "vertex_index,component_id,coordinates".
    #[arg(long)]
    labels: PathBuf,
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away (e.g. `lcg list | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::List(args) => cmd_list(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Graph(args) => cmd_graph(args),
    }
}

fn cmd_list(args: ListArgs) -> Result<ExitCode> {
    let field = match args.field.q {
        Some(_) => Some(args.field.build()?),
        None => None,
    };
    for family in Family::ALL {
        println!("{} (dim {})", family.name(), family.dim());
        println!("  brackets:   {}", family.brackets_text());
        println!("  conditions: {}", family.conditions_text());
        if let Some(f) = &field {
            let ids = admissible_ids(family, f);
            let skips = family_skips(family, f);
            if ids.is_empty() {
                for s in &skips {
                    println!("  over GF({}): none admissible ({})", f.describe(), s.reason);
                }
                if skips.is_empty() {
                    println!("  over GF({}): none admissible", f.describe());
                }
            } else {
                let shown: Vec<String> = ids
                    .iter()
                    .map(|id| match id.params.as_slice() {
                        [] => "-".to_string(),
                        [a] => format!("alpha={a}"),
                        [a, b] => format!("alpha={a},beta={b}"),
                        _ => unreachable!(),
                    })
                    .collect();
                println!("  over GF({}): {} admissible: {}", f.describe(), ids.len(), shown.join(" "));
                for s in &skips {
                    println!("  note: {} — {}", s.label, s.reason);
                }
            }
        }
        println!();
    }
    Ok(ExitCode::SUCCESS)
}

fn write_json<T: serde::Serialize>(path: &PathBuf, value: &T) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")?;
    Ok(())
}

fn print_report(rep: &VerificationReport) {
    let params = if rep.params.is_empty() {
        String::new()
    } else {
        let parts: Vec<String> = rep.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("({})", parts.join(", "))
    };
    println!(
        "{}{} over GF({}): {} — {} vertices, {} components (predicted {})",
        rep.algebra,
        params,
        rep.field,
        match rep.verdict {
            lcg_core::verify::Verdict::Pass => "pass",
            lcg_core::verify::Verdict::Fail => "FAIL",
        },
        rep.computed.vertices,
        rep.computed.cc_count,
        rep.predicted.cc_count,
    );
    if let Some(d) = &rep.first_divergence {
        println!("  first divergence: {d}");
    }
    if let Some(shapes) = &rep.computed.shapes {
        let ok = shapes.iter().filter(|s| s.matched).count();
        println!("  shapes: {ok}/{} matched", shapes.len());
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let field = args.field.build()?;
    let id = args.algebra.build(&field)?;
    check_conditions(&id, &field)?;
    let rep = verify(&id, &field, args.shapes)?;
    print_report(&rep);
    if let Some(path) = &args.json {
        write_json(path, &rep)?;
    }
    Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode> {
    let threads = std::env::var("LCG_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(0);
    let opts = SweepOptions {
        max_q: args.max_q,
        dims: args.dims.clone(),
        check_shapes: !args.no_shapes,
        threads,
    };
    let report = sweep(&opts)?;

    let mut fields: Vec<&str> = report.entries.iter().map(|e| e.field.as_str()).collect();
    fields.dedup();
    for f in fields {
        let in_field: Vec<_> = report.entries.iter().filter(|e| e.field == f).collect();
        let failed = in_field.iter().filter(|e| !e.passed()).count();
        let skipped = report.skipped.iter().filter(|s| s.field == f).count();
        println!(
            "GF({f}): {} verified, {failed} failed, {skipped} skipped",
            in_field.len()
        );
    }
    for e in report.entries.iter().filter(|e| !e.passed()) {
        print_report(e);
    }
    for s in &report.skipped {
        println!(
            "skipped {} over GF({}): {} ({})",
            s.algebra,
            s.field,
            match s.status {
                lcg_core::catalog::SkipStatus::Unsatisfiable => "unsatisfiable",
                lcg_core::catalog::SkipStatus::Inadmissible => "inadmissible",
            },
            s.reason
        );
    }
    println!(
        "total: {} verified, {} failed — {}",
        report.verified,
        report.failed,
        if report.all_pass { "all pass" } else { "FAIL" }
    );
    if let Some(path) = &args.json {
        write_json(path, &report)?;
    }
    Ok(if report.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_graph(args: GraphArgs) -> Result<ExitCode> {
    let (field, algebra): (FieldRef, LieAlgebra) = if let Some(path) = &args.custom {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        algebra_from_json(&text)?
    } else {
        let field = args.field.build()?;
        let id = args.algebra.build(&field)?;
        let algebra = lcg_core::catalog::instantiate(&id, &field)?;
        (field, algebra)
    };

    let graph = CommutingGraph::new(algebra).context("the commuting graph needs a noncommutative algebra")?;
    let parts = graph.components();

    let edge_file = File::create(&args.edges)
        .with_context(|| format!("creating {}", args.edges.display()))?;
    let mut w = BufWriter::new(edge_file);
    writeln!(w, "u_index,v_index")?;
    for (u, v) in graph.edges() {
        writeln!(w, "{u},{v}")?;
    }
    w.flush()?;

    let label_file = File::create(&args.labels)
        .with_context(|| format!("creating {}", args.labels.display()))?;
    let mut w = BufWriter::new(label_file);
    writeln!(w, "vertex_index,component_id,coordinates")?;
    for u in graph.vertices() {
        let coords = graph.indexer().decode(u);
        let text: Vec<String> = coords.iter().map(|c| c.index().to_string()).collect();
        let comp = parts.component_id(u).expect("u is a vertex");
        writeln!(w, "{u},{comp},{}", text.join(":"))?;
    }
    w.flush()?;

    println!(
        "GF({}): {} vertices, {} edges, {} components -> {} / {}",
        field.describe(),
        graph.vertex_count(),
        graph.edges().len(),
        parts.len(),
        args.edges.display(),
        args.labels.display()
    );
    Ok(ExitCode::SUCCESS)
}
