use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bihamilton::conditions::{ConditionReport, Witness};
use bihamilton::generators::{self, Family, FamilySpec, Filter, ENUMERATION_CAP};
use bihamilton::hamilton::{Method, ORACLE_CAP};
use bihamilton::io::{parse_any, parse_label, to_json, to_text, vertex_label};
use bihamilton::{
    check_condition_a, check_condition_m, check_half_degrees, check_min_degree, check_woodall_bipartite,
    find_complete_matching, find_hamiltonian_cycle, oracle_hamiltonian, verify_cycle, BipartiteDigraph,
    HamiltonOptions, MatchDirection, SearchMode, Verdict,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Degree conditions and hamiltonian cycles in balanced bipartite digraphs.
#[derive(Parser)]
#[command(name = "bihamilton", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
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
    /// Evaluate every degree condition and strong connectivity.
    Check { path: PathBuf },
    /// Find a hamiltonian cycle or decide that none exists.
    Hamilton {
        path: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
        /// Largest vertex count handed to the exact oracle.
        #[arg(long, default_value_t = ORACLE_CAP)]
        cap: usize,
    },
    /// Exact decision by subset dynamic programming.
    Oracle {
        path: PathBuf,
        #[arg(long, default_value_t = ORACLE_CAP)]
        cap: usize,
    },
    /// Write a generated digraph.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Deletion budget for `random-m`.
        #[arg(long)]
        budget: Option<usize>,
        /// Arc probability for `random`.
        #[arg(long)]
        density: Option<f64>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Exhaustive counts over every digraph with a small class size.
    Survey {
        #[arg(long)]
        a: usize,
        /// One row per digraph passing the filters instead of totals.
        #[arg(long)]
        masks: bool,
        #[arg(long = "filter", value_enum)]
        filters: Vec<FilterArg>,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        cap: usize,
    },
    /// Check a hamiltonian cycle given as labels or as certificate JSON.
    Verify { graph: PathBuf, cycle: PathBuf },
}

#[derive(Args)]
struct SearchFlags {
    /// Exact longest-cycle search for each stage (default).
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    /// Path extension with rotations for each stage.
    #[arg(long)]
    heuristic: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Dprime,
    Dak,
    Tak,
    Complete,
    Fig1,
    Random,
    RandomM,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    ConditionM,
    MinDegree,
    HalfDegrees,
    SemiDegree,
    Hamiltonian,
    NonHamiltonian,
}

enum Outcome {
    Definitive,
    Unknown,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Definitive) => ExitCode::SUCCESS,
        Ok(Outcome::Unknown) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Check { path } => cmd_check(cli, path),
        Command::Hamilton { path, search, cap } => cmd_hamilton(cli, path, search, *cap),
        Command::Oracle { path, cap } => cmd_oracle(cli, path, *cap),
        Command::Gen {
            family,
            a,
            k,
            budget,
            density,
            out,
        } => {
            let spec = FamilySpec {
                family: match family {
                    FamilyArg::Dprime => Family::Dprime,
                    FamilyArg::Dak => Family::Dak,
                    FamilyArg::Tak => Family::Tak,
                    FamilyArg::Complete => Family::Complete,
                    FamilyArg::Fig1 => Family::Fig1,
                    FamilyArg::Random => Family::Random,
                    FamilyArg::RandomM => Family::RandomM,
                },
                a: *a,
                k: *k,
                seed: cli.seed,
                budget: *budget,
                density: *density,
            };
            cmd_gen(cli, &spec, out.as_deref())
        }
        Command::Survey { a, masks, filters, cap } => cmd_survey(cli, *a, *masks, filters, *cap),
        Command::Verify { graph, cycle } => cmd_verify(cli, graph, cycle),
    }
}

fn read_graph(path: &Path) -> Result<BipartiteDigraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_any(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print(cli: &Cli, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    match cli.format {
        Format::Text => print!("{}", text()),
        Format::Json => println!("{}", value()),
    }
}

fn describe(a: usize, report: &ConditionReport) -> String {
    let Some(w) = &report.witness else {
        return "pass".into();
    };
    let l = |v: usize| vertex_label(a, v);
    match w {
        Witness::Vertex { vertex, value, bound, .. } => format!("fail  vertex {}  {value} < {bound}", l(*vertex)),
        Witness::Pair { u, v, sum, bound, .. } => format!("fail  pair {} {}  sum {sum} < {bound}", l(*u), l(*v)),
        Witness::Quad { vertices, sum, bound } => {
            let names: Vec<String> = vertices.iter().map(|&v| l(v)).collect();
            format!("fail  quadruple {}  sum {sum} < {bound}", names.join(" "))
        }
    }
}

fn labelled(a: usize, report: &ConditionReport) -> Value {
    let l = |v: usize| vertex_label(a, v);
    let witness = report.witness.as_ref().map(|w| match w {
        Witness::Vertex { vertex, value, bound, .. } => json!({"vertex": l(*vertex), "value": value, "bound": bound}),
        Witness::Pair { u, v, sum, bound, .. } => json!({"pair": [l(*u), l(*v)], "sum": sum, "bound": bound}),
        Witness::Quad { vertices, sum, bound } => {
            json!({"quadruple": vertices.iter().map(|&v| l(v)).collect::<Vec<_>>(), "sum": sum, "bound": bound})
        }
    });
    json!({"satisfied": report.satisfied, "witness": witness})
}

fn cmd_check(cli: &Cli, path: &Path) -> Result<Outcome> {
    let graph = read_graph(path)?;
    let a = graph.class_size();
    let condition_a = match find_complete_matching(&graph, MatchDirection::XToY) {
        Ok(m) => Some(check_condition_a(&graph, &m)?),
        Err(_) => None,
    };
    let rows = [
        ("condition (M)", "condition_m", Some(check_condition_m(&graph))),
        ("condition (A)", "condition_a", condition_a),
        ("minimum degree", "min_degree", Some(check_min_degree(&graph))),
        ("semi-degrees", "half_degrees", Some(check_half_degrees(&graph))),
        ("woodall pairs", "woodall", Some(check_woodall_bipartite(&graph))),
    ];
    let strong = graph.is_strongly_connected();
    print(
        cli,
        || {
            let mut out = String::new();
            for (name, _, report) in &rows {
                let line = match report {
                    Some(r) => describe(a, r),
                    None => "n/a  no complete matching from X to Y".into(),
                };
                out.push_str(&format!("{name:<20}{line}\n"));
            }
            out.push_str(&format!("{:<20}{}\n", "strongly connected", if strong { "yes" } else { "no" }));
            out
        },
        || {
            let mut doc = serde_json::Map::new();
            for (_, key, report) in &rows {
                doc.insert((*key).into(), report.as_ref().map_or(Value::Null, |r| labelled(a, r)));
            }
            doc.insert("strongly_connected".into(), strong.into());
            Value::Object(doc)
        },
    );
    Ok(Outcome::Definitive)
}

fn check_oracle_cap(cap: usize) -> Result<()> {
    if cap > ORACLE_CAP {
        bail!("--cap {cap} exceeds the oracle limit of {ORACLE_CAP} vertices");
    }
    Ok(())
}

fn method_name(method: Method) -> String {
    match method {
        Method::Decomposition => "decomposition".into(),
        Method::Splice { count } => format!("splice ({count})"),
        Method::ExactSearch => "exact search".into(),
        Method::Oracle => "oracle".into(),
    }
}

fn cmd_hamilton(cli: &Cli, path: &Path, search: &SearchFlags, cap: usize) -> Result<Outcome> {
    check_oracle_cap(cap)?;
    let graph = read_graph(path)?;
    let a = graph.class_size();
    let options = HamiltonOptions {
        mode: if search.heuristic { SearchMode::Heuristic } else { SearchMode::Exact },
        oracle_cap: cap,
    };
    let verdict = find_hamiltonian_cycle(&graph, &options);
    match &verdict {
        Verdict::Hamiltonian(cert) => {
            let verified = verify_cycle(&graph, &cert.cycle);
            if !verified {
                bail!("internal error: certificate failed verification");
            }
            print(
                cli,
                || {
                    let labels: Vec<String> = cert.cycle.iter().map(|&v| vertex_label(a, v)).collect();
                    format!(
                        "hamiltonian ({})\ncycle {}\nverified\n",
                        method_name(cert.method),
                        labels.join(" ")
                    )
                },
                || json!({"verdict": "hamiltonian", "certificate": cert.to_json(), "verified": verified}),
            );
            Ok(Outcome::Definitive)
        }
        Verdict::NonHamiltonian => {
            print(
                cli,
                || "non-hamiltonian (oracle)\n".into(),
                || json!({"verdict": "non_hamiltonian", "method": "oracle"}),
            );
            Ok(Outcome::Definitive)
        }
        Verdict::Unknown => {
            print(cli, || "unknown\n".into(), || json!({"verdict": "unknown"}));
            Ok(Outcome::Unknown)
        }
    }
}

fn cmd_oracle(cli: &Cli, path: &Path, cap: usize) -> Result<Outcome> {
    check_oracle_cap(cap)?;
    let graph = read_graph(path)?;
    let a = graph.class_size();
    if graph.order() > cap {
        print(
            cli,
            || format!("unknown: {} vertices exceed the cap of {cap}\n", graph.order()),
            || json!({"hamiltonian": null, "cycle": null}),
        );
        return Ok(Outcome::Unknown);
    }
    let cycle = oracle_hamiltonian(&graph)?;
    let labels = cycle
        .as_ref()
        .map(|c| c.iter().map(|&v| vertex_label(a, v)).collect::<Vec<_>>());
    print(
        cli,
        || match &labels {
            Some(l) => format!("hamiltonian\ncycle {}\n", l.join(" ")),
            None => "non-hamiltonian\n".into(),
        },
        || json!({"hamiltonian": labels.is_some(), "cycle": labels}),
    );
    Ok(Outcome::Definitive)
}

fn cmd_gen(cli: &Cli, spec: &FamilySpec, out: Option<&Path>) -> Result<Outcome> {
    let graph = spec.generate()?;
    let body = match cli.format {
        Format::Text => to_text(&graph),
        Format::Json => to_json(&graph) + "\n",
    };
    match out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(Outcome::Definitive)
}

fn cmd_survey(cli: &Cli, a: usize, masks: bool, filters: &[FilterArg], cap: usize) -> Result<Outcome> {
    if cap > ENUMERATION_CAP {
        bail!("--cap {cap} exceeds the enumeration limit of {ENUMERATION_CAP}");
    }
    if a > cap {
        bail!("a = {a} exceeds the cap of {cap}");
    }
    let filters: Vec<Filter> = filters
        .iter()
        .map(|f| match f {
            FilterArg::ConditionM => Filter::ConditionM,
            FilterArg::MinDegree => Filter::MinDegree,
            FilterArg::HalfDegrees => Filter::HalfDegrees,
            FilterArg::SemiDegree => Filter::MinSemiDegree((a + 2) / 2),
            FilterArg::Hamiltonian => Filter::Hamiltonian,
            FilterArg::NonHamiltonian => Filter::NonHamiltonian,
        })
        .collect();
    eprintln!("surveying all {} digraphs with a = {a}", 1u64 << (2 * a * a));
    if masks {
        let rows = generators::survey_masks(a, &filters)?;
        eprintln!("{} digraphs pass the filters", rows.len());
        print(cli, || generators::mask_rows_to_csv(&rows), || json!(rows));
    } else {
        if !filters.is_empty() {
            bail!("--filter applies to --masks output only");
        }
        let rows = generators::survey(a)?;
        print(cli, || generators::rows_to_csv(&rows), || json!(rows));
    }
    eprintln!("done");
    Ok(Outcome::Definitive)
}

fn cmd_verify(cli: &Cli, graph_path: &Path, cycle_path: &Path) -> Result<Outcome> {
    let graph = read_graph(graph_path)?;
    let a = graph.class_size();
    let text = fs::read_to_string(cycle_path).with_context(|| format!("reading {}", cycle_path.display()))?;
    let labels: Vec<String> = if text.trim_start().starts_with('{') {
        let doc: Value = serde_json::from_str(&text).context("parsing certificate JSON")?;
        let cycle = doc
            .get("cycle")
            .or_else(|| doc.get("certificate").and_then(|c| c.get("cycle")))
            .and_then(Value::as_array)
            .context("certificate has no `cycle` array")?;
        cycle
            .iter()
            .map(|v| v.as_str().map(str::to_owned).context("cycle entries must be labels"))
            .collect::<Result<_>>()?
    } else {
        text.split_whitespace().map(str::to_owned).collect()
    };
    let cycle: Vec<usize> = labels
        .iter()
        .map(|l| parse_label(a, l).with_context(|| format!("unknown vertex label `{l}`")))
        .collect::<Result<_>>()?;
    let valid = verify_cycle(&graph, &cycle);
    print(
        cli,
        || if valid { "valid\n".into() } else { "invalid\n".into() },
        || json!({"valid": valid}),
    );
    if !valid {
        bail!("not a hamiltonian cycle of {}", graph_path.display());
    }
    Ok(Outcome::Definitive)
}
