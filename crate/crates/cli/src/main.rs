use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use minorkit::connectivity::{is_quasi_4_connected, vertex_connectivity};
use minorkit::families::{v8_plus_e, v8_plus_f, wagner};
use minorkit::growth::grow;
use minorkit::io::{decode_any, decode_graph6, encode_edge_list, to_dot};
use minorkit::minor::forbidden_edges;
use minorkit::verify::{run_verify, Lemma, TARGETS};
use minorkit::{
    canonical_form, find_minor, is_internally_4_connected, is_planar, Bounds, FamilySpec, Filter, Graph, Seed,
};

#[derive(Parser)]
#[command(
    name = "minorkit",
    version,
    about = "Graph minor toolkit for V8+e-minor-free graphs"
)]
struct Cli {
    /// Worker threads for parallel commands.
    #[arg(long, global = true, env = "MINORKIT_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named family member.
    Family {
        name: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Test whether the host has the pattern as a minor.
    Minor {
        #[arg(long)]
        host: String,
        #[arg(long)]
        pattern: String,
        /// Also print the branch sets and edge witnesses as JSON.
        #[arg(long)]
        witness: bool,
    },
    /// Evaluate a predicate.
    Check { predicate: Predicate, graph: String },
    /// List the non-edges whose addition creates the pattern.
    Forbidden {
        graph: String,
        #[arg(long, default_value = "v8e")]
        pattern: String,
        #[arg(long)]
        witness: bool,
    },
    /// Grow internally 4-connected graphs from seeds.
    Grow {
        #[arg(long = "seed", required = true)]
        seeds: Vec<String>,
        #[arg(long, default_value = "v8e-free")]
        filter: String,
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        max_edges: usize,
        #[arg(long)]
        stages: usize,
        #[arg(long, default_value_t = 3)]
        max_ops: usize,
        /// Allow every split, not only those creating a degree-3 vertex.
        #[arg(long)]
        all_splits: bool,
    },
    /// Run a verification target and print the claim report.
    Verify {
        target: String,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        stages: Option<usize>,
    },
    /// Print the canonical graph6 string.
    Canon { graph: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicate {
    I4c,
    Q4c,
    Planar,
    Connectivity,
}

/// Result of a command: output text and whether the answer was positive.
struct Outcome {
    text: String,
    positive: bool,
}

impl Outcome {
    fn yes(text: String) -> Self {
        Outcome { text, positive: true }
    }
    fn bool(b: bool) -> Self {
        Outcome {
            text: b.to_string(),
            positive: b,
        }
    }
}

/// A graph argument: an existing file, a family spec, or a graph6 literal.
fn load(arg: &str) -> anyhow::Result<(Graph, Option<FamilySpec>)> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return Ok((decode_any(&text).with_context(|| format!("parsing {arg}"))?, None));
    }
    match arg {
        "v8" => return Ok((wagner(), None)),
        "v8+e" => return Ok((v8_plus_e(), None)),
        "v8+f" => return Ok((v8_plus_f(), None)),
        _ => {}
    }
    match arg.parse::<FamilySpec>() {
        Ok(spec) => Ok((spec.build()?, Some(spec))),
        Err(family_err) => decode_graph6(arg)
            .map(|g| (g, None))
            .map_err(|_| anyhow!("{arg:?} is neither a file, a family ({family_err}) nor graph6")),
    }
}

fn json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Family { name, params, format } => {
            let spec = if params.is_empty() {
                name.parse()?
            } else {
                FamilySpec::new(&name, &params)?
            };
            let g = spec.build()?;
            Ok(Outcome::yes(match format {
                Format::Graph6 => g.to_string(),
                Format::Edges => encode_edge_list(&g).trim_end().to_string(),
                Format::Dot => to_dot(&g, &spec.to_string(), Some(&spec.labels()?))
                    .trim_end()
                    .to_string(),
            }))
        }
        Command::Minor {
            host,
            pattern,
            witness,
        } => {
            let (h, _) = load(&host)?;
            let (p, _) = load(&pattern)?;
            let found = find_minor(&h, &p);
            let mut text = found.is_some().to_string();
            if let (true, Some(w)) = (witness, &found) {
                text.push('\n');
                text.push_str(&json(w)?);
            }
            Ok(Outcome {
                text,
                positive: found.is_some(),
            })
        }
        Command::Check { predicate, graph } => {
            let (g, _) = load(&graph)?;
            Ok(match predicate {
                Predicate::I4c => Outcome::bool(is_internally_4_connected(&g)),
                Predicate::Q4c => Outcome::bool(is_quasi_4_connected(&g)),
                Predicate::Planar => Outcome::bool(is_planar(&g)),
                Predicate::Connectivity => Outcome::yes(vertex_connectivity(&g)?.to_string()),
            })
        }
        Command::Forbidden {
            graph,
            pattern,
            witness,
        } => {
            let (g, spec) = load(&graph)?;
            let (p, _) = load(&pattern)?;
            let set = forbidden_edges(&g, &p);
            let label = |u: usize, v: usize| match &spec {
                Some(s) => s.edge_label(u, v),
                None => Ok(format!("{u}-{v}")),
            };
            let edges = set
                .edges
                .iter()
                .map(|f| label(f.edge.0, f.edge.1))
                .collect::<minorkit::Result<Vec<_>>>()?;
            let mut doc = serde_json::json!({
                "graph": g.to_string(),
                "pattern": p.to_string(),
                "labels": if spec.is_some() { "presentation" } else { "storage" },
                "edges": edges,
            });
            if witness {
                doc["witnesses"] = serde_json::to_value(&set.edges)?;
            }
            Ok(Outcome::yes(json(&doc)?))
        }
        Command::Grow {
            seeds,
            filter,
            max_vertices,
            max_edges,
            stages,
            max_ops,
            all_splits,
        } => {
            let seeds = seeds
                .iter()
                .map(|s| Ok(Seed::new(s.clone(), load(s)?.0)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let filter: Filter = filter.parse()?;
            let bounds = Bounds {
                max_ops,
                degree3_only: !all_splits,
                ..Bounds::new(max_vertices, max_edges, stages)
            };
            Ok(Outcome::yes(json(&grow(&seeds, filter, &bounds)?)?))
        }
        Command::Verify {
            target,
            max_vertices,
            max_edges,
            stages,
        } => {
            if !TARGETS.contains(&target.as_str()) {
                bail!(
                    "unknown verify target {target:?}; expected one of {}",
                    TARGETS.join(", ")
                );
            }
            let bounds = if max_vertices.is_some() || max_edges.is_some() || stages.is_some() {
                let base = match Lemma::parse(&target) {
                    Ok(l) => l.default_bounds(),
                    Err(_) => bail!("bounds only apply to lemma targets"),
                };
                Some(Bounds::new(
                    max_vertices.unwrap_or(base.max_vertices),
                    max_edges.unwrap_or(base.max_edges),
                    stages.unwrap_or(base.max_stages),
                ))
            } else {
                None
            };
            let report = run_verify(&target, bounds)?;
            Ok(Outcome {
                text: json(&report)?,
                positive: report.ok(),
            })
        }
        Command::Canon { graph } => Ok(Outcome::yes(canonical_form(&load(&graph)?.0).to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
        {
            eprintln!("minorkit: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if writeln!(stdout, "{}", out.text).is_err() {
                return ExitCode::from(2);
            }
            if out.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("minorkit: {e:#}");
            ExitCode::from(2)
        }
    }
}
