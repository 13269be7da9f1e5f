use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use kpartite::bounds::{compare_bounds, REPORT_COLUMNS};
use kpartite::exact::{CertificateKind, ExactSolver, DEFAULT_CAP};
use kpartite::graph::io::{self, Format};
use kpartite::harness::{
    bounds_report_campaign, find_sharp_example, pattern_graph, verify_theorem, write_campaign_csv,
};
use kpartite::realizations::{
    enumerate_realizations, four_copies, havel_hakimi_realize, random_switch_walk,
};
use kpartite::recognition::{
    clique_union_profile_from_degrees, is_clique_union, is_complete_multipartite, is_graphical,
    multipartite_profile_from_degrees,
};
use kpartite::witness::{witness_clique, witness_independent_set};
use kpartite::{DegreeSequence, Flavor, Graph, PartitionProfile, Result};

#[derive(Parser)]
#[command(
    name = "kpartite",
    version,
    about = "Clique and independence numbers across degree-equivalence classes"
)]
struct Cli {
    /// Output graph format: graph6 (default), edges or dimacs. Input format
    /// is detected from the file contents.
    #[arg(long, global = true)]
    format: Option<String>,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test the four family conditions on a graph or a degree sequence.
    Recognize {
        #[arg(long, conflicts_with = "degrees", required_unless_present = "degrees")]
        input: Option<PathBuf>,
        /// Comma-separated degrees, or a file holding them on one line.
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Lower bounds for one graph (JSON), or for a directory / multi-graph
    /// graph6 file (CSV).
    Bounds {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        exact: bool,
    },
    /// Exact independence or clique number with a witness.
    Exact {
        #[arg(long, conflicts_with = "omega", required_unless_present = "omega")]
        alpha: bool,
        #[arg(long)]
        omega: bool,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Constructive k+1 certificate for a non-canonical family member.
    Witness {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, conflicts_with = "independent")]
        clique: bool,
        #[arg(long)]
        independent: bool,
    },
    /// One realization of a degree sequence.
    Realize {
        #[arg(long)]
        degrees: String,
    },
    /// Every realization up to isomorphism, as graph6 lines.
    Enumerate {
        #[arg(long)]
        degrees: String,
    },
    /// Random 2-switch walk from the input graph.
    Sample {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        steps: u64,
    },
    /// Four disjoint copies of a cubic graph.
    Reduce4 {
        #[arg(long)]
        input: PathBuf,
    },
    /// Exhaustive check over every clique-union profile up to max-n.
    VerifyTheorem {
        #[arg(long)]
        max_n: usize,
    },
    /// First non-canonical realization with alpha = k+1 containing the
    /// given induced patterns (p4, c5, k3, ...).
    FindSharp {
        #[arg(long)]
        profile: String,
        #[arg(long, default_value = "")]
        patterns: String,
    },
    /// Per-realization bound reports for profiles separated by ';'.
    Sharpness {
        #[arg(long)]
        profiles: String,
    },
}

enum Outcome {
    Ok,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn graph_format(cli: &Cli) -> Result<Option<Format>> {
    cli.format.as_deref().map(str::parse).transpose()
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path)?;
    io::parse_graphs(&text, io::sniff_format(&text))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    io::parse_graph(&text, io::sniff_format(&text))
}

fn read_degrees(arg: &str) -> Result<DegreeSequence> {
    let path = Path::new(arg);
    if path.is_file() {
        DegreeSequence::parse(fs::read_to_string(path)?.trim())
    } else {
        DegreeSequence::parse(arg)
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_graph(cli: &Cli, g: &Graph) -> Result<()> {
    let format = graph_format(cli)?.unwrap_or(Format::Graph6);
    emit(cli, &io::write_graph(g, format))
}

fn profile_json(p: Option<PartitionProfile>) -> serde_json::Value {
    p.map_or(
        serde_json::Value::Null,
        |p| json!({ "k": p.k(), "parts": p.parts() }),
    )
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Recognize { input, degrees } => {
            let value = match (input, degrees) {
                (Some(path), _) => {
                    let g = read_graph(path)?;
                    let d = g.degree_sequence();
                    json!({
                        "n": g.n(),
                        "m": g.m(),
                        "complete_multipartite": profile_json(is_complete_multipartite(&g)),
                        "clique_union": profile_json(is_clique_union(&g)),
                        "degree_equivalent_multipartite": profile_json(multipartite_profile_from_degrees(&d)?),
                        "degree_equivalent_clique_union": profile_json(clique_union_profile_from_degrees(&d)),
                    })
                }
                (None, Some(arg)) => {
                    let d = read_degrees(arg)?;
                    json!({
                        "n": d.n(),
                        "graphical": is_graphical(&d),
                        "degree_equivalent_multipartite": profile_json(multipartite_profile_from_degrees(&d)?),
                        "degree_equivalent_clique_union": profile_json(clique_union_profile_from_degrees(&d)),
                    })
                }
                (None, None) => unreachable!("clap requires one of --input/--degrees"),
            };
            emit(cli, &format!("{}\n", serde_json::to_string_pretty(&value)?))?;
        }
        Command::Bounds { input, exact } => {
            let batch: Option<Vec<(String, Graph)>> = if input.is_dir() {
                let mut entries: Vec<PathBuf> = fs::read_dir(input)?
                    .map(|e| e.map(|e| e.path()))
                    .collect::<std::io::Result<_>>()?;
                entries.retain(|p| p.is_file());
                entries.sort();
                let mut out = Vec::new();
                for path in entries {
                    for (i, g) in read_graphs(&path)?.into_iter().enumerate() {
                        out.push((format!("{}#{i}", path.display()), g));
                    }
                }
                Some(out)
            } else {
                let graphs = read_graphs(input)?;
                (graphs.len() != 1).then(|| {
                    graphs
                        .into_iter()
                        .enumerate()
                        .map(|(i, g)| (format!("{}#{i}", input.display()), g))
                        .collect()
                })
            };
            match batch {
                Some(graphs) => {
                    let mut buf = Vec::new();
                    {
                        let mut w = csv::Writer::from_writer(&mut buf);
                        w.write_record(REPORT_COLUMNS)?;
                        for (id, g) in &graphs {
                            w.write_record(compare_bounds(g, id, *exact)?.csv_record())?;
                        }
                        w.flush()?;
                    }
                    emit(cli, &String::from_utf8_lossy(&buf))?;
                }
                None => {
                    let g = read_graph(input)?;
                    let report = compare_bounds(&g, &input.display().to_string(), *exact)?;
                    emit(
                        cli,
                        &format!("{}\n", serde_json::to_string_pretty(&report)?),
                    )?;
                }
            }
        }
        Command::Exact {
            alpha,
            omega: _,
            input,
            cap,
        } => {
            let g = read_graph(input)?;
            let solver = ExactSolver::with_cap(*cap);
            let cert = if *alpha {
                solver.max_independent_set(&g)?
            } else {
                solver.max_clique(&g)?
            };
            let value = json!({
                "measure": if *alpha { "alpha" } else { "omega" },
                "size": cert.size(),
                "vertices": cert.vertices,
            });
            emit(cli, &format!("{}\n", serde_json::to_string_pretty(&value)?))?;
        }
        Command::Witness { input, clique, .. } => {
            let g = read_graph(input)?;
            let (cert, profile) = if *clique {
                let p = multipartite_profile_from_degrees(&g.degree_sequence())?;
                (witness_clique(&g)?, p)
            } else {
                let p = clique_union_profile_from_degrees(&g.degree_sequence());
                (witness_independent_set(&g)?, p)
            };
            let value = json!({
                "kind": match cert.kind {
                    CertificateKind::Clique => "clique",
                    CertificateKind::IndependentSet => "independent-set",
                },
                "size": cert.size(),
                "vertices": cert.vertices,
                "profile": profile_json(profile),
            });
            emit(cli, &format!("{}\n", serde_json::to_string_pretty(&value)?))?;
        }
        Command::Realize { degrees } => {
            let g = havel_hakimi_realize(&read_degrees(degrees)?)?;
            emit_graph(cli, &g)?;
        }
        Command::Enumerate { degrees } => {
            let mut text = String::new();
            for g in enumerate_realizations(&read_degrees(degrees)?)? {
                text.push_str(&io::encode_graph6(&g));
                text.push('\n');
            }
            emit(cli, &text)?;
        }
        Command::Sample { input, steps } => {
            let g = read_graph(input)?;
            emit_graph(cli, &random_switch_walk(&g, *steps, cli.seed))?;
        }
        Command::Reduce4 { input } => {
            let g = read_graph(input)?;
            emit_graph(cli, &four_copies(&g)?)?;
        }
        Command::VerifyTheorem { max_n } => {
            let results = verify_theorem(*max_n)?;
            let mut buf = Vec::new();
            write_campaign_csv(&results, &mut buf)?;
            emit(cli, &String::from_utf8_lossy(&buf))?;
            let graphs: usize = results.iter().map(|r| r.realization_count).sum();
            let failed: Vec<String> = results
                .iter()
                .filter(|r| !(r.theorem_holds && r.witness_sound))
                .map(|r| r.profile.to_string())
                .collect();
            eprintln!(
                "{} profiles, {graphs} realizations, {} violations",
                results.len(),
                failed.len()
            );
            if !failed.is_empty() {
                eprintln!("violating profiles: {}", failed.join(" "));
                return Ok(Outcome::Violation);
            }
        }
        Command::FindSharp { profile, patterns } => {
            let profile = PartitionProfile::parse(profile, Flavor::CliqueUnion)?;
            let patterns = patterns
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(pattern_graph)
                .collect::<Result<Vec<_>>>()?;
            match find_sharp_example(&profile, &patterns)? {
                Some(g) => emit_graph(cli, &g)?,
                None => eprintln!("no realization of {profile} matches"),
            }
        }
        Command::Sharpness { profiles } => {
            let profiles = profiles
                .split(';')
                .filter(|p| !p.trim().is_empty())
                .map(|p| PartitionProfile::parse(p, Flavor::CliqueUnion))
                .collect::<Result<Vec<_>>>()?;
            let mut buf = Vec::new();
            let rows = bounds_report_campaign(&profiles, &mut buf)?;
            emit(cli, &String::from_utf8_lossy(&buf))?;
            let flagged = rows.iter().filter(|r| r.flagged).count();
            let noncanonical = rows.iter().filter(|r| !r.canonical).count();
            eprintln!(
                "{flagged} of {noncanonical} non-canonical realizations beat every classical bound"
            );
            if flagged != noncanonical {
                return Ok(Outcome::Violation);
            }
        }
    }
    Ok(Outcome::Ok)
}
