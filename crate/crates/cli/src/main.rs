//! `piercing`: batch front end. Exit status 0 on success, 2 when a checked
//! bound or property fails on the input, 1 on any error.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use piercing_core::dsseq::{max_ds_length, DsMax};
use piercing_core::embedding::EmbeddedGraph;
use piercing_core::girthmax::{
    face_bound_pipeline, partition_cycle, search_fmax, verify_maximal, FmaxSearch, SearchConfig,
};
use piercing_core::pipeline::{clarkson_shor_experiment, pq_hitting_set, ExperimentStats};
use piercing_core::regions::{disks_to_set_system, random_disk_family, DiskFamily, DiskMode, DiscretizationStats};
use piercing_core::setsystem::{
    delaunay_graph, dual_vc_dimension, independence_number, min_piercing, vc_dimension, SetFamily,
};
use piercing_core::Limits;

/// Dual VC bound for non-piercing families such as disks.
const DISK_DUAL_VC_BOUND: usize = 4;

#[derive(Parser)]
#[command(name = "piercing", version, about = "Piercing numbers, Delaunay graphs and maximal plane graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Node budget for exact searches.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Wall-clock budget; the process fails once it is exceeded.
    #[arg(long, global = true)]
    budget_secs: Option<u64>,
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum piercing set of a set family (or of discretised disks).
    Pierce {
        #[arg(long)]
        input: PathBuf,
        /// Use the LP + ε-net hitting set instead of the exact solver.
        #[arg(long)]
        heuristic: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// VC and dual VC dimension.
    Vc {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Delaunay graph and its planarity.
    Delaunay {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search maximal plane graphs of girth >= ell for long faces.
    FmaxSearch {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n_max: usize,
        /// Maximal witnesses kept per root cycle length.
        #[arg(long, default_value_t = 4)]
        witnesses: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Search log as CSV.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Maximality report of an embedded graph.
    VerifyMaximal {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Pierce-point partition of one face.
    Partition {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        ell: usize,
        /// Face index in tracing order; the longest face by default.
        #[arg(long)]
        face: Option<usize>,
        /// Pierce vertices; computed exactly from the neighbourhood system
        /// when omitted.
        #[arg(long, value_delimiter = ',')]
        z: Option<Vec<usize>>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Longest Davenport-Schinzel sequence, as a CSV row.
    DsMax {
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 2)]
        b: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Random-deletion experiment on Delaunay edges.
    CsExperiment {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Per-trial rows as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Random disk family and its discretisation.
    GenDisks {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "general")]
        mode: DiskMode,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Discretised set family.
        #[arg(long)]
        family: Option<PathBuf>,
        /// Discretisation statistics as CSV.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
}

enum Outcome {
    Clean,
    Violation(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let g = &cli.global;
    if g.threads == 0 {
        bail!("--threads must be at least 1");
    }
    rayon::ThreadPoolBuilder::new().num_threads(g.threads).build_global().context("building thread pool")?;
    if let Some(secs) = g.budget_secs {
        std::thread::spawn(move || {
            std::thread::sleep(Duration::from_secs(secs));
            eprintln!("error: time budget of {secs} s exhausted");
            std::process::exit(1);
        });
    }
    let limits = match g.budget_nodes {
        Some(b) => Limits::default().with_node_budget(b),
        None => Limits::default(),
    };

    match cli.command {
        Command::Pierce { input, heuristic, output } => {
            let inst = load_family(&input)?;
            let fam = &inst.family;
            let cert = if heuristic { pq_hitting_set(fam)? } else { min_piercing(fam, &limits)? };
            let nu = independence_number(fam, &limits)?;
            emit(output.as_deref(), &json!({ "certificate": cert, "nu": nu, "tau": cert.size() }))?;
            if !cert.validate(fam) {
                return Ok(Outcome::Violation("certificate misses a set".into()));
            }
            if cert.optimal && cert.size() < nu {
                return Ok(Outcome::Violation(format!("tau = {} below nu = {nu}", cert.size())));
            }
            Ok(Outcome::Clean)
        }
        Command::Vc { input, output } => {
            let inst = load_family(&input)?;
            let vc = vc_dimension(&inst.family, &limits)?;
            let dual = dual_vc_dimension(&inst.family, &limits)?;
            let dual_le_2_pow_vc = vc >= usize::BITS as usize || dual <= 1usize << vc;
            emit(
                output.as_deref(),
                &json!({ "vc": vc, "dual_vc": dual, "dual_le_2_pow_vc": dual_le_2_pow_vc, "disks": inst.from_disks }),
            )?;
            if !dual_le_2_pow_vc {
                return Ok(Outcome::Violation(format!("dual VC {dual} exceeds 2^{vc}")));
            }
            if inst.from_disks && dual > DISK_DUAL_VC_BOUND {
                return Ok(Outcome::Violation(format!("dual VC {dual} of a disk family exceeds {DISK_DUAL_VC_BOUND}")));
            }
            Ok(Outcome::Clean)
        }
        Command::Delaunay { input, output } => {
            let inst = load_family(&input)?;
            let graph = delaunay_graph(&inst.family);
            let planar = graph.is_planar();
            let within = graph.edge_count() <= 3 * inst.family.len();
            emit(
                output.as_deref(),
                &json!({
                    "vertices": graph.vertex_count,
                    "edges": graph.edges,
                    "edge_count": graph.edge_count(),
                    "planar": planar,
                    "edges_le_3n": within,
                    "disks": inst.from_disks,
                }),
            )?;
            if inst.from_disks && !(planar && within) {
                return Ok(Outcome::Violation("Delaunay graph of a disk family is not planar with <= 3n edges".into()));
            }
            Ok(Outcome::Clean)
        }
        Command::FmaxSearch { ell, n_max, witnesses, output, log } => {
            let mut config = SearchConfig::new(ell, n_max, g.budget_nodes.unwrap_or(1_000_000));
            config.witnesses_per_root = witnesses;
            let result: FmaxSearch = search_fmax(config)?;
            if let Some(path) = log {
                write_file(&path, &result.log_csv())?;
            }
            emit(
                output.as_deref(),
                &json!({
                    "ell": ell,
                    "n_max": n_max,
                    "best_face_length": result.best_face_length,
                    "exhaustive": result.exhaustive,
                    "best": result.best,
                    "witness_count": result.witnesses.len(),
                }),
            )?;
            Ok(Outcome::Clean)
        }
        Command::VerifyMaximal { input, ell, output } => {
            let graph = EmbeddedGraph::from_json(&read_input(&input)?)?;
            let report = verify_maximal(&graph, ell)?;
            emit(output.as_deref(), &report)?;
            Ok(Outcome::Clean)
        }
        Command::Partition { input, ell, face, z, output } => {
            let graph = EmbeddedGraph::from_json(&read_input(&input)?)?;
            let faces = graph.trace_faces()?;
            let idx = match face {
                Some(i) if i < faces.len() => i,
                Some(i) => bail!("face {i} out of range: the embedding has {} faces", faces.len()),
                None => (0..faces.len()).max_by_key(|&i| (faces[i].len(), usize::MAX - i)).expect("a face"),
            };
            match z {
                Some(z) => {
                    let report = partition_cycle(&graph, &faces[idx], &z, ell)?;
                    emit(output.as_deref(), &report)?;
                    Ok(Outcome::Clean)
                }
                None => {
                    let report = face_bound_pipeline(&graph, &faces[idx], ell, &limits)?;
                    emit(output.as_deref(), &report)?;
                    if report.maximality.is_maximal && !report.all_ok() {
                        return Ok(Outcome::Violation("a check failed on a maximal instance".into()));
                    }
                    Ok(Outcome::Clean)
                }
            }
        }
        Command::DsMax { t, b, output } => {
            let r = max_ds_length(t, b, g.budget_nodes)?;
            emit_text(output.as_deref(), &format!("{}\n{}\n", DsMax::CSV_HEADER, r.csv_row()))?;
            if b == 2 && r.length + 1 > 2 * t {
                return Ok(Outcome::Violation(format!("length {} exceeds 2t - 1 = {}", r.length, 2 * t - 1)));
            }
            Ok(Outcome::Clean)
        }
        Command::CsExperiment { input, q, trials, genus, output, csv } => {
            let seed = g.seed.context("cs-experiment needs --seed")?;
            let inst = load_family(&input)?;
            let stats: ExperimentStats = clarkson_shor_experiment(&inst.family, q, trials, seed, genus, &limits)?;
            if let Some(path) = csv {
                write_file(&path, &stats.trials_csv())?;
            }
            let mut summary = serde_json::to_value(&stats)?;
            if let Some(obj) = summary.as_object_mut() {
                obj.remove("survivors");
                obj.remove("edges");
            }
            emit(output.as_deref(), &summary)?;
            if !stats.trials_within_cap {
                return Ok(Outcome::Violation("a trial exceeded the Delaunay edge cap".into()));
            }
            if !stats.mean_above_lower {
                return Ok(Outcome::Violation(format!(
                    "mean edge count {:.3} below the lower bound {:.3} minus 3 standard errors",
                    stats.mean_edges, stats.lower_bound
                )));
            }
            Ok(Outcome::Clean)
        }
        Command::GenDisks { n, mode, output, family, stats } => {
            let seed = g.seed.context("gen-disks needs --seed")?;
            let disks = random_disk_family(n, seed, mode)?;
            let disc = disks_to_set_system(&disks)?;
            emit_text(output.as_deref(), &format!("{}\n", disks.to_json()))?;
            if let Some(path) = family {
                write_file(&path, &format!("{}\n", disc.family.to_json()))?;
            }
            if let Some(path) = stats {
                write_file(&path, &format!("{}\n{}\n", DiscretizationStats::CSV_HEADER, disc.stats.csv_row()))?;
            }
            Ok(Outcome::Clean)
        }
    }
}

struct Instance {
    family: SetFamily,
    from_disks: bool,
}

/// A set family, or a disk family (recognised by its `disks` key) that is
/// discretised on the way in.
fn load_family(path: &Path) -> Result<Instance> {
    let text = read_input(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if value.get("disks").is_some() {
        let disks = DiskFamily::from_json(&text)?;
        Ok(Instance { family: disks_to_set_system(&disks)?.family, from_disks: true })
    } else {
        Ok(Instance { family: SetFamily::from_json(&text)?, from_disks: false })
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Pretty JSON with sorted keys.
fn emit<T: Serialize>(path: Option<&Path>, value: &T) -> Result<()> {
    let sorted = serde_json::to_value(value)?;
    emit_text(path, &format!("{}\n", serde_json::to_string_pretty(&sorted)?))
}

fn emit_text(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
