//! `gudg`: command-line driver for the reduction from 1-negative planar 3-SAT
//! to metric dimension on Gabriel unit disk graphs.
//!
//! Exit codes: 0 on success, 1 when a check or verification fails, 2 on
//! usage, input or parse errors.

mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use assembler::{build, write_assembly, PendantChoice};
use geom_graph::{is_gudg_embedding, parse_embedded_graph, Fixed};
use mdim::{metric_dimension_exact, write_landmarks, ExactOutcome};
use orthodraw::{parse_drawing, simple_orthogonal_draw, validate_drawing, write_drawing, Drawing, PlaneGridParams};
use sat3::{
    clause_variable_graph, parse_dimacs, random_instance, shorten_edge_paths, validate_instance, write_dimacs,
    NameRules, RandomInstanceParams, SatInstance,
};
use verify::{save_corpus_entry, verify_reduction, write_summary, CorpusEntry, MAX_EQUIVALENCE_VARIABLES};

#[derive(Parser, Debug)]
#[command(name = "gudg", version, about = "Metric dimension reduction on Gabriel unit disk graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Names {
    /// Reject generated names (user input).
    Input,
    /// Accept generated names (output of `shorten`).
    Generated,
}

impl From<Names> for NameRules {
    fn from(n: Names) -> Self {
        match n {
            Names::Input => NameRules::Input,
            Names::Generated => NameRules::AllowReserved,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a DIMACS instance, and optionally a drawing of it.
    ValidateInstance {
        cnf: PathBuf,
        #[arg(long)]
        drawing: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "input")]
        names: Names,
    },
    /// Draw the clause-variable graph of an instance on the grid.
    Draw {
        cnf: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "input")]
        names: Names,
    },
    /// Shorten every edge path to length at most two.
    Shorten {
        cnf: PathBuf,
        drawing: PathBuf,
        #[arg(long)]
        out_cnf: PathBuf,
        #[arg(long)]
        out_drawing: PathBuf,
    },
    /// Build the embedded graph of an instance and its drawing.
    Assemble {
        cnf: PathBuf,
        drawing: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Also write the forced landmarks for this pendant side.
        #[arg(long, value_enum)]
        landmarks: Option<Side>,
    },
    /// Check that an embedded graph is a Gabriel unit disk embedding.
    CheckGudg {
        graph: PathBuf,
        /// Minimum distance of non-adjacent pairs beyond 1.
        #[arg(long, default_value = "0.001")]
        margin: Fixed,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Compute the metric dimension of a graph file exactly.
    SolveMd {
        graph: PathBuf,
        /// Give up above this many landmarks.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Run every reduction suite on an instance and its drawing.
    VerifyReduction {
        cnf: PathBuf,
        drawing: PathBuf,
        /// Directory receiving the full and summary reports.
        #[arg(long, default_value = "reports")]
        report_dir: PathBuf,
    },
    /// Render an embedded graph: Gabriel pairs solid, other unit pairs dashed.
    ExportSvg {
        graph: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Generate random instances whose shortened form fits the brute-force
    /// equivalence check.
    GenCorpus {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = MAX_EQUIVALENCE_VARIABLES)]
        max_variables: usize,
        /// Lattice columns and rows are drawn from 2 up to this.
        #[arg(long, default_value_t = 4)]
        max_side: usize,
        /// Lattice spacing is drawn from 2 up to this.
        #[arg(long, default_value_t = 3)]
        max_spacing: i64,
        #[arg(long, default_value_t = 10_000)]
        attempts: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    A,
    B,
}

impl From<Side> for PendantChoice {
    fn from(s: Side) -> Self {
        match s {
            Side::A => PendantChoice::A,
            Side::B => PendantChoice::B,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_instance(path: &Path, rules: NameRules) -> Result<SatInstance> {
    parse_dimacs(&read(path)?, rules).with_context(|| format!("parsing {}", path.display()))
}

fn load_drawing(path: &Path) -> Result<Drawing> {
    parse_drawing(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_pair(cnf: &Path, drawing: &Path) -> Result<(SatInstance, Drawing)> {
    let text = read(cnf)?;
    let psi = parse_dimacs(&text, NameRules::Input)
        .or_else(|_| parse_dimacs(&text, NameRules::AllowReserved))
        .with_context(|| format!("parsing {}", cnf.display()))?;
    Ok((psi, load_drawing(drawing)?))
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::ValidateInstance { cnf, drawing, names } => {
            let psi = load_instance(&cnf, names.into())?;
            let mut ok = true;
            let report = validate_instance(&psi);
            for v in &report.violations {
                println!("instance: {v}");
            }
            ok &= report.passed();
            if let Some(path) = drawing {
                let d = load_drawing(&path)?;
                let report = validate_drawing(&clause_variable_graph(&psi).graph, &d);
                for v in &report.violations {
                    println!("drawing: {v}");
                }
                ok &= report.passed();
            }
            println!("{}", if ok { "valid" } else { "invalid" });
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Draw { cnf, output, names } => {
            let psi = load_instance(&cnf, names.into())?;
            let d = simple_orthogonal_draw(&clause_variable_graph(&psi).graph)?;
            write(&output, &write_drawing(&d))?;
            println!("max path length {}", d.max_path_len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Shorten { cnf, drawing, out_cnf, out_drawing } => {
            let (psi, d) = load_pair(&cnf, &drawing)?;
            let (short, sd) = shorten_edge_paths(&psi, &d)?;
            write(&out_cnf, &write_dimacs(&short))?;
            write(&out_drawing, &write_drawing(&sd))?;
            println!("{} variables, {} clauses after shortening", short.variable_count(), short.clause_count());
            Ok(ExitCode::SUCCESS)
        }
        Command::Assemble { cnf, drawing, output, landmarks } => {
            let (psi, d) = load_pair(&cnf, &drawing)?;
            let a = build(&psi, &d)?;
            write(&output, &write_assembly(&a))?;
            if let Some(side) = landmarks {
                let forced = assembler::forced_landmarks(&a, side.into());
                write(&output.with_extension("landmarks"), &write_landmarks(&forced.set()))?;
            }
            println!("{} vertices, {} edges, budget {}", a.vertex_count(), a.graph.edge_count(), a.budget);
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckGudg { graph, margin, max_degree } => {
            let g = parse_embedded_graph(&read(&graph)?).with_context(|| format!("parsing {}", graph.display()))?;
            let report = is_gudg_embedding(&g, margin);
            for v in report.violations.iter().take(20) {
                println!("{v}");
            }
            let degree = g.graph().max_degree().map_or(0, |(_, d)| d);
            let ok = report.passed() && degree <= max_degree;
            println!("{} violations, max degree {degree}", report.violations.len());
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::SolveMd { graph, bound } => {
            let g = parse_embedded_graph(&read(&graph)?).with_context(|| format!("parsing {}", graph.display()))?;
            match metric_dimension_exact(g.graph(), bound)? {
                ExactOutcome::Optimal { k, set } => {
                    println!("k {k}");
                    print!("{}", write_landmarks(&set));
                    Ok(ExitCode::SUCCESS)
                }
                ExactOutcome::ExceedsBound { bound } => {
                    println!("exceeds {bound}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::VerifyReduction { cnf, drawing, report_dir } => {
            let (instance, drawing) = load_pair(&cnf, &drawing)?;
            let name = cnf.file_stem().and_then(|s| s.to_str()).unwrap_or("instance").to_string();
            let (_, report) = verify_reduction(&CorpusEntry { name: name.clone(), instance, drawing })?;
            let full: String = report.suites.iter().map(|s| s.to_text()).collect();
            let full_path = report_dir.join(format!("{name}.txt"));
            write(&full_path, &full)?;
            write(&report_dir.join(format!("{name}.tsv")), &write_summary(&report.suites))?;
            for s in &report.suites {
                println!("{}", s.summary_line());
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verification failed; see {}", full_path.display());
                Ok(ExitCode::from(1))
            }
        }
        Command::ExportSvg { graph, output } => {
            let text = read(&graph)?;
            let g = parse_embedded_graph(&text).with_context(|| format!("parsing {}", graph.display()))?;
            let names = gadgets::parse_names(&text)?;
            let labels: Vec<String> = (0..g.vertex_count()).map(|v| names.get(&v).cloned().unwrap_or_default()).collect();
            let labelled = if names.is_empty() { None } else { Some(labels.as_slice()) };
            write(&output, &svg::render(&g, labelled))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::GenCorpus { seed, count, output, max_variables, max_side, max_spacing, attempts } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if max_side < 2 || max_spacing < 2 {
                bail!("--max-side and --max-spacing must be at least 2");
            }
            let mut kept = 0;
            for _ in 0..attempts {
                if kept == count {
                    break;
                }
                let grid = PlaneGridParams {
                    width: rng.gen_range(2..=max_side),
                    height: rng.gen_range(2..=max_side),
                    spacing: rng.gen_range(2..=max_spacing),
                    ..PlaneGridParams::default()
                };
                let params = RandomInstanceParams { grid, ..RandomInstanceParams::default() };
                let (instance, drawing) = random_instance(&mut rng, params)?;
                let (short, _) = shorten_edge_paths(&instance, &drawing)?;
                if short.variable_count() > max_variables || build(&instance, &drawing).is_err() {
                    continue;
                }
                let entry = CorpusEntry { name: format!("{kept:02}"), instance, drawing };
                save_corpus_entry(&output, &entry)?;
                println!("{} {} variables, {} after shortening", entry.name, entry.instance.variable_count(), short.variable_count());
                kept += 1;
            }
            if kept < count {
                bail!("only {kept} of {count} instances found in {attempts} attempts");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use geom_graph::DEFAULT_MARGIN;

    #[test]
    fn command_line_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn default_margin_matches_the_library() {
        let cli = Cli::parse_from(["gudg", "check-gudg", "g.txt"]);
        let Command::CheckGudg { margin, .. } = cli.command else { panic!("wrong command") };
        assert_eq!(margin, DEFAULT_MARGIN);
    }
}
