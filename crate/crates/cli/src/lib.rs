//! Command-line front end for the `iceflower` library.
//!
//! Exit codes: 0 success, 1 a negative mathematical answer (non-member, no
//! coloring within bounds, ...), 2 usage or input-format errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use iceflower::coloring::{bfdt, is_proper_total, ChiOutcome, ColoredGraph, FdtSearch, TotalColoring, MAX_PALETTE};
use iceflower::degree::{is_graphical, realize_sequence, DegreeSequence};
use iceflower::ice_flower::{build_uniform_fdt_system, is_strongly_colored, saturate, ColoredIceFlowerSystem, IceFlowerSystem};
use iceflower::lattice::{
    build_haired_cycle, close_to_hamiltonian, colored_lattice_member, decompose_to_stars, hamiltonian_lattice_member,
    planar_lattice_member, prufer_code, recompose, spanning_lattice_count, uncolored_lattice_member, CoincideScript,
};
use iceflower::topcode::{
    realize_topcode, realize_topcode_identify, solve_dnsp, string_from_topcode, topcode_from_graph, DnspOptions,
    NumberString, TopcodeMatrix,
};
use iceflower::{iso, Graph};

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "iceflower", version, about = "Ice-flower systems, star-graphic lattices, felicitous-difference colorings and Topcode-matrices")]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Express a connected graph as coincided stars.
    Decompose(InOut),
    /// Replay a coinciding script into a graph.
    Recompose(InOut),
    /// Star-graphic lattice membership.
    Lattice {
        #[command(subcommand)]
        command: LatticeCommand,
    },
    /// Degree sequences.
    Seq {
        #[command(subcommand)]
        command: SeqCommand,
    },
    /// Haired cycles and their hamiltonian closings.
    Hamiltonian {
        #[command(subcommand)]
        command: HamiltonianCommand,
    },
    /// Total colorings.
    Coloring {
        #[command(subcommand)]
        command: ColoringCommand,
    },
    /// Uniform ice-flower systems.
    Iceflower {
        #[command(subcommand)]
        command: IceflowerCommand,
    },
    /// Greedily coincide copies of a system's stars into one graph.
    Saturate {
        system: PathBuf,
        /// Copies of each star, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        copies: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Topcode-matrices and number strings.
    Topcode {
        #[command(subcommand)]
        command: TopcodeCommand,
    },
    /// Export to other formats.
    Export {
        #[command(subcommand)]
        command: ExportCommand,
    },
}

#[derive(Args, Debug)]
struct InOut {
    input: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    /// Check membership of a graph in one lattice.
    Check {
        kind: LatticeKind,
        input: PathBuf,
        /// Base star leaf counts (uncolored lattice).
        #[arg(long, value_delimiter = ',')]
        base: Vec<usize>,
        /// Colored base system file (colored lattice).
        #[arg(long)]
        system: Option<PathBuf>,
        /// Where to write the witness (script, coloring or haired cycle).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Number of labeled trees on m vertices.
    SpanningCount { m: usize },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LatticeKind {
    Uncolored,
    Hamiltonian,
    Planar,
    Spanning,
    Colored,
}

#[derive(Subcommand, Debug)]
enum SeqCommand {
    /// Test whether a degree sequence is graphical and print a realization.
    Check {
        #[arg(value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum HamiltonianCommand {
    /// Build the haired cycle of a degree list and close it in all ways.
    Build {
        #[arg(value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
        /// Union over every distinct ordering of the degrees.
        #[arg(long)]
        all_orders: bool,
        /// Directory for `haired.g` and `closed-<i>.g`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ColoringCommand {
    /// Check properness and report edge weights of a colored graph.
    Verify { input: PathBuf },
    /// Exact felicitous-difference total chromatic number.
    ChiFdt {
        input: PathBuf,
        /// Largest palette tried.
        #[arg(long, default_value_t = 20)]
        max_colors: u32,
        /// Time limit per palette size, in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Where to write the witness coloring.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum IceflowerCommand {
    /// Uniform system of n stars K_{1,n-1} with constant edge weight k.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that every pair of stars can be coincided.
    StrongCheck { input: PathBuf },
}

#[derive(Subcommand, Debug)]
enum TopcodeCommand {
    /// Colored graph to Topcode-matrix and number string.
    Encode(InOut),
    /// Topcode-matrix to colored graph.
    Decode {
        input: PathBuf,
        /// Let equal values denote distinct vertices (small matrices only).
        #[arg(long)]
        identify: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cut a number string into Topcode-matrices realizing colored trees.
    Solve {
        /// Digits, or a path to a file holding them.
        string: String,
        /// Edge count, or a range `a..b`.
        #[arg(long)]
        q: String,
        /// Character substitutions applied first, e.g. `o=0`.
        #[arg(long, value_delimiter = ',')]
        substitute: Vec<String>,
        /// Time limit in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Solutions to keep (all are counted).
        #[arg(long, default_value_t = 100)]
        max_kept: usize,
        /// Directory for `solution-<i>.topcode` and `solution-<i>.cg`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ExportCommand {
    /// Graph or colored graph to DOT.
    Dot(InOut),
}

enum Failure {
    /// Exit 1.
    No(String),
    /// Exit 2.
    Usage(String),
}

type Outcome = std::result::Result<String, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn no(e: impl std::fmt::Display) -> Failure {
    Failure::No(e.to_string())
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CommandResult {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let outcome = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(cli.command)),
            Err(e) => Err(usage(e)),
        },
        None => execute(cli.command),
    };
    match outcome {
        Ok(stdout) => CommandResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::No(msg)) => CommandResult {
            exit_code: 1,
            stdout: format!("{msg}\n"),
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    Graph::from_text(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_colored(path: &Path) -> std::result::Result<ColoredGraph, Failure> {
    ColoredGraph::from_text(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn is_colored_doc(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        == Some("colored-graph")
}

/// A plain graph or a colored graph, detected from the first line.
fn read_any(path: &Path) -> std::result::Result<(Graph, Option<TotalColoring>), Failure> {
    let text = read(path)?;
    let located = |e: iceflower::Error| usage(format!("{}: {e}", path.display()));
    if is_colored_doc(&text) {
        let c = ColoredGraph::from_text(&text).map_err(located)?;
        Ok((c.graph, Some(c.coloring)))
    } else {
        Ok((Graph::from_text(&text).map_err(located)?, None))
    }
}

fn write_file(path: &Path, content: &str) -> std::result::Result<(), Failure> {
    fs::write(path, content).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Writes `content` to `output` and returns `summary`, or returns `content`
/// when there is no output path.
fn emit(output: &Option<PathBuf>, content: String, summary: String) -> Outcome {
    match output {
        Some(path) => {
            write_file(path, &content)?;
            Ok(format!("{summary}wrote {}\n", path.display()))
        }
        None => Ok(content),
    }
}

fn make_dir(dir: &Path) -> std::result::Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Decompose(io) => {
            let g = read_graph(&io.input)?;
            let script = decompose_to_stars(&g).map_err(no)?;
            emit(&io.output, script.to_text(), format!("{script}\n"))
        }
        Command::Recompose(io) => {
            let text = read(&io.input)?;
            let script = CoincideScript::from_text(&text).map_err(usage)?;
            let g = recompose(&script).map_err(no)?;
            emit(&io.output, g.to_text(), format!("p {} q {}\n", g.order(), g.size()))
        }
        Command::Lattice { command } => lattice(command),
        Command::Seq {
            command: SeqCommand::Check { degrees, output },
        } => {
            let d = DegreeSequence::new(degrees);
            if !is_graphical(&d) {
                return Err(no(format!("{d} is not graphical")));
            }
            let g = realize_sequence(&d).expect("graphical sequences are realizable");
            emit(&output, g.to_text(), format!("{d} is graphical\n"))
        }
        Command::Hamiltonian {
            command: HamiltonianCommand::Build {
                degrees,
                all_orders,
                output,
            },
        } => hamiltonian_build(degrees, all_orders, output),
        Command::Coloring { command } => coloring(command),
        Command::Iceflower { command } => match command {
            IceflowerCommand::Build { n, k, output } => {
                let s = build_uniform_fdt_system(n, k).map_err(no)?;
                let strong = is_strongly_colored(&s);
                emit(
                    &output,
                    s.to_text(),
                    format!("{n} stars K_{{1,{}}}, constant {k}, strongly colored: {strong}\n", n - 1),
                )
            }
            IceflowerCommand::StrongCheck { input } => {
                let s = ColoredIceFlowerSystem::from_text(&read(&input)?).map_err(usage)?;
                if is_strongly_colored(&s) {
                    Ok("strongly colored\n".into())
                } else {
                    Err(no("not strongly colored"))
                }
            }
        },
        Command::Saturate { system, copies, output } => {
            let s = ColoredIceFlowerSystem::from_text(&read(&system)?).map_err(usage)?;
            let r = saturate(&s, &copies).map_err(usage)?;
            let doc = ColoredGraph::new(r.graph, r.coloring).expect("saturate keeps colorings total");
            let summary = format!(
                "steps {}\np {} q {}\ndelta-saturated: {}\n",
                r.steps,
                doc.graph.order(),
                doc.graph.size(),
                r.saturated
            );
            let out = match &output {
                Some(path) => {
                    write_file(path, &doc.to_text())?;
                    format!("{summary}wrote {}\n", path.display())
                }
                None => format!("{summary}{}", doc.to_text()),
            };
            if r.saturated {
                Ok(out)
            } else {
                Err(Failure::No(format!("{}not saturated", out)))
            }
        }
        Command::Topcode { command } => topcode(command),
        Command::Export {
            command: ExportCommand::Dot(io),
        } => {
            let (g, f) = read_any(&io.input)?;
            emit(&io.output, export_dot(&g, f.as_ref()), String::new())
        }
    }
}

fn lattice(command: LatticeCommand) -> Outcome {
    let (kind, input, base, system, output) = match command {
        LatticeCommand::SpanningCount { m } => {
            return Ok(format!("{}\n", spanning_lattice_count(m).map_err(usage)?));
        }
        LatticeCommand::Check {
            kind,
            input,
            base,
            system,
            output,
        } => (kind, input, base, system, output),
    };
    match kind {
        LatticeKind::Uncolored => {
            let g = read_graph(&input)?;
            if base.is_empty() {
                return Err(usage("--base is required for the uncolored lattice"));
            }
            let base = IceFlowerSystem::new(&base).map_err(usage)?;
            let script = uncolored_lattice_member(&g, &base).ok_or_else(|| no("not a member"))?;
            emit(&output, script.to_text(), format!("member: {script}\n"))
        }
        LatticeKind::Hamiltonian => {
            let g = read_graph(&input)?;
            let w = hamiltonian_lattice_member(&g).ok_or_else(|| no("not hamiltonian"))?;
            let cycle: Vec<String> = w.cycle.vertices().iter().map(ToString::to_string).collect();
            let line = format!("hamilton cycle {}\n", cycle.join(" "));
            match &output {
                Some(path) => {
                    write_file(path, &w.haired.graph.to_text())?;
                    Ok(format!("{line}wrote {}\n", path.display()))
                }
                None => Ok(line),
            }
        }
        LatticeKind::Planar => {
            let g = read_graph(&input)?;
            if g.size() == 0 || g.min_degree() < 2 {
                return Err(no("has a vertex of degree below 2"));
            }
            if !iceflower::degree::is_connected(&g) {
                return Err(no("not connected"));
            }
            if !iceflower::planar::is_planar(&g) {
                return Err(no("not planar"));
            }
            let colors = planar_lattice_member(&g).ok_or_else(|| no("no 4-coloring found"))?;
            let mut out = String::new();
            for (v, c) in colors.iter().enumerate() {
                let _ = writeln!(out, "{} {c}", v + 1);
            }
            emit(&output, out, "member\n".into())
        }
        LatticeKind::Spanning => {
            let g = read_graph(&input)?;
            let code = prufer_code(&g).ok_or_else(|| no("not a tree"))?;
            let count = spanning_lattice_count(g.order()).map_err(no)?;
            let codes: Vec<String> = code.iter().map(ToString::to_string).collect();
            Ok(format!(
                "member: labeled tree on {} vertices\nprufer ({})\nlattice size {count}\n",
                g.order(),
                codes.join(",")
            ))
        }
        LatticeKind::Colored => {
            let c = read_colored(&input)?;
            let path = system.ok_or_else(|| usage("--system is required for the colored lattice"))?;
            let s = ColoredIceFlowerSystem::from_text(&read(&path)?).map_err(usage)?;
            let script = colored_lattice_member(&c.graph, &c.coloring, &s)
                .map_err(no)?
                .ok_or_else(|| no("not a member"))?;
            emit(&output, script.to_text(), format!("member: {script}\n"))
        }
    }
}

fn distinct_orders(degrees: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // Lexicographic successor until the sequence is non-increasing.
    loop {
        let Some(i) = (0..sorted.len().saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            return out;
        };
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).expect("successor exists");
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
}

fn hamiltonian_build(degrees: Vec<usize>, all_orders: bool, output: Option<PathBuf>) -> Outcome {
    let orders = if all_orders {
        distinct_orders(&degrees)
    } else {
        vec![degrees.clone()]
    };
    let haired = build_haired_cycle(&degrees).map_err(no)?;
    let mut closed: Vec<(iso::CanonicalForm, Graph)> = Vec::new();
    let mut last_error = None;
    for order in &orders {
        match build_haired_cycle(order).and_then(|t| close_to_hamiltonian(&t)) {
            Ok(gs) => closed.extend(gs.into_iter().map(|g| (iso::canonical_form(&g), g))),
            Err(e) => last_error = Some(e),
        }
    }
    closed.sort_by(|a, b| a.0.cmp(&b.0));
    closed.dedup_by(|a, b| a.0 == b.0);
    if closed.is_empty() {
        return Err(no(last_error.map_or_else(|| "no closing".to_string(), |e| e.to_string())));
    }
    let mut out = format!(
        "haired cycle p {} q {}, {} pendants\nclosings up to isomorphism: {}\n",
        haired.graph.order(),
        haired.graph.size(),
        haired.pendant_count(),
        closed.len()
    );
    if let Some(dir) = &output {
        make_dir(dir)?;
        write_file(&dir.join("haired.g"), &haired.graph.to_text())?;
        for (i, (_, g)) in closed.iter().enumerate() {
            write_file(&dir.join(format!("closed-{}.g", i + 1)), &g.to_text())?;
        }
        let _ = writeln!(out, "wrote {}", dir.display());
    }
    Ok(out)
}

fn coloring(command: ColoringCommand) -> Outcome {
    match command {
        ColoringCommand::Verify { input } => {
            let c = read_colored(&input)?;
            if !is_proper_total(&c.graph, &c.coloring).map_err(usage)? {
                return Err(no("not a proper total coloring"));
            }
            if c.graph.size() == 0 {
                return Ok("proper total coloring\nno edges\n".into());
            }
            let report = bfdt(&c.graph, &c.coloring).map_err(no)?;
            Ok(format!("proper total coloring\n{}\n", report.to_string().trim_end()))
        }
        ColoringCommand::ChiFdt {
            input,
            max_colors,
            budget,
            output,
        } => {
            let g = read_graph(&input)?;
            if max_colors > MAX_PALETTE {
                return Err(usage(format!("--max-colors is limited to {MAX_PALETTE}")));
            }
            let search = FdtSearch {
                time_limit: seconds(budget)?,
                node_limit: None,
            };
            match search.chi(&g, max_colors) {
                ChiOutcome::Exact { palette, coloring } => {
                    let doc = ColoredGraph::new(g, coloring).expect("solver colorings are total");
                    emit(&output, format!("{palette}\n{}", doc.to_text()), format!("{palette}\n"))
                        .and_then(|s| match &output {
                            Some(path) => write_file(path, &doc.to_text()).map(|()| s),
                            None => Ok(s),
                        })
                }
                ChiOutcome::NoneUpTo { budget } => Err(no(format!("none with at most {budget} colors"))),
                ChiOutcome::Unknown { palette } => Err(no(format!(
                    "unknown: search for {palette} colors hit the time limit; none below {palette}"
                ))),
            }
        }
    }
}

fn seconds(budget: Option<f64>) -> std::result::Result<Option<Duration>, Failure> {
    budget
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| usage(format!("invalid budget {s}"))))
        .transpose()
}

fn parse_q(text: &str) -> std::result::Result<std::ops::RangeInclusive<usize>, Failure> {
    let bad = || usage(format!("invalid --q `{text}`"));
    match text.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a == 0 || a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let q: usize = text.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(q..=q)
        }
    }
}

fn parse_substitutions(items: &[String]) -> std::result::Result<Vec<(char, char)>, Failure> {
    items
        .iter()
        .map(|s| {
            let mut chars = s.chars();
            match (chars.next(), chars.next(), chars.next(), chars.next()) {
                (Some(a), Some('='), Some(b), None) => Ok((a, b)),
                _ => Err(usage(format!("substitution `{s}` must look like `o=0`"))),
            }
        })
        .collect()
}

fn topcode(command: TopcodeCommand) -> Outcome {
    match command {
        TopcodeCommand::Encode(io) => {
            let c = read_colored(&io.input)?;
            let t = topcode_from_graph(&c.graph, &c.coloring).map_err(no)?;
            let s = string_from_topcode(&t).map_err(no)?;
            let doc = format!("{}# string {s}\n", t.to_text());
            emit(&io.output, doc, format!("{s}\n"))
        }
        TopcodeCommand::Decode {
            input,
            identify,
            output,
        } => {
            let t = TopcodeMatrix::from_text(&read(&input)?).map_err(usage)?;
            if identify {
                let found = realize_topcode_identify(&t).map_err(usage)?;
                if found.is_empty() {
                    return Err(no("no realization"));
                }
                let mut out = format!("realizations: {}\n", found.len());
                if let Some(dir) = &output {
                    make_dir(dir)?;
                    for (i, (g, f)) in found.into_iter().enumerate() {
                        let doc = ColoredGraph::new(g, f).expect("realizations are total");
                        write_file(&dir.join(format!("realization-{}.cg", i + 1)), &doc.to_text())?;
                    }
                    let _ = writeln!(out, "wrote {}", dir.display());
                }
                return Ok(out);
            }
            let (g, f) = realize_topcode(&t).ok_or_else(|| no("not realizable with distinct labels"))?;
            let doc = ColoredGraph::new(g, f).expect("realizations are total");
            emit(
                &output,
                doc.to_text(),
                format!("p {} q {}\n", doc.graph.order(), doc.graph.size()),
            )
        }
        TopcodeCommand::Solve {
            string,
            q,
            substitute,
            budget,
            max_kept,
            output,
        } => {
            let raw = if Path::new(&string).is_file() {
                read(Path::new(&string))?.trim().to_string()
            } else {
                string
            };
            let subs = parse_substitutions(&substitute)?;
            let d = NumberString::with_substitutions(&raw, &subs).map_err(usage)?;
            let qs = parse_q(&q)?;
            let options = DnspOptions {
                time_limit: seconds(budget)?,
                max_kept: Some(max_kept),
            };
            let report = solve_dnsp(&d, qs, &options).map_err(usage)?;
            let mut out = format!("string {d}\nlength {}\n{report}\n", d.len());
            if let Some(dir) = &output {
                make_dir(dir)?;
                for (i, s) in report.solutions.iter().enumerate() {
                    write_file(&dir.join(format!("solution-{}.topcode", i + 1)), &s.matrix.to_text())?;
                    let doc = ColoredGraph::new(s.graph.clone(), s.coloring.clone()).expect("realizations are total");
                    write_file(&dir.join(format!("solution-{}.cg", i + 1)), &doc.to_text())?;
                }
                let _ = writeln!(out, "wrote {} solutions to {}", report.solutions.len(), dir.display());
            }
            if report.count == 0 {
                Err(Failure::No(format!("{out}no tree realization")))
            } else {
                Ok(out)
            }
        }
    }
}

/// DOT text for `g`; with a coloring, vertices and edges carry their colors
/// as labels. Vertices and edges appear in ascending order.
pub fn export_dot(g: &Graph, f: Option<&TotalColoring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match f.and_then(|f| f.vertex(v)) {
            Some(c) => {
                let _ = writeln!(out, "  {v} [label=\"{c}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for e in g.edges() {
        match f.and_then(|f| f.edge(e.lo(), e.hi())) {
            Some(c) => {
                let _ = writeln!(out, "  {} -- {} [label=\"{c}\"];", e.lo(), e.hi());
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
            }
        }
    }
    out.push_str("}\n");
    out
}
