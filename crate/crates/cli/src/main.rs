use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tperfect::certificates::{builtin_corpus, load_corpus, parse_corpus_named, verify_corpus, CorpusOptions};
use tperfect::coloring::{ceil_chif_coloring, four_color_col, three_color_structured, Coloring};
use tperfect::graph::{chromatic_number_exact, omega, Graph};
use tperfect::graph6::decode_graph6;
use tperfect::polytope::{format_rational, fractional_chromatic_hperfect, verify_hstab_vertex, RationalVector};
use tperfect::recognition::{h_perfect_col, t_perfect_col, Witness};

/// Recognition, coloring and HSTAB certificates for complements of line
/// graphs.
#[derive(Parser)]
#[command(name = "tperfect", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decode a graph6 string and print its adjacency list.
    Parse { graph6: String },
    /// Decide h- and t-perfection when the complement is a line graph.
    Recognize { graph6: String },
    /// Color a graph.
    Color {
        graph6: String,
        #[arg(long, value_enum, default_value_t = Mode::Structured)]
        mode: Mode,
    },
    /// Fractional chromatic number, by the h-perfect closed form.
    Chif { graph6: String },
    /// Check whether a point is a vertex of HSTAB.
    VerifyCert {
        graph6: String,
        /// Comma-separated rationals, one per vertex.
        vector: String,
    },
    /// Corpus operations.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Verify every row of one or more corpus files.
    Verify {
        /// Corpus files; `-` reads standard input.
        files: Vec<String>,
        /// Use the built-in corpus of 80 graphs.
        #[arg(long)]
        builtin: bool,
        /// Also check 4-criticality.
        #[arg(long)]
        criticality: bool,
        /// Also check for induced P6.
        #[arg(long)]
        p6: bool,
        /// Emit one JSON object per row instead of a table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// The 3-coloring built from star-triangle covers of the root.
    Structured,
    /// Exact chromatic number by backtracking.
    Exact,
    /// The 4-coloring from the neighbor / non-neighbor split.
    Four,
    /// A coloring with the ceiling of the fractional chromatic number.
    Chif,
}

enum Failure {
    Usage(String),
    Check(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
    Ok(s)
}

fn graph_arg(arg: &str) -> Result<Graph, Failure> {
    let text = if arg == "-" {
        let input = read_stdin()?;
        input.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("").to_string()
    } else {
        arg.to_string()
    };
    decode_graph6(&text).map_err(|e| Failure::Usage(format!("bad graph6 `{text}`: {e}")))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Parse { graph6 } => {
            let g = graph_arg(&graph6)?;
            println!("vertices: {}", g.order());
            println!("edges: {}", g.size());
            if g.size() > 0 {
                println!("{g}");
            }
            Ok(())
        }
        Command::Recognize { graph6 } => recognize(&graph_arg(&graph6)?),
        Command::Color { graph6, mode } => color(&graph_arg(&graph6)?, mode),
        Command::Chif { graph6 } => chif(&graph_arg(&graph6)?),
        Command::VerifyCert { graph6, vector } => verify_cert(&graph_arg(&graph6)?, &vector),
        Command::Corpus { action: CorpusAction::Verify { files, builtin, criticality, p6, json } } => {
            corpus_verify(&files, builtin, CorpusOptions { criticality, p6 }, json)
        }
    }
}

fn describe(w: &Witness) -> String {
    match w {
        Witness::LongOddCircuit(c) => format!("odd circuit of length {} in the root: {:?}", c.len(), c.vertices()),
        Witness::EdgeMissesFiveCircuit { edge, circuit } => {
            format!("root edge {edge:?} has no end on the 5-circuit {:?}", circuit.vertices())
        }
        Witness::K4(k) => format!("K4 on vertices {k:?}"),
    }
}

fn recognize(g: &Graph) -> Result<(), Failure> {
    let r = t_perfect_col(g);
    println!("complement of a line graph: {}", yes_no(r.is_complement_of_line_graph));
    let Some(root) = &r.root else {
        return Ok(());
    };
    println!("root: {} vertices, {} edges", root.root.order(), root.root.size());
    println!("root adjacency: {}", root.root);
    let map: Vec<String> = root.edge_of.iter().enumerate().map(|(v, (a, b))| format!("{v}={a}-{b}")).collect();
    println!("vertex to root edge: {}", map.join(" "));
    if let Some(h) = r.h_perfect {
        println!("h-perfect: {}", yes_no(h));
    }
    if let Some(t) = r.t_perfect {
        println!("t-perfect: {}", yes_no(t));
    }
    if let Some(w) = &r.witness {
        println!("witness: {}", describe(w));
    }
    Ok(())
}

fn color(g: &Graph, mode: Mode) -> Result<(), Failure> {
    let result: Result<Coloring, String> = match mode {
        Mode::Structured => three_color_structured(g).map_err(|e| e.to_string()),
        Mode::Four => four_color_col(g).map_err(|e| e.to_string()),
        Mode::Chif => ceil_chif_coloring(g).map_err(|e| e.to_string()),
        Mode::Exact => chromatic_number_exact(g).map(|(_, c)| c).map_err(|e| e.to_string()),
    };
    let c = result.map_err(Failure::Check)?;
    let proper = c.is_proper(g);
    println!("colors: {}", c.count());
    let list: Vec<String> = c.colors.iter().map(usize::to_string).collect();
    println!("coloring: {}", list.join(" "));
    println!("proper: {}", yes_no(proper));
    if proper {
        Ok(())
    } else {
        Err(Failure::Check("coloring is not proper".into()))
    }
}

fn chif(g: &Graph) -> Result<(), Failure> {
    let report = h_perfect_col(g);
    println!("omega: {}", omega(g));
    println!("chi_f: {}", format_rational(&fractional_chromatic_hperfect(g)));
    match report.h_perfect {
        Some(true) => {
            println!("h-perfect: yes");
            Ok(())
        }
        Some(false) => Err(Failure::Check("the graph is not h-perfect; the value above does not apply".into())),
        None => {
            println!("h-perfect: unknown (complement is not a line graph); the value assumes h-perfection");
            Ok(())
        }
    }
}

fn verify_cert(g: &Graph, vector: &str) -> Result<(), Failure> {
    let x: RationalVector = vector.parse().map_err(|e| Failure::Usage(format!("bad vector: {e}")))?;
    let rep = verify_hstab_vertex(g, &x).map_err(|e| Failure::Usage(e.to_string()))?;
    let k4_free = omega(g) < 4;
    println!("member: {}", yes_no(rep.member));
    if let Some(c) = &rep.violated {
        println!("violated: {c}");
    }
    println!("non-integral: {}", yes_no(rep.non_integral));
    println!("tight constraints: {}", rep.tight_constraints.len());
    println!("rank: {} of {}", rep.rank, g.order());
    println!("vertex: {}", yes_no(rep.is_vertex));
    println!("K4-free: {}", yes_no(k4_free));
    println!("refutes t-perfection: {}", yes_no(rep.is_vertex && rep.non_integral && k4_free));
    if rep.is_vertex {
        Ok(())
    } else {
        Err(Failure::Check(String::new()))
    }
}

fn corpus_verify(files: &[String], builtin: bool, opts: CorpusOptions, json: bool) -> Result<(), Failure> {
    if files.is_empty() && !builtin {
        return Err(Failure::Usage("give corpus files or --builtin".into()));
    }
    let mut certs = if builtin { builtin_corpus() } else { Vec::new() };
    for f in files {
        let rows = if f == "-" { parse_corpus_named(&read_stdin()?, "stdin") } else { load_corpus(f) };
        certs.extend(rows.map_err(|e| Failure::Usage(format!("{f}: {e}")))?);
    }
    let report = verify_corpus(&certs, opts);
    if json {
        print!("{}", report.render_json_lines());
    } else {
        print!("{}", report.render_table());
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::Check(String::new()))
    }
}
