mod report;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use khqt::analysis::{bundled_corpus, Analysis, Source, BUNDLED_CORPUS, TREFOIL_PD, TREFOIL_PERMUTATIONS};
use khqt::linkdiag::parse_corpus;
use khqt::svg::chord_diagram_svg;
use khqt::verify::{all_passed, verify_source, Check};
use khqt::{Calibration, Shading, MAX_EDGES};
use rayon::prelude::*;
use serde::Serialize;

use report::*;

#[derive(Parser, Debug)]
#[command(name = "khqt", version, about = "Quasi-tree and spanning-tree models of reduced Khovanov homology")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Refuse inputs with more crossings/edges than this (at most 20).
    #[arg(long, default_value_t = 16, global = true, value_parser = clap::value_parser!(u8).range(1..=MAX_EDGES as i64))]
    max_crossings: u8,

    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// How to read the input; `auto` treats text containing `sigma0` as a
    /// permutation file and anything else as a PD code.
    #[arg(long, value_enum, default_value_t = InputKind::Auto, global = true)]
    input_kind: InputKind,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
    Svg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InputKind {
    Auto,
    Pd,
    Sigma,
}

#[derive(Args, Debug)]
struct Input {
    /// Input file; `-` or nothing reads standard input.
    path: Option<PathBuf>,

    /// Inline input text instead of a file.
    #[arg(long, conflicts_with_all = ["path", "builtin"])]
    code: Option<String>,

    /// A bundled input: `trefoil4` (permutations), `trefoil4-pd`, or a
    /// corpus knot name such as `3_1`.
    #[arg(long, conflicts_with = "path")]
    builtin: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Counts: crossings, writhe, Tait and ribbon graph data, quasi-trees.
    Info(Input),
    /// Bigraded generator table and per-quasi-tree rows.
    Gradings(Input),
    /// Quasi-trees with chord orders, activity words and paired trees.
    Quasitrees(Input),
    /// Euler characteristic of the quasi-tree table against the bracket.
    Jones(Input),
    /// Ordered chord diagrams (SVG or JSON).
    Chords {
        #[command(flatten)]
        input: Input,
        /// One-based quasi-tree number for single SVG output.
        #[arg(long, default_value_t = 1)]
        quasitree: usize,
        /// Write one SVG per quasi-tree into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Every cross-oracle check on one input.
    Verify(Input),
    /// Runs a command over every diagram of a corpus file.
    Corpus {
        /// Corpus file (`name<TAB>pdcode` per line); default is the bundled
        /// knot table.
        #[arg(env = "KHQT_CORPUS")]
        path: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CorpusMode::Verify)]
        mode: CorpusMode,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CorpusMode {
    Info,
    Jones,
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global()?;
    }
    let max = cli.max_crossings as usize;
    let out = match &cli.command {
        Command::Info(input) => {
            let (name, a) = analyse(cli, input)?;
            let r = InfoReport::new(name, &a);
            emit(cli.format, &r, || r.text(), || format!("{}\n{}\n", InfoReport::TSV_HEADER, r.tsv_row()))?
        }
        Command::Gradings(input) => {
            let (_, a) = analyse(cli, input)?;
            let table = a.table()?;
            let r = GradingsReport {
                thickness: table.thickness(),
                table: &table,
                ribbon_genus: a.ribbon_genus,
                quasitrees: quasitree_rows(&a),
            };
            emit(cli.format, &r, || gradings_text(&r), || gradings_tsv(&r))?
        }
        Command::Quasitrees(input) => {
            let (_, a) = analyse(cli, input)?;
            let rows = quasitree_rows(&a);
            emit(cli.format, &rows, || quasitrees_text(&rows), || {
                if a.tait.is_some() {
                    format!("{}\n{}", quasitrees_tsv(&rows), trees_tsv(&rows))
                } else {
                    quasitrees_tsv(&rows)
                }
            })?
        }
        Command::Jones(input) => {
            let (_, a) = analyse(cli, input)?;
            let j = a.jones(Calibration::FROZEN)?;
            let ok = j.equal != Some(false);
            let out = emit(cli.format, &j, || jones_text(&j), || {
                format!(
                    "euler\tcalibrated\tbracket\tequal\n{}\t{}\t{}\t{}\n",
                    j.euler.to_text("q"),
                    j.calibrated.to_text("t"),
                    j.bracket.as_ref().map(|b| b.to_text("t")).unwrap_or_default(),
                    j.equal.map(|e| e.to_string()).unwrap_or_default()
                )
            })?;
            print!("{out}");
            return Ok(ok);
        }
        Command::Chords { input, quasitree, out_dir } => return chords(cli, input, *quasitree, out_dir.as_ref()),
        Command::Verify(input) => {
            let (_, source) = read_source(cli, input)?;
            let checks = verify_source(&source, max, Calibration::FROZEN);
            print!("{}", emit(cli.format, &checks, || checks_text(&checks), || checks_tsv(&checks))?);
            return Ok(all_passed(&checks));
        }
        Command::Corpus { path, mode } => return corpus(cli, path.as_ref(), *mode),
    };
    print!("{out}");
    Ok(true)
}

/// Renders `value` in the requested format; SVG is not available here.
fn emit<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
    tsv: impl FnOnce() -> String,
) -> Result<String> {
    let s = match format {
        Format::Text => text(),
        Format::Tsv => tsv(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value)?),
        Format::Svg => bail!("--format svg is only available for the chords command"),
    };
    Ok(s)
}

fn read_input_text(input: &Input) -> Result<(Option<String>, String)> {
    if let Some(code) = &input.code {
        return Ok((None, code.clone()));
    }
    if let Some(name) = &input.builtin {
        let text = match name.as_str() {
            "trefoil4" => TREFOIL_PERMUTATIONS.to_string(),
            "trefoil4-pd" => TREFOIL_PD.to_string(),
            other => bundled_corpus()
                .into_iter()
                .find(|e| e.name == other)
                .map(|e| e.diagram.to_pd_string())
                .ok_or_else(|| anyhow!("no bundled input named {other:?}"))?,
        };
        return Ok((Some(name.clone()), text));
    }
    match &input.path {
        Some(p) if p.as_os_str() != "-" => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let name = p.file_stem().map(|s| s.to_string_lossy().into_owned());
            Ok((name, text))
        }
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).context("reading standard input")?;
            Ok((None, text))
        }
    }
}

fn read_source(cli: &Cli, input: &Input) -> Result<(Option<String>, Source)> {
    let (name, text) = read_input_text(input)?;
    let kind = match cli.input_kind {
        InputKind::Auto if text.contains("sigma0") => InputKind::Sigma,
        InputKind::Auto => InputKind::Pd,
        k => k,
    };
    let source = match kind {
        InputKind::Sigma => Source::parse_permutations(&text)?,
        _ => Source::parse_pd(&text)?,
    };
    Ok((name, source))
}

fn analyse(cli: &Cli, input: &Input) -> Result<(Option<String>, Analysis)> {
    let (name, source) = read_source(cli, input)?;
    let a = Analysis::new(&source, cli.max_crossings as usize)?;
    Ok((name, a))
}

#[derive(Serialize)]
struct ChordRecord {
    id: usize,
    edges: khqt::EdgeSet,
    cyclic_order: Vec<usize>,
    live: khqt::EdgeSet,
    word: String,
}

fn chords(cli: &Cli, input: &Input, pick: usize, out_dir: Option<&PathBuf>) -> Result<bool> {
    let (name, a) = analyse(cli, input)?;
    let label = name.unwrap_or_else(|| "diagram".into());
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (k, r) in a.quasitrees.iter().enumerate() {
            let path = dir.join(format!("{label}-Q{}.svg", k + 1));
            let title = format!("{label} Q{} = {}", k + 1, r.quasitree.edges);
            fs::write(&path, chord_diagram_svg(&r.chords, &title)).with_context(|| format!("writing {}", path.display()))?;
        }
        println!("wrote {} chord diagrams to {}", a.quasitrees.len(), dir.display());
        return Ok(true);
    }
    let records: Vec<ChordRecord> = a
        .quasitrees
        .iter()
        .enumerate()
        .map(|(k, r)| ChordRecord {
            id: k + 1,
            edges: r.quasitree.edges,
            cyclic_order: r.chords.cyclic_order_one_based(),
            live: r.chords.live(),
            word: r.word.unicode(),
        })
        .collect();
    let out = match cli.format {
        Format::Svg => {
            let r = a
                .quasitrees
                .get(pick.wrapping_sub(1))
                .ok_or_else(|| anyhow!("quasi-tree {pick} out of range 1..={}", a.quasitrees.len()))?;
            chord_diagram_svg(&r.chords, &format!("{label} Q{pick} = {}", r.quasitree.edges))
        }
        f => emit(f, &records, || quasitrees_text(&quasitree_rows(&a)), || quasitrees_tsv(&quasitree_rows(&a)))?,
    };
    print!("{out}");
    Ok(true)
}

#[derive(Serialize)]
struct CorpusRow {
    name: String,
    crossings: usize,
    quasitrees: Option<usize>,
    jones: Option<String>,
    equal: Option<bool>,
    checks_failed: Vec<Check>,
    error: Option<String>,
}

impl CorpusRow {
    fn ok(&self) -> bool {
        self.error.is_none() && self.checks_failed.is_empty() && self.equal != Some(false)
    }
}

fn corpus(cli: &Cli, path: Option<&PathBuf>, mode: CorpusMode) -> Result<bool> {
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => BUNDLED_CORPUS.to_string(),
    };
    let entries = parse_corpus(&text)?;
    let max = cli.max_crossings as usize;
    let rows: Vec<CorpusRow> = entries
        .par_iter()
        .map(|e| {
            let mut row = CorpusRow {
                name: e.name.clone(),
                crossings: e.diagram.crossing_count(),
                quasitrees: None,
                jones: None,
                equal: None,
                checks_failed: Vec::new(),
                error: None,
            };
            let analysis = Analysis::from_diagram(&e.diagram, max, Shading::Chosen);
            match analysis {
                Err(err) => row.error = Some(err.to_string()),
                Ok(a) => {
                    row.quasitrees = Some(a.quasitrees.len());
                    if mode != CorpusMode::Info && e.diagram.is_knot() {
                        match a.jones(Calibration::FROZEN) {
                            Ok(j) => {
                                row.jones = Some(j.calibrated.to_text("t"));
                                row.equal = j.equal;
                            }
                            Err(err) => row.error = Some(err.to_string()),
                        }
                    }
                    if mode == CorpusMode::Verify {
                        let source = Source::Diagram(e.diagram.clone());
                        row.checks_failed =
                            verify_source(&source, max, Calibration::FROZEN).into_iter().filter(|c| !c.passed).collect();
                    }
                }
            }
            row
        })
        .collect();
    let ok = rows.iter().all(CorpusRow::ok);
    let out = emit(
        cli.format,
        &rows,
        || {
            let mut s = String::new();
            for r in &rows {
                let status = if r.ok() { "ok" } else { "FAIL" };
                s.push_str(&format!(
                    "{}\t{}\tn={}\tquasi-trees={}",
                    status,
                    r.name,
                    r.crossings,
                    r.quasitrees.map(|q| q.to_string()).unwrap_or_else(|| "-".into())
                ));
                if let Some(j) = &r.jones {
                    s.push_str(&format!("\tV={j}"));
                }
                for c in &r.checks_failed {
                    s.push_str(&format!("\t[{}] {}", c.name, c.detail));
                }
                if let Some(e) = &r.error {
                    s.push_str(&format!("\terror: {e}"));
                }
                s.push('\n');
            }
            let passed = rows.iter().filter(|r| r.ok()).count();
            s.push_str(&format!("{passed}/{} diagrams ok\n", rows.len()));
            s
        },
        || {
            let mut s = String::from("name\tcrossings\tquasitrees\tjones\tequal\tfailed_checks\terror\n");
            for r in &rows {
                s.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.name,
                    r.crossings,
                    r.quasitrees.map(|q| q.to_string()).unwrap_or_default(),
                    r.jones.clone().unwrap_or_default(),
                    r.equal.map(|e| e.to_string()).unwrap_or_default(),
                    r.checks_failed.iter().map(|c| c.name).collect::<Vec<_>>().join(","),
                    r.error.clone().unwrap_or_default()
                ));
            }
            s
        },
    )?;
    print!("{out}");
    Ok(ok)
}
