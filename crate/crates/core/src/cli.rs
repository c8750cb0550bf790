//! The `gametheory` command line. `run` parses arguments, executes one
//! subcommand and returns the process exit code: 0 on success, 1 when a
//! computation fails, 2 on invalid input.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::ci::{global_markov, progress_line, CIStatement, PlayerGraph};
use crate::error::{Error, Result};
use crate::gamefile::GameFile;
use crate::gametensor::{Format, Game};
use crate::groebner::GbConfig;
use crate::nash::{block_derangements, count_totally_mixed_nash, nash_eliminant, nash_equilibrium_ideal, number_tmne};
use crate::polyring::{format_rational, nash_equilibrium_ring, parse_rational, probability_ring, CoefField, Ideal};
use crate::polytope::linalg::Q;
use crate::{ci, correlated, spohn};

#[derive(Parser, Debug)]
#[command(name = "gametheory", version, about = "Exact equilibrium computations for normal-form games")]
struct Cli {
    /// Wrap results as {"command", "result", "format"} JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Reduction steps allowed per Gröbner basis (default 1000000 or $GT_GB_BUDGET).
    #[arg(long, global = true, value_name = "STEPS")]
    gb_budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a seeded random game file.
    RandomGame {
        #[arg(long)]
        format: String,
        #[arg(long, default_value = "QQ")]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generic numbers of totally mixed Nash equilibria.
    Tmne {
        #[command(subcommand)]
        command: TmneCommand,
    },
    /// Nash equilibrium ideals and totally mixed equilibria.
    Nash {
        #[command(subcommand)]
        command: NashCommand,
    },
    /// Correlated equilibrium polytope.
    Correlated {
        game: PathBuf,
        #[command(flatten)]
        view: CorrelatedView,
    },
    /// Spohn matrices, Spohn ideal and Konstanz matrix.
    Spohn {
        #[command(subcommand)]
        command: SpohnCommand,
    },
    /// Conditional independence ideals.
    Ci {
        #[command(subcommand)]
        command: CiCommand,
    },
    /// Ideal of the Spohn CI variety.
    SpohnCi {
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        model: ModelArgs,
        /// Report saturation progress on standard error.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Subcommand, Debug)]
enum TmneCommand {
    Count {
        #[arg(long)]
        format: String,
    },
    BlockDerangements {
        #[arg(long)]
        format: String,
        /// Print every block derangement, not just the count.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
enum NashCommand {
    Ideal {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, value_name = "e=VALUE")]
        param: Option<String>,
    },
    Solve {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, value_name = "e=VALUE")]
        param: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum SpohnCommand {
    Matrices {
        #[command(flatten)]
        game: GameArgs,
    },
    Ideal {
        #[command(flatten)]
        game: GameArgs,
    },
    Konstanz {
        #[command(flatten)]
        game: GameArgs,
    },
}

#[derive(Subcommand, Debug)]
enum CiCommand {
    Ideal {
        #[arg(long)]
        format: String,
        #[arg(long, default_value = "QQ")]
        field: String,
        #[command(flatten)]
        model: ModelArgs,
    },
}

#[derive(Args, Debug)]
struct GameArgs {
    game: PathBuf,
    /// Read the payoffs in this field instead of the file's.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Args, Debug)]
/// What to print; vertices when no flag is given.
#[group(required = false, multiple = false)]
struct CorrelatedView {
    #[arg(long)]
    vertices: bool,
    #[arg(long)]
    facets: bool,
    #[arg(long)]
    fvector: bool,
    #[arg(long)]
    dim: bool,
    #[arg(long)]
    payoffs: bool,
}

#[derive(Args, Debug)]
struct ModelArgs {
    /// Statements "A|B|C;..." with comma-separated labels.
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    statements: Option<String>,
    /// Undirected graph "1-2,2-3"; uses its global Markov statements.
    #[arg(long)]
    graph: Option<String>,
    /// Player labels, comma-separated (default 1,...,n).
    #[arg(long)]
    labels: Option<String>,
}

struct Output {
    command: &'static str,
    format: Option<Format>,
    text: String,
    result: Value,
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let cfg = match cli.gb_budget {
        Some(b) => GbConfig::with_budget(b),
        None => GbConfig::from_env(),
    };
    match execute(cli.command, &cfg) {
        Ok(out) => {
            if cli.json {
                let v = json!({
                    "command": out.command,
                    "format": out.format.map(|f| json!(f.dims())),
                    "result": out.result,
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else if !out.text.is_empty() {
                println!("{}", out.text.trim_end_matches('\n'));
            }
            0
        }
        Err(e) => {
            let code = if e.is_input_error() { 2 } else { 1 };
            if cli.json {
                eprintln!("{}", json!({ "error": e.to_string(), "exit_code": code }));
            } else {
                eprintln!("error: {e}");
            }
            code
        }
    }
}

fn parse_format(s: &str) -> Result<Format> {
    Format::parse(s)
}

fn parse_labels(s: Option<&str>, n: usize) -> Result<Vec<String>> {
    let labels = match s {
        None => ci::default_labels(n),
        Some(s) => s.split(',').map(|l| l.trim().to_string()).collect(),
    };
    if labels.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} labels for {n} players",
            labels.len()
        )));
    }
    Ok(labels)
}

fn statements(model: &ModelArgs, n: usize) -> Result<Vec<CIStatement>> {
    let labels = parse_labels(model.labels.as_deref(), n)?;
    match (&model.statements, &model.graph) {
        (Some(s), _) => CIStatement::parse_list(s, &labels),
        (None, Some(g)) => Ok(global_markov(&PlayerGraph::parse(g, n, Some(labels))?)),
        (None, None) => Err(Error::InvalidArgument("give --statements or --graph".into())),
    }
}

fn parse_param(s: &str) -> Result<Q> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| Error::InvalidArgument(format!("expected e=VALUE, got {s:?}")))?;
    if name.trim() != "e" {
        return Err(Error::InvalidArgument(format!("unknown parameter {name:?}")));
    }
    parse_rational(value)
}

fn field_override(s: &Option<String>) -> Result<Option<CoefField>> {
    s.as_deref().map(str::parse).transpose()
}

fn load_game(args: &GameArgs) -> Result<Game> {
    let field = field_override(&args.field)?;
    GameFile::load(&args.game)?.to_game(field)
}

fn load_nash_game(args: &GameArgs, param: &Option<String>) -> Result<Game> {
    let e = param.as_deref().map(parse_param).transpose()?;
    let file = GameFile::load(&args.game)?;
    match e {
        Some(e) => {
            if args.field.is_some() {
                return Err(Error::InvalidArgument("--param needs QQ; drop --field".into()));
            }
            file.to_parametric()?.specialize(&e)
        }
        None => file.to_game(field_override(&args.field)?),
    }
}

fn ideal_output(command: &'static str, format: Format, ideal: &Ideal) -> Output {
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    Output {
        command,
        format: Some(format),
        text: gens.join("\n"),
        result: json!(gens),
    }
}

/// Right-aligned columns, two spaces apart.
fn aligned(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn rationals(v: &[Q]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn execute(command: Command, cfg: &GbConfig) -> Result<Output> {
    match command {
        Command::RandomGame { format, field, seed, output } => {
            let format = parse_format(&format)?;
            let field: CoefField = field.parse()?;
            let file = GameFile::from_game(&Game::random(format.clone(), field, seed));
            let text = match output {
                Some(path) => {
                    write_file(&path, &file.to_json())?;
                    format!("wrote {}", path.display())
                }
                None => file.to_json(),
            };
            Ok(Output {
                command: "random-game",
                format: Some(format),
                text,
                result: serde_json::to_value(&file).unwrap(),
            })
        }
        Command::Tmne { command: TmneCommand::Count { format } } => {
            let format = parse_format(&format)?;
            let n = number_tmne(&format)?;
            Ok(Output {
                command: "tmne count",
                format: Some(format),
                text: n.to_string(),
                result: json!(n.to_string()),
            })
        }
        Command::Tmne { command: TmneCommand::BlockDerangements { format, list } } => {
            let format = parse_format(&format)?;
            let all = block_derangements(&format);
            let mut result = json!({ "count": all.len() });
            let text = if list {
                let lines: Vec<String> = all
                    .iter()
                    .map(|d| {
                        d.sets
                            .iter()
                            .map(|set| {
                                set.iter()
                                    .map(|s| format!("{}.{}", s.block + 1, s.index + 1))
                                    .collect::<Vec<_>>()
                                    .join(",")
                            })
                            .collect::<Vec<_>>()
                            .join(" | ")
                    })
                    .collect();
                result["derangements"] = json!(all
                    .iter()
                    .map(|d| d
                        .sets
                        .iter()
                        .map(|set| set.iter().map(|s| [s.block + 1, s.index + 1]).collect::<Vec<_>>())
                        .collect::<Vec<_>>())
                    .collect::<Vec<_>>());
                lines.join("\n")
            } else {
                all.len().to_string()
            };
            Ok(Output {
                command: "tmne block-derangements",
                format: Some(format),
                text,
                result,
            })
        }
        Command::Nash { command: NashCommand::Ideal { game, param } } => {
            let game = load_nash_game(&game, &param)?;
            let ring = nash_equilibrium_ring(game.format(), game.field())?;
            let ideal = nash_equilibrium_ideal(&ring, &game)?;
            Ok(ideal_output("nash ideal", game.format().clone(), &ideal))
        }
        Command::Nash { command: NashCommand::Solve { game, param } } => {
            let game = load_nash_game(&game, &param)?;
            let count = count_totally_mixed_nash(&game, cfg)?;
            let eliminant = nash_eliminant(&game, cfg)?.to_string();
            Ok(Output {
                command: "nash solve",
                format: Some(game.format().clone()),
                text: format!("eliminant: {eliminant}\ntotally mixed equilibria: {count}"),
                result: json!({ "eliminant": eliminant, "count": count }),
            })
        }
        Command::Correlated { game, view } => {
            let game = GameFile::load(&game)?.to_game(None)?;
            let ce = correlated::correlated_equilibria(&game)?;
            let format = Some(game.format().clone());
            let (text, result) = if view.facets {
                let fd = ce.facets()?;
                let mut lines: Vec<String> = fd.facets.iter().map(|h| h.to_string()).collect();
                lines.extend(fd.hull.iter().map(|h| h.to_string()));
                let row = |n: &[Q], r: &Q| json!({ "normal": rationals(n), "rhs": format_rational(r) });
                let result = json!({
                    "inequalities": fd.facets.iter().map(|h| row(&h.normal, &h.rhs)).collect::<Vec<_>>(),
                    "equations": fd.hull.iter().map(|h| row(&h.normal, &h.rhs)).collect::<Vec<_>>(),
                });
                (lines.join("\n"), result)
            } else if view.fvector {
                let f = ce.f_vector()?;
                let text = f.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                (text, json!(f))
            } else if view.dim {
                let d = ce.dim()?;
                (d.to_string(), json!(d))
            } else if view.payoffs {
                let pay = ce
                    .vertices()?
                    .iter()
                    .map(|v| correlated::joint_expected_payoffs(&game, v).map(|p| rationals(&p)))
                    .collect::<Result<Vec<_>>>()?;
                (aligned(&pay), json!(pay))
            } else {
                let verts: Vec<Vec<String>> = ce.vertices()?.iter().map(|v| rationals(v)).collect();
                let m = game.format().size();
                let columns: Vec<Vec<String>> =
                    (0..m).map(|r| verts.iter().map(|v| v[r].clone()).collect()).collect();
                (aligned(&columns), json!(verts))
            };
            Ok(Output {
                command: "correlated",
                format,
                text,
                result,
            })
        }
        Command::Spohn { command } => spohn_command(command),
        Command::Ci { command: CiCommand::Ideal { format, field, model } } => {
            let format = parse_format(&format)?;
            let field: CoefField = field.parse()?;
            let stmts = statements(&model, format.players())?;
            let ring = probability_ring(&format, field, "p")?;
            let ideal = ci::ci_ideal(&ring, &stmts)?;
            Ok(ideal_output("ci ideal", format, &ideal))
        }
        Command::SpohnCi { game, model, verbose } => {
            let game = load_game(&game)?;
            let stmts = statements(&model, game.players())?;
            let ring = probability_ring(game.format(), game.field(), "p")?;
            let mut progress = |phase, k| {
                if verbose {
                    eprintln!("{}", progress_line(phase, k));
                }
            };
            let ideal = ci::spohn_ci(&ring, &game, &stmts, cfg, &mut progress)?;
            Ok(ideal_output("spohn-ci", game.format().clone(), &ideal))
        }
    }
}

fn spohn_command(command: SpohnCommand) -> Result<Output> {
    match command {
        SpohnCommand::Matrices { game } => {
            let game = load_game(&game)?;
            let ring = probability_ring(game.format(), game.field(), "p")?;
            let ms = spohn::spohn_matrices(&ring, &game)?;
            let rows: Vec<Vec<Vec<String>>> = ms
                .iter()
                .map(|m| m.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect())
                .collect();
            let text = rows
                .iter()
                .enumerate()
                .map(|(i, r)| format!("player {}:\n{}", i + 1, aligned(r)))
                .collect::<Vec<_>>()
                .join("\n\n");
            Ok(Output {
                command: "spohn matrices",
                format: Some(game.format().clone()),
                text,
                result: json!(rows),
            })
        }
        SpohnCommand::Ideal { game } => {
            let game = load_game(&game)?;
            let ring = probability_ring(game.format(), game.field(), "p")?;
            let ideal = spohn::spohn_ideal(&ring, &game)?;
            Ok(ideal_output("spohn ideal", game.format().clone(), &ideal))
        }
        SpohnCommand::Konstanz { game } => {
            let game = load_game(&game)?;
            let ring = probability_ring(game.format(), game.field(), "p")?;
            let k = spohn::konstanz_matrix(&ring, &game, "k")?;
            let rows: Vec<Vec<String>> =
                k.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
            Ok(Output {
                command: "spohn konstanz",
                format: Some(game.format().clone()),
                text: aligned(&rows),
                result: json!(rows),
            })
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, format!("{text}\n")).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
