//! Command-line arguments and their validation into a [`RunConfig`].

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cutcomplex::FieldSpec;

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "cutcomplex", version, about = "Cut complexes of graphs: build, shell, and compute homology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the facet file of a cut complex.
    Build(CommonArgs),
    /// Print reduced Betti numbers.
    Betti(CommonArgs),
    /// Check a facet order (or search for one) and report spanning facets.
    Shelling(ShellingArgs),
    /// Check shelling, spanning census and homology of the 3-cut complex of W_n.
    Conjecture(ConjectureArgs),
    /// Re-emit a complex in canonical facet-file form.
    Export(CommonArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Number of vertices of the squared cycle W_n.
    #[arg(long)]
    pub n: Option<NRange>,
    /// Cut size.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Use the graph in this edge-list file instead of W_n.
    #[arg(long, conflicts_with = "complex")]
    pub graph: Option<PathBuf>,
    /// Read the complex from this facet file.
    #[arg(long)]
    pub complex: Option<PathBuf>,
    /// Use the total cut complex (independent complements).
    #[arg(long)]
    pub total: bool,
    /// Coefficient field.
    #[arg(long, default_value = "gf2", value_parser = parse_field)]
    pub field: FieldSpec,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ShellingArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// `prec` (the constructed order), `reversed`, `file:<path>`, or `search`.
    #[arg(long, default_value = "prec")]
    pub order: OrderChoice,
    /// Node budget for `--order search`.
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u64,
}

#[derive(Args, Debug, Clone)]
pub struct ConjectureArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Also compute homology.
    #[arg(long)]
    pub homology: bool,
    /// Skip homology above this n.
    #[arg(long, default_value_t = 14)]
    pub homology_cap: usize,
    #[arg(long, default_value = "prec")]
    pub order: OrderChoice,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    JsonLines,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| e.to_string())
}

/// A single `n` or an inclusive range `a..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a vertex count"));
        let range = match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                num(a)?..=num(b)?
            }
            None => {
                let n = num(s)?;
                n..=n
            }
        };
        if range.is_empty() {
            return Err(format!("range `{s}` is empty"));
        }
        Ok(NRange(range))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderChoice {
    Prec,
    Reversed,
    File(PathBuf),
    Search,
}

impl FromStr for OrderChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "prec" => Ok(OrderChoice::Prec),
            "reversed" => Ok(OrderChoice::Reversed),
            "search" => Ok(OrderChoice::Search),
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(OrderChoice::File(PathBuf::from(path))),
                _ => Err(format!("unknown order `{s}` (expected prec, reversed, search or file:<path>)")),
            },
        }
    }
}

/// Where the complex comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    SquaredCycle { n: usize, k: usize },
    Graph { path: PathBuf, k: usize },
    Complex(PathBuf),
}

impl Source {
    /// `n` when the complex is a cut complex of `W_n`.
    pub fn squared_cycle_n(&self) -> Option<usize> {
        match self {
            Source::SquaredCycle { n, .. } => Some(*n),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Build,
    Betti,
    Shelling,
    Conjecture,
    Export,
}

/// A validated invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub source: Option<Source>,
    pub n_range: Option<RangeInclusive<usize>>,
    pub k: usize,
    pub total: bool,
    pub field: FieldSpec,
    pub homology: bool,
    pub homology_cap: usize,
    pub order: OrderChoice,
    pub budget: u64,
    pub format: Format,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, common, homology, homology_cap, order, budget) = match cli.command {
            Command::Build(c) => (CommandKind::Build, c, false, 14, OrderChoice::Prec, 0),
            Command::Betti(c) => (CommandKind::Betti, c, false, 14, OrderChoice::Prec, 0),
            Command::Export(c) => (CommandKind::Export, c, false, 14, OrderChoice::Prec, 0),
            Command::Shelling(s) => (CommandKind::Shelling, s.common, false, 14, s.order, s.budget),
            Command::Conjecture(c) => (CommandKind::Conjecture, c.common, c.homology, c.homology_cap, c.order, 0),
        };
        if common.k == 0 {
            return Err(CliError::Usage("--k must be at least 1".into()));
        }
        if common.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        let n_range = common.n.clone().map(|r| r.0);
        let mut config = RunConfig {
            command,
            source: None,
            n_range: n_range.clone(),
            k: common.k,
            total: common.total,
            field: common.field,
            homology,
            homology_cap,
            order,
            budget,
            format: common.format,
            jobs: common.jobs,
            out: common.out.clone(),
        };
        if command == CommandKind::Conjecture {
            let range = n_range.ok_or_else(|| CliError::Usage("conjecture needs --n".into()))?;
            if common.k != 3 {
                return Err(CliError::Usage("conjecture is only defined for --k 3".into()));
            }
            if common.graph.is_some() || common.complex.is_some() || common.total {
                return Err(CliError::Usage("conjecture works on W_n only".into()));
            }
            if matches!(config.order, OrderChoice::File(_)) && range.start() != range.end() {
                return Err(CliError::Usage("an order file needs a single --n".into()));
            }
            if config.order == OrderChoice::Search {
                return Err(CliError::Usage("conjecture checks a given order; use prec, reversed or file:".into()));
            }
            return Ok(config);
        }
        config.source = Some(match (common.complex, common.graph, n_range) {
            (Some(path), None, None) => Source::Complex(path),
            (None, Some(path), None) => Source::Graph { path, k: common.k },
            (None, None, Some(r)) if r.start() == r.end() => Source::SquaredCycle { n: *r.start(), k: common.k },
            (None, None, Some(_)) => return Err(CliError::Usage("this command takes a single --n".into())),
            (None, None, None) => return Err(CliError::Usage("give one of --n, --graph or --complex".into())),
            _ => return Err(CliError::Usage("give only one of --n, --graph or --complex".into())),
        });
        if config.total && matches!(config.source, Some(Source::Complex(_))) {
            return Err(CliError::Usage("--total applies to graph sources only".into()));
        }
        Ok(config)
    }
}
