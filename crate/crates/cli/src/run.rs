//! Executes a [`RunConfig`].

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::sync::mpsc;

use cutcomplex::simplicial::{parse_facet_list, ShellingSearch};
use cutcomplex::wn_shelling::{verify_conjecture_with_order, ConjectureOptions, ConjectureReport, WnShelling};
use cutcomplex::{betti, cut_complex, squared_cycle, total_cut_complex, Error, Graph, SimplicialComplex, VertexSet};
use rayon::prelude::*;

use crate::config::{CommandKind, OrderChoice, RunConfig, Source};
use crate::output::{self, ShellingSummary};
use crate::CliError;

/// Whether every mathematical check of the run passed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl Fn(Error) -> CliError + '_ {
    move |e| CliError::Input(format!("{}: {e}", path.display()))
}

fn load_graph(source: &Source) -> Result<Option<(Graph, usize)>, CliError> {
    match source {
        Source::SquaredCycle { n, k } => Ok(Some((squared_cycle(*n).map_err(CliError::from_math)?, *k))),
        Source::Graph { path, k } => Ok(Some((Graph::parse_edge_list(&read(path)?).map_err(in_file(path))?, *k))),
        Source::Complex(_) => Ok(None),
    }
}

fn load_complex(source: &Source, total: bool) -> Result<SimplicialComplex, CliError> {
    if let Source::Complex(path) = source {
        return SimplicialComplex::parse_facet_file(&read(path)?).map_err(in_file(path));
    }
    let (graph, k) = load_graph(source)?.expect("graph source");
    let built = if total { total_cut_complex(&graph, k) } else { cut_complex(&graph, k) };
    built.map_err(CliError::from_math)
}

/// Facets listed in a facet file, in file order.
fn read_order(path: &Path, n: usize) -> Result<Vec<VertexSet>, CliError> {
    let (file_n, facets) = parse_facet_list(&read(path)?).map_err(in_file(path))?;
    if file_n != n {
        return Err(CliError::Input(format!(
            "{}: line 1: order is on {file_n} vertices but the complex has {n}",
            path.display()
        )));
    }
    Ok(facets)
}

pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<Verdict, CliError> {
    match config.command {
        CommandKind::Build => {
            let source = config.source.as_ref().expect("validated");
            if matches!(source, Source::Complex(_)) {
                return Err(CliError::Usage("build needs --n or --graph; use export for facet files".into()));
            }
            write!(out, "{}", load_complex(source, config.total)?.to_facet_file())?;
            Ok(Verdict::Pass)
        }
        CommandKind::Export => {
            let complex = load_complex(config.source.as_ref().expect("validated"), config.total)?;
            write!(out, "{}", complex.to_facet_file())?;
            Ok(Verdict::Pass)
        }
        CommandKind::Betti => {
            let complex = load_complex(config.source.as_ref().expect("validated"), config.total)?;
            let b = betti(&complex, config.field).map_err(CliError::from_math)?;
            output::write_betti(out, config.format, &b)?;
            Ok(Verdict::Pass)
        }
        CommandKind::Shelling => shelling(config, out),
        CommandKind::Conjecture => conjecture(config, out),
    }
}

fn constructed_order(config: &RunConfig, source: &Source) -> Result<Vec<VertexSet>, CliError> {
    match source.squared_cycle_n() {
        Some(n) if config.k == 3 && !config.total => {
            Ok(WnShelling::new(n).map_err(CliError::from_math)?.shelling_order())
        }
        _ => Err(CliError::Usage(
            "the constructed order exists only for the 3-cut complex of W_n (n >= 9); use file: or search".into(),
        )),
    }
}

fn shelling(config: &RunConfig, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let source = config.source.as_ref().expect("validated");
    let complex = load_complex(source, config.total)?;
    if !complex.is_pure() {
        writeln!(out, "complex is not pure, so it has no shelling in the pure sense")?;
        return Ok(Verdict::Fail);
    }
    let order = match &config.order {
        OrderChoice::Prec => constructed_order(config, source)?,
        OrderChoice::Reversed => {
            let mut order = match source.squared_cycle_n() {
                Some(_) if config.k == 3 && !config.total => constructed_order(config, source)?,
                _ => complex.facets().to_vec(),
            };
            order.reverse();
            order
        }
        OrderChoice::File(path) => read_order(path, complex.ground_size())?,
        OrderChoice::Search => match complex.find_shelling(config.budget).map_err(CliError::from_math)? {
            ShellingSearch::Found(order) => order,
            ShellingSearch::NotShellable => {
                output::write_search_failure(out, config.format, true)?;
                return Ok(Verdict::Fail);
            }
            ShellingSearch::BudgetExceeded => {
                output::write_search_failure(out, config.format, false)?;
                return Ok(Verdict::Fail);
            }
        },
    };
    let report = complex.verify_shelling(&order).map_err(|e| match e {
        Error::NotAPermutation(reason) => CliError::Input(format!("order: {reason}")),
        other => CliError::from_math(other),
    })?;
    output::write_shelling(out, config.format, &ShellingSummary::new(&report))?;
    Ok(if report.is_valid() { Verdict::Pass } else { Verdict::Fail })
}

fn conjecture_row(config: &RunConfig, n: usize) -> Result<ConjectureReport, CliError> {
    let options =
        ConjectureOptions { field: config.field, with_homology: config.homology, homology_cap: config.homology_cap };
    let context = WnShelling::new(n).map_err(CliError::from_math)?;
    let order = match &config.order {
        OrderChoice::Prec => context.shelling_order(),
        OrderChoice::Reversed => {
            let mut o = context.shelling_order();
            o.reverse();
            o
        }
        OrderChoice::File(path) => read_order(path, n)?,
        OrderChoice::Search => unreachable!("rejected during validation"),
    };
    verify_conjecture_with_order(n, &order, &options).map_err(|e| match e {
        Error::NotAPermutation(reason) => CliError::Input(format!("order: {reason}")),
        other => CliError::from_math(other),
    })
}

/// Computes rows in parallel and writes them in ascending `n` as soon as
/// every smaller `n` is done.
fn conjecture(config: &RunConfig, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let range = config.n_range.clone().expect("validated");
    output::write_conjecture_header(out, config.format)?;
    out.flush()?;
    let (tx, rx) = mpsc::channel();
    let ns: Vec<usize> = range.collect();
    let mut verdict = Verdict::Pass;
    let mut first_error = None;
    std::thread::scope(|scope| -> Result<(), CliError> {
        let ns = &ns;
        scope.spawn(move || {
            ns.par_iter().for_each_with(tx, |tx, &n| {
                let _ = tx.send((n, conjecture_row(config, n)));
            });
        });
        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (n, row) in rx {
            pending.insert(n, row);
            while next < ns.len() {
                let Some(row) = pending.remove(&ns[next]) else { break };
                next += 1;
                match row {
                    Ok(report) => {
                        if !report.all_pass {
                            verdict = Verdict::Fail;
                        }
                        output::write_conjecture_row(out, config.format, &report)?;
                        out.flush()?;
                    }
                    Err(e) => {
                        first_error.get_or_insert(e);
                    }
                }
            }
        }
        Ok(())
    })?;
    match first_error {
        Some(e) => Err(e),
        None => Ok(verdict),
    }
}
