//! Text and JSON-lines renderings. Both carry the same numbers.

use std::io::{self, Write};

use cutcomplex::wn_shelling::ConjectureReport;
use cutcomplex::{BettiVector, ShellingReport};
use serde::Serialize;

use crate::config::Format;

/// What `shelling` prints. Positions are 0-based, as in the library.
#[derive(Debug, Serialize)]
pub struct ShellingSummary {
    pub facets: usize,
    pub valid: bool,
    pub spanning_count: usize,
    pub spanning: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSummary>,
}

#[derive(Debug, Serialize)]
pub struct WitnessSummary {
    pub earlier: usize,
    pub later: usize,
    pub earlier_facet: Vec<usize>,
    pub later_facet: Vec<usize>,
    /// Vertices of the later facet whose removal gives a face of an earlier facet.
    pub removable: Vec<usize>,
}

impl ShellingSummary {
    pub fn new(report: &ShellingReport) -> Self {
        let order = report.order();
        let witness = report.witness().map(|w| WitnessSummary {
            earlier: w.earlier,
            later: w.later,
            earlier_facet: order[w.earlier].to_vec(),
            later_facet: order[w.later].to_vec(),
            removable: report.removable()[w.later].to_vec(),
        });
        let spanning: Vec<Vec<usize>> = if report.is_valid() {
            order.iter().zip(report.spanning_flags()).filter(|(_, s)| *s).map(|(f, _)| f.to_vec()).collect()
        } else {
            Vec::new()
        };
        ShellingSummary {
            facets: order.len(),
            valid: report.is_valid(),
            spanning_count: spanning.len(),
            spanning,
            witness,
        }
    }
}

fn braces(vs: &[usize]) -> String {
    let inner: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    let line = serde_json::to_string(value).map_err(io::Error::other)?;
    writeln!(out, "{line}")
}

pub fn write_betti(out: &mut dyn Write, format: Format, betti: &BettiVector) -> io::Result<()> {
    match format {
        Format::JsonLines => json_line(out, betti),
        Format::Text => {
            writeln!(out, "reduced Betti numbers over {}", betti.field())?;
            for (i, v) in betti.values().iter().enumerate() {
                writeln!(out, "  dim {:>2}: {v}", i as isize - 1)?;
            }
            Ok(())
        }
    }
}

pub fn write_shelling(out: &mut dyn Write, format: Format, summary: &ShellingSummary) -> io::Result<()> {
    match format {
        Format::JsonLines => json_line(out, summary),
        Format::Text => {
            writeln!(out, "facets: {}", summary.facets)?;
            writeln!(out, "valid: {}", if summary.valid { "yes" } else { "no" })?;
            if let Some(w) = &summary.witness {
                writeln!(
                    out,
                    "witness: position {} {} and position {} {}",
                    w.earlier,
                    braces(&w.earlier_facet),
                    w.later,
                    braces(&w.later_facet)
                )?;
                writeln!(
                    out,
                    "  removable set {} of position {} lies in position {}",
                    braces(&w.removable),
                    w.later,
                    w.earlier
                )?;
            } else {
                writeln!(out, "spanning facets: {}", summary.spanning_count)?;
                for f in &summary.spanning {
                    writeln!(out, "  {}", braces(f))?;
                }
            }
            Ok(())
        }
    }
}

/// `search` outcomes that produced no order to verify.
pub fn write_search_failure(out: &mut dyn Write, format: Format, exhausted: bool) -> io::Result<()> {
    let verdict = if exhausted { "not shellable" } else { "undecided" };
    match format {
        Format::JsonLines => json_line(out, &serde_json::json!({ "search": verdict })),
        Format::Text => writeln!(out, "search: {verdict}"),
    }
}

pub fn write_conjecture_header(out: &mut dyn Write, format: Format) -> io::Result<()> {
    if format == Format::Text {
        writeln!(
            out,
            "{:>3} {:>7} {:>8} {:>8} {:>8} {:>8} {:>9} {:>5}",
            "n", "facets", "shelling", "span_ord", "span_cls", "span_fml", "betti_top", "pass"
        )?;
    }
    Ok(())
}

pub fn write_conjecture_row(out: &mut dyn Write, format: Format, r: &ConjectureReport) -> io::Result<()> {
    match format {
        Format::JsonLines => json_line(out, r),
        Format::Text => {
            let top = r.betti.as_ref().map_or("-".to_string(), |b| b.get(r.n as isize - 4).to_string());
            writeln!(
                out,
                "{:>3} {:>7} {:>8} {:>8} {:>8} {:>8} {:>9} {:>5}",
                r.n,
                r.facet_count,
                if r.shelling_valid { "valid" } else { "invalid" },
                r.spanning_from_order,
                r.spanning_from_classes,
                r.spanning_from_formula,
                top,
                if r.all_pass { "yes" } else { "no" }
            )?;
            if let Some(w) = r.witness {
                writeln!(out, "    witness: position {} and position {}", w.earlier, w.later)?;
            }
            Ok(())
        }
    }
}
