//! Frieze output: staggered text grid, pretty JSON, or CSV rows.

use clap::ValueEnum;
use frieze_core::{Backend, PeriodicFrieze, Scalar};

use crate::json::frieze_to_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

fn scalar_text(s: &Scalar) -> String {
    match s {
        Scalar::Float(x) => {
            let short = format!("{x:.6}");
            let trimmed = short.trim_end_matches('0').trim_end_matches('.');
            if trimmed.is_empty() { "0".into() } else { trimmed.into() }
        }
        other => other.to_string(),
    }
}

/// The staggered grid: one text column per frieze column, vertex v
/// occupying columns parity(v) + 2n. Exact friezes get a second grid with
/// 12-digit decimals.
pub fn render_text(f: &PeriodicFrieze) -> String {
    let mut out = format!(
        "{} frieze, period {}, backend {}\n",
        f.quiver().dynkin(),
        f.period(),
        crate::json::backend_name(f)
    );
    out.push_str(&grid(f, scalar_text));
    if f.backend() == Backend::Exact {
        out.push_str("decimal:\n");
        out.push_str(&grid(f, |s| format!("{:.12}", s.to_f64())));
    }
    out
}

fn grid(f: &PeriodicFrieze, cell: impl Fn(&Scalar) -> String) -> String {
    let quiver = f.quiver();
    let p = f.period();
    let ncols = 2 * p;
    let rank = quiver.rank();
    let mut cells: Vec<Vec<String>> = vec![vec![String::new(); ncols]; rank];
    for v in 0..rank {
        for n in 0..p {
            let col = quiver.parity(v) as usize + 2 * n;
            cells[v][col] = cell(f.value(v, n as i64));
        }
    }
    let label_width = (0..rank).map(|v| quiver.label(v).chars().count()).max().unwrap_or(0);
    let col_width: Vec<usize> = (0..ncols)
        .map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for v in 0..rank {
        let label = quiver.label(v);
        let mut line = format!("{label:>label_width$} |");
        for c in 0..ncols {
            let text = &cells[v][c];
            let pad = col_width[c] - text.chars().count();
            line.push(' ');
            line.push_str(&" ".repeat(pad));
            line.push_str(text);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_csv(f: &PeriodicFrieze) -> String {
    let quiver = f.quiver();
    let mut out = String::from("vertex,occurrence,value\n");
    for v in 0..quiver.rank() {
        for n in 0..f.period() {
            out.push_str(&format!("{},{},{}\n", quiver.label(v), n, f.value(v, n as i64)));
        }
    }
    out
}

pub fn render(f: &PeriodicFrieze, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(f),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&frieze_to_json(f)).expect("frieze JSON");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(f),
    }
}
