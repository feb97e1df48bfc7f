//! Deterministic serialization: CPLEX-dialect LP model files for external
//! MILP solvers, and CSV/Markdown benchmark tables.
//!
//! Variables are named `x_<i>_<j>` with `i < j`; constraint rows are named
//! `t_<i>_<j>_<k>` after the constraint's stored orientation. Everything
//! is emitted in lex order with LF endings, so equal inputs produce equal
//! bytes.

use std::fmt::Write as _;

use crate::error::Result;
use crate::formulation::{ConstraintSet, FormulationKind, EXPERIMENTAL_NOTE};
use crate::instance::pairs;

/// In-memory form of an exported model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpModel {
    /// Integer coefficient per variable, every pair variable present.
    pub objective: Vec<(String, i64)>,
    pub constraints: Vec<LpRow>,
    pub binaries: Vec<String>,
    /// Comment stamped at the top for conjectural kinds.
    pub note: Option<&'static str>,
}

/// One transitivity row `lhs_a + lhs_b - rhs <= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpRow {
    pub name: String,
    pub lhs_a: String,
    pub lhs_b: String,
    pub rhs: String,
}

fn var_name(i: usize, j: usize) -> String {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    format!("x_{a}_{b}")
}

impl LpModel {
    pub fn from_constraint_set(cs: &ConstraintSet) -> LpModel {
        let objective = pairs(cs.n())
            .zip(cs.objective_weights())
            .map(|((i, j), &w)| (var_name(i, j), w))
            .collect();
        let constraints = cs
            .constraints()
            .iter()
            .map(|c| LpRow {
                name: format!("t_{}_{}_{}", c.i, c.j, c.k),
                lhs_a: var_name(c.lhs_a().0, c.lhs_a().1),
                lhs_b: var_name(c.lhs_b().0, c.lhs_b().1),
                rhs: var_name(c.rhs().0, c.rhs().1),
            })
            .collect();
        let binaries = pairs(cs.n()).map(|(i, j)| var_name(i, j)).collect();
        let note = cs.kind().is_experimental().then_some(EXPERIMENTAL_NOTE);
        LpModel { objective, constraints, binaries, note }
    }

    /// Renders the model in CPLEX LP dialect.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(note) = self.note {
            writeln!(out, "\\ {note}").unwrap();
        }
        out.push_str("Maximize\n");
        // objective terms, a fixed count per line to keep lines short
        for (chunk_idx, chunk) in self.objective.chunks(8).enumerate() {
            out.push(' ');
            if chunk_idx == 0 {
                out.push_str("obj:");
            } else {
                out.push_str("    ");
            }
            for (var, w) in chunk {
                if *w < 0 {
                    write!(out, " - {} {}", -w, var).unwrap();
                } else {
                    write!(out, " + {} {}", w, var).unwrap();
                }
            }
            out.push('\n');
        }
        out.push_str("Subject To\n");
        for row in &self.constraints {
            writeln!(out, " {}: {} + {} - {} <= 1", row.name, row.lhs_a, row.lhs_b, row.rhs)
                .unwrap();
        }
        out.push_str("Binaries\n");
        for chunk in self.binaries.chunks(10) {
            out.push(' ');
            out.push_str(&chunk.join(" "));
            out.push('\n');
        }
        out.push_str("End\n");
        out
    }
}

/// Serializes a constraint set as an LP model, returning the byte count.
pub fn write_lp(cs: &ConstraintSet, sink: &mut dyn std::io::Write) -> Result<usize> {
    let text = LpModel::from_constraint_set(cs).render();
    sink.write_all(text.as_bytes())?;
    Ok(text.len())
}

pub fn write_lp_string(cs: &ConstraintSet) -> String {
    LpModel::from_constraint_set(cs).render()
}

/// Kind label used in report rows; conjectural kinds carry their stamp.
pub fn kind_label(kind: FormulationKind) -> String {
    if kind.is_experimental() {
        format!("{} [{}]", kind, EXPERIMENTAL_NOTE)
    } else {
        kind.to_string()
    }
}

/// One benchmark result: one instance solved under one formulation.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub instance: String,
    pub family: String,
    pub n: usize,
    pub seed: Option<u64>,
    pub kind: String,
    pub constraints: usize,
    pub solver: String,
    pub status: String,
    pub value: i64,
    pub elapsed_secs: f64,
}

pub const REPORT_COLUMNS: [&str; 10] = [
    "instance", "family", "n", "seed", "kind", "constraints", "solver", "status", "value",
    "elapsed",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

fn row_fields(row: &BenchRow) -> [String; 10] {
    [
        row.instance.clone(),
        row.family.clone(),
        row.n.to_string(),
        row.seed.map_or_else(|| "-".to_string(), |s| s.to_string()),
        row.kind.clone(),
        row.constraints.to_string(),
        row.solver.clone(),
        row.status.clone(),
        row.value.to_string(),
        format!("{:.3}", row.elapsed_secs),
    ]
}

/// Renders rows in the stable column order; markdown emits one table per
/// family, in first-appearance order.
pub fn write_report(
    rows: &[BenchRow],
    format: ReportFormat,
    sink: &mut dyn std::io::Write,
) -> Result<()> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(REPORT_COLUMNS)?;
            for row in rows {
                w.write_record(row_fields(row))?;
            }
            w.flush()?;
        }
        ReportFormat::Markdown => {
            let mut families: Vec<&str> = Vec::new();
            for row in rows {
                if !families.contains(&row.family.as_str()) {
                    families.push(&row.family);
                }
            }
            if families.is_empty() {
                writeln!(sink, "| {} |", REPORT_COLUMNS.join(" | "))?;
                writeln!(sink, "|{}|", REPORT_COLUMNS.map(|_| " --- ").join("|"))?;
            }
            for (idx, family) in families.iter().enumerate() {
                if idx > 0 {
                    writeln!(sink)?;
                }
                writeln!(sink, "## {family}")?;
                writeln!(sink)?;
                writeln!(sink, "| {} |", REPORT_COLUMNS.join(" | "))?;
                writeln!(sink, "|{}|", REPORT_COLUMNS.map(|_| " --- ").join("|"))?;
                for row in rows.iter().filter(|r| r.family == *family) {
                    writeln!(sink, "| {} |", row_fields(row).join(" | "))?;
                }
            }
        }
    }
    Ok(())
}

impl std::convert::From<csv::Error> for crate::error::Error {
    fn from(e: csv::Error) -> Self {
        crate::error::Error::Io(std::io::Error::other(e))
    }
}
