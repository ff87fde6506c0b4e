//! Command dispatch for the `young` binary.
//!
//! Five subcommands: `matrix`, `straighten`, `chartable`, `decompose`, and
//! `verify`. Results go to stdout; diagnostics to stderr. Exit codes:
//! 0 success, 1 a verification check failed, 2 input parse error,
//! 3 limit exceeded or unsupported combination.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::characters::{character_table, CharacterError};
use crate::oracle::OracleError;
use crate::perm::{PermError, Permutation};
use crate::shapes::{partitions_of, Partition, ShapeError};
use crate::specht::{IntegerMatrix, NaturalRepresentation, SpechtError, Straightener};
use crate::tableaux::{BasisOrder, Tableau, TableauError};
use crate::verify::{self, Report};

/// How a command renders its result.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OrderArg {
    Paper,
    Rowlex,
}

impl From<OrderArg> for BasisOrder {
    fn from(arg: OrderArg) -> Self {
        match arg {
            OrderArg::Paper => BasisOrder::PaperS4,
            OrderArg::Rowlex => BasisOrder::RowWordLex,
        }
    }
}

/// A command failure carrying its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit 2.
    Parse(String),
    /// Out of supported range, or paper order away from n = 4: exit 3.
    Limit(String),
    /// A verification suite ran and failed: exit 1. Holds the full report.
    Failed(Report),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Limit(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(msg) | CliError::Limit(msg) => write!(f, "{msg}"),
            CliError::Failed(report) => write!(f, "{}", report.summary()),
        }
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::EnumerationLimit(_) | PermError::ZeroDegree => {
                CliError::Limit(e.to_string())
            }
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<ShapeError> for CliError {
    fn from(e: ShapeError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<TableauError> for CliError {
    fn from(e: TableauError) -> Self {
        match e {
            TableauError::PaperOrderDegree(_) => CliError::Limit(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<SpechtError> for CliError {
    fn from(e: SpechtError) -> Self {
        match e {
            SpechtError::Tableau(inner) => inner.into(),
            SpechtError::Perm(inner) => inner.into(),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<CharacterError> for CliError {
    fn from(e: CharacterError) -> Self {
        match e {
            CharacterError::Specht(inner) => inner.into(),
            CharacterError::Perm(inner) => inner.into(),
            CharacterError::MismatchedClasses => CliError::Parse(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Tableau(inner) => inner.into(),
            OracleError::SizeLimit { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

/// Young's natural integer representations of symmetric groups.
#[derive(Parser, Debug)]
#[command(name = "young", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the representation matrix of a permutation on one shape.
    Matrix {
        /// Shape as weakly decreasing parts, e.g. "3,1".
        #[arg(long)]
        shape: String,
        /// Permutation in cycle or one-line form, e.g. "(1 2)(3 4)" or "e".
        #[arg(long)]
        perm: String,
        /// Degree; inferred from the shape when absent.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = OrderArg::Rowlex)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Straighten a polytabloid into the standard basis, with the Garnir trace.
    Straighten {
        /// Tableau rows separated by "/", e.g. "2,1/3/4" or "21/3/4".
        #[arg(long)]
        tableau: String,
        /// Optional shape cross-check against the parsed tableau.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t = OrderArg::Rowlex)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the full character table of the symmetric group of degree n.
    Chartable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Decompose a permutation into adjacent transpositions.
    Decompose {
        /// Permutation in cycle or one-line form.
        #[arg(long)]
        perm: String,
        /// Degree; inferred from the largest entry mentioned when absent.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run the verification suites at degree n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Also cross-check matrices against the brute-force tabloid model.
        #[arg(long)]
        oracle: bool,
    },
}

/// Runs one parsed command and returns what should be printed to stdout.
pub fn execute(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Matrix {
            shape,
            perm,
            n,
            order,
            format,
        } => cmd_matrix(&shape, &perm, n, order.into(), format),
        Command::Straighten {
            tableau,
            shape,
            order,
            format,
        } => cmd_straighten(&tableau, shape.as_deref(), order.into(), format),
        Command::Chartable { n, format } => cmd_chartable(n, format),
        Command::Decompose { perm, n } => cmd_decompose(&perm, n),
        Command::Verify { n, oracle } => cmd_verify(n, oracle),
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    shape: Vec<usize>,
    perm: String,
    order: String,
    basis: Vec<String>,
    matrix: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct StraightenDoc {
    shape: Vec<usize>,
    tableau: String,
    order: String,
    basis: Vec<String>,
    coefficients: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct ChartableDoc {
    n: usize,
    shapes: Vec<String>,
    classes: Vec<String>,
    sizes: Vec<u64>,
    values: Vec<Vec<i64>>,
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("plain data serializes")
}

fn basis_line(basis: &[Tableau]) -> String {
    basis
        .iter()
        .enumerate()
        .map(|(j, t)| format!("t{} = {t}", j + 1))
        .collect::<Vec<_>>()
        .join("  ")
}

fn latex_matrix(m: &IntegerMatrix) -> String {
    let rows: Vec<String> = m
        .row_vectors()
        .iter()
        .map(|row| {
            row.iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!(
        "\\begin{{bmatrix}}\n{}\n\\end{{bmatrix}}",
        rows.join(" \\\\\n")
    )
}

pub fn cmd_matrix(
    shape_text: &str,
    perm_text: &str,
    n: Option<usize>,
    order: BasisOrder,
    format: OutputFormat,
) -> Result<String, CliError> {
    let shape: Partition = shape_text.parse()?;
    if let Some(n) = n {
        if n != shape.n() {
            return Err(CliError::Parse(format!(
                "--n {n} does not match the size {} of shape {shape}",
                shape.n()
            )));
        }
    }
    let sigma = Permutation::parse(perm_text, shape.n())?;
    let rep = NaturalRepresentation::new(&shape, order)?;
    let matrix = rep.matrix(&sigma)?;
    Ok(match format {
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "shape: {shape}").unwrap();
            writeln!(out, "perm:  {sigma}").unwrap();
            writeln!(out, "order: {}", order.as_str()).unwrap();
            writeln!(out, "basis: {}", basis_line(rep.basis())).unwrap();
            write!(out, "{matrix}").unwrap();
            out.truncate(out.trim_end().len());
            out
        }
        OutputFormat::Json => to_json(&MatrixDoc {
            shape: shape.parts().to_vec(),
            perm: sigma.to_string(),
            order: order.as_str().to_string(),
            basis: rep.basis().iter().map(Tableau::to_string).collect(),
            matrix: matrix.row_vectors(),
        }),
        OutputFormat::Latex => latex_matrix(&matrix),
    })
}

pub fn cmd_straighten(
    tableau_text: &str,
    shape_text: Option<&str>,
    order: BasisOrder,
    format: OutputFormat,
) -> Result<String, CliError> {
    let t = Tableau::parse(tableau_text)?;
    let shape = t.shape();
    if let Some(text) = shape_text {
        let claimed: Partition = text.parse()?;
        if claimed != shape {
            return Err(CliError::Parse(format!(
                "tableau {t} has shape {shape}, not {claimed}"
            )));
        }
    }
    let mut straightener = Straightener::new(&shape, order)?;
    let (expansion, steps) = straightener.straighten_traced(&t);
    Ok(match format {
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "input: {t}").unwrap();
            writeln!(out, "shape: {shape}").unwrap();
            writeln!(out, "order: {}", order.as_str()).unwrap();
            writeln!(out, "basis: {}", basis_line(straightener.basis())).unwrap();
            for (k, step) in steps.iter().enumerate() {
                writeln!(
                    out,
                    "step {}: {} has a row descent at ({}, {}); {}",
                    k + 1,
                    step.tableau,
                    step.descent.row,
                    step.descent.col,
                    step.pair
                )
                .unwrap();
                let terms: Vec<String> = step
                    .terms
                    .iter()
                    .map(|(c, u)| format!("{}{u}", if *c < 0 { "-" } else { "+" }))
                    .collect();
                writeln!(out, "  -> {}", terms.join(" ")).unwrap();
            }
            write!(out, "result: {expansion}").unwrap();
            out
        }
        OutputFormat::Json => to_json(&StraightenDoc {
            shape: shape.parts().to_vec(),
            tableau: t.to_string(),
            order: order.as_str().to_string(),
            basis: straightener
                .basis()
                .iter()
                .map(Tableau::to_string)
                .collect(),
            coefficients: expansion.to_dense(straightener.dimension()),
        }),
        OutputFormat::Latex => {
            let mut out = String::new();
            for (k, (index, coeff)) in expansion.iter().enumerate() {
                let sign = if coeff < 0 {
                    if k == 0 {
                        "-"
                    } else {
                        " - "
                    }
                } else if k == 0 {
                    ""
                } else {
                    " + "
                };
                out.push_str(sign);
                if coeff.abs() != 1 {
                    write!(out, "{}", coeff.abs()).unwrap();
                }
                write!(out, "e_{{t_{}}}", index + 1).unwrap();
            }
            if out.is_empty() {
                out.push('0');
            }
            out
        }
    })
}

pub fn cmd_chartable(n: usize, format: OutputFormat) -> Result<String, CliError> {
    let table = character_table(n)?;
    Ok(match format {
        OutputFormat::Text => table.to_string(),
        OutputFormat::Json => {
            let labels: Vec<String> = partitions_of(n).iter().map(Partition::to_string).collect();
            to_json(&ChartableDoc {
                n,
                shapes: labels.clone(),
                classes: labels,
                sizes: table.class_sizes().to_vec(),
                values: table.values().to_vec(),
            })
        }
        OutputFormat::Latex => {
            let classes: Vec<String> = partitions_of(n).iter().map(Partition::to_string).collect();
            let sizes: Vec<String> = table.class_sizes().iter().map(u64::to_string).collect();
            let rows: Vec<String> = table
                .values()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(" & ")
                })
                .collect();
            format!(
                "% classes: {}\n% sizes: {}\n\\begin{{array}}{{{}}}\n{}\n\\end{{array}}",
                classes.join("  "),
                sizes.join(" "),
                "r".repeat(classes.len()),
                rows.join(" \\\\\n")
            )
        }
    })
}

pub fn cmd_decompose(perm_text: &str, n: Option<usize>) -> Result<String, CliError> {
    let degree = n.unwrap_or_else(|| largest_entry(perm_text));
    let sigma = Permutation::parse(perm_text, degree)?;
    let word = sigma.adjacent_word();
    Ok(format!(
        "perm: {sigma}\nword: {word}\nlength: {}\nsign: {}",
        word.len(),
        word.sign()
    ))
}

fn largest_entry(text: &str) -> usize {
    text.split(|c: char| !c.is_ascii_digit())
        .filter_map(|token| token.parse().ok())
        .max()
        .unwrap_or(1)
        .max(1)
}

pub fn cmd_verify(n: usize, with_oracle: bool) -> Result<String, CliError> {
    let report = verify::run(n, with_oracle)?;
    if report.all_passed() {
        Ok(report.to_string())
    } else {
        Err(CliError::Failed(report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_text_prints_basis_and_entries() {
        let out = cmd_matrix(
            "2,1,1",
            "(3 4)",
            None,
            BasisOrder::PaperS4,
            OutputFormat::Text,
        )
        .unwrap();
        assert!(out.contains("shape: 2,1,1"));
        assert!(out.contains("basis: t1 = 1,2/3/4  t2 = 1,3/2/4  t3 = 1,4/2/3"));
        assert!(out.contains("[ -1  0  0 ]"));
        assert!(out.contains("[  0  0  1 ]"));
    }

    #[test]
    fn matrix_json_schema_and_field_order() {
        let out = cmd_matrix("4", "e", None, BasisOrder::RowWordLex, OutputFormat::Json).unwrap();
        assert_eq!(
            out,
            r#"{"shape":[4],"perm":"e","order":"rowlex","basis":["1,2,3,4"],"matrix":[[1]]}"#
        );
    }

    #[test]
    fn matrix_latex_is_a_bmatrix() {
        let out = cmd_matrix(
            "2,2",
            "(2 3)",
            None,
            BasisOrder::PaperS4,
            OutputFormat::Latex,
        )
        .unwrap();
        assert_eq!(out, "\\begin{bmatrix}\n0 & 1 \\\\\n1 & 0\n\\end{bmatrix}");
    }

    #[test]
    fn matrix_trace_of_four_cycle_on_3_1() {
        let out = cmd_matrix(
            "3,1",
            "(1 2 3 4)",
            Some(4),
            BasisOrder::PaperS4,
            OutputFormat::Json,
        )
        .unwrap();
        let doc: MatrixDoc = serde_json::from_str(&out).unwrap();
        let trace: i64 = (0..3).map(|i| doc.matrix[i][i]).sum();
        assert_eq!(trace, -1);
    }

    #[test]
    fn matrix_rejects_mismatched_n() {
        let err = cmd_matrix(
            "3,1",
            "e",
            Some(5),
            BasisOrder::RowWordLex,
            OutputFormat::Text,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn matrix_paper_order_away_from_4_is_a_limit_error() {
        let err =
            cmd_matrix("3,2", "e", None, BasisOrder::PaperS4, OutputFormat::Text).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn matrix_bad_perm_is_a_parse_error() {
        let err = cmd_matrix(
            "3,1",
            "(1 5)",
            None,
            BasisOrder::RowWordLex,
            OutputFormat::Text,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn straighten_text_shows_the_chained_trace() {
        let out = cmd_straighten("2,1,3/4", None, BasisOrder::PaperS4, OutputFormat::Text).unwrap();
        assert!(out.contains("step 1: 2,1,3/4 has a row descent at (1, 1)"));
        assert!(
            out.contains("1,4,3/2"),
            "trace must show the intermediate tableau"
        );
        assert!(out.ends_with("result: -t1 +t3"));
    }

    #[test]
    fn straighten_standard_input_is_a_unit_vector() {
        let out = cmd_straighten("1,2/3,4", None, BasisOrder::PaperS4, OutputFormat::Text).unwrap();
        assert!(out.ends_with("result: +t1"));
        assert!(!out.contains("step"));
    }

    #[test]
    fn straighten_json_lists_dense_coefficients() {
        let out = cmd_straighten("2,1/3/4", None, BasisOrder::PaperS4, OutputFormat::Json).unwrap();
        let doc: StraightenDoc = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.coefficients, vec![1, -1, 1]);
        assert_eq!(doc.basis, vec!["1,2/3/4", "1,3/2/4", "1,4/2/3"]);
    }

    #[test]
    fn straighten_latex_renders_signed_terms() {
        let out =
            cmd_straighten("2,1,3/4", None, BasisOrder::PaperS4, OutputFormat::Latex).unwrap();
        assert_eq!(out, "-e_{t_1} + e_{t_3}");
    }

    #[test]
    fn straighten_shape_cross_check() {
        assert!(cmd_straighten(
            "2,1/3/4",
            Some("2,1,1"),
            BasisOrder::PaperS4,
            OutputFormat::Text
        )
        .is_ok());
        let err = cmd_straighten(
            "2,1/3/4",
            Some("2,2"),
            BasisOrder::PaperS4,
            OutputFormat::Text,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn straighten_malformed_tableau_is_a_parse_error() {
        let err =
            cmd_straighten("1,2/2", None, BasisOrder::RowWordLex, OutputFormat::Text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn chartable_text_n1_and_limits() {
        let out = cmd_chartable(1, OutputFormat::Text).unwrap();
        assert!(out.contains('1'));
        assert_eq!(
            cmd_chartable(0, OutputFormat::Text)
                .unwrap_err()
                .exit_code(),
            3
        );
        assert_eq!(
            cmd_chartable(11, OutputFormat::Text)
                .unwrap_err()
                .exit_code(),
            3
        );
    }

    #[test]
    fn chartable_json_round_trips() {
        let out = cmd_chartable(4, OutputFormat::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), out);
        let doc: ChartableDoc = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.sizes, vec![1, 6, 3, 8, 6]);
    }

    #[test]
    fn decompose_golden_and_empty_word() {
        let out = cmd_decompose("(2 4)", None).unwrap();
        assert_eq!(
            out,
            "perm: (2 4)\nword: (2 3)(3 4)(2 3)\nlength: 3\nsign: -1"
        );
        let out = cmd_decompose("e", None).unwrap();
        assert_eq!(out, "perm: e\nword: \nlength: 0\nsign: 1");
    }

    #[test]
    fn decompose_respects_explicit_degree() {
        let out = cmd_decompose("(1 2)", Some(4)).unwrap();
        assert!(out.contains("length: 1"));
        let err = cmd_decompose("(2 9)", Some(4)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn verify_passes_and_reports() {
        let out = cmd_verify(4, false).unwrap();
        assert!(out.contains("ok   golden-matrices"));
        assert!(out.contains("PASS"));
        assert_eq!(cmd_verify(0, false).unwrap_err().exit_code(), 3);
        assert_eq!(cmd_verify(12, false).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn error_display_carries_the_message() {
        let err = cmd_matrix(
            "3,1",
            "(1 5)",
            None,
            BasisOrder::RowWordLex,
            OutputFormat::Text,
        )
        .unwrap_err();
        assert!(err.to_string().contains("out of range"));
    }
}
