//! Expression parsing, rendering and the verification suites driven by the
//! `ospz` command line.

mod parse;
mod render;
mod suites;

pub use parse::{parse, parse_ratfunc, parse_uea, parse_z, Algebra, Expr, Factor, Letter, Pos, Term};
pub use render::{
    matrix_json, matrix_latex, ratfunc_latex, render_phi_table, render_uea, render_z, uea_json, uea_latex, uea_monomial_latex, uea_text,
    z_json, z_latex, z_monomial_latex, z_text, Format,
};
pub use suites::{check_golden, run_suite, CheckRecord, Suite, SuiteOptions, SuiteReport, REPORT_SCHEMA};
