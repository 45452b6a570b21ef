//! Browser bindings for the `ospz` calculator.
//!
//! Every export takes plain strings and returns rendered text; errors come
//! back as a thrown JS string carrying the parser's line and column.

use ospz::cli_io::{parse_uea, parse_z, render_phi_table, render_uea, render_z, Format};
use ospz::zalg::z_multiply;
use wasm_bindgen::prelude::*;

fn format(name: &str) -> Result<Format, String> {
    name.parse()
}

/// Product of two Z expressions.
pub fn zmul_str(left: &str, right: &str, fmt: &str) -> Result<String, String> {
    let fmt = format(fmt)?;
    let a = parse_z(left).map_err(|e| format!("left: {e}"))?;
    let b = parse_z(right).map_err(|e| format!("right: {e}"))?;
    Ok(render_z(&z_multiply(&a, &b), fmt))
}

/// PBW normal form of a U expression, or the straightened form of a Z one.
pub fn normalize_str(expr: &str, algebra: &str, fmt: &str) -> Result<String, String> {
    let fmt = format(fmt)?;
    match algebra {
        "u" => parse_uea(expr).map(|e| render_uea(&e, fmt)).map_err(|e| e.to_string()),
        "z" => parse_z(expr).map(|e| render_z(&e, fmt)).map_err(|e| e.to_string()),
        other => Err(format!("unknown algebra `{other}` (u, z)")),
    }
}

/// `n, kappa_n, phi_n` for `n <= bound`.
pub fn phi_table_str(bound: usize, fmt: &str) -> Result<String, String> {
    if bound > 64 {
        return Err("bound must be at most 64".into());
    }
    Ok(render_phi_table(bound, format(fmt)?))
}

#[wasm_bindgen]
pub fn zmul(left: &str, right: &str, fmt: &str) -> Result<String, JsValue> {
    zmul_str(left, right, fmt).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn normalize(expr: &str, algebra: &str, fmt: &str) -> Result<String, JsValue> {
    normalize_str(expr, algebra, fmt).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn phi_table(bound: usize, fmt: &str) -> Result<String, JsValue> {
    phi_table_str(bound, fmt).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports() {
        assert_eq!(zmul_str("E(1)", "E(1)", "text").unwrap(), "(2/H) * E(0) <> E(2)");
        assert_eq!(normalize_str("t(-1) t(-1)", "u", "text").unwrap(), "X(-2)");
        assert!(normalize_str("t(1", "u", "text").unwrap_err().contains("1:4"));
        assert!(zmul_str("E(1)", "t(1)", "text").unwrap_err().starts_with("right"));
        assert!(phi_table_str(4, "text").unwrap().contains("phi = 1/((H - 2)*(H - 1))"));
        assert!(phi_table_str(2, "yaml").is_err());
    }
}
