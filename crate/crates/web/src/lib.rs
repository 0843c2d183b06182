//! Browser bindings: spec text in, rendered report out.

use quasiring::command::{run_command, Command, CommandError, Options};
use quasiring::dsl::parse_spec;
use quasiring::report::{render_report, Format};
use wasm_bindgen::prelude::*;

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn on_spec(text: &str, cmd: Command, json: bool) -> Result<String, String> {
    let spec = parse_spec(text).map_err(|e| e.to_string())?;
    let report = run_command(Some(&spec), &cmd, &Options::default()).map_err(|e: CommandError| e.to_string())?;
    Ok(render_report(&report, format(json)))
}

pub fn analyze_text(text: &str, json: bool) -> Result<String, String> {
    on_spec(text, Command::Analyze, json)
}

pub fn ideals_text(text: &str, json: bool) -> Result<String, String> {
    on_spec(text, Command::Ideals, json)
}

/// `ids` is whitespace-separated; empty means all.
pub fn check_text(text: &str, ids: &str, json: bool) -> Result<String, String> {
    let mut ids: Vec<String> = ids.split_whitespace().map(str::to_string).collect();
    if ids.is_empty() {
        ids.push("all".into());
    }
    on_spec(text, Command::Check(ids), json)
}

pub fn generate_text(primes: usize, algebra: &str, json: bool) -> Result<String, String> {
    let cmd = Command::Generate { primes, algebra: algebra.to_string() };
    let report = run_command(None, &cmd, &Options::default()).map_err(|e| e.to_string())?;
    Ok(render_report(&report, format(json)))
}

#[wasm_bindgen]
pub fn analyze(text: &str, json: bool) -> Result<String, JsValue> {
    analyze_text(text, json).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn ideals(text: &str, json: bool) -> Result<String, JsValue> {
    ideals_text(text, json).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn check(text: &str, ids: &str, json: bool) -> Result<String, JsValue> {
    check_text(text, ids, json).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generate(primes: usize, algebra: &str, json: bool) -> Result<String, JsValue> {
    generate_text(primes, algebra, json).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const R: &str = "space Z discrete 2\nalgebra Y zmod 3\nring R = C(Z, Y)\n";

    #[test]
    fn ideals_lists_two_primes() {
        let out = ideals_text(R, false).unwrap();
        assert!(out.contains("primes: #1 #2"), "{out}");
    }

    #[test]
    fn check_empty_ids_runs_all() {
        let out = check_text(R, "", true).unwrap();
        assert!(out.contains("\"T34\""));
    }

    #[test]
    fn errors_are_strings() {
        assert!(analyze_text("ring R = C(Z, W)", false).unwrap_err().contains("unknown"));
        assert!(generate_text(2, "zmod:4", false).is_err());
    }
}
