//! Table emission: RFC-4180-style CSV and JSON.
//!
//! Numeric cells print in the shortest decimal form that round-trips
//! to the same double. JSON output re-parses and re-emits to the same
//! bytes (key order is preserved).

use std::io::{self, Write};

use statequant::experiments::ExperimentResult;

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes the experiment's row table as CSV, header first.
pub fn write_csv(result: &ExperimentResult, out: &mut impl Write) -> io::Result<()> {
    let header: Vec<String> = result.columns.iter().map(|c| csv_field(c)).collect();
    writeln!(out, "{}", header.join(","))?;
    for row in &result.rows {
        let cells: Vec<String> = row.iter().map(|c| csv_field(&c.to_string())).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

/// Writes the full experiment result as pretty JSON.
pub fn write_json(result: &ExperimentResult, out: &mut impl Write) -> io::Result<()> {
    let text = serde_json::to_string_pretty(result).expect("experiment result serializes");
    writeln!(out, "{text}")
}

/// One line per check: PASS/FAIL, description, numbers. Witnesses of
/// failed checks follow on their own lines.
pub fn write_checks(result: &ExperimentResult, out: &mut impl Write) -> io::Result<()> {
    for c in &result.checks {
        writeln!(
            out,
            "{} {} | observed={} expected={} tolerance={}",
            if c.passed { "PASS" } else { "FAIL" },
            c.description,
            c.observed,
            c.expected,
            c.tolerance
        )?;
        if let Some(w) = &c.witness {
            writeln!(out, "  witness: {w}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use statequant::experiments::{CellValue, Check, ExperimentResult};

    fn sample() -> ExperimentResult {
        ExperimentResult {
            name: "sample".to_string(),
            columns: vec!["label, quoted".to_string(), "value".to_string()],
            rows: vec![
                vec![CellValue::text("a \"b\""), CellValue::num(0.1)],
                vec![CellValue::text("inf"), CellValue::num(2.0)],
            ],
            checks: vec![Check::close("x", 1.0, 1.0, 0.0)],
            seed: 0,
            runtime_ms: 0,
        }
    }

    #[test]
    fn csv_quotes_only_when_needed() {
        let mut buf = Vec::new();
        write_csv(&sample(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "\"label, quoted\",value\n\"a \"\"b\"\"\",0.1\ninf,2\n"
        );
    }

    #[test]
    fn json_round_trips_byte_identically() {
        let mut buf = Vec::new();
        write_json(&sample(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let reemitted = format!("{}\n", serde_json::to_string_pretty(&value).unwrap());
        assert_eq!(text, reemitted);
    }
}
