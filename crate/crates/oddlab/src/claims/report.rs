//! Verdict report types and their two renderings: a canonical JSON form
//! (sorted keys, every float in 17-significant-digit scientific notation,
//! byte-stable across runs) and an aligned text table.

use std::io::{self, Write};

use serde::Serialize;

/// Outcome of a single audited comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        }
    }
}

/// One audited comparison: the two sides, their residuals, and the call.
/// `verdict` is always re-derivable from the numbers:
/// holds iff `rel_residual <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimVerdict {
    pub claim_id: String,
    pub paper_location: String,
    pub variant: Option<String>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub notes: String,
}

/// A full audit run. `version` identifies the report schema.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub version: u32,
    pub tolerance_default: f64,
    pub verdicts: Vec<ClaimVerdict>,
}

impl Report {
    pub fn holds(&self) -> usize {
        self.verdicts
            .iter()
            .filter(|v| v.verdict == Verdict::Holds)
            .count()
    }

    pub fn fails(&self) -> usize {
        self.verdicts.len() - self.holds()
    }
}

/// JSON formatter that writes every float as `{:.16e}` (one leading digit
/// plus sixteen more: 17 significant digits, enough to round-trip f64).
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes an already-built JSON value canonically: object keys sorted
/// (the value's map type keeps them ordered), floats in fixed scientific
/// notation. No trailing newline.
pub fn canonical_value(value: &serde_json::Value) -> String {
    let mut bytes = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut bytes, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("serializing to a byte buffer cannot fail");
    String::from_utf8(bytes).expect("serde_json emits UTF-8")
}

/// Canonical JSON: object keys sorted, floats in fixed scientific notation,
/// single trailing newline. Two identical reports serialize to identical
/// bytes.
pub fn canonical_json(report: &Report) -> String {
    // Round-tripping through `Value` sorts the object keys.
    let value = serde_json::to_value(report).expect("report has no non-finite floats");
    let mut text = canonical_value(&value);
    text.push('\n');
    text
}

/// Aligned table, one row per verdict with its note underneath, plus a
/// summary footer.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<6} {:<19} {:<19} {:>13} {:>13} {:>9}  {}\n",
        "claim", "location", "variant", "lhs", "rhs", "rel resid", "verdict"
    ));
    out.push_str(&format!("{}\n", "-".repeat(96)));
    for v in &report.verdicts {
        out.push_str(&format!(
            "{:<6} {:<19} {:<19} {:>13.6e} {:>13.6e} {:>9.2e}  {}\n",
            v.claim_id,
            v.paper_location,
            v.variant.as_deref().unwrap_or("-"),
            v.lhs,
            v.rhs,
            v.rel_residual,
            v.verdict.as_str()
        ));
        out.push_str(&format!("{:<6} note: {}\n", "", v.notes));
    }
    out.push_str(&format!(
        "\n{} hold, {} fail of {} verdicts (tolerance {:e})\n",
        report.holds(),
        report.fails(),
        report.verdicts.len(),
        report.tolerance_default
    ));
    out
}
