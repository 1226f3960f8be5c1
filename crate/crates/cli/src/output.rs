use serde::{Deserialize, Serialize};

use crate::config::Format;
use crate::record::SeriesRecord;
use crate::CliError;

/// Emitted by every computing command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub command: String,
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub route: Option<String>,
    pub order: u32,
    pub i_max: usize,
    pub seed: u64,
    /// Names of the exponent positions in every record.
    pub variables: Vec<String>,
    pub records: Vec<SeriesRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub command: String,
    pub suite: String,
    pub order: u32,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

fn json<T: Serialize>(doc: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(doc).map_err(|e| CliError::Output(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

pub fn render_series(doc: &SeriesDocument, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["name".to_string()];
            header.extend(doc.variables.iter().cloned());
            header.push("numerator".into());
            header.push("denominator".into());
            w.write_record(&header).map_err(|e| CliError::Output(e.to_string()))?;
            for r in &doc.records {
                for t in &r.terms {
                    let mut row = vec![r.name.clone()];
                    row.extend(t.exponents.iter().map(u32::to_string));
                    row.push(t.numerator.clone());
                    row.push(t.denominator.clone());
                    w.write_record(&row).map_err(|e| CliError::Output(e.to_string()))?;
                }
            }
            finish_csv(w)
        }
    }
}

pub fn render_verify(doc: &VerifyDocument, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(doc),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "name", "pass", "detail"])
                .map_err(|e| CliError::Output(e.to_string()))?;
            for c in &doc.checks {
                let pass = if c.pass { "true" } else { "false" };
                w.write_record([c.suite.as_str(), c.name.as_str(), pass, c.detail.as_deref().unwrap_or("")])
                    .map_err(|e| CliError::Output(e.to_string()))?;
            }
            finish_csv(w)
        }
    }
}
