//! Output envelope shared by every subcommand.

use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;
use crate::input::InputRecord;

/// One row per class, basis element or simple object, for CSV output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

pub struct Outcome {
    pub result: Value,
    pub table: Table,
}

#[derive(Serialize)]
pub struct Envelope<'a> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub seed: u64,
    pub inputs: &'a [InputRecord],
    pub result: &'a Value,
}

impl Envelope<'_> {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Metadata as `#` comment lines, then the table.
    pub fn to_csv(&self, table: &Table) -> Result<String, CliError> {
        let mut out =
            format!("# tool: {} {}\n# command: {}\n# seed: {}\n", self.tool, self.version, self.command, self.seed);
        for i in self.inputs {
            out.push_str(&format!("# input {}: {} sha256={}\n", i.role, i.path, i.sha256));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Parse(format!("csv: {e}"));
        w.write_record(&table.header).map_err(io)?;
        for r in &table.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Parse(format!("csv: {e}")))?;
        out.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
        Ok(out)
    }
}
