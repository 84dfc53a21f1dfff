use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::CliError;

/// Fixed 17-significant-digit float text, so identical runs give identical
/// bytes.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Record of one run; written next to the outputs it lists.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Value,
    pub tolerances: BTreeMap<String, f64>,
    pub outputs: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub diagnostics: BTreeMap<String, f64>,
    pub wall_time: f64,
}

/// Collects output files under one directory and writes the manifest last.
pub struct Artifacts {
    dir: PathBuf,
    command: &'static str,
    parameters: Value,
    tolerances: BTreeMap<String, f64>,
    diagnostics: BTreeMap<String, f64>,
    outputs: Vec<String>,
    started: Instant,
}

impl Artifacts {
    pub fn new(dir: &Path, command: &'static str, parameters: &impl Serialize) -> Result<Self, CliError> {
        fs::create_dir_all(dir)?;
        Ok(Self {
            dir: dir.to_path_buf(),
            command,
            parameters: serde_json::to_value(parameters)?,
            tolerances: BTreeMap::new(),
            diagnostics: BTreeMap::new(),
            outputs: Vec::new(),
            started: Instant::now(),
        })
    }

    pub fn tolerance(&mut self, name: &str, value: f64) {
        self.tolerances.insert(name.to_string(), value);
    }

    pub fn diagnostic(&mut self, name: &str, value: f64) {
        self.diagnostics.insert(name.to_string(), value);
    }

    /// Writes a CSV with a header row; every cell is a preformatted string.
    pub fn csv(&mut self, name: &str, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<(), CliError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_path(self.dir.join(name))?;
        w.write_record(header)?;
        for row in rows {
            w.write_record(&row)?;
        }
        w.flush()?;
        self.outputs.push(name.to_string());
        Ok(())
    }

    pub fn json(&mut self, name: &str, value: &impl Serialize) -> Result<(), CliError> {
        fs::write(self.dir.join(name), serde_json::to_string_pretty(value)? + "\n")?;
        self.outputs.push(name.to_string());
        Ok(())
    }

    /// Writes `<command>.manifest.json` and returns its path.
    pub fn finish(self) -> Result<PathBuf, CliError> {
        let path = self.dir.join(format!("{}.manifest.json", self.command));
        let manifest = RunManifest {
            command: self.command.to_string(),
            parameters: self.parameters,
            tolerances: self.tolerances,
            outputs: self.outputs,
            diagnostics: self.diagnostics,
            wall_time: self.started.elapsed().as_secs_f64(),
        };
        fs::write(&path, serde_json::to_string_pretty(&manifest)? + "\n")?;
        Ok(path)
    }
}
