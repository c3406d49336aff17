//! Run configuration: defaults, optional key=value config file, flag
//! overrides, and the named tolerance table.

use std::collections::BTreeMap;
use std::fs;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub fd_step: f64,
    /// Whether fd_step came from the user (file or flag).
    pub fd_step_explicit: bool,
    pub format: Format,
    pub tolerances: BTreeMap<String, f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        // defaults matched to the finite-difference error budget
        let tolerances = [
            ("einstein", 1e-3),
            ("curvature", 1e-5),
            ("nijenhuis", 1e-3),
            ("cyt", 1e-3),
            ("lck", 1e-6),
            ("nonkahler", 1e-1),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
        RunConfig {
            seed: 7,
            samples: 100,
            fd_step: 1e-3,
            fd_step_explicit: false,
            format: Format::Markdown,
            tolerances,
        }
    }
}

impl RunConfig {
    /// Step for first-order central differences (connection-form checks):
    /// the second-derivative default 1e-3 is too coarse there, so unless
    /// the user pinned a step, use 1e-4.
    pub fn first_order_step(&self) -> f64 {
        if self.fd_step_explicit {
            self.fd_step
        } else {
            1e-4
        }
    }

    pub fn tolerance(&self, name: &str) -> f64 {
        *self
            .tolerances
            .get(name)
            .unwrap_or_else(|| panic!("no default tolerance for {name}"))
    }

    /// defaults < config file < command-line flags.
    pub fn resolve(cli: &super::Cli) -> Result<Self, String> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &cli.config {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            cfg.apply_file(&text)?;
        }
        if let Some(s) = cli.seed {
            cfg.seed = s;
        }
        if let Some(n) = cli.samples {
            cfg.samples = n;
        }
        if let Some(h) = cli.fd_step {
            cfg.fd_step = h;
            cfg.fd_step_explicit = true;
        }
        if let Some(f) = cli.format {
            cfg.format = f;
        }
        for spec in &cli.tol {
            let (name, value) = parse_tol(spec)?;
            cfg.tolerances.insert(name, value);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply_file(&mut self, text: &str) -> Result<(), String> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "seed" => self.seed = value.parse().map_err(|e| format!("seed: {e}"))?,
                "samples" => self.samples = value.parse().map_err(|e| format!("samples: {e}"))?,
                "fd_step" => {
                    self.fd_step = value.parse().map_err(|e| format!("fd_step: {e}"))?;
                    self.fd_step_explicit = true;
                }
                "format" => {
                    self.format = match value {
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        "markdown" => Format::Markdown,
                        other => return Err(format!("unknown format {other:?}")),
                    }
                }
                _ => {
                    if let Some(name) = key.strip_prefix("tol.") {
                        let v: f64 = value.parse().map_err(|e| format!("{key}: {e}"))?;
                        self.tolerances.insert(name.to_string(), v);
                    } else {
                        return Err(format!("unknown config key {key:?}"));
                    }
                }
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), String> {
        if self.samples < 1 {
            return Err("samples must be at least 1".into());
        }
        if !(self.fd_step > 0.0 && self.fd_step < 1e-1) {
            return Err("fd_step must lie in (0, 1e-1)".into());
        }
        Ok(())
    }
}

fn parse_tol(spec: &str) -> Result<(String, f64), String> {
    let (name, value) = spec
        .split_once('=')
        .ok_or_else(|| format!("--tol expects NAME=VALUE, got {spec:?}"))?;
    let v: f64 = value
        .parse()
        .map_err(|e| format!("tolerance {name}: {e}"))?;
    Ok((name.trim().to_string(), v))
}
