use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kl::{KlConfig, CACHE_FORMAT_VERSION};
use crate::rep::DEFAULT_ORACLE_DIM_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
    Latex,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "latex" => Ok(OutputFormat::Latex),
            other => Err(Error::Parse(format!(
                "unknown format `{other}` (expected json, csv, latex or text)"
            ))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Latex => "latex",
        })
    }
}

/// Everything that influences a run's output.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub cache_path: Option<PathBuf>,
    pub format: OutputFormat,
    pub kl: KlConfig,
    pub oracle_dim_cap: u64,
    /// Worker threads; `None` lets the pool decide.
    pub jobs: Option<usize>,
    pub bound_a: u32,
    pub bound_b: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cache_path: None,
            format: OutputFormat::Text,
            kl: KlConfig::default(),
            oracle_dim_cap: DEFAULT_ORACLE_DIM_CAP,
            jobs: None,
            bound_a: 1,
            bound_b: 1,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("max length", self.kl.max_length as u64),
            ("max support", self.kl.max_support as u64),
            ("max operand length", self.kl.max_operand_length as u64),
            ("oracle dimension cap", self.oracle_dim_cap),
            ("jobs", self.jobs.map_or(1, |j| j as u64)),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(Error::Parse(format!("{name} must be positive")));
            }
        }
        Ok(())
    }

    /// The settings that can change results, in a fixed textual form.
    /// Parallelism and the cache location are deliberately absent.
    pub fn fingerprint(&self) -> String {
        format!(
            "cache-format={} max-length={} max-support={} max-operand-length={} oracle-dim-cap={} bound-a={} bound-b={}",
            CACHE_FORMAT_VERSION,
            self.kl.max_length,
            self.kl.max_support,
            self.kl.max_operand_length,
            self.oracle_dim_cap,
            self.bound_a,
            self.bound_b
        )
    }

    /// Runs `f` on a pool with the configured number of workers.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(j) = self.jobs {
            builder = builder.num_threads(j);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::ResourceLimit(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}
