//! Flat `key=value` configuration; command-line flags take precedence.

use std::fs;
use std::path::Path;

use promisekit::promise::Thresholds;
use promisekit::Rational;

use crate::{CliError, Format};

#[derive(Clone, Debug)]
pub struct Config {
    pub c: Rational,
    pub s: Rational,
    /// Fuel for plain runs and the default clock of machine-backed deciders.
    pub fuel: u64,
    /// Default word-length bound for tables and checks.
    pub bound: usize,
    pub search_cap: usize,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        let th = Thresholds::default();
        Config {
            c: th.c().clone(),
            s: th.s().clone(),
            fuel: 10_000,
            bound: 4,
            search_cap: 256,
            format: Format::Text,
        }
    }
}

fn invalid(key: &str, value: &str) -> CliError {
    CliError::Usage(format!("config: invalid value {value:?} for {key}"))
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        Self::parse(&text)
    }

    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = Config::default();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config: expected key=value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "c" => cfg.c = value.parse().map_err(|_| invalid(key, value))?,
                "s" => cfg.s = value.parse().map_err(|_| invalid(key, value))?,
                "fuel" => cfg.fuel = value.parse().map_err(|_| invalid(key, value))?,
                "bound" => cfg.bound = value.parse().map_err(|_| invalid(key, value))?,
                "search-cap" => cfg.search_cap = value.parse().map_err(|_| invalid(key, value))?,
                "format" => {
                    cfg.format = match value {
                        "text" => Format::Text,
                        "tsv" => Format::Tsv,
                        _ => return Err(invalid(key, value)),
                    }
                }
                _ => return Err(CliError::Usage(format!("config: unknown key {key:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn thresholds(&self) -> Result<Thresholds, CliError> {
        Ok(Thresholds::new(self.c.clone(), self.s.clone())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let cfg = Config::parse("# thresholds\nc = 3/4\ns=1/4\n\nfuel=50\nbound=6\nsearch-cap=32\nformat=tsv\n").unwrap();
        assert_eq!(cfg.c, "3/4".parse().unwrap());
        assert_eq!(cfg.s, "1/4".parse().unwrap());
        assert_eq!((cfg.fuel, cfg.bound, cfg.search_cap), (50, 6, 32));
        assert_eq!(cfg.format, Format::Tsv);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(matches!(Config::parse("depth=3"), Err(CliError::Usage(_))));
        assert!(matches!(Config::parse("fuel=lots"), Err(CliError::Usage(_))));
        assert!(matches!(Config::parse("fuel"), Err(CliError::Usage(_))));
    }
}
