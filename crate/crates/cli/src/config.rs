//! Flat `key=value` configuration.
//!
//! Plain config files hold one `key=value` per line with `#` comments.
//! Emitted CSV tables carry their resolved configuration as `#@ key=value`
//! header lines terminated by `#@end`, so a table can be fed back through
//! `--config` to reproduce itself.

use crate::error::{CliError, CliResult};
use qzeno::halfline::Boundary;
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Float,
    Int,
    Bool,
    FloatList,
    IntList,
    Boundary,
    Choice(&'static [&'static str]),
    /// A float, or `auto` to let the command derive it.
    FloatOrAuto,
    IntOrAuto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    pub key: &'static str,
    pub default: &'static str,
    pub kind: Kind,
}

pub const fn field(key: &'static str, default: &'static str, kind: Kind) -> Field {
    Field { key, default, kind }
}

/// Key/value pairs from config text. Stops at `#@end`.
pub fn parse_config_text(text: &str) -> CliResult<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line == "#@end" {
            break;
        }
        let body = if let Some(rest) = line.strip_prefix("#@ ") {
            rest
        } else if line.is_empty() || line.starts_with('#') {
            continue;
        } else {
            line
        };
        let (k, v) = body
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("line {}: expected key=value, got {raw:?}", lineno + 1)))?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

fn canonical(kind: Kind, key: &str, raw: &str) -> CliResult<String> {
    let bad = |what: &str| CliError::Config(format!("{key}: cannot parse {raw:?} as {what}"));
    let float = |s: &str| -> CliResult<f64> {
        let v: f64 = s.trim().parse().map_err(|_| bad("a number"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad("a finite number"))
        }
    };
    let int = |s: &str| s.trim().parse::<u64>().map_err(|_| bad("a non-negative integer"));
    fn list(s: &str) -> Vec<&str> {
        s.split(',').filter(|x| !x.trim().is_empty()).collect()
    }
    Ok(match kind {
        Kind::Float => float(raw)?.to_string(),
        Kind::Int => int(raw)?.to_string(),
        Kind::Bool => match raw.trim() {
            "true" | "1" | "yes" => "true".into(),
            "false" | "0" | "no" => "false".into(),
            _ => return Err(bad("a boolean")),
        },
        Kind::FloatList => {
            let items = list(raw).into_iter().map(float).collect::<CliResult<Vec<_>>>()?;
            if items.is_empty() {
                return Err(bad("a non-empty list"));
            }
            items.iter().map(f64::to_string).collect::<Vec<_>>().join(",")
        }
        Kind::IntList => {
            let items = list(raw).into_iter().map(int).collect::<CliResult<Vec<_>>>()?;
            if items.is_empty() {
                return Err(bad("a non-empty list"));
            }
            items.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
        }
        Kind::Boundary => raw.parse::<Boundary>().map_err(|_| bad("a boundary parameter"))?.to_string(),
        Kind::Choice(options) => {
            let v = raw.trim().to_ascii_lowercase();
            if !options.contains(&v.as_str()) {
                return Err(bad(&format!("one of {}", options.join("|"))));
            }
            v
        }
        Kind::FloatOrAuto if raw.trim() == "auto" => "auto".into(),
        Kind::FloatOrAuto => float(raw)?.to_string(),
        Kind::IntOrAuto if raw.trim() == "auto" => "auto".into(),
        Kind::IntOrAuto => int(raw)?.to_string(),
    })
}

/// Fully resolved parameters of one run: schema defaults, then the config
/// file, then command-line flags.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: String,
    values: BTreeMap<String, String>,
    schema: &'static [Field],
}

impl RunConfig {
    pub fn resolve(
        command: &str,
        schema: &'static [Field],
        file: Option<&Path>,
        overrides: &[(String, String)],
    ) -> CliResult<Self> {
        let mut cfg = Self { command: command.to_string(), values: BTreeMap::new(), schema };
        for f in schema {
            cfg.values.insert(f.key.to_string(), canonical(f.kind, f.key, f.default)?);
        }
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            for (k, v) in parse_config_text(&text)? {
                if k == "command" {
                    if v != command {
                        return Err(CliError::Config(format!("config is for command {v:?}, not {command:?}")));
                    }
                    continue;
                }
                cfg.set(&k, &v)?;
            }
        }
        for (k, v) in overrides {
            cfg.set(k, v)?;
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, raw: &str) -> CliResult<()> {
        let f = self
            .schema
            .iter()
            .find(|f| f.key == key)
            .ok_or_else(|| CliError::Config(format!("unknown key {key:?} for command {}", self.command)))?;
        self.values.insert(key.to_string(), canonical(f.kind, key, raw)?);
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn raw(&self, key: &str) -> &str {
        self.values.get(key).map(String::as_str).unwrap_or_else(|| panic!("key {key} not in schema"))
    }

    pub fn is_auto(&self, key: &str) -> bool {
        self.raw(key) == "auto"
    }

    pub fn f64(&self, key: &str) -> f64 {
        self.raw(key).parse().expect("canonical float")
    }

    pub fn usize(&self, key: &str) -> usize {
        self.raw(key).parse().expect("canonical integer")
    }

    pub fn bool(&self, key: &str) -> bool {
        self.raw(key) == "true"
    }

    pub fn f64_list(&self, key: &str) -> Vec<f64> {
        self.raw(key).split(',').map(|s| s.parse().expect("canonical float")).collect()
    }

    pub fn usize_list(&self, key: &str) -> Vec<usize> {
        self.raw(key).split(',').map(|s| s.parse().expect("canonical integer")).collect()
    }

    pub fn boundary(&self, key: &str) -> Boundary {
        self.raw(key).parse().expect("canonical boundary")
    }
}
