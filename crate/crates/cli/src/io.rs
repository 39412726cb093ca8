//! JSON instance, triangulation and certificate files.

use std::fs;
use std::path::Path;

use cyclic_core::extension::Complex;
use cyclic_core::Simplex;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A list of simplices on `[n]` as stored on disk; members may overlap, so
/// this is the raw form behind both [`Complex`] and the classify command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub d: usize,
    pub n: u32,
    pub simplices: Vec<Vec<u32>>,
}

impl InstanceFile {
    pub fn from_complex(c: &Complex) -> Self {
        InstanceFile {
            d: c.d(),
            n: c.n(),
            simplices: c.simplices().iter().map(|s| s.to_vec()).collect(),
        }
    }

    /// Checks vertex ranges and ordering and converts each list.
    pub fn simplices(&self) -> Result<Vec<Simplex>, CliError> {
        if self.d == 0 {
            return Err(CliError::invalid("d must be at least 1"));
        }
        if self.n == 0 || self.n > cyclic_core::moment::MAX_VERTEX {
            return Err(CliError::invalid(format!("n={} outside 1..=64", self.n)));
        }
        self.simplices
            .iter()
            .enumerate()
            .map(|(i, list)| {
                if list.is_empty() {
                    return Err(CliError::invalid(format!("simplex #{i} is empty")));
                }
                if let Some(&v) = list.iter().find(|&&v| v == 0 || v > self.n) {
                    return Err(CliError::invalid(format!(
                        "simplex #{i} {list:?}: vertex {v} outside [1, {}]",
                        self.n
                    )));
                }
                if list.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(CliError::invalid(format!(
                        "simplex #{i} {list:?} is not strictly increasing"
                    )));
                }
                Simplex::new(list).map_err(CliError::from)
            })
            .collect()
    }

    pub fn to_complex(&self) -> Result<Complex, CliError> {
        Ok(Complex::new(self.n, self.d, self.simplices()?)?)
    }
}

/// Parses JSON, reporting syntax and shape errors with line and column.
pub fn parse_json<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::invalid(format!("{origin}: {e}")))
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
}

pub fn read_instance(path: &Path) -> Result<(InstanceFile, String), CliError> {
    let text = read_text(path)?;
    let inst = parse_json(&text, &path.display().to_string())?;
    Ok((inst, text))
}

/// Pretty JSON with arrays of numbers kept on one line, so each simplex is a
/// single line.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let pretty = serde_json::to_string_pretty(value).expect("serializable");
    let mut out = String::with_capacity(pretty.len());
    let mut rest = pretty.as_str();
    while let Some(open) = rest.find('[') {
        out.push_str(&rest[..open]);
        let tail = &rest[open + 1..];
        let close = tail.find(']');
        match close {
            Some(c)
                if tail[..c].contains('\n')
                    && tail[..c].chars().all(|ch| {
                        ch.is_ascii_digit() || ch == '-' || ch == ',' || ch.is_whitespace()
                    }) =>
            {
                let items: Vec<&str> = tail[..c]
                    .split(',')
                    .map(str::trim)
                    .filter(|x| !x.is_empty())
                    .collect();
                out.push('[');
                out.push_str(&items.join(", "));
                out.push(']');
                rest = &tail[c + 1..];
            }
            _ => {
                out.push('[');
                rest = tail;
            }
        }
    }
    out.push_str(rest);
    out.push('\n');
    out
}

/// Writes to `path`, or to standard output when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
