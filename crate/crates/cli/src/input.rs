//! Reading JSON inputs from files or stdin.

use std::io::Read;
use std::path::Path;

use coxfactor::factorization::FactorizationRecord;
use coxfactor::{MinimalFactorization, Root, RootSystem};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{CliError, CliResult};

/// Reads a path, or stdin for `-`.
pub fn read_text(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_value(path: &Path) -> CliResult<Value> {
    serde_json::from_str(&read_text(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Accepts a bare object or the `"object"` field of a previous command's
/// output envelope.
pub fn read_object<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let mut v = parse_value(path)?;
    if let Some(inner) = v.get_mut("object") {
        v = inner.take();
    }
    serde_json::from_value(v).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FactorizationInput {
    Record(FactorizationRecord),
    Roots(Vec<Root>),
}

/// A factorization given as a full record, as a bare list of roots (a
/// factorization of the standard Coxeter element), or as an envelope holding
/// exactly one of those.
pub fn read_factorization(sys: &RootSystem, path: &Path) -> CliResult<MinimalFactorization> {
    let mut v = parse_value(path)?;
    if let Some(inner) = v.get_mut("factorization") {
        v = inner.take();
    } else if let Some(list) = v.get_mut("factorizations").and_then(Value::as_array_mut) {
        if list.len() != 1 {
            return Err(CliError::Input(format!(
                "{}: expected exactly one factorization, found {}",
                path.display(),
                list.len()
            )));
        }
        v = list.remove(0);
    }
    let parsed: FactorizationInput = serde_json::from_value(v).map_err(|e| {
        CliError::Input(format!(
            "{}: expected a factorization record or a list of roots ({e})",
            path.display()
        ))
    })?;
    let f = match parsed {
        FactorizationInput::Record(r) => r.to_factorization(sys),
        FactorizationInput::Roots(roots) => {
            MinimalFactorization::from_roots(sys, sys.standard_coxeter_element(), &roots)
        }
    };
    f.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Parses `3,3,4,4`, `[3, 3, 4, 4]` or `3 3 4 4`.
pub fn parse_code(s: &str) -> CliResult<Vec<usize>> {
    let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
    trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError::Input(format!("code entry {t:?} is not a positive integer")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_syntax() {
        assert_eq!(parse_code("3,3,4,4").unwrap(), vec![3, 3, 4, 4]);
        assert_eq!(parse_code("[4, 3]").unwrap(), vec![4, 3]);
        assert_eq!(parse_code(" 1 2 ").unwrap(), vec![1, 2]);
        assert_eq!(parse_code("[]").unwrap(), Vec::<usize>::new());
        assert!(matches!(parse_code("1,x"), Err(CliError::Input(_))));
    }
}
