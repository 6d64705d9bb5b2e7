//! Algebra spec files: JSON with labels and rational strings.
//!
//! ```json
//! {"dim": 3, "basis": ["P", "Q", "E"],
//!  "brackets": [{"i": "P", "j": "Q", "result": {"E": "1"}}]}
//! ```

use crate::error::CliError;
use gutt_core::exact_arith::parse_rational;
use gutt_core::{LieAlgebra, Vector};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: String,
    pub j: String,
    pub result: BTreeMap<String, String>,
}

fn invalid(msg: String) -> CliError {
    CliError::Spec(msg)
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| invalid(format!("bad JSON: {e}")))
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra, CliError> {
        if self.basis.len() != self.dim {
            return Err(invalid(format!("dim is {} but {} basis labels given", self.dim, self.basis.len())));
        }
        if self.dim == 0 {
            return Err(invalid("dim must be positive".into()));
        }
        let mut index = BTreeMap::new();
        for (k, label) in self.basis.iter().enumerate() {
            let ok = label.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || label == "z" {
                return Err(invalid(format!("basis label {label:?} is not an identifier other than z")));
            }
            if index.insert(label.as_str(), k).is_some() {
                return Err(invalid(format!("duplicate basis label {label:?}")));
            }
        }
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| invalid(format!("unknown label {l:?}")));
        let mut entries = Vec::new();
        for b in &self.brackets {
            let (i, j) = (lookup(&b.i)?, lookup(&b.j)?);
            let mut v = Vector::zero(self.dim);
            for (label, value) in &b.result {
                let q = parse_rational(value).map_err(|e| invalid(format!("[{}, {}]: {e}", b.i, b.j)))?;
                v.0[lookup(label)?] = q;
            }
            entries.push((i, j, v));
        }
        Ok(LieAlgebra::from_brackets(self.basis.clone(), &entries)?)
    }
}

/// Loads a spec file, or one of the built-in names `heisenberg`, `so3`,
/// `abelian<d>` when no such file exists.
pub fn load(name: &str) -> Result<LieAlgebra, CliError> {
    let path = Path::new(name);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{name}: {e}")))?;
        return AlgebraSpec::from_json(&text)?.to_algebra();
    }
    match name {
        "heisenberg" => Ok(LieAlgebra::heisenberg(1)),
        "so3" => Ok(LieAlgebra::so3()),
        _ => match name.strip_prefix("abelian").map(str::parse::<usize>) {
            Some(Ok(d)) if d >= 1 => Ok(LieAlgebra::abelian(d)),
            _ => Err(CliError::Usage(format!("no spec file or built-in algebra named {name:?}"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_from_json() {
        let text = r#"{"dim":3,"basis":["P","Q","E"],"brackets":[{"i":"P","j":"Q","result":{"E":"1"}}]}"#;
        let alg = AlgebraSpec::from_json(text).unwrap().to_algebra().unwrap();
        assert_eq!(alg.structure_constants(), LieAlgebra::heisenberg(1).structure_constants());
    }

    #[test]
    fn rejects_bad_specs() {
        let dup = r#"{"dim":2,"basis":["a","a"],"brackets":[]}"#;
        assert!(AlgebraSpec::from_json(dup).unwrap().to_algebra().is_err());
        let unknown = r#"{"dim":2,"basis":["a","b"],"brackets":[{"i":"a","j":"c","result":{}}]}"#;
        assert!(AlgebraSpec::from_json(unknown).unwrap().to_algebra().is_err());
        // [a,b] = c, [b,c] = b: the Jacobi sum for (a,b,c) is -c
        let jacobi = r#"{"dim":3,"basis":["a","b","c"],"brackets":[
            {"i":"a","j":"b","result":{"c":"1"}},
            {"i":"b","j":"c","result":{"b":"1"}}]}"#;
        let err = AlgebraSpec::from_json(jacobi).unwrap().to_algebra().unwrap_err();
        assert!(err.to_string().contains("Jacobi"), "{err}");
        assert!(AlgebraSpec::from_json(r#"{"dim":1}"#).is_err());
    }
}
