//! JSON documents for binary and n-ary algebras.
//!
//! Binary: `{"name", "dim", "basis", "table"}` where `table[i][j]` is the
//! coordinate vector of `e_i e_j`. N-ary: `{"name", "arity", "dim",
//! "entries": [{"args": [..], "val": {"k": "p/q"}}]}` listing only sorted
//! argument tuples of an anticommutative product. Indices are 0-based and
//! every number is an exact rational string such as `"-3/4"` or `"2"`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use lderlab::catalog::{self, CatalogAlgebra, CatalogEntry};
use lderlab::{Algebra, NAryAlgebra, Scalar};

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NAryEntry {
    pub args: Vec<usize>,
    pub val: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    #[serde(default)]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<NAryEntry>>,
}

/// What a command works on.
#[derive(Clone, Debug)]
pub struct Input {
    pub label: String,
    pub algebra: CatalogAlgebra,
    /// Present for `@name` inputs.
    pub entry: Option<CatalogEntry>,
}

impl Input {
    pub fn binary(&self) -> Option<&Algebra> {
        match &self.algebra {
            CatalogAlgebra::Binary(a) => Some(a),
            CatalogAlgebra::NAry(_) => None,
        }
    }
}

fn scalar(text: &str, at: impl Fn() -> String) -> Result<Scalar, CliError> {
    text.parse::<Scalar>().map_err(|e| CliError::Parse(format!("{}: {e}", at())))
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<AlgebraDocument, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
        })
    }

    pub fn to_algebra(&self, fallback_name: &str) -> Result<CatalogAlgebra, CliError> {
        let name = self.name.clone().unwrap_or_else(|| fallback_name.to_string());
        let m = self.dim;
        if m == 0 {
            return Err(CliError::Parse("dim must be at least 1".into()));
        }
        let labels = match &self.basis {
            Some(b) if b.len() != m => {
                return Err(CliError::Parse(format!("basis has {} labels for dim {m}", b.len())))
            }
            Some(b) => b.clone(),
            None => (1..=m).map(|i| format!("e{i}")).collect(),
        };
        match (&self.table, self.arity, &self.entries) {
            (Some(table), None, None) => {
                if table.len() != m {
                    return Err(CliError::Parse(format!("table has {} rows for dim {m}", table.len())));
                }
                let mut out = Vec::with_capacity(m);
                for (i, row) in table.iter().enumerate() {
                    if row.len() != m {
                        return Err(CliError::Parse(format!("table[{i}] has {} entries for dim {m}", row.len())));
                    }
                    let mut parsed_row = Vec::with_capacity(m);
                    for (j, v) in row.iter().enumerate() {
                        if v.len() != m {
                            return Err(CliError::Parse(format!("table[{i}][{j}] has length {}, expected {m}", v.len())));
                        }
                        let vec = v
                            .iter()
                            .enumerate()
                            .map(|(k, s)| scalar(s, || format!("table[{i}][{j}][{k}]")))
                            .collect::<Result<Vec<_>, _>>()?;
                        parsed_row.push(vec);
                    }
                    out.push(parsed_row);
                }
                Ok(CatalogAlgebra::Binary(Algebra::new(name, labels, out)?))
            }
            (None, Some(arity), Some(entries)) => {
                let mut parsed = Vec::with_capacity(entries.len());
                for (n, e) in entries.iter().enumerate() {
                    let mut v = vec![Scalar::zero(); m];
                    for (k, s) in &e.val {
                        let k: usize = k
                            .parse()
                            .ok()
                            .filter(|&k| k < m)
                            .ok_or_else(|| CliError::Parse(format!("entries[{n}].val: bad index {k:?}")))?;
                        v[k] = scalar(s, || format!("entries[{n}].val[{k}]"))?;
                    }
                    parsed.push((e.args.clone(), v));
                }
                Ok(CatalogAlgebra::NAry(NAryAlgebra::new(name, arity, labels, parsed, true)?))
            }
            _ => Err(CliError::Parse("expected either \"table\" or both \"arity\" and \"entries\"".into())),
        }
    }

    pub fn from_algebra(a: &Algebra) -> AlgebraDocument {
        AlgebraDocument {
            name: Some(a.name().to_string()),
            dim: a.dim(),
            basis: Some(a.labels().to_vec()),
            table: Some(
                a.table()
                    .iter()
                    .map(|row| row.iter().map(|v| v.iter().map(Scalar::to_string).collect()).collect())
                    .collect(),
            ),
            arity: None,
            entries: None,
        }
    }

    pub fn from_nary(b: &NAryAlgebra) -> AlgebraDocument {
        let entries = b
            .entries()
            .map(|(args, v)| NAryEntry {
                args: args.clone(),
                val: v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (k.to_string(), x.to_string()))
                    .collect(),
            })
            .collect();
        AlgebraDocument {
            name: Some(b.name().to_string()),
            dim: b.dim(),
            basis: Some(b.labels().to_vec()),
            table: None,
            arity: Some(b.arity()),
            entries: Some(entries),
        }
    }
}

/// `@name` picks a catalog entry, anything else is read as a file.
pub fn load_input(spec: &str) -> Result<Input, CliError> {
    if let Some(name) = spec.strip_prefix('@') {
        let entry = catalog::by_name(name)
            .ok_or_else(|| CliError::Usage(format!("unknown catalog algebra {name:?}")))?;
        return Ok(Input { label: spec.to_string(), algebra: entry.algebra.clone(), entry: Some(entry) });
    }
    let path = Path::new(spec);
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {spec}: {e}")))?;
    let doc = AlgebraDocument::parse(&text).map_err(|e| match e {
        CliError::Parse(msg) => CliError::Parse(format!("{spec}: {msg}")),
        other => other,
    })?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("input");
    Ok(Input { label: spec.to_string(), algebra: doc.to_algebra(stem)?, entry: None })
}
