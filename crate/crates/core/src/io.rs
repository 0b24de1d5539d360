//! Group input files and group-source resolution.
//!
//! A group file is a JSON object
//! `{"name", "kind": "permutation" | "cayley", "degree"?, "generators"?, "table"?}`.
//! Permutation generators are lists of cycles over 0-based points.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{Group, Permutation, DEFAULT_MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Permutation,
    Cayley,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub kind: GroupKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        serde_json::from_str(text).map_err(|e| Error::Load(format!("malformed group file: {e}")))
    }

    /// Cayley-table spec of an existing group.
    pub fn of_group(g: &Group) -> GroupSpec {
        GroupSpec {
            name: g.name().to_string(),
            kind: GroupKind::Cayley,
            degree: None,
            generators: None,
            table: Some(g.table()),
        }
    }

    pub fn build(&self, cap: usize) -> Result<Group> {
        match self.kind {
            GroupKind::Cayley => {
                let table = self
                    .table
                    .as_ref()
                    .ok_or_else(|| Error::Load("cayley group without `table`".into()))?;
                Group::from_cayley_table_with_cap(&self.name, table, cap)
            }
            GroupKind::Permutation => {
                let degree = self
                    .degree
                    .ok_or_else(|| Error::Load("permutation group without `degree`".into()))?;
                let gens = self
                    .generators
                    .as_ref()
                    .ok_or_else(|| Error::Load("permutation group without `generators`".into()))?;
                let perms = gens
                    .iter()
                    .map(|cycles| Permutation::from_cycles(degree, cycles))
                    .collect::<Result<Vec<_>>>()?;
                Group::from_permutations_with_cap(&self.name, degree, &perms, cap)
            }
        }
    }
}

pub fn load_file(path: &Path, cap: usize) -> Result<Group> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Load(format!("{}: {e}", path.display())))?;
    GroupSpec::parse(&text)?.build(cap)
}

/// Resolves `catalog:NAME`, a path to a group file, or a bare catalog name.
pub fn resolve(source: &str, cap: Option<usize>) -> Result<Group> {
    let cap = cap.unwrap_or(DEFAULT_MAX_ORDER);
    if let Some(name) = source.strip_prefix("catalog:") {
        return catalog::construct_with_cap(name, cap);
    }
    let path = Path::new(source);
    if path.is_file() {
        return load_file(path, cap);
    }
    if source.ends_with(".json") || source.contains(std::path::MAIN_SEPARATOR) {
        return Err(Error::Load(format!("{source}: no such file")));
    }
    catalog::construct_with_cap(source, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;

    #[test]
    fn permutation_file() {
        let spec = GroupSpec::parse(
            r#"{"name": "S3", "kind": "permutation", "degree": 3,
                "generators": [[[0, 1, 2]], [[0, 1]]]}"#,
        )
        .unwrap();
        let g = spec.build(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 6);
        assert!(are_isomorphic(&g, &catalog::construct("S3").unwrap()));
    }

    #[test]
    fn cayley_round_trip() {
        let q8 = catalog::construct("Q8").unwrap();
        let spec = GroupSpec::of_group(&q8);
        let text = serde_json::to_string(&spec).unwrap();
        assert!(!text.contains("degree"));
        let back = GroupSpec::parse(&text).unwrap();
        assert_eq!(back, spec);
        assert_eq!(back.build(DEFAULT_MAX_ORDER).unwrap().table(), q8.table());
    }

    #[test]
    fn load_errors() {
        assert!(matches!(GroupSpec::parse("{"), Err(Error::Load(_))));
        assert!(matches!(GroupSpec::parse(r#"{"name": "x", "kind": "matrix"}"#), Err(Error::Load(_))));
        let missing = GroupSpec::parse(r#"{"name": "x", "kind": "cayley"}"#).unwrap();
        assert!(matches!(missing.build(10), Err(Error::Load(_))));
        let bad = GroupSpec::parse(r#"{"name": "x", "kind": "cayley", "table": [[0, 1], [1, 1]]}"#).unwrap();
        assert!(matches!(bad.build(10), Err(Error::NotAGroup { .. })));
        assert!(matches!(resolve("/nonexistent/g.json", None), Err(Error::Load(_))));
        assert!(matches!(resolve("catalog:Nope", None), Err(Error::UnknownName(_))));
        assert!(matches!(resolve("S5", Some(60)), Err(Error::ClosureExceedsCap { cap: 60 })));
    }

    #[test]
    fn sources() {
        assert_eq!(resolve("catalog:A4", None).unwrap().order(), 12);
        assert_eq!(resolve("hol_C7", None).unwrap().order(), 42);
    }
}
