//! Named-point JSON space format:
//! `{"points": ["p","a","b"], "opens": [[], ["a","b"], ["p","a","b"]]}`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::pointset::PointSet;
use super::space::{validate_topology, FiniteSpace};
use crate::error::{Result, TopoError};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceFile {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

/// A space together with the names of its points.
#[derive(Debug, Clone)]
pub struct NamedSpace {
    pub names: Vec<String>,
    pub space: FiniteSpace,
}

impl NamedSpace {
    /// Default names `"0"`, `"1"`, …
    pub fn unnamed(space: FiniteSpace) -> Self {
        NamedSpace {
            names: (0..space.n()).map(|i| i.to_string()).collect(),
            space,
        }
    }

    pub fn parse(text: &str) -> Result<NamedSpace> {
        let file: SpaceFile =
            serde_json::from_str(text).map_err(|e| TopoError::Parse(e.to_string()))?;
        NamedSpace::from_file(&file)
    }

    pub fn from_file(file: &SpaceFile) -> Result<NamedSpace> {
        let mut index = HashMap::new();
        for (i, name) in file.points.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(TopoError::Parse(format!("duplicate point name `{name}`")));
            }
        }
        let n = file.points.len();
        let mut opens = Vec::with_capacity(file.opens.len());
        for open in &file.opens {
            opens.push(names_to_set(&index, open)?);
        }
        let space = validate_topology(n, &opens)?;
        Ok(NamedSpace {
            names: file.points.clone(),
            space,
        })
    }

    /// Parses a comma-separated list of point names.
    pub fn parse_set(&self, list: &str) -> Result<PointSet> {
        let index: HashMap<&str, usize> = self
            .names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let names: Vec<String> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        names_to_set(&index, &names)
    }

    pub fn set_names(&self, a: PointSet) -> Vec<String> {
        a.iter().map(|x| self.names[x].clone()).collect()
    }

    pub fn to_file(&self) -> SpaceFile {
        SpaceFile {
            points: self.names.clone(),
            opens: self
                .space
                .opens()
                .iter()
                .map(|&u| self.set_names(u))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("space files always serialize")
    }
}

fn names_to_set(index: &HashMap<&str, usize>, names: &[String]) -> Result<PointSet> {
    let mut set = PointSet::EMPTY;
    for name in names {
        match index.get(name.as_str()) {
            Some(&i) => set.insert(i),
            None => return Err(TopoError::Parse(format!("unknown point `{name}`"))),
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_particular_point_file() {
        let s = NamedSpace::parse(
            r#"{"points": ["p","a","b"], "opens": [[],["a","b"],["p","a","b"]]}"#,
        )
        .unwrap();
        assert_eq!(s.space.opens().len(), 3);
        assert_eq!(s.parse_set("a, b").unwrap(), PointSet::from_points([1, 2]));
        assert_eq!(s.set_names(PointSet::from_points([0])), vec!["p"]);
        let again = NamedSpace::parse(&s.to_json()).unwrap();
        assert_eq!(again.space, s.space);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(NamedSpace::parse("{"), Err(TopoError::Parse(_))));
        assert!(matches!(
            NamedSpace::parse(r#"{"points": ["a","a"], "opens": []}"#),
            Err(TopoError::Parse(_))
        ));
        assert!(matches!(
            NamedSpace::parse(r#"{"points": ["a"], "opens": [[], ["z"]]}"#),
            Err(TopoError::Parse(_))
        ));
        assert_eq!(
            NamedSpace::parse(r#"{"points": ["a","b"], "opens": [[], ["a"], ["b"]]}"#).unwrap_err(),
            TopoError::NotClosedUnderUnion(PointSet::from_points([0]), PointSet::from_points([1]))
        );
    }
}
