use std::fmt;

use serde::Serialize;

use crate::classes::{space_report, SpaceReport};
use crate::error::Result;
use crate::operators::{FlagContext, SetFlags};
use crate::setcore::NamedSpace;

/// One line of the sg-T½ table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingletonRow {
    pub point: String,
    pub in_x1: bool,
    pub open: bool,
    pub nowhere_dense: bool,
    pub sg_open: bool,
    pub sg_closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetAnalysis {
    pub points: Vec<String>,
    pub flags: SetFlags,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
    pub x1: Vec<String>,
    pub x2: Vec<String>,
    pub report: SpaceReport,
    pub singletons: Vec<SingletonRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<SetAnalysis>,
}

/// Builds the report for a named space and, optionally, a comma-separated
/// list of its points.
pub fn analyze(named: &NamedSpace, set: Option<&str>) -> Result<Analysis> {
    let space = &named.space;
    let ctx = FlagContext::new(space);
    let report = space_report(space);
    let singletons = (0..space.n())
        .map(|x| {
            let flags = ctx.flags(crate::setcore::PointSet::singleton(x));
            SingletonRow {
                point: named.names[x].clone(),
                in_x1: report.x1.contains(x),
                open: flags.open,
                nowhere_dense: flags.nowhere_dense,
                sg_open: flags.sg_open,
                sg_closed: flags.sg_closed,
            }
        })
        .collect();
    let set = match set {
        Some(list) => {
            let a = named.parse_set(list)?;
            Some(SetAnalysis {
                points: named.set_names(a),
                flags: ctx.flags(a),
            })
        }
        None => None,
    };
    Ok(Analysis {
        points: named.names.clone(),
        opens: space.opens().iter().map(|&u| named.set_names(u)).collect(),
        x1: named.set_names(report.x1),
        x2: named.set_names(report.x2),
        report,
        singletons,
        set,
    })
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points: {}", braces(&self.points))?;
        let opens: Vec<String> = self.opens.iter().map(|o| braces(o)).collect();
        writeln!(f, "opens:  {}", opens.join(" "))?;
        writeln!(f, "X1 = {}", braces(&self.x1))?;
        writeln!(f, "X2 = {}", braces(&self.x2))?;
        writeln!(f)?;
        writeln!(f, "{:<10} {:>4} {:>6} {:>8} {:>8} {:>10}", "point", "X1", "open", "nowh.d.", "sg-open", "sg-closed")?;
        for row in &self.singletons {
            writeln!(
                f,
                "{:<10} {:>4} {:>6} {:>8} {:>8} {:>10}",
                row.point,
                yes(row.in_x1),
                yes(row.open),
                yes(row.nowhere_dense),
                yes(row.sg_open),
                yes(row.sg_closed)
            )?;
        }
        writeln!(f)?;
        for name in SpaceReport::BOOL_NAMES {
            writeln!(f, "{name:<24} {}", self.report.get(name).unwrap_or_default())?;
        }
        writeln!(f, "{:<24} {}", "max_cellular", self.report.max_cellular)?;
        if let Some(set) = &self.set {
            writeln!(f)?;
            writeln!(f, "A = {}", braces(&set.points))?;
            for name in SetFlags::NAMES {
                writeln!(f, "  {name:<18} {}", set.flags.get(name).unwrap_or_default())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PP3: &str = r#"{"points":["a","b","p"],"opens":[[],["a","b"],["a","b","p"]]}"#;
    const SIERP: &str = r#"{"points":["a","b"],"opens":[[],["a"],["a","b"]]}"#;

    #[test]
    fn particular_point_report() {
        let a = analyze(&NamedSpace::parse(PP3).unwrap(), None).unwrap();
        assert_eq!(a.x1, ["p"]);
        assert_eq!(a.singletons.len(), 3);
        assert!(a.singletons.iter().all(|r| r.sg_open || r.sg_closed));
        let p = &a.singletons[2];
        assert!(p.in_x1 && p.nowhere_dense && p.sg_closed);
        assert!(a.to_string().contains("X1 = {p}"));
    }

    #[test]
    fn sierpinski_closed_point() {
        let a = analyze(&NamedSpace::parse(SIERP).unwrap(), Some("b")).unwrap();
        let flags = a.set.unwrap().flags;
        assert!(flags.nowhere_dense && flags.hsg_closed);
    }

    #[test]
    fn unknown_point_is_an_error() {
        assert!(analyze(&NamedSpace::parse(SIERP).unwrap(), Some("z")).is_err());
    }
}
