//! JSON report types shared by the command-line tool and library callers.

use serde::{Deserialize, Serialize};

use crate::bigraph::{Color, Coloring, Vertex};
use crate::error::Error;
use crate::matching::{components, cover_report, meets_thresholds, ComponentType, Matching};
use crate::paths::{has_even_cycle, longest_monochromatic_path, CycleWitness, PathWitness};
use crate::search::{Budget, RamseyValue, SearchStatus, Thresholds};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRow {
    pub color: Color,
    pub index: usize,
    pub left: usize,
    pub right: usize,
    pub matching_number: usize,
    pub min_cover: Vec<Vertex>,
    pub cover_vertices: Vec<Vertex>,
    #[serde(rename = "type")]
    pub kind: ComponentType,
}

/// One row per monochromatic component, colours in red, green, blue order.
pub fn component_table(c: &Coloring) -> Vec<ComponentRow> {
    Color::ALL
        .into_iter()
        .flat_map(|col| {
            components(c, col).into_iter().enumerate().map(move |(index, comp)| {
                let r = cover_report(&comp);
                ComponentRow {
                    color: col,
                    index,
                    left: comp.left.len(),
                    right: comp.right.len(),
                    matching_number: r.matching_number,
                    min_cover: r.min_cover,
                    cover_vertices: r.cover_vertices,
                    kind: r.kind,
                }
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Check {
    Cm {
        thresholds: Thresholds,
        /// Largest connected matching per colour (red, green, blue).
        profile: [usize; 3],
        found: bool,
        witness: Option<Matching>,
    },
    Path {
        color: Color,
        length: usize,
        found: bool,
        longest: PathWitness,
    },
    Cycle {
        color: Color,
        length: usize,
        found: bool,
        witness: Option<CycleWitness>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n_left: usize,
    pub n_right: usize,
    pub complete: bool,
    pub components: Vec<ComponentRow>,
    pub check: Check,
}

impl VerifyReport {
    pub fn found(&self) -> bool {
        match self.check {
            Check::Cm { found, .. } | Check::Path { found, .. } | Check::Cycle { found, .. } => found,
        }
    }

    /// One-line summary for humans.
    pub fn summary(&self) -> String {
        match &self.check {
            Check::Cm { thresholds, profile, found, .. } => {
                let verdict = if *found { "contains" } else { "avoids" };
                format!("{verdict} {thresholds}; largest connected matchings R={} G={} B={}", profile[0], profile[1], profile[2])
            }
            Check::Path { color, length, found, longest } => {
                let verdict = if *found { "has" } else { "has no" };
                format!("{verdict} {color} path on {length} vertices; longest has {}", longest.vertices)
            }
            Check::Cycle { color, length, found, .. } => {
                let verdict = if *found { "has" } else { "has no" };
                format!("{verdict} {color} cycle on {length} vertices")
            }
        }
    }
}

fn report(c: &Coloring, check: Check) -> VerifyReport {
    VerifyReport { n_left: c.n_left(), n_right: c.n_right(), complete: c.is_complete(), components: component_table(c), check }
}

pub fn verify_cm(c: &Coloring, th: Thresholds) -> Result<VerifyReport, Error> {
    th.validate()?;
    let (found, witness) = meets_thresholds(c, th.k, th.l, th.m);
    let profile = crate::matching::cm_profile(c);
    Ok(report(c, Check::Cm { thresholds: th, profile, found, witness }))
}

pub fn verify_path(c: &Coloring, color: Color, length: usize, budget: &Budget) -> Result<VerifyReport, Error> {
    if length == 0 {
        return Err(Error::InvalidParams("path length must be at least 1".into()));
    }
    let mut longest = longest_monochromatic_path(c, color, budget)?;
    let found = longest.vertices >= length;
    if found {
        longest.path.truncate(length);
    }
    Ok(report(c, Check::Path { color, length, found, longest }))
}

pub fn verify_cycle(c: &Coloring, color: Color, length: usize, budget: &Budget) -> Result<VerifyReport, Error> {
    let witness = has_even_cycle(c, color, length, budget)?;
    Ok(report(c, Check::Cycle { color, length, found: witness.is_some(), witness }))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutcomeRow {
    pub n: usize,
    pub status: SearchStatus,
    pub nodes_explored: u64,
    pub elapsed_secs: f64,
    pub witness_file: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub thresholds: Thresholds,
    pub value: RamseyValue,
    pub outcomes: Vec<OutcomeRow>,
    pub total_secs: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::example1;

    #[test]
    fn example1_avoids_and_square_contains() {
        let r = verify_cm(&example1(1, 1, 1), Thresholds::new(2, 2, 2)).unwrap();
        assert!(!r.found());
        assert_eq!(r.components.len(), 3);
        assert!(r.summary().starts_with("avoids (2,2,2)"));
        let red = Coloring::monochromatic(2, 2, Color::Red);
        let r = verify_cm(&red, Thresholds::new(2, 2, 2)).unwrap();
        assert!(r.found());
        match r.check {
            Check::Cm { witness: Some(m), .. } => assert_eq!((m.color, m.len()), (Color::Red, 2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn path_check_truncates_witness() {
        let r = verify_path(&example1(2, 3, 1), Color::Green, 7, &Budget::nodes(1_000_000)).unwrap();
        assert!(r.found());
        match r.check {
            Check::Path { longest, .. } => assert_eq!(longest.path.len(), 7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn report_json_shape() {
        let r = verify_cm(&example1(1, 1, 1), Thresholds::new(2, 2, 2)).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["check"]["kind"], "cm");
        assert!(v["components"][0]["type"].is_string());
        assert_eq!(v["components"][0]["min_cover"][0], serde_json::json!(["L", 0]));
    }
}
