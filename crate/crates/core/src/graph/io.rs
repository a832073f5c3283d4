use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::coords::{ColCoordinates, StarOfCycleCoordinates, StarRole};
use super::{Family, Graph};
use crate::error::{Error, Result};

/// Wire form of a graph. Fields are declared in key order so the emitted
/// JSON has sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub edges: Vec<[usize; 2]>,
    pub family: String,
    pub n: usize,
}

/// Whether DOT export should attach coordinate attributes to vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexAnnotations {
    #[default]
    None,
    Coordinates,
}

impl Graph {
    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            family: self.family.to_string(),
            n: self.order,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let family = raw.family.parse().unwrap_or(Family::Generic);
        Graph::from_edges(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)), family)
    }

    /// Family-specific coordinates of `v`, if the family has a coordinate view.
    pub fn coordinates(&self, v: usize) -> Option<String> {
        match self.family {
            Family::Hypercube { dim } | Family::FoldedHypercube { dim } => {
                Some(format!("{v:0dim$b}"))
            }
            Family::Ladder { length } => {
                Some(format!("({},{})", v / (length + 1), v % (length + 1)))
            }
            Family::CycleOfLadders { ladders, length } => {
                let c = ColCoordinates::from_label(v, ladders, length).ok()?;
                Some(format!("L{}:({},{})", c.ladder, c.band, c.rung))
            }
            Family::StarOfCycle { outer, central } => {
                let c = StarOfCycleCoordinates::from_label(v, outer, central).ok()?;
                Some(match c.role {
                    StarRole::Central => format!("v{}", c.position),
                    StarRole::Outer { cycle } => format!("u{}.{}", cycle, c.position),
                })
            }
            _ => None,
        }
    }

    /// Undirected DOT rendering with integer vertex names.
    pub fn to_dot(&self, annotations: VertexAnnotations) -> String {
        let mut out = String::new();
        writeln!(out, "graph G {{").unwrap();
        writeln!(out, "  // {}", self.family).unwrap();
        for v in 0..self.order {
            match (annotations, self.coordinates(v)) {
                (VertexAnnotations::Coordinates, Some(coord)) => {
                    writeln!(out, "  {v} [coord=\"{coord}\"];").unwrap()
                }
                _ => writeln!(out, "  {v};").unwrap(),
            }
        }
        for &(u, v) in &self.edges {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Edge list as CSV with a `u,v` header.
    pub fn to_edge_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(["u", "v"]).unwrap();
        for &(u, v) in &self.edges {
            writer.serialize((u, v)).unwrap();
        }
        String::from_utf8(writer.into_inner().unwrap()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    #[test]
    fn json_has_sorted_keys_and_sorted_edges() {
        let g = build_cycle(4).unwrap();
        assert_eq!(
            g.to_json(),
            r#"{"edges":[[0,1],[0,3],[1,2],[2,3]],"family":"cycle:4","n":4}"#
        );
    }

    #[test]
    fn json_round_trip() {
        let g = build_star_of_cycle(3, 4).unwrap();
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert!(Graph::from_json(r#"{"edges":[[0,0]],"family":"generic","n":2}"#).is_err());
        assert!(Graph::from_json("{").is_err());
    }

    #[test]
    fn dot_export() {
        let g = build_cycle_of_ladders(4, 3).unwrap();
        let dot = g.to_dot(VertexAnnotations::Coordinates);
        assert_eq!(dot.matches(" -- ").count(), 44);
        assert!(dot.contains("  12 [coord=\"L1:(1,3)\"];"));
        let plain = build_folded_hypercube(3).unwrap().to_dot(VertexAnnotations::None);
        assert!(plain.starts_with("graph G {\n"));
        assert!(plain.contains("  0 -- 7;"));
    }

    #[test]
    fn coordinates_per_family() {
        assert_eq!(build_hypercube(4).unwrap().coordinates(5).as_deref(), Some("0101"));
        assert_eq!(build_star_of_cycle(3, 3).unwrap().coordinates(6).as_deref(), Some("u1.1"));
        assert_eq!(build_star_of_cycle(3, 3).unwrap().coordinates(8).as_deref(), Some("v2"));
        assert_eq!(build_ladder(2).unwrap().coordinates(4).as_deref(), Some("(1,1)"));
        assert_eq!(build_cycle(5).unwrap().coordinates(1), None);
    }
}
