//! Simple undirected graphs with dense integer labels, plus the graph
//! families used as guests and hosts.

mod coords;
mod families;
mod io;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

pub use coords::{ColCoordinates, StarOfCycleCoordinates, StarRole};
pub use families::{
    build_circulant, build_complete, build_cycle, build_cycle_of_ladders, build_folded_hypercube,
    build_hypercube, build_ladder, build_path, build_star_of_cycle, cartesian_product, gray_code,
    gray_rank,
};
pub use io::{GraphJson, VertexAnnotations};

use crate::error::{invalid, Error, Result};

/// Provenance of a graph. Carries the construction parameters so that
/// closed-form results for the family can be looked up later.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Generic,
    Path { vertices: usize },
    Cycle { vertices: usize },
    Complete { vertices: usize },
    Hypercube { dim: usize },
    FoldedHypercube { dim: usize },
    Circulant { order: usize, jumps: Vec<usize> },
    Ladder { length: usize },
    CycleOfLadders { ladders: usize, length: usize },
    StarOfCycle { outer: usize, central: usize },
    Product,
}

impl Family {
    /// Short provenance name, without parameters.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Generic => "generic",
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Hypercube { .. } => "hypercube",
            Family::FoldedHypercube { .. } => "folded-hypercube",
            Family::Circulant { .. } => "circulant",
            Family::Ladder { .. } => "ladder",
            Family::CycleOfLadders { .. } => "cycle-of-ladders",
            Family::StarOfCycle { .. } => "star-of-cycle",
            Family::Product => "product",
        }
    }

    /// Rebuilds the graph this family tag describes. `None` for tags that do
    /// not determine a graph (generic, product).
    pub fn build(&self) -> Option<Result<Graph>> {
        Some(match self {
            Family::Generic | Family::Product => return None,
            Family::Path { vertices } => build_path(*vertices),
            Family::Cycle { vertices } => build_cycle(*vertices),
            Family::Complete { vertices } => build_complete(*vertices),
            Family::Hypercube { dim } => build_hypercube(*dim),
            Family::FoldedHypercube { dim } => build_folded_hypercube(*dim),
            Family::Circulant { order, jumps } => build_circulant(*order, jumps),
            Family::Ladder { length } => build_ladder(*length),
            Family::CycleOfLadders { ladders, length } => build_cycle_of_ladders(*ladders, *length),
            Family::StarOfCycle { outer, central } => build_star_of_cycle(*outer, *central),
        })
    }
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            Family::Generic | Family::Product => write!(f, "{name}"),
            Family::Path { vertices } | Family::Cycle { vertices } | Family::Complete { vertices } => {
                write!(f, "{name}:{vertices}")
            }
            Family::Hypercube { dim } | Family::FoldedHypercube { dim } => write!(f, "{name}:{dim}"),
            Family::Circulant { order, jumps } => write!(f, "{name}:{order}:{}", join(jumps)),
            Family::Ladder { length } => write!(f, "{name}:{length}"),
            Family::CycleOfLadders { ladders, length } => write!(f, "{name}:{ladders},{length}"),
            Family::StarOfCycle { outer, central } => write!(f, "{name}:{outer},{central}"),
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected an integer, found {t:?}")))
        })
        .collect()
}

fn expect_params(name: &str, params: &[usize], count: usize) -> Result<()> {
    if params.len() != count {
        return Err(Error::Parse(format!(
            "{name} takes {count} parameter(s), found {}",
            params.len()
        )));
    }
    Ok(())
}

/// Parses family designators. Accepts the `Display` form
/// (`folded-hypercube:3`, `circulant:8:1,2`) and the short mini-syntax
/// (`fq3`, `q:4`, `col:4,3`, `circ:8:1,2`, `star:3,4`, `c8`, `p4`, `k5`).
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim().to_ascii_lowercase();
        let split = s
            .find(|c: char| c == ':' || c.is_ascii_digit())
            .unwrap_or(s.len());
        let (name, rest) = s.split_at(split);
        let rest = rest.strip_prefix(':').unwrap_or(rest);
        if name == "generic" || name == "product" {
            return Ok(if name == "generic" { Family::Generic } else { Family::Product });
        }
        if matches!(name, "circulant" | "circ") {
            let (order, jumps) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("circulant needs order:jumps, found {rest:?}")))?;
            let order = parse_list(order)?;
            expect_params(name, &order, 1)?;
            return Ok(Family::Circulant { order: order[0], jumps: parse_list(jumps)? });
        }
        let params = parse_list(rest)?;
        let one = |p: &[usize]| -> Result<usize> {
            expect_params(name, p, 1)?;
            Ok(p[0])
        };
        let two = |p: &[usize]| -> Result<(usize, usize)> {
            expect_params(name, p, 2)?;
            Ok((p[0], p[1]))
        };
        Ok(match name {
            "path" | "p" => Family::Path { vertices: one(&params)? },
            "cycle" | "c" => Family::Cycle { vertices: one(&params)? },
            "complete" | "k" => Family::Complete { vertices: one(&params)? },
            "hypercube" | "q" => Family::Hypercube { dim: one(&params)? },
            "folded-hypercube" | "fq" => Family::FoldedHypercube { dim: one(&params)? },
            "ladder" | "l" => Family::Ladder { length: one(&params)? },
            "cycle-of-ladders" | "col" => {
                let (ladders, length) = two(&params)?;
                Family::CycleOfLadders { ladders, length }
            }
            "star-of-cycle" | "star" => {
                let (outer, central) = two(&params)?;
                Family::StarOfCycle { outer, central }
            }
            other => return Err(Error::Parse(format!("unknown graph family {other:?}"))),
        })
    }
}

/// An immutable simple undirected graph on vertices `0..order`.
///
/// Edges are stored normalized (`u < v`) and sorted lexicographically, so
/// an edge's position in [`Graph::edges`] is a stable edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    family: Family,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, parallel edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        family: Family,
    ) -> Result<Graph> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("parallel edge ({}, {})", w[0].0, w[0].1)));
        }
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { order, edges: normalized, adjacency, family })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Neighbors of `v` in ascending label order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// The common degree if the graph is regular. The empty graph is not.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency.iter().all(|a| a.len() == first).then_some(first)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// All-pairs shortest path lengths. Fails on a disconnected graph.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let n = self.order;
        let mut data = Vec::with_capacity(n * n);
        for u in 0..n {
            for (v, d) in self.distances_from(u).into_iter().enumerate() {
                data.push(d.ok_or(Error::Disconnected(u, v))?);
            }
        }
        Ok(DistanceMatrix { order: n, data })
    }

    /// Adjacency as bitmasks, available for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        (self.order <= 64).then(|| {
            self.adjacency
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | 1 << w))
                .collect()
        })
    }

    /// Connected components of the graph with the edges at `removed` (edge
    /// ids) deleted. Each component is sorted; components are ordered by
    /// their smallest vertex.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut skip = vec![false; self.edges.len()];
        for &e in removed {
            skip[e] = true;
        }
        let mut component = vec![usize::MAX; self.order];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.order {
            if component[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            component[start] = id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    let e = self.edge_index(u, w).expect("adjacent vertices share an edge");
                    if !skip[e] && component[w] == usize::MAX {
                        component[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

/// Dense all-pairs distance table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    data: Vec<usize>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.data[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.data[u * self.order..(u + 1) * self.order]
    }

    pub fn order(&self) -> usize {
        self.order
    }
}
