//! Exact minimum wirelength over all bijections, by branch and bound.

use serde::Serialize;

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// 10!, the default number of bijections the oracle may cover.
pub const DEFAULT_PERMUTATION_BUDGET: u128 = 3_628_800;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub minimum_wirelength: usize,
    /// Host label per guest label; the lexicographically least optimal map.
    pub witness_map: Vec<usize>,
    /// Complete bijections evaluated.
    pub searched: u128,
    /// Bijections skipped because a partial map's bound met the incumbent.
    pub pruned: u128,
}

impl OracleResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("oracle result serializes")
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX)
}

struct Search<'a> {
    guest: &'a Graph,
    dist: &'a DistanceMatrix,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    best: usize,
    best_map: Vec<usize>,
    searched: u128,
    pruned: u128,
    factorials: Vec<u128>,
}

impl Search<'_> {
    /// Cost of the assigned edges plus an admissible bound for the rest:
    /// an edge with one free endpoint costs at least the distance from the
    /// mapped endpoint to the nearest free host vertex, and an edge with two
    /// free endpoints costs at least 1.
    fn bound(&self) -> usize {
        let mut total = 0;
        for &(x, y) in self.guest.edges() {
            total += match (self.map[x], self.map[y]) {
                (Some(a), Some(b)) => self.dist.get(a, b),
                (Some(a), None) | (None, Some(a)) => self
                    .dist
                    .row(a)
                    .iter()
                    .zip(&self.used)
                    .filter(|(_, &u)| !u)
                    .map(|(&d, _)| d)
                    .min()
                    .unwrap_or(0),
                (None, None) => 1,
            };
        }
        total
    }

    fn descend(&mut self, depth: usize) {
        let n = self.map.len();
        if depth == n {
            self.searched += 1;
            let cost = self.bound();
            if cost < self.best {
                self.best = cost;
                self.best_map = self.map.iter().map(|h| h.expect("complete map")).collect();
            }
            return;
        }
        for h in 0..n {
            if self.used[h] {
                continue;
            }
            self.map[depth] = Some(h);
            self.used[h] = true;
            if self.bound() >= self.best {
                self.pruned += self.factorials[n - depth - 1];
            } else {
                self.descend(depth + 1);
            }
            self.used[h] = false;
            self.map[depth] = None;
        }
    }
}

/// Exact `min_g WL_g(guest, host)` over all bijections `g`. Refuses when
/// `n!` exceeds `budget`.
pub fn brute_force_min_wirelength(guest: &Graph, host: &Graph, budget: u128) -> Result<OracleResult> {
    let n = guest.order();
    if host.order() != n {
        return Err(Error::NotABijection(format!("guest has {n} vertices, host has {}", host.order())));
    }
    let required = factorial(n);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let dist = host.distance_matrix()?;
    let mut search = Search {
        guest,
        dist: &dist,
        map: vec![None; n],
        used: vec![false; n],
        best: usize::MAX,
        best_map: Vec::new(),
        searched: 0,
        pruned: 0,
        factorials: (0..=n).map(factorial).collect(),
    };
    search.descend(0);
    Ok(OracleResult {
        minimum_wirelength: search.best,
        witness_map: search.best_map,
        searched: search.searched,
        pruned: search.pruned,
    })
}

/// Whether the embedding's wirelength equals the global minimum.
pub fn certify_optimal(embedding: &Embedding, budget: u128) -> Result<bool> {
    let best = brute_force_min_wirelength(embedding.guest(), embedding.host(), budget)?;
    Ok(embedding.wirelength_by_distance() == best.minimum_wirelength)
}
