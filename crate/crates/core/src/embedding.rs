//! Embeddings of a guest graph into a host graph of the same order: vertex
//! maps, routed guest edges, per-edge congestion, the two wirelength
//! computations, edge cuts and the congestion-lemma checker.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::isoperimetric::{OptimumCertifier, SetOptimality};

/// A bijective vertex map plus one host path per guest edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    guest: Graph,
    host: Graph,
    vertex_map: Vec<usize>,
    /// Indexed by guest edge id; each route starts at the image of the
    /// smaller guest endpoint.
    routes: Vec<Vec<usize>>,
    /// Host shortest-path distance between the images of each guest edge.
    distances: Vec<usize>,
    /// Indexed by host edge id.
    congestion: Vec<usize>,
}

fn check_bijection(guest: &Graph, host: &Graph, vertex_map: &[usize]) -> Result<()> {
    if guest.order() != host.order() {
        return Err(Error::NotABijection(format!(
            "guest has {} vertices, host has {}",
            guest.order(),
            host.order()
        )));
    }
    if vertex_map.len() != guest.order() {
        return Err(Error::NotABijection(format!(
            "map has {} entries for {} guest vertices",
            vertex_map.len(),
            guest.order()
        )));
    }
    let mut seen = vec![false; host.order()];
    for (x, &h) in vertex_map.iter().enumerate() {
        host.check_vertex(h)?;
        if std::mem::replace(&mut seen[h], true) {
            return Err(Error::NotABijection(format!("host vertex {h} is the image of two guest vertices (second: {x})")));
        }
    }
    Ok(())
}

/// Lazily computed BFS distance rows, one per target vertex.
struct DistanceCache<'h> {
    host: &'h Graph,
    rows: Vec<Option<Vec<Option<usize>>>>,
}

impl<'h> DistanceCache<'h> {
    fn new(host: &'h Graph) -> Self {
        DistanceCache { host, rows: vec![None; host.order()] }
    }

    fn to(&mut self, target: usize) -> &[Option<usize>] {
        let host = self.host;
        self.rows[target].get_or_insert_with(|| host.distances_from(target))
    }
}

fn shortest_route(cache: &mut DistanceCache<'_>, source: usize, target: usize) -> Result<Vec<usize>> {
    let host = cache.host;
    let dist = cache.to(target);
    let mut remaining = dist[source].ok_or(Error::Disconnected(source, target))?;
    let mut path = vec![source];
    let mut at = source;
    while remaining > 0 {
        at = *host
            .neighbors(at)
            .iter()
            .find(|&&w| dist[w] == Some(remaining - 1))
            .expect("a BFS layer below every reachable vertex");
        path.push(at);
        remaining -= 1;
    }
    Ok(path)
}

impl Embedding {
    /// Routes every guest edge along a breadth-first shortest path in the
    /// host, always stepping to the smallest-labeled neighbor that stays on
    /// a shortest path.
    pub fn route_all(guest: &Graph, host: &Graph, vertex_map: &[usize]) -> Result<Embedding> {
        check_bijection(guest, host, vertex_map)?;
        let mut cache = DistanceCache::new(host);
        let mut routes = Vec::with_capacity(guest.size());
        for &(x, y) in guest.edges() {
            routes.push(shortest_route(&mut cache, vertex_map[x], vertex_map[y])?);
        }
        Self::assemble(guest, host, vertex_map, routes, &mut cache)
    }

    /// Builds an embedding from explicit routes. Each route must be a simple
    /// host path from the image of the smaller guest endpoint to the image
    /// of the larger one.
    pub fn with_routes(
        guest: &Graph,
        host: &Graph,
        vertex_map: &[usize],
        routes: Vec<Vec<usize>>,
    ) -> Result<Embedding> {
        check_bijection(guest, host, vertex_map)?;
        if routes.len() != guest.size() {
            return Err(Error::InvalidParameters(format!(
                "{} routes for {} guest edges",
                routes.len(),
                guest.size()
            )));
        }
        for (route, &(x, y)) in routes.iter().zip(guest.edges()) {
            let (s, t) = (vertex_map[x], vertex_map[y]);
            if route.first() != Some(&s) || route.last() != Some(&t) {
                return Err(Error::InvalidParameters(format!(
                    "route for guest edge ({x}, {y}) must run from {s} to {t}"
                )));
            }
            let distinct: BTreeSet<usize> = route.iter().copied().collect();
            if distinct.len() != route.len() {
                return Err(Error::InvalidParameters(format!("route for ({x}, {y}) revisits a vertex")));
            }
            if let Some(w) = route.windows(2).find(|w| !host.has_edge(w[0], w[1])) {
                return Err(Error::NotAnEdge(w[0], w[1]));
            }
        }
        let mut cache = DistanceCache::new(host);
        Self::assemble(guest, host, vertex_map, routes, &mut cache)
    }

    fn assemble(
        guest: &Graph,
        host: &Graph,
        vertex_map: &[usize],
        routes: Vec<Vec<usize>>,
        cache: &mut DistanceCache<'_>,
    ) -> Result<Embedding> {
        let mut congestion = vec![0; host.size()];
        for route in &routes {
            for w in route.windows(2) {
                congestion[host.edge_index(w[0], w[1]).expect("routes follow host edges")] += 1;
            }
        }
        let mut distances = Vec::with_capacity(guest.size());
        for &(x, y) in guest.edges() {
            let (s, t) = (vertex_map[x], vertex_map[y]);
            distances.push(cache.to(t)[s].ok_or(Error::Disconnected(s, t))?);
        }
        Ok(Embedding {
            guest: guest.clone(),
            host: host.clone(),
            vertex_map: vertex_map.to_vec(),
            routes,
            distances,
            congestion,
        })
    }

    pub fn guest(&self) -> &Graph {
        &self.guest
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// Host path of each guest edge, in guest edge order.
    pub fn routes(&self) -> &[Vec<usize>] {
        &self.routes
    }

    /// Congestion of every host edge, in host edge order.
    pub fn congestions(&self) -> &[usize] {
        &self.congestion
    }

    /// Number of guest-edge routes through host edge `{u, v}`.
    pub fn edge_congestion(&self, u: usize, v: usize) -> Result<usize> {
        let e = self.host.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
        Ok(self.congestion[e])
    }

    /// Sum over guest edges of the host distance between mapped endpoints.
    pub fn wirelength_by_distance(&self) -> usize {
        self.distances.iter().sum()
    }

    /// Sum of per-edge congestion over the whole host.
    pub fn wirelength_by_congestion(&self) -> usize {
        self.congestion.iter().sum()
    }

    /// Wirelength as the sum of cut congestions over a partition of the
    /// host edges, divided by the partition's multiplicity.
    pub fn wirelength_by_cuts(&self, partition: &CutPartition) -> Result<usize> {
        partition.validate(&self.host)?;
        let total: usize = partition.cuts.iter().map(|cut| self.cut_congestion(cut)).sum();
        Ok(total / partition.multiplicity)
    }

    /// Sum of congestion over the edges of `cut`.
    pub fn cut_congestion(&self, cut: &EdgeCut) -> usize {
        cut.edge_ids.iter().map(|&e| self.congestion[e]).sum()
    }

    /// Wire form: `{"map": [...], "routes": [[...], ...]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wire<'a> {
            map: &'a [usize],
            routes: &'a [Vec<usize>],
        }
        serde_json::to_string(&Wire { map: &self.vertex_map, routes: &self.routes }).expect("embedding serializes")
    }

    /// Checks the congestion-lemma hypotheses for one cut. `certifier`
    /// must be built over this embedding's guest graph.
    pub fn verify_mcl(&self, cut: &EdgeCut, certifier: &mut OptimumCertifier<'_>) -> Result<MclVerdict> {
        if certifier.graph() != &self.guest {
            return Err(Error::InvalidParameters("certifier was built for a different guest graph".into()));
        }
        cut.check_host(&self.host)?;
        let mut host_side = vec![false; self.host.order()];
        for &h in &cut.side_one {
            host_side[h] = true;
        }
        let on_side_one: Vec<bool> = self.vertex_map.iter().map(|&h| host_side[h]).collect();
        let mut is_cut_edge = vec![false; self.host.size()];
        for &e in &cut.edge_ids {
            is_cut_edge[e] = true;
        }

        let mut internal_violation = None;
        let mut crossing_violation = None;
        let mut crossing_edges = 0;
        for (route, &(x, y)) in self.routes.iter().zip(self.guest.edges()) {
            let used = route
                .windows(2)
                .filter(|w| is_cut_edge[self.host.edge_index(w[0], w[1]).expect("route edge")])
                .count();
            if on_side_one[x] == on_side_one[y] {
                if used != 0 && internal_violation.is_none() {
                    internal_violation = Some(RouteWitness { guest_edge: (x, y), cut_edges_used: used });
                }
            } else {
                crossing_edges += 1;
                if used != 1 && crossing_violation.is_none() {
                    crossing_violation = Some(RouteWitness { guest_edge: (x, y), cut_edges_used: used });
                }
            }
        }

        let preimage_one: Vec<usize> = (0..self.guest.order()).filter(|&x| on_side_one[x]).collect();
        let preimage_two: Vec<usize> = (0..self.guest.order()).filter(|&x| !on_side_one[x]).collect();
        let side_one = certifier.check_set(&preimage_one)?;
        let side_two = certifier.check_set(&preimage_two)?;

        let degree_sum: usize = preimage_one.iter().map(|&x| self.guest.degree(x)).sum();
        let lemma_congestion = degree_sum - 2 * side_one.induced;
        debug_assert_eq!(lemma_congestion, crossing_edges);
        let congestion = self.cut_congestion(cut);

        Ok(MclVerdict {
            cut: cut.name.clone(),
            cut_edges: cut.edges.len(),
            side_sizes: (preimage_one.len(), preimage_two.len()),
            condition_i: internal_violation.is_none(),
            condition_i_witness: internal_violation,
            condition_ii: crossing_violation.is_none(),
            condition_ii_witness: crossing_violation,
            condition_iii: side_one.is_optimal() && side_two.is_optimal(),
            side_one,
            side_two,
            congestion,
            lemma_congestion,
            congestion_matches_lemma: congestion == lemma_congestion,
        })
    }

    /// [`Embedding::verify_mcl`] for every cut of a partition, in order.
    pub fn verify_partition(
        &self,
        partition: &CutPartition,
        certifier: &mut OptimumCertifier<'_>,
    ) -> Result<Vec<MclVerdict>> {
        partition.validate(&self.host)?;
        partition.cuts.iter().map(|cut| self.verify_mcl(cut, certifier)).collect()
    }
}

/// A host edge set whose removal leaves exactly two components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub name: String,
    /// Normalized (`u < v`) and sorted.
    pub edges: Vec<(usize, usize)>,
    #[serde(skip)]
    edge_ids: Vec<usize>,
    /// The component that does not contain host vertex 0.
    pub side_one: Vec<usize>,
}

impl EdgeCut {
    pub fn new(host: &Graph, name: impl Into<String>, edges: &[(usize, usize)]) -> Result<EdgeCut> {
        let mut ids = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            ids.push(host.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?);
        }
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameters("edge cut lists an edge twice".into()));
        }
        let components = host.components_without(&ids);
        if components.len() != 2 {
            return Err(Error::NotAnEdgeCut { components: components.len() });
        }
        let side_one = components.into_iter().nth(1).expect("two components");
        Ok(EdgeCut {
            name: name.into(),
            edges: ids.iter().map(|&e| host.edges()[e]).collect(),
            edge_ids: ids,
            side_one,
        })
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    fn check_host(&self, host: &Graph) -> Result<()> {
        for (&e, &(u, v)) in self.edge_ids.iter().zip(&self.edges) {
            if host.edges().get(e) != Some(&(u, v)) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Ok(())
    }
}

/// A family of cuts covering every host edge exactly `multiplicity` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPartition {
    pub cuts: Vec<EdgeCut>,
    pub multiplicity: usize,
}

impl CutPartition {
    pub fn new(host: &Graph, cuts: Vec<EdgeCut>, multiplicity: usize) -> Result<CutPartition> {
        let partition = CutPartition { cuts, multiplicity };
        partition.validate(host)?;
        Ok(partition)
    }

    pub fn validate(&self, host: &Graph) -> Result<()> {
        if !(1..=2).contains(&self.multiplicity) {
            return Err(Error::InvalidPartition(format!("multiplicity {} is not 1 or 2", self.multiplicity)));
        }
        let mut cover = vec![0usize; host.size()];
        for cut in &self.cuts {
            cut.check_host(host)?;
            for &e in &cut.edge_ids {
                cover[e] += 1;
            }
        }
        if let Some((e, &count)) = cover.iter().enumerate().find(|(_, &c)| c != self.multiplicity) {
            let (u, v) = host.edges()[e];
            return Err(Error::InvalidPartition(format!(
                "host edge ({u}, {v}) covered {count} times, expected {}",
                self.multiplicity
            )));
        }
        Ok(())
    }
}

/// A guest edge whose route breaks condition (i) or (ii).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RouteWitness {
    pub guest_edge: (usize, usize),
    pub cut_edges_used: usize,
}

/// Outcome of checking one cut against the congestion lemma.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MclVerdict {
    pub cut: String,
    pub cut_edges: usize,
    pub side_sizes: (usize, usize),
    /// Routes of guest edges inside either side avoid the cut.
    pub condition_i: bool,
    pub condition_i_witness: Option<RouteWitness>,
    /// Routes of crossing guest edges use exactly one cut edge.
    pub condition_ii: bool,
    pub condition_ii_witness: Option<RouteWitness>,
    /// Both preimage sides are optimal sets.
    pub condition_iii: bool,
    pub side_one: SetOptimality,
    pub side_two: SetOptimality,
    /// Sum of congestion over the cut edges.
    pub congestion: usize,
    /// Degree sum over side one minus twice its induced edges.
    pub lemma_congestion: usize,
    pub congestion_matches_lemma: bool,
}

impl MclVerdict {
    pub fn holds(&self) -> bool {
        self.condition_i && self.condition_ii && self.condition_iii && self.congestion_matches_lemma
    }

    /// Name of the first failing check, if any.
    pub fn failure(&self) -> Option<&'static str> {
        if !self.condition_i {
            Some("condition (i)")
        } else if !self.condition_ii {
            Some("condition (ii)")
        } else if !self.condition_iii {
            Some("condition (iii)")
        } else if !self.congestion_matches_lemma {
            Some("congestion formula")
        } else {
            None
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&serde_json::to_value(self).expect("verdict serializes")).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::isoperimetric::{Certificate, DEFAULT_SUBSET_BUDGET};

    fn identity(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    fn antipodal_cuts(host: &Graph) -> CutPartition {
        let cuts = (0..4)
            .map(|i| EdgeCut::new(host, format!("X{i}"), &[(i, i + 1), (i + 4, (i + 5) % 8)]).unwrap())
            .collect();
        CutPartition::new(host, cuts, 1).unwrap()
    }

    #[test]
    fn identity_self_embedding() {
        let c4 = build_cycle(4).unwrap();
        let e = Embedding::route_all(&c4, &c4, &identity(4)).unwrap();
        assert!(e.routes().iter().all(|r| r.len() == 2));
        let g = build_folded_hypercube(3).unwrap();
        let e = Embedding::route_all(&g, &g, &identity(8)).unwrap();
        assert!(e.congestions().iter().all(|&c| c == 1));
        assert_eq!(e.wirelength_by_distance(), g.size());
    }

    #[test]
    fn triangle_into_path() {
        let k3 = build_complete(3).unwrap();
        let p3 = build_path(3).unwrap();
        let e = Embedding::route_all(&k3, &p3, &identity(3)).unwrap();
        let lengths: Vec<usize> = e.routes().iter().map(|r| r.len() - 1).collect();
        assert_eq!(lengths, vec![1, 2, 1]);
        assert_eq!(e.edge_congestion(1, 2).unwrap(), 2);
        assert_eq!(e.edge_congestion(0, 1).unwrap(), 2);
        assert_eq!(e.wirelength_by_distance(), 4);
        assert_eq!(e.wirelength_by_congestion(), 4);
        assert_eq!(e.edge_congestion(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn tie_breaking_prefers_small_labels() {
        let c4 = build_cycle(4).unwrap();
        let path = Graph::from_edges(4, [(0, 2)], Family::Generic).unwrap();
        let e = Embedding::route_all(&path, &c4, &identity(4)).unwrap();
        assert_eq!(e.routes()[0], vec![0, 1, 2]);
    }

    #[test]
    fn rejects_bad_maps() {
        let c4 = build_cycle(4).unwrap();
        assert!(matches!(Embedding::route_all(&c4, &c4, &[0, 1, 1, 3]), Err(Error::NotABijection(_))));
        assert!(matches!(Embedding::route_all(&c4, &c4, &[0, 1, 2]), Err(Error::NotABijection(_))));
        let k3 = build_complete(3).unwrap();
        assert!(matches!(Embedding::route_all(&k3, &c4, &[0, 1, 2]), Err(Error::NotABijection(_))));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)], Family::Generic).unwrap();
        assert_eq!(Embedding::route_all(&c4, &split, &identity(4)), Err(Error::Disconnected(0, 3)));
    }

    #[test]
    fn explicit_routes_are_validated() {
        let c4 = build_cycle(4).unwrap();
        let chord = Graph::from_edges(4, [(0, 1)], Family::Generic).unwrap();
        let long_way = Embedding::with_routes(&chord, &c4, &identity(4), vec![vec![0, 3, 2, 1]]).unwrap();
        assert_eq!(long_way.wirelength_by_distance(), 1);
        assert_eq!(long_way.wirelength_by_congestion(), 3);
        assert!(Embedding::with_routes(&chord, &c4, &identity(4), vec![vec![0, 2, 1]]).is_err());
        assert!(Embedding::with_routes(&chord, &c4, &identity(4), vec![vec![0, 3]]).is_err());
        assert!(Embedding::with_routes(&chord, &c4, &identity(4), vec![vec![0, 1, 0, 1]]).is_err());
    }

    #[test]
    fn edge_cut_structure() {
        let c8 = build_cycle(8).unwrap();
        let cut = EdgeCut::new(&c8, "T", &[(3, 4), (7, 0)]).unwrap();
        assert_eq!(cut.side_one, vec![4, 5, 6, 7]);
        assert_eq!(cut.edges, vec![(0, 7), (3, 4)]);
        assert_eq!(EdgeCut::new(&c8, "T", &[(0, 1)]), Err(Error::NotAnEdgeCut { components: 1 }));
        assert_eq!(
            EdgeCut::new(&c8, "T", &[(0, 1), (2, 3), (4, 5)]),
            Err(Error::NotAnEdgeCut { components: 3 })
        );
        assert_eq!(EdgeCut::new(&c8, "T", &[(0, 2)]), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn partition_validation() {
        let c8 = build_cycle(8).unwrap();
        let p = antipodal_cuts(&c8);
        assert_eq!(p.cuts.len(), 4);
        let mut short = p.cuts.clone();
        short.pop();
        assert!(matches!(CutPartition::new(&c8, short, 1), Err(Error::InvalidPartition(_))));
        let doubled: Vec<EdgeCut> = p.cuts.iter().chain(&p.cuts).cloned().collect();
        assert!(CutPartition::new(&c8, doubled.clone(), 2).is_ok());
        assert!(CutPartition::new(&c8, doubled, 1).is_err());
        assert!(CutPartition::new(&c8, p.cuts.clone(), 3).is_err());
    }

    #[test]
    fn wirelength_by_cuts_on_cycle() {
        let c8 = build_cycle(8).unwrap();
        let e = Embedding::route_all(&c8, &c8, &identity(8)).unwrap();
        let p = antipodal_cuts(&c8);
        assert_eq!(e.wirelength_by_distance(), 8);
        assert_eq!(e.wirelength_by_cuts(&p).unwrap(), 8);
        let doubled: Vec<EdgeCut> = p.cuts.iter().chain(&p.cuts).cloned().collect();
        assert_eq!(e.wirelength_by_cuts(&CutPartition { cuts: doubled, multiplicity: 2 }).unwrap(), 8);
        let broken = CutPartition { cuts: p.cuts[..2].to_vec(), multiplicity: 1 };
        assert!(e.wirelength_by_cuts(&broken).is_err());
    }

    #[test]
    fn mcl_identity_cycle() {
        let c8 = build_cycle(8).unwrap();
        let e = Embedding::route_all(&c8, &c8, &identity(8)).unwrap();
        let mut cert = OptimumCertifier::new(&c8, DEFAULT_SUBSET_BUDGET);
        for cut in &antipodal_cuts(&c8).cuts {
            let v = e.verify_mcl(cut, &mut cert).unwrap();
            assert!(v.holds(), "{v:?}");
            assert_eq!(v.congestion, 2);
            assert_eq!(v.side_one.certificate, Certificate::Exhaustive);
        }
    }

    #[test]
    fn mcl_detects_each_condition() {
        let c8 = build_cycle(8).unwrap();
        let cut = EdgeCut::new(&c8, "T", &[(3, 4), (7, 0)]).unwrap();
        let mut cert = OptimumCertifier::new(&c8, DEFAULT_SUBSET_BUDGET);

        // swapping 1 and 5 scatters both preimage sides
        let swapped = Embedding::route_all(&c8, &c8, &[0, 5, 2, 3, 4, 1, 6, 7]).unwrap();
        let v = swapped.verify_mcl(&cut, &mut cert).unwrap();
        assert!(!v.condition_iii);
        assert_eq!(v.side_one.induced, 1);

        // route the guest edge (0, 1) the long way round the cycle
        let mut routes: Vec<Vec<usize>> = Embedding::route_all(&c8, &c8, &identity(8)).unwrap().routes().to_vec();
        routes[0] = vec![0, 7, 6, 5, 4, 3, 2, 1];
        let detour = Embedding::with_routes(&c8, &c8, &identity(8), routes).unwrap();
        let v = detour.verify_mcl(&cut, &mut cert).unwrap();
        assert!(!v.condition_i);
        assert_eq!(v.condition_i_witness.unwrap().guest_edge, (0, 1));
        assert!(!v.congestion_matches_lemma);
        assert_eq!(v.failure(), Some("condition (i)"));

        let other = build_cycle(8).unwrap();
        let mut wrong = OptimumCertifier::new(&other, 10);
        let k8 = build_complete(8).unwrap();
        let e = Embedding::route_all(&k8, &c8, &identity(8)).unwrap();
        assert!(e.verify_mcl(&cut, &mut wrong).is_err());
    }

    #[test]
    fn embedding_json() {
        let k3 = build_complete(3).unwrap();
        let p3 = build_path(3).unwrap();
        let e = Embedding::route_all(&k3, &p3, &[1, 0, 2]).unwrap();
        assert_eq!(e.to_json(), r#"{"map":[1,0,2],"routes":[[1,0],[1,2],[0,1,2]]}"#);
    }
}
