use std::collections::BTreeSet;

use super::coords::{ColCoordinates, StarOfCycleCoordinates};
use super::{Family, Graph};
use crate::error::{invalid, Result};

fn cycle_edges(labels: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = labels.len();
    (0..n).map(move |i| (labels[i], labels[(i + 1) % n]))
}

/// Path on `vertices` vertices, labeled in order.
pub fn build_path(vertices: usize) -> Result<Graph> {
    let edges = (1..vertices).map(|v| (v - 1, v));
    Graph::from_edges(vertices, edges, Family::Path { vertices })
}

pub fn build_cycle(vertices: usize) -> Result<Graph> {
    if vertices < 3 {
        return Err(invalid(format!("a cycle needs at least 3 vertices, got {vertices}")));
    }
    let labels: Vec<usize> = (0..vertices).collect();
    Graph::from_edges(vertices, cycle_edges(&labels), Family::Cycle { vertices })
}

pub fn build_complete(vertices: usize) -> Result<Graph> {
    let edges = (0..vertices).flat_map(|u| (u + 1..vertices).map(move |v| (u, v)));
    Graph::from_edges(vertices, edges, Family::Complete { vertices })
}

fn check_dimension(dim: usize) -> Result<()> {
    if dim > 20 {
        return Err(invalid(format!("dimension {dim} is too large (max 20)")));
    }
    Ok(())
}

/// The hypercube Q^dim; vertex labels are the bit strings read as integers.
pub fn build_hypercube(dim: usize) -> Result<Graph> {
    check_dimension(dim)?;
    let n = 1usize << dim;
    let edges = (0..n).flat_map(|u| {
        (0..dim)
            .map(move |b| (u, u ^ (1 << b)))
            .filter(|&(u, v)| u < v)
    });
    Graph::from_edges(n, edges, Family::Hypercube { dim })
}

/// The folded hypercube: Q^dim plus an edge from every vertex to its
/// bitwise complement. For `dim == 1` the complementary edge coincides with
/// the cube edge and the result is K2.
pub fn build_folded_hypercube(dim: usize) -> Result<Graph> {
    if dim == 0 {
        return Err(invalid("folded hypercube needs dimension >= 1"));
    }
    check_dimension(dim)?;
    let n = 1usize << dim;
    let mask = n - 1;
    let mut edges: BTreeSet<(usize, usize)> = build_hypercube(dim)?.edges().iter().copied().collect();
    for u in 0..n {
        let v = u ^ mask;
        edges.insert((u.min(v), u.max(v)));
    }
    Graph::from_edges(n, edges, Family::FoldedHypercube { dim })
}

/// The circulant G(n; ±S): `i ~ i ± s (mod n)` for every jump `s` in `jumps`.
pub fn build_circulant(order: usize, jumps: &[usize]) -> Result<Graph> {
    if order < 3 {
        return Err(invalid(format!("circulant order must be >= 3, got {order}")));
    }
    if jumps.is_empty() {
        return Err(invalid("circulant jump set is empty"));
    }
    let jumps: BTreeSet<usize> = jumps.iter().copied().collect();
    if let Some(bad) = jumps.iter().find(|&&s| s == 0 || s > order / 2) {
        return Err(invalid(format!(
            "jump {bad} outside 1..={} for circulant of order {order}",
            order / 2
        )));
    }
    let mut edges = BTreeSet::new();
    for i in 0..order {
        for &s in &jumps {
            let v = (i + s) % order;
            edges.insert((i.min(v), i.max(v)));
        }
    }
    let family = Family::Circulant { order, jumps: jumps.into_iter().collect() };
    Graph::from_edges(order, edges, family)
}

/// The ladder L(r) = P(r) x K2 with `r + 1` rungs. Vertex `(band, rung)` is
/// labeled `band * (r + 1) + rung`.
pub fn build_ladder(length: usize) -> Result<Graph> {
    let rungs = length + 1;
    let mut edges = Vec::with_capacity(3 * length + 1);
    for rung in 0..rungs {
        edges.push((rung, rungs + rung));
        if rung > 0 {
            edges.push((rung - 1, rung));
            edges.push((rungs + rung - 1, rungs + rung));
        }
    }
    Graph::from_edges(2 * rungs, edges, Family::Ladder { length })
}

/// The cycle-of-ladders COL(l, r), labeled by [`ColCoordinates`].
///
/// The bone cycle runs through the bottom rungs in ladder order, so the
/// labels `0, 1, .., 2l(r+1) - 1` trace a Hamiltonian cycle: up band 0,
/// across the top rung, down band 1, then over a bone edge to the next
/// ladder.
pub fn build_cycle_of_ladders(ladders: usize, length: usize) -> Result<Graph> {
    if ladders < 2 {
        return Err(invalid(format!("cycle-of-ladders needs at least 2 ladders, got {ladders}")));
    }
    let label = |ladder, band, rung| ColCoordinates { ladder, band, rung }.to_label(length);
    let mut edges = Vec::new();
    for ladder in 0..ladders {
        for rung in 0..=length {
            edges.push((label(ladder, 0, rung), label(ladder, 1, rung)));
            if rung > 0 {
                for band in 0..2 {
                    edges.push((label(ladder, band, rung - 1), label(ladder, band, rung)));
                }
            }
        }
        edges.push((label(ladder, 1, 0), label((ladder + 1) % ladders, 0, 0)));
    }
    let family = Family::CycleOfLadders { ladders, length };
    Graph::from_edges(2 * ladders * (length + 1), edges, family)
}

/// The star of cycle C_k*(m): a central m-cycle and m outer k-cycles, outer
/// cycle `i` attached to central vertex `i` through its position-0 vertex.
/// Labels follow [`StarOfCycleCoordinates`].
pub fn build_star_of_cycle(outer: usize, central: usize) -> Result<Graph> {
    if outer < 3 || central < 3 {
        return Err(invalid(format!(
            "star of cycle needs cycles of length >= 3, got k={outer}, m={central}"
        )));
    }
    let hub = |i| StarOfCycleCoordinates::central(i).to_label(outer);
    let rim = |i, p| StarOfCycleCoordinates::outer(i, p).to_label(outer);
    let centre: Vec<usize> = (0..central).map(hub).collect();
    let mut edges: Vec<(usize, usize)> = cycle_edges(&centre).collect();
    for i in 0..central {
        let ring: Vec<usize> = (0..outer).map(|p| rim(i, p)).collect();
        edges.extend(cycle_edges(&ring));
        edges.push((hub(i), rim(i, 0)));
    }
    let family = Family::StarOfCycle { outer, central };
    Graph::from_edges(central * (outer + 1), edges, family)
}

/// Reflected binary Gray code of `rank` as a `width`-bit integer.
pub fn gray_code(rank: usize, width: usize) -> Result<usize> {
    check_dimension(width)?;
    if rank >= 1 << width {
        return Err(invalid(format!("rank {rank} out of range for {width}-bit Gray code")));
    }
    Ok(rank ^ (rank >> 1))
}

/// Inverse of [`gray_code`].
pub fn gray_rank(code: usize, width: usize) -> Result<usize> {
    check_dimension(width)?;
    if code >= 1 << width {
        return Err(invalid(format!("code {code} out of range for {width}-bit Gray code")));
    }
    let mut rank = code;
    let mut shift = code >> 1;
    while shift != 0 {
        rank ^= shift;
        shift >>= 1;
    }
    Ok(rank)
}

/// Cartesian product: `(a1, b1) ~ (a2, b2)` iff the pair is equal in one
/// coordinate and adjacent in the other. Vertex `(a, b)` gets label
/// `a * |V(B)| + b`.
pub fn cartesian_product(left: &Graph, right: &Graph) -> Result<Graph> {
    if left.order() == 0 || right.order() == 0 {
        return Err(invalid("cartesian product of an empty graph"));
    }
    let width = right.order();
    let mut edges = Vec::new();
    for a in 0..left.order() {
        for &(u, v) in right.edges() {
            edges.push((a * width + u, a * width + v));
        }
    }
    for &(u, v) in left.edges() {
        for b in 0..width {
            edges.push((u * width + b, v * width + b));
        }
    }
    Graph::from_edges(left.order() * width, edges, Family::Product)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(g: &Graph) -> (usize, usize) {
        (g.order(), g.size())
    }

    fn handshake(g: &Graph) -> bool {
        (0..g.order()).map(|v| g.degree(v)).sum::<usize>() == 2 * g.size()
    }

    #[test]
    fn hypercube_counts() {
        assert_eq!(counts(&build_hypercube(0).unwrap()), (1, 0));
        assert_eq!(counts(&build_hypercube(1).unwrap()), (2, 1));
        let q3 = build_hypercube(3).unwrap();
        assert_eq!(counts(&q3), (8, 12));
        assert_eq!(q3.regularity(), Some(3));
    }

    #[test]
    fn folded_hypercube_counts() {
        let fq1 = build_folded_hypercube(1).unwrap();
        assert_eq!(fq1.edges(), &[(0, 1)]);
        let fq2 = build_folded_hypercube(2).unwrap();
        assert_eq!(fq2.edges(), build_complete(4).unwrap().edges());
        let fq3 = build_folded_hypercube(3).unwrap();
        assert_eq!(counts(&fq3), (8, 16));
        assert_eq!(fq3.regularity(), Some(4));
        for s in 2..=7 {
            assert_eq!(build_folded_hypercube(s).unwrap().regularity(), Some(s + 1));
        }
        assert!(build_folded_hypercube(0).is_err());
    }

    #[test]
    fn circulant_counts() {
        let g = build_circulant(8, &[1, 2]).unwrap();
        assert_eq!(counts(&g), (8, 16));
        assert_eq!(g.regularity(), Some(4));
        let k5 = build_circulant(5, &[1, 2]).unwrap();
        assert_eq!(k5.edges(), build_complete(5).unwrap().edges());
        let matching = build_circulant(6, &[3]).unwrap();
        assert_eq!(matching.edges(), &[(0, 3), (1, 4), (2, 5)]);
        assert!(build_circulant(8, &[5]).is_err());
        assert!(build_circulant(8, &[0]).is_err());
        assert!(build_circulant(8, &[]).is_err());
        assert!(build_circulant(2, &[1]).is_err());
    }

    #[test]
    fn ladder_counts() {
        assert_eq!(counts(&build_ladder(0).unwrap()), (2, 1));
        let c4 = build_ladder(1).unwrap();
        assert_eq!(counts(&c4), (4, 4));
        assert_eq!(c4.regularity(), Some(2));
        assert_eq!(counts(&build_ladder(3).unwrap()), (8, 10));
    }

    #[test]
    fn cycle_of_ladders_counts() {
        let c8 = build_cycle_of_ladders(4, 0).unwrap();
        assert_eq!(counts(&c8), (8, 8));
        assert_eq!(c8.regularity(), Some(2));
        assert!(c8.is_connected());
        assert_eq!(counts(&build_cycle_of_ladders(4, 3).unwrap()), (32, 44));
        // l(3r + 2) = 2 * 5
        assert_eq!(counts(&build_cycle_of_ladders(2, 1).unwrap()), (8, 10));
        for (l, r) in [(2, 0), (3, 2), (5, 4)] {
            let g = build_cycle_of_ladders(l, r).unwrap();
            assert_eq!(counts(&g), (2 * l * (r + 1), l * (3 * r + 2)));
            assert!(handshake(&g));
        }
        assert!(build_cycle_of_ladders(1, 3).is_err());
    }

    #[test]
    fn cycle_of_ladders_labels_trace_hamiltonian_cycle() {
        for (l, r) in [(2, 0), (4, 0), (4, 3), (3, 5)] {
            let g = build_cycle_of_ladders(l, r).unwrap();
            let n = g.order();
            for v in 0..n {
                assert!(g.has_edge(v, (v + 1) % n), "COL({l},{r}): {v} -> {}", (v + 1) % n);
            }
        }
    }

    #[test]
    fn star_of_cycle_counts() {
        assert_eq!(counts(&build_star_of_cycle(3, 4).unwrap()), (16, 20));
        assert_eq!(counts(&build_star_of_cycle(8, 8).unwrap()), (72, 80));
        assert_eq!(counts(&build_star_of_cycle(3, 3).unwrap()), (12, 15));
        let g = build_star_of_cycle(4, 5).unwrap();
        assert!(g.is_connected());
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(0, 5));
        assert!(g.has_edge(1, 4));
        assert!(build_star_of_cycle(2, 4).is_err());
        assert!(build_star_of_cycle(4, 2).is_err());
    }

    #[test]
    fn gray_code_examples() {
        assert_eq!(format!("{:03b}", gray_code(0, 3).unwrap()), "000");
        assert_eq!(format!("{:03b}", gray_code(2, 3).unwrap()), "011");
        assert_eq!(format!("{:03b}", gray_code(7, 3).unwrap()), "100");
        assert!(gray_code(8, 3).is_err());
        assert!(gray_rank(8, 3).is_err());
    }

    #[test]
    fn gray_code_is_a_cyclic_one_bit_walk() {
        for s in 1..=10 {
            let n = 1usize << s;
            let codes: Vec<usize> = (0..n).map(|i| gray_code(i, s).unwrap()).collect();
            let distinct: BTreeSet<usize> = codes.iter().copied().collect();
            assert_eq!(distinct.len(), n);
            for i in 0..n {
                assert_eq!((codes[i] ^ codes[(i + 1) % n]).count_ones(), 1);
                assert_eq!(gray_rank(codes[i], s).unwrap(), i);
            }
        }
    }

    #[test]
    fn product_examples() {
        let ladder = cartesian_product(&build_path(4).unwrap(), &build_path(2).unwrap()).unwrap();
        assert_eq!(counts(&ladder), (8, 10));
        let mut degrees: Vec<usize> = (0..8).map(|v| ladder.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 2, 3, 3, 3, 3]);
        // relabel (rung, band) -> band * 4 + rung and compare with L(3)
        let relabeled = Graph::from_edges(
            8,
            ladder.edges().iter().map(|&(u, v)| ((u % 2) * 4 + u / 2, (v % 2) * 4 + v / 2)),
            Family::Generic,
        )
        .unwrap();
        assert_eq!(relabeled.edges(), build_ladder(3).unwrap().edges());

        let k2 = build_path(2).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(c4.regularity(), Some(2));
        assert_eq!(c4.size(), 4);
        assert!(c4.is_connected());

        let dot = build_path(1).unwrap();
        assert_eq!(counts(&cartesian_product(&dot, &dot).unwrap()), (1, 0));
        assert!(cartesian_product(&build_path(0).unwrap(), &dot).is_err());
    }

    #[test]
    fn family_tag_rebuilds_graph() {
        for g in [
            build_folded_hypercube(4).unwrap(),
            build_circulant(10, &[1, 2]).unwrap(),
            build_cycle_of_ladders(4, 1).unwrap(),
            build_star_of_cycle(4, 4).unwrap(),
        ] {
            assert_eq!(g.family().build().unwrap().unwrap(), g);
        }
    }
}
