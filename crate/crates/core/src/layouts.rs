//! The two concrete embeddings and their cut partitions:
//!
//! - folded hypercube FQ^s into the cycle-of-ladders COL(4, 2^(s-3) - 1),
//!   guest vertices laid out along the Gray-code cycle;
//! - circulant G(n; ±{1..j}) into the star of cycle C_k*(m) with
//!   `n = m(k+1)`, laid out by identity on the canonical labels.
//!
//! Each comes with a closed-form wirelength evaluator.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::embedding::{CutPartition, EdgeCut, Embedding, MclVerdict};
use crate::error::{invalid, Result};
use crate::graph::{
    build_circulant, build_cycle_of_ladders, build_folded_hypercube, build_star_of_cycle, gray_code,
    ColCoordinates, StarOfCycleCoordinates,
};
use crate::isoperimetric::{
    circulant_xi, lex_segment_profile, theta_from_regularity, Certificate, OptimumCertifier,
};

/// An embedding together with the host cut partition used to evaluate it.
pub trait CutLayout {
    fn embedding(&self) -> &Embedding;
    fn partition(&self) -> &CutPartition;

    /// Congestion-lemma verdict for every cut, in partition order.
    fn verify(&self, subset_budget: u128) -> Result<Vec<MclVerdict>> {
        let embedding = self.embedding();
        let mut certifier = OptimumCertifier::new(embedding.guest(), subset_budget);
        embedding.verify_partition(self.partition(), &mut certifier)
    }

    fn wirelength_by_cuts(&self) -> Result<usize> {
        self.embedding().wirelength_by_cuts(self.partition())
    }
}

/// A closed-form wirelength value and how trustworthy its inputs were.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub value: usize,
    /// The formula needed a non-integral argument (or an odd total before
    /// halving) and was evaluated with floors.
    pub suspect: bool,
    /// Certificates backing every theta term, counted by kind.
    pub certificates: BTreeMap<String, usize>,
}

/// Folded hypercube FQ^s laid out on COL(4, 2^(s-3) - 1).
#[derive(Debug, Clone)]
pub struct AlgorithmAInstance {
    pub dim: usize,
    pub embedding: Embedding,
    /// Rung cuts `A_i`, bone cuts `B_j`, then band cuts `S_i^j`.
    pub cuts: CutPartition,
}

impl CutLayout for AlgorithmAInstance {
    fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    fn partition(&self) -> &CutPartition {
        &self.cuts
    }
}

fn check_cube_dim(dim: usize) -> Result<()> {
    if !(3..=16).contains(&dim) {
        return Err(invalid(format!("folded hypercube layout needs 3 <= s <= 16, got s={dim}")));
    }
    Ok(())
}

/// Lays FQ^s out on the Hamiltonian cycle of COL(4, 2^(s-3) - 1): the guest
/// vertex with Gray rank `i` goes to host label `i`.
pub fn algorithm_a(dim: usize) -> Result<AlgorithmAInstance> {
    check_cube_dim(dim)?;
    let length = (1 << (dim - 3)) - 1;
    let guest = build_folded_hypercube(dim)?;
    let host = build_cycle_of_ladders(4, length)?;
    let mut map = vec![0; guest.order()];
    for rank in 0..guest.order() {
        map[gray_code(rank, dim)?] = rank;
    }
    let embedding = Embedding::route_all(&guest, &host, &map)?;

    let at = |ladder, band, rung| ColCoordinates { ladder, band, rung }.to_label(length);
    let rungs = |ladder| (0..=length).map(move |t| (at(ladder, 0, t), at(ladder, 1, t)));
    let bone = |ladder: usize| (at(ladder, 1, 0), at((ladder + 1) % 4, 0, 0));

    let mut cuts = Vec::new();
    for i in 0..2 {
        let edges: Vec<_> = rungs(i).chain(rungs(i + 2)).collect();
        cuts.push(EdgeCut::new(&host, format!("A_{}", i + 1), &edges)?);
    }
    for j in 0..2 {
        cuts.push(EdgeCut::new(&host, format!("B_{}", j + 1), &[bone(j), bone(j + 2)])?);
    }
    for ladder in 0..4 {
        for j in 1..=length {
            let (lower, upper) = (length - j, length - j + 1);
            let edges = [(at(ladder, 0, lower), at(ladder, 0, upper)), (at(ladder, 1, lower), at(ladder, 1, upper))];
            cuts.push(EdgeCut::new(&host, format!("S_{}^{}", ladder + 1, j), &edges)?);
        }
    }
    let cuts = CutPartition::new(&host, cuts, 1)?;
    Ok(AlgorithmAInstance { dim, embedding, cuts })
}

fn tally(certificates: &mut BTreeMap<String, usize>, certificate: Certificate) {
    *certificates.entry(certificate.to_string()).or_default() += 1;
}

/// `2^(s+2) + 4 * sum_{j=1}^{2^(s-3)-1} theta(2j)` over FQ^s, with each
/// theta taken from the lex segment of size `2j` and that segment checked
/// for optimality within `subset_budget`.
pub fn theorem_a_wirelength(dim: usize, subset_budget: u128) -> Result<FormulaValue> {
    check_cube_dim(dim)?;
    let guest = build_folded_hypercube(dim)?;
    let mut certifier = OptimumCertifier::new(&guest, subset_budget);
    let mut certificates = BTreeMap::new();
    let mut sum = 0;
    for j in 1..(1usize << (dim - 3)) {
        let segment = lex_segment_profile(&guest, 2 * j)?;
        let (optimum, certificate) = certifier.optimum(2 * j);
        let certificate = if optimum == Some(segment.max_induced) { certificate } else { Certificate::Uncertified };
        tally(&mut certificates, certificate);
        sum += segment.min_boundary;
    }
    Ok(FormulaValue { value: (1 << (dim + 2)) + 4 * sum, suspect: false, certificates })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Parameters of a circulant-into-star-of-cycle layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StarParams {
    pub n: usize,
    pub j: usize,
    pub k: usize,
    pub m: usize,
}

impl StarParams {
    pub fn parity(&self) -> Parity {
        if self.m.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn check_common(&self, min_cycle: usize) -> Result<()> {
        let StarParams { n, j, k, m } = *self;
        if m < min_cycle || k < min_cycle {
            return Err(invalid(format!("need k, m >= {min_cycle}, got k={k}, m={m}")));
        }
        if n != m * (k + 1) {
            return Err(invalid(format!("n must equal m(k+1) = {}, got n={n}", m * (k + 1))));
        }
        if j == 0 || j >= n / 2 {
            return Err(invalid(format!("need 1 <= j < floor(n/2) = {}, got j={j}", n / 2)));
        }
        Ok(())
    }

    fn check_layout(&self) -> Result<()> {
        self.check_common(3)?;
        if self.parity() == Parity::Even && self.k % 2 == 1 {
            return Err(invalid(format!("even case needs k even, got k={}", self.k)));
        }
        Ok(())
    }

    /// `theta(a)` of the 2j-regular guest via the closed form `xi`.
    fn theta(&self, a: usize) -> Result<usize> {
        let xi = if a == 0 { 0 } else { circulant_xi(self.n, self.j, a)? };
        theta_from_regularity(2 * self.j, a, xi)
    }
}

/// Circulant G(n; ±{1..j}) laid out on C_k*(m) by identity.
#[derive(Debug, Clone)]
pub struct AlgorithmBInstance {
    pub params: StarParams,
    pub parity: Parity,
    pub embedding: Embedding,
    /// Multiplicity 1 for even `m`, 2 for odd `m`.
    pub cuts: CutPartition,
}

impl CutLayout for AlgorithmBInstance {
    fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    fn partition(&self) -> &CutPartition {
        &self.cuts
    }
}

/// Pairs of cycle edges `(i, i+1)` and `(i+h, i+h+1)` (indices mod `len`)
/// for each `i` in `starts`.
fn opposite_pairs(
    len: usize,
    offset: usize,
    starts: impl Iterator<Item = usize>,
) -> impl Iterator<Item = (usize, [(usize, usize); 2])> {
    starts.map(move |i| {
        let edge = |a: usize| (a % len, (a + 1) % len);
        (i, [edge(i), edge(i + offset)])
    })
}

/// Builds the circulant-into-star-of-cycle layout and its cut family.
///
/// Even `m` (and even `k`): the central cycle splits into `m/2` pairs of
/// opposite edges, every attachment edge is a cut on its own, and each outer
/// cycle splits into `k/2` pairs of opposite edges; every edge is covered
/// once. Odd `m`: central cuts pair edge `i` with edge `i + (m-1)/2`, odd
/// outer cycles likewise with `(k-1)/2`, and the remaining cuts are listed
/// twice, so every edge is covered exactly twice.
pub fn algorithm_b(params: StarParams) -> Result<AlgorithmBInstance> {
    params.check_layout()?;
    let StarParams { n, j, k, m } = params;
    let guest = build_circulant(n, &(1..=j).collect::<Vec<_>>())?;
    let host = build_star_of_cycle(k, m)?;
    let identity: Vec<usize> = (0..n).collect();
    let embedding = Embedding::route_all(&guest, &host, &identity)?;

    let hub = |i: usize| StarOfCycleCoordinates::central(i).to_label(k);
    let rim = |i: usize, p: usize| StarOfCycleCoordinates::outer(i, p).to_label(k);
    let parity = params.parity();
    let copies = if parity == Parity::Even { 1 } else { 2 };
    let mut cuts = Vec::new();

    let central = match parity {
        Parity::Even => opposite_pairs(m, m / 2, 0..m / 2).collect::<Vec<_>>(),
        Parity::Odd => opposite_pairs(m, (m - 1) / 2, 0..m).collect(),
    };
    for (i, pair) in central {
        let edges = pair.map(|(a, b)| (hub(a), hub(b)));
        cuts.push(EdgeCut::new(&host, format!("C_{i}"), &edges)?);
    }
    for i in 0..m {
        for _ in 0..copies {
            cuts.push(EdgeCut::new(&host, format!("E_{i}"), &[(hub(i), rim(i, 0))])?);
        }
    }
    for i in 0..m {
        let (ring, repeat) = if k % 2 == 0 {
            (opposite_pairs(k, k / 2, 0..k / 2).collect::<Vec<_>>(), copies)
        } else {
            (opposite_pairs(k, (k - 1) / 2, 0..k).collect(), 1)
        };
        for (p, pair) in ring {
            let edges = pair.map(|(a, b)| (rim(i, a), rim(i, b)));
            for _ in 0..repeat {
                cuts.push(EdgeCut::new(&host, format!("R_{i}^{p}"), &edges)?);
            }
        }
    }
    let cuts = CutPartition::new(&host, cuts, copies)?;
    Ok(AlgorithmBInstance { params, parity, embedding, cuts })
}

/// Reference closed form for the circulant-into-star-of-cycle
/// wirelength, evaluated with theta from `xi`:
///
/// - `m` even: `(k/2) * (theta(m(k+1)/2) + theta(k) + (m/2) theta(k/2))`
/// - `m` odd: `(1/2) * ((m-1) theta(m(k+1)/2) + (m-1) theta(k) + (k/2) theta(k/2))`
///
/// Non-integral arguments are floored and flag the value as suspect.
pub fn theorem_b_wirelength(params: StarParams) -> Result<FormulaValue> {
    params.check_common(2)?;
    let StarParams { k, m, .. } = params;
    let half_order = m * (k + 1) / 2;
    let mut suspect = k % 2 == 1;
    let value = match params.parity() {
        Parity::Even => (k / 2) * (params.theta(half_order)? + params.theta(k)? + (m / 2) * params.theta(k / 2)?),
        Parity::Odd => {
            suspect |= (m * (k + 1)) % 2 == 1;
            let total = (m - 1) * params.theta(half_order)? + (m - 1) * params.theta(k)? + (k / 2) * params.theta(k / 2)?;
            suspect |= total % 2 == 1;
            total / 2
        }
    };
    let mut certificates = BTreeMap::new();
    certificates.insert(Certificate::Formula(crate::isoperimetric::ClosedForm::CirculantXi).to_string(), 3);
    Ok(FormulaValue { value, suspect, certificates })
}

/// Wirelength implied by the cut family [`algorithm_b`] builds, as a sum
/// of optimal boundaries:
///
/// - `m` even: `(m/2) theta(n/2) + m theta(k) + m (k/2) theta(k/2)`
/// - `m` odd: `(m/2) theta(h(k+1)) + m theta(k) + outer`, `h = (m-1)/2`,
///   where `outer` is `m (k/2) theta(k/2)` for even `k`. For odd `k` each
///   outer cycle contributes `(k-h') theta(h') + h' theta(k-h')` with
///   `h' = (k-1)/2`, halved: the side of a rim cut is whichever arc misses
///   the attachment vertex.
pub fn star_partition_wirelength(params: StarParams) -> Result<usize> {
    params.check_layout()?;
    let StarParams { n, k, m, .. } = params;
    let outer = if k % 2 == 0 {
        m * (k / 2) * params.theta(k / 2)?
    } else {
        let h = (k - 1) / 2;
        m * ((k - h) * params.theta(h)? + h * params.theta(k - h)?) / 2
    };
    Ok(match params.parity() {
        Parity::Even => (m / 2) * params.theta(n / 2)? + m * params.theta(k)? + outer,
        Parity::Odd => m * params.theta((m - 1) / 2 * (k + 1))? / 2 + m * params.theta(k)? + outer,
    })
}
