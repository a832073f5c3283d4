//! Maximum subgraph / minimum cut profiles: exhaustive solvers, the closed
//! forms known for hypercubes, folded hypercubes and circulants, and a
//! certifier that decides whether a given vertex set is optimal.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{Family, Graph};

/// Default subset budget: C(32, 6), enough for every segment size the
/// embedding checks need exhaustively.
pub const DEFAULT_SUBSET_BUDGET: u128 = 906_192;

/// Per-size maximum induced edges `I(a)` and minimum boundary `theta(a)`,
/// with the lexicographically least set attaining each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoperimetricProfile {
    pub family: String,
    pub order: usize,
    pub size: usize,
    pub max_induced: usize,
    pub min_boundary: usize,
    pub witness_induced: Vec<usize>,
    pub witness_boundary: Vec<usize>,
}

fn check_set(g: &Graph, set: &[usize]) -> Result<Vec<bool>> {
    let mut member = vec![false; g.order()];
    for &v in set {
        g.check_vertex(v)?;
        if std::mem::replace(&mut member[v], true) {
            return Err(invalid(format!("vertex {v} listed twice")));
        }
    }
    Ok(member)
}

/// Number of edges with both endpoints in `set`.
pub fn induced_edge_count(g: &Graph, set: &[usize]) -> Result<usize> {
    let member = check_set(g, set)?;
    Ok(g.edges().iter().filter(|&&(u, v)| member[u] && member[v]).count())
}

/// Number of edges with exactly one endpoint in `set`.
pub fn boundary_edge_count(g: &Graph, set: &[usize]) -> Result<usize> {
    let member = check_set(g, set)?;
    Ok(g.edges().iter().filter(|&&(u, v)| member[u] != member[v]).count())
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&b| mask >> b & 1 == 1).collect()
}

/// `true` if `a` precedes `b` lexicographically as sorted vertex lists.
/// Both masks must have the same cardinality.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & diff & diff.wrapping_neg() != 0
}

/// Exhaustive profile at size `a` over all `C(n, a)` subsets, enumerated in
/// colex order. Refuses when `C(n, a)` exceeds `budget`.
pub fn exact_profile(g: &Graph, a: usize, budget: u128) -> Result<IsoperimetricProfile> {
    let n = g.order();
    if a > n {
        return Err(invalid(format!("size {a} exceeds graph order {n}")));
    }
    let required = binomial(n, a);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let adjacency = g
        .adjacency_masks()
        .ok_or_else(|| invalid(format!("exhaustive search supports at most 64 vertices, got {n}")))?;
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();

    let limit: u128 = 1 << n;
    let mut current: u128 = (1 << a) - 1;
    let mut best_induced: Option<(usize, u64)> = None;
    let mut best_boundary: Option<(usize, u64)> = None;
    while current < limit {
        let mask = current as u64;
        let mut twice_induced = 0usize;
        let mut degree_sum = 0usize;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice_induced += (adjacency[v] & mask).count_ones() as usize;
            degree_sum += degree[v];
        }
        let induced = twice_induced / 2;
        let boundary = degree_sum - twice_induced;
        match best_induced {
            Some((i, m)) if induced < i || (induced == i && !lex_less(mask, m)) => {}
            _ => best_induced = Some((induced, mask)),
        }
        match best_boundary {
            Some((t, m)) if boundary > t || (boundary == t && !lex_less(mask, m)) => {}
            _ => best_boundary = Some((boundary, mask)),
        }
        if current == 0 {
            break;
        }
        let low = current & current.wrapping_neg();
        let ripple = current + low;
        current = (((ripple ^ current) >> 2) / low) | ripple;
    }
    let (max_induced, wi) = best_induced.expect("at least one subset");
    let (min_boundary, wb) = best_boundary.expect("at least one subset");
    Ok(IsoperimetricProfile {
        family: g.family().to_string(),
        order: n,
        size: a,
        max_induced,
        min_boundary,
        witness_induced: mask_to_vec(wi),
        witness_boundary: mask_to_vec(wb),
    })
}

/// Profile of the initial segment `{0, .., a-1}` under the graph's labeling.
/// Optimal for hypercubes, folded hypercubes (sizes up to half) and
/// circulants G(n; ±{1..j}); use [`OptimumCertifier`] to confirm.
pub fn lex_segment_profile(g: &Graph, a: usize) -> Result<IsoperimetricProfile> {
    if a > g.order() {
        return Err(invalid(format!("size {a} exceeds graph order {}", g.order())));
    }
    let segment: Vec<usize> = (0..a).collect();
    Ok(IsoperimetricProfile {
        family: g.family().to_string(),
        order: g.order(),
        size: a,
        max_induced: induced_edge_count(g, &segment)?,
        min_boundary: boundary_edge_count(g, &segment)?,
        witness_induced: segment.clone(),
        witness_boundary: segment,
    })
}

/// Closed form for the maximum subgraph of G(n; ±{1..j}) on `l` vertices,
/// attained by `l` successive vertices.
pub fn circulant_xi(n: usize, j: usize, l: usize) -> Result<usize> {
    if n < 3 || j == 0 || j >= n / 2 || l == 0 || l > n {
        return Err(invalid(format!(
            "circulant_xi needs n >= 3, 1 <= j < floor(n/2), 1 <= l <= n; got n={n}, j={j}, l={l}"
        )));
    }
    Ok(if l <= j + 1 {
        l * (l - 1) / 2
    } else if l <= n - j {
        l * j - j * (j + 1) / 2
    } else {
        let (n, j, l) = (n as i64, j as i64, l as i64);
        let twice = (n - l).pow(2) + (4 * j + 1) * l - (2 * j + 1) * n;
        debug_assert!(twice >= 0 && twice % 2 == 0);
        (twice / 2) as usize
    })
}

/// Minimum boundary of an r-regular graph from its maximum subgraph value:
/// `r * a - 2 * I`.
pub fn theta_from_regularity(regularity: usize, a: usize, max_induced: usize) -> Result<usize> {
    (regularity * a).checked_sub(2 * max_induced).ok_or_else(|| {
        invalid(format!("{max_induced} induced edges impossible for {a} vertices of degree {regularity}"))
    })
}

/// Edges induced by the first `a` labels of a hypercube: the popcount sum.
pub fn hypercube_lex_induced(a: usize) -> usize {
    (0..a).map(|x| x.count_ones() as usize).sum()
}

/// Closed-form results usable as optimality certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedForm {
    /// Lex segments are optimal in Q^s.
    HypercubeLex,
    /// Lex segments of at most half the vertices are optimal in FQ^s;
    /// larger sizes follow by complement symmetry of the boundary.
    FoldedHypercubeLex,
    /// Successive vertices are optimal in G(n; ±{1..j}), value `xi`.
    CirculantXi,
}

impl ClosedForm {
    fn name(self) -> &'static str {
        match self {
            ClosedForm::HypercubeLex => "hypercube-lex",
            ClosedForm::FoldedHypercubeLex => "folded-hypercube-lex",
            ClosedForm::CirculantXi => "circulant-xi",
        }
    }

    /// Maximum subgraph value at size `a`, if this form covers the graph.
    pub fn for_graph(g: &Graph) -> Option<ClosedForm> {
        match g.family() {
            Family::Hypercube { .. } => Some(ClosedForm::HypercubeLex),
            Family::FoldedHypercube { dim } if *dim >= 2 => Some(ClosedForm::FoldedHypercubeLex),
            Family::Circulant { order, jumps }
                if !jumps.is_empty()
                    && jumps.iter().copied().eq(1..=jumps.len())
                    && jumps.len() < order / 2 =>
            {
                Some(ClosedForm::CirculantXi)
            }
            _ => None,
        }
    }

    pub fn max_induced(self, g: &Graph, a: usize) -> Result<usize> {
        let n = g.order();
        if a > n {
            return Err(invalid(format!("size {a} exceeds graph order {n}")));
        }
        match (self, g.family()) {
            (ClosedForm::HypercubeLex, Family::Hypercube { .. }) => Ok(hypercube_lex_induced(a)),
            (ClosedForm::FoldedHypercubeLex, Family::FoldedHypercube { dim }) => {
                if 2 * a <= n {
                    Ok(hypercube_lex_induced(a))
                } else {
                    let degree = dim + 1;
                    let rest = n - a;
                    let theta = theta_from_regularity(degree, rest, hypercube_lex_induced(rest))?;
                    Ok((degree * a - theta) / 2)
                }
            }
            (ClosedForm::CirculantXi, Family::Circulant { order, jumps }) => {
                if a == 0 {
                    Ok(0)
                } else {
                    circulant_xi(*order, jumps.len(), a)
                }
            }
            _ => Err(invalid(format!("closed form {} does not apply to {}", self.name(), g.family()))),
        }
    }
}

/// How an optimum value was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Certificate {
    Exhaustive,
    Formula(ClosedForm),
    Uncertified,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Exhaustive => write!(f, "exhaustive"),
            Certificate::Formula(form) => write!(f, "formula:{}", form.name()),
            Certificate::Uncertified => write!(f, "uncertified"),
        }
    }
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Result of checking one vertex set for optimality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetOptimality {
    pub size: usize,
    pub induced: usize,
    /// `I(size)`, when it could be established.
    pub optimum: Option<usize>,
    pub certificate: Certificate,
}

impl SetOptimality {
    pub fn is_optimal(&self) -> bool {
        self.optimum == Some(self.induced)
    }
}

/// Establishes `I(a)` for one graph, exhaustively within a subset budget and
/// by closed form beyond it. Values are cached per size.
#[derive(Debug)]
pub struct OptimumCertifier<'g> {
    graph: &'g Graph,
    budget: u128,
    cache: BTreeMap<usize, (Option<usize>, Certificate)>,
}

impl<'g> OptimumCertifier<'g> {
    pub fn new(graph: &'g Graph, budget: u128) -> Self {
        OptimumCertifier { graph, budget, cache: BTreeMap::new() }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// `I(a)` with the certificate that established it.
    pub fn optimum(&mut self, a: usize) -> (Option<usize>, Certificate) {
        if let Some(&hit) = self.cache.get(&a) {
            return hit;
        }
        let found = match exact_profile(self.graph, a, self.budget) {
            Ok(profile) => (Some(profile.max_induced), Certificate::Exhaustive),
            Err(_) => ClosedForm::for_graph(self.graph)
                .and_then(|form| {
                    form.max_induced(self.graph, a).ok().map(|v| (Some(v), Certificate::Formula(form)))
                })
                .unwrap_or((None, Certificate::Uncertified)),
        };
        self.cache.insert(a, found);
        found
    }

    pub fn check_set(&mut self, set: &[usize]) -> Result<SetOptimality> {
        let induced = induced_edge_count(self.graph, set)?;
        let (optimum, certificate) = self.optimum(set.len());
        Ok(SetOptimality { size: set.len(), induced, optimum, certificate })
    }
}

/// One row of the profile CSV export.
pub fn profile_csv(rows: &[(IsoperimetricProfile, Certificate)]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["family", "n", "a", "I", "theta", "witness", "certificate"])
        .unwrap();
    for (p, cert) in rows {
        let witness = p.witness_induced.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        writer
            .write_record([
                p.family.clone(),
                p.order.to_string(),
                p.size.to_string(),
                p.max_induced.to_string(),
                p.min_boundary.to_string(),
                witness,
                cert.to_string(),
            ])
            .unwrap();
    }
    String::from_utf8(writer.into_inner().unwrap()).unwrap()
}

/// Profile for every size `0..=n`: exhaustive where the budget allows, the
/// lex segment (tagged with its closed-form certificate, or uncertified)
/// elsewhere.
pub fn full_profile(g: &Graph, budget: u128) -> Result<Vec<(IsoperimetricProfile, Certificate)>> {
    let mut certifier = OptimumCertifier::new(g, budget);
    (0..=g.order())
        .map(|a| match exact_profile(g, a, budget) {
            Ok(p) => Ok((p, Certificate::Exhaustive)),
            Err(Error::BudgetExceeded { .. }) | Err(Error::InvalidParameters(_)) => {
                let segment = lex_segment_profile(g, a)?;
                let (optimum, cert) = certifier.optimum(a);
                let cert = if optimum == Some(segment.max_induced) { cert } else { Certificate::Uncertified };
                Ok((segment, cert))
            }
            Err(e) => Err(e),
        })
        .collect()
}
