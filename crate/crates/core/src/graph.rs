//! Signed graphs, the color sets `M_n`, incidence colorings and their verification.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A simple undirected graph with 0-indexed vertices.
///
/// Edge ids are positions in the input edge list. Each vertex keeps an
/// adjacency list of `(neighbor, edge id)` pairs in edge-id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    /// The endpoint of `edge` that is not `v`.
    pub fn other_endpoint(&self, edge: usize, v: usize) -> usize {
        let (a, b) = self.edges[edge];
        debug_assert!(a == v || b == v);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Δ(G); zero for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a]
            .iter()
            .find(|&&(w, _)| w == b)
            .map(|&(_, e)| e)
    }

    /// Connected-component label of every vertex, labels numbered in order of
    /// their lowest vertex.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        let mut stack = Vec::new();
        for root in 0..self.vertex_count {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = count;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &(w, _) in &self.adjacency[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().0
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Cyclomatic number `m - n + c`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count
    }

    /// Splits the graph into its connected components. Each entry holds the
    /// component graph, the original vertex of every local vertex, and the
    /// original edge id of every local edge.
    pub fn components(&self) -> Vec<(Graph, Vec<usize>, Vec<usize>)> {
        let (count, label) = self.component_labels();
        let mut vertices = vec![Vec::new(); count];
        let mut local = vec![0; self.vertex_count];
        for v in 0..self.vertex_count {
            local[v] = vertices[label[v]].len();
            vertices[label[v]].push(v);
        }
        let mut edges = vec![Vec::new(); count];
        for (e, &(u, _)) in self.edges.iter().enumerate() {
            edges[label[u]].push(e);
        }
        vertices
            .into_iter()
            .zip(edges)
            .map(|(vs, es)| {
                let local_edges = es.iter().map(|&e| {
                    let (u, v) = self.edges[e];
                    (local[u], local[v])
                });
                let g = Graph::new(vs.len(), local_edges).expect("component of a simple graph");
                (g, vs, es)
            })
            .collect()
    }

    /// Whether every vertex has degree `k`; returns `k` if so.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adjacency.iter().all(|a| a.len() == d).then_some(d)
    }
}

/// An edge sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Per-edge signs, indexed like the owning graph's edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature(Vec<Sign>);

impl Signature {
    pub fn new(signs: Vec<Sign>) -> Self {
        Signature(signs)
    }

    pub fn all_positive(m: usize) -> Self {
        Signature(vec![Sign::Positive; m])
    }

    pub fn all_negative(m: usize) -> Self {
        Signature(vec![Sign::Negative; m])
    }

    /// Bit `j` of `bits` set means edge `j` is negative.
    pub fn from_bits(m: usize, bits: u128) -> Self {
        Signature(
            (0..m)
                .map(|j| {
                    if (bits >> j) & 1 == 1 {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, edge: usize) -> Sign {
        self.0[edge]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn negative_count(&self) -> usize {
        self.0.iter().filter(|s| s.is_negative()).count()
    }

    /// Edgewise product with another signature of the same length.
    pub fn product(&self, other: &Signature) -> Signature {
        Signature(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).collect())
    }
}

/// A graph together with a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    graph: Graph,
    signature: Signature,
}

impl SignedGraph {
    pub fn new(graph: Graph, signature: Signature) -> Result<Self> {
        if graph.edge_count() != signature.len() {
            return Err(Error::SignatureLength {
                expected: graph.edge_count(),
                got: signature.len(),
            });
        }
        Ok(SignedGraph { graph, signature })
    }

    /// All edges positive.
    pub fn positive(graph: Graph) -> Self {
        let signature = Signature::all_positive(graph.edge_count());
        SignedGraph { graph, signature }
    }

    /// Builds a signed graph from `(u, v, sign)` triples; edge ids follow input order.
    pub fn build(vertex_count: usize, signed_edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let graph = Graph::new(vertex_count, signed_edges.iter().map(|&(u, v, _)| (u, v)))?;
        let signature = Signature::new(signed_edges.iter().map(|&(_, _, s)| s).collect());
        SignedGraph::new(graph, signature)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn sign(&self, edge: usize) -> Sign {
        self.signature.get(edge)
    }

    /// σ(e) as `±1`.
    pub fn sigma(&self, edge: usize) -> i32 {
        self.signature.get(edge).value()
    }

    pub fn with_signature(&self, signature: Signature) -> Result<SignedGraph> {
        SignedGraph::new(self.graph.clone(), signature)
    }

    /// The spanning subgraph on `edges` (same vertex set), edges renumbered in the given order.
    pub fn edge_subgraph(&self, edges: &[usize]) -> SignedGraph {
        let graph = Graph::new(
            self.graph.vertex_count(),
            edges.iter().map(|&e| self.graph.endpoints(e)),
        )
        .expect("subgraph of a simple graph");
        let signature = Signature::new(edges.iter().map(|&e| self.sign(e)).collect());
        SignedGraph { graph, signature }
    }

    pub fn into_parts(self) -> (Graph, Signature) {
        (self.graph, self.signature)
    }
}

/// A pair `(vertex, edge)` with `vertex` an endpoint of `edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Incidence {
    pub vertex: usize,
    pub edge: usize,
}

/// The color set `M_n`: `{0, ±1, …, ±k}` for `n = 2k+1`, `{±1, …, ±k}` for `n = 2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorSet {
    n: usize,
}

pub fn color_set(n: usize) -> Result<ColorSet> {
    ColorSet::new(n)
}

impl ColorSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyColorSet);
        }
        Ok(ColorSet { n })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn has_zero(&self) -> bool {
        self.n % 2 == 1
    }

    /// Largest `k` such that `±k` are members.
    pub fn max_pair(&self) -> i32 {
        (self.n / 2) as i32
    }

    pub fn contains(&self, color: i32) -> bool {
        contains(self.n, color)
    }

    /// Members in the search order `0, +1, -1, +2, -2, …`.
    pub fn ordered(&self) -> Vec<i32> {
        (0..self.n).map(|i| color_at(self.n, i)).collect()
    }

    /// Members in ascending numeric order.
    pub fn members(&self) -> Vec<i32> {
        let mut v = self.ordered();
        v.sort_unstable();
        v
    }
}

pub(crate) fn contains(n: usize, color: i32) -> bool {
    if color == 0 {
        n % 2 == 1
    } else {
        color.unsigned_abs() as usize <= n / 2
    }
}

/// The `i`-th color of `M_n` in the order `0, +1, -1, +2, -2, …` (zero only when `n` is odd).
pub(crate) fn color_at(n: usize, i: usize) -> i32 {
    let j = if n % 2 == 1 { i } else { i + 1 };
    if j == 0 {
        0
    } else {
        let k = j.div_ceil(2) as i32;
        if j % 2 == 1 {
            k
        } else {
            -k
        }
    }
}

/// Position of `color` in the order used by [`color_at`].
pub(crate) fn color_index(n: usize, color: i32) -> usize {
    let j = if color == 0 {
        0
    } else if color > 0 {
        2 * color as usize - 1
    } else {
        2 * color.unsigned_abs() as usize
    };
    if n % 2 == 1 {
        j
    } else {
        j - 1
    }
}

/// A total assignment of colors to incidences together with the color-set size `n`.
///
/// Colors are stored per edge as `[color at first endpoint, color at second endpoint]`,
/// following the endpoint order of the graph's edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceColoring {
    n: usize,
    colors: Vec<[i32; 2]>,
}

impl IncidenceColoring {
    pub fn from_edge_colors(n: usize, colors: Vec<[i32; 2]>) -> Self {
        IncidenceColoring { n, colors }
    }

    /// The empty coloring of an edgeless graph (`n = 0`).
    pub fn empty() -> Self {
        IncidenceColoring {
            n: 0,
            colors: Vec::new(),
        }
    }

    /// Builds a coloring from explicit incidence records; every incidence of
    /// `graph` must appear exactly once.
    pub fn from_incidences<I>(graph: &Graph, n: usize, records: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Incidence, i32)>,
    {
        let mut partial = PartialColoring::new(graph.edge_count());
        for (inc, color) in records {
            if inc.edge >= graph.edge_count() {
                return Err(Error::DomainMismatch(format!("unknown edge {}", inc.edge)));
            }
            let (a, b) = graph.endpoints(inc.edge);
            if inc.vertex != a && inc.vertex != b {
                return Err(Error::DomainMismatch(format!(
                    "vertex {} is not an endpoint of edge {}",
                    inc.vertex, inc.edge
                )));
            }
            if partial.get(graph, inc.vertex, inc.edge).is_some() {
                return Err(Error::DomainMismatch(format!(
                    "incidence ({}, {}) colored twice",
                    inc.vertex, inc.edge
                )));
            }
            partial.set(graph, inc.vertex, inc.edge, color);
        }
        partial.into_coloring(n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_colors(&self, edge: usize) -> [i32; 2] {
        self.colors[edge]
    }

    pub fn get(&self, graph: &Graph, vertex: usize, edge: usize) -> i32 {
        let (a, _) = graph.endpoints(edge);
        self.colors[edge][usize::from(vertex != a)]
    }

    /// Every incidence with its color, ordered by edge id then endpoint order.
    pub fn incidences<'a>(&'a self, graph: &'a Graph) -> impl Iterator<Item = (Incidence, i32)> + 'a {
        self.colors.iter().enumerate().flat_map(move |(e, c)| {
            let (a, b) = graph.endpoints(e);
            [
                (Incidence { vertex: a, edge: e }, c[0]),
                (Incidence { vertex: b, edge: e }, c[1]),
            ]
        })
    }

    /// Distinct colors actually used.
    pub fn used_colors(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.colors.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Every incidence color negated.
    pub fn negated(&self) -> Self {
        IncidenceColoring {
            n: self.n,
            colors: self.colors.iter().map(|c| [-c[0], -c[1]]).collect(),
        }
    }

    /// Same assignment re-labelled with a different color-set size.
    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub(crate) fn colors_mut(&mut self) -> &mut [[i32; 2]] {
        &mut self.colors
    }
}

/// An incidence coloring under construction.
#[derive(Clone, Debug)]
pub struct PartialColoring {
    colors: Vec<[Option<i32>; 2]>,
}

impl PartialColoring {
    pub fn new(edge_count: usize) -> Self {
        PartialColoring {
            colors: vec![[None, None]; edge_count],
        }
    }

    pub fn set(&mut self, graph: &Graph, vertex: usize, edge: usize, color: i32) {
        let (a, b) = graph.endpoints(edge);
        debug_assert!(vertex == a || vertex == b);
        self.colors[edge][usize::from(vertex != a)] = Some(color);
    }

    pub fn get(&self, graph: &Graph, vertex: usize, edge: usize) -> Option<i32> {
        let (a, _) = graph.endpoints(edge);
        self.colors[edge][usize::from(vertex != a)]
    }

    pub fn apply<I: IntoIterator<Item = (Incidence, i32)>>(&mut self, graph: &Graph, records: I) {
        for (inc, c) in records {
            self.set(graph, inc.vertex, inc.edge, c);
        }
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(|c| c[0].is_some() && c[1].is_some())
    }

    pub fn into_coloring(self, n: usize) -> Result<IncidenceColoring> {
        let mut colors = Vec::with_capacity(self.colors.len());
        for (e, c) in self.colors.into_iter().enumerate() {
            match c {
                [Some(x), Some(y)] => colors.push([x, y]),
                _ => {
                    return Err(Error::DomainMismatch(format!(
                        "edge {e} has an uncolored incidence"
                    )))
                }
            }
        }
        Ok(IncidenceColoring { n, colors })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `f(u:uv) ≠ -σ(uv)·f(v:uv)`.
    EdgeConstraint { edge: usize },
    /// Two incidences at `vertex` share `color`.
    RepeatedColor { vertex: usize, color: i32 },
    /// An incidence color outside `M_n`.
    OutOfRange { vertex: usize, edge: usize, color: i32 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the edge constraint, vertex properness and color range of `coloring`.
pub fn verify_coloring(sg: &SignedGraph, coloring: &IncidenceColoring) -> Result<VerificationReport> {
    let g = sg.graph();
    if coloring.edge_count() != g.edge_count() {
        return Err(Error::DomainMismatch(format!(
            "coloring covers {} edges, graph has {}",
            coloring.edge_count(),
            g.edge_count()
        )));
    }
    let n = coloring.n();
    let mut violations = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let [ca, cb] = coloring.edge_colors(e);
        for (v, c) in [(a, ca), (b, cb)] {
            if !contains(n, c) {
                violations.push(Violation::OutOfRange {
                    vertex: v,
                    edge: e,
                    color: c,
                });
            }
        }
        if ca != -sg.sigma(e) * cb {
            violations.push(Violation::EdgeConstraint { edge: e });
        }
    }
    let mut seen: Vec<i32> = Vec::new();
    for v in 0..g.vertex_count() {
        seen.clear();
        seen.extend(g.neighbors(v).iter().map(|&(_, e)| coloring.get(g, v, e)));
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1]
                && !violations.iter().any(
                    |x| matches!(x, Violation::RepeatedColor { vertex, color } if *vertex == v && *color == w[0]),
                )
            {
                violations.push(Violation::RepeatedColor {
                    vertex: v,
                    color: w[0],
                });
            }
        }
    }
    Ok(VerificationReport { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    fn p3() -> SignedGraph {
        SignedGraph::build(3, &[(0, 1, P), (1, 2, P)]).unwrap()
    }

    #[test]
    fn build_examples() {
        let sg = SignedGraph::build(2, &[(0, 1, P)]).unwrap();
        assert_eq!(sg.graph().vertex_count(), 2);
        assert_eq!(sg.graph().edge_count(), 1);

        let tri = SignedGraph::build(3, &[(0, 1, P), (1, 2, P), (2, 0, N)]).unwrap();
        let product = tri.signature().signs().iter().fold(P, |acc, &s| acc * s);
        assert_eq!(product, N);

        assert_eq!(
            SignedGraph::build(3, &[(0, 1, P), (0, 1, N)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            SignedGraph::build(3, &[(0, 1, P), (1, 0, N)]),
            Err(Error::DuplicateEdge(1, 0))
        );
        assert_eq!(SignedGraph::build(3, &[(1, 1, P)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            SignedGraph::build(3, &[(0, 3, P)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn color_set_examples() {
        assert_eq!(color_set(3).unwrap().members(), vec![-1, 0, 1]);
        assert_eq!(color_set(4).unwrap().members(), vec![-2, -1, 1, 2]);
        assert_eq!(color_set(1).unwrap().members(), vec![0]);
        assert_eq!(color_set(0), Err(Error::EmptyColorSet));
        assert_eq!(color_set(5).unwrap().ordered(), vec![0, 1, -1, 2, -2]);
        assert_eq!(color_set(4).unwrap().ordered(), vec![1, -1, 2, -2]);
    }

    #[test]
    fn color_set_is_negation_closed_with_exact_size() {
        for n in 1..=64 {
            let cs = color_set(n).unwrap();
            let members = cs.members();
            assert_eq!(members.len(), n);
            let mut dedup = members.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), n);
            for &c in &members {
                assert!(cs.contains(-c));
                assert_eq!(color_at(n, color_index(n, c)), c);
            }
            assert_eq!(cs.contains(0), n % 2 == 1);
            assert!(!cs.contains(cs.max_pair() + 1));
        }
    }

    #[test]
    fn verify_p3_examples() {
        let sg = p3();
        let good = IncidenceColoring::from_edge_colors(2, vec![[1, -1], [1, -1]]);
        assert!(verify_coloring(&sg, &good).unwrap().is_valid());

        let bad = IncidenceColoring::from_edge_colors(2, vec![[1, -1], [-1, 1]]);
        let report = verify_coloring(&sg, &bad).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::RepeatedColor { vertex: 1, color: -1 }]
        );
    }

    #[test]
    fn verify_negative_edge_zero() {
        let sg = SignedGraph::build(2, &[(0, 1, N)]).unwrap();
        let c = IncidenceColoring::from_edge_colors(1, vec![[0, 0]]);
        assert!(verify_coloring(&sg, &c).unwrap().is_valid());
        // negative edge: f(u) = f(v)
        let c = IncidenceColoring::from_edge_colors(2, vec![[1, 1]]);
        assert!(verify_coloring(&sg, &c).unwrap().is_valid());
        let c = IncidenceColoring::from_edge_colors(2, vec![[1, -1]]);
        assert_eq!(
            verify_coloring(&sg, &c).unwrap().violations,
            vec![Violation::EdgeConstraint { edge: 0 }]
        );
    }

    #[test]
    fn verify_stored_n_is_respected() {
        let sg = SignedGraph::build(2, &[(0, 1, P)]).unwrap();
        let c = IncidenceColoring::from_edge_colors(2, vec![[0, 0]]);
        let r = verify_coloring(&sg, &c).unwrap();
        assert_eq!(r.violations.len(), 2);
        assert!(matches!(r.violations[0], Violation::OutOfRange { color: 0, .. }));
    }

    #[test]
    fn domain_mismatch() {
        let sg = p3();
        let c = IncidenceColoring::from_edge_colors(2, vec![[1, -1]]);
        assert!(matches!(verify_coloring(&sg, &c), Err(Error::DomainMismatch(_))));
        let recs = vec![(Incidence { vertex: 0, edge: 0 }, 1)];
        assert!(matches!(
            IncidenceColoring::from_incidences(sg.graph(), 2, recs),
            Err(Error::DomainMismatch(_))
        ));
        let recs = vec![(Incidence { vertex: 2, edge: 0 }, 1)];
        assert!(matches!(
            IncidenceColoring::from_incidences(sg.graph(), 2, recs),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn max_degree_examples() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.max_degree(), 3);
        let w7 = Graph::new(
            7,
            (1..7).map(|i| (0, i)).chain((1..7).map(|i| (i, i % 6 + 1))),
        )
        .unwrap();
        assert_eq!(w7.max_degree(), 6);
        assert_eq!(Graph::new(5, []).unwrap().max_degree(), 0);
    }

    #[test]
    fn components_split() {
        let g = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].1, vec![2, 3, 4]);
        assert_eq!(comps[1].2, vec![1, 2]);
        assert_eq!(g.cycle_rank(), 0);
    }
}
