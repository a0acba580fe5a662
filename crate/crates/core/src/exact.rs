//! Exact chromatic index by backtracking, and regular-graph decompositions.
//!
//! The search colors one edge at a time: choosing `f(u:uv) = c` forces
//! `f(v:uv) = -σ(uv)·c`, and a branch is cut as soon as a color repeats at a
//! vertex or a vertex has more uncolored edges than free colors. Color pairs
//! `{±k}` that no incidence uses yet are interchangeable, and so are the two
//! signs within such a pair, so only the lowest unused pair is opened and
//! only with its positive element on the first endpoint.

use serde::Serialize;

use crate::colorers::path::{color_walk, walks};
use crate::graph::{color_at, color_index, Graph, IncidenceColoring, PartialColoring, SignedGraph};
use crate::switching::is_balanced;
use crate::{verify_coloring, Error, Result};

/// Largest edge count the solver accepts without `force`.
pub const DEFAULT_EDGE_LIMIT: usize = 64;
const MAX_COLORS: usize = 128;

#[derive(Clone, Copy, Debug, Default)]
pub struct SolverOptions {
    /// Lift the edge-count guard.
    pub force: bool,
}

/// χ′ together with a witness coloring that uses `M_χ′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    pub delta: usize,
    pub witness: IncidenceColoring,
}

impl ChromaticResult {
    fn new(chi: usize, delta: usize, witness: IncidenceColoring) -> Result<Self> {
        if chi < delta || chi > delta + 1 {
            return Err(Error::Invariant(format!(
                "chromatic index {chi} outside [{delta}, {}]",
                delta + 1
            )));
        }
        Ok(ChromaticResult { chi, delta, witness })
    }
}

pub fn exact_chromatic_index(sg: &SignedGraph) -> Result<ChromaticResult> {
    exact_chromatic_index_with(sg, SolverOptions::default())
}

pub fn exact_chromatic_index_with(sg: &SignedGraph, opts: SolverOptions) -> Result<ChromaticResult> {
    let delta = sg.graph().max_degree();
    if delta == 0 {
        return ChromaticResult::new(0, 0, IncidenceColoring::empty());
    }
    if let Some(c) = find_coloring(sg, delta, opts)? {
        return ChromaticResult::new(delta, delta, c);
    }
    match find_coloring(sg, delta + 1, opts)? {
        Some(c) => ChromaticResult::new(delta + 1, delta, c),
        None => Err(Error::Invariant(format!(
            "no coloring with Δ+1 = {} colors",
            delta + 1
        ))),
    }
}

/// Whether `sg` has an `n`-edge-coloring.
pub fn is_colorable(sg: &SignedGraph, n: usize, opts: SolverOptions) -> Result<bool> {
    Ok(find_coloring(sg, n, opts)?.is_some())
}

/// Searches for an `n`-edge-coloring, component by component.
pub fn find_coloring(
    sg: &SignedGraph,
    n: usize,
    opts: SolverOptions,
) -> Result<Option<IncidenceColoring>> {
    let g = sg.graph();
    if !opts.force && g.edge_count() > DEFAULT_EDGE_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "edges",
            value: g.edge_count(),
            limit: DEFAULT_EDGE_LIMIT,
        });
    }
    if n > MAX_COLORS {
        return Err(Error::BudgetExceeded {
            what: "colors",
            value: n,
            limit: MAX_COLORS,
        });
    }
    if g.edge_count() == 0 {
        return Ok(Some(IncidenceColoring::from_edge_colors(n, Vec::new())));
    }
    if n < g.max_degree() {
        return Ok(None);
    }
    let mut colors = vec![[0i32; 2]; g.edge_count()];
    for (cg, _, edge_ids) in g.components() {
        if cg.edge_count() == 0 {
            continue;
        }
        let signs: Vec<i32> = edge_ids.iter().map(|&e| sg.sigma(e)).collect();
        let mut search = Search::new(&cg, &signs, n);
        if !search.run(0, 0) {
            return Ok(None);
        }
        for (local, &e) in edge_ids.iter().enumerate() {
            // component graphs keep the endpoint order of the original edges
            colors[e] = search.colors[local];
        }
    }
    let coloring = IncidenceColoring::from_edge_colors(n, colors);
    if !verify_coloring(sg, &coloring)?.is_valid() {
        return Err(Error::Invariant("solver produced an invalid coloring".into()));
    }
    Ok(Some(coloring))
}

struct Search {
    n: usize,
    order: Vec<usize>,
    ends: Vec<(usize, usize)>,
    sigma: Vec<i32>,
    used: Vec<u128>,
    uncolored: Vec<u32>,
    colors: Vec<[i32; 2]>,
}

impl Search {
    fn new(g: &Graph, sigma: &[i32], n: usize) -> Self {
        let deg = g.degrees();
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        order.sort_by_key(|&e| {
            let (a, b) = g.endpoints(e);
            (std::cmp::Reverse(deg[a].max(deg[b])), std::cmp::Reverse(deg[a].min(deg[b])), e)
        });
        Search {
            n,
            order,
            ends: g.edges().to_vec(),
            sigma: sigma.to_vec(),
            used: vec![0; g.vertex_count()],
            uncolored: deg.iter().map(|&d| d as u32).collect(),
            colors: vec![[0; 2]; g.edge_count()],
        }
    }

    fn free(&self, v: usize) -> u32 {
        self.n as u32 - self.used[v].count_ones()
    }

    /// `opened`: number of color pairs already in use somewhere.
    fn run(&mut self, pos: usize, opened: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let e = self.order[pos];
        let (u, v) = self.ends[e];
        let s = self.sigma[e];
        let pairs = self.n / 2;
        let zero = self.n % 2 == 1;
        let limit = (opened + 1).min(pairs);
        let candidates = usize::from(zero) + 2 * opened + usize::from(limit > opened);
        for k in 0..candidates {
            let cu = color_at(self.n, k);
            let cv = -s * cu;
            let bu = 1u128 << k;
            let bv = 1u128 << color_index(self.n, cv);
            if self.used[u] & bu != 0 || self.used[v] & bv != 0 {
                continue;
            }
            self.used[u] |= bu;
            self.used[v] |= bv;
            self.uncolored[u] -= 1;
            self.uncolored[v] -= 1;
            let ok = self.uncolored[u] <= self.free(u) && self.uncolored[v] <= self.free(v);
            if ok {
                let pair = cu.unsigned_abs() as usize;
                let next_opened = opened.max(pair);
                self.colors[e] = [cu, cv];
                if self.run(pos + 1, next_opened) {
                    return true;
                }
            }
            self.used[u] &= !bu;
            self.used[v] &= !bv;
            self.uncolored[u] += 1;
            self.uncolored[v] += 1;
        }
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartKind {
    Path,
    Cycle,
    Matching,
    TwoRegularSpanning,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub kind: PartKind,
    pub edges: Vec<usize>,
}

/// An ordered list of edge-disjoint subgraphs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub parts: Vec<Part>,
}

impl Decomposition {
    pub fn push(&mut self, kind: PartKind, edges: Vec<usize>) {
        self.parts.push(Part { kind, edges });
    }

    /// Checks that the parts are pairwise edge-disjoint and cover all `m` edges.
    pub fn check_partition(&self, m: usize) -> Result<()> {
        let mut owner = vec![None; m];
        for (i, part) in self.parts.iter().enumerate() {
            for &e in &part.edges {
                if e >= m {
                    return Err(Error::InvalidDecomposition(format!("edge {e} out of range")));
                }
                if let Some(j) = owner[e] {
                    return Err(Error::InvalidDecomposition(format!(
                        "edge {e} in parts {j} and {i}"
                    )));
                }
                owner[e] = Some(i);
            }
        }
        if let Some(e) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidDecomposition(format!("edge {e} not covered")));
        }
        Ok(())
    }
}

/// Outcome of checking a regular decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularCheck {
    pub valid: bool,
    /// The graph is 1-regular, i.e. the decomposition is a lone perfect
    /// matching with no 2-regular parts.
    pub extended: bool,
    pub reason: Option<String>,
}

/// Checks that `d` splits a `k`-regular `sg` into `⌊k/2⌋` spanning balanced
/// 2-regular parts, plus one perfect matching when `k` is odd.
pub fn verify_regular_decomposition(sg: &SignedGraph, d: &Decomposition) -> Result<RegularCheck> {
    let g = sg.graph();
    let k = match g.regular_degree() {
        Some(k) if k >= 1 => k,
        _ => return Err(Error::NotRegular),
    };
    let extended = k == 1;
    let fail = |reason: String| {
        Ok(RegularCheck {
            valid: false,
            extended,
            reason: Some(reason),
        })
    };
    if let Err(e) = d.check_partition(g.edge_count()) {
        return fail(e.to_string());
    }
    let two_regular = d
        .parts
        .iter()
        .filter(|p| p.kind == PartKind::TwoRegularSpanning)
        .count();
    let matchings = d.parts.iter().filter(|p| p.kind == PartKind::Matching).count();
    if two_regular != k / 2 || matchings != k % 2 || two_regular + matchings != d.parts.len() {
        return fail(format!(
            "expected {} two-regular parts and {} matching(s), got {} parts",
            k / 2,
            k % 2,
            d.parts.len()
        ));
    }
    for (i, part) in d.parts.iter().enumerate() {
        let sub = sg.edge_subgraph(&part.edges);
        let want = if part.kind == PartKind::Matching { 1 } else { 2 };
        if sub.graph().regular_degree() != Some(want) {
            return fail(format!("part {i} is not spanning {want}-regular"));
        }
        if part.kind == PartKind::TwoRegularSpanning && !is_balanced(&sub) {
            return fail(format!("part {i} is unbalanced"));
        }
    }
    Ok(RegularCheck {
        valid: true,
        extended,
        reason: None,
    })
}

/// Reads a regular decomposition off a `Δ`-coloring of a `Δ`-regular graph:
/// one part per color pair `{±k}`, plus the 0-colored matching when `Δ` is odd.
pub fn extract_decomposition(sg: &SignedGraph, c: &IncidenceColoring) -> Result<Decomposition> {
    let g = sg.graph();
    let delta = match g.regular_degree() {
        Some(k) if k >= 1 => k,
        _ => return Err(Error::NotRegular),
    };
    let report = verify_coloring(sg, c)?;
    if !report.is_valid() {
        return Err(Error::InvalidColoring(format!("{:?}", report.violations)));
    }
    if c.n() != delta {
        return Err(Error::InvalidColoring(format!(
            "coloring uses M_{}, graph is {delta}-regular",
            c.n()
        )));
    }
    let mut d = Decomposition::default();
    for a in 1..=(delta / 2) as i32 {
        let edges = (0..g.edge_count())
            .filter(|&e| c.edge_colors(e)[0].abs() == a)
            .collect();
        d.push(PartKind::TwoRegularSpanning, edges);
    }
    if delta % 2 == 1 {
        let edges = (0..g.edge_count())
            .filter(|&e| c.edge_colors(e)[0] == 0)
            .collect();
        d.push(PartKind::Matching, edges);
    }
    let check = verify_regular_decomposition(sg, &d)?;
    if !check.valid {
        return Err(Error::Invariant(format!(
            "extracted decomposition rejected: {:?}",
            check.reason
        )));
    }
    Ok(d)
}

/// Colors `sg` from a decomposition of all its edges: every path, cycle or
/// 2-regular part gets its own pair `{±(j+1)}` (cycles must be balanced), and
/// the matching part, if any, gets color 0. The color-set size is
/// `2·(number of two-color parts) + (1 if a matching is present)`.
pub fn coloring_from_decomposition(sg: &SignedGraph, d: &Decomposition) -> Result<IncidenceColoring> {
    let g = sg.graph();
    d.check_partition(g.edge_count())?;
    let mut partial = PartialColoring::new(g.edge_count());
    let mut pairs = 0;
    let mut matching = false;
    for part in &d.parts {
        match part.kind {
            PartKind::Matching => {
                if matching {
                    return Err(Error::InvalidDecomposition("more than one matching part".into()));
                }
                matching = true;
                let mut seen = vec![false; g.vertex_count()];
                for &e in &part.edges {
                    let (a, b) = g.endpoints(e);
                    if std::mem::replace(&mut seen[a], true) || std::mem::replace(&mut seen[b], true) {
                        return Err(Error::InvalidDecomposition("matching part is not a matching".into()));
                    }
                    partial.set(g, a, e, 0);
                    partial.set(g, b, e, 0);
                }
            }
            PartKind::Path | PartKind::Cycle | PartKind::TwoRegularSpanning => {
                pairs += 1;
                for w in walks(g, &part.edges)? {
                    partial.apply(g, color_walk(sg, &w, pairs as i32)?);
                }
            }
        }
    }
    partial.into_coloring(2 * pairs + usize::from(matching))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{self, Negative as N, Positive as P};
    use crate::graph::Signature;

    fn cycle(signs: &[Sign]) -> SignedGraph {
        let n = signs.len();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, signs[i])).collect();
        SignedGraph::build(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    /// Exhaustive oracle: tries every assignment of `M_n` colors to the
    /// first-endpoint incidences.
    fn brute_colorable(sg: &SignedGraph, n: usize) -> bool {
        let g = sg.graph();
        let m = g.edge_count();
        let colors = crate::color_set(n).unwrap().members();
        let total = colors.len().pow(m as u32);
        (0..total).any(|mut code| {
            let mut cs = Vec::with_capacity(m);
            for e in 0..m {
                let c = colors[code % colors.len()];
                code /= colors.len();
                cs.push([c, -sg.sigma(e) * c]);
            }
            let col = IncidenceColoring::from_edge_colors(n, cs);
            verify_coloring(sg, &col).unwrap().is_valid()
        })
    }

    #[test]
    fn paths_and_single_edges() {
        for bits in 0..8u128 {
            let sg = SignedGraph::new(
                Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap(),
                Signature::from_bits(3, bits),
            )
            .unwrap();
            assert_eq!(exact_chromatic_index(&sg).unwrap().chi, 2);
        }
        for s in [P, N] {
            let sg = SignedGraph::build(2, &[(0, 1, s)]).unwrap();
            let r = exact_chromatic_index(&sg).unwrap();
            assert_eq!(r.chi, 1);
            assert_eq!(r.witness.edge_colors(0), [0, 0]);
        }
    }

    #[test]
    fn six_cycles() {
        assert_eq!(exact_chromatic_index(&cycle(&[P; 6])).unwrap().chi, 2);
        assert_eq!(
            exact_chromatic_index(&cycle(&[P, P, N, P, P, P])).unwrap().chi,
            3
        );
    }

    #[test]
    fn k4_positive() {
        let r = exact_chromatic_index(&SignedGraph::positive(complete(4))).unwrap();
        assert_eq!((r.delta, r.chi), (3, 3));
    }

    #[test]
    fn edgeless() {
        let sg = SignedGraph::positive(Graph::new(3, []).unwrap());
        let r = exact_chromatic_index(&sg).unwrap();
        assert_eq!((r.chi, r.delta, r.witness.edge_count()), (0, 0, 0));
    }

    #[test]
    fn disconnected_takes_maximum() {
        // unbalanced triangle + a star with three leaves: Δ = 3, triangle needs 3
        let sg = SignedGraph::build(
            7,
            &[(0, 1, P), (1, 2, P), (2, 0, N), (3, 4, P), (3, 5, N), (3, 6, P)],
        )
        .unwrap();
        let r = exact_chromatic_index(&sg).unwrap();
        assert_eq!(r.chi, 3);
        assert!(verify_coloring(&sg, &r.witness).unwrap().is_valid());
        // unbalanced triangle + single edge: Δ = 2, χ′ = 3
        let sg = SignedGraph::build(5, &[(0, 1, P), (1, 2, P), (2, 0, N), (3, 4, P)]).unwrap();
        let r = exact_chromatic_index(&sg).unwrap();
        assert_eq!((r.delta, r.chi), (2, 3));
        assert!(verify_coloring(&sg, &r.witness).unwrap().is_valid());
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        let graphs = [
            Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(),
            complete(4),
            Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)]).unwrap(),
        ];
        for g in graphs {
            let m = g.edge_count();
            let delta = g.max_degree();
            for bits in 0..1u128 << m {
                let sg = SignedGraph::new(g.clone(), Signature::from_bits(m, bits)).unwrap();
                let got = is_colorable(&sg, delta, SolverOptions::default()).unwrap();
                assert_eq!(got, brute_colorable(&sg, delta), "bits {bits:b}");
            }
        }
    }

    #[test]
    fn size_guard() {
        let big = SignedGraph::positive(complete(12));
        assert!(matches!(
            exact_chromatic_index(&big),
            Err(Error::BudgetExceeded { what: "edges", value: 66, limit: 64 })
        ));
    }

    #[test]
    fn regular_decomposition_examples() {
        let k4 = SignedGraph::positive(complete(4));
        // edges: 0:01 1:02 2:03 3:12 4:13 5:23
        let mut d = Decomposition::default();
        d.push(PartKind::Matching, vec![0, 5]);
        d.push(PartKind::TwoRegularSpanning, vec![1, 2, 3, 4]);
        assert!(verify_regular_decomposition(&k4, &d).unwrap().valid);

        let c4 = cycle(&[P; 4]);
        let mut d = Decomposition::default();
        d.push(PartKind::TwoRegularSpanning, vec![0, 1, 2, 3]);
        assert!(verify_regular_decomposition(&c4, &d).unwrap().valid);
        let c4n = cycle(&[P, N, P, P]);
        let check = verify_regular_decomposition(&c4n, &d).unwrap();
        assert!(!check.valid);

        let path = SignedGraph::positive(Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(verify_regular_decomposition(&path, &d), Err(Error::NotRegular));

        let matching = SignedGraph::positive(Graph::new(4, [(0, 1), (2, 3)]).unwrap());
        let mut d = Decomposition::default();
        d.push(PartKind::Matching, vec![0, 1]);
        let check = verify_regular_decomposition(&matching, &d).unwrap();
        assert!(check.valid && check.extended);
    }

    #[test]
    fn extract_examples() {
        let c4 = cycle(&[P; 4]);
        let c = exact_chromatic_index(&c4).unwrap().witness;
        let d = extract_decomposition(&c4, &c).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].kind, PartKind::TwoRegularSpanning);

        let k4 = SignedGraph::positive(complete(4));
        let c = exact_chromatic_index(&k4).unwrap().witness;
        let d = extract_decomposition(&k4, &c).unwrap();
        let kinds: Vec<_> = d.parts.iter().map(|p| p.kind).collect();
        assert_eq!(kinds, vec![PartKind::TwoRegularSpanning, PartKind::Matching]);

        let k5 = SignedGraph::positive(complete(5));
        let r = exact_chromatic_index(&k5).unwrap();
        assert_eq!(r.chi, 4);
        let d = extract_decomposition(&k5, &r.witness).unwrap();
        assert_eq!(d.parts.len(), 2);
        assert!(verify_regular_decomposition(&k5, &d).unwrap().valid);
        let back = coloring_from_decomposition(&k5, &d).unwrap();
        assert_eq!(back.n(), 4);
        assert!(verify_coloring(&k5, &back).unwrap().is_valid());
    }

    #[test]
    fn extract_rejects_bad_input() {
        let c4 = cycle(&[P; 4]);
        let bad = IncidenceColoring::from_edge_colors(2, vec![[1, 1]; 4]);
        assert!(matches!(extract_decomposition(&c4, &bad), Err(Error::InvalidColoring(_))));
        let path = SignedGraph::positive(Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        let c = exact_chromatic_index(&path).unwrap().witness;
        assert_eq!(extract_decomposition(&path, &c), Err(Error::NotRegular));
    }
}
