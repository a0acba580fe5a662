//! Balance, switching and switching equivalence.
//!
//! Balance is decided with vertex potentials over a BFS spanning forest: a
//! signed graph is balanced iff there is `p: V → {±1}` with
//! `σ(uv) = p(u)·p(v)` on every edge. Two signatures on one graph are
//! switching equivalent iff their edgewise product is balanced, and the
//! negative-potential vertices of that product form a switching set.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::graph::{Graph, IncidenceColoring, Sign, Signature, SignedGraph};
use crate::{Error, Result};

/// A set of vertices to switch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwitchSet {
    vertices: Vec<usize>,
}

impl SwitchSet {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        SwitchSet { vertices }
    }

    pub fn empty() -> Self {
        SwitchSet { vertices: Vec::new() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    fn membership(&self, n: usize) -> Result<Vec<bool>> {
        let mut inside = vec![false; n];
        for &v in &self.vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, count: n });
            }
            inside[v] = true;
        }
        Ok(inside)
    }

    /// Canonical form: within each connected component keep the side that
    /// does not contain the component's lowest-numbered vertex.
    pub fn canonical(&self, g: &Graph) -> Result<SwitchSet> {
        let mut inside = self.membership(g.vertex_count())?;
        let (count, label) = g.component_labels();
        let mut flip = vec![None; count];
        for v in 0..g.vertex_count() {
            let f = *flip[label[v]].get_or_insert(inside[v]);
            if f {
                inside[v] = !inside[v];
            }
        }
        Ok(SwitchSet {
            vertices: (0..g.vertex_count()).filter(|&v| inside[v]).collect(),
        })
    }
}

/// Negates the sign of every edge with exactly one endpoint in `set`.
pub fn switch(sg: &SignedGraph, set: &SwitchSet) -> Result<SignedGraph> {
    let g = sg.graph();
    let inside = set.membership(g.vertex_count())?;
    let signs = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            if inside[u] != inside[v] {
                -sg.sign(e)
            } else {
                sg.sign(e)
            }
        })
        .collect();
    sg.with_signature(Signature::new(signs))
}

/// Carries a coloring of `sg` over to `switch(sg, set)` by negating every
/// incidence color at the switched vertices.
pub fn transport_coloring(
    sg: &SignedGraph,
    coloring: &IncidenceColoring,
    set: &SwitchSet,
) -> Result<IncidenceColoring> {
    let g = sg.graph();
    let inside = set.membership(g.vertex_count())?;
    let mut out = coloring.clone();
    for (e, c) in out.colors_mut().iter_mut().enumerate() {
        let (a, b) = g.endpoints(e);
        if inside[a] {
            c[0] = -c[0];
        }
        if inside[b] {
            c[1] = -c[1];
        }
    }
    Ok(out)
}

/// Potentials `p(v) ∈ {±1}` with `σ(uv) = p(u)p(v)` on a BFS spanning forest
/// (roots get `+1`). Also returns the first co-tree edge that violates the
/// relation, if any.
pub fn potentials(sg: &SignedGraph) -> (Vec<Sign>, Option<usize>) {
    let g = sg.graph();
    let n = g.vertex_count();
    let mut p: Vec<Option<Sign>> = vec![None; n];
    let mut queue = VecDeque::new();
    let mut conflict = None;
    for root in 0..n {
        if p[root].is_some() {
            continue;
        }
        p[root] = Some(Sign::Positive);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let pv = p[v].unwrap();
            for &(w, e) in g.neighbors(v) {
                let want = pv * sg.sign(e);
                match p[w] {
                    None => {
                        p[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(pw) if pw != want && conflict.is_none() => conflict = Some(e),
                    Some(_) => {}
                }
            }
        }
    }
    (p.into_iter().map(Option::unwrap).collect(), conflict)
}

/// Whether every cycle has a positive sign product.
pub fn is_balanced(sg: &SignedGraph) -> bool {
    potentials(sg).1.is_none()
}

/// Product of the signs along a closed vertex sequence `v0, v1, …, v_{k-1}`
/// (the edge `v_{k-1} v0` closes it).
pub fn cycle_sign(sg: &SignedGraph, cycle: &[usize]) -> Result<Sign> {
    let g = sg.graph();
    if cycle.len() < 3 {
        return Err(Error::NotACycle(format!("{} vertices", cycle.len())));
    }
    let mut seen = HashSet::new();
    for &v in cycle {
        if v >= g.vertex_count() || !seen.insert(v) {
            return Err(Error::NotACycle(format!("vertex {v} invalid or repeated")));
        }
    }
    let mut product = Sign::Positive;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let e = g
            .edge_between(a, b)
            .ok_or_else(|| Error::NotACycle(format!("no edge {a}-{b}")))?;
        product = product * sg.sign(e);
    }
    Ok(product)
}

/// Decides switching equivalence; when equivalent, returns the canonical
/// switching set taking `a` to `b`.
pub fn switching_equivalent(a: &SignedGraph, b: &SignedGraph) -> Result<Option<SwitchSet>> {
    if a.graph() != b.graph() {
        return Err(Error::UnderlyingGraphMismatch);
    }
    let product = a.with_signature(a.signature().product(b.signature()))?;
    let (p, conflict) = potentials(&product);
    if conflict.is_some() {
        return Ok(None);
    }
    let set = SwitchSet::new((0..p.len()).filter(|&v| p[v].is_negative()));
    Ok(Some(set.canonical(a.graph())?))
}

/// Membership flag per edge for a BFS spanning forest of `g`.
pub fn spanning_forest(g: &Graph) -> Vec<bool> {
    let mut tree = vec![false; g.edge_count()];
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::new();
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    tree
}

/// One signature per switching class of a graph.
///
/// Spanning-forest edges are fixed positive and the `m - n + c` co-tree
/// edges range over all sign patterns. Representative `i` makes co-tree edge
/// `j` (in edge-id order) negative iff bit `j` of `i` is set, so the index
/// space can be split across workers with [`ClassRepresentatives::get`].
#[derive(Clone, Debug)]
pub struct ClassRepresentatives {
    edge_count: usize,
    cotree: Vec<usize>,
    next: u64,
}

/// Enumerates switching-class representatives of `g`.
///
/// Panics if the cycle rank is 64 or more; callers enforce a budget first.
pub fn switching_class_representatives(g: &Graph) -> ClassRepresentatives {
    let tree = spanning_forest(g);
    let cotree: Vec<usize> = (0..g.edge_count()).filter(|&e| !tree[e]).collect();
    assert!(cotree.len() < 64, "cycle rank {} too large to enumerate", cotree.len());
    ClassRepresentatives {
        edge_count: g.edge_count(),
        cotree,
        next: 0,
    }
}

impl ClassRepresentatives {
    /// Number of switching classes, `2^(m-n+c)`.
    pub fn class_count(&self) -> u64 {
        1u64 << self.cotree.len()
    }

    pub fn cotree_edges(&self) -> &[usize] {
        &self.cotree
    }

    pub fn get(&self, index: u64) -> Signature {
        let mut signs = vec![Sign::Positive; self.edge_count];
        for (j, &e) in self.cotree.iter().enumerate() {
            if (index >> j) & 1 == 1 {
                signs[e] = Sign::Negative;
            }
        }
        Signature::new(signs)
    }
}

impl Iterator for ClassRepresentatives {
    type Item = Signature;

    fn next(&mut self) -> Option<Signature> {
        if self.next >= self.class_count() {
            return None;
        }
        let s = self.get(self.next);
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.class_count() - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for ClassRepresentatives {}
