//! Path and cycle primitives shared by every constructive colorer.

use std::collections::HashSet;

use crate::graph::{Graph, Incidence, IncidenceColoring, PartialColoring, SignedGraph};
use crate::switching::is_balanced;
use crate::{Error, Result};

/// The colors a path may use: `{a, -a}` with `a ≠ 0`, or `{0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorPair {
    Zero,
    Pm(i32),
}

impl ColorPair {
    pub fn contains(self, color: i32) -> bool {
        match self {
            ColorPair::Zero => color == 0,
            ColorPair::Pm(a) => color == a || color == -a,
        }
    }

    fn first(self) -> i32 {
        match self {
            ColorPair::Zero => 0,
            ColorPair::Pm(a) => a,
        }
    }
}

/// Edge ids along a vertex sequence, checking that it is a simple path.
pub(crate) fn path_edges(g: &Graph, path: &[usize]) -> Result<Vec<usize>> {
    if path.len() < 2 {
        return Err(Error::NotAPath(format!("{} vertices", path.len())));
    }
    let mut seen = HashSet::with_capacity(path.len());
    for &v in path {
        if v >= g.vertex_count() || !seen.insert(v) {
            return Err(Error::NotAPath(format!("vertex {v} invalid or repeated")));
        }
    }
    path.windows(2)
        .map(|w| {
            g.edge_between(w[0], w[1])
                .ok_or_else(|| Error::NotAPath(format!("no edge {}-{}", w[0], w[1])))
        })
        .collect()
}

/// Colors the path `path` (a vertex sequence) with `pair`.
///
/// The first incidence gets `anchor` (default: the pair's positive element);
/// each far incidence is `-σ` times the near one, and at every internal vertex
/// the outgoing edge takes the other element of the pair.
pub fn color_path(
    sg: &SignedGraph,
    path: &[usize],
    pair: ColorPair,
    anchor: Option<i32>,
) -> Result<Vec<(Incidence, i32)>> {
    let edges = path_edges(sg.graph(), path)?;
    if pair == ColorPair::Pm(0) {
        return Err(Error::AnchorNotInPair { anchor: 0 });
    }
    if pair == ColorPair::Zero && edges.len() > 1 {
        return Err(Error::NotAPath(
            "a path longer than one edge needs two colors".into(),
        ));
    }
    let start = anchor.unwrap_or(pair.first());
    if !pair.contains(start) {
        return Err(Error::AnchorNotInPair { anchor: start });
    }
    Ok(propagate(sg, path, &edges, start))
}

/// Propagation along an already validated path.
pub(crate) fn propagate(
    sg: &SignedGraph,
    path: &[usize],
    edges: &[usize],
    start: i32,
) -> Vec<(Incidence, i32)> {
    let mut out = Vec::with_capacity(2 * edges.len());
    let mut near = start;
    for (i, &e) in edges.iter().enumerate() {
        let far = -sg.sigma(e) * near;
        out.push((Incidence { vertex: path[i], edge: e }, near));
        out.push((Incidence { vertex: path[i + 1], edge: e }, far));
        near = -far;
    }
    out
}

/// A connected piece of a max-degree-2 edge set: a path (`closed == false`)
/// or a cycle whose closing edge joins the last vertex back to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub closed: bool,
}

/// Splits an edge set of maximum degree at most 2 into paths and cycles.
/// Paths start at their lower-numbered end, cycles at their lowest vertex.
pub fn walks(g: &Graph, edges: &[usize]) -> Result<Vec<Walk>> {
    let mut local: std::collections::HashMap<usize, Vec<(usize, usize)>> = Default::default();
    for &e in edges {
        let (a, b) = g.endpoints(e);
        local.entry(a).or_default().push((b, e));
        local.entry(b).or_default().push((a, e));
    }
    if let Some((v, _)) = local.iter().find(|(_, adj)| adj.len() > 2) {
        return Err(Error::InvalidDecomposition(format!(
            "vertex {v} has degree > 2 in a path/cycle part"
        )));
    }
    let mut starts: Vec<usize> = local.keys().copied().collect();
    // endpoints of paths first so that every path is walked from an end
    starts.sort_unstable_by_key(|&v| (local[&v].len(), v));
    let mut used = HashSet::new();
    let mut out = Vec::new();
    for s in starts {
        if local[&s].iter().all(|(_, e)| used.contains(e)) {
            continue;
        }
        let mut vertices = vec![s];
        let mut wedges = Vec::new();
        let mut cur = s;
        loop {
            let next = local[&cur].iter().find(|(_, e)| !used.contains(e)).copied();
            match next {
                Some((w, e)) => {
                    used.insert(e);
                    wedges.push(e);
                    if w == s {
                        break;
                    }
                    vertices.push(w);
                    cur = w;
                }
                None => break,
            }
        }
        let closed = wedges.len() == vertices.len();
        out.push(Walk {
            vertices,
            edges: wedges,
            closed,
        });
    }
    Ok(out)
}

/// Colors a walk with `{a, -a}`; cycles must be balanced.
pub(crate) fn color_walk(sg: &SignedGraph, walk: &Walk, a: i32) -> Result<Vec<(Incidence, i32)>> {
    if !walk.closed {
        return Ok(propagate(sg, &walk.vertices, &walk.edges, a));
    }
    let k = walk.vertices.len();
    let mut out = propagate(sg, &walk.vertices, &walk.edges[..k - 1], a);
    let closing = walk.edges[k - 1];
    let last = walk.vertices[k - 1];
    let at_last = -out[out.len() - 1].1;
    let at_first = -a;
    if at_first != -sg.sigma(closing) * at_last {
        return Err(Error::InvalidDecomposition(
            "cycle in a two-color part is unbalanced".into(),
        ));
    }
    out.push((Incidence { vertex: last, edge: closing }, at_last));
    out.push((
        Incidence {
            vertex: walk.vertices[0],
            edge: closing,
        },
        at_first,
    ));
    Ok(out)
}

/// Vertex order of a connected 2-regular graph starting at vertex 0.
pub(crate) fn cycle_order(g: &Graph) -> Result<Vec<usize>> {
    if g.vertex_count() < 3 || g.regular_degree() != Some(2) || !g.is_connected() {
        return Err(Error::NotACycle("graph is not a connected 2-regular graph".into()));
    }
    let mut order = Vec::with_capacity(g.vertex_count());
    let (mut prev, mut cur) = (usize::MAX, 0);
    loop {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .map(|&(w, _)| w)
            .find(|&w| w != prev)
            .unwrap();
        if next == 0 {
            break;
        }
        prev = cur;
        cur = next;
    }
    Ok(order)
}

/// Colors a signed cycle: `{±1}` when balanced, otherwise one edge gets 0 and
/// the remaining path `{±1}` (three colors).
pub fn color_cycle(sg: &SignedGraph) -> Result<IncidenceColoring> {
    let g = sg.graph();
    let order = cycle_order(g)?;
    let k = order.len();
    let balanced = is_balanced(sg);
    let mut partial = PartialColoring::new(g.edge_count());
    let path_e = path_edges(g, &order)?;
    partial.apply(g, propagate(sg, &order, &path_e, 1));
    let closing = g.edge_between(order[k - 1], order[0]).unwrap();
    if balanced {
        let at_first = -1;
        partial.set(g, order[0], closing, at_first);
        partial.set(g, order[k - 1], closing, -sg.sigma(closing) * at_first);
        partial.into_coloring(2)
    } else {
        partial.set(g, order[0], closing, 0);
        partial.set(g, order[k - 1], closing, 0);
        partial.into_coloring(3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_coloring;
    use crate::graph::Sign::{self, Negative as N, Positive as P};

    fn path_graph(signs: &[Sign]) -> SignedGraph {
        let edges: Vec<_> = signs.iter().enumerate().map(|(i, &s)| (i, i + 1, s)).collect();
        SignedGraph::build(signs.len() + 1, &edges).unwrap()
    }

    fn cycle(signs: &[Sign]) -> SignedGraph {
        let n = signs.len();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, signs[i])).collect();
        SignedGraph::build(n, &edges).unwrap()
    }

    fn complete(sg: &SignedGraph, recs: Vec<(Incidence, i32)>, n: usize) -> IncidenceColoring {
        let mut p = PartialColoring::new(sg.graph().edge_count());
        p.apply(sg.graph(), recs);
        p.into_coloring(n).unwrap()
    }

    #[test]
    fn two_edge_path_mixed_signs() {
        let sg = path_graph(&[P, N]);
        let recs = color_path(&sg, &[0, 1, 2], ColorPair::Pm(1), Some(1)).unwrap();
        let colors: Vec<i32> = recs.iter().map(|r| r.1).collect();
        // v0:e0 = 1, v1:e0 = -1, v1:e1 = 1, v2:e1 = -σ·1 = 1
        assert_eq!(colors, vec![1, -1, 1, 1]);
        assert!(verify_coloring(&sg, &complete(&sg, recs, 2)).unwrap().is_valid());
    }

    #[test]
    fn single_edge_zero() {
        for s in [P, N] {
            let sg = path_graph(&[s]);
            let recs = color_path(&sg, &[0, 1], ColorPair::Zero, None).unwrap();
            assert_eq!(recs.iter().map(|r| r.1).collect::<Vec<_>>(), vec![0, 0]);
            assert!(verify_coloring(&sg, &complete(&sg, recs, 1)).unwrap().is_valid());
        }
    }

    #[test]
    fn three_edge_positive_path() {
        let sg = path_graph(&[P, P, P]);
        let recs = color_path(&sg, &[0, 1, 2, 3], ColorPair::Pm(2), Some(2)).unwrap();
        assert_eq!(
            recs.iter().map(|r| r.1).collect::<Vec<_>>(),
            vec![2, -2, 2, -2, 2, -2]
        );
        assert!(verify_coloring(&sg, &complete(&sg, recs, 4)).unwrap().is_valid());
    }

    #[test]
    fn both_anchors_valid() {
        let sg = path_graph(&[N, P, N, N]);
        for anchor in [3, -3] {
            let recs = color_path(&sg, &[0, 1, 2, 3, 4], ColorPair::Pm(3), Some(anchor)).unwrap();
            assert!(verify_coloring(&sg, &complete(&sg, recs, 6)).unwrap().is_valid());
        }
    }

    #[test]
    fn path_errors() {
        let sg = path_graph(&[P, P]);
        assert!(matches!(
            color_path(&sg, &[0, 2], ColorPair::Pm(1), None),
            Err(Error::NotAPath(_))
        ));
        assert!(matches!(
            color_path(&sg, &[0, 1, 0], ColorPair::Pm(1), None),
            Err(Error::NotAPath(_))
        ));
        assert_eq!(
            color_path(&sg, &[0, 1], ColorPair::Pm(1), Some(2)),
            Err(Error::AnchorNotInPair { anchor: 2 })
        );
        assert!(matches!(
            color_path(&sg, &[0, 1, 2], ColorPair::Zero, None),
            Err(Error::NotAPath(_))
        ));
    }

    #[test]
    fn cycle_examples() {
        let c = color_cycle(&cycle(&[P, P, P])).unwrap();
        assert_eq!(c.n(), 2);
        let sg = cycle(&[P, P, N, P, P]);
        let c = color_cycle(&sg).unwrap();
        assert_eq!(c.n(), 3);
        assert!(verify_coloring(&sg, &c).unwrap().is_valid());
        let sg = cycle(&[N, P, N, P]);
        let c = color_cycle(&sg).unwrap();
        assert_eq!(c.n(), 2);
        assert!(verify_coloring(&sg, &c).unwrap().is_valid());
        assert!(matches!(color_cycle(&path_graph(&[P, P])), Err(Error::NotACycle(_))));
    }

    #[test]
    fn all_cycle_signatures_verify() {
        for n in 3..=7 {
            for bits in 0..1u32 << n {
                let signs: Vec<Sign> = (0..n).map(|i| if bits >> i & 1 == 1 { N } else { P }).collect();
                let sg = cycle(&signs);
                let c = color_cycle(&sg).unwrap();
                assert!(verify_coloring(&sg, &c).unwrap().is_valid());
                assert_eq!(c.n() == 2, signs.iter().filter(|s| s.is_negative()).count() % 2 == 0);
            }
        }
    }

    #[test]
    fn walks_split_paths_and_cycles() {
        let g = Graph::new(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3), (6, 2)]).unwrap();
        let w = walks(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.iter().any(|x| x.closed && x.vertices.len() == 3));
        assert!(w.iter().any(|x| !x.closed && x.vertices == vec![0, 1, 2, 6]));
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(walks(&g, &[0, 1, 2]).is_err());
    }
}
