//! Cactus decomposition and the inductive `Δ`-coloring of non-cycle cacti.
//!
//! Both steps run in time linear in the size of the cactus: the blocks come
//! from one iterative low-link DFS, and each part is colored using only the
//! free colors at its attachment vertex, which are tracked incrementally.

use serde::Serialize;

use super::path::propagate;
use crate::graph::{color_at, color_index, Graph, IncidenceColoring, PartialColoring, SignedGraph};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CactusPartKind {
    Edge,
    Cycle,
}

/// One part `G_i` of a cactus decomposition.
///
/// `vertices` starts at the attachment vertex (for the first part: the DFS
/// root). For a cycle, `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`; for an edge, `edges[0]` joins the two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CactusPart {
    pub kind: CactusPartKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    /// The single vertex shared with the earlier parts; `None` for the first part.
    pub attachment: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CactusDecomposition {
    pub parts: Vec<CactusPart>,
}

/// Splits a connected cactus into edges and cycles, ordered so that every
/// part after the first meets the union of its predecessors in exactly its
/// attachment vertex.
pub fn decompose_cactus(g: &Graph) -> Result<CactusDecomposition> {
    const UNSET: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut time = 0;
    // (vertex, edge to parent, next neighbor position)
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, UNSET, 0)];
    disc[0] = 0;
    time += 1;
    let mut edge_stack: Vec<usize> = Vec::new();
    // blocks keyed by the discovery time of the child end of their top edge
    let mut slots: Vec<Option<(usize, Vec<usize>)>> = vec![None; n];

    while let Some(frame) = frames.last_mut() {
        let (v, parent_edge, i) = *frame;
        if i < g.degree(v) {
            frame.2 += 1;
            let (w, e) = g.neighbors(v)[i];
            if e == parent_edge {
                continue;
            }
            if disc[w] == UNSET {
                disc[w] = time;
                low[w] = time;
                time += 1;
                edge_stack.push(e);
                frames.push((w, e, 0));
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if let Some(&(p, _, _)) = frames.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    loop {
                        let e = edge_stack.pop().expect("block edge on stack");
                        block.push(e);
                        if e == parent_edge {
                            break;
                        }
                    }
                    slots[disc[v]] = Some((p, block));
                }
            }
        }
    }
    if disc.contains(&UNSET) {
        return Err(Error::Disconnected);
    }

    let mut parts = Vec::with_capacity(g.edge_count());
    // scratch adjacency for walking cycle blocks
    let mut slot_a = vec![UNSET; n];
    let mut slot_b = vec![UNSET; n];
    for (top, block) in slots.into_iter().flatten() {
        let attachment = if parts.is_empty() { None } else { Some(top) };
        if block.len() == 1 {
            let e = block[0];
            parts.push(CactusPart {
                kind: CactusPartKind::Edge,
                vertices: vec![top, g.other_endpoint(e, top)],
                edges: vec![e],
                attachment,
            });
            continue;
        }
        let mut vertex_count = 0;
        let mut ok = true;
        for &e in &block {
            let (a, b) = g.endpoints(e);
            for x in [a, b] {
                if slot_a[x] == UNSET {
                    slot_a[x] = e;
                    vertex_count += 1;
                } else if slot_b[x] == UNSET {
                    slot_b[x] = e;
                } else {
                    ok = false;
                }
            }
        }
        let is_cycle = ok && vertex_count == block.len();
        let mut vertices = Vec::with_capacity(block.len());
        let mut edges = Vec::with_capacity(block.len());
        if is_cycle {
            let (mut cur, mut via) = (top, UNSET);
            loop {
                vertices.push(cur);
                let e = if slot_a[cur] != via { slot_a[cur] } else { slot_b[cur] };
                edges.push(e);
                cur = g.other_endpoint(e, cur);
                via = e;
                if cur == top {
                    break;
                }
            }
        }
        for &e in &block {
            let (a, b) = g.endpoints(e);
            slot_a[a] = UNSET;
            slot_b[a] = UNSET;
            slot_a[b] = UNSET;
            slot_b[b] = UNSET;
        }
        if !is_cycle {
            return Err(Error::NotACactus(format!(
                "block at vertex {top} with {} edges is neither an edge nor a cycle",
                block.len()
            )));
        }
        parts.push(CactusPart {
            kind: CactusPartKind::Cycle,
            vertices,
            edges,
            attachment,
        });
    }
    Ok(CactusDecomposition { parts })
}

/// How many parts were colored by each branch of the construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CactusCases {
    pub edge: usize,
    /// `α = -β`, `Δ = 3`: an edge away from the attachment takes 0.
    pub opposite_delta3: usize,
    /// `α = -β`, `Δ > 3`: the two attachment edges take `±α`, the rest a fresh pair.
    pub opposite_fresh_pair: usize,
    /// `α ≠ -β`: one attachment edge takes `α`, the rest `±β`.
    pub distinct: usize,
}

/// Tracks which colors are still free at each vertex.
///
/// Colors are handled by their position in the order `0, +1, -1, +2, …`.
/// Every position below `next[v]` is used at `v`; used positions at or above
/// it are kept in `extra[v]`.
struct FreeColors {
    next: Vec<usize>,
    extra: Vec<Vec<usize>>,
}

impl FreeColors {
    fn new(n: usize) -> Self {
        FreeColors {
            next: vec![0; n],
            extra: vec![Vec::new(); n],
        }
    }

    fn mark(&mut self, v: usize, idx: usize) {
        debug_assert!(idx >= self.next[v] && !self.extra[v].contains(&idx));
        if idx != self.next[v] {
            self.extra[v].push(idx);
            return;
        }
        self.next[v] += 1;
        while let Some(pos) = self.extra[v].iter().position(|&x| x == self.next[v]) {
            self.extra[v].swap_remove(pos);
            self.next[v] += 1;
        }
    }

    fn smallest(&self, v: usize, skip: Option<usize>) -> usize {
        let mut idx = self.next[v];
        while self.extra[v].contains(&idx) || Some(idx) == skip {
            idx += 1;
        }
        idx
    }
}

struct CactusPainter<'a> {
    sg: &'a SignedGraph,
    n: usize,
    partial: PartialColoring,
    free: FreeColors,
}

impl CactusPainter<'_> {
    fn assign(&mut self, v: usize, e: usize, color: i32) {
        self.partial.set(self.sg.graph(), v, e, color);
        self.free.mark(v, color_index(self.n, color));
    }

    fn edge(&mut self, u: usize, w: usize, e: usize, color: i32) {
        self.assign(u, e, color);
        self.assign(w, e, -self.sg.sigma(e) * color);
    }

    fn path(&mut self, vertices: &[usize], edges: &[usize], start: i32) {
        for (inc, c) in propagate(self.sg, vertices, edges, start) {
            self.assign(inc.vertex, inc.edge, c);
        }
    }

    fn first_cycle(&mut self, vs: &[usize], es: &[usize]) {
        let len = vs.len();
        self.path(vs, &es[..len - 1], 1);
        let closing = es[len - 1];
        let last_color = self.partial.get(self.sg.graph(), vs[len - 1], es[len - 2]).unwrap();
        // balanced iff closing the ±1 alternation satisfies the edge constraint
        let at_last = -last_color;
        let at_first = -1;
        if at_first == -self.sg.sigma(closing) * at_last {
            self.assign(vs[len - 1], closing, at_last);
            self.assign(vs[0], closing, at_first);
        } else {
            let c = if self.n % 2 == 1 { 0 } else { 2 };
            self.edge(vs[0], vs[len - 1], closing, c);
        }
    }

    fn attached_cycle(&mut self, vs: &[usize], es: &[usize], cases: &mut CactusCases) {
        let u = vs[0];
        let len = vs.len();
        let a_idx = self.free.smallest(u, None);
        let b_idx = self.free.smallest(u, Some(a_idx));
        debug_assert!(b_idx < self.n, "attachment vertex has fewer than two free colors");
        let (mut alpha, mut beta) = (color_at(self.n, a_idx), color_at(self.n, b_idx));
        if alpha == -beta && self.n == 3 {
            cases.opposite_delta3 += 1;
            // v1 w gets 0; the path v1, u, v_{L-1}, …, w gets ±α
            self.edge(vs[1], vs[2], es[1], 0);
            let mut pv = vec![vs[1], u];
            let mut pe = vec![es[0]];
            for i in (2..len).rev() {
                pv.push(vs[i]);
                pe.push(es[i]);
            }
            self.path(&pv, &pe, alpha);
        } else if alpha == -beta {
            cases.opposite_fresh_pair += 1;
            let gamma = if alpha.abs() == 1 { 2 } else { 1 };
            self.path(&[vs[1], u, vs[len - 1]], &[es[0], es[len - 1]], alpha);
            self.path(&vs[1..], &es[1..len - 1], gamma);
        } else {
            cases.distinct += 1;
            if beta == 0 {
                std::mem::swap(&mut alpha, &mut beta);
            }
            self.edge(u, vs[1], es[0], alpha);
            let mut pv = vec![u];
            let mut pe = Vec::with_capacity(len - 1);
            for i in (1..len).rev() {
                pv.push(vs[i]);
                pe.push(es[i]);
            }
            self.path(&pv, &pe, beta);
        }
    }
}

/// `Δ`-coloring of a signed cactus that is not a cycle.
pub fn color_cactus(sg: &SignedGraph) -> Result<IncidenceColoring> {
    color_cactus_traced(sg).map(|(c, _)| c)
}

/// [`color_cactus`] that also reports which construction branches fired.
pub fn color_cactus_traced(sg: &SignedGraph) -> Result<(IncidenceColoring, CactusCases)> {
    let g = sg.graph();
    let dec = decompose_cactus(g)?;
    color_cactus_with(sg, &dec)
}

pub fn color_cactus_with(
    sg: &SignedGraph,
    dec: &CactusDecomposition,
) -> Result<(IncidenceColoring, CactusCases)> {
    let g = sg.graph();
    if g.vertex_count() >= 3 && g.regular_degree() == Some(2) {
        return Err(Error::IsACycle);
    }
    let delta = g.max_degree();
    let mut cases = CactusCases::default();
    if delta == 0 {
        return Ok((IncidenceColoring::empty(), cases));
    }
    let mut painter = CactusPainter {
        sg,
        n: delta.max(3),
        partial: PartialColoring::new(g.edge_count()),
        free: FreeColors::new(g.vertex_count()),
    };
    if delta <= 2 {
        // a path: walk it from an end
        let start = (0..g.vertex_count()).find(|&v| g.degree(v) == 1).unwrap();
        let (mut vs, mut es) = (vec![start], Vec::new());
        let (mut cur, mut via) = (start, usize::MAX);
        while let Some(&(w, e)) = g.neighbors(cur).iter().find(|&&(_, e)| e != via) {
            vs.push(w);
            es.push(e);
            cur = w;
            via = e;
        }
        let start_color = if delta == 1 { 0 } else { 1 };
        let recs = propagate(sg, &vs, &es, start_color);
        let mut partial = PartialColoring::new(g.edge_count());
        partial.apply(g, recs);
        return Ok((partial.into_coloring(delta)?, cases));
    }
    painter.n = delta;
    for (i, part) in dec.parts.iter().enumerate() {
        let (vs, es) = (&part.vertices, &part.edges);
        match (part.kind, i) {
            (CactusPartKind::Edge, 0) => painter.edge(vs[0], vs[1], es[0], color_at(delta, 0)),
            (CactusPartKind::Cycle, 0) => painter.first_cycle(vs, es),
            (CactusPartKind::Edge, _) => {
                cases.edge += 1;
                let alpha = color_at(delta, painter.free.smallest(vs[0], None));
                painter.edge(vs[0], vs[1], es[0], alpha);
            }
            (CactusPartKind::Cycle, _) => painter.attached_cycle(vs, es, &mut cases),
        }
    }
    Ok((painter.partial.into_coloring(delta)?, cases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::exact_chromatic_index;
    use crate::graph::{verify_coloring, Signature};

    fn check_order(g: &Graph, dec: &CactusDecomposition) {
        let mut covered = vec![false; g.vertex_count()];
        let mut edges = vec![false; g.edge_count()];
        for (i, part) in dec.parts.iter().enumerate() {
            let shared: Vec<usize> = part.vertices.iter().copied().filter(|&v| covered[v]).collect();
            if i == 0 {
                assert!(shared.is_empty());
            } else {
                assert_eq!(shared, vec![part.attachment.unwrap()]);
                assert_eq!(part.vertices[0], part.attachment.unwrap());
            }
            for &v in &part.vertices {
                covered[v] = true;
            }
            for &e in &part.edges {
                assert!(!edges[e]);
                edges[e] = true;
            }
            let len = part.vertices.len();
            for (j, &e) in part.edges.iter().enumerate() {
                let (a, b) = g.endpoints(e);
                let (x, y) = (part.vertices[j], part.vertices[(j + 1) % len]);
                assert!((a, b) == (x, y) || (a, b) == (y, x));
            }
        }
        assert!(edges.iter().all(|&x| x));
    }

    #[test]
    fn tree_parts_are_edges() {
        let g = Graph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (0, 5)]).unwrap();
        let dec = decompose_cactus(&g).unwrap();
        assert_eq!(dec.parts.len(), 5);
        assert!(dec.parts.iter().all(|p| p.kind == CactusPartKind::Edge));
        check_order(&g, &dec);
    }

    #[test]
    fn triangle_with_pendant() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let dec = decompose_cactus(&g).unwrap();
        let kinds: Vec<_> = dec.parts.iter().map(|p| p.kind).collect();
        assert_eq!(kinds, vec![CactusPartKind::Cycle, CactusPartKind::Edge]);
        check_order(&g, &dec);
    }

    #[test]
    fn rejects_non_cacti() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(decompose_cactus(&k4), Err(Error::NotACactus(_))));
        let theta = Graph::new(5, [(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(matches!(decompose_cactus(&theta), Err(Error::NotACactus(_))));
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(decompose_cactus(&split), Err(Error::Disconnected));
    }

    #[test]
    fn star_uses_every_color() {
        let g = Graph::new(6, (1..6).map(|i| (0, i))).unwrap();
        for bits in 0..32u128 {
            let sg = SignedGraph::new(g.clone(), Signature::from_bits(5, bits)).unwrap();
            let c = color_cactus(&sg).unwrap();
            assert_eq!(c.n(), 5);
            assert!(verify_coloring(&sg, &c).unwrap().is_valid());
            let mut at_center: Vec<i32> = (0..5).map(|e| c.get(&g, 0, e)).collect();
            at_center.sort_unstable();
            assert_eq!(at_center, vec![-2, -1, 0, 1, 2]);
        }
    }

    #[test]
    fn triangle_with_three_pendants() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        for bits in 0..64u128 {
            let sg = SignedGraph::new(g.clone(), Signature::from_bits(6, bits)).unwrap();
            let c = color_cactus(&sg).unwrap();
            assert_eq!(c.n(), 3);
            assert!(verify_coloring(&sg, &c).unwrap().is_valid());
            assert_eq!(exact_chromatic_index(&sg).unwrap().chi, 3);
        }
    }

    #[test]
    fn bowtie_all_signatures() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        for bits in 0..64u128 {
            let sg = SignedGraph::new(g.clone(), Signature::from_bits(6, bits)).unwrap();
            let c = color_cactus(&sg).unwrap();
            assert_eq!(c.n(), 4);
            assert!(verify_coloring(&sg, &c).unwrap().is_valid());
            assert_eq!(exact_chromatic_index(&sg).unwrap().chi, 4);
        }
    }

    #[test]
    fn every_branch_fires() {
        // Δ = 3: the attachment vertex's earlier edge took 0 (at 1) or ±1 (at 2)
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 1), (0, 4)]).unwrap();
        let h = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2)]).unwrap();
        let mut total = CactusCases::default();
        for bits in 0..32u128 {
            let sg = SignedGraph::new(g.clone(), Signature::from_bits(5, bits)).unwrap();
            let (c, cases) = color_cactus_traced(&sg).unwrap();
            assert!(verify_coloring(&sg, &c).unwrap().is_valid());
            total.opposite_delta3 += cases.opposite_delta3;
            let sh = SignedGraph::new(h.clone(), Signature::from_bits(5, bits)).unwrap();
            let (c, cases) = color_cactus_traced(&sh).unwrap();
            assert!(verify_coloring(&sh, &c).unwrap().is_valid());
            total.distinct += cases.distinct;
            total.edge += cases.edge;
        }
        let bow = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let (_, cases) = color_cactus_traced(&SignedGraph::positive(bow)).unwrap();
        total.opposite_fresh_pair += cases.opposite_fresh_pair;
        assert!(total.opposite_delta3 > 0, "{total:?}");
        assert!(total.opposite_fresh_pair > 0, "{total:?}");
        assert!(total.distinct > 0, "{total:?}");
        assert!(total.edge > 0, "{total:?}");
    }

    #[test]
    fn rejects_cycles_and_handles_paths() {
        let c5 = SignedGraph::positive(Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap());
        assert_eq!(color_cactus(&c5), Err(Error::IsACycle));
        let p = SignedGraph::new(
            Graph::new(4, [(1, 2), (0, 1), (2, 3)]).unwrap(),
            Signature::from_bits(3, 0b101),
        )
        .unwrap();
        let c = color_cactus(&p).unwrap();
        assert_eq!(c.n(), 2);
        assert!(verify_coloring(&p, &c).unwrap().is_valid());
        let e = SignedGraph::positive(Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(color_cactus(&e).unwrap().n(), 1);
    }
}
