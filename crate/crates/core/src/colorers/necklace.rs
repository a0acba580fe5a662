//! Necklaces: `k` internally disjoint paths between two hubs `u` and `v`.

use serde::Serialize;

use super::path::{color_path, ColorPair};
use crate::graph::{Graph, IncidenceColoring, PartialColoring, SignedGraph};
use crate::{Error, Result};

/// Hubs `u < v` (unless fixed by hints) and the `u`–`v` paths as vertex
/// sequences from `u` to `v`, sorted by length (ties by second vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NecklaceStructure {
    pub u: usize,
    pub v: usize,
    pub paths: Vec<Vec<usize>>,
}

impl NecklaceStructure {
    pub fn k(&self) -> usize {
        self.paths.len()
    }
}

/// Recognizes a necklace. A cycle is accepted (as `k = 2`) only when `hubs`
/// names two of its vertices; otherwise it is reported as [`Error::IsACycle`].
pub fn recognize_necklace(g: &Graph, hubs: Option<(usize, usize)>) -> Result<NecklaceStructure> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Err(Error::NotANecklace("graph is disconnected".into()));
    }
    let special: Vec<usize> = (0..n).filter(|&x| g.degree(x) != 2).collect();
    let (u, v) = match (special.as_slice(), hubs) {
        ([], None) => return Err(Error::IsACycle),
        ([], Some((a, b))) => {
            if a == b || a >= n || b >= n {
                return Err(Error::NotANecklace(format!("invalid hubs {a}, {b}")));
            }
            (a, b)
        }
        (&[a, b], hint) => {
            if g.degree(a) != g.degree(b) || g.degree(a) < 3 {
                return Err(Error::NotANecklace(format!(
                    "hub degrees {} and {} differ or are below 3",
                    g.degree(a),
                    g.degree(b)
                )));
            }
            match hint {
                Some((x, y)) if (x, y) == (a, b) || (x, y) == (b, a) => (x, y),
                Some((x, y)) => {
                    return Err(Error::NotANecklace(format!("hubs {x}, {y} do not match {a}, {b}")))
                }
                None => (a, b),
            }
        }
        _ => {
            return Err(Error::NotANecklace(format!(
                "{} vertices of degree other than 2",
                special.len()
            )))
        }
    };
    let mut paths = Vec::with_capacity(g.degree(u));
    let mut visited = 2;
    for &(first, first_edge) in g.neighbors(u) {
        let mut p = vec![u];
        let (mut cur, mut via) = (first, first_edge);
        while cur != v && cur != u {
            p.push(cur);
            visited += 1;
            let &(next, e) = g.neighbors(cur).iter().find(|&&(_, e)| e != via).unwrap();
            cur = next;
            via = e;
        }
        if cur == u {
            return Err(Error::NotANecklace(format!("a path from {u} returns to {u}")));
        }
        p.push(v);
        paths.push(p);
    }
    if visited != n {
        return Err(Error::NotANecklace("vertices off the hub paths".into()));
    }
    paths.sort_by_key(|p| (p.len(), p[1]));
    Ok(NecklaceStructure { u, v, paths })
}

/// One colored piece of the construction.
enum Piece {
    Path { vertices: Vec<usize>, pair: i32, anchor: Option<i32> },
    Zero(usize, usize),
    /// A single edge colored `color` at its first vertex.
    Fixed(usize, usize, i32),
}

fn tail(p: &[usize]) -> &[usize] {
    &p[1..]
}

/// `p` from `v` back to the vertex after `u`, i.e. without both hubs' first step.
fn rev_inner(p: &[usize]) -> Vec<usize> {
    p[1..p.len() - 1].iter().rev().copied().collect()
}

fn pieces(sg: &SignedGraph, s: &NecklaceStructure) -> Vec<Piece> {
    let (u, gs) = (s.u, &s.paths);
    let k = gs.len();
    let mut out = Vec::new();
    if k % 2 == 1 {
        // base: G1, G2, G3; 0 on u–G2[1] and v–G3[-2]
        let (g1, g2, g3) = (&gs[0], &gs[1], &gs[2]);
        out.push(Piece::Zero(u, g2[1]));
        out.push(Piece::Zero(s.v, g3[g3.len() - 2]));
        let mut p: Vec<usize> = tail(g2).to_vec();
        p.extend(g1.iter().rev().skip(1));
        p.extend(&g3[1..g3.len() - 1]);
        out.push(Piece::Path { vertices: p, pair: 1, anchor: None });
        let mut zero_nbr = g2[1];
        for step in 1..=(k - 3) / 2 {
            let (a, b) = (&gs[2 * step + 1], &gs[2 * step + 2]);
            out.retain(|x| !matches!(x, Piece::Zero(h, w) if *h == u && *w == zero_nbr));
            let mut p = vec![zero_nbr];
            p.extend(b.iter());
            p.extend(rev_inner(a));
            out.push(Piece::Path { vertices: p, pair: step as i32 + 1, anchor: None });
            out.push(Piece::Zero(u, a[1]));
            zero_nbr = a[1];
        }
    } else {
        // base: G1..G4; ±1 path through u then G1 then v, with u:u·G3[1] = 1
        let (g1, g2, g3, g4) = (&gs[0], &gs[1], &gs[2], &gs[3]);
        let mut a = vec![g3[1]];
        a.extend(g1.iter());
        a.push(g2[g2.len() - 2]);
        let first = sg.graph().edge_between(g3[1], u).unwrap();
        out.push(Piece::Path { vertices: a, pair: 1, anchor: Some(-sg.sigma(first)) });
        let mut b: Vec<usize> = g2[..g2.len() - 1].iter().rev().copied().collect();
        b.extend(tail(g4));
        b.extend(rev_inner(g3));
        out.push(Piece::Path { vertices: b, pair: 2, anchor: None });
        let mut one_nbr = g3[1];
        for step in 1..=(k - 4) / 2 {
            let (a, b) = (&gs[2 * step + 2], &gs[2 * step + 3]);
            out.push(Piece::Fixed(u, a[1], 1));
            let mut p = vec![one_nbr];
            p.extend(b.iter());
            p.extend(rev_inner(a));
            out.push(Piece::Path { vertices: p, pair: step as i32 + 2, anchor: None });
            one_nbr = a[1];
        }
    }
    out
}

/// `Δ`-coloring of a signed necklace with `k ≥ 3` paths.
pub fn color_necklace(sg: &SignedGraph) -> Result<IncidenceColoring> {
    color_necklace_with(sg, &recognize_necklace(sg.graph(), None)?)
}

pub fn color_necklace_with(sg: &SignedGraph, s: &NecklaceStructure) -> Result<IncidenceColoring> {
    let g = sg.graph();
    if s.k() < 3 {
        return Err(Error::IsACycle);
    }
    let mut partial = PartialColoring::new(g.edge_count());
    // a recoloring path is applied after the edge it takes over
    for piece in pieces(sg, s) {
        match piece {
            Piece::Path { vertices, pair, anchor } => {
                partial.apply(g, color_path(sg, &vertices, ColorPair::Pm(pair), anchor)?);
            }
            Piece::Zero(a, b) => partial.apply(g, color_path(sg, &[a, b], ColorPair::Zero, None)?),
            Piece::Fixed(a, b, c) => partial.apply(g, color_path(sg, &[a, b], ColorPair::Pm(c), Some(c))?),
        }
    }
    partial.into_coloring(s.k())
}
