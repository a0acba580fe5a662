//! Wheels `W_n`: a hub joined to every vertex of an `(n-1)`-cycle.

use serde::Serialize;

use super::path::{color_path, color_walk, path_edges, ColorPair, Walk};
use crate::graph::{Graph, IncidenceColoring, PartialColoring, SignedGraph};
use crate::{Error, Result};

/// A recognized wheel: the hub and the rim in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WheelStructure {
    pub hub: usize,
    pub rim: Vec<usize>,
}

/// Edge-disjoint pieces covering a wheel, each colored with its own colors.
///
/// Paths are vertex sequences colored with `±(j+1)` in order. `cycle` (only
/// for `W_4`) is a balanced spanning cycle colored with `±1`, and
/// `zero_edges` are colored 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WheelDecomposition {
    pub paths: Vec<Vec<usize>>,
    pub cycle: Option<Vec<usize>>,
    pub zero_edges: Vec<(usize, usize)>,
}

/// Finds the hub and the rim order. For `K_4` every vertex is a hub; the
/// lowest-numbered one is used.
pub fn recognize_wheel(g: &Graph) -> Result<WheelStructure> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(Error::NotAWheel(format!("{n} vertices")));
    }
    if g.edge_count() != 2 * (n - 1) {
        return Err(Error::NotAWheel(format!("{} edges, expected {}", g.edge_count(), 2 * (n - 1))));
    }
    let hub = (0..n)
        .find(|&v| g.degree(v) == n - 1)
        .ok_or_else(|| Error::NotAWheel("no vertex adjacent to all others".into()))?;
    if let Some(v) = (0..n).find(|&v| v != hub && g.degree(v) != 3) {
        return Err(Error::NotAWheel(format!("rim vertex {v} has degree {}", g.degree(v))));
    }
    let rim_nbrs = |v: usize| g.neighbors(v).iter().map(|&(w, _)| w).filter(move |&w| w != hub);
    let start = if hub == 0 { 1 } else { 0 };
    let mut rim = vec![start];
    let mut prev = start;
    let mut cur = rim_nbrs(start).min().unwrap();
    while cur != start {
        rim.push(cur);
        let next = rim_nbrs(cur).find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
        if rim.len() > n {
            break;
        }
    }
    if rim.len() != n - 1 {
        return Err(Error::NotAWheel("rim is not a single cycle".into()));
    }
    Ok(WheelStructure { hub, rim })
}

/// Odd-order wheel paths on rim `v_0..v_{2k-1}` around hub `u`.
fn odd_paths(u: usize, rim: &[usize]) -> Vec<Vec<usize>> {
    let len = rim.len();
    let k = len / 2;
    let v = |i: usize| rim[i % len];
    let mut paths: Vec<Vec<usize>> = (0..k - 1)
        .map(|i| vec![v(i + 1), v(i), u, v(i + k), v(i + k + 1)])
        .collect();
    paths.push(vec![v(k), v(k - 1), u, v(len - 1), v(0)]);
    paths
}

/// Splits the wheel into the pieces used by [`color_wheel`].
///
/// `sg` is needed only for `W_4`, where the choice of perfect matching
/// depends on the signature.
pub fn wheel_decomposition(sg: &SignedGraph, ws: &WheelStructure) -> WheelDecomposition {
    let g = sg.graph();
    let (u, rim) = (ws.hub, &ws.rim);
    let n = rim.len() + 1;
    if n == 4 {
        let total = sg.signature().negative_count() % 2;
        let negative = |a: usize, b: usize| usize::from(sg.sign(g.edge_between(a, b).unwrap()).is_negative());
        // matching {u r_i, r_{i+1} r_{i+2}}; the rest is the 4-cycle u r_{i+1} r_i r_{i+2}
        for i in 0..3 {
            let (a, b, c) = (rim[i], rim[(i + 1) % 3], rim[(i + 2) % 3]);
            if (negative(u, a) + negative(b, c)) % 2 == total {
                return WheelDecomposition {
                    paths: Vec::new(),
                    cycle: Some(vec![u, b, a, c]),
                    zero_edges: vec![(u, a), (b, c)],
                };
            }
        }
        unreachable!("the three matchings' parities sum to the total parity");
    }
    if n % 2 == 1 {
        return WheelDecomposition {
            paths: odd_paths(u, rim),
            cycle: None,
            zero_edges: Vec::new(),
        };
    }
    // even order: the odd construction on all but the last rim vertex, whose
    // rim edges replace v_{n'-2} v_0 and whose spoke takes 0
    let extra = rim[rim.len() - 1];
    let mut paths = odd_paths(u, &rim[..rim.len() - 1]);
    let last = paths.last_mut().unwrap();
    last.insert(last.len() - 1, extra);
    WheelDecomposition {
        paths,
        cycle: None,
        zero_edges: vec![(u, extra)],
    }
}

/// Checks that the pieces are edge-disjoint and cover every edge.
pub fn check_wheel_decomposition(g: &Graph, d: &WheelDecomposition) -> Result<()> {
    let mut seen = vec![false; g.edge_count()];
    let mut mark = |e: usize| -> Result<()> {
        if std::mem::replace(&mut seen[e], true) {
            return Err(Error::InvalidDecomposition(format!("edge {e} used twice")));
        }
        Ok(())
    };
    for p in &d.paths {
        for e in path_edges(g, p)? {
            mark(e)?;
        }
    }
    if let Some(c) = &d.cycle {
        for i in 0..c.len() {
            let e = g
                .edge_between(c[i], c[(i + 1) % c.len()])
                .ok_or_else(|| Error::InvalidDecomposition("cycle edge missing".into()))?;
            mark(e)?;
        }
    }
    for &(a, b) in &d.zero_edges {
        let e = g
            .edge_between(a, b)
            .ok_or_else(|| Error::InvalidDecomposition(format!("no edge {a}-{b}")))?;
        mark(e)?;
    }
    if let Some(e) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidDecomposition(format!("edge {e} not covered")));
    }
    Ok(())
}

/// `Δ`-coloring of a signed wheel.
pub fn color_wheel(sg: &SignedGraph) -> Result<IncidenceColoring> {
    let g = sg.graph();
    let ws = recognize_wheel(g)?;
    let d = wheel_decomposition(sg, &ws);
    check_wheel_decomposition(g, &d)?;
    let mut partial = PartialColoring::new(g.edge_count());
    for (j, p) in d.paths.iter().enumerate() {
        let a = j as i32 + 1;
        partial.apply(g, color_path(sg, p, ColorPair::Pm(a), None)?);
    }
    if let Some(c) = &d.cycle {
        let mut edges = path_edges(g, c)?;
        edges.push(g.edge_between(c[c.len() - 1], c[0]).unwrap());
        let walk = Walk {
            vertices: c.clone(),
            edges,
            closed: true,
        };
        partial.apply(g, color_walk(sg, &walk, 1)?);
    }
    for &(a, b) in &d.zero_edges {
        partial.apply(g, color_path(sg, &[a, b], ColorPair::Zero, None)?);
    }
    partial.into_coloring(g.max_degree())
}
