//! Complete bipartite graphs `K_{r,t}` with `r ≠ t`.

use serde::Serialize;

use super::path::{color_path, path_edges, ColorPair};
use crate::graph::{Graph, IncidenceColoring, PartialColoring, SignedGraph};
use crate::{Error, Result};

/// The two sides of a complete bipartite graph, each sorted, `small.len() <= large.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteParts {
    pub small: Vec<usize>,
    pub large: Vec<usize>,
}

/// Paths `G_j` (vertex sequences) and, for odd `t`, the matching `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteDecomposition {
    pub paths: Vec<Vec<usize>>,
    pub matching: Vec<(usize, usize)>,
}

pub fn recognize_complete_bipartite(g: &Graph) -> Result<BipartiteParts> {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return Err(Error::NotCompleteBipartite);
    }
    let mut side = vec![u8::MAX; n];
    side[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[v];
                queue.push_back(w);
            } else if side[w] == side[v] {
                return Err(Error::NotCompleteBipartite);
            }
        }
    }
    let a: Vec<usize> = (0..n).filter(|&v| side[v] == 0).collect();
    let b: Vec<usize> = (0..n).filter(|&v| side[v] == 1).collect();
    if g.edge_count() != a.len() * b.len() {
        return Err(Error::NotCompleteBipartite);
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    Ok(BipartiteParts { small, large })
}

/// Builds the paths and matching for `r < t`.
pub fn bipartite_decomposition(parts: &BipartiteParts) -> Result<BipartiteDecomposition> {
    let (u, v) = (&parts.small, &parts.large);
    let (r, t) = (u.len(), v.len());
    if r == t {
        return Err(Error::EqualParts(r));
    }
    let paths = (0..t / 2)
        .map(|j| {
            let mut p = Vec::with_capacity(2 * r + 1);
            for (i, &ui) in u.iter().enumerate() {
                p.push(v[(2 * j + i) % t]);
                p.push(ui);
            }
            p.push(v[(2 * j + r) % t]);
            p
        })
        .collect();
    let matching = if t % 2 == 1 {
        (0..r).map(|i| (u[i], v[(i + t - 1) % t])).collect()
    } else {
        Vec::new()
    };
    Ok(BipartiteDecomposition { paths, matching })
}

/// Checks that the paths and matching are edge-disjoint and cover every edge.
pub fn check_bipartite_decomposition(g: &Graph, d: &BipartiteDecomposition) -> Result<()> {
    let mut seen = vec![false; g.edge_count()];
    let matching = d.matching.iter().map(|&(a, b)| {
        g.edge_between(a, b)
            .ok_or_else(|| Error::InvalidDecomposition(format!("no edge {a}-{b}")))
    });
    let path_edges = d
        .paths
        .iter()
        .map(|p| path_edges(g, p))
        .collect::<Result<Vec<_>>>()?;
    for e in path_edges.into_iter().flatten().map(Ok).chain(matching) {
        let e = e?;
        if std::mem::replace(&mut seen[e], true) {
            return Err(Error::InvalidDecomposition(format!("edge {e} used twice")));
        }
    }
    if let Some(e) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidDecomposition(format!("edge {e} not covered")));
    }
    Ok(())
}

/// `Δ`-coloring of a signed `K_{r,t}`, `r ≠ t`.
pub fn color_complete_bipartite(sg: &SignedGraph) -> Result<IncidenceColoring> {
    let g = sg.graph();
    let parts = recognize_complete_bipartite(g)?;
    let d = bipartite_decomposition(&parts)?;
    check_bipartite_decomposition(g, &d)?;
    let mut partial = PartialColoring::new(g.edge_count());
    for (j, p) in d.paths.iter().enumerate() {
        partial.apply(g, color_path(sg, p, ColorPair::Pm(j as i32 + 1), None)?);
    }
    for &(a, b) in &d.matching {
        partial.apply(g, color_path(sg, &[a, b], ColorPair::Zero, None)?);
    }
    partial.into_coloring(parts.large.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::exact_chromatic_index;
    use crate::graph::{verify_coloring, Signature};

    fn k(r: usize, t: usize) -> Graph {
        let edges: Vec<_> = (0..r).flat_map(|i| (0..t).map(move |j| (i, r + j))).collect();
        Graph::new(r + t, edges).unwrap()
    }

    #[test]
    fn k34_two_six_edge_paths() {
        let parts = recognize_complete_bipartite(&k(3, 4)).unwrap();
        let d = bipartite_decomposition(&parts).unwrap();
        assert_eq!(d.paths.len(), 2);
        assert!(d.paths.iter().all(|p| p.len() == 7));
        assert!(d.matching.is_empty());
        check_bipartite_decomposition(&k(3, 4), &d).unwrap();
    }

    #[test]
    fn k25_paths_and_matching() {
        let g = k(2, 5);
        let d = bipartite_decomposition(&recognize_complete_bipartite(&g).unwrap()).unwrap();
        assert_eq!(d.paths.len(), 2);
        assert_eq!(d.matching.len(), 2);
        check_bipartite_decomposition(&g, &d).unwrap();
        for seed in 0..16u128 {
            let bits = seed.wrapping_mul(0x2545_f491_4f6c_dd1d) & 0x3ff;
            let sg = SignedGraph::new(g.clone(), Signature::from_bits(10, bits)).unwrap();
            let c = color_complete_bipartite(&sg).unwrap();
            assert_eq!(c.n(), 5);
            assert!(verify_coloring(&sg, &c).unwrap().is_valid());
            assert_eq!(exact_chromatic_index(&sg).unwrap().chi, 5);
        }
    }

    #[test]
    fn swapped_sides_and_small_cases() {
        // larger side listed first
        let g = k(4, 1);
        let parts = recognize_complete_bipartite(&g).unwrap();
        assert_eq!(parts.small.len(), 1);
        let k12 = k(1, 2);
        for bits in 0..4u128 {
            let sg = SignedGraph::new(k12.clone(), Signature::from_bits(2, bits)).unwrap();
            let c = color_complete_bipartite(&sg).unwrap();
            assert_eq!(c.n(), 2);
            assert!(verify_coloring(&sg, &c).unwrap().is_valid());
        }
    }

    #[test]
    fn all_signatures_small_grid() {
        for (r, t) in [(1, 3), (2, 3), (1, 4), (2, 4), (3, 4)] {
            let g = k(r, t);
            let m = r * t;
            for bits in 0..(1u128 << m) {
                let sg = SignedGraph::new(g.clone(), Signature::from_bits(m, bits)).unwrap();
                let c = color_complete_bipartite(&sg).unwrap();
                assert_eq!(c.n(), t);
                assert!(verify_coloring(&sg, &c).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn rejections() {
        assert_eq!(
            color_complete_bipartite(&SignedGraph::positive(k(3, 3))),
            Err(Error::EqualParts(3))
        );
        let tri = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(recognize_complete_bipartite(&tri), Err(Error::NotCompleteBipartite));
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(recognize_complete_bipartite(&p4), Err(Error::NotCompleteBipartite));
    }
}
