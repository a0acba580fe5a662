//! Shared corpora and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgcolor::{Graph, IncidenceColoring, Sign, Signature, SignedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn wheel(n: usize) -> Graph {
    let r = n - 1;
    let spokes = (1..=r).map(|i| (0, i));
    Graph::new(n, spokes.chain((1..=r).map(|i| (i, i % r + 1)))).unwrap()
}

pub fn bipartite(r: usize, t: usize) -> Graph {
    Graph::new(r + t, (0..r).flat_map(|i| (0..t).map(move |j| (i, r + j)))).unwrap()
}

/// Random graph with at least one edge; each pair present with probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.random_bool(p))
            .collect();
        if !edges.is_empty() {
            return Graph::new(n, edges).unwrap();
        }
    }
}

pub fn random_signature(rng: &mut ChaCha8Rng, m: usize) -> Signature {
    Signature::new(
        (0..m)
            .map(|_| if rng.random_bool(0.5) { Sign::Negative } else { Sign::Positive })
            .collect(),
    )
}

fn key(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    (g.vertex_count(), g.edges().to_vec())
}

/// Named small graphs followed by distinct random graphs, all on at most
/// `max_n` vertices, `size` graphs in total.
pub fn corpus(size: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |g: Graph, out: &mut Vec<Graph>| {
        if g.vertex_count() <= max_n && out.len() < size && seen.insert(key(&g)) {
            out.push(g);
        }
    };
    for n in 2..=max_n {
        push(complete(n), &mut out);
        push(Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap(), &mut out);
        push(Graph::new(n, (1..n).map(|i| (0, i))).unwrap(), &mut out);
        if n >= 3 {
            push(cycle(n), &mut out);
        }
        if n >= 4 {
            push(wheel(n), &mut out);
        }
    }
    for (r, t) in [(1, 2), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4)] {
        push(bipartite(r, t), &mut out);
    }
    let mut rng = rng(seed);
    while out.len() < size {
        let n = rng.random_range(2..=max_n);
        let p = rng.random_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        push(g, &mut out);
    }
    out
}

/// Whether every cycle of `sg` is positive, by checking every cycle of the
/// cycle space: each fundamental cycle of a BFS tree must have an even number
/// of negative edges. Written without the library's switching code.
pub fn balanced_oracle(sg: &SignedGraph) -> bool {
    let g = sg.graph();
    let n = g.vertex_count();
    let mut parity = vec![None; n];
    for s in 0..n {
        if parity[s].is_some() {
            continue;
        }
        parity[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, e) in g.neighbors(v) {
                let p = parity[v].unwrap() ^ sg.sign(e).is_negative();
                match parity[w] {
                    None => {
                        parity[w] = Some(p);
                        stack.push(w);
                    }
                    Some(q) if q != p => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Independent validity check of an incidence coloring.
pub fn valid_oracle(sg: &SignedGraph, c: &IncidenceColoring) -> bool {
    let g = sg.graph();
    let n = c.n() as i32;
    let in_range = |x: i32| {
        if x == 0 {
            n % 2 == 1
        } else {
            x.abs() <= n / 2
        }
    };
    if c.edge_count() != g.edge_count() {
        return false;
    }
    let mut at: Vec<Vec<i32>> = vec![Vec::new(); g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let [cu, cv] = c.edge_colors(e);
        if !in_range(cu) || !in_range(cv) || cu != -sg.sign(e).value() * cv {
            return false;
        }
        at[u].push(cu);
        at[v].push(cv);
    }
    at.iter_mut().all(|cs| {
        let len = cs.len();
        cs.sort_unstable();
        cs.dedup();
        cs.len() == len
    })
}

/// Smallest `n` admitting a coloring, by trying every assignment of the
/// first-endpoint colors. Only for tiny graphs.
pub fn brute_force_chi(sg: &SignedGraph) -> usize {
    let g = sg.graph();
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    for n in g.max_degree()..=g.max_degree() + 1 {
        let k = (n / 2) as i32;
        let colors: Vec<i32> = (-k..=k).filter(|&x| x != 0 || n % 2 == 1).collect();
        let total = colors.len().pow(m as u32);
        for mut code in 0..total {
            let mut cs = Vec::with_capacity(m);
            for e in 0..m {
                let cu = colors[code % colors.len()];
                code /= colors.len();
                cs.push([cu, -sg.sign(e).value() * cu]);
            }
            if valid_oracle(sg, &IncidenceColoring::from_edge_colors(n, cs)) {
                return n;
            }
        }
    }
    panic!("no coloring with Δ + 1 colors");
}
