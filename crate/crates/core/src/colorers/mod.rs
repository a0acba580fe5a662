//! Constructive colorings for the families with a known chromatic index, and
//! a dispatcher that picks the first one that applies.

pub mod bipartite;
pub mod cactus;
pub mod necklace;
pub mod path;
pub mod wheel;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use bipartite::{
    bipartite_decomposition, color_complete_bipartite, recognize_complete_bipartite,
    BipartiteDecomposition, BipartiteParts,
};
pub use cactus::{color_cactus, decompose_cactus, CactusDecomposition, CactusPart, CactusPartKind};
pub use necklace::{color_necklace, color_necklace_with, recognize_necklace, NecklaceStructure};
pub use path::{color_cycle, color_path, walks, ColorPair, Walk};
pub use wheel::{color_wheel, recognize_wheel, wheel_decomposition, WheelDecomposition, WheelStructure};

use crate::exact::{exact_chromatic_index_with, SolverOptions};
use crate::graph::{verify_coloring, IncidenceColoring, PartialColoring, SignedGraph};
use crate::{Error, Result};

/// The coloring method that produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Path,
    Cycle,
    Cactus,
    Wheel,
    Necklace,
    CompleteBipartite,
    Exact,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Path,
        Method::Cycle,
        Method::Cactus,
        Method::Wheel,
        Method::Necklace,
        Method::CompleteBipartite,
        Method::Exact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Path => "path",
            Method::Cycle => "cycle",
            Method::Cactus => "cactus",
            Method::Wheel => "wheel",
            Method::Necklace => "necklace",
            Method::CompleteBipartite => "complete_bipartite",
            Method::Exact => "exact",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('-', "_");
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || (s == "bipartite" && *m == Method::CompleteBipartite))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown method {s:?}")))
    }
}

/// Colors a path graph with `±1` (a single edge with `0`).
pub fn color_path_graph(sg: &SignedGraph) -> Result<IncidenceColoring> {
    let g = sg.graph();
    if g.edge_count() == 0
        || g.edge_count() + 1 != g.vertex_count()
        || g.max_degree() > 2
        || !g.is_connected()
    {
        return Err(Error::NotAPath("graph is not a path".into()));
    }
    let all: Vec<usize> = (0..g.edge_count()).collect();
    let walk = walks(g, &all)?.remove(0);
    let (start, n) = if g.edge_count() == 1 { (0, 1) } else { (1, 2) };
    let mut partial = PartialColoring::new(g.edge_count());
    partial.apply(g, path::propagate(sg, &walk.vertices, &walk.edges, start));
    partial.into_coloring(n)
}

/// Runs one method without falling back.
pub fn color_with(sg: &SignedGraph, method: Method, opts: SolverOptions) -> Result<IncidenceColoring> {
    let c = match method {
        Method::Path => color_path_graph(sg)?,
        Method::Cycle => color_cycle(sg)?,
        Method::Cactus => color_cactus(sg)?,
        Method::Wheel => color_wheel(sg)?,
        Method::Necklace => color_necklace(sg)?,
        Method::CompleteBipartite => color_complete_bipartite(sg)?,
        Method::Exact => exact_chromatic_index_with(sg, opts)?.witness,
    };
    if !verify_coloring(sg, &c)?.is_valid() {
        return Err(Error::Invariant(format!("{method} colorer produced an invalid coloring")));
    }
    Ok(c)
}

/// Tries the constructive colorers in order and falls back to the exact solver.
///
/// Only the exact fallback can fail, with [`Error::BudgetExceeded`] on graphs
/// beyond its size guard (unless `opts.force`).
pub fn auto_color_with(sg: &SignedGraph, opts: SolverOptions) -> Result<(IncidenceColoring, Method)> {
    for method in Method::ALL {
        match color_with(sg, method, opts) {
            Ok(c) => return Ok((c, method)),
            Err(e @ Error::Invariant(_)) => return Err(e),
            Err(e) if method == Method::Exact => return Err(e),
            Err(_) => {}
        }
    }
    unreachable!("the exact method either succeeds or errors")
}

pub fn auto_color(sg: &SignedGraph) -> Result<(IncidenceColoring, Method)> {
    auto_color_with(sg, SolverOptions::default())
}
