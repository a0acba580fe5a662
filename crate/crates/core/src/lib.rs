//! Edge coloring of signed graphs in the incidence model.
//!
//! A signed graph is a simple graph with a `±1` sign on every edge. An
//! `n`-edge-coloring assigns to every incidence `v:e` a color from the
//! symmetric set `M_n` such that `f(u:uv) = -σ(uv)·f(v:uv)` on every edge and
//! incidences at a common vertex get distinct colors. The chromatic index
//! `χ′(G, σ)` always lies in `{Δ, Δ+1}`.
//!
//! The crate is organised as:
//!
//! * [`graph`]: graphs, signatures, color sets, incidence colorings, verification.
//! * [`switching`]: balance, switching, switching equivalence, class representatives.
//! * [`exact`]: exact chromatic-index search and regular decompositions.
//! * [`colorers`]: constructive `Δ`-colorings for paths, cycles, cacti, wheels,
//!   necklaces and complete bipartite graphs, plus a dispatcher.
//! * [`classify`]: class ratio, the `1±`/`2±` verdicts and the `K_{r,r}` probe.
//! * [`gen`]: deterministic generators for every family.
//! * [`format`]: the `.sg` and `.col` text formats.

pub mod classify;
pub mod colorers;
mod error;
pub mod exact;
pub mod format;
pub mod gen;
pub mod graph;
pub mod par;
pub mod switching;

pub use error::{Error, Result};
pub use graph::{
    color_set, verify_coloring, ColorSet, Graph, Incidence, IncidenceColoring, PartialColoring,
    Sign, Signature, SignedGraph, VerificationReport, Violation,
};
