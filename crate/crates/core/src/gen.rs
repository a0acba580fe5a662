//! Deterministic generators for the graph families and for signatures.
//!
//! Random choices use ChaCha8 seeded from a `u64`, so a spec plus seed always
//! yields the same labeled graph.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{Graph, Sign, Signature};
use crate::{Error, Result};

pub const DEFAULT_CYCLE_PROB: f64 = 0.5;
pub const DEFAULT_MAX_CYCLE: usize = 6;

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    /// Path on `vertices` vertices.
    Path { vertices: usize },
    Cycle { vertices: usize },
    /// `K_{1,leaves}` with center 0.
    Star { leaves: usize },
    /// `W_n`: hub 0 and rim `1..n` in order.
    Wheel { vertices: usize },
    /// Hubs 0 and 1 joined by one path per entry of `lengths`.
    Necklace { lengths: Vec<usize> },
    /// Parts `0..r` and `r..r+t`.
    CompleteBipartite { r: usize, t: usize },
    /// Grown by attaching an edge or a cycle of length `3..=max_cycle` at a
    /// random existing vertex until `vertices` vertices exist.
    RandomCactus {
        vertices: usize,
        seed: u64,
        cycle_prob: f64,
        max_cycle: usize,
    },
    /// Two copies of `K_{2k,2k}` plus a matching on one side and an apex,
    /// with the apexes joined through one extra vertex.
    Class2pm { k: usize },
    /// `triangles` triangles in a row, consecutive ones sharing a vertex.
    TriangleChain { triangles: usize },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Necklace { .. } => "necklace",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
            FamilySpec::RandomCactus { .. } => "random-cactus",
            FamilySpec::Class2pm { .. } => "class2pm",
            FamilySpec::TriangleChain { .. } => "triangle-chain",
        }
    }

    /// Builds a spec from a family name and its parameters as written on the
    /// command line: sizes as integers, lists comma separated.
    pub fn parse(family: &str, params: &[String], seed: Option<u64>) -> Result<FamilySpec> {
        let ints = |s: &str| -> Result<Vec<usize>> {
            s.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidSpec(format!("expected an integer, got {x:?}")))
                })
                .collect()
        };
        let all: Vec<usize> = params
            .iter()
            .map(|p| ints(p))
            .collect::<Result<Vec<_>>>()?
            .concat();
        let one = || -> Result<usize> {
            match all.as_slice() {
                [x] => Ok(*x),
                _ => Err(Error::InvalidSpec(format!("{family} takes one integer parameter"))),
            }
        };
        let spec = match family.replace('_', "-").as_str() {
            "path" => FamilySpec::Path { vertices: one()? },
            "cycle" => FamilySpec::Cycle { vertices: one()? },
            "star" => FamilySpec::Star { leaves: one()? },
            "wheel" => FamilySpec::Wheel { vertices: one()? },
            "necklace" => FamilySpec::Necklace { lengths: all.clone() },
            "complete-bipartite" | "bipartite" => match all.as_slice() {
                [r, t] => FamilySpec::CompleteBipartite { r: *r, t: *t },
                _ => return Err(Error::InvalidSpec("complete-bipartite takes R,T".into())),
            },
            "random-cactus" | "cactus" => {
                let (vertices, max_cycle) = match all.as_slice() {
                    [v] => (*v, DEFAULT_MAX_CYCLE),
                    [v, l] => (*v, *l),
                    _ => return Err(Error::InvalidSpec("random-cactus takes N[,MAX_CYCLE]".into())),
                };
                FamilySpec::RandomCactus {
                    vertices,
                    seed: seed.unwrap_or(0),
                    cycle_prob: DEFAULT_CYCLE_PROB,
                    max_cycle,
                }
            }
            "class2pm" => FamilySpec::Class2pm { k: one()? },
            "triangle-chain" => FamilySpec::TriangleChain { triangles: one()? },
            _ => return Err(Error::InvalidSpec(format!("unknown family {family:?}"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family_name())?;
        match self {
            FamilySpec::Path { vertices } | FamilySpec::Cycle { vertices } | FamilySpec::Wheel { vertices } => {
                write!(f, " {vertices}")
            }
            FamilySpec::Star { leaves } => write!(f, " {leaves}"),
            FamilySpec::Necklace { lengths } => {
                let l: Vec<String> = lengths.iter().map(|x| x.to_string()).collect();
                write!(f, " {}", l.join(","))
            }
            FamilySpec::CompleteBipartite { r, t } => write!(f, " {r},{t}"),
            FamilySpec::RandomCactus {
                vertices,
                seed,
                cycle_prob,
                max_cycle,
            } => write!(f, " {vertices} seed={seed} cycle_prob={cycle_prob} max_cycle={max_cycle}"),
            FamilySpec::Class2pm { k } => write!(f, " {k}"),
            FamilySpec::TriangleChain { triangles } => write!(f, " {triangles}"),
        }
    }
}

/// Structural facts known from construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Metadata {
    pub family: String,
    pub hub: Option<usize>,
    pub parts: Option<(Vec<usize>, Vec<usize>)>,
    pub necklace_hubs: Option<(usize, usize)>,
    pub seed: Option<u64>,
}

impl Metadata {
    /// `key value` lines suitable for file comments.
    pub fn comment_lines(&self) -> Vec<String> {
        let list = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",");
        let mut out = vec![format!("family {}", self.family)];
        if let Some(h) = self.hub {
            out.push(format!("hub {}", h + 1));
        }
        if let Some((a, b)) = &self.parts {
            out.push(format!("parts {} | {}", list(a), list(b)));
        }
        if let Some((u, v)) = self.necklace_hubs {
            out.push(format!("hubs {} {}", u + 1, v + 1));
        }
        if let Some(s) = self.seed {
            out.push(format!("seed {s}"));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub meta: Metadata,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    let mut meta = Metadata {
        family: spec.to_string(),
        ..Default::default()
    };
    let graph = match *spec {
        FamilySpec::Path { vertices } => {
            if vertices < 2 {
                return Err(invalid("path needs at least 2 vertices"));
            }
            Graph::new(vertices, (1..vertices).map(|i| (i - 1, i)))?
        }
        FamilySpec::Cycle { vertices } => {
            if vertices < 3 {
                return Err(invalid("cycle needs at least 3 vertices"));
            }
            Graph::new(vertices, (0..vertices).map(|i| (i, (i + 1) % vertices)))?
        }
        FamilySpec::Star { leaves } => {
            if leaves < 1 {
                return Err(invalid("star needs at least 1 leaf"));
            }
            meta.hub = Some(0);
            Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))?
        }
        FamilySpec::Wheel { vertices } => {
            if vertices < 4 {
                return Err(invalid("wheel needs at least 4 vertices"));
            }
            let r = vertices - 1;
            let spokes = (1..=r).map(|i| (0, i));
            let rim = (1..=r).map(|i| (i, i % r + 1));
            meta.hub = Some(0);
            Graph::new(vertices, spokes.chain(rim))?
        }
        FamilySpec::Necklace { ref lengths } => {
            if lengths.len() < 2 {
                return Err(invalid("necklace needs at least 2 paths"));
            }
            if lengths.contains(&0) {
                return Err(invalid("necklace path lengths must be positive"));
            }
            if lengths.iter().filter(|&&l| l == 1).count() > 1 {
                return Err(invalid("two paths of length 1 would form a multi-edge"));
            }
            let mut edges = Vec::new();
            let mut next = 2;
            for &len in lengths {
                let mut prev = 0;
                for _ in 1..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, 1));
            }
            meta.necklace_hubs = Some((0, 1));
            Graph::new(next, edges)?
        }
        FamilySpec::CompleteBipartite { r, t } => {
            if r == 0 || t == 0 {
                return Err(invalid("both parts must be non-empty"));
            }
            meta.parts = Some(((0..r).collect(), (r..r + t).collect()));
            Graph::new(r + t, (0..r).flat_map(|i| (0..t).map(move |j| (i, r + j))))?
        }
        FamilySpec::RandomCactus {
            vertices,
            seed,
            cycle_prob,
            max_cycle,
        } => {
            if vertices < 1 {
                return Err(invalid("random cactus needs at least 1 vertex"));
            }
            if max_cycle < 3 || !(0.0..=1.0).contains(&cycle_prob) {
                return Err(invalid("need max_cycle >= 3 and 0 <= cycle_prob <= 1"));
            }
            meta.seed = Some(seed);
            random_cactus(vertices, seed, cycle_prob, max_cycle)?
        }
        FamilySpec::Class2pm { k } => generate_class2pm(k)?,
        FamilySpec::TriangleChain { triangles } => {
            if triangles < 1 {
                return Err(invalid("need at least 1 triangle"));
            }
            let edges = (0..triangles).flat_map(|i| {
                let a = 2 * i;
                [(a, a + 1), (a + 1, a + 2), (a, a + 2)]
            });
            Graph::new(2 * triangles + 1, edges)?
        }
    };
    Ok(Generated { graph, meta })
}

fn random_cactus(vertices: usize, seed: u64, cycle_prob: f64, max_cycle: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut count = 1;
    while count < vertices {
        let at = rng.random_range(0..count);
        let room = vertices - count;
        if room >= 2 && rng.random_bool(cycle_prob) {
            let len = rng.random_range(3..=max_cycle.min(room + 1));
            let mut prev = at;
            for _ in 1..len {
                edges.push((prev, count));
                prev = count;
                count += 1;
            }
            edges.push((prev, at));
        } else {
            edges.push((at, count));
            count += 1;
        }
    }
    Graph::new(vertices, edges)
}

/// The class `2±` graph with maximum degree `2k + 1` on `8k + 3` vertices.
///
/// Copy `c` uses vertices `c(4k+1) ..`: side `u` first, then side `v`, then
/// the apex joined to all of `v`. The last vertex joins the two apexes.
pub fn generate_class2pm(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(invalid("k must be at least 1"));
    }
    let side = 2 * k;
    let block = 2 * side + 1;
    let center = 2 * block;
    let mut edges = Vec::new();
    for c in 0..2 {
        let off = c * block;
        let (u, v, apex) = (off, off + side, off + 2 * side);
        for i in 0..side {
            for j in 0..side {
                edges.push((u + i, v + j));
            }
        }
        for i in 0..k {
            edges.push((u + 2 * i, u + 2 * i + 1));
        }
        for j in 0..side {
            edges.push((v + j, apex));
        }
        edges.push((apex, center));
    }
    Graph::new(center + 1, edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureMode {
    AllPositive,
    AllNegative,
    Random(u64),
    /// Bit `j` set makes edge `j` negative.
    Index(u128),
}

impl SignatureMode {
    /// `positive`, `negative`, `random` (uses `seed`), or `index:I`.
    pub fn parse(s: &str, seed: Option<u64>) -> Result<SignatureMode> {
        match s.replace('-', "_").as_str() {
            "positive" | "all_positive" => Ok(SignatureMode::AllPositive),
            "negative" | "all_negative" => Ok(SignatureMode::AllNegative),
            "random" => Ok(SignatureMode::Random(seed.unwrap_or(0))),
            other => other
                .strip_prefix("index:")
                .and_then(|i| i.parse().ok())
                .map(SignatureMode::Index)
                .ok_or_else(|| invalid(format!("unknown signature mode {s:?}"))),
        }
    }
}

pub fn generate_signature(g: &Graph, mode: SignatureMode) -> Result<Signature> {
    let m = g.edge_count();
    Ok(match mode {
        SignatureMode::AllPositive => Signature::all_positive(m),
        SignatureMode::AllNegative => Signature::all_negative(m),
        SignatureMode::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Signature::new(
                (0..m)
                    .map(|_| if rng.random_bool(0.5) { Sign::Negative } else { Sign::Positive })
                    .collect(),
            )
        }
        SignatureMode::Index(i) => {
            if m < 128 && i >> m != 0 {
                return Err(Error::IndexOutOfRange { index: i, edges: m });
            }
            Signature::from_bits(m, i)
        }
    })
}
