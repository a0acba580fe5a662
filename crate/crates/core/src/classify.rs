//! Class `1±` / `2±` decisions, the class ratio, the matching-based
//! structural test, and the `K_{r,r}` probe.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::exact::{exact_chromatic_index_with, is_colorable, SolverOptions};
use crate::graph::{Graph, Sign, Signature, SignedGraph};
use crate::par;
use crate::switching::switching_class_representatives;
use crate::{Error, Result};

/// Default limit on the number of enumerated bits (`m - n + c`, or `m` when naive).
pub const DEFAULT_BUDGET: usize = 24;

/// A reduced non-negative fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = num.gcd(&den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "class_1pm")]
    Class1pm,
    #[serde(rename = "class_2pm")]
    Class2pm,
    #[serde(rename = "mixed")]
    Mixed,
}

impl Verdict {
    /// Short label: `1pm`, `2pm` or `mixed`.
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Class1pm => "1pm",
            Verdict::Class2pm => "2pm",
            Verdict::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RatioOptions {
    pub budget: usize,
    /// Enumerate all `2^m` signatures instead of one per switching class.
    pub naive: bool,
    pub parallel: bool,
    pub solver: SolverOptions,
}

impl Default for RatioOptions {
    fn default() -> Self {
        RatioOptions {
            budget: DEFAULT_BUDGET,
            naive: false,
            parallel: true,
            solver: SolverOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub delta: usize,
    pub verdict: Verdict,
    /// Enumerated signatures (one per switching class unless naive) with `χ′ = Δ`.
    pub classes_at_delta: u64,
    pub total_classes: u64,
    pub ratio: Ratio,
    pub naive: bool,
}

/// Class ratio: the fraction of signatures of `g` with `χ′ = Δ`.
///
/// By default one signature per switching class is solved; every class has
/// the same size `2^(n-c)` and `χ′` is switching invariant, so the fraction
/// over classes equals the fraction over all `2^m` signatures.
pub fn class_ratio(g: &Graph, opts: RatioOptions) -> Result<ClassReport> {
    let delta = g.max_degree();
    let m = g.edge_count();
    let bits = if opts.naive { m } else { g.cycle_rank() };
    if bits > opts.budget || bits >= 64 {
        return Err(Error::BudgetExceeded {
            what: if opts.naive { "edges" } else { "cycle rank" },
            value: bits,
            limit: opts.budget.min(63),
        });
    }
    let total = 1u64 << bits;
    let hits = if delta == 0 {
        total
    } else if opts.naive {
        par::count_where(total, opts.parallel, |i| {
            let sg = SignedGraph::new(g.clone(), Signature::from_bits(m, i.into()))?;
            is_colorable(&sg, delta, opts.solver)
        })?
    } else {
        let reps = switching_class_representatives(g);
        par::count_where(total, opts.parallel, |i| {
            let sg = SignedGraph::new(g.clone(), reps.get(i))?;
            is_colorable(&sg, delta, opts.solver)
        })?
    };
    let verdict = if hits == total {
        Verdict::Class1pm
    } else if hits == 0 {
        Verdict::Class2pm
    } else {
        Verdict::Mixed
    };
    Ok(ClassReport {
        delta,
        verdict,
        classes_at_delta: hits,
        total_classes: total,
        ratio: Ratio::new(hits, total),
        naive: opts.naive,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructuralReason {
    /// Even maximum degree never gives class `2±`.
    EvenDelta,
    /// Odd `Δ` and some matching covers every vertex of degree `Δ`.
    CoveringMatching,
    /// Odd `Δ` and no matching covers every vertex of degree `Δ`.
    NoCoveringMatching,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralResult {
    pub class_2pm: bool,
    pub delta: usize,
    pub reason: StructuralReason,
    /// Edge ids of a matching covering all `Δ`-vertices, when one exists.
    pub matching: Option<Vec<usize>>,
}

/// Class `2±` test without enumerating signatures: `Δ` odd and no matching
/// whose removal lowers the maximum degree.
pub fn is_class_2pm_structural(g: &Graph) -> StructuralResult {
    let delta = g.max_degree();
    if delta.is_multiple_of(2) {
        return StructuralResult {
            class_2pm: false,
            delta,
            reason: StructuralReason::EvenDelta,
            matching: None,
        };
    }
    let targets: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) == delta).collect();
    let matching = covering_matching(g, &targets);
    StructuralResult {
        class_2pm: matching.is_none(),
        delta,
        reason: if matching.is_some() {
            StructuralReason::CoveringMatching
        } else {
            StructuralReason::NoCoveringMatching
        },
        matching,
    }
}

/// A matching covering every vertex in `targets`, found by branch and bound.
///
/// Branches on the uncovered target with the fewest usable edges and
/// memoizes covered-vertex sets that are known to fail.
pub fn covering_matching(g: &Graph, targets: &[usize]) -> Option<Vec<usize>> {
    struct State<'a> {
        g: &'a Graph,
        is_target: Vec<bool>,
        covered: Vec<u64>,
        chosen: Vec<usize>,
        failed: HashSet<Vec<u64>>,
    }
    fn covered(s: &State, v: usize) -> bool {
        s.covered[v / 64] >> (v % 64) & 1 == 1
    }
    fn toggle(s: &mut State, v: usize) {
        s.covered[v / 64] ^= 1 << (v % 64);
    }
    fn search(s: &mut State) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..s.g.vertex_count() {
            if !s.is_target[v] || covered(s, v) {
                continue;
            }
            let free = s.g.neighbors(v).iter().filter(|&&(w, _)| !covered(s, w)).count();
            if free == 0 {
                return false;
            }
            if best.is_none_or(|(_, f)| free < f) {
                best = Some((v, free));
            }
        }
        let Some((v, _)) = best else {
            return true;
        };
        if s.failed.contains(&s.covered) {
            return false;
        }
        // partners that are targets themselves first: they cover two at once
        let mut options: Vec<(usize, usize)> = s
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&(w, _)| !covered(s, w))
            .collect();
        options.sort_by_key(|&(w, _)| !s.is_target[w]);
        for (w, e) in options {
            toggle(s, v);
            toggle(s, w);
            s.chosen.push(e);
            if search(s) {
                return true;
            }
            s.chosen.pop();
            toggle(s, v);
            toggle(s, w);
        }
        s.failed.insert(s.covered.clone());
        false
    }
    let n = g.vertex_count();
    let mut is_target = vec![false; n];
    for &t in targets {
        is_target[t] = true;
    }
    let mut s = State {
        g,
        is_target,
        covered: vec![0; n.div_ceil(64)],
        chosen: Vec::new(),
        failed: HashSet::new(),
    };
    if search(&mut s) {
        s.chosen.sort_unstable();
        Some(s.chosen)
    } else {
        None
    }
}

/// Calls `visit` on every matching of `g` (as sorted edge ids); stops early when it returns `true`.
fn for_each_matching(g: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        g: &Graph,
        e: usize,
        used: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if e == g.edge_count() {
            return visit(chosen);
        }
        if rec(g, e + 1, used, chosen, visit) {
            return true;
        }
        let (a, b) = g.endpoints(e);
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            chosen.push(e);
            let found = rec(g, e + 1, used, chosen, visit);
            chosen.pop();
            used[a] = false;
            used[b] = false;
            if found {
                return true;
            }
        }
        false
    }
    rec(g, 0, &mut vec![false; g.vertex_count()], &mut Vec::new(), visit)
}

/// Exhaustive version of [`covering_matching`] over all matchings.
pub fn covering_matching_brute_force(g: &Graph, targets: &[usize]) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_matching(g, &mut |m| {
        let mut hit = vec![false; g.vertex_count()];
        for &e in m {
            let (a, b) = g.endpoints(e);
            hit[a] = true;
            hit[b] = true;
        }
        if targets.iter().all(|&t| hit[t]) {
            found = Some(m.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Whether removing some matching lowers the maximum degree, by checking
/// every matching directly.
pub fn degree_lowering_matching_exists(g: &Graph) -> bool {
    let delta = g.max_degree();
    if delta == 0 {
        return false;
    }
    for_each_matching(g, &mut |m| {
        let mut deg = g.degrees();
        for &e in m {
            let (a, b) = g.endpoints(e);
            deg[a] -= 1;
            deg[b] -= 1;
        }
        deg.iter().all(|&d| d < delta)
    })
}

/// Verdict by enumeration, checked against the structural test.
pub fn signed_class(g: &Graph, opts: RatioOptions) -> Result<ClassReport> {
    let report = class_ratio(g, opts)?;
    let structural = is_class_2pm_structural(g);
    if (report.verdict == Verdict::Class2pm) != structural.class_2pm {
        return Err(Error::Invariant(format!(
            "enumeration says {} but the structural test says class_2pm = {}",
            report.verdict, structural.class_2pm
        )));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug)]
pub struct ProbeOptions {
    /// Maximum number of signatures to solve; when `2^(r²)` fits, all are solved.
    pub trials: u64,
    pub seed: u64,
    pub parallel: bool,
    pub solver: SolverOptions,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            trials: 1000,
            seed: 0,
            parallel: true,
            solver: SolverOptions::default(),
        }
    }
}

/// One solved signature of `K_{r,r}`, signs listed in edge order (`u_i v_j` row by row).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeCase {
    pub signature: String,
    pub negative_edges: usize,
    pub chi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub r: usize,
    pub delta: usize,
    pub exhaustive: bool,
    pub seed: u64,
    pub checked: u64,
    /// Signatures for which `χ′ = Δ` is predicted (odd `r`, or an even number of negative edges).
    pub predicted_delta: u64,
    /// Of those, how many reached `χ′ = Δ`.
    pub predicted_delta_confirmed: u64,
    /// Signatures with even `r` and an odd number of negative edges.
    pub proven_direction_checked: u64,
    /// Signatures that break the proven direction (must be empty).
    pub proven_violations: Vec<ProbeCase>,
    /// Signatures where `χ′ = Δ` was predicted but `χ′ = Δ + 1`.
    pub counterexamples: Vec<ProbeCase>,
}

/// `K_{r,r}` with parts `0..r` and `r..2r`, edges `(i, r + j)` in row-major order.
pub fn complete_bipartite_rr(r: usize) -> Result<Graph> {
    Graph::new(2 * r, (0..r).flat_map(|i| (0..r).map(move |j| (i, r + j))))
}

/// Solves signatures of `K_{r,r}` and compares `χ′` with the prediction that
/// `χ′ = Δ` unless `r` is even and the number of negative edges is odd.
pub fn probe_conjecture(r: usize, opts: ProbeOptions) -> Result<ProbeReport> {
    if r == 0 {
        return Err(Error::InvalidSpec("r must be positive".into()));
    }
    let g = complete_bipartite_rr(r)?;
    let m = g.edge_count();
    let exhaustive = m < 64 && (1u64 << m) <= opts.trials;
    let signatures: Vec<u128> = if exhaustive {
        (0..1u128 << m).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mask = if m >= 128 { u128::MAX } else { (1u128 << m) - 1 };
        // the all-positive signature is always among the samples
        std::iter::once(0)
            .chain((1..opts.trials).map(|_| rng.random::<u128>() & mask))
            .collect()
    };
    let cases = par::map_indices(signatures.len() as u64, opts.parallel, |i| {
        let sig = Signature::from_bits(m, signatures[i as usize]);
        let sg = SignedGraph::new(g.clone(), sig)?;
        let chi = exact_chromatic_index_with(&sg, opts.solver)?.chi;
        Ok(ProbeCase {
            signature: sg.signature().signs().iter().map(|s| s.to_string()).collect(),
            negative_edges: sg.signature().negative_count(),
            chi,
        })
    })?;
    let delta = r;
    let mut report = ProbeReport {
        r,
        delta,
        exhaustive,
        seed: opts.seed,
        checked: cases.len() as u64,
        predicted_delta: 0,
        predicted_delta_confirmed: 0,
        proven_direction_checked: 0,
        proven_violations: Vec::new(),
        counterexamples: Vec::new(),
    };
    for case in cases {
        if r.is_multiple_of(2) && case.negative_edges % 2 == 1 {
            report.proven_direction_checked += 1;
            if case.chi != delta + 1 {
                report.proven_violations.push(case);
            }
        } else {
            report.predicted_delta += 1;
            if case.chi == delta {
                report.predicted_delta_confirmed += 1;
            } else {
                report.counterexamples.push(case);
            }
        }
    }
    Ok(report)
}

/// Parses a `+`/`-` string as produced in [`ProbeCase::signature`].
pub fn parse_sign_string(s: &str) -> Option<Signature> {
    s.chars()
        .map(|c| match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()
        .map(Signature::new)
}
