//! Scans over graph streams. Per-theorem statistics are commutative
//! aggregates and violation lists are sorted before emission, so a report
//! does not depend on how the stream was split across workers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{check_all, TheoremId};
use crate::error::{Error, Result};
use crate::families::{generate, sweep_specs, ExpectedValues, FamilySpec};
use crate::graph::Graph;
use crate::solvers;

pub const EXHAUSTIVE_MAX_ORDER: usize = 7;
pub const RANDOM_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanMeta {
    pub mode: String,
    pub n: usize,
    /// Graphs checked.
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_prob: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremStats {
    pub id: TheoremId,
    /// Number of graphs on which the theorem applied.
    pub applicable: u64,
    pub tight: u64,
    /// Largest `rhs − lhs` among applicable graphs.
    pub max_slack: Option<i64>,
    /// graph6 strings of violating graphs, sorted.
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub meta: ScanMeta,
    pub theorems: Vec<TheoremStats>,
}

impl ScanReport {
    pub fn violation_count(&self) -> usize {
        self.theorems.iter().map(|t| t.violations.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.violation_count() == 0
    }

    pub fn stats(&self, id: TheoremId) -> &TheoremStats {
        &self.theorems[id.index()]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Default)]
struct Tally {
    count: u64,
    stats: Vec<(u64, u64, Option<i64>, Vec<String>)>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            count: 0,
            stats: vec![(0, 0, None, Vec::new()); TheoremId::ALL.len()],
        }
    }

    fn add(mut self, g: &Graph) -> Self {
        self.count += 1;
        // Solver errors only arise for inapplicable parameters, which the
        // applicability gates exclude before solving.
        let checks = check_all(g).expect("applicable theorems have feasible parameters");
        for c in checks {
            let s = &mut self.stats[c.id.index()];
            if !c.applicable {
                continue;
            }
            s.0 += 1;
            s.1 += c.tight as u64;
            s.2 = Some(s.2.map_or(c.slack, |m: i64| m.max(c.slack)));
            if c.violated() {
                s.3.push(g.to_graph6());
            }
        }
        self
    }

    #[cfg(feature = "parallel")]
    fn merge(mut self, other: Tally) -> Self {
        self.count += other.count;
        for (a, b) in self.stats.iter_mut().zip(other.stats) {
            a.0 += b.0;
            a.1 += b.1;
            a.2 = match (a.2, b.2) {
                (Some(x), Some(y)) => Some(x.max(y)),
                (x, y) => x.or(y),
            };
            a.3.extend(b.3);
        }
        self
    }

    fn into_report(self, mut meta: ScanMeta) -> ScanReport {
        meta.count = self.count;
        let theorems = TheoremId::ALL
            .iter()
            .zip(self.stats)
            .map(|(&id, (applicable, tight, max_slack, mut violations))| {
                violations.sort();
                violations.dedup();
                TheoremStats {
                    id,
                    applicable,
                    tight,
                    max_slack,
                    violations,
                }
            })
            .collect();
        ScanReport { meta, theorems }
    }
}

#[cfg(feature = "parallel")]
fn tally_indexed<F>(len: u64, graph_at: F) -> Tally
where
    F: Fn(u64) -> Graph + Sync,
{
    use rayon::prelude::*;
    (0..len)
        .into_par_iter()
        .fold(Tally::new, |t, i| t.add(&graph_at(i)))
        .reduce(Tally::new, Tally::merge)
}

#[cfg(not(feature = "parallel"))]
fn tally_indexed<F>(len: u64, graph_at: F) -> Tally
where
    F: Fn(u64) -> Graph + Sync,
{
    (0..len).fold(Tally::new(), |t, i| t.add(&graph_at(i)))
}

/// Runs `f` on a pool of `jobs` workers (`None`: one per CPU). Without the
/// `parallel` feature this just calls `f`.
pub fn run_with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    {
        match jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        f()
    }
}

/// Checks every theorem on the given graphs.
pub fn scan_graphs(graphs: &[Graph], meta: ScanMeta) -> ScanReport {
    tally_indexed(graphs.len() as u64, |i| graphs[i as usize].clone()).into_report(meta)
}

/// All `2^(n(n−1)/2)` labelled graphs on `n` vertices, in increasing order of
/// their graph6 pair mask.
pub fn scan_exhaustive(n: usize) -> Result<ScanReport> {
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::OrderTooLargeForExhaustive(n));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let pairs = n * (n - 1) / 2;
    let tally = tally_indexed(1u64 << pairs, |mask| {
        Graph::from_pair_mask(n, mask).expect("mask within pair range")
    });
    Ok(tally.into_report(ScanMeta {
        mode: "exhaustive".into(),
        n,
        count: 0,
        seed: None,
        edge_prob: None,
    }))
}

/// Edge probability `num/den` in the open unit interval, sampled exactly by
/// drawing uniformly from `0..den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeProb {
    num: u64,
    den: u64,
}

impl EdgeProb {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num == 0 || num >= den {
            return Err(Error::InvalidScan(format!(
                "edge probability {num}/{den} is not in (0, 1)"
            )));
        }
        Ok(EdgeProb { num, den })
    }

    fn sample(self, rng: &mut impl Rng) -> bool {
        rng.random_range(0..self.den) < self.num
    }
}

impl fmt::Display for EdgeProb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for EdgeProb {
    type Err = Error;

    /// Accepts `a/b` or a decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidScan(format!("cannot parse edge probability `{s}`"));
        if let Some((a, b)) = s.split_once('/') {
            return EdgeProb::new(
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            );
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 12 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let den = 10u64.pow(frac.len() as u32);
        let frac_val: u64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let mut num = int * den + frac_val;
        let mut den = den;
        let g = gcd(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        EdgeProb::new(num, den)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// One `G(n, p)` sample; pairs are visited in graph6 order.
pub fn random_graph(n: usize, p: EdgeProb, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if p.sample(rng) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid order")
}

/// Tree decoded from a Prüfer sequence over `0..n` (length `n − 2`).
pub fn prufer_tree(n: usize, seq: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Graph::from_edge_list(n, &[]);
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidScan(format!(
            "Prüfer sequence for order {n} must have length {}",
            n - 2
        )));
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges)
}

fn check_random_args(n: usize, count: u64) -> Result<()> {
    if n == 0 || n > RANDOM_MAX_ORDER {
        return Err(Error::InvalidScan(format!(
            "order {n} outside 1..={RANDOM_MAX_ORDER}"
        )));
    }
    if count == 0 {
        return Err(Error::InvalidScan("sample count must be at least 1".into()));
    }
    Ok(())
}

/// `count` samples of `G(n, p)` from a ChaCha8 stream seeded with `seed`
/// (`SeedableRng::seed_from_u64`), generated sequentially and checked in
/// parallel.
pub fn scan_random(n: usize, count: u64, p: EdgeProb, seed: u64) -> Result<ScanReport> {
    check_random_args(n, count)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..count).map(|_| random_graph(n, p, &mut rng)).collect();
    Ok(scan_graphs(
        &graphs,
        ScanMeta {
            mode: "random".into(),
            n,
            count,
            seed: Some(seed),
            edge_prob: Some(p.to_string()),
        },
    ))
}

/// `count` uniformly random labelled trees via Prüfer sequences drawn from a
/// ChaCha8 stream seeded with `seed`.
pub fn scan_random_trees(n: usize, count: u64, seed: u64) -> Result<ScanReport> {
    check_random_args(n, count)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs = (0..count)
        .map(|_| {
            let seq: Vec<usize> = (0..n.saturating_sub(2))
                .map(|_| rng.random_range(0..n))
                .collect();
            prufer_tree(n, &seq)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(scan_graphs(
        &graphs,
        ScanMeta {
            mode: "trees".into(),
            n,
            count,
            seed: Some(seed),
            edge_prob: None,
        },
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyOutcome {
    pub spec: FamilySpec,
    pub name: String,
    pub graph6: String,
    pub expected: ExpectedValues,
    pub observed: BTreeMap<String, usize>,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySweepReport {
    pub meta: ScanMeta,
    pub families: Vec<FamilyOutcome>,
    pub theorems: Vec<TheoremStats>,
}

impl FamilySweepReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.mismatches.is_empty())
            && self.theorems.iter().all(|t| t.violations.is_empty())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Compares solver values with the closed forms on every sweep instance and
/// checks every theorem on them.
pub fn family_sweep() -> Result<FamilySweepReport> {
    let specs = sweep_specs();
    let mut families = Vec::new();
    let mut graphs = Vec::new();
    for spec in specs {
        let (g, expected) = generate(spec)?;
        let mut observed = BTreeMap::new();
        let mut mismatches = Vec::new();
        for (kind, want) in expected.parameters() {
            let got = solvers::compute(kind, &g)?.value;
            observed.insert(kind.token(), got);
            if got != want {
                mismatches.push(format!("{kind}: expected {want}, solver {got}"));
            }
        }
        for (name, want, got) in [
            ("leaves", expected.leaves, g.leaves().len()),
            ("supports", expected.supports, g.supports().len()),
        ] {
            if let Some(want) = want {
                observed.insert(name.into(), got);
                if got != want {
                    mismatches.push(format!("|{name}|: expected {want}, found {got}"));
                }
            }
        }
        families.push(FamilyOutcome {
            spec,
            name: spec.to_string(),
            graph6: g.to_graph6(),
            expected,
            observed,
            mismatches,
        });
        graphs.push(g);
    }
    let scan = scan_graphs(
        &graphs,
        ScanMeta {
            mode: "family-sweep".into(),
            n: graphs.iter().map(Graph::order).max().unwrap_or(0),
            count: 0,
            seed: None,
            edge_prob: None,
        },
    );
    Ok(FamilySweepReport {
        meta: scan.meta,
        families,
        theorems: scan.theorems,
    })
}
