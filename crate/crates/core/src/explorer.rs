//! Exhaustive enumeration of Eulerian graphs and the 2-switch meta-graph on them.

use std::collections::{HashMap, VecDeque};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::generator::{in_p, ParamPair};
use crate::graph::{pair_count, pair_index, Graph};
use crate::hamilton::{find_cycle, CycleSearch};
use crate::switch::eulerian_2switch_neighbors;

pub const LABELED_MAX_N: usize = 7;
pub const UNLABELED_MAX_N: usize = 8;
/// Diameter is only computed up to this many meta nodes.
pub const DIAMETER_MAX_NODES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Labeled,
    Unlabeled,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "labeled" => Ok(Mode::Labeled),
            "unlabeled" => Ok(Mode::Unlabeled),
            other => Err(Error::Precondition(format!("unknown mode {other:?}"))),
        }
    }
}

/// The even graph on `n` vertices whose restriction to `0..n-1` is `mask`
/// (bit `k` = `k`-th pair of `0..n-1` in row-major order).
fn even_graph(n: usize, mask: u64, sub_pairs: &[(usize, usize)]) -> Graph {
    let last = n - 1;
    let mut words = vec![0u64; pair_count(n).div_ceil(64)];
    let mut odd = vec![false; n];
    let mut set = |i: usize, j: usize| {
        let k = pair_index(n, i, j);
        words[k / 64] |= 1 << (k % 64);
    };
    let mut bits = mask;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (i, j) = sub_pairs[k];
        set(i, j);
        odd[i] ^= true;
        odd[j] ^= true;
    }
    for v in 0..last {
        if odd[v] {
            set(v, last);
        }
    }
    Graph::from_words(n, words)
}

fn labeled_eulerian(n: usize, m: usize) -> Vec<Graph> {
    let sub_pairs: Vec<(usize, usize)> = (0..n - 1)
        .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << sub_pairs.len();
    let chunk = 1u64 << 12.min(sub_pairs.len());
    (0..total.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|c| {
            let sub_pairs = &sub_pairs;
            (c * chunk..((c + 1) * chunk).min(total)).filter_map(move |mask| {
                if (mask.count_ones() as usize) > m {
                    return None;
                }
                let g = even_graph(n, mask, sub_pairs);
                (g.edge_count() == m && g.is_connected()).then_some(g)
            })
        })
        .collect()
}

/// All Eulerian graphs with `n` vertices and `m` edges.
///
/// Labeled mode lists every labeled graph in enumeration order. Unlabeled
/// mode keeps one canonical representative per isomorphism class, sorted by
/// canonical code.
pub fn enumerate_eulerian(n: usize, m: usize, mode: Mode) -> Result<Vec<Graph>> {
    let limit = match mode {
        Mode::Labeled => LABELED_MAX_N,
        Mode::Unlabeled => UNLABELED_MAX_N,
    };
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n < 3 || m > pair_count(n) {
        return Ok(Vec::new());
    }
    let labeled = labeled_eulerian(n, m);
    match mode {
        Mode::Labeled => Ok(labeled),
        Mode::Unlabeled => {
            let mut keyed: Vec<(Vec<u8>, Graph)> = labeled
                .par_iter()
                .map(|g| {
                    let (code, perm) = canonical_form(g)?;
                    Ok((code, g.relabel(&perm)?))
                })
                .collect::<Result<_>>()?;
            keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            keyed.dedup_by(|a, b| a.0 == b.0);
            Ok(keyed.into_iter().map(|(_, g)| g).collect())
        }
    }
}

#[derive(Clone, Debug)]
pub struct MetaGraph {
    pub params: ParamPair,
    pub nodes: Vec<Graph>,
    /// Sorted neighbor indices per node.
    pub adjacency: Vec<Vec<usize>>,
    pub mode: Mode,
}

impl MetaGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Meta-graph on a complete node list from [`enumerate_eulerian`].
///
/// In unlabeled mode the nodes must be canonical representatives; a 2-switch
/// landing on an isomorphic copy of the same node adds no loop.
pub fn build_meta(nodes: Vec<Graph>, mode: Mode) -> Result<MetaGraph> {
    let first = nodes
        .first()
        .ok_or_else(|| Error::Precondition("empty node list".into()))?;
    let (n, m) = (first.n(), first.edge_count());
    for g in &nodes {
        if g.n() != n || g.edge_count() != m {
            return Err(Error::ParameterMismatch {
                n1: n,
                m1: m,
                n2: g.n(),
                m2: g.edge_count(),
            });
        }
        if !g.is_eulerian() {
            return Err(Error::NotEulerian);
        }
    }
    let key = |g: &Graph| -> Result<Vec<u8>> {
        match mode {
            Mode::Labeled => Ok(g.membership_words().iter().flat_map(|w| w.to_le_bytes()).collect()),
            Mode::Unlabeled => Ok(canonical_form(g)?.0),
        }
    };
    let mut index = HashMap::with_capacity(nodes.len());
    for (i, g) in nodes.iter().enumerate() {
        if index.insert(key(g)?, i).is_some() {
            return Err(Error::Precondition(format!("node {i} is a duplicate")));
        }
    }
    let adjacency = nodes
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut out = Vec::new();
            for (_, h) in eulerian_2switch_neighbors(g)? {
                let j = *index.get(&key(&h)?).ok_or_else(|| {
                    Error::Precondition(format!("neighbor of node {i} missing from node list"))
                })?;
                if j != i {
                    out.push(j);
                }
            }
            out.sort_unstable();
            out.dedup();
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MetaGraph {
        params: in_p(n, m),
        nodes,
        adjacency,
        mode,
    })
}

fn bfs_distances(adj: &[Vec<usize>], start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].expect("queued vertices have distances");
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn meta_connected(mg: &MetaGraph) -> bool {
    mg.nodes.is_empty() || bfs_distances(&mg.adjacency, 0).iter().all(Option::is_some)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonOutcome {
    Yes(Vec<usize>),
    No,
    Timeout,
}

/// Hamiltonian cycle in the meta-graph within `budget` wall-clock time.
///
/// A single node counts as a cycle, and so do two adjacent nodes.
pub fn meta_hamiltonian(mg: &MetaGraph, budget: Duration) -> HamiltonOutcome {
    match mg.nodes.len() {
        0 => HamiltonOutcome::No,
        1 => HamiltonOutcome::Yes(vec![0]),
        2 if mg.adjacency[0].contains(&1) => HamiltonOutcome::Yes(vec![0, 1]),
        2 => HamiltonOutcome::No,
        _ if !meta_connected(mg) => HamiltonOutcome::No,
        _ => match find_cycle(&mg.adjacency, Some(Instant::now() + budget)) {
            CycleSearch::Found(c) => HamiltonOutcome::Yes(c),
            CycleSearch::Absent => HamiltonOutcome::No,
            CycleSearch::TimedOut => HamiltonOutcome::Timeout,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetaStats {
    pub nodes: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    /// Absent when disconnected or above [`DIAMETER_MAX_NODES`].
    pub diameter: Option<usize>,
}

pub fn meta_stats(mg: &MetaGraph) -> MetaStats {
    let degrees = mg.adjacency.iter().map(Vec::len);
    let connected = meta_connected(mg);
    let diameter = (connected && !mg.nodes.is_empty() && mg.nodes.len() <= DIAMETER_MAX_NODES).then(|| {
        (0..mg.nodes.len())
            .into_par_iter()
            .map(|s| {
                bfs_distances(&mg.adjacency, s)
                    .into_iter()
                    .map(|d| d.expect("connected"))
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    });
    MetaStats {
        nodes: mg.nodes.len(),
        edges: mg.edge_count(),
        min_degree: degrees.clone().min().unwrap_or(0),
        max_degree: degrees.max().unwrap_or(0),
        connected,
        diameter,
    }
}
