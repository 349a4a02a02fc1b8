//! Which `(n, m)` admit a simple Eulerian graph, and an explicit witness for
//! each of them.
//!
//! A pair is feasible iff `3 <= n <= m <= C(n,2)`, `m` is not `C(n,2) - 1` or
//! `C(n,2) - 2` for odd `n`, and `m` is not within `n/2 - 1` of `C(n,2)` for
//! even `n`. [`generate`] builds a witness by induction on `n`: split an edge
//! of a witness for `(n-1, m-1)` when that pair is feasible, otherwise fall
//! back to one of three direct constructions near the complete graph.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{pair_count, Edge, Graph};
use crate::switch::eulerian_2switch_neighbors;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Feasibility {
    Feasible,
    /// Violates `3 <= n <= m <= C(n,2)`.
    InfeasibleSmall,
    /// `n` odd and `m = C(n,2) - i` for `i` in `{1, 2}`.
    InfeasibleOddTop,
    /// `n` even and `m = C(n,2) - i` for `i` in `{0, .., n/2 - 1}`.
    InfeasibleEvenTop,
}

impl Feasibility {
    pub fn is_feasible(self) -> bool {
        self == Feasibility::Feasible
    }

    /// Which of the three membership conditions fails (1-based), if any.
    pub fn violated_condition(self) -> Option<u8> {
        match self {
            Feasibility::Feasible => None,
            Feasibility::InfeasibleSmall => Some(1),
            Feasibility::InfeasibleOddTop => Some(2),
            Feasibility::InfeasibleEvenTop => Some(3),
        }
    }
}

impl fmt::Display for Feasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Feasibility::Feasible => "feasible",
            Feasibility::InfeasibleSmall => {
                "condition 1 fails: need 3 <= n <= m <= C(n,2)"
            }
            Feasibility::InfeasibleOddTop => {
                "condition 2 fails: for odd n, m must not be C(n,2) - 1 or C(n,2) - 2"
            }
            Feasibility::InfeasibleEvenTop => {
                "condition 3 fails: for even n, m must not be C(n,2) - i with 0 <= i <= n/2 - 1"
            }
        })
    }
}

/// An `(n, m)` pair with its classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamPair {
    pub n: usize,
    pub m: usize,
    pub classification: Feasibility,
}

impl ParamPair {
    pub fn is_feasible(&self) -> bool {
        self.classification.is_feasible()
    }

    fn require_feasible(&self) -> Result<()> {
        if self.is_feasible() {
            Ok(())
        } else {
            Err(Error::Infeasible {
                n: self.n,
                m: self.m,
                class: self.classification,
            })
        }
    }
}

/// Classifies `(n, m)`. Total.
pub fn in_p(n: usize, m: usize) -> ParamPair {
    let classification = if n < 3 || m < n || m > pair_count(n) {
        Feasibility::InfeasibleSmall
    } else {
        let gap = pair_count(n) - m;
        if n % 2 == 1 && (gap == 1 || gap == 2) {
            Feasibility::InfeasibleOddTop
        } else if n % 2 == 0 && gap < n / 2 {
            Feasibility::InfeasibleEvenTop
        } else {
            Feasibility::Feasible
        }
    };
    ParamPair { n, m, classification }
}

/// The construction [`generate`] uses for a feasible pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Triangle,
    EdgeSplit,
    LargeCase,
    HalfPartition,
    ComplementApex,
}

/// Dispatch for a feasible pair. Errors on infeasible input.
pub fn construction_for(n: usize, m: usize) -> Result<Construction> {
    in_p(n, m).require_feasible()?;
    if n == 3 {
        return Ok(Construction::Triangle);
    }
    if in_p(n - 1, m - 1).is_feasible() {
        return Ok(Construction::EdgeSplit);
    }
    let missing = pair_count(n) - m;
    if missing < n {
        return Ok(Construction::LargeCase);
    }
    if n % 2 == 0 && missing == n {
        return Ok(Construction::HalfPartition);
    }
    if n % 2 == 1 && missing <= (3 * n - 7) / 2 {
        return Ok(Construction::ComplementApex);
    }
    Err(Error::Internal(format!(
        "no construction for feasible pair ({n}, {m})"
    )))
}

/// An Eulerian graph with exactly `n` vertices and `m` edges. Deterministic.
pub fn generate(n: usize, m: usize) -> Result<Graph> {
    let g = match construction_for(n, m)? {
        Construction::Triangle => Graph::complete(3),
        Construction::EdgeSplit => {
            let smaller = generate(n - 1, m - 1)?;
            let e = smaller.edges()[0];
            edge_split(&smaller, e)?
        }
        Construction::LargeCase => large_case(n, m)?,
        Construction::HalfPartition => half_partition_case(n)?,
        Construction::ComplementApex => complement_apex_case(n, pair_count(n) - m)?,
    };
    debug_assert!(g.is_eulerian() && g.n() == n && g.edge_count() == m);
    Ok(g)
}

/// Replace edge `uv` by a path `u - w - v` through a new vertex `w = n`.
pub fn edge_split(g: &Graph, e: Edge) -> Result<Graph> {
    if e.v() >= g.n() || !g.has(e) {
        return Err(Error::EdgeAbsent(e));
    }
    let w = g.n();
    let mut h = g.extended(w + 1);
    h.remove_edge(e)?;
    h.insert_edge(Edge::of(e.u(), w))?;
    h.insert_edge(Edge::of(e.v(), w))?;
    Ok(h)
}

/// Witness for feasible `(n, m)` with `m >= C(n,2) - n + 1`; `j = C(n,2) - m`.
///
/// Odd `n`: `K_n` minus the cycle `0-1-..-(j-1)-0` (nothing removed when `j = 0`).
/// Even `n`: `K_{n-1}` minus the matching `{01, 23, ..}` of size `n-1-j`, with
/// apex `n-1` joined to the matched vertices. When that matching is empty
/// (`j = n-1`) the apex would be isolated, so the path `0-1-2` is removed
/// from `K_{n-1}` instead and the apex joined to `0` and `2`.
pub fn large_case(n: usize, m: usize) -> Result<Graph> {
    let pair = in_p(n, m);
    pair.require_feasible()?;
    if m + n < pair_count(n) + 1 {
        return Err(Error::Precondition(format!(
            "large case needs m >= C(n,2) - n + 1, got ({n}, {m})"
        )));
    }
    let missing = pair_count(n) - m;
    let mut g = Graph::complete(n);
    if n % 2 == 1 {
        if missing > 0 {
            // feasibility rules out 1 and 2
            let cycle: Vec<usize> = (0..missing).collect();
            for e in Graph::cycle_on(n, &cycle)?.edges() {
                g.remove_edge(e)?;
            }
        }
    } else {
        let apex = n - 1;
        for v in 0..apex {
            g.remove_edge(Edge::of(v, apex))?;
        }
        let matching_size = n - 1 - missing;
        if matching_size == 0 {
            for (a, b) in [(0, 1), (1, 2)] {
                g.remove_edge(Edge::of(a, b))?;
            }
            g.insert_edge(Edge::of(0, apex))?;
            g.insert_edge(Edge::of(2, apex))?;
        } else {
            for k in 0..matching_size {
                g.remove_edge(Edge::of(2 * k, 2 * k + 1))?;
                g.insert_edge(Edge::of(2 * k, apex))?;
                g.insert_edge(Edge::of(2 * k + 1, apex))?;
            }
        }
    }
    Ok(g)
}

/// `K_n` minus the matching `{i, i + n/2}` minus the cycle `0-1-..-(n/2-1)-0`.
/// Needs even `n >= 6`; has `C(n,2) - n` edges.
pub fn half_partition_case(n: usize) -> Result<Graph> {
    if n % 2 == 1 || n < 6 {
        return Err(Error::Precondition(format!(
            "half partition needs even n >= 6, got {n}"
        )));
    }
    let half = n / 2;
    let mut g = Graph::complete(n);
    for i in 0..half {
        g.remove_edge(Edge::of(i, i + half))?;
        g.remove_edge(Edge::of(i, (i + 1) % half))?;
    }
    Ok(g)
}

/// Complement of `generate(n-1, j)` inside `K_{n-1}`, plus an apex `n-1`
/// joined to every other vertex. Needs odd `n >= 5`, `n <= j <= (3n-7)/2`,
/// and `(n-1, j)` feasible; has `C(n,2) - j` edges.
pub fn complement_apex_case(n: usize, j: usize) -> Result<Graph> {
    if n % 2 == 0 || n < 5 || j < n || 2 * j + 7 > 3 * n {
        return Err(Error::Precondition(format!(
            "complement apex case needs odd n >= 5 and n <= j <= (3n-7)/2, got n = {n}, j = {j}"
        )));
    }
    let inner = generate(n - 1, j)?;
    let apex = n - 1;
    let mut g = inner.complement().extended(n);
    for v in 0..apex {
        g.insert_edge(Edge::of(v, apex))?;
    }
    Ok(g)
}

/// Random walk of `steps` uniform moves in the Eulerian 2-switch graph,
/// starting from [`generate`]. Not uniform over the Eulerian graphs.
pub fn random_eulerian(n: usize, m: usize, seed: u64, steps: usize) -> Result<Graph> {
    let mut g = generate(n, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..steps {
        let mut neighbors = eulerian_2switch_neighbors(&g)?;
        if neighbors.is_empty() {
            break;
        }
        let pick = rng.gen_range(0..neighbors.len());
        g = neighbors.swap_remove(pick).1;
    }
    Ok(g)
}
