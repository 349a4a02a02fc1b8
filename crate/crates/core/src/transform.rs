//! 2-switch sequences between labeled Eulerian graphs with equal `(n, m)`,
//! keeping every intermediate graph Eulerian.
//!
//! Both endpoints are first driven to one fixed labeled degree vector
//! ([`TargetDegrees`]) by balancing switches that move two units of degree
//! from a high vertex to a low one without disconnecting. The two balanced
//! graphs are then joined by degree-preserving switches that keep the graph
//! connected, and the second half is replayed backwards.
//!
//! Nothing here is shortest. Exact distances are available through
//! [`switch_distance`] for small graphs only.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generator::in_p;
use crate::graph::{Edge, Graph};
use crate::switch::{apply_switch, eulerian_2switch_neighbors, SwitchMove, SwitchSequence};

/// Default cap on stored states for [`switch_distance`] and the
/// degree-preserving fallback search.
pub const DEFAULT_STATE_CAP: usize = 2_000_000;

/// Degree vector with `i` vertices of degree `d` followed by `n - i` of degree `d + 2`.
///
/// Vertex `v` gets `d` when `v < i`; lower indices get the lower degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetDegrees {
    pub d: usize,
    pub i: usize,
    pub profile: Vec<usize>,
}

impl TargetDegrees {
    /// The balanced vector for any `n >= 1`, `m >= n`, without checking that
    /// an Eulerian graph with these counts exists.
    pub fn for_counts(n: usize, m: usize) -> Result<TargetDegrees> {
        if n == 0 || m < n {
            return Err(Error::Precondition(format!(
                "balanced degrees need 1 <= n <= m, got ({n}, {m})"
            )));
        }
        let d = 2 * (m / n);
        let i = n * (d + 2) / 2 - m;
        let profile = (0..n).map(|v| if v < i { d } else { d + 2 }).collect();
        Ok(TargetDegrees { d, i, profile })
    }

    pub fn target(&self, v: usize) -> usize {
        self.profile[v]
    }

    /// `sum_v |degrees[v] - target(v)|`.
    pub fn deviation(&self, degrees: &[usize]) -> usize {
        degrees
            .iter()
            .zip(&self.profile)
            .map(|(&a, &b)| a.abs_diff(b))
            .sum()
    }
}

/// Balanced degree vector for a feasible `(n, m)`.
pub fn target_degrees(n: usize, m: usize) -> Result<TargetDegrees> {
    let pair = in_p(n, m);
    if !pair.is_feasible() {
        return Err(Error::Infeasible {
            n,
            m,
            class: pair.classification,
        });
    }
    TargetDegrees::for_counts(n, m)
}

/// Parity-preserving 2-switch replacing `av, bv` by `au, bu`, chosen so the
/// result stays connected. Requires `g` Eulerian and `deg(v) > deg(u)`.
///
/// The first candidate pair (lowest indices in `N(v) \ N[u]`) is tried. If
/// it cuts off the component `K` containing `v`, the two lowest neighbors of
/// `v` inside `K` are switched instead; that never disconnects.
pub fn balancing_switch(g: &Graph, u: usize, v: usize) -> Result<SwitchMove> {
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let (du, dv) = (g.degree(u)?, g.degree(v)?);
    if dv <= du {
        return Err(Error::Precondition(format!(
            "need deg(v) > deg(u), got deg({v}) = {dv}, deg({u}) = {du}"
        )));
    }
    let candidates: Vec<usize> = g
        .neighbors(v)
        .into_iter()
        .filter(|&x| x != u && !g.has_edge(x, u))
        .collect();
    if candidates.len() < 2 {
        return Err(Error::Internal(format!(
            "fewer than two neighbors of {v} outside N[{u}]"
        )));
    }
    let make = |a: usize, b: usize| {
        SwitchMove::two([Edge::of(a, v), Edge::of(b, v)], [Edge::of(a, u), Edge::of(b, u)])
    };
    let first = make(candidates[0], candidates[1])?;
    let broken = apply_switch(g, &first)?;
    if broken.is_connected() {
        return Ok(first);
    }
    let comp = broken.components();
    let inside: Vec<usize> = broken
        .neighbors(v)
        .into_iter()
        .filter(|&x| comp[x] == comp[v])
        .collect();
    if inside.len() < 2 || comp[u] == comp[v] {
        return Err(Error::Internal("balancing fix-up preconditions fail".into()));
    }
    let fixed = make(inside[0], inside[1])?;
    let result = apply_switch(g, &fixed)?;
    if !result.is_connected() {
        return Err(Error::Internal("balancing fix-up disconnected the graph".into()));
    }
    Ok(fixed)
}

/// Drives an Eulerian graph to the [`TargetDegrees`] vector of its `(n, m)`
/// by balancing switches. Each move lowers the deviation by exactly 4.
pub fn equalize_degrees(g: &Graph) -> Result<(Graph, SwitchSequence)> {
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let target = target_degrees(g.n(), g.edge_count())?;
    let mut cur = g.clone();
    let mut moves = Vec::new();
    let mut deg = cur.degrees();
    let mut deviation = target.deviation(&deg);
    while deviation > 0 {
        let pick = |above: bool| {
            (0..deg.len())
                .filter(|&x| {
                    if above {
                        deg[x] > target.target(x)
                    } else {
                        deg[x] < target.target(x)
                    }
                })
                // max degree for the donor, min degree for the receiver; lowest index on ties
                .min_by_key(|&x| (if above { usize::MAX - deg[x] } else { deg[x] }, x))
                .expect("nonzero deviation leaves vertices on both sides")
        };
        let v = pick(true);
        let u = pick(false);
        let mv = balancing_switch(&cur, u, v)?;
        cur = apply_switch(&cur, &mv)?;
        deg = cur.degrees();
        let next = target.deviation(&deg);
        if next + 4 != deviation || !cur.is_eulerian() {
            return Err(Error::Internal("balancing step broke its contract".into()));
        }
        deviation = next;
        moves.push(mv);
    }
    Ok((cur, SwitchSequence::new(g.clone(), moves)))
}

/// Degree-preserving 2-switches of `g` (connectivity not checked), each with the
/// change it makes to `|E(g) Δ E(h)|`.
fn degree_preserving_swaps(g: &Graph, h: &Graph) -> Vec<(i32, SwitchMove, Graph)> {
    let edges = g.edges();
    let mut out = Vec::new();
    let score = |e: Edge, removing: bool| -> i32 {
        match (removing, h.has(e)) {
            (true, true) | (false, false) => 1,
            _ => -1,
        }
    };
    for (k, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[k + 1..] {
            let (a, b, c, d) = (e1.u(), e1.v(), e2.u(), e2.v());
            if a == c || a == d || b == c || b == d {
                continue;
            }
            for (x, y) in [(Edge::of(a, c), Edge::of(b, d)), (Edge::of(a, d), Edge::of(b, c))] {
                if g.has(x) || g.has(y) {
                    continue;
                }
                let delta = score(e1, true) + score(e2, true) + score(x, false) + score(y, false);
                let mv = SwitchMove::two([e1, e2], [x, y]).expect("distinct edges");
                let next = apply_switch(g, &mv).expect("applicable by construction");
                out.push((delta, mv, next));
            }
        }
    }
    out
}

/// Shortest run of connected degree-preserving switches from `start` to any
/// graph strictly closer to `target` in symmetric difference.
fn improving_path(start: &Graph, target: &Graph, cap: usize) -> Result<Vec<SwitchMove>> {
    let base = start.symmetric_difference_len(target);

    // Depth one: best improvement whose result stays connected.
    let mut first: Vec<(i32, SwitchMove, Graph)> = degree_preserving_swaps(start, target)
        .into_iter()
        .filter(|(delta, _, _)| *delta < 0)
        .collect();
    first.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
    if let Some((_, mv, _)) = first.into_iter().find(|(_, _, next)| next.is_connected()) {
        return Ok(vec![mv]);
    }

    // Otherwise breadth-first over connected graphs with the same degrees.
    let mut states: Vec<(Graph, usize, Option<SwitchMove>)> = vec![(start.clone(), 0, None)];
    let mut index: HashMap<Graph, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        let current = states[at].0.clone();
        let mut swaps = degree_preserving_swaps(&current, target);
        swaps.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
        for (_, mv, next) in swaps {
            if index.contains_key(&next) || !next.is_connected() {
                continue;
            }
            let improved = next.symmetric_difference_len(target) < base;
            states.push((next.clone(), at, Some(mv)));
            let id = states.len() - 1;
            if improved {
                let mut path = Vec::new();
                let mut k = id;
                while let Some(mv) = states[k].2.clone() {
                    path.push(mv);
                    k = states[k].1;
                }
                path.reverse();
                return Ok(path);
            }
            if states.len() > cap {
                return Err(Error::StateCapExceeded { cap });
            }
            index.insert(next, id);
            queue.push_back(id);
        }
    }
    Err(Error::Internal(
        "no connected degree-preserving path reaches the target".into(),
    ))
}

/// Degree-preserving 2-switches from `g` to `h`, every intermediate graph
/// connected. Both inputs must be connected with identical labeled degrees.
///
/// Each round takes the connected swap that most reduces `|E(g) Δ E(h)|`;
/// when none does, a breadth-first search finds the nearest connected graph
/// with smaller difference (this covers swaps that first repair a cut).
pub fn degree_preserving_transform(g: &Graph, h: &Graph) -> Result<SwitchSequence> {
    degree_preserving_transform_with_cap(g, h, DEFAULT_STATE_CAP)
}

pub fn degree_preserving_transform_with_cap(
    g: &Graph,
    h: &Graph,
    cap: usize,
) -> Result<SwitchSequence> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Err(Error::ParameterMismatch {
            n1: g.n(),
            m1: g.edge_count(),
            n2: h.n(),
            m2: h.edge_count(),
        });
    }
    if g.degrees() != h.degrees() {
        return Err(Error::DegreeMismatch);
    }
    if !g.is_connected() || !h.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut cur = g.clone();
    let mut moves = Vec::new();
    while cur != *h {
        for mv in improving_path(&cur, h, cap)? {
            cur = apply_switch(&cur, &mv)?;
            moves.push(mv);
        }
    }
    Ok(SwitchSequence::new(g.clone(), moves))
}

/// The inverse sequence, from `endpoint` back to `seq.source`.
pub fn reverse_sequence(seq: &SwitchSequence, endpoint: &Graph) -> Result<SwitchSequence> {
    if seq.endpoint()? != *endpoint {
        return Err(Error::ReplayMismatch(
            "sequence does not end at the given endpoint".into(),
        ));
    }
    let moves = seq.moves.iter().rev().map(SwitchMove::inverse).collect();
    Ok(SwitchSequence::new(endpoint.clone(), moves))
}

fn check_pair(g: &Graph, h: &Graph) -> Result<()> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Err(Error::ParameterMismatch {
            n1: g.n(),
            m1: g.edge_count(),
            n2: h.n(),
            m2: h.edge_count(),
        });
    }
    if !g.is_eulerian() || !h.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    Ok(())
}

/// 2-switch sequence from `g` to `h` with every intermediate graph Eulerian.
pub fn transform(g: &Graph, h: &Graph) -> Result<SwitchSequence> {
    check_pair(g, h)?;
    if g == h {
        return Ok(SwitchSequence::empty(g.clone()));
    }
    let (g_balanced, to_balanced) = equalize_degrees(g)?;
    let (h_balanced, from_h) = equalize_degrees(h)?;
    let bridge = degree_preserving_transform(&g_balanced, &h_balanced)?;
    let back = reverse_sequence(&from_h, &h_balanced)?;
    let seq = to_balanced.then(bridge).then(back);
    debug_assert!(seq.verify_eulerian(h).is_ok());
    Ok(seq)
}

/// Exact distance in the Eulerian 2-switch graph, or `None` beyond
/// `max_depth`. Bidirectional breadth-first search; meant for `n <= 7`.
pub fn switch_distance(g: &Graph, h: &Graph, max_depth: usize) -> Result<Option<usize>> {
    switch_distance_with_cap(g, h, max_depth, DEFAULT_STATE_CAP)
}

pub fn switch_distance_with_cap(
    g: &Graph,
    h: &Graph,
    max_depth: usize,
    cap: usize,
) -> Result<Option<usize>> {
    check_pair(g, h)?;
    if g == h {
        return Ok(Some(0));
    }
    let mut dist = [HashMap::new(), HashMap::new()];
    dist[0].insert(g.clone(), 0usize);
    dist[1].insert(h.clone(), 0usize);
    let mut frontier = [vec![g.clone()], vec![h.clone()]];
    let mut depth = [0usize, 0usize];
    while depth[0] + depth[1] < max_depth {
        let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
        if frontier[side].is_empty() {
            return Ok(None);
        }
        let level = depth[side] + 1;
        let mut next = Vec::new();
        for x in std::mem::take(&mut frontier[side]) {
            for (_, y) in eulerian_2switch_neighbors(&x)? {
                if dist[side].contains_key(&y) {
                    continue;
                }
                if let Some(&other) = dist[1 - side].get(&y) {
                    return Ok(Some(level + other));
                }
                dist[side].insert(y.clone(), level);
                next.push(y);
            }
            if dist[0].len() + dist[1].len() > cap {
                return Err(Error::StateCapExceeded { cap });
            }
        }
        frontier[side] = next;
        depth[side] = level;
    }
    Ok(None)
}
