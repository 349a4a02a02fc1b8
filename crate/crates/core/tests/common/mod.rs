#![allow(dead_code)]

use std::collections::BTreeSet;

use eulerswitch::canon::canonical_code;
use eulerswitch::codec::{decode_edgelist, decode_graph6, encode_edgelist, encode_graph6};
use eulerswitch::generator::random_eulerian;
use eulerswitch::graph::pair_count;
use eulerswitch::switch::{apply_switch, is_degree_preserving, is_parity_preserving};
use eulerswitch::transform::balancing_switch;
use eulerswitch::{in_p, Edge, Graph, SwitchMove, SwitchSequence};

pub fn feasible_pairs(n_lo: usize, n_hi: usize) -> Vec<(usize, usize)> {
    (n_lo..=n_hi)
        .flat_map(|n| (0..=pair_count(n)).map(move |m| (n, m)))
        .filter(|&(n, m)| in_p(n, m).is_feasible())
        .collect()
}

/// Graph on `n` vertices from the low `C(n,2)` bits of `mask`, row-major.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges = pairs
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

pub fn eulerian_sample(n: usize, m: usize, seed: u64) -> Graph {
    random_eulerian(n, m, seed, 12).unwrap()
}

/// A 1- or 2-move valid on `g`, picked by `pick` (any value works).
pub fn move_for(g: &Graph, k: usize, pick: &[usize; 4]) -> Option<SwitchMove> {
    let present = g.edges();
    let absent = g.non_edges();
    if present.len() < k || absent.len() < k {
        return None;
    }
    let choose = |pool: &[Edge], a: usize, b: usize| -> Vec<Edge> {
        let i = a % pool.len();
        let mut out = vec![pool[i]];
        if k == 2 {
            let j = (i + 1 + b % (pool.len() - 1)) % pool.len();
            out.push(pool[j]);
        }
        out
    };
    let removed = choose(&present, pick[0], pick[1]);
    let added = choose(&absent, pick[2], pick[3]);
    Some(SwitchMove::new(removed, added).unwrap())
}

pub fn check_parity_degree(g: &Graph, mv: &SwitchMove) -> Result<(), String> {
    let h = apply_switch(g, mv).map_err(|e| e.to_string())?;
    let parity = is_parity_preserving(g, mv).unwrap();
    let degree = is_degree_preserving(g, mv).unwrap();
    let (dg, dh) = (g.degrees(), h.degrees());
    if degree != (dg == dh) {
        return Err(format!("degree classification wrong for {mv}"));
    }
    let same_parity = dg.iter().zip(&dh).all(|(a, b)| a % 2 == b % 2);
    if parity != same_parity {
        return Err(format!("parity classification wrong for {mv}"));
    }
    if degree && !parity {
        return Err(format!("{mv} degree-preserving but not parity-preserving"));
    }
    Ok(())
}

pub fn check_involution(g: &Graph, mv: &SwitchMove) -> Result<(), String> {
    let h = apply_switch(g, mv).map_err(|e| e.to_string())?;
    let back = apply_switch(&h, &mv.inverse()).map_err(|e| e.to_string())?;
    if &back != g || mv.inverse().inverse() != *mv {
        return Err(format!("{mv} is not undone by its inverse"));
    }
    Ok(())
}

pub fn check_roundtrips(g: &Graph) -> Result<(), String> {
    let g6 = encode_graph6(g);
    if decode_graph6(&g6).map_err(|e| e.to_string())? != *g {
        return Err(format!("graph6 {g6} does not round-trip"));
    }
    if decode_edgelist(&encode_edgelist(g)).map_err(|e| e.to_string())? != *g {
        return Err("edge list does not round-trip".into());
    }
    Ok(())
}

pub fn check_log_roundtrip(seq: &SwitchSequence) -> Result<(), String> {
    let back = SwitchSequence::from_log(seq.source.clone(), &seq.to_log()).map_err(|e| e.to_string())?;
    if back.moves != seq.moves {
        return Err("move log does not round-trip".into());
    }
    Ok(())
}

/// Permutation of `0..n` from arbitrary keys (Fisher-Yates driven by `keys`).
pub fn permutation(n: usize, keys: &[usize]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = keys.get(i).copied().unwrap_or(0) % (i + 1);
        perm.swap(i, j);
    }
    perm
}

pub fn check_relabel_invariance(g: &Graph, perm: &[usize]) -> Result<(), String> {
    let h = g.relabel(perm).map_err(|e| e.to_string())?;
    if canonical_code(g).unwrap() != canonical_code(&h).unwrap() {
        return Err(format!("canonical code changed under {perm:?}"));
    }
    Ok(())
}

/// All pairs `(u, v)` with `deg(v) > deg(u)`.
pub fn unbalanced_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let d = g.degrees();
    let n = g.n();
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| d[v] > d[u])
        .collect()
}

pub fn check_balancing(g: &Graph, u: usize, v: usize) -> Result<(), String> {
    let mv = balancing_switch(g, u, v).map_err(|e| format!("balancing_switch({u},{v}): {e}"))?;
    let h = apply_switch(g, &mv).map_err(|e| e.to_string())?;
    if !h.is_connected() || !h.is_eulerian() {
        return Err(format!("{mv} breaks the graph"));
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    if dh[u] != dg[u] + 2 || dh[v] + 2 != dg[v] {
        return Err(format!("{mv} does not move degree 2 from {v} to {u}"));
    }
    if (0..g.n()).any(|x| x != u && x != v && dg[x] != dh[x]) {
        return Err(format!("{mv} changes a bystander degree"));
    }
    Ok(())
}

/// Eulerian 2-switch neighbors by exhaustive choice of two present and two absent edges.
pub fn brute_neighbors(g: &Graph) -> BTreeSet<(SwitchMove, Graph)> {
    let present = g.edges();
    let absent = g.non_edges();
    let mut out = BTreeSet::new();
    for (i, &r1) in present.iter().enumerate() {
        for &r2 in &present[i + 1..] {
            for (j, &a1) in absent.iter().enumerate() {
                for &a2 in &absent[j + 1..] {
                    let mv = SwitchMove::two([r1, r2], [a1, a2]).unwrap();
                    let h = apply_switch(g, &mv).unwrap();
                    if h.is_eulerian() {
                        out.insert((mv, h));
                    }
                }
            }
        }
    }
    out
}
