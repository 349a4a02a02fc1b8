//! k-switch moves (k = 1 or 2): validation, classification, application and
//! the neighbor relation of the Eulerian 2-switch graph.
//!
//! Move log format, one move per line:
//!
//! ```text
//! - u1 v1 - u2 v2 + x1 y1 + x2 y2
//! ```
//!
//! A 1-switch line carries one `-` group and one `+` group. Pairs are written
//! with the smaller vertex first and the groups sorted.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Remove `k` edges and add `k` edges. Both sets are sorted, of equal size
/// `k` in `{1, 2}`, and disjoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SwitchMove {
    removed: Vec<Edge>,
    added: Vec<Edge>,
}

impl SwitchMove {
    pub fn new(mut removed: Vec<Edge>, mut added: Vec<Edge>) -> Result<SwitchMove> {
        removed.sort_unstable();
        added.sort_unstable();
        let k = removed.len();
        if !(1..=2).contains(&k) || added.len() != k {
            return Err(Error::InvalidMove(format!(
                "need k removed and k added edges with k in {{1, 2}}, got {} and {}",
                removed.len(),
                added.len()
            )));
        }
        for set in [&removed, &added] {
            if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidMove(format!("edge {} listed twice", w[0])));
            }
        }
        if let Some(&e) = removed.iter().find(|e| added.contains(e)) {
            return Err(Error::OverlappingMove(e));
        }
        Ok(SwitchMove { removed, added })
    }

    pub fn one(removed: Edge, added: Edge) -> Result<SwitchMove> {
        SwitchMove::new(vec![removed], vec![added])
    }

    pub fn two(removed: [Edge; 2], added: [Edge; 2]) -> Result<SwitchMove> {
        SwitchMove::new(removed.to_vec(), added.to_vec())
    }

    /// Construction from pairs; panics on invalid input. Test and fixture helper.
    pub fn from_pairs(removed: &[(usize, usize)], added: &[(usize, usize)]) -> SwitchMove {
        let conv = |s: &[(usize, usize)]| {
            s.iter()
                .map(|&(a, b)| Edge::new(a, b).expect("no self-loops"))
                .collect::<Vec<_>>()
        };
        SwitchMove::new(conv(removed), conv(added)).expect("valid move")
    }

    pub fn k(&self) -> usize {
        self.removed.len()
    }

    pub fn removed(&self) -> &[Edge] {
        &self.removed
    }

    pub fn added(&self) -> &[Edge] {
        &self.added
    }

    /// The move undoing this one.
    pub fn inverse(&self) -> SwitchMove {
        SwitchMove {
            removed: self.added.clone(),
            added: self.removed.clone(),
        }
    }

    fn incidence(&self, set: &[Edge], v: usize) -> usize {
        set.iter().filter(|e| e.touches(v)).count()
    }

    fn max_vertex(&self) -> usize {
        self.removed
            .iter()
            .chain(&self.added)
            .map(|e| e.v())
            .max()
            .unwrap_or(0)
    }

    pub fn to_log_line(&self) -> String {
        self.to_string()
    }

    pub fn parse_log_line(line: &str) -> Result<SwitchMove> {
        let err = |message: String| Error::Parse { line: 0, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() % 3 != 0 || tokens.is_empty() {
            return Err(err(format!("expected groups of `- u v` / `+ u v`, got {line:?}")));
        }
        let mut removed = Vec::new();
        let mut added = Vec::new();
        for group in tokens.chunks(3) {
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| err(format!("{t:?} is not a vertex index")))
            };
            let e = Edge::new(parse(group[1])?, parse(group[2])?)?;
            match group[0] {
                "-" => removed.push(e),
                "+" => added.push(e),
                other => return Err(err(format!("expected `-` or `+`, got {other:?}"))),
            }
        }
        SwitchMove::new(removed, added)
    }
}

impl fmt::Display for SwitchMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (sign, set) in [("-", &self.removed), ("+", &self.added)] {
            for e in set {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{sign} {} {}", e.u(), e.v())?;
            }
        }
        Ok(())
    }
}

fn check_applicable(g: &Graph, mv: &SwitchMove) -> Result<()> {
    let top = mv.max_vertex();
    if top >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: top, n: g.n() });
    }
    if let Some(&e) = mv.removed.iter().find(|&&e| !g.has(e)) {
        return Err(Error::EdgeAbsent(e));
    }
    if let Some(&e) = mv.added.iter().find(|&&e| g.has(e)) {
        return Err(Error::EdgePresent(e));
    }
    Ok(())
}

/// `(E \ removed) ∪ added`. Edge count is unchanged.
pub fn apply_switch(g: &Graph, mv: &SwitchMove) -> Result<Graph> {
    check_applicable(g, mv)?;
    let mut h = g.clone();
    for &e in &mv.removed {
        h.remove_edge(e)?;
    }
    for &e in &mv.added {
        h.insert_edge(e)?;
    }
    debug_assert_eq!(h.edge_count(), g.edge_count());
    Ok(h)
}

fn touched_vertices(mv: &SwitchMove) -> Vec<usize> {
    let mut vs: Vec<usize> = mv
        .removed
        .iter()
        .chain(&mv.added)
        .flat_map(|e| [e.u(), e.v()])
        .collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Every vertex keeps its degree parity.
pub fn is_parity_preserving(g: &Graph, mv: &SwitchMove) -> Result<bool> {
    check_applicable(g, mv)?;
    Ok(touched_vertices(mv)
        .into_iter()
        .all(|v| (mv.incidence(&mv.removed, v) + mv.incidence(&mv.added, v)) % 2 == 0))
}

/// Every vertex keeps its exact degree.
pub fn is_degree_preserving(g: &Graph, mv: &SwitchMove) -> Result<bool> {
    check_applicable(g, mv)?;
    Ok(touched_vertices(mv)
        .into_iter()
        .all(|v| mv.incidence(&mv.removed, v) == mv.incidence(&mv.added, v)))
}

/// Parity-preserving 2-switches of `g` in generation order (not yet filtered
/// for connectivity). The added pairs are derived from the removed pair: for
/// disjoint removed edges `ab, cd` they are the two other perfect matchings
/// of `{a,b,c,d}`; for removed edges `xp, xq` sharing `x` they are `py, qy`
/// for every other vertex `y`. No other added pair keeps all parities.
pub(crate) fn parity_preserving_2moves(g: &Graph) -> Vec<(SwitchMove, Graph)> {
    let edges = g.edges();
    let n = g.n();
    let mut out = Vec::new();
    let mut try_push = |removed: [Edge; 2], added: [Edge; 2]| {
        if g.has(added[0]) || g.has(added[1]) {
            return;
        }
        let mv = SwitchMove::two(removed, added).expect("disjoint by construction");
        let h = apply_switch(g, &mv).expect("applicable by construction");
        out.push((mv, h));
    };
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            let (a, b, c, d) = (e1.u(), e1.v(), e2.u(), e2.v());
            let shared = [a, b].into_iter().find(|&x| x == c || x == d);
            match shared {
                None => {
                    try_push([e1, e2], [Edge::of(a, c), Edge::of(b, d)]);
                    try_push([e1, e2], [Edge::of(a, d), Edge::of(b, c)]);
                }
                Some(x) => {
                    let p = e1.other(x).expect("x is an endpoint");
                    let q = e2.other(x).expect("x is an endpoint");
                    for y in (0..n).filter(|&y| y != x && y != p && y != q) {
                        try_push([e1, e2], [Edge::of(p, y), Edge::of(q, y)]);
                    }
                }
            }
        }
    }
    out
}

/// All Eulerian graphs one 2-switch away from the Eulerian graph `g`, each
/// with its (unique) witnessing move, sorted by move.
pub fn eulerian_2switch_neighbors(g: &Graph) -> Result<Vec<(SwitchMove, Graph)>> {
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let mut out: Vec<(SwitchMove, Graph)> = parity_preserving_2moves(g)
        .into_iter()
        .filter(|(_, h)| h.is_connected())
        .collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// A source graph and the moves applied to it in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchSequence {
    pub source: Graph,
    pub moves: Vec<SwitchMove>,
}

impl SwitchSequence {
    pub fn new(source: Graph, moves: Vec<SwitchMove>) -> SwitchSequence {
        SwitchSequence { source, moves }
    }

    pub fn empty(source: Graph) -> SwitchSequence {
        SwitchSequence::new(source, Vec::new())
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Every graph along the sequence, source first.
    pub fn replay(&self) -> Result<Vec<Graph>> {
        let mut states = Vec::with_capacity(self.moves.len() + 1);
        states.push(self.source.clone());
        for mv in &self.moves {
            let next = apply_switch(states.last().expect("non-empty"), mv)?;
            states.push(next);
        }
        Ok(states)
    }

    pub fn endpoint(&self) -> Result<Graph> {
        let mut g = self.source.clone();
        for mv in &self.moves {
            g = apply_switch(&g, mv)?;
        }
        Ok(g)
    }

    /// Replays and checks that every state is Eulerian and the last equals `target`.
    pub fn verify_eulerian(&self, target: &Graph) -> Result<()> {
        let m = self.source.edge_count();
        let mut g = self.source.clone();
        if !g.is_eulerian() {
            return Err(Error::ReplayMismatch("source is not Eulerian".into()));
        }
        for (step, mv) in self.moves.iter().enumerate() {
            g = apply_switch(&g, mv)?;
            if g.edge_count() != m {
                return Err(Error::Internal(format!("edge count changed at step {step}")));
            }
            if !g.is_eulerian() {
                return Err(Error::ReplayMismatch(format!(
                    "graph after move {} ({mv}) is not Eulerian",
                    step + 1
                )));
            }
        }
        if g != *target {
            return Err(Error::ReplayMismatch("final graph differs from target".into()));
        }
        Ok(())
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn then(mut self, other: SwitchSequence) -> SwitchSequence {
        self.moves.extend(other.moves);
        self
    }

    pub fn to_log(&self) -> String {
        self.moves.iter().map(|mv| format!("{mv}\n")).collect()
    }

    pub fn from_log(source: Graph, text: &str) -> Result<SwitchSequence> {
        let mut moves = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mv = SwitchMove::parse_log_line(line).map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse { line: k + 1, message },
                other => other,
            })?;
            moves.push(mv);
        }
        Ok(SwitchSequence::new(source, moves))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    #[test]
    fn apply_on_four_cycle() {
        let mv = SwitchMove::from_pairs(&[(0, 1), (2, 3)], &[(0, 2), (1, 3)]);
        let h = apply_switch(&c4(), &mv).unwrap();
        assert_eq!(h, Graph::cycle_on(4, &[0, 2, 1, 3]).unwrap());
    }

    #[test]
    fn overlapping_move_rejected() {
        assert_eq!(
            SwitchMove::one(e(0, 1), e(0, 1)),
            Err(Error::OverlappingMove(e(0, 1)))
        );
        assert!(SwitchMove::new(vec![], vec![]).is_err());
        assert!(SwitchMove::new(vec![e(0, 1)], vec![e(1, 2), e(2, 3)]).is_err());
        assert!(SwitchMove::new(vec![e(0, 1), e(0, 1)], vec![e(1, 2), e(2, 3)]).is_err());
    }

    #[test]
    fn balancing_move_on_k5_minus_c4() {
        let g = Graph::from_edges(5, [(0, 2), (1, 3), (0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        let mv = SwitchMove::from_pairs(&[(1, 4), (3, 4)], &[(0, 1), (0, 3)]);
        let h = apply_switch(&g, &mv).unwrap();
        let expect =
            Graph::from_edges(5, [(0, 2), (1, 3), (0, 4), (2, 4), (0, 1), (0, 3)]).unwrap();
        assert_eq!(h, expect);
        assert!(h.is_eulerian());
        assert!(is_parity_preserving(&g, &mv).unwrap());
        assert!(!is_degree_preserving(&g, &mv).unwrap());
    }

    #[test]
    fn apply_errors() {
        let g = c4();
        let absent = SwitchMove::from_pairs(&[(0, 2)], &[(1, 3)]);
        assert_eq!(apply_switch(&g, &absent), Err(Error::EdgeAbsent(e(0, 2))));
        let present = SwitchMove::from_pairs(&[(0, 1)], &[(1, 2)]);
        assert_eq!(apply_switch(&g, &present), Err(Error::EdgePresent(e(1, 2))));
        let out_of_range = SwitchMove::from_pairs(&[(0, 1)], &[(1, 7)]);
        assert!(matches!(
            apply_switch(&g, &out_of_range),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn parity_classification_on_c5() {
        let c5 = Graph::cycle(5).unwrap();
        // 1-2 is a C5 edge, so this move is not applicable at all.
        let swap = SwitchMove::from_pairs(&[(0, 1), (2, 3)], &[(0, 3), (1, 2)]);
        assert_eq!(
            is_parity_preserving(&c5, &swap),
            Err(Error::EdgePresent(e(1, 2)))
        );
        let parity = SwitchMove::from_pairs(&[(0, 1), (2, 3)], &[(0, 2), (1, 3)]);
        assert!(is_parity_preserving(&c5, &parity).unwrap());
        assert!(is_degree_preserving(&c5, &parity).unwrap());
        let broken = SwitchMove::from_pairs(&[(0, 1), (2, 3)], &[(0, 2), (1, 4)]);
        assert!(!is_parity_preserving(&c5, &broken).unwrap());
        assert!(!is_degree_preserving(&c5, &broken).unwrap());
    }

    #[test]
    fn degree_change_at_far_vertex() {
        // 0-1, 2-3 removed; 0-4 and 2-4 added: vertex 4 gains two.
        let host = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let mv = SwitchMove::from_pairs(&[(0, 1), (2, 3)], &[(0, 4), (2, 4)]);
        assert!(!is_degree_preserving(&host, &mv).unwrap());
        assert!(!is_parity_preserving(&host, &mv).unwrap());
    }

    #[test]
    fn neighbors_of_small_graphs() {
        assert!(eulerian_2switch_neighbors(&Graph::complete(3)).unwrap().is_empty());
        assert!(eulerian_2switch_neighbors(&Graph::complete(5)).unwrap().is_empty());
        let nb = eulerian_2switch_neighbors(&c4()).unwrap();
        let graphs: Vec<Graph> = nb.iter().map(|(_, h)| h.clone()).collect();
        assert_eq!(graphs.len(), 2);
        assert!(graphs.contains(&Graph::cycle_on(4, &[0, 2, 1, 3]).unwrap()));
        assert!(graphs.contains(&Graph::cycle_on(4, &[0, 1, 3, 2]).unwrap()));
        assert_eq!(
            eulerian_2switch_neighbors(&Graph::complete(4)),
            Err(Error::NotEulerian)
        );
    }

    #[test]
    fn log_round_trip() {
        let mv = SwitchMove::from_pairs(&[(2, 3), (0, 1)], &[(1, 3), (0, 2)]);
        assert_eq!(mv.to_log_line(), "- 0 1 - 2 3 + 0 2 + 1 3");
        assert_eq!(SwitchMove::parse_log_line("- 0 1 - 2 3 + 0 2 + 1 3").unwrap(), mv);
        let one = SwitchMove::from_pairs(&[(4, 1)], &[(2, 0)]);
        assert_eq!(one.to_log_line(), "- 1 4 + 0 2");
        assert!(SwitchMove::parse_log_line("- 0 1 + 0").is_err());
        assert!(SwitchMove::parse_log_line("* 0 1 + 0 2").is_err());
        let seq = SwitchSequence::new(c4(), vec![mv.clone()]);
        let back = SwitchSequence::from_log(c4(), &seq.to_log()).unwrap();
        assert_eq!(back, seq);
    }

    #[test]
    fn sequence_verification() {
        let mv = SwitchMove::from_pairs(&[(0, 1), (2, 3)], &[(0, 2), (1, 3)]);
        let seq = SwitchSequence::new(c4(), vec![mv]);
        let target = Graph::cycle_on(4, &[0, 2, 1, 3]).unwrap();
        seq.verify_eulerian(&target).unwrap();
        assert!(matches!(
            seq.verify_eulerian(&c4()),
            Err(Error::ReplayMismatch(_))
        ));
        // Splitting C6 into two triangles is a valid switch but not Eulerian.
        let c6 = Graph::cycle(6).unwrap();
        let split = SwitchMove::from_pairs(&[(0, 1), (3, 4)], &[(0, 4), (1, 3)]);
        let h = apply_switch(&c6, &split).unwrap();
        let bad = SwitchSequence::new(c6, vec![split]);
        assert!(bad.verify_eulerian(&h).is_err());
    }
}
