//! Backtracking Hamiltonian-cycle search over adjacency lists.

use std::time::Instant;

pub(crate) enum CycleSearch {
    Found(Vec<usize>),
    Absent,
    TimedOut,
}

struct State<'a> {
    adj: &'a [Vec<usize>],
    on_path: Vec<bool>,
    path: Vec<usize>,
    deadline: Option<Instant>,
    ticks: u32,
    timed_out: bool,
}

impl State<'_> {
    fn expired(&mut self) -> bool {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// Every unvisited vertex still needs two usable neighbors (counting the
    /// current end and the start), and the start needs an unvisited one to
    /// close the cycle through.
    fn viable(&self) -> bool {
        let n = self.adj.len();
        let start = self.path[0];
        let end = *self.path.last().expect("non-empty path");
        if !self.adj[start].iter().any(|&w| !self.on_path[w]) {
            return false;
        }
        for v in 0..n {
            if self.on_path[v] {
                continue;
            }
            let free = self.adj[v]
                .iter()
                .filter(|&&w| !self.on_path[w] || w == start || w == end)
                .count();
            if free < 2 {
                return false;
            }
        }
        true
    }

    fn extend(&mut self) -> bool {
        if self.expired() {
            return false;
        }
        let n = self.adj.len();
        let end = *self.path.last().expect("non-empty path");
        if self.path.len() == n {
            return self.adj[end].contains(&self.path[0]);
        }
        if !self.viable() {
            return false;
        }
        // Fewest onward options first.
        let mut next: Vec<(usize, usize)> = self.adj[end]
            .iter()
            .filter(|&&w| !self.on_path[w])
            .map(|&w| {
                let onward = self.adj[w].iter().filter(|&&x| !self.on_path[x]).count();
                (onward, w)
            })
            .collect();
        next.sort_unstable();
        for (_, w) in next {
            self.on_path[w] = true;
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.on_path[w] = false;
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

/// Hamiltonian cycle starting at vertex 0, for graphs with at least 3 vertices.
pub(crate) fn find_cycle(adj: &[Vec<usize>], deadline: Option<Instant>) -> CycleSearch {
    let n = adj.len();
    if n < 3 {
        return CycleSearch::Absent;
    }
    let mut state = State {
        adj,
        on_path: vec![false; n],
        path: vec![0],
        deadline,
        ticks: 0,
        timed_out: false,
    };
    state.on_path[0] = true;
    if state.extend() {
        CycleSearch::Found(state.path)
    } else if state.timed_out {
        CycleSearch::TimedOut
    } else {
        CycleSearch::Absent
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::named;

    fn search(g: &Graph) -> Option<Vec<usize>> {
        match find_cycle(&g.adjacency(), None) {
            CycleSearch::Found(c) => Some(c),
            CycleSearch::Absent => None,
            CycleSearch::TimedOut => unreachable!(),
        }
    }

    #[test]
    fn known_answers() {
        assert!(search(&named::k4()).is_some());
        assert!(search(&named::petersen()).is_none());
        assert!(search(&named::dodecahedron()).is_some());
        assert!(search(&Graph::cycle(6).unwrap()).is_some());
        assert!(search(&Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()).is_none());
    }

    #[test]
    fn cycle_is_valid() {
        let g = named::dodecahedron();
        let c = search(&g).unwrap();
        let mut sorted = c.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..20).collect::<Vec<_>>());
        for k in 0..c.len() {
            assert!(g.has_edge(c[k], c[(k + 1) % c.len()]));
        }
    }
}
