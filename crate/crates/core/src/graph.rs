//! Labeled simple undirected graphs on vertices `0..n`.
//!
//! Edge membership is a bitset over the `C(n, 2)` unordered vertex pairs in
//! row-major order: `(0,1), (0,2), .., (0,n-1), (1,2), .., (n-2,n-1)`. The
//! index of pair `(i, j)` with `i < j` is given by [`pair_index`]. Move logs
//! and golden files depend on this ordering, so it must not change.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Number of unordered pairs on `n` vertices.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Row-major index of the pair `(i, j)`, `i < j < n`.
#[inline]
pub const fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    /// Panics on `a == b`. For internal construction from known-distinct vertices.
    #[inline]
    pub(crate) fn of(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "self-loop pair");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.0
    }

    #[inline]
    pub fn v(self) -> usize {
        self.1
    }

    #[inline]
    pub fn touches(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint opposite `x`, if `x` is an endpoint.
    pub fn other(self, x: usize) -> Option<usize> {
        if self.0 == x {
            Some(self.1)
        } else if self.1 == x {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Degree list of a graph together with its number of odd entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub odd_count: usize,
}

impl DegreeProfile {
    pub fn odd_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.degrees
            .iter()
            .enumerate()
            .filter(|(_, &d)| d % 2 == 1)
            .map(|(v, _)| v)
    }

    pub fn min(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

/// Labeled simple graph. Equality is labeled equality: same `n` and same edge set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            bits: vec![0; pair_count(n).div_ceil(64)],
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for k in 0..pair_count(n) {
            g.bits[k / 64] |= 1 << (k % 64);
        }
        g
    }

    /// Cycle through `order` in sequence, closing back to the first vertex.
    pub fn cycle_on(n: usize, order: &[usize]) -> Result<Graph> {
        if order.len() < 3 {
            return Err(Error::Precondition(format!(
                "a cycle needs at least 3 vertices, got {}",
                order.len()
            )));
        }
        let edges = (0..order.len()).map(|k| (order[k], order[(k + 1) % order.len()]));
        Graph::from_edges(n, edges)
    }

    /// The cycle `0-1-..-(n-1)-0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::cycle_on(n, &(0..n).collect::<Vec<_>>())
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range vertices.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            let e = Edge::new(a, b)?;
            g.check_vertex(e.1)?;
            if g.has(e) {
                return Err(Error::DuplicateEdge(e));
            }
            g.set(e, true);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Raw membership words; bit `k` is the pair with row-major index `k`.
    pub fn membership_words(&self) -> &[u64] {
        &self.bits
    }

    pub(crate) fn from_words(n: usize, bits: Vec<u64>) -> Graph {
        debug_assert_eq!(bits.len(), pair_count(n).div_ceil(64));
        Graph { n, bits }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    fn index(&self, e: Edge) -> usize {
        pair_index(self.n, e.0, e.1)
    }

    /// Membership test; `e` must lie inside the vertex range.
    #[inline]
    pub fn has(&self, e: Edge) -> bool {
        let k = self.index(e);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    /// Adjacency test that tolerates equal or out-of-range vertices.
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.n && b < self.n && self.has(Edge::of(a, b))
    }

    #[inline]
    fn set(&mut self, e: Edge, present: bool) {
        let k = self.index(e);
        if present {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    pub fn insert_edge(&mut self, e: Edge) -> Result<()> {
        self.check_vertex(e.1)?;
        if self.has(e) {
            return Err(Error::EdgePresent(e));
        }
        self.set(e, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, e: Edge) -> Result<()> {
        self.check_vertex(e.1)?;
        if !self.has(e) {
            return Err(Error::EdgeAbsent(e));
        }
        self.set(e, false);
        Ok(())
    }

    /// Edges in row-major order.
    pub fn edges(&self) -> Vec<Edge> {
        self.pairs_where(true)
    }

    /// Absent pairs in row-major order.
    pub fn non_edges(&self) -> Vec<Edge> {
        self.pairs_where(false)
    }

    fn pairs_where(&self, present: bool) -> Vec<Edge> {
        let mut out = Vec::new();
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if (self.bits[k / 64] >> (k % 64) & 1 == 1) == present {
                    out.push(Edge(i, j));
                }
                k += 1;
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| self.has_edge(v, w)).collect()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok((0..self.n).filter(|&w| self.has_edge(v, w)).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits[k / 64] >> (k % 64) & 1 == 1 {
                    deg[i] += 1;
                    deg[j] += 1;
                }
                k += 1;
            }
        }
        deg
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let odd_count = degrees.iter().filter(|&&d| d % 2 == 1).count();
        DegreeProfile { degrees, odd_count }
    }

    /// Adjacency lists, ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in self.edges() {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Component label per vertex; labels are assigned in order of smallest member.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// True iff all `n` vertices lie in one component. An isolated vertex
    /// disconnects any graph with `n >= 2`.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        if self.n <= 64 {
            return self.is_connected_small();
        }
        self.components().iter().all(|&c| c == 0)
    }

    fn is_connected_small(&self) -> bool {
        let mut rows = [0u64; 64];
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bits[k / 64] >> (k % 64) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Connected with every degree even. Graphs on fewer than 3 vertices are
    /// never Eulerian; in particular the single-vertex graph is excluded.
    pub fn is_eulerian(&self) -> bool {
        self.n >= 3 && self.degrees().iter().all(|d| d % 2 == 0) && self.is_connected()
    }

    pub fn all_degrees_even(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Precondition("not a permutation".into()));
            }
        }
        let mut g = Graph::empty(self.n);
        for e in self.edges() {
            g.set(Edge::of(perm[e.0], perm[e.1]), true);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::complete(self.n);
        for (w, c) in g.bits.iter_mut().zip(&self.bits) {
            *w &= !c;
        }
        g
    }

    /// Same edges on `n_new >= n` vertices; the extra vertices are isolated.
    pub fn extended(&self, n_new: usize) -> Graph {
        assert!(n_new >= self.n);
        let mut g = Graph::empty(n_new);
        for e in self.edges() {
            g.set(e, true);
        }
        g
    }

    /// Size of the edge symmetric difference with `other` (same `n`).
    pub fn symmetric_difference_len(&self, other: &Graph) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// `(E \ other, other \ E)`, each in row-major order.
    pub fn edge_difference(&self, other: &Graph) -> (Vec<Edge>, Vec<Edge>) {
        let ours = self.edges().into_iter().filter(|&e| !other.has(e)).collect();
        let theirs = other.edges().into_iter().filter(|&e| !self.has(e)).collect();
        (ours, theirs)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (k, e) in self.edges().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        write!(f, "])")
    }
}
