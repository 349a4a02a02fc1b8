//! The 1-switch gadget: a cubic graph `G` can be made Eulerian with `n/2`
//! 1-switches after pendant structures are hung off one vertex iff `G` is
//! Hamiltonian. This module builds the gadget and the exact solvers used to
//! check the equivalence on small instances.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::hamilton::{find_cycle, CycleSearch};
use crate::switch::{SwitchMove, SwitchSequence};

/// Largest base graph for which [`reduction_check`] runs the 1-switch solver.
pub const SOLVER_BASE_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetVariant {
    /// `n` pendant paths of length 2 at the anchor.
    Paths,
    /// A tree with `n` leaves and inner degrees 2 or 4 rooted at the anchor.
    Tree,
}

#[derive(Clone, Debug)]
pub struct GadgetInstance {
    pub base: Graph,
    pub anchor: usize,
    pub gadget: Graph,
    pub variant: GadgetVariant,
    /// Degree-1 vertices added by the construction, ascending.
    pub leaves: Vec<usize>,
}

pub fn is_cubic(g: &Graph) -> bool {
    g.degrees().iter().all(|&d| d == 3)
}

fn check_base(base: &Graph, anchor: usize) -> Result<()> {
    if !is_cubic(base) {
        return Err(Error::NotCubic);
    }
    if anchor >= base.n() {
        return Err(Error::VertexOutOfRange {
            vertex: anchor,
            n: base.n(),
        });
    }
    Ok(())
}

/// Attach `n` paths `anchor - (n+2j) - (n+2j+1)`, `0 <= j < n`, to a cubic base.
pub fn build_gadget(base: &Graph, anchor: usize) -> Result<GadgetInstance> {
    check_base(base, anchor)?;
    let n = base.n();
    let mut gadget = base.extended(3 * n);
    let mut leaves = Vec::with_capacity(n);
    for j in 0..n {
        let (mid, leaf) = (n + 2 * j, n + 2 * j + 1);
        gadget.insert_edge(Edge::of(anchor, mid))?;
        gadget.insert_edge(Edge::of(mid, leaf))?;
        leaves.push(leaf);
    }
    Ok(GadgetInstance {
        base: base.clone(),
        anchor,
        gadget,
        variant: GadgetVariant::Paths,
        leaves,
    })
}

/// Split an odd count into three odd parts, as even as possible.
fn three_odd_parts(total: usize) -> [usize; 3] {
    debug_assert!(total >= 3 && total % 2 == 1);
    let mut parts = [1, 1, 1];
    let mut rest = total - 3;
    let mut k = 0;
    while rest > 0 {
        parts[k % 3] += 2;
        rest -= 2;
        k += 1;
    }
    parts.sort_unstable();
    parts
}

struct TreeBuilder {
    edges: Vec<(usize, usize)>,
    leaves: Vec<usize>,
    next: usize,
}

impl TreeBuilder {
    fn fresh(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    /// Inner node under `parent` carrying `count` (odd) leaves below it.
    fn inner(&mut self, parent: usize, count: usize) {
        let x = self.fresh();
        self.edges.push((parent, x));
        if count == 1 {
            let leaf = self.fresh();
            self.edges.push((x, leaf));
            self.leaves.push(leaf);
            return;
        }
        for part in three_odd_parts(count) {
            if part == 1 {
                let leaf = self.fresh();
                self.edges.push((x, leaf));
                self.leaves.push(leaf);
            } else {
                self.inner(x, part);
            }
        }
    }
}

/// Tree variant: the anchor gets two inner children, each heading a subtree
/// with an odd number of leaves; inner tree vertices have degree 2 or 4 and
/// no leaf is adjacent to the anchor.
///
/// Every vertex other than the anchor has degree at most 4. The anchor ends
/// at degree 5: it must stay odd for the gadget to have `2n` odd vertices,
/// and a cubic vertex with an attached tree is odd only at degree 5 or more.
pub fn build_gadget_deg4(base: &Graph, anchor: usize) -> Result<GadgetInstance> {
    check_base(base, anchor)?;
    let n = base.n();
    let (left, right) = if (n / 2) % 2 == 1 {
        (n / 2, n / 2)
    } else {
        (n / 2 - 1, n / 2 + 1)
    };
    let mut tb = TreeBuilder {
        edges: Vec::new(),
        leaves: Vec::new(),
        next: n,
    };
    tb.inner(anchor, left);
    tb.inner(anchor, right);
    let mut gadget = base.extended(tb.next);
    for (a, b) in tb.edges {
        gadget.insert_edge(Edge::of(a, b))?;
    }
    Ok(GadgetInstance {
        base: base.clone(),
        anchor,
        gadget,
        variant: GadgetVariant::Tree,
        leaves: tb.leaves,
    })
}

/// A Hamiltonian cycle as a vertex order starting at 0, if one exists.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    match find_cycle(&g.adjacency(), None) {
        CycleSearch::Found(c) => Some(c),
        _ => None,
    }
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    hamiltonian_cycle(g).is_some()
}

/// A cubic graph split into a Hamiltonian cycle and the complementary perfect matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Vertex order from 0, stepping first to the smaller cycle neighbor.
    pub cycle: Vec<usize>,
    pub matching: Vec<Edge>,
}

fn perfect_matchings(g: &Graph, matched: &mut Vec<bool>, acc: &mut Vec<Edge>, visit: &mut dyn FnMut(&[Edge]) -> bool) -> bool {
    let Some(x) = matched.iter().position(|&m| !m) else {
        return visit(acc);
    };
    matched[x] = true;
    for y in g.neighbors(x) {
        if matched[y] {
            continue;
        }
        matched[y] = true;
        acc.push(Edge::of(x, y));
        let stop = perfect_matchings(g, matched, acc, visit);
        acc.pop();
        matched[y] = false;
        if stop {
            matched[x] = false;
            return true;
        }
    }
    matched[x] = false;
    false
}

/// Walks a 2-regular graph from 0; `Some` iff it is a single cycle through all vertices.
fn single_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = g.neighbors(cur).into_iter().find(|&w| w != prev)?;
        if next == 0 {
            break;
        }
        if order.len() == n {
            return None;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

/// Splits a cubic graph into a Hamiltonian cycle and a perfect matching by
/// trying every perfect matching `M` and keeping those with `G \ M` a single
/// `n`-cycle. Among these the lexicographically smallest cycle wins.
pub fn hamiltonian_decomposition(g: &Graph) -> Result<Option<Decomposition>> {
    if !is_cubic(g) {
        return Err(Error::NotCubic);
    }
    let mut best: Option<Decomposition> = None;
    let mut matched = vec![false; g.n()];
    perfect_matchings(g, &mut matched, &mut Vec::new(), &mut |m| {
        let mut rest = g.clone();
        for &e in m {
            rest.remove_edge(e).expect("matching edges are present");
        }
        if let Some(cycle) = single_cycle(&rest) {
            if best.as_ref().is_none_or(|b| cycle < b.cycle) {
                best = Some(Decomposition {
                    cycle,
                    matching: m.to_vec(),
                });
            }
        }
        false
    });
    Ok(best)
}

fn parity_after(g: &Graph) -> Vec<bool> {
    g.degrees().iter().map(|d| d % 2 == 1).collect()
}

fn sequence_from_sets(g: &Graph, removed: &[Edge], added: &[Edge]) -> SwitchSequence {
    let moves = removed
        .iter()
        .zip(added)
        .map(|(&r, &a)| SwitchMove::one(r, a).expect("removed edges and absent pairs are disjoint"))
        .collect();
    SwitchSequence::new(g.clone(), moves)
}

fn result_of(g: &Graph, removed: &[Edge], added: &[Edge]) -> Graph {
    let mut h = g.clone();
    for &e in removed {
        h.remove_edge(e).expect("present");
    }
    for &e in added {
        h.insert_edge(e).expect("absent");
    }
    h
}

/// Exactly `d` switches touching every odd vertex once: vertex-disjoint
/// odd-odd edges out, a perfect matching of the remaining odd vertices in.
fn search_tight(g: &Graph, d: usize) -> Option<SwitchSequence> {
    let odd = parity_after(g);
    let candidates: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|e| odd[e.u()] && odd[e.v()])
        .collect();
    let mut used = vec![false; g.n()];
    let mut removed = Vec::new();

    fn pick_removed(
        g: &Graph,
        odd: &[bool],
        candidates: &[Edge],
        start: usize,
        d: usize,
        used: &mut [bool],
        removed: &mut Vec<Edge>,
    ) -> Option<SwitchSequence> {
        if removed.len() == d {
            let rest: Vec<usize> = (0..g.n()).filter(|&v| odd[v] && !used[v]).collect();
            let mut added = Vec::new();
            let mut taken = vec![false; rest.len()];
            return pick_added(g, &rest, &mut taken, &mut added, removed);
        }
        for k in start..candidates.len() {
            let e = candidates[k];
            if used[e.u()] || used[e.v()] {
                continue;
            }
            used[e.u()] = true;
            used[e.v()] = true;
            removed.push(e);
            let found = pick_removed(g, odd, candidates, k + 1, d, used, removed);
            removed.pop();
            used[e.u()] = false;
            used[e.v()] = false;
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn pick_added(
        g: &Graph,
        rest: &[usize],
        taken: &mut [bool],
        added: &mut Vec<Edge>,
        removed: &[Edge],
    ) -> Option<SwitchSequence> {
        let Some(i) = taken.iter().position(|&t| !t) else {
            let mut sorted = added.clone();
            sorted.sort_unstable();
            return result_of(g, removed, &sorted)
                .is_connected()
                .then(|| sequence_from_sets(g, removed, &sorted));
        };
        taken[i] = true;
        for j in i + 1..rest.len() {
            if taken[j] || g.has_edge(rest[i], rest[j]) {
                continue;
            }
            taken[j] = true;
            added.push(Edge::of(rest[i], rest[j]));
            let found = pick_added(g, rest, taken, added, removed);
            added.pop();
            taken[j] = false;
            if found.is_some() {
                taken[i] = false;
                return found;
            }
        }
        taken[i] = false;
        None
    }

    pick_removed(g, &odd, &candidates, 0, d, &mut used, &mut removed)
}

/// Any `d` removed edges and `d` added pairs with an Eulerian result.
fn search_general(g: &Graph, d: usize) -> Option<SwitchSequence> {
    let edges = g.edges();
    let absent = g.non_edges();
    let mut odd = parity_after(g);

    fn odd_count(odd: &[bool]) -> usize {
        odd.iter().filter(|&&o| o).count()
    }

    fn choose(
        pool: &[Edge],
        start: usize,
        want: usize,
        later: usize,
        odd: &mut [bool],
        chosen: &mut Vec<Edge>,
        done: &mut dyn FnMut(&[Edge], &mut [bool]) -> Option<SwitchSequence>,
    ) -> Option<SwitchSequence> {
        if chosen.len() == want {
            return done(chosen, odd);
        }
        // each remaining switch endpoint flips one parity
        if odd_count(odd) > 2 * (want - chosen.len() + later) {
            return None;
        }
        for k in start..pool.len() {
            let e = pool[k];
            odd[e.u()] ^= true;
            odd[e.v()] ^= true;
            chosen.push(e);
            let found = choose(pool, k + 1, want, later, odd, chosen, done);
            chosen.pop();
            odd[e.u()] ^= true;
            odd[e.v()] ^= true;
            if found.is_some() {
                return found;
            }
        }
        None
    }

    let mut removed = Vec::new();
    choose(&edges, 0, d, d, &mut odd, &mut removed, &mut |rem, odd| {
        let rem = rem.to_vec();
        let mut added = Vec::new();
        choose(&absent, 0, d, 0, odd, &mut added, &mut |add, odd| {
            if odd_count(odd) != 0 {
                return None;
            }
            result_of(g, &rem, add)
                .is_connected()
                .then(|| sequence_from_sets(g, &rem, add))
        })
    })
}

/// A shortest sequence of at most `budget` 1-switches making `g` Eulerian.
///
/// Iterative deepening from the parity bound `ceil(odd / 4)`. At a depth
/// equal to that bound every switch must pair four distinct odd vertices,
/// which the tight search exploits; deeper levels search all edge sets.
pub fn min_1switches_to_eulerian(g: &Graph, budget: usize) -> Option<SwitchSequence> {
    if g.is_eulerian() {
        return Some(SwitchSequence::empty(g.clone()));
    }
    if g.n() < 3 {
        return None;
    }
    let odd = g.degree_profile().odd_count;
    let lower = odd.div_ceil(4).max(1);
    (lower..=budget).find_map(|d| {
        if odd == 4 * d {
            search_tight(g, d)
        } else {
            search_general(g, d)
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub base_n: usize,
    pub base_m: usize,
    pub hamiltonian: bool,
    pub hamiltonian_cycle: Option<Vec<usize>>,
    pub decomposition: Option<Decomposition>,
    pub gadget_n: usize,
    pub gadget_m: usize,
    pub gadget_odd: usize,
    /// `n / 2`, the switch budget the reduction is about.
    pub half: usize,
    /// `None` when the base is too large for the solver.
    pub fixable_within_half: Option<bool>,
    pub solution: Option<Vec<String>>,
    pub consistent: bool,
}

/// Runs every arm of the equivalence on a cubic base graph (anchor 0).
pub fn reduction_check(base: &Graph) -> Result<ReductionReport> {
    let inst = build_gadget(base, 0)?;
    let cycle = hamiltonian_cycle(base);
    let decomposition = hamiltonian_decomposition(base)?;
    let half = base.n() / 2;
    let solution = (base.n() <= SOLVER_BASE_LIMIT)
        .then(|| min_1switches_to_eulerian(&inst.gadget, half));
    let fixable = solution.as_ref().map(Option::is_some);
    let hamiltonian = cycle.is_some();
    let consistent =
        hamiltonian == decomposition.is_some() && fixable.is_none_or(|f| f == hamiltonian);
    Ok(ReductionReport {
        base_n: base.n(),
        base_m: base.edge_count(),
        hamiltonian,
        hamiltonian_cycle: cycle,
        decomposition,
        gadget_n: inst.gadget.n(),
        gadget_m: inst.gadget.edge_count(),
        gadget_odd: inst.gadget.degree_profile().odd_count,
        half,
        fixable_within_half: fixable,
        solution: solution
            .flatten()
            .map(|s| s.moves.iter().map(|m| m.to_log_line()).collect()),
        consistent,
    })
}
