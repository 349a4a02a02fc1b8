//! Canonical codes for small graphs.
//!
//! Individualization-refinement: the vertex partition is refined by neighbor
//! counts into each cell until stable, then the first non-singleton cell is
//! split on each of its vertices in turn. Every discrete partition reached is
//! a relabeling; the code is the lexicographically largest relabeled
//! adjacency string. Automorphisms found along the way (two leaves with equal
//! strings) prune sibling branches in the same orbit.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by [`canonical_code`].
pub const CANON_MAX_N: usize = 12;

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    n: usize,
    rows: &'a [u16],
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

fn refine(rows: &[u16], mut part: Partition) -> Partition {
    loop {
        let cell_of = {
            let n = rows.len();
            let mut c = vec![0usize; n];
            for (k, cell) in part.iter().enumerate() {
                for &v in cell {
                    c[v] = k;
                }
            }
            c
        };
        let mut next: Partition = Vec::with_capacity(part.len());
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // Signature: neighbor count into each cell, in cell order.
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u8; part.len()];
                    let mut r = rows[v];
                    while r != 0 {
                        let w = r.trailing_zeros() as usize;
                        r &= r - 1;
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                    start = k;
                }
            }
        }
        // Cells only ever split, so an unchanged count means a stable partition.
        let stable = next.len() == part.len();
        part = next;
        if stable {
            return part;
        }
    }
}

fn individualize(part: &Partition, cell: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(part.len() + 1);
    out.extend(part[..cell].iter().cloned());
    out.push(vec![v]);
    out.push(part[cell].iter().copied().filter(|&w| w != v).collect());
    out.extend(part[cell + 1..].iter().cloned());
    out
}

fn orbit_root(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

impl Search<'_> {
    fn leaf_code(&self, order: &[usize]) -> Vec<u8> {
        // order[k] = vertex placed at position k
        let mut code = Vec::with_capacity(1 + (self.n * self.n).div_ceil(8));
        code.push(self.n as u8);
        let mut acc = 0u8;
        let mut filled = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let bit = self.rows[order[i]] >> order[j] & 1;
                acc = acc << 1 | bit as u8;
                filled += 1;
                if filled == 8 {
                    code.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            code.push(acc << (8 - filled));
        }
        code
    }

    fn record_automorphism(&mut self, a: &[usize], b: &[usize]) {
        // Both orders give the same string, so position-wise a[k] -> b[k] is an automorphism.
        let mut perm = vec![0; self.n];
        for k in 0..self.n {
            perm[a[k]] = b[k];
        }
        if perm.iter().enumerate().any(|(v, &p)| v != p) {
            self.automorphisms.push(perm);
        }
    }

    fn visit(&mut self, part: Partition, prefix: &mut Vec<usize>) {
        let Some(target) = part.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = part.iter().map(|c| c[0]).collect();
            let code = self.leaf_code(&order);
            if let Some((first_code, first_order)) = &self.first {
                if *first_code == code {
                    let fo = first_order.clone();
                    self.record_automorphism(&fo, &order);
                }
            } else {
                self.first = Some((code.clone(), order.clone()));
            }
            match &self.best {
                Some((best_code, best_order)) if *best_code == code => {
                    let bo = best_order.clone();
                    self.record_automorphism(&bo, &order);
                }
                Some((best_code, _)) if *best_code > code => {}
                _ => self.best = Some((code, order)),
            }
            return;
        };
        let cell = part[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() {
                // Orbits of the group generated by known automorphisms fixing the prefix pointwise.
                let mut parent: Vec<usize> = (0..self.n).collect();
                for a in &self.automorphisms {
                    if prefix.iter().all(|&p| a[p] == p) {
                        for x in 0..self.n {
                            let (rx, ry) = (orbit_root(&mut parent, x), orbit_root(&mut parent, a[x]));
                            if rx != ry {
                                parent[rx] = ry;
                            }
                        }
                    }
                }
                let rv = orbit_root(&mut parent, v);
                if tried.iter().any(|&t| orbit_root(&mut parent, t) == rv) {
                    continue;
                }
            }
            tried.push(v);
            prefix.push(v);
            let child = refine(self.rows, individualize(&part, target, v));
            self.visit(child, prefix);
            prefix.pop();
        }
    }
}

/// Canonical code and a relabeling `perm` with `g.relabel(perm)` equal for
/// all isomorphic inputs.
pub fn canonical_form(g: &Graph) -> Result<(Vec<u8>, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::TooLarge { n, limit: CANON_MAX_N });
    }
    let mut rows = vec![0u16; n];
    for e in g.edges() {
        rows[e.u()] |= 1 << e.v();
        rows[e.v()] |= 1 << e.u();
    }
    if n == 0 {
        return Ok((vec![0], Vec::new()));
    }
    let mut search = Search {
        n,
        rows: &rows,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    let root = refine(&rows, vec![(0..n).collect()]);
    search.visit(root, &mut Vec::new());
    let (code, order) = search.best.expect("search reaches at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((code, perm))
}

/// Byte string identical exactly for isomorphic graphs. Limited to `n <= 12`.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    canonical_form(g).map(|(code, _)| code)
}

/// The canonical representative `g.relabel(perm)`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical_form(g)?;
    g.relabel(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn labeled_four_cycles_share_a_code() {
        let a = Graph::cycle_on(4, &[0, 1, 2, 3]).unwrap();
        let b = Graph::cycle_on(4, &[0, 2, 1, 3]).unwrap();
        let c = Graph::cycle_on(4, &[0, 1, 3, 2]).unwrap();
        let ca = canonical_code(&a).unwrap();
        assert_eq!(ca, canonical_code(&b).unwrap());
        assert_eq!(ca, canonical_code(&c).unwrap());
    }

    #[test]
    fn triangle_and_path_differ() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_ne!(
            canonical_code(&Graph::complete(3)).unwrap(),
            canonical_code(&path).unwrap()
        );
    }

    #[test]
    fn same_degrees_not_isomorphic() {
        // C6 vs two triangles; prism vs K33.
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_code(&c6).unwrap(), canonical_code(&tt).unwrap());
        assert_ne!(
            canonical_code(&named::prism()).unwrap(),
            canonical_code(&named::k33()).unwrap()
        );
    }

    #[test]
    fn highly_symmetric_inputs_finish() {
        for g in [Graph::empty(12), Graph::complete(12), named::petersen()] {
            let (code, perm) = canonical_form(&g).unwrap();
            assert_eq!(canonical_code(&g.relabel(&perm).unwrap()).unwrap(), code);
        }
    }

    #[test]
    fn canonical_graph_is_idempotent() {
        let g = Graph::from_edges(6, [(0, 3), (3, 5), (5, 0), (1, 2), (2, 4), (1, 4), (0, 1)]).unwrap();
        let c = canonical_graph(&g).unwrap();
        assert_eq!(canonical_graph(&c).unwrap(), c);
    }

    #[test]
    fn rejects_large_graphs() {
        assert_eq!(
            canonical_code(&Graph::empty(13)),
            Err(Error::TooLarge { n: 13, limit: 12 })
        );
    }
}
