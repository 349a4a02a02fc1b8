//! Named cubic graphs used by the hardness tooling and the CLI (`@k4`, `@petersen`, ...).

use crate::graph::{Edge, Graph};

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("built-in edge lists are simple")
}

/// Graph from LCF notation: the cycle `0..n` plus chords `i -> i + shifts[i % len]`.
pub fn lcf(n: usize, shifts: &[isize]) -> Graph {
    let mut g = Graph::cycle(n).expect("n >= 3");
    for i in 0..n {
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        let e = Edge::of(i, j);
        if !g.has(e) {
            g.insert_edge(e).expect("checked absent");
        }
    }
    g
}

pub fn k4() -> Graph {
    Graph::complete(4)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// Triangular prism: triangles `0-1-2` and `3-4-5` joined by `i - i+3`.
pub fn prism() -> Graph {
    build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

/// Complete bipartite K_{3,3} with sides `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    build(6, &edges)
}

pub fn dodecahedron() -> Graph {
    lcf(20, &[10, 7, 4, -4, -7, 10, -4, 7, -7, 4])
}

/// Resolves `k4`, `petersen`, `prism`, `k33`, `dodecahedron` (with or without a leading `@`).
pub fn by_name(name: &str) -> Option<Graph> {
    match name.strip_prefix('@').unwrap_or(name) {
        "k4" => Some(k4()),
        "petersen" => Some(petersen()),
        "prism" => Some(prism()),
        "k33" => Some(k33()),
        "dodecahedron" => Some(dodecahedron()),
        _ => None,
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["k4", "petersen", "prism", "k33", "dodecahedron"];
