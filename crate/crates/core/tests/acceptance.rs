mod common;

use std::time::{Duration, Instant};

use common::*;
use eulerswitch::explorer::{build_meta, enumerate_eulerian, meta_connected, meta_hamiltonian, HamiltonOutcome, Mode};
use eulerswitch::graph::pair_count;
use eulerswitch::hardness::{build_gadget, hamiltonian_decomposition, is_hamiltonian, min_1switches_to_eulerian};
use eulerswitch::named;
use eulerswitch::transform::{switch_distance, transform};
use eulerswitch::{generate, in_p};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn c1_feasibility_matches_enumeration() {
    let start = Instant::now();
    let mut checked = 0;
    for n in 3..=7 {
        for m in 0..=pair_count(n) {
            let found = !enumerate_eulerian(n, m, Mode::Labeled).unwrap().is_empty();
            assert_eq!(in_p(n, m).is_feasible(), found, "({n},{m})");
            checked += 1;
        }
    }
    eprintln!("c1: {checked} pairs agree in {:.1?}", start.elapsed());
}

#[test]
fn c2_generator_validity() {
    let start = Instant::now();
    let pairs = feasible_pairs(3, 64);
    for &(n, m) in &pairs {
        let g = generate(n, m).unwrap();
        assert!(g.n() == n && g.edge_count() == m && g.is_eulerian(), "({n},{m})");
    }
    eprintln!("c2: {} feasible pairs generated in {:.1?}", pairs.len(), start.elapsed());
}

#[test]
fn c3_labeled_meta_graphs_connected() {
    let start = Instant::now();
    let pairs = feasible_pairs(3, 6);
    for &(n, m) in &pairs {
        let mg = build_meta(enumerate_eulerian(n, m, Mode::Labeled).unwrap(), Mode::Labeled).unwrap();
        assert!(meta_connected(&mg), "({n},{m}) with {} nodes", mg.nodes.len());
    }
    eprintln!("c3: {} meta-graphs connected in {:.1?}", pairs.len(), start.elapsed());
}

#[test]
fn c4_transform_validity() {
    let start = Instant::now();
    let mut count = 0;
    for (n, m) in [(5, 8), (6, 9)] {
        let nodes = enumerate_eulerian(n, m, Mode::Labeled).unwrap();
        assert_eq!(nodes.is_empty(), !in_p(n, m).is_feasible());
        for g in &nodes {
            for h in &nodes {
                transform(g, h).unwrap().verify_eulerian(h).unwrap();
                count += 1;
            }
        }
    }
    for m in [12, 18, 27] {
        assert!(in_p(9, m).is_feasible());
        for k in 0..500u64 {
            let g = eulerian_sample(9, m, 2 * k);
            let h = eulerian_sample(9, m, 2 * k + 1);
            transform(&g, &h).unwrap().verify_eulerian(&h).unwrap();
            count += 1;
        }
    }
    eprintln!("c4: {count} transforms verified in {:.1?}", start.elapsed());
}

#[test]
fn c5_distance_consistency() {
    let start = Instant::now();
    let mut count = 0;
    for (n, m) in feasible_pairs(3, 5) {
        let nodes = enumerate_eulerian(n, m, Mode::Labeled).unwrap();
        for (i, g) in nodes.iter().enumerate() {
            for h in &nodes[i..] {
                let there = transform(g, h).unwrap().len();
                let back = transform(h, g).unwrap().len();
                let d = switch_distance(g, h, there.max(back)).unwrap().expect("within transform length");
                assert!(d <= there && d <= back);
                assert_eq!(switch_distance(h, g, there.max(back)).unwrap(), Some(d));
                count += 1;
            }
        }
    }
    eprintln!("c5: {count} unordered pairs consistent in {:.1?}", start.elapsed());
}

#[test]
fn c6_reduction_equivalence() {
    let start = Instant::now();
    for base in [named::k4(), named::prism(), named::k33()] {
        let half = base.n() / 2;
        let gadget = build_gadget(&base, 0).unwrap().gadget;
        assert!(is_hamiltonian(&base));
        assert!(hamiltonian_decomposition(&base).unwrap().is_some());
        assert!(min_1switches_to_eulerian(&gadget, half - 1).is_none());
        let seq = min_1switches_to_eulerian(&gadget, half).unwrap();
        assert_eq!(seq.len(), half);
        assert!(seq.endpoint().unwrap().is_eulerian());
    }
    let petersen = named::petersen();
    assert!(!is_hamiltonian(&petersen));
    assert_eq!(hamiltonian_decomposition(&petersen).unwrap(), None);
    let gadget = build_gadget(&petersen, 0).unwrap().gadget;
    assert!(min_1switches_to_eulerian(&gadget, 5).is_none());
    eprintln!("c6: K4, prism, K33, Petersen agree in {:.1?}", start.elapsed());
}

#[test]
fn c7_meta_hamiltonicity() {
    let start = Instant::now();
    let budget = Duration::from_secs(60);
    let mut count = 0;
    for (mode, n_hi) in [(Mode::Labeled, 5), (Mode::Unlabeled, 6)] {
        for (n, m) in feasible_pairs(3, n_hi) {
            let mg = build_meta(enumerate_eulerian(n, m, mode).unwrap(), mode).unwrap();
            let outcome = meta_hamiltonian(&mg, budget);
            assert!(
                matches!(outcome, HamiltonOutcome::Yes(_)),
                "{mode:?} ({n},{m}) with {} nodes: {outcome:?}",
                mg.nodes.len()
            );
            count += 1;
        }
    }
    eprintln!("c7: {count} meta-graphs Hamiltonian in {:.1?}", start.elapsed());
}

#[test]
fn c8_property_suites() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = Vec::new();
    for _ in 0..2000 {
        let n = rng.gen_range(1..=11);
        let g = graph_from_mask(n, rng.gen::<u64>() & ((1u64 << pair_count(n).min(63)) - 1));
        let pick: [usize; 4] = rng.gen();
        if let Some(mv) = move_for(&g, rng.gen_range(1..=2), &pick) {
            failures.extend(check_parity_degree(&g, &mv).err());
            failures.extend(check_involution(&g, &mv).err());
        }
        failures.extend(check_roundtrips(&g).err());
        let keys: Vec<usize> = (0..n).map(|_| rng.gen()).collect();
        failures.extend(check_relabel_invariance(&g, &permutation(n, &keys)).err());
    }
    let pairs = feasible_pairs(3, 9);
    let mut invocations = 0;
    while invocations < 1000 {
        let (n, m) = pairs[rng.gen_range(0..pairs.len())];
        let g = eulerian_sample(n, m, rng.gen());
        let candidates = unbalanced_pairs(&g);
        if candidates.is_empty() {
            continue;
        }
        let (u, v) = candidates[rng.gen_range(0..candidates.len())];
        failures.extend(check_balancing(&g, u, v).err());
        invocations += 1;
    }
    for _ in 0..50 {
        let (n, m) = pairs[rng.gen_range(0..pairs.len())];
        let g = eulerian_sample(n, m, rng.gen());
        let h = eulerian_sample(n, m, rng.gen());
        failures.extend(check_log_roundtrip(&transform(&g, &h).unwrap()).err());
    }
    assert!(failures.is_empty(), "{} failures, first: {}", failures.len(), failures[0]);
    eprintln!("c8: 2000 random graphs, {invocations} balancing switches, 50 logs, no failures in {:.1?}", start.elapsed());
}
