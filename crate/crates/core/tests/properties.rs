use dominion::engine::{brute_force_dominion, dominion, dominion_with_sets, enumerate_gamma_sets, is_dominating};
use dominion::formulas::{self, dominion_bounds};
use dominion::graph::{join, make_complete_multipartite, make_cycle, make_path, make_sun};
use dominion::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use dominion::{census, classify, Census, Graph, VertexSet, Zeta};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

fn random_connected(rng: &mut StdRng, n: usize, extra: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

#[test]
fn engine_matches_oracle_on_random_and_family_graphs() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut graphs: Vec<Graph> = (0..200)
        .map(|i| {
            let n = rng.gen_range(1..=10);
            let p = [0.1, 0.3, 0.5, 0.8][i % 4];
            random_graph(&mut rng, n, p)
        })
        .collect();
    graphs.extend((1..=10).map(|n| make_path(n).unwrap()));
    graphs.extend((3..=10).map(|n| make_cycle(n).unwrap()));
    graphs.extend((3..=5).map(|n| make_sun(n).unwrap()));
    for g in &graphs {
        assert_eq!(dominion(g).unwrap(), brute_force_dominion(g).unwrap(), "{g:?}");
    }
}

#[test]
fn reports_respect_bounds() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(1..=12);
        let g = random_connected(&mut rng, n, 0.2);
        let r = dominion(&g).unwrap();
        let (lo, hi) = dominion_bounds::<Zeta>(n, r.gamma).unwrap();
        assert!(lo <= r.zeta && r.zeta <= hi, "{g:?}");
    }
}

#[test]
fn enumeration_is_sorted_distinct_and_dominating() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n, 0.3);
        let r = dominion_with_sets(&g).unwrap();
        let sets = r.sets.unwrap();
        assert_eq!(sets.len() as Zeta, dominion(&g).unwrap().zeta);
        assert!(sets.windows(2).all(|w| w[0] < w[1]));
        assert!(sets.iter().all(|&s| s.len() == r.gamma && is_dominating(&g, s)));
    }
}

fn path_sets(n: usize) -> Vec<VertexSet> {
    enumerate_gamma_sets(&make_path(n).unwrap()).collect()
}

#[test]
fn path_sets_hold_exactly_one_of_the_last_two_vertices() {
    for n in 2..=21 {
        for s in path_sets(n) {
            assert!(s.contains(n - 2) ^ s.contains(n - 1), "P_{n}: {s:?}");
        }
    }
}

#[test]
fn path_unique_set_conditions() {
    for n in (3..=21).step_by(3) {
        let sets = path_sets(n);
        assert_eq!(sets.len(), 1, "P_{n}");
        assert_eq!(sets[0].len(), n / 3);
        assert!(sets[0].contains(n - 2));
        // the unique set is {1, 4, 7, …} in 0-based terms
        assert_eq!(sets[0], (1..n).step_by(3).collect());
    }
    for n in (5..=23).step_by(3) {
        let sets = path_sets(n);
        assert_eq!(sets.iter().filter(|s| s.contains(n - 1)).count(), 1, "P_{n}");
        assert!(sets.iter().all(|s| !s.contains(2)), "P_{n}");
    }
}

#[test]
fn path_gamma_set_of_3k_dominates_the_cycle() {
    for k in 1..=7 {
        let n = 3 * k;
        let cycle = make_cycle(n.max(3)).unwrap();
        let s = path_sets(n)[0];
        assert!(is_dominating(&cycle, s));
        assert_eq!(s.len(), dominion(&cycle).unwrap().gamma);
    }
}

#[test]
fn cycles_of_length_3k_add_two_rotations() {
    for k in 1..=7 {
        let n = 3 * k;
        let cycle = dominion(&make_cycle(n).unwrap()).unwrap();
        let path = formulas::path_dominion::<Zeta>(n).unwrap();
        assert_eq!(cycle.zeta, path.zeta + 2);
        assert_eq!(cycle.zeta, formulas::cycle_dominion::<Zeta>(n).unwrap().zeta);
    }
}

#[test]
fn multipartite_formula_matches_engine() {
    for parts in dominion::harness::multipartite_part_vectors() {
        let g = make_complete_multipartite(&parts).unwrap();
        let f = formulas::multipartite_dominion::<Zeta>(&parts).unwrap();
        let r = brute_force_dominion(&g).unwrap();
        assert_eq!((f.gamma, f.zeta), (Some(r.gamma), r.zeta), "{parts:?}");
    }
}

#[test]
fn census_agrees_with_independent_recount() {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..40 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.35);
        let c = census(&g).unwrap();
        let mut recount = Census::<Zeta>::default();
        for s in dominion_with_sets(&g).unwrap().sets.unwrap() {
            let f = classify(&g, s).unwrap();
            recount.add(f).unwrap();
            if f.clique && s.len() >= 2 {
                assert!(f.connected && f.total);
            }
            if f.independent && s.len() >= 2 {
                assert!(!f.total);
            }
            if f.clique {
                assert!(f.connected);
            }
        }
        assert_eq!(c, recount);
    }
}

#[test]
fn join_edge_counts() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..50 {
        let (n1, n2) = (rng.gen_range(0..=20), rng.gen_range(0..=20));
        let g1 = random_graph(&mut rng, n1, 0.4);
        let g2 = random_graph(&mut rng, n2, 0.4);
        let j = join(&g1, &g2).unwrap();
        assert_eq!(j.n(), n1 + n2);
        assert_eq!(j.edge_count(), g1.edge_count() + g2.edge_count() + n1 * n2);
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        let code = emit_graph6(&g);
        prop_assert_eq!(&parse_graph6(&code).unwrap(), &g);
        prop_assert_eq!(emit_graph6(&parse_graph6(&code).unwrap()), code);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(30)) {
        prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn generated_graphs_are_simple(g in arb_graph(40)) {
        for v in 0..g.n() {
            prop_assert!(!g.neighbors(v).contains(v));
            for u in g.neighbors(v) {
                prop_assert!(g.neighbors(u).contains(v));
            }
        }
    }
}
