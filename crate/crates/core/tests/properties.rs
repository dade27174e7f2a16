use corebuilder::completion::{complete_large, complete_small, EdgeKind};
use corebuilder::forest::{complete_forest, min_deficiency_forest};
use corebuilder::generate::{random_forest, vc_bounded};
use corebuilder::io::{parse_decomposition, parse_graph, write_decomposition, write_graph};
use corebuilder::oracle::{brute_force_min_deficiency, brute_force_solve, SearchBudget};
use corebuilder::rng::SplitMix64;
use corebuilder::sequences::{erdos_gallai, range_graphic, realize, RangeSequence};
use corebuilder::treewidth::{min_deficiency_tw, min_fill_decomposition, NiceDecomposition};
use corebuilder::vc::{ilp_feasible, min_vertex_cover, IlpModel, Relation};
use corebuilder::{induced_subgraph, k_core, total_deficiency, Graph, Instance};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Shaves in the given vertex order instead of queue order.
fn k_core_in_order(g: &Graph, k: usize, order: &[usize]) -> Vec<usize> {
    let mut alive = vec![true; g.n()];
    loop {
        let mut changed = false;
        for &v in order {
            if alive[v] && g.neighbors(v).iter().filter(|&&w| alive[w]).count() < k {
                alive[v] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..g.n()).filter(|&v| alive[v]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn k_core_is_idempotent_and_order_free(g in graph_strategy(9), k in 0usize..5, seed in any::<u64>()) {
        let core = k_core(&g, k);
        let (sub, back) = induced_subgraph(&g, &core);
        let again: Vec<usize> = k_core(&sub, k).into_iter().map(|v| back[v]).collect();
        prop_assert_eq!(&again, &core);
        if !core.is_empty() {
            prop_assert!(core.len() > k);
        }
        let mut order: Vec<usize> = (0..g.n()).collect();
        let mut rng = SplitMix64::new(seed);
        for i in (1..order.len()).rev() {
            order.swap(i, rng.range(0, i));
        }
        prop_assert_eq!(k_core_in_order(&g, k, &order), core);
    }

    #[test]
    fn one_edge_lowers_deficiency_by_at_most_two(g in graph_strategy(8), k in 0usize..5) {
        let before = total_deficiency(&g, k);
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !g.has_edge(u, v) {
                    let mut h = g.clone();
                    h.add_edge(u, v).unwrap();
                    let drop = before - total_deficiency(&h, k);
                    prop_assert!(drop <= 2);
                }
            }
        }
    }

    #[test]
    fn sets_inducing_a_core_lie_in_the_core(g in graph_strategy(8), k in 1usize..4, mask in any::<u16>()) {
        let h: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let (sub, _) = induced_subgraph(&g, &h);
        if sub.min_degree().is_some_and(|d| d >= k) {
            let core = k_core(&g, k);
            prop_assert!(h.iter().all(|v| core.contains(v)));
        }
    }

    #[test]
    fn realize_matches_erdos_gallai(mut d in prop::collection::vec(0usize..8, 0..9)) {
        d.sort_unstable_by(|a, b| b.cmp(a));
        let graphic = erdos_gallai(&d).unwrap();
        let real = realize(&d);
        prop_assert_eq!(real.is_some(), graphic);
        if let Some(g) = real {
            prop_assert!((0..d.len()).all(|i| g.degree(i) == d[i]));
        }
    }

    #[test]
    fn range_conditions_one_and_two_imply_three(k in 1usize..6, a_off in 0usize..6, counts in prop::collection::vec(0usize..4, 6)) {
        let a = a_off.min(k);
        let counts: Vec<usize> = counts[..=a].to_vec();
        let seq = RangeSequence::new(k, a, counts).unwrap();
        prop_assume!(seq.n() > k);
        let lo = k - a;
        for d in lo..=k {
            let t = seq.at_least(d);
            if t < lo || t > k {
                let lhs: usize = (d..=k).map(|i| i * seq.count(i)).sum();
                let rhs: usize = t * t.saturating_sub(1) + (lo..d).map(|i| i.min(t) * seq.count(i)).sum::<usize>();
                prop_assert!(lhs <= rhs);
            }
        }
        prop_assert_eq!(range_graphic(&seq).unwrap(), erdos_gallai(&seq.expand()).unwrap());
    }

    #[test]
    fn oracle_is_monotone(g in graph_strategy(7), k in 1usize..4, p in 0usize..8) {
        let mut prev = false;
        for b in 0..4 {
            let yes = brute_force_solve(&Instance::new(g.clone(), k, b, p), SearchBudget::default()).unwrap().feasible;
            prop_assert!(!prev || yes);
            prev = yes;
        }
        let mut last = None;
        for q in (0..=g.n()).rev() {
            let d = brute_force_min_deficiency(&g, k, q).unwrap();
            if let (Some(prev), Some(d)) = (last, d) {
                prop_assert!(d <= prev);
            }
            last = d;
        }
    }

    #[test]
    fn graph_files_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn decomposition_files_round_trip(g in graph_strategy(9), k in 0usize..4, p in 0usize..10) {
        let raw = min_fill_decomposition(&g);
        let text = write_decomposition(&raw);
        let back = parse_decomposition(&text).unwrap();
        let nice = NiceDecomposition::from_raw(&g, &back).unwrap();
        nice.validate(&g).unwrap();
        prop_assert_eq!(
            min_deficiency_tw(&g, &nice, k, p).unwrap(),
            brute_force_min_deficiency(&g, k, p).unwrap()
        );
    }

    #[test]
    fn small_completion_reaches_degree_k(g in graph_strategy(10), k in 0usize..5) {
        prop_assume!(g.n() > k);
        let log = complete_small(&g, k).unwrap();
        let h = log.apply(&g).unwrap();
        prop_assert!(h.min_degree().unwrap() >= k);
        prop_assert!(log.len() <= total_deficiency(&g, k));
        prop_assert_eq!(log.count(EdgeKind::Wasted), 0);
    }
}

fn boxed_models(seed: u64) -> impl Iterator<Item = (IlpModel, Vec<i64>, Vec<i64>)> {
    let mut rng = SplitMix64::new(seed);
    (0..300).map(move |_| {
        let vars = rng.range(1, 5);
        let mut m = IlpModel::new();
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for v in 0..vars {
            let l = rng.range(0, 3) as i64 - 1;
            let h = l + rng.range(0, 4) as i64;
            m.add_var(format!("v{v}"), l, Some(h));
            lo.push(l);
            hi.push(h);
        }
        for _ in 0..rng.range(1, 7) {
            let terms: Vec<(usize, i64)> = (0..vars).map(|v| (v, rng.range(0, 6) as i64 - 3)).collect();
            let rel = [Relation::Le, Relation::Lt, Relation::Eq, Relation::Ge, Relation::Gt][rng.range(0, 4)];
            m.add_constraint("r", &terms, rel, rng.range(0, 10) as i64 - 5);
        }
        (m, lo, hi)
    })
}

#[test]
fn ilp_matches_box_enumeration() {
    for (m, lo, hi) in boxed_models(5) {
        let mut point = lo.clone();
        let mut any = false;
        'outer: loop {
            if m.satisfied_by(&point) {
                any = true;
                break;
            }
            for i in 0..point.len() {
                if point[i] < hi[i] {
                    point[i] += 1;
                    continue 'outer;
                }
                point[i] = lo[i];
            }
            break;
        }
        let found = ilp_feasible(&m).unwrap();
        assert_eq!(found.is_some(), any);
        if let Some(sol) = found {
            assert!(m.satisfied_by(&sol));
        }
    }
}

#[test]
fn forest_completion_is_optimal_and_connected() {
    let mut rng = SplitMix64::new(1);
    for _ in 0..400 {
        let k = rng.range(1, 6);
        let n = rng.range(k + 1, 120);
        let keep = [1.0, 0.9, 0.5][rng.range(0, 2)];
        let t = random_forest(n, keep, &mut rng).unwrap();
        let log = complete_forest(&t, k).unwrap();
        assert!(log.apply(&t).unwrap().min_degree().unwrap() >= k);
        assert_eq!(log.len(), total_deficiency(&t, k).div_ceil(2));
        if k >= 4 {
            let a = Graph::from_edges(n, log.edges.iter().copied()).unwrap();
            assert_eq!(a.components().into_iter().filter(|c| c.len() > 1).count(), 1);
        }
    }
}

#[test]
fn forest_dp_matches_brute_force_on_random_forests() {
    let mut rng = SplitMix64::new(2);
    for _ in 0..300 {
        let n = rng.range(1, 14);
        let g = random_forest(n, rng.unit(), &mut rng).unwrap();
        let k = rng.range(1, 4);
        let p = rng.range(0, n);
        assert_eq!(min_deficiency_forest(&g, k, p).unwrap(), brute_force_min_deficiency(&g, k, p).unwrap());
    }
}

#[test]
fn large_completion_on_random_graphs() {
    let mut rng = SplitMix64::new(3);
    for _ in 0..60 {
        let k = rng.range(2, 3);
        let n = rng.range(3 * k * k, 120);
        let g = vc_bounded(n, rng.range(0, 4), 0.2, &mut rng).unwrap();
        let df = total_deficiency(&g, k);
        if df < 3 * k * k * k {
            continue;
        }
        let log = complete_large(&g, k).unwrap();
        assert_eq!(log.len(), df.div_ceil(2));
        assert_eq!(log.count(EdgeKind::Bad), df % 2);
        assert!(log.apply(&g).unwrap().min_degree().unwrap() >= k);
    }
}

#[test]
fn generated_vc_graphs_have_small_covers() {
    for seed in 0..40 {
        let g = vc_bounded(10, 3, 0.6, &mut SplitMix64::new(seed)).unwrap();
        assert!(min_vertex_cover(&g).len() <= 3);
    }
}
