use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use safesep::oracle::{Family, GeneratorSpec, Oracle};
use safesep::separators::{
    close_separator, component_order_leq, is_ab_separator, is_minimal_ab_separator, is_minimal_st_separator,
    is_st_separator, merge_into_source,
};
use safesep::{VertexSet, WeightedGraph};

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> WeightedGraph {
    let p = rng.gen_range(0.1..0.7);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    WeightedGraph::from_edges(vec![1; n], &edges).unwrap()
}

fn all_subsets(free: &[usize]) -> impl Iterator<Item = VertexSet> + '_ {
    (0u32..1 << free.len()).map(move |m| free.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect())
}

#[test]
fn full_component_test_matches_deletion_definition() {
    let oracle = Oracle::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(3..=9);
        let g = random_graph(&mut rng, n);
        let (s, t) = (0, n - 1);
        let by_deletion = oracle.enumerate_minimal_by_deletion(&g, s, t).unwrap();
        let by_components = oracle.enumerate_minimal_st_separators(&g, s, t).unwrap();
        assert_eq!(by_deletion, by_components);
        let free: Vec<usize> = (1..n - 1).collect();
        for sep in all_subsets(&free) {
            assert_eq!(is_minimal_st_separator(&g, s, t, &sep).unwrap(), by_deletion.contains(&sep));
        }
    }
}

#[test]
fn ab_minimality_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(4..=9);
        let g = random_graph(&mut rng, n);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng);
        let a: VertexSet = verts[..2].iter().copied().collect();
        let b: VertexSet = verts[2..3].iter().copied().collect();
        if !g.neighborhood(&a).unwrap().is_disjoint(&b) {
            continue;
        }
        checked += 1;
        let free: Vec<usize> = verts[3..].to_vec();
        for sep in all_subsets(&free) {
            let separates = is_ab_separator(&g, &a, &b, &sep).unwrap();
            let minimal = separates
                && sep.iter().all(|w| {
                    let mut smaller = sep.clone();
                    smaller.remove(w);
                    !is_ab_separator(&g, &a, &b, &smaller).unwrap()
                });
            assert_eq!(is_minimal_ab_separator(&g, &a, &b, &sep).unwrap(), minimal, "{sep}");
        }
    }
}

#[test]
fn close_separator_is_the_unique_one_inside_the_boundary() {
    let oracle = Oracle::default();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let n = rng.gen_range(3..=10);
        let g = random_graph(&mut rng, n);
        let (s, t) = (0, n - 1);
        if g.has_edge(s, t) {
            continue;
        }
        let sep = close_separator(&g, &VertexSet::from([s]), t).unwrap();
        let boundary = g.neighborhood(&VertexSet::from([s])).unwrap();
        assert!(sep.is_subset(&boundary));
        assert!(is_minimal_st_separator(&g, s, t, &sep).unwrap());
        let all = oracle.enumerate_minimal_st_separators(&g, s, t).unwrap();
        let inside: Vec<_> = all.iter().filter(|m| m.is_subset(&boundary)).collect();
        assert_eq!(inside, vec![&sep]);
    }
}

#[test]
fn order_test_matches_component_inclusion() {
    let oracle = Oracle::default();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for seed in 0..150 {
        let g = GeneratorSpec::new(Family::Interval, rng.gen_range(4..=10), 3, seed).generate().unwrap();
        let n = g.vertex_count();
        let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if s == t || g.has_edge(s, t) {
            continue;
        }
        let all = oracle.enumerate_minimal_st_separators(&g, s, t).unwrap();
        for x in &all {
            for y in &all {
                let direct = g.component_of(x, s).unwrap().is_subset(&g.component_of(y, s).unwrap());
                assert_eq!(component_order_leq(&g, s, t, x, y).unwrap(), direct);
            }
        }
    }
}

#[test]
fn merged_graph_separators() {
    let oracle = Oracle::default();
    let p5 = WeightedGraph::from_edges(vec![1; 5], &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let h = merge_into_source(&p5, 0, &VertexSet::from([2])).unwrap();
    assert!(h.has_edge(0, 2) && h.has_edge(0, 3));
    let fam = oracle.enumerate_minimal_st_separators(&h, 0, 4).unwrap();
    assert_eq!(fam.as_slice(), &[VertexSet::from([3])]);
    assert_eq!(merge_into_source(&p5, 0, &VertexSet::new()).unwrap(), p5);
    let p3 = WeightedGraph::from_edges(vec![1; 3], &[(0, 1), (1, 2)]).unwrap();
    assert!(merge_into_source(&p3, 0, &VertexSet::from([1])).unwrap().has_edge(0, 2));
}

#[test]
fn predicate_examples() {
    let p3 = WeightedGraph::from_edges(vec![1; 3], &[(0, 1), (1, 2)]).unwrap();
    assert!(is_st_separator(&p3, 0, 2, &VertexSet::from([1])).unwrap());
    assert!(!is_st_separator(&p3, 0, 2, &VertexSet::new()).unwrap());
    assert!(is_st_separator(&p3, 0, 2, &VertexSet::from([0])).is_err());
    let star = WeightedGraph::from_edges(vec![1; 4], &[(0, 2), (1, 2), (2, 3)]).unwrap();
    let (a, b) = (VertexSet::from([0, 1]), VertexSet::from([3]));
    assert!(is_minimal_ab_separator(&star, &a, &b, &VertexSet::from([2])).unwrap());
    assert!(!safesep::separators::is_safe_ab_separator(&star, &a, &b, &VertexSet::from([2])).unwrap());
    assert!(is_minimal_ab_separator(&star, &VertexSet::from([0]), &VertexSet::from([0]), &VertexSet::new()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Adding edges inside components keeps a minimal A,B-separator minimal
    /// as long as it still separates.
    #[test]
    fn supergraph_stability(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..=9);
        let g = random_graph(&mut rng, n);
        let a = VertexSet::from([0]);
        let b = VertexSet::from([n - 1]);
        prop_assume!(!g.has_edge(0, n - 1));
        let oracle = Oracle::default();
        for sep in &oracle.enumerate_minimal_st_separators(&g, 0, n - 1).unwrap() {
            prop_assert!(is_minimal_ab_separator(&g, &a, &b, sep).unwrap());
            let mut h = g.clone();
            let parts = g.components(sep).unwrap();
            for c in parts.components() {
                let vs = c.to_vec();
                for (i, &u) in vs.iter().enumerate() {
                    for &v in &vs[i + 1..] {
                        if !h.has_edge(u, v) && rng.gen_bool(0.5) {
                            h.add_edge(u, v).unwrap();
                        }
                    }
                }
            }
            prop_assert!(is_ab_separator(&h, &a, &b, sep).unwrap());
            prop_assert!(is_minimal_ab_separator(&h, &a, &b, sep).unwrap());
        }
    }
}
