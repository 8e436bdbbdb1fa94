use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use safesep::oracle::{random_ab, Family, GeneratorSpec, Oracle};
use safesep::separators::{close_separator, component_order_leq, is_minimal_st_separator};
use safesep::{
    close_to, close_to_with, min_safe_separator, Mode, QueryInstance, SafeSeparatorAnswer, SepError, VertexSet,
    WeightedGraph,
};

fn generator(seed: u64) -> GeneratorSpec {
    let family = [Family::Interval, Family::RejectionAtFree, Family::CliqueMinusMatching][(seed % 3) as usize];
    GeneratorSpec::new(family, 5 + (seed as usize / 3) % 8, 6, seed)
}

/// Queries whose `A` reaches into a component of `G - T_s` other than the
/// terminals' own, which is where the candidate loop does its work.
#[test]
fn close_to_exact_when_a_is_detached() {
    let oracle = Oracle::default();
    let mut exercised = 0;
    for seed in 0..6000u64 {
        let g = generator(seed).generate().unwrap();
        let n = g.vertex_count();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if s == t || g.has_edge(s, t) {
            continue;
        }
        let ts = close_separator(&g, &VertexSet::from([s]), t).unwrap();
        let parts = g.components(&ts).unwrap();
        let mut pool: Vec<usize> = parts
            .components()
            .iter()
            .filter(|c| !c.contains(s) && !c.contains(t))
            .flat_map(|c| c.to_vec())
            .collect();
        if pool.is_empty() {
            continue;
        }
        pool.shuffle(&mut rng);
        let mut a: VertexSet = pool.iter().take(rng.gen_range(1..=3)).copied().collect();
        if rng.gen_bool(0.5) {
            let v = rng.gen_range(0..n);
            if v != s && v != t {
                a.insert(v);
            }
        }
        let report = close_to_with(&g, s, t, &a, Mode::Verified).unwrap();
        let truth = oracle.close_family_brute(&g, s, t, &a).unwrap();
        assert_eq!(report.family, truth, "seed {seed}: s={s} t={t} A={a}");
        assert!(report.chain_ok);
        exercised += usize::from(!report.restricted);
    }
    assert!(exercised > 80, "only {exercised} runs reached the candidate loop");
}

#[test]
fn close_to_soundness() {
    for seed in 0..400u64 {
        let g = generator(seed).generate().unwrap();
        let n = g.vertex_count();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng);
        let (s, t) = (verts[0], verts[1]);
        let a: VertexSet = verts[2..2 + rng.gen_range(0..=2.min(n - 2))].iter().copied().collect();
        for sep in &close_to(&g, s, t, &a).unwrap() {
            assert!(is_minimal_st_separator(&g, s, t, sep).unwrap());
            assert!(a.is_subset(&g.component_of(sep, s).unwrap()));
        }
    }
}

#[test]
fn close_to_family_examples() {
    let p5 = WeightedGraph::from_edges(vec![1; 5], &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let fam = close_to(&p5, 0, 4, &VertexSet::from([2])).unwrap();
    assert_eq!(fam.as_slice(), &[VertexSet::from([3])]);
    let fam = close_to(&p5, 0, 4, &VertexSet::new()).unwrap();
    assert_eq!(fam.as_slice(), &[VertexSet::from([1])]);
}

#[test]
fn min_safe_matches_oracle_across_families() {
    let oracle = Oracle::default();
    let mut checked = 0;
    for seed in 0..900u64 {
        let g = generator(seed).generate().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some((a, b)) = random_ab(&g, &mut rng, 3) else { continue };
        let q = QueryInstance::new(g.clone(), a.clone(), b.clone()).unwrap();
        let fast = min_safe_separator(&q, Mode::Fast).unwrap();
        assert_eq!(fast, min_safe_separator(&q, Mode::Verified).unwrap());
        let truth = oracle.min_safe_brute(&g, &a, &b).unwrap();
        assert_eq!(fast.weight(), truth.weight(), "seed {seed}: A={a} B={b}");
        checked += 1;
    }
    assert!(checked > 400, "only {checked} queries");
}

#[test]
fn doubling_weights_doubles_the_answer() {
    for seed in 0..300u64 {
        let g = generator(seed).generate().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some((a, b)) = random_ab(&g, &mut rng, 3) else { continue };
        let mut heavy = g.clone();
        for v in g.vertices() {
            heavy.set_weight(v, 2 * g.weight(v)).unwrap();
        }
        let base = min_safe_separator(&QueryInstance::new(g, a.clone(), b.clone()).unwrap(), Mode::Fast).unwrap();
        let doubled = min_safe_separator(&QueryInstance::new(heavy, a, b).unwrap(), Mode::Fast).unwrap();
        match (base, doubled) {
            (SafeSeparatorAnswer::None, SafeSeparatorAnswer::None) => {}
            (
                SafeSeparatorAnswer::Found { separator: s1, weight: w1 },
                SafeSeparatorAnswer::Found { separator: s2, weight: w2 },
            ) => {
                assert_eq!(s1, s2);
                assert_eq!(2 * w1, w2);
            }
            other => panic!("seed {seed}: {other:?}"),
        }
    }
}

#[test]
fn pair_condition_is_symmetric_in_form() {
    let oracle = Oracle::default();
    for seed in 0..200u64 {
        let g = generator(seed).generate().unwrap();
        let n = g.vertex_count();
        let (s, t) = (0, n - 1);
        if g.has_edge(s, t) {
            continue;
        }
        let all = oracle.enumerate_minimal_st_separators(&g, s, t).unwrap();
        for x in &all {
            for y in &all {
                let subset_form = x.is_subset(&y.union(&g.component_of(y, s).unwrap()));
                assert_eq!(component_order_leq(&g, s, t, x, y).unwrap(), subset_form);
            }
        }
    }
}

#[test]
fn verified_mode_rejects_asteroidal_graphs() {
    let mut edges: Vec<_> = (1..6).map(|i| (i - 1, i)).collect();
    edges.push((0, 5));
    let c6 = WeightedGraph::from_edges(vec![1; 6], &edges).unwrap();
    let q = QueryInstance::new(c6, VertexSet::from([0]), VertexSet::from([3])).unwrap();
    assert_eq!(min_safe_separator(&q, Mode::Verified), Err(SepError::NotAtFree([0, 2, 4])));
    assert!(min_safe_separator(&q, Mode::Fast).is_ok());
}

#[test]
fn degenerate_success_returns_common_neighbourhood() {
    // 1 and 2 are the only vertices between A and B, and both touch each side
    let g = WeightedGraph::from_edges(vec![1, 4, 6, 1], &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    let q = QueryInstance::new(g, VertexSet::from([0]), VertexSet::from([3])).unwrap();
    assert_eq!(
        min_safe_separator(&q, Mode::Verified).unwrap(),
        SafeSeparatorAnswer::Found { separator: VertexSet::from([1, 2]), weight: 10 }
    );
}
