//! Deciding 2-disjoint connected subgraphs by asking for a safe separator
//! in the subdivided graph.
use safesep::oracle::Oracle;
use safesep::{min_safe_separator, Mode, QueryInstance, VertexSet, WeightedGraph};

fn decide(g: &WeightedGraph, a: &VertexSet, b: &VertexSet) -> bool {
    let sub = g.subdivide(1).unwrap();
    let q = QueryInstance::new(sub.graph, a.clone(), b.clone()).unwrap();
    !min_safe_separator(&q, Mode::Fast).unwrap().is_none()
}

fn main() {
    let c6 = WeightedGraph::from_edges(vec![1; 6], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
    let oracle = Oracle::default();
    let queries = [
        (VertexSet::from([0, 1]), VertexSet::from([3, 4])),
        (VertexSet::from([0, 3]), VertexSet::from([1, 4])),
        (VertexSet::from([0]), VertexSet::from([2, 4])),
    ];
    for (a, b) in &queries {
        let fast = decide(&c6, a, b);
        assert_eq!(fast, oracle.two_dcs_brute(&c6, a, b).unwrap());
        println!("A = {a} B = {b}: {}", if fast { "yes" } else { "no" });
    }
}
