//! The family of minimal s,t-separators that keep a set A on the s side
//! and sit as close to it as possible.
use safesep::oracle::Oracle;
use safesep::{close_to_with, Mode, VertexSet, WeightedGraph};

fn main() {
    // a ladder 0-1-2-3 / 4-5-6-7 with rungs, plus a tail 8 on vertex 3
    let edges = [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (0, 4), (1, 5), (2, 6), (3, 7), (3, 8)];
    let g = WeightedGraph::from_edges(vec![1; 9], &edges).unwrap();
    let (s, t) = (0, 8);

    for a in [VertexSet::new(), VertexSet::from([5]), VertexSet::from([2, 7])] {
        let report = close_to_with(&g, s, t, &a, Mode::Verified).unwrap();
        let truth = Oracle::default().close_family_brute(&g, s, t, &a).unwrap();
        assert_eq!(report.family, truth);
        print!("A = {a}:");
        for sep in &report.family {
            print!(" {sep}");
        }
        println!();
    }
}
