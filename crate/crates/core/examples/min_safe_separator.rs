//! Minimum-weight safe separator on a weighted interval graph.
use safesep::oracle::interval_graph;
use safesep::{min_safe_separator, Mode, QueryInstance, SafeSeparatorAnswer, VertexSet};

fn main() {
    let intervals = [(0, 2), (1, 4), (1, 3), (3, 6), (5, 8), (5, 7), (7, 10), (9, 11)];
    let weights = vec![1, 5, 2, 3, 4, 2, 6, 1];
    let g = interval_graph(&intervals, weights).unwrap();

    let a = VertexSet::from([0, 1]);
    let b = VertexSet::from([6, 7]);
    let q = QueryInstance::new(g, a, b).unwrap();

    match min_safe_separator(&q, Mode::Verified).unwrap() {
        SafeSeparatorAnswer::Found { separator, weight } => {
            println!("separator {separator} weight {weight}");
            let parts = q.graph().components(&separator).unwrap();
            for (c, _) in parts.iter() {
                println!("  component {c}");
            }
        }
        SafeSeparatorAnswer::None => println!("no safe separator"),
    }

    // A claw: the leaves can never stay together once the centre is removed.
    let claw = safesep::WeightedGraph::from_edges(vec![1; 4], &[(0, 3), (1, 3), (2, 3)]).unwrap();
    let q = QueryInstance::new(claw, VertexSet::from([0, 1]), VertexSet::from([2])).unwrap();
    println!("claw: {:?}", min_safe_separator(&q, Mode::Fast).unwrap());
}
