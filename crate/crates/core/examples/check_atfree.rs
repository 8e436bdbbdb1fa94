//! Recognise AT-free graphs and print a certificate when one is not.
use safesep::{find_asteroidal_triple, WeightedGraph};

fn main() {
    let c6 = WeightedGraph::from_edges(vec![1; 6], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
    let c5 = WeightedGraph::from_edges(vec![1; 5], &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();

    for (name, g) in [("C5", &c5), ("C6", &c6)] {
        match find_asteroidal_triple(g) {
            None => println!("{name}: AT-free"),
            Some(w) => {
                println!("{name}: asteroidal triple {:?}", w.triple);
                // each path avoids the closed neighbourhood of the third vertex
                for p in &w.paths {
                    println!("  path {p:?}");
                }
                assert!(w.is_valid(g));
            }
        }
    }
}
