//! Minimum-weight s,t vertex cut through the split-vertex flow network.
use safesep::oracle::Oracle;
use safesep::{min_weight_st_separator, vertex_connectivity_st, WeightedGraph};

fn main() {
    // two routes from 0 to 5, one through 1,2,3 and one through 4
    let edges = [(0, 1), (0, 2), (1, 3), (2, 3), (3, 5), (0, 4), (4, 5)];
    let g = WeightedGraph::from_edges(vec![1, 2, 2, 3, 9, 1], &edges).unwrap();

    let (cut, weight) = min_weight_st_separator(&g, 0, 5).unwrap();
    println!("min cut {cut} weight {weight}");
    println!("vertex connectivity {}", vertex_connectivity_st(&g, 0, 5).unwrap());

    let (_, brute) = Oracle::default().min_weight_separator_brute(&g, 0, 5).unwrap();
    assert_eq!(weight, brute);
}
