//! Timing on a few thousand vertices.
use std::time::Instant;

use safesep::oracle::{Family, GeneratorSpec};
use safesep::{min_safe_separator, Mode, QueryInstance, VertexSet};

fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3000);
    let g = GeneratorSpec::new(Family::Interval, n, 20, 7).generate().unwrap();
    println!("n = {} m = {}", g.vertex_count(), g.edge_count());

    let far = |from: usize| {
        let mut seen = VertexSet::from([from]);
        let mut frontier = seen.clone();
        loop {
            let next = g.neighborhood(&seen).unwrap();
            if next.is_empty() {
                return frontier.iter().next().unwrap();
            }
            frontier = next.clone();
            seen = seen.union(&next);
        }
    };
    let a = far(0);
    let b = far(a);

    let started = Instant::now();
    let q = QueryInstance::new(g, VertexSet::from([a]), VertexSet::from([b])).unwrap();
    let ans = min_safe_separator(&q, Mode::Fast).unwrap();
    println!("A = {{{a}}} B = {{{b}}} -> {:?}", ans.weight());
    println!("{:.2?}", started.elapsed());
}
