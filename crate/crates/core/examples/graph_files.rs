//! Generate an AT-free graph, write it in the text format, read it back.
use safesep::cli::GraphDocument;
use safesep::oracle::{Family, GeneratorSpec};
use safesep::{is_at_free, VertexSet};

fn main() {
    let g = GeneratorSpec::new(Family::Interval, 10, 9, 42).generate().unwrap();
    assert!(is_at_free(&g));

    let mut doc = GraphDocument::new(g);
    doc.sets.insert("A".into(), VertexSet::from([0]));
    doc.sets.insert("B".into(), VertexSet::from([9]));
    let text = doc.to_string();
    print!("{text}");

    let back = GraphDocument::parse(&text).unwrap();
    assert_eq!(back.graph, doc.graph);
    assert_eq!(back.resolve_set("A").unwrap(), VertexSet::from([0]));
    assert_eq!(back.resolve_set("3,4").unwrap(), VertexSet::from([3, 4]));
}
