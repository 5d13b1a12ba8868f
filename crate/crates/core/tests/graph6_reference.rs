//! graph6 strings produced by networkx for the same vertex labelings.

use bcast_core::families::*;
use bcast_core::io::{parse_graph, serialize_graph, Format};
use bcast_core::Graph;

const GOLDENS: &[(&str, &str)] = &[
    ("petersen", "IheA@GUAo"),
    ("heawood", "MhEGHC@AI?_PC@_G_"),
    ("pappus", "QhEGGD@?G__P?@G?_GGO@?CE?AG"),
    ("mcgee", "WhCGGD@?G?`@_@??_GG_@??C?GGC?H??C?@@?C?GG??o?@@"),
    ("p7", "FhCGG"),
    ("star4", "Ds_"),
];

#[test]
fn named_graphs_match_reference_encoding() {
    for &(name, expected) in GOLDENS {
        let g = by_name(name).unwrap();
        assert_eq!(serialize_graph(&g, Format::Graph6), expected, "{name}");
        assert_eq!(parse_graph(expected, Format::Graph6).unwrap().graph, g, "{name}");
    }
}

#[test]
fn long_form_vertex_count() {
    let g = Graph::from_edges(100, &[(0, 99), (5, 6)]).unwrap();
    let s = serialize_graph(&g, Format::Graph6);
    assert!(s.starts_with("~?@c???G"));
    assert_eq!(s.len(), 829);
    assert_eq!(parse_graph(&s, Format::Graph6).unwrap().graph, g);
}

#[test]
fn header_is_accepted() {
    let g = parse_graph(">>graph6<<IheA@GUAo", Format::Graph6).unwrap().graph;
    assert_eq!(g, petersen());
}

#[test]
fn malformed_input_is_rejected() {
    for bad in ["", "I", "IheA@GUA", "IheA@GUAoo", "I\u{7f}eA@GUAo"] {
        assert!(parse_graph(bad, Format::Graph6).is_err(), "{bad:?}");
    }
}
