mod common;

use bihamilton::io::{parse_json, parse_text, to_json, to_text};
use bihamilton::{gen_dak, gen_dprime, gen_tak, BipartiteDigraph, Direction, Error, VertexSet};
use common::{any_digraph, in_degree, out_degree};
use proptest::prelude::*;

#[test]
fn construction_rejects_bad_input() {
    let complete = BipartiteDigraph::complete(2).unwrap();
    assert_eq!(complete.arc_count(), 8);
    let all: Vec<_> = common::cross_pairs(2);
    assert_eq!(BipartiteDigraph::new(2, all).unwrap(), complete);

    let err = BipartiteDigraph::new(2, [(0, 2), (0, 1)]).unwrap_err();
    assert!(matches!(err, Error::SameClassArc(0, 1)));
    assert!(err.to_string().contains("(0, 1)"));
    assert!(matches!(BipartiteDigraph::new(1, []), Err(Error::ClassTooSmall(1))));
    assert!(matches!(BipartiteDigraph::new(2, [(0, 4)]), Err(Error::VertexOutOfRange { .. })));
    assert!(matches!(BipartiteDigraph::new(2, [(0, 2), (0, 2)]), Err(Error::DuplicateArc(0, 2))));
}

#[test]
fn dprime_at_two_from_its_rules() {
    // R = {0}, S = {1}, U = {2}, W = {3}.
    let mut arcs = vec![(0, 2), (0, 3), (2, 0), (2, 1), (1, 3), (3, 1)];
    arcs.sort_unstable();
    let g = gen_dprime(2).unwrap();
    assert_eq!(g.arcs().collect::<Vec<_>>(), arcs);
    assert_eq!(g.arc_count(), 6);
    let degree_sum: usize = (0..4).map(|v| g.total_degree(v)).sum();
    assert_eq!(degree_sum, 2 * g.arc_count());
}

#[test]
fn degree_examples() {
    let k3 = BipartiteDigraph::complete(3).unwrap();
    for v in 0..6 {
        let d = k3.degree(v, k3.vertices()).unwrap();
        assert_eq!((d.out, d.inn, d.total), (3, 3, 6));
    }
    for a in [2, 4, 6, 8] {
        let g = gen_dprime(a).unwrap();
        assert!((0..2 * a).all(|v| g.degree(v, g.vertices()).unwrap().total == 3 * a / 2));
    }
    // S block of D(4, 1) is x1..x3.
    let g = gen_dak(4, 1).unwrap();
    for s in 1..4 {
        assert_eq!(g.degree(s, g.vertices()).unwrap().total, 5);
    }
    assert!(k3.degree(6, k3.vertices()).is_err());
    let half = VertexSet::range(0, 3);
    assert_eq!(k3.degree(3, half).unwrap().total, 6);
    assert_eq!(k3.degree(0, half).unwrap().total, 0);
}

#[test]
fn neighbourhood_examples() {
    let k2 = BipartiteDigraph::complete(2).unwrap();
    assert_eq!(k2.neighborhood(VertexSet::EMPTY, Direction::Out), VertexSet::EMPTY);
    assert_eq!(k2.neighborhood(VertexSet::singleton(0), Direction::Out), k2.y_class());
    // T(3, 1): R = {x0}, S = {x1, x2}, U = {y0}, W = {y1, y2}.
    let t = gen_tak(3, 1).unwrap();
    let w: VertexSet = [4, 5].into_iter().collect();
    assert_eq!(t.neighborhood(w, Direction::Out), VertexSet::singleton(0));
}

#[test]
fn induced_examples() {
    let k3 = BipartiteDigraph::complete(3).unwrap();
    assert_eq!(k3.induced(k3.vertices()).to_balanced().unwrap(), k3);
    let empty = k3.induced(VertexSet::EMPTY);
    assert!(empty.is_empty());
    assert_eq!(empty.arc_count(), 0);
    let part: VertexSet = [0, 1, 3, 4].into_iter().collect();
    let view = k3.induced(part);
    assert_eq!(view.original_ids(), &[0, 1, 3, 4]);
    assert_eq!(view.to_balanced().unwrap(), BipartiteDigraph::complete(2).unwrap());
    let lopsided = k3.induced([0, 1, 3].into_iter().collect());
    assert_eq!((lopsided.x_count(), lopsided.y_count()), (2, 1));
    assert!(lopsided.to_balanced().is_none());
}

#[test]
fn strong_connectivity_examples() {
    assert!(BipartiteDigraph::complete(2).unwrap().is_strongly_connected());
    assert!(!gen_dprime(2).unwrap().is_strongly_connected());
    assert!(gen_tak(3, 1).unwrap().is_strongly_connected());
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = parse_text("a 2\nx0 y0\n# note\nx0 q7\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    let err = parse_text("a 2\nx0 y0\nx0 y0\n").unwrap_err();
    assert!(err.to_string().contains("line 3"), "{err}");
    assert!(parse_json("{\"a\": 2, \"arcs\": [[\"x0\", \"x1\"]]}").is_err());
}

proptest! {
    #[test]
    fn degrees_match_neighbourhoods(g in any_digraph(2, 7)) {
        let all = g.vertices();
        for v in 0..g.order() {
            let d = g.degree(v, all).unwrap();
            prop_assert_eq!(d.out, g.neighborhood(VertexSet::singleton(v), Direction::Out).len());
            prop_assert_eq!(d.inn, g.neighborhood(VertexSet::singleton(v), Direction::In).len());
            prop_assert_eq!(d.out, out_degree(&g, v));
            prop_assert_eq!(d.inn, in_degree(&g, v));
            prop_assert_eq!(d.total, d.out + d.inn);
            prop_assert!(d.out <= g.class_size() && d.inn <= g.class_size());
        }
        let outs: usize = (0..g.order()).map(|v| g.out_degree(v)).sum();
        let ins: usize = (0..g.order()).map(|v| g.in_degree(v)).sum();
        prop_assert_eq!(outs, g.arc_count());
        prop_assert_eq!(ins, g.arc_count());
    }

    #[test]
    fn serialization_round_trips(g in any_digraph(2, 8)) {
        let whole = g.induced(g.vertices()).to_balanced().unwrap();
        prop_assert_eq!(&whole, &g);
        let text = to_text(&whole);
        let back = parse_text(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_text(&back), text);
        prop_assert_eq!(parse_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn induced_views_keep_arcs(g in any_digraph(2, 6), bits in any::<u64>()) {
        let keep = VertexSet::from_bits(bits) & g.vertices();
        let view = g.induced(keep);
        prop_assert_eq!(view.order(), keep.len());
        for u in 0..view.order() {
            for v in 0..view.order() {
                prop_assert_eq!(view.has_arc(u, v), g.has_arc(view.original_id(u), view.original_id(v)));
            }
        }
    }

    #[test]
    fn strong_connectivity_matches_reachability(g in any_digraph(2, 6)) {
        let all = g.vertices();
        let expected = (0..g.order()).all(|v| g.reachable_within(v, all) == all);
        prop_assert_eq!(g.is_strongly_connected(), expected);
    }
}
