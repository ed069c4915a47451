mod common;

use bihamilton::{
    check_condition_m, check_expansion, find_complete_matching, BipartiteDigraph, Direction, MatchDirection, Matching,
    VertexSet,
};
use common::{any_digraph, brute_has_matching, m_digraph};
use proptest::prelude::*;

#[test]
fn complete_graph_gets_identity_matching() {
    let g = BipartiteDigraph::complete(3).unwrap();
    let m = find_complete_matching(&g, MatchDirection::XToY).unwrap();
    assert_eq!(m.pairs().collect::<Vec<_>>(), vec![(0, 3), (1, 4), (2, 5)]);
    let m = find_complete_matching(&g, MatchDirection::YToX).unwrap();
    assert_eq!(m.pairs().collect::<Vec<_>>(), vec![(3, 0), (4, 1), (5, 2)]);
}

#[test]
fn isolated_source_is_a_violator() {
    let g = BipartiteDigraph::complete(3).unwrap();
    let g = (3..6).fold(g, |g, y| g.without_arc(0, y).unwrap());
    let v = find_complete_matching(&g, MatchDirection::XToY).unwrap_err();
    assert_eq!(v.set, VertexSet::singleton(0));
    assert_eq!(v.neighbours, VertexSet::EMPTY);
    assert!(v.validate(&g));
    let report = check_expansion(&g).unwrap();
    assert_eq!(report.violator.map(|v| v.set), Some(VertexSet::singleton(0)));
    assert!(check_expansion(&BipartiteDigraph::complete(3).unwrap()).unwrap().holds());
}

#[test]
fn dprime_has_a_matching_from_x() {
    let g = bihamilton::gen_dprime(2).unwrap();
    let m = find_complete_matching(&g, MatchDirection::XToY).unwrap();
    assert!(m.validate(&g).is_ok());
    assert!(m.contains(1, 3));
}

#[test]
fn from_pairs_rejects_bad_sets() {
    let g = BipartiteDigraph::complete(2).unwrap();
    assert!(Matching::from_pairs(&g, MatchDirection::XToY, &[(0, 2)]).is_err());
    assert!(Matching::from_pairs(&g, MatchDirection::XToY, &[(0, 2), (1, 2)]).is_err());
    assert!(Matching::from_pairs(&g, MatchDirection::XToY, &[(2, 0), (3, 1)]).is_err());
    let sparse = BipartiteDigraph::new(2, [(0, 2), (1, 2)]).unwrap();
    assert!(Matching::from_pairs(&sparse, MatchDirection::XToY, &[(0, 2), (1, 3)]).is_err());
}

proptest! {
    #[test]
    fn outcomes_validate(g in any_digraph(2, 7)) {
        for dir in [MatchDirection::XToY, MatchDirection::YToX] {
            match find_complete_matching(&g, dir) {
                Ok(m) => {
                    prop_assert!(m.validate(&g).is_ok());
                    prop_assert_eq!(m.direction(), dir);
                    let pairs: Vec<_> = m.pairs().collect();
                    prop_assert_eq!(pairs.len(), g.class_size());
                    let ends: VertexSet = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
                    prop_assert_eq!(ends, g.vertices());
                    prop_assert!(pairs.iter().all(|&(u, v)| g.has_arc(u, v) && m.partner(u) == v && m.partner(v) == u));
                }
                Err(v) => {
                    prop_assert!(v.validate(&g));
                    prop_assert!(v.neighbours.len() < v.set.len());
                    prop_assert_eq!(v.neighbours, g.neighborhood(v.set, Direction::Out));
                }
            }
        }
    }

    #[test]
    fn existence_agrees_with_hall(g in any_digraph(2, 6)) {
        prop_assert_eq!(find_complete_matching(&g, MatchDirection::XToY).is_ok(), brute_has_matching(&g, true));
        prop_assert_eq!(find_complete_matching(&g, MatchDirection::YToX).is_ok(), brute_has_matching(&g, false));
    }

    #[test]
    fn condition_m_gives_expansion_and_a_matching(g in m_digraph(2, 7)) {
        prop_assert!(check_condition_m(&g).satisfied);
        prop_assert!(check_expansion(&g).unwrap().holds());
        let forward = find_complete_matching(&g, MatchDirection::XToY);
        let backward = find_complete_matching(&g, MatchDirection::YToX);
        prop_assert!(forward.is_ok() || backward.is_ok());
    }

    #[test]
    fn expansion_violators_validate(g in any_digraph(2, 6)) {
        let report = check_expansion(&g).unwrap();
        prop_assert_eq!(report.max_size, g.class_size().div_ceil(2));
        if let Some(v) = report.violator {
            prop_assert!(v.validate(&g));
            prop_assert!(v.set.len() <= report.max_size);
        }
    }
}
