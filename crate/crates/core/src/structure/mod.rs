//! Structure of sparse graphs: suspended paths, end-edges, degree-1 counts,
//! the three-way case split and the surgeries used to shrink a graph before
//! embedding it.
//!
//! A *suspended path* is a path whose interior vertices have degree exactly 2
//! in the whole graph. An *end-edge* is an edge at a degree-1 vertex; its
//! other endpoint is the *support*.

mod leaves;
mod surgery;
mod suspended;
mod trichotomy;

pub use leaves::{degree1_bound_check, max_end_edge_matching, DegreeOneCheck, EndEdge};
pub use surgery::{
    remove_all_leaves, remove_leaves_at, shorten_path_by, shorten_suspended_paths_to, strip_leaves_recursive,
    Recipe, Shortening, Surgery,
};
pub use suspended::{chains, is_suspended_path, longest_suspended_path, Chain};
pub use trichotomy::{leaf_hub, trichotomy, HubReport, TrichotomyParams, TrichotomyReport};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::Graph;
    use crate::pattern::PatternSpec;

    fn build(s: &str) -> Graph {
        PatternSpec::parse(s).unwrap().build().unwrap()
    }

    #[test]
    fn suspended_paths_of_small_families() {
        assert_eq!(longest_suspended_path(&build("path:10")), (0..10).collect::<Vec<_>>());
        assert_eq!(longest_suspended_path(&build("star:6")).len(), 2);
        let mut c8 = build("cycle:8");
        c8.add_edge(0, 4);
        let p = longest_suspended_path(&c8);
        assert_eq!(p, vec![0, 1, 2, 3, 4]);
        assert!(is_suspended_path(&c8, &p));
        assert!(!is_suspended_path(&c8, &[3, 4, 5]));
        assert_eq!(longest_suspended_path(&build("cycle:7")).len(), 7);
    }

    #[test]
    fn end_edge_matchings() {
        assert_eq!(max_end_edge_matching(&build("star:6")).len(), 1);
        assert_eq!(max_end_edge_matching(&build("path:6")), vec![(0, 1), (5, 4)]);
        // Spider: centre 0, legs 0-1-2, 0-3-4, 0-5-6.
        let spider = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(max_end_edge_matching(&spider), vec![(2, 1), (4, 3), (6, 5)]);
        assert_eq!(max_end_edge_matching(&build("path:2")), vec![(0, 1)]);
    }

    #[test]
    fn degree_one_bound() {
        let c = degree1_bound_check(&build("path:10"), 10).unwrap();
        assert_eq!((c.leaves, c.bound, c.pass), (2, 2, true));
        let c = degree1_bound_check(&build("complete:4"), 3).unwrap();
        assert_eq!((c.leaves, c.bound, c.pass), (0, -2, true));
        assert!(matches!(degree1_bound_check(&build("path:10"), 9), Err(Error::Precondition(_))));
        assert!(matches!(degree1_bound_check(&Graph::empty(2), 3), Err(Error::Precondition(_))));
        assert!(matches!(degree1_bound_check(&build("cycle:5"), 6), Err(Error::Precondition(_))));
    }

    #[test]
    fn trichotomy_cases() {
        let p = TrichotomyParams::new(5, 2).unwrap();
        let r = trichotomy(&build("path:20"), p).unwrap();
        assert_eq!(r.case(), 1);

        // Double broom: path 0-1-2-3 with leaves 4,5,6 on 0 and 7,8,9 on 3.
        let broom = Graph::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (0, 6), (3, 7), (3, 8), (3, 9)],
        )
        .unwrap();
        let r = trichotomy(&broom, p).unwrap();
        assert_eq!(r.case(), 2);
        assert_eq!(r.end_edge_matching.as_ref().unwrap().len(), 2);

        let r = trichotomy(&build("star:31"), p).unwrap();
        let h = r.hub.as_ref().unwrap();
        assert_eq!(r.case(), 3);
        assert_eq!((h.gamma, h.gamma_degenerate, h.high_degree_count), (-2, true, 1));
        assert_eq!((h.hub, h.hub_leaves.len(), h.required_leaves), (0, 30, 33));
        assert!(r.lemma_claims_hold());
        assert!(r.to_key_values().contains("trichotomy.case3.gamma=-2\n"));
    }

    #[test]
    fn trichotomy_rejects_bad_parameters() {
        assert!(TrichotomyParams::new(5, 1).is_err());
        assert!(TrichotomyParams::new(2, 2).is_err());
        let p = TrichotomyParams::new(5, 2).unwrap();
        assert!(trichotomy(&build("path:4"), p).is_err());
        assert!(trichotomy(&Graph::empty(6), p).is_err());
    }

    #[test]
    fn hub_case_in_the_valid_regime() {
        // Star with 20 leaves plus one subdivided leg: q = 4, s = 3, l = -1.
        let mut edges: Vec<(usize, usize)> = (1..=20).map(|v| (0, v)).collect();
        edges.push((0, 21));
        edges.push((21, 22));
        let g = Graph::from_edges(23, &edges).unwrap();
        let r = trichotomy(&g, TrichotomyParams::new(4, 3).unwrap()).unwrap();
        let h = r.hub.as_ref().unwrap();
        // gamma = 2 * (6 - 3 - 2) + 1 = 3.
        assert_eq!((h.gamma, h.high_degree_count, h.required_leaves), (3, 2, 10));
        assert!(!h.gamma_degenerate && r.lemma_claims_hold());
    }
}
