//! Library answers checked against independent brute-force oracles written
//! here from the definitions.

use ramsey_books::arrowing::{export_cnf, ramsey_number, var_index, ArrowInstance, RamseyValue};
use ramsey_books::bounds::{evaluate, BoundParams, TheoremId};
use ramsey_books::chromatic::chromatic_data_with;
use ramsey_books::coloring::{burr_coloring, Color, EdgeColoring};
use ramsey_books::embed::find_embedding;
use ramsey_books::extract::sparse_parameters;
use ramsey_books::generate::{random_sparse_connected_with, rng};
use ramsey_books::structure::{longest_suspended_path, max_end_edge_matching};
use ramsey_books::{Budget, Graph, PatternSpec};
use rand::Rng;

fn pattern(s: &str) -> Graph {
    PatternSpec::parse(s).unwrap().build().unwrap()
}

/// Tries every injective map by recursion over pattern vertices.
fn brute_contains(host: &Graph, pat: &Graph) -> bool {
    fn go(host: &Graph, pat: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == pat.order() {
            return true;
        }
        for h in 0..host.order() {
            if used[h] || (0..i).any(|j| pat.has_edge(i, j) && !host.has_edge(h, map[j])) {
                continue;
            }
            used[h] = true;
            map.push(h);
            if go(host, pat, map, used) {
                return true;
            }
            map.pop();
            used[h] = false;
        }
        false
    }
    pat.order() <= host.order() && go(host, pat, &mut Vec::new(), &mut vec![false; host.order()])
}

fn coloring_from_mask(n: usize, mask: u64) -> EdgeColoring {
    let mut c = EdgeColoring::monochromatic(n, Color::Blue);
    for (i, (u, v)) in EdgeColoring::pair_list(n).into_iter().enumerate() {
        if mask >> i & 1 == 1 {
            c.set(u, v, Color::Red);
        }
    }
    c
}

fn brute_arrows(n: usize, red: &Graph, blue: &Graph) -> bool {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).all(|mask| {
        let c = coloring_from_mask(n, mask);
        brute_contains(&c.red_graph(), red) || brute_contains(&c.blue_graph(), blue)
    })
}

fn brute_ramsey(red: &Graph, blue: &Graph) -> usize {
    (1..).find(|&n| brute_arrows(n, red, blue)).unwrap()
}

#[test]
fn embedding_agrees_with_brute_force() {
    let mut r = rng(11);
    let patterns = ["path:4", "star:4", "cycle:4", "complete:3", "book:2,1", "book:2,2", "copies:2,(path:2)"];
    for _ in 0..300 {
        let n = r.gen_range(1..=7);
        let host = coloring_from_mask(n, r.gen::<u64>()).red_graph();
        let host = if r.gen_bool(0.5) { host } else { host.complement() };
        for s in patterns {
            let pat = pattern(s);
            let got = find_embedding(&host, &pat, &mut Budget::unlimited()).unwrap();
            assert_eq!(got.is_some(), brute_contains(&host, &pat), "{s} in {:?}", host.edge_list());
            if let Some(m) = got {
                assert!(pat.edges().all(|(u, v)| host.has_edge(m[u], m[v])));
            }
        }
    }
}

#[test]
fn small_ramsey_values_match_brute_force() {
    let cases = [
        ("path:3", "complete:3"),
        ("star:3", "book:2,1"),
        ("path:3", "book:2,2"),
        ("complete:2", "book:2,2"),
        ("path:4", "path:3"),
        ("complete:3", "complete:3"),
    ];
    for (a, b) in cases {
        let (red, blue) = (pattern(a), pattern(b));
        let expected = brute_ramsey(&red, &blue);
        match ramsey_number(&red, &blue, 8, u64::MAX, 1).unwrap() {
            RamseyValue::Exact { value, .. } => assert_eq!(value, expected, "r({a},{b})"),
            other => panic!("r({a},{b}) undecided: {other:?}"),
        }
    }
}

#[test]
fn cnf_models_are_exactly_the_avoiding_colourings() {
    let (red, blue) = (pattern("path:3"), pattern("complete:3"));
    for n in 2..=4 {
        let mut inst = ArrowInstance::new(n, red.clone(), blue.clone());
        inst.symmetry = false;
        let cnf = export_cnf(&inst).unwrap();
        let pairs = n * (n - 1) / 2;
        for mask in 0..1u64 << pairs {
            let c = coloring_from_mask(n, mask);
            let avoids = !brute_contains(&c.red_graph(), &red) && !brute_contains(&c.blue_graph(), &blue);
            let assignment: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
            assert_eq!(cnf.satisfied_by(&assignment), avoids, "n={n} mask={mask:b}");
        }
    }
}

#[test]
fn variable_numbering_is_one_based_row_major() {
    for n in 2..=9 {
        let mut expected = 1;
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(var_index(n, u, v), expected);
                expected += 1;
            }
        }
    }
}

/// Smallest colour count by trying all assignments, and the smallest colour
/// class among the optimal proper colourings.
fn brute_chromatic(g: &Graph) -> (usize, usize) {
    let n = g.order();
    for chi in 1..=n.max(1) {
        let mut best: Option<usize> = None;
        let mut colour = vec![0usize; n];
        loop {
            let proper = g.edges().all(|(u, v)| colour[u] != colour[v]);
            let uses_all = (0..chi).all(|c| colour.contains(&c));
            if proper && uses_all {
                let smallest = (0..chi).map(|c| colour.iter().filter(|&&x| x == c).count()).min().unwrap();
                best = Some(best.map_or(smallest, |b| b.min(smallest)));
            }
            let mut i = 0;
            while i < n && colour[i] + 1 == chi {
                colour[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colour[i] += 1;
        }
        if let Some(s) = best {
            return (chi, s);
        }
    }
    (0, 0)
}

#[test]
fn chromatic_data_matches_brute_force() {
    for s in ["book:2,1", "book:2,2", "copies:2,(book:2,1)", "cycle:5", "path:4", "complete:4", "cycle:6"] {
        let g = pattern(s);
        let d = chromatic_data_with(&g, 24, &mut Budget::unlimited()).unwrap();
        assert_eq!((d.chromatic_number, d.surplus), brute_chromatic(&g), "{s}");
    }
}

#[test]
fn extremal_colouring_avoids_by_brute_force() {
    for (n, t, k) in [(3, 1, 1), (3, 2, 1), (4, 2, 1), (3, 1, 2), (4, 1, 1)] {
        let (c, _) = burr_coloring(n, t, k).unwrap();
        assert_eq!(c.order(), 2 * n + t - 3);
        let books = PatternSpec::books(t, k).build().unwrap();
        for g in [PatternSpec::Star(n).build().unwrap(), pattern(&format!("path:{n}"))] {
            assert!(!brute_contains(&c.red_graph(), &g));
        }
        assert!(!brute_contains(&c.blue_graph(), &books));
    }
}

#[test]
fn bound_formulas_match_hand_evaluation() {
    let p = |n, m, k, t| BoundParams {
        n: Some(n),
        m: Some(m),
        k: Some(k),
        t: Some(t),
        ..Default::default()
    };
    for n in 1..=12i128 {
        for k in 1..=4i128 {
            let m = n - 1;
            let generic = evaluate(TheoremId::GenericBookUpper, &p(n, m, k, 1)).unwrap();
            // n + 2km - 2m/n, floored
            assert_eq!(generic.floor, (n * n + 2 * k * m * n - 2 * m).div_euclid(n));
            assert_eq!(evaluate(TheoremId::WeakUpper, &p(n, m, k, 1)).unwrap().floor, 2 * n + k - 2);
            for t in 1..=4 {
                assert_eq!(evaluate(TheoremId::StarTbooks, &p(n, m, k, t)).unwrap().floor, 2 * n + t - 2);
                assert_eq!(
                    evaluate(TheoremId::Cor1, &p(n, m, k, t)).unwrap().floor,
                    2 * n - 1 + (t - 1) * (k + 2)
                );
            }
        }
    }
}

#[test]
fn sparse_parameters_match_closed_forms() {
    let ceil_half = |x: usize| x.div_ceil(2);
    for k in 1..=6 {
        let p = sparse_parameters(k, 1).unwrap();
        assert_eq!(p.amount, ceil_half(k - 1));
        assert_eq!(p.q, ceil_half(k - 1) + 3 * k + 2);
        assert_eq!(p.s, (2 * k - 1).max(2));
        for t in 2..=5 {
            let p = sparse_parameters(k, t).unwrap();
            let amount = ceil_half(t * k + t - k - 1);
            assert_eq!(p.amount, amount);
            assert_eq!(p.q, 2 * t * (t * k + 2 * t - 1) + t * k + amount);
            assert_eq!(p.s, 2 * t * k + t - 2);
        }
    }
}

/// Longest run of consecutive degree-2 vertices plus its ends, found by
/// walking outward from each degree-2 vertex.
fn brute_longest_suspended(g: &Graph) -> usize {
    let n = g.order();
    let mut best = if g.size() > 0 { 2 } else { n.min(1) };
    for v in 0..n {
        if g.degree(v) != 2 {
            continue;
        }
        let mut len = 1;
        let mut seen = vec![false; n];
        seen[v] = true;
        for start in g.neighbors(v).to_vec() {
            let (mut prev, mut cur) = (v, start);
            loop {
                if seen[cur] {
                    break;
                }
                seen[cur] = true;
                len += 1;
                if g.degree(cur) != 2 {
                    break;
                }
                let next = g.neighbors(cur).iter().find(|&w| w != prev).unwrap();
                prev = cur;
                cur = next;
            }
        }
        best = best.max(len);
    }
    best
}

#[test]
fn structure_agrees_with_brute_force() {
    let mut r = rng(12);
    for _ in 0..300 {
        let n = r.gen_range(3..=30);
        let g = random_sparse_connected_with(n, r.gen_range(-1..=if n < 6 { 0 } else { 2 }), &mut r).unwrap();
        let path = longest_suspended_path(&g);
        if !g.degrees().iter().all(|&d| d == 2) {
            assert_eq!(path.len(), brute_longest_suspended(&g), "{:?}", g.edge_list());
        }
        let m = max_end_edge_matching(&g);
        let mut supports: Vec<usize> = m.iter().map(|e| e.1).collect();
        supports.sort_unstable();
        supports.dedup();
        assert_eq!(supports.len(), m.len());
        let distinct_supports = {
            let mut s: Vec<usize> = g.leaves().iter().map(|&l| g.neighbors(l).first().unwrap()).collect();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        if n > 2 {
            assert_eq!(m.len(), distinct_supports);
        }
    }
}
