use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::books::{blue_t_matching, find_disjoint_blue_books, BookPlacement, TMatching};
use super::lemmas::{hall_matching, path_extension, HallOutcome, PathExtensionInstance, PathExtensionOutcome};
use super::star::{blue_star_in, check_forbidden, star_search, StarFound};
use super::{hyp, ExtractionOutcome, HypothesisCheck, Witness};
use crate::bitset::VertexSet;
use crate::coloring::EdgeColoring;
use crate::embed::{find_embedding_pinned, find_embedding_within};
use crate::error::{Budget, Error, Result};
use crate::graph::Graph;
use crate::structure::{remove_all_leaves, shorten_path_by, trichotomy, Recipe, TrichotomyParams, TrichotomyReport};

/// Case thresholds of the sparse-graph pipeline for given `k, t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseParameters {
    /// Suspended-path order that triggers the path case.
    pub q: usize,
    /// End-edge matching size that triggers the matching case.
    pub s: usize,
    /// Vertices removed from the long suspended path before embedding.
    pub amount: usize,
}

fn ceil_half(x: usize) -> usize {
    x.div_ceil(2)
}

/// For `t = 1`: `q = ceil((k-1)/2) + 3k + 2`, `s = max(2k-1, 2)`.
/// For `t >= 2`: `q = 2t(tk+2t-1) + tk + ceil((tk+t-k-1)/2)`, `s = 2tk+t-2`.
pub fn sparse_parameters(k: usize, t: usize) -> Result<SparseParameters> {
    if k < 1 || t < 1 {
        return Err(Error::InvalidParameter(format!("need k >= 1 and t >= 1 (got k={k}, t={t})")));
    }
    Ok(if t == 1 {
        let amount = ceil_half(k - 1);
        SparseParameters {
            q: amount + 3 * k + 2,
            s: (2 * k - 1).max(2),
            amount,
        }
    } else {
        let amount = ceil_half(t * k + t - k - 1);
        SparseParameters {
            q: 2 * t * (t * k + 2 * t - 1) + t * k + amount,
            s: 2 * t * k + t - 2,
            amount,
        }
    })
}

enum Found {
    Red(Vec<usize>),
    Blue(Vec<BookPlacement>),
    /// A lemma step failed on a validated instance.
    Violation(String),
}

struct Run<'a> {
    c: &'a EdgeColoring,
    red: Graph,
    g: &'a Graph,
    k: usize,
    trace: Vec<String>,
    budget_hit: bool,
}

impl Run<'_> {
    /// Runs one budgeted search on a share of the remaining budget. Running
    /// out is recorded and reported as "not found" so later stages still run.
    fn staged<T>(
        &mut self,
        budget: &mut Budget,
        label: &str,
        f: impl FnOnce(&mut Budget) -> Result<Option<T>>,
    ) -> Result<Option<T>> {
        let mut sub = budget.split(4);
        let out = f(&mut sub);
        budget.absorb(&sub);
        match out {
            Err(Error::BudgetExceeded { limit }) => {
                self.trace.push(format!("{label}: budget of {limit} nodes exhausted"));
                self.budget_hit = true;
                Ok(None)
            }
            other => other,
        }
    }

    fn search(&mut self, t: usize, forbidden: &VertexSet, budget: &mut Budget) -> Result<Option<Found>> {
        let n = self.g.order();
        let avail = VertexSet::full(self.c.order()).difference(forbidden);
        let p = sparse_parameters(self.k, t)?;
        if n >= p.q {
            let report = trichotomy(self.g, TrichotomyParams::new(p.q, p.s)?)?;
            self.trace.push(format!("t={t} trichotomy(q={}, s={}): case {}", p.q, p.s, report.case()));
            let found = match report.case() {
                1 => self.path_case(t, &p, &report, &avail, budget)?,
                2 => self.matching_case(t, &p, &report, forbidden, &avail, budget)?,
                _ => self.hub_case(t, &report, forbidden, &avail, budget)?,
            };
            if found.is_some() {
                return Ok(found);
            }
        } else {
            self.trace.push(format!("t={t} order {n} is below q = {}; cases skipped", p.q));
        }
        let (c, k, g) = (self.c, self.k, self.g);
        let books = self.staged(budget, "fallback packing", |b| find_disjoint_blue_books(c, k, t, forbidden, b))?;
        if let Some(books) = books {
            self.trace.push(format!("t={t} fallback: blue packing found"));
            return Ok(Some(Found::Blue(books)));
        }
        let red = self.red.clone();
        let map = self.staged(budget, "fallback embedding", |b| find_embedding_within(&red, g, &avail, b))?;
        if let Some(map) = map {
            self.trace.push(format!("t={t} fallback: direct red embedding found"));
            return Ok(Some(Found::Red(map)));
        }
        self.trace.push(format!("t={t} fallback: neither packing nor red embedding found"));
        Ok(None)
    }

    /// Shorten the long suspended path, embed, then lengthen it one vertex at
    /// a time against blue `tK_2`s outside the image.
    fn path_case(
        &mut self,
        t: usize,
        p: &SparseParameters,
        report: &TrichotomyReport,
        avail: &VertexSet,
        budget: &mut Budget,
    ) -> Result<Option<Found>> {
        let path = report.long_suspended_path.clone().expect("path case");
        let surgery = shorten_path_by(self.g, &path, p.amount)?;
        let Recipe::PathShortening(sh) = &surgery.recipe else {
            unreachable!("path shortening recipe")
        };
        let sh = sh[0].clone();
        let red = self.red.clone();
        let small = self.staged(budget, "path case embedding", |b| find_embedding_within(&red, &surgery.graph, avail, b))?;
        let Some(small) = small else {
            self.trace.push(format!("t={t} path case: no red shortened graph"));
            return Ok(None);
        };
        let mut image = VertexSet::from_iter_with_capacity(self.c.order(), small.iter().copied());
        let mut host_path: Vec<usize> = sh
            .kept_path()
            .iter()
            .map(|&v| small[surgery.new_label(v).expect("kept vertex")])
            .collect();
        while host_path.len() < path.len() {
            let region = avail.difference(&image);
            let ys = match blue_t_matching(self.c, &region, t) {
                TMatching::Found(edges) => edges,
                TMatching::Maximum(m) => {
                    self.trace.push(format!("t={t} path case: only {} disjoint blue edges outside the image", m.len()));
                    return Ok(None);
                }
            };
            let inst = PathExtensionInstance {
                x: host_path.clone(),
                y: ys.iter().flat_map(|&(a, b)| [a, b]).collect(),
                c: t * (self.k + 2),
                d: t * self.k,
            };
            let c = self.c;
            let out = self.staged(budget, "path extension", |b| path_extension(c, &inst, b).map(Some))?;
            match out {
                None => return Ok(None),
                Some(PathExtensionOutcome::LongerPath(longer)) => {
                    for &v in &host_path {
                        image.remove(v);
                    }
                    for &v in &longer {
                        image.insert(v);
                    }
                    host_path = longer;
                }
                Some(PathExtensionOutcome::BlueClique(clique)) => {
                    self.trace.push(format!("t={t} path case: blue K_{} splits into books", clique.len()));
                    let books = clique
                        .chunks(self.k + 2)
                        .map(|ch| BookPlacement {
                            spine: (ch[0], ch[1]),
                            pages: ch[2..].to_vec(),
                        })
                        .collect();
                    return Ok(Some(Found::Blue(books)));
                }
                Some(PathExtensionOutcome::BlueCone(cone)) => {
                    self.trace.push(format!("t={t} path case: {} path vertices blue to the matching", cone.len()));
                    let books = ys
                        .iter()
                        .zip(cone.chunks(self.k))
                        .map(|(&spine, pages)| BookPlacement {
                            spine,
                            pages: pages.to_vec(),
                        })
                        .collect();
                    return Ok(Some(Found::Blue(books)));
                }
                Some(PathExtensionOutcome::InvariantViolation(s)) => return Ok(Some(Found::Violation(s))),
            }
        }
        self.trace.push(format!("t={t} path case: path lengthened to {} vertices", host_path.len()));
        let extra = sh.assign(&host_path)?;
        Ok(Some(Found::Red(surgery.lift(&small, &extra)?)))
    }

    /// Embed the graph without `s` matched leaves, then reattach them by a red
    /// matching or escape through the blue biclique.
    fn matching_case(
        &mut self,
        t: usize,
        p: &SparseParameters,
        report: &TrichotomyReport,
        forbidden: &VertexSet,
        avail: &VertexSet,
        budget: &mut Budget,
    ) -> Result<Option<Found>> {
        let ends: Vec<(usize, usize)> = report.end_edge_matching.clone().expect("matching case")[..p.s].to_vec();
        let books_a = if t >= 2 {
            match self.search(t - 1, forbidden, budget)? {
                Some(Found::Blue(books)) => {
                    self.trace.push(format!("t={t} matching case: blue {}B_k as A", t - 1));
                    books
                }
                other => return Ok(other),
            }
        } else {
            Vec::new()
        };
        let a_set = VertexSet::from_iter_with_capacity(self.c.order(), books_a.iter().flat_map(|b| b.vertices()));
        let removed = VertexSet::from_iter_with_capacity(self.g.order(), ends.iter().map(|&(leaf, _)| leaf));
        let (h, kept) = self.g.remove_vertices(&removed);
        let allowed = avail.difference(&a_set);
        let red = self.red.clone();
        let small = self.staged(budget, "matching case embedding", |b| find_embedding_within(&red, &h, &allowed, b))?;
        let Some(small) = small else {
            self.trace.push(format!("t={t} matching case: no red leaf-stripped graph"));
            return Ok(None);
        };
        let label = |v: usize| kept.binary_search(&v).expect("support is kept");
        let x: Vec<usize> = ends.iter().map(|&(_, sup)| small[label(sup)]).collect();
        let image = VertexSet::from_iter_with_capacity(self.c.order(), small.iter().copied());
        let y = avail.difference(&image).to_vec();
        if x.len() > y.len() {
            self.trace.push(format!("t={t} matching case: only {} vertices outside the image", y.len()));
            return Ok(None);
        }
        match hall_matching(self.c, &x, &y)? {
            HallOutcome::RedMatching(pairs) => {
                self.trace.push(format!("t={t} matching case: red matching reattaches {} leaves", pairs.len()));
                let mut full = vec![usize::MAX; self.g.order()];
                for (i, &orig) in kept.iter().enumerate() {
                    full[orig] = small[i];
                }
                for (&(leaf, _), &(_, host)) in ends.iter().zip(&pairs) {
                    full[leaf] = host;
                }
                Ok(Some(Found::Red(full)))
            }
            HallOutcome::BlueBiclique { c, x_side, y_side } => {
                self.trace.push(format!(
                    "t={t} matching case: blue K_({},{}) from a Hall violator",
                    x_side.len(),
                    y_side.len()
                ));
                let tk = t * self.k;
                if c + 1 >= tk {
                    let region = VertexSet::from_iter_with_capacity(self.c.order(), y_side.iter().copied());
                    let TMatching::Found(edges) = blue_t_matching(self.c, &region, t) else {
                        self.trace.push(format!("t={t} matching case: no blue tK_2 on the biclique side"));
                        return Ok(None);
                    };
                    let books = edges
                        .into_iter()
                        .zip(x_side.chunks(self.k))
                        .map(|(spine, pages)| BookPlacement {
                            spine,
                            pages: pages.to_vec(),
                        })
                        .collect();
                    return Ok(Some(Found::Blue(books)));
                }
                let mut region = VertexSet::from_iter_with_capacity(self.c.order(), y_side.iter().copied());
                region.difference_with(&a_set);
                let Some((centre, pages)) = blue_star_in(self.c, self.k, &region) else {
                    self.trace.push(format!("t={t} matching case: no blue K_1,k beside the biclique"));
                    return Ok(None);
                };
                let mut books = books_a;
                books.push(BookPlacement {
                    spine: (x_side[0], centre),
                    pages,
                });
                Ok(Some(Found::Blue(books)))
            }
            HallOutcome::InvariantViolation(s) => Ok(Some(Found::Violation(s))),
        }
    }

    /// Red star centre hosts the leaf hub; the leafless core goes into its red
    /// neighbourhood and the remaining leaves are placed greedily.
    fn hub_case(
        &mut self,
        t: usize,
        report: &TrichotomyReport,
        forbidden: &VertexSet,
        avail: &VertexSet,
        budget: &mut Budget,
    ) -> Result<Option<Found>> {
        let hub = report.hub.as_ref().expect("hub case");
        let (v, hub_leaves) = (hub.hub, hub.hub_leaves.clone());
        let n = self.g.order();
        let (c, k) = (self.c, self.k);
        let found = self.staged(budget, "hub case star search", |b| {
            let mut trace = Vec::new();
            let r = star_search(c, n, k, t, forbidden, b, &mut trace, &mut None)?;
            Ok(Some((r, trace)))
        })?;
        let Some((star, star_trace)) = found else { return Ok(None) };
        self.trace.extend(star_trace);
        let x = match star {
            StarFound::Star { center, .. } => center,
            StarFound::Books(books) => return Ok(Some(Found::Blue(books))),
            StarFound::Nothing => return Ok(None),
        };
        self.trace.push(format!("t={t} hub case: hub {v} goes to red star centre {x}"));
        let core = remove_all_leaves(self.g);
        let Some(v_core) = core.new_label(v) else {
            self.trace.push(format!("t={t} hub case: hub {v} is itself a leaf"));
            return Ok(None);
        };
        let mut allowed = c.red_neighbors(x).intersection(avail);
        allowed.insert(x);
        let red = self.red.clone();
        let small = self.staged(budget, "hub case core embedding", |b| {
            find_embedding_pinned(&red, &core.graph, &allowed, &[(v_core, x)], b)
        })?;
        let Some(small) = small else {
            self.trace.push(format!("t={t} hub case: core does not fit in the red neighbourhood"));
            return Ok(None);
        };
        let mut map = vec![usize::MAX; n];
        let mut used = VertexSet::new(c.order());
        for (i, &orig) in core.kept.iter().enumerate() {
            map[orig] = small[i];
            used.insert(small[i]);
        }
        // Greedy placement of the other leaves, breadth-first from the hub.
        let is_hub_leaf = |u: usize| hub_leaves.contains(&u);
        let mut seen = vec![false; n];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in self.g.neighbors(u).iter() {
                if seen[w] || is_hub_leaf(w) {
                    continue;
                }
                seen[w] = true;
                queue.push_back(w);
                if map[w] != usize::MAX {
                    continue;
                }
                let z = map[u];
                let mut cands = c.red_neighbors(z).intersection(avail);
                cands.difference_with(&used);
                match cands.first() {
                    Some(h) => {
                        map[w] = h;
                        used.insert(h);
                    }
                    None => return self.hub_escape(t, z, forbidden, avail, budget),
                }
            }
        }
        let mut cands = c.red_neighbors(x).intersection(avail);
        cands.difference_with(&used);
        if cands.len() < hub_leaves.len() {
            self.trace.push(format!("t={t} hub case: centre {x} lacks room for {} leaves", hub_leaves.len()));
            return Ok(None);
        }
        for (&leaf, h) in hub_leaves.iter().zip(cands.iter()) {
            map[leaf] = h;
        }
        self.trace.push(format!("t={t} hub case: greedy embedding complete"));
        Ok(Some(Found::Red(map)))
    }

    /// The greedy step is stuck at `z`: its blue neighbourhood holds a blue
    /// `K_{1,k}`, which with `z` and a `(t-1)B_k` avoiding `z` gives `tB_k`.
    fn hub_escape(
        &mut self,
        t: usize,
        z: usize,
        forbidden: &VertexSet,
        avail: &VertexSet,
        budget: &mut Budget,
    ) -> Result<Option<Found>> {
        self.trace.push(format!("t={t} hub case: greedy step stuck at {z}"));
        let books_a = if t >= 2 {
            let mut without_z = forbidden.clone();
            without_z.insert(z);
            match self.search(t - 1, &without_z, budget)? {
                Some(Found::Blue(books)) => books,
                other => return Ok(other),
            }
        } else {
            Vec::new()
        };
        let mut region = self.c.blue_neighbors(z).intersection(avail);
        for b in &books_a {
            for v in b.vertices() {
                region.remove(v);
            }
        }
        let Some((centre, pages)) = blue_star_in(self.c, self.k, &region) else {
            self.trace.push(format!("t={t} hub case: no blue K_1,k next to {z}"));
            return Ok(None);
        };
        let mut books = books_a;
        books.push(BookPlacement {
            spine: (z, centre),
            pages,
        });
        Ok(Some(Found::Blue(books)))
    }
}

/// Red copy of the connected graph `g` or blue `tB_k` in `c`.
pub fn sparse_or_books(c: &EdgeColoring, g: &Graph, k: usize, t: usize, budget: &mut Budget) -> Result<ExtractionOutcome> {
    sparse_or_books_avoiding(c, g, k, t, &VertexSet::new(c.order()), budget)
}

/// [`sparse_or_books`] restricted to vertices outside `forbidden`.
pub fn sparse_or_books_avoiding(
    c: &EdgeColoring,
    g: &Graph,
    k: usize,
    t: usize,
    forbidden: &VertexSet,
    budget: &mut Budget,
) -> Result<ExtractionOutcome> {
    sparse_parameters(k, t)?;
    check_forbidden(c, forbidden)?;
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Precondition("the red pattern must be a nonempty connected graph".into()));
    }
    let mut run = Run {
        c,
        red: c.red_graph(),
        g,
        k,
        trace: Vec::new(),
        budget_hit: false,
    };
    let found = run.search(t, forbidden, budget)?;
    let Run { trace, budget_hit, .. } = run;
    Ok(match found {
        Some(Found::Red(map)) => ExtractionOutcome::Witness {
            witness: Witness::red(g, map),
            trace,
        },
        Some(Found::Blue(books)) => ExtractionOutcome::Witness {
            witness: Witness::blue_books(&books),
            trace,
        },
        Some(Found::Violation(state)) => ExtractionOutcome::InvariantViolation {
            hypotheses: vec![hyp("lemma preconditions verified", true)],
            trace,
            state,
        },
        None if budget_hit => return Err(Error::BudgetExceeded { limit: budget.limit() }),
        None => {
            let usable = c.order() - forbidden.len();
            ExtractionOutcome::miss(sparse_hypotheses(g, k, t, usable), trace, "all stages exhausted".into())
        }
    })
}

/// Order, edge-density and size hypotheses of the exact result for `g`.
fn sparse_hypotheses(g: &Graph, k: usize, t: usize, usable: usize) -> Vec<HypothesisCheck> {
    let (n, m) = (g.order() as u128, g.size() as u128);
    let (k, t) = (k as u128, t as u128);
    let mut out = vec![hyp("order >= 2n+t-2", usable as u128 >= 2 * n + t - 2)];
    if t == 1 {
        let d = 119 * k * k + 62 * k;
        out.push(hyp("n >= 34k^3", n >= 34 * k * k * k));
        out.push(hyp("m <= n(1+1/(119k^2+62k))", m * d <= n * (d + 1)));
    } else {
        let d = 127 * t * t * k * k + 79 * t * t * k;
        out.push(hyp("n >= 111t^3k^3", n >= 111 * t * t * t * k * k * k));
        out.push(hyp("m <= n(1+1/(127t^2k^2+79t^2k))", m * d <= n * (d + 1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{burr_coloring, Color};
    use crate::extract::verify_witness;
    use crate::generate::{random_sparse_connected, random_tree, rng};
    use crate::pattern::PatternSpec;

    #[test]
    fn parameters() {
        assert_eq!(sparse_parameters(1, 1).unwrap(), SparseParameters { q: 5, s: 2, amount: 0 });
        assert_eq!(sparse_parameters(2, 1).unwrap(), SparseParameters { q: 9, s: 3, amount: 1 });
        // t = 2, k = 1: q = 4(2+4-1) + 2 + ceil(2/2) = 23, s = 4.
        assert_eq!(sparse_parameters(1, 2).unwrap(), SparseParameters { q: 23, s: 4, amount: 1 });
        assert!(sparse_parameters(0, 1).is_err());
    }

    #[test]
    fn red_clique_takes_any_tree() {
        let mut b = Budget::default();
        for seed in 0..10 {
            let g = random_tree(12, &mut rng(seed));
            let c = EdgeColoring::monochromatic(23, Color::Red);
            let out = sparse_or_books(&c, &g, 1, 1, &mut b).unwrap();
            let w = out.witness().expect("witness");
            assert_eq!(w.color, Color::Red);
            assert!(verify_witness(&c, w));
        }
    }

    #[test]
    fn extremal_colourings_give_no_witness() {
        let mut b = Budget::default();
        for n in 3..=8 {
            for k in 1..=2 {
                let (c, _) = burr_coloring(n, 1, k).unwrap();
                let g = PatternSpec::parse(&format!("path:{n}")).unwrap().build().unwrap();
                let out = sparse_or_books(&c, &g, k, 1, &mut b).unwrap();
                assert_eq!(out.kind(), "no_witness", "n={n} k={k}");
            }
        }
    }

    #[test]
    fn every_case_produces_verified_witnesses() {
        let mut b = Budget::default();
        let shapes = ["path:12", "star:12", "cycle:12"];
        for (i, s) in shapes.iter().enumerate() {
            let g = PatternSpec::parse(s).unwrap().build().unwrap();
            for seed in 0..20 {
                let c = crate::coloring::random_coloring(23, 0.5, seed + 100 * i as u64).unwrap();
                let out = sparse_or_books(&c, &g, 1, 1, &mut b).unwrap();
                assert!(verify_witness(&c, out.witness().expect("witness")), "{s} seed {seed}");
            }
        }
        let g = random_sparse_connected(14, 1, 3).unwrap();
        for seed in 0..10 {
            let c = crate::coloring::random_coloring(27, 0.6, seed).unwrap();
            let out = sparse_or_books(&c, &g, 1, 1, &mut b).unwrap();
            assert!(verify_witness(&c, out.witness().unwrap()));
        }
    }
}
