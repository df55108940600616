//! The acceptance criteria as runnable checks, shared by the CLI's
//! `verify-suite` and the `acceptance` test target.
//!
//! The fast tier shrinks sample counts and sweep ranges; the full tier runs
//! every criterion at its stated size. Each row passes only if its check
//! holds and it finishes within its time limit.

use std::time::Instant;

use rand::Rng;

use crate::arrowing::{arrows, dpll, export_cnf, ramsey_number, Answer, ArrowInstance, RamseyValue};
use crate::bounds::{evaluate, BoundParams, TheoremId};
use crate::chromatic::chromatic_data_with;
use crate::coloring::{burr_coloring, burr_with_apex, perturb_with, random_coloring_with, verify_extremal, Color, EdgeColoring};
use crate::error::{Budget, Error, Result};
use crate::extract::{
    aes_bipartition, hall_matching, path_extension, sparse_or_books, star_or_books, verify_witness, AesResult,
    ExtractionOutcome, HallOutcome, PathExtensionInstance, PathExtensionOutcome,
};
use crate::generate::{random_sparse_connected_with, random_tree, rng};
use crate::graph::Graph;
use crate::pattern::PatternSpec;
use crate::structure::{degree1_bound_check, longest_suspended_path, trichotomy, TrichotomyParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Fast,
    Full,
}

impl std::str::FromStr for Tier {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Tier::Fast),
            "full" => Ok(Tier::Full),
            _ => Err(Error::Parse(format!("unknown tier `{s}` (fast | full)"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: f64,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<28} {:>8.2}s / {:>4}s  {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.limit_seconds,
            self.detail
        )
    }
}

/// `(id, name, time limit in seconds)`.
pub const CRITERIA: [(u8, &str, f64); 10] = [
    (1, "exact_ramsey_values", 300.0),
    (2, "extremal_certificates", 60.0),
    (3, "lower_bound_sweep", 600.0),
    (4, "chromatic_surplus", 60.0),
    (5, "star_books_exhaustive_k5", 60.0),
    (6, "sparse_books_n34", 600.0),
    (7, "star_books_n7_t2", 300.0),
    (8, "lemma_property_suites", 600.0),
    (9, "bound_domination", 600.0),
    (10, "backend_agreement", 300.0),
];

pub fn run_suite(tier: Tier, workers: usize) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|&(id, ..)| run_criterion(id, tier, workers)).collect()
}

pub fn run_criterion(id: u8, tier: Tier, workers: usize) -> CriterionReport {
    let &(_, name, limit) = CRITERIA.iter().find(|c| c.0 == id).expect("criterion id in 1..=10");
    let start = Instant::now();
    let outcome = match id {
        1 => exact_ramsey_values(workers),
        2 => extremal_certificates(workers),
        3 => lower_bound_sweep(tier),
        4 => chromatic_surplus(),
        5 => star_books_exhaustive(),
        6 => sparse_books(tier),
        7 => star_books_two(tier),
        8 => lemma_suites(tier),
        9 => bound_domination(workers),
        _ => backend_agreement(tier, workers),
    };
    let seconds = start.elapsed().as_secs_f64();
    let (ok, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionReport {
        id,
        name,
        pass: ok && seconds <= limit,
        detail: if seconds > limit { format!("{detail}; over time limit") } else { detail },
        seconds,
        limit_seconds: limit,
    }
}

fn pattern(s: &str) -> Graph {
    PatternSpec::parse(s).and_then(|p| p.build()).expect("valid built-in pattern")
}

const RAMSEY_BUDGET: u64 = 2_000_000_000;

/// `(red pattern, n, k)` pairs of the exact-value window.
const WINDOW: [(&str, usize, usize); 5] = [
    ("star:3", 3, 1),
    ("star:3", 3, 2),
    ("star:4", 4, 1),
    ("star:4", 4, 2),
    ("path:4", 4, 1),
];

fn exact_value(red: &Graph, blue: &Graph, max_n: usize, workers: usize) -> Result<(usize, Option<EdgeColoring>)> {
    match ramsey_number(red, blue, max_n, RAMSEY_BUDGET, workers)? {
        RamseyValue::Exact { value, extremal } => Ok((value, extremal)),
        RamseyValue::LowerBound { at_least, .. } => Err(Error::Precondition(format!("value exceeds {}", at_least - 1))),
    }
}

fn exact_ramsey_values(workers: usize) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (red, n, k) in WINDOW {
        let (value, _) = exact_value(&pattern(red), &PatternSpec::book(k).build()?, 8, workers)?;
        let params = BoundParams {
            n: Some(n as i128),
            k: Some(k as i128),
            ..Default::default()
        };
        let formula = evaluate(TheoremId::StarBook, &params)?;
        let holds = formula.all_hypotheses_satisfied() && value == 2 * n - 1 && value as i128 == formula.floor;
        ok &= holds;
        parts.push(format!("r({red},B{k})={value}"));
    }
    Ok((ok, parts.join(" ")))
}

fn extremal_certificates(workers: usize) -> Result<(bool, String)> {
    let mut ok = true;
    let mut checked = 0;
    let mut b = Budget::unlimited();
    for (red, n, k) in WINDOW {
        let g = pattern(red);
        let (_, extremal) = exact_value(&g, &PatternSpec::book(k).build()?, 8, workers)?;
        let c = extremal.ok_or_else(|| Error::Precondition("no extremal colouring at N-1".into()))?;
        ok &= verify_extremal(&c, &g, k, 1, &mut b)?.is_extremal();
        let (burr, _) = burr_coloring(n, 1, k)?;
        ok &= verify_extremal(&burr, &g, k, 1, &mut b)?.is_extremal();
        checked += 2;
    }
    Ok((ok, format!("{checked} colourings certified")))
}

fn lower_bound_sweep(tier: Tier) -> Result<(bool, String)> {
    let max_n = if tier == Tier::Full { 30 } else { 12 };
    let mut b = Budget::unlimited();
    let mut r = rng(3);
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 2..=max_n {
        let mut graphs = vec![
            ("star", PatternSpec::Star(n).build()?),
            ("path", PatternSpec::parse(&format!("path:{n}"))?.build()?),
        ];
        for _ in 0..3 {
            graphs.push(("tree", random_tree(n, &mut r)));
        }
        for t in 1..=4 {
            for k in 1..=4 {
                let (c, _) = burr_coloring(n, t, k)?;
                for (label, g) in &graphs {
                    checked += 1;
                    if !verify_extremal(&c, g, k, t, &mut b)?.is_extremal() {
                        failures.push((*label, n, t, k));
                    }
                }
            }
        }
    }
    let below = failures.iter().filter(|f| f.1 < f.2).count();
    let sample: Vec<String> = failures.iter().take(4).map(|(l, n, t, k)| format!("{l} n={n} t={t} k={k}")).collect();
    Ok((
        failures.is_empty(),
        format!(
            "{checked} checks, {} failures ({below} with n < t){}",
            failures.len(),
            if sample.is_empty() { String::new() } else { format!(", e.g. {sample:?}") }
        ),
    ))
}

fn chromatic_surplus() -> Result<(bool, String)> {
    let mut ok = true;
    for t in 1..=4 {
        for k in 1..=4 {
            let g = PatternSpec::books(t, k).build()?;
            let d = chromatic_data_with(&g, 24, &mut Budget::unlimited())?;
            ok &= d.chromatic_number == 3 && d.surplus == t;
        }
    }
    Ok((ok, "16 disjoint-book graphs".into()))
}

fn verified(c: &EdgeColoring, out: &ExtractionOutcome) -> bool {
    out.witness().is_some_and(|w| verify_witness(c, w))
}

fn star_books_exhaustive() -> Result<(bool, String)> {
    let pairs = EdgeColoring::pair_list(5);
    let mut misses = 0;
    let mut b = Budget::unlimited();
    for k in 1..=2 {
        for mask in 0u32..1 << pairs.len() {
            let mut c = EdgeColoring::monochromatic(5, Color::Blue);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    c.set(u, v, Color::Red);
                }
            }
            if !verified(&c, &star_or_books(&c, 3, k, 1, &mut b)?) {
                misses += 1;
            }
        }
    }
    Ok((misses == 0, format!("2048 colourings, {misses} without a verified witness")))
}

/// Extremal colouring perturbed by a few flips: half with an all-red apex,
/// half with a third part of size `t`.
fn perturbed_burr<R: Rng>(n: usize, t: usize, k: usize, i: usize, r: &mut R) -> Result<EdgeColoring> {
    let base = if i.is_multiple_of(2) {
        burr_with_apex(n, t, k)?
    } else {
        burr_coloring(n, t + 1, k)?.0
    };
    let flips = r.gen_range(0..=4);
    perturb_with(&base, flips, r)
}

#[derive(Default)]
struct Tally {
    runs: usize,
    verified: usize,
    violations: usize,
    errors: Vec<String>,
}

impl Tally {
    fn record(&mut self, c: &EdgeColoring, out: Result<ExtractionOutcome>) {
        self.runs += 1;
        match out {
            Ok(o) => {
                if verified(c, &o) {
                    self.verified += 1;
                }
                if o.is_violation() {
                    self.violations += 1;
                }
            }
            Err(e) => {
                if self.errors.len() < 3 {
                    self.errors.push(e.to_string());
                }
            }
        }
    }

    fn verdict(&self) -> (bool, String) {
        (
            self.verified == self.runs && self.violations == 0,
            format!(
                "{}/{} verified, {} violations{}",
                self.verified,
                self.runs,
                self.violations,
                if self.errors.is_empty() { String::new() } else { format!(", errors {:?}", self.errors) }
            ),
        )
    }
}

const RED_PROBABILITIES: [f64; 5] = [0.3, 0.4, 0.5, 0.6, 0.7];

fn sparse_books(tier: Tier) -> Result<(bool, String)> {
    let (n, k, t) = (34, 1, 1);
    let order = 2 * n + t - 2;
    let (graphs, randoms, perturbed) = if tier == Tier::Full { (20, 200, 50) } else { (3, 20, 6) };
    let mut r = rng(6);
    let mut tally = Tally::default();
    for excess in [-1, 0] {
        for _ in 0..graphs {
            let g = random_sparse_connected_with(n, excess, &mut r)?;
            for i in 0..randoms + perturbed {
                let c = if i < randoms {
                    let p = RED_PROBABILITIES[i % RED_PROBABILITIES.len()];
                    random_coloring_with(order, p, &mut r)?
                } else {
                    perturbed_burr(n, t, k, i, &mut r)?
                };
                tally.record(&c, sparse_or_books(&c, &g, k, t, &mut Budget::default()));
            }
        }
    }
    Ok(tally.verdict())
}

fn star_books_two(tier: Tier) -> Result<(bool, String)> {
    let (n, k, t) = (7, 1, 2);
    let order = 2 * n + t - 2;
    let (randoms, perturbed) = if tier == Tier::Full { (10_000, 1_000) } else { (500, 100) };
    let mut r = rng(7);
    let mut tally = Tally::default();
    for i in 0..randoms + perturbed {
        let c = if i < randoms {
            random_coloring_with(order, RED_PROBABILITIES[i % RED_PROBABILITIES.len()], &mut r)?
        } else {
            perturbed_burr(n, t, k, i, &mut r)?
        };
        tally.record(&c, star_or_books(&c, n, k, t, &mut Budget::default()));
    }
    Ok(tally.verdict())
}

fn lemma_suites(tier: Tier) -> Result<(bool, String)> {
    let trials = if tier == Tier::Full { 10_000 } else { 500 };
    let mut r = rng(8);
    let mut bad = Vec::new();
    let mut b = Budget::unlimited();

    let mut pe_fail = 0;
    for _ in 0..trials {
        let (bb, cc, d) = (r.gen_range(1..=3), r.gen_range(1..=4), r.gen_range(0..=3));
        let a = (bb * (cc - 1) + d).max(1) + r.gen_range(0..=2);
        let mut c = random_coloring_with(a + bb, r.gen_range(0.2..0.8), &mut r)?;
        for i in 0..a.saturating_sub(1) {
            c.set(i, i + 1, Color::Red);
        }
        let inst = PathExtensionInstance {
            x: (0..a).collect(),
            y: (a..a + bb).collect(),
            c: cc,
            d,
        };
        if !path_outcome_valid(&c, &inst, path_extension(&c, &inst, &mut b)?) {
            pe_fail += 1;
        }
    }
    if pe_fail > 0 {
        bad.push(format!("path_extension {pe_fail}"));
    }

    let mut hall_fail = 0;
    for _ in 0..trials {
        let xs = r.gen_range(1..=6);
        let ys = xs + r.gen_range(0..=4);
        let c = random_coloring_with(xs + ys, r.gen_range(0.1..0.9), &mut r)?;
        let x: Vec<usize> = (0..xs).collect();
        let y: Vec<usize> = (xs..xs + ys).collect();
        if !hall_outcome_valid(&c, &x, &y, hall_matching(&c, &x, &y)?) {
            hall_fail += 1;
        }
    }
    if hall_fail > 0 {
        bad.push(format!("hall_matching {hall_fail}"));
    }

    let mut aes_fail = 0;
    for i in 0..trials {
        let n = r.gen_range(1..=16);
        let f = if i % 2 == 0 { dense_bipartite_like(n, &mut r) } else { random_graph(n, r.gen_range(0.1..0.9), &mut r) };
        let out = aes_bipartition(&f);
        let valid = match &out.result {
            AesResult::Bipartition(s1, s2) => {
                s1.len() + s2.len() == n && f.edges().all(|(u, v)| s1.contains(&u) != s1.contains(&v))
            }
            AesResult::OddCycle(cyc) => {
                cyc.len() % 2 == 1 && (0..cyc.len()).all(|j| f.has_edge(cyc[j], cyc[(j + 1) % cyc.len()]))
            }
        };
        if out.is_violation() || !valid {
            aes_fail += 1;
        }
    }
    if aes_fail > 0 {
        bad.push(format!("aes_bipartition {aes_fail}"));
    }

    let mut tri_fail = 0;
    let mut d1_checked = 0;
    for _ in 0..trials {
        let n = r.gen_range(3..=200);
        let excess = r.gen_range(-1..=3).min(n as i64 * (n as i64 - 1) / 2 - n as i64);
        let g = random_sparse_connected_with(n, excess, &mut r)?;
        let q = r.gen_range(3..=n.min(8));
        let s = r.gen_range(2..=6);
        let rep = trichotomy(&g, TrichotomyParams::new(q, s)?)?;
        let numeric = rep.hub.as_ref().is_none_or(|h| {
            h.gamma == (q as i64 - 2) * (2 * s as i64 + 3 * rep.excess - 2) + 1
                && h.required_leaves == (n as i64 - h.gamma + s as i64 - 2).div_euclid(s as i64 - 1)
        });
        if !rep.is_nonempty() || !rep.lemma_claims_hold() || !numeric {
            tri_fail += 1;
        }
        let limit = longest_suspended_path(&g).len().max(1);
        if let Ok(check) = degree1_bound_check(&g, limit) {
            d1_checked += 1;
            if !check.pass {
                tri_fail += 1;
            }
        }
    }
    if tri_fail > 0 {
        bad.push(format!("trichotomy/degree-1 {tri_fail}"));
    }
    Ok((
        bad.is_empty(),
        format!("{trials} trials per lemma, {d1_checked} degree-1 checks; failures: {bad:?}"),
    ))
}

fn path_outcome_valid(c: &EdgeColoring, inst: &PathExtensionInstance, out: PathExtensionOutcome) -> bool {
    match out {
        PathExtensionOutcome::LongerPath(p) => {
            let mut seen = p.clone();
            seen.sort_unstable();
            seen.dedup();
            p.len() == inst.x.len() + 1
                && seen.len() == p.len()
                && p[0] == inst.x[0]
                && p.last() == inst.x.last()
                && p.iter().all(|v| inst.x.contains(v) || inst.y.contains(v))
                && p.windows(2).all(|w| c.color(w[0], w[1]) == Color::Red)
        }
        PathExtensionOutcome::BlueClique(k) => {
            k.len() == inst.c
                && k.iter().enumerate().all(|(i, &u)| k[i + 1..].iter().all(|&v| u != v && c.color(u, v) == Color::Blue))
        }
        PathExtensionOutcome::BlueCone(xs) => {
            xs.len() == inst.d
                && xs.iter().all(|&x| inst.x.contains(&x) && inst.y.iter().all(|&y| c.color(x, y) == Color::Blue))
        }
        PathExtensionOutcome::InvariantViolation(_) => false,
    }
}

fn hall_outcome_valid(c: &EdgeColoring, x: &[usize], y: &[usize], out: HallOutcome) -> bool {
    match out {
        HallOutcome::RedMatching(pairs) => {
            let mut ys: Vec<usize> = pairs.iter().map(|p| p.1).collect();
            ys.sort_unstable();
            ys.dedup();
            pairs.len() == x.len()
                && ys.len() == x.len()
                && pairs.iter().all(|&(a, b)| x.contains(&a) && y.contains(&b) && c.color(a, b) == Color::Red)
        }
        HallOutcome::BlueBiclique { c: cc, x_side, y_side } => {
            x_side.len() == cc + 1
                && y_side.len() == y.len() - cc
                && x_side.iter().all(|&a| x.contains(&a) && y_side.iter().all(|&b| c.color(a, b) == Color::Blue))
        }
        HallOutcome::InvariantViolation(_) => false,
    }
}

fn random_graph<R: Rng>(n: usize, p: f64, r: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in EdgeColoring::pair_list(n) {
        if r.gen_bool(p) {
            g.add_edge(u, v);
        }
    }
    g
}

/// Dense random bipartite graph, sometimes with one extra edge inside a side.
fn dense_bipartite_like<R: Rng>(n: usize, r: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    let side: Vec<bool> = (0..n).map(|_| r.gen_bool(0.5)).collect();
    for (u, v) in EdgeColoring::pair_list(n) {
        if side[u] != side[v] && r.gen_bool(0.9) {
            g.add_edge(u, v);
        }
    }
    if n >= 2 && r.gen_bool(0.3) {
        let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
        if u != v {
            g.add_edge(u, v);
        }
    }
    g
}

/// Connected graphs on at most 4 vertices, up to isomorphism.
pub fn small_connected_graphs() -> Vec<(&'static str, Graph)> {
    let g = |n: usize, e: &[(usize, usize)]| Graph::from_edges(n, e).expect("valid small graph");
    vec![
        ("K1", g(1, &[])),
        ("K2", g(2, &[(0, 1)])),
        ("P3", g(3, &[(0, 1), (1, 2)])),
        ("K3", g(3, &[(0, 1), (1, 2), (0, 2)])),
        ("P4", g(4, &[(0, 1), (1, 2), (2, 3)])),
        ("K1,3", g(4, &[(0, 1), (0, 2), (0, 3)])),
        ("C4", g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
        ("paw", g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("diamond", g(4, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])),
        ("K4", Graph::complete(4)),
    ]
}

fn bound_domination(workers: usize) -> Result<(bool, String)> {
    let book = PatternSpec::book(1).build()?;
    let mut failures = Vec::new();
    for (name, g) in small_connected_graphs() {
        let (value, _) = exact_value(&g, &book, 10, workers)?;
        let params = BoundParams {
            n: Some(g.order() as i128),
            m: Some(g.size() as i128),
            k: Some(1),
            ..Default::default()
        };
        let generic = evaluate(TheoremId::GenericBookUpper, &params)?.floor;
        let weak = evaluate(TheoremId::WeakUpper, &params)?.floor;
        if value as i128 > generic || value as i128 > weak {
            failures.push(format!("{name}: r={value} generic={generic} weak={weak}"));
        }
    }
    Ok((failures.is_empty(), format!("violations: {failures:?}")))
}

fn backend_agreement(tier: Tier, workers: usize) -> Result<(bool, String)> {
    let max_n = if tier == Tier::Full { 6 } else { 5 };
    let graphs = small_connected_graphs();
    let mut instances = 0;
    let mut disagreements = Vec::new();
    for n in 1..=max_n {
        for (rn, red) in &graphs {
            for (bn, blue) in &graphs {
                let mut inst = ArrowInstance::new(n, red.clone(), blue.clone());
                inst.workers = workers;
                let exhaustive = arrows(&inst)?.answer;
                let cnf = export_cnf(&inst)?;
                let model = dpll(&cnf, &mut Budget::unlimited())?;
                let sat_arrows = if model.is_some() { Answer::NotArrows } else { Answer::Arrows };
                instances += 1;
                if exhaustive != sat_arrows {
                    disagreements.push(format!("N={n} {rn}/{bn}"));
                }
            }
        }
    }
    Ok((
        disagreements.is_empty(),
        format!("{instances} instances, disagreements: {disagreements:?}"),
    ))
}

