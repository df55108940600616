//! Exact arrowing `K_N -> (G, H)` at desk scale.
//!
//! Edges are decided in row-major order. Every copy of a pattern in `K_N` is
//! a bit mask over the edges and is filed under its last edge, so a copy is
//! tested exactly once: when that edge receives a colour. The colours on the
//! edges at vertex 0 are forced to be non-increasing (red before blue), which
//! is a permutation of vertices `1..N`. The tree forks into independent
//! subtrees below a fixed depth; `find_map_first` keeps the answer and the
//! reported colouring independent of the worker count.
//!
//! The CNF export encodes the negation of arrowing: one variable per pair,
//! true meaning red; the formula is satisfiable iff `K_N` does not arrow.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{verify_avoids, Color, EdgeColoring, ExtremalCheck};
use crate::error::{Budget, Error, Result};
use crate::graph::Graph;

/// Masks are `u128`, so `C(N, 2) <= 128`.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Backend {
    Exhaustive,
    CnfExport,
}

#[derive(Debug, Clone)]
pub struct ArrowInstance {
    pub n: usize,
    pub red: Graph,
    pub blue: Graph,
    pub backend: Backend,
    /// Node budget of the exhaustive search and of copy enumeration.
    pub budget: u64,
    /// Force non-increasing colours on the edges at vertex 0.
    pub symmetry: bool,
    /// Worker threads for the subtree fork; 0 or 1 runs sequentially.
    pub workers: usize,
}

impl ArrowInstance {
    pub fn new(n: usize, red: Graph, blue: Graph) -> Self {
        ArrowInstance {
            n,
            red,
            blue,
            backend: Backend::Exhaustive,
            budget: crate::error::DEFAULT_BUDGET,
            symmetry: true,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Answer {
    Arrows,
    NotArrows,
    UndecidedBudget,
}

impl Answer {
    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Arrows => "arrows",
            Answer::NotArrows => "not-arrows",
            Answer::UndecidedBudget => "undecided-budget",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowStats {
    pub nodes: u64,
    pub prunes: u64,
    pub red_copies: usize,
    pub blue_copies: usize,
}

#[derive(Debug, Clone)]
pub struct ArrowResult {
    pub answer: Answer,
    /// Colouring with no red `G` and no blue `H`, when the answer is `NotArrows`.
    pub coloring: Option<EdgeColoring>,
    pub stats: ArrowStats,
}

/// Edge masks of all copies of `pattern` in `K_n`, deduplicated and sorted.
pub fn pattern_copies(pattern: &Graph, n: usize, budget: &mut Budget) -> Result<Vec<u128>> {
    check_order(n)?;
    let p = pattern.order();
    if p > n || pattern.size() == 0 {
        return Ok(Vec::new());
    }
    let edges = pattern.edge_list();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; p];
    let mut used = vec![false; n];
    enumerate(0, n, &edges, &mut map, &mut used, &mut out, budget)?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn enumerate(
    i: usize,
    n: usize,
    edges: &[(usize, usize)],
    map: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<u128>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    if i == map.len() {
        let mask = edges.iter().fold(0u128, |m, &(a, b)| m | bit(n, map[a], map[b]));
        out.push(mask);
        return Ok(());
    }
    for h in 0..n {
        if !used[h] {
            used[h] = true;
            map[i] = h;
            enumerate(i + 1, n, edges, map, used, out, budget)?;
            used[h] = false;
        }
    }
    Ok(())
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!("N = {n} exceeds the supported maximum {MAX_ORDER}")));
    }
    Ok(())
}

fn bit(n: usize, u: usize, v: usize) -> u128 {
    let (a, b) = (u.min(v), u.max(v));
    1u128 << EdgeColoring::pair_index(n, a, b)
}

/// A pattern with no edges is present iff it fits.
fn trivially_present(pattern: &Graph, n: usize) -> bool {
    pattern.size() == 0 && pattern.order() <= n
}

struct Engine {
    n: usize,
    m: usize,
    red_by_last: Vec<Vec<u128>>,
    blue_by_last: Vec<Vec<u128>>,
    symmetry: bool,
    nodes: AtomicU64,
    prunes: AtomicU64,
    limit: u64,
}

fn by_last(copies: &[u128], m: usize) -> Vec<Vec<u128>> {
    let mut out = vec![Vec::new(); m];
    for &c in copies {
        out[127 - c.leading_zeros() as usize].push(c);
    }
    out
}

impl Engine {
    /// Colours allowed at edge `e` given the red mask so far.
    fn choices(&self, e: usize, red: u128) -> &'static [Color] {
        let row0 = e < self.n - 1;
        if self.symmetry && row0 && e > 0 && red & (1 << (e - 1)) == 0 {
            &[Color::Blue]
        } else {
            &[Color::Red, Color::Blue]
        }
    }

    /// Colours edge `e`; `None` if that closes a monochromatic pattern copy.
    fn extend(&self, e: usize, color: Color, red: u128, blue: u128) -> Option<(u128, u128)> {
        let b = 1u128 << e;
        let (red, blue) = match color {
            Color::Red => (red | b, blue),
            Color::Blue => (red, blue | b),
        };
        let (pool, mask) = match color {
            Color::Red => (&self.red_by_last[e], red),
            Color::Blue => (&self.blue_by_last[e], blue),
        };
        if pool.iter().any(|&c| c & !mask == 0) {
            self.prunes.fetch_add(1, Ordering::Relaxed);
            None
        } else {
            Some((red, blue))
        }
    }

    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    /// Red mask of a good completion, if any.
    fn dfs(&self, e: usize, red: u128, blue: u128) -> Result<Option<u128>> {
        self.tick()?;
        if e == self.m {
            return Ok(Some(red));
        }
        for &color in self.choices(e, red) {
            if let Some((r, b)) = self.extend(e, color, red, blue) {
                if let Some(found) = self.dfs(e + 1, r, b)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }

    /// All surviving partial colourings of the first `depth` edges, in DFS order.
    fn prefixes(&self, depth: usize) -> Result<Vec<(u128, u128)>> {
        let mut level = vec![(0u128, 0u128)];
        for e in 0..depth {
            let mut next = Vec::with_capacity(level.len() * 2);
            for &(red, blue) in &level {
                self.tick()?;
                for &color in self.choices(e, red) {
                    if let Some(s) = self.extend(e, color, red, blue) {
                        next.push(s);
                    }
                }
            }
            level = next;
        }
        Ok(level)
    }
}

/// Decides `K_N -> (red, blue)` exactly, within the node budget.
pub fn arrows(inst: &ArrowInstance) -> Result<ArrowResult> {
    if inst.backend != Backend::Exhaustive {
        return Err(Error::InvalidParameter("arrows needs the exhaustive backend; use export_cnf".into()));
    }
    let n = inst.n;
    check_order(n)?;
    let mut stats = ArrowStats::default();
    if trivially_present(&inst.red, n) || trivially_present(&inst.blue, n) {
        return Ok(ArrowResult {
            answer: Answer::Arrows,
            coloring: None,
            stats,
        });
    }
    let mut enum_budget = Budget::new(inst.budget);
    let (red_copies, blue_copies) = match (
        pattern_copies(&inst.red, n, &mut enum_budget),
        pattern_copies(&inst.blue, n, &mut enum_budget),
    ) {
        (Ok(r), Ok(b)) => (r, b),
        (Err(Error::BudgetExceeded { .. }), _) | (_, Err(Error::BudgetExceeded { .. })) => {
            stats.nodes = enum_budget.used();
            return Ok(ArrowResult {
                answer: Answer::UndecidedBudget,
                coloring: None,
                stats,
            });
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let m = n * n.saturating_sub(1) / 2;
    let engine = Engine {
        n,
        m,
        red_by_last: by_last(&red_copies, m),
        blue_by_last: by_last(&blue_copies, m),
        symmetry: inst.symmetry,
        nodes: AtomicU64::new(enum_budget.used()),
        prunes: AtomicU64::new(0),
        limit: inst.budget,
    };
    stats.red_copies = red_copies.len();
    stats.blue_copies = blue_copies.len();
    let outcome = search(&engine, inst.workers);
    stats.nodes = engine.nodes.load(Ordering::Relaxed).min(inst.budget);
    stats.prunes = engine.prunes.load(Ordering::Relaxed);
    let red_mask = match outcome {
        Ok(None) => {
            return Ok(ArrowResult {
                answer: Answer::Arrows,
                coloring: None,
                stats,
            })
        }
        Ok(Some(mask)) => mask,
        Err(Error::BudgetExceeded { .. }) => {
            return Ok(ArrowResult {
                answer: Answer::UndecidedBudget,
                coloring: None,
                stats,
            })
        }
        Err(e) => return Err(e),
    };
    let coloring = mask_coloring(n, red_mask);
    match verify_avoids(&coloring, &inst.red, &inst.blue, &mut Budget::unlimited())? {
        ExtremalCheck::Avoids => Ok(ArrowResult {
            answer: Answer::NotArrows,
            coloring: Some(coloring),
            stats,
        }),
        other => Err(Error::Precondition(format!(
            "search returned a colouring that fails verification: {other:?}"
        ))),
    }
}

fn search(engine: &Engine, workers: usize) -> Result<Option<u128>> {
    let depth = engine.m.min(engine.n.saturating_sub(1) + 4);
    let prefixes = engine.prefixes(depth)?;
    let run = |&(red, blue): &(u128, u128)| match engine.dfs(depth, red, blue) {
        Ok(None) => None,
        other => Some(other),
    };
    let first = if workers <= 1 {
        prefixes.iter().find_map(run)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        pool.install(|| prefixes.par_iter().find_map_first(run))
    };
    first.unwrap_or(Ok(None))
}

fn mask_coloring(n: usize, red_mask: u128) -> EdgeColoring {
    let mut c = EdgeColoring::monochromatic(n, Color::Blue);
    for (i, (u, v)) in EdgeColoring::pair_list(n).into_iter().enumerate() {
        if red_mask >> i & 1 == 1 {
            c.set(u, v, Color::Red);
        }
    }
    c
}

#[derive(Debug, Clone)]
pub enum RamseyValue {
    /// `K_value` arrows; `extremal` colours `K_{value-1}` with neither pattern.
    Exact {
        value: usize,
        extremal: Option<EdgeColoring>,
    },
    /// No `N <= max_n` arrows: the value exceeds `max_n`.
    LowerBound {
        at_least: usize,
        witness: Option<EdgeColoring>,
    },
}

/// Smallest `N <= max_n` with `K_N -> (red, blue)`.
pub fn ramsey_number(red: &Graph, blue: &Graph, max_n: usize, budget: u64, workers: usize) -> Result<RamseyValue> {
    check_order(max_n)?;
    let mut last: Option<EdgeColoring> = None;
    for n in 1..=max_n {
        let mut inst = ArrowInstance::new(n, red.clone(), blue.clone());
        inst.budget = budget;
        inst.workers = workers;
        let r = arrows(&inst)?;
        match r.answer {
            Answer::Arrows => {
                return Ok(RamseyValue::Exact {
                    value: n,
                    extremal: last,
                })
            }
            Answer::NotArrows => last = r.coloring,
            Answer::UndecidedBudget => return Err(Error::BudgetExceeded { limit: budget }),
        }
    }
    Ok(RamseyValue::LowerBound {
        at_least: max_n + 1,
        witness: last,
    })
}

/// Clauses in DIMACS literal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i64>>,
    pub comment: String,
}

impl Cnf {
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for line in self.comment.lines() {
            let _ = writeln!(out, "c {line}");
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for cl in &self.clauses {
            for lit in cl {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }

    /// True iff every clause has a true literal; `assignment[i]` is variable `i + 1`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|cl| {
            cl.iter()
                .any(|&l| assignment.get(l.unsigned_abs() as usize - 1).is_some_and(|&v| v == (l > 0)))
        })
    }
}

/// 1-based variable of pair `u < v`: `u*N - u(u+1)/2 + (v - u)`.
pub fn var_index(n: usize, u: usize, v: usize) -> usize {
    u * n - u * (u + 1) / 2 + (v - u)
}

/// CNF that is satisfiable iff `K_N` does not arrow `(red, blue)`.
pub fn export_cnf(inst: &ArrowInstance) -> Result<Cnf> {
    let n = inst.n;
    check_order(n)?;
    let m = n * n.saturating_sub(1) / 2;
    let mut budget = Budget::new(inst.budget);
    let mut clauses = Vec::new();
    let literals = |mask: u128, sign: i64| -> Vec<i64> {
        (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| sign * (i as i64 + 1)).collect()
    };
    if trivially_present(&inst.red, n) || trivially_present(&inst.blue, n) {
        clauses.push(Vec::new());
    }
    for mask in pattern_copies(&inst.red, n, &mut budget)? {
        clauses.push(literals(mask, -1));
    }
    for mask in pattern_copies(&inst.blue, n, &mut budget)? {
        clauses.push(literals(mask, 1));
    }
    if inst.symmetry {
        for v in 2..n {
            clauses.push(vec![-(var_index(n, 0, v) as i64), var_index(n, 0, v - 1) as i64]);
        }
    }
    Ok(Cnf {
        num_vars: m,
        clauses,
        comment: format!(
            "arrowing K_{n} -> (red {} vertices {} edges, blue {} vertices {} edges); true = red",
            inst.red.order(),
            inst.red.size(),
            inst.blue.order(),
            inst.blue.size()
        ),
    })
}

/// Reads a solver model: `v` lines, bare literal lines, `s`/`c` lines ignored.
/// An explicit unsatisfiable verdict is an error.
pub fn parse_model(text: &str) -> Result<Vec<i64>> {
    let mut lits = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        let upper = line.to_ascii_uppercase();
        if upper.contains("UNSAT") {
            return Err(Error::Parse("solver reported the formula unsatisfiable".into()));
        }
        let body = match line.split_at_checked(1) {
            Some(("v", rest)) => rest,
            Some(("c" | "s", _)) => continue,
            _ if upper == "SAT" || upper.is_empty() => continue,
            _ => line,
        };
        for tok in body.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad literal `{tok}`")))?;
            if lit != 0 {
                lits.push(lit);
            }
        }
    }
    Ok(lits)
}

/// Colouring of `K_n` from a model; every one of the `C(n,2)` variables must
/// be assigned.
pub fn decode_model(n: usize, literals: &[i64]) -> Result<EdgeColoring> {
    let m = n * n.saturating_sub(1) / 2;
    let mut value: Vec<Option<bool>> = vec![None; m];
    for &l in literals {
        let var = l.unsigned_abs() as usize;
        if var >= 1 && var <= m {
            value[var - 1] = Some(l > 0);
        }
    }
    if let Some(i) = value.iter().position(Option::is_none) {
        return Err(Error::Precondition(format!("assignment misses variable {}", i + 1)));
    }
    let mut c = EdgeColoring::monochromatic(n, Color::Blue);
    for (i, (u, v)) in EdgeColoring::pair_list(n).into_iter().enumerate() {
        if value[i] == Some(true) {
            c.set(u, v, Color::Red);
        }
    }
    Ok(c)
}

/// Small DPLL solver with unit propagation, for agreement checks against
/// the exhaustive backend. Returns a satisfying assignment or `None`.
pub fn dpll(cnf: &Cnf, budget: &mut Budget) -> Result<Option<Vec<bool>>> {
    let mut assign: Vec<Option<bool>> = vec![None; cnf.num_vars];
    if solve(&cnf.clauses, &mut assign, budget)? {
        Ok(Some(assign.into_iter().map(|v| v.unwrap_or(false)).collect()))
    } else {
        Ok(None)
    }
}

fn lit_value(assign: &[Option<bool>], l: i64) -> Option<bool> {
    assign[l.unsigned_abs() as usize - 1].map(|v| v == (l > 0))
}

fn solve(clauses: &[Vec<i64>], assign: &mut Vec<Option<bool>>, budget: &mut Budget) -> Result<bool> {
    budget.tick()?;
    let mut trail = Vec::new();
    // Unit propagation to a fixed point.
    loop {
        let mut unit = None;
        for cl in clauses {
            let mut open = None;
            let mut open_count = 0;
            let mut sat = false;
            for &l in cl {
                match lit_value(assign, l) {
                    Some(true) => {
                        sat = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        open_count += 1;
                        open = Some(l);
                    }
                }
            }
            if sat {
                continue;
            }
            if open_count == 0 {
                for v in trail {
                    assign[v] = None;
                }
                return Ok(false);
            }
            if open_count == 1 {
                unit = open;
                break;
            }
        }
        match unit {
            Some(l) => {
                let v = l.unsigned_abs() as usize - 1;
                assign[v] = Some(l > 0);
                trail.push(v);
            }
            None => break,
        }
    }
    let Some(v) = assign.iter().position(Option::is_none) else {
        return Ok(true);
    };
    for value in [true, false] {
        assign[v] = Some(value);
        if solve(clauses, assign, budget)? {
            return Ok(true);
        }
    }
    assign[v] = None;
    for t in trail {
        assign[t] = None;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternSpec;

    fn p(s: &str) -> Graph {
        PatternSpec::parse(s).unwrap().build().unwrap()
    }

    fn answer(n: usize, red: &str, blue: &str) -> Answer {
        arrows(&ArrowInstance::new(n, p(red), p(blue))).unwrap().answer
    }

    #[test]
    fn classical_instances() {
        assert_eq!(answer(6, "complete:3", "complete:3"), Answer::Arrows);
        assert_eq!(answer(5, "complete:3", "complete:3"), Answer::NotArrows);
        assert_eq!(answer(5, "star:3", "book:2,1"), Answer::Arrows);
        let r = arrows(&ArrowInstance::new(4, p("star:3"), p("book:2,1"))).unwrap();
        assert_eq!(r.answer, Answer::NotArrows);
        // Red perfect matching, blue C_4: the extremal colouring up to relabeling.
        let c = r.coloring.unwrap();
        assert_eq!(c.red_graph().size(), 2);
        assert!(c.red_graph().degrees().iter().all(|&d| d == 1));
    }

    #[test]
    fn ramsey_values() {
        let v = |r: &str, b: &str, max: usize| match ramsey_number(&p(r), &p(b), max, 10_000_000, 1).unwrap() {
            RamseyValue::Exact { value, .. } => value,
            RamseyValue::LowerBound { at_least, .. } => panic!("lower bound {at_least}"),
        };
        assert_eq!(v("star:3", "book:2,2", 6), 5);
        assert_eq!(v("complete:2", "complete:2", 3), 2);
        assert_eq!(v("path:4", "book:2,1", 8), 7);
        assert!(matches!(
            ramsey_number(&p("complete:3"), &p("complete:3"), 4, 1_000_000, 1).unwrap(),
            RamseyValue::LowerBound { at_least: 5, .. }
        ));
    }

    #[test]
    fn workers_do_not_change_results() {
        for n in 3..=6 {
            let mut a = ArrowInstance::new(n, p("path:4"), p("book:2,1"));
            let seq = arrows(&a).unwrap();
            a.workers = 4;
            let par = arrows(&a).unwrap();
            assert_eq!(seq.answer, par.answer);
            assert_eq!(seq.coloring, par.coloring);
        }
    }

    #[test]
    fn cnf_agrees_with_search() {
        let mut b = Budget::default();
        for (n, red, blue, sat) in [
            (5, "star:3", "book:2,1", false),
            (4, "star:3", "book:2,1", true),
            (3, "complete:3", "complete:3", true),
            (6, "complete:3", "complete:3", false),
        ] {
            let inst = ArrowInstance::new(n, p(red), p(blue));
            let cnf = export_cnf(&inst).unwrap();
            let model = dpll(&cnf, &mut b).unwrap();
            assert_eq!(model.is_some(), sat, "{n} {red} {blue}");
            if let Some(m) = model {
                assert!(cnf.satisfied_by(&m));
                let lits: Vec<i64> = m.iter().enumerate().map(|(i, &v)| if v { i as i64 + 1 } else { -(i as i64 + 1) }).collect();
                let c = decode_model(n, &lits).unwrap();
                assert!(verify_avoids(&c, &inst.red, &inst.blue, &mut b).unwrap().is_extremal());
            }
        }
    }

    #[test]
    fn variables_and_models() {
        assert_eq!(var_index(5, 0, 1), 1);
        assert_eq!(var_index(5, 0, 4), 4);
        assert_eq!(var_index(5, 1, 2), 5);
        assert_eq!(var_index(5, 3, 4), 10);
        for n in 2..9 {
            for (i, (u, v)) in EdgeColoring::pair_list(n).into_iter().enumerate() {
                assert_eq!(var_index(n, u, v), i + 1);
            }
        }
        let all = decode_model(4, &parse_model("s SATISFIABLE\nv 1 2 3 4 5 6 0\n").unwrap()).unwrap();
        assert_eq!(all, EdgeColoring::monochromatic(4, Color::Red));
        assert!(decode_model(4, &[1, 2, 3]).is_err());
        assert!(parse_model("s UNSATISFIABLE\n").is_err());
        let dimacs = export_cnf(&ArrowInstance::new(3, p("complete:3"), p("complete:3"))).unwrap().to_dimacs();
        assert!(dimacs.contains("p cnf 3 3\n"));
        assert!(dimacs.contains("-1 -2 -3 0\n"));
    }
}
