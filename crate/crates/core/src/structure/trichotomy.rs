use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::leaves::{ceil_div, max_end_edge_matching, EndEdge};
use super::suspended::longest_suspended_path;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Thresholds for the three-way structural split: suspended-path order `q`
/// and end-edge matching size `s`. The excess `l = e(G) - n` is read off the
/// graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrichotomyParams {
    pub q: usize,
    pub s: usize,
}

impl TrichotomyParams {
    pub fn new(q: usize, s: usize) -> Result<Self> {
        if q < 3 {
            return Err(Error::InvalidParameter(format!("q = {q} must be at least 3")));
        }
        if s < 2 {
            return Err(Error::InvalidParameter(format!(
                "s = {s} must be at least 2 (the hub bound divides by s - 1)"
            )));
        }
        Ok(Self { q, s })
    }

    /// `(q - 2)(2s + 3l - 2) + 1`.
    pub fn gamma(&self, excess: i64) -> i64 {
        (self.q as i64 - 2) * (2 * self.s as i64 + 3 * excess - 2) + 1
    }
}

/// Few-high-degree-vertices case: the vertex count bound and the leaf hub.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HubReport {
    /// Number of vertices of degree at least 2.
    pub high_degree_count: usize,
    pub gamma: i64,
    /// `gamma < 1`: the numeric claims are reported but not expected to hold.
    pub gamma_degenerate: bool,
    pub hub: usize,
    pub hub_leaves: Vec<usize>,
    /// `ceil((n - gamma) / (s - 1))`.
    pub required_leaves: i64,
    pub count_within_gamma: bool,
    pub hub_meets_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrichotomyReport {
    pub params: TrichotomyParams,
    pub order: usize,
    pub excess: i64,
    /// A longest suspended path, present when its order is at least `q`.
    pub long_suspended_path: Option<Vec<usize>>,
    /// A maximum end-edge matching, present when it has at least `s` edges.
    pub end_edge_matching: Option<Vec<EndEdge>>,
    /// Present exactly when both cases above are absent.
    pub hub: Option<HubReport>,
}

impl TrichotomyReport {
    pub fn is_nonempty(&self) -> bool {
        self.long_suspended_path.is_some() || self.end_edge_matching.is_some() || self.hub.is_some()
    }

    /// True unless the hub case is present with `gamma >= 1` and one of its
    /// numeric claims fails.
    pub fn lemma_claims_hold(&self) -> bool {
        match &self.hub {
            Some(h) if !h.gamma_degenerate => h.count_within_gamma && h.hub_meets_bound,
            _ => true,
        }
    }

    /// Which case applies first: 1, 2 or 3.
    pub fn case(&self) -> u8 {
        if self.long_suspended_path.is_some() {
            1
        } else if self.end_edge_matching.is_some() {
            2
        } else {
            3
        }
    }

    /// Line-oriented `key=value` rendering used by the `analyze` command.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "trichotomy.q={}", self.params.q);
        let _ = writeln!(out, "trichotomy.s={}", self.params.s);
        let _ = writeln!(out, "trichotomy.order={}", self.order);
        let _ = writeln!(out, "trichotomy.excess={}", self.excess);
        let _ = writeln!(out, "trichotomy.case={}", self.case());
        match &self.long_suspended_path {
            Some(p) => {
                let _ = writeln!(out, "trichotomy.case1.path={}", list(p));
            }
            None => {
                let _ = writeln!(out, "trichotomy.case1.path=none");
            }
        }
        match &self.end_edge_matching {
            Some(m) => {
                let pairs: Vec<String> = m.iter().map(|(l, s)| format!("{l}-{s}")).collect();
                let _ = writeln!(out, "trichotomy.case2.end_edges={}", pairs.join(","));
            }
            None => {
                let _ = writeln!(out, "trichotomy.case2.end_edges=none");
            }
        }
        match &self.hub {
            Some(h) => {
                let _ = writeln!(out, "trichotomy.case3.high_degree_count={}", h.high_degree_count);
                let _ = writeln!(out, "trichotomy.case3.gamma={}", h.gamma);
                let _ = writeln!(out, "trichotomy.case3.gamma_degenerate={}", h.gamma_degenerate);
                let _ = writeln!(out, "trichotomy.case3.hub={}", h.hub);
                let _ = writeln!(out, "trichotomy.case3.hub_leaf_count={}", h.hub_leaves.len());
                let _ = writeln!(out, "trichotomy.case3.required_leaves={}", h.required_leaves);
                let _ = writeln!(out, "trichotomy.case3.count_within_gamma={}", h.count_within_gamma);
                let _ = writeln!(out, "trichotomy.case3.hub_meets_bound={}", h.hub_meets_bound);
            }
            None => {
                let _ = writeln!(out, "trichotomy.case3=none");
            }
        }
        let _ = writeln!(out, "trichotomy.claims_hold={}", self.lemma_claims_hold());
        out
    }
}

/// Vertex with the most leaf neighbours (smallest index on ties) and those leaves.
pub fn leaf_hub(g: &Graph) -> (usize, Vec<usize>) {
    let leaves = g.leaves();
    let mut per: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for &l in &leaves {
        per[g.neighbors(l).first().unwrap()].push(l);
    }
    let hub = (0..g.order()).max_by_key(|&v| (per[v].len(), std::cmp::Reverse(v))).unwrap_or(0);
    let hub_leaves = per.get(hub).cloned().unwrap_or_default();
    (hub, hub_leaves)
}

/// Classifies a connected graph by the three structural cases.
pub fn trichotomy(g: &Graph, params: TrichotomyParams) -> Result<TrichotomyReport> {
    let params = TrichotomyParams::new(params.q, params.s)?;
    let n = g.order();
    if n < params.q {
        return Err(Error::Precondition(format!("order {n} is below q = {}", params.q)));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let excess = g.excess();
    let path = longest_suspended_path(g);
    let long_suspended_path = (path.len() >= params.q).then_some(path);
    let matching = max_end_edge_matching(g);
    let end_edge_matching = (matching.len() >= params.s).then_some(matching);
    let hub = if long_suspended_path.is_none() && end_edge_matching.is_none() {
        let high_degree_count = (0..n).filter(|&v| g.degree(v) >= 2).count();
        let gamma = params.gamma(excess);
        let (hub, hub_leaves) = leaf_hub(g);
        let required_leaves = ceil_div(n as i64 - gamma, params.s as i64 - 1);
        Some(HubReport {
            high_degree_count,
            gamma,
            gamma_degenerate: gamma < 1,
            hub,
            count_within_gamma: high_degree_count as i64 <= gamma,
            hub_meets_bound: hub_leaves.len() as i64 >= required_leaves,
            hub_leaves,
            required_leaves,
        })
    } else {
        None
    };
    Ok(TrichotomyReport {
        params,
        order: n,
        excess,
        long_suspended_path,
        end_edge_matching,
        hub,
    })
}
