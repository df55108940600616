//! Closed-form Ramsey bounds for sparse graphs versus books, stars, cliques
//! and matchings, evaluated in exact rational arithmetic.
//!
//! Every formula is always evaluated; hypotheses are reported alongside as
//! satisfied, violated or unknown and never gate the value.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `(n-1)(chi-1) + s`.
    BurrLower,
    /// Trees versus cliques: `(n-1)(k-1) + 1`.
    Chvatal,
    /// Sparse graphs versus cliques, unspecified edge constant: `(n-1)(k-1) + 1`.
    BefrsEps,
    /// Trees versus `t` cliques: `(n-1)(k-1) + t`.
    LuoPeng,
    /// Star versus book: `2n - 1`.
    StarBook,
    /// Sparse graph versus book: `2n - 1`.
    Mr,
    /// Star versus `t` books: `2n + t - 2`.
    StarTbooks,
    /// Sparse graph versus `t` books: `2n + t - 2`.
    Mr2,
    /// Any graph versus a book: `n + 2km - 2m/n`.
    GenericBookUpper,
    /// Sparse graph versus star `K_{1,k}`: `n + k - 1`.
    StarUpper,
    /// Sparse graph versus book: `2n + k - 2`.
    WeakUpper,
    /// `r(G, tH) <= r(G, H) + (t-1)|H|`.
    UnionUpper,
    /// `2n - 1 + (t-1)(k+2)`.
    Cor1,
    /// `n + 2mk - 2m/n + (t-1)(k+2)`.
    Cor2,
    /// Graph versus `2K_2`: `n + 1`.
    TwoK2,
    /// Sparse graph versus `tK_2`: `n + t - 1`.
    TK2,
    /// Edge-density trade-off functions `g(k, c)` and `f(k, c)`.
    Tradeoff,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::BurrLower,
        TheoremId::Chvatal,
        TheoremId::BefrsEps,
        TheoremId::LuoPeng,
        TheoremId::StarBook,
        TheoremId::Mr,
        TheoremId::StarTbooks,
        TheoremId::Mr2,
        TheoremId::GenericBookUpper,
        TheoremId::StarUpper,
        TheoremId::WeakUpper,
        TheoremId::UnionUpper,
        TheoremId::Cor1,
        TheoremId::Cor2,
        TheoremId::TwoK2,
        TheoremId::TK2,
        TheoremId::Tradeoff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::BurrLower => "burr_lower",
            TheoremId::Chvatal => "chvatal",
            TheoremId::BefrsEps => "befrs_eps",
            TheoremId::LuoPeng => "luo_peng",
            TheoremId::StarBook => "star_book",
            TheoremId::Mr => "mr",
            TheoremId::StarTbooks => "star_tbooks",
            TheoremId::Mr2 => "mr2",
            TheoremId::GenericBookUpper => "generic_book_upper",
            TheoremId::StarUpper => "star_upper",
            TheoremId::WeakUpper => "weak_upper",
            TheoremId::UnionUpper => "union_upper",
            TheoremId::Cor1 => "cor_1",
            TheoremId::Cor2 => "cor_2",
            TheoremId::TwoK2 => "two_k2",
            TheoremId::TK2 => "t_k2",
            TheoremId::Tradeoff => "tradeoff",
        }
    }

    pub fn direction(self) -> Direction {
        use TheoremId::*;
        match self {
            BurrLower => Direction::Lower,
            Chvatal | BefrsEps | LuoPeng | StarBook | Mr | StarTbooks | Mr2 | TwoK2 | TK2 => Direction::Exact,
            GenericBookUpper | StarUpper | WeakUpper | UnionUpper | Cor1 | Cor2 => Direction::Upper,
            Tradeoff => Direction::Threshold,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown bound '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Lower,
    Upper,
    Exact,
    /// A threshold function rather than a Ramsey value.
    Threshold,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
            Direction::Exact => "exact",
            Direction::Threshold => "threshold",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Satisfied,
    Violated,
    Unknown,
}

impl Status {
    fn of(b: bool) -> Self {
        if b {
            Status::Satisfied
        } else {
            Status::Violated
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Satisfied => "satisfied",
            Status::Violated => "violated",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub status: Status,
}

/// Inputs; each formula reads only the fields it needs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    pub n: Option<i128>,
    pub m: Option<i128>,
    pub k: Option<i128>,
    pub t: Option<i128>,
    pub chi: Option<i128>,
    pub s: Option<i128>,
    /// Trade-off constant.
    pub c: Option<Rational>,
    /// Known value of `r(G, H)` for the union bound.
    pub r_gh: Option<i128>,
    /// `|H|` for the union bound.
    pub h_order: Option<i128>,
    /// Edge constant of the sparse-graph-versus-clique theorem.
    pub eps: Option<Rational>,
}

impl BoundParams {
    /// Parses `key=value` pairs such as `n=34 k=1 c=49/1`.
    pub fn parse_pairs<'a, I: IntoIterator<Item = &'a str>>(pairs: I) -> Result<Self> {
        let mut p = BoundParams::default();
        for pair in pairs {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got '{pair}'")))?;
            let integer = || {
                value
                    .parse::<i128>()
                    .map_err(|_| Error::Parse(format!("'{value}' is not an integer")))
            };
            match key {
                "n" => p.n = Some(integer()?),
                "m" => p.m = Some(integer()?),
                "k" => p.k = Some(integer()?),
                "t" => p.t = Some(integer()?),
                "chi" => p.chi = Some(integer()?),
                "s" => p.s = Some(integer()?),
                "r_gh" => p.r_gh = Some(integer()?),
                "h_order" => p.h_order = Some(integer()?),
                "c" => p.c = Some(parse_rational(value)?),
                "eps" => p.eps = Some(parse_rational(value)?),
                _ => return Err(Error::Parse(format!("unknown parameter '{key}'"))),
            }
        }
        Ok(p)
    }

    fn get(&self, name: &'static str) -> Result<i128> {
        let v = match name {
            "n" => self.n,
            "m" => self.m,
            "k" => self.k,
            "t" => self.t,
            "chi" => self.chi,
            "s" => self.s,
            "r_gh" => self.r_gh,
            "h_order" => self.h_order,
            _ => unreachable!("unknown integer parameter {name}"),
        };
        v.ok_or(Error::MissingParameter(name))
    }

    fn pairs(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        let ints = [
            ("n", self.n),
            ("m", self.m),
            ("k", self.k),
            ("t", self.t),
            ("chi", self.chi),
            ("s", self.s),
            ("r_gh", self.r_gh),
            ("h_order", self.h_order),
        ];
        for (name, v) in ints {
            if let Some(v) = v {
                out.push((name, v.to_string()));
            }
        }
        for (name, v) in [("c", self.c), ("eps", self.eps)] {
            if let Some(v) = v {
                out.push((name, v.to_string()));
            }
        }
        out
    }
}

/// Accepts `a`, `a/b` or a finite decimal such as `12.5`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("'{s}' is not a rational number"));
    if let Some((a, b)) = s.split_once('/') {
        let a: i128 = a.trim().parse().map_err(|_| bad())?;
        let b: i128 = b.trim().parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(a, b));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let w: i128 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().map_err(|_| bad())? };
        let denom = 10i128.pow(frac.len() as u32);
        let f: i128 = frac.parse().map_err(|_| bad())?;
        let f = if negative { -f } else { f };
        return Ok(Rational::new(w * denom + f, denom));
    }
    s.trim().parse::<i128>().map(int).map_err(|_| bad())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub params: BoundParams,
    pub hypotheses: Vec<Hypothesis>,
    pub value: Rational,
    pub floor: i128,
    pub direction: Direction,
    /// Additional named quantities (trade-off variants, comparison terms).
    pub extras: Vec<(String, Rational)>,
}

impl BoundReport {
    pub fn all_hypotheses_satisfied(&self) -> bool {
        self.hypotheses.iter().all(|h| h.status == Status::Satisfied)
    }

    pub fn hypothesis(&self, name: &str) -> Option<Status> {
        self.hypotheses.iter().find(|h| h.name == name).map(|h| h.status)
    }

    pub fn extra(&self, name: &str) -> Option<Rational> {
        self.extras.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "bound.theorem={}", self.theorem);
        for (k, v) in self.params.pairs() {
            let _ = writeln!(out, "bound.param.{k}={v}");
        }
        for h in &self.hypotheses {
            let _ = writeln!(out, "bound.hypothesis.{}={}", h.name, h.status);
        }
        let _ = writeln!(out, "bound.value={}", self.value);
        let _ = writeln!(out, "bound.floor={}", self.floor);
        let _ = writeln!(out, "bound.direction={}", self.direction);
        for (name, v) in &self.extras {
            let _ = writeln!(out, "bound.extra.{name}={v}");
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("theorem".into(), self.theorem.to_string())];
        for (k, v) in self.params.pairs() {
            rows.push((format!("param {k}"), v));
        }
        for h in &self.hypotheses {
            rows.push((format!("hypothesis {}", h.name), h.status.to_string()));
        }
        rows.push(("value".into(), self.value.to_string()));
        rows.push(("floor".into(), self.floor.to_string()));
        rows.push(("direction".into(), self.direction.to_string()));
        for (name, v) in &self.extras {
            rows.push((name.clone(), v.to_string()));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}

struct Builder {
    hypotheses: Vec<Hypothesis>,
    extras: Vec<(String, Rational)>,
}

impl Builder {
    fn hyp(&mut self, name: &str, status: Status) {
        self.hypotheses.push(Hypothesis {
            name: name.to_string(),
            status,
        });
    }

    fn check(&mut self, name: &str, holds: bool) {
        self.hyp(name, Status::of(holds));
    }

    /// `m <= n (1 + 1/d)` as `m * d <= n * (d + 1)`.
    fn edge_density(&mut self, name: &str, n: i128, m: Option<i128>, d: Rational) {
        match m {
            Some(m) => self.check(name, int(m) * d <= int(n) * (d + int(1))),
            None => self.hyp(name, Status::Unknown),
        }
    }

    fn extra(&mut self, name: &str, v: Rational) {
        self.extras.push((name.to_string(), v));
    }
}

/// `g(k, c) = (2c + 21)k^2 + (c + 25/2)k`.
pub fn tradeoff_g(k: i128, c: Rational) -> Rational {
    let k = int(k);
    (c * int(2) + int(21)) * k * k + (c + Rational::new(25, 2)) * k
}

/// `f(k, c) = (14k^2 - 14k + 1) g(k, c) / (ck)`, the product form.
pub fn tradeoff_f(k: i128, c: Rational) -> Rational {
    let kk = int(k);
    (int(14) * kk * kk - int(14) * kk + int(1)) * tradeoff_g(k, c) / (c * kk)
}

/// The expanded polynomial printed next to the product form of `f`. Its `k^2`
/// coefficient differs from the product's `-(14 + 119/c)`.
pub fn tradeoff_f_expanded(k: i128, c: Rational) -> Rational {
    let kk = int(k);
    (int(28) + int(294) / c) * kk * kk * kk - (int(42) + int(119) / c) * kk * kk - (int(12) + int(154) / c) * kk
        + int(1)
        + Rational::new(25, 2) / c
}

/// Evaluates one bound with its hypotheses.
pub fn evaluate(theorem: TheoremId, params: &BoundParams) -> Result<BoundReport> {
    use TheoremId::*;
    let p = params;
    let mut b = Builder {
        hypotheses: Vec::new(),
        extras: Vec::new(),
    };
    let value: Rational = match theorem {
        BurrLower => {
            let (n, chi, s) = (p.get("n")?, p.get("chi")?, p.get("s")?);
            b.check("n>=s", n >= s);
            int((n - 1) * (chi - 1) + s)
        }
        Chvatal => {
            let (n, k) = (p.get("n")?, p.get("k")?);
            b.check("k>=1", k >= 1);
            b.check("n>=1", n >= 1);
            int((n - 1) * (k - 1) + 1)
        }
        BefrsEps => {
            let (n, k) = (p.get("n")?, p.get("k")?);
            b.check("k>=3", k >= 3);
            let status = match (p.eps, p.m) {
                (Some(eps), Some(m)) if k >= 2 => {
                    // m <= n + eps n^{2/(k-1)}  <=>  (m - n)^{k-1} <= eps^{k-1} n^2 for m >= n.
                    if m <= n {
                        Status::Satisfied
                    } else {
                        let e = (k - 1) as i32;
                        let lhs = pow(int(m - n), e);
                        let rhs = pow(eps, e) * int(n) * int(n);
                        Status::of(lhs <= rhs)
                    }
                }
                _ => Status::Unknown,
            };
            b.hyp("m<=n+eps*n^(2/(k-1))", status);
            b.hyp("n_sufficiently_large", Status::Unknown);
            int((n - 1) * (k - 1) + 1)
        }
        LuoPeng => {
            let (n, k, t) = (p.get("n")?, p.get("k")?, p.get("t")?);
            b.check("t>=1", t >= 1);
            b.check("k>=2", k >= 2);
            b.hyp("n_sufficiently_large", Status::Unknown);
            int((n - 1) * (k - 1) + t)
        }
        StarBook => {
            let (n, k) = (p.get("n")?, p.get("k")?);
            b.check("k>=1", k >= 1);
            b.check("n>=3k-3", n >= 3 * k - 3);
            int(2 * n - 1)
        }
        Mr => {
            let (n, k) = (p.get("n")?, p.get("k")?);
            b.check("k>=1", k >= 1);
            b.check("n>=34k^3", n >= 34 * k * k * k);
            b.edge_density("m<=n(1+1/(119k^2+62k))", n, p.m, int(119 * k * k + 62 * k));
            int(2 * n - 1)
        }
        StarTbooks => {
            let (n, k, t) = (p.get("n")?, p.get("k")?, p.get("t")?);
            b.check("k>=1,t>=1", k >= 1 && t >= 1);
            b.check("n>=3tk+3t-5", n >= 3 * t * k + 3 * t - 5);
            int(2 * n + t - 2)
        }
        Mr2 => {
            let (n, k, t) = (p.get("n")?, p.get("k")?, p.get("t")?);
            b.check("k>=1,t>=1", k >= 1 && t >= 1);
            b.check("n>=111t^3k^3", n >= 111 * t * t * t * k * k * k);
            b.edge_density(
                "m<=n(1+1/(127t^2k^2+79t^2k))",
                n,
                p.m,
                int(127 * t * t * k * k + 79 * t * t * k),
            );
            int(2 * n + t - 2)
        }
        GenericBookUpper => {
            let (n, m, k) = (p.get("n")?, p.get("m")?, p.get("k")?);
            b.check("k>=1", k >= 1);
            b.check("n>=1", n >= 1);
            if n < 1 {
                return Err(Error::InvalidParameter("n must be positive".into()));
            }
            int(n) + int(2 * k * m) - Rational::new(2 * m, n)
        }
        StarUpper => {
            let (n, k) = (p.get("n")?, p.get("k")?);
            b.check("k>=1", k >= 1);
            b.check("n>=6k^3", n >= 6 * k * k * k);
            b.edge_density("m<=n(1+1/(24k-12))", n, p.m, int(24 * k - 12));
            int(n + k - 1)
        }
        WeakUpper => {
            let (n, k) = (p.get("n")?, p.get("k")?);
            b.check("k>=1", k >= 1);
            b.check("n>=6k^3", n >= 6 * k * k * k);
            let d = int(9 * k * k) + Rational::new(23 * k, 2) + int(3);
            b.edge_density("m<=n(1+1/(9k^2+23k/2+3))", n, p.m, d);
            int(2 * n + k - 2)
        }
        UnionUpper => {
            let (r, t, h) = (p.get("r_gh")?, p.get("t")?, p.get("h_order")?);
            b.check("t>=1", t >= 1);
            b.hyp("G,H_connected", Status::Unknown);
            int(r + (t - 1) * h)
        }
        Cor1 => {
            let (n, k, t) = (p.get("n")?, p.get("k")?, p.get("t")?);
            b.check("k>=1,t>=1", k >= 1 && t >= 1);
            b.check("n>=34k^3", n >= 34 * k * k * k);
            b.edge_density("m<=n(1+1/(119k^2+62k))", n, p.m, int(119 * k * k + 62 * k));
            int(2 * n - 1 + (t - 1) * (k + 2))
        }
        Cor2 => {
            let (n, m, k, t) = (p.get("n")?, p.get("m")?, p.get("k")?, p.get("t")?);
            b.check("k>=1,t>=1", k >= 1 && t >= 1);
            if n < 1 {
                return Err(Error::InvalidParameter("n must be positive".into()));
            }
            int(n) + int(2 * m * k) - Rational::new(2 * m, n) + int((t - 1) * (k + 2))
        }
        TwoK2 => {
            let n = p.get("n")?;
            b.hyp("no_isolated_vertices", Status::Unknown);
            match p.m {
                Some(m) => b.check("not_complete", m < n * (n - 1) / 2),
                None => b.hyp("not_complete", Status::Unknown),
            }
            int(n + 1)
        }
        TK2 => {
            let (n, t) = (p.get("n")?, p.get("t")?);
            b.check("t>=3", t >= 3);
            b.check("n>=(4t-5)(2t-3)+3", n >= (4 * t - 5) * (2 * t - 3) + 3);
            match p.m {
                Some(m) if 4 * t - 5 > 0 => {
                    b.check("m<=n+n^2/(4t-5)-2", int(m) <= int(n) + Rational::new(n * n, 4 * t - 5) - int(2))
                }
                _ => b.hyp("m<=n+n^2/(4t-5)-2", Status::Unknown),
            }
            int(n + t - 1)
        }
        Tradeoff => {
            let k = p.get("k")?;
            let c = p.c.ok_or(Error::MissingParameter("c"))?;
            b.check("c>0", c > int(0));
            b.check("k>=1", k >= 1);
            if c <= int(0) || k < 1 {
                return Err(Error::InvalidParameter("tradeoff needs c > 0 and k >= 1".into()));
            }
            let g = tradeoff_g(k, c);
            b.extra("g", g);
            b.extra("f_product", tradeoff_f(k, c));
            b.extra("f_expanded", tradeoff_f_expanded(k, c));
            b.extra("edge_denominator_stated", int(119 * k * k + 62 * k));
            b.extra("n_threshold_stated", int(34 * k * k * k));
            g
        }
    };
    Ok(BoundReport {
        theorem,
        params: p.clone(),
        hypotheses: b.hypotheses,
        floor: value.floor().to_integer(),
        value,
        direction: theorem.direction(),
        extras: b.extras,
    })
}

fn pow(x: Rational, e: i32) -> Rational {
    (0..e).fold(int(1), |acc, _| acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(s: &str) -> BoundParams {
        BoundParams::parse_pairs(s.split_whitespace()).unwrap()
    }

    #[test]
    fn simple_values() {
        let r = evaluate(TheoremId::BurrLower, &params("n=4 chi=3 s=2")).unwrap();
        assert_eq!((r.floor, r.direction), (8, Direction::Lower));
        let r = evaluate(TheoremId::GenericBookUpper, &params("n=3 m=3 k=1")).unwrap();
        assert_eq!((r.value, r.floor), (int(7), 7));
        let r = evaluate(TheoremId::GenericBookUpper, &params("n=4 m=3 k=1")).unwrap();
        assert_eq!((r.value, r.floor), (Rational::new(17, 2), 8));
    }

    #[test]
    fn tradeoff_at_49() {
        let r = evaluate(TheoremId::Tradeoff, &params("k=2 c=49")).unwrap();
        assert_eq!(r.value, int(599));
        assert_eq!(tradeoff_g(1, int(49)), Rational::new(361, 2));
        // The stated denominator 119k^2 + 62k exceeds g(k, 49) by k/2.
        assert_eq!(int(119 + 62) - tradeoff_g(1, int(49)), Rational::new(1, 2));
        assert_ne!(r.extra("f_product"), r.extra("f_expanded"));
    }

    #[test]
    fn hypotheses_are_literal() {
        let r = evaluate(TheoremId::Mr2, &params("n=111 k=1 t=1 m=111")).unwrap();
        assert_eq!(r.floor, 221);
        assert!(r.all_hypotheses_satisfied());
        let r = evaluate(TheoremId::Mr2, &params("n=110 k=1 t=1")).unwrap();
        assert_eq!(r.hypothesis("n>=111t^3k^3"), Some(Status::Violated));
        assert_eq!(r.hypothesis("m<=n(1+1/(127t^2k^2+79t^2k))"), Some(Status::Unknown));
        let r = evaluate(TheoremId::BefrsEps, &params("n=100 k=3")).unwrap();
        assert_eq!(r.hypothesis("m<=n+eps*n^(2/(k-1))"), Some(Status::Unknown));
        let r = evaluate(TheoremId::BefrsEps, &params("n=100 k=3 m=150 eps=1/2")).unwrap();
        assert_eq!(r.hypothesis("m<=n+eps*n^(2/(k-1))"), Some(Status::Satisfied));
        let r = evaluate(TheoremId::BefrsEps, &params("n=100 k=3 m=151 eps=1/2")).unwrap();
        assert_eq!(r.hypothesis("m<=n+eps*n^(2/(k-1))"), Some(Status::Violated));
    }

    #[test]
    fn missing_parameters() {
        assert_eq!(
            evaluate(TheoremId::Cor2, &params("n=3 k=1 t=1")).unwrap_err(),
            Error::MissingParameter("m")
        );
        assert_eq!(evaluate(TheoremId::Tradeoff, &params("k=1")).unwrap_err(), Error::MissingParameter("c"));
    }

    #[test]
    fn names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert!(parse_rational("12.5").unwrap() == Rational::new(25, 2));
        assert!(parse_rational("-0.25").unwrap() == Rational::new(-1, 4));
    }
}
