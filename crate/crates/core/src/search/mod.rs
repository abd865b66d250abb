//! Exact values of `r(k, l, m)`, the least `n` such that every 3-colouring
//! of `K_{n,n}` has a red `k`-, green `l`- or blue `m`-connected matching,
//! by exhaustive search; plus the closed-form values for `r(k, l, l)` to
//! compare against.

pub mod cm;
pub mod engine;

use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use cm::CmObstruction;
pub use engine::{Obstruction, MAX_SIDE};

use crate::bigraph::{Color, Coloring};
use crate::error::Error;
use crate::matching::meets_thresholds;

/// Red, green and blue connected-matching thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Thresholds {
    pub k: usize,
    pub l: usize,
    pub m: usize,
}

impl Thresholds {
    pub const fn new(k: usize, l: usize, m: usize) -> Self {
        Thresholds { k, l, m }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.k == 0 || self.l == 0 || self.m == 0 {
            return Err(Error::InvalidParams(format!("thresholds must be at least 1, got {self}")));
        }
        Ok(())
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.k, self.l, self.m]
    }

    pub fn get(&self, c: Color) -> usize {
        self.as_array()[c.index()]
    }
}

impl std::fmt::Display for Thresholds {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.k, self.l, self.m)
    }
}

pub const DEFAULT_MAX_NODES: u64 = 100_000_000;
pub const DEFAULT_MAX_TIME: Duration = Duration::from_secs(600);
pub const BUDGET_ENV: &str = "BRAMSEY_BUDGET_NODES";

/// Node and wall-clock limits for one search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: DEFAULT_MAX_NODES, max_time: DEFAULT_MAX_TIME }
    }
}

impl Budget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Self {
        Budget { max_nodes, max_time }
    }

    /// Defaults, with the node limit taken from `BRAMSEY_BUDGET_NODES` when set.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(n) = std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            b.max_nodes = n;
        }
        b
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes, ..Budget::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStatus {
    WitnessFound,
    Refuted,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub n: usize,
    pub status: SearchStatus,
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
    #[serde(with = "secs")]
    pub elapsed: Duration,
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs_f64(f64::deserialize(d)?))
    }
}

/// Search configuration shared by every `n` of a run.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub budget: Budget,
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: Budget::from_env(), threads: 1 }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: Budget) -> Self {
        SearchConfig { budget, threads: 1 }
    }
}

/// `true` if the complete coloring has none of the three connected matchings.
pub fn avoids(c: &Coloring, th: Thresholds) -> Result<bool, Error> {
    if !c.is_complete() {
        return Err(Error::Incomplete);
    }
    Ok(!meets_thresholds(c, th.k, th.l, th.m).0)
}

/// Looks for a coloring of `K_{n,n}` avoiding `th`.
pub fn find_avoiding(n: usize, th: Thresholds, cfg: &SearchConfig) -> Result<SearchOutcome, Error> {
    th.validate()?;
    if n == 0 || n > MAX_SIDE {
        return Err(Error::InvalidParams(format!("side {n} outside 1..={MAX_SIDE}")));
    }
    Ok(engine::run(&CmObstruction::new(th), n, &cfg.budget, cfg.threads))
}

/// Result of scanning `n = 1, 2, ...` for the first refuted size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RamseyValue {
    Exact { value: usize },
    /// The value lies in `lower..=upper`; `upper = None` means unbounded.
    Bounds { lower: usize, upper: Option<usize> },
}

impl RamseyValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            RamseyValue::Exact { value } => Some(*value),
            RamseyValue::Bounds { .. } => None,
        }
    }

    pub fn lower(&self) -> usize {
        match self {
            RamseyValue::Exact { value } => *value,
            RamseyValue::Bounds { lower, .. } => *lower,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        match *self {
            RamseyValue::Exact { value } => value == v,
            RamseyValue::Bounds { lower, upper } => v >= lower && upper.map_or(true, |u| v <= u),
        }
    }
}

impl std::fmt::Display for RamseyValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RamseyValue::Exact { value } => write!(f, "{value}"),
            RamseyValue::Bounds { lower, upper: Some(u) } => write!(f, "[{lower}, {u}]"),
            RamseyValue::Bounds { lower, upper: None } => write!(f, ">= {lower}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RamseyReport {
    pub value: RamseyValue,
    /// One outcome per size searched, in increasing `n`.
    pub outcomes: Vec<SearchOutcome>,
}

impl RamseyReport {
    /// The avoiding coloring at the largest size that has one.
    pub fn best_witness(&self) -> Option<&Coloring> {
        self.outcomes.iter().rev().find_map(|o| o.witness.as_ref())
    }
}

/// Scans sizes upward with any search function `at(n)`. Stops at the first
/// refutation, or at the first exhausted budget; sizes below a witness are
/// never refuted, so the surviving candidates form an interval.
pub fn scan_sizes(
    n_max: usize,
    mut at: impl FnMut(usize) -> Result<SearchOutcome, Error>,
) -> Result<RamseyReport, Error> {
    let mut outcomes = Vec::new();
    let mut lower = 1;
    for n in 1..=n_max {
        let o = at(n)?;
        let status = o.status;
        outcomes.push(o);
        match status {
            SearchStatus::WitnessFound => lower = n + 1,
            SearchStatus::Refuted => return Ok(RamseyReport { value: RamseyValue::Exact { value: n }, outcomes }),
            SearchStatus::BudgetExhausted => {
                return Ok(RamseyReport { value: RamseyValue::Bounds { lower, upper: None }, outcomes })
            }
        }
    }
    Ok(RamseyReport { value: RamseyValue::Bounds { lower, upper: None }, outcomes })
}

/// Smallest `n <= n_max` with every coloring of `K_{n,n}` hitting `th`.
pub fn ramsey_value(th: Thresholds, n_max: usize, cfg: &SearchConfig) -> Result<RamseyReport, Error> {
    th.validate()?;
    if n_max == 0 {
        return Err(Error::InvalidParams("n_max must be at least 1".into()));
    }
    scan_sizes(n_max.min(MAX_SIDE), |n| find_avoiding(n, th, cfg))
}

/// Closed form for `r(k, l, l)`, branches tried in order:
///
/// * `k + 2l − 1` if `l <= (k+1)/2`
/// * `4l − 2` if `(k+1)/2 < l <= 2k/3`
/// * `2k + l − 2` if `2k/3 < l < k`
/// * `k + 2l − 2` if `k <= l`
pub fn theorem8_formula(k: usize, l: usize) -> usize {
    if 2 * l <= k + 1 {
        k + 2 * l - 1
    } else if 3 * l <= 2 * k {
        4 * l - 2
    } else if l < k {
        2 * k + l - 2
    } else {
        k + 2 * l - 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatchFlag {
    Match,
    Mismatch,
    /// The searched interval contains the formula value but is not a point.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Theorem8Row {
    pub k: usize,
    pub l: usize,
    pub searched: RamseyValue,
    pub formula: usize,
    pub flag: MatchFlag,
    pub nodes_explored: u64,
}

/// Searches `r(k, l, l)` over a grid and tabulates it against the formula.
/// Reports only; mismatches are data.
pub fn compare_with_theorem8(grid: &[(usize, usize)], n_max: usize, cfg: &SearchConfig) -> Result<Vec<Theorem8Row>, Error> {
    grid.iter()
        .map(|&(k, l)| {
            let report = ramsey_value(Thresholds::new(k, l, l), n_max, cfg)?;
            let formula = theorem8_formula(k, l);
            let flag = match report.value {
                RamseyValue::Exact { value } if value == formula => MatchFlag::Match,
                v if !v.contains(formula) => MatchFlag::Mismatch,
                _ => MatchFlag::Undetermined,
            };
            let nodes_explored = report.outcomes.iter().map(|o| o.nodes_explored).sum();
            Ok(Theorem8Row { k, l, searched: report.value, formula, flag, nodes_explored })
        })
        .collect()
}
