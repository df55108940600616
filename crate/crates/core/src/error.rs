use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A backtracking search ran out of nodes. Never means "does not exist".
    #[error("search budget of {limit} nodes exhausted")]
    BudgetExceeded { limit: u64 },

    #[error("graph order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Node counter for exhaustive searches.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

/// Default node budget for every backtracking search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }

    /// A fresh budget over `1/divisor` of what is left, for one stage of a
    /// pipeline; charge it back with [`Budget::absorb`].
    pub fn split(&self, divisor: u64) -> Budget {
        Budget::new((self.remaining() / divisor.max(1)).max(1))
    }

    pub fn absorb(&mut self, child: &Budget) {
        self.used = self.used.saturating_add(child.used.min(child.limit));
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}
