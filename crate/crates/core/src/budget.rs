//! Node budgets for the exponential searches.

/// Default number of search nodes an exact solver may expand.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Environment variable that overrides [`DEFAULT_NODE_BUDGET`] in the CLI.
pub const BUDGET_ENV_VAR: &str = "SIDON_COLOR_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub fn new(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    /// Reads [`BUDGET_ENV_VAR`], falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}

/// Running node counter shared by one search.
#[derive(Debug)]
pub(crate) struct NodeCounter {
    used: u64,
    limit: u64,
}

impl NodeCounter {
    pub(crate) fn new(budget: Budget) -> Self {
        NodeCounter {
            used: 0,
            limit: budget.max_nodes,
        }
    }

    /// Counts one node; returns `false` once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}
