use serde::{Deserialize, Serialize};

/// Resource caps for the exact solvers.
///
/// Instances at or below every cap are solved without a node limit. Above a
/// cap the solver still runs, but gives up with
/// [`Error::BudgetExhausted`](crate::Error::BudgetExhausted) once
/// `node_budget` search nodes have been expanded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_sets: usize,
    /// Applied to the universe after dominated elements are removed.
    pub max_universe: usize,
    /// Applied to the number of distinct element traces in VC computations.
    pub max_vc_candidates: usize,
    pub node_budget: u64,
    /// Maximum number of p-subsets inspected by an exhaustive (p,q) check.
    pub pq_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_sets: 64,
            max_universe: 40,
            max_vc_candidates: 24,
            node_budget: 5_000_000,
            pq_budget: 20_000_000,
        }
    }
}

impl Limits {
    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }
}

/// Counts expanded nodes and trips once an optional budget runs out.
#[derive(Debug)]
pub(crate) struct NodeCounter {
    pub expanded: u64,
    limit: Option<u64>,
    what: &'static str,
}

impl NodeCounter {
    pub fn new(what: &'static str, limit: Option<u64>) -> Self {
        NodeCounter { expanded: 0, limit, what }
    }

    pub fn tick(&mut self) -> crate::Result<()> {
        self.expanded += 1;
        match self.limit {
            Some(budget) if self.expanded > budget => Err(crate::Error::BudgetExhausted {
                what: self.what,
                budget,
            }),
            _ => Ok(()),
        }
    }
}
