//! Explicit step budgets.
//!
//! Every recursor unfolding and every truncation-threshold probe costs one
//! unit of fuel. Exhaustion is a reported outcome, never a hang: the error
//! carries the deepest chain of continuation indices entered so far, which
//! is usually enough to see where a recursion failed to bottom out.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("fuel exhausted after {spent} steps (deepest recursion path: {path:?})")]
    FuelExhausted { spent: u64, path: Vec<usize> },
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("guarantee violated: {0}")]
    GuaranteeViolated(String),
}

impl Error {
    pub fn is_fuel(&self) -> bool {
        matches!(self, Error::FuelExhausted { .. })
    }
}

/// A strictly decreasing step budget threaded through every higher-order
/// evaluation, plus a breadcrumb trail of continuation indices for
/// diagnosing exhaustion.
#[derive(Debug, Clone)]
pub struct Fuel {
    budget: u64,
    remaining: u64,
    path: Vec<usize>,
    deepest: Vec<usize>,
}

impl Fuel {
    pub fn new(budget: u64) -> Self {
        Fuel { budget, remaining: budget, path: Vec::new(), deepest: Vec::new() }
    }

    /// A budget large enough to never run out at desk scale.
    pub fn unlimited() -> Self {
        Fuel::new(u64::MAX)
    }

    pub fn spend(&mut self, cost: u64) -> Result<()> {
        if self.remaining < cost {
            self.remaining = 0;
            return Err(Error::FuelExhausted { spent: self.spent(), path: self.deepest.clone() });
        }
        self.remaining -= cost;
        Ok(())
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }

    pub fn spent(&self) -> u64 {
        self.budget - self.remaining
    }

    /// Record entry into the continuation at position `idx`.
    pub fn enter(&mut self, idx: usize) {
        self.path.push(idx);
        if self.path.len() > self.deepest.len() {
            self.deepest = self.path.clone();
        }
    }

    pub fn leave(&mut self) {
        self.path.pop();
    }

    /// Depth of the deepest continuation chain entered so far.
    pub fn max_depth(&self) -> usize {
        self.deepest.len()
    }
}
