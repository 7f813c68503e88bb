use serde::Serialize;

use crate::error::{Error, Result};

/// The order in which a staircase raises coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PlannerOrder(Vec<usize>);

impl PlannerOrder {
    /// Validates that `permutation` lists each of `0..len` exactly once.
    pub fn new(permutation: Vec<usize>) -> Result<Self> {
        let len = permutation.len();
        if len < 2 {
            return Err(Error::InvalidOrder {
                reason: format!("an order needs at least 2 coordinates, got {len}"),
            });
        }
        let mut seen = vec![false; len];
        for &c in &permutation {
            if c >= len || std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidOrder {
                    reason: format!("{permutation:?} is not a permutation of 0..{len}"),
                });
            }
        }
        Ok(PlannerOrder(permutation))
    }

    /// `(0, 1, …, n)` for the `n`-sphere: raise the first coordinate first.
    pub fn identity(n: usize) -> Self {
        PlannerOrder((0..=n).collect())
    }

    /// `(n, …, 1, 0)` for the `n`-sphere: raise the last coordinate first.
    pub fn reversal(n: usize) -> Self {
        PlannerOrder((0..=n).rev().collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Number of coordinates permuted.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
