//! Squarefree testing and squarefree search on integer intervals.

use crate::error::{Error, Result};

/// True iff no prime square divides n. Trial division with factor stripping;
/// the intervals this crate scans are tiny, so no sieve is kept around.
///
/// Panics if n = 0.
pub fn is_squarefree(n: u64) -> bool {
    assert!(n > 0, "is_squarefree requires n >= 1");
    let mut n = n;
    if n.is_multiple_of(2) {
        n /= 2;
        if n.is_multiple_of(2) {
            return false;
        }
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return false;
            }
        }
        d += 2;
    }
    true
}

/// Half-open integer interval `[lower, upper)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegerInterval {
    lower: u64,
    upper: u64,
}

impl IntegerInterval {
    pub fn new(lower: u64, upper: u64) -> Result<Self> {
        if lower >= upper {
            return Err(Error::EmptyInterval { lower, upper });
        }
        Ok(IntegerInterval { lower, upper })
    }

    pub fn lower(&self) -> u64 {
        self.lower
    }

    /// Exclusive upper endpoint.
    pub fn upper(&self) -> u64 {
        self.upper
    }

    pub fn contains(&self, n: u64) -> bool {
        self.lower <= n && n < self.upper
    }

    pub fn iter(&self) -> std::ops::Range<u64> {
        self.lower..self.upper
    }
}

/// Largest squarefree integer in `[lower, upper)`, if any; `None` only for
/// very short intervals (e.g. [48,50) = {48, 49}).
pub fn largest_squarefree_in(interval: &IntegerInterval) -> Option<u64> {
    interval.iter().rev().find(|&n| n > 0 && is_squarefree(n))
}
