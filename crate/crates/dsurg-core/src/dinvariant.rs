//! Heegaard Floer correction terms (d-invariants) of integer surgeries on
//! L-space knots, computed exactly from torsion coefficients:
//!
//!   d(U_n, i)  = (n - 2|i|)^2 / (4n) - 1/4
//!   d(L_n, i)  = d(U_n, i) - 2 t_i(L)
//!   d(L_-n, i) = -d(U_n, i)
//!
//! for |i| <= n/2, where U_n is n-surgery on the unknot.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::knot::TorsionTable;
use crate::rational::Rational;

/// A spin^c structure on the n-surgery, indexed by an integer i with
/// |i| <= n/2. Canonical representatives are i = 0..floor(n/2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinCIndex {
    n: u64,
    i: i64,
}

impl SpinCIndex {
    pub fn new(n: u64, i: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSlope);
        }
        if i.unsigned_abs() > n / 2 {
            return Err(Error::SpinCIndexOutOfRange { n, i });
        }
        Ok(SpinCIndex { n, i })
    }

    pub fn slope(&self) -> u64 {
        self.n
    }

    pub fn index(&self) -> i64 {
        self.i
    }

    /// |i|, the canonical representative of {i, -i}.
    pub fn canonical(&self) -> u64 {
        self.i.unsigned_abs()
    }

    /// Canonical representatives i = 0..floor(n/2) for slope n.
    pub fn representatives(n: u64) -> Result<impl Iterator<Item = SpinCIndex>> {
        if n == 0 {
            return Err(Error::ZeroSlope);
        }
        Ok((0..=n / 2).map(move |i| SpinCIndex { n, i: i as i64 }))
    }
}

/// d-invariant of n-surgery on the unknot, `(n - 2|i|)^2/(4n) - 1/4`.
pub fn d_unknot(s: &SpinCIndex) -> Rational {
    let n = BigInt::from(s.slope());
    let a = &n - BigInt::from(2 * s.canonical());
    Rational::new(&a * &a - &n, 4u8 * n).expect("slope is positive")
}

/// d-invariant of +n-surgery on an L-space knot with the given torsion table,
/// `d(U_n, i) - 2 t_i`. Torsion lookup beyond the stored genus is 0.
pub fn d_surgery(torsion: &TorsionTable, s: &SpinCIndex) -> Rational {
    let correction = BigInt::from(2 * torsion.get(s.index()) as i128);
    d_unknot(s) - Rational::integer(correction)
}

/// d-invariant of -n-surgery on an L-space knot, `-d(U_n, i)`; independent of
/// the knot.
pub fn d_negative_surgery(s: &SpinCIndex) -> Rational {
    -d_unknot(s)
}

/// All d-invariants of the +n-surgery, one entry per canonical spin^c
/// representative i = 0..floor(n/2). Lookup extends symmetrically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DInvariantTable {
    n: u64,
    entries: Vec<Rational>,
}

impl DInvariantTable {
    pub fn compute(torsion: &TorsionTable, n: u64) -> Result<Self> {
        let entries = SpinCIndex::representatives(n)?
            .map(|s| d_surgery(torsion, &s))
            .collect();
        Ok(DInvariantTable { n, entries })
    }

    pub fn slope(&self) -> u64 {
        self.n
    }

    /// Entries indexed by the canonical representative, i = 0..floor(n/2).
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Symmetric lookup, `d(-i) = d(i)`.
    pub fn get(&self, i: i64) -> Result<&Rational> {
        let idx = usize::try_from(i.unsigned_abs())
            .map_err(|_| Error::SpinCIndexOutOfRange { n: self.n, i })?;
        self.entries
            .get(idx)
            .ok_or(Error::SpinCIndexOutOfRange { n: self.n, i })
    }

    pub fn max(&self) -> &Rational {
        self.entries.iter().max().expect("table is nonempty")
    }

    /// Smallest canonical index attaining the maximum.
    pub fn argmax(&self) -> u64 {
        let max = self.max();
        self.entries
            .iter()
            .position(|d| d == max)
            .expect("table is nonempty") as u64
    }

    /// `max 4 d(Y, t)` over all spin^c structures; the left side of the
    /// Owens-Strle inequality. Symmetric entries contribute identically, so
    /// canonical representatives suffice.
    pub fn max_4d(&self) -> Rational {
        Rational::integer(4) * self.max().clone()
    }
}
