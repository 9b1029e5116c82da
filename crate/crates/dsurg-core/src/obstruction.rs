//! The negative-definite bounding obstruction for surgeries on L-space knots.
//!
//! A rational homology sphere Y with |H_1| = delta that bounds a negative
//! definite 4-manifold (with delta squarefree) must satisfy
//!
//!   max 4 d(Y, t) >= 1 - 1/delta  (delta odd),   >= 1  (delta even).
//!
//! When the inequality fails at a squarefree integer slope s, downward
//! monotonicity of negative-definite bounding extends the conclusion to every
//! rational slope 0 < r <= s, and on r >= 2m+3 (where the surgery is an
//! L-space and all symplectic fillings are negative definite) it rules out
//! fillable contact structures.

use crate::dinvariant::DInvariantTable;
use crate::error::{Error, Result};
use crate::knot::{PretzelKnot, TorsionTable};
use crate::numtheory::{is_squarefree, IntegerInterval};
use crate::rational::Rational;

/// Right side of the obstruction inequality: `1 - 1/delta` for odd delta,
/// `1` for even delta.
pub fn owens_strle_threshold(delta: u64) -> Result<Rational> {
    if delta == 0 {
        return Err(Error::ZeroDelta);
    }
    if delta % 2 == 1 {
        Rational::new(delta - 1, delta)
    } else {
        Ok(Rational::integer(1))
    }
}

/// Verdict of the obstruction at a single integer slope n (so delta = n).
///
/// `conclusive` means the squarefree hypothesis holds and the inequality
/// fails, i.e. the surgered manifold bounds no negative definite 4-manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub n: u64,
    pub delta: u64,
    pub squarefree: bool,
    pub max4d: Rational,
    pub threshold: Rational,
    pub inequality_holds: bool,
    pub conclusive: bool,
}

/// Evaluate the obstruction at slope n for a knot with the given torsion
/// coefficients. The comparison is exact; no tolerance anywhere.
pub fn check_slope(torsion: &TorsionTable, n: u64) -> Result<ObstructionReport> {
    let table = DInvariantTable::compute(torsion, n)?;
    let max4d = table.max_4d();
    let threshold = owens_strle_threshold(n)?;
    let squarefree = is_squarefree(n);
    let inequality_holds = max4d >= threshold;
    Ok(ObstructionReport {
        n,
        delta: n,
        squarefree,
        max4d,
        threshold,
        inequality_holds,
        conclusive: squarefree && !inequality_holds,
    })
}

/// The two integer-arithmetic slope windows attached to P(-2,3,2m+1):
///
/// * k in 3..=k_max with k^2 - 9k < 4m - 17 (tested as (2k-9)^2 < 16m+13, no
///   floating square root): slopes n = 2m+k where the inequality provably
///   fails;
/// * k in 3..=claim1_k_max with k^2 - 9k < 18m - 4: the guard under which
///   every d-invariant with |i| < m+2 is negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaWindow {
    m: u64,
    k_max: u64,
    claim1_k_max: u64,
}

impl LemmaWindow {
    pub fn m(&self) -> u64 {
        self.m
    }

    /// k values with (2k-9)^2 < 16m+13, a contiguous run starting at 3.
    pub fn qualifying_k(&self) -> std::ops::RangeInclusive<u64> {
        3..=self.k_max
    }

    /// k values satisfying the guard k^2 - 9k < 18m - 4.
    pub fn claim1_k(&self) -> std::ops::RangeInclusive<u64> {
        3..=self.claim1_k_max
    }

    /// Integer slopes n = 2m+k covered by the qualifying k, as [2m+3, 2m+k_max+1).
    pub fn slopes(&self) -> IntegerInterval {
        IntegerInterval::new(2 * self.m + 3, 2 * self.m + self.k_max + 1)
            .expect("window contains at least k = 3")
    }

    pub fn covers_slope(&self, n: u64) -> bool {
        self.slopes().contains(n)
    }
}

/// Compute both windows for the knot, by exact integer arithmetic.
pub fn lemma_window(knot: &PretzelKnot) -> LemmaWindow {
    let m = knot.m() as i128;
    // both predicates fail permanently once k passes the parabola's vertex,
    // and always hold at k = 3,4,5 for m >= 3, so a forward scan terminates
    // at the true maximum
    let scan = |pred: &dyn Fn(i128) -> bool| -> u64 {
        let mut k: i128 = 3;
        while pred(k + 1) {
            k += 1;
        }
        k as u64
    };
    let k_max = scan(&|k| (2 * k - 9) * (2 * k - 9) < 16 * m + 13);
    let claim1_k_max = scan(&|k| k * k - 9 * k < 18 * m - 4);
    LemmaWindow {
        m: knot.m(),
        k_max,
        claim1_k_max,
    }
}

/// Outcome of scanning every integer slope in [2m+3, scan_upper) for the
/// pretzel knot P(-2,3,2m+1).
///
/// `certified_s` is the largest conclusive squarefree slope found; downward
/// monotonicity then certifies every rational slope in [2m+3, s] as carrying
/// no fillable contact structure. Uncertified scanned slopes are unresolved,
/// never "fillable".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub m: u64,
    pub lspace_min: u64,
    pub scan_upper: u64,
    pub per_slope: Vec<ObstructionReport>,
    pub certified_s: Option<u64>,
}

impl ScanResult {
    /// Certified non-fillable interval [2m+3, s], inclusive endpoints.
    pub fn certified_interval(&self) -> Option<(u64, u64)> {
        self.certified_s.map(|s| (self.lspace_min, s))
    }

    /// Scanned slopes above the certified endpoint, as [lower, upper), if any.
    pub fn unresolved_window(&self) -> Option<(u64, u64)> {
        let lower = match self.certified_s {
            Some(s) => s + 1,
            None => self.lspace_min,
        };
        (lower < self.scan_upper).then_some((lower, self.scan_upper))
    }
}

/// Default scan window upper bound: fillable structures provably exist at
/// slope 4m+6, and already at 17 for m = 3.
pub fn default_scan_upper(knot: &PretzelKnot) -> u64 {
    if knot.m() == 3 {
        17
    } else {
        4 * knot.m() + 6
    }
}

/// Run the obstruction over every integer slope in [2m+3, scan_upper) and
/// certify the widest interval the largest conclusive slope yields. Reports
/// are ordered by slope. Absence of a conclusive slope is reported, not an
/// error.
pub fn certify_nonfillable_interval(knot: &PretzelKnot, scan_upper: Option<u64>) -> ScanResult {
    let lspace_min = knot.lspace_min_slope();
    let scan_upper = scan_upper.unwrap_or_else(|| default_scan_upper(knot));
    let torsion = knot.torsion();
    let per_slope: Vec<ObstructionReport> = (lspace_min..scan_upper)
        .map(|n| check_slope(&torsion, n).expect("scanned slopes are positive"))
        .collect();
    let certified_s = per_slope.iter().filter(|r| r.conclusive).map(|r| r.n).max();
    ScanResult {
        m: knot.m(),
        lspace_min,
        scan_upper,
        per_slope,
        certified_s,
    }
}
