//! Symmetrized Alexander polynomials, their torsion coefficients, and the
//! pretzel knot family P(-2,3,2m+1).

use crate::error::{Error, Result};

/// Symmetrized Alexander polynomial of a knot, stored as the half-coefficient
/// list `a_0..a_g`; `a_j` multiplies both `T^j` and `T^{-j}`.
///
/// Construction enforces `a_g != 0` and the normalization `Delta(1) = 1`,
/// i.e. `a_0 + 2*sum(a_j, j >= 1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPolynomial {
    coeffs: Vec<i64>,
}

impl AlexanderPolynomial {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        let genus = (coeffs.len() - 1) as u64;
        if *coeffs.last().unwrap() == 0 {
            return Err(Error::ZeroLeadingCoefficient { genus });
        }
        let at_one = coeffs[0] as i128 + 2 * coeffs[1..].iter().map(|&a| a as i128).sum::<i128>();
        if at_one != 1 {
            return Err(Error::NotNormalized { value: at_one });
        }
        Ok(AlexanderPolynomial { coeffs })
    }

    /// The unknot, `Delta = 1`.
    pub fn unknot() -> Self {
        AlexanderPolynomial { coeffs: vec![1] }
    }

    pub fn genus(&self) -> u64 {
        (self.coeffs.len() - 1) as u64
    }

    /// Half-coefficients `a_0..a_g`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `T^j`; symmetric (`a_{-j} = a_j`) and 0 beyond the genus.
    pub fn coeff(&self, j: i64) -> i64 {
        match usize::try_from(j.unsigned_abs()) {
            Ok(idx) if idx < self.coeffs.len() => self.coeffs[idx],
            _ => 0,
        }
    }

    /// Opt-in validator for the L-space knot shape: every coefficient is +-1,
    /// signs strictly alternate from `a_g` down to `a_0`, and `a_g = 1`.
    pub fn is_lspace_alternating(&self) -> bool {
        if *self.coeffs.last().unwrap() != 1 {
            return false;
        }
        self.coeffs.iter().all(|&a| a == 1 || a == -1)
            && self.coeffs.windows(2).all(|w| w[0] == -w[1])
    }

    /// Torsion coefficients `t_i = sum(j * a_{i+j}, j >= 1)` for `0 <= i <= g`.
    ///
    /// This is the defining sum, evaluated directly; it is the oracle against
    /// which the pretzel closed form is checked.
    pub fn torsion(&self) -> Result<TorsionTable> {
        let g = self.coeffs.len();
        let mut values = Vec::with_capacity(g);
        for i in 0..g {
            let mut t: i128 = 0;
            for (j, &a) in self.coeffs[i..].iter().enumerate().skip(1) {
                t += j as i128 * a as i128;
            }
            let t = i64::try_from(t).map_err(|_| Error::Overflow)?;
            if t < 0 {
                return Err(Error::NegativeTorsion {
                    index: i as u64,
                    value: t,
                });
            }
            values.push(t);
        }
        TorsionTable::new(values)
    }
}

/// Torsion coefficients `t_0..t_g` of a knot; `t_i = 0` for `i >= g` by
/// convention and lookups are symmetric in the sign of the index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionTable {
    values: Vec<i64>,
}

impl TorsionTable {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyTorsion);
        }
        for (i, &t) in values.iter().enumerate() {
            if t < 0 {
                return Err(Error::NegativeTorsion {
                    index: i as u64,
                    value: t,
                });
            }
        }
        let last = values.len() - 1;
        if values[last] != 0 {
            return Err(Error::NonzeroTrailingTorsion {
                index: last as u64,
                value: values[last],
            });
        }
        Ok(TorsionTable { values })
    }

    /// All-zero table; `d_surgery` over it reduces to the unknot values.
    pub fn zero() -> Self {
        TorsionTable { values: vec![0] }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn genus(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// `t_i` with `t_{-i} = t_{|i|}` and 0 beyond the stored genus.
    pub fn get(&self, i: i64) -> i64 {
        match usize::try_from(i.unsigned_abs()) {
            Ok(idx) if idx < self.values.len() => self.values[idx],
            _ => 0,
        }
    }
}

/// The pretzel knot P(-2,3,2m+1), m >= 3. Genus and slice genus are m+2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PretzelKnot {
    m: u64,
}

impl PretzelKnot {
    pub fn new(m: u64) -> Result<Self> {
        if m < 3 {
            return Err(Error::PretzelParamOutOfRange { m });
        }
        Ok(PretzelKnot { m })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn genus(&self) -> u64 {
        self.m + 2
    }

    /// Smallest slope at which every rational surgery is an L-space,
    /// `2g_s - 1 = 2m+3`.
    pub fn lspace_min_slope(&self) -> u64 {
        2 * self.m + 3
    }

    /// Symmetrized Alexander polynomial, `a_i = (-1)^(i+m)` for `0 <= i <= m+2`.
    pub fn alexander(&self) -> AlexanderPolynomial {
        let coeffs = (0..=self.m + 2)
            .map(|i| {
                if (i + self.m).is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            })
            .collect();
        AlexanderPolynomial::new(coeffs).expect("pretzel polynomial is normalized")
    }

    /// Torsion coefficients via the defining sum.
    pub fn torsion(&self) -> TorsionTable {
        self.alexander()
            .torsion()
            .expect("pretzel torsion coefficients are nonnegative")
    }

    /// Closed form for `t_i`, split on the parity of m:
    ///
    /// m odd:  t_i = (m+2-i)/2 for i odd, (m+3-i)/2 for i even, 0 for i >= m+2;
    /// m even: t_i = (m+3-i)/2 for i odd, (m+2-i)/2 for i even, 0 for i >= m+2.
    pub fn torsion_closed_form(&self, i: u64) -> i64 {
        let m = self.m;
        if i >= m + 2 {
            return 0;
        }
        let t = if (m + i).is_multiple_of(2) {
            // i and m share parity: m+2-i is even
            (m + 2 - i) / 2
        } else {
            (m + 3 - i) / 2
        };
        t as i64
    }
}

/// Alternating sum `s*1 + s*(-1)*2 + ... +- k` with leading sign `s = +-1`.
///
/// Closed forms: `1-2+3-...+k = (k+1)/2` for k odd, `-1+2-3+...+k = k/2` for
/// k even; other sign choices are the negatives. Test utility backing the
/// torsion closed form.
pub fn alternating_sum(k: u64, leading_sign: i64) -> i64 {
    assert!(k > 1, "alternating_sum requires k > 1");
    assert!(
        leading_sign == 1 || leading_sign == -1,
        "leading sign must be +-1"
    );
    let magnitude = if k.is_multiple_of(2) {
        -((k / 2) as i64)
    } else {
        (k.div_ceil(2)) as i64
    };
    leading_sign * magnitude
}

#[cfg(test)]
mod tests {
    use super::*;

    // literal sum, for checking the closed form of alternating_sum
    fn alternating_sum_by_loop(k: u64, leading_sign: i64) -> i64 {
        (1..=k as i64)
            .map(|j| leading_sign * if j % 2 == 1 { j } else { -j })
            .sum()
    }

    #[test]
    fn pretzel_m3_polynomial() {
        // Delta = T^5 - T^4 + T^3 - T^2 + T - 1 + ... (symmetric)
        let p = PretzelKnot::new(3).unwrap().alexander();
        assert_eq!(p.coeffs(), &[-1, 1, -1, 1, -1, 1]);
        assert_eq!(p.genus(), 5);
        assert!(p.is_lspace_alternating());
        assert_eq!(p.coeff(-3), 1);
        assert_eq!(p.coeff(6), 0);
    }

    #[test]
    fn pretzel_m4_polynomial() {
        let p = PretzelKnot::new(4).unwrap().alexander();
        assert_eq!(p.coeff(0), 1);
        assert_eq!(p.coeff(6), 1);
        assert_eq!(p.coeffs(), &[1, -1, 1, -1, 1, -1, 1]);
        assert!(p.is_lspace_alternating());
    }

    #[test]
    fn pretzel_rejects_small_m() {
        assert_eq!(
            PretzelKnot::new(2).unwrap_err(),
            Error::PretzelParamOutOfRange { m: 2 }
        );
        assert_eq!(
            PretzelKnot::new(0).unwrap_err(),
            Error::PretzelParamOutOfRange { m: 0 }
        );
        assert!(PretzelKnot::new(3).is_ok());
    }

    #[test]
    fn polynomial_validation() {
        assert_eq!(
            AlexanderPolynomial::new(vec![]).unwrap_err(),
            Error::EmptyPolynomial
        );
        assert_eq!(
            AlexanderPolynomial::new(vec![1, 0]).unwrap_err(),
            Error::ZeroLeadingCoefficient { genus: 1 }
        );
        assert_eq!(
            AlexanderPolynomial::new(vec![1, 1]).unwrap_err(),
            Error::NotNormalized { value: 3 }
        );
        assert!(AlexanderPolynomial::new(vec![1]).is_ok());
        assert!(AlexanderPolynomial::new(vec![-1, 1]).is_ok());
    }

    #[test]
    fn torsion_m3_matches_published_values() {
        let t = PretzelKnot::new(3).unwrap().torsion();
        assert_eq!(t.values(), &[3, 2, 2, 1, 1, 0]);
        assert_eq!(t.get(-2), 2);
        assert_eq!(t.get(7), 0);
        assert_eq!(t.genus(), 5);
    }

    #[test]
    fn torsion_m4() {
        // frozen from the defining sum, evaluated by hand:
        // a = [1,-1,1,-1,1,-1,1], t_0 = -1+2-3+4-5+6 = 3, t_1 = 1-2+3-4+5 = 3, ...
        let t = PretzelKnot::new(4).unwrap().torsion();
        assert_eq!(t.values(), &[3, 3, 2, 2, 1, 1, 0]);
    }

    #[test]
    fn torsion_unknot() {
        let t = AlexanderPolynomial::unknot().torsion().unwrap();
        assert_eq!(t.values(), &[0]);
        assert_eq!(t.get(0), 0);
        assert_eq!(t.get(5), 0);
    }

    #[test]
    fn torsion_rejects_negative() {
        // valid normalization but torsion t_0 = -1: not an L-space knot shape
        let p = AlexanderPolynomial::new(vec![3, -1]).unwrap();
        assert_eq!(
            p.torsion().unwrap_err(),
            Error::NegativeTorsion {
                index: 0,
                value: -1
            }
        );
    }

    #[test]
    fn torsion_table_validation() {
        assert_eq!(TorsionTable::new(vec![]).unwrap_err(), Error::EmptyTorsion);
        assert_eq!(
            TorsionTable::new(vec![1, -2, 0]).unwrap_err(),
            Error::NegativeTorsion {
                index: 1,
                value: -2
            }
        );
        assert_eq!(
            TorsionTable::new(vec![3, 2, 1]).unwrap_err(),
            Error::NonzeroTrailingTorsion { index: 2, value: 1 }
        );
        assert!(TorsionTable::new(vec![3, 2, 2, 1, 1, 0]).is_ok());
        assert!(TorsionTable::new(vec![0]).is_ok());
    }

    #[test]
    fn closed_form_goldens() {
        let k3 = PretzelKnot::new(3).unwrap();
        assert_eq!(k3.torsion_closed_form(0), 3);
        assert_eq!(k3.torsion_closed_form(7), 0);
        // cross-checked against the defining sum for m=5
        let k5 = PretzelKnot::new(5).unwrap();
        assert_eq!(k5.torsion_closed_form(2), 3);
        assert_eq!(k5.torsion_closed_form(2), k5.torsion().get(2));
    }

    #[test]
    fn closed_form_agrees_with_defining_sum() {
        for m in 3..=60 {
            let knot = PretzelKnot::new(m).unwrap();
            let brute = knot.torsion();
            for i in 0..=m + 2 {
                assert_eq!(
                    knot.torsion_closed_form(i),
                    brute.get(i as i64),
                    "m={m} i={i}"
                );
            }
        }
    }

    #[test]
    fn alternating_sum_known_values() {
        assert_eq!(alternating_sum(3, 1), 2); // 1-2+3 = (3+1)/2
        assert_eq!(alternating_sum(2, -1), 1); // -1+2 = 2/2
        assert_eq!(alternating_sum(5, 1), 3);
    }

    #[test]
    fn alternating_sum_matches_loop() {
        for k in 2..=501 {
            for s in [1, -1] {
                assert_eq!(
                    alternating_sum(k, s),
                    alternating_sum_by_loop(k, s),
                    "k={k} s={s}"
                );
            }
        }
    }

    #[test]
    #[should_panic(expected = "k > 1")]
    fn alternating_sum_rejects_small_k() {
        alternating_sum(1, 1);
    }

    #[test]
    fn torsion_is_alternating_sum_of_tail() {
        // t_i = sum(j * a_{i+j}) telescopes to an alternating sum of length
        // m+2-i whose leading sign is +1 exactly when i+m is odd
        for m in 3..=40u64 {
            let knot = PretzelKnot::new(m).unwrap();
            let t = knot.torsion();
            for i in 0..=m {
                let len = m + 2 - i;
                let sign = if (i + m) % 2 == 1 { 1 } else { -1 };
                assert_eq!(t.get(i as i64), alternating_sum(len, sign), "m={m} i={i}");
            }
        }
    }
}
