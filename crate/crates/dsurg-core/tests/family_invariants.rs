//! Family-wide invariants of the pretzel knots P(-2,3,2m+1) and their
//! surgery d-invariants, checked exhaustively over parameter ranges.

use dsurg_core::{
    certify_nonfillable_interval, check_slope, largest_squarefree_in, lemma_window,
    DInvariantTable, PretzelKnot, Rational, SpinCIndex,
};

fn pretzel(m: u64) -> PretzelKnot {
    PretzelKnot::new(m).unwrap()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

#[test]
fn polynomial_normalization_and_alternation_up_to_200() {
    for m in 3..=200 {
        let poly = pretzel(m).alexander();
        let at_one: i64 = poly.coeffs()[0] + 2 * poly.coeffs()[1..].iter().sum::<i64>();
        assert_eq!(at_one, 1, "Delta(1) != 1 at m={m}");
        assert!(poly.is_lspace_alternating(), "alternation fails at m={m}");
        assert_eq!(poly.genus(), m + 2);
    }
}

#[test]
fn torsion_steps_and_genus_detection_up_to_200() {
    for m in 3..=200 {
        let t = pretzel(m).torsion();
        let v = t.values();
        for w in v.windows(2) {
            let step = w[0] - w[1];
            assert!(step == 0 || step == 1, "m={m}: step {step} not in {{0,1}}");
        }
        let g = v.len() - 1;
        assert_eq!(v[g], 0, "t_g != 0 at m={m}");
        assert!(v[g - 1] >= 1, "t_(g-1) < 1 at m={m}");
    }
}

#[test]
fn closed_form_equals_defining_sum_up_to_200() {
    for m in 3..=200 {
        let knot = pretzel(m);
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
fn d_table_symmetric_in_index_sign_up_to_60() {
    let torsion = pretzel(3).torsion();
    for n in 1..=60 {
        let table = DInvariantTable::compute(&torsion, n).unwrap();
        for i in 0..=(n / 2) as i64 {
            assert_eq!(table.get(i).unwrap(), table.get(-i).unwrap(), "n={n} i={i}");
        }
    }
}

// negativity below the genus index, under the guard k^2 - 9k < 18m - 4
#[test]
fn d_invariants_negative_below_genus_index_up_to_30() {
    for m in 3..=30u64 {
        let knot = pretzel(m);
        let torsion = knot.torsion();
        for k in lemma_window(&knot).claim1_k() {
            let n = 2 * m + k;
            let table = DInvariantTable::compute(&torsion, n).unwrap();
            for (i, d) in table.entries().iter().enumerate() {
                if (i as u64) < m + 2 {
                    assert!(d.is_negative(), "m={m} k={k} i={i}: d = {d}");
                }
            }
        }
    }
}

// beyond the genus index the torsion vanishes, the entries strictly decrease,
// and (for k >= 4, where the index m+2 exists) the maximum sits at i = m+2
// with value ((k-4)^2 - n) / (4n)
#[test]
fn d_invariants_decrease_beyond_genus_index_up_to_30() {
    for m in 3..=30u64 {
        let knot = pretzel(m);
        let torsion = knot.torsion();
        for k in 3..=2 * m + 5 {
            let n = 2 * m + k;
            let table = DInvariantTable::compute(&torsion, n).unwrap();
            let tail = &table.entries()[usize::min((m + 2) as usize, table.entries().len())..];
            for w in tail.windows(2) {
                assert!(w[0] > w[1], "m={m} k={k}: tail not strictly decreasing");
            }
            if m + 2 <= n / 2 {
                let expected =
                    Rational::new((k as i128 - 4) * (k as i128 - 4) - n as i128, 4 * n as i128)
                        .unwrap();
                assert_eq!(table.get((m + 2) as i64).unwrap(), &expected, "m={m} k={k}");
            }
        }
    }
}

#[test]
fn maximizing_index_is_genus_index_up_to_30() {
    for m in 3..=30u64 {
        let knot = pretzel(m);
        let torsion = knot.torsion();
        for k in lemma_window(&knot).claim1_k() {
            if k < 4 {
                // at k = 3 the index m+2 exceeds floor(n/2); no claim
                continue;
            }
            let n = 2 * m + k;
            let table = DInvariantTable::compute(&torsion, n).unwrap();
            assert_eq!(table.argmax(), m + 2, "m={m} k={k}");
        }
    }
}

#[test]
fn lemma_window_slopes_fail_inequality_up_to_30() {
    for m in 3..=30u64 {
        let knot = pretzel(m);
        let torsion = knot.torsion();
        for n in lemma_window(&knot).slopes().iter() {
            let report = check_slope(&torsion, n).unwrap();
            assert!(!report.inequality_holds, "m={m} n={n}");
        }
    }
}

#[test]
fn certified_intervals_cover_lemma_window_endpoint_up_to_30() {
    let m3 = certify_nonfillable_interval(&pretzel(3), None);
    assert_eq!(m3.certified_interval(), Some((9, 15)));

    for m in 4..=30u64 {
        let knot = pretzel(m);
        let scan = certify_nonfillable_interval(&knot, None);
        let (lo, hi) = scan.certified_interval().expect("certifies something");
        assert_eq!(
            lo,
            2 * m + 3,
            "m={m}: interval must start at the L-space bound"
        );
        let lemma_best = largest_squarefree_in(&lemma_window(&knot).slopes())
            .expect("lemma window contains a squarefree slope");
        assert!(hi >= lemma_best, "m={m}: {hi} < {lemma_best}");
        // every conclusive slope is inside the certified interval
        for report in &scan.per_slope {
            if report.conclusive {
                assert!(lo <= report.n && report.n <= hi, "m={m} n={}", report.n);
            }
        }
        assert_eq!(
            scan.per_slope
                .iter()
                .filter(|r| r.conclusive)
                .map(|r| r.n)
                .max(),
            Some(hi)
        );
    }
}

#[test]
fn threshold_comparisons_are_exact() {
    // 2/3 vs 14/15 decides the published example; a float would also get this
    // right, but the neighboring comparisons are razor thin:
    // at m=4, n=13 the scan compares -12/13 against 12/13,
    // and at n=18, 4d = 1 against threshold 1 (holds, not conclusive)
    let torsion = pretzel(4).torsion();
    let r13 = check_slope(&torsion, 13).unwrap();
    assert_eq!(r13.max4d, rat(-12, 13));
    assert!(!r13.inequality_holds);
    let r18 = check_slope(&torsion, 18).unwrap();
    assert_eq!(r18.max4d, Rational::integer(1));
    assert!(r18.inequality_holds);
}

#[test]
fn d_values_round_trip_through_strings() {
    let torsion = pretzel(5).torsion();
    for n in [1u64, 2, 13, 26, 60] {
        let table = DInvariantTable::compute(&torsion, n).unwrap();
        for d in table.entries() {
            let back: Rational = d.to_string().parse().unwrap();
            assert_eq!(&back, d);
        }
    }
}

#[test]
fn types_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Rational>();
    assert_send_sync::<dsurg_core::AlexanderPolynomial>();
    assert_send_sync::<dsurg_core::TorsionTable>();
    assert_send_sync::<PretzelKnot>();
    assert_send_sync::<DInvariantTable>();
    assert_send_sync::<dsurg_core::ObstructionReport>();
    assert_send_sync::<dsurg_core::ScanResult>();
}

#[test]
fn negative_surgery_is_knot_independent() {
    for n in 1..=40u64 {
        for s in SpinCIndex::representatives(n).unwrap() {
            assert_eq!(
                dsurg_core::d_negative_surgery(&s),
                -dsurg_core::d_unknot(&s)
            );
        }
    }
}
