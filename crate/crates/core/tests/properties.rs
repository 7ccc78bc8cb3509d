//! Property tests for the algebraic layer: structural invariants of the
//! incidence matrix, soundness of verdicts and certificates, exactness of
//! solves and decompositions, and normalization laws.

use std::collections::BTreeMap;

use addsep_core::{
    decompose, evaluate, find_loop, fundamental_circuit, integerize, is_good, linked_components,
    rank_exact, solve_exact, verify_loop, CircuitOutcome, DecomposeOutcome, FunctionTable,
    IncidenceMatrix, Int, LoopCertificate, Point, PointSet, Rational, RationalMatrix,
    SolveOutcome,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Strategy: a point set with up to four axes over small alphabets.
fn point_sets() -> impl Strategy<Value = PointSet> {
    (1usize..=4)
        .prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0usize..4, n), 1..=12)
        })
        .prop_filter_map("needs at least one distinct point", |raw| {
            let mut seen = std::collections::BTreeSet::new();
            let mut points: Vec<Point> = Vec::new();
            for tuple in raw {
                if seen.insert(tuple.clone()) {
                    points.push(tuple.iter().map(|v| format!("s{v}")).collect());
                }
            }
            let n = points.first()?.len();
            PointSet::new(n, points).ok()
        })
}

/// Strategy: sparse sets over larger alphabets, which are usually good.
fn sparse_point_sets() -> impl Strategy<Value = PointSet> {
    (2usize..=4)
        .prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0usize..6, n), 1..=6)
        })
        .prop_filter_map("needs at least one distinct point", |raw| {
            let mut seen = std::collections::BTreeSet::new();
            let mut points: Vec<Point> = Vec::new();
            for tuple in raw {
                if seen.insert(tuple.clone()) {
                    points.push(tuple.iter().map(|v| format!("s{v}")).collect());
                }
            }
            let n = points.first()?.len();
            PointSet::new(n, points).ok()
        })
}

/// Strategy: small rational matrices with modest entries.
fn rational_matrices() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=12, 1usize..=12)
        .prop_flat_map(|(rows, cols)| {
            prop::collection::vec(
                prop::collection::vec((-9i64..=9, 1i64..=9), cols),
                rows,
            )
        })
        .prop_map(|rows| {
            RationalMatrix::from_rows(
                rows.into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|(n, d)| Rational::new(n.into(), d.into()))
                            .collect()
                    })
                    .collect(),
            )
            .unwrap()
        })
}

/// Textbook rational Gaussian elimination, written independently of the
/// fraction-free path it checks.
fn naive_rank(m: &RationalMatrix) -> usize {
    let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_value = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &pivot_value;
                for c in col..m.cols() {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

proptest! {
    #[test]
    fn every_row_sums_to_the_axis_count(s in point_sets()) {
        let m = IncidenceMatrix::from_set(&s);
        for j in 0..m.rows() {
            prop_assert_eq!(m.row_support(j).len(), s.axes());
            let row_sum: u64 = (0..m.cols()).map(|c| u64::from(m.entry(j, c))).sum();
            prop_assert_eq!(row_sum, s.axes() as u64);
        }
    }

    #[test]
    fn kernel_witnesses_annihilate_every_matrix(s in point_sets()) {
        let m = IncidenceMatrix::from_set(&s);
        let witnesses = m.kernel_witnesses();
        prop_assert_eq!(witnesses.len(), s.axes() - 1);
        for v in witnesses {
            prop_assert!(m.apply(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn every_column_is_hit(s in point_sets()) {
        let m = IncidenceMatrix::from_set(&s);
        for c in 0..m.cols() {
            prop_assert!((0..m.rows()).any(|r| m.entry(r, c) == 1));
        }
    }

    #[test]
    fn rank_matches_naive_elimination(m in rational_matrices()) {
        prop_assert_eq!(rank_exact(&m), naive_rank(&m));
    }

    #[test]
    fn bad_sets_certify_themselves(s in point_sets()) {
        let verdict = is_good(&s);
        if verdict.good {
            prop_assert!(verdict.certificate.is_none());
            prop_assert!(verdict.cardinality <= verdict.bound);
            prop_assert!(find_loop(&s).is_none());
        } else {
            let cert = verdict.certificate.expect("bad sets carry a certificate");
            prop_assert!(verify_loop(&cert));
            // Coefficients are primitive and nonzero.
            let gcd = cert
                .coefficients()
                .iter()
                .fold(Int::zero(), |acc, v| acc.gcd(v));
            prop_assert_eq!(gcd, Int::one());
            prop_assert!(cert.coefficients().iter().all(|c| !c.is_zero()));
            // Certificate points really come from the set, in point order.
            let mut last = None;
            for p in cert.points() {
                let idx = s.position(p).expect("certificate point belongs to the set");
                prop_assert!(last.is_none_or(|l| l < idx));
                last = Some(idx);
            }
        }
    }

    #[test]
    fn solve_is_exact_or_certifiably_infeasible(
        m in rational_matrices(),
        z_raw in prop::collection::vec((-9i64..=9, 1i64..=9), 12),
    ) {
        let z: Vec<Rational> = z_raw[..m.rows()]
            .iter()
            .map(|&(n, d)| Rational::new(n.into(), d.into()))
            .collect();
        match solve_exact(&m, &z).unwrap() {
            SolveOutcome::Solution(alpha) => {
                for r in 0..m.rows() {
                    let lhs = (0..m.cols())
                        .fold(Rational::zero(), |acc, c| acc + m.get(r, c) * &alpha[c]);
                    prop_assert_eq!(lhs, z[r].clone());
                }
            }
            SolveOutcome::Inconsistent(c) => {
                for col in 0..m.cols() {
                    let sum = (0..m.rows())
                        .fold(Rational::zero(), |acc, r| acc + &c[r] * m.get(r, col));
                    prop_assert!(sum.is_zero());
                }
                let residual = (0..m.rows())
                    .fold(Rational::zero(), |acc, r| acc + &c[r] * &z[r]);
                prop_assert!(!residual.is_zero());
            }
        }
    }

    #[test]
    fn circuits_are_minimal_dependencies(m in rational_matrices()) {
        match fundamental_circuit(&m) {
            CircuitOutcome::IndependentRows => {
                prop_assert_eq!(rank_exact(&m), m.rows());
            }
            CircuitOutcome::Circuit(w) => {
                // Weighted sum of supported rows vanishes.
                for col in 0..m.cols() {
                    let sum = w
                        .support()
                        .iter()
                        .zip(w.coefficients())
                        .fold(Rational::zero(), |acc, (&r, coeff)| acc + coeff * m.get(r, col));
                    prop_assert!(sum.is_zero());
                }
                // Deleting any single supported row leaves an independent set.
                for drop in 0..w.support().len() {
                    let kept: Vec<usize> = w
                        .support()
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &r)| r)
                        .collect();
                    if !kept.is_empty() {
                        let sub = m.select_rows(&kept);
                        prop_assert_eq!(rank_exact(&sub), kept.len());
                    }
                }
            }
        }
    }

    #[test]
    fn integerize_is_scale_invariant_and_primitive(
        raw in prop::collection::vec((-9i64..=9, 1i64..=9), 1..=8),
        scale_n in 1i64..=7,
        scale_d in 1i64..=7,
        negate in any::<bool>(),
    ) {
        let v: Vec<Rational> = raw
            .iter()
            .map(|&(n, d)| Rational::new(n.into(), d.into()))
            .collect();
        prop_assume!(v.iter().any(|x| !x.is_zero()));
        let ints = integerize(&v).unwrap();
        let gcd = ints
            .iter()
            .filter(|x| !x.is_zero())
            .fold(Int::zero(), |acc, x| acc.gcd(x));
        prop_assert_eq!(gcd, Int::one());
        prop_assert!(ints.iter().find(|x| !x.is_zero()).unwrap().is_positive());
        for (a, b) in v.iter().zip(&ints) {
            prop_assert_eq!(a.is_zero(), b.is_zero());
        }

        let mut factor = Rational::new(scale_n.into(), scale_d.into());
        if negate {
            factor = -factor;
        }
        let scaled: Vec<Rational> = v.iter().map(|x| x * &factor).collect();
        prop_assert_eq!(integerize(&scaled).unwrap(), ints);
    }

    #[test]
    fn decompositions_reproduce_functions_exactly(
        s in point_sets(),
        values in prop::collection::vec((-20i64..=20, 1i64..=6), 12),
    ) {
        let f = {
            let mut next = values.iter().cycle();
            FunctionTable::from_fn(&s, |_| {
                let &(n, d) = next.next().unwrap();
                Rational::new(n.into(), d.into())
            })
        };
        match decompose(&s, &f).unwrap() {
            DecomposeOutcome::Decomposed(d) => {
                for p in s.points() {
                    prop_assert_eq!(&evaluate(&d, p).unwrap(), f.get(p).unwrap());
                }
                // Tables cover exactly the alphabets.
                for (axis, table) in d.tables().iter().enumerate() {
                    prop_assert_eq!(table.len(), s.alphabet_size(axis));
                }
            }
            DecomposeOutcome::Obstructed(cert, functional) => {
                prop_assert!(verify_loop(&cert));
                prop_assert!(!functional.is_zero());
                prop_assert_eq!(
                    addsep_core::loop_functional(&cert, &f).unwrap(),
                    functional
                );
            }
        }
    }

    #[test]
    fn gauge_shifts_leave_evaluation_unchanged(
        s in point_sets(),
        shifts in prop::collection::vec(-9i64..=9, 4),
    ) {
        let f = FunctionTable::from_fn(&s, |p| {
            rat(p.iter().map(|sym| sym.len() as i64).sum())
        });
        let DecomposeOutcome::Decomposed(d) = decompose(&s, &f).unwrap() else {
            return Ok(());
        };
        let n = s.axes();
        // Constants with zero total: last one balances the rest.
        let mut constants: Vec<Rational> = shifts[..n - 1].iter().map(|&c| rat(c)).collect();
        let total = constants.iter().fold(Rational::zero(), |acc, c| acc + c);
        constants.push(-total);
        let shifted: Vec<BTreeMap<String, Rational>> = d
            .tables()
            .iter()
            .zip(&constants)
            .map(|(table, c)| {
                table
                    .iter()
                    .map(|(sym, v)| (sym.clone(), v + c))
                    .collect()
            })
            .collect();
        let shifted = addsep_core::Decomposition::new(shifted).unwrap();
        for p in s.points() {
            prop_assert_eq!(evaluate(&shifted, p).unwrap(), evaluate(&d, p).unwrap());
        }
    }

    #[test]
    fn no_certificate_passes_on_subsets_of_good_sets(
        s in sparse_point_sets(),
        selector in prop::collection::vec(any::<bool>(), 12),
        coeffs in prop::collection::vec((1i64..=6, any::<bool>()), 12),
    ) {
        prop_assume!(is_good(&s).good);
        let indices: Vec<usize> = (0..s.len()).filter(|&j| selector[j]).collect();
        prop_assume!(!indices.is_empty());
        let points: Vec<Point> = indices.iter().map(|&j| s.point(j).clone()).collect();
        let coefficients: Vec<Int> = coeffs[..points.len()]
            .iter()
            .map(|&(v, neg)| Int::from(if neg { -v } else { v }))
            .collect();
        let cert = LoopCertificate::new(points, coefficients).unwrap();
        prop_assert!(!verify_loop(&cert));
    }

    #[test]
    fn partitions_cover_without_overlap(s in point_sets()) {
        prop_assume!(s.axes() == 2 || s.axes() == 3);
        let partition = linked_components(&s).unwrap();
        let mut seen = vec![false; s.len()];
        for component in partition.components() {
            for &j in component.point_indices() {
                prop_assert!(!seen[j]);
                seen[j] = true;
            }
        }
        prop_assert!(seen.iter().all(|&b| b));
    }
}

#[test]
fn solve_handles_the_zero_matrix() {
    let m = RationalMatrix::zero(3, 2);
    let z = vec![rat(0), rat(0), rat(0)];
    match solve_exact(&m, &z).unwrap() {
        SolveOutcome::Solution(alpha) => assert!(alpha.iter().all(Zero::is_zero)),
        SolveOutcome::Inconsistent(_) => panic!("homogeneous zero system is consistent"),
    }
    let z = vec![rat(0), rat(1), rat(0)];
    match solve_exact(&m, &z).unwrap() {
        SolveOutcome::Inconsistent(c) => {
            assert_eq!(c, vec![rat(0), rat(1), rat(0)]);
        }
        SolveOutcome::Solution(_) => panic!("inconsistent zero system must be flagged"),
    }
}

#[test]
fn rank_of_zero_matrix_is_zero() {
    assert_eq!(rank_exact(&RationalMatrix::zero(4, 4)), 0);
}
