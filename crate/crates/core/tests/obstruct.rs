use num_bigint::BigInt;
use num_traits::Pow;
use proptest::prelude::*;
use torus_bounds::bounds::f0;
use torus_bounds::exactnum::Verdict;
use torus_bounds::obstruct::{
    check_euler, check_euler_f0, check_stable_hopf, check_theorem_b, maximal_symmetry_rank,
    min_rank_theorem_a, run_query, FactorData, ObstructionQuery, Quantity, Structure,
};

const CEILING: u32 = 4096;

fn euler(n: u64, r: u64, chi: i64) -> ObstructionQuery {
    ObstructionQuery {
        n,
        r,
        simply_connected: true,
        structure: Structure::Euler {
            chi: BigInt::from(chi),
        },
    }
}

fn verdicts(q: &ObstructionQuery) -> (Verdict, Verdict) {
    let Structure::Euler { chi } = &q.structure else {
        unreachable!()
    };
    let e = check_euler_f0(q, chi).unwrap();
    (e.applicable, e.obstructed)
}

#[test]
fn euler_examples() {
    assert_eq!(
        verdicts(&euler(54, 14, 6000)),
        (Verdict::CertTrue, Verdict::CertTrue)
    );
    assert_eq!(verdicts(&euler(54, 14, 5000)).1, Verdict::CertFalse);
    assert_eq!(verdicts(&euler(54, 13, 6000)).0, Verdict::CertFalse);
    assert_eq!(verdicts(&euler(54, 13, 6000)).1, Verdict::CertFalse);
}

#[test]
fn non_simply_connected_is_never_applicable() {
    let q = ObstructionQuery {
        simply_connected: false,
        ..euler(54, 20, 1_000_000)
    };
    for e in check_euler(&q, &BigInt::from(1_000_000), CEILING).unwrap() {
        assert_eq!(e.applicable, Verdict::CertFalse);
        assert_eq!(e.obstructed, Verdict::CertFalse);
    }
}

#[test]
fn min_rank_is_the_exact_sandwich() {
    let mut prev = 0;
    for n in (2..=10_000u64).step_by(2) {
        let r = min_rank_theorem_a(n);
        let four = |k: u64| BigInt::from(4).pow(k as u32);
        let three = |k: u64| BigInt::from(3).pow(k as u32);
        assert!(four(r) >= BigInt::from(n) * three(r), "n = {n}");
        assert!(
            r == 0 || four(r - 1) < BigInt::from(n) * three(r - 1),
            "n = {n}"
        );
        assert!(r >= prev);
        prev = r;
    }
    assert_eq!(min_rank_theorem_a(54), 14);
    assert_eq!(min_rank_theorem_a(2), 3);
    assert_eq!(min_rank_theorem_a(1), 0);
}

#[test]
fn theorem_b_entry_examples() {
    let e = check_theorem_b(64, 21, 4, CEILING).unwrap();
    assert_eq!(e.applicable, Verdict::CertTrue);
    assert!(e.values.contains(&(
        "components_bound".into(),
        Quantity::Integer(BigInt::from(49))
    )));
    assert_eq!(
        check_theorem_b(64, 20, 4, CEILING).unwrap().applicable,
        Verdict::CertFalse
    );
    let e = check_theorem_b(100, 40, 3, CEILING).unwrap();
    assert_eq!(e.applicable, Verdict::CertTrue);
    assert!(e.values.contains(&(
        "components_bound".into(),
        Quantity::Integer(BigInt::from(51))
    )));
    assert!(e
        .values
        .iter()
        .any(|(k, v)| k == "betti_sum_bound" && matches!(v, Quantity::Enclosure(iv) if iv.as_point() == Some(&BigInt::from(51).into()))));
}

#[test]
fn sphere_power_example_is_obstructed_by_the_direct_test() {
    let q = ObstructionQuery {
        n: 248,
        r: 20,
        simply_connected: true,
        structure: Structure::ProductPower {
            factor: FactorData::Euler(BigInt::from(2)),
            k: 124,
        },
    };
    let e = check_stable_hopf(&q, CEILING).unwrap();
    assert_eq!(e.applicable, Verdict::CertTrue);
    assert_eq!(e.obstructed, Verdict::CertTrue);
    assert!((BigInt::from(1) << 124usize) > f0(248).unwrap());
}

/// Space of the given Euler characteristic and its dimension.
fn factor_dimension(chi: i64) -> u64 {
    match chi {
        2 => 2,  // S^2
        3 => 4,  // CP^2
        4 => 4,  // S^2 x S^2
        6 => 10, // CP^5
        _ => unreachable!(),
    }
}

#[test]
fn corollary_never_contradicts_the_direct_test() {
    for chi_n in [2i64, 3, 4, 6] {
        for k in 2..=512u64 {
            let n = k * factor_dimension(chi_n);
            let q = ObstructionQuery {
                n,
                r: min_rank_theorem_a(n),
                simply_connected: true,
                structure: Structure::ProductPower {
                    factor: FactorData::Euler(BigInt::from(chi_n)),
                    k,
                },
            };
            let e = check_stable_hopf(&q, CEILING).unwrap();
            let (corollary, direct) = (e.parts[0].1, e.parts[1].1);
            assert!(!corollary.is_undecided() && !direct.is_undecided());
            assert!(
                !corollary.is_true() || direct.is_true(),
                "chi_N = {chi_n}, k = {k}"
            );
        }
    }
}

#[test]
fn rejected_inputs() {
    let base = euler(64, 15, 2);
    let with = |structure| ObstructionQuery {
        structure,
        ..base.clone()
    };
    assert!(run_query(
        &with(Structure::ProductPower {
            factor: FactorData::Euler(BigInt::from(2)),
            k: 1
        }),
        CEILING
    )
    .is_err());
    assert!(run_query(
        &with(Structure::ConnectedSum {
            chi_factor: BigInt::from(2),
            k: 4
        }),
        CEILING
    )
    .is_err());
    assert!(run_query(
        &with(Structure::FibrationTower {
            fibers: vec![BigInt::from(1)]
        }),
        CEILING
    )
    .is_err());
    assert!(run_query(
        &ObstructionQuery {
            n: 18,
            ..with(Structure::EllipticGenus {
                spin: true,
                b2_b4_zero: false
            })
        },
        CEILING
    )
    .is_err());
    assert!(run_query(
        &with(Structure::EllipticGenus {
            spin: false,
            b2_b4_zero: false
        }),
        CEILING
    )
    .is_err());
    assert!(run_query(
        &ObstructionQuery {
            n: 1,
            ..base.clone()
        },
        CEILING
    )
    .is_err());
    // connected sums admit chi(N) < 2
    assert!(run_query(
        &with(Structure::ConnectedSum {
            chi_factor: BigInt::from(0),
            k: 4
        }),
        CEILING
    )
    .is_ok());
}

#[test]
fn excessive_rank_is_flagged_but_processed() {
    let r = maximal_symmetry_rank(54) + 1;
    let report = run_query(&euler(54, r, 6000), CEILING).unwrap();
    assert!(!report.flags.is_empty());
    assert!(report.any_obstructed());
}

fn structure() -> impl Strategy<Value = Structure> {
    prop_oneof![
        (-10i64..1_000_000_000).prop_map(|c| Structure::Euler {
            chi: BigInt::from(c)
        }),
        (
            prop_oneof![Just(2i64), Just(3), Just(4), Just(6)],
            2u64..600
        )
            .prop_map(|(c, k)| Structure::ProductPower {
                factor: FactorData::Euler(BigInt::from(c)),
                k
            }),
        (-4i64..20, 2u64..100_000)
            .prop_filter("chi != 2", |(c, _)| *c != 2)
            .prop_map(|(c, k)| Structure::ConnectedSum {
                chi_factor: BigInt::from(c),
                k
            }),
        (0u64..600).prop_map(|rank| Structure::SymmetricSpace { rank }),
        prop::collection::vec(2i64..10, 1..30).prop_map(|f| Structure::FibrationTower {
            fibers: f.into_iter().map(BigInt::from).collect()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn obstruction_requires_applicability(n in 2u64..3000, r in 0u64..1600, sc in any::<bool>(), s in structure()) {
        let q = ObstructionQuery { n, r, simply_connected: sc, structure: s };
        let report = run_query(&q, 256).unwrap();
        for e in &report.entries {
            prop_assert!(!e.obstructed.is_true() || e.applicable.is_true(), "{:?}", e);
        }
    }

    #[test]
    fn euler_check_is_monotone_in_chi(n in 1u64..1500, r in 0u64..800, chi in -100i64..100_000_000, bump in 0i64..1_000_000) {
        let n = 2 * n;
        let lo = check_euler(&euler(n, r, chi), &BigInt::from(chi), 256).unwrap();
        let hi = check_euler(&euler(n, r, chi + bump), &BigInt::from(chi + bump), 256).unwrap();
        for (a, b) in lo.iter().zip(&hi) {
            prop_assert!(!(a.obstructed.is_true() && b.obstructed.is_false()));
        }
    }
}
