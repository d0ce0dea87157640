//! Strategies and property bodies shared by the property and acceptance suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use clusterqp::catalog::all_entries;
use clusterqp::lattice::{ClusterWord, FixedData, IsoSpec, MutationStep, Seed, Sign, WordStep};
use clusterqp::linalg::IntMatrix;
use clusterqp::symbolic::{evaluate_word, xmaps_equal};
use clusterqp::toric::{analyze, qp_type_check, KPairing, QpVerdict, ToricSeedData, V2};

pub const CASES: u32 = 100;

fn sign(b: bool) -> Sign {
    if b {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn seed_of(rows: &[Vec<i64>]) -> Seed {
    FixedData::from_lambda(&IntMatrix::from_rows_i64(rows))
        .unwrap()
        .initial_seed()
}

/// Random skew-symmetric forms of rank at most 6 with entries in `[-3, 3]`.
pub fn skew_form() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * (n - 1) / 2).prop_map(move |upper| {
            let mut m = vec![vec![0i64; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let v = it.next().unwrap();
                    m[i][j] = v;
                    m[j][i] = -v;
                }
            }
            m
        })
    })
}

/// A seed reached from the initial one by a few mutations, a direction and a sign.
pub fn seed_case() -> impl Strategy<Value = (Seed, usize, Sign)> {
    skew_form().prop_flat_map(|m| {
        let n = m.len();
        (
            Just(m),
            prop::collection::vec((0..n, any::<bool>()), 0..4),
            0..n,
            any::<bool>(),
        )
            .prop_map(|(m, walk, k, s)| {
                let mut seed = seed_of(&m);
                for (j, b) in walk {
                    seed = seed.mutate_at(j, sign(b)).unwrap();
                }
                (seed, k, sign(s))
            })
    })
}

pub fn mutation_round_trip((seed, k, s): (Seed, usize, Sign)) -> Result<(), TestCaseError> {
    let back = seed.mutate_at(k, s).unwrap().mutate_at(k, s.flip()).unwrap();
    prop_assert_eq!(back.basis(), seed.basis());
    Ok(())
}

/// `μ_k^ε μ_k^ε` sends `e_i` to `e_i + ε ε_ik e_k` and fixes `e_k`.
pub fn double_mutation_is_transvection(
    (seed, k, s): (Seed, usize, Sign),
) -> Result<(), TestCaseError> {
    let twice = seed.mutate_at(k, s).unwrap().mutate_at(k, s).unwrap();
    let eps = seed.exchange_matrix();
    let e = s.as_i64();
    for i in 0..seed.rank() {
        let want: Vec<BigInt> = if i == k {
            seed.e(k)
        } else {
            let c = eps.get(i, k) * BigInt::from(e);
            seed.e(i).iter().zip(seed.e(k)).map(|(a, b)| a + &c * b).collect()
        };
        prop_assert_eq!(twice.e(i), want);
    }
    Ok(())
}

/// A form invariant under `σ` up to the sign `s`: `ε_{σ(i)σ(j)} = s ε_ij`.
pub fn symmetric_case() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<usize>, Sign, usize, Sign)> {
    (2usize..=5)
        .prop_flat_map(|n| {
            (
                Just(n),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                any::<bool>(),
                prop::collection::vec(-3i64..=3, n * n),
                0..n,
                any::<bool>(),
            )
        })
        .prop_map(|(n, perm, iso_plus, vals, k, mut_plus)| {
            let s: i64 = if iso_plus { 1 } else { -1 };
            let mut m = vec![vec![None::<i64>; n]; n];
            for i in 0..n {
                m[i][i] = Some(0);
            }
            for i in 0..n {
                for j in 0..n {
                    if m[i][j].is_some() {
                        continue;
                    }
                    let mut orbit = Vec::new();
                    let (mut a, mut b, mut f) = (i, j, 1i64);
                    loop {
                        orbit.push((a, b, f));
                        orbit.push((b, a, -f));
                        a = perm[a];
                        b = perm[b];
                        f *= s;
                        if (a, b) == (i, j) {
                            orbit.push((a, b, f));
                            break;
                        }
                    }
                    let consistent = orbit
                        .iter()
                        .all(|&(a, b, f)| orbit.iter().all(|&(c, d, g)| (a, b) != (c, d) || f == g));
                    let v = if consistent { vals[i * n + j] } else { 0 };
                    for (a, b, f) in orbit {
                        m[a][b] = Some(f * v);
                    }
                }
            }
            let m: Vec<Vec<i64>> = m.into_iter().map(|r| r.into_iter().map(Option::unwrap).collect()).collect();
            (m, perm, sign(iso_plus), k, sign(mut_plus))
        })
}

/// `εσ ∘ μ_k^{ε'} = μ_{σ(k)}^{εε'} ∘ εσ`, as seeds and as X-maps.
pub fn iso_mutation_exchange(
    (m, perm, s, k, e): (Vec<Vec<i64>>, Vec<usize>, Sign, usize, Sign),
) -> Result<(), TestCaseError> {
    let seed = seed_of(&m);
    let eps = seed.exchange_matrix();
    let n = seed.rank();
    for i in 0..n {
        for j in 0..n {
            prop_assert_eq!(eps.get(perm[i], perm[j]), &(eps.get(i, j) * BigInt::from(s.as_i64())));
        }
    }
    let iso = WordStep::Isomorphism(IsoSpec {
        perm: perm.clone(),
        sign: s,
        matrix: Some(IntMatrix::permutation(&perm)),
    });
    let ee = if s == e { Sign::Plus } else { Sign::Minus };
    let left = ClusterWord::new(&seed, vec![WordStep::Mutation(MutationStep::new(k, e)), iso.clone()]);
    let right = ClusterWord::new(&seed, vec![iso, WordStep::Mutation(MutationStep::new(perm[k], ee))]);
    prop_assert_eq!(left.target().unwrap(), right.target().unwrap());
    let (l, r) = (evaluate_word(&left).unwrap(), evaluate_word(&right).unwrap());
    prop_assert!(xmaps_equal(&l, &r));
    let norm = left.normalize().unwrap();
    prop_assert!(xmaps_equal(&l, &evaluate_word(&norm).unwrap()));
    Ok(())
}

fn sl2() -> impl Strategy<Value = [[i64; 2]; 2]> {
    prop::collection::vec(0usize..4, 0..6).prop_map(|gens| {
        let g = [[[1, 1], [0, 1]], [[1, -1], [0, 1]], [[1, 0], [1, 1]], [[0, -1], [1, 0]]];
        let mut m = [[1i64, 0], [0, 1]];
        for i in gens {
            let a = g[i];
            m = [
                [a[0][0] * m[0][0] + a[0][1] * m[1][0], a[0][0] * m[0][1] + a[0][1] * m[1][1]],
                [a[1][0] * m[0][0] + a[1][1] * m[1][0], a[1][0] * m[0][1] + a[1][1] * m[1][1]],
            ];
        }
        m
    })
}

/// Catalog toric data moved by `SL(2, Z)`, with the vectors reordered.
pub fn toric_case() -> impl Strategy<Value = (ToricSeedData, bool)> {
    let n = all_entries().len();
    (0..n, sl2(), any::<u64>(), any::<bool>()).prop_map(|(i, g, shuffle, extra)| {
        let e = &all_entries()[i];
        let mut vs: Vec<V2> = e
            .vectors
            .vectors
            .iter()
            .map(|w| [g[0][0] * w[0] + g[0][1] * w[1], g[1][0] * w[0] + g[1][1] * w[1]])
            .collect();
        let r = (shuffle as usize) % vs.len();
        vs.rotate_left(r);
        if shuffle & (1 << 40) != 0 {
            vs.reverse();
        }
        (ToricSeedData::new(vs), extra)
    })
}

pub fn null_root_invariants((data, extra): (ToricSeedData, bool)) -> Result<(), TestCaseError> {
    let a = analyze(&data, extra).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let h = a.boundary.h_matrix();
    let cp: Vec<BigInt> = a.null_root.c_prime.iter().map(|&x| x.into()).collect();
    prop_assert!(h.mul_vec(&cp).iter().all(Zero::is_zero), "H c' != 0");
    prop_assert!(a.null_root.c.iter().all(|&c| c > 0));
    for t in 0..2 {
        let s: i64 = a.null_root.c.iter().zip(&data.vectors).map(|(c, w)| c * w[t]).sum();
        prop_assert_eq!(s, 0);
    }
    let delta: Vec<BigInt> = a.null_root.delta.iter().map(|&x| x.into()).collect();
    let kp = KPairing::new(&data, &a.boundary).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(kp.pair(&delta, &delta).unwrap().is_zero(), "delta^2 != 0");
    Ok(())
}

pub fn symmetric_small() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |v| {
            let mut it = v.into_iter();
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in i..n {
                    let x = it.next().unwrap();
                    m[i][j] = x;
                    m[j][i] = x;
                }
            }
            IntMatrix::from_rows_i64(&m)
        })
    })
}

fn laplace_det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * laplace_det(&minor)
            })
            .sum(),
    }
}

/// Sylvester-type test on `-h`: semidefinite iff every principal minor is
/// nonnegative, definite iff the leading ones are positive.
pub fn verdict_by_minors(h: &IntMatrix) -> QpVerdict {
    let neg: Vec<Vec<i64>> = h.to_rows_i64().into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
    let n = neg.len();
    let minor = |idx: &[usize]| -> i64 {
        let sub: Vec<Vec<i64>> = idx.iter().map(|&r| idx.iter().map(|&c| neg[r][c]).collect()).collect();
        laplace_det(&sub)
    };
    let psd = (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        minor(&idx) >= 0
    });
    if !psd {
        QpVerdict::Indefinite
    } else if (1..=n).all(|k| minor(&(0..k).collect::<Vec<_>>()) > 0) {
        QpVerdict::NegativeDefinite
    } else {
        QpVerdict::QPainleve
    }
}

pub fn verdict_matches_minors(h: IntMatrix) -> Result<(), TestCaseError> {
    prop_assert_eq!(qp_type_check(&h), verdict_by_minors(&h));
    Ok(())
}

/// Run `test` on `CASES` inputs from a fixed seed; used where a PASS/FAIL line is wanted.
pub fn run<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: CASES,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    runner.run(&strategy, test).map_err(|e| e.to_string())
}
