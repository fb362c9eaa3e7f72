//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Golden values are frozen from independently worked-out expansions of
//! the identity families at small parameters.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::{Duration, Instant};

use mzv::index::{all_compositions, Index};
use mzv::maps::{derivation_del, lx_prepend, lx_strip, sigma_trunc};
use mzv::poly::{coef_int, NcPoly};
use mzv::stuffle::stuffle;
use mzv::word::{h0_words, h1_words, words_of_degree, Word};
use mzv::zeta::{SymbolKind, ZetaCombo};
use mzv::{
    derivation_finite_instance, derivation_instance, eval_mzv, gen_derivation, gen_finite,
    gen_finite_algebraic, gen_height_one, gen_main, gen_main_algebraic, gen_ohno, gen_ohno_finite,
    sym_mzv_star, verify_finite, verify_real, PrimeSet,
};

fn criterion(n: u32, desc: &str, limit: Option<Duration>, f: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let outcome = catch_unwind(f);
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) => println!("criterion {n:2} PASS ({elapsed:.2?}) {desc}"),
        Err(cause) => {
            println!("criterion {n:2} FAIL ({elapsed:.2?}) {desc}");
            resume_unwind(cause);
        }
    }
    if let Some(limit) = limit {
        assert!(
            elapsed < limit,
            "criterion {n} exceeded its runtime budget: {elapsed:.2?} >= {limit:.2?}"
        );
    }
}

fn idx(parts: &[u32]) -> Index {
    Index::new(parts.to_vec())
}

fn combo(kind: SymbolKind, terms: &[(&[u32], i64)]) -> ZetaCombo {
    ZetaCombo::from_terms(
        kind,
        terms.iter().map(|&(parts, c)| (idx(parts), coef_int(c))),
    )
}

/// The 13-term refinement side shared by the depth-2 golden examples.
fn golden_rhs_32_4(kind: SymbolKind) -> ZetaCombo {
    combo(
        kind,
        &[
            (&[6, 3], 1),
            (&[5, 4], 1),
            (&[4, 5], 1),
            (&[5, 2, 2], -1),
            (&[4, 3, 2], -1),
            (&[4, 2, 3], -2),
            (&[3, 3, 3], -2),
            (&[3, 2, 4], -1),
            (&[2, 4, 3], -1),
            (&[2, 3, 4], -1),
            (&[3, 2, 2, 2], 1),
            (&[2, 3, 2, 2], 1),
            (&[2, 2, 2, 3], 1),
        ],
    )
}

#[test]
fn criterion_01_height_one_golden() {
    criterion(
        1,
        "height-one instance (k=3, r=4) reproduces the golden expansion",
        Some(Duration::from_secs(1)),
        || {
            let inst = gen_height_one(3, 4);
            assert_eq!(inst.lhs, combo(SymbolKind::Real, &[(&[4, 1, 1, 1], 1)]));
            let expected_rhs = combo(
                SymbolKind::Real,
                &[
                    (&[7], 1),
                    (&[5, 2], -1),
                    (&[4, 3], -2),
                    (&[3, 4], -2),
                    (&[2, 5], -1),
                    (&[3, 2, 2], 1),
                    (&[2, 3, 2], 1),
                    (&[2, 2, 3], 1),
                ],
            );
            assert_eq!(inst.rhs, expected_rhs);
        },
    );
}

#[test]
fn criterion_02_main_golden() {
    criterion(
        2,
        "main instance (k=(3,2), r=4): 3 + 13 terms with merged coefficients",
        None,
        || {
            let inst = gen_main(&idx(&[3, 2]), 4).unwrap();
            let expected_lhs = combo(
                SymbolKind::Real,
                &[(&[4, 3, 1, 1], 1), (&[4, 1, 3, 1], 1), (&[4, 1, 1, 3], 1)],
            );
            assert_eq!(inst.lhs, expected_lhs);
            assert_eq!(inst.lhs.num_terms(), 3);
            assert_eq!(inst.rhs, golden_rhs_32_4(SymbolKind::Real));
            assert_eq!(inst.rhs.num_terms(), 13);
            assert_eq!(inst.rhs.coef(&idx(&[4, 2, 3])), coef_int(-2));
            assert_eq!(inst.rhs.coef(&idx(&[3, 3, 3])), coef_int(-2));
        },
    );
}

#[test]
fn criterion_03_finite_golden() {
    criterion(
        3,
        "finite instance (k=(3,2), r=4): leading-ones strings on the left",
        None,
        || {
            let inst = gen_finite(&idx(&[3, 2]), 4).unwrap();
            let expected_lhs = combo(
                SymbolKind::Finite,
                &[
                    (&[4, 3, 1, 1], 1),
                    (&[4, 1, 3, 1], 1),
                    (&[4, 1, 1, 3], 1),
                    (&[1, 4, 3, 1], 1),
                    (&[1, 4, 1, 3], 1),
                    (&[1, 1, 4, 3], 1),
                ],
            );
            assert_eq!(inst.lhs, expected_lhs);
            assert_eq!(inst.lhs.num_terms(), 6);
            assert_eq!(inst.rhs, golden_rhs_32_4(SymbolKind::Finite));
        },
    );
}

#[test]
fn criterion_04_oracle_equivalence() {
    criterion(
        4,
        "word-level route equals index-level route for every wt(k)+r <= 10",
        Some(Duration::from_secs(60)),
        || {
            let mut pairs = 0usize;
            for wk in 1..10u32 {
                for k in all_compositions(wk) {
                    for r in k.depth()..=(10 - wk) {
                        let main = gen_main(&k, r).unwrap();
                        let main_alg = gen_main_algebraic(&k, r).unwrap();
                        assert_eq!(main.lhs, main_alg.lhs, "main lhs at {k}, r = {r}");
                        assert_eq!(main.rhs, main_alg.rhs, "main rhs at {k}, r = {r}");

                        let fin = gen_finite(&k, r).unwrap();
                        let fin_alg = gen_finite_algebraic(&k, r).unwrap();
                        assert_eq!(fin.lhs, fin_alg.lhs, "finite lhs at {k}, r = {r}");
                        assert_eq!(fin.rhs, fin_alg.rhs, "finite rhs at {k}, r = {r}");
                        pairs += 1;
                    }
                }
            }
            assert!(pairs > 100, "sweep enumerated only {pairs} pairs");
        },
    );
}

#[test]
fn criterion_05_real_verification() {
    criterion(
        5,
        "real backend at N = 10^6: every main instance with wt(k)+r <= 8",
        None,
        || {
            let n = 1_000_000u64;
            for wk in 1..8u32 {
                for k in all_compositions(wk) {
                    for r in k.depth()..=(8 - wk) {
                        let inst = gen_main(&k, r).unwrap();
                        let report = verify_real(&inst, n).unwrap();
                        assert!(report.passed(), "k = {k}, r = {r}: {}", report.to_json());
                    }
                }
            }

            // spot checks pinned by the criterion
            let zeta2 = eval_mzv(&idx(&[2]), n).unwrap();
            assert!((zeta2.value - 1.6449340668).abs() <= 2.0e-6);

            let a = eval_mzv(&idx(&[2, 1]), n).unwrap();
            let b = eval_mzv(&idx(&[3]), n).unwrap();
            assert!((a.value - b.value).abs() <= a.tail_bound + b.tail_bound + 2e-12);

            let report = verify_real(&gen_height_one(3, 4), n).unwrap();
            match report.detail {
                mzv::report::ReportDetail::Real { tolerance, .. } => {
                    assert!(tolerance <= 1.0e-3, "spot-check tolerance {tolerance}")
                }
                _ => unreachable!(),
            }
        },
    );
}

#[test]
fn criterion_06_finite_verification() {
    criterion(
        6,
        "finite backend over primes in [11, 1009]: main, Ohno-type and derivation families",
        Some(Duration::from_secs(300)),
        || {
            let sweep = PrimeSet::range(11, 1009);
            assert_eq!(sweep.len(), 165);

            for wk in 1..8u32 {
                for k in all_compositions(wk) {
                    for r in k.depth()..=(8 - wk) {
                        let inst = gen_finite(&k, r).unwrap();
                        let report = verify_finite(&inst, &sweep).unwrap();
                        assert!(
                            report.passed(),
                            "finite k = {k}, r = {r}: {}",
                            report.to_json()
                        );
                    }
                }
            }

            for wk in 1..=6u32 {
                for k in all_compositions(wk) {
                    for m in 0..=2u32 {
                        let inst = gen_ohno_finite(&k, m).unwrap();
                        let report = verify_finite(&inst, &sweep).unwrap();
                        assert!(
                            report.passed(),
                            "ohno-finite k = {k}, m = {m}: {}",
                            report.to_json()
                        );
                    }
                }
            }

            for deg in 0..=6u32 {
                for w in h1_words(deg) {
                    for l in 1..=3u32 {
                        let inst = derivation_finite_instance(l, &w).unwrap();
                        let report = verify_finite(&inst, &sweep).unwrap();
                        assert!(
                            report.passed(),
                            "derivation-finite w = {w}, l = {l}: {}",
                            report.to_json()
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_07_real_relation_suites() {
    criterion(
        7,
        "real backend: derivation images vanish (deg <= 6, l <= 3) and Ohno instances pass (wt <= 7, m <= 2)",
        None,
        || {
            let n = 1_000_000u64;
            for deg in 2..=6u32 {
                for w in h0_words(deg) {
                    for l in 1..=3u32 {
                        let inst = derivation_instance(l, &w).unwrap();
                        let report = verify_real(&inst, n).unwrap();
                        assert!(report.passed(), "derivation w = {w}, l = {l}: {}", report.to_json());
                    }
                }
            }

            for wk in 2..=7u32 {
                for k in all_compositions(wk) {
                    if !k.is_admissible() {
                        continue;
                    }
                    for m in 0..=2u32 {
                        let inst = gen_ohno(&k, m).unwrap();
                        let report = verify_real(&inst, n).unwrap();
                        assert!(report.passed(), "ohno k = {k}, m = {m}: {}", report.to_json());
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_08_structural_suites() {
    criterion(
        8,
        "structural laws: dualities, refinements, bijections, algebra identities",
        None,
        || {
            // duality involution and statistics, exhaustive to weight 12
            for w in 2..=12u32 {
                for k in all_compositions(w) {
                    if !k.is_admissible() {
                        continue;
                    }
                    let dual = k.dual().unwrap();
                    assert_eq!(dual.dual().unwrap(), k);
                    assert_eq!(dual.weight(), k.weight());
                    assert_eq!(dual.depth(), k.weight() - k.depth());
                    assert_eq!(dual.height(), k.height());
                }
            }

            // Hoffman dual involution, exhaustive to weight 12
            for w in 1..=12u32 {
                for k in all_compositions(w) {
                    assert_eq!(k.hoffman_dual().unwrap().hoffman_dual().unwrap(), k);
                }
            }

            // refinement cardinality to weight 10
            for w in 1..=10u32 {
                for k in all_compositions(w) {
                    assert_eq!(
                        k.refinements().len() as u64,
                        1u64 << (k.weight() - k.depth())
                    );
                }
            }

            // word/index bijection to weight 10
            for w in 1..=10u32 {
                for k in all_compositions(w) {
                    assert_eq!(Word::from_index(&k).unwrap().to_index().unwrap(), k);
                }
            }

            // tau is an involution on words up to degree 8
            for deg in 0..=8u32 {
                for w in words_of_degree(deg) {
                    let p = NcPoly::from_word(w);
                    assert_eq!(mzv::maps::tau(&mzv::maps::tau(&p)), p);
                }
            }

            // Leibniz on all word pairs of degree <= 3, l <= 2
            for da in 0..=3u32 {
                for a in words_of_degree(da) {
                    let pa = NcPoly::from_word(a);
                    for db in 0..=3u32 {
                        for b in words_of_degree(db) {
                            let pb = NcPoly::from_word(b);
                            let prod = &pa * &pb;
                            for l in 1..=2u32 {
                                assert_eq!(
                                    derivation_del(l, &prod),
                                    &(&derivation_del(l, &pa) * &pb)
                                        + &(&pa * &derivation_del(l, &pb))
                                );
                            }
                        }
                    }
                }
            }

            // del_l kills x + y
            let z =
                &NcPoly::from_word("x".parse().unwrap()) + &NcPoly::from_word("y".parse().unwrap());
            for l in 1..=4u32 {
                assert!(derivation_del(l, &z).is_zero());
            }

            // stuffle commutativity (pairs, deg <= 4) and associativity (triples, deg <= 3)
            let h1_up_to = |cap: u32| -> Vec<Word> { (0..=cap).flat_map(h1_words).collect() };
            for a in h1_up_to(4) {
                let pa = NcPoly::from_word(a);
                for b in h1_up_to(4) {
                    let pb = NcPoly::from_word(b.clone());
                    assert_eq!(stuffle(&pa, &pb).unwrap(), stuffle(&pb, &pa).unwrap());
                }
            }
            for a in h1_up_to(3) {
                let pa = NcPoly::from_word(a);
                for b in h1_up_to(3) {
                    let pb = NcPoly::from_word(b);
                    for c in h1_up_to(3) {
                        let pc = NcPoly::from_word(c);
                        assert_eq!(
                            stuffle(&stuffle(&pa, &pb).unwrap(), &pc).unwrap(),
                            stuffle(&pa, &stuffle(&pb, &pc).unwrap()).unwrap()
                        );
                    }
                }
            }

            // strip . sigma . prepend agrees with sigma below the cap
            for deg in 0..=4u32 {
                for w in h1_words(deg) {
                    let p = NcPoly::from_word(w);
                    for cap in (deg + 1)..=7 {
                        assert_eq!(
                            lx_strip(&sigma_trunc(&lx_prepend(&p), cap)).unwrap(),
                            sigma_trunc(&p, cap - 1)
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_09_symmetrized_suite() {
    criterion(
        9,
        "symmetrized values: single-index vanishing, reversal antisymmetry, frozen oracle",
        None,
        || {
            assert!(sym_mzv_star(&idx(&[1])).unwrap().is_zero());
            for k in [3u32, 5, 7] {
                assert!(sym_mzv_star(&idx(&[k])).unwrap().is_zero(), "odd k = {k}");
            }

            for w in 1..=7u32 {
                for k in all_compositions(w) {
                    let reversed = Index::new(k.parts().iter().rev().copied().collect());
                    let sign = if k.weight() % 2 == 0 { 1 } else { -1 };
                    assert_eq!(
                        sym_mzv_star(&reversed).unwrap(),
                        sym_mzv_star(&k).unwrap().scale(&coef_int(sign)),
                        "antisymmetry at {k}"
                    );
                }
            }

            // stuffle-inversion oracle for (2,1), worked out by hand:
            // z1 * z2 = z1z2 + z2z1 + z3 forces reg(1,2)|_{T=0} = -z(2,1) - z(3),
            // so the three cut terms give z(2,1) + 0 + (z(2,1) + z(3)).
            let expected = combo(SymbolKind::Real, &[(&[2, 1], 2), (&[3], 1)]);
            assert_eq!(sym_mzv_star(&idx(&[2, 1])).unwrap(), expected);
        },
    );
}

#[test]
fn criterion_10_defect_detection() {
    criterion(
        10,
        "a +1 coefficient perturbation fails on both backends",
        None,
        || {
            let mut real_inst = gen_height_one(3, 4);
            real_inst.rhs.add_term(idx(&[7]), coef_int(1));
            let report = verify_real(&real_inst, 100_000).unwrap();
            assert!(!report.passed(), "real backend accepted the perturbation");

            let mut finite_inst = gen_finite(&idx(&[3, 2]), 4).unwrap();
            finite_inst.rhs.add_term(idx(&[6, 3]), coef_int(1));
            let report = verify_finite(&finite_inst, &PrimeSet::range(11, 1009)).unwrap();
            assert!(!report.passed(), "finite backend accepted the perturbation");
        },
    );
}

/// The two expansion routes of the word algebra agree with the maps they
/// shortcut: applying beta . sigma . alpha (and its tau conjugate) to the
/// encoding word reproduces the generated combinations.
#[test]
fn word_algebra_maps_reproduce_generators() {
    for wk in 1..=5u32 {
        for k in all_compositions(wk) {
            for r in k.depth()..=(7 - wk).min(4) {
                let total = wk + r;
                let zword = NcPoly::from_word(Word::from_index(&k).unwrap());
                let sign = coef_int(if k.depth() % 2 == 0 { 1 } else { -1 });

                let via_sigma = sigma_trunc(&mzv::maps::alpha(&zword), total)
                    .degree_part(total)
                    .scale(&sign);
                let inst = gen_main_algebraic(&k, r).unwrap();
                assert_eq!(
                    mzv::to_zeta_combo(&via_sigma, SymbolKind::Real).unwrap(),
                    inst.rhs,
                    "sigma route at {k}, r = {r}"
                );

                let tau_conj = mzv::maps::tau(&sigma_trunc(
                    &mzv::maps::tau(&mzv::maps::alpha(&zword)),
                    total,
                ))
                .degree_part(total)
                .scale(&sign);
                assert_eq!(
                    mzv::to_zeta_combo(&tau_conj, SymbolKind::Real).unwrap(),
                    inst.lhs,
                    "tau route at {k}, r = {r}"
                );

                // finite side: conjugate by prepending x before the tau pass
                let fin = gen_finite_algebraic(&k, r).unwrap();
                let conj = lx_strip(
                    &mzv::maps::tau(&sigma_trunc(
                        &mzv::maps::tau(&lx_prepend(&mzv::maps::alpha(&zword))),
                        total + 1,
                    ))
                    .degree_part(total + 1),
                )
                .unwrap()
                .scale(&sign);
                assert_eq!(
                    mzv::to_zeta_combo(&conj, SymbolKind::Finite).unwrap(),
                    fin.lhs,
                    "finite tau route at {k}, r = {r}"
                );
            }
        }
    }
}

/// Derivation images decoded straight from the algebra agree with the
/// classical small relations (Euler's zeta(2,1) = zeta(3) and the
/// weight-4 sum formula).
#[test]
fn derivation_relations_small_table() {
    let combo1 = gen_derivation(1, &"xy".parse().unwrap()).unwrap();
    assert_eq!(combo1, combo(SymbolKind::Real, &[(&[2, 1], 1), (&[3], -1)]));

    let combo2 = gen_derivation(1, &"xxy".parse().unwrap()).unwrap();
    assert_eq!(
        combo2,
        combo(SymbolKind::Real, &[(&[2, 2], 1), (&[3, 1], 1), (&[4], -1)])
    );
}
