//! Acceptance suite: every criterion runs at full case counts with exact
//! (tolerance-free) comparisons and prints one pass/fail line.
//!
//! Criteria 1–9 live here; the CLI criterion lives in the CLI crate's own
//! `acceptance` test target. Run with `--nocapture` to see the lines.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rpa_core::scalars::ratio;
use rpa_core::suites::{run_suite, SuiteReport};
use rpa_core::{Classification, FilterSpec, RpaReal};

const SEED: u64 = 0x5EED_0001;

fn assert_clean(criterion: &str, report: &SuiteReport) {
    assert_eq!(
        report.failed, 0,
        "{criterion} FAILED: {} of {} checks failed; first counterexample: {:#?}",
        report.failed, report.cases, report.first_counterexample
    );
    println!(
        "[PASS] {criterion}: {} checks, 0 failures (suite `{}`)",
        report.cases, report.suite
    );
}

#[test]
fn criterion_01_ring_and_order_axioms() {
    // 1,000 random triples per filter kind, ring axioms and order laws exact
    let report = run_suite("ring_axioms", 1000, SEED).unwrap();
    assert_clean("criterion 1 (ring/order axioms)", &report);
}

#[test]
fn criterion_02_principal_oracle_equivalence() {
    // k ∈ {1, 7, 100}: 1,000 random mixed computations agree exactly with
    // plain rational/complex arithmetic at k
    let report = run_suite("principal_oracle", 1000, SEED).unwrap();
    assert_clean("criterion 2 (principal-filter oracle)", &report);
}

#[test]
fn criterion_03_pointwise_oracle() {
    // 200 random asserted identities/inequalities, checked by eval_at at 40
    // sampled indices with exact rational comparison
    let report = run_suite("pointwise_oracle", 200, SEED).unwrap();
    assert_clean("criterion 3 (pointwise oracle)", &report);
}

#[test]
fn criterion_04_complex_component_laws() {
    // component laws on 500 random complex elements each, plus the
    // zero-divisor demonstration per filter kind
    let report = run_suite("complex_laws", 500, SEED).unwrap();
    assert_clean("criterion 4 (complex component laws)", &report);
}

#[test]
fn criterion_05_wave_space_laws() {
    // scalar-product laws and squared Schwarz on 500 random cases,
    // refinement invariance, and the infinite-interval integral
    let report = run_suite("wave_laws", 500, SEED).unwrap();
    assert_clean("criterion 5 (wave space laws)", &report);
}

#[test]
fn criterion_06_heisenberg_uncertainty() {
    // 500 random Hermitian pairs (dims 2–5) per filter kind, plus the Pauli
    // equality case and its germ-scaled variant with residual exactly 0
    let report = run_suite("heisenberg", 500, SEED).unwrap();
    assert_clean("criterion 6 (uncertainty relation)", &report);
}

#[test]
fn criterion_07_proof_chain() {
    // real expectations, centering, commutator invariance, and the centered
    // self-product, 300 random cases each
    let report = run_suite("proof_chain", 300, SEED).unwrap();
    assert_clean("criterion 7 (proof chain)", &report);
}

#[test]
fn criterion_08_bounds_and_wintner() {
    // norm laws, bound certificates and combinators, trace cyclicity, the
    // non-commutation residual, and the power-commutator identity
    let report = run_suite("bounds_wintner", 200, SEED).unwrap();
    assert_clean("criterion 8 (bounds and non-commutation)", &report);

    // independent brute-force oracle for the telescoping identity: plain
    // complex-rational matrices, both sides expanded separately
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xABCD);
    for dim in 2..=4usize {
        for n in 1..=5usize {
            let a = rand_matrix(&mut rng, dim);
            let b = rand_matrix(&mut rng, dim);
            let b_n = mat_pow(&b, n, dim);
            let lhs = mat_sub(&mat_mul(&a, &b_n, dim), &mat_mul(&b_n, &a, dim));
            let comm = mat_sub(&mat_mul(&a, &b, dim), &mat_mul(&b, &a, dim));
            let mut rhs = zero_matrix(dim);
            for k in 0..n {
                let term = mat_mul(
                    &mat_mul(&mat_pow(&b, k, dim), &comm, dim),
                    &mat_pow(&b, n - 1 - k, dim),
                    dim,
                );
                rhs = mat_add(&rhs, &term);
            }
            assert_eq!(
                lhs, rhs,
                "brute-force telescoping identity failed at dim {dim}, n {n}"
            );
        }
    }
    println!("[PASS] criterion 8 oracle: brute-force telescoping identity, dims 2-4, n <= 5");
}

#[test]
fn criterion_09_relativity_of_the_trichotomy() {
    let report = run_suite("relativity", 10, SEED).unwrap();
    assert_clean("criterion 9 (relativity demo)", &report);

    // the three named classifications, asserted directly
    let f = FilterSpec::Frechet;
    let one = RpaReal::one(f.clone());
    let omega = RpaReal::omega(f.clone());
    let omega_sq = &omega * &omega;
    assert_eq!(one.classify(), Classification::Finite);
    assert_eq!(
        one.rescale(&omega).unwrap().classify(),
        Classification::Infinitesimal
    );
    assert_eq!(
        omega_sq.rescale(&omega).unwrap().classify(),
        Classification::InfinitelyLarge
    );
    println!("[PASS] criterion 9 direct: classify(1)=Finite, classify(1/ω)=Infinitesimal, classify(ω²/ω)=InfinitelyLarge");
}

// ── plain complex-rational matrix arithmetic (test-only oracle) ──────────

type C = (BigRational, BigRational);
type Matrix = Vec<Vec<C>>;

fn c_add(a: &C, b: &C) -> C {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn c_sub(a: &C, b: &C) -> C {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn c_mul(a: &C, b: &C) -> C {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn zero_matrix(dim: usize) -> Matrix {
    vec![vec![(ratio::int(0), ratio::int(0)); dim]; dim]
}

fn rand_matrix(rng: &mut ChaCha8Rng, dim: usize) -> Matrix {
    (0..dim)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    (
                        ratio::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
                        ratio::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
                    )
                })
                .collect()
        })
        .collect()
}

fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r1, r2)| r1.iter().zip(r2).map(|(x, y)| c_add(x, y)).collect())
        .collect()
}

fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r1, r2)| r1.iter().zip(r2).map(|(x, y)| c_sub(x, y)).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix, dim: usize) -> Matrix {
    let mut out = zero_matrix(dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = (ratio::int(0), ratio::int(0));
            for (k, row_k) in b.iter().enumerate() {
                acc = c_add(&acc, &c_mul(&a[i][k], &row_k[j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

fn mat_pow(a: &Matrix, n: usize, dim: usize) -> Matrix {
    let mut out = zero_matrix(dim);
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = (ratio::int(1), ratio::int(0));
    }
    for _ in 0..n {
        out = mat_mul(&out, a, dim);
    }
    out
}
