//! Seeded random generators for campaign inputs.
//!
//! Exponent pools are integral so principal-filter normalization and the
//! pointwise oracles always see rational values; fractional exponents are
//! exercised by dedicated unit tests instead.

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::filters::FilterSpec;
use crate::operators::GridOperator;
use crate::scalars::{ratio, Germ, PuiseuxPoly, RpaComplex, RpaReal};
use crate::waves::{Grid, StepWave};

pub fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    ratio::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let mut num = rng.gen_range(-9..=9i64);
    if num == 0 {
        num = 1;
    }
    ratio::ratio(num, rng.gen_range(1..=4))
}

pub fn positive_rational(rng: &mut ChaCha8Rng) -> BigRational {
    ratio::ratio(rng.gen_range(1..=9), rng.gen_range(1..=3))
}

/// A small polynomial with integer exponents in `[-2, 2]`; sometimes zero.
pub fn poly(rng: &mut ChaCha8Rng) -> PuiseuxPoly {
    let terms = rng.gen_range(0..=2usize);
    let mut exps = vec![-2i64, -1, 0, 1, 2];
    let mut out = Vec::new();
    for _ in 0..terms {
        let idx = rng.gen_range(0..exps.len());
        let e = exps.swap_remove(idx);
        out.push((ratio::int(e), nonzero_rational(rng)));
    }
    PuiseuxPoly::from_terms(out)
}

/// A germ with modulus 1–3 (weighted toward 1).
pub fn germ(rng: &mut ChaCha8Rng) -> Germ {
    let modulus = *[1u64, 1, 1, 2, 2, 3].get(rng.gen_range(0..6)).unwrap();
    let polys = (0..modulus).map(|_| poly(rng)).collect();
    Germ::new(modulus, polys)
}

pub fn real(rng: &mut ChaCha8Rng, filter: &FilterSpec) -> RpaReal {
    RpaReal::new(filter.clone(), germ(rng)).expect("integer exponents are rational everywhere")
}

pub fn complex(rng: &mut ChaCha8Rng, filter: &FilterSpec) -> RpaComplex {
    RpaComplex::new(real(rng, filter), real(rng, filter)).expect("same filter")
}

/// An element of the nonnegative cone (a square).
pub fn nonneg(rng: &mut ChaCha8Rng, filter: &FilterSpec) -> RpaReal {
    let x = real(rng, filter);
    &x * &x
}

/// A modulus-1 germ usable as an interval length: positive leading
/// coefficient *and* positive at every index, so it certifies under
/// principal filters too.
fn positive_length(rng: &mut ChaCha8Rng, filter: &FilterSpec) -> RpaReal {
    let germ = match rng.gen_range(0..4u8) {
        0 => Germ::constant(positive_rational(rng)),
        1 => Germ::uniform(PuiseuxPoly::monomial(
            ratio::int(*[-1i64, 1, 2].get(rng.gen_range(0..3)).unwrap()),
            positive_rational(rng),
        )),
        2 => Germ::uniform(PuiseuxPoly::from_terms([
            (ratio::int(1), positive_rational(rng)),
            (ratio::int(0), positive_rational(rng)),
        ])),
        _ => Germ::constant(positive_rational(rng)),
    };
    RpaReal::new(filter.clone(), germ).expect("integer exponents")
}

/// A certified grid with `m` intervals; lengths are modulus-1 positive-lead
/// germs, so all breakpoints are pairwise comparable.
pub fn grid(rng: &mut ChaCha8Rng, filter: &FilterSpec, m: usize) -> Grid {
    let mut points = vec![RpaReal::embed(rational(rng), filter.clone())];
    for _ in 0..m {
        let next = points.last().unwrap() + &positive_length(rng, filter);
        points.push(next);
    }
    Grid::new(points).expect("positive-lead lengths certify")
}

/// A grid whose lengths are positive rational constants (needed when
/// Hermitian generation divides by weights).
pub fn rational_grid(rng: &mut ChaCha8Rng, filter: &FilterSpec, m: usize) -> Grid {
    let mut points = vec![RpaReal::embed(rational(rng), filter.clone())];
    for _ in 0..m {
        let next = points.last().unwrap() + &RpaReal::embed(positive_rational(rng), filter.clone());
        points.push(next);
    }
    Grid::new(points).expect("positive rational lengths certify")
}

/// A wave with arbitrary germ coefficients on the given grid.
pub fn wave(rng: &mut ChaCha8Rng, grid: &Grid) -> StepWave {
    let filter = grid.filter();
    let coeffs = (0..grid.interval_count())
        .map(|_| complex(rng, filter))
        .collect();
    StepWave::new(grid.clone(), coeffs).expect("matching dimensions")
}

/// A wave whose coefficients are real and in the nonnegative cone.
pub fn real_nonneg_wave(rng: &mut ChaCha8Rng, grid: &Grid) -> StepWave {
    let filter = grid.filter();
    let coeffs = (0..grid.interval_count())
        .map(|_| RpaComplex::from_real(nonneg(rng, filter)))
        .collect();
    StepWave::new(grid.clone(), coeffs).expect("matching dimensions")
}

/// A small germ for operator entries: zero or per-class monomials. Matrix
/// products of these stay small while still mixing infinitesimal and
/// infinitely large entries across residue classes.
fn small_germ(rng: &mut ChaCha8Rng) -> Germ {
    let modulus = *[1u64, 1, 2].get(rng.gen_range(0..3)).unwrap();
    let polys = (0..modulus)
        .map(|_| {
            if rng.gen_range(0..4u8) == 0 {
                PuiseuxPoly::zero()
            } else {
                PuiseuxPoly::monomial(ratio::int(rng.gen_range(-1..=1i64)), nonzero_rational(rng))
            }
        })
        .collect();
    Germ::new(modulus, polys)
}

fn entry_complex(rng: &mut ChaCha8Rng, filter: &FilterSpec) -> RpaComplex {
    let re = RpaReal::new(filter.clone(), small_germ(rng)).expect("integer exponents");
    let im = RpaReal::new(filter.clone(), small_germ(rng)).expect("integer exponents");
    RpaComplex::new(re, im).expect("same filter")
}

/// A per-class monomial germ, nonzero on every class — invertible with a
/// representable inverse under every supported filter.
fn invertible_monomial(rng: &mut ChaCha8Rng, filter: &FilterSpec) -> RpaReal {
    let modulus = *[1u64, 1, 2].get(rng.gen_range(0..3)).unwrap();
    let polys = (0..modulus)
        .map(|_| PuiseuxPoly::monomial(ratio::int(rng.gen_range(-1..=1i64)), nonzero_rational(rng)))
        .collect();
    RpaReal::new(filter.clone(), Germ::new(modulus, polys)).expect("integer exponents")
}

/// A state with `⟨ψ,ψ⟩` invertible and representable: a shared per-class
/// monomial scale times rational coefficients, not all zero.
pub fn admissible_state(rng: &mut ChaCha8Rng, grid: &Grid) -> StepWave {
    let filter = grid.filter().clone();
    let scale = invertible_monomial(rng, &filter);
    let m = grid.interval_count();
    let mut parts: Vec<(BigRational, BigRational)> =
        (0..m).map(|_| (rational(rng), rational(rng))).collect();
    if parts
        .iter()
        .all(|(a, b)| a == &ratio::int(0) && b == &ratio::int(0))
    {
        parts[0].0 = ratio::int(1);
    }
    let coeffs = parts
        .into_iter()
        .map(|(a, b)| {
            RpaComplex::embed(a, b, filter.clone())
                .scale(&scale)
                .expect("same filter")
        })
        .collect();
    StepWave::new(grid.clone(), coeffs).expect("matching dimensions")
}

/// A random operator with small germ entries.
pub fn operator(rng: &mut ChaCha8Rng, grid: &Grid) -> GridOperator {
    let filter = grid.filter();
    let m = grid.interval_count();
    let matrix = (0..m)
        .map(|_| (0..m).map(|_| entry_complex(rng, filter)).collect())
        .collect();
    GridOperator::new(grid.clone(), matrix).expect("matching dimensions")
}

/// A random Hermitian operator for a grid with rational lengths:
/// `a_ji = conj(a_ij)·w_i/w_j` with a real diagonal.
pub fn hermitian(rng: &mut ChaCha8Rng, grid: &Grid) -> GridOperator {
    let filter = grid.filter().clone();
    let w = grid.lengths();
    let m = grid.interval_count();
    let mut matrix = vec![vec![RpaComplex::zero(filter.clone()); m]; m];
    for i in 0..m {
        let diag = RpaReal::new(filter.clone(), small_germ(rng)).expect("integer exponents");
        matrix[i][i] = RpaComplex::from_real(diag);
        for j in (i + 1)..m {
            let upper = entry_complex(rng, &filter);
            let ratio_w = w[i]
                .checked_div(&w[j])
                .expect("rational lengths are invertible");
            matrix[j][i] = upper.conj().scale(&ratio_w).expect("same filter");
            matrix[i][j] = upper;
        }
    }
    GridOperator::new(grid.clone(), matrix).expect("matching dimensions")
}

/// A nonzero scalar cycling through ordinary, infinitesimal, and
/// infinitely large values (with an imaginary variant).
pub fn nonzero_scalar_spread(rng: &mut ChaCha8Rng, filter: &FilterSpec, case: u64) -> RpaComplex {
    let omega = RpaReal::omega(filter.clone());
    match case % 4 {
        0 => RpaComplex::embed(nonzero_rational(rng), rational(rng), filter.clone()),
        1 => RpaComplex::from_real(omega.try_invert().expect("omega is invertible")),
        2 => RpaComplex::from_real(omega),
        _ => RpaComplex::from_imag(omega),
    }
}

pub fn pauli_x(grid: &Grid) -> GridOperator {
    let f = grid.filter().clone();
    GridOperator::new(
        grid.clone(),
        vec![
            vec![RpaComplex::zero(f.clone()), RpaComplex::one(f.clone())],
            vec![RpaComplex::one(f.clone()), RpaComplex::zero(f)],
        ],
    )
    .expect("2x2 on a 2-interval grid")
}

pub fn pauli_y(grid: &Grid) -> GridOperator {
    let f = grid.filter().clone();
    GridOperator::new(
        grid.clone(),
        vec![
            vec![
                RpaComplex::zero(f.clone()),
                RpaComplex::from_ints(0, -1, f.clone()),
            ],
            vec![RpaComplex::i(f.clone()), RpaComplex::zero(f)],
        ],
    )
    .expect("2x2 on a 2-interval grid")
}

pub fn pauli_z(grid: &Grid) -> GridOperator {
    let f = grid.filter().clone();
    GridOperator::new(
        grid.clone(),
        vec![
            vec![RpaComplex::one(f.clone()), RpaComplex::zero(f.clone())],
            vec![RpaComplex::zero(f.clone()), RpaComplex::from_ints(-1, 0, f)],
        ],
    )
    .expect("2x2 on a 2-interval grid")
}
