//! Deterministic, seeded property campaigns.
//!
//! Each suite fixes its own filter protocol and draws cases from a
//! ChaCha stream, so equal `(cases, seed)` inputs always reproduce the
//! same report — including the first counterexample, which is serialized
//! as labeled values in the round-trippable text grammar.
//!
//! The suites are the machine-checkable content of the library's claims:
//! ring and order laws, the principal-filter oracle, pointwise sampling,
//! the complex-component laws, wave-space laws, the uncertainty relation,
//! its proof chain, and the boundedness/commutator results. The
//! deliberately false `demo_false_claim` suite exists to exercise
//! counterexample reporting end to end.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::filters::{FilterSpec, IndexSet};
use crate::scalars::{ratio, Classification, Germ, PuiseuxPoly, RpaComplex, RpaReal};
use crate::waves::{Grid, StepWave};

pub mod gen;

/// Outcome of one suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub passed: u64,
    pub failed: u64,
    pub first_counterexample: Option<Counterexample>,
}

/// The first failing check of a run, with its inputs rendered in the text
/// grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub case_index: u64,
    pub check: String,
    pub values: Vec<(String, String)>,
}

/// All suite names accepted by [`run_suite`].
pub const SUITE_NAMES: &[&str] = &[
    "ring_axioms",
    "principal_oracle",
    "pointwise_oracle",
    "complex_laws",
    "wave_laws",
    "heisenberg",
    "proof_chain",
    "bounds_wintner",
    "relativity",
    "demo_false_claim",
];

/// Runs the named suite; `None` for unknown names.
pub fn run_suite(name: &str, cases: u64, seed: u64) -> Option<SuiteReport> {
    let report = match name {
        "ring_axioms" => ring_axioms(cases, seed),
        "principal_oracle" => principal_oracle(cases, seed),
        "pointwise_oracle" => pointwise_oracle(cases, seed),
        "complex_laws" => complex_laws(cases, seed),
        "wave_laws" => wave_laws(cases, seed),
        "heisenberg" => heisenberg(cases, seed),
        "proof_chain" => proof_chain(cases, seed),
        "bounds_wintner" => bounds_wintner(cases, seed),
        "relativity" => relativity(cases, seed),
        "demo_false_claim" => demo_false_claim(cases, seed),
        _ => return None,
    };
    Some(report)
}

/// The three canonical filters the campaigns cycle through.
pub fn canonical_filters() -> Vec<FilterSpec> {
    vec![
        FilterSpec::Frechet,
        FilterSpec::PrincipalAt(5),
        FilterSpec::superset_of(IndexSet::evens()).expect("evens are infinite"),
    ]
}

struct Campaign {
    suite: &'static str,
    cases: u64,
    passed: u64,
    failed: u64,
    first: Option<Counterexample>,
}

impl Campaign {
    fn new(suite: &'static str) -> Self {
        Campaign {
            suite,
            cases: 0,
            passed: 0,
            failed: 0,
            first: None,
        }
    }

    /// Records one check; `values` is only rendered on failure.
    fn check(
        &mut self,
        case_index: u64,
        check: &str,
        ok: bool,
        values: impl FnOnce() -> Vec<(String, String)>,
    ) {
        self.cases += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(Counterexample {
                    case_index,
                    check: check.to_string(),
                    values: values(),
                });
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite.to_string(),
            cases: self.cases,
            passed: self.passed,
            failed: self.failed,
            first_counterexample: self.first,
        }
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn show<T: std::fmt::Display>(label: &str, value: &T) -> (String, String) {
    (label.to_string(), value.to_string())
}

/// Ring axioms and order laws on random triples, per canonical filter.
fn ring_axioms(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("ring_axioms");
    for (fi, filter) in canonical_filters().into_iter().enumerate() {
        let mut rng = rng_for(seed, fi as u64);
        for case in 0..cases {
            let a = gen::real(&mut rng, &filter);
            let b = gen::real(&mut rng, &filter);
            let d = gen::real(&mut rng, &filter);
            let zero = RpaReal::zero(filter.clone());
            let one = RpaReal::one(filter.clone());
            let ok = (&(&a + &b) + &d) == (&a + &(&b + &d))
                && (&a + &b) == (&b + &a)
                && (&a + &zero) == a
                && (&a + &(-&a)).is_zero()
                && (&(&a * &b) * &d) == (&a * &(&b * &d))
                && (&a * &b) == (&b * &a)
                && (&a * &one) == a
                && (&a * &(&b + &d)) == (&(&a * &b) + &(&a * &d));
            c.check(case, &format!("ring axioms [{filter}]"), ok, || {
                vec![show("a", &a), show("b", &b), show("c", &d)]
            });

            let za = gen::complex(&mut rng, &filter);
            let zb = gen::complex(&mut rng, &filter);
            let zd = gen::complex(&mut rng, &filter);
            let czero = RpaComplex::zero(filter.clone());
            let cone = RpaComplex::one(filter.clone());
            let ok = (&(&za + &zb) + &zd) == (&za + &(&zb + &zd))
                && (&za + &zb) == (&zb + &za)
                && (&za + &czero) == za
                && (&za + &(-&za)).is_zero()
                && (&(&za * &zb) * &zd) == (&za * &(&zb * &zd))
                && (&za * &zb) == (&zb * &za)
                && (&za * &cone) == za
                && (&za * &(&zb + &zd)) == (&(&za * &zb) + &(&za * &zd));
            c.check(case, &format!("complex ring axioms [{filter}]"), ok, || {
                vec![show("a", &za), show("b", &zb), show("c", &zd)]
            });

            // order laws: reflexivity, antisymmetry, transitivity along a
            // constructed chain, and compatibility with + and nonneg ·
            let p = gen::nonneg(&mut rng, &filter);
            let q = gen::nonneg(&mut rng, &filter);
            let a_p = &a + &p;
            let a_pq = &a_p + &q;
            let refl = a.leq(&a).unwrap();
            let antisym = !(a.leq(&b).unwrap() && b.leq(&a).unwrap()) || a.eq_elem(&b).unwrap();
            let trans = a.leq(&a_p).unwrap() && a_p.leq(&a_pq).unwrap() && a.leq(&a_pq).unwrap();
            let add_compat = (&a + &d).leq(&(&a_p + &d)).unwrap();
            let mul_compat = (&a * &q).leq(&(&a_p * &q)).unwrap();
            let ok = refl && antisym && trans && add_compat && mul_compat;
            c.check(case, &format!("order laws [{filter}]"), ok, || {
                vec![
                    show("a", &a),
                    show("b", &b),
                    show("c", &d),
                    show("p", &p),
                    show("q", &q),
                ]
            });
        }
    }
    c.finish()
}

/// Under a principal filter every quotient computation agrees with plain
/// rational/complex arithmetic evaluated at the point.
fn principal_oracle(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("principal_oracle");
    for (ki, k) in [1u64, 7, 100].into_iter().enumerate() {
        let filter = FilterSpec::PrincipalAt(k);
        let mut rng = rng_for(seed, 100 + ki as u64);
        for case in 0..cases {
            // a small random computation over a value stack, mirrored on
            // plain (re, im) rationals
            let mut stack: Vec<(RpaComplex, (BigRational, BigRational))> = Vec::new();
            let mut log = Vec::new();
            for _ in 0..2 {
                push_random(&mut rng, &filter, k, &mut stack, &mut log);
            }
            let steps = rng.gen_range(3..=8);
            for _ in 0..steps {
                apply_random_op(&mut rng, &filter, k, &mut stack, &mut log);
            }
            let (value, (ore, oim)) = stack.pop().expect("stack never empties");
            let expected = RpaComplex::embed(ore.clone(), oim.clone(), filter.clone());
            let ok = value.eq_elem(&expected).unwrap();
            c.check(case, &format!("principal oracle [k={k}]"), ok, || {
                let mut values = vec![show("computed", &value), show("expected", &expected)];
                values.extend(
                    log.iter()
                        .enumerate()
                        .map(|(i, s)| (format!("step{i}"), s.clone())),
                );
                values
            });
        }
    }
    c.finish()
}

fn push_random(
    rng: &mut ChaCha8Rng,
    filter: &FilterSpec,
    k: u64,
    stack: &mut Vec<(RpaComplex, (BigRational, BigRational))>,
    log: &mut Vec<String>,
) {
    let re = gen::germ(rng);
    let im = gen::germ(rng);
    let oracle = (
        re.eval(k).as_rational().expect("integer exponents"),
        im.eval(k).as_rational().expect("integer exponents"),
    );
    let value = RpaComplex::new(
        RpaReal::new(filter.clone(), re.clone()).expect("integer exponents"),
        RpaReal::new(filter.clone(), im.clone()).expect("integer exponents"),
    )
    .unwrap();
    log.push(format!("push ({re}) + ({im})*i"));
    stack.push((value, oracle));
}

fn apply_random_op(
    rng: &mut ChaCha8Rng,
    filter: &FilterSpec,
    k: u64,
    stack: &mut Vec<(RpaComplex, (BigRational, BigRational))>,
    log: &mut Vec<String>,
) {
    let choice = rng.gen_range(0..8u8);
    if choice < 3 || stack.len() < 2 {
        if choice == 0 || stack.is_empty() {
            push_random(rng, filter, k, stack, log);
            return;
        }
        // fallthrough: unary op on the top of the stack
        // unary ops
        let (v, (a, b)) = stack.pop().unwrap();
        let (v2, o2, name) = match choice {
            1 => (v.conj(), (a, -b), "conj"),
            _ => {
                let abs = v.abs_squared();
                (
                    RpaComplex::from_real(abs),
                    (&a * &a + &b * &b, BigRational::zero()),
                    "abs2",
                )
            }
        };
        log.push(name.to_string());
        stack.push((v2, o2));
        return;
    }
    let (v1, (a1, b1)) = stack.pop().unwrap();
    let (v2, (a2, b2)) = stack.pop().unwrap();
    let (v, o, name) = match choice {
        3 | 4 => (&v1 + &v2, (&a1 + &a2, &b1 + &b2), "add"),
        5 => (&v1 - &v2, (&a1 - &a2, &b1 - &b2), "sub"),
        _ => (
            &v1 * &v2,
            (&a1 * &a2 - &b1 * &b2, &a1 * &b2 + &b1 * &a2),
            "mul",
        ),
    };
    log.push(name.to_string());
    stack.push((v, o));
}

/// Identities asserted exactly on germs must agree with direct rational
/// arithmetic at sampled indices `k·modulus + r`, `k = 10…30`.
fn pointwise_oracle(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("pointwise_oracle");
    let filters = canonical_filters();
    let mut rng = rng_for(seed, 200);
    for case in 0..cases {
        let filter = &filters[(case % filters.len() as u64) as usize];
        let z = gen::complex(&mut rng, filter);
        let w = gen::complex(&mut rng, filter);
        let u = gen::real(&mut rng, filter);
        let modulus = [
            z.re_part().germ().modulus(),
            z.im_part().germ().modulus(),
            w.re_part().germ().modulus(),
            w.im_part().germ().modulus(),
            u.germ().modulus(),
        ]
        .into_iter()
        .fold(1u64, num_integer::lcm);
        let indices: Vec<u64> = (0..40)
            .map(|_| rng.gen_range(10..=30u64) * modulus + rng.gen_range(0..modulus))
            .collect();

        match case % 5 {
            0 => {
                // distributivity: (z+w)·u = z·u + w·u, germ-exact and pointwise
                let uc = RpaComplex::from_real(u.clone());
                let lhs = &(&z + &w) * &uc;
                let rhs = &(&z * &uc) + &(&w * &uc);
                let mut ok = lhs == rhs;
                for &n in &indices {
                    let (zr, zi) = z.eval_at(n).unwrap();
                    let (wr, wi) = w.eval_at(n).unwrap();
                    let uv = u.eval_at(n).unwrap();
                    let (lr, li) = lhs.eval_at(n).unwrap();
                    ok &= lr == (&zr + &wr) * &uv && li == (&zi + &wi) * &uv;
                }
                c.check(
                    case,
                    &format!("pointwise distributivity [{filter}]"),
                    ok,
                    || vec![show("z", &z), show("w", &w), show("u", &u)],
                );
            }
            1 => {
                // conj(z)·z = |z|² pointwise
                let lhs = &z.conj() * &z;
                let mut ok =
                    lhs.im_part().is_zero() && lhs.re_part().eq_elem(&z.abs_squared()).unwrap();
                for &n in &indices {
                    let (zr, zi) = z.eval_at(n).unwrap();
                    let (lr, _) = lhs.eval_at(n).unwrap();
                    ok &= lr == &zr * &zr + &zi * &zi;
                }
                c.check(
                    case,
                    &format!("pointwise conj product [{filter}]"),
                    ok,
                    || vec![show("z", &z)],
                );
            }
            2 => {
                // |z|² − Re(z)² ≥ 0 germ-wise, and ≥ 0 at every sampled index
                let re2 = z.re_part().checked_mul(z.re_part()).unwrap();
                let diff = z.abs_squared().checked_sub(&re2).unwrap();
                let mut ok = diff.is_nonneg();
                for &n in &indices {
                    ok &= !diff.eval_at(n).unwrap().is_negative();
                }
                c.check(
                    case,
                    &format!("pointwise component bound [{filter}]"),
                    ok,
                    || vec![show("z", &z)],
                );
            }
            3 => {
                // |z·w|² = |z|²·|w|² pointwise
                let lhs = (&z * &w).abs_squared();
                let rhs = z.abs_squared().checked_mul(&w.abs_squared()).unwrap();
                let mut ok = lhs.eq_elem(&rhs).unwrap();
                for &n in &indices {
                    ok &= lhs.eval_at(n).unwrap() == rhs.eval_at(n).unwrap();
                }
                c.check(
                    case,
                    &format!("pointwise norm multiplicativity [{filter}]"),
                    ok,
                    || vec![show("z", &z), show("w", &w)],
                );
            }
            _ => {
                // triangle inequality |z+w| ≤ |z| + |w| at each index, via
                // squared comparisons on exact rationals
                let sum = &z + &w;
                let mut ok = true;
                for &n in &indices {
                    let s = sum.abs_squared().eval_at(n).unwrap();
                    let a = z.abs_squared().eval_at(n).unwrap();
                    let b = w.abs_squared().eval_at(n).unwrap();
                    ok &= sqrt_leq_sum_of_sqrts(&s, &a, &b);
                }
                c.check(
                    case,
                    &format!("pointwise triangle inequality [{filter}]"),
                    ok,
                    || vec![show("z", &z), show("w", &w)],
                );
            }
        }
    }
    c.finish()
}

/// Decides `√s ≤ √a + √b` for nonnegative rationals by squaring twice:
/// `s ≤ a + b + 2√(ab)` ⟺ `s − a − b ≤ 0` or `(s − a − b)² ≤ 4ab`.
pub fn sqrt_leq_sum_of_sqrts(s: &BigRational, a: &BigRational, b: &BigRational) -> bool {
    let t = s - a - b;
    if !t.is_positive() {
        return true;
    }
    &t * &t <= ratio::int(4) * a * b
}

/// Component laws of ℂ_F and the zero-divisor demonstration.
fn complex_laws(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("complex_laws");
    for (fi, filter) in canonical_filters().into_iter().enumerate() {
        let mut rng = rng_for(seed, 300 + fi as u64);
        for case in 0..cases {
            let z = gen::complex(&mut rng, &filter);
            // a complex element is zero iff both components are
            let ok = z.is_zero() == (z.re_part().is_zero() && z.im_part().is_zero())
                && z.eq_elem(&RpaComplex::zero(filter.clone())).unwrap() == z.is_zero();
            c.check(
                case,
                &format!("zero iff components zero [{filter}]"),
                ok,
                || vec![show("z", &z)],
            );

            // conj-fixed elements are exactly the embedded reals
            let ok = (z.conj() == z) == z.im_part().is_zero() && z.conj().conj() == z;
            c.check(
                case,
                &format!("conjugation fixes reals [{filter}]"),
                ok,
                || vec![show("z", &z)],
            );

            // |z|² = 0 ⟺ z = 0, including the literal zero
            let ok = z.abs_squared().is_zero() == z.is_zero()
                && RpaComplex::zero(filter.clone()).abs_squared().is_zero();
            c.check(
                case,
                &format!("abs-squared definiteness [{filter}]"),
                ok,
                || vec![show("z", &z)],
            );

            // squared component bounds |Re z|², |Im z|² ≤ |z|²
            let abs2 = z.abs_squared();
            let re2 = z.re_part().checked_mul(z.re_part()).unwrap();
            let im2 = z.im_part().checked_mul(z.im_part()).unwrap();
            let ok = re2.leq(&abs2).unwrap() && im2.leq(&abs2).unwrap();
            c.check(
                case,
                &format!("squared component bounds [{filter}]"),
                ok,
                || vec![show("z", &z)],
            );
        }

        // zero-divisor demo: even·odd = 0 with both factors nonzero under
        // Fréchet; under the collapsing filters a factor degenerates
        let even = RpaReal::new(
            filter.clone(),
            Germ::new(
                2,
                vec![PuiseuxPoly::constant(ratio::int(1)), PuiseuxPoly::zero()],
            ),
        )
        .unwrap();
        let odd = RpaReal::new(
            filter.clone(),
            Germ::new(
                2,
                vec![PuiseuxPoly::zero(), PuiseuxPoly::constant(ratio::int(1))],
            ),
        )
        .unwrap();
        let product_zero = (&even * &odd).is_zero();
        let both_nonzero = !even.is_zero() && !odd.is_zero();
        let ok = match &filter {
            FilterSpec::Frechet => product_zero && both_nonzero,
            _ => product_zero && !both_nonzero,
        };
        c.check(cases, &format!("zero divisor demo [{filter}]"), ok, || {
            vec![show("even", &even), show("odd", &odd)]
        });
    }
    c.finish()
}

/// Scalar-product laws, squared Schwarz, refinement invariance, and the
/// infinite-interval integral.
fn wave_laws(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("wave_laws");
    for (fi, filter) in canonical_filters().into_iter().enumerate() {
        let mut rng = rng_for(seed, 400 + fi as u64);
        for case in 0..cases {
            let m = rng.gen_range(1..=3);
            let grid = gen::grid(&mut rng, &filter, m);
            let psi = gen::wave(&mut rng, &grid);
            let chi1 = gen::wave(&mut rng, &grid);
            let chi2 = gen::wave(&mut rng, &grid);
            let a = gen::complex(&mut rng, &filter);
            let b = gen::complex(&mut rng, &filter);

            // linearity in the second argument
            let combo = chi1
                .scalar_mul(&a)
                .unwrap()
                .add(&chi2.scalar_mul(&b).unwrap())
                .unwrap();
            let lhs = psi.inner_product(&combo).unwrap();
            let rhs = &(&a * &psi.inner_product(&chi1).unwrap())
                + &(&b * &psi.inner_product(&chi2).unwrap());
            c.check(
                case,
                &format!("inner product linearity [{filter}]"),
                lhs == rhs,
                || {
                    vec![
                        show("psi", &psi),
                        show("chi1", &chi1),
                        show("chi2", &chi2),
                        show("a", &a),
                        show("b", &b),
                    ]
                },
            );

            // conjugate symmetry
            let ok = psi.inner_product(&chi1).unwrap() == chi1.inner_product(&psi).unwrap().conj();
            c.check(case, &format!("conjugate symmetry [{filter}]"), ok, || {
                vec![show("psi", &psi), show("chi", &chi1)]
            });

            // positivity and definiteness of the self-product
            let self_prod = psi.inner_product(&psi).unwrap();
            let ok = self_prod.im_part().is_zero()
                && self_prod.re_part().is_nonneg()
                && (self_prod.is_zero() == psi.is_zero())
                && StepWave::zero(grid.clone())
                    .inner_product(&StepWave::zero(grid.clone()))
                    .unwrap()
                    .is_zero();
            c.check(
                case,
                &format!("inner product positivity [{filter}]"),
                ok,
                || vec![show("psi", &psi)],
            );

            // squared Schwarz inequality
            let ok = psi.schwarz_holds(&chi1).unwrap();
            c.check(case, &format!("squared Schwarz [{filter}]"), ok, || {
                vec![show("psi", &psi), show("chi", &chi1)]
            });

            // refinement invariance of ∫ and ⟨·,·⟩ against an independent grid
            let m2 = rng.gen_range(1..=3);
            let other_grid = gen::grid(&mut rng, &filter, m2);
            let partner = gen::wave(&mut rng, &other_grid);
            let (refined, coeffs, _) = psi.refine_common(&partner).unwrap();
            let refined_psi = StepWave::new(refined, coeffs).unwrap();
            let ok = refined_psi.integrate() == psi.integrate()
                && refined_psi.inner_product(&chi1).unwrap() == psi.inner_product(&chi1).unwrap();
            c.check(
                case,
                &format!("refinement invariance [{filter}]"),
                ok,
                || vec![show("psi", &psi), show("partner", &partner)],
            );
        }

        // ∫ over [0, ω) of the 1/n-amplitude wave is exactly 1
        let omega_grid = Grid::new(vec![
            RpaReal::zero(filter.clone()),
            RpaReal::omega(filter.clone()),
        ]);
        let ok = match omega_grid {
            Ok(grid) => {
                let amp =
                    RpaComplex::from_real(RpaReal::omega(filter.clone()).try_invert().unwrap());
                let wave = StepWave::new(grid, vec![amp]).unwrap();
                wave.integrate()
                    .eq_elem(&RpaComplex::one(filter.clone()))
                    .unwrap()
            }
            Err(_) => false,
        };
        c.check(
            cases,
            &format!("infinite interval integral [{filter}]"),
            ok,
            Vec::new,
        );
    }
    c.finish()
}

/// The uncertainty relation on random Hermitian pairs and admissible
/// states, plus the exact equality cases.
fn heisenberg(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("heisenberg");
    for (fi, filter) in canonical_filters().into_iter().enumerate() {
        let mut rng = rng_for(seed, 500 + fi as u64);
        for case in 0..cases {
            let dim = rng.gen_range(2..=5);
            let grid = gen::rational_grid(&mut rng, &filter, dim);
            let a = gen::hermitian(&mut rng, &grid);
            let b = gen::hermitian(&mut rng, &grid);
            let psi = gen::admissible_state(&mut rng, &grid);
            let (holds, residual) = a.heisenberg_holds(&b, &psi).unwrap();
            c.check(
                case,
                &format!("uncertainty relation [{filter}]"),
                holds,
                || {
                    vec![
                        show("A", &a),
                        show("B", &b),
                        show("psi", &psi),
                        show("residual", &residual),
                    ]
                },
            );
        }

        // Pauli equality case: residual exactly 0, also with B germ-scaled
        let grid = Grid::from_ints(&[0, 1, 2], filter.clone()).unwrap();
        let sx = gen::pauli_x(&grid);
        let sy = gen::pauli_y(&grid);
        let up = StepWave::new(
            grid.clone(),
            vec![
                RpaComplex::one(filter.clone()),
                RpaComplex::zero(filter.clone()),
            ],
        )
        .unwrap();
        let (holds, residual) = sx.heisenberg_holds(&sy, &up).unwrap();
        c.check(
            cases,
            &format!("pauli equality [{filter}]"),
            holds && residual.is_zero(),
            || vec![show("residual", &residual)],
        );
        let scaled = sy
            .scalar_mul(&RpaComplex::from_real(
                RpaReal::omega(filter.clone()).try_invert().unwrap(),
            ))
            .unwrap();
        let (holds, residual) = sx.heisenberg_holds(&scaled, &up).unwrap();
        c.check(
            cases,
            &format!("pauli equality, germ-scaled [{filter}]"),
            holds && residual.is_zero(),
            || vec![show("residual", &residual)],
        );
    }
    c.finish()
}

/// The steps behind the uncertainty relation: real expectations,
/// centering, commutator invariance, and the centered self-product.
fn proof_chain(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("proof_chain");
    for (fi, filter) in canonical_filters().into_iter().enumerate() {
        let mut rng = rng_for(seed, 600 + fi as u64);
        for case in 0..cases {
            let dim = rng.gen_range(2..=4);
            let grid = gen::rational_grid(&mut rng, &filter, dim);
            let a = gen::hermitian(&mut rng, &grid);
            let b = gen::hermitian(&mut rng, &grid);
            let psi = gen::admissible_state(&mut rng, &grid);

            let ok = a.expectation_is_real(&psi).unwrap();
            c.check(
                case,
                &format!("hermitian expectation is real [{filter}]"),
                ok,
                || vec![show("A", &a), show("psi", &psi)],
            );

            let ok = a.variance(&psi).unwrap().is_nonneg();
            c.check(
                case,
                &format!("variance is nonnegative [{filter}]"),
                ok,
                || vec![show("A", &a), show("psi", &psi)],
            );

            // the weighted entry condition agrees with the definitional
            // route on random wave pairs
            let chi = gen::wave(&mut rng, &grid);
            let eta = gen::wave(&mut rng, &grid);
            let lhs = a.apply(&eta).unwrap().inner_product(&chi).unwrap();
            let rhs = eta.inner_product(&a.apply(&chi).unwrap()).unwrap();
            c.check(
                case,
                &format!("hermitian entry condition matches definition [{filter}]"),
                lhs == rhs,
                || vec![show("A", &a), show("eta", &eta), show("chi", &chi)],
            );

            let a1 = a.center(&psi).unwrap();
            let b1 = b.center(&psi).unwrap();
            c.check(
                case,
                &format!("centering preserves hermiticity [{filter}]"),
                a1.is_hermitian(),
                || vec![show("A", &a), show("psi", &psi)],
            );

            let ok = a1.commutator(&b1).unwrap() == a.commutator(&b).unwrap();
            c.check(
                case,
                &format!("commutator invariance [{filter}]"),
                ok,
                || vec![show("A", &a), show("B", &b), show("psi", &psi)],
            );

            // ⟨A₁ψ, A₁ψ⟩ / ⟨ψ,ψ⟩ = variance
            let image = a1.apply(&psi).unwrap();
            let raw = image.inner_product(&image).unwrap();
            let inv_norm = psi
                .inner_product(&psi)
                .unwrap()
                .re_part()
                .try_invert()
                .unwrap();
            let lhs = raw.re_part().checked_mul(&inv_norm).unwrap();
            let ok = raw.im_part().is_zero() && lhs == a.variance(&psi).unwrap();
            c.check(
                case,
                &format!("centered self-product is variance [{filter}]"),
                ok,
                || vec![show("A", &a), show("psi", &psi)],
            );
        }
    }
    c.finish()
}

/// Norm laws, bound certificates, the certificate combinators, trace
/// cyclicity, the non-commutation residual, and the power-commutator
/// telescoping identity.
fn bounds_wintner(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("bounds_wintner");
    for (fi, filter) in canonical_filters().into_iter().enumerate() {
        let mut rng = rng_for(seed, 700 + fi as u64);
        for case in 0..cases {
            let dim = rng.gen_range(2..=4);
            let grid = gen::grid(&mut rng, &filter, dim);
            let psi = gen::wave(&mut rng, &grid);
            let phi = gen::wave(&mut rng, &grid);
            let scalar = gen::complex(&mut rng, &filter);

            // norm homogeneity ‖cψ‖² = |c|²·‖ψ‖² and definiteness
            let scaled = psi.scalar_mul(&scalar).unwrap();
            let ok = scaled.norm_squared()
                == scalar
                    .abs_squared()
                    .checked_mul(&psi.norm_squared())
                    .unwrap();
            c.check(case, &format!("norm homogeneity [{filter}]"), ok, || {
                vec![show("c", &scalar), show("psi", &psi)]
            });
            let ok = psi.norm_squared().is_zero() == psi.is_zero()
                && StepWave::zero(grid.clone()).norm_squared().is_zero();
            c.check(case, &format!("norm definiteness [{filter}]"), ok, || {
                vec![show("psi", &psi)]
            });

            // triangle inequality via the pointwise oracle at sampled indices
            let sum = psi.add(&phi).unwrap();
            let mut ok = true;
            'outer: for _ in 0..40 {
                let n = rng.gen_range(10..=30u64) * 6 + rng.gen_range(0..6);
                let sup = |w: &StepWave| -> Option<BigRational> {
                    let mut best = BigRational::zero();
                    for coeff in w.coeffs() {
                        let v = coeff.abs_squared().eval_at(n).ok()?;
                        if v > best {
                            best = v;
                        }
                    }
                    Some(best)
                };
                // `None` would mean an irrational sample point; the integer
                // exponent pool keeps every sample rational
                if let (Some(s), Some(a), Some(b)) = (sup(&sum), sup(&psi), sup(&phi)) {
                    if !sqrt_leq_sum_of_sqrts(&s, &a, &b) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            c.check(
                case,
                &format!("norm triangle inequality, sampled [{filter}]"),
                ok,
                || vec![show("psi", &psi), show("phi", &phi)],
            );

            // exact triangle inequality for real nonnegative coefficients
            let rp = gen::real_nonneg_wave(&mut rng, &grid);
            let rq = gen::real_nonneg_wave(&mut rng, &grid);
            let sup_of = |w: &StepWave| {
                let mut acc = RpaReal::zero(filter.clone());
                for coeff in w.coeffs() {
                    acc = acc.classwise_max(coeff.re_part()).unwrap();
                }
                acc
            };
            let lhs = sup_of(&rp.add(&rq).unwrap());
            let rhs = &sup_of(&rp) + &sup_of(&rq);
            let ok = lhs.leq(&rhs).unwrap();
            c.check(
                case,
                &format!("norm triangle inequality, nonneg exact [{filter}]"),
                ok,
                || vec![show("psi", &rp), show("phi", &rq)],
            );

            // the row-sum certificate inequality, exact squared form
            let a = gen::operator(&mut rng, &grid);
            let b = gen::operator(&mut rng, &grid);
            let cert = a.bound_certificate();
            let ok = cert.bound().is_nonneg() && cert.certifies(&a, &psi).unwrap();
            c.check(case, &format!("bound certificate [{filter}]"), ok, || {
                vec![
                    show("A", &a),
                    show("psi", &psi),
                    show("bound", cert.bound()),
                ]
            });

            // upward closure of the certificate set
            let slack = gen::nonneg(&mut rng, &filter);
            let relaxed = cert.relaxed(&cert.bound().clone() + &slack).unwrap();
            let ok = relaxed.certifies(&a, &psi).unwrap();
            c.check(
                case,
                &format!("certificate upward closure [{filter}]"),
                ok,
                || vec![show("A", &a), show("slack", &slack)],
            );

            // certificate combinator inequalities
            let (sum_cert, scaled_cert, prod_cert) = a.bound_combinators(&b, &scalar).unwrap();
            let ka = a.bound_certificate().bound().clone();
            let kb = b.bound_certificate().bound().clone();
            let ok = sum_cert.bound().leq(&(&ka + &kb)).unwrap()
                && scaled_cert
                    .bound()
                    .leq(&(&scalar.abs_one_norm() * &ka))
                    .unwrap()
                && prod_cert.bound().leq(&(&ka * &kb)).unwrap();
            c.check(case, &format!("bound combinators [{filter}]"), ok, || {
                vec![show("A", &a), show("B", &b), show("c", &scalar)]
            });

            // trace cyclicity
            let ok = a.commutator(&b).unwrap().trace().is_zero();
            c.check(case, &format!("trace of commutator [{filter}]"), ok, || {
                vec![show("A", &a), show("B", &b)]
            });

            // the non-commutation residual is never zero for c ≠ 0,
            // including infinitesimal and infinitely large c
            let c_nonzero = gen::nonzero_scalar_spread(&mut rng, &filter, case);
            let residual = a.wintner_residual(&b, &c_nonzero).unwrap();
            let expected_trace = c_nonzero
                .scale(&RpaReal::from_int(-(dim as i64), filter.clone()))
                .unwrap();
            let ok = !residual.is_zero() && residual.trace() == expected_trace;
            c.check(case, &format!("wintner residual [{filter}]"), ok, || {
                vec![show("A", &a), show("B", &b), show("c", &c_nonzero)]
            });

            // the telescoping identity behind the induction step
            let n = rng.gen_range(1..=5);
            let ok = a.power_commutator_residual(&b, n).unwrap().is_zero();
            c.check(
                case,
                &format!("power commutator identity [{filter}]"),
                ok,
                || {
                    vec![
                        show("A", &a),
                        show("B", &b),
                        (String::from("n"), n.to_string()),
                    ]
                },
            );
        }
    }
    c.finish()
}

/// The relativity of the trichotomy: rescaling by a unit moves elements
/// between the infinitesimal/finite/infinitely-large classes.
fn relativity(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("relativity");
    let _ = seed;
    let noncollapsing = [
        FilterSpec::Frechet,
        FilterSpec::superset_of(IndexSet::evens()).expect("evens are infinite"),
    ];
    for filter in &noncollapsing {
        for case in 0..cases.max(1) {
            let one = RpaReal::one(filter.clone());
            let omega = RpaReal::omega(filter.clone());
            let omega_sq = &omega * &omega;
            let ok = one.classify() == Classification::Finite
                && one.rescale(&omega).unwrap().classify() == Classification::Infinitesimal
                && omega_sq.rescale(&omega).unwrap().classify() == Classification::InfinitelyLarge;
            c.check(
                case,
                &format!("trichotomy is unit-relative [{filter}]"),
                ok,
                Vec::new,
            );

            // an infinitesimal in its own units is finite
            let h0 = omega.try_invert().unwrap();
            let ok = h0.classify() == Classification::Infinitesimal
                && h0.rescale(&h0).unwrap().classify() == Classification::Finite;
            c.check(
                case,
                &format!("infinitesimal in own units [{filter}]"),
                ok,
                Vec::new,
            );
        }
    }
    // under a principal filter the trichotomy collapses: everything nonzero
    // is finite, so the same rescalings land in Finite
    let principal = FilterSpec::PrincipalAt(5);
    let one = RpaReal::one(principal.clone());
    let omega = RpaReal::omega(principal.clone());
    let ok = one.rescale(&omega).unwrap().classify() == Classification::Finite;
    c.check(0, "principal filter collapses the trichotomy", ok, Vec::new);
    c.finish()
}

/// A deliberately false claim — "every element is nonnegative" — used to
/// demonstrate counterexample reporting and the fuzz exit path.
fn demo_false_claim(cases: u64, seed: u64) -> SuiteReport {
    let mut c = Campaign::new("demo_false_claim");
    let mut rng = rng_for(seed, 900);
    let filter = FilterSpec::Frechet;
    for case in 0..cases {
        let x = gen::real(&mut rng, &filter);
        c.check(
            case,
            "every element is nonnegative (false)",
            x.is_nonneg(),
            || vec![show("x", &x)],
        );
    }
    c.finish()
}
