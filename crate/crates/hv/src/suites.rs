//! Seeded randomized property suites over exact arithmetic.
//!
//! Each suite draws its cases from its own ChaCha stream of the run seed and
//! stops at the first counterexample, which is kept as a human-readable
//! string for the report.

use hv_core::shapovalov::ShapovalovForm;
use hv_core::verma::{basis_of_degree, FactorKind};
use hv_core::{
    Generator, HighestWeight, LieElement, ModuleVector, Monomial, Rational, VermaModule,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::sampling::{level_zero_weight, rng, small_rational};

/// Cases run per suite.
pub const DEFAULT_CASES: usize = 200;

type Vector = ModuleVector<Rational>;
type Element = LieElement<Rational>;
type CaseResult = Result<(), String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

struct Suite {
    name: &'static str,
    case: fn(&mut ChaCha8Rng) -> CaseResult,
}

const SUITES: &[Suite] = &[
    Suite {
        name: "jacobi",
        case: jacobi,
    },
    Suite {
        name: "sigma-anti-automorphism",
        case: sigma_anti_automorphism,
    },
    Suite {
        name: "module-axiom",
        case: module_axiom,
    },
    Suite {
        name: "shapovalov-contravariance",
        case: contravariance,
    },
    Suite {
        name: "degree-orthogonality",
        case: orthogonality,
    },
    Suite {
        name: "i-degree-containment",
        case: i_degree_containment,
    },
    Suite {
        name: "pivot-i-on-lowest-l",
        case: pivot_i_action,
    },
    Suite {
        name: "pivot-l-on-lowest-i",
        case: pivot_l_action,
    },
];

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|s| s.name)
}

/// Runs every suite with `cases` cases drawn from `seed`.
pub fn run_all(seed: u64, cases: usize) -> Vec<SuiteOutcome> {
    SUITES
        .iter()
        .enumerate()
        .map(|(i, suite)| run_suite(suite, seed, i as u64 + 100, cases))
        .collect()
}

fn run_suite(suite: &Suite, seed: u64, stream: u64, cases: usize) -> SuiteOutcome {
    let mut r = rng(seed, stream);
    for done in 0..cases {
        if let Err(msg) = (suite.case)(&mut r) {
            return SuiteOutcome {
                name: suite.name,
                cases: done + 1,
                passed: false,
                counterexample: Some(msg),
            };
        }
    }
    SuiteOutcome {
        name: suite.name,
        cases,
        passed: true,
        counterexample: None,
    }
}

fn any_weight(r: &mut ChaCha8Rng) -> HighestWeight<Rational> {
    HighestWeight::new(
        small_rational(r),
        small_rational(r),
        small_rational(r),
        small_rational(r),
        small_rational(r),
    )
}

fn generator(r: &mut ChaCha8Rng, max: i64) -> Generator {
    match r.gen_range(0..10) {
        0 => *[Generator::CL, Generator::CLI, Generator::CI]
            .choose(r)
            .unwrap(),
        1..=5 => Generator::L(r.gen_range(-max..=max)),
        _ => Generator::I(r.gen_range(-max..=max)),
    }
}

fn element(r: &mut ChaCha8Rng, max: i64) -> Element {
    let mut x = Element::zero();
    for _ in 0..r.gen_range(1..=3) {
        x.add_term(generator(r, max), small_rational(r));
    }
    x
}

/// A single-degree element: a combination of `L(j)`, `I(j)` and, for
/// `j = 0`, central terms.
fn graded_element(r: &mut ChaCha8Rng, j: i64) -> Element {
    let mut x = Element::zero();
    x.add_term(Generator::L(j), small_rational(r));
    x.add_term(Generator::I(j), small_rational(r));
    if j == 0 {
        x.add_term(Generator::CLI, small_rational(r));
    }
    x
}

/// Random nonzero combination of monomials satisfying `keep`, of degree `d`.
fn vector_where(r: &mut ChaCha8Rng, d: u32, keep: impl Fn(&Monomial) -> bool) -> Vector {
    let pool: Vec<Monomial> = basis_of_degree(d).into_iter().filter(|m| keep(m)).collect();
    if pool.is_empty() {
        return Vector::zero();
    }
    loop {
        let mut v = Vector::zero();
        for _ in 0..r.gen_range(1..=4) {
            v.add_term(pool.choose(r).unwrap().clone(), small_rational(r));
        }
        if !v.is_zero() {
            return v;
        }
    }
}

fn vector(r: &mut ChaCha8Rng, d: u32) -> Vector {
    vector_where(r, d, |_| true)
}

fn expect_eq<T: PartialEq + std::fmt::Display>(
    lhs: &T,
    rhs: &T,
    context: impl FnOnce() -> String,
) -> CaseResult {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {lhs} != {rhs}", context()))
    }
}

fn jacobi(r: &mut ChaCha8Rng) -> CaseResult {
    let (x, y, z) = (element(r, 6), element(r, 6), element(r, 6));
    let sum = x
        .bracket(&y.bracket(&z))
        .add(&y.bracket(&z.bracket(&x)))
        .add(&z.bracket(&x.bracket(&y)));
    expect_eq(&sum, &Element::zero(), || {
        format!("x = {x}, y = {y}, z = {z}")
    })
}

fn sigma_anti_automorphism(r: &mut ChaCha8Rng) -> CaseResult {
    let (x, y) = (element(r, 6), element(r, 6));
    expect_eq(
        &x.bracket(&y).sigma(),
        &y.sigma().bracket(&x.sigma()),
        || format!("σ([x, y]) vs [σ(y), σ(x)] for x = {x}, y = {y}"),
    )?;
    expect_eq(&x.sigma().sigma(), &x, || format!("σ²(x) vs x for x = {x}"))
}

fn module_axiom(r: &mut ChaCha8Rng) -> CaseResult {
    let m = VermaModule::new(any_weight(r));
    let (x, y) = (generator(r, 5), generator(r, 5));
    let d = r.gen_range(0..=5);
    let v = vector(r, d);
    let xy = m
        .apply_generator(x, &m.apply_generator(y, &v).map_err(err)?)
        .map_err(err)?;
    let yx = m
        .apply_generator(y, &m.apply_generator(x, &v).map_err(err)?)
        .map_err(err)?;
    let bracket = hv_core::algebra::bracket_generators::<Rational>(x, y);
    let rhs = m.apply_element(&bracket, &v).map_err(err)?;
    expect_eq(&xy.sub(&yx), &rhs, || {
        format!("x = {x}, y = {y}, v = {v}, weight = {:?}", m.weight())
    })
}

fn contravariance(r: &mut ChaCha8Rng) -> CaseResult {
    contravariance_with(r, true)
}

/// With `twisted = false` the left argument is read in the module itself,
/// which breaks the identity for `x` with an `I(0)` or `C_LI` component.
fn contravariance_with(r: &mut ChaCha8Rng, twisted: bool) -> CaseResult {
    let m = VermaModule::new(any_weight(r));
    let form = ShapovalovForm::new(&m);
    let left = if twisted {
        form.left_module()
    } else {
        VermaModule::new(m.weight().clone())
    };
    let j = r.gen_range(-3..=3i64);
    let x = graded_element(r, j);
    let du = r.gen_range(0..=3u32);
    let u = vector(r, du);
    let dv = du as i64 - j;
    let dv = if dv >= 0 {
        dv as u32
    } else {
        r.gen_range(0..=3)
    };
    let v = vector(r, dv);
    let lhs = form.pair(&left.apply_element(&x, &u).map_err(err)?, &v);
    let rhs = form.pair(&u, &m.apply_element(&x.sigma(), &v).map_err(err)?);
    expect_eq(&lhs, &rhs, || {
        format!("x = {x}, u = {u}, v = {v}, weight = {:?}", m.weight())
    })
}

fn orthogonality(r: &mut ChaCha8Rng) -> CaseResult {
    let m = VermaModule::new(any_weight(r));
    let form = ShapovalovForm::new(&m);
    let a = r.gen_range(0..=4u32);
    let b = (a + r.gen_range(1..=3)) % 5;
    let (u, v) = (vector(r, a), vector(r, b));
    expect_eq(&form.pair(&u, &v), &Rational::zero(), || {
        format!("u = {u}, v = {v}")
    })
}

fn i_degrees(v: &Vector) -> Vec<usize> {
    v.i_degree_split().components.keys().copied().collect()
}

fn i_degree_containment(r: &mut ChaCha8Rng) -> CaseResult {
    let m = VermaModule::new(level_zero_weight(r));
    let d = r.gen_range(1..=5u32);
    let k = r.gen_range(0..=d as usize);
    let w = vector_where(r, d, |x| x.i_degree() == k);
    if w.is_zero() {
        return Ok(());
    }
    let n = r.gen_range(1..=5i64);
    let iw = m.apply_generator(Generator::I(n), &w).map_err(err)?;
    if !i_degrees(&iw).iter().all(|&j| j == k || j == k + 1) {
        return Err(format!(
            "I({n}) w leaves I-degrees {{{k}, {}}} for w = {w}: {iw}",
            k + 1
        ));
    }
    let lw = m.apply_generator(Generator::L(n), &w).map_err(err)?;
    if !i_degrees(&lw).iter().all(|&j| j + 1 == k || j == k) {
        return Err(format!(
            "L({n}) w leaves I-degrees {{k-1, k}} with k = {k} for w = {w}: {lw}"
        ));
    }
    Ok(())
}

/// Adds random terms of I-degree above `k` to `low`.
fn with_higher_terms(r: &mut ChaCha8Rng, low: Vector, d: u32, k: usize) -> Vector {
    let extra = vector_where(r, d, |x| x.i_degree() > k);
    low.add(&extra)
}

fn pivot_i_action(r: &mut ChaCha8Rng) -> CaseResult {
    let hw = level_zero_weight(r);
    let m = VermaModule::new(hw.clone());
    let d = r.gen_range(1..=5u32);
    let k = r.gen_range(0..d as usize);
    let low = vector_where(r, d, |x| x.i_degree() == k && !x.is_pure_i());
    if low.is_zero() {
        return Ok(());
    }
    let w = with_higher_terms(r, low.clone(), d, k);
    let n = low
        .monomials()
        .filter_map(|x| x.l_part().last().copied())
        .min()
        .expect("lowest part has L factors");
    let iw = m.apply_generator(Generator::I(n as i64), &w).map_err(err)?;
    let factor =
        Rational::from_int(n) * &(hw.h_i.clone() + Rational::from_int(n as i64 - 1) * &hw.c_li);
    let expected = low.partial_derivative(FactorKind::L, n).scale(&factor);
    expect_eq(&iw.i_component(k), &expected, || {
        format!("n = {n}, w = {w}, weight = {hw:?}")
    })
}

fn pivot_l_action(r: &mut ChaCha8Rng) -> CaseResult {
    let hw = level_zero_weight(r);
    let m = VermaModule::new(hw.clone());
    let d = r.gen_range(1..=5u32);
    let k = r.gen_range(1..=d as usize);
    let low = vector_where(r, d, |x| x.i_degree() == k && x.is_pure_i());
    if low.is_zero() {
        return Ok(());
    }
    let w = with_higher_terms(r, low.clone(), d, k);
    let big = low
        .monomials()
        .filter_map(|x| x.i_part().first().copied())
        .max()
        .expect("lowest part has I factors");
    let lw = m
        .apply_generator(Generator::L(big as i64), &w)
        .map_err(err)?;
    let factor =
        Rational::from_int(big) * &(hw.h_i.clone() - Rational::from_int(big as i64 + 1) * &hw.c_li);
    let expected = low.partial_derivative(FactorKind::I, big).scale(&factor);
    expect_eq(&lw.i_component(k - 1), &expected, || {
        format!("m = {big}, w = {w}, weight = {hw:?}")
    })
}

fn err(e: hv_core::Error) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_a_few_cases() {
        for outcome in run_all(3, 20) {
            assert!(outcome.passed, "{outcome:?}");
        }
    }

    #[test]
    fn untwisted_left_module_is_caught() {
        let mut r = rng(0, 0);
        let failures = (0..200)
            .filter(|_| contravariance_with(&mut r, false).is_err())
            .count();
        assert!(failures > 0);
    }

    #[test]
    fn wrong_pivot_factor_is_caught() {
        // Replacing the L-pivot by the I-pivot factor must break the identity.
        let hw = HighestWeight::ints(1, 5, 2, 1, 0);
        let m = VermaModule::new(hw);
        let w = ModuleVector::from(Monomial::new(vec![2], vec![]));
        let lw = m.apply_generator(Generator::L(2), &w).unwrap();
        let wrong = Rational::from_int(2) * &Rational::from_int(5 + 2 - 1);
        assert_ne!(lw.i_component(0), ModuleVector::vacuum().scale(&wrong));
        let right = Rational::from_int(2) * &Rational::from_int(5 - 3);
        assert_eq!(lw.i_component(0), ModuleVector::vacuum().scale(&right));
    }

    #[test]
    fn outcomes_are_deterministic() {
        assert_eq!(run_all(11, 5), run_all(11, 5));
    }
}
