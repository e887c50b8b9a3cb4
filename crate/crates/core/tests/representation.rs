//! Lie algebra and module identities on random inputs.

use hv_core::algebra::bracket_generators;
use hv_core::shapovalov::ShapovalovForm;
use hv_core::verma::{basis_of_degree, FactorKind};
use hv_core::{
    Generator, HighestWeight, LieElement, ModuleVector, Monomial, Rational, VermaModule,
};
use proptest::prelude::*;

type Element = LieElement<Rational>;
type Vector = ModuleVector<Rational>;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn generator(max: i64) -> impl Strategy<Value = Generator> {
    prop_oneof![
        1 => Just(Generator::CL),
        1 => Just(Generator::CLI),
        1 => Just(Generator::CI),
        6 => (-max..=max).prop_map(Generator::L),
        6 => (-max..=max).prop_map(Generator::I),
    ]
}

fn element(max: i64) -> impl Strategy<Value = Element> {
    proptest::collection::vec((generator(max), rational()), 1..=3).prop_map(|terms| {
        let mut x = Element::zero();
        for (g, c) in terms {
            x.add_term(g, c);
        }
        x
    })
}

fn weight() -> impl Strategy<Value = HighestWeight<Rational>> {
    proptest::array::uniform5(rational())
        .prop_map(|[h, hi, cl, cli, ci]| HighestWeight::new(h, hi, cl, cli, ci))
}

fn level_zero_weight() -> impl Strategy<Value = HighestWeight<Rational>> {
    (rational(), rational(), rational(), nonzero_rational())
        .prop_map(|(h, hi, cl, cli)| HighestWeight::new(h, hi, cl, cli, Rational::zero()))
}

/// A homogeneous vector of degree `d`.
fn vector(d: u32) -> impl Strategy<Value = Vector> {
    let basis = basis_of_degree(d);
    proptest::collection::vec((0..basis.len(), rational()), 1..=4).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|(i, c)| (basis[i].clone(), c))
            .collect()
    })
}

fn any_vector(max_degree: u32) -> impl Strategy<Value = Vector> {
    (0..=max_degree).prop_flat_map(vector)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bracket_is_antisymmetric(x in element(6), y in element(6)) {
        prop_assert_eq!(x.bracket(&y), y.bracket(&x).scale(&Rational::from_int(-1)));
    }

    #[test]
    fn jacobi_identity(x in element(6), y in element(6), z in element(6)) {
        let sum = x.bracket(&y.bracket(&z))
            .add(&y.bracket(&z.bracket(&x)))
            .add(&z.bracket(&x.bracket(&y)));
        prop_assert!(sum.is_zero(), "{}", sum);
    }

    #[test]
    fn sigma_is_an_involutive_anti_automorphism(x in element(6), y in element(6)) {
        prop_assert_eq!(x.bracket(&y).sigma(), y.sigma().bracket(&x.sigma()));
        prop_assert_eq!(x.sigma().sigma(), x);
    }

    #[test]
    fn module_axiom(hw in weight(), x in generator(5), y in generator(5), v in any_vector(5)) {
        let m = VermaModule::new(hw);
        let xy = m.apply_word(&[x, y], &v).unwrap();
        let yx = m.apply_word(&[y, x], &v).unwrap();
        let rhs = m.apply_element(&bracket_generators(x, y), &v).unwrap();
        prop_assert_eq!(xy.sub(&yx), rhs);
    }

    #[test]
    fn shapovalov_contravariance(
        hw in weight(),
        j in -3i64..=3,
        coeffs in proptest::array::uniform3(rational()),
        u in any_vector(3),
        v in any_vector(4),
    ) {
        let [a, b, c] = coeffs;
        let mut x = Element::zero();
        x.add_term(Generator::L(j), a);
        x.add_term(Generator::I(j), b);
        if j == 0 {
            x.add_term(Generator::CLI, c);
        }
        let m = VermaModule::new(hw);
        let form = ShapovalovForm::new(&m);
        let left = form.left_module();
        let lhs = form.pair(&left.apply_element(&x, &u).unwrap(), &v);
        let rhs = form.pair(&u, &m.apply_element(&x.sigma(), &v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn distinct_degrees_are_orthogonal(hw in weight(), u in any_vector(4), v in any_vector(4)) {
        prop_assume!(u.degree() != v.degree());
        let m = VermaModule::new(hw);
        prop_assert!(ShapovalovForm::new(&m).pair(&u, &v).is_zero());
    }

    #[test]
    fn i_degree_containment(hw in level_zero_weight(), d in 1u32..=5, pick in 0usize..100, n in 1i64..=5, c in nonzero_rational()) {
        let k = pick % (d as usize + 1);
        let pool: Vec<Monomial> = basis_of_degree(d).into_iter().filter(|x| x.i_degree() == k).collect();
        let w = Vector::term(pool[pick % pool.len()].clone(), c);
        let m = VermaModule::new(hw);
        let iw = m.apply_generator(Generator::I(n), &w).unwrap();
        prop_assert!(iw.monomials().all(|x| x.i_degree() == k || x.i_degree() == k + 1));
        let lw = m.apply_generator(Generator::L(n), &w).unwrap();
        prop_assert!(lw.monomials().all(|x| x.i_degree() + 1 == k || x.i_degree() == k));
    }
}

/// `[L(n), I(-n)] 𝟏 = n (h_I - (n+1) c_LI) 𝟏`, which vanishes exactly when
/// `h_I / c_LI = n + 1`.
#[test]
fn heisenberg_pivot_on_vacuum() {
    for n in 1..=6i64 {
        for (hi, cli) in [(3, 1), (7, 2), (-4, 5), (n + 1, 1), (2 * (n + 1), 2)] {
            let hw = HighestWeight::ints(2, hi, 1, cli, 0);
            let m = VermaModule::new(hw);
            let one = Vector::vacuum();
            let lhs = m
                .apply_word(&[Generator::L(n), Generator::I(-n)], &one)
                .unwrap()
                .sub(
                    &m.apply_word(&[Generator::I(-n), Generator::L(n)], &one)
                        .unwrap(),
                );
            let value = n * (hi - (n + 1) * cli);
            assert_eq!(lhs, one.scale(&Rational::from_int(value)), "n = {n}");
            assert_eq!(lhs.is_zero(), hi == (n + 1) * cli);
        }
    }
}

#[test]
fn pivot_identities_on_single_factors() {
    let hw = HighestWeight::ints(1, 7, 3, 2, 0);
    let m = VermaModule::new(hw);
    for n in 1..=5u32 {
        // I(n) L(-n) 𝟏 = n (h_I + (n-1) c_LI) 𝟏
        let v = Vector::from(Monomial::new(vec![], vec![n]));
        let got = m.apply_generator(Generator::I(n as i64), &v).unwrap();
        let n_i = n as i64;
        assert_eq!(
            got,
            Vector::vacuum().scale(&Rational::from_int(n_i * (7 + (n_i - 1) * 2)))
        );
        assert_eq!(v.partial_derivative(FactorKind::L, n), Vector::vacuum());
        // L(m) I(-m) 𝟏 = m (h_I - (m+1) c_LI) 𝟏
        let w = Vector::from(Monomial::new(vec![n], vec![]));
        let got = m.apply_generator(Generator::L(n as i64), &w).unwrap();
        assert_eq!(
            got,
            Vector::vacuum().scale(&Rational::from_int(n_i * (7 - (n_i + 1) * 2)))
        );
    }
}

#[test]
fn gram_matrix_in_degree_one() {
    let hw = HighestWeight::new(
        Rational::frac(5, 3),
        Rational::from_int(2),
        Rational::from_int(1),
        Rational::from_int(2),
        Rational::frac(1, 7),
    );
    let m = VermaModule::new(hw);
    let g = ShapovalovForm::new(&m).gram_matrix(1);
    let expect = [
        Rational::frac(1, 7),
        Rational::from_int(2),
        Rational::from_int(-2),
        Rational::frac(10, 3),
    ];
    assert_eq!(g.entries(), &expect);
}
