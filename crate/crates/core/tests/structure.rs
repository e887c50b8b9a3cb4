//! Singular vectors and the structure of level-zero Verma modules.

use hv_core::structure::{
    character_series, corollary6_check, lemma4_check, lowest_factor_check, predicted_p,
    quotient_singular_check, rescale_to_lowest, singular_vectors, submodule_slice, verify_theorem1,
    CaseTag,
};
use hv_core::verma::basis_of_degree;
use hv_core::{Error, Generator, HighestWeight, ModuleVector, Monomial, Rational, VermaModule};

type Vector = ModuleVector<Rational>;

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn with_ratio(ratio: Rational, c_li: Rational, h: Rational) -> HighestWeight<Rational> {
    HighestWeight::new(h, ratio * &c_li, q(3, 5), c_li, q(0, 1))
}

#[test]
fn example_l_case_vector() {
    let m = VermaModule::new(HighestWeight::new(
        q(5, 3),
        q(0, 1),
        q(1, 1),
        q(2, 1),
        q(0, 1),
    ));
    let s = singular_vectors(&m, 1).unwrap();
    assert_eq!(s.dimension(), 1);
    assert_eq!(s.kernel_basis[0].to_string(), "5/6 I(-1) 𝟏 + L(-1) 𝟏");
}

#[test]
fn example_i_case_vector_for_any_h() {
    for h in [q(0, 1), q(1, 1), q(-17, 4), q(100, 3)] {
        let m = VermaModule::new(HighestWeight::new(h, q(2, 1), q(1, 2), q(1, 1), q(0, 1)));
        let s = singular_vectors(&m, 1).unwrap();
        assert_eq!(
            s.kernel_basis,
            vec![Vector::from(Monomial::new(vec![1], vec![]))]
        );
    }
}

/// For every integer ratio `r ≠ 1` in `[-3, 6]` there is a singular vector
/// in degree `p = |r - 1|` and none below.
#[test]
fn singular_vectors_appear_exactly_at_p() {
    let c_lis = [q(1, 1), q(-2, 3), q(5, 2), q(7, 1), q(-1, 4)];
    for (i, r) in (-3i64..=6).filter(|&r| r != 1).enumerate() {
        let hw = with_ratio(
            Rational::from_int(r),
            c_lis[i % c_lis.len()].clone(),
            q(i as i64, 7),
        );
        let pred = predicted_p(&hw).unwrap().unwrap();
        assert_eq!(pred.p as i64, (r - 1).abs());
        let m = VermaModule::new(hw);
        for n in 1..pred.p {
            assert_eq!(
                singular_vectors(&m, n).unwrap().dimension(),
                0,
                "r = {r}, n = {n}"
            );
        }
        let s = singular_vectors(&m, pred.p).unwrap();
        assert_eq!(s.dimension(), 1, "r = {r}");
        assert!(lemma4_check(&s, &pred), "r = {r}");
        if pred.case == CaseTag::I {
            assert!(s.kernel_basis[0].is_pure_i(), "r = {r}");
        }
    }
}

#[test]
fn non_integer_ratio_has_no_singular_vectors() {
    let m = VermaModule::new(with_ratio(q(1, 2), q(3, 1), q(2, 1)));
    assert_eq!(predicted_p(m.weight()).unwrap(), None);
    for n in 1..=4 {
        assert_eq!(singular_vectors(&m, n).unwrap().dimension(), 0);
    }
}

#[test]
fn theorem_routines_reject_other_parameters() {
    let off_level = HighestWeight::new(q(1, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 3));
    assert!(matches!(
        verify_theorem1(&off_level, 2),
        Err(Error::OutsideTheorem(_))
    ));
    let no_cli = HighestWeight::new(q(1, 1), q(1, 1), q(1, 1), q(0, 1), q(0, 1));
    assert!(matches!(
        predicted_p(&no_cli),
        Err(Error::OutsideTheorem(_))
    ));
}

/// Every nonzero `x · v` has a lowest I-degree part containing the
/// distinguished factor.
#[test]
fn generated_elements_keep_the_distinguished_factor() {
    for ratio in [0, -1, 2, 3] {
        let hw = with_ratio(Rational::from_int(ratio), q(3, 2), q(1, 3));
        let pred = predicted_p(&hw).unwrap().unwrap();
        let m = VermaModule::new(hw);
        let v = rescale_to_lowest(
            &singular_vectors(&m, pred.p).unwrap().kernel_basis[0],
            &pred,
        )
        .unwrap();
        let words: [&[Generator]; 5] = [
            &[Generator::L(-1)],
            &[Generator::I(-1), Generator::L(-2)],
            &[Generator::L(-1), Generator::I(-2)],
            &[Generator::I(-3)],
            &[Generator::L(-2), Generator::L(-1), Generator::I(-1)],
        ];
        let kind = pred.case.factor_kind();
        for w in words {
            let x = m.apply_word(w, &v).unwrap();
            if x.is_zero() {
                continue;
            }
            let low = x.lowest_i_component().unwrap();
            assert!(
                low.monomials().any(|mono| mono.contains(kind, pred.p)),
                "{x}"
            );
        }
        for n in 0..=4 {
            let slice = submodule_slice(&m, &v, n).unwrap();
            assert!(lowest_factor_check(&slice, &pred));
        }
    }
}

#[test]
fn submodule_ranks_match_the_character() {
    for ratio in [0, 2] {
        let hw = with_ratio(Rational::from_int(ratio), q(-5, 3), q(2, 1));
        let pred = predicted_p(&hw).unwrap().unwrap();
        let m = VermaModule::new(hw);
        let v = singular_vectors(&m, pred.p).unwrap().kernel_basis[0].clone();
        let chi = character_series(Some(pred.p), 5);
        for n in 0..=5u32 {
            let rank = submodule_slice(&m, &v, n).unwrap().rank;
            assert_eq!(
                basis_of_degree(n).len() - rank,
                chi.coeffs[n as usize] as usize
            );
            assert!(corollary6_check(&m, &v, &pred, n).unwrap().passed);
            if n >= 1 {
                assert!(quotient_singular_check(&m, Some(&v), n).unwrap().passed);
            }
        }
    }
}

/// Quotienting by the wrong vector leaves singular vectors behind.
#[test]
fn quotient_check_detects_a_missing_submodule() {
    let hw = with_ratio(q(0, 1), q(1, 1), q(2, 1));
    let m = VermaModule::new(hw);
    let out = quotient_singular_check(&m, None, 1).unwrap();
    assert_eq!(out.solution_dimension, 1);
    assert!(!out.passed);
}

#[test]
fn full_reports_for_worked_parameters() {
    let cases = [
        (HighestWeight::ints(1, 0, 1, 1, 0), Some((1, CaseTag::L))),
        (HighestWeight::ints(1, 1, 0, 1, 0), None),
        (HighestWeight::ints(2, 3, 1, 1, 0), Some((2, CaseTag::I))),
    ];
    for (hw, expected) in cases {
        let report = verify_theorem1(&hw, 4).unwrap();
        assert_eq!(report.prediction.map(|p| (p.p, p.case)), expected);
        let failed: Vec<_> = report.records.iter().filter(|r| !r.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }
}
