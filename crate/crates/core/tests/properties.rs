//! Randomized invariants. The four acceptance properties share their bodies
//! with the acceptance target; the rest live here.

mod common;

use num_complex::Complex64 as C;
use proptest::prelude::*;
use proptest::strategy::ValueTree;

use common::{any_root, any_spec, c};
use cyclotsum::numkernel::evaluate;
use cyclotsum::ratfrac::{strip_special_pole, PartialFraction, Pole};
use cyclotsum::{CVal, EvalOptions, Root};

#[test]
fn conjugation_symmetry() {
    common::prop_conjugation().unwrap();
}

#[test]
fn t_via_li_branch_invariance() {
    common::prop_branch_invariance().unwrap();
}

#[test]
fn depth_one_collapse() {
    common::prop_depth_one().unwrap();
}

#[test]
fn printed_specs_reparse() {
    common::prop_round_trip().unwrap();
}

fn cases() -> ProptestConfig {
    ProptestConfig {
        cases: common::PROPERTY_CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn any_c() -> impl Strategy<Value = C> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| c(a, b))
}

/// One to three poles of order ≤ 3, kept apart from the sample point region.
fn any_pf() -> impl Strategy<Value = PartialFraction> {
    prop::collection::vec(
        (
            (-3.0..3.0f64, 1.0..3.0f64),
            prop::collection::vec(any_c(), 1..=3),
        ),
        1..=3,
    )
    .prop_map(|poles| {
        PartialFraction::new(
            poles
                .into_iter()
                .map(|((re, im), coeffs)| Pole {
                    at: c(re, im),
                    coeffs,
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(cases())]

    #[test]
    fn root_arithmetic(a in any_root(60), b in any_root(60)) {
        prop_assert_eq!(a.mul(a.inv()), Root::ONE);
        prop_assert_eq!(a.sqrt().mul(a.sqrt()), a);
        prop_assert_eq!(a.mul(b), b.mul(a));
        let z = a.mul(b).to_complex().value();
        let w = a.to_complex().value() * b.to_complex().value();
        prop_assert!((z - w).norm() < 1e-14);
        prop_assert_eq!(a.conj(), a.inv());
        prop_assert!(a.to_string().parse::<Root>().unwrap() == a);
    }

    #[test]
    fn cval_errors_are_subadditive(
        (a, b) in (any_c(), any_c()),
        (ea, eb) in (0.0..1e-6f64, 0.0..1e-6f64),
    ) {
        let x = CVal::with_err(a.re, a.im, ea);
        let y = CVal::with_err(b.re, b.im, eb);
        prop_assert!((x + y).err <= ea + eb + 1e-15);
        prop_assert!((x - y).err <= ea + eb + 1e-15);
        prop_assert!((x * y).err >= 0.0);
    }

    #[test]
    fn derivative_matches_finite_difference(r in any_pf(), s in (-1.0..1.0f64, -0.5..0.5f64), m in 0u32..=2) {
        // Samples stay at least 0.5 below every pole.
        let s = c(s.0, s.1);
        let h = 1e-4;
        let f = |z: C| r.derivative(m).eval(z).unwrap();
        let fd = (f(s + h) - f(s - h)) / (2.0 * h);
        let exact = r.derivative(m + 1).eval(s).unwrap();
        prop_assert!((fd - exact).norm() <= 1e-5 * (1.0 + exact.norm()), "{fd} vs {exact}");
    }

    #[test]
    fn stripping_reproduces_the_kernel(r in any_pf(), q in 1u32..=3, lead in any_c(), s in (-1.0..1.0f64, -0.5..0.5f64)) {
        let at = c(-0.5, 0.0);
        let mut coeffs = vec![c(0.3, -0.1); q as usize];
        coeffs[q as usize - 1] = lead + c(3.0, 0.0);
        let r = r.plus(&PartialFraction::new(vec![Pole { at, coeffs }]));
        let stripped = strip_special_pole(&r, at, q).unwrap();
        let s = c(s.0, s.1);
        prop_assume!((s - at).norm() > 0.05);
        let back = stripped.eval(s).unwrap() / (s - at).powu(q);
        let direct = r.eval(s).unwrap();
        prop_assert!((back - direct).norm() <= 1e-9 * (1.0 + direct.norm()));
    }
}

/// The reported error bounds the distance to a reference with a ten times
/// longer head, on 50 random admissible specs.
#[test]
fn stated_tolerance_is_honored() {
    let mut runner = common::runner(99);
    let strat = any_spec(6);
    for _ in 0..50 {
        let s = strat.new_tree(&mut runner).unwrap().current();
        let opts = EvalOptions::default();
        let e = evaluate(&s, &opts).unwrap();
        let long = EvalOptions {
            min_terms: 10 * e.terms,
            max_terms: opts.max_terms.max(20 * e.terms),
            ..opts
        };
        let r = evaluate(&s, &long).unwrap();
        assert!(r.terms >= 10 * e.terms, "{s}: {} vs {}", r.terms, e.terms);
        let d = (e.value - r.value).abs();
        assert!(
            d <= e.value.err + r.value.err,
            "{s}: {d:e} > {:e}",
            e.value.err
        );
    }
}
