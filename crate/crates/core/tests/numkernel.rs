mod common;

use common::{c, close, root, zeta, CATALAN, PI, T_ONE_ONE};
use num_complex::Complex64 as C;

use cyclotsum::cyclo::{root_inv, root_mul, root_sqrt, root_to_complex};
use cyclotsum::numkernel::{
    euler_sum, multiple_value, multiple_value_with, partial_t, partial_zeta, phi, phi_deriv,
    polylog, t_polylog, t_via_li, Phi_big,
};
use cyclotsum::{Comp, EvalOptions, NumError, Root, SeriesSpec};

fn spec(text: &str) -> SeriesSpec {
    text.parse().unwrap()
}

fn re(v: f64) -> C {
    c(v, 0.0)
}

#[test]
fn root_examples() {
    assert_eq!(root_mul(root(1, 3), root(2, 3)), Root::ONE);
    assert_eq!(root_mul(root(1, 4), root(1, 4)), root(1, 2));
    assert_eq!(root_mul(root(1, 6), root(1, 2)), root(2, 3));
    assert_eq!(root_inv(root(1, 4)), root(3, 4));
    assert_eq!(root_inv(Root::ONE), Root::ONE);
    assert_eq!(root_inv(root(2, 5)), root(3, 5));
    assert_eq!(root_sqrt(root(1, 2)), root(1, 4));
    assert_eq!(root_sqrt(Root::ONE), Root::ONE);
    assert_eq!(root_sqrt(root(2, 3)), root(1, 3));
    assert!(close(
        root_to_complex(root(1, 2)),
        re(-1.0),
        4.0 * f64::EPSILON
    ));
    assert!(close(
        root_to_complex(root(1, 4)),
        c(0.0, 1.0),
        4.0 * f64::EPSILON
    ));
    assert!(root_to_complex(root(1, 7)).err <= 4.0 * f64::EPSILON);
}

#[test]
fn partial_sums() {
    assert_eq!(partial_zeta(0, 5, root(1, 3)).value(), re(0.0));
    assert!(close(partial_zeta(3, 1, Root::ONE), re(11.0 / 6.0), 1e-15));
    assert!(close(partial_zeta(2, 1, Root::MINUS_ONE), re(-0.5), 1e-15));
    assert_eq!(partial_t(0, 2, Root::ONE).value(), re(0.0));
    assert!(close(partial_t(1, 2, Root::MINUS_ONE), re(-4.0), 1e-15));
    assert!(close(partial_t(2, 1, Root::ONE), re(8.0 / 3.0), 1e-15));
}

#[test]
fn polylog_values() {
    for k in 2..=8 {
        assert!(
            close(polylog(k, Root::ONE).unwrap(), re(zeta(k)), 1e-9),
            "zeta({k})"
        );
    }
    assert!(close(
        polylog(1, Root::MINUS_ONE).unwrap(),
        re(-(2f64.ln())),
        1e-12
    ));
    assert!(close(
        polylog(2, Root::MINUS_ONE).unwrap(),
        re(-PI * PI / 12.0),
        1e-9
    ));
    // mpmath: polylog(2, 1j)
    let li2i = c(
        -0.205_616_758_356_028_304_559,
        0.915_965_594_177_219_015_054,
    );
    assert!(close(polylog(2, Root::I).unwrap(), li2i, 1e-9));
    assert!(matches!(
        polylog(1, Root::ONE),
        Err(NumError::DivergentSeries(_))
    ));
}

#[test]
fn t_polylog_values() {
    assert!(close(
        t_polylog(2, Root::ONE).unwrap(),
        re(3.0 * zeta(2)),
        1e-9
    ));
    assert!(close(
        t_polylog(1, Root::MINUS_ONE).unwrap(),
        re(-PI / 2.0),
        1e-9
    ));
    assert!(close(
        t_polylog(2, Root::MINUS_ONE).unwrap(),
        re(-4.0 * CATALAN),
        1e-9
    ));
    for p in 2..=8 {
        let want = (2f64.powi(p as i32) - 1.0) * zeta(p);
        assert!(close(t_polylog(p, Root::ONE).unwrap(), re(want), 1e-8));
    }
    assert!(matches!(
        t_polylog(1, Root::ONE),
        Err(NumError::DivergentSeries(_))
    ));
}

#[test]
fn multiple_values() {
    let t = multiple_value(&spec("t[2](0/1)")).unwrap();
    assert!((t - t_polylog(2, Root::ONE).unwrap()).abs() <= 2e-9);
    assert!(close(
        multiple_value(&spec("t[2,2,2](0/1,0/1,0/1)")).unwrap(),
        re(common::T222),
        1e-9
    ));
    // ζ(1,2) = ζ(3) with the larger index last.
    assert!(close(
        multiple_value(&spec("Z[1,2](0/1,0/1)")).unwrap(),
        re(zeta(3)),
        1e-9
    ));
    // mpmath: t̃_2(-1) t̃_2(i) - Σ_n (-i)^n Φ(-1,2,n-1/2)/(n-1/2)^2
    let want = c(1.555_365_226_165_453_820_48, 0.444_874_565_363_570_246_408);
    assert!(close(
        multiple_value(&spec("t[2,2](1/2,1/4)")).unwrap(),
        want,
        1e-9
    ));
    assert!(matches!(
        multiple_value(&spec("t[2,1](1/2,0/1)")),
        Err(NumError::DivergentSeries(_))
    ));
}

#[test]
fn multiple_t_value_family() {
    // T̃_{2}(1) = 2 Σ 1/(2n-1)^2 = 2 (1 - 1/4) ζ(2).
    let v = multiple_value(&spec("MT[2](0/1)")).unwrap();
    assert!(close(v, re(1.5 * zeta(2)), 1e-9), "{v}");
}

#[test]
fn euler_sums() {
    for (_, p, q, want) in T_ONE_ONE {
        let v = euler_sum(&spec(&format!("T[{p};{q}](0/1;0/1)"))).unwrap();
        assert!(close(v, re(want), 1e-8), "T[{p};{q}] = {v}");
    }
    // Empty inner parts.
    let t = euler_sum(&spec("T[;3](;1/4)")).unwrap();
    assert!((t - t_polylog(3, Root::I).unwrap()).abs() < 1e-9);
    let s = euler_sum(&spec("S[;3](;1/4)")).unwrap();
    assert!((s - polylog(3, Root::I).unwrap()).abs() < 1e-9);
    // T_{p;q}(x;y) = t̃_{p,q}(x,y) + t̃_{p+q}(xy).
    let lhs = euler_sum(&spec("T[2;2](1/2;1/2)")).unwrap();
    let rhs = multiple_value(&spec("t[2,2](1/2,1/2)")).unwrap() + t_polylog(4, Root::ONE).unwrap();
    assert!((lhs - rhs).abs() <= lhs.err + rhs.err);
    assert!(matches!(
        euler_sum(&spec("T[2;1](1/2;0/1)")),
        Err(NumError::DivergentSeries(_))
    ));
}

#[test]
fn kernel_functions() {
    assert!(close(
        phi(re(1.0), Root::MINUS_ONE).unwrap(),
        re(2f64.ln()),
        1e-9
    ));
    assert!(close(
        phi(re(0.5), Root::MINUS_ONE).unwrap(),
        re(PI / 2.0),
        1e-9
    ));
    // mpmath: lerchphi(-1, 1, 0.3)
    assert!(close(
        phi(re(0.3), Root::MINUS_ONE).unwrap(),
        re(2.825_321_941_882_867_640_11),
        1e-9
    ));
    // mpmath: 2 lerchphi(1j, 3, 0.7)
    let want = c(5.743_910_828_450_498_902_60, 0.375_431_510_551_607_153_97);
    assert!(close(phi_deriv(2, re(0.7), Root::I).unwrap(), want, 1e-9));
    assert!(close(
        phi_deriv(1, re(1.0), Root::ONE).unwrap(),
        re(-zeta(2)),
        1e-9
    ));
    assert!(close(
        phi_deriv(1, re(0.5), Root::ONE).unwrap(),
        re(-PI * PI / 2.0),
        1e-9
    ));
    assert!(matches!(phi(re(0.0), Root::I), Err(NumError::PoleAt(_))));
    assert!(matches!(
        phi_deriv(2, re(-3.0), Root::I),
        Err(NumError::PoleAt(_))
    ));
    assert!(matches!(
        phi(re(0.5), Root::ONE),
        Err(NumError::DivergentSeries(_))
    ));

    assert!(close(Phi_big(re(0.25), Root::ONE).unwrap(), re(PI), 1e-10));
    // Φ(-s;x⁻¹) = -Φ(s;x): +π at 1/2 and -π at -1/2 for x = -1.
    assert!(close(
        Phi_big(re(0.5), Root::MINUS_ONE).unwrap(),
        re(PI),
        1e-9
    ));
    assert!(close(
        Phi_big(re(-0.5), Root::MINUS_ONE).unwrap(),
        re(-PI),
        1e-9
    ));
    // mpmath from the defining φ series.
    let want = c(3.141_592_653_589_793_238_46, 1.813_799_364_234_217_850_59);
    assert!(close(Phi_big(re(1.0 / 3.0), Root::I).unwrap(), want, 1e-9));
    let want = c(3.873_793_791_092_510_500_83, -1.178_470_799_154_472_620_80);
    assert!(close(
        Phi_big(c(0.25, 0.1), Root::MINUS_ONE).unwrap(),
        want,
        1e-9
    ));
    assert!(matches!(
        Phi_big(re(2.0), Root::I),
        Err(NumError::PoleAt(_))
    ));
}

#[test]
fn t_via_li_examples() {
    let v = t_via_li(&spec("t[2](1/2)")).unwrap();
    assert!(close(v, re(-4.0 * CATALAN), 1e-9));
    let v = t_via_li(&spec("t[2](0/1)")).unwrap();
    assert!(close(v, re(PI * PI / 2.0), 1e-9));
    let s = spec("t[1,2](0/1,0/1)");
    let (a, b) = (t_via_li(&s).unwrap(), multiple_value(&s).unwrap());
    assert!((a - b).abs() <= a.err + b.err);
}

/// Every admissible depth ≤ 2 spec of weight ≤ 6 over fourth roots.
#[test]
fn t_via_li_matches_direct_sums() {
    let roots = common::fourth_roots();
    let mut checked = 0;
    for w in 1..=6u32 {
        for a in 1..=w {
            let depth_two: Vec<(u32, u32)> = if a < w { vec![(a, w - a)] } else { vec![] };
            for x in roots {
                let one = Comp::new(vec![(w, x)]);
                let mut comps = if a == 1 { vec![one] } else { vec![] };
                for &(p, q) in &depth_two {
                    for y in roots {
                        comps.push(Comp::new(vec![(p, x), (q, y)]));
                    }
                }
                for comp in comps {
                    let s = SeriesSpec::mtv(comp);
                    if !s.is_admissible() {
                        continue;
                    }
                    let (a, b) = (t_via_li(&s).unwrap(), multiple_value(&s).unwrap());
                    assert!((a - b).abs() <= a.err + b.err, "{s}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 200);
}

#[test]
fn tolerance_failures_are_reported() {
    let opts = EvalOptions {
        tolerance: 1e-20,
        max_terms: 1000,
        ..EvalOptions::default()
    };
    let r = multiple_value_with(&spec("t[1,1](1/2,1/3)"), &opts);
    assert!(matches!(r, Err(NumError::ToleranceNotMet { .. })), "{r:?}");
}
