//! Shared oracles, generators and the acceptance checks.
//!
//! Reference numbers below were computed once with mpmath at 30 digits,
//! independently of this crate, and frozen here.
#![allow(dead_code)]

use std::time::Instant;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C;
use num_rational::Rational64;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclotsum::cli::{run_suite, SuiteConfig};
use cyclotsum::identities::laurent::{laurent_coeff_Phi_with, laurent_coeff_phi_with};
use cyclotsum::identities::residue::residue_sum_zero;
use cyclotsum::identities::{
    general_sides, known_value, linear_parity_sides, Around, Evaluator, IdentityError, KernelRoute,
};
use cyclotsum::numkernel::{
    euler_sum, multiple_value, multiple_value_with, phi_deriv_with, polylog, t_polylog,
    t_via_li_branches, Phi_big, Phi_big_with,
};
use cyclotsum::quasishuffle::{eval_formal, stuffle_expand};
use cyclotsum::ratfrac::{KernelVariant, PartialFraction, Pole};
use cyclotsum::{CVal, Comp, EvalOptions, Root, SeriesSpec};

pub const PI: f64 = std::f64::consts::PI;
pub const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932;

/// ζ(2), …, ζ(8).
pub const ZETA: [f64; 7] = [
    1.644_934_066_848_226_436_5,
    1.202_056_903_159_594_285_4,
    1.082_323_233_711_138_191_5,
    1.036_927_755_143_369_926_3,
    1.017_343_061_984_449_139_7,
    1.008_349_277_381_922_826_8,
    1.004_077_356_197_944_339_4,
];

/// `T_{p;q}(1;1)` from an nsum of `Σ_n (t(p) - ζ(p, n+1/2))/(n-1/2)^q`.
pub const T_ONE_ONE: [(&str, u32, u32, f64); 6] = [
    ("T23", 2, 3, 33.868_119_357_397_898_921_909_934),
    ("T32", 3, 2, 39.800_032_408_289_787_276_501_190),
    ("T34", 3, 4, 129.951_115_742_802_507_963_614_89),
    ("T43", 4, 3, 134.715_724_510_612_991_331_252_57),
    ("T25", 2, 5, 128.645_769_389_163_538_336_264_11),
    ("T52", 5, 2, 158.042_623_242_848_706_637_678_88),
];

pub const T222: f64 = 1.335_262_768_854_589_495_875_304_782_85;

pub fn zeta(k: u32) -> f64 {
    ZETA[k as usize - 2]
}

pub fn t_value(k: u32) -> f64 {
    (2f64.powi(k as i32) - 1.0) * zeta(k)
}

pub fn root(k: i64, n: u64) -> Root {
    Root::new(k, n)
}

pub fn fourth_roots() -> [Root; 4] {
    [Root::ONE, Root::MINUS_ONE, Root::I, Root::MINUS_I]
}

pub fn close(v: CVal, want: C, tol: f64) -> bool {
    (v.value() - want).norm() <= tol
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_root(rng: &mut ChaCha8Rng, dens: &[u64]) -> Root {
    let n = dens[rng.gen_range(0..dens.len())];
    Root::new(rng.gen_range(0..n as i64), n)
}

/// Outcome of one acceptance criterion.
pub struct Check {
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(ok: bool, detail: String) -> Check {
        Check { ok, detail }
    }
}

// ---------------------------------------------------------------- criterion 1

pub fn closed_forms() -> Check {
    let mut bad = Vec::new();
    let mut slowest = 0f64;
    let mut timed = |name: String, f: &dyn Fn() -> Result<(CVal, f64), String>| {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        slowest = slowest.max(secs);
        match r {
            Ok((v, want)) if close(v, C::new(want, 0.0), 1e-8) && secs < 10.0 => {}
            Ok((v, want)) => bad.push(format!("{name}: {} vs {want} in {secs:.1}s", v.re)),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    };
    for (name, p, q, want) in T_ONE_ONE {
        timed(format!("{name} numeric"), &|| {
            let s: SeriesSpec = format!("T[{p};{q}](0/1;0/1)").parse().unwrap();
            euler_sum(&s).map(|v| (v, want)).map_err(|e| e.to_string())
        });
        timed(format!("{name} closed form"), &|| {
            known_value(name)
                .map(|v| (v, want))
                .map_err(|e| e.to_string())
        });
    }
    timed("t(2,2,2)".into(), &|| {
        let s: SeriesSpec = "t[2,2,2](0/1,0/1,0/1)".parse().unwrap();
        multiple_value(&s)
            .map(|v| (v, T222))
            .map_err(|e| e.to_string())
    });
    timed("t(6)/48".into(), &|| {
        Ok((CVal::exact(63.0 * zeta(6) / 48.0, 0.0), T222))
    });
    for p in 2..=8 {
        timed(format!("t~_{p}(1)"), &|| {
            let z = polylog(p, Root::ONE).map_err(|e| e.to_string())?;
            let want = (2f64.powi(p as i32) - 1.0) * z.re;
            t_polylog(p, Root::ONE)
                .map(|v| (v, want))
                .map_err(|e| e.to_string())
        });
        timed(format!("zeta({p})"), &|| {
            polylog(p, Root::ONE)
                .map(|v| (v, zeta(p)))
                .map_err(|e| e.to_string())
        });
    }
    Check::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("26 values within 1e-8, slowest {slowest:.2}s")
        } else {
            bad.join("; ")
        },
    )
}

// ---------------------------------------------------------------- criterion 2

pub const THEOREM_GRID: &str = r#"
tolerance = 1e-9
truncation_cap = 4000000

[[identities]]
id = "linear"
max_weight = 7

[[identities]]
id = "quadratic"
max_weight = 7

[[identities]]
id = "cubic"
q = [2, 3]

[[identities]]
id = "triple"
exps = [[1, 2, 1], [2, 2, 2]]

[[identities]]
id = "mtv"
max_weight = 7
exps = [
  [1, 1], [1, 2], [1, 3], [2, 1], [2, 2], [2, 3], [3, 1], [3, 2], [3, 3],
  [1, 1, 1], [1, 1, 2], [1, 2, 1], [2, 1, 1], [1, 2, 2], [2, 1, 2], [2, 2, 1],
  [1, 1, 3], [1, 3, 1], [3, 1, 1], [2, 2, 2], [1, 2, 3], [3, 2, 1], [2, 3, 1],
  [1, 3, 2], [3, 1, 2], [2, 1, 3], [1, 3, 3], [3, 1, 3], [3, 3, 1],
]
"#;

pub fn theorem_grid() -> Check {
    let cfg = SuiteConfig::from_toml(THEOREM_GRID).expect("grid parses");
    let t = Instant::now();
    let res = run_suite(&cfg, Some(1)).expect("suite runs");
    let secs = t.elapsed().as_secs_f64();
    let m = res.summary;
    let failures: Vec<String> = res
        .reports
        .iter()
        .filter(|r| !r.pass && r.skipped_reason.is_none())
        .take(5)
        .map(|r| format!("{} {}", r.identity_id, r.params_text()))
        .collect();
    let ok = m.fail == 0 && m.pass > 0 && secs <= 600.0;
    Check::new(
        ok,
        format!(
            "pass {} fail {} skipped {} in {secs:.1}s single-threaded{}",
            m.pass,
            m.fail,
            m.skipped,
            if failures.is_empty() {
                String::new()
            } else {
                format!(" e.g. {}", failures.join(", "))
            }
        ),
    )
}

// ---------------------------------------------------------------- criterion 3

/// Every admissible T-sum with k ≤ 3 factors, exponents ≤ 2, q ≤ 3 and fourth-root twists.
pub fn stuffle_specs() -> Vec<SeriesSpec> {
    let mut out = Vec::new();
    let mut comps: Vec<Vec<(u32, Root)>> = vec![vec![]];
    let mut layer = comps.clone();
    for _ in 0..3 {
        let mut next = Vec::new();
        for c in &layer {
            for e in 1..=2 {
                for r in fourth_roots() {
                    let mut c = c.clone();
                    c.push((e, r));
                    next.push(c);
                }
            }
        }
        comps.extend(next.iter().cloned());
        layer = next;
    }
    for c in comps {
        for q in 1..=3 {
            for x in fourth_roots() {
                let s = SeriesSpec::t_sum(Comp::new(c.clone()), q, x);
                if s.is_admissible() {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Stuffle expansion against direct evaluation for one spec.
pub fn stuffle_agrees(s: &SeriesSpec) -> Result<f64, String> {
    let (q, x) = s.outer.expect("T-sum");
    let direct = euler_sum(s).map_err(|e| format!("{s}: {e}"))?;
    let formal =
        eval_formal(&stuffle_expand(&s.inner, q, x), 1e-10).map_err(|e| format!("{s}: {e}"))?;
    let d = (direct - formal).abs();
    if d <= direct.err + formal.err + 1e-12 {
        Ok(d)
    } else {
        Err(format!("{s}: |diff| {d:e}"))
    }
}

/// The six terms of a depth-two expansion, written out by hand.
pub fn depth_two_terms(p1: u32, p2: u32, q: u32, x1: Root, x2: Root, x: Root) -> Vec<SeriesSpec> {
    let t = |parts: &[(u32, Root)]| SeriesSpec::mtv(Comp::new(parts.to_vec()));
    vec![
        t(&[(p1, x1), (p2, x2), (q, x)]),
        t(&[(p2, x2), (p1, x1), (q, x)]),
        t(&[(p1 + p2, x1.mul(x2)), (q, x)]),
        t(&[(p1, x1), (p2 + q, x2.mul(x))]),
        t(&[(p2, x2), (p1 + q, x1.mul(x))]),
        t(&[(p1 + p2 + q, x1.mul(x2).mul(x))]),
    ]
}

pub fn stuffle_oracle() -> Check {
    use rayon::prelude::*;
    let specs = stuffle_specs();
    let errs: Vec<String> = specs
        .par_iter()
        .filter_map(|s| stuffle_agrees(s).err())
        .collect();
    let x1 = Root::I;
    let x2 = Root::MINUS_ONE;
    let x = root(1, 3);
    let got = stuffle_expand(&Comp::from_slices(&[1, 2], &[x1, x2]), 2, x);
    let mut want: Vec<String> = depth_two_terms(1, 2, 2, x1, x2, x)
        .iter()
        .map(|s| s.to_string())
        .collect();
    want.sort();
    let mut have: Vec<String> = got
        .terms
        .iter()
        .filter(|t| t.coeff == 1)
        .map(|t| t.spec().to_string())
        .collect();
    have.sort();
    let shape = got.len() == 6 && have == want;
    let ok = errs.is_empty() && shape;
    Check::new(
        ok,
        format!(
            "{} specs, {} disagreements, depth-two expansion {}{}",
            specs.len(),
            errs.len(),
            if shape {
                "matches the 6 hand-written terms"
            } else {
                "differs"
            },
            errs.first().map(|e| format!(" ({e})")).unwrap_or_default()
        ),
    )
}

// ---------------------------------------------------------------- criterion 4

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// `(s - a)^{-k}` summed with the given coefficients at the special point.
pub fn pure_power(variant: KernelVariant, coeffs: &[C]) -> PartialFraction {
    PartialFraction::new(vec![Pole {
        at: variant.special_point(),
        coeffs: coeffs.to_vec(),
    }])
}

/// Special-point part of order ≤ 2 plus one or two simple poles off the
/// integers and half-integers.
pub fn random_kernel(rng: &mut ChaCha8Rng, variant: KernelVariant) -> PartialFraction {
    let cf = |rng: &mut ChaCha8Rng| c(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
    let order = rng.gen_range(0..=2);
    let mut poles = Vec::new();
    if order > 0 {
        let coeffs: Vec<C> = (0..order).map(|_| cf(rng)).collect();
        poles.push(Pole {
            at: variant.special_point(),
            coeffs,
        });
    }
    let extra = rng.gen_range(1..=2);
    for _ in 0..extra {
        let at = c(rng.gen_range(-2.7..2.7), rng.gen_range(-1.0..1.0));
        let coeff = cf(rng);
        poles.push(Pole {
            at,
            coeffs: vec![coeff],
        });
    }
    PartialFraction::new(poles)
}

/// Residual and budget of one general-kernel instance.
pub fn general_residual(
    variant: KernelVariant,
    p: u32,
    x: Root,
    y: Root,
    r: &PartialFraction,
    route: KernelRoute,
    ev: &Evaluator,
) -> Result<(f64, f64), IdentityError> {
    let sides = general_sides(variant, p, x, y, r, route)?;
    let (l, rr) = sides.evaluate(ev)?;
    Ok(((l - rr).abs(), l.err + rr.err + 1e-9))
}

pub fn general_kernels() -> Check {
    let ev = Evaluator::default();
    let mut bad = Vec::new();
    let mut pure = 0;
    for variant in [KernelVariant::R1, KernelVariant::R2] {
        for q in 1..=3usize {
            let mut coeffs = vec![c(0.0, 0.0); q];
            coeffs[q - 1] = c(1.0, 0.0);
            let r = pure_power(variant, &coeffs);
            for p in 1..=2 {
                for x in fourth_roots() {
                    for y in fourth_roots() {
                        for route in [KernelRoute::Auto, KernelRoute::Generic] {
                            match general_residual(variant, p, x, y, &r, route, &ev) {
                                Ok((res, b)) if res <= b => pure += 1,
                                Ok((res, b)) => bad.push(format!(
                                    "{variant:?} q={q} p={p} x={x} y={y} {route:?}: {res:e} > {b:e}"
                                )),
                                Err(IdentityError::DivergentInstance(_)) => {}
                                Err(e) => bad.push(e.to_string()),
                            }
                        }
                    }
                }
            }
        }
    }
    // The r1 pure powers reproduce the linear theorem term for term.
    let structural = (1..=3).all(|q| {
        let mut coeffs = vec![c(0.0, 0.0); q as usize];
        coeffs[q as usize - 1] = c(1.0, 0.0);
        let r = pure_power(KernelVariant::R1, &coeffs);
        general_sides(
            KernelVariant::R1,
            2,
            Root::I,
            Root::MINUS_ONE,
            &r,
            KernelRoute::Auto,
        )
        .ok()
            == linear_parity_sides(2, q, Root::I, Root::MINUS_ONE).ok()
    });
    let mut rng = rng(0x6b65726e);
    let mut random = [0usize; 2];
    for (i, variant) in [KernelVariant::R1, KernelVariant::R2]
        .into_iter()
        .enumerate()
    {
        while random[i] < 5 {
            let r = random_kernel(&mut rng, variant);
            let p = rng.gen_range(1..=3);
            let x = random_root(&mut rng, &[1, 2, 3, 4, 6]);
            let y = random_root(&mut rng, &[1, 2, 3, 4, 6]);
            match general_residual(variant, p, x, y, &r, KernelRoute::Auto, &ev) {
                Ok((res, b)) if res <= b => random[i] += 1,
                Ok((res, b)) => {
                    bad.push(format!(
                        "{variant:?} random p={p} x={x} y={y}: {res:e} > {b:e}"
                    ));
                    random[i] += 1;
                }
                // Divergent corners are redrawn.
                Err(IdentityError::DivergentInstance(_)) => {}
                Err(e) => {
                    bad.push(e.to_string());
                    random[i] += 1;
                }
            }
        }
    }
    Check::new(
        bad.is_empty() && structural,
        format!(
            "{pure} pure-power instances on both routes, 5 + 5 random kernels, linear structure {}{}",
            if structural { "equal" } else { "differs" },
            bad.first().map(|e| format!(" ({e})")).unwrap_or_default()
        ),
    )
}

// ---------------------------------------------------------------- criterion 5

/// Ten random admissible `(p, q, x, y)` with their residue totals.
pub fn residue_instances() -> Vec<((u32, u32, Root, Root), Result<CVal, String>)> {
    let mut rng = rng(0x7265_7369);
    let mut out = Vec::new();
    while out.len() < 10 {
        let p = rng.gen_range(1..=3);
        let q = rng.gen_range(1..=3);
        let x = random_root(&mut rng, &[1, 2, 3, 4, 5, 6, 8]);
        let y = random_root(&mut rng, &[1, 2, 3, 4, 5, 6, 8]);
        if (p == 1 && y.is_one()) || (q == 1 && x.mul(y).is_one()) {
            continue;
        }
        let total = residue_sum_zero(p, q, x, y, 100_000).map_err(|e| e.to_string());
        out.push(((p, q, x, y), total));
    }
    out
}

pub fn residue_sums() -> Check {
    let runs = residue_instances();
    let worst = runs
        .iter()
        .map(|(_, t)| t.as_ref().map(|v| v.abs()).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    Check::new(
        worst <= 1e-7,
        format!("10 random instances at cutoff 1e5, largest |total| {worst:.2e}"),
    )
}

// ---------------------------------------------------------------- criterion 6

/// Taylor coefficients `0..=4` of `f` about `center` from a least-squares
/// degree-4 fit to samples on the circle of radius 0.1.
pub fn poly_fit(center: C, f: impl Fn(C) -> Result<C, String>) -> Result<Vec<C>, String> {
    let n = 24;
    let radius = 0.1;
    let mut a = DMatrix::<C>::zeros(n, 5);
    let mut b = DVector::<C>::zeros(n);
    for i in 0..n {
        let h = C::from_polar(radius, 2.0 * PI * (i as f64 + 0.3) / n as f64);
        for k in 0..5 {
            a[(i, k)] = h.powu(k as u32);
        }
        b[i] = f(center + h)?;
    }
    let sol = a.svd(true, true).solve(&b, 1e-14)?;
    Ok(sol.iter().copied().collect())
}

pub fn precise() -> EvalOptions {
    EvalOptions {
        tolerance: 1e-10,
        max_terms: 4_000_000,
        ..EvalOptions::default()
    }
}

/// One expansion point for the Laurent comparison.
#[derive(Clone, Copy, Debug)]
pub enum LaurentPoint {
    Phi {
        n: i64,
        p: u32,
        x: Root,
        around: Around,
    },
    BigPhi {
        a: Rational64,
        x: Root,
    },
}

pub const LAURENT_POINTS: [LaurentPoint; 10] = [
    LaurentPoint::Phi {
        n: 0,
        p: 1,
        x: Root::MINUS_ONE,
        around: Around::IntegerSide,
    },
    LaurentPoint::Phi {
        n: -2,
        p: 2,
        x: Root::I,
        around: Around::IntegerSide,
    },
    LaurentPoint::Phi {
        n: 3,
        p: 2,
        x: Root::ONE,
        around: Around::IntegerSide,
    },
    LaurentPoint::Phi {
        n: 1,
        p: 1,
        x: Root::MINUS_I,
        around: Around::IntegerSide,
    },
    LaurentPoint::Phi {
        n: 0,
        p: 3,
        x: Root::MINUS_ONE,
        around: Around::HalfShifted,
    },
    LaurentPoint::Phi {
        n: -1,
        p: 1,
        x: Root::I,
        around: Around::HalfShifted,
    },
    LaurentPoint::Phi {
        n: 2,
        p: 2,
        x: Root::ONE,
        around: Around::HalfShifted,
    },
    LaurentPoint::BigPhi {
        a: Rational64::new_raw(0, 1),
        x: Root::I,
    },
    LaurentPoint::BigPhi {
        a: Rational64::new_raw(-3, 2),
        x: Root::MINUS_ONE,
    },
    LaurentPoint::BigPhi {
        a: Rational64::new_raw(5, 2),
        x: Root::ONE,
    },
];

fn rat_f64(a: Rational64) -> f64 {
    *a.numer() as f64 / *a.denom() as f64
}

/// Largest deviation between `laurent_coeff_*` for `k ≤ 3` and a polynomial
/// fit of the regular part of the function at `pt`.
pub fn laurent_deviation(pt: LaurentPoint) -> Result<f64, String> {
    let opts = precise();
    let err = |e: cyclotsum::NumError| e.to_string();
    let (center, fit, ours): (C, Vec<C>, Vec<C>) = match pt {
        LaurentPoint::Phi { n, p, x, around } => {
            let center = c(n as f64, 0.0);
            let shift = if around == Around::HalfShifted {
                0.5
            } else {
                0.0
            };
            let fact: f64 = (1..p).map(f64::from).product();
            let sign = if p % 2 == 1 { 1.0 } else { -1.0 };
            let principal =
                laurent_coeff_phi_with(n, p, -(p as i64), x, around, &opts).map_err(err)?;
            let f = |s: C| {
                let v = phi_deriv_with(p - 1, s + shift, x, &opts).map_err(err)?;
                Ok(v.value() * (sign / fact) - principal.value() / (s - center).powu(p))
            };
            let fit = poly_fit(center, f)?;
            let ours = (0..=3)
                .map(|k| laurent_coeff_phi_with(n, p, k, x, around, &opts).map(|v| v.value()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            (center, fit, ours)
        }
        LaurentPoint::BigPhi { a, x } => {
            let center = c(rat_f64(a), 0.0);
            let residue = laurent_coeff_Phi_with(a, -1, x, &opts).map_err(err)?;
            let f =
                |s: C| {
                    Ok(Phi_big_with(s, x, &opts).map_err(err)?.value()
                        - residue.value() / (s - center))
                };
            let fit = poly_fit(center, f)?;
            let ours = (0..=3)
                .map(|m| laurent_coeff_Phi_with(a, m, x, &opts).map(|v| v.value()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            (center, fit, ours)
        }
    };
    let _ = center;
    Ok(fit
        .iter()
        .zip(&ours)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}

pub fn kernel_numerics() -> Check {
    let phi_quarter = Phi_big(c(0.25, 0.0), Root::ONE).map(|v| (v.value() - c(PI, 0.0)).norm());
    let ok_pi = matches!(phi_quarter, Ok(d) if d <= 1e-10);
    let devs: Vec<Result<f64, String>> = LAURENT_POINTS
        .iter()
        .map(|&p| laurent_deviation(p))
        .collect();
    let worst = devs
        .iter()
        .map(|d| d.clone().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    let first_err = devs.iter().find_map(|d| d.clone().err());
    Check::new(
        ok_pi && worst <= 1e-6,
        format!(
            "|Φ(1/4;1) - π| {:.1e}, 10 expansion points, largest coefficient deviation {worst:.1e}{}",
            phi_quarter.unwrap_or(f64::INFINITY),
            first_err.map(|e| format!(" ({e})")).unwrap_or_default()
        ),
    )
}

// ---------------------------------------------------------------- criterion 7

pub const PROPERTY_CASES: u32 = 256;

pub fn runner(seed: u64) -> TestRunner {
    let cfg = Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(
        cfg,
        proptest::test_runner::TestRng::from_seed(
            proptest::test_runner::RngAlgorithm::ChaCha,
            &seed_bytes(seed),
        ),
    )
}

fn seed_bytes(seed: u64) -> [u8; 32] {
    let mut b = [0u8; 32];
    for (i, chunk) in b.chunks_mut(8).enumerate() {
        chunk.copy_from_slice(&(seed.wrapping_mul(i as u64 + 1)).to_le_bytes());
    }
    b
}

pub fn any_root(max_den: u64) -> impl Strategy<Value = Root> + Clone {
    (1..=max_den).prop_flat_map(|n| (0..n as i64).prop_map(move |k| Root::new(k, n)))
}

pub fn any_comp(max_len: usize, max_exp: u32, max_den: u64) -> impl Strategy<Value = Comp> + Clone {
    prop::collection::vec((1..=max_exp, any_root(max_den)), 1..=max_len).prop_map(Comp::new)
}

/// Admissible multiple t-value specs.
pub fn any_mtv(max_len: usize, max_exp: u32, max_den: u64) -> impl Strategy<Value = SeriesSpec> {
    any_comp(max_len, max_exp, max_den)
        .prop_map(SeriesSpec::mtv)
        .prop_filter("admissible", |s| s.is_admissible())
}

/// Admissible specs from every family.
pub fn any_spec(max_den: u64) -> impl Strategy<Value = SeriesSpec> {
    let outer = (1..=3u32, any_root(max_den));
    let comp = any_comp(2, 3, max_den);
    prop_oneof![
        (
            prop::collection::vec((1..=3u32, any_root(max_den)), 0..=2),
            outer.clone()
        )
            .prop_map(|(c, (q, x))| SeriesSpec::t_sum(Comp::new(c), q, x)),
        (
            prop::collection::vec((1..=3u32, any_root(max_den)), 0..=2),
            outer.clone()
        )
            .prop_map(|(c, (q, x))| SeriesSpec::s_sum(Comp::new(c), q, x)),
        (
            prop::collection::vec((1..=3u32, any_root(max_den)), 0..=2),
            outer
        )
            .prop_map(|(c, (q, x))| SeriesSpec::st_sum(Comp::new(c), q, x)),
        comp.clone().prop_map(SeriesSpec::mtv),
        comp.clone().prop_map(SeriesSpec::mzv),
        comp.prop_map(SeriesSpec::big_mtv),
        (1..=4u32, any_root(max_den)).prop_map(|(p, x)| SeriesSpec::polylog(p, x)),
        (1..=4u32, any_root(max_den)).prop_map(|(p, x)| SeriesSpec::t_polylog(p, x)),
    ]
    .prop_filter("admissible", |s| s.is_admissible())
}

fn eval_any(s: &SeriesSpec) -> Result<CVal, TestCaseError> {
    cyclotsum::numkernel::evaluate(s, &EvalOptions::default())
        .map(|e| e.value)
        .map_err(|e| TestCaseError::fail(format!("{s}: {e}")))
}

pub fn prop_conjugation() -> Result<(), String> {
    runner(1)
        .run(&any_spec(6), |s| {
            let v = eval_any(&s)?;
            let w = eval_any(&s.conj())?;
            let d = (w - v.conj()).abs();
            prop_assert!(d <= v.err + w.err + 1e-12, "{s}: {d:e}");
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn prop_branch_invariance() -> Result<(), String> {
    let strat = (
        any_mtv(2, 3, 6).prop_filter("weight ≤ 6", |s| s.weight() <= 6),
        prop::collection::vec(any::<bool>(), 2),
    );
    runner(2)
        .run(&strat, |(s, flips)| {
            let opts = EvalOptions::default();
            let base = t_via_li_branches(&s, &[], &opts)
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            let flipped = t_via_li_branches(&s, &flips, &opts)
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            let direct =
                multiple_value_with(&s, &opts).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let d = (base - flipped).abs();
            prop_assert!(d <= base.err + flipped.err + 1e-12, "{s} {flips:?}: {d:e}");
            let d = (base - direct).abs();
            prop_assert!(
                d <= base.err + direct.err + 1e-12,
                "{s} against direct: {d:e}"
            );
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn prop_depth_one() -> Result<(), String> {
    runner(3)
        .run(&(1..=6u32, any_root(12)), |(k, x)| {
            if k == 1 && x.is_one() {
                return Ok(());
            }
            let m = multiple_value(&SeriesSpec::mtv(Comp::new(vec![(k, x)])))
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            let t = t_polylog(k, x).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!((m - t).abs() <= m.err + t.err + 1e-12);
            let z = multiple_value(&SeriesSpec::mzv(Comp::new(vec![(k, x)])))
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            let l = polylog(k, x).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!((z - l).abs() <= z.err + l.err + 1e-12);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn prop_round_trip() -> Result<(), String> {
    runner(4)
        .run(&any_spec(1000), |s| {
            let text = s.to_string();
            let back: SeriesSpec = text
                .parse()
                .map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
            prop_assert_eq!(back, s);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn properties() -> Check {
    let runs = [
        ("conjugation", prop_conjugation()),
        ("branch invariance", prop_branch_invariance()),
        ("depth-1 collapse", prop_depth_one()),
        ("round trip", prop_round_trip()),
    ];
    let failed: Vec<String> = runs
        .iter()
        .filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}")))
        .collect();
    Check::new(
        failed.is_empty(),
        if failed.is_empty() {
            format!("4 properties x {PROPERTY_CASES} cases")
        } else {
            failed.join("; ")
        },
    )
}
