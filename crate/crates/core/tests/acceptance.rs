//! Acceptance gate: one test per criterion, each printing a single
//! `[ACCEPTANCE] <name>: PASS/FAIL (<detail>)` line (visible under
//! `cargo test -- --nocapture`).
//!
//! The radii in `TABLE_*` are the bundled reference values (3 decimals);
//! reproduction tolerance ±2e−3 absorbs their final-digit rounding. One
//! reference entry is a documented anomaly carried on an exception list:
//! see `EXCEPTIONS` below.

#![allow(clippy::excessive_precision)] // frozen reference values keep all digits

use std::time::Instant;

use bohr_core::oracle::{self, SHARPNESS_TOL};
use bohr_core::rootfind::{self, RootResult, DEFAULT_RADIUS_TOL};
use bohr_core::specfun::{self, Radial};
use bohr_core::{extremal, BohrClassParams, MajorantFunctional, RadiusProblem};

const TABLE_12_M: [f64; 6] = [0.2, 0.4, 0.6, 0.8, 1.0, 1.29];

const TABLE_1_N: [u32; 4] = [3, 5, 7, 9];
const TABLE_1: [[f64; 6]; 4] = [
    [0.683, 0.527, 0.405, 0.296, 0.187, 0.003],
    [0.702, 0.541, 0.414, 0.301, 0.189, 0.003],
    [0.705, 0.542, 0.414, 0.300, 0.189, 0.003],
    [0.706, 0.5429, 0.414, 0.300, 0.1891, 0.003],
];

const TABLE_2_N: [u32; 3] = [4, 6, 8];
const TABLE_2: [[f64; 6]; 3] = [
    [0.697, 0.537, 0.412, 0.300, 0.189, 0.003],
    [0.704, 0.542, 0.415, 0.301, 0.189, 0.003],
    [0.706, 0.542, 0.414, 0.300, 0.189, 0.003],
];

const TABLE_3_M: [f64; 9] = [0.2, 0.3, 0.5, 0.6, 0.8, 0.9, 1.0, 1.1, 1.29];
const TABLE_3_N: [u32; 5] = [3, 5, 6, 9, 10];
const TABLE_3: [[f64; 9]; 5] = [
    [0.739, 0.668, 0.559, 0.512, 0.425, 0.381, 0.334, 0.279, 0.053],
    [0.751, 0.681, 0.517, 0.524, 0.435, 0.390, 0.342, 0.286, 0.054],
    [0.753, 0.682, 0.572, 0.525, 0.436, 0.391, 0.342, 0.286, 0.054],
    [0.754, 0.684, 0.573, 0.525, 0.436, 0.391, 0.342, 0.286, 0.054],
    [0.755, 0.684, 0.573, 0.525, 0.436, 0.391, 0.342, 0.286, 0.054],
];

// Reference entries that fail their own residual certificate. The only
// known one, r₅(0.5) of table 3, breaks the N-monotonicity every other
// column obeys (r₃ = 0.559 < r₆ = 0.572 but 0.517 printed) — evidence of
// a transposition typo. The recomputed value must differ from the printed
// one, match the expected replacement, and pass the sharpness oracle.
const EXCEPTIONS: [(u32, f64, f64, f64); 1] = [(5, 0.5, 0.517, 0.571)];

const TOL: f64 = 2e-3;

fn report(name: &str, failures: Vec<String>, detail: String) {
    if failures.is_empty() {
        println!("[ACCEPTANCE] {name}: PASS ({detail})");
    } else {
        println!("[ACCEPTANCE] {name}: FAIL ({} problem(s))", failures.len());
        for f in &failures {
            println!("  - {f}");
        }
        panic!("acceptance criterion '{name}' failed");
    }
}

fn solve(problem: RadiusProblem) -> RootResult {
    let f = MajorantFunctional::new(problem).expect("valid problem");
    rootfind::smallest_root(&f, DEFAULT_RADIUS_TOL)
}

fn solved_radius(problem: RadiusProblem) -> f64 {
    match solve(problem) {
        RootResult::Found { radius, .. } => radius,
        other => panic!("{:?}: expected Found, got {:?}", problem, other),
    }
}

fn check_br_table(
    name: &str,
    make: impl Fn(f64, u32) -> RadiusProblem,
    ns: &[u32],
    ms: &[f64],
    expected: &[&[f64]],
    budget: Option<std::time::Duration>,
) {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut matched = 0usize;
    let mut exceptions_hit = Vec::new();
    for (row, &n) in ns.iter().enumerate() {
        for (col, &m) in ms.iter().enumerate() {
            let computed = solved_radius(make(m, n));
            let printed = expected[row][col];
            if let Some(&(_, _, _, replacement)) =
                EXCEPTIONS.iter().find(|&&(en, em, ep, _)| {
                    en == n && em == m && ep == printed && name == "table-3 reproduction"
                })
            {
                // The anomaly must be real (printed value irreproducible) …
                if (computed - printed).abs() <= TOL {
                    failures.push(format!(
                        "exception r_{n}({m}) unexpectedly matches printed {printed}"
                    ));
                }
                // … the recomputed value must land on the replacement …
                if (computed - replacement).abs() > TOL {
                    failures.push(format!(
                        "exception r_{n}({m}): recomputed {computed:.6} vs expected {replacement}"
                    ));
                }
                // … and must itself certify as sharp.
                let problem = make(m, n);
                if oracle::verify_sharpness(problem, &solve(problem)) != Ok(true) {
                    failures.push(format!("exception r_{n}({m}): sharpness oracle rejected"));
                }
                exceptions_hit.push(format!(
                    "r_{n}({m}): printed {printed}, recomputed {computed:.3}"
                ));
            } else if (computed - printed).abs() > TOL {
                failures.push(format!(
                    "r_{n}({m}) = {computed:.6}, printed {printed} (off by {:.1e})",
                    (computed - printed).abs()
                ));
            } else {
                matched += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    if let Some(budget) = budget {
        if elapsed > budget {
            failures.push(format!("runtime {elapsed:?} exceeds budget {budget:?}"));
        }
    }
    let total = ns.len() * ms.len();
    let mut detail = format!("{matched}/{total} within {TOL:.0e} in {elapsed:.2?}");
    for e in exceptions_hit {
        detail.push_str(&format!("; documented exception {e}"));
    }
    report(name, failures, detail);
}

#[test]
fn table_1_reproduction() {
    check_br_table(
        "table-1 reproduction",
        |m, n| RadiusProblem::Br { m, n },
        &TABLE_1_N,
        &TABLE_12_M,
        &TABLE_1.iter().map(|r| &r[..]).collect::<Vec<_>>(),
        Some(std::time::Duration::from_secs(1)),
    );
}

#[test]
fn table_2_reproduction() {
    check_br_table(
        "table-2 reproduction",
        |m, n| RadiusProblem::Br { m, n },
        &TABLE_2_N,
        &TABLE_12_M,
        &TABLE_2.iter().map(|r| &r[..]).collect::<Vec<_>>(),
        None,
    );
}

#[test]
fn table_3_reproduction() {
    check_br_table(
        "table-3 reproduction",
        |m, n| RadiusProblem::BrSq { m, n },
        &TABLE_3_N,
        &TABLE_3_M,
        &TABLE_3.iter().map(|r| &r[..]).collect::<Vec<_>>(),
        None,
    );
}

#[test]
fn non_existence_regime() {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for m in [1.295, 1.5, 2.0] {
        for problem in [
            RadiusProblem::Br { m, n: 3 },
            RadiusProblem::BrSq { m, n: 3 },
            RadiusProblem::BrPow { m, n: 3, pow: 2 },
            RadiusProblem::Area { m, n: 2 },
            RadiusProblem::CoeffSq { m },
            RadiusProblem::Refined { m, n: 3, pow: 1 },
            RadiusProblem::Jacobian { m, n: 2, pow: 1 },
        ] {
            if solve(problem) != RootResult::NoRoot {
                failures.push(format!("{:?}: expected NoRoot", problem));
            } else {
                checked += 1;
            }
            if specfun::dist_target(m) > 0.0 {
                failures.push(format!("dist_target({m}) not ≤ 0"));
            }
        }
    }

    // Threshold: the defining formula M* = 1/(2(2ln2−1)) is canonical.
    // Its value 1.2943497248 sits 3.3e−6 from the quoted decimal 1.294353
    // (a final-digit slip there); the formula, dist_target(M*) = 0, and
    // the sign flips on either side pin the true threshold.
    let m_star = BohrClassParams::M_STAR;
    let formula = 1.0 / (2.0 * (2.0 * std::f64::consts::LN_2 - 1.0));
    if (m_star - formula).abs() > 1e-15 {
        failures.push("M_STAR does not equal its defining formula".into());
    }
    if (m_star - 1.2943497247810449).abs() > 1e-12 {
        failures.push(format!("M_STAR = {m_star}, expected 1.2943497247810449"));
    }
    if (m_star - 1.294353).abs() > 5e-6 {
        failures.push("M_STAR strayed from the quoted decimal by more than a rounding slip".into());
    }
    if specfun::dist_target(m_star).abs() > 1e-15 {
        failures.push("dist_target(M*) is not 0".into());
    }
    if !(specfun::dist_target(1.2943) > 0.0 && specfun::dist_target(1.2944) < 0.0) {
        failures.push("dist_target does not change sign across M*".into());
    }
    report(
        "non-existence regime",
        failures,
        format!(
            "{checked}/21 NoRoot; M* = {m_star:.16} by formula 1/(2(2ln2-1)), \
             quoted decimal 1.294353 off by {:.1e}",
            (m_star - 1.294353).abs()
        ),
    );
}

fn sharpness_grid() -> Vec<RadiusProblem> {
    let mut problems = Vec::new();
    for m in [0.2, 0.6, 1.0] {
        problems.push(RadiusProblem::CoeffSq { m });
        for n in [2u32, 3, 5, 8] {
            problems.push(RadiusProblem::Br { m, n });
            problems.push(RadiusProblem::BrSq { m, n });
            problems.push(RadiusProblem::Area { m, n });
            for pow in [1u32, 2, 3] {
                problems.push(RadiusProblem::BrPow { m, n, pow });
            }
            for pow in [1u32, 2] {
                problems.push(RadiusProblem::Refined { m, n, pow });
                problems.push(RadiusProblem::Jacobian { m, n, pow });
            }
        }
    }
    problems
}

#[test]
fn sharpness_suite() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let problems = sharpness_grid();
    for &problem in &problems {
        let result = solve(problem);
        let Some(radius) = result.radius() else {
            failures.push(format!("{:?}: no root found", problem));
            continue;
        };
        match oracle::verify_sharpness(problem, &result) {
            Ok(true) => {}
            other => failures.push(format!(
                "{:?}: |LHS(root) - d| > {SHARPNESS_TOL:.0e} at {radius:.9} ({other:?})",
                problem
            )),
        }
        match oracle::verify_inequality_below(problem, radius, 100) {
            Ok(true) => {}
            other => failures.push(format!(
                "{:?}: LHS exceeds d below the root ({other:?})",
                problem
            )),
        }
    }
    let elapsed = started.elapsed();
    if elapsed > std::time::Duration::from_secs(30) {
        failures.push(format!("runtime {elapsed:?} exceeds 30 s"));
    }
    report(
        "sharpness suite",
        failures,
        format!(
            "{} roots: |LHS(root) - d(M)| ≤ 1e-8 and 100 below-root samples each, in {elapsed:.2?}",
            problems.len()
        ),
    );
}

#[test]
fn closed_form_certification() {
    let mut failures = Vec::new();
    let mut checks = 0usize;
    let mut check = |ok: bool, what: String| {
        if ok {
            checks += 1;
        } else {
            failures.push(what);
        }
    };
    let k = 200;
    for i in 1..=19 {
        let rv = i as f64 * 0.05;
        let r = Radial::new(rv).unwrap();
        let phi_enc = oracle::certified_sum(&oracle::phi_series(r), k).unwrap();
        check(phi_enc.contains(specfun::phi(r)), format!("phi({rv})"));
        for mexp in [1u32, 2, 3] {
            let arg = r.powu(mexp);
            let enc = oracle::certified_sum(&oracle::phi_series(arg), k).unwrap();
            check(
                enc.contains(specfun::psi(mexp, r) + arg.get()),
                format!("psi({mexp},{rv})"),
            );
        }
        let dilog_enc = oracle::certified_sum(&oracle::dilog_series(r), k).unwrap();
        check(
            dilog_enc.contains(specfun::dilog(rv).unwrap()),
            format!("dilog({rv})"),
        );
        for m in [0.2, 1.0] {
            let params = BohrClassParams::new(m).unwrap();
            let area_enc = oracle::certified_sum(&oracle::area_series(m, r), k).unwrap();
            check(
                area_enc.contains(specfun::area_tail(m, r)),
                format!("area_tail({m},{rv})"),
            );
            let (lower, upper) = extremal::growth_bounds(params, r);
            let low_enc = oracle::certified_sum(&oracle::growth_lower_series(m, r), k).unwrap();
            check(
                low_enc.contains(lower - rv),
                format!("growth lower({m},{rv})"),
            );
            let up_enc = oracle::certified_sum(&oracle::extremal_tail_series(m, r), k).unwrap();
            check(
                up_enc.contains(upper - rv),
                format!("extremal_value({m},{rv})"),
            );
        }
    }
    // Reflection identity at ½: Li₂(½) = π²/12 − ln²2/2.
    let half = std::f64::consts::PI * std::f64::consts::PI / 12.0
        - std::f64::consts::LN_2 * std::f64::consts::LN_2 / 2.0;
    let err = (specfun::dilog(0.5).unwrap() - half).abs();
    check(err <= 1e-13, format!("dilog(0.5) reflection error {err:.1e}"));
    report(
        "closed-form certification",
        failures,
        format!("{checks} enclosure memberships at K = {k}; dilog(0.5) reflection error {err:.1e}"),
    );
}

#[test]
fn monotonicity_properties() {
    let mut failures = Vec::new();
    let mut decreasing_chains = 0usize;

    // Strictly decreasing in M, every kind.
    let kinds: [fn(f64) -> RadiusProblem; 7] = [
        |m| RadiusProblem::Br { m, n: 3 },
        |m| RadiusProblem::BrSq { m, n: 5 },
        |m| RadiusProblem::BrPow { m, n: 3, pow: 2 },
        |m| RadiusProblem::Area { m, n: 2 },
        |m| RadiusProblem::CoeffSq { m },
        |m| RadiusProblem::Refined { m, n: 5, pow: 2 },
        |m| RadiusProblem::Jacobian { m, n: 2, pow: 1 },
    ];
    for make in kinds {
        let mut prev = f64::INFINITY;
        for m in [0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.29] {
            let radius = solved_radius(make(m));
            if radius >= prev {
                failures.push(format!(
                    "{:?}: radius {radius:.9} did not decrease (prev {prev:.9})",
                    make(m)
                ));
            }
            prev = radius;
        }
        decreasing_chains += 1;
    }

    // Nondecreasing in N for br at fixed M (1e−10 bisection slack).
    let mut nondecreasing_chains = 0usize;
    for m in [0.2, 0.6, 1.0, 1.29] {
        let mut prev = 0.0f64;
        for n in 2..=10 {
            let radius = solved_radius(RadiusProblem::Br { m, n });
            if radius < prev - 1e-10 {
                failures.push(format!(
                    "br M={m}: r_{n} = {radius:.9} < r_{} = {prev:.9}",
                    n - 1
                ));
            }
            prev = radius;
        }
        nondecreasing_chains += 1;
    }

    // The quoted trend line: r₃(0.2) ≤ r₅(0.2) ≤ r₇(0.2) ≤ r₉(0.2).
    let chain: Vec<f64> = TABLE_1_N
        .iter()
        .map(|&n| solved_radius(RadiusProblem::Br { m: 0.2, n }))
        .collect();
    if !chain.windows(2).all(|w| w[0] <= w[1]) {
        failures.push(format!("r_N(0.2) chain not nondecreasing: {chain:?}"));
    }

    report(
        "monotonicity properties",
        failures,
        format!(
            "{decreasing_chains} kinds strictly decreasing in M; \
             br nondecreasing in N over {nondecreasing_chains} M values"
        ),
    );
}
