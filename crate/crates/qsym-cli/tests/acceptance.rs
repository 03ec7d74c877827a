//! Acceptance gate for the whole workspace.
//!
//! Nine criteria, one test each, every test printing a single
//! `criterion N: PASS`/`FAIL` line (visible under `--nocapture`):
//!
//! 1. all 23 named series verify symbolically on five parameter tuples each;
//! 2. the classical families (type I, type II, generic) verify;
//! 3. the five embedded series verify and specialize term-for-term into
//!    their named hosts;
//! 4. doubling the e-images breaks the commutator axiom for every series;
//! 5. the closed-form commutator and power formulas agree with the
//!    recursive engine;
//! 6. conjugation by random automorphisms preserves verification and the
//!    `(|D|, G)` invariants;
//! 7. the reference spot values (invariants, minimality, orbit witness)
//!    come out exactly;
//! 8. the image-ratio identities and the extreme-index law hold on every
//!    instance;
//! 9. the CLI round-trips documents and maps fixture outcomes to the
//!    documented exit codes.

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsym_core::action::{act, act_word, closed_power, Generator, Ladder, PlaneGenerator};
use qsym_core::catalog::{
    invariants, make_generic, make_nongeneric, make_type1, make_type2, minimality_check,
    transform_params, CoefficientSet, IntegralParams, SeriesId, Sign,
};
use qsym_core::qplane::{AutomorphismSpec, LaurentPoly, Sl2z, WeightPair};
use qsym_core::scalar::{parse_scalar, QScalar, WeightConstant};
use qsym_core::verify::{
    check_image_ratios, compute_extreme_indices, conjugate, ef_fe_closed, orbit_check,
    verify_module_algebra, OrbitVerdict,
};
use qsym_core::SymmetryAction;

use qsym_cli::document::{OrbitDocument, SymmetryDocument};

/// Prints the per-criterion verdict line and fails the test on FAIL.
fn verdict(n: usize, name: &str, failures: &[String]) {
    let ok = failures.is_empty();
    println!("criterion {n}: {} ({name})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} ({name}) failures:\n{}", failures.join("\n"));
}

/// A weight constant from its exact textual form.
fn wc(text: &str) -> WeightConstant {
    WeightConstant::try_from_scalar(&parse_scalar(text).expect("weight literal parses"))
        .expect("weight literal is a weight constant")
}

/// One sampled series instance with its parameters.
struct PoolEntry {
    id: SeriesId,
    params: IntegralParams,
    action: SymmetryAction,
}

fn named_ids() -> impl Iterator<Item = SeriesId> {
    SeriesId::ALL
        .into_iter()
        .filter(|id| id.is_integral() && !id.is_embedded())
}

/// Five symbolic instances per named series: the first parameter tuples
/// `(r, s, u, v)` in `[-4, 4]^4` lexicographic order that satisfy the class
/// signature, with the progression shift `M` cycling through `0, 1, -1, 2,
/// -2` and all coefficients left symbolic.
fn instance_pool() -> &'static Vec<PoolEntry> {
    static POOL: OnceLock<Vec<PoolEntry>> = OnceLock::new();
    POOL.get_or_init(|| {
        let m_cycle = [0i64, 1, -1, 2, -2];
        let symbolic = CoefficientSet::new();
        let mut pool = Vec::new();
        for id in named_ids() {
            let sig = id.signature().expect("named series have a signature");
            let mut found = 0usize;
            'scan: for r in -4..=4i64 {
                for s in -4..=4i64 {
                    for u in -4..=4i64 {
                        for v in -4..=4i64 {
                            let m = m_cycle[found];
                            let Ok(params) = IntegralParams::new(r, s, u, v, m, sig.l, sig.n)
                            else {
                                continue;
                            };
                            if invariants(&params) != (sig.d, sig.g) {
                                continue;
                            }
                            let Ok(action) = make_nongeneric(id, &params, &symbolic) else {
                                continue;
                            };
                            pool.push(PoolEntry { id, params, action });
                            found += 1;
                            if found == m_cycle.len() {
                                break 'scan;
                            }
                        }
                    }
                }
            }
            assert_eq!(
                found,
                m_cycle.len(),
                "series {id} has too few parameter tuples in range"
            );
        }
        pool
    })
}

#[test]
fn criterion_1_full_catalog_soundness() {
    let start = Instant::now();
    let pool = instance_pool();
    let mut failures = Vec::new();
    for entry in pool {
        let report = verify_module_algebra(&entry.action);
        if !report.pass() {
            let detail: Vec<String> = report
                .failures()
                .map(|f| format!("{} [{}]", f.check, f.context))
                .collect();
            failures.push(format!("{} {:?}: {}", entry.id, entry.params, detail.join("; ")));
        }
    }
    if pool.len() != 23 * 5 {
        failures.push(format!("expected 115 instances, sampled {}", pool.len()));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        failures.push(format!("runtime {elapsed:?} exceeds five minutes"));
    }
    verdict(1, "full-catalog soundness", &failures);
}

fn check_classical(failures: &mut Vec<String>, label: String, action: &SymmetryAction) {
    if !verify_module_algebra(action).pass() {
        failures.push(label);
    }
}

#[test]
fn criterion_2_classical_families() {
    let mut failures = Vec::new();

    let type1_pairs = [
        ("q", "q^-1"),
        ("-1", "q^2"),
        ("z^3", "-z"),
        ("-q^-2", "5"),
        ("3/2", "-7"),
    ];
    for (a, b) in type1_pairs {
        check_classical(&mut failures, format!("type I ({a}, {b})"), &make_type1(&wc(a), &wc(b)));
    }

    for ex in [Sign::Plus, Sign::Minus] {
        for ey in [Sign::Plus, Sign::Minus] {
            check_classical(
                &mut failures,
                format!("type II ({}, {})", ex.to_int(), ey.to_int()),
                &make_type2(ex, ey),
            );
        }
    }

    let a_sym = QScalar::var("a0").expect("a0 is a valid indeterminate");
    let generics = [
        (1, 0, "q^2", "3"),
        (1, 0, "q^2", "5"),
        (0, 1, "3", "q^2"),
        (1, 1, "2*q^2", "1/2"),
        (1, 0, "q^2", "-3"),
    ];
    for (u, v, alpha, beta) in generics {
        match make_generic(u, v, &wc(alpha), &wc(beta), &a_sym) {
            Ok(action) => check_classical(
                &mut failures,
                format!("generic ({u}, {v}, {alpha}, {beta})"),
                &action,
            ),
            Err(e) => failures.push(format!("generic ({u}, {v}, {alpha}, {beta}): {e}")),
        }
    }

    verdict(2, "classical families", &failures);
}

#[test]
fn criterion_3_embedded_series() {
    let mut failures = Vec::new();
    // (embedded id, (r, s, u, v, m)) with the host and zeroed coefficient
    // taken from the catalog's embedding data.
    let cases = [
        (SeriesId::EmbD1N2L0, (0, 1, -1, 0, 0)),
        (SeriesId::EmbD1N2L1, (0, 1, -1, 0, 0)),
        (SeriesId::EmbD1N2L2, (0, 1, -1, 0, 1)),
        (SeriesId::EmbD2N1L0, (1, 1, -1, 1, 0)),
        (SeriesId::EmbD2N1L1, (1, 1, -1, 1, 0)),
    ];
    let expected_hosts = [
        (SeriesId::D1G1E1F3, "c4"),
        (SeriesId::D1G1E4F2, "a2"),
        (SeriesId::D1G1E3F1, "a4"),
        (SeriesId::D2G1E1F3A, "c2"),
        (SeriesId::D2G1E3F1A, "a2"),
    ];
    for ((id, (r, s, u, v, m)), expected) in cases.into_iter().zip(expected_hosts) {
        let Some((host, zeroed)) = id.embedding() else {
            failures.push(format!("{id}: no embedding recorded"));
            continue;
        };
        if (host, zeroed) != expected {
            failures.push(format!(
                "{id}: embedding ({host}, {zeroed}) differs from the catalog claim ({}, {})",
                expected.0, expected.1
            ));
            continue;
        }
        let sig = id.signature().expect("embedded series have a signature");
        let params = IntegralParams::new(r, s, u, v, m, sig.l, sig.n)
            .expect("embedded sample parameters are valid");
        let embedded = match make_nongeneric(id, &params, &CoefficientSet::new()) {
            Ok(a) => a,
            Err(e) => {
                failures.push(format!("{id}: construction failed: {e}"));
                continue;
            }
        };
        if !verify_module_algebra(&embedded).pass() {
            failures.push(format!("{id}: verification failed"));
            continue;
        }
        let host_sig = host.signature().expect("host series have a signature");
        let host_params = IntegralParams::new(r, s, u, v, m, host_sig.l, host_sig.n)
            .expect("host sample parameters are valid");
        let coeffs = CoefficientSet::new().with(zeroed, QScalar::zero());
        match make_nongeneric(host, &host_params, &coeffs) {
            Ok(specialized) if specialized == embedded => {}
            Ok(_) => failures.push(format!(
                "{id}: specializing {host} at {zeroed} = 0 gives a different action"
            )),
            Err(e) => failures.push(format!("{id}: host specialization failed: {e}")),
        }
    }
    verdict(3, "embedded series and specialization", &failures);
}

#[test]
fn criterion_4_sensitivity_of_the_commutator() {
    let pool = instance_pool();
    let mut failures = Vec::new();
    let x = LaurentPoly::monomial(QScalar::one(), 1, 0);
    let y = LaurentPoly::monomial(QScalar::one(), 0, 1);
    let denom_inv = (&QScalar::q_pow(1) - &QScalar::q_pow(-1))
        .inverse()
        .expect("q - q^-1 is nonzero");
    for entry in pool.iter().step_by(5) {
        let two = QScalar::from_int(2);
        let tampered = SymmetryAction::new(
            entry.action.k_spec().clone(),
            entry.action.e_x().mul_term_left(&two, 0, 0),
            entry.action.e_y().mul_term_left(&two, 0, 0),
            entry.action.f_x().clone(),
            entry.action.f_y().clone(),
        );
        let residual = |p: &LaurentPoly| {
            let commutator = &act_word(&[Generator::E, Generator::F], p, &tampered)
                - &act_word(&[Generator::F, Generator::E], p, &tampered);
            let target = (&act(Generator::K, p, &tampered)
                - &act(Generator::KInv, p, &tampered))
                .mul_term_left(&denom_inv, 0, 0);
            &commutator - &target
        };
        if residual(&x).is_zero() && residual(&y).is_zero() {
            failures.push(format!(
                "{}: doubled e-images still satisfy the commutator axiom",
                entry.id
            ));
        }
    }
    verdict(4, "sensitivity to e-image scaling", &failures);
}

#[test]
fn criterion_5_closed_form_oracles() {
    let pool = instance_pool();
    let mut failures = Vec::new();

    let x = LaurentPoly::monomial(QScalar::one(), 1, 0);
    let y = LaurentPoly::monomial(QScalar::one(), 0, 1);
    for entry in pool {
        let (closed_x, closed_y) = match ef_fe_closed(&entry.action, &entry.params) {
            Ok(pair) => pair,
            Err(e) => {
                failures.push(format!("{}: closed commutator failed: {e}", entry.id));
                continue;
            }
        };
        let engine = |p: &LaurentPoly| {
            &act_word(&[Generator::E, Generator::F], p, &entry.action)
                - &act_word(&[Generator::F, Generator::E], p, &entry.action)
        };
        if engine(&x) != closed_x || engine(&y) != closed_y {
            failures.push(format!(
                "{} {:?}: closed commutator disagrees with the engine",
                entry.id, entry.params
            ));
        }
    }

    for entry in pool.iter().step_by(5).take(10) {
        for ladder in [Ladder::E, Ladder::F] {
            for generator in [PlaneGenerator::X, PlaneGenerator::Y] {
                for p in -6..=6i64 {
                    let closed = closed_power(ladder, generator, p, &entry.action);
                    let mono = match generator {
                        PlaneGenerator::X => LaurentPoly::monomial(QScalar::one(), p, 0),
                        PlaneGenerator::Y => LaurentPoly::monomial(QScalar::one(), 0, p),
                    };
                    let g = match ladder {
                        Ladder::E => Generator::E,
                        Ladder::F => Generator::F,
                    };
                    if closed != act(g, &mono, &entry.action) {
                        failures.push(format!(
                            "{}: closed {ladder:?} power p = {p} on {generator:?} disagrees",
                            entry.id
                        ));
                    }
                }
            }
        }
    }

    verdict(5, "closed-form oracle agreement", &failures);
}

/// Ten deterministic matrices with entries bounded by 3.
fn random_sl2z_matrices() -> Vec<Sl2z> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5132_2026);
    let mut out = Vec::new();
    while out.len() < 10 {
        let k: i64 = rng.random_range(-3..=3);
        let m: i64 = rng.random_range(-3..=3);
        let l: i64 = rng.random_range(-3..=3);
        // Solve k n - m l = 1 for n within the same bound.
        let n = if k == 0 {
            if m * l != -1 {
                continue;
            }
            rng.random_range(-3..=3)
        } else {
            let numer = 1 + m * l;
            if numer % k != 0 {
                continue;
            }
            numer / k
        };
        if n.abs() > 3 {
            continue;
        }
        out.push(Sl2z::new(k, m, l, n).expect("sampled matrix has determinant one"));
    }
    out
}

#[test]
fn criterion_6_conjugation_invariance() {
    let pool = instance_pool();
    let mut failures = Vec::new();
    let mu = QScalar::var("mu").expect("mu is a valid indeterminate");
    let nu = QScalar::var("nu").expect("nu is a valid indeterminate");
    let sigmas = random_sl2z_matrices();
    for entry in pool.iter().step_by(5).take(10) {
        for sigma in &sigmas {
            let phi = AutomorphismSpec::new(sigma.clone(), mu.clone(), nu.clone())
                .expect("symbolic scales are nonzero");
            let moved = conjugate(&entry.action, &phi);
            if !verify_module_algebra(&moved).pass() {
                failures.push(format!(
                    "{} conjugated by {:?} fails verification",
                    entry.id,
                    sigma.entries()
                ));
            }
            let transported = transform_params(&entry.params, sigma);
            let (d0, g0) = invariants(&entry.params);
            let (d1, g1) = invariants(&transported);
            if (d0.abs(), g0) != (d1.abs(), g1) {
                failures.push(format!(
                    "{}: invariants moved from ({}, {g0}) to ({}, {g1}) under {:?}",
                    entry.id,
                    d0.abs(),
                    d1.abs(),
                    sigma.entries()
                ));
            }
        }
    }
    verdict(6, "conjugation invariance", &failures);
}

#[test]
fn criterion_7_reference_spot_values() {
    let mut failures = Vec::new();

    let params = IntegralParams::new(2, 2, 1, 2, 0, 0, 2).expect("reference matrix is valid");
    if invariants(&params) != (2, 2) {
        failures.push(format!(
            "invariants of (2 2; 1 2) came out as {:?}",
            invariants(&params)
        ));
    }

    match minimality_check(2, 2, &WeightPair::new(wc("q^-2"), wc("-q^2"))) {
        Ok(true) => {}
        other => failures.push(format!("minimality for beta = -q^2: {other:?}")),
    }
    match minimality_check(2, 2, &WeightPair::new(wc("q^-2"), wc("q^2"))) {
        Ok(false) => {}
        other => failures.push(format!("minimality for beta = q^2: {other:?}")),
    }

    let w1 = WeightPair::new(wc("-q^-1"), wc("-1"));
    let w2 = WeightPair::new(wc("q^-1"), wc("-1"));
    match orbit_check(&w1, &w2) {
        Ok(OrbitVerdict::Yes(sigma)) if sigma.entries() == (1, 1, 0, 1) => {}
        other => failures.push(format!("orbit witness: {other:?}")),
    }

    verdict(7, "reference spot values", &failures);
}

#[test]
fn criterion_8_ratio_and_index_laws() {
    let pool = instance_pool();
    let mut failures = Vec::new();
    for entry in pool {
        match check_image_ratios(&entry.action) {
            Ok(report) if report.pass() => {}
            Ok(_) => failures.push(format!("{}: ratio identities fail", entry.id)),
            Err(e) => failures.push(format!("{}: ratio check errored: {e}", entry.id)),
        }
        match compute_extreme_indices(&entry.action, &entry.params) {
            Ok(report) => {
                if !(report.one_extreme_sum_zero && report.other_extreme_in_law) {
                    failures.push(format!(
                        "{} {:?}: extreme indices ({}, {}, {}, {}) break the law",
                        entry.id,
                        entry.params,
                        report.minind_e,
                        report.maxind_e,
                        report.minind_f,
                        report.maxind_f
                    ));
                }
            }
            Err(e) => failures.push(format!("{}: index recovery errored: {e}", entry.id)),
        }
    }
    verdict(8, "ratio relations and extreme-index law", &failures);
}

const VALID_FIXTURES: [&str; 10] = [
    "d1g1e1f3",
    "d1g1e2f4",
    "d2g1e2f2a",
    "d2g2e1f3",
    "d4g1e1f2a",
    "d4g2e2f1b",
    "embd1n2l0",
    "type1",
    "type2",
    "generic",
];

const INVALID_FIXTURES: [&str; 5] = [
    "invalid_zero_direction",
    "invalid_parity",
    "invalid_mismatch",
    "invalid_coefficient",
    "invalid_missing_series",
];

fn fixture_path(name: &str) -> String {
    format!("{}/tests/fixtures/{name}.toml", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn criterion_9_cli_contract() {
    let mut failures = Vec::new();

    for name in VALID_FIXTURES.iter().chain(&INVALID_FIXTURES) {
        let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
        match SymmetryDocument::from_toml(&text) {
            Ok(doc) => {
                let serialized = doc.to_toml().expect("documents serialize");
                match SymmetryDocument::from_toml(&serialized) {
                    Ok(reparsed) if reparsed == doc => {}
                    _ => failures.push(format!("{name}: round trip is not the identity")),
                }
            }
            Err(e) => failures.push(format!("{name}: fixture does not parse: {e}")),
        }
    }
    let orbit_text =
        std::fs::read_to_string(fixture_path("orbit_pair")).expect("orbit fixture exists");
    match OrbitDocument::from_toml(&orbit_text) {
        Ok(doc) => {
            let serialized = doc.to_toml().expect("orbit documents serialize");
            match OrbitDocument::from_toml(&serialized) {
                Ok(reparsed) if reparsed == doc => {}
                _ => failures.push("orbit_pair: round trip is not the identity".to_string()),
            }
        }
        Err(e) => failures.push(format!("orbit_pair: fixture does not parse: {e}")),
    }

    let bin = env!("CARGO_BIN_EXE_qsym");
    let run_verify = |name: &str| {
        Command::new(bin)
            .args(["verify", "--input", &fixture_path(name)])
            .output()
            .expect("binary runs")
    };
    for name in VALID_FIXTURES {
        let output = run_verify(name);
        if output.status.code() != Some(0) {
            failures.push(format!(
                "{name}: expected exit 0, got {:?}: {}",
                output.status.code(),
                String::from_utf8_lossy(&output.stderr)
            ));
        }
    }
    for name in INVALID_FIXTURES {
        let output = run_verify(name);
        if output.status.code() != Some(2) {
            failures.push(format!(
                "{name}: expected exit 2, got {:?}",
                output.status.code()
            ));
        }
    }

    let orbit_output = Command::new(bin)
        .args(["orbit", "--input", &fixture_path("orbit_pair"), "--json"])
        .output()
        .expect("binary runs");
    if orbit_output.status.code() != Some(0) {
        failures.push(format!(
            "orbit_pair: expected exit 0, got {:?}",
            orbit_output.status.code()
        ));
    } else {
        let value: serde_json::Value =
            serde_json::from_slice(&orbit_output.stdout).expect("orbit output is JSON");
        if value["witness"] != serde_json::json!([1, 1, 0, 1]) {
            failures.push(format!("orbit_pair: unexpected witness {}", value["witness"]));
        }
    }

    verdict(9, "CLI contract", &failures);
}
