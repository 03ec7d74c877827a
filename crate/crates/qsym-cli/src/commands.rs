//! Subcommand implementations for the `qsym` binary.
//!
//! - Each command returns a `CmdOutcome`: plain text, an equivalent JSON
//!   value, and the process exit code.
//! - Output ordering is deterministic: the family table is sorted by
//!   `(D, G, L)` and the verification checks run in a fixed order.
//! - Every scalar in the output is exact (a fraction of integer-coefficient
//!   polynomials in `z`), never floating point.

use serde_json::{json, Value};

use qsym_core::action::{act_word, Generator};
use qsym_core::catalog::{
    invariants, minimality_check, transform_params, weight_constants_for, SeriesId, WeightVariant,
};
use qsym_core::qplane::LaurentPoly;
use qsym_core::verify::{
    check_image_ratios, compute_extreme_indices, conjugate, ef_fe_closed, orbit_check_with_bound,
    verify_module_algebra, OrbitVerdict, VerifyError, DEFAULT_ORBIT_BOUND,
};
use qsym_core::SymmetryAction;

use crate::document::{Family, OrbitDocument, SymmetryDocument};
use crate::CliError;

/// Result of one subcommand: what to print and how to exit.
pub struct CmdOutcome {
    /// Process exit code.
    pub exit_code: i32,
    /// Human-readable report.
    pub text: String,
    /// Machine-readable equivalent, printed under `--json`.
    pub json: Value,
}

impl CmdOutcome {
    fn success(text: String, json: Value) -> Self {
        CmdOutcome { exit_code: 0, text, json }
    }
}

/// One row of the family listing.
struct ListRow {
    id: SeriesId,
    kind: &'static str,
    d: Option<i64>,
    g: Option<i64>,
    l: Option<i64>,
    n: Option<i64>,
}

fn list_rows() -> Vec<ListRow> {
    let mut classical = Vec::new();
    let mut integral = Vec::new();
    for id in SeriesId::ALL {
        if id.is_classical() {
            classical.push(ListRow { id, kind: "classical", d: None, g: None, l: None, n: None });
        } else {
            let sig = id.signature().expect("integral series have a signature");
            let kind = if id.is_embedded() { "embedded" } else { "series" };
            integral.push(ListRow {
                id,
                kind,
                d: Some(sig.d),
                g: Some(sig.g),
                l: Some(sig.l),
                n: Some(sig.n),
            });
        }
    }
    integral.sort_by_key(|row| (row.d, row.g, row.l, row.id.to_string()));
    classical.extend(integral);
    classical
}

/// Lists the symmetry families, optionally filtered by the invariants.
///
/// A `--d` or `--g` filter restricts to integral series with that invariant;
/// the classical families carry no `(D, G)` pair and are dropped by any
/// filter.
pub fn cmd_list(d_filter: Option<i64>, g_filter: Option<i64>) -> Result<CmdOutcome, CliError> {
    let filtered = d_filter.is_some() || g_filter.is_some();
    let rows: Vec<ListRow> = list_rows()
        .into_iter()
        .filter(|row| {
            if filtered && row.d.is_none() {
                return false;
            }
            d_filter.is_none_or(|d| row.d == Some(d))
                && g_filter.is_none_or(|g| row.g == Some(g))
        })
        .collect();

    let mut text = String::new();
    let mut entries = Vec::new();
    for row in &rows {
        match (row.d, row.g, row.l, row.n) {
            (Some(d), Some(g), Some(l), Some(n)) => {
                let coeffs: Vec<&str> = row
                    .id
                    .free_coefficients()
                    .into_iter()
                    .map(|(name, _)| name)
                    .collect();
                text.push_str(&format!(
                    "{:<12} {:<9} D={d} G={g} L={l} N={n} coefficients: {}\n",
                    row.id.to_string(),
                    row.kind,
                    coeffs.join(", "),
                ));
                entries.push(json!({
                    "id": row.id.to_string(),
                    "kind": row.kind,
                    "d": d, "g": g, "l": l, "n": n,
                    "coefficients": coeffs,
                }));
            }
            _ => {
                text.push_str(&format!("{:<12} {}\n", row.id.to_string(), row.kind));
                entries.push(json!({ "id": row.id.to_string(), "kind": row.kind }));
            }
        }
    }
    text.push_str(&format!("{} families\n", rows.len()));
    Ok(CmdOutcome::success(text, json!({ "families": entries, "count": rows.len() })))
}

/// One named check with its outcome.
struct CheckLine {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn push_report(
    lines: &mut Vec<CheckLine>,
    name: &'static str,
    report: &qsym_core::VerificationReport,
) {
    let passed = report.pass();
    let detail = if passed {
        String::new()
    } else {
        report
            .failures()
            .map(|f| format!("{} [{}]", f.check, f.context))
            .collect::<Vec<_>>()
            .join("; ")
    };
    lines.push(CheckLine { name, passed, detail });
}

fn render_checks(lines: &[CheckLine]) -> (String, Value, i32) {
    let mut text = String::new();
    let mut entries = Vec::new();
    for line in lines {
        let status = if line.passed { "PASS" } else { "FAIL" };
        if line.detail.is_empty() {
            text.push_str(&format!("{status}  {}\n", line.name));
        } else {
            text.push_str(&format!("{status}  {}: {}\n", line.name, line.detail));
        }
        entries.push(json!({
            "check": line.name,
            "passed": line.passed,
            "detail": line.detail,
        }));
    }
    let all_pass = lines.iter().all(|l| l.passed);
    text.push_str(if all_pass { "result: PASS\n" } else { "result: FAIL\n" });
    let json = json!({ "checks": entries, "passed": all_pass });
    (text, json, if all_pass { 0 } else { 1 })
}

/// Verifies a symmetry document against the module-algebra axioms.
///
/// Runs the axiom panel, the cross-ratio identities, and for series
/// documents the closed-form commutator and the extreme-index law. Exits
/// `0` only when every check passes.
pub fn cmd_verify(doc: &SymmetryDocument) -> Result<CmdOutcome, CliError> {
    let resolved = doc.resolve()?;
    let mut lines = Vec::new();

    let axioms = verify_module_algebra(&resolved.action);
    push_report(&mut lines, "module-algebra axioms", &axioms);

    if resolved.action.is_weight_type() {
        match check_image_ratios(&resolved.action) {
            Ok(report) => push_report(&mut lines, "image-ratio identities", &report),
            Err(e) => {
                return Err(CliError::Internal(format!("ratio check failed to run: {e}")))
            }
        }
    }

    if let Some((_, params)) = &resolved.series {
        match ef_fe_closed(&resolved.action, params) {
            Ok((closed_x, closed_y)) => {
                let (engine_x, engine_y) = engine_commutator(&resolved.action);
                let ok = closed_x == engine_x && closed_y == engine_y;
                lines.push(CheckLine {
                    name: "closed-form commutator",
                    passed: ok,
                    detail: if ok {
                        String::new()
                    } else {
                        "closed form disagrees with the recursive action".to_string()
                    },
                });
            }
            Err(VerifyError::TypeIISignal) => lines.push(CheckLine {
                name: "closed-form commutator",
                passed: true,
                detail: "skipped: e and f act as zero".to_string(),
            }),
            Err(e) => return Err(CliError::Validation(format!("commutator recovery: {e}"))),
        }

        match compute_extreme_indices(&resolved.action, params) {
            Ok(report) => {
                let ok = report.one_extreme_sum_zero && report.other_extreme_in_law;
                lines.push(CheckLine {
                    name: "extreme-index law",
                    passed: ok,
                    detail: format!(
                        "minind_e={} maxind_e={} minind_f={} maxind_f={}",
                        report.minind_e, report.maxind_e, report.minind_f, report.maxind_f
                    ),
                });
            }
            Err(VerifyError::TypeIISignal) => lines.push(CheckLine {
                name: "extreme-index law",
                passed: true,
                detail: "skipped: e and f act as zero".to_string(),
            }),
            Err(e) => return Err(CliError::Validation(format!("index recovery: {e}"))),
        }
    }

    let (text, json, exit_code) = render_checks(&lines);
    Ok(CmdOutcome { exit_code, text, json })
}

/// The commutator images `(ef - fe)(x)` and `(ef - fe)(y)` computed by the
/// recursive action engine.
fn engine_commutator(s: &SymmetryAction) -> (LaurentPoly, LaurentPoly) {
    let x = LaurentPoly::monomial(qsym_core::QScalar::one(), 1, 0);
    let y = LaurentPoly::monomial(qsym_core::QScalar::one(), 0, 1);
    let diff = |p: &LaurentPoly| {
        &act_word(&[Generator::E, Generator::F], p, s)
            - &act_word(&[Generator::F, Generator::E], p, s)
    };
    (diff(&x), diff(&y))
}

/// Reports the isomorphism invariants of a series document.
///
/// Prints `|D|`, `G`, the weight-constant pair, and whether `(r, s)` is
/// minimal for that pair.
pub fn cmd_invariants(doc: &SymmetryDocument) -> Result<CmdOutcome, CliError> {
    if doc.family != Family::Series {
        return Err(CliError::Validation(
            "invariants are defined for series documents only".to_string(),
        ));
    }
    let resolved = doc.resolve()?;
    let (id, params) = resolved
        .series
        .as_ref()
        .expect("series documents resolve with series data");
    let (d, g) = invariants(params);
    let variant = id.variant().unwrap_or(WeightVariant::A);
    let weights = weight_constants_for(*id, params, variant)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let minimal = minimality_check(params.r(), params.s(), &weights)
        .map_err(|e| CliError::Internal(e.to_string()))?;

    let text = format!(
        "series: {id}\n|D| = {}\nG = {}\nalpha = {}\nbeta = {}\nminimal: {}\n",
        d.abs(),
        g,
        weights.alpha,
        weights.beta,
        minimal,
    );
    let json = json!({
        "series": id.to_string(),
        "abs_d": d.abs(),
        "g": g,
        "alpha": weights.alpha.to_string(),
        "beta": weights.beta.to_string(),
        "minimal": minimal,
    });
    Ok(CmdOutcome::success(text, json))
}

/// Conjugates a symmetry by the automorphism named in the document.
///
/// Emits the transported action (all generator images as exact strings),
/// the transported integral parameters for series documents, and re-runs
/// the axiom panel on the result; exits `1` if that verification fails.
pub fn cmd_conjugate(doc: &SymmetryDocument) -> Result<CmdOutcome, CliError> {
    let phi = doc.automorphism_spec()?.ok_or_else(|| {
        CliError::Validation("conjugation requires an [automorphism] table".to_string())
    })?;
    let resolved = doc.resolve()?;
    let conjugated = conjugate(&resolved.action, &phi);
    let report = verify_module_algebra(&conjugated);
    let passed = report.pass();

    let (k, m, l, n) = phi.sigma().entries();
    let mut text = format!(
        "sigma = [{k}, {m}, {l}, {n}]\nmu = {}\nnu = {}\n",
        phi.mu(),
        phi.nu()
    );
    text.push_str(&format!(
        "k(x) = {}\nk(y) = {}\ne(x) = {}\ne(y) = {}\nf(x) = {}\nf(y) = {}\n",
        conjugated.k_spec().image_of_x(),
        conjugated.k_spec().image_of_y(),
        conjugated.e_x(),
        conjugated.e_y(),
        conjugated.f_x(),
        conjugated.f_y(),
    ));
    let mut json = json!({
        "sigma": [k, m, l, n],
        "mu": phi.mu().to_string(),
        "nu": phi.nu().to_string(),
        "action": {
            "k_x": conjugated.k_spec().image_of_x().to_string(),
            "k_y": conjugated.k_spec().image_of_y().to_string(),
            "e_x": conjugated.e_x().to_string(),
            "e_y": conjugated.e_y().to_string(),
            "f_x": conjugated.f_x().to_string(),
            "f_y": conjugated.f_y().to_string(),
        },
        "verified": passed,
    });

    if let Some((id, params)) = &resolved.series {
        let moved = transform_params(params, phi.sigma());
        let (d0, g0) = invariants(params);
        let (d1, g1) = invariants(&moved);
        text.push_str(&format!(
            "series: {id}\ntransported (r, s, u, v) = ({}, {}, {}, {})\ninvariants: |D| {} -> {}, G {} -> {}\n",
            moved.r(),
            moved.s(),
            moved.u(),
            moved.v(),
            d0.abs(),
            d1.abs(),
            g0,
            g1,
        ));
        json["transported_params"] = json!({
            "r": moved.r(), "s": moved.s(), "u": moved.u(), "v": moved.v(),
            "m": moved.m(), "l": moved.l(), "n": moved.n(),
            "abs_d": d1.abs(), "g": g1,
        });
    }

    text.push_str(if passed {
        "verification: PASS\n"
    } else {
        "verification: FAIL\n"
    });
    Ok(CmdOutcome { exit_code: if passed { 0 } else { 1 }, text, json })
}

/// Decides whether two weight-constant pairs are related by the matrix
/// action on exponents.
///
/// Exits `0` with a witness matrix for a positive answer, `1` for a proven
/// negative or an exhausted undecided scan.
pub fn cmd_orbit(doc: &OrbitDocument, bound: Option<i64>) -> Result<CmdOutcome, CliError> {
    let (w1, w2) = doc.resolve()?;
    let bound = bound.unwrap_or(DEFAULT_ORBIT_BOUND);
    if bound < 0 {
        return Err(CliError::Validation("--bound must be nonnegative".to_string()));
    }
    let verdict = orbit_check_with_bound(&w1, &w2, bound).map_err(|e| match &e {
        VerifyError::NotPureZeta(_) => CliError::Validation(e.to_string()),
        _ => CliError::Internal(e.to_string()),
    })?;
    let (text, json, exit_code) = match verdict {
        OrbitVerdict::Yes(sigma) => {
            let (k, m, l, n) = sigma.entries();
            (
                format!("on one orbit: yes\nwitness = [{k}, {m}, {l}, {n}]\n"),
                json!({ "orbit": "yes", "witness": [k, m, l, n] }),
                0,
            )
        }
        OrbitVerdict::No => (
            "on one orbit: no\n".to_string(),
            json!({ "orbit": "no" }),
            1,
        ),
        OrbitVerdict::Unknown { bound } => (
            format!("on one orbit: undecided (scan bound {bound} exhausted)\n"),
            json!({ "orbit": "unknown", "bound": bound }),
            1,
        ),
    };
    Ok(CmdOutcome { exit_code, text, json })
}

/// Exports the integral-series table as JSON rows sorted by `(D, G, L)`.
pub fn cmd_export_table() -> Result<CmdOutcome, CliError> {
    let mut rows = Vec::new();
    for row in list_rows() {
        let (Some(d), Some(g), Some(l), Some(n)) = (row.d, row.g, row.l, row.n) else {
            continue;
        };
        let coefficients: Vec<Value> = row
            .id
            .free_coefficients()
            .into_iter()
            .map(|(name, required)| json!({ "name": name, "required": required }))
            .collect();
        let embedding = row
            .id
            .embedding()
            .map(|(host, zeroed)| json!({ "host": host.to_string(), "zeroed": zeroed }));
        rows.push(json!({
            "id": row.id.to_string(),
            "d": d,
            "g": g,
            "l": l,
            "n": n,
            "variant": row.id.variant().map(|v| v.to_string()),
            "coefficients": coefficients,
            "embedding": embedding,
        }));
    }
    let json = json!({ "series": rows });
    let text = serde_json::to_string_pretty(&json)
        .map_err(|e| CliError::Internal(format!("table serialization failed: {e}")))?;
    Ok(CmdOutcome::success(text + "\n", json))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::SymmetryDocument;

    fn doc(text: &str) -> SymmetryDocument {
        SymmetryDocument::from_toml(text).expect("fixture parses")
    }

    #[test]
    fn list_counts_and_filters() {
        // Full listing: 3 classical + 23 named + 5 embedded.
        let all = cmd_list(None, None).unwrap();
        assert_eq!(all.json["count"], 31);

        // D = 4 selects the eight weight-variant series.
        let d4 = cmd_list(Some(4), None).unwrap();
        assert_eq!(d4.json["count"], 8);

        // G = 3 never occurs in the table.
        let g3 = cmd_list(None, Some(3)).unwrap();
        assert_eq!(g3.json["count"], 0);
    }

    #[test]
    fn verify_passes_on_a_reference_document() {
        let outcome = cmd_verify(&doc(r#"
family = "series"
series = "D1G1E1F3"

[params]
r = 0
s = 1
u = -1
v = 0
"#))
        .unwrap();
        assert_eq!(outcome.exit_code, 0, "report:\n{}", outcome.text);
        assert_eq!(outcome.json["passed"], true);
    }

    #[test]
    fn invariants_of_the_reference_matrix() {
        // Φ = (2 2; 1 2) has |D| = 2 and G = 2.
        let outcome = cmd_invariants(&doc(r#"
family = "series"
series = "D2G2E1F3"

[params]
r = 2
s = 2
u = 1
v = 2
"#))
        .unwrap();
        assert_eq!(outcome.json["abs_d"], 2);
        assert_eq!(outcome.json["g"], 2);
    }

    #[test]
    fn conjugation_preserves_verification() {
        let outcome = cmd_conjugate(&doc(r#"
family = "series"
series = "D1G1E1F3"

[params]
r = 0
s = 1
u = -1
v = 0

[automorphism]
sigma = [1, 1, 0, 1]
mu = "1"
nu = "z^2"
"#))
        .unwrap();
        assert_eq!(outcome.exit_code, 0, "report:\n{}", outcome.text);
        assert_eq!(outcome.json["verified"], true);
    }

    #[test]
    fn orbit_reference_pair_has_the_shear_witness() {
        // (-q^{-1}, -1) and (q^{-1}, -1) are related by the unit shear.
        let outcome = cmd_orbit(
            &OrbitDocument::from_toml(r#"
[w1]
alpha = "-1/(z^2)"
beta = "-1"

[w2]
alpha = "1/(z^2)"
beta = "-1"
"#)
            .unwrap(),
            None,
        )
        .unwrap();
        assert_eq!(outcome.exit_code, 0, "report:\n{}", outcome.text);
        assert_eq!(outcome.json["witness"], serde_json::json!([1, 1, 0, 1]));
    }

    #[test]
    fn export_table_lists_the_integral_rows() {
        let outcome = cmd_export_table().unwrap();
        let rows = outcome.json["series"].as_array().unwrap();
        assert_eq!(rows.len(), 28, "23 named plus 5 embedded series");
        // Rows are sorted by (D, G, L); the first block is the D = 1 class.
        assert_eq!(rows[0]["d"], 1);
    }
}
