//! Executable verification of the module-algebra axioms and the derived
//! diagnostics.
//!
//! - [`verify_module_algebra`] evaluates every axiom as an exact residual
//!   polynomial: the `k k^{-1}` inversions, the three algebra relations
//!   applied to `x`, `y`, `x^{-1}`, `y^{-1}`, the unit conditions, and a
//!   deterministic Leibniz panel over all monomial pairs with exponents in
//!   `[-3, 3]`.
//! - [`ef_fe_closed`] is the independent closed-form oracle for `(ef−fe)`
//!   on `x` and `y`, computed from recovered progression coefficients, never
//!   through the recursive engine.
//! - [`compute_extreme_indices`] reads off the extreme progression indices
//!   and the index law diagnostics.
//! - [`conjugate`] transports an action along a quantum-torus automorphism;
//!   [`orbit_check`] decides SL(2,ℤ)-orbit membership of pure `±ζ^k` weight
//!   pairs with an exact lattice argument and a bounded sign scan.
//! - [`check_image_ratios`] checks the coefficient cross-relations between
//!   the `x`- and `y`-images, and [`subalgebra_invariance`] reports whether
//!   the action restricts to non-negative exponents.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::action::{act, act_word, Generator, SymmetryAction};
use crate::catalog::IntegralParams;
use crate::qplane::{
    apply_automorphism, automorphism_compose, automorphism_invert, sl2z_weight_action,
    AutomorphismSpec, IntMat2, LaurentPoly, QPlaneError, Sl2z, WeightPair,
};
use crate::scalar::{QScalar, ScalarError};

/// Errors from the verification and orbit machinery.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum VerifyError {
    /// Both `e` and `f` act as zero: the action is of weight type II and has
    /// no progression indices.
    #[error("both e and f act as zero (type II weight action); no extreme indices exist")]
    TypeIISignal,
    /// The operation needs a weight-type action (`k` diagonal).
    #[error("operation requires a weight-type action (k acting diagonally)")]
    NotWeightType,
    /// The action's images do not fit the declared arithmetic progressions.
    #[error("images do not match the declared progression data: {detail}")]
    ProgressionMismatch {
        /// What failed to match.
        detail: String,
    },
    /// Orbit checks require pure `±ζ^k` weight constants.
    #[error("orbit check requires weight constants of pure ±ζ^k form; rational part {0} is not 1")]
    NotPureZeta(String),
    /// Scalar arithmetic error.
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    /// Quantum-plane arithmetic error.
    #[error(transparent)]
    QPlane(#[from] QPlaneError),
}

/// One residual of one check on one target.
#[derive(Clone, Debug)]
pub struct CheckEntry {
    /// Stable name of the check.
    pub check: &'static str,
    /// The target the check was applied to.
    pub context: String,
    /// The residual polynomial; zero means the check holds.
    pub residual: LaurentPoly,
}

/// Aggregated residuals of a verification run.
///
/// Relation and unit checks always contribute an entry; Leibniz panel
/// entries are recorded only on failure, with [`panel_pairs`] counting the
/// monomial pairs exercised (each pair is checked for `e`, `f`, and `k`).
///
/// [`panel_pairs`]: VerificationReport::panel_pairs
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    /// All recorded check entries, in deterministic order.
    pub entries: Vec<CheckEntry>,
    /// Number of monomial pairs exercised by the Leibniz panel.
    pub panel_pairs: usize,
}

impl VerificationReport {
    /// True iff every recorded residual is the zero polynomial.
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.residual.is_zero())
    }

    /// The entries whose residual is nonzero.
    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.residual.is_zero())
    }
}

/// Extreme progression indices of a series-shaped action, with the index-law
/// diagnostics.
///
/// Indices are relative to the progression slots: e-indices run over
/// `0 ..= L`, f-indices over `0 ..= N − L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremeIndexReport {
    /// Least e-slot with a nonzero coefficient.
    pub minind_e: i64,
    /// Greatest e-slot with a nonzero coefficient.
    pub maxind_e: i64,
    /// Least f-slot with a nonzero coefficient.
    pub minind_f: i64,
    /// Greatest f-slot with a nonzero coefficient.
    pub maxind_f: i64,
    /// Whether `minind_e + minind_f = 0` or `maxind_e + maxind_f = 0`.
    pub one_extreme_sum_zero: bool,
    /// Whether the other extreme sum `i` satisfies `iD ∈ {2, 4}` or `i = 0`.
    pub other_extreme_in_law: bool,
}

/// Memoized generator actions on single monomials, for the Leibniz panel.
struct MonomialActions<'a> {
    s: &'a SymmetryAction,
    e: HashMap<(i64, i64), LaurentPoly>,
    f: HashMap<(i64, i64), LaurentPoly>,
}

impl<'a> MonomialActions<'a> {
    fn new(s: &'a SymmetryAction) -> Self {
        MonomialActions { s, e: HashMap::new(), f: HashMap::new() }
    }

    fn e(&mut self, i: i64, j: i64) -> LaurentPoly {
        if let Some(p) = self.e.get(&(i, j)) {
            return p.clone();
        }
        let p = act(Generator::E, &LaurentPoly::monomial(QScalar::one(), i, j), self.s);
        self.e.insert((i, j), p.clone());
        p
    }

    fn f(&mut self, i: i64, j: i64) -> LaurentPoly {
        if let Some(p) = self.f.get(&(i, j)) {
            return p.clone();
        }
        let p = act(Generator::F, &LaurentPoly::monomial(QScalar::one(), i, j), self.s);
        self.f.insert((i, j), p.clone());
        p
    }
}

fn mono_image_of(spec: &AutomorphismSpec, i: i64, j: i64) -> (QScalar, i64, i64) {
    let image = apply_automorphism(spec, &LaurentPoly::monomial(QScalar::one(), i, j));
    let (c, a, b) = image
        .single_term()
        .expect("automorphism image of a monomial is a monomial");
    (c.clone(), a, b)
}

/// Evaluates every module-algebra axiom as an exact residual.
///
/// Checks, in order: `k k^{-1} = k^{-1} k = id`, `ke = q² ek`,
/// `kf = q^{-2} fk`, `ef − fe = (k − k^{-1})/(q − q^{-1})`, each applied to
/// `x`, `y`, `x^{-1}`, `y^{-1}`; the unit conditions `e(1) = f(1) = 0`,
/// `k(1) = 1`; and the multiplicativity/Leibniz rules on every monomial pair
/// with exponents in `[-3, 3]` (`k(uv) = k(u)k(v)`,
/// `e(uv) = u·e(v) + e(u)·k(v)`, `f(uv) = f(u)·v + k^{-1}(u)·f(v)`).
pub fn verify_module_algebra(s: &SymmetryAction) -> VerificationReport {
    let mut report = VerificationReport::default();
    let one = LaurentPoly::one();
    let x_inv = LaurentPoly::monomial(QScalar::one(), -1, 0);
    let y_inv = LaurentPoly::monomial(QScalar::one(), 0, -1);
    let targets: [(&str, LaurentPoly); 4] = [
        ("x", LaurentPoly::x()),
        ("y", LaurentPoly::y()),
        ("x^-1", x_inv),
        ("y^-1", y_inv),
    ];
    let q2 = QScalar::q_pow(2);
    let qm2 = QScalar::q_pow(-2);
    let q_diff_inv = (&QScalar::q_pow(1) - &QScalar::q_pow(-1))
        .inverse()
        .expect("q - q^{-1} is invertible");

    for (name, g) in &targets {
        use Generator::{KInv, E, F, K};
        let push = |report: &mut VerificationReport, check, residual| {
            report.entries.push(CheckEntry { check, context: (*name).to_string(), residual });
        };
        push(
            &mut report,
            "k-kinv-identity",
            &act_word(&[K, KInv], g, s) - g,
        );
        push(
            &mut report,
            "kinv-k-identity",
            &act_word(&[KInv, K], g, s) - g,
        );
        push(
            &mut report,
            "ke-q2ek",
            &act_word(&[K, E], g, s) - &act_word(&[E, K], g, s).scalar_mul(&q2),
        );
        push(
            &mut report,
            "kf-qm2fk",
            &act_word(&[K, F], g, s) - &act_word(&[F, K], g, s).scalar_mul(&qm2),
        );
        let commutator = &act_word(&[E, F], g, s) - &act_word(&[F, E], g, s);
        let rhs = (&act(K, g, s) - &act(KInv, g, s)).scalar_mul(&q_diff_inv);
        push(&mut report, "ef-fe-relation", &commutator - &rhs);
    }

    report.entries.push(CheckEntry {
        check: "unit",
        context: "e(1)".to_string(),
        residual: act(Generator::E, &one, s),
    });
    report.entries.push(CheckEntry {
        check: "unit",
        context: "f(1)".to_string(),
        residual: act(Generator::F, &one, s),
    });
    report.entries.push(CheckEntry {
        check: "unit",
        context: "k(1)-1".to_string(),
        residual: &act(Generator::K, &one, s) - &one,
    });

    let mut memo = MonomialActions::new(s);
    let range = -3..=3_i64;
    for i1 in range.clone() {
        for j1 in range.clone() {
            for i2 in range.clone() {
                for j2 in range.clone() {
                    report.panel_pairs += 1;
                    let context = || format!("(x^{i1} y^{j1}) * (x^{i2} y^{j2})");
                    // Normal ordering: (x^i1 y^j1)(x^i2 y^j2) = q^{j1·i2} x^.. y^..
                    let twist = QScalar::q_pow(j1 * i2);
                    let (pi, pj) = (i1 + i2, j1 + j2);

                    let lhs = memo.e(pi, pj).scalar_mul(&twist);
                    let (kc, ka, kb) = mono_image_of(s.k_spec(), i2, j2);
                    let rhs = &memo.e(i2, j2).mul_term_left(&QScalar::one(), i1, j1)
                        + &memo.e(i1, j1).mul_term_right(&kc, ka, kb);
                    let residual = &lhs - &rhs;
                    if !residual.is_zero() {
                        report.entries.push(CheckEntry {
                            check: "leibniz-e",
                            context: context(),
                            residual,
                        });
                    }

                    let lhs = memo.f(pi, pj).scalar_mul(&twist);
                    let (ic, ia, ib) = mono_image_of(s.k_inv_spec(), i1, j1);
                    let rhs = &memo.f(i1, j1).mul_term_right(&QScalar::one(), i2, j2)
                        + &memo.f(i2, j2).mul_term_left(&ic, ia, ib);
                    let residual = &lhs - &rhs;
                    if !residual.is_zero() {
                        report.entries.push(CheckEntry {
                            check: "leibniz-f",
                            context: context(),
                            residual,
                        });
                    }

                    let (pc, pa, pb) = mono_image_of(s.k_spec(), pi, pj);
                    let lhs = LaurentPoly::monomial(&pc * &twist, pa, pb);
                    let (c1, a1, b1) = mono_image_of(s.k_spec(), i1, j1);
                    let (c2, a2, b2) = mono_image_of(s.k_spec(), i2, j2);
                    let rhs = LaurentPoly::monomial(c1, a1, b1)
                        .mul_term_right(&c2, a2, b2);
                    let residual = &lhs - &rhs;
                    if !residual.is_zero() {
                        report.entries.push(CheckEntry {
                            check: "k-multiplicative",
                            context: context(),
                            residual,
                        });
                    }
                }
            }
        }
    }
    report
}

/// Progression coefficients `(a_0 ..= a_L, c_0 ..= c_{N−L})` recovered from
/// the stored images of a weight-type action.
///
/// Each slot is read from the x-image when its multiplier is nonzero, else
/// from the y-image (at most one multiplier can vanish per slot when
/// `D ≠ 0`); both images are then cross-checked against the recovered value,
/// and any image term off the progression support is a mismatch.
fn recover_series_coefficients(
    s: &SymmetryAction,
    p: &IntegralParams,
) -> Result<(Vec<QScalar>, Vec<QScalar>), VerifyError> {
    let weights = s.weight_pair().ok_or(VerifyError::NotWeightType)?;
    let alpha = weights.alpha.to_scalar();
    let beta = weights.beta.to_scalar();
    let alpha_inv = weights.alpha.inv().to_scalar();
    let beta_inv = weights.beta.inv().to_scalar();
    let one = QScalar::one();
    let (r, sv, u, v, m) = (p.r(), p.s(), p.u(), p.v(), p.m());

    let recover_side = |base: &LaurentPoly,
                            partner: &LaurentPoly,
                            count: i64,
                            side: &str,
                            mult_x: &dyn Fn(i64, i64) -> QScalar,
                            mult_y: &dyn Fn(i64, i64) -> QScalar,
                            ij: &dyn Fn(i64) -> (i64, i64)|
     -> Result<Vec<QScalar>, VerifyError> {
        let mut values = Vec::new();
        let mut explained_x = BTreeSet::new();
        let mut explained_y = BTreeSet::new();
        for slot in 0..=count {
            let (i, j) = ij(slot);
            let mx = mult_x(i, j);
            let my = mult_y(i, j);
            let vx = base.coeff(i + 1, j);
            let vy = partner.coeff(i, j + 1);
            let value = if !mx.is_zero() {
                vx.div(&mx)?
            } else if !my.is_zero() {
                vy.div(&my)?
            } else {
                return Err(VerifyError::ProgressionMismatch {
                    detail: format!("both {side}-multipliers vanish at slot {slot}"),
                });
            };
            if vx != &value * &mx || vy != &value * &my {
                return Err(VerifyError::ProgressionMismatch {
                    detail: format!("{side}-images disagree at slot {slot}"),
                });
            }
            explained_x.insert((i + 1, j));
            explained_y.insert((i, j + 1));
            values.push(value);
        }
        for (&(i, j), _) in base.terms() {
            if !explained_x.contains(&(i, j)) {
                return Err(VerifyError::ProgressionMismatch {
                    detail: format!("{side}-x image has a term off the progression at ({i}, {j})"),
                });
            }
        }
        for (&(i, j), _) in partner.terms() {
            if !explained_y.contains(&(i, j)) {
                return Err(VerifyError::ProgressionMismatch {
                    detail: format!("{side}-y image has a term off the progression at ({i}, {j})"),
                });
            }
        }
        Ok(values)
    };

    let a_vec = recover_side(
        s.e_x(),
        s.e_y(),
        p.l(),
        "e",
        &|_, j| &one - &(&alpha * &QScalar::q_pow(j)),
        &|i, _| &QScalar::q_pow(i) - &beta,
        &|slot| (u + (m + slot) * r, v + (m + slot) * sv),
    )?;
    let c_vec = recover_side(
        s.f_x(),
        s.f_y(),
        p.n() - p.l(),
        "f",
        &|_, j| &alpha_inv - &QScalar::q_pow(j),
        &|i, _| &(&beta_inv * &QScalar::q_pow(i)) - &one,
        &|slot| (-u + (-m + slot) * r, -v + (-m + slot) * sv),
    )?;
    Ok((a_vec, c_vec))
}

/// Closed-form `(ef − fe)(x)` and `(ef − fe)(y)` for a series-shaped
/// weight-type action, computed from the recovered progression coefficients.
///
/// The sums are
///
/// ```text
/// (ef−fe)(x) = Σ_i Σ_{w+t=i} a_w c_t q^{(u+(M+w)r)(−v+(−M+t)s)}
///                   · (αq^{is} − α^{-1}) (q^{-2+iD} − 1) · x^{1+ir} y^{is}
/// (ef−fe)(y) = Σ_i Σ_{w+t=i} a_w c_t q^{(u+(M+w)r)(−v+(−M+t)s)}
///                   · (β^{-1}q^{ir} − β) (1 − q^{-2+iD}) · x^{ir} y^{1+is}
/// ```
///
/// entirely independent of the recursive engine, so the two agree only if
/// the series data is consistent.
pub fn ef_fe_closed(
    s: &SymmetryAction,
    p: &IntegralParams,
) -> Result<(LaurentPoly, LaurentPoly), VerifyError> {
    let weights = s.weight_pair().ok_or(VerifyError::NotWeightType)?;
    let (a_vec, c_vec) = recover_series_coefficients(s, p)?;
    let alpha = weights.alpha.to_scalar();
    let beta = weights.beta.to_scalar();
    let alpha_inv = weights.alpha.inv().to_scalar();
    let beta_inv = weights.beta.inv().to_scalar();
    let (r, sv, u, v, m, l, n) = (p.r(), p.s(), p.u(), p.v(), p.m(), p.l(), p.n());
    let d = p.d();

    let mut out_x = LaurentPoly::zero();
    let mut out_y = LaurentPoly::zero();
    for i in 0..=n {
        let mut prefix = QScalar::zero();
        let w_lo = (i - (n - l)).max(0);
        let w_hi = i.min(l);
        for w in w_lo..=w_hi {
            let t = i - w;
            let exp = (u + (m + w) * r) * (-v + (-m + t) * sv);
            let term = &(&a_vec[w as usize] * &c_vec[t as usize]) * &QScalar::q_pow(exp);
            prefix = &prefix + &term;
        }
        if prefix.is_zero() {
            continue;
        }
        let q_factor = &QScalar::q_pow(-2 + i * d) - &QScalar::one();
        let x_weight = &(&alpha * &QScalar::q_pow(i * sv)) - &alpha_inv;
        out_x.add_term(&(&prefix * &x_weight) * &q_factor, 1 + i * r, i * sv);
        let y_weight = &(&beta_inv * &QScalar::q_pow(i * r)) - &beta;
        out_y.add_term(&(&prefix * &y_weight) * &(-&q_factor), i * r, 1 + i * sv);
    }
    Ok((out_x, out_y))
}

/// Extreme progression indices (relative slot numbers) and the index-law
/// diagnostics for a series-shaped weight-type action.
///
/// Errors with a type II signal when both `e` and `f` act as zero.
pub fn compute_extreme_indices(
    s: &SymmetryAction,
    p: &IntegralParams,
) -> Result<ExtremeIndexReport, VerifyError> {
    if s.e_x().is_zero() && s.e_y().is_zero() && s.f_x().is_zero() && s.f_y().is_zero() {
        return Err(VerifyError::TypeIISignal);
    }
    let (a_vec, c_vec) = recover_series_coefficients(s, p)?;
    let nonzero_range = |values: &[QScalar], side: &str| -> Result<(i64, i64), VerifyError> {
        let lo = values.iter().position(|c| !c.is_zero());
        let hi = values.iter().rposition(|c| !c.is_zero());
        match (lo, hi) {
            (Some(lo), Some(hi)) => Ok((lo as i64, hi as i64)),
            _ => Err(VerifyError::ProgressionMismatch {
                detail: format!("the {side} part is identically zero while the other is not"),
            }),
        }
    };
    let (minind_e, maxind_e) = nonzero_range(&a_vec, "e")?;
    let (minind_f, maxind_f) = nonzero_range(&c_vec, "f")?;
    let min_sum = minind_e + minind_f;
    let max_sum = maxind_e + maxind_f;
    let one_extreme_sum_zero = min_sum == 0 || max_sum == 0;
    let other = if min_sum == 0 { max_sum } else { min_sum };
    let other_extreme_in_law = {
        let id = other * p.d();
        other == 0 || id == 2 || id == 4
    };
    Ok(ExtremeIndexReport {
        minind_e,
        maxind_e,
        minind_f,
        maxind_f,
        one_extreme_sum_zero,
        other_extreme_in_law,
    })
}

/// Conjugates an action by a quantum-torus automorphism `Ψ`:
/// the new action is `Ψ^{-1} ∘ π(·) ∘ Ψ` on each generator.
pub fn conjugate(s: &SymmetryAction, phi: &AutomorphismSpec) -> SymmetryAction {
    let phi_inv = automorphism_invert(phi);
    let k_spec = automorphism_compose(&phi_inv, &automorphism_compose(s.k_spec(), phi));
    let transport = |g: Generator, image_of: &LaurentPoly| -> LaurentPoly {
        apply_automorphism(&phi_inv, &act(g, image_of, s))
    };
    let e_x = transport(Generator::E, &phi.image_of_x());
    let e_y = transport(Generator::E, &phi.image_of_y());
    let f_x = transport(Generator::F, &phi.image_of_x());
    let f_y = transport(Generator::F, &phi.image_of_y());
    SymmetryAction::new(k_spec, e_x, e_y, f_x, f_y)
}

/// Verdict of an SL(2,ℤ)-orbit check on weight pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitVerdict {
    /// The pairs are on the same orbit; the matrix is a witness.
    Yes(Sl2z),
    /// The pairs are provably not on the same orbit.
    No,
    /// The sign scan was exhausted without a decision.
    Unknown {
        /// The bound that was exhausted.
        bound: i64,
    },
}

/// Default scan bound for [`orbit_check`].
pub const DEFAULT_ORBIT_BOUND: i64 = 64;

/// [`orbit_check_with_bound`] at the default bound.
pub fn orbit_check(w1: &WeightPair, w2: &WeightPair) -> Result<OrbitVerdict, VerifyError> {
    orbit_check_with_bound(w1, w2, DEFAULT_ORBIT_BOUND)
}

/// Decides whether `σ(w1) = w2` for some `σ ∈ SL(2,ℤ)`, for pairs of pure
/// `±ζ^k` weight constants.
///
/// The ζ-exponent vectors must have equal gcd (an SL(2,ℤ) invariant);
/// given that, all exponent solutions form the coset
/// `σ_t = U₂^{-1} (1 t; 0 1) U₁` of a stabilizer, where `U₁, U₂` reduce the
/// two exponent vectors to `(g, 0)`. Signs only depend on `σ_t mod 2`,
/// which is 2-periodic in `t`, so scanning `t = 0, ±1, …` up to any bound
/// `≥ 1` is exhaustive and a miss is a definitive no. Zero exponent vectors
/// are handled by scanning all of SL(2,ℤ) mod 2 through entries in
/// `[-1, 1]`.
pub fn orbit_check_with_bound(
    w1: &WeightPair,
    w2: &WeightPair,
    bound: i64,
) -> Result<OrbitVerdict, VerifyError> {
    use num::One;
    for c in [&w1.alpha, &w1.beta, &w2.alpha, &w2.beta] {
        if !c.rational_part().is_one() {
            return Err(VerifyError::NotPureZeta(c.rational_part().to_string()));
        }
    }
    let (a, b) = (w1.alpha.zeta_exponent(), w1.beta.zeta_exponent());
    let (a2, b2) = (w2.alpha.zeta_exponent(), w2.beta.zeta_exponent());
    let g1 = gcd_pair(a, b);
    let g2 = gcd_pair(a2, b2);
    if g1 != g2 {
        return Ok(OrbitVerdict::No);
    }
    if g1 == 0 {
        // Pure sign pairs: the action factors through SL(2, 𝔽₂), and every
        // class has a representative with entries in [-1, 1].
        for k in -1..=1_i64 {
            for m in -1..=1_i64 {
                for l in -1..=1_i64 {
                    for n in -1..=1_i64 {
                        if k * n - m * l != 1 {
                            continue;
                        }
                        let sigma = Sl2z::new(k, m, l, n).expect("determinant checked");
                        if sl2z_weight_action(&sigma, w1) == *w2 {
                            return Ok(OrbitVerdict::Yes(sigma));
                        }
                    }
                }
            }
        }
        return Ok(OrbitVerdict::No);
    }

    let u1 = reduction_matrix(a, b, g1);
    let u2 = reduction_matrix(a2, b2, g2);
    let u2_inv = unimodular_inverse(&u2);
    let try_t = |t: i64| -> Option<Sl2z> {
        let shear = IntMat2::new(1, t, 0, 1);
        let prod = u2_inv.mul(&shear).mul(&u1);
        let (p, q, r, s) = prod.entries();
        let sigma = Sl2z::new(p, q, r, s).expect("product of unimodular matrices");
        if sl2z_weight_action(&sigma, w1) == *w2 {
            Some(sigma)
        } else {
            None
        }
    };
    if let Some(sigma) = try_t(0) {
        return Ok(OrbitVerdict::Yes(sigma));
    }
    for t in 1..=bound {
        if let Some(sigma) = try_t(t) {
            return Ok(OrbitVerdict::Yes(sigma));
        }
        if let Some(sigma) = try_t(-t) {
            return Ok(OrbitVerdict::Yes(sigma));
        }
    }
    if bound >= 1 {
        // The sign action is 2-periodic in t, so t ∈ {0, 1} already covers
        // every case; exhaustion is a definitive no.
        Ok(OrbitVerdict::No)
    } else {
        Ok(OrbitVerdict::Unknown { bound })
    }
}

fn gcd_pair(a: i64, b: i64) -> i64 {
    use num::Integer;
    a.abs().gcd(&b.abs())
}

/// A matrix `U ∈ SL(2,ℤ)` with `U·(a, b)ᵀ = (g, 0)ᵀ`, built from the
/// extended gcd of the primitive vector.
fn reduction_matrix(a: i64, b: i64, g: i64) -> IntMat2 {
    use num::Integer;
    let (a1, b1) = (a / g, b / g);
    let ext = a1.extended_gcd(&b1);
    debug_assert_eq!(ext.gcd, 1, "primitive vector has gcd 1");
    IntMat2::new(ext.x, ext.y, -b1, a1)
}

/// Inverse of a determinant-one integer matrix.
fn unimodular_inverse(m: &IntMat2) -> IntMat2 {
    let (a, b, c, d) = m.entries();
    debug_assert_eq!(m.det(), 1, "inverse formula needs determinant 1");
    IntMat2::new(d, -b, -c, a)
}

/// Checks the cross-relations between the `x`- and `y`-image coefficients
/// of a weight-type action:
///
/// - e-side: `e_x[i+1, j]·(q^i − β) = e_y[i, j+1]·(1 − αq^j)`,
/// - f-side: `f_x[i+1, j]·(1 − β^{-1}q^i) = f_y[i, j+1]·(q^j − α^{-1})`,
///
/// for every base exponent pair `(i, j)` in the shifted supports. Residuals
/// are scalar differences embedded as constant polynomials.
pub fn check_image_ratios(s: &SymmetryAction) -> Result<VerificationReport, VerifyError> {
    if !s.is_weight_type() {
        return Err(VerifyError::NotWeightType);
    }
    let alpha = s.k_spec().mu().clone();
    let beta = s.k_spec().nu().clone();
    let alpha_inv = alpha.inverse()?;
    let beta_inv = beta.inverse()?;
    let one = QScalar::one();

    let mut report = VerificationReport::default();
    let mut run_side = |check: &'static str,
                        px: &LaurentPoly,
                        py: &LaurentPoly,
                        wx: &dyn Fn(i64, i64) -> QScalar,
                        wy: &dyn Fn(i64, i64) -> QScalar| {
        let mut bases: BTreeSet<(i64, i64)> = BTreeSet::new();
        for (&(i, j), _) in px.terms() {
            bases.insert((i - 1, j));
        }
        for (&(i, j), _) in py.terms() {
            bases.insert((i, j - 1));
        }
        for (i, j) in bases {
            let lhs = &px.coeff(i + 1, j) * &wx(i, j);
            let rhs = &py.coeff(i, j + 1) * &wy(i, j);
            let mut residual = LaurentPoly::zero();
            residual.add_term(&lhs - &rhs, 0, 0);
            report.entries.push(CheckEntry {
                check,
                context: format!("base exponent ({i}, {j})"),
                residual,
            });
        }
    };
    run_side(
        "image-ratio-e",
        s.e_x(),
        s.e_y(),
        &|i, _| &QScalar::q_pow(i) - &beta,
        &|_, j| &one - &(&alpha * &QScalar::q_pow(j)),
    );
    run_side(
        "image-ratio-f",
        s.f_x(),
        s.f_y(),
        &|i, _| &one - &(&beta_inv * &QScalar::q_pow(i)),
        &|_, j| &QScalar::q_pow(j) - &alpha_inv,
    );
    Ok(report)
}

/// True iff the `k`, `e`, `f` images of `x` and `y` all lie in the
/// non-negatively graded subalgebra (no inverted generators needed).
pub fn subalgebra_invariance(s: &SymmetryAction) -> bool {
    let k_x = apply_automorphism(s.k_spec(), &LaurentPoly::x());
    let k_y = apply_automorphism(s.k_spec(), &LaurentPoly::y());
    let images = [&k_x, &k_y, s.e_x(), s.e_y(), s.f_x(), s.f_y()];
    let nonneg = images
        .into_iter()
        .all(|p| p.terms().all(|(&(i, j), _)| i >= 0 && j >= 0));
    nonneg
}
