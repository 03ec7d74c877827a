//! Python bindings for the quantum-plane symmetry library.
//!
//! - `Scalar` wraps the exact coefficient field: rational functions in the
//!   square root `z` of `q`, plus free indeterminates.
//! - `Symmetry` wraps a symmetry instance; factory functions mirror the
//!   series, type I/II, and generic constructors.
//! - Module functions cover verification, conjugation, invariants,
//!   minimality, and the orbit decision.
//! - All values cross the boundary as exact strings or integers, never
//!   floating point.

use std::collections::HashMap;

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use qsym_core::action::{act, Generator};
use qsym_core::catalog::{
    invariants, make_generic, make_nongeneric, make_nongeneric_with_variant, make_type1,
    make_type2, minimality_check, transform_params, weight_constants_for, CoefficientSet,
    IntegralParams, SeriesId, Sign, WeightVariant,
};
use qsym_core::qplane::{AutomorphismSpec, LaurentPoly, Sl2z, WeightPair};
use qsym_core::scalar::{parse_scalar, QScalar, WeightConstant};
use qsym_core::verify::{
    conjugate, orbit_check_with_bound, verify_module_algebra, OrbitVerdict, DEFAULT_ORBIT_BOUND,
};
use qsym_core::SymmetryAction;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn scalar_from_text(text: &str) -> PyResult<QScalar> {
    parse_scalar(text).map_err(value_err)
}

fn weight_from_text(label: &str, text: &str) -> PyResult<WeightConstant> {
    let scalar = scalar_from_text(text)?;
    WeightConstant::try_from_scalar(&scalar).map_err(|_| {
        value_err(format!(
            "{label}: `{text}` is not of the weight-constant form ±rational·z^k"
        ))
    })
}

/// An exact scalar: a rational function in `z` (with `q = z^2`) and any
/// free coefficient indeterminates.
#[pyclass(frozen)]
struct Scalar {
    inner: QScalar,
}

#[pymethods]
impl Scalar {
    /// Parses the textual form, e.g. `"(1 - z^4)/(z^2)"` or `"a0*q"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Scalar { inner: scalar_from_text(text)? })
    }

    fn __repr__(&self) -> String {
        format!("Scalar({})", self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: PyRef<'_, Scalar>) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: PyRef<'_, Scalar>) -> Scalar {
        Scalar { inner: &self.inner + &other.inner }
    }

    fn __sub__(&self, other: PyRef<'_, Scalar>) -> Scalar {
        Scalar { inner: &self.inner - &other.inner }
    }

    fn __mul__(&self, other: PyRef<'_, Scalar>) -> Scalar {
        Scalar { inner: &self.inner * &other.inner }
    }

    fn __truediv__(&self, other: PyRef<'_, Scalar>) -> PyResult<Scalar> {
        self.inner
            .div(&other.inner)
            .map(|inner| Scalar { inner })
            .map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn __neg__(&self) -> Scalar {
        Scalar { inner: -&self.inner }
    }

    fn __pow__(&self, exponent: i64, modulo: Option<i64>) -> PyResult<Scalar> {
        if modulo.is_some() {
            return Err(value_err("modular exponentiation is not defined for scalars"));
        }
        self.inner
            .pow(exponent)
            .map(|inner| Scalar { inner })
            .map_err(value_err)
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_one(&self) -> bool {
        self.inner.is_one()
    }
}

/// One symmetry instance: the images of `k`, `e`, `f` on the generators,
/// plus the series identity and parameters when built from the catalog.
#[pyclass(frozen)]
struct Symmetry {
    inner: SymmetryAction,
    series: Option<(SeriesId, IntegralParams)>,
}

#[pymethods]
impl Symmetry {
    fn __repr__(&self) -> String {
        match &self.series {
            Some((id, p)) => format!(
                "Symmetry(series={id}, r={}, s={}, u={}, v={}, m={})",
                p.r(),
                p.s(),
                p.u(),
                p.v(),
                p.m()
            ),
            None => "Symmetry(...)".to_string(),
        }
    }

    fn __eq__(&self, other: PyRef<'_, Symmetry>) -> bool {
        self.inner == other.inner
    }

    /// Runs the full module-algebra axiom panel.
    fn verify(&self) -> bool {
        verify_module_algebra(&self.inner).pass()
    }

    /// Human-readable descriptions of any failing checks.
    fn failures(&self) -> Vec<String> {
        verify_module_algebra(&self.inner)
            .failures()
            .map(|f| format!("{} [{}]: residual {}", f.check, f.context, f.residual))
            .collect()
    }

    /// Whether `k` acts diagonally on the generators.
    fn is_weight_type(&self) -> bool {
        self.inner.is_weight_type()
    }

    /// The weight pair `(α, β)` for a weight-type action.
    fn weights(&self) -> Option<(String, String)> {
        self.inner
            .weight_pair()
            .map(|w| (w.alpha.to_string(), w.beta.to_string()))
    }

    fn k_x(&self) -> String {
        self.inner.k_spec().image_of_x().to_string()
    }

    fn k_y(&self) -> String {
        self.inner.k_spec().image_of_y().to_string()
    }

    fn e_x(&self) -> String {
        self.inner.e_x().to_string()
    }

    fn e_y(&self) -> String {
        self.inner.e_y().to_string()
    }

    fn f_x(&self) -> String {
        self.inner.f_x().to_string()
    }

    fn f_y(&self) -> String {
        self.inner.f_y().to_string()
    }

    /// The image of the monomial `x^i y^j` under one generator
    /// (`"k"`, `"k_inv"`, `"e"`, or `"f"`).
    fn act(&self, generator: &str, i: i64, j: i64) -> PyResult<String> {
        let g = match generator {
            "k" => Generator::K,
            "k_inv" => Generator::KInv,
            "e" => Generator::E,
            "f" => Generator::F,
            other => {
                return Err(value_err(format!(
                    "unknown generator `{other}`; use k, k_inv, e, or f"
                )))
            }
        };
        let mono = LaurentPoly::monomial(QScalar::one(), i, j);
        Ok(act(g, &mono, &self.inner).to_string())
    }

    /// The isomorphism invariants `(|D|, G)` for a series-backed instance.
    fn invariants(&self) -> Option<(i64, i64)> {
        self.series.as_ref().map(|(_, p)| {
            let (d, g) = invariants(p);
            (d.abs(), g)
        })
    }

    /// The series id this instance was built from, if any.
    fn series_id(&self) -> Option<String> {
        self.series.as_ref().map(|(id, _)| id.to_string())
    }
}

/// All family names: the three classical families, the 23 named series,
/// and the five embedded series.
#[pyfunction]
fn series_ids() -> Vec<String> {
    SeriesId::ALL.into_iter().map(|id| id.to_string()).collect()
}

/// Builds an integral-series symmetry.
///
/// `coefficients` maps coefficient names to exact scalar strings; missing
/// names stay symbolic. `variant` selects the weight pair (`"a"`/`"b"`) for
/// embedded ids; named ids fix it.
#[pyfunction]
#[pyo3(signature = (id, r, s, u, v, m=0, coefficients=None, variant=None))]
#[allow(clippy::too_many_arguments)]
fn make_series(
    id: &str,
    r: i64,
    s: i64,
    u: i64,
    v: i64,
    m: i64,
    coefficients: Option<HashMap<String, String>>,
    variant: Option<&str>,
) -> PyResult<Symmetry> {
    let id: SeriesId = id.parse().map_err(value_err)?;
    let sig = id
        .signature()
        .ok_or_else(|| value_err(format!("`{id}` is not an integral series")))?;
    let params = IntegralParams::new(r, s, u, v, m, sig.l, sig.n).map_err(value_err)?;
    let mut coeffs = CoefficientSet::new();
    if let Some(map) = coefficients {
        for (name, text) in map {
            coeffs.set(&name, scalar_from_text(&text)?);
        }
    }
    let action = match variant {
        None => make_nongeneric(id, &params, &coeffs).map_err(value_err)?,
        Some(text) => {
            let variant: WeightVariant = text.parse().map_err(value_err)?;
            make_nongeneric_with_variant(id, &params, variant, &coeffs).map_err(value_err)?
        }
    };
    Ok(Symmetry { inner: action, series: Some((id, params)) })
}

/// Builds a type I symmetry (`e`, `f` act as zero, `k` inverts).
#[pyfunction]
fn make_weight_type1(alpha: &str, beta: &str) -> PyResult<Symmetry> {
    let alpha = weight_from_text("alpha", alpha)?;
    let beta = weight_from_text("beta", beta)?;
    Ok(Symmetry { inner: make_type1(&alpha, &beta), series: None })
}

/// Builds a type II symmetry from two signs (`1` or `-1`).
#[pyfunction]
fn make_weight_type2(epsilon_x: i64, epsilon_y: i64) -> PyResult<Symmetry> {
    let ex = Sign::from_int(epsilon_x)
        .ok_or_else(|| value_err("epsilon_x must be 1 or -1"))?;
    let ey = Sign::from_int(epsilon_y)
        .ok_or_else(|| value_err("epsilon_y must be 1 or -1"))?;
    Ok(Symmetry { inner: make_type2(ex, ey), series: None })
}

/// Builds a generic-family symmetry for weights with `α^u β^v = q²` and no
/// nontrivial relation.
#[pyfunction]
fn make_generic_symmetry(u: i64, v: i64, alpha: &str, beta: &str, a: &str) -> PyResult<Symmetry> {
    let alpha = weight_from_text("alpha", alpha)?;
    let beta = weight_from_text("beta", beta)?;
    let a = scalar_from_text(a)?;
    let action = make_generic(u, v, &alpha, &beta, &a).map_err(value_err)?;
    Ok(Symmetry { inner: action, series: None })
}

/// Conjugates a symmetry by the torus automorphism `x ↦ μ x^k y^m`,
/// `y ↦ ν x^l y^n` with `sigma = (k, m, l, n)`.
#[pyfunction]
#[pyo3(signature = (symmetry, sigma, mu="1", nu="1"))]
fn conjugate_symmetry(
    symmetry: PyRef<'_, Symmetry>,
    sigma: (i64, i64, i64, i64),
    mu: &str,
    nu: &str,
) -> PyResult<Symmetry> {
    let (k, m, l, n) = sigma;
    let sigma = Sl2z::new(k, m, l, n).map_err(value_err)?;
    let mu = scalar_from_text(mu)?;
    let nu = scalar_from_text(nu)?;
    let phi = AutomorphismSpec::new(sigma.clone(), mu, nu).map_err(value_err)?;
    let moved = conjugate(&symmetry.inner, &phi);
    let series = symmetry
        .series
        .as_ref()
        .map(|(id, p)| (*id, transform_params(p, &sigma)));
    Ok(Symmetry { inner: moved, series })
}

/// The canonical weight pair of a series class at the given parameters.
#[pyfunction]
#[pyo3(signature = (id, r, s, u, v, variant=None))]
fn series_weights(
    id: &str,
    r: i64,
    s: i64,
    u: i64,
    v: i64,
    variant: Option<&str>,
) -> PyResult<(String, String)> {
    let id: SeriesId = id.parse().map_err(value_err)?;
    let sig = id
        .signature()
        .ok_or_else(|| value_err(format!("`{id}` is not an integral series")))?;
    let params = IntegralParams::new(r, s, u, v, 0, sig.l, sig.n).map_err(value_err)?;
    let variant = match variant {
        None => id.variant().unwrap_or(WeightVariant::A),
        Some(text) => text.parse().map_err(value_err)?,
    };
    let pair = weight_constants_for(id, &params, variant).map_err(value_err)?;
    Ok((pair.alpha.to_string(), pair.beta.to_string()))
}

/// Whether `(r, s)` is minimal for the weight pair: no proper divisor `w`
/// of both has `α^{r/w} β^{s/w} = 1`.
#[pyfunction]
fn minimality(r: i64, s: i64, alpha: &str, beta: &str) -> PyResult<bool> {
    let pair = WeightPair::new(
        weight_from_text("alpha", alpha)?,
        weight_from_text("beta", beta)?,
    );
    minimality_check(r, s, &pair).map_err(value_err)
}

/// Decides whether two weight pairs lie on one orbit of the matrix action.
///
/// Returns `("yes", witness)`, `("no", None)`, or `("unknown", None)`.
#[pyfunction]
#[pyo3(signature = (w1, w2, bound=None))]
fn orbit(
    w1: (String, String),
    w2: (String, String),
    bound: Option<i64>,
) -> PyResult<(String, Option<(i64, i64, i64, i64)>)> {
    let pair = |label: &str, (a, b): &(String, String)| -> PyResult<WeightPair> {
        Ok(WeightPair::new(
            weight_from_text(&format!("{label}.alpha"), a)?,
            weight_from_text(&format!("{label}.beta"), b)?,
        ))
    };
    let w1 = pair("w1", &w1)?;
    let w2 = pair("w2", &w2)?;
    let verdict = orbit_check_with_bound(&w1, &w2, bound.unwrap_or(DEFAULT_ORBIT_BOUND))
        .map_err(value_err)?;
    Ok(match verdict {
        OrbitVerdict::Yes(sigma) => ("yes".to_string(), Some(sigma.entries())),
        OrbitVerdict::No => ("no".to_string(), None),
        OrbitVerdict::Unknown { .. } => ("unknown".to_string(), None),
    })
}

/// Exact symmetry calculus on the Laurent quantum plane.
#[pymodule]
fn qsym(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Scalar>()?;
    m.add_class::<Symmetry>()?;
    m.add_function(wrap_pyfunction!(series_ids, m)?)?;
    m.add_function(wrap_pyfunction!(make_series, m)?)?;
    m.add_function(wrap_pyfunction!(make_weight_type1, m)?)?;
    m.add_function(wrap_pyfunction!(make_weight_type2, m)?)?;
    m.add_function(wrap_pyfunction!(make_generic_symmetry, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate_symmetry, m)?)?;
    m.add_function(wrap_pyfunction!(series_weights, m)?)?;
    m.add_function(wrap_pyfunction!(minimality, m)?)?;
    m.add_function(wrap_pyfunction!(orbit, m)?)?;
    Ok(())
}
