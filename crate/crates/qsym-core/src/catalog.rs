//! Constructors for every symmetry family of the classification.
//!
//! The families are:
//!
//! - two classical zero-`e`/`f` families (type I with its inverted weights,
//!   and the four type II sign actions),
//! - the generic one-parameter family, gated by an exact genericity decision,
//! - 23 named integral series plus 5 embedded unnamed series, all driven by
//!   one declarative coefficient table and a single interpreter
//!   ([`make_nongeneric`]).
//!
//! Each integral series is keyed by a [`SeriesId`] carrying its signature
//! `(D, G, L, N)`: discriminant `D = rv − su` of the integral matrix
//! `Φ = (r s; u v)`, the invariant `G = gcd(r, s)`, and the e/f progression
//! lengths `L` and `N − L`. Weight constants come from
//! [`weight_constants_for`], parameter validation is exact, and every
//! required-nonzero coefficient is checked structurally.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{Integer, One, Signed};
use thiserror::Error;

use crate::action::SymmetryAction;
use crate::qplane::{AutomorphismSpec, LaurentPoly, QPlaneError, Sl2z, WeightPair};
use crate::scalar::{QScalar, ScalarError, WeightConstant};

/// Errors raised by catalog validation and construction.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    /// The pair `(r, s)` must be nonzero for an integral series.
    #[error("the pair (r, s) must not be (0, 0)")]
    ZeroDirection,
    /// The integral matrix must have nonzero determinant.
    #[error("the discriminant D = rv - su must be nonzero")]
    ZeroDiscriminant,
    /// `0 ≤ L ≤ N` is required for the canonical progression form.
    #[error("progression lengths must satisfy 0 <= L <= N; got L = {l}, N = {n}")]
    BadLevels { l: i64, n: i64 },
    /// Parameters do not produce the discriminant encoded in the series id.
    #[error("series {id} requires D = {expected}, parameters give D = {got}")]
    DiscriminantMismatch { id: SeriesId, expected: i64, got: i64 },
    /// Parameters do not produce the gcd encoded in the series id.
    #[error("series {id} requires G = {expected}, parameters give G = {got}")]
    GcdMismatch { id: SeriesId, expected: i64, got: i64 },
    /// Parameters do not carry the progression lengths encoded in the id.
    #[error(
        "series {id} requires (L, N) = ({expected_l}, {expected_n}), parameters give ({got_l}, {got_n})"
    )]
    LevelMismatch { id: SeriesId, expected_l: i64, expected_n: i64, got_l: i64, got_n: i64 },
    /// Weight constants for D = 4, G = 2 need both u and v even.
    #[error("weight constants with D = 4 and G = 2 require u and v both even; got (u, v) = ({u}, {v})")]
    ParityViolation { u: i64, v: i64 },
    /// No weight constants solve the D = 4, G = 4 equations.
    #[error("no weight constants exist for D = 4 with G = 4")]
    NoWeightSolution,
    /// A classical family id was used where an integral series is required.
    #[error("{id} is not an integral-parameter series")]
    NotAnIntegralSeries { id: SeriesId },
    /// The id fixes a weight variant different from the requested one.
    #[error("series {id} fixes weight variant {fixed}, but variant {requested} was requested")]
    VariantMismatch { id: SeriesId, fixed: WeightVariant, requested: WeightVariant },
    /// A coefficient name not taken by the series was supplied.
    #[error("series {id} does not take a coefficient named {name}")]
    UnknownCoefficient { id: SeriesId, name: String },
    /// A coefficient the classification requires to be nonzero is zero.
    #[error("coefficient {name} of series {id} must be nonzero")]
    ZeroRequiredCoefficient { id: SeriesId, name: &'static str },
    /// The minimality precondition `α^r β^s = 1` does not hold.
    #[error("minimality check requires alpha^r * beta^s = 1; it fails for (r, s) = ({r}, {s})")]
    MinimalityPrecondition { r: i64, s: i64 },
    /// The weight pair is not minimal for `(r, s)`.
    #[error("the weight pair is not minimal for (r, s) = ({r}, {s})")]
    MinimalityFailure { r: i64, s: i64 },
    /// The generic weight normalization `α^u β^v = q²` fails.
    #[error("weight pair does not satisfy alpha^u * beta^v = q^2 for (u, v) = ({u}, {v})")]
    WeightNormalization { u: i64, v: i64 },
    /// The pair admits a nontrivial multiplicative relation, so it is not
    /// generic; `(m, n)` names a violated relation `α^m β^n = 1`.
    #[error("weight pair is not generic: alpha^{m} * beta^{n} = 1")]
    GenericityViolation { m: i64, n: i64 },
    /// An argument that must be nonzero is zero.
    #[error("argument {name} must be nonzero")]
    ZeroArgument { name: &'static str },
    /// Scalar arithmetic error surfaced during construction.
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    /// Quantum-plane arithmetic error surfaced during construction.
    #[error(transparent)]
    QPlane(#[from] QPlaneError),
}

/// A sign `±1`, used for the four type II instances.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    /// `+1`
    Plus,
    /// `−1`
    Minus,
}

impl Sign {
    /// Both signs, in `(+, −)` order.
    pub const ALL: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// The sign as a weight constant `±1`.
    pub fn weight(self) -> WeightConstant {
        match self {
            Sign::Plus => WeightConstant::one(),
            Sign::Minus => WeightConstant::minus_one(),
        }
    }

    /// Reads `1` or `−1`.
    pub fn from_int(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// The sign as an integer `±1`.
    pub fn to_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Selector between the two weight-constant pairs of a series class.
///
/// The `D = 2, G = 1` and both `D = 4` classes admit two pairs; classes with
/// a single pair ignore the selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightVariant {
    /// The first of the two admissible pairs.
    A,
    /// The second of the two admissible pairs.
    B,
}

impl fmt::Display for WeightVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightVariant::A => write!(f, "a"),
            WeightVariant::B => write!(f, "b"),
        }
    }
}

impl FromStr for WeightVariant {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" | "A" => Ok(WeightVariant::A),
            "b" | "B" => Ok(WeightVariant::B),
            other => Err(CatalogError::UnknownCoefficient {
                id: SeriesId::Generic,
                name: format!("weight variant `{other}`"),
            }),
        }
    }
}

/// Integral parameters `(r, s, u, v)` of the matrix `Φ = (r s; u v)`, the
/// progression shift `M`, and the progression lengths `L ≤ N`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IntegralParams {
    r: i64,
    s: i64,
    u: i64,
    v: i64,
    m: i64,
    l: i64,
    n: i64,
}

impl IntegralParams {
    /// Validates `(r, s) ≠ (0, 0)`, `D = rv − su ≠ 0`, and `0 ≤ L ≤ N`.
    pub fn new(
        r: i64,
        s: i64,
        u: i64,
        v: i64,
        m: i64,
        l: i64,
        n: i64,
    ) -> Result<Self, CatalogError> {
        if r == 0 && s == 0 {
            return Err(CatalogError::ZeroDirection);
        }
        if r * v - s * u == 0 {
            return Err(CatalogError::ZeroDiscriminant);
        }
        if !(0 <= l && l <= n) {
            return Err(CatalogError::BadLevels { l, n });
        }
        Ok(IntegralParams { r, s, u, v, m, l, n })
    }

    /// First row, first entry of `Φ`.
    pub fn r(&self) -> i64 {
        self.r
    }

    /// First row, second entry of `Φ`.
    pub fn s(&self) -> i64 {
        self.s
    }

    /// Second row, first entry of `Φ`.
    pub fn u(&self) -> i64 {
        self.u
    }

    /// Second row, second entry of `Φ`.
    pub fn v(&self) -> i64 {
        self.v
    }

    /// Progression shift `M`.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// Length of the e-progression (indices `0 ..= L`).
    pub fn l(&self) -> i64 {
        self.l
    }

    /// Total progression span (f-indices run `0 ..= N − L`).
    pub fn n(&self) -> i64 {
        self.n
    }

    /// The discriminant `D = rv − su`.
    pub fn d(&self) -> i64 {
        self.r * self.v - self.s * self.u
    }

    /// The invariant `G = gcd(r, s)` (positive).
    pub fn g(&self) -> i64 {
        self.r.abs().gcd(&self.s.abs())
    }
}

/// The two isomorphism invariants `(D, G)` of an integral parameter set.
pub fn invariants(p: &IntegralParams) -> (i64, i64) {
    (p.d(), p.g())
}

/// The transported parameter set with `Φ' = Φ σ^{-1}` and unchanged
/// `M`, `L`, `N`.
///
/// Conjugating a symmetry by an automorphism with matrix part `σ` transports
/// its integral matrix this way; `det Φ' = det Φ`, so the result always
/// revalidates.
pub fn transform_params(p: &IntegralParams, sigma: &Sl2z) -> IntegralParams {
    let (k, m, l, n) = sigma.entries();
    let (r2, s2) = (p.r * n - p.s * l, -p.r * m + p.s * k);
    let (u2, v2) = (p.u * n - p.v * l, -p.u * m + p.v * k);
    IntegralParams::new(r2, s2, u2, v2, p.m, p.l, p.n)
        .expect("unimodular transport preserves the parameter invariants")
}

/// Identifier of one symmetry family.
///
/// `TypeI`, `TypeII`, and `Generic` name the classical families; the `D…`
/// ids name the 23 integral series (weight variant `a`/`b` is part of the
/// name where the class has two pairs); the `Emb…` ids name the five unnamed
/// embedded series, keyed by their `(D, N, L)` signature.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
#[allow(missing_docs)]
pub enum SeriesId {
    TypeI,
    TypeII,
    Generic,
    D1G1E1F3,
    D1G1E2F4,
    D1G1E3F3,
    D1G1E2F2,
    D1G1E4F2,
    D1G1E3F1,
    D2G1E1F3A,
    D2G1E1F3B,
    D2G1E2F2A,
    D2G1E2F2B,
    D2G1E3F1A,
    D2G1E3F1B,
    D2G2E1F3,
    D2G2E2F2,
    D2G2E3F1,
    D4G1E1F2A,
    D4G1E1F2B,
    D4G1E2F1A,
    D4G1E2F1B,
    D4G2E1F2A,
    D4G2E1F2B,
    D4G2E2F1A,
    D4G2E2F1B,
    EmbD1N2L0,
    EmbD1N2L1,
    EmbD1N2L2,
    EmbD2N1L0,
    EmbD2N1L1,
}

/// The `(D, G, L, N)` signature of an integral series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SeriesSignature {
    /// Discriminant `D` of the class.
    pub d: i64,
    /// Gcd invariant `G` of the class.
    pub g: i64,
    /// e-progression length `L`.
    pub l: i64,
    /// Total progression span `N`.
    pub n: i64,
}

impl SeriesId {
    /// All 31 ids: the three classical families, the 23 named series, and
    /// the 5 embedded series.
    pub const ALL: [SeriesId; 31] = [
        SeriesId::TypeI,
        SeriesId::TypeII,
        SeriesId::Generic,
        SeriesId::D1G1E1F3,
        SeriesId::D1G1E2F4,
        SeriesId::D1G1E3F3,
        SeriesId::D1G1E2F2,
        SeriesId::D1G1E4F2,
        SeriesId::D1G1E3F1,
        SeriesId::D2G1E1F3A,
        SeriesId::D2G1E1F3B,
        SeriesId::D2G1E2F2A,
        SeriesId::D2G1E2F2B,
        SeriesId::D2G1E3F1A,
        SeriesId::D2G1E3F1B,
        SeriesId::D2G2E1F3,
        SeriesId::D2G2E2F2,
        SeriesId::D2G2E3F1,
        SeriesId::D4G1E1F2A,
        SeriesId::D4G1E1F2B,
        SeriesId::D4G1E2F1A,
        SeriesId::D4G1E2F1B,
        SeriesId::D4G2E1F2A,
        SeriesId::D4G2E1F2B,
        SeriesId::D4G2E2F1A,
        SeriesId::D4G2E2F1B,
        SeriesId::EmbD1N2L0,
        SeriesId::EmbD1N2L1,
        SeriesId::EmbD1N2L2,
        SeriesId::EmbD2N1L0,
        SeriesId::EmbD2N1L1,
    ];

    /// True for the three classical (non-integral) family ids.
    pub fn is_classical(self) -> bool {
        matches!(self, SeriesId::TypeI | SeriesId::TypeII | SeriesId::Generic)
    }

    /// True for the five embedded unnamed series.
    pub fn is_embedded(self) -> bool {
        series_row(self).is_some_and(|row| row.embedding.is_some())
    }

    /// True for the 28 integral series (named or embedded).
    pub fn is_integral(self) -> bool {
        series_row(self).is_some()
    }

    /// The `(D, G, L, N)` signature for integral series ids.
    pub fn signature(self) -> Option<SeriesSignature> {
        series_row(self).map(|row| SeriesSignature { d: row.d, g: row.g, l: row.l, n: row.n })
    }

    /// The weight variant fixed by the id's name, if any.
    pub fn variant(self) -> Option<WeightVariant> {
        use SeriesId::*;
        match self {
            D2G1E1F3A | D2G1E2F2A | D2G1E3F1A | D4G1E1F2A | D4G1E2F1A | D4G2E1F2A
            | D4G2E2F1A => Some(WeightVariant::A),
            D2G1E1F3B | D2G1E2F2B | D2G1E3F1B | D4G1E1F2B | D4G1E2F1B | D4G2E1F2B
            | D4G2E2F1B => Some(WeightVariant::B),
            _ => None,
        }
    }

    /// Free coefficient names of an integral series with their
    /// required-nonzero flags, in slot order (e-side first).
    pub fn free_coefficients(self) -> Vec<(&'static str, bool)> {
        let Some(row) = series_row(self) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for slot in row.a_slots.iter().chain(row.c_slots.iter()) {
            if let CoeffSlot::Free { name, required } = slot {
                out.push((*name, *required));
            }
        }
        out
    }

    /// For an embedded series: the named target series and the name of the
    /// target coefficient whose vanishing realizes the embedding.
    pub fn embedding(self) -> Option<(SeriesId, &'static str)> {
        series_row(self)?.embedding.map(|e| (e.target, e.zeroed))
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SeriesId::*;
        let s = match self {
            TypeI => "TypeI",
            TypeII => "TypeII",
            Generic => "Generic",
            D1G1E1F3 => "D1G1E1F3",
            D1G1E2F4 => "D1G1E2F4",
            D1G1E3F3 => "D1G1E3F3",
            D1G1E2F2 => "D1G1E2F2",
            D1G1E4F2 => "D1G1E4F2",
            D1G1E3F1 => "D1G1E3F1",
            D2G1E1F3A => "D2G1E1F3a",
            D2G1E1F3B => "D2G1E1F3b",
            D2G1E2F2A => "D2G1E2F2a",
            D2G1E2F2B => "D2G1E2F2b",
            D2G1E3F1A => "D2G1E3F1a",
            D2G1E3F1B => "D2G1E3F1b",
            D2G2E1F3 => "D2G2E1F3",
            D2G2E2F2 => "D2G2E2F2",
            D2G2E3F1 => "D2G2E3F1",
            D4G1E1F2A => "D4G1E1F2a",
            D4G1E1F2B => "D4G1E1F2b",
            D4G1E2F1A => "D4G1E2F1a",
            D4G1E2F1B => "D4G1E2F1b",
            D4G2E1F2A => "D4G2E1F2a",
            D4G2E1F2B => "D4G2E1F2b",
            D4G2E2F1A => "D4G2E2F1a",
            D4G2E2F1B => "D4G2E2F1b",
            EmbD1N2L0 => "EmbD1N2L0",
            EmbD1N2L1 => "EmbD1N2L1",
            EmbD1N2L2 => "EmbD1N2L2",
            EmbD2N1L0 => "EmbD2N1L0",
            EmbD2N1L1 => "EmbD2N1L1",
        };
        write!(f, "{s}")
    }
}

/// Error for an unrecognized series name.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("unknown series id `{0}`")]
pub struct ParseSeriesIdError(pub String);

impl FromStr for SeriesId {
    type Err = ParseSeriesIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SeriesId::ALL
            .into_iter()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| ParseSeriesIdError(s.to_string()))
    }
}

/// Assignment of values (exact scalars or indeterminates) to the free
/// coefficients of a series.
///
/// Names not assigned here default to the indeterminate of the same name, so
/// an empty set requests a fully symbolic instance.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CoefficientSet {
    values: BTreeMap<String, QScalar>,
}

impl CoefficientSet {
    /// The empty (fully symbolic) assignment.
    pub fn new() -> Self {
        CoefficientSet::default()
    }

    /// Sets one coefficient by name, returning `self` for chaining.
    pub fn with(mut self, name: &str, value: QScalar) -> Self {
        self.values.insert(name.to_string(), value);
        self
    }

    /// Sets one coefficient by name.
    pub fn set(&mut self, name: &str, value: QScalar) {
        self.values.insert(name.to_string(), value);
    }

    /// Looks up an assigned value.
    pub fn get(&self, name: &str) -> Option<&QScalar> {
        self.values.get(name)
    }

    /// Iterates over assigned `(name, value)` pairs in name order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &QScalar)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v))
    }
}

/// How one slot of a series coefficient vector is filled.
#[derive(Clone, Copy, Debug)]
enum CoeffSlot {
    /// Identically zero in this series.
    Zero,
    /// A free coefficient; `required` marks the classification's
    /// must-be-nonzero flags.
    Free { name: &'static str, required: bool },
    /// Determined from the free coefficients by a closed formula.
    Determined(DeterminedRule),
}

/// The closed formulas for determined coefficients.
///
/// `Q` abbreviates `q^{(u+Mr)(v+Ms)+3}·(1−q²)^{−2}`; every series couples its
/// leading coefficients by `a₀c₀ = −Q`, and the deeper D = 1 series determine
/// one further coefficient on each of the listed shapes.
#[derive(Clone, Copy, Debug)]
enum DeterminedRule {
    /// `a₀ = −c₀^{-1}·Q`
    AnchorFromC,
    /// `c₀ = −a₀^{-1}·Q`
    AnchorFromA,
    /// `a₁ = c₀^{-2}c₁·Q·q^{1+2su+2Mrs}`
    D1A1,
    /// `c₁ = a₀^{-2}a₁·Q·q^{-1-2su-2Mrs}`
    D1C1,
    /// `c₂ = −a₀^{-2}a₂·Q·q^{-2-4su-4Mrs}`
    D1C2,
    /// `c₃ = c₀^{-1}c₁c₂·q^{2rs}`
    D1C3,
    /// `a₃ = a₀^{-1}a₁a₂·q^{2rs}`
    D1A3,
}

/// One row of the declarative series table.
struct SeriesRow {
    id: SeriesId,
    d: i64,
    g: i64,
    l: i64,
    n: i64,
    a_slots: &'static [CoeffSlot],
    c_slots: &'static [CoeffSlot],
    embedding: Option<Embedding>,
}

/// Embedding metadata for the unnamed series.
#[derive(Clone, Copy)]
struct Embedding {
    target: SeriesId,
    zeroed: &'static str,
}

const fn free(name: &'static str) -> CoeffSlot {
    CoeffSlot::Free { name, required: false }
}

const fn req(name: &'static str) -> CoeffSlot {
    CoeffSlot::Free { name, required: true }
}

use CoeffSlot::{Determined as Det, Zero as Z0};
use DeterminedRule::{AnchorFromA, AnchorFromC, D1A1, D1A3, D1C1, D1C2, D1C3};

/// The 23 named series and 5 embedded series as declarative data: signature,
/// e-side coefficient slots `a₀ ..= a_L`, f-side slots `c₀ ..= c_{N−L}`.
static SERIES_TABLE: &[SeriesRow] = &[
    SeriesRow {
        id: SeriesId::D1G1E1F3,
        d: 1, g: 1, l: 0, n: 4,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), Z0, free("c2"), Z0, free("c4")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D1G1E2F4,
        d: 1, g: 1, l: 1, n: 4,
        a_slots: &[Det(AnchorFromC), Det(D1A1)],
        c_slots: &[req("c0"), free("c1"), free("c2"), Det(D1C3)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D1G1E3F3,
        d: 1, g: 1, l: 2, n: 4,
        a_slots: &[req("a0"), req("a1"), free("a2")],
        c_slots: &[Det(AnchorFromA), Det(D1C1), Det(D1C2)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D1G1E2F2,
        d: 1, g: 1, l: 2, n: 4,
        a_slots: &[req("a0"), Z0, free("a2")],
        c_slots: &[Det(AnchorFromA), Z0, free("c2")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D1G1E4F2,
        d: 1, g: 1, l: 3, n: 4,
        a_slots: &[req("a0"), free("a1"), free("a2"), Det(D1A3)],
        c_slots: &[Det(AnchorFromA), Det(D1C1)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D1G1E3F1,
        d: 1, g: 1, l: 4, n: 4,
        a_slots: &[req("a0"), Z0, free("a2"), Z0, free("a4")],
        c_slots: &[Det(AnchorFromA)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D2G1E1F3A,
        d: 2, g: 1, l: 0, n: 2,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), free("c1"), free("c2")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D2G1E1F3B,
        d: 2, g: 1, l: 0, n: 2,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), free("c1"), free("c2")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D2G1E2F2A,
        d: 2, g: 1, l: 1, n: 2,
        a_slots: &[req("a0"), free("a1")],
        c_slots: &[Det(AnchorFromA), free("c1")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D2G1E2F2B,
        d: 2, g: 1, l: 1, n: 2,
        a_slots: &[req("a0"), free("a1")],
        c_slots: &[Det(AnchorFromA), free("c1")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D2G1E3F1A,
        d: 2, g: 1, l: 2, n: 2,
        a_slots: &[req("a0"), free("a1"), free("a2")],
        c_slots: &[Det(AnchorFromA)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D2G1E3F1B,
        d: 2, g: 1, l: 2, n: 2,
        a_slots: &[req("a0"), free("a1"), free("a2")],
        c_slots: &[Det(AnchorFromA)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D2G2E1F3,
        d: 2, g: 2, l: 0, n: 2,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), free("c1"), free("c2")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D2G2E2F2,
        d: 2, g: 2, l: 1, n: 2,
        a_slots: &[req("a0"), free("a1")],
        c_slots: &[Det(AnchorFromA), free("c1")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D2G2E3F1,
        d: 2, g: 2, l: 2, n: 2,
        a_slots: &[req("a0"), free("a1"), free("a2")],
        c_slots: &[Det(AnchorFromA)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D4G1E1F2A,
        d: 4, g: 1, l: 0, n: 1,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), free("c1")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D4G1E1F2B,
        d: 4, g: 1, l: 0, n: 1,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), free("c1")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D4G1E2F1A,
        d: 4, g: 1, l: 1, n: 1,
        a_slots: &[req("a0"), free("a1")],
        c_slots: &[Det(AnchorFromA)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D4G1E2F1B,
        d: 4, g: 1, l: 1, n: 1,
        a_slots: &[req("a0"), free("a1")],
        c_slots: &[Det(AnchorFromA)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D4G2E1F2A,
        d: 4, g: 2, l: 0, n: 1,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), free("c1")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D4G2E1F2B,
        d: 4, g: 2, l: 0, n: 1,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), free("c1")],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D4G2E2F1A,
        d: 4, g: 2, l: 1, n: 1,
        a_slots: &[req("a0"), free("a1")],
        c_slots: &[Det(AnchorFromA)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::D4G2E2F1B,
        d: 4, g: 2, l: 1, n: 1,
        a_slots: &[req("a0"), free("a1")],
        c_slots: &[Det(AnchorFromA)],
        embedding: None,
    },
    SeriesRow {
        id: SeriesId::EmbD1N2L0,
        d: 1, g: 1, l: 0, n: 2,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), Z0, free("c2")],
        embedding: Some(Embedding { target: SeriesId::D1G1E1F3, zeroed: "c4" }),
    },
    SeriesRow {
        id: SeriesId::EmbD1N2L1,
        d: 1, g: 1, l: 1, n: 2,
        a_slots: &[req("a0"), free("a1")],
        c_slots: &[Det(AnchorFromA), Det(D1C1)],
        embedding: Some(Embedding { target: SeriesId::D1G1E4F2, zeroed: "a2" }),
    },
    SeriesRow {
        id: SeriesId::EmbD1N2L2,
        d: 1, g: 1, l: 2, n: 2,
        a_slots: &[req("a0"), Z0, free("a2")],
        c_slots: &[Det(AnchorFromA)],
        embedding: Some(Embedding { target: SeriesId::D1G1E3F1, zeroed: "a4" }),
    },
    SeriesRow {
        id: SeriesId::EmbD2N1L0,
        d: 2, g: 1, l: 0, n: 1,
        a_slots: &[Det(AnchorFromC)],
        c_slots: &[req("c0"), free("c1")],
        embedding: Some(Embedding { target: SeriesId::D2G1E1F3A, zeroed: "c2" }),
    },
    SeriesRow {
        id: SeriesId::EmbD2N1L1,
        d: 2, g: 1, l: 1, n: 1,
        a_slots: &[req("a0"), free("a1")],
        c_slots: &[Det(AnchorFromA)],
        embedding: Some(Embedding { target: SeriesId::D2G1E3F1A, zeroed: "a2" }),
    },
];

fn series_row(id: SeriesId) -> Option<&'static SeriesRow> {
    SERIES_TABLE.iter().find(|row| row.id == id)
}

/// The two-parameter family with inverted weights: `k(x) = α^{-1}x^{-1}`,
/// `k(y) = β^{-1}y^{-1}`, and `e = f = 0`.
pub fn make_type1(alpha: &WeightConstant, beta: &WeightConstant) -> SymmetryAction {
    let spec = AutomorphismSpec::new(
        Sl2z::minus_identity(),
        alpha.inv().to_scalar(),
        beta.inv().to_scalar(),
    )
    .expect("weight constants are nonzero");
    SymmetryAction::new(
        spec,
        LaurentPoly::zero(),
        LaurentPoly::zero(),
        LaurentPoly::zero(),
        LaurentPoly::zero(),
    )
}

/// One of the four sign symmetries: `k(x) = ε_x x`, `k(y) = ε_y y`,
/// `e = f = 0`.
pub fn make_type2(eps_x: Sign, eps_y: Sign) -> SymmetryAction {
    let spec = AutomorphismSpec::new(
        Sl2z::identity(),
        eps_x.weight().to_scalar(),
        eps_y.weight().to_scalar(),
    )
    .expect("signs are nonzero");
    SymmetryAction::new(
        spec,
        LaurentPoly::zero(),
        LaurentPoly::zero(),
        LaurentPoly::zero(),
        LaurentPoly::zero(),
    )
}

/// Exact genericity decision: the smallest violated relation
/// `α^m β^n = 1` with `(m, n) ≠ (0, 0)`, or `None` when the pair is generic.
///
/// Writing `α = s_α·r_α·ζ^{e_α}` (and likewise β), a relation demands that
/// `(m, n)` annihilate the ζ-exponent vector `(e_α, e_β)` and, for every
/// prime `p`, the vector of `p`-adic orders of `r_α`, `r_β`, with signs
/// multiplying to `+1`. The annihilator of those vectors is a sublattice of
/// ℤ²: rank 2 data leaves only `(0, 0)` (generic); otherwise the primitive
/// annihilating direction, doubled if needed to fix the sign, is a witness.
fn genericity_witness(alpha: &WeightConstant, beta: &WeightConstant) -> Option<(i64, i64)> {
    let mut rows: Vec<(i64, i64)> = vec![(alpha.zeta_exponent(), beta.zeta_exponent())];
    let mut orders: BTreeMap<BigInt, (i64, i64)> = BTreeMap::new();
    let mut absorb = |value: &BigInt, slot: usize, sign: i64| {
        for (p, k) in prime_factorization(value) {
            let entry = orders.entry(p).or_insert((0, 0));
            if slot == 0 {
                entry.0 += sign * k;
            } else {
                entry.1 += sign * k;
            }
        }
    };
    absorb(alpha.rational_part().numer(), 0, 1);
    absorb(alpha.rational_part().denom(), 0, -1);
    absorb(beta.rational_part().numer(), 1, 1);
    absorb(beta.rational_part().denom(), 1, -1);
    rows.extend(orders.values().copied());

    let pivot = rows.iter().copied().find(|&(x, y)| (x, y) != (0, 0));
    let Some((x0, y0)) = pivot else {
        // Pure signs: α² = β² = 1, so (2, 0) is always a violation.
        return Some((2, 0));
    };
    if rows.iter().any(|&(x, y)| x0 * y - y0 * x != 0) {
        // Rank 2: only (0, 0) annihilates everything.
        return None;
    }
    let g = x0.abs().gcd(&y0.abs());
    let (xp, yp) = (x0 / g, y0 / g);
    // Primitive annihilator of (xp, yp), oriented with a positive leading entry.
    let (mut m, mut n) = (-yp, xp);
    if m < 0 || (m == 0 && n < 0) {
        m = -m;
        n = -n;
    }
    let sign = alpha.pow(m).mul(&beta.pow(n)).sign();
    if sign == 1 {
        Some((m, n))
    } else {
        Some((2 * m, 2 * n))
    }
}

/// Prime factorization of `|value|` by trial division (inputs here are
/// user-supplied weight numerators and denominators, so small in practice).
fn prime_factorization(value: &BigInt) -> Vec<(BigInt, i64)> {
    let mut n = value.abs();
    let mut out = Vec::new();
    if n <= BigInt::one() {
        return out;
    }
    let mut push = |p: &BigInt, k: i64| out.push((p.clone(), k));
    let two = BigInt::from(2);
    let mut k = 0;
    while (&n).is_multiple_of(&two) {
        n /= &two;
        k += 1;
    }
    if k > 0 {
        push(&two, k);
    }
    let mut d = BigInt::from(3);
    while &d * &d <= n {
        let mut k = 0;
        while (&n).is_multiple_of(&d) {
            n /= &d;
            k += 1;
        }
        if k > 0 {
            push(&d, k);
        }
        d += 2;
    }
    if n > BigInt::one() {
        push(&n, 1);
    }
    out
}

/// The generic one-parameter symmetry for a weight pair with
/// `α^u β^v = q²` and no nontrivial relation `α^m β^n = 1`.
///
/// Images: `e(x) = a·q^{uv+3}(1−αq^v)(1−q²)^{-2}·x^{u+1}y^v`,
/// `e(y) = a·q^{uv+3}(q^u−β)(1−q²)^{-2}·x^u y^{v+1}`,
/// `f(x) = −a^{-1}(α^{-1}−q^{-v})·x^{-u+1}y^{-v}`,
/// `f(y) = −a^{-1}(β^{-1}q^{-u}−1)·x^{-u}y^{-v+1}`, with `k` diagonal.
pub fn make_generic(
    u: i64,
    v: i64,
    alpha: &WeightConstant,
    beta: &WeightConstant,
    a: &QScalar,
) -> Result<SymmetryAction, CatalogError> {
    if a.is_zero() {
        return Err(CatalogError::ZeroArgument { name: "a" });
    }
    if !alpha.pow(u).mul(&beta.pow(v)).mul(&WeightConstant::q_pow(-2)).is_one() {
        return Err(CatalogError::WeightNormalization { u, v });
    }
    if let Some((m, n)) = genericity_witness(alpha, beta) {
        return Err(CatalogError::GenericityViolation { m, n });
    }
    let alpha_s = alpha.to_scalar();
    let beta_s = beta.to_scalar();
    let one = QScalar::one();
    let d = &one - &QScalar::q_pow(2);
    let front = QScalar::q_pow(u * v + 3).div(&(&d * &d))?;
    let e_x_coeff = &(a * &front) * &(&one - &(&alpha_s * &QScalar::q_pow(v)));
    let e_y_coeff = &(a * &front) * &(&QScalar::q_pow(u) - &beta_s);
    let a_inv = a.inverse()?;
    let f_x_coeff = -&(&a_inv * &(&alpha.inv().to_scalar() - &QScalar::q_pow(-v)));
    let f_y_coeff =
        -&(&a_inv * &(&(&beta.inv().to_scalar() * &QScalar::q_pow(-u)) - &one));
    let spec = AutomorphismSpec::new(Sl2z::identity(), alpha_s, beta_s)?;
    Ok(SymmetryAction::new(
        spec,
        LaurentPoly::monomial(e_x_coeff, u + 1, v),
        LaurentPoly::monomial(e_y_coeff, u, v + 1),
        LaurentPoly::monomial(f_x_coeff, -u + 1, -v),
        LaurentPoly::monomial(f_y_coeff, -u, -v + 1),
    ))
}

/// The weight-constant pair of an integral series class, for parameters
/// matching the id's `(D, G)` signature.
///
/// For ids whose name fixes variant `a` or `b`, the selector must agree (or
/// the call fails); embedded ids take the selector as is.
pub fn weight_constants_for(
    id: SeriesId,
    p: &IntegralParams,
    variant: WeightVariant,
) -> Result<WeightPair, CatalogError> {
    let row = series_row(id).ok_or(CatalogError::NotAnIntegralSeries { id })?;
    if let Some(fixed) = id.variant() {
        if fixed != variant {
            return Err(CatalogError::VariantMismatch { id, fixed, requested: variant });
        }
    }
    validate_class(id, row, p)?;
    let (r, s, u, v) = (p.r(), p.s(), p.u(), p.v());
    let pair = match (row.d, row.g, variant) {
        (1, 1, _) => WeightPair::new(
            WeightConstant::q_pow(-2 * s),
            WeightConstant::q_pow(2 * r),
        ),
        (2, 1, WeightVariant::A) => {
            WeightPair::new(WeightConstant::q_pow(-s), WeightConstant::q_pow(r))
        }
        (2, 1, WeightVariant::B) => WeightPair::new(
            WeightConstant::sign_pow(s).mul(&WeightConstant::q_pow(-s)),
            WeightConstant::sign_pow(r).mul(&WeightConstant::q_pow(r)),
        ),
        (2, 2, _) => WeightPair::new(
            WeightConstant::sign_pow(v).mul(&WeightConstant::q_pow(-s)),
            WeightConstant::sign_pow(u).mul(&WeightConstant::q_pow(r)),
        ),
        (4, 1, WeightVariant::A) => {
            WeightPair::new(WeightConstant::zeta_pow(-s), WeightConstant::zeta_pow(r))
        }
        (4, 1, WeightVariant::B) => WeightPair::new(
            WeightConstant::sign_pow(s).mul(&WeightConstant::zeta_pow(-s)),
            WeightConstant::sign_pow(r).mul(&WeightConstant::zeta_pow(r)),
        ),
        (4, 2, sel) => {
            let (r2, s2) = (r / 2, s / 2);
            match sel {
                WeightVariant::A => WeightPair::new(
                    WeightConstant::minus_one().mul(&WeightConstant::q_pow(-s2)),
                    WeightConstant::sign_pow(r2 + 1).mul(&WeightConstant::q_pow(r2)),
                ),
                WeightVariant::B => WeightPair::new(
                    WeightConstant::sign_pow(s2 + 1).mul(&WeightConstant::q_pow(-s2)),
                    WeightConstant::minus_one().mul(&WeightConstant::q_pow(r2)),
                ),
            }
        }
        _ => unreachable!("series table only contains the five weight classes"),
    };
    debug_assert!(
        pair.alpha.pow(r).mul(&pair.beta.pow(s)).is_one(),
        "weight pair must satisfy alpha^r * beta^s = 1"
    );
    debug_assert!(
        pair.alpha
            .pow(u)
            .mul(&pair.beta.pow(v))
            .mul(&WeightConstant::q_pow(-2))
            .is_one(),
        "weight pair must satisfy alpha^u * beta^v = q^2"
    );
    Ok(pair)
}

/// Checks `(D, G)` of the parameters against a series row, including the
/// D = 4 special cases.
fn validate_class(id: SeriesId, row: &SeriesRow, p: &IntegralParams) -> Result<(), CatalogError> {
    if p.r() == 0 && p.s() == 0 {
        return Err(CatalogError::ZeroDirection);
    }
    let d = p.d();
    if d != row.d {
        return Err(CatalogError::DiscriminantMismatch { id, expected: row.d, got: d });
    }
    let g = p.g();
    if row.d == 4 && g == 4 {
        return Err(CatalogError::NoWeightSolution);
    }
    if g != row.g {
        return Err(CatalogError::GcdMismatch { id, expected: row.g, got: g });
    }
    if row.d == 4 && row.g == 2 && (p.u() % 2 != 0 || p.v() % 2 != 0) {
        return Err(CatalogError::ParityViolation { u: p.u(), v: p.v() });
    }
    Ok(())
}

/// True iff `(r, s)` is minimal for the pair: no divisor `d > 1` of
/// `gcd(r, s)` satisfies `α^{r/d} β^{s/d} = 1`.
///
/// Precondition: `α^r β^s = 1` (typed rejection otherwise).
pub fn minimality_check(r: i64, s: i64, w: &WeightPair) -> Result<bool, CatalogError> {
    if r == 0 && s == 0 {
        return Err(CatalogError::ZeroDirection);
    }
    if !w.alpha.pow(r).mul(&w.beta.pow(s)).is_one() {
        return Err(CatalogError::MinimalityPrecondition { r, s });
    }
    let g = r.abs().gcd(&s.abs());
    for d in 2..=g {
        if g % d == 0 && w.alpha.pow(r / d).mul(&w.beta.pow(s / d)).is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds an integral-series symmetry, taking the weight variant from the
/// id's name (embedded ids default to variant `a`).
pub fn make_nongeneric(
    id: SeriesId,
    p: &IntegralParams,
    coeffs: &CoefficientSet,
) -> Result<SymmetryAction, CatalogError> {
    let variant = id.variant().unwrap_or(WeightVariant::A);
    make_nongeneric_with_variant(id, p, variant, coeffs)
}

/// Builds an integral-series symmetry with an explicit weight variant.
///
/// Validates the full `(D, G, L, N)` signature, the coefficient names and
/// required-nonzero flags, and minimality of `(r, s)` for the selected
/// weights; then transcribes the series images
///
/// - `e(x) += a_w(1−αq^{v+(M+w)s})·x^{u+1+(M+w)r}y^{v+(M+w)s}` for `w = 0..=L`,
/// - `e(y) += a_w(q^{u+(M+w)r}−β)·x^{u+(M+w)r}y^{v+1+(M+w)s}`,
/// - `f(x) += c_t(α^{-1}−q^{-v+(−M+t)s})·x^{-u+1+(−M+t)r}y^{-v+(−M+t)s}` for
///   `t = 0..=N−L`,
/// - `f(y) += c_t(β^{-1}q^{-u+(−M+t)r}−1)·x^{-u+(−M+t)r}y^{-v+1+(−M+t)s}`,
///
/// with determined coefficients filled in from the series table.
pub fn make_nongeneric_with_variant(
    id: SeriesId,
    p: &IntegralParams,
    variant: WeightVariant,
    coeffs: &CoefficientSet,
) -> Result<SymmetryAction, CatalogError> {
    let row = series_row(id).ok_or(CatalogError::NotAnIntegralSeries { id })?;
    if (p.l(), p.n()) != (row.l, row.n) {
        return Err(CatalogError::LevelMismatch {
            id,
            expected_l: row.l,
            expected_n: row.n,
            got_l: p.l(),
            got_n: p.n(),
        });
    }
    let weights = weight_constants_for(id, p, variant)?;
    if !minimality_check(p.r(), p.s(), &weights)? {
        return Err(CatalogError::MinimalityFailure { r: p.r(), s: p.s() });
    }

    let known: Vec<&'static str> = id.free_coefficients().iter().map(|(n, _)| *n).collect();
    for (name, _) in coeffs.iter() {
        if !known.contains(&name) {
            return Err(CatalogError::UnknownCoefficient { id, name: name.to_string() });
        }
    }

    let mut free_values: BTreeMap<&'static str, QScalar> = BTreeMap::new();
    let mut resolve_free = |name: &'static str, required: bool| -> Result<QScalar, CatalogError> {
        let value = match coeffs.get(name) {
            Some(v) => v.clone(),
            None => QScalar::var(name)?,
        };
        if required && value.is_zero() {
            return Err(CatalogError::ZeroRequiredCoefficient { id, name });
        }
        free_values.insert(name, value.clone());
        Ok(value)
    };

    let mut a_vec: Vec<Option<QScalar>> = Vec::with_capacity(row.a_slots.len());
    let mut c_vec: Vec<Option<QScalar>> = Vec::with_capacity(row.c_slots.len());
    for slot in row.a_slots {
        a_vec.push(match slot {
            CoeffSlot::Zero => Some(QScalar::zero()),
            CoeffSlot::Free { name, required } => Some(resolve_free(name, *required)?),
            CoeffSlot::Determined(_) => None,
        });
    }
    for slot in row.c_slots {
        c_vec.push(match slot {
            CoeffSlot::Zero => Some(QScalar::zero()),
            CoeffSlot::Free { name, required } => Some(resolve_free(name, *required)?),
            CoeffSlot::Determined(_) => None,
        });
    }

    let q_anchor = anchor_quantity(p)?;
    let lookup = |name: &str| -> QScalar {
        free_values
            .get(name)
            .cloned()
            .expect("determined-coefficient rules only reference free coefficients of the same series")
    };
    let eval_rule = |rule: &DeterminedRule| -> Result<QScalar, CatalogError> {
        let (r, s, u, m) = (p.r(), p.s(), p.u(), p.m());
        Ok(match rule {
            DeterminedRule::AnchorFromC => (-&q_anchor).div(&lookup("c0"))?,
            DeterminedRule::AnchorFromA => (-&q_anchor).div(&lookup("a0"))?,
            DeterminedRule::D1A1 => {
                let num = &(&lookup("c1") * &q_anchor)
                    * &QScalar::q_pow(1 + 2 * s * u + 2 * m * r * s);
                num.div(&(&lookup("c0") * &lookup("c0")))?
            }
            DeterminedRule::D1C1 => {
                let num = &(&lookup("a1") * &q_anchor)
                    * &QScalar::q_pow(-1 - 2 * s * u - 2 * m * r * s);
                num.div(&(&lookup("a0") * &lookup("a0")))?
            }
            DeterminedRule::D1C2 => {
                let num = &(&lookup("a2") * &q_anchor)
                    * &QScalar::q_pow(-2 - 4 * s * u - 4 * m * r * s);
                -&num.div(&(&lookup("a0") * &lookup("a0")))?
            }
            DeterminedRule::D1C3 => {
                let num = &(&lookup("c1") * &lookup("c2")) * &QScalar::q_pow(2 * r * s);
                num.div(&lookup("c0"))?
            }
            DeterminedRule::D1A3 => {
                let num = &(&lookup("a1") * &lookup("a2")) * &QScalar::q_pow(2 * r * s);
                num.div(&lookup("a0"))?
            }
        })
    };
    for (slot, value) in row.a_slots.iter().zip(a_vec.iter_mut()) {
        if let CoeffSlot::Determined(rule) = slot {
            *value = Some(eval_rule(rule)?);
        }
    }
    for (slot, value) in row.c_slots.iter().zip(c_vec.iter_mut()) {
        if let CoeffSlot::Determined(rule) = slot {
            *value = Some(eval_rule(rule)?);
        }
    }
    let a_vec: Vec<QScalar> = a_vec.into_iter().map(Option::unwrap).collect();
    let c_vec: Vec<QScalar> = c_vec.into_iter().map(Option::unwrap).collect();

    Ok(assemble_action(p, &weights, &a_vec, &c_vec))
}

/// The quantity `Q = q^{(u+Mr)(v+Ms)+3}·(1−q²)^{-2}` coupling every series'
/// leading coefficients through `a₀c₀ = −Q`.
fn anchor_quantity(p: &IntegralParams) -> Result<QScalar, CatalogError> {
    let exp = (p.u() + p.m() * p.r()) * (p.v() + p.m() * p.s()) + 3;
    let d = &QScalar::one() - &QScalar::q_pow(2);
    Ok(QScalar::q_pow(exp).div(&(&d * &d))?)
}

/// Builds the four images from resolved coefficient vectors.
fn assemble_action(
    p: &IntegralParams,
    weights: &WeightPair,
    a_vec: &[QScalar],
    c_vec: &[QScalar],
) -> SymmetryAction {
    let (r, s, u, v, m) = (p.r(), p.s(), p.u(), p.v(), p.m());
    let alpha_s = weights.alpha.to_scalar();
    let beta_s = weights.beta.to_scalar();
    let alpha_inv = weights.alpha.inv().to_scalar();
    let beta_inv = weights.beta.inv().to_scalar();
    let one = QScalar::one();

    let mut e_x = LaurentPoly::zero();
    let mut e_y = LaurentPoly::zero();
    for (w, a_w) in a_vec.iter().enumerate() {
        if a_w.is_zero() {
            continue;
        }
        let shift = m + w as i64;
        let (i, j) = (u + shift * r, v + shift * s);
        e_x.add_term(a_w * &(&one - &(&alpha_s * &QScalar::q_pow(j))), i + 1, j);
        e_y.add_term(a_w * &(&QScalar::q_pow(i) - &beta_s), i, j + 1);
    }
    let mut f_x = LaurentPoly::zero();
    let mut f_y = LaurentPoly::zero();
    for (t, c_t) in c_vec.iter().enumerate() {
        if c_t.is_zero() {
            continue;
        }
        let shift = -m + t as i64;
        let (i, j) = (-u + shift * r, -v + shift * s);
        f_x.add_term(c_t * &(&alpha_inv - &QScalar::q_pow(j)), i + 1, j);
        f_y.add_term(c_t * &(&(&beta_inv * &QScalar::q_pow(i)) - &one), i, j + 1);
    }

    let spec = AutomorphismSpec::new(Sl2z::identity(), alpha_s, beta_s)
        .expect("weight constants are nonzero");
    SymmetryAction::new(spec, e_x, e_y, f_x, f_y)
}
