//! Document model for symmetry descriptions.
//!
//! - A `SymmetryDocument` is the on-disk form of one symmetry instance:
//!   a TOML table with exact scalar strings, never floating point.
//! - `resolve` validates a document and builds the actual action, mapping
//!   every constraint violation to a typed validation error.
//! - Round trip: serializing a parsed document and re-parsing it yields an
//!   equal document.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use qsym_core::catalog::{
    make_generic, make_nongeneric, make_nongeneric_with_variant, make_type1, make_type2,
    CoefficientSet, IntegralParams, SeriesId, Sign, WeightVariant,
};
use qsym_core::qplane::{AutomorphismSpec, Sl2z};
use qsym_core::scalar::{parse_scalar, WeightConstant};
use qsym_core::SymmetryAction;

use crate::CliError;

/// Which constructor family a document describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// One of the 28 integral series.
    Series,
    /// Weight type I (`k` inverts both generators up to scale).
    Type1,
    /// Weight type II (`k` scales by signs).
    Type2,
    /// The generic one-parameter family.
    Generic,
}

/// Integral parameters as written in a document.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsDoc {
    pub r: i64,
    pub s: i64,
    pub u: i64,
    pub v: i64,
    #[serde(default)]
    pub m: i64,
    /// e-progression length; defaults to the series signature.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<i64>,
    /// Total progression span; defaults to the series signature.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
}

/// A weight-constant pair as exact scalar strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsDoc {
    pub alpha: String,
    pub beta: String,
}

/// The two sign choices of a type II action.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignsDoc {
    pub epsilon_x: i64,
    pub epsilon_y: i64,
}

/// Data of a generic-family instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenericDoc {
    pub u: i64,
    pub v: i64,
    pub alpha: String,
    pub beta: String,
    pub a: String,
}

/// A torus automorphism `x ↦ μ x^k y^m`, `y ↦ ν x^l y^n` with
/// `sigma = [k, m, l, n]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismDoc {
    pub sigma: [i64; 4],
    pub mu: String,
    pub nu: String,
}

/// On-disk description of one symmetry instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetryDocument {
    pub family: Family,
    /// Series id, for `family = "series"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<String>,
    /// Weight-variant selector `"a"`/`"b"`, for classes with two pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsDoc>,
    /// Coefficient assignments; values are exact scalar strings, and a
    /// missing name stays symbolic.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coefficients: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<SignsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generic: Option<GenericDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<AutomorphismDoc>,
}

/// A validated document: the constructed action plus, for series
/// documents, the identity and parameters it was built from.
#[derive(Debug)]
pub struct ResolvedSymmetry {
    pub action: SymmetryAction,
    pub series: Option<(SeriesId, IntegralParams)>,
}

fn validation(msg: impl std::fmt::Display) -> CliError {
    CliError::Validation(msg.to_string())
}

fn parse_weight(label: &str, text: &str) -> Result<WeightConstant, CliError> {
    let scalar = parse_scalar(text)
        .map_err(|e| validation(format!("{label}: {e}")))?;
    WeightConstant::try_from_scalar(&scalar).map_err(|_| {
        validation(format!(
            "{label}: `{text}` is not of the weight-constant form ±rational·z^k"
        ))
    })
}

impl SymmetryDocument {
    /// Parses a TOML document.
    pub fn from_toml(text: &str) -> Result<SymmetryDocument, CliError> {
        toml::from_str(text).map_err(|e| validation(format!("document parse error: {e}")))
    }

    /// Serializes the document back to TOML.
    pub fn to_toml(&self) -> Result<String, CliError> {
        toml::to_string_pretty(self)
            .map_err(|e| CliError::Internal(format!("document serialization failed: {e}")))
    }

    /// Validates the document and constructs the described action.
    pub fn resolve(&self) -> Result<ResolvedSymmetry, CliError> {
        match self.family {
            Family::Series => self.resolve_series(),
            Family::Type1 => self.resolve_type1(),
            Family::Type2 => self.resolve_type2(),
            Family::Generic => self.resolve_generic(),
        }
    }

    /// The optional conjugating automorphism.
    pub fn automorphism_spec(&self) -> Result<Option<AutomorphismSpec>, CliError> {
        let Some(doc) = &self.automorphism else {
            return Ok(None);
        };
        let [k, m, l, n] = doc.sigma;
        let sigma = Sl2z::new(k, m, l, n)
            .map_err(|e| validation(format!("automorphism.sigma: {e}")))?;
        let mu = parse_scalar(&doc.mu)
            .map_err(|e| validation(format!("automorphism.mu: {e}")))?;
        let nu = parse_scalar(&doc.nu)
            .map_err(|e| validation(format!("automorphism.nu: {e}")))?;
        let spec = AutomorphismSpec::new(sigma, mu, nu)
            .map_err(|e| validation(format!("automorphism: {e}")))?;
        Ok(Some(spec))
    }

    fn reject_sections(&self, allowed: &[&str]) -> Result<(), CliError> {
        let present: &[(&str, bool)] = &[
            ("series", self.series.is_some()),
            ("variant", self.variant.is_some()),
            ("params", self.params.is_some()),
            ("coefficients", !self.coefficients.is_empty()),
            ("weights", self.weights.is_some()),
            ("signs", self.signs.is_some()),
            ("generic", self.generic.is_some()),
        ];
        for (name, is_present) in present {
            if *is_present && !allowed.contains(name) {
                return Err(validation(format!(
                    "section `{name}` does not apply to this document family"
                )));
            }
        }
        Ok(())
    }

    fn resolve_series(&self) -> Result<ResolvedSymmetry, CliError> {
        self.reject_sections(&["series", "variant", "params", "coefficients"])?;
        let id_text = self
            .series
            .as_deref()
            .ok_or_else(|| validation("a series document requires a `series` id"))?;
        let id: SeriesId = id_text.parse().map_err(validation)?;
        if !id.is_integral() {
            return Err(validation(format!(
                "`{id}` names a classical family; use family = \"type1\", \"type2\", or \"generic\""
            )));
        }
        let sig = id.signature().expect("integral series have a signature");
        let pd = self
            .params
            .as_ref()
            .ok_or_else(|| validation("a series document requires a [params] table"))?;
        let params = IntegralParams::new(
            pd.r,
            pd.s,
            pd.u,
            pd.v,
            pd.m,
            pd.l.unwrap_or(sig.l),
            pd.n.unwrap_or(sig.n),
        )
        .map_err(validation)?;
        let mut coeffs = CoefficientSet::new();
        for (name, text) in &self.coefficients {
            let value = parse_scalar(text)
                .map_err(|e| validation(format!("coefficient `{name}`: {e}")))?;
            coeffs.set(name, value);
        }
        let action = match self.variant.as_deref() {
            None => make_nongeneric(id, &params, &coeffs).map_err(validation)?,
            Some(text) => {
                let variant: WeightVariant = text.parse().map_err(validation)?;
                make_nongeneric_with_variant(id, &params, variant, &coeffs)
                    .map_err(validation)?
            }
        };
        Ok(ResolvedSymmetry { action, series: Some((id, params)) })
    }

    fn resolve_type1(&self) -> Result<ResolvedSymmetry, CliError> {
        self.reject_sections(&["weights"])?;
        let w = self
            .weights
            .as_ref()
            .ok_or_else(|| validation("a type1 document requires a [weights] table"))?;
        let alpha = parse_weight("weights.alpha", &w.alpha)?;
        let beta = parse_weight("weights.beta", &w.beta)?;
        Ok(ResolvedSymmetry { action: make_type1(&alpha, &beta), series: None })
    }

    fn resolve_type2(&self) -> Result<ResolvedSymmetry, CliError> {
        self.reject_sections(&["signs"])?;
        let s = self
            .signs
            .as_ref()
            .ok_or_else(|| validation("a type2 document requires a [signs] table"))?;
        let ex = Sign::from_int(s.epsilon_x)
            .ok_or_else(|| validation("signs.epsilon_x must be 1 or -1"))?;
        let ey = Sign::from_int(s.epsilon_y)
            .ok_or_else(|| validation("signs.epsilon_y must be 1 or -1"))?;
        Ok(ResolvedSymmetry { action: make_type2(ex, ey), series: None })
    }

    fn resolve_generic(&self) -> Result<ResolvedSymmetry, CliError> {
        self.reject_sections(&["generic"])?;
        let g = self
            .generic
            .as_ref()
            .ok_or_else(|| validation("a generic document requires a [generic] table"))?;
        let alpha = parse_weight("generic.alpha", &g.alpha)?;
        let beta = parse_weight("generic.beta", &g.beta)?;
        let a = parse_scalar(&g.a)
            .map_err(|e| validation(format!("generic.a: {e}")))?;
        let action = make_generic(g.u, g.v, &alpha, &beta, &a).map_err(validation)?;
        Ok(ResolvedSymmetry { action, series: None })
    }
}

/// The two weight pairs of an orbit query, as exact scalar strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitDocument {
    pub w1: WeightsDoc,
    pub w2: WeightsDoc,
}

impl OrbitDocument {
    /// Parses a TOML orbit query.
    pub fn from_toml(text: &str) -> Result<OrbitDocument, CliError> {
        toml::from_str(text).map_err(|e| validation(format!("document parse error: {e}")))
    }

    /// Serializes the query back to TOML.
    pub fn to_toml(&self) -> Result<String, CliError> {
        toml::to_string_pretty(self)
            .map_err(|e| CliError::Internal(format!("document serialization failed: {e}")))
    }

    /// Parses both weight pairs.
    pub fn resolve(&self) -> Result<(qsym_core::WeightPair, qsym_core::WeightPair), CliError> {
        let w1 = qsym_core::WeightPair::new(
            parse_weight("w1.alpha", &self.w1.alpha)?,
            parse_weight("w1.beta", &self.w1.beta)?,
        );
        let w2 = qsym_core::WeightPair::new(
            parse_weight("w2.alpha", &self.w2.alpha)?,
            parse_weight("w2.beta", &self.w2.beta)?,
        );
        Ok((w1, w2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_documents_round_trip() {
        let text = r#"
family = "series"
series = "D1G1E1F3"

[params]
r = 0
s = 1
u = -1
v = 0
m = 0

[coefficients]
c0 = "1"
c2 = "(1 - z^4)/(z^2)"
"#;
        let doc = SymmetryDocument::from_toml(text).unwrap();
        let reparsed = SymmetryDocument::from_toml(&doc.to_toml().unwrap()).unwrap();
        assert_eq!(doc, reparsed);
        let resolved = doc.resolve().unwrap();
        assert!(resolved.series.is_some());
    }

    #[test]
    fn family_sections_are_checked() {
        // A type2 document must not carry series parameters.
        let text = r#"
family = "type2"

[signs]
epsilon_x = 1
epsilon_y = -1

[params]
r = 1
s = 1
u = 0
v = 0
"#;
        let doc = SymmetryDocument::from_toml(text).unwrap();
        let err = doc.resolve().unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }

    #[test]
    fn validation_surfaces_core_errors() {
        // r = s = 0 is rejected by the parameter validator.
        let text = r#"
family = "series"
series = "D1G1E1F3"

[params]
r = 0
s = 0
u = -1
v = 0
"#;
        let doc = SymmetryDocument::from_toml(text).unwrap();
        let err = doc.resolve().unwrap_err();
        let CliError::Validation(msg) = err else {
            panic!("expected a validation error");
        };
        assert!(msg.contains("(r, s)"), "message should cite the (r,s) constraint: {msg}");
    }
}
