//! The JSON code description consumed by the CLI and the browser demo, and
//! the plain-text codeword format.
//!
//! A config is a single JSON document; unknown keys are rejected. All field
//! elements appear as canonical integers. Example:
//!
//! ```json
//! {
//!   "field": {"p": 2, "m": 6},
//!   "curve": {"A": [0, 1, 1], "B": [0, 0, 0, 0, 0, 0, 0, 0, 0, 1]},
//!   "orientation": "y",
//!   "space": {"complete_m": 50},
//!   "fibres": "all"
//! }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, FibreSelection, GonalityPolicy, LrcCode};
use crate::curve::{CurveError, Orientation, SepCurve};
use crate::funcspace::{FuncSpaceError, VSpec};
use crate::galois::{Field, FieldElement, FieldError, UniPoly};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Space(#[from] FuncSpaceError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("codeword text: {0}")]
    Codeword(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldConfig {
    pub p: u64,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveConfig {
    #[serde(rename = "A")]
    pub a: Vec<u64>,
    #[serde(rename = "B")]
    pub b: Vec<u64>,
}

#[derive(Copy, Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub enum OrientationConfig {
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "x")]
    X,
}

impl From<OrientationConfig> for Orientation {
    fn from(o: OrientationConfig) -> Orientation {
        match o {
            OrientationConfig::Y => Orientation::Y,
            OrientationConfig::X => Orientation::X,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceConfig {
    Complete { complete_m: u64 },
    Explicit { epsilons: Vec<u8>, ells: Vec<u64> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FibreConfig {
    Keyword(String),
    Bases(Vec<u64>),
}

impl Default for FibreConfig {
    fn default() -> Self {
        FibreConfig::Keyword("all".into())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeConfig {
    pub field: FieldConfig,
    pub curve: CurveConfig,
    pub orientation: OrientationConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    pub space: SpaceConfig,
    #[serde(default)]
    pub fibres: FibreConfig,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub gonality_overrides: BTreeMap<u64, u64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub assert_weierstrass: bool,
}

/// A built code together with the gonality policy the config asked for.
pub struct BuiltCode {
    pub code: LrcCode,
    pub policy: GonalityPolicy,
}

impl CodeConfig {
    pub fn from_json(text: &str) -> Result<CodeConfig, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialize")
    }

    pub fn build_field(&self) -> Result<Field, ConfigError> {
        Ok(Field::new(self.field.p, self.field.m, self.field.modulus.as_deref())?)
    }

    pub fn build_curve(&self) -> Result<SepCurve, ConfigError> {
        let field = self.build_field()?;
        let a = UniPoly::from_values(&field, &self.curve.a)?;
        let b = UniPoly::from_values(&field, &self.curve.b)?;
        let curve = SepCurve::new(field, a, b)?;
        Ok(if self.assert_weierstrass { curve.with_asserted_semigroup() } else { curve })
    }

    pub fn build_vspec(&self, curve: &SepCurve) -> Result<VSpec, ConfigError> {
        let orientation = self.orientation.into();
        match &self.space {
            SpaceConfig::Complete { complete_m } => {
                Ok(VSpec::complete(curve, orientation, self.r, *complete_m)?)
            }
            SpaceConfig::Explicit { epsilons, ells } => {
                let eps: Vec<bool> = epsilons.iter().map(|&e| e != 0).collect();
                let r = self.r.or(Some(eps.len() as u64));
                Ok(VSpec::new(curve, orientation, r, eps, ells.clone())?)
            }
        }
    }

    pub fn fibre_selection(&self) -> Result<FibreSelection, ConfigError> {
        match &self.fibres {
            FibreConfig::Keyword(word) if word == "all" => Ok(FibreSelection::AllSplit),
            FibreConfig::Keyword(word) => {
                Err(ConfigError::Parse(format!("unknown fibre keyword {word:?}")))
            }
            FibreConfig::Bases(bases) => Ok(FibreSelection::Explicit(bases.clone())),
        }
    }

    pub fn build(&self) -> Result<BuiltCode, ConfigError> {
        let curve = self.build_curve()?;
        let vspec = self.build_vspec(&curve)?;
        let selection = self.fibre_selection()?;
        let code = LrcCode::build(curve, vspec, selection)?;
        let policy = GonalityPolicy {
            overrides: self.gonality_overrides.clone(),
            require_certified: false,
        };
        Ok(BuiltCode { code, policy })
    }
}

/// One line, n space-separated canonical integers, erasures written as "?".
pub fn format_codeword(symbols: &[Option<FieldElement>]) -> String {
    symbols
        .iter()
        .map(|s| match s {
            Some(v) => v.value().to_string(),
            None => "?".into(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_codeword(
    field: &Field,
    line: &str,
) -> Result<Vec<Option<FieldElement>>, ConfigError> {
    line.split_whitespace()
        .map(|tok| {
            if tok == "?" {
                Ok(None)
            } else {
                let value: u64 = tok
                    .parse()
                    .map_err(|_| ConfigError::Codeword(format!("bad symbol {tok:?}")))?;
                Ok(Some(field.element(value)?))
            }
        })
        .collect()
}
