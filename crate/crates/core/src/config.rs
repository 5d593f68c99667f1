//! Code configuration files (TOML or JSON) and the textual vector format.
//!
//! ```toml
//! curve = "hermitian"
//! q = 4
//! gamma = 15
//! # n = 64          # optional, defaults to every affine place
//! [field]           # optional for hermitian; must then be gf(q^2)
//! p = 2
//! m = 4
//! ```
//!
//! Vectors of field elements are written as comma-separated decimal encodings.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ag_code::{CodeError, CodeSpec, PlaceSelection};
use crate::finite_field::{FieldElement, FieldError, FieldSpec};
use crate::function_field::{prime_power, Backend, FunctionFieldError};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("reading {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid TOML: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("invalid element '{token}': {reason}")]
    Element { token: String, reason: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Curve(#[from] FunctionFieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveName {
    Rational,
    Hermitian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub p: u32,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeConfig {
    pub curve: CurveName,
    #[serde(default)]
    pub q: Option<u32>,
    #[serde(default)]
    pub field: Option<FieldConfig>,
    pub gamma: i64,
    #[serde(default)]
    pub n: Option<usize>,
}

impl CodeConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        Ok(toml::from_str(text)?)
    }

    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Reads a file, choosing JSON for a `.json` extension and TOML otherwise.
    pub fn from_path(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
            Self::from_json(&text)
        } else {
            Self::from_toml(&text)
        }
    }

    pub fn backend(&self) -> Result<Backend, ConfigError> {
        match self.curve {
            CurveName::Rational => {
                let field = match (self.field, self.q) {
                    (Some(fc), q) => {
                        let f = FieldSpec::new(fc.p, fc.m)?;
                        if q.is_some_and(|q| q != f.order()) {
                            return Err(ConfigError::Invalid(format!(
                                "q = {} does not match field gf({}^{})",
                                q.unwrap(),
                                fc.p,
                                fc.m
                            )));
                        }
                        f
                    }
                    (None, Some(q)) => {
                        let (p, m) = prime_power(q)
                            .ok_or_else(|| ConfigError::Invalid(format!("q = {q} is not a prime power")))?;
                        FieldSpec::new(p, m)?
                    }
                    (None, None) => return Err(ConfigError::Invalid("rational curve needs `field` or `q`".into())),
                };
                Ok(Backend::rational(field))
            }
            CurveName::Hermitian => {
                let q = self.q.ok_or_else(|| ConfigError::Invalid("hermitian curve needs `q`".into()))?;
                let b = Backend::hermitian(q)?;
                if let Some(fc) = self.field {
                    let f = b.field();
                    if (fc.p, fc.m) != (f.characteristic(), f.degree()) {
                        return Err(ConfigError::Invalid(format!(
                            "hermitian({q}) lives over {}, config declares gf({}^{})",
                            f.name(),
                            fc.p,
                            fc.m
                        )));
                    }
                }
                Ok(b)
            }
        }
    }

    pub fn build(&self) -> Result<CodeSpec, ConfigError> {
        let selection = match self.n {
            Some(n) => PlaceSelection::FirstN(n),
            None => PlaceSelection::All,
        };
        Ok(CodeSpec::new(self.backend()?, selection, self.gamma)?)
    }
}

pub fn parse_vector(field: &FieldSpec, text: &str) -> Result<Vec<FieldElement>, ConfigError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let v: u64 = t.parse().map_err(|e: std::num::ParseIntError| ConfigError::Element {
                token: t.into(),
                reason: e.to_string(),
            })?;
            field.elem(v).map_err(|e| ConfigError::Element { token: t.into(), reason: e.to_string() })
        })
        .collect()
}

pub fn format_vector(v: &[FieldElement]) -> String {
    v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_toml() {
        let cfg = CodeConfig::from_toml("curve = \"hermitian\"\nq = 4\ngamma = 15\n[field]\np = 2\nm = 4\n").unwrap();
        let code = cfg.build().unwrap();
        assert_eq!((code.n(), code.k()), (64, 10));
    }

    #[test]
    fn rational_json_with_length() {
        let cfg = CodeConfig::from_json(r#"{"curve":"rational","field":{"p":2,"m":3},"gamma":2,"n":7}"#).unwrap();
        let code = cfg.build().unwrap();
        assert_eq!((code.n(), code.k(), code.dstar()), (7, 3, 5));
    }

    #[test]
    fn rational_from_q() {
        let cfg = CodeConfig::from_toml("curve = \"rational\"\nq = 16\ngamma = 4\n").unwrap();
        assert_eq!(cfg.build().unwrap().n(), 16);
    }

    #[test]
    fn inconsistent_configs() {
        let bad = CodeConfig::from_toml("curve = \"hermitian\"\nq = 4\ngamma = 15\n[field]\np = 2\nm = 2\n").unwrap();
        assert!(matches!(bad.build(), Err(ConfigError::Invalid(_))));
        let bad = CodeConfig::from_toml("curve = \"hermitian\"\ngamma = 15\n").unwrap();
        assert!(matches!(bad.build(), Err(ConfigError::Invalid(_))));
        assert!(CodeConfig::from_toml("curve = \"suzuki\"\nq = 8\ngamma = 3\n").is_err());
        let bad = CodeConfig::from_toml("curve = \"rational\"\nq = 16\ngamma = 20\n").unwrap();
        assert!(matches!(bad.build(), Err(ConfigError::Code(CodeError::GammaOutOfRange { .. }))));
    }

    #[test]
    fn vectors() {
        let f = FieldSpec::new(2, 4).unwrap();
        let v = parse_vector(&f, " 3, 0,15\n").unwrap();
        assert_eq!(format_vector(&v), "3,0,15");
        assert!(matches!(parse_vector(&f, "16"), Err(ConfigError::Element { .. })));
        assert!(matches!(parse_vector(&f, "a"), Err(ConfigError::Element { .. })));
    }
}
