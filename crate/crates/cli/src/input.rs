//! Loading of JSON input files.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use liaison_core::fixtures;
use liaison_core::{IntFn, LinkageClass, NatFn, SubschemeModel};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

/// A class given as a fixture name or a descriptor path, relative paths
/// resolved against `base`.
pub fn load_class(spec: &str, base: Option<&Path>) -> Result<Arc<LinkageClass>, CliError> {
    if let Some(class) = fixtures::by_name(spec) {
        return Ok(class);
    }
    let mut path = PathBuf::from(spec);
    if path.is_relative() {
        if let Some(dir) = base {
            let joined = dir.join(&path);
            if joined.exists() {
                path = joined;
            }
        }
    }
    read_json::<LinkageClass>(&path).map(Arc::new)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    #[serde(default)]
    class: Option<Value>,
    h: i64,
    #[serde(default)]
    theta: Option<IntFn>,
}

/// Loads a model file. The class comes from the file, from `class`, or from
/// both when they agree.
pub fn load_model(
    path: &Path,
    class: Option<&Arc<LinkageClass>>,
) -> Result<SubschemeModel, CliError> {
    let raw: RawModel = read_json(path)?;
    let invalid = |e: String| CliError::Invalid(format!("{}: {e}", path.display()));
    let own = match raw.class {
        None => None,
        Some(Value::String(spec)) => Some(load_class(&spec, path.parent())?),
        Some(inline) => Some(Arc::new(
            serde_json::from_value::<LinkageClass>(inline).map_err(|e| invalid(e.to_string()))?,
        )),
    };
    let class = match (own, class) {
        (Some(a), Some(b)) if !a.same_class(b) => {
            return Err(invalid("model class differs from --class".into()))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b.clone(),
        (None, None) => {
            return Err(invalid(
                "no class given in the model file or with --class".into(),
            ))
        }
    };
    let theta = NatFn::new(raw.theta.unwrap_or_default()).map_err(|e| invalid(e.to_string()))?;
    SubschemeModel::new(class, raw.h, theta).map_err(|e| invalid(e.to_string()))
}
