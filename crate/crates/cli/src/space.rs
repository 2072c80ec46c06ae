use std::path::Path;

use confcohom::confspace::{fixtures, SpaceSpec};
use confcohom::LaurentPoly;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

/// On-disk description of a space. `poincare_c[k]` is `dim H_c^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub name: String,
    pub poincare_c: Vec<u64>,
    pub dim: u32,
    pub i_acyclic: bool,
    pub orientable: bool,
    pub connected: bool,
}

impl SpaceFile {
    pub fn into_spec(self) -> Result<SpaceSpec, CliError> {
        let pc = LaurentPoly::from_coeffs(self.poincare_c.iter().copied());
        SpaceSpec::new(self.name, pc, self.dim, self.i_acyclic, self.orientable, self.connected)
            .map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn from_spec(x: &SpaceSpec) -> Self {
        let top = x.pc.max_exp().unwrap_or(-1);
        let poincare_c = (0..=top)
            .map(|k| u64::try_from(x.pc.coeff(k)).expect("Betti numbers of fixtures fit in u64"))
            .collect();
        SpaceFile {
            name: x.name.clone(),
            poincare_c,
            dim: x.dim,
            i_acyclic: x.i_acyclic,
            orientable: x.orientable,
            connected: x.connected,
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain struct")
    }
}

/// `builtin:<name>` or a path to a JSON space file.
pub fn load(arg: &str) -> Result<SpaceSpec, CliError> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return fixtures::by_name(name).ok_or_else(|| {
            CliError::Parse(format!(
                "unknown built-in space `{name}`; available: {}",
                fixtures::names().join(", ")
            ))
        });
    }
    let text = std::fs::read_to_string(Path::new(arg))
        .map_err(|e| CliError::Parse(format!("cannot read space file {arg}: {e}")))?;
    let file: SpaceFile =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("space file {arg}: {e}")))?;
    file.into_spec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_round_trip() {
        for name in fixtures::names() {
            let x = fixtures::by_name(&name).unwrap();
            let back = SpaceFile::from_spec(&x).into_spec().unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = r#"{"name":"c","poincare_c":[0,0,1],"dim":2,"i_acyclic":true,"orientable":true,"connected":true,"genus":0}"#;
        assert!(serde_json::from_str::<SpaceFile>(text).is_err());
    }
}
