use std::fmt;

use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Core(confcohom::Error),
    /// Malformed command-line value or space file.
    Parse(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Core(e) => match e {
                confcohom::Error::Hypothesis { .. } => 2,
                confcohom::Error::InvalidInput(_) => 3,
                confcohom::Error::Consistency(_) => 4,
                confcohom::Error::CapExceeded { .. } => 5,
            },
        }
    }

    pub fn to_json(&self) -> Value {
        let body = match self {
            CliError::Parse(msg) => json!({"kind": "parse", "message": msg}),
            CliError::Core(e) => match e {
                confcohom::Error::Hypothesis { space, flag } => {
                    json!({"kind": "hypothesis", "space": space, "flag": flag, "message": e.to_string()})
                }
                confcohom::Error::InvalidInput(_) => json!({"kind": "parse", "message": e.to_string()}),
                confcohom::Error::Consistency(_) => json!({"kind": "consistency", "message": e.to_string()}),
                confcohom::Error::CapExceeded { limit, .. } => {
                    json!({"kind": "cap_exceeded", "limit": limit, "message": e.to_string()})
                }
            },
        };
        json!({ "error": body })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Parse(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<confcohom::Error> for CliError {
    fn from(e: confcohom::Error) -> Self {
        CliError::Core(e)
    }
}
