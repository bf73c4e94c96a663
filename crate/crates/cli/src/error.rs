use thiserror::Error;

/// Exit code 2 for anything wrong with the input, 3 for failures inside the
/// library. Each carries the error name of the originating module.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{message}")]
    Parse { name: &'static str, message: String },
    #[error("{message}")]
    Engine { name: &'static str, message: String },
}

impl CliError {
    pub fn parse(name: &'static str, message: impl Into<String>) -> Self {
        CliError::Parse {
            name,
            message: message.into(),
        }
    }

    pub fn engine(name: &'static str, message: impl Into<String>) -> Self {
        CliError::Engine {
            name,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Engine { .. } => 3,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CliError::Parse { name, .. } | CliError::Engine { name, .. } => name,
        }
    }
}

impl From<symdisc::polycore::ParseError> for CliError {
    fn from(e: symdisc::polycore::ParseError) -> Self {
        CliError::parse(e.name(), e.to_string())
    }
}

impl From<symdisc::symforms::FormError> for CliError {
    fn from(e: symdisc::symforms::FormError) -> Self {
        CliError::parse(e.name(), e.to_string())
    }
}

impl From<symdisc::engine::EngineError> for CliError {
    fn from(e: symdisc::engine::EngineError) -> Self {
        match e {
            // a malformed form is an input problem
            symdisc::engine::EngineError::Form(f) => f.into(),
            other => CliError::engine(other.name(), other.to_string()),
        }
    }
}

impl From<symdisc::oracle::OracleError> for CliError {
    fn from(e: symdisc::oracle::OracleError) -> Self {
        CliError::engine(e.name(), e.to_string())
    }
}

impl From<symdisc::polycore::PolyError> for CliError {
    fn from(e: symdisc::polycore::PolyError) -> Self {
        CliError::engine(e.name(), e.to_string())
    }
}
