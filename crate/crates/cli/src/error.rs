use cartan_core::CartanError;
use qt_characters::QtError;
use screening::ScreeningError;
use sl2_engine::Sl2Error;
use thiserror::Error;
use yt_algebra::YtError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Budget(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Verification(_) => 5,
        }
    }
}

impl From<YtError> for CliError {
    fn from(e: YtError) -> Self {
        match e {
            YtError::Parse(s) => CliError::Parse(s),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<CartanError> for CliError {
    fn from(e: CartanError) -> Self {
        match e {
            CartanError::BadJson(_) | CartanError::UnknownType(_) => CliError::Parse(e.to_string()),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<Sl2Error> for CliError {
    fn from(e: Sl2Error) -> Self {
        match e {
            Sl2Error::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<ScreeningError> for CliError {
    fn from(e: ScreeningError) -> Self {
        match e {
            ScreeningError::Sl2(inner) => inner.into(),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<QtError> for CliError {
    fn from(e: QtError) -> Self {
        match e {
            QtError::NotDominant(_) => CliError::Domain(e.to_string()),
            QtError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            QtError::Screening(inner) => inner.into(),
            e => CliError::Verification(e.to_string()),
        }
    }
}
