use crate::CliError;
use cartan_core::parse_cartan;
use qt_characters::{Budget, QtCharacters};
use std::sync::Arc;
use yt_algebra::Algebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TMode {
    Deformed,
    /// Specialize `t = 1` on output.
    Classical,
}

#[derive(Clone)]
pub struct RunConfig {
    pub cartan_source: String,
    pub budget: Budget,
    pub format: Format,
    pub t_mode: TMode,
    algebra: Arc<Algebra>,
}

impl RunConfig {
    pub fn new(cartan: &str, budget: Budget, format: Format, t_mode: TMode) -> Result<Self, CliError> {
        let c = parse_cartan(cartan)?;
        Ok(RunConfig {
            cartan_source: cartan.trim().to_string(),
            budget,
            format,
            t_mode,
            algebra: Arc::new(Algebra::from_cartan(c)),
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn engine(&self) -> QtCharacters {
        QtCharacters::new(self.algebra.clone(), self.budget)
    }

    pub fn classical(&self) -> bool {
        self.t_mode == TMode::Classical
    }
}
