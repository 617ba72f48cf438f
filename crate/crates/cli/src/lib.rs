//! Command-line front end for q,t-characters: `tchar`, `kl`, `product` and
//! `verify`, with text, JSON and DOT output.

pub mod commands;
pub mod config;
mod error;
pub mod fixtures;
pub mod report;
pub mod verify;

pub use commands::{cmd_kl, cmd_product, cmd_tchar, cmd_verify};
pub use config::{Format, RunConfig, TMode};
pub use error::CliError;
pub use report::{Check, Report, Status};

/// Pretty JSON with keys in sorted order.
pub fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
