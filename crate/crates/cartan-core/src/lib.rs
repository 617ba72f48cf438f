//! Finite-type Cartan data: validation, symmetrizers, the quantized matrices
//! `C(z)` and `B(z) = D(z)C(z)`, and coefficients of `C(z)^{-1}` expanded in
//! descending powers of `z`.

mod cartan;
pub mod laurent;

pub use cartan::{named_matrix, validate_cartan, CartanMatrix, InvCartanSeries, SymmetrizedCartan};
pub use laurent::Laurent;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("not a Cartan matrix: {0}")]
    NotCartan(String),
    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("bad Cartan JSON: {0}")]
    BadJson(String),
}

/// Parses `{"type":"B2"}`, `{"matrix":[[2,-1],[-1,2]]}` or a bare type name.
pub fn parse_cartan(spec: &str) -> Result<SymmetrizedCartan, CartanError> {
    let s = spec.trim();
    if !s.starts_with('{') {
        return SymmetrizedCartan::named(s);
    }
    let v: serde_json::Value =
        serde_json::from_str(s).map_err(|e| CartanError::BadJson(e.to_string()))?;
    if let Some(name) = v.get("type").and_then(|t| t.as_str()) {
        return SymmetrizedCartan::named(name);
    }
    let rows = v
        .get("matrix")
        .and_then(|m| m.as_array())
        .ok_or_else(|| CartanError::BadJson("expected `type` or `matrix`".into()))?;
    let mut m = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| CartanError::BadJson("matrix rows must be arrays".into()))?;
        let parsed: Option<Vec<i64>> = row.iter().map(|x| x.as_i64()).collect();
        m.push(parsed.ok_or_else(|| CartanError::BadJson("entries must be integers".into()))?);
    }
    validate_cartan(&m)
}
