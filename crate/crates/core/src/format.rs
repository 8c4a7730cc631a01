//! The `finite-topology/v1` JSON file format.
//!
//! ```json
//! {"format":"finite-topology/v1","name":"three-point","n":3,"opens":[[],[0],[1,2],[0,1,2]]}
//! ```
//!
//! A file may carry `"subbasis"` instead of `"opens"`, in which case the
//! generated topology is loaded. Every inner array must be strictly
//! ascending. Emission always writes `opens` in canonical order.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::pointset::PointSet;
use crate::topology::FiniteTopology;

pub const FORMAT_TAG: &str = "finite-topology/v1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format tag {0:?}, expected {FORMAT_TAG:?}")]
    Version(String),
    #[error("exactly one of \"opens\" and \"subbasis\" must be present")]
    OpensOrSubbasis,
    #[error("set {0:?} is not strictly ascending")]
    NotAscending(Vec<usize>),
    #[error(transparent)]
    Topology(#[from] Error),
}

#[derive(Serialize, Deserialize)]
struct TopologyFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    opens: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    subbasis: Option<Vec<Vec<usize>>>,
}

/// A topology read from a file, with its optional `name` annotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedTopology {
    pub name: Option<String>,
    pub topology: FiniteTopology,
}

fn to_sets(n: usize, raw: &[Vec<usize>]) -> Result<Vec<PointSet>, FormatError> {
    raw.iter()
        .map(|points| {
            if points.windows(2).any(|w| w[0] >= w[1]) {
                return Err(FormatError::NotAscending(points.clone()));
            }
            PointSet::try_from_points(points.iter().copied(), n)
                .map_err(|point| FormatError::Topology(Error::PointOutOfRange { point, n }))
        })
        .collect()
}

pub fn parse_topology(text: &str) -> Result<NamedTopology, FormatError> {
    let file: TopologyFile = serde_json::from_str(text)?;
    if let Some(tag) = &file.format {
        if tag != FORMAT_TAG {
            return Err(FormatError::Version(tag.clone()));
        }
    }
    let topology = match (&file.opens, &file.subbasis) {
        (Some(opens), None) => FiniteTopology::validate(file.n, &to_sets(file.n, opens)?)?,
        (None, Some(sub)) => FiniteTopology::from_subbasis(file.n, &to_sets(file.n, sub)?)?,
        _ => return Err(FormatError::OpensOrSubbasis),
    };
    Ok(NamedTopology {
        name: file.name,
        topology,
    })
}

/// Canonical single-line JSON for `t`, without a trailing newline.
pub fn emit_topology(t: &FiniteTopology, name: Option<&str>) -> String {
    let file = TopologyFile {
        format: Some(FORMAT_TAG.to_string()),
        name: name.map(str::to_string),
        n: t.n(),
        opens: Some(t.opens().iter().map(|u| u.to_vec()).collect()),
        subbasis: None,
    };
    serde_json::to_string(&file).expect("plain data serializes")
}
