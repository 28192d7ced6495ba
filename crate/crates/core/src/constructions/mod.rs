//! Explicit interval total colorings for specific graph families.
//!
//! Every function here returns a [`Certificate`]; none of them checks its own
//! output. The test suites run each certificate through the verifier, which
//! is the only arbiter of validity.

mod bipartite;
mod complete;
mod cycle;
mod tree;
mod wheel;

pub use bipartite::{
    color_complete_bipartite, color_regular_bipartite, proper_edge_color_regular_bipartite,
};
pub use complete::{color_complete_even_min, color_complete_max, color_complete_spectrum};
pub use cycle::{color_cycle_max, color_cycle_min};
pub use tree::color_tree;
pub use wheel::{
    color_wheel, wheel_min, wheel_plus_four, wheel_plus_one, wheel_plus_three, wheel_plus_two,
    wheel_spectrum,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Certificate, Color, TotalColoring};
use crate::family::{FamilyError, FamilySpec, RegularBipartite};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not a tree")]
    NotATree,
    #[error("no construction covers t = {t} for {family}; supported: {supported} (use `search` for other values)")]
    UncoveredT {
        family: String,
        t: Color,
        supported: String,
    },
    #[error("no perfect matching found while edge-coloring (color {color})")]
    MatchingFailed { color: Color },
}

/// A family instance plus an optional color count; `None` picks the
/// family's default construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRequest {
    pub family: FamilySpec,
    pub t: Option<Color>,
}

/// Output of [`construct`]: the certificate and which construction made it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub family: FamilySpec,
    pub method: String,
    pub certificate: Certificate,
}

/// One line of a construction manifest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub family: FamilySpec,
    pub method: String,
    pub t: Color,
}

impl Construction {
    pub fn manifest_entry(&self) -> ManifestEntry {
        ManifestEntry {
            family: self.family,
            method: self.method.clone(),
            t: self.certificate.coloring.t,
        }
    }
}

fn uncovered(family: &FamilySpec, t: Color, supported: impl Into<String>) -> ConstructionError {
    ConstructionError::UncoveredT {
        family: format!("{family:?}"),
        t,
        supported: supported.into(),
    }
}

/// Pick the construction matching `(family, t)`.
pub fn construct(req: &ConstructionRequest) -> Result<Construction, ConstructionError> {
    let family = req.family;
    family.validate()?;
    let (method, certificate) = match family {
        FamilySpec::Path { .. } | FamilySpec::TreeRandom { .. } => {
            let g = family.generate()?;
            let cert = color_tree(&g)?;
            check_t(&family, req.t, cert.t(), "tree (max degree + 2)")?;
            ("tree", cert)
        }
        FamilySpec::Cycle { n } => {
            let min = if n % 3 == 0 { 3 } else { 4 };
            let max = n as Color + 2;
            match req.t {
                None => ("cycle_min", color_cycle_min(n)?),
                Some(t) if t == min => ("cycle_min", color_cycle_min(n)?),
                Some(t) if t == max => ("cycle_max", color_cycle_max(n)?),
                Some(t) => return Err(uncovered(&family, t, format!("{{{min}, {max}}}"))),
            }
        }
        FamilySpec::Complete { n } => {
            let max = 2 * n as Color - 1;
            match req.t {
                None => ("complete_max", color_complete_max(n)?),
                Some(t) if t == max => ("complete_max", color_complete_max(n)?),
                Some(t) if n % 2 == 0 && t == 3 * n as Color / 2 => {
                    ("complete_even_min", color_complete_even_min(n)?)
                }
                Some(t) => ("complete_spectrum", color_complete_spectrum(n, t)?),
            }
        }
        FamilySpec::CompleteBipartite { m, n } => {
            let cert = if m == n {
                color_regular_bipartite(&family.generate()?)?
            } else {
                color_complete_bipartite(m, n)?
            };
            check_t(&family, req.t, cert.t(), format!("{}", m + n + 1))?;
            let method = if m == n {
                "regular_bipartite"
            } else {
                "complete_bipartite"
            };
            (method, cert)
        }
        FamilySpec::Wheel { n } => {
            let t = req.t.unwrap_or(if n == 4 { 6 } else { n as Color });
            (wheel::method_name(n, t), color_wheel(n, t)?)
        }
        FamilySpec::RegularBipartiteNamed(named) => {
            let g = family.generate()?;
            let cert = color_regular_bipartite(&g)?;
            let r = match named {
                RegularBipartite::BalancedComplete { r } => r,
                RegularBipartite::Cube => 3,
                RegularBipartite::EvenCycle { .. } => 2,
            };
            check_t(&family, req.t, cert.t(), format!("{}", r + 2))?;
            ("regular_bipartite", cert)
        }
    };
    Ok(Construction {
        family,
        method: method.to_string(),
        certificate,
    })
}

fn check_t(
    family: &FamilySpec,
    requested: Option<Color>,
    produced: Color,
    supported: impl Into<String>,
) -> Result<(), ConstructionError> {
    match requested {
        Some(t) if t != produced => Err(uncovered(family, t, supported)),
        _ => Ok(()),
    }
}

/// Color a graph from per-vertex and per-edge rules over its own indices.
pub(crate) fn color_by<FV, FE>(g: Graph, t: Color, vertex: FV, edge: FE) -> Certificate
where
    FV: Fn(VertexId) -> Color,
    FE: Fn(VertexId, VertexId) -> Color,
{
    let coloring = TotalColoring {
        t,
        vertex_colors: (0..g.vertex_count()).map(vertex).collect(),
        edge_colors: g.edges().iter().map(|&(a, b)| edge(a, b)).collect(),
    };
    Certificate { graph: g, coloring }
}

/// Re-index a certificate onto another graph with the same vertex set and
/// the same edges, possibly listed in a different order.
pub(crate) fn transfer(cert: &Certificate, target: Graph) -> Certificate {
    let src = &cert.graph;
    let edge_colors = target
        .edges()
        .iter()
        .map(|&(a, b)| {
            let e = src
                .edge_between(a, b)
                .expect("transfer between graphs with identical edge sets");
            cert.coloring.edge_colors[e]
        })
        .collect();
    Certificate {
        graph: target,
        coloring: TotalColoring {
            t: cert.coloring.t,
            vertex_colors: cert.coloring.vertex_colors.clone(),
            edge_colors,
        },
    }
}
