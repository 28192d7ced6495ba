//! Reduction from interval total colorings of `G` to interval edge colorings
//! of a bipartite auxiliary graph `H`.
//!
//! `H` has vertices `u_1..u_n` (indices `0..n`) and `w_1..w_n` (indices
//! `n..2n`). Each vertex `v_i` of `G` contributes a diagonal edge `u_i w_i`
//! and each edge `v_i v_j` contributes the mirror pair `u_i w_j`, `u_j w_i`.
//! Coloring the diagonal with `c(v_i)` and both mirrors with `c(v_i v_j)`
//! turns the palette of `v_i` into the edge-color set at `u_i` and at `w_i`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{verify_interval_total, Color, ColoringError, TotalColoring, VerifyOutcome};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("input certificate is not an interval total coloring ({} violation(s))", .0.failures.len())]
    InvalidCertificate(VerifyOutcome),
    #[error("edge coloring has {got} colors, graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph is not an auxiliary graph of the expected shape")]
    NotAuxiliary,
    #[error("mirror edges of G-edge ({i}, {j}) carry different colors {a} and {b}")]
    Asymmetric {
        i: VertexId,
        j: VertexId,
        a: Color,
        b: Color,
    },
}

/// Where an edge of `H` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// `u_i w_i`
    Diag(VertexId),
    /// one of `u_i w_j`, `u_j w_i` for the `G`-edge `(i, j)`, `i < j`
    Mirror([VertexId; 2]),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryGraph {
    #[serde(flatten)]
    pub h: Graph,
    /// Parallel to `h.edges()`.
    pub provenance: Vec<Provenance>,
}

impl AuxiliaryGraph {
    /// Order of the source graph.
    pub fn source_order(&self) -> usize {
        self.h.vertex_count() / 2
    }

    pub fn u(&self, i: VertexId) -> VertexId {
        i
    }

    pub fn w(&self, i: VertexId) -> VertexId {
        self.source_order() + i
    }

    /// `true` for `u`-side vertices.
    pub fn sides(&self) -> Vec<bool> {
        let n = self.source_order();
        (0..2 * n).map(|v| v < n).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub t: Color,
    pub colors: Vec<Color>,
}

/// Diagonals first, then `u_i w_j`, `u_j w_i` for each `G`-edge in order.
pub fn build_auxiliary(g: &Graph) -> AuxiliaryGraph {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(n + 2 * g.edge_count());
    let mut provenance = Vec::with_capacity(edges.capacity());
    for i in 0..n {
        edges.push((i, n + i));
        provenance.push(Provenance::Diag(i));
    }
    for &(i, j) in g.edges() {
        edges.push((i, n + j));
        edges.push((j, n + i));
        provenance.push(Provenance::Mirror([i, j]));
        provenance.push(Provenance::Mirror([i, j]));
    }
    let h = Graph::new(2 * n, edges).expect("auxiliary graph of a simple graph is simple");
    AuxiliaryGraph { h, provenance }
}

/// Lift a verified interval total coloring of `g` to `H`.
pub fn lift_coloring(g: &Graph, c: &TotalColoring) -> Result<(AuxiliaryGraph, EdgeColoring), TransformError> {
    let outcome = verify_interval_total(g, c)?;
    if !outcome.valid {
        return Err(TransformError::InvalidCertificate(outcome));
    }
    let aux = build_auxiliary(g);
    let mut colors = c.vertex_colors.clone();
    for &e in &c.edge_colors {
        colors.push(e);
        colors.push(e);
    }
    Ok((aux, EdgeColoring { t: c.t, colors }))
}

/// Recover a total coloring of `g` from an edge coloring of its auxiliary
/// graph. Only colorings giving both mirrors of every edge the same color
/// have a preimage; anything else is rejected.
pub fn unlift(g: &Graph, aux: &AuxiliaryGraph, ec: &EdgeColoring) -> Result<TotalColoring, TransformError> {
    let n = g.vertex_count();
    if *aux != build_auxiliary(g) {
        return Err(TransformError::NotAuxiliary);
    }
    if ec.colors.len() != aux.h.edge_count() {
        return Err(TransformError::LengthMismatch {
            expected: aux.h.edge_count(),
            got: ec.colors.len(),
        });
    }
    let (diag, mirrors) = ec.colors.split_at(n);
    let mut edge_colors = Vec::with_capacity(g.edge_count());
    for (&(i, j), pair) in g.edges().iter().zip(mirrors.chunks(2)) {
        if pair[0] != pair[1] {
            return Err(TransformError::Asymmetric {
                i,
                j,
                a: pair[0],
                b: pair[1],
            });
        }
        edge_colors.push(pair[0]);
    }
    Ok(TotalColoring {
        t: ec.t,
        vertex_colors: diag.to_vec(),
        edge_colors,
    })
}

/// Interval edge `t`-coloring check: proper, each vertex sees `deg(v)`
/// consecutive colors, every color of `1..=t` is used and none is outside.
///
/// Failures reuse [`crate::coloring::Violation`]: `proper-edge`,
/// `palette-interval` (with the edge-color set as the palette),
/// `color-unused` and `color-out-of-range`.
pub fn verify_interval_edge(h: &Graph, ec: &EdgeColoring) -> Result<VerifyOutcome, TransformError> {
    use crate::coloring::{Element, Violation};

    if ec.colors.len() != h.edge_count() {
        return Err(TransformError::LengthMismatch {
            expected: h.edge_count(),
            got: ec.colors.len(),
        });
    }
    let mut failures = Vec::new();
    for v in 0..h.vertex_count() {
        let star = h.neighbors(v);
        for (k, &(_, a)) in star.iter().enumerate() {
            for &(_, b) in &star[k + 1..] {
                if ec.colors[a] == ec.colors[b] {
                    failures.push(Violation::ProperEdge {
                        vertex: v,
                        edges: [a.min(b), a.max(b)],
                        color: ec.colors[a],
                    });
                }
            }
        }
        let set: BTreeSet<Color> = star.iter().map(|&(_, e)| ec.colors[e]).collect();
        let ok = match (set.first(), set.last()) {
            (Some(&lo), Some(&hi)) => set.len() == star.len() && (hi - lo) as usize + 1 == star.len(),
            _ => true,
        };
        if !ok {
            failures.push(Violation::PaletteInterval {
                vertex: v,
                palette: set.into_iter().collect(),
                expected_size: star.len(),
            });
        }
    }
    let used: BTreeSet<Color> = ec.colors.iter().copied().collect();
    for color in (1..=ec.t).filter(|x| !used.contains(x)) {
        failures.push(Violation::ColorUnused { color });
    }
    for (e, &color) in ec.colors.iter().enumerate() {
        if color < 1 || color > ec.t {
            failures.push(Violation::ColorOutOfRange {
                element: Element::Edge(e as EdgeId),
                color,
            });
        }
    }
    Ok(VerifyOutcome::from_failures(failures))
}
