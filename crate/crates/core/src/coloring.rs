//! Total-coloring certificates and the interval-total verifier.
//!
//! A [`TotalColoring`] declares a color count `t` and assigns an integer
//! color to every vertex and every edge. It is an interval total
//! `t`-coloring when
//!
//! * (a) adjacent vertices differ,
//! * (b) edges sharing an endpoint differ,
//! * (c) no vertex shares a color with an incident edge,
//! * (d) the palette `S[v]` (the vertex color plus its incident edge colors)
//!   of every vertex is exactly `deg(v) + 1` consecutive integers,
//! * (e) every color in `1..=t` is used, and
//! * (f) every color lies in `1..=t`.
//!
//! The verifier reports every violated clause rather than stopping at the
//! first one.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};

/// Colors are 1-based. Signed so adversarial certificates with zero or
/// negative entries can be reported instead of rejected at parse time.
pub type Color = i64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {got} vertex colors, graph has {expected} vertices")]
    VertexLengthMismatch { expected: usize, got: usize },
    #[error("coloring has {got} edge colors, graph has {expected} edges")]
    EdgeLengthMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("continuity precondition failed: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalColoring {
    pub t: Color,
    pub vertex_colors: Vec<Color>,
    pub edge_colors: Vec<Color>,
}

/// A graph bundled with a coloring of it; the unit that gets serialized,
/// verified and passed between tools.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: Graph,
    #[serde(flatten)]
    pub coloring: TotalColoring,
}

impl Certificate {
    pub fn verify(&self) -> Result<VerifyOutcome, ColoringError> {
        verify_interval_total(&self.graph, &self.coloring)
    }

    pub fn t(&self) -> Color {
        self.coloring.t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// One violated clause of the certificate definition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum Violation {
    ProperVertex {
        edge: EdgeId,
        u: VertexId,
        v: VertexId,
        color: Color,
    },
    ProperEdge {
        vertex: VertexId,
        edges: [EdgeId; 2],
        color: Color,
    },
    Incidence {
        vertex: VertexId,
        edge: EdgeId,
        color: Color,
    },
    PaletteInterval {
        vertex: VertexId,
        palette: Vec<Color>,
        expected_size: usize,
    },
    ColorUnused {
        color: Color,
    },
    ColorOutOfRange {
        element: Element,
        color: Color,
    },
}

impl Violation {
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::ProperVertex { .. } => "proper-vertex",
            Violation::ProperEdge { .. } => "proper-edge",
            Violation::Incidence { .. } => "incidence",
            Violation::PaletteInterval { .. } => "palette-interval",
            Violation::ColorUnused { .. } => "color-unused",
            Violation::ColorOutOfRange { .. } => "color-out-of-range",
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::ProperVertex { edge, u, v, color } => write!(
                f,
                "proper-vertex: adjacent vertices {u} and {v} (edge {edge}) both colored {color}"
            ),
            Violation::ProperEdge {
                vertex,
                edges: [a, b],
                color,
            } => write!(
                f,
                "proper-edge: edges {a} and {b} at vertex {vertex} both colored {color}"
            ),
            Violation::Incidence {
                vertex,
                edge,
                color,
            } => write!(
                f,
                "incidence: vertex {vertex} and incident edge {edge} both colored {color}"
            ),
            Violation::PaletteInterval {
                vertex,
                palette,
                expected_size,
            } => write!(
                f,
                "palette-interval: vertex {vertex} palette {palette:?} is not {expected_size} consecutive colors"
            ),
            Violation::ColorUnused { color } => write!(f, "color-unused: color {color} never appears"),
            Violation::ColorOutOfRange { element, color } => {
                write!(f, "color-out-of-range: {element:?} colored {color}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub valid: bool,
    pub failures: Vec<Violation>,
}

impl VerifyOutcome {
    pub fn from_failures(failures: Vec<Violation>) -> Self {
        VerifyOutcome {
            valid: failures.is_empty(),
            failures,
        }
    }

    pub fn has_clause(&self, clause: &str) -> bool {
        self.failures.iter().any(|f| f.clause() == clause)
    }
}

/// Palette of one vertex with its interval diagnosis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexPalette {
    pub vertex: VertexId,
    pub colors: Vec<Color>,
    pub is_interval: bool,
    pub expected_span: usize,
}

pub type PaletteReport = Vec<VertexPalette>;

fn check_lengths(g: &Graph, c: &TotalColoring) -> Result<(), ColoringError> {
    if c.vertex_colors.len() != g.vertex_count() {
        return Err(ColoringError::VertexLengthMismatch {
            expected: g.vertex_count(),
            got: c.vertex_colors.len(),
        });
    }
    if c.edge_colors.len() != g.edge_count() {
        return Err(ColoringError::EdgeLengthMismatch {
            expected: g.edge_count(),
            got: c.edge_colors.len(),
        });
    }
    Ok(())
}

/// `S[v] = {c(v)} ∪ {c(e) : e incident to v}`.
pub fn palette(g: &Graph, c: &TotalColoring, v: VertexId) -> Result<BTreeSet<Color>, ColoringError> {
    check_lengths(g, c)?;
    if v >= g.vertex_count() {
        return Err(ColoringError::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(palette_unchecked(g, c, v))
}

fn palette_unchecked(g: &Graph, c: &TotalColoring, v: VertexId) -> BTreeSet<Color> {
    std::iter::once(c.vertex_colors[v])
        .chain(g.neighbors(v).iter().map(|&(_, e)| c.edge_colors[e]))
        .collect()
}

/// `true` iff `set` is exactly `size` consecutive integers.
fn is_interval_of(set: &BTreeSet<Color>, size: usize) -> bool {
    match (set.first(), set.last()) {
        (Some(&lo), Some(&hi)) => set.len() == size && (hi - lo) as usize + 1 == size,
        _ => size == 0,
    }
}

pub fn palette_report(g: &Graph, c: &TotalColoring) -> Result<PaletteReport, ColoringError> {
    check_lengths(g, c)?;
    Ok((0..g.vertex_count())
        .map(|v| {
            let set = palette_unchecked(g, c, v);
            let expected_span = g.neighbors(v).len() + 1;
            VertexPalette {
                vertex: v,
                is_interval: is_interval_of(&set, expected_span),
                colors: set.into_iter().collect(),
                expected_span,
            }
        })
        .collect())
}

/// Clauses (a), (b), (c).
fn properness_failures(g: &Graph, c: &TotalColoring, out: &mut Vec<Violation>) {
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if c.vertex_colors[u] == c.vertex_colors[v] {
            out.push(Violation::ProperVertex {
                edge: e,
                u,
                v,
                color: c.vertex_colors[u],
            });
        }
    }
    for v in 0..g.vertex_count() {
        let star = g.neighbors(v);
        for (i, &(_, a)) in star.iter().enumerate() {
            for &(_, b) in &star[i + 1..] {
                if c.edge_colors[a] == c.edge_colors[b] {
                    out.push(Violation::ProperEdge {
                        vertex: v,
                        edges: [a.min(b), a.max(b)],
                        color: c.edge_colors[a],
                    });
                }
            }
            if c.edge_colors[a] == c.vertex_colors[v] {
                out.push(Violation::Incidence {
                    vertex: v,
                    edge: a,
                    color: c.vertex_colors[v],
                });
            }
        }
    }
}

fn range_failures(c: &TotalColoring, out: &mut Vec<Violation>) {
    let vertices = c
        .vertex_colors
        .iter()
        .enumerate()
        .map(|(v, &x)| (Element::Vertex(v), x));
    let edges = c
        .edge_colors
        .iter()
        .enumerate()
        .map(|(e, &x)| (Element::Edge(e), x));
    for (element, color) in vertices.chain(edges) {
        if color < 1 || color > c.t {
            out.push(Violation::ColorOutOfRange { element, color });
        }
    }
}

fn unused_colors(c: &TotalColoring) -> Vec<Color> {
    let used: BTreeSet<Color> = c
        .vertex_colors
        .iter()
        .chain(&c.edge_colors)
        .copied()
        .collect();
    (1..=c.t).filter(|x| !used.contains(x)).collect()
}

/// Check all six clauses of an interval total `t`-coloring.
pub fn verify_interval_total(g: &Graph, c: &TotalColoring) -> Result<VerifyOutcome, ColoringError> {
    check_lengths(g, c)?;
    let mut failures = Vec::new();
    properness_failures(g, c, &mut failures);
    for p in palette_report(g, c)? {
        if !p.is_interval {
            failures.push(Violation::PaletteInterval {
                vertex: p.vertex,
                palette: p.colors,
                expected_size: p.expected_span,
            });
        }
    }
    failures.extend(unused_colors(c).into_iter().map(|color| Violation::ColorUnused { color }));
    range_failures(c, &mut failures);
    Ok(VerifyOutcome::from_failures(failures))
}

/// Plain total coloring: clauses (a), (b), (c) only.
pub fn verify_total_proper(g: &Graph, c: &TotalColoring) -> Result<VerifyOutcome, ColoringError> {
    check_lengths(g, c)?;
    let mut failures = Vec::new();
    properness_failures(g, c, &mut failures);
    Ok(VerifyOutcome::from_failures(failures))
}

/// Mirror every color `x` to `t + 1 - x`.
pub fn invert(c: &TotalColoring) -> TotalColoring {
    let flip = |x: &Color| c.t + 1 - x;
    TotalColoring {
        t: c.t,
        vertex_colors: c.vertex_colors.iter().map(flip).collect(),
        edge_colors: c.edge_colors.iter().map(flip).collect(),
    }
}

/// On a connected graph, a coloring satisfying (a)-(d) whose smallest color
/// is 1 and largest is `t` uses every color in between. Checks the
/// preconditions, then reports whether every color is in fact used.
pub fn check_continuity(g: &Graph, c: &TotalColoring) -> Result<bool, ColoringError> {
    check_lengths(g, c)?;
    if !g.is_connected() {
        return Err(ColoringError::Precondition("graph is disconnected".into()));
    }
    let mut failures = Vec::new();
    properness_failures(g, c, &mut failures);
    for p in palette_report(g, c)? {
        if !p.is_interval {
            failures.push(Violation::PaletteInterval {
                vertex: p.vertex,
                palette: p.colors,
                expected_size: p.expected_span,
            });
        }
    }
    if let Some(first) = failures.first() {
        return Err(ColoringError::Precondition(format!(
            "{} violation(s), first: {first}",
            failures.len()
        )));
    }
    let all = c.vertex_colors.iter().chain(&c.edge_colors);
    let lo = all.clone().min().copied();
    let hi = all.max().copied();
    if lo != Some(1) {
        return Err(ColoringError::Precondition(format!(
            "minimum color is {lo:?}, expected 1"
        )));
    }
    if hi != Some(c.t) {
        return Err(ColoringError::Precondition(format!(
            "maximum color is {hi:?}, expected t = {}",
            c.t
        )));
    }
    Ok(unused_colors(c).is_empty())
}
