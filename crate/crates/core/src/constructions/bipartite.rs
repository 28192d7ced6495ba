//! Regular bipartite graphs and complete bipartite graphs.

use super::{color_by, ConstructionError};
use crate::coloring::{Certificate, Color, TotalColoring};
use crate::family::FamilySpec;
use crate::graph::{EdgeId, Graph, VertexId};

/// Kuhn's augmenting-path matching restricted to edges still `available`.
/// Left vertices are tried in ascending order and each adjacency list in
/// edge order, so the matching is deterministic.
struct Matcher<'a> {
    g: &'a Graph,
    available: &'a [bool],
    /// matched edge at each right vertex
    right_match: Vec<Option<EdgeId>>,
    visited: Vec<bool>,
}

impl Matcher<'_> {
    fn augment(&mut self, u: VertexId) -> bool {
        for &(w, e) in self.g.neighbors(u) {
            if !self.available[e] || self.visited[w] {
                continue;
            }
            self.visited[w] = true;
            let free = match self.right_match[w] {
                None => true,
                Some(prev) => {
                    let (a, b) = self.g.edge(prev);
                    let other = if a == w { b } else { a };
                    self.augment(other)
                }
            };
            if free {
                self.right_match[w] = Some(e);
                return true;
            }
        }
        false
    }
}

fn perfect_matching(g: &Graph, left: &[VertexId], available: &[bool]) -> Option<Vec<EdgeId>> {
    let mut m = Matcher {
        g,
        available,
        right_match: vec![None; g.vertex_count()],
        visited: vec![false; g.vertex_count()],
    };
    for &u in left {
        m.visited.iter_mut().for_each(|x| *x = false);
        if !m.augment(u) {
            return None;
        }
    }
    Some(m.right_match.into_iter().flatten().collect())
}

/// Left side (`false`) of the bipartition, checked regular with degree >= 1.
fn regular_parts(g: &Graph) -> Result<(usize, Vec<bool>), ConstructionError> {
    let r = g.regular_degree().ok_or(ConstructionError::NotRegular)?;
    let sides = g.bipartition().ok_or(ConstructionError::NotBipartite)?;
    if r == 0 {
        return Err(ConstructionError::InvalidParameter(
            "regular bipartite construction needs degree >= 1".into(),
        ));
    }
    Ok((r, sides))
}

/// Proper edge coloring with colors `1..=r`, one perfect matching per color.
pub fn proper_edge_color_regular_bipartite(g: &Graph) -> Result<Vec<Color>, ConstructionError> {
    let (r, sides) = regular_parts(g)?;
    let left: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| !sides[v]).collect();
    let mut colors = vec![0; g.edge_count()];
    let mut available = vec![true; g.edge_count()];
    for color in 1..=r as Color {
        let matching = perfect_matching(g, &left, &available)
            .ok_or(ConstructionError::MatchingFailed { color })?;
        for e in matching {
            colors[e] = color;
            available[e] = false;
        }
    }
    Ok(colors)
}

/// `(r + 2)`-coloring: one side colored 1, edges shifted to `2..=r+1`, the
/// other side colored `r + 2`.
pub fn color_regular_bipartite(g: &Graph) -> Result<Certificate, ConstructionError> {
    let (r, sides) = regular_parts(g)?;
    let edge_colors = proper_edge_color_regular_bipartite(g)?
        .into_iter()
        .map(|c| c + 1)
        .collect();
    let top = r as Color + 2;
    Ok(Certificate {
        graph: g.clone(),
        coloring: TotalColoring {
            t: top,
            vertex_colors: sides.iter().map(|&s| if s { top } else { 1 }).collect(),
            edge_colors,
        },
    })
}

/// `K_{m,n}` with `c(u_i) = i`, `c(v_j) = m + 1 + j`, `c(u_i v_j) = i + j`.
pub fn color_complete_bipartite(m: usize, n: usize) -> Result<Certificate, ConstructionError> {
    let g = FamilySpec::CompleteBipartite { m, n }.generate()?;
    let mm = m as Color;
    let label = move |v: VertexId| -> Color {
        if v < m {
            v as Color + 1
        } else {
            (v - m) as Color + 1
        }
    };
    Ok(color_by(
        g,
        mm + n as Color + 1,
        |v| if v < m { label(v) } else { mm + 1 + label(v) },
        |a, b| label(a) + label(b),
    ))
}
