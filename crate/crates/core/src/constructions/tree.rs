//! Trees, by growing the coloring one leaf at a time.
//!
//! Vertices are attached in breadth-first order from vertex 0, so each new
//! vertex `u` is a leaf hanging off an already colored `v`. With `s` the
//! smallest color in `v`'s palette and `d` the new degree of `v`:
//!
//! * `s = 1`: edge `d + 1`, leaf `d + 2`;
//! * `s = 2`, `c(v) = 2`: edge `d + 2`, leaf `d + 1`;
//! * `s = 2`, `c(v) != 2`, max degree unchanged: edge 1, leaf 2;
//! * `s = 2`, `c(v) != 2`, max degree grows: every existing color moves up
//!   by one, then edge 2, leaf 1;
//! * `s >= 3`: edge `s - 1`, leaf `s - 2`.
//!
//! The global shift is kept as an offset: colors are stored relative to it
//! and resolved once at the end.

use std::collections::VecDeque;

use super::ConstructionError;
use crate::coloring::{Certificate, Color, TotalColoring};
use crate::graph::{Graph, VertexId};

/// Interval total `(Δ + 2)`-coloring of a tree (1-coloring of `K_1`).
pub fn color_tree(g: &Graph) -> Result<Certificate, ConstructionError> {
    if !g.is_tree() {
        return Err(ConstructionError::NotATree);
    }
    let n = g.vertex_count();
    let mut vertex_raw: Vec<Color> = vec![0; n];
    let mut edge_raw: Vec<Color> = vec![0; g.edge_count()];
    let mut palette_min_raw: Vec<Color> = vec![Color::MAX; n];
    let mut degree = vec![0usize; n];
    let mut max_degree = 0usize;
    let mut offset: Color = 0;

    vertex_raw[0] = 1;
    palette_min_raw[0] = 1;
    let mut placed = vec![false; n];
    placed[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &(u, e) in g.neighbors(v) {
            if placed[u] {
                continue;
            }
            placed[u] = true;
            queue.push_back(u);
            let (edge_color, leaf_color) =
                extend(v, &mut degree, &mut max_degree, &mut offset, &vertex_raw, &palette_min_raw);
            degree[u] = 1;
            edge_raw[e] = edge_color - offset;
            vertex_raw[u] = leaf_color - offset;
            palette_min_raw[v] = palette_min_raw[v].min(edge_raw[e]);
            palette_min_raw[u] = edge_raw[e].min(vertex_raw[u]);
        }
    }

    let t = if n == 1 { 1 } else { max_degree as Color + 2 };
    let resolve = |x: &Color| x + offset;
    Ok(Certificate {
        graph: g.clone(),
        coloring: TotalColoring {
            t,
            vertex_colors: vertex_raw.iter().map(resolve).collect(),
            edge_colors: edge_raw.iter().map(resolve).collect(),
        },
    })
}

/// Colors (absolute, after any shift) for a new leaf edge at `v` and the
/// leaf itself. Updates degrees and the offset.
fn extend(
    v: VertexId,
    degree: &mut [usize],
    max_degree: &mut usize,
    offset: &mut Color,
    vertex_raw: &[Color],
    palette_min_raw: &[Color],
) -> (Color, Color) {
    let old_max = *max_degree;
    degree[v] += 1;
    let d = degree[v];
    let new_max = old_max.max(d);
    *max_degree = new_max;

    let s = palette_min_raw[v] + *offset;
    let own = vertex_raw[v] + *offset;
    let d = d as Color;
    match s {
        1 => (d + 1, d + 2),
        2 if own == 2 => (d + 2, d + 1),
        2 if new_max == old_max => (1, 2),
        2 => {
            *offset += 1;
            (2, 1)
        }
        _ => (s - 1, s - 2),
    }
}
