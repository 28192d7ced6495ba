//! Complete graphs `K_n` with vertices `v_1..v_n`.

use super::{color_by, ConstructionError};
use crate::coloring::{Certificate, Color, TotalColoring};
use crate::family::FamilySpec;

fn complete_graph(n: usize) -> Result<crate::graph::Graph, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::InvalidParameter(
            "complete graph needs n >= 1".into(),
        ));
    }
    Ok(FamilySpec::Complete { n }.generate()?)
}

/// `c(v_i) = 2i - 1`, `c(v_i v_j) = i + j - 1`; uses `2n - 1` colors.
pub fn color_complete_max(n: usize) -> Result<Certificate, ConstructionError> {
    let g = complete_graph(n)?;
    Ok(color_by(
        g,
        2 * n as Color - 1,
        |v| 2 * (v as Color + 1) - 1,
        |a, b| (a as Color + 1) + (b as Color + 1) - 1,
    ))
}

/// `3n/2` colors for even `n`.
pub fn color_complete_even_min(n: usize) -> Result<Certificate, ConstructionError> {
    if n < 2 || n % 2 == 1 {
        return Err(ConstructionError::InvalidParameter(format!(
            "even-order construction needs even n >= 2, got {n}"
        )));
    }
    let g = complete_graph(n)?;
    let n = n as Color;
    let half = n / 2;
    Ok(color_by(
        g,
        3 * half,
        |v| {
            let i = v as Color + 1;
            if i <= half {
                i
            } else {
                half + i
            }
        },
        |a, b| {
            let (i, j) = (a as Color + 1, b as Color + 1);
            let s = i + j;
            if s % 2 == 1 {
                if s - 1 <= n {
                    half + (s - 1) / 2
                } else {
                    (s - 1) / 2
                }
            } else if s <= n {
                s / 2
            } else {
                half + s / 2
            }
        },
    ))
}

/// Any `t` in the feasible range of `K_order`: `[order, 2·order - 1]` for odd
/// order, `[3·order/2, 2·order - 1]` for even order.
///
/// Odd order folds the `(2·order - 1)`-coloring down: colors above `t` drop by
/// `order`. Even order stretches the `3·order/2`-coloring up by
/// `d = t - 3·order/2`, taking `i + j - 1` on two bands of edges and shifting
/// the even-sum edges in between by `d`.
pub fn color_complete_spectrum(order: usize, t: Color) -> Result<Certificate, ConstructionError> {
    let out_of_range = |lo: Color, hi: Color| ConstructionError::UncoveredT {
        family: format!("K_{order}"),
        t,
        supported: format!("[{lo}, {hi}]"),
    };
    if order < 1 {
        return Err(ConstructionError::InvalidParameter(
            "complete graph needs n >= 1".into(),
        ));
    }
    let ord = order as Color;
    if order % 2 == 1 {
        let (lo, hi) = (ord, 2 * ord - 1);
        if t < lo || t > hi {
            return Err(out_of_range(lo, hi));
        }
        let base = color_complete_max(order)?;
        let fold = |x: &Color| if *x > t { x - ord } else { *x };
        let c = &base.coloring;
        return Ok(Certificate {
            coloring: TotalColoring {
                t,
                vertex_colors: c.vertex_colors.iter().map(fold).collect(),
                edge_colors: c.edge_colors.iter().map(fold).collect(),
            },
            graph: base.graph,
        });
    }

    let n = ord / 2;
    let (lo, hi) = (3 * n, 4 * n - 1);
    if t < lo || t > hi {
        return Err(out_of_range(lo, hi));
    }
    let base = color_complete_even_min(order)?;
    let d = t - 3 * n;
    let beta = &base.coloring;
    let g = &base.graph;
    let vertex_colors = beta
        .vertex_colors
        .iter()
        .enumerate()
        .map(|(v, &b)| {
            let i = v as Color + 1;
            if b + d < 2 * i {
                b + d
            } else {
                2 * i - 1
            }
        })
        .collect();
    let edge_colors = g
        .edges()
        .iter()
        .zip(&beta.edge_colors)
        .map(|(&(a, b), &old)| {
            let (i, j) = (a as Color + 1, b as Color + 1);
            let s = i + j - 1;
            let shifted = if (i + j) % 2 == 0 { old + d } else { old };
            if s <= 2 * d + 1 && i < 2 * n && j < 2 * n {
                s
            } else if 2 * d + 1 < s && s < 2 * n {
                shifted
            } else if 2 * n <= s && s <= 2 * n + 2 * d + 1 {
                s
            } else {
                // s > 2n + 2d + 1, which forces i, j >= 3
                shifted
            }
        })
        .collect();
    Ok(Certificate {
        coloring: TotalColoring {
            t,
            vertex_colors,
            edge_colors,
        },
        graph: base.graph,
    })
}
