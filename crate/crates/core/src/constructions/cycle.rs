//! Cycles `C_n` with vertices `v_1..v_n`, edges `v_i v_{i+1}` then `v_1 v_n`.

use super::ConstructionError;
use crate::coloring::{Certificate, Color, TotalColoring};
use crate::family::FamilySpec;

fn check_n(n: usize) -> Result<(), ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Ok(())
}

/// Builds from 1-based rules: `vertex(i)` for `v_i`, `path_edge(j)` for
/// `v_j v_{j+1}` with `j < n`, and the closing edge `v_1 v_n`.
fn cycle_certificate(
    n: usize,
    t: Color,
    vertex: impl Fn(usize) -> Color,
    path_edge: impl Fn(usize) -> Color,
    closing: Color,
) -> Certificate {
    let graph = FamilySpec::Cycle { n }.generate().expect("n >= 3 checked");
    let mut edge_colors: Vec<Color> = (1..n).map(path_edge).collect();
    edge_colors.push(closing);
    Certificate {
        graph,
        coloring: TotalColoring {
            t,
            vertex_colors: (1..=n).map(vertex).collect(),
            edge_colors,
        },
    }
}

/// Interval total coloring with 3 colors when `3 | n`, otherwise 4.
pub fn color_cycle_min(n: usize) -> Result<Certificate, ConstructionError> {
    check_n(n)?;
    let cert = if n.is_multiple_of(3) {
        cycle_certificate(
            n,
            3,
            |i| match i % 3 {
                0 => 2,
                1 => 1,
                _ => 3,
            },
            |j| match j % 3 {
                0 => 3,
                1 => 2,
                _ => 1,
            },
            3,
        )
    } else if n.is_multiple_of(2) {
        cycle_certificate(
            n,
            4,
            |i| if i % 2 == 0 { 4 } else { 1 },
            |j| if j % 2 == 0 { 2 } else { 3 },
            2,
        )
    } else {
        cycle_certificate(
            n,
            4,
            |i| {
                if i == n - 1 {
                    2
                } else if i == n {
                    3
                } else if i % 2 == 0 {
                    4
                } else {
                    1
                }
            },
            |j| {
                if j == n - 1 {
                    4
                } else if j % 2 == 0 {
                    2
                } else {
                    3
                }
            },
            2,
        )
    };
    Ok(cert)
}

/// Interval total `(n + 2)`-coloring: colors climb in steps of two along one
/// side of the cycle and descend along the other.
pub fn color_cycle_max(n: usize) -> Result<Certificate, ConstructionError> {
    check_n(n)?;
    let t = n as Color + 2;
    let nn = n as Color;
    let cert = if n.is_multiple_of(2) {
        let half = n / 2;
        cycle_certificate(
            n,
            t,
            |i| {
                let i = i as Color;
                if i <= half as Color {
                    2 * i - 1
                } else {
                    2 * (nn - i) + 4
                }
            },
            |k| {
                let k = k as Color;
                if k <= half as Color {
                    2 * k
                } else {
                    2 * (nn - k) + 3
                }
            },
            3,
        )
    } else {
        let ceil = n.div_ceil(2) as Color;
        cycle_certificate(
            n,
            t,
            |i| {
                let i = i as Color;
                if i <= ceil + 1 {
                    2 * i - 1
                } else {
                    2 * (nn - i) + 4
                }
            },
            |k| {
                let k = k as Color;
                if k <= ceil {
                    2 * k
                } else {
                    2 * (nn - k) + 3
                }
            },
            3,
        )
    };
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c6_min_matches_hand_values() {
        let c = color_cycle_min(6).unwrap();
        assert_eq!(c.coloring.t, 3);
        assert_eq!(c.coloring.vertex_colors, vec![1, 3, 2, 1, 3, 2]);
        assert_eq!(c.coloring.edge_colors, vec![2, 1, 3, 2, 1, 3]);
    }

    #[test]
    fn c3_max_agrees_with_k3_max() {
        let c = color_cycle_max(3).unwrap();
        assert_eq!(c.coloring.t, 5);
        assert_eq!(c.coloring.vertex_colors, vec![1, 3, 5]);
        // edges v1v2, v2v3, v1v3
        assert_eq!(c.coloring.edge_colors, vec![2, 4, 3]);
    }

    #[test]
    fn small_cycles_verify() {
        for n in 3..=12 {
            for c in [color_cycle_min(n).unwrap(), color_cycle_max(n).unwrap()] {
                let out = c.verify().unwrap();
                assert!(out.valid, "n={n} t={}: {:?}", c.coloring.t, out.failures);
            }
        }
    }

    #[test]
    fn rejects_short_cycles() {
        assert!(color_cycle_min(2).is_err());
        assert!(color_cycle_max(0).is_err());
    }
}
