//! Closed-form bounds on `w_τ` (fewest colors) and `W_τ` (most colors) of
//! an interval total coloring, plus exact values known for named families.
//!
//! Upper bounds on `W_τ` and `w_τ` only constrain graphs that have an
//! interval total coloring at all. The formulas themselves are total, so
//! they are reported for every graph and the caller decides what they mean
//! for a graph with no such coloring.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::Color;
use crate::family::FamilySpec;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundTarget {
    #[serde(rename = "w_tau")]
    MinColors,
    #[serde(rename = "W_tau")]
    MaxColors,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub name: String,
    pub kind: BoundKind,
    pub target: BoundTarget,
    pub value: Color,
    pub applicable: bool,
    /// The formula and the condition it needs.
    #[serde(rename = "ref")]
    pub reference: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundReport {
    pub bounds: Vec<Bound>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&Bound> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn applicable(&self) -> impl Iterator<Item = &Bound> {
        self.bounds.iter().filter(|b| b.applicable)
    }

    /// Tightest applicable bound of the given kind on `target`.
    pub fn best(&self, kind: BoundKind, target: BoundTarget) -> Option<Color> {
        let values = self
            .applicable()
            .filter(|b| b.kind == kind && b.target == target)
            .map(|b| b.value);
        match kind {
            BoundKind::Lower => values.max(),
            BoundKind::Upper => values.min(),
        }
    }
}

pub const DEGREE_LOWER: &str = "degree_lower";
pub const ORDER_SIZE_UPPER: &str = "order_size_upper";
pub const ORDER_UPPER: &str = "order_upper";
pub const REGULAR_ORDER_UPPER: &str = "regular_order_upper";
pub const SHORTEST_PATH_UPPER: &str = "shortest_path_degree_upper";
pub const DIAMETER_UPPER: &str = "diameter_upper";
pub const UNIVERSAL_VERTEX_UPPER: &str = "universal_vertex_upper";
pub const REGULAR_BIPARTITE_UPPER: &str = "regular_bipartite_upper";
pub const TREE_UPPER: &str = "tree_upper";
pub const COMPLETE_BIPARTITE_LOWER: &str = "complete_bipartite_lower";

fn bound(
    name: &str,
    kind: BoundKind,
    target: BoundTarget,
    value: Color,
    applicable: bool,
    reference: &str,
) -> Bound {
    Bound {
        name: name.to_string(),
        kind,
        target,
        value,
        applicable,
        reference: reference.to_string(),
    }
}

/// Every bound, each flagged applicable or not. Values that cannot be
/// computed for the graph (a diameter of a disconnected graph, say) are
/// reported as 0 and inapplicable.
pub fn bound_report(g: &Graph) -> BoundReport {
    use BoundKind::*;
    use BoundTarget::*;

    let n = g.vertex_count() as Color;
    let m = g.edge_count() as Color;
    let delta = g.max_degree() as Color;
    let flags = g.structure_flags();
    let connected = flags.connected && n > 0;

    let mut out = vec![
        bound(DEGREE_LOWER, Lower, MinColors, delta + 1, true, "Δ+1 <= χ'' <= w_tau"),
        bound(ORDER_SIZE_UPPER, Upper, MaxColors, n + m, true, "|V|+|E|"),
        bound(ORDER_UPPER, Upper, MaxColors, 2 * n - 1, connected, "2|V|-1, connected"),
    ];

    let regular_ok = match flags.regular_degree {
        Some(r) => connected && n >= 2 * r as Color + 2,
        None => false,
    };
    out.push(bound(
        REGULAR_ORDER_UPPER,
        Upper,
        MaxColors,
        2 * n - 3,
        regular_ok,
        "2|V|-3, connected r-regular with |V| >= 2r+2",
    ));

    let path_sum = g.max_shortest_path_degree_sum().ok();
    out.push(bound(
        SHORTEST_PATH_UPPER,
        Upper,
        MaxColors,
        path_sum.map_or(0, |s| 1 + s as Color),
        connected && path_sum.is_some(),
        "1 + max over shortest paths of the degree sum, connected",
    ));

    let diameter = g.diameter().ok();
    out.push(bound(
        DIAMETER_UPPER,
        Upper,
        MaxColors,
        diameter.map_or(0, |d| 1 + (d as Color + 1) * delta),
        connected && diameter.is_some(),
        "1 + (diam+1)Δ, connected",
    ));

    let universal = &flags.universal_vertices;
    let k = (0..g.vertex_count())
        .filter(|v| !universal.contains(v))
        .map(|v| g.neighbors(v).len() as Color)
        .max()
        .unwrap_or(0);
    out.push(bound(
        UNIVERSAL_VERTEX_UPPER,
        Upper,
        MaxColors,
        n + 2 * k,
        universal.len() == 1,
        "|V| + 2k, exactly one universal vertex, k = max degree of the others",
    ));

    let regular_bipartite = match flags.regular_degree {
        Some(r) if flags.bipartite => Some(r as Color + 2),
        _ => None,
    };
    out.push(bound(
        REGULAR_BIPARTITE_UPPER,
        Upper,
        MinColors,
        regular_bipartite.unwrap_or(0),
        regular_bipartite.is_some(),
        "r+2, r-regular bipartite",
    ));

    let tree = g.is_tree();
    out.push(bound(
        TREE_UPPER,
        Upper,
        MinColors,
        if tree { delta + 2 } else { 0 },
        tree,
        "Δ+2, tree",
    ));

    let parts = g.complete_bipartite_parts();
    out.push(bound(
        COMPLETE_BIPARTITE_LOWER,
        Lower,
        MaxColors,
        parts.map_or(0, |(a, b)| (a + b) as Color + 1),
        parts.is_some(),
        "m+n+1, K_{m,n}",
    ));

    BoundReport { bounds: out }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("no known value for {0:?}")]
    UnsupportedFamily(FamilySpec),
}

/// Total chromatic number of cycles and complete graphs.
pub fn known_chi_double_prime(spec: &FamilySpec) -> Result<Color, BoundsError> {
    match *spec {
        FamilySpec::Cycle { n } if n >= 3 => Ok(if n % 3 == 0 { 3 } else { 4 }),
        FamilySpec::Complete { n } if n >= 1 => {
            let n = n as Color;
            Ok(if n % 2 == 1 { n } else { n + 1 })
        }
        _ => Err(BoundsError::UnsupportedFamily(*spec)),
    }
}

/// Known extremes, and the full feasible range of `t` where it is known to
/// be every value in between. `None` means not known here, not infeasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValues {
    pub w_tau: Option<Color>,
    #[serde(rename = "W_tau")]
    pub max_tau: Option<Color>,
    pub spectrum: Option<(Color, Color)>,
}

pub fn known_exact_values(spec: &FamilySpec) -> Result<ExactValues, BoundsError> {
    spec.validate()
        .map_err(|_| BoundsError::UnsupportedFamily(*spec))?;
    let values = match *spec {
        FamilySpec::Path { n } => ExactValues {
            w_tau: None,
            max_tau: Some(2 * n as Color - 1),
            spectrum: None,
        },
        FamilySpec::Cycle { n } => ExactValues {
            w_tau: Some(if n % 3 == 0 { 3 } else { 4 }),
            max_tau: Some(n as Color + 2),
            spectrum: None,
        },
        FamilySpec::Complete { n } => {
            let n = n as Color;
            let w = if n % 2 == 1 { n } else { 3 * n / 2 };
            ExactValues {
                w_tau: Some(w),
                max_tau: Some(2 * n - 1),
                spectrum: Some((w, 2 * n - 1)),
            }
        }
        FamilySpec::Wheel { n } => {
            let nn = n as Color;
            let (w, top) = match n {
                4 => (6, 7),
                5..=8 => (nn, nn + 3),
                _ => (nn, nn + 4),
            };
            ExactValues {
                w_tau: Some(w),
                max_tau: Some(top),
                spectrum: Some((w, top)),
            }
        }
        _ => return Err(BoundsError::UnsupportedFamily(*spec)),
    };
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(g: &Graph) -> Vec<(String, Color, bool)> {
        bound_report(g)
            .bounds
            .into_iter()
            .map(|b| (b.name, b.value, b.applicable))
            .collect()
    }

    #[test]
    fn c6_report() {
        let g = FamilySpec::Cycle { n: 6 }.generate().unwrap();
        let r = bound_report(&g);
        let v = |name| r.get(name).unwrap().value;
        assert_eq!(v(ORDER_UPPER), 11);
        assert_eq!(v(REGULAR_ORDER_UPPER), 9);
        assert!(r.get(REGULAR_ORDER_UPPER).unwrap().applicable);
        assert_eq!(v(SHORTEST_PATH_UPPER), 9);
        assert_eq!(v(DIAMETER_UPPER), 9);
        assert_eq!(v(ORDER_SIZE_UPPER), 12);
        assert_eq!(v(DEGREE_LOWER), 3);
        assert!(!r.get(UNIVERSAL_VERTEX_UPPER).unwrap().applicable);
        assert_eq!(r.best(BoundKind::Upper, BoundTarget::MaxColors), Some(9));
    }

    #[test]
    fn w6_universal_vertex() {
        let g = FamilySpec::Wheel { n: 6 }.generate().unwrap();
        let b = bound_report(&g).get(UNIVERSAL_VERTEX_UPPER).cloned().unwrap();
        assert!(b.applicable);
        assert_eq!(b.value, 12);
    }

    #[test]
    fn k4_diameter_bound() {
        let g = FamilySpec::Complete { n: 4 }.generate().unwrap();
        let r = bound_report(&g);
        assert_eq!(r.get(DIAMETER_UPPER).unwrap().value, 7);
        // four universal vertices
        assert!(!r.get(UNIVERSAL_VERTEX_UPPER).unwrap().applicable);
    }

    #[test]
    fn structural_complete_bipartite() {
        // K_{2,3} with scrambled labels
        let g = Graph::new(5, [(3, 0), (3, 1), (3, 4), (2, 0), (2, 1), (2, 4)]).unwrap();
        let b = bound_report(&g).get(COMPLETE_BIPARTITE_LOWER).cloned().unwrap();
        assert!(b.applicable);
        assert_eq!(b.value, 6);
        let p4 = FamilySpec::Path { n: 4 }.generate().unwrap();
        assert!(!bound_report(&p4).get(COMPLETE_BIPARTITE_LOWER).unwrap().applicable);
    }

    #[test]
    fn disconnected_keeps_only_total_bounds() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let applicable: Vec<String> = values(&g)
            .into_iter()
            .filter(|x| x.2)
            .map(|x| x.0)
            .collect();
        assert_eq!(applicable, vec![DEGREE_LOWER, ORDER_SIZE_UPPER, REGULAR_BIPARTITE_UPPER]);
    }

    #[test]
    fn tree_and_regular_bipartite() {
        let star = FamilySpec::CompleteBipartite { m: 1, n: 3 }.generate().unwrap();
        let r = bound_report(&star);
        assert_eq!(r.get(TREE_UPPER).unwrap().value, 5);
        assert!(r.get(UNIVERSAL_VERTEX_UPPER).unwrap().applicable);
        let cube = FamilySpec::RegularBipartiteNamed(crate::family::RegularBipartite::Cube)
            .generate()
            .unwrap();
        assert_eq!(bound_report(&cube).get(REGULAR_BIPARTITE_UPPER).unwrap().value, 5);
    }

    #[test]
    fn json_shape() {
        let g = FamilySpec::Cycle { n: 4 }.generate().unwrap();
        let json = serde_json::to_value(bound_report(&g)).unwrap();
        let first = &json[0];
        assert_eq!(first["name"], DEGREE_LOWER);
        assert_eq!(first["kind"], "lower");
        assert_eq!(first["target"], "w_tau");
        assert_eq!(first["value"], 3);
        assert_eq!(first["applicable"], true);
        assert!(first["ref"].is_string());
        assert_eq!(json[1]["target"], "W_tau");
    }

    #[test]
    fn chi_double_prime_table() {
        assert_eq!(known_chi_double_prime(&FamilySpec::Cycle { n: 6 }), Ok(3));
        assert_eq!(known_chi_double_prime(&FamilySpec::Cycle { n: 7 }), Ok(4));
        assert_eq!(known_chi_double_prime(&FamilySpec::Complete { n: 6 }), Ok(7));
        assert!(known_chi_double_prime(&FamilySpec::Wheel { n: 6 }).is_err());
    }

    #[test]
    fn exact_values() {
        let w7 = known_exact_values(&FamilySpec::Wheel { n: 7 }).unwrap();
        assert_eq!((w7.w_tau, w7.max_tau, w7.spectrum), (Some(7), Some(10), Some((7, 10))));
        let w9 = known_exact_values(&FamilySpec::Wheel { n: 9 }).unwrap();
        assert_eq!((w9.w_tau, w9.max_tau), (Some(9), Some(13)));
        let p4 = known_exact_values(&FamilySpec::Path { n: 4 }).unwrap();
        assert_eq!(p4.max_tau, Some(7));
        assert!(known_exact_values(&FamilySpec::CompleteBipartite { m: 2, n: 2 }).is_err());
    }
}
