//! Named graph families with the canonical labelings the constructions use.
//!
//! Note the wheel convention: `Wheel { n }` has `n` vertices in total, a hub
//! (vertex 0) plus a rim cycle on `n - 1` vertices. `Wheel { n: 4 }` is `K_4`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} requires {bound}, got {got}")]
    OutOfRange {
        family: &'static str,
        bound: &'static str,
        got: String,
    },
}

/// Built-in regular bipartite graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "name")]
pub enum RegularBipartite {
    /// `K_{r,r}`.
    BalancedComplete { r: usize },
    /// The 3-dimensional cube `Q_3`.
    Cube,
    /// `C_n` with `n` even.
    EvenCycle { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Wheel { n: usize },
    TreeRandom { n: usize, seed: u64 },
    RegularBipartiteNamed(RegularBipartite),
}

fn out_of_range(family: &'static str, bound: &'static str, got: impl ToString) -> FamilyError {
    FamilyError::OutOfRange {
        family,
        bound,
        got: got.to_string(),
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            FamilySpec::Path { n } if n < 1 => Err(out_of_range("path", "n >= 1", n)),
            FamilySpec::Cycle { n } if n < 3 => Err(out_of_range("cycle", "n >= 3", n)),
            FamilySpec::Complete { n } if n < 1 => Err(out_of_range("complete", "n >= 1", n)),
            FamilySpec::CompleteBipartite { m, .. } if m < 1 => {
                Err(out_of_range("complete_bipartite", "m >= 1", m))
            }
            FamilySpec::CompleteBipartite { n, .. } if n < 1 => {
                Err(out_of_range("complete_bipartite", "n >= 1", n))
            }
            FamilySpec::Wheel { n } if n < 4 => Err(out_of_range("wheel", "n >= 4", n)),
            FamilySpec::TreeRandom { n, .. } if n < 1 => {
                Err(out_of_range("tree_random", "n >= 1", n))
            }
            FamilySpec::RegularBipartiteNamed(RegularBipartite::BalancedComplete { r }) if r < 1 => {
                Err(out_of_range("balanced_complete", "r >= 1", r))
            }
            FamilySpec::RegularBipartiteNamed(RegularBipartite::EvenCycle { n })
                if n < 4 || n % 2 == 1 =>
            {
                Err(out_of_range("even_cycle", "even n >= 4", n))
            }
            _ => Ok(()),
        }
    }

    /// Build the graph with the family's canonical labeling.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match *self {
            FamilySpec::Path { n } => Graph::new(n, (1..n).map(|i| (i - 1, i))),
            FamilySpec::Cycle { n } => Graph::new(n, cycle_edges(n)),
            FamilySpec::Complete { n } => Graph::new(n, complete_edges(n)),
            FamilySpec::CompleteBipartite { m, n } => Graph::new(
                m + n,
                (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))),
            ),
            FamilySpec::Wheel { n } => {
                let rim = n - 1;
                let spokes = (1..=rim).map(|i| (0, i));
                let path = (1..rim).map(|i| (i, i + 1));
                Graph::new(n, spokes.chain(path).chain([(1, rim)]))
            }
            FamilySpec::TreeRandom { n, seed } => Graph::new(n, random_tree_edges(n, seed)),
            FamilySpec::RegularBipartiteNamed(RegularBipartite::BalancedComplete { r }) => {
                return FamilySpec::CompleteBipartite { m: r, n: r }.generate();
            }
            FamilySpec::RegularBipartiteNamed(RegularBipartite::Cube) => Graph::new(
                8,
                complete_edges(8).filter(|&(a, b)| (a ^ b).count_ones() == 1),
            ),
            FamilySpec::RegularBipartiteNamed(RegularBipartite::EvenCycle { n }) => {
                Graph::new(n, cycle_edges(n))
            }
        };
        Ok(g.expect("family generators emit simple graphs"))
    }

    /// Display names in the labeling the constructions are written against.
    pub fn vertex_names(&self) -> Vec<String> {
        match *self {
            FamilySpec::Wheel { n } => std::iter::once("u".to_string())
                .chain((1..n).map(|i| format!("v{i}")))
                .collect(),
            FamilySpec::CompleteBipartite { m, n } => bipartite_names(m, n),
            FamilySpec::RegularBipartiteNamed(RegularBipartite::BalancedComplete { r }) => {
                bipartite_names(r, r)
            }
            _ => default_names(self.vertex_count()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::TreeRandom { n, .. }
            | FamilySpec::RegularBipartiteNamed(RegularBipartite::EvenCycle { n }) => n,
            FamilySpec::CompleteBipartite { m, n } => m + n,
            FamilySpec::RegularBipartiteNamed(RegularBipartite::BalancedComplete { r }) => 2 * r,
            FamilySpec::RegularBipartiteNamed(RegularBipartite::Cube) => 8,
        }
    }
}

/// `v1, v2, ...` for graphs without a family-specific labeling.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn bipartite_names(m: usize, n: usize) -> Vec<String> {
    (1..=m)
        .map(|i| format!("u{i}"))
        .chain((1..=n).map(|j| format!("v{j}")))
        .collect()
}

/// `v_i v_{i+1}` for `i = 1..n-1`, then `v_1 v_n`.
fn cycle_edges(n: usize) -> impl Iterator<Item = (VertexId, VertexId)> {
    (0..n - 1).map(|i| (i, i + 1)).chain([(0, n - 1)])
}

fn complete_edges(n: usize) -> impl Iterator<Item = (VertexId, VertexId)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Uniform labeled tree: decode a random Prüfer sequence of length `n - 2`.
fn random_tree_edges(n: usize, seed: u64) -> Vec<(VertexId, VertexId)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<VertexId> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &code)
}

fn prufer_decode(n: usize, code: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut remaining = vec![1usize; n];
    for &c in code {
        remaining[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<VertexId> =
        (0..n).filter(|&v| remaining[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf, c));
        remaining[c] -= 1;
        if remaining[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<VertexId> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_cycle() {
        let g = FamilySpec::Cycle { n: 3 }.generate().unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
    }

    #[test]
    fn wheel_four_is_k4() {
        let g = FamilySpec::Wheel { n: 4 }.generate().unwrap();
        assert_eq!(g.edge_count(), 6);
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(g.edge_between(u, v).is_some());
            }
        }
    }

    #[test]
    fn wheel_degrees() {
        let g = FamilySpec::Wheel { n: 6 }.generate().unwrap();
        assert_eq!(g.degree(0), Ok(5));
        assert!((1..6).all(|v| g.degree(v) == Ok(3)));
        let f = g.structure_flags();
        assert!(f.connected && !f.bipartite);
        assert_eq!(f.regular_degree, None);
        assert_eq!(f.universal_vertices, vec![0]);
    }

    #[test]
    fn complete_bipartite_labeling() {
        let g = FamilySpec::CompleteBipartite { m: 2, n: 3 }.generate().unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degrees(), vec![3, 3, 2, 2, 2]);
        assert_eq!(g.edge(0), (0, 2));
        assert_eq!(g.edge(3), (1, 2));
    }

    #[test]
    fn k33_flags() {
        let g = FamilySpec::RegularBipartiteNamed(RegularBipartite::BalancedComplete { r: 3 })
            .generate()
            .unwrap();
        let f = g.structure_flags();
        assert!(f.connected && f.bipartite);
        assert_eq!(f.regular_degree, Some(3));
        assert!(f.universal_vertices.is_empty());
    }

    #[test]
    fn cube_is_cubic_bipartite() {
        let g = FamilySpec::RegularBipartiteNamed(RegularBipartite::Cube)
            .generate()
            .unwrap();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.bipartition().is_some());
        assert_eq!(g.diameter(), Ok(3));
    }

    #[test]
    fn bounds_are_enforced() {
        for bad in [
            FamilySpec::Cycle { n: 2 },
            FamilySpec::Wheel { n: 3 },
            FamilySpec::CompleteBipartite { m: 0, n: 2 },
            FamilySpec::CompleteBipartite { m: 2, n: 0 },
            FamilySpec::RegularBipartiteNamed(RegularBipartite::EvenCycle { n: 5 }),
        ] {
            let err = bad.generate().unwrap_err();
            assert!(err.to_string().contains("requires"), "{err}");
        }
    }

    #[test]
    fn random_trees_are_trees_and_reproducible() {
        for seed in 0..50 {
            for n in 1..=20 {
                let spec = FamilySpec::TreeRandom { n, seed };
                let g = spec.generate().unwrap();
                assert!(g.is_tree(), "seed {seed} n {n}");
                assert_eq!(g, spec.generate().unwrap());
            }
        }
    }

    #[test]
    fn prufer_known_code() {
        // code (3, 3, 3) on 5 vertices is the star centered at 3 plus leaf 4
        let edges = prufer_decode(5, &[3, 3, 3]);
        assert_eq!(edges, vec![(0, 3), (1, 3), (2, 3), (3, 4)]);
    }

    #[test]
    fn wheel_names() {
        let names = FamilySpec::Wheel { n: 5 }.vertex_names();
        assert_eq!(names, ["u", "v1", "v2", "v3", "v4"]);
    }
}
