//! Undirected simple graphs with stable edge indexing.
//!
//! Vertices are `0..n`. Edge `k` is the `k`-th pair handed to [`Graph::new`];
//! endpoints are stored with the smaller index first. Every structural query
//! the bounds and constructions need (degrees, diameter, bipartition,
//! universal vertices, shortest-path degree sums) lives here.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex, `0..vertex_count`.
pub type VertexId = usize;
/// Index of an edge in the graph's edge sequence.
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} is a self-loop at vertex {vertex}")]
    SelfLoop { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} duplicates edge {first} ({u}, {v})")]
    DuplicateEdge {
        edge: EdgeId,
        first: EdgeId,
        u: VertexId,
        v: VertexId,
    },
    #[error("edge {edge} endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange {
        edge: EdgeId,
        vertex: VertexId,
        n: usize,
    },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
}

/// An undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

/// Wire form: `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(value: GraphJson) -> Result<Self, Self::Error> {
        Graph::new(value.n, value.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// Connectivity, bipartiteness, regularity and universal vertices in one pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub connected: bool,
    pub bipartite: bool,
    pub regular_degree: Option<usize>,
    pub universal_vertices: Vec<VertexId>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut stored = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashMap::new();
        for (k, (a, b)) in edges.into_iter().enumerate() {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::EndpointOutOfRange { edge: k, vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { edge: k, vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if let Some(&first) = seen.get(&(u, v)) {
                return Err(GraphError::DuplicateEdge {
                    edge: k,
                    first,
                    u,
                    v,
                });
            }
            seen.insert((u, v), k);
            adjacency[u].push((v, k));
            adjacency[v].push((u, k));
            stored.push((u, v));
        }
        Ok(Graph {
            n,
            edges: stored,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// `(neighbor, edge)` pairs incident to `v`, in edge insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &(w, _) in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Side of each vertex in a proper 2-coloring (`false`/`true`), if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _) in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|a| a.len() == first)
            .then_some(first)
    }

    pub fn universal_vertices(&self) -> Vec<VertexId> {
        (0..self.n)
            .filter(|&v| self.adjacency[v].len() + 1 == self.n)
            .collect()
    }

    pub fn structure_flags(&self) -> StructureFlags {
        StructureFlags {
            connected: self.is_connected(),
            bipartite: self.bipartition().is_some(),
            regular_degree: self.regular_degree(),
            universal_vertices: self.universal_vertices(),
        }
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                best = best.max(d.ok_or(GraphError::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Largest degree sum over the vertices of any shortest path (a single
    /// vertex counts as a path).
    ///
    /// For each source the BFS layers form a DAG of shortest-path
    /// predecessors; the heaviest path into each vertex is its own degree plus
    /// the heaviest path into any predecessor.
    pub fn max_shortest_path_degree_sum(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let deg = self.degrees();
        let mut best = 0;
        for s in 0..self.n {
            let dist = self.bfs_distances(s);
            let mut order: Vec<VertexId> = Vec::with_capacity(self.n);
            for (v, d) in dist.iter().enumerate() {
                if d.is_none() {
                    return Err(GraphError::Disconnected);
                }
                order.push(v);
            }
            order.sort_by_key(|&v| dist[v]);
            let mut heaviest = vec![0usize; self.n];
            for &v in &order {
                let dv = dist[v].unwrap();
                let from_pred = self.adjacency[v]
                    .iter()
                    .filter(|&&(p, _)| dist[p].unwrap() + 1 == dv)
                    .map(|&(p, _)| heaviest[p])
                    .max()
                    .unwrap_or(0);
                heaviest[v] = deg[v] + from_pred;
                best = best.max(heaviest[v]);
            }
        }
        Ok(best)
    }

    /// If the graph is `K_{m,n}` with both sides non-empty, its part sizes
    /// `(m, n)` with `m` the side containing vertex 0.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        let sides = self.bipartition()?;
        let left = sides.iter().filter(|&&s| s == sides[0]).count();
        let right = self.n - left;
        if self.n == 0 || right == 0 || self.edges.len() != left * right {
            return None;
        }
        // a bipartite graph with exactly |L|·|R| edges has every cross pair
        Some((left, right))
    }
}
