//! Simple undirected graphs with optional rotation systems.
//!
//! A [`Graph`] stores, for every vertex, its neighbors as an ordered list.
//! When the graph is *embedded* that order is the rotation system (cyclic
//! order of the edges around the vertex in a fixed planar drawing) and faces
//! can be traced from it. Graphs produced by [`Graph::square`] or parsed
//! without a `rotations` section are not embedded; their neighbor lists are
//! kept sorted.

mod connectivity;
pub mod enumerate;
mod faces;
pub mod families;
pub mod io;
pub mod random;

use std::collections::VecDeque;

use thiserror::Error;

pub use faces::{Face, FaceMap};

/// Sentinel distance for vertex pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("adjacency is not symmetric at edge {{{0}, {1}}}")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph carries no rotation system")]
    NotEmbedded,
    #[error("rotation system is not planar: n - m + f = {euler}, expected 2")]
    NotPlanar { euler: i64 },
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not 3-edge-connected")]
    NotThreeEdgeConnected,
}

/// Simple undirected graph on vertices `0..n`, optionally embedded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    embedded: bool,
}

impl Graph {
    /// Edgeless, unembedded graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], embedded: false }
    }

    /// Builds an unembedded graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Builds an embedded graph whose rotation at `v` is `rotations[v]`.
    ///
    /// The rotation lists define the edge set; they must be symmetric and
    /// free of loops and repeated neighbors.
    pub fn from_rotations(rotations: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotations.len();
        for (v, list) in rotations.iter().enumerate() {
            for (i, &u) in list.iter().enumerate() {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: u, n });
                }
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if list[..i].contains(&u) {
                    return Err(GraphError::DuplicateEdge(v.min(u), v.max(u)));
                }
                if !rotations[u].contains(&v) {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { adj: rotations, embedded: true })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_embedded(&self) -> bool {
        self.embedded
    }

    /// Neighbors of `v`; in rotation order when embedded.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|l| l.len() == 3)
    }

    /// Returns a copy with the edge `{u, v}` added.
    ///
    /// On an embedded graph the new edge is appended to the end of both
    /// rotations; callers that care about planarity should build rotations
    /// directly with [`Graph::from_rotations`].
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        if !g.embedded {
            g.adj[u].sort_unstable();
            g.adj[v].sort_unstable();
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order. Surviving neighbors keep their relative rotation order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if index[v] != usize::MAX {
                return Err(GraphError::DuplicateVertex(v));
            }
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> =
                    self.adj[v].iter().filter(|&&u| index[u] != usize::MAX).map(|&u| index[u]).collect();
                if !self.embedded {
                    list.sort_unstable();
                }
                list
            })
            .collect();
        Ok(Graph { adj, embedded: self.embedded })
    }

    /// Hop distances from `source`; [`UNREACHABLE`] for other components.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if dist[u] == UNREACHABLE {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n();
        let mut dist = Vec::with_capacity(n * n);
        for v in 0..n {
            dist.extend(self.bfs(v));
        }
        DistanceMatrix { n, dist }
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// The square: same vertices, `{u, v}` an edge iff `1 <= dist(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut seen = vec![usize::MAX; n];
        for v in 0..n {
            seen[v] = v;
            for &u in &self.adj[v] {
                if seen[u] != v {
                    seen[u] = v;
                    adj[v].push(u);
                }
                for &w in &self.adj[u] {
                    if seen[w] != v {
                        seen[w] = v;
                        adj[v].push(w);
                    }
                }
            }
            adj[v].sort_unstable();
        }
        Graph { adj, embedded: false }
    }

    /// Smallest `k <= kmax` with a proper `k`-coloring, or `None` when the
    /// graph needs more than `kmax` colors.
    pub fn chromatic_number_upto(&self, kmax: usize) -> Option<usize> {
        if self.n() == 0 {
            return Some(0);
        }
        (1..=kmax).find(|&k| {
            let problem = crate::engine::ColorProblem::new(self.clone(), k, 0)
                .expect("t = 0 is always a valid prefix");
            matches!(crate::engine::extend(&problem, &[]), Ok(Some(_)))
        })
    }

    /// Minimum hop distance between a vertex of `a` and a vertex of `b`.
    pub fn face_distance(&self, a: &Face, b: &Face) -> u32 {
        let mut best = UNREACHABLE;
        for &u in &a.boundary {
            let dist = self.bfs(u);
            for &v in &b.boundary {
                best = best.min(dist[v]);
            }
            if best == 0 {
                break;
            }
        }
        best
    }

    /// Exact edge connectivity capped at `cap`; see [`Graph::is_3_edge_connected`].
    pub fn edge_connectivity_upto(&self, cap: usize) -> usize {
        connectivity::edge_connectivity_upto(self, cap)
    }

    pub fn is_3_edge_connected(&self) -> bool {
        self.n() >= 2 && self.edge_connectivity_upto(3) >= 3
    }

    /// Checks the structural invariants: simple and symmetric.
    pub fn validate(&self) -> Result<(), GraphError> {
        Graph::from_rotations(self.adj.clone()).map(|_| ())
    }

    pub(crate) fn rotations(&self) -> &[Vec<usize>] {
        &self.adj
    }
}

/// All-pairs hop distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

#[cfg(test)]
mod tests {
    use super::families::complete;
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn square_of_five_cycle_is_k5() {
        assert_eq!(cycle(5).square(), complete(5));
    }

    #[test]
    fn square_of_path_is_triangle() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.square(), complete(3));
    }

    #[test]
    fn square_of_k4_is_k4() {
        assert_eq!(complete(4).square(), complete(4));
    }

    #[test]
    fn induced_triangle_in_k4() {
        assert_eq!(complete(4).induced_subgraph(&[0, 1, 2]).unwrap(), complete(3));
    }

    #[test]
    fn add_edge_closes_path() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.add_edge(0, 2).unwrap(), complete(3));
    }

    #[test]
    fn add_edge_rejects_duplicates_and_loops() {
        let tri = complete(3);
        assert_eq!(tri.add_edge(0, 1), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(tri.add_edge(2, 2), Err(GraphError::SelfLoop(2)));
        assert!(matches!(tri.add_edge(0, 7), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn cubic_and_connectivity_predicates() {
        let k4 = complete(4);
        assert!(k4.is_cubic());
        assert!(k4.is_3_edge_connected());
        assert!(!cycle(5).is_cubic());
        assert_eq!(cycle(5).edge_connectivity_upto(3), 2);
        // two triangles joined by a bridge
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert!(!g.is_3_edge_connected());
        assert_eq!(g.edge_connectivity_upto(3), 1);
    }

    #[test]
    fn distance_matrix_basics() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let d = g.distance_matrix();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(2, 0), 2);
        assert_eq!(d.get(1, 1), 0);
        assert_eq!(d.get(0, 3), UNREACHABLE);
        assert!(!g.is_connected());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(complete(4).chromatic_number_upto(7), Some(4));
        assert_eq!(cycle(5).square().chromatic_number_upto(7), Some(5));
        assert_eq!(cycle(5).chromatic_number_upto(7), Some(3));
        assert_eq!(complete(8).chromatic_number_upto(7), None);
        assert_eq!(Graph::empty(3).chromatic_number_upto(7), Some(1));
    }

    #[test]
    fn from_rotations_rejects_asymmetry() {
        assert_eq!(Graph::from_rotations(vec![vec![1], vec![]]), Err(GraphError::Asymmetric(0, 1)));
    }
}
