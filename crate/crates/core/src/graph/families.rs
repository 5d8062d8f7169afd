//! Small named graphs with planar embeddings, used by tests, benchmarks
//! and the CLI smoke checks.

use super::Graph;

/// Embedded graph from a crossing-free straight-line drawing: the rotation
/// at each vertex is its neighbors sorted by angle.
pub fn from_drawing(points: &[(f64, f64)], edges: &[(usize, usize)]) -> Graph {
    let n = points.len();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for (v, list) in adj.iter_mut().enumerate() {
        let (x, y) = points[v];
        list.sort_by(|&a, &b| {
            let ta = (points[a].1 - y).atan2(points[a].0 - x);
            let tb = (points[b].1 - y).atan2(points[b].0 - x);
            ta.total_cmp(&tb)
        });
    }
    Graph::from_rotations(adj).expect("drawing edges form a simple graph")
}

fn ring(count: usize, radius: f64, offset: f64) -> impl Iterator<Item = (f64, f64)> {
    (0..count).map(move |i| {
        let t = offset + std::f64::consts::TAU * i as f64 / count as f64;
        (radius * t.cos(), radius * t.sin())
    })
}

/// Embedded cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    let points: Vec<_> = ring(n, 1.0, 0.0).collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    from_drawing(&points, &edges)
}

/// Tetrahedron: a center vertex inside a triangle.
pub fn k4() -> Graph {
    let mut points = vec![(0.0, 0.0)];
    points.extend(ring(3, 1.0, 0.0));
    from_drawing(&points, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)])
}

/// Prism over a `k`-cycle: two concentric `k`-cycles joined by spokes.
pub fn prism(k: usize) -> Graph {
    let mut points: Vec<_> = ring(k, 2.0, 0.0).collect();
    points.extend(ring(k, 1.0, 0.0));
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    from_drawing(&points, &edges)
}

pub fn cube() -> Graph {
    prism(4)
}

/// Dodecahedron drawn as four concentric rings of five.
pub fn dodecahedron() -> Graph {
    use std::f64::consts::PI;
    let mut points: Vec<_> = ring(5, 4.0, 0.0).collect(); // a: 0..5
    points.extend(ring(5, 3.0, 0.0)); // b: 5..10
    points.extend(ring(5, 2.0, PI / 5.0)); // c: 10..15
    points.extend(ring(5, 1.0, PI / 5.0)); // d: 15..20
    let mut edges = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        edges.push((i, j));
        edges.push((i, 5 + i));
        edges.push((5 + i, 10 + i));
        edges.push((10 + i, 5 + j));
        edges.push((10 + i, 15 + i));
        edges.push((15 + i, 15 + j));
    }
    from_drawing(&points, &edges)
}

/// Unembedded complete graph.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete graph is simple")
}

/// Star with `leaves` leaves; the center is the last vertex.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (0..leaves).map(|i| (i, leaves)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star is simple")
}
