//! Random graph generators for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{families, Graph};

/// Random simple plane triangulation on `n >= 4` vertices: stacked
/// insertions into random faces of a tetrahedron, then random edge flips.
pub fn random_triangulation(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 4, "triangulations need at least 4 vertices");
    let mut rot: Vec<Vec<usize>> = families::k4().rotations().to_vec();
    while rot.len() < n {
        let g = Graph::from_rotations(rot.clone()).expect("insertions keep the graph simple");
        let faces = g.faces().expect("triangulation is plane");
        let f = &faces[rng.gen_range(0..faces.len())].boundary;
        let (u, v, w) = (f[0], f[1], f[2]);
        let x = rot.len();
        insert_after(&mut rot[v], u, x);
        insert_after(&mut rot[w], v, x);
        insert_after(&mut rot[u], w, x);
        rot.push(vec![v, u, w]);
    }
    for _ in 0..2 * n {
        let a = rng.gen_range(0..n);
        let b = rot[a][rng.gen_range(0..rot[a].len())];
        let c = after(&rot[b], a);
        let d = after(&rot[a], b);
        if rot[a].len() <= 3 || rot[b].len() <= 3 || c == d || rot[c].contains(&d) {
            continue;
        }
        rot[a].retain(|&y| y != b);
        rot[b].retain(|&y| y != a);
        insert_after(&mut rot[c], b, d);
        insert_after(&mut rot[d], a, c);
    }
    Graph::from_rotations(rot).expect("flips keep the graph simple")
}

fn after(list: &[usize], x: usize) -> usize {
    let i = list.iter().position(|&y| y == x).expect("neighbor present");
    list[(i + 1) % list.len()]
}

fn insert_after(list: &mut Vec<usize>, x: usize, new: usize) {
    let i = list.iter().position(|&y| y == x).expect("neighbor present");
    list.insert(i + 1, new);
}

/// Random 3-connected cubic plane graph with `faces` faces (and
/// `2 * faces - 4` vertices): the dual of a random triangulation.
pub fn random_cubic_planar(faces: usize, rng: &mut impl Rng) -> Graph {
    random_triangulation(faces, rng).dual().expect("duals of simple triangulations are simple")
}

/// Random unembedded graph on `n` vertices with maximum degree 3 and a
/// random number of edges.
pub fn random_subcubic(n: usize, rng: &mut impl Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let target = rng.gen_range(0..=3 * n / 2);
    let mut degree = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if edges.len() == target {
            break;
        }
        if degree[u] < 3 && degree[v] < 3 {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("pairs are distinct")
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn triangulations_are_plane_and_triangular() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 4..20 {
            let g = random_triangulation(n, &mut rng);
            assert_eq!(g.n(), n);
            assert_eq!(g.edge_count(), 3 * n - 6);
            assert!(g.faces().unwrap().iter().all(|f| f.len() == 3));
        }
    }

    #[test]
    fn cubic_duals_are_three_edge_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for faces in 4..24 {
            let g = random_cubic_planar(faces, &mut rng);
            assert_eq!(g.n(), 2 * faces - 4);
            assert!(g.is_cubic());
            assert!(g.is_3_edge_connected());
            assert_eq!(g.faces().unwrap().len(), faces);
        }
    }

    #[test]
    fn subcubic_generator_respects_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..13 {
            assert!(random_subcubic(n, &mut rng).is_subcubic());
        }
    }
}
