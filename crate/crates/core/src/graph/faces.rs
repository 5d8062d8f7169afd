use super::{Graph, GraphError};

/// A face traced from the rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Vertices in walk order; `boundary[i] -> boundary[i + 1]` are the
    /// darts of the face (cyclically).
    pub boundary: Vec<usize>,
}

impl Face {
    /// Number of edge sides on the boundary walk.
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// True when no vertex repeats along the walk.
    pub fn is_cycle(&self) -> bool {
        let mut seen = self.boundary.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn darts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.boundary.len();
        (0..len).map(move |i| (self.boundary[i], self.boundary[(i + 1) % len]))
    }
}

/// Faces of an embedded graph together with the dart-to-face assignment.
#[derive(Debug, Clone)]
pub struct FaceMap {
    pub faces: Vec<Face>,
    // face_of[v][i]: face containing the dart v -> rotation(v)[i]
    face_of: Vec<Vec<usize>>,
    rotation_index: Vec<Vec<usize>>,
}

impl FaceMap {
    /// Face lying on the dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> usize {
        self.face_of[u][self.rotation_index[u][v]]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

impl Graph {
    /// Traces every face walk. The dart following `u -> v` is
    /// `v -> w` where `w` is the successor of `u` in the rotation at `v`.
    ///
    /// No planarity check is made; see [`Graph::faces`].
    pub fn trace_faces(&self) -> Result<FaceMap, GraphError> {
        if !self.embedded {
            return Err(GraphError::NotEmbedded);
        }
        let n = self.n();
        let rot = self.rotations();
        // position of each neighbor within v's rotation, indexed by neighbor id
        let mut rotation_index = vec![Vec::new(); n];
        for v in 0..n {
            let mut idx = vec![usize::MAX; n];
            for (i, &u) in rot[v].iter().enumerate() {
                idx[u] = i;
            }
            rotation_index[v] = idx;
        }
        let mut face_of: Vec<Vec<usize>> = rot.iter().map(|l| vec![usize::MAX; l.len()]).collect();
        let mut faces = Vec::new();
        for start in 0..n {
            for si in 0..rot[start].len() {
                if face_of[start][si] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut boundary = Vec::new();
                let (mut u, mut i) = (start, si);
                while face_of[u][i] == usize::MAX {
                    face_of[u][i] = id;
                    boundary.push(u);
                    let v = rot[u][i];
                    let back = rotation_index[v][u];
                    let next = (back + 1) % rot[v].len();
                    u = v;
                    i = next;
                }
                faces.push(Face { boundary });
            }
        }
        if faces.is_empty() && n > 0 {
            faces.push(Face { boundary: Vec::new() });
        }
        Ok(FaceMap { faces, face_of, rotation_index })
    }

    /// Faces of a connected plane graph; the rotation system must satisfy
    /// Euler's formula `n - m + f = 2`.
    pub fn face_map(&self) -> Result<FaceMap, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let map = self.trace_faces()?;
        let euler = self.n() as i64 - self.edge_count() as i64 + map.len() as i64;
        if euler != 2 {
            return Err(GraphError::NotPlanar { euler });
        }
        Ok(map)
    }

    pub fn faces(&self) -> Result<Vec<Face>, GraphError> {
        self.face_map().map(|m| m.faces)
    }

    /// The plane dual: one vertex per face (in [`Graph::faces`] order),
    /// adjacent across each edge, with rotations following the face walks.
    /// Fails when the dual has loops or parallel edges.
    pub fn dual(&self) -> Result<Graph, GraphError> {
        let map = self.face_map()?;
        let rotations =
            map.faces.iter().map(|f| f.darts().map(|(u, v)| map.face_of_dart(v, u)).collect()).collect();
        Graph::from_rotations(rotations)
    }
}

#[cfg(test)]
mod tests {
    use super::super::families;
    use super::*;

    fn lengths(g: &Graph) -> Vec<usize> {
        let mut l: Vec<_> = g.faces().unwrap().iter().map(Face::len).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn platonic_face_censuses() {
        assert_eq!(lengths(&families::k4()), vec![3; 4]);
        assert_eq!(lengths(&families::cube()), vec![4; 6]);
        assert_eq!(lengths(&families::dodecahedron()), vec![5; 12]);
    }

    #[test]
    fn prism_faces() {
        let mut expect = vec![4; 6];
        expect.extend([6, 6]);
        assert_eq!(lengths(&families::prism(6)), expect);
    }

    #[test]
    fn face_distances() {
        let k4 = families::k4();
        let f = k4.faces().unwrap();
        assert_eq!(k4.face_distance(&f[0], &f[1]), 0);
        assert_eq!(k4.face_distance(&f[2], &f[2]), 0);

        let cube = families::cube();
        let faces = cube.faces().unwrap();
        // the two faces sharing no vertex are the top and bottom squares
        let mut found = false;
        for a in &faces {
            for b in &faces {
                if a.boundary.iter().all(|v| !b.boundary.contains(v)) {
                    assert_eq!(cube.face_distance(a, b), 1);
                    assert_eq!(cube.face_distance(b, a), 1);
                    found = true;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn rejects_disconnected_and_unembedded() {
        let g = Graph::from_rotations(vec![vec![1], vec![0], vec![3], vec![2]]).unwrap();
        assert_eq!(g.faces(), Err(GraphError::Disconnected));
        let plain = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(plain.faces(), Err(GraphError::NotEmbedded));
    }

    #[test]
    fn nonplanar_rotation_detected() {
        // K4 with one rotation reversed has a single extra-long face walk
        let k4 = families::k4();
        let mut rot: Vec<Vec<usize>> = k4.rotations().to_vec();
        rot[0].reverse();
        let g = Graph::from_rotations(rot).unwrap();
        assert!(matches!(g.faces(), Err(GraphError::NotPlanar { .. })));
    }

    #[test]
    fn duals_of_platonic_graphs() {
        let octahedron = families::cube().dual().unwrap();
        assert_eq!(octahedron.n(), 6);
        assert!((0..6).all(|v| octahedron.degree(v) == 4));
        assert_eq!(lengths(&octahedron), vec![3; 8]);
        let icosahedron = families::dodecahedron().dual().unwrap();
        assert_eq!(lengths(&icosahedron), vec![3; 20]);
        assert_eq!(lengths(&icosahedron.dual().unwrap()), vec![5; 12]);
        // a cycle's dual has a double edge
        assert!(families::cycle(4).dual().is_err());
    }

    #[test]
    fn single_vertex_has_one_face() {
        let g = Graph::from_rotations(vec![vec![]]).unwrap();
        assert_eq!(g.faces().unwrap().len(), 1);
    }
}
