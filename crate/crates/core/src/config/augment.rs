use std::collections::BTreeSet;

use super::{ConfigError, ConfigurationGraph};
use crate::engine::{ColorProblem, EngineError};
use crate::graph::Graph;

/// A pair of `H`-degree-2 boundary vertices `v_i`, `v_k` two or three
/// steps apart along an outer walk of `H` with exactly one `H`-degree-2
/// vertex strictly between; their white neighbors may be joined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DashedCandidate {
    pub black: (usize, usize),
    pub white: (usize, usize),
    walk: usize,
    start: usize,
    len: usize,
}

impl DashedCandidate {
    fn positions(&self, walk_len: usize) -> impl Iterator<Item = usize> + '_ {
        (0..=self.len).map(move |i| (self.start + i) % walk_len)
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl ConfigurationGraph {
    /// One boundary walk per component of `H`: the face walk whose corners
    /// hold the most white neighbors, that is, the side the white vertices
    /// are drawn on.
    pub fn outer_walks(&self) -> Vec<Vec<usize>> {
        self.corner_walks().into_iter().map(|w| w.into_iter().map(|(v, _)| v).collect()).collect()
    }

    /// Outer walks with, at each position, the white neighbor sitting in
    /// that corner of the walk, if any.
    fn corner_walks(&self) -> Vec<Vec<(usize, Option<usize>)>> {
        let black = self.black();
        let h = self.h();
        let map = h.trace_faces().expect("configuration graphs are embedded");
        let mut component = vec![usize::MAX; h.n()];
        let mut count = 0;
        for s in 0..h.n() {
            if component[s] != usize::MAX {
                continue;
            }
            for (v, d) in h.bfs(s).iter().enumerate() {
                if *d != u32::MAX {
                    component[v] = count;
                }
            }
            count += 1;
        }
        let mut best: Vec<Option<(usize, Vec<(usize, Option<usize>)>)>> = vec![None; count];
        for face in &map.faces {
            let Some(&first) = face.boundary.first() else { continue };
            let s = face.boundary.len();
            let walk: Vec<(usize, Option<usize>)> = (0..s)
                .map(|p| {
                    let v = black[face.boundary[p]];
                    let prev = black[face.boundary[(p + s - 1) % s]];
                    (v, self.corner_white(v, prev))
                })
                .collect();
            let open = walk.iter().filter(|(_, w)| w.is_some()).count();
            let slot = &mut best[component[first]];
            if slot.as_ref().is_none_or(|(o, _)| open > *o) {
                *slot = Some((open, walk));
            }
        }
        best.into_iter().map(|b| b.expect("every component has a face").1).collect()
    }

    /// The white neighbor of `v` following `prev` in the rotation at `v`,
    /// which is the one in the face corner entered from `prev`.
    fn corner_white(&self, v: usize, prev: usize) -> Option<usize> {
        let rot = self.graph.neighbors(v);
        if rot.len() == 1 {
            return None;
        }
        let i = rot.iter().position(|&u| u == prev).expect("walk follows edges");
        let next = rot[(i + 1) % rot.len()];
        (!self.is_black[next]).then_some(next)
    }

    /// Legal dashed pairs, deduplicated by their white ends, in walk order.
    /// Positions count as degree-2 boundary vertices when a white neighbor
    /// sits in their corner of the walk.
    pub fn dashed_candidates(&self) -> Vec<DashedCandidate> {
        let mut out: Vec<DashedCandidate> = Vec::new();
        for (wi, walk) in self.corner_walks().iter().enumerate() {
            let s = walk.len();
            let open = |p: usize| walk[p % s].1;
            for start in 0..s {
                let Some(wi_white) = open(start) else { continue };
                for len in 2..=3usize {
                    if len >= s {
                        continue;
                    }
                    let Some(wk_white) = open(start + len) else { continue };
                    let inside = (1..len).filter(|&i| open(start + i).is_some()).count();
                    let (vi, vk) = (walk[start].0, walk[(start + len) % s].0);
                    if inside != 1 || vi == vk {
                        continue;
                    }
                    let white = ordered(wi_white, wk_white);
                    if white.0 == white.1 || out.iter().any(|c| c.white == white) {
                        continue;
                    }
                    out.push(DashedCandidate { black: (vi, vk), white, walk: wi, start, len });
                }
            }
        }
        out
    }

    fn check_dashed(&self, chosen: &[&DashedCandidate]) -> Result<(), ConfigError> {
        let walks = self.corner_walks();
        let mut uses = vec![0usize; self.graph.n()];
        for (i, a) in chosen.iter().enumerate() {
            for w in [a.white.0, a.white.1] {
                uses[w] += 1;
                if uses[w] > self.h_degree_of_white(w) {
                    return Err(ConfigError::DashedDegree(w));
                }
            }
            for b in &chosen[..i] {
                if a.white == b.white {
                    return Err(ConfigError::IllegalDashed(a.white.0, a.white.1));
                }
                if a.walk == b.walk {
                    let s = walks[a.walk].len();
                    let pa: BTreeSet<usize> = a.positions(s).collect();
                    if b.positions(s).any(|p| pa.contains(&p)) {
                        return Err(ConfigError::DashedCrossing(b.white, a.white));
                    }
                }
            }
        }
        Ok(())
    }

    // black neighbors of a white vertex: the edges it loses when H is removed
    fn h_degree_of_white(&self, w: usize) -> usize {
        self.graph.neighbors(w).iter().filter(|&&u| self.is_black[u]).count()
    }

    /// Joins the given white pairs with dashed edges. Each pair must be a
    /// candidate; together they must keep `D` subcubic and planar.
    pub fn add_dashed_edges(&self, pairs: &[(usize, usize)]) -> Result<ConfigurationGraph, ConfigError> {
        if !self.dashed.is_empty() || !self.dashdot.is_empty() {
            return Err(ConfigError::AlreadyAugmented);
        }
        let candidates = self.dashed_candidates();
        let mut chosen = Vec::new();
        for &(u, v) in pairs {
            let key = ordered(u, v);
            let c = candidates.iter().find(|c| c.white == key).ok_or(ConfigError::IllegalDashed(u, v))?;
            chosen.push(c);
        }
        self.check_dashed(&chosen)?;
        let mut out = self.clone();
        out.dashed = chosen.iter().map(|c| c.white).collect();
        out.dashed.sort_unstable();
        Ok(out)
    }

    /// Every legal non-empty dashed set, smallest first and
    /// lexicographic by candidate index within a size.
    pub fn dashed_options(&self) -> Vec<Vec<(usize, usize)>> {
        let candidates = self.dashed_candidates();
        let c = candidates.len();
        let mut out = Vec::new();
        for size in 1..=c {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let chosen: Vec<&DashedCandidate> = idx.iter().map(|&i| &candidates[i]).collect();
                if self.check_dashed(&chosen).is_ok() {
                    out.push(chosen.iter().map(|c| c.white).collect());
                }
                // next combination
                let mut i = size;
                while i > 0 && idx[i - 1] == c - size + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                idx[i - 1] += 1;
                for j in i..size {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        out
    }

    /// Adds an edge from each white leaf to each white non-leaf that is
    /// within distance 2 of every black vertex the leaf constrains, unless
    /// they are already adjacent in the square.
    pub fn add_dashdot_edges(&self) -> Result<ConfigurationGraph, ConfigError> {
        if !self.dashed.is_empty() || !self.dashdot.is_empty() {
            return Err(ConfigError::AlreadyAugmented);
        }
        let dist = self.graph.distance_matrix();
        let leaves = self.leaves();
        let others: Vec<usize> = self.white().into_iter().filter(|v| !leaves.contains(v)).collect();
        let mut edges = Vec::new();
        for &leaf in &leaves {
            let anchors = self.constrained_black(leaf);
            for &v in &others {
                if dist.get(leaf, v) > 2 && anchors.iter().all(|&b| dist.get(v, b) <= 2) {
                    edges.push(ordered(leaf, v));
                }
            }
        }
        edges.sort_unstable();
        let mut out = self.clone();
        out.dashdot = edges;
        Ok(out)
    }

    /// For each stem's group of leaves, the number of white non-leaves
    /// adjacent in `J` to some leaf of the group: the colors a recoloring
    /// of the group must avoid.
    pub fn leaf_group_forbidden(&self) -> Vec<usize> {
        let j = self.j_edges();
        let leaves = self.leaves();
        let mut out = Vec::new();
        for s in self.white() {
            let group: Vec<usize> = self.graph.neighbors(s).iter().copied().filter(|v| leaves.contains(v)).collect();
            if group.is_empty() {
                continue;
            }
            let forbidden: BTreeSet<usize> = group
                .iter()
                .flat_map(|&l| j.neighbors(l).iter().copied())
                .filter(|&v| !self.is_black[v] && !leaves.contains(&v))
                .collect();
            out.push(forbidden.len());
        }
        out
    }

    /// `J` on the configuration's own vertex numbering.
    pub fn j_edges(&self) -> Graph {
        let mut edges: BTreeSet<(usize, usize)> = self.graph.square().edges().into_iter().collect();
        for &(u, w) in &self.dashed {
            edges.insert((u, w));
            for (a, b) in [(u, w), (w, u)] {
                for &x in self.graph.neighbors(a) {
                    if !self.is_black[x] && x != b {
                        edges.insert(ordered(x, b));
                    }
                }
            }
        }
        edges.extend(self.dashdot.iter().copied());
        let edges: Vec<_> = edges.into_iter().collect();
        Graph::from_edges(self.graph.n(), &edges).expect("edges of J are simple")
    }

    /// Order fed to the engine: white non-leaves, then leaves with twins
    /// adjacent, then black vertices. Leaf groups whose black neighbors
    /// are pairwise far apart (no common neighbor) go last, so the engine
    /// can settle them together.
    pub fn vertex_order(&self) -> Vec<usize> {
        let leaves = self.leaves();
        let mut order: Vec<usize> = self.white().into_iter().filter(|v| !leaves.contains(v)).collect();
        let groups: Vec<(usize, Vec<usize>)> = order
            .iter()
            .filter_map(|&s| {
                let group: Vec<usize> = self.graph.neighbors(s).iter().copied().filter(|v| leaves.contains(v)).collect();
                (!group.is_empty()).then_some((s, group))
            })
            .collect();
        let dist = self.graph.distance_matrix();
        let anchors: Vec<Vec<usize>> = groups.iter().map(|(_, g)| self.constrained_black(g[0])).collect();
        let mut spread: Vec<usize> = Vec::new();
        for i in (0..groups.len()).rev() {
            let far = spread
                .iter()
                .all(|&j| anchors[i].iter().all(|&a| anchors[j].iter().all(|&b| dist.get(a, b) > 2)));
            if far {
                spread.push(i);
            }
        }
        for (i, (_, group)) in groups.iter().enumerate() {
            if !spread.contains(&i) {
                order.extend(group);
            }
        }
        for (i, (_, group)) in groups.iter().enumerate() {
            if spread.contains(&i) {
                order.extend(group);
            }
        }
        order.extend(self.black());
        order
    }
}

/// The verification instance: `J` relabeled so the white vertices form the
/// prefix `0..t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub t: usize,
    /// `order[i]` is the configuration vertex placed at position `i`.
    pub order: Vec<usize>,
}

impl Instance {
    pub fn problem(&self, k: usize) -> Result<ColorProblem, EngineError> {
        ColorProblem::new(self.graph.clone(), k, self.t)
    }
}

pub fn build_j(cfg: &ConfigurationGraph) -> Instance {
    let order = cfg.vertex_order();
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<(usize, usize)> = cfg.j_edges().edges().into_iter().map(|(u, v)| ordered(pos[u], pos[v])).collect();
    let graph = Graph::from_edges(order.len(), &edges).expect("relabeling keeps J simple");
    Instance { graph, t: cfg.n_white(), order }
}
