//! Reducible configurations: notation, construction of the configuration
//! graph `F` with its white surroundings, the dashed and dash-dotted
//! augmentations, and the verification graph `J`.

mod augment;
mod build;
mod catalog;
mod spec;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use augment::{build_j, DashedCandidate, Instance};
pub use build::{build_configuration, build_configuration_with, Geodesic};
pub use catalog::{
    catalog, catalog_specs, default_root_depth, export_catalog, manifest_line, reduce, Attempt, Catalog,
    CatalogEntry, Reduction,
};
pub use spec::{ConfigSpec, RingEntry, SpecError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{0} is a family; expand it first")]
    NotExact(String),
    #[error("cannot realize {spec}: {reason}")]
    Unrealizable { spec: String, reason: String },
    #[error("configuration already carries augmentation edges")]
    AlreadyAugmented,
    #[error("dashed edge {0}-{1} is not a legal pair for this configuration")]
    IllegalDashed(usize, usize),
    #[error("dashed edges would give white vertex {0} degree above 3 once the configuration is removed")]
    DashedDegree(usize),
    #[error("dashed edges {0:?} and {1:?} cross")]
    DashedCrossing((usize, usize), (usize, usize)),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A configuration graph `F`: the black configuration `H` together with
/// the white vertices within distance 2 of it, plus any augmentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationGraph {
    spec: ConfigSpec,
    graph: Graph,
    is_black: Vec<bool>,
    inner_faces: Vec<Vec<usize>>,
    dashed: Vec<(usize, usize)>,
    dashdot: Vec<(usize, usize)>,
}

impl ConfigurationGraph {
    pub(crate) fn from_parts(spec: ConfigSpec, graph: Graph, is_black: Vec<bool>, inner_faces: Vec<Vec<usize>>) -> Self {
        ConfigurationGraph { spec, graph, is_black, inner_faces, dashed: Vec::new(), dashdot: Vec::new() }
    }

    pub fn spec(&self) -> &ConfigSpec {
        &self.spec
    }

    /// The embedded graph `F`, without augmentation edges.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_black(&self, v: usize) -> bool {
        self.is_black[v]
    }

    pub fn black(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.is_black[v]).collect()
    }

    pub fn white(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| !self.is_black[v]).collect()
    }

    /// White vertices adjacent to a black vertex.
    pub fn stems(&self) -> Vec<usize> {
        (0..self.graph.n())
            .filter(|&v| !self.is_black[v] && self.graph.neighbors(v).iter().any(|&u| self.is_black[u]))
            .collect()
    }

    /// White vertices of degree 1.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| !self.is_black[v] && self.graph.degree(v) == 1).collect()
    }

    pub fn n_black(&self) -> usize {
        self.is_black.iter().filter(|&&b| b).count()
    }

    pub fn n_white(&self) -> usize {
        self.graph.n() - self.n_black()
    }

    /// Boundaries of the central face and the listed faces (ring form), or
    /// of the two cycles (distance form).
    pub fn inner_faces(&self) -> &[Vec<usize>] {
        &self.inner_faces
    }

    /// The configuration `H` as an induced subgraph, with `H` vertex `i`
    /// being `black()[i]`.
    pub fn h(&self) -> Graph {
        self.graph.induced_subgraph(&self.black()).expect("black vertices are distinct and in range")
    }

    pub fn dashed_edges(&self) -> &[(usize, usize)] {
        &self.dashed
    }

    pub fn dashdot_edges(&self) -> &[(usize, usize)] {
        &self.dashdot
    }

    /// Black vertices within distance 2 of `v` in `F`.
    pub fn constrained_black(&self, v: usize) -> Vec<usize> {
        let dist = self.graph.bfs(v);
        (0..self.graph.n()).filter(|&u| self.is_black[u] && dist[u] <= 2).collect()
    }
}
