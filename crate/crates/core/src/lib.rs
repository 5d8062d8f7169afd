//! Mechanical verification that the square of every subcubic planar graph
//! is 7-colorable: reducible configurations built from their face notation,
//! an exact precoloring-extension search proving them reducible, and a
//! discharging checker showing the configuration set is unavoidable.

pub mod graph;
pub mod engine;
pub mod config;
pub mod discharge;

pub use engine::{
    brute_force_oracle, enumerate_precolorings, extend, partition_by_root, verify_all, Color, ColorProblem,
    EngineError, RootColoring, Stats, VerificationResult, Verdict, VerifyOptions,
};
pub use graph::{DistanceMatrix, Face, Graph, GraphError};
