use std::fs;
use std::io;
use std::path::Path;

use super::{build_configuration, build_j, ConfigSpec, ConfigurationGraph};
use crate::engine::{verify_all, EngineError, VerificationResult, VerifyOptions};
use crate::graph::io::{format_graph, format_problem, ProblemHeader};

/// The exact configurations whose reducibility the proof relies on.
pub fn catalog_specs() -> Vec<ConfigSpec> {
    ["3c6m", "3D3-3", "3D3-4", "4D3-4", "4c4", "4c55", "4c56", "4c66", "4c5*5", "4c5*6", "4c6*6", "5c4*5", "5c56", "5c66",
        "5c5*5", "5c55*6", "7c3*5", "7c3**5", "7c4*5", "7c4**5", "7c55*5", "8c3*55*55"]
        .iter()
        .flat_map(|s| s.parse::<ConfigSpec>().expect("catalog names parse").expand())
        .collect()
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: ConfigSpec,
    pub config: ConfigurationGraph,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.spec.to_string() == name)
    }
}

/// Plain materializations of every catalog entry.
pub fn catalog() -> Catalog {
    let entries = catalog_specs()
        .into_iter()
        .map(|spec| {
            let config = build_configuration(&spec).expect("catalog configurations are realizable");
            CatalogEntry { spec, config }
        })
        .collect();
    Catalog { entries }
}

/// Root depth used when none is requested: small instances run as one
/// piece, large ones are split so progress is visible and work can be
/// spread across threads.
pub fn default_root_depth(n_white: usize) -> usize {
    match n_white {
        0..=14 => 0,
        15..=20 => 2,
        _ => 3,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attempt {
    pub dashed: Vec<(usize, usize)>,
    pub dashdot: bool,
    pub result: VerificationResult,
}

#[derive(Debug, Clone)]
pub struct Reduction {
    /// The augmented configuration of the last attempt.
    pub config: ConfigurationGraph,
    pub attempts: Vec<Attempt>,
}

impl Reduction {
    pub fn result(&self) -> &VerificationResult {
        &self.attempts.last().expect("at least one attempt").result
    }

    pub fn is_reducible(&self) -> bool {
        self.result().is_all_extendable()
    }
}

fn attempt(cfg: &ConfigurationGraph, k: usize, opts: &VerifyOptions<'_>) -> Result<Attempt, EngineError> {
    let result = verify_all(&build_j(cfg).problem(k)?, opts)?;
    Ok(Attempt { dashed: cfg.dashed_edges().to_vec(), dashdot: !cfg.dashdot_edges().is_empty(), result })
}

/// Verifies `cfg` plain (with dash-dotted edges), then on failure with
/// each legal dashed set in turn (without dash-dotted edges), stopping at
/// the first success or after `max_attempts` attempts.
pub fn reduce(
    cfg: &ConfigurationGraph,
    k: usize,
    opts: &VerifyOptions<'_>,
    max_attempts: usize,
) -> Result<Reduction, EngineError> {
    let plain = cfg.add_dashdot_edges().expect("fresh configurations take dash-dotted edges");
    let first = attempt(&plain, k, opts)?;
    let mut reduction = Reduction { config: plain, attempts: vec![first] };
    if reduction.is_reducible() {
        return Ok(reduction);
    }
    for pairs in cfg.dashed_options() {
        if reduction.attempts.len() >= max_attempts {
            break;
        }
        let augmented = cfg.add_dashed_edges(&pairs).expect("options are legal dashed sets");
        let a = attempt(&augmented, k, opts)?;
        reduction.config = augmented;
        reduction.attempts.push(a);
        if reduction.is_reducible() {
            break;
        }
    }
    Ok(reduction)
}

/// `<spec> <n_black> <n_white> <dashed?> <dashdot?>`
pub fn manifest_line(cfg: &ConfigurationGraph) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    format!(
        "{} {} {} {} {}",
        cfg.spec(),
        cfg.n_black(),
        cfg.n_white(),
        yn(!cfg.dashed_edges().is_empty()),
        yn(!cfg.dashdot_edges().is_empty())
    )
}

/// File stem for a spec; `*` becomes `x`.
fn file_stem(spec: &ConfigSpec) -> String {
    spec.to_string().replace('*', "x")
}

/// Writes `<name>.graph` (the embedded `F`) and `<name>.j` (the `k`-color
/// instance `J` with its white prefix) per configuration, plus
/// `manifest.txt`.
pub fn export_catalog(dir: &Path, configs: &[ConfigurationGraph], k: usize) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut manifest = String::new();
    for cfg in configs {
        let stem = file_stem(cfg.spec());
        fs::write(dir.join(format!("{stem}.graph")), format_graph(cfg.graph()))?;
        let inst = build_j(cfg);
        fs::write(dir.join(format!("{stem}.j")), format_problem(ProblemHeader { k, t: inst.t }, &inst.graph))?;
        manifest.push_str(&manifest_line(cfg));
        manifest.push('\n');
    }
    fs::write(dir.join("manifest.txt"), manifest)
}
