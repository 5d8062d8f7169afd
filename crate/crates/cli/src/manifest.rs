use std::fmt;

/// Record of a run, written as `key=value` lines. Verdict and counter
/// lines depend only on the problem; timing lines are grouped at the end.
#[derive(Debug, Clone, Default)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<String>,
    pub k: usize,
    pub t: Option<usize>,
    pub root_depth: Option<usize>,
    pub jobs: usize,
    pub wall_secs: f64,
    pub cpu_secs: f64,
    /// One entry per verified instance: name, verdict, precolorings, nodes.
    pub results: Vec<(String, String, u64, u64)>,
}

impl fmt::Display for RunManifest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command={}", self.command)?;
        writeln!(f, "inputs={}", self.inputs.join(","))?;
        writeln!(f, "k={}", self.k)?;
        if let Some(t) = self.t {
            writeln!(f, "t={t}")?;
        }
        match self.root_depth {
            Some(d) => writeln!(f, "root_depth={d}")?,
            None => writeln!(f, "root_depth=auto")?,
        }
        writeln!(f, "jobs={}", self.jobs)?;
        for (name, verdict, pre, nodes) in &self.results {
            writeln!(f, "result {name} verdict={verdict} precolorings={pre} nodes={nodes}")?;
        }
        writeln!(f, "wall_secs={:.3}", self.wall_secs)?;
        writeln!(f, "cpu_secs={:.3}", self.cpu_secs)
    }
}
