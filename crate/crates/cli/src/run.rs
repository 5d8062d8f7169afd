use std::error::Error;
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use square7::config::{
    build_configuration, catalog_specs, default_root_depth, export_catalog, reduce, ConfigSpec, ConfigurationGraph,
    Reduction,
};
use square7::discharge::{check_large_faces, check_unavoidability, min_final_charge, FaceClass, RuleSet};
use square7::engine::{RootProgress, VerifyOptions};
use square7::graph::enumerate::complete_square_graphs;
use square7::graph::io::{format_graph, parse_graph, parse_problem};
use square7::{verify_all as engine_verify_all, ColorProblem, RootColoring};

use crate::manifest::RunManifest;
use crate::{EngineFlags, Outcome};

type Result<T> = std::result::Result<T, Box<dyn Error>>;

fn jobs(flags: &EngineFlags) -> usize {
    flags.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())).max(1)
}

/// Sums worker time over finished roots and prints progress to stderr
/// at most every few seconds.
struct Progress {
    label: Mutex<String>,
    busy_nanos: AtomicU64,
    last: Mutex<Instant>,
    quiet: bool,
}

impl Progress {
    fn new(quiet: bool) -> Self {
        Progress { label: Mutex::new(String::new()), busy_nanos: AtomicU64::new(0), last: Mutex::new(Instant::now()), quiet }
    }

    fn report(&self, p: RootProgress) {
        self.busy_nanos.fetch_add(p.elapsed.as_nanos() as u64, Ordering::Relaxed);
        if self.quiet {
            return;
        }
        let mut last = self.last.lock().expect("progress lock");
        if last.elapsed() >= Duration::from_secs(5) || p.index + 1 == p.total {
            *last = Instant::now();
            let label = self.label.lock().expect("progress lock");
            eprintln!("[{label}] root {}/{} done, {} precolorings", p.index + 1, p.total, p.stats.precolorings);
        }
    }

    fn busy(&self) -> Duration {
        Duration::from_nanos(self.busy_nanos.load(Ordering::Relaxed))
    }
}

struct Verified {
    reduction: Reduction,
    cpu: Duration,
}

fn reduce_config(
    cfg: &ConfigurationGraph,
    k: usize,
    max_attempts: usize,
    flags: &EngineFlags,
    progress: &Progress,
) -> Result<Verified> {
    *progress.label.lock().expect("progress lock") = cfg.spec().to_string();
    let before = progress.busy();
    let report = |p: RootProgress| progress.report(p);
    let opts = VerifyOptions {
        root_depth: flags.root_depth.unwrap_or_else(|| default_root_depth(cfg.n_white())),
        jobs: jobs(flags),
        tail_blocks: flags.tail_blocks,
        progress: Some(&report),
        ..VerifyOptions::default()
    };
    let reduction = reduce(cfg, k, &opts, max_attempts)?;
    Ok(Verified { reduction, cpu: progress.busy() - before })
}

fn dashed_text(pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        return "none".to_string();
    }
    pairs.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verify(spec_text: &str, k: usize, max_attempts: usize, flags: &EngineFlags) -> Result<Outcome> {
    let spec: ConfigSpec = spec_text.parse()?;
    let start = Instant::now();
    let progress = Progress::new(flags.quiet);
    let mut manifest = RunManifest {
        command: "verify".to_string(),
        inputs: vec![spec_text.to_string()],
        k,
        root_depth: flags.root_depth,
        jobs: jobs(flags),
        ..RunManifest::default()
    };
    let mut code = 0;
    for member in spec.expand() {
        let cfg = build_configuration(&member)?;
        let v = reduce_config(&cfg, k, max_attempts, flags, &progress)?;
        println!("CONFIG {member} black={} white={}", cfg.n_black(), cfg.n_white());
        for (i, a) in v.reduction.attempts.iter().enumerate() {
            println!("ATTEMPT {} dashed={} dashdot={} {}", i + 1, dashed_text(&a.dashed), yes_no(a.dashdot), a.result.verdict);
        }
        let result = v.reduction.result();
        print!("{}", result.report());
        if !result.is_all_extendable() {
            code = 1;
        }
        manifest.results.push((
            member.to_string(),
            result.verdict.to_string(),
            result.stats.precolorings,
            result.stats.nodes,
        ));
        if !flags.quiet {
            eprintln!("[{member}] {:.2}s cpu", v.cpu.as_secs_f64());
        }
    }
    manifest.wall_secs = start.elapsed().as_secs_f64();
    manifest.cpu_secs = progress.busy().as_secs_f64();
    Ok(Outcome { code, manifest: Some(manifest) })
}

pub fn verify_all(k: usize, only: &[String], max_attempts: usize, flags: &EngineFlags) -> Result<Outcome> {
    let catalog = catalog_specs();
    let mut selected = Vec::new();
    for name in only {
        let spec: ConfigSpec = name.parse()?;
        for member in spec.expand() {
            if !catalog.contains(&member) {
                return Err(format!("{member} is not in the catalog").into());
            }
            selected.push(member);
        }
    }
    let specs: Vec<ConfigSpec> =
        if selected.is_empty() { catalog } else { catalog.into_iter().filter(|s| selected.contains(s)).collect() };
    let start = Instant::now();
    let progress = Progress::new(flags.quiet);
    let mut manifest = RunManifest {
        command: "verify-all".to_string(),
        inputs: specs.iter().map(|s| s.to_string()).collect(),
        k,
        root_depth: flags.root_depth,
        jobs: jobs(flags),
        ..RunManifest::default()
    };
    println!(
        "{:<10} {:>5} {:>5} {:<12} {:>16} {:>14} {:>10} VERDICT",
        "CONFIG", "WHITE", "BLACK", "DASHED", "PRECOLORINGS", "NODES", "CPU_S"
    );
    let mut failed = 0;
    for spec in &specs {
        let cfg = build_configuration(spec)?;
        let v = reduce_config(&cfg, k, max_attempts, flags, &progress)?;
        let result = v.reduction.result();
        let pass = result.is_all_extendable();
        failed += usize::from(!pass);
        println!(
            "{:<10} {:>5} {:>5} {:<12} {:>16} {:>14} {:>10.2} {}",
            spec.to_string(),
            cfg.n_white(),
            cfg.n_black(),
            dashed_text(v.reduction.config.dashed_edges()),
            result.stats.precolorings,
            result.stats.nodes,
            v.cpu.as_secs_f64(),
            if pass { "PASS" } else { "FAIL" }
        );
        if let Some(cex) = &result.counterexample {
            println!("  CEX {}", cex.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        }
        manifest.results.push((spec.to_string(), result.verdict.to_string(), result.stats.precolorings, result.stats.nodes));
    }
    println!("SUMMARY configurations={} passed={} failed={failed}", specs.len(), specs.len() - failed);
    manifest.wall_secs = start.elapsed().as_secs_f64();
    manifest.cpu_secs = progress.busy().as_secs_f64();
    Ok(Outcome { code: u8::from(failed > 0), manifest: Some(manifest) })
}

pub fn precolor_extend(
    file: &Path,
    k: Option<usize>,
    t: Option<usize>,
    root: Option<&str>,
    flags: &EngineFlags,
) -> Result<Outcome> {
    let text = fs::read_to_string(file)?;
    let has_header = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).is_some_and(|l| l.starts_with("k="));
    let (k, t, graph) = if has_header {
        let (header, graph) = parse_problem(&text)?;
        (k.unwrap_or(header.k), t.unwrap_or(header.t), graph)
    } else {
        let graph = parse_graph(&text)?;
        match (k, t) {
            (Some(k), Some(t)) => (k, t, graph),
            _ => return Err("file has no k=/t= header; pass -k and -t".into()),
        }
    };
    let problem = ColorProblem::new(graph, k, t)?;
    let root: Option<RootColoring> = root.map(str::parse).transpose()?;
    let start = Instant::now();
    let progress = Progress::new(flags.quiet);
    *progress.label.lock().expect("progress lock") = file.display().to_string();
    let report = |p: RootProgress| progress.report(p);
    let opts = VerifyOptions {
        root,
        root_depth: flags.root_depth.unwrap_or(0),
        jobs: jobs(flags),
        tail_blocks: flags.tail_blocks,
        progress: Some(&report),
        ..VerifyOptions::default()
    };
    let result = engine_verify_all(&problem, &opts)?;
    print!("{}", result.report());
    let manifest = RunManifest {
        command: "precolor-extend".to_string(),
        inputs: vec![file.display().to_string()],
        k,
        t: Some(t),
        root_depth: flags.root_depth,
        jobs: opts.jobs,
        wall_secs: start.elapsed().as_secs_f64(),
        cpu_secs: progress.busy().as_secs_f64(),
        results: vec![(file.display().to_string(), result.verdict.to_string(), result.stats.precolorings, result.stats.nodes)],
    };
    Ok(Outcome { code: u8::from(!result.is_all_extendable()), manifest: Some(manifest) })
}

pub fn discharge_check(r_max: usize, drop: &[String]) -> Result<Outcome> {
    if r_max < 9 {
        return Err("--max must be at least 9".into());
    }
    let mut rules = RuleSet::full();
    for name in drop {
        rules.drop_rule(name)?;
    }
    println!("# rules R1-R3: a 7+-face gives 1, 2/3, 1/3 to each adjacent 3-, 4-, 5-face");
    println!("# exclusions: {} of {} catalog configurations active", rules.active_names().len(), rules.rules().len());
    println!("# each exclusion is a hand-encoded local consequence of its configuration; the encoding itself is not machine-proved");
    let small = check_unavoidability(3..=8, &rules);
    print!("{small}");
    let no_small = |s: &square7::discharge::ChargeScenario| s.count(FaceClass::L3) == 0 && s.count(FaceClass::L4) == 0;
    if let Some((c, _)) = min_final_charge(8, &rules, no_small) {
        println!("L=8 without adjacent 4- faces min_charge={}/{}", c.numer(), c.denom());
    }
    let large = check_large_faces(r_max, &rules);
    print!("{large}");
    let pass = small.pass() && large.pass();
    println!("RESULT {}", if pass { "PASS" } else { "FAIL" });
    Ok(Outcome { code: u8::from(!pass), manifest: None })
}

pub fn square(file: &Path) -> Result<Outcome> {
    let g = parse_graph(&fs::read_to_string(file)?)?;
    print!("{}", format_graph(&g.square()));
    Ok(Outcome { code: 0, manifest: None })
}

pub fn chi(file: &Path, kmax: usize) -> Result<Outcome> {
    let g = parse_graph(&fs::read_to_string(file)?)?;
    match g.chromatic_number_upto(kmax) {
        Some(k) => println!("{k}"),
        None => println!("exceeds {kmax}"),
    }
    Ok(Outcome { code: 0, manifest: None })
}

pub fn sharpness(n: usize) -> Result<Outcome> {
    if !(1..=8).contains(&n) {
        return Err("sharpness search supports 1 to 8 vertices".into());
    }
    let found = complete_square_graphs(n);
    for g in &found {
        let chi = g.square().chromatic_number_upto(n).map_or("?".to_string(), |c| c.to_string());
        println!("# square is K{n}, chromatic number {chi}");
        print!("{}", format_graph(g));
    }
    println!("FOUND {}", found.len());
    Ok(Outcome { code: u8::from(found.is_empty()), manifest: None })
}

pub fn export(dir: &Path, k: usize) -> Result<Outcome> {
    let configs = catalog_specs()
        .iter()
        .map(|s| Ok(build_configuration(s)?.add_dashdot_edges()?))
        .collect::<Result<Vec<_>>>()?;
    export_catalog(dir, &configs, k)?;
    println!("wrote {} configurations to {}", configs.len(), dir.display());
    Ok(Outcome { code: 0, manifest: None })
}
