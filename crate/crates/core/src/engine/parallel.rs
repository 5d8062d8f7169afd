use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::search::{HeadStep, Search};
use super::{ColorProblem, EngineError, RootColoring, Stats, VerificationResult, Verdict};

/// Canonical colorings of the first `depth` prefix vertices. The sets of
/// full precolorings below distinct roots are disjoint and together cover
/// the whole canonical enumeration.
pub fn partition_by_root(p: &ColorProblem, depth: usize) -> Result<Vec<RootColoring>, EngineError> {
    partition_below(p, &RootColoring::empty(), depth)
}

/// Like [`partition_by_root`] but restricted to extensions of `base`.
pub fn partition_below(p: &ColorProblem, base: &RootColoring, depth: usize) -> Result<Vec<RootColoring>, EngineError> {
    if depth > p.t() {
        return Err(EngineError::RootDepth { depth, t: p.t() });
    }
    base.validate(p)?;
    if depth <= base.len() {
        return Ok(vec![base.clone()]);
    }
    let mut roots = Vec::new();
    let mut s = Search::new(p, false);
    s.enumerate(&base.0, depth, |s| {
        roots.push(RootColoring(s.prefix_colors(depth)));
        true
    });
    Ok(roots)
}

/// Progress notification for one finished root.
#[derive(Debug, Clone, Copy)]
pub struct RootProgress {
    pub index: usize,
    pub total: usize,
    pub stats: Stats,
    /// Time spent on this root by its worker.
    pub elapsed: Duration,
}

pub struct VerifyOptions<'a> {
    /// Restrict the run to precolorings extending this root.
    pub root: Option<RootColoring>,
    /// Split the work into the canonical colorings of this many prefix
    /// vertices (or of the root, whichever is longer).
    pub root_depth: usize,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    /// Recompute masks from scratch at every node and compare.
    pub check_masks: bool,
    /// Settle up to this many blocks at the end of the prefix tail (see
    /// [`ColorProblem::tail_start`]) per coloring of the vertices before
    /// them instead of enumerating their colors; 0 enumerates everything.
    /// Verdicts, counterexamples and precoloring counts do not depend on
    /// it; node and cache counts do.
    pub tail_blocks: usize,
    pub progress: Option<&'a (dyn Fn(RootProgress) + Sync)>,
}

impl Default for VerifyOptions<'_> {
    fn default() -> Self {
        VerifyOptions { root: None, root_depth: 0, jobs: 1, check_masks: false, tail_blocks: DEFAULT_TAIL_BLOCKS, progress: None }
    }
}

enum RootOutcome {
    Done(Stats),
    Failed(Vec<u8>, Stats),
    Cancelled,
}

pub const DEFAULT_TAIL_BLOCKS: usize = 4;

// Cancellation is polled once per this many precolorings.
const POLL_INTERVAL: u64 = 1 << 14;

fn run_root(
    p: &ColorProblem,
    root: &RootColoring,
    index: usize,
    first_failure: &AtomicUsize,
    opts: &VerifyOptions<'_>,
) -> RootOutcome {
    if first_failure.load(Ordering::Relaxed) < index {
        return RootOutcome::Cancelled;
    }
    let mut s = Search::new(p, opts.check_masks);
    let mut failure = None;
    let cancelled = std::cell::Cell::new(false);
    let blocks = if opts.tail_blocks > 0 { p.tail_blocks(root.len(), opts.tail_blocks) } else { &[] };
    let head = blocks.first().map_or(usize::MAX, |b| b.first);
    let mut heads = 0u64;
    s.enumerate_split(
        &root.0,
        p.t(),
        head,
        |s| {
            heads += 1;
            if heads.is_multiple_of(POLL_INTERVAL) && first_failure.load(Ordering::Relaxed) < index {
                cancelled.set(true);
                return HeadStep::Stop;
            }
            let count = s.tail_count(blocks);
            if count == 0 || s.settle_tail(blocks) {
                s.stats.precolorings += count;
                HeadStep::Skip
            } else {
                HeadStep::Descend
            }
        },
        |s| {
            if !s.extend_rest() {
                failure = Some(s.prefix_colors(p.t()));
                return false;
            }
            if s.stats.precolorings % POLL_INTERVAL == 0 && first_failure.load(Ordering::Relaxed) < index {
                cancelled.set(true);
                return false;
            }
            true
        },
    );
    match failure {
        Some(cex) => {
            first_failure.fetch_min(index, Ordering::Relaxed);
            RootOutcome::Failed(cex, s.stats)
        }
        None if cancelled.get() => RootOutcome::Cancelled,
        None => RootOutcome::Done(s.stats),
    }
}

/// Decides whether every canonical precoloring extends.
///
/// Work is split by root coloring and combined in root order: the verdict
/// is the conjunction, counters are summed over the roots up to and
/// including the first failing one, and the reported counterexample is the
/// first failure in canonical order. The result does not depend on `jobs`.
pub fn verify_all(p: &ColorProblem, opts: &VerifyOptions<'_>) -> Result<VerificationResult, EngineError> {
    let base = opts.root.clone().unwrap_or_else(RootColoring::empty);
    let depth = opts.root_depth.max(base.len()).min(p.t());
    let roots = partition_below(p, &base, depth)?;
    let total = roots.len();
    let first_failure = AtomicUsize::new(usize::MAX);
    let work = |(index, root): (usize, &RootColoring)| {
        let start = Instant::now();
        let outcome = run_root(p, root, index, &first_failure, opts);
        if let Some(report) = opts.progress {
            if let RootOutcome::Done(stats) | RootOutcome::Failed(_, stats) = &outcome {
                report(RootProgress { index, total, stats: *stats, elapsed: start.elapsed() });
            }
        }
        outcome
    };
    let outcomes: Vec<RootOutcome> = if opts.jobs <= 1 {
        roots.iter().enumerate().map(work).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool construction");
        pool.install(|| roots.par_iter().enumerate().map(work).collect())
    };
    let mut stats = Stats::default();
    for outcome in outcomes {
        match outcome {
            RootOutcome::Done(s) => stats += s,
            RootOutcome::Failed(cex, s) => {
                stats += s;
                return Ok(VerificationResult { verdict: Verdict::Counterexample, counterexample: Some(cex), stats });
            }
            RootOutcome::Cancelled => unreachable!("roots before the first failure always run to completion"),
        }
    }
    Ok(VerificationResult { verdict: Verdict::AllExtendable, counterexample: None, stats })
}
