use super::{Color, ColorProblem, EngineError, Stats, VerificationResult, Verdict};

/// Largest `k^n` the exhaustive oracle accepts.
const ORACLE_LIMIT: u128 = 1 << 24;

/// Decides the precoloring-extension predicate by plain enumeration: every
/// one of the `k^t` prefix assignments that is proper, against every one of
/// the `k^(n-t)` completions. No canonical forms, twins or masks.
pub fn brute_force_oracle(p: &ColorProblem) -> Result<VerificationResult, EngineError> {
    let (n, k, t) = (p.n(), p.k(), p.t());
    if (k as u128).checked_pow(n as u32).is_none_or(|size| size > ORACLE_LIMIT) {
        return Err(EngineError::TooLarge { k, n });
    }
    let edges = p.graph().edges();
    let proper = |colors: &[Color], upto: usize| edges.iter().all(|&(u, v)| v >= upto || colors[u] != colors[v]);
    let mut stats = Stats::default();
    let mut colors = vec![0 as Color; n];
    loop {
        if proper(&colors, t) {
            stats.precolorings += 1;
            let mut found = false;
            // odometer over positions t..n
            loop {
                stats.nodes += 1;
                if proper(&colors, n) {
                    found = true;
                    break;
                }
                if !increment(&mut colors[t..], k) {
                    break;
                }
            }
            colors[t..].iter_mut().for_each(|c| *c = 0);
            if !found {
                return Ok(VerificationResult {
                    verdict: Verdict::Counterexample,
                    counterexample: Some(colors[..t].to_vec()),
                    stats,
                });
            }
        }
        if !increment(&mut colors[..t], k) {
            break;
        }
    }
    Ok(VerificationResult { verdict: Verdict::AllExtendable, counterexample: None, stats })
}

/// Advances a little-endian base-`k` counter; false on wrap-around.
fn increment(digits: &mut [Color], k: usize) -> bool {
    for d in digits.iter_mut() {
        if (*d as usize) + 1 < k {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}
