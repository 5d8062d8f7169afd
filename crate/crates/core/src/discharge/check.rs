use std::fmt;

use super::rules::View;
use super::{final_charge, transfer_to, Charge, ChargeScenario, FaceClass, RuleSet};

fn ratio(c: Charge) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Every canonical neighbor sequence around a `len`-face.
pub fn scenarios(len: usize) -> impl Iterator<Item = ChargeScenario> {
    let total = FaceClass::ALL.len().pow(len as u32);
    (0..total).filter_map(move |mut code| {
        let neighbors = (0..len)
            .map(|_| {
                let c = FaceClass::ALL[code % FaceClass::ALL.len()];
                code /= FaceClass::ALL.len();
                c
            })
            .collect();
        let s = ChargeScenario { center: len, neighbors };
        s.is_canonical().then_some(s)
    })
}

/// Least final charge over the scenarios around a `len`-face that pass
/// `keep` and survive `rules`, with a scenario attaining it.
pub fn min_final_charge(
    len: usize,
    rules: &RuleSet,
    keep: impl Fn(&ChargeScenario) -> bool,
) -> Option<(Charge, ChargeScenario)> {
    scenarios(len)
        .filter(|s| keep(s) && !rules.excludes(s))
        .map(|s| (final_charge(&s), s))
        .min_by(|a, b| a.0.cmp(&b.0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthRow {
    pub len: usize,
    pub scenarios: usize,
    pub survivors: usize,
    /// Least final charge among survivors and a survivor attaining it.
    pub worst: Option<(Charge, ChargeScenario)>,
}

impl LengthRow {
    pub fn pass(&self) -> bool {
        self.worst.as_ref().is_none_or(|(c, _)| *c >= Charge::from_integer(0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnavoidabilityReport {
    pub rows: Vec<LengthRow>,
}

impl UnavoidabilityReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(LengthRow::pass)
    }

    pub fn row(&self, len: usize) -> Option<&LengthRow> {
        self.rows.iter().find(|r| r.len == len)
    }
}

impl fmt::Display for UnavoidabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let min = r.worst.as_ref().map_or("none".to_string(), |(c, _)| ratio(*c));
            let verdict = if r.pass() { "PASS" } else { "FAIL" };
            writeln!(f, "L={} scenarios={} survivors={} min_charge={min} {verdict}", r.len, r.scenarios, r.survivors)?;
            if let (false, Some((_, s))) = (r.pass(), &r.worst) {
                writeln!(f, "  worst {s}")?;
            }
        }
        Ok(())
    }
}

/// Enumerates the neighborhoods of each face length in `lens`, discards
/// those containing an active configuration and records the least final
/// charge among the rest.
pub fn check_unavoidability(lens: impl IntoIterator<Item = usize>, rules: &RuleSet) -> UnavoidabilityReport {
    let rows = lens
        .into_iter()
        .map(|len| {
            let mut row = LengthRow { len, scenarios: 0, survivors: 0, worst: None };
            for s in scenarios(len) {
                row.scenarios += 1;
                if rules.excludes(&s) {
                    continue;
                }
                row.survivors += 1;
                let c = final_charge(&s);
                if row.worst.as_ref().is_none_or(|(w, _)| c < *w) {
                    row.worst = Some((c, s));
                }
            }
            row
        })
        .collect();
    UnavoidabilityReport { rows }
}

// A stretch of five consecutive neighbors of a long face is enough to see
// every claim on the middle edge and every rule touching the claimants.
const WINDOW: usize = 5;
const MID: usize = WINDOW / 2;

/// Boundary edges (as neighbor positions) whose third a neighbor at `i`
/// draws, or `None` when a 4-face there has no flank of length 6 or more.
/// Both neighbors of `i` must lie in the window.
fn claims(w: &[FaceClass], i: usize) -> Option<Vec<usize>> {
    let big = |j: usize| w[j] >= FaceClass::L6;
    Some(match w[i] {
        FaceClass::L3 => vec![i - 1, i, i + 1],
        FaceClass::L4 if big(i + 1) => vec![i, i + 1],
        FaceClass::L4 if big(i - 1) => vec![i - 1, i],
        FaceClass::L4 => return None,
        FaceClass::L5 => vec![i],
        _ => Vec::new(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargeFaceReport {
    pub r_max: usize,
    /// `(r, r - 6 - r/3)` for each length checked.
    pub slack: Vec<(usize, Charge)>,
    pub windows: usize,
    pub survivors: usize,
    pub double_claims: Vec<Vec<FaceClass>>,
    pub missing_flanks: Vec<Vec<FaceClass>>,
    /// Per receiving class: thirds drawn and the rule amount.
    pub bundles: Vec<(FaceClass, Charge, Charge)>,
}

impl LargeFaceReport {
    pub fn pass(&self) -> bool {
        self.slack.iter().all(|(_, s)| *s >= Charge::from_integer(0))
            && self.double_claims.is_empty()
            && self.missing_flanks.is_empty()
            && self.bundles.iter().all(|(_, drawn, rule)| drawn == rule)
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn show(w: &[FaceClass]) -> String {
    w.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for LargeFaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, s) in &self.slack {
            writeln!(f, "R={r} charge={r_6} allocated={}/3 slack={} {}", r, ratio(*s), verdict(*s >= 0.into()), r_6 = *r as i64 - 6)?;
        }
        for (c, drawn, rule) in &self.bundles {
            writeln!(f, "BUNDLE {c} drawn={} rule={} {}", ratio(*drawn), ratio(*rule), verdict(drawn == rule))?;
        }
        let ok = self.double_claims.is_empty() && self.missing_flanks.is_empty();
        writeln!(
            f,
            "EDGES windows={} survivors={} double_claims={} missing_flanks={} {}",
            self.windows,
            self.survivors,
            self.double_claims.len(),
            self.missing_flanks.len(),
            verdict(ok)
        )?;
        for w in self.double_claims.iter().chain(&self.missing_flanks).take(5) {
            writeln!(f, "  window [{}]", show(w))?;
        }
        Ok(())
    }
}

/// Faces of length `9..=r_max`: `r - 6 >= r/3` lets every boundary edge
/// carry a third, and the thirds are passed on so that a 5-neighbor takes
/// its own edge, a 3-neighbor its edge and both flanking edges, and a
/// 4-neighbor its edge and the edge of a flank of length 6 or more. Every
/// surviving window of five consecutive neighbors is checked for a middle
/// edge claimed twice or a 4-neighbor without such a flank.
pub fn check_large_faces(r_max: usize, rules: &RuleSet) -> LargeFaceReport {
    let third = Charge::new(1, 3);
    let slack = (9..=r_max.max(9))
        .map(|r| (r, Charge::from_integer(r as i64 - 6) - third * Charge::from_integer(r as i64)))
        .collect();
    let bundles = [FaceClass::L3, FaceClass::L4, FaceClass::L5]
        .into_iter()
        .map(|c| {
            let mut w = vec![FaceClass::L7Plus; WINDOW];
            w[MID] = c;
            let edges = claims(&w, MID).map_or(0, |e| e.len());
            (c, third * Charge::from_integer(edges as i64), transfer_to(c))
        })
        .collect();
    let mut report = LargeFaceReport {
        r_max,
        slack,
        windows: 0,
        survivors: 0,
        double_claims: Vec::new(),
        missing_flanks: Vec::new(),
        bundles,
    };
    let k = FaceClass::ALL.len();
    for mut code in 0..k.pow(WINDOW as u32) {
        let w: Vec<FaceClass> = (0..WINDOW)
            .map(|_| {
                let c = FaceClass::ALL[code % k];
                code /= k;
                c
            })
            .collect();
        report.windows += 1;
        if rules.excludes_view(&View { center: None, slots: &w, cyclic: false }) {
            continue;
        }
        report.survivors += 1;
        let mut on_mid = 0;
        for i in MID - 1..=MID + 1 {
            match claims(&w, i) {
                Some(edges) => on_mid += edges.iter().filter(|&&e| e == MID).count(),
                None if i == MID => report.missing_flanks.push(w.clone()),
                None => {}
            }
        }
        if on_mid > 1 {
            report.double_claims.push(w);
        }
    }
    report
}
