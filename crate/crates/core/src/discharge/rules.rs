//! Local patterns forbidden by the catalog.
//!
//! Around a face `f` with neighbors `f_0 .. f_{l-1}` (across consecutive
//! edges), three kinds of facts follow from the plane structure of a cubic
//! 3-edge-connected graph:
//!
//! * a ring configuration centered on `f` appears when its listed faces
//!   occur among the neighbors in the listed cyclic order (either
//!   direction, `*` matching anything);
//! * `f_{i-1}, f, f_{i+1}` are consecutive around `f_i`, since the three
//!   faces at a vertex are pairwise adjacent; a ring configuration centered
//!   on `f_i` appears when its listed faces land on those three;
//! * `f_i` and `f_j` with cyclic gap `g >= 2` are joined along the boundary
//!   of `f` by a path of `g - 1` edges, so their distance is some value in
//!   `0..g`. Distance 0 means they share a vertex and so are adjacent. The
//!   pair is excluded only when the catalog covers every such distance.
//!
//! A neighbor of class 7+ has unknown length, so no ring is ever centered
//! on it.

use std::collections::BTreeSet;

use super::{ChargeScenario, DischargeError, FaceClass};
use crate::config::{catalog_specs, ConfigSpec, RingEntry};

/// One catalog configuration used as a local exclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionRule {
    pub spec: ConfigSpec,
}

impl ExclusionRule {
    pub fn name(&self) -> String {
        self.spec.to_string()
    }

    /// What the rule forbids, in words.
    pub fn describe(&self) -> String {
        match &self.spec {
            ConfigSpec::Ring { center, ring } => {
                let listed: Vec<String> = ring
                    .iter()
                    .map(|e| match e {
                        RingEntry::Len(l) => l.to_string(),
                        _ => "*".to_string(),
                    })
                    .collect();
                format!("a {center}-face with consecutive neighbors {}", listed.join(" "))
            }
            ConfigSpec::Distance { a, b, dist, .. } => format!("a {a}-face and a {b}-face at distance {dist}"),
        }
    }
}

/// Every catalog configuration as an exclusion rule, in catalog order.
pub fn exclusion_rules() -> Vec<ExclusionRule> {
    catalog_specs().into_iter().map(|spec| ExclusionRule { spec }).collect()
}

/// A partial view of the faces around a face: the neighbor classes, and
/// whether the sequence closes up (a whole face) or is a stretch of the
/// boundary of a face whose length is not pinned down.
pub(crate) struct View<'a> {
    pub center: Option<usize>,
    pub slots: &'a [FaceClass],
    pub cyclic: bool,
}

impl View<'_> {
    fn center_class(&self) -> FaceClass {
        self.center.map_or(FaceClass::L7Plus, FaceClass::of_len)
    }

    fn gap(&self, i: usize, j: usize) -> usize {
        let d = j - i;
        if self.cyclic {
            d.min(self.slots.len() - d)
        } else {
            d
        }
    }

    fn slot(&self, i: isize) -> Option<FaceClass> {
        let n = self.slots.len() as isize;
        if self.cyclic {
            Some(self.slots[i.rem_euclid(n) as usize])
        } else if (0..n).contains(&i) {
            Some(self.slots[i as usize])
        } else {
            None
        }
    }
}

type Pattern = Vec<Option<usize>>;

/// Does `pattern` fit onto a cyclic sequence of length `len` whose known
/// entries are given by `known`, in either direction?
fn fits(pattern: &Pattern, len: usize, known: impl Fn(usize) -> Option<FaceClass>) -> bool {
    if pattern.len() > len {
        return false;
    }
    (0..len).any(|s| {
        [1, len - 1].iter().any(|&dir| {
            pattern.iter().enumerate().all(|(j, want)| match want {
                None => true,
                Some(l) => known((s + j * dir) % len).and_then(FaceClass::exact) == Some(*l),
            })
        })
    })
}

/// The catalog as a rule table, with a subset of rules switched on.
#[derive(Debug, Clone)]
pub struct RuleSet {
    rules: Vec<ExclusionRule>,
    active: Vec<bool>,
    rings: Vec<(usize, usize, Pattern)>,
}

impl RuleSet {
    pub fn full() -> RuleSet {
        let rules = exclusion_rules();
        let rings = rules
            .iter()
            .enumerate()
            .filter_map(|(i, r)| match &r.spec {
                ConfigSpec::Ring { center, ring } => {
                    let pattern = ring
                        .iter()
                        .map(|e| match e {
                            RingEntry::Len(l) => Some(*l as usize),
                            _ => None,
                        })
                        .collect();
                    Some((i, *center as usize, pattern))
                }
                _ => None,
            })
            .collect();
        let active = vec![true; rules.len()];
        RuleSet { rules, active, rings }
    }

    pub fn empty() -> RuleSet {
        let mut set = RuleSet::full();
        set.active.fill(false);
        set
    }

    /// Switches off `name` (`ALL`, a catalog name, or a family such as
    /// `3c6m` standing for its members).
    pub fn drop_rule(&mut self, name: &str) -> Result<(), DischargeError> {
        if name == "ALL" {
            self.active.fill(false);
            return Ok(());
        }
        let spec: ConfigSpec = name.parse().map_err(|_| DischargeError::UnknownRule(name.to_string()))?;
        for member in spec.expand() {
            let i = self
                .rules
                .iter()
                .position(|r| r.spec == member)
                .ok_or_else(|| DischargeError::UnknownRule(member.to_string()))?;
            self.active[i] = false;
        }
        Ok(())
    }

    /// Switches `name` (a catalog name) back on.
    pub fn add_rule(&mut self, name: &str) -> Result<(), DischargeError> {
        let i = self
            .rules
            .iter()
            .position(|r| r.name() == name)
            .ok_or_else(|| DischargeError::UnknownRule(name.to_string()))?;
        self.active[i] = true;
        Ok(())
    }

    pub fn rules(&self) -> &[ExclusionRule] {
        &self.rules
    }

    pub fn active_names(&self) -> Vec<String> {
        self.rules.iter().zip(&self.active).filter(|(_, &a)| a).map(|(r, _)| r.name()).collect()
    }

    fn find(&self, spec: &ConfigSpec) -> Option<usize> {
        self.rules.iter().position(|r| &r.spec == spec)
    }

    /// Rule groups that would each exclude the view by themselves, active
    /// or not. `visit` returns `true` to stop.
    fn hits(&self, view: &View<'_>, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
        let n = view.slots.len();
        if let (Some(center), true) = (view.center, view.cyclic) {
            for (idx, c, pattern) in &self.rings {
                if *c == center && fits(pattern, n, |q| Some(view.slots[q])) && visit(&[*idx]) {
                    return true;
                }
            }
        }
        // rings centered on a neighbor, which sees f_{i-1}, f, f_{i+1}
        let mid = view.center_class();
        for i in 0..n {
            let Some(len) = view.slots[i].exact() else { continue };
            let around = [view.slot(i as isize - 1), Some(mid), view.slot(i as isize + 1)];
            for (idx, c, pattern) in &self.rings {
                if *c == len && fits(pattern, len, |q| around.get(q).copied().flatten()) && visit(&[*idx]) {
                    return true;
                }
            }
        }
        for i in 0..n {
            let Some(a) = view.slots[i].exact() else { continue };
            for j in i + 1..n {
                let Some(b) = view.slots[j].exact() else { continue };
                let g = view.gap(i, j);
                if g < 2 {
                    continue;
                }
                let (a, b) = (a.min(b) as u32, a.max(b) as u32);
                let mut group = Vec::with_capacity(g);
                let touching = [
                    ConfigSpec::Ring { center: a, ring: vec![RingEntry::Len(b)] },
                    ConfigSpec::Ring { center: b, ring: vec![RingEntry::Len(a)] },
                ];
                match touching.iter().find_map(|s| self.find(s)) {
                    Some(r) => group.push(r),
                    None => continue,
                }
                let covered = (1..g as u32).all(|dist| {
                    self.find(&ConfigSpec::Distance { a, b, dist, at_most: false }).map(|r| group.push(r)).is_some()
                });
                if covered && visit(&group) {
                    return true;
                }
            }
        }
        false
    }

    pub(crate) fn excludes_view(&self, view: &View<'_>) -> bool {
        self.hits(view, |group| group.iter().all(|&r| self.active[r]))
    }

    /// Names of one group of active rules excluding `s`, if any.
    pub fn excluded_by(&self, s: &ChargeScenario) -> Option<Vec<String>> {
        let mut found = None;
        self.hits(&view_of(s), |group| {
            if group.iter().all(|&r| self.active[r]) {
                found = Some(group.iter().map(|&r| self.rules[r].name()).collect());
                true
            } else {
                false
            }
        });
        found
    }

    pub fn excludes(&self, s: &ChargeScenario) -> bool {
        self.excludes_view(&view_of(s))
    }

    /// Every active rule taking part in some exclusion of `s`.
    pub fn firing(&self, s: &ChargeScenario) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.hits(&view_of(s), |group| {
            if group.iter().all(|&r| self.active[r]) {
                out.extend(group.iter().map(|&r| self.rules[r].name()));
            }
            false
        });
        out
    }
}

fn view_of(s: &ChargeScenario) -> View<'_> {
    View { center: Some(s.center), slots: &s.neighbors, cyclic: true }
}
