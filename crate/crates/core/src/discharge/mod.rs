//! Face charging and the case analysis showing that a cubic plane graph
//! without any catalog configuration ends with nonnegative charge on every
//! face, contradicting the fixed total of -12.
//!
//! Every face starts with `len - 6`. Faces of length 7 or more give 1, 2/3
//! and 1/3 to each adjacent 3-, 4- and 5-face respectively. All arithmetic
//! is exact.
//!
//! The checker enumerates the neighborhoods of faces of length 3 to 8 as
//! cyclic sequences of face classes and removes those containing a catalog
//! configuration (see [`RuleSet`]). Longer faces are handled by spreading a
//! third of a unit onto each boundary edge and checking that no edge is
//! drawn on twice.

mod check;
mod rules;

use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use check::{
    check_large_faces, check_unavoidability, min_final_charge, scenarios, LargeFaceReport, LengthRow,
    UnavoidabilityReport,
};
pub use rules::{exclusion_rules, ExclusionRule, RuleSet};

pub type Charge = Rational64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("faces have length at least 3, got {0}")]
    ShortFace(usize),
    #[error("scenario around a {center}-face lists {got} neighbors")]
    NeighborCount { center: usize, got: usize },
    #[error("unknown rule {0:?}")]
    UnknownRule(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Length class of a face as far as the rules are concerned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceClass {
    L3,
    L4,
    L5,
    L6,
    L7Plus,
}

impl FaceClass {
    pub const ALL: [FaceClass; 5] = [FaceClass::L3, FaceClass::L4, FaceClass::L5, FaceClass::L6, FaceClass::L7Plus];

    pub fn of_len(len: usize) -> FaceClass {
        match len {
            ..=3 => FaceClass::L3,
            4 => FaceClass::L4,
            5 => FaceClass::L5,
            6 => FaceClass::L6,
            _ => FaceClass::L7Plus,
        }
    }

    /// The exact length, when the class pins it down.
    pub fn exact(self) -> Option<usize> {
        match self {
            FaceClass::L7Plus => None,
            c => Some(c as usize + 3),
        }
    }

    pub fn is_donor(self) -> bool {
        self == FaceClass::L7Plus
    }
}

impl fmt::Display for FaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(l) => write!(f, "{l}"),
            None => f.write_str("7+"),
        }
    }
}

/// Charge moved from a 7+-face to an adjacent face of length `receiver`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChargeRule {
    pub receiver: usize,
    pub amount: Charge,
}

pub fn charge_rules() -> [ChargeRule; 3] {
    [
        ChargeRule { receiver: 3, amount: Charge::from_integer(1) },
        ChargeRule { receiver: 4, amount: Charge::new(2, 3) },
        ChargeRule { receiver: 5, amount: Charge::new(1, 3) },
    ]
}

/// What a 7+-face sends to one adjacent face of class `c`.
pub fn transfer_to(c: FaceClass) -> Charge {
    c.exact()
        .and_then(|l| charge_rules().into_iter().find(|r| r.receiver == l))
        .map_or(Charge::from_integer(0), |r| r.amount)
}

pub fn initial_charge(len: usize) -> Result<Charge, DischargeError> {
    if len < 3 {
        return Err(DischargeError::ShortFace(len));
    }
    Ok(Charge::from_integer(len as i64 - 6))
}

/// A face of length `center` and the classes of the faces across its
/// edges, in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChargeScenario {
    pub center: usize,
    pub neighbors: Vec<FaceClass>,
}

impl ChargeScenario {
    pub fn new(center: usize, neighbors: Vec<FaceClass>) -> Result<Self, DischargeError> {
        if center < 3 {
            return Err(DischargeError::ShortFace(center));
        }
        if neighbors.len() != center {
            return Err(DischargeError::NeighborCount { center, got: neighbors.len() });
        }
        Ok(ChargeScenario { center, neighbors })
    }

    /// Lexicographically least rotation or reflection.
    pub fn canonical(&self) -> ChargeScenario {
        let n = self.neighbors.len();
        let mut best = self.neighbors.clone();
        for start in 0..n {
            for dir in [1, n - 1] {
                let cand: Vec<FaceClass> = (0..n).map(|i| self.neighbors[(start + i * dir) % n]).collect();
                if cand < best {
                    best = cand;
                }
            }
        }
        ChargeScenario { center: self.center, neighbors: best }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical().neighbors == self.neighbors
    }

    pub fn count(&self, c: FaceClass) -> usize {
        self.neighbors.iter().filter(|&&x| x == c).count()
    }
}

impl fmt::Display for ChargeScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.neighbors.iter().map(|c| c.to_string()).collect();
        write!(f, "{}:[{}]", self.center, parts.join(","))
    }
}

/// Charge after the rules: 3-, 4- and 5-faces receive from 7+ neighbors,
/// 7+-faces give to 5- neighbors, 6-faces keep 0.
pub fn final_charge(s: &ChargeScenario) -> Charge {
    let start = Charge::from_integer(s.center as i64 - 6);
    let class = FaceClass::of_len(s.center);
    if class.is_donor() {
        start - s.neighbors.iter().map(|&c| transfer_to(c)).sum::<Charge>()
    } else {
        start + transfer_to(class) * Charge::from_integer(s.count(FaceClass::L7Plus) as i64)
    }
}

/// Sum of `len - 6` over the faces of a cubic plane graph.
pub fn total_charge_check(g: &Graph) -> Result<Charge, DischargeError> {
    if !g.is_cubic() {
        return Err(GraphError::NotCubic.into());
    }
    let faces = g.faces()?;
    faces.iter().map(|f| initial_charge(f.len())).sum()
}

/// Final charge of every face (in [`Graph::faces`] order) after applying
/// the rules across the actual face adjacencies.
pub fn discharge_graph(g: &Graph) -> Result<Vec<Charge>, DischargeError> {
    if !g.is_cubic() {
        return Err(GraphError::NotCubic.into());
    }
    if !g.is_3_edge_connected() {
        return Err(GraphError::NotThreeEdgeConnected.into());
    }
    let map = g.face_map()?;
    let class: Vec<FaceClass> = map.faces.iter().map(|f| FaceClass::of_len(f.len())).collect();
    let mut charge = map.faces.iter().map(|f| initial_charge(f.len())).collect::<Result<Vec<_>, _>>()?;
    for (fi, face) in map.faces.iter().enumerate() {
        if !class[fi].is_donor() {
            continue;
        }
        for (u, v) in face.darts() {
            let across = map.face_of_dart(v, u);
            let amount = transfer_to(class[across]);
            charge[fi] -= amount;
            charge[across] += amount;
        }
    }
    Ok(charge)
}

#[cfg(test)]
mod tests;
