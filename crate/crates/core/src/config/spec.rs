//! Configuration notation.
//!
//! Ring form `<center> c <entries>`: a face of length `center` and the faces
//! met counterclockwise across its consecutive edges. An entry is a single
//! digit length, `*` for an unspecified face, or a digit followed by `m` for
//! "at most that length" (a family). `4c5*5` is a 4-face with two 5-faces
//! separated by one unspecified face.
//!
//! Distance form `<a> d <k> - <b>`: an `a`-face and a `b`-face at distance
//! exactly `k`; with `D` instead of `d`, at distance at most `k` (a family of
//! `k` configurations).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("malformed configuration {text:?}: {reason}")]
    Malformed { text: String, reason: String },
    #[error("ring list of {entries} faces is longer than the {center}-face center")]
    RingTooLong { center: u32, entries: usize },
    #[error("faces at distance 0 share an edge; write them as a ring")]
    ZeroDistance,
}

/// A face around the center of a ring configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingEntry {
    Len(u32),
    Any,
    /// Any length from 3 up to the bound; only before expansion.
    AtMost(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigSpec {
    Ring { center: u32, ring: Vec<RingEntry> },
    Distance { a: u32, b: u32, dist: u32, at_most: bool },
}

impl ConfigSpec {
    /// True when no family marker remains.
    pub fn is_exact(&self) -> bool {
        match self {
            ConfigSpec::Ring { ring, .. } => !ring.iter().any(|e| matches!(e, RingEntry::AtMost(_))),
            ConfigSpec::Distance { at_most, .. } => !at_most,
        }
    }

    /// The exact configurations this spec stands for, in order.
    pub fn expand(&self) -> Vec<ConfigSpec> {
        match self {
            ConfigSpec::Distance { a, b, dist, at_most: true } => {
                (1..=*dist).map(|d| ConfigSpec::Distance { a: *a, b: *b, dist: d, at_most: false }).collect()
            }
            ConfigSpec::Distance { .. } => vec![self.clone()],
            ConfigSpec::Ring { center, ring } => {
                let mut out: Vec<Vec<RingEntry>> = vec![Vec::new()];
                for entry in ring {
                    let choices: Vec<RingEntry> = match entry {
                        RingEntry::AtMost(bound) => (3..=*bound).map(RingEntry::Len).collect(),
                        other => vec![*other],
                    };
                    out = out
                        .into_iter()
                        .flat_map(|prefix| {
                            choices.iter().map(move |&c| {
                                let mut next = prefix.clone();
                                next.push(c);
                                next
                            })
                        })
                        .collect();
                }
                out.into_iter().map(|ring| ConfigSpec::Ring { center: *center, ring }).collect()
            }
        }
    }

    /// Human-readable form using the arrow/circle notation.
    pub fn pretty(&self) -> String {
        match self {
            ConfigSpec::Ring { center, ring } => {
                let mut s = format!("{center}⟲");
                for e in ring {
                    match e {
                        RingEntry::Len(l) => s.push_str(&l.to_string()),
                        RingEntry::Any => s.push('*'),
                        RingEntry::AtMost(l) => s.push_str(&format!("{l}⁻")),
                    }
                }
                s
            }
            ConfigSpec::Distance { a, b, dist, at_most } => {
                format!("{a}↔{}{dist} {b}", if *at_most { "≤" } else { "" })
            }
        }
    }
}

impl fmt::Display for ConfigSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigSpec::Ring { center, ring } => {
                write!(f, "{center}c")?;
                for e in ring {
                    match e {
                        RingEntry::Len(l) => write!(f, "{l}")?,
                        RingEntry::Any => f.write_str("*")?,
                        RingEntry::AtMost(l) => write!(f, "{l}m")?,
                    }
                }
                Ok(())
            }
            ConfigSpec::Distance { a, b, dist, at_most } => {
                write!(f, "{a}{}{dist}-{b}", if *at_most { 'D' } else { 'd' })
            }
        }
    }
}

fn malformed(text: &str, reason: impl Into<String>) -> SpecError {
    SpecError::Malformed { text: text.to_string(), reason: reason.into() }
}

fn parse_len(text: &str, digits: &str) -> Result<u32, SpecError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed(text, format!("expected a face length, found {digits:?}")));
    }
    let len: u32 = digits.parse().map_err(|_| malformed(text, "face length out of range"))?;
    if len < 3 {
        return Err(malformed(text, format!("face length {len} is below 3")));
    }
    Ok(len)
}

impl FromStr for ConfigSpec {
    type Err = SpecError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if let Some(pos) = text.find(['d', 'D']) {
            let at_most = text.as_bytes()[pos] == b'D';
            let a = parse_len(text, &text[..pos])?;
            let (dist, b) =
                text[pos + 1..].split_once('-').ok_or_else(|| malformed(text, "distance form is <a>d<k>-<b>"))?;
            let b = parse_len(text, b)?;
            if dist.is_empty() || !dist.bytes().all(|c| c.is_ascii_digit()) {
                return Err(malformed(text, "distance must be a decimal integer"));
            }
            let dist: u32 = dist.parse().map_err(|_| malformed(text, "distance out of range"))?;
            if dist == 0 {
                return Err(SpecError::ZeroDistance);
            }
            return Ok(ConfigSpec::Distance { a, b, dist, at_most });
        }
        let (center, rest) =
            text.split_once('c').ok_or_else(|| malformed(text, "expected <center>c<faces> or <a>d<k>-<b>"))?;
        let center = parse_len(text, center)?;
        let mut ring = Vec::new();
        let mut chars = rest.chars().peekable();
        while let Some(ch) = chars.next() {
            match ch {
                '*' => ring.push(RingEntry::Any),
                '0'..='9' => {
                    let len = parse_len(text, &ch.to_string())?;
                    if chars.peek() == Some(&'m') {
                        chars.next();
                        ring.push(RingEntry::AtMost(len));
                    } else {
                        ring.push(RingEntry::Len(len));
                    }
                }
                other => return Err(malformed(text, format!("unexpected character {other:?}"))),
            }
        }
        if ring.is_empty() {
            return Err(malformed(text, "a ring needs at least one face"));
        }
        if ring.len() > center as usize {
            return Err(SpecError::RingTooLong { center, entries: ring.len() });
        }
        Ok(ConfigSpec::Ring { center, ring })
    }
}
