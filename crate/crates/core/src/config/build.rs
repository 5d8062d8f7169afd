use std::f64::consts::{PI, TAU};

use super::spec::{ConfigSpec, RingEntry};
use super::{ConfigError, ConfigurationGraph};
use crate::graph::families::from_drawing;

type Point = (f64, f64);

/// Straight-line drawing under construction. Every vertex remembers the
/// point its stem should grow away from.
#[derive(Default)]
struct Drawing {
    points: Vec<Point>,
    anchors: Vec<Point>,
    black: Vec<bool>,
    edges: Vec<(usize, usize)>,
    degree: Vec<usize>,
}

impl Drawing {
    fn vertex(&mut self, p: Point, anchor: Point, black: bool) -> usize {
        self.points.push(p);
        self.anchors.push(anchor);
        self.black.push(black);
        self.degree.push(0);
        self.points.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
        self.degree[u] += 1;
        self.degree[v] += 1;
    }
}

fn polar(center: Point, radius: f64, angle: f64) -> Point {
    (center.0 + radius * angle.cos(), center.1 + radius * angle.sin())
}

fn unrealizable(spec: &ConfigSpec, reason: &str) -> ConfigError {
    ConfigError::Unrealizable { spec: spec.to_string(), reason: reason.to_string() }
}

const ORIGIN: Point = (0.0, 0.0);

/// Central cycle on the unit circle, listed faces outside it with their
/// far vertices on the circle of radius 2.
fn draw_ring(spec: &ConfigSpec, center: u32, ring: &[RingEntry]) -> Result<(Drawing, Vec<Vec<usize>>), ConfigError> {
    let l = center as usize;
    let len_at = |i: usize| match ring.get(i % l) {
        Some(RingEntry::Len(m)) => Some(*m as usize),
        _ => None,
    };
    for i in 0..l {
        if len_at(i) == Some(3) {
            let (prev, next) = (len_at(i + l - 1), len_at(i + 1));
            if prev.is_some() && next.is_some() || prev == Some(3) || next == Some(3) {
                return Err(unrealizable(spec, "a listed 3-face needs an unlisted neighbor on one side"));
            }
        }
    }
    let theta = |x: f64| TAU * x / l as f64;
    let mut d = Drawing::default();
    let c: Vec<usize> = (0..l).map(|i| d.vertex(polar(ORIGIN, 1.0, theta(i as f64)), ORIGIN, true)).collect();
    for i in 0..l {
        d.edge(c[i], c[(i + 1) % l]);
    }
    // o[i]: the black vertex outside c_i, when a face at position i-1 or i is listed
    let mut o: Vec<Option<usize>> = vec![None; l];
    for i in 0..l {
        if len_at(i) == Some(3) {
            let x = d.vertex(polar(ORIGIN, 2.0, theta(i as f64 + 0.5)), ORIGIN, true);
            o[i] = Some(x);
            o[(i + 1) % l] = Some(x);
        }
    }
    for i in 0..l {
        if o[i].is_none() && (len_at(i).is_some() || len_at(i + l - 1).is_some()) {
            o[i] = Some(d.vertex(polar(ORIGIN, 2.0, theta(i as f64)), ORIGIN, true));
        }
    }
    for i in 0..l {
        if let Some(x) = o[i] {
            d.edge(c[i], x);
        }
    }
    let mut faces = vec![c.clone()];
    for i in 0..l {
        let Some(m) = len_at(i) else { continue };
        let j = (i + 1) % l;
        let (oi, oj) = (o[i].unwrap(), o[j].unwrap());
        if m == 3 {
            faces.push(vec![c[i], c[j], oi]);
            continue;
        }
        let middle: Vec<usize> = (1..=m - 4)
            .map(|k| d.vertex(polar(ORIGIN, 2.0, theta(i as f64 + k as f64 / (m - 3) as f64)), ORIGIN, true))
            .collect();
        let mut path = vec![oi];
        path.extend(&middle);
        path.push(oj);
        for w in path.windows(2) {
            d.edge(w[0], w[1]);
        }
        let mut face = vec![c[i], c[j]];
        face.extend(path.iter().rev());
        faces.push(face);
    }
    Ok((d, faces))
}

/// How the shortest path between the two faces of a distance
/// configuration is colored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Geodesic {
    /// The path's inner vertices belong to the configuration, so each gets
    /// a stem with two leaves like any other degree-2 vertex of `H`.
    #[default]
    Black,
    /// The path's inner vertices are white; `H` is just the two cycles.
    White,
}

/// Two cycles side by side joined along the x axis by a path with
/// `dist - 1` inner vertices.
fn draw_distance(
    spec: &ConfigSpec,
    a: u32,
    b: u32,
    dist: u32,
    geodesic: Geodesic,
) -> Result<(Drawing, Vec<Vec<usize>>), ConfigError> {
    if dist > 3 {
        return Err(unrealizable(spec, "faces further apart than 3 leave white vertices beyond distance 2"));
    }
    let mut d = Drawing::default();
    let (ca, cb) = ((-4.0, 0.0), (4.0, 0.0));
    let left: Vec<usize> =
        (0..a).map(|i| d.vertex(polar(ca, 1.0, TAU * i as f64 / a as f64), ca, true)).collect();
    let right: Vec<usize> =
        (0..b).map(|i| d.vertex(polar(cb, 1.0, PI + TAU * i as f64 / b as f64), cb, true)).collect();
    for cyc in [&left, &right] {
        for i in 0..cyc.len() {
            d.edge(cyc[i], cyc[(i + 1) % cyc.len()]);
        }
    }
    let mut path = vec![left[0]];
    for k in 1..dist {
        let x = -3.0 + 6.0 * k as f64 / dist as f64;
        path.push(d.vertex((x, 0.0), (x, -1.0), geodesic == Geodesic::Black));
    }
    path.push(right[0]);
    for w in path.windows(2) {
        d.edge(w[0], w[1]);
    }
    Ok((d, vec![left, right]))
}

/// Stems on black vertices short of degree 3, then leaves on white
/// neighbors of black vertices short of degree 3.
fn grow_white(d: &mut Drawing) {
    let away = |p: Point, from: Point| {
        let (dx, dy) = (p.0 - from.0, p.1 - from.1);
        let r = (dx * dx + dy * dy).sqrt();
        (dx / r, dy / r)
    };
    let black_count = d.points.len();
    for v in 0..black_count {
        if !d.black[v] {
            continue;
        }
        while d.degree[v] < 3 {
            let p = d.points[v];
            let (ux, uy) = away(p, d.anchors[v]);
            let s = d.vertex((p.0 + ux, p.1 + uy), p, false);
            d.edge(v, s);
        }
    }
    let touching: Vec<usize> = (0..d.points.len())
        .filter(|&w| !d.black[w] && d.edges.iter().any(|&(x, y)| (x == w && d.black[y]) || (y == w && d.black[x])))
        .collect();
    for w in touching {
        let p = d.points[w];
        let (ux, uy) = away(p, d.anchors[w]);
        let need = 3 - d.degree[w];
        for i in 0..need {
            let turn = if need == 1 { 0.0 } else { 0.5 - i as f64 };
            let (s, c) = turn.sin_cos();
            let dir = (ux * c - uy * s, ux * s + uy * c);
            let leaf = d.vertex((p.0 + 0.6 * dir.0, p.1 + 0.6 * dir.1), p, false);
            d.edge(w, leaf);
        }
    }
}

/// Materializes an exact spec under the no-identification model: all
/// listed vertices distinct, no adjacencies beyond those drawn.
pub fn build_configuration(spec: &ConfigSpec) -> Result<ConfigurationGraph, ConfigError> {
    build_configuration_with(spec, Geodesic::default())
}

pub fn build_configuration_with(spec: &ConfigSpec, geodesic: Geodesic) -> Result<ConfigurationGraph, ConfigError> {
    if !spec.is_exact() {
        return Err(ConfigError::NotExact(spec.to_string()));
    }
    let (mut d, inner_faces) = match spec {
        ConfigSpec::Ring { center, ring } => draw_ring(spec, *center, ring)?,
        ConfigSpec::Distance { a, b, dist, .. } => draw_distance(spec, *a, *b, *dist, geodesic)?,
    };
    grow_white(&mut d);
    let graph = from_drawing(&d.points, &d.edges);
    let faces = graph.faces()?;
    for face in &inner_faces {
        let mut want = face.clone();
        want.sort_unstable();
        let found = faces.iter().any(|f| {
            let mut got = f.boundary.clone();
            got.sort_unstable();
            got == want
        });
        if !found {
            return Err(unrealizable(spec, "drawing lost a listed face"));
        }
    }
    Ok(ConfigurationGraph::from_parts(spec.clone(), graph, d.black, inner_faces))
}
