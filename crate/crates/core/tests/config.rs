use std::collections::BTreeSet;

use square7::config::{
    build_configuration, build_configuration_with, catalog, catalog_specs, reduce, ConfigError, ConfigSpec,
    ConfigurationGraph, Geodesic,
};
use square7::{Graph, VerifyOptions};

fn config(name: &str) -> ConfigurationGraph {
    build_configuration(&name.parse::<ConfigSpec>().unwrap()).unwrap()
}

// brute force: pairs at distance 1 or 2 through the given adjacency
fn square_pairs(n: usize, edges: &[(usize, usize)], mid_ok: impl Fn(usize) -> bool) -> BTreeSet<(usize, usize)> {
    let mut adj = vec![BTreeSet::new(); n];
    for &(u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let mut out = BTreeSet::new();
    for u in 0..n {
        for &v in &adj[u] {
            out.insert((u.min(v), u.max(v)));
            if mid_ok(v) {
                for &w in &adj[v] {
                    if w != u {
                        out.insert((u.min(w), u.max(w)));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn catalog_names_round_trip() {
    let specs = catalog_specs();
    assert_eq!(specs.len(), 31);
    let names: BTreeSet<String> = specs.iter().map(|s| s.to_string()).collect();
    assert_eq!(names.len(), 31);
    for s in &specs {
        assert!(s.is_exact());
        assert_eq!(&s.to_string().parse::<ConfigSpec>().unwrap(), s);
    }
    assert_eq!(catalog().len(), 31);
}

#[test]
fn catalog_structure() {
    for e in catalog().entries {
        let c = &e.config;
        let g = c.graph();
        let name = e.spec.to_string();
        assert!(g.is_subcubic(), "{name}");
        assert!(g.faces().is_ok(), "{name} is embedded");
        for b in c.black() {
            assert_eq!(g.degree(b), 3, "{name}: black {b} has full degree");
        }
        let black = c.black();
        for w in c.white() {
            let d = g.bfs(w);
            assert!(black.iter().any(|&b| d[b] <= 2), "{name}: white {w} is near H");
        }
        let leaves = c.leaves();
        for s in c.stems() {
            let black_nbrs = g.neighbors(s).iter().filter(|&&u| c.is_black(u)).count();
            if black_nbrs == 1 {
                let own = g.neighbors(s).iter().filter(|u| leaves.contains(u)).count();
                assert_eq!(own, 2, "{name}: stem {s} carries two leaves");
            }
        }
        assert!(c.h().is_connected(), "{name}");
    }
}

#[test]
fn small_examples() {
    let c = config("3c3");
    assert_eq!((c.n_black(), c.stems().len(), c.leaves().len()), (4, 2, 4));
    let c = config("3d1-3");
    assert_eq!(c.n_black(), 6);
    let faces = c.inner_faces();
    let gap = faces[0].iter().map(|&u| faces[1].iter().map(|&v| c.graph().bfs(u)[v]).min().unwrap()).min();
    assert_eq!(gap, Some(1));
    assert_eq!(config("4c4").n_black(), 6);
    assert_eq!(config("4c55").n_black(), 9);
}

#[test]
fn families_need_expanding() {
    let fam: ConfigSpec = "3c6m".parse().unwrap();
    assert!(!fam.is_exact());
    assert!(matches!(build_configuration(&fam), Err(ConfigError::NotExact(_))));
}

#[test]
fn j_is_square_plus_white_paths() {
    for e in catalog().entries {
        let base = &e.config;
        let mut variants = vec![base.add_dashdot_edges().unwrap()];
        variants.extend(base.dashed_options().iter().take(3).map(|p| base.add_dashed_edges(p).unwrap()));
        for c in variants {
            let g = c.graph();
            let n = g.n();
            let mut expect = square_pairs(n, &g.edges(), |_| true);
            let mut fw: Vec<(usize, usize)> =
                g.edges().into_iter().filter(|&(u, v)| !c.is_black(u) && !c.is_black(v)).collect();
            fw.extend(c.dashed_edges());
            expect.extend(square_pairs(n, &fw, |v| !c.is_black(v)));
            expect.extend(c.dashdot_edges().iter().copied());
            let got: BTreeSet<_> = c.j_edges().edges().into_iter().collect();
            assert_eq!(got, expect, "{}", e.spec);
        }
    }
}

#[test]
fn dashdot_edges_join_leaves_to_far_whites() {
    for e in catalog().entries {
        let c = e.config.add_dashdot_edges().unwrap();
        let dist = c.graph().distance_matrix();
        let leaves = c.leaves();
        for &(u, v) in c.dashdot_edges() {
            let (leaf, other) = if leaves.contains(&u) { (u, v) } else { (v, u) };
            assert!(leaves.contains(&leaf) && !leaves.contains(&other) && !c.is_black(other));
            assert!(dist.get(leaf, other) > 2);
            for b in c.constrained_black(leaf) {
                assert!(dist.get(other, b) <= 2);
            }
        }
        assert!(c.leaf_group_forbidden().iter().all(|&f| f <= 3), "{}", e.spec);
    }
}

#[test]
fn augmentation_errors() {
    let c = config("3d2-4");
    let dd = c.add_dashdot_edges().unwrap();
    assert_eq!(dd.add_dashdot_edges(), Err(ConfigError::AlreadyAugmented));
    assert!(matches!(dd.add_dashed_edges(&[(10, 12)]), Err(ConfigError::AlreadyAugmented)));
    let d = c.add_dashed_edges(&[(10, 12)]).unwrap();
    assert_eq!(d.dashed_edges(), &[(10, 12)]);
    assert!(matches!(c.add_dashed_edges(&[(0, 1)]), Err(ConfigError::IllegalDashed(0, 1))));
    // every option is a legal set on its own
    for p in c.dashed_options() {
        assert!(c.add_dashed_edges(&p).is_ok());
    }
}

#[test]
fn dashed_stems_keep_degree() {
    // a stem with one black neighbor regains only one edge when H is
    // removed, so it can end at most one dashed edge
    let mut hit = false;
    for e in catalog().entries {
        let c = &e.config;
        let cands = c.dashed_candidates();
        for a in &cands {
            for b in &cands {
                if a.white >= b.white {
                    continue;
                }
                let shared = [a.white.0, a.white.1].into_iter().find(|w| *w == b.white.0 || *w == b.white.1);
                if let Some(w) = shared {
                    let h_deg = c.graph().neighbors(w).iter().filter(|&&u| c.is_black(u)).count();
                    if h_deg != 1 {
                        continue;
                    }
                    hit = true;
                    assert_eq!(c.add_dashed_edges(&[a.white, b.white]), Err(ConfigError::DashedDegree(w)));
                }
            }
        }
    }
    assert!(hit, "some catalog entry offers two dashed edges at one stem");
}

#[test]
fn frozen_precoloring_counts() {
    let opts = VerifyOptions::default();
    for (name, dashed, count) in [
        ("3c3", false, 15),
        ("3c6", false, 633068),
        ("3d1-3", false, 11071),
        ("3d2-3", false, 945031),
        ("3d3-3", false, 46251163),
        ("3d1-4", false, 626900),
        ("3d2-4", true, 133302321),
        ("4c4", false, 13499),
        ("4c55", false, 1105956),
        ("4c56", false, 56551334),
    ] {
        let r = reduce(&config(name), 7, &opts, 64).unwrap();
        assert!(r.is_reducible(), "{name}");
        assert_eq!(!r.config.dashed_edges().is_empty(), dashed, "{name}");
        assert_eq!(r.result().stats.precolorings, count, "{name}");
    }
}

#[test]
fn three_colors_give_a_counterexample() {
    let r = reduce(&config("3c3"), 3, &VerifyOptions::default(), 1).unwrap();
    assert!(!r.is_reducible());
    assert_eq!(r.result().counterexample.as_deref(), Some(&[0u8, 0, 1, 2, 1, 2][..]));
}

#[test]
fn white_geodesic_fails_at_distance_two() {
    let spec: ConfigSpec = "3d2-3".parse().unwrap();
    let white = build_configuration_with(&spec, Geodesic::White).unwrap();
    let black = build_configuration_with(&spec, Geodesic::Black).unwrap();
    assert!(white.n_black() < black.n_black());
    let r = reduce(&white, 7, &VerifyOptions::default(), 64).unwrap();
    assert!(!r.is_reducible());
    assert_eq!(r.attempts.len(), 1 + white.dashed_options().len());
}

#[test]
fn engine_numbering_is_a_relabeling() {
    // J on engine numbering is J on configuration numbering, relabeled
    let c = config("4c55").add_dashdot_edges().unwrap();
    let inst = square7::config::build_j(&c);
    let j = c.j_edges();
    let mut relabeled: Vec<(usize, usize)> = j
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (inst.order.iter().position(|&x| x == u).unwrap(), inst.order.iter().position(|&x| x == v).unwrap());
            (a.min(b), a.max(b))
        })
        .collect();
    relabeled.sort_unstable();
    assert_eq!(Graph::from_edges(j.n(), &relabeled).unwrap().edges(), inst.graph.edges());
    assert!((0..inst.t).all(|i| !c.is_black(inst.order[i])));
}

#[test]
fn modes_agree_on_configurations() {
    for (name, k) in [("3c6", 7), ("3d1-4", 7), ("4c4", 7), ("4c4", 5), ("3d2-4", 7)] {
        let c = config(name).add_dashdot_edges().unwrap();
        let p = square7::config::build_j(&c).problem(k).unwrap();
        let run = |tail_blocks, root_depth, jobs| {
            square7::verify_all(&p, &VerifyOptions { tail_blocks, root_depth, jobs, ..Default::default() }).unwrap()
        };
        let base = run(0, 0, 1);
        for (tail, depth, jobs) in [(4, 0, 1), (4, 2, 1), (4, 2, 3), (0, 3, 2), (2, 1, 1)] {
            let r = run(tail, depth, jobs);
            assert_eq!((r.verdict, &r.counterexample, r.stats.precolorings), (base.verdict, &base.counterexample, base.stats.precolorings), "{name} k={k}");
        }
        assert_eq!(run(4, 2, 1), run(4, 2, 3), "{name} k={k}: jobs do not change anything");
    }
}
