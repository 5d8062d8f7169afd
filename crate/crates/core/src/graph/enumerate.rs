//! Exhaustive search over small subcubic graphs.

use std::collections::BTreeSet;

use super::Graph;

/// A plane embedding of a connected graph of maximum degree 3, or `None`
/// when it has none. Tries every rotation system; a vertex of degree 3
/// has two.
pub fn embed_subcubic(g: &Graph) -> Option<Graph> {
    if !g.is_subcubic() || !g.is_connected() {
        return None;
    }
    let base: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    let choice: Vec<usize> = (0..g.n()).filter(|&v| base[v].len() == 3).collect();
    (0u64..1 << choice.len()).find_map(|bits| {
        let mut rot = base.clone();
        for (i, &v) in choice.iter().enumerate() {
            if bits >> i & 1 == 1 {
                rot[v].swap(1, 2);
            }
        }
        let h = Graph::from_rotations(rot).ok()?;
        h.faces().ok().map(|_| h)
    })
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Smallest edge list over all relabelings.
fn canonical(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).expect("a larger element follows");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap_or_default()
}

/// Planar graphs on `n <= 8` vertices with maximum degree 3 whose square
/// is complete, one embedded representative per isomorphism class.
pub fn complete_square_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive search is limited to 8 vertices");
    let all = pairs(n);
    let mut found = BTreeSet::new();
    let mut adj = vec![0u8; n];
    let mut chosen = Vec::new();
    extend_edges(n, &all, 0, &mut adj, &mut chosen, &mut found);
    found
        .into_iter()
        .filter_map(|edges| embed_subcubic(&Graph::from_edges(n, &edges).expect("canonical edges are simple")))
        .collect()
}

fn extend_edges(
    n: usize,
    all: &[(usize, usize)],
    i: usize,
    adj: &mut [u8],
    chosen: &mut Vec<(usize, usize)>,
    found: &mut BTreeSet<Vec<(usize, usize)>>,
) {
    if i == all.len() {
        let full = (1u16 << n) - 1;
        let complete = (0..n).all(|v| {
            let mut reach = adj[v] as u16 | 1 << v;
            let mut nb = adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                reach |= adj[u] as u16;
            }
            reach == full
        });
        if complete {
            found.insert(canonical(n, chosen));
        }
        return;
    }
    let (u, v) = all[i];
    extend_edges(n, all, i + 1, adj, chosen, found);
    if adj[u].count_ones() < 3 && adj[v].count_ones() < 3 {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        chosen.push((u, v));
        extend_edges(n, all, i + 1, adj, chosen, found);
        chosen.pop();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
}
