use super::Graph;

/// Edge connectivity of `g`, or `cap` if it is at least `cap`.
///
/// Global minimum edge cut via unit-capacity max-flow from vertex 0 to every
/// other vertex; augmentation stops once `cap` disjoint paths are found.
pub(super) fn edge_connectivity_upto(g: &Graph, cap: usize) -> usize {
    let n = g.n();
    if n <= 1 {
        return cap;
    }
    let mut best = cap;
    for sink in 1..n {
        best = best.min(max_flow_upto(g, 0, sink, best));
        if best == 0 {
            break;
        }
    }
    best
}

fn max_flow_upto(g: &Graph, source: usize, sink: usize, cap: usize) -> usize {
    let n = g.n();
    // flow[v][i]: flow on the dart v -> neighbors(v)[i], in {-1, 0, 1}
    let mut flow: Vec<Vec<i8>> = (0..n).map(|v| vec![0; g.degree(v)]).collect();
    let mut total = 0;
    while total < cap {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut visited = vec![false; n];
        visited[source] = true;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            if v == sink {
                break;
            }
            for (i, &u) in g.neighbors(v).iter().enumerate() {
                if !visited[u] && flow[v][i] < 1 {
                    visited[u] = true;
                    parent[u] = Some((v, i));
                    queue.push_back(u);
                }
            }
        }
        if !visited[sink] {
            break;
        }
        let mut v = sink;
        while let Some((p, i)) = parent[v] {
            flow[p][i] += 1;
            let back = g.neighbors(v).iter().position(|&w| w == p).expect("symmetric adjacency");
            flow[v][back] -= 1;
            v = p;
        }
        total += 1;
    }
    total
}
