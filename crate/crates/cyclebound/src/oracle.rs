/*!
Reference oracles: deliberately naive exhaustive implementations used to
cross-check the production solvers. Nothing here shares code with the
solver paths (no pruning, no bitset tricks, just full enumeration) so an
agreement between the two is meaningful evidence. Exponential; keep inputs
at or below ~10 vertices.
*/

use crate::graph::Graph;
use crate::witness::canonical_cycle;
use std::collections::BTreeSet;

/// Longest-cycle length by enumerating every simple cycle (conventions:
/// a vertex counts 1, an edge 2).
pub fn longest_cycle_len(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 1;
    if g.edge_count() > 0 {
        best = 2;
    }
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for s in 0..n {
        path.push(s);
        used[s] = true;
        extend_cycles(g, s, &mut path, &mut used, &mut |len| best = best.max(len));
        used[s] = false;
        path.pop();
    }
    best
}

fn extend_cycles(
    g: &Graph,
    anchor: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    found: &mut impl FnMut(usize),
) {
    let end = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(end, anchor) {
        found(path.len());
    }
    for v in (anchor + 1)..g.n() {
        if !used[v] && g.has_edge(end, v) {
            path.push(v);
            used[v] = true;
            extend_cycles(g, anchor, path, used, found);
            used[v] = false;
            path.pop();
        }
    }
}

/// Every proper cycle (length ≥ 3), one canonical representative each.
pub fn proper_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = BTreeSet::new();
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for s in 0..n {
        path.push(s);
        used[s] = true;
        collect_cycles(g, s, &mut path, &mut used, &mut out);
        used[s] = false;
        path.pop();
    }
    out.into_iter().collect()
}

fn collect_cycles(
    g: &Graph,
    anchor: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut BTreeSet<Vec<usize>>,
) {
    let end = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(end, anchor) {
        out.insert(canonical_cycle(path));
    }
    for v in (anchor + 1)..g.n() {
        if !used[v] && g.has_edge(end, v) {
            path.push(v);
            used[v] = true;
            collect_cycles(g, anchor, path, used, out);
            used[v] = false;
            path.pop();
        }
    }
}

/// Longest-path length in edges by enumerating every simple path.
pub fn longest_path_len(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for s in 0..n {
        path.push(s);
        used[s] = true;
        extend_paths(g, &mut path, &mut used, &mut |len| best = best.max(len));
        used[s] = false;
        path.pop();
    }
    best
}

fn extend_paths(
    g: &Graph,
    path: &mut Vec<usize>,
    used: &mut [bool],
    found: &mut impl FnMut(usize),
) {
    found(path.len() - 1);
    let end = *path.last().unwrap();
    for v in 0..g.n() {
        if !used[v] && g.has_edge(end, v) {
            path.push(v);
            used[v] = true;
            extend_paths(g, path, used, found);
            used[v] = false;
            path.pop();
        }
    }
}

/// Vertex connectivity by trying every deletion set in order of size:
/// 0 for disconnected graphs and K_1, n−1 for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    for k in 1..n - 1 {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            if disconnects(g, &subset) {
                return k;
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    n - 1
}

/// Advances `subset` to the next k-combination of `0..n`; false at the last.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] != i + n - k {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn disconnects(g: &Graph, drop: &[usize]) -> bool {
    let n = g.n();
    let dropped: Vec<bool> = {
        let mut d = vec![false; n];
        for &v in drop {
            d[v] = true;
        }
        d
    };
    let start = match (0..n).find(|&v| !dropped[v]) {
        Some(s) => s,
        None => return false,
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in g.neighbors_iter(u) {
            if !dropped[v] && !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count < n - drop.len()
}
