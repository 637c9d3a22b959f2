/*!
Exact graph invariants: circumference, longest path, vertex connectivity,
and the residual invariants left after deleting a longest cycle.

Longest cycle is a branch-and-bound DFS over simple paths anchored at their
minimum vertex, with closure checks against the anchor. Pruning:

 (a) reachability: a partial path cannot beat the incumbent using more
     vertices than remain reachable from its endpoint, and it cannot close
     at all once no anchor neighbor is reachable;
 (b) 2-core reduction: vertices with fewer than two neighbors in the
     allowed set lie on no proper cycle and are removed up front;
 (c) incumbent seeding from a deterministic greedy walk;
 (d) separator segments: for a small vertex cut S of the current start's
     component (found by max-flow), any cycle extension decomposes into
     interior runs separated by remaining S-vertices, so it fits inside
     |S ∩ remaining| cut vertices plus that many plus one component-sized
     runs. The run holding the extension's first vertex must lie in a
     component adjacent to the path end, and the run holding its last in
     one adjacent to the anchor, unless the respective step lands on the
     cut itself. The two adjacency constraints are what let the solver
     prove optimality on the extremal families near n ≈ 34, where plain
     reachability admits exponentially many equal-length ties.

Ties break toward the lowest-numbered vertex, so witnesses are
deterministic. Residual invariants are relative to the specific returned
witness: `residual_invariants(g, c)` deletes exactly `V(c)`.

Vertex connectivity uses minimum s–t vertex cuts (unit vertex capacities,
max-flow) over the standard pair selection anchored at a minimum-degree
vertex: flows to every non-neighbor of `s`, plus flows between non-adjacent
neighbor pairs of `s`. One of those pairs straddles any minimum cut.
*/

use crate::graph::{Graph, VertexSet};
use crate::witness::{canonical_cycle, CycleWitness, PathWitness};
use serde::Serialize;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{what} supports at most n = {cap}, got n = {n}")]
    SizeCap { what: &'static str, n: usize, cap: usize },
    #[error("witness is not a cycle of the graph")]
    BadWitness,
}

pub const ALL_CYCLES_CAP: usize = 12;

pub fn min_degree(g: &Graph) -> usize {
    g.min_degree()
}

// ---------------------------------------------------------------- cycles

/// Longest cycle with a deterministic witness (exact, no budget).
pub fn longest_cycle(g: &Graph) -> CycleWitness {
    longest_cycle_budgeted(g, None).0
}

/// Budgeted variant: returns the best witness found and whether the search
/// finished (`true`) or was cut off by the deadline (`false`, witness is
/// then only a lower bound).
pub fn longest_cycle_budgeted(g: &Graph, deadline: Option<Instant>) -> (CycleWitness, bool) {
    let n = g.n();
    let mut search = Search::new(deadline);
    let mut best = degenerate_best(g);
    let mut best_len = best.len();

    if let Some(seed) = greedy_cycle(g) {
        if seed.len() > best_len {
            best_len = seed.len();
            best = CycleWitness::Proper(canonical_cycle(&seed));
        }
    }

    for s in 0..n {
        if search.expired() {
            break;
        }
        if best_len >= n {
            break;
        }
        let Some((allowed, cut)) = prepare_start(g, s, best_len) else {
            continue;
        };
        let mut path = vec![s];
        let mut used = VertexSet::empty(n);
        used.insert(s);
        search.extend_cycle(g, s, &mut path, &mut used, &allowed, &cut, &mut best_len, &mut best);
    }
    (best, !search.aborted)
}

fn degenerate_best(g: &Graph) -> CycleWitness {
    for u in 0..g.n() {
        if let Some(v) = g.neighbors_iter(u).next() {
            return CycleWitness::Edge(u.min(v), u.max(v));
        }
    }
    CycleWitness::Vertex(0)
}

/// Start-vertex preparation: restrict to vertices ≥ s, take the 2-core,
/// keep s's component, and find a small vertex cut for prune (d).
fn prepare_start(g: &Graph, s: usize, best_len: usize) -> Option<(VertexSet, Vec<usize>)> {
    let n = g.n();
    let mut allowed = VertexSet::empty(n);
    for v in s..n {
        allowed.insert(v);
    }
    // 2-core
    loop {
        let mut removed = false;
        let members: Vec<usize> = allowed.iter().collect();
        for v in members {
            if g.neighbors_in(v, &allowed).len() < 2 {
                allowed.remove(v);
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }
    if !allowed.contains(s) {
        return None;
    }
    let comp = g.reachable_within(s, &allowed);
    if comp.len() <= best_len.max(2) {
        return None;
    }
    let cut = if comp.len() > 12 {
        let keep: Vec<usize> = comp.iter().collect();
        let sub = g.induced(&keep);
        match vertex_connectivity_with_cut(&sub) {
            (k, Some(cut_local)) if k <= 8 => cut_local.iter().map(|&i| keep[i]).collect(),
            _ => Vec::new(),
        }
    } else {
        Vec::new()
    };
    Some((comp, cut))
}

struct Search {
    deadline: Option<Instant>,
    nodes: u64,
    aborted: bool,
}

impl Search {
    fn new(deadline: Option<Instant>) -> Self {
        Search { deadline, nodes: 0, aborted: false }
    }

    fn expired(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                self.aborted = true;
            }
        }
        self.aborted
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 1023 == 0 && self.expired() {
            return true;
        }
        self.aborted
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_cycle(
        &mut self,
        g: &Graph,
        s: usize,
        path: &mut Vec<usize>,
        used: &mut VertexSet,
        allowed: &VertexSet,
        cut: &[usize],
        best_len: &mut usize,
        best: &mut CycleWitness,
    ) {
        if self.tick() {
            return;
        }
        let end = *path.last().unwrap();
        if path.len() >= 3 && path.len() > *best_len && g.has_edge(end, s) {
            *best_len = path.len();
            *best = CycleWitness::Proper(canonical_cycle(path));
        }
        let rem = allowed.difference(used);
        if path.len() + rem.len() <= *best_len {
            return;
        }
        let mut pool = g.reachable_within(end, &rem);
        pool.remove(end);

        // closure: some remaining anchor neighbor must stay reachable
        let anchor_nbrs = g.neighbors_in(s, &pool);
        if anchor_nbrs.is_empty() {
            return;
        }
        // prune (d): separator-segment bound. The extension decomposes into
        // interior runs separated by cut vertices; with k cut vertices left
        // there are at most k+1 runs, each inside one interior component.
        // The first run is confined to a component seeing the path end and
        // the last to one seeing an anchor neighbor; either collapses when
        // the extension steps onto (or closes at) the cut directly.
        let s_rem: Vec<usize> = cut.iter().copied().filter(|&v| pool.contains(v)).collect();
        let k = s_rem.len();
        let mut interior = pool.clone();
        for &v in &s_rem {
            interior.remove(v);
        }
        let comps = g.components_within(&interior);
        let mut order: Vec<(usize, usize)> =
            comps.iter().enumerate().map(|(i, c)| (c.len(), i)).collect();
        order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut rank = vec![0usize; comps.len()];
        for (p, &(_, ci)) in order.iter().enumerate() {
            rank[ci] = p;
        }
        // sum of the m largest component sizes, skipping up to two of them
        let top_skip = |skip1: Option<usize>, skip2: Option<usize>, m: usize| -> usize {
            let mut sum = 0;
            let mut taken = 0;
            for (p, &(sz, _)) in order.iter().enumerate() {
                if taken == m {
                    break;
                }
                if Some(p) == skip1 || Some(p) == skip2 {
                    continue;
                }
                sum += sz;
                taken += 1;
            }
            sum
        };
        let end_nbrs = g.neighbors(end);
        let end_on_cut = s_rem.iter().any(|&v| end_nbrs.contains(v));
        let anchor_on_cut = anchor_nbrs.iter().any(|v| s_rem.contains(&v));
        let end_adj: Vec<usize> = (0..comps.len())
            .filter(|&i| comps[i].intersects(&end_nbrs))
            .collect();
        let anchor_adj: Vec<usize> = (0..comps.len())
            .filter(|&i| comps[i].intersects(&anchor_nbrs))
            .collect();
        let middle = k.saturating_sub(1);
        let mut ub_int = 0usize;
        if end_on_cut && anchor_on_cut {
            ub_int = ub_int.max(top_skip(None, None, middle));
        }
        if end_on_cut {
            for &y in &anchor_adj {
                ub_int = ub_int.max(comps[y].len() + top_skip(Some(rank[y]), None, middle));
            }
        }
        if anchor_on_cut {
            for &x in &end_adj {
                ub_int = ub_int.max(comps[x].len() + top_skip(Some(rank[x]), None, middle));
            }
        }
        for &x in &end_adj {
            for &y in &anchor_adj {
                if x == y {
                    ub_int =
                        ub_int.max(comps[x].len() + top_skip(Some(rank[x]), None, middle));
                } else if k >= 1 {
                    ub_int = ub_int.max(
                        comps[x].len()
                            + comps[y].len()
                            + top_skip(Some(rank[x]), Some(rank[y]), middle),
                    );
                }
            }
        }
        if path.len() + k + ub_int <= *best_len {
            return;
        }

        for v in g.neighbors_in(end, &pool).iter() {
            path.push(v);
            used.insert(v);
            self.extend_cycle(g, s, path, used, allowed, cut, best_len, best);
            used.remove(v);
            path.pop();
            if self.aborted {
                return;
            }
        }
    }
}

/// Deterministic greedy seed: from every start, walk to the unvisited
/// neighbor of maximum remaining degree (ties low), then try to close.
fn greedy_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut path = vec![s];
        let mut used = VertexSet::empty(n);
        used.insert(s);
        loop {
            let end = *path.last().unwrap();
            let mut pick: Option<(usize, usize)> = None;
            let avail = VertexSet::full(n).difference(&used);
            for v in g.neighbors_in(end, &avail).iter() {
                let d = g.neighbors_in(v, &avail).len();
                if pick.is_none_or(|(pd, _)| d > pd) {
                    pick = Some((d, v));
                }
            }
            match pick {
                Some((_, v)) => {
                    path.push(v);
                    used.insert(v);
                }
                None => break,
            }
        }
        // close at the deepest suffix whose end sees s
        while path.len() >= 3 {
            if g.has_edge(*path.last().unwrap(), s) {
                if best.as_ref().is_none_or(|b| path.len() > b.len()) {
                    best = Some(path.clone());
                }
                break;
            }
            path.pop();
        }
    }
    best
}

/// Every longest cycle (canonical witnesses, deterministic order).
/// Capped at n ≤ 12.
pub fn all_longest_cycles(g: &Graph) -> Result<Vec<CycleWitness>, InvariantError> {
    let n = g.n();
    if n > ALL_CYCLES_CAP {
        return Err(InvariantError::SizeCap {
            what: "all_longest_cycles",
            n,
            cap: ALL_CYCLES_CAP,
        });
    }
    let c = longest_cycle(g).len();
    match c {
        1 => Ok((0..n).map(CycleWitness::Vertex).collect()),
        2 => Ok(g.edges().into_iter().map(|(u, v)| CycleWitness::Edge(u, v)).collect()),
        _ => {
            let mut out = Vec::new();
            for s in 0..n {
                let Some((allowed, _)) = prepare_start(g, s, 2) else {
                    continue;
                };
                if allowed.len() < c {
                    continue;
                }
                let mut path = vec![s];
                let mut used = VertexSet::empty(n);
                used.insert(s);
                collect_exact(g, s, c, &mut path, &mut used, &allowed, &mut out);
            }
            Ok(out)
        }
    }
}

fn collect_exact(
    g: &Graph,
    s: usize,
    c: usize,
    path: &mut Vec<usize>,
    used: &mut VertexSet,
    allowed: &VertexSet,
    out: &mut Vec<CycleWitness>,
) {
    let end = *path.last().unwrap();
    if path.len() == c {
        // one orientation per cycle: second vertex below the last
        if path[1] < path[c - 1] && g.has_edge(end, s) {
            out.push(CycleWitness::Proper(path.clone()));
        }
        return;
    }
    let rem = allowed.difference(used);
    let mut pool = g.reachable_within(end, &rem);
    pool.remove(end);
    if path.len() + pool.len() < c {
        return;
    }
    if !g.has_neighbor_in(s, &pool) {
        return;
    }
    for v in g.neighbors_in(end, &pool).iter() {
        path.push(v);
        used.insert(v);
        collect_exact(g, s, c, path, used, allowed, out);
        used.remove(v);
        path.pop();
    }
}

// ---------------------------------------------------------------- paths

/// Longest path (edge count = vertices − 1) with deterministic witness.
pub fn longest_path(g: &Graph) -> PathWitness {
    longest_path_budgeted(g, None).0
}

pub fn longest_path_budgeted(g: &Graph, deadline: Option<Instant>) -> (PathWitness, bool) {
    let n = g.n();
    let mut search = Search::new(deadline);
    let mut best = vec![0usize];
    for s in 0..n {
        if search.expired() || best.len() >= n {
            break;
        }
        let mut path = vec![s];
        let mut used = VertexSet::empty(n);
        used.insert(s);
        extend_path(g, &mut search, &mut path, &mut used, &mut best);
    }
    (PathWitness { vertices: best }, !search.aborted)
}

fn extend_path(
    g: &Graph,
    search: &mut Search,
    path: &mut Vec<usize>,
    used: &mut VertexSet,
    best: &mut Vec<usize>,
) {
    if search.tick() {
        return;
    }
    if path.len() > best.len() {
        *best = path.clone();
    }
    let end = *path.last().unwrap();
    let rem = VertexSet::full(g.n()).difference(used);
    let mut pool = g.reachable_within(end, &rem);
    pool.remove(end);
    if path.len() + pool.len() <= best.len() {
        return;
    }
    for v in g.neighbors_in(end, &pool).iter() {
        path.push(v);
        used.insert(v);
        extend_path(g, search, path, used, best);
        used.remove(v);
        path.pop();
        if search.aborted {
            return;
        }
    }
}

// ------------------------------------------------------------ connectivity

/// Vertex connectivity: 0 for disconnected graphs and K_1, n−1 for K_n.
pub fn vertex_connectivity(g: &Graph) -> usize {
    vertex_connectivity_with_cut(g).0
}

/// Connectivity plus a realizing minimum cut (None for complete graphs and
/// K_1; the empty cut for disconnected graphs).
pub fn vertex_connectivity_with_cut(g: &Graph) -> (usize, Option<Vec<usize>>) {
    let n = g.n();
    if n == 1 {
        return (0, None);
    }
    if !g.is_connected() {
        return (0, Some(Vec::new()));
    }
    if g.is_complete() {
        return (n - 1, None);
    }
    let s = (0..n).min_by_key(|&v| g.degree(v)).unwrap();
    let mut best = usize::MAX;
    let mut best_pair = (0, 0);
    let consider = |a: usize, b: usize, best: &mut usize, best_pair: &mut (usize, usize)| {
        let f = st_vertex_flow(g, a, b, *best);
        if f < *best {
            *best = f;
            *best_pair = (a, b);
        }
    };
    for t in 0..n {
        if t != s && !g.has_edge(s, t) {
            consider(s, t, &mut best, &mut best_pair);
        }
    }
    let nbrs: Vec<usize> = g.neighbors_iter(s).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !g.has_edge(a, b) {
                consider(a, b, &mut best, &mut best_pair);
            }
        }
    }
    debug_assert!(best < usize::MAX, "non-complete graph must have a candidate pair");
    let cut = extract_cut(g, best_pair.0, best_pair.1);
    debug_assert_eq!(cut.len(), best);
    (best, Some(cut))
}

/// Max-flow network with split vertices: in(v)=2v, out(v)=2v+1.
struct FlowNet {
    adj: Vec<Vec<FlowEdge>>,
}

#[derive(Clone)]
struct FlowEdge {
    to: usize,
    rev: usize,
    cap: i32,
}

impl FlowNet {
    fn for_pair(g: &Graph, s: usize, t: usize) -> Self {
        let n = g.n();
        let inf = n as i32 + 1;
        let mut net = FlowNet { adj: vec![Vec::new(); 2 * n] };
        for v in 0..n {
            let cap = if v == s || v == t { inf } else { 1 };
            net.add(2 * v, 2 * v + 1, cap);
        }
        for (u, v) in g.edges() {
            net.add(2 * u + 1, 2 * v, inf);
            net.add(2 * v + 1, 2 * u, inf);
        }
        net
    }

    fn add(&mut self, u: usize, v: usize, cap: i32) {
        let ru = self.adj[v].len();
        let rv = self.adj[u].len();
        self.adj[u].push(FlowEdge { to: v, rev: ru, cap });
        self.adj[v].push(FlowEdge { to: u, rev: rv, cap: 0 });
    }

    /// Edmonds–Karp, stopping early once the flow reaches `cap_at`.
    fn max_flow(&mut self, src: usize, dst: usize, cap_at: usize) -> usize {
        let mut flow = 0usize;
        while flow < cap_at {
            let parent = self.bfs(src, dst);
            let Some(parent) = parent else { break };
            // unit augmentation: every augmenting path carries ≥ 1
            let mut v = dst;
            let mut push = i32::MAX;
            while v != src {
                let (u, ei) = parent[v];
                push = push.min(self.adj[u][ei].cap);
                v = u;
            }
            let mut v = dst;
            while v != src {
                let (u, ei) = parent[v];
                self.adj[u][ei].cap -= push;
                let rev = self.adj[u][ei].rev;
                self.adj[v][rev].cap += push;
                v = u;
            }
            flow += push as usize;
        }
        flow
    }

    fn bfs(&self, src: usize, dst: usize) -> Option<Vec<(usize, usize)>> {
        let mut parent: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX); self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[src] = true;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for (ei, e) in self.adj[u].iter().enumerate() {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    parent[e.to] = (u, ei);
                    if e.to == dst {
                        return Some(parent);
                    }
                    queue.push_back(e.to);
                }
            }
        }
        None
    }

    fn residual_reachable(&self, src: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[src] = true;
        let mut stack = vec![src];
        while let Some(u) = stack.pop() {
            for e in &self.adj[u] {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    stack.push(e.to);
                }
            }
        }
        seen
    }
}

fn st_vertex_flow(g: &Graph, s: usize, t: usize, stop_at: usize) -> usize {
    let mut net = FlowNet::for_pair(g, s, t);
    net.max_flow(2 * s + 1, 2 * t, stop_at.min(g.n()))
}

fn extract_cut(g: &Graph, s: usize, t: usize) -> Vec<usize> {
    let mut net = FlowNet::for_pair(g, s, t);
    net.max_flow(2 * s + 1, 2 * t, g.n());
    let seen = net.residual_reachable(2 * s + 1);
    (0..g.n()).filter(|&v| v != s && v != t && seen[2 * v] && !seen[2 * v + 1]).collect()
}

// ------------------------------------------------------------- residuals

#[derive(Clone, Debug, Serialize)]
pub struct Residual {
    pub residual_empty: bool,
    /// Longest cycle of G − V(C) under the conventions; None when empty.
    pub cbar: Option<usize>,
    /// Longest path of G − V(C) in edges; −1 when empty.
    pub pbar: i64,
    pub cbar_witness: Option<CycleWitness>,
    pub pbar_witness: Option<PathWitness>,
}

/// Deletes the witness's vertex set and solves the remainder.
pub fn residual_invariants(g: &Graph, c: &CycleWitness) -> Result<Residual, InvariantError> {
    residual_invariants_budgeted(g, c, None).map(|(r, _)| r)
}

pub fn residual_invariants_budgeted(
    g: &Graph,
    c: &CycleWitness,
    deadline: Option<Instant>,
) -> Result<(Residual, bool), InvariantError> {
    if !c.validate(g) {
        return Err(InvariantError::BadWitness);
    }
    let drop = VertexSet::from_iter(g.n(), c.vertices());
    match g.delete_vertices(&drop) {
        Err(_) => Ok((
            Residual {
                residual_empty: true,
                cbar: None,
                pbar: -1,
                cbar_witness: None,
                pbar_witness: None,
            },
            true,
        )),
        Ok((rg, map)) => {
            let (cw, c_done) = longest_cycle_budgeted(&rg, deadline);
            let (pw, p_done) = longest_path_budgeted(&rg, deadline);
            let cbar_witness = match &cw {
                CycleWitness::Vertex(v) => CycleWitness::Vertex(map[*v]),
                CycleWitness::Edge(u, v) => CycleWitness::Edge(map[*u], map[*v]),
                CycleWitness::Proper(vs) => {
                    CycleWitness::Proper(vs.iter().map(|&v| map[v]).collect())
                }
            };
            let pbar_witness =
                PathWitness { vertices: pw.vertices.iter().map(|&v| map[v]).collect() };
            Ok((
                Residual {
                    residual_empty: false,
                    cbar: Some(cw.len()),
                    pbar: pw.len() as i64,
                    cbar_witness: Some(cbar_witness),
                    pbar_witness: Some(pbar_witness),
                },
                c_done && p_done,
            ))
        }
    }
}

/// A cycle is dominating when every edge has an endpoint on it
/// (equivalently: the residual is edgeless).
pub fn is_dominating_cycle(g: &Graph, c: &CycleWitness) -> Result<bool, InvariantError> {
    if !c.validate(g) {
        return Err(InvariantError::BadWitness);
    }
    let on = VertexSet::from_iter(g.n(), c.vertices());
    Ok(g.edges().iter().all(|&(u, v)| on.contains(u) || on.contains(v)))
}

// --------------------------------------------------------------- profile

/// The full invariant profile a bound evaluation needs.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantProfile {
    pub n: usize,
    pub min_degree: usize,
    pub kappa: usize,
    pub circumference: usize,
    pub cycle: CycleWitness,
    pub residual_empty: bool,
    pub cbar: Option<usize>,
    pub pbar: i64,
    /// False when a time budget cut any stage short; the cycle and residual
    /// numbers are then lower bounds, not exact values.
    pub complete: bool,
}

pub fn profile(g: &Graph) -> InvariantProfile {
    profile_budgeted(g, None)
}

pub fn profile_budgeted(g: &Graph, deadline: Option<Instant>) -> InvariantProfile {
    let (cycle, cycle_done) = longest_cycle_budgeted(g, deadline);
    let (res, res_done) =
        residual_invariants_budgeted(g, &cycle, deadline).expect("computed witness is valid");
    InvariantProfile {
        n: g.n(),
        min_degree: g.min_degree(),
        kappa: vertex_connectivity(g),
        circumference: cycle.len(),
        cycle,
        residual_empty: res.residual_empty,
        cbar: res.cbar,
        pbar: res.pbar,
        complete: cycle_done && res_done,
    }
}
