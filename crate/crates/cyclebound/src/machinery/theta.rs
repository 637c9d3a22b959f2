//! The staged path-growth procedure used to classify extension roots.
//!
//! Given a directed path P = v_0 v_1 ... v_n and two disjoint vertex sets
//! V_neut and V_fin (both disjoint from V(P)), the procedure maintains a
//! growing prefix X of P and repeatedly looks for a V_neut-path leaving
//! X minus its tip. A V_neut-path has both endpoints outside V_neut and
//! every internal vertex inside V_neut; a bare edge qualifies unless the
//! caller asks for at least one internal vertex.
//!
//! Stages, in priority order:
//!
//! 1. a V_neut-path from X minus the tip into V_fin ends the procedure
//!    (the final recorded path is that escape path),
//! 2. otherwise a V_neut-path from X minus the tip to a vertex strictly
//!    beyond the tip on P extends the prefix; among candidates the landing
//!    vertex is pushed as far along P as possible,
//! 3. otherwise the procedure stops and the last recorded path stands.
//!
//! Ties in stages 1 and 2 are broken by the lexicographically smallest
//! vertex sequence, which makes the whole procedure deterministic.

use super::MachineryError;
use crate::graph::{Graph, VertexSet};
use crate::witness::PathWitness;

/// Whether a single edge counts as a V_neut-path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VNeutPathMode {
    /// Paths with no internal vertex (bare edges) are admitted.
    AllowEdges,
    /// Only paths with at least one internal vertex are admitted.
    RequireInterior,
}

/// Trace of one run: the recorded paths P_0 ..= P_pi and the prefix sets
/// X_0 ..= X_pi. A stage-1 finish records an empty final prefix set.
#[derive(Clone, Debug)]
pub struct ThetaResult {
    pub paths: Vec<Vec<usize>>,
    pub x_sets: Vec<VertexSet>,
    pub finished_in_fin: bool,
}

impl ThetaResult {
    /// Index of the last recorded path.
    pub fn pi(&self) -> usize {
        self.paths.len() - 1
    }

    pub fn final_path(&self) -> &[usize] {
        self.paths.last().expect("at least P_0 is always recorded")
    }
}

/// Runs the procedure on `p` (at least one edge) against `v_neut` and
/// `v_fin`. The two sets must be disjoint from each other and from `p`.
pub fn theta_procedure(
    g: &Graph,
    p: &[usize],
    v_neut: &VertexSet,
    v_fin: &VertexSet,
    mode: VNeutPathMode,
) -> Result<ThetaResult, MachineryError> {
    let witness = PathWitness { vertices: p.to_vec() };
    if p.len() < 2 || !witness.validate(g) {
        return Err(MachineryError::BadTheta { detail: "need a valid path with at least one edge" });
    }
    if v_neut.universe() != g.n() || v_fin.universe() != g.n() {
        return Err(MachineryError::BadTheta { detail: "vertex sets sized for a different graph" });
    }
    if v_neut.intersects(v_fin) {
        return Err(MachineryError::BadTheta { detail: "v_neut and v_fin must be disjoint" });
    }
    if p.iter().any(|&v| v_neut.contains(v) || v_fin.contains(v)) {
        return Err(MachineryError::BadTheta { detail: "path vertices must avoid both sets" });
    }

    // position of each vertex on p, for prefix and tail tests
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in p.iter().enumerate() {
        pos[v] = i;
    }

    let mut prefix_end = 1usize;
    let mut paths = vec![vec![p[0], p[1]]];
    let mut x_sets = vec![VertexSet::from_iter(g.n(), p[..2].iter().copied())];
    let mut finished_in_fin = false;

    loop {
        let tip = p[prefix_end];
        let starts: Vec<usize> =
            p[..=prefix_end].iter().copied().filter(|&v| v != tip).collect();

        let mut best_fin: Option<Vec<usize>> = None;
        let mut best_tail: Option<(usize, Vec<usize>)> = None;
        scan_vneut_paths(g, &starts, v_neut, mode, &mut |seq, terminal| {
            if v_fin.contains(terminal) {
                let mut cand = seq.to_vec();
                cand.push(terminal);
                if best_fin.as_ref().is_none_or(|b| cand < *b) {
                    best_fin = Some(cand);
                }
            } else if pos[terminal] != usize::MAX && pos[terminal] > prefix_end {
                let mut cand = seq.to_vec();
                cand.push(terminal);
                let further = match &best_tail {
                    None => true,
                    Some((bp, bseq)) => {
                        pos[terminal] > *bp || (pos[terminal] == *bp && cand < *bseq)
                    }
                };
                if further {
                    best_tail = Some((pos[terminal], cand));
                }
            }
        });

        if let Some(escape) = best_fin {
            paths.push(escape);
            x_sets.push(VertexSet::empty(g.n()));
            finished_in_fin = true;
            break;
        }
        let Some((landing, reroute)) = best_tail else { break };
        paths.push(reroute);
        x_sets.push(VertexSet::from_iter(g.n(), p[..=landing].iter().copied()));
        prefix_end = landing;
    }

    Ok(ThetaResult { paths, x_sets, finished_in_fin })
}

/// Invokes `sink(internal sequence, terminal)` for every V_neut-path that
/// starts at one of `starts`. The sequence passed to the sink holds the
/// start vertex and the internal vertices; the terminal is separate.
fn scan_vneut_paths(
    g: &Graph,
    starts: &[usize],
    v_neut: &VertexSet,
    mode: VNeutPathMode,
    sink: &mut dyn FnMut(&[usize], usize),
) {
    let mut seq = Vec::new();
    let mut used = VertexSet::empty(g.n());
    for &s in starts {
        seq.push(s);
        used.insert(s);
        descend(g, v_neut, mode, &mut seq, &mut used, sink);
        used.remove(s);
        seq.pop();
    }
}

fn descend(
    g: &Graph,
    v_neut: &VertexSet,
    mode: VNeutPathMode,
    seq: &mut Vec<usize>,
    used: &mut VertexSet,
    sink: &mut dyn FnMut(&[usize], usize),
) {
    let last = *seq.last().expect("sequence holds at least the start");
    for w in g.neighbors_iter(last) {
        if used.contains(w) {
            continue;
        }
        if v_neut.contains(w) {
            seq.push(w);
            used.insert(w);
            descend(g, v_neut, mode, seq, used, sink);
            used.remove(w);
            seq.pop();
        } else if seq.len() >= 2 || mode == VNeutPathMode::AllowEdges {
            sink(seq, w);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    #[test]
    fn chordless_path_stops_immediately() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = theta_procedure(&g, &[0, 1, 2, 3], &set(4, &[]), &set(4, &[]),
            VNeutPathMode::AllowEdges)
        .unwrap();
        assert_eq!(r.pi(), 0);
        assert_eq!(r.paths, vec![vec![0, 1]]);
        assert_eq!(r.x_sets, vec![set(4, &[0, 1])]);
        assert!(!r.finished_in_fin);
    }

    #[test]
    fn chord_extends_the_prefix() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let r = theta_procedure(&g, &[0, 1, 2, 3], &set(4, &[]), &set(4, &[]),
            VNeutPathMode::AllowEdges)
        .unwrap();
        // the chord from v_0 lands on v_2, nothing reaches v_3 afterwards
        assert_eq!(r.pi(), 1);
        assert_eq!(r.paths, vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(r.x_sets, vec![set(4, &[0, 1]), set(4, &[0, 1, 2])]);
        assert!(!r.finished_in_fin);
    }

    #[test]
    fn escape_into_fin_wins() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        let r = theta_procedure(&g, &[0, 1], &set(4, &[2]), &set(4, &[3]),
            VNeutPathMode::AllowEdges)
        .unwrap();
        assert_eq!(r.pi(), 1);
        assert_eq!(r.final_path(), &[0, 2, 3]);
        assert!(r.finished_in_fin);
        assert!(r.x_sets[1].is_empty());
    }

    #[test]
    fn interior_requirement_blocks_bare_edges() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 3)]).unwrap();
        let loose = theta_procedure(&g, &[0, 1], &set(4, &[]), &set(4, &[3]),
            VNeutPathMode::AllowEdges)
        .unwrap();
        assert!(loose.finished_in_fin);
        assert_eq!(loose.final_path(), &[0, 3]);

        let strict = theta_procedure(&g, &[0, 1], &set(4, &[]), &set(4, &[3]),
            VNeutPathMode::RequireInterior)
        .unwrap();
        assert!(!strict.finished_in_fin);
        assert_eq!(strict.pi(), 0);
    }

    #[test]
    fn preconditions_are_enforced() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let empty = set(4, &[]);
        // single vertex is not a path of positive length
        assert!(theta_procedure(&g, &[0], &empty, &empty, VNeutPathMode::AllowEdges).is_err());
        // not a path of the graph
        assert!(theta_procedure(&g, &[0, 2], &empty, &empty, VNeutPathMode::AllowEdges).is_err());
        // sets overlapping each other or the path
        assert!(theta_procedure(&g, &[0, 1], &set(4, &[3]), &set(4, &[3]),
            VNeutPathMode::AllowEdges)
        .is_err());
        assert!(theta_procedure(&g, &[0, 1], &set(4, &[1]), &empty,
            VNeutPathMode::AllowEdges)
        .is_err());
    }
}
