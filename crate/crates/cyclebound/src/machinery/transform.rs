/*!
Rerouting for systems of root-to-cycle paths.

An input system is a family of pairwise vertex-disjoint paths, each
starting at a root on H, ending on the host cycle C, and avoiding both
everywhere in between. Such a system may graze extension paths of roots it
does not start at; the transformation reroutes until the only extension
paths met are those of the (possibly updated) starts.

One step: pick the lowest-numbered root z outside the current starts whose
extension path meets the system, walk z's path from the root until the
first met vertex w, and replace the grazed path's whole segment before w by
the walk. The new path starts at z. Each step strictly shortens the tail of
some extension path that the system enters from outside, so the loop
terminates; a generous fuel assertion guards the claim.

The cycle endpoints never move, and every start either keeps its root or
moves to a grown root.
*/

use super::{HcExtension, MachineryError};
use crate::graph::VertexSet;
use crate::witness::PathWitness;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformOutcome {
    /// Rerouted paths, same order as the input.
    pub paths: Vec<Vec<usize>>,
    /// Final start of each path, `paths[i][0]`.
    pub starts: Vec<usize>,
    /// Number of reroute steps performed; zero means the input was already
    /// a fixed point.
    pub steps: usize,
}

/// Transforms a disjoint system of root-to-cycle paths into a fixed point
/// whose met extension paths are exactly those of its starts.
pub fn t_transform(
    ext: &HcExtension,
    paths: &[Vec<usize>],
) -> Result<TransformOutcome, MachineryError> {
    let g = ext.graph();
    let h_set = VertexSet::from_iter(g.n(), ext.h().iter().copied());

    let mut occupied = VertexSet::empty(g.n());
    for p in paths {
        let w = PathWitness { vertices: p.clone() };
        if p.len() < 2 || !w.validate(g) {
            return Err(MachineryError::BadTransformInput {
                detail: "each entry must be a path with at least one edge",
            });
        }
        if !h_set.contains(p[0]) {
            return Err(MachineryError::BadTransformInput {
                detail: "paths must start on the leftover cycle",
            });
        }
        if !ext.cycle_set().contains(*p.last().expect("nonempty")) {
            return Err(MachineryError::BadTransformInput {
                detail: "paths must end on the host cycle",
            });
        }
        for &v in &p[1..p.len() - 1] {
            if h_set.contains(v) || ext.cycle_set().contains(v) {
                return Err(MachineryError::BadTransformInput {
                    detail: "interior vertices must avoid both cycles",
                });
            }
        }
        for &v in p {
            if occupied.contains(v) {
                return Err(MachineryError::BadTransformInput {
                    detail: "paths must be pairwise vertex-disjoint",
                });
            }
            occupied.insert(v);
        }
    }

    let mut current: Vec<Vec<usize>> = paths.to_vec();
    let ends: Vec<usize> = current.iter().map(|p| *p.last().expect("nonempty")).collect();
    let mut steps = 0usize;
    let fuel = 4 * g.n() * current.len() + 16;

    loop {
        assert!(steps <= fuel, "reroute loop exceeded its termination bound");
        let union = union_of(g.n(), &current);
        let starts: Vec<usize> = current.iter().map(|p| p[0]).collect();
        let grazed = ext
            .h()
            .iter()
            .copied()
            .filter(|&z| !starts.contains(&z) && ext.tree_set(hx(ext, z)).intersects(&union))
            .min();
        let Some(z) = grazed else { break };
        let zi = hx(ext, z);
        assert!(ext.u_ring(zi).is_some(), "a grazed root always has a grown path");
        let walk = ext.tree(zi);
        let (stop, w) = walk
            .iter()
            .copied()
            .enumerate()
            .find(|&(_, v)| union.contains(v))
            .expect("the grazed path meets the system");
        let j = current
            .iter()
            .position(|p| p.contains(&w))
            .expect("the met vertex lies on some path");
        debug_assert_eq!(current.iter().filter(|p| p.contains(&w)).count(), 1);
        let at = current[j].iter().position(|&v| v == w).expect("w is on path j");
        debug_assert!(at != 0 && at != current[j].len() - 1, "the met vertex is interior");
        let mut replacement = walk[..=stop].to_vec();
        replacement.extend_from_slice(&current[j][at + 1..]);
        current[j] = replacement;
        steps += 1;
    }

    let union = union_of(g.n(), &current);
    let starts: Vec<usize> = current.iter().map(|p| p[0]).collect();
    let met = ext
        .h()
        .iter()
        .filter(|&&v| ext.tree_set(hx(ext, v)).intersects(&union))
        .count();
    assert_eq!(met, current.len(), "a fixed point meets exactly the start paths");
    for (i, p) in current.iter().enumerate() {
        assert_eq!(*p.last().expect("nonempty"), ends[i], "cycle endpoints never move");
        assert!(
            starts[i] == paths[i][0] || ext.u_ring(hx(ext, starts[i])).is_some(),
            "a moved start lands on a grown root"
        );
    }
    let mut seen = VertexSet::empty(g.n());
    for p in &current {
        for &v in p {
            assert!(!seen.contains(v), "rerouted paths stay disjoint");
            seen.insert(v);
        }
    }

    Ok(TransformOutcome { paths: current, starts, steps })
}

fn union_of(n: usize, paths: &[Vec<usize>]) -> VertexSet {
    let mut u = VertexSet::empty(n);
    for p in paths {
        for &v in p {
            u.insert(v);
        }
    }
    u
}

fn hx(ext: &HcExtension, v: usize) -> usize {
    ext.h_index(v).expect("vertex lies on the leftover cycle")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::Graph;
    use crate::machinery::{enumerate_instances, HcExtension};
    use crate::witness::CycleWitness;

    /// C_5, a triangle on {5,6,7} with 8 adjacent to 5 and 6, and the
    /// cycle contacts 8-0 and 9-0. The extension path from 5 claims 8, so
    /// a system entering through the edge 6-8 grazes it.
    fn graze_extension(extra: &[(usize, usize)]) -> HcExtension {
        let mut edges = vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 6),
            (6, 7),
            (5, 7),
            (5, 8),
            (6, 8),
            (8, 0),
            (9, 0),
        ];
        edges.extend_from_slice(extra);
        let g = Graph::from_edge_list(10, &edges).unwrap();
        let c = CycleWitness::Proper(vec![0, 1, 2, 3, 4]);
        let h = CycleWitness::Proper(vec![5, 6, 7]);
        HcExtension::new(g, &c, &h, vec![vec![5, 8], vec![6], vec![7]]).unwrap()
    }

    #[test]
    fn fixed_point_is_untouched() {
        let ext = graze_extension(&[]);
        let out = t_transform(&ext, &[vec![5, 8, 0]]).unwrap();
        assert_eq!(out.steps, 0);
        assert_eq!(out.paths, vec![vec![5, 8, 0]]);
        assert_eq!(out.starts, vec![5]);
    }

    #[test]
    fn grazing_path_is_respliced() {
        let ext = graze_extension(&[]);
        let out = t_transform(&ext, &[vec![6, 8, 0]]).unwrap();
        assert_eq!(out.steps, 1);
        assert_eq!(out.paths, vec![vec![5, 8, 0]]);
        assert_eq!(out.starts, vec![5]);
    }

    #[test]
    fn untouched_companions_survive() {
        let ext = graze_extension(&[(7, 2)]);
        let out = t_transform(&ext, &[vec![6, 8, 0], vec![7, 2]]).unwrap();
        assert_eq!(out.steps, 1);
        assert_eq!(out.paths, vec![vec![5, 8, 0], vec![7, 2]]);
        assert_eq!(out.starts, vec![5, 7]);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        let ext = graze_extension(&[]);
        for bad in [
            vec![vec![8, 0]],                       // start off the leftover cycle
            vec![vec![6, 8]],                       // end off the host cycle
            vec![vec![6, 5, 8, 0]],                 // interior on the leftover cycle
            vec![vec![6, 8, 0], vec![5, 8, 0]],     // overlapping systems
            vec![vec![6]],                          // too short
        ] {
            assert!(matches!(
                t_transform(&ext, &bad),
                Err(MachineryError::BadTransformInput { .. })
            ));
        }
    }

    /// All simple root-to-cycle paths from `root` with interiors off both
    /// cycles, capped to keep the corpus sweep quick.
    fn hc_paths_from(ext: &HcExtension, root: usize, cap: usize) -> Vec<Vec<usize>> {
        let g = ext.graph();
        let h_set = VertexSet::from_iter(g.n(), ext.h().iter().copied());
        let mut out = Vec::new();
        let mut stack = vec![vec![root]];
        while let Some(p) = stack.pop() {
            if out.len() >= cap {
                break;
            }
            let last = *p.last().expect("nonempty");
            for w in g.neighbors_iter(last) {
                if p.contains(&w) {
                    continue;
                }
                if ext.cycle_set().contains(w) {
                    let mut done = p.clone();
                    done.push(w);
                    out.push(done);
                } else if !h_set.contains(w) {
                    let mut next = p.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
        }
        out
    }

    #[test]
    fn reroutes_reach_fixed_points_across_a_corpus() {
        let mut graphs = gen::enumerate_connected_dedup(6).unwrap();
        graphs.extend(gen::enumerate_connected_dedup(7).unwrap());
        for seed in [3, 5, 11] {
            graphs.push(gen::random_gnp(10, 1, 3, seed).unwrap());
            graphs.push(gen::random_gnp(12, 1, 4, seed).unwrap());
        }
        let mut systems = 0usize;
        let mut reroutes = 0usize;
        let mut run = |ext: &HcExtension, paths: &[Vec<usize>]| {
            let out = t_transform(ext, paths).unwrap();
            // the postconditions inside t_transform already ran;
            // a fixed point must also be idempotent
            let again = t_transform(ext, &out.paths).unwrap();
            assert_eq!(again.steps, 0);
            assert_eq!(again.paths, out.paths);
            systems += 1;
            reroutes += (out.steps > 0) as usize;
        };
        let mut exts: Vec<HcExtension> =
            vec![graze_extension(&[]), graze_extension(&[(7, 2)])];
        for g in &graphs {
            let Ok(instances) = enumerate_instances(g) else { continue };
            exts.extend(instances.into_iter().map(|inst| inst.ext));
        }
        for ext in &exts {
            let per_root: Vec<Vec<Vec<usize>>> =
                (0..ext.h_len()).map(|i| hc_paths_from(ext, ext.h()[i], 12)).collect();
            for escapes in &per_root {
                for e in escapes {
                    run(ext, std::slice::from_ref(e));
                }
            }
            for i in 0..per_root.len() {
                for j in i + 1..per_root.len() {
                    for e in &per_root[i] {
                        for f in &per_root[j] {
                            if f.iter().any(|v| e.contains(v)) {
                                continue;
                            }
                            run(ext, &[e.clone(), f.clone()]);
                        }
                    }
                }
            }
        }
        assert!(systems > 50, "the corpus exercised only {systems} systems");
        assert!(reroutes >= 1, "no system needed a reroute");
    }
}
