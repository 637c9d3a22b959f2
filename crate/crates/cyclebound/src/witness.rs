/*!
Cycle and path witnesses under the degenerate-cycle conventions: a single
vertex is a cycle of length 1, a single edge a cycle of length 2, and proper
cycles (length ≥ 3) are vertex sequences closed by an edge back to the start.
Path length counts edges, so a lone vertex is a path of length 0.
*/

use crate::graph::Graph;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum CycleWitness {
    Vertex(usize),
    Edge(usize, usize),
    /// Cyclic vertex sequence, length ≥ 3, closing edge implied.
    Proper(Vec<usize>),
}

// a witness is never empty, so the usual len/is_empty pairing does not apply
#[allow(clippy::len_without_is_empty)]
impl CycleWitness {
    /// Cycle length under the conventions (= number of vertices).
    pub fn len(&self) -> usize {
        match self {
            CycleWitness::Vertex(_) => 1,
            CycleWitness::Edge(_, _) => 2,
            CycleWitness::Proper(vs) => vs.len(),
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match self {
            CycleWitness::Vertex(v) => vec![*v],
            CycleWitness::Edge(u, v) => vec![*u, *v],
            CycleWitness::Proper(vs) => vs.clone(),
        }
    }

    pub fn is_proper(&self) -> bool {
        matches!(self, CycleWitness::Proper(_))
    }

    /// True when the witness is a cycle of `g` under the conventions.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            CycleWitness::Vertex(v) => *v < g.n(),
            CycleWitness::Edge(u, v) => *u < g.n() && *v < g.n() && g.has_edge(*u, *v),
            CycleWitness::Proper(vs) => {
                if vs.len() < 3 || !distinct(vs) || vs.iter().any(|&v| v >= g.n()) {
                    return false;
                }
                vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
                    && g.has_edge(*vs.last().unwrap(), vs[0])
            }
        }
    }
}

/// Simple path as its vertex sequence; length in edges is `vertices.len()-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
}

#[allow(clippy::len_without_is_empty)]
impl PathWitness {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn validate(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        !vs.is_empty()
            && distinct(vs)
            && vs.iter().all(|&v| v < g.n())
            && vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

fn distinct(vs: &[usize]) -> bool {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Canonical form of a proper cycle's vertex sequence: rotated so the
/// minimum vertex leads, reflected so the second vertex is the smaller of
/// the two neighbors of the minimum. Distinct cycles get distinct forms.
pub fn canonical_cycle(vs: &[usize]) -> Vec<usize> {
    debug_assert!(vs.len() >= 3);
    let k = vs.len();
    let (pos, _) = vs.iter().enumerate().min_by_key(|&(_, v)| v).expect("nonempty");
    let fwd: Vec<usize> = (0..k).map(|i| vs[(pos + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| vs[(pos + k - i) % k]).collect();
    if fwd[1] <= bwd[1] {
        fwd
    } else {
        bwd
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn validation_by_kind() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(CycleWitness::Vertex(3).validate(&g));
        assert!(!CycleWitness::Vertex(4).validate(&g));
        assert!(CycleWitness::Edge(2, 3).validate(&g));
        assert!(!CycleWitness::Edge(0, 3).validate(&g));
        assert!(CycleWitness::Proper(vec![0, 1, 2]).validate(&g));
        assert!(!CycleWitness::Proper(vec![0, 1, 3]).validate(&g));
        assert!(!CycleWitness::Proper(vec![0, 1]).validate(&g));
        assert!(!CycleWitness::Proper(vec![0, 1, 2, 0]).validate(&g));
    }

    #[test]
    fn path_validation_and_length() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let p = PathWitness { vertices: vec![0, 1, 2] };
        assert!(p.validate(&g) && p.len() == 2);
        assert!(PathWitness { vertices: vec![1] }.validate(&g));
        assert!(!PathWitness { vertices: vec![0, 2] }.validate(&g));
        assert!(!PathWitness { vertices: vec![] }.validate(&g));
    }

    #[test]
    fn canonical_cycle_identifies_rotations_and_reflections() {
        let base = vec![1, 4, 2, 7];
        let rotated = vec![2, 7, 1, 4];
        let reflected = vec![7, 2, 4, 1];
        let c = canonical_cycle(&base);
        assert_eq!(c, canonical_cycle(&rotated));
        assert_eq!(c, canonical_cycle(&reflected));
        assert_eq!(c[0], 1);
        // a genuinely different cycle on the same vertices stays different
        assert_ne!(c, canonical_cycle(&[1, 2, 4, 7]));
    }
}
