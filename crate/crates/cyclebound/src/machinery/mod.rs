/*!
Structural machinery over a fixed longest cycle C and a fixed longest proper
cycle H = u_1…u_h of the leftover graph G∖C.

The central object is an extension system: one path T(u_i) per cycle vertex
u_i of H, growing away from H inside G∖C, pairwise vertex-disjoint, whose
terminals have no neighbors outside V(T) ∪ V(C). Submodules build on it:

 * [`theta`]: the staged path-growth procedure Θ used to classify roots,
 * [`stats`]: the per-root classification and counting statistics (Φ, Ψ, B,
   A, ρ, Λ, φ′, γ, β, μ),
 * [`transform`]: the rerouting transformation for systems of (H,C)-paths,
 * [`opaths`]: longest paths inside restricted vertex sets (the O-family)
   and the two-path composite bound Ω,
 * [`lemmas`]: inequality checkers driven by the above, plus a whole-graph
   suite runner,
 * [`instances`]: exhaustive enumeration of (C, H, maximal T) triples for
   tiny graphs.

Everything is exact and sized for desk-scale graphs; searches are capped and
refuse larger inputs rather than degrade.
*/

use crate::graph::{Graph, VertexSet};
use crate::invariants::{self, InvariantError};
use crate::witness::{CycleWitness, PathWitness};
use thiserror::Error;

pub mod instances;
pub mod lemmas;
pub mod opaths;
pub mod stats;
pub mod theta;
pub mod transform;

pub use instances::{enumerate_instances, LemmaInstance};
pub use lemmas::{
    check_all_lemmas, check_lemma, check_lemma3, run_lemma_suite, CaseRecord, CheckResult,
    LemmaId, LemmaSummary, SuiteReport,
};
pub use opaths::{compute_o, compute_omega, longest_path_within, OVariant};
pub use stats::{classify_vertices, classify_vertices_with, compute_stats, ExtensionStats, UClass};
pub use theta::{theta_procedure, ThetaResult, VNeutPathMode};
pub use transform::{t_transform, TransformOutcome};

/// Size ceiling for the exhaustive searches in this module
/// (maximal extension search, instance enumeration).
pub const MACHINERY_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MachineryError {
    #[error("{what} supports at most {cap}, got {got}")]
    SizeCap { what: &'static str, got: usize, cap: usize },
    #[error("the leftover cycle has length {cbar}; a proper cycle (length >= 3) is required")]
    DegenerateResidual { cbar: usize },
    #[error("C must be a proper cycle of the graph")]
    BadCycleWitness,
    #[error("H must be a proper cycle of the graph vertex-disjoint from C")]
    BadResidualCycle,
    #[error("bad extension paths: {detail}")]
    BadPaths { detail: &'static str },
    #[error("terminal of path {i} has a neighbor outside V(T) and V(C)")]
    NotAnExtension { i: usize },
    #[error("vertex {vertex} heads a single-vertex path and has no tree successor")]
    MissingRing { vertex: usize },
    #[error("bad path-growth input: {detail}")]
    BadTheta { detail: &'static str },
    #[error("unknown lemma id {name:?}")]
    UnknownLemma { name: String },
    #[error("bad transformation input: {detail}")]
    BadTransformInput { detail: &'static str },
    #[error("off-path form needs an odd number of path vertices, got {len}")]
    EvenDelta { len: usize },
    #[error("x and y must be distinct vertices of H")]
    BadEndpoints,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// A longest cycle C, a longest proper cycle H of G∖C, and one extension
/// path per H-vertex: T(u_i) starts at u_i, stays inside G∖C, the paths are
/// pairwise vertex-disjoint, and every terminal û_i satisfies
/// N(û_i) ⊆ V(T) ∪ V(C).
///
/// Construction validates all structural invariants; whether C and H are in
/// fact longest is the caller's certificate (see [`HcExtension::validate_longest`]).
#[derive(Clone, Debug)]
pub struct HcExtension {
    graph: Graph,
    c: Vec<usize>,
    c_set: VertexSet,
    h: Vec<usize>,
    paths: Vec<Vec<usize>>,
    path_sets: Vec<VertexSet>,
    t_set: VertexSet,
}

impl HcExtension {
    /// Builds and validates an extension system. `c` and `h` are cycles of
    /// `graph` (H vertex-disjoint from C), `paths[i]` is T(u_i) starting at
    /// the i-th vertex of `h`.
    pub fn new(
        graph: Graph,
        c: &CycleWitness,
        h: &CycleWitness,
        paths: Vec<Vec<usize>>,
    ) -> Result<Self, MachineryError> {
        if !c.is_proper() || !c.validate(&graph) {
            return Err(MachineryError::BadCycleWitness);
        }
        if !h.is_proper() {
            return Err(MachineryError::DegenerateResidual { cbar: h.len() });
        }
        let c_vertices = c.vertices();
        let c_set = VertexSet::from_iter(graph.n(), c_vertices.iter().copied());
        let h_vertices = h.vertices();
        if !h.validate(&graph) || h_vertices.iter().any(|&v| c_set.contains(v)) {
            return Err(MachineryError::BadResidualCycle);
        }

        if paths.len() != h_vertices.len() {
            return Err(MachineryError::BadPaths { detail: "one path per H-vertex required" });
        }
        let mut t_set = VertexSet::empty(graph.n());
        let mut path_sets = Vec::with_capacity(paths.len());
        for (i, p) in paths.iter().enumerate() {
            if p.first() != Some(&h_vertices[i]) {
                return Err(MachineryError::BadPaths { detail: "path must start at its root" });
            }
            let w = PathWitness { vertices: p.clone() };
            if !w.validate(&graph) {
                return Err(MachineryError::BadPaths { detail: "not a path of the graph" });
            }
            let mut set = VertexSet::empty(graph.n());
            for &v in p {
                if c_set.contains(v) {
                    return Err(MachineryError::BadPaths { detail: "path meets C" });
                }
                if t_set.contains(v) || set.contains(v) {
                    return Err(MachineryError::BadPaths { detail: "paths are not disjoint" });
                }
                set.insert(v);
            }
            t_set.union_with(&set);
            path_sets.push(set);
        }

        let ext = HcExtension {
            graph,
            c: c_vertices,
            c_set,
            h: h_vertices,
            paths,
            path_sets,
            t_set,
        };
        for i in 0..ext.h.len() {
            let hat = ext.u_hat(i);
            let mut outside = ext.graph.neighbors(hat);
            outside.subtract(&ext.t_set);
            outside.subtract(&ext.c_set);
            if !outside.is_empty() {
                return Err(MachineryError::NotAnExtension { i });
            }
        }
        Ok(ext)
    }

    /// Certifies the extremality assumptions: C is a longest cycle of the
    /// graph and H a longest cycle of G∖C. Separate from construction
    /// because the solvers are exponential and callers often already hold
    /// the certificate.
    pub fn validate_longest(&self) -> Result<(), MachineryError> {
        if invariants::longest_cycle(&self.graph).len() != self.c.len() {
            return Err(MachineryError::BadCycleWitness);
        }
        let (residual, keep) = self
            .graph
            .delete_vertices(&self.c_set)
            .map_err(|_| MachineryError::BadResidualCycle)?;
        let best = invariants::longest_cycle(&residual).len();
        if best != self.h.len() {
            return Err(MachineryError::BadResidualCycle);
        }
        let _ = keep;
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// C as a cyclic vertex sequence.
    pub fn cycle(&self) -> &[usize] {
        &self.c
    }

    pub fn cycle_set(&self) -> &VertexSet {
        &self.c_set
    }

    /// H as a cyclic vertex sequence; `h()[i]` is the root of `tree(i)`.
    pub fn h(&self) -> &[usize] {
        &self.h
    }

    pub fn h_len(&self) -> usize {
        self.h.len()
    }

    /// Index of `v` on H, if `v` is an H-vertex.
    pub fn h_index(&self, v: usize) -> Option<usize> {
        self.h.iter().position(|&u| u == v)
    }

    /// T(u_i) as a vertex sequence starting at the root.
    pub fn tree(&self, i: usize) -> &[usize] {
        &self.paths[i]
    }

    pub fn tree_set(&self, i: usize) -> &VertexSet {
        &self.path_sets[i]
    }

    /// V(T), the union of all extension paths.
    pub fn t_set(&self) -> &VertexSet {
        &self.t_set
    }

    /// Terminal û_i of T(u_i); equals the root exactly for trivial paths.
    pub fn u_hat(&self, i: usize) -> usize {
        *self.paths[i].last().expect("paths are nonempty")
    }

    /// Successor ů of the root on T(u_i); `None` for trivial paths.
    pub fn u_ring(&self, i: usize) -> Option<usize> {
        self.paths[i].get(1).copied()
    }

    /// Vertices on neither C nor any extension path.
    pub fn pool(&self) -> VertexSet {
        let mut p = VertexSet::full(self.graph.n());
        p.subtract(&self.c_set);
        p.subtract(&self.t_set);
        p
    }

    /// Number of roots whose path actually grew (u ≠ û), the quantity the
    /// maximal extension maximizes.
    pub fn nontrivial_count(&self) -> usize {
        self.paths.iter().filter(|p| p.len() >= 2).count()
    }
}

fn residual_proper_cycle(h: &CycleWitness) -> Result<&CycleWitness, MachineryError> {
    if h.is_proper() {
        Ok(h)
    } else {
        Err(MachineryError::DegenerateResidual { cbar: h.len() })
    }
}

/// Grows an extension system greedily: start every path as its root alone;
/// while some terminal has a neighbor outside V(T) ∪ V(C), append the
/// lowest-numbered such neighbor to the lowest-indexed offending path.
/// Terminates because each step claims a new vertex.
pub fn greedy_hc_extension(
    g: &Graph,
    c: &CycleWitness,
    h: &CycleWitness,
) -> Result<HcExtension, MachineryError> {
    let h = residual_proper_cycle(h)?;
    let roots = h.vertices();
    let c_set = VertexSet::from_iter(g.n(), c.vertices().iter().copied());
    let mut paths: Vec<Vec<usize>> = roots.iter().map(|&r| vec![r]).collect();
    let mut covered = VertexSet::from_iter(g.n(), roots.iter().copied());
    covered.union_with(&c_set);

    loop {
        let mut grew = false;
        for p in paths.iter_mut() {
            let hat = *p.last().expect("nonempty");
            let mut free = g.neighbors(hat);
            free.subtract(&covered);
            if let Some(w) = free.min() {
                p.push(w);
                covered.insert(w);
                grew = true;
                break;
            }
        }
        if !grew {
            break;
        }
    }
    HcExtension::new(g.clone(), c, h, paths)
}

/// Exhaustive search for an extension system maximizing the number of grown
/// roots, ties broken by the lexicographically smallest path list. Capped at
/// [`MACHINERY_CAP`] vertices.
pub fn maximal_hc_extension(
    g: &Graph,
    c: &CycleWitness,
    h: &CycleWitness,
) -> Result<HcExtension, MachineryError> {
    if g.n() > MACHINERY_CAP {
        return Err(MachineryError::SizeCap {
            what: "maximal extension search",
            got: g.n(),
            cap: MACHINERY_CAP,
        });
    }
    let h = residual_proper_cycle(h)?;
    let roots = h.vertices();
    let c_set = VertexSet::from_iter(g.n(), c.vertices().iter().copied());
    let mut reserved = VertexSet::from_iter(g.n(), roots.iter().copied());
    reserved.union_with(&c_set);

    struct Ctx<'a> {
        g: &'a Graph,
        c_set: &'a VertexSet,
        reserved: VertexSet,
        roots: Vec<usize>,
        paths: Vec<Vec<usize>>,
        best: Option<(usize, Vec<Vec<usize>>)>,
    }

    impl Ctx<'_> {
        fn assign(&mut self, i: usize) {
            if i == self.roots.len() {
                self.leaf();
                return;
            }
            self.extend(i);
        }

        // Depth-first over all ways to extend path i, including not at all.
        fn extend(&mut self, i: usize) {
            self.assign(i + 1);
            let hat = *self.paths[i].last().expect("nonempty");
            let mut free = self.g.neighbors(hat);
            free.subtract(&self.reserved);
            for w in free.iter().collect::<Vec<_>>() {
                self.paths[i].push(w);
                self.reserved.insert(w);
                self.extend(i);
                self.reserved.remove(w);
                self.paths[i].pop();
            }
        }

        fn leaf(&mut self) {
            let mut t_set = VertexSet::empty(self.g.n());
            for p in &self.paths {
                for &v in p {
                    t_set.insert(v);
                }
            }
            for p in &self.paths {
                let hat = *p.last().expect("nonempty");
                let mut outside = self.g.neighbors(hat);
                outside.subtract(&t_set);
                outside.subtract(self.c_set);
                if !outside.is_empty() {
                    return;
                }
            }
            let objective = self.paths.iter().filter(|p| p.len() >= 2).count();
            let better = match &self.best {
                None => true,
                Some((obj, paths)) => {
                    objective > *obj || (objective == *obj && self.paths < *paths)
                }
            };
            if better {
                self.best = Some((objective, self.paths.clone()));
            }
        }
    }

    let mut ctx = Ctx {
        g,
        c_set: &c_set,
        reserved,
        paths: roots.iter().map(|&r| vec![r]).collect(),
        roots,
        best: None,
    };
    ctx.assign(0);
    let (_, paths) = ctx.best.expect("the all-trivial system is always a candidate");
    HcExtension::new(g.clone(), c, h, paths)
}

/// Adjacency relation between a vertex and a path.
///
/// Off-path form (`v` not on `l`): requires an odd number of path vertices
/// v_1…v_{2t−1} and holds when `v` is adjacent to every odd-indexed one.
/// On-path form (`v` on `l`): holds when `v` is adjacent to every other
/// path vertex.
pub fn delta_relation(g: &Graph, v: usize, l: &PathWitness) -> Result<bool, MachineryError> {
    if !l.validate(g) || v >= g.n() {
        return Err(MachineryError::BadPaths { detail: "delta relation needs a valid path" });
    }
    let vs = &l.vertices;
    if vs.contains(&v) {
        return Ok(vs.iter().all(|&u| u == v || g.has_edge(v, u)));
    }
    if vs.len().is_multiple_of(2) {
        return Err(MachineryError::EvenDelta { len: vs.len() });
    }
    Ok(vs.iter().step_by(2).all(|&u| g.has_edge(v, u)))
}
