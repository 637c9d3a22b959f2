/*!
Longest paths through the trees of the other roots, and the two-path bound.

For a pair of distinct roots x, y the ground set V_1 collects every
extension path except those of x and y, plus the two roots themselves. The
seven path kinds differ in their endpoints and in whether the second vertex
of x's or y's own path (its ring vertex) is adjoined to the ground set:

| kind       | endpoints  | ground set      |
|------------|------------|-----------------|
| `Plain`    | x to y     | V_1             |
| `AugX`     | x to y     | V_1 + ring of x |
| `AugY`     | x to y     | V_1 + ring of y |
| `RingXToY` | ring_x to y| V_1 + ring of x |
| `RingXToX` | ring_x to x| V_1 + ring of x |
| `RingYToX` | ring_y to x| V_1 + ring of y |
| `RingYToY` | ring_y to y| V_1 + ring of y |

Every kind always admits at least one path: the segment of the leftover
cycle from x to y lies inside V_1, and a ring vertex is adjacent to its
root.

The two-path bound pairs x and y with vertex-disjoint escapes to the host
cycle whose interiors stay inside the free pool and the two roots' own
paths (the rerouting fixed points). Each pair selects one path kind per
endpoint by where the ring vertices land; the bound is the minimum over
pairs of the longest selected path. No pair, no bound.
*/

use std::collections::BTreeSet;

use super::{HcExtension, MachineryError};
use crate::graph::{Graph, VertexSet};
use crate::witness::PathWitness;

/// Ceiling on the ground-set size of a restricted path search.
pub const O_SET_CAP: usize = 12;
/// Ceiling on the graph order for the two-path bound.
pub const OMEGA_CAP: usize = 16;
/// Ceiling on the interior pool of the two-path enumeration.
pub const OMEGA_INTERIOR_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OVariant {
    Plain,
    AugX,
    AugY,
    RingXToY,
    RingXToX,
    RingYToX,
    RingYToY,
}

/// Longest simple path from `a` to `b` inside the subgraph induced on
/// `allowed`, maximizing the vertex count with lexicographic tie-break.
/// `None` when the endpoints coincide, fall outside `allowed`, or are not
/// connected inside it. Exhaustive; callers are expected to keep `allowed`
/// small (the wrappers enforce [`O_SET_CAP`]).
pub fn longest_path_within(
    g: &Graph,
    a: usize,
    b: usize,
    allowed: &VertexSet,
) -> Option<PathWitness> {
    if a == b || a >= g.n() || b >= g.n() || !allowed.contains(a) || !allowed.contains(b) {
        return None;
    }
    let mut best: Option<Vec<usize>> = None;
    let mut seq = vec![a];
    let mut used = VertexSet::empty(g.n());
    used.insert(a);
    grow(g, b, allowed, &mut seq, &mut used, &mut best);
    best.map(|vertices| PathWitness { vertices })
}

fn grow(
    g: &Graph,
    b: usize,
    allowed: &VertexSet,
    seq: &mut Vec<usize>,
    used: &mut VertexSet,
    best: &mut Option<Vec<usize>>,
) {
    let last = *seq.last().expect("sequence starts nonempty");
    if last == b {
        let better = match best {
            None => true,
            Some(cur) => seq.len() > cur.len() || (seq.len() == cur.len() && *seq < *cur),
        };
        if better {
            *best = Some(seq.clone());
        }
        return;
    }
    for w in g.neighbors_iter(last) {
        if allowed.contains(w) && !used.contains(w) {
            seq.push(w);
            used.insert(w);
            grow(g, b, allowed, seq, used, best);
            used.remove(w);
            seq.pop();
        }
    }
}

fn endpoint_indices(
    ext: &HcExtension,
    x: usize,
    y: usize,
) -> Result<(usize, usize), MachineryError> {
    if x == y {
        return Err(MachineryError::BadEndpoints);
    }
    match (ext.h_index(x), ext.h_index(y)) {
        (Some(ix), Some(iy)) => Ok((ix, iy)),
        _ => Err(MachineryError::BadEndpoints),
    }
}

fn ground_set(ext: &HcExtension, ix: usize, iy: usize) -> VertexSet {
    let g = ext.graph();
    let mut v1 = VertexSet::empty(g.n());
    for j in 0..ext.h_len() {
        if j != ix && j != iy {
            v1.union_with(ext.tree_set(j));
        }
    }
    v1.insert(ext.h()[ix]);
    v1.insert(ext.h()[iy]);
    v1
}

fn ring_of(ext: &HcExtension, i: usize) -> Result<usize, MachineryError> {
    ext.u_ring(i).ok_or(MachineryError::MissingRing { vertex: ext.h()[i] })
}

/// Longest path of the requested kind for the root pair (x, y), or `None`
/// when no such path exists (which cannot happen for a structurally valid
/// extension; see the module notes).
pub fn compute_o(
    ext: &HcExtension,
    x: usize,
    y: usize,
    variant: OVariant,
) -> Result<Option<PathWitness>, MachineryError> {
    let (ix, iy) = endpoint_indices(ext, x, y)?;
    let mut allowed = ground_set(ext, ix, iy);
    let (a, b) = match variant {
        OVariant::Plain => (x, y),
        OVariant::AugX => {
            allowed.insert(ring_of(ext, ix)?);
            (x, y)
        }
        OVariant::AugY => {
            allowed.insert(ring_of(ext, iy)?);
            (x, y)
        }
        OVariant::RingXToY => {
            let r = ring_of(ext, ix)?;
            allowed.insert(r);
            (r, y)
        }
        OVariant::RingXToX => {
            let r = ring_of(ext, ix)?;
            allowed.insert(r);
            (r, x)
        }
        OVariant::RingYToX => {
            let r = ring_of(ext, iy)?;
            allowed.insert(r);
            (r, x)
        }
        OVariant::RingYToY => {
            let r = ring_of(ext, iy)?;
            allowed.insert(r);
            (r, y)
        }
    };
    if allowed.len() > O_SET_CAP {
        return Err(MachineryError::SizeCap {
            what: "restricted path search",
            got: allowed.len(),
            cap: O_SET_CAP,
        });
    }
    Ok(longest_path_within(ext.graph(), a, b, &allowed))
}

/// Where an endpoint's ring vertex sits relative to an escape pair,
/// which decides the path kind the bound evaluates for that endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum RingSite {
    /// The endpoint's own path is not a single edge; the plain kind rules.
    Plain,
    NotPresent,
    InOwn,
    InOther,
}

fn ring_site(ext: &HcExtension, i: usize, own: &[usize], other: &[usize]) -> RingSite {
    if ext.tree(i).len() != 2 {
        return RingSite::Plain;
    }
    let ring = ext.u_ring(i).expect("a two-vertex path has a ring");
    if own.contains(&ring) {
        RingSite::InOwn
    } else if other.contains(&ring) {
        RingSite::InOther
    } else {
        RingSite::NotPresent
    }
}

/// All escapes from `from` to the host cycle with interiors inside
/// `interior` and no vertex in `banned`.
fn escapes(
    ext: &HcExtension,
    from: usize,
    interior: &VertexSet,
    banned: &VertexSet,
) -> Vec<Vec<usize>> {
    let g = ext.graph();
    let mut out = Vec::new();
    let mut stack = vec![vec![from]];
    while let Some(p) = stack.pop() {
        let last = *p.last().expect("nonempty");
        for w in g.neighbors_iter(last) {
            if banned.contains(w) || p.contains(&w) {
                continue;
            }
            if ext.cycle_set().contains(w) {
                let mut done = p.clone();
                done.push(w);
                out.push(done);
            } else if interior.contains(w) {
                let mut next = p.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    out
}

/// Vertex count of the two-path bound for the root pair (x, y): the
/// minimum over vertex-disjoint escape pairs of the longest path kind the
/// pair selects. `Ok(None)` when no disjoint escape pair exists.
pub fn compute_omega(
    ext: &HcExtension,
    x: usize,
    y: usize,
) -> Result<Option<usize>, MachineryError> {
    let (ix, iy) = endpoint_indices(ext, x, y)?;
    let g = ext.graph();
    if g.n() > OMEGA_CAP {
        return Err(MachineryError::SizeCap {
            what: "two path search",
            got: g.n(),
            cap: OMEGA_CAP,
        });
    }
    let mut interior = ext.pool();
    interior.union_with(ext.tree_set(ix));
    interior.union_with(ext.tree_set(iy));
    interior.remove(x);
    interior.remove(y);
    if interior.len() > OMEGA_INTERIOR_CAP {
        return Err(MachineryError::SizeCap {
            what: "two path interior",
            got: interior.len(),
            cap: OMEGA_INTERIOR_CAP,
        });
    }

    let mut keys: BTreeSet<(RingSite, RingSite)> = BTreeSet::new();
    let none = VertexSet::empty(g.n());
    for e in escapes(ext, x, &interior, &none) {
        let banned = VertexSet::from_iter(g.n(), e.iter().copied());
        for f in escapes(ext, y, &interior, &banned) {
            keys.insert((ring_site(ext, ix, &e, &f), ring_site(ext, iy, &f, &e)));
        }
    }
    if keys.is_empty() {
        return Ok(None);
    }

    let mut cache: std::collections::BTreeMap<OVariant, usize> = std::collections::BTreeMap::new();
    let mut o_len = |variant: OVariant| -> Result<usize, MachineryError> {
        if let Some(&l) = cache.get(&variant) {
            return Ok(l);
        }
        let path = compute_o(ext, x, y, variant)?
            .expect("the leftover cycle keeps every kind connected");
        let l = path.vertices.len();
        cache.insert(variant, l);
        Ok(l)
    };

    let mut best: Option<usize> = None;
    for (kx, ky) in keys {
        let plain = o_len(OVariant::Plain)?;
        let lx = match kx {
            RingSite::Plain => plain,
            RingSite::NotPresent => o_len(OVariant::AugX)?,
            RingSite::InOwn => o_len(OVariant::RingXToY)?,
            RingSite::InOther => o_len(OVariant::RingXToX)?,
        };
        let ly = match ky {
            RingSite::Plain => plain,
            RingSite::NotPresent => o_len(OVariant::AugY)?,
            RingSite::InOwn => o_len(OVariant::RingYToX)?,
            RingSite::InOther => o_len(OVariant::RingYToY)?,
        };
        let value = plain.max(lx).max(ly);
        best = Some(best.map_or(value, |b| b.min(value)));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machinery::tests::hexagon_plus_triangle;
    use crate::machinery::{maximal_hc_extension, HcExtension};
    use crate::witness::CycleWitness;

    #[test]
    fn bare_engine_handles_tiny_sets() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let all = VertexSet::full(2);
        assert_eq!(longest_path_within(&g, 0, 1, &all).unwrap().vertices, vec![0, 1]);
        assert!(longest_path_within(&g, 0, 0, &all).is_none());
        let only0 = VertexSet::from_iter(2, [0]);
        assert!(longest_path_within(&g, 0, 1, &only0).is_none());
    }

    #[test]
    fn engine_breaks_ties_lexicographically() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let all = VertexSet::full(4);
        assert_eq!(longest_path_within(&g, 0, 2, &all).unwrap().vertices, vec![0, 1, 2]);
    }

    #[test]
    fn plain_kind_detours_through_the_third_root() {
        let (g, c, h) = hexagon_plus_triangle();
        let ext = maximal_hc_extension(&g, &c, &h).unwrap();
        let o = compute_o(&ext, 6, 7, OVariant::Plain).unwrap().unwrap();
        assert_eq!(o.vertices, vec![6, 8, 7]);
        // every root is plain here, so ring-based kinds are unavailable
        assert_eq!(
            compute_o(&ext, 6, 7, OVariant::AugX).unwrap_err(),
            MachineryError::MissingRing { vertex: 6 }
        );
        // and no escape to the host cycle exists at all
        assert_eq!(compute_omega(&ext, 6, 7).unwrap(), None);
    }

    #[test]
    fn endpoints_must_be_distinct_roots() {
        let (g, c, h) = hexagon_plus_triangle();
        let ext = maximal_hc_extension(&g, &c, &h).unwrap();
        assert_eq!(compute_o(&ext, 6, 6, OVariant::Plain).unwrap_err(),
            MachineryError::BadEndpoints);
        assert_eq!(compute_o(&ext, 0, 7, OVariant::Plain).unwrap_err(),
            MachineryError::BadEndpoints);
        assert_eq!(compute_omega(&ext, 6, 0).unwrap_err(), MachineryError::BadEndpoints);
    }

    /// Square C, triangle roots, and exactly one escape pair: 4-0 and 5-2.
    /// The pair selects the plain kind on both ends.
    fn unique_pair_extension() -> HcExtension {
        let g = Graph::from_edge_list(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (4, 6), (4, 0), (5, 2)],
        )
        .unwrap();
        let c = CycleWitness::Proper(vec![0, 1, 2, 3]);
        let h = CycleWitness::Proper(vec![4, 5, 6]);
        HcExtension::new(g, &c, &h, vec![vec![4], vec![5], vec![6]]).unwrap()
    }

    #[test]
    fn unique_escape_pair_pins_the_bound() {
        let ext = unique_pair_extension();
        assert_eq!(compute_omega(&ext, 4, 5).unwrap(), Some(3));
        assert_eq!(compute_omega(&ext, 5, 4).unwrap(), Some(3));
        // root 6 never reaches the host cycle
        assert_eq!(compute_omega(&ext, 4, 6).unwrap(), None);
        assert_eq!(compute_omega(&ext, 5, 6).unwrap(), None);
    }

    #[test]
    fn size_ceilings_are_enforced() {
        // triangle host cycle plus a 13-cycle of roots: the ground set for
        // any pair holds 13 vertices
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        for i in 3..16 {
            edges.push((i, if i == 15 { 3 } else { i + 1 }));
        }
        let g = Graph::from_edge_list(16, &edges).unwrap();
        let c = CycleWitness::Proper(vec![0, 1, 2]);
        let h = CycleWitness::Proper((3..16).collect());
        let paths = (3..16).map(|v| vec![v]).collect();
        let ext = HcExtension::new(g, &c, &h, paths).unwrap();
        assert_eq!(
            compute_o(&ext, 3, 4, OVariant::Plain).unwrap_err(),
            MachineryError::SizeCap { what: "restricted path search", got: 13, cap: 12 }
        );

        // seventeen vertices exceed the omega ceiling outright
        let mut edges = vec![(0, 1), (1, 2), (2, 0), (14, 15), (15, 16), (14, 16)];
        for i in 3..14 {
            edges.push((i, if i == 13 { 3 } else { i + 1 }));
        }
        let g = Graph::from_edge_list(17, &edges).unwrap();
        let c = CycleWitness::Proper((3..14).collect());
        let h = CycleWitness::Proper(vec![14, 15, 16]);
        let paths = vec![vec![14], vec![15], vec![16]];
        let ext = HcExtension::new(g, &c, &h, paths).unwrap();
        assert_eq!(
            compute_omega(&ext, 14, 15).unwrap_err(),
            MachineryError::SizeCap { what: "two path search", got: 17, cap: 16 }
        );
    }

    #[test]
    fn interior_ceiling_is_enforced() {
        // triangle host cycle, triangle roots, nine isolated pool vertices
        let edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (3, 5)];
        let g = Graph::from_edge_list(15, &edges).unwrap();
        let c = CycleWitness::Proper(vec![0, 1, 2]);
        let h = CycleWitness::Proper(vec![3, 4, 5]);
        let ext = HcExtension::new(g, &c, &h, vec![vec![3], vec![4], vec![5]]).unwrap();
        assert_eq!(
            compute_omega(&ext, 3, 4).unwrap_err(),
            MachineryError::SizeCap { what: "two path interior", got: 9, cap: 8 }
        );
    }
}
