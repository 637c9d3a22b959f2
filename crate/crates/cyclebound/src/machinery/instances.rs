//! Enumeration of checkable extension instances for a small graph.
//!
//! An instance fixes one longest cycle C, one longest proper cycle H of
//! the leftover graph, and the maximal extension system the pair admits,
//! together with its precomputed statistics. Graphs whose leftover after
//! any longest cycle has no proper cycle yield no instances at all; the
//! suite runner reports why.

use super::stats::{compute_stats, ExtensionStats};
use super::{maximal_hc_extension, HcExtension, MachineryError, MACHINERY_CAP};
use crate::graph::{Graph, VertexSet};
use crate::invariants::all_longest_cycles;
use crate::witness::CycleWitness;

#[derive(Clone, Debug)]
pub struct LemmaInstance {
    pub ext: HcExtension,
    pub stats: ExtensionStats,
}

/// All instances of `g`, ordered by host cycle and then leftover cycle in
/// the enumeration order of the cycle solver. Graphs above
/// [`MACHINERY_CAP`] vertices are refused.
pub fn enumerate_instances(g: &Graph) -> Result<Vec<LemmaInstance>, MachineryError> {
    if g.n() > MACHINERY_CAP {
        return Err(MachineryError::SizeCap {
            what: "instance enumeration",
            got: g.n(),
            cap: MACHINERY_CAP,
        });
    }
    let mut out = Vec::new();
    for c in all_longest_cycles(g)? {
        if !c.is_proper() {
            break;
        }
        let c_set = VertexSet::from_iter(g.n(), c.vertices().iter().copied());
        let Ok((residual, keep)) = g.delete_vertices(&c_set) else {
            continue;
        };
        for rc in all_longest_cycles(&residual)? {
            if !rc.is_proper() {
                break;
            }
            let lifted =
                CycleWitness::Proper(rc.vertices().iter().map(|&v| keep[v]).collect());
            let ext = maximal_hc_extension(g, &c, &lifted)?;
            let stats = compute_stats(&ext)?;
            out.push(LemmaInstance { ext, stats });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::machinery::tests::{hexagon_plus_triangle, wheel_pendant};

    #[test]
    fn crafted_graphs_yield_single_instances() {
        let (g, c, h) = wheel_pendant();
        let instances = enumerate_instances(&g).unwrap();
        assert_eq!(instances.len(), 1);
        assert_eq!(instances[0].ext.cycle(), c.vertices());
        assert_eq!(instances[0].ext.h(), h.vertices());

        let (g, _, _) = hexagon_plus_triangle();
        assert_eq!(enumerate_instances(&g).unwrap().len(), 1);
    }

    #[test]
    fn degenerate_leftovers_yield_nothing() {
        // the leftover after the 6-cycle is a single edge
        let fam = gen::kappa_family(2, 3).unwrap();
        assert!(enumerate_instances(&fam.graph).unwrap().is_empty());
        // complete graphs leave nothing behind at all
        assert!(enumerate_instances(&Graph::complete(5).unwrap()).unwrap().is_empty());
        // and forests have no cycle to start from
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(enumerate_instances(&star).unwrap().is_empty());
    }

    #[test]
    fn oversized_graphs_are_refused() {
        let g = Graph::edgeless(13).unwrap();
        assert!(matches!(
            enumerate_instances(&g),
            Err(MachineryError::SizeCap { what: "instance enumeration", .. })
        ));
    }
}
