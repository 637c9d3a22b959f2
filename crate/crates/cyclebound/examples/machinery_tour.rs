//! Walk through the structural machinery on one small graph: build an
//! extension system over a longest cycle, classify its roots, run the
//! staged path-growth procedure, reroute a path system to a fixed point,
//! and measure the restricted and two-path lower bounds.
//!
//! The subject is an 11-vertex graph: a hexagon C, a disjoint 4-ring H on
//! {6,7,8,9}, a chord vertex 10 adjacent to the opposite roots 6 and 8,
//! and two attachment edges 6-0 and 10-0 tying the residual to the cycle.

use cyclebound::gen::kappa_family;
use cyclebound::graph::{Graph, VertexSet};
use cyclebound::invariants::longest_cycle;
use cyclebound::machinery::{
    classify_vertices, compute_o, compute_omega, compute_stats, delta_relation,
    enumerate_instances, greedy_hc_extension, maximal_hc_extension, t_transform,
    theta_procedure, OVariant, UClass, VNeutPathMode,
};
use cyclebound::witness::{CycleWitness, PathWitness};

fn main() {
    let g = Graph::from_edge_list(
        11,
        &[
            // hexagon
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            // residual 4-ring
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 6),
            // chord vertex
            (6, 10),
            (8, 10),
            // attachments
            (6, 0),
            (10, 0),
        ],
    )
    .unwrap();

    let c = CycleWitness::Proper(vec![0, 1, 2, 3, 4, 5]);
    let h = CycleWitness::Proper(vec![6, 7, 8, 9]);
    assert_eq!(longest_cycle(&g).len(), 6);

    println!("== extension systems ==");
    let greedy = greedy_hc_extension(&g, &c, &h).unwrap();
    let maximal = maximal_hc_extension(&g, &c, &h).unwrap();
    // Both systems are certified against the exponential solvers: C is a
    // longest cycle and H a longest cycle of the residual.
    maximal.validate_longest().unwrap();

    for i in 0..maximal.h_len() {
        println!(
            "root {} : greedy path {:?}, maximal path {:?}",
            maximal.h()[i],
            greedy.tree(i),
            maximal.tree(i)
        );
    }
    // The greedy pass grows the first root it can (6), while the maximal
    // search settles on growing 8: same grown count, smaller path list.
    assert_eq!(greedy.tree(0), &[6, 10]);
    assert_eq!(maximal.tree(2), &[8, 10]);
    assert_eq!(maximal.nontrivial_count(), 1);
    println!(
        "terminal of root 8 is {}, its ring vertex is {:?}, free pool {:?}",
        maximal.u_hat(2),
        maximal.u_ring(2),
        maximal.pool().iter().collect::<Vec<_>>()
    );

    println!();
    println!("== root classification and statistics ==");
    let classes = classify_vertices(&maximal).unwrap();
    let stats = compute_stats(&maximal).unwrap();
    for (i, class) in classes.iter().enumerate() {
        println!(
            "root {} : class {:?}, phi = {}, psi = {}, b = {}, b* = {}, gamma = {}",
            maximal.h()[i],
            class,
            stats.phi[i],
            stats.psi[i],
            stats.b[i],
            stats.b_star[i],
            stats.gamma[i]
        );
    }
    // The grown root is separated: its terminal 10 sees root 6 on another
    // path. Every trivial root stays plain.
    assert_eq!(classes, vec![UClass::U0, UClass::U0, UClass::U1, UClass::U0]);
    println!("edge weights 2*beta = {:?}, average mu = {}", stats.two_beta, stats.mu);

    println!();
    println!("== staged path growth ==");
    // Grow a prefix of the cycle path 1-2-3-4 using {0,5} as the neutral
    // interior: the detour 1-0-5-4 lands past the tip, so the prefix jumps
    // to the whole path.
    let p = [1usize, 2, 3, 4];
    let neut = VertexSet::from_iter(g.n(), [0, 5]);
    let none = VertexSet::empty(g.n());
    let grow = theta_procedure(&g, &p, &neut, &none, VNeutPathMode::AllowEdges).unwrap();
    for (i, (path, xs)) in grow.paths.iter().zip(&grow.x_sets).enumerate() {
        println!("P_{i} = {:?}, X_{i} = {:?}", path, xs.iter().collect::<Vec<_>>());
    }
    assert_eq!(grow.final_path(), &[1, 0, 5, 4]);
    assert!(!grow.finished_in_fin);

    // With 6 declared a finish vertex the procedure exits on the escape
    // path 1-0-6 before any growth happens.
    let fin = VertexSet::from_iter(g.n(), [6]);
    let neut0 = VertexSet::from_iter(g.n(), [0]);
    let escape = theta_procedure(&g, &p, &neut0, &fin, VNeutPathMode::AllowEdges).unwrap();
    println!("with a finish set: final path {:?}", escape.final_path());
    assert!(escape.finished_in_fin);
    assert_eq!(escape.final_path(), &[1, 0, 6]);

    println!();
    println!("== rerouting to a fixed point ==");
    // A single root-to-cycle path from 6 rides through vertex 10, which
    // belongs to root 8's grown path, so the transform hands the path to 8.
    let moved = t_transform(&maximal, &[vec![6, 10, 0]]).unwrap();
    println!(
        "input starts [6]; after {} step(s) the system is {:?}",
        moved.steps, moved.paths
    );
    assert_eq!(moved.steps, 1);
    assert_eq!(moved.starts, vec![8]);

    println!();
    println!("== restricted and two-path bounds ==");
    // The ground set is the remaining roots' trees plus the two endpoints,
    // here {6, 7, 8, 9}, so the path runs along the residual ring.
    let o = compute_o(&maximal, 8, 6, OVariant::Plain).unwrap().unwrap();
    println!("longest restricted 8..6 path: {:?}", o.vertices);
    assert_eq!(o.vertices, vec![8, 7, 6]);

    // Every escape from this residual funnels through vertex 0, so no
    // vertex-disjoint escape pair exists for the pair (6, 8).
    let omega = compute_omega(&maximal, 6, 8).unwrap();
    println!("two-path bound for (6, 8): {omega:?}");
    assert_eq!(omega, None);

    // On the extremal family the roots attach to both hub vertices, so
    // disjoint escapes exist and the bound is finite.
    let fam = kappa_family(2, 4).unwrap();
    let fc = CycleWitness::Proper(vec![0, 1, 2, 9, 3, 4, 5, 10]);
    let fh = CycleWitness::Proper(vec![6, 7, 8]);
    let fam_ext = maximal_hc_extension(&fam.graph, &fc, &fh).unwrap();
    fam_ext.validate_longest().unwrap();
    let fam_omega = compute_omega(&fam_ext, 6, 7).unwrap();
    println!("two-path bound for (6, 7) on the extremal family: {fam_omega:?}");
    assert!(fam_omega.is_some());

    println!();
    println!("== the adjacency relation ==");
    let l = PathWitness { vertices: vec![6, 10, 8] };
    for v in [7usize, 9, 0] {
        let related = delta_relation(&g, v, &l).unwrap();
        println!("delta({v}, [6, 10, 8]) = {related}");
    }
    assert!(delta_relation(&g, 7, &l).unwrap());
    assert!(delta_relation(&g, 9, &l).unwrap());
    assert!(!delta_relation(&g, 0, &l).unwrap());

    println!();
    let instances = enumerate_instances(&g).unwrap();
    println!(
        "enumerate_instances finds {} (cycle, residual cycle) instance(s)",
        instances.len()
    );
}
