//! Profile a single graph: exact circumference, vertex connectivity,
//! minimum degree, and the residual invariants left after deleting a
//! longest cycle.
//!
//! Usage: cargo run --example profile_graph [GRAPH6]
//!
//! With no argument the Petersen graph is profiled.

use cyclebound::graph6::parse_graph6;
use cyclebound::invariants::profile;
use cyclebound::{gen, invariants};

fn main() {
    let g = match std::env::args().nth(1) {
        Some(record) => match parse_graph6(record.trim()) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("bad graph6 record: {e}");
                std::process::exit(2);
            }
        },
        None => gen::petersen(),
    };

    let p = profile(&g);
    println!("n               {}", p.n);
    println!("edges           {}", g.edge_count());
    println!("min degree      {}", p.min_degree);
    println!("connectivity    {}", p.kappa);
    println!("circumference   {}", p.circumference);
    println!("longest cycle   {:?}", p.cycle.vertices());

    if p.residual_empty {
        println!("residual        empty (the cycle is Hamiltonian)");
    } else {
        match p.cbar {
            Some(cbar) => println!("residual cbar   {cbar}"),
            None => println!("residual cbar   none"),
        }
        println!("residual pbar   {} (edges)", p.pbar);
    }

    let dominating = invariants::is_dominating_cycle(&g, &p.cycle)
        .expect("profile cycle is a valid witness");
    println!("dominating      {dominating}");

    let (kappa, cut) = invariants::vertex_connectivity_with_cut(&g);
    match cut {
        Some(cut) => println!("minimum cut     {cut:?} (size {kappa})"),
        None => println!("minimum cut     none (complete graph)"),
    }
}
