//! Run every lemma checker over every extension-system instance of a
//! graph. An instance is a longest cycle C together with a longest proper
//! cycle H of G - V(C) and a maximal path system rooted on H; graphs whose
//! residual has no proper cycle (cbar <= 2) are skipped with a reason.
//!
//! Usage: cargo run --example lemma_suite [GRAPH6]

use cyclebound::gen;
use cyclebound::graph::Graph;
use cyclebound::graph6::parse_graph6;
use cyclebound::machinery::run_lemma_suite;

fn main() {
    let g: Graph = match std::env::args().nth(1) {
        Some(record) => match parse_graph6(record.trim()) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("bad graph6 record: {e}");
                std::process::exit(2);
            }
        },
        // Three triangles over an edge hub: kappa_family(2, 4). A longest
        // cycle covers two copies and the hub, leaving a triangle behind,
        // so every checker has a live instance.
        None => gen::kappa_family(2, 4).unwrap().graph,
    };

    let report = match run_lemma_suite(&g) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("suite refused the graph: {e}");
            std::process::exit(2);
        }
    };

    if report.instances == 0 {
        println!("no instances: {}", report.skipped.as_deref().unwrap_or("unknown"));
        return;
    }

    println!("instances: {}", report.instances);
    println!(
        "{:<22} {:>7} {:>10} {:>8}   sample violation",
        "lemma", "cases", "violations", "vacuous"
    );
    for s in &report.lemmas {
        let sample = match &s.sample {
            Some(c) => format!("{} < {} at {}", c.lhs, c.rhs, c.context),
            None => "-".to_string(),
        };
        println!(
            "{:<22} {:>7} {:>10} {:>8}   {}",
            s.lemma.name(),
            s.cases,
            s.violations,
            s.vacuous,
            sample
        );
    }
    println!();
    println!("total violations: {}", report.total_violations);
    std::process::exit(if report.total_violations == 0 { 0 } else { 1 });
}
