//! Evaluate the full comparison table of circumference lower bounds on a
//! few contrasting graphs: the extremal family (tight), the Petersen graph
//! (slack everywhere), and a sparse random graph. Values are exact
//! rationals; nothing is rounded.
//!
//! Usage: cargo run --example bound_report [SOURCE...]
//!
//! A source is a generator spec (named:petersen, kappa_family:k=2,d=3,
//! gnp:n=12,p=1/2,seed=7, ...), a path to a graph6 file holding one
//! record, or a bare graph6 literal.

use cyclebound::campaign::{render_solve_text, solve_one};
use std::time::Duration;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let sources: Vec<String> = if args.is_empty() {
        vec![
            "kappa_family:k=2,d=3".to_string(),
            "named:petersen".to_string(),
            "gnp:n=12,p=2/5,seed=11".to_string(),
        ]
    } else {
        args
    };

    let budget = Some(Duration::from_secs(10));
    let mut first = true;
    for source in &sources {
        if !first {
            println!();
        }
        first = false;
        match solve_one(source, 0, budget) {
            Ok(out) => print!("{}", render_solve_text(&out)),
            Err(e) => {
                eprintln!("error: {e}");
                std::process::exit(2);
            }
        }
    }
}
