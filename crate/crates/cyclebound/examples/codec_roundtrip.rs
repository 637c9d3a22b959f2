//! Round-trip graphs through the graph6 codec: encode a few named graphs,
//! parse them back, and check the decoded graph is identical. Also shows
//! the multi-record file form used by the batch tooling.

use cyclebound::gen;
use cyclebound::graph::Graph;
use cyclebound::graph6::{encode_graph6, encode_graph6_file, parse_graph6, parse_graph6_file};

fn main() {
    let samples: Vec<(&str, Graph)> = vec![
        ("K_1", Graph::complete(1).unwrap()),
        ("K_3", Graph::complete(3).unwrap()),
        ("K_4", Graph::complete(4).unwrap()),
        ("P_4", gen::path(4).unwrap()),
        ("C_5", gen::cycle(5).unwrap()),
        ("K_{3,3}", gen::complete_bipartite(3, 3).unwrap()),
        ("Petersen", gen::petersen()),
    ];

    println!("{:<10} {:>3} {:>5}  graph6", "graph", "n", "edges");
    for (name, g) in &samples {
        let record = encode_graph6(g);
        let back = parse_graph6(&record).expect("own encoding parses");
        assert_eq!(&back, g, "decode(encode(g)) must be g");
        println!("{:<10} {:>3} {:>5}  {}", name, g.n(), g.edge_count(), record);
    }

    // Known pins: these byte strings are the standard encodings.
    assert_eq!(encode_graph6(&Graph::complete(1).unwrap()), "@");
    assert_eq!(encode_graph6(&Graph::complete(3).unwrap()), "Bw");
    assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
    assert_eq!(encode_graph6(&gen::petersen()), "IheA@GUAo");

    let graphs: Vec<Graph> = samples.into_iter().map(|(_, g)| g).collect();
    let file = encode_graph6_file(&graphs);
    let parsed = parse_graph6_file(&file).expect("file of own encodings parses");
    assert_eq!(parsed, graphs);
    println!();
    println!("file round trip: {} records, {} bytes", parsed.len(), file.len());
}
