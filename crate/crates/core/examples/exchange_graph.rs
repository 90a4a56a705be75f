//! Breadth-first exchange graph of hearts, printed as DOT.
//!
//! `cargo run --example exchange_graph -- A2 3 | dot -Tsvg > a2.svg`

use dynkin_stab::{exchange_bfs, Diagram};

fn main() -> dynkin_stab::Result<()> {
    let mut args = std::env::args().skip(1);
    let d: Diagram = args.next().unwrap_or_else(|| "A2".into()).parse()?;
    let depth = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let g = exchange_bfs(&d, depth)?;
    eprintln!(
        "{} hearts, {} edges, closed: {}",
        g.nodes.len(),
        g.edges.len(),
        g.closed
    );
    print!("{}", g.to_dot());
    Ok(())
}
