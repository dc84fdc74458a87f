//! Edge counts and connectivity: a graph on n vertices with minimum degree
//! at least 1 and enough edges is necessarily connected, and the bound is
//! sharp — one edge below it lives a disconnected graph (a near-complete
//! clique plus a separate edge) that shares its degree sequence with a
//! connected twin.
//!
//!     cargo run --example threshold_table

use degseq::{connectivity_edge_threshold, extremal_pair, max_disconnected_edges};

fn main() -> degseq::Result<()> {
    println!("{:>3} {:>22} {:>18}", "n", "max disconnected edges", "forcing threshold");
    for n in 4..=10 {
        println!(
            "{n:>3} {:>22} {:>18}",
            max_disconnected_edges(n)?,
            connectivity_edge_threshold(n)?
        );
    }

    // Sharpness at n = 6: the pair shares degrees 3,3,3,3,1,1 and the
    // maximal sub-threshold edge count, yet differs in connectivity.
    let (apart, together) = extremal_pair(6)?;
    println!("\nextremal pair at n = 6 ({} edges each):", apart.edge_count());
    println!("disconnected: {:?}", apart.edges().collect::<Vec<_>>());
    println!("connected:    {:?}", together.edges().collect::<Vec<_>>());
    assert_eq!(apart.degree_sequence()?, together.degree_sequence()?);
    assert!(!apart.is_connected() && together.is_connected());

    // The caveat in "assumes minimum degree >= 1" is real: without it no
    // edge count forces connectivity (complete graph plus isolated vertex).
    println!("\nwithout the minimum-degree assumption the threshold cannot exist:");
    println!("K5 plus an isolated vertex has 10 edges on 6 vertices and is disconnected");
    Ok(())
}
