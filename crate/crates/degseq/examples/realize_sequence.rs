//! Builds connected graphs from degree sequences and shows the repair step:
//! the greedy realization sometimes lands in several components, and
//! degree-preserving 2-swaps fuse them without touching any degree.
//!
//!     cargo run --example realize_sequence

use degseq::{realize_connected, DegreeSequence, Error};

fn main() -> degseq::Result<()> {
    for input in ["4,1,1,1,1", "2,2,2,2,2,2", "3,3,3,3,1,1"] {
        let s: DegreeSequence = input.parse()?;
        let result = realize_connected(&s)?;
        println!("{s}  ->  {} edges, {} repair swap(s)", result.graph.edge_count(), result.swaps_used);
        print!("{}", result.graph.to_edge_list());
        println!();
    }

    // Two ways a sequence can be refused:
    match realize_connected(&"3,3,1,1".parse::<DegreeSequence>()?) {
        Err(Error::NotGraphic) => println!("3,3,1,1: no simple graph has these degrees"),
        other => panic!("unexpected outcome: {other:?}"),
    }
    match realize_connected(&"1,1,1,1".parse::<DegreeSequence>()?) {
        Err(Error::NotConnectedSequence) => {
            println!("1,1,1,1: realizable (two disjoint edges), but never connected")
        }
        other => panic!("unexpected outcome: {other:?}"),
    }
    Ok(())
}
