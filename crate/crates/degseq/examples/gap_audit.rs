//! The two arithmetic shortcuts are each exact in only one direction. This
//! audit enumerates every divergence up to a sequence length:
//!
//! * sufficiency gaps — sequences that pass the four-condition arithmetic
//!   check yet have no connected realization (the check accepts too much);
//! * threshold gaps — sequences whose every realization is connected, yet
//!   whose edge count sits below the forcing threshold (the threshold
//!   refuses too much).
//!
//!     cargo run --example gap_audit

use degseq::{find_sufficiency_gaps, find_threshold_gaps, verdict};

fn main() -> degseq::Result<()> {
    let sufficiency = find_sufficiency_gaps(5)?;
    println!("arithmetic check passes, no connected realization (n <= 5):");
    for s in &sufficiency {
        let r = verdict(s);
        assert!(r.arithmetic_connected && !r.exact_connected);
        println!("  {s}{}", if !degseq::is_graphic(s) { "  (not even graphic)" } else { "" });
    }

    let threshold = find_threshold_gaps(6, 1)?;
    println!("\nforcibly connected but below the edge threshold (n <= 6):");
    for s in &threshold {
        println!("  {s}");
    }

    // The smallest witnesses on each side:
    println!(
        "\nsmallest witnesses: {} (accepted wrongly), {} (refused wrongly)",
        sufficiency.first().expect("gaps exist at n = 4"),
        threshold.first().expect("gaps exist at n = 2"),
    );
    Ok(())
}
