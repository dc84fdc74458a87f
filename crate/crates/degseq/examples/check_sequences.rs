//! Runs every sequence predicate over a batch of inputs and prints the
//! verdicts side by side, including the two famous divergences: a sequence
//! the arithmetic check wrongly accepts, and one the edge-count threshold
//! wrongly refuses.
//!
//!     cargo run --example check_sequences

use degseq::{verdict, DegreeSequence};

fn main() -> degseq::Result<()> {
    let inputs = [
        "2,2,1,1",       // a path: everything agrees
        "3,3,3,3,1,1",   // connected-realizable, but K4 + K2 realizes it too
        "3,3,1,1",       // passes the arithmetic check, yet not graphic
        "4,2,1,1,1,1",   // forcibly connected in truth, below the threshold
        "1,1,1,1",       // graphic, but no realization is connected
        "3,2,1,1",       // odd degree sum
    ];

    println!(
        "{:<14} {:>7} {:>12} {:>9} {:>10}  failed conditions",
        "sequence", "graphic", "arith-check", "connected", "forced"
    );
    for input in inputs {
        let s: DegreeSequence = input.parse()?;
        let report = verdict(&s);
        let failed: Vec<&str> = report.failure_reasons.iter().map(|c| c.as_str()).collect();
        println!(
            "{:<14} {:>7} {:>12} {:>9} {:>10}  {}",
            s.to_string(),
            report.graphic,
            report.arithmetic_connected,
            report.exact_connected,
            report.threshold_forced_connected,
            if failed.is_empty() { "-".to_string() } else { failed.join(",") },
        );
    }

    // The check/reality split in one line each:
    let gap: DegreeSequence = "3,3,1,1".parse()?;
    let r = verdict(&gap);
    println!();
    println!(
        "{gap}: arithmetic check says {}, exact predicate says {} -- the check is necessary, not sufficient",
        r.arithmetic_connected, r.exact_connected
    );
    Ok(())
}
