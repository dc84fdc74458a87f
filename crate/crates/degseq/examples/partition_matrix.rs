//! Bins every connected graph on up to 5 vertices into a grid: column j
//! holds the isomorphism classes with j+1 vertices, row i those with i+j
//! edges. Row 0 of each column is the trees; the top non-empty row is the
//! complete graph; no row in between is empty.
//!
//!     cargo run --example partition_matrix

use degseq::{
    cell_census, column_row_bounds, enumeration::census_to_text, partition_cell, CensusOptions,
    DegreeSequence,
};

fn main() -> degseq::Result<()> {
    let census = cell_census(5, CensusOptions::default())?;
    print!("{}", census_to_text(&census));

    // Each column is contiguously populated from the trees up to the clique:
    println!();
    for col in 0..=4 {
        let (lo, hi) = column_row_bounds(col);
        assert_eq!(census.nonempty_rows_in_column(col), (lo..=hi).collect::<Vec<_>>());
        println!("column j={col}: rows {lo}..={hi} all non-empty");
    }

    // Every connected realization of a sequence lands in one knowable cell:
    println!();
    for input in ["1,1", "2,2,2", "3,3,2,2", "4,4,4,4,4"] {
        let s: DegreeSequence = input.parse()?;
        let cell = partition_cell(&s)?;
        println!(
            "{s}  ->  cell {cell}  ({} classes there)",
            census.count(cell)
        );
    }
    Ok(())
}
