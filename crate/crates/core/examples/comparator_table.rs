//! ξ(m) next to the cruder bounds m + 1 and 2√m.
//!
//! cargo run -p xi-identity --example comparator_table

use xi_identity::cli::{comparator_row, format_f64, Mode};
use xi_identity::DEFAULT_REL_CUTOFF;

fn main() -> Result<(), xi_identity::cli::CliError> {
    println!(
        "{:>8}  {:>20}  {:>20}  {:>20}",
        "m", "m+1", "2*sqrt(m)", "xi(m)"
    );
    for m in [1, 2, 4, 10, 100, 1000, 10_000, 1_000_000] {
        let mode = if m <= 1000 { Mode::Exact } else { Mode::Float };
        let row = comparator_row(m, mode, DEFAULT_REL_CUTOFF)?;
        println!(
            "{:>8}  {:>20}  {:>20}  {:>20}",
            row.m,
            format_f64(row.langford_bound),
            format_f64(row.maurer_bound),
            format_f64(row.xi_value)
        );
    }
    Ok(())
}
