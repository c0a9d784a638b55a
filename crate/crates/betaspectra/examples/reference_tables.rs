//! Recompute the asymptote-to-exact ratio tables.
//!
//! For each ensemble and coupling the table reports the ratio of the
//! tail asymptote to the exact finite-N density on a grid of sizes and
//! positions, next to the stored reference values. Cells where the
//! reference itself is unreliable (a misprint, near-edge convention
//! drift, or quadrature error in its last digits) carry an annotation.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --release --example reference_tables
//! ```

use betaspectra::table::{jacobi_reference_table, laguerre_reference_table, RatioTable};

fn print_table(label: &str, t: &RatioTable) {
    println!("{label} (rates {:?})", t.rates);
    println!("{:>4} {:>6} {:>10} {:>10}  note", "N", "x", "reference", "computed");
    for c in &t.cells {
        println!(
            "{:4} {:6} {:10.3} {:10.4}  {}",
            c.n,
            c.x,
            c.reference,
            c.computed,
            c.annotation.as_deref().unwrap_or("")
        );
    }
    println!(
        "worst unannotated |deviation|: {:.4}\n",
        t.worst_deviation()
    );
}

fn main() {
    for beta in [2.0, 1.0] {
        print_table(
            &format!("Laguerre, beta = {beta}"),
            &laguerre_reference_table(beta).unwrap(),
        );
    }
    for beta in [2.0, 1.0] {
        print_table(
            &format!("Jacobi, beta = {beta}"),
            &jacobi_reference_table(beta).unwrap(),
        );
    }
}
