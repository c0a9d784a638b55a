//! Ingredients of the tail asymptote: moments of the characteristic
//! polynomial and normalization-constant ratios.
//!
//! The tail density factorizes into a characteristic-polynomial moment of
//! order beta, a Gaussian-fluctuation correction, and the ratio of the
//! normalization constants at sizes N and N+1. The exact log-gamma ratio
//! and its Stirling asymptote are printed side by side; the gap closes
//! like 1/N.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --release --example norm_ratios
//! ```

use betaspectra::largedev::{
    char_poly_moment_jacobi, char_poly_moment_laguerre, norm_ratio_jacobi, norm_ratio_laguerre,
};
use betaspectra::{JacobiEnsemble, LaguerreEnsemble};

fn main() {
    println!("char-poly moments (log scale), beta=2, order m=9, x=8:");
    println!(
        "  laguerre alpha=1:    {:14.8}",
        char_poly_moment_laguerre(2.0, 1.0, 9.0, 8.0).ln_abs
    );
    println!(
        "  jacobi rates (5,5):  {:14.8}",
        char_poly_moment_jacobi(2.0, 5.0, 5.0, 9.0, 0.95).ln_abs
    );

    println!("\nLaguerre normalization ratio C_N/C_{{N+1}} (log scale), beta=2, alpha=1:");
    println!("{:>8} {:>16} {:>16} {:>12}", "N", "exact", "asymptote", "N*diff");
    for n in [10usize, 100, 1000, 10_000] {
        let ens = LaguerreEnsemble::new(2.0, 1.0, n).unwrap();
        let r = norm_ratio_laguerre(&ens);
        println!(
            "{:8} {:16.6} {:16.6} {:12.4}",
            n,
            r.exact_ln,
            r.asym_ln,
            n as f64 * (r.asym_ln - r.exact_ln)
        );
    }

    println!("\nJacobi normalization ratio, beta=1, rates (5,5):");
    println!("{:>8} {:>16} {:>16} {:>12}", "N", "exact", "asymptote", "N*diff");
    for n in [10usize, 100, 1000, 10_000] {
        let ens = JacobiEnsemble::new(1.0, 5.0, 5.0, n).unwrap();
        let r = norm_ratio_jacobi(&ens);
        println!(
            "{:8} {:16.6} {:16.6} {:12.4}",
            n,
            r.exact_ln,
            r.asym_ln,
            n as f64 * (r.asym_ln - r.exact_ln)
        );
    }
}
