//! Mean and variance corrections of the logarithmic linear statistic.
//!
//! The subleading factors of the tail asymptotics are Gaussian-fluctuation
//! formulas: a mean shift built from principal-value log-integrals against
//! the bulk law, and a variance difference with both a closed form and a
//! Chebyshev-coefficient series. This example evaluates each closed form
//! against its independent oracle (adaptive quadrature or the series).
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --release --example fluctuation_terms
//! ```

use betaspectra::fluctuation::{self, oracle};

fn main() {
    let alpha = 1.0;
    println!("Laguerre, alpha = {alpha}: log-integrals, closed form vs quadrature");
    println!(
        "{:>8} {:>14} {:>10} {:>14} {:>10}",
        "x", "bulk-law", "err", "arcsine", "err"
    );
    for x in [0.02, 0.08, 0.14, 6.2, 7.5, 10.0] {
        let m = fluctuation::mp_log_integral(alpha, x);
        let a = fluctuation::arcsine_log_integral(alpha, x);
        println!(
            "{:8.3} {:14.8} {:10.2e} {:14.8} {:10.2e}",
            x,
            m,
            (m - oracle::mp_log_integral(alpha, x, 4000)).abs(),
            a,
            (a - oracle::arcsine_log_integral(alpha, x, 2000)).abs(),
        );
    }

    println!("\nvariance difference, closed form vs Chebyshev series:");
    println!("{:>6} {:>8} {:>14} {:>10}", "beta", "x", "closed", "err");
    for beta in [1.0, 2.0, 4.0] {
        for x in [0.05, 7.0, 12.0] {
            let v = fluctuation::variance_diff_laguerre(beta, alpha, x);
            let s = fluctuation::variance_diff_series_laguerre(beta, alpha, x).unwrap();
            println!("{beta:6} {x:8.2} {v:14.8} {:10.2e}", (v - s).abs());
        }
    }

    let (a1, a2) = (5.0, 5.0);
    println!("\nJacobi, rates ({a1}, {a2}): log-potential, closed form vs quadrature");
    println!("{:>8} {:>14} {:>10}", "x", "potential", "err");
    for x in [0.05, 0.15, 0.85, 0.95] {
        let p = fluctuation::jacobi_log_potential(a1, a2, x);
        println!(
            "{:8.3} {:14.8} {:10.2e}",
            x,
            p,
            (p - oracle::jacobi_log_potential(a1, a2, x, 4000)).abs()
        );
    }
}
