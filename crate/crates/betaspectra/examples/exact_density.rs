//! Exact finite-N eigenvalue densities.
//!
//! At beta = 2 the density is a Christoffel–Darboux kernel sum; at beta = 1
//! (even N) it comes from a skew-Gram (Pfaffian) construction. Both are
//! checked here against the brute-force multidimensional quadrature oracle
//! at N = 4, and against the large-deviation asymptote in the tail.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --release --example exact_density
//! ```

use betaspectra::exact::{
    brute_force_density_laguerre, cd_density_laguerre, SkewGramDensity,
};
use betaspectra::largedev::asym_density_laguerre;
use betaspectra::LaguerreEnsemble;

fn main() {
    let ens2 = LaguerreEnsemble::new(2.0, 1.0, 4).unwrap();
    println!("Laguerre beta=2, alpha=1, N=4: CD kernel vs brute-force oracle");
    println!("{:>8} {:>16} {:>16} {:>10}", "lambda", "exact", "oracle", "rel err");
    for lambda in [0.5, 2.0, 5.0, 10.0, 20.0, 30.0] {
        let exact = cd_density_laguerre(&ens2, lambda).unwrap().to_f64();
        let oracle = brute_force_density_laguerre(&ens2, lambda, 24).unwrap();
        println!(
            "{:8.2} {:16.10e} {:16.10e} {:10.2e}",
            lambda,
            exact,
            oracle,
            (exact / oracle - 1.0).abs()
        );
    }

    let ens1 = LaguerreEnsemble::new(1.0, 1.0, 4).unwrap();
    let skew = SkewGramDensity::laguerre(&ens1).unwrap();
    println!("\nLaguerre beta=1, alpha=1, N=4: skew-Gram vs brute-force oracle");
    println!("{:>8} {:>16} {:>16} {:>10}", "lambda", "exact", "oracle", "rel err");
    for lambda in [0.5, 2.0, 5.0, 10.0, 20.0, 30.0] {
        let exact = skew.density(lambda).unwrap().to_f64();
        let oracle = brute_force_density_laguerre(&ens1, lambda, 24).unwrap();
        println!(
            "{:8.2} {:16.10e} {:16.10e} {:10.2e}",
            lambda,
            exact,
            oracle,
            (exact / oracle - 1.0).abs()
        );
    }

    // tail comparison at larger N: exact vs asymptotic, macroscopic x
    let big = LaguerreEnsemble::new(2.0, 1.0, 30).unwrap();
    println!("\nN=30 right tail: exact density N*rho(Nx) vs asymptote");
    println!("{:>8} {:>14} {:>14} {:>10}", "x", "ln exact", "ln asym", "ratio");
    for x in [6.0, 7.0, 8.0, 10.0] {
        let lam = 30.0 * x;
        let exact_ln = cd_density_laguerre(&big, lam).unwrap().ln_abs + 30f64.ln();
        let asym_ln = asym_density_laguerre(&big, x).unwrap().log_density().ln_abs;
        println!(
            "{:8.2} {:14.4} {:14.4} {:10.6}",
            x,
            exact_ln,
            asym_ln,
            (asym_ln - exact_ln).exp()
        );
    }
}
