//! Large-deviation rate functions for the density outside the support.
//!
//! Three independent derivations of the Laguerre rate — the log-gas
//! electrostatic form, the constrained-minimization form on the left tail,
//! and the arcosh form at beta = 2 — agree to machine precision; this
//! example prints them side by side along with the full asymptotic density
//! (N-linear exponent, algebraic correction, prefactor).
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --release --example tail_rates
//! ```

use betaspectra::largedev::{
    asym_density_laguerre, kappa_laguerre, rate_identity_residuals, rate_laguerre,
    rate_laguerre_left,
};
use betaspectra::LaguerreEnsemble;

fn main() {
    let (beta, alpha) = (2.0, 1.0);
    let ens = LaguerreEnsemble::new(beta, alpha, 100).unwrap();
    let (lo, hi) = ens.support();
    println!("beta={beta}, alpha={alpha}; support ({lo:.6}, {hi:.6})\n");

    println!(
        "{:>8} {:>14} {:>14} {:>14} {:>10}",
        "x", "log-gas", "constrained", "-kappa", "residual"
    );
    for x in [0.02, 0.05, 0.10, 0.15, 6.5, 8.0, 12.0, 20.0] {
        let gas = rate_laguerre(beta, alpha, x);
        let constrained = rate_laguerre_left(beta, alpha, x);
        let res = rate_identity_residuals(beta, alpha, x);
        println!(
            "{:8.3} {:14.8} {:>14} {:14.8} {:10.2e}",
            x,
            gas,
            constrained.map_or("-".into(), |v| format!("{v:.8}")),
            -kappa_laguerre(alpha, x),
            res.gas_vs_constrained.unwrap_or(res.gas_vs_arcosh),
        );
    }

    println!("\nfull asymptotic density at N=100 (log scale):");
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>14}",
        "x", "N-linear", "algebraic", "prefactor", "ln rho"
    );
    for x in [0.05, 0.10, 6.5, 8.0] {
        let d = asym_density_laguerre(&ens, x).unwrap();
        println!(
            "{:8.3} {:12.4} {:12.4} {:12.4} {:14.4}",
            x,
            d.factors[0],
            d.factors[1],
            d.factors[2],
            d.log_density().ln_abs
        );
    }
}
