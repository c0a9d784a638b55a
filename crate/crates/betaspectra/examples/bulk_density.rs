//! Limiting bulk densities and their O(1) edge corrections.
//!
//! Prints the per-eigenvalue bulk law for a Laguerre and a Jacobi ensemble,
//! then assembles the corrected finite-N density (smooth part plus the two
//! edge atoms) and checks that it carries total mass N.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --release --example bulk_density
//! ```

use betaspectra::bulk::{
    bulk_mass_between, corrected_density_jacobi, corrected_density_laguerre, jacobi_bulk_density,
    mp_density,
};
use betaspectra::{JacobiEnsemble, LaguerreEnsemble};

fn main() {
    let lag = LaguerreEnsemble::new(2.0, 1.0, 50).unwrap();
    let (lo, hi) = lag.support();
    println!("Laguerre beta=2, alpha=1, N=50; support ({lo:.6}, {hi:.6})");
    println!("{:>8} {:>12}", "x", "rho(x)");
    for i in 1..8 {
        let x = lo + (hi - lo) * i as f64 / 8.0;
        println!("{:8.4} {:12.6}", x, mp_density(&lag, x).unwrap());
    }
    let mass = bulk_mass_between(|x| mp_density(&lag, x), lo, hi, 400);
    println!("bulk mass: {mass:.12} (should be 1)\n");

    let jac = JacobiEnsemble::new(1.0, 5.0, 5.0, 50).unwrap();
    let (c1, c2) = jac.support();
    println!("Jacobi beta=1, rates (5,5), N=50; support ({c1:.6}, {c2:.6})");
    println!("{:>8} {:>12}", "x", "rho(x)");
    for i in 1..8 {
        let x = c1 + (c2 - c1) * i as f64 / 8.0;
        println!("{:8.4} {:12.6}", x, jacobi_bulk_density(&jac, x).unwrap());
    }

    // the O(1) correction: a (1 - 2/beta)/4 atom at each soft edge
    for beta in [1.0, 2.0, 4.0] {
        let ens = LaguerreEnsemble::new(beta, 1.0, 50).unwrap();
        let corr = corrected_density_laguerre(&ens);
        println!(
            "Laguerre beta={beta}: edge atoms ({:+.4}, {:+.4}), total mass {:.8}",
            corr.atom_lower,
            corr.atom_upper,
            corr.total_mass(800)
        );
    }
    let corr = corrected_density_jacobi(&jac);
    println!(
        "Jacobi beta=1: edge atoms ({:+.4}, {:+.4}), total mass {:.8}",
        corr.atom_lower,
        corr.atom_upper,
        corr.total_mass(800)
    );
}
