//! Monte Carlo sampling via tridiagonal matrix models.
//!
//! Laguerre spectra come from the bidiagonal chi model, Jacobi spectra from
//! the canonical-moment Beta chain; both reduce eigenvalue sampling to an
//! O(N^2) symmetric tridiagonal problem and work at any beta > 0. Seeding
//! is counter-derived per sample, so results are bit-identical regardless
//! of how many worker threads run the batch.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --release --example sample_spectra
//! ```

use betaspectra::bulk::{bulk_mass_between, mp_density};
use betaspectra::sampler::{density_histogram, sample_batch_laguerre, sample_jacobi};
use betaspectra::{JacobiEnsemble, LaguerreEnsemble};

fn main() {
    let n = 100;
    let ens = LaguerreEnsemble::new(2.0, 1.0, n).unwrap();
    let samples = sample_batch_laguerre(&ens, 42, 2000).unwrap();
    println!(
        "Laguerre beta=2, alpha=1, N={n}: {} spectra, first sample range [{:.4}, {:.4}]",
        samples.len(),
        samples[0].eigenvalues.first().unwrap(),
        samples[0].eigenvalues.last().unwrap()
    );

    // histogram in the macroscopic variable x = lambda/N against the bulk law
    let (lo, hi) = ens.support();
    let scaled: Vec<_> = samples
        .iter()
        .map(|s| {
            let mut s = s.clone();
            for v in &mut s.eigenvalues {
                *v /= n as f64;
            }
            s
        })
        .collect();
    let hist = density_histogram(&scaled, lo, hi, 16);
    let width = (hi - lo) / 16.0;
    println!("\n{:>10} {:>10} {:>8} {:>10}", "bin center", "empirical", "se", "bulk law");
    for b in 0..16 {
        let pred = n as f64
            * bulk_mass_between(|x| mp_density(&ens, x), hist.bin_edges[b], hist.bin_edges[b + 1], 64)
            / width;
        println!(
            "{:10.4} {:10.4} {:8.4} {:10.4}",
            (hist.bin_edges[b] + hist.bin_edges[b + 1]) / 2.0,
            hist.values[b],
            hist.standard_errors[b],
            pred
        );
    }

    // a single Jacobi draw at general beta
    let jens = JacobiEnsemble::new(2.5, 5.0, 5.0, 8).unwrap();
    let one = sample_jacobi(&jens, 7, 0).unwrap();
    println!("\nJacobi beta=2.5, rates (5,5), N=8, seed 7:");
    println!("{:?}", one.eigenvalues);
}
