//! Hard-edge gap probability with a fixed (non-extensive) exponent.
//!
//! When the weight exponent stays O(1) the smallest eigenvalue sits at the
//! hard wall on the 1/(4N) scale, and the probability that the interval
//! (0, s) is empty decays like exp(-beta X / 8) in X = 4Ns. The Monte Carlo
//! survival estimate recovers that slope.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --release --example hard_edge_gap
//! ```

use betaspectra::sampler::estimate_gap_probability;
use betaspectra::softedge::hard_edge_tail;

fn main() {
    let (beta, a, n) = (2.0, 0.0, 100usize);
    let x_grid: Vec<f64> = (0..9).map(|i| 4.0 + 3.0 * i as f64).collect();
    let s_grid: Vec<f64> = x_grid.iter().map(|x| x / (4.0 * n as f64)).collect();
    let est = estimate_gap_probability(beta, a, n, 1, 20_000, &s_grid).unwrap();

    println!("beta={beta}, a={a}, N={n}, 20000 samples");
    println!(
        "{:>6} {:>12} {:>10} {:>12}",
        "X", "P(gap)", "se", "asym ln E"
    );
    for (i, &x) in x_grid.iter().enumerate() {
        println!(
            "{:6.1} {:12.6} {:10.6} {:12.4}",
            x,
            est.values[i],
            est.standard_errors[i],
            hard_edge_tail(beta, a, x).unwrap().ln_abs
        );
    }

    // crude slope from the two ends of the well-estimated range
    let (x0, x1) = (x_grid[0], x_grid[6]);
    let slope = (est.values[6].ln() - est.values[0].ln()) / (x1 - x0);
    println!(
        "\nempirical ln-slope {:.4} vs -beta/8 = {:.4}",
        slope,
        -beta / 8.0
    );
}
