//! Soft-edge scaling: collapse of the tail density onto the universal law.
//!
//! Mapping the right tail through the edge position and N^{-2/3} width turns
//! the large-deviation density into the Tracy–Widom right-tail asymptote.
//! The ratio (scaled density)/(universal tail) should approach 1 as N grows,
//! at the O(N^{-1/3}) pace typical of soft-edge convergence.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --release --example soft_edge_collapse
//! ```

use betaspectra::softedge::{
    scaling_limit_check_jacobi, scaling_limit_check_laguerre, soft_edge_map_laguerre,
    tw_right_tail, Edge,
};
use betaspectra::LaguerreEnsemble;

fn main() {
    let ens = LaguerreEnsemble::new(2.0, 1.0, 1000).unwrap();
    let map = soft_edge_map_laguerre(&ens, Edge::Largest).unwrap();
    println!(
        "Laguerre N=1000 largest-eigenvalue edge: center {:.6}, width {:.6e}",
        map.center, map.width
    );
    println!(
        "universal right tail at X=4, beta=2: ln f = {:.6}\n",
        tw_right_tail(2.0, 4.0).unwrap().ln_abs
    );

    let ns = [100usize, 1_000, 10_000, 100_000, 100_000_000];
    for beta in [1.0, 2.0, 4.0] {
        println!("Laguerre beta={beta}, alpha=1, ratio to the universal tail:");
        print!("{:>12}", "X \\ N");
        for n in ns {
            print!("{n:>12}");
        }
        println!();
        for x in [2.0, 4.0, 6.0] {
            let pts = scaling_limit_check_laguerre(beta, 1.0, &[x], &ns).unwrap();
            print!("{x:>12}");
            for p in &pts {
                match p.ratio {
                    Some(r) => print!("{r:>12.4}"),
                    None => print!("{:>12}", "-"),
                }
            }
            println!();
        }
        println!();
    }

    println!("Jacobi beta=2, rates (5,5):");
    for p in scaling_limit_check_jacobi(2.0, 5.0, 5.0, &[2.0, 4.0, 6.0], &[10_000]).unwrap() {
        println!("  X={} N={}: ratio {:.4}", p.x_scaled, p.n, p.ratio.unwrap());
    }
}
