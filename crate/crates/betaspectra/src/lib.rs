//! Numerical toolkit for the eigenvalue density of the Laguerre and Jacobi
//! β-ensembles with extensive weight exponents.
//!
//! The Laguerre β-ensemble with exponent `a = αN` has eigenvalue PDF
//! proportional to
//!
//! ```text
//!   ∏_l λ_l^{βa/2 + β/2 - 1} e^{-β λ_l / 2} ∏_{j<k} |λ_k - λ_j|^β ,
//! ```
//!
//! and the Jacobi β-ensemble with exponents `a_i = α_i N` has PDF
//! proportional to
//!
//! ```text
//!   ∏_l λ_l^{βa₁/2 + β/2 - 1} (1-λ_l)^{βa₂/2 + β/2 - 1} ∏_{j<k} |λ_k - λ_j|^β
//! ```
//!
//! on (0,1).  Because the exponents grow linearly with N, the spectrum
//! detaches from the hard wall and both endpoints of the limiting support
//! become soft edges: `[a₁², a₂²]` with `a_{1,2} = √(α+1) ∓ 1` after the
//! scaling λ = Nx in the Laguerre case, and `[c₁, c₂]` determined by a
//! quadratic in the Jacobi case.
//!
//! The crate provides, for both ensembles:
//!
//! * exact finite-N densities — Christoffel–Darboux kernels at β = 2, a
//!   Pfaffian (skew-Gram) construction at β = 1, and a brute-force
//!   multidimensional quadrature oracle for small N ([`exact`]);
//! * the limiting bulk laws with their O(1) corrections ([`bulk`]);
//! * large-deviation asymptotics for the density outside the support,
//!   including rate functions from several independent derivations and the
//!   full asymptotic expansions with algebraic prefactors ([`largedev`]);
//! * the Gaussian-fluctuation machinery for the logarithmic linear statistic
//!   that underlies those expansions ([`fluctuation`]);
//! * tridiagonal-model Monte Carlo samplers (bidiagonal Laguerre,
//!   canonical-moment Jacobi chain) with reproducible seeding ([`sampler`]);
//! * soft-edge scaling maps and the Tracy–Widom right-tail law, plus the
//!   hard-edge gap asymptote for fixed exponents ([`softedge`]).
//!
//! The binary `betaspec` exposes the main capabilities on the command line
//! (`density`, `table`, `check`, `sample`, `scaling`) with CSV/JSON output.
//! The `examples/` directory walks through each capability in runnable form.
//!
//! Everything is deterministic: sampling is driven by a counter-derived
//! per-sample seed scheme so results are independent of thread count.

pub mod bulk;
pub mod cli;
pub mod ensemble;
pub mod exact;
pub mod fluctuation;
pub mod largedev;
pub mod numeric;
pub mod quadrature;
pub mod sampler;
pub mod softedge;
pub mod table;
pub mod tridiag;

pub use ensemble::{JacobiEnsemble, LaguerreEnsemble};
pub use numeric::LogValue;
