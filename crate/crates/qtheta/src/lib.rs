//! qtheta: an exact engine for q-series identities between lattice theta
//! functions.
//!
//! The crate constructs theta series of positive-definite quadratic forms as
//! sparse truncated Laurent series in the nome q (convention q = e^{pi i tau})
//! and up to three formal variables, with coefficients in the cyclotomic
//! field Q(zeta_12), and verifies a registry of classical and recent
//! identities coefficient-by-coefficient: the Borwein cubic identity, Jacobi's
//! two-square identity, Schultz's three-variable generalization, triple-product
//! and eta-quotient identities, and two-variable families of Chan-Chan-Sole
//! type. Modular transformation formulas, which relate different nomes and so
//! cannot be checked on a single truncated grid, are verified numerically in
//! double precision.
//!
//! Entry points:
//! - [`series::Series`] — sparse exact Laurent series on the 1/12 exponent grid,
//! - [`theta`] — lattice theta sums, Jacobi thetas, eta, q-products,
//! - [`identities`] — the identity registry and verification engine,
//! - [`numeric`] — floating-point evaluation and transformation checks,
//! - [`cli`] — the `qtheta` command-line front end.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod series;
pub mod theta;

pub use cyclotomic::{Cyc12, Rat};
pub use error::Error;
pub use series::{ExpVec, Mismatch, Series, Var};
