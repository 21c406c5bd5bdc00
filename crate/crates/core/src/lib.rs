//! Exact shuffle algebra on words over the alphabet `{x, y}` together with
//! rigorous numerics for multiple zeta values.
//!
//! The crate is organised in layers:
//!
//! - [`wordalg`]: words, indices, sparse rational polynomials and the shuffle
//!   product.
//! - [`morphisms`]: the substitutions `σ`, `S`, the anti-automorphism `τ`,
//!   index duality and the weight-raising operator `σ_m`.
//! - [`numerics`]: Riemann zeta, multiple zeta and zeta-star values with
//!   certified error bounds.
//! - [`series`]: truncated bivariate power series over formal zeta symbols,
//!   used to write height-one values as polynomials in `ζ(2), ζ(3), …`.
//! - [`verify`]: the identity suite producing structured reports.
//!
//! ```
//! use mzv_shuffle::wordalg::{shuffle, Index, Word};
//!
//! let z2 = Index::new(vec![2]).unwrap().to_word();
//! let p = shuffle(&z2, &z2);
//! assert_eq!(p.to_string(), "4*xxyy + 2*xyxy");
//! ```

pub mod error;
pub mod exec;
pub mod morphisms;
pub mod numerics;
pub mod series;
pub mod verify;
pub mod wordalg;

pub use error::{Error, Result};
pub use exec::Execution;
