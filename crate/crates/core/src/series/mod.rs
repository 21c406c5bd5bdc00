//! Truncated bivariate power series over formal zeta symbols.
//!
//! With `E(t)` the exponent in `Γ(1+t) = exp(E(t))`,
//! `1 − exp(E(−x) + E(−y) − E(−x−y))` generates the height-one values
//! `ζ(k+1, 1^{n−1})` as polynomials in `ζ(2), ζ(3), …`. Euler's constant is
//! kept as a symbol so its cancellation is checked, not assumed.

mod bivariate;
mod zeta_poly;

pub use bivariate::{
    height_one_as_zeta_poly, height_one_gf, log_gamma_series, series_exp, series_mul, star_difference_certificate,
    BivariateSeries,
};
pub use zeta_poly::{eval_zeta_poly, Monomial, ZetaPoly, ZetaSymbol};
