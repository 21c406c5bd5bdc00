//! Rigorous floating-point evaluation of Riemann zeta, multiple zeta and
//! multiple zeta-star values.
//!
//! Every result is an [`ApproxValue`] whose error bound covers truncation,
//! the Euler–Maclaurin remainder and floating-point rounding.
//!
//! Multiple zeta values are split exactly at a cutoff `M`:
//! `ζ(k) = Σ_j F_j(M)·S_{j+1}(M)` where `S_{j+1}` sums the last parts over
//! `M ≥ m_{j+1} > ⋯ > mₙ ≥ 1` directly and `F_j` sums the first `j` parts
//! over `m₁ > ⋯ > m_j > M` via an asymptotic expansion in `1/M`.

mod approx;
mod tail;
mod zeta;

pub(crate) use approx::json_number;
pub use approx::{ApproxValue, Precision};
pub use zeta::{
    eval_combination, mzv, mzv_star, mzv_star_direct, mzv_star_direct_with_cutoff, mzv_with_cutoff, riemann_zeta,
    truncated_mzv, truncated_mzv_star, truncation_tail_bound, INITIAL_CUTOFF, MAX_CUTOFF,
};
