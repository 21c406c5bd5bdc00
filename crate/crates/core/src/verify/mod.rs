//! The identity suite: exact checks of the structural shuffle identities and
//! numeric checks of zeta-value identities, collected into reports.
//!
//! An exact check passes iff the polynomial difference of its two sides is
//! zero. A numeric check passes iff `|r.value| ≤ r.err + tolerance` for its
//! residual `r`, where `tolerance = max(eps, 3·r.err)`.

mod checks;
pub mod identities;
mod report;
mod suite;

pub use checks::{
    check_alternating_hook_shuffle, check_alternating_single_shuffle, check_canary, check_double_shuffle,
    check_duality, check_ohno, check_ohno_hook, check_s_map_hook_expansion, check_star_hook_certificate,
    check_star_hook_duality, check_star_hook_expansion, check_star_hook_formula, check_sum_formula,
    check_weighted_hook_sum,
};
pub use report::{render_json, render_text, CheckKind, CheckResult};
pub use suite::{parse_check_list, run_suite, ALL_CHECKS, DEFAULT_CHECKS};
