use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::numerics::Precision;
use crate::wordalg::{admissible_up_to, Index};

use super::checks::*;
use super::report::CheckResult;

/// Every check name in report order.
pub const ALL_CHECKS: &[&str] = &[
    "s_map_hook_expansion",
    "weighted_hook_sum",
    "alternating_single_shuffle",
    "alternating_hook_shuffle",
    "duality",
    "ohno",
    "sum_formula",
    "double_shuffle",
    "star_hook_expansion",
    "star_hook_formula",
    "star_hook_duality",
    "star_hook_certificate",
    "ohno_hook",
    "canary",
];

/// The checks run when none are named: all but `canary`.
pub const DEFAULT_CHECKS: &[&str] = &[
    "s_map_hook_expansion",
    "weighted_hook_sum",
    "alternating_single_shuffle",
    "alternating_hook_shuffle",
    "duality",
    "ohno",
    "sum_formula",
    "double_shuffle",
    "star_hook_expansion",
    "star_hook_formula",
    "star_hook_duality",
    "star_hook_certificate",
    "ohno_hook",
];

/// Splits a comma list; `all` expands to [`DEFAULT_CHECKS`].
pub fn parse_check_list(list: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend(DEFAULT_CHECKS.iter().map(|s| s.to_string()));
        } else if ALL_CHECKS.contains(&name) {
            out.push(name.to_string());
        } else {
            return Err(Error::UnknownCheck(name.to_string()));
        }
    }
    Ok(out)
}

enum Job {
    Grid(&'static str, u32, u32),
    Duality(Index),
    Ohno(Index, u32),
    SumFormula(u32, u32),
    DoubleShuffle(Index, Index),
    Canary,
}

fn run_job(job: Job, prec: Precision) -> CheckResult {
    match job {
        Job::Grid(name, k, n) => match name {
            "s_map_hook_expansion" => check_s_map_hook_expansion(k, n),
            "weighted_hook_sum" => check_weighted_hook_sum(k, n),
            "alternating_single_shuffle" => check_alternating_single_shuffle(k, n),
            "alternating_hook_shuffle" => check_alternating_hook_shuffle(k, n),
            "star_hook_expansion" => check_star_hook_expansion(k, n, prec),
            "star_hook_formula" => check_star_hook_formula(k, n, prec),
            "star_hook_duality" => check_star_hook_duality(k, n, prec),
            "star_hook_certificate" => check_star_hook_certificate(k, n, prec),
            "ohno_hook" => check_ohno_hook(k, n, prec),
            other => unreachable!("{other} is not a grid check"),
        },
        Job::Duality(k) => check_duality(&k, prec),
        Job::Ohno(k, l) => check_ohno(&k, l, prec),
        Job::SumFormula(w, d) => check_sum_formula(w, d, prec),
        Job::DoubleShuffle(u, v) => check_double_shuffle(&u, &v, prec),
        Job::Canary => check_canary(),
    }
}

/// Runs the selected checks and returns every result in a fixed order.
///
/// Grids: `(k, n)` checks over `1..=kmax × 1..=nmax`; duality and Ohno over
/// admissible indices of weight `≤ kmax`, Ohno with `l ∈ 0..=nmax`; the sum
/// formula over `2 ≤ w ≤ kmax+1`, `1 ≤ d ≤ min(nmax, w−1)`; double shuffle
/// over unordered admissible pairs of total weight `≤ kmax+nmax`.
/// An empty `which` selects [`DEFAULT_CHECKS`].
pub fn run_suite(kmax: u32, nmax: u32, prec: Precision, which: &[String], exec: Execution) -> Result<Vec<CheckResult>> {
    let mut selected = BTreeSet::new();
    for name in which {
        let pos = ALL_CHECKS.iter().position(|c| c == name).ok_or_else(|| Error::UnknownCheck(name.clone()))?;
        selected.insert(pos);
    }
    if selected.is_empty() {
        selected.extend((0..ALL_CHECKS.len()).filter(|&i| DEFAULT_CHECKS.contains(&ALL_CHECKS[i])));
    }
    if kmax == 0 || nmax == 0 {
        return Ok(Vec::new());
    }

    let indices = admissible_up_to(kmax);
    let mut jobs = Vec::new();
    for pos in selected {
        let name = ALL_CHECKS[pos];
        match name {
            "duality" => jobs.extend(indices.iter().cloned().map(Job::Duality)),
            "ohno" => {
                for k in &indices {
                    jobs.extend((0..=nmax).map(|l| Job::Ohno(k.clone(), l)));
                }
            }
            "sum_formula" => {
                for w in 2..=kmax + 1 {
                    jobs.extend((1..=nmax.min(w - 1)).map(|d| Job::SumFormula(w, d)));
                }
            }
            "double_shuffle" => {
                let pool = admissible_up_to(kmax + nmax);
                for (i, u) in pool.iter().enumerate() {
                    for v in &pool[i..] {
                        if u.weight() + v.weight() <= kmax + nmax {
                            jobs.push(Job::DoubleShuffle(u.clone(), v.clone()));
                        }
                    }
                }
            }
            "canary" => jobs.push(Job::Canary),
            _ => {
                for k in 1..=kmax {
                    jobs.extend((1..=nmax).map(|n| Job::Grid(name, k, n)));
                }
            }
        }
    }
    Ok(exec.map(jobs, |job| run_job(job, prec)))
}
