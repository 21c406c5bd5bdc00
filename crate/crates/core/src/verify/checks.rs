use crate::error::Result;
use crate::morphisms::{dual_index, sigma_m, smap, IndexCombination};
use crate::numerics::{eval_combination, mzv, mzv_star, riemann_zeta, ApproxValue, Precision};
use crate::series::{eval_zeta_poly, star_difference_certificate};
use crate::wordalg::{compositions, q, shuffle, Index, Poly};

use super::identities::{
    alternating_hook_shuffle_lhs, alternating_hook_shuffle_rhs, alternating_single_shuffle_lhs,
    alternating_single_shuffle_rhs, ohno_hook_side, raised_hook_sum, s_map_hook_lhs, s_map_hook_rhs, weighted_hook_lhs,
    weighted_hook_rhs,
};
use super::report::{index_params, poly_terms, CheckResult};

fn kn(k: u32, n: u32) -> Vec<(String, i64)> {
    vec![("k".into(), k as i64), ("n".into(), n as i64)]
}

fn sign(e: u32) -> ApproxValue {
    if e.is_multiple_of(2) {
        ApproxValue::ONE
    } else {
        -ApproxValue::ONE
    }
}

fn combination(p: &Poly) -> IndexCombination {
    IndexCombination::from_poly(p).expect("hook identities stay in h¹")
}

fn numeric(
    name: &'static str,
    params: Vec<(String, i64)>,
    residual: Result<ApproxValue>,
    prec: Precision,
) -> CheckResult {
    match residual {
        Ok(r) => CheckResult::numeric(name, params, r, prec.eps()),
        Err(e) => CheckResult::numeric_error(name, params, e),
    }
}

/// `ΣZ(lhs) − ΣZ(rhs)`, the shared path of the duality and Ohno checks.
fn numeric_difference(lhs: &IndexCombination, rhs: &IndexCombination, prec: Precision) -> Result<ApproxValue> {
    Ok(eval_combination(lhs, prec)? - eval_combination(rhs, prec)?)
}

/// `S(z_{k+1} z₁ⁿ)` against its expansion over compositions.
pub fn check_s_map_hook_expansion(k: u32, n: u32) -> CheckResult {
    let diff = &s_map_hook_lhs(k, n) - &s_map_hook_rhs(k, n);
    CheckResult::exact("s_map_hook_expansion", kn(k, n), diff)
}

/// The weighted sum `Σ (a_k+1) z_{a_k+2} ⋯` against the double sum over `t`.
pub fn check_weighted_hook_sum(k: u32, n: u32) -> CheckResult {
    let diff = &weighted_hook_lhs(k, n) - &weighted_hook_rhs(k, n);
    CheckResult::exact("weighted_hook_sum", kn(k, n), diff)
}

/// `Σ_r (−1)^r z_{k−r} ⧢ z_{r+2} z₁^{n−1}` by recursion against its closed form.
pub fn check_alternating_single_shuffle(k: u32, n: u32) -> CheckResult {
    let diff = &alternating_single_shuffle_lhs(k, n) - &alternating_single_shuffle_rhs(k, n);
    CheckResult::exact("alternating_single_shuffle", kn(k, n), diff)
        .with_note("the excluded value p-m-s+4 is excluded for every part of the inner composition")
}

/// `Σ_r (−1)^r z₂ z₁^{k−r−2} ⧢ z_{n+1} z₁^r` by recursion against its closed form.
pub fn check_alternating_hook_shuffle(k: u32, n: u32) -> CheckResult {
    let diff = &alternating_hook_shuffle_lhs(k, n) - &alternating_hook_shuffle_rhs(k, n);
    CheckResult::exact("alternating_hook_shuffle", kn(k, n), diff)
}

/// `ζ(k) = ζ(k′)` for admissible `k`.
pub fn check_duality(k: &Index, prec: Precision) -> CheckResult {
    let params = index_params("k", k.parts());
    let residual = dual_index(k)
        .and_then(|d| numeric_difference(&IndexCombination::single(k.clone()), &IndexCombination::single(d), prec));
    numeric("duality", params, residual, prec)
}

/// `Σ ζ(σ_l(k)) = Σ ζ(σ_l(k′))`. At `l = 0` this is bit-identical to
/// [`check_duality`].
pub fn check_ohno(k: &Index, l: u32, prec: Precision) -> CheckResult {
    let mut params = index_params("k", k.parts());
    params.push(("l".into(), l as i64));
    let residual = dual_index(k).and_then(|d| numeric_difference(&sigma_m(l, k), &sigma_m(l, &d), prec));
    numeric("ohno", params, residual, prec)
}

/// `Σ ζ(k)` over admissible `k` of weight `w` and depth `d` equals `ζ(w)`.
pub fn check_sum_formula(w: u32, d: u32, prec: Precision) -> CheckResult {
    let params = vec![("w".into(), w as i64), ("d".into(), d as i64)];
    let lhs: IndexCombination =
        compositions(w, d).into_iter().filter(Index::is_admissible).map(|k| (k, q(1))).collect();
    let residual = (|| Ok(eval_combination(&lhs, prec)? - riemann_zeta(w, prec)?))();
    numeric("sum_formula", params, residual, prec)
}

/// `ζ*(k+1, 1ⁿ)` against both hook sums, which must also agree exactly.
pub fn check_star_hook_expansion(k: u32, n: u32, prec: Precision) -> CheckResult {
    let t_sum = weighted_hook_rhs(k, n);
    let weighted = weighted_hook_lhs(k, n);
    let diff = &t_sum - &weighted;
    let residual = (|| {
        let star = mzv_star(&Index::hook(k + 1, n as usize), prec)?;
        let r1 = star - eval_combination(&combination(&t_sum), prec)?;
        let r2 = star - eval_combination(&combination(&weighted), prec)?;
        Ok(if r1.magnitude() >= r2.magnitude() { r1 } else { r2 })
    })();
    let mut result = numeric("star_hook_expansion", kn(k, n), residual, prec);
    if !diff.is_zero() {
        result.passed = false;
        result.detail_terms = poly_terms(&diff);
        result.difference = Some(diff);
    }
    result
}

/// `Σ_{r=0}^{k−2} (−1)^r ζ(k−r) ζ(n+1, 1^r)`.
fn alternating_products(k: u32, n: u32, prec: Precision) -> Result<ApproxValue> {
    let mut total = ApproxValue::ZERO;
    for r in 0..k.saturating_sub(1) {
        let term = riemann_zeta(k - r, prec)? * mzv(&Index::hook(n + 1, r as usize), prec)?;
        total = total + sign(r) * term;
    }
    Ok(total)
}

/// `ζ*(k+1,1ⁿ) = (−1)^{k−1}[Σ_α ζ(n+1,1^{k−α},2,1^{α−2}) + (n+1)ζ(n+2,1^{k−1})]
/// + Σ_r (−1)^r ζ(k−r) ζ(n+1,1^r)`.
pub fn check_star_hook_formula(k: u32, n: u32, prec: Precision) -> CheckResult {
    let residual = (|| {
        let star = mzv_star(&Index::hook(k + 1, n as usize), prec)?;
        let bracket = eval_combination(&combination(&raised_hook_sum(k, n)), prec)?;
        Ok(star - (sign(k - 1) * bracket + alternating_products(k, n, prec)?))
    })();
    numeric("star_hook_formula", kn(k, n), residual, prec)
        .with_note("the product terms rest on zeta(2,1,...,1) = zeta(m), which is an instance of duality")
}

/// `(−1)^k ζ*(k+1,1ⁿ) − (−1)ⁿ ζ*(n+1,1^k)`.
fn star_difference(k: u32, n: u32, prec: Precision) -> Result<ApproxValue> {
    let a = mzv_star(&Index::hook(k + 1, n as usize), prec)?;
    let b = mzv_star(&Index::hook(n + 1, k as usize), prec)?;
    Ok(sign(k) * a - sign(n) * b)
}

/// The star difference against `kζ(k+2,1^{n−1}) − nζ(n+2,1^{k−1})` plus the
/// two alternating product sums.
pub fn check_star_hook_duality(k: u32, n: u32, prec: Precision) -> CheckResult {
    let residual = (|| {
        let lhs = star_difference(k, n, prec)?;
        let a = mzv(&Index::hook(k + 2, n as usize - 1), prec)?.scale(&q(k as i64));
        let b = mzv(&Index::hook(n + 2, k as usize - 1), prec)?.scale(&q(n as i64));
        let rhs = a - b + sign(k) * alternating_products(k, n, prec)? - sign(n) * alternating_products(n, k, prec)?;
        Ok(lhs - rhs)
    })();
    numeric("star_hook_duality", kn(k, n), residual, prec)
}

/// The zeta-polynomial certificate for the star difference, evaluated
/// numerically, plus its exact antisymmetry under `k ↔ n`.
pub fn check_star_hook_certificate(k: u32, n: u32, prec: Precision) -> CheckResult {
    let cert = star_difference_certificate(k, n);
    let swapped_sum = &cert + &star_difference_certificate(n, k);
    let residual = (|| Ok(eval_zeta_poly(&cert, prec)? - star_difference(k, n, prec)?))();
    let mut result = numeric("star_hook_certificate", kn(k, n), residual, prec);
    if !swapped_sum.is_zero() {
        result.passed = false;
        result.detail_terms = swapped_sum.terms().map(|(m, c)| format!("{c}*{m}")).collect();
        result = result.with_note("certificate(k,n) + certificate(n,k) is not zero");
    }
    result
}

/// Ohno's relation with `l = 1` on `(k+1, 1^{n−1})`, both sides written out.
pub fn check_ohno_hook(k: u32, n: u32, prec: Precision) -> CheckResult {
    let residual = numeric_difference(&ohno_hook_side(k, n), &ohno_hook_side(n, k), prec);
    numeric("ohno_hook", kn(k, n), residual, prec)
}

/// `Z(u ⧢ v) = Z(u)·Z(v)` for admissible `u`, `v`.
pub fn check_double_shuffle(u: &Index, v: &Index, prec: Precision) -> CheckResult {
    let mut params = index_params("u", u.parts());
    params.extend(index_params("v", v.parts()));
    let residual = (|| {
        let product = combination(&shuffle(&u.try_to_word()?, &v.try_to_word()?));
        Ok(eval_combination(&product, prec)? - mzv(u, prec)? * mzv(v, prec)?)
    })();
    numeric("double_shuffle", params, residual, prec)
}

/// Deliberately false claim `S(z₂z₁) = z₃`; must fail with the single
/// discrepancy term `(2,1)`.
pub fn check_canary() -> CheckResult {
    let claimed = Poly::from(Index::new(vec![3]).unwrap().to_word());
    let diff = &smap(&Poly::from(Index::new(vec![2, 1]).unwrap().to_word())) - &claimed;
    CheckResult::exact("canary", Vec::new(), diff).with_note("self-test: this check is expected to fail")
}
