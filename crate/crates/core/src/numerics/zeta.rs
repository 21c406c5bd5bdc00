use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::morphisms::{star_expand, IndexCombination};
use crate::wordalg::Index;

use super::approx::{add_up, mul_up, ApproxValue, Precision, UNIT_ROUNDOFF};
use super::tail::{bernoulli_over_factorial, Expansion};

/// First cutoff tried by the adaptive evaluators.
pub const INITIAL_CUTOFF: u64 = 16;

/// Largest cutoff the adaptive evaluators may reach.
pub const MAX_CUTOFF: u64 = 1 << 20;

fn inv_pow(m: u64, k: u32) -> f64 {
    (m as f64).powi(-(k as i32))
}

/// Relative rounding slack of the head dynamic programme.
fn head_slack(k: &Index, cutoff: u64) -> f64 {
    let kmax = k.parts().iter().copied().max().unwrap_or(0) as f64;
    (k.depth() as f64 + 1.0) * (cutoff as f64 + 2.0 * kmax + 4.0) * 2.0 * UNIT_ROUNDOFF
}

/// Partial sums `S_j = Σ_{M ≥ m_j ⋛ ⋯ ⋛ m_n ≥ 1} m_j^{-k_j} ⋯ m_n^{-k_n}`
/// for `j = 0..=n` (with `S_n = 1`), strict or weak inequalities.
fn head_sums(k: &Index, cutoff: u64, weak: bool) -> Vec<f64> {
    let ks = k.parts();
    let n = ks.len();
    let mut s = vec![0.0; n + 1];
    s[n] = 1.0;
    for m in 1..=cutoff {
        if weak {
            // S_{j+1} already includes m_{j+1} = m
            for j in (0..n).rev() {
                s[j] += inv_pow(m, ks[j]) * s[j + 1];
            }
        } else {
            for j in 0..n {
                s[j] += inv_pow(m, ks[j]) * s[j + 1];
            }
        }
    }
    s
}

fn require_admissible(k: &Index) -> Result<()> {
    if k.is_admissible() {
        Ok(())
    } else {
        Err(Error::NotAdmissible(k.clone()))
    }
}

/// `ζ(k)` (or `ζ*(k)` when `weak`) from the exact split into a head summed
/// directly over `m ≤ cutoff` and nested tails over `m > cutoff` expanded
/// asymptotically.
fn split_sum(k: &Index, cutoff: u64, weak: bool) -> ApproxValue {
    let ks = k.parts();
    let head = head_sums(k, cutoff, weak);
    let slack = head_slack(k, cutoff);
    let with_slack = |v: f64| ApproxValue::new(v, mul_up(v.abs(), slack));

    // strict tails start above the cutoff; weak ones at cutoff + 1 inclusive
    let base = if weak { cutoff + 1 } else { cutoff } as f64;
    let mut tail = Expansion::one(base);
    let mut total = with_slack(head[0]);
    for j in 1..=ks.len() {
        tail = tail.sum_tail(ks[j - 1], weak);
        total = total + tail.eval() * with_slack(head[j]);
    }
    total
}

/// `ζ(k)` with the head summed to `cutoff` and the remainder expanded.
///
/// The enclosure is rigorous for every cutoff; larger cutoffs tighten it.
pub fn mzv_with_cutoff(k: &Index, cutoff: u64) -> Result<ApproxValue> {
    if k.is_empty() {
        return Ok(ApproxValue::ONE);
    }
    require_admissible(k)?;
    Ok(split_sum(k, cutoff.max(INITIAL_CUTOFF), false))
}

/// `ζ*(k)` summed directly with weak inequalities to `cutoff`, completed by
/// the inclusive tail expansion. Independent of [`star_expand`].
pub fn mzv_star_direct_with_cutoff(k: &Index, cutoff: u64) -> Result<ApproxValue> {
    if k.is_empty() {
        return Ok(ApproxValue::ONE);
    }
    require_admissible(k)?;
    Ok(split_sum(k, cutoff.max(INITIAL_CUTOFF), true))
}

fn adaptive(k: &Index, prec: Precision, weak: bool) -> Result<ApproxValue> {
    if k.is_empty() {
        return Ok(ApproxValue::ONE);
    }
    require_admissible(k)?;
    let mut cutoff = INITIAL_CUTOFF;
    let mut best = f64::INFINITY;
    loop {
        let v = split_sum(k, cutoff, weak);
        if v.err() <= prec.eps() {
            return Ok(v);
        }
        // roundoff floor reached: more terms only add rounding
        if v.err() > 0.5 * best || cutoff >= MAX_CUTOFF {
            return Err(Error::PrecisionUnreachable { target: prec.eps(), achieved: v.err().min(best) });
        }
        best = v.err();
        cutoff *= 2;
    }
}

/// `ζ(k) = Σ_{m₁>⋯>mₙ≥1} m₁^{-k₁} ⋯ mₙ^{-kₙ}` with `err ≤ prec`.
/// The empty index gives exactly 1.
pub fn mzv(k: &Index, prec: Precision) -> Result<ApproxValue> {
    adaptive(k, prec, false)
}

/// `ζ*(k)` via the direct weak-inequality sum; a cross-check for
/// [`mzv_star`].
pub fn mzv_star_direct(k: &Index, prec: Precision) -> Result<ApproxValue> {
    adaptive(k, prec, true)
}

/// `ζ*(k)` as `Σ ζ` over [`star_expand`]`(k)`.
pub fn mzv_star(k: &Index, prec: Precision) -> Result<ApproxValue> {
    if k.is_empty() {
        return Ok(ApproxValue::ONE);
    }
    eval_combination(&star_expand(k)?, prec)
}

/// `Σ c·ζ(index)` with `err ≤ prec`. Each term first gets the target
/// `eps / (2·Σ|c|)`, tightened if rounding in the sum eats the margin.
pub fn eval_combination(c: &IndexCombination, prec: Precision) -> Result<ApproxValue> {
    if let Some((bad, _)) = c.terms().find(|(k, _)| !k.is_convergent()) {
        return Err(Error::NotAdmissible(bad.clone()));
    }
    if c.is_empty() {
        return Ok(ApproxValue::ZERO);
    }
    let mass: f64 = c.terms().map(|(_, q)| q.abs().to_f64().unwrap_or(f64::INFINITY)).sum();
    let mut per_term = 0.5 * prec.eps() / mass;
    let mut total = ApproxValue::ZERO;
    for _ in 0..4 {
        let term_prec = Precision::new(per_term)?;
        total = ApproxValue::ZERO;
        for (k, q) in c.terms() {
            let v = mzv(k, term_prec)?;
            total = total + if q.is_one() { v } else { v.scale(q) };
        }
        if total.err() <= prec.eps() {
            return Ok(total);
        }
        per_term /= 16.0;
    }
    Err(Error::PrecisionUnreachable { target: prec.eps(), achieved: total.err() })
}

/// `ζ(s)` for integer `s ≥ 2` by direct summation to `N` plus the
/// Euler–Maclaurin tail, `err ≤ prec`.
pub fn riemann_zeta(s: u32, prec: Precision) -> Result<ApproxValue> {
    if s < 2 {
        return Err(Error::DivergentZeta(s));
    }
    const TERMS: usize = 10;
    let b = bernoulli_over_factorial();
    let rising = |r: u32| (0..r).map(|i| (s + i) as f64).product::<f64>();
    let mut n: u64 = 16;
    let mut best = f64::INFINITY;
    loop {
        let nf = n as f64;
        // head summed from the small terms up, with the exact rounding of each addition
        let mut head = ApproxValue::ZERO;
        for p in (1..=n).rev() {
            head = head + ApproxValue::exact(inv_pow(p, s));
        }
        // powi is accurate to a few ulps per multiplication
        let power_slack = (2.0 * (32 - s.leading_zeros()) as f64 + 4.0) * UNIT_ROUNDOFF;
        let head = head.widened(mul_up(head.value(), power_slack));

        // Σ_{p>N} p^{-s}
        let mut tail = nf.powi(1 - s as i32) / (s - 1) as f64 - 0.5 * nf.powi(-(s as i32));
        let mut tail_abs = tail.abs();
        for (j, bj) in b.iter().enumerate().take(TERMS + 1).skip(1) {
            let t = bj * rising(2 * j as u32 - 1) * nf.powi(-(s as i32) - 2 * j as i32 + 1);
            tail += t;
            tail_abs += t.abs();
        }
        let omitted = (b[TERMS + 1] * rising(2 * TERMS as u32 + 1)).abs() * nf.powi(-(s as i32) - 2 * TERMS as i32 - 1);
        let tail_rounding = tail_abs * (4.0 * TERMS as f64 + 2.0 * s as f64 + 16.0) * UNIT_ROUNDOFF;
        let total = head + ApproxValue::new(tail, add_up(mul_up(omitted, 1.0 + 1e-12), tail_rounding));
        let (value, err) = (total.value(), total.err());
        if err <= prec.eps() {
            return Ok(ApproxValue::new(value, err));
        }
        if err > 0.5 * best || n >= MAX_CUTOFF {
            return Err(Error::PrecisionUnreachable { target: prec.eps(), achieved: err.min(best) });
        }
        best = err;
        n *= 2;
    }
}

/// `Σ_{cutoff ≥ m₁ > ⋯ > mₙ ≥ 1}` with only rounding error in the bound.
pub fn truncated_mzv(k: &Index, cutoff: u64) -> ApproxValue {
    let v = head_sums(k, cutoff, false)[0];
    ApproxValue::new(v, mul_up(v.abs(), head_slack(k, cutoff)))
}

/// `Σ_{cutoff ≥ m₁ ≥ ⋯ ≥ mₙ ≥ 1}` with only rounding error in the bound.
pub fn truncated_mzv_star(k: &Index, cutoff: u64) -> ApproxValue {
    let v = head_sums(k, cutoff, true)[0];
    ApproxValue::new(v, mul_up(v.abs(), head_slack(k, cutoff)))
}

/// Upper bound for `ζ(k) − truncated_mzv(k, M)`:
/// `T(M) = ∫_M^∞ (1 + ln t)^{n−1} t^{−k₁} dt / (n−1)!`, which evaluates to
/// `M^{1−k₁}/(k₁−1)^n · Σ_{i<n} ((k₁−1)(1+ln M))^i / i!`.
///
/// The inner sums are bounded by `H_{m−1}^{n−1}/(n−1)!` and `H_{m−1} ≤ 1 + ln m`;
/// replacing the outer sum by the integral needs the integrand to decrease
/// on `[M, ∞)`, i.e. `k₁(1 + ln M) > n − 1`. Returns infinity otherwise.
pub fn truncation_tail_bound(k: &Index, cutoff: u64) -> Result<f64> {
    require_admissible(k)?;
    let n = k.depth();
    let k1 = k.parts()[0] as f64;
    let lm = 1.0 + (cutoff as f64).ln();
    if k1 * lm <= (n - 1) as f64 {
        return Ok(f64::INFINITY);
    }
    let c = k1 - 1.0;
    let x = c * lm;
    let mut term = 1.0;
    let mut series = 1.0;
    for i in 1..n {
        term *= x / i as f64;
        series += term;
    }
    let bound = (cutoff as f64).powf(-c) / c.powi(n as i32) * series;
    Ok(bound * (1.0 + 1e-12))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::dual_index;
    use crate::wordalg::{admissible_up_to, q};
    use std::f64::consts::PI;

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    fn p(eps: f64) -> Precision {
        Precision::new(eps).unwrap()
    }

    #[test]
    fn zeta2_is_pi_squared_over_six() {
        let v = riemann_zeta(2, p(1e-10)).unwrap();
        assert!(v.err() <= 1e-10);
        assert!(v.contains(PI * PI / 6.0) || (v.value() - PI * PI / 6.0).abs() < 1e-15);
        let w = mzv(&idx("(2)"), p(1e-12)).unwrap();
        assert!((w.value() - PI * PI / 6.0).abs() <= w.err() + 4e-16);
    }

    #[test]
    fn zeta3_against_direct_summation() {
        // Σ_{m ≤ 10⁶} m^{-3} from the small end plus the bracket [1/(2(N+1)²), 1/(2N²)]
        let n = 1_000_000u64;
        let mut acc = 0.0;
        for m in (1..=n).rev() {
            acc += 1.0 / (m as f64).powi(3);
        }
        let nf = n as f64;
        let (lo, hi) = (acc + 0.5 / ((nf + 1.0) * (nf + 1.0)), acc + 0.5 / (nf * nf));
        let v = riemann_zeta(3, p(1e-10)).unwrap();
        assert!(v.value() + v.err() >= lo - 1e-14 && v.value() - v.err() <= hi + 1e-14);
        assert!((v.value() - 1.2020569031595942).abs() < 1e-14);
        let w = mzv(&idx("(3)"), p(1e-10)).unwrap();
        assert!((w.value() - v.value()).abs() <= w.err() + v.err());
    }

    #[test]
    fn zeta20_two_terms() {
        let v = riemann_zeta(20, p(1e-12)).unwrap();
        assert!((v.value() - (1.0 + 2f64.powi(-20))).abs() < 1e-9);
        assert!((v.value() - 1.0000009539620338).abs() < 1e-15);
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(matches!(riemann_zeta(1, p(1e-6)), Err(Error::DivergentZeta(1))));
        assert!(matches!(mzv(&idx("(1,2)"), p(1e-6)), Err(Error::NotAdmissible(_))));
        assert!(matches!(mzv_star(&idx("(1)"), p(1e-6)), Err(Error::NotAdmissible(_))));
        let mut c = IndexCombination::zero();
        c.add_term(idx("(1,1)"), q(1));
        assert!(eval_combination(&c, p(1e-6)).is_err());
        assert!(matches!(mzv(&idx("(2)"), p(1e-300)), Err(Error::PrecisionUnreachable { .. })));
    }

    #[test]
    fn empty_index_is_exactly_one() {
        assert_eq!(mzv(&Index::empty(), p(1e-6)).unwrap(), ApproxValue::ONE);
        assert_eq!(mzv_star(&Index::empty(), p(1e-6)).unwrap(), ApproxValue::ONE);
        let c = IndexCombination::single(Index::empty());
        assert_eq!(eval_combination(&c, p(1e-6)).unwrap(), ApproxValue::ONE);
    }

    #[test]
    fn known_closed_forms() {
        let z = |s| riemann_zeta(s, p(1e-14)).unwrap().value();
        let cases = [
            ("(2,1)", z(3)),
            ("(3,1)", z(4) / 4.0),
            ("(2,2)", 0.75 * z(4)),
            ("(2,1,1)", z(4)),
            ("(4,1)", 2.0 * z(5) - z(2) * z(3)),
            ("(3,2)", -5.5 * z(5) + 3.0 * z(2) * z(3)),
            ("(2,1,1,1,1,1,1,1)", z(9)),
        ];
        for (k, expect) in cases {
            let v = mzv(&idx(k), p(1e-12)).unwrap();
            assert!((v.value() - expect).abs() <= v.err() + 1e-13, "{k}: {v} vs {expect}");
        }
        let v = mzv(&idx("(3,1)"), p(1e-8)).unwrap();
        assert!((v.value() - 0.2705808084277845).abs() < 1e-8);
    }

    #[test]
    fn three_one_against_brute_force_double_sum() {
        let cutoff = 100_000;
        let t = truncated_mzv(&idx("(3,1)"), cutoff);
        let bound = truncation_tail_bound(&idx("(3,1)"), cutoff).unwrap();
        let v = mzv(&idx("(3,1)"), p(1e-8)).unwrap();
        assert!(v.value() + v.err() >= t.value() - t.err());
        assert!(v.value() - v.err() <= t.value() + t.err() + bound);
    }

    #[test]
    fn tail_bound_brackets_larger_cutoff() {
        for k in ["(2)", "(2,1)"] {
            let k = idx(k);
            for cutoff in [10u64, 100, 1000] {
                let lo = truncated_mzv(&k, cutoff);
                let hi = truncated_mzv(&k, 4 * cutoff);
                let bound = truncation_tail_bound(&k, cutoff).unwrap();
                assert!(hi.value() >= lo.value() - lo.err() - hi.err());
                assert!(hi.value() <= lo.value() + bound + lo.err() + hi.err(), "{k} at {cutoff}");
            }
        }
        assert_eq!(truncation_tail_bound(&idx("(2,1,1,1,1,1,1,1)"), 1).unwrap(), f64::INFINITY);
    }

    #[test]
    fn monotone_refinement() {
        let reference = PI.powi(4) / 360.0;
        let k = idx("(3,1)");
        let mut last = f64::INFINITY;
        for e in [1e-4, 5e-5, 2.5e-5, 1.25e-5, 1e-8, 5e-9, 1e-12, 5e-13] {
            let v = mzv(&k, p(e)).unwrap();
            let d = (v.value() - reference).abs();
            assert!(d <= last, "{e}: {d} > {last}");
            last = d;
        }
    }

    #[test]
    fn cutoff_refinement_tightens() {
        let k = idx("(2,1,1)");
        let a = mzv_with_cutoff(&k, 16).unwrap();
        let b = mzv_with_cutoff(&k, 64).unwrap();
        assert!((a.value() - b.value()).abs() <= a.err() + b.err());
    }

    #[test]
    fn star_routes_agree() {
        let z3 = riemann_zeta(3, p(1e-12)).unwrap();
        let s = mzv_star(&idx("(2,1)"), p(1e-10)).unwrap();
        assert!((s.value() - 2.0 * z3.value()).abs() <= s.err() + 2.0 * z3.err() + 1e-9);
        assert_eq!(mzv_star(&idx("(2)"), p(1e-10)).unwrap(), mzv(&idx("(2)"), p(1e-10)).unwrap());
        for k in admissible_up_to(6) {
            let a = mzv_star(&k, p(1e-9)).unwrap();
            let b = mzv_star_direct(&k, p(1e-9)).unwrap();
            assert!((a.value() - b.value()).abs() <= a.err() + b.err(), "{k}");
        }
    }

    #[test]
    fn truncated_star_equals_truncated_expansion() {
        for k in admissible_up_to(5) {
            let direct = truncated_mzv_star(&k, 500);
            let expanded: ApproxValue = star_expand(&k).unwrap().terms().map(|(i, _)| truncated_mzv(i, 500)).sum();
            assert!((direct.value() - expanded.value()).abs() <= direct.err() + expanded.err(), "{k}");
        }
    }

    #[test]
    fn duality_numerically() {
        for k in admissible_up_to(9) {
            let d = dual_index(&k).unwrap();
            let a = mzv(&k, p(1e-9)).unwrap();
            let b = mzv(&d, p(1e-9)).unwrap();
            assert!((a.value() - b.value()).abs() <= a.err() + b.err(), "{k} vs {d}");
        }
    }

    #[test]
    fn combination_budget() {
        let mut c = IndexCombination::zero();
        c.add_term(idx("(3)"), q(1));
        c.add_term(idx("(2,1)"), q(-1));
        let v = eval_combination(&c, p(1e-8)).unwrap();
        assert!(v.err() <= 1e-8);
        assert!(v.value().abs() <= 2e-9 && v.value().abs() <= v.err());
        let single = eval_combination(&IndexCombination::single(idx("(3,1)")), p(1e-7)).unwrap();
        assert_eq!(single, mzv(&idx("(3,1)"), p(0.5 * 1e-7)).unwrap());
        let s = eval_combination(&star_expand(&idx("(2,1)")).unwrap(), p(1e-8)).unwrap();
        assert_eq!(s, mzv_star(&idx("(2,1)"), p(1e-8)).unwrap());
    }
}
