//! Asymptotic expansions of nested tail sums.
//!
//! A nested tail `F(m) = Σ_{p₁>⋯>p_j>m} p₁^{-k₁} ⋯ p_j^{-k_j}` is carried as
//! `Σ_{r≤ORDER} c_r m^{-r}` plus a remainder `θ·e·m^{-(ORDER+1)}` (|θ| ≤ 1),
//! valid for every `m ≥ base`. One more level, `Σ_{p>m} p^{-k} F(p)`, is
//! obtained term by term from the Euler–Maclaurin expansion of
//! `Σ_{p>m} p^{-s}`, whose remainder is bounded by the first omitted term
//! because `t ↦ t^{-s}` is completely monotone.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::approx::{add_up, mul_up, ApproxValue, UNIT_ROUNDOFF};

/// Highest power of `1/m` kept explicitly.
pub(crate) const ORDER: usize = 24;

const BERNOULLI_TERMS: usize = 24;

/// Slack for the relative error of an `f64` power `x^e` with small `|e|`.
fn pow_up(x: f64, e: i32) -> f64 {
    x.powi(e) * (1.0 + 4.0 * (e.unsigned_abs() as f64 + 2.0) * UNIT_ROUNDOFF)
}

/// `B_{2j} / (2j)!` for `j = 0, 1, …`, computed exactly then rounded.
pub(crate) fn bernoulli_over_factorial() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // B_m = -1/(m+1) Σ_{k<m} C(m+1, k) B_k
        let n = 2 * BERNOULLI_TERMS;
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        let mut row: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
        for m in 1..=n {
            row = (0..=m + 1)
                .map(|i| match i {
                    0 => BigInt::one(),
                    i if i == m + 1 => BigInt::one(),
                    i => &row[i - 1] + &row[i],
                })
                .collect();
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from_integer(row[k].clone()) * bk;
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(BERNOULLI_TERMS + 1);
        for j in 0..=BERNOULLI_TERMS {
            if j > 0 {
                fact *= BigInt::from(2 * j - 1) * BigInt::from(2 * j);
            }
            let v = &b[2 * j] / BigRational::from_integer(fact.clone());
            out.push(v.to_f64().unwrap());
        }
        out
    })
}

/// Rising factorial `(s)_r = s(s+1)⋯(s+r−1)` in floating point.
fn rising(s: u32, r: u32) -> f64 {
    (0..r).map(|i| (s + i) as f64).product()
}

/// Power and coefficient of the Euler–Maclaurin expansion of
/// `Σ_{p>m} p^{-s}` (or `Σ_{p≥m}` when `inclusive`), the terms kept up to
/// power `limit`, and the magnitude and power of the first omitted term.
fn euler_maclaurin_terms(s: u32, inclusive: bool, limit: usize) -> (Vec<(usize, f64)>, (usize, f64)) {
    debug_assert!(s >= 2);
    let b = bernoulli_over_factorial();
    let s_us = s as usize;
    let mut terms = vec![(s_us - 1, 1.0 / (s - 1) as f64), (s_us, if inclusive { 0.5 } else { -0.5 })];
    let mut j = 1;
    while s_us + 2 * j - 1 <= limit {
        terms.push((s_us + 2 * j - 1, b[j] * rising(s, 2 * j as u32 - 1)));
        j += 1;
    }
    assert!(j < b.len(), "Bernoulli table too short");
    let omitted = (s_us + 2 * j - 1, (b[j] * rising(s, 2 * j as u32 - 1)).abs());
    (terms, omitted)
}

#[derive(Debug, Clone)]
pub(crate) struct Expansion {
    coeffs: [f64; ORDER + 1],
    /// Radius of each coefficient.
    radii: [f64; ORDER + 1],
    /// Coefficient of the `m^{-(ORDER+1)}` remainder.
    remainder: f64,
    base: f64,
}

impl Expansion {
    /// The constant function 1, valid for `m ≥ base`.
    pub(crate) fn one(base: f64) -> Expansion {
        assert!(base >= 1.0);
        let mut coeffs = [0.0; ORDER + 1];
        coeffs[0] = 1.0;
        Expansion { coeffs, radii: [0.0; ORDER + 1], remainder: 0.0, base }
    }

    /// Bound for `c·m^{-pw}` with `pw > ORDER`, as a multiple of `m^{-(ORDER+1)}`.
    fn fold(&self, c: f64, pw: usize) -> f64 {
        debug_assert!(pw > ORDER);
        mul_up(c.abs(), pow_up(self.base, (ORDER + 1) as i32 - pw as i32))
    }

    /// `m ↦ Σ_{p>m} p^{-k} F(p)`, or `Σ_{p≥m}` when `inclusive`.
    ///
    /// Requires the lowest power of `F` plus `k` to be at least 2 so the sum
    /// converges; this holds whenever the first applied `k` is at least 2.
    pub(crate) fn sum_tail(&self, k: u32, inclusive: bool) -> Expansion {
        assert!(k >= 1);
        let mut out = Expansion { coeffs: [0.0; ORDER + 1], radii: [0.0; ORDER + 1], remainder: 0.0, base: self.base };
        let mut abs_sum = [0.0f64; ORDER + 1];

        for r in 0..=ORDER {
            let (c, rho) = (self.coeffs[r], self.radii[r]);
            if c == 0.0 && rho == 0.0 {
                continue;
            }
            let s = k + r as u32;
            assert!(s >= 2, "divergent tail sum");
            let (terms, (omit_pw, omit)) = euler_maclaurin_terms(s, inclusive, ORDER);
            for (pw, t) in terms {
                let contrib = c * t;
                if pw <= ORDER {
                    out.coeffs[pw] += contrib;
                    abs_sum[pw] += contrib.abs();
                } else {
                    out.remainder = add_up(out.remainder, out.fold(contrib, pw));
                }
            }
            out.remainder = add_up(out.remainder, out.fold(mul_up(c.abs(), omit), omit_pw));

            // Σ_{p>m} ρ p^{-s} ≤ ρ m^{1-s}/(s-1), plus ρ m^{-s} when inclusive
            let mut spread = vec![(s as usize - 1, mul_up(rho, 1.0 / (s - 1) as f64) * (1.0 + UNIT_ROUNDOFF))];
            if inclusive {
                spread.push((s as usize, rho));
            }
            for (pw, v) in spread {
                if pw <= ORDER {
                    out.radii[pw] = add_up(out.radii[pw], v);
                } else {
                    out.remainder = add_up(out.remainder, out.fold(v, pw));
                }
            }
        }

        // Σ_{p>m} e p^{-(k+ORDER+1)} ≤ e m^{-(ORDER+1)} base^{1-k}/(k+ORDER)
        let p = ORDER as i32;
        let mut carried = mul_up(self.remainder, pow_up(self.base, 1 - k as i32) / (k as i32 + p) as f64);
        if inclusive {
            carried = add_up(carried, mul_up(self.remainder, pow_up(self.base, -(k as i32))));
        }
        out.remainder = add_up(out.remainder, carried * (1.0 + UNIT_ROUNDOFF));

        // rounding in coefficient accumulation and in the Euler–Maclaurin constants
        let slack = 4.0 * (ORDER as f64 + 4.0) * UNIT_ROUNDOFF;
        for (r, a) in out.radii.iter_mut().zip(&abs_sum) {
            *r = add_up(*r, mul_up(*a, slack));
        }
        out
    }

    /// Enclosure of the expanded function at `m = base`.
    pub(crate) fn eval(&self) -> ApproxValue {
        let x = 1.0 / self.base;
        let mut value = 0.0;
        let mut abs_value = 0.0;
        for r in (0..=ORDER).rev() {
            value = value * x + self.coeffs[r];
            abs_value = abs_value * x + self.coeffs[r].abs();
        }
        let mut err = 0.0;
        for r in 0..=ORDER {
            err = add_up(err, mul_up(self.radii[r], pow_up(self.base, -(r as i32))));
        }
        err = add_up(err, mul_up(self.remainder, pow_up(self.base, -(ORDER as i32 + 1))));
        let horner = mul_up(abs_value, 4.0 * (ORDER as f64 + 2.0) * UNIT_ROUNDOFF);
        ApproxValue::new(value, add_up(err, horner))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_over_factorial();
        assert_eq!(b[0], 1.0);
        assert!((b[1] - 1.0 / 12.0).abs() < 1e-17);
        assert!((b[2] + 1.0 / 720.0).abs() < 1e-18);
        assert!((b[3] - 1.0 / 30240.0).abs() < 1e-19);
        // B_{2j}/(2j)! ~ 2(-1)^{j+1}/(2π)^{2j}
        let j = 20;
        let approx = 2.0 / (2.0 * std::f64::consts::PI).powi(2 * j as i32);
        assert!((b[j].abs() / approx - 1.0).abs() < 1e-6);
    }

    fn direct_tail(s: i32, m: u64, inclusive: bool) -> f64 {
        // Σ_{p>m}^{N} p^{-s} summed from the small end, plus the integral tail
        let n = 2_000_000u64;
        let start = if inclusive { m } else { m + 1 };
        let mut acc = 0.0;
        for p in (start..=n).rev() {
            acc += (p as f64).powi(-s);
        }
        acc + (n as f64).powi(1 - s) / (s - 1) as f64 - 0.5 * (n as f64).powi(-s)
    }

    #[test]
    fn single_tail_matches_direct_sum() {
        for &(s, inclusive) in &[(2u32, false), (3, false), (2, true), (5, true)] {
            let e = Expansion::one(16.0).sum_tail(s, inclusive).eval();
            let d = direct_tail(s as i32, 16, inclusive);
            assert!((e.value() - d).abs() < 1e-13, "s={s}: {} vs {d}", e.value());
            assert!(e.err() < 1e-13 * e.value(), "{}", e.err());
        }
    }

    #[test]
    fn nested_tail_brackets_double_sum() {
        // Σ_{p>q>16} p^{-2} q^{-1}: inner direct sums, outer direct sum to a large cutoff
        let f = Expansion::one(16.0).sum_tail(2, false).sum_tail(1, false).eval();
        let n = 200_000u64;
        let mut inner = 0.0; // Σ_{p>q} p^{-2}, maintained from the top
        let mut acc = 0.0;
        let mut q = n;
        let top_tail = 1.0 / n as f64;
        inner += top_tail;
        while q > 16 {
            acc += inner / q as f64;
            inner += 1.0 / (q as f64 * q as f64);
            q -= 1;
        }
        // truncation beyond n contributes about Σ_{q>n} 1/q² ≈ 5e-6
        assert!((f.value() - acc).abs() < 1e-5, "{} vs {acc}", f.value());
    }
}
