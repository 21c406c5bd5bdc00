//! Both sides of the structural identities as explicit polynomials.
//!
//! Left-hand sides built from shuffles use the recursive product, which is
//! the trusted side. Right-hand sides are transcribed closed forms.

use num_rational::BigRational;

use crate::morphisms::{smap, weak_compositions, IndexCombination};
use crate::wordalg::{q, shuffle, Index, Poly, Word};

/// Word of an index given by its parts; every part must be at least 1.
fn word(parts: &[u32]) -> Word {
    Index::new(parts.to_vec()).expect("index parts are positive").to_word()
}

/// `(head, 1, …, 1)` with `ones` trailing ones.
fn hook(head: u32, ones: u32) -> Vec<u32> {
    let mut v = vec![head];
    v.extend(std::iter::repeat_n(1, ones as usize));
    v
}

fn ones(count: u32) -> impl Iterator<Item = u32> {
    std::iter::repeat_n(1, count as usize)
}

fn sign(e: u32) -> BigRational {
    if e.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

/// `S(z_{k+1} z₁ⁿ)`.
pub fn s_map_hook_lhs(k: u32, n: u32) -> Poly {
    smap(&Poly::from(word(&hook(k + 1, n))))
}

/// `Σ_{t=1}^{n+1} Σ_{a₁+⋯+a_t=n+1−t} z_{a_t+k+1} z_{a₁+1} ⋯ z_{a_{t−1}+1}`.
pub fn s_map_hook_rhs(k: u32, n: u32) -> Poly {
    let mut out = Poly::zero();
    for t in 1..=n + 1 {
        for a in weak_compositions(n + 1 - t, t as usize) {
            let (last, rest) = a.split_last().unwrap();
            let mut parts = vec![last + k + 1];
            parts.extend(rest.iter().map(|ai| ai + 1));
            out.add_term(word(&parts), q(1));
        }
    }
    out
}

/// `Σ_{a₁+⋯+a_k=n} (a_k+1) z_{a_k+2} z_{a₁+1} ⋯ z_{a_{k−1}+1}`.
pub fn weighted_hook_lhs(k: u32, n: u32) -> Poly {
    let mut out = Poly::zero();
    for a in weak_compositions(n, k as usize) {
        let (last, rest) = a.split_last().unwrap();
        let mut parts = vec![last + 2];
        parts.extend(rest.iter().map(|ai| ai + 1));
        out.add_term(word(&parts), q(*last as i64 + 1));
    }
    out
}

/// `Σ_{t=1}^{n+1} Σ_{a₁+⋯+a_k=n+1−t} z_{a_k+t+1} z_{a₁+1} ⋯ z_{a_{k−1}+1}`.
pub fn weighted_hook_rhs(k: u32, n: u32) -> Poly {
    let mut out = Poly::zero();
    for t in 1..=n + 1 {
        for a in weak_compositions(n + 1 - t, k as usize) {
            let (last, rest) = a.split_last().unwrap();
            let mut parts = vec![last + t + 1];
            parts.extend(rest.iter().map(|ai| ai + 1));
            out.add_term(word(&parts), q(1));
        }
    }
    out
}

/// `Σ_{r=0}^{k−2} (−1)^r z_{k−r} ⧢ z_{r+2} z₁^{n−1}`.
pub fn alternating_single_shuffle_lhs(k: u32, n: u32) -> Poly {
    let mut out = Poly::zero();
    for r in 0..k.saturating_sub(1) {
        let right = word(&hook(r + 2, n - 1));
        out.add_scaled(&shuffle(&word(&[k - r]), &right), &sign(r));
    }
    out
}

/// All compositions of `total` into `parts` positive parts avoiding `forbidden`.
fn compositions_avoiding(total: i64, parts: usize, forbidden: i64) -> Vec<Vec<u32>> {
    fn rec(rem: i64, slots: usize, forbidden: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 1..=rem - (slots as i64 - 1) {
            if a == forbidden {
                continue;
            }
            cur.push(a as u32);
            rec(rem - a, slots - 1, forbidden, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total >= parts as i64 {
        rec(total, parts, forbidden, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// Closed form `U + V + W` of the alternating single-letter shuffle sum:
///
/// `U = Σ_{i=3}^{n+1} (n+2−i) Σ_{s=2}^{k} z_s [Σ_{m=2}^{k−s+2} {…} z_m] z₁^{n+1−i}` where `{…}` is
/// `Σ_{p=2}^{k−s−m+3} Σ_{j=0}^{i−4} z_{k−p−s−m+4} z₁^j z_p z₁^{i−4−j} + z_{k−s−m+3} z₁^{i−3}
///  + Σ_{p=s+m−1}^{k−1} z_{k−p} Σ z_{α₃} ⋯ z_{α_{i−1}}`, the last sum over
/// `α₃+⋯+α_{i−1} = p+i−m−s` with every `α_j ≥ 1` and `α_j ≠ p−m−s+4`;
/// `V = (n+(−1)^k) Σ_{α=2}^{k} z_α z_{k+2−α} z₁^{n−1}`;
/// `W = (1+(−1)^k)(n+1) z_{k+1} z₁ⁿ`.
///
/// Empty ranges contribute nothing.
pub fn alternating_single_shuffle_rhs(k: u32, n: u32) -> Poly {
    let (ki, ni) = (k as i64, n as i64);
    let mut out = Poly::zero();
    let to_u32 = |v: i64| -> u32 {
        assert!(v >= 1, "part {v} out of range");
        v as u32
    };

    for i in 3..=ni + 1 {
        let weight = q(ni + 2 - i);
        for s in 2..=ki {
            for m in 2..=ki - s + 2 {
                let mut inner: Vec<Vec<u32>> = Vec::new();
                for p in 2..=ki - s - m + 3 {
                    for j in 0..=i - 4 {
                        let mut t = vec![to_u32(ki - p - s - m + 4)];
                        t.extend(ones(j as u32));
                        t.push(to_u32(p));
                        t.extend(ones((i - 4 - j) as u32));
                        inner.push(t);
                    }
                }
                let mut t = vec![to_u32(ki - s - m + 3)];
                t.extend(ones((i - 3) as u32));
                inner.push(t);
                for p in s + m - 1..=ki - 1 {
                    for alpha in compositions_avoiding(p + i - m - s, (i - 3) as usize, p - m - s + 4) {
                        let mut t = vec![to_u32(ki - p)];
                        t.extend(alpha);
                        inner.push(t);
                    }
                }
                for t in inner {
                    let mut parts = vec![s as u32];
                    parts.extend(t);
                    parts.push(m as u32);
                    parts.extend(ones((ni + 1 - i) as u32));
                    out.add_term(word(&parts), weight.clone());
                }
            }
        }
    }

    let v_coeff = q(ni) + sign(k);
    for a in 2..=k {
        let mut parts = vec![a, k + 2 - a];
        parts.extend(ones(n - 1));
        out.add_term(word(&parts), v_coeff.clone());
    }
    let w_coeff = (q(1) + sign(k)) * q(ni + 1);
    out.add_term(word(&hook(k + 1, n)), w_coeff);
    out
}

/// `Σ_{r=0}^{k−2} (−1)^r z₂ z₁^{k−r−2} ⧢ z_{n+1} z₁^r`.
pub fn alternating_hook_shuffle_lhs(k: u32, n: u32) -> Poly {
    let mut out = Poly::zero();
    for r in 0..k.saturating_sub(1) {
        let left = word(&hook(2, k - r - 2));
        let right = word(&hook(n + 1, r));
        out.add_scaled(&shuffle(&left, &right), &sign(r));
    }
    out
}

/// `Σ_{α=2}^{k} z_{n+1} z₁^{k−α} z₂ z₁^{α−2} + (n+1) z_{n+2} z₁^{k−1}`.
pub fn raised_hook_sum(k: u32, n: u32) -> Poly {
    let mut out = Poly::zero();
    for a in 2..=k {
        let mut parts = vec![n + 1];
        parts.extend(ones(k - a));
        parts.push(2);
        parts.extend(ones(a - 2));
        out.add_term(word(&parts), q(1));
    }
    out.add_term(word(&hook(n + 2, k - 1)), q(n as i64 + 1));
    out
}

/// Weighted hook sum plus `(−1)^k` times [`raised_hook_sum`].
pub fn alternating_hook_shuffle_rhs(k: u32, n: u32) -> Poly {
    let mut out = weighted_hook_lhs(k, n);
    out.add_scaled(&raised_hook_sum(k, n), &sign(k));
    out
}

/// `ζ(a+2, 1^{b−1}) + Σ_j ζ(a+1, 1, …, 2, …, 1)` with the 2 in each of the
/// `b−1` trailing positions: `σ₁` applied to `(a+1, 1^{b−1})`, listed
/// explicitly.
pub fn ohno_hook_side(a: u32, b: u32) -> IndexCombination {
    let mut out = IndexCombination::zero();
    out.add_term(Index::hook(a + 2, b as usize - 1), q(1));
    for j in 1..b {
        let mut parts = hook(a + 1, b - 1);
        parts[j as usize] = 2;
        out.add_term(Index::new(parts).unwrap(), q(1));
    }
    out
}
