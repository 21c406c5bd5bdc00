//! The substitutions `σ: y ↦ x + y`, `S(wa) = σ(w)a`, their inverses, the
//! reverse-and-swap anti-automorphism `τ`, index duality, the weight-raising
//! operator `σ_m` and the zeta-star expansion `ζ* = ζ ∘ S`.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{AddAssign, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::wordalg::{write_linear_combination, Index, Poly, Word};

/// A finite ℚ-linear combination of indices: the image of an `h¹` polynomial
/// under [`Index::from_word`]. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct IndexCombination {
    terms: BTreeMap<Index, BigRational>,
}

impl IndexCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: Index) -> Self {
        let mut c = Self::zero();
        c.add_term(k, BigRational::one());
        c
    }

    pub fn add_term(&mut self, k: Index, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &IndexCombination, c: &BigRational) {
        for (k, a) in &other.terms {
            self.add_term(k.clone(), a * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &Index) -> BigRational {
        self.terms.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in lexicographic index order.
    pub fn terms(&self) -> btree_map::Iter<'_, Index, BigRational> {
        self.terms.iter()
    }

    pub fn from_poly(p: &Poly) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in p.terms() {
            out.add_term(Index::from_word(w)?, c.clone());
        }
        Ok(out)
    }

    pub fn to_poly(&self) -> Poly {
        self.terms.iter().map(|(k, c)| (k.to_word(), c.clone())).collect()
    }
}

impl FromIterator<(Index, BigRational)> for IndexCombination {
    fn from_iter<I: IntoIterator<Item = (Index, BigRational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl AddAssign<&IndexCombination> for IndexCombination {
    fn add_assign(&mut self, rhs: &IndexCombination) {
        self.add_scaled(rhs, &BigRational::one());
    }
}

impl SubAssign<&IndexCombination> for IndexCombination {
    fn sub_assign(&mut self, rhs: &IndexCombination) {
        self.add_scaled(rhs, &-BigRational::one());
    }
}

impl fmt::Display for IndexCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter())
    }
}

impl fmt::Debug for IndexCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexCombination({self})")
    }
}

/// Every word obtained from `w` by turning a subset of the `y`s at positions
/// allowed by `mask` into `x`, with the number of letters turned.
fn y_substitutions(w: &Word, mask: u128) -> impl Iterator<Item = (Word, u32)> + '_ {
    let letters: Vec<_> = w.letters().collect();
    let n = letters.len();
    // positions (counted from the last letter) that may flip
    let ys: Vec<usize> =
        (0..n).filter(|&i| letters[i] == crate::wordalg::Letter::Y && mask >> (n - 1 - i) & 1 == 1).collect();
    let count = ys.len();
    assert!(count < 64, "too many substitutable letters");
    (0u64..1 << count).map(move |sub| {
        let mut out = letters.clone();
        for (b, &i) in ys.iter().enumerate() {
            if sub >> b & 1 == 1 {
                out[i] = crate::wordalg::Letter::X;
            }
        }
        (Word::from_letters(out).unwrap(), sub.count_ones())
    })
}

fn all_positions() -> u128 {
    u128::MAX
}

fn all_but_last() -> u128 {
    u128::MAX << 1
}

fn substitute(p: &Poly, mask: u128, alternate: bool) -> Poly {
    p.map_linear(|w| {
        y_substitutions(w, mask)
            .map(|(v, flips)| {
                let sign = if alternate && flips % 2 == 1 { -1 } else { 1 };
                (v, crate::wordalg::q(sign))
            })
            .collect()
    })
}

/// `σ(x) = x`, `σ(y) = x + y`, extended multiplicatively and linearly.
pub fn sigma(p: &Poly) -> Poly {
    substitute(p, all_positions(), false)
}

/// `σ⁻¹(x) = x`, `σ⁻¹(y) = −x + y`.
pub fn sigma_inv(p: &Poly) -> Poly {
    substitute(p, all_positions(), true)
}

/// `S(1) = 1`, `S(wa) = σ(w)a`.
pub fn smap(p: &Poly) -> Poly {
    substitute(p, all_but_last(), false)
}

/// `S⁻¹(1) = 1`, `S⁻¹(wa) = σ⁻¹(w)a`.
pub fn smap_inv(p: &Poly) -> Poly {
    substitute(p, all_but_last(), true)
}

/// Reverse each word and swap `x ↔ y`.
pub fn tau(p: &Poly) -> Poly {
    p.terms().map(|(w, c)| (tau_word(w), c.clone())).collect()
}

pub fn tau_word(w: &Word) -> Word {
    w.reversed().swapped()
}

/// Dual index by the block rule: write `k` as blocks `(aᵢ+1, 1^{bᵢ−1})` and
/// emit `(b_u+1, 1^{a_u−1}, …, b₁+1, 1^{a₁−1})`.
pub fn dual_index(k: &Index) -> Result<Index> {
    if !k.is_admissible() {
        return Err(Error::NotAdmissible(k.clone()));
    }
    let mut blocks: Vec<(u32, u32)> = Vec::new();
    for &part in k.parts() {
        if part >= 2 {
            blocks.push((part - 1, 1));
        } else {
            blocks.last_mut().expect("admissible index starts with a block").1 += 1;
        }
    }
    let mut parts = Vec::with_capacity(k.weight() as usize);
    for &(a, b) in blocks.iter().rev() {
        parts.push(b + 1);
        parts.extend(std::iter::repeat_n(1, a as usize - 1));
    }
    Index::new(parts)
}

/// Dual index computed as `index_from_word(τ(word_from_index(k)))`.
pub fn dual_index_via_tau(k: &Index) -> Result<Index> {
    if !k.is_admissible() {
        return Err(Error::NotAdmissible(k.clone()));
    }
    Index::from_word(&tau_word(&k.to_word()))
}

/// Weak compositions of `total` into `parts` nonnegative summands, in
/// colexicographic order (last coordinate most significant).
pub fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(rem: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=rem {
            cur.push(a);
            rec(rem - a, slots - 1, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// `σ_m(z_{k₁} ⋯ z_{kₙ}) = Σ_{a₁+⋯+aₙ=m} z_{k₁+a₁} ⋯ z_{kₙ+aₙ}`, and
/// `σ_m(1) = 1`.
pub fn sigma_m(m: u32, k: &Index) -> IndexCombination {
    if k.is_empty() {
        return IndexCombination::single(Index::empty());
    }
    weak_compositions(m, k.depth())
        .into_iter()
        .map(|a| {
            let parts = k.parts().iter().zip(&a).map(|(ki, ai)| ki + ai).collect();
            (Index::new(parts).unwrap(), BigRational::one())
        })
        .collect()
}

/// `ζ*(k)` as a combination of `ζ`-arguments: `S` applied to the word of `k`.
pub fn star_expand(k: &Index) -> Result<IndexCombination> {
    if k.is_empty() {
        return Ok(IndexCombination::single(Index::empty()));
    }
    if !k.is_admissible() {
        return Err(Error::NotAdmissible(k.clone()));
    }
    IndexCombination::from_poly(&smap(&Poly::from(k.to_word())))
}
