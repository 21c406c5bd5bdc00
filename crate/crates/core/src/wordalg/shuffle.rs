use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::index::{compositions, Index};
use super::poly::Poly;
use super::word::Word;

type Counts = Rc<Vec<(Word, u128)>>;

/// Entries kept per thread before the memo is dropped and rebuilt.
const MEMO_CAPACITY: usize = 1 << 15;

thread_local! {
    static MEMO: RefCell<HashMap<(Word, Word), Counts>> = RefCell::new(HashMap::new());
}

/// Shuffle of two words with natural-number multiplicities.
///
/// Multiplicities are bounded by `C(|u|+|v|, |u|) ≤ C(128, 64) < 2^127`, so
/// `u128` cannot overflow for words within [`Word::MAX_LEN`].
fn shuffle_counts(u: Word, v: Word) -> Counts {
    let key = if u <= v { (u, v) } else { (v, u) };
    let (u, v) = key;
    if u.is_empty() {
        return Rc::new(vec![(v, 1)]);
    }
    if let Some(hit) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }

    // (S2): au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v)
    let a = u.first().unwrap();
    let b = v.first().unwrap();
    let left = shuffle_counts(u.tail(), v);
    let right = shuffle_counts(u, v.tail());
    let mut acc: HashMap<Word, u128> = HashMap::with_capacity(left.len() + right.len());
    for (w, c) in left.iter() {
        *acc.entry(w.prepended(a)).or_default() += c;
    }
    for (w, c) in right.iter() {
        *acc.entry(w.prepended(b)).or_default() += c;
    }
    let mut out: Vec<(Word, u128)> = acc.into_iter().collect();
    out.sort_unstable_by_key(|x| x.0);
    let out = Rc::new(out);

    MEMO.with(|m| {
        let mut m = m.borrow_mut();
        if m.len() >= MEMO_CAPACITY {
            m.clear();
        }
        m.insert(key, out.clone());
    });
    out
}

/// Drops the shuffle memo on this thread and on every rayon worker.
pub fn clear_shuffle_cache() {
    MEMO.with(|m| m.borrow_mut().clear());
    #[cfg(feature = "parallel")]
    rayon::broadcast(|_| MEMO.with(|m| m.borrow_mut().clear()));
}

/// `u ⧢ v` by the recursion `1 ⧢ w = w ⧢ 1 = w`,
/// `au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v)`.
///
/// Panics when `|u| + |v|` exceeds [`Word::MAX_LEN`].
pub fn shuffle(u: &Word, v: &Word) -> Poly {
    assert!(
        u.len() + v.len() <= Word::MAX_LEN,
        "shuffle result length {} exceeds {}",
        u.len() + v.len(),
        Word::MAX_LEN
    );
    shuffle_counts(*u, *v).iter().map(|(w, c)| (*w, BigRational::from_integer(BigInt::from(*c)))).collect()
}

/// Bilinear extension of [`shuffle`].
pub fn shuffle_poly(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            let c = a * b;
            for (w, n) in shuffle_counts(*u, *v).iter() {
                out.add_term(*w, &c * BigRational::from_integer(BigInt::from(*n)));
            }
        }
    }
    out
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Closed-form expansion of `z_l ⧢ z_{k₁} ⋯ z_{k_r}` as a sum over
/// compositions weighted by products of binomial coefficients.
///
/// Agrees with `shuffle(z_l, word(k))`; kept as an independent route for
/// cross-checking.
pub fn shuffle_single_z(l: u32, k: &Index) -> Poly {
    assert!(l >= 1, "z_l needs l ≥ 1");
    assert!(!k.is_empty(), "shuffle_single_z needs a nonempty index");
    let ks = k.parts();
    let r = ks.len();
    let mut out = Poly::zero();

    for i in 1..=r {
        let total = l + ks[..i].iter().sum::<u32>();
        let suffix = Index::new(ks[i..].to_vec()).unwrap().to_word();
        for alpha in compositions(total, i as u32 + 1) {
            let a = alpha.parts();
            let mut c = BigInt::one();
            for j in 0..i - 1 {
                c *= binomial(a[j] as i64 - 1, ks[j] as i64 - 1);
            }
            c *= binomial(a[i - 1] as i64 - 1, ks[i - 1] as i64 - a[i] as i64);
            if !c.is_zero() {
                out.add_term(alpha.to_word().concat(&suffix), BigRational::from_integer(c));
            }
        }
    }

    let total = l + k.weight();
    for alpha in compositions(total, r as u32 + 1) {
        let a = alpha.parts();
        let mut c = BigInt::one();
        for j in 0..r {
            c *= binomial(a[j] as i64 - 1, ks[j] as i64 - 1);
        }
        if !c.is_zero() {
            out.add_term(alpha.to_word(), BigRational::from_integer(c));
        }
    }
    out
}
