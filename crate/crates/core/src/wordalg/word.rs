use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    fn bit(self) -> u128 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(bit: u128) -> Letter {
        if bit & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }

    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::X => "x",
            Letter::Y => "y",
        })
    }
}

/// A word over `{x, y}` packed one bit per letter (`x = 0`, `y = 1`).
///
/// The first letter sits in the most significant of the `len` used bits, so
/// for words of equal length numeric order of `bits` is lexicographic order
/// with `x < y`. `Ord` is length first, then lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    len: u16,
    bits: u128,
}

impl Word {
    pub const MAX_LEN: usize = 128;

    /// The empty word, unit of both concatenation and shuffle.
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Word> {
        let mut w = Word::EMPTY;
        for (i, l) in letters.into_iter().enumerate() {
            if i >= Self::MAX_LEN {
                return Err(Error::WordTooLong(i + 1));
            }
            w = w.pushed(l);
        }
        Ok(w)
    }

    pub fn letter(l: Letter) -> Word {
        Word { len: 1, bits: l.bit() }
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Word {
        assert!(k <= Self::MAX_LEN, "word length {k} exceeds {}", Self::MAX_LEN);
        Word::from_raw(k, 0)
    }

    /// `y^k`.
    pub fn y_pow(k: usize) -> Word {
        assert!(k <= Self::MAX_LEN, "word length {k} exceeds {}", Self::MAX_LEN);
        Word::from_raw(k, u128::MAX)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        let n = self.len();
        (i < n).then(|| Letter::from_bit(self.bits >> (n - 1 - i)))
    }

    pub fn first(&self) -> Option<Letter> {
        self.get(0)
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| Letter::from_bit(self.bits))
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        (0..self.len()).map(move |i| self.get(i).unwrap())
    }

    pub fn count_y(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn count_x(&self) -> usize {
        self.len() - self.count_y()
    }

    /// Member of `h¹`: empty or ending in `y`.
    pub fn in_h1(&self) -> bool {
        self.is_empty() || self.last() == Some(Letter::Y)
    }

    /// Member of `h⁰`: empty, or starting with `x` and ending in `y`.
    pub fn in_h0(&self) -> bool {
        self.is_empty() || (self.first() == Some(Letter::X) && self.last() == Some(Letter::Y))
    }

    fn from_raw(len: usize, bits: u128) -> Word {
        debug_assert!(len <= Self::MAX_LEN);
        Word { len: len as u16, bits: bits & mask(len) }
    }

    /// Appends a letter. Panics past [`Word::MAX_LEN`].
    pub fn pushed(&self, l: Letter) -> Word {
        let n = self.len();
        assert!(n < Self::MAX_LEN, "word length exceeds {}", Self::MAX_LEN);
        Word::from_raw(n + 1, (self.bits << 1) | l.bit())
    }

    /// Prepends a letter. Panics past [`Word::MAX_LEN`].
    pub fn prepended(&self, l: Letter) -> Word {
        let n = self.len();
        assert!(n < Self::MAX_LEN, "word length exceeds {}", Self::MAX_LEN);
        Word::from_raw(n + 1, self.bits | (l.bit() << n))
    }

    /// Concatenation `self · other`. Panics past [`Word::MAX_LEN`].
    pub fn concat(&self, other: &Word) -> Word {
        let (a, b) = (self.len(), other.len());
        assert!(a + b <= Self::MAX_LEN, "word length {} exceeds {}", a + b, Self::MAX_LEN);
        let shifted = if b == Self::MAX_LEN { 0 } else { self.bits << b };
        Word::from_raw(a + b, shifted | other.bits)
    }

    /// Drops the first letter.
    pub fn tail(&self) -> Word {
        let n = self.len();
        if n == 0 {
            return *self;
        }
        Word::from_raw(n - 1, self.bits)
    }

    /// Drops the last letter.
    pub fn init(&self) -> Word {
        let n = self.len();
        if n == 0 {
            return *self;
        }
        Word::from_raw(n - 1, self.bits >> 1)
    }

    pub fn reversed(&self) -> Word {
        let n = self.len();
        if n == 0 {
            return *self;
        }
        Word::from_raw(n, self.bits.reverse_bits() >> (128 - n))
    }

    /// Swaps `x ↔ y` letterwise.
    pub fn swapped(&self) -> Word {
        Word::from_raw(self.len(), !self.bits)
    }
}

fn mask(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// `1` is the empty word; otherwise a nonempty string over `x`, `y`.
    fn from_str(s: &str) -> Result<Word> {
        let trimmed = s.trim();
        let offset = s.len() - s.trim_start().len();
        if trimmed == "1" {
            return Ok(Word::EMPTY);
        }
        if trimmed.is_empty() {
            return Err(Error::Parse { column: offset + 1, message: "empty word (use 1)".into() });
        }
        let mut letters = Vec::with_capacity(trimmed.len());
        for (i, c) in trimmed.chars().enumerate() {
            letters.push(match c {
                'x' => Letter::X,
                'y' => Letter::Y,
                other => {
                    return Err(Error::Parse {
                        column: offset + i + 1,
                        message: format!("unexpected character {other:?} in word"),
                    })
                }
            });
        }
        Word::from_letters(letters)
    }
}
