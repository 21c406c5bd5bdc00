use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::word::{Letter, Word};

/// A composition `(k₁, …, kₙ)` of positive integers. The empty index stands
/// for the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Index(Vec<u32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexStats {
    pub weight: u32,
    pub depth: u32,
    pub height: u32,
}

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Index> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Index(parts))
    }

    pub fn empty() -> Index {
        Index(Vec::new())
    }

    /// `(k+1, 1, …, 1)` with `ones` trailing ones.
    pub fn hook(head: u32, ones: usize) -> Index {
        assert!(head >= 1);
        let mut parts = vec![head];
        parts.extend(std::iter::repeat_n(1, ones));
        Index(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonempty with first part at least 2. The empty index is not admissible
    /// but is accepted wherever the unit is.
    pub fn is_admissible(&self) -> bool {
        self.0.first().is_some_and(|&k| k >= 2)
    }

    /// Admissible or empty; the indices whose zeta value converges.
    pub fn is_convergent(&self) -> bool {
        self.is_empty() || self.is_admissible()
    }

    pub fn stats(&self) -> IndexStats {
        IndexStats {
            weight: self.weight(),
            depth: self.depth() as u32,
            height: self.0.iter().filter(|&&k| k >= 2).count() as u32,
        }
    }

    /// `z_{k₁} ⋯ z_{kₙ}` with `z_k = x^{k-1} y`.
    pub fn to_word(&self) -> Word {
        self.try_to_word().expect("index weight exceeds the maximum word length")
    }

    pub fn try_to_word(&self) -> Result<Word> {
        let w = self.weight() as usize;
        if w > Word::MAX_LEN {
            return Err(Error::WordTooLong(w));
        }
        Ok(self.0.iter().fold(Word::EMPTY, |acc, &k| acc.concat(&z(k))))
    }

    /// Inverse of [`Index::to_word`] on `h¹`.
    pub fn from_word(w: &Word) -> Result<Index> {
        if !w.in_h1() {
            return Err(Error::NotInH1(*w));
        }
        let mut parts = Vec::with_capacity(w.count_y());
        let mut run = 0u32;
        for l in w.letters() {
            run += 1;
            if l == Letter::Y {
                parts.push(run);
                run = 0;
            }
        }
        Ok(Index(parts))
    }

    pub fn concat(&self, other: &Index) -> Index {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Index(parts)
    }
}

/// The word `z_k = x^{k-1} y`.
pub fn z(k: u32) -> Word {
    assert!(k >= 1, "z_k needs k ≥ 1");
    Word::x_pow(k as usize - 1).pushed(Letter::Y)
}

/// `word_from_index`.
pub fn word_from_index(k: &Index) -> Word {
    k.to_word()
}

/// `index_from_word`.
pub fn index_from_word(w: &Word) -> Result<Index> {
    Index::from_word(w)
}

/// All indices of the given weight and depth, in lexicographic order.
pub fn compositions(weight: u32, depth: u32) -> Vec<Index> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(depth as usize);
    fn rec(rem: u32, slots: u32, cur: &mut Vec<u32>, out: &mut Vec<Index>) {
        if slots == 0 {
            if rem == 0 {
                out.push(Index(cur.clone()));
            }
            return;
        }
        if rem < slots {
            return;
        }
        for a in 1..=rem - (slots - 1) {
            cur.push(a);
            rec(rem - a, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(weight, depth, &mut cur, &mut out);
    out
}

/// All admissible indices of the given weight, ordered by depth then
/// lexicographically.
pub fn admissible_indices(weight: u32) -> Vec<Index> {
    (1..weight).flat_map(|d| compositions(weight, d)).filter(Index::is_admissible).collect()
}

/// Admissible indices of every weight in `2..=max_weight`.
pub fn admissible_up_to(max_weight: u32) -> Vec<Index> {
    (2..=max_weight).flat_map(admissible_indices).collect()
}

impl From<Index> for Vec<u32> {
    fn from(k: Index) -> Self {
        k.0
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Index {
    type Err = Error;

    /// `'(' [int (',' int)*] ')'` with optional whitespace.
    fn from_str(s: &str) -> Result<Index> {
        IndexParser { src: s.as_bytes(), pos: 0 }.parse()
    }
}

struct IndexParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl IndexParser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            return self.err("index parts must be ≥ 1");
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a positive integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<u32>() {
            Ok(0) => {
                self.pos = start;
                Err(Error::ZeroPart)
            }
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn parse(mut self) -> Result<Index> {
        self.expect(b'(')?;
        let mut parts = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b')') {
            self.pos += 1;
        } else {
            loop {
                parts.push(self.int()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.err("expected ',' or ')'"),
                }
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err("trailing input after ')'");
        }
        let k = Index(parts);
        k.try_to_word()?;
        Ok(k)
    }
}
