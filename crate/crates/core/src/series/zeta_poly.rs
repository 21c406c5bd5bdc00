use std::collections::btree_map::{self, BTreeMap, Entry};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{riemann_zeta, ApproxValue, Precision};
use crate::wordalg::write_linear_combination;

/// A formal generator: Euler's constant `γ` or a Riemann zeta value `ζ(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZetaSymbol {
    Gamma,
    Zeta(u32),
}

impl ZetaSymbol {
    /// `ζ(s)`; panics for `s < 2`.
    pub fn zeta(s: u32) -> ZetaSymbol {
        assert!(s >= 2, "ζ({s}) diverges");
        ZetaSymbol::Zeta(s)
    }

    /// `s` for `ζ(s)`, 1 for `γ`.
    pub fn weight(self) -> u32 {
        match self {
            ZetaSymbol::Gamma => 1,
            ZetaSymbol::Zeta(s) => s,
        }
    }
}

impl fmt::Display for ZetaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaSymbol::Gamma => f.write_str("gamma"),
            ZetaSymbol::Zeta(s) => write!(f, "z{s}"),
        }
    }
}

/// A commutative monomial, stored as a sorted multiset of symbols.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<ZetaSymbol>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn from_symbols(mut symbols: Vec<ZetaSymbol>) -> Monomial {
        symbols.sort_unstable();
        Monomial(symbols)
    }

    pub fn symbols(&self) -> &[ZetaSymbol] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|s| s.weight()).sum()
    }

    pub fn has_gamma(&self) -> bool {
        self.0.contains(&ZetaSymbol::Gamma)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] <= other.0[j]) {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        Monomial(v)
    }
}

impl fmt::Display for Monomial {
    /// `z2^2*z3`, or `1` for the empty monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let sym = self.0[i];
            let run = self.0[i..].iter().take_while(|&&s| s == sym).count();
            if !first {
                f.write_str("*")?;
            }
            write!(f, "{sym}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            first = false;
            i += run;
        }
        Ok(())
    }
}

/// Polynomial over ℚ in the symbols `γ, ζ(2), ζ(3), …`.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct ZetaPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl ZetaPoly {
    pub fn zero() -> ZetaPoly {
        ZetaPoly::default()
    }

    pub fn constant(c: BigRational) -> ZetaPoly {
        let mut p = ZetaPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> ZetaPoly {
        ZetaPoly::constant(BigRational::one())
    }

    pub fn symbol(s: ZetaSymbol) -> ZetaPoly {
        ZetaPoly::monomial(BigRational::one(), Monomial(vec![s]))
    }

    /// `ζ(s)` as a polynomial.
    pub fn zeta(s: u32) -> ZetaPoly {
        ZetaPoly::symbol(ZetaSymbol::zeta(s))
    }

    pub fn gamma() -> ZetaPoly {
        ZetaPoly::symbol(ZetaSymbol::Gamma)
    }

    pub fn monomial(c: BigRational, m: Monomial) -> ZetaPoly {
        let mut p = ZetaPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, BigRational> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::one())
    }

    pub fn has_gamma(&self) -> bool {
        self.terms.keys().any(Monomial::has_gamma)
    }

    /// Distinct monomial weights present.
    pub fn weights(&self) -> BTreeSet<u32> {
        self.terms.keys().map(Monomial::weight).collect()
    }

    pub fn scale(&self, c: &BigRational) -> ZetaPoly {
        if c.is_zero() {
            return ZetaPoly::zero();
        }
        ZetaPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }
}

impl Add<&ZetaPoly> for &ZetaPoly {
    type Output = ZetaPoly;
    fn add(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&ZetaPoly> for &ZetaPoly {
    type Output = ZetaPoly;
    fn sub(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &ZetaPoly {
    type Output = ZetaPoly;
    fn neg(self) -> ZetaPoly {
        ZetaPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul<&ZetaPoly> for &ZetaPoly {
    type Output = ZetaPoly;
    fn mul(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = ZetaPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter())
    }
}

impl fmt::Debug for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZetaPoly({self})")
    }
}

struct TermRecord<'a>(&'a Monomial, &'a BigRational);

impl Serialize for TermRecord<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ZetaTerm", 2)?;
        st.serialize_field("monomial", &self.0.to_string())?;
        st.serialize_field("coeff", &self.1.to_string())?;
        st.end()
    }
}

impl Serialize for ZetaPoly {
    /// A list of `{"monomial": "z2^2*z3", "coeff": "1/4"}` records.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermRecord(m, c))?;
        }
        seq.end()
    }
}

fn eval_with_symbol_precision(p: &ZetaPoly, symbol_eps: Precision) -> Result<ApproxValue> {
    let mut cache: BTreeMap<u32, ApproxValue> = BTreeMap::new();
    let mut total = ApproxValue::ZERO;
    for (m, c) in &p.terms {
        let mut v = ApproxValue::ONE;
        for sym in m.symbols() {
            let ZetaSymbol::Zeta(s) = *sym else {
                return Err(Error::GammaPresent);
            };
            let z = match cache.get(&s) {
                Some(z) => *z,
                None => {
                    let z = riemann_zeta(s, symbol_eps)?;
                    cache.insert(s, z);
                    z
                }
            };
            v = v * z;
        }
        total = total + v.scale(c);
    }
    Ok(total)
}

/// Substitutes `riemann_zeta` values for the symbols. Fails on `γ`.
pub fn eval_zeta_poly(p: &ZetaPoly, prec: Precision) -> Result<ApproxValue> {
    if p.has_gamma() {
        return Err(Error::GammaPresent);
    }
    let mass: f64 = p.terms.values().map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY)).sum();
    let degree = p.terms.keys().map(Monomial::degree).max().unwrap_or(0) as f64;
    // ζ(s) ≤ ζ(2) < 2, so a degree-d monomial amplifies symbol errors by at most d·2^{d−1}
    let amplification = (mass * degree * 2f64.powf(degree - 1.0)).max(1.0);
    let mut eps = 0.5 * prec.eps() / amplification;
    for _ in 0..4 {
        let v = eval_with_symbol_precision(p, Precision::new(eps)?)?;
        if v.err() <= prec.eps() {
            return Ok(v);
        }
        eps /= 16.0;
    }
    let v = eval_with_symbol_precision(p, Precision::new(eps)?)?;
    Err(Error::PrecisionUnreachable { target: prec.eps(), achieved: v.err() })
}
