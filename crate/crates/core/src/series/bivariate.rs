use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::wordalg::q;

use super::zeta_poly::ZetaPoly;

/// Power series in commuting `x, y` with [`ZetaPoly`] coefficients,
/// truncated at total degree `order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateSeries {
    order: u32,
    coeffs: BTreeMap<(u32, u32), ZetaPoly>,
}

impl BivariateSeries {
    pub fn zero(order: u32) -> BivariateSeries {
        BivariateSeries { order, coeffs: BTreeMap::new() }
    }

    pub fn one(order: u32) -> BivariateSeries {
        BivariateSeries::term(order, 0, 0, ZetaPoly::one())
    }

    /// `c · x^i y^j`, or zero when `i + j > order`.
    pub fn term(order: u32, i: u32, j: u32, c: ZetaPoly) -> BivariateSeries {
        let mut s = BivariateSeries::zero(order);
        s.add_coeff(i, j, &c);
        s
    }

    /// `cx·x + cy·y`.
    pub fn linear(order: u32, cx: BigRational, cy: BigRational) -> BivariateSeries {
        let mut s = BivariateSeries::zero(order);
        s.add_coeff(1, 0, &ZetaPoly::constant(cx));
        s.add_coeff(0, 1, &ZetaPoly::constant(cy));
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: u32, j: u32) -> ZetaPoly {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients keyed by `(i, j)`.
    pub fn coefficients(&self) -> btree_map::Iter<'_, (u32, u32), ZetaPoly> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn has_gamma(&self) -> bool {
        self.coeffs.values().any(ZetaPoly::has_gamma)
    }

    fn add_coeff(&mut self, i: u32, j: u32, c: &ZetaPoly) {
        if i + j > self.order || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((i, j)).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    fn check_order(&self, other: &BivariateSeries) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, other.order))
        }
    }

    pub fn add(&self, other: &BivariateSeries) -> Result<BivariateSeries> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (&(i, j), c) in &other.coeffs {
            out.add_coeff(i, j, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &BivariateSeries) -> Result<BivariateSeries> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> BivariateSeries {
        let mut out = BivariateSeries::zero(self.order);
        for (&(i, j), p) in &self.coeffs {
            out.add_coeff(i, j, &p.scale(c));
        }
        out
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scale_poly(&self, p: &ZetaPoly) -> BivariateSeries {
        let mut out = BivariateSeries::zero(self.order);
        for (&(i, j), c) in &self.coeffs {
            out.add_coeff(i, j, &(c * p));
        }
        out
    }
}

/// Cauchy product truncated at the common order.
pub fn series_mul(a: &BivariateSeries, b: &BivariateSeries) -> Result<BivariateSeries> {
    a.check_order(b)?;
    let mut out = BivariateSeries::zero(a.order);
    for (&(i1, j1), c1) in &a.coeffs {
        for (&(i2, j2), c2) in &b.coeffs {
            if i1 + i2 + j1 + j2 <= a.order {
                out.add_coeff(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
    }
    Ok(out)
}

/// `Σ_{j=0}^{order} a^j / j!`; exact because `a` has no constant term.
pub fn series_exp(a: &BivariateSeries) -> Result<BivariateSeries> {
    if !a.coeff(0, 0).is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    let mut total = BivariateSeries::one(a.order);
    let mut power = BivariateSeries::one(a.order);
    let mut factorial = BigInt::one();
    for j in 1..=a.order {
        power = series_mul(&power, a)?;
        if power.is_zero() {
            break;
        }
        factorial *= BigInt::from(j);
        total = total.add(&power.scale(&BigRational::new(BigInt::one(), factorial.clone())))?;
    }
    Ok(total)
}

/// Exponent of `Γ(1 + t)` at `t = cx·x + cy·y`:
/// `−γ t + Σ_{n=2}^{order} (−1)ⁿ ζ(n)/n · tⁿ`.
pub fn log_gamma_series(cx: &BigRational, cy: &BigRational, order: u32) -> BivariateSeries {
    assert!(order >= 1, "order must be at least 1");
    let t = BivariateSeries::linear(order, cx.clone(), cy.clone());
    let mut out = t.scale_poly(&-&ZetaPoly::gamma());
    let mut power = t.clone();
    for n in 2..=order {
        power = series_mul(&power, &t).expect("same order");
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let c = ZetaPoly::zeta(n).scale(&BigRational::new(BigInt::from(sign), BigInt::from(n)));
        out = out.add(&power.scale_poly(&c)).expect("same order");
    }
    out
}

/// `1 − Γ(1−x)Γ(1−y)/Γ(1−x−y)` as `1 − exp(E(−x) + E(−y) − E(−x−y))`,
/// whose `x^k yⁿ` coefficient is `ζ(k+1, 1^{n−1})`.
pub fn height_one_gf(order: u32) -> BivariateSeries {
    let (m1, zero) = (q(-1), BigRational::zero());
    let exponent = log_gamma_series(&m1, &zero, order)
        .add(&log_gamma_series(&zero, &m1, order))
        .and_then(|s| s.sub(&log_gamma_series(&m1, &m1, order)))
        .expect("same order");
    let e = series_exp(&exponent).expect("exponent has no constant term");
    BivariateSeries::one(order).sub(&e).expect("same order")
}

/// `ζ(k+1, 1^{n−1})` as a polynomial in Riemann zeta values.
pub fn height_one_as_zeta_poly(k: u32, n: u32) -> ZetaPoly {
    assert!(k >= 1 && n >= 1);
    height_one_gf(k + n).coeff(k, n)
}

/// Explicit polynomial for `(−1)^k ζ*(k+1,1ⁿ) − (−1)ⁿ ζ*(n+1,1^k)`:
///
/// ```text
/// kζ(k+2,1^{n−1}) − nζ(n+2,1^{k−1})
///   + (−1)^k Σ_{r=0}^{k−2} (−1)^r ζ(k−r) ζ(n+1,1^r)
///   − (−1)ⁿ Σ_{r=0}^{n−2} (−1)^r ζ(n−r) ζ(k+1,1^r)
/// ```
///
/// with every height-one value replaced by its zeta polynomial.
pub fn star_difference_certificate(k: u32, n: u32) -> ZetaPoly {
    assert!(k >= 1 && n >= 1);
    let gf = height_one_gf(k + n + 1);
    // ζ(a+1, 1^{b−1})
    let h = |a: u32, b: u32| gf.coeff(a, b);
    let sign = |e: u32| if e.is_multiple_of(2) { q(1) } else { q(-1) };

    let mut out = &h(k + 1, n).scale(&q(k as i64)) - &h(n + 1, k).scale(&q(n as i64));
    for r in 0..k.saturating_sub(1) {
        let term = &ZetaPoly::zeta(k - r) * &h(n, r + 1);
        out = &out + &term.scale(&(sign(k) * sign(r)));
    }
    for r in 0..n.saturating_sub(1) {
        let term = &ZetaPoly::zeta(n - r) * &h(k, r + 1);
        out = &out - &term.scale(&(sign(n) * sign(r)));
    }
    out
}

impl fmt::Display for BivariateSeries {
    /// One `x^i y^j: poly` line per nonzero coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return writeln!(f, "0");
        }
        for (&(i, j), c) in &self.coeffs {
            writeln!(f, "x^{i} y^{j}: {c}")?;
        }
        Ok(())
    }
}

struct CoeffRecord<'a>(u32, u32, &'a ZetaPoly);

impl Serialize for CoeffRecord<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Coefficient", 3)?;
        st.serialize_field("x", &self.0)?;
        st.serialize_field("y", &self.1)?;
        st.serialize_field("poly", self.2)?;
        st.end()
    }
}

impl Serialize for BivariateSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<CoeffRecord<'_>> = self.coeffs.iter().map(|(&(i, j), c)| CoeffRecord(i, j, c)).collect();
        let mut st = s.serialize_struct("BivariateSeries", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("coefficients", &records)?;
        st.end()
    }
}
