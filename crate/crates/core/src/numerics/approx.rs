use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::error::{Error, Result};

/// Unit roundoff of binary64.
pub(crate) const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

/// `a + b` rounded to nearest, with the exact rounding error (TwoSum).
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Sum of two nonnegative bounds, rounded upward.
pub(crate) fn add_up(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if e > 0.0 {
        s.next_up()
    } else {
        s
    }
}

/// Product of two nonnegative bounds, rounded upward.
pub(crate) fn mul_up(a: f64, b: f64) -> f64 {
    let p = a * b;
    if a.mul_add(b, -p) > 0.0 {
        p.next_up()
    } else {
        p
    }
}

/// A real number `value` together with a rigorous bound `err ≥ 0` such that
/// the true quantity lies in `[value − err, value + err]`.
///
/// Arithmetic accounts for the rounding of the midpoint exactly (TwoSum and
/// FMA residuals) and rounds every error bound upward, so an exact input
/// stays exact under exact operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxValue {
    value: f64,
    err: f64,
}

impl ApproxValue {
    pub const ZERO: ApproxValue = ApproxValue { value: 0.0, err: 0.0 };
    pub const ONE: ApproxValue = ApproxValue { value: 1.0, err: 0.0 };

    /// Panics if `err` is negative or NaN.
    pub fn new(value: f64, err: f64) -> ApproxValue {
        assert!(err >= 0.0, "error bound must be nonnegative, got {err}");
        ApproxValue { value, err }
    }

    pub fn exact(value: f64) -> ApproxValue {
        ApproxValue { value, err: 0.0 }
    }

    /// Enclosure of a rational number.
    pub fn from_rational(c: &BigRational) -> ApproxValue {
        let value = c.to_f64().unwrap_or(f64::NAN);
        if BigRational::from_float(value).as_ref() == Some(c) {
            ApproxValue::exact(value)
        } else {
            // correctly rounded conversion is within half an ulp; allow one
            ApproxValue::new(value, mul_up(value.abs(), 2.0 * UNIT_ROUNDOFF))
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn err(&self) -> f64 {
        self.err
    }

    pub fn is_exact(&self) -> bool {
        self.err == 0.0
    }

    /// Whether `x` lies inside the enclosure.
    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.err
    }

    /// Upper bound on `|x|` for every `x` in the enclosure.
    pub fn magnitude(&self) -> f64 {
        add_up(self.value.abs(), self.err)
    }

    /// Widens the bound by `extra ≥ 0`.
    pub fn widened(self, extra: f64) -> ApproxValue {
        ApproxValue::new(self.value, add_up(self.err, extra))
    }

    pub fn scale(self, c: &BigRational) -> ApproxValue {
        self * ApproxValue::from_rational(c)
    }
}

impl Add for ApproxValue {
    type Output = ApproxValue;
    fn add(self, o: ApproxValue) -> ApproxValue {
        let (s, r) = two_sum(self.value, o.value);
        ApproxValue::new(s, add_up(add_up(self.err, o.err), r.abs()))
    }
}

impl Sub for ApproxValue {
    type Output = ApproxValue;
    fn sub(self, o: ApproxValue) -> ApproxValue {
        self + (-o)
    }
}

impl Neg for ApproxValue {
    type Output = ApproxValue;
    fn neg(self) -> ApproxValue {
        ApproxValue { value: -self.value, err: self.err }
    }
}

impl Mul for ApproxValue {
    type Output = ApproxValue;
    fn mul(self, o: ApproxValue) -> ApproxValue {
        let p = self.value * o.value;
        let r = self.value.mul_add(o.value, -p);
        let mut err = mul_up(self.value.abs(), o.err);
        err = add_up(err, mul_up(o.value.abs(), self.err));
        err = add_up(err, mul_up(self.err, o.err));
        err = add_up(err, r.abs());
        ApproxValue::new(p, err)
    }
}

impl std::iter::Sum for ApproxValue {
    fn sum<I: Iterator<Item = ApproxValue>>(iter: I) -> ApproxValue {
        iter.fold(ApproxValue::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for ApproxValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", format_sci(self.value), format_sci(self.err))
    }
}

/// 17 significant digits in scientific notation, valid as a JSON number.
pub(crate) fn format_sci(x: f64) -> String {
    format!("{x:.16e}")
}

/// Decimal JSON token for `x`; `null` when not finite.
pub(crate) fn json_number(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { format_sci(x) } else { "null".to_string() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

impl Serialize for ApproxValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ApproxValue", 2)?;
        st.serialize_field("value", &json_number(self.value))?;
        st.serialize_field("err", &json_number(self.err))?;
        st.end()
    }
}

/// Target absolute accuracy for a numeric evaluation.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Precision(f64);

impl Precision {
    pub fn new(target_eps: f64) -> Result<Precision> {
        if target_eps.is_finite() && target_eps > 0.0 {
            Ok(Precision(target_eps))
        } else {
            Err(Error::InvalidPrecision(target_eps))
        }
    }

    pub fn eps(self) -> f64 {
        self.0
    }

    /// Same target divided by `parts`, for splitting a budget.
    pub fn split(self, parts: f64) -> Precision {
        assert!(parts >= 1.0);
        Precision(self.0 / parts)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(1e-6)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordalg::qf;
    use num_traits::Signed;

    #[test]
    fn exact_stays_exact() {
        let a = ApproxValue::exact(0.5) + ApproxValue::exact(0.25);
        assert!(a.is_exact());
        assert_eq!(a.value(), 0.75);
        let b = ApproxValue::exact(3.0) * ApproxValue::exact(0.5);
        assert!(b.is_exact());
        let x = ApproxValue::new(1.25, 1e-9);
        assert_eq!(ApproxValue::ONE * x, x);
        assert_eq!(ApproxValue::ZERO + x, x);
    }

    #[test]
    fn rounding_is_accounted() {
        let t = ApproxValue::exact(0.1) + ApproxValue::exact(0.2);
        assert!(t.err() > 0.0);
        let exact = BigRational::from_float(0.1).unwrap() + BigRational::from_float(0.2).unwrap();
        let gap = (BigRational::from_float(t.value()).unwrap() - exact).abs();
        assert!(gap <= BigRational::from_float(t.err()).unwrap());
        let p = ApproxValue::exact(0.1) * ApproxValue::exact(0.1);
        assert!(p.err() > 0.0 && p.err() < 1e-17);
    }

    #[test]
    fn rational_enclosure() {
        let third = ApproxValue::from_rational(&qf(1, 3));
        assert!(third.err() > 0.0 && third.err() < 1e-16);
        assert!(ApproxValue::from_rational(&qf(5, 2)).is_exact());
        assert!(ApproxValue::from_rational(&qf(-7, 1)).is_exact());
    }

    #[test]
    fn json_has_17_digits() {
        let v = ApproxValue::new(std::f64::consts::PI, 1e-10);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"value":3.1415926535897931e0,"err":1.0000000000000000e-10}"#);
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["value"].as_f64().unwrap(), std::f64::consts::PI);
    }

    #[test]
    fn precision_validation() {
        assert!(Precision::new(1e-6).is_ok());
        assert!(matches!(Precision::new(0.0), Err(Error::InvalidPrecision(_))));
        assert!(Precision::new(-1.0).is_err());
        assert!(Precision::new(f64::NAN).is_err());
    }
}
