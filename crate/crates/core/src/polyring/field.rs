//! Coefficient fields: the rationals and prime fields `ZZ/p`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Tag for the coefficient field of tensors, rings and polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefField {
    Rationals,
    /// `ZZ/p` for a prime `2 <= p < 2^31`.
    Prime(u32),
}

impl CoefField {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::UnsupportedField(format!(
                "ZZ/{p}: modulus must be a prime below 2^31"
            )));
        }
        Ok(CoefField::Prime(p as u32))
    }

    pub fn is_rational(self) -> bool {
        matches!(self, CoefField::Rationals)
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            CoefField::Rationals => Scalar::Rational(BigRational::from_integer(v.into())),
            CoefField::Prime(p) => Scalar::Modular(ModInt::new(v.rem_euclid(p as i64) as u32, p)),
        }
    }

    /// Maps a rational number into the field. Fails over `ZZ/p` when the
    /// denominator is divisible by `p`.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            CoefField::Rationals => Ok(Scalar::Rational(q.clone())),
            CoefField::Prime(p) => {
                let num = reduce_bigint(q.numer(), p);
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::Parse(format!("{q} has no image in ZZ/{p}")));
                }
                let num = ModInt::new(num, p);
                let den = ModInt::new(den, p);
                Ok(Scalar::Modular(num.mul(den.inv())))
            }
        }
    }

    /// Parses an integer or `a/b` literal into the field.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }

    pub fn contains(self, s: &Scalar) -> bool {
        match (self, s) {
            (CoefField::Rationals, Scalar::Rational(_)) => true,
            (CoefField::Prime(p), Scalar::Modular(m)) => m.modulus == p,
            _ => false,
        }
    }
}

impl fmt::Display for CoefField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefField::Rationals => write!(f, "QQ"),
            CoefField::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

impl FromStr for CoefField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "QQ" | "Q" => Ok(CoefField::Rationals),
            "RR" | "CC" => Err(Error::UnsupportedField(format!(
                "{t}: only exact fields QQ and ZZ/p are supported"
            ))),
            _ => {
                let p = t
                    .strip_prefix("ZZ/")
                    .or_else(|| t.strip_prefix("GF("))
                    .map(|r| r.trim_end_matches(')'))
                    .ok_or_else(|| Error::UnsupportedField(t.to_string()))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::UnsupportedField(t.to_string()))?;
                CoefField::prime(p)
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_bigint(v: &BigInt, p: u32) -> u32 {
    let r = v % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u32().expect("residue fits in u32")
}

/// Parses `"-7"`, `"3/4"`, `" 12 "` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational literal: {s:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Renders a rational as `a` or `a/b`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Element of `ZZ/p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u32,
    modulus: u32,
}

impl ModInt {
    pub fn new(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        ModInt { value, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    fn check(self, other: ModInt) {
        assert_eq!(self.modulus, other.modulus, "mixed prime fields");
    }

    pub fn add(self, o: ModInt) -> ModInt {
        self.check(o);
        let s = self.value as u64 + o.value as u64;
        ModInt::new((s % self.modulus as u64) as u32, self.modulus)
    }

    pub fn sub(self, o: ModInt) -> ModInt {
        self.check(o);
        let s = self.value as u64 + self.modulus as u64 - o.value as u64;
        ModInt::new((s % self.modulus as u64) as u32, self.modulus)
    }

    pub fn mul(self, o: ModInt) -> ModInt {
        self.check(o);
        let s = self.value as u64 * o.value as u64;
        ModInt::new((s % self.modulus as u64) as u32, self.modulus)
    }

    pub fn neg(self) -> ModInt {
        if self.value == 0 {
            self
        } else {
            ModInt::new(self.modulus - self.value, self.modulus)
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self) -> ModInt {
        assert!(self.value != 0, "inverse of zero in ZZ/{}", self.modulus);
        let (mut a, mut b) = (self.value as i64, self.modulus as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        ModInt::new(x0.rem_euclid(self.modulus as i64) as u32, self.modulus)
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(self) -> i64 {
        let v = self.value as i64;
        let p = self.modulus as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }
}

/// A field element, tagged with its field.
///
/// Arithmetic between elements of different fields is a programming error
/// and panics; inputs are validated at the API boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular(ModInt),
}

impl Scalar {
    pub fn field(&self) -> CoefField {
        match self {
            Scalar::Rational(_) => CoefField::Rationals,
            Scalar::Modular(m) => CoefField::Prime(m.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular(m) => m.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular(m) => m.value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular(_) => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular(m) => Scalar::Modular(m.inv()),
        })
    }

    /// Sign-aware rendering used by the polynomial printer: returns whether
    /// the value prints with a leading minus, and its absolute value.
    /// Prime-field elements use the symmetric representative.
    pub fn sign_and_abs(&self) -> (bool, String) {
        match self {
            Scalar::Rational(q) => (q.is_negative(), format_rational(&q.abs())),
            Scalar::Modular(m) => {
                let s = m.symmetric();
                (s < 0, s.abs().to_string())
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, abs) = self.sign_and_abs();
        if neg {
            write!(f, "-{abs}")
        } else {
            write!(f, "{abs}")
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $q:expr, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($q(a, b)),
                    (Scalar::Modular(a), Scalar::Modular(b)) => Scalar::Modular(a.$m(*b)),
                    _ => panic!("arithmetic across different coefficient fields"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, add);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, sub);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, mul);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular(m) => Scalar::Modular(m.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fields() {
        assert_eq!("QQ".parse::<CoefField>().unwrap(), CoefField::Rationals);
        assert_eq!(
            "ZZ/32003".parse::<CoefField>().unwrap(),
            CoefField::Prime(32003)
        );
        assert!(matches!(
            "RR".parse::<CoefField>(),
            Err(Error::UnsupportedField(_))
        ));
        assert!("ZZ/32004".parse::<CoefField>().is_err());
        assert!(CoefField::prime(1 << 31).is_err());
    }

    #[test]
    fn modular_arithmetic() {
        let f = CoefField::Prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(-2);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!(&a / &a, f.one());
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(4));
        assert!(f.parse_scalar("1/7").is_err());
        assert_eq!(f.from_i64(6).to_string(), "-1");
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(q.denom(), &BigInt::from(2));
    }
}
