//! Exact scalars: rationals and rational functions in one parameter `q`.
//!
//! Every scalar is kept in canonical form (reduced fraction, monic
//! denominator, `q`-free values demoted to [`Scalar::Rat`]), so equality of
//! scalars is structural equality.

mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use parse::parse_scalar;
pub use poly::Poly;

/// The ground field a session works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Field {
    #[default]
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Q(q)")]
    RationalFunction,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::RationalFunction => f.write_str("Q(q)"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(Field::Rational),
            "Q(q)" => Ok(Field::RationalFunction),
            other => Err(Error::InvalidInput(format!("unknown scalar field `{other}`"))),
        }
    }
}

impl Field {
    /// Rejects scalars outside the field (a `q`-dependent value in `Q`).
    pub fn check(&self, s: &Scalar) -> Result<()> {
        match (self, s) {
            (Field::Rational, Scalar::Func(_)) => Err(Error::FieldMismatch {
                field: *self,
                value: s.to_string(),
            }),
            _ => Ok(()),
        }
    }

    /// Parses `text` and checks membership.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let s = parse_scalar(text)?;
        self.check(&s)?;
        Ok(s)
    }
}

/// A quotient of coprime polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }
}

/// An exact element of `Q` or `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Func(RationalFunction),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

/// Arithmetic operation selector for [`scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field-checked arithmetic: both operands must lie in `field`.
pub fn scalar_arith(field: Field, a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    field.check(a)?;
    field.check(b)?;
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d`; panics on `d = 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Scalar::from_poly(Poly::monomial(BigRational::one(), 1))
    }

    pub fn from_poly(p: Poly) -> Self {
        if p.is_constant() {
            Scalar::Rat(p.constant_term())
        } else {
            Scalar::Func(RationalFunction {
                num: p,
                den: Poly::one(),
            })
        }
    }

    /// Builds `num/den` in canonical form.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lead = den.leading().expect("nonzero").clone();
        let (num, den) = if lead.is_one() {
            (num, den)
        } else {
            let inv = lead.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        if den.is_one() {
            Ok(Scalar::from_poly(num))
        } else {
            Ok(Scalar::Func(RationalFunction { num, den }))
        }
    }

    fn parts(&self) -> (Poly, Poly) {
        match self {
            Scalar::Rat(r) => (Poly::constant(r.clone()), Poly::one()),
            Scalar::Func(f) => (f.num.clone(), f.den.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Func(_) => None,
        }
    }

    /// The smallest field containing this scalar.
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Func(_) => Field::RationalFunction,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Func(f) => Scalar::from_fraction(f.den.clone(), f.num.clone()),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, exp: i32) -> Result<Scalar> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut out = Scalar::one();
        for _ in 0..exp.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative_leading(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Func(f) => f.num.leading().is_some_and(|c| c.is_negative()),
        }
    }

    pub fn parse(text: &str) -> Result<Scalar> {
        parse_scalar(text)
    }

    fn add_impl(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Func(a), Scalar::Func(b)) if a.den.is_one() && b.den.is_one() => {
                Scalar::from_poly(a.num.add(&b.num))
            }
            (Scalar::Func(a), Scalar::Rat(b)) | (Scalar::Rat(b), Scalar::Func(a)) if a.den.is_one() => {
                Scalar::from_poly(a.num.add(&Poly::constant(b.clone())))
            }
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = other.parts();
                let num = an.mul(&bd).add(&bn.mul(&ad));
                Scalar::from_fraction(num, ad.mul(&bd)).expect("nonzero denominators")
            }
        }
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Func(a), Scalar::Rat(b)) | (Scalar::Rat(b), Scalar::Func(a)) => {
                if b.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Func(RationalFunction {
                        num: a.num.scale(b),
                        den: a.den.clone(),
                    })
                }
            }
            (Scalar::Func(a), Scalar::Func(b)) if a.den.is_one() && b.den.is_one() => {
                Scalar::from_poly(a.num.mul(&b.num))
            }
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = other.parts();
                Scalar::from_fraction(an.mul(&bn), ad.mul(&bd)).expect("nonzero denominators")
            }
        }
    }

    fn neg_impl(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Func(f) => Scalar::Func(RationalFunction {
                num: f.num.neg(),
                den: f.den.clone(),
            }),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$impl(rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$impl(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$impl(rhs)
            }
        }
    };
}

impl Scalar {
    fn sub_impl(&self, other: &Scalar) -> Scalar {
        self.add_impl(&other.neg_impl())
    }
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_impl()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_impl()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs);
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&poly::fmt_rational(r)),
            Scalar::Func(rf) => {
                let num = rf.num.to_string();
                if rf.den.is_one() {
                    return f.write_str(&num);
                }
                let num = if rf.num.term_count() > 1 {
                    format!("({num})")
                } else {
                    num
                };
                let den = rf.den.to_string();
                let den = if rf.den.term_count() > 1 || rf.den.leading().is_some_and(|c| !c.is_one()) {
                    format!("({den})")
                } else {
                    den
                };
                write!(f, "{num}/{den}")
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_scalar(&text).map_err(serde::de::Error::custom)
    }
}
