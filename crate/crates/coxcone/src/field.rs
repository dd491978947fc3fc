//! Exact scalar arithmetic over the rationals and the real quadratic
//! extension by √5.
//!
//! Every coordinate, matrix entry, and inequality in this crate is a
//! [`Scalar`]. Comparisons are decided by exact sign computation; there is
//! no floating point anywhere in a decision path ([`Scalar::to_f64`] exists
//! for display only).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An element of ℚ or ℚ(√5), kept in normal form.
///
/// Invariants: rationals are in lowest terms with a positive denominator
/// (maintained by `BigRational`), and a quadratic element `a + b√5` always
/// has `b ≠ 0` (otherwise it collapses to `Rational`). Normal form makes
/// derived equality and hashing semantically correct.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// `a + b√5` with `b ≠ 0`.
    Quad(BigRational, BigRational),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as a rational scalar. `q` must be nonzero.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `a + b√5`, normalizing `b = 0` down to a rational.
    pub fn quad(a: BigRational, b: BigRational) -> Self {
        if b.is_zero() {
            Scalar::Rational(a)
        } else {
            Scalar::Quad(a, b)
        }
    }

    /// The golden ratio φ = (1 + √5)/2.
    pub fn golden() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Scalar::Quad(half.clone(), half)
    }

    fn parts(&self) -> (BigRational, BigRational) {
        match self {
            Scalar::Rational(a) => (a.clone(), BigRational::zero()),
            Scalar::Quad(a, b) => (a.clone(), b.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(a) if a.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    /// True for a rational scalar with denominator 1.
    pub fn is_integer(&self) -> bool {
        matches!(self, Scalar::Rational(a) if a.is_integer())
    }

    /// Exact sign: −1, 0, or +1.
    ///
    /// For `a + b√5` the sign follows from the signs of `a` and `b`, with the
    /// mixed-sign cases settled by comparing `a²` against `5b²`. Equality of
    /// `a²` and `5b²` is impossible for `b ≠ 0` since √5 is irrational.
    pub fn signum(&self) -> i8 {
        match self {
            Scalar::Rational(a) => sign_of(a),
            Scalar::Quad(a, b) => {
                let sa = sign_of(a);
                let sb = sign_of(b);
                debug_assert!(sb != 0);
                if sa == sb || sa == 0 {
                    sb
                } else {
                    // a and b have strictly opposite signs.
                    let a2 = a * a;
                    let b2_5 = b * b * BigRational::from_integer(BigInt::from(5));
                    match a2.cmp(&b2_5) {
                        Ordering::Greater => sa,
                        Ordering::Less => sb,
                        Ordering::Equal => unreachable!("a² = 5b² with b ≠ 0"),
                    }
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Errors on zero.
    ///
    /// For `a + b√5` the inverse is `(a − b√5)/(a² − 5b²)`; the denominator
    /// is nonzero whenever the element is.
    pub fn inverse(&self) -> Result<Scalar, Error> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Quad(a, b) => {
                let norm = a * a - b * b * BigRational::from_integer(BigInt::from(5));
                debug_assert!(!norm.is_zero());
                Ok(Scalar::quad(a / &norm, -(b / &norm)))
            }
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        Ok(self * &rhs.inverse()?)
    }

    /// Floating-point approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        let rat = |r: &BigRational| -> f64 {
            let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            n / d
        };
        match self {
            Scalar::Rational(a) => rat(a),
            Scalar::Quad(a, b) => rat(a) + rat(b) * 5f64.sqrt(),
        }
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// --- arithmetic ---

impl<'a, 'b> Add<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'b Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            _ => {
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                Scalar::quad(a + c, b + d)
            }
        }
    }
}

impl<'a, 'b> Sub<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'b Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x - y),
            _ => {
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                Scalar::quad(a - c, b - d)
            }
        }
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            _ => {
                // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
                let (a, b) = self.parts();
                let (c, d) = rhs.parts();
                let five = BigRational::from_integer(BigInt::from(5));
                Scalar::quad(&a * &c + &five * &b * &d, &a * &d + &b * &c)
            }
        }
    }
}

impl<'a, 'b> Div<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'b Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Quad(a, b) => Scalar::Quad(-a, -b),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

// --- text form ---
//
// Rationals print as "p/q" with "/q" omitted when q = 1. Quadratic elements
// print as "(p+q r5)/s" over the least common denominator s, e.g. the golden
// ratio is "(1+1r5)/2". Parsing accepts optional whitespace, negative
// numerators, and an omitted "/s".

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => {
                if a.is_integer() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            Scalar::Quad(a, b) => {
                let s = a.denom() * b.denom() / a.denom().gcd(b.denom());
                let p = a.numer() * (&s / a.denom());
                let q = b.numer() * (&s / b.denom());
                if q.is_negative() {
                    write!(f, "({p}-{}r5)/{s}", -&q)
                } else {
                    write!(f, "({p}+{q}r5)/{s}")
                }
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::ParseScalar(input.to_string());
        if let Some(rest) = compact.strip_prefix('(') {
            let (inner, denom) = match rest.split_once(')') {
                Some((inner, tail)) => {
                    let denom = match tail.strip_prefix('/') {
                        Some(s) => s.parse::<BigInt>().map_err(|_| bad())?,
                        None if tail.is_empty() => BigInt::one(),
                        None => return Err(bad()),
                    };
                    (inner, denom)
                }
                None => return Err(bad()),
            };
            if denom.is_zero() {
                return Err(bad());
            }
            let body = inner.strip_suffix("r5").ok_or_else(bad)?;
            // Split "p+q" / "p-q" at the sign separating the two numerators.
            let split = body
                .char_indices()
                .skip(1)
                .find(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with(['+', '-']))
                .map(|(i, _)| i)
                .ok_or_else(bad)?;
            let p = body[..split].parse::<BigInt>().map_err(|_| bad())?;
            let q = body[split..].parse::<BigInt>().map_err(|_| bad())?;
            Ok(Scalar::quad(
                BigRational::new(p, denom.clone()),
                BigRational::new(q, denom),
            ))
        } else {
            let (p, q) = match compact.split_once('/') {
                Some((p, q)) => (
                    p.parse::<BigInt>().map_err(|_| bad())?,
                    q.parse::<BigInt>().map_err(|_| bad())?,
                ),
                None => (compact.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
            };
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::Rational(BigRational::new(p, q)))
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Sum of a sequence of scalars.
pub fn total<'a>(iter: impl IntoIterator<Item = &'a Scalar>) -> Scalar {
    iter.into_iter().fold(Scalar::zero(), |acc, x| &acc + x)
}
