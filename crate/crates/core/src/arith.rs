//! Exact rational arithmetic, extended valuations and log-radius coordinates.
//!
//! Everything downstream is built on three small types:
//!
//! - [`Rat`]: an arbitrary-precision rational in canonical form,
//! - [`ExtValuation`]: a rational or `+inf`, the valuation of a coefficient
//!   (`+inf` encodes a zero coefficient),
//! - [`LogRadius`]: a rational `t` standing for the radius `r = p^t`.
//!
//! Radii are *only* ever handled through their base-`p` logarithm, so every
//! comparison in the crate is an exact rational comparison. No floating
//! point anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form
/// (positive denominator, fully reduced).
///
/// Serializes as `"num/den"`, with `/den` omitted when the denominator is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rat {
        Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Rat {
        Rat(num_traits::pow::pow(self.0.clone(), exp as usize))
    }

    /// Integer part `E(x)`: the unique integer with `E(x) <= x < E(x) + 1`.
    /// Rounds toward negative infinity, also for negative arguments.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn min(self, other: Rat) -> Rat {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rat) -> Rat {
        if self >= other {
            self
        } else {
            other
        }
    }
}

/// Free-function form of [`Rat::floor_int`].
pub fn floor_int(x: &Rat) -> BigInt {
    x.floor_int()
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        let s = s.trim();
        let bad = || Error::ParseRational(s.to_string());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rat::from_int(n))
            }
            Some((num, den)) => {
                let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rat::new(n, d))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

/// A rational valuation or `+inf`. `+inf` is the valuation of the zero
/// coefficient; it absorbs addition and is the maximum of every comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtValuation {
    Finite(Rat),
    Infinite,
}

impl ExtValuation {
    pub fn finite(v: impl Into<Rat>) -> ExtValuation {
        ExtValuation::Finite(v.into())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtValuation::Infinite)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ExtValuation::Finite(v) => Some(v),
            ExtValuation::Infinite => None,
        }
    }

    pub fn min(self, other: ExtValuation) -> ExtValuation {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for ExtValuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtValuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtValuation::*;
        match (self, other) {
            (Infinite, Infinite) => Ordering::Equal,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Finite(_), Infinite) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for ExtValuation {
    type Output = ExtValuation;
    fn add(self, rhs: ExtValuation) -> ExtValuation {
        use ExtValuation::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinite,
        }
    }
}

impl fmt::Display for ExtValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValuation::Finite(v) => write!(f, "{v}"),
            ExtValuation::Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExtValuation {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExtValuation> {
        let s = s.trim();
        if s == "inf" || s == "+inf" {
            Ok(ExtValuation::Infinite)
        } else {
            Ok(ExtValuation::Finite(s.parse()?))
        }
    }
}

impl Serialize for ExtValuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtValuation {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<ExtValuation, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl From<Rat> for ExtValuation {
    fn from(v: Rat) -> ExtValuation {
        ExtValuation::Finite(v)
    }
}

impl From<i64> for ExtValuation {
    fn from(v: i64) -> ExtValuation {
        ExtValuation::Finite(Rat::from_int(v))
    }
}

/// Rational log-radius `t`, standing for the radius `r = p^t`.
///
/// Since the value group of the field is `p^Q`, rational `t` reaches every
/// attainable absolute value, and `t1 < t2` iff `r1 < r2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LogRadius(pub Rat);

impl LogRadius {
    pub fn new(t: impl Into<Rat>) -> LogRadius {
        LogRadius(t.into())
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }
}

impl fmt::Display for LogRadius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for LogRadius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for LogRadius {
    type Err = Error;
    fn from_str(s: &str) -> Result<LogRadius> {
        Ok(LogRadius(s.parse()?))
    }
}

impl From<i64> for LogRadius {
    fn from(t: i64) -> LogRadius {
        LogRadius(Rat::from_int(t))
    }
}

/// A validated prime, the context for every valuation in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if is_prime_u64(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(&self) -> u64 {
        self.0
    }

    pub fn require_same(&self, other: Prime) -> Result<()> {
        if self.0 == other.0 {
            Ok(())
        } else {
            Err(Error::PrimeMismatch(self.0, other.0))
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<'de> Deserialize<'de> for Prime {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Prime, D::Error> {
        let p = u64::deserialize(deserializer)?;
        Prime::new(p).map_err(de::Error::custom)
    }
}

/// The exponent of `p` in `q`: `val_p(q1 q2) = val_p(q1) + val_p(q2)`,
/// and `val_p(0) = +inf`. Always an integer for rational input; the wider
/// [`ExtValuation`] return type matches the coefficient models, whose
/// valuations may be arbitrary rationals.
pub fn val_p(q: &Rat, p: Prime) -> ExtValuation {
    if q.is_zero() {
        return ExtValuation::Infinite;
    }
    let p = BigInt::from(p.get());
    let num = int_val(q.numer(), &p);
    let den = int_val(q.denom(), &p);
    ExtValuation::Finite(Rat::from_int(num - den))
}

/// Multiplicity of the prime `p` inside a nonzero integer.
fn int_val(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0i64;
    loop {
        let (q, r) = n.div_rem(p);
        if r.is_zero() {
            v += 1;
            n = q;
        } else {
            return v;
        }
    }
}

/// Deterministic Miller-Rabin over the u64 range.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Exact integer square root test: `Some(s)` iff `n = s^2` with `s >= 0`.
pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let u: BigUint = n.magnitude().clone();
    let s = u.sqrt();
    if &s * &s == u {
        Some(BigInt::from(s))
    } else {
        None
    }
}

/// Exact integer k-th root test: `Some(s)` iff `n = s^k`.
pub(crate) fn exact_nth_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if k == 0 {
        return None;
    }
    if n.is_negative() && k % 2 == 0 {
        return None;
    }
    let mag = n.magnitude().nth_root(k);
    let mut root = BigInt::from(mag);
    if n.is_negative() {
        root = -root;
    }
    if num_traits::pow::pow(root.clone(), k as usize) == *n {
        Some(root)
    } else {
        None
    }
}

/// Closest-to-zero helpers for tests and grids.
impl Rat {
    pub fn to_f64_lossy(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn val_p_examples() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(val_p(&Rat::zero(), p5), ExtValuation::Infinite);
        assert_eq!(val_p(&rat("50/3"), p5), ExtValuation::from(2));
        assert_eq!(val_p(&rat("-6/25"), p5), ExtValuation::from(-2));
    }

    #[test]
    fn val_p_is_multiplicative() {
        let p3 = Prime::new(3).unwrap();
        let a = rat("18/5");
        let b = rat("-7/27");
        let va = val_p(&a, p3).as_finite().unwrap().clone();
        let vb = val_p(&b, p3).as_finite().unwrap().clone();
        let vab = val_p(&(a * b), p3).as_finite().unwrap().clone();
        assert_eq!(vab, va + vb);
    }

    #[test]
    fn floor_examples() {
        assert_eq!(rat("8/27").floor_int(), BigInt::from(0));
        assert_eq!(rat("-1/2").floor_int(), BigInt::from(-1));
        assert_eq!(rat("64/27").floor_int(), BigInt::from(2));
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(97).is_ok());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(91).is_err()); // 7 * 13
        assert!(Prime::new(0).is_err());
    }

    #[test]
    fn extvaluation_ordering_and_absorption() {
        let inf = ExtValuation::Infinite;
        let two = ExtValuation::from(2);
        assert!(inf > two);
        assert_eq!(inf.clone().min(two.clone()), two);
        assert_eq!(inf.clone() + two.clone(), inf);
        assert_eq!(two.clone() + ExtValuation::from(3), ExtValuation::from(5));
    }

    #[test]
    fn display_round_trip() {
        for s in ["3", "-4/7", "0", "22/7", "-11"] {
            let r = rat(s);
            assert_eq!(r.to_string(), s);
            assert_eq!(rat(&r.to_string()), r);
        }
        assert_eq!("inf".parse::<ExtValuation>().unwrap(), ExtValuation::Infinite);
        assert_eq!(ExtValuation::Infinite.to_string(), "inf");
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn exact_roots() {
        assert_eq!(exact_sqrt(&BigInt::from(49)), Some(BigInt::from(7)));
        assert_eq!(exact_sqrt(&BigInt::from(50)), None);
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
        assert_eq!(exact_nth_root(&BigInt::from(-27), 3), Some(BigInt::from(-3)));
        assert_eq!(exact_nth_root(&BigInt::from(16), 4), Some(BigInt::from(2)));
        assert_eq!(exact_nth_root(&BigInt::from(17), 4), None);
    }
}
