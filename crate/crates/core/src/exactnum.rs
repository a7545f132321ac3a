//! Exact arithmetic in the field ℚ(√2) and over quaternions with ℚ(√2)
//! coordinates.
//!
//! Every vertex and group element used by the crate has coordinates in
//! `{0, ±1/2, ±1, ±1/√2}`, so equality tests here are exact and closure
//! computations never need a tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero quaternion has no inverse")]
    ZeroQuaternion,
    #[error("malformed exact value {0:?}")]
    Parse(String),
}

/// `a + b·√2` with rational `a`, `b`.
///
/// `BigRational` keeps both parts in lowest terms with a positive
/// denominator, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QSqrt2 {
    a: BigRational,
    b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QSqrt2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt2 { a, b }
    }

    /// `(an/ad) + (bn/bd)·√2`. Panics on a zero denominator.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        QSqrt2 {
            a: rat(an, ad),
            b: rat(bn, bd),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt2::from_ratios(n, 1, 0, 1)
    }

    pub fn zero() -> Self {
        QSqrt2::from_int(0)
    }

    pub fn one() -> Self {
        QSqrt2::from_int(1)
    }

    pub fn half() -> Self {
        QSqrt2::from_ratios(1, 2, 0, 1)
    }

    pub fn sqrt2() -> Self {
        QSqrt2::from_ratios(0, 1, 1, 1)
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        QSqrt2::from_ratios(0, 1, 1, 2)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√2`.
    pub fn galois(&self) -> Self {
        QSqrt2 {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a² − 2b²`, zero only for zero.
    pub fn field_norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * rat(2, 1)
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        let n = self.field_norm();
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let g = self.galois();
        Ok(QSqrt2 {
            a: &g.a / &n,
            b: &g.b / &n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QSqrt2 {
            a: &self.a * r,
            b: &self.b * r,
        }
    }

    /// Sign of the real number `a + b√2`: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // opposite signs: compare a² with 2b²
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * rat(2, 1);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * std::f64::consts::SQRT_2
    }

    /// Exact square root when it lies in ℚ(√2) and the input is a
    /// non-negative rational of the form `s²` or `2s²`.
    pub fn sqrt_rational(&self) -> Option<Self> {
        if !self.is_rational() || self.a.is_negative() {
            return None;
        }
        if let Some(s) = rational_sqrt(&self.a) {
            return Some(QSqrt2 {
                a: s,
                b: BigRational::zero(),
            });
        }
        // a = 2·s²  =>  √a = s·√2
        let half = &self.a / rat(2, 1);
        rational_sqrt(&half).map(|s| QSqrt2 {
            a: BigRational::zero(),
            b: s,
        })
    }

    /// Canonical serialization `(a/b) + (c/d)√2`, parsed back by `FromStr`.
    pub fn to_exact_string(&self) -> String {
        format!(
            "({}/{}) + ({}/{})√2",
            self.a.numer(),
            self.a.denom(),
            self.b.numer(),
            self.b.denom()
        )
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order on the real line.
impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl Add for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        QSqrt2 {
            a: ac + &bd + bd,
            b: ad + bc,
        }
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: &QSqrt2) -> QSqrt2 {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -&self
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})√2", self.b),
            (false, false) => write!(f, "{} + ({})√2", self.a, self.b),
        }
    }
}

fn parse_ratio(s: &str) -> Option<BigRational> {
    let (n, d) = s.split_once('/')?;
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl FromStr for QSqrt2 {
    type Err = ExactError;

    /// Parses the `(a/b) + (c/d)√2` form written by [`QSqrt2::to_exact_string`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ExactError::Parse(s.chars().take(64).collect());
        let t = s.trim();
        let rest = t.strip_prefix('(').ok_or_else(err)?;
        let (first, rest) = rest.split_once(')').ok_or_else(err)?;
        let rest = rest.trim_start().strip_prefix('+').ok_or_else(err)?;
        let rest = rest.trim_start().strip_prefix('(').ok_or_else(err)?;
        let (second, rest) = rest.split_once(')').ok_or_else(err)?;
        if rest.trim() != "√2" {
            return Err(err());
        }
        Ok(QSqrt2 {
            a: parse_ratio(first).ok_or_else(err)?,
            b: parse_ratio(second).ok_or_else(err)?,
        })
    }
}

/// Quaternion `x·i + y·j + z·k + w·1` with exact coordinates.
///
/// The derived order is lexicographic on `(x, y, z, w)` using the numeric
/// order of each coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct QuatEx {
    pub x: QSqrt2,
    pub y: QSqrt2,
    pub z: QSqrt2,
    pub w: QSqrt2,
}

impl QuatEx {
    pub fn new(x: QSqrt2, y: QSqrt2, z: QSqrt2, w: QSqrt2) -> Self {
        QuatEx { x, y, z, w }
    }

    /// Quaternion with rational coordinates `nᵢ / den`, ordered `(x, y, z, w)`.
    pub fn from_rationals(nums: [i64; 4], den: i64) -> Self {
        let c = |n| QSqrt2::from_ratios(n, den, 0, 1);
        QuatEx::new(c(nums[0]), c(nums[1]), c(nums[2]), c(nums[3]))
    }

    /// Quaternion with coordinates `nᵢ/√2`.
    pub fn over_sqrt2(nums: [i64; 4]) -> Self {
        let c = |n| QSqrt2::from_ratios(0, 1, n, 2);
        QuatEx::new(c(nums[0]), c(nums[1]), c(nums[2]), c(nums[3]))
    }

    pub fn zero() -> Self {
        QuatEx::from_rationals([0, 0, 0, 0], 1)
    }

    pub fn one() -> Self {
        QuatEx::from_rationals([0, 0, 0, 1], 1)
    }

    pub fn i() -> Self {
        QuatEx::from_rationals([1, 0, 0, 0], 1)
    }

    pub fn j() -> Self {
        QuatEx::from_rationals([0, 1, 0, 0], 1)
    }

    pub fn k() -> Self {
        QuatEx::from_rationals([0, 0, 1, 0], 1)
    }

    /// `½(1 + i + j + k)`.
    pub fn omega() -> Self {
        QuatEx::from_rationals([1, 1, 1, 1], 2)
    }

    pub fn coords(&self) -> [&QSqrt2; 4] {
        [&self.x, &self.y, &self.z, &self.w]
    }

    pub fn re(&self) -> &QSqrt2 {
        &self.w
    }

    pub fn im(&self) -> QuatEx {
        QuatEx::new(
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
            QSqrt2::zero(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    pub fn conj(&self) -> QuatEx {
        QuatEx::new(-&self.x, -&self.y, -&self.z, self.w.clone())
    }

    pub fn norm2(&self) -> QSqrt2 {
        self.dot(self)
    }

    pub fn is_unit(&self) -> bool {
        self.norm2().is_one()
    }

    /// Euclidean inner product, equal to `re(p·q̄)`.
    pub fn dot(&self, other: &QuatEx) -> QSqrt2 {
        &(&(&self.x * &other.x) + &(&self.y * &other.y))
            + &(&(&self.z * &other.z) + &(&self.w * &other.w))
    }

    pub fn scale(&self, s: &QSqrt2) -> QuatEx {
        QuatEx::new(&self.x * s, &self.y * s, &self.z * s, &self.w * s)
    }

    pub fn inv(&self) -> Result<QuatEx, ExactError> {
        let n = self.norm2();
        if n.is_zero() {
            return Err(ExactError::ZeroQuaternion);
        }
        if n.is_one() {
            return Ok(self.conj());
        }
        Ok(self.conj().scale(&n.recip()?))
    }

    /// Sign-canonical test: the first nonzero coordinate in the order
    /// `(w, x, y, z)` is positive. Zero counts as canonical.
    pub fn is_sign_canonical(&self) -> bool {
        [&self.w, &self.x, &self.y, &self.z]
            .into_iter()
            .map(QSqrt2::signum)
            .find(|&s| s != 0)
            .is_none_or(|s| s > 0)
    }

    /// `(x, y, z, w)` as floats.
    pub fn to_float(&self) -> [f64; 4] {
        [
            self.x.to_f64(),
            self.y.to_f64(),
            self.z.to_f64(),
            self.w.to_f64(),
        ]
    }

    pub fn to_exact_strings(&self) -> [String; 4] {
        [
            self.x.to_exact_string(),
            self.y.to_exact_string(),
            self.z.to_exact_string(),
            self.w.to_exact_string(),
        ]
    }

    pub fn from_exact_strings<S: AsRef<str>>(parts: &[S]) -> Result<QuatEx, ExactError> {
        if parts.len() != 4 {
            return Err(ExactError::Parse(format!(
                "expected 4 coordinates, got {}",
                parts.len()
            )));
        }
        Ok(QuatEx::new(
            parts[0].as_ref().parse()?,
            parts[1].as_ref().parse()?,
            parts[2].as_ref().parse()?,
            parts[3].as_ref().parse()?,
        ))
    }
}

impl Add for &QuatEx {
    type Output = QuatEx;
    fn add(self, o: &QuatEx) -> QuatEx {
        QuatEx::new(
            &self.x + &o.x,
            &self.y + &o.y,
            &self.z + &o.z,
            &self.w + &o.w,
        )
    }
}

impl Sub for &QuatEx {
    type Output = QuatEx;
    fn sub(self, o: &QuatEx) -> QuatEx {
        QuatEx::new(
            &self.x - &o.x,
            &self.y - &o.y,
            &self.z - &o.z,
            &self.w - &o.w,
        )
    }
}

impl Neg for &QuatEx {
    type Output = QuatEx;
    fn neg(self) -> QuatEx {
        QuatEx::new(-&self.x, -&self.y, -&self.z, -&self.w)
    }
}

impl Neg for QuatEx {
    type Output = QuatEx;
    fn neg(self) -> QuatEx {
        -&self
    }
}

/// Hamilton product with `ij = k`, `jk = i`, `ki = j`.
impl Mul for &QuatEx {
    type Output = QuatEx;
    fn mul(self, q: &QuatEx) -> QuatEx {
        let p = self;
        let w = &(&p.w * &q.w) - &(&(&(&p.x * &q.x) + &(&p.y * &q.y)) + &(&p.z * &q.z));
        let x = &(&(&p.w * &q.x) + &(&p.x * &q.w)) + &(&(&p.y * &q.z) - &(&p.z * &q.y));
        let y = &(&(&p.w * &q.y) + &(&p.y * &q.w)) + &(&(&p.z * &q.x) - &(&p.x * &q.z));
        let z = &(&(&p.w * &q.z) + &(&p.z * &q.w)) + &(&(&p.x * &q.y) - &(&p.y * &q.x));
        QuatEx::new(x, y, z, w)
    }
}

impl Mul for QuatEx {
    type Output = QuatEx;
    fn mul(self, q: QuatEx) -> QuatEx {
        &self * &q
    }
}

impl fmt::Display for QuatEx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, unit) in [
            (&self.w, ""),
            (&self.x, "i"),
            (&self.y, "j"),
            (&self.z, "k"),
        ] {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (c.is_one(), unit.is_empty()) {
                (true, false) => f.write_str(unit)?,
                _ if unit.is_empty() => write!(f, "{c}")?,
                _ => write!(f, "({c}){unit}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
