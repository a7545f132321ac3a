//! Symbolic cyclic quaternion groups and `(left, right)` pairs over
//! arbitrary factor types.
//!
//! The lift of `Cn` is generated by `cos(π/n) + sin(π/n)·q`. For most `n`
//! that number is outside ℚ(√2), so its powers are kept as exponents
//! `k mod 2n` around a fixed axis. Products stay inside one cyclic group,
//! which keeps all group bookkeeping exact.

use std::fmt::{self, Debug};
use std::hash::Hash;

use super::group::GroupElement;
use super::SymmetryError;
use crate::exactnum::{QSqrt2, QuatEx};
use crate::projection::q4;

/// One side of a `±[A×B]` pair.
pub trait Factor: Clone + Eq + Ord + Hash + Debug + Send + Sync {
    fn mul(&self, other: &Self) -> Self;
    /// Inverse of a unit.
    fn conj(&self) -> Self;
    fn neg(&self) -> Self;
    /// Exactly one of `f`, `−f` is sign-canonical.
    fn is_sign_canonical(&self) -> bool;
    fn is_one(&self) -> bool;
    fn to_float(&self) -> [f64; 4];
}

impl Factor for QuatEx {
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn conj(&self) -> Self {
        QuatEx::conj(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_sign_canonical(&self) -> bool {
        QuatEx::is_sign_canonical(self)
    }
    fn is_one(&self) -> bool {
        *self == QuatEx::one()
    }
    fn to_float(&self) -> [f64; 4] {
        QuatEx::to_float(self)
    }
}

/// `cos(kπ/n) + sin(kπ/n)·q̂` where `q̂` is the unit vector along the exact
/// imaginary direction `dir`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicUnit {
    dir: QuatEx,
    n: u32,
    k: u32,
}

impl CyclicUnit {
    /// The generator (`k = 1`). `dir` must be a nonzero imaginary
    /// quaternion with rational norm².
    pub fn generator(dir: QuatEx, n: u32) -> Result<Self, SymmetryError> {
        if n == 0 || !dir.re().is_zero() || dir.is_zero() || !dir.norm2().is_rational() {
            return Err(SymmetryError::BadAxis);
        }
        Ok(CyclicUnit {
            dir,
            n,
            k: 1 % (2 * n),
        })
    }

    pub fn power(&self, k: i64) -> Self {
        let m = 2 * self.n as i64;
        CyclicUnit {
            dir: self.dir.clone(),
            n: self.n,
            k: (k.rem_euclid(m)) as u32,
        }
    }

    /// All `2n` elements of the cyclic group.
    pub fn group(&self) -> Vec<CyclicUnit> {
        (0..2 * self.n as i64).map(|k| self.power(k)).collect()
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    pub fn half_turn_steps(&self) -> u32 {
        self.n
    }

    pub fn axis(&self) -> &QuatEx {
        &self.dir
    }

    /// Angle `kπ/n` in radians.
    pub fn angle(&self) -> f64 {
        std::f64::consts::PI * self.k as f64 / self.n as f64
    }

    /// The exact quaternion when both `cos(kπ/n)` and `sin(kπ/n)·q̂` have
    /// coordinates in ℚ(√2).
    pub fn exact(&self) -> Option<QuatEx> {
        // reduce kπ/n to pπ/q in lowest terms, p in [0, 2q)
        let g = gcd(self.k, self.n);
        let (p, q) = (self.k / g, self.n / g);
        let (cos2, cos_sign, sin2, sin_sign) = trig_squares(p, q)?;
        let cos = signed_sqrt(&cos2, cos_sign)?;
        if cos.is_zero() && sin2.is_zero() {
            return None;
        }
        // sin·dir/|dir| = ±√(sin²/|dir|²)·dir
        let ratio = sin2.checked_div(&self.dir.norm2()).ok()?;
        let factor = signed_sqrt(&ratio, sin_sign)?;
        let mut out = self.dir.scale(&factor);
        out.w = cos;
        Some(out)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

fn signed_sqrt(sq: &QSqrt2, sign: i32) -> Option<QSqrt2> {
    let r = sq.sqrt_rational()?;
    Some(if sign < 0 { -r } else { r })
}

/// `(cos², sign cos, sin², sign sin)` of `pπ/q` for the denominators whose
/// squares are rational; `None` otherwise.
fn trig_squares(p: u32, q: u32) -> Option<(QSqrt2, i32, QSqrt2, i32)> {
    let r = |n: i64, d: i64| QSqrt2::from_ratios(n, d, 0, 1);
    let (c2, s2) = match q {
        1 => (r(1, 1), r(0, 1)),
        2 => (r(0, 1), r(1, 1)),
        3 => (r(1, 4), r(3, 4)),
        4 => (r(1, 2), r(1, 2)),
        6 => (r(3, 4), r(1, 4)),
        _ => return None,
    };
    let theta = std::f64::consts::PI * p as f64 / q as f64;
    let sgn = |v: f64| {
        if v.abs() < 1e-9 {
            0
        } else if v > 0.0 {
            1
        } else {
            -1
        }
    };
    Some((c2, sgn(theta.cos()), s2, sgn(theta.sin())))
}

impl Factor for CyclicUnit {
    /// Panics when multiplying elements of different cyclic groups.
    fn mul(&self, other: &Self) -> Self {
        assert!(
            self.dir == other.dir && self.n == other.n,
            "cyclic units from different groups"
        );
        self.power(self.k as i64 + other.k as i64)
    }
    fn conj(&self) -> Self {
        self.power(-(self.k as i64))
    }
    fn neg(&self) -> Self {
        self.power(self.k as i64 + self.n as i64)
    }
    fn is_sign_canonical(&self) -> bool {
        self.k < self.n
    }
    fn is_one(&self) -> bool {
        self.k == 0
    }
    fn to_float(&self) -> [f64; 4] {
        let d = self.dir.to_float();
        let axis = q4::normalize(&d).unwrap_or([0.0; 4]);
        q4::rail(&axis, self.angle())
    }
}

impl Debug for CyclicUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c[{}]^{}/{}", self.dir, self.k, 2 * self.n)
    }
}

impl fmt::Display for CyclicUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "exp({}π/{} · ({})^)", self.k, self.n, self.dir),
        }
    }
}

/// `x ↦ l·x·r`, sign-canonical in the pair `(l, r) ~ (−l, −r)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PairElement<A: Factor, B: Factor> {
    l: A,
    r: B,
}

impl<A: Factor, B: Factor> PairElement<A, B> {
    pub fn new(l: A, r: B) -> Self {
        if l.is_sign_canonical() {
            PairElement { l, r }
        } else {
            PairElement {
                l: l.neg(),
                r: r.neg(),
            }
        }
    }

    pub fn l(&self) -> &A {
        &self.l
    }

    pub fn r(&self) -> &B {
        &self.r
    }

    pub fn apply_float(&self, x: &[f64; 4]) -> [f64; 4] {
        q4::mul(&q4::mul(&self.l.to_float(), x), &self.r.to_float())
    }
}

impl<A: Factor, B: Factor> GroupElement for PairElement<A, B> {
    fn compose(&self, h: &Self) -> Self {
        PairElement::new(self.l.mul(&h.l), h.r.mul(&self.r))
    }
    fn inverse(&self) -> Self {
        PairElement::new(self.l.conj(), self.r.conj())
    }
    fn is_identity(&self) -> bool {
        self.l.is_one() && self.r.is_one()
    }
}
