//! Isometries of the 3-sphere written as quaternion pairs, finite groups of
//! them, and the structures they act on.
//!
//! An [`Isometry`] `(l, r, reflect)` acts by `x ↦ l·x·r`, or `x ↦ l·x̄·r`
//! when `reflect` is set. `(l, r)` and `(−l, −r)` act identically, so the
//! stored pair is sign-canonical: the first nonzero coordinate of `l` in
//! the order `(w, x, y, z)` is positive.

mod cyclic;
mod group;
mod hopf;
mod rings;

pub use cyclic::{CyclicUnit, Factor, PairElement};
pub use group::{
    extend_reflections, generate_group, orbits, product_group, product_group_symbolic, stabilizer,
    GroupElement, SymGroup, Target, DEFAULT_CAP,
};
pub use hopf::{hopf_fiber, slide, slide_orbit, Fibration, GreatCircle, Side, SlideOrbit};
pub use rings::{edge_rings, edge_rotation, Ring, RingFamily, RingPartition};

pub(crate) mod union_find {
    pub(crate) use super::group::{collect_classes as classes, union};
}

use std::fmt;

use thiserror::Error;

use crate::exactnum::{ExactError, QuatEx};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymmetryError {
    #[error("quaternion {0} is not exactly unit")]
    NotUnit(String),
    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("factor set is not closed under multiplication and negation")]
    NotClosed,
    #[error("isometry does not fix 1")]
    DoesNotFixOne,
    #[error("group does not map the item set to itself")]
    NotPreserved,
    #[error("witness does not preserve the structure")]
    WitnessRejected,
    #[error("pair is not an edge of the 24-cell")]
    NotAnEdge,
    #[error("axis must be a nonzero imaginary quaternion with rational norm²")]
    BadAxis,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Isometry {
    l: QuatEx,
    r: QuatEx,
    reflect: bool,
}

impl Isometry {
    pub fn new(l: QuatEx, r: QuatEx, reflect: bool) -> Result<Self, SymmetryError> {
        for q in [&l, &r] {
            if !q.is_unit() {
                return Err(SymmetryError::NotUnit(q.to_string()));
            }
        }
        Ok(Isometry::canonical(l, r, reflect))
    }

    fn canonical(l: QuatEx, r: QuatEx, reflect: bool) -> Self {
        if l.is_sign_canonical() {
            Isometry { l, r, reflect }
        } else {
            Isometry {
                l: -l,
                r: -r,
                reflect,
            }
        }
    }

    pub fn identity() -> Self {
        Isometry {
            l: QuatEx::one(),
            r: QuatEx::one(),
            reflect: false,
        }
    }

    /// `x ↦ a·x`.
    pub fn left(a: QuatEx) -> Result<Self, SymmetryError> {
        Isometry::new(a, QuatEx::one(), false)
    }

    /// `x ↦ x·b`.
    pub fn right(b: QuatEx) -> Result<Self, SymmetryError> {
        Isometry::new(QuatEx::one(), b, false)
    }

    /// `x ↦ x̄`.
    pub fn conjugation() -> Self {
        Isometry {
            l: QuatEx::one(),
            r: QuatEx::one(),
            reflect: true,
        }
    }

    pub fn l(&self) -> &QuatEx {
        &self.l
    }

    pub fn r(&self) -> &QuatEx {
        &self.r
    }

    pub fn is_reflection(&self) -> bool {
        self.reflect
    }

    pub fn apply(&self, x: &QuatEx) -> QuatEx {
        if self.reflect {
            &(&self.l * &x.conj()) * &self.r
        } else {
            &(&self.l * x) * &self.r
        }
    }

    pub fn apply_float(&self, x: &[f64; 4]) -> [f64; 4] {
        use crate::projection::q4;
        let x = if self.reflect { q4::conj(x) } else { *x };
        q4::mul(&q4::mul(&self.l.to_float(), &x), &self.r.to_float())
    }

    /// `self ∘ h`: apply `h` first.
    pub fn compose(&self, h: &Isometry) -> Isometry {
        let (l, r) = if self.reflect {
            // l1·conj(l2 x r2)·r1 = (l1 r̄2)·x̄·(l̄2 r1)
            (&self.l * &h.r.conj(), &h.l.conj() * &self.r)
        } else {
            (&self.l * &h.l, &h.r * &self.r)
        };
        Isometry::canonical(l, r, self.reflect ^ h.reflect)
    }

    pub fn inverse(&self) -> Isometry {
        if self.reflect {
            // y = l x̄ r  ⇒  x = r ȳ l
            Isometry::canonical(self.r.clone(), self.l.clone(), true)
        } else {
            Isometry::canonical(self.l.conj(), self.r.conj(), false)
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Isometry::identity()
    }

    /// True for pure one-sided multiplications `x ↦ ±x·r`.
    pub fn is_right_multiplication(&self) -> bool {
        !self.reflect && (self.l == QuatEx::one())
    }

    /// True for pure one-sided multiplications `x ↦ ±l·x`.
    pub fn is_left_multiplication(&self) -> bool {
        !self.reflect && (self.r == QuatEx::one() || self.r == -QuatEx::one())
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = if self.reflect { "conj(x)" } else { "x" };
        write!(f, "x ↦ ({})·{}·({})", self.l, x, self.r)
    }
}

/// The rotation `x ↦ r⁻¹·x·r`, which fixes ±1 and turns the imaginary
/// 3-space about `im(r)` by `2·arccos(re r)`.
pub fn conjugation_rotation(rq: &QuatEx) -> Result<Isometry, SymmetryError> {
    Isometry::new(rq.inv()?, rq.clone(), false)
}

/// Axis and angle of an isometry fixing 1. The axis is `None` for the
/// identity rotation.
pub fn rotation_angle_axis(g: &Isometry) -> Result<(Option<[f64; 3]>, f64), SymmetryError> {
    if g.reflect || g.apply(&QuatEx::one()) != QuatEx::one() {
        return Err(SymmetryError::DoesNotFixOne);
    }
    let r = g.r.to_float();
    let angle = 2.0 * r[3].clamp(-1.0, 1.0).acos();
    let im = [r[0], r[1], r[2]];
    let n = (im[0] * im[0] + im[1] * im[1] + im[2] * im[2]).sqrt();
    if g.r.im().is_zero() {
        return Ok((None, 0.0));
    }
    Ok((Some([im[0] / n, im[1] / n, im[2] / n]), angle))
}

impl GroupElement for Isometry {
    fn compose(&self, other: &Self) -> Self {
        Isometry::compose(self, other)
    }
    fn inverse(&self) -> Self {
        Isometry::inverse(self)
    }
    fn is_identity(&self) -> bool {
        Isometry::is_identity(self)
    }
}
