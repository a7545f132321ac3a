//! Hopf fibrations of S³ by one-sided multiplication with a circle subgroup,
//! and slides along their rails.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::cyclic::{CyclicUnit, Factor};
use super::group::{collect_classes, union};
use super::SymmetryError;
use crate::exactnum::QuatEx;
use crate::projection::{q4, Vec4};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = SymmetryError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(SymmetryError::BadAxis),
        }
    }
}

/// Rails `θ ↦ (cos θ + sin θ·q)·x` (left) or `x·(cos θ + sin θ·q)` (right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fibration {
    axis: QuatEx,
    side: Side,
}

impl Fibration {
    /// `axis` must be an exact unit imaginary quaternion.
    pub fn new(axis: QuatEx, side: Side) -> Result<Self, SymmetryError> {
        if !axis.re().is_zero() || !axis.is_unit() {
            return Err(SymmetryError::BadAxis);
        }
        Ok(Fibration { axis, side })
    }

    pub fn axis(&self) -> &QuatEx {
        &self.axis
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Exact test that `b` lies on the rail through `a`.
    pub fn same_fiber(&self, a: &QuatEx, b: &QuatEx) -> bool {
        let Ok(a_inv) = a.inv() else {
            return false;
        };
        let c = match self.side {
            Side::Left => b * &a_inv,
            Side::Right => &a_inv * b,
        };
        // c ∈ span{1, q} iff im(c) × q = 0
        let (u, q) = (c.im(), &self.axis);
        let cross = [
            &(&u.y * &q.z) - &(&u.z * &q.y),
            &(&u.z * &q.x) - &(&u.x * &q.z),
            &(&u.x * &q.y) - &(&u.y * &q.x),
        ];
        cross.iter().all(|c| c.is_zero())
    }

    /// Partition of `points` into rails; classes ordered by smallest index.
    pub fn fibers(&self, points: &[QuatEx]) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..points.len()).collect();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if self.same_fiber(&points[i], &points[j]) {
                    union(&mut parent, i, j);
                }
            }
        }
        collect_classes(&mut parent)
    }
}

/// A parameterized great circle, period 2π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreatCircle {
    pub base: Vec4,
    pub axis: Vec4,
    pub side: Side,
}

impl GreatCircle {
    pub fn point(&self, theta: f64) -> Vec4 {
        let c = q4::rail(&self.axis, theta);
        match self.side {
            Side::Left => q4::mul(&c, &self.base),
            Side::Right => q4::mul(&self.base, &c),
        }
    }

    /// Distance from `p` to the circle's plane, for points on S³.
    pub fn distance(&self, p: &Vec4) -> f64 {
        let a = self.point(0.0);
        let b = self.point(std::f64::consts::FRAC_PI_2);
        let (ca, cb) = (q4::dot(p, &a), q4::dot(p, &b));
        q4::norm(&q4::sub(
            p,
            &q4::add(&q4::scale(&a, ca), &q4::scale(&b, cb)),
        ))
    }
}

pub fn hopf_fiber(f: &Fibration, x: &QuatEx) -> GreatCircle {
    GreatCircle {
        base: x.to_float(),
        axis: f.axis.to_float(),
        side: f.side,
    }
}

/// Multiplies every point by `cos θ + sin θ·q` on the fibration's side.
pub fn slide(f: &Fibration, theta: f64, points: &[QuatEx]) -> Vec<Vec4> {
    points
        .iter()
        .map(|p| hopf_fiber(f, p).point(theta))
        .collect()
}

fn mul_side(side: Side, c: &QuatEx, p: &QuatEx) -> QuatEx {
    match side {
        Side::Left => c * p,
        Side::Right => p * c,
    }
}

/// The orbit of a point set under repeated slides by `π/n` along the
/// (possibly unnormalized) exact axis `dir`.
#[derive(Debug, Clone)]
pub struct SlideOrbit {
    pub generator: CyclicUnit,
    pub side: Side,
    /// Steps until every point is back where it started.
    pub period: usize,
    /// Float positions after `k` steps, `k = 0..=period`.
    pub images: Vec<Vec<Vec4>>,
    /// Exact positions where the step is exact.
    pub exact_images: Vec<Option<Vec<QuatEx>>>,
    /// Steps grouped by equal image sets, ordered by first step.
    pub distinct: Vec<Vec<usize>>,
}

impl SlideOrbit {
    pub fn distinct_count(&self) -> usize {
        self.distinct.len()
    }

    /// True when the final step reproduces every starting point exactly.
    pub fn returns_exactly(&self) -> bool {
        match (self.exact_images.first(), self.exact_images.last()) {
            (Some(Some(a)), Some(Some(b))) => a == b,
            _ => false,
        }
    }
}

pub fn slide_orbit(
    dir: &QuatEx,
    n: u32,
    side: Side,
    points: &[QuatEx],
) -> Result<SlideOrbit, SymmetryError> {
    let c = CyclicUnit::generator(dir.clone(), n)?;
    let period = 2 * n as usize;
    let mut images = Vec::with_capacity(period + 1);
    let mut exact_images = Vec::with_capacity(period + 1);
    for k in 0..=period {
        let ck = c.power(k as i64);
        let cf = ck.to_float();
        images.push(
            points
                .iter()
                .map(|p| {
                    let pf = p.to_float();
                    match side {
                        Side::Left => q4::mul(&cf, &pf),
                        Side::Right => q4::mul(&pf, &cf),
                    }
                })
                .collect(),
        );
        exact_images.push(
            ck.exact()
                .map(|e| points.iter().map(|p| mul_side(side, &e, p)).collect()),
        );
    }
    // c^k·V = c^m·V  iff  c^(k−m)·V = V, which needs c^(k−m) exact
    // whenever V is nonempty
    let mut sorted = points.to_vec();
    sorted.sort();
    let preserves: Vec<bool> = (0..period)
        .map(|d| match c.power(d as i64).exact() {
            Some(e) => {
                let mut img: Vec<QuatEx> = points.iter().map(|p| mul_side(side, &e, p)).collect();
                img.sort();
                img == sorted
            }
            None => false,
        })
        .collect();
    let mut parent: Vec<usize> = (0..period).collect();
    for k in 0..period {
        for m in 0..k {
            if preserves[k - m] {
                union(&mut parent, k, m);
            }
        }
    }
    Ok(SlideOrbit {
        generator: c,
        side,
        period,
        images,
        exact_images,
        distinct: collect_classes(&mut parent),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{make_vertices, VertexSetName};

    #[test]
    fn fiber_through_one_and_i() {
        let f = Fibration::new(QuatEx::i(), Side::Left).unwrap();
        let c = hopf_fiber(&f, &QuatEx::one());
        let p = c.point(std::f64::consts::FRAC_PI_2);
        assert!((p[0] - 1.0).abs() < 1e-12 && p[3].abs() < 1e-12);
        let back = c.point(2.0 * std::f64::consts::PI);
        assert!((back[3] - 1.0).abs() < 1e-12);
        assert!(f.same_fiber(&QuatEx::one(), &QuatEx::i()));
        assert!(!f.same_fiber(&QuatEx::one(), &QuatEx::j()));
    }

    #[test]
    fn left_i_fibration_of_v24() {
        let f = Fibration::new(QuatEx::i(), Side::Left).unwrap();
        let v24 = make_vertices(VertexSetName::V24).points;
        let fibers = f.fibers(&v24);
        assert_eq!(fibers.len(), 6);
        assert!(fibers.iter().all(|c| c.len() == 4));
        let v8 = make_vertices(VertexSetName::V8);
        let in_v8 = fibers
            .iter()
            .filter(|c| c.iter().all(|&i| v8.contains(&v24[i])))
            .count();
        assert_eq!(in_v8, 2);
        // every vertex's float rail passes through all its fiber mates
        for c in &fibers {
            let rail = hopf_fiber(&f, &v24[c[0]]);
            for &i in c {
                assert!(rail.distance(&v24[i].to_float()) < 1e-12);
            }
        }
    }

    #[test]
    fn antipodes_share_a_fiber() {
        let f = Fibration::new(QuatEx::k(), Side::Right).unwrap();
        for p in make_vertices(VertexSetName::V24).points {
            assert!(f.same_fiber(&p, &-&p));
        }
    }

    #[test]
    fn bad_axes() {
        assert!(Fibration::new(QuatEx::one(), Side::Left).is_err());
        assert!(Fibration::new(QuatEx::from_rationals([1, 1, 0, 0], 1), Side::Left).is_err());
        assert!("up".parse::<Side>().is_err());
    }

    #[test]
    fn slide_by_zero_and_pi() {
        let f = Fibration::new(QuatEx::j(), Side::Left).unwrap();
        let v = make_vertices(VertexSetName::V16).points;
        for (a, b) in slide(&f, 0.0, &v).iter().zip(&v) {
            let b = b.to_float();
            assert!((0..4).all(|c| (a[c] - b[c]).abs() < 1e-12));
        }
        for (a, b) in slide(&f, std::f64::consts::PI, &v).iter().zip(&v) {
            let b = b.to_float();
            assert!((0..4).all(|c| (a[c] + b[c]).abs() < 1e-12));
        }
    }

    #[test]
    fn v8_slide_orbit_along_the_threefold_axis() {
        let dir = QuatEx::from_rationals([1, 1, 1, 0], 1);
        let v8 = make_vertices(VertexSetName::V8).points;
        let orbit = slide_orbit(&dir, 6, Side::Right, &v8).unwrap();
        assert_eq!(orbit.period, 12);
        assert!(orbit.returns_exactly());
        assert_eq!(orbit.distinct_count(), 6);
        // even steps stay inside V24 and visit all three 16-cells
        let names = [
            VertexSetName::V8,
            VertexSetName::V16Plus,
            VertexSetName::V16Minus,
        ];
        let mut seen = std::collections::BTreeSet::new();
        for k in (0..12).step_by(2) {
            let mut img = orbit.exact_images[k].clone().unwrap();
            img.sort();
            let hit = names
                .iter()
                .position(|n| make_vertices(*n).points == img)
                .unwrap();
            seen.insert(hit);
        }
        assert_eq!(seen.len(), 3);
        // float images agree with a direct slide
        let unit = QuatEx::from_rationals([1, 1, 1, 0], 1);
        let axis = q4::normalize(&unit.to_float()).unwrap();
        for k in 0..12 {
            let theta = k as f64 * std::f64::consts::PI / 6.0;
            for (p, img) in v8.iter().zip(&orbit.images[k]) {
                let want = q4::mul(&p.to_float(), &q4::rail(&axis, theta));
                assert!((0..4).all(|c| (want[c] - img[c]).abs() < 1e-12));
            }
        }
    }
}
