//! Stereographic projection from the pole `−1` onto the hyperplane `w = 0`,
//! and the circular (or straight) images of great-circle edge arcs.
//!
//! Everything here is `f64`. Quaternions are `[x, y, z, w]` arrays with
//! the real part last, matching [`QuatEx::to_float`](crate::QuatEx::to_float).

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vec3 = [f64; 3];
pub type Vec4 = [f64; 4];

/// Unit-norm tolerance for projection inputs.
pub const UNIT_TOLERANCE: f64 = 1e-9;
/// A great circle counts as passing through the pole when its closest
/// approach has `|w + 1|` below this.
pub const STRAIGHT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_CLIP_RADIUS: f64 = 10.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProjectionError {
    #[error("point is not on the unit 3-sphere (norm {0})")]
    NotUnit(f64),
    #[error("edge endpoints are antipodal or equal; the arc is ambiguous")]
    Antipodal,
    #[error("pose quaternion is zero or not finite")]
    BadPose,
}

/// Float quaternion helpers.
pub mod q4 {
    use super::Vec4;

    pub fn mul(p: &Vec4, q: &Vec4) -> Vec4 {
        let [px, py, pz, pw] = *p;
        let [qx, qy, qz, qw] = *q;
        [
            pw * qx + px * qw + py * qz - pz * qy,
            pw * qy + py * qw + pz * qx - px * qz,
            pw * qz + pz * qw + px * qy - py * qx,
            pw * qw - px * qx - py * qy - pz * qz,
        ]
    }

    pub fn conj(q: &Vec4) -> Vec4 {
        [-q[0], -q[1], -q[2], q[3]]
    }

    pub fn dot(p: &Vec4, q: &Vec4) -> f64 {
        p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3]
    }

    pub fn norm(q: &Vec4) -> f64 {
        dot(q, q).sqrt()
    }

    pub fn scale(q: &Vec4, s: f64) -> Vec4 {
        [q[0] * s, q[1] * s, q[2] * s, q[3] * s]
    }

    pub fn add(p: &Vec4, q: &Vec4) -> Vec4 {
        [p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]]
    }

    pub fn sub(p: &Vec4, q: &Vec4) -> Vec4 {
        [p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]]
    }

    pub fn normalize(q: &Vec4) -> Option<Vec4> {
        let n = norm(q);
        (n > 0.0 && n.is_finite()).then(|| scale(q, 1.0 / n))
    }

    /// Angle between two unit vectors, robust near 0 and π.
    pub fn angle(p: &Vec4, q: &Vec4) -> f64 {
        let s = norm(&sub(p, q));
        let t = norm(&add(p, q));
        2.0 * s.atan2(t)
    }

    /// Point at fraction `s` of the minor great-circle arc from `p` to `q`.
    pub fn slerp(p: &Vec4, q: &Vec4, s: f64) -> Vec4 {
        let omega = angle(p, q);
        let so = omega.sin();
        if so.abs() < 1e-300 {
            return *p;
        }
        let a = ((1.0 - s) * omega).sin() / so;
        let b = (s * omega).sin() / so;
        add(&scale(p, a), &scale(q, b))
    }

    /// `cos θ + sin θ·axis`.
    pub fn rail(axis: &Vec4, theta: f64) -> Vec4 {
        let (s, c) = theta.sin_cos();
        [axis[0] * s, axis[1] * s, axis[2] * s, c]
    }
}

pub(crate) mod v3 {
    use super::Vec3;

    pub fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
        [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
    }
    pub fn add(a: &Vec3, b: &Vec3) -> Vec3 {
        [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
    }
    pub fn scale(a: &Vec3, s: f64) -> Vec3 {
        [a[0] * s, a[1] * s, a[2] * s]
    }
    pub fn dot(a: &Vec3, b: &Vec3) -> f64 {
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    }
    pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    }
    pub fn norm(a: &Vec3) -> f64 {
        dot(a, a).sqrt()
    }
    pub fn normalize(a: &Vec3) -> Vec3 {
        scale(a, 1.0 / norm(a))
    }
}

/// Image of a point under stereographic projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Stereo {
    Point(Vec3),
    AtInfinity,
}

impl Stereo {
    pub fn point(self) -> Option<Vec3> {
        match self {
            Stereo::Point(p) => Some(p),
            Stereo::AtInfinity => None,
        }
    }
}

/// `(x, y, z) / (1 + w)`; the pole `−1` maps to [`Stereo::AtInfinity`].
pub fn stereo(p: &Vec4) -> Result<Stereo, ProjectionError> {
    let n = q4::norm(p);
    if !n.is_finite() || (n - 1.0).abs() > UNIT_TOLERANCE {
        return Err(ProjectionError::NotUnit(n));
    }
    Ok(stereo_unchecked(p))
}

fn stereo_unchecked(p: &Vec4) -> Stereo {
    let d = 1.0 + p[3];
    if p[3] == -1.0 || d == 0.0 {
        Stereo::AtInfinity
    } else {
        Stereo::Point([p[0] / d, p[1] / d, p[2] / d])
    }
}

/// Rotation of the 3-sphere applied before projection: `x ↦ left·x·right`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ViewPose {
    pub left: Vec4,
    pub right: Vec4,
}

impl Default for ViewPose {
    fn default() -> Self {
        ViewPose::identity()
    }
}

impl ViewPose {
    pub fn identity() -> Self {
        ViewPose {
            left: [0.0, 0.0, 0.0, 1.0],
            right: [0.0, 0.0, 0.0, 1.0],
        }
    }

    /// Normalizes both quaternions.
    pub fn new(left: Vec4, right: Vec4) -> Result<Self, ProjectionError> {
        let ok = |q: &Vec4| q.iter().all(|c| c.is_finite());
        if !ok(&left) || !ok(&right) {
            return Err(ProjectionError::BadPose);
        }
        Ok(ViewPose {
            left: q4::normalize(&left).ok_or(ProjectionError::BadPose)?,
            right: q4::normalize(&right).ok_or(ProjectionError::BadPose)?,
        })
    }

    pub fn apply(&self, x: &Vec4) -> Vec4 {
        q4::mul(&q4::mul(&self.left, x), &self.right)
    }

    pub fn is_identity(&self) -> bool {
        *self == ViewPose::identity()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ArcShape {
    Circular {
        center: Vec3,
        radius: f64,
        /// Unit normal; the arc runs counterclockwise about it.
        normal: Vec3,
        /// Angle swept from the first endpoint to the second, in (0, 2π).
        sweep: f64,
    },
    /// Image of an arc on a great circle through the pole.
    Straight {
        /// Point of the line closest to the origin.
        foot: Vec3,
        /// Unit direction of the line.
        direction: Vec3,
        /// True when the minor arc itself passes through the pole, so the
        /// image is two rays joined at infinity.
        through_infinity: bool,
        /// Rendered length after clipping to the clip radius.
        clipped_length: f64,
    },
}

/// Stereographic image of one edge arc, keeping the posed 4D endpoints so
/// points can be addressed by 4D arc length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjectedArc {
    pub edge: Option<usize>,
    pub shape: ArcShape,
    /// Endpoint images, `None` when at infinity.
    pub endpoints: [Option<Vec3>; 2],
    /// Posed 4D endpoints.
    pub endpoints4: [Vec4; 2],
    pub clip_radius: f64,
}

impl ProjectedArc {
    pub fn is_straight(&self) -> bool {
        matches!(self.shape, ArcShape::Straight { .. })
    }

    /// Posed 4D point at fraction `s` of the source arc.
    pub fn point4_at(&self, s: f64) -> Vec4 {
        q4::slerp(&self.endpoints4[0], &self.endpoints4[1], s)
    }

    /// 3D image of the point at fraction `s` of the 4D arc. Points beyond
    /// the clip radius on straight arcs are clamped onto the clipped line.
    pub fn point_at(&self, s: f64) -> Vec3 {
        let p4 = self.point4_at(s);
        let image = stereo_unchecked(&p4);
        match (self.shape, image) {
            (ArcShape::Circular { .. }, Stereo::Point(p)) => p,
            (
                ArcShape::Straight {
                    foot, direction, ..
                },
                img,
            ) => {
                let reach = self.line_reach();
                let along = match img {
                    Stereo::Point(p) => v3::dot(&v3::sub(&p, &foot), &direction),
                    // the pole itself: pick the side this sample approaches from
                    Stereo::AtInfinity => {
                        let back = stereo_unchecked(&self.point4_at(if s > 0.5 {
                            s - 1e-6
                        } else {
                            s + 1e-6
                        }));
                        match back {
                            Stereo::Point(p) => {
                                v3::dot(&v3::sub(&p, &foot), &direction).signum() * f64::INFINITY
                            }
                            Stereo::AtInfinity => 0.0,
                        }
                    }
                };
                v3::add(&foot, &v3::scale(&direction, along.clamp(-reach, reach)))
            }
            // a circular arc never contains the pole
            (ArcShape::Circular { center, .. }, Stereo::AtInfinity) => center,
        }
    }

    /// Half-length of the clipped line around its foot point.
    fn line_reach(&self) -> f64 {
        match self.shape {
            ArcShape::Straight { foot, .. } => {
                let f = v3::norm(&foot);
                if f >= self.clip_radius {
                    0.0
                } else {
                    (self.clip_radius * self.clip_radius - f * f).sqrt()
                }
            }
            ArcShape::Circular { .. } => f64::INFINITY,
        }
    }
}

/// Projects the minor great-circle arc from `p` to `r` after applying `pose`.
pub fn project_edge(p: &Vec4, r: &Vec4, pose: &ViewPose) -> Result<ProjectedArc, ProjectionError> {
    project_edge_clipped(p, r, pose, DEFAULT_CLIP_RADIUS)
}

pub fn project_edge_clipped(
    p: &Vec4,
    r: &Vec4,
    pose: &ViewPose,
    clip_radius: f64,
) -> Result<ProjectedArc, ProjectionError> {
    for q in [p, r] {
        let n = q4::norm(q);
        if !n.is_finite() || (n - 1.0).abs() > UNIT_TOLERANCE {
            return Err(ProjectionError::NotUnit(n));
        }
    }
    let a = pose.apply(p);
    let b = pose.apply(r);
    let angle = q4::angle(&a, &b);
    if angle < 1e-12 || (std::f64::consts::PI - angle) < 1e-12 {
        return Err(ProjectionError::Antipodal);
    }
    // orthonormal basis of the plane of the great circle
    let u1 = a;
    let u2 = q4::normalize(&q4::sub(&b, &q4::scale(&a, q4::dot(&a, &b))))
        .ok_or(ProjectionError::Antipodal)?;
    let reach = (u1[3] * u1[3] + u2[3] * u2[3]).sqrt();
    let endpoints = [stereo_unchecked(&a).point(), stereo_unchecked(&b).point()];
    let mut arc = ProjectedArc {
        edge: None,
        shape: ArcShape::Circular {
            center: [0.0; 3],
            radius: 0.0,
            normal: [0.0, 0.0, 1.0],
            sweep: 0.0,
        },
        endpoints,
        endpoints4: [a, b],
        clip_radius,
    };
    if (1.0 - reach).abs() < STRAIGHT_TOLERANCE {
        // The circle contains the pole, hence also +1, so its image is a
        // line through the origin along the imaginary direction of the plane.
        let v = q4::sub(&q4::scale(&u2, u1[3]), &q4::scale(&u1, u2[3]));
        let direction = v3::normalize(&[v[0], v[1], v[2]]);
        let foot = match endpoints.iter().flatten().next() {
            Some(f) => v3::sub(f, &v3::scale(&direction, v3::dot(f, &direction))),
            None => [0.0; 3],
        };
        let pole = [0.0, 0.0, 0.0, -1.0];
        let through = (q4::angle(&a, &pole) + q4::angle(&pole, &b) - angle).abs() < 1e-9;
        arc.shape = ArcShape::Straight {
            foot,
            direction,
            through_infinity: through,
            clipped_length: 0.0,
        };
        let reach = arc.line_reach();
        let along = |s: f64| v3::dot(&v3::sub(&arc.point_at(s), &foot), &direction);
        let (t0, t1) = (along(0.0), along(1.0));
        let len = if through {
            // two rays out to the clip boundary
            (reach - t0.abs().min(reach)) + (reach - t1.abs().min(reach))
        } else {
            (t1 - t0).abs()
        };
        if let ArcShape::Straight { clipped_length, .. } = &mut arc.shape {
            *clipped_length = len;
        }
        return Ok(arc);
    }
    let pa = endpoints[0].ok_or(ProjectionError::Antipodal)?;
    let pb = endpoints[1].ok_or(ProjectionError::Antipodal)?;
    let mid4 = q4::slerp(&a, &b, 0.5);
    let pm = stereo_unchecked(&mid4)
        .point()
        .ok_or(ProjectionError::Antipodal)?;
    let center = circumcenter(&pa, &pm, &pb);
    let da = v3::sub(&pa, &center);
    let dm = v3::sub(&pm, &center);
    let db = v3::sub(&pb, &center);
    let radius = (v3::norm(&da) + v3::norm(&dm) + v3::norm(&db)) / 3.0;
    let normal = v3::normalize(&v3::cross(&da, &dm));
    let sweep = {
        let s = v3::dot(&v3::cross(&da, &db), &normal);
        let c = v3::dot(&da, &db);
        let t = s.atan2(c);
        if t <= 0.0 {
            t + std::f64::consts::TAU
        } else {
            t
        }
    };
    arc.shape = ArcShape::Circular {
        center,
        radius,
        normal,
        sweep,
    };
    Ok(arc)
}

fn circumcenter(p1: &Vec3, p2: &Vec3, p3: &Vec3) -> Vec3 {
    let a = v3::sub(p1, p3);
    let b = v3::sub(p2, p3);
    let axb = v3::cross(&a, &b);
    let denom = 2.0 * v3::dot(&axb, &axb);
    let t = v3::sub(
        &v3::scale(&b, v3::dot(&a, &a)),
        &v3::scale(&a, v3::dot(&b, &b)),
    );
    v3::add(p3, &v3::scale(&v3::cross(&t, &axb), 1.0 / denom))
}

/// `n` points at equal steps of 4D arc length, both endpoints included.
/// `n` below 2 is treated as 2.
pub fn sample_arc(arc: &ProjectedArc, n: usize) -> Vec<Vec3> {
    let n = n.max(2);
    (0..n)
        .map(|k| arc.point_at(k as f64 / (n - 1) as f64))
        .collect()
}

/// Differential of the projection at `p` applied to tangent `t`.
pub fn stereo_differential(p: &Vec4, t: &Vec4) -> Vec3 {
    let d = 1.0 + p[3];
    [
        t[0] / d - p[0] * t[3] / (d * d),
        t[1] / d - p[1] * t[3] / (d * d),
        t[2] / d - p[2] * t[3] / (d * d),
    ]
}
