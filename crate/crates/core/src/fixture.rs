//! A virtual LED installation laid along the projected edge arcs.
//!
//! Edges are sorted into spatial quadrants by the azimuth of their projected
//! midpoints, each quadrant's edges are split over its strands in canonical
//! edge order, and every edge carries `leds_per_edge` lights at centered
//! fractions of its 4D arc length.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polytope::CellComplex;
use crate::projection::{
    project_edge_clipped, q4, ProjectedArc, ProjectionError, Vec3, Vec4, ViewPose,
    DEFAULT_CLIP_RADIUS,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FixtureError {
    #[error("complex has no edges")]
    NoEdges,
    #[error("invalid fixture configuration: {0}")]
    BadConfig(String),
    #[error("no LED at strand {strand}, offset {offset}")]
    Address { strand: usize, offset: usize },
    #[error(transparent)]
    Projection(#[from] ProjectionError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureConfig {
    pub leds_per_edge: usize,
    pub quadrants: usize,
    pub strands_per_quadrant: usize,
    pub clip_radius: f64,
}

impl Default for FixtureConfig {
    fn default() -> Self {
        FixtureConfig {
            leds_per_edge: 146,
            quadrants: 4,
            strands_per_quadrant: 7,
            clip_radius: DEFAULT_CLIP_RADIUS,
        }
    }
}

impl FixtureConfig {
    fn check(&self) -> Result<(), FixtureError> {
        if self.leds_per_edge == 0 || self.quadrants == 0 || self.strands_per_quadrant == 0 {
            return Err(FixtureError::BadConfig(
                "counts must be positive".to_string(),
            ));
        }
        if !(self.clip_radius > 0.0 && self.clip_radius.is_finite()) {
            return Err(FixtureError::BadConfig(format!(
                "clip radius {} must be positive",
                self.clip_radius
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Led {
    pub index: usize,
    pub strand: usize,
    pub offset: usize,
    pub edge: usize,
    /// Fraction of the 4D edge arc from the edge's first vertex.
    pub t: f64,
    /// Unposed point on S³.
    pub position4: Vec4,
    /// Projected, posed point.
    pub position3: Vec3,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Strand {
    pub id: usize,
    pub quadrant: usize,
    pub edges: Vec<usize>,
    /// Global index of the strand's first LED.
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub config: FixtureConfig,
    pub pose: ViewPose,
    pub leds: Vec<Led>,
    pub strands: Vec<Strand>,
    pub edge_quadrant: Vec<usize>,
    /// Global index of each edge's first LED.
    pub edge_start: Vec<usize>,
    pub arcs: Vec<ProjectedArc>,
    /// Unposed endpoints of each edge.
    pub endpoints4: Vec<[Vec4; 2]>,
    /// Set when the spatial quadrants were unbalanced and edges were dealt
    /// round-robin instead.
    pub round_robin: bool,
}

/// Azimuth sector of a projected point, half-open `[k·w, (k+1)·w)` with
/// values within `1e-9` of a boundary snapped onto it.
fn sector(p: &Vec3, quadrants: usize) -> usize {
    let width = std::f64::consts::TAU / quadrants as f64;
    let mut az = p[1].atan2(p[0]);
    if az < 0.0 {
        az += std::f64::consts::TAU;
    }
    let mut s = az / width;
    let nearest = s.round();
    if (s - nearest).abs() * width < 1e-9 {
        s = nearest;
    }
    (s.floor() as usize) % quadrants
}

fn project_all(
    endpoints4: &[[Vec4; 2]],
    pose: &ViewPose,
    clip: f64,
) -> Result<Vec<ProjectedArc>, FixtureError> {
    endpoints4
        .iter()
        .enumerate()
        .map(|(e, [a, b])| {
            let mut arc = project_edge_clipped(a, b, pose, clip)?;
            arc.edge = Some(e);
            Ok(arc)
        })
        .collect()
}

pub fn build_fixture(
    complex: &CellComplex,
    cfg: &FixtureConfig,
    pose: &ViewPose,
) -> Result<Fixture, FixtureError> {
    cfg.check()?;
    if complex.edges.is_empty() {
        return Err(FixtureError::NoEdges);
    }
    let pts = complex.points();
    let endpoints4: Vec<[Vec4; 2]> = complex
        .edges
        .iter()
        .map(|&[a, b]| [pts[a].to_float(), pts[b].to_float()])
        .collect();
    let arcs = project_all(&endpoints4, pose, cfg.clip_radius)?;
    let n_edges = complex.edges.len();
    let q = cfg.quadrants;

    let mut edge_quadrant: Vec<usize> = arcs.iter().map(|a| sector(&a.point_at(0.5), q)).collect();
    let mut counts = vec![0usize; q];
    edge_quadrant.iter().for_each(|&k| counts[k] += 1);
    let (lo, hi) = (n_edges / q, n_edges.div_ceil(q));
    let round_robin = counts.iter().any(|&c| c < lo || c > hi);
    if round_robin {
        edge_quadrant = (0..n_edges).map(|e| e % q).collect();
    }

    let s = cfg.strands_per_quadrant;
    let n = cfg.leds_per_edge;
    let mut strands = Vec::with_capacity(q * s);
    let mut leds = Vec::with_capacity(n_edges * n);
    let mut edge_start = vec![0; n_edges];
    for quad in 0..q {
        let edges: Vec<usize> = (0..n_edges).filter(|&e| edge_quadrant[e] == quad).collect();
        let (base, extra) = (edges.len() / s, edges.len() % s);
        let mut next = 0;
        for j in 0..s {
            let take = base + usize::from(j < extra);
            let mine = edges[next..next + take].to_vec();
            next += take;
            let id = quad * s + j;
            let start = leds.len();
            for &e in &mine {
                edge_start[e] = leds.len();
                let [a, b] = endpoints4[e];
                for k in 0..n {
                    let t = (k as f64 + 0.5) / n as f64;
                    leds.push(Led {
                        index: leds.len(),
                        strand: id,
                        offset: leds.len() - start,
                        edge: e,
                        t,
                        position4: q4::slerp(&a, &b, t),
                        position3: arcs[e].point_at(t),
                    });
                }
            }
            strands.push(Strand {
                id,
                quadrant: quad,
                edges: mine,
                start,
                len: leds.len() - start,
            });
        }
    }
    Ok(Fixture {
        config: cfg.clone(),
        pose: *pose,
        leds,
        strands,
        edge_quadrant,
        edge_start,
        arcs,
        endpoints4,
        round_robin,
    })
}

impl Fixture {
    pub fn led_count(&self) -> usize {
        self.leds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_start.len()
    }

    pub fn led_lookup(&self, strand: usize, offset: usize) -> Result<&Led, FixtureError> {
        let s = self
            .strands
            .get(strand)
            .filter(|s| offset < s.len)
            .ok_or(FixtureError::Address { strand, offset })?;
        Ok(&self.leds[s.start + offset])
    }

    /// Global LED indices of one edge.
    pub fn edge_leds(&self, edge: usize) -> std::ops::Range<usize> {
        let start = self.edge_start[edge];
        start..start + self.config.leds_per_edge
    }

    /// Re-projects arcs and 3D positions for a new pose; wiring is kept.
    pub fn set_pose(&mut self, pose: &ViewPose) -> Result<(), FixtureError> {
        let arcs = project_all(&self.endpoints4, pose, self.config.clip_radius)?;
        for led in &mut self.leds {
            led.position3 = arcs[led.edge].point_at(led.t);
        }
        self.arcs = arcs;
        self.pose = *pose;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{build_complex, ComplexKind};

    fn default_fixture() -> Fixture {
        build_fixture(
            &build_complex(ComplexKind::Cell24),
            &FixtureConfig::default(),
            &ViewPose::identity(),
        )
        .unwrap()
    }

    #[test]
    fn default_counts() {
        let f = default_fixture();
        assert_eq!(f.led_count(), 14_016);
        assert_eq!(f.strands.len(), 28);
        assert!(!f.round_robin);
        for quad in 0..4 {
            assert_eq!(f.edge_quadrant.iter().filter(|&&q| q == quad).count(), 24);
            let loads: Vec<usize> = f
                .strands
                .iter()
                .filter(|s| s.quadrant == quad)
                .map(|s| s.edges.len())
                .collect();
            assert_eq!(loads, vec![4, 4, 4, 3, 3, 3, 3]);
        }
        assert_eq!(f.strands.iter().map(|s| s.len).sum::<usize>(), 14_016);
    }

    #[test]
    fn addressing_round_trip() {
        let f = default_fixture();
        assert_eq!(f.led_lookup(0, 0).unwrap().index, 0);
        for led in &f.leds {
            assert_eq!(f.led_lookup(led.strand, led.offset).unwrap(), led);
        }
        assert_eq!(
            f.led_lookup(28, 0),
            Err(FixtureError::Address {
                strand: 28,
                offset: 0
            })
        );
        let last = &f.strands[27];
        assert!(f.led_lookup(27, last.len).is_err());
    }

    #[test]
    fn positions_lie_on_their_arcs() {
        let f = default_fixture();
        for led in f.leds.iter().step_by(13) {
            assert!((q4::norm(&led.position4) - 1.0).abs() < 1e-9);
            let [a, b] = f.endpoints4[led.edge];
            // in the plane of a and b, between them
            let (ca, cb) = (q4::dot(&led.position4, &a), q4::dot(&led.position4, &b));
            let gram = q4::dot(&a, &b);
            let det = 1.0 - gram * gram;
            let (x, y) = ((ca - gram * cb) / det, (cb - gram * ca) / det);
            let rebuilt = q4::add(&q4::scale(&a, x), &q4::scale(&b, y));
            assert!(q4::norm(&q4::sub(&rebuilt, &led.position4)) < 1e-9);
            assert!(x > 0.0 && y > 0.0);
        }
        for e in 0..96 {
            let ts: Vec<f64> = f.edge_leds(e).map(|i| f.leds[i].t).collect();
            assert!(ts.windows(2).all(|w| w[0] < w[1]));
            assert!((ts[0] - 0.5 / 146.0).abs() < 1e-15);
        }
    }

    #[test]
    fn single_led_sits_mid_edge() {
        let cfg = FixtureConfig {
            leds_per_edge: 1,
            ..FixtureConfig::default()
        };
        let f = build_fixture(
            &build_complex(ComplexKind::Cell24),
            &cfg,
            &ViewPose::identity(),
        )
        .unwrap();
        assert_eq!(f.led_count(), 96);
        assert!(f.leds.iter().all(|l| l.t == 0.5));
    }

    #[test]
    fn rebuild_is_identical_and_reposing_keeps_wiring() {
        let c = build_complex(ComplexKind::Cell24);
        let a = default_fixture();
        assert_eq!(a, default_fixture());
        let pose = ViewPose::new([0.1, 0.2, 0.3, 0.9], [0.0, 0.0, 0.0, 1.0]).unwrap();
        let mut b = a.clone();
        b.set_pose(&pose).unwrap();
        assert_eq!(b.strands, a.strands);
        assert_ne!(b.leds[0].position3, a.leds[0].position3);
        let fresh = build_fixture(&c, &FixtureConfig::default(), &pose).unwrap();
        assert_eq!(fresh.arcs, b.arcs);
    }

    #[test]
    fn unbalanced_falls_back_to_round_robin() {
        let c = build_complex(ComplexKind::Cell16);
        let cfg = FixtureConfig {
            quadrants: 5,
            ..FixtureConfig::default()
        };
        let pose = ViewPose::new([0.3, -0.2, 0.5, 0.8], [0.1, 0.4, 0.0, 0.9]).unwrap();
        let f = build_fixture(&c, &cfg, &pose).unwrap();
        let mut counts = [0; 5];
        f.edge_quadrant.iter().for_each(|&q| counts[q] += 1);
        assert!(counts.iter().all(|&n| n == 24 / 5 || n == 24 / 5 + 1));
        let bad = FixtureConfig {
            strands_per_quadrant: 0,
            ..FixtureConfig::default()
        };
        assert!(matches!(
            build_fixture(&c, &bad, &pose),
            Err(FixtureError::BadConfig(_))
        ));
    }
}
