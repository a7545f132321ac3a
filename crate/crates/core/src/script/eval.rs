//! Frame evaluation and rendering.
//!
//! A [`Sequencer`] binds a program to a fixture wired on the 24-cell and
//! precomputes, per scene, the edge orbits of its group and the edge masks
//! of its sweep. Evaluating a frame is then linear in the LED count.

use rayon::prelude::*;
use thiserror::Error;

use crate::catalog::{group, CatalogGroup};
use crate::fixture::Fixture;
use crate::polytope::{build_complex, discover_tesseracts, CellComplex, ComplexKind};
use crate::projection::{q4, Vec4};
use crate::symmetry::{edge_rings, Side};

use super::ast::{Animation, ColorRule, Program, Scene, SweepUnit};
use super::palette::{gamma_byte, hue_shift};
use super::signal::Signal;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("time {t} outside the program [0, {duration})")]
    TimeOutOfRange { t: f64, duration: f64 },
    #[error("fixture is not wired on the 24-cell edges")]
    FixtureMismatch,
    #[error("frame rate must be positive and finite, got {0}")]
    BadFps(f64),
    #[error("no scene {0}")]
    NoScene(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub index: u64,
    pub time: f64,
    /// `R, G, B` per LED in fixture order.
    pub rgb: Vec<u8>,
}

/// Angular radius of the glow around a slid vertex.
const SLIDE_RADIUS: f64 = std::f64::consts::PI / 6.0;

#[derive(Debug, Clone)]
struct ScenePlan {
    orbit: Vec<usize>,
    orbit_count: usize,
    /// Unit × edge, for sweeps.
    units: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, Copy)]
struct LedGeom {
    edge: usize,
    position4: Vec4,
}

#[derive(Debug, Clone)]
pub struct Sequencer {
    program: Program,
    starts: Vec<f64>,
    plans: Vec<ScenePlan>,
    leds: Vec<LedGeom>,
    edges: Vec<[usize; 2]>,
    edge_start: Vec<usize>,
    leds_per_edge: usize,
    v24: Vec<Vec4>,
}

fn sweep_units(unit: SweepUnit, cell24: &CellComplex) -> Vec<Vec<usize>> {
    match unit {
        SweepUnit::Cells => (0..cell24.cells.len())
            .map(|c| cell24.cell_edges(c))
            .collect(),
        SweepUnit::Cubes => {
            let tesseracts = discover_tesseracts().expect("V24 splits into three tesseracts");
            let mut units = Vec::new();
            for t in &tesseracts {
                let to24: Vec<usize> = t
                    .points()
                    .iter()
                    .map(|p| {
                        cell24
                            .vertices
                            .index_of(p)
                            .expect("tesseract vertices lie in V24")
                    })
                    .collect();
                for c in 0..t.cells.len() {
                    let edges = t
                        .cell_edges(c)
                        .into_iter()
                        .map(|e| {
                            let [a, b] = t.edges[e];
                            cell24
                                .edge_index(to24[a], to24[b])
                                .expect("tesseract edges are 24-cell edges")
                        })
                        .collect();
                    units.push(edges);
                }
            }
            units
        }
        SweepUnit::Rings => edge_rings(cell24)
            .expect("24-cell rings")
            .rings
            .into_iter()
            .map(|r| r.edges)
            .collect(),
    }
}

fn plan(scene: &Scene, cell24: &CellComplex) -> ScenePlan {
    let orbit = group(scene.group).edge_orbits(&cell24.edges);
    let orbit_count = orbit.iter().max().map_or(0, |m| m + 1);
    let units = match scene.animate {
        Animation::Sweep { unit, .. } => sweep_units(unit, cell24)
            .into_iter()
            .map(|edges| {
                let mut mask = vec![false; cell24.edges.len()];
                edges.into_iter().for_each(|e| mask[e] = true);
                mask
            })
            .collect(),
        _ => Vec::new(),
    };
    ScenePlan {
        orbit,
        orbit_count,
        units,
    }
}

fn base_colors(rule: &ColorRule, plan: &ScenePlan, signal: f64) -> Vec<[f64; 3]> {
    match rule {
        ColorRule::Solid(c) => vec![c.map(|v| v as f64 / 255.0); plan.orbit.len()],
        ColorRule::Orbit(p) => {
            let m = plan.orbit_count;
            let stops: Vec<[f64; 3]> = (0..m)
                .map(|k| {
                    p.sample(if m > 1 {
                        k as f64 / (m - 1) as f64
                    } else {
                        0.0
                    })
                })
                .collect();
            plan.orbit.iter().map(|&k| stops[k]).collect()
        }
        ColorRule::HueShift(inner, s) => {
            let turns = s.eval(signal);
            base_colors(inner, plan, signal)
                .into_iter()
                .map(|c| hue_shift(c, turns))
                .collect()
        }
    }
}

impl Sequencer {
    /// Fails unless the fixture's edges are the 24-cell's, in its order.
    pub fn new(program: Program, fixture: &Fixture) -> Result<Sequencer, EvalError> {
        let cell24 = build_complex(ComplexKind::Cell24);
        let pts: Vec<Vec4> = cell24.points().iter().map(|p| p.to_float()).collect();
        let same = fixture.endpoints4.len() == cell24.edges.len()
            && fixture
                .endpoints4
                .iter()
                .zip(&cell24.edges)
                .all(|(ends, &[a, b])| {
                    let close = |x: &Vec4, y: &Vec4| (0..4).all(|i| (x[i] - y[i]).abs() < 1e-12);
                    close(&ends[0], &pts[a]) && close(&ends[1], &pts[b])
                });
        if !same {
            return Err(EvalError::FixtureMismatch);
        }
        let plans = program.scenes.iter().map(|s| plan(s, &cell24)).collect();
        Ok(Sequencer {
            starts: program.starts(),
            plans,
            leds: fixture
                .leds
                .iter()
                .map(|l| LedGeom {
                    edge: l.edge,
                    position4: l.position4,
                })
                .collect(),
            edges: cell24.edges.clone(),
            edge_start: fixture.edge_start.clone(),
            leds_per_edge: fixture.config.leds_per_edge,
            v24: pts,
            program,
        })
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn led_count(&self) -> usize {
        self.leds.len()
    }

    pub fn duration(&self) -> f64 {
        self.program.duration()
    }

    pub fn scene_start(&self, scene: usize) -> Option<f64> {
        self.starts.get(scene).copied()
    }

    /// Orbit id of each 24-cell edge under the scene's group.
    pub fn edge_orbits(&self, scene: usize) -> &[usize] {
        &self.plans[scene].orbit
    }

    /// Number of sweep units of the scene (0 without a sweep).
    pub fn sweep_units(&self, scene: usize) -> usize {
        self.plans[scene].units.len()
    }

    /// Edges lit in sweep unit `k` of the scene.
    pub fn sweep_unit_edges(&self, scene: usize, k: usize) -> Vec<usize> {
        let mask = &self.plans[scene].units[k];
        (0..mask.len()).filter(|&e| mask[e]).collect()
    }

    pub fn frame_count(&self, fps: f64) -> Result<usize, EvalError> {
        if !(fps > 0.0 && fps.is_finite()) {
            return Err(EvalError::BadFps(fps));
        }
        Ok((self.duration() * fps - 1e-9).ceil().max(0.0) as usize)
    }

    /// First frame at or after the start of `scene`.
    pub fn scene_first_frame(&self, scene: usize, fps: f64) -> Result<u64, EvalError> {
        let start = self.scene_start(scene).ok_or(EvalError::NoScene(scene))?;
        self.frame_count(fps)?;
        Ok((start * fps - 1e-9).ceil().max(0.0) as u64)
    }

    /// Per-LED linear color in `[0, 1]³` before gamma.
    pub fn linear_at(&self, t: f64, signal: &Signal) -> Result<Vec<[f64; 3]>, EvalError> {
        let (k, tau) = self.program.locate(t).ok_or(EvalError::TimeOutOfRange {
            t,
            duration: self.duration(),
        })?;
        Ok(self.scene_linear(k, tau, signal.at(t)))
    }

    /// Linear colors of scene `k` at local time `tau` with signal value `s`.
    pub fn scene_linear(&self, k: usize, tau: f64, s: f64) -> Vec<[f64; 3]> {
        let scene = &self.program.scenes[k];
        let plan = &self.plans[k];
        let colors = base_colors(&scene.color, plan, s);
        let level = scene.brightness.eval(s);
        let shade = |c: [f64; 3], f: f64| c.map(|v| (v * level * f).clamp(0.0, 1.0));
        match &scene.animate {
            Animation::None => self
                .leds
                .iter()
                .map(|l| shade(colors[l.edge], 1.0))
                .collect(),
            Animation::Pulse { period } => {
                let f = 0.5 * (1.0 + (std::f64::consts::TAU * tau / period).cos());
                self.leds.iter().map(|l| shade(colors[l.edge], f)).collect()
            }
            Animation::Sweep { step, .. } => {
                let n = plan.units.len();
                let unit = &plan.units[((tau / step).floor().max(0.0) as usize) % n];
                self.leds
                    .iter()
                    .map(|l| shade(colors[l.edge], if unit[l.edge] { 1.0 } else { 0.0 }))
                    .collect()
            }
            Animation::Slide { axis, side, speed } => {
                let c = q4::rail(&axis.unit(), std::f64::consts::TAU * speed * tau);
                let slid: Vec<Vec4> = self
                    .v24
                    .iter()
                    .map(|v| match side {
                        Side::Left => q4::mul(&c, v),
                        Side::Right => q4::mul(v, &c),
                    })
                    .collect();
                self.leds
                    .iter()
                    .map(|l| {
                        let near = slid
                            .iter()
                            .map(|v| q4::dot(v, &l.position4))
                            .fold(f64::NEG_INFINITY, f64::max);
                        let alpha = near.clamp(-1.0, 1.0).acos();
                        let f = if alpha < SLIDE_RADIUS {
                            0.5 * (1.0 + (std::f64::consts::PI * alpha / SLIDE_RADIUS).cos())
                        } else {
                            0.0
                        };
                        shade(colors[l.edge], f)
                    })
                    .collect()
            }
        }
    }

    /// Gamma-encoded RGB bytes at program time `t`.
    pub fn evaluate(&self, t: f64, signal: &Signal) -> Result<Vec<u8>, EvalError> {
        Ok(encode(&self.linear_at(t, signal)?))
    }

    pub fn frame_at(&self, index: u64, t: f64, signal: &Signal) -> Result<Frame, EvalError> {
        Ok(Frame {
            index,
            time: t,
            rgb: self.evaluate(t, signal)?,
        })
    }

    /// Whether the scene's colors are constant on its group's edge orbits.
    /// Sweeps are only for the trivial group; slides need every element to
    /// multiply on the other side.
    pub fn symmetry_applies(&self, scene: usize) -> bool {
        let s = &self.program.scenes[scene];
        match s.animate {
            Animation::None | Animation::Pulse { .. } => true,
            Animation::Sweep { .. } => group(s.group).order() == 1,
            Animation::Slide { side, .. } => group(s.group).isometries().iter().all(|g| {
                g.is_identity()
                    || match side {
                        Side::Left => g.is_right_multiplication(),
                        Side::Right => g.is_left_multiplication(),
                    }
            }),
        }
    }

    /// Index of the LED that element `g` of the scene's group carries LED
    /// `led` to, when the image edge is a 24-cell edge.
    pub fn led_image(&self, scene: usize, g: usize, led: usize) -> Option<usize> {
        let grp: &CatalogGroup = group(self.program.scenes[scene].group);
        let l = &self.leds[led];
        let [a, b] = self.edges[l.edge];
        let (ga, gb) = (grp.apply_v24(g, a)?, grp.apply_v24(g, b)?);
        let e = self
            .edges
            .iter()
            .position(|&x| x == [ga.min(gb), ga.max(gb)])?;
        let k = led - self.edge_start[l.edge];
        let k = if ga < gb {
            k
        } else {
            self.leds_per_edge - 1 - k
        };
        Some(self.edge_start[e] + k)
    }

    /// Largest channel difference between each LED and its image under
    /// element `g`, at program time `t`. `None` when the scene's colors are
    /// not expected to be symmetric.
    pub fn symmetry_defect(&self, scene: usize, g: usize, t: f64, signal: &Signal) -> Option<f64> {
        if !self.symmetry_applies(scene) {
            return None;
        }
        let tau = t - self.starts[scene];
        let lin = self.scene_linear(scene, tau, signal.at(t));
        let mut worst = 0.0f64;
        for led in 0..self.leds.len() {
            if let Some(img) = self.led_image(scene, g, led) {
                for (x, y) in lin[led].iter().zip(&lin[img]) {
                    worst = worst.max((x - y).abs());
                }
            }
        }
        Some(worst)
    }
}

fn encode(lin: &[[f64; 3]]) -> Vec<u8> {
    lin.iter().flat_map(|c| c.map(gamma_byte)).collect()
}

const CHUNK: usize = 32;

/// Renders every frame `k/fps` of the program, computing chunks in
/// parallel and handing frames to `emit` in index order. Returns the
/// number of frames.
pub fn render<E: From<EvalError>>(
    seq: &Sequencer,
    fps: f64,
    signal: &Signal,
    mut emit: impl FnMut(Frame) -> Result<(), E>,
) -> Result<usize, E> {
    let n = seq.frame_count(fps)?;
    let duration = seq.duration();
    let last = f64::from_bits(duration.to_bits() - 1);
    let mut k = 0;
    while k < n {
        let end = (k + CHUNK).min(n);
        let frames: Vec<Frame> = (k..end)
            .into_par_iter()
            .map(|i| seq.frame_at(i as u64, (i as f64 / fps).min(last), signal))
            .collect::<Result<_, _>>()?;
        for f in frames {
            emit(f)?;
        }
        k = end;
    }
    Ok(n)
}
