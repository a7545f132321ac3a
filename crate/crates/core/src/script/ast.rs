use crate::catalog::GroupSelector;
use crate::symmetry::Side;

use super::palette::Palette;

#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    pub scenes: Vec<Scene>,
}

impl Program {
    pub fn duration(&self) -> f64 {
        self.scenes.iter().map(|s| s.duration).sum()
    }

    /// Start time of each scene.
    pub fn starts(&self) -> Vec<f64> {
        let mut t = 0.0;
        self.scenes
            .iter()
            .map(|s| {
                let start = t;
                t += s.duration;
                start
            })
            .collect()
    }

    /// Scene index and local time for a program time in `[0, duration)`.
    pub fn locate(&self, t: f64) -> Option<(usize, f64)> {
        if !(t >= 0.0 && t < self.duration()) {
            return None;
        }
        let starts = self.starts();
        // half-open [start, end): the last start not after t
        let k = starts.iter().rposition(|&s| s <= t)?;
        Some((k, t - starts[k]))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub name: String,
    /// Seconds, positive.
    pub duration: f64,
    pub group: GroupSelector,
    pub color: ColorRule,
    pub animate: Animation,
    pub brightness: Scalar,
}

impl Scene {
    pub fn new(name: &str, duration: f64) -> Scene {
        Scene {
            name: name.to_string(),
            duration,
            group: GroupSelector::Trivial,
            color: ColorRule::Solid([255, 255, 255]),
            animate: Animation::None,
            brightness: Scalar::Signal,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ColorRule {
    Solid([u8; 3]),
    /// Orbit `k` of `m` samples the palette at `k/(m−1)`.
    Orbit(Palette),
    /// Hue rotated by the scalar, in turns.
    HueShift(Box<ColorRule>, Scalar),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepUnit {
    /// The 24 octahedral cells.
    Cells,
    /// The 24 cubes of the three tesseracts.
    Cubes,
    /// The 16 hexagonal rings.
    Rings,
}

impl SweepUnit {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepUnit::Cells => "cells",
            SweepUnit::Cubes => "cubes",
            SweepUnit::Rings => "rings",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberAxis {
    I,
    J,
    K,
    /// `(i + j + k)/√3`.
    Ijk,
}

impl FiberAxis {
    pub fn as_str(self) -> &'static str {
        match self {
            FiberAxis::I => "i",
            FiberAxis::J => "j",
            FiberAxis::K => "k",
            FiberAxis::Ijk => "ijk",
        }
    }

    pub fn parse(s: &str) -> Option<FiberAxis> {
        match s {
            "i" => Some(FiberAxis::I),
            "j" => Some(FiberAxis::J),
            "k" => Some(FiberAxis::K),
            "ijk" => Some(FiberAxis::Ijk),
            _ => None,
        }
    }

    pub fn unit(self) -> [f64; 4] {
        let s = 1.0 / 3f64.sqrt();
        match self {
            FiberAxis::I => [1.0, 0.0, 0.0, 0.0],
            FiberAxis::J => [0.0, 1.0, 0.0, 0.0],
            FiberAxis::K => [0.0, 0.0, 1.0, 0.0],
            FiberAxis::Ijk => [s, s, s, 0.0],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Animation {
    None,
    /// Lights one unit at a time, `step` seconds each.
    Sweep {
        unit: SweepUnit,
        step: f64,
    },
    /// Slides the vertex set along the fibration's rails at `speed` turns
    /// per second; LEDs near a slid vertex light up.
    Slide {
        axis: FiberAxis,
        side: Side,
        speed: f64,
    },
    /// Whole-fixture brightness wave of the given period.
    Pulse {
        period: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Number(f64),
    Signal,
    Mul(Vec<Scalar>),
    Add(Vec<Scalar>),
    Min(Vec<Scalar>),
    Max(Vec<Scalar>),
}

impl Scalar {
    pub fn eval(&self, signal: f64) -> f64 {
        match self {
            Scalar::Number(n) => *n,
            Scalar::Signal => signal,
            Scalar::Mul(xs) => xs.iter().map(|x| x.eval(signal)).product(),
            Scalar::Add(xs) => xs.iter().map(|x| x.eval(signal)).sum(),
            Scalar::Min(xs) => xs
                .iter()
                .map(|x| x.eval(signal))
                .fold(f64::INFINITY, f64::min),
            Scalar::Max(xs) => xs
                .iter()
                .map(|x| x.eval(signal))
                .fold(f64::NEG_INFINITY, f64::max),
        }
    }

    pub fn uses_signal(&self) -> bool {
        match self {
            Scalar::Number(_) => false,
            Scalar::Signal => true,
            Scalar::Mul(xs) | Scalar::Add(xs) | Scalar::Min(xs) | Scalar::Max(xs) => {
                xs.iter().any(Scalar::uses_signal)
            }
        }
    }
}
