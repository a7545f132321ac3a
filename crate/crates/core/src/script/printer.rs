//! Canonical text form of a program. Every key is written out, so
//! `parse(pretty(p)) == p`.

use std::fmt::Write;

use super::ast::{Animation, ColorRule, Program, Scalar};

fn string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn scalar(s: &Scalar) -> String {
    let call = |name: &str, xs: &[Scalar]| {
        let args: Vec<String> = xs.iter().map(scalar).collect();
        format!("{name}({})", args.join(", "))
    };
    match s {
        Scalar::Number(n) => n.to_string(),
        Scalar::Signal => "signal".to_string(),
        Scalar::Mul(xs) => call("mul", xs),
        Scalar::Add(xs) => call("add", xs),
        Scalar::Min(xs) => call("min", xs),
        Scalar::Max(xs) => call("max", xs),
    }
}

fn color(c: &ColorRule) -> String {
    match c {
        ColorRule::Solid([r, g, b]) => format!("solid(#{r:02X}{g:02X}{b:02X})"),
        ColorRule::Orbit(p) => format!("orbit(palette({}))", string(p.name())),
        ColorRule::HueShift(base, s) => format!("hueshift({}, {})", color(base), scalar(s)),
    }
}

fn animation(a: &Animation) -> String {
    match a {
        Animation::None => "none".to_string(),
        Animation::Sweep { unit, step } => format!("sweep({}, {step})", unit.as_str()),
        Animation::Slide { axis, side, speed } => format!(
            "slide(fiber({}, {}), {speed})",
            string(axis.as_str()),
            string(side.as_str())
        ),
        Animation::Pulse { period } => format!("pulse({period})"),
    }
}

pub fn pretty(p: &Program) -> String {
    let mut out = String::new();
    for (i, s) in p.scenes.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "scene {} duration {}s {{", string(&s.name), s.duration);
        let _ = writeln!(out, "    group = {};", s.group);
        let _ = writeln!(out, "    color = {};", color(&s.color));
        let _ = writeln!(out, "    animate = {};", animation(&s.animate));
        let _ = writeln!(out, "    brightness = {};", scalar(&s.brightness));
        out.push_str("}\n");
    }
    out
}
