//! Named color palettes with linear interpolation between RGB stops.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Palette {
    Rainbow,
    /// Four well separated hues, one per ring family.
    Axes4,
    Fire,
    Ice,
    Mono,
}

impl Palette {
    pub const ALL: [Palette; 5] = [
        Palette::Rainbow,
        Palette::Axes4,
        Palette::Fire,
        Palette::Ice,
        Palette::Mono,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Palette::Rainbow => "rainbow",
            Palette::Axes4 => "axes4",
            Palette::Fire => "fire",
            Palette::Ice => "ice",
            Palette::Mono => "mono",
        }
    }

    pub fn by_name(s: &str) -> Option<Palette> {
        Palette::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn stops(self) -> &'static [[u8; 3]] {
        match self {
            Palette::Rainbow => &[
                [255, 0, 0],
                [255, 127, 0],
                [255, 255, 0],
                [0, 255, 0],
                [0, 0, 255],
                [75, 0, 130],
                [148, 0, 211],
            ],
            Palette::Axes4 => &[[255, 0, 0], [0, 255, 0], [0, 64, 255], [255, 200, 0]],
            Palette::Fire => &[[64, 0, 0], [255, 64, 0], [255, 200, 0], [255, 255, 200]],
            Palette::Ice => &[[0, 16, 64], [0, 128, 255], [200, 240, 255]],
            Palette::Mono => &[[255, 255, 255]],
        }
    }

    /// Linear color in `[0, 1]³` at position `s ∈ [0, 1]`.
    pub fn sample(self, s: f64) -> [f64; 3] {
        let stops = self.stops();
        let lin = |c: [u8; 3]| c.map(|v| v as f64 / 255.0);
        if stops.len() == 1 {
            return lin(stops[0]);
        }
        let x = s.clamp(0.0, 1.0) * (stops.len() - 1) as f64;
        let i = (x.floor() as usize).min(stops.len() - 2);
        let f = x - i as f64;
        let (a, b) = (lin(stops[i]), lin(stops[i + 1]));
        [0, 1, 2].map(|c| a[c] + (b[c] - a[c]) * f)
    }
}

/// Rotates the hue of a linear RGB color by `turns`.
pub fn hue_shift(rgb: [f64; 3], turns: f64) -> [f64; 3] {
    let [r, g, b] = rgb;
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let delta = max - min;
    if delta <= 0.0 {
        return rgb;
    }
    let h = if max == r {
        ((g - b) / delta).rem_euclid(6.0)
    } else if max == g {
        (b - r) / delta + 2.0
    } else {
        (r - g) / delta + 4.0
    };
    let h = (h / 6.0 + turns).rem_euclid(1.0) * 6.0;
    let s = delta / max;
    let (v, c) = (max, max * s);
    let x = c * (1.0 - ((h % 2.0) - 1.0).abs());
    let (r1, g1, b1) = match h as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = v - c;
    [r1 + m, g1 + m, b1 + m]
}

/// `round(255·v^2.2)` after clamping to `[0, 1]`.
pub fn gamma_byte(v: f64) -> u8 {
    let v = if v.is_nan() { 0.0 } else { v.clamp(0.0, 1.0) };
    (255.0 * v.powf(2.2)).round() as u8
}
