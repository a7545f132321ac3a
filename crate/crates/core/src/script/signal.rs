//! The external modulation signal: an amplitude envelope over time.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SignalError {
    #[error("signal has no samples")]
    Empty,
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("sample times must be finite and strictly increasing (sample {0})")]
    NotIncreasing(usize),
}

/// Time-ordered `(t, amplitude)` samples; amplitudes are clamped to `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<(f64, f64)>,
}

impl Signal {
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Signal, SignalError> {
        if samples.is_empty() {
            return Err(SignalError::Empty);
        }
        for (i, &(t, _)) in samples.iter().enumerate() {
            if !t.is_finite() || (i > 0 && t <= samples[i - 1].0) {
                return Err(SignalError::NotIncreasing(i));
            }
        }
        let samples = samples
            .into_iter()
            .map(|(t, a)| (t, if a.is_nan() { 0.0 } else { a.clamp(0.0, 1.0) }))
            .collect();
        Ok(Signal { samples })
    }

    pub fn constant(v: f64) -> Signal {
        Signal::new(vec![(0.0, v)]).expect("one finite sample")
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    /// Linear interpolation, held constant outside the sampled range.
    pub fn at(&self, t: f64) -> f64 {
        let s = &self.samples;
        let k = s.partition_point(|&(ts, _)| ts <= t);
        if k == 0 {
            return s[0].1;
        }
        if k == s.len() {
            return s[k - 1].1;
        }
        let ((t0, a0), (t1, a1)) = (s[k - 1], s[k]);
        a0 + (a1 - a0) * (t - t0) / (t1 - t0)
    }

    /// Lines `t,amplitude`; a first line that is not numeric is a header.
    /// Blank lines are skipped.
    pub fn from_csv(text: &str) -> Result<Signal, SignalError> {
        let mut samples = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let parsed = match fields.as_slice() {
                [t, a] => t.parse::<f64>().ok().zip(a.parse::<f64>().ok()),
                _ => None,
            };
            match parsed {
                Some(s) => samples.push(s),
                None if samples.is_empty() && i == 0 => continue,
                None => {
                    return Err(SignalError::Line {
                        line: i + 1,
                        message: format!("expected `t,amplitude`, found {line:?}"),
                    })
                }
            }
        }
        Signal::new(samples)
    }
}
