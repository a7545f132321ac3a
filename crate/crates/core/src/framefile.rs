//! Rendered frame files.
//!
//! ```text
//! "4DLO"  magic
//! u32     version (1)
//! u32     LED count
//! u32     frame count
//! f32     frames per second
//! frames  frame count × LED count × [R, G, B]
//! ```
//!
//! Header fields are little-endian.

use std::io::{self, Write};

use thiserror::Error;

pub const MAGIC: &[u8; 4] = b"4DLO";
pub const VERSION: u32 = 1;
pub const HEADER_LEN: usize = 20;

#[derive(Debug, Error)]
pub enum FrameFileError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("not a frame file (bad magic)")]
    BadMagic,
    #[error("unsupported frame file version {0}")]
    Version(u32),
    #[error("frame rate must be positive and finite, got {0}")]
    BadFps(f32),
    #[error("file holds {found} payload bytes, header promises {expected}")]
    Length { expected: u64, found: u64 },
    #[error("frame {index} has {found} bytes, expected {expected}")]
    FrameSize {
        index: u32,
        expected: usize,
        found: usize,
    },
    #[error("wrote {written} frames, header promises {expected}")]
    FrameCount { expected: u32, written: u32 },
    #[error("value does not fit the header: {0}")]
    TooLarge(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameHeader {
    pub version: u32,
    pub led_count: u32,
    pub frame_count: u32,
    pub fps: f32,
}

impl FrameHeader {
    pub fn new(led_count: usize, frame_count: usize, fps: f64) -> Result<Self, FrameFileError> {
        let led_count =
            u32::try_from(led_count).map_err(|_| FrameFileError::TooLarge("LED count"))?;
        let frame_count =
            u32::try_from(frame_count).map_err(|_| FrameFileError::TooLarge("frame count"))?;
        let fps = fps as f32;
        if !(fps > 0.0 && fps.is_finite()) {
            return Err(FrameFileError::BadFps(fps));
        }
        Ok(FrameHeader {
            version: VERSION,
            led_count,
            frame_count,
            fps,
        })
    }

    pub fn frame_bytes(&self) -> usize {
        self.led_count as usize * 3
    }

    pub fn payload_bytes(&self) -> u64 {
        (self.led_count as u64 * 3).saturating_mul(self.frame_count as u64)
    }

    pub fn encode(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[..4].copy_from_slice(MAGIC);
        out[4..8].copy_from_slice(&self.version.to_le_bytes());
        out[8..12].copy_from_slice(&self.led_count.to_le_bytes());
        out[12..16].copy_from_slice(&self.frame_count.to_le_bytes());
        out[16..20].copy_from_slice(&self.fps.to_le_bytes());
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, FrameFileError> {
        if bytes.len() < HEADER_LEN {
            if !MAGIC.starts_with(&bytes[..bytes.len().min(4)]) {
                return Err(FrameFileError::BadMagic);
            }
            return Err(FrameFileError::Length {
                expected: HEADER_LEN as u64,
                found: bytes.len() as u64,
            });
        }
        if &bytes[..4] != MAGIC {
            return Err(FrameFileError::BadMagic);
        }
        let word = |i: usize| u32::from_le_bytes(bytes[i..i + 4].try_into().expect("4 bytes"));
        let version = word(4);
        if version != VERSION {
            return Err(FrameFileError::Version(version));
        }
        let fps = f32::from_le_bytes(bytes[16..20].try_into().expect("4 bytes"));
        if !(fps > 0.0 && fps.is_finite()) {
            return Err(FrameFileError::BadFps(fps));
        }
        Ok(FrameHeader {
            version,
            led_count: word(8),
            frame_count: word(12),
            fps,
        })
    }
}

/// Streams frames after the header, checking sizes and the final count.
pub struct FrameWriter<W: Write> {
    out: W,
    header: FrameHeader,
    written: u32,
}

impl<W: Write> FrameWriter<W> {
    pub fn new(mut out: W, header: FrameHeader) -> Result<Self, FrameFileError> {
        out.write_all(&header.encode())?;
        Ok(FrameWriter {
            out,
            header,
            written: 0,
        })
    }

    pub fn write_frame(&mut self, rgb: &[u8]) -> Result<(), FrameFileError> {
        if rgb.len() != self.header.frame_bytes() {
            return Err(FrameFileError::FrameSize {
                index: self.written,
                expected: self.header.frame_bytes(),
                found: rgb.len(),
            });
        }
        if self.written == self.header.frame_count {
            return Err(FrameFileError::FrameCount {
                expected: self.header.frame_count,
                written: self.written + 1,
            });
        }
        self.out.write_all(rgb)?;
        self.written += 1;
        Ok(())
    }

    pub fn finish(mut self) -> Result<W, FrameFileError> {
        if self.written != self.header.frame_count {
            return Err(FrameFileError::FrameCount {
                expected: self.header.frame_count,
                written: self.written,
            });
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

/// A decoded file borrowing its frame data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameFile<'a> {
    pub header: FrameHeader,
    data: &'a [u8],
}

impl<'a> FrameFile<'a> {
    /// Validates the header and that the payload length matches it exactly.
    pub fn parse(bytes: &'a [u8]) -> Result<Self, FrameFileError> {
        let header = FrameHeader::decode(bytes)?;
        let data = &bytes[HEADER_LEN..];
        if data.len() as u64 != header.payload_bytes() {
            return Err(FrameFileError::Length {
                expected: header.payload_bytes(),
                found: data.len() as u64,
            });
        }
        Ok(FrameFile { header, data })
    }

    pub fn frame(&self, k: usize) -> Option<&'a [u8]> {
        let n = self.header.frame_bytes();
        if k >= self.header.frame_count as usize {
            return None;
        }
        Some(&self.data[k * n..(k + 1) * n])
    }

    pub fn frames(&self) -> impl Iterator<Item = &'a [u8]> + '_ {
        (0..self.header.frame_count as usize).filter_map(|k| self.frame(k))
    }
}
