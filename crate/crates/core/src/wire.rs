//! Messages between the frame server and a viewer.
//!
//! Clients send JSON text messages tagged by `"type"`:
//!
//! ```json
//! {"type":"pose","left":[0,0,0,1],"right":[0,0,0,1]}
//! {"type":"scene","index":1}
//! {"type":"signal","value":0.5}
//! ```
//!
//! The server sends frames as binary messages, a little-endian `u32` frame
//! index followed by `R, G, B` per LED, and status as JSON text messages.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::projection::{ProjectedArc, Vec4, ViewPose};

#[derive(Debug, Error)]
pub enum WireError {
    #[error("malformed message: {0}")]
    Json(#[from] serde_json::Error),
    #[error("pose quaternions must be finite and nonzero")]
    BadPose,
    #[error("signal value must be finite")]
    BadSignal,
    #[error("frame payload shorter than its index")]
    ShortFrame,
    #[error("frame payload length {0} is not index plus RGB triples")]
    Ragged(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ClientMessage {
    Pose { left: Vec4, right: Vec4 },
    Scene { index: usize },
    Signal { value: f64 },
}

impl ClientMessage {
    /// Parses and checks values; a pose is returned normalized.
    pub fn parse(text: &str) -> Result<ClientMessage, WireError> {
        let msg: ClientMessage = serde_json::from_str(text)?;
        match msg {
            ClientMessage::Pose { left, right } => {
                let p = ViewPose::new(left, right).map_err(|_| WireError::BadPose)?;
                Ok(ClientMessage::Pose {
                    left: p.left,
                    right: p.right,
                })
            }
            ClientMessage::Signal { value } if !value.is_finite() => Err(WireError::BadSignal),
            m => Ok(m),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ServerMessage {
    /// Sent once on connect.
    Hello {
        led_count: usize,
        fps: f64,
        scenes: Vec<String>,
        duration: f64,
    },
    /// The arcs re-projected after a pose change.
    Arcs {
        pose: ViewPose,
        arcs: Vec<ProjectedArc>,
    },
    /// Now playing scene `index`, from frame `frame`.
    Scene { index: usize, frame: u32 },
}

impl ServerMessage {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub fn encode_frame(index: u32, rgb: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + rgb.len());
    out.extend_from_slice(&index.to_le_bytes());
    out.extend_from_slice(rgb);
    out
}

pub fn decode_frame(bytes: &[u8]) -> Result<(u32, &[u8]), WireError> {
    if bytes.len() < 4 {
        return Err(WireError::ShortFrame);
    }
    let (head, rgb) = bytes.split_at(4);
    if rgb.len() % 3 != 0 {
        return Err(WireError::Ragged(bytes.len()));
    }
    Ok((u32::from_le_bytes(head.try_into().expect("4 bytes")), rgb))
}
