//! HTTP and WebSocket front end for a viewer.
//!
//! * `GET /` a placeholder page that shows the live frame counter.
//! * `GET /geometry.json` the geometry export for the identity pose.
//! * `GET /frames` a WebSocket streaming frames at the script's rate.
//!
//! Each WebSocket connection has its own playhead, pose and signal level.
//! Client messages are applied between frames.

use std::net::SocketAddr;
use std::sync::Arc;
use std::time::Duration;

use anyhow::Context;
use axum::extract::ws::{Message, WebSocket, WebSocketUpgrade};
use axum::extract::State;
use axum::http::header;
use axum::response::{Html, IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use log::{debug, info, warn};
use tokio::time::MissedTickBehavior;

use octaplex::export::GeometryExport;
use octaplex::fixture::{build_fixture, Fixture, FixtureConfig};
use octaplex::polytope::{build_complex, ComplexKind};
use octaplex::projection::ViewPose;
use octaplex::script::{Sequencer, Signal};
use octaplex::wire::{encode_frame, ClientMessage, ServerMessage};

struct App {
    seq: Sequencer,
    fixture: Fixture,
    fps: f64,
    total: u64,
    geometry: String,
}

const INDEX: &str = r#"<!doctype html>
<meta charset="utf-8">
<title>octaplex</title>
<p>Geometry: <a href="/geometry.json">/geometry.json</a>. Frames: <code>ws://…/frames</code>.</p>
<p>Frame <span id="f">–</span></p>
<script>
const ws = new WebSocket(`ws://${location.host}/frames`);
ws.binaryType = "arraybuffer";
ws.onmessage = (m) => {
  if (m.data instanceof ArrayBuffer) {
    document.getElementById("f").textContent = new DataView(m.data).getUint32(0, true);
  }
};
</script>
"#;

pub async fn serve(seq: Sequencer, fps: f64, port: u16) -> anyhow::Result<()> {
    let cell24 = build_complex(ComplexKind::Cell24);
    let fixture = build_fixture(&cell24, &FixtureConfig::default(), &ViewPose::identity())?;
    let geometry = GeometryExport::from_parts(&cell24, &fixture).to_json();
    let total = seq.frame_count(fps)? as u64;
    let app = Arc::new(App {
        seq,
        fixture,
        fps,
        total,
        geometry,
    });
    let router = Router::new()
        .route("/", get(|| async { Html(INDEX) }))
        .route("/geometry.json", get(geometry_json))
        .route("/frames", get(frames))
        .with_state(app);
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr)
        .await
        .with_context(|| format!("cannot bind {addr}"))?;
    let local = listener.local_addr()?;
    println!("listening on http://{local}");
    info!("serving {total} frames at {fps} fps on http://{local}");
    axum::serve(listener, router).await.context("server failed")
}

async fn geometry_json(State(app): State<Arc<App>>) -> Response {
    (
        [(header::CONTENT_TYPE, "application/json")],
        app.geometry.clone(),
    )
        .into_response()
}

async fn frames(ws: WebSocketUpgrade, State(app): State<Arc<App>>) -> Response {
    ws.on_upgrade(move |socket| async move {
        if let Err(e) = session(socket, app).await {
            debug!("session ended: {e:#}");
        }
    })
}

struct Session {
    app: Arc<App>,
    fixture: Fixture,
    frame: u64,
    signal: Signal,
}

impl Session {
    fn render(&self) -> anyhow::Result<Vec<u8>> {
        let seq = &self.app.seq;
        let k = self.frame % self.app.total;
        let last = f64::from_bits(seq.duration().to_bits() - 1);
        let t = (k as f64 / self.app.fps).min(last);
        let rgb = seq.evaluate(t, &self.signal)?;
        Ok(encode_frame(self.frame as u32, &rgb))
    }

    /// Applies one client message, returning a reply when there is one.
    fn apply(&mut self, text: &str) -> Option<ServerMessage> {
        let msg = match ClientMessage::parse(text) {
            Ok(m) => m,
            Err(e) => {
                warn!("ignoring client message: {e}");
                return None;
            }
        };
        match msg {
            ClientMessage::Signal { value } => {
                self.signal = Signal::constant(value);
                None
            }
            ClientMessage::Scene { index } => {
                match self.app.seq.scene_first_frame(index, self.app.fps) {
                    Ok(first) => {
                        self.frame = first;
                        Some(ServerMessage::Scene {
                            index,
                            frame: first as u32,
                        })
                    }
                    Err(e) => {
                        warn!("ignoring scene message: {e}");
                        None
                    }
                }
            }
            ClientMessage::Pose { left, right } => {
                let pose = ViewPose { left, right };
                match self.fixture.set_pose(&pose) {
                    Ok(()) => Some(ServerMessage::Arcs {
                        pose,
                        arcs: self.fixture.arcs.clone(),
                    }),
                    Err(e) => {
                        warn!("ignoring pose message: {e}");
                        None
                    }
                }
            }
        }
    }
}

async fn session(mut socket: WebSocket, app: Arc<App>) -> anyhow::Result<()> {
    let hello = ServerMessage::Hello {
        led_count: app.seq.led_count(),
        fps: app.fps,
        scenes: app
            .seq
            .program()
            .scenes
            .iter()
            .map(|s| s.name.clone())
            .collect(),
        duration: app.seq.duration(),
    };
    socket.send(Message::Text(hello.to_json().into())).await?;
    let mut s = Session {
        fixture: app.fixture.clone(),
        app: app.clone(),
        frame: 0,
        signal: Signal::constant(1.0),
    };
    let mut tick = tokio::time::interval(Duration::from_secs_f64(1.0 / app.fps));
    tick.set_missed_tick_behavior(MissedTickBehavior::Skip);
    loop {
        tokio::select! {
            _ = tick.tick() => {
                let payload = s.render()?;
                socket.send(Message::Binary(payload.into())).await?;
                s.frame += 1;
            }
            msg = socket.recv() => match msg {
                Some(Ok(Message::Text(text))) => {
                    if let Some(reply) = s.apply(text.as_str()) {
                        socket.send(Message::Text(reply.to_json().into())).await?;
                    }
                }
                Some(Ok(Message::Close(_))) | None => return Ok(()),
                Some(Ok(_)) => {}
                Some(Err(e)) => return Err(e.into()),
            },
        }
    }
}
