//! The geometry export: everything a viewer needs to draw the fixture,
//! as one JSON document.
//!
//! Exact coordinates are written as `"(a/b) + (c/d)√2"` strings next to
//! their float values. Floats are for display only.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::catalog;
use crate::exactnum::{ExactError, QuatEx};
use crate::fixture::{build_fixture, Fixture, FixtureConfig, FixtureError};
use crate::polytope::{build_complex, build_compound, CellComplex, ComplexKind, CompoundKind};
use crate::projection::{ProjectedArc, Vec4, ViewPose};
use crate::symmetry::{edge_rings, RingPartition};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error("vertex {index}: {source}")]
    Exact {
        index: usize,
        #[source]
        source: ExactError,
    },
    #[error("vertex {0}: float coordinates disagree with the exact ones")]
    FloatMismatch(usize),
    #[error("edge {0} refers to a missing vertex")]
    DanglingEdge(usize),
    #[error(transparent)]
    Fixture(#[from] FixtureError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexOut {
    pub exact: [String; 4],
    pub float: Vec4,
}

impl VertexOut {
    fn new(q: &QuatEx) -> Self {
        VertexOut {
            exact: q.to_exact_strings(),
            float: q.to_float(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeOut {
    pub vertices: [usize; 2],
    /// The one tesseract of the three containing the edge.
    pub tesseract: usize,
    pub ring: usize,
    pub family: usize,
    pub quadrant: usize,
    pub strand: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentOut {
    pub name: String,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompoundOut {
    pub kind: String,
    pub vertices: Vec<VertexOut>,
    pub edges: Vec<[usize; 2]>,
    pub components: Vec<ComponentOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingOut {
    pub family: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyOut {
    pub axis: [String; 4],
    pub rings: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupOut {
    pub name: String,
    #[serde(rename = "type")]
    pub type_label: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hedge: Option<String>,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrandOut {
    pub id: usize,
    pub quadrant: usize,
    pub edges: Vec<usize>,
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureOut {
    pub leds_per_edge: usize,
    pub led_count: usize,
    pub quadrants: usize,
    pub round_robin: bool,
    pub strands: Vec<StrandOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryExport {
    pub version: u32,
    pub pose: ViewPose,
    pub vertices: Vec<VertexOut>,
    pub edges: Vec<EdgeOut>,
    pub cells: Vec<Vec<usize>>,
    pub compounds: Vec<CompoundOut>,
    pub rings: Vec<RingOut>,
    pub families: Vec<FamilyOut>,
    pub groups: Vec<GroupOut>,
    pub fixture: FixtureOut,
    pub arcs: Vec<ProjectedArc>,
}

fn compound_out(kind: CompoundKind) -> CompoundOut {
    let c = build_compound(kind);
    let u = &c.union;
    let m = &u.membership;
    CompoundOut {
        kind: kind.as_str().to_string(),
        vertices: u.points().iter().map(VertexOut::new).collect(),
        edges: u.edges.clone(),
        components: m
            .names
            .iter()
            .enumerate()
            .map(|(k, name)| ComponentOut {
                name: name.clone(),
                vertices: (0..u.vertices.len())
                    .filter(|&v| m.vertices[v].contains(&k))
                    .collect(),
                edges: (0..u.edges.len())
                    .filter(|&e| m.edges[e].contains(&k))
                    .collect(),
            })
            .collect(),
    }
}

fn edges_out(cell24: &CellComplex, rings: &RingPartition, fixture: &Fixture) -> Vec<EdgeOut> {
    let tess = build_compound(CompoundKind::ThreeTesseracts).union;
    let mut strand_of = vec![0; cell24.edges.len()];
    for s in &fixture.strands {
        s.edges.iter().for_each(|&e| strand_of[e] = s.id);
    }
    cell24
        .edges
        .iter()
        .enumerate()
        .map(|(e, &[a, b])| {
            let (pa, pb) = (&cell24.points()[a], &cell24.points()[b]);
            let ta = tess.vertices.index_of(pa).expect("same vertex set");
            let tb = tess.vertices.index_of(pb).expect("same vertex set");
            let te = tess
                .edge_index(ta, tb)
                .expect("every 24-cell edge is in a tesseract");
            EdgeOut {
                vertices: [a, b],
                tesseract: tess.membership.edges[te][0],
                ring: rings.edge_ring[e],
                family: rings.edge_family[e],
                quadrant: fixture.edge_quadrant[e],
                strand: strand_of[e],
            }
        })
        .collect()
}

impl GeometryExport {
    /// The default 24-cell fixture under `pose`.
    pub fn build(pose: &ViewPose) -> Result<GeometryExport, ExportError> {
        let cell24 = build_complex(ComplexKind::Cell24);
        let fixture = build_fixture(&cell24, &FixtureConfig::default(), pose)?;
        Ok(GeometryExport::from_parts(&cell24, &fixture))
    }

    pub fn from_parts(cell24: &CellComplex, fixture: &Fixture) -> GeometryExport {
        let rings = edge_rings(cell24).expect("24-cell rings");
        GeometryExport {
            version: FORMAT_VERSION,
            pose: fixture.pose,
            vertices: cell24.points().iter().map(VertexOut::new).collect(),
            edges: edges_out(cell24, &rings, fixture),
            cells: cell24.cells.clone(),
            compounds: CompoundKind::ALL.into_iter().map(compound_out).collect(),
            rings: rings
                .rings
                .iter()
                .map(|r| RingOut {
                    family: r.family,
                    vertices: r.vertices.clone(),
                    edges: r.edges.clone(),
                })
                .collect(),
            families: rings
                .families
                .iter()
                .map(|f| FamilyOut {
                    axis: f.axis.to_exact_strings(),
                    rings: f.rings.clone(),
                })
                .collect(),
            groups: catalog()
                .groups()
                .iter()
                .map(|g| GroupOut {
                    name: g.name(),
                    type_label: g.selector.type_label().to_string(),
                    order: g.order(),
                    hedge: g.selector.hedge().map(str::to_string),
                    generators: g.generator_descriptions(),
                })
                .collect(),
            fixture: FixtureOut {
                leds_per_edge: fixture.config.leds_per_edge,
                led_count: fixture.led_count(),
                quadrants: fixture.config.quadrants,
                round_robin: fixture.round_robin,
                strands: fixture
                    .strands
                    .iter()
                    .map(|s| StrandOut {
                        id: s.id,
                        quadrant: s.quadrant,
                        edges: s.edges.clone(),
                        start: s.start,
                        len: s.len,
                    })
                    .collect(),
            },
            arcs: fixture.arcs.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("export holds only finite numbers")
    }

    /// Parses and checks an export: version, exact strings, float
    /// agreement and edge indices.
    pub fn from_json(text: &str) -> Result<GeometryExport, ExportError> {
        let g: GeometryExport = serde_json::from_str(text)?;
        if g.version != FORMAT_VERSION {
            return Err(ExportError::Version(g.version));
        }
        g.exact_vertices()?;
        if let Some(e) = g
            .edges
            .iter()
            .position(|e| e.vertices.iter().any(|&v| v >= g.vertices.len()))
        {
            return Err(ExportError::DanglingEdge(e));
        }
        Ok(g)
    }

    /// The exact vertices, checked against their floats.
    pub fn exact_vertices(&self) -> Result<Vec<QuatEx>, ExportError> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(index, v)| {
                let q = QuatEx::from_exact_strings(&v.exact)
                    .map_err(|source| ExportError::Exact { index, source })?;
                let f = q.to_float();
                if (0..4).any(|i| (f[i] - v.float[i]).abs() > 1e-12) {
                    return Err(ExportError::FloatMismatch(index));
                }
                Ok(q)
            })
            .collect()
    }
}
