//! Edges of the 24-cell as three-fold rotations, and the hexagonal rings
//! they trace.

use std::collections::BTreeMap;

use super::SymmetryError;
use crate::exactnum::{QSqrt2, QuatEx};
use crate::polytope::{make_vertices, CellComplex, VertexSetName};

/// `e = p·r⁻¹` for the directed edge `p → r` of the vertex-down 24-cell.
/// Every such `e` satisfies `e³ = −1`.
pub fn edge_rotation(p: &QuatEx, r: &QuatEx) -> Result<QuatEx, SymmetryError> {
    let v24 = make_vertices(VertexSetName::V24);
    if !v24.contains(p) || !v24.contains(r) || p.dot(r) != QSqrt2::half() {
        return Err(SymmetryError::NotAnEdge);
    }
    Ok(p * &r.inv()?)
}

/// A closed hexagon of edges on one great circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    /// Vertex indices in cycle order `r, e·r, e²·r, …`, starting at the
    /// smallest index.
    pub vertices: Vec<usize>,
    /// Edge indices, ascending.
    pub edges: Vec<usize>,
    pub family: usize,
    /// The edge quotient, with non-negative real part.
    pub rotation: QuatEx,
}

/// Rings whose edge quotients share a rotation axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingFamily {
    /// Sign-canonical imaginary part of the quotient.
    pub axis: QuatEx,
    pub rings: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPartition {
    pub rings: Vec<Ring>,
    pub families: Vec<RingFamily>,
    pub edge_ring: Vec<usize>,
    pub edge_family: Vec<usize>,
}

fn canonical_axis(e: &QuatEx) -> QuatEx {
    let im = e.im();
    // sign-canonical over (x, y, z) since w = 0
    let first = [&im.x, &im.y, &im.z]
        .into_iter()
        .map(QSqrt2::signum)
        .find(|&s| s != 0)
        .unwrap_or(1);
    if first < 0 {
        -im
    } else {
        im
    }
}

/// Splits the edges of a 24-cell into rings: the left cosets `⟨e⟩·r` of
/// each edge quotient `e`, grouped into families by the axis of `e`.
pub fn edge_rings(complex: &CellComplex) -> Result<RingPartition, SymmetryError> {
    let pts = complex.points();
    let mut by_vertices: BTreeMap<Vec<usize>, (Vec<usize>, QuatEx)> = BTreeMap::new();
    for &[a, b] in &complex.edges {
        let (p, r) = (&pts[a], &pts[b]);
        if p.dot(r) != QSqrt2::half() {
            return Err(SymmetryError::NotAnEdge);
        }
        let mut e = p * &r.inv()?;
        if e.re().signum() < 0 {
            e = e.conj();
        }
        let mut cycle = Vec::with_capacity(6);
        let mut x = r.clone();
        for _ in 0..6 {
            let i = complex
                .vertices
                .index_of(&x)
                .ok_or(SymmetryError::NotAnEdge)?;
            cycle.push(i);
            x = &e * &x;
        }
        if x != *r {
            return Err(SymmetryError::NotAnEdge);
        }
        let start = (0..6).min_by_key(|&k| cycle[k]).unwrap();
        cycle.rotate_left(start);
        let mut key = cycle.clone();
        key.sort_unstable();
        by_vertices.entry(key).or_insert((cycle, e));
    }
    let mut family_of_axis: BTreeMap<QuatEx, usize> = BTreeMap::new();
    for (_, e) in by_vertices.values() {
        let n = family_of_axis.len();
        family_of_axis.entry(canonical_axis(e)).or_insert(n);
    }
    // renumber families in axis order
    let axes: Vec<QuatEx> = family_of_axis.keys().cloned().collect();
    let mut rings = Vec::new();
    let mut edge_ring = vec![usize::MAX; complex.edges.len()];
    for (cycle, e) in by_vertices.into_values() {
        let family = axes.binary_search(&canonical_axis(&e)).unwrap();
        let mut edges: Vec<usize> = (0..6)
            .map(|k| {
                complex
                    .edge_index(cycle[k], cycle[(k + 1) % 6])
                    .ok_or(SymmetryError::NotAnEdge)
            })
            .collect::<Result<_, _>>()?;
        edges.sort_unstable();
        rings.push(Ring {
            vertices: cycle,
            edges,
            family,
            rotation: e,
        });
    }
    rings.sort_by_key(|r| (r.family, r.edges[0]));
    let mut families: Vec<RingFamily> = axes
        .into_iter()
        .map(|axis| RingFamily {
            axis,
            rings: Vec::new(),
        })
        .collect();
    for (k, ring) in rings.iter().enumerate() {
        families[ring.family].rings.push(k);
        for &e in &ring.edges {
            if edge_ring[e] != usize::MAX {
                return Err(SymmetryError::NotAnEdge);
            }
            edge_ring[e] = k;
        }
    }
    if edge_ring.contains(&usize::MAX) {
        return Err(SymmetryError::NotAnEdge);
    }
    let edge_family = edge_ring.iter().map(|&r| rings[r].family).collect();
    Ok(RingPartition {
        rings,
        families,
        edge_ring,
        edge_family,
    })
}
