//! Exact vertex sets of the 16-cell, tesseract and 24-cell, their incidence
//! structure, and the compounds built from them.
//!
//! Edges, faces and cells are all found by exact inner-product scans over
//! the vertex list. Vertices are kept in lexicographic coordinate order and
//! edges as ascending index pairs, so every output is stable across runs.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exactnum::{QSqrt2, QuatEx};
use crate::symmetry::Isometry;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("unknown vertex set {0:?}")]
    UnknownName(String),
    #[error("expected {expected} points, found {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("point set is not a rotated copy of the standard tesseract")]
    NotATesseract,
    #[error("vertex sets are not dual: a cell has {0} vertices instead of 6")]
    NotDual(usize),
    #[error("compound is not the three 16-cells on V24")]
    NotThree16,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexSetName {
    V8,
    V16,
    V16Plus,
    V16Minus,
    V24,
    /// `V24′`, the vertices of the dual 24-cell.
    V24Dual,
}

impl VertexSetName {
    pub const ALL: [VertexSetName; 6] = [
        VertexSetName::V8,
        VertexSetName::V16,
        VertexSetName::V16Plus,
        VertexSetName::V16Minus,
        VertexSetName::V24,
        VertexSetName::V24Dual,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            VertexSetName::V8 => "V8",
            VertexSetName::V16 => "V16",
            VertexSetName::V16Plus => "V16+",
            VertexSetName::V16Minus => "V16-",
            VertexSetName::V24 => "V24",
            VertexSetName::V24Dual => "V24'",
        }
    }
}

impl fmt::Display for VertexSetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VertexSetName {
    type Err = PolytopeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        VertexSetName::ALL
            .into_iter()
            .find(|n| n.as_str() == t || (t == "V24′" && *n == VertexSetName::V24Dual))
            .ok_or_else(|| PolytopeError::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    pub name: String,
    /// Sorted, distinct, exactly unit.
    pub points: Vec<QuatEx>,
}

impl VertexSet {
    pub fn new(name: &str, mut points: Vec<QuatEx>) -> Self {
        points.sort();
        points.dedup();
        VertexSet {
            name: name.to_string(),
            points,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, q: &QuatEx) -> Option<usize> {
        self.points.binary_search(q).ok()
    }

    pub fn contains(&self, q: &QuatEx) -> bool {
        self.index_of(q).is_some()
    }
}

fn signs(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..1u32 << n).map(move |m| {
        (0..n)
            .map(|b| if m >> b & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

pub fn make_vertices(name: VertexSetName) -> VertexSet {
    let mut pts = Vec::new();
    match name {
        VertexSetName::V8 => {
            for axis in 0..4 {
                for s in [1, -1] {
                    let mut c = [0i64; 4];
                    c[axis] = s;
                    pts.push(QuatEx::from_rationals(c, 1));
                }
            }
        }
        VertexSetName::V16 | VertexSetName::V16Plus | VertexSetName::V16Minus => {
            for s in signs(4) {
                let minus = s.iter().filter(|&&c| c < 0).count();
                let keep = match name {
                    VertexSetName::V16Plus => minus % 2 == 0,
                    VertexSetName::V16Minus => minus % 2 == 1,
                    _ => true,
                };
                if keep {
                    pts.push(QuatEx::from_rationals([s[0], s[1], s[2], s[3]], 2));
                }
            }
        }
        VertexSetName::V24 => {
            pts.extend(make_vertices(VertexSetName::V8).points);
            pts.extend(make_vertices(VertexSetName::V16).points);
        }
        VertexSetName::V24Dual => {
            for a in 0..4 {
                for b in a + 1..4 {
                    for s in signs(2) {
                        let mut c = [0i64; 4];
                        c[a] = s[0];
                        c[b] = s[1];
                        pts.push(QuatEx::over_sqrt2(c));
                    }
                }
            }
        }
    }
    VertexSet::new(name.as_str(), pts)
}

/// `V24 ∪ V24′`, the 48 elements of the binary octahedral group.
pub fn o_star_points() -> Vec<QuatEx> {
    let mut v = make_vertices(VertexSetName::V24).points;
    v.extend(make_vertices(VertexSetName::V24Dual).points);
    v.sort();
    v
}

/// All pairs `i < j` with `pᵢ·pⱼ = inner` exactly.
pub fn derive_edges(points: &[QuatEx], inner: &QSqrt2) -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].dot(&points[j]) == *inner {
                out.push([i, j]);
            }
        }
    }
    out
}

fn differ_in_one_coordinate(p: &QuatEx, q: &QuatEx) -> bool {
    p.coords()
        .iter()
        .zip(q.coords())
        .filter(|(a, b)| *a != b)
        .count()
        == 1
}

/// Tesseract edges: vertices joined when they differ in exactly one
/// coordinate, read in the frame of the standard `V16`. A rotated copy is
/// first matched to `V16` by a left multiplication from `T*`.
pub fn tesseract_edges(points: &[QuatEx]) -> Result<Vec<[usize; 2]>, PolytopeError> {
    if points.len() != 16 {
        return Err(PolytopeError::WrongCardinality {
            expected: 16,
            found: points.len(),
        });
    }
    let frame = tesseract_frame(points).ok_or(PolytopeError::NotATesseract)?;
    let back = frame.inverse();
    let std: Vec<QuatEx> = points.iter().map(|p| back.apply(p)).collect();
    let mut out = Vec::new();
    for i in 0..16 {
        for j in i + 1..16 {
            if differ_in_one_coordinate(&std[i], &std[j]) {
                out.push([i, j]);
            }
        }
    }
    Ok(out)
}

/// A left multiplication by an element of `T*` taking the standard `V16`
/// onto `points`.
pub fn tesseract_frame(points: &[QuatEx]) -> Option<Isometry> {
    let mut target = points.to_vec();
    target.sort();
    let v16 = make_vertices(VertexSetName::V16).points;
    make_vertices(VertexSetName::V24)
        .points
        .into_iter()
        .find_map(|t| {
            let g = Isometry::left(t).ok()?;
            let mut img: Vec<QuatEx> = v16.iter().map(|p| g.apply(p)).collect();
            img.sort();
            (img == target).then_some(g)
        })
}

type Cells = Vec<Vec<usize>>;
type Faces = Vec<Vec<usize>>;

/// Cells of a 24-cell: for each dual vertex `c`, the vertices `v`
/// maximizing `v·c`. Faces are the triangles shared by two cells.
pub fn derive_cells_24cell(
    vs24: &[QuatEx],
    dual: &[QuatEx],
) -> Result<(Cells, Faces), PolytopeError> {
    let mut cells = Vec::with_capacity(dual.len());
    for c in dual {
        let dots: Vec<QSqrt2> = vs24.iter().map(|v| v.dot(c)).collect();
        let Some(best) = dots.iter().max() else {
            return Err(PolytopeError::NotDual(0));
        };
        let cell: Vec<usize> = (0..vs24.len()).filter(|&i| dots[i] == *best).collect();
        if cell.len() != 6 || *best != QSqrt2::inv_sqrt2() {
            return Err(PolytopeError::NotDual(cell.len()));
        }
        cells.push(cell);
    }
    let mut faces = BTreeSet::new();
    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            let shared: Vec<usize> = cells[a]
                .iter()
                .filter(|i| cells[b].contains(i))
                .copied()
                .collect();
            if shared.len() == 3 {
                faces.insert(shared);
            }
        }
    }
    cells.sort();
    Ok((cells, faces.into_iter().collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    Cell16,
    Tesseract,
    Cell24,
    Cell24Dual,
}

impl ComplexKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ComplexKind::Cell16 => "cell16",
            ComplexKind::Tesseract => "tesseract",
            ComplexKind::Cell24 => "cell24",
            ComplexKind::Cell24Dual => "cell24-dual",
        }
    }
}

impl FromStr for ComplexKind {
    type Err = PolytopeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            ComplexKind::Cell16,
            ComplexKind::Tesseract,
            ComplexKind::Cell24,
            ComplexKind::Cell24Dual,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
        .ok_or_else(|| PolytopeError::UnknownName(s.to_string()))
    }
}

/// Which components of a compound each vertex and edge belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Membership {
    pub names: Vec<String>,
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    pub kind: ComplexKind,
    pub vertices: VertexSet,
    pub edges: Vec<[usize; 2]>,
    /// Triangles, or squares for the tesseract; vertex indices ascending.
    pub faces: Vec<Vec<usize>>,
    pub cells: Vec<Vec<usize>>,
    pub membership: Membership,
}

impl CellComplex {
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (
            self.vertices.len(),
            self.edges.len(),
            self.faces.len(),
            self.cells.len(),
        )
    }

    pub fn euler(&self) -> i64 {
        let (v, e, f, c) = self.counts();
        v as i64 - e as i64 + f as i64 - c as i64
    }

    pub fn points(&self) -> &[QuatEx] {
        &self.vertices.points
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &[a, b] in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj.iter_mut().for_each(|n| n.sort_unstable());
        adj
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { [a, b] } else { [b, a] };
        self.edges.binary_search(&key).ok()
    }

    /// Edges whose two ends both lie in `cell`.
    pub fn cell_edges(&self, cell: usize) -> Vec<usize> {
        let members = &self.cells[cell];
        (0..self.edges.len())
            .filter(|&e| {
                let [a, b] = self.edges[e];
                members.contains(&a) && members.contains(&b)
            })
            .collect()
    }

    /// The image under `g`, re-sorted into canonical order.
    pub fn transformed(&self, g: &Isometry) -> CellComplex {
        let images: Vec<QuatEx> = self.vertices.points.iter().map(|p| g.apply(p)).collect();
        let vertices = VertexSet::new(&self.vertices.name, images.clone());
        let map: Vec<usize> = images
            .iter()
            .map(|p| vertices.index_of(p).expect("isometry is injective"))
            .collect();
        let remap_list = |xs: &[Vec<usize>]| -> Vec<Vec<usize>> {
            let mut out: Vec<Vec<usize>> = xs
                .iter()
                .map(|x| {
                    let mut y: Vec<usize> = x.iter().map(|&i| map[i]).collect();
                    y.sort_unstable();
                    y
                })
                .collect();
            out.sort();
            out
        };
        let mut edge_pairs: Vec<([usize; 2], Vec<usize>)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, &[a, b])| {
                let (x, y) = (map[a], map[b]);
                let key = if x < y { [x, y] } else { [y, x] };
                (
                    key,
                    self.membership.edges.get(e).cloned().unwrap_or_default(),
                )
            })
            .collect();
        edge_pairs.sort();
        let mut vertex_labels = vec![Vec::new(); map.len()];
        for (i, labels) in self.membership.vertices.iter().enumerate() {
            vertex_labels[map[i]] = labels.clone();
        }
        let has_labels = !self.membership.names.is_empty();
        CellComplex {
            kind: self.kind,
            vertices,
            edges: edge_pairs.iter().map(|(k, _)| *k).collect(),
            faces: remap_list(&self.faces),
            cells: remap_list(&self.cells),
            membership: if has_labels {
                Membership {
                    names: self.membership.names.clone(),
                    vertices: vertex_labels,
                    edges: edge_pairs.into_iter().map(|(_, l)| l).collect(),
                }
            } else {
                Membership::default()
            },
        }
    }
}

/// All `size`-cliques of the adjacency graph, vertex lists ascending.
fn cliques(adj: &[Vec<usize>], size: usize) -> Vec<Vec<usize>> {
    fn grow(adj: &[Vec<usize>], cur: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        let last = *cur.last().unwrap();
        for &n in &adj[last] {
            if n > last && cur.iter().all(|c| adj[*c].binary_search(&n).is_ok()) {
                cur.push(n);
                grow(adj, cur, size, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..adj.len() {
        grow(adj, &mut vec![v], size, &mut out);
    }
    out
}

/// A 16-cell on any 8 mutually orthogonal-or-antipodal unit points:
/// edges join orthogonal pairs, faces and cells are the 3- and 4-cliques.
fn cell16_on(name: &str, points: Vec<QuatEx>) -> CellComplex {
    let vertices = VertexSet::new(name, points);
    let edges = derive_edges(&vertices.points, &QSqrt2::zero());
    let mut c = CellComplex {
        kind: ComplexKind::Cell16,
        vertices,
        edges,
        faces: Vec::new(),
        cells: Vec::new(),
        membership: Membership::default(),
    };
    let adj = c.neighbors();
    c.faces = cliques(&adj, 3);
    c.cells = cliques(&adj, 4);
    c
}

fn standard_tesseract() -> CellComplex {
    let vertices = make_vertices(VertexSetName::V16);
    let edges = tesseract_edges(&vertices.points).expect("V16 is the standard tesseract");
    let pts = &vertices.points;
    let half = QSqrt2::half();
    let coord = |p: &QuatEx, k: usize| p.coords()[k].clone();
    // squares fix two coordinates, cubes fix one
    let mut faces = BTreeSet::new();
    for a in 0..4 {
        for b in a + 1..4 {
            for sa in [half.clone(), -half.clone()] {
                for sb in [half.clone(), -half.clone()] {
                    let f: Vec<usize> = (0..16)
                        .filter(|&i| coord(&pts[i], a) == sa && coord(&pts[i], b) == sb)
                        .collect();
                    faces.insert(f);
                }
            }
        }
    }
    let mut cells = Vec::new();
    for a in 0..4 {
        for sa in [half.clone(), -half.clone()] {
            cells.push(
                (0..16)
                    .filter(|&i| coord(&pts[i], a) == sa)
                    .collect::<Vec<_>>(),
            );
        }
    }
    cells.sort();
    CellComplex {
        kind: ComplexKind::Tesseract,
        vertices,
        edges,
        faces: faces.into_iter().collect(),
        cells,
        membership: Membership::default(),
    }
}

fn cell24_on(kind: ComplexKind, vs: VertexSetName, dual: VertexSetName) -> CellComplex {
    let vertices = make_vertices(vs);
    let edges = derive_edges(&vertices.points, &QSqrt2::half());
    let (cells, faces) = derive_cells_24cell(&vertices.points, &make_vertices(dual).points)
        .expect("V24 and V24′ are dual");
    CellComplex {
        kind,
        vertices,
        edges,
        faces,
        cells,
        membership: Membership::default(),
    }
}

pub fn build_complex(kind: ComplexKind) -> CellComplex {
    match kind {
        ComplexKind::Cell16 => cell16_on("V8", make_vertices(VertexSetName::V8).points),
        ComplexKind::Tesseract => standard_tesseract(),
        ComplexKind::Cell24 => cell24_on(kind, VertexSetName::V24, VertexSetName::V24Dual),
        ComplexKind::Cell24Dual => cell24_on(kind, VertexSetName::V24Dual, VertexSetName::V24),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompoundKind {
    Three16,
    ThreeTesseracts,
    DualPair24,
    TwoThree16,
}

impl CompoundKind {
    pub const ALL: [CompoundKind; 4] = [
        CompoundKind::Three16,
        CompoundKind::ThreeTesseracts,
        CompoundKind::DualPair24,
        CompoundKind::TwoThree16,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CompoundKind::Three16 => "three16",
            CompoundKind::ThreeTesseracts => "threeTesseracts",
            CompoundKind::DualPair24 => "dualPair24",
            CompoundKind::TwoThree16 => "twoThree16",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compound {
    pub kind: CompoundKind,
    pub components: Vec<CellComplex>,
    /// All components on the shared vertex set, labelled by component.
    pub union: CellComplex,
}

/// The three 16-cells inside `V24`, found as the classes of the relation
/// "orthogonal or antipodal".
pub fn sixteen_cell_classes(points: &[QuatEx]) -> Vec<Vec<QuatEx>> {
    let zero = QSqrt2::zero();
    let mut parent: Vec<usize> = (0..points.len()).collect();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = points[i].dot(&points[j]);
            if d == zero || d == QSqrt2::from_int(-1) {
                crate::symmetry::union_find::union(&mut parent, i, j);
            }
        }
    }
    crate::symmetry::union_find::classes(&mut parent)
        .into_iter()
        .map(|c| c.into_iter().map(|i| points[i].clone()).collect())
        .collect()
}

/// The three tesseracts in `V24`: the complements of the three 16-cells,
/// each checked to be a rotated standard tesseract and given its rotated
/// faces and cells. Ordered so component `k` misses the `k`-th 16-cell of
/// `V24` (`V8`, `V16+`, `V16-` in that order).
pub fn discover_tesseracts() -> Result<Vec<CellComplex>, PolytopeError> {
    let v24 = make_vertices(VertexSetName::V24).points;
    let mut classes = sixteen_cell_classes(&v24);
    let order = [
        make_vertices(VertexSetName::V8).points,
        make_vertices(VertexSetName::V16Plus).points,
        make_vertices(VertexSetName::V16Minus).points,
    ];
    classes.iter_mut().for_each(|c| c.sort());
    let standard = standard_tesseract();
    let mut out = Vec::new();
    for missing in &order {
        if !classes.contains(missing) {
            return Err(PolytopeError::NotThree16);
        }
        let rest: Vec<QuatEx> = v24
            .iter()
            .filter(|p| !missing.contains(p))
            .cloned()
            .collect();
        let g = tesseract_frame(&rest).ok_or(PolytopeError::NotATesseract)?;
        let t = standard.transformed(&g);
        debug_assert_eq!(t.edges, tesseract_edges(&t.vertices.points)?);
        out.push(t);
    }
    Ok(out)
}

/// Right multiplication by `(1 + i)/√2`, carrying `V24` onto `V24′`.
pub fn dual_map() -> Isometry {
    Isometry::right(QuatEx::over_sqrt2([1, 0, 0, 1])).expect("unit")
}

fn labelled_union(kind: CompoundKind, names: &[&str], components: &[CellComplex]) -> CellComplex {
    let mut all: Vec<QuatEx> = components
        .iter()
        .flat_map(|c| c.vertices.points.iter().cloned())
        .collect();
    all.sort();
    all.dedup();
    let vertices = VertexSet::new(kind.as_str(), all);
    let mut vlabels = vec![Vec::new(); vertices.len()];
    let mut edges: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    let mut faces = BTreeSet::new();
    let mut cells = BTreeSet::new();
    for (k, c) in components.iter().enumerate() {
        let map: Vec<usize> = c
            .vertices
            .points
            .iter()
            .map(|p| vertices.index_of(p).unwrap())
            .collect();
        for &m in &map {
            vlabels[m].push(k);
        }
        for &[a, b] in &c.edges {
            let (x, y) = (map[a].min(map[b]), map[a].max(map[b]));
            edges.entry([x, y]).or_default().push(k);
        }
        let remap = |s: &Vec<usize>| {
            let mut v: Vec<usize> = s.iter().map(|&i| map[i]).collect();
            v.sort_unstable();
            v
        };
        faces.extend(c.faces.iter().map(remap));
        cells.extend(c.cells.iter().map(remap));
    }
    CellComplex {
        kind: components[0].kind,
        vertices,
        edges: edges.keys().copied().collect(),
        faces: faces.into_iter().collect(),
        cells: cells.into_iter().collect(),
        membership: Membership {
            names: names.iter().map(|s| s.to_string()).collect(),
            vertices: vlabels,
            edges: edges.into_values().collect(),
        },
    }
}

fn three16() -> Vec<CellComplex> {
    [
        VertexSetName::V8,
        VertexSetName::V16Plus,
        VertexSetName::V16Minus,
    ]
    .into_iter()
    .map(|n| cell16_on(n.as_str(), make_vertices(n).points))
    .collect()
}

pub fn build_compound(kind: CompoundKind) -> Compound {
    let (names, components): (Vec<&str>, Vec<CellComplex>) = match kind {
        CompoundKind::Three16 => (vec!["V8", "V16+", "V16-"], three16()),
        CompoundKind::ThreeTesseracts => (
            vec!["T0", "T1", "T2"],
            discover_tesseracts().expect("V24 holds three tesseracts"),
        ),
        CompoundKind::DualPair24 => (
            vec!["V24", "V24'"],
            vec![
                build_complex(ComplexKind::Cell24),
                build_complex(ComplexKind::Cell24Dual),
            ],
        ),
        CompoundKind::TwoThree16 => {
            let first = three16();
            let g = dual_map();
            let second: Vec<CellComplex> = first
                .iter()
                .map(|c| {
                    let mut t = c.transformed(&g);
                    t.vertices.name = format!("{}'", c.vertices.name);
                    t
                })
                .collect();
            (
                vec!["V8", "V16+", "V16-", "V8'", "V16+'", "V16-'"],
                first.into_iter().chain(second).collect(),
            )
        }
    };
    let union = labelled_union(kind, &names, &components);
    Compound {
        kind,
        components,
        union,
    }
}

/// A point where edges of the three 16-cells cross, with the crossing
/// edges as `(component, edge)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingPoint {
    pub point: QuatEx,
    pub edges: Vec<(usize, usize)>,
}

/// Normalized midpoints of the 16-cell edges of `three16`, grouped by point.
pub fn crossing_points(compound: &Compound) -> Result<Vec<CrossingPoint>, PolytopeError> {
    if compound.kind != CompoundKind::Three16 {
        return Err(PolytopeError::NotThree16);
    }
    let mut hits: BTreeMap<QuatEx, Vec<(usize, usize)>> = BTreeMap::new();
    for (k, c) in compound.components.iter().enumerate() {
        for (e, &[a, b]) in c.edges.iter().enumerate() {
            let s = &c.vertices.points[a] + &c.vertices.points[b];
            let norm = s.norm2().sqrt_rational().ok_or(PolytopeError::NotThree16)?;
            let inv = norm.recip().map_err(|_| PolytopeError::NotThree16)?;
            hits.entry(s.scale(&inv)).or_default().push((k, e));
        }
    }
    Ok(hits
        .into_iter()
        .map(|(point, edges)| CrossingPoint { point, edges })
        .collect())
}

/// Lookup from point to index for a sorted point list.
pub fn index_map(points: &[QuatEx]) -> HashMap<&QuatEx, usize> {
    points.iter().enumerate().map(|(i, p)| (p, i)).collect()
}
