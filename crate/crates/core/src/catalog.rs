//! The fixed catalog of named symmetry groups used by scenes and exports.
//!
//! All catalog groups lie in `±[O×O]·2`, whose factors are drawn from the 48
//! unit quaternions of `O* = V24 ∪ V24′`. Elements are stored as index
//! triples into `O*` and act on it through precomputed multiplication
//! tables, so orbit and stabilizer scans are table lookups. The exact
//! [`Isometry`] of any element is available for cross-checks.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::exactnum::{QSqrt2, QuatEx};
use crate::polytope::{
    build_complex, discover_tesseracts, make_vertices, o_star_points, ComplexKind, VertexSetName,
};
use crate::symmetry::union_find::{classes, union};
use crate::symmetry::Isometry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSelector {
    /// Rotations preserving `V24`, order 576.
    Full24,
    /// All rotations `±[O×O]`, order 1152.
    DualPair,
    /// Stabilizer of the tesseract missing 16-cell `k`, order 192.
    Tess(u8),
    /// Stabilizer of 16-cell `k` (`V8`, `V16+`, `V16-`), order 192.
    Sixteen(u8),
    /// Rotations preserving the ω-directed edges, order 288.
    Directed24,
    /// Right multiplication by `T*`, order 24.
    Rings,
    Trivial,
}

impl GroupSelector {
    pub const ALL: [GroupSelector; 11] = [
        GroupSelector::Full24,
        GroupSelector::DualPair,
        GroupSelector::Tess(0),
        GroupSelector::Tess(1),
        GroupSelector::Tess(2),
        GroupSelector::Sixteen(0),
        GroupSelector::Sixteen(1),
        GroupSelector::Sixteen(2),
        GroupSelector::Directed24,
        GroupSelector::Rings,
        GroupSelector::Trivial,
    ];

    /// Selector from a script identifier and optional integer argument.
    pub fn resolve(name: &str, arg: Option<i64>) -> Option<GroupSelector> {
        let idx = |a: Option<i64>| match a {
            Some(k @ 0..=2) => Some(k as u8),
            _ => None,
        };
        match (name, arg) {
            ("full24", None) => Some(GroupSelector::Full24),
            ("dualpair", None) => Some(GroupSelector::DualPair),
            ("directed24", None) => Some(GroupSelector::Directed24),
            ("rings", None) => Some(GroupSelector::Rings),
            ("trivial", None) => Some(GroupSelector::Trivial),
            ("tess", a) => idx(a).map(GroupSelector::Tess),
            ("sixteen", a) => idx(a).map(GroupSelector::Sixteen),
            _ => None,
        }
    }

    /// Conway–Smith style label of the group type.
    pub fn type_label(self) -> &'static str {
        match self {
            GroupSelector::Full24 => "±½[O×O]",
            GroupSelector::DualPair => "±[O×O]",
            GroupSelector::Tess(_) | GroupSelector::Sixteen(_) => "±⅙[O×O]",
            GroupSelector::Directed24 => "±[T×T]",
            GroupSelector::Rings => "+[1×T]",
            GroupSelector::Trivial => "+[1×1]",
        }
    }

    pub fn hedge(self) -> Option<&'static str> {
        match self {
            GroupSelector::Directed24 => Some("hedged: (we think) ±[T×T]"),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSelector::Full24 => f.write_str("full24"),
            GroupSelector::DualPair => f.write_str("dualpair"),
            GroupSelector::Tess(k) => write!(f, "tess({k})"),
            GroupSelector::Sixteen(k) => write!(f, "sixteen({k})"),
            GroupSelector::Directed24 => f.write_str("directed24"),
            GroupSelector::Rings => f.write_str("rings"),
            GroupSelector::Trivial => f.write_str("trivial"),
        }
    }
}

impl FromStr for GroupSelector {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parsed = match s.split_once('(') {
            Some((name, rest)) => {
                let arg = rest.strip_suffix(')').and_then(|a| a.trim().parse().ok());
                arg.and_then(|a| GroupSelector::resolve(name.trim(), Some(a)))
            }
            None => GroupSelector::resolve(s, None),
        };
        parsed.ok_or_else(|| format!("unknown group {s:?}"))
    }
}

/// `x ↦ o[l]·x·o[r]`, or with `x̄` when `reflect`, as indices into `O*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableElement {
    pub l: u8,
    pub r: u8,
    pub reflect: bool,
}

/// `O*` with its multiplication, negation and conjugation tables.
#[derive(Debug)]
pub struct Ambient {
    pub points: Vec<QuatEx>,
    mul: Vec<[u8; 48]>,
    neg: Vec<u8>,
    conj: Vec<u8>,
    /// Ambient index of each `V24` vertex, in `V24` order.
    pub v24: Vec<u8>,
    /// `V24` index of each ambient point, if any.
    pub v24_of: Vec<Option<usize>>,
}

impl Ambient {
    fn build() -> Ambient {
        let points = o_star_points();
        let index: HashMap<&QuatEx, u8> = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u8))
            .collect();
        let at = |q: &QuatEx| *index.get(q).expect("O* is closed");
        let mul = points
            .iter()
            .map(|a| {
                let mut row = [0u8; 48];
                for (j, b) in points.iter().enumerate() {
                    row[j] = at(&(a * b));
                }
                row
            })
            .collect();
        let neg = points.iter().map(|p| at(&-p)).collect();
        let conj = points.iter().map(|p| at(&p.conj())).collect();
        let v24pts = make_vertices(VertexSetName::V24).points;
        let v24: Vec<u8> = v24pts.iter().map(at).collect();
        let mut v24_of = vec![None; 48];
        for (i, &a) in v24.iter().enumerate() {
            v24_of[a as usize] = Some(i);
        }
        Ambient {
            points,
            mul,
            neg,
            conj,
            v24,
            v24_of,
        }
    }

    pub fn index_of(&self, q: &QuatEx) -> Option<u8> {
        self.points.binary_search(q).ok().map(|i| i as u8)
    }

    pub fn element(&self, l: u8, r: u8, reflect: bool) -> TableElement {
        if self.points[l as usize].is_sign_canonical() {
            TableElement { l, r, reflect }
        } else {
            TableElement {
                l: self.neg[l as usize],
                r: self.neg[r as usize],
                reflect,
            }
        }
    }

    pub fn apply(&self, g: TableElement, x: u8) -> u8 {
        let x = if g.reflect { self.conj[x as usize] } else { x };
        self.mul[self.mul[g.l as usize][x as usize] as usize][g.r as usize]
    }

    pub fn perm(&self, g: TableElement) -> Vec<u8> {
        (0..48).map(|x| self.apply(g, x)).collect()
    }

    /// `g ∘ h`.
    pub fn compose(&self, g: TableElement, h: TableElement) -> TableElement {
        let m = |a: u8, b: u8| self.mul[a as usize][b as usize];
        let c = |a: u8| self.conj[a as usize];
        let (l, r) = if g.reflect {
            (m(g.l, c(h.r)), m(c(h.l), g.r))
        } else {
            (m(g.l, h.l), m(h.r, g.r))
        };
        self.element(l, r, g.reflect ^ h.reflect)
    }

    pub fn isometry(&self, g: TableElement) -> Isometry {
        Isometry::new(
            self.points[g.l as usize].clone(),
            self.points[g.r as usize].clone(),
            g.reflect,
        )
        .expect("O* elements are unit")
    }

    fn set_preserved(&self, g: TableElement, set: &[bool]) -> bool {
        (0..48u8).all(|x| !set[x as usize] || set[self.apply(g, x) as usize])
    }
}

#[derive(Debug, Clone)]
pub struct CatalogGroup {
    pub selector: GroupSelector,
    /// Sorted.
    pub elements: Vec<TableElement>,
    /// Action of each element on the 48 ambient points.
    pub perms: Vec<Vec<u8>>,
    pub generators: Vec<TableElement>,
}

impl CatalogGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn name(&self) -> String {
        self.selector.to_string()
    }

    pub fn isometries(&self) -> Vec<Isometry> {
        let amb = ambient();
        self.elements.iter().map(|&g| amb.isometry(g)).collect()
    }

    pub fn generator_descriptions(&self) -> Vec<String> {
        let amb = ambient();
        self.generators
            .iter()
            .map(|&g| amb.isometry(g).to_string())
            .collect()
    }

    /// Orbit id of each edge of the 24-cell edge list `edges` (indices into
    /// `V24`). Images leaving `V24` or landing on non-edges are ignored, so
    /// for groups not preserving `V24` the result is the partition generated
    /// by the elements that keep an edge inside the edge set. Orbit ids are
    /// numbered by smallest edge index.
    pub fn edge_orbits(&self, edges: &[[usize; 2]]) -> Vec<usize> {
        let amb = ambient();
        let lookup: HashMap<[usize; 2], usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut parent: Vec<usize> = (0..edges.len()).collect();
        for perm in &self.perms {
            for (i, &[a, b]) in edges.iter().enumerate() {
                let ia = amb.v24_of[perm[amb.v24[a] as usize] as usize];
                let ib = amb.v24_of[perm[amb.v24[b] as usize] as usize];
                if let (Some(x), Some(y)) = (ia, ib) {
                    if let Some(&j) = lookup.get(&[x.min(y), x.max(y)]) {
                        union(&mut parent, i, j);
                    }
                }
            }
        }
        let mut ids = vec![0; edges.len()];
        for (k, class) in classes(&mut parent).into_iter().enumerate() {
            for e in class {
                ids[e] = k;
            }
        }
        ids
    }

    /// Image of `V24` vertex `v` under element `k`, if it stays in `V24`.
    pub fn apply_v24(&self, k: usize, v: usize) -> Option<usize> {
        let amb = ambient();
        amb.v24_of[self.perms[k][amb.v24[v] as usize] as usize]
    }
}

#[derive(Debug)]
pub struct Catalog {
    groups: Vec<CatalogGroup>,
}

impl Catalog {
    pub fn get(&self, sel: GroupSelector) -> &CatalogGroup {
        self.groups
            .iter()
            .find(|g| g.selector == sel)
            .expect("every selector is built")
    }

    pub fn groups(&self) -> &[CatalogGroup] {
        &self.groups
    }
}

static AMBIENT: OnceLock<Ambient> = OnceLock::new();
static CATALOG: OnceLock<Catalog> = OnceLock::new();

pub fn ambient() -> &'static Ambient {
    AMBIENT.get_or_init(Ambient::build)
}

pub fn catalog() -> &'static Catalog {
    CATALOG.get_or_init(build_catalog)
}

pub fn group(sel: GroupSelector) -> &'static CatalogGroup {
    catalog().get(sel)
}

/// Each edge of the 24-cell directed `p → r` so that `r·p⁻¹` is conjugate
/// in `T*` to `ω`: real part ½ and an even number of negative imaginary
/// coordinates. Left multiplication by `ω` walks `1 → ω → ω² → −1` along
/// such edges. Returned as `[from, to]` indices into `V24`.
pub fn omega_directed_edges(edges: &[[usize; 2]]) -> Vec<[usize; 2]> {
    let pts = make_vertices(VertexSetName::V24).points;
    edges
        .iter()
        .map(|&[a, b]| {
            let e = &pts[b] * &pts[a].conj();
            let negatives = [&e.x, &e.y, &e.z].iter().filter(|c| c.signum() < 0).count();
            debug_assert_eq!(*e.re(), QSqrt2::half());
            if negatives % 2 == 0 {
                [a, b]
            } else {
                [b, a]
            }
        })
        .collect()
}

fn filtered(all: &[TableElement], keep: impl Fn(TableElement) -> bool) -> Vec<TableElement> {
    all.iter().copied().filter(|&g| keep(g)).collect()
}

/// Greedy generating set: walk the elements in order, keeping each one not
/// already in the closure of those kept.
fn generators_of(amb: &Ambient, elements: &[TableElement]) -> Vec<TableElement> {
    let id = amb.element(
        amb.index_of(&QuatEx::one()).unwrap(),
        amb.index_of(&QuatEx::one()).unwrap(),
        false,
    );
    let mut gens: Vec<TableElement> = Vec::new();
    let mut span: HashSet<TableElement> = HashSet::from([id]);
    for &g in elements {
        if span.contains(&g) {
            continue;
        }
        gens.push(g);
        let mut work: Vec<TableElement> = span.iter().copied().collect();
        while let Some(x) = work.pop() {
            for &h in &gens {
                let y = amb.compose(h, x);
                if span.insert(y) {
                    work.push(y);
                }
            }
        }
        if span.len() == elements.len() {
            break;
        }
    }
    gens
}

fn build_catalog() -> Catalog {
    let amb = ambient();
    let n = 48u8;
    let mut rotations = Vec::with_capacity(1152);
    for l in 0..n {
        if !amb.points[l as usize].is_sign_canonical() {
            continue;
        }
        for r in 0..n {
            rotations.push(TableElement {
                l,
                r,
                reflect: false,
            });
        }
    }
    let mask = |pts: &[QuatEx]| {
        let mut m = vec![false; 48];
        for p in pts {
            m[amb.index_of(p).expect("point of O*") as usize] = true;
        }
        m
    };
    let v24 = make_vertices(VertexSetName::V24).points;
    let v24_mask = mask(&v24);
    let full24 = filtered(&rotations, |g| amb.set_preserved(g, &v24_mask));
    let tesseracts = discover_tesseracts().expect("V24 holds three tesseracts");
    let sixteens = [
        VertexSetName::V8,
        VertexSetName::V16Plus,
        VertexSetName::V16Minus,
    ];
    let cell24 = build_complex(ComplexKind::Cell24);
    let directed: HashSet<[u8; 2]> = omega_directed_edges(&cell24.edges)
        .into_iter()
        .map(|[a, b]| [amb.v24[a], amb.v24[b]])
        .collect();
    let one = amb.index_of(&QuatEx::one()).unwrap();

    let mut groups = Vec::new();
    for sel in GroupSelector::ALL {
        let elements = match sel {
            GroupSelector::DualPair => rotations.clone(),
            GroupSelector::Full24 => full24.clone(),
            GroupSelector::Tess(k) => {
                let m = mask(&tesseracts[k as usize].vertices.points);
                filtered(&full24, |g| amb.set_preserved(g, &m))
            }
            GroupSelector::Sixteen(k) => {
                let m = mask(&make_vertices(sixteens[k as usize]).points);
                filtered(&full24, |g| amb.set_preserved(g, &m))
            }
            GroupSelector::Directed24 => filtered(&full24, |g| {
                directed
                    .iter()
                    .all(|&[a, b]| directed.contains(&[amb.apply(g, a), amb.apply(g, b)]))
            }),
            GroupSelector::Rings => v24
                .iter()
                .map(|b| amb.element(one, amb.index_of(b).unwrap(), false))
                .collect(),
            GroupSelector::Trivial => vec![amb.element(one, one, false)],
        };
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let perms = elements.iter().map(|&g| amb.perm(g)).collect();
        let generators = generators_of(amb, &elements);
        groups.push(CatalogGroup {
            selector: sel,
            elements,
            perms,
            generators,
        });
    }
    Catalog { groups }
}
