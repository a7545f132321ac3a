use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use super::cyclic::{Factor, PairElement};
use super::{Isometry, SymmetryError};
use crate::exactnum::QuatEx;

/// Closure stops with [`SymmetryError::CapExceeded`] beyond this many elements.
pub const DEFAULT_CAP: usize = 20_000;

pub trait GroupElement: Clone + Eq + Ord + Hash + Debug + Send + Sync {
    /// `self ∘ other`, applying `other` first.
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn is_identity(&self) -> bool;
}

/// A finite group held as its full, sorted element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymGroup<E: GroupElement = Isometry> {
    pub name: Option<String>,
    generators: Vec<E>,
    elements: Vec<E>,
}

impl<E: GroupElement> SymGroup<E> {
    /// Worklist closure of `generators` starting from `identity`.
    pub fn closure(identity: E, generators: Vec<E>, cap: usize) -> Result<Self, SymmetryError> {
        let mut seen: HashSet<E> = HashSet::new();
        let mut work = vec![identity.clone()];
        seen.insert(identity);
        while let Some(x) = work.pop() {
            for g in &generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(SymmetryError::CapExceeded(cap));
                    }
                    seen.insert(y.clone());
                    work.push(y);
                }
            }
        }
        let mut elements: Vec<E> = seen.into_iter().collect();
        elements.sort();
        Ok(SymGroup {
            name: None,
            generators,
            elements,
        })
    }

    /// Wraps an element list already known to form a group.
    pub fn from_elements(mut elements: Vec<E>, generators: Vec<E>) -> Self {
        elements.sort();
        elements.dedup();
        SymGroup {
            name: None,
            generators,
            elements,
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, E> {
        self.elements.iter()
    }

    /// Checks identity, inverses and closure under the generators, which
    /// for a finite set implies closure under composition. When the group
    /// has no recorded generators every pair is checked.
    pub fn verify(&self) -> bool {
        if !self.elements.iter().any(E::is_identity) {
            return false;
        }
        if !self.elements.iter().all(|x| self.contains(&x.inverse())) {
            return false;
        }
        let gens: &[E] = if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        };
        gens.iter().all(|g| self.contains(g))
            && self
                .elements
                .iter()
                .all(|x| gens.iter().all(|g| self.contains(&g.compose(x))))
    }

    pub fn is_subgroup_of(&self, other: &SymGroup<E>) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }
}

/// Closure of exact isometries; an empty generator list gives the trivial group.
pub fn generate_group(generators: &[Isometry], cap: usize) -> Result<SymGroup, SymmetryError> {
    SymGroup::closure(Isometry::identity(), generators.to_vec(), cap)
}

fn check_factor_set<F: Factor>(set: &[F]) -> Result<(), SymmetryError> {
    let members: HashSet<&F> = set.iter().collect();
    for a in set {
        if !members.contains(&a.neg()) {
            return Err(SymmetryError::NotClosed);
        }
        for b in set {
            if !members.contains(&a.mul(b)) {
                return Err(SymmetryError::NotClosed);
            }
        }
    }
    Ok(())
}

/// `±[A×B]`: every `x ↦ a·x·b` with `a ∈ left`, `b ∈ right`. Both inputs
/// must be binary groups (closed under product and negation); the result
/// has order `|left|·|right|/2`.
pub fn product_group(left: &[QuatEx], right: &[QuatEx]) -> Result<SymGroup, SymmetryError> {
    check_factor_set(left)?;
    check_factor_set(right)?;
    let mut elements = Vec::with_capacity(left.len() * right.len());
    for a in left {
        for b in right {
            elements.push(Isometry::new(a.clone(), b.clone(), false)?);
        }
    }
    Ok(SymGroup::from_elements(elements, Vec::new()))
}

/// `±[A×B]` where either factor may be a symbolic cyclic group.
pub fn product_group_symbolic<A: Factor, B: Factor>(
    left: &[A],
    right: &[B],
) -> Result<SymGroup<PairElement<A, B>>, SymmetryError> {
    check_factor_set(left)?;
    check_factor_set(right)?;
    let mut elements = Vec::with_capacity(left.len() * right.len());
    for a in left {
        for b in right {
            elements.push(PairElement::new(a.clone(), b.clone()));
        }
    }
    Ok(SymGroup::from_elements(elements, Vec::new()))
}

/// A structure whose setwise stabilizer is wanted.
#[derive(Debug, Clone)]
pub enum Target {
    Vertices(Vec<QuatEx>),
    /// Undirected edges as index pairs into `points`.
    Edges {
        points: Vec<QuatEx>,
        edges: Vec<[usize; 2]>,
    },
    /// Ordered edges `from → to`.
    DirectedEdges {
        points: Vec<QuatEx>,
        edges: Vec<[usize; 2]>,
    },
    /// A family of point sets permuted among themselves.
    Components(Vec<Vec<QuatEx>>),
}

impl Target {
    pub fn preserved_by(&self, g: &Isometry) -> bool {
        match self {
            Target::Vertices(points) => {
                let set: HashSet<&QuatEx> = points.iter().collect();
                points.iter().all(|p| set.contains(&g.apply(p)))
            }
            Target::Edges { points, edges } | Target::DirectedEdges { points, edges } => {
                let directed = matches!(self, Target::DirectedEdges { .. });
                let index: HashMap<&QuatEx, usize> =
                    points.iter().enumerate().map(|(i, p)| (p, i)).collect();
                let images: Option<Vec<usize>> = points
                    .iter()
                    .map(|p| index.get(&g.apply(p)).copied())
                    .collect();
                let Some(images) = images else {
                    return false;
                };
                let key = |a: usize, b: usize| if directed || a < b { [a, b] } else { [b, a] };
                let set: HashSet<[usize; 2]> = edges.iter().map(|e| key(e[0], e[1])).collect();
                edges
                    .iter()
                    .all(|e| set.contains(&key(images[e[0]], images[e[1]])))
            }
            Target::Components(parts) => {
                let sets: Vec<Vec<QuatEx>> = parts
                    .iter()
                    .map(|p| {
                        let mut s = p.clone();
                        s.sort();
                        s
                    })
                    .collect();
                let family: HashSet<&Vec<QuatEx>> = sets.iter().collect();
                sets.iter().all(|s| {
                    let mut img: Vec<QuatEx> = s.iter().map(|p| g.apply(p)).collect();
                    img.sort();
                    family.contains(&img)
                })
            }
        }
    }
}

/// Subgroup of `g` preserving `target` setwise, by brute-force filtering.
pub fn stabilizer(g: &SymGroup, target: &Target) -> SymGroup {
    use rayon::prelude::*;
    let kept: Vec<Isometry> = g
        .elements()
        .par_iter()
        .filter(|e| target.preserved_by(e))
        .cloned()
        .collect();
    SymGroup::from_elements(kept, Vec::new())
}

/// Adjoins a reflection `witness` that preserves `target` to a group
/// preserving `target`. The result has twice the order unless `g` already
/// contains the witness.
pub fn extend_reflections(
    g: &SymGroup,
    witness: &Isometry,
    target: &Target,
) -> Result<SymGroup, SymmetryError> {
    if !target.preserved_by(witness) {
        return Err(SymmetryError::WitnessRejected);
    }
    if g.contains(witness) {
        return Ok(g.clone());
    }
    // g ∪ w·g is a group exactly when w normalizes g and w² ∈ g
    let w_inv = witness.inverse();
    let normalizes = g
        .elements()
        .iter()
        .all(|e| g.contains(&witness.compose(e).compose(&w_inv)));
    if !normalizes || !g.contains(&witness.compose(witness)) {
        return Err(SymmetryError::WitnessRejected);
    }
    let mut elements: Vec<Isometry> = g.elements().to_vec();
    elements.extend(g.elements().iter().map(|e| witness.compose(e)));
    let generators = if g.generators().is_empty() {
        Vec::new()
    } else {
        let mut gens = g.generators().to_vec();
        gens.push(witness.clone());
        gens
    };
    Ok(SymGroup::from_elements(elements, generators))
}

/// Orbits of `items` (indices into `points`) under `g`. Each orbit lists
/// item indices ascending; orbits are ordered by their smallest member.
pub fn orbits(g: &SymGroup, points: &[QuatEx]) -> Result<Vec<Vec<usize>>, SymmetryError> {
    let index: HashMap<&QuatEx, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..points.len()).collect();
    for e in g.elements() {
        for (i, p) in points.iter().enumerate() {
            let j = *index.get(&e.apply(p)).ok_or(SymmetryError::NotPreserved)?;
            union(&mut parent, i, j);
        }
    }
    Ok(collect_classes(&mut parent))
}

pub(crate) fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub(crate) fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        // smaller root wins so representatives are the minimum index
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

pub(crate) fn collect_classes(parent: &mut [usize]) -> Vec<Vec<usize>> {
    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..parent.len() {
        let r = find(parent, i);
        by_root.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
    out.sort_by_key(|c| c[0]);
    out
}
