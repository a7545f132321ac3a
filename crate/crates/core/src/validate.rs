//! The validation suite behind `octaplex validate`: every structural count
//! and group order recomputed from scratch and compared with its expected
//! value.

use std::collections::HashSet;
use std::fmt::Write;

use crate::catalog::omega_directed_edges;
use crate::exactnum::{QSqrt2, QuatEx};
use crate::fixture::{build_fixture, FixtureConfig};
use crate::polytope::{
    build_complex, build_compound, crossing_points, derive_cells_24cell, derive_edges, dual_map,
    make_vertices, CellComplex, ComplexKind, CompoundKind, VertexSetName,
};
use crate::projection::{q4, sample_arc, stereo, v3, Stereo, Vec3, ViewPose};
use crate::symmetry::{
    edge_rings, extend_reflections, generate_group, product_group, slide_orbit, stabilizer,
    CyclicUnit, Fibration, Isometry, PairElement, Side, SymGroup, Target, DEFAULT_CAP,
};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub section: &'static str,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn add(
        &mut self,
        section: &'static str,
        name: &str,
        expected: impl ToString,
        computed: impl ToString,
    ) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.checks.push(Check {
            section,
            name: name.to_string(),
            pass: expected == computed,
            expected,
            computed,
            note: None,
        });
    }

    fn bound(&mut self, section: &'static str, name: &str, limit: f64, value: f64) {
        self.checks.push(Check {
            section,
            name: name.to_string(),
            expected: format!("< {limit:e}"),
            computed: format!("{value:.3e}"),
            pass: value < limit,
            note: None,
        });
    }

    fn note(&mut self, note: &str) {
        if let Some(c) = self.checks.last_mut() {
            c.note = Some(note.to_string());
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Plain-text table, one row per check.
    pub fn table(&self) -> String {
        let w = |f: fn(&Check) -> usize, min: usize| {
            self.checks.iter().map(f).max().unwrap_or(0).max(min)
        };
        let wn = w(|c| c.name.chars().count(), 5);
        let we = w(|c| c.expected.chars().count(), 8);
        let wc = w(|c| c.computed.chars().count(), 8);
        let pad =
            |s: &str, n: usize| format!("{s}{}", " ".repeat(n.saturating_sub(s.chars().count())));
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<11} {} {} {} result",
            "section",
            pad("check", wn),
            pad("expected", we),
            pad("computed", wc)
        );
        for c in &self.checks {
            let _ = write!(
                out,
                "{:<11} {} {} {} {}",
                c.section,
                pad(&c.name, wn),
                pad(&c.expected, we),
                pad(&c.computed, wc),
                if c.pass { "pass" } else { "FAIL" }
            );
            if let Some(n) = &c.note {
                let _ = write!(out, "  ({n})");
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

#[derive(Debug, Clone, Default)]
pub struct ValidateOptions {
    /// Replaces this `V24` vertex by a point outside `V24` before the
    /// incidence and stabilizer checks. A negative control.
    pub corrupt_vertex: Option<usize>,
}

fn counts(c: &CellComplex) -> String {
    let (v, e, f, k) = c.counts();
    format!("({v}, {e}, {f}, {k})")
}

fn degrees(n: usize, edges: &[[usize; 2]]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &[a, b] in edges {
        d[a] += 1;
        d[b] += 1;
    }
    d
}

fn uniform(values: &[usize]) -> String {
    let set: HashSet<&usize> = values.iter().collect();
    let mut v: Vec<&usize> = set.into_iter().collect();
    v.sort();
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("/")
}

fn incidence(r: &mut Report, v24: &[QuatEx]) {
    let dual = make_vertices(VertexSetName::V24Dual).points;
    let edges = derive_edges(v24, &QSqrt2::half());
    let computed = match derive_cells_24cell(v24, &dual) {
        Ok((cells, faces)) => {
            let mut per_vertex = vec![0; v24.len()];
            cells.iter().flatten().for_each(|&v| per_vertex[v] += 1);
            let euler =
                v24.len() as i64 - edges.len() as i64 + faces.len() as i64 - cells.len() as i64;
            r.add(
                "incidence",
                "cell24 (V, E, F, C)",
                "(24, 96, 96, 24)",
                format!(
                    "({}, {}, {}, {})",
                    v24.len(),
                    edges.len(),
                    faces.len(),
                    cells.len()
                ),
            );
            r.add("incidence", "cell24 Euler V-E+F-C", 0, euler);
            uniform(&per_vertex)
        }
        Err(e) => {
            r.add(
                "incidence",
                "cell24 (V, E, F, C)",
                "(24, 96, 96, 24)",
                format!("error: {e}"),
            );
            "error".to_string()
        }
    };
    r.add("incidence", "cell24 cells per vertex", 6, computed);
    r.add(
        "incidence",
        "cell24 edges per vertex",
        8,
        uniform(&degrees(v24.len(), &edges)),
    );
    for (kind, want) in [
        (ComplexKind::Cell16, "(8, 24, 32, 16)"),
        (ComplexKind::Tesseract, "(16, 32, 24, 8)"),
    ] {
        let c = build_complex(kind);
        r.add(
            "incidence",
            &format!("{} (V, E, F, C)", kind.as_str()),
            want,
            counts(&c),
        );
        r.add(
            "incidence",
            &format!("{} Euler V-E+F-C", kind.as_str()),
            0,
            c.euler(),
        );
    }
}

fn left_mults(set: &[QuatEx]) -> Vec<Isometry> {
    set.iter()
        .map(|q| Isometry::left(q.clone()).expect("unit"))
        .collect()
}

fn right_mults(set: &[QuatEx]) -> Vec<Isometry> {
    set.iter()
        .map(|q| Isometry::right(q.clone()).expect("unit"))
        .collect()
}

fn groups(r: &mut Report, v24: &[QuatEx]) {
    let t_gens = [QuatEx::omega(), QuatEx::i()];
    let o_gens = [QuatEx::over_sqrt2([1, 0, 0, 1]), QuatEx::omega()];
    let closure = |gens: Vec<Isometry>| generate_group(&gens, DEFAULT_CAP).map(|g| g.order());
    let show = |x: Result<usize, _>| match x {
        Ok(n) => n.to_string(),
        Err(e) => format!("error: {e}"),
    };
    r.add(
        "groups",
        "|T*| (closure)",
        24,
        show(closure(left_mults(&t_gens))),
    );
    r.add(
        "groups",
        "|O*| (closure)",
        48,
        show(closure(left_mults(&o_gens))),
    );

    let mut gens = left_mults(&o_gens);
    gens.extend(right_mults(&o_gens));
    let oo = match generate_group(&gens, DEFAULT_CAP) {
        Ok(g) => g,
        Err(e) => {
            r.add("groups", "±[O×O] (closure)", 1152, format!("error: {e}"));
            return;
        }
    };
    r.add("groups", "±[O×O] (closure)", 48 * 48 / 2, oo.order());
    r.note("|O*|·|O*|/2");

    let full = stabilizer(&oo, &Target::Vertices(v24.to_vec()));
    r.add("groups", "V24 rotation stabilizer", 576, full.order());
    r.note("±½[O×O], |O*|²/4");

    let with_refl = extend_reflections(
        &full,
        &Isometry::conjugation(),
        &Target::Vertices(v24.to_vec()),
    );
    r.add(
        "groups",
        "V24 with reflections",
        1152,
        show(with_refl.map(|g| g.order())),
    );
    r.note("±[O×O]·2 restricted to V24");

    let tess: Vec<QuatEx> = {
        let v8 = make_vertices(VertexSetName::V8).points;
        v24.iter().filter(|p| !v8.contains(p)).cloned().collect()
    };
    let st = stabilizer(&full, &Target::Vertices(tess));
    r.add("groups", "single-tesseract stabilizer", 576 / 3, st.order());
    r.note("±⅙[O×O]");

    let cell24 = build_complex(ComplexKind::Cell24);
    let directed = Target::DirectedEdges {
        points: cell24.points().to_vec(),
        edges: omega_directed_edges(&cell24.edges),
    };
    let dstab = stabilizer(&full, &directed);
    let t = make_vertices(VertexSetName::V24).points;
    let tt = product_group(&t, &t)
        .map(|g| g.order() == dstab.order() && g.elements() == dstab.elements());
    r.add(
        "groups",
        "directed-edge stabilizer",
        24 * 24 / 2,
        dstab.order(),
    );
    r.note(match tt {
        Ok(true) => "type (we think) ±[T×T]; equals ±[T×T] element for element",
        _ => "type (we think) ±[T×T]; differs from ±[T×T]",
    });

    let one = QuatEx::one();
    let c6 = CyclicUnit::generator(QuatEx::from_rationals([1, 1, 1, 0], 1), 6).expect("axis");
    let tc6 = SymGroup::closure(
        PairElement::new(one.clone(), c6.power(0)),
        vec![
            PairElement::new(QuatEx::omega(), c6.power(0)),
            PairElement::new(QuatEx::i(), c6.power(0)),
            PairElement::new(one.clone(), c6.clone()),
        ],
        DEFAULT_CAP,
    );
    r.add(
        "groups",
        "±[T×C6] (closure)",
        24 * 12 / 2,
        show(tc6.map(|g| g.order())),
    );
    r.note("|T*|·|2C6|/2");

    let c2 = CyclicUnit::generator(QuatEx::i(), 2).expect("axis");
    let c11 = CyclicUnit::generator(QuatEx::j(), 11).expect("axis");
    let c2c11 = SymGroup::closure(
        PairElement::new(c2.power(0), c11.power(0)),
        vec![
            PairElement::new(c2.clone(), c11.power(0)),
            PairElement::new(c2.power(0), c11.clone()),
        ],
        DEFAULT_CAP,
    );
    r.add(
        "groups",
        "±[C2×C11] (closure)",
        4 * 22 / 2,
        show(c2c11.map(|g| g.order())),
    );
    r.note("|2C2|·|2C11|/2");
}

fn rings(r: &mut Report) {
    let c = build_complex(ComplexKind::Cell24);
    let p = c.points();
    let minus_one = -QuatEx::one();
    let mut good = 0;
    for &[a, b] in &c.edges {
        for (x, y) in [(a, b), (b, a)] {
            let e = &p[x] * &p[y].conj();
            if &(&e * &e) * &e == minus_one {
                good += 1;
            }
        }
    }
    r.add("rings", "directed edges with (p·r⁻¹)³ = −1", 192, good);
    match edge_rings(&c) {
        Ok(part) => {
            let sizes = uniform(&part.rings.iter().map(|x| x.edges.len()).collect::<Vec<_>>());
            r.add(
                "rings",
                "rings × edges per ring",
                "16 × 6",
                format!("{} × {sizes}", part.rings.len()),
            );
            let fam = uniform(
                &part
                    .families
                    .iter()
                    .map(|f| f.rings.len())
                    .collect::<Vec<_>>(),
            );
            r.add(
                "rings",
                "families × rings per family",
                "4 × 4",
                format!("{} × {fam}", part.families.len()),
            );
        }
        Err(e) => r.add(
            "rings",
            "rings × edges per ring",
            "16 × 6",
            format!("error: {e}"),
        ),
    }
}

fn compounds(r: &mut Report) {
    let t = build_compound(CompoundKind::ThreeTesseracts);
    let sizes: Vec<usize> = t.components.iter().map(|c| c.edges.len()).collect();
    let per_edge = uniform(
        &t.union
            .membership
            .edges
            .iter()
            .map(Vec::len)
            .collect::<Vec<_>>(),
    );
    r.add(
        "compounds",
        "three tesseracts: edges each",
        "32/32/32",
        sizes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("/"),
    );
    r.add(
        "compounds",
        "three tesseracts: union edges, owners",
        "96, 1",
        format!("{}, {per_edge}", t.union.edges.len()),
    );
    let per_vertex = uniform(
        &t.union
            .membership
            .vertices
            .iter()
            .map(Vec::len)
            .collect::<Vec<_>>(),
    );
    r.add("compounds", "tesseracts per vertex", 2, per_vertex);

    let s = build_compound(CompoundKind::Three16);
    let edge_total: usize = s.components.iter().map(|c| c.edges.len()).sum();
    r.add("compounds", "three 16-cells: edges", 72, edge_total);
    match crossing_points(&s) {
        Ok(points) => {
            let mut got: Vec<QuatEx> = points.iter().map(|c| c.point.clone()).collect();
            got.sort();
            let on_dual = got == make_vertices(VertexSetName::V24Dual).points;
            let per = uniform(&points.iter().map(|c| c.edges.len()).collect::<Vec<_>>());
            r.add(
                "compounds",
                "midpoints = V24′, edges per point",
                "true, 3",
                format!("{on_dual}, {per}"),
            );
        }
        Err(e) => r.add(
            "compounds",
            "midpoints = V24′, edges per point",
            "true, 3",
            format!("error: {e}"),
        ),
    }

    let g = dual_map();
    let mut img: Vec<QuatEx> = make_vertices(VertexSetName::V24)
        .points
        .iter()
        .map(|p| g.apply(p))
        .collect();
    img.sort();
    img.dedup();
    r.add(
        "compounds",
        "dual map V24 → V24′ bijective",
        true,
        img == make_vertices(VertexSetName::V24Dual).points,
    );
}

fn hopf(r: &mut Report) {
    let v24 = make_vertices(VertexSetName::V24).points;
    let f = Fibration::new(QuatEx::i(), Side::Left).expect("unit axis");
    let fibers = f.fibers(&v24);
    let sizes = uniform(&fibers.iter().map(Vec::len).collect::<Vec<_>>());
    r.add(
        "hopf",
        "left i-fibers of V24",
        "6 × 4",
        format!("{} × {sizes}", fibers.len()),
    );
    let v8 = make_vertices(VertexSetName::V8).points;
    match slide_orbit(
        &QuatEx::from_rationals([1, 1, 1, 0], 1),
        6,
        Side::Right,
        &v8,
    ) {
        Ok(o) => r.add(
            "hopf",
            "V8 slide by π/6: period, exact return, images",
            "12, true, 6",
            format!(
                "{}, {}, {}",
                o.period,
                o.returns_exactly(),
                o.distinct_count()
            ),
        ),
        Err(e) => r.add(
            "hopf",
            "V8 slide by π/6",
            "12, true, 6",
            format!("error: {e}"),
        ),
    }
}

/// Largest distance of `points` from the circle, or line, through the
/// first, middle and last of them.
pub fn circle_deviation(points: &[Vec3]) -> f64 {
    let (p0, p1, p2) = (
        points[0],
        points[points.len() / 2],
        points[points.len() - 1],
    );
    let a = v3::sub(&p1, &p0);
    let b = v3::sub(&p2, &p0);
    let n = v3::cross(&a, &b);
    let nn = v3::dot(&n, &n);
    let scale = v3::norm(&a).max(v3::norm(&b)).max(1.0);
    if nn.sqrt() < 1e-12 * scale * scale {
        let d = v3::normalize(&b);
        return points
            .iter()
            .map(|p| {
                let q = v3::sub(p, &p0);
                v3::norm(&v3::sub(&q, &v3::scale(&d, v3::dot(&q, &d))))
            })
            .fold(0.0, f64::max);
    }
    let num = v3::cross(
        &v3::sub(
            &v3::scale(&b, v3::dot(&a, &a)),
            &v3::scale(&a, v3::dot(&b, &b)),
        ),
        &n,
    );
    let center = v3::add(&p0, &v3::scale(&num, 0.5 / nn));
    let radius = v3::norm(&v3::sub(&p0, &center));
    let unit_n = v3::scale(&n, 1.0 / nn.sqrt());
    points
        .iter()
        .map(|p| {
            let q = v3::sub(p, &center);
            let off_plane = v3::dot(&q, &unit_n).abs();
            let in_plane = v3::sub(&q, &v3::scale(&unit_n, v3::dot(&q, &unit_n)));
            off_plane.max((v3::norm(&in_plane) - radius).abs())
        })
        .fold(0.0, f64::max)
}

fn projection(r: &mut Report) {
    let show = |s: Result<Stereo, _>| match s {
        Ok(Stereo::Point(p)) => format!("({}, {}, {})", p[0] + 0.0, p[1] + 0.0, p[2] + 0.0),
        Ok(Stereo::AtInfinity) => "AtInfinity".to_string(),
        Err(e) => format!("error: {e}"),
    };
    r.add(
        "projection",
        "π(1)",
        "(0, 0, 0)",
        show(stereo(&[0.0, 0.0, 0.0, 1.0])),
    );
    r.add(
        "projection",
        "π(i)",
        "(1, 0, 0)",
        show(stereo(&[1.0, 0.0, 0.0, 0.0])),
    );
    r.add(
        "projection",
        "π(−1)",
        "AtInfinity",
        show(stereo(&[0.0, 0.0, 0.0, -1.0])),
    );

    let fixture = build_fixture(
        &build_complex(ComplexKind::Cell24),
        &FixtureConfig::default(),
        &ViewPose::identity(),
    );
    match fixture {
        Ok(f) => {
            let worst = f
                .arcs
                .iter()
                .map(|a| circle_deviation(&sample_arc(a, 64)))
                .fold(0.0, f64::max);
            r.bound(
                "projection",
                "64-sample arc fit, max deviation",
                1e-9,
                worst,
            );
            let strands = f.strands.len();
            r.add(
                "fixture",
                "LEDs, strands",
                "14016, 28",
                format!("{}, {strands}", f.led_count()),
            );
        }
        Err(e) => r.add(
            "projection",
            "64-sample arc fit",
            "< 1e-9",
            format!("error: {e}"),
        ),
    }

    let mut o = make_vertices(VertexSetName::V24).points;
    o.extend(make_vertices(VertexSetName::V24Dual).points);
    let mut worst = 0.0f64;
    for a in &o {
        for b in &o {
            let exact = (a * b).to_float();
            let float = q4::mul(&a.to_float(), &b.to_float());
            worst = (0..4)
                .map(|i| (exact[i] - float[i]).abs())
                .fold(worst, f64::max);
        }
    }
    r.bound("projection", "exact vs float products on O*", 1e-12, worst);
}

pub fn run(opts: &ValidateOptions) -> Report {
    let mut v24 = make_vertices(VertexSetName::V24).points;
    if let Some(k) = opts.corrupt_vertex {
        let n = v24.len();
        v24[k % n] = QuatEx::over_sqrt2([1, 0, 0, 1]);
    }
    let mut r = Report::default();
    incidence(&mut r, &v24);
    groups(&mut r, &v24);
    rings(&mut r);
    compounds(&mut r);
    hopf(&mut r);
    projection(&mut r);
    r
}
