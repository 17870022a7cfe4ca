//! Rectangular duals: validation, the weak-dual drawing algorithm with
//! longest-path coordinates, REL extraction and geometry metrics.

use crate::geom::{self, Contact, MaxSegment, Q, Rect};
use crate::plane_graph::{FaceId, PlaneGraph, V};
use crate::rel::{self, Color, EdgeLabel, Rel, StGraph, StError};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualError {
    #[error("rectangle for {0} is degenerate")]
    Degenerate(String),
    #[error("rectangles {0} and {1} overlap")]
    Overlap(String, String),
    #[error("union of rectangles does not tile the bounding box")]
    NotTiling,
    #[error("four rectangles share the point ({0}, {1})")]
    FourCorner(i64, i64),
    #[error("contact graph mismatch: {0}")]
    ContactMismatch(String),
    #[error("malformed dual: {0}")]
    MalformedDual(String),
    #[error("missing rectangle for vertex {0}")]
    MissingRect(String),
    #[error("quadrilateral face {0:?} is not colored alternatingly")]
    NonAlternatingQuadFace(Vec<String>),
    #[error("invalid REL: {0}")]
    InvalidRel(String),
    #[error(transparent)]
    St(#[from] StError),
}

/// A rectangular dual: a rectangle per vertex, tiling a bounding box, whose
/// contact graph equals the plane graph.
#[derive(Debug, Clone)]
pub struct RectDual {
    graph: PlaneGraph,
    rects: Vec<Rect>,
    crossings_allowed: bool,
}

impl RectDual {
    pub fn new(graph: PlaneGraph, rects: Vec<Rect>, crossings_allowed: bool) -> Result<Self, DualError> {
        let dual = RectDual { graph, rects, crossings_allowed };
        dual.validate()?;
        Ok(dual)
    }

    pub fn from_named(
        graph: &PlaneGraph,
        rects: &BTreeMap<String, Rect>,
        crossings_allowed: bool,
    ) -> Result<Self, DualError> {
        let mut vec = Vec::with_capacity(graph.n());
        for v in graph.vertices() {
            let r = rects
                .get(graph.name(v))
                .ok_or_else(|| DualError::MissingRect(graph.name(v).to_string()))?;
            vec.push(*r);
        }
        RectDual::new(graph.clone(), vec, crossings_allowed)
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn rect(&self, v: V) -> Rect {
        self.rects[v]
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    pub fn crossings_allowed(&self) -> bool {
        self.crossings_allowed
    }

    pub fn bbox(&self) -> Rect {
        let x1 = self.rects.iter().map(|r| r.x1).min().unwrap();
        let y1 = self.rects.iter().map(|r| r.y1).min().unwrap();
        let x2 = self.rects.iter().map(|r| r.x2).max().unwrap();
        let y2 = self.rects.iter().map(|r| r.y2).max().unwrap();
        Rect { x1, y1, x2, y2 }
    }

    pub fn width(&self) -> i64 {
        self.bbox().width()
    }

    pub fn height(&self) -> i64 {
        self.bbox().height()
    }

    fn validate(&self) -> Result<(), DualError> {
        let g = &self.graph;
        if self.rects.len() != g.n() {
            return Err(DualError::MalformedDual("rect count != vertex count".into()));
        }
        let bbox = self.bbox();
        let mut area = 0i64;
        for (v, r) in self.rects.iter().enumerate() {
            if r.x1 >= r.x2 || r.y1 >= r.y2 {
                return Err(DualError::Degenerate(g.name(v).to_string()));
            }
            area += r.area();
        }
        if area != bbox.area() {
            return Err(DualError::NotTiling);
        }
        for u in 0..self.rects.len() {
            for v in (u + 1)..self.rects.len() {
                if self.rects[u].intersects_interior(&self.rects[v]) {
                    return Err(DualError::Overlap(g.name(u).to_string(), g.name(v).to_string()));
                }
            }
        }
        if !self.crossings_allowed {
            let mut corner_count: HashMap<(i64, i64), u32> = HashMap::new();
            for r in &self.rects {
                for c in r.corners() {
                    *corner_count.entry(c).or_default() += 1;
                }
            }
            for (p, c) in corner_count {
                if c >= 4 {
                    return Err(DualError::FourCorner(p.0, p.1));
                }
            }
        }
        // contact graph equals g (including outer edges)
        for u in 0..self.rects.len() {
            for v in (u + 1)..self.rects.len() {
                let contact = self.rects[u].contact(&self.rects[v]);
                let adjacent = g.has_edge(u, v);
                if contact.is_positive() && !adjacent {
                    return Err(DualError::ContactMismatch(format!(
                        "{} touches {} but they are not adjacent",
                        g.name(u),
                        g.name(v)
                    )));
                }
                if !contact.is_positive() && adjacent {
                    return Err(DualError::ContactMismatch(format!(
                        "{} and {} are adjacent but do not touch",
                        g.name(u),
                        g.name(v)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Maximal inner segments: maximal axis-parallel segments of the union of
    /// rectangle boundaries, excluding the four bounding box sides.
    pub fn maximal_segments(&self) -> Vec<MaxSegment> {
        let bbox = self.bbox();
        let mut vert: Vec<(i64, i64, i64)> = Vec::new();
        let mut horiz: Vec<(i64, i64, i64)> = Vec::new();
        for r in &self.rects {
            if r.x1 != bbox.x1 {
                vert.push((r.x1, r.y1, r.y2));
            }
            if r.x2 != bbox.x2 {
                vert.push((r.x2, r.y1, r.y2));
            }
            if r.y1 != bbox.y1 {
                horiz.push((r.y1, r.x1, r.x2));
            }
            if r.y2 != bbox.y2 {
                horiz.push((r.y2, r.x1, r.x2));
            }
        }
        let mut out = Vec::new();
        for (at, from, to) in geom::merge_intervals(vert) {
            out.push(MaxSegment { vertical: true, at, from, to });
        }
        for (at, from, to) in geom::merge_intervals(horiz) {
            out.push(MaxSegment { vertical: false, at, from, to });
        }
        out
    }

    /// The four bounding box sides as segments.
    pub fn outer_segments(&self) -> Vec<MaxSegment> {
        let b = self.bbox();
        vec![
            MaxSegment { vertical: true, at: b.x1, from: b.y1, to: b.y2 },
            MaxSegment { vertical: true, at: b.x2, from: b.y1, to: b.y2 },
            MaxSegment { vertical: false, at: b.y1, from: b.x1, to: b.x2 },
            MaxSegment { vertical: false, at: b.y2, from: b.x1, to: b.x2 },
        ]
    }

    /// View transforms: rotate the whole picture 90° counterclockwise.
    pub fn rotate_view_ccw(&self, rotated_graph: PlaneGraph) -> RectDual {
        let bbox = self.bbox();
        let rects = self
            .rects
            .iter()
            .map(|r| Rect {
                x1: bbox.y1 + (bbox.y2 - r.y2),
                y1: r.x1,
                x2: bbox.y1 + (bbox.y2 - r.y1),
                y2: r.x2,
            })
            .map(|r| Rect { x1: r.x1, y1: r.y1, x2: r.x2, y2: r.y2 })
            .collect();
        RectDual { graph: rotated_graph, rects, crossings_allowed: self.crossings_allowed }
    }

    /// Mirror the picture left-right.
    pub fn mirror_view(&self, mirrored_graph: PlaneGraph) -> RectDual {
        let bbox = self.bbox();
        let rects = self
            .rects
            .iter()
            .map(|r| Rect {
                x1: bbox.x1 + (bbox.x2 - r.x2),
                y1: r.y1,
                x2: bbox.x1 + (bbox.x2 - r.x1),
                y2: r.y2,
            })
            .collect();
        RectDual { graph: mirrored_graph, rects, crossings_allowed: self.crossings_allowed }
    }
}

/// Read the REL off a dual: horizontal contacts are blue (upward), vertical
/// contacts are red (rightward).
pub fn extract_rel(r: &RectDual) -> Result<Rel, DualError> {
    let g = r.graph();
    let mut labels = BTreeMap::new();
    for (u, v) in g.inner_edges() {
        let (ru, rv) = (r.rect(u), r.rect(v));
        let label = match ru.contact(&rv) {
            Contact::Horizontal { .. } => {
                let (lo, hi) = if ru.y2 == rv.y1 { (u, v) } else { (v, u) };
                EdgeLabel { color: Color::Blue, tail: lo, head: hi }
            }
            Contact::Vertical { .. } => {
                let (left, right) = if ru.x2 == rv.x1 { (u, v) } else { (v, u) };
                EdgeLabel { color: Color::Red, tail: left, head: right }
            }
            other => {
                return Err(DualError::MalformedDual(format!(
                    "edge {}-{} has contact {:?}",
                    g.name(u),
                    g.name(v),
                    other
                )))
            }
        };
        labels.insert((u.min(v), u.max(v)), label);
    }
    Ok(Rel::new(labels))
}

/// Face classes of the subgraph given by a directed edge set: plane-graph
/// faces merged across all edges not in the set. The class containing the
/// outer face is split into a left and a right dual vertex.
struct FaceClasses {
    class_of_face: Vec<usize>,
    outer_class: usize,
    n_classes: usize,
}

fn face_classes(g: &PlaneGraph, member: &BTreeSet<(V, V)>) -> FaceClasses {
    let nf = g.faces().len();
    let mut parent: Vec<usize> = (0..nf).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &(u, v) in g.edges() {
        if member.contains(&(u, v)) || member.contains(&(v, u)) {
            continue;
        }
        let a = g.face_left_of(u, v);
        let b = g.face_left_of(v, u);
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut class_of_face = vec![0usize; nf];
    for f in 0..nf {
        let r = find(&mut parent, f);
        let next = ids.len();
        let id = *ids.entry(r).or_insert(next);
        class_of_face[f] = id;
    }
    let outer_class = class_of_face[g.outer_face()];
    FaceClasses { class_of_face, outer_class, n_classes: ids.len() }
}

/// The weak dual of an st-subgraph: one vertex per interior face class, two
/// vertices for the outer face, an edge left-class -> right-class per edge of
/// the subgraph. Dual vertex ids live in a fresh index space.
pub fn weak_dual(g: &PlaneGraph, st: &StGraph) -> StGraph {
    let member: BTreeSet<(V, V)> = st.edges.iter().copied().collect();
    let fc = face_classes(g, &member);
    let (dual, _) = weak_dual_inner(g, &member, &fc);
    dual
}

fn weak_dual_inner(
    g: &PlaneGraph,
    member: &BTreeSet<(V, V)>,
    fc: &FaceClasses,
) -> (StGraph, (V, V)) {
    // ids: interior classes keep their index; the outer class index is reused
    // for f_L and n_classes is f_R
    let f_l = fc.outer_class;
    let f_r = fc.n_classes;
    let mut edges = Vec::new();
    for &(t, h) in member {
        let left = fc.class_of_face[g.face_left_of(t, h)];
        let right = fc.class_of_face[g.face_left_of(h, t)];
        let tail = left; // outer class on the left side acts as f_L
        let head = if right == fc.outer_class { f_r } else { right };
        edges.push((tail, head));
    }
    let mut vertices: BTreeSet<V> = BTreeSet::new();
    for &(t, h) in &edges {
        vertices.insert(t);
        vertices.insert(h);
    }
    vertices.insert(f_l);
    vertices.insert(f_r);
    let st = StGraph {
        vertices: vertices.into_iter().collect(),
        edges,
        source: f_l,
        sink: f_r,
        rot: BTreeMap::new(),
    };
    (st, (f_l, f_r))
}

/// Longest-path topological numbering: d(source) = 0 and d(v) = 1 + max over
/// predecessors, which makes the drawing compact.
pub fn topological_numbering(st: &StGraph) -> Result<BTreeMap<V, i64>, StError> {
    let mut indeg: BTreeMap<V, usize> = st.vertices.iter().map(|&v| (v, 0)).collect();
    let mut adj: BTreeMap<V, Vec<V>> = BTreeMap::new();
    for &(t, h) in &st.edges {
        *indeg.get_mut(&h).unwrap() += 1;
        adj.entry(t).or_default().push(h);
    }
    let mut d: BTreeMap<V, i64> = st.vertices.iter().map(|&v| (v, 0)).collect();
    let mut queue: Vec<V> = indeg.iter().filter(|(_, &x)| x == 0).map(|(&v, _)| v).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop() {
        seen += 1;
        for &h in adj.get(&v).into_iter().flatten() {
            let nd = d[&v] + 1;
            if nd > d[&h] {
                *d.get_mut(&h).unwrap() = nd;
            }
            let deg = indeg.get_mut(&h).unwrap();
            *deg -= 1;
            if *deg == 0 {
                queue.push(h);
            }
        }
    }
    if seen != st.vertices.len() {
        return Err(StError::CycleDetected);
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Wedge {
    Left,
    Right,
    Bottom,
    Top,
}

/// The face class at the wedge of `v` (left = red-in wedge, right = red-out,
/// bottom = blue-in, top = blue-out).
fn wedge_face(g: &PlaneGraph, l: &Rel, v: V, wedge: Wedge) -> FaceId {
    // first neighbor of the block that opens the wedge
    let states: Vec<(V, Color, bool)> = g
        .adj(v)
        .iter()
        .map(|&x| {
            let lab = l.label(v, x).expect("inner vertex has labeled edges");
            (x, lab.color, lab.tail == v)
        })
        .collect();
    let want = |c: Color, out: bool| -> Box<dyn Fn(&(V, Color, bool)) -> bool> {
        Box::new(move |&(_, cc, oo)| cc == c && oo == out)
    };
    let pred = match wedge {
        Wedge::Left => want(Color::Red, false),   // first red-in
        Wedge::Right => want(Color::Red, true),   // first red-out
        Wedge::Bottom => want(Color::Blue, false), // first blue-in
        Wedge::Top => want(Color::Blue, true),    // first blue-out
    };
    let n = states.len();
    for i in 0..n {
        let prev = &states[(i + n - 1) % n];
        let cur = &states[i];
        if pred(cur) && !pred(prev) {
            return g.face_left_of(v, cur.0);
        }
    }
    panic!("rule 2 violated at {}", g.name(v));
}

struct DrawAxes {
    x1: BTreeMap<V, i64>,
    x2: BTreeMap<V, i64>,
    y1: BTreeMap<V, i64>,
    y2: BTreeMap<V, i64>,
    w_in: i64,
    h_in: i64,
}

fn inner_coordinates(g: &PlaneGraph, l: &Rel) -> Result<DrawAxes, DualError> {
    let report = rel::validate_rel(g, l);
    if !report.ok() {
        return Err(DualError::InvalidRel(format!("{:?}", report.issues)));
    }
    let blue: BTreeSet<(V, V)> = l
        .labels()
        .filter(|(_, lab)| lab.color == Color::Blue)
        .map(|(_, lab)| (lab.tail, lab.head))
        .collect();
    // for the y axis, walk red edges reversed so the dual flows south->north
    let red_rev: BTreeSet<(V, V)> = l
        .labels()
        .filter(|(_, lab)| lab.color == Color::Red)
        .map(|(_, lab)| (lab.head, lab.tail))
        .collect();
    let fcx = face_classes(g, &blue);
    let (dual_x, (fxl, fxr)) = weak_dual_inner(g, &blue, &fcx);
    let fcy = face_classes(g, &red_rev);
    let (dual_y, (fyl, fyr)) = weak_dual_inner(g, &red_rev, &fcy);
    let dx = topological_numbering(&dual_x)?;
    let dy = topological_numbering(&dual_y)?;

    let class_x = |f: FaceId, from_left: bool| -> V {
        let c = fcx.class_of_face[f];
        if c == fcx.outer_class {
            if from_left {
                fxl
            } else {
                fxr
            }
        } else {
            c
        }
    };
    let class_y = |f: FaceId, from_bottom: bool| -> V {
        let c = fcy.class_of_face[f];
        if c == fcy.outer_class {
            if from_bottom {
                fyl
            } else {
                fyr
            }
        } else {
            c
        }
    };

    let mut axes = DrawAxes {
        x1: BTreeMap::new(),
        x2: BTreeMap::new(),
        y1: BTreeMap::new(),
        y2: BTreeMap::new(),
        w_in: dx[&fxr],
        h_in: dy[&fyr],
    };
    for v in g.vertices() {
        if g.is_outer_vertex(v) {
            continue;
        }
        let lf = wedge_face(g, l, v, Wedge::Left);
        let rf = wedge_face(g, l, v, Wedge::Right);
        let bf = wedge_face(g, l, v, Wedge::Bottom);
        let tf = wedge_face(g, l, v, Wedge::Top);
        axes.x1.insert(v, dx[&class_x(lf, true)]);
        axes.x2.insert(v, dx[&class_x(rf, false)]);
        axes.y1.insert(v, dy[&class_y(bf, true)]);
        axes.y2.insert(v, dy[&class_y(tf, false)]);
        if axes.x1[&v] >= axes.x2[&v] || axes.y1[&v] >= axes.y2[&v] {
            return Err(DualError::MalformedDual(format!(
                "degenerate drawn rectangle for {}",
                g.name(v)
            )));
        }
    }
    Ok(axes)
}

fn assemble(g: &PlaneGraph, axes: &DrawAxes, crossings_allowed: bool) -> Result<RectDual, DualError> {
    let [s, w, n, e] = g.outer();
    let (wi, hi) = (axes.w_in, axes.h_in);
    let mut rects = vec![Rect { x1: 0, y1: 0, x2: 1, y2: 1 }; g.n()];
    for v in g.vertices() {
        if g.is_outer_vertex(v) {
            continue;
        }
        rects[v] = Rect {
            x1: axes.x1[&v] + 1,
            y1: axes.y1[&v] + 1,
            x2: axes.x2[&v] + 1,
            y2: axes.y2[&v] + 1,
        };
    }
    // pinwheel frame: S spans the bottom minus the right column, W the left
    // column minus the top row, N the top row minus the left column, E the
    // right column minus the bottom row
    rects[s] = Rect { x1: 0, y1: 0, x2: wi + 1, y2: 1 };
    rects[w] = Rect { x1: 0, y1: 1, x2: 1, y2: hi + 2 };
    rects[n] = Rect { x1: 1, y1: hi + 1, x2: wi + 2, y2: hi + 2 };
    rects[e] = Rect { x1: wi + 1, y1: 0, x2: wi + 2, y2: hi + 1 };
    RectDual::new(g.clone(), rects, crossings_allowed)
}

/// He's drawing algorithm: integer coordinates from longest-path numberings
/// of the two weak duals, plus the pinwheel frame.
pub fn draw_dual(g: &PlaneGraph, l: &Rel) -> Result<RectDual, DualError> {
    let axes = inner_coordinates(g, l)?;
    let dual = assemble(g, &axes, false)?;
    debug_assert_eq!(extract_rel(&dual).expect("drawn dual extracts"), *l);
    Ok(dual)
}

/// Drawing for auxiliary graphs whose inner faces may be chordless
/// quadrilaterals. Each quad face must be colored alternatingly; its four
/// rectangles meet at a point in the drawing.
pub fn draw_auxiliary(g: &PlaneGraph, l: &Rel) -> Result<RectDual, DualError> {
    for (fid, face) in g.faces().iter().enumerate() {
        if fid == g.outer_face() {
            continue;
        }
        match face.len() {
            3 => {}
            4 => {
                let vs: Vec<V> = face.iter().map(|&(u, _)| u).collect();
                // chordless
                if g.has_edge(vs[0], vs[2]) || g.has_edge(vs[1], vs[3]) {
                    continue; // a chorded quad walk cannot be a face; defensive
                }
                let mut colors = Vec::new();
                for i in 0..4 {
                    let (u, v) = (vs[i], vs[(i + 1) % 4]);
                    colors.push(
                        l.color(u, v)
                            .ok_or_else(|| DualError::InvalidRel("unlabeled quad edge".into()))?,
                    );
                }
                if colors[0] == colors[1] || colors[1] == colors[2] || colors[2] == colors[3] {
                    return Err(DualError::NonAlternatingQuadFace(
                        vs.iter().map(|&v| g.name(v).to_string()).collect(),
                    ));
                }
            }
            _ => {
                return Err(DualError::MalformedDual(format!(
                    "inner face with {} sides",
                    face.len()
                )))
            }
        }
    }
    let axes = inner_coordinates(g, l)?;
    assemble(g, &axes, true)
}

/// Minimum width and height over all duals realizing the REL restriction of
/// an inner separation component (max topological numbers of the two duals).
pub fn min_dims(g_in: &PlaneGraph, l_in: &Rel) -> Result<(i64, i64), DualError> {
    let axes = inner_coordinates(g_in, l_in)?;
    Ok((axes.w_in, axes.h_in))
}

/// Exact metrics of a dual. Length-like quantities are stored squared so all
/// fields stay rational (corner-to-corner distances are irrational in
/// general).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualMetrics {
    pub width: i64,
    pub height: i64,
    pub max_segment_sq: Q,
    pub min_feature_dist_sq: Q,
    pub feature_resolution_sq: Q,
}

pub fn metrics(r: &RectDual) -> DualMetrics {
    let mut segments = r.maximal_segments();
    segments.extend(r.outer_segments());
    let max_len = segments.iter().map(|s| s.len()).max().unwrap_or(0);
    let corners: BTreeSet<(i64, i64)> = r
        .rects()
        .iter()
        .flat_map(|rc| rc.corners().into_iter())
        .collect();
    let corners: Vec<(i64, i64)> = corners.into_iter().collect();
    let mut min_sq: Option<Q> = None;
    let mut upd = |d: Q| {
        if d > Q::zero() && min_sq.map_or(true, |m| d < m) {
            min_sq = Some(d);
        }
    };
    for i in 0..corners.len() {
        for j in (i + 1)..corners.len() {
            let dx = corners[i].0 - corners[j].0;
            let dy = corners[i].1 - corners[j].1;
            upd(geom::q(dx * dx + dy * dy));
        }
    }
    for &c in &corners {
        for s in &segments {
            if s.contains(c) {
                continue;
            }
            let [p1, p2] = s.endpoints();
            let d = geom::point_segment_dist_sq(
                &geom::Point::of(c.0, c.1),
                &geom::Point::of(p1.0, p1.1),
                &geom::Point::of(p2.0, p2.1),
            );
            upd(d);
        }
    }
    let min_feature_dist_sq = min_sq.unwrap_or_else(|| geom::q(1));
    let max_segment_sq = geom::q(max_len * max_len);
    DualMetrics {
        width: r.width(),
        height: r.height(),
        max_segment_sq,
        min_feature_dist_sq,
        feature_resolution_sq: max_segment_sq / min_feature_dist_sq,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::rel::{enumerate_rels, initial_rel};

    #[test]
    fn pinwheel_canonical_coordinates() {
        let g = gen::pinwheel();
        let l = initial_rel(&g).unwrap();
        let d = draw_dual(&g, &l).unwrap();
        let rc = |n: &str| d.rect(g.vertex(n).unwrap());
        assert_eq!(rc("v"), Rect { x1: 1, y1: 1, x2: 2, y2: 2 });
        assert_eq!(rc("W"), Rect { x1: 0, y1: 1, x2: 1, y2: 3 });
        assert_eq!(rc("N"), Rect { x1: 1, y1: 2, x2: 3, y2: 3 });
        assert_eq!(rc("E"), Rect { x1: 2, y1: 0, x2: 3, y2: 2 });
        assert_eq!(rc("S"), Rect { x1: 0, y1: 0, x2: 2, y2: 1 });
    }

    #[test]
    fn pinwheel_weak_dual_parallel_edges() {
        let g = gen::pinwheel();
        let l = initial_rel(&g).unwrap();
        let (l1, l2) = rel::rel_subgraphs(&g, &l).unwrap();
        let d1 = weak_dual(&g, &l1);
        assert_eq!(d1.vertices.len(), 2);
        assert_eq!(d1.edges.len(), 2);
        let d2 = weak_dual(&g, &l2);
        assert_eq!(d2.vertices.len(), 2);
        assert_eq!(d2.edges.len(), 2);
        let numbering = topological_numbering(&d1).unwrap();
        assert_eq!(numbering[&d1.source], 0);
        assert_eq!(numbering[&d1.sink], 1);
    }

    #[test]
    fn g8_weak_dual_face_count() {
        let g = gen::g8();
        let l = initial_rel(&g).unwrap();
        let (l1, _) = rel::rel_subgraphs(&g, &l).unwrap();
        let d1 = weak_dual(&g, &l1);
        // interior face classes of L1 + the two outer-face vertices
        assert_eq!(d1.vertices.len(), 4);
    }

    #[test]
    fn round_trip_on_small_graphs() {
        for g in [gen::pinwheel(), gen::g8(), gen::nested_pinwheel(), gen::nested()] {
            for l in enumerate_rels(&g).unwrap() {
                let d = draw_dual(&g, &l).unwrap();
                assert_eq!(extract_rel(&d).unwrap(), l);
                let n = g.n() as i64;
                assert!(d.width() <= n && d.height() <= n, "compact within n x n");
                // inner maximal segments of an n-vertex dual: n-1 in total
                assert_eq!(d.maximal_segments().len(), g.n() - 1);
            }
        }
    }

    #[test]
    fn segment_bijection_with_dual_vertices() {
        let g = gen::g8();
        for l in enumerate_rels(&g).unwrap() {
            let d = draw_dual(&g, &l).unwrap();
            let (l1, l2) = rel::rel_subgraphs(&g, &l).unwrap();
            // the box sides are excluded: the source/sink dual vertices map
            // to the frame's inner boundary segments
            let vert = d.maximal_segments().iter().filter(|s| s.vertical).count();
            let horiz = d.maximal_segments().iter().filter(|s| !s.vertical).count();
            assert_eq!(vert, weak_dual(&g, &l1).vertices.len());
            assert_eq!(horiz, weak_dual(&g, &l2).vertices.len());
        }
    }

    #[test]
    fn every_inner_coordinate_hits_a_segment() {
        let g = gen::nested();
        for l in enumerate_rels(&g).unwrap() {
            let d = draw_dual(&g, &l).unwrap();
            let segs = d.maximal_segments();
            let b = d.bbox();
            for x in (b.x1 + 1)..b.x2 {
                assert!(
                    segs.iter().any(|s| s.vertical && s.at == x),
                    "x = {x} carries a vertical segment"
                );
            }
            for y in (b.y1 + 1)..b.y2 {
                assert!(segs.iter().any(|s| !s.vertical && s.at == y));
            }
        }
    }

    #[test]
    fn min_dims_examples() {
        // pinwheel as an interior: single inner rectangle
        let g = gen::pinwheel();
        let l = initial_rel(&g).unwrap();
        assert_eq!(min_dims(&g, &l).unwrap(), (1, 1));
        // two stacked rectangles -> (1, 2)
        let g2 = gen::stacked2();
        let l2 = initial_rel(&g2).unwrap();
        assert_eq!(min_dims(&g2, &l2).unwrap(), (1, 2));
    }

    #[test]
    fn metrics_pinwheel() {
        let g = gen::pinwheel();
        let l = initial_rel(&g).unwrap();
        let d = draw_dual(&g, &l).unwrap();
        let m = metrics(&d);
        assert_eq!(m.width, 3);
        assert_eq!(m.height, 3);
        assert_eq!(m.max_segment_sq, geom::q(9));
        assert_eq!(m.min_feature_dist_sq, geom::q(1));
        assert_eq!(m.feature_resolution_sq, geom::q(9));
    }

    #[test]
    fn unit_square_resolution_is_one() {
        // single rectangle: resolution 1 (edge length over corner distance)
        let m_max = geom::q(1);
        assert_eq!(m_max / geom::q(1), geom::q(1));
    }

    #[test]
    fn drawing_has_minimum_dims_on_small_graphs() {
        // compaction oracle: try all coordinate assignments of the vertical
        // segment classes respecting the left<right constraints; the smallest
        // feasible max equals the drawn width (same for height)
        for g in [gen::pinwheel(), gen::g8()] {
            for l in enumerate_rels(&g).unwrap() {
                let d = draw_dual(&g, &l).unwrap();
                let (w, h) = min_dims(&g, &l).unwrap();
                assert_eq!(d.width(), w + 2);
                assert_eq!(d.height(), h + 2);
                let (oracle_w, oracle_h) = brute_min_dims(&g, &l);
                assert_eq!(w, oracle_w);
                assert_eq!(h, oracle_h);
            }
        }
    }

    fn brute_min_dims(g: &PlaneGraph, l: &Rel) -> (i64, i64) {
        let blue: BTreeSet<(V, V)> = l
            .labels()
            .filter(|(_, lab)| lab.color == Color::Blue)
            .map(|(_, lab)| (lab.tail, lab.head))
            .collect();
        let red_rev: BTreeSet<(V, V)> = l
            .labels()
            .filter(|(_, lab)| lab.color == Color::Red)
            .map(|(_, lab)| (lab.head, lab.tail))
            .collect();
        (brute_axis(g, &blue), brute_axis(g, &red_rev))
    }

    /// smallest k admitting a strict numbering of the dual classes
    fn brute_axis(g: &PlaneGraph, member: &BTreeSet<(V, V)>) -> i64 {
        let fc = face_classes(g, member);
        let (dual, (fl, fr)) = weak_dual_inner(g, member, &fc);
        let verts = dual.vertices.clone();
        let idx: BTreeMap<V, usize> = verts.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();
        'k: for k in 1..=(verts.len() as i64) {
            // assignments: d in {0..k}, d(fl)=0, d(fr)=k
            let mut assign = vec![0i64; verts.len()];
            loop {
                // check
                let ok = assign[idx[&fl]] == 0
                    && assign[idx[&fr]] == k
                    && dual.edges.iter().all(|&(t, h)| assign[idx[&t]] < assign[idx[&h]]);
                if ok {
                    return k;
                }
                // increment odometer
                let mut i = 0;
                loop {
                    if i == verts.len() {
                        continue 'k;
                    }
                    assign[i] += 1;
                    if assign[i] > k {
                        assign[i] = 0;
                        i += 1;
                    } else {
                        break;
                    }
                }
            }
        }
        unreachable!("some width always feasible")
    }
}
