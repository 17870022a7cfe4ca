//! Plane graph model: rotation systems, face traversal, PTP validation,
//! 4-cycle classification and separation components.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use thiserror::Error;

/// Internal vertex index.
pub type V = usize;
/// A directed dart (u, v) along edge {u, v}.
pub type Dart = (V, V);
pub type FaceId = usize;

/// Reserved prefix for generated vertices (contractions, split copies).
pub const FRESH_PREFIX: &str = "__";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("inconsistent embedding: {0}")]
    InconsistentEmbedding(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("outer quadruple invalid: {0}")]
    OuterNotFour(String),
}

/// Raw, name-based graph description (the JSON-facing form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawGraph {
    pub vertices: Vec<String>,
    pub adjacency_cw: BTreeMap<String, Vec<String>>,
    pub outer: [String; 4],
}

/// A plane graph given by a clockwise rotation system with a designated
/// outer quadruple (v_S, v_W, v_N, v_E). Faces are derived from the rotation
/// system, never read from input.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    names: Vec<String>,
    lookup: BTreeMap<String, V>,
    adj: Vec<Vec<V>>,
    outer: [V; 4],
    edges: Vec<(V, V)>,
    edge_ids: HashMap<(V, V), usize>,
    faces: Vec<Vec<Dart>>,
    face_of: HashMap<Dart, FaceId>,
    outer_face: FaceId,
}

impl PlaneGraph {
    /// Build a plane graph from adjacency lists in clockwise order.
    pub fn build(raw: &RawGraph) -> Result<PlaneGraph, BuildError> {
        let names = raw.vertices.clone();
        let mut lookup = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if lookup.insert(n.clone(), i).is_some() {
                return Err(BuildError::InconsistentEmbedding(format!(
                    "duplicate vertex name {n}"
                )));
            }
        }
        let mut adj: Vec<Vec<V>> = vec![Vec::new(); names.len()];
        for (name, list) in &raw.adjacency_cw {
            let u = *lookup
                .get(name)
                .ok_or_else(|| BuildError::InconsistentEmbedding(format!("unknown vertex {name}")))?;
            let mut seen = BTreeSet::new();
            for m in list {
                let v = *lookup.get(m).ok_or_else(|| {
                    BuildError::InconsistentEmbedding(format!("unknown neighbor {m} of {name}"))
                })?;
                if v == u {
                    return Err(BuildError::InconsistentEmbedding(format!("self loop at {name}")));
                }
                if !seen.insert(v) {
                    return Err(BuildError::InconsistentEmbedding(format!(
                        "duplicate neighbor {m} of {name}"
                    )));
                }
                adj[u].push(v);
            }
        }
        // mutual consistency
        for u in 0..adj.len() {
            for &v in &adj[u] {
                if !adj[v].contains(&u) {
                    return Err(BuildError::InconsistentEmbedding(format!(
                        "{} lists {} but not vice versa",
                        names[u], names[v]
                    )));
                }
            }
        }
        // connectivity
        if !names.is_empty() {
            let mut seen = vec![false; names.len()];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(BuildError::NotConnected);
            }
        }
        let mut outer = [0usize; 4];
        for (i, name) in raw.outer.iter().enumerate() {
            outer[i] = *lookup
                .get(name)
                .ok_or_else(|| BuildError::OuterNotFour(format!("unknown outer vertex {name}")))?;
        }
        {
            let set: BTreeSet<V> = outer.iter().copied().collect();
            if set.len() != 4 {
                return Err(BuildError::OuterNotFour("outer vertices not distinct".into()));
            }
        }
        for i in 0..4 {
            let u = outer[i];
            let v = outer[(i + 1) % 4];
            if !adj[u].contains(&v) {
                return Err(BuildError::OuterNotFour(format!(
                    "outer vertices {} and {} are not adjacent",
                    names[u], names[v]
                )));
            }
        }

        let mut edges = Vec::new();
        let mut edge_ids = HashMap::new();
        for u in 0..adj.len() {
            for &v in &adj[u] {
                if u < v {
                    edge_ids.insert((u, v), edges.len());
                    edges.push((u, v));
                }
            }
        }

        // face traversal: next dart after (u, v) is (v, succ_cw(v, u))
        let mut face_of: HashMap<Dart, FaceId> = HashMap::new();
        let mut faces: Vec<Vec<Dart>> = Vec::new();
        for u in 0..adj.len() {
            for &v in adj[u].clone().iter() {
                if face_of.contains_key(&(u, v)) {
                    continue;
                }
                let fid = faces.len();
                let mut cycle = Vec::new();
                let (mut cu, mut cv) = (u, v);
                loop {
                    cycle.push((cu, cv));
                    face_of.insert((cu, cv), fid);
                    let pos = adj[cv]
                        .iter()
                        .position(|&w| w == cu)
                        .expect("consistent adjacency");
                    let w = adj[cv][(pos + 1) % adj[cv].len()];
                    cu = cv;
                    cv = w;
                    if (cu, cv) == (u, v) {
                        break;
                    }
                    if cycle.len() > 2 * edges.len() + 4 {
                        return Err(BuildError::InconsistentEmbedding(
                            "face traversal does not close".into(),
                        ));
                    }
                }
                faces.push(cycle);
            }
        }
        // Euler check
        let v_count = names.len() as i64;
        let e_count = edges.len() as i64;
        let f_count = faces.len() as i64;
        if v_count - e_count + f_count != 2 {
            return Err(BuildError::InconsistentEmbedding(format!(
                "rotation system is not planar/spherical: V-E+F = {}",
                v_count - e_count + f_count
            )));
        }
        let outer_face = *face_of.get(&(outer[0], outer[1])).expect("outer dart exists");

        Ok(PlaneGraph {
            names,
            lookup,
            adj,
            outer,
            edges,
            edge_ids,
            faces,
            face_of,
            outer_face,
        })
    }

    pub fn to_raw(&self) -> RawGraph {
        let mut adjacency_cw = BTreeMap::new();
        for u in 0..self.adj.len() {
            adjacency_cw.insert(
                self.names[u].clone(),
                self.adj[u].iter().map(|&v| self.names[v].clone()).collect(),
            );
        }
        RawGraph {
            vertices: self.names.clone(),
            adjacency_cw,
            outer: [
                self.names[self.outer[0]].clone(),
                self.names[self.outer[1]].clone(),
                self.names[self.outer[2]].clone(),
                self.names[self.outer[3]].clone(),
            ],
        }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: V) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<V> {
        self.lookup.get(name).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = V> {
        0..self.names.len()
    }

    pub fn adj(&self, v: V) -> &[V] {
        &self.adj[v]
    }

    /// Outer quadruple in order (v_S, v_W, v_N, v_E).
    pub fn outer(&self) -> [V; 4] {
        self.outer
    }

    pub fn is_outer_vertex(&self, v: V) -> bool {
        self.outer.contains(&v)
    }

    pub fn edges(&self) -> &[(V, V)] {
        &self.edges
    }

    pub fn has_edge(&self, u: V, v: V) -> bool {
        self.edge_ids.contains_key(&norm(u, v))
    }

    /// Outer edges are the four edges of the outer quadruple.
    pub fn is_outer_edge(&self, u: V, v: V) -> bool {
        for i in 0..4 {
            let a = self.outer[i];
            let b = self.outer[(i + 1) % 4];
            if norm(u, v) == norm(a, b) {
                return true;
            }
        }
        false
    }

    pub fn inner_edges(&self) -> impl Iterator<Item = (V, V)> + '_ {
        self.edges.iter().copied().filter(|&(u, v)| !self.is_outer_edge(u, v))
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    /// Face lying to the left of the dart (u, v).
    pub fn face_left_of(&self, u: V, v: V) -> FaceId {
        self.face_of[&(u, v)]
    }

    pub fn face_vertices(&self, f: FaceId) -> Vec<V> {
        self.faces[f].iter().map(|&(u, _)| u).collect()
    }

    /// Clockwise successor of `u` in the rotation at `v`.
    pub fn succ_cw(&self, v: V, u: V) -> V {
        let pos = self.adj[v].iter().position(|&w| w == u).expect("neighbor");
        self.adj[v][(pos + 1) % self.adj[v].len()]
    }

    /// Clockwise predecessor of `u` in the rotation at `v`.
    pub fn pred_cw(&self, v: V, u: V) -> V {
        let pos = self.adj[v].iter().position(|&w| w == u).expect("neighbor");
        self.adj[v][(pos + self.adj[v].len() - 1) % self.adj[v].len()]
    }

    /// PTP validation: outer face is the designated 4-cycle, all inner faces
    /// are triangles, no separating triangle.
    pub fn validate_ptp(&self) -> PtpReport {
        let mut issues = Vec::new();
        let outer_cycle = self.face_vertices(self.outer_face);
        let expected: Vec<V> = self.outer.to_vec();
        if !cyclic_eq(&outer_cycle, &expected) {
            issues.push(PtpIssue::OuterNotFourCycle {
                found: outer_cycle.iter().map(|&v| self.names[v].clone()).collect(),
            });
        }
        for (fid, face) in self.faces.iter().enumerate() {
            if fid == self.outer_face {
                continue;
            }
            if face.len() != 3 {
                issues.push(PtpIssue::NonTriangularInnerFace {
                    face: face.iter().map(|&(u, _)| self.names[u].clone()).collect(),
                });
            }
        }
        for tri in self.triangles() {
            if !self.triangle_is_face(tri) {
                issues.push(PtpIssue::SeparatingTriangle {
                    triangle: [
                        self.names[tri[0]].clone(),
                        self.names[tri[1]].clone(),
                        self.names[tri[2]].clone(),
                    ],
                });
            }
        }
        PtpReport { issues }
    }

    /// All triangles (3-cliques) of the graph.
    pub fn triangles(&self) -> Vec<[V; 3]> {
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            for &w in &self.adj[u] {
                if w > v && self.has_edge(v, w) {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }

    fn triangle_is_face(&self, tri: [V; 3]) -> bool {
        self.faces.iter().enumerate().any(|(fid, f)| {
            fid != self.outer_face && f.len() == 3 && {
                let vs: BTreeSet<V> = f.iter().map(|&(u, _)| u).collect();
                tri.iter().all(|v| vs.contains(v))
            }
        })
    }

    /// Classify every 4-cycle on inner vertices (cycles through outer
    /// vertices can never alternate, and the outer face itself is excluded).
    /// Vertex order of each cycle is normalized clockwise, so that the
    /// traversal encloses the interior, starting at the smallest vertex name.
    pub fn classify_4cycles(&self) -> Vec<CycleRef> {
        let mut out = Vec::new();
        let mut seen: BTreeSet<[V; 4]> = BTreeSet::new();
        let n = self.n();
        for u in 0..n {
            if self.is_outer_vertex(u) {
                continue;
            }
            for w in (u + 1)..n {
                if self.is_outer_vertex(w) {
                    continue;
                }
                let common: Vec<V> = self.adj[u]
                    .iter()
                    .copied()
                    .filter(|x| !self.is_outer_vertex(*x) && self.adj[w].contains(x))
                    .collect();
                for i in 0..common.len() {
                    for j in (i + 1)..common.len() {
                        let (a, b) = (common[i], common[j]);
                        let cycle = [u, a, w, b];
                        let mut key = cycle;
                        key.sort();
                        if !seen.insert(key) {
                            continue;
                        }
                        if self.is_outer_cycle(&cycle) {
                            continue;
                        }
                        out.push(self.cycle_ref(cycle));
                    }
                }
            }
        }
        out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        out
    }

    fn is_outer_cycle(&self, cycle: &[V; 4]) -> bool {
        let mut s: Vec<V> = cycle.to_vec();
        s.sort();
        let mut o: Vec<V> = self.outer.to_vec();
        o.sort();
        s == o
    }

    /// Build a CycleRef for the 4-cycle `c0-c1-c2-c3` (edges must exist).
    pub fn cycle_ref(&self, cycle: [V; 4]) -> CycleRef {
        let (interior_faces, _exterior_faces) = self.cycle_regions(&cycle);
        let mut interior_vertices: BTreeSet<V> = BTreeSet::new();
        for &f in &interior_faces {
            for &(a, _) in &self.faces[f] {
                interior_vertices.insert(a);
            }
        }
        for v in cycle {
            interior_vertices.remove(&v);
        }
        let mut interior_edges: BTreeSet<(V, V)> = BTreeSet::new();
        for &(a, b) in &self.edges {
            let fa = self.face_of[&(a, b)];
            let fb = self.face_of[&(b, a)];
            if interior_faces.contains(&fa) && interior_faces.contains(&fb) {
                interior_edges.insert((a, b));
            }
        }
        // orient clockwise: the left faces of the listed traversal must be
        // exterior (interior then lies to the right, "enclosed")
        let mut cyc = cycle;
        let f_left = self.face_of[&(cyc[0], cyc[1])];
        if interior_faces.contains(&f_left) {
            cyc = [cyc[0], cyc[3], cyc[2], cyc[1]];
        }
        // canonical rotation: start at smallest name
        let start = (0..4)
            .min_by_key(|&i| &self.names[cyc[i]])
            .unwrap();
        let vertices = [
            cyc[start],
            cyc[(start + 1) % 4],
            cyc[(start + 2) % 4],
            cyc[(start + 3) % 4],
        ];
        let kind = match (interior_vertices.len(), interior_edges.len()) {
            (0, 1) => CycleKind::Empty,
            (1, _) => CycleKind::TrivialSeparating,
            (k, _) if k > 1 => CycleKind::NontrivialSeparating,
            other => panic!("impossible 4-cycle interior {other:?}"),
        };
        CycleRef {
            vertices,
            kind,
            interior_vertices,
            interior_edges,
            interior_faces,
        }
    }

    /// Split faces into the two regions bounded by the cycle; first component
    /// is the interior (the side not containing the outer face).
    fn cycle_regions(&self, cycle: &[V; 4]) -> (BTreeSet<FaceId>, BTreeSet<FaceId>) {
        let mut cycle_edges: BTreeSet<(V, V)> = BTreeSet::new();
        for i in 0..4 {
            cycle_edges.insert(norm(cycle[i], cycle[(i + 1) % 4]));
        }
        let mut region = vec![usize::MAX; self.faces.len()];
        let mut next_region = 0;
        for f in 0..self.faces.len() {
            if region[f] != usize::MAX {
                continue;
            }
            let id = next_region;
            next_region += 1;
            let mut stack = vec![f];
            region[f] = id;
            while let Some(g) = stack.pop() {
                for &(a, b) in &self.faces[g] {
                    if cycle_edges.contains(&norm(a, b)) {
                        continue;
                    }
                    let h = self.face_of[&(b, a)];
                    if region[h] == usize::MAX {
                        region[h] = id;
                        stack.push(h);
                    }
                }
            }
        }
        assert_eq!(next_region, 2, "a cycle must bound exactly two regions");
        let outer_region = region[self.outer_face];
        let mut interior = BTreeSet::new();
        let mut exterior = BTreeSet::new();
        for f in 0..self.faces.len() {
            if region[f] == outer_region {
                exterior.insert(f);
            } else {
                interior.insert(f);
            }
        }
        (interior, exterior)
    }

    /// All maximal K_{2,i} subgraphs on inner vertices with i >= 3: pole
    /// pairs with their fan of common neighbors in fan order (the outermost
    /// 4-cycle joins the poles with the two fan ends).
    pub fn maximal_k2i(&self) -> Vec<K2i> {
        let mut out = Vec::new();
        let n = self.n();
        for u in 0..n {
            if self.is_outer_vertex(u) {
                continue;
            }
            for w in (u + 1)..n {
                if self.is_outer_vertex(w) {
                    continue;
                }
                let common: Vec<V> = self.adj[u]
                    .iter()
                    .copied()
                    .filter(|x| !self.is_outer_vertex(*x) && self.adj[w].contains(x))
                    .collect();
                if common.len() < 3 {
                    continue;
                }
                // `common` is in cw order around u; find the wrap-around gap:
                // the consecutive circular pair whose 4-cycle contains all the
                // other fan vertices in its interior.
                let k = common.len();
                let mut start = None;
                for i in 0..k {
                    let a = common[i];
                    let b = common[(i + 1) % k];
                    let cr = self.cycle_ref([u, a, w, b]);
                    let rest: BTreeSet<V> = common
                        .iter()
                        .copied()
                        .filter(|&x| x != a && x != b)
                        .collect();
                    if rest.iter().all(|x| cr.interior_vertices.contains(x)) {
                        start = Some((i + 1) % k);
                        break;
                    }
                }
                let Some(s) = start else {
                    continue;
                };
                let fan: Vec<V> = (0..k).map(|i| common[(s + i) % k]).collect();
                out.push(K2i { poles: (u, w), fan });
            }
        }
        out
    }

    /// Decompose at a separating 4-cycle into the inner component (cycle as
    /// outer face) and the outer component (interior contracted to a fresh
    /// vertex v_C). Trivial separating cycles are allowed; the inner
    /// component is then a pinwheel.
    pub fn decompose(&self, c: &CycleRef) -> Result<(SeparationComponent, SeparationComponent), DecomposeError> {
        if c.kind == CycleKind::Empty {
            return Err(DecomposeError::NotSeparating);
        }
        let cyc = c.vertices;
        let cyc_set: BTreeSet<V> = cyc.iter().copied().collect();

        // inner: induced on cycle + interior
        let mut inner_raw = RawGraph {
            vertices: Vec::new(),
            adjacency_cw: BTreeMap::new(),
            outer: [
                self.names[cyc[0]].clone(),
                self.names[cyc[1]].clone(),
                self.names[cyc[2]].clone(),
                self.names[cyc[3]].clone(),
            ],
        };
        let keep: BTreeSet<V> = cyc_set.union(&c.interior_vertices).copied().collect();
        for &v in &keep {
            inner_raw.vertices.push(self.names[v].clone());
            let kept: Vec<String> = self.adj[v]
                .iter()
                .filter(|x| {
                    // keep edges within the component, but for cycle vertices
                    // drop the chordless-irrelevant exterior neighbors
                    keep.contains(x)
                })
                .map(|&x| self.names[x].clone())
                .collect();
            inner_raw.adjacency_cw.insert(self.names[v].clone(), kept);
        }
        let inner = PlaneGraph::build(&inner_raw).map_err(DecomposeError::Rebuild)?;

        // outer: contract interior to v_C
        let fresh = self.fresh_name("vC");
        let mut outer_raw = RawGraph {
            vertices: Vec::new(),
            adjacency_cw: BTreeMap::new(),
            outer: [
                self.names[self.outer[0]].clone(),
                self.names[self.outer[1]].clone(),
                self.names[self.outer[2]].clone(),
                self.names[self.outer[3]].clone(),
            ],
        };
        for v in self.vertices() {
            if c.interior_vertices.contains(&v) {
                continue;
            }
            outer_raw.vertices.push(self.names[v].clone());
            let mut list: Vec<String> = Vec::new();
            let mut placed_vc = false;
            for &x in &self.adj[v] {
                if c.interior_vertices.contains(&x) {
                    if cyc_set.contains(&v) && !placed_vc {
                        list.push(fresh.clone());
                        placed_vc = true;
                    }
                } else {
                    list.push(self.names[x].clone());
                }
            }
            outer_raw.adjacency_cw.insert(self.names[v].clone(), list);
        }
        outer_raw.vertices.push(fresh.clone());
        // v_C sees the cycle in its listed (clockwise) order
        outer_raw.adjacency_cw.insert(
            fresh.clone(),
            cyc.iter().map(|&v| self.names[v].clone()).collect(),
        );
        let outer = PlaneGraph::build(&outer_raw).map_err(DecomposeError::Rebuild)?;

        Ok((
            SeparationComponent {
                kind: ComponentKind::Inner,
                graph: inner,
                contracted_vertex: None,
            },
            SeparationComponent {
                kind: ComponentKind::Outer,
                graph: outer,
                contracted_vertex: Some(fresh),
            },
        ))
    }

    /// Recursively decompose at nontrivial separating 4-cycles until none
    /// remain.
    pub fn minimal_separation_components(&self) -> Vec<SeparationComponent> {
        let nontrivial = self
            .classify_4cycles()
            .into_iter()
            .find(|c| c.kind == CycleKind::NontrivialSeparating);
        match nontrivial {
            None => vec![SeparationComponent {
                kind: ComponentKind::Inner,
                graph: self.clone(),
                contracted_vertex: None,
            }],
            Some(c) => {
                let (inner, outer) = self.decompose(&c).expect("nontrivial cycle decomposes");
                let mut out = inner.graph.minimal_separation_components();
                out.extend(outer.graph.minimal_separation_components());
                out
            }
        }
    }

    pub fn fresh_name(&self, tag: &str) -> String {
        let mut i = 0;
        loop {
            let cand = format!("{FRESH_PREFIX}{tag}{i}");
            if !self.lookup.contains_key(&cand) {
                return cand;
            }
            i += 1;
        }
    }

    /// View of the graph after rotating the picture 90 degrees
    /// counterclockwise: the rotation system is unchanged, outer roles shift.
    pub fn rotate_view_ccw(&self) -> PlaneGraph {
        let mut raw = self.to_raw();
        raw.outer = [
            self.names[self.outer[1]].clone(),
            self.names[self.outer[2]].clone(),
            self.names[self.outer[3]].clone(),
            self.names[self.outer[0]].clone(),
        ];
        PlaneGraph::build(&raw).expect("rotated view stays valid")
    }

    /// View after mirroring the picture left-right: all rotations reverse and
    /// West/East swap.
    pub fn mirror_view(&self) -> PlaneGraph {
        let mut raw = self.to_raw();
        for (_, list) in raw.adjacency_cw.iter_mut() {
            list.reverse();
        }
        raw.outer = [
            self.names[self.outer[0]].clone(),
            self.names[self.outer[3]].clone(),
            self.names[self.outer[2]].clone(),
            self.names[self.outer[1]].clone(),
        ];
        PlaneGraph::build(&raw).expect("mirrored view stays valid")
    }
}

fn norm(u: V, v: V) -> (V, V) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn cyclic_eq(a: &[V], b: &[V]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    let n = a.len();
    'outer: for s in 0..n {
        for i in 0..n {
            if a[(s + i) % n] != b[i] {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtpReport {
    pub issues: Vec<PtpIssue>,
}

impl PtpReport {
    pub fn ok(&self) -> bool {
        self.issues.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PtpIssue {
    OuterNotFourCycle { found: Vec<String> },
    NonTriangularInnerFace { face: Vec<String> },
    SeparatingTriangle { triangle: [String; 3] },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CycleKind {
    Empty,
    TrivialSeparating,
    NontrivialSeparating,
}

impl CycleKind {
    pub fn is_separating(&self) -> bool {
        !matches!(self, CycleKind::Empty)
    }
}

/// A classified 4-cycle with its interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleRef {
    /// clockwise order, traversal encloses the interior
    pub vertices: [V; 4],
    pub kind: CycleKind,
    pub interior_vertices: BTreeSet<V>,
    pub interior_edges: BTreeSet<(V, V)>,
    pub interior_faces: BTreeSet<FaceId>,
}

impl CycleRef {
    pub fn contains_vertex(&self, v: V) -> bool {
        self.vertices.contains(&v)
    }

    /// Sorted vertex key identifying the cycle independently of rotation.
    pub fn key(&self) -> [V; 4] {
        let mut k = self.vertices;
        k.sort();
        k
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K2i {
    pub poles: (V, V),
    /// common neighbors in fan order; the outermost 4-cycle uses the ends
    pub fan: Vec<V>,
}

impl K2i {
    pub fn i(&self) -> usize {
        self.fan.len()
    }

    pub fn outermost_cycle(&self) -> [V; 4] {
        [
            self.poles.0,
            self.fan[0],
            self.poles.1,
            *self.fan.last().unwrap(),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Inner,
    Outer,
}

#[derive(Debug, Clone)]
pub struct SeparationComponent {
    pub kind: ComponentKind,
    pub graph: PlaneGraph,
    pub contracted_vertex: Option<String>,
}

#[derive(Debug, Error)]
pub enum DecomposeError {
    #[error("cycle is not separating")]
    NotSeparating,
    #[error("component rebuild failed: {0}")]
    Rebuild(BuildError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn pinwheel_builds() {
        let g = gen::pinwheel();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().len(), 8);
        // 4 inner triangular faces + outer
        assert_eq!(g.faces().len(), 5);
        assert!(g.validate_ptp().ok());
        // inner triangles = 2n - 6
        assert_eq!(g.triangles().len(), 2 * g.n() - 6);
    }

    #[test]
    fn bare_quad_is_not_ptp() {
        let raw = RawGraph {
            vertices: vec!["S".into(), "W".into(), "N".into(), "E".into()],
            adjacency_cw: [
                ("S", vec!["W", "E"]),
                ("W", vec!["N", "S"]),
                ("N", vec!["E", "W"]),
                ("E", vec!["S", "N"]),
            ]
            .into_iter()
            .map(|(k, v): (&str, Vec<&str>)| {
                (k.to_string(), v.into_iter().map(String::from).collect())
            })
            .collect(),
            outer: ["S".into(), "W".into(), "N".into(), "E".into()],
        };
        let g = PlaneGraph::build(&raw).unwrap();
        let report = g.validate_ptp();
        assert!(!report.ok());
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, PtpIssue::NonTriangularInnerFace { .. })));
    }

    #[test]
    fn inconsistent_adjacency_rejected() {
        let raw = RawGraph {
            vertices: vec!["a".into(), "b".into()],
            adjacency_cw: [("a".to_string(), vec!["b".to_string()]), ("b".to_string(), vec![])]
                .into_iter()
                .collect(),
            outer: ["a".into(), "b".into(), "a".into(), "b".into()],
        };
        assert!(matches!(
            PlaneGraph::build(&raw),
            Err(BuildError::InconsistentEmbedding(_)) | Err(BuildError::OuterNotFour(_))
        ));
    }

    #[test]
    fn g8_classification() {
        let g = gen::g8();
        assert!(g.validate_ptp().ok());
        let cycles = g.classify_4cycles();
        let empty: Vec<_> = cycles.iter().filter(|c| c.kind == CycleKind::Empty).collect();
        assert_eq!(empty.len(), 1);
        let c = empty[0];
        assert_eq!(c.interior_vertices.len(), 0);
        assert_eq!(c.interior_edges.len(), 1);
    }

    #[test]
    fn pinwheel_has_no_inner_4cycles() {
        let g = gen::pinwheel();
        assert!(g.classify_4cycles().is_empty());
    }

    #[test]
    fn nested_pinwheel_has_trivial_cycle() {
        let g = gen::nested_pinwheel();
        assert!(g.validate_ptp().ok());
        let cycles = g.classify_4cycles();
        let trivial: Vec<_> = cycles
            .iter()
            .filter(|c| c.kind == CycleKind::TrivialSeparating)
            .collect();
        assert_eq!(trivial.len(), 1);
    }

    #[test]
    fn decompose_nested_pinwheel() {
        let g = gen::nested_pinwheel();
        let cycles = g.classify_4cycles();
        let c = cycles
            .iter()
            .find(|c| c.kind == CycleKind::TrivialSeparating)
            .unwrap();
        let (inner, outer) = g.decompose(c).unwrap();
        // inner component is a pinwheel
        assert_eq!(inner.graph.n(), 5);
        assert!(inner.graph.validate_ptp().ok());
        assert!(outer.graph.validate_ptp().ok());
        assert_eq!(outer.graph.n(), g.n() - c.interior_vertices.len() + 1);
        assert!(outer.contracted_vertex.is_some());
    }

    #[test]
    fn decompose_rejects_empty_cycle() {
        let g = gen::g8();
        let cycles = g.classify_4cycles();
        let c = cycles.iter().find(|c| c.kind == CycleKind::Empty).unwrap();
        assert!(matches!(g.decompose(c), Err(DecomposeError::NotSeparating)));
    }

    #[test]
    fn separation_components() {
        assert_eq!(gen::pinwheel().minimal_separation_components().len(), 1);
        assert_eq!(gen::g8().minimal_separation_components().len(), 1);
        let nested = gen::nested();
        assert!(nested.validate_ptp().ok());
        assert_eq!(nested.minimal_separation_components().len(), 2);
        let deep = gen::doubly_nested();
        assert!(deep.validate_ptp().ok());
        let comps = deep.minimal_separation_components();
        assert_eq!(comps.len(), 3);
        // every original inner vertex lands in exactly one component
        let mut count: BTreeMap<String, usize> = BTreeMap::new();
        for comp in &comps {
            for v in comp.graph.vertices() {
                let name = comp.graph.name(v).to_string();
                if deep.vertex(&name).is_some() && !deep.is_outer_vertex(deep.vertex(&name).unwrap())
                {
                    *count.entry(name).or_default() += 1;
                }
            }
        }
        for v in deep.vertices() {
            if !deep.is_outer_vertex(v) {
                let c = count.get(deep.name(v)).copied().unwrap_or(0);
                assert!(
                    c >= 1,
                    "inner vertex {} missing from components",
                    deep.name(v)
                );
            }
        }
    }

    #[test]
    fn k2i_detection() {
        let g = gen::ladder(5);
        assert!(g.validate_ptp().ok());
        let k2is = g.maximal_k2i();
        let big: Vec<_> = k2is.iter().filter(|k| k.i() == 5).collect();
        assert_eq!(big.len(), 1);
        let k = big[0];
        let oc = k.outermost_cycle();
        let cr = g.cycle_ref(oc);
        assert_eq!(cr.interior_vertices.len(), 3);
        assert!(gen::pinwheel().maximal_k2i().is_empty());
        assert!(gen::g8().maximal_k2i().is_empty());
    }

    #[test]
    fn views_roundtrip() {
        let g = gen::g8();
        let r = g
            .rotate_view_ccw()
            .rotate_view_ccw()
            .rotate_view_ccw()
            .rotate_view_ccw();
        assert_eq!(r.to_raw(), g.to_raw());
        let m = g.mirror_view().mirror_view();
        assert_eq!(m.to_raw(), g.to_raw());
    }
}
