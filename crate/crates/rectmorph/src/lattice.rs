//! The distributive lattice of RELs: rotations of alternating 4-cycles,
//! extremal elements, rotation counts, meet/join, shortest rotation plans,
//! and a brute-force lattice oracle for small graphs.

use crate::plane_graph::{CycleKind, CycleRef, PlaneGraph, V};
use crate::rel::{self, Color, EdgeLabel, Rel};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Direction {
    Cw,
    Ccw,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::Cw => Direction::Ccw,
            Direction::Ccw => Direction::Cw,
        }
    }
}

/// One lattice move: rotating an alternating 4-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotation {
    pub cycle: CycleRef,
    pub direction: Direction,
}

/// A sequence of rotations with the hash of each intermediate REL.
#[derive(Debug, Clone, Default)]
pub struct RotationPlan {
    pub rotations: Vec<Rotation>,
    pub rel_hashes: Vec<String>,
}

impl RotationPlan {
    pub fn len(&self) -> usize {
        self.rotations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rotations.is_empty()
    }
}

/// Rotation counts per rotatable 4-cycle, keyed by the sorted vertex tuple.
pub type RotationCounts = BTreeMap<[V; 4], u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("cycle is not alternating in this REL")]
    NotAlternating,
    #[error("cycle cannot rotate in the requested direction")]
    WrongDirection,
    #[error("graph too large for the brute-force lattice")]
    TooLarge,
    #[error("rotation plan exceeded the n^2 safety bound")]
    PlanTooLong,
}

/// The canonical corner labeling (a, b, c, d) of an alternating cycle:
/// `a` is the corner whose two cycle edges are both outgoing.
pub fn canonical_corners(_g: &PlaneGraph, l: &Rel, c: &CycleRef) -> Option<[V; 4]> {
    let vs = c.vertices;
    // check alternation
    for i in 0..4 {
        let (u, v) = (vs[i], vs[(i + 1) % 4]);
        let cu = l.color(u, v)?;
        let cv = l.color(vs[(i + 1) % 4], vs[(i + 2) % 4])?;
        if cu == cv {
            return None;
        }
    }
    for s in 0..4 {
        let a = vs[s];
        let prev = vs[(s + 3) % 4];
        let next = vs[(s + 1) % 4];
        let out_next = l.directed(a, next)?; // a -> next?
        let out_prev = l.directed(a, prev)?;
        if out_next && out_prev {
            // clockwise order from a
            return Some([a, next, vs[(s + 2) % 4], prev]);
        }
    }
    None
}

/// The direction in which an alternating cycle can rotate, with its
/// canonical corners. Uses the corner-role table: at each corner, the color
/// and orientation of its interior-incident edges determine the direction.
pub fn rotation_direction(_g: &PlaneGraph, l: &Rel, c: &CycleRef) -> Option<(Direction, [V; 4])> {
    let corners = canonical_corners(_g, l, c)?;
    let mut decided: Option<Direction> = None;
    for (idx, &x) in corners.iter().enumerate() {
        for &(eu, ev) in &c.interior_edges {
            let (other, at) = if eu == x {
                (ev, x)
            } else if ev == x {
                (eu, x)
            } else {
                continue;
            };
            let lab = l.label(at, other)?;
            let outgoing = lab.tail == at;
            // role table per corner index: (color, outgoing) that means cw
            let dir = match (idx, lab.color, outgoing) {
                (0, Color::Blue, true) => Direction::Cw,
                (0, Color::Red, true) => Direction::Ccw,
                (1, Color::Red, true) => Direction::Cw,
                (1, Color::Blue, false) => Direction::Ccw,
                (2, Color::Blue, false) => Direction::Cw,
                (2, Color::Red, false) => Direction::Ccw,
                (3, Color::Red, false) => Direction::Cw,
                (3, Color::Blue, true) => Direction::Ccw,
                _ => return None, // inconsistent corner; not rotatable
            };
            match decided {
                None => decided = Some(dir),
                Some(d) if d != dir => return None,
                _ => {}
            }
        }
    }
    decided.map(|d| (d, corners))
}

/// All alternating 4-cycles split by available rotation direction.
pub fn alternating_4cycles(g: &PlaneGraph, l: &Rel) -> (Vec<CycleRef>, Vec<CycleRef>) {
    let mut cw = Vec::new();
    let mut ccw = Vec::new();
    for c in g.classify_4cycles() {
        if let Some((dir, _)) = rotation_direction(g, l, &c) {
            match dir {
                Direction::Cw => cw.push(c),
                Direction::Ccw => ccw.push(c),
            }
        }
    }
    (cw, ccw)
}

/// Rotate an alternating cycle: swap the colors of all interior edges and
/// re-fix orientations (cw: blue u->v becomes red u->v, red u->v becomes
/// blue v->u; ccw is the inverse).
pub fn rotate(g: &PlaneGraph, l: &Rel, c: &CycleRef, direction: Direction) -> Result<Rel, LatticeError> {
    let Some((avail, _)) = rotation_direction(g, l, c) else {
        return Err(LatticeError::NotAlternating);
    };
    if avail != direction {
        return Err(LatticeError::WrongDirection);
    }
    let mut out = l.clone();
    for &(u, v) in &c.interior_edges {
        let lab = l.label(u, v).expect("interior edge labeled");
        let new = match (direction, lab.color) {
            (Direction::Cw, Color::Blue) => EdgeLabel { color: Color::Red, tail: lab.tail, head: lab.head },
            (Direction::Cw, Color::Red) => EdgeLabel { color: Color::Blue, tail: lab.head, head: lab.tail },
            (Direction::Ccw, Color::Red) => EdgeLabel { color: Color::Blue, tail: lab.tail, head: lab.head },
            (Direction::Ccw, Color::Blue) => EdgeLabel { color: Color::Red, tail: lab.head, head: lab.tail },
        };
        out.set(new);
    }
    debug_assert!(rel::validate_rel(g, &out).ok(), "rotation preserves REL validity");
    Ok(out)
}

fn greedy_extremal(
    g: &PlaneGraph,
    l: &Rel,
    direction: Direction,
) -> Result<(Rel, RotationPlan), LatticeError> {
    let mut cur = l.clone();
    let mut plan = RotationPlan::default();
    let bound = g.n() * g.n() + 8;
    loop {
        let (cw, ccw) = alternating_4cycles(g, &cur);
        let mut avail = match direction {
            Direction::Cw => cw,
            Direction::Ccw => ccw,
        };
        if avail.is_empty() {
            return Ok((cur, plan));
        }
        // deterministic: lexicographically smallest cycle first
        avail.sort_by_key(|c| c.key());
        let c = avail.remove(0);
        cur = rotate(g, &cur, &c, direction)?;
        plan.rel_hashes.push(cur.hash_hex(g));
        plan.rotations.push(Rotation { cycle: c, direction });
        if plan.len() > bound {
            return Err(LatticeError::PlanTooLong);
        }
    }
}

/// Greedy cw rotations to the minimum REL.
pub fn to_min(g: &PlaneGraph, l: &Rel) -> Result<(Rel, RotationPlan), LatticeError> {
    greedy_extremal(g, l, Direction::Cw)
}

/// Greedy ccw rotations to the maximum REL.
pub fn to_max(g: &PlaneGraph, l: &Rel) -> Result<(Rel, RotationPlan), LatticeError> {
    greedy_extremal(g, l, Direction::Ccw)
}

/// Rotation counts: how often each cycle rotates on a monotone path from the
/// minimum REL to `l` (counted by running the greedy descent).
pub fn rotation_counts(g: &PlaneGraph, l: &Rel) -> Result<RotationCounts, LatticeError> {
    let (_, plan) = to_min(g, l)?;
    let mut counts: RotationCounts = BTreeMap::new();
    for r in &plan.rotations {
        *counts.entry(r.cycle.key()).or_default() += 1;
    }
    Ok(counts)
}

/// Rebuild the REL whose rotation counts are `target`, by ccw rotations from
/// the minimum.
fn rel_from_counts(g: &PlaneGraph, minimum: &Rel, target: &RotationCounts) -> Result<Rel, LatticeError> {
    let mut cur = minimum.clone();
    let mut done: RotationCounts = BTreeMap::new();
    let bound = g.n() * g.n() + 8;
    let mut steps = 0;
    loop {
        let (_, ccw) = alternating_4cycles(g, &cur);
        let mut made = false;
        let mut avail = ccw;
        avail.sort_by_key(|c| c.key());
        for c in avail {
            let want = target.get(&c.key()).copied().unwrap_or(0);
            let have = done.get(&c.key()).copied().unwrap_or(0);
            if have < want {
                cur = rotate(g, &cur, &c, Direction::Ccw)?;
                *done.entry(c.key()).or_default() += 1;
                made = true;
                steps += 1;
                break;
            }
        }
        if !made {
            return Ok(cur);
        }
        if steps > bound {
            return Err(LatticeError::PlanTooLong);
        }
    }
}

/// Meet via the componentwise minimum of rotation counts.
pub fn meet(g: &PlaneGraph, a: &Rel, b: &Rel) -> Result<Rel, LatticeError> {
    let (min_rel, _) = to_min(g, a)?;
    let ca = rotation_counts(g, a)?;
    let cb = rotation_counts(g, b)?;
    let mut target: RotationCounts = BTreeMap::new();
    for (k, &va) in &ca {
        let vb = cb.get(k).copied().unwrap_or(0);
        let m = va.min(vb);
        if m > 0 {
            target.insert(*k, m);
        }
    }
    rel_from_counts(g, &min_rel, &target)
}

/// Join via the componentwise maximum of rotation counts.
pub fn join(g: &PlaneGraph, a: &Rel, b: &Rel) -> Result<Rel, LatticeError> {
    let (min_rel, _) = to_min(g, a)?;
    let ca = rotation_counts(g, a)?;
    let cb = rotation_counts(g, b)?;
    let mut target: RotationCounts = BTreeMap::new();
    for k in ca.keys().chain(cb.keys()) {
        let va = ca.get(k).copied().unwrap_or(0);
        let vb = cb.get(k).copied().unwrap_or(0);
        let m = va.max(vb);
        if m > 0 {
            target.insert(*k, m);
        }
    }
    rel_from_counts(g, &min_rel, &target)
}

/// Shortest rotation plan from `a` to `b`: a cw descent from `a` to the meet
/// followed by ccw ascents to `b`.
pub fn shortest_path(g: &PlaneGraph, a: &Rel, b: &Rel) -> Result<RotationPlan, LatticeError> {
    let bar = meet(g, a, b)?;
    let counts_bar = rotation_counts(g, &bar)?;
    let mut plan = RotationPlan::default();
    // descend from a to the meet: rotate cw any cycle whose count exceeds the
    // meet's count
    let mut cur = a.clone();
    let mut counts_cur = rotation_counts(g, &cur)?;
    let bound = g.n() * g.n() + 8;
    while counts_cur != counts_bar {
        let (cw, _) = alternating_4cycles(g, &cur);
        let mut avail = cw;
        avail.sort_by_key(|c| c.key());
        let mut made = false;
        for c in avail {
            let have = counts_cur.get(&c.key()).copied().unwrap_or(0);
            let want = counts_bar.get(&c.key()).copied().unwrap_or(0);
            if have > want {
                cur = rotate(g, &cur, &c, Direction::Cw)?;
                plan.rel_hashes.push(cur.hash_hex(g));
                plan.rotations.push(Rotation { cycle: c.clone(), direction: Direction::Cw });
                let e = counts_cur.entry(c.key()).or_default();
                *e -= 1;
                if *e == 0 {
                    counts_cur.remove(&c.key());
                }
                made = true;
                break;
            }
        }
        if !made || plan.len() > bound {
            return Err(LatticeError::PlanTooLong);
        }
    }
    // ascend from the meet to b
    let counts_b = rotation_counts(g, b)?;
    while counts_cur != counts_b {
        let (_, ccw) = alternating_4cycles(g, &cur);
        let mut avail = ccw;
        avail.sort_by_key(|c| c.key());
        let mut made = false;
        for c in avail {
            let have = counts_cur.get(&c.key()).copied().unwrap_or(0);
            let want = counts_b.get(&c.key()).copied().unwrap_or(0);
            if have < want {
                cur = rotate(g, &cur, &c, Direction::Ccw)?;
                plan.rel_hashes.push(cur.hash_hex(g));
                plan.rotations.push(Rotation { cycle: c.clone(), direction: Direction::Ccw });
                *counts_cur.entry(c.key()).or_default() += 1;
                made = true;
                break;
            }
        }
        if !made || plan.len() > bound {
            return Err(LatticeError::PlanTooLong);
        }
    }
    debug_assert_eq!(cur, *b, "plan reaches the target REL");
    Ok(plan)
}

/// The full lattice of a small graph: nodes are RELs, directed edges are ccw
/// rotations (upward moves).
#[derive(Debug, Clone)]
pub struct BruteLattice {
    pub rels: Vec<Rel>,
    /// upward (ccw) edges between rel indices
    pub edges: Vec<(usize, usize)>,
    pub min_index: usize,
    pub max_index: usize,
}

impl BruteLattice {
    pub fn index_of(&self, g: &PlaneGraph, l: &Rel) -> Option<usize> {
        self.rels.iter().position(|r| r == l).or_else(|| {
            let key = l.canonical_string(g);
            self.rels.iter().position(|r| r.canonical_string(g) == key)
        })
    }

    /// Undirected BFS distance between two lattice nodes.
    pub fn distance(&self, from: usize, to: usize) -> usize {
        let n = self.rels.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut dist = vec![usize::MAX; n];
        dist[from] = 0;
        let mut q = VecDeque::from([from]);
        while let Some(v) = q.pop_front() {
            if v == to {
                return dist[v];
            }
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        usize::MAX
    }

    /// order relation: a <= b iff b reachable from a by upward edges
    fn le(&self) -> Vec<BTreeSet<usize>> {
        let n = self.rels.len();
        let mut up = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            up[a].push(b);
        }
        let mut reach = vec![BTreeSet::new(); n];
        // reverse topological closure via repeated BFS (small lattices)
        for s in 0..n {
            let mut q = VecDeque::from([s]);
            let mut seen = BTreeSet::from([s]);
            while let Some(v) = q.pop_front() {
                for &w in &up[v] {
                    if seen.insert(w) {
                        q.push_back(w);
                    }
                }
            }
            reach[s] = seen;
        }
        reach
    }

    /// Meet in the explicit lattice: the greatest common lower bound
    /// (x <= y iff y is reachable from x along upward edges).
    pub fn meet_of(&self, a: usize, b: usize) -> usize {
        let reach = self.le();
        let lower: Vec<usize> = (0..self.rels.len())
            .filter(|&x| reach[x].contains(&a) && reach[x].contains(&b))
            .collect();
        *lower
            .iter()
            .find(|&&x| lower.iter().all(|&y| reach[y].contains(&x)))
            .expect("distributive lattice has a unique meet")
    }

    pub fn join_of(&self, a: usize, b: usize) -> usize {
        let reach = self.le();
        let upper: Vec<usize> = (0..self.rels.len())
            .filter(|&x| reach[a].contains(&x) && reach[b].contains(&x))
            .collect();
        *upper
            .iter()
            .find(|&&x| upper.iter().all(|&y| reach[x].contains(&y)))
            .expect("distributive lattice has a unique join")
    }
}

/// Build the full rotation graph over all RELs of a small graph.
pub fn lattice_bruteforce(g: &PlaneGraph) -> Result<BruteLattice, LatticeError> {
    let rels = rel::enumerate_rels(g).map_err(|_| LatticeError::TooLarge)?;
    let key_of: BTreeMap<String, usize> = rels
        .iter()
        .enumerate()
        .map(|(i, r)| (r.canonical_string(g), i))
        .collect();
    let mut edges = Vec::new();
    for (i, r) in rels.iter().enumerate() {
        let (_, ccw) = alternating_4cycles(g, r);
        for c in ccw {
            let next = rotate(g, r, &c, Direction::Ccw)?;
            let j = key_of[&next.canonical_string(g)];
            edges.push((i, j));
        }
    }
    let mut has_in = vec![false; rels.len()];
    let mut has_out = vec![false; rels.len()];
    for &(a, b) in &edges {
        has_out[a] = true;
        has_in[b] = true;
    }
    let mins: Vec<usize> = (0..rels.len()).filter(|&i| !has_in[i]).collect();
    let maxs: Vec<usize> = (0..rels.len()).filter(|&i| !has_out[i]).collect();
    assert_eq!(mins.len(), 1, "unique minimum REL");
    assert_eq!(maxs.len(), 1, "unique maximum REL");
    Ok(BruteLattice {
        rels,
        edges,
        min_index: mins[0],
        max_index: maxs[0],
    })
}

/// Cycles rotatable in some REL never properly interleave: their interiors
/// (vertex and edge sets) are disjoint or one contains the other. Two
/// rotatable cycles may still overlap when one is empty and its single
/// interior edge lies on the other cycle.
pub fn interiors_disjoint_or_nested(a: &CycleRef, b: &CycleRef) -> bool {
    if a.key() == b.key() {
        return true;
    }
    let va: &BTreeSet<V> = &a.interior_vertices;
    let vb = &b.interior_vertices;
    let ea = &a.interior_edges;
    let eb = &b.interior_edges;
    let disjoint = va.intersection(vb).next().is_none() && ea.intersection(eb).next().is_none();
    let a_in_b = va.is_subset(vb) && ea.is_subset(eb);
    let b_in_a = vb.is_subset(va) && eb.is_subset(ea);
    disjoint || a_in_b || b_in_a
}

pub fn kind_of(c: &CycleRef) -> CycleKind {
    c.kind
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::rel::{enumerate_rels, initial_rel, validate_rel};

    #[test]
    fn pinwheel_lattice_is_singleton() {
        let g = gen::pinwheel();
        let lat = lattice_bruteforce(&g).unwrap();
        assert_eq!(lat.rels.len(), 1);
        assert!(lat.edges.is_empty());
        let l = initial_rel(&g).unwrap();
        let (cw, ccw) = alternating_4cycles(&g, &l);
        assert!(cw.is_empty() && ccw.is_empty());
    }

    #[test]
    fn g8_lattice_two_nodes() {
        let g = gen::g8();
        let lat = lattice_bruteforce(&g).unwrap();
        assert_eq!(lat.rels.len(), 2);
        assert_eq!(lat.edges.len(), 1);
        // exactly one cycle alternates, in exactly one direction per REL
        for r in &lat.rels {
            let (cw, ccw) = alternating_4cycles(&g, r);
            assert_eq!(cw.len() + ccw.len(), 1);
        }
    }

    #[test]
    fn rotate_roundtrip_identity() {
        let g = gen::g8();
        let l = initial_rel(&g).unwrap();
        let (cw, ccw) = alternating_4cycles(&g, &l);
        let (c, d) = if let Some(c) = cw.first() {
            (c.clone(), Direction::Cw)
        } else {
            (ccw[0].clone(), Direction::Ccw)
        };
        let r1 = rotate(&g, &l, &c, d).unwrap();
        assert!(validate_rel(&g, &r1).ok());
        assert_ne!(r1, l);
        let c_back = g.cycle_ref(c.vertices);
        let back = rotate(&g, &r1, &c_back, d.reverse()).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn trivial_cycle_rotation_flips_four_spokes() {
        let g = gen::nested_pinwheel();
        let l = initial_rel(&g).unwrap();
        let (cw, ccw) = alternating_4cycles(&g, &l);
        let all: Vec<_> = cw.iter().chain(ccw.iter()).collect();
        let c = all
            .iter()
            .find(|c| c.kind == CycleKind::TrivialSeparating)
            .expect("quad is rotatable");
        let dir = rotation_direction(&g, &l, c).unwrap().0;
        let r = rotate(&g, &l, c, dir).unwrap();
        let mut changed = 0;
        for (k, lab) in l.labels() {
            if r.label(k.0, k.1).unwrap().color != lab.color {
                changed += 1;
            }
        }
        assert_eq!(changed, 4, "the four spokes recolor");
    }

    #[test]
    fn min_is_unique_fixed_point() {
        let g = gen::g8();
        let lat = lattice_bruteforce(&g).unwrap();
        let mut mins = BTreeSet::new();
        let mut maxs = BTreeSet::new();
        for r in &lat.rels {
            let (m, _) = to_min(&g, r).unwrap();
            mins.insert(m.canonical_string(&g));
            let (x, _) = to_max(&g, r).unwrap();
            maxs.insert(x.canonical_string(&g));
        }
        assert_eq!(mins.len(), 1);
        assert_eq!(maxs.len(), 1);
        let min_rel = &lat.rels[lat.min_index];
        let (cw, _) = alternating_4cycles(&g, min_rel);
        assert!(cw.is_empty(), "minimum admits no cw rotation");
    }

    #[test]
    fn counts_and_meet_against_bruteforce() {
        for g in [gen::g8(), gen::nested_pinwheel(), gen::nested()] {
            let lat = lattice_bruteforce(&g).unwrap();
            for (i, a) in lat.rels.iter().enumerate() {
                for (j, b) in lat.rels.iter().enumerate() {
                    let m = meet(&g, a, b).unwrap();
                    let mi = lat.index_of(&g, &m).unwrap();
                    assert_eq!(mi, lat.meet_of(i, j), "meet matches lattice");
                    let jn = join(&g, a, b).unwrap();
                    let ji = lat.index_of(&g, &jn).unwrap();
                    assert_eq!(ji, lat.join_of(i, j), "join matches lattice");
                    let plan = shortest_path(&g, a, b).unwrap();
                    assert_eq!(plan.len(), lat.distance(i, j), "plan length = BFS distance");
                }
            }
        }
    }

    #[test]
    fn meet_idempotent_and_absorbing() {
        let g = gen::nested();
        let rels = enumerate_rels(&g).unwrap();
        let l = &rels[0];
        assert_eq!(&meet(&g, l, l).unwrap(), l);
        let (min_rel, _) = to_min(&g, l).unwrap();
        assert_eq!(meet(&g, &min_rel, l).unwrap(), min_rel);
    }

    #[test]
    fn rel_count_multiplies_over_components() {
        let g = gen::nested();
        let total = enumerate_rels(&g).unwrap().len();
        let comps = g.minimal_separation_components();
        let mut product = 1;
        for comp in &comps {
            product *= enumerate_rels(&comp.graph).unwrap().len();
        }
        assert_eq!(total, product);
    }

    #[test]
    fn enumeration_closed_under_rotation() {
        let g = gen::nested();
        let rels = enumerate_rels(&g).unwrap();
        let keys: BTreeSet<String> = rels.iter().map(|r| r.canonical_string(&g)).collect();
        for r in &rels {
            let (cw, ccw) = alternating_4cycles(&g, r);
            for (c, d) in cw
                .iter()
                .map(|c| (c, Direction::Cw))
                .chain(ccw.iter().map(|c| (c, Direction::Ccw)))
            {
                let next = rotate(&g, r, c, d).unwrap();
                assert!(keys.contains(&next.canonical_string(&g)));
            }
        }
    }

    #[test]
    fn counts_independent_of_greedy_order() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = gen::nested();
        let rels = enumerate_rels(&g).unwrap();
        let l = rels.last().unwrap();
        let reference = rotation_counts(&g, l).unwrap();
        for seed in 0..5u64 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut cur = l.clone();
            let mut counts: RotationCounts = BTreeMap::new();
            let mut total = 0;
            loop {
                let (mut cw, _) = alternating_4cycles(&g, &cur);
                if cw.is_empty() {
                    break;
                }
                cw.shuffle(&mut rng);
                let c = cw.remove(0);
                cur = rotate(&g, &cur, &c, Direction::Cw).unwrap();
                *counts.entry(c.key()).or_default() += 1;
                total += 1;
                assert!(total <= g.n() * g.n());
            }
            assert_eq!(counts, reference, "randomized greedy order, seed {seed}");
        }
    }

    #[test]
    fn monotone_paths_equal_length() {
        let g = gen::nested();
        let rels = enumerate_rels(&g).unwrap();
        for a in &rels {
            for b in &rels {
                let ca = rotation_counts(&g, a).unwrap();
                let cb = rotation_counts(&g, b).unwrap();
                let down: u32 = ca
                    .iter()
                    .map(|(k, &v)| v.saturating_sub(cb.get(k).copied().unwrap_or(0)))
                    .sum();
                let up: u32 = cb
                    .iter()
                    .map(|(k, &v)| v.saturating_sub(ca.get(k).copied().unwrap_or(0)))
                    .sum();
                let plan = shortest_path(&g, a, b).unwrap();
                assert_eq!(plan.len() as u32, down + up);
            }
        }
    }

    #[test]
    fn rotatable_interiors_disjoint_or_nested() {
        for g in [gen::nested(), gen::fig12_with_dual().0] {
            let rels = enumerate_rels(&g).unwrap();
            let mut rotatable: Vec<CycleRef> = Vec::new();
            for r in &rels {
                let (cw, ccw) = alternating_4cycles(&g, r);
                for c in cw.into_iter().chain(ccw) {
                    if !rotatable.iter().any(|x| x.key() == c.key()) {
                        rotatable.push(c);
                    }
                }
            }
            for a in &rotatable {
                for b in &rotatable {
                    assert!(interiors_disjoint_or_nested(a, b));
                }
            }
        }
    }
}
