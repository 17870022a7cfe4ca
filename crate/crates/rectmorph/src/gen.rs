//! Instance generators. Most families are built as explicit rectangle
//! tilings; the graph (with its clockwise rotation system) is extracted from
//! the geometry, which keeps the embeddings correct by construction.

use crate::geom::Rect;
use crate::plane_graph::{PlaneGraph, RawGraph};
use crate::rect_dual::RectDual;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Extract a plane graph from a rectangle tiling. The tiling must contain
/// the four frame rectangles named S, W, N, E.
pub fn graph_from_rects(rects: &BTreeMap<String, Rect>) -> PlaneGraph {
    let names: Vec<String> = rects.keys().cloned().collect();
    let mut adjacency_cw: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (name, r) in rects {
        let mut nbrs: Vec<(i64, i64, String)> = Vec::new();
        for (other, o) in rects {
            if other == name {
                continue;
            }
            let contact = r.contact(o);
            if !contact.is_positive() {
                continue;
            }
            // clockwise walk position of the contact midpoint (doubled to
            // stay integer): top side left-to-right, right side
            // top-to-bottom, bottom right-to-left, left bottom-to-top
            let key: (i64, i64) = if o.y1 == r.y2 {
                let lo = r.x1.max(o.x1);
                let hi = r.x2.min(o.x2);
                (0, lo + hi)
            } else if o.x1 == r.x2 {
                let lo = r.y1.max(o.y1);
                let hi = r.y2.min(o.y2);
                (1, -(lo + hi))
            } else if o.y2 == r.y1 {
                let lo = r.x1.max(o.x1);
                let hi = r.x2.min(o.x2);
                (2, -(lo + hi))
            } else {
                let lo = r.y1.max(o.y1);
                let hi = r.y2.min(o.y2);
                (3, lo + hi)
            };
            nbrs.push((key.0, key.1, other.clone()));
        }
        nbrs.sort();
        adjacency_cw.insert(name.clone(), nbrs.into_iter().map(|(_, _, n)| n).collect());
    }
    let raw = RawGraph {
        vertices: names,
        adjacency_cw,
        outer: ["S".into(), "W".into(), "N".into(), "E".into()],
    };
    PlaneGraph::build(&raw).expect("generated tiling yields a valid plane graph")
}

pub fn dual_from_rects(rects: &BTreeMap<String, Rect>) -> (PlaneGraph, RectDual) {
    let g = graph_from_rects(rects);
    let d = RectDual::from_named(&g, rects, false).expect("generated tiling is a valid dual");
    (g, d)
}

fn with_frame(inner: Vec<(&str, Rect)>, w_in: i64, h_in: i64) -> BTreeMap<String, Rect> {
    let mut out: BTreeMap<String, Rect> = BTreeMap::new();
    for (name, r) in inner {
        out.insert(
            name.to_string(),
            Rect { x1: r.x1 + 1, y1: r.y1 + 1, x2: r.x2 + 1, y2: r.y2 + 1 },
        );
    }
    out.insert("S".into(), Rect { x1: 0, y1: 0, x2: w_in + 1, y2: 1 });
    out.insert("W".into(), Rect { x1: 0, y1: 1, x2: 1, y2: h_in + 2 });
    out.insert("N".into(), Rect { x1: 1, y1: h_in + 1, x2: w_in + 2, y2: h_in + 2 });
    out.insert("E".into(), Rect { x1: w_in + 1, y1: 0, x2: w_in + 2, y2: h_in + 1 });
    out
}

/// Frame plus one inner vertex adjacent to all four.
pub fn pinwheel_rects() -> BTreeMap<String, Rect> {
    with_frame(vec![("v", Rect::new(0, 0, 1, 1))], 1, 1)
}

pub fn pinwheel() -> PlaneGraph {
    graph_from_rects(&pinwheel_rects())
}

pub fn pinwheel_with_dual() -> (PlaneGraph, RectDual) {
    dual_from_rects(&pinwheel_rects())
}

/// Frame plus an inner diamond a, b, c, d with the chord {a, c}.
pub fn g8_rects() -> BTreeMap<String, Rect> {
    with_frame(
        vec![
            ("a", Rect::new(0, 0, 2, 1)),
            ("b", Rect::new(0, 1, 1, 2)),
            ("c", Rect::new(1, 1, 3, 2)),
            ("d", Rect::new(2, 0, 3, 1)),
        ],
        3,
        2,
    )
}

pub fn g8() -> PlaneGraph {
    graph_from_rects(&g8_rects())
}

pub fn g8_with_dual() -> (PlaneGraph, RectDual) {
    dual_from_rects(&g8_rects())
}

/// A pinwheel placed inside the quad of a pinwheel-like frame: the quad is a
/// trivial separating 4-cycle.
pub fn nested_pinwheel() -> PlaneGraph {
    graph_from_rects(&with_frame(
        vec![
            ("p", Rect::new(0, 0, 2, 1)),
            ("q", Rect::new(0, 1, 1, 3)),
            ("r", Rect::new(1, 2, 3, 3)),
            ("t", Rect::new(2, 0, 3, 2)),
            ("u", Rect::new(1, 1, 2, 2)),
        ],
        3,
        3,
    ))
}

/// A quad whose interior holds two stacked vertices: one nontrivial
/// separating 4-cycle.
pub fn nested() -> PlaneGraph {
    graph_from_rects(&with_frame(
        vec![
            ("p", Rect::new(0, 0, 2, 1)),
            ("q", Rect::new(0, 1, 1, 4)),
            ("r", Rect::new(1, 3, 3, 4)),
            ("t", Rect::new(2, 0, 3, 3)),
            ("u1", Rect::new(1, 1, 2, 2)),
            ("u2", Rect::new(1, 2, 2, 3)),
        ],
        3,
        4,
    ))
}

/// Two levels of nontrivial separating 4-cycles around a stacked pair.
pub fn doubly_nested() -> PlaneGraph {
    graph_from_rects(&with_frame(
        vec![
            ("p1", Rect::new(0, 0, 4, 1)),
            ("q1", Rect::new(0, 1, 1, 6)),
            ("r1", Rect::new(1, 5, 5, 6)),
            ("t1", Rect::new(4, 0, 5, 5)),
            ("p2", Rect::new(1, 1, 3, 2)),
            ("q2", Rect::new(1, 2, 2, 5)),
            ("r2", Rect::new(2, 4, 4, 5)),
            ("t2", Rect::new(3, 1, 4, 4)),
            ("u1", Rect::new(2, 2, 3, 3)),
            ("u2", Rect::new(2, 3, 3, 4)),
        ],
        5,
        6,
    ))
}

/// Frame plus two stacked inner vertices (used for minimum-dimension checks).
pub fn stacked2() -> PlaneGraph {
    graph_from_rects(&with_frame(
        vec![("v1", Rect::new(0, 0, 1, 1)), ("v2", Rect::new(0, 1, 1, 2))],
        1,
        2,
    ))
}

/// Two poles u, w with an i-vertex fan between them: one maximal K_{2,i}.
pub fn ladder(i: i64) -> PlaneGraph {
    assert!(i >= 2);
    let mut inner = vec![
        ("u".to_string(), Rect::new(0, 0, 1, i)),
        ("w".to_string(), Rect::new(2, 0, 3, i)),
    ];
    for j in 0..i {
        inner.push((format!("v{}", j + 1), Rect::new(1, j, 2, j + 1)));
    }
    let named: Vec<(&str, Rect)> = inner.iter().map(|(n, r)| (n.as_str(), *r)).collect();
    graph_from_rects(&with_frame(named, 3, i))
}

/// Grid of j x j independent cw-rotatable empty 4-cycles, separated by
/// spacer columns and staggered brick rows so that no nontrivial separating
/// 4-cycle arises.
pub fn grid_rects(j: i64) -> BTreeMap<String, Rect> {
    assert!(j >= 1);
    let w_in = 6 * j + 2;
    let h_in = 3 * j + 1;
    let mut inner: Vec<(String, Rect)> = Vec::new();
    // unit rows
    for jj in 0..j {
        let y0 = 3 * jj + 1;
        let sh = jj; // stagger
        inner.push((format!("l{jj}"), Rect::new(0, y0, 2 + sh, y0 + 2)));
        for ii in 0..j {
            let x0 = 5 * ii + 2 + sh;
            inner.push((format!("a{ii}_{jj}"), Rect::new(x0, y0, x0 + 2, y0 + 1)));
            inner.push((format!("b{ii}_{jj}"), Rect::new(x0, y0 + 1, x0 + 1, y0 + 2)));
            inner.push((format!("c{ii}_{jj}"), Rect::new(x0 + 1, y0 + 1, x0 + 3, y0 + 2)));
            inner.push((format!("d{ii}_{jj}"), Rect::new(x0 + 2, y0, x0 + 3, y0 + 1)));
            inner.push((format!("s{ii}_{jj}"), Rect::new(x0 + 3, y0, x0 + 5, y0 + 2)));
        }
        let right_start = 5 * j + 2 + sh;
        inner.push((format!("r{jj}"), Rect::new(right_start, y0, w_in, y0 + 2)));
    }
    // brick rows (between unit rows, below the first and above the last)
    for jj in 0..=j {
        let y0 = 3 * jj;
        let sh = if jj < j { jj } else { j - 1 };
        let mut xs: Vec<i64> = vec![0];
        for ii in 0..j {
            xs.push(5 * ii + 3 + sh + if jj < j { 0 } else { 1 });
        }
        xs.push(w_in);
        for k in 0..(xs.len() - 1) {
            inner.push((format!("k{k}_{jj}"), Rect::new(xs[k], y0, xs[k + 1], y0 + 1)));
        }
    }
    let named: Vec<(&str, Rect)> = inner.iter().map(|(n, r)| (n.as_str(), *r)).collect();
    with_frame(named, w_in, h_in)
}

pub fn grid(j: i64) -> PlaneGraph {
    graph_from_rects(&grid_rects(j))
}

pub fn grid_with_dual(j: i64) -> (PlaneGraph, RectDual) {
    dual_from_rects(&grid_rects(j))
}

/// Four clockwise-rotatable empty 4-cycles sharing the vertex v (the
/// eight-gon configuration).
pub fn fig6_rects() -> BTreeMap<String, Rect> {
    with_frame(
        vec![
            ("v", Rect::new(2, 1, 5, 3)),
            ("x", Rect::new(2, 3, 3, 4)),
            ("t", Rect::new(3, 3, 6, 4)),
            ("da", Rect::new(5, 2, 6, 3)),
            ("r", Rect::new(5, 0, 6, 2)),
            ("br", Rect::new(3, 0, 5, 1)),
            ("bl", Rect::new(0, 0, 3, 1)),
            ("xc", Rect::new(0, 1, 2, 2)),
            ("le", Rect::new(1, 2, 2, 4)),
            ("g1", Rect::new(0, 2, 1, 4)),
        ],
        6,
        4,
    )
}

pub fn fig6_with_dual() -> (PlaneGraph, RectDual) {
    dual_from_rects(&fig6_rects())
}

/// One trivial separating 4-cycle whose upper border segment carries two
/// empty 4-cycles (the staggered-drop configuration).
pub fn fig12_rects() -> BTreeMap<String, Rect> {
    with_frame(
        vec![
            ("w", Rect::new(2, 1, 3, 2)),
            ("a", Rect::new(0, 0, 3, 1)),
            ("b", Rect::new(0, 1, 2, 3)),
            ("c", Rect::new(2, 2, 6, 3)),
            ("d", Rect::new(3, 0, 5, 2)),
            ("e1", Rect::new(5, 0, 7, 2)),
            ("e2", Rect::new(7, 0, 9, 2)),
            ("e3", Rect::new(9, 0, 11, 2)),
            ("f1", Rect::new(6, 2, 8, 3)),
            ("f2", Rect::new(8, 2, 10, 3)),
            ("f3", Rect::new(10, 2, 11, 3)),
        ],
        11,
        3,
    )
}

pub fn fig12_with_dual() -> (PlaneGraph, RectDual) {
    dual_from_rects(&fig12_rects())
}

/// Random PTP graph via a brick wall: rows of bricks with non-aligned joints,
/// then random vertical merges. Deterministic for a fixed seed.
pub fn wall_rects(w: i64, h: i64, seed: u64) -> BTreeMap<String, Rect> {
    assert!(w >= 2 && h >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<i64>> = Vec::new(); // breakpoints per row
    let mut prev: Vec<i64> = Vec::new();
    for _ in 0..h {
        let mut bps: Vec<i64> = Vec::new();
        for x in 1..w {
            if !prev.contains(&x) && rng.gen_bool(0.5) {
                bps.push(x);
            }
        }
        rows.push(bps.clone());
        prev = bps;
    }
    // build bricks
    let mut bricks: Vec<Rect> = Vec::new();
    for (y, bps) in rows.iter().enumerate() {
        let mut xs = vec![0];
        xs.extend(bps.iter().copied());
        xs.push(w);
        for k in 0..(xs.len() - 1) {
            bricks.push(Rect::new(xs[k], y as i64, xs[k + 1], y as i64 + 1));
        }
    }
    // random vertical merges of congruent stacked bricks
    let mut merged = true;
    while merged {
        merged = false;
        'outer: for i in 0..bricks.len() {
            for k in 0..bricks.len() {
                if i == k {
                    continue;
                }
                let (a, b) = (bricks[i], bricks[k]);
                if a.x1 == b.x1 && a.x2 == b.x2 && a.y2 == b.y1 && rng.gen_bool(0.4) {
                    let joined = Rect::new(a.x1, a.y1, a.x2, b.y2);
                    bricks[i] = joined;
                    bricks.remove(k);
                    merged = true;
                    break 'outer;
                }
            }
        }
    }
    bricks.sort_by_key(|r| (r.y1, r.x1));
    let named: Vec<(String, Rect)> = bricks
        .into_iter()
        .enumerate()
        .map(|(i, r)| (format!("i{}", i + 1), r))
        .collect();
    let named_ref: Vec<(&str, Rect)> = named.iter().map(|(n, r)| (n.as_str(), *r)).collect();
    with_frame(named_ref, w, h)
}

pub fn wall(w: i64, h: i64, seed: u64) -> PlaneGraph {
    graph_from_rects(&wall_rects(w, h, seed))
}

pub fn wall_with_dual(w: i64, h: i64, seed: u64) -> (PlaneGraph, RectDual) {
    dual_from_rects(&wall_rects(w, h, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::CycleKind;

    #[test]
    fn generated_families_are_ptp() {
        for (name, g) in [
            ("pinwheel", pinwheel()),
            ("g8", g8()),
            ("nested_pinwheel", nested_pinwheel()),
            ("nested", nested()),
            ("doubly_nested", doubly_nested()),
            ("stacked2", stacked2()),
            ("ladder", ladder(5)),
            ("grid1", grid(1)),
            ("grid2", grid(2)),
            ("fig6", fig6_with_dual().0),
            ("fig12", fig12_with_dual().0),
            ("wall", wall(5, 4, 7)),
        ] {
            let report = g.validate_ptp();
            assert!(report.ok(), "{name}: {:?}", report.issues);
            assert_eq!(g.triangles().len(), 2 * g.n() - 6, "{name} triangle count");
        }
    }

    #[test]
    fn grid_has_no_nontrivial_separating_cycles() {
        for j in [1, 2, 3] {
            let g = grid(j);
            let cycles = g.classify_4cycles();
            assert!(
                cycles.iter().all(|c| c.kind != CycleKind::NontrivialSeparating),
                "grid({j}) must stay nontrivial-free"
            );
            let empties = cycles.iter().filter(|c| c.kind == CycleKind::Empty).count();
            assert!(empties >= (j * j) as usize);
        }
    }

    #[test]
    fn walls_vary_but_stay_valid() {
        let mut seen = std::collections::BTreeSet::new();
        for seed in 0..10 {
            let g = wall(5, 3, seed);
            assert!(g.validate_ptp().ok());
            seen.insert(g.n());
        }
        assert!(seen.len() > 1, "different seeds give different sizes");
    }
}
