//! Exact rational plane geometry used by duals, frames and morph validation.

use num_rational::Ratio;
use num_traits::Zero;

/// Exact rational coordinate. All geometry in this crate stays within small
/// integer grids scaled by small sample denominators, so `i64` numerators are
/// ample.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Ratio::from_integer(n)
}

pub fn qr(num: i64, den: i64) -> Q {
    Ratio::new(num, den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    pub fn of(x: i64, y: i64) -> Self {
        Point { x: q(x), y: q(y) }
    }

    pub fn lerp(&self, other: &Point, t: Q) -> Point {
        let one = q(1);
        Point {
            x: (one - t) * self.x + t * other.x,
            y: (one - t) * self.y + t * other.y,
        }
    }
}

/// Cross product of (b - a) x (c - a).
pub fn cross(a: &Point, b: &Point, c: &Point) -> Q {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

pub fn dist_sq(a: &Point, b: &Point) -> Q {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    dx * dx + dy * dy
}

/// Squared distance from point `p` to segment `ab`.
pub fn point_segment_dist_sq(p: &Point, a: &Point, b: &Point) -> Q {
    let abx = b.x - a.x;
    let aby = b.y - a.y;
    let apx = p.x - a.x;
    let apy = p.y - a.y;
    let len_sq = abx * abx + aby * aby;
    if len_sq.is_zero() {
        return dist_sq(p, a);
    }
    let t = (apx * abx + apy * aby) / len_sq;
    if t <= Q::zero() {
        dist_sq(p, a)
    } else if t >= q(1) {
        dist_sq(p, b)
    } else {
        let proj = Point::new(a.x + t * abx, a.y + t * aby);
        dist_sq(p, &proj)
    }
}

/// True if point `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    point_segment_dist_sq(p, a, b).is_zero()
}

/// Axis-aligned integer rectangle with `x1 < x2`, `y1 < y2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Rect {
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
}

impl Rect {
    pub fn new(x1: i64, y1: i64, x2: i64, y2: i64) -> Self {
        assert!(x1 < x2 && y1 < y2, "degenerate rectangle {x1},{y1},{x2},{y2}");
        Rect { x1, y1, x2, y2 }
    }

    pub fn width(&self) -> i64 {
        self.x2 - self.x1
    }

    pub fn height(&self) -> i64 {
        self.y2 - self.y1
    }

    pub fn area(&self) -> i64 {
        self.width() * self.height()
    }

    pub fn corners(&self) -> [(i64, i64); 4] {
        [
            (self.x1, self.y1),
            (self.x2, self.y1),
            (self.x2, self.y2),
            (self.x1, self.y2),
        ]
    }

    /// Counterclockwise polygon corners starting at the lower-left.
    pub fn polygon(&self) -> Vec<Point> {
        vec![
            Point::of(self.x1, self.y1),
            Point::of(self.x2, self.y1),
            Point::of(self.x2, self.y2),
            Point::of(self.x1, self.y2),
        ]
    }

    pub fn intersects_interior(&self, other: &Rect) -> bool {
        self.x1 < other.x2 && other.x1 < self.x2 && self.y1 < other.y2 && other.y1 < self.y2
    }

    /// Shared boundary of two interior-disjoint rectangles, as a contact kind.
    pub fn contact(&self, other: &Rect) -> Contact {
        if self.intersects_interior(other) {
            return Contact::Overlap;
        }
        // vertical contact: self right side against other's left side or vice versa
        if self.x2 == other.x1 || other.x2 == self.x1 {
            let lo = self.y1.max(other.y1);
            let hi = self.y2.min(other.y2);
            if lo < hi {
                return Contact::Vertical { len: hi - lo };
            }
        }
        if self.y2 == other.y1 || other.y2 == self.y1 {
            let lo = self.x1.max(other.x1);
            let hi = self.x2.min(other.x2);
            if lo < hi {
                return Contact::Horizontal { len: hi - lo };
            }
        }
        // meeting at a point only
        for c in self.corners() {
            for d in other.corners() {
                if c == d {
                    return Contact::Point;
                }
            }
        }
        Contact::None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contact {
    None,
    Point,
    Horizontal { len: i64 },
    Vertical { len: i64 },
    Overlap,
}

impl Contact {
    pub fn is_positive(&self) -> bool {
        matches!(self, Contact::Horizontal { .. } | Contact::Vertical { .. })
    }
}

/// Signed area (shoelace) of a polygon; positive for counterclockwise order.
pub fn polygon_area2(poly: &[Point]) -> Q {
    let mut sum = Q::zero();
    let n = poly.len();
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    sum
}

/// Distinct corners of a polygon, dropping consecutive duplicates and
/// collinear intermediate points.
pub fn distinct_corners(poly: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::new();
    for p in poly {
        if pts.last() != Some(p) {
            pts.push(*p);
        }
    }
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    if pts.len() < 3 {
        return pts;
    }
    let mut out: Vec<Point> = Vec::new();
    let n = pts.len();
    for i in 0..n {
        let prev = &pts[(i + n - 1) % n];
        let cur = &pts[i];
        let next = &pts[(i + 1) % n];
        if !cross(prev, cur, next).is_zero() {
            out.push(*cur);
        }
    }
    out
}

/// Convexity check tolerating duplicate and collinear corners. Requires
/// counterclockwise orientation and positive area.
pub fn is_convex_ccw(poly: &[Point]) -> bool {
    let pts = distinct_corners(poly);
    if pts.len() < 3 {
        return false;
    }
    let n = pts.len();
    for i in 0..n {
        let a = &pts[i];
        let b = &pts[(i + 1) % n];
        let c = &pts[(i + 2) % n];
        if cross(a, b, c) <= Q::zero() {
            return false;
        }
    }
    true
}

/// Clip a convex polygon by the half-plane to the left of directed line `ab`
/// (Sutherland–Hodgman step), keeping boundary points.
fn clip_halfplane(poly: &[Point], a: &Point, b: &Point) -> Vec<Point> {
    let mut out = Vec::new();
    let n = poly.len();
    if n == 0 {
        return out;
    }
    for i in 0..n {
        let cur = &poly[i];
        let next = &poly[(i + 1) % n];
        let c_cur = cross(a, b, cur);
        let c_next = cross(a, b, next);
        if c_cur >= Q::zero() {
            out.push(*cur);
        }
        if (c_cur > Q::zero() && c_next < Q::zero()) || (c_cur < Q::zero() && c_next > Q::zero()) {
            // edge crosses the line
            let t = c_cur / (c_cur - c_next);
            out.push(cur.lerp(next, t));
        }
    }
    out
}

/// Intersection of two convex polygons (both counterclockwise), possibly a
/// degenerate polygon (segment or point). Returns its distinct points.
pub fn convex_intersection(p: &[Point], qpoly: &[Point]) -> Vec<Point> {
    let mut cur: Vec<Point> = p.to_vec();
    let n = qpoly.len();
    for i in 0..n {
        let a = &qpoly[i];
        let b = &qpoly[(i + 1) % n];
        if a == b {
            continue;
        }
        cur = clip_halfplane(&cur, a, b);
        if cur.is_empty() {
            return cur;
        }
    }
    // dedupe
    let mut out: Vec<Point> = Vec::new();
    for p in cur {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Contact between two interior-disjoint convex polygons: the maximal shared
/// boundary piece. Returns the squared length of the shared segment (zero for
/// point contact), or `None` if disjoint.
pub fn polygon_contact_len_sq(p: &[Point], qpoly: &[Point]) -> Option<Q> {
    let inter = convex_intersection(p, qpoly);
    if inter.is_empty() {
        return None;
    }
    if inter.len() == 1 {
        return Some(Q::zero());
    }
    // interiors disjoint => intersection is a segment; take extreme pair
    let mut best = Q::zero();
    for i in 0..inter.len() {
        for j in (i + 1)..inter.len() {
            let d = dist_sq(&inter[i], &inter[j]);
            if d > best {
                best = d;
            }
        }
    }
    Some(best)
}

/// An axis-parallel maximal segment of a rectangular dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxSegment {
    pub vertical: bool,
    /// fixed coordinate (x for vertical, y for horizontal)
    pub at: i64,
    pub from: i64,
    pub to: i64,
}

impl MaxSegment {
    pub fn len(&self) -> i64 {
        self.to - self.from
    }

    pub fn endpoints(&self) -> [(i64, i64); 2] {
        if self.vertical {
            [(self.at, self.from), (self.at, self.to)]
        } else {
            [(self.from, self.at), (self.to, self.at)]
        }
    }

    pub fn contains(&self, p: (i64, i64)) -> bool {
        if self.vertical {
            p.0 == self.at && self.from <= p.1 && p.1 <= self.to
        } else {
            p.1 == self.at && self.from <= p.0 && p.0 <= self.to
        }
    }
}

/// Merge collinear intervals into maximal ones. Input: (fixed, lo, hi) triples.
pub fn merge_intervals(mut items: Vec<(i64, i64, i64)>) -> Vec<(i64, i64, i64)> {
    items.sort();
    let mut out: Vec<(i64, i64, i64)> = Vec::new();
    for (at, lo, hi) in items {
        if let Some(last) = out.last_mut() {
            if last.0 == at && lo <= last.2 {
                last.2 = last.2.max(hi);
                continue;
            }
        }
        out.push((at, lo, hi));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rect_contacts() {
        let a = Rect::new(0, 0, 2, 1);
        let b = Rect::new(0, 1, 1, 2);
        assert_eq!(a.contact(&b), Contact::Horizontal { len: 1 });
        let c = Rect::new(2, 0, 3, 2);
        assert_eq!(a.contact(&c), Contact::Vertical { len: 1 });
        let d = Rect::new(2, 1, 3, 2);
        assert_eq!(b.contact(&d), Contact::None);
        let e = Rect::new(1, 1, 2, 2);
        assert_eq!(a.contact(&e), Contact::Horizontal { len: 1 });
        assert_eq!(e.contact(&Rect::new(2, 0, 4, 1)), Contact::Point);
    }

    #[test]
    fn polygon_basics() {
        let r = Rect::new(0, 0, 3, 2).polygon();
        assert_eq!(polygon_area2(&r), q(12));
        assert!(is_convex_ccw(&r));
        let with_dup = vec![
            Point::of(0, 0),
            Point::of(3, 0),
            Point::of(3, 0),
            Point::of(3, 2),
            Point::of(1, 2),
            Point::of(0, 2),
        ];
        assert!(is_convex_ccw(&with_dup));
        assert_eq!(distinct_corners(&with_dup).len(), 4);
    }

    #[test]
    fn convex_intersection_contact() {
        let a = Rect::new(0, 0, 2, 2).polygon();
        let b = Rect::new(2, 1, 4, 3).polygon();
        let c = polygon_contact_len_sq(&a, &b).unwrap();
        assert_eq!(c, q(1));
        let d = Rect::new(2, 2, 3, 3).polygon();
        assert_eq!(polygon_contact_len_sq(&a, &d), Some(q(0)));
        let e = Rect::new(5, 5, 6, 6).polygon();
        assert_eq!(polygon_contact_len_sq(&a, &e), None);
    }

    #[test]
    fn point_segment_distance() {
        let a = Point::of(0, 0);
        let b = Point::of(4, 0);
        assert_eq!(point_segment_dist_sq(&Point::of(2, 3), &a, &b), q(9));
        assert_eq!(point_segment_dist_sq(&Point::of(-2, 0), &a, &b), q(4));
        assert!(on_segment(&Point::of(1, 0), &a, &b));
    }
}
