//! Grid points, rectilinear paths and the geometric predicates between them.

use std::collections::BTreeSet;
use std::fmt;

use crate::coord::Coord;
use crate::error::{Error, Result};

/// A point of the plane grid.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint<C> {
    pub x: C,
    pub y: C,
}

impl<C> GridPoint<C> {
    pub fn new(x: C, y: C) -> Self {
        GridPoint { x, y }
    }
}

impl<C: fmt::Display> fmt::Display for GridPoint<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for GridPoint<i64> {
    fn from((x, y): (i64, i64)) -> Self {
        GridPoint { x, y }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Horizontal => Orientation::Vertical,
            Orientation::Vertical => Orientation::Horizontal,
        }
    }
}

/// A maximal straight piece of a path: `line` is the fixed coordinate
/// (y for horizontal, x for vertical) and `lo..=hi` the extent along it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment<C> {
    pub orientation: Orientation,
    pub line: C,
    pub lo: C,
    pub hi: C,
}

impl<C: Coord> Segment<C> {
    pub fn new(orientation: Orientation, line: C, a: C, b: C) -> Self {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Segment { orientation, line, lo, hi }
    }

    pub fn horizontal(y: C, a: C, b: C) -> Self {
        Self::new(Orientation::Horizontal, y, a, b)
    }

    pub fn vertical(x: C, a: C, b: C) -> Self {
        Self::new(Orientation::Vertical, x, a, b)
    }

    /// Parallel, collinear and sharing a piece of positive length.
    pub fn overlaps(&self, other: &Segment<C>) -> bool {
        self.orientation == other.orientation
            && self.line == other.line
            && self.lo.clone().max(other.lo.clone()) < self.hi.clone().min(other.hi.clone())
    }

    /// `other` lies on the same line within this segment's extent.
    pub fn contains(&self, other: &Segment<C>) -> bool {
        self.orientation == other.orientation && self.line == other.line && self.lo <= other.lo && other.hi <= self.hi
    }

    /// Whether `t` lies in the closed extent.
    pub fn spans(&self, t: &C) -> bool {
        &self.lo <= t && t <= &self.hi
    }

    /// Whether `t` lies strictly inside the extent.
    pub fn spans_strictly(&self, t: &C) -> bool {
        &self.lo < t && t < &self.hi
    }

    /// The point where a horizontal and a vertical segment meet, if any.
    pub fn meets(&self, other: &Segment<C>) -> Option<GridPoint<C>> {
        let (h, v) = match (self.orientation, other.orientation) {
            (Orientation::Horizontal, Orientation::Vertical) => (self, other),
            (Orientation::Vertical, Orientation::Horizontal) => (other, self),
            _ => return None,
        };
        if h.spans(&v.line) && v.spans(&h.line) {
            Some(GridPoint::new(v.line.clone(), h.line.clone()))
        } else {
            None
        }
    }

    pub fn length(&self) -> C {
        self.hi.clone() - self.lo.clone()
    }
}

/// A connected piece of one segment of the owner's path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subsegment<C> {
    pub owner: String,
    pub segment: Segment<C>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    Staircase,
    Snake,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Turn {
    Left,
    Right,
}

/// A rectilinear path in canonical form: no repeated consecutive corners
/// and no two consecutive collinear segments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridPath<C> {
    corners: Vec<GridPoint<C>>,
}

impl<C: Coord> GridPath<C> {
    pub fn corners(&self) -> &[GridPoint<C>] {
        &self.corners
    }

    pub fn start(&self) -> &GridPoint<C> {
        &self.corners[0]
    }

    pub fn end(&self) -> &GridPoint<C> {
        &self.corners[self.corners.len() - 1]
    }

    pub fn bends(&self) -> usize {
        self.corners.len().saturating_sub(2)
    }

    pub fn segments(&self) -> Vec<Segment<C>> {
        self.corners
            .windows(2)
            .map(|w| {
                let (a, b) = (&w[0], &w[1]);
                if a.y == b.y {
                    Segment::horizontal(a.y.clone(), a.x.clone(), b.x.clone())
                } else {
                    Segment::vertical(a.x.clone(), a.y.clone(), b.y.clone())
                }
            })
            .collect()
    }

    pub fn reversed(&self) -> Self {
        let mut corners = self.corners.clone();
        corners.reverse();
        GridPath { corners }
    }

    /// Apply a point map and re-canonicalize.
    pub fn map<D: Coord>(&self, f: impl Fn(&GridPoint<C>) -> GridPoint<D>) -> Result<GridPath<D>> {
        let pts: Vec<_> = self.corners.iter().map(f).collect();
        normalize_path(&pts)
    }

    pub fn transform(&self, sym: Symmetry) -> Self {
        GridPath { corners: self.corners.iter().map(|p| sym.apply(p)).collect() }
    }

    pub fn translate(&self, dx: &C, dy: &C) -> Self {
        let corners =
            self.corners.iter().map(|p| GridPoint::new(p.x.clone() + dx.clone(), p.y.clone() + dy.clone())).collect();
        GridPath { corners }
    }

    fn turns(&self) -> Vec<Turn> {
        self.corners
            .windows(3)
            .map(|w| {
                let d1 = direction(&w[0], &w[1]);
                let d2 = direction(&w[1], &w[2]);
                if d1.0 * d2.1 - d1.1 * d2.0 > 0 {
                    Turn::Left
                } else {
                    Turn::Right
                }
            })
            .collect()
    }

    pub fn kind(&self) -> PathKind {
        let turns = self.turns();
        if turns.windows(2).all(|w| w[0] != w[1]) {
            return PathKind::Staircase;
        }
        let paired = turns.len().is_multiple_of(2)
            && turns.chunks(2).all(|c| c[0] == c[1])
            && turns.chunks(2).collect::<Vec<_>>().windows(2).all(|w| w[0][0] != w[1][0]);
        if paired {
            PathKind::Snake
        } else {
            PathKind::Other
        }
    }
}

fn direction<C: Coord>(a: &GridPoint<C>, b: &GridPoint<C>) -> (i8, i8) {
    let sx = (b.x.clone() - a.x.clone()).signum();
    let sy = (b.y.clone() - a.y.clone()).signum();
    let as_i8 = |s: C| {
        if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            0
        }
    };
    (as_i8(sx), as_i8(sy))
}

/// Canonicalize a corner sequence: drop repeated points and merge
/// consecutive collinear steps that continue in the same direction.
pub fn normalize_path<C: Coord>(points: &[GridPoint<C>]) -> Result<GridPath<C>> {
    if points.is_empty() {
        return Err(Error::EmptyPath);
    }
    let mut out: Vec<GridPoint<C>> = Vec::with_capacity(points.len());
    for p in points {
        if let Some(last) = out.last() {
            if last == p {
                continue;
            }
            if last.x != p.x && last.y != p.y {
                return Err(Error::NonRectilinear(last.to_string(), p.to_string()));
            }
        }
        if out.len() >= 2 {
            let n = out.len();
            let d1 = direction(&out[n - 2], &out[n - 1]);
            let d2 = direction(&out[n - 1], p);
            if d1 == d2 {
                out[n - 1] = p.clone();
                continue;
            }
            if d1.0 == -d2.0 && d1.1 == -d2.1 {
                return Err(Error::Backtrack(out[n - 1].to_string()));
            }
        }
        out.push(p.clone());
    }
    Ok(GridPath { corners: out })
}

/// Convenience constructor from integer pairs.
pub fn path_from(points: &[(i64, i64)]) -> Result<GridPath<i64>> {
    let pts: Vec<GridPoint<i64>> = points.iter().map(|&p| p.into()).collect();
    normalize_path(&pts)
}

pub fn bends<C: Coord>(p: &GridPath<C>) -> usize {
    p.bends()
}

/// True iff the two paths share a piece of positive length, i.e. a grid-edge.
pub fn edge_intersects<C: Coord>(p: &GridPath<C>, q: &GridPath<C>) -> bool {
    let sq = q.segments();
    p.segments().iter().any(|s| sq.iter().any(|t| s.overlaps(t)))
}

/// Distinct points where a horizontal piece of one path meets a vertical
/// piece of the other (closed segments, so incidences at bends count).
pub fn crossing_points<C: Coord>(p: &GridPath<C>, q: &GridPath<C>) -> BTreeSet<GridPoint<C>> {
    let sq = q.segments();
    let mut pts = BTreeSet::new();
    for s in p.segments() {
        for t in &sq {
            if let Some(pt) = s.meets(t) {
                pts.insert(pt);
            }
        }
    }
    pts
}

pub fn crossings<C: Coord>(p: &GridPath<C>, q: &GridPath<C>) -> usize {
    crossing_points(p, q).len()
}

/// A snake with one piece inside each parallel subsegment of `subsegments`,
/// joined by connectors that alternate between the two transversal lanes.
/// The path starts on `lanes.0` and has exactly `2|S| - 2` bends.
pub fn connect_snake<C: Coord>(subsegments: &[Subsegment<C>], lanes: (C, C)) -> Result<GridPath<C>> {
    let first = subsegments.first().ok_or(Error::EmptyPath)?;
    let orientation = first.segment.orientation;
    let (l0, l1) = lanes;
    if l0 == l1 {
        return Err(Error::NotMutuallyVisible);
    }
    let (lo, hi) = if l0 < l1 { (&l0, &l1) } else { (&l1, &l0) };
    let mut lines = BTreeSet::new();
    for s in subsegments {
        let seg = &s.segment;
        if seg.orientation != orientation || !seg.spans(lo) || !seg.spans(hi) || !lines.insert(seg.line.clone()) {
            return Err(Error::NotMutuallyVisible);
        }
    }
    let mut pts = Vec::with_capacity(2 * subsegments.len());
    for (i, s) in subsegments.iter().enumerate() {
        let (a, b) = if i % 2 == 0 { (&l0, &l1) } else { (&l1, &l0) };
        let line = s.segment.line.clone();
        match orientation {
            Orientation::Vertical => {
                pts.push(GridPoint::new(line.clone(), a.clone()));
                pts.push(GridPoint::new(line, b.clone()));
            }
            Orientation::Horizontal => {
                pts.push(GridPoint::new(a.clone(), line.clone()));
                pts.push(GridPoint::new(b.clone(), line));
            }
        }
    }
    normalize_path(&pts)
}

/// The pair of `(2j-1)`-bend paths crossing each other `j(j+1)` times.
///
/// The first path starts at the origin heading right; its i-th horizontal
/// segment has length `2j+3-2i` and its i-th vertical segment length `2i`,
/// turning down and up alternately. The second is the first rotated by a
/// half turn and shifted so that it starts at `(2j+2, -1)`.
pub fn make_pretzel(j: usize) -> (GridPath<i64>, GridPath<i64>) {
    assert!(j >= 1, "pretzel parameter must be positive");
    let j = j as i64;
    let (mut x, mut y) = (0i64, 0i64);
    let mut pts = vec![(x, y)];
    for i in 1..=j {
        let d = if i % 2 == 1 { 1 } else { -1 };
        x += d * (2 * j + 3 - 2 * i);
        pts.push((x, y));
        y -= d * 2 * i;
        pts.push((x, y));
    }
    let rotated: Vec<(i64, i64)> = pts.iter().map(|&(px, py)| (2 * j + 2 - px, -1 - py)).collect();
    (path_from(&pts).expect("pretzel is rectilinear"), path_from(&rotated).expect("pretzel is rectilinear"))
}

/// The eight isometries of the grid fixing the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipX,
    FlipY,
    Transpose,
    AntiTranspose,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rot90,
        Symmetry::Rot180,
        Symmetry::Rot270,
        Symmetry::FlipX,
        Symmetry::FlipY,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
    ];

    pub fn apply<C: Coord>(self, p: &GridPoint<C>) -> GridPoint<C> {
        let (x, y) = (p.x.clone(), p.y.clone());
        let (nx, ny) = match self {
            Symmetry::Identity => (x, y),
            Symmetry::Rot90 => (-y, x),
            Symmetry::Rot180 => (-x, -y),
            Symmetry::Rot270 => (y, -x),
            Symmetry::FlipX => (-x, y),
            Symmetry::FlipY => (x, -y),
            Symmetry::Transpose => (y, x),
            Symmetry::AntiTranspose => (-y, -x),
        };
        GridPoint::new(nx, ny)
    }

    pub fn inverse(self) -> Self {
        match self {
            Symmetry::Rot90 => Symmetry::Rot270,
            Symmetry::Rot270 => Symmetry::Rot90,
            other => other,
        }
    }

    /// Whether horizontal and vertical are exchanged.
    pub fn swaps_axes(self) -> bool {
        matches!(self, Symmetry::Rot90 | Symmetry::Rot270 | Symmetry::Transpose | Symmetry::AntiTranspose)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(points: &[(i64, i64)]) -> GridPath<i64> {
        path_from(points).unwrap()
    }

    #[test]
    fn normalize_merges_collinear_steps() {
        let q = p(&[(0, 0), (2, 0), (5, 0)]);
        assert_eq!(q.corners(), &[GridPoint::new(0, 0), GridPoint::new(5, 0)]);
        assert_eq!(q.bends(), 0);
        assert_eq!(p(&[(0, 0), (3, 0), (3, 2)]).bends(), 1);
        assert_eq!(p(&[(0, 0), (0, 0), (1, 0), (1, 0)]).corners().len(), 2);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert!(matches!(path_from(&[(0, 0), (1, 1)]), Err(Error::NonRectilinear(..))));
        assert_eq!(path_from(&[]), Err(Error::EmptyPath));
        assert!(matches!(path_from(&[(0, 0), (3, 0), (1, 0)]), Err(Error::Backtrack(_))));
    }

    #[test]
    fn single_point_path() {
        let q = p(&[(4, 4)]);
        assert_eq!(q.bends(), 0);
        assert!(q.segments().is_empty());
    }

    #[test]
    fn edge_intersection_needs_a_shared_edge() {
        let a = p(&[(0, 0), (2, 0)]);
        assert!(edge_intersects(&a, &p(&[(1, 0), (3, 0)])));
        assert!(!edge_intersects(&a, &p(&[(1, -1), (1, 1)])));
        assert!(!edge_intersects(&a, &p(&[(2, 0), (4, 0)])));
    }

    #[test]
    fn crossing_counts() {
        let a = p(&[(-1, 0), (1, 0)]);
        let b = p(&[(0, -1), (0, 1)]);
        assert_eq!(crossings(&a, &b), 1);
        // two L-shapes touching at a shared bend point count once
        let c = p(&[(0, 0), (2, 0), (2, 2)]);
        let d = p(&[(2, 4), (2, 2), (4, 2)]);
        assert_eq!(crossings(&c, &d), 1);
        // parallel overlap is not a crossing
        assert_eq!(crossings(&a, &p(&[(0, 0), (3, 0)])), 0);
    }

    #[test]
    fn pretzel_shape() {
        let (p1, p2) = make_pretzel(1);
        assert_eq!(p1.corners(), p(&[(0, 0), (3, 0), (3, -2)]).corners());
        assert_eq!(p2.corners(), p(&[(4, -1), (1, -1), (1, 1)]).corners());
        // crossings at (3,-1) and (1,0), found by hand
        assert_eq!(crossings(&p1, &p2), 2);
        for j in 1..=8 {
            let (a, b) = make_pretzel(j);
            assert_eq!(a.bends(), 2 * j - 1);
            assert_eq!(b.bends(), 2 * j - 1);
        }
    }

    #[test]
    fn snake_through_two_verticals() {
        let s = |x: i64| Subsegment { owner: format!("v{x}"), segment: Segment::vertical(x, 0, 4) };
        let q = connect_snake(&[s(0), s(5)], (1, 2)).unwrap();
        assert_eq!(q.bends(), 2);
        assert_eq!(q.corners(), p(&[(0, 1), (0, 2), (5, 2), (5, 1)]).corners());
        let three = connect_snake(&[s(0), s(5), s(9)], (1, 2)).unwrap();
        assert_eq!(three.bends(), 4);
        assert_eq!(three.kind(), PathKind::Snake);
        let one = connect_snake(&[s(3)], (1, 2)).unwrap();
        assert_eq!(one.bends(), 0);
        assert_eq!(connect_snake(&[s(0), s(5)], (1, 7)), Err(Error::NotMutuallyVisible));
    }

    #[test]
    fn path_kinds() {
        assert_eq!(p(&[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]).kind(), PathKind::Staircase);
        assert_eq!(p(&[(0, 0), (2, 0), (2, 2), (0, 2), (0, 1)]).kind(), PathKind::Other);
        assert_eq!(p(&[(0, 0), (1, 0), (1, 1), (0, 1), (0, 3), (1, 3)]).kind(), PathKind::Snake);
        assert_eq!(p(&[(0, 0), (0, 1), (1, 1), (1, 0)]).kind(), PathKind::Snake);
    }

    #[test]
    fn symmetries_invert() {
        let pt = GridPoint::new(3i64, -7);
        for s in Symmetry::ALL {
            assert_eq!(s.inverse().apply(&s.apply(&pt)), pt);
        }
    }
}
