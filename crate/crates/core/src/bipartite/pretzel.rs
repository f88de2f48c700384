use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grid::{crossing_points, make_pretzel, normalize_path, GridPoint, Orientation};
use crate::rep::Representation;
use crate::{Path, Point, Rep};

/// Bounding corners and crossing count of one block.
type Extent = (Point, Point, usize);

/// Which paths form the crossings of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKind {
    /// Two paths of the first class.
    WithinFirst,
    /// Two paths of the second class.
    WithinSecond,
    /// One path of each class.
    Across,
}

/// The crossings that come from one crossing or bend of the underlying pretzel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    /// 1 top-right, 2 bottom-right, 3 bottom-left, 4 top-left.
    pub quadrant: u8,
    /// Corner of the pretzel this block inflates.
    pub origin: (i64, i64),
    /// Blocks at a bend are triangular.
    pub triangular: bool,
    pub lo: Point,
    pub hi: Point,
    pub crossings: usize,
}

/// `m` paths with `2j - 1` bends each, split into two classes that follow
/// the two halves of a pretzel on parallel lanes.
#[derive(Clone, Debug)]
pub struct BlownUpPretzel {
    pub m: usize,
    pub j: usize,
    pub paths: Rep,
    pub first: Vec<String>,
    pub second: Vec<String>,
    pub blocks: Vec<Block>,
}

impl BlownUpPretzel {
    /// Labels in class order: the first class, then the second.
    pub fn labels(&self) -> Vec<String> {
        self.first.iter().chain(&self.second).cloned().collect()
    }

    pub fn same_class(&self, a: &str, b: &str) -> bool {
        self.first.iter().any(|v| v == a) == self.first.iter().any(|v| v == b)
    }

    /// Sum of pairwise crossing counts.
    pub fn total_crossings(&self) -> usize {
        let labels = self.labels();
        let mut total = 0;
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i + 1..] {
                total += crossing_points(self.paths.get(a).unwrap(), self.paths.get(b).unwrap()).len();
            }
        }
        total
    }
}

/// Lanes of the inflated grid: every pretzel line gets as many lanes as
/// paths run along it, every other integer line keeps one.
struct Lanes {
    start: BTreeMap<i64, i64>,
}

impl Lanes {
    fn new(lo: i64, hi: i64, width: &BTreeMap<i64, i64>) -> Self {
        let mut start = BTreeMap::new();
        let mut cur = 0;
        for t in lo..=hi {
            start.insert(t, cur);
            cur += width.get(&t).copied().unwrap_or(1);
        }
        Lanes { start }
    }

    fn of(&self, t: i64) -> i64 {
        self.start[&t]
    }

    fn base(&self, lane: i64) -> i64 {
        *self.start.iter().rev().find(|&(_, &s)| s <= lane).expect("lane inside the grid").0
    }
}

/// Blow up the pretzel of parameter `j` to `m` paths: the first class has
/// `⌊m/2⌋` paths shaped like the first pretzel half, the second `⌈m/2⌉`
/// shaped like the second half. Paths of one class run on adjacent lanes
/// whose order flips at every bend, so that each pair crosses once per
/// bend and once per crossing of the pretzel half, while paths of distinct
/// classes cross `j(j+1)` times. No two paths share a grid-edge.
pub fn blowup_pretzel(m: usize, j: usize) -> Result<BlownUpPretzel> {
    if m < 3 {
        return Err(Error::MTooSmall { m, min: 3 });
    }
    if j < 1 {
        return Err(Error::Construction("pretzel parameter must be positive".into()));
    }
    let f = m / 2;
    let c = m - f;
    let (p1, p2) = make_pretzel(j);
    let halves = [(p1, f as i64), (p2, c as i64)];
    let mut wx = BTreeMap::new();
    let mut wy = BTreeMap::new();
    for (p, w) in &halves {
        for s in p.segments() {
            match s.orientation {
                Orientation::Horizontal => wy.insert(s.line, *w),
                Orientation::Vertical => wx.insert(s.line, *w),
            };
        }
    }
    let all: Vec<&Point> = halves.iter().flat_map(|(p, _)| p.corners()).collect();
    let span =
        |f: fn(&Point) -> i64| (all.iter().map(|p| f(p)).min().unwrap(), all.iter().map(|p| f(p)).max().unwrap());
    let (x0, x1) = span(|p| p.x);
    let (y0, y1) = span(|p| p.y);
    let bx = Lanes::new(x0, x1, &wx);
    let by = Lanes::new(y0, y1, &wy);
    let mut paths = Representation::new();
    let mut classes = [Vec::new(), Vec::new()];
    let mut next = 1;
    for (class, (p, w)) in halves.iter().enumerate() {
        let orders = lane_orders(p);
        for h in 0..*w {
            let label = format!("a{next}");
            next += 1;
            paths.insert(label.clone(), inflate(p, &orders, h, *w, &bx, &by));
            classes[class].push(label);
        }
    }
    let [first, second] = classes;
    let mut bp = BlownUpPretzel { m, j, paths, first, second, blocks: Vec::new() };
    bp.blocks = catalog(&bp, &halves[0].0, &halves[1].0, &bx, &by);
    Ok(bp)
}

/// Per segment, whether lane offsets grow (`1`) or shrink (`-1`) with the
/// path index; flipping at a bend makes every pair of the class cross there.
fn lane_orders(p: &Path) -> Vec<i64> {
    let c = p.corners();
    let step = |a: &Point, b: &Point| (b.x - a.x + b.y - a.y).signum();
    let mut orders = vec![1];
    for i in 1..c.len() - 1 {
        let prev = *orders.last().unwrap();
        orders.push(prev * step(&c[i - 1], &c[i]) * step(&c[i], &c[i + 1]));
    }
    orders
}

fn inflate(p: &Path, orders: &[i64], h: i64, w: i64, bx: &Lanes, by: &Lanes) -> Path {
    let segs = p.segments();
    let lines: Vec<i64> = segs
        .iter()
        .zip(orders)
        .map(|(s, &o)| {
            let base = match s.orientation {
                Orientation::Horizontal => by.of(s.line),
                Orientation::Vertical => bx.of(s.line),
            };
            base + if o == 1 { h } else { w - 1 - h }
        })
        .collect();
    let endpoint = |q: &Point, k: usize| match segs[k].orientation {
        Orientation::Horizontal => GridPoint::new(bx.of(q.x), lines[k]),
        Orientation::Vertical => GridPoint::new(lines[k], by.of(q.y)),
    };
    let n = lines.len();
    let mut pts = vec![endpoint(p.start(), 0)];
    for i in 0..n - 1 {
        pts.push(match segs[i].orientation {
            Orientation::Horizontal => GridPoint::new(lines[i + 1], lines[i]),
            Orientation::Vertical => GridPoint::new(lines[i], lines[i + 1]),
        });
    }
    pts.push(endpoint(p.end(), n - 1));
    normalize_path(&pts).expect("inflated pretzel is rectilinear")
}

fn catalog(bp: &BlownUpPretzel, p1: &Path, p2: &Path, bx: &Lanes, by: &Lanes) -> Vec<Block> {
    let bends: Vec<(usize, Point)> = [p1, p2]
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            let c = p.corners();
            c[1..c.len() - 1].iter().map(move |q| (i, q.clone()))
        })
        .collect();
    // The vertical ends of the two halves lie on either side of x = j + 1,
    // their horizontal ends on either side of y = -1/2.
    let mid = bp.j as i64 + 1;
    let mut acc: BTreeMap<(BlockKind, (i64, i64)), Extent> = BTreeMap::new();
    let labels = bp.labels();
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            let kind = match (bp.first.contains(a), bp.first.contains(b)) {
                (true, true) => BlockKind::WithinFirst,
                (false, false) => BlockKind::WithinSecond,
                _ => BlockKind::Across,
            };
            for q in crossing_points(bp.paths.get(a).unwrap(), bp.paths.get(b).unwrap()) {
                let origin = (bx.base(q.x), by.base(q.y));
                let e = acc.entry((kind, origin)).or_insert((q.clone(), q.clone(), 0));
                e.0 = GridPoint::new(e.0.x.min(q.x), e.0.y.min(q.y));
                e.1 = GridPoint::new(e.1.x.max(q.x), e.1.y.max(q.y));
                e.2 += 1;
            }
        }
    }
    acc.into_iter()
        .map(|((kind, origin), (lo, hi, crossings))| {
            let half = match kind {
                BlockKind::WithinFirst => Some(0),
                BlockKind::WithinSecond => Some(1),
                BlockKind::Across => None,
            };
            let triangular = half.is_some_and(|h| bends.iter().any(|(i, q)| *i == h && (q.x, q.y) == origin));
            let quadrant = match (origin.0 > mid, origin.1 >= 0) {
                (true, true) => 1,
                (true, false) => 2,
                (false, false) => 3,
                (false, true) => 4,
            };
            Block { kind, quadrant, origin, triangular, lo, hi, crossings }
        })
        .collect()
}

/// Closed form for the sum of pairwise crossings of the blow-up with
/// `j = m - 1`: pairs across classes cross `m(m-1)` times, pairs within a
/// class `m(m-1) - 1` times.
pub fn total_a_crossings(m: usize) -> usize {
    let f = m / 2;
    let c = m - f;
    let pairs = |k: usize| k * k.saturating_sub(1) / 2;
    let q = m * (m - 1);
    f * c * q + (pairs(c) + pairs(f)) * (q - 1)
}
