//! Exact answers for tiny graphs: interval graph recognition and an
//! exhaustive search for the bend-number.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::GridPoint;
use crate::rep::{compress_coordinates, Representation};
use crate::Rep;

/// Largest number of maximal cliques per component the consecutive
/// arrangement search accepts.
pub const CLIQUE_CAP: usize = 24;

/// Largest graph the bend-number search accepts.
pub const MAX_SEARCH_VERTICES: usize = 10;

/// Limits of [`exact_bend_number`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_k: usize,
    /// Distinct grid-lines allowed per orientation; `None` derives
    /// `2(max_k + 1)|V| + 2`.
    pub grid_width: Option<usize>,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn new(max_k: usize) -> Self {
        SearchBudget { max_k, grid_width: None, node_limit: Some(50_000_000), time_limit: None }
    }

    /// Every segment contributes one line and its two ends one line each
    /// on the other axis, so `2(k + 1)n + 2` lines per axis always suffice.
    pub fn width_for(&self, n: usize) -> usize {
        self.grid_width.unwrap_or(2 * (self.max_k + 1) * n + 2)
    }
}

/// Answer of [`exact_bend_number`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BendNumber {
    /// A `k`-bend representation exists and none with fewer bends.
    Exact { k: usize, rep: Rep },
    /// No representation within `max_k` bends: the bend-number is at least this.
    LowerBoundOnly(usize),
    /// A limit was hit; the bend-number is known to be at least `lower`.
    Exhausted { lower: usize },
}

impl BendNumber {
    pub fn exact(&self) -> Option<usize> {
        match self {
            BendNumber::Exact { k, .. } => Some(*k),
            _ => None,
        }
    }
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

/// Whether `g` has a representation by intervals on a line: the graph is
/// chordal and its maximal cliques admit an order in which the cliques
/// containing any vertex are consecutive.
pub fn is_interval_graph(g: &Graph) -> Result<bool> {
    for comp in components(g) {
        let Some(peo) = perfect_elimination_order(g, &comp) else { return Ok(false) };
        let cliques = maximal_cliques_chordal(g, &peo);
        if cliques.len() > CLIQUE_CAP {
            return Err(Error::TooLarge(format!("{} maximal cliques in one component", cliques.len())));
        }
        if !consecutive_arrangement(g.vertex_count(), &cliques) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximum cardinality search; its reversed visit order is a perfect
/// elimination order exactly when the component is chordal.
fn perfect_elimination_order(g: &Graph, comp: &[usize]) -> Option<Vec<usize>> {
    let mut weight: BTreeMap<usize, usize> = comp.iter().map(|&v| (v, 0)).collect();
    let mut visit = Vec::with_capacity(comp.len());
    while let Some((&v, _)) = weight.iter().max_by_key(|&(&v, &w)| (w, std::cmp::Reverse(v))) {
        weight.remove(&v);
        visit.push(v);
        for w in g.neighbors(v) {
            if let Some(c) = weight.get_mut(w) {
                *c += 1;
            }
        }
    }
    visit.reverse();
    let pos: BTreeMap<usize, usize> = visit.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for &v in &visit {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|w| pos[w] > pos[&v]).collect();
        if let Some(&u) = later.iter().min_by_key(|w| pos[w]) {
            if !later.iter().all(|&w| w == u || g.adjacent(u, w)) {
                return None;
            }
        }
    }
    Some(visit)
}

fn maximal_cliques_chordal(g: &Graph, peo: &[usize]) -> Vec<Vec<usize>> {
    let pos: BTreeMap<usize, usize> = peo.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut cands: Vec<Vec<usize>> = peo
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|w| pos[w] > pos[&v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    cands.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut out: Vec<Vec<usize>> = Vec::new();
    for c in cands {
        if !out.iter().any(|o| c.iter().all(|v| o.binary_search(v).is_ok())) {
            out.push(c);
        }
    }
    out
}

fn consecutive_arrangement(n: usize, cliques: &[Vec<usize>]) -> bool {
    let mut member = vec![0u32; n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            member[v] |= 1 << i;
        }
    }
    let full = if cliques.len() == 32 { u32::MAX } else { (1u32 << cliques.len()) - 1 };
    let mut failed = HashSet::new();
    (0..cliques.len()).any(|c| arrange(cliques, &member, 1 << c, c, full, &mut failed))
}

/// Extend an arrangement whose cliques so far are `used`, ending in `last`.
/// A vertex seen before but absent from `last` may not appear again.
fn arrange(
    cliques: &[Vec<usize>],
    member: &[u32],
    used: u32,
    last: usize,
    full: u32,
    failed: &mut HashSet<(u32, usize)>,
) -> bool {
    if used == full {
        return true;
    }
    if failed.contains(&(used, last)) {
        return false;
    }
    for c in 0..cliques.len() {
        if used >> c & 1 == 1 {
            continue;
        }
        let ok = cliques[c].iter().all(|&v| member[v] & used == 0 || member[v] >> last & 1 == 1);
        if ok && arrange(cliques, member, used | 1 << c, c, full, failed) {
            return true;
        }
    }
    failed.insert((used, last));
    false
}

/// Fresh coordinates are placed a full unit beyond the used range or at
/// the midpoint of a gap, so only the relative order of values matters.
const UNIT: i64 = 1 << 32;

#[derive(Clone, Copy, Debug)]
struct Seg {
    vertical: bool,
    line: i64,
    lo: i64,
    hi: i64,
}

impl Seg {
    fn overlaps(&self, o: &Seg) -> bool {
        self.vertical == o.vertical && self.line == o.line && self.lo.max(o.lo) < self.hi.min(o.hi)
    }
}

#[derive(Default)]
struct Axis {
    used: BTreeMap<i64, usize>,
}

impl Axis {
    /// Used values first, then one representative of every gap.
    fn candidates(&self, room: bool) -> Vec<i64> {
        let keys: Vec<i64> = self.used.keys().copied().collect();
        let Some((&first, &last)) = keys.first().zip(keys.last()) else { return vec![0] };
        let mut out = keys.clone();
        if room {
            for w in keys.windows(2) {
                debug_assert!(w[1] - w[0] >= 2, "gap too narrow to split");
                out.push(w[0] + (w[1] - w[0]) / 2);
            }
            out.push(first - UNIT);
            out.push(last + UNIT);
        }
        out
    }

    fn add(&mut self, v: i64) {
        *self.used.entry(v).or_insert(0) += 1;
    }

    fn remove(&mut self, v: i64) {
        let c = self.used.get_mut(&v).expect("value in use");
        *c -= 1;
        if *c == 0 {
            self.used.remove(&v);
        }
    }
}

enum Outcome {
    Found(Vec<Vec<(i64, i64)>>),
    Impossible,
    Aborted,
}

/// Shape of the path being placed: `bends + 1` segments, the first one
/// vertical or not, and the lines chosen so far.
struct Draft {
    v: usize,
    idx: usize,
    bends: usize,
    first_vertical: bool,
    lines: Vec<i64>,
}

impl Draft {
    fn vertical(&self, i: usize) -> bool {
        self.first_vertical ^ (i % 2 == 1)
    }

    /// Axis holding the line of segment `i`.
    fn line_axis(&self, i: usize) -> usize {
        if self.vertical(i) {
            0
        } else {
            1
        }
    }

    fn seg(&self, i: usize, a: i64, b: i64) -> Seg {
        Seg { vertical: self.vertical(i), line: self.lines[i], lo: a.min(b), hi: a.max(b) }
    }

    fn corners(&self, start: i64, end: i64) -> Vec<(i64, i64)> {
        let point =
            |i: usize, along: i64| if self.vertical(i) { (self.lines[i], along) } else { (along, self.lines[i]) };
        let mut pts = vec![point(0, start)];
        for i in 0..self.bends {
            pts.push(point(i, self.lines[i + 1]));
        }
        pts.push(point(self.bends, end));
        pts
    }
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    k: usize,
    width: usize,
    axes: [Axis; 2],
    segs: Vec<Vec<Seg>>,
    corners: Vec<Vec<(i64, i64)>>,
    placed: Vec<bool>,
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    aborted: bool,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        self.nodes += 1;
        let over_nodes = self.node_limit.is_some_and(|l| self.nodes > l);
        let over_time = self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            self.aborted = true;
        }
        self.aborted
    }

    fn candidates(&self, axis: usize) -> Vec<i64> {
        self.axes[axis].candidates(self.axes[axis].used.len() < self.width)
    }

    fn placed_neighbors(&self, v: usize, adjacent: bool) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().copied().filter(move |&w| self.placed[w] && self.g.adjacent(v, w) == adjacent)
    }

    fn clashes(&self, v: usize, s: &Seg) -> bool {
        self.placed_neighbors(v, false).any(|w| self.segs[w].iter().any(|t| s.overlaps(t)))
    }

    fn place(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        for bends in 0..=self.k {
            for first_vertical in [false, true] {
                // A path with an odd number of bends, read backwards, starts
                // with the other orientation.
                if first_vertical && (idx == 0 || bends % 2 == 1) {
                    continue;
                }
                let mut d = Draft { v, idx, bends, first_vertical, lines: Vec::new() };
                if self.choose_lines(&mut d) {
                    return true;
                }
                if self.aborted {
                    return false;
                }
            }
        }
        false
    }

    /// Pick the line of every segment; inner segments are then fixed and
    /// must not meet a non-neighbour.
    fn choose_lines(&mut self, d: &mut Draft) -> bool {
        let i = d.lines.len();
        if i == d.bends + 1 {
            return self.reachable(d) && self.choose_ends(d);
        }
        let axis = d.line_axis(i);
        for c in self.candidates(axis) {
            if i >= 2 && c == d.lines[i - 2] {
                continue;
            }
            // The first path is fixed up to reflections: its vertical
            // segment heads up.
            if d.idx == 0 && i == 2 && c < d.lines[0] {
                continue;
            }
            if self.out_of_budget() {
                return false;
            }
            d.lines.push(c);
            if i >= 2 && self.clashes(d.v, &d.seg(i - 1, d.lines[i - 2], c)) {
                d.lines.pop();
                continue;
            }
            self.axes[axis].add(c);
            let done = self.choose_lines(d);
            self.axes[axis].remove(c);
            d.lines.pop();
            if done || self.aborted {
                return done;
            }
        }
        false
    }

    /// Whether every placed neighbour is met by an inner segment or shares
    /// a line with one of the two end segments.
    fn reachable(&self, d: &Draft) -> bool {
        let b = d.bends;
        let inner: Vec<Seg> = (1..b).map(|i| d.seg(i, d.lines[i - 1], d.lines[i + 1])).collect();
        let ends = if b == 0 { vec![0] } else { vec![0, b] };
        self.placed_neighbors(d.v, true).all(|w| {
            self.segs[w].iter().any(|t| {
                inner.iter().any(|s| s.overlaps(t))
                    || ends.iter().any(|&i| t.vertical == d.vertical(i) && t.line == d.lines[i])
            })
        })
    }

    fn choose_ends(&mut self, d: &Draft) -> bool {
        let b = d.bends;
        let along0 = 1 - d.line_axis(0);
        for s in self.candidates(along0) {
            if b > 0 && s == d.lines[1] {
                continue;
            }
            if d.idx == 0 && b > 0 && s > d.lines[1] {
                continue;
            }
            if self.out_of_budget() {
                return false;
            }
            if b > 0 && self.clashes(d.v, &d.seg(0, s, d.lines[1])) {
                continue;
            }
            self.axes[along0].add(s);
            let done = self.choose_last_end(d, s);
            self.axes[along0].remove(s);
            if done || self.aborted {
                return done;
            }
        }
        false
    }

    fn choose_last_end(&mut self, d: &Draft, start: i64) -> bool {
        let b = d.bends;
        let along = 1 - d.line_axis(b);
        let from = if b == 0 { start } else { d.lines[b - 1] };
        for e in self.candidates(along) {
            if e == from || (b == 0 && e < start) {
                continue;
            }
            if self.out_of_budget() {
                return false;
            }
            let corners = d.corners(start, e);
            if d.bends.is_multiple_of(2) && d.bends > 0 && corners.iter().rev().lt(corners.iter()) {
                continue;
            }
            let segs: Vec<Seg> = corners
                .windows(2)
                .enumerate()
                .map(|(i, w)| {
                    let (a, c) = if d.vertical(i) { (w[0].1, w[1].1) } else { (w[0].0, w[1].0) };
                    d.seg(i, a, c)
                })
                .collect();
            let last = segs[b];
            let self_overlap = segs.iter().enumerate().any(|(i, s)| segs[i + 1..].iter().any(|t| s.overlaps(t)));
            if self_overlap || self.clashes(d.v, &last) {
                continue;
            }
            let met = self
                .placed_neighbors(d.v, true)
                .all(|w| self.segs[w].iter().any(|t| segs.iter().any(|s| s.overlaps(t))));
            if !met {
                continue;
            }
            self.axes[along].add(e);
            self.segs[d.v] = segs;
            self.corners[d.v] = corners;
            self.placed[d.v] = true;
            let done = self.place(d.idx + 1);
            self.placed[d.v] = false;
            self.segs[d.v].clear();
            self.axes[along].remove(e);
            if done || self.aborted {
                return done;
            }
        }
        false
    }
}

/// Place highest-degree vertices first, then always a vertex with the
/// most placed neighbours.
fn placement_order(g: &Graph, comp: &[usize]) -> Vec<usize> {
    let mut left: Vec<usize> = comp.to_vec();
    let mut order = Vec::with_capacity(comp.len());
    while !left.is_empty() {
        let (i, _) = left
            .iter()
            .enumerate()
            .max_by_key(|&(_, &v)| {
                let placed = g.neighbors(v).iter().filter(|w| order.contains(*w)).count();
                (placed, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        order.push(left.swap_remove(i));
    }
    order
}

fn search_component(g: &Graph, comp: &[usize], k: usize, budget: &SearchBudget, deadline: Option<Instant>) -> Outcome {
    let n = g.vertex_count();
    let mut s = Search {
        g,
        order: placement_order(g, comp),
        k,
        width: budget.width_for(comp.len()),
        axes: [Axis::default(), Axis::default()],
        segs: vec![Vec::new(); n],
        corners: vec![Vec::new(); n],
        placed: vec![false; n],
        nodes: 0,
        node_limit: budget.node_limit,
        deadline,
        aborted: false,
    };
    if s.place(0) {
        Outcome::Found(s.corners)
    } else if s.aborted {
        Outcome::Aborted
    } else {
        Outcome::Impossible
    }
}

/// Smallest `k ≤ max_k` such that `g` has a `k`-bend representation, by
/// backtracking over paths built segment by segment on a grid where only
/// the relative order of coordinates matters. Components are searched
/// separately and laid side by side.
pub fn exact_bend_number(g: &Graph, budget: &SearchBudget) -> Result<BendNumber> {
    if g.vertex_count() > MAX_SEARCH_VERTICES {
        return Err(Error::TooLarge(format!(
            "{} vertices, the search handles at most {MAX_SEARCH_VERTICES}",
            g.vertex_count()
        )));
    }
    let deadline = budget.time_limit.map(|t| Instant::now() + t);
    let mut rep: Representation<i64> = Representation::new();
    let mut best = 0;
    let mut offset = 0;
    for comp in components(g) {
        let mut found = None;
        for k in 0..=budget.max_k {
            match search_component(g, &comp, k, budget, deadline) {
                Outcome::Found(corners) => {
                    found = Some((k, corners));
                    break;
                }
                Outcome::Impossible => {}
                Outcome::Aborted => return Ok(BendNumber::Exhausted { lower: best.max(k) }),
            }
        }
        let Some((k, corners)) = found else { return Ok(BendNumber::LowerBoundOnly(budget.max_k + 1)) };
        best = best.max(k);
        let mut part = Representation::new();
        for &v in &comp {
            let pts: Vec<GridPoint<i64>> = corners[v].iter().map(|&(x, y)| GridPoint::new(x, y)).collect();
            part.insert(g.label(v), crate::grid::normalize_path(&pts)?);
        }
        let part = compress_coordinates(&part);
        let width = part.iter().flat_map(|(_, p)| p.corners().iter().map(|c| c.x)).max().unwrap_or(0);
        for (v, p) in part.iter() {
            rep.insert(v.clone(), p.translate(&offset, &0));
        }
        offset += width + 2;
    }
    Ok(BendNumber::Exact { k: best, rep })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random::all_graphs;
    use crate::graph::{gen_complete_bipartite, gen_cycle, gen_path};
    use crate::verify::verify_representation;

    #[test]
    fn interval_recognition() {
        assert!(is_interval_graph(&gen_path(12)).unwrap());
        assert!(is_interval_graph(&gen_complete_bipartite(1, 7)).unwrap());
        assert!(!is_interval_graph(&gen_cycle(4)).unwrap());
        assert!(!is_interval_graph(&gen_cycle(6)).unwrap());
        assert!(is_interval_graph(&Graph::new()).unwrap());
    }

    #[test]
    fn asteroidal_triple_is_not_interval() {
        // Chordal but not interval: a triangle with a path of length two
        // hanging off each corner.
        let mut g = Graph::new();
        for (a, b) in [
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("a", "a1"),
            ("a1", "a2"),
            ("b", "b1"),
            ("b1", "b2"),
            ("c", "c1"),
            ("c1", "c2"),
        ] {
            g.add_edge(a, b);
        }
        assert!(!is_interval_graph(&g).unwrap());
    }

    #[test]
    fn path_on_three_is_exact_zero() {
        let r = exact_bend_number(&gen_path(3), &SearchBudget::new(1)).unwrap();
        assert_eq!(r.exact(), Some(0));
    }

    #[test]
    fn four_cycle_and_k23_need_one_bend() {
        for g in [gen_cycle(4), gen_complete_bipartite(2, 3)] {
            let r = exact_bend_number(&g, &SearchBudget::new(1)).unwrap();
            let BendNumber::Exact { k, rep } = r else { panic!("no answer: {r:?}") };
            assert_eq!(k, 1);
            assert!(verify_representation(&rep, &g, 1).unwrap().ok);
        }
    }

    #[test]
    fn zero_bends_iff_interval_up_to_five_vertices() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                let r = exact_bend_number(&g, &SearchBudget::new(0)).unwrap();
                assert_eq!(r.exact() == Some(0), is_interval_graph(&g).unwrap(), "{g:?}");
            }
        }
    }

    #[test]
    fn limits_are_reported() {
        let budget = SearchBudget { node_limit: Some(3), ..SearchBudget::new(1) };
        let r = exact_bend_number(&gen_complete_bipartite(2, 3), &budget).unwrap();
        assert!(matches!(r, BendNumber::Exhausted { .. }));
    }
}
