use std::collections::{BTreeMap, BTreeSet};

use super::canvas::{pt, rpath, Canvas};
use super::cover::{construct_from_global_cover, construct_from_local_cover};
use super::degeneracy::{construct_degeneracy, construct_forest};
use crate::coord::{rat, Rational};
use crate::error::{Error, Result};
use crate::graph::{clique_cover_global, clique_cover_local, degeneracy_order, BuildSequence, Graph};
use crate::grid::{GridPoint, Orientation};
use crate::rep::{compress_coordinates, Representation};
use crate::verify::verify_representation;
use crate::Rep;

/// A displayed piece crossing the axis perpendicular to its line.
#[derive(Clone, Debug)]
struct Piece {
    line: Rational,
    lo: Rational,
    hi: Rational,
}

/// A piece shared by exactly the two paths of an edge.
#[derive(Clone, Debug)]
struct EdgePiece {
    orientation: Orientation,
    line: Rational,
    lo: Rational,
    hi: Rational,
}

/// Canonical coordinates: `x` names lines of the primary orientation and
/// `y` runs along them. The horizontal frame swaps the two.
#[derive(Clone, Copy, Debug)]
struct Frame {
    primary: Orientation,
}

impl Frame {
    const ALL: [Frame; 2] = [Frame { primary: Orientation::Vertical }, Frame { primary: Orientation::Horizontal }];

    fn xo(self) -> Orientation {
        self.primary
    }

    fn yo(self) -> Orientation {
        self.primary.flip()
    }

    fn point(self, x: &Rational, y: &Rational) -> GridPoint<Rational> {
        match self.primary {
            Orientation::Vertical => pt(x, y),
            Orientation::Horizontal => pt(y, x),
        }
    }
}

#[derive(Clone, Debug)]
struct State {
    canvas: Canvas,
    shown: BTreeMap<(String, Orientation), Vec<Piece>>,
    edges: BTreeMap<(String, String), EdgePiece>,
    paths: Representation<Rational>,
}

type Corners = Vec<(Rational, Rational)>;

fn positive(r: &Rational) -> bool {
    *r > rat(0)
}

fn sorted(a: &Rational, b: &Rational) -> (Rational, Rational) {
    if a < b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl State {
    fn new() -> Self {
        let mut canvas = Canvas::new();
        canvas.mark(Orientation::Vertical, rat(0));
        canvas.mark(Orientation::Horizontal, rat(0));
        State { canvas, shown: BTreeMap::new(), edges: BTreeMap::new(), paths: Representation::new() }
    }

    fn pieces(&self, w: &str, o: Orientation) -> &[Piece] {
        self.shown.get(&(w.to_string(), o)).map_or(&[], Vec::as_slice)
    }

    fn add_piece(&mut self, w: &str, o: Orientation, line: &Rational, a: &Rational, b: &Rational) {
        let (lo, hi) = sorted(a, b);
        if lo < rat(0) && rat(0) < hi {
            self.shown.entry((w.to_string(), o)).or_default().push(Piece { line: line.clone(), lo, hi });
        }
    }

    /// Snake through the chosen primary pieces on side `up` of the axis;
    /// with `extend` the last piece continues past the outer lane.
    fn snake(&mut self, f: Frame, v: &str, chosen: &[(String, usize)], up: bool, extend: bool) -> (Corners, Rational) {
        let zero = rat(0);
        let limit = chosen
            .iter()
            .map(|(w, i)| {
                let p = &self.pieces(w, f.xo())[*i];
                if up {
                    p.hi.clone()
                } else {
                    p.lo.clone()
                }
            })
            .reduce(|a, b| if up { a.min(b) } else { a.max(b) })
            .expect("snake needs a piece");
        let inner = self.canvas.fresh_between(f.yo(), &zero, &limit);
        let outer = self.canvas.fresh_between(f.yo(), &inner, &limit);
        let end = if extend { self.canvas.fresh_between(f.yo(), &outer, &limit) } else { outer.clone() };
        let n = chosen.len();
        let (l0, l1) = if n % 2 == 1 { (inner.clone(), outer.clone()) } else { (outer.clone(), inner.clone()) };
        let mut corners = Vec::with_capacity(2 * n + 1);
        for (i, (w, idx)) in chosen.iter().enumerate() {
            let key = (w.clone(), f.xo());
            let line = self.shown[&key][*idx].line.clone();
            let (a, b) = if i % 2 == 0 { (&l0, &l1) } else { (&l1, &l0) };
            corners.push((line.clone(), a.clone()));
            corners.push((line.clone(), b.clone()));
            let top = if i + 1 == n { end.clone() } else { outer.clone() };
            let (lo, hi) = sorted(&inner, &top);
            self.edges.insert((w.clone(), v.to_string()), EdgePiece { orientation: f.xo(), line, lo, hi });
            let piece = &mut self.shown.get_mut(&key).unwrap()[*idx];
            if up {
                piece.hi = inner.clone();
            } else {
                piece.lo = inner.clone();
            }
        }
        if extend {
            let x = corners.last().unwrap().0.clone();
            corners.push((x, end.clone()));
        }
        (corners, end)
    }

    fn finish(&mut self, f: Frame, v: &str, corners: &Corners) -> usize {
        let pts: Vec<GridPoint<Rational>> = corners.iter().map(|(x, y)| f.point(x, y)).collect();
        let path = rpath(&pts);
        let bends = path.bends();
        self.paths.insert(v, path);
        bends
    }

    /// A snake through every piece of the clique; a connector crossing the
    /// axis displays `v`, and each snake piece displays an edge.
    fn full(&mut self, f: Frame, v: &str, chosen: &[(String, usize)], up: bool) -> usize {
        let (corners, _) = self.snake(f, v, chosen, up, false);
        for pair in corners.windows(2) {
            let ((xa, ya), (xb, yb)) = (&pair[0], &pair[1]);
            if ya == yb && positive(xa) != positive(xb) {
                self.add_piece(v, f.yo(), ya, xa, xb);
            }
        }
        self.finish(f, v, &corners)
    }

    /// A snake on side `up` followed by a segment crossing the `y` axis
    /// and a new primary piece on side `right`; `detour` adds a second
    /// crossing pair so that `v` shows on both sides.
    fn partial(
        &mut self,
        f: Frame,
        v: &str,
        chosen: &[(String, usize)],
        up: bool,
        right: bool,
        detour: bool,
    ) -> Option<usize> {
        let (mut corners, e) = if chosen.is_empty() {
            let e = self.canvas.fresh_outside(f.yo(), up);
            let x0 = self.canvas.fresh_outside(f.xo(), !right);
            (vec![(x0, e.clone())], e)
        } else {
            let last = &chosen[chosen.len() - 1];
            if positive(&self.pieces(&last.0, f.xo())[last.1].line) == right {
                return None;
            }
            self.snake(f, v, chosen, up, true)
        };
        let x_prev = corners.last().unwrap().0.clone();
        let x = self.canvas.fresh_outside(f.xo(), right);
        corners.push((x.clone(), e.clone()));
        self.add_piece(v, f.yo(), &e, &x_prev, &x);
        let far = self.canvas.fresh_outside(f.yo(), !up);
        corners.push((x.clone(), far.clone()));
        self.add_piece(v, f.xo(), &x, &e, &far);
        if detour {
            let x2 = self.canvas.fresh_outside(f.xo(), !right);
            corners.push((x2.clone(), far.clone()));
            self.add_piece(v, f.yo(), &far, &x, &x2);
            let top = self.canvas.fresh_outside(f.yo(), up);
            corners.push((x2.clone(), top.clone()));
            self.add_piece(v, f.xo(), &x2, &far, &top);
        }
        Some(self.finish(f, v, &corners))
    }

    /// Visit the other neighbours on the side away from the edge piece of
    /// `(w1, w2)`, cross the axis on a new primary line and end inside the
    /// edge piece. Without other neighbours `lead` adds a leading segment.
    fn through_edge(
        &mut self,
        f: Frame,
        v: &str,
        pair: &(String, String),
        chosen: &[(String, usize)],
        right: bool,
        lead: bool,
    ) -> Option<usize> {
        let ep = self.edges.get(pair)?.clone();
        if ep.orientation != f.xo() {
            return None;
        }
        let below = !positive(&ep.hi);
        let up = below;
        let (mut corners, e) = if chosen.is_empty() {
            let e = self.canvas.fresh_outside(f.yo(), up);
            if lead {
                let x0 = self.canvas.fresh_outside(f.xo(), !right);
                (vec![(x0, e.clone())], e)
            } else {
                (Vec::new(), e)
            }
        } else {
            self.snake(f, v, chosen, up, true)
        };
        let x = self.canvas.fresh_outside(f.xo(), right);
        if let Some((x_prev, _)) = corners.last().cloned() {
            self.add_piece(v, f.yo(), &e, &x_prev, &x);
        }
        corners.push((x.clone(), e.clone()));
        let (near, far) = if below { (ep.hi.clone(), ep.lo.clone()) } else { (ep.lo.clone(), ep.hi.clone()) };
        let g = self.canvas.fresh_between(f.yo(), &near, &far);
        corners.push((x.clone(), g.clone()));
        corners.push((ep.line.clone(), g.clone()));
        corners.push((ep.line.clone(), far));
        self.add_piece(v, f.xo(), &x, &e, &g);
        self.add_piece(v, f.yo(), &g, &x, &ep.line);
        let (lo, hi) = sorted(&near, &g);
        self.edges.insert(pair.clone(), EdgePiece { lo, hi, ..ep });
        Some(self.finish(f, v, &corners))
    }

    /// Invariant A or B in either frame.
    fn holds(&self, g: &Graph, w: &[String]) -> bool {
        Frame::ALL.iter().any(|&f| self.holds_a(f, w) || self.holds_b(g, f, w))
    }

    fn holds_a(&self, f: Frame, w: &[String]) -> bool {
        if w.iter().any(|u| self.pieces(u, f.xo()).is_empty()) {
            return false;
        }
        if w.iter().filter(|u| self.pieces(u, f.yo()).is_empty()).count() > 1 {
            return false;
        }
        let sides: BTreeSet<bool> = w.iter().flat_map(|u| self.pieces(u, f.xo())).map(|p| positive(&p.line)).collect();
        sides.len() == 2
    }

    fn holds_b(&self, g: &Graph, f: Frame, w: &[String]) -> bool {
        w.iter().any(|w1| {
            w.iter().any(|w2| {
                w1 != w2
                    && g.has_edge(w1, w2)
                    && w.iter().all(|u| u == w1 || !self.pieces(u, f.yo()).is_empty())
                    && w.iter().all(|u| u == w2 || !self.pieces(u, f.xo()).is_empty())
                    && self.edges.get(&(w1.clone(), w2.clone())).is_some_and(|ep| {
                        ep.orientation == f.xo() && self.pieces(w1, f.xo()).iter().any(|p| p.line == ep.line)
                    })
            })
        })
    }
}

/// Choices of one primary piece per vertex, the last one varying over all
/// pieces of all vertices; the others are ordered along the axis.
fn piece_orders(st: &State, f: Frame, s: &[String]) -> Vec<Vec<(String, usize)>> {
    if s.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in s {
        for idx in 0..st.pieces(last, f.xo()).len() {
            let mut rest: Vec<(String, usize)> = s.iter().filter(|u| *u != last).map(|u| (u.clone(), 0)).collect();
            rest.sort_by(|a, b| st.pieces(&a.0, f.xo())[0].line.cmp(&st.pieces(&b.0, f.xo())[0].line));
            rest.push((last.clone(), idx));
            out.push(rest);
        }
    }
    out
}

/// One piece per vertex in axis order, using both sides when possible.
fn spread_pieces(st: &State, f: Frame, s: &[String]) -> Vec<(String, usize)> {
    let mut chosen: Vec<(String, usize)> = s.iter().map(|u| (u.clone(), 0)).collect();
    let side = |st: &State, c: &(String, usize)| positive(&st.pieces(&c.0, f.xo())[c.1].line);
    let sides: BTreeSet<bool> = chosen.iter().map(|c| side(st, c)).collect();
    if sides.len() == 1 {
        let have = *sides.iter().next().unwrap();
        'search: for c in chosen.iter_mut() {
            for idx in 0..st.pieces(&c.0, f.xo()).len() {
                if positive(&st.pieces(&c.0, f.xo())[idx].line) != have {
                    c.1 = idx;
                    break 'search;
                }
            }
        }
    }
    chosen.sort_by(|a, b| st.pieces(&a.0, f.xo())[a.1].line.cmp(&st.pieces(&b.0, f.xo())[b.1].line));
    chosen
}

enum Move {
    Full { f: Frame, chosen: Vec<(String, usize)>, up: bool },
    Partial { f: Frame, chosen: Vec<(String, usize)>, up: bool, right: bool, detour: bool },
    Edge { f: Frame, pair: (String, String), chosen: Vec<(String, usize)>, right: bool, lead: bool },
}

fn candidate_moves(st: &State, g: &Graph, w: &[String], nb: &[String]) -> Vec<Move> {
    let mut moves = Vec::new();
    for f in Frame::ALL {
        let has_primary = |u: &String| !st.pieces(u, f.xo()).is_empty();
        if nb.len() == w.len() && nb.iter().all(has_primary) {
            for up in [true, false] {
                moves.push(Move::Full { f, chosen: spread_pieces(st, f, nb), up });
            }
        }
        for w1 in nb {
            for w2 in nb {
                let pair = (w1.clone(), w2.clone());
                if w1 == w2 || !st.edges.get(&pair).is_some_and(|ep| ep.orientation == f.xo()) || !g.has_edge(w1, w2) {
                    continue;
                }
                let rest: Vec<String> = nb.iter().filter(|u| *u != w1 && *u != w2).cloned().collect();
                if !rest.iter().all(has_primary) {
                    continue;
                }
                for chosen in piece_orders(st, f, &rest) {
                    for right in [true, false] {
                        let leads: &[bool] = if rest.is_empty() { &[false, true] } else { &[true] };
                        for &lead in leads {
                            moves.push(Move::Edge { f, pair: pair.clone(), chosen: chosen.clone(), right, lead });
                        }
                    }
                }
            }
        }
        if nb.iter().all(has_primary) {
            for chosen in piece_orders(st, f, nb) {
                for detour in [false, true] {
                    for up in [true, false] {
                        for right in [true, false] {
                            moves.push(Move::Partial { f, chosen: chosen.clone(), up, right, detour });
                        }
                    }
                }
            }
        }
    }
    moves
}

fn apply(st: &mut State, v: &str, m: &Move) -> Option<usize> {
    match m {
        Move::Full { f, chosen, up } => Some(st.full(*f, v, chosen, *up)),
        Move::Partial { f, chosen, up, right, detour } => st.partial(*f, v, chosen, *up, *right, *detour),
        Move::Edge { f, pair, chosen, right, lead } => st.through_edge(*f, v, pair, chosen, *right, *lead),
    }
}

/// Insert along a k-tree building sequence keeping, for every attachment
/// clique still needed later, one of two invariants:
///
/// * A: every member shows a primary piece crossing the axis, all but at
///   most one also show a secondary piece, and the primary pieces lie on
///   both sides of the origin;
/// * B: for an edge `w1 w2` of the clique, everyone but `w1` shows a
///   secondary piece, everyone but `w2` a primary piece, and a piece on a
///   primary line of `w1` displays exactly that edge.
///
/// Each insertion tries the path shapes that keep these invariants, in both
/// orientations, and keeps the first one with fewest bends. The result has
/// at most `2k - 2` bends for `k ≥ 3`. Width one is a forest; width two is
/// attempted with the same machinery and otherwise falls back to the cover
/// and degeneracy constructors, failing if none reaches two bends.
pub fn construct_treewidth(g: &Graph, seq: &BuildSequence) -> Result<Rep> {
    seq.validate(g)?;
    let k = seq.k;
    match k {
        0 => Err(Error::WidthTooSmall(0)),
        1 => construct_forest(g),
        2 => insert_along(g, seq, 2).or_else(|_| width_two_fallback(g)),
        _ => insert_along(g, seq, 2 * k - 2),
    }
}

fn width_two_fallback(g: &Graph) -> Result<Rep> {
    let ok = |rep: &Rep| verify_representation(rep, g, 2).is_ok_and(|r| r.ok);
    let ord = degeneracy_order(g);
    if ord.d <= 1 {
        return construct_forest(g);
    }
    let tries = [
        construct_from_global_cover(g, &clique_cover_global(g, None)),
        construct_from_local_cover(g, &clique_cover_local(g)),
        construct_degeneracy(g, &ord),
    ];
    tries
        .into_iter()
        .flatten()
        .find(ok)
        .ok_or_else(|| Error::Construction("no two-bend representation found for this width-two graph".into()))
}

fn insert_along(g: &Graph, seq: &BuildSequence, budget: usize) -> Result<Rep> {
    let k = seq.k;
    let mut st = State::new();
    let mut needed: Vec<(usize, Vec<String>)> =
        seq.steps.iter().enumerate().map(|(i, (_, c))| (i + 1, c.clone())).collect();
    let head = seq.base.len().min(k);
    if seq.base.len() == k + 1 {
        needed.push((0, seq.base[..k].to_vec()));
    }
    for (i, v) in seq.base[..head].iter().enumerate() {
        let earlier: Vec<String> = seq.base[..i].iter().filter(|u| g.has_edge(u, v)).cloned().collect();
        let want_right = i % 2 == 0;
        let f = Frame::ALL[0];
        let orders = piece_orders(&st, f, &earlier);
        let pick = orders
            .iter()
            .find(|c| c.last().is_none_or(|(u, idx)| positive(&st.pieces(u, f.xo())[*idx].line) != want_right));
        let (chosen, right) = match pick {
            Some(c) => (c.clone(), want_right),
            None => (orders[0].clone(), !want_right),
        };
        st.partial(f, v, &chosen, true, right, false).expect("side matches the last piece");
    }
    let mut steps: Vec<(String, Vec<String>)> = Vec::new();
    if seq.base.len() == k + 1 {
        steps.push((seq.base[k].clone(), seq.base[..k].to_vec()));
    }
    steps.extend(seq.steps.iter().cloned());
    let mut budget_left = BACKTRACK_LIMIT;
    let ctx = Search { g, steps: &steps, needed: &needed, budget };
    match ctx.place(0, st, &mut budget_left) {
        Ok(done) => Ok(compress_coordinates(&done.paths)),
        Err(v) => Err(Error::Construction(format!("no admissible path for {v} within {budget} bends"))),
    }
}

const BACKTRACK_LIMIT: usize = 20_000;

struct Search<'a> {
    g: &'a Graph,
    steps: &'a [(String, Vec<String>)],
    needed: &'a [(usize, Vec<String>)],
    budget: usize,
}

impl Search<'_> {
    /// Admissible next states for step `t`, fewest bends first.
    fn options(&self, t: usize, st: &State) -> Vec<State> {
        let (v, clique) = &self.steps[t];
        let nb: Vec<String> = clique.iter().filter(|u| self.g.has_edge(u, v)).cloned().collect();
        let still_needed: Vec<&Vec<String>> = self.needed.iter().filter(|(at, _)| *at > t).map(|(_, c)| c).collect();
        let mut found: Vec<(usize, State)> = Vec::new();
        for m in candidate_moves(st, self.g, clique, &nb) {
            let mut trial = st.clone();
            let Some(bends) = apply(&mut trial, v, &m) else { continue };
            if bends > self.budget {
                continue;
            }
            let present = |c: &Vec<String>| c.iter().all(|u| trial.paths.get(u).is_some());
            if still_needed.iter().filter(|c| present(c)).all(|c| trial.holds(self.g, c)) {
                found.push((bends, trial));
            }
        }
        found.sort_by_key(|(b, _)| *b);
        found.into_iter().map(|(_, s)| s).collect()
    }

    /// Depth-first over the admissible choices; the error names the vertex
    /// that could not be placed.
    fn place(&self, t: usize, st: State, left: &mut usize) -> std::result::Result<State, String> {
        if t == self.steps.len() {
            return Ok(st);
        }
        let v = &self.steps[t].0;
        let mut deepest = v.clone();
        for next in self.options(t, &st) {
            if *left == 0 {
                break;
            }
            *left -= 1;
            match self.place(t + 1, next, left) {
                Ok(done) => return Ok(done),
                Err(w) => deepest = w,
            }
        }
        Err(deepest)
    }
}
