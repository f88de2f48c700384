use std::collections::BTreeMap;

use super::canvas::{pt, rpath, Canvas};
use crate::coord::{rat, ratio, Rational};
use crate::error::{Error, Result};
use crate::graph::{DegeneracyOrder, Graph};
use crate::grid::{connect_snake, GridPath, Orientation, Segment, Subsegment};
use crate::rep::{compress_coordinates, Representation};
use crate::Rep;

/// Displayed pieces of one vertex: a vertical piece crossing the sight
/// line `y = 0` and a horizontal piece off that line.
#[derive(Clone, Debug)]
struct Pieces {
    x: Rational,
    lo: Rational,
    hi: Rational,
    y: Rational,
    left: Rational,
    right: Rational,
}

/// Insert the vertices in order; each new path visits the vertical pieces
/// of all but its last earlier neighbour with a snake and then hooks into
/// the horizontal piece of the last one. At most `2d - 1` bends for `d ≥ 2`;
/// orders with `d ≤ 1` describe forests and get single-bend paths.
pub fn construct_degeneracy(g: &Graph, ord: &DegeneracyOrder) -> Result<Rep> {
    ord.validate(g)?;
    if ord.d <= 1 {
        return construct_forest(g);
    }
    let pos: BTreeMap<&str, usize> = ord.order.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut canvas = Canvas::new();
    canvas.mark(Orientation::Horizontal, rat(0));
    let mut pieces: BTreeMap<String, Pieces> = BTreeMap::new();
    let mut rep: Representation<Rational> = Representation::new();
    for v in &ord.order {
        let vi = g.index_of(v).expect("validated order");
        let mut earlier: Vec<&str> =
            g.neighbors(vi).iter().map(|&w| g.label(w)).filter(|w| pos[w] < pos[v.as_str()]).collect();
        earlier.sort_by_key(|w| pos[w]);
        let (path, own) = match earlier.split_last() {
            None => isolated_hook(&mut canvas),
            Some((last, rest)) => hook(&mut canvas, &mut pieces, rest, last),
        };
        debug_assert!(path.bends() < 2 * ord.d);
        pieces.insert(v.clone(), own);
        rep.insert(v.clone(), path);
        debug_assert!(sight_line_holds(&pieces));
    }
    Ok(compress_coordinates(&rep))
}

fn sight_line_holds(pieces: &BTreeMap<String, Pieces>) -> bool {
    let zero = rat(0);
    pieces.values().all(|p| p.lo < zero && zero < p.hi && p.y != zero && p.left < p.right)
}

fn isolated_hook(canvas: &mut Canvas) -> (GridPath<Rational>, Pieces) {
    let x = canvas.fresh_outside(Orientation::Vertical, true);
    let x2 = canvas.fresh_outside(Orientation::Vertical, true);
    let lo = canvas.fresh_outside(Orientation::Horizontal, false);
    let hi = canvas.fresh_outside(Orientation::Horizontal, true);
    let path = rpath(&[pt(&x, &lo), pt(&x, &hi), pt(&x2, &hi)]);
    (path, Pieces { x: x.clone(), lo, hi: hi.clone(), y: hi, left: x, right: x2 })
}

fn hook(
    canvas: &mut Canvas,
    pieces: &mut BTreeMap<String, Pieces>,
    rest: &[&str],
    last: &str,
) -> (GridPath<Rational>, Pieces) {
    let zero = rat(0);
    let target = pieces[last].clone();
    let up = target.y < zero;
    let limit = rest.iter().map(|w| if up { pieces[*w].hi.clone() } else { pieces[*w].lo.clone() }).reduce(|a, b| {
        if up {
            a.min(b)
        } else {
            a.max(b)
        }
    });
    let mut pts = Vec::new();
    let e = match limit {
        Some(limit) => {
            let inner = canvas.fresh_between(Orientation::Horizontal, &zero, &limit);
            let outer = canvas.fresh_between(Orientation::Horizontal, &inner, &limit);
            let e = canvas.fresh_between(Orientation::Horizontal, &outer, &limit);
            let subs: Vec<Subsegment<Rational>> = rest
                .iter()
                .map(|w| Subsegment {
                    owner: w.to_string(),
                    segment: Segment::vertical(pieces[*w].x.clone(), pieces[*w].lo.clone(), pieces[*w].hi.clone()),
                })
                .collect();
            let lanes = if rest.len() % 2 == 1 { (inner.clone(), outer) } else { (outer, inner.clone()) };
            let snake = connect_snake(&subs, lanes).expect("pieces cross both lanes");
            pts.extend(snake.corners().iter().cloned());
            let end_x = pieces[*rest.last().unwrap()].x.clone();
            pts.push(pt(&end_x, &e));
            for w in rest {
                let p = pieces.get_mut(*w).unwrap();
                if up {
                    p.hi = inner.clone();
                } else {
                    p.lo = inner.clone();
                }
            }
            e
        }
        None => {
            let e = canvas.fresh_outside(Orientation::Horizontal, up);
            let start = canvas.fresh_outside(Orientation::Vertical, false);
            pts.push(pt(&start, &e));
            e
        }
    };
    let x = canvas.fresh_between(Orientation::Vertical, &target.left, &target.right);
    pts.push(pt(&x, &e));
    pts.push(pt(&x, &target.y));
    pts.push(pt(&target.right, &target.y));
    pieces.get_mut(last).unwrap().right = x.clone();
    let prev_x = pts[pts.len() - 4].x.clone();
    let (lo, hi) = if up { (target.y.clone(), e.clone()) } else { (e.clone(), target.y.clone()) };
    let (left, right) = if prev_x < x { (prev_x, x.clone()) } else { (x.clone(), prev_x) };
    (rpath(&pts), Pieces { x, lo, hi, y: e, left, right })
}

/// Single-bend representation of a forest. Every path is an L whose first
/// leg lies inside the displayed second leg of its parent; children occupy
/// disjoint stretches of that leg and turn onto fresh grid-lines.
pub fn construct_forest(g: &Graph) -> Result<Rep> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut canvas = Canvas::new();
    canvas.mark(Orientation::Vertical, rat(1));
    let mut rep: Representation<Rational> = Representation::new();
    let mut trees = 0;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        trees += 1;
        let y = canvas.fresh_outside(Orientation::Horizontal, true);
        let display = Segment::horizontal(y.clone(), rat(0), rat(1));
        let top = y.clone() + ratio(1, 2);
        rep.insert(g.label(root).to_string(), rpath(&[pt(&rat(0), &y), pt(&rat(1), &y), pt(&rat(1), &top)]));
        let mut stack = vec![(root, display)];
        while let Some((v, display)) = stack.pop() {
            let children: Vec<usize> = g.neighbors(v).iter().copied().filter(|&c| !seen[c]).collect();
            let parts = 2 * children.len() + 1;
            let step = display.length() / Rational::from_integer((parts as i64).into());
            for (i, &c) in children.iter().enumerate() {
                seen[c] = true;
                let a = display.lo.clone() + step.clone() * rat(2 * i as i64 + 1);
                let b = display.lo.clone() + step.clone() * rat(2 * i as i64 + 2);
                let b = canvas.fresh_between(display.orientation.flip(), &b, &a);
                let far = display.line.clone() + rat(1);
                let (path, leg) = match display.orientation {
                    Orientation::Horizontal => (
                        rpath(&[pt(&a, &display.line), pt(&b, &display.line), pt(&b, &far)]),
                        Segment::vertical(b.clone(), display.line.clone(), far),
                    ),
                    Orientation::Vertical => (
                        rpath(&[pt(&display.line, &a), pt(&display.line, &b), pt(&far, &b)]),
                        Segment::horizontal(b.clone(), display.line.clone(), far),
                    ),
                };
                rep.insert(g.label(c).to_string(), path);
                stack.push((c, leg));
            }
        }
    }
    if g.edge_count() + trees != n {
        return Err(Error::InvalidOrder("graph is not a forest".into()));
    }
    Ok(compress_coordinates(&rep))
}
