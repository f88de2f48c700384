use std::collections::BTreeMap;

use super::{
    auxiliary_label, gadget_label, variable_label, Assignment, Formula, K24_LARGE, K24_SMALL, LITTLE_W, S_PAIRS,
};
use crate::construct::canvas::{pt, rpath};
use crate::coord::{rat, ratio, Rational};
use crate::error::{Error, Result};
use crate::grid::{GridPath, GridPoint};
use crate::rep::{compress_coordinates, Representation};
use crate::Rep;

type P = GridPoint<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Dir {
    Right,
    Up,
    Left,
    Down,
}

impl Dir {
    fn step(self) -> (i64, i64) {
        match self {
            Dir::Right => (1, 0),
            Dir::Up => (0, 1),
            Dir::Left => (-1, 0),
            Dir::Down => (0, -1),
        }
    }
}

fn along(p: &P, d: Dir, len: &Rational) -> P {
    let (dx, dy) = d.step();
    pt(&(p.x.clone() + len * rat(dx)), &(p.y.clone() + len * rat(dy)))
}

/// Rays used by each octahedron corner in a clause gadget. Ray 3 carries
/// `A, B, C` and `W_ABC`; ray `k < 3` carries the triangle of the `k`-th
/// little `w`.
const GADGET_RAYS: [(&str, [usize; 2]); 6] =
    [("a", [0, 1]), ("A", [2, 3]), ("b", [0, 2]), ("B", [1, 3]), ("c", [1, 2]), ("C", [0, 3])];

/// Rays of an auxiliary octahedron; ray 0 carries the triangle `a, b, c`.
const AUX_RAYS: [(&str, [usize; 2]); 6] =
    [("a", [0, 1]), ("b", [0, 2]), ("c", [0, 3]), ("A", [2, 3]), ("B", [1, 3]), ("C", [1, 2])];

/// Corner of the gadget that stops short on ray `k`, leaving room for the
/// `s` vertex of that ray.
const SHORT_ON_RAY: [&str; 3] = ["C", "B", "A"];

/// Six paths bending at (or passing straight through) a common center,
/// each made of two of the four rays.
fn octahedron_paths(
    center: &P,
    dirs: [Dir; 4],
    rays: &[(&'static str, [usize; 2]); 6],
    len: impl Fn(&str, usize) -> Rational,
) -> Vec<(&'static str, GridPath<Rational>)> {
    rays.iter()
        .map(|&(v, [r1, r2])| {
            let p = [along(center, dirs[r2], &len(v, r2)), center.clone(), along(center, dirs[r1], &len(v, r1))];
            (v, rpath(&p))
        })
        .collect()
}

/// Geometry of one clause gadget apart from `W_ABC`.
struct Gadget {
    center: P,
    /// Directions of rays 0, 1, 2; ray 3 always points left.
    dirs: [Dir; 3],
    /// How far each little `w` runs along its ray before turning.
    reach: [Rational; 3],
    /// Where each little `w` turns.
    turn: [Dir; 3],
    /// Length of the rays shared with `W_ABC`.
    left: Rational,
    /// Length of the little `w` legs.
    delta: Rational,
}

impl Gadget {
    fn paths(&self) -> Vec<(&'static str, GridPath<Rational>)> {
        let dirs = [self.dirs[0], self.dirs[1], self.dirs[2], Dir::Left];
        let len = |v: &str, r: usize| {
            if r == 3 {
                self.left.clone()
            } else if SHORT_ON_RAY[r] == v {
                self.reach[r].clone() + rat(1)
            } else {
                self.reach[r].clone() + rat(4)
            }
        };
        let mut out = octahedron_paths(&self.center, dirs, &GADGET_RAYS, len);
        for k in 0..3 {
            let bend = along(&self.center, self.dirs[k], &self.reach[k]);
            let leg = along(&bend, self.turn[k], &self.delta);
            out.push((LITTLE_W[k].0, rpath(&[self.center.clone(), bend, leg])));
            let s = [rat(2), rat(3)].map(|d| along(&self.center, self.dirs[k], &(self.reach[k].clone() + d)));
            out.push((S_PAIRS[k].0, rpath(&s)));
        }
        out
    }
}

/// Single-bend representation of the octahedron on `a, A, b, B, c, C`:
/// all six paths pass through the origin, and the three 4-cycles form pies.
pub fn octahedron_representation() -> Rep {
    let o = pt(&rat(0), &rat(0));
    let dirs = [Dir::Right, Dir::Up, Dir::Left, Dir::Down];
    let rep: Representation<Rational> =
        octahedron_paths(&o, dirs, &AUX_RAYS, |_, _| rat(1)).into_iter().map(|(v, q)| (v.to_string(), q)).collect();
    compress_coordinates(&rep)
}

/// Single-bend representation of [`super::clause_gadget_graph`] with the
/// octahedron centered at a single point and each `w` on its own ray.
pub fn clause_gadget_representation() -> Rep {
    let o = pt(&rat(0), &rat(0));
    let g = Gadget {
        center: o.clone(),
        dirs: [Dir::Right, Dir::Up, Dir::Down],
        reach: [rat(2), rat(2), rat(2)],
        turn: [Dir::Up, Dir::Right, Dir::Right],
        left: rat(2),
        delta: ratio(1, 2),
    };
    let mut rep: Representation<Rational> = g.paths().into_iter().map(|(v, q)| (v.to_string(), q)).collect();
    rep.insert("W_ABC", rpath(&[along(&o, Dir::Left, &rat(1)), o]));
    compress_coordinates(&rep)
}

/// Single-bend representation of `build_reduction_graph(f)` from a
/// one-in-three assignment.
///
/// `T` bends at the origin inside the `K_{2,4}`, runs right along `y = 0`
/// into `O1` and up along `x = 0` into `O2`. True variables overlap `T` on
/// the horizontal line and turn up; false variables overlap it on the
/// vertical line and turn right. `V` overlaps `T`, rises along `x = 10`
/// from just above `O3` into `O4`, and picks up every `W_ABC` on the way.
/// A clause gadget sits right of `V`, between the lines of its two false
/// variables, with one ray pointing at its true variable.
pub fn representation_from_assignment(f: &Formula, a: &Assignment) -> Result<Rep> {
    for v in &f.variables {
        if !a.truth.contains_key(v) {
            return Err(Error::AssignmentInvalid(format!("variable {v} has no value")));
        }
    }
    if let Some(i) = f.unsatisfied_clause(a) {
        let c = f.clauses[i].map(|v| f.variables[v].as_str());
        return Err(Error::AssignmentInvalid(format!(
            "clause {} ({} {} {}) needs exactly one true variable",
            i + 1,
            c[0],
            c[1],
            c[2]
        )));
    }
    let n = f.clauses.len() as i64;
    let truth: Vec<bool> = f.variables.iter().map(|v| a.get(v)).collect();
    let mut line = BTreeMap::new();
    let (mut trues, mut falses) = (0, 0);
    for (j, &t) in truth.iter().enumerate() {
        let slot = if t { &mut trues } else { &mut falses };
        *slot += 1;
        line.insert(j, rat(10 + 10 * *slot));
    }
    let x_v = rat(10);
    let x_r = rat(20 + 10 * trues + 10);
    let y_t = rat(20 + 10 * falses + 10);
    let y_v = y_t.clone() + rat(10);
    let x_false_end = rat(12);
    let half = ratio(1, 2);
    let delta = ratio(1, 4 * (n + 2));
    let origin = pt(&rat(0), &rat(0));

    let mut rep: Representation<Rational> = Representation::new();
    let mut put = |label: String, points: &[P]| {
        rep.insert(label, rpath(points));
    };
    let p = |x: &Rational, y: &Rational| pt(x, y);

    put("T".into(), &[p(&rat(0), &y_t), origin.clone(), p(&x_r, &rat(0))]);
    let k24: [(&str, [(i64, i64); 3]); 5] = [
        (K24_SMALL[0], [(-2, 0), (4, 0), (4, 6)]),
        (K24_SMALL[1], [(0, -2), (0, 4), (6, 4)]),
        (K24_LARGE[0], [(-1, 0), (0, 0), (0, -1)]),
        (K24_LARGE[1], [(5, 4), (4, 4), (4, 5)]),
        (K24_LARGE[2], [(3, 4), (4, 4), (4, 3)]),
    ];
    for (label, pts) in k24 {
        put(label.into(), &pts.map(|(x, y)| p(&rat(x), &rat(y))));
    }
    put("V".into(), &[p(&(x_v.clone() - &half), &rat(0)), p(&x_v, &rat(0)), p(&x_v, &y_v)]);
    for (j, &t) in truth.iter().enumerate() {
        let c = &line[&j];
        let path = if t {
            [p(&(c - &half), &rat(0)), p(c, &rat(0)), p(c, &y_t)]
        } else {
            [p(&rat(0), &(c - &half)), p(&rat(0), c), p(&x_false_end, c)]
        };
        put(variable_label(f, j), &path);
    }
    let aux = [
        (p(&x_r, &rat(0)), Dir::Left),
        (p(&rat(0), &y_t), Dir::Down),
        (p(&x_v, &(-half.clone())), Dir::Up),
        (p(&x_v, &y_v), Dir::Down),
    ];
    for (i, (center, toward)) in aux.iter().enumerate() {
        let dirs = [0, 1, 2, 3].map(|k| [Dir::Right, Dir::Up, Dir::Left, Dir::Down][(dir_index(*toward) + k) % 4]);
        for (v, path) in octahedron_paths(center, dirs, &AUX_RAYS, |_, _| rat(1)) {
            rep.insert(auxiliary_label(i + 1, v), path);
        }
    }

    for (i, clause) in f.clauses.iter().enumerate() {
        let frac = ratio(i as i64 + 1, n + 2);
        let t_var = *clause.iter().find(|&&v| truth[v]).expect("clause has a true variable");
        let mut false_vars: Vec<usize> = clause.iter().copied().filter(|&v| !truth[v]).collect();
        false_vars.sort_by(|u, w| line[u].cmp(&line[w]));
        let (lo, hi) = (&line[&false_vars[0]], &line[&false_vars[1]]);
        let cx = x_v.clone() + &frac;
        let cy = (lo + hi) / rat(2) + &frac;
        let x_t = &line[&t_var];
        let mut dirs = [Dir::Right; 3];
        let mut reach = [rat(0), rat(0), rat(0)];
        let mut turn = [Dir::Up; 3];
        for (k, &(_, _, position)) in LITTLE_W.iter().enumerate() {
            let v = clause[position - 1];
            (dirs[k], reach[k], turn[k]) = if v == t_var {
                (Dir::Right, x_t - &cx, Dir::Up)
            } else if v == false_vars[1] {
                (Dir::Up, hi - &cy, Dir::Right)
            } else {
                (Dir::Down, &cy - lo, Dir::Right)
            };
        }
        let center = p(&cx, &cy);
        let gadget = Gadget { center: center.clone(), dirs, reach, turn, left: &frac / rat(2), delta: delta.clone() };
        for (v, path) in gadget.paths() {
            rep.insert(gadget_label(i, v), path);
        }
        rep.insert(gadget_label(i, "W_ABC"), rpath(&[p(&x_v, &(&cy + &delta)), p(&x_v, &cy), center]));
    }
    Ok(compress_coordinates(&rep))
}

fn dir_index(d: Dir) -> usize {
    match d {
        Dir::Right => 0,
        Dir::Up => 1,
        Dir::Left => 2,
        Dir::Down => 3,
    }
}
