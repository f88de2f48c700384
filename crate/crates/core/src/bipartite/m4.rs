use std::collections::BTreeMap;

use rand::Rng;

use super::pretzel::blowup_pretzel;
use crate::construct::canvas::{pt, rpath};
use crate::coord::{rat, ratio, Rational};
use crate::error::{Error, Result};
use crate::graph::random::seeded;
use crate::grid::{GridPoint, Orientation};
use crate::rep::{compress_coordinates, Representation};
use crate::Rep;

/// `⌊m⁴ - 2m³ + 5m²/2 - 2m - 4⌋`, the number of `B` vertices of [`construct_m4`].
pub fn m4_n(m: usize) -> usize {
    let m = m as i64;
    ((2 * m.pow(4) - 4 * m.pow(3) + 5 * m * m - 4 * m - 8).div_euclid(2)).max(0) as usize
}

/// A segment of an `A` path; `path` indexes the class-ordered labels.
#[derive(Clone, Debug)]
struct Seg {
    path: usize,
    line: i64,
    lo: i64,
    hi: i64,
}

impl Seg {
    /// Whether the unit step from `t` in direction `d` lies on the segment.
    fn carries(&self, t: i64, d: i64) -> bool {
        if d > 0 {
            self.lo <= t && t < self.hi
        } else {
            self.lo < t && t <= self.hi
        }
    }
}

/// A segment end and the direction pointing away from the segment.
#[derive(Clone, Debug)]
struct Ray {
    path: usize,
    line: i64,
    start: i64,
    dir: i64,
}

/// A single-bend seed of a `B` path. Its vertical arm runs on column
/// `vert.0` from row `vert.1` towards `vert.2`, its horizontal arm on row
/// `horiz.0` from column `horiz.1` towards `horiz.2`.
#[derive(Clone, Debug)]
struct Seed {
    vert: (i64, i64, i64),
    horiz: (i64, i64, i64),
    corner: (i64, i64),
    hits: [usize; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Long {
    Vertical,
    Horizontal,
}

/// Seeds grouped by long-arm direction and arm position.
type ArmIndex = BTreeMap<(Long, (i64, i64, i64)), Vec<usize>>;

struct Model {
    m: usize,
    vs: Vec<Seg>,
    hs: Vec<Seg>,
    seeds: Vec<Seed>,
}

impl Model {
    fn segs(&self, o: Long) -> &[Seg] {
        match o {
            Long::Vertical => &self.vs,
            Long::Horizontal => &self.hs,
        }
    }

    /// `(line, start, dir)` of the seed's arm in direction `o`.
    fn arm(&self, i: usize, o: Long) -> (i64, i64, i64) {
        match o {
            Long::Vertical => self.seeds[i].vert,
            Long::Horizontal => self.seeds[i].horiz,
        }
    }

    fn missing(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let hits = self.seeds[i].hits;
        (0..self.m).filter(move |p| !hits.contains(p))
    }

    /// Seeds whose long arm runs from `(line, start)` in direction `dir`.
    fn long_arms(&self, cls: &[Long]) -> ArmIndex {
        let mut out: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (i, &o) in cls.iter().enumerate() {
            out.entry((o, self.arm(i, o))).or_default().push(i);
        }
        out
    }

    /// For every missing path of seed `i`, the candidate segments along
    /// with the seeds whose long arms would overlap a piece placed there
    /// unless they are extended first.
    fn options<'a>(
        &'a self,
        i: usize,
        o: Long,
        arms: &'a ArmIndex,
    ) -> impl Iterator<Item = (usize, Vec<(&'a Seg, Vec<usize>)>)> + 'a {
        let (line, t, d) = self.arm(i, o);
        self.missing(i).map(move |p| {
            let opts = self
                .segs(o)
                .iter()
                .filter(|s| s.path == p && s.line != line && s.carries(t, d))
                .map(|s| {
                    let blockers = arms
                        .get(&(o, (s.line, t, d)))
                        .map(|v| v.iter().copied().filter(|&j| j != i).collect())
                        .unwrap_or_default();
                    (s, blockers)
                })
                .collect();
            (p, opts)
        })
    }

    /// Extend seeds in an order in which every seed finds, for each path
    /// it misses, a segment not blocked by seeds still to come. Returns
    /// the seeds that never become extendable and the order found.
    fn rank(&self, cls: &[Long]) -> (Vec<usize>, Vec<usize>) {
        let arms = self.long_arms(cls);
        let needs: Vec<Vec<Vec<Vec<usize>>>> = (0..self.seeds.len())
            .map(|i| self.options(i, cls[i], &arms).map(|(_, o)| o.into_iter().map(|(_, b)| b).collect()).collect())
            .collect();
        let mut ranked = vec![false; self.seeds.len()];
        let mut order = Vec::new();
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..self.seeds.len() {
                if ranked[i] {
                    continue;
                }
                let ready = needs[i].iter().all(|opts| opts.iter().any(|blk| blk.iter().all(|&j| ranked[j])));
                if ready {
                    ranked[i] = true;
                    order.push(i);
                    changed = true;
                }
            }
        }
        let left = (0..self.seeds.len()).filter(|&i| !ranked[i]).collect();
        (left, order)
    }
}

fn build_model(a: &Rep, labels: &[String]) -> Model {
    let m = labels.len();
    let mut vs = Vec::new();
    let mut hs = Vec::new();
    let mut rays: [Vec<Ray>; 2] = [Vec::new(), Vec::new()];
    for (pi, v) in labels.iter().enumerate() {
        let p = a.get(v).expect("labelled path");
        let corners = p.corners();
        for (k, s) in p.segments().into_iter().enumerate() {
            let seg = Seg { path: pi, line: s.line, lo: s.lo, hi: s.hi };
            let slot = match s.orientation {
                Orientation::Vertical => 0,
                Orientation::Horizontal => 1,
            };
            for end in [&corners[k], &corners[k + 1]] {
                let c = if slot == 0 { end.y } else { end.x };
                rays[slot].push(Ray { path: pi, line: s.line, start: c, dir: if c == s.hi { 1 } else { -1 } });
            }
            if slot == 0 {
                vs.push(seg);
            } else {
                hs.push(seg);
            }
        }
    }
    let mut seeds = Vec::new();
    for v in &vs {
        for h in &hs {
            if v.path != h.path && h.lo < v.line && v.line < h.hi && v.lo < h.line && h.line < v.hi {
                for d in [1, -1] {
                    seeds.push(Seed {
                        vert: (v.line, h.line, d),
                        horiz: (h.line, v.line, d),
                        corner: (v.line, h.line),
                        hits: [v.path, h.path],
                    });
                }
            }
        }
    }
    for (a, b) in matched_ends(&vs, &hs, &rays[0], &rays[1]) {
        seeds.push(Seed {
            vert: (a.line, a.start, -a.dir),
            horiz: (b.line, b.start, -b.dir),
            corner: (a.line, b.line),
            hits: [a.path, b.path],
        });
    }
    Model { m, vs, hs, seeds }
}

/// Pairs of a vertical and a horizontal segment end whose extensions meet
/// in free grid, matched so that every end is used at most once.
fn matched_ends<'a>(vs: &[Seg], hs: &[Seg], vr: &'a [Ray], hr: &'a [Ray]) -> Vec<(&'a Ray, &'a Ray)> {
    let free = |segs: &[Seg], line: i64, a: i64, b: i64| {
        let (lo, hi) = (a.min(b), a.max(b));
        !segs.iter().any(|s| s.line == line && s.hi.min(hi) > s.lo.max(lo))
    };
    let adj: Vec<Vec<usize>> = vr
        .iter()
        .map(|a| {
            (0..hr.len())
                .filter(|&k| {
                    let b = &hr[k];
                    a.path != b.path
                        && (b.line - a.start) * a.dir > 0
                        && (a.line - b.start) * b.dir > 0
                        && free(vs, a.line, a.start, b.line)
                        && free(hs, b.line, b.start, a.line)
                })
                .collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; hr.len()];
    fn augment(a: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &b in &adj[a] {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            if owner[b].is_none_or(|o| augment(o, adj, owner, seen)) {
                owner[b] = Some(a);
                return true;
            }
        }
        false
    }
    for a in 0..vr.len() {
        let mut seen = vec![false; hr.len()];
        augment(a, &adj, &mut owner, &mut seen);
    }
    owner.iter().enumerate().filter_map(|(b, a)| a.map(|a| (&vr[a], &hr[b]))).collect()
}

/// Choose for every seed which arm is long and gets extended, by local
/// search on the number of seeds that cannot be extended.
fn classify(model: &Model, seed: u64, iters: usize) -> Option<Vec<Long>> {
    let mut rng = seeded(seed);
    let pick = |r: &mut rand_chacha::ChaCha8Rng| if r.gen_bool(0.5) { Long::Vertical } else { Long::Horizontal };
    let mut cls: Vec<Long> = (0..model.seeds.len()).map(|_| pick(&mut rng)).collect();
    let flip = |o: Long| if o == Long::Vertical { Long::Horizontal } else { Long::Vertical };
    let (mut failing, _) = model.rank(&cls);
    for _ in 0..iters {
        if failing.is_empty() {
            return Some(cls);
        }
        let i = if rng.gen_bool(0.7) { failing[rng.gen_range(0..failing.len())] } else { rng.gen_range(0..cls.len()) };
        cls[i] = flip(cls[i]);
        let (next, _) = model.rank(&cls);
        if next.len() <= failing.len() {
            failing = next;
        } else {
            cls[i] = flip(cls[i]);
        }
    }
    failing.is_empty().then_some(cls)
}

/// `(2m-3)`-bend representation of `K_{m,n}` with `n` from [`m4_n`].
///
/// `A` is the blown-up pretzel with `j = m - 1`. Every crossing of two `A`
/// paths seeds two single-bend paths in opposite corners, and matched
/// pairs of segment ends whose extensions meet seed one more. Each seed
/// reaches the two paths through its corner and extends its long arm by a
/// snake through one segment of each remaining path. Long arms sharing a
/// row (or column) and direction are staggered in extension order so that
/// no snake piece lands on a later seed's arm.
pub fn construct_m4(m: usize) -> Result<Rep> {
    let bp = blowup_pretzel(m, m - 1)?;
    let labels = bp.labels();
    let model = build_model(&bp.paths, &labels);
    let expected = m4_n(m);
    if model.seeds.len() != expected {
        return Err(Error::Construction(format!("{} seeds for m = {m}, expected {expected}", model.seeds.len())));
    }
    let cls = (1..=32)
        .find_map(|s| classify(&model, s, 4000))
        .ok_or_else(|| Error::Construction(format!("no extension order found for m = {m}")))?;
    let mut rep: Representation<Rational> = Representation::new();
    for (v, p) in bp.paths.iter() {
        rep.insert(v.clone(), p.map(|c| pt(&rat(c.x), &rat(c.y))).expect("same corners"));
    }
    for (i, path) in realize(&model, &cls).into_iter().enumerate() {
        rep.insert(format!("b{}", i + 1), path);
    }
    Ok(compress_coordinates(&rep))
}

fn realize(model: &Model, cls: &[Long]) -> Vec<crate::GridPath<Rational>> {
    let (_, order) = model.rank(cls);
    let mut pos = vec![0; cls.len()];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    // Long arms leaving one line in one direction are staggered by rank.
    let mut groups: BTreeMap<(Long, i64, i64), Vec<usize>> = BTreeMap::new();
    for (i, &o) in cls.iter().enumerate() {
        let (_, t, d) = model.arm(i, o);
        groups.entry((o, t, d)).or_default().push(i);
    }
    let mut reach = vec![rat(0); cls.len()];
    let mut step = vec![rat(0); cls.len()];
    for g in groups.values_mut() {
        g.sort_by_key(|&i| pos[i]);
        let r = g.len() as i64;
        for (k, &i) in g.iter().enumerate() {
            reach[i] = ratio(k as i64 + 1, 2 * (r + 2));
            step[i] = ratio(1, 4 * (r + 2) * (model.m as i64 + 1));
        }
    }
    let short = ratio(1, 4 * (cls.len() as i64 + 2));
    let arms = model.long_arms(cls);
    (0..cls.len())
        .map(|i| {
            let s = &model.seeds[i];
            let o = cls[i];
            let (tv, th) = if o == Long::Vertical { (&reach[i], &short) } else { (&short, &reach[i]) };
            let (x, yv, dv) = s.vert;
            let (yh, xh, dh) = s.horiz;
            let vend = rat(yv) + rat(dv) * tv.clone();
            let hend = rat(xh) + rat(dh) * th.clone();
            let corner = pt(&rat(s.corner.0), &rat(s.corner.1));
            let seed = [pt(&rat(x), &vend), corner, pt(&hend, &rat(yh))];
            let (line, _, d) = model.arm(i, o);
            let mut cur = if o == Long::Vertical { vend } else { hend };
            let mut chain: Vec<GridPoint<Rational>> = Vec::new();
            for (_, opts) in model.options(i, o, &arms) {
                let seg = opts
                    .into_iter()
                    .filter(|(_, blk)| blk.iter().all(|&j| pos[j] < pos[i]))
                    .map(|(seg, _)| seg)
                    .min_by_key(|seg| (seg.line - line).abs())
                    .expect("ranked seeds have an unblocked segment");
                let next = cur.clone() + rat(d) * step[i].clone();
                let (a, b) = (cur, next.clone());
                match o {
                    Long::Vertical => chain.extend([pt(&rat(seg.line), &a), pt(&rat(seg.line), &b)]),
                    Long::Horizontal => chain.extend([pt(&a, &rat(seg.line)), pt(&b, &rat(seg.line))]),
                }
                cur = next;
            }
            let pts: Vec<GridPoint<Rational>> = match o {
                Long::Vertical => chain.into_iter().rev().chain(seed).collect(),
                Long::Horizontal => seed.into_iter().chain(chain).collect(),
            };
            rpath(&pts)
        })
        .collect()
}
