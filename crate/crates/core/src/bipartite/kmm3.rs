use std::collections::{BTreeMap, BTreeSet};

use super::pretzel::blowup_pretzel;
use crate::error::{Error, Result};
use crate::grid::{normalize_path, GridPoint, Orientation};
use crate::{Path, Rep};

/// Number of `B` vertices placed by [`construct_kmm3`].
pub fn kmm3_n(m: usize) -> usize {
    let m = m as i64;
    let n = if m % 2 == 0 { m * m * m / 4 - m * m / 2 - m + 4 } else { m * (m - 1) * (m - 3) / 4 };
    n.max(0) as usize
}

/// A unit grid-edge: orientation, line and lower end along the line.
type UnitEdge = (Orientation, i64, i64);

struct Staircase {
    path: Path,
    edges: BTreeSet<UnitEdge>,
}

/// `(m-1)`-bend representation of `K_{m,n}` with `n` from [`kmm3_n`].
pub fn construct_kmm3(m: usize) -> Result<Rep> {
    construct_kmm3_with_n(m, kmm3_n(m))
}

/// Largest `n` reachable by the staircase packing of [`construct_kmm3_with_n`].
pub fn kmm3_capacity(m: usize) -> Result<usize> {
    Ok(pack(&staircases(m)?).len())
}

/// `A` is the blown-up pretzel with `j = ⌊m/2⌋`. Every `B` vertex is a
/// staircase of `m` unit segments, each on a grid-edge used by exactly one
/// `A` path and all for distinct paths. Pairwise edge-disjoint staircases
/// are chosen greedily, least conflicting first.
pub fn construct_kmm3_with_n(m: usize, n: usize) -> Result<Rep> {
    let bp = blowup_pretzel(m, (m / 2).max(1))?;
    let chosen = pack(&staircases_in(&bp.paths, m));
    if chosen.len() < n {
        return Err(Error::TooLarge(format!("only {} staircases fit for m = {m}, asked for {n}", chosen.len())));
    }
    let mut rep = bp.paths;
    for (i, s) in chosen.into_iter().take(n).enumerate() {
        rep.insert(format!("b{}", i + 1), s.path);
    }
    Ok(rep)
}

fn staircases(m: usize) -> Result<Vec<Staircase>> {
    Ok(staircases_in(&blowup_pretzel(m, (m / 2).max(1))?.paths, m))
}

fn staircases_in(a: &Rep, m: usize) -> Vec<Staircase> {
    let mut owner: BTreeMap<UnitEdge, Vec<&str>> = BTreeMap::new();
    for (v, p) in a.iter() {
        for s in p.segments() {
            for t in s.lo..s.hi {
                owner.entry((s.orientation, s.line, t)).or_default().push(v);
            }
        }
    }
    let corners: Vec<_> = a.iter().flat_map(|(_, p)| p.corners()).collect();
    let (x0, x1) = (corners.iter().map(|c| c.x).min().unwrap() - 1, corners.iter().map(|c| c.x).max().unwrap() + 1);
    let (y0, y1) = (corners.iter().map(|c| c.y).min().unwrap() - 1, corners.iter().map(|c| c.y).max().unwrap() + 1);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for sx in x0..=x1 {
        for sy in y0..=y1 {
            for dx in [1, -1] {
                for first in [Orientation::Horizontal, Orientation::Vertical] {
                    let Some((pts, edges)) = walk(&owner, (sx, sy), dx, first, m) else { continue };
                    if seen.insert(edges.clone()) {
                        let path = normalize_path(&pts).expect("staircase steps are rectilinear");
                        out.push(Staircase { path, edges });
                    }
                }
            }
        }
    }
    out
}

fn walk(
    owner: &BTreeMap<UnitEdge, Vec<&str>>,
    (mut x, mut y): (i64, i64),
    dx: i64,
    first: Orientation,
    m: usize,
) -> Option<(Vec<GridPoint<i64>>, BTreeSet<UnitEdge>)> {
    let mut pts = vec![GridPoint::new(x, y)];
    let mut edges = BTreeSet::new();
    let mut hit = BTreeSet::new();
    let mut o = first;
    for _ in 0..m {
        let key = match o {
            Orientation::Horizontal => {
                let e = (o, y, x.min(x + dx));
                x += dx;
                e
            }
            Orientation::Vertical => {
                let e = (o, x, y);
                y += 1;
                e
            }
        };
        match owner.get(&key).map(Vec::as_slice) {
            Some([v]) if hit.insert(*v) => {}
            _ => return None,
        }
        edges.insert(key);
        pts.push(GridPoint::new(x, y));
        o = o.flip();
    }
    Some((pts, edges))
}

/// Greedy independent set in the conflict graph of shared grid-edges,
/// repeatedly taking a staircase with the fewest live conflicts.
fn pack(cands: &[Staircase]) -> Vec<Staircase> {
    let n = cands.len();
    let conflicts: Vec<Vec<usize>> =
        (0..n).map(|i| (0..n).filter(|&j| j != i && !cands[i].edges.is_disjoint(&cands[j].edges)).collect()).collect();
    let mut alive = vec![true; n];
    let mut chosen = Vec::new();
    loop {
        let best =
            (0..n).filter(|&i| alive[i]).min_by_key(|&i| (conflicts[i].iter().filter(|&&j| alive[j]).count(), i));
        let Some(i) = best else { break };
        alive[i] = false;
        for &j in &conflicts[i] {
            alive[j] = false;
        }
        chosen.push(i);
    }
    chosen.sort_unstable();
    chosen.into_iter().map(|i| Staircase { path: cands[i].path.clone(), edges: cands[i].edges.clone() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_complete_bipartite;
    use crate::verify::verify_representation;

    #[test]
    fn closed_form() {
        assert_eq!(kmm3_n(4), 8);
        assert_eq!(kmm3_n(5), 10);
        assert_eq!(kmm3_n(6), 34);
        assert_eq!(kmm3_n(7), 42);
    }

    #[test]
    fn verified_for_small_m() {
        for m in 4..=6 {
            let rep = construct_kmm3(m).unwrap();
            let report = verify_representation(&rep, &gen_complete_bipartite(m, kmm3_n(m)), m - 1).unwrap();
            assert!(report.ok, "m = {m}: {}", report.summary());
        }
    }

    #[test]
    fn packing_beyond_the_formula() {
        assert_eq!(kmm3_capacity(4).unwrap(), 16);
        let rep = construct_kmm3_with_n(4, 12).unwrap();
        assert!(verify_representation(&rep, &gen_complete_bipartite(4, 12), 3).unwrap().ok);
        assert!(construct_kmm3_with_n(4, 17).is_err());
    }

    #[test]
    fn rejects_small_m() {
        assert!(matches!(construct_kmm3(2), Err(Error::MTooSmall { .. })));
    }
}
