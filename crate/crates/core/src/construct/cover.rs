use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::graph::{edge_coloring, CliqueCover, EdgeColoring, Graph};
use crate::grid::{normalize_path, GridPoint};
use crate::rep::Representation;
use crate::Rep;

/// Staircases with `k - 1` bends from a cover with `k` families.
///
/// The i-th segment of every staircase lies on the grid-line reserved for
/// the vertex's clique in family i. Horizontal and vertical families take
/// alternate turns and the lines of family i all lie below those of family
/// i + 2, so segments on a shared line always overlap around the gap
/// between the neighbouring families.
pub fn construct_from_global_cover(g: &Graph, cover: &CliqueCover) -> Result<Rep> {
    cover.validate(g)?;
    let mut families = cover.families.clone();
    if families.is_empty() {
        families.push(Vec::new());
    }
    let k = families.len();
    let mut line_of: Vec<BTreeMap<&str, i64>> = Vec::with_capacity(k);
    let mut width = 1i64;
    for fam in &families {
        let mut lines = BTreeMap::new();
        for (j, clique) in fam.iter().enumerate() {
            for v in clique {
                lines.insert(v.as_str(), j as i64);
            }
        }
        let mut next = fam.len() as i64;
        for v in g.labels() {
            lines.entry(v.as_str()).or_insert_with(|| {
                next += 1;
                next - 1
            });
        }
        width = width.max(next);
        line_of.push(lines);
    }
    let stride = width + 1;
    let line = |i: usize, v: &str| i as i64 * stride + line_of[i][v];
    let start = 0;
    let end = k as i64 * stride;
    let mut rep = Representation::new();
    for v in g.labels() {
        let mut pts = vec![GridPoint::new(start, line(0, v))];
        for i in 1..k {
            let p = if i % 2 == 1 {
                GridPoint::new(line(i, v), line(i - 1, v))
            } else {
                GridPoint::new(line(i - 1, v), line(i, v))
            };
            pts.push(p);
        }
        let last = line(k - 1, v);
        pts.push(if (k - 1).is_multiple_of(2) { GridPoint::new(end, last) } else { GridPoint::new(last, end) });
        rep.insert(v.clone(), normalize_path(&pts)?);
    }
    Ok(rep)
}

/// Snakes with at most `2ℓ - 2` bends, where ℓ is the largest number of
/// cliques of the cover containing one vertex.
///
/// Every clique owns a vertical lane and all vertical pieces cross the band
/// between heights -1 and 1. Each horizontal connector gets a height of its
/// own, above the band after an upward piece and below it otherwise.
pub fn construct_from_local_cover(g: &Graph, cover: &CliqueCover) -> Result<Rep> {
    cover.validate(g)?;
    let mut cliques: Vec<&BTreeSet<String>> = cover.families.iter().flatten().filter(|c| !c.is_empty()).collect();
    let singles: Vec<BTreeSet<String>> = g
        .labels()
        .iter()
        .filter(|v| !cliques.iter().any(|c| c.contains(*v)))
        .map(|v| BTreeSet::from([v.clone()]))
        .collect();
    cliques.extend(singles.iter());
    let (mut top, mut bottom) = (1i64, -1i64);
    let mut rep = Representation::new();
    for v in g.labels() {
        let lanes: Vec<i64> = (0..cliques.len() as i64).filter(|&j| cliques[j as usize].contains(v)).collect();
        let mut pts = vec![GridPoint::new(lanes[0], -1)];
        for (i, &lane) in lanes.iter().enumerate() {
            let up = i % 2 == 0;
            let turn = if i + 1 == lanes.len() {
                if up {
                    1
                } else {
                    -1
                }
            } else if up {
                top += 1;
                top
            } else {
                bottom -= 1;
                bottom
            };
            pts.push(GridPoint::new(lane, turn));
            if let Some(&next) = lanes.get(i + 1) {
                pts.push(GridPoint::new(next, turn));
            }
        }
        rep.insert(v.clone(), normalize_path(&pts)?);
    }
    Ok(rep)
}

/// The colour classes of an edge colouring as a cover by matchings.
pub fn cover_from_coloring(coloring: &EdgeColoring) -> CliqueCover {
    let families = coloring
        .classes()
        .into_iter()
        .map(|class| class.into_iter().map(|(a, b)| BTreeSet::from([a, b])).collect())
        .collect();
    CliqueCover { families }
}

/// Staircases with at most `χ' - 1 ≤ Δ` bends, one family per colour.
pub fn construct_edge_coloring(g: &Graph) -> Result<Rep> {
    construct_from_global_cover(g, &cover_from_coloring(&edge_coloring(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        clique_cover_global, clique_cover_local, gen_complete, gen_complete_bipartite, gen_triangular_grid, line_graph,
        star_cover, CoverHint,
    };
    use crate::verify::verify_representation;

    fn check(rep: &Rep, g: &Graph, budget: usize) {
        let report = verify_representation(rep, g, budget).unwrap();
        assert!(report.ok, "{}", report.summary());
    }

    #[test]
    fn one_family_gives_intervals() {
        let g = gen_complete(3);
        let cover = CliqueCover { families: vec![vec![g.labels().iter().cloned().collect()]] };
        let rep = construct_from_global_cover(&g, &cover).unwrap();
        check(&rep, &g, 0);
    }

    #[test]
    fn triangular_patch_uses_two_bends() {
        let g = gen_triangular_grid(3, 4, None);
        let cover = clique_cover_global(&g, Some(CoverHint::TriangularGrid));
        assert_eq!(cover.global_number(), 3);
        let rep = construct_from_global_cover(&g, &cover).unwrap();
        check(&rep, &g, 2);
        assert!(rep.iter().all(|(_, p)| p.bends() == 2));
    }

    #[test]
    fn bipartite_line_graph_is_single_bend() {
        let h = gen_complete_bipartite(3, 4);
        let g = line_graph(&h);
        let cover = star_cover(&h);
        assert_eq!(cover.global_number(), 2);
        check(&construct_from_global_cover(&g, &cover).unwrap(), &g, 1);
    }

    #[test]
    fn local_cover_snakes() {
        let g = line_graph(&gen_complete(4));
        let cover = clique_cover_local(&g);
        assert_eq!(cover.local_number(), 2);
        check(&construct_from_local_cover(&g, &cover).unwrap(), &g, 2);
    }

    #[test]
    fn k4_by_matchings_both_ways() {
        let g = gen_complete(4);
        let col = edge_coloring(&g);
        let cover = cover_from_coloring(&col);
        let staircase = construct_from_global_cover(&g, &cover).unwrap();
        check(&staircase, &g, col.color_count() - 1);
        let snakes = construct_from_local_cover(&g, &cover).unwrap();
        check(&snakes, &g, 2 * cover.local_number() - 2);
        assert!(snakes.max_bends() <= 4);
    }

    #[test]
    fn isolated_vertices_get_straight_paths() {
        let mut g = gen_complete(2);
        g.add_vertex("lonely");
        let cover = clique_cover_local(&g);
        let rep = construct_from_local_cover(&g, &cover).unwrap();
        check(&rep, &g, 0);
        check(&construct_from_global_cover(&g, &cover).unwrap(), &g, 0);
    }

    #[test]
    fn invalid_cover_is_rejected() {
        let g = gen_complete(3);
        let cover = CliqueCover { families: vec![vec![BTreeSet::from(["v0".to_string(), "v1".to_string()])]] };
        assert!(construct_from_global_cover(&g, &cover).is_err());
        assert!(construct_from_local_cover(&g, &cover).is_err());
    }
}
