use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::grid::Orientation;
use crate::Rep;

/// Every vertex owns a few closed integer intervals on one common line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalRepresentation {
    pub intervals: BTreeMap<String, Vec<(i64, i64)>>,
}

impl IntervalRepresentation {
    /// Largest number of intervals of one vertex.
    pub fn interval_number(&self) -> usize {
        self.intervals.values().map(Vec::len).max().unwrap_or(0)
    }

    /// Two vertices are adjacent when intervals of theirs share more than
    /// a single point.
    pub fn overlap_graph(&self) -> Graph {
        let mut g = Graph::new();
        let mut all = Vec::new();
        for (v, ivs) in &self.intervals {
            let id = g.add_vertex(v);
            all.extend(ivs.iter().map(|&(a, b)| (a, b, id)));
        }
        all.sort_unstable();
        let mut active: Vec<(i64, usize)> = Vec::new();
        for (a, b, id) in all {
            active.retain(|&(end, _)| end > a);
            for &(_, other) in &active {
                if other != id {
                    g.add_edge_idx(id, other);
                }
            }
            active.push((b, id));
        }
        g
    }
}

/// Lay all used grid-lines end to end on one line, separated by gaps, so
/// that each segment becomes an interval.
pub fn to_interval_representation(rep: &Rep) -> IntervalRepresentation {
    let mut windows: BTreeMap<(Orientation, i64), (i64, i64)> = BTreeMap::new();
    for (_, p) in rep.iter() {
        for s in p.segments() {
            let w = windows.entry((s.orientation, s.line)).or_insert((s.lo, s.hi));
            w.0 = w.0.min(s.lo);
            w.1 = w.1.max(s.hi);
        }
    }
    let mut offset = 0;
    let mut shift = BTreeMap::new();
    for (key, (lo, hi)) in windows {
        shift.insert(key, offset - lo);
        offset += hi - lo + 2;
    }
    let intervals = rep
        .iter()
        .map(|(v, p)| {
            let ivs = p
                .segments()
                .into_iter()
                .map(|s| {
                    let d = shift[&(s.orientation, s.line)];
                    (s.lo + d, s.hi + d)
                })
                .collect();
            (v.clone(), ivs)
        })
        .collect();
    IntervalRepresentation { intervals }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::path_from;
    use crate::rep::Representation;
    use crate::verify::intersection_graph;

    #[test]
    fn segments_become_intervals() {
        let rep: Representation<i64> = [
            ("a", path_from(&[(0, 0), (3, 0), (3, 3)]).unwrap()),
            ("b", path_from(&[(2, 0), (2, 2), (4, 2)]).unwrap()),
            ("c", path_from(&[(3, 1), (3, 5)]).unwrap()),
        ]
        .into_iter()
        .map(|(v, p)| (v.to_string(), p))
        .collect();
        let ir = to_interval_representation(&rep);
        assert_eq!(ir.intervals["a"].len(), 2);
        assert_eq!(ir.intervals["b"].len(), 2);
        assert_eq!(ir.intervals["c"].len(), 1);
        assert_eq!(ir.overlap_graph(), intersection_graph(&rep));
    }
}
