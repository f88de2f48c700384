//! Intersection graphs of representations and the checks run against them.

use std::collections::{BTreeMap, BTreeSet};

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{GridPath, GridPoint, Orientation};
use crate::rep::Representation;

/// Extent along a grid-line and the owning vertex.
type Piece<C> = (C, C, usize);

/// Outcome of comparing a representation with a target graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub budget: usize,
    pub max_bends: usize,
    pub missing_edges: BTreeSet<(String, String)>,
    pub extra_edges: BTreeSet<(String, String)>,
    pub per_vertex_bends: BTreeMap<String, usize>,
}

impl VerifyReport {
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: max bends {} (budget {}), {} missing edges, {} extra edges",
            if self.ok { "ok" } else { "FAILED" },
            self.max_bends,
            self.budget,
            self.missing_edges.len(),
            self.extra_edges.len()
        );
        for (a, b) in self.missing_edges.iter().take(5) {
            out.push_str(&format!("\n  missing {a}-{b}"));
        }
        for (a, b) in self.extra_edges.iter().take(5) {
            out.push_str(&format!("\n  extra {a}-{b}"));
        }
        out
    }
}

/// Shape of a single-bend representation of an induced 4-cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FourCycleClass {
    Frame,
    TruePie,
    FalsePie,
    Other,
}

/// Graph on the representation's vertices; two vertices are adjacent when
/// their paths share a grid-edge. Segments are bucketed by grid-line and
/// swept, so only collinear candidates are compared.
pub fn intersection_graph<C: Coord>(rep: &Representation<C>) -> Graph {
    let mut g = Graph::new();
    let mut lines: BTreeMap<(Orientation, C), Vec<Piece<C>>> = BTreeMap::new();
    for (label, path) in rep.iter() {
        let id = g.add_vertex(label);
        for s in path.segments() {
            lines.entry((s.orientation, s.line.clone())).or_default().push((s.lo, s.hi, id));
        }
    }
    for mut segs in lines.into_values() {
        segs.sort();
        let mut active: Vec<(C, usize)> = Vec::new();
        for (lo, hi, id) in segs {
            active.retain(|(end, _)| *end > lo);
            for &(_, other) in &active {
                if other != id {
                    g.add_edge_idx(id, other);
                }
            }
            active.push((hi, id));
        }
    }
    g
}

/// Compare `intersection_graph(rep)` with `target` under a bend budget.
pub fn verify_representation<C: Coord>(rep: &Representation<C>, target: &Graph, budget: usize) -> Result<VerifyReport> {
    let rep_vertices: BTreeSet<&str> = rep.vertices().map(String::as_str).collect();
    let graph_vertices: BTreeSet<&str> = target.labels().iter().map(String::as_str).collect();
    if rep_vertices != graph_vertices {
        return Err(Error::VertexMismatch {
            only_rep: rep_vertices.difference(&graph_vertices).map(|s| s.to_string()).collect(),
            only_graph: graph_vertices.difference(&rep_vertices).map(|s| s.to_string()).collect(),
        });
    }
    let found = intersection_graph(rep).edge_set();
    let wanted = target.edge_set();
    let per_vertex_bends: BTreeMap<String, usize> = rep.iter().map(|(v, p)| (v.clone(), p.bends())).collect();
    let max_bends = per_vertex_bends.values().copied().max().unwrap_or(0);
    let missing_edges: BTreeSet<_> = wanted.difference(&found).cloned().collect();
    let extra_edges: BTreeSet<_> = found.difference(&wanted).cloned().collect();
    let ok = missing_edges.is_empty() && extra_edges.is_empty() && max_bends <= budget;
    Ok(VerifyReport { ok, budget, max_bends, missing_edges, extra_edges, per_vertex_bends })
}

/// Classify four single-bend paths that induce a 4-cycle.
pub fn classify_4cycle<C: Coord>(rep: &Representation<C>, cycle: [&str; 4]) -> Result<FourCycleClass> {
    let not_cycle = || Error::NotInducedFourCycle(cycle.iter().map(|s| s.to_string()).collect());
    let paths: Vec<&GridPath<C>> = cycle.iter().map(|v| rep.get(v).ok_or_else(not_cycle)).collect::<Result<_>>()?;
    let distinct: BTreeSet<&str> = cycle.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(not_cycle());
    }
    let sub = intersection_graph(&rep.restrict(cycle.iter().copied()));
    let edges = sub.edge_set();
    let cyclic = edges.len() == 4 && (0..4).all(|i| sub.degree(i) == 2);
    if !cyclic {
        return Err(not_cycle());
    }
    if paths.iter().any(|p| p.bends() > 1) {
        return Ok(FourCycleClass::Other);
    }
    let bend_points: Vec<Option<&GridPoint<C>>> =
        paths.iter().map(|p| if p.bends() == 1 { Some(&p.corners()[1]) } else { None }).collect();
    if let Some(center) = common_point(&paths) {
        let bending = bend_points.iter().filter(|b| *b == &Some(&center)).count();
        let straight = paths.iter().filter(|p| passes_straight(p, &center)).count();
        if bending == 4 {
            return Ok(FourCycleClass::TruePie);
        }
        if bending == 2 && straight == 2 {
            return Ok(FourCycleClass::FalsePie);
        }
        return Ok(FourCycleClass::Other);
    }
    let corners: Option<BTreeSet<&GridPoint<C>>> = bend_points.iter().copied().collect();
    if let Some(corners) = corners {
        let xs: BTreeSet<&C> = corners.iter().map(|p| &p.x).collect();
        let ys: BTreeSet<&C> = corners.iter().map(|p| &p.y).collect();
        if corners.len() == 4 && xs.len() == 2 && ys.len() == 2 {
            return Ok(FourCycleClass::Frame);
        }
    }
    Ok(FourCycleClass::Other)
}

fn on_path<C: Coord>(p: &GridPath<C>, q: &GridPoint<C>) -> bool {
    p.segments().iter().any(|s| match s.orientation {
        Orientation::Horizontal => s.line == q.y && s.spans(&q.x),
        Orientation::Vertical => s.line == q.x && s.spans(&q.y),
    })
}

fn common_point<C: Coord>(paths: &[&GridPath<C>]) -> Option<GridPoint<C>> {
    let candidates: BTreeSet<GridPoint<C>> =
        paths.iter().flat_map(|p| p.corners().iter().cloned()).chain(pairwise_meets(paths)).collect();
    candidates.into_iter().find(|c| paths.iter().all(|p| on_path(p, c)))
}

fn pairwise_meets<C: Coord>(paths: &[&GridPath<C>]) -> Vec<GridPoint<C>> {
    let segs: Vec<_> = paths.iter().flat_map(|p| p.segments()).collect();
    let mut out = Vec::new();
    for (i, a) in segs.iter().enumerate() {
        for b in &segs[i + 1..] {
            if let Some(m) = a.meets(b) {
                out.push(m);
            }
        }
    }
    out
}

fn passes_straight<C: Coord>(p: &GridPath<C>, q: &GridPoint<C>) -> bool {
    p.segments().iter().any(|s| match s.orientation {
        Orientation::Horizontal => s.line == q.y && s.spans_strictly(&q.x),
        Orientation::Vertical => s.line == q.x && s.spans_strictly(&q.y),
    })
}
