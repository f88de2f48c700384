use std::collections::{BTreeMap, BTreeSet};

use super::Graph;
use crate::error::{Error, Result};

/// Families of cliques; the cliques inside one family are pairwise
/// vertex-disjoint and together all families cover every edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliqueCover {
    pub families: Vec<Vec<BTreeSet<String>>>,
}

/// Structural hints that unlock a known good cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverHint {
    /// Vertices are labelled as by [`super::triangular_label`].
    TriangularGrid,
}

impl CliqueCover {
    /// Number of families.
    pub fn global_number(&self) -> usize {
        self.families.len()
    }

    /// Number of families containing `v`.
    pub fn membership(&self, v: &str) -> usize {
        self.families.iter().filter(|f| f.iter().any(|c| c.contains(v))).count()
    }

    /// Largest number of families sharing one vertex.
    pub fn local_number(&self) -> usize {
        let mut count: BTreeMap<&str, usize> = BTreeMap::new();
        for f in &self.families {
            let vs: BTreeSet<&str> = f.iter().flatten().map(String::as_str).collect();
            for v in vs {
                *count.entry(v).or_default() += 1;
            }
        }
        count.values().copied().max().unwrap_or(0)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut covered = BTreeSet::new();
        for (fi, fam) in self.families.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for clique in fam {
                let mut idx = Vec::with_capacity(clique.len());
                for v in clique {
                    let i = g.index_of(v).ok_or_else(|| Error::InvalidCover(format!("unknown vertex {v}")))?;
                    if !seen.insert(i) {
                        return Err(Error::InvalidCover(format!("vertex {v} twice in family {fi}")));
                    }
                    idx.push(i);
                }
                if !g.is_clique(&idx) {
                    return Err(Error::InvalidCover(format!("{clique:?} is not a clique")));
                }
                for (a, &i) in idx.iter().enumerate() {
                    for &j in &idx[a + 1..] {
                        covered.insert((i.min(j), i.max(j)));
                    }
                }
            }
        }
        if let Some(&(i, j)) = g.edges().iter().find(|e| !covered.contains(e)) {
            return Err(Error::InvalidCover(format!("edge {}-{} is not covered", g.label(i), g.label(j))));
        }
        Ok(())
    }

    /// Text form: one family per line, cliques separated by `|`.
    pub fn parse(text: &str) -> Result<CliqueCover> {
        let mut families = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fam = line
                .split('|')
                .map(|c| c.split_whitespace().map(str::to_string).collect::<BTreeSet<_>>())
                .filter(|c| !c.is_empty())
                .collect();
            families.push(fam);
        }
        Ok(CliqueCover { families })
    }

    pub fn format(&self) -> String {
        let mut out = String::new();
        for fam in &self.families {
            let cliques: Vec<String> = fam.iter().map(|c| c.iter().cloned().collect::<Vec<_>>().join(" ")).collect();
            out.push_str(&cliques.join(" | "));
            out.push('\n');
        }
        out
    }

    fn from_indices(g: &Graph, families: Vec<Vec<Vec<usize>>>) -> CliqueCover {
        let families = families
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(|f| {
                f.into_iter()
                    .filter(|c| !c.is_empty())
                    .map(|c| c.into_iter().map(|i| g.label(i).to_string()).collect())
                    .collect()
            })
            .collect();
        CliqueCover { families }
    }
}

/// Put cliques into families first-fit so that each family stays disjoint.
fn pack_families(cliques: Vec<Vec<usize>>) -> Vec<Vec<Vec<usize>>> {
    let mut families: Vec<(BTreeSet<usize>, Vec<Vec<usize>>)> = Vec::new();
    for c in cliques {
        match families.iter_mut().find(|(used, _)| c.iter().all(|v| !used.contains(v))) {
            Some((used, fam)) => {
                used.extend(c.iter().copied());
                fam.push(c);
            }
            None => families.push((c.iter().copied().collect(), vec![c])),
        }
    }
    families.into_iter().map(|(_, f)| f).collect()
}

const EXACT_LIMIT: usize = 10;
const NODE_LIMIT: usize = 2_000_000;

/// A cover with few families. Exact minimum for graphs on at most ten
/// vertices, greedy family extraction otherwise; the triangular-grid hint
/// yields the three families of upward triangles.
pub fn clique_cover_global(g: &Graph, hint: Option<CoverHint>) -> CliqueCover {
    if hint == Some(CoverHint::TriangularGrid) {
        if let Some(c) = triangular_cover(g) {
            return c;
        }
    }
    let greedy = greedy_global(g);
    if g.vertex_count() > EXACT_LIMIT {
        return CliqueCover::from_indices(g, greedy);
    }
    for k in 0..greedy.len() {
        let mut search = GlobalSearch::new(g, k);
        if search.run() == Some(true) {
            return CliqueCover::from_indices(g, search.families);
        }
    }
    CliqueCover::from_indices(g, greedy)
}

fn parse_triangular(label: &str) -> Option<(i64, i64)> {
    let (a, b) = label.strip_prefix('t')?.split_once('_')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

fn triangular_cover(g: &Graph) -> Option<CliqueCover> {
    let coords: Vec<(i64, i64)> = g.labels().iter().map(|l| parse_triangular(l)).collect::<Option<_>>()?;
    let at: BTreeMap<(i64, i64), usize> = coords.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut families = vec![Vec::new(), Vec::new(), Vec::new()];
    let corners: BTreeSet<(i64, i64)> = coords.iter().flat_map(|&(a, b)| [(a, b), (a, b - 1), (a - 1, b)]).collect();
    for (a, b) in corners {
        let clique: Vec<usize> = [(a, b), (a, b + 1), (a + 1, b)].iter().filter_map(|p| at.get(p).copied()).collect();
        if clique.len() >= 2 && g.is_clique(&clique) {
            families[(a - b).rem_euclid(3) as usize].push(clique);
        }
    }
    let cover = CliqueCover::from_indices(g, families);
    cover.validate(g).ok().map(|_| cover)
}

fn greedy_global(g: &Graph) -> Vec<Vec<Vec<usize>>> {
    let mut uncovered: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    let mut families = Vec::new();
    while !uncovered.is_empty() {
        let mut used = vec![false; g.vertex_count()];
        let mut fam = Vec::new();
        for (u, v) in uncovered.clone() {
            if used[u] || used[v] || !uncovered.contains(&(u, v)) {
                continue;
            }
            let clique = grow_clique(g, vec![u, v], &uncovered, |w| !used[w]);
            for &x in &clique {
                used[x] = true;
            }
            mark_covered(&clique, &mut uncovered);
            fam.push(clique);
        }
        families.push(fam);
    }
    families
}

/// Extend `clique` by vertices that are adjacent to all members, accepted by
/// `allowed`, and cover at least one uncovered edge; best gain first.
fn grow_clique(
    g: &Graph,
    mut clique: Vec<usize>,
    uncovered: &BTreeSet<(usize, usize)>,
    allowed: impl Fn(usize) -> bool,
) -> Vec<usize> {
    loop {
        let best = (0..g.vertex_count())
            .filter(|&w| !clique.contains(&w) && allowed(w) && clique.iter().all(|&c| g.adjacent(c, w)))
            .map(|w| (clique.iter().filter(|&&c| uncovered.contains(&(c.min(w), c.max(w)))).count(), w))
            .filter(|&(gain, _)| gain > 0)
            .max_by_key(|&(gain, w)| (gain, std::cmp::Reverse(w)));
        match best {
            Some((_, w)) => clique.push(w),
            None => break,
        }
    }
    clique.sort_unstable();
    clique
}

fn mark_covered(clique: &[usize], uncovered: &mut BTreeSet<(usize, usize)>) {
    for (a, &i) in clique.iter().enumerate() {
        for &j in &clique[a + 1..] {
            uncovered.remove(&(i.min(j), i.max(j)));
        }
    }
}

/// Backtracking search for a cover with exactly `k` families. Every partial
/// clique is grown only by the endpoints of the edge being covered, so any
/// optimal cover restricted to the covered edges stays reachable.
struct GlobalSearch<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    families: Vec<Vec<Vec<usize>>>,
    owner: Vec<Vec<Option<usize>>>,
    nodes: usize,
}

impl<'a> GlobalSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        GlobalSearch {
            g,
            edges: g.edges(),
            families: vec![Vec::new(); k],
            owner: vec![vec![None; g.vertex_count()]; k],
            nodes: 0,
        }
    }

    fn covered(&self, u: usize, v: usize) -> bool {
        self.owner.iter().any(|o| o[u].is_some() && o[u] == o[v])
    }

    /// `Some(true)` when a cover exists, `Some(false)` when none does,
    /// `None` when the node limit was hit.
    fn run(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return None;
        }
        let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| !self.covered(u, v)) else {
            return Some(true);
        };
        let mut exhausted = true;
        let mut tried_empty = false;
        for f in 0..self.families.len() {
            if self.families[f].is_empty() {
                if tried_empty {
                    continue;
                }
                tried_empty = true;
            }
            let snapshot = (self.families[f].clone(), self.owner[f].clone());
            let ok = match (self.owner[f][u], self.owner[f][v]) {
                (None, None) => {
                    self.owner[f][u] = Some(self.families[f].len());
                    self.owner[f][v] = Some(self.families[f].len());
                    self.families[f].push(vec![u, v]);
                    true
                }
                (Some(c), None) | (None, Some(c)) => {
                    let w = if self.owner[f][u].is_some() { v } else { u };
                    if self.families[f][c].iter().all(|&x| self.g.adjacent(x, w)) {
                        self.families[f][c].push(w);
                        self.owner[f][w] = Some(c);
                        true
                    } else {
                        false
                    }
                }
                (Some(c1), Some(c2)) => {
                    let merged: Vec<usize> =
                        self.families[f][c1].iter().chain(&self.families[f][c2]).copied().collect();
                    if self.g.is_clique(&merged) {
                        for &x in &self.families[f][c2] {
                            self.owner[f][x] = Some(c1);
                        }
                        let moved = std::mem::take(&mut self.families[f][c2]);
                        self.families[f][c1].extend(moved);
                        true
                    } else {
                        false
                    }
                }
            };
            if ok {
                match self.run() {
                    Some(true) => return Some(true),
                    None => exhausted = false,
                    Some(false) => {}
                }
            }
            self.families[f] = snapshot.0;
            self.owner[f] = snapshot.1;
            if !exhausted {
                return None;
            }
        }
        Some(false)
    }
}

/// A cover keeping the number of cliques per vertex small. Small graphs
/// get an exhaustive search over maximal cliques; larger ones grow cliques
/// greedily around uncovered edges, favouring lightly used vertices.
pub fn clique_cover_local(g: &Graph) -> CliqueCover {
    if g.vertex_count() <= 12 {
        let maximal = maximal_cliques(g);
        for t in 1..=g.max_degree().max(1) {
            let mut load = vec![0usize; g.vertex_count()];
            let mut chosen = Vec::new();
            let mut nodes = 0;
            let edges = g.edges();
            match local_search(&edges, &maximal, t, &mut load, &mut chosen, &mut nodes) {
                Some(true) => return CliqueCover::from_indices(g, pack_families(chosen)),
                Some(false) => continue,
                None => break,
            }
        }
    }
    let mut uncovered: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    let mut load = vec![0usize; g.vertex_count()];
    let mut cliques = Vec::new();
    while let Some(&(u, v)) = uncovered.iter().min_by_key(|&&(a, b)| load[a] + load[b]) {
        let clique = grow_clique(g, vec![u, v], &uncovered, |_| true);
        for &x in &clique {
            load[x] += 1;
        }
        mark_covered(&clique, &mut uncovered);
        cliques.push(clique);
    }
    CliqueCover::from_indices(g, pack_families(cliques))
}

fn local_search(
    edges: &[(usize, usize)],
    maximal: &[Vec<usize>],
    t: usize,
    load: &mut Vec<usize>,
    chosen: &mut Vec<Vec<usize>>,
    nodes: &mut usize,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > NODE_LIMIT {
        return None;
    }
    let covered =
        |u: usize, v: usize, chosen: &Vec<Vec<usize>>| chosen.iter().any(|c| c.contains(&u) && c.contains(&v));
    let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !covered(u, v, chosen)) else {
        return Some(true);
    };
    for c in maximal.iter().filter(|c| c.contains(&u) && c.contains(&v)) {
        if c.iter().any(|&x| load[x] >= t) {
            continue;
        }
        for &x in c {
            load[x] += 1;
        }
        chosen.push(c.clone());
        match local_search(edges, maximal, t, load, chosen, nodes) {
            Some(false) => {}
            other => return other,
        }
        chosen.pop();
        for &x in c {
            load[x] -= 1;
        }
    }
    Some(false)
}

/// All maximal cliques with at least two vertices (Bron–Kerbosch with pivoting).
fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn bk(g: &Graph, r: &mut Vec<usize>, p: BTreeSet<usize>, mut x: BTreeSet<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            if r.len() >= 2 {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&w| g.adjacent(u, w)).count()).copied();
        let mut p = p;
        let cands: Vec<usize> = p.iter().filter(|&&v| pivot.is_none_or(|u| !g.adjacent(u, v))).copied().collect();
        for v in cands {
            let nb = g.neighbors(v);
            r.push(v);
            bk(g, r, p.intersection(nb).copied().collect(), x.intersection(nb).copied().collect(), out);
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    bk(g, &mut Vec::new(), (0..g.vertex_count()).collect(), BTreeSet::new(), &mut out);
    out.sort();
    out
}

/// Cover of the line graph of `g` by the stars of `g`'s vertices, using
/// the labels produced by [`super::line_graph`].
pub fn star_cover(g: &Graph) -> CliqueCover {
    let edges = g.edges();
    let name = |&(i, j): &(usize, usize)| format!("{}-{}", g.label(i), g.label(j));
    let mut stars: Vec<BTreeSet<String>> = Vec::new();
    for v in 0..g.vertex_count() {
        let star: BTreeSet<String> = edges.iter().filter(|e| e.0 == v || e.1 == v).map(name).collect();
        if !star.is_empty() {
            stars.push(star);
        }
    }
    let mut families: Vec<Vec<BTreeSet<String>>> = Vec::new();
    for s in stars {
        match families.iter_mut().find(|f| f.iter().all(|c| c.is_disjoint(&s))) {
            Some(f) => f.push(s),
            None => families.push(vec![s]),
        }
    }
    CliqueCover { families }
}
