use std::collections::{BTreeMap, BTreeSet};

use super::Graph;
use crate::error::{Error, Result};

/// A vertex sequence in which every vertex has at most `d` earlier neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub order: Vec<String>,
    pub d: usize,
}

impl DegeneracyOrder {
    /// Check that the order is a permutation of the vertices and that no
    /// vertex has more than `d` earlier neighbours.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let pos = self.positions(g)?;
        for (i, &p) in pos.iter().enumerate() {
            let back = g.neighbors(i).iter().filter(|&&j| pos[j] < p).count();
            if back > self.d {
                return Err(Error::InvalidOrder(format!("{} has {back} earlier neighbours", g.label(i))));
            }
        }
        Ok(())
    }

    fn positions(&self, g: &Graph) -> Result<Vec<usize>> {
        if self.order.len() != g.vertex_count() {
            return Err(Error::InvalidOrder(format!(
                "{} vertices listed, graph has {}",
                self.order.len(),
                g.vertex_count()
            )));
        }
        let mut pos = vec![usize::MAX; g.vertex_count()];
        for (p, v) in self.order.iter().enumerate() {
            let i = g.index_of(v).ok_or_else(|| Error::InvalidOrder(format!("unknown vertex {v}")))?;
            if pos[i] != usize::MAX {
                return Err(Error::InvalidOrder(format!("{v} listed twice")));
            }
            pos[i] = p;
        }
        Ok(pos)
    }
}

/// Peel a minimum-degree vertex until the graph is empty and return the
/// reversed peeling order; `d` is the degeneracy.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let mut removed = vec![false; n];
    let mut peeled = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&i| !removed[i]).min_by_key(|&i| (deg[i], i)).expect("vertices remain");
        d = d.max(deg[v]);
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
        peeled.push(g.label(v).to_string());
    }
    peeled.reverse();
    DegeneracyOrder { order: peeled, d }
}

/// Recipe for a k-tree: a base clique followed by vertices attached to
/// k-cliques of the graph built so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildSequence {
    pub k: usize,
    pub base: Vec<String>,
    pub steps: Vec<(String, Vec<String>)>,
}

impl BuildSequence {
    /// All vertices in insertion order.
    pub fn vertices(&self) -> Vec<String> {
        self.base.iter().cloned().chain(self.steps.iter().map(|(v, _)| v.clone())).collect()
    }

    /// Check the k-tree rules and that the k-tree contains every edge of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSequence(m));
        if self.k == 0 {
            return bad("width must be positive".into());
        }
        if self.base.len() != self.k + 1 && !(self.steps.is_empty() && self.base.len() <= self.k + 1) {
            return bad(format!("base has {} vertices, expected {}", self.base.len(), self.k + 1));
        }
        let mut present = BTreeSet::new();
        let mut edges: BTreeSet<(String, String)> = BTreeSet::new();
        for v in &self.base {
            if !present.insert(v.clone()) {
                return bad(format!("{v} repeated in base"));
            }
        }
        for (i, u) in self.base.iter().enumerate() {
            for w in &self.base[i + 1..] {
                edges.insert(super::ordered_pair(u, w));
            }
        }
        for (v, clique) in &self.steps {
            if present.contains(v) {
                return bad(format!("{v} inserted twice"));
            }
            let distinct: BTreeSet<&String> = clique.iter().collect();
            if clique.len() != self.k || distinct.len() != self.k {
                return bad(format!("{v} attaches to {} vertices, expected {}", distinct.len(), self.k));
            }
            for (i, u) in clique.iter().enumerate() {
                if !present.contains(u) {
                    return bad(format!("{v} attaches to {u}, which is not present yet"));
                }
                for w in &clique[i + 1..] {
                    if !edges.contains(&super::ordered_pair(u, w)) {
                        return bad(format!("attachment of {v} is not a clique ({u}, {w})"));
                    }
                }
            }
            for u in clique {
                edges.insert(super::ordered_pair(u, v));
            }
            present.insert(v.clone());
        }
        let labels: BTreeSet<String> = g.labels().iter().cloned().collect();
        if labels != present {
            return bad("sequence and graph have different vertex sets".into());
        }
        if let Some((a, b)) = g.edge_set().into_iter().find(|e| !edges.contains(e)) {
            return bad(format!("edge {a}-{b} is missing from the k-tree"));
        }
        Ok(())
    }

    /// Text form: `base v1 .. v(k+1)` then `add v : w1 .. wk` per step.
    pub fn parse(text: &str) -> Result<BuildSequence> {
        let mut base = None;
        let mut steps = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: n + 1, msg: msg.to_string() };
            if let Some(rest) = line.strip_prefix("base") {
                base = Some(rest.split_whitespace().map(str::to_string).collect::<Vec<_>>());
            } else if let Some(rest) = line.strip_prefix("add") {
                let (v, clique) = rest.split_once(':').ok_or_else(|| err("expected `add v : w1 .. wk`"))?;
                let v = v.trim();
                if v.is_empty() || v.contains(char::is_whitespace) {
                    return Err(err("expected a single vertex before `:`"));
                }
                steps.push((v.to_string(), clique.split_whitespace().map(str::to_string).collect()));
            } else {
                return Err(err("expected `base` or `add`"));
            }
        }
        let base = base.ok_or(Error::Parse { line: 0, msg: "missing base line".into() })?;
        let k = steps.first().map_or(base.len().saturating_sub(1).max(1), |(_, c): &(String, Vec<String>)| c.len());
        Ok(BuildSequence { k, base, steps })
    }

    pub fn format(&self) -> String {
        let mut out = format!("base {}\n", self.base.join(" "));
        for (v, c) in &self.steps {
            out.push_str(&format!("add {v} : {}\n", c.join(" ")));
        }
        out
    }
}

/// A k-tree building sequence for a supergraph of `g`. A supplied sequence
/// is validated; otherwise an elimination ordering (minimum degree, then
/// minimum fill) is turned into a k-tree.
pub fn ktree_sequence(g: &Graph, k: usize, user_seq: Option<&BuildSequence>) -> Result<BuildSequence> {
    if let Some(seq) = user_seq {
        if seq.k != k {
            return Err(Error::InvalidSequence(format!("sequence has width {}, expected {k}", seq.k)));
        }
        seq.validate(g)?;
        return Ok(seq.clone());
    }
    if k == 0 {
        return Err(Error::WidthTooSmall(0));
    }
    for rule in [Elimination::MinDegree, Elimination::MinFill] {
        if let Some(seq) = sequence_from_elimination(g, k, rule) {
            debug_assert!(seq.validate(g).is_ok());
            return Ok(seq);
        }
    }
    Err(Error::WidthExceeded(k))
}

#[derive(Clone, Copy)]
enum Elimination {
    MinDegree,
    MinFill,
}

fn sequence_from_elimination(g: &Graph, k: usize, rule: Elimination) -> Option<BuildSequence> {
    let n = g.vertex_count();
    let label = |i: usize| g.label(i).to_string();
    if n <= k + 1 {
        return Some(BuildSequence { k, base: (0..n).map(label).collect(), steps: Vec::new() });
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|i| g.neighbors(i).clone()).collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut elim = Vec::with_capacity(n);
    let mut later: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    while alive.len() > k + 1 {
        let fill = |v: usize| {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut missing = 0;
            for (a, &x) in nb.iter().enumerate() {
                missing += nb[a + 1..].iter().filter(|&&y| !adj[x].contains(&y)).count();
            }
            missing
        };
        let v = match rule {
            Elimination::MinDegree => *alive.iter().min_by_key(|&&v| (adj[v].len(), fill(v), std::cmp::Reverse(v)))?,
            Elimination::MinFill => *alive.iter().min_by_key(|&&v| (fill(v), adj[v].len(), std::cmp::Reverse(v)))?,
        };
        let nb = adj[v].clone();
        if nb.len() > k {
            return None;
        }
        for &x in &nb {
            for &y in &nb {
                if x != y {
                    adj[x].insert(y);
                }
            }
            adj[x].remove(&v);
        }
        alive.remove(&v);
        later.insert(v, nb);
        elim.push(v);
    }
    let base: Vec<usize> = alive.iter().copied().collect();
    let mut maximal: Vec<BTreeSet<usize>> = vec![base.iter().copied().collect()];
    let mut steps = Vec::new();
    for &v in elim.iter().rev() {
        let nb = &later[&v];
        let host = maximal.iter().find(|c| nb.is_subset(c))?;
        let mut clique: Vec<usize> = nb.iter().copied().collect();
        clique.extend(host.iter().filter(|x| !nb.contains(x)).take(k - nb.len()));
        clique.sort_unstable();
        let mut grown: BTreeSet<usize> = clique.iter().copied().collect();
        grown.insert(v);
        maximal.push(grown);
        steps.push((label(v), clique.into_iter().map(label).collect()));
    }
    Some(BuildSequence { k, base: base.into_iter().map(label).collect(), steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_complete_bipartite, gen_cycle, gen_path};

    /// Smallest maximum back-degree over all orderings, by brute force.
    fn brute_degeneracy(g: &Graph) -> usize {
        fn rec(g: &Graph, placed: &mut Vec<usize>, best: &mut usize, cur: usize) {
            if cur >= *best {
                return;
            }
            if placed.len() == g.vertex_count() {
                *best = cur;
                return;
            }
            for v in 0..g.vertex_count() {
                if placed.contains(&v) {
                    continue;
                }
                let back = placed.iter().filter(|&&u| g.adjacent(u, v)).count();
                placed.push(v);
                rec(g, placed, best, cur.max(back));
                placed.pop();
            }
        }
        let mut best = usize::MAX;
        rec(g, &mut Vec::new(), &mut best, 0);
        best
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_order(&gen_path(6)).d, 1);
        assert_eq!(degeneracy_order(&gen_complete(5)).d, 4);
        let k310 = gen_complete_bipartite(3, 10);
        let ord = degeneracy_order(&k310);
        assert_eq!(ord.d, 3);
        ord.validate(&k310).unwrap();
    }

    #[test]
    fn degeneracy_is_optimal_on_small_graphs() {
        for g in [gen_cycle(6), gen_complete_bipartite(3, 3), gen_complete_bipartite(2, 5), gen_complete(4)] {
            assert_eq!(degeneracy_order(&g).d, brute_degeneracy(&g));
        }
    }

    #[test]
    fn invalid_orders_are_rejected() {
        let g = gen_path(3);
        let ord = DegeneracyOrder { order: vec!["v0".into(), "v2".into(), "v1".into()], d: 1 };
        assert!(matches!(ord.validate(&g), Err(Error::InvalidOrder(_))));
        let short = DegeneracyOrder { order: vec!["v0".into()], d: 5 };
        assert!(short.validate(&g).is_err());
    }

    #[test]
    fn clique_needs_no_steps() {
        let seq = ktree_sequence(&gen_complete(4), 3, None).unwrap();
        assert_eq!(seq.base.len(), 4);
        assert!(seq.steps.is_empty());
    }

    #[test]
    fn trees_attach_to_single_vertices() {
        let g = gen_path(7);
        let seq = ktree_sequence(&g, 1, None).unwrap();
        seq.validate(&g).unwrap();
        assert!(seq.steps.iter().all(|(_, c)| c.len() == 1));
    }

    #[test]
    fn k25_is_a_partial_2_tree() {
        let g = gen_complete_bipartite(2, 5);
        let seq = ktree_sequence(&g, 2, None).unwrap();
        seq.validate(&g).unwrap();
        assert_eq!(seq.base, ["a1", "a2", "b1"]);
        let user = BuildSequence {
            k: 2,
            base: vec!["a1".into(), "a2".into(), "b1".into()],
            steps: (2..=5).map(|j| (format!("b{j}"), vec!["a1".into(), "a2".into()])).collect(),
        };
        assert_eq!(ktree_sequence(&g, 2, Some(&user)).unwrap(), user);
        assert_eq!(BuildSequence::parse(&user.format()).unwrap(), user);
    }

    #[test]
    fn bad_sequences_are_rejected() {
        let g = gen_complete_bipartite(2, 3);
        let not_clique = BuildSequence {
            k: 2,
            base: vec!["a1".into(), "b1".into(), "b2".into()],
            steps: vec![("a2".into(), vec!["b1".into(), "b2".into()]), ("b3".into(), vec!["a1".into(), "a2".into()])],
        };
        assert!(matches!(ktree_sequence(&g, 2, Some(&not_clique)), Err(Error::InvalidSequence(_))));
        assert!(matches!(ktree_sequence(&gen_complete(5), 2, None), Err(Error::WidthExceeded(2))));
    }
}
