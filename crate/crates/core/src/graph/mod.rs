//! Simple undirected graphs with string labels and the combinatorial
//! preprocessing used by the constructors.

mod coloring;
mod cover;
mod gen;
mod order;
pub mod random;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub use coloring::{edge_coloring, EdgeColoring};
pub use cover::{clique_cover_global, clique_cover_local, star_cover, CliqueCover, CoverHint};
pub use gen::{
    gen_complete, gen_complete_bipartite, gen_cycle, gen_octahedron, gen_path, gen_triangular_grid, line_graph,
    triangular_label,
};
pub use order::{degeneracy_order, ktree_sequence, BuildSequence, DegeneracyOrder};

/// A finite simple graph. Vertices keep their insertion order, which fixes
/// the iteration order of every algorithm run on the graph.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.index.len() == other.index.len()
            && self.index.keys().eq(other.index.keys())
            && self.edge_set() == other.edge_set()
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a vertex if absent and return its index.
    pub fn add_vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(BTreeSet::new());
        i
    }

    /// Add an edge, creating missing endpoints. Loops are ignored.
    pub fn add_edge(&mut self, a: &str, b: &str) {
        let i = self.add_vertex(a);
        let j = self.add_vertex(b);
        if i != j {
            self.adj[i].insert(j);
            self.adj[j].insert(i);
        }
    }

    pub fn add_edge_idx(&mut self, i: usize, j: usize) {
        if i != j {
            self.adj[i].insert(j);
            self.adj[j].insert(i);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn neighbors(&self, i: usize) -> &BTreeSet<usize> {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    /// Edges as label pairs with the smaller label first.
    pub fn edge_set(&self) -> BTreeSet<(String, String)> {
        self.edges().into_iter().map(|(i, j)| ordered_pair(&self.labels[i], &self.labels[j])).collect()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(a, &i)| vs[a + 1..].iter().all(|&j| self.adjacent(i, j)))
    }

    /// The subgraph induced by `keep`, in this graph's vertex order.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> Graph {
        let mut g = Graph::new();
        for &i in keep {
            g.add_vertex(&self.labels[i]);
        }
        for (i, j) in self.edges() {
            if keep.contains(&i) && keep.contains(&j) {
                g.add_edge(&self.labels[i], &self.labels[j]);
            }
        }
        g
    }
}

pub(crate) fn ordered_pair(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Parse the edge-list format: one edge per line as two labels, `#`
/// starts a comment, `v <label>` declares an isolated vertex.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["v", label] => {
                g.add_vertex(label);
            }
            [a, b] if a != b => g.add_edge(a, b),
            [a, _] => return Err(Error::Parse { line: n + 1, msg: format!("loop at {a}") }),
            _ => return Err(Error::Parse { line: n + 1, msg: format!("expected two labels, got {line:?}") }),
        }
    }
    Ok(g)
}

/// Write the edge-list format; isolated vertices get `v` lines.
pub fn format_graph(g: &Graph) -> String {
    let mut out = String::new();
    for i in 0..g.vertex_count() {
        if g.degree(i) == 0 {
            out.push_str(&format!("v {}\n", g.label(i)));
        }
    }
    for (i, j) in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(i), g.label(j)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        let g = parse_graph("# square\na b\nb c\nc d\nd a\nv lonely\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge("a", "d"));
        assert!(!g.has_edge("a", "c"));
        assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
        assert!(parse_graph("a a\n").is_err());
        assert!(parse_graph("a b c\n").is_err());
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let a = parse_graph("x y\ny z\n").unwrap();
        let b = parse_graph("z y\ny x\n").unwrap();
        assert_eq!(a, b);
    }
}
