use std::collections::BTreeSet;

use super::Graph;

/// `K_{m,n}` with parts `a1..am` and `b1..bn`.
pub fn gen_complete_bipartite(m: usize, n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 1..=m {
        g.add_vertex(&format!("a{i}"));
    }
    for j in 1..=n {
        g.add_vertex(&format!("b{j}"));
    }
    for i in 1..=m {
        for j in 1..=n {
            g.add_edge(&format!("a{i}"), &format!("b{j}"));
        }
    }
    g
}

/// The octahedron on `a, A, b, B, c, C`; the only non-edges are
/// `{a,A}`, `{b,B}` and `{c,C}`.
pub fn gen_octahedron() -> Graph {
    let names = ["a", "A", "b", "B", "c", "C"];
    let mut g = Graph::new();
    for v in names {
        g.add_vertex(v);
    }
    for (i, u) in names.iter().enumerate() {
        for v in &names[i + 1..] {
            if !u.eq_ignore_ascii_case(v) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn gen_complete(n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(&format!("v{i}"));
    }
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge_idx(i, j);
        }
    }
    g
}

pub fn gen_path(n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(&format!("v{i}"));
    }
    for i in 1..n {
        g.add_edge_idx(i - 1, i);
    }
    g
}

pub fn gen_cycle(n: usize) -> Graph {
    let mut g = gen_path(n);
    if n >= 3 {
        g.add_edge_idx(n - 1, 0);
    }
    g
}

/// Label of the triangular-lattice vertex in row `a`, column `b`.
pub fn triangular_label(a: i64, b: i64) -> String {
    format!("t{a}_{b}")
}

/// Induced subgraph of the triangular lattice covered by `rows` strips of
/// `cols` alternating up/down triangles each.
///
/// Vertex `(a, b)` is adjacent to `(a, b±1)`, `(a±1, b)`, `(a+1, b-1)` and
/// `(a-1, b+1)`. When `mask` is given only the listed vertices are kept.
pub fn gen_triangular_grid(rows: usize, cols: usize, mask: Option<&BTreeSet<(i64, i64)>>) -> Graph {
    let mut pts = BTreeSet::new();
    for r in 0..rows as i64 {
        for t in 0..cols as i64 {
            let c = t / 2;
            let tri =
                if t % 2 == 0 { [(r, c), (r, c + 1), (r + 1, c)] } else { [(r, c + 1), (r + 1, c), (r + 1, c + 1)] };
            pts.extend(tri);
        }
    }
    if rows == 0 || cols == 0 {
        pts.insert((0, 0));
    }
    if let Some(m) = mask {
        pts.retain(|p| m.contains(p));
    }
    let mut g = Graph::new();
    for &(a, b) in &pts {
        g.add_vertex(&triangular_label(a, b));
    }
    for &(a, b) in &pts {
        for (da, db) in [(0, 1), (1, 0), (1, -1)] {
            let q = (a + da, b + db);
            if pts.contains(&q) {
                g.add_edge(&triangular_label(a, b), &triangular_label(q.0, q.1));
            }
        }
    }
    g
}

/// Line graph; the vertex for edge `{u, v}` is labelled `u-v`.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let name = |&(i, j): &(usize, usize)| format!("{}-{}", g.label(i), g.label(j));
    let mut l = Graph::new();
    for e in &edges {
        l.add_vertex(&name(e));
    }
    for (x, e) in edges.iter().enumerate() {
        for f in &edges[x + 1..] {
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                l.add_edge(&name(e), &name(f));
            }
        }
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_counts() {
        let c4 = gen_complete_bipartite(2, 2);
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert_eq!(gen_complete_bipartite(3, 10).edge_count(), 30);
        let star = gen_complete_bipartite(1, 5);
        assert_eq!(star.max_degree(), 5);
    }

    #[test]
    fn octahedron_shape() {
        let o = gen_octahedron();
        assert_eq!((o.vertex_count(), o.edge_count()), (6, 12));
        assert!(!o.has_edge("a", "A"));
        // {b, C, B, c} induces a 4-cycle b-C-B-c-b
        let four: BTreeSet<usize> = ["b", "C", "B", "c"].iter().map(|v| o.index_of(v).unwrap()).collect();
        let h = o.induced(&four);
        assert_eq!(h.edge_count(), 4);
        assert!(h.has_edge("b", "C") && h.has_edge("C", "B") && h.has_edge("B", "c") && h.has_edge("c", "b"));
    }

    #[test]
    fn triangular_patches() {
        let two = gen_triangular_grid(1, 2, None);
        assert_eq!((two.vertex_count(), two.edge_count()), (4, 5));
        let one = gen_triangular_grid(1, 1, Some(&[(0, 0)].into_iter().collect()));
        assert_eq!((one.vertex_count(), one.edge_count()), (1, 0));
        // 3 strips of 4 triangles: a 4x3 vertex parallelogram with 12
        // triangular faces, so Euler gives 12 + 12 - 1 edges
        let g = gen_triangular_grid(3, 4, None);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 23);
    }

    #[test]
    fn line_graph_of_k4_is_octahedral() {
        let l = line_graph(&gen_complete(4));
        assert_eq!((l.vertex_count(), l.edge_count()), (6, 12));
        assert!(l.labels().iter().all(|v| l.degree(l.index_of(v).unwrap()) == 4));
    }
}
