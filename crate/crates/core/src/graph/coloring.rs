use std::collections::{BTreeMap, BTreeSet};

use super::{ordered_pair, Graph};

/// A proper edge colouring keyed by label pairs `(a, b)` with `a < b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    pub color: BTreeMap<(String, String), usize>,
}

impl EdgeColoring {
    pub fn color_count(&self) -> usize {
        self.color.values().collect::<BTreeSet<_>>().len()
    }

    pub fn color_of(&self, a: &str, b: &str) -> Option<usize> {
        self.color.get(&ordered_pair(a, b)).copied()
    }

    /// Every edge of `g` is coloured and incident edges differ.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.color.len() != g.edge_count() {
            return false;
        }
        (0..g.vertex_count()).all(|v| {
            let mut seen = BTreeSet::new();
            g.neighbors(v).iter().all(|&w| match self.color_of(g.label(v), g.label(w)) {
                Some(c) => seen.insert(c),
                None => false,
            })
        })
    }

    /// Edges grouped by colour, in colour order.
    pub fn classes(&self) -> Vec<Vec<(String, String)>> {
        let mut by: BTreeMap<usize, Vec<(String, String)>> = BTreeMap::new();
        for (e, &c) in &self.color {
            by.entry(c).or_default().push(e.clone());
        }
        by.into_values().collect()
    }
}

struct State<'a> {
    g: &'a Graph,
    color: BTreeMap<(usize, usize), usize>,
    palette: usize,
}

impl State<'_> {
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.color.get(&(a.min(b), a.max(b))).copied()
    }

    fn set(&mut self, a: usize, b: usize, c: Option<usize>) {
        let key = (a.min(b), a.max(b));
        match c {
            Some(c) => self.color.insert(key, c),
            None => self.color.remove(&key),
        };
    }

    fn is_free(&self, x: usize, c: usize) -> bool {
        self.g.neighbors(x).iter().all(|&y| self.get(x, y) != Some(c))
    }

    fn free(&self, x: usize) -> usize {
        (0..self.palette).find(|&c| self.is_free(x, c)).expect("palette has Δ+1 colours")
    }

    fn neighbor_with(&self, x: usize, c: usize) -> Option<usize> {
        self.g.neighbors(x).iter().copied().find(|&y| self.get(x, y) == Some(c))
    }

    fn maximal_fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = self
                .g
                .neighbors(u)
                .iter()
                .copied()
                .find(|&z| !fan.contains(&z) && self.get(u, z).is_some_and(|c| self.is_free(last, c)));
            match next {
                Some(z) => fan.push(z),
                None => return fan,
            }
        }
    }

    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut x, mut want, mut prev) = (u, d, usize::MAX);
        while let Some(y) = self.neighbor_with(x, want).filter(|&y| y != prev) {
            path.push((x, y));
            prev = x;
            x = y;
            want = if want == d { c } else { d };
        }
        for (a, b) in path {
            let flipped = if self.get(a, b) == Some(c) { d } else { c };
            self.set(a, b, Some(flipped));
        }
    }

    fn color_edge(&mut self, u: usize, v: usize) {
        let fan = self.maximal_fan(u, v);
        let c = self.free(u);
        let d = self.free(*fan.last().unwrap());
        self.invert_path(u, c, d);
        let valid_prefix =
            |s: &Self, i: usize| (1..=i).all(|j| s.get(u, fan[j]).is_some_and(|col| s.is_free(fan[j - 1], col)));
        let w = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && valid_prefix(self, i))
            .expect("a rotatable fan prefix exists");
        for j in 0..w {
            let next = self.get(u, fan[j + 1]);
            self.set(u, fan[j], next);
        }
        self.set(u, fan[w], Some(d));
    }

    fn color_bipartite_edge(&mut self, u: usize, v: usize) {
        let a = self.free(u);
        if !self.is_free(v, a) {
            let b = self.free(v);
            self.invert_path(v, b, a);
        }
        self.set(u, v, Some(a));
    }
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; g.vertex_count()];
    for s in 0..g.vertex_count() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let sx = side[x].unwrap();
            for &y in g.neighbors(x) {
                match side[y] {
                    None => {
                        side[y] = Some(!sx);
                        stack.push(y);
                    }
                    Some(sy) if sy == sx => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Proper edge colouring with at most Δ+1 colours by fan rotation and
/// alternating-path inversion. Bipartite graphs get exactly Δ colours.
pub fn edge_coloring(g: &Graph) -> EdgeColoring {
    let bipartite = is_bipartite(g);
    let palette = g.max_degree() + usize::from(!bipartite);
    let mut st = State { g, color: BTreeMap::new(), palette: palette.max(1) };
    for (u, v) in g.edges() {
        if bipartite {
            st.color_bipartite_edge(u, v);
        } else {
            st.color_edge(u, v);
        }
    }
    let color = st.color.iter().map(|(&(a, b), &c)| (ordered_pair(g.label(a), g.label(b)), c)).collect();
    EdgeColoring { color }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_complete_bipartite, gen_cycle};

    #[test]
    fn even_cycle_uses_two_colors() {
        let g = gen_cycle(8);
        let col = edge_coloring(&g);
        assert!(col.is_proper(&g));
        assert_eq!(col.color_count(), 2);
    }

    #[test]
    fn k4_uses_three_or_four_colors() {
        let g = gen_complete(4);
        let col = edge_coloring(&g);
        assert!(col.is_proper(&g));
        assert!((3..=4).contains(&col.color_count()));
    }

    #[test]
    fn star_needs_every_color() {
        let g = gen_complete_bipartite(1, 6);
        let col = edge_coloring(&g);
        assert!(col.is_proper(&g));
        assert_eq!(col.color_count(), 6);
    }

    #[test]
    fn dense_graphs_stay_within_vizing() {
        for n in 2..=9 {
            let g = gen_complete(n);
            let col = edge_coloring(&g);
            assert!(col.is_proper(&g));
            assert!(col.color_count() <= g.max_degree() + 1);
        }
        let g = gen_complete_bipartite(4, 5);
        let col = edge_coloring(&g);
        assert!(col.is_proper(&g));
        assert_eq!(col.color_count(), 5);
    }

    #[test]
    fn classes_are_matchings() {
        let g = gen_complete(6);
        let col = edge_coloring(&g);
        for class in col.classes() {
            let mut ends = BTreeSet::new();
            for (a, b) in class {
                assert!(ends.insert(a) && ends.insert(b));
            }
        }
    }
}
