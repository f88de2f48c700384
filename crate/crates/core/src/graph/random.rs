//! Seeded random graph generators and exhaustive small-tree enumeration.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BuildSequence, Graph};

/// Deterministic generator for a seed.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn vertex(i: usize) -> String {
    format!("v{i}")
}

fn empty(n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(&vertex(i));
    }
    g
}

/// Random graph on `n` vertices with maximum degree at most `delta`; each
/// pair is tried once in random order and kept with probability `p`.
pub fn random_bounded_degree(n: usize, delta: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = empty(n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    for (i, j) in pairs {
        if g.degree(i) < delta && g.degree(j) < delta && rng.gen_bool(p) {
            g.add_edge_idx(i, j);
        }
    }
    g
}

/// Random graph with degeneracy at most `d`: vertex `i` picks up to `d`
/// random earlier neighbours.
pub fn random_degenerate(n: usize, d: usize, rng: &mut impl Rng) -> Graph {
    let mut g = empty(n);
    for i in 1..n {
        let want = rng.gen_range(0..=d.min(i));
        let mut earlier: Vec<usize> = (0..i).collect();
        earlier.shuffle(rng);
        for &j in &earlier[..want] {
            g.add_edge_idx(i, j);
        }
    }
    g
}

/// Uniform random labelled tree from a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = empty(n);
    if n < 2 {
        return g;
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    for &c in &code {
        let leaf = leaves.pop_first().expect("a leaf exists");
        g.add_edge_idx(leaf, c);
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    g.add_edge_idx(rest[0], rest[1]);
    g
}

/// Random k-tree on `n ≥ k+1` vertices together with its building sequence.
pub fn random_ktree(n: usize, k: usize, rng: &mut impl Rng) -> (Graph, BuildSequence) {
    assert!(k >= 1 && n > k, "a k-tree needs at least k+1 vertices");
    let mut g = empty(n);
    let base: Vec<usize> = (0..=k).collect();
    for (a, &i) in base.iter().enumerate() {
        for &j in &base[a + 1..] {
            g.add_edge_idx(i, j);
        }
    }
    let mut cliques: Vec<Vec<usize>> =
        (0..=k).map(|skip| base.iter().copied().filter(|&x| x != skip).collect()).collect();
    let mut steps = Vec::new();
    for v in k + 1..n {
        let host = cliques[rng.gen_range(0..cliques.len())].clone();
        for &w in &host {
            g.add_edge_idx(v, w);
        }
        for skip in &host {
            let mut c: Vec<usize> = host.iter().copied().filter(|x| x != skip).collect();
            c.push(v);
            cliques.push(c);
        }
        steps.push((vertex(v), host.iter().map(|&w| vertex(w)).collect()));
    }
    let seq = BuildSequence { k, base: base.into_iter().map(vertex).collect(), steps };
    (g, seq)
}

/// Random spanning subgraph keeping each edge with probability `keep`.
pub fn random_subgraph(g: &Graph, keep: f64, rng: &mut impl Rng) -> Graph {
    let mut h = Graph::new();
    for l in g.labels() {
        h.add_vertex(l);
    }
    for (i, j) in g.edges() {
        if rng.gen_bool(keep) {
            h.add_edge_idx(i, j);
        }
    }
    h
}

/// Every tree on `n` vertices up to isomorphism, grown leaf by leaf and
/// deduplicated by a centre-rooted canonical code.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for attach in 0..size - 1 {
                let mut grown = adj.clone();
                grown.push(vec![attach]);
                grown[attach].push(size - 1);
                if seen.insert(canonical_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|adj| {
            let mut g = empty(adj.len());
            for (i, nb) in adj.iter().enumerate() {
                for &j in nb {
                    if i < j {
                        g.add_edge_idx(i, j);
                    }
                }
            }
            g
        })
        .collect()
}

/// Every graph on `n ≤ 7` vertices up to isomorphism, grown vertex by
/// vertex and deduplicated by the least adjacency mask over relabellings.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let mut level: Vec<Vec<u8>> = vec![Vec::new()];
    for size in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for rows in &level {
            for nb in 0..1u8 << (size - 1) {
                let mut grown = rows.clone();
                for (i, row) in grown.iter_mut().enumerate() {
                    if nb >> i & 1 == 1 {
                        *row |= 1 << (size - 1);
                    }
                }
                grown.push(nb);
                if seen.insert(least_mask(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|rows| {
            let mut g = empty(rows.len());
            for (i, row) in rows.iter().enumerate() {
                for j in i + 1..rows.len() {
                    if row >> j & 1 == 1 {
                        g.add_edge_idx(i, j);
                    }
                }
            }
            g
        })
        .collect()
}

fn least_mask(rows: &[u8]) -> u32 {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u32::MAX;
    loop {
        let mut mask = 0u32;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if rows[perm[i]] >> perm[j] & 1 == 1 {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn canonical_code(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&i| degree[i] <= 1).collect();
    let mut removed = vec![false; n];
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        for &leaf in &layer {
            removed[leaf] = true;
        }
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in adj[leaf].iter().filter(|&&w| !removed[w]) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| rooted_code(adj, c, usize::MAX)).min().unwrap_or_default()
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}
