//! Representations of complete bipartite graphs `K_{m,n}` with parts
//! `a1..am` and `b1..bn`.

mod kmm3;
mod m4;
mod pretzel;

pub use kmm3::{construct_kmm3, construct_kmm3_with_n, kmm3_capacity, kmm3_n};
pub use m4::{construct_m4, m4_n};
pub use pretzel::{blowup_pretzel, total_a_crossings, Block, BlockKind, BlownUpPretzel};

use crate::grid::{path_from, GridPoint};
use crate::rep::Representation;
use crate::Rep;

/// `A` as `m` parallel vertical segments; every `B` path is a snake with
/// one unit piece on each of them, inside a horizontal strip of its own.
/// `B` paths have `2m - 2` bends, `A` paths none.
pub fn construct_comb(m: usize, n: usize) -> Rep {
    let mut rep = Representation::new();
    let top = 2 * n as i64;
    for i in 0..m {
        rep.insert(format!("a{}", i + 1), path_from(&[(i as i64, 0), (i as i64, top.max(1))]).expect("straight"));
    }
    for j in 0..n {
        let (lo, hi) = (2 * j as i64, 2 * j as i64 + 1);
        let pts: Vec<GridPoint<i64>> = (0..m as i64)
            .flat_map(|x| {
                let (a, b) = if x % 2 == 0 { (lo, hi) } else { (hi, lo) };
                [GridPoint::new(x, a), GridPoint::new(x, b)]
            })
            .collect();
        rep.insert(format!("b{}", j + 1), crate::grid::normalize_path(&pts).expect("snake"));
    }
    rep
}

/// A 2-bend representation of `K_{3,10}`.
pub fn k3_10_two_bend() -> Rep {
    let a: [&[(i64, i64)]; 3] =
        [&[(2, 5), (2, 1), (5, 1), (5, 6)], &[(0, 2), (6, 2), (6, 4), (0, 4)], &[(6, 5), (3, 5), (3, 0), (1, 0)]];
    let b: [[(i64, i64); 4]; 10] = [
        [(1, 0), (2, 0), (2, 2), (0, 2)],
        [(4, 5), (2, 5), (2, 4), (1, 4)],
        [(4, 5), (5, 5), (5, 4), (6, 4)],
        [(5, 3), (5, 4), (3, 4), (3, 6)],
        [(2, 3), (2, 4), (3, 4), (3, 3)],
        [(6, 3), (6, 5), (5, 5), (5, 6)],
        [(3, 1), (3, 2), (5, 2), (5, 3)],
        [(6, 3), (6, 1), (3, 1), (3, 0)],
        [(2, 3), (2, 2), (3, 2), (3, 3)],
        [(6, 2), (5, 2), (5, 0), (2, 0)],
    ];
    let mut rep = Representation::new();
    for (i, p) in a.iter().enumerate() {
        rep.insert(format!("a{}", i + 1), path_from(p).expect("witness path"));
    }
    for (i, p) in b.iter().enumerate() {
        rep.insert(format!("b{}", i + 1), path_from(p).expect("witness path"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_complete_bipartite;
    use crate::verify::verify_representation;

    fn check(rep: &Rep, m: usize, n: usize, budget: usize) {
        let report = verify_representation(rep, &gen_complete_bipartite(m, n), budget).unwrap();
        assert!(report.ok, "K_{{{m},{n}}}: {}", report.summary());
    }

    #[test]
    fn comb_examples() {
        check(&construct_comb(1, 4), 1, 4, 0);
        check(&construct_comb(2, 5), 2, 5, 2);
        let rep = construct_comb(3, 61);
        check(&rep, 3, 61, 4);
        assert_eq!(rep.get("b7").unwrap().bends(), 4);
        assert_eq!(rep.get("a2").unwrap().bends(), 0);
    }

    #[test]
    fn k3_10_witness() {
        check(&k3_10_two_bend(), 3, 10, 2);
    }
}
