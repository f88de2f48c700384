//! Lower and upper bounds on the bend-number of `K_{m,n}`.
//!
//! Inequalities are evaluated in exact integer arithmetic.

use std::fmt;

use crate::bipartite::{kmm3_n, m4_n};

/// Where a bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundSource {
    /// Stars are interval graphs; `K_{m,n}` with `m, n ≥ 2` contains a 4-cycle.
    Trivial,
    /// The first counting inequality, see [`lbl1_min_k`].
    Lbl1,
    /// The crossing-count inequality, see [`lbl2_min_k`].
    Lbl2,
    /// `b(K_{2,n})` is 0, 1, 2 for `n = 1`, `2..=4`, `n ≥ 5`.
    K2Ladder,
    /// `b(K_{3,n}) ≥ 3` for `n ≥ 11`, taken as a known fact.
    K3Ladder,
    /// The comb layout, `2m − 2` bends for every `n`.
    Comb,
    /// Staircases through a blown-up pretzel, `m − 1` bends.
    Kmm3,
    /// Seeds and snakes around a blown-up pretzel, `2m − 3` bends.
    M4,
    /// The explicit 2-bend representation of `K_{3,10}`.
    K310,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundSource::Trivial => "trivial",
            BoundSource::Lbl1 => "LBL1",
            BoundSource::Lbl2 => "LBL2",
            BoundSource::K2Ladder => "K2-ladder",
            BoundSource::K3Ladder => "K3-ladder",
            BoundSource::Comb => "comb",
            BoundSource::Kmm3 => "kmm3",
            BoundSource::M4 => "m4",
            BoundSource::K310 => "K3,10",
        };
        f.write_str(s)
    }
}

/// Whether a witness bounds from below or from above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
}

/// One bound with its origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: BoundKind,
    pub source: BoundSource,
    pub value: usize,
    /// Set when the bound comes from `K_{m,n'}` with `n' > n` by deleting paths.
    pub deleted_from: Option<usize>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
        };
        write!(f, "{kind} {} {}", self.value, self.source)?;
        if let Some(n) = self.deleted_from {
            write!(f, " (deletion from n = {n})")?;
        }
        Ok(())
    }
}

/// Best known bounds for `b(K_{m,n})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub lower: usize,
    pub upper: usize,
    pub witnesses: Vec<Witness>,
}

/// Smallest `k` with `(k+1)(m+n) ≥ mn + √(2k(m+n))`.
pub fn lbl1_min_k(m: usize, n: usize) -> usize {
    let mut prev = false;
    for k in 0.. {
        let ok = lbl1_holds(m, n, k);
        debug_assert!(!(prev && !ok), "lbl1 feasibility is not monotone at k = {k}");
        if ok {
            return k;
        }
        prev = ok;
    }
    unreachable!()
}

fn lbl1_holds(m: usize, n: usize, k: usize) -> bool {
    let (m, n, k) = (m as i128, n as i128, k as i128);
    let a = (k + 1) * (m + n) - m * n;
    a >= 0 && a * a >= 2 * k * (m + n)
}

/// Smallest `k` with `n(2m−k−2) ≤ m(m−1)⌈(k+1)/2⌉⌈(k+3)/2⌉ + 2(k+1)m`.
pub fn lbl2_min_k(m: usize, n: usize) -> usize {
    (0..).find(|&k| lbl2_holds(m, n, k)).unwrap()
}

fn lbl2_holds(m: usize, n: usize, k: usize) -> bool {
    let (mi, ni, ki) = (m as i128, n as i128, k as i128);
    let lhs = ni * (2 * mi - ki - 2);
    let rhs = mi * (mi - 1) * ((ki + 2) / 2) * ((ki + 4) / 2) + 2 * (ki + 1) * mi;
    lhs <= rhs
}

/// Most crossings two `k`-bend paths can have: `j(j+1)` for `k = 2j − 1`,
/// and the bound for `k + 1` when `k` is even.
pub fn max_crossings_bound(k: usize) -> usize {
    let j = if k % 2 == 1 { k.div_ceil(2) } else { (k + 2) / 2 };
    j * (j + 1)
}

/// `n(2m − k − 2) ≤ 2c + 2(k+1)m`, where `c` counts crossings among the `A` paths.
pub fn c_inequality_check(m: usize, n: usize, k: usize, c: usize) -> bool {
    let (m, n, k, c) = (m as i128, n as i128, k as i128, c as i128);
    n * (2 * m - k - 2) <= 2 * c + 2 * (k + 1) * m
}

/// Interval number and track number of `K_{m,n}`:
/// `(⌈(mn+1)/(m+n)⌉, ⌈mn/(m+n−1)⌉)`.
pub fn reference_interval_track(m: usize, n: usize) -> (usize, usize) {
    ((m * n + 1).div_ceil(m + n), (m * n).div_ceil(m + n - 1))
}

/// Combines every known inequality and construction into bounds for
/// `b(K_{m,n})`. The arguments may come in either order.
pub fn kmn_bend_bounds(m: usize, n: usize) -> BoundResult {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    let mut w = Vec::new();
    let mut lower = |source, value| w.push(Witness { kind: BoundKind::Lower, source, value, deleted_from: None });
    if m == 0 {
        lower(BoundSource::Trivial, 0);
        return finish(w);
    }
    lower(BoundSource::Trivial, usize::from(m >= 2));
    if m >= 3 {
        lower(BoundSource::Lbl1, lbl1_min_k(m, n));
    }
    lower(BoundSource::Lbl2, lbl2_min_k(m, n));
    if m == 2 {
        lower(BoundSource::K2Ladder, k2_ladder(n));
    }
    if m == 3 && n >= 11 {
        lower(BoundSource::K3Ladder, 3);
    }

    let mut upper = |source, value, point: usize| {
        let deleted_from = (point > n).then_some(point);
        w.push(Witness { kind: BoundKind::Upper, source, value, deleted_from });
    };
    if m == 1 {
        upper(BoundSource::Trivial, 0, n);
    }
    upper(BoundSource::Comb, 2 * m - 2, n);
    if m == 2 {
        upper(BoundSource::K2Ladder, k2_ladder(n), n);
    }
    if m == 3 && n <= 10 {
        upper(BoundSource::K310, 2, 10);
    }
    if m >= 4 && n <= kmm3_n(m) {
        upper(BoundSource::Kmm3, m - 1, kmm3_n(m));
    }
    if m >= 3 && n <= m4_n(m) {
        upper(BoundSource::M4, 2 * m - 3, m4_n(m));
    }
    finish(w)
}

fn k2_ladder(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        2..=4 => 1,
        _ => 2,
    }
}

fn finish(witnesses: Vec<Witness>) -> BoundResult {
    let pick = |kind| witnesses.iter().filter(move |w| w.kind == kind).map(|w| w.value);
    let lower = pick(BoundKind::Lower).max().unwrap_or(0);
    let upper = pick(BoundKind::Upper).min().unwrap_or(lower);
    BoundResult { lower, upper, witnesses }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lbl1_examples() {
        assert_eq!(lbl1_min_k(4, 4), 2);
        assert_eq!(lbl1_min_k(6, 6), 3);
        for m in 3..=8 {
            assert!(lbl1_min_k(m, (m - 1) * (m - 1)) >= m - 1, "m = {m}");
        }
    }

    #[test]
    fn lbl1_on_balanced_graphs() {
        for m in 3..=20 {
            assert_eq!(lbl1_min_k(m, m), m.div_ceil(2), "m = {m}");
        }
    }

    #[test]
    fn lbl2_examples() {
        assert_eq!(lbl2_min_k(3, 61), 4);
        assert!(lbl2_min_k(3, 60) <= 3);
        for m in 3..=5 {
            let n = m * m * m * m - 2 * m * m * m + 5 * m * m - 4 * m + 1;
            assert_eq!(lbl2_min_k(m, n), 2 * m - 2, "m = {m}");
        }
    }

    #[test]
    fn crossing_bound() {
        assert_eq!(max_crossings_bound(9), 30);
        assert_eq!(max_crossings_bound(0), 2);
        assert_eq!(max_crossings_bound(1), 2);
        assert_eq!(max_crossings_bound(2), 6);
    }

    #[test]
    fn c_inequality() {
        assert!(c_inequality_check(3, 39, 3, 17));
        assert!(c_inequality_check(5, 10_000, 8, 0));
    }

    #[test]
    fn interval_and_track() {
        assert_eq!(reference_interval_track(3, 10), (3, 3));
        assert_eq!(reference_interval_track(1, 1), (1, 1));
        assert_eq!(reference_interval_track(4, 4), (3, 3));
    }

    #[test]
    fn known_cases() {
        let b = kmn_bend_bounds(2, 4);
        assert_eq!((b.lower, b.upper), (1, 1));
        let b = kmn_bend_bounds(3, 40);
        assert_eq!((b.lower, b.upper), (3, 4));
        let b = kmn_bend_bounds(3, 10);
        assert_eq!((b.lower, b.upper), (2, 2));
        assert_eq!(kmn_bend_bounds(10, 3), b);
    }

    #[test]
    fn k2_ladder_in_full() {
        for n in 1..=30 {
            let b = kmn_bend_bounds(2, n);
            let want = k2_ladder(n);
            assert_eq!((b.lower, b.upper), (want, want), "n = {n}");
        }
    }

    #[test]
    fn deletion_is_recorded() {
        let b = kmn_bend_bounds(3, 20);
        let m4 = b.witnesses.iter().find(|w| w.source == BoundSource::M4).unwrap();
        assert_eq!(m4.deleted_from, Some(39));
        assert_eq!(m4.to_string(), "upper 3 m4 (deletion from n = 39)");
    }

    #[test]
    fn lower_never_exceeds_upper() {
        for m in 1..=8 {
            for n in m..=200 {
                let b = kmn_bend_bounds(m, n);
                assert!(b.lower <= b.upper, "K_{{{m},{n}}}: {b:?}");
            }
        }
    }
}
