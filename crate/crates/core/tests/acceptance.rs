//! The acceptance suite: fifteen checks, one pass/fail line each.
//!
//! Runs without the libtest harness so every check reports even when an
//! earlier one fails. The process exits non-zero if any check fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use epg::bipartite::{
    blowup_pretzel, construct_comb, construct_kmm3, construct_kmm3_with_n, construct_m4, kmm3_n, m4_n,
    total_a_crossings,
};
use epg::bounds::{c_inequality_check, kmn_bend_bounds, lbl1_min_k, lbl2_min_k};
use epg::construct::{
    construct_degeneracy, construct_edge_coloring, construct_from_global_cover, construct_treewidth,
    to_interval_representation,
};
use epg::exact::{exact_bend_number, is_interval_graph, BendNumber, SearchBudget};
use epg::graph::random::{
    all_graphs, all_trees, random_bounded_degree, random_degenerate, random_ktree, random_subgraph, seeded,
};
use epg::graph::{
    clique_cover_global, degeneracy_order, edge_coloring, gen_complete_bipartite, gen_cycle, gen_triangular_grid,
    CoverHint, Graph,
};
use epg::grid::{crossings, make_pretzel, normalize_path, GridPoint};
use epg::reduce3sat::{
    brute_force_one_in_three, build_reduction_graph, parse_formula, random_planted_formula,
    representation_from_assignment,
};
use epg::verify::{intersection_graph, verify_representation};
use epg::{Path, Rep};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verified(rep: &Rep, g: &Graph, budget: usize, what: &str) -> Result<(), String> {
    let report = verify_representation(rep, g, budget).map_err(|e| format!("{what}: {e}"))?;
    ensure(report.ok, || format!("{what}: {}", report.summary()))
}

fn pretzel_tightness() -> Result<String, String> {
    for j in 1..=8 {
        let (p, q) = make_pretzel(j);
        let c = crossings(&p, &q);
        ensure(c == j * (j + 1), || format!("j = {j}: {c} crossings, expected {}", j * (j + 1)))?;
    }
    Ok("j = 1..8 cross exactly j(j+1) times".into())
}

fn random_path(rng: &mut impl Rng, bends: usize) -> Path {
    let mut p = GridPoint::new(rng.gen_range(0..=50), rng.gen_range(0..=50));
    let mut pts = vec![p.clone()];
    let mut horizontal = rng.gen_bool(0.5);
    for _ in 0..=bends {
        let (cur, next) = if horizontal { (p.x, &mut p.x) } else { (p.y, &mut p.y) };
        let mut v = rng.gen_range(0..=50);
        while v == cur {
            v = rng.gen_range(0..=50);
        }
        *next = v;
        pts.push(p.clone());
        horizontal = !horizontal;
    }
    normalize_path(&pts).expect("alternating steps form a path")
}

fn crossing_bound() -> Result<String, String> {
    let mut rng = seeded(2);
    let mut worst = 0;
    for _ in 0..10_000 {
        let j = rng.gen_range(1..=4);
        let (p, q) = (random_path(&mut rng, 2 * j - 1), random_path(&mut rng, 2 * j - 1));
        let c = crossings(&p, &q);
        ensure(c <= j * (j + 1), || format!("{c} crossings between {p:?} and {q:?}"))?;
        worst = worst.max(c);
    }
    Ok(format!("10000 pairs, no violation (most crossings seen {worst})"))
}

fn triangular_grids() -> Result<String, String> {
    let mut rng = seeded(3);
    let mut count = 0;
    for rows in 1..=5 {
        for cols in 1..=6 {
            for masked in [false, true] {
                let full = gen_triangular_grid(rows, cols, None);
                let g = if masked {
                    let keep: BTreeSet<(i64, i64)> = (-1..=rows as i64 + 1)
                        .flat_map(|a| (-1..=cols as i64 + 1).map(move |b| (a, b)))
                        .filter(|_| rng.gen_bool(0.75))
                        .collect();
                    gen_triangular_grid(rows, cols, Some(&keep))
                } else {
                    full
                };
                if g.vertex_count() == 0 {
                    continue;
                }
                let cover = clique_cover_global(&g, Some(CoverHint::TriangularGrid));
                ensure(cover.global_number() <= 3, || format!("{rows}x{cols}: {} families", cover.global_number()))?;
                let rep = construct_from_global_cover(&g, &cover).map_err(|e| e.to_string())?;
                verified(&rep, &g, 2, &format!("{rows}x{cols}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} patches, 3 families, 2 bends"))
}

fn edge_colorings() -> Result<String, String> {
    let mut rng = seeded(4);
    for i in 0..50 {
        let n = rng.gen_range(2..=15);
        let delta = rng.gen_range(1..=6);
        let g = random_bounded_degree(n, delta, 0.6, &mut rng);
        let colours = edge_coloring(&g).color_count();
        let budget = colours.saturating_sub(1);
        ensure(budget <= g.max_degree(), || format!("graph {i}: {colours} colours for degree {}", g.max_degree()))?;
        let rep = construct_edge_coloring(&g).map_err(|e| e.to_string())?;
        verified(&rep, &g, budget, &format!("graph {i}"))?;
    }
    Ok("50 graphs within chi' - 1 bends".into())
}

fn degeneracy() -> Result<String, String> {
    let mut rng = seeded(5);
    for i in 0..100 {
        let n = rng.gen_range(2..=20);
        let g = random_degenerate(n, rng.gen_range(1..=4), &mut rng);
        let ord = degeneracy_order(&g);
        ensure(ord.d <= 4, || format!("graph {i}: degeneracy {}", ord.d))?;
        let rep = construct_degeneracy(&g, &ord).map_err(|e| e.to_string())?;
        verified(&rep, &g, (2 * ord.d).saturating_sub(1).max(1), &format!("graph {i}"))?;
    }
    let mut trees = 0;
    for n in 1..=10 {
        for t in all_trees(n) {
            let rep = construct_degeneracy(&t, &degeneracy_order(&t)).map_err(|e| e.to_string())?;
            verified(&rep, &t, 1, &format!("tree on {n} vertices"))?;
            trees += 1;
        }
    }
    Ok(format!("100 random graphs within 2dg - 1 bends, {trees} trees within 1 bend"))
}

fn treewidth() -> Result<String, String> {
    let mut rng = seeded(6);
    let mut count = 0;
    for k in 3..=5 {
        for round in 0..8 {
            let n = rng.gen_range(k + 1..=18);
            let (g, seq) = random_ktree(n, k, &mut rng);
            let sub = random_subgraph(&g, 0.7, &mut rng);
            for (what, h) in [("k-tree", &g), ("subgraph", &sub)] {
                let rep = construct_treewidth(h, &seq).map_err(|e| format!("k = {k}, round {round}, {what}: {e}"))?;
                verified(&rep, h, 2 * k - 2, &format!("k = {k}, round {round}, {what}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} graphs of treewidth 3..5 within 2k - 2 bends"))
}

fn balanced_lower_bound() -> Result<String, String> {
    for m in 3..=20 {
        let k = lbl1_min_k(m, m);
        ensure(k == m.div_ceil(2), || format!("m = {m}: {k}"))?;
    }
    Ok("lbl1(m, m) = ceil(m/2) for m = 3..20".into())
}

fn kmm3() -> Result<String, String> {
    let mut sizes = Vec::new();
    for m in 4..=6 {
        let n = kmm3_n(m);
        let rep = construct_kmm3(m).map_err(|e| e.to_string())?;
        let bs = rep.vertices().filter(|v| v.starts_with('b')).count();
        ensure(bs == n, || format!("m = {m}: {bs} B paths, formula gives {n}"))?;
        verified(&rep, &gen_complete_bipartite(m, n), m - 1, &format!("K_{{{m},{n}}}"))?;
        sizes.push(format!("K_{{{m},{n}}}"));
    }
    let rep = construct_kmm3_with_n(4, 12).map_err(|e| e.to_string())?;
    verified(&rep, &gen_complete_bipartite(4, 12), 3, "K_{4,12}")?;
    Ok(format!("{} and K_{{4,12}} with m - 1 bends", sizes.join(", ")))
}

fn m4() -> Result<String, String> {
    let rep = construct_m4(3).map_err(|e| e.to_string())?;
    verified(&rep, &gen_complete_bipartite(3, 39), 3, "K_{3,39}")?;
    let n = m4_n(4);
    ensure(n == (2 * 256 - 4 * 64 + 5 * 16 - 16 - 8) / 2, || format!("m4_n(4) = {n}"))?;
    let rep = construct_m4(4).map_err(|e| e.to_string())?;
    verified(&rep, &gen_complete_bipartite(4, n), 5, &format!("K_{{4,{n}}}"))?;
    Ok(format!("K_{{3,39}} with 3 bends, K_{{4,{n}}} with 5 bends"))
}

fn ladders() -> Result<String, String> {
    ensure(lbl2_min_k(3, 61) == 4, || format!("lbl2(3, 61) = {}", lbl2_min_k(3, 61)))?;
    ensure(lbl2_min_k(3, 60) <= 3, || format!("lbl2(3, 60) = {}", lbl2_min_k(3, 60)))?;
    let b = kmn_bend_bounds(3, 40);
    ensure((b.lower, b.upper) == (3, 4), || format!("K_{{3,40}}: {b:?}"))?;
    for n in 1..=200 {
        let want = match n {
            1 => 0,
            2..=4 => 1,
            _ => 2,
        };
        let b = kmn_bend_bounds(2, n);
        ensure((b.lower, b.upper) == (want, want), || format!("K_{{2,{n}}}: {b:?}"))?;
    }
    Ok("lbl2(3,61) = 4, lbl2(3,60) <= 3, K_{3,40} in [3,4], K_2 ladder for n <= 200".into())
}

fn blowup_audit() -> Result<String, String> {
    for m in 4..=6 {
        let bp = blowup_pretzel(m, m - 1).map_err(|e| e.to_string())?;
        let labels = bp.labels();
        let mut total = 0;
        for (i, u) in labels.iter().enumerate() {
            for v in &labels[i + 1..] {
                let c = crossings(bp.paths.get(u).unwrap(), bp.paths.get(v).unwrap());
                let want = if bp.same_class(u, v) { m * (m - 1) - 1 } else { m * (m - 1) };
                ensure(c == want, || format!("m = {m}: {u}, {v} cross {c} times, expected {want}"))?;
                total += c;
            }
        }
        ensure(total == total_a_crossings(m), || format!("m = {m}: total {total} vs {}", total_a_crossings(m)))?;
    }
    Ok("pairwise and total crossings match for m = 4, 5, 6".into())
}

fn a_crossings(rep: &Rep) -> usize {
    let a: Vec<&Path> = rep.iter().filter(|(v, _)| v.starts_with('a')).map(|(_, p)| p).collect();
    (0..a.len()).flat_map(|i| (i + 1..a.len()).map(move |j| (i, j))).map(|(i, j)| crossings(a[i], a[j])).sum()
}

fn c_inequality() -> Result<String, String> {
    let rep = construct_m4(3).map_err(|e| e.to_string())?;
    let c = a_crossings(&rep);
    ensure(c_inequality_check(3, 39, rep.max_bends(), c), || format!("m4(3): c = {c}"))?;
    for m in 1..=4 {
        for n in 1..=20 {
            let rep = construct_comb(m, n);
            let c = a_crossings(&rep);
            ensure(c_inequality_check(m, n, rep.max_bends(), c), || format!("comb({m}, {n}): c = {c}"))?;
        }
    }
    Ok(format!("holds on m4(3) (c = {c}) and all combs with m <= 4, n <= 20"))
}

fn exact_oracle() -> Result<String, String> {
    let mut graphs = 0;
    for n in 1..=6 {
        for g in all_graphs(n) {
            let interval = is_interval_graph(&g).map_err(|e| e.to_string())?;
            let r = exact_bend_number(&g, &SearchBudget::new(0)).map_err(|e| e.to_string())?;
            let zero = match r {
                BendNumber::Exact { k: 0, .. } => true,
                BendNumber::LowerBoundOnly(1) => false,
                other => return Err(format!("no answer for {g:?}: {other:?}")),
            };
            ensure(zero == interval, || format!("search says {zero}, recognition says {interval}: {g:?}"))?;
            graphs += 1;
        }
    }
    for (name, g) in [("C4", gen_cycle(4)), ("K_{2,3}", gen_complete_bipartite(2, 3))] {
        match exact_bend_number(&g, &SearchBudget::new(1)).map_err(|e| e.to_string())? {
            BendNumber::Exact { k: 1, rep } => verified(&rep, &g, 1, name)?,
            other => return Err(format!("{name}: {other:?}")),
        }
    }
    Ok(format!("{graphs} graphs on <= 6 vertices agree; C4 and K_{{2,3}} need 1 bend"))
}

fn reduction() -> Result<String, String> {
    let mut rng = seeded(14);
    let mut formulas = vec![parse_formula("x1 x2 x3\nx1 x3 x4\nx2 x3 x4").map_err(|e| e.to_string())?];
    let mut assignments = vec![None];
    for _ in 0..20 {
        let (vars, clauses) = (rng.gen_range(3..=8), rng.gen_range(1..=5));
        let (f, a) = random_planted_formula(&mut rng, vars, clauses);
        formulas.push(f);
        assignments.push(Some(a));
    }
    for (f, a) in formulas.iter().zip(assignments) {
        let a = match a {
            Some(a) => a,
            None => brute_force_one_in_three(f).map_err(|e| e.to_string())?.ok_or("example is unsatisfiable")?,
        };
        let rg = build_reduction_graph(f);
        let want = 13 * f.clauses.len() + f.variables.len() + 31;
        ensure(rg.graph.vertex_count() == want, || format!("{} vertices, expected {want}", rg.graph.vertex_count()))?;
        let rep = representation_from_assignment(f, &a).map_err(|e| e.to_string())?;
        verified(&rep, &rg.graph, 1, &format!("formula\n{f}"))?;
    }
    Ok("21 formulas give single-bend representations of G_F".into())
}

fn interval_export() -> Result<String, String> {
    let mut reps: Vec<(String, Rep)> = vec![
        ("comb(3, 10)".into(), construct_comb(3, 10)),
        ("kmm3(5)".into(), construct_kmm3(5).map_err(|e| e.to_string())?),
        ("m4(3)".into(), construct_m4(3).map_err(|e| e.to_string())?),
    ];
    let grid = gen_triangular_grid(4, 5, None);
    let cover = clique_cover_global(&grid, Some(CoverHint::TriangularGrid));
    reps.push(("triangular 4x5".into(), construct_from_global_cover(&grid, &cover).map_err(|e| e.to_string())?));
    let mut rng = seeded(15);
    for i in 0..5 {
        let g = random_degenerate(14, 3, &mut rng);
        reps.push((
            format!("degenerate {i}"),
            construct_degeneracy(&g, &degeneracy_order(&g)).map_err(|e| e.to_string())?,
        ));
        let (t, seq) = random_ktree(12, 3, &mut rng);
        reps.push((format!("3-tree {i}"), construct_treewidth(&t, &seq).map_err(|e| e.to_string())?));
    }
    let f = parse_formula("x1 x2 x3\nx1 x3 x4\nx2 x3 x4").map_err(|e| e.to_string())?;
    let a = brute_force_one_in_three(&f).map_err(|e| e.to_string())?.ok_or("unsatisfiable")?;
    reps.push(("reduction".into(), representation_from_assignment(&f, &a).map_err(|e| e.to_string())?));
    for (name, rep) in &reps {
        let iv = to_interval_representation(rep);
        ensure(iv.overlap_graph().edge_set() == intersection_graph(rep).edge_set(), || {
            format!("{name}: graphs differ")
        })?;
        for (v, p) in rep.iter() {
            let k = iv.intervals.get(v).map_or(0, Vec::len);
            ensure(k <= p.bends() + 1, || format!("{name}: {v} has {k} intervals and {} bends", p.bends()))?;
        }
    }
    Ok(format!("{} representations exported with <= bends + 1 intervals", reps.len()))
}

fn main() -> ExitCode {
    let checks: [(&str, Check, Duration); 15] = [
        ("pretzel tightness", pretzel_tightness, Duration::from_secs(1)),
        ("crossing bound", crossing_bound, Duration::from_secs(30)),
        ("triangular grids, 2 bends from 3 families", triangular_grids, Duration::from_secs(5)),
        ("edge colouring, chi' - 1 bends", edge_colorings, Duration::from_secs(10)),
        ("degeneracy, 2dg - 1 bends", degeneracy, Duration::from_secs(30)),
        ("treewidth, 2k - 2 bends", treewidth, Duration::from_secs(30)),
        ("balanced lower bound", balanced_lower_bound, Duration::from_secs(1)),
        ("staircases through blown-up pretzels, m - 1 bends", kmm3, Duration::from_secs(10)),
        ("seeds and snakes, 2m - 3 bends", m4, Duration::from_secs(60)),
        ("K_2 and K_3 ladders", ladders, Duration::from_secs(1)),
        ("blown-up pretzel crossing audit", blowup_audit, Duration::from_secs(5)),
        ("crossing-count inequality", c_inequality, Duration::from_secs(5)),
        ("exact oracle", exact_oracle, Duration::from_secs(120)),
        ("reduction end to end", reduction, Duration::from_secs(30)),
        ("interval export", interval_export, Duration::from_secs(10)),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check, limit)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > *limit => Err(format!("took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
