use proptest::prelude::*;

use epg::bounds::{kmn_bend_bounds, lbl1_min_k, lbl2_min_k, max_crossings_bound};
use epg::construct::to_interval_representation;
use epg::grid::{crossings, normalize_path};
use epg::rep::{compress_coordinates, from_json, to_json};
use epg::verify::intersection_graph;
use epg::{format_graph, parse_graph, Graph, GridPath, GridPoint, Representation, Symmetry};

/// A path of at most `max_bends` bends whose steps alternate axis.
fn path_strategy(max_bends: usize) -> impl Strategy<Value = GridPath<i64>> {
    (
        any::<bool>(),
        -12i64..=12,
        -12i64..=12,
        prop::collection::vec(1i64..=6, 1..=max_bends + 1),
        prop::collection::vec(any::<bool>(), max_bends + 1),
    )
        .prop_map(|(horizontal, x, y, lengths, signs)| {
            let mut p = GridPoint::new(x, y);
            let mut pts = vec![p.clone()];
            let mut h = horizontal;
            for (len, neg) in lengths.iter().zip(&signs) {
                let d = if *neg { -len } else { *len };
                if h {
                    p.x += d;
                } else {
                    p.y += d;
                }
                pts.push(p.clone());
                h = !h;
            }
            normalize_path(&pts).unwrap()
        })
}

fn rep_strategy() -> impl Strategy<Value = Representation<i64>> {
    prop::collection::vec(path_strategy(4), 1..=7)
        .prop_map(|paths| paths.into_iter().enumerate().map(|(i, p)| (format!("v{i}"), p)).collect())
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..=8).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new();
            for i in 0..n {
                g.add_vertex(&format!("u{i}"));
            }
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            for ((i, j), keep) in pairs.zip(bits) {
                if keep {
                    g.add_edge_idx(i, j);
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn symmetries_preserve_the_graph(rep in rep_strategy(), dx in -20i64..20, dy in -20i64..20) {
        let g = intersection_graph(&rep);
        for sym in Symmetry::ALL {
            prop_assert_eq!(&intersection_graph(&rep.transform(sym)), &g);
        }
        prop_assert_eq!(&intersection_graph(&rep.translate(&dx, &dy)), &g);
        prop_assert_eq!(&intersection_graph(&compress_coordinates(&rep)), &g);
    }

    #[test]
    fn compression_keeps_bends(rep in rep_strategy()) {
        let c = compress_coordinates(&rep);
        for (v, p) in rep.iter() {
            prop_assert_eq!(c.get(v).unwrap().bends(), p.bends());
        }
    }

    #[test]
    fn crossings_are_bounded(p in path_strategy(7), q in path_strategy(7)) {
        let k = p.bends().max(q.bends());
        let c = crossings(&p, &q);
        prop_assert!(c <= max_crossings_bound(k), "{} crossings at {} bends", c, k);
        prop_assert_eq!(c, crossings(&q, &p));
        prop_assert_eq!(c, crossings(&p.reversed(), &q));
    }

    #[test]
    fn json_round_trip(rep in rep_strategy()) {
        prop_assert_eq!(from_json(&to_json(&rep)).unwrap(), rep);
    }

    #[test]
    fn graph_text_round_trip(g in graph_strategy()) {
        prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }

    #[test]
    fn bounds_are_consistent(m in 1usize..=10, n in 1usize..=300) {
        let b = kmn_bend_bounds(m, n);
        prop_assert!(b.lower <= b.upper, "K_{{{},{}}}: {:?}", m, n, b);
        prop_assert_eq!(b, kmn_bend_bounds(n, m));
        prop_assert!(lbl1_min_k(m, n) <= lbl1_min_k(m, n + 1));
        prop_assert!(lbl2_min_k(m, n) <= lbl2_min_k(m, n + 1));
    }

    #[test]
    fn interval_export_matches(rep in rep_strategy()) {
        let iv = to_interval_representation(&rep);
        prop_assert_eq!(iv.overlap_graph().edge_set(), intersection_graph(&rep).edge_set());
        for (v, p) in rep.iter() {
            prop_assert!(iv.intervals.get(v).map_or(0, Vec::len) <= p.bends() + 1);
        }
    }
}
