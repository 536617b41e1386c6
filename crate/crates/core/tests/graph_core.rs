mod common;

use amalgadim::family::{generate, FamilySpec};
use amalgadim::graph::Bipartiteness;
use amalgadim::io::{format_graph, parse_graph};
use amalgadim::Graph;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (1usize..15).prop_map(FamilySpec::Path),
        (3usize..15).prop_map(FamilySpec::Cycle),
        (1usize..9).prop_map(FamilySpec::Complete),
        (1usize..9).prop_map(FamilySpec::Empty),
        (1usize..4, 1usize..12).prop_map(|(m, n)| FamilySpec::Fan(m, n)),
        (1usize..4, 3usize..12).prop_map(|(m, n)| FamilySpec::Wheel(m, n)),
        (3usize..12).prop_map(FamilySpec::Prism),
        prop::collection::vec((1usize..4, 1usize..3), 2..4)
            .prop_filter("head degree >= 3", |legs| legs
                .iter()
                .map(|l| l.1)
                .sum::<usize>()
                >= 3)
            .prop_map(FamilySpec::Spider),
    ]
}

fn closed_form(spec: &FamilySpec) -> (usize, usize) {
    match spec {
        FamilySpec::Path(n) => (*n, n - 1),
        FamilySpec::Cycle(n) => (*n, *n),
        FamilySpec::Complete(n) => (*n, n * (n - 1) / 2),
        FamilySpec::Empty(n) => (*n, 0),
        FamilySpec::Fan(m, n) => (m + n, (n - 1) + m * n),
        FamilySpec::Wheel(m, n) => (m + n, n + m * n),
        FamilySpec::Prism(n) => (2 * n, 3 * n),
        FamilySpec::Spider(legs) => {
            let v = 1 + legs.iter().map(|&(len, mult)| len * mult).sum::<usize>();
            (v, v - 1)
        }
        FamilySpec::Join(..) => unreachable!(),
    }
}

#[test]
fn spec_examples() {
    let fan = generate(&FamilySpec::parse(&["fan", "1", "9"]).unwrap()).unwrap();
    assert_eq!((fan.order(), fan.size()), (10, 17));
    let spider = generate(&FamilySpec::parse(&["spider:2^3"]).unwrap()).unwrap();
    assert_eq!(spider.order(), 7);
    assert_eq!(spider.degree(spider.require("h").unwrap()), 3);
    let prism = generate(&FamilySpec::Prism(8)).unwrap();
    assert_eq!((prism.order(), prism.size()), (16, 24));
    let k5 = generate(&FamilySpec::Complete(5)).unwrap();
    assert_eq!(
        k5.delete_named_edges(&[("u1", "u3"), ("u1", "u4")])
            .unwrap()
            .size(),
        8
    );
    let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
    let c5v = c5.relabel(|s| s.replace('u', "v")).unwrap();
    let k2 = c5v
        .induced_subgraph(&c5v.vertex_set(&["v3", "v4"]).unwrap())
        .unwrap();
    assert_eq!((k2.order(), k2.size()), (2, 1));
    let p5 = c5v.delete_named_edges(&[("v3", "v4")]).unwrap();
    assert!(p5.is_isomorphic(&generate(&FamilySpec::Path(5)).unwrap()));
}

proptest! {
    #[test]
    fn families_match_closed_forms(spec in family()) {
        let g = generate(&spec).unwrap();
        prop_assert_eq!((g.order(), g.size()), closed_form(&spec));
        prop_assert!(g.is_connected() || matches!(spec, FamilySpec::Empty(n) if n > 1));
    }

    #[test]
    fn bipartite_parity_matches_coloring(seed: u64, n in 2usize..12) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, n, 0.3);
        let dist = common::oracle_distances(&g);
        match g.bipartiteness() {
            Bipartiteness::Bipartite(side) => {
                for u in 0..n {
                    for v in 0..n {
                        if let Some(d) = dist[u][v] {
                            prop_assert_eq!(d % 2 == 1, side[u] != side[v]);
                        }
                    }
                }
            }
            Bipartiteness::OddCycle(c) => {
                prop_assert!(c.len() % 2 == 1);
                for i in 0..c.len() {
                    prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
        }
    }

    #[test]
    fn distances_and_diameter_match_oracle(seed: u64, n in 1usize..12) {
        let mut rng = common::rng(seed);
        let g = common::connected_graph(&mut rng, n, 0.3);
        let dist = common::oracle_distances(&g);
        let mut max = 0;
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(g.dist(u, v), dist[u][v]);
                max = max.max(dist[u][v].unwrap());
            }
        }
        prop_assert_eq!(g.diameter().unwrap(), max);
    }

    #[test]
    fn chromatic_two_iff_bipartite_with_edge(seed: u64, n in 1usize..10) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, n, 0.35);
        let col = g.chromatic_number(20).unwrap();
        prop_assert_eq!(col.chromatic_number == 2, g.is_bipartite() && g.size() > 0);
        for &(u, v) in g.edges() {
            prop_assert_ne!(col.colors[u], col.colors[v]);
        }
    }

    #[test]
    fn dump_round_trip(seed: u64, n in 1usize..12) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, n, 0.3);
        let back = parse_graph(&format_graph(&g, &["dump".to_string()]), "dump").unwrap();
        prop_assert_eq!(back.names(), g.names());
        prop_assert_eq!(back.edges(), g.edges());
        let rebuilt = Graph::new(
            g.names().to_vec(),
            g.edges().iter().map(|&(a, b)| (g.name(a), g.name(b))).collect::<Vec<_>>(),
        ).unwrap();
        prop_assert_eq!(format_graph(&rebuilt, &[]), format_graph(&g, &[]));
    }
}
