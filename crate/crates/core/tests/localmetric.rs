mod common;

use amalgadim::amalgam::{amalgamate, Embedding, Part};
use amalgadim::constructions::k4_gadget;
use amalgadim::family::{generate, FamilySpec};
use amalgadim::hitting::SearchOptions;
use amalgadim::localmetric::{
    enumerate_minimum_bases, is_local_metric_set, local_metric_dimension, vertex_amalgam_dimension,
    vertex_in_some_basis,
};
use amalgadim::Graph;
use proptest::prelude::*;

fn opts() -> SearchOptions {
    SearchOptions::default()
}

#[test]
fn k4_gadget_has_a_single_basis() {
    let g = k4_gadget().unwrap();
    let en = enumerate_minimum_bases(&g, 100, &opts()).unwrap();
    assert_eq!(en.bases.len(), 1);
    assert_eq!(g.set_names(&en.bases[0]), ["v", "w"]);
    let (k, bases) = common::oracle_bases(&g);
    assert_eq!((k, bases), (en.size, en.bases));
}

#[test]
fn theorems_hold_on_families() {
    let specs = [
        "path:2",
        "path:9",
        "cycle:4",
        "cycle:5",
        "cycle:8",
        "cycle:9",
        "complete:3",
        "complete:6",
        "fan:1,5",
        "fan:2,4",
        "wheel:1,5",
        "wheel:1,6",
        "prism:4",
        "prism:5",
        "spider:2^3",
        "spider:1,2,3",
    ];
    for s in specs {
        let g = generate(&FamilySpec::parse(&[s]).unwrap()).unwrap();
        let d = local_metric_dimension(&g, &opts()).unwrap().size;
        assert_eq!(d == 1, g.is_bipartite(), "{s}");
        assert_eq!(d == g.order() - 1, g.is_complete(), "{s}");
        assert_eq!(d, common::oracle_dim(&g), "{s}");
    }
}

#[test]
fn fan_formula() {
    for m in 6..=13 {
        let g = generate(&FamilySpec::Fan(1, m)).unwrap();
        assert_eq!(
            local_metric_dimension(&g, &opts()).unwrap().size,
            (m - 1).div_ceil(4),
            "m={m}"
        );
    }
}

fn glue_at_vertex(parts: &[(Graph, usize)]) -> Graph {
    let j = Graph::new(["c"], Vec::<(&str, &str)>::new()).unwrap();
    let parts = parts
        .iter()
        .enumerate()
        .map(|(i, (g, v))| {
            let emb = Embedding::from_names(&j, g, &[("c", g.name(*v))]).unwrap();
            Part::new((i + 1).to_string(), g.clone(), emb)
        })
        .collect();
    amalgamate(j, parts).unwrap().host().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn branch_and_bound_matches_oracle(seed: u64, n in 1usize..=10, p in 0.15f64..0.8) {
        let mut rng = common::rng(seed);
        let g = common::connected_graph(&mut rng, n, p);
        let b = local_metric_dimension(&g, &opts()).unwrap();
        let (k, bases) = common::oracle_bases(&g);
        prop_assert_eq!(b.size, k);
        prop_assert_eq!(&b.witness, &bases[0]);
        prop_assert!(is_local_metric_set(&g, &b.witness).unwrap());
    }

    #[test]
    fn theorem_characterizations(seed: u64, n in 2usize..=12, p in 0.15f64..0.9) {
        let mut rng = common::rng(seed);
        let g = common::connected_graph(&mut rng, n, p);
        let d = local_metric_dimension(&g, &opts()).unwrap().size;
        prop_assert_eq!(d == 1, g.is_bipartite());
        prop_assert!(d < n);
        prop_assert_eq!(d == n - 1, g.is_complete());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_oracle(seed: u64, n in 2usize..=8) {
        let mut rng = common::rng(seed);
        let g = common::connected_graph(&mut rng, n, 0.4);
        let en = enumerate_minimum_bases(&g, 10_000, &opts()).unwrap();
        let (k, bases) = common::oracle_bases(&g);
        prop_assert_eq!(en.size, k);
        prop_assert_eq!(&en.bases, &bases);
        for v in 0..n {
            let member = bases.iter().any(|b| b.contains(&v));
            prop_assert_eq!(vertex_in_some_basis(&g, v, &opts()).unwrap(), member);
        }
    }

    #[test]
    fn witnesses_independent_of_workers(seed: u64, n in 6usize..=14) {
        let mut rng = common::rng(seed);
        let g = common::connected_graph(&mut rng, n, 0.35);
        let one = local_metric_dimension(&g, &opts()).unwrap();
        for w in [2, 8] {
            let other = local_metric_dimension(&g, &opts().with_workers(w)).unwrap();
            prop_assert_eq!(&other.witness, &one.witness);
        }
    }

    #[test]
    fn vertex_amalgam_formula_matches_direct(seed: u64) {
        let mut rng = common::rng(seed);
        let count = 2 + (seed % 2) as usize;
        let parts: Vec<(Graph, usize)> = (0..count)
            .map(|_| {
                let n = 2 + (rand::Rng::gen_range(&mut rng, 0..4));
                let g = common::connected_graph(&mut rng, n, 0.5);
                let v = rand::Rng::gen_range(&mut rng, 0..n);
                (g, v)
            })
            .collect();
        let h = glue_at_vertex(&parts);
        prop_assert_eq!(
            vertex_amalgam_dimension(&parts, &opts()).unwrap(),
            local_metric_dimension(&h, &opts()).unwrap().size
        );
    }
}
