mod common;

use amalgadim::amalgam::{amalgamate, Embedding, Part, Provenance};
use amalgadim::audit::random_isometric_amalgam;
use amalgadim::family::{generate, FamilySpec};
use amalgadim::io::{format_host, parse_graph, read_amalgam, write_amalgam};
use amalgadim::{Error, Graph};
use proptest::prelude::*;

fn spec(s: &str) -> Graph {
    generate(&FamilySpec::parse(&[s]).unwrap()).unwrap()
}

#[test]
fn one_plus_one_is_c5_and_not_isometric() {
    let j = Graph::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
    let p3 = spec("path:3");
    let p4 = spec("path:4");
    let e1 = Embedding::from_names(&j, &p3, &[("a", "u1"), ("b", "u3")]).unwrap();
    let e2 = Embedding::from_names(&j, &p4, &[("a", "u1"), ("b", "u4")]).unwrap();
    let am = amalgamate(j, vec![Part::new("1", p3, e1), Part::new("2", p4, e2)]).unwrap();
    assert_eq!(am.host().order(), 5);
    assert!(am.host().is_isomorphic(&spec("cycle:5")));
    let v = am.isometry_violation().unwrap();
    let mut d = [v.distances.0.unwrap(), v.distances.1.unwrap()];
    d.sort();
    assert_eq!(d, [2, 3]);
}

#[test]
fn two_k4_over_k2() {
    let j = spec("complete:2");
    let parts = (1..=2)
        .map(|i| {
            let g = spec("complete:4");
            let emb = Embedding::by_name(&j, &g).unwrap();
            Part::new(i.to_string(), g, emb)
        })
        .collect();
    let am = amalgamate(j, parts).unwrap();
    assert_eq!((am.host().order(), am.host().size()), (6, 11));
    assert!(am.is_isometric_family());
    assert!(am.diam2_sufficiency());
}

#[test]
fn rejects_non_induced_embedding() {
    let j = spec("complete:2");
    let g = spec("empty:3");
    let emb = Embedding::by_name(&j, &g).unwrap();
    let err = amalgamate(j, vec![Part::new("1", g, emb)]).unwrap_err();
    assert!(matches!(err, Error::InvalidEmbedding(_)));
}

#[test]
fn spec_file_round_trip() {
    let mut rng = common::rng(11);
    let am = common::random_amalgam(&mut rng, 4);
    let dir = tempfile::tempdir().unwrap();
    let path = write_amalgam(&am, &dir.path().join("a.amg")).unwrap();
    let back = read_amalgam(&path).unwrap();
    assert_eq!(format_host(&back), format_host(&am));
    let host = parse_graph(&format_host(&am), "host").unwrap();
    assert_eq!(host.names(), am.host().names());
    assert_eq!(host.edges(), am.host().edges());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn host_order_formula(seed: u64) {
        let mut rng = common::rng(seed);
        let am = common::random_amalgam(&mut rng, 5);
        let k = am.j().order();
        let expected = am.parts().iter().map(|p| p.graph.order() - k).sum::<usize>() + k;
        prop_assert_eq!(am.host().order(), expected);
        prop_assert!(am.host().is_connected() || k == 0);
    }

    #[test]
    fn provenance_partitions_host(seed: u64) {
        let mut rng = common::rng(seed);
        let am = common::random_amalgam(&mut rng, 5);
        let mut shared = Vec::new();
        let mut owned = vec![0usize; am.n_parts()];
        for v in 0..am.host().order() {
            match am.provenance(v) {
                Provenance::Shared(jv) => {
                    prop_assert_eq!(am.j_to_host(*jv), v);
                    shared.push(v);
                }
                Provenance::Part { part, vertex } => {
                    prop_assert_eq!(am.to_host(*part, *vertex), v);
                    owned[*part] += 1;
                }
            }
        }
        prop_assert_eq!(&shared, &am.shared());
        prop_assert_eq!(shared.len(), am.j().order());
        for (i, p) in am.parts().iter().enumerate() {
            prop_assert_eq!(owned[i], p.graph.order() - am.j().order());
        }
    }

    #[test]
    fn isometricity_equivalence(seed: u64) {
        let mut rng = common::rng(seed);
        let am = common::random_amalgam(&mut rng, 5);
        let all = (0..am.n_parts()).all(|i| am.part_is_isometric_in_host(i));
        prop_assert_eq!(all, am.is_isometric_family());
        if am.diam2_sufficiency() {
            prop_assert!(am.is_isometric_family());
        }
    }

    #[test]
    fn isometric_bipartite_parts_give_bipartite_host(seed: u64) {
        let mut rng = common::rng(seed);
        let am = random_isometric_amalgam(&mut rng, 12).unwrap();
        prop_assert!(am.host().is_connected());
        if am.parts().iter().all(|p| p.graph.is_bipartite()) {
            prop_assert!(am.host().is_bipartite());
        }
    }
}
