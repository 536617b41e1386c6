#![allow(dead_code)]

use std::collections::VecDeque;

use amalgadim::amalgam::{amalgamate, Amalgam, Embedding, Part};
use amalgadim::audit::random_connected_graph;
use amalgadim::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Arbitrary graph, possibly disconnected.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let vs = names("v", n);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((vs[a].clone(), vs[b].clone()));
            }
        }
    }
    Graph::new(vs, edges).unwrap()
}

pub fn connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    random_connected_graph(rng, &names("v", n), p).unwrap()
}

/// Connected graph containing `j` as the induced subgraph on its own names,
/// plus `extra` vertices named `<tag>x1..`.
pub fn part_over(rng: &mut ChaCha8Rng, j: &Graph, extra: usize, tag: &str, p: f64) -> Graph {
    loop {
        let mut vs: Vec<String> = j.names().to_vec();
        vs.extend(names(&format!("{tag}x"), extra));
        let mut edges: Vec<(String, String)> = j
            .edges()
            .iter()
            .map(|&(a, b)| (j.name(a).to_string(), j.name(b).to_string()))
            .collect();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                if b >= j.order() && rng.gen_bool(p) {
                    edges.push((vs[a].clone(), vs[b].clone()));
                }
            }
        }
        let g = Graph::new(vs, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Amalgam of 2 or 3 random connected parts over a random J; isometry is not enforced.
pub fn random_amalgam(rng: &mut ChaCha8Rng, max_extra: usize) -> Amalgam {
    let k = rng.gen_range(1..=3);
    let j = random_graph(rng, k, 0.5)
        .relabel(|s| s.replace('v', "j"))
        .unwrap();
    let n_parts = rng.gen_range(2..=3);
    let parts = (1..=n_parts)
        .map(|i| {
            let extra = rng.gen_range(1..=max_extra);
            let g = part_over(rng, &j, extra, "", 0.45);
            let emb = Embedding::by_name(&j, &g).unwrap();
            Part::new(i.to_string(), g, emb)
        })
        .collect();
    amalgamate(j, parts).unwrap()
}

/// Hop distances by a breadth-first search of its own.
pub fn oracle_distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    (0..g.order())
        .map(|s| {
            let mut d = vec![None; g.order()];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in g.neighbors(u) {
                    if d[w].is_none() {
                        d[w] = Some(d[u].unwrap() + 1);
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn oracle_is_local_metric_set(g: &Graph, dist: &[Vec<Option<u32>>], set: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| set.iter().any(|&w| dist[w][u] != dist[w][v]))
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every subset of size `k`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut c: Vec<usize> = (0..k).collect();
    let mut out = vec![c.clone()];
    while k > 0 && next_combination(&mut c, n) {
        out.push(c.clone());
    }
    out
}

/// Exhaustive `dim_l` and every minimum local metric set, by increasing size.
pub fn oracle_bases(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let dist = oracle_distances(g);
    for k in 0..=g.order() {
        let found: Vec<Vec<usize>> = subsets(g.order(), k)
            .into_iter()
            .filter(|s| oracle_is_local_metric_set(g, &dist, s))
            .collect();
        if !found.is_empty() {
            return (k, found);
        }
    }
    unreachable!("the whole vertex set distinguishes every edge")
}

pub fn oracle_dim(g: &Graph) -> usize {
    oracle_bases(g).0
}
