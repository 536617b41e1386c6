//! Immutable simple undirected graphs with named vertices.
//!
//! Vertices are stored in byte-lexicographic order of their names and are
//! addressed by their position in that order. All set-valued results in the
//! crate are sorted vectors of positions, which makes them sorted by name too.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Position of a vertex in the canonical (name-sorted) order.
pub type Vertex = usize;
/// An edge `(u, v)` with `u < v`.
pub type Edge = (Vertex, Vertex);

/// Marker for unreachable pairs in raw distance rows.
pub const UNREACHABLE: u32 = u32::MAX;
/// Graphs up to this order get their full distance table at construction.
pub const EAGER_DISTANCE_LIMIT: usize = 2048;
/// Default vertex cap for [`Graph::chromatic_number`].
pub const DEFAULT_CHROMATIC_CAP: usize = 20;

/// Breadth-first hop distances, one row per source vertex.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    adj: Arc<[Vec<Vertex>]>,
    rows: Arc<[OnceLock<Box<[u32]>>]>,
}

impl DistanceTable {
    fn new(adj: Arc<[Vec<Vertex>]>, eager: bool) -> Self {
        let rows: Arc<[OnceLock<Box<[u32]>>]> = (0..adj.len()).map(|_| OnceLock::new()).collect();
        let table = DistanceTable { adj, rows };
        if eager {
            for v in 0..table.adj.len() {
                table.row(v);
            }
        }
        table
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Distances from `source` to every vertex; [`UNREACHABLE`] marks other components.
    pub fn row(&self, source: Vertex) -> &[u32] {
        self.rows[source].get_or_init(|| bfs(&self.adj, source))
    }

    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.row(u)[v]
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        match self.raw(u, v) {
            UNREACHABLE => None,
            d => Some(d),
        }
    }
}

fn bfs(adj: &[Vec<Vertex>], source: Vertex) -> Box<[u32]> {
    let mut dist = vec![UNREACHABLE; adj.len()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist.into_boxed_slice()
}

/// Result of a bipartiteness test, with a checkable witness either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Side (0 or 1) of every vertex; each component's smallest vertex is on side 0.
    Bipartite(Vec<u8>),
    /// A closed walk of odd length, listed as distinct vertices `c0 .. ck` with `ck ~ c0`.
    OddCycle(Vec<Vertex>),
}

/// A minimum proper coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub chromatic_number: usize,
    /// Color of each vertex; colors are numbered by first appearance in vertex order.
    pub colors: Vec<usize>,
}

impl Coloring {
    /// Color classes, the class of the smallest vertex first.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.chromatic_number];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Arc<[Vec<Vertex>]>,
    edges: Vec<Edge>,
    dist: DistanceTable,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for Graph {}

pub(crate) fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c.is_control()) {
        return Err(Error::BadName(name.to_string()));
    }
    Ok(())
}

impl Graph {
    /// Builds the canonical graph on the given names and name-pair edges.
    pub fn new<V, E, A, B>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for name in &names {
            check_name(name)?;
        }
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let index: HashMap<String, Vertex> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index
                .get(a)
                .ok_or_else(|| Error::UnknownEndpoint(a.to_string()))?;
            let v = *index
                .get(b)
                .ok_or_else(|| Error::UnknownEndpoint(b.to_string()))?;
            if u == v {
                return Err(Error::SelfLoop(a.to_string()));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(names[e.0].clone(), names[e.1].clone()));
            }
        }
        Ok(Self::assemble(names, index, seen.into_iter().collect()))
    }

    fn assemble(names: Vec<String>, index: HashMap<String, Vertex>, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); names.len()];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let adj: Arc<[Vec<Vertex>]> = adj.into();
        let dist = DistanceTable::new(adj.clone(), names.len() <= EAGER_DISTANCE_LIMIT);
        Graph {
            names,
            index,
            adj,
            edges,
            dist,
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    /// Like [`Graph::vertex`], failing with `UnknownVertex`.
    pub fn require(&self, name: &str) -> Result<Vertex> {
        self.vertex(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Resolves a list of names into a sorted, deduplicated vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<Vertex>> {
        let mut set = names
            .iter()
            .map(|n| self.require(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        set.sort_unstable();
        set.dedup();
        Ok(set)
    }

    pub fn set_names(&self, set: &[Vertex]) -> Vec<String> {
        set.iter().map(|&v| self.names[v].clone()).collect()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Looks up the edge between two named vertices.
    pub fn edge(&self, a: &str, b: &str) -> Result<Edge> {
        let (u, v) = (self.require(a)?, self.require(b)?);
        if !self.has_edge(u, v) {
            return Err(Error::UnknownEdge(a.to_string(), b.to_string()));
        }
        Ok((u.min(v), u.max(v)))
    }

    pub fn edge_names(&self, e: Edge) -> (&str, &str) {
        (&self.names[e.0], &self.names[e.1])
    }

    pub fn distances(&self) -> &DistanceTable {
        &self.dist
    }

    /// Hop distance, or `None` across components.
    pub fn dist(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.dist.get(u, v)
    }

    /// Raw hop distance; [`UNREACHABLE`] across components.
    pub fn d(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist.raw(u, v)
    }

    /// `min` over `set` of `d(u, ·)`. Fails on an empty set.
    pub fn dist_to_set(&self, u: Vertex, set: &[Vertex]) -> Result<u32> {
        let row = self.dist.row(u);
        set.iter()
            .map(|&w| row[w])
            .min()
            .ok_or_else(|| Error::BadParameter("distance to an empty vertex set".into()))
    }

    /// Whether `w` sees the endpoints of `e` at different distances.
    pub fn distinguishes(&self, w: Vertex, e: Edge) -> bool {
        let row = self.dist.row(w);
        row[e.0] != row[e.1]
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.dist.row(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn bipartiteness(&self) -> Bipartiteness {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        parent[w] = u;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Bipartiteness::OddCycle(odd_cycle(&parent, u, w));
                    }
                }
            }
        }
        Bipartiteness::Bipartite(side)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartiteness(), Bipartiteness::Bipartite(_))
    }

    pub fn diameter(&self) -> Result<u32> {
        self.require_connected()?;
        Ok((0..self.order())
            .flat_map(|u| self.dist.row(u).iter().copied())
            .max()
            .unwrap_or(0))
    }

    /// Exact chromatic number by backtracking, for graphs of at most `cap` vertices.
    pub fn chromatic_number(&self, cap: usize) -> Result<Coloring> {
        let n = self.order();
        if n > cap {
            return Err(Error::SizeLimitExceeded { size: n, cap });
        }
        if n == 0 {
            return Ok(Coloring {
                chromatic_number: 0,
                colors: Vec::new(),
            });
        }
        // Largest-degree-first order makes conflicts show up early.
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let lower = greedy_clique(self).max(1);
        for k in lower..=n {
            let mut colors = vec![usize::MAX; n];
            if color_rec(self, &order, 0, k, 0, &mut colors) {
                return Ok(canonical_coloring(colors));
            }
        }
        unreachable!("n colors always suffice")
    }

    /// The graph with the given edges removed; vertex names are kept.
    pub fn delete_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut drop = BTreeSet::new();
        for &(u, v) in edges {
            if u >= self.order() || v >= self.order() || !self.has_edge(u, v) {
                let name = |x: Vertex| self.names.get(x).cloned().unwrap_or_else(|| x.to_string());
                return Err(Error::UnknownEdge(name(u), name(v)));
            }
            drop.insert((u.min(v), u.max(v)));
        }
        let kept = self
            .edges
            .iter()
            .copied()
            .filter(|e| !drop.contains(e))
            .collect();
        Ok(Self::assemble(self.names.clone(), self.index.clone(), kept))
    }

    /// Name-based form of [`Graph::delete_edges`].
    pub fn delete_named_edges<S: AsRef<str>>(&self, edges: &[(S, S)]) -> Result<Graph> {
        let list = edges
            .iter()
            .map(|(a, b)| self.edge(a.as_ref(), b.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.delete_edges(&list)
    }

    /// Subgraph induced by `set`; names are kept.
    pub fn induced_subgraph(&self, set: &[Vertex]) -> Result<Graph> {
        let keep: BTreeSet<Vertex> = set.iter().copied().collect();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.order()) {
            return Err(Error::UnknownVertex(bad.to_string()));
        }
        let names: Vec<&str> = keep.iter().map(|&v| self.name(v)).collect();
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .filter(|(u, v)| keep.contains(u) && keep.contains(v))
            .map(|&e| self.edge_names(e))
            .collect();
        Graph::new(names.iter().map(|s| s.to_string()), edges)
    }

    /// Copy with every vertex renamed through `rename`.
    pub fn relabel(&self, rename: impl Fn(&str) -> String) -> Result<Graph> {
        let names: Vec<String> = self.names.iter().map(|n| rename(n)).collect();
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(u, v)| (names[u].clone(), names[v].clone()))
            .collect();
        Graph::new(names.clone(), edges)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * n.saturating_sub(1) / 2
    }

    /// Isomorphism test by backtracking over distance-profile classes.
    /// Intended for graphs of a few dozen vertices.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        isomorphism(self, other).is_some()
    }
}

fn odd_cycle(parent: &[usize], u: Vertex, w: Vertex) -> Vec<Vertex> {
    let path_to_root = |mut x: Vertex| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // Strip the common suffix, keeping the lowest common ancestor once.
    let (mut i, mut j) = (pu.len(), pw.len());
    while i > 1 && j > 1 && pu[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<Vertex> = pu[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for start in 0..g.order() {
        let mut clique = vec![start];
        let mut cands: Vec<Vertex> = g.neighbors(start).to_vec();
        cands.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in cands {
            if clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn color_rec(
    g: &Graph,
    order: &[Vertex],
    pos: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    let Some(&v) = order.get(pos) else {
        return true;
    };
    // New colors are interchangeable, so only the first unused one is tried.
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if color_rec(g, order, pos + 1, k, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

fn canonical_coloring(colors: Vec<usize>) -> Coloring {
    let mut relabel = HashMap::new();
    let colors: Vec<usize> = colors
        .into_iter()
        .map(|c| {
            let next = relabel.len();
            *relabel.entry(c).or_insert(next)
        })
        .collect();
    Coloring {
        chromatic_number: relabel.len(),
        colors,
    }
}

/// Finds a vertex bijection `a -> b` preserving adjacency, if one exists.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<Vertex>> {
    if a.order() != b.order() || a.size() != b.size() {
        return None;
    }
    let profile = |g: &Graph, v: Vertex| {
        let mut row: Vec<u32> = g.distances().row(v).to_vec();
        row.sort_unstable();
        (g.degree(v), row)
    };
    let pa: Vec<_> = (0..a.order()).map(|v| profile(a, v)).collect();
    let pb: Vec<_> = (0..b.order()).map(|v| profile(b, v)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    // Map vertices of `a` in BFS order so that each new vertex has mapped neighbors.
    let mut order = Vec::with_capacity(a.order());
    let mut seen = vec![false; a.order()];
    for s in 0..a.order() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in a.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        a: &Graph,
        b: &Graph,
        order: &[Vertex],
        pos: usize,
        pa: &[(usize, Vec<u32>)],
        pb: &[(usize, Vec<u32>)],
        map: &mut [Vertex],
        used: &mut [bool],
    ) -> bool {
        let Some(&u) = order.get(pos) else {
            return true;
        };
        for x in 0..b.order() {
            if used[x] || pa[u] != pb[x] {
                continue;
            }
            let ok = order[..pos]
                .iter()
                .all(|&w| a.has_edge(u, w) == b.has_edge(x, map[w]) && a.d(u, w) == b.d(x, map[w]));
            if ok {
                map[u] = x;
                used[x] = true;
                if rec(a, b, order, pos + 1, pa, pb, map, used) {
                    return true;
                }
                used[x] = false;
                map[u] = usize::MAX;
            }
        }
        false
    }
    if rec(a, b, &order, 0, &pa, &pb, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let names: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
        let edges: Vec<(String, String)> = (1..n)
            .map(|i| (names[i - 1].clone(), names[i].clone()))
            .collect();
        Graph::new(names, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (names[i].clone(), names[(i + 1) % n].clone()))
            .collect();
        Graph::new(names, edges).unwrap()
    }

    #[test]
    fn build_k2() {
        let g = Graph::new(["a", "b"], [("a", "b")]).unwrap();
        assert_eq!((g.order(), g.size()), (2, 1));
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::new(["a"], [("a", "a")]).unwrap_err(),
            Error::SelfLoop("a".into())
        );
        assert!(matches!(
            Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "b")]).unwrap_err(),
            Error::DuplicateEdge(..)
        ));
        assert!(matches!(
            Graph::new(["a", "b", "c"], [("a", "b"), ("b", "a")]).unwrap_err(),
            Error::DuplicateEdge(..)
        ));
        assert_eq!(
            Graph::new(["a", "a"], Vec::<(&str, &str)>::new()).unwrap_err(),
            Error::DuplicateVertex("a".into())
        );
        assert_eq!(
            Graph::new(["a"], [("a", "z")]).unwrap_err(),
            Error::UnknownEndpoint("z".into())
        );
        assert!(matches!(
            Graph::new(["a b"], Vec::<(&str, &str)>::new()).unwrap_err(),
            Error::BadName(_)
        ));
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let g = Graph::new(["u2", "u10", "u1"], [("u1", "u2")]).unwrap();
        assert_eq!(g.names(), ["u1", "u10", "u2"]);
    }

    #[test]
    fn distances() {
        let c5 = cycle(5);
        assert_eq!(
            c5.dist(c5.require("v1").unwrap(), c5.require("v3").unwrap()),
            Some(2)
        );
        let p4 = path(4);
        assert_eq!(
            p4.dist(p4.require("u1").unwrap(), p4.require("u4").unwrap()),
            Some(3)
        );
        let two = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]).unwrap();
        assert_eq!(two.dist(0, 2), None);
        assert_eq!(two.d(0, 2), UNREACHABLE);
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        let p7 = path(7);
        assert!(p7.is_connected());
        let Bipartiteness::Bipartite(side) = p7.bipartiteness() else {
            panic!("P7 is bipartite")
        };
        for &(u, v) in p7.edges() {
            assert_ne!(side[u], side[v]);
        }
        let c5 = cycle(5);
        match c5.bipartiteness() {
            Bipartiteness::OddCycle(c) => {
                assert_eq!(c.len(), 5);
                for i in 0..c.len() {
                    assert!(c5.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
        let two = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]).unwrap();
        assert!(!two.is_connected());
    }

    #[test]
    fn diameters() {
        assert_eq!(path(5).diameter().unwrap(), 4);
        assert_eq!(cycle(6).diameter().unwrap(), 3);
        let names: Vec<String> = (0..6).map(|i| format!("k{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
        assert_eq!(Graph::new(names, edges).unwrap().diameter().unwrap(), 1);
        let two = Graph::new(["a", "b", "c"], [("a", "b")]).unwrap();
        assert_eq!(two.diameter().unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn chromatic_numbers() {
        let empty = Graph::new(["a", "b", "c", "d", "e"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(empty.chromatic_number(20).unwrap().chromatic_number, 1);
        let c5 = cycle(5);
        let col = c5.chromatic_number(20).unwrap();
        assert_eq!(col.chromatic_number, 3);
        assert_eq!(col.colors[0], 0);
        for &(u, v) in c5.edges() {
            assert_ne!(col.colors[u], col.colors[v]);
        }
        let k4 = Graph::new(
            ["a", "b", "c", "d"],
            [
                ("a", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
            ],
        )
        .unwrap();
        assert_eq!(k4.chromatic_number(20).unwrap().chromatic_number, 4);
        assert!(matches!(
            path(21).chromatic_number(20),
            Err(Error::SizeLimitExceeded { size: 21, cap: 20 })
        ));
    }

    #[test]
    fn subgraphs() {
        let c5 = cycle(5);
        let k2 = c5
            .induced_subgraph(&c5.vertex_set(&["v3", "v4"]).unwrap())
            .unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let p5 = c5.delete_named_edges(&[("v3", "v4")]).unwrap();
        assert_eq!(p5.size(), 4);
        assert!(p5.is_connected());
        assert_eq!(p5.diameter().unwrap(), 4);
        assert!(matches!(
            c5.delete_named_edges(&[("v1", "v3")]),
            Err(Error::UnknownEdge(..))
        ));
    }

    #[test]
    fn isomorphism_detects_relabeling() {
        let c5 = cycle(5);
        let relabeled = c5.relabel(|n| format!("x{n}")).unwrap();
        assert!(c5.is_isomorphic(&relabeled));
        assert!(!c5.is_isomorphic(&path(5)));
    }
}
