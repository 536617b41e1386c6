//! Subgraph-amalgamation: gluing graphs along copies of a common induced
//! subgraph `J`, plus the isometry checks for such families.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{check_name, Edge, Graph, Vertex};

/// Injective map `V(J) -> V(G)`, indexed by J's canonical vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<Vertex>,
}

/// First reason a map fails to embed J as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingViolation {
    NotInjective {
        a: String,
        b: String,
    },
    /// `ab` is an edge of exactly one of J and the image.
    EdgeMismatch {
        a: String,
        b: String,
        edge_in_j: bool,
    },
}

impl std::fmt::Display for EmbeddingViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EmbeddingViolation::NotInjective { a, b } => {
                write!(f, "{a} and {b} map to the same vertex")
            }
            EmbeddingViolation::EdgeMismatch { a, b, edge_in_j } => {
                if *edge_in_j {
                    write!(f, "{a}{b} is an edge of J but its image is not an edge")
                } else {
                    write!(f, "{a}{b} is not an edge of J but its image is an edge")
                }
            }
        }
    }
}

impl Embedding {
    /// Resolves `(J-vertex, G-vertex)` name pairs; the map must be total on V(J).
    pub fn from_names<A: AsRef<str>, B: AsRef<str>>(
        j: &Graph,
        g: &Graph,
        pairs: &[(A, B)],
    ) -> Result<Embedding> {
        let mut map = vec![usize::MAX; j.order()];
        for (a, b) in pairs {
            let jv = j.require(a.as_ref())?;
            let gv = g.require(b.as_ref())?;
            if map[jv] != usize::MAX {
                return Err(Error::InvalidEmbedding(format!(
                    "J-vertex {} is mapped twice",
                    a.as_ref()
                )));
            }
            map[jv] = gv;
        }
        if let Some(jv) = map.iter().position(|&v| v == usize::MAX) {
            return Err(Error::InvalidEmbedding(format!(
                "J-vertex {} is not mapped",
                j.name(jv)
            )));
        }
        Ok(Embedding { map })
    }

    pub fn from_vertices(map: Vec<Vertex>) -> Embedding {
        Embedding { map }
    }

    /// Identity-by-name embedding: every J-vertex maps to the G-vertex of the same name.
    pub fn by_name(j: &Graph, g: &Graph) -> Result<Embedding> {
        let pairs: Vec<(&str, &str)> = j.names().iter().map(|n| (n.as_str(), n.as_str())).collect();
        Self::from_names(j, g, &pairs)
    }

    pub fn image(&self, jv: Vertex) -> Vertex {
        self.map[jv]
    }

    pub fn map(&self) -> &[Vertex] {
        &self.map
    }

    /// The image `J_i`, sorted.
    pub fn image_set(&self) -> Vec<Vertex> {
        let mut s = self.map.clone();
        s.sort_unstable();
        s
    }
}

/// Checks that `map` embeds `j` into `g` as an induced subgraph.
pub fn check_embedding(j: &Graph, g: &Graph, map: &[Vertex]) -> Result<Option<EmbeddingViolation>> {
    if map.len() != j.order() {
        return Err(Error::InvalidEmbedding("map is not total on V(J)".into()));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= g.order()) {
        return Err(Error::UnknownVertex(bad.to_string()));
    }
    for a in 0..j.order() {
        for b in a + 1..j.order() {
            let (na, nb) = (j.name(a).to_string(), j.name(b).to_string());
            if map[a] == map[b] {
                return Ok(Some(EmbeddingViolation::NotInjective { a: na, b: nb }));
            }
            let in_j = j.has_edge(a, b);
            if in_j != g.has_edge(map[a], map[b]) {
                return Ok(Some(EmbeddingViolation::EdgeMismatch {
                    a: na,
                    b: nb,
                    edge_in_j: in_j,
                }));
            }
        }
    }
    Ok(None)
}

/// Whether `map` embeds `sub` into `host` preserving all distances.
pub fn is_isometrically_embedded(sub: &Graph, host: &Graph, map: &[Vertex]) -> Result<bool> {
    if let Some(v) = check_embedding(sub, host, map)? {
        return Err(Error::InvalidEmbedding(v.to_string()));
    }
    for a in 0..sub.order() {
        for b in a + 1..sub.order() {
            if sub.dist(a, b) != host.dist(map[a], map[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub id: String,
    pub graph: Graph,
    pub embedding: Embedding,
}

impl Part {
    pub fn new(id: impl Into<String>, graph: Graph, embedding: Embedding) -> Part {
        Part {
            id: id.into(),
            graph,
            embedding,
        }
    }
}

/// Where a vertex of H came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// The identified copies of a J-vertex.
    Shared(Vertex),
    /// A vertex of `G_part - J_part`.
    Part { part: usize, vertex: Vertex },
}

/// A pair of J-vertices whose distance differs between two parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometryViolation {
    pub parts: (usize, usize),
    pub a: String,
    pub b: String,
    pub distances: (Option<u32>, Option<u32>),
}

#[derive(Clone, Debug)]
pub struct Amalgam {
    j: Graph,
    parts: Vec<Part>,
    host: Graph,
    provenance: Vec<Provenance>,
    to_host: Vec<Vec<Vertex>>,
    j_to_host: Vec<Vertex>,
}

/// Host name of a non-shared vertex.
pub fn part_vertex_name(part_id: &str, name: &str) -> String {
    format!("p{part_id}.{name}")
}

/// Glues the parts along their copies of `j`.
///
/// Non-shared vertices of part `id` are renamed `p<id>.<name>`; shared ones take J's names.
pub fn amalgamate(j: Graph, parts: Vec<Part>) -> Result<Amalgam> {
    if parts.is_empty() {
        return Err(Error::BadParameter(
            "an amalgam needs at least one part".into(),
        ));
    }
    let mut ids = BTreeSet::new();
    for p in &parts {
        check_name(&p.id)?;
        if !ids.insert(p.id.clone()) {
            return Err(Error::BadParameter(format!("duplicate part id `{}`", p.id)));
        }
        if let Some(v) = check_embedding(&j, &p.graph, p.embedding.map())? {
            return Err(Error::InvalidEmbedding(format!("part {}: {v}", p.id)));
        }
        if !p.graph.is_connected() {
            return Err(Error::DisconnectedPart(p.id.clone()));
        }
    }
    let host_names: Vec<Vec<String>> = parts
        .iter()
        .map(|p| {
            let mut names: Vec<String> = p
                .graph
                .names()
                .iter()
                .map(|n| part_vertex_name(&p.id, n))
                .collect();
            for (jv, &gv) in p.embedding.map().iter().enumerate() {
                names[gv] = j.name(jv).to_string();
            }
            names
        })
        .collect();
    let mut vertices: BTreeSet<String> = j.names().iter().cloned().collect();
    let mut edges = BTreeSet::new();
    for (p, names) in parts.iter().zip(&host_names) {
        for (gv, name) in names.iter().enumerate() {
            let shared = p.embedding.map().contains(&gv);
            if !shared && !vertices.insert(name.clone()) {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        for &(u, v) in p.graph.edges() {
            let (a, b) = (names[u].clone(), names[v].clone());
            edges.insert(if a < b { (a, b) } else { (b, a) });
        }
    }
    let host = Graph::new(vertices, edges)?;
    let to_host: Vec<Vec<Vertex>> = host_names
        .iter()
        .map(|names| {
            names
                .iter()
                .map(|n| host.vertex(n).expect("host vertex"))
                .collect()
        })
        .collect();
    let j_to_host: Vec<Vertex> = j
        .names()
        .iter()
        .map(|n| host.vertex(n).expect("shared vertex"))
        .collect();
    let mut provenance = vec![Provenance::Shared(usize::MAX); host.order()];
    for (jv, &hv) in j_to_host.iter().enumerate() {
        provenance[hv] = Provenance::Shared(jv);
    }
    for (pi, p) in parts.iter().enumerate() {
        for (gv, &hv) in to_host[pi].iter().enumerate() {
            if !p.embedding.map().contains(&gv) {
                provenance[hv] = Provenance::Part {
                    part: pi,
                    vertex: gv,
                };
            }
        }
    }
    Ok(Amalgam {
        j,
        parts,
        host,
        provenance,
        to_host,
        j_to_host,
    })
}

impl Amalgam {
    pub fn j(&self) -> &Graph {
        &self.j
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &Part {
        &self.parts[i]
    }

    pub fn part_index(&self, id: &str) -> Option<usize> {
        self.parts.iter().position(|p| p.id == id)
    }

    pub fn n_parts(&self) -> usize {
        self.parts.len()
    }

    /// The glued graph H.
    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn provenance(&self, hv: Vertex) -> &Provenance {
        &self.provenance[hv]
    }

    /// Position in H of vertex `v` of part `i`.
    pub fn to_host(&self, i: usize, v: Vertex) -> Vertex {
        self.to_host[i][v]
    }

    pub fn host_set(&self, i: usize, set: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = set.iter().map(|&v| self.to_host[i][v]).collect();
        out.sort_unstable();
        out
    }

    /// Inverse of [`Amalgam::to_host`] for vertices of H lying in part `i`.
    pub fn from_host(&self, i: usize, hv: Vertex) -> Option<Vertex> {
        match self.provenance[hv] {
            Provenance::Shared(jv) => Some(self.parts[i].embedding.image(jv)),
            Provenance::Part { part, vertex } if part == i => Some(vertex),
            _ => None,
        }
    }

    /// Edge `e` of part `i` as an edge of H.
    pub fn host_edge(&self, i: usize, e: Edge) -> Edge {
        let (a, b) = (self.to_host[i][e.0], self.to_host[i][e.1]);
        (a.min(b), a.max(b))
    }

    /// E(J) as edges of H, in J's canonical edge order.
    pub fn j_edges_in_host(&self) -> Vec<Edge> {
        self.j
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.j_to_host[a], self.j_to_host[b]);
                (x.min(y), x.max(y))
            })
            .collect()
    }

    pub fn j_to_host(&self, jv: Vertex) -> Vertex {
        self.j_to_host[jv]
    }

    /// V(J) as vertices of H, sorted.
    pub fn shared(&self) -> Vec<Vertex> {
        let mut s = self.j_to_host.clone();
        s.sort_unstable();
        s
    }

    /// V(G_i) as vertices of H, sorted.
    pub fn part_vertices(&self, i: usize) -> Vec<Vertex> {
        let mut s = self.to_host[i].clone();
        s.sort_unstable();
        s
    }

    /// V(G_i - J_i) as vertices of H, sorted.
    pub fn exclusive_vertices(&self, i: usize) -> Vec<Vertex> {
        (0..self.host.order())
            .filter(|&hv| matches!(self.provenance[hv], Provenance::Part { part, .. } if part == i))
            .collect()
    }

    /// First pair of J-vertices whose distance differs between two parts.
    pub fn isometry_violation(&self) -> Option<IsometryViolation> {
        let n = self.j.order();
        for a in 0..n {
            for b in a + 1..n {
                let d0 = {
                    let p = &self.parts[0];
                    p.graph.dist(p.embedding.image(a), p.embedding.image(b))
                };
                for (i, p) in self.parts.iter().enumerate().skip(1) {
                    let di = p.graph.dist(p.embedding.image(a), p.embedding.image(b));
                    if di != d0 {
                        return Some(IsometryViolation {
                            parts: (0, i),
                            a: self.j.name(a).to_string(),
                            b: self.j.name(b).to_string(),
                            distances: (d0, di),
                        });
                    }
                }
            }
        }
        None
    }

    /// Whether all parts agree on the distances between J-vertices.
    pub fn is_isometric_family(&self) -> bool {
        self.isometry_violation().is_none()
    }

    /// Whether part `i` sits isometrically inside H.
    pub fn part_is_isometric_in_host(&self, i: usize) -> bool {
        is_isometrically_embedded(&self.parts[i].graph, &self.host, &self.to_host[i])
            .expect("parts embed as induced subgraphs of H")
    }

    /// True when J is connected with diameter at most 2, which forces isometry.
    pub fn diam2_sufficiency(&self) -> bool {
        self.j.order() > 0 && matches!(self.j.diameter(), Ok(d) if d <= 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path(n)).unwrap()
    }

    fn kbar(n: usize) -> Graph {
        generate(&FamilySpec::Empty(n)).unwrap()
    }

    fn one_plus_one() -> Amalgam {
        let j = Graph::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        let p3 = path(3);
        let p4 = path(4);
        let e1 = Embedding::from_names(&j, &p3, &[("a", "u1"), ("b", "u3")]).unwrap();
        let e2 = Embedding::from_names(&j, &p4, &[("a", "u1"), ("b", "u4")]).unwrap();
        amalgamate(j, vec![Part::new("1", p3, e1), Part::new("2", p4, e2)]).unwrap()
    }

    #[test]
    fn check_embedding_examples() {
        let j = kbar(2);
        let p4 = path(4);
        let ends = Embedding::from_names(&j, &p4, &[("u1", "u1"), ("u2", "u4")]).unwrap();
        assert_eq!(check_embedding(&j, &p4, ends.map()).unwrap(), None);
        let p3 = path(3);
        let adjacent = Embedding::from_names(&j, &p3, &[("u1", "u1"), ("u2", "u2")]).unwrap();
        assert!(matches!(
            check_embedding(&j, &p3, adjacent.map()).unwrap(),
            Some(EmbeddingViolation::EdgeMismatch {
                edge_in_j: false,
                ..
            })
        ));
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let k3bar = kbar(3);
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    assert!(check_embedding(&k2, &k3bar, &[a, b]).unwrap().is_some());
                }
            }
        }
        assert!(matches!(
            Embedding::from_names(&j, &p4, &[("u1", "u9"), ("u2", "u4")]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn one_plus_one_is_c5() {
        let am = one_plus_one();
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(am.host().is_isomorphic(&c5));
        let v = am.isometry_violation().unwrap();
        assert_eq!(v.distances, (Some(2), Some(3)));
        assert!(!am.is_isometric_family());
        assert!(!am.diam2_sufficiency());
    }

    #[test]
    fn two_k4_over_k2() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let j = generate(&FamilySpec::Complete(2)).unwrap();
        let e = Embedding::by_name(&j, &k4).unwrap();
        let am = amalgamate(
            j,
            vec![Part::new("1", k4.clone(), e.clone()), Part::new("2", k4, e)],
        )
        .unwrap();
        assert_eq!((am.host().order(), am.host().size()), (6, 11));
        assert!(am.is_isometric_family());
        assert!(am.diam2_sufficiency());
        assert_eq!(am.exclusive_vertices(0).len(), 2);
        assert_eq!(am.host().names()[am.to_host(1, 2)], "p2.u3");
    }

    #[test]
    fn single_part_is_relabeled_copy() {
        let p4 = path(4);
        let j = Graph::new(["u2"], Vec::<(&str, &str)>::new()).unwrap();
        let e = Embedding::by_name(&j, &p4).unwrap();
        let am = amalgamate(j, vec![Part::new("1", p4.clone(), e)]).unwrap();
        assert!(am.host().is_isomorphic(&p4));
        assert!(am.host().vertex("p1.u1").is_some());
    }

    #[test]
    fn disconnected_part_rejected() {
        let g = Graph::new(["a", "b", "c"], [("a", "b")]).unwrap();
        let j = Graph::new(["a"], Vec::<(&str, &str)>::new()).unwrap();
        let e = Embedding::by_name(&j, &g).unwrap();
        assert!(matches!(
            amalgamate(j, vec![Part::new("1", g, e)]),
            Err(Error::DisconnectedPart(_))
        ));
    }

    #[test]
    fn isometric_embedding_of_paths_in_c6() {
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        let p3 = path(3);
        // C6 canonical order is u1..u6 at positions 0..5.
        assert!(is_isometrically_embedded(&p3, &c6, &[0, 1, 2]).unwrap());
        // P4's endpoints are antipodal in C6, so P4 still embeds isometrically; P5 does not.
        assert!(is_isometrically_embedded(&path(4), &c6, &[0, 1, 2, 3]).unwrap());
        assert!(!is_isometrically_embedded(&path(5), &c6, &[0, 1, 2, 3, 4]).unwrap());
        assert!(matches!(
            is_isometrically_embedded(&p3, &c6, &[0, 2, 4]),
            Err(Error::InvalidEmbedding(_))
        ));
    }

    #[test]
    fn diam2_cases() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let p4 = path(4);
        let g = generate(&FamilySpec::Cycle(8)).unwrap();
        let mk = |j: Graph, map: Vec<Vertex>| {
            let e = Embedding::from_vertices(map);
            amalgamate(
                j,
                vec![
                    Part::new("1", g.clone(), e.clone()),
                    Part::new("2", g.clone(), e),
                ],
            )
            .unwrap()
        };
        // C8 canonical order: u1 u2 u3 ... u8.
        assert!(mk(k2, vec![0, 1]).diam2_sufficiency());
        assert!(!mk(p4, vec![0, 1, 2, 3]).diam2_sufficiency());
        assert!(!mk(kbar(2), vec![0, 2]).diam2_sufficiency());
    }
}
