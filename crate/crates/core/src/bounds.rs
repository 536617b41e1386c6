//! Bounds on `dim_l(H)` for an amalgam H: parallel edges, traversals,
//! out-solving sets, co-traversals, solvable edges, covers and M-sets.
//!
//! Parallel and solvable edges use distances inside each part. Traversals,
//! out-solving sets, co-traversals and covers are distinguished in H.
//! Every upper bound comes with a witness set that is checked on H.

use std::collections::BTreeSet;

use crate::amalgam::{Amalgam, Embedding};
use crate::error::{Error, Result};
use crate::graph::{Bipartiteness, Edge, Graph, Vertex};
use crate::hitting::{self, Instance, SearchOptions};
use crate::localmetric::{
    first_undistinguished_among, is_local_metric_set, local_metric_dimension,
    DistinguisherInstance, LocalBasis,
};

/// Which metric decides whether a traversal vertex distinguishes an edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DistanceMode {
    #[default]
    Host,
    Part,
}

/// Which traversal may help the co-traversal on the edges of part `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CotraversalScope {
    /// Only `T_i`.
    #[default]
    OwnTraversal,
    /// The union of all traversals.
    AllTraversals,
}

fn j_mask(g: &Graph, emb: &Embedding) -> Vec<bool> {
    let mut mask = vec![false; g.order()];
    for &v in emb.map() {
        mask[v] = true;
    }
    mask
}

fn check(g: &Graph, emb: &Embedding) -> Result<()> {
    let mut seen = vec![false; g.order()];
    for &v in emb.map() {
        if v >= g.order() {
            return Err(Error::InvalidEmbedding("image outside the graph".into()));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidEmbedding(format!(
                "{} is hit twice",
                g.name(v)
            )));
        }
    }
    Ok(())
}

/// `d(v, J)` for every vertex of `g`.
pub fn distance_to_j(g: &Graph, emb: &Embedding) -> Result<Vec<u32>> {
    if emb.map().is_empty() {
        return Err(Error::BadParameter(
            "distance to an empty vertex set".into(),
        ));
    }
    (0..g.order())
        .map(|v| g.dist_to_set(v, emb.map()))
        .collect()
}

/// Edges of `G - J` whose endpoints are equidistant from every vertex of J.
pub fn parallel_edges(g: &Graph, emb: &Embedding) -> Result<Vec<Edge>> {
    check(g, emb)?;
    g.require_connected()?;
    let in_j = j_mask(g, emb);
    Ok(g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !in_j[u] && !in_j[v])
        .filter(|&e| !emb.map().iter().any(|&w| g.distinguishes(w, e)))
        .collect())
}

/// Edges `uv` of `g` with `d(u, J) != d(v, J)`.
pub fn solvable_edges(g: &Graph, emb: &Embedding) -> Result<Vec<Edge>> {
    check(g, emb)?;
    g.require_connected()?;
    let d = distance_to_j(g, emb)?;
    Ok(g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| d[u] != d[v])
        .collect())
}

fn part_in_j(am: &Amalgam, i: usize) -> Vec<bool> {
    let p = am.part(i);
    j_mask(&p.graph, &p.embedding)
}

/// `E(G_i) - E(J)` as edges of H.
fn non_j_edges(am: &Amalgam, i: usize) -> Vec<Edge> {
    let g = &am.part(i).graph;
    let in_j = part_in_j(am, i);
    g.edges()
        .iter()
        .filter(|&&(u, v)| !(in_j[u] && in_j[v]))
        .map(|&e| am.host_edge(i, e))
        .collect()
}

/// `∥(J_i:G_i)` as edges of H.
pub fn part_parallel_edges(am: &Amalgam, i: usize) -> Result<Vec<Edge>> {
    let p = am.part(i);
    Ok(parallel_edges(&p.graph, &p.embedding)?
        .into_iter()
        .map(|e| am.host_edge(i, e))
        .collect())
}

/// `Solv(J_i:G_i)` as edges of H.
pub fn part_solvable_edges(am: &Amalgam, i: usize) -> Result<Vec<Edge>> {
    let p = am.part(i);
    Ok(solvable_edges(&p.graph, &p.embedding)?
        .into_iter()
        .map(|e| am.host_edge(i, e))
        .collect())
}

/// Minimum subset of `V(G_i - J_i)` distinguishing every parallel edge of
/// part `i`. Returned as vertices of H.
pub fn min_traversal(
    am: &Amalgam,
    i: usize,
    mode: DistanceMode,
    opts: &SearchOptions,
) -> Result<Vec<Vertex>> {
    match mode {
        DistanceMode::Host => {
            let h = am.host();
            let edges = part_parallel_edges(am, i)?;
            let inst = DistinguisherInstance::new(h, &edges, &am.exclusive_vertices(i))?;
            Ok(inst.solve(h, opts)?.0)
        }
        DistanceMode::Part => {
            let p = am.part(i);
            let g = &p.graph;
            let edges = parallel_edges(g, &p.embedding)?;
            let in_j = part_in_j(am, i);
            let universe: Vec<Vertex> = (0..g.order()).filter(|&v| !in_j[v]).collect();
            let inst = DistinguisherInstance::new(g, &edges, &universe)?;
            let (set, _) = inst.solve(g, opts)?;
            Ok(am.host_set(i, &set))
        }
    }
}

/// Minimum subset of V(H) distinguishing every edge of J in H.
pub fn min_out_solving(am: &Amalgam, opts: &SearchOptions) -> Result<Vec<Vertex>> {
    let h = am.host();
    let universe: Vec<Vertex> = (0..h.order()).collect();
    let inst = DistinguisherInstance::new(h, &am.j_edges_in_host(), &universe)?;
    Ok(inst.solve(h, opts)?.0)
}

/// Like [`min_out_solving`] with candidates restricted to V(J).
pub fn min_out_solving_in_j(am: &Amalgam, opts: &SearchOptions) -> Result<Vec<Vertex>> {
    let h = am.host();
    let inst = DistinguisherInstance::new(h, &am.j_edges_in_host(), &am.shared())?;
    Ok(inst.solve(h, opts)?.0)
}

fn distinguished_by(h: &Graph, e: Edge, set: &[Vertex]) -> bool {
    set.iter().any(|&w| h.distinguishes(w, e))
}

/// Per-part traversal sets that the co-traversal may lean on.
fn helpers(traversals: &[Vec<Vertex>], scope: CotraversalScope) -> Vec<Vec<Vertex>> {
    match scope {
        CotraversalScope::OwnTraversal => traversals.to_vec(),
        CotraversalScope::AllTraversals => {
            let all: Vec<Vertex> = traversals
                .iter()
                .flatten()
                .copied()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            vec![all; traversals.len()]
        }
    }
}

/// Edges of `E(G_i) - E(J)` (in H) that the helper set of part `i` leaves undistinguished.
fn cotraversal_edges(am: &Amalgam, helper: &[Vec<Vertex>]) -> Vec<Edge> {
    let h = am.host();
    let mut edges = BTreeSet::new();
    for (i, help) in helper.iter().enumerate() {
        for e in non_j_edges(am, i) {
            if !distinguished_by(h, e, help) {
                edges.insert(e);
            }
        }
    }
    edges.into_iter().collect()
}

fn require_isometric(am: &Amalgam) -> Result<()> {
    if am.is_isometric_family() {
        Ok(())
    } else {
        Err(Error::NotIsometric)
    }
}

fn check_traversals(am: &Amalgam, traversals: &[Vec<Vertex>]) -> Result<()> {
    if traversals.len() != am.n_parts() {
        return Err(Error::BadParameter(format!(
            "expected {} traversals, got {}",
            am.n_parts(),
            traversals.len()
        )));
    }
    Ok(())
}

/// Minimum `C ⊆ V(J)` such that `C ∪ T_i` distinguishes `E(G_i) - E(J)` in H for every part.
pub fn min_cotraversal(
    am: &Amalgam,
    traversals: &[Vec<Vertex>],
    scope: CotraversalScope,
    opts: &SearchOptions,
) -> Result<Vec<Vertex>> {
    require_isometric(am)?;
    check_traversals(am, traversals)?;
    let h = am.host();
    let edges = cotraversal_edges(am, &helpers(traversals, scope));
    let inst = DistinguisherInstance::new(h, &edges, &am.shared())?;
    Ok(inst.solve(h, opts)?.0)
}

/// Whether `set ⊆ V(J)` is a co-traversal in the feasibility sense (size not checked).
pub fn is_cotraversal_set(
    am: &Amalgam,
    traversals: &[Vec<Vertex>],
    scope: CotraversalScope,
    set: &[Vertex],
) -> Result<bool> {
    check_traversals(am, traversals)?;
    let shared = am.shared();
    if set.iter().any(|v| shared.binary_search(v).is_err()) {
        return Ok(false);
    }
    let edges = cotraversal_edges(am, &helpers(traversals, scope));
    Ok(first_undistinguished_among(am.host(), &edges, set).is_none())
}

/// `d_H(v, J)` for every vertex of H.
fn host_distance_to_j(am: &Amalgam) -> Result<Vec<u32>> {
    let h = am.host();
    let shared = am.shared();
    if shared.is_empty() {
        return Err(Error::BadParameter("distance to an empty J".into()));
    }
    (0..h.order()).map(|v| h.dist_to_set(v, &shared)).collect()
}

/// For every solvable edge not handled by its traversal, the J-vertices
/// realizing the distance from the nearer endpoint to J.
fn projection_requirements(am: &Amalgam, traversals: &[Vec<Vertex>]) -> Result<Vec<Vec<Vertex>>> {
    let h = am.host();
    let dj = host_distance_to_j(am)?;
    let shared = am.shared();
    let mut reqs = BTreeSet::new();
    for (i, t) in traversals.iter().enumerate() {
        for (u, v) in part_solvable_edges(am, i)? {
            if distinguished_by(h, (u, v), t) {
                continue;
            }
            let near = if dj[u] < dj[v] { u } else { v };
            let set: Vec<Vertex> = shared
                .iter()
                .copied()
                .filter(|&c| h.d(near, c) == dj[near])
                .collect();
            reqs.insert(set);
        }
    }
    Ok(reqs.into_iter().collect())
}

/// Whether `c` meets every projection requirement.
pub fn is_projective(am: &Amalgam, c: &[Vertex], traversals: &[Vec<Vertex>]) -> Result<bool> {
    check_traversals(am, traversals)?;
    Ok(projection_requirements(am, traversals)?
        .iter()
        .all(|req| req.iter().any(|x| c.contains(x))))
}

/// Minimum co-traversal that is also projective, or `None` when every
/// projective feasible set is larger than the minimum co-traversal.
pub fn min_projective_cotraversal(
    am: &Amalgam,
    traversals: &[Vec<Vertex>],
    scope: CotraversalScope,
    opts: &SearchOptions,
) -> Result<Option<Vec<Vertex>>> {
    let plain = min_cotraversal(am, traversals, scope, opts)?;
    if is_projective(am, &plain, traversals)? {
        return Ok(Some(plain));
    }
    let h = am.host();
    let shared = am.shared();
    let edges = cotraversal_edges(am, &helpers(traversals, scope));
    let dist = DistinguisherInstance::new(h, &edges, &shared)?;
    let mut sets: Vec<Vec<usize>> = dist
        .constraints
        .iter()
        .map(|(_, w)| {
            w.iter()
                .map(|v| shared.binary_search(v).expect("shared"))
                .collect()
        })
        .collect();
    for req in projection_requirements(am, traversals)? {
        sets.push(
            req.iter()
                .map(|v| shared.binary_search(v).expect("shared"))
                .collect(),
        );
    }
    let sol = hitting::minimum(&Instance::new(shared.len(), sets)?, opts)?;
    if sol.members.len() == plain.len() {
        Ok(Some(sol.members.iter().map(|&k| shared[k]).collect()))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoverClass {
    Plain,
    Complete,
    SelfResolving,
}

impl CoverClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverClass::Plain => "plain",
            CoverClass::Complete => "complete",
            CoverClass::SelfResolving => "self_resolving",
        }
    }
}

impl std::fmt::Display for CoverClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    /// Vertices of H inside `V(G_i)`.
    pub set: Vec<Vertex>,
    pub class: CoverClass,
    /// The empty set accepted as complete because `E(G_i) - E(J) = ∥ ∪ Solv`.
    pub by_convention: bool,
}

/// Edges of `E(G_i) - E(J)` a cover of part `i` must distinguish to be
/// complete / self-resolving.
fn residual_edges(am: &Amalgam, i: usize) -> Result<(Vec<Edge>, Vec<Edge>)> {
    let par: BTreeSet<Edge> = part_parallel_edges(am, i)?.into_iter().collect();
    let solv: BTreeSet<Edge> = part_solvable_edges(am, i)?.into_iter().collect();
    let self_res: Vec<Edge> = non_j_edges(am, i)
        .into_iter()
        .filter(|e| !par.contains(e))
        .collect();
    let complete: Vec<Edge> = self_res
        .iter()
        .copied()
        .filter(|e| !solv.contains(e))
        .collect();
    Ok((complete, self_res))
}

/// Candidates in `V(G_i)` covering `c`: vertices `a` with `d(a, c) = d(a, J)`.
fn cover_candidates(am: &Amalgam, i: usize, c: Vertex, dj: &[u32]) -> Vec<Vertex> {
    let h = am.host();
    am.part_vertices(i)
        .into_iter()
        .filter(|&a| h.d(a, c) == dj[a])
        .collect()
}

fn covers_all(am: &Amalgam, i: usize, c: &[Vertex], set: &[Vertex], dj: &[u32]) -> bool {
    let h = am.host();
    let part = am.part_vertices(i);
    c.iter().all(|&x| {
        set.iter()
            .any(|&a| part.binary_search(&a).is_ok() && h.d(a, x) == dj[a])
    })
}

/// Class of `set` as a cover of `c` in part `i`; `None` if it is not a cover.
pub fn classify_cover(
    am: &Amalgam,
    i: usize,
    c: &[Vertex],
    set: &[Vertex],
) -> Result<Option<CoverClass>> {
    let dj = host_distance_to_j(am)?;
    let (complete, self_res) = residual_edges(am, i)?;
    if set.is_empty() && !c.is_empty() {
        return Ok(complete.is_empty().then_some(CoverClass::Complete));
    }
    if !covers_all(am, i, c, set, &dj) {
        return Ok(None);
    }
    let h = am.host();
    Ok(Some(
        if first_undistinguished_among(h, &self_res, set).is_none() {
            CoverClass::SelfResolving
        } else if first_undistinguished_among(h, &complete, set).is_none() {
            CoverClass::Complete
        } else {
            CoverClass::Plain
        },
    ))
}

/// Minimum cover of `c` in part `i` meeting at least `class`.
pub fn min_cover_with_class(
    am: &Amalgam,
    c: &[Vertex],
    i: usize,
    class: CoverClass,
    opts: &SearchOptions,
) -> Result<Cover> {
    let dj = host_distance_to_j(am)?;
    let (complete, self_res) = residual_edges(am, i)?;
    if class == CoverClass::Complete && complete.is_empty() && !c.is_empty() {
        return Ok(Cover {
            set: Vec::new(),
            class: CoverClass::Complete,
            by_convention: true,
        });
    }
    let h = am.host();
    let universe = am.part_vertices(i);
    let pos = |v: &Vertex| universe.binary_search(v).expect("part vertex");
    let mut sets: Vec<Vec<usize>> = c
        .iter()
        .map(|&x| cover_candidates(am, i, x, &dj).iter().map(pos).collect())
        .collect();
    let edges = match class {
        CoverClass::Plain => Vec::new(),
        CoverClass::Complete => complete,
        CoverClass::SelfResolving => self_res,
    };
    for e in edges {
        sets.push(
            universe
                .iter()
                .enumerate()
                .filter(|(_, &a)| h.distinguishes(a, e))
                .map(|(k, _)| k)
                .collect(),
        );
    }
    let inst = Instance::new(universe.len(), sets).map_err(|_| Error::InfeasibleClassification)?;
    let sol = hitting::minimum(&inst, opts).map_err(|e| match e {
        Error::Infeasible(_) => Error::InfeasibleClassification,
        other => other,
    })?;
    let set: Vec<Vertex> = sol.members.iter().map(|&k| universe[k]).collect();
    let found = classify_cover(am, i, c, &set)?.ok_or(Error::InfeasibleClassification)?;
    Ok(Cover {
        set,
        class: found,
        by_convention: false,
    })
}

/// Minimum cover of `c` in part `i`, with its classification.
pub fn min_cover(am: &Amalgam, c: &[Vertex], i: usize, opts: &SearchOptions) -> Result<Cover> {
    min_cover_with_class(am, c, i, CoverClass::Plain, opts)
}

/// Local maxima of `d(·, J)` in `G_i - E(J_i)`, as vertices of H.
pub fn m_set(am: &Amalgam, i: usize) -> Result<Vec<Vertex>> {
    let p = am.part(i);
    let g = &p.graph;
    let j_edges: Vec<Edge> = am
        .j()
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (p.embedding.image(a), p.embedding.image(b));
            (x.min(y), x.max(y))
        })
        .collect();
    let stripped = g.delete_edges(&j_edges)?;
    if let Bipartiteness::OddCycle(_) = stripped.bipartiteness() {
        return Err(Error::NotBipartiteAfterDeletion(p.id.clone()));
    }
    let d = distance_to_j(g, &p.embedding)?;
    let members: Vec<Vertex> = (0..g.order())
        .filter(|&a| stripped.neighbors(a).iter().all(|&b| d[b] <= d[a]))
        .collect();
    Ok(am.host_set(i, &members))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartAnalysis {
    pub id: String,
    /// Edges of H.
    pub parallel_edges: Vec<Edge>,
    pub solvable_edges: Vec<Edge>,
    /// Vertices of H.
    pub traversal: Vec<Vertex>,
    /// Present iff `G_i - E(J_i)` is bipartite.
    pub m_set: Option<Vec<Vertex>>,
}

/// An upper bound value with the witness set that was checked on H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certified {
    pub value: usize,
    pub witness: Vec<Vertex>,
    /// The witness is a local metric set of H of size at most `value`.
    pub certified: bool,
}

/// A bound or the reason it does not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Value(Certified),
    NotApplicable(String),
}

impl Bound {
    pub fn value(&self) -> Option<usize> {
        match self {
            Bound::Value(c) => Some(c.value),
            Bound::NotApplicable(_) => None,
        }
    }

    pub fn certified(&self) -> Option<&Certified> {
        match self {
            Bound::Value(c) => Some(c),
            Bound::NotApplicable(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exact {
    NotComputed,
    Value(LocalBasis),
    BudgetExceeded,
}

impl Exact {
    pub fn size(&self) -> Option<usize> {
        match self {
            Exact::Value(b) => Some(b.size),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoversChoice {
    pub cotraversal: Vec<Vertex>,
    /// One cover per part.
    pub covers: Vec<Cover>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub parts: Vec<PartAnalysis>,
    pub isometric: bool,
    pub all_bipartite: bool,
    pub out_solving: Vec<Vertex>,
    pub out_solving_in_j: Vec<Vertex>,
    /// Present for isometric families.
    pub cotraversal: Option<Vec<Vertex>>,
    /// Co-traversal allowed to use every part's traversal.
    pub cotraversal_pooled: Option<Vec<Vertex>>,
    pub cotraversal_projective: Option<bool>,
    pub c_subset_s: Option<bool>,
    /// Co-traversal and covers behind `upper_covers`.
    pub covers: Option<CoversChoice>,
    pub lower: usize,
    pub upper_crude: Bound,
    pub upper_iso: Bound,
    pub upper_cotraversal: Bound,
    pub upper_covers: Bound,
    pub exact: Exact,
}

impl BoundReport {
    /// `Some(lower <= exact)` once the exact value is known.
    pub fn lower_le_exact(&self) -> Option<bool> {
        self.exact.size().map(|e| self.lower <= e)
    }

    /// Whether every computed upper bound is at least the exact value.
    pub fn upper_ge_exact(&self) -> Option<bool> {
        let e = self.exact.size()?;
        Some(
            [
                &self.upper_crude,
                &self.upper_iso,
                &self.upper_cotraversal,
                &self.upper_covers,
            ]
            .iter()
            .filter_map(|b| b.value())
            .all(|v| v >= e),
        )
    }

    pub fn all_certified(&self) -> bool {
        [
            &self.upper_crude,
            &self.upper_iso,
            &self.upper_cotraversal,
            &self.upper_covers,
        ]
        .iter()
        .filter_map(|b| b.certified())
        .all(|c| c.certified)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundOptions {
    pub search: SearchOptions,
    pub compute_exact: bool,
    pub scope: CotraversalScope,
}

fn union(sets: &[&[Vertex]]) -> Vec<Vertex> {
    sets.iter()
        .flat_map(|s| s.iter().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn certify(h: &Graph, value: usize, witness: Vec<Vertex>) -> Result<Bound> {
    let certified = witness.len() <= value && is_local_metric_set(h, &witness)?;
    Ok(Bound::Value(Certified {
        value,
        witness,
        certified,
    }))
}

const CRUDE_ATTEMPTS: usize = 4096;

/// `n_H - (n + 1)` with a witness `V(H) - ({u} ∪ {v_i})`.
pub fn upper_crude(am: &Amalgam) -> Result<Bound> {
    let h = am.host();
    let shared = am.shared();
    if shared.is_empty() {
        return Ok(Bound::NotApplicable("J is empty".into()));
    }
    let exclusive: Vec<Vec<Vertex>> = (0..am.n_parts())
        .map(|i| am.exclusive_vertices(i))
        .collect();
    if exclusive.iter().any(Vec::is_empty) {
        return Ok(Bound::NotApplicable(
            "some part has no vertex outside J".into(),
        ));
    }
    let value = h.order() - (am.n_parts() + 1);
    let witness_for = |u: Vertex, picks: &[Vertex]| -> Vec<Vertex> {
        (0..h.order())
            .filter(|v| *v != u && !picks.contains(v))
            .collect()
    };
    let mut first = None;
    let mut attempts = 0;
    for &u in &shared {
        // Candidates per part: neighbours of u first, then the rest, in vertex order.
        let cands: Vec<Vec<Vertex>> = exclusive
            .iter()
            .map(|ex| {
                let mut c: Vec<Vertex> = ex.iter().copied().filter(|&v| h.has_edge(u, v)).collect();
                c.extend(ex.iter().copied().filter(|&v| !h.has_edge(u, v)));
                c
            })
            .collect();
        let mut idx = vec![0usize; cands.len()];
        loop {
            let picks: Vec<Vertex> = idx.iter().zip(&cands).map(|(&k, c)| c[k]).collect();
            let w = witness_for(u, &picks);
            if is_local_metric_set(h, &w)? {
                return certify(h, value, w);
            }
            first.get_or_insert(w);
            attempts += 1;
            if attempts >= CRUDE_ATTEMPTS {
                break;
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < cands[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
        if attempts >= CRUDE_ATTEMPTS {
            break;
        }
    }
    certify(h, value, first.expect("at least one attempt"))
}

/// Covers for `upper_covers`: per part the minimum complete cover, with one
/// part switched to its minimum self-resolving cover unless every c is
/// already covered in two different parts. Smallest total wins; ties go to
/// the all-complete choice, then to the lowest part index.
fn choose_covers(am: &Amalgam, c: &[Vertex], opts: &SearchOptions) -> Result<Option<Vec<Cover>>> {
    let n = am.n_parts();
    let dj = host_distance_to_j(am)?;
    let complete: Vec<Cover> = (0..n)
        .map(|i| min_cover_with_class(am, c, i, CoverClass::Complete, opts))
        .collect::<Result<_>>()?;
    let mut best: Option<(usize, Vec<Cover>)> = None;
    let double = c.iter().all(|&x| {
        complete
            .iter()
            .enumerate()
            .filter(|(i, cov)| covers_all(am, *i, &[x], &cov.set, &dj))
            .count()
            >= 2
    });
    if complete
        .iter()
        .any(|cov| cov.class == CoverClass::SelfResolving)
        || double
    {
        let total = complete.iter().map(|cov| cov.set.len()).sum();
        best = Some((total, complete.clone()));
    }
    for i in 0..n {
        let sr = match min_cover_with_class(am, c, i, CoverClass::SelfResolving, opts) {
            Ok(sr) => sr,
            Err(Error::InfeasibleClassification) => continue,
            Err(e) => return Err(e),
        };
        let mut choice = complete.clone();
        choice[i] = sr;
        let total = choice.iter().map(|cov| cov.set.len()).sum();
        if best.as_ref().is_none_or(|(b, _)| total < *b) {
            best = Some((total, choice));
        }
    }
    Ok(best.map(|(_, covers)| covers))
}

pub fn bound_report(am: &Amalgam, opts: &BoundOptions) -> Result<BoundReport> {
    let h = am.host();
    h.require_connected()?;
    let search = &opts.search;
    let n = am.n_parts();
    let mut parts = Vec::with_capacity(n);
    for i in 0..n {
        let m_set = match m_set(am, i) {
            Ok(m) => Some(m),
            Err(Error::NotBipartiteAfterDeletion(_)) | Err(Error::BadParameter(_)) => None,
            Err(e) => return Err(e),
        };
        let solvable_edges = if am.j().order() == 0 {
            Vec::new()
        } else {
            part_solvable_edges(am, i)?
        };
        parts.push(PartAnalysis {
            id: am.part(i).id.clone(),
            parallel_edges: part_parallel_edges(am, i)?,
            solvable_edges,
            traversal: min_traversal(am, i, DistanceMode::Host, search)?,
            m_set,
        });
    }
    let traversals: Vec<Vec<Vertex>> = parts.iter().map(|p| p.traversal.clone()).collect();
    let t_total: usize = traversals.iter().map(Vec::len).sum();
    let t_union = union(&traversals.iter().map(Vec::as_slice).collect::<Vec<_>>());
    let out_solving = min_out_solving(am, search)?;
    let out_solving_in_j = min_out_solving_in_j(am, search)?;
    let lower = t_total + out_solving.len();
    let isometric = am.is_isometric_family();
    let all_bipartite = am.parts().iter().all(|p| p.graph.is_bipartite());
    let upper_crude = upper_crude(am)?;

    let not_iso = || Bound::NotApplicable("family is not isometric".into());
    let mut report = BoundReport {
        parts,
        isometric,
        all_bipartite,
        out_solving: out_solving.clone(),
        out_solving_in_j,
        cotraversal: None,
        cotraversal_pooled: None,
        cotraversal_projective: None,
        c_subset_s: None,
        covers: None,
        lower,
        upper_crude,
        upper_iso: not_iso(),
        upper_cotraversal: not_iso(),
        upper_covers: not_iso(),
        exact: Exact::NotComputed,
    };

    if isometric {
        let mut bases = Vec::new();
        let mut dim_sum = 0;
        for i in 0..n {
            let b = local_metric_dimension(&am.part(i).graph, search)?;
            dim_sum += b.size;
            bases.extend(am.host_set(i, &b.witness));
        }
        let bases = union(&[&bases]);
        let shared = am.shared();
        let by_sum = certify(h, dim_sum, bases)?;
        let by_t = certify(h, t_total + shared.len(), union(&[&t_union, &shared]))?;
        report.upper_iso = if t_total + shared.len() < dim_sum {
            by_t
        } else {
            by_sum
        };

        let c = min_cotraversal(am, &traversals, opts.scope, search)?;
        let other = match opts.scope {
            CotraversalScope::OwnTraversal => CotraversalScope::AllTraversals,
            CotraversalScope::AllTraversals => CotraversalScope::OwnTraversal,
        };
        let c_other = min_cotraversal(am, &traversals, other, search)?;
        let cs = union(&[&c, &out_solving]);
        report.upper_cotraversal = certify(h, t_total + cs.len(), union(&[&t_union, &cs]))?;
        report.c_subset_s = Some(c.iter().all(|v| out_solving.contains(v)));
        report.cotraversal_projective = Some(is_projective(am, &c, &traversals)?);
        report.cotraversal_pooled = Some(match opts.scope {
            CotraversalScope::AllTraversals => c.clone(),
            CotraversalScope::OwnTraversal => c_other,
        });
        report.cotraversal = Some(c);

        report.upper_covers = if am.j().order() == 0 {
            Bound::NotApplicable("J is empty".into())
        } else {
            match min_projective_cotraversal(am, &traversals, opts.scope, search)? {
                None => Bound::NotApplicable("no minimum co-traversal is projective".into()),
                Some(pc) => match choose_covers(am, &pc, search)? {
                    None => Bound::NotApplicable(
                        "no self-resolving cover and some co-traversal vertex is covered in fewer than two parts"
                            .into(),
                    ),
                    Some(covers) => {
                        let cover_total: usize = covers.iter().map(|c| c.set.len()).sum();
                        let mut sets: Vec<&[Vertex]> = vec![&t_union, &out_solving];
                        sets.extend(covers.iter().map(|c| c.set.as_slice()));
                        let witness = union(&sets);
                        report.covers = Some(CoversChoice {
                            cotraversal: pc,
                            covers,
                        });
                        certify(h, t_total + out_solving.len() + cover_total, witness)?
                    }
                },
            }
        };
    }

    if opts.compute_exact {
        report.exact = match local_metric_dimension(h, search) {
            Ok(b) => Exact::Value(b),
            Err(Error::BudgetExceeded { .. }) => Exact::BudgetExceeded,
            Err(e) => return Err(e),
        };
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumConditions {
    pub bases_pairwise_disjoint: bool,
    pub all_bases_avoid_j: bool,
    pub traversals_contain_basis: bool,
    pub dim_equals_sum: bool,
    /// Dimension of H and the sum of the part dimensions.
    pub dim: usize,
    pub sum: usize,
}

/// Enumeration-based checks of the conditions relating `dim_l(H)` to `Σ dim_l(G_i)`.
/// `cap` bounds the number of bases or traversals enumerated per part.
pub fn sum_dimension_conditions(
    am: &Amalgam,
    cap: usize,
    opts: &SearchOptions,
) -> Result<SumConditions> {
    require_isometric(am)?;
    let n = am.n_parts();
    let h = am.host();
    let mut bases: Vec<Vec<Vec<Vertex>>> = Vec::with_capacity(n);
    let mut sum = 0;
    for i in 0..n {
        let g = &am.part(i).graph;
        let en = crate::localmetric::enumerate_minimum_bases(g, cap, opts)?;
        if en.truncated {
            return Err(Error::BadParameter(format!(
                "more than {cap} bases in part {}",
                am.part(i).id
            )));
        }
        sum += en.size;
        bases.push(en.bases.iter().map(|b| am.host_set(i, b)).collect());
    }
    let shared = am.shared();
    let all_bases_avoid_j = bases
        .iter()
        .flatten()
        .all(|b| b.iter().all(|v| shared.binary_search(v).is_err()));
    let mut bases_pairwise_disjoint = true;
    for i in 0..n {
        for j in i + 1..n {
            for a in &bases[i] {
                for b in &bases[j] {
                    if a.iter().any(|v| b.contains(v)) {
                        bases_pairwise_disjoint = false;
                    }
                }
            }
        }
    }
    let mut traversals_contain_basis = true;
    for i in 0..n {
        let edges = part_parallel_edges(am, i)?;
        let inst = DistinguisherInstance::new(h, &edges, &am.exclusive_vertices(i))?;
        let en = hitting::enumerate_minimum(&inst.to_hitting(h)?, cap, opts)?;
        if en.truncated {
            return Err(Error::BadParameter(format!(
                "more than {cap} traversals in part {}",
                am.part(i).id
            )));
        }
        for t in &en.sets {
            let t: Vec<Vertex> = t.iter().map(|&k| inst.universe[k]).collect();
            if !bases[i].iter().any(|b| b.iter().all(|v| t.contains(v))) {
                traversals_contain_basis = false;
            }
        }
    }
    let dim = local_metric_dimension(h, opts)?.size;
    Ok(SumConditions {
        bases_pairwise_disjoint,
        all_bases_avoid_j,
        traversals_contain_basis,
        dim_equals_sum: dim == sum,
        dim,
        sum,
    })
}
