//! Distinguishing sets and exact local metric dimension.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::hitting::{self, Instance, SearchOptions, SearchStats};

/// Per-edge distinguisher sets restricted to a candidate universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguisherInstance {
    /// Candidate vertices, ascending.
    pub universe: Vec<Vertex>,
    /// `(edge, W(edge) ∩ universe)` with sorted sets.
    pub constraints: Vec<(Edge, Vec<Vertex>)>,
}

impl DistinguisherInstance {
    /// Distinguisher sets of `edges` under the distances of `g`.
    pub fn new(g: &Graph, edges: &[Edge], universe: &[Vertex]) -> Result<DistinguisherInstance> {
        g.require_connected()?;
        let mut universe = universe.to_vec();
        universe.sort_unstable();
        universe.dedup();
        let constraints = edges
            .iter()
            .map(|&e| {
                (
                    e,
                    universe
                        .iter()
                        .copied()
                        .filter(|&w| g.distinguishes(w, e))
                        .collect(),
                )
            })
            .collect();
        Ok(DistinguisherInstance {
            universe,
            constraints,
        })
    }

    /// Constraints whose distinguisher set is empty.
    pub fn unsatisfiable(&self) -> Vec<Edge> {
        self.constraints
            .iter()
            .filter(|(_, w)| w.is_empty())
            .map(|(e, _)| *e)
            .collect()
    }

    /// Hitting-set instance over universe positions. `Infeasible` names the
    /// first edge nothing in the universe can distinguish.
    pub fn to_hitting(&self, g: &Graph) -> Result<Instance> {
        if let Some(&e) = self.unsatisfiable().first() {
            let (a, b) = g.edge_names(e);
            return Err(Error::Infeasible(format!(
                "no candidate distinguishes {a}-{b}"
            )));
        }
        let sets = self
            .constraints
            .iter()
            .map(|(_, w)| {
                w.iter()
                    .map(|v| self.universe.binary_search(v).expect("member of universe"))
                    .collect()
            })
            .collect();
        Instance::new(self.universe.len(), sets)
    }

    fn lift(&self, positions: &[usize]) -> Vec<Vertex> {
        positions.iter().map(|&i| self.universe[i]).collect()
    }

    /// Lexicographically smallest minimum subset of the universe hitting every constraint.
    pub fn solve(&self, g: &Graph, opts: &SearchOptions) -> Result<(Vec<Vertex>, SearchStats)> {
        let sol = hitting::minimum(&self.to_hitting(g)?, opts)?;
        Ok((self.lift(&sol.members), sol.stats))
    }
}

/// `W(uv) ∩ universe`, sorted.
pub fn distinguishers(g: &Graph, e: Edge, universe: &[Vertex]) -> Result<Vec<Vertex>> {
    g.require_connected()?;
    if !g.has_edge(e.0, e.1) {
        return Err(Error::UnknownEdge(g.name(e.0).into(), g.name(e.1).into()));
    }
    let mut w: Vec<Vertex> = universe
        .iter()
        .copied()
        .filter(|&x| g.distinguishes(x, e))
        .collect();
    w.sort_unstable();
    w.dedup();
    Ok(w)
}

/// First edge (in canonical order) of `edges` that no vertex of `set` distinguishes.
pub fn first_undistinguished_among(g: &Graph, edges: &[Edge], set: &[Vertex]) -> Option<Edge> {
    edges
        .iter()
        .copied()
        .find(|&e| !set.iter().any(|&w| g.distinguishes(w, e)))
}

pub fn first_undistinguished(g: &Graph, set: &[Vertex]) -> Result<Option<Edge>> {
    g.require_connected()?;
    Ok(first_undistinguished_among(g, g.edges(), set))
}

pub fn is_local_metric_set(g: &Graph, set: &[Vertex]) -> Result<bool> {
    Ok(first_undistinguished(g, set)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalBasis {
    pub size: usize,
    /// Lexicographically smallest minimum local metric set.
    pub witness: Vec<Vertex>,
    pub stats: SearchStats,
    /// Set when the graph has a single vertex.
    pub trivial: bool,
}

fn whole(g: &Graph) -> Vec<Vertex> {
    (0..g.order()).collect()
}

pub fn local_metric_dimension(g: &Graph, opts: &SearchOptions) -> Result<LocalBasis> {
    g.require_connected()?;
    let inst = DistinguisherInstance::new(g, g.edges(), &whole(g))?;
    let (witness, stats) = inst.solve(g, opts)?;
    Ok(LocalBasis {
        size: witness.len(),
        witness,
        stats,
        trivial: g.order() == 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEnumeration {
    pub size: usize,
    /// Sorted list of sorted bases.
    pub bases: Vec<Vec<Vertex>>,
    pub truncated: bool,
}

pub fn enumerate_minimum_bases(
    g: &Graph,
    cap: usize,
    opts: &SearchOptions,
) -> Result<BasisEnumeration> {
    g.require_connected()?;
    let inst = DistinguisherInstance::new(g, g.edges(), &whole(g))?;
    let en = hitting::enumerate_minimum(&inst.to_hitting(g)?, cap, opts)?;
    Ok(BasisEnumeration {
        size: en.size,
        bases: en.sets.iter().map(|s| inst.lift(s)).collect(),
        truncated: en.truncated,
    })
}

/// Whether `v` belongs to some local metric basis of `g`.
pub fn vertex_in_some_basis(g: &Graph, v: Vertex, opts: &SearchOptions) -> Result<bool> {
    g.require_connected()?;
    if v >= g.order() {
        return Err(Error::BadParameter(format!(
            "vertex index {v} out of range"
        )));
    }
    let inst = DistinguisherInstance::new(g, g.edges(), &whole(g))?;
    hitting::in_some_minimum(&inst.to_hitting(g)?, v, opts)
}

/// `dim_l` of the amalgam of the parts glued at one vertex each, from the
/// dimensions of the parts alone.
pub fn vertex_amalgam_dimension(parts: &[(Graph, Vertex)], opts: &SearchOptions) -> Result<usize> {
    if parts.is_empty() {
        return Err(Error::BadParameter("no parts".into()));
    }
    for (g, v) in parts {
        g.require_connected()?;
        if *v >= g.order() {
            return Err(Error::BadParameter(format!(
                "vertex index {v} out of range"
            )));
        }
    }
    if parts.iter().all(|(g, _)| g.order() == 1) {
        return Ok(0);
    }
    let odd: Vec<&(Graph, Vertex)> = parts.iter().filter(|(g, _)| !g.is_bipartite()).collect();
    match odd.len() {
        0 => Ok(1),
        1 => Ok(local_metric_dimension(&odd[0].0, opts)?.size),
        _ => {
            let mut total = 0;
            for (g, v) in parts {
                let dim = local_metric_dimension(g, opts)?.size;
                let eps = usize::from(dim > 0 && vertex_in_some_basis(g, *v, opts)?);
                total += dim - eps;
            }
            Ok(total)
        }
    }
}
