//! Randomized checks on isometric amalgams.
//!
//! Invariants that hold by construction of the certified bounds are asserted.
//! The lower bound `Σ|T_i| + |S| <= dim_l(H)` and the crude upper bound
//! `n_H - (n + 1)` are audited: a violation is counted and written out as a
//! bundle, never treated as a failure.

use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::amalgam::{amalgamate, Amalgam, Embedding, Part};
use crate::bounds::{
    bound_report, classify_cover, part_parallel_edges, part_solvable_edges, Bound, BoundOptions,
    CoverClass,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::hitting::SearchOptions;
use crate::io::{format_host, write_amalgam, write_file};
use crate::localmetric::{
    first_undistinguished_among, is_local_metric_set, local_metric_dimension,
};
use crate::report::{bound_records, Format};

const GRAPH_ATTEMPTS: usize = 200;

/// Connected graph on `names` with edge density `p`, drawn until connected.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, names: &[String], p: f64) -> Result<Graph> {
    let n = names.len();
    loop {
        let mut edges = Vec::new();
        // A random spanning tree keeps the rejection rate low.
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for k in 1..n {
            let parent = order[rng.gen_range(0..k)];
            edges.push((order[k].min(parent), order[k].max(parent)));
        }
        for a in 0..n {
            for b in a + 1..n {
                if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(
            names.to_vec(),
            edges
                .iter()
                .map(|&(a, b)| (names[a].as_str(), names[b].as_str())),
        )?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// A part containing `j` as an induced subgraph with `extra` more vertices,
/// or `None` if no connected one was drawn.
fn random_part(rng: &mut ChaCha8Rng, j: &Graph, extra: usize) -> Result<Option<Graph>> {
    let mut names: Vec<String> = j.names().to_vec();
    names.extend((1..=extra).map(|k| format!("x{k}")));
    let k = j.order();
    let p = rng.gen_range(0.2..0.6);
    for _ in 0..GRAPH_ATTEMPTS {
        let mut edges: Vec<(String, String)> = j
            .edges()
            .iter()
            .map(|&e| {
                let (a, b) = j.edge_names(e);
                (a.to_string(), b.to_string())
            })
            .collect();
        for a in k..names.len() {
            for b in 0..a {
                if rng.gen_bool(p) {
                    edges.push((names[b].clone(), names[a].clone()));
                }
            }
        }
        let g = Graph::new(names.clone(), edges)?;
        if g.is_connected() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Random isometric amalgam of 2 or 3 parts with at most `size_cap` vertices in H.
pub fn random_isometric_amalgam(rng: &mut ChaCha8Rng, size_cap: usize) -> Result<Amalgam> {
    if size_cap < 4 {
        return Err(Error::BadParameter("size cap must be at least 4".into()));
    }
    loop {
        let n_parts = if size_cap >= 7 {
            rng.gen_range(2..=3)
        } else {
            2
        };
        let k = rng.gen_range(1..=(size_cap - n_parts).min(4));
        let budget = size_cap - k;
        if budget < n_parts {
            continue;
        }
        let j_names: Vec<String> = (1..=k).map(|i| format!("j{i}")).collect();
        let j = if rng.gen_bool(0.7) {
            random_connected_graph(rng, &j_names, 0.4)?
        } else {
            let edges: Vec<(String, String)> = (0..k)
                .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(0.3))
                .map(|(a, b)| (j_names[a].clone(), j_names[b].clone()))
                .collect();
            Graph::new(j_names.clone(), edges)?
        };
        let mut left = budget;
        let mut parts = Vec::new();
        let mut target: Option<Vec<u32>> = None;
        for i in 0..n_parts {
            let reserve = n_parts - i - 1;
            let extra = rng.gen_range(1..=(left - reserve).min(6));
            left -= extra;
            let mut found = None;
            for _ in 0..20 {
                let Some(g) = random_part(rng, &j, extra)? else {
                    continue;
                };
                let emb = Embedding::by_name(&j, &g)?;
                let d: Vec<u32> = (0..k)
                    .flat_map(|a| (0..k).map(move |b| (a, b)))
                    .map(|(a, b)| g.d(emb.image(a), emb.image(b)))
                    .collect();
                if target.as_ref().is_none_or(|t| *t == d) {
                    target.get_or_insert(d);
                    found = Some(Part::new((i + 1).to_string(), g, emb));
                    break;
                }
            }
            match found {
                Some(p) => parts.push(p),
                None => break,
            }
        }
        if parts.len() < n_parts {
            continue;
        }
        let am = amalgamate(j, parts)?;
        if am.is_isometric_family() && am.host().is_connected() {
            return Ok(am);
        }
    }
}

/// Every distinguisher of a parallel edge of part `i` lies in `V(G_i - J_i)`.
pub fn check_parallel_distinguishers(am: &Amalgam) -> Result<Vec<String>> {
    let h = am.host();
    let mut out = Vec::new();
    for i in 0..am.n_parts() {
        let own = am.exclusive_vertices(i);
        for e in part_parallel_edges(am, i)? {
            for a in 0..h.order() {
                if h.distinguishes(a, e) && own.binary_search(&a).is_err() {
                    let (u, v) = h.edge_names(e);
                    out.push(format!(
                        "{} distinguishes parallel edge {u}-{v} of part {}",
                        h.name(a),
                        am.part(i).id
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// For random `T`: `T` distinguishes all parallel edges iff each `T ∩ V(G_i)`
/// distinguishes those of part `i`.
pub fn check_traversal_union(
    am: &Amalgam,
    rng: &mut ChaCha8Rng,
    trials: usize,
) -> Result<Vec<String>> {
    let h = am.host();
    let per_part: Vec<_> = (0..am.n_parts())
        .map(|i| part_parallel_edges(am, i))
        .collect::<Result<_>>()?;
    let all: Vec<_> = per_part.iter().flatten().copied().collect();
    let mut out = Vec::new();
    for _ in 0..trials {
        let t: Vec<Vertex> = (0..h.order()).filter(|_| rng.gen_bool(0.3)).collect();
        let whole = first_undistinguished_among(h, &all, &t).is_none();
        let each = (0..am.n_parts()).all(|i| {
            let own = am.part_vertices(i);
            let ti: Vec<Vertex> = t
                .iter()
                .copied()
                .filter(|v| own.binary_search(v).is_ok())
                .collect();
            first_undistinguished_among(h, &per_part[i], &ti).is_none()
        });
        if whole != each {
            out.push(format!(
                "traversal union disagrees for T = {:?}",
                h.set_names(&t)
            ));
        }
    }
    Ok(out)
}

/// The union of local metric bases of the parts is a local metric set of H.
pub fn check_union_of_bases(am: &Amalgam, opts: &SearchOptions) -> Result<Vec<String>> {
    let mut union = Vec::new();
    for i in 0..am.n_parts() {
        let b = local_metric_dimension(&am.part(i).graph, opts)?;
        union.extend(am.host_set(i, &b.witness));
    }
    union.sort_unstable();
    union.dedup();
    Ok(if is_local_metric_set(am.host(), &union)? {
        Vec::new()
    } else {
        vec![format!(
            "union of part bases {:?} is not a local metric set",
            am.host().set_names(&union)
        )]
    })
}

/// For a solvable edge `uv` of part `i` with `d(u,J) < d(v,J)` and `c ∈ V(J)`
/// realizing `d(u,J)`: `c` distinguishes `uv`, and so does every vertex `s`
/// of another part with `d(s,c) = d(s,J)`.
pub fn check_projection(am: &Amalgam) -> Result<Vec<String>> {
    let h = am.host();
    let shared = am.shared();
    let dj: Vec<u32> = (0..h.order())
        .map(|v| h.dist_to_set(v, &shared))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 0..am.n_parts() {
        for (a, b) in part_solvable_edges(am, i)? {
            let (u, v) = if dj[a] < dj[b] { (a, b) } else { (b, a) };
            for &c in shared.iter().filter(|&&c| h.d(u, c) == dj[u]) {
                if !h.distinguishes(c, (a, b)) {
                    out.push(format!(
                        "{} fails to distinguish {}-{}",
                        h.name(c),
                        h.name(u),
                        h.name(v)
                    ));
                }
                for j in (0..am.n_parts()).filter(|&j| j != i) {
                    for s in am.exclusive_vertices(j) {
                        if h.d(s, c) == dj[s] && !h.distinguishes(s, (a, b)) {
                            out.push(format!(
                                "{} (through {}) fails to distinguish {}-{}",
                                h.name(s),
                                h.name(c),
                                h.name(u),
                                h.name(v)
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Outcome of auditing one amalgam.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaseAudit {
    /// Violated assertable invariants.
    pub violations: Vec<String>,
    pub lower: usize,
    pub exact: Option<usize>,
    /// `M_i` sets that exist but are not self-resolving covers of the co-traversal.
    pub m_set_findings: usize,
    /// No witness of the form `V(H) - ({u} ∪ {v_i})` is a local metric set.
    pub crude_failed: bool,
}

impl CaseAudit {
    pub fn lower_violated(&self) -> bool {
        self.exact.is_some_and(|e| self.lower > e)
    }
}

/// Writes `H.gr`, `amalgam.amg` with its graph files, and `report.tsv` into `dir`.
pub fn write_bundle(am: &Amalgam, opts: &BoundOptions, dir: &Path) -> Result<()> {
    write_file(&dir.join("H.gr"), &format_host(am))?;
    write_amalgam(am, &dir.join("amalgam.amg"))?;
    let rep = bound_report(am, opts)?;
    write_file(
        &dir.join("report.tsv"),
        &bound_records(am, &rep).render(Format::Tsv),
    )
}

/// Runs every check on `am`. `rng` drives the randomized traversal check.
pub fn audit_case(am: &Amalgam, rng: &mut ChaCha8Rng, opts: &SearchOptions) -> Result<CaseAudit> {
    let bopts = BoundOptions {
        search: opts.clone(),
        compute_exact: true,
        ..BoundOptions::default()
    };
    let rep = bound_report(am, &bopts)?;
    let mut violations = Vec::new();
    for (name, bound) in [
        ("upper_iso", &rep.upper_iso),
        ("upper_cotraversal", &rep.upper_cotraversal),
        ("upper_covers", &rep.upper_covers),
    ] {
        if let Bound::Value(c) = bound {
            if !c.certified {
                violations.push(format!(
                    "{name} witness is not a local metric set of size <= {}",
                    c.value
                ));
            }
        }
    }
    let crude_failed = matches!(&rep.upper_crude, Bound::Value(c) if !c.certified);
    violations.extend(check_parallel_distinguishers(am)?);
    violations.extend(check_traversal_union(am, rng, 8)?);
    if am.is_isometric_family() {
        violations.extend(check_union_of_bases(am, opts)?);
        violations.extend(check_projection(am)?);
    }
    let mut m_set_findings = 0;
    if let Some(c) = &rep.cotraversal {
        for (i, p) in rep.parts.iter().enumerate() {
            if let Some(m) = &p.m_set {
                if classify_cover(am, i, c, m)? != Some(CoverClass::SelfResolving) {
                    m_set_findings += 1;
                }
            }
        }
    }
    Ok(CaseAudit {
        violations,
        lower: rep.lower,
        exact: rep.exact.size(),
        m_set_findings,
        crude_failed,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FuzzSummary {
    pub cases: usize,
    pub max_order: usize,
    /// `(case index, message)` for each violated invariant.
    pub violations: Vec<(usize, String)>,
    /// Case indices where the lower bound exceeds the exact value.
    pub lower_violations: Vec<usize>,
    /// Case indices where the crude upper bound has no valid witness.
    pub crude_violations: Vec<usize>,
    pub m_set_findings: usize,
    pub bundles: Vec<PathBuf>,
}

/// Audits `count` random isometric amalgams of at most `size_cap` vertices.
/// Lower-bound violations and invariant violations are bundled under
/// `bundle_dir` as `case-<index>` when a directory is given.
pub fn fuzz(
    count: usize,
    size_cap: usize,
    seed: u64,
    opts: &SearchOptions,
    bundle_dir: Option<&Path>,
) -> Result<FuzzSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = FuzzSummary::default();
    let bopts = BoundOptions {
        search: opts.clone(),
        compute_exact: true,
        ..BoundOptions::default()
    };
    for case in 0..count {
        let am = random_isometric_amalgam(&mut rng, size_cap)?;
        summary.max_order = summary.max_order.max(am.host().order());
        let audit = audit_case(&am, &mut rng, opts)?;
        let bad = audit.lower_violated() || audit.crude_failed || !audit.violations.is_empty();
        if audit.crude_failed {
            summary.crude_violations.push(case);
        }
        summary
            .violations
            .extend(audit.violations.into_iter().map(|m| (case, m)));
        if audit.exact.is_some_and(|e| audit.lower > e) {
            summary.lower_violations.push(case);
        }
        summary.m_set_findings += audit.m_set_findings;
        if bad {
            if let Some(dir) = bundle_dir {
                let path = dir.join(format!("case-{case}"));
                write_bundle(&am, &bopts, &path)?;
                summary.bundles.push(path);
            }
        }
        summary.cases += 1;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_amalgams_respect_the_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let am = random_isometric_amalgam(&mut rng, 10).unwrap();
            assert!(am.host().order() <= 10);
            assert!(am.is_isometric_family());
            assert!(am.n_parts() >= 2);
        }
    }

    #[test]
    fn fuzz_is_deterministic() {
        let opts = SearchOptions::default();
        let a = fuzz(15, 9, 11, &opts, None).unwrap();
        let b = fuzz(15, 9, 11, &opts, None).unwrap();
        assert_eq!(a, b);
        assert!(a.violations.is_empty(), "{:?}", a.violations);
    }
}
