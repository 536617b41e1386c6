//! Ordered key/value reports and their text and tsv renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::amalgam::Amalgam;
use crate::bounds::{Bound, BoundReport, Exact};
use crate::error::Error;
use crate::graph::{Edge, Graph, Vertex};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Tsv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format, Error> {
        match s {
            "text" => Ok(Format::Text),
            "tsv" => Ok(Format::Tsv),
            other => Err(Error::BadParameter(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.records.push((key.into(), value.to_string()));
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.records
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// `key=value` lines for text, `key<TAB>value` lines for tsv.
    pub fn render(&self, format: Format) -> String {
        let sep = match format {
            Format::Text => '=',
            Format::Tsv => '\t',
        };
        let mut out = String::new();
        for (k, v) in &self.records {
            let _ = writeln!(out, "{k}{sep}{v}");
        }
        out
    }
}

/// Sorted vertex names, comma-joined.
pub fn join_names(g: &Graph, set: &[Vertex]) -> String {
    let mut names = g.set_names(set);
    names.sort();
    names.join(",")
}

/// Sorted `a-b` edge names, comma-joined.
pub fn join_edges(g: &Graph, edges: &[Edge]) -> String {
    let mut names: Vec<String> = edges
        .iter()
        .map(|&e| {
            let (a, b) = g.edge_names(e);
            format!("{a}-{b}")
        })
        .collect();
    names.sort();
    names.join(",")
}

fn opt_bool(b: Option<bool>) -> String {
    b.map_or("na".into(), |b| b.to_string())
}

fn push_bound(r: &mut Report, h: &Graph, key: &str, b: &Bound) {
    match b {
        Bound::Value(c) => {
            r.push(key, c.value);
            r.push(format!("{key}_witness"), join_names(h, &c.witness));
            r.push(format!("{key}_certified"), c.certified);
        }
        Bound::NotApplicable(why) => {
            r.push(key, "na");
            r.push(format!("{key}_reason"), why);
        }
    }
}

/// Amalgam summary: sizes and the isometric flag.
pub fn amalgam_records(am: &Amalgam) -> Report {
    let mut r = Report::new();
    r.push("n_H", am.host().order());
    r.push("m_H", am.host().size());
    r.push("n", am.n_parts());
    r.push("n_J", am.j().order());
    r.push("isometric", am.is_isometric_family());
    r
}

/// Every number and set in `rep`, keyed for scripted consumers.
pub fn bound_records(am: &Amalgam, rep: &BoundReport) -> Report {
    let h = am.host();
    let na = || "na".to_string();
    let mut r = amalgam_records(am);
    r.push("all_bipartite", rep.all_bipartite);
    for p in &rep.parts {
        let k = format!("part.{}", p.id);
        r.push(format!("{k}.parallel"), join_edges(h, &p.parallel_edges));
        r.push(format!("{k}.solvable"), join_edges(h, &p.solvable_edges));
        r.push(format!("{k}.traversal"), join_names(h, &p.traversal));
        r.push(
            format!("{k}.m_set"),
            p.m_set.as_ref().map_or_else(na, |m| join_names(h, m)),
        );
    }
    r.push("out_solving", join_names(h, &rep.out_solving));
    r.push("out_solving_in_j", join_names(h, &rep.out_solving_in_j));
    r.push(
        "cotraversal",
        rep.cotraversal
            .as_ref()
            .map_or_else(na, |c| join_names(h, c)),
    );
    r.push(
        "cotraversal_pooled",
        rep.cotraversal_pooled
            .as_ref()
            .map_or_else(na, |c| join_names(h, c)),
    );
    r.push(
        "cotraversal_projective",
        opt_bool(rep.cotraversal_projective),
    );
    r.push("c_subset_s", opt_bool(rep.c_subset_s));
    match &rep.covers {
        Some(ch) => {
            r.push("covers.cotraversal", join_names(h, &ch.cotraversal));
            for (p, c) in rep.parts.iter().zip(&ch.covers) {
                r.push(format!("covers.{}", p.id), join_names(h, &c.set));
                let class = if c.by_convention {
                    format!("{} (empty by convention)", c.class)
                } else {
                    c.class.to_string()
                };
                r.push(format!("covers.{}.class", p.id), class);
            }
        }
        None => r.push("covers", "na"),
    }
    r.push("lower", rep.lower);
    push_bound(&mut r, h, "upper_crude", &rep.upper_crude);
    push_bound(&mut r, h, "upper_iso", &rep.upper_iso);
    push_bound(&mut r, h, "upper_cotraversal", &rep.upper_cotraversal);
    push_bound(&mut r, h, "upper_covers", &rep.upper_covers);
    match &rep.exact {
        Exact::NotComputed => r.push("exact", "na"),
        Exact::BudgetExceeded => r.push("exact", "timeout"),
        Exact::Value(b) => {
            r.push("exact", b.size);
            r.push("exact_basis", join_names(h, &b.witness));
        }
    }
    r.push("lower_le_exact", opt_bool(rep.lower_le_exact()));
    r.push("upper_ge_exact", opt_bool(rep.upper_ge_exact()));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_both_formats() {
        let mut r = Report::new();
        r.push("dim_l", 2);
        r.push("basis", "a,b");
        assert_eq!(r.render(Format::Text), "dim_l=2\nbasis=a,b\n");
        assert_eq!(r.render(Format::Tsv), "dim_l\t2\nbasis\ta,b\n");
        assert_eq!(r.get("basis"), Some("a,b"));
        assert!("xml".parse::<Format>().is_err());
    }
}
