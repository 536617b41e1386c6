//! Text formats.
//!
//! Graphs (`.gr`): one record per line, `v <name>` or `e <name1> <name2>`;
//! `#` starts a comment line; line order does not matter.
//!
//! Amalgam specs (`.amg`): `j <path.gr>` once, `part <id> <path.gr>` at least
//! once, and `map <id> <J-vertex> <G-vertex>` for every J-vertex of every part.
//! Relative paths resolve against the spec file's directory.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::amalgam::{amalgamate, Amalgam, Embedding, Part, Provenance};
use crate::error::{Error, Result};
use crate::graph::{check_name, Graph};

fn parse_err(label: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: label.to_string(),
        line,
        message: message.into(),
    }
}

/// Parses `.gr` text; `label` names the source in error messages.
pub fn parse_graph(text: &str, label: &str) -> Result<Graph> {
    let mut vertices: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(String, String, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["v", name] => {
                check_name(name).map_err(|e| parse_err(label, lineno, e.to_string()))?;
                if let Some(first) = vertices.insert(name.to_string(), lineno) {
                    return Err(parse_err(
                        label,
                        lineno,
                        format!("duplicate vertex `{name}` (first declared on line {first})"),
                    ));
                }
            }
            ["e", a, b] => edges.push((a.to_string(), b.to_string(), lineno)),
            _ => return Err(parse_err(label, lineno, format!("malformed line `{line}`"))),
        }
    }
    let mut seen = BTreeSet::new();
    for (a, b, lineno) in &edges {
        for x in [a, b] {
            if !vertices.contains_key(x) {
                return Err(parse_err(label, *lineno, format!("unknown endpoint `{x}`")));
            }
        }
        if a == b {
            return Err(parse_err(label, *lineno, format!("self-loop at `{a}`")));
        }
        let key = if a < b { (a, b) } else { (b, a) };
        if !seen.insert(key) {
            return Err(parse_err(label, *lineno, format!("duplicate edge {a}-{b}")));
        }
    }
    Graph::new(
        vertices.into_keys(),
        edges.iter().map(|(a, b, _)| (a.as_str(), b.as_str())),
    )
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graph(&text, &path.display().to_string())
}

/// Canonical `.gr` text: comment lines, then vertices, then edges, all sorted.
pub fn format_graph(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for name in g.names() {
        let _ = writeln!(out, "v {name}");
    }
    for &e in g.edges() {
        let (a, b) = g.edge_names(e);
        let _ = writeln!(out, "e {a} {b}");
    }
    out
}

/// `.gr` text for H with one provenance comment per vertex.
pub fn format_host(am: &Amalgam) -> String {
    let h = am.host();
    let comments: Vec<String> = (0..h.order())
        .map(|v| match am.provenance(v) {
            Provenance::Shared(_) => format!("shared {}", h.name(v)),
            Provenance::Part { part, vertex } => {
                let p = am.part(*part);
                format!(
                    "from {} part={} vertex={}",
                    h.name(v),
                    p.id,
                    p.graph.name(*vertex)
                )
            }
        })
        .collect();
    format_graph(h, &comments)
}

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Parsed `.amg` spec, before the graph files are read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamSpec {
    pub j: PathBuf,
    /// `(id, path)` in file order.
    pub parts: Vec<(String, PathBuf)>,
    /// Part id -> list of `(J-vertex, G-vertex)`.
    pub maps: BTreeMap<String, Vec<(String, String)>>,
}

pub fn parse_amalgam_spec(text: &str, label: &str, base: &Path) -> Result<AmalgamSpec> {
    let mut j = None;
    let mut parts: Vec<(String, PathBuf)> = Vec::new();
    let mut maps: BTreeMap<String, Vec<(String, String)>> = BTreeMap::new();
    let mut map_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["j", path] => {
                if j.is_some() {
                    return Err(parse_err(label, lineno, "`j` given more than once"));
                }
                j = Some(base.join(path));
            }
            ["part", id, path] => {
                check_name(id).map_err(|e| parse_err(label, lineno, e.to_string()))?;
                if parts.iter().any(|(p, _)| p == id) {
                    return Err(parse_err(
                        label,
                        lineno,
                        format!("duplicate part id `{id}`"),
                    ));
                }
                parts.push((id.to_string(), base.join(path)));
            }
            ["map", id, a, b] => {
                map_lines.push((id.to_string(), lineno));
                maps.entry(id.to_string())
                    .or_default()
                    .push((a.to_string(), b.to_string()));
            }
            _ => return Err(parse_err(label, lineno, format!("malformed line `{line}`"))),
        }
    }
    let j = j.ok_or_else(|| parse_err(label, 0, "missing `j` line"))?;
    if parts.is_empty() {
        return Err(parse_err(label, 0, "no `part` lines"));
    }
    for (id, lineno) in map_lines {
        if !parts.iter().any(|(p, _)| *p == id) {
            return Err(parse_err(
                label,
                lineno,
                format!("map for unknown part `{id}`"),
            ));
        }
    }
    Ok(AmalgamSpec { j, parts, maps })
}

impl AmalgamSpec {
    pub fn build(&self) -> Result<Amalgam> {
        let j = read_graph(&self.j)?;
        let mut parts = Vec::new();
        for (id, path) in &self.parts {
            let g = read_graph(path)?;
            let pairs = self.maps.get(id).cloned().unwrap_or_default();
            let emb = Embedding::from_names(&j, &g, &pairs).map_err(|e| match e {
                Error::UnknownVertex(v) => {
                    Error::InvalidEmbedding(format!("part {id}: unknown vertex `{v}`"))
                }
                Error::InvalidEmbedding(m) => Error::InvalidEmbedding(format!("part {id}: {m}")),
                other => other,
            })?;
            parts.push(Part::new(id.clone(), g, emb));
        }
        amalgamate(j, parts)
    }
}

pub fn read_amalgam(path: &Path) -> Result<Amalgam> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let base = path.parent().unwrap_or(Path::new(""));
    parse_amalgam_spec(&text, &path.display().to_string(), base)?.build()
}

/// Writes `<stem>.amg` together with `<stem>.J.gr` and `<stem>.part<id>.gr`
/// next to it. Returns the spec path.
pub fn write_amalgam(am: &Amalgam, spec_path: &Path) -> Result<PathBuf> {
    let dir = spec_path.parent().unwrap_or(Path::new(""));
    let stem = spec_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "amalgam".into());
    let j_file = format!("{stem}.J.gr");
    write_file(&dir.join(&j_file), &format_graph(am.j(), &[]))?;
    let mut spec = format!("j {j_file}\n");
    for p in am.parts() {
        let file = format!("{stem}.part{}.gr", p.id);
        write_file(&dir.join(&file), &format_graph(&p.graph, &[]))?;
        let _ = writeln!(spec, "part {} {file}", p.id);
    }
    for p in am.parts() {
        for jv in 0..am.j().order() {
            let _ = writeln!(
                spec,
                "map {} {} {}",
                p.id,
                am.j().name(jv),
                p.graph.name(p.embedding.image(jv))
            );
        }
    }
    write_file(spec_path, &spec)?;
    Ok(spec_path.to_path_buf())
}
