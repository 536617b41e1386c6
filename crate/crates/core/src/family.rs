//! Standard graph families: paths, cycles, complete and empty graphs, joins,
//! spiders, generalized fans and wheels, and prisms.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    /// `(leg length, multiplicity)` pairs.
    Spider(Vec<(usize, usize)>),
    /// `K̄_m + P_n`.
    Fan(usize, usize),
    /// `K̄_m + C_n`.
    Wheel(usize, usize),
    /// `C_n □ K_2`.
    Prism(usize),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match self {
            Path(n) | Complete(n) | Empty(n) if *n == 0 => Err(bad("order must be at least 1")),
            Cycle(n) | Prism(n) if *n < 3 => Err(bad("cycle length must be at least 3")),
            Fan(m, n) if *m == 0 || *n == 0 => Err(bad("fan parameters must be at least 1")),
            Wheel(m, n) if *m == 0 || *n < 3 => {
                Err(bad("wheel needs m >= 1 and a rim of length >= 3"))
            }
            Spider(legs) => {
                if legs.iter().any(|&(len, mult)| len == 0 || mult == 0) {
                    return Err(bad("spider legs and multiplicities must be at least 1"));
                }
                if legs.iter().map(|l| l.1).sum::<usize>() < 3 {
                    return Err(bad("spider head must have degree at least 3"));
                }
                Ok(())
            }
            Join(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Parses `name p1 p2 ...` (or the compact `name:p1,p2`). Join operands use the
    /// compact form: `join empty:2 path:9`. Spider legs are written `len^mult`.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<FamilySpec> {
        let tokens: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        let Some((&head, rest)) = tokens.split_first() else {
            return Err(bad("missing family name"));
        };
        if let Some((name, params)) = head.split_once(':') {
            if !rest.is_empty() {
                return Err(bad(format!("unexpected arguments after `{head}`")));
            }
            let params: Vec<&str> = params.split(',').filter(|p| !p.is_empty()).collect();
            return Self::from_parts(name, &params);
        }
        Self::from_parts(head, rest)
    }

    fn from_parts(name: &str, params: &[&str]) -> Result<FamilySpec> {
        let ints = |want: usize| -> Result<Vec<usize>> {
            if params.len() != want {
                return Err(bad(format!("`{name}` takes {want} integer parameter(s)")));
            }
            params
                .iter()
                .map(|p| p.parse().map_err(|_| bad(format!("not an integer: `{p}`"))))
                .collect()
        };
        let spec = match name {
            "path" => FamilySpec::Path(ints(1)?[0]),
            "cycle" => FamilySpec::Cycle(ints(1)?[0]),
            "complete" => FamilySpec::Complete(ints(1)?[0]),
            "empty" => FamilySpec::Empty(ints(1)?[0]),
            "prism" => FamilySpec::Prism(ints(1)?[0]),
            "fan" => {
                let p = ints(2)?;
                FamilySpec::Fan(p[0], p[1])
            }
            "wheel" => {
                let p = ints(2)?;
                FamilySpec::Wheel(p[0], p[1])
            }
            "spider" => {
                let legs = params
                    .iter()
                    .map(|p| {
                        let (len, mult) = p.split_once('^').unwrap_or((p, "1"));
                        let len = len.parse().map_err(|_| bad(format!("bad leg `{p}`")))?;
                        let mult = mult.parse().map_err(|_| bad(format!("bad leg `{p}`")))?;
                        Ok((len, mult))
                    })
                    .collect::<Result<Vec<_>>>()?;
                FamilySpec::Spider(legs)
            }
            "join" => {
                if params.len() != 2 {
                    return Err(bad(
                        "`join` takes two operand specs such as `empty:2 path:9`",
                    ));
                }
                FamilySpec::Join(
                    Box::new(FamilySpec::parse(&[params[0]])?),
                    Box::new(FamilySpec::parse(&[params[1]])?),
                )
            }
            other => return Err(bad(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Empty(n) => write!(f, "empty:{n}"),
            Prism(n) => write!(f, "prism:{n}"),
            Fan(m, n) => write!(f, "fan:{m},{n}"),
            Wheel(m, n) => write!(f, "wheel:{m},{n}"),
            Spider(legs) => {
                let legs: Vec<String> = legs.iter().map(|(l, m)| format!("{l}^{m}")).collect();
                write!(f, "spider:{}", legs.join(","))
            }
            Join(a, b) => write!(f, "join({a};{b})"),
        }
    }
}

type EdgeList = Vec<(String, String)>;

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn path_edges(names: &[String]) -> EdgeList {
    names
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect()
}

fn cycle_edges(names: &[String]) -> EdgeList {
    let mut edges = path_edges(names);
    if names.len() >= 3 {
        edges.push((names[names.len() - 1].clone(), names[0].clone()));
    }
    edges
}

fn clique_edges(names: &[String]) -> EdgeList {
    let mut edges = Vec::new();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            edges.push((names[i].clone(), names[j].clone()));
        }
    }
    edges
}

/// Names of the independent side of a fan or wheel: `v0` for a single hub.
fn hub_names(m: usize) -> Vec<String> {
    if m == 1 {
        vec!["v0".to_string()]
    } else {
        numbered("v", m)
    }
}

/// Join of two graphs on disjoint name sets.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let mut names: Vec<String> = a.names().to_vec();
    names.extend(b.names().iter().cloned());
    let mut edges = EdgeList::new();
    for &e in a.edges() {
        let (x, y) = a.edge_names(e);
        edges.push((x.to_string(), y.to_string()));
    }
    for &e in b.edges() {
        let (x, y) = b.edge_names(e);
        edges.push((x.to_string(), y.to_string()));
    }
    for x in a.names() {
        for y in b.names() {
            edges.push((x.clone(), y.clone()));
        }
    }
    Graph::new(names, edges)
}

/// Spider without the degree-3 head requirement (a path when the head has degree 2).
pub fn spider_graph(legs: &[(usize, usize)]) -> Result<Graph> {
    let mut names = vec!["h".to_string()];
    let mut edges = EdgeList::new();
    let mut leg = 0;
    for &(len, mult) in legs {
        for _ in 0..mult {
            leg += 1;
            let mut prev = "h".to_string();
            for depth in 1..=len {
                let name = format!("leg{leg}_{depth}");
                names.push(name.clone());
                edges.push((prev, name.clone()));
                prev = name;
            }
        }
    }
    Graph::new(names, edges)
}

/// Builds the graph described by `spec` with deterministic vertex names.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    use FamilySpec::*;
    match spec {
        Path(n) => {
            let names = numbered("u", *n);
            let edges = path_edges(&names);
            Graph::new(names, edges)
        }
        Cycle(n) => {
            let names = numbered("u", *n);
            let edges = cycle_edges(&names);
            Graph::new(names, edges)
        }
        Complete(n) => {
            let names = numbered("u", *n);
            let edges = clique_edges(&names);
            Graph::new(names, edges)
        }
        Empty(n) => Graph::new(numbered("u", *n), EdgeList::new()),
        Join(a, b) => {
            let a = generate(a)?.relabel(|n| format!("1.{n}"))?;
            let b = generate(b)?.relabel(|n| format!("2.{n}"))?;
            join(&a, &b)
        }
        Spider(legs) => spider_graph(legs),
        Fan(m, n) => {
            let hubs = Graph::new(hub_names(*m), EdgeList::new())?;
            join(&hubs, &generate(&Path(*n))?)
        }
        Wheel(m, n) => {
            let hubs = Graph::new(hub_names(*m), EdgeList::new())?;
            join(&hubs, &generate(&Cycle(*n))?)
        }
        Prism(n) => {
            let outer = numbered("u", *n);
            let inner = numbered("w", *n);
            let mut edges = cycle_edges(&outer);
            edges.extend(cycle_edges(&inner));
            edges.extend(outer.iter().cloned().zip(inner.iter().cloned()));
            let mut names = outer;
            names.extend(inner);
            Graph::new(names, edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(spec: FamilySpec) -> (usize, usize) {
        let g = generate(&spec).unwrap();
        (g.order(), g.size())
    }

    #[test]
    fn named_examples() {
        assert_eq!(counts(FamilySpec::Fan(1, 9)), (10, 17));
        assert_eq!(counts(FamilySpec::Prism(8)), (16, 24));
        let sp = generate(&FamilySpec::Spider(vec![(2, 3)])).unwrap();
        assert_eq!(sp.order(), 7);
        assert_eq!(sp.degree(sp.require("h").unwrap()), 3);
        assert!(sp.vertex("leg3_2").is_some());
    }

    #[test]
    fn fan_naming() {
        let f = generate(&FamilySpec::Fan(1, 9)).unwrap();
        let v0 = f.require("v0").unwrap();
        assert_eq!(f.degree(v0), 9);
        assert!(f.vertex("u9").is_some());
    }

    #[test]
    fn join_prefixes_operands() {
        let g = generate(&FamilySpec::parse(&["join", "empty:2", "path:3"]).unwrap()).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 2 + 6);
        assert!(g.vertex("1.u2").is_some() && g.vertex("2.u3").is_some());
    }

    #[test]
    fn parameter_errors() {
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(generate(&FamilySpec::Spider(vec![(2, 2)])).is_err());
        assert!(generate(&FamilySpec::Path(0)).is_err());
        assert!(FamilySpec::parse(&["fan", "1"]).is_err());
        assert!(FamilySpec::parse(&["blob", "1"]).is_err());
    }

    #[test]
    fn parse_forms_agree() {
        assert_eq!(
            FamilySpec::parse(&["fan", "1", "9"]).unwrap(),
            FamilySpec::parse(&["fan:1,9"]).unwrap()
        );
        assert_eq!(
            FamilySpec::parse(&["spider", "2^3", "3"]).unwrap(),
            FamilySpec::Spider(vec![(2, 3), (3, 1)])
        );
    }
}
