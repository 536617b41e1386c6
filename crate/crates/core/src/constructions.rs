//! Builders for the named example amalgams, each paired with the quantities
//! claimed for it. Claims are evaluated by [`crate::verify`].

use std::fmt;

use crate::amalgam::{amalgamate, Amalgam, Embedding, Part};
use crate::bounds::CoverClass;
use crate::error::{Error, Result};
use crate::family::{self, generate, spider_graph, FamilySpec};
use crate::graph::{Graph, DEFAULT_CHROMATIC_CAP};

/// A checkable statement about an instance. Vertex names refer to H unless
/// the variant says otherwise.
#[derive(Clone, Debug)]
pub enum Check {
    DimHost(usize),
    /// `dim_l(H) = dim_l(other)`.
    DimHostEquals {
        label: String,
        other: Graph,
    },
    /// `dim_l(G_part)`.
    DimPart {
        part: String,
        value: usize,
    },
    HostOrder(usize),
    HostIsomorphicTo {
        label: String,
        other: Graph,
    },
    Isometric(bool),
    Distance {
        a: String,
        b: String,
        value: u32,
    },
    /// `∥(J:G_part)`, part-local names.
    Parallel {
        part: String,
        edges: Vec<(String, String)>,
    },
    /// `Solv(J:G_part)`, part-local names.
    Solvable {
        part: String,
        edges: Vec<(String, String)>,
    },
    Traversal {
        part: String,
        set: Vec<String>,
    },
    TraversalSize {
        part: String,
        size: usize,
    },
    OutSolving(Vec<String>),
    OutSolvingSize(usize),
    /// The minimum co-traversal.
    Cotraversal(Vec<String>),
    /// The set meets the co-traversal distinguishing requirement.
    IsCotraversal(Vec<String>),
    Projective {
        cotraversal: Vec<String>,
        projective: bool,
    },
    /// `set` is a cover of `cotraversal` in the part with the given class.
    CoverClass {
        part: String,
        cotraversal: Vec<String>,
        set: Vec<String>,
        class: CoverClass,
    },
    MSet {
        part: String,
        set: Vec<String>,
    },
    LocalMetricSet(Vec<String>),
    /// Local metric set of `G_part`, part-local names.
    PartLocalMetricSet {
        part: String,
        set: Vec<String>,
    },
    /// Local metric set of H of size `dim_l(H)`.
    Basis(Vec<String>),
    /// The only local metric basis of `G_part`, part-local names.
    UniquePartBasis {
        part: String,
        set: Vec<String>,
    },
    /// Some basis of `G_part` avoids `J_part`.
    BasisAvoidingJ {
        part: String,
    },
    Lower(usize),
    LowerEqualsExact,
    UpperCrude(usize),
    DimEqualsSum(bool),
    AllBasesAvoidJ(bool),
    BasesPairwiseDisjoint(bool),
    /// `∥(J:G_part) = ` the given edges and the J embedding is isometric.
    JIsometricInPart {
        part: String,
    },
}

#[derive(Clone, Debug)]
pub struct Claim {
    pub check: Check,
    /// Reason the claimed value is known to disagree with the source text or
    /// rests on an interpretation.
    pub flag: Option<String>,
}

impl Claim {
    fn plain(check: Check) -> Claim {
        Claim { check, flag: None }
    }

    fn flagged(check: Check, why: &str) -> Claim {
        Claim {
            check,
            flag: Some(why.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    /// Construction name, e.g. `wheel-prism`.
    pub name: String,
    /// Parameter summary, e.g. `n=8`.
    pub params: String,
    pub amalgam: Amalgam,
    pub claims: Vec<Claim>,
}

impl Instance {
    /// `name` followed by the parameters, e.g. `wheel-prism n=8`.
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            self.name.clone()
        } else {
            format!("{} {}", self.name, self.params)
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

fn strs<S: AsRef<str>>(v: &[S]) -> Vec<String> {
    v.iter().map(|s| s.as_ref().to_string()).collect()
}

fn edge_pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
    v.iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn kbar(names: &[String]) -> Result<Graph> {
    Graph::new(names.to_vec(), Vec::<(String, String)>::new())
}

type PartSpec<'a, S> = (&'a str, Graph, Vec<(S, S)>);

/// Amalgam of `(id, graph, J-name -> G-name pairs)` parts.
fn glue<S: AsRef<str>>(j: Graph, parts: Vec<PartSpec<'_, S>>) -> Result<Amalgam> {
    let parts = parts
        .into_iter()
        .map(|(id, g, pairs)| {
            let e = Embedding::from_names(&j, &g, &pairs)?;
            Ok(Part::new(id, g, e))
        })
        .collect::<Result<Vec<_>>>()?;
    amalgamate(j, parts)
}

/// Parts embedding J by identical names.
fn glue_by_name(j: Graph, parts: Vec<(&str, Graph)>) -> Result<Amalgam> {
    let parts = parts
        .into_iter()
        .map(|(id, g)| {
            let e = Embedding::by_name(&j, &g)?;
            Ok(Part::new(id, g, e))
        })
        .collect::<Result<Vec<_>>>()?;
    amalgamate(j, parts)
}

fn part_ids(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// `P_3` and `P_4` glued at their end vertices.
pub fn one_plus_one() -> Result<Instance> {
    let j = kbar(&strs(&["a", "b"]))?;
    let am = glue(
        j,
        vec![
            (
                "1",
                generate(&FamilySpec::Path(3))?,
                vec![("a", "u1"), ("b", "u3")],
            ),
            (
                "2",
                generate(&FamilySpec::Path(4))?,
                vec![("a", "u1"), ("b", "u4")],
            ),
        ],
    )?;
    Ok(Instance {
        name: "one-plus-one".into(),
        params: String::new(),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::HostIsomorphicTo {
                label: "C5".into(),
                other: generate(&FamilySpec::Cycle(5))?,
            }),
            Claim::plain(Check::DimHost(2)),
            Claim::plain(Check::Isometric(false)),
        ],
    })
}

/// `Sp{2^n}` and `Sp{3^n}` glued at the head and at the leg tips.
pub fn spider(n: usize) -> Result<Instance> {
    if n < 2 {
        return Err(bad("spider amalgam needs n >= 2"));
    }
    let mut jn = vec!["h".to_string()];
    jn.extend(numbered("t", n));
    let j = kbar(&jn)?;
    let map = |depth: usize| -> Vec<(String, String)> {
        let mut m = vec![("h".to_string(), "h".to_string())];
        m.extend((1..=n).map(|i| (format!("t{i}"), format!("leg{i}_{depth}"))));
        m
    };
    let am = glue(
        j,
        vec![
            ("1", spider_graph(&[(2, n)])?, map(2)),
            ("2", spider_graph(&[(3, n)])?, map(3)),
        ],
    )?;
    let c5 = generate(&FamilySpec::Cycle(5))?;
    let star = amalgamate(
        Graph::new(["u1"], Vec::<(&str, &str)>::new())?,
        (1..=n)
            .map(|i| {
                let e = Embedding::from_names(
                    &Graph::new(["u1"], Vec::<(&str, &str)>::new())?,
                    &c5,
                    &[("u1", "u1")],
                )?;
                Ok(Part::new(i.to_string(), c5.clone(), e))
            })
            .collect::<Result<Vec<_>>>()?,
    )?;
    Ok(Instance {
        name: "spider".into(),
        params: format!("n={n}"),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::HostIsomorphicTo {
                label: format!("{n} five-cycles sharing a vertex"),
                other: star.host().clone(),
            }),
            Claim::plain(Check::DimHost(n)),
        ],
    })
}

/// Wheel `W_{1,n}` and prism `C_n □ K_2` glued along the rim / outer cycle.
pub fn wheel_prism(n: usize) -> Result<Instance> {
    if n < 4 {
        return Err(bad("wheel-prism needs n >= 4"));
    }
    let j = generate(&FamilySpec::Cycle(n))?;
    let am = glue_by_name(
        j,
        vec![
            ("1", generate(&FamilySpec::Wheel(1, n))?),
            ("2", generate(&FamilySpec::Prism(n))?),
        ],
    )?;
    let k = ceil_div(n, 4);
    Ok(Instance {
        name: "wheel-prism".into(),
        params: format!("n={n}"),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::HostOrder(1 + 2 * n)),
            Claim::plain(Check::Parallel {
                part: "1".into(),
                edges: Vec::new(),
            }),
            Claim::plain(Check::TraversalSize {
                part: "1".into(),
                size: 0,
            }),
            Claim::plain(Check::TraversalSize {
                part: "2".into(),
                size: 0,
            }),
            Claim::plain(Check::OutSolvingSize(k)),
            Claim::plain(Check::Lower(k)),
            Claim::plain(Check::DimHost(k)),
        ],
    })
}

/// The 18-vertex gadget: `C_17` plus `v`, chords `u1u9`, `u5u14` and `v` on `u5`, `u14`.
pub fn watermelon_gadget() -> Result<Graph> {
    let mut names = numbered("u", 17);
    let mut edges: Vec<(String, String)> = (1..=17)
        .map(|i| (format!("u{i}"), format!("u{}", i % 17 + 1)))
        .collect();
    names.push("v".into());
    for (a, b) in [("u1", "u9"), ("u5", "u14"), ("v", "u5"), ("v", "u14")] {
        edges.push((a.into(), b.into()));
    }
    Graph::new(names, edges)
}

/// `n` gadgets glued over `{a, b, c}` with edge `ab`, then glued to `v0 + P_3`
/// over `{b, c}`.
pub fn watermelon(n: usize) -> Result<Instance> {
    if n < 4 {
        return Err(bad("watermelon needs n >= 4"));
    }
    let q = watermelon_gadget()?;
    let inner_j = Graph::new(["a", "b", "c"], [("a", "b")])?;
    let ids = part_ids(n);
    let inner = glue(
        inner_j,
        ids.iter()
            .map(|id| {
                (
                    id.as_str(),
                    q.clone(),
                    vec![("a", "u1"), ("b", "u9"), ("c", "v")],
                )
            })
            .collect(),
    )?;
    let g1 = inner.host().clone();
    let g2 = Graph::new(
        ["v0", "w1", "w2", "w3"],
        [
            ("v0", "w1"),
            ("v0", "w2"),
            ("v0", "w3"),
            ("w1", "w2"),
            ("w2", "w3"),
        ],
    )?;
    let j = kbar(&strs(&["b", "c"]))?;
    let am = glue(
        j,
        vec![
            ("1", g1, vec![("b", "b"), ("c", "c")]),
            ("2", g2, vec![("b", "w1"), ("c", "w3")]),
        ],
    )?;
    let u5 = "p1.p1.u5".to_string();
    Ok(Instance {
        name: "watermelon".into(),
        params: format!("n={n}"),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::HostOrder(15 * n + 5)),
            Claim::plain(Check::DimPart {
                part: "1".into(),
                value: 2,
            }),
            Claim::plain(Check::DimPart {
                part: "2".into(),
                value: 2,
            }),
            Claim::plain(Check::PartLocalMetricSet {
                part: "2".into(),
                set: strs(&["v0", "w2"]),
            }),
            Claim::plain(Check::Distance {
                a: "p1.a".into(),
                b: u5.clone(),
                value: 4,
            }),
            Claim::plain(Check::Distance {
                a: "b".into(),
                b: u5.clone(),
                value: 3,
            }),
            Claim::plain(Check::Distance {
                a: "c".into(),
                b: u5,
                value: 1,
            }),
            Claim::plain(Check::DimHost(n + 1)),
        ],
    })
}

/// Complete graphs `K_{m_i}` glued over `K_r`.
pub fn crude_tight(m_list: &[usize], r: usize) -> Result<Instance> {
    if r == 0 || m_list.is_empty() || m_list.iter().any(|&m| m <= r) {
        return Err(bad("crude-tight needs r >= 1 and every m_i > r"));
    }
    let j = generate(&FamilySpec::Complete(r))?;
    let ids = part_ids(m_list.len());
    let parts = ids
        .iter()
        .zip(m_list)
        .map(|(id, &m)| Ok((id.as_str(), generate(&FamilySpec::Complete(m))?)))
        .collect::<Result<Vec<_>>>()?;
    let am = glue_by_name(j, parts)?;
    let n = m_list.len();
    let value = m_list.iter().sum::<usize>() - (r + 1) * (n - 1) - 2;
    let ms: Vec<String> = m_list.iter().map(usize::to_string).collect();
    Ok(Instance {
        name: "crude-tight".into(),
        params: format!("m={} r={r}", ms.join(",")),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::UpperCrude(value)),
            Claim::plain(Check::DimHost(value)),
        ],
    })
}

/// `n` copies of `v0 + P_m` glued along the whole path.
pub fn fan_chain(m: usize, n: usize) -> Result<Instance> {
    if m < 6 || n < 1 {
        return Err(bad("fan-chain needs m > 5 and n >= 1"));
    }
    let j = generate(&FamilySpec::Path(m))?;
    let ids = part_ids(n);
    let parts = ids
        .iter()
        .map(|id| Ok((id.as_str(), generate(&FamilySpec::Fan(1, m))?)))
        .collect::<Result<Vec<_>>>()?;
    let am = glue_by_name(j, parts)?;
    let k = ceil_div(m - 1, 4);
    let mut claims: Vec<Claim> = ids
        .iter()
        .flat_map(|id| {
            [
                Claim::plain(Check::DimPart {
                    part: id.clone(),
                    value: k,
                }),
                Claim::plain(Check::TraversalSize {
                    part: id.clone(),
                    size: 0,
                }),
            ]
        })
        .collect();
    claims.push(Claim::plain(Check::DimHost(k)));
    claims.push(Claim::plain(Check::LowerEqualsExact));
    Ok(Instance {
        name: "fan-chain".into(),
        params: format!("m={m} n={n}"),
        amalgam: am,
        claims,
    })
}

/// `n` copies of `v0 + P_{4m+1}` glued over `K̄_m` at `u3, u7, ..., u_{4m-1}`.
pub fn fan_chain_spaced(m: usize, n: usize) -> Result<Instance> {
    if m < 2 || n < 2 {
        return Err(bad("fan-chain-spaced needs m >= 2 and n >= 2"));
    }
    let r = 4 * m + 1;
    let jn: Vec<String> = (0..m).map(|k| format!("u{}", 4 * k + 3)).collect();
    let j = kbar(&jn)?;
    let ids = part_ids(n);
    let parts = ids
        .iter()
        .map(|id| Ok((id.as_str(), generate(&FamilySpec::Fan(1, r))?)))
        .collect::<Result<Vec<_>>>()?;
    let am = glue_by_name(j, parts)?;
    let stated: Vec<(String, String)> = (0..m)
        .flat_map(|k| {
            [
                ("v0".to_string(), format!("u{}", 4 * k + 2)),
                ("v0".to_string(), format!("u{}", 4 * k + 4)),
            ]
        })
        .collect();
    let mut claims = Vec::new();
    for id in &ids {
        claims.push(Claim::plain(Check::DimPart {
            part: id.clone(),
            value: m,
        }));
        claims.push(Claim::plain(Check::PartLocalMetricSet {
            part: id.clone(),
            set: jn.clone(),
        }));
        claims.push(Claim::plain(Check::Parallel {
            part: id.clone(),
            edges: stated.clone(),
        }));
        claims.push(Claim::plain(Check::Traversal {
            part: id.clone(),
            set: vec![format!("p{id}.v0")],
        }));
    }
    claims.push(Claim::plain(Check::IsCotraversal(jn.clone())));
    claims.push(Claim::plain(Check::OutSolving(Vec::new())));
    claims.push(Claim::plain(Check::LocalMetricSet(
        ids.iter().map(|id| format!("p{id}.v0")).collect(),
    )));
    claims.push(Claim::plain(Check::DimHost(n)));
    Ok(Instance {
        name: "fan-chain-spaced".into(),
        params: format!("m={m} n={n}"),
        amalgam: am,
        claims,
    })
}

/// A graph containing `j` as an induced subgraph with `dim_l = m` and a
/// basis avoiding `j`. Vertices of `j` keep their names.
pub fn chi_graph(j: &Graph, m: usize) -> Result<(Graph, Vec<String>)> {
    let chi = if j.order() == 0 {
        0
    } else {
        j.chromatic_number(DEFAULT_CHROMATIC_CAP)?.chromatic_number
    };
    if m == 0 || m < chi {
        return Err(bad(format!("m = {m} is below the chromatic number {chi}")));
    }
    let edges_of = |g: &Graph| -> Vec<(String, String)> {
        g.edges()
            .iter()
            .map(|&e| {
                let (a, b) = g.edge_names(e);
                (a.to_string(), b.to_string())
            })
            .collect()
    };
    if chi <= 1 {
        if m == 1 {
            let hub = Graph::new(["x"], Vec::<(&str, &str)>::new())?;
            return Ok((family::join(j, &hub)?, strs(&["x"])));
        }
        let path = generate(&FamilySpec::Path(4 * m + 1))?.relabel(|n| n.replacen('u', "p", 1))?;
        let basis = (1..=m).map(|i| format!("p{}", 4 * i - 1)).collect();
        return Ok((family::join(j, &path)?, basis));
    }
    let classes = j.chromatic_number(DEFAULT_CHROMATIC_CAP)?.classes();
    let mut names: Vec<String> = j.names().to_vec();
    let mut edges = edges_of(j);
    for i in 1..=m {
        let (x, y) = (format!("x{i}"), format!("y{i}"));
        names.push(x.clone());
        names.push(y.clone());
        edges.push((x.clone(), y.clone()));
        for (c, class) in classes.iter().enumerate() {
            let direct = i % chi == (c + 1) % chi;
            for &u in class {
                let un = j.name(u);
                for end in [&x, &y] {
                    if direct {
                        edges.push((end.clone(), un.to_string()));
                    } else {
                        let mid = format!("{end}_{un}");
                        names.push(mid.clone());
                        edges.push((end.clone(), mid.clone()));
                        edges.push((mid, un.to_string()));
                    }
                }
            }
        }
    }
    Ok((Graph::new(names, edges)?, numbered("x", m)))
}

/// Single-part amalgam of [`chi_graph`] over `j`.
pub fn chi(j_spec: &FamilySpec, m: usize) -> Result<Instance> {
    let j = generate(j_spec)?;
    let (g, basis) = chi_graph(&j, m)?;
    let chi = j.chromatic_number(DEFAULT_CHROMATIC_CAP)?.chromatic_number;
    let am = glue_by_name(j.clone(), vec![("1", g)])?;
    let mut claims = vec![
        Claim::plain(Check::DimPart {
            part: "1".into(),
            value: m,
        }),
        Claim::plain(Check::PartLocalMetricSet {
            part: "1".into(),
            set: basis.clone(),
        }),
        Claim::plain(Check::BasisAvoidingJ { part: "1".into() }),
    ];
    if chi >= 2 {
        let x: Vec<(String, String)> = (1..=m)
            .map(|i| (format!("x{i}"), format!("y{i}")))
            .collect();
        claims.push(Claim::plain(Check::Parallel {
            part: "1".into(),
            edges: x,
        }));
        claims.push(Claim::plain(Check::TraversalSize {
            part: "1".into(),
            size: m,
        }));
    } else if m >= 2 {
        claims.push(Claim::flagged(
            Check::DimPart {
                part: "1".into(),
                value: m,
            },
            "the path is written with 4m+1 vertices but indexed up to 4m-1; built with 4m+1",
        ));
    }
    Ok(Instance {
        name: "chi".into(),
        params: format!("J={j_spec} m={m}"),
        amalgam: am,
        claims,
    })
}

/// `J + K_r` with every join edge replaced by a path of length `diam(J)`.
pub fn subdivided_join_graph(j: &Graph, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(bad("r must be at least 1"));
    }
    let d = j.diameter()?.max(1) as usize;
    let mut names: Vec<String> = j.names().to_vec();
    let mut edges: Vec<(String, String)> = j
        .edges()
        .iter()
        .map(|&e| {
            let (a, b) = j.edge_names(e);
            (a.to_string(), b.to_string())
        })
        .collect();
    let ks = numbered("k", r);
    names.extend(ks.iter().cloned());
    for a in 0..r {
        for b in a + 1..r {
            edges.push((ks[a].clone(), ks[b].clone()));
        }
    }
    for k in &ks {
        for u in j.names() {
            let mut prev = k.clone();
            for step in 1..d {
                let mid = format!("{k}_{u}_{step}");
                names.push(mid.clone());
                edges.push((prev, mid.clone()));
                prev = mid;
            }
            edges.push((prev, u.clone()));
        }
    }
    Graph::new(names, edges)
}

pub fn subdivided_join(j_spec: &FamilySpec, r: usize) -> Result<Instance> {
    let j = generate(j_spec)?;
    let a = subdivided_join_graph(&j, r)?;
    let ks = numbered("k", r);
    let mut kr = Vec::new();
    for x in 0..r {
        for y in x + 1..r {
            kr.push((ks[x].clone(), ks[y].clone()));
        }
    }
    let am = glue_by_name(j, vec![("1", a)])?;
    Ok(Instance {
        name: "subdivided-join".into(),
        params: format!("J={j_spec} r={r}"),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::JIsometricInPart { part: "1".into() }),
            Claim::plain(Check::Parallel {
                part: "1".into(),
                edges: kr,
            }),
        ],
    })
}

/// Parts `J + K̄_{m_i}` glued along J.
pub fn join_kbar(j_spec: &FamilySpec, m_list: &[usize]) -> Result<Instance> {
    if m_list.is_empty() || m_list.contains(&0) {
        return Err(bad("join-kbar needs at least one m_i >= 1"));
    }
    let j = generate(j_spec)?;
    let ids = part_ids(m_list.len());
    let parts = ids
        .iter()
        .zip(m_list)
        .map(|(id, &m)| Ok((id.as_str(), family::join(&j, &kbar(&numbered("k", m))?)?)))
        .collect::<Result<Vec<_>>>()?;
    let other = family::join(&j, &kbar(&strs(&["k1"]))?)?;
    let am = glue_by_name(j, parts)?;
    let ms: Vec<String> = m_list.iter().map(usize::to_string).collect();
    Ok(Instance {
        name: "join-kbar".into(),
        params: format!("J={j_spec} m={}", ms.join(",")),
        amalgam: am,
        claims: vec![Claim::plain(Check::DimHostEquals {
            label: "J + K1".into(),
            other,
        })],
    })
}

/// `v0 + P_6` and `C_4` glued at `v0`.
pub fn fan_with_square() -> Result<Graph> {
    let v = Graph::new(["v0"], Vec::<(&str, &str)>::new())?;
    let am = glue(
        v,
        vec![
            ("a", generate(&FamilySpec::Fan(1, 6))?, vec![("v0", "v0")]),
            ("b", generate(&FamilySpec::Cycle(4))?, vec![("v0", "u1")]),
        ],
    )?;
    Ok(am.host().clone())
}

/// Two copies of [`fan_with_square`] glued along the square.
pub fn sum_tight() -> Result<Instance> {
    let g = fan_with_square()?;
    let j = generate(&FamilySpec::Cycle(4))?;
    let map = vec![
        ("u1", "v0"),
        ("u2", "pb.u2"),
        ("u3", "pb.u3"),
        ("u4", "pb.u4"),
    ];
    let am = glue(j, vec![("1", g.clone(), map.clone()), ("2", g, map)])?;
    Ok(Instance {
        name: "sum-tight".into(),
        params: String::new(),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::Isometric(true)),
            Claim::plain(Check::DimPart {
                part: "1".into(),
                value: 2,
            }),
            Claim::plain(Check::DimPart {
                part: "2".into(),
                value: 2,
            }),
            Claim::plain(Check::DimHost(4)),
        ],
    })
}

/// `K_m` and `C_{2m+1}` glued along an edge.
pub fn sum_tight_second(m: usize) -> Result<Instance> {
    if m < 4 {
        return Err(bad("sum-tight-second needs m >= 4"));
    }
    let j = generate(&FamilySpec::Complete(2))?;
    let am = glue_by_name(
        j,
        vec![
            ("1", generate(&FamilySpec::Complete(m))?),
            ("2", generate(&FamilySpec::Cycle(2 * m + 1))?),
        ],
    )?;
    let why = "the complete part is written K_n while the counts use m; built with n = m";
    Ok(Instance {
        name: "sum-tight-second".into(),
        params: format!("m={m}"),
        amalgam: am,
        claims: vec![
            Claim::flagged(
                Check::TraversalSize {
                    part: "1".into(),
                    size: m - 3,
                },
                why,
            ),
            Claim::plain(Check::TraversalSize {
                part: "2".into(),
                size: 0,
            }),
            Claim::flagged(Check::DimHost(m - 1), why),
        ],
    })
}

/// `K_5 - {u1u3, u1u4}`.
pub fn k5_variant() -> Result<Graph> {
    generate(&FamilySpec::Complete(5))?.delete_named_edges(&[("u1", "u3"), ("u1", "u4")])
}

/// Two copies of [`k5_variant`] glued along `u3u4`.
pub fn k5_pair() -> Result<Instance> {
    let j = Graph::new(["u3", "u4"], [("u3", "u4")])?;
    let g = k5_variant()?;
    let am = glue_by_name(j, vec![("1", g.clone()), ("2", g)])?;
    Ok(Instance {
        name: "k5-pair".into(),
        params: String::new(),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::Parallel {
                part: "1".into(),
                edges: edge_pairs(&[("u2", "u5")]),
            }),
            Claim::plain(Check::Parallel {
                part: "2".into(),
                edges: edge_pairs(&[("u2", "u5")]),
            }),
            Claim::plain(Check::Traversal {
                part: "1".into(),
                set: strs(&["p1.u2"]),
            }),
            Claim::plain(Check::OutSolving(strs(&["u3"]))),
            Claim::plain(Check::Cotraversal(strs(&["u3"]))),
            Claim::plain(Check::Lower(3)),
            Claim::plain(Check::DimHost(3)),
        ],
    })
}

/// [`k5_variant`] over `u4u5` glued to `C_5` over `v3v4`.
pub fn k5_c5_covers() -> Result<Instance> {
    let j = Graph::new(["u4", "u5"], [("u4", "u5")])?;
    let c5 = generate(&FamilySpec::Cycle(5))?.relabel(|n| n.replacen('u', "v", 1))?;
    let g1 = k5_variant()?;
    let solv1: Vec<(String, String)> = g1
        .edges()
        .iter()
        .map(|&e| g1.edge_names(e))
        .filter(|e| !matches!(*e, ("u1", "u2") | ("u2", "u3") | ("u4", "u5")))
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let solv2: Vec<(String, String)> = c5
        .edges()
        .iter()
        .map(|&e| c5.edge_names(e))
        .filter(|e| *e != ("v3", "v4"))
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let am = glue(
        j,
        vec![
            ("1", g1, vec![("u4", "u4"), ("u5", "u5")]),
            ("2", c5, vec![("u4", "v3"), ("u5", "v4")]),
        ],
    )?;
    let c = strs(&["u4", "u5"]);
    Ok(Instance {
        name: "k5-c5-covers".into(),
        params: String::new(),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::Parallel {
                part: "1".into(),
                edges: edge_pairs(&[("u2", "u3")]),
            }),
            Claim::plain(Check::Parallel {
                part: "2".into(),
                edges: Vec::new(),
            }),
            Claim::plain(Check::Traversal {
                part: "1".into(),
                set: strs(&["p1.u1"]),
            }),
            Claim::plain(Check::OutSolving(strs(&["p1.u1"]))),
            Claim::plain(Check::Solvable {
                part: "1".into(),
                edges: solv1,
            }),
            Claim::plain(Check::Solvable {
                part: "2".into(),
                edges: solv2,
            }),
            Claim::plain(Check::Cotraversal(c.clone())),
            Claim::plain(Check::Projective {
                cotraversal: c.clone(),
                projective: true,
            }),
            Claim::plain(Check::Projective {
                cotraversal: Vec::new(),
                projective: false,
            }),
            Claim::plain(Check::CoverClass {
                part: "1".into(),
                cotraversal: c.clone(),
                set: Vec::new(),
                class: CoverClass::Complete,
            }),
            Claim::plain(Check::CoverClass {
                part: "2".into(),
                cotraversal: c,
                set: strs(&["p2.v1"]),
                class: CoverClass::SelfResolving,
            }),
            Claim::plain(Check::MSet {
                part: "2".into(),
                set: strs(&["p2.v1"]),
            }),
            Claim::plain(Check::Basis(strs(&["p1.u1", "p2.v1"]))),
            Claim::plain(Check::DimHost(2)),
        ],
    })
}

/// `K_4` plus `v` on `u1, u2` and `w` on `u2, u3`.
pub fn k4_gadget() -> Result<Graph> {
    let mut edges = vec![("v", "u1"), ("v", "u2"), ("w", "u2"), ("w", "u3")];
    edges.extend([
        ("u1", "u2"),
        ("u1", "u3"),
        ("u1", "u4"),
        ("u2", "u3"),
        ("u2", "u4"),
        ("u3", "u4"),
    ]);
    Graph::new(["u1", "u2", "u3", "u4", "v", "w"], edges)
}

/// Two copies of [`k4_gadget`] glued along `K_4`.
pub fn k4_gadget_pair() -> Result<Instance> {
    let j = generate(&FamilySpec::Complete(4))?;
    let g = k4_gadget()?;
    let am = glue_by_name(j, vec![("1", g.clone()), ("2", g)])?;
    Ok(Instance {
        name: "k4-gadget".into(),
        params: String::new(),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::Isometric(true)),
            Claim::plain(Check::UniquePartBasis {
                part: "1".into(),
                set: strs(&["v", "w"]),
            }),
            Claim::plain(Check::BasesPairwiseDisjoint(true)),
            Claim::plain(Check::DimEqualsSum(false)),
            Claim::plain(Check::DimHost(2)),
        ],
    })
}

/// Two fans `v0 + P_9` overlapping in `v0 + P_3`, giving `v0 + P_15`.
pub fn fan_pair() -> Result<Instance> {
    let j = generate(&FamilySpec::Fan(1, 3))?.relabel(|n| n.replacen('u', "a", 1))?;
    let f = generate(&FamilySpec::Fan(1, 9))?;
    let am = glue(
        j,
        vec![
            (
                "1",
                f.clone(),
                vec![("v0", "v0"), ("a1", "u7"), ("a2", "u8"), ("a3", "u9")],
            ),
            (
                "2",
                f,
                vec![("v0", "v0"), ("a1", "u1"), ("a2", "u2"), ("a3", "u3")],
            ),
        ],
    )?;
    Ok(Instance {
        name: "fan-pair".into(),
        params: String::new(),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::HostIsomorphicTo {
                label: "F(1,15)".into(),
                other: generate(&FamilySpec::Fan(1, 15))?,
            }),
            Claim::plain(Check::UniquePartBasis {
                part: "1".into(),
                set: strs(&["u3", "u7"]),
            }),
            Claim::plain(Check::UniquePartBasis {
                part: "2".into(),
                set: strs(&["u3", "u7"]),
            }),
            Claim::plain(Check::DimHost(4)),
            Claim::plain(Check::DimEqualsSum(true)),
            Claim::plain(Check::AllBasesAvoidJ(false)),
        ],
    })
}

/// Parts `F_i + J` glued along J, with `J = P_3` and `F = P_4, C_5`.
pub fn lower_tight_join() -> Result<Instance> {
    let j = generate(&FamilySpec::Path(3))?;
    let fs = [
        generate(&FamilySpec::Path(4))?.relabel(|n| n.replacen('u', "f", 1))?,
        generate(&FamilySpec::Cycle(5))?.relabel(|n| n.replacen('u', "f", 1))?,
    ];
    let parts = vec![
        ("1", family::join(&j, &fs[0])?),
        ("2", family::join(&j, &fs[1])?),
    ];
    let am = glue_by_name(j, parts)?;
    let why = "the out-solving argument names sets that are never defined; read as the F_i";
    Ok(Instance {
        name: "lower-tight-join".into(),
        params: String::new(),
        amalgam: am,
        claims: vec![Claim::flagged(Check::LowerEqualsExact, why)],
    })
}

/// Odd paths glued at their end vertices.
pub fn odd_paths(m_list: &[usize]) -> Result<Instance> {
    if m_list.is_empty() || m_list.iter().any(|&m| m < 3 || m % 2 == 0) {
        return Err(bad("odd-paths needs odd lengths >= 3"));
    }
    let j = kbar(&strs(&["a", "b"]))?;
    let ids = part_ids(m_list.len());
    let parts = ids
        .iter()
        .zip(m_list)
        .map(|(id, &m)| {
            Ok((
                id.as_str(),
                generate(&FamilySpec::Path(m))?,
                vec![
                    ("a".to_string(), "u1".to_string()),
                    ("b".to_string(), format!("u{m}")),
                ],
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let am = glue(j, parts)?;
    let crude = 1 + m_list.iter().map(|m| m - 3).sum::<usize>();
    let ms: Vec<String> = m_list.iter().map(usize::to_string).collect();
    Ok(Instance {
        name: "odd-paths".into(),
        params: format!("m={}", ms.join(",")),
        amalgam: am,
        claims: vec![
            Claim::plain(Check::UpperCrude(crude)),
            Claim::plain(Check::DimHost(1)),
        ],
    })
}

/// A construction selected by name with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    OnePlusOne,
    Spider(usize),
    WheelPrism(usize),
    Watermelon(usize),
    CrudeTight { m: Vec<usize>, r: usize },
    FanChain { m: usize, n: usize },
    FanChainSpaced { m: usize, n: usize },
    Chi { j: FamilySpec, m: usize },
    SubdividedJoin { j: FamilySpec, r: usize },
    JoinKbar { j: FamilySpec, m: Vec<usize> },
    SumTight,
    SumTightSecond(usize),
    K5Pair,
    K5C5Covers,
    K4Gadget,
    FanPair,
    LowerTightJoin,
    OddPaths(Vec<usize>),
}

pub const CONSTRUCTION_NAMES: &[&str] = &[
    "one-plus-one",
    "spider",
    "wheel-prism",
    "watermelon",
    "crude-tight",
    "fan-chain",
    "fan-chain-spaced",
    "chi",
    "subdivided-join",
    "join-kbar",
    "sum-tight",
    "sum-tight-second",
    "k5-pair",
    "k5-c5-covers",
    "k4-gadget",
    "fan-pair",
    "lower-tight-join",
    "odd-paths",
];

impl Construction {
    /// Parses `name p1 p2 ...`. Graph-valued parameters use the compact family
    /// form, e.g. `chi cycle:5 3`; lists are comma-separated, e.g.
    /// `crude-tight 2 4,4`.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<Construction> {
        let t: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        let Some((&name, rest)) = t.split_first() else {
            return Err(bad("missing construction name"));
        };
        let int = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| bad(format!("not an integer: `{s}`")))
        };
        let list = |s: &str| -> Result<Vec<usize>> { s.split(',').map(int).collect() };
        let arity = |k: usize| -> Result<()> {
            if rest.len() == k {
                Ok(())
            } else {
                Err(bad(format!("`{name}` takes {k} parameter(s)")))
            }
        };
        Ok(match name {
            "one-plus-one" => {
                arity(0)?;
                Construction::OnePlusOne
            }
            "spider" => {
                arity(1)?;
                Construction::Spider(int(rest[0])?)
            }
            "wheel-prism" => {
                arity(1)?;
                Construction::WheelPrism(int(rest[0])?)
            }
            "watermelon" => {
                arity(1)?;
                Construction::Watermelon(int(rest[0])?)
            }
            "crude-tight" => {
                arity(2)?;
                Construction::CrudeTight {
                    r: int(rest[0])?,
                    m: list(rest[1])?,
                }
            }
            "fan-chain" => {
                arity(2)?;
                Construction::FanChain {
                    m: int(rest[0])?,
                    n: int(rest[1])?,
                }
            }
            "fan-chain-spaced" => {
                arity(2)?;
                Construction::FanChainSpaced {
                    m: int(rest[0])?,
                    n: int(rest[1])?,
                }
            }
            "chi" => {
                arity(2)?;
                Construction::Chi {
                    j: FamilySpec::parse(&[rest[0]])?,
                    m: int(rest[1])?,
                }
            }
            "subdivided-join" => {
                arity(2)?;
                Construction::SubdividedJoin {
                    j: FamilySpec::parse(&[rest[0]])?,
                    r: int(rest[1])?,
                }
            }
            "join-kbar" => {
                arity(2)?;
                Construction::JoinKbar {
                    j: FamilySpec::parse(&[rest[0]])?,
                    m: list(rest[1])?,
                }
            }
            "sum-tight" => {
                arity(0)?;
                Construction::SumTight
            }
            "sum-tight-second" => {
                arity(1)?;
                Construction::SumTightSecond(int(rest[0])?)
            }
            "k5-pair" => {
                arity(0)?;
                Construction::K5Pair
            }
            "k5-c5-covers" => {
                arity(0)?;
                Construction::K5C5Covers
            }
            "k4-gadget" => {
                arity(0)?;
                Construction::K4Gadget
            }
            "fan-pair" => {
                arity(0)?;
                Construction::FanPair
            }
            "lower-tight-join" => {
                arity(0)?;
                Construction::LowerTightJoin
            }
            "odd-paths" => {
                arity(1)?;
                Construction::OddPaths(list(rest[0])?)
            }
            other => return Err(bad(format!("unknown construction `{other}`"))),
        })
    }

    pub fn build(&self) -> Result<Instance> {
        use Construction::*;
        match self {
            OnePlusOne => one_plus_one(),
            Spider(n) => spider(*n),
            WheelPrism(n) => wheel_prism(*n),
            Watermelon(n) => watermelon(*n),
            CrudeTight { m, r } => crude_tight(m, *r),
            FanChain { m, n } => fan_chain(*m, *n),
            FanChainSpaced { m, n } => fan_chain_spaced(*m, *n),
            Chi { j, m } => chi(j, *m),
            SubdividedJoin { j, r } => subdivided_join(j, *r),
            JoinKbar { j, m } => join_kbar(j, m),
            SumTight => sum_tight(),
            SumTightSecond(m) => sum_tight_second(*m),
            K5Pair => k5_pair(),
            K5C5Covers => k5_c5_covers(),
            K4Gadget => k4_gadget_pair(),
            FanPair => fan_pair(),
            LowerTightJoin => lower_tight_join(),
            OddPaths(m) => odd_paths(m),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        use Construction::*;
        match self {
            OnePlusOne => write!(f, "one-plus-one"),
            Spider(n) => write!(f, "spider {n}"),
            WheelPrism(n) => write!(f, "wheel-prism {n}"),
            Watermelon(n) => write!(f, "watermelon {n}"),
            CrudeTight { m, r } => write!(f, "crude-tight {r} {}", join(m)),
            FanChain { m, n } => write!(f, "fan-chain {m} {n}"),
            FanChainSpaced { m, n } => write!(f, "fan-chain-spaced {m} {n}"),
            Chi { j, m } => write!(f, "chi {j} {m}"),
            SubdividedJoin { j, r } => write!(f, "subdivided-join {j} {r}"),
            JoinKbar { j, m } => write!(f, "join-kbar {j} {}", join(m)),
            SumTight => write!(f, "sum-tight"),
            SumTightSecond(m) => write!(f, "sum-tight-second {m}"),
            K5Pair => write!(f, "k5-pair"),
            K5C5Covers => write!(f, "k5-c5-covers"),
            K4Gadget => write!(f, "k4-gadget"),
            FanPair => write!(f, "fan-pair"),
            LowerTightJoin => write!(f, "lower-tight-join"),
            OddPaths(m) => write!(f, "odd-paths {}", join(m)),
        }
    }
}

/// Every instance checked by the built-in verification suite, in run order.
pub fn catalogue() -> Vec<Construction> {
    use Construction::*;
    let mut out = vec![OnePlusOne];
    out.extend((2..=4).map(Spider));
    out.extend((4..=12).map(WheelPrism));
    out.push(Watermelon(4));
    out.push(CrudeTight {
        m: vec![4, 4],
        r: 2,
    });
    out.push(CrudeTight {
        m: vec![5, 4],
        r: 2,
    });
    out.push(CrudeTight {
        m: vec![4, 4, 4],
        r: 2,
    });
    out.push(CrudeTight {
        m: vec![3, 3],
        r: 1,
    });
    out.push(FanChain { m: 9, n: 3 });
    out.push(FanChainSpaced { m: 2, n: 2 });
    out.push(FanChainSpaced { m: 2, n: 3 });
    out.push(Chi {
        j: FamilySpec::Empty(3),
        m: 1,
    });
    out.push(Chi {
        j: FamilySpec::Empty(3),
        m: 2,
    });
    out.push(Chi {
        j: FamilySpec::Empty(2),
        m: 2,
    });
    out.push(Chi {
        j: FamilySpec::Cycle(5),
        m: 3,
    });
    out.push(Chi {
        j: FamilySpec::Complete(4),
        m: 4,
    });
    out.push(SubdividedJoin {
        j: FamilySpec::Complete(2),
        r: 3,
    });
    out.push(SubdividedJoin {
        j: FamilySpec::Path(3),
        r: 2,
    });
    out.push(JoinKbar {
        j: FamilySpec::Cycle(5),
        m: vec![2, 2],
    });
    out.push(JoinKbar {
        j: FamilySpec::Complete(2),
        m: vec![1, 1],
    });
    out.push(JoinKbar {
        j: FamilySpec::Empty(2),
        m: vec![1, 1],
    });
    out.push(SumTight);
    out.push(SumTightSecond(5));
    out.push(SumTightSecond(6));
    out.push(K5Pair);
    out.push(K5C5Covers);
    out.push(K4Gadget);
    out.push(FanPair);
    out.push(LowerTightJoin);
    out.push(OddPaths(vec![3, 5, 7]));
    out
}
