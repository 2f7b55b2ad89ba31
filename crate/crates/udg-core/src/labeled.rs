//! Graphs with named gadget vertices.
//!
//! Gadget builders return a [`LabeledGraph`]: a plain [`Graph`] plus a role
//! map, so callers can address "the T vertex" without relying on label
//! conventions or positional indexing.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{read_graph_lines, write_graph, Graph, GraphError};

/// Structural role of a gadget vertex.
///
/// `U`/`T`/`F`/`UPrime`/`UDoublePrime`/`V`/`W` name the spindle anchor,
/// `XPos(i)`/`XNeg(i)` the literal vertices of variable `i`, the `C*`
/// variants the six vertices of clause gadget `j`, and `V`/`WPrime`/
/// `WDoublePrime`/`Core(i)` the spindle `M_k` (cores `1..=k` form the first
/// clique, `k+1..=2k` the second).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexRole {
    U,
    V,
    W,
    UPrime,
    UDoublePrime,
    T,
    F,
    XPos(u32),
    XNeg(u32),
    C1(u32),
    C2(u32),
    C3(u32),
    C4(u32),
    C12(u32),
    C34(u32),
    WPrime,
    WDoublePrime,
    Core(u32),
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use VertexRole::*;
        match self {
            U => write!(f, "u"),
            V => write!(f, "v"),
            W => write!(f, "w"),
            UPrime => write!(f, "uP"),
            UDoublePrime => write!(f, "uPP"),
            T => write!(f, "T"),
            F => write!(f, "F"),
            XPos(i) => write!(f, "xPos({i})"),
            XNeg(i) => write!(f, "xNeg({i})"),
            C1(j) => write!(f, "c1({j})"),
            C2(j) => write!(f, "c2({j})"),
            C3(j) => write!(f, "c3({j})"),
            C4(j) => write!(f, "c4({j})"),
            C12(j) => write!(f, "c12({j})"),
            C34(j) => write!(f, "c34({j})"),
            WPrime => write!(f, "wP"),
            WDoublePrime => write!(f, "wPP"),
            Core(i) => write!(f, "core({i})"),
        }
    }
}

#[derive(Debug, Error)]
pub enum RoleError {
    #[error("unknown role name `{0}`")]
    BadRole(String),
    #[error("role `{0}` assigned twice")]
    DuplicateRole(String),
    #[error("role `{role}` points at missing vertex `{label}`")]
    MissingVertex { role: String, label: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FromStr for VertexRole {
    type Err = RoleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use VertexRole::*;
        let plain = match s {
            "u" => Some(U),
            "v" => Some(V),
            "w" => Some(W),
            "uP" => Some(UPrime),
            "uPP" => Some(UDoublePrime),
            "T" => Some(T),
            "F" => Some(F),
            "wP" => Some(WPrime),
            "wPP" => Some(WDoublePrime),
            _ => None,
        };
        if let Some(r) = plain {
            return Ok(r);
        }
        let (name, rest) = s
            .split_once('(')
            .ok_or_else(|| RoleError::BadRole(s.to_string()))?;
        let arg: u32 = rest
            .strip_suffix(')')
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| RoleError::BadRole(s.to_string()))?;
        match name {
            "xPos" => Ok(XPos(arg)),
            "xNeg" => Ok(XNeg(arg)),
            "c1" => Ok(C1(arg)),
            "c2" => Ok(C2(arg)),
            "c3" => Ok(C3(arg)),
            "c4" => Ok(C4(arg)),
            "c12" => Ok(C12(arg)),
            "c34" => Ok(C34(arg)),
            "core" => Ok(Core(arg)),
            _ => Err(RoleError::BadRole(s.to_string())),
        }
    }
}

/// A graph plus an injective map from roles to vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    roles: BTreeMap<VertexRole, String>,
}

impl LabeledGraph {
    pub fn new(graph: Graph) -> Self {
        Self {
            graph,
            roles: BTreeMap::new(),
        }
    }

    pub fn assign(&mut self, role: VertexRole, label: &str) -> Result<(), RoleError> {
        if !self.graph.has_vertex(label) {
            return Err(RoleError::MissingVertex {
                role: role.to_string(),
                label: label.to_string(),
            });
        }
        if self.roles.contains_key(&role) {
            return Err(RoleError::DuplicateRole(role.to_string()));
        }
        self.roles.insert(role, label.to_string());
        Ok(())
    }

    /// Label of the vertex holding `role`, if assigned.
    pub fn role(&self, role: VertexRole) -> Option<&str> {
        self.roles.get(&role).map(|s| s.as_str())
    }

    pub fn roles(&self) -> impl Iterator<Item = (VertexRole, &str)> {
        self.roles.iter().map(|(r, l)| (*r, l.as_str()))
    }
}

/// The 7-vertex, 11-edge spindle: two unit rhombi sharing the hub `u`, with
/// tips `u'` and `u''` joined. Planar, strictly unit-distance, and rigid; the
/// anchor of the satisfiability reduction.
pub fn moser_spindle() -> LabeledGraph {
    let mut g = Graph::new();
    for label in ["u", "v", "w", "u'", "u''", "T", "F"] {
        g.add_vertex(label).unwrap();
    }
    for (a, b) in [
        ("u", "T"),
        ("u", "F"),
        ("T", "F"),
        ("T", "u'"),
        ("F", "u'"),
        ("u", "v"),
        ("u", "w"),
        ("v", "w"),
        ("v", "u''"),
        ("w", "u''"),
        ("u'", "u''"),
    ] {
        g.add_edge(a, b).unwrap();
    }
    let mut lg = LabeledGraph::new(g);
    lg.assign(VertexRole::U, "u").unwrap();
    lg.assign(VertexRole::V, "v").unwrap();
    lg.assign(VertexRole::W, "w").unwrap();
    lg.assign(VertexRole::UPrime, "u'").unwrap();
    lg.assign(VertexRole::UDoublePrime, "u''").unwrap();
    lg.assign(VertexRole::T, "T").unwrap();
    lg.assign(VertexRole::F, "F").unwrap();
    lg
}

/// The spindle `M_k`: two copies of `K_k`, each joined to the shared apex `v`
/// and to its own tip (`w'` resp. `w''`), plus the tip edge `w' ~ w''`.
///
/// `M_2` is exactly the 7-vertex spindle of [`moser_spindle`]. Roles
/// `Core(1..=k)` name the first clique, `Core(k+1..=2k)` the second.
pub fn moser_raiskii(k: usize) -> Result<LabeledGraph, GraphError> {
    assert!(k >= 2, "moser_raiskii needs k >= 2");
    let mut g = Graph::new();
    g.add_vertex("v").unwrap();
    g.add_vertex("w'").unwrap();
    g.add_vertex("w''").unwrap();
    for i in 1..=k {
        g.add_vertex(format!("a{i}")).unwrap();
    }
    for i in 1..=k {
        g.add_vertex(format!("b{i}")).unwrap();
    }
    for i in 1..=k {
        let (ai, bi) = (format!("a{i}"), format!("b{i}"));
        for j in i + 1..=k {
            g.add_edge(&ai, &format!("a{j}"))?;
            g.add_edge(&bi, &format!("b{j}"))?;
        }
        g.add_edge(&ai, "v")?;
        g.add_edge(&ai, "w'")?;
        g.add_edge(&bi, "v")?;
        g.add_edge(&bi, "w''")?;
    }
    g.add_edge("w'", "w''")?;

    let mut lg = LabeledGraph::new(g);
    lg.assign(VertexRole::V, "v").unwrap();
    lg.assign(VertexRole::WPrime, "w'").unwrap();
    lg.assign(VertexRole::WDoublePrime, "w''").unwrap();
    for i in 1..=k {
        lg.assign(VertexRole::Core(i as u32), &format!("a{i}"))
            .unwrap();
        lg.assign(VertexRole::Core((k + i) as u32), &format!("b{i}"))
            .unwrap();
    }
    Ok(lg)
}

/// Labeled-graph text format: the plain graph format followed by one
/// `r <role> <label>` line per assigned role.
pub fn write_labeled(lg: &LabeledGraph) -> String {
    let mut out = write_graph(&lg.graph);
    for (role, label) in lg.roles() {
        writeln!(out, "r {role} {label}").unwrap();
    }
    out
}

/// Parses the labeled format. A plain graph file (no `r` lines) is accepted
/// and yields an empty role map.
pub fn read_labeled(text: &str) -> Result<LabeledGraph, RoleError> {
    let (graph, extra) = read_graph_lines(text)?;
    let mut lg = LabeledGraph::new(graph);
    for (line, content) in extra {
        let mut tok = content.split_whitespace();
        let bad = || {
            RoleError::Graph(GraphError::Parse {
                line,
                msg: format!("unexpected line `{content}`"),
            })
        };
        if tok.next() != Some("r") {
            return Err(bad());
        }
        let role: VertexRole = tok.next().ok_or_else(bad)?.parse()?;
        let label = tok.next().ok_or_else(bad)?;
        if tok.next().is_some() {
            return Err(bad());
        }
        lg.assign(role, label)?;
    }
    Ok(lg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moser_spindle_shape() {
        let m = moser_spindle();
        assert_eq!(m.graph.vertex_count(), 7);
        assert_eq!(m.graph.edge_count(), 11);
        assert_eq!(m.graph.degree("u"), Some(4));
        for v in ["v", "w", "u'", "u''", "T", "F"] {
            assert_eq!(m.graph.degree(v), Some(3), "degree of {v}");
        }
        assert_eq!(m.role(VertexRole::T), Some("T"));
    }

    #[test]
    fn moser_spindle_clique_number_is_three() {
        // brute force over all 4-subsets: no K4
        let m = moser_spindle().graph;
        let vs: Vec<&str> = m.vertices().collect();
        let mut best = 0;
        for mask in 0u32..(1 << vs.len()) {
            let chosen: Vec<&str> = (0..vs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vs[i])
                .collect();
            let is_clique = chosen
                .iter()
                .enumerate()
                .all(|(i, a)| chosen[i + 1..].iter().all(|b| m.has_edge(a, b)));
            if is_clique {
                best = best.max(chosen.len());
            }
        }
        assert_eq!(best, 3);
    }

    #[test]
    fn moser_raiskii_counts() {
        let m3 = moser_raiskii(3).unwrap();
        assert_eq!(m3.graph.vertex_count(), 9);
        assert_eq!(m3.graph.edge_count(), 19);

        for k in 2..=6 {
            let mk = moser_raiskii(k).unwrap();
            assert_eq!(mk.graph.vertex_count(), 2 * k + 3);
            assert_eq!(mk.graph.edge_count(), 2 * (k * (k - 1) / 2 + 2 * k) + 1);
        }
    }

    #[test]
    fn moser_raiskii_6_matches_double_join_structure() {
        // two K6 joins sharing v, plus the tip edge
        let m6 = moser_raiskii(6).unwrap();
        let g = &m6.graph;
        assert_eq!(g.degree("v"), Some(12));
        assert_eq!(g.degree("w'"), Some(7));
        assert_eq!(g.degree("w''"), Some(7));
        assert!(g.has_edge("w'", "w''"));
        for i in 1..=6 {
            assert_eq!(g.degree(&format!("a{i}")), Some(7));
            assert!(g.has_edge(&format!("a{i}"), "v"));
            assert!(g.has_edge(&format!("a{i}"), "w'"));
            assert!(!g.has_edge(&format!("a{i}"), "w''"));
        }
    }

    #[test]
    fn role_name_roundtrip() {
        for role in [
            VertexRole::U,
            VertexRole::UPrime,
            VertexRole::UDoublePrime,
            VertexRole::XPos(3),
            VertexRole::C12(17),
            VertexRole::Core(4),
            VertexRole::WDoublePrime,
        ] {
            let s = role.to_string();
            assert_eq!(s.parse::<VertexRole>().unwrap(), role);
        }
        assert!("nope(1)".parse::<VertexRole>().is_err());
        assert!("xPos(".parse::<VertexRole>().is_err());
    }

    #[test]
    fn labeled_text_roundtrip() {
        let m = moser_raiskii(3).unwrap();
        let text = write_labeled(&m);
        let back = read_labeled(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(write_labeled(&back), text);
    }

    #[test]
    fn plain_graph_parses_as_unlabeled() {
        let g = crate::graph::write_graph(&Graph::cycle(4));
        let lg = read_labeled(&g).unwrap();
        assert_eq!(lg.roles().count(), 0);
        assert_eq!(lg.graph.vertex_count(), 4);
    }
}
