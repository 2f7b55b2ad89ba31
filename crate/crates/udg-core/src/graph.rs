//! Simple undirected graphs with stable string labels.
//!
//! Vertex iteration follows insertion order, so every search built on top of
//! a `Graph` is reproducible run to run. Edges are unordered pairs; loops and
//! parallel edges are never stored.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex `{0}` already exists")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop edge on `{0}` is not allowed")]
    LoopEdge(String),
    #[error("partition does not cover the vertex set exactly once (vertex `{0}`)")]
    NotAPartition(String),
    #[error("partition block contains the edge `{0}` ~ `{1}`; adjacent vertices cannot be identified")]
    BlockContainsEdge(String, String),
    #[error("wheel graphs need at least 4 vertices, got {0}")]
    WheelTooSmall(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A simple undirected graph over opaque string labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with `n` vertices labeled `v1..vn` and no edges.
    pub fn edgeless(n: usize) -> Self {
        let mut g = Graph::new();
        for i in 1..=n {
            g.add_vertex(format!("v{i}")).unwrap();
        }
        g
    }

    /// Path graph on `n` vertices.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for i in 1..n {
            g.add_edge_idx(i - 1, i);
        }
        g
    }

    /// Cycle graph on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::edgeless(n);
        for i in 0..n {
            g.add_edge_idx(i, (i + 1) % n);
        }
        g
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge_idx(i, j);
            }
        }
        g
    }

    /// Wheel on `n >= 4` vertices: a hub joined to every vertex of an
    /// `(n-1)`-cycle rim. Labels are `hub` and `r1..r(n-1)`.
    pub fn wheel(n: usize) -> Result<Self, GraphError> {
        if n < 4 {
            return Err(GraphError::WheelTooSmall(n));
        }
        let mut g = Graph::new();
        g.add_vertex("hub").unwrap();
        let rim = n - 1;
        for i in 1..=rim {
            g.add_vertex(format!("r{i}")).unwrap();
        }
        for i in 1..=rim {
            g.add_edge_idx(0, i);
            g.add_edge_idx(i, i % rim + 1);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex labels in insertion order.
    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(|s| s.as_str())
    }

    /// Edges in insertion order, endpoints as first inserted.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.labels[a].as_str(), self.labels[b].as_str()))
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize, GraphError> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(GraphError::DuplicateVertex(label));
        }
        let idx = self.labels.len();
        self.index.insert(label.clone(), idx);
        self.labels.push(label);
        self.adj.push(BTreeSet::new());
        Ok(idx)
    }

    /// Adds an edge between two existing vertices. Duplicate edges are
    /// ignored (returns `false`); loops are rejected.
    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<bool, GraphError> {
        let ia = self
            .index_of(a)
            .ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
        let ib = self
            .index_of(b)
            .ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
        if ia == ib {
            return Err(GraphError::LoopEdge(a.to_string()));
        }
        Ok(self.add_edge_idx(ia, ib))
    }

    fn add_edge_idx(&mut self, a: usize, b: usize) -> bool {
        assert_ne!(a, b);
        if self.adj[a].contains(&b) {
            return false;
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        self.edges.push((a, b));
        true
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(ia), Some(ib)) => self.adj[ia].contains(&ib),
            _ => false,
        }
    }

    pub fn has_edge_idx(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// Neighbor indices in ascending index order.
    pub fn neighbors_idx(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbors(&self, label: &str) -> Option<impl Iterator<Item = &str>> {
        let idx = self.index_of(label)?;
        Some(self.adj[idx].iter().map(|&i| self.labels[i].as_str()))
    }

    pub fn degree_idx(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree(&self, label: &str) -> Option<usize> {
        self.index_of(label).map(|i| self.adj[i].len())
    }

    /// Connected components as lists of vertex indices, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for u in self.neighbors_idx(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff the graph is a path on at least two vertices: connected with
    /// exactly two vertices of degree 1 and all others of degree 2. `K1` has
    /// dimension zero, not one, so it is not counted as a path.
    pub fn is_path(&self) -> bool {
        let n = self.vertex_count();
        if n < 2 || !self.is_connected() {
            return false;
        }
        let deg1 = (0..n).filter(|&v| self.degree_idx(v) == 1).count();
        let deg2 = (0..n).filter(|&v| self.degree_idx(v) == 2).count();
        deg1 == 2 && deg1 + deg2 == n
    }
}

/// Disjoint union. Labels from `g1` are kept; labels from `g2` that collide
/// get `#2`, `#3`, ... suffixes until fresh.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    disjoint_union_with_map(g1, g2).0
}

/// Disjoint union plus the relabeling applied to `g2`'s vertices.
pub fn disjoint_union_with_map(g1: &Graph, g2: &Graph) -> (Graph, HashMap<String, String>) {
    let mut out = g1.clone();
    let mut map = HashMap::new();
    for v in g2.vertices() {
        let mut candidate = v.to_string();
        let mut suffix = 2usize;
        while out.has_vertex(&candidate) {
            candidate = format!("{v}#{suffix}");
            suffix += 1;
        }
        out.add_vertex(candidate.clone()).unwrap();
        map.insert(v.to_string(), candidate);
    }
    for (a, b) in g2.edges() {
        out.add_edge(&map[a], &map[b]).unwrap();
    }
    (out, map)
}

/// Join: disjoint union plus every cross edge between the two vertex sets.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (mut out, map) = disjoint_union_with_map(g1, g2);
    for a in g1.vertices() {
        for b in g2.vertices() {
            out.add_edge(a, &map[b]).unwrap();
        }
    }
    out
}

/// Quotient by a partition into independent blocks.
///
/// Every block becomes a single vertex (labeled by its members, sorted and
/// joined with `+`); two blocks are adjacent iff some cross pair was an edge.
/// Parallel edges collapse silently, but a block containing an edge is an
/// error: identifying adjacent vertices would create a loop, which has no
/// unit-distance edge representation.
pub fn quotient(g: &Graph, partition: &[Vec<String>]) -> Result<Graph, GraphError> {
    quotient_with_projection(g, partition).map(|(q, _)| q)
}

/// Quotient plus the canonical projection map (vertex label -> block label).
pub fn quotient_with_projection(
    g: &Graph,
    partition: &[Vec<String>],
) -> Result<(Graph, HashMap<String, String>), GraphError> {
    let n = g.vertex_count();
    let mut block_of = vec![usize::MAX; n];
    for (b, block) in partition.iter().enumerate() {
        for label in block {
            let idx = g
                .index_of(label)
                .ok_or_else(|| GraphError::UnknownVertex(label.clone()))?;
            if block_of[idx] != usize::MAX {
                return Err(GraphError::NotAPartition(label.clone()));
            }
            block_of[idx] = b;
        }
    }
    if let Some(missing) = (0..n).find(|&v| block_of[v] == usize::MAX) {
        return Err(GraphError::NotAPartition(g.label(missing).to_string()));
    }
    for (a, b) in &g.edges {
        if block_of[*a] == block_of[*b] {
            return Err(GraphError::BlockContainsEdge(
                g.label(*a).to_string(),
                g.label(*b).to_string(),
            ));
        }
    }

    let mut q = Graph::new();
    let mut block_labels = Vec::with_capacity(partition.len());
    for block in partition {
        let mut members: Vec<&str> = block.iter().map(|s| s.as_str()).collect();
        members.sort_unstable();
        let label = members.join("+");
        q.add_vertex(label.clone())?;
        block_labels.push(label);
    }
    for &(a, b) in &g.edges {
        let (ba, bb) = (block_of[a], block_of[b]);
        let _ = q.add_edge(&block_labels[ba], &block_labels[bb]);
    }
    let mut projection = HashMap::new();
    for v in 0..n {
        projection.insert(g.label(v).to_string(), block_labels[block_of[v]].clone());
    }
    Ok((q, projection))
}

/// Serializes to the plain text format:
/// `graph <n> <m>`, one `v <label>` line per vertex, one `e <a> <b>` per edge.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for v in g.vertices() {
        writeln!(out, "v {v}").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "e {a} {b}").unwrap();
    }
    out
}

/// Parses the plain text format. Labels are whitespace-free tokens; the
/// header counts must match the body.
pub fn read_graph(text: &str) -> Result<Graph, GraphError> {
    let (g, extra) = read_graph_lines(text)?;
    if let Some((line, content)) = extra.first() {
        return Err(GraphError::Parse {
            line: *line,
            msg: format!("unexpected line `{content}`"),
        });
    }
    Ok(g)
}

/// Shared parser: returns the graph plus any non-`v`/`e` lines (used by the
/// labeled-graph reader for `r` role lines).
pub(crate) fn read_graph_lines(text: &str) -> Result<(Graph, Vec<(usize, String)>), GraphError> {
    let mut lines = text.lines().enumerate();
    let (hdr_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or(GraphError::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
    let mut parts = header.split_whitespace();
    let parse_err = |msg: &str| GraphError::Parse {
        line: hdr_no + 1,
        msg: msg.to_string(),
    };
    if parts.next() != Some("graph") {
        return Err(parse_err("expected header `graph <n> <m>`"));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err("bad vertex count"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err("bad edge count"))?;
    if parts.next().is_some() {
        return Err(parse_err("trailing tokens in header"));
    }

    let mut g = Graph::new();
    let mut extra = Vec::new();
    for (no, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let err = |msg: String| GraphError::Parse {
            line: no + 1,
            msg,
        };
        match tok.next() {
            Some("v") => {
                let label = tok.next().ok_or_else(|| err("missing vertex label".into()))?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens after vertex label".into()));
                }
                g.add_vertex(label)?;
            }
            Some("e") => {
                let a = tok.next().ok_or_else(|| err("missing edge endpoint".into()))?;
                let b = tok.next().ok_or_else(|| err("missing edge endpoint".into()))?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens after edge".into()));
                }
                g.add_edge(a, b)?;
            }
            _ => extra.push((no + 1, line.to_string())),
        }
    }
    if g.vertex_count() != n || g.edge_count() != m {
        return Err(GraphError::Parse {
            line: hdr_no + 1,
            msg: format!(
                "header says {n} vertices / {m} edges, body has {} / {}",
                g.vertex_count(),
                g.edge_count()
            ),
        });
    }
    Ok((g, extra))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_union_counts_add() {
        let u = disjoint_union(&Graph::edgeless(1), &Graph::edgeless(1));
        assert_eq!((u.vertex_count(), u.edge_count()), (2, 0));

        let u = disjoint_union(&Graph::complete(3), &Graph::complete(3));
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 6));

        let u = disjoint_union(&Graph::cycle(4), &Graph::path(2));
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 5));
    }

    #[test]
    fn join_adds_all_cross_edges() {
        // K1 + C4 is the wheel W5
        let w = join(&Graph::edgeless(1), &Graph::cycle(4));
        assert_eq!((w.vertex_count(), w.edge_count()), (5, 8));

        let k2 = join(&Graph::edgeless(1), &Graph::edgeless(1));
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));

        let j = join(&Graph::complete(3), &Graph::edgeless(2));
        assert_eq!((j.vertex_count(), j.edge_count()), (5, 9));
    }

    #[test]
    fn wheel_shapes() {
        let w5 = Graph::wheel(5).unwrap();
        assert_eq!((w5.vertex_count(), w5.edge_count()), (5, 8));

        let w7 = Graph::wheel(7).unwrap();
        assert_eq!(w7.degree("hub"), Some(6));
        for i in 1..=6 {
            assert_eq!(w7.degree(&format!("r{i}")), Some(3));
        }

        // W4 is the complete graph on 4 vertices
        let w4 = Graph::wheel(4).unwrap();
        assert_eq!((w4.vertex_count(), w4.edge_count()), (4, 6));
        assert!(w4.vertices().all(|v| w4.degree(v) == Some(3)));

        assert!(matches!(Graph::wheel(3), Err(GraphError::WheelTooSmall(3))));
    }

    #[test]
    fn quotient_identity_and_merges() {
        let g = Graph::cycle(4);
        let singles: Vec<Vec<String>> =
            g.vertices().map(|v| vec![v.to_string()]).collect();
        let q = quotient(&g, &singles).unwrap();
        assert_eq!((q.vertex_count(), q.edge_count()), (4, 4));

        // merging both diagonals of C4 collapses it to K2
        let part = vec![
            vec!["v1".into(), "v3".into()],
            vec!["v2".into(), "v4".into()],
        ];
        let q = quotient(&g, &part).unwrap();
        assert_eq!((q.vertex_count(), q.edge_count()), (2, 1));
    }

    #[test]
    fn quotient_rejects_adjacent_merge_and_bad_partitions() {
        let g = Graph::path(3);
        let part = vec![vec!["v1".into(), "v2".into()], vec!["v3".into()]];
        assert!(matches!(
            quotient(&g, &part),
            Err(GraphError::BlockContainsEdge(..))
        ));

        let missing = vec![vec!["v1".into()], vec!["v2".into()]];
        assert!(matches!(
            quotient(&g, &missing),
            Err(GraphError::NotAPartition(..))
        ));

        let dup = vec![
            vec!["v1".into(), "v3".into()],
            vec!["v2".into(), "v3".into()],
        ];
        assert!(matches!(
            quotient(&g, &dup),
            Err(GraphError::NotAPartition(..))
        ));
    }

    #[test]
    fn path_recognition() {
        assert!(Graph::path(5).is_path());
        assert!(Graph::path(2).is_path());
        assert!(!Graph::cycle(4).is_path());
        assert!(!Graph::edgeless(1).is_path()); // K1 has dimension 0
        assert!(!disjoint_union(&Graph::path(2), &Graph::path(2)).is_path());
        // star on 4 vertices: three leaves
        let star = join(&Graph::edgeless(1), &Graph::edgeless(3));
        assert!(!star.is_path());
    }

    #[test]
    fn text_roundtrip_is_byte_identical() {
        let g = Graph::wheel(6).unwrap();
        let text = write_graph(&g);
        let g2 = read_graph(&text).unwrap();
        assert_eq!(write_graph(&g2), text);
        assert_eq!(g, g2);
    }

    #[test]
    fn text_parse_errors() {
        assert!(read_graph("").is_err());
        assert!(read_graph("graph 1 0\nv a\nv a\n").is_err());
        assert!(read_graph("graph 2 1\nv a\nv b\n").is_err()); // count mismatch
        assert!(read_graph("graph 1 1\nv a\ne a a\n").is_err()); // loop
        assert!(read_graph("graph 1 0\nv a\nx nonsense\n").is_err());
    }

    #[test]
    fn collision_relabeling_is_deterministic() {
        let (u, map) = disjoint_union_with_map(&Graph::path(2), &Graph::path(2));
        assert_eq!(u.vertex_count(), 4);
        assert_eq!(map["v1"], "v1#2");
        assert_eq!(map["v2"], "v2#2");
        assert!(u.has_edge("v1#2", "v2#2"));
    }
}
