//! Finite simple graphs on `{0, …, n-1}` stored as neighbourhood bitmasks.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An immutable simple graph.
///
/// `labels[i]` is the name of vertex `i` in the graph this one was induced
/// from (the identity for graphs built directly), so witnesses can be
/// reported in original coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Vec<usize>,
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n], labels: (0..n).collect() })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.adj[u] = g.adj[u].insert(v);
            g.adj[v] = g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood masks. Masks must be symmetric and loop-free.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n);
        for (u, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(full) {
                return Err(Error::VertexOutOfRange { vertex: nb.max().unwrap_or(0), n });
            }
            if nb.contains(u) {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if nb.iter().any(|v| !adj[v].contains(u)) {
                return Err(Error::InvalidParameter(format!("adjacency of {u} is not symmetric")));
            }
        }
        Ok(Graph { n, adj, labels: (0..n).collect() })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let full = VertexSet::full(n);
        Graph::from_adjacency((0..n).map(|v| full.remove(v)).collect())
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
        }
        circulant(n, &[1])
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Original label of vertex `v` (identity unless this graph was induced).
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    /// The subgraph induced on `subset`, relabelled to `0..|subset|` in
    /// ascending order; [`Graph::label`] recovers the original names.
    pub fn induced_subgraph(&self, subset: VertexSet) -> Result<Graph> {
        if let Some(v) = subset.difference(self.vertices()).min() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let members = subset.to_vec();
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            position[v] = i;
        }
        let adj = members
            .iter()
            .map(|&v| self.adj[v].intersection(subset).iter().fold(VertexSet::EMPTY, |acc, w| acc.insert(position[w])))
            .collect();
        let labels = members.iter().map(|&v| self.labels[v]).collect();
        Ok(Graph { n: members.len(), adj, labels })
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Whether `G[subset]` is connected. The empty subset counts as connected.
    pub fn is_connected_within(&self, subset: VertexSet) -> bool {
        match subset.min() {
            None => true,
            Some(v) => self.component_within(v, subset) == subset,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Whether `subset` spans no edge.
    pub fn is_independent(&self, subset: VertexSet) -> bool {
        subset.iter().all(|v| self.adj[v].intersection(subset).is_empty())
    }

    pub fn is_clique(&self, subset: VertexSet) -> bool {
        subset.iter().all(|v| subset.remove(v).is_subset(self.adj[v]))
    }

    /// Chordality via maximum cardinality search followed by a perfect
    /// elimination ordering check.
    pub fn is_chordal(&self) -> bool {
        let order = self.maximum_cardinality_search();
        self.is_perfect_elimination_order(&order)
    }

    /// Visit order of maximum cardinality search; ties go to the smallest vertex.
    fn maximum_cardinality_search(&self) -> Vec<usize> {
        let mut weight = vec![0usize; self.n];
        let mut unvisited = self.vertices();
        let mut order = Vec::with_capacity(self.n);
        while !unvisited.is_empty() {
            let v = unvisited.iter().max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a))).expect("non-empty");
            unvisited = unvisited.remove(v);
            order.push(v);
            for w in self.adj[v].intersection(unvisited) {
                weight[w] += 1;
            }
        }
        order
    }

    /// `visit` is an MCS visit order; its reverse is tested as an elimination
    /// order. For every vertex, its earlier-visited neighbours minus the
    /// latest of them must be adjacent to that latest one.
    fn is_perfect_elimination_order(&self, visit: &[usize]) -> bool {
        let mut position = vec![0usize; self.n];
        for (i, &v) in visit.iter().enumerate() {
            position[v] = i;
        }
        let mut earlier = VertexSet::EMPTY;
        for &v in visit {
            let back = self.adj[v].intersection(earlier);
            if let Some(parent) = back.iter().max_by_key(|&w| position[w]) {
                let rest = back.remove(parent);
                if !rest.is_subset(self.adj[parent]) {
                    return false;
                }
            }
            earlier = earlier.insert(v);
        }
        true
    }

    /// Parses the edge-list format: first line `n`, then one `u v` per line
    /// with `u < v < n`. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, reason: "missing vertex count".into() })?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse { line: hl, reason: format!("expected vertex count, found `{header}`") })?;
        if n > MAX_VERTICES {
            return Err(Error::Parse { line: hl, reason: format!("vertex count {n} exceeds 64") });
        }
        let mut edges = Vec::new();
        for (line, body) in lines {
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse { line, reason: format!("expected `u v`, found `{body}`") });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse { line, reason: format!("`{s}` is not a vertex") })
            };
            let (u, v) = (parse(fields[0])?, parse(fields[1])?);
            if u >= v {
                return Err(Error::Parse { line, reason: format!("edge `{u} {v}` must satisfy u < v") });
            }
            if v >= n {
                return Err(Error::Parse { line, reason: format!("vertex {v} out of range for n = {n}") });
            }
            edges.push((u, v));
        }
        Graph::from_edges(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// The circulant graph `C_n(S)`: `x ~ y` iff `x - y mod n` lies in `S ∪ -S`.
pub fn circulant(n: usize, connection: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("circulant graph needs n >= 2, got {n}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    if let Some(&a) = connection.iter().find(|&&a| a == 0 || a >= n) {
        return Err(Error::InvalidParameter(format!("connection element {a} not in [1, {}]", n - 1)));
    }
    let adj = (0..n)
        .map(|x| {
            connection.iter().flat_map(|&a| [(x + a) % n, (x + n - a) % n]).fold(VertexSet::EMPTY, VertexSet::insert)
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// The squared cycle `W_n = C_n({1, 2})`.
pub fn squared_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("squared cycle needs n >= 3, got {n}")));
    }
    circulant(n, &[1, 2])
}
