//! Simple graphs on at most 62 vertices, stored as one neighbour bitmask per
//! vertex.
//!
//! Vertices are the dense integers `0..n`. Subsets of vertices are
//! [`VertexSet`] bitmasks, which is what the homology scans iterate over.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count accepted anywhere in the crate. 62 keeps the graph6
/// size header to a single byte and every subset in one machine word.
pub const MAX_VERTICES: usize = 62;

/// A set of vertices, bit `v` set iff `v` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < 64, "vertex {v} does not fit in a VertexSet");
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.0 &= !(1 << v);
        }
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest member plus one, or 0 for the empty set.
    pub const fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// A finite simple graph on the vertices `0..n`.
///
/// Immutable once built: every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(())
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from unordered vertex pairs. Repeated edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_mut(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbour masks, validating the simple-graph
    /// invariants.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_size(n)?;
        let all = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: VertexSet::from_bits(row & !all).iter().next().unwrap_or(64),
                    n,
                });
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::LoopEdge(v));
            }
            for u in VertexSet::from_bits(row).iter() {
                if (adj[u] >> v) & 1 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency is not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge_mut(u, v)?;
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw neighbour masks, indexed by vertex.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| (u, v))
        })
    }

    fn check_subset(&self, s: VertexSet) -> Result<()> {
        if !s.is_subset(self.vertices()) {
            let bad = s.difference(self.vertices()).iter().next().unwrap_or(self.n);
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        Ok(())
    }

    /// The induced subgraph on `w`, relabelled `0..|w|` in increasing order.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Self> {
        self.check_subset(w)?;
        let members: Vec<usize> = w.iter().collect();
        let mut adj = vec![0u64; members.len()];
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok(Graph { n: members.len(), adj })
    }

    /// `self` followed by `other` with its vertices shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        check_size(self.n + other.n)?;
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << shift));
        Ok(Graph { n: self.n + other.n, adj })
    }

    /// Adds a new vertex `n` adjacent to exactly the members of `s`.
    pub fn cone_over_subset(&self, s: VertexSet) -> Result<Self> {
        self.check_subset(s)?;
        check_size(self.n + 1)?;
        let apex = self.n;
        let mut adj = self.adj.clone();
        for v in s.iter() {
            adj[v] |= 1 << apex;
        }
        adj.push(s.bits());
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of
    /// `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {} but the graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || (seen >> p) & 1 == 1 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertices().bits();
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen & unseen.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            unseen &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Whether no edge has both ends in `s`.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// Standard graph6 encoding (size byte, then the upper triangle in
    /// column-major order, six bits per byte).
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
        out.push(n as u8 + 63);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    pub fn from_graph6(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let Some((&head, body)) = bytes.split_first() else {
            return Err(Error::Graph6("empty string".into()));
        };
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
            }
        }
        if head == 126 {
            return Err(Error::Graph6(format!(
                "multi-byte size headers (n > {MAX_VERTICES}) are not supported"
            )));
        }
        let n = (head - 63) as usize;
        let pairs = n * n.saturating_sub(1) / 2;
        let expected = pairs.div_ceil(6);
        if body.len() != expected {
            return Err(Error::Graph6(format!(
                "expected {expected} adjacency bytes for n = {n}, found {}",
                body.len()
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if (byte >> (5 - k % 6)) & 1 == 1 {
                    g.add_edge_mut(i, j)?;
                }
                k += 1;
            }
        }
        if !pairs.is_multiple_of(6) {
            let last = body[body.len() - 1] - 63;
            if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
        }
        Ok(g)
    }

    /// Parses the edge-list text format: first non-comment line `n`, then one
    /// `u v` pair per line. `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse = |tok: &str| {
                tok.parse::<usize>().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("bad integer {tok:?}: {e}"),
                })
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match (n, toks.as_slice()) {
                (None, [count]) => n = Some(parse(count)?),
                (None, _) => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected the vertex count".into(),
                    })
                }
                (Some(_), [u, v]) => edges.push((parse(u)?, parse(v)?, line_no)),
                (Some(_), _) => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected `u v`".into(),
                    })
                }
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, message: "missing vertex count".into() })?;
        let mut g = Graph::empty(n)?;
        for (u, v, line) in edges {
            g.add_edge_mut(u, v).map_err(|e| Error::Parse { line, message: e.to_string() })?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
