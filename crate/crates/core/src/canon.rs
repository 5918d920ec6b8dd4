//! Canonical labelling of small graphs.
//!
//! The canonical code is the lexicographically smallest upper-triangle
//! adjacency string (graph6 pair order, first pair most significant) over
//! the labellings reachable by equitable refinement and individualization.
//! Refinement commutes with relabelling, so the code is an isomorphism
//! invariant. Search subtrees that differ by an automorphism fixing the
//! current prefix are skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted: `16 * 15 / 2 = 120` pairs fit in a `u128`.
pub const MAX_CANON_VERTICES: usize = 16;

/// Stored automorphisms are capped; pruning stays correct with fewer.
const MAX_AUTOMORPHISMS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// Packed adjacency of the canonical graph.
    pub code: u128,
    /// `lab[i]` is the input vertex placed at position `i`.
    pub lab: Vec<usize>,
}

impl Canonical {
    /// The canonical graph itself.
    pub fn graph(&self, g: &Graph) -> Graph {
        let n = self.lab.len();
        let mut pos = vec![0; n];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v] = i;
        }
        g.relabel(&pos).expect("lab is a permutation")
    }
}

#[derive(Clone, Copy)]
struct Partition {
    cells: [u64; MAX_CANON_VERTICES],
    len: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cells = [0; MAX_CANON_VERTICES];
        let len = if n == 0 {
            0
        } else {
            cells[0] = (1u64 << n) - 1;
            1
        };
        Partition { cells, len }
    }

    fn cells(&self) -> &[u64] {
        &self.cells[..self.len]
    }

    fn push(&mut self, cell: u64) {
        self.cells[self.len] = cell;
        self.len += 1;
    }

    /// Splits cells by neighbour counts into each cell in turn until the
    /// partition is equitable. Subcells keep their parent's position and are
    /// ordered by increasing count.
    fn refine(&mut self, adj: &[u64]) {
        let mut s = 0;
        while s < self.len && self.len < adj.len() {
            let splitter = self.cells[s];
            let mut next = Partition { cells: [0; MAX_CANON_VERTICES], len: 0 };
            for &cell in self.cells() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut buckets = [0u64; MAX_CANON_VERTICES + 1];
                let mut rest = cell;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    buckets[(adj[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                for &b in buckets.iter().filter(|&&b| b != 0) {
                    next.push(b);
                }
            }
            if next.len > self.len {
                *self = next;
                s = 0;
            } else {
                s += 1;
            }
        }
    }

    fn individualize(&self, cell: usize, v: usize) -> Self {
        let mut out = Partition { cells: [0; MAX_CANON_VERTICES], len: 0 };
        for (i, &c) in self.cells().iter().enumerate() {
            if i == cell {
                out.push(1 << v);
                out.push(c & !(1 << v));
            } else {
                out.push(c);
            }
        }
        out
    }
}

fn code_of(adj: &[u64], lab: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..lab.len() {
        let row = adj[lab[j]];
        for &u in &lab[..j] {
            code = code << 1 | ((row >> u) & 1) as u128;
        }
    }
    code
}

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(u128, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, p: &Partition) {
        let lab: Vec<usize> = p.cells().iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = code_of(self.adj, &lab);
        match &self.best {
            Some((best, best_lab)) if *best == code => {
                if self.automorphisms.len() < MAX_AUTOMORPHISMS {
                    let mut gamma = vec![0; lab.len()];
                    for (&from, &to) in best_lab.iter().zip(&lab) {
                        gamma[from] = to;
                    }
                    self.automorphisms.push(gamma);
                }
            }
            Some((best, _)) if *best < code => {}
            _ => self.best = Some((code, lab)),
        }
    }

    /// Vertices of `cell` in the same orbit as an explored sibling under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn equivalent_to_explored(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        let n = self.adj.len();
        let mut root: Vec<usize> = (0..n).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&x| gamma[x] == x) {
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut root, x), find(&mut root, y));
                    root[a] = b;
                }
            }
        }
        let rv = find(&mut root, v);
        explored.iter().any(|&w| find(&mut root, w) == rv)
    }

    fn descend(&mut self, p: Partition, prefix: &mut Vec<usize>) {
        if p.len == self.adj.len() {
            self.leaf(&p);
            return;
        }
        let target = p.cells().iter().position(|c| c.count_ones() > 1).expect("partition is not discrete");
        let mut explored = Vec::new();
        let mut rest = p.cells[target];
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.equivalent_to_explored(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = p.individualize(target, v);
            child.refine(self.adj);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }
}

/// Canonical code and labelling of `g` (at most [`MAX_CANON_VERTICES`]
/// vertices).
pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_CANON_VERTICES });
    }
    let adj = g.adjacency();
    let mut root = Partition::unit(n);
    root.refine(adj);
    let mut search = Search { adj, best: None, automorphisms: Vec::new() };
    search.descend(root, &mut Vec::new());
    let (code, lab) = search.best.unwrap_or((0, Vec::new()));
    Ok(Canonical { code, lab })
}

/// Canonical packed adjacency of `g`.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    Ok(canonical_form(g)?.code)
}

/// `g` relabelled into canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.graph(g))
}

/// Vertices of the first cell of the equitable refinement of the unit
/// partition. The first canonical position is always taken from this cell.
pub fn first_cell(g: &Graph) -> Result<u64> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_CANON_VERTICES });
    }
    let mut root = Partition::unit(n);
    root.refine(g.adjacency());
    Ok(root.cells().first().copied().unwrap_or(0))
}
