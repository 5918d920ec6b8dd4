//! Maximum matchings in general graphs (Edmonds' blossom algorithm) and
//! maximum independent sets by branch and bound.

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// `mate[v]` for a maximum matching, `None` for unmatched vertices.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let mut blossom = Blossom::new(g);
    for v in 0..g.vertex_count() {
        if blossom.mate[v] == NONE {
            let mut u = blossom.augmenting_path_from(v);
            while u != NONE {
                let pv = blossom.parent[u];
                let next = blossom.mate[pv];
                blossom.mate[u] = pv;
                blossom.mate[pv] = u;
                u = next;
            }
        }
    }
    blossom.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
}

/// Size of a maximum matching, α′(G).
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).iter().filter(|m| m.is_some()).count() / 2
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating forest from `root`, contracting odd cycles, and
    /// returns the free vertex ending an augmenting path (or `NONE`).
    fn augmenting_path_from(&mut self, root: usize) -> usize {
        let n = self.mate.len();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.in_tree[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.in_tree[m] = true;
                    queue.push_back(m);
                }
            }
        }
        NONE
    }
}

/// Size of a largest independent set, α(G).
pub fn independence_number(g: &Graph) -> usize {
    fn best(adj: &[u64], cand: u64) -> usize {
        if cand == 0 {
            return 0;
        }
        // A vertex of degree <= 1 lies in some maximum independent set.
        let mut rest = cand;
        let mut pick = None;
        let mut max_deg = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & cand).count_ones();
            if d <= 1 {
                return 1 + best(adj, cand & !(1 << v) & !adj[v]);
            }
            if pick.is_none() || d > max_deg {
                pick = Some(v);
                max_deg = d;
            }
        }
        let v = pick.expect("cand is nonempty");
        let without = best(adj, cand & !(1 << v));
        let with = 1 + best(adj, cand & !(1 << v) & !adj[v]);
        without.max(with)
    }
    best(g.adjacency(), g.vertices().bits())
}
