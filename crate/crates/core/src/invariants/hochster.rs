//! The 2^n subset scan behind Hochster's formula:
//! `β_{i,j}(R/I(G)) = Σ_{|W| = j} dim H̃_{j-i-1}(Ind(G_W))`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::Graph;
use crate::homology::{collect_independent_sets, homology_of_layers, Field, Scratch};

/// Subsets per work unit when the scan is split across threads.
#[cfg(feature = "parallel")]
const CHUNK: u64 = 1 << 10;

/// Reduced homology of `Ind(G_W)` for `W = within`, written into `dims`
/// (index 0 is degree -1). When `skip_cones` is set and `G_W` has an
/// isolated vertex, the complex is a cone and `dims` is left empty.
pub(crate) fn subset_homology(
    adj: &[u64],
    within: u64,
    field: Field,
    skip_cones: bool,
    scratch: &mut Scratch,
) -> Result<Vec<usize>> {
    if skip_cones && within != 0 {
        let mut rest = within;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & within == 0 {
                return Ok(Vec::new());
            }
        }
    }
    let mut layers = std::mem::take(&mut scratch.layers);
    collect_independent_sets(adj, within, &mut layers);
    let dims = homology_of_layers(&layers, field, scratch);
    scratch.layers = layers;
    dims
}

/// Folds `visit(W, dims)` over every subset `W` of the vertices, in parallel
/// chunks when the `parallel` feature is on. `merge` must be commutative and
/// associative.
pub(crate) fn scan_subsets<A, V, M>(
    g: &Graph,
    field: Field,
    skip_cones: bool,
    init: fn() -> A,
    visit: V,
    merge: M,
) -> Result<A>
where
    A: Send,
    V: Fn(&mut A, u64, &[usize]) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    let n = g.vertex_count();
    let adj = g.adjacency();
    let total: u64 = 1 << n;
    let run = |lo: u64, hi: u64| -> Result<A> {
        let mut acc = init();
        let mut scratch = Scratch::default();
        for w in lo..hi {
            let dims = subset_homology(adj, w, field, skip_cones, &mut scratch)?;
            if dims.iter().any(|&d| d != 0) {
                visit(&mut acc, w, &dims);
            }
        }
        Ok(acc)
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if total > CHUNK {
            return (0..total.div_ceil(CHUNK))
                .into_par_iter()
                .map(|c| run(c * CHUNK, ((c + 1) * CHUNK).min(total)))
                .try_reduce(init, |a, b| Ok(merge(a, b)));
        }
    }
    let _ = &merge;
    run(0, total)
}

pub(crate) fn betti_entries(g: &Graph, field: Field, skip_cones: bool) -> Result<BTreeMap<(usize, usize), u64>> {
    scan_subsets(
        g,
        field,
        skip_cones,
        BTreeMap::new,
        |acc, w, dims| {
            let j = w.count_ones() as usize;
            for (idx, &d) in dims.iter().enumerate() {
                // idx = k + 1 for H̃_k, and k = j - i - 1.
                if d != 0 {
                    let i = j - idx;
                    *acc.entry((i, j)).or_insert(0) += d as u64;
                }
            }
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )
}

pub(crate) fn regularity_scan(g: &Graph, field: Field, skip_cones: bool) -> Result<usize> {
    scan_subsets(
        g,
        field,
        skip_cones,
        || 0usize,
        |acc, _w, dims| {
            // H̃_k != 0 contributes j - i = k + 1 = idx.
            if let Some(idx) = dims.iter().rposition(|&d| d != 0) {
                *acc = (*acc).max(idx);
            }
        },
        usize::max,
    )
}
