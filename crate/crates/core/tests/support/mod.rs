//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use edgeideal::constructions::{cone_applicable, cone_predict, ConeLemmaReport};
use edgeideal::invariants::{self, Settings};
use edgeideal::{Graph, RationalSeries, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// A cone instance with everything needed to judge it.
#[derive(Debug)]
pub struct ConeCase {
    pub graph: Graph,
    pub subset: VertexSet,
    pub report: ConeLemmaReport,
    pub predicted: RationalSeries,
    pub outside_regime: bool,
    pub actual: RationalSeries,
    pub reg_after: usize,
}

impl ConeCase {
    pub fn evaluate(graph: &Graph, subset: VertexSet, settings: &Settings) -> ConeCase {
        let report = cone_applicable(graph, subset, settings).unwrap();
        let prediction = cone_predict(&report.h, report.dim).unwrap();
        let coned = graph.cone_over_subset(subset).unwrap();
        ConeCase {
            graph: graph.clone(),
            subset,
            actual: invariants::hilbert_series(&coned).unwrap(),
            reg_after: invariants::regularity(&coned, settings).unwrap(),
            predicted: prediction.series,
            outside_regime: prediction.outside_regime,
            report,
        }
    }

    pub fn holds(&self) -> bool {
        self.actual == self.predicted && self.reg_after == self.report.reg
    }
}

/// Random `(G, S)` pairs with `|V(G)| <= max_n - 1` meeting every
/// hypothesis, found by choosing `V \ S` as a random independent set of
/// size `α - 2`.
pub fn applicable_cones(seed: u64, want: usize, max_n: usize, settings: &Settings) -> Vec<ConeCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..200_000 {
        if out.len() >= want {
            break;
        }
        let n = rng.random_range(4..max_n);
        let p = rng.random_range(0.3..0.8);
        let g = random_graph(&mut rng, n, p);
        let alpha = invariants::alpha(&g);
        if alpha < 2 || invariants::deg_h(&g).unwrap() > 2 {
            continue;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut outside = VertexSet::empty();
        for v in order {
            if outside.len() + 2 < alpha && (g.neighbors(v).intersection(outside)).is_empty() {
                outside.insert(v);
            }
        }
        if outside.len() + 2 != alpha {
            continue;
        }
        let s = g.vertices().difference(outside);
        let report = cone_applicable(&g, s, settings).unwrap();
        if report.applicable() {
            out.push(ConeCase::evaluate(&g, s, settings));
        }
    }
    out
}
