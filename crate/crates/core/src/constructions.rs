//! Graph families with known `(reg, deg h)`, each paired with the values it
//! is expected to produce.
//!
//! Vertex numbering is fixed so graph6 fixtures stay byte-stable:
//! the ribbon has its centre at 0 with edges `12` and `34`, and the
//! degree-one family puts the ribbon first, then the pendant edges
//! `y_k1 y_k2`, then the clique.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{self, Settings};
use crate::poly::{IntPolynomial, RationalSeries};

/// What a construction is expected to produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub series: Option<RationalSeries>,
    pub reg: Option<usize>,
    pub deg_h: Option<usize>,
    /// Short human-readable origin of the expectation.
    pub source: String,
}

impl Prediction {
    fn full(series: RationalSeries, reg: usize, source: impl Into<String>) -> Self {
        let deg_h = series.numerator().degree().unwrap_or(0);
        Prediction { series: Some(series), reg: Some(reg), deg_h: Some(deg_h), source: source.into() }
    }

    /// The prediction for a disjoint union: series multiply, `reg` and
    /// `deg h` add.
    pub fn union(&self, other: &Prediction) -> Result<Prediction> {
        let series = match (&self.series, &other.series) {
            (Some(a), Some(b)) => Some(a.mul(b)?),
            _ => None,
        };
        Ok(Prediction {
            series,
            reg: self.reg.zip(other.reg).map(|(a, b)| a + b),
            deg_h: self.deg_h.zip(other.deg_h).map(|(a, b)| a + b),
            source: format!("{} + {}", self.source, other.source),
        })
    }
}

/// Computed values next to a [`Prediction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictionCheck {
    pub series: RationalSeries,
    pub reg: usize,
    pub deg_h: usize,
    pub series_ok: Option<bool>,
    pub reg_ok: Option<bool>,
    pub deg_h_ok: Option<bool>,
}

impl PredictionCheck {
    pub fn passed(&self) -> bool {
        [self.series_ok, self.reg_ok, self.deg_h_ok].iter().all(|c| c.unwrap_or(true))
    }
}

/// Computes the invariants of `g` and compares them with `prediction`.
/// Regularity is only computed when the prediction names one.
pub fn check_prediction(g: &Graph, prediction: &Prediction, settings: &Settings) -> Result<PredictionCheck> {
    let series = invariants::hilbert_series(g)?;
    let deg_h = series.numerator().degree().unwrap_or(0);
    let reg = match prediction.reg {
        Some(_) => invariants::regularity(g, settings)?,
        None => 0,
    };
    Ok(PredictionCheck {
        series_ok: prediction.series.as_ref().map(|s| *s == series),
        reg_ok: prediction.reg.map(|r| r == reg),
        deg_h_ok: prediction.deg_h.map(|d| d == deg_h),
        series,
        reg,
        deg_h,
    })
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("complete bipartite parts must be nonempty"));
    }
    let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    Graph::from_edge_list(a + b, &edges)
}

/// `K_{1,n-1}` centred at 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("a star needs at least 2 vertices"));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `m` disjoint edges `{2k, 2k+1}`.
pub fn matching_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(invalid("a matching graph needs at least one edge"));
    }
    let edges: Vec<_> = (0..m).map(|k| (2 * k, 2 * k + 1)).collect();
    Graph::from_edge_list(2 * m, &edges)
}

/// Two disjoint edges coned over all four vertices, with the cone point
/// moved to vertex 0.
pub fn ribbon() -> Result<Graph> {
    let two = matching_graph(2)?;
    let coned = two.cone_over_subset(two.vertices())?;
    coned.relabel(&[1, 2, 3, 4, 0])
}

/// Role of a vertex in the degree-one family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Role {
    /// Ribbon vertex; 0 is the centre.
    X(usize),
    /// `y_{k,s}`, pendant edge `k >= 1`, side `s ∈ {1, 2}`.
    Y(usize, usize),
    /// `z^{(i)}_j`.
    Z(usize, usize),
}

/// `|Z_r| = Σ_{i=1}^{r-2} (2^{i+1} - 1) = 2^r - r - 2`.
pub fn clique_size(r: usize) -> usize {
    (1usize << r) - r - 2
}

fn role_index(r: usize, role: Role) -> usize {
    match role {
        Role::X(i) => i,
        Role::Y(k, s) => 5 + 2 * (k - 1) + (s - 1),
        Role::Z(i, j) => 5 + 2 * (r - 2) + clique_size(i + 1) + (j - 1),
    }
}

/// The degree-one family `G^(r)` for `r >= 3`: `H = (1 + (2^r - 1)t)/(1 - t)^r`
/// and `reg = r`.
///
/// Vertices: the ribbon (0..5), then pendant edges `y_k1 y_k2` for
/// `k = 1..r-2`, then a clique `Z` made of blocks `z^(i)` of size
/// `2^(i+1) - 1`. Every `z^(i)` is adjacent to the ribbon, to the whole
/// clique, and to `y_k1` for `k <= i` only.
///
/// The nested attachment is what the inductive cone construction
/// ([`g_family_cone_chain`]) produces. Joining every `z` to every `y_k1`
/// instead gives a different graph once `r >= 4`; at `r = 4` its
/// h-polynomial is `1 + 15t - 3t^2 + 3t^3`.
pub fn g_family(r: usize) -> Result<Graph> {
    if r < 3 {
        return Err(invalid(format!("the degree-one family needs r >= 3, got r = {r}")));
    }
    let n = 5 + 2 * (r - 2) + clique_size(r);
    let mut g = ribbon()?.disjoint_union(&Graph::empty(n - 5)?)?;
    for k in 1..=r - 2 {
        g = g.with_edge(role_index(r, Role::Y(k, 1)), role_index(r, Role::Y(k, 2)))?;
    }
    let zs: Vec<(usize, usize)> =
        (1..=r - 2).flat_map(|i| (1..=(1usize << (i + 1)) - 1).map(move |j| (i, j))).collect();
    for (a, &(i, j)) in zs.iter().enumerate() {
        let z = role_index(r, Role::Z(i, j));
        for x in 0..5 {
            g = g.with_edge(z, x)?;
        }
        for k in 1..=i {
            g = g.with_edge(z, role_index(r, Role::Y(k, 1)))?;
        }
        for &(i2, j2) in &zs[a + 1..] {
            g = g.with_edge(z, role_index(r, Role::Z(i2, j2)))?;
        }
    }
    Ok(g)
}

/// One cone step: `next = base.cone_over_subset(subset)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeStep {
    pub base: Graph,
    pub subset: VertexSet,
}

impl ConeStep {
    pub fn apply(&self) -> Result<Graph> {
        self.base.cone_over_subset(self.subset)
    }
}

/// The inductive construction of `G^(r)`: start from `G^(r-1)` (the ribbon
/// for `r = 3`) plus a disjoint edge `y_{r-2,1} y_{r-2,2}`, then cone
/// `2^(r-1) - 1` times over the ribbon, every `y_k1`, the old clique and the
/// cone points added so far.
///
/// Returns the cone steps of the last stage together with the final graph,
/// which is `g_family(r)` up to the vertex order of the steps. The final
/// graph is relabelled to match `g_family(r)` exactly.
pub fn g_family_cone_chain(r: usize) -> Result<(Vec<ConeStep>, Graph)> {
    if r < 3 {
        return Err(invalid(format!("the degree-one family needs r >= 3, got r = {r}")));
    }
    let mut graph = ribbon()?;
    let mut roles: Vec<Role> = (0..5).map(Role::X).collect();
    let mut steps = Vec::new();
    for stage in 3..=r {
        let k = stage - 2;
        steps.clear();
        let base = graph.vertex_count();
        graph = graph.disjoint_union(&matching_graph(1)?)?;
        roles.extend([Role::Y(k, 1), Role::Y(k, 2)]);
        let mut subset: VertexSet = roles
            .iter()
            .enumerate()
            .filter(|(_, role)| !matches!(role, Role::Y(_, 2)))
            .map(|(v, _)| v)
            .collect();
        debug_assert!(!subset.contains(base + 1));
        for j in 1..=(1usize << (k + 1)) - 1 {
            let step = ConeStep { base: graph.clone(), subset };
            graph = step.apply()?;
            steps.push(step);
            subset.insert(graph.vertex_count() - 1);
            roles.push(Role::Z(k, j));
        }
    }
    let perm: Vec<usize> = roles.iter().map(|&role| role_index(r, role)).collect();
    let relabelled = graph.relabel(&perm)?;
    Ok((steps, relabelled))
}

/// A graph with `reg = r` and `deg h = d`:
/// * `r <= d`: `K_{d-r+1,d-r+1}` plus `r - 1` disjoint edges;
/// * `r = d + 1`: the ribbon plus `r - 2` disjoint edges;
/// * `r > d + 1`: `G^(r-d+1)` plus `d - 1` disjoint edges.
pub fn realize(r: usize, d: usize) -> Result<Graph> {
    Ok(realize_parts(r, d)?.0)
}

fn realize_parts(r: usize, d: usize) -> Result<(Graph, Prediction)> {
    if r == 0 || d == 0 {
        return Err(invalid("realize needs r, d >= 1"));
    }
    let (core, core_pred, extra) = if r <= d {
        let k = d - r + 1;
        (complete_bipartite(k, k)?, Family::Kdd { d: k }.prediction()?, r - 1)
    } else if r == d + 1 {
        (ribbon()?, Family::Ribbon.prediction()?, r - 2)
    } else {
        let q = r - d + 1;
        (g_family(q)?, Family::GFamily { r: q }.prediction()?, d - 1)
    };
    if extra == 0 {
        return Ok((core, core_pred));
    }
    let graph = core.disjoint_union(&matching_graph(extra)?)?;
    let pred = core_pred.union(&Family::Matching { m: extra }.prediction()?)?;
    Ok((graph, Prediction { source: format!("realize({r},{d}): {}", pred.source), ..pred }))
}

/// The named families, as exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Kdd { d: usize },
    Star { n: usize },
    Matching { m: usize },
    Ribbon,
    GFamily { r: usize },
    Realize { r: usize, d: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Kdd { d } => write!(f, "K_{{{d},{d}}}"),
            Family::Star { n } => write!(f, "K_{{1,{}}}", n.saturating_sub(1)),
            Family::Matching { m } => write!(f, "{m} disjoint edges"),
            Family::Ribbon => write!(f, "ribbon"),
            Family::GFamily { r } => write!(f, "G^({r})"),
            Family::Realize { r, d } => write!(f, "realize({r},{d})"),
        }
    }
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Kdd { d } => complete_bipartite(d, d),
            Family::Star { n } => star(n),
            Family::Matching { m } => matching_graph(m),
            Family::Ribbon => ribbon(),
            Family::GFamily { r } => g_family(r),
            Family::Realize { r, d } => realize(r, d),
        }
    }

    pub fn prediction(&self) -> Result<Prediction> {
        let one_minus_t = |e| IntPolynomial::one_minus_t_pow(e);
        let label = self.to_string();
        match *self {
            Family::Kdd { d } => {
                if d == 0 {
                    return Err(invalid("K_{d,d} needs d >= 1"));
                }
                let num = IntPolynomial::monomial(2, 0).sub(&one_minus_t(d)?)?;
                Ok(Prediction::full(RationalSeries::new(num, d)?, 1, label))
            }
            Family::Star { n } => {
                if n < 2 {
                    return Err(invalid("a star needs at least 2 vertices"));
                }
                // Independent sets: the centre alone, or any set of leaves.
                let leaves = RationalSeries::new(IntPolynomial::one(), n - 1)?;
                let centre = RationalSeries::new(IntPolynomial::monomial(1, 1), 1)?;
                Ok(Prediction::full(leaves.add(&centre)?, 1, label))
            }
            Family::Matching { m } => {
                if m == 0 {
                    return Err(invalid("a matching graph needs at least one edge"));
                }
                let num = IntPolynomial::new(vec![1, 1]);
                let mut num_m = IntPolynomial::one();
                for _ in 0..m {
                    num_m = num_m.mul(&num)?;
                }
                Ok(Prediction::full(RationalSeries::new(num_m, m)?, m, label))
            }
            Family::Ribbon => {
                Ok(Prediction::full(RationalSeries::new(IntPolynomial::new(vec![1, 3]), 2)?, 2, label))
            }
            Family::GFamily { r } => {
                if !(3..=61).contains(&r) {
                    return Err(invalid(format!("the degree-one family needs r >= 3, got r = {r}")));
                }
                let num = IntPolynomial::new(vec![1, (1i64 << r) - 1]);
                Ok(Prediction::full(RationalSeries::new(num, r)?, r, label))
            }
            Family::Realize { r, d } => Ok(realize_parts(r, d)?.1),
        }
    }
}

/// Which hypotheses of the cone lemma hold for `(g, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeLemmaReport {
    pub dim: usize,
    pub h: IntPolynomial,
    pub reg: usize,
    /// `dim R/I(G) >= 2`.
    pub dim_ok: bool,
    /// `h = 1 + h1 t + h2 t^2`.
    pub h_ok: bool,
    /// `reg >= 2`.
    pub reg_ok: bool,
    /// `|S| = n - dim + 2`.
    pub cardinality_ok: bool,
    /// Every vertex outside `S` has a neighbour in `S`.
    pub domination_ok: bool,
    /// `V \ S` is independent. The series identity needs this: the colon
    /// ideal `I(G^S) : x_new` is `(x_s : s in S) + I(G[V \ S])`, which is
    /// generated by variables only when `G[V \ S]` has no edges.
    pub complement_independent: bool,
}

impl ConeLemmaReport {
    /// The four conditions as usually stated: dimension and h-shape,
    /// regularity, cardinality, domination.
    pub fn stated_hypotheses(&self) -> bool {
        self.dim_ok && self.h_ok && self.reg_ok && self.cardinality_ok && self.domination_ok
    }

    /// The stated conditions plus independence of `V \ S`.
    pub fn applicable(&self) -> bool {
        self.stated_hypotheses() && self.complement_independent
    }
}

/// Checks the hypotheses under which coning `g` over `s` raises `h1` by one,
/// lowers `h2` by one and keeps `dim` and `reg`. See
/// [`ConeLemmaReport::complement_independent`] for the extra condition.
pub fn cone_applicable(g: &Graph, s: VertexSet, settings: &Settings) -> Result<ConeLemmaReport> {
    if !s.is_subset(g.vertices()) {
        return Err(Error::VertexOutOfRange { vertex: s.bound() - 1, n: g.vertex_count() });
    }
    let series = invariants::hilbert_series(g)?;
    let dim = series.denom_exp();
    let h = series.numerator().clone();
    let reg = invariants::regularity(g, settings)?;
    let n = g.vertex_count();
    let outside = g.vertices().difference(s);
    Ok(ConeLemmaReport {
        dim_ok: dim >= 2,
        h_ok: h.coeff(0) == 1 && h.degree().unwrap_or(0) <= 2,
        reg_ok: reg >= 2,
        cardinality_ok: n + 2 >= dim && s.len() == n + 2 - dim,
        domination_ok: outside.iter().all(|u| !g.neighbors(u).intersection(s).is_empty()),
        complement_independent: g.is_independent(outside),
        dim,
        h,
        reg,
    })
}

/// The series predicted after coning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePrediction {
    pub series: RationalSeries,
    /// `h2 = 0`: the formula still evaluates (with a `-t^2` term) but this
    /// case is outside the range where it has been shown to hold.
    pub outside_regime: bool,
}

/// `(1 + (h1 + 1) t + (h2 - 1) t^2) / (1 - t)^dim`.
pub fn cone_predict(h: &IntPolynomial, dim: usize) -> Result<ConePrediction> {
    if h.coeff(0) != 1 || h.degree().unwrap_or(0) > 2 {
        return Err(invalid(format!("expected h = 1 + h1 t + h2 t^2, got {h}")));
    }
    let (h1, h2) = (h.coeff(1), h.coeff(2));
    let bump = |c: i64, by: i64| c.checked_add(by).ok_or(Error::Overflow("cone prediction"));
    let num = IntPolynomial::new(vec![1, bump(h1, 1)?, bump(h2, -1)?]);
    Ok(ConePrediction { series: RationalSeries::new(num, dim)?, outside_regime: h2 == 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    fn s_(c: &[i64], e: usize) -> RationalSeries {
        RationalSeries::new(p(c), e).unwrap()
    }

    #[test]
    fn bipartite_and_small_families() {
        let k22 = complete_bipartite(2, 2).unwrap();
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        // 0,2 | 1,3 sides of the cycle map to 0,1 | 2,3.
        assert_eq!(c4.relabel(&[0, 2, 1, 3]).unwrap(), k22);
        assert_eq!(complete_bipartite(1, 1).unwrap(), matching_graph(1).unwrap());
        assert_eq!(star(2).unwrap(), matching_graph(1).unwrap());
        assert!(complete_bipartite(0, 3).is_err());
        assert!(star(1).is_err());
        assert!(matching_graph(0).is_err());
    }

    #[test]
    fn ribbon_shape() {
        let r = ribbon().unwrap();
        assert_eq!((r.vertex_count(), r.edge_count()), (5, 6));
        assert_eq!(r.neighbors(0), VertexSet::from_iter(1..5));
        assert!(r.has_edge(1, 2) && r.has_edge(3, 4));
        assert_eq!(invariants::alpha(&r), 2);
    }

    #[test]
    fn degree_one_family_shape() {
        let g3 = g_family(3).unwrap();
        assert_eq!(g3.vertex_count(), 10);
        assert_eq!(g_family(4).unwrap().vertex_count(), 19);
        assert_eq!(clique_size(4), 10);
        assert!(g_family(2).is_err());
        // Picture of G_3: x8..x10 see x1..x6 and each other, not x7.
        for z in 7..10 {
            assert_eq!(g3.neighbors(z), VertexSet::from_iter((0..6).chain(7..10).filter(|&v| v != z)));
        }
        assert!(g3.has_edge(5, 6));
        assert_eq!(invariants::h_polynomial(&g3).unwrap(), p(&[1, 7]));
    }

    #[test]
    fn clique_blocks_have_nested_neighbourhoods() {
        let r = 5;
        let g = g_family(r).unwrap();
        let closed = |v: usize| g.neighbors(v).union(VertexSet::from_iter([v]));
        for i in 1..=r - 2 {
            for j in 1..(1 << (i + 1)) - 1 {
                let a = role_index(r, Role::Z(i, j));
                let b = role_index(r, Role::Z(i, j + 1));
                assert_eq!(closed(a), closed(b));
            }
            if i < r - 2 {
                let here = closed(role_index(r, Role::Z(i, 1)));
                let next = closed(role_index(r, Role::Z(i + 1, 1)));
                assert!(here.is_subset(next) && here != next);
            }
        }
    }

    #[test]
    fn uniform_attachment_breaks_degree_one() {
        // Join every clique vertex to every y_k1 in G^(4).
        let mut g = g_family(4).unwrap();
        for z in 9..19 {
            g = g.with_edge(z, role_index(4, Role::Y(2, 1))).unwrap();
        }
        assert_eq!(invariants::h_polynomial(&g).unwrap(), p(&[1, 15, -3, 3]));
        assert_eq!(invariants::h_polynomial(&g_family(4).unwrap()).unwrap(), p(&[1, 15]));
    }

    #[test]
    fn cone_chain_reaches_the_family() {
        for r in 3..=5 {
            let (steps, last) = g_family_cone_chain(r).unwrap();
            assert_eq!(steps.len(), (1 << (r - 1)) - 1);
            assert_eq!(last, g_family(r).unwrap());
        }
    }

    #[test]
    fn realize_cases() {
        assert_eq!(realize(1, 1).unwrap(), matching_graph(1).unwrap());
        assert_eq!(realize(2, 1).unwrap(), ribbon().unwrap());
        let g = realize(4, 2).unwrap();
        assert_eq!(g, g_family(3).unwrap().disjoint_union(&matching_graph(1).unwrap()).unwrap());
        assert_eq!(g.vertex_count(), 12);
        let pred = Family::Realize { r: 4, d: 2 }.prediction().unwrap();
        assert_eq!((pred.reg, pred.deg_h), (Some(4), Some(2)));
        assert_eq!(pred.series, Some(s_(&[1, 8, 7], 4)));
        assert_eq!(realize(3, 5).unwrap(), complete_bipartite(3, 3).unwrap().disjoint_union(&matching_graph(2).unwrap()).unwrap());
        assert!(realize(0, 2).is_err());
    }

    #[test]
    fn family_predictions_hold() {
        let settings = Settings { desk_cap: 12, ..Settings::default() };
        let families = [
            Family::Kdd { d: 1 },
            Family::Kdd { d: 3 },
            Family::Star { n: 9 },
            Family::Matching { m: 3 },
            Family::Ribbon,
            Family::GFamily { r: 3 },
            Family::Realize { r: 3, d: 3 },
            Family::Realize { r: 3, d: 2 },
        ];
        for fam in families {
            let g = fam.build().unwrap();
            let pred = fam.prediction().unwrap();
            let check = check_prediction(&g, &pred, &settings).unwrap();
            assert!(check.passed(), "{fam}: {check:?}");
        }
        let star = Family::Star { n: 9 }.prediction().unwrap();
        assert_eq!((star.deg_h, star.reg), (Some(8), Some(1)));
        let m3 = Family::Matching { m: 3 }.prediction().unwrap();
        assert_eq!(m3.series, Some(s_(&[1, 3, 3, 1], 3)));
        let k33 = Family::Kdd { d: 3 }.prediction().unwrap();
        assert_eq!(k33.series, Some(s_(&[1, 3, -3, 1], 3)));
    }

    #[test]
    fn cone_lemma_hypotheses() {
        let settings = Settings::default();
        let two = matching_graph(2).unwrap();
        let all = cone_applicable(&two, two.vertices(), &settings).unwrap();
        assert!(all.applicable(), "{all:?}");
        assert_eq!((all.dim, all.reg, all.h.clone()), (2, 2, p(&[1, 2, 1])));
        let three = cone_applicable(&two, VertexSet::from_iter([0, 1, 2]), &settings).unwrap();
        assert!(!three.cardinality_ok && !three.applicable());
        let k2 = matching_graph(1).unwrap();
        let k2r = cone_applicable(&k2, k2.vertices(), &settings).unwrap();
        assert!(!k2r.dim_ok);
        assert!(cone_applicable(&k2, VertexSet::from_iter([5]), &settings).is_err());
    }

    #[test]
    fn stated_hypotheses_alone_are_not_enough() {
        let settings = Settings::default();
        let edges = [(0, 3), (0, 5), (1, 3), (1, 4), (2, 3), (2, 5), (3, 5), (3, 6)];
        let g = Graph::from_edge_list(7, &edges).unwrap();
        let s = VertexSet::from_iter([0, 1, 4, 5, 6]);
        let report = cone_applicable(&g, s, &settings).unwrap();
        assert!(report.stated_hypotheses());
        assert!(!report.complement_independent && !report.applicable());
        assert_eq!(report.h, p(&[1, 3, -2]));
        let predicted = cone_predict(&report.h, report.dim).unwrap().series;
        let actual = invariants::hilbert_series(&g.cone_over_subset(s).unwrap()).unwrap();
        assert_eq!(predicted, s_(&[1, 4, -3], 4));
        assert_eq!(actual, s_(&[1, 4, -3, -1, 1], 4));
    }

    #[test]
    fn cone_lemma_predictions() {
        assert_eq!(cone_predict(&p(&[1, 2, 1]), 2).unwrap().series, s_(&[1, 3], 2));
        assert_eq!(cone_predict(&p(&[1, 4, 3]), 3).unwrap().series, s_(&[1, 5, 2], 3));
        for r in 3..8 {
            let half = 1i64 << (r - 1);
            let got = cone_predict(&p(&[1, half, half - 1]), r).unwrap();
            assert_eq!(got.series, s_(&[1, half + 1, half - 2], r));
        }
        let edge = cone_predict(&p(&[1, 3]), 2).unwrap();
        assert!(edge.outside_regime);
        assert_eq!(edge.series.numerator(), &p(&[1, 4, -1]));
        assert!(cone_predict(&p(&[2, 1]), 2).is_err());
        assert!(cone_predict(&p(&[1, 1, 1, 1]), 2).is_err());
    }
}
