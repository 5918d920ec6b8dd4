//! Invariants of `R/I(G)` for the edge ideal of a graph: f-vector, Hilbert
//! series, h-polynomial, graded Betti numbers (via Hochster's formula),
//! regularity, projective dimension, depth, and the inequalities relating
//! them.
//!
//! Betti numbers are indexed by the minimal free resolution of `R/I(G)`, so
//! `β_{0,0} = 1` and `reg = max{ j - i : β_{i,j} ≠ 0 }`.

mod hochster;
mod matching;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::Field;
use crate::poly::{IntPolynomial, RationalSeries};

pub use matching::{independence_number, matching_number, maximum_matching};

/// Default limit on `n` for anything that visits all 2^n vertex subsets.
pub const DEFAULT_DESK_CAP: usize = 12;

/// Coefficient field and size limit for the homology scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub field: Field,
    pub desk_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { field: Field::Gf2, desk_cap: DEFAULT_DESK_CAP }
    }
}

impl Settings {
    pub fn with_field(field: Field) -> Self {
        Settings { field, ..Settings::default() }
    }

    /// Refuses graphs above the desk cap for the 2^n subset scan.
    pub fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.desk_cap {
            return Err(Error::CapExceeded { n, cap: self.desk_cap });
        }
        Ok(())
    }
}

/// `f_{-1}, f_0, ..., f_{α-1}`: the number of independent sets of each size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// The independence number: the largest independent set size.
    pub fn alpha(&self) -> usize {
        self.0.len() - 1
    }
}

/// Counts independent sets by size through the recursion
/// `I(G) = I(G - v) + t·I(G - N[v])`, memoized on the vertex mask.
pub fn f_vector(g: &Graph) -> Result<FVector> {
    fn count(adj: &[u64], mask: u64, memo: &mut HashMap<u64, Vec<u64>>) -> Result<Vec<u64>> {
        if mask == 0 {
            return Ok(vec![1]);
        }
        if let Some(hit) = memo.get(&mask) {
            return Ok(hit.clone());
        }
        let mut best = None;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & mask).count_ones();
            if best.is_none_or(|(_, bd)| d > bd) {
                best = Some((v, d));
            }
        }
        let (v, _) = best.expect("mask is nonempty");
        let without = count(adj, mask & !(1 << v), memo)?;
        let with = count(adj, mask & !(1 << v) & !adj[v], memo)?;
        let mut out = without;
        if out.len() < with.len() + 1 {
            out.resize(with.len() + 1, 0);
        }
        for (k, c) in with.into_iter().enumerate() {
            out[k + 1] = out[k + 1].checked_add(c).ok_or(Error::Overflow("f-vector"))?;
        }
        memo.insert(mask, out.clone());
        Ok(out)
    }
    let mut memo = HashMap::new();
    count(g.adjacency(), g.vertices().bits(), &mut memo).map(FVector)
}

/// Independence number α(G).
pub fn alpha(g: &Graph) -> usize {
    independence_number(g)
}

/// Vertex cover number β(G) = n - α(G).
pub fn cover_number(g: &Graph) -> usize {
    g.vertex_count() - alpha(g)
}

/// `H(t) = Σ_i f_{i-1} t^i / (1 - t)^i`, in lowest terms over `(1 - t)^α`.
pub fn hilbert_series(g: &Graph) -> Result<RationalSeries> {
    hilbert_series_from_f_vector(&f_vector(g)?)
}

fn hilbert_series_from_f_vector(f: &FVector) -> Result<RationalSeries> {
    let alpha = f.alpha();
    let mut num = IntPolynomial::zero();
    for (i, &count) in f.counts().iter().enumerate() {
        let c = i64::try_from(count).map_err(|_| Error::Overflow("Hilbert series"))?;
        let term = IntPolynomial::monomial(c, i).mul(&IntPolynomial::one_minus_t_pow(alpha - i)?)?;
        num = num.add(&term)?;
    }
    // Only the i = α term survives at t = 1, so nothing cancels.
    let top = *f.counts().last().expect("f_{-1} is always present") as i64;
    assert_eq!(num.eval_at_one()?, top, "numerator must evaluate to f_(alpha-1)");
    let series = RationalSeries::new(num, alpha)?;
    debug_assert_eq!(series.denom_exp(), alpha);
    Ok(series)
}

/// The numerator of the Hilbert series in lowest terms.
pub fn h_polynomial(g: &Graph) -> Result<IntPolynomial> {
    Ok(hilbert_series(g)?.numerator().clone())
}

pub fn deg_h(g: &Graph) -> Result<usize> {
    Ok(h_polynomial(g)?.degree().unwrap_or(0))
}

/// Graded Betti numbers of `R/I(G)`: `(i, j) → β_{i,j}`, zero entries
/// omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        BettiTable { entries: entries.into_iter().filter(|&(_, b)| b != 0).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    /// Largest homological index with a nonzero entry.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Each `i >= 1` has nonzero entries in at most one degree `j`.
    pub fn is_pure(&self) -> bool {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        self.entries.keys().filter(|&&(i, _)| i >= 1).all(|&(i, j)| *seen.entry(i).or_insert(j) == j)
    }
}

impl fmt::Display for BettiTable {
    /// Rows indexed by `j - i`, columns by `i`, blanks for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (pd, reg) = (self.proj_dim(), self.regularity());
        write!(f, "{:>4}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>5}")?;
        }
        for row in 0..=reg {
            write!(f, "\n{row:>3}:")?;
            for i in 0..=pd {
                match self.get(i, i + row) {
                    0 => write!(f, " {:>5}", ".")?,
                    b => write!(f, " {b:>5}")?,
                }
            }
        }
        Ok(())
    }
}

impl Serialize for BettiTable {
    /// A list of `[i, j, β_{i,j}]` triples.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (&(i, j), &b) in &self.entries {
            seq.serialize_element(&(i, j, b))?;
        }
        seq.end()
    }
}

/// Betti numbers from the homology of every induced independence complex.
pub fn betti_table(g: &Graph, settings: &Settings) -> Result<BettiTable> {
    settings.check_cap(g.vertex_count())?;
    Ok(BettiTable { entries: hochster::betti_entries(g, settings.field, true)? })
}

/// Castelnuovo–Mumford regularity from the subset scan, without building the
/// Betti table.
pub fn regularity(g: &Graph, settings: &Settings) -> Result<usize> {
    settings.check_cap(g.vertex_count())?;
    hochster::regularity_scan(g, settings.field, true)
}

pub fn proj_dim(g: &Graph, settings: &Settings) -> Result<usize> {
    Ok(betti_table(g, settings)?.proj_dim())
}

/// Auslander–Buchsbaum: `depth = n - projdim`.
pub fn depth(g: &Graph, settings: &Settings) -> Result<usize> {
    Ok(g.vertex_count() - proj_dim(g, settings)?)
}

/// `H(t) = Σ_{i,j} (-1)^i β_{i,j} t^j / (1 - t)^n`, in lowest terms.
pub fn hilbert_from_betti(bt: &BettiTable, n: usize) -> Result<RationalSeries> {
    let mut num = IntPolynomial::zero();
    for (&(i, j), &b) in bt.entries() {
        let b = i64::try_from(b).map_err(|_| Error::Overflow("Betti numbers"))?;
        num = num.add(&IntPolynomial::monomial(if i % 2 == 0 { b } else { -b }, j))?;
    }
    RationalSeries::new(num, n)
}

/// Which of the known inequalities hold for one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundFlags {
    /// `deg h + reg <= n`.
    pub sum_bound: bool,
    /// `reg <= α′`.
    pub reg_le_matching: bool,
    /// `α′ <= β`.
    pub matching_le_cover: bool,
    /// `deg h <= n - β`.
    pub deg_h_le_n_minus_cover: bool,
    /// `deg h <= α`.
    pub deg_h_le_alpha: bool,
    /// `reg <= ⌊n/2⌋`.
    pub reg_le_half_n: bool,
}

impl BoundFlags {
    pub fn all(&self) -> bool {
        self.violations().is_empty()
    }

    fn rows(&self, v: &Profile) -> [(&'static str, bool, usize, usize); 6] {
        [
            ("deg h + reg <= n", self.sum_bound, v.deg_h + v.reg, v.n),
            ("reg <= matching number", self.reg_le_matching, v.reg, v.alpha_prime),
            ("matching number <= cover number", self.matching_le_cover, v.alpha_prime, v.cover),
            ("deg h <= n - cover number", self.deg_h_le_n_minus_cover, v.deg_h, v.n - v.cover),
            ("deg h <= alpha", self.deg_h_le_alpha, v.deg_h, v.alpha),
            ("reg <= floor(n/2)", self.reg_le_half_n, v.reg, v.n / 2),
        ]
    }

    /// Names of the inequalities that fail.
    pub fn violations(&self) -> Vec<&'static str> {
        let fields = [
            ("sumBound", self.sum_bound),
            ("regLeMatching", self.reg_le_matching),
            ("matchingLeCover", self.matching_le_cover),
            ("degHLeNMinusCover", self.deg_h_le_n_minus_cover),
            ("degHLeAlpha", self.deg_h_le_alpha),
            ("regLeHalfN", self.reg_le_half_n),
        ];
        fields.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect()
    }
}

/// The numbers the bound checks need.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Profile {
    pub n: usize,
    pub alpha: usize,
    pub alpha_prime: usize,
    pub cover: usize,
    pub deg_h: usize,
    pub reg: usize,
}

impl Profile {
    /// Regularity by the subset scan plus the cheap invariants.
    pub fn compute(g: &Graph, settings: &Settings) -> Result<Self> {
        let n = g.vertex_count();
        let a = alpha(g);
        Ok(Profile {
            n,
            alpha: a,
            alpha_prime: matching_number(g),
            cover: n - a,
            deg_h: deg_h(g)?,
            reg: regularity(g, settings)?,
        })
    }

    pub fn bounds(&self) -> BoundFlags {
        BoundFlags {
            sum_bound: self.deg_h + self.reg <= self.n,
            reg_le_matching: self.reg <= self.alpha_prime,
            matching_le_cover: self.alpha_prime <= self.cover,
            deg_h_le_n_minus_cover: self.deg_h <= self.n - self.cover,
            deg_h_le_alpha: self.deg_h <= self.alpha,
            reg_le_half_n: self.reg <= self.n / 2,
        }
    }

    /// `Ok` when every inequality holds, otherwise the first violation.
    pub fn enforce_bounds(&self, g: &Graph) -> Result<BoundFlags> {
        let flags = self.bounds();
        for (bound, ok, lhs, rhs) in flags.rows(self) {
            if !ok {
                return Err(Error::BoundViolation {
                    bound,
                    graph6: g.to_graph6(),
                    lhs: lhs as i64,
                    rhs: rhs as i64,
                });
            }
        }
        Ok(flags)
    }
}

/// Evaluates every inequality; a failure is an error since each is a
/// theorem.
pub fn check_bounds(g: &Graph, settings: &Settings) -> Result<BoundFlags> {
    Profile::compute(g, settings)?.enforce_bounds(g)
}

/// Everything about one graph, as printed by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantReport {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub alpha: usize,
    pub alpha_prime: usize,
    pub cover: usize,
    pub dim: usize,
    pub h_poly: IntPolynomial,
    pub deg_h: usize,
    pub reg: usize,
    pub proj_dim: usize,
    pub depth: usize,
    pub field: Field,
    pub bounds_ok: BoundFlags,
    #[serde(skip)]
    pub betti: BettiTable,
    #[serde(skip)]
    pub hilbert: RationalSeries,
}

impl InvariantReport {
    /// Computes every invariant. Bound violations are reported in
    /// `bounds_ok`, not raised; see [`InvariantReport::enforce_bounds`].
    pub fn compute(g: &Graph, settings: &Settings) -> Result<Self> {
        let n = g.vertex_count();
        let hilbert = hilbert_series(g)?;
        let betti = betti_table(g, settings)?;
        let a = alpha(g);
        let profile = Profile {
            n,
            alpha: a,
            alpha_prime: matching_number(g),
            cover: n - a,
            deg_h: hilbert.numerator().degree().unwrap_or(0),
            reg: betti.regularity(),
        };
        let proj_dim = betti.proj_dim();
        Ok(InvariantReport {
            graph6: g.to_graph6(),
            n,
            edges: g.edge_count(),
            alpha: a,
            alpha_prime: profile.alpha_prime,
            cover: profile.cover,
            dim: hilbert.denom_exp(),
            h_poly: hilbert.numerator().clone(),
            deg_h: profile.deg_h,
            reg: profile.reg,
            proj_dim,
            depth: n - proj_dim,
            field: settings.field,
            bounds_ok: profile.bounds(),
            betti,
            hilbert,
        })
    }

    pub fn profile(&self) -> Profile {
        Profile {
            n: self.n,
            alpha: self.alpha,
            alpha_prime: self.alpha_prime,
            cover: self.cover,
            deg_h: self.deg_h,
            reg: self.reg,
        }
    }

    pub fn enforce_bounds(&self, g: &Graph) -> Result<BoundFlags> {
        self.profile().enforce_bounds(g)
    }
}

/// Outcome of the pure-resolution identity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PureVerdict {
    /// The resolution is pure and `deg h - reg = dim - depth` holds with this
    /// common value.
    Holds(i64),
    /// Not pure; nothing to check.
    NotPure,
}

/// For a pure resolution, checks `deg h - reg = dim - depth`.
pub fn pure_resolution_check(bt: &BettiTable, report: &InvariantReport) -> Result<PureVerdict> {
    if !bt.is_pure() {
        return Ok(PureVerdict::NotPure);
    }
    let lhs = report.deg_h as i64 - report.reg as i64;
    let rhs = report.dim as i64 - report.depth as i64;
    if lhs != rhs {
        return Err(Error::PureResolutionViolation { graph6: report.graph6.clone(), lhs, rhs });
    }
    Ok(PureVerdict::Holds(lhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::independence_faces;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn c4() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    fn two_edges() -> Graph {
        g(4, &[(0, 1), (2, 3)])
    }

    fn ribbon() -> Graph {
        g(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
    }

    fn star(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|v| (0, v)).collect();
        g(n, &e)
    }

    fn kdd(d: usize) -> Graph {
        let e: Vec<_> = (0..d).flat_map(|i| (d..2 * d).map(move |j| (i, j))).collect();
        g(2 * d, &e)
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    fn table(entries: &[((usize, usize), u64)]) -> BettiTable {
        BettiTable::from_entries(entries.iter().copied())
    }

    #[test]
    fn f_vectors() {
        assert_eq!(f_vector(&c4()).unwrap().counts(), &[1, 4, 2]);
        assert_eq!(f_vector(&two_edges()).unwrap().counts(), &[1, 4, 4]);
        assert_eq!(f_vector(&Graph::empty(3).unwrap()).unwrap().counts(), &[1, 3, 3, 1]);
        assert_eq!(f_vector(&Graph::empty(0).unwrap()).unwrap().counts(), &[1]);
        // Large edgeless graphs are instant thanks to the memo.
        let f = f_vector(&Graph::empty(40).unwrap()).unwrap();
        assert_eq!(f.counts()[20], 137_846_528_820);
    }

    #[test]
    fn f_vector_agrees_with_face_enumeration() {
        for graph in [c4(), two_edges(), ribbon(), star(6), kdd(3)] {
            assert_eq!(f_vector(&graph).unwrap().counts(), independence_faces(&graph).counts());
        }
    }

    #[test]
    fn independence_cover_matching() {
        assert_eq!((alpha(&c4()), cover_number(&c4()), matching_number(&c4())), (2, 2, 2));
        let s = star(9);
        assert_eq!((alpha(&s), cover_number(&s), matching_number(&s)), (8, 1, 1));
        let k2 = g(2, &[(0, 1)]);
        assert_eq!((alpha(&k2), cover_number(&k2), matching_number(&k2)), (1, 1, 1));
    }

    #[test]
    fn hilbert_series_examples() {
        let k33 = hilbert_series(&kdd(3)).unwrap();
        assert_eq!((k33.numerator(), k33.denom_exp()), (&p(&[1, 3, -3, 1]), 3));
        let r = hilbert_series(&ribbon()).unwrap();
        assert_eq!((r.numerator(), r.denom_exp()), (&p(&[1, 3]), 2));
        let e = hilbert_series(&Graph::empty(5).unwrap()).unwrap();
        assert_eq!((e.numerator(), e.denom_exp()), (&p(&[1]), 5));
        assert_eq!(hilbert_series(&Graph::empty(0).unwrap()).unwrap(), RationalSeries::one());
    }

    #[test]
    fn h_polynomials() {
        assert_eq!(deg_h(&kdd(4)).unwrap(), 4);
        assert_eq!(h_polynomial(&two_edges()).unwrap(), p(&[1, 2, 1]));
        let three = g(6, &[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(h_polynomial(&three).unwrap(), p(&[1, 3, 3, 1]));
        assert_eq!(deg_h(&Graph::empty(0).unwrap()).unwrap(), 0);
    }

    #[test]
    fn betti_tables() {
        let s = Settings::default();
        let k2 = g(2, &[(0, 1)]);
        assert_eq!(betti_table(&k2, &s).unwrap(), table(&[((0, 0), 1), ((1, 2), 1)]));
        // (1 + 2t - t^2)(1 - t)^2 = 1 - 4t^2 + 4t^3 - t^4
        assert_eq!(
            betti_table(&c4(), &s).unwrap(),
            table(&[((0, 0), 1), ((1, 2), 4), ((2, 3), 4), ((3, 4), 1)])
        );
        assert_eq!(
            betti_table(&two_edges(), &s).unwrap(),
            table(&[((0, 0), 1), ((1, 2), 2), ((2, 4), 1)])
        );
        assert_eq!(betti_table(&Graph::empty(3).unwrap(), &s).unwrap(), table(&[((0, 0), 1)]));
    }

    #[test]
    fn cone_shortcut_changes_nothing() {
        for graph in [c4(), ribbon(), star(5), kdd(3), g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])] {
            for field in [Field::Gf2, Field::Rational] {
                assert_eq!(
                    hochster::betti_entries(&graph, field, true).unwrap(),
                    hochster::betti_entries(&graph, field, false).unwrap()
                );
            }
        }
    }

    #[test]
    fn regularity_examples() {
        let s = Settings::default();
        for d in 1..=5 {
            assert_eq!(regularity(&kdd(d), &s).unwrap(), 1, "K_{{{d},{d}}}");
        }
        assert_eq!(regularity(&ribbon(), &s).unwrap(), 2);
        assert_eq!(regularity(&Graph::empty(4).unwrap(), &s).unwrap(), 0);
        assert_eq!(regularity(&Graph::empty(0).unwrap(), &s).unwrap(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        let s = Settings { desk_cap: 4, ..Settings::default() };
        assert_eq!(regularity(&ribbon(), &s), Err(Error::CapExceeded { n: 5, cap: 4 }));
        assert!(betti_table(&ribbon(), &s).is_err());
        assert!(hilbert_series(&ribbon()).is_ok());
    }

    #[test]
    fn projective_dimension_and_depth() {
        let s = Settings::default();
        assert_eq!((proj_dim(&two_edges(), &s).unwrap(), depth(&two_edges(), &s).unwrap()), (2, 2));
        let report = InvariantReport::compute(&star(4), &s).unwrap();
        assert_eq!((report.dim, report.depth), (3, 1));
        let e = Graph::empty(5).unwrap();
        assert_eq!((proj_dim(&e, &s).unwrap(), depth(&e, &s).unwrap()), (0, 5));
    }

    #[test]
    fn hilbert_series_from_betti_numbers() {
        let c4_table = table(&[((0, 0), 1), ((1, 2), 4), ((2, 3), 4), ((3, 4), 1)]);
        assert_eq!(hilbert_from_betti(&c4_table, 4).unwrap(), RationalSeries::new(p(&[1, 2, -1]), 2).unwrap());
        let k2_table = table(&[((0, 0), 1), ((1, 2), 1)]);
        assert_eq!(hilbert_from_betti(&k2_table, 2).unwrap(), RationalSeries::new(p(&[1, 1]), 1).unwrap());
        let koszul = table(&[((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]);
        assert_eq!(hilbert_from_betti(&koszul, 4).unwrap(), RationalSeries::new(p(&[1, 2, 1]), 2).unwrap());
    }

    #[test]
    fn bound_checks() {
        let s = Settings::default();
        let st = Profile::compute(&star(9), &s).unwrap();
        assert_eq!((st.deg_h, st.reg), (8, 1));
        assert!(check_bounds(&star(9), &s).unwrap().all());
        let four = g(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]);
        let m = Profile::compute(&four, &s).unwrap();
        assert_eq!(m.deg_h + m.reg, 8);
        let c = Profile::compute(&c4(), &s).unwrap();
        assert_eq!((c.reg, c.deg_h), (1, 2));
        assert!(c.bounds().all());
    }

    #[test]
    fn violated_bound_is_an_error() {
        let fake = Profile { n: 4, alpha: 2, alpha_prime: 2, cover: 2, deg_h: 2, reg: 3 };
        let flags = fake.bounds();
        assert_eq!(flags.violations(), vec!["sumBound", "regLeMatching", "regLeHalfN"]);
        match fake.enforce_bounds(&c4()) {
            Err(Error::BoundViolation { graph6, lhs, rhs, .. }) => {
                assert_eq!((graph6.as_str(), lhs, rhs), ("Cl", 5, 4));
            }
            other => panic!("expected a violation, got {other:?}"),
        }
    }

    #[test]
    fn pure_resolutions() {
        let s = Settings::default();
        for m in 1..=3 {
            let e: Vec<_> = (0..m).map(|k| (2 * k, 2 * k + 1)).collect();
            let graph = g(2 * m, &e);
            let report = InvariantReport::compute(&graph, &s).unwrap();
            assert_eq!(pure_resolution_check(&report.betti, &report).unwrap(), PureVerdict::Holds(0));
        }
        let report = InvariantReport::compute(&c4(), &s).unwrap();
        assert_eq!(pure_resolution_check(&report.betti, &report).unwrap(), PureVerdict::Holds(1));
        // The ribbon's table: 1; 6 edges in (1,2); ...; not pure.
        let report = InvariantReport::compute(&ribbon(), &s).unwrap();
        assert_eq!(pure_resolution_check(&report.betti, &report).unwrap(), PureVerdict::NotPure);

        let mut broken = InvariantReport::compute(&c4(), &s).unwrap();
        broken.depth = 2;
        assert!(matches!(
            pure_resolution_check(&broken.betti.clone(), &broken),
            Err(Error::PureResolutionViolation { .. })
        ));
    }

    #[test]
    fn report_json_shape() {
        let report = InvariantReport::compute(&ribbon(), &Settings::default()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
        for key in [
            "n", "edges", "alpha", "alphaPrime", "cover", "dim", "hPoly", "degH", "reg", "projDim",
            "depth", "field", "boundsOk",
        ] {
            assert!(keys.contains(&key), "missing {key}");
        }
        assert_eq!(json["hPoly"], "1 + 3*t");
        assert_eq!(json["field"], "GF(2)");
        assert_eq!(json["reg"], 2);
        assert_eq!(json["boundsOk"]["sumBound"], true);
    }
}
