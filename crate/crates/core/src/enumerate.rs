//! Isomorph-free generation of graphs and the `(reg, deg h)` scan over them.
//!
//! Generation grows graphs one vertex at a time. A candidate `G = P + v` is
//! kept when deleting the vertex at canonical position 0 gives back a graph
//! isomorphic to `P`; isomorphic candidates from the same parent are merged
//! by canonical code. Every class then has exactly one parent.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::canon::{self, canonical_form};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::homology::Field;
use crate::invariants::{self, InvariantReport, Profile, Settings};
use crate::poly::RationalSeries;

/// Largest `n` accepted by the generator.
pub const MAX_GENERATE: usize = 10;

fn check_generate_cap(n: usize) -> Result<()> {
    if n > MAX_GENERATE {
        return Err(Error::CapExceeded { n, cap: MAX_GENERATE });
    }
    Ok(())
}

/// Canonical children of a canonical parent graph, in a deterministic order.
fn children(parent: &Graph, parent_code: u128) -> Result<Vec<Graph>> {
    let m = parent.vertex_count();
    let padj = parent.adjacency();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut adj = vec![0u64; m + 1];
    for s in 0u64..1 << m {
        let deg_new = s.count_ones();
        // The deleted vertex is drawn from the minimum-degree class.
        let mut too_high = false;
        for u in 0..m {
            let bit = (s >> u) & 1;
            adj[u] = padj[u] | bit << m;
            if padj[u].count_ones() + bit as u32 > deg_new {
                continue;
            }
            if padj[u].count_ones() + (bit as u32) < deg_new {
                too_high = true;
                break;
            }
        }
        if too_high {
            continue;
        }
        adj[m] = s;
        let child = Graph::from_adjacency(adj.clone())?;
        let form = canonical_form(&child)?;
        let c = form.lab[0];
        let accept = c == m || {
            let rest = child.vertices().difference(VertexSet::from_iter([c]));
            canon::canonical_code(&child.induced_subgraph(rest)?)? == parent_code
        };
        if accept && seen.insert(form.code) {
            out.push(form.graph(&child));
        }
    }
    Ok(out)
}

fn next_level(parents: &[Graph]) -> Result<Vec<Graph>> {
    let expand = |p: &Graph| -> Result<Vec<Graph>> { children(p, canon::canonical_code(p)?) };
    #[cfg(feature = "parallel")]
    let levels: Vec<Vec<Graph>> = {
        use rayon::prelude::*;
        parents.par_iter().map(expand).collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let levels: Vec<Vec<Graph>> = parents.iter().map(expand).collect::<Result<_>>()?;
    Ok(levels.into_iter().flatten().collect())
}

/// One canonical representative of every isomorphism class of graphs on `n`
/// vertices.
pub fn generate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    check_generate_cap(n)?;
    let mut level = vec![Graph::empty(0)?];
    for _ in 0..n {
        level = next_level(&level)?;
    }
    Ok(level)
}

/// Calls `visit` on every class of graphs on `n` vertices without holding
/// the last level in memory.
pub fn for_each_nonisomorphic(n: usize, mut visit: impl FnMut(&Graph) -> Result<()>) -> Result<()> {
    if n == 0 {
        return visit(&Graph::empty(0)?);
    }
    let parents = generate_nonisomorphic(n - 1)?;
    for p in &parents {
        for g in children(p, canon::canonical_code(p)?)? {
            visit(&g)?;
        }
    }
    Ok(())
}

/// Reads one graph6 string per line. Blank lines and an optional
/// `>>graph6<<` header are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = Graph::from_graph6(line).map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })?;
        out.push(g);
    }
    Ok(out)
}

/// One row of a realizability table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub r: usize,
    pub d: usize,
    pub count: u64,
    pub witness: String,
}

/// Histogram of `(reg, deg h)` over a set of graphs, with the smallest
/// graph6 string attaining each pair as witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RealizabilityTable {
    /// Largest vertex count seen.
    pub n: usize,
    pub field: Field,
    pub connected_only: bool,
    pub total_graphs: u64,
    pub counts: BTreeMap<(usize, usize), u64>,
    pub witnesses: BTreeMap<(usize, usize), String>,
}

impl RealizabilityTable {
    fn empty(field: Field, connected_only: bool) -> Self {
        RealizabilityTable { field, connected_only, ..Self::default() }
    }

    fn record(&mut self, n: usize, key: (usize, usize), graph6: String) {
        self.n = self.n.max(n);
        self.total_graphs += 1;
        *self.counts.entry(key).or_insert(0) += 1;
        match self.witnesses.get(&key) {
            Some(w) if *w <= graph6 => {}
            _ => {
                self.witnesses.insert(key, graph6);
            }
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.n = self.n.max(other.n);
        self.total_graphs += other.total_graphs;
        for (k, c) in other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
        for (k, w) in other.witnesses {
            match self.witnesses.get(&k) {
                Some(mine) if *mine <= w => {}
                _ => {
                    self.witnesses.insert(k, w);
                }
            }
        }
        self
    }

    pub fn rows(&self) -> Vec<TableRow> {
        self.counts
            .iter()
            .map(|(&(r, d), &count)| TableRow { r, d, count, witness: self.witnesses[&(r, d)].clone() })
            .collect()
    }

    pub fn contains(&self, r: usize, d: usize) -> bool {
        self.counts.contains_key(&(r, d))
    }

    /// Keys violating `r + d <= n` or `r <= n / 2` among graphs with an edge.
    pub fn bound_violations(&self) -> Vec<(usize, usize)> {
        self.counts
            .keys()
            .copied()
            .filter(|&(r, d)| r > 0 && (r + d > self.n || r > self.n / 2))
            .collect()
    }

    /// Tab-separated rows under the header `r d count witness_graph6`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("r\td\tcount\twitness_graph6\n");
        for row in self.rows() {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", row.r, row.d, row.count, row.witness));
        }
        out
    }
}

impl Serialize for RealizabilityTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(rename_all = "camelCase")]
        struct Wire<'a> {
            n: usize,
            field: &'a Field,
            connected_only: bool,
            total_graphs: u64,
            rows: Vec<TableRow>,
        }
        Wire {
            n: self.n,
            field: &self.field,
            connected_only: self.connected_only,
            total_graphs: self.total_graphs,
            rows: self.rows(),
        }
        .serialize(s)
    }
}

/// Knobs for [`scan`] and [`scan_graphs`].
#[derive(Clone, Debug)]
#[derive(Default)]
pub struct ScanOptions {
    pub settings: Settings,
    /// Thread count; `None` uses the global pool.
    pub workers: Option<usize>,
    pub connected_only: bool,
}


fn profile_of(g: &Graph, settings: &Settings) -> Result<(usize, usize)> {
    let profile = Profile::compute(g, settings)?;
    profile.enforce_bounds(g)?;
    Ok((profile.reg, profile.deg_h))
}

fn fold_graph(table: &mut RealizabilityTable, g: &Graph, opts: &ScanOptions) -> Result<()> {
    if opts.connected_only && !g.is_connected() {
        return Ok(());
    }
    let key = profile_of(g, &opts.settings)?;
    table.record(g.vertex_count(), key, g.to_graph6());
    Ok(())
}

#[cfg(feature = "parallel")]
fn with_workers<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(0) => Err(Error::InvalidParameter("workers must be at least 1".into())),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

/// `(reg, deg h)` of every graph on `n` vertices up to isomorphism. Every
/// graph is also checked against the proven bounds; a violation aborts the
/// scan with the offending graph. `progress` receives `(parents done,
/// parents total)`.
pub fn scan(n: usize, opts: &ScanOptions, progress: &(dyn Fn(usize, usize) + Sync)) -> Result<RealizabilityTable> {
    check_generate_cap(n)?;
    opts.settings.check_cap(n)?;
    let parents = if n == 0 { Vec::new() } else { generate_nonisomorphic(n - 1)? };
    let total = parents.len();
    let expand = |p: &Graph| -> Result<RealizabilityTable> {
        let mut table = RealizabilityTable::empty(opts.settings.field, opts.connected_only);
        for g in children(p, canon::canonical_code(p)?)? {
            fold_graph(&mut table, &g, opts)?;
        }
        Ok(table)
    };
    if n == 0 {
        let mut table = RealizabilityTable::empty(opts.settings.field, opts.connected_only);
        fold_graph(&mut table, &Graph::empty(0)?, opts)?;
        return Ok(table);
    }
    let empty = || RealizabilityTable::empty(opts.settings.field, opts.connected_only);

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        use std::sync::atomic::{AtomicUsize, Ordering};
        let done = AtomicUsize::new(0);
        with_workers(opts.workers, || {
            parents
                .par_iter()
                .map(|p| {
                    let t = expand(p);
                    progress(done.fetch_add(1, Ordering::Relaxed) + 1, total);
                    t
                })
                .try_reduce(empty, |a, b| Ok(a.merge(b)))
        })?
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut table = empty();
        for (i, p) in parents.iter().enumerate() {
            table = table.merge(expand(p)?);
            progress(i + 1, total);
        }
        Ok(table)
    }
}

/// The same histogram over an explicit list of graphs.
pub fn scan_graphs(graphs: &[Graph], opts: &ScanOptions) -> Result<RealizabilityTable> {
    for g in graphs {
        opts.settings.check_cap(g.vertex_count())?;
    }
    let empty = || RealizabilityTable::empty(opts.settings.field, opts.connected_only);
    let one = |g: &Graph| -> Result<RealizabilityTable> {
        let mut t = empty();
        fold_graph(&mut t, g, opts)?;
        Ok(t)
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        with_workers(opts.workers, || graphs.par_iter().map(one).try_reduce(empty, |a, b| Ok(a.merge(b))))?
    }
    #[cfg(not(feature = "parallel"))]
    graphs.iter().map(one).try_fold(empty(), |a, b| Ok(a.merge(b?)))
}

/// A corpus check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `reg <= α′ <= cover`.
    RegBound,
    /// `reg + deg h <= n`.
    SumBound,
    /// The Betti table reproduces the f-vector Hilbert series.
    HochsterHilbert,
    /// `reg` and `deg h` add, and Hilbert series multiply, over components.
    LemmaAdditivity,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::RegBound, Check::SumBound, Check::HochsterHilbert, Check::LemmaAdditivity];

    pub fn name(self) -> &'static str {
        match self {
            Check::RegBound => "reg-bound",
            Check::SumBound => "sum-bound",
            Check::HochsterHilbert => "hochster-hilbert",
            Check::LemmaAdditivity => "lemma-additivity",
        }
    }
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphVerdict {
    pub report: InvariantReport,
    /// Names of the selected checks that failed.
    pub failed: Vec<&'static str>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckTally {
    pub passed: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub graphs: Vec<GraphVerdict>,
    pub checks: BTreeMap<&'static str, CheckTally>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|t| t.failed == 0)
    }
}

fn component_additivity(g: &Graph, report: &InvariantReport, settings: &Settings) -> Result<bool> {
    let mut reg = 0;
    let mut deg_h = 0;
    let mut series = RationalSeries::one();
    for comp in g.connected_components() {
        let part = g.induced_subgraph(comp)?;
        let s = invariants::hilbert_series(&part)?;
        deg_h += s.numerator().degree().unwrap_or(0);
        series = series.mul(&s)?;
        reg += invariants::regularity(&part, settings)?;
    }
    Ok(reg == report.reg && deg_h == report.deg_h && series == report.hilbert)
}

fn verify_one(g: &Graph, settings: &Settings, checks: &[Check]) -> Result<GraphVerdict> {
    let report = InvariantReport::compute(g, settings)?;
    let mut failed = Vec::new();
    for &check in checks {
        let ok = match check {
            Check::RegBound => report.bounds_ok.reg_le_matching && report.bounds_ok.matching_le_cover,
            Check::SumBound => report.bounds_ok.sum_bound,
            Check::HochsterHilbert => invariants::hilbert_from_betti(&report.betti, report.n)? == report.hilbert,
            Check::LemmaAdditivity => component_additivity(g, &report, settings)?,
        };
        if !ok {
            failed.push(check.name());
        }
    }
    Ok(GraphVerdict { report, failed })
}

/// Full invariant reports for a corpus plus a pass/fail tally per check.
pub fn verify_corpus(graphs: &[Graph], settings: &Settings, checks: &[Check]) -> Result<CorpusReport> {
    for g in graphs {
        settings.check_cap(g.vertex_count())?;
    }
    #[cfg(feature = "parallel")]
    let verdicts: Vec<GraphVerdict> = {
        use rayon::prelude::*;
        graphs.par_iter().map(|g| verify_one(g, settings, checks)).collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let verdicts: Vec<GraphVerdict> = graphs.iter().map(|g| verify_one(g, settings, checks)).collect::<Result<_>>()?;
    let mut tally: BTreeMap<&'static str, CheckTally> =
        checks.iter().map(|c| (c.name(), CheckTally::default())).collect();
    for v in &verdicts {
        for c in checks {
            let t = tally.get_mut(c.name()).expect("tally has every check");
            if v.failed.contains(&c.name()) {
                t.failed += 1;
            } else {
                t.passed += 1;
            }
        }
    }
    Ok(CorpusReport { graphs: verdicts, checks: tally })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| generate_nonisomorphic(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
        assert!(generate_nonisomorphic(11).is_err());
    }

    #[test]
    fn generated_graphs_are_canonical_and_distinct() {
        let graphs = generate_nonisomorphic(6).unwrap();
        let mut codes = HashSet::new();
        for g in &graphs {
            assert_eq!(canon::canonical_graph(g).unwrap(), *g);
            assert!(codes.insert(canon::canonical_code(g).unwrap()));
        }
    }

    #[test]
    fn streaming_matches_materialized() {
        let mut streamed = Vec::new();
        for_each_nonisomorphic(5, |g| {
            streamed.push(g.clone());
            Ok(())
        })
        .unwrap();
        assert_eq!(streamed, generate_nonisomorphic(5).unwrap());
    }

    #[test]
    fn two_vertex_scan() {
        let t = scan(2, &ScanOptions::default(), &|_, _| {}).unwrap();
        assert_eq!(t.total_graphs, 2);
        assert_eq!(t.counts, BTreeMap::from([((0, 0), 1), ((1, 1), 1)]));
        assert_eq!(t.witnesses[&(1, 1)], "A_");
        assert_eq!(t.to_tsv(), "r\td\tcount\twitness_graph6\n0\t0\t1\tA?\n1\t1\t1\tA_\n");
    }

    #[test]
    fn scan_is_independent_of_worker_count() {
        let base = scan(6, &ScanOptions::default(), &|_, _| {}).unwrap();
        assert_eq!(base.counts.values().sum::<u64>(), 156);
        assert!(base.bound_violations().is_empty());
        for w in [1, 4, 8] {
            let opts = ScanOptions { workers: Some(w), ..ScanOptions::default() };
            assert_eq!(scan(6, &opts, &|_, _| {}).unwrap(), base);
        }
        let connected = ScanOptions { connected_only: true, ..ScanOptions::default() };
        assert_eq!(scan(6, &connected, &|_, _| {}).unwrap().total_graphs, 112);
    }

    #[test]
    fn corpus_parsing() {
        let gs = parse_graph6_lines(">>graph6<<C~\n\nA_\n").unwrap();
        assert_eq!(gs.len(), 2);
        match parse_graph6_lines("C~\nA_\n!!\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6_lines("").unwrap().is_empty());
    }

    #[test]
    fn corpus_of_realizations() {
        let mut graphs = Vec::new();
        for r in 1..=3 {
            for d in 1..=3 {
                graphs.push(constructions::realize(r, d).unwrap());
            }
        }
        let report = verify_corpus(&graphs, &Settings::default(), &Check::ALL).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        for (i, v) in report.graphs.iter().enumerate() {
            assert_eq!((v.report.reg, v.report.deg_h), (i / 3 + 1, i % 3 + 1));
        }
        let empty = verify_corpus(&[], &Settings::default(), &Check::ALL).unwrap();
        assert!(empty.passed() && empty.graphs.is_empty());
        assert_eq!("sum-bound".parse::<Check>().unwrap(), Check::SumBound);
        assert!("nope".parse::<Check>().is_err());
    }
}
