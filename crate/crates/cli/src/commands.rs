use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use edgeideal::constructions::{check_prediction, cone_applicable, cone_predict, Family};
use edgeideal::enumerate::{self, Check, RealizabilityTable, ScanOptions};
use edgeideal::invariants::{self, pure_resolution_check, PureVerdict};
use edgeideal::{Graph, InvariantReport, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::{read_file, CliError, Config, FamilyArg, Format, GraphOutput};

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
}

fn load_graph(graph6: Option<String>, edges: Option<PathBuf>) -> Result<Graph, CliError> {
    match (graph6, edges) {
        (Some(s), None) => Ok(Graph::from_graph6(s.trim())?),
        (None, Some(path)) => Ok(Graph::parse_edge_list(&read_file(&path)?)?),
        _ => Err(CliError::Usage("give exactly one of --graph6 or --edges".into())),
    }
}

fn report_rows(r: &InvariantReport) -> Vec<(&'static str, String)> {
    let violations = r.bounds_ok.violations();
    let bounds = if violations.is_empty() { "yes".to_string() } else { format!("no: {}", violations.join(", ")) };
    vec![
        ("graph6", r.graph6.clone()),
        ("n", r.n.to_string()),
        ("edges", r.edges.to_string()),
        ("alpha", r.alpha.to_string()),
        ("alphaPrime", r.alpha_prime.to_string()),
        ("cover", r.cover.to_string()),
        ("dim", r.dim.to_string()),
        ("hPoly", r.h_poly.to_string()),
        ("degH", r.deg_h.to_string()),
        ("reg", r.reg.to_string()),
        ("projDim", r.proj_dim.to_string()),
        ("depth", r.depth.to_string()),
        ("field", r.field.to_string()),
        ("boundsOk", bounds),
    ]
}

pub fn invariants(config: &Config, graph6: Option<String>, edges: Option<PathBuf>) -> Result<u8, CliError> {
    let g = load_graph(graph6, edges)?;
    let report = InvariantReport::compute(&g, &config.settings)?;
    let pure = pure_resolution_check(&report.betti, &report)?;
    match config.format {
        Format::Json => print_json(&report),
        Format::Tsv => {
            for (k, v) in report_rows(&report) {
                println!("{k}\t{v}");
            }
        }
        Format::Text => {
            for (k, v) in report_rows(&report) {
                println!("{k:<11} {v}");
            }
            println!("{:<11} {}", "hilbert", report.hilbert);
            match pure {
                PureVerdict::Holds(v) => println!("{:<11} pure, deg h - reg = dim - depth = {v}", "resolution"),
                PureVerdict::NotPure => println!("{:<11} not pure, identity check skipped", "resolution"),
            }
            println!("\nbetti (rows j - i, columns i)\n{}", report.betti);
        }
    }
    Ok(if report.bounds_ok.all() { 0 } else { 1 })
}

pub struct FamilyParams {
    pub family: FamilyArg,
    pub r: Option<usize>,
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub base: Option<String>,
    pub subset: Option<String>,
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} needs {flag}")))
}

impl FamilyParams {
    fn family(&self) -> Result<Option<Family>, CliError> {
        Ok(Some(match self.family {
            FamilyArg::Kdd => Family::Kdd { d: need(self.d, "-d", "kdd")? },
            FamilyArg::Star => Family::Star { n: need(self.n, "-n", "star")? },
            FamilyArg::Matching => Family::Matching { m: need(self.m, "-m", "matching")? },
            FamilyArg::Ribbon => Family::Ribbon,
            FamilyArg::Gr => Family::GFamily { r: need(self.r, "-r", "gr")? },
            FamilyArg::Realize => Family::Realize { r: need(self.r, "-r", "realize")?, d: need(self.d, "-d", "realize")? },
            FamilyArg::Cone => return Ok(None),
        }))
    }

    fn cone_input(&self) -> Result<(Graph, VertexSet), CliError> {
        let base = self.base.as_deref().ok_or_else(|| CliError::Usage("--family cone needs --base".into()))?;
        let g = Graph::from_graph6(base.trim())?;
        let subset = self.subset.as_deref().ok_or_else(|| CliError::Usage("--family cone needs --subset".into()))?;
        let mut s = VertexSet::empty();
        for part in subset.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let v: usize = part.parse().map_err(|_| CliError::Usage(format!("bad vertex {part:?} in --subset")))?;
            if v >= g.vertex_count() {
                return Err(edgeideal::Error::VertexOutOfRange { vertex: v, n: g.vertex_count() }.into());
            }
            s.insert(v);
        }
        Ok((g, s))
    }
}

fn render_graph(g: &Graph, output: GraphOutput) -> String {
    match output {
        GraphOutput::Graph6 => g.to_graph6(),
        GraphOutput::Edges => g.to_edge_list().trim_end().to_string(),
    }
}

pub fn construct(config: &Config, params: &FamilyParams, output: GraphOutput, check: bool) -> Result<u8, CliError> {
    let (graph, check_json, ok) = match params.family()? {
        Some(family) => {
            let g = family.build()?;
            if !check {
                (g, None, true)
            } else {
                let prediction = family.prediction()?;
                let c = check_prediction(&g, &prediction, &config.settings)?;
                let value = json!({
                    "source": prediction.source,
                    "expectedSeries": prediction.series.as_ref().map(|s| s.to_string()),
                    "series": c.series.to_string(),
                    "expectedReg": prediction.reg,
                    "reg": c.reg,
                    "expectedDegH": prediction.deg_h,
                    "degH": c.deg_h,
                    "passed": c.passed(),
                });
                let ok = c.passed();
                (g, Some(value), ok)
            }
        }
        None => {
            let (base, s) = params.cone_input()?;
            let g = base.cone_over_subset(s)?;
            if !check {
                (g, None, true)
            } else {
                let report = cone_applicable(&base, s, &config.settings)?;
                let mut value = json!({
                    "dimOk": report.dim_ok,
                    "hOk": report.h_ok,
                    "regOk": report.reg_ok,
                    "cardinalityOk": report.cardinality_ok,
                    "dominationOk": report.domination_ok,
                    "complementIndependent": report.complement_independent,
                    "applicable": report.applicable(),
                });
                let mut ok = report.applicable();
                if report.h_ok {
                    let predicted = cone_predict(&report.h, report.dim)?;
                    let series = invariants::hilbert_series(&g)?;
                    let reg = invariants::regularity(&g, &config.settings)?;
                    ok &= series == predicted.series && reg == report.reg;
                    value["expectedSeries"] = json!(predicted.series.to_string());
                    value["series"] = json!(series.to_string());
                    value["expectedReg"] = json!(report.reg);
                    value["reg"] = json!(reg);
                    value["outsideRegime"] = json!(predicted.outside_regime);
                }
                value["passed"] = json!(ok);
                (g, Some(value), ok)
            }
        }
    };
    match config.format {
        Format::Json => {
            let mut out = json!({ "graph6": graph.to_graph6(), "n": graph.vertex_count(), "edges": graph.edge_count() });
            if let Some(c) = check_json {
                out["check"] = c;
            }
            print_json(&out);
        }
        Format::Tsv | Format::Text => {
            println!("{}", render_graph(&graph, output));
            if let Some(c) = check_json {
                let verdict = if ok { "passed" } else { "FAILED" };
                eprintln!("check {verdict}: {c}");
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn parse_pairs(spec: &str) -> Result<Vec<(usize, usize)>, CliError> {
    spec.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|pair| {
            let bad = || CliError::Usage(format!("bad pair {pair:?}, expected r,d"));
            let (r, d) = pair.split_once(',').ok_or_else(bad)?;
            Ok((r.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn print_table(table: &RealizabilityTable, format: Format) {
    match format {
        Format::Json => print_json(table),
        Format::Tsv | Format::Text => print!("{}", table.to_tsv()),
    }
}

pub fn enumerate(
    config: &Config,
    n: Option<usize>,
    input: Option<PathBuf>,
    connected: bool,
    expect_absent: Option<String>,
    quiet: bool,
) -> Result<u8, CliError> {
    let absent = expect_absent.as_deref().map(parse_pairs).transpose()?.unwrap_or_default();
    let opts = ScanOptions { settings: config.settings, workers: None, connected_only: connected };
    let table = match (n, input) {
        (_, Some(path)) => {
            let graphs = enumerate::parse_graph6_lines(&read_file(&path)?)?;
            enumerate::scan_graphs(&graphs, &opts)?
        }
        (Some(n), None) => {
            let last = AtomicUsize::new(0);
            let progress = |done: usize, total: usize| {
                if quiet || total == 0 {
                    return;
                }
                let pct = done * 100 / total;
                if pct / 10 > last.fetch_max(pct / 10, Ordering::Relaxed) || done == total {
                    let mut err = std::io::stderr().lock();
                    let _ = writeln!(err, "scanned {done}/{total} parent classes ({pct}%)");
                }
            };
            enumerate::scan(n, &opts, &progress)?
        }
        (None, None) => return Err(CliError::Usage("give --n or --input".into())),
    };
    print_table(&table, config.format);
    let present: Vec<String> = absent
        .iter()
        .filter(|&&(r, d)| table.contains(r, d))
        .map(|&(r, d)| format!("({r},{d}) witness {}", table.witnesses[&(r, d)]))
        .collect();
    if !present.is_empty() {
        return Err(CliError::Check(format!("expected absent but found: {}", present.join("; "))));
    }
    Ok(0)
}

pub fn verify(config: &Config, input: &Path, checks: &str) -> Result<u8, CliError> {
    let checks: Vec<Check> = checks
        .split(',')
        .filter(|c| !c.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    let graphs = enumerate::parse_graph6_lines(&read_file(input)?)?;
    let report = enumerate::verify_corpus(&graphs, &config.settings, &checks)?;
    match config.format {
        Format::Json => print_json(&report),
        Format::Tsv => {
            println!("graph6\treg\tdegH\tfailed");
            for v in &report.graphs {
                println!("{}\t{}\t{}\t{}", v.report.graph6, v.report.reg, v.report.deg_h, v.failed.join(","));
            }
        }
        Format::Text => {
            for v in &report.graphs {
                let status = if v.failed.is_empty() { "ok".to_string() } else { format!("FAILED {}", v.failed.join(",")) };
                println!("{:<16} reg {:>2}  deg h {:>2}  {status}", v.report.graph6, v.report.reg, v.report.deg_h);
            }
            let summary: BTreeMap<_, _> = report.checks.iter().map(|(k, t)| (*k, (t.passed, t.failed))).collect();
            for (name, (passed, failed)) in summary {
                println!("{name}: {passed} passed, {failed} failed");
            }
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

pub fn sample(n: usize, count: usize, seed: u64, p: f64) -> Result<u8, CliError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::Usage("--p must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        println!("{}", Graph::from_edge_list(n, &edges)?.to_graph6());
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_lists() {
        assert_eq!(parse_pairs("3,1;4,1; 4,2").unwrap(), vec![(3, 1), (4, 1), (4, 2)]);
        assert!(parse_pairs("3").is_err());
        assert!(parse_pairs("").unwrap().is_empty());
    }

    #[test]
    fn cone_subsets() {
        let params = FamilyParams {
            family: FamilyArg::Cone,
            r: None,
            d: None,
            n: None,
            m: None,
            base: Some("Cl".into()),
            subset: Some("0, 2".into()),
        };
        let (g, s) = params.cone_input().unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(s, VertexSet::from_iter([0, 2]));
        let bad = FamilyParams { subset: Some("9".into()), ..params };
        assert!(bad.cone_input().is_err());
    }
}
