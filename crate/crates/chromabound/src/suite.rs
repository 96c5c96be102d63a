//! Verification suites for every proved bound and equality characterization,
//! and counterexample hunts for the conjectured ones.
//!
//! Suites run over exhaustively enumerated corpora (one representative per
//! isomorphism class). Per-graph work can fan out across threads; results are
//! folded back in enumeration order, so output is deterministic regardless of
//! the job count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::enumerate::{enumerate_graphs, GraphFilter, ENUMERATION_MAX_VERTICES};
use crate::graph::{Graph, GraphError};
use crate::indices::{self, RANDIC_CHAIN_TOL};
use crate::rational::Rational;
use crate::record::{is_star, GraphRecord};
use crate::spectral::{
    evaluate_spectral_bounds, BoundContext, BoundEvaluation, BoundKind, SPECTRAL_SLACK_TOL,
};

/// The verification suites, named after what they verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Chain (1): R' <= H exactly and H <= R within float slack.
    Chain1,
    /// col <= 2R' with equality exactly on the kite family.
    Thm14,
    /// chi <= 2R' with equality exactly on the kite family.
    Cor15,
    /// col <= 2H with equality exactly on complete graphs.
    Cor17,
    /// Deletion monotonicity of R' at minimum-degree vertices, the equality
    /// biconditional, and the tree lemma R'(T) >= 1 (equality on stars).
    Thm21,
    /// psi <= 2m/sqrt(s+) <= 2m/mu <= 2R, with its two proof cross-checks.
    Thm31,
    /// col(col-1) <= 2m and the intermediate s+ + sqrt(s+) <= 2m.
    Lem32,
    /// col <= 2m/sqrt(s+) <= 2m/mu <= 2R.
    Thm33,
    /// sqrt(s+) <= (sqrt(8m+1)-1)/2, Hong's bound, and their ordering.
    Sec33,
    /// Chains (3) and (6): chi <= col <= Delta+1 and chi <= Gamma <= Delta+1,
    /// Gamma <= psi.
    Chain36,
}

impl Suite {
    pub fn all() -> [Suite; 10] {
        [
            Suite::Chain1,
            Suite::Thm14,
            Suite::Cor15,
            Suite::Cor17,
            Suite::Thm21,
            Suite::Thm31,
            Suite::Lem32,
            Suite::Thm33,
            Suite::Sec33,
            Suite::Chain36,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Chain1 => "chain1",
            Suite::Thm14 => "thm14",
            Suite::Cor15 => "cor15",
            Suite::Cor17 => "cor17",
            Suite::Thm21 => "thm21",
            Suite::Thm31 => "thm31",
            Suite::Lem32 => "lem32",
            Suite::Thm33 => "thm33",
            Suite::Sec33 => "sec33",
            Suite::Chain36 => "chain36",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::all()
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

// Labels of the exact-arithmetic bounds (spectral ones use BoundKind::label).
const COL_LE_TWO_RPRIME: &str = "col<=2R'";
const CHI_LE_TWO_RPRIME: &str = "chi<=2R'";
const COL_LE_TWO_H: &str = "col<=2H";
const RPRIME_LE_H: &str = "R'<=H";
const H_LE_R: &str = "H<=R";
const DELETION_NONNEG: &str = "0<=R'(G)-R'(G-v)";
const DELETION_BICONDITIONAL: &str = "thm21-equality-biconditional";
const TREE_LEMMA: &str = "1<=R'(T)";
const TREE_EQUALITY: &str = "tree-equality-star";
const THM14_FAMILY: &str = "thm14-equality-family";
const COR15_FAMILY: &str = "cor15-equality-family";
const COR17_FAMILY: &str = "cor17-equality-family";
const CHI_LE_GAMMA: &str = "chi<=Gamma";
const GAMMA_LE_DELTA: &str = "Gamma<=Delta+1";
const GAMMA_LE_PSI: &str = "Gamma<=psi";
const CHI_LE_COL: &str = "chi<=col";
const COL_LE_DELTA: &str = "col<=Delta+1";

/// Every inequality a suite asserts, for the completeness cross-check.
pub fn suite_registry() -> Vec<(Suite, Vec<&'static str>)> {
    vec![
        (Suite::Chain1, vec![RPRIME_LE_H, H_LE_R]),
        (Suite::Thm14, vec![COL_LE_TWO_RPRIME, THM14_FAMILY]),
        (Suite::Cor15, vec![CHI_LE_TWO_RPRIME, COR15_FAMILY]),
        (Suite::Cor17, vec![COL_LE_TWO_H, COR17_FAMILY]),
        (
            Suite::Thm21,
            vec![
                DELETION_NONNEG,
                DELETION_BICONDITIONAL,
                TREE_LEMMA,
                TREE_EQUALITY,
            ],
        ),
        (
            Suite::Thm31,
            vec![
                BoundKind::AchromaticSpectral.label(),
                BoundKind::SqrtSPlusVsMu.label(),
                BoundKind::MuVsRandic.label(),
                BoundKind::InertiaRatioVsChi.label(),
                BoundKind::RandicSpectralLower.label(),
            ],
        ),
        (
            Suite::Lem32,
            vec![
                BoundKind::ColQuadratic.label(),
                BoundKind::SPlusPlusRoot.label(),
            ],
        ),
        (
            Suite::Thm33,
            vec![
                BoundKind::ColoringSpectral.label(),
                BoundKind::SqrtSPlusVsMu.label(),
                BoundKind::MuVsRandic.label(),
            ],
        ),
        (
            Suite::Sec33,
            vec![
                BoundKind::StanleyStrengthened.label(),
                BoundKind::Hong.label(),
                BoundKind::HongBelowStanley.label(),
            ],
        ),
        (
            Suite::Chain36,
            vec![
                CHI_LE_GAMMA,
                GAMMA_LE_DELTA,
                GAMMA_LE_PSI,
                CHI_LE_COL,
                COL_LE_DELTA,
            ],
        ),
    ]
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest order swept (1..=7).
    pub n_max: usize,
    /// Restrict the corpus to connected graphs.
    pub connected_only: bool,
    /// Worker threads for per-graph computation.
    pub jobs: usize,
    /// Slack for spectral comparisons.
    pub tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            n_max: ENUMERATION_MAX_VERTICES,
            connected_only: false,
            jobs: 1,
            tol: SPECTRAL_SLACK_TOL,
        }
    }
}

/// One failed inequality.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub bound: String,
    pub lhs: f64,
    pub rhs: f64,
}

/// Outcome of one suite over one corpus.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub corpus: String,
    pub graphs_checked: usize,
    pub violations: Vec<Violation>,
    /// Graphs attaining the suite's characterized equality.
    pub equality_cases: Vec<String>,
    pub min_slack: Option<f64>,
    pub min_slack_graph: Option<String>,
    pub passed: bool,
}

/// Precomputed per-graph data shared by all suites.
pub struct CorpusEntry {
    pub graph: Graph,
    pub record: GraphRecord,
    pub bounds: BoundEvaluation,
}

impl CorpusEntry {
    pub fn compute(graph: Graph, tol: f64) -> CorpusEntry {
        let record = GraphRecord::compute(&graph);
        let ctx = BoundContext {
            n: record.n,
            m: record.m,
            col: record.col,
            chi: record.chi,
            psi: record.psi,
            randic: record.randic,
            connected: graph.is_connected(),
            has_isolated: graph.has_isolated_vertex(),
        };
        let bounds = evaluate_spectral_bounds(&record.graph6, &record.spectral, &ctx, tol);
        CorpusEntry {
            graph,
            record,
            bounds,
        }
    }
}

/// Enumerates the corpus and computes every entry, fanning out across `jobs`.
pub fn build_corpus(opts: &VerifyOptions) -> Result<Vec<CorpusEntry>, GraphError> {
    if opts.n_max == 0 || opts.n_max > ENUMERATION_MAX_VERTICES {
        return Err(GraphError::EnumerationUnsupported {
            n: opts.n_max,
            max: ENUMERATION_MAX_VERTICES,
        });
    }
    let filter = if opts.connected_only {
        GraphFilter::Connected
    } else {
        GraphFilter::All
    };
    let mut graphs = Vec::new();
    for n in 1..=opts.n_max {
        graphs.extend(enumerate_graphs(n, filter)?);
    }
    let tol = opts.tol;
    Ok(ordered_parallel_map(graphs, opts.jobs, |g| {
        CorpusEntry::compute(g.clone(), tol)
    }))
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteResult, GraphError> {
    Ok(run_suites(&[suite], opts)?.pop().expect("one suite in, one out"))
}

/// Runs several suites over one shared corpus.
pub fn run_suites(
    suites: &[Suite],
    opts: &VerifyOptions,
) -> Result<Vec<SuiteResult>, GraphError> {
    let corpus = build_corpus(opts)?;
    Ok(suites
        .iter()
        .map(|&suite| check_suite(suite, &corpus, opts))
        .collect())
}

fn corpus_description(filter: &str, opts: &VerifyOptions) -> String {
    let connectivity = if opts.connected_only {
        ", connected only"
    } else {
        ""
    };
    format!("{filter}, 1<=n<={}{}", opts.n_max, connectivity)
}

struct Accumulator {
    graphs_checked: usize,
    violations: Vec<Violation>,
    equality_cases: Vec<String>,
    min_slack: Option<(f64, String)>,
}

impl Accumulator {
    fn new() -> Accumulator {
        Accumulator {
            graphs_checked: 0,
            violations: Vec::new(),
            equality_cases: Vec::new(),
            min_slack: None,
        }
    }

    fn track(&mut self, slack: f64, graph6: &str) {
        if self.min_slack.as_ref().is_none_or(|(best, _)| slack < *best) {
            self.min_slack = Some((slack, graph6.to_string()));
        }
    }

    /// Exact rational `lhs <= rhs`; returns whether equality holds.
    fn rational_bound(
        &mut self,
        graph6: &str,
        bound: &str,
        lhs: Rational,
        rhs: Rational,
    ) -> bool {
        if lhs > rhs {
            self.violations.push(Violation {
                graph6: graph6.to_string(),
                bound: bound.to_string(),
                lhs: lhs.to_f64(),
                rhs: rhs.to_f64(),
            });
        }
        self.track((rhs - lhs).to_f64(), graph6);
        lhs == rhs
    }

    /// Integer `lhs <= rhs`; returns whether equality holds.
    fn integer_bound(&mut self, graph6: &str, bound: &str, lhs: u64, rhs: u64) -> bool {
        if lhs > rhs {
            self.violations.push(Violation {
                graph6: graph6.to_string(),
                bound: bound.to_string(),
                lhs: lhs as f64,
                rhs: rhs as f64,
            });
        }
        self.track(rhs as f64 - lhs as f64, graph6);
        lhs == rhs
    }

    /// Float `lhs <= rhs + tol`.
    fn float_bound(&mut self, graph6: &str, bound: &str, lhs: f64, rhs: f64, tol: f64) {
        if rhs - lhs < -tol {
            self.violations.push(Violation {
                graph6: graph6.to_string(),
                bound: bound.to_string(),
                lhs,
                rhs,
            });
        }
        self.track(rhs - lhs, graph6);
    }

    fn flag(&mut self, graph6: &str, bound: &str, lhs: f64, rhs: f64) {
        self.violations.push(Violation {
            graph6: graph6.to_string(),
            bound: bound.to_string(),
            lhs,
            rhs,
        });
    }

    fn finish(self, suite: Suite, corpus: String) -> SuiteResult {
        SuiteResult {
            suite: suite.name().to_string(),
            corpus,
            graphs_checked: self.graphs_checked,
            passed: self.violations.is_empty(),
            violations: self.violations,
            equality_cases: self.equality_cases,
            min_slack: self.min_slack.as_ref().map(|(s, _)| *s),
            min_slack_graph: self.min_slack.map(|(_, g)| g),
        }
    }
}

fn check_suite(suite: Suite, corpus: &[CorpusEntry], opts: &VerifyOptions) -> SuiteResult {
    match suite {
        Suite::Chain1 => check_chain1(corpus, opts),
        Suite::Thm14 => check_index_family(
            suite,
            corpus,
            opts,
            COL_LE_TWO_RPRIME,
            THM14_FAMILY,
            |e| Rational::from_integer(e.record.col as i128),
            |e| e.record.r_prime * 2,
            |e| e.record.family_match.expect("n<=7").is_kite_family(),
        ),
        Suite::Cor15 => check_index_family(
            suite,
            corpus,
            opts,
            CHI_LE_TWO_RPRIME,
            COR15_FAMILY,
            |e| Rational::from_integer(e.record.chi.expect("n<=7 within cap") as i128),
            |e| e.record.r_prime * 2,
            |e| e.record.family_match.expect("n<=7").is_kite_family(),
        ),
        Suite::Cor17 => check_index_family(
            suite,
            corpus,
            opts,
            COL_LE_TWO_H,
            COR17_FAMILY,
            |e| Rational::from_integer(e.record.col as i128),
            |e| e.record.harmonic * 2,
            |e| {
                matches!(
                    e.record.family_match.expect("n<=7"),
                    crate::record::FamilyMatch::Complete
                )
            },
        ),
        Suite::Thm21 => check_thm21(corpus, opts),
        Suite::Thm31 => check_spectral(
            suite,
            corpus,
            opts,
            &[
                BoundKind::AchromaticSpectral,
                BoundKind::SqrtSPlusVsMu,
                BoundKind::MuVsRandic,
                BoundKind::InertiaRatioVsChi,
                BoundKind::RandicSpectralLower,
            ],
            Some(BoundKind::AchromaticSpectral),
        ),
        Suite::Lem32 => check_spectral(
            suite,
            corpus,
            opts,
            &[BoundKind::ColQuadratic, BoundKind::SPlusPlusRoot],
            Some(BoundKind::ColQuadratic),
        ),
        Suite::Thm33 => check_spectral(
            suite,
            corpus,
            opts,
            &[
                BoundKind::ColoringSpectral,
                BoundKind::SqrtSPlusVsMu,
                BoundKind::MuVsRandic,
            ],
            Some(BoundKind::ColoringSpectral),
        ),
        Suite::Sec33 => check_spectral(
            suite,
            corpus,
            opts,
            &[
                BoundKind::StanleyStrengthened,
                BoundKind::Hong,
                BoundKind::HongBelowStanley,
            ],
            Some(BoundKind::Hong),
        ),
        Suite::Chain36 => check_chain36(corpus, opts),
    }
}

fn check_chain1(corpus: &[CorpusEntry], opts: &VerifyOptions) -> SuiteResult {
    let mut acc = Accumulator::new();
    for e in corpus {
        acc.graphs_checked += 1;
        let g6 = &e.record.graph6;
        if acc.rational_bound(g6, RPRIME_LE_H, e.record.r_prime, e.record.harmonic) {
            acc.equality_cases.push(g6.clone());
        }
        acc.float_bound(
            g6,
            H_LE_R,
            e.record.harmonic.to_f64(),
            e.record.randic,
            RANDIC_CHAIN_TOL,
        );
    }
    acc.finish(Suite::Chain1, corpus_description("all graphs", opts))
}

/// The three exact bound-plus-equality-family suites share this shape: verify
/// `lhs <= rhs` in rationals and verify the equality set is exactly the
/// family, both inclusions, via canonical-form family matching.
#[allow(clippy::too_many_arguments)]
fn check_index_family(
    suite: Suite,
    corpus: &[CorpusEntry],
    opts: &VerifyOptions,
    bound: &str,
    family_bound: &str,
    lhs: impl Fn(&CorpusEntry) -> Rational,
    rhs: impl Fn(&CorpusEntry) -> Rational,
    in_family: impl Fn(&CorpusEntry) -> bool,
) -> SuiteResult {
    let mut acc = Accumulator::new();
    for e in corpus {
        if e.graph.has_isolated_vertex() {
            continue;
        }
        acc.graphs_checked += 1;
        let g6 = &e.record.graph6;
        let (l, r) = (lhs(e), rhs(e));
        let equality = acc.rational_bound(g6, bound, l, r);
        if equality {
            acc.equality_cases.push(g6.clone());
        }
        if equality != in_family(e) {
            acc.flag(g6, family_bound, l.to_f64(), r.to_f64());
        }
    }
    acc.finish(suite, corpus_description("no isolated vertices", opts))
}

fn check_thm21(corpus: &[CorpusEntry], opts: &VerifyOptions) -> SuiteResult {
    let mut acc = Accumulator::new();
    for e in corpus {
        acc.graphs_checked += 1;
        let g = &e.graph;
        let g6 = &e.record.graph6;
        let min_degree = g.min_degree();
        for v in g.vertices().filter(|&v| g.degree(v) == min_degree) {
            let delta = indices::deletion_delta(g, v).expect("v in range");
            acc.rational_bound(g6, DELETION_NONNEG, Rational::ZERO, delta);
            let condition = indices::equality_condition(g, v).expect("v has min degree");
            if condition != delta.is_zero() {
                acc.flag(g6, DELETION_BICONDITIONAL, delta.to_f64(), 0.0);
            }
        }
        // tree lemma: R'(T) >= 1 for trees on >= 2 vertices, equality on stars
        if g.n() >= 2 && g.m() + 1 == g.n() && g.is_connected() {
            let equality = acc.rational_bound(g6, TREE_LEMMA, Rational::ONE, e.record.r_prime);
            if equality {
                acc.equality_cases.push(g6.clone());
            }
            if equality != is_star(g) {
                acc.flag(g6, TREE_EQUALITY, 1.0, e.record.r_prime.to_f64());
            }
        }
    }
    acc.finish(Suite::Thm21, corpus_description("all graphs", opts))
}

fn check_spectral(
    suite: Suite,
    corpus: &[CorpusEntry],
    opts: &VerifyOptions,
    kinds: &[BoundKind],
    equality_kind: Option<BoundKind>,
) -> SuiteResult {
    let mut acc = Accumulator::new();
    for e in corpus {
        if e.record.m == 0 {
            continue;
        }
        acc.graphs_checked += 1;
        for report in e.bounds.reports.iter().filter(|r| kinds.contains(&r.bound)) {
            if report.slack < -opts.tol {
                acc.flag(&report.graph6, report.bound.label(), report.lhs, report.rhs);
            }
            acc.track(report.slack, &report.graph6);
            if equality_kind == Some(report.bound) && report.equality {
                acc.equality_cases.push(report.graph6.clone());
            }
        }
    }
    acc.finish(suite, corpus_description("m>=1", opts))
}

fn check_chain36(corpus: &[CorpusEntry], opts: &VerifyOptions) -> SuiteResult {
    let mut acc = Accumulator::new();
    for e in corpus {
        acc.graphs_checked += 1;
        let g6 = &e.record.graph6;
        let chi = e.record.chi.expect("n<=7 within cap") as u64;
        let gamma = e.record.grundy.expect("n<=7 within cap") as u64;
        let psi = e.record.psi.expect("n<=7 within cap") as u64;
        let col = e.record.col as u64;
        let delta_plus_one = e.record.max_degree as u64 + 1;
        acc.integer_bound(g6, CHI_LE_GAMMA, chi, gamma);
        acc.integer_bound(g6, GAMMA_LE_DELTA, gamma, delta_plus_one);
        acc.integer_bound(g6, GAMMA_LE_PSI, gamma, psi);
        acc.integer_bound(g6, CHI_LE_COL, chi, col);
        acc.integer_bound(g6, COL_LE_DELTA, col, delta_plus_one);
    }
    acc.finish(Suite::Chain36, corpus_description("all graphs", opts))
}

// ---- conjecture hunts ----

/// The open conjectures probed by `hunt`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// psi <= 2R'.
    C41,
    /// Gamma <= 2R'.
    C42,
    /// s+ <= 2m - n + 1 for connected graphs.
    SPlus,
}

impl Conjecture {
    pub fn name(&self) -> &'static str {
        match self {
            Conjecture::C41 => "c41",
            Conjecture::C42 => "c42",
            Conjecture::SPlus => "splus",
        }
    }
}

impl std::str::FromStr for Conjecture {
    type Err = String;
    fn from_str(s: &str) -> Result<Conjecture, String> {
        match s {
            "c41" => Ok(Conjecture::C41),
            "c42" => Ok(Conjecture::C42),
            "splus" => Ok(Conjecture::SPlus),
            other => Err(format!("unknown conjecture `{other}`")),
        }
    }
}

/// Outcome of a hunt. A counterexample is reported with its full record; no
/// counterexample means the interesting output is the minimum slack and the
/// graphs attaining it.
#[derive(Clone, Debug, Serialize)]
pub struct HuntResult {
    pub conjecture: String,
    pub corpus: String,
    pub graphs_checked: usize,
    /// Graphs skipped because an invariant's search cap was exceeded.
    pub skipped: usize,
    pub counterexamples: Vec<GraphRecord>,
    /// Graphs attaining slack 0 (exact for c41/c42, within tol for splus).
    pub tight_graphs: Vec<String>,
    pub min_slack: Option<f64>,
    pub min_slack_graph: Option<String>,
}

/// Hunts over the exhaustive corpus at order up to `n_max`.
///
/// c41/c42 run over graphs with at least one edge (on edgeless graphs
/// psi = Gamma = 1 > 0 = 2R' trivially; the conjectures are posed in the
/// paper's no-isolated-vertices setting). splus runs over connected graphs,
/// as conjectured.
pub fn hunt_enumerated(
    conjecture: Conjecture,
    n_max: usize,
    jobs: usize,
    tol: f64,
) -> Result<HuntResult, GraphError> {
    if n_max == 0 || n_max > ENUMERATION_MAX_VERTICES {
        return Err(GraphError::EnumerationUnsupported {
            n: n_max,
            max: ENUMERATION_MAX_VERTICES,
        });
    }
    let filter = match conjecture {
        Conjecture::SPlus => GraphFilter::Connected,
        _ => GraphFilter::All,
    };
    let mut graphs = Vec::new();
    for n in 1..=n_max {
        graphs.extend(enumerate_graphs(n, filter)?);
    }
    let corpus = match conjecture {
        Conjecture::SPlus => format!("connected graphs, 1<=n<={n_max}"),
        _ => format!("graphs with m>=1, 1<=n<={n_max}"),
    };
    Ok(hunt_over(conjecture, graphs, corpus, jobs, tol))
}

/// Hunts over an ingested corpus (the same per-conjecture filters apply).
pub fn hunt_corpus(
    conjecture: Conjecture,
    graphs: Vec<Graph>,
    jobs: usize,
    tol: f64,
) -> HuntResult {
    let corpus = match conjecture {
        Conjecture::SPlus => "corpus file (connected graphs)".to_string(),
        _ => "corpus file (graphs with m>=1)".to_string(),
    };
    hunt_over(conjecture, graphs, corpus, jobs, tol)
}

struct HuntOutcome {
    graph6: String,
    skipped: bool,
    violated: bool,
    tight: bool,
    slack: f64,
    record: Option<GraphRecord>,
}

fn hunt_over(
    conjecture: Conjecture,
    graphs: Vec<Graph>,
    corpus: String,
    jobs: usize,
    tol: f64,
) -> HuntResult {
    let graphs: Vec<Graph> = graphs
        .into_iter()
        .filter(|g| match conjecture {
            Conjecture::SPlus => g.is_connected(),
            _ => g.m() >= 1,
        })
        .collect();

    let outcomes = ordered_parallel_map(graphs, jobs, |g| {
        let record = GraphRecord::compute(g);
        let graph6 = record.graph6.clone();
        let (slack_exact, slack): (Option<Rational>, f64) = match conjecture {
            Conjecture::C41 | Conjecture::C42 => {
                let value = match conjecture {
                    Conjecture::C41 => record.psi,
                    _ => record.grundy,
                };
                let Some(value) = value else {
                    return HuntOutcome {
                        graph6,
                        skipped: true,
                        violated: false,
                        tight: false,
                        slack: f64::INFINITY,
                        record: None,
                    };
                };
                let slack = record.r_prime * 2 - Rational::from_integer(value as i128);
                (Some(slack), slack.to_f64())
            }
            Conjecture::SPlus => {
                let rhs = 2.0 * record.m as f64 - record.n as f64 + 1.0;
                (None, rhs - record.spectral.s_plus)
            }
        };
        let (violated, tight) = match slack_exact {
            Some(exact) => (exact < Rational::ZERO, exact.is_zero()),
            None => (slack < -tol, slack.abs() <= tol),
        };
        HuntOutcome {
            graph6,
            skipped: false,
            violated,
            tight,
            slack,
            record: violated.then_some(record),
        }
    });

    let mut result = HuntResult {
        conjecture: conjecture.name().to_string(),
        corpus,
        graphs_checked: 0,
        skipped: 0,
        counterexamples: Vec::new(),
        tight_graphs: Vec::new(),
        min_slack: None,
        min_slack_graph: None,
    };
    let mut min: Option<(f64, String)> = None;
    for outcome in outcomes {
        if outcome.skipped {
            result.skipped += 1;
            continue;
        }
        result.graphs_checked += 1;
        if outcome.violated {
            result
                .counterexamples
                .extend(outcome.record);
        }
        if outcome.tight {
            result.tight_graphs.push(outcome.graph6.clone());
        }
        if min.as_ref().is_none_or(|(best, _)| outcome.slack < *best) {
            min = Some((outcome.slack, outcome.graph6));
        }
    }
    result.min_slack = min.as_ref().map(|(s, _)| *s);
    result.min_slack_graph = min.map(|(_, g)| g);
    result
}

/// Applies `f` to every item, optionally on `jobs` worker threads, and returns
/// results in input order regardless of completion order.
pub fn ordered_parallel_map<T, U, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<U>>> = items.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(items.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let value = f(&items[i]);
                *slots[i].lock().expect("worker poisoned a result slot") = Some(value);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| {
            slot.into_inner()
                .expect("worker poisoned a result slot")
                .expect("every slot filled")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(n_max: usize) -> VerifyOptions {
        VerifyOptions {
            n_max,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn all_suites_pass_at_small_order() {
        let results = run_suites(&Suite::all(), &opts(5)).unwrap();
        for r in &results {
            assert!(r.passed, "{} violations: {:?}", r.suite, r.violations);
            assert!(r.graphs_checked > 0);
        }
    }

    #[test]
    fn thm14_equality_cases_are_kites() {
        let result = run_suite(Suite::Thm14, &opts(5)).unwrap();
        assert!(result.passed);
        // kites on n = 2..5: one class at n=2 (K2), two at n=3 (K3, P3=star),
        // three at n=4, four at n=5; all pairwise non-isomorphic
        assert_eq!(result.equality_cases.len(), 1 + 2 + 3 + 4);
        assert_eq!(result.min_slack, Some(0.0));
    }

    #[test]
    fn cor17_equality_cases_are_complete() {
        let result = run_suite(Suite::Cor17, &opts(5)).unwrap();
        assert!(result.passed);
        // K2..K5
        assert_eq!(result.equality_cases.len(), 4);
    }

    #[test]
    fn registry_covers_every_suite() {
        let registry = suite_registry();
        assert_eq!(registry.len(), Suite::all().len());
        for (suite, bounds) in registry {
            assert!(!bounds.is_empty(), "{} has no bounds", suite.name());
        }
    }

    #[test]
    fn jobs_do_not_change_results() {
        let sequential = run_suites(&Suite::all(), &opts(4)).unwrap();
        let parallel = run_suites(
            &Suite::all(),
            &VerifyOptions {
                n_max: 4,
                jobs: 4,
                ..VerifyOptions::default()
            },
        )
        .unwrap();
        for (a, b) in sequential.iter().zip(&parallel) {
            assert_eq!(
                serde_json::to_string(a).unwrap(),
                serde_json::to_string(b).unwrap()
            );
        }
    }

    #[test]
    fn hunts_find_no_counterexamples_small() {
        for conjecture in [Conjecture::C41, Conjecture::C42] {
            let result = hunt_enumerated(conjecture, 5, 1, SPECTRAL_SLACK_TOL).unwrap();
            assert!(result.counterexamples.is_empty());
            assert_eq!(result.skipped, 0);
            assert_eq!(result.min_slack, Some(0.0));
            assert!(!result.tight_graphs.is_empty());
        }
        let result = hunt_enumerated(Conjecture::SPlus, 5, 1, SPECTRAL_SLACK_TOL).unwrap();
        assert!(result.counterexamples.is_empty());
        // complete graphs attain slack 0 (so do trees: bipartite s+ = m)
        let tight: Vec<Graph> = result
            .tight_graphs
            .iter()
            .map(|g6| crate::graph6::parse_graph6(g6).unwrap())
            .collect();
        for n in 1..=5 {
            let kn = Graph::complete(n).unwrap();
            assert!(
                tight
                    .iter()
                    .any(|g| crate::canon::are_isomorphic(g, &kn).unwrap()),
                "K{n} missing from tight graphs"
            );
        }
    }

    #[test]
    fn ordered_parallel_map_preserves_order() {
        let items: Vec<usize> = (0..1000).collect();
        let doubled = ordered_parallel_map(items.clone(), 8, |&x| 2 * x);
        assert_eq!(doubled, items.iter().map(|x| 2 * x).collect::<Vec<_>>());
    }
}
