//! Adjacency spectrum: eigenvalues, inertia, the positive/negative square sums
//! s+ and s-, and evaluation of the spectral bounds.
//!
//! The eigensolver is a cyclic Jacobi iteration on the dense symmetric 0/1
//! matrix. Matrices here have at most 64 rows, where Jacobi is simple, robust,
//! and accurate to well below the 1e-9 the comparisons assume.

use serde::Serialize;

use crate::graph::Graph;

/// Default slack for spectral inequality comparisons (overridable through the
/// harness; CHROMABOUND_TOL at the CLI).
pub const SPECTRAL_SLACK_TOL: f64 = 1e-6;

/// Eigenvalue classification tolerance per vertex: eigenvalues within
/// `1e-7 * n` of zero count into the zero part of the inertia.
pub const ZERO_TOL_PER_VERTEX: f64 = 1e-7;

/// Spectrum of one graph with its inertia and square sums.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralSummary {
    /// All eigenvalues of the adjacency matrix, descending.
    pub eigenvalues: Vec<f64>,
    /// Count of positive eigenvalues.
    pub positive: usize,
    /// Count of negative eigenvalues.
    pub negative: usize,
    /// Count of zero eigenvalues.
    pub zero: usize,
    /// Sum of squares of the positive eigenvalues.
    pub s_plus: f64,
    /// Sum of squares of the negative eigenvalues.
    pub s_minus: f64,
    /// Zero-classification tolerance used.
    pub zero_tol: f64,
    /// True when some nonzero-classified eigenvalue lies within 10x the
    /// tolerance; such graphs deserve manual review.
    pub near_zero: bool,
}

impl SpectralSummary {
    /// Largest eigenvalue (the spectral radius for nonempty graphs).
    pub fn mu(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }
}

/// Full spectrum of the adjacency matrix of `g`, each eigenvalue accurate to
/// 1e-9 absolute. Accepts the zero-vertex graph and returns an empty summary.
pub fn eigenvalues(g: &Graph) -> SpectralSummary {
    let n = g.n();
    let mut eigen = jacobi_eigenvalues(g);
    eigen.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));

    let zero_tol = ZERO_TOL_PER_VERTEX * n as f64;
    let mut positive = 0;
    let mut negative = 0;
    let mut s_plus = 0.0;
    let mut s_minus = 0.0;
    let mut near_zero = false;
    for &mu in &eigen {
        if mu > zero_tol {
            positive += 1;
            s_plus += mu * mu;
        } else if mu < -zero_tol {
            negative += 1;
            s_minus += mu * mu;
        }
        if mu.abs() > zero_tol && mu.abs() <= 10.0 * zero_tol {
            near_zero = true;
        }
    }

    let summary = SpectralSummary {
        zero: n - positive - negative,
        eigenvalues: eigen,
        positive,
        negative,
        s_plus,
        s_minus,
        zero_tol,
        near_zero,
    };
    let two_m = 2.0 * g.m() as f64;
    debug_assert!(summary.positive + summary.negative + summary.zero == n);
    debug_assert!(
        (summary.s_plus + summary.s_minus - two_m).abs() <= 1e-6 * two_m.max(1.0),
        "trace identity s+ + s- = 2m violated"
    );
    debug_assert!(
        summary.eigenvalues.iter().sum::<f64>().abs() <= 1e-6 * n.max(1) as f64,
        "adjacency trace is not zero"
    );
    summary
}

/// Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops below
/// `1e-12 * n`.
fn jacobi_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut a = vec![0.0f64; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    let threshold = 1e-12 * n as f64;
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() < threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    a[r * n + p] = c * arp - s * arq;
                    a[p * n + r] = a[r * n + p];
                    a[r * n + q] = s * arp + c * arq;
                    a[q * n + r] = a[r * n + q];
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

/// The inequalities evaluated per graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// psi <= 2m/sqrt(s+)
    AchromaticSpectral,
    /// 2m/sqrt(s+) <= 2m/mu
    SqrtSPlusVsMu,
    /// 2m/mu <= 2R
    MuVsRandic,
    /// col <= 2m/sqrt(s+)
    ColoringSpectral,
    /// col(col - 1) <= 2m
    ColQuadratic,
    /// s+ + sqrt(s+) <= 2m
    SPlusPlusRoot,
    /// sqrt(s+) <= (sqrt(8m+1) - 1)/2
    StanleyStrengthened,
    /// mu <= sqrt(2m - n + 1)
    Hong,
    /// sqrt(2m - n + 1) <= (sqrt(8m+1) - 1)/2
    HongBelowStanley,
    /// 1 + s+/s- <= chi
    InertiaRatioVsChi,
    /// m/mu <= R
    RandicSpectralLower,
    /// s+ <= 2m - n + 1 (conjectural; probed, not asserted)
    SPlusConjecture,
}

impl BoundKind {
    pub fn label(&self) -> &'static str {
        match self {
            BoundKind::AchromaticSpectral => "psi<=2m/sqrt(s+)",
            BoundKind::SqrtSPlusVsMu => "2m/sqrt(s+)<=2m/mu",
            BoundKind::MuVsRandic => "2m/mu<=2R",
            BoundKind::ColoringSpectral => "col<=2m/sqrt(s+)",
            BoundKind::ColQuadratic => "col(col-1)<=2m",
            BoundKind::SPlusPlusRoot => "s+ + sqrt(s+)<=2m",
            BoundKind::StanleyStrengthened => "sqrt(s+)<=(sqrt(8m+1)-1)/2",
            BoundKind::Hong => "mu<=sqrt(2m-n+1)",
            BoundKind::HongBelowStanley => "sqrt(2m-n+1)<=(sqrt(8m+1)-1)/2",
            BoundKind::InertiaRatioVsChi => "1+s+/s-<=chi",
            BoundKind::RandicSpectralLower => "m/mu<=R",
            BoundKind::SPlusConjecture => "s+<=2m-n+1",
        }
    }

    pub fn lhs_name(&self) -> &'static str {
        match self {
            BoundKind::AchromaticSpectral => "psi",
            BoundKind::SqrtSPlusVsMu => "2m/sqrt(s+)",
            BoundKind::MuVsRandic => "2m/mu",
            BoundKind::ColoringSpectral => "col",
            BoundKind::ColQuadratic => "col(col-1)",
            BoundKind::SPlusPlusRoot => "s+ + sqrt(s+)",
            BoundKind::StanleyStrengthened => "sqrt(s+)",
            BoundKind::Hong => "mu",
            BoundKind::HongBelowStanley => "sqrt(2m-n+1)",
            BoundKind::InertiaRatioVsChi => "1+s+/s-",
            BoundKind::RandicSpectralLower => "m/mu",
            BoundKind::SPlusConjecture => "s+",
        }
    }

    pub fn rhs_name(&self) -> &'static str {
        match self {
            BoundKind::AchromaticSpectral | BoundKind::ColoringSpectral => "2m/sqrt(s+)",
            BoundKind::SqrtSPlusVsMu => "2m/mu",
            BoundKind::MuVsRandic => "2R",
            BoundKind::ColQuadratic | BoundKind::SPlusPlusRoot => "2m",
            BoundKind::StanleyStrengthened | BoundKind::HongBelowStanley => {
                "(sqrt(8m+1)-1)/2"
            }
            BoundKind::Hong => "sqrt(2m-n+1)",
            BoundKind::InertiaRatioVsChi => "chi",
            BoundKind::RandicSpectralLower => "R",
            BoundKind::SPlusConjecture => "2m-n+1",
        }
    }

    /// Bounds the papers only conjecture; their violations are observations.
    pub fn is_conjectural(&self) -> bool {
        matches!(self, BoundKind::SPlusConjecture)
    }
}

/// One evaluated inequality on one graph.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub graph6: String,
    pub bound: BoundKind,
    pub lhs: f64,
    pub rhs: f64,
    /// rhs - lhs; negative beyond tolerance means the bound failed.
    pub slack: f64,
    pub equality: bool,
}

/// A bound not evaluated on this graph, with the hypothesis that failed.
#[derive(Clone, Debug, Serialize)]
pub struct SkippedBound {
    pub bound: BoundKind,
    pub reason: &'static str,
}

#[derive(Clone, Debug, Serialize, Default)]
pub struct BoundEvaluation {
    pub reports: Vec<BoundReport>,
    pub skipped: Vec<SkippedBound>,
}

impl BoundEvaluation {
    pub fn report(&self, kind: BoundKind) -> Option<&BoundReport> {
        self.reports.iter().find(|r| r.bound == kind)
    }
}

/// Precomputed invariants the bounds are stated in terms of.
#[derive(Clone, Debug)]
pub struct BoundContext {
    pub n: usize,
    pub m: usize,
    pub col: usize,
    /// None when the graph is above the chromatic search cap.
    pub chi: Option<u32>,
    /// None when the graph is above the achromatic search cap.
    pub psi: Option<u32>,
    pub randic: f64,
    pub connected: bool,
    pub has_isolated: bool,
}

/// Evaluates every spectral bound that applies to `g`'s invariants, skipping
/// the rest with the reason marked. `equality` uses `|slack| <= tol` except for
/// the all-integer col(col-1) <= 2m, which is exact.
pub fn evaluate_spectral_bounds(
    graph6: &str,
    summary: &SpectralSummary,
    ctx: &BoundContext,
    tol: f64,
) -> BoundEvaluation {
    let mut reports: Vec<BoundReport> = Vec::new();
    let mut skipped: Vec<SkippedBound> = Vec::new();
    let mut push = |bound, lhs: f64, rhs: f64, exact_equality: Option<bool>| {
        let slack = rhs - lhs;
        reports.push(BoundReport {
            graph6: graph6.to_string(),
            bound,
            lhs,
            rhs,
            slack,
            equality: exact_equality.unwrap_or(slack.abs() <= tol),
        });
    };

    let two_m = 2.0 * ctx.m as f64;
    let mu = summary.mu();
    let sqrt_s_plus = summary.s_plus.sqrt();
    let stanley = ((8.0 * ctx.m as f64 + 1.0).sqrt() - 1.0) / 2.0;
    let col = ctx.col as f64;

    if ctx.m == 0 {
        for bound in [
            BoundKind::AchromaticSpectral,
            BoundKind::SqrtSPlusVsMu,
            BoundKind::MuVsRandic,
            BoundKind::ColoringSpectral,
            BoundKind::InertiaRatioVsChi,
            BoundKind::RandicSpectralLower,
        ] {
            skipped.push(SkippedBound {
                bound,
                reason: "m = 0: bound divides by a spectral quantity that vanishes",
            });
        }
    } else {
        match ctx.psi {
            Some(psi) => push(
                BoundKind::AchromaticSpectral,
                psi as f64,
                two_m / sqrt_s_plus,
                None,
            ),
            None => skipped.push(SkippedBound {
                bound: BoundKind::AchromaticSpectral,
                reason: "psi not computed (order above the search cap)",
            }),
        }
        push(
            BoundKind::SqrtSPlusVsMu,
            two_m / sqrt_s_plus,
            two_m / mu,
            None,
        );
        push(BoundKind::MuVsRandic, two_m / mu, 2.0 * ctx.randic, None);
        push(
            BoundKind::ColoringSpectral,
            col,
            two_m / sqrt_s_plus,
            None,
        );
        match ctx.chi {
            Some(chi) => push(
                BoundKind::InertiaRatioVsChi,
                1.0 + summary.s_plus / summary.s_minus,
                chi as f64,
                None,
            ),
            None => skipped.push(SkippedBound {
                bound: BoundKind::InertiaRatioVsChi,
                reason: "chi not computed (order above the search cap)",
            }),
        }
        push(
            BoundKind::RandicSpectralLower,
            ctx.m as f64 / mu,
            ctx.randic,
            None,
        );
    }

    let lhs_quad = ctx.col * ctx.col.saturating_sub(1);
    push(
        BoundKind::ColQuadratic,
        lhs_quad as f64,
        two_m,
        Some(lhs_quad == 2 * ctx.m),
    );
    push(
        BoundKind::SPlusPlusRoot,
        summary.s_plus + sqrt_s_plus,
        two_m,
        None,
    );
    push(BoundKind::StanleyStrengthened, sqrt_s_plus, stanley, None);

    if ctx.has_isolated {
        for bound in [BoundKind::Hong, BoundKind::HongBelowStanley] {
            skipped.push(SkippedBound {
                bound,
                reason: "isolated vertices present (hypothesis of the bound)",
            });
        }
    } else {
        let hong = (two_m - ctx.n as f64 + 1.0).sqrt();
        push(BoundKind::Hong, mu, hong, None);
        push(BoundKind::HongBelowStanley, hong, stanley, None);
    }

    if ctx.connected {
        push(
            BoundKind::SPlusConjecture,
            summary.s_plus,
            two_m - ctx.n as f64 + 1.0,
            None,
        );
    } else {
        skipped.push(SkippedBound {
            bound: BoundKind::SPlusConjecture,
            reason: "conjecture is stated for connected graphs",
        });
    }

    drop(push);
    BoundEvaluation { reports, skipped }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring;
    use crate::indices;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} != {b} (tol {tol})");
    }

    #[test]
    fn path_four_spectrum() {
        let s = eigenvalues(&Graph::path(4).unwrap());
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        close(s.eigenvalues[0], phi, 1e-9);
        close(s.eigenvalues[1], phi - 1.0, 1e-9);
        close(s.eigenvalues[2], 1.0 - phi, 1e-9);
        close(s.eigenvalues[3], -phi, 1e-9);
        close(s.s_plus, 3.0, 1e-9);
        close(s.s_minus, 3.0, 1e-9);
        assert_eq!((s.positive, s.negative, s.zero), (2, 2, 0));
        assert!(!s.near_zero);
    }

    #[test]
    fn complete_graph_spectrum() {
        for n in 2..=8usize {
            let s = eigenvalues(&Graph::complete(n).unwrap());
            close(s.eigenvalues[0], (n - 1) as f64, 1e-9);
            for &mu in &s.eigenvalues[1..] {
                close(mu, -1.0, 1e-9);
            }
            close(s.s_plus, ((n - 1) * (n - 1)) as f64, 1e-8);
            close(s.s_minus, (n - 1) as f64, 1e-8);
            assert_eq!((s.positive, s.negative, s.zero), (1, n - 1, 0));
        }
    }

    #[test]
    fn edgeless_and_empty() {
        let s = eigenvalues(&Graph::empty(5).unwrap());
        assert_eq!((s.positive, s.negative, s.zero), (0, 0, 5));
        assert_eq!((s.s_plus, s.s_minus), (0.0, 0.0));
        let s = eigenvalues(&Graph::empty(0).unwrap());
        assert!(s.eigenvalues.is_empty());
    }

    #[test]
    fn star_spectrum_has_zero_eigenvalues() {
        // K_{1,4}: eigenvalues are +-2 and three zeros
        let s = eigenvalues(&Graph::star(5).unwrap());
        close(s.eigenvalues[0], 2.0, 1e-9);
        close(s.eigenvalues[4], -2.0, 1e-9);
        assert_eq!((s.positive, s.negative, s.zero), (1, 1, 3));
        close(s.s_plus, 4.0, 1e-9);
    }

    fn context(g: &Graph) -> BoundContext {
        BoundContext {
            n: g.n(),
            m: g.m(),
            col: coloring::coloring_number(g),
            chi: coloring::chromatic_number(g).ok(),
            psi: coloring::achromatic_number(g).ok(),
            randic: indices::randic(g),
            connected: g.is_connected(),
            has_isolated: g.has_isolated_vertex(),
        }
    }

    #[test]
    fn path_four_bound_values() {
        let g = Graph::path(4).unwrap();
        let s = eigenvalues(&g);
        let eval = evaluate_spectral_bounds("Ch", &s, &context(&g), SPECTRAL_SLACK_TOL);
        let psi_bound = eval.report(BoundKind::AchromaticSpectral).unwrap();
        close(psi_bound.rhs, 6.0 / 3f64.sqrt(), 1e-6); // 3.4641
        assert!(psi_bound.slack >= 0.0);
        let mu_bound = eval.report(BoundKind::SqrtSPlusVsMu).unwrap();
        close(mu_bound.rhs, 3.7082039325, 1e-6);
        assert!(eval.reports.iter().all(|r| r.slack >= -SPECTRAL_SLACK_TOL));
        assert!(eval.skipped.is_empty());
    }

    #[test]
    fn complete_graph_chain_collapses() {
        for n in 2..=7usize {
            let g = Graph::complete(n).unwrap();
            let s = eigenvalues(&g);
            let eval = evaluate_spectral_bounds("", &s, &context(&g), SPECTRAL_SLACK_TOL);
            // 2m/mu = n = 2R for regular graphs
            let r = eval.report(BoundKind::MuVsRandic).unwrap();
            assert!(r.equality, "K_{n} chain should collapse");
            // conjecture probe is tight: s+ = (n-1)^2 = 2m - n + 1
            let probe = eval.report(BoundKind::SPlusConjecture).unwrap();
            assert!(probe.equality);
            // Hong is tight on K2 only
            let hong = eval.report(BoundKind::Hong).unwrap();
            assert_eq!(hong.equality, n == 2);
        }
    }

    #[test]
    fn ando_lin_tight_on_k3() {
        let g = Graph::complete(3).unwrap();
        let s = eigenvalues(&g);
        let eval = evaluate_spectral_bounds("", &s, &context(&g), SPECTRAL_SLACK_TOL);
        let r = eval.report(BoundKind::InertiaRatioVsChi).unwrap();
        close(r.lhs, 3.0, 1e-8);
        assert!(r.equality);
    }

    #[test]
    fn skip_reasons() {
        let g = Graph::empty(3).unwrap();
        let s = eigenvalues(&g);
        let eval = evaluate_spectral_bounds("B?", &s, &context(&g), SPECTRAL_SLACK_TOL);
        assert!(eval.report(BoundKind::AchromaticSpectral).is_none());
        assert!(eval
            .skipped
            .iter()
            .any(|s| s.bound == BoundKind::Hong && s.reason.contains("isolated")));
        // col(col-1) <= 2m still evaluates: 1*0 <= 0
        let quad = eval.report(BoundKind::ColQuadratic).unwrap();
        assert!(quad.equality);

        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = eigenvalues(&disconnected);
        let eval =
            evaluate_spectral_bounds("", &s, &context(&disconnected), SPECTRAL_SLACK_TOL);
        assert!(eval
            .skipped
            .iter()
            .any(|s| s.bound == BoundKind::SPlusConjecture));
    }
}
