//! Per-graph invariant records: the harness's unit of output.

use std::fmt;

use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm, CANON_MAX_VERTICES};
use crate::coloring;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::indices::IndexBundle;
use crate::rational::Rational;
use crate::spectral::{self, SpectralSummary};

/// Which named family a graph is isomorphic to, decided by canonical-form
/// comparison against generated references, never by heuristics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyMatch {
    None,
    Complete,
    Star,
    Kite { k: usize },
}

impl FamilyMatch {
    /// Kites include their degenerate cases: `K_n` is the k = n kite and the
    /// star is the k <= 2 kite. This is the equality family of col = 2R'.
    pub fn is_kite_family(&self) -> bool {
        !matches!(self, FamilyMatch::None)
    }
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyMatch::None => write!(f, "none"),
            FamilyMatch::Complete => write!(f, "complete"),
            FamilyMatch::Star => write!(f, "star"),
            FamilyMatch::Kite { k } => write!(f, "kite({k})"),
        }
    }
}

impl Serialize for FamilyMatch {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Determines the family of `g`, or `None` when `g` is too large for
/// canonical-form comparison.
pub fn family_match(g: &Graph) -> Option<FamilyMatch> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return None;
    }
    if n == 0 {
        return Some(FamilyMatch::None);
    }
    let cf = canonical_form(g).expect("n within canonical limit");
    let reference = |h: &Graph| canonical_form(h).expect("n within canonical limit");
    if cf == reference(&Graph::complete(n).expect("n >= 1")) {
        return Some(FamilyMatch::Complete);
    }
    if n >= 2 && cf == reference(&Graph::star(n).expect("n >= 2")) {
        return Some(FamilyMatch::Star);
    }
    for k in 3..n {
        if cf == reference(&Graph::kite(n, k).expect("parameters in range")) {
            return Some(FamilyMatch::Kite { k });
        }
    }
    Some(FamilyMatch::None)
}

/// True when `g` is isomorphic to the star on its order (`K_{1,n-1}`); used
/// by the tree-lemma equality check. `K_2` counts (it is `K_{1,1}`).
pub fn is_star(g: &Graph) -> bool {
    g.n() >= 2
        && g.n() <= CANON_MAX_VERTICES
        && canonical_form(g).expect("within limit")
            == canonical_form(&Graph::star(g.n()).expect("n >= 2")).expect("within limit")
}

/// Paper equalities attained by one graph, decided in exact arithmetic.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EqualityFlags {
    /// col = 2R' (the col <= 2R' equality family).
    pub col_eq_two_r_prime: bool,
    /// chi = 2R'; absent when chi is above the search cap.
    pub chi_eq_two_r_prime: Option<bool>,
    /// col = 2H (equality exactly on complete graphs).
    pub col_eq_two_h: bool,
}

/// Every invariant of one graph. Serializes as one JSON object with a fixed
/// field order; rationals appear as exact `"p/q"` strings plus a float
/// convenience field.
#[derive(Clone, Debug, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Chromatic number; null above the search cap (order 10).
    pub chi: Option<u32>,
    pub col: usize,
    /// Grundy number; null above the search cap (order 9).
    pub grundy: Option<u32>,
    /// Achromatic number; null above the search cap (order 9).
    pub psi: Option<u32>,
    pub randic: f64,
    pub harmonic: Rational,
    pub harmonic_float: f64,
    pub r_prime: Rational,
    pub r_prime_float: f64,
    pub spectral: SpectralSummary,
    pub equality_flags: EqualityFlags,
    /// Family identification; null when the order exceeds the canonical limit.
    pub family_match: Option<FamilyMatch>,
}

impl GraphRecord {
    /// Computes the record, deriving the graph6 id from the graph itself.
    pub fn compute(g: &Graph) -> GraphRecord {
        let id = to_graph6(g).unwrap_or_else(|_| format!("<n={} unencodable>", g.n()));
        GraphRecord::compute_with_id(g, id)
    }

    /// Computes the record, labeling it with a caller-supplied graph6 id (the
    /// original input line for ingested corpora).
    pub fn compute_with_id(g: &Graph, graph6: String) -> GraphRecord {
        let bundle = IndexBundle::compute(g);
        let col = coloring::coloring_number(g);
        let chi = coloring::chromatic_number(g).ok();
        let two = |r: Rational| r * 2;
        GraphRecord {
            graph6,
            n: g.n(),
            m: g.m(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            chi,
            col,
            grundy: coloring::grundy_number(g).ok(),
            psi: coloring::achromatic_number(g).ok(),
            randic: bundle.randic,
            harmonic: bundle.harmonic,
            harmonic_float: bundle.harmonic.to_f64(),
            r_prime: bundle.r_prime,
            r_prime_float: bundle.r_prime.to_f64(),
            spectral: spectral::eigenvalues(g),
            equality_flags: EqualityFlags {
                col_eq_two_r_prime: Rational::from_integer(col as i128)
                    == two(bundle.r_prime),
                chi_eq_two_r_prime: chi
                    .map(|chi| Rational::from_integer(chi as i128) == two(bundle.r_prime)),
                col_eq_two_h: Rational::from_integer(col as i128) == two(bundle.harmonic),
            },
            family_match: family_match(g),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// Flat CSV row matching [`csv_header`]. Unavailable invariants serialize
    /// as empty cells; floats use nine fixed decimals.
    pub fn to_csv_row(&self) -> String {
        let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        let f = |x: f64| format!("{x:.9}");
        let mu = |i: usize| {
            self.spectral
                .eigenvalues
                .get(i)
                .map(|&x| f(x))
                .unwrap_or_default()
        };
        [
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.min_degree.to_string(),
            self.max_degree.to_string(),
            opt(self.chi),
            self.col.to_string(),
            opt(self.grundy),
            opt(self.psi),
            f(self.randic),
            self.harmonic.to_string(),
            f(self.harmonic_float),
            self.r_prime.to_string(),
            f(self.r_prime_float),
            mu(0),
            mu(1),
            self.spectral.positive.to_string(),
            self.spectral.negative.to_string(),
            self.spectral.zero.to_string(),
            f(self.spectral.s_plus),
            f(self.spectral.s_minus),
            format!("{:e}", self.spectral.zero_tol),
            self.spectral.near_zero.to_string(),
            self.family_match
                .map(|fm| fm.to_string())
                .unwrap_or_default(),
            self.equality_flags.col_eq_two_r_prime.to_string(),
            self.equality_flags
                .chi_eq_two_r_prime
                .map(|b| b.to_string())
                .unwrap_or_default(),
            self.equality_flags.col_eq_two_h.to_string(),
        ]
        .join(",")
    }
}

pub fn csv_header() -> &'static str {
    "graph6,n,m,min_degree,max_degree,chi,col,grundy,psi,randic,harmonic,harmonic_float,\
     r_prime,r_prime_float,mu1,mu2,pi,nu,zero,s_plus,s_minus,zero_tol,near_zero,\
     family_match,col_eq_two_r_prime,chi_eq_two_r_prime,col_eq_two_h"
}

/// The worked example: every quantity discussed in the bounds, evaluated on
/// the path P4, shown at the customary display precision next to full
/// precision.
#[derive(Clone, Debug)]
pub struct P4Example {
    pub rows: Vec<P4Row>,
}

#[derive(Clone, Debug)]
pub struct P4Row {
    pub quantity: &'static str,
    pub value: String,
    pub full: String,
}

pub fn example_p4() -> P4Example {
    let g = Graph::path(4).expect("P4 exists");
    let record = GraphRecord::compute(&g);
    let two_m = 2.0 * record.m as f64;
    let mu1 = record.spectral.eigenvalues[0];
    let mu2 = record.spectral.eigenvalues[1];
    let two_h = record.harmonic * 2;
    let two_rp = record.r_prime * 2;

    let int = |v: u32| P4Row::int(v);
    let rows = vec![
        P4Row {
            quantity: "chi",
            ..int(record.chi.expect("n=4 within cap"))
        },
        P4Row {
            quantity: "col",
            ..int(record.col as u32)
        },
        P4Row {
            quantity: "Gamma",
            ..int(record.grundy.expect("n=4 within cap"))
        },
        P4Row {
            quantity: "psi",
            ..int(record.psi.expect("n=4 within cap"))
        },
        P4Row {
            quantity: "Delta+1",
            ..int(record.max_degree as u32 + 1)
        },
        P4Row {
            quantity: "2R'",
            value: two_rp.to_string(),
            full: format!("{:.9}", two_rp.to_f64()),
        },
        P4Row {
            quantity: "2H",
            value: format!("{:.2}", two_h.to_f64()),
            full: format!("{:.9}", two_h.to_f64()),
        },
        P4Row {
            quantity: "2R",
            value: format!("{:.2}", 2.0 * record.randic),
            full: format!("{:.9}", 2.0 * record.randic),
        },
        P4Row {
            quantity: "mu1",
            value: format!("{mu1:.3}"),
            full: format!("{mu1:.9}"),
        },
        P4Row {
            quantity: "mu2",
            value: format!("{mu2:.3}"),
            full: format!("{mu2:.9}"),
        },
        P4Row {
            quantity: "2m/mu1",
            value: format!("{:.2}", two_m / mu1),
            full: format!("{:.9}", two_m / mu1),
        },
        P4Row {
            quantity: "2m/sqrt(s+)",
            value: format!("{:.2}", two_m / record.spectral.s_plus.sqrt()),
            full: format!("{:.9}", two_m / record.spectral.s_plus.sqrt()),
        },
    ];
    P4Example { rows }
}

impl P4Row {
    fn int(v: u32) -> P4Row {
        P4Row {
            quantity: "",
            value: v.to_string(),
            full: v.to_string(),
        }
    }
}

impl P4Example {
    pub fn value_of(&self, quantity: &str) -> Option<&str> {
        self.rows
            .iter()
            .find(|r| r.quantity == quantity)
            .map(|r| r.value.as_str())
    }
}

impl fmt::Display for P4Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "G = P4 (graph6 \"Ch\"), n = 4, m = 3")?;
        writeln!(f, "{:<12} {:>8}   {:>12}", "quantity", "value", "full")?;
        for row in &self.rows {
            writeln!(f, "{:<12} {:>8}   {:>12}", row.quantity, row.value, row.full)?;
        }
        Ok(())
    }
}

/// Canonical form of a reference family member, used by the suites to check
/// equality families both ways.
pub fn reference_form(g: &Graph) -> CanonicalForm {
    canonical_form(g).expect("reference families stay within the canonical limit")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_detection_is_exact() {
        assert_eq!(
            family_match(&Graph::complete(5).unwrap()),
            Some(FamilyMatch::Complete)
        );
        assert_eq!(
            family_match(&Graph::star(5).unwrap()),
            Some(FamilyMatch::Star)
        );
        assert_eq!(
            family_match(&Graph::kite(6, 4).unwrap()),
            Some(FamilyMatch::Kite { k: 4 })
        );
        // a relabeled kite still matches
        let shuffled = Graph::kite(6, 4).unwrap().relabel(&[5, 3, 0, 2, 4, 1]).unwrap();
        assert_eq!(family_match(&shuffled), Some(FamilyMatch::Kite { k: 4 }));
        assert_eq!(
            family_match(&Graph::path(4).unwrap()),
            Some(FamilyMatch::None)
        );
        assert_eq!(
            family_match(&Graph::complete(2).unwrap()),
            Some(FamilyMatch::Complete)
        );
        assert!(is_star(&Graph::complete(2).unwrap()));
        assert!(family_match(&Graph::empty(12).unwrap()).is_none());
    }

    #[test]
    fn p4_record_matches_worked_example() {
        let g = Graph::path(4).unwrap();
        let r = GraphRecord::compute(&g);
        assert_eq!(r.graph6, "Ch");
        assert_eq!(r.chi, Some(2));
        assert_eq!(r.col, 2);
        assert_eq!(r.grundy, Some(3));
        assert_eq!(r.psi, Some(3));
        assert_eq!(r.r_prime, Rational::new(3, 2));
        assert_eq!(r.harmonic, Rational::new(11, 6));
        assert!(r.equality_flags.col_eq_two_r_prime == false);
        assert!((r.spectral.eigenvalues[0] - 1.6180339887).abs() < 1e-8);
    }

    #[test]
    fn p4_table_prints_paper_values() {
        let table = example_p4();
        for (quantity, expected) in [
            ("chi", "2"),
            ("col", "2"),
            ("Gamma", "3"),
            ("psi", "3"),
            ("Delta+1", "3"),
            ("2R'", "3"),
            ("2H", "3.67"),
            ("2R", "3.83"),
            ("mu1", "1.618"),
            ("mu2", "0.618"),
            ("2m/mu1", "3.71"),
            ("2m/sqrt(s+)", "3.46"),
        ] {
            assert_eq!(table.value_of(quantity), Some(expected), "{quantity}");
        }
        let rendered = table.to_string();
        assert!(rendered.contains("3.67") && rendered.contains("3.46"));
    }

    #[test]
    fn json_and_csv_are_stable() {
        let r = GraphRecord::compute(&Graph::complete(3).unwrap());
        let json = r.to_json_line();
        assert!(json.starts_with("{\"graph6\":\"Bw\""));
        assert!(json.contains("\"family_match\":\"complete\""));
        assert!(json.contains("\"harmonic\":\"3/2\""));
        let row = r.to_csv_row();
        assert_eq!(row.split(',').count(), csv_header().split(',').count());
        assert!(row.starts_with("Bw,3,3,2,2,3,3,3,3,"));
    }
}
