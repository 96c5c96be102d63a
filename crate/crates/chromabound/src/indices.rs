//! The Randic index R, the harmonic index H, and the max-degree variant R',
//! plus the vertex-deletion monotonicity machinery for R'.
//!
//! H and R' are computed in exact rational arithmetic because every equality
//! characterization downstream (col = 2R', col = 2H, R' = 1 on trees) is an
//! if-and-only-if that tolerance-based comparison would make unsound. R sums
//! irrational terms, so it uses compensated floating-point accumulation and all
//! comparisons against it carry an explicit slack.

use thiserror::Error;

use crate::graph::Graph;
use crate::rational::Rational;

/// Absolute slack allowed when the floating R side of chain (1) is compared
/// against the exact H side.
pub const RANDIC_CHAIN_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex {vertex} has degree {degree}; the minimum degree is {min_degree}")]
    NotMinimumDegree {
        vertex: usize,
        degree: usize,
        min_degree: usize,
    },
}

/// Sum over edges of `1/sqrt(d(u) d(v))`, Kahan-compensated. 0 when edgeless.
pub fn randic(g: &Graph) -> f64 {
    let mut sum = 0.0;
    let mut carry = 0.0;
    for (u, v) in g.edges() {
        let term = 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt();
        let y = term - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Sum over edges of `2/(d(u) + d(v))`, exact.
pub fn harmonic(g: &Graph) -> Rational {
    g.edges()
        .into_iter()
        .map(|(u, v)| Rational::new(2, (g.degree(u) + g.degree(v)) as i128))
        .sum()
}

/// Sum over edges of `1/max(d(u), d(v))`, exact.
pub fn r_prime(g: &Graph) -> Rational {
    g.edges()
        .into_iter()
        .map(|(u, v)| Rational::new(1, g.degree(u).max(g.degree(v)) as i128))
        .sum()
}

/// All three indices of one graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndexBundle {
    pub randic: f64,
    pub harmonic: Rational,
    pub r_prime: Rational,
}

impl IndexBundle {
    pub fn compute(g: &Graph) -> IndexBundle {
        let bundle = IndexBundle {
            randic: randic(g),
            harmonic: harmonic(g),
            r_prime: r_prime(g),
        };
        debug_assert!(bundle.r_prime <= bundle.harmonic);
        debug_assert!(bundle.harmonic.to_f64() <= bundle.randic + RANDIC_CHAIN_TOL);
        bundle
    }
}

/// Exact `R'(G) - R'(G - v)`. Non-negative whenever `d(v)` is the minimum
/// degree (checked in debug builds).
pub fn deletion_delta(g: &Graph, v: usize) -> Result<Rational, IndexError> {
    if v >= g.n() {
        return Err(IndexError::VertexOutOfRange {
            vertex: v,
            order: g.n(),
        });
    }
    let delta = r_prime(g) - r_prime(&g.delete_vertex(v).expect("v checked in range"));
    debug_assert!(
        g.degree(v) != g.min_degree() || delta >= Rational::ZERO,
        "deletion delta negative at a minimum-degree vertex"
    );
    Ok(delta)
}

/// Decides whether deleting the minimum-degree vertex `v` leaves R' unchanged.
///
/// Characterization: the neighborhood of `v` is independent and every neighbor
/// `v_i` has degree at least 2 with `d(w) < d(v_i)` for each `w` adjacent to
/// `v_i` other than `v`. (The degree-2 floor excludes the K2 component, where
/// the other conditions hold vacuously but the delta is 1.) Agrees with
/// `deletion_delta(g, v) == 0` on every input; that biconditional is verified
/// exhaustively over all graphs on up to seven vertices.
///
/// Errors unless `d(v)` equals the minimum degree of `g`.
pub fn equality_condition(g: &Graph, v: usize) -> Result<bool, IndexError> {
    if v >= g.n() {
        return Err(IndexError::VertexOutOfRange {
            vertex: v,
            order: g.n(),
        });
    }
    let min_degree = g.min_degree();
    if g.degree(v) != min_degree {
        return Err(IndexError::NotMinimumDegree {
            vertex: v,
            degree: g.degree(v),
            min_degree,
        });
    }

    let neighborhood = g.neighbor_mask(v);
    for vi in g.neighbors(v) {
        // independence of N(v)
        if g.neighbor_mask(vi) & neighborhood != 0 {
            return Ok(false);
        }
        let di = g.degree(vi);
        if di < 2 {
            return Ok(false);
        }
        for w in g.neighbors(vi) {
            if w != v && g.degree(w) >= di {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
