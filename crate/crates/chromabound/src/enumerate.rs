//! Exhaustive enumeration of non-isomorphic graphs on up to seven vertices.
//!
//! Strategy: sweep all `2^(n(n-1)/2)` labeled graphs and deduplicate by
//! canonical form. At n = 7 that is 2,097,152 labeled graphs, which stays
//! within desk scale and keeps the corpus self-verifying; larger orders are
//! ingested from external graph6 files instead.

use std::collections::HashSet;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{Graph, GraphError};

/// Largest order enumerated exhaustively.
pub const ENUMERATION_MAX_VERTICES: usize = 7;

/// Corpus filters applied to the isomorphism-class representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFilter {
    All,
    Connected,
    NoIsolated,
}

impl GraphFilter {
    fn admits(&self, g: &Graph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::Connected => g.is_connected(),
            GraphFilter::NoIsolated => !g.has_isolated_vertex(),
        }
    }
}

/// Returns exactly one representative per isomorphism class on `n` vertices
/// satisfying `filter`, in ascending canonical-form order.
pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > ENUMERATION_MAX_VERTICES {
        return Err(GraphError::EnumerationUnsupported {
            n,
            max: ENUMERATION_MAX_VERTICES,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![0u64; n];
        let mut bits = mask;
        while bits != 0 {
            let t = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (i, j) = pairs[t];
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        let g = Graph::from_adjacency_unchecked(n, adj);
        seen.insert(canonical_form(&g).expect("n is within the canonical limit"));
    }
    let mut forms: Vec<CanonicalForm> = seen.into_iter().collect();
    forms.sort_unstable();
    Ok(forms
        .into_iter()
        .map(|cf| cf.to_graph())
        .filter(|g| filter.admits(g))
        .collect())
}

/// Trees on `n` vertices: the connected classes with `m = n - 1`.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    Ok(enumerate_graphs(n, GraphFilter::Connected)?
        .into_iter()
        .filter(|g| g.m() + 1 == g.n())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // unlabeled simple graphs: 1, 2, 4, 11, 34 for n = 1..5
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            assert_eq!(enumerate_graphs(n, GraphFilter::All).unwrap().len(), expected);
        }
    }

    #[test]
    fn connected_counts() {
        // connected unlabeled graphs: 1, 1, 2, 6, 21 for n = 1..5
        for (n, expected) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)] {
            assert_eq!(
                enumerate_graphs(n, GraphFilter::Connected).unwrap().len(),
                expected
            );
        }
    }

    #[test]
    fn no_isolated_counts() {
        // on 4 vertices: 2K2, P4, K(1,3), C4, paw, diamond, K4
        assert_eq!(
            enumerate_graphs(4, GraphFilter::NoIsolated).unwrap().len(),
            7
        );
    }

    #[test]
    fn tree_counts() {
        for (n, expected) in [(2, 1), (3, 1), (4, 2), (5, 3), (6, 6)] {
            assert_eq!(enumerate_trees(n).unwrap().len(), expected);
        }
    }

    #[test]
    fn deterministic_and_duplicate_free() {
        let a = enumerate_graphs(5, GraphFilter::All).unwrap();
        let b = enumerate_graphs(5, GraphFilter::All).unwrap();
        assert_eq!(a, b);
        let forms: HashSet<CanonicalForm> =
            a.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), a.len());
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(enumerate_graphs(0, GraphFilter::All).is_err());
        assert!(enumerate_graphs(8, GraphFilter::All).is_err());
    }
}
