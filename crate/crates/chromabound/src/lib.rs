//! Graph-invariant computation and verification over small-graph corpora.
//!
//! The library computes three families of invariants of simple undirected
//! graphs and verifies the inequalities relating them over exhaustively
//! enumerated corpora:
//!
//! - Randic-family indices: R, the harmonic index H, and the max-degree
//!   variant R', with H and R' in exact rational arithmetic ([`indices`],
//!   [`rational`]).
//! - Combinatorial coloring invariants: chromatic number, coloring number /
//!   degeneracy, Grundy number, achromatic number, with witness colorings and
//!   validators ([`coloring`]).
//! - Adjacency-spectrum quantities: eigenvalues, inertia, the square sums s+
//!   and s-, and the spectral bounds on the coloring and achromatic numbers
//!   ([`spectral`]).
//!
//! [`graph`] and [`graph6`] provide the representation and I/O, [`canon`] and
//! [`enumerate`] isomorphism-deduplicated exhaustive enumeration, [`record`]
//! per-graph reports, and [`suite`] the verification suites and conjecture
//! hunts exposed by the CLI.

pub mod canon;
pub mod coloring;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod rational;
pub mod record;
pub mod spectral;
pub mod suite;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use graph::{Family, Graph, GraphError};
pub use graph6::{parse_graph6, to_graph6};
pub use rational::Rational;
pub use record::{example_p4, GraphRecord};
pub use suite::{Conjecture, Suite, SuiteResult, VerifyOptions};
