//! Exact coloring invariants: degeneracy / coloring number via the
//! smallest-last ordering, chromatic number, Grundy number, achromatic number,
//! and validators for each coloring class.
//!
//! The search-based invariants carry explicit order caps (chromatic 10, Grundy
//! and achromatic 9); every tie anywhere breaks toward the smallest vertex id,
//! so all outputs are deterministic. Each number has a `_coloring` variant that
//! returns a witness so validators, not trust, certify results.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::Graph;

/// Order cap for the chromatic-number search.
pub const CHROMATIC_MAX_VERTICES: usize = 10;
/// Order cap for the Grundy and achromatic searches.
pub const SEARCH_MAX_VERTICES: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("{invariant} search supports n <= {limit}, got {n}")]
    OrderAboveLimit {
        invariant: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("coloring assigns {got} vertices, graph has {expected}")]
    WrongVertexCount { expected: usize, got: usize },
    #[error("vertex {vertex} has invalid color {color}")]
    InvalidColor { vertex: usize, color: u32 },
    #[error("color {color} is never used")]
    UnusedColor { color: u32 },
}

/// A vertex -> color map using colors `1..=k`, every color used at least once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Coloring, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k as usize + 1];
        for (vertex, &color) in colors.iter().enumerate() {
            if color == 0 {
                return Err(ColoringError::InvalidColor { vertex, color });
            }
            used[color as usize] = true;
        }
        for color in 1..=k {
            if !used[color as usize] {
                return Err(ColoringError::UnusedColor { color });
            }
        }
        Ok(Coloring { colors, k })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_count(&self) -> u32 {
        self.k
    }
}

/// Validity classes a coloring can certify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoringClass {
    /// No edge is monochromatic.
    Proper,
    /// Proper, and every pair of distinct colors appears on some edge.
    Complete,
    /// Proper, and every vertex sees all smaller colors in its neighborhood.
    Grundy,
}

/// Checks `c` against the rules of `class`. Errors if `c` does not assign
/// exactly the vertices of `g`.
pub fn validate(g: &Graph, c: &Coloring, class: ColoringClass) -> Result<bool, ColoringError> {
    if c.colors.len() != g.n() {
        return Err(ColoringError::WrongVertexCount {
            expected: g.n(),
            got: c.colors.len(),
        });
    }
    let proper = g.edges().iter().all(|&(u, v)| c.colors[u] != c.colors[v]);
    let ok = match class {
        ColoringClass::Proper => proper,
        ColoringClass::Complete => {
            proper && {
                let k = c.k as usize;
                let mut covered = vec![false; k * k];
                for (u, v) in g.edges() {
                    let (a, b) = (c.colors[u] as usize - 1, c.colors[v] as usize - 1);
                    covered[a * k + b] = true;
                    covered[b * k + a] = true;
                }
                (0..k).all(|a| (a + 1..k).all(|b| covered[a * k + b]))
            }
        }
        ColoringClass::Grundy => {
            proper
                && g.vertices().all(|v| {
                    let mut seen = 0u64;
                    for w in g.neighbors(v) {
                        seen |= 1 << (c.colors[w] & 63);
                    }
                    (1..c.colors[v]).all(|smaller| seen >> smaller & 1 == 1)
                })
        }
    };
    Ok(ok)
}

/// The smallest-last ordering: position `i` holds a vertex of minimum degree
/// in the graph induced by positions `0..=i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<usize>,
    /// `max over subgraphs H of min-degree(H)`, realized by this ordering.
    pub degeneracy: usize,
    /// Per position, the number of neighbors at earlier positions.
    pub back_degrees: Vec<usize>,
}

pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut order = vec![0usize; n];
    let mut back_degrees = vec![0usize; n];
    for i in (0..n).rev() {
        let v = (0..n)
            .filter(|&v| remaining >> v & 1 == 1)
            .min_by_key(|&v| (degrees[v], v))
            .expect("remaining is nonempty");
        order[i] = v;
        back_degrees[i] = degrees[v];
        remaining &= !(1 << v);
        let mut nb = g.neighbor_mask(v) & remaining;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            degrees[w] -= 1;
        }
    }
    DegeneracyOrdering {
        order,
        degeneracy: back_degrees.iter().copied().max().unwrap_or(0),
        back_degrees,
    }
}

/// `col(G) = degeneracy + 1`; 0 for the empty graph, 1 for edgeless graphs.
pub fn coloring_number(g: &Graph) -> usize {
    if g.n() == 0 {
        0
    } else {
        degeneracy_ordering(g).degeneracy + 1
    }
}

/// Greedy clique in descending-degree order; a deterministic lower bound for
/// the chromatic search.
fn greedy_clique_size(g: &Graph) -> usize {
    let mut verts: Vec<usize> = g.vertices().collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique = 0u64;
    let mut size = 0;
    for v in verts {
        if g.neighbor_mask(v) & clique == clique {
            clique |= 1 << v;
            size += 1;
        }
    }
    size
}

pub fn chromatic_number(g: &Graph) -> Result<u32, ColoringError> {
    chromatic_coloring(g).map(|(k, _)| k)
}

/// Exact chromatic number with a witness, by k-colorability backtracking for k
/// ascending from the greedy clique bound to the coloring number.
pub fn chromatic_coloring(g: &Graph) -> Result<(u32, Coloring), ColoringError> {
    let n = g.n();
    if n > CHROMATIC_MAX_VERTICES {
        return Err(ColoringError::OrderAboveLimit {
            invariant: "chromatic number",
            n,
            limit: CHROMATIC_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new())?));
    }
    if g.m() == 0 {
        return Ok((1, Coloring::new(vec![1; n])?));
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = greedy_clique_size(g).max(2);
    let upper = coloring_number(g);
    let mut colors = vec![0u32; n];
    for k in lower as u32..=upper as u32 {
        if color_with(g, &order, k, 0, 0, &mut colors) {
            let witness = Coloring::new(colors)?;
            debug_assert!(validate(g, &witness, ColoringClass::Proper).unwrap());
            return Ok((witness.color_count(), witness));
        }
    }
    unreachable!("a coloring_number-coloring always exists");
}

fn color_with(
    g: &Graph,
    order: &[usize],
    k: u32,
    pos: usize,
    max_used: u32,
    colors: &mut Vec<u32>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    // colors above max_used + 1 are interchangeable with it; skip them
    for c in 1..=k.min(max_used + 1) {
        if g.neighbors(v).all(|w| colors[w] != c) {
            colors[v] = c;
            if color_with(g, order, k, pos + 1, max_used.max(c), colors) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

pub fn grundy_number(g: &Graph) -> Result<u32, ColoringError> {
    grundy_coloring(g).map(|(k, _)| k)
}

/// Exact Grundy number with a witness.
///
/// Explores every first-fit coloring reachable by some vertex ordering;
/// partial colorings are deduplicated (orders that color the same vertices the
/// same way are explored once) and branches that cannot beat the incumbent are
/// cut by the `max color + uncolored vertices` bound.
pub fn grundy_coloring(g: &Graph) -> Result<(u32, Coloring), ColoringError> {
    let n = g.n();
    if n > SEARCH_MAX_VERTICES {
        return Err(ColoringError::OrderAboveLimit {
            invariant: "Grundy number",
            n,
            limit: SEARCH_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new())?));
    }
    let mut search = GrundySearch {
        g,
        cap: g.max_degree() as u32 + 1,
        best: 0,
        best_state: 0,
        seen: HashSet::new(),
    };
    search.dfs(0, 0, n as u32);
    let colors: Vec<u32> = (0..n)
        .map(|v| (search.best_state >> (4 * v) & 0xf) as u32)
        .collect();
    let witness = Coloring::new(colors)?;
    debug_assert!(validate(g, &witness, ColoringClass::Grundy).unwrap());
    Ok((search.best, witness))
}

/// Partial colorings packed four bits per vertex (0 = uncolored); valid since
/// n <= 9 and colors never exceed max degree + 1 <= 9.
struct GrundySearch<'a> {
    g: &'a Graph,
    cap: u32,
    best: u32,
    best_state: u64,
    seen: HashSet<u64>,
}

impl GrundySearch<'_> {
    fn dfs(&mut self, state: u64, max_color: u32, uncolored: u32) {
        if uncolored == 0 {
            if max_color > self.best {
                self.best = max_color;
                self.best_state = state;
            }
            return;
        }
        if self.best == self.cap || max_color + uncolored <= self.best {
            return;
        }
        for v in self.g.vertices() {
            if state >> (4 * v) & 0xf != 0 {
                continue;
            }
            let mut neighbor_colors = 0u32;
            for w in self.g.neighbors(v) {
                let c = (state >> (4 * w) & 0xf) as u32;
                if c != 0 {
                    neighbor_colors |= 1 << c;
                }
            }
            let first_fit = (1u32..).find(|c| neighbor_colors >> c & 1 == 0).unwrap();
            let next = state | (first_fit as u64) << (4 * v);
            if self.seen.insert(next) {
                self.dfs(next, max_color.max(first_fit), uncolored - 1);
            }
        }
    }
}

pub fn achromatic_number(g: &Graph) -> Result<u32, ColoringError> {
    achromatic_coloring(g).map(|(k, _)| k)
}

/// Exact achromatic number with a witness, trying k downward from the largest
/// k with `k(k-1) <= 2m` (a complete k-coloring must realize every color pair
/// on a distinct edge).
pub fn achromatic_coloring(g: &Graph) -> Result<(u32, Coloring), ColoringError> {
    let n = g.n();
    if n > SEARCH_MAX_VERTICES {
        return Err(ColoringError::OrderAboveLimit {
            invariant: "achromatic number",
            n,
            limit: SEARCH_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new())?));
    }
    if g.m() == 0 {
        return Ok((1, Coloring::new(vec![1; n])?));
    }
    let two_m = 2 * g.m();
    let k_max = (1..=n).rev().find(|k| k * (k - 1) <= two_m).unwrap();

    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    // suffix_edges[p] = edges with an endpoint at order position >= p
    let mut position = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let mut suffix_edges = vec![0usize; n + 1];
    for (u, v) in g.edges() {
        suffix_edges[position[u].max(position[v])] += 1;
    }
    for p in (0..n).rev() {
        suffix_edges[p] += suffix_edges[p + 1];
    }

    for k in (2..=k_max as u32).rev() {
        let mut search = AchromaticSearch {
            g,
            order: &order,
            suffix_edges: &suffix_edges,
            k,
            colors: vec![0u32; n],
        };
        if search.dfs(0, 0, 0, 0) {
            let witness = Coloring::new(search.colors)?;
            debug_assert!(validate(g, &witness, ColoringClass::Complete).unwrap());
            return Ok((witness.color_count(), witness));
        }
    }
    // m >= 1 guarantees success by k = chromatic number >= 2
    unreachable!("a complete chi-coloring always exists");
}

struct AchromaticSearch<'a> {
    g: &'a Graph,
    order: &'a [usize],
    suffix_edges: &'a [usize],
    k: u32,
    colors: Vec<u32>,
}

impl AchromaticSearch<'_> {
    fn pair_bit(a: u32, b: u32) -> u64 {
        let (lo, hi) = (a.min(b) as u64 - 1, a.max(b) as u64 - 1);
        1 << (hi * (hi - 1) / 2 + lo)
    }

    fn dfs(&mut self, pos: usize, max_used: u32, covered: u64, covered_count: u32) -> bool {
        let n = self.order.len();
        let total_pairs = self.k * (self.k - 1) / 2;
        if total_pairs - covered_count > self.suffix_edges[pos] as u32 {
            return false; // remaining edges cannot cover the missing pairs
        }
        if max_used + ((n - pos) as u32) < self.k {
            return false; // not enough vertices left to introduce missing colors
        }
        if pos == n {
            return covered_count == total_pairs && max_used == self.k;
        }
        let v = self.order[pos];
        for c in 1..=self.k.min(max_used + 1) {
            let mut ok = true;
            let mut new_covered = covered;
            let mut new_count = covered_count;
            for w in self.g.neighbors(v) {
                let cw = self.colors[w];
                if cw == c {
                    ok = false;
                    break;
                }
                if cw != 0 {
                    let bit = Self::pair_bit(c, cw);
                    if new_covered & bit == 0 {
                        new_covered |= bit;
                        new_count += 1;
                    }
                }
            }
            if !ok {
                continue;
            }
            self.colors[v] = c;
            if self.dfs(pos + 1, max_used.max(c), new_covered, new_count) {
                return true;
            }
            self.colors[v] = 0;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        crate::testutil::petersen()
    }

    #[test]
    fn degeneracy_reference_values() {
        for n in 2..=7 {
            assert_eq!(degeneracy_ordering(&Graph::complete(n).unwrap()).degeneracy, n - 1);
            assert_eq!(coloring_number(&Graph::complete(n).unwrap()), n);
        }
        for tree in [Graph::path(6).unwrap(), Graph::star(6).unwrap()] {
            assert_eq!(degeneracy_ordering(&tree).degeneracy, 1);
            assert_eq!(coloring_number(&tree), 2);
        }
        assert_eq!(coloring_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(coloring_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(coloring_number(&Graph::cycle(5).unwrap()), 3);
        for n in 3..=7usize {
            for k in 2..=n {
                assert_eq!(coloring_number(&Graph::kite(n, k).unwrap()), k);
            }
        }
    }

    #[test]
    fn degeneracy_matches_brute_force_on_petersen() {
        let g = petersen();
        // independent oracle: max over all induced subgraphs of the min degree
        let mut best = 0;
        for mask in 1u64..1 << 10 {
            let h = g.induced_subgraph(mask);
            best = best.max(h.min_degree());
        }
        assert_eq!(best, 3);
        let ordering = degeneracy_ordering(&g);
        assert_eq!(ordering.degeneracy, 3);
        assert_eq!(coloring_number(&g), 4);
        // the ordering construction: position i has min degree among 0..=i
        for (i, &v) in ordering.order.iter().enumerate() {
            let mask = ordering.order[..=i].iter().fold(0u64, |m, &w| m | 1 << w);
            let induced = g.induced_subgraph(mask);
            let pos_in_induced = ordering.order[..=i].iter().filter(|&&w| w < v).count();
            assert_eq!(induced.degree(pos_in_induced), induced.min_degree());
            assert_eq!(induced.degree(pos_in_induced), ordering.back_degrees[i]);
        }
    }

    #[test]
    fn chromatic_reference_values() {
        assert_eq!(chromatic_number(&Graph::path(4).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6).unwrap()).unwrap(), 2);
        for n in 1..=7 {
            assert_eq!(chromatic_number(&Graph::complete(n).unwrap()).unwrap(), n as u32);
        }
        assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(4).unwrap()).unwrap(), 1);
        assert!(chromatic_number(&Graph::empty(11).unwrap()).is_err());
    }

    #[test]
    fn grundy_reference_values() {
        assert_eq!(grundy_number(&Graph::path(4).unwrap()).unwrap(), 3);
        for n in 1..=7 {
            assert_eq!(grundy_number(&Graph::complete(n).unwrap()).unwrap(), n as u32);
        }
        assert_eq!(grundy_number(&Graph::star(6).unwrap()).unwrap(), 2);
        assert_eq!(grundy_number(&Graph::empty(4).unwrap()).unwrap(), 1);
        assert!(grundy_number(&Graph::empty(10).unwrap()).is_err());
    }

    #[test]
    fn achromatic_reference_values() {
        assert_eq!(achromatic_number(&Graph::path(4).unwrap()).unwrap(), 3);
        for n in 1..=7 {
            assert_eq!(achromatic_number(&Graph::complete(n).unwrap()).unwrap(), n as u32);
        }
        assert_eq!(achromatic_number(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(achromatic_number(&Graph::empty(4).unwrap()).unwrap(), 1);
        assert!(achromatic_number(&Graph::empty(10).unwrap()).is_err());
    }

    #[test]
    fn validators() {
        let p4 = Graph::path(4).unwrap();
        let complete3 = Coloring::new(vec![1, 2, 3, 1]).unwrap();
        assert!(validate(&p4, &complete3, ColoringClass::Complete).unwrap());

        let k2 = Graph::complete(2).unwrap();
        let two = Coloring::new(vec![1, 2]).unwrap();
        assert!(validate(&k2, &two, ColoringClass::Grundy).unwrap());

        let k3 = Graph::complete(3).unwrap();
        let bad = Coloring::new(vec![1, 1, 2]).unwrap();
        assert!(!validate(&k3, &bad, ColoringClass::Proper).unwrap());

        // proper but not complete: colors 1 and 3 never meet
        let p4_sparse = Coloring::new(vec![1, 2, 3, 2]).unwrap();
        assert!(validate(&p4, &p4_sparse, ColoringClass::Proper).unwrap());
        assert!(!validate(&p4, &p4_sparse, ColoringClass::Complete).unwrap());

        let c6 = Graph::cycle(6).unwrap();
        let alternating = Coloring::new(vec![1, 2, 1, 2, 1, 2]).unwrap();
        assert!(validate(&c6, &alternating, ColoringClass::Grundy).unwrap());
        // vertex colored 3 whose neighbors are both colored 1
        let skip = Coloring::new(vec![1, 2, 1, 2, 1, 3]).unwrap();
        assert!(validate(&c6, &skip, ColoringClass::Proper).unwrap());
        assert!(!validate(&c6, &skip, ColoringClass::Grundy).unwrap());

        assert_eq!(
            validate(&p4, &two, ColoringClass::Proper),
            Err(ColoringError::WrongVertexCount {
                expected: 4,
                got: 2
            })
        );
        assert_eq!(
            Coloring::new(vec![1, 3]),
            Err(ColoringError::UnusedColor { color: 2 })
        );
        assert_eq!(
            Coloring::new(vec![0, 1]),
            Err(ColoringError::InvalidColor {
                vertex: 0,
                color: 0
            })
        );
    }

    #[test]
    fn witnesses_certify_their_class() {
        for n in 1..=5 {
            for g in crate::enumerate::enumerate_graphs(n, crate::enumerate::GraphFilter::All)
                .unwrap()
            {
                let (chi, proper) = chromatic_coloring(&g).unwrap();
                assert!(validate(&g, &proper, ColoringClass::Proper).unwrap());
                assert_eq!(proper.color_count(), chi);

                let (gamma, grundy) = grundy_coloring(&g).unwrap();
                assert!(validate(&g, &grundy, ColoringClass::Grundy).unwrap());
                assert_eq!(grundy.color_count(), gamma);

                let (psi, complete) = achromatic_coloring(&g).unwrap();
                assert!(validate(&g, &complete, ColoringClass::Complete).unwrap());
                assert_eq!(complete.color_count(), psi);
            }
        }
    }
}
