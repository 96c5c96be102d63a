//! Simple undirected graphs on at most 64 vertices.
//!
//! The representation is one `u64` neighbor bitset per vertex, which keeps every
//! structural query branch-light and makes graphs cheap to copy and hash. Graphs
//! are immutable after construction and safe to share across threads.

use thiserror::Error;

/// Hard cap on the vertex count of the core representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum {max}", max = MAX_VERTICES)]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex} rejected")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v} rejected")]
    DuplicateEdge { u: usize, v: usize },
    #[error("order {n} exceeds the canonical-form limit {limit}")]
    AboveCanonicalLimit { n: usize, limit: usize },
    #[error("exhaustive enumeration supports 1 <= n <= {max}, got {n}")]
    EnumerationUnsupported { n: usize, max: usize },
    #[error("{family} requires {requirement}, got n = {n}, k = {k}")]
    BadFamilyParameters {
        family: &'static str,
        requirement: &'static str,
        n: usize,
        k: usize,
    },
}

/// An immutable simple undirected graph with vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Named graph families used as generators and as equality-case references.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    Star,
    Path,
    Cycle,
    /// The complete graph `K_k` with the center of a star `K_{1,n-k}` identified
    /// into one of its vertices.
    Kite,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an explicit edge list. Loops and repeated edges are
    /// rejected so the simple-graph invariants hold by construction.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Wraps an adjacency table already known to be symmetric and loop-free
    /// (enumeration and canonical-form decoding build these in bulk).
    pub(crate) fn from_adjacency_unchecked(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert!(n <= MAX_VERTICES && adj.len() == n);
        debug_assert!((0..n).all(|v| adj[v] >> v & 1 == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| adj[u] >> v & 1 == adj[v] >> u & 1)));
        Graph { n, adj }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let order = self.n;
        for w in [u, v] {
            if w >= order {
                return Err(GraphError::VertexOutOfRange { vertex: w, order });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count, exactly `(sum of degrees) / 2`.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|b| b.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum degree; 0 for the graph on zero vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Maximum degree; 0 for the graph on zero vertices.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitset of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut mask = self.adj[v];
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let w = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(w)
            }
        })
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            // neighbors with id above u, so each edge appears once
            let mut mask = if u + 1 >= 64 {
                0
            } else {
                self.adj[u] & !((1u64 << (u + 1)) - 1)
            };
            while mask != 0 {
                let v = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|&b| b == 0)
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]` in the result.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: perm.len(),
                order: self.n,
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: p,
                    order: self.n,
                });
            }
            seen |= 1 << p;
        }
        if seen.count_ones() as usize != self.n {
            return Err(GraphError::DuplicateEdge { u: 0, v: 0 });
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Removes vertex `v`; vertices with ids above `v` shift down by one, so the
    /// relabeling is deterministic and tests can name result vertices.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        let low = (1u64 << v) - 1;
        let mut adj = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let row = self.adj[u];
            adj.push((row & low) | ((row >> 1) & !low));
        }
        Ok(Graph {
            n: self.n - 1,
            adj,
        })
    }

    /// Induced subgraph on the vertices of `mask`, relabeled order-preservingly.
    pub fn induced_subgraph(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            let mut m = self.adj[v] & mask;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                adj[i] |= 1 << index[w];
            }
        }
        Graph {
            n: verts.len(),
            adj,
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_mask(0).count_ones() as usize == self.n
    }

    fn component_mask(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as separate graphs, ordered by smallest original
    /// vertex id; within each component the original id order is preserved.
    pub fn components(&self) -> Vec<Graph> {
        let mut out = Vec::new();
        let mut remaining = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mask = self.component_mask(start);
            out.push(self.induced_subgraph(mask));
            remaining &= !mask;
        }
        out
    }

    // ---- named families ----

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Graph::family(Family::Complete, n, n)
    }

    /// Star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        Graph::family(Family::Star, n, 0)
    }

    /// Path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::family(Family::Path, n, 0)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        Graph::family(Family::Cycle, n, 0)
    }

    /// Kite `K_k . K_{1,n-k}`: clique on `{0, .., k-1}` with leaves `k..n`
    /// attached to the identified vertex 0.
    pub fn kite(n: usize, k: usize) -> Result<Graph, GraphError> {
        Graph::family(Family::Kite, n, k)
    }

    /// Generator for the named families. `k` is only meaningful for `Kite`.
    pub fn family(family: Family, n: usize, k: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::BadFamilyParameters {
                family: family.name(),
                requirement: "n >= 1",
                n,
                k,
            });
        }
        let mut g = Graph::empty(n)?;
        match family {
            Family::Complete => {
                for u in 0..n {
                    for v in u + 1..n {
                        g.insert_edge(u, v)?;
                    }
                }
            }
            Family::Star => {
                for v in 1..n {
                    g.insert_edge(0, v)?;
                }
            }
            Family::Path => {
                for v in 1..n {
                    g.insert_edge(v - 1, v)?;
                }
            }
            Family::Cycle => {
                if n < 3 {
                    return Err(GraphError::BadFamilyParameters {
                        family: "cycle",
                        requirement: "n >= 3",
                        n,
                        k,
                    });
                }
                for v in 1..n {
                    g.insert_edge(v - 1, v)?;
                }
                g.insert_edge(n - 1, 0)?;
            }
            Family::Kite => {
                if !(1..=n).contains(&k) {
                    return Err(GraphError::BadFamilyParameters {
                        family: "kite",
                        requirement: "1 <= k <= n",
                        n,
                        k,
                    });
                }
                for u in 0..k {
                    for v in u + 1..k {
                        g.insert_edge(u, v)?;
                    }
                }
                for v in k..n {
                    g.insert_edge(0, v)?;
                }
            }
        }
        Ok(g)
    }
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Kite => "kite",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Family, String> {
        match s {
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "kite" => Ok(Family::Kite),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_enforces_simple_graph() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn symmetry_and_edge_count() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.m(), 3);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.degree(1), 2);
        assert_eq!((g.min_degree(), g.max_degree()), (1, 2));
    }

    #[test]
    fn kite_degree_profile() {
        // kite(5,3): one vertex of degree 4, two of degree 2, two leaves; m = 5
        let g = Graph::kite(5, 3).unwrap();
        let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2, 4]);
        assert_eq!(g.m(), 5);

        let k6 = Graph::kite(6, 6).unwrap();
        assert_eq!(k6.m(), 15);
        assert_eq!(k6, Graph::complete(6).unwrap());

        assert!(Graph::kite(5, 0).is_err());
        assert!(Graph::kite(5, 6).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(0).is_err());
    }

    #[test]
    fn delete_vertex_shifts_down() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.delete_vertex(3).unwrap(), Graph::path(3).unwrap());
        // deleting an interior vertex: 0-1-2-3 minus 1 leaves edge (1,2) after shift
        let g = p4.delete_vertex(1).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
        assert_eq!(
            p4.delete_vertex(4),
            Err(GraphError::VertexOutOfRange {
                vertex: 4,
                order: 4
            })
        );

        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.delete_vertex(2).unwrap(), Graph::complete(4).unwrap());

        let star = Graph::star(5).unwrap();
        let rest = star.delete_vertex(0).unwrap();
        assert_eq!((rest.n(), rest.m()), (4, 0));
    }

    #[test]
    fn components_partition() {
        // K3 on {0,2,4} plus K2 on {1,3}
        let g = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 0), (1, 3)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], Graph::complete(3).unwrap());
        assert_eq!(comps[1], Graph::complete(2).unwrap());
        assert_eq!(comps.iter().map(Graph::m).sum::<usize>(), g.m());

        let k1s = Graph::empty(3).unwrap();
        assert_eq!(k1s.components().len(), 3);
        assert_eq!(Graph::cycle(5).unwrap().components().len(), 1);
    }

    #[test]
    fn relabel_is_a_permutation_action() {
        let p4 = Graph::path(4).unwrap();
        let g = p4.relabel(&[2, 0, 3, 1]).unwrap();
        // edge 0-1 -> 2-0, 1-2 -> 0-3, 2-3 -> 3-1
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        assert!(p4.relabel(&[0, 0, 1, 2]).is_err());
        assert!(p4.relabel(&[0, 1, 2]).is_err());
    }

    #[test]
    fn full_width_graphs_work() {
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.m(), 64 * 63 / 2);
        assert_eq!(g.components().len(), 1);
        assert_eq!(g.delete_vertex(63).unwrap(), Graph::complete(63).unwrap());
    }
}
