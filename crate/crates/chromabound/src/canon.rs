//! Permutation-invariant canonical forms for isomorphism tests.
//!
//! The key is the minimum upper-triangle adjacency bitstring over all vertex
//! orderings that respect the (degree, sorted neighbor-degree) partition. Both
//! refinement invariants are isomorphism-invariant, so two graphs get equal keys
//! exactly when they are isomorphic; best-prefix pruning keeps the search fast
//! even on regular graphs at this scale.

use crate::graph::{Graph, GraphError};

/// Largest order supported: the key packs `n(n-1)/2 <= 55` bits into a `u64`.
pub const CANON_MAX_VERTICES: usize = 11;

/// Total-order key with `canonical_form(G) == canonical_form(relabel(G, s))`
/// for every permutation `s`, and distinct keys for non-isomorphic graphs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Rebuilds the canonical representative graph encoded by this key.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let total = (n * n.saturating_sub(1) / 2) as u32;
        let mut adj = vec![0u64; n];
        let mut t = 0u32;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - t) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                t += 1;
            }
        }
        Graph::from_adjacency_unchecked(n, adj)
    }
}

/// Computes the canonical form of `g`. Errors above [`CANON_MAX_VERTICES`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(GraphError::AboveCanonicalLimit {
            n,
            limit: CANON_MAX_VERTICES,
        });
    }
    if n <= 1 {
        return Ok(CanonicalForm { n: n as u8, bits: 0 });
    }

    // Partition vertices by (degree, sorted neighbor degrees); positions take
    // classes in ascending key order.
    let mut keyed: Vec<(usize, Vec<usize>, usize)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd, v)
        })
        .collect();
    keyed.sort();

    let mut class_members: Vec<Vec<usize>> = Vec::new();
    let mut pos_class: Vec<usize> = Vec::with_capacity(n);
    for (i, (deg, nd, v)) in keyed.iter().enumerate() {
        if i == 0 || (deg, nd) != (&keyed[i - 1].0, &keyed[i - 1].1) {
            class_members.push(Vec::new());
        }
        class_members.last_mut().unwrap().push(*v);
        pos_class.push(class_members.len() - 1);
    }

    let mut search = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        pos_class,
        class_members,
        assigned: vec![0; n],
        used: 0,
        best: u64::MAX,
    };
    search.dfs(0, 0, 0, true);
    Ok(CanonicalForm {
        n: n as u8,
        bits: search.best,
    })
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    pos_class: Vec<usize>,
    class_members: Vec<Vec<usize>>,
    assigned: Vec<usize>,
    used: u64,
    best: u64,
}

impl Search<'_> {
    fn dfs(&mut self, pos: usize, cur: u64, len: u32, tight: bool) {
        if pos == self.n {
            if cur < self.best {
                self.best = cur;
            }
            return;
        }
        let class = self.pos_class[pos];
        let count = self.class_members[class].len();
        for idx in 0..count {
            let u = self.class_members[class][idx];
            if self.used >> u & 1 == 1 {
                continue;
            }
            // bits for the new column: pairs (0,pos)..(pos-1,pos), earlier
            // positions more significant
            let mut col = 0u64;
            for i in 0..pos {
                col = col << 1 | self.g.has_edge(u, self.assigned[i]) as u64;
            }
            let next = cur << pos | col;
            let next_len = len + pos as u32;
            let mut still_tight = tight;
            if tight {
                let best_prefix = self.best >> (self.total_bits - next_len);
                if next > best_prefix {
                    continue;
                }
                still_tight = next == best_prefix;
            }
            self.assigned[pos] = u;
            self.used |= 1 << u;
            self.dfs(pos + 1, next, next_len, still_tight);
            self.used &= !(1 << u);
        }
    }
}

/// Isomorphism test via canonical forms; both graphs must be within the limit.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
