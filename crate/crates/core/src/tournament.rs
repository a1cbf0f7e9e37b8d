//! Bit-packed tournaments.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, VertexSet};

/// Largest supported order; one adjacency row per machine word.
pub const MAX_ORDER: usize = 64;

/// A tournament on vertices `0..n`: exactly one arc between every pair of
/// distinct vertices and no loops.
///
/// Row `u` holds the outset of `u`, so `u` beats `v` iff bit `v` of row `u`
/// is set. Rows at or above `n` are zero, which keeps derived equality and
/// hashing structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    out: [u64; MAX_ORDER],
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::InvalidOrder { n })
    } else {
        Ok(())
    }
}

impl Tournament {
    /// Builds a tournament from an explicit arc list. Every unordered pair
    /// must be oriented exactly once.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut out = [0u64; MAX_ORDER];
        for &(u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRangeVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if out[u] >> v & 1 == 1 || out[v] >> u & 1 == 1 {
                return Err(Error::DuplicateOrConflictingArc { from: u, to: v });
            }
            out[u] |= 1 << v;
        }
        for u in 0..n {
            for v in u + 1..n {
                if (out[u] >> v | out[v] >> u) & 1 == 0 {
                    return Err(Error::IncompleteOrientation { u, v });
                }
            }
        }
        Ok(Tournament { n, out })
    }

    /// Builds a tournament where, for each pair `i < j`, `forward(i, j)`
    /// decides whether the arc is `i → j` (true) or `j → i` (false).
    pub fn from_pair_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        check_order(n)?;
        let mut out = [0u64; MAX_ORDER];
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
            }
        }
        Ok(Tournament { n, out })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// True iff the arc `u → v` is present.
    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    /// `O(v)`, unchecked.
    #[inline]
    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet::from_mask(self.out[v])
    }

    /// `I(v)`, unchecked.
    #[inline]
    pub fn in_set(&self, v: usize) -> VertexSet {
        VertexSet::from_mask(VertexSet::full(self.n).mask() & !self.out[v] & !(1u64 << v))
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.n - 1 - self.out_degree(v)
    }

    /// Inset and outset of `v`.
    pub fn neighborhoods(&self, v: usize) -> Result<(VertexSet, VertexSet)> {
        self.check_vertex(v)?;
        Ok((self.in_set(v), self.out_set(v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRangeVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::SetNotSubsetOfVertices)
        }
    }

    /// Vertices with indegree 0.
    pub fn sources(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.in_degree(v) == 0).collect()
    }

    /// Vertices with outdegree 0.
    pub fn sinks(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.out[v] == 0).collect()
    }

    pub fn out_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).map(|v| self.out_degree(v))
    }

    /// All arcs `(u, v)` in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_set(u).iter().map(move |v| (u, v)))
    }

    /// Lexicographically smallest arc. `None` only for the one-vertex tournament.
    pub fn first_arc(&self) -> Option<(usize, usize)> {
        self.arcs().next()
    }

    /// Same tournament with every arc reversed.
    #[must_use]
    pub fn reverse(&self) -> Self {
        let mut out = [0u64; MAX_ORDER];
        for (v, row) in out.iter_mut().enumerate().take(self.n) {
            *row = self.in_set(v).mask();
        }
        Tournament { n: self.n, out }
    }

    /// Same tournament with the arc between `u` and `v` turned around.
    #[must_use]
    pub fn flip(&self, u: usize, v: usize) -> Self {
        let mut t = self.clone();
        t.out[u] ^= 1 << v;
        t.out[v] ^= 1 << u;
        t
    }

    /// Subtournament induced by `keep`. Vertices are renumbered in ascending
    /// order; the returned map sends new index → old index.
    pub fn induced(&self, keep: VertexSet) -> Result<(Self, Vec<usize>)> {
        self.check_set(keep)?;
        if keep.is_empty() {
            return Err(Error::EmptyKeepSet);
        }
        let map: Vec<usize> = keep.iter().collect();
        let mut out = [0u64; MAX_ORDER];
        for (a, &u) in map.iter().enumerate() {
            for (b, &v) in map.iter().enumerate() {
                if self.beats(u, v) {
                    out[a] |= 1 << b;
                }
            }
        }
        Ok((Tournament { n: map.len(), out }, map))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::NotABijection);
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::NotABijection);
            }
            seen |= 1 << p;
        }
        let mut out = [0u64; MAX_ORDER];
        for (u, &pu) in perm.iter().enumerate() {
            for v in self.out_set(u) {
                out[pu] |= 1 << perm[v];
            }
        }
        Ok(Tournament { n: self.n, out })
    }

    /// Upper-triangle orientation bits in lexicographic pair order
    /// `(0,1), (0,2), …, (n-2,n-1)`; true means `i → j`.
    pub fn pair_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| self.beats(i, j)))
    }

    /// Adds a vertex `n` whose outset is `beats` (a subset of `0..n`).
    pub fn extend(&self, beats: VertexSet) -> Result<Self> {
        let n = self.n;
        check_order(n + 1)?;
        self.check_set(beats)?;
        let mut out = self.out;
        out[n] = beats.mask();
        for v in self.vertices().difference(beats) {
            out[v] |= 1 << n;
        }
        Ok(Tournament { n: n + 1, out })
    }

    /// Adjacency matrix rows, `m[u][v] == true` iff `u → v`.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; self.n]; self.n];
        for (u, row) in m.iter_mut().enumerate() {
            for v in self.out_set(u) {
                row[v] = true;
            }
        }
        m
    }

    #[cfg(test)]
    pub(crate) fn assert_valid(&self) {
        for u in 0..self.n {
            assert!(!self.beats(u, u));
            for v in u + 1..self.n {
                assert!(self.beats(u, v) ^ self.beats(v, u));
            }
        }
        assert!(self.out[self.n..].iter().all(|&r| r == 0));
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({}; ", self.n)?;
        for b in self.pair_bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}
