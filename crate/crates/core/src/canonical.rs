//! Canonical forms for small tournaments.
//!
//! Vertices are first partitioned by colour refinement: the initial colour is
//! the outdegree, and each round recolours a vertex by its old colour plus the
//! sorted colours of its outset, until the partition stops splitting. Colours
//! are ranked by their signatures, so the partition is labeling-invariant.
//!
//! The key is the smallest upper-triangle bit string over all relabelings
//! that place lower colours at lower positions. Bits are taken column by
//! column, pairs `(0,1), (0,2), (1,2), (0,3), …`, so a partial relabeling of
//! positions `0..=p` fixes a prefix of the string and a branch whose prefix
//! already exceeds the best leaf is cut.

use alloc::vec::Vec;

use crate::{Error, Result, Tournament};

pub const DEFAULT_CANON_LIMIT: usize = 8;
/// 16 · 15 / 2 = 120 bits still fit a `u128`.
pub const MAX_CANON_LIMIT: usize = 16;

/// Isomorphism-class fingerprint: equal keys iff isomorphic tournaments.
///
/// Ordered by `(n, bits)`; for equal `n` this is the lexicographic order of
/// the canonical bit strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    n: u8,
    bits: u128,
}

#[inline]
fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The canonical string packed MSB-first.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonical representative: the relabeled tournament whose bit
    /// string is this key.
    pub fn to_tournament(&self) -> Tournament {
        let n = self.order();
        let total = pair_count(n);
        Tournament::from_pair_fn(n, |i, j| {
            let pos = j * (j - 1) / 2 + i;
            self.bits >> (total - 1 - pos) & 1 == 1
        })
        .expect("key order is valid")
    }
}

pub fn canonical_key(t: &Tournament) -> Result<CanonicalKey> {
    canonical_key_with_limit(t, DEFAULT_CANON_LIMIT)
}

pub fn canonical_key_with_limit(t: &Tournament, limit: usize) -> Result<CanonicalKey> {
    canonical_labeling(t, limit).map(|(key, _)| key)
}

/// Canonical key plus a relabeling `perm` (old vertex → new vertex) with
/// `t.permute(&perm) == key.to_tournament()`.
pub fn canonical_labeling(t: &Tournament, limit: usize) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = t.order();
    let limit = limit.min(MAX_CANON_LIMIT);
    if n > limit {
        return Err(Error::OrderTooLargeForCanonicalization { n, limit });
    }
    let colors = refine_colors(t);
    let mut slot_color: Vec<u8> = colors[..n].to_vec();
    slot_color.sort_unstable();

    let mut search = Search {
        t,
        n,
        colors: &colors,
        slot_color: &slot_color,
        placed: [0; MAX_CANON_LIMIT],
        columns: [0; MAX_CANON_LIMIT],
        best_columns: [0; MAX_CANON_LIMIT],
        best_placed: [0; MAX_CANON_LIMIT],
        have_best: false,
    };
    search.descend(0, 0, false);

    let mut bits = 0u128;
    for p in 1..n {
        bits = bits << p | search.best_columns[p] as u128;
    }
    let mut perm = alloc::vec![0usize; n];
    for (pos, &v) in search.best_placed[..n].iter().enumerate() {
        perm[v as usize] = pos;
    }
    Ok((CanonicalKey { n: n as u8, bits }, perm))
}

/// Stable colour refinement; colours are dense ranks `0..k`.
fn refine_colors(t: &Tournament) -> [u8; MAX_CANON_LIMIT] {
    let n = t.order();
    let mut colors = [0u8; MAX_CANON_LIMIT];
    let mut classes = 1;
    loop {
        // (old colour, sorted outset colours, vertex)
        let mut sigs: Vec<(u8, Vec<u8>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u8> = t.out_set(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = [0u8; MAX_CANON_LIMIT];
        let mut rank = 0u8;
        for k in 0..sigs.len() {
            if k > 0 && (sigs[k].0, &sigs[k].1) != (sigs[k - 1].0, &sigs[k - 1].1) {
                rank += 1;
            }
            next[sigs[k].2] = rank;
        }
        let found = rank as usize + 1;
        colors = next;
        if found == classes {
            return colors;
        }
        classes = found;
    }
}

struct Search<'a> {
    t: &'a Tournament,
    n: usize,
    colors: &'a [u8; MAX_CANON_LIMIT],
    slot_color: &'a [u8],
    /// Vertex at each position of the partial relabeling.
    placed: [u8; MAX_CANON_LIMIT],
    /// Column `p`: bits for pairs `(0,p) … (p-1,p)`, first pair most significant.
    columns: [u16; MAX_CANON_LIMIT],
    best_columns: [u16; MAX_CANON_LIMIT],
    best_placed: [u8; MAX_CANON_LIMIT],
    have_best: bool,
}

impl Search<'_> {
    /// `below`: the current prefix is already strictly smaller than the best.
    /// Returns true if a new best leaf was recorded, after which the prefix
    /// up to `pos` equals the best one.
    fn descend(&mut self, pos: usize, used: u64, mut below: bool) -> bool {
        if pos == self.n {
            if !self.have_best || below {
                self.best_columns = self.columns;
                self.best_placed = self.placed;
                self.have_best = true;
                return true;
            }
            return false;
        }
        let mut updated = false;
        let want = self.slot_color[pos];
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            let mut col = 0u16;
            for i in 0..pos {
                col = col << 1 | self.t.beats(self.placed[i] as usize, v) as u16;
            }
            let mut now_below = below || !self.have_best;
            if !now_below {
                let best = self.best_columns[pos];
                if col > best {
                    continue;
                }
                now_below = col < best;
            }
            self.placed[pos] = v as u8;
            self.columns[pos] = col;
            if self.descend(pos + 1, used | 1 << v, now_below) {
                updated = true;
                below = false;
            }
        }
        updated
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{random_tournament, rotational_tournament, transitive_tournament};
    use crate::generators::{seeded_rng, Rng};
    use rand_xoshiro::rand_core::RngCore;

    fn c3() -> Tournament {
        Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn shuffle(n: usize, rng: &mut Rng) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            p.swap(i, j);
        }
        p
    }

    /// Brute force over all n! relabelings: two tournaments are isomorphic
    /// iff some permutation maps one onto the other.
    fn isomorphic_brute(a: &Tournament, b: &Tournament) -> bool {
        fn rec(a: &Tournament, b: &Tournament, perm: &mut Vec<usize>, used: u64) -> bool {
            let k = perm.len();
            if k == a.order() {
                return true;
            }
            for img in 0..a.order() {
                if used >> img & 1 == 1 {
                    continue;
                }
                if (0..k).all(|i| a.beats(i, k) == b.beats(perm[i], img)) {
                    perm.push(img);
                    if rec(a, b, perm, used | 1 << img) {
                        return true;
                    }
                    perm.pop();
                }
            }
            false
        }
        a.order() == b.order() && rec(a, b, &mut Vec::new(), 0)
    }

    #[test]
    fn c3_and_its_reverse_share_a_key() {
        let a = canonical_key(&c3()).unwrap();
        let b = canonical_key(&c3().reverse()).unwrap();
        assert_eq!(a, b);
        assert!(isomorphic_brute(&c3(), &c3().reverse()));
    }

    #[test]
    fn tt4_differs_from_strong_four() {
        // 0→1→2→3→0 with 0→2, 1→3: strongly connected, scores (2,2,1,1).
        let strong =
            Tournament::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let tt4 = transitive_tournament(4).unwrap();
        assert_ne!(
            canonical_key(&tt4).unwrap(),
            canonical_key(&strong).unwrap()
        );
    }

    #[test]
    fn labeling_reproduces_representative() {
        let mut rng = seeded_rng(5);
        for seed in 0..50 {
            let t = random_tournament(1 + seed as usize % 10, seed).unwrap();
            let (key, perm) = canonical_labeling(&t, 10).unwrap();
            assert_eq!(t.permute(&perm).unwrap(), key.to_tournament());
            let p = shuffle(t.order(), &mut rng);
            assert_eq!(
                canonical_key_with_limit(&t.permute(&p).unwrap(), 10).unwrap(),
                key
            );
        }
    }

    #[test]
    fn invariant_under_random_relabelings() {
        let mut rng = seeded_rng(99);
        for t in [
            random_tournament(8, 1).unwrap(),
            rotational_tournament(7).unwrap(),
            transitive_tournament(8).unwrap(),
        ] {
            let key = canonical_key(&t).unwrap();
            for _ in 0..100 {
                let p = shuffle(t.order(), &mut rng);
                assert_eq!(canonical_key(&t.permute(&p).unwrap()).unwrap(), key);
            }
        }
    }

    #[test]
    fn keys_agree_with_brute_force_isomorphism() {
        let ts: Vec<Tournament> = (0..40).map(|s| random_tournament(5, s).unwrap()).collect();
        for a in &ts {
            for b in &ts {
                let same = canonical_key(a).unwrap() == canonical_key(b).unwrap();
                assert_eq!(same, isomorphic_brute(a, b), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn limit_is_enforced() {
        let t = random_tournament(9, 0).unwrap();
        assert_eq!(
            canonical_key(&t),
            Err(Error::OrderTooLargeForCanonicalization { n: 9, limit: 8 })
        );
        assert!(canonical_key_with_limit(&t, 9).is_ok());
    }

    #[test]
    fn one_vertex() {
        let t = Tournament::from_arcs(1, &[]).unwrap();
        let k = canonical_key(&t).unwrap();
        assert_eq!(k.to_tournament(), t);
    }
}
