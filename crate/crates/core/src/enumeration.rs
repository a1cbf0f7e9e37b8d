//! Exhaustive generation of tournaments, `DOM*(K_n)` reports and the seeded
//! search for tournaments with large `γ*`.
//!
//! Isomorphism classes of order `n` are produced by extending every class of
//! order `n − 1` with a new vertex in all `2^(n−1)` ways and keeping one
//! canonical key per class. Everything here is sequential; the `twindom`
//! crate runs the same per-representative steps on a thread pool and merges
//! in key order, so output never depends on the worker count.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use rand_xoshiro::rand_core::RngCore;

use crate::canonical::{canonical_key, CanonicalKey};
use crate::domination::{gamma_star, gamma_star_with_cap, TdsCertificate};
use crate::generators::{random_tournament_with, seeded_rng};
use crate::{Error, Result, Tournament, VertexSet};

/// Largest order for canonical-mode generation and `dom_star`.
pub const MAX_CANONICAL_ORDER: usize = 8;
/// Largest order for labeled-mode generation (2^15 orientations).
pub const MAX_LABELED_ORDER: usize = 6;
pub const DEFAULT_EXTREMAL_CAP: usize = 16;
pub const DEFAULT_SEARCH_BUDGET: u64 = 20_000;
/// Exact `γ*` is cheap enough to drive the local search up to this order.
pub const MAX_SEARCH_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every orientation of `K_n` with vertices `0..n`.
    Labeled,
    /// One canonical representative per isomorphism class, by key.
    Canonical,
}

/// Outcome of an exhaustive `γ*` sweep at one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomStarReport {
    pub n: usize,
    pub class_count: u64,
    /// Largest `γ*` over all classes.
    pub dom_star: usize,
    /// `γ*` value → number of classes.
    pub gamma_histogram: BTreeMap<usize, u64>,
    /// Canonical representatives attaining `dom_star`, smallest keys first.
    pub extremal: Vec<Tournament>,
}

impl DomStarReport {
    /// Assembles a report from `(key, γ*)` pairs, which must be sorted by key.
    pub fn from_sorted_gammas(
        n: usize,
        gammas: &[(CanonicalKey, usize)],
        extremal_cap: usize,
    ) -> Self {
        let mut gamma_histogram = BTreeMap::new();
        for &(_, g) in gammas {
            *gamma_histogram.entry(g).or_insert(0) += 1;
        }
        let dom_star = gamma_histogram.keys().next_back().copied().unwrap_or(0);
        let extremal = gammas
            .iter()
            .filter(|&&(_, g)| g == dom_star)
            .take(extremal_cap)
            .map(|(k, _)| k.to_tournament())
            .collect();
        DomStarReport {
            n,
            class_count: gammas.len() as u64,
            dom_star,
            gamma_histogram,
            extremal,
        }
    }

    /// The conjectured value `⌈(n + 1) / 2⌉`.
    pub fn conjectured(&self) -> usize {
        (self.n + 2) / 2
    }

    /// `⌈n / 2⌉`.
    pub fn half_bound(&self) -> usize {
        self.n.div_ceil(2)
    }
}

fn check_canonical_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            limit: MAX_CANONICAL_ORDER,
        });
    }
    Ok(())
}

/// All `2^(n−1)` one-vertex extensions of `rep`; bit `i` of the pattern set
/// means the new vertex beats `i`.
pub fn extensions(rep: &Tournament) -> impl Iterator<Item = Tournament> + '_ {
    let m = rep.order();
    (0..1u64 << m).map(move |pattern| {
        rep.extend(VertexSet::from_mask(pattern))
            .expect("extension of a canonical-range order")
    })
}

/// Canonical keys of all one-vertex extensions of `rep`.
pub fn extension_keys(rep: &Tournament) -> BTreeSet<CanonicalKey> {
    extensions(rep)
        .map(|t| canonical_key(&t).expect("order within canonical limit"))
        .collect()
}

/// Canonical keys of order `n + 1` from the sorted keys of order `n`.
pub fn next_level(prev: &[CanonicalKey]) -> BTreeSet<CanonicalKey> {
    let mut out = BTreeSet::new();
    for key in prev {
        out.extend(extension_keys(&key.to_tournament()));
    }
    out
}

/// Sorted canonical keys of every isomorphism class of order `n ≤ 8`.
pub fn canonical_classes(n: usize) -> Result<Vec<CanonicalKey>> {
    check_canonical_order(n)?;
    let single = Tournament::from_arcs(1, &[])?;
    let mut level: Vec<CanonicalKey> = alloc::vec![canonical_key(&single)?];
    for _ in 1..n {
        level = next_level(&level).into_iter().collect();
    }
    Ok(level)
}

/// Orientation of `K_n` number `index`; bit `p` of `index` orients the
/// `p`-th pair in lexicographic order (`1` means `i → j`).
pub fn labeled_tournament(n: usize, index: u64) -> Result<Tournament> {
    let mut p = 0;
    Tournament::from_pair_fn(n, |_, _| {
        let bit = index >> p & 1 == 1;
        p += 1;
        bit
    })
}

pub fn generate_tournaments(n: usize, mode: Mode) -> Result<Box<dyn Iterator<Item = Tournament>>> {
    match mode {
        Mode::Labeled => {
            if n == 0 || n > MAX_LABELED_ORDER {
                return Err(Error::OrderTooLarge {
                    n,
                    limit: MAX_LABELED_ORDER,
                });
            }
            let pairs = n * (n - 1) / 2;
            Ok(Box::new((0..1u64 << pairs).map(move |i| {
                labeled_tournament(n, i).expect("order in labeled range")
            })))
        }
        Mode::Canonical => {
            let keys = canonical_classes(n)?;
            Ok(Box::new(keys.into_iter().map(|k| k.to_tournament())))
        }
    }
}

/// `γ*` of every class of order `n`, sorted by key.
pub fn class_gammas(n: usize) -> Result<Vec<(CanonicalKey, usize)>> {
    canonical_classes(n)?
        .into_iter()
        .map(|k| Ok((k, gamma_star(&k.to_tournament())?.size)))
        .collect()
}

pub fn dom_star(n: usize) -> Result<DomStarReport> {
    dom_star_with_cap(n, DEFAULT_EXTREMAL_CAP)
}

pub fn dom_star_with_cap(n: usize, extremal_cap: usize) -> Result<DomStarReport> {
    let gammas = class_gammas(n)?;
    Ok(DomStarReport::from_sorted_gammas(n, &gammas, extremal_cap))
}

/// Seeded local search for a tournament with `γ* ≥ target`.
///
/// Starts from `random_tournament`-style arcs drawn from the seeded
/// generator, then repeatedly flips a random arc and keeps the flip unless
/// it lowers `γ*`. `budget` counts flips. Whatever is returned has been
/// re-solved exactly.
pub fn search_gamma_at_least(
    n: usize,
    target: usize,
    budget: u64,
    seed: u64,
) -> Result<(Tournament, TdsCertificate)> {
    if !(2..=MAX_SEARCH_ORDER).contains(&n) {
        return Err(Error::OrderTooLarge {
            n,
            limit: MAX_SEARCH_ORDER,
        });
    }
    let mut rng = seeded_rng(seed);
    let mut current = random_tournament_with(n, &mut rng)?;
    let mut gamma = gamma_star_with_cap(&current, MAX_SEARCH_ORDER)?.size;
    let mut steps = 0u64;
    loop {
        if gamma >= target {
            let cert = gamma_star_with_cap(&current, MAX_SEARCH_ORDER)?;
            if cert.size < target {
                return Err(Error::VerificationFailed {
                    routine: "search_gamma_at_least",
                });
            }
            return Ok((current, cert));
        }
        if steps == budget {
            return Err(Error::NotFoundWithinBudget { target, budget });
        }
        steps += 1;
        let u = (rng.next_u64() % n as u64) as usize;
        let mut v = (rng.next_u64() % (n as u64 - 1)) as usize;
        if v >= u {
            v += 1;
        }
        let candidate = current.flip(u, v);
        let g = gamma_star_with_cap(&candidate, MAX_SEARCH_ORDER)?.size;
        if g >= gamma {
            current = candidate;
            gamma = g;
        }
    }
}
