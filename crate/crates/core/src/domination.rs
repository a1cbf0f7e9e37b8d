//! Twin domination: the checker, the exact solver, the halving greedy and the
//! sink/source construction.

use alloc::string::String;
use core::fmt;

use crate::{Error, Result, Tournament, VertexSet};

/// Default largest order accepted by [`gamma_star`].
pub const DEFAULT_EXACT_CAP: usize = 24;

/// How a certificate was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    SinkSource,
    Order8Case,
    HalfWitness,
    Greedy,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::SinkSource => "sink_source",
            Method::Order8Case => "order8_case",
            Method::HalfWitness => "half_witness",
            Method::Greedy => "greedy",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A twin dominating set together with how it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdsCertificate {
    pub set: VertexSet,
    pub size: usize,
    pub method: Method,
    /// Which case of the construction produced the set.
    pub branch: String,
    pub verified: bool,
}

impl TdsCertificate {
    /// Runs the checker on `set`; a set that fails it is reported as a defect
    /// of `routine`, never returned.
    pub fn verify(
        t: &Tournament,
        set: VertexSet,
        method: Method,
        branch: String,
        routine: &'static str,
    ) -> Result<Self> {
        if !set.is_subset(t.vertices()) || !twin_dominates(t, set) {
            return Err(Error::VerificationFailed { routine });
        }
        Ok(TdsCertificate {
            set,
            size: set.len(),
            method,
            branch,
            verified: true,
        })
    }

    pub(crate) fn ensure_size_at_most(self, bound: usize, routine: &'static str) -> Result<Self> {
        if self.size > bound {
            Err(Error::VerificationFailed { routine })
        } else {
            Ok(self)
        }
    }
}

/// Every vertex outside `s` beats some member of `s` and is beaten by some
/// member of `s`.
pub fn is_twin_dominating(t: &Tournament, s: VertexSet) -> Result<bool> {
    t.check_set(s)?;
    Ok(twin_dominates(t, s))
}

/// Unchecked form of [`is_twin_dominating`].
#[inline]
pub fn twin_dominates(t: &Tournament, s: VertexSet) -> bool {
    let mut beaten_by_s = 0u64;
    let mut beating_s = 0u64;
    for u in s {
        beaten_by_s |= t.out_set(u).mask();
        beating_s |= t.in_set(u).mask();
    }
    let outside = t.vertices().difference(s).mask();
    outside & !(beaten_by_s & beating_s) == 0
}

pub fn gamma_star(t: &Tournament) -> Result<TdsCertificate> {
    gamma_star_with_cap(t, DEFAULT_EXACT_CAP)
}

/// Minimum twin dominating set; among minimum sets, the one with the
/// smallest mask value.
///
/// Sources and sinks belong to every twin dominating set, so only subsets of
/// the remaining vertices are scanned, by increasing size and, within a size,
/// by increasing mask.
pub fn gamma_star_with_cap(t: &Tournament, cap: usize) -> Result<TdsCertificate> {
    let n = t.order();
    if n > cap {
        return Err(Error::OrderTooLargeForExactSearch { n, limit: cap });
    }
    let forced = t.sources().union(t.sinks());
    let free: alloc::vec::Vec<usize> = t.vertices().difference(forced).iter().collect();
    let m = free.len();
    for k in 0..=m {
        if let Some(extra) = first_completion(t, forced, &free, k) {
            return TdsCertificate::verify(
                t,
                forced.union(extra),
                Method::Exact,
                String::from("scan"),
                "gamma_star",
            );
        }
    }
    // forced ∪ free = V, which always dominates.
    Err(Error::FallthroughReached {
        routine: "gamma_star",
    })
}

/// Smallest `k`-subset `R` of `free` (by mask) with `forced ∪ R` twin
/// dominating. Index masks are walked in increasing order with Gosper's
/// hack; spreading them onto `free` preserves the order.
fn first_completion(
    t: &Tournament,
    forced: VertexSet,
    free: &[usize],
    k: usize,
) -> Option<VertexSet> {
    let m = free.len();
    if k == 0 {
        return twin_dominates(t, forced).then_some(VertexSet::EMPTY);
    }
    let limit = 1u128 << m;
    let mut idx: u128 = (1u128 << k) - 1;
    while idx < limit {
        let mut extra = VertexSet::EMPTY;
        let mut bits = idx;
        while bits != 0 {
            extra.insert(free[bits.trailing_zeros() as usize]);
            bits &= bits - 1;
        }
        if twin_dominates(t, forced.union(extra)) {
            return Some(extra);
        }
        let c = idx & idx.wrapping_neg();
        let r = idx + c;
        idx = (((r ^ idx) >> 2) / c) | r;
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreedyMode {
    /// Every vertex outside the result has an in-arc from it.
    Out,
    /// Every vertex outside the result has an out-arc into it.
    In,
}

/// Halving greedy over the whole tournament; see [`greedy_dominating_within`].
pub fn greedy_dominating(t: &Tournament, mode: GreedyMode) -> VertexSet {
    greedy_dominating_within(t, t.vertices(), mode)
}

/// Greedy one-sided domination of the subtournament induced by `within`.
///
/// Repeatedly takes the undominated vertex with the most undominated
/// out-neighbours (in-neighbours for [`GreedyMode::In`]), lowest index on
/// ties, and marks it and those neighbours dominated. Each pick leaves at
/// most `(u - 1) / 2` of `u` undominated vertices, so the result has at most
/// `⌊log₂ |within|⌋ + 1` members.
pub fn greedy_dominating_within(t: &Tournament, within: VertexSet, mode: GreedyMode) -> VertexSet {
    let reach = |v: usize| match mode {
        GreedyMode::Out => t.out_set(v),
        GreedyMode::In => t.in_set(v),
    };
    let mut undominated = within;
    let mut picked = VertexSet::EMPTY;
    while let Some(first) = undominated.first() {
        let mut best = first;
        let mut best_reach = reach(first).intersection(undominated).len();
        for v in undominated.iter().skip(1) {
            let r = reach(v).intersection(undominated).len();
            if r > best_reach {
                best = v;
                best_reach = r;
            }
        }
        picked.insert(best);
        undominated = undominated.difference(reach(best)).without(best);
    }
    picked
}

/// `⌊log₂ m⌋` for `m ≥ 1`.
pub fn floor_log2(m: usize) -> usize {
    (usize::BITS - 1 - m.leading_zeros()) as usize
}

/// `⌈log₂ m⌉` for `m ≥ 1`.
pub fn ceil_log2(m: usize) -> usize {
    if m <= 1 {
        0
    } else {
        floor_log2(m - 1) + 1
    }
}

/// Size guarantee of [`sink_source_tds`]: `2 + ⌊log₂(n − 1)⌋`.
pub fn sink_source_bound(n: usize) -> usize {
    2 + floor_log2(n.saturating_sub(1).max(1))
}

/// Twin dominating set for a tournament with a sink or a source.
///
/// With a sink `t` (smallest index), every other vertex already has an arc
/// into `t`; greedy out-domination of `T − t` supplies the arcs coming from
/// the set. A source is handled dually with greedy in-domination.
pub fn sink_source_tds(t: &Tournament) -> Result<TdsCertificate> {
    const ROUTINE: &str = "sink_source_tds";
    let all = t.vertices();
    let (anchor, mode, branch) = if let Some(sink) = t.sinks().first() {
        (sink, GreedyMode::Out, "sink")
    } else if let Some(source) = t.sources().first() {
        (source, GreedyMode::In, "source")
    } else {
        return Err(Error::NoSourceOrSink);
    };
    let set = greedy_dominating_within(t, all.without(anchor), mode).with(anchor);
    TdsCertificate::verify(t, set, Method::SinkSource, String::from(branch), ROUTINE)?
        .ensure_size_at_most(sink_source_bound(t.order()), ROUTINE)
}
