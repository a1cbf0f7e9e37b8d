//! Thread-pool versions of the enumeration drivers.
//!
//! Work is split per representative of the previous order and merged into
//! key-sorted sets, so results are identical for every worker count.

use std::collections::BTreeSet;

use rayon::prelude::*;
use twindom_core::enumeration::{extension_keys, MAX_CANONICAL_ORDER};
use twindom_core::{canonical_key, gamma_star, CanonicalKey, DomStarReport, Error, Tournament};

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
}

fn check_order(n: usize) -> Result<(), Error> {
    if n == 0 || n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            limit: MAX_CANONICAL_ORDER,
        });
    }
    Ok(())
}

fn classes_in(n: usize) -> Result<Vec<CanonicalKey>, Error> {
    check_order(n)?;
    let mut level = vec![canonical_key(&Tournament::from_arcs(1, &[])?)?];
    for _ in 1..n {
        let merged: BTreeSet<CanonicalKey> = level
            .par_iter()
            .map(|k| extension_keys(&k.to_tournament()))
            .reduce(BTreeSet::new, |mut a, mut b| {
                if a.len() < b.len() {
                    std::mem::swap(&mut a, &mut b);
                }
                a.append(&mut b);
                a
            });
        level = merged.into_iter().collect();
    }
    Ok(level)
}

/// Sorted canonical keys of order `n ≤ 8`.
pub fn canonical_classes(n: usize, jobs: usize) -> Result<Vec<CanonicalKey>, Error> {
    pool(jobs).install(|| classes_in(n))
}

/// `γ*` of each class, sorted by key.
pub fn class_gammas(n: usize, jobs: usize) -> Result<Vec<(CanonicalKey, usize)>, Error> {
    pool(jobs).install(|| {
        classes_in(n)?
            .into_par_iter()
            .map(|k| Ok((k, gamma_star(&k.to_tournament())?.size)))
            .collect()
    })
}

pub fn dom_star(n: usize, jobs: usize, extremal_cap: usize) -> Result<DomStarReport, Error> {
    let gammas = class_gammas(n, jobs)?;
    Ok(DomStarReport::from_sorted_gammas(n, &gammas, extremal_cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use twindom_core::enumeration;

    #[test]
    fn matches_sequential() {
        for n in 1..=7 {
            let seq = enumeration::canonical_classes(n).unwrap();
            assert_eq!(canonical_classes(n, 1).unwrap(), seq);
            assert_eq!(canonical_classes(n, 4).unwrap(), seq);
        }
        assert_eq!(
            dom_star(6, 3, 16).unwrap(),
            enumeration::dom_star(6).unwrap()
        );
        assert!(canonical_classes(9, 2).is_err());
    }
}
