//! Number of tournaments up to isomorphism, by orbit counting.
//!
//! A vertex permutation fixes some tournament only if all its cycles have
//! odd length (an even cycle of length `2m` maps some pair `{x, y}` to
//! itself reversed). For cycle type `λ` with odd parts, pairs inside a cycle
//! of length `L` form `(L − 1) / 2` orbits and pairs between cycles of
//! lengths `a, b` form `gcd(a, b)` orbits, each orbit oriented freely. The
//! class count is the average of `2^orbits` over the symmetric group.

use alloc::vec::Vec;

use crate::{Error, Result};

pub const MAX_BURNSIDE_ORDER: usize = 16;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Partitions of `n` into odd parts, parts in non-increasing order.
fn odd_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let mut part = max.min(rest);
        if part.is_multiple_of(2) {
            part -= 1;
        }
        while part >= 1 {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
            if part < 2 {
                break;
            }
            part -= 2;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Isomorphism classes of tournaments of order `n` (`1 ≤ n ≤ 16`).
pub fn count_burnside(n: usize) -> Result<u128> {
    if n == 0 || n > MAX_BURNSIDE_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            limit: MAX_BURNSIDE_ORDER,
        });
    }
    let n_fact = factorial(n);
    let mut total: u128 = 0;
    for parts in odd_partitions(n) {
        // centralizer size z = Π L^{m_L} m_L!
        let mut z: u128 = 1;
        let mut k = 0;
        while k < parts.len() {
            let len = parts[k];
            let mult = parts[k..].iter().take_while(|&&p| p == len).count();
            z *= (len as u128).pow(mult as u32) * factorial(mult);
            k += mult;
        }
        let mut orbits: u32 = 0;
        for (a, &la) in parts.iter().enumerate() {
            orbits += (la as u32 - 1) / 2;
            for &lb in &parts[a + 1..] {
                orbits += gcd(la, lb) as u32;
            }
        }
        let class_size = n_fact / z;
        let term = class_size
            .checked_mul(1u128 << orbits)
            .expect("fits u128 for n <= 16");
        total = total.checked_add(term).expect("fits u128 for n <= 16");
    }
    debug_assert_eq!(total % n_fact, 0);
    Ok(total / n_fact)
}
