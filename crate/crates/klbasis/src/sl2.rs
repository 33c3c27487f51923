//! Mirror recursion for SL2 in characteristic p: the bases E^k of the
//! character lattice, their stabilization E^∞, and the digit-product
//! dimension oracle.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// An integer combination of Weyl characters, indexed by highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharCombo {
    coeffs: BTreeMap<u64, i64>,
}

impl CharCombo {
    pub fn unit(weight: u64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(weight, 1);
        CharCombo { coeffs }
    }

    /// Nonzero coefficients, keyed by weight.
    pub fn coeffs(&self) -> &BTreeMap<u64, i64> {
        &self.coeffs
    }

    /// Σ c_μ · (μ + 1), the virtual dimension.
    pub fn dimension(&self) -> i64 {
        self.coeffs.iter().map(|(&w, &c)| c * (w as i64 + 1)).sum()
    }
}

/// Mirrors sit at the indices ≡ p−1 (mod p). Reflecting j (not itself a
/// mirror) successively in the largest mirror below it yields a strictly
/// descending chain, ending once the index falls below the smallest mirror.
fn mirror_chain(p: u64, j: u64) -> Vec<u64> {
    debug_assert!(j % p != p - 1);
    let mut chain = vec![j];
    let mut cur = j;
    while cur >= p - 1 {
        let m = p * (cur / p) - 1;
        cur = 2 * m - cur;
        chain.push(cur);
    }
    chain
}

/// E^k_λ expanded in the Weyl basis {E⁰_μ}.
pub fn e_stage(p: u64, k: u32, lambda: u64) -> CharCombo {
    assert!(p >= 2, "p must be at least 2");
    let mut cur = CharCombo::unit(lambda).coeffs;
    for level in (0..k).rev() {
        let pk = match p.checked_pow(level) {
            // all supported weights are ≤ λ < p^level: the level acts as the
            // identity
            Some(pk) if pk <= lambda => pk,
            _ => continue,
        };
        let mut next: BTreeMap<u64, i64> = BTreeMap::new();
        for (&mu, &c) in &cur {
            let j = mu / pk;
            let t = mu % pk;
            if j % p == p - 1 {
                *next.entry(mu).or_insert(0) += c;
                continue;
            }
            let mut sign = 1i64;
            for jr in mirror_chain(p, j) {
                *next.entry(jr * pk + t).or_insert(0) += c * sign;
                sign = -sign;
            }
        }
        next.retain(|_, c| *c != 0);
        cur = next;
    }
    CharCombo { coeffs: cur }
}

/// The stable value E^∞_λ = E^k_λ for the minimal k with λ < (p−1)·p^k,
/// checked against stage k+1.
pub fn e_infinity(p: u64, lambda: u64) -> Result<CharCombo> {
    assert!(p >= 2, "p must be at least 2");
    let mut k = 0u32;
    while (lambda as u128) >= (p as u128 - 1) * (p as u128).pow(k) {
        k += 1;
    }
    let stable = e_stage(p, k, lambda);
    if stable != e_stage(p, k + 1, lambda) {
        return Err(Error::StabilizationFailure(format!(
            "E^{k} and E^{} differ at p={p}, weight {lambda}",
            k + 1
        )));
    }
    Ok(stable)
}

/// Π (λ_i + 1) over the base-p digits of λ.
pub fn digit_product_dim(p: u64, lambda: u64) -> i64 {
    assert!(p >= 2, "p must be at least 2");
    let mut rest = lambda;
    let mut prod = 1i64;
    while rest > 0 {
        prod *= (rest % p) as i64 + 1;
        rest /= p;
    }
    prod
}

/// Dimensions of E^k_λ for λ = 0..=max_weight.
pub fn stage_dimension_row(p: u64, k: u32, max_weight: u64) -> Vec<i64> {
    (0..=max_weight).map(|l| e_stage(p, k, l).dimension()).collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
