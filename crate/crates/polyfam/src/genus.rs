//! Genus machinery for subcovers of a branched Galois cover of the line:
//! the tame-ramification lower bound, exact Riemann–Hurwitz from full
//! ramification profiles, and the closed-form bounds used by the certifier.
//!
//! All bound arithmetic is exact rational ([`BigRational`]); verdicts compare
//! against 1 exactly, because several conclusions hinge on `> 1` with thin
//! margins (one catalog case sits at exactly 1 under the default branch-point
//! subset).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenusError {
    #[error("least prime divisor undefined for {0} (need an integer > 1)")]
    NotGreaterThanOne(u64),
    #[error("ramification data has odd total discriminant degree {0}")]
    ParityError(usize),
    #[error("ramification data yields negative genus {0} (missing branch points?)")]
    NegativeGenus(i64),
    #[error("profile orbit sizes sum to {0}, cover degree is {1}")]
    DegreeMismatch(usize, usize),
}

/// Smallest prime dividing `e`; errors for `e ≤ 1`.
pub fn least_prime_divisor(e: u64) -> Result<u64, GenusError> {
    if e <= 1 {
        return Err(GenusError::NotGreaterThanOne(e));
    }
    if e.is_multiple_of(2) {
        return Ok(2);
    }
    let mut d = 3u64;
    while d * d <= e {
        if e.is_multiple_of(d) {
            return Ok(d);
        }
        d += 2;
    }
    Ok(e)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The tame lower bound for the genus of a subcover of degree `index`:
///
/// `1 + (index/2)·(−2 + Σ_ν (1 − 1/d(e_ν))) − (1/2)·Σ_ν c₁(ν)·(1 − 1/d(e_ν))`
///
/// where `v` lists `(e_ν, c₁(ν))` over any chosen subset of branch points and
/// `d` is the least prime divisor. Exact rational output.
pub fn genus_lower_bound(index: &BigInt, v: &[(u64, u64)]) -> Result<BigRational, GenusError> {
    let mut sum_d = BigRational::from_integer(BigInt::from(-2));
    let mut sum_c = BigRational::zero();
    for &(e, c1) in v {
        let d = least_prime_divisor(e)? as i64;
        let w = BigRational::one() - rat(1, d);
        sum_d += w.clone();
        sum_c += BigRational::from_integer(BigInt::from(c1)) * w;
    }
    let half_index = BigRational::new(index.clone(), BigInt::from(2));
    Ok(BigRational::one() + half_index * sum_d - sum_c / rat(2, 1))
}

/// Convenience wrapper for small indices.
pub fn genus_lower_bound_small(index: u64, v: &[(u64, u64)]) -> Result<BigRational, GenusError> {
    genus_lower_bound(&BigInt::from(index), v)
}

/// A branch point of the subcover together with the orbit sizes of the
/// inertia generator on the `index` cosets (= ramification indices of the
/// points above it, under the geometric residue-degree-1 reduction).
#[derive(Clone, Debug)]
pub struct BranchProfile {
    /// Human-readable label ("-4", "inf", …), used only in diagnostics.
    pub label: String,
    /// Ramification indices above this point; must sum to the cover degree.
    pub orbit_sizes: Vec<usize>,
}

impl BranchProfile {
    pub fn new(label: impl Into<String>, orbit_sizes: Vec<usize>) -> Self {
        BranchProfile {
            label: label.into(),
            orbit_sizes,
        }
    }

    /// Number of orbits of size δ.
    pub fn c_delta(&self, delta: usize) -> usize {
        self.orbit_sizes.iter().filter(|&&s| s == delta).count()
    }

    /// Δ = Σ (e − 1), the local discriminant degree.
    pub fn delta(&self) -> usize {
        self.orbit_sizes.iter().map(|s| s - 1).sum()
    }
}

/// Exact Riemann–Hurwitz genus `g = 1 − index + (1/2)·Σ_ν Δ(ν)` from profiles
/// covering ALL branch points (including infinity). Rejects data whose total
/// discriminant degree is odd or whose genus comes out negative — both signal
/// missing branch points.
pub fn exact_genus(index: usize, profiles: &[BranchProfile]) -> Result<usize, GenusError> {
    let mut total_delta = 0usize;
    for p in profiles {
        let deg: usize = p.orbit_sizes.iter().sum();
        if deg != index {
            return Err(GenusError::DegreeMismatch(deg, index));
        }
        total_delta += p.delta();
    }
    if !total_delta.is_multiple_of(2) {
        return Err(GenusError::ParityError(total_delta));
    }
    let g = 1 - (index as i64) + (total_delta as i64) / 2;
    if g < 0 {
        return Err(GenusError::NegativeGenus(g));
    }
    Ok(g as usize)
}

/// Exact value of `−2 + Σ_{i=0}^{k−1} (1 − 1/d(n−i))` over the k consecutive
/// integers n, n−1, …, n−k+1. For k = 4 this is ≥ 7/15 (n ≥ 6) and for k = 6
/// it is ≥ 53/30 (n ≥ 8): among k consecutive integers at most ⌈k/2⌉ are even
/// and exactly one odd one is divisible by 3.
pub fn consecutive_integer_bound(k: usize, n: u64) -> Result<BigRational, GenusError> {
    assert!(
        k == 4 || k == 6,
        "only the k = 4 and k = 6 windows are used"
    );
    assert!(n >= (k as u64) + 2, "need n ≥ k+2 so every entry exceeds 1");
    let mut sum = BigRational::from_integer(BigInt::from(-2));
    for i in 0..k as u64 {
        let d = least_prime_divisor(n - i)? as i64;
        sum += BigRational::one() - rat(1, d);
    }
    Ok(sum)
}

/// The generic genus bound for the degree-n Laguerre curve itself (the
/// point-stabilizer subcover, index n), using the six largest-|ν| branch
/// points V = {−n..5−n} with e_ν = |ν| and c₁(ν) = n + ν.
pub fn laguerre_generic_bound(n: u64) -> Result<BigRational, GenusError> {
    assert!(n >= 7, "the six-point window needs n ≥ 7");
    let v: Vec<(u64, u64)> = (0..6).map(|i| (n - i, i)).collect();
    genus_lower_bound(&BigInt::from(n), &v)
}

/// Bochert's index bound for a primitive proper subgroup other than the
/// alternating group: `⌊(n+1)/2⌋!`.
pub fn bochert_index(n: u64) -> BigInt {
    let m = n.div_ceil(2);
    let mut f = BigInt::one();
    for k in 2..=m {
        f *= BigInt::from(k);
    }
    f
}

/// Closed-form genus bound for primitive subgroups via Bochert's index and
/// the four-point window: `1 + (7/30)·⌊(n+1)/2⌋! − (1 − 1/n)·(10n − 27)/2`.
/// Equals 1 exactly at n = 9 and exceeds 1 for all n ≥ 11.
pub fn primitive_closed_bound(n: u64) -> BigRational {
    let b = bochert_index(n);
    BigRational::one() + BigRational::new(BigInt::from(7) * b, BigInt::from(30))
        - (BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(n)))
            * BigRational::new(BigInt::from(10 * n as i64 - 27), BigInt::from(2))
}

/// Stirling-approximation form of [`primitive_closed_bound`]:
/// `1 + (7√(πn)/30)·(n/2e)^{n/2} − (1 − 1/n)·(10n − 27)/2` (floating point;
/// exceeds 1 for all n ≥ 15).
pub fn stirling_bound(n: u64) -> f64 {
    let nf = n as f64;
    1.0 + (7.0 * (std::f64::consts::PI * nf).sqrt() / 30.0)
        * (nf / (2.0 * std::f64::consts::E)).powf(nf / 2.0)
        - (1.0 - 1.0 / nf) * (10.0 * nf - 27.0) / 2.0
}

/// True exactly when the bound exceeds 1 (the hyperbolicity verdict).
pub fn exceeds_one(bound: &BigRational) -> bool {
    (bound - BigRational::one()).is_positive()
}
