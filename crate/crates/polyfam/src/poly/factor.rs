//! Exact factorization in ℚ[x]: squarefree split over ℤ, factorization
//! modulo a good odd prime, quadratic Hensel lifting of the modular factors
//! past a Landau–Mignotte height bound, and subset recombination with exact
//! trial division. Also the factor-degree pattern of f mod p, which reads
//! off the cycle type of Frobenius at unramified primes.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

use super::arith::primes_from;
use super::intpoly::IntPoly;
use super::modp::PolyZp;

/// Inputs above this degree are refused rather than risk runaway subset
/// recombination.
pub const FACTOR_DEGREE_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
}

/// `unit · ∏ factorᵢ^multᵢ = input`, with every factor primitive, positive
/// leading, irreducible over ℚ, sorted by (degree, coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    pub unit: BigRational,
    pub factors: Vec<(IntPoly, usize)>,
}

impl FactorizationResult {
    /// True iff the input was (a constant times) a single irreducible.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Multiset of factor degrees, each repeated per multiplicity,
    /// descending. For a squarefree input mirrors a root-grouping shape.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, m) in &self.factors {
            for _ in 0..*m {
                out.push(f.deg());
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Factor a nonzero integer polynomial into irreducibles over ℚ.
pub fn factor_over_q(f: &IntPoly) -> Result<FactorizationResult, FactorError> {
    assert!(!f.is_zero(), "factorization of the zero polynomial");
    let deg = f.degree().unwrap();
    if deg > FACTOR_DEGREE_CAP {
        return Err(FactorError::DegreeCapExceeded {
            degree: deg,
            cap: FACTOR_DEGREE_CAP,
        });
    }
    let mut unit = f.content();
    if f.leading().is_negative() {
        unit = -unit;
    }
    let unit = BigRational::from_integer(unit);
    if deg == 0 {
        return Ok(FactorizationResult {
            unit,
            factors: Vec::new(),
        });
    }
    let prim = f.primitive_part();
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    for (sf, mult) in prim.squarefree_decomposition() {
        for irr in factor_squarefree_primitive(&sf) {
            factors.push((irr, mult));
        }
    }
    factors.sort_by_key(|a| factor_key(&a.0));
    Ok(FactorizationResult { unit, factors })
}

fn factor_key(f: &IntPoly) -> (usize, Vec<BigInt>) {
    (f.deg(), f.coeffs().to_vec())
}

/// Degrees of the irreducible factors of f mod p, descending — the cycle
/// type of Frobenius at p when p is unramified in the splitting field.
/// None when p is unusable: p divides the leading coefficient (degree
/// drops) or f mod p is not squarefree.
pub fn dedekind_cycle_type(f: &IntPoly, p: u64) -> Option<Vec<usize>> {
    assert!(f.degree().is_some_and(|d| d >= 1));
    let fp = PolyZp::from_int_poly(f, p);
    if fp.degree() != f.degree() {
        return None;
    }
    if !fp.is_squarefree() {
        return None;
    }
    let mut degs: Vec<usize> = fp
        .monic()
        .factor_squarefree()
        .iter()
        .map(|g| g.deg())
        .collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    Some(degs)
}

/// Factor a primitive, positive-leading, squarefree polynomial of degree ≥ 1.
fn factor_squarefree_primitive(u: &IntPoly) -> Vec<IntPoly> {
    let deg = u.deg();
    if deg == 1 {
        return vec![u.clone()];
    }
    // good prime: odd, keeps the degree, keeps squarefreeness
    let (p, parts) = primes_from(3)
        .filter(|&p| {
            let fp = PolyZp::from_int_poly(u, p);
            fp.degree() == Some(deg) && fp.is_squarefree()
        })
        .map(|p| {
            let fp = PolyZp::from_int_poly(u, p).monic();
            (p, fp.factor_squarefree())
        })
        .next()
        .expect("squarefree polynomial has good primes");
    if parts.len() == 1 {
        return vec![u.clone()];
    }

    // Landau–Mignotte-style height bound: any candidate factor built below
    // has coefficients bounded by B = 2^deg · ‖u‖₂ · |lc(u)|
    let norm2_sq: BigInt = u.coeffs().iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << deg) * (norm2_sq.sqrt() + 1) * u.leading().abs();
    let target = &bound * 2 + 1;
    let mut modulus = BigInt::from(p);
    let mut levels = 0u32;
    while modulus < target {
        modulus = &modulus * &modulus;
        levels += 1;
    }

    let lifted = multifactor_lift(&vz_from_int(u, &modulus), p, &modulus, levels, &parts);
    recombine(u.clone(), lifted, &modulus)
}

/// Subset recombination: try products of lifted modular factors, smallest
/// cardinality first, as candidate true factors of u. Subsets of more than
/// half the parts are redundant (the cofactor's subset is smaller and gets
/// tried first), but no further pruning is sound: a degree cutoff would
/// have to fall back on complements this loop never reaches.
fn recombine(mut u: IntPoly, mut avail: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    'outer: loop {
        let total = avail.len();
        let mut size = 1;
        while 2 * size <= total {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                let mut prod = vec![u.leading().mod_floor(m)];
                for &i in &combo {
                    prod = vz_mul(&prod, &avail[i], m);
                }
                let cand = vz_to_symmetric(&prod, m).primitive_part();
                if let Some(q) = u.div_exact(&cand) {
                    out.push(cand);
                    u = q;
                    for &i in combo.iter().rev() {
                        avail.remove(i);
                    }
                    continue 'outer;
                }
                if !next_combination(&mut combo, total) {
                    break;
                }
            }
            size += 1;
        }
        break;
    }
    match u.degree() {
        Some(0) | None => debug_assert!(u == IntPoly::one()),
        Some(_) => out.push(u),
    }
    out
}

/// Advance indices to the next k-combination of 0..n in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

// ---- arithmetic on coefficient vectors mod m (coefficients in [0, m)) ----

fn vz_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn vz_from_int(f: &IntPoly, m: &BigInt) -> Vec<BigInt> {
    vz_trim(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn vz_reduce(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    vz_trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn vz_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero);
        out.push(x.mod_floor(m));
    }
    vz_trim(out)
}

fn vz_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero);
        out.push(x.mod_floor(m));
    }
    vz_trim(out)
}

fn vz_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    vz_trim(out.into_iter().map(|c| c.mod_floor(m)).collect())
}

/// Quotient and remainder by a monic divisor (leading coefficient literally 1).
fn vz_divmod_monic(a: &[BigInt], h: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let dh = h.len() - 1;
    debug_assert!(h.last().is_some_and(|c| c.is_one()));
    if a.len() <= dh {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dh];
    for k in (0..q.len()).rev() {
        let lead = r[k + dh].clone();
        if lead.is_zero() {
            continue;
        }
        for (i, hc) in h.iter().enumerate() {
            let val = &r[k + i] - &lead * hc;
            r[k + i] = val.mod_floor(m);
        }
        q[k] = lead;
    }
    r.truncate(dh);
    (vz_trim(q), vz_trim(r))
}

fn vz_to_symmetric(v: &[BigInt], m: &BigInt) -> IntPoly {
    IntPoly::from_coeffs(
        v.iter()
            .map(|c| if c + c > *m { c - m } else { c.clone() })
            .collect(),
    )
}

fn modinv_bigint(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "element not invertible");
    e.x.mod_floor(m)
}

fn poly_zp_to_big(f: &PolyZp) -> Vec<BigInt> {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: given f ≡ g·h (mod m), s·g + t·h ≡ 1 (mod m),
/// h monic, produce (g*, h*, s*, t*) with the same invariants mod m².
#[allow(clippy::type_complexity)]
fn hensel_step(
    m: &BigInt,
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let f = vz_reduce(f, &m2);
    let one = vec![BigInt::one()];

    let e = vz_sub(&f, &vz_mul(g, h, &m2), &m2);
    let (q, r) = vz_divmod_monic(&vz_mul(s, &e, &m2), h, &m2);
    let g_star = vz_add(
        &vz_add(g, &vz_mul(t, &e, &m2), &m2),
        &vz_mul(&q, g, &m2),
        &m2,
    );
    let h_star = vz_add(h, &r, &m2);

    let b = vz_sub(
        &vz_add(&vz_mul(s, &g_star, &m2), &vz_mul(t, &h_star, &m2), &m2),
        &one,
        &m2,
    );
    let (c, d) = vz_divmod_monic(&vz_mul(s, &b, &m2), &h_star, &m2);
    let s_star = vz_sub(s, &d, &m2);
    let t_star = vz_sub(
        &vz_sub(t, &vz_mul(t, &b, &m2), &m2),
        &vz_mul(&c, &g_star, &m2),
        &m2,
    );

    debug_assert_eq!(g_star.len(), g.len());
    debug_assert_eq!(h_star.len(), h.len());
    (g_star, h_star, s_star, t_star)
}

/// Lift f ≡ lc(f)·∏parts (mod p), parts monic and pairwise coprime mod p,
/// to monic factors mod `modulus` = p^(2^levels), divide-and-conquer.
fn multifactor_lift(
    f: &[BigInt],
    p: u64,
    modulus: &BigInt,
    levels: u32,
    parts: &[PolyZp],
) -> Vec<Vec<BigInt>> {
    if parts.len() == 1 {
        // the lone factor is monic(f) mod modulus
        let lc = f.last().expect("nonzero");
        let inv = modinv_bigint(lc, modulus);
        return vec![vz_trim(
            f.iter().map(|c| (c * &inv).mod_floor(modulus)).collect(),
        )];
    }
    let k = parts.len() / 2;
    let (left, right) = parts.split_at(k);
    let lc_p = {
        let pb = BigInt::from(p);
        let r = f.last().unwrap().mod_floor(&pb);
        let (_, d) = r.to_u64_digits();
        d.first().copied().unwrap_or(0)
    };
    let mut g0 = PolyZp::new(p, vec![lc_p]);
    for q in left {
        g0 = g0.mul(q);
    }
    let mut h0 = PolyZp::one(p);
    for q in right {
        h0 = h0.mul(q);
    }
    let (gcd, s0, t0) = g0.extended_gcd(&h0);
    assert_eq!(gcd.degree(), Some(0), "parts must be coprime mod p");

    let mut g = poly_zp_to_big(&g0);
    let mut h = poly_zp_to_big(&h0);
    let mut s = poly_zp_to_big(&s0);
    let mut t = poly_zp_to_big(&t0);
    let mut m = BigInt::from(p);
    for _ in 0..levels {
        let (g2, h2, s2, t2) = hensel_step(&m, f, &g, &h, &s, &t);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    let mut out = multifactor_lift(&g, p, modulus, levels, left);
    out.extend(multifactor_lift(&h, p, modulus, levels, right));
    out
}
