//! Arithmetic of the modular curves X₀(n) and of the projective linear
//! groups over ℤ/n, used to rule out non-generic Galois images at composite
//! levels.
//!
//! Everything here is exact integer arithmetic on `u64`/`u128`; the genus
//! formula is evaluated over the rationals and asserted integral.

use std::fmt;

/// Distinct prime divisors of `n`, ascending, by trial division.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut ps = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            ps.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

/// Euler's totient φ(n) by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "phi is defined for positive arguments");
    let mut phi = n;
    for p in prime_divisors(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// The abelian extension of ℚ cut out by the determinant obstruction at the
/// prime `p` inside the level-`n` projective group: trivial, quadratic, or
/// biquadratic, together with its conductor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDescriptor {
    /// Human-readable label, e.g. `"quadratic field of conductor 3"`.
    pub label: String,
    /// Degree over ℚ: 1, 2, or 4.
    pub degree: u32,
    /// Conductor of the abelian field (1 for ℚ itself).
    pub conductor: u64,
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// Describes the fixed field attached to the prime `p` at level `n`.
///
/// Cases (`p` prime, `n > 1`):
/// * `p` odd and `p | n` → quadratic, conductor `p`;
/// * `p = 2` and `8 | n` → biquadratic, conductor 8;
/// * `p = 2` and `4 ∥ n` (4 divides, 8 does not) → quadratic, conductor 4;
/// * otherwise → ℚ.
pub fn qpn(p: u64, n: u64) -> FieldDescriptor {
    assert!(is_prime(p), "qpn requires a prime p, got {p}");
    assert!(n > 1, "qpn requires n > 1, got {n}");
    if p > 2 && n.is_multiple_of(p) {
        FieldDescriptor {
            label: format!("quadratic field of conductor {p}"),
            degree: 2,
            conductor: p,
        }
    } else if p == 2 && n.is_multiple_of(8) {
        FieldDescriptor {
            label: "biquadratic field of conductor 8".to_string(),
            degree: 4,
            conductor: 8,
        }
    } else if p == 2 && n.is_multiple_of(4) {
        // 4 ‖ n: the 8 | n case was caught above.
        FieldDescriptor {
            label: "quadratic field of conductor 4".to_string(),
            degree: 2,
            conductor: 4,
        }
    } else {
        FieldDescriptor {
            label: "rational field".to_string(),
            degree: 1,
            conductor: 1,
        }
    }
}

/// Degree over ℚ of the compositum of all the fields `qpn(p, n)` for `p | n`:
/// `2^{#odd primes dividing n}` times 4 if `8 | n`, 2 if `4 ∥ n`, 1 otherwise.
///
/// Equivalently this is #{a mod n : a² ≡ 1}, the order of the 2-torsion of
/// (ℤ/n)ˣ, which is also the index of the image of SL₂(ℤ/n) inside
/// PGL₂(ℤ/n).
pub fn tilde_degree(n: u64) -> u64 {
    assert!(n > 0);
    let odd_primes = prime_divisors(n).iter().filter(|&&p| p != 2).count() as u32;
    let two_part = if n.is_multiple_of(8) {
        4
    } else if n.is_multiple_of(4) {
        2
    } else {
        1
    };
    (1u64 << odd_primes) * two_part
}

/// #{a mod n : a² ≡ 1 (mod n)} by direct enumeration. Used as an independent
/// cross-check of [`tilde_degree`].
pub fn square_roots_of_unity_count(n: u64) -> u64 {
    assert!(n > 0);
    (0..n).filter(|a| (a * a) % n == 1 % n).count() as u64
}

/// |SL₂(ℤ/n)| = n³ ∏_{p|n} (1 − p⁻²), computed exactly. The ring ℤ/1 is
/// zero, so n = 1 gives the trivial group (the empty product).
pub fn sl2_order(n: u64) -> u64 {
    assert!(n >= 1, "sl2_order requires n ≥ 1");
    let mut num = (n as u128).pow(3);
    for p in prime_divisors(n) {
        let p2 = (p as u128) * (p as u128);
        num = num / p2 * (p2 - 1);
    }
    u64::try_from(num).expect("sl2 order exceeds u64")
}

/// |PGL₂(ℤ/n)|, which equals |SL₂(ℤ/n)| = n³ ∏_{p|n} (1 − p⁻²):
/// |GL₂(ℤ/n)| = n⁴ ∏(1−1/p)(1−1/p²) and the scalar center has order
/// n ∏(1−1/p), so the quotient is n³ ∏(1−1/p²).
pub fn pgl2_order(n: u64) -> u64 {
    sl2_order(n)
}

/// |PSL₂(ℤ/n)|: the image of SL₂(ℤ/n) in PGL₂(ℤ/n), i.e. SL₂ modulo the
/// scalar matrices aI with a² = 1.  The scalar count is measured directly
/// (not via [`tilde_degree`]) so the identity `pgl2 = tilde_degree · psl2`
/// remains a genuine cross-check of the multiplicative formula.
pub fn psl2_order(n: u64) -> u64 {
    let scalars = square_roots_of_unity_count(n);
    let sl2 = sl2_order(n);
    assert_eq!(sl2 % scalars, 0);
    sl2 / scalars
}

fn is_prime(n: u64) -> bool {
    crate::poly::arith::is_prime_u64(n)
}

/// Kronecker-style character value (−1/p) for prime p, with (−1/2) = 0.
fn chi_minus_one(p: u64) -> i64 {
    match p % 4 {
        1 => 1,
        3 => -1,
        _ => 0, // p = 2
    }
}

/// Kronecker-style character value (−3/p) for prime p, with (−3/3) = 0.
fn chi_minus_three(p: u64) -> i64 {
    if p == 3 {
        0
    } else if p % 3 == 1 {
        1
    } else {
        -1 // p ≡ 2 (mod 3); this includes p = 2
    }
}

/// The standard invariants of the modular curve X₀(n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X0Invariants {
    pub n: u64,
    /// ψ(n) = [SL₂(ℤ) : Γ₀(n)] = n ∏_{p|n} (1 + 1/p).
    pub psi: u64,
    /// Number of elliptic points of order 2.
    pub nu2: u64,
    /// Number of elliptic points of order 3.
    pub nu3: u64,
    /// Number of cusps: Σ_{d|n} φ(gcd(d, n/d)).
    pub cusps: u64,
    /// Genus of X₀(n).
    pub genus: u64,
}

/// Computes ψ, ν₂, ν₃, the cusp count, and the genus of X₀(n).
///
/// g = 1 + ψ/12 − ν₂/4 − ν₃/3 − ν∞/2, asserted to be a non-negative integer.
pub fn genus_x0(n: u64) -> X0Invariants {
    assert!(n > 0, "genus_x0 requires n ≥ 1");
    let primes = prime_divisors(n);

    let mut psi = n as u128;
    for &p in &primes {
        psi = psi / p as u128 * (p as u128 + 1);
    }
    let psi = u64::try_from(psi).expect("psi exceeds u64");

    let nu2: u64 = if n.is_multiple_of(4) {
        0
    } else {
        let mut prod: i64 = 1;
        for &p in &primes {
            prod *= 1 + chi_minus_one(p);
        }
        prod as u64
    };

    let nu3: u64 = if n.is_multiple_of(9) {
        0
    } else {
        let mut prod: i64 = 1;
        for &p in &primes {
            prod *= 1 + chi_minus_three(p);
        }
        prod as u64
    };

    let mut cusps = 0u64;
    for d in 1..=n {
        if n.is_multiple_of(d) {
            cusps += euler_phi(gcd(d, n / d));
        }
    }

    // 12g = 12 + ψ − 3ν₂ − 4ν₃ − 6ν∞; must land on a non-negative multiple of 12.
    let twelve_g = 12 + psi as i128 - 3 * nu2 as i128 - 4 * nu3 as i128 - 6 * cusps as i128;
    assert!(
        twelve_g >= 0 && twelve_g % 12 == 0,
        "genus formula did not produce a non-negative integer at n = {n}: 12g = {twelve_g}"
    );
    let genus = (twelve_g / 12) as u64;

    X0Invariants {
        n,
        psi,
        nu2,
        nu3,
        cusps,
        genus,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Published thresholds for congruence-subgroup genus growth, cited from the
/// Cummins–Pauli tables of congruence subgroups of low genus: every X₀(n)
/// with n ≥ 53 has genus ≥ 2, and every X₀(p) with p prime ≥ 23 has genus
/// ≥ 2.  Returned as (general threshold, prime threshold).
pub fn cummins_pauli_thresholds() -> (u64, u64) {
    (53, 23)
}

/// All n in `1..=max` with genus(X₀(n)) ≤ 1, ascending.
pub fn genus_le_one_levels(max: u64) -> Vec<u64> {
    (1..=max).filter(|&n| genus_x0(n).genus <= 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_divisor_lists() {
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(97), vec![97]);
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
    }

    #[test]
    fn totient_values() {
        let expected = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e, "phi({})", i + 1);
        }
    }

    #[test]
    fn qpn_case_table() {
        let q = qpn(3, 12);
        assert_eq!((q.degree, q.conductor), (2, 3));
        assert_eq!(q.label, "quadratic field of conductor 3");

        let q = qpn(2, 24);
        assert_eq!((q.degree, q.conductor), (4, 8));

        let q = qpn(2, 12);
        assert_eq!((q.degree, q.conductor), (2, 4));

        let q = qpn(5, 12);
        assert_eq!((q.degree, q.conductor), (1, 1));
        assert_eq!(q.label, "rational field");

        // p = 2 with 2 ∥ n contributes nothing.
        let q = qpn(2, 6);
        assert_eq!((q.degree, q.conductor), (1, 1));
    }

    #[test]
    #[should_panic(expected = "requires a prime")]
    fn qpn_rejects_composite_p() {
        qpn(4, 12);
    }

    #[test]
    fn orders_at_level_one_are_trivial() {
        assert_eq!(sl2_order(1), 1);
        assert_eq!(pgl2_order(1), 1);
        assert_eq!(psl2_order(1), 1);
    }

    #[test]
    fn tilde_degree_values() {
        assert_eq!(tilde_degree(12), 4);
        assert_eq!(tilde_degree(8), 4);
        assert_eq!(tilde_degree(15), 4);
        assert_eq!(tilde_degree(2), 1);
        assert_eq!(tilde_degree(7), 2);
        assert_eq!(tilde_degree(24), 8);
        assert_eq!(tilde_degree(1), 1);
    }

    #[test]
    fn tilde_degree_counts_square_roots_of_unity() {
        for n in 1..=600 {
            assert_eq!(
                tilde_degree(n),
                square_roots_of_unity_count(n),
                "tilde mismatch at n = {n}"
            );
        }
    }

    #[test]
    fn linear_group_orders() {
        assert_eq!(sl2_order(2), 6);
        assert_eq!(sl2_order(7), 336);
        assert_eq!(psl2_order(7), 168);
        assert_eq!(psl2_order(2), 6);
        assert_eq!(pgl2_order(12), 1152);
        assert_eq!(psl2_order(12), 288);
    }

    #[test]
    fn pgl2_is_tilde_times_psl2_sampled() {
        for n in 2..=400 {
            assert_eq!(
                pgl2_order(n),
                tilde_degree(n) * psl2_order(n),
                "ratio identity fails at n = {n}"
            );
        }
    }

    #[test]
    fn x0_genus_table_up_to_52() {
        // Nonzero genera among 1 ≤ n ≤ 52; every other level has genus 0.
        let nonzero: &[(u64, u64)] = &[
            (11, 1),
            (14, 1),
            (15, 1),
            (17, 1),
            (19, 1),
            (20, 1),
            (21, 1),
            (22, 2),
            (23, 2),
            (24, 1),
            (26, 2),
            (27, 1),
            (28, 2),
            (29, 2),
            (30, 3),
            (31, 2),
            (32, 1),
            (33, 3),
            (34, 3),
            (35, 3),
            (36, 1),
            (37, 2),
            (38, 4),
            (39, 3),
            (40, 3),
            (41, 3),
            (42, 5),
            (43, 3),
            (44, 4),
            (45, 3),
            (46, 5),
            (47, 4),
            (48, 3),
            (49, 1),
            (50, 2),
            (51, 5),
            (52, 5),
        ];
        let lookup: std::collections::BTreeMap<u64, u64> = nonzero.iter().copied().collect();
        for n in 1..=52 {
            let expected = lookup.get(&n).copied().unwrap_or(0);
            assert_eq!(genus_x0(n).genus, expected, "genus X0({n})");
        }
    }

    #[test]
    fn x0_100_has_genus_seven() {
        assert_eq!(genus_x0(100).genus, 7);
    }

    #[test]
    fn genus_at_most_one_levels() {
        let mut expected: Vec<u64> = (1..=21).collect();
        expected.extend([24, 25, 27, 32, 36, 49]);
        assert_eq!(genus_le_one_levels(120), expected);
    }

    #[test]
    fn x0_component_invariants() {
        // X0(6): psi = 12, no elliptic points, 4 cusps, genus 0.
        let inv = genus_x0(6);
        assert_eq!(
            (inv.psi, inv.nu2, inv.nu3, inv.cusps, inv.genus),
            (12, 0, 0, 4, 0)
        );

        // X0(2): one elliptic point of order 2, none of order 3.
        let inv = genus_x0(2);
        assert_eq!(
            (inv.psi, inv.nu2, inv.nu3, inv.cusps, inv.genus),
            (3, 1, 0, 2, 0)
        );

        // X0(11): psi = 12, both kinds of elliptic points vanish... nu2 = 0
        // since (−1/11) = −1; nu3 = 0 since (−3/11) = −1; 2 cusps; genus 1.
        let inv = genus_x0(11);
        assert_eq!(
            (inv.psi, inv.nu2, inv.nu3, inv.cusps, inv.genus),
            (12, 0, 0, 2, 1)
        );

        // X0(9): nu3 = 0 because 9 | n; cusps = phi(1)+phi(3)+phi(1) = 4.
        let inv = genus_x0(9);
        assert_eq!(
            (inv.psi, inv.nu2, inv.nu3, inv.cusps, inv.genus),
            (12, 0, 0, 4, 0)
        );
    }

    #[test]
    fn thresholds_are_the_published_ones() {
        assert_eq!(cummins_pauli_thresholds(), (53, 23));
        // Consistency with the computed table: genus ≥ 2 from the general
        // threshold onward (spot-check a window), and at every prime ≥ 23.
        for n in 53..=200 {
            assert!(genus_x0(n).genus >= 2, "X0({n}) should have genus ≥ 2");
        }
        for p in [23u64, 29, 31, 37, 41, 43, 47, 53, 59] {
            assert!(genus_x0(p).genus >= 2);
        }
    }
}
