//! Specialization scanner over ℚ: clears denominators of L_n^{(a/b)}(x),
//! factors the result, and — when irreducible — certifies the Galois class
//! from Dedekind cycle types at good primes.
//!
//! Certification is one-sided: a verdict of `s_n` / `a_n` / `contains_an`
//! carries re-checkable (prime, cycle type) evidence, while `undetermined`
//! admits false negatives (the prime budget ran out before witnesses
//! appeared).

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::laguerre::{branch_locus, disc_closed_form, specialize};
use crate::poly::arith::primes_from;
use crate::poly::{dedekind_cycle_type, factor_over_q, is_rational_square, IntPoly};

/// Default number of good primes sampled per specialization.
pub const DEFAULT_PRIME_BUDGET: usize = 60;

/// Galois classification of one specialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Full symmetric group, certified by stored evidence.
    #[serde(rename = "s_n")]
    SymmetricCertified,
    /// Alternating group, certified (contains Aₙ and the discriminant is a
    /// rational square).
    #[serde(rename = "a_n")]
    AlternatingCertified,
    /// Contains Aₙ, certified, but not resolved to Sₙ vs Aₙ.
    #[serde(rename = "contains_an")]
    ContainsAlternating,
    /// Splits over ℚ.
    #[serde(rename = "reducible")]
    Reducible,
    /// Irreducible but uncertified within the prime budget.
    #[serde(rename = "undetermined")]
    Undetermined,
    /// α on the branch locus: the specialization has a repeated root by
    /// construction.
    #[serde(rename = "degenerate")]
    Degenerate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::SymmetricCertified => "s_n",
            Verdict::AlternatingCertified => "a_n",
            Verdict::ContainsAlternating => "contains_an",
            Verdict::Reducible => "reducible",
            Verdict::Undetermined => "undetermined",
            Verdict::Degenerate => "degenerate",
        }
    }
}

fn serialize_rational<S: serde::Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

fn serialize_intpoly<S: serde::Serializer>(p: &IntPoly, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(p.coeffs().len()))?;
    for c in p.coeffs() {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

/// Everything measured about one specialization α.
#[derive(Debug, Clone, Serialize)]
pub struct SpecializationReport {
    pub n: usize,
    /// The specialized parameter, exact.
    #[serde(serialize_with = "serialize_rational")]
    pub alpha: BigRational,
    /// bⁿ·L_n^{(a/b)}(x): denominators cleared; automatically primitive.
    /// Serialized as decimal coefficient strings, constant term first.
    #[serde(serialize_with = "serialize_intpoly")]
    pub cleared: IntPoly,
    /// α lies on the branch locus {−2, …, −n}.
    pub degenerate: bool,
    /// Degrees of the ℚ-irreducible factors, multiplicity-expanded,
    /// descending; sums to n.
    pub factor_degrees: Vec<usize>,
    /// The discriminant of L_n^{(t)} evaluated at α is a rational square.
    pub disc_square: bool,
    pub galois: Verdict,
    /// Certifying witnesses only: (prime, Dedekind cycle type), in discovery
    /// order. Empty unless the verdict is a certification (and empty for
    /// n ≤ 3, where irreducibility alone places the group over Aₙ).
    pub evidence: Vec<(u64, Vec<usize>)>,
    /// Number of good primes consumed (bad primes are skipped for free).
    pub budget_used: usize,
}

/// Clears denominators: bⁿ·L_n^{(a/b)}(x) for α = a/b in lowest terms.
/// The result is primitive (coefficient gcd 1) with the sign of L itself
/// because gcd(a + kb, b) = 1 for every k.
pub fn specialize_cleared(n: usize, alpha: &BigRational) -> IntPoly {
    specialize(n, alpha)
}

/// Witness bookkeeping for the two certification routes.
#[derive(Default)]
struct Witnesses {
    n_cycle: Option<(u64, Vec<usize>)>,
    n_minus_one: Option<(u64, Vec<usize>)>,
    transposition: Option<(u64, Vec<usize>)>,
    q_cycle: Option<(u64, Vec<usize>)>,
}

fn is_cycle_plus_fixed(ct: &[usize], len: usize) -> bool {
    ct.first() == Some(&len) && ct[1..].iter().all(|&c| c == 1)
}

/// Primes q with n/2 < q < n−2 (the Jordan window for q-cycle witnesses).
fn jordan_window(n: usize) -> Vec<usize> {
    ((n / 2 + 1)..n.saturating_sub(2))
        .filter(|&q| crate::poly::arith::is_prime_u64(q as u64))
        .collect()
}

/// Classifies one specialization: factors over ℚ; when irreducible, samples
/// Dedekind cycle types at good primes (ascending from 2) until a
/// certificate completes or `prime_budget` good primes are spent.
///
/// Certificates:
/// * trio {n-cycle, [n−1,1], [2,1,…,1]} → Sₙ;
/// * (n-cycle or [n−1,1]) + [q,1,…,1] with q prime, n/2 < q < n−2 →
///   contains Aₙ, resolved to Sₙ/Aₙ by the discriminant square test;
/// * n ≤ 3: irreducibility alone certifies contains Aₙ, resolved the same
///   way.
pub fn analyze(n: usize, alpha: &BigRational, prime_budget: usize) -> SpecializationReport {
    assert!(prime_budget >= 1);
    assert!(n >= 1);
    let cleared = specialize_cleared(n, alpha);
    let degenerate = alpha.is_integer() && branch_locus(n).contains(&alpha.to_integer());

    let factorization = factor_over_q(&cleared).expect("scan degrees stay under the factor cap");
    let factor_degrees = factorization.degree_pattern();
    debug_assert_eq!(factor_degrees.iter().sum::<usize>(), n);

    let disc_at_alpha = disc_closed_form(n).evaluate_rational(alpha);
    let disc_square = is_rational_square(&disc_at_alpha);

    let mut report = SpecializationReport {
        n,
        alpha: alpha.clone(),
        cleared,
        degenerate,
        factor_degrees,
        disc_square,
        galois: Verdict::Undetermined,
        evidence: Vec::new(),
        budget_used: 0,
    };

    if degenerate {
        report.galois = Verdict::Degenerate;
        return report;
    }
    if !factorization.is_irreducible() {
        report.galois = Verdict::Reducible;
        return report;
    }

    if n <= 3 {
        // Any transitive subgroup of S₂ or S₃ contains the alternating
        // group, so irreducibility is the whole certificate.
        report.galois = if disc_square {
            Verdict::AlternatingCertified
        } else {
            Verdict::SymmetricCertified
        };
        return report;
    }

    let window = jordan_window(n);
    let mut w = Witnesses::default();
    let mut budget_used = 0usize;
    for p in primes_from(2) {
        if budget_used == prime_budget {
            break;
        }
        let Some(ct) = dedekind_cycle_type(&report.cleared, p) else {
            continue; // bad prime: skipped for free
        };
        budget_used += 1;
        if w.n_cycle.is_none() && is_cycle_plus_fixed(&ct, n) {
            w.n_cycle = Some((p, ct.clone()));
        }
        if w.n_minus_one.is_none() && is_cycle_plus_fixed(&ct, n - 1) {
            w.n_minus_one = Some((p, ct.clone()));
        }
        if w.transposition.is_none() && is_cycle_plus_fixed(&ct, 2) {
            w.transposition = Some((p, ct.clone()));
        }
        if w.q_cycle.is_none() && window.iter().any(|&q| is_cycle_plus_fixed(&ct, q)) {
            w.q_cycle = Some((p, ct.clone()));
        }

        // Route A: the classical trio certifies Sₙ outright.
        if let (Some(a), Some(b), Some(c)) = (&w.n_cycle, &w.n_minus_one, &w.transposition) {
            let mut ev = vec![a.clone(), b.clone(), c.clone()];
            ev.sort_by_key(|(p, _)| *p);
            report.evidence = ev;
            report.galois = Verdict::SymmetricCertified;
            report.budget_used = budget_used;
            return report;
        }
        // Route B: long cycle + Jordan-window prime cycle puts the group
        // over Aₙ; the discriminant settles which side.
        let long = w.n_cycle.as_ref().or(w.n_minus_one.as_ref());
        if let (Some(l), Some(q)) = (long, &w.q_cycle) {
            let mut ev = vec![l.clone(), q.clone()];
            ev.sort_by_key(|(p, _)| *p);
            report.evidence = ev;
            report.galois = if disc_square {
                Verdict::AlternatingCertified
            } else {
                Verdict::SymmetricCertified
            };
            report.budget_used = budget_used;
            return report;
        }
    }

    report.budget_used = budget_used;
    report.galois = Verdict::Undetermined;
    report
}

/// Count of degree-j irreducible factors (with multiplicity): Σ j·count = n.
pub fn j_factor_census(n: usize, alpha: &BigRational) -> BTreeMap<usize, usize> {
    let cleared = specialize_cleared(n, alpha);
    let factorization = factor_over_q(&cleared).expect("scan degrees stay under the factor cap");
    let mut census = BTreeMap::new();
    for (factor, multiplicity) in &factorization.factors {
        *census.entry(factor.deg()).or_insert(0) += multiplicity;
    }
    debug_assert_eq!(census.iter().map(|(j, c)| j * c).sum::<usize>(), n);
    census
}

/// Scan parameters, echoed into the report.
#[derive(Debug, Clone, Serialize)]
pub struct ScanParams {
    pub n: usize,
    pub height: u64,
    pub prime_budget: usize,
}

/// Verdict tallies over the scanned box.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanCounts {
    pub s_n: usize,
    pub a_n: usize,
    pub contains_an: usize,
    pub reducible: usize,
    pub undetermined: usize,
    pub degenerate: usize,
}

/// Scan summary: parameters, verdict counts, and full reports for every
/// exceptional α (anything not certified Sₙ).
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub params: ScanParams,
    pub counts: ScanCounts,
    pub exceptions: Vec<SpecializationReport>,
}

/// All α = a/b with |a| ≤ height, 1 ≤ b ≤ height, gcd(a, b) = 1, b > 0, in
/// deterministic order: b ascending, then a ascending.
pub fn rational_box(height: u64) -> Vec<BigRational> {
    let mut out = Vec::new();
    for b in 1..=height as i64 {
        for a in -(height as i64)..=height as i64 {
            if num::integer::gcd(a, b) == 1 {
                out.push(BigRational::new(BigInt::from(a), BigInt::from(b)));
            }
        }
    }
    out
}

/// Scans every α in the height box, in enumeration order (α-values analyzed
/// in parallel, results merged deterministically).
pub fn scan(n: usize, height: u64, prime_budget: usize) -> ScanReport {
    let alphas = rational_box(height);
    let reports: Vec<SpecializationReport> = alphas
        .par_iter()
        .map(|alpha| analyze(n, alpha, prime_budget))
        .collect();

    let mut counts = ScanCounts::default();
    let mut exceptions = Vec::new();
    for report in reports {
        match report.galois {
            Verdict::SymmetricCertified => counts.s_n += 1,
            Verdict::AlternatingCertified => counts.a_n += 1,
            Verdict::ContainsAlternating => counts.contains_an += 1,
            Verdict::Reducible => counts.reducible += 1,
            Verdict::Undetermined => counts.undetermined += 1,
            Verdict::Degenerate => counts.degenerate += 1,
        }
        if report.galois != Verdict::SymmetricCertified {
            exceptions.push(report);
        }
    }
    ScanReport {
        params: ScanParams {
            n,
            height,
            prime_budget,
        },
        counts,
        exceptions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn cleared_specializations() {
        assert_eq!(specialize_cleared(2, &rat(0, 1)), ip(&[2, -4, 1]));
        assert_eq!(specialize_cleared(1, &rat(-1, 1)), ip(&[0, -1]));
        assert_eq!(specialize_cleared(2, &rat(1, 2)), ip(&[15, -20, 4]));
    }

    #[test]
    fn quadratic_at_zero_is_symmetric() {
        let r = analyze(2, &rat(0, 1), DEFAULT_PRIME_BUDGET);
        assert_eq!(r.galois, Verdict::SymmetricCertified);
        assert!(!r.disc_square); // disc = 8
        assert_eq!(r.factor_degrees, vec![2]);
        assert!(r.evidence.is_empty());
    }

    #[test]
    fn quintic_at_zero_certifies_s5() {
        let r = analyze(5, &rat(0, 1), DEFAULT_PRIME_BUDGET);
        assert_eq!(r.galois, Verdict::SymmetricCertified);
        assert_eq!(
            r.evidence,
            vec![(11, vec![4, 1]), (37, vec![5]), (97, vec![2, 1, 1, 1]),]
        );
        // 97 is the 25th prime; 2, 3, 5 divide the discriminant and are
        // skipped as bad, leaving 22 good primes consumed.
        assert_eq!(r.budget_used, 22);
    }

    #[test]
    fn branch_point_is_degenerate_with_shape() {
        let r = analyze(6, &rat(-3, 1), DEFAULT_PRIME_BUDGET);
        assert!(r.degenerate);
        assert_eq!(r.galois, Verdict::Degenerate);
        assert_eq!(r.factor_degrees, vec![3, 1, 1, 1]);
        assert_eq!(r.budget_used, 0);
    }

    #[test]
    fn degree_ten_alternating_witnesses() {
        let r = analyze(10, &rat(-16, 3), DEFAULT_PRIME_BUDGET);
        assert_eq!(r.galois, Verdict::AlternatingCertified);
        assert!(r.disc_square);
        assert_eq!(r.evidence, vec![(19, vec![7, 1, 1, 1]), (31, vec![9, 1])]);

        let r10 = analyze(10, &rat(10, 1), DEFAULT_PRIME_BUDGET);
        assert_eq!(r10.galois, Verdict::AlternatingCertified);
        assert!(r10
            .evidence
            .iter()
            .any(|(p, ct)| *p == 11 && ct == &vec![7, 1, 1, 1]));
    }

    #[test]
    fn census_weighted_sum() {
        let census = j_factor_census(5, &rat(0, 1));
        assert_eq!(census, BTreeMap::from([(5, 1)]));

        // α = −1 at n = 4 factors as linear × cubic.
        let census = j_factor_census(4, &rat(-1, 1));
        assert_eq!(census, BTreeMap::from([(1, 1), (3, 1)]));

        // degenerate endpoint: (−x)⁶ … the census still sums to n.
        let census = j_factor_census(6, &rat(-6, 1));
        assert_eq!(census, BTreeMap::from([(1, 6)]));
    }

    #[test]
    fn rational_box_order_and_coprimality() {
        let alphas = rational_box(2);
        // b = 1: −2, −1, 0, 1, 2; b = 2: −1/2, 1/2 … a odd only.
        let expected: Vec<BigRational> = vec![
            rat(-2, 1),
            rat(-1, 1),
            rat(0, 1),
            rat(1, 1),
            rat(2, 1),
            rat(-1, 2),
            rat(1, 2),
        ];
        assert_eq!(alphas, expected);
    }

    #[test]
    fn quartic_scan_height_twenty() {
        let report = scan(4, 20, DEFAULT_PRIME_BUDGET);
        let reducible: Vec<String> = report
            .exceptions
            .iter()
            .filter(|r| r.galois == Verdict::Reducible)
            .map(|r| r.alpha.to_string())
            .collect();
        assert_eq!(reducible, vec!["-1", "5", "-11/3", "-4/3", "12/5"]);
        assert_eq!(report.counts.reducible, 5);
        assert_eq!(report.counts.degenerate, 3);

        // Linear factor present at the rank-positive exceptional points.
        let minus_one = report
            .exceptions
            .iter()
            .find(|r| r.alpha == rat(-1, 1))
            .unwrap();
        assert_eq!(minus_one.factor_degrees, vec![3, 1]);
        assert!(minus_one.disc_square);

        let twelve_fifths = report
            .exceptions
            .iter()
            .find(|r| r.alpha == rat(12, 5))
            .unwrap();
        assert_eq!(twelve_fifths.factor_degrees, vec![2, 2]);

        // Square-discriminant α (off the branch locus).
        let square_disc: Vec<String> = report
            .exceptions
            .iter()
            .filter(|r| r.disc_square && !r.degenerate)
            .map(|r| r.alpha.to_string())
            .collect();
        assert_eq!(
            square_disc,
            vec!["-10", "-5", "-1", "4", "-20/11", "-19/11", "5/11", "10/11", "-20/13", "-2/13"]
        );
    }

    #[test]
    fn quintic_scan_height_twenty() {
        let report = scan(5, 20, DEFAULT_PRIME_BUDGET);
        let reducible: Vec<String> = report
            .exceptions
            .iter()
            .filter(|r| r.galois == Verdict::Reducible)
            .map(|r| r.alpha.to_string())
            .collect();
        assert_eq!(reducible, vec!["-1", "-19/5", "-17/5", "7/5"]);
        for r in report
            .exceptions
            .iter()
            .filter(|r| r.galois == Verdict::Reducible)
        {
            assert_eq!(r.factor_degrees, vec![4, 1]);
        }
        let square_disc: Vec<String> = report
            .exceptions
            .iter()
            .filter(|r| r.disc_square && !r.degenerate)
            .map(|r| r.alpha.to_string())
            .collect();
        assert_eq!(
            square_disc,
            vec!["-7", "1", "-13/7", "-4/7", "-17/11", "-14/11", "-19/17"]
        );
    }

    #[test]
    fn verdict_json_names() {
        assert_eq!(
            serde_json::to_string(&Verdict::SymmetricCertified).unwrap(),
            "\"s_n\""
        );
        assert_eq!(
            serde_json::to_string(&Verdict::ContainsAlternating).unwrap(),
            "\"contains_an\""
        );
        let report = analyze(2, &rat(0, 1), 5);
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["galois"], "s_n");
        assert_eq!(v["alpha"], "0");
        assert_eq!(v["cleared"][0], "2");
    }

    #[test]
    fn scan_json_schema_keys() {
        let report = scan(4, 3, 10);
        let v = serde_json::to_value(&report).unwrap();
        assert!(v.get("params").is_some());
        let counts = v.get("counts").unwrap();
        for key in [
            "s_n",
            "a_n",
            "contains_an",
            "reducible",
            "undetermined",
            "degenerate",
        ] {
            assert!(counts.get(key).is_some(), "missing counts key {key}");
        }
        assert!(v.get("exceptions").unwrap().is_array());
    }
}
