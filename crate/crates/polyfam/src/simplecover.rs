//! Combinatorics of simple covers: branch counts, the minimal displacement
//! μ of a j-subset action, the feasibility inequality that forces j = 1 and
//! low genus, the palindromic transposition datum realizing a genus-zero
//! simple cover, and the decision logic for which specialization conclusions
//! hold at a given (genus, degree).

use std::collections::BTreeSet;
use std::fmt;

use num::BigInt;

use crate::genus::genus_lower_bound;
use crate::perm::{binomial, GroupSpec, JSubsetAction, Perm, PermError, DEFAULT_CAP};

/// Errors from cover-decision operations.
#[derive(Debug, thiserror::Error)]
pub enum CoverError {
    /// The (genus, degree) pair falls outside the theorem's hypotheses.
    #[error("hypotheses unmet for genus {g}, degree {n}: need n ≥ 5, and n ≥ 6 when g = 0")]
    HypothesisUnmet { g: u64, n: u64 },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Number of branch points of a simple cover of degree `n` by a curve of
/// genus `g`: 2g + 2n − 2.
pub fn branch_count(g: u64, n: u64) -> u64 {
    assert!(n >= 2, "branch_count requires degree n ≥ 2");
    2 * g + 2 * n - 2
}

/// Minimal displacement of the action on j-subsets: the number of j-subsets
/// moved by a transposition, in closed form 2·C(n−2, j−1).
///
/// A j-subset is moved by the transposition (a b) iff it contains exactly
/// one of a, b; there are 2·C(n−2, j−1) such subsets.
pub fn mu_jsubsets(n: usize, j: usize) -> u64 {
    assert!(
        (1..=n / 2).contains(&j),
        "mu_jsubsets requires 1 ≤ j ≤ n/2, got (n, j) = ({n}, {j})"
    );
    2 * binomial(n - 2, j - 1) as u64
}

/// Brute-force value of [`mu_jsubsets`]: the support size of the permutation
/// induced by the transposition (0 1) on the colex-ranked j-subsets.
/// Errors with `CapExceeded` when C(n, j) exceeds `cap`.
pub fn mu_jsubsets_bruteforce(n: usize, j: usize, cap: usize) -> Result<u64, PermError> {
    assert!((1..=n / 2).contains(&j));
    let action = JSubsetAction::new(n, j, cap)?;
    let transposition = Perm::from_cycles(n, &[&[0, 1]])?;
    let induced = action.induce(&transposition)?;
    Ok(induced.support_size() as u64)
}

/// All triples (n, j, g) with 5 ≤ n ≤ `n_max`, 1 ≤ j ≤ n/2, 0 ≤ g ≤ `g_max`
/// satisfying the feasibility inequality j(n−j) ≤ n(n−1)/(n+g−1), in
/// lexicographic order.
///
/// The inequality compares the minimal displacement of the j-subset cover
/// against the branch budget; it forces j = 1 and g ≤ 1.
pub fn feasibility_scan(n_max: u64, g_max: u64) -> Vec<(u64, u64, u64)> {
    assert!(n_max >= 5, "feasibility_scan requires n_max ≥ 5");
    let mut out = Vec::new();
    for n in 5..=n_max {
        for j in 1..=n / 2 {
            for g in 0..=g_max {
                // j(n−j) ≤ n(n−1)/(n+g−1), cleared of the denominator.
                if j * (n - j) * (n + g - 1) <= n * (n - 1) {
                    out.push((n, j, g));
                }
            }
        }
    }
    out
}

/// The palindromic transposition datum of length 2n−2 whose product is the
/// identity and whose entries generate Sₙ, realizing a genus-zero simple
/// cover of degree n.
#[derive(Debug, Clone)]
pub struct SimpleCoverDatum {
    pub n: usize,
    /// (1 2), (2 3), …, (n−1 n), (n−1 n), …, (2 3), (1 2) in 0-based form.
    pub transpositions: Vec<Perm>,
    pub product_is_identity: bool,
    pub generates_symmetric: bool,
    /// How generation of Sₙ was established.
    pub generation_justification: String,
    /// Genus from Riemann–Hurwitz: 1 − n + (1/2)·Σ(e−1) with 2n−2 simple
    /// branch points, which is always 0.
    pub genus: i64,
}

/// Builds the palindromic datum of 2n−2 adjacent transpositions, checks the
/// product is the identity and that the entries generate Sₙ, and evaluates
/// the Riemann–Hurwitz genus (always 0).
///
/// Generation is established by closure enumeration when n! fits the
/// enumeration cap; beyond that the datum contains every adjacent
/// transposition (i, i+1), which generate Sₙ, and the generated group is
/// checked transitive.
pub fn muller_example(n: usize) -> Result<SimpleCoverDatum, CoverError> {
    muller_example_with_cap(n, DEFAULT_CAP)
}

/// [`muller_example`] with an explicit closure-enumeration cap: degrees with
/// n! ≤ `cap` are verified by full enumeration, larger ones by the
/// adjacent-transposition argument.
pub fn muller_example_with_cap(n: usize, cap: usize) -> Result<SimpleCoverDatum, CoverError> {
    assert!(n >= 3, "the transposition datum needs degree n ≥ 3");

    let mut transpositions = Vec::with_capacity(2 * n - 2);
    for i in 0..n - 1 {
        transpositions.push(Perm::from_cycles(n, &[&[i as u16, i as u16 + 1]])?);
    }
    for i in (0..n - 1).rev() {
        transpositions.push(Perm::from_cycles(n, &[&[i as u16, i as u16 + 1]])?);
    }

    // Product in application order: the palindrome squares to the identity.
    let mut product = Perm::identity(n);
    for t in &transpositions {
        product = product.compose(t)?;
    }
    let product_is_identity = product.is_identity();

    let group = GroupSpec::new(
        n,
        format!("transposition datum on {n} points"),
        transpositions.clone(),
    )?;
    let factorial_n: Option<usize> = (1..=n).try_fold(1usize, |a, k| a.checked_mul(k));
    let (generates_symmetric, generation_justification) = match factorial_n {
        Some(f) if f <= cap => {
            let order = group.order()?;
            (
                order == f,
                format!("closure enumeration: group order {order} equals {n}!"),
            )
        }
        _ => {
            // The datum contains all adjacent transpositions (i, i+1),
            // which generate S_n; transitivity is checked independently.
            let transitive = group.is_transitive();
            (
                transitive,
                "contains every adjacent transposition (i, i+1), a generating set of S_n; \
                 generated group checked transitive"
                    .to_string(),
            )
        }
    };

    // Riemann–Hurwitz with 2n−2 simple branch points (each e − 1 = 1).
    let genus = 1 - n as i64 + (2 * n as i64 - 2) / 2;

    Ok(SimpleCoverDatum {
        n,
        transpositions,
        product_is_identity,
        generates_symmetric,
        generation_justification,
        genus,
    })
}

/// Conclusions available for the specializations of a polynomial defining a
/// simple cover, labeled by their traditional clause tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoverConclusion {
    /// (a) all but finitely many specializations have an irreducible factor
    /// of degree ≥ n−1.
    LargeFactor,
    /// (b) all but finitely many specializations are irreducible
    /// (requires genus ≥ 2).
    Irreducible,
    /// (c) all but finitely many specializations have Galois group Sₙ
    /// (requires genus ≥ 2 and n ≥ 7).
    FullSymmetricGroup,
}

impl CoverConclusion {
    /// Traditional clause tag: 'a', 'b', or 'c'.
    pub fn tag(self) -> char {
        match self {
            CoverConclusion::LargeFactor => 'a',
            CoverConclusion::Irreducible => 'b',
            CoverConclusion::FullSymmetricGroup => 'c',
        }
    }
}

impl fmt::Display for CoverConclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CoverConclusion::LargeFactor => "large-factor",
            CoverConclusion::Irreducible => "irreducible",
            CoverConclusion::FullSymmetricGroup => "full-symmetric-group",
        };
        write!(f, "({}) {}", self.tag(), name)
    }
}

/// Which conclusions hold for a simple cover of genus `g` and degree `n`:
/// (a) always, (b) when g ≥ 2, (c) when g ≥ 2 and n ≥ 7.
/// Errors with `HypothesisUnmet` unless n ≥ 5, and n ≥ 6 when g = 0.
pub fn theorem_decision(g: u64, n: u64) -> Result<BTreeSet<CoverConclusion>, CoverError> {
    if n < 5 || (g == 0 && n < 6) {
        return Err(CoverError::HypothesisUnmet { g, n });
    }
    let mut tags = BTreeSet::new();
    tags.insert(CoverConclusion::LargeFactor);
    if g >= 2 {
        tags.insert(CoverConclusion::Irreducible);
        if n >= 7 {
            tags.insert(CoverConclusion::FullSymmetricGroup);
        }
    }
    Ok(tags)
}

/// The genus lower bound for a subgroup of index ≥ 2, with zero fixed cosets
/// at each of the 2g+2n−2 simple (ramification-index-2) branch points.
/// Monotone in the index, so index 2 is the weakest case.
pub fn simple_branch_genus_bound(g: u64, n: u64, index: u64) -> num::rational::BigRational {
    let points = branch_count(g, n);
    let v: Vec<(u64, u64)> = (0..points).map(|_| (2u64, 0u64)).collect();
    genus_lower_bound(&BigInt::from(index), &v).expect("simple branch points have index 2 > 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::BigRational;
    use num::One;

    #[test]
    fn branch_counts() {
        assert_eq!(branch_count(0, 5), 8);
        assert_eq!(branch_count(2, 7), 16);
        assert_eq!(branch_count(0, 2), 2);
    }

    #[test]
    fn mu_closed_form_values() {
        assert_eq!(mu_jsubsets(6, 2), 8);
        for n in 2..20 {
            if n / 2 >= 1 {
                assert_eq!(mu_jsubsets(n, 1), 2);
            }
        }
        assert_eq!(mu_jsubsets(8, 4), 40);
    }

    #[test]
    fn mu_matches_bruteforce_up_to_ten_thousand() {
        for n in 2..=16 {
            for j in 1..=n / 2 {
                if binomial(n, j) <= 10_000 {
                    assert_eq!(
                        mu_jsubsets(n, j),
                        mu_jsubsets_bruteforce(n, j, 10_000).unwrap(),
                        "mu mismatch at (n, j) = ({n}, {j})"
                    );
                }
            }
        }
    }

    #[test]
    fn mu_bruteforce_respects_cap() {
        assert!(matches!(
            mu_jsubsets_bruteforce(20, 10, 10_000),
            Err(PermError::CapExceeded { .. })
        ));
    }

    #[test]
    fn feasibility_forces_j_one_and_low_genus() {
        let rows = feasibility_scan(50, 10);
        let expected: Vec<(u64, u64, u64)> =
            (5..=50).flat_map(|n| [(n, 1, 0), (n, 1, 1)]).collect();
        assert_eq!(rows, expected);
    }

    #[test]
    fn feasibility_boundary_cases() {
        // (5, 2, 0): 2·3 = 6 > 5·4/4 = 5, infeasible.
        assert!(!feasibility_scan(5, 0).contains(&(5, 2, 0)));
        // (6, 1, 1): 5 ≤ 30/6 = 5, feasible on the boundary.
        assert!(feasibility_scan(6, 1).contains(&(6, 1, 1)));
    }

    #[test]
    fn transposition_datum_small_degrees() {
        for n in [3usize, 5, 8] {
            let datum = muller_example(n).unwrap();
            assert_eq!(datum.transpositions.len(), 2 * n - 2);
            assert!(datum.product_is_identity, "product not identity at n = {n}");
            assert!(datum.generates_symmetric, "datum fails to generate S_{n}");
            assert!(datum.generation_justification.contains("closure"));
            assert_eq!(datum.genus, 0);
        }
    }

    #[test]
    fn transposition_datum_large_degree_uses_adjacency_route() {
        let datum = muller_example(12).unwrap();
        assert!(datum.product_is_identity);
        assert!(datum.generates_symmetric);
        assert!(datum.generation_justification.contains("adjacent"));
        assert_eq!(datum.genus, 0);
    }

    #[test]
    fn decision_table() {
        use CoverConclusion::*;
        assert_eq!(
            theorem_decision(0, 6)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![LargeFactor]
        );
        assert_eq!(
            theorem_decision(2, 7)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![LargeFactor, Irreducible, FullSymmetricGroup]
        );
        assert_eq!(
            theorem_decision(2, 6)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![LargeFactor, Irreducible]
        );
        assert_eq!(
            theorem_decision(1, 9)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![LargeFactor]
        );
        assert!(matches!(
            theorem_decision(0, 5),
            Err(CoverError::HypothesisUnmet { g: 0, n: 5 })
        ));
        assert!(matches!(
            theorem_decision(3, 4),
            Err(CoverError::HypothesisUnmet { .. })
        ));
    }

    #[test]
    fn conclusion_tags_and_display() {
        assert_eq!(CoverConclusion::LargeFactor.tag(), 'a');
        assert_eq!(
            CoverConclusion::FullSymmetricGroup.to_string(),
            "(c) full-symmetric-group"
        );
    }

    #[test]
    fn simple_branch_points_force_genus_beyond_one() {
        // With zero fixed cosets at every simple branch point, even an
        // index-2 subgroup already exceeds genus 1 in the scanned range.
        for n in 5..=12u64 {
            for g in 2..=5u64 {
                let bound = simple_branch_genus_bound(g, n, 2);
                assert!(
                    bound > BigRational::one(),
                    "bound not > 1 at (g, n) = ({g}, {n}): {bound}"
                );
                // Closed form of this bound: g + n − 2.
                assert_eq!(bound, BigRational::from(BigInt::from(g + n - 2)));
            }
        }
    }
}
