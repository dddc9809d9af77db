//! The one-parameter polynomial family under study and its exactly computed
//! invariants.
//!
//! The degree-n member is
//!
//! ```text
//! L_n^{(t)}(x) = Σ_{j=0}^{n} (−x)^j · C(n,j) · ∏_{k=j+1}^{n} (t + k),
//! ```
//!
//! a generalized Laguerre polynomial in a nonstandard normalization whose
//! coefficients are integers in t. Its two-variable homogenization
//! F_n(x, ν, μ), with x^{n−j}-coefficient (−1)^j·C(n,j)·∏_{i=n−j+1}^{n}(ν+iμ),
//! interpolates between the family (μ = 1, up to the sign (−1)^n) and the
//! pure power (x−ν)^n (μ = 0). This module builds both forms exactly,
//! verifies the derivative and three-term recurrences that drive the
//! ramification analysis, computes the parameter discriminant in closed form
//! and independently via resultants, and extracts the shape of each
//! degenerate fiber.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::poly::{factor_over_q, BivarPoly, IntPoly};

/// L_n^{(t)}(x) as a polynomial in x whose coefficients live in ℤ[t].
pub fn laguerre(n: usize) -> BivarPoly {
    let mut cx = Vec::with_capacity(n + 1);
    for j in 0..=n {
        // (−1)^j C(n,j) ∏_{k=j+1}^{n} (t+k)
        let mut c = IntPoly::constant(signed_binomial(n, j));
        for k in j + 1..=n {
            c = c.mul(&IntPoly::from_coeffs(vec![BigInt::from(k), BigInt::one()]));
        }
        cx.push(c);
    }
    BivarPoly::from_x_coeffs(cx)
}

fn signed_binomial(n: usize, j: usize) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..j {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    if j % 2 == 1 {
        -b
    } else {
        b
    }
}

/// The member at parameter α = a/b (lowest terms), scaled by bⁿ so the
/// result has integer coefficients: bⁿ·L_n^{(a/b)}(x). For integer α this is
/// exactly L_n^{(α)}(x). The scaling is by a nonzero constant, so
/// factorization shape, irreducibility, and Galois-theoretic content are
/// unchanged.
pub fn specialize(n: usize, alpha: &BigRational) -> IntPoly {
    let a = alpha.numer();
    let b = alpha.denom();
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        // (−1)^j C(n,j) b^j ∏_{k=j+1}^{n} (a + k·b)
        let mut c = signed_binomial(n, j) * b.pow(j as u32);
        for k in j + 1..=n {
            c *= a + BigInt::from(k) * b;
        }
        coeffs.push(c);
    }
    IntPoly::from_coeffs(coeffs)
}

/// Closed form of the x-discriminant as a polynomial in t:
/// `disc_x L_n = n! · ∏_{j=2}^{n} (j(t+j))^{j−1}`.
pub fn disc_closed_form(n: usize) -> IntPoly {
    assert!(n >= 1);
    let mut constant = BigInt::one();
    for j in 2..=n {
        constant *= BigInt::from(j); // n! piece
        constant *= BigInt::from(j).pow((j - 1) as u32);
    }
    let mut out = IntPoly::constant(constant);
    for j in 2..=n {
        let lin = IntPoly::from_coeffs(vec![BigInt::from(j), BigInt::one()]);
        for _ in 0..j - 1 {
            out = out.mul(&lin);
        }
    }
    out
}

/// Recompute disc_x L_n from scratch via bivariate resultants and compare
/// with the closed form.
pub fn disc_matches_closed_form(n: usize) -> bool {
    laguerre(n).discriminant_x() == disc_closed_form(n)
}

/// Parameter values where the fiber degenerates: the integer roots
/// −2, −3, …, −n of the discriminant.
pub fn branch_locus(n: usize) -> Vec<BigInt> {
    (2..=n).map(|j| BigInt::from(-(j as i64))).collect()
}

/// Exact factorization shape of one fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberShape {
    /// Irreducible factors appearing with multiplicity ≥ 2.
    pub repeated_factors: Vec<(IntPoly, usize)>,
    /// All irreducible factor degrees, one entry per multiplicity, descending.
    pub degree_pattern: Vec<usize>,
}

impl FiberShape {
    /// When the shape is "exactly one repeated factor, and it is linear",
    /// return (its rational root, its multiplicity).
    pub fn unique_rational_repeated_root(&self) -> Option<(BigRational, usize)> {
        if self.repeated_factors.len() != 1 {
            return None;
        }
        let (f, m) = &self.repeated_factors[0];
        if f.deg() != 1 {
            return None;
        }
        Some((-BigRational::new(f.coeff(0), f.coeff(1)), *m))
    }
}

/// Factor the fiber at an integer parameter value and report its shape.
pub fn fiber_shape(n: usize, nu0: &BigInt) -> FiberShape {
    let f = specialize(n, &BigRational::from_integer(nu0.clone()));
    let fac = factor_over_q(&f).expect("family degrees stay within the factor cap");
    let repeated_factors = fac
        .factors
        .iter()
        .filter(|(_, m)| *m >= 2)
        .cloned()
        .collect();
    FiberShape {
        repeated_factors,
        degree_pattern: fac.degree_pattern(),
    }
}

/// True iff the affine surface L_n^{(ν)}(x) = 0 is smooth above ν = ν₀:
/// the specialized polynomial, its x-derivative, and its ν-derivative have
/// no common root, i.e. their gcd over ℚ[x] is constant.
pub fn affine_smooth_at(n: usize, nu0: &BigInt) -> bool {
    let fam = laguerre(n);
    let f = fam.eval_t(nu0);
    let fx = fam.derivative_x().eval_t(nu0);
    let fnu = fam.derivative_t().eval_t(nu0);
    let g = f.gcd_primitive(&fx).gcd_primitive(&fnu);
    g.is_constant()
}

/// The quadratic-subfield data of the family: the parameter discriminant is
/// a square times `squarefree_part`, so the specializations with square
/// discriminant correspond to rational points on y² = squarefree_part(t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadSubfield {
    /// ∏_{j even, 2 ≤ j ≤ n} (t + j) — the squarefree kernel of disc_x L_n
    /// (up to a constant).
    pub squarefree_part: IntPoly,
    /// Its degree, ⌊n/2⌋.
    pub degree: usize,
    /// Genus of the hyperelliptic model y² = squarefree_part(t):
    /// ⌊(degree−1)/2⌋ = ⌊(n−2)/4⌋.
    pub genus: usize,
}

pub fn quad_subfield(n: usize) -> QuadSubfield {
    assert!(n >= 2);
    let disc = disc_closed_form(n);
    // product of the odd-multiplicity squarefree components
    let mut squarefree_part = IntPoly::one();
    for (u, m) in disc.squarefree_decomposition() {
        if m % 2 == 1 {
            squarefree_part = squarefree_part.mul(&u);
        }
    }
    let degree = squarefree_part.deg();
    let genus = if degree == 0 { 0 } else { (degree - 1) / 2 };
    QuadSubfield {
        squarefree_part,
        degree,
        genus,
    }
}

// ---------------------------------------------------------------------------
// trivariate homogenization
// ---------------------------------------------------------------------------

/// Sparse exact polynomial in ℤ[x, ν, μ], keyed by (x-power, ν-power,
/// μ-power). Used to state and verify identities of the homogenized family.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XNuMu {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl XNuMu {
    pub fn zero() -> Self {
        XNuMu::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut t = XNuMu::zero();
        t.insert_add((0, 0, 0), c);
        t
    }

    pub fn term(xp: u32, nup: u32, mup: u32, c: BigInt) -> Self {
        let mut t = XNuMu::zero();
        t.insert_add((xp, nup, mup), c);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, key: (u32, u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, o: &XNuMu) -> XNuMu {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &XNuMu) -> XNuMu {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert_add(*k, -c);
        }
        out
    }

    pub fn mul(&self, o: &XNuMu) -> XNuMu {
        let mut out = XNuMu::zero();
        for ((x1, n1, m1), c1) in &self.terms {
            for ((x2, n2, m2), c2) in &o.terms {
                out.insert_add((x1 + x2, n1 + n2, m1 + m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> XNuMu {
        let mut out = XNuMu::zero();
        for (k, v) in &self.terms {
            out.insert_add(*k, v * c);
        }
        out
    }

    /// x·∂/∂x.
    pub fn x_dx(&self) -> XNuMu {
        let mut out = XNuMu::zero();
        for ((xp, np, mp), c) in &self.terms {
            out.insert_add((*xp, *np, *mp), c * BigInt::from(*xp));
        }
        out
    }

    /// Substitute μ = 1, producing a polynomial in x with ℤ[ν]-coefficients.
    pub fn at_mu_one(&self) -> BivarPoly {
        self.collapse(|_| true)
    }

    /// Substitute μ = 0.
    pub fn at_mu_zero(&self) -> BivarPoly {
        self.collapse(|mp| mp == 0)
    }

    fn collapse(&self, keep: impl Fn(u32) -> bool) -> BivarPoly {
        let mut grid: BTreeMap<u32, BTreeMap<u32, BigInt>> = BTreeMap::new();
        for ((xp, np, mp), c) in &self.terms {
            if !keep(*mp) {
                continue;
            }
            let entry = grid.entry(*xp).or_default().entry(*np).or_default();
            *entry += c;
        }
        let max_x = grid.keys().next_back().copied().unwrap_or(0);
        let mut cx = Vec::with_capacity(max_x as usize + 1);
        for xp in 0..=max_x {
            let coeffs = match grid.get(&xp) {
                None => Vec::new(),
                Some(row) => {
                    let max_n = row.keys().next_back().copied().unwrap_or(0);
                    (0..=max_n)
                        .map(|np| row.get(&np).cloned().unwrap_or_default())
                        .collect()
                }
            };
            cx.push(IntPoly::from_coeffs(coeffs));
        }
        BivarPoly::from_x_coeffs(cx)
    }

    /// True iff every monomial with x-power n−j has total (ν,μ)-degree
    /// exactly j — i.e. the x^{n−j} coefficient is homogeneous of degree j.
    pub fn coefficients_homogeneous(&self, n: usize) -> bool {
        self.terms
            .keys()
            .all(|(xp, np, mp)| (np + mp) as usize == n - *xp as usize)
    }
}

/// The homogenized member F_n(x, ν, μ): the x^{n−j} coefficient is
/// (−1)^j·C(n,j)·∏_{i=n−j+1}^{n} (ν + iμ).
pub fn homogeneous_family(n: usize) -> XNuMu {
    let mut out = XNuMu::zero();
    for j in 0..=n {
        // expand ∏_{i=n−j+1}^{n} (ν + iμ): degrees[k] is the ν^k μ^{j−k} coeff
        let mut prod = vec![BigInt::one()];
        for i in n - j + 1..=n {
            let mut next = vec![BigInt::zero(); prod.len() + 1];
            for (k, c) in prod.iter().enumerate() {
                next[k + 1] += c; // times ν
                next[k] += c * BigInt::from(i); // times iμ
            }
            prod = next;
        }
        let sign = signed_binomial(n, j);
        for (k, c) in prod.into_iter().enumerate() {
            out.insert_add(((n - j) as u32, k as u32, (j - k) as u32), c * &sign);
        }
    }
    out
}

/// k_j(ν, μ) = j·(ν + jμ), the coefficient linking consecutive members.
pub fn k_factor(j: usize) -> XNuMu {
    XNuMu::term(0, 1, 0, BigInt::from(j)).add(&XNuMu::term(
        0,
        0,
        1,
        BigInt::from(j) * BigInt::from(j),
    ))
}

/// Verify x·∂ₓF_m = m·F_m + k_m·F_{m−1} for 1 ≤ m ≤ max_m.
pub fn derivative_recurrence_holds(max_m: usize) -> bool {
    let mut prev = homogeneous_family(0);
    for m in 1..=max_m {
        let cur = homogeneous_family(m);
        let lhs = cur.x_dx();
        let rhs = cur.scale(&BigInt::from(m)).add(&k_factor(m).mul(&prev));
        if lhs != rhs {
            return false;
        }
        prev = cur;
    }
    true
}

/// Verify F_m = (x − ν − (2m−1)μ)·F_{m−1} − μ·k_{m−1}·F_{m−2} for
/// 2 ≤ m ≤ max_m.
pub fn three_term_recurrence_holds(max_m: usize) -> bool {
    let mut f_prev2 = homogeneous_family(0);
    let mut f_prev = homogeneous_family(1);
    for m in 2..=max_m {
        let cur = homogeneous_family(m);
        let linear = XNuMu::term(1, 0, 0, BigInt::one())
            .sub(&XNuMu::term(0, 1, 0, BigInt::one()))
            .sub(&XNuMu::term(0, 0, 1, BigInt::from(2 * m - 1)));
        let mu = XNuMu::term(0, 0, 1, BigInt::one());
        let rhs = linear
            .mul(&f_prev)
            .sub(&mu.mul(&k_factor(m - 1)).mul(&f_prev2));
        if cur != rhs {
            return false;
        }
        f_prev2 = f_prev;
        f_prev = cur;
    }
    true
}

/// F_n(x, t, 1) = (−1)ⁿ·L_n^{(t)}(x), exactly.
pub fn dehomogenization_matches(n: usize) -> bool {
    let lhs = homogeneous_family(n).at_mu_one();
    let mut sign = BigInt::one();
    if n % 2 == 1 {
        sign = -sign;
    }
    let rhs = BivarPoly::from_x_coeffs(
        laguerre(n)
            .x_coeffs()
            .iter()
            .map(|c| c.scale(&sign))
            .collect(),
    );
    lhs == rhs
}

/// F_n(x, ν, 0) = (x − ν)ⁿ, exactly.
pub fn mu_zero_collapses_to_power(n: usize) -> bool {
    let lhs = homogeneous_family(n).at_mu_zero();
    // expand (x − ν)^n: coefficient of x^{n−k} is C(n,k)(−ν)^k
    let mut cx = Vec::with_capacity(n + 1);
    for j in 0..=n {
        // x^j coefficient: C(n, n−j)·(−ν)^{n−j}
        let k = n - j;
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = signed_binomial(n, k);
        cx.push(IntPoly::from_coeffs(coeffs));
    }
    lhs == BivarPoly::from_x_coeffs(cx)
}
