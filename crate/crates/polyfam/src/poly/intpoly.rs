//! Dense univariate polynomials over ℤ with exact arithmetic: content and
//! primitive parts, pseudo-division, primitive-PRS gcd, Yun squarefree
//! decomposition, and an exact resultant/discriminant via mod-p
//! Euclidean remainder sequences recombined by CRT.

use std::fmt;

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use super::arith::{crt_primes, invmod, mulmod};

/// Coefficients ascending by degree; no trailing zeros (zero = empty vec).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// x^k
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree treating zero as −∞ → panics on zero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.coeff(i) + other.coeff(i);
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.coeff(i) - other.coeff(i);
        }
        IntPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn evaluate_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and force a positive leading coefficient.
    /// Returns the primitive part (zero stays zero).
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division: Some(q) with self = q·divisor, None if not divisible.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.deg() < divisor.deg() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dlc = divisor.leading();
        let ddeg = divisor.deg();
        let mut q = vec![BigInt::zero(); self.deg() - ddeg + 1];
        for k in (0..q.len()).rev() {
            let lead = rem[k + ddeg].clone();
            if lead.is_zero() {
                continue;
            }
            let (qk, r) = lead.div_rem(&dlc);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let delta = dc * &qk;
                rem[k + i] -= delta;
            }
            q[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Pseudo-remainder: lc(d)^{deg f − deg d + 1}·f = q·d + r with
    /// deg r < deg d. Requires deg f ≥ deg d.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let ddeg = d.deg();
        let dlc = d.leading();
        let mut r = self.clone();
        let mut steps = self.deg() as i64 - ddeg as i64 + 1;
        while !r.is_zero() && r.deg() >= ddeg {
            let k = r.deg() - ddeg;
            let rl = r.leading();
            // r := lc(d)·r − rl·x^k·d
            let mut out = vec![BigInt::zero(); r.coeffs.len()];
            for (i, c) in r.coeffs.iter().enumerate() {
                out[i] = c * &dlc;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                out[i + k] -= c * &rl;
            }
            r = IntPoly::from_coeffs(out);
            steps -= 1;
        }
        // pad remaining multiplications so the defining identity holds
        while steps > 0 {
            r = r.scale(&dlc);
            steps -= 1;
        }
        r
    }

    /// Primitive positive-leading gcd in ℤ[x] up to content (i.e. the gcd in
    /// ℚ[x], normalized primitive): primitive PRS.
    pub fn gcd_primitive(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return IntPoly::one();
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// Yun's squarefree decomposition of the primitive part:
    /// `self = ±content · ∏ uᵢ^i` with the uᵢ squarefree, pairwise coprime,
    /// positive leading. Returns [(uᵢ, i)] for the nonconstant uᵢ, ascending
    /// in i.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.primitive_part();
        if f.is_constant() {
            return Vec::new();
        }
        let fp = f.derivative();
        let g = f.gcd_primitive(&fp);
        if g.is_constant() {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut c = f.div_exact(&g).expect("gcd divides");
        let mut d = fp
            .div_exact(&g)
            .expect("gcd divides derivative")
            .sub(&c.derivative());
        let mut i = 1usize;
        loop {
            let a = c.gcd_primitive(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            c = c.div_exact(&a).expect("a divides c");
            if c.is_constant() {
                break;
            }
            d = d.div_exact(&a).expect("a divides d").sub(&c.derivative());
            i += 1;
        }
        out
    }

    /// Reduce mod a u64 prime, ascending coefficients in [0, p).
    pub fn to_mod_p(&self, p: u64) -> Vec<u64> {
        let pb = BigInt::from(p);
        let mut out: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| {
                let m = c.mod_floor(&pb);
                let (_, digits) = m.to_u64_digits();
                digits.first().copied().unwrap_or(0)
            })
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Resultant of self and other, exactly (CRT over word-size primes
    /// against a Hadamard bound).
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        if self.is_constant() {
            return self.leading().pow(other.deg() as u32);
        }
        if other.is_constant() {
            return other.leading().pow(self.deg() as u32);
        }
        // Hadamard bound on |Res|: product over Sylvester rows of row 2-norms
        let norm2_sq = |f: &IntPoly| -> BigInt { f.coeffs.iter().map(|c| c * c).sum() };
        let bound_sq =
            norm2_sq(self).pow(other.deg() as u32) * norm2_sq(other).pow(self.deg() as u32);
        let mut bound = bound_sq.sqrt() + 1;
        bound *= 2; // symmetric range
        let mut modulus = BigInt::one();
        let mut residue = BigInt::zero();
        for p in crt_primes() {
            let fa = self.to_mod_p(p);
            let fb = other.to_mod_p(p);
            // degree must not drop, else the mod-p resultant is wrong
            if fa.len() != self.coeffs.len() || fb.len() != other.coeffs.len() {
                continue;
            }
            let r = resultant_mod_p(&fa, &fb, p);
            // CRT combine (residue mod modulus, r mod p)
            let pb = BigInt::from(p);
            if modulus.is_one() {
                residue = BigInt::from(r);
                modulus = pb;
            } else {
                let minv = {
                    let m = modulus.mod_floor(&pb);
                    let (_, d) = m.to_u64_digits();
                    invmod(d.first().copied().unwrap_or(0), p)
                };
                let rr = {
                    let m = residue.mod_floor(&pb);
                    let (_, d) = m.to_u64_digits();
                    d.first().copied().unwrap_or(0)
                };
                let t = mulmod((r + p - rr) % p, minv, p);
                residue += &modulus * BigInt::from(t);
                modulus *= pb;
            }
            if modulus > bound {
                break;
            }
        }
        // symmetric representative
        if &residue * 2 > modulus {
            residue -= &modulus;
        }
        residue
    }

    /// Discriminant with the convention
    /// `disc f = (−1)^{d(d−1)/2} · Res(f, f′) / lc(f)`.
    pub fn discriminant(&self) -> BigInt {
        let d = self.deg();
        assert!(d >= 1);
        if d == 1 {
            return BigInt::one();
        }
        let res = self.resultant(&self.derivative());
        let q = res / self.leading();
        if (d * (d - 1) / 2) % 2 == 1 {
            -q
        } else {
            q
        }
    }
}

/// Euclidean-PRS resultant over 𝔽_p (coefficients ascending, no trailing
/// zeros, both nonconstant on entry).
fn resultant_mod_p(f: &[u64], g: &[u64], p: u64) -> u64 {
    let mut a: Vec<u64> = f.to_vec();
    let mut b: Vec<u64> = g.to_vec();
    let mut res = 1u64;
    let mut neg = false;
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        if db == 0 {
            // Res(a, const) = const^{deg a}
            let mut acc = 1u64;
            for _ in 0..da {
                acc = mulmod(acc, b[0], p);
            }
            res = mulmod(res, acc, p);
            break;
        }
        // remainder r = a mod b over F_p
        let mut r = a.clone();
        let lb = *b.last().unwrap();
        let lb_inv = invmod(lb, p);
        for k in (db..=da).rev() {
            let c = r[k];
            if c == 0 {
                continue;
            }
            let q = mulmod(c, lb_inv, p);
            for (i, &bc) in b.iter().enumerate() {
                let idx = k - db + i;
                let sub = mulmod(q, bc, p);
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        while r.last() == Some(&0) {
            r.pop();
        }
        if r.is_empty() {
            return 0;
        }
        let dr = r.len() - 1;
        // Res(a,b) = (−1)^{da·db} · lc(b)^{da−dr} · Res(b,r)
        if (da * db) % 2 == 1 {
            neg = !neg;
        }
        let mut acc = 1u64;
        for _ in 0..(da - dr) {
            acc = mulmod(acc, lb, p);
        }
        res = mulmod(res, acc, p);
        a = b;
        b = r;
    }
    if neg {
        (p - res) % p
    } else {
        res
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Render ascending-stored coefficients as a conventional descending-power
/// expression, e.g. `x^2 - 4x + 2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = match c.sign() {
                Sign::Minus => ("-", -c),
                _ => ("+", c.clone()),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let f = p(&[1, 2, 1]); // (x+1)^2
        let g = p(&[1, 1]);
        assert_eq!(g.mul(&g), f);
        assert_eq!(f.sub(&f), IntPoly::zero());
        assert_eq!(f.derivative(), p(&[2, 2]));
        assert_eq!(f.evaluate(&BigInt::from(3)), BigInt::from(16));
        assert_eq!(f.degree(), Some(2));
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn content_and_primitive() {
        let f = p(&[-6, -12]); // -6(2x+1)
        assert_eq!(f.content(), BigInt::from(6));
        assert_eq!(f.primitive_part(), p(&[1, 2]));
    }

    #[test]
    fn exact_division() {
        let f = p(&[-1, 0, 0, 0, 1]); // x^4-1
        let g = p(&[1, 0, 1]); // x^2+1
        assert_eq!(f.div_exact(&g).unwrap(), p(&[-1, 0, 1]));
        assert!(f.div_exact(&p(&[1, 1, 1])).is_none());
        assert!(p(&[1, 3]).div_exact(&p(&[0, 2])).is_none());
    }

    #[test]
    fn gcd_examples() {
        let f = p(&[-1, 0, 1]); // (x-1)(x+1)
        let g = p(&[1, 2, 1]); // (x+1)^2
        assert_eq!(f.gcd_primitive(&g), p(&[1, 1]));
        assert_eq!(f.gcd_primitive(&p(&[1, 0, 1])), IntPoly::one());
        // content is stripped
        assert_eq!(p(&[2, 2]).gcd_primitive(&p(&[4, 4])), p(&[1, 1]));
    }

    #[test]
    fn yun_squarefree() {
        // (x-1)^2 (x+2) ascending: expand (x^2-2x+1)(x+2) = x^3 - 3x + 2
        let f = p(&[2, -3, 0, 1]);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        // squarefree input
        let g = p(&[1, 1, 1]);
        assert_eq!(g.squarefree_decomposition(), vec![(g.clone(), 1)]);
        // scaled input: content ignored
        let h = p(&[2, 4, 2]); // 2(x+1)^2
        assert_eq!(h.squarefree_decomposition(), vec![(p(&[1, 1]), 2)]);
    }

    #[test]
    fn resultant_examples() {
        // Res(x^2+1, x^2-1) = 4
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[-1, 0, 1])), BigInt::from(4));
        // Res(f, f) = 0
        let f = p(&[3, 1, 4, 1]);
        assert_eq!(f.resultant(&f), BigInt::zero());
        // Res(x-a, x-b) = b - a  (our order: Res(f,g) = lc(f)^dg ∏ g(α))
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-5, 1])), BigInt::from(-3));
        // swap symmetry with sign (−1)^{df·dg}
        assert_eq!(p(&[-5, 1]).resultant(&p(&[-2, 1])), BigInt::from(3));
        // nontrivial cross-check: Res(x^3-1, x^2-4) = (4-1)^... evaluate:
        // lc(f)^2 ∏_{α^3=1} (α^2-4) = ∏ (α-2)(α+2) = -f(2)·-f(-2)
        // = f(2)·f(-2)·(−1)^{3·2} = 7·(−9) = −63
        assert_eq!(
            p(&[-1, 0, 0, 1]).resultant(&p(&[-4, 0, 1])),
            BigInt::from(-63)
        );
    }

    #[test]
    fn discriminant_examples() {
        // disc(x^2 - t) at t=5: 4t → 20; via ax^2+bx+c: b²-4ac
        assert_eq!(p(&[-5, 0, 1]).discriminant(), BigInt::from(20));
        // disc(x^2 - 4x + 2) = 16 - 8 = 8
        assert_eq!(p(&[2, -4, 1]).discriminant(), BigInt::from(8));
        // disc((x-1)(x-2)(x-3)) = ∏ (r_i - r_j)^2 = 1·4·1 = 4
        assert_eq!(p(&[-6, 11, -6, 1]).discriminant(), BigInt::from(4));
        // degree 1: unit
        assert_eq!(p(&[7, 3]).discriminant(), BigInt::one());
    }

    #[test]
    fn pseudo_rem_identity() {
        let f = p(&[1, 2, 3, 4, 5]);
        let d = p(&[2, 0, 3]);
        let r = f.pseudo_rem(&d);
        // lc(d)^{deg f - deg d + 1} f ≡ r  (mod d)
        let scaled = f.scale(&BigInt::from(3).pow(3));
        let diff = scaled.sub(&r);
        assert!(diff.div_exact(&d).is_some() || diff.is_zero());
        assert!(r.is_zero() || r.deg() < d.deg());
    }

    #[test]
    fn display_formatting() {
        assert_eq!(p(&[2, -4, 1]).to_string(), "x^2 - 4x + 2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-7]).to_string(), "-7");
    }
}
