//! Dense univariate polynomials over a prime field 𝔽_p (p < 2⁶²) with
//! Euclidean arithmetic and factorization of squarefree inputs by
//! distinct-degree splitting followed by equal-degree splitting
//! (probabilistic with a deterministic seed; the trace map handles p = 2).

use super::arith::{invmod, mulmod, SplitMix64};
use super::intpoly::IntPoly;

/// Coefficients ascending, reduced into [0, p), no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyZp {
    p: u64,
    c: Vec<u64>,
}

impl PolyZp {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyZp { p, c }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        PolyZp {
            p,
            c: f.to_mod_p(p),
        }
    }

    pub fn zero(p: u64) -> Self {
        PolyZp { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        PolyZp::new(p, vec![1])
    }

    /// The monomial x.
    pub fn x(p: u64) -> Self {
        PolyZp::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn leading(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn add(&self, o: &PolyZp) -> PolyZp {
        assert_eq!(self.p, o.p);
        let n = self.c.len().max(o.c.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = o.c.get(i).copied().unwrap_or(0);
            *slot = (a + b) % self.p;
        }
        PolyZp::new(self.p, out)
    }

    pub fn sub(&self, o: &PolyZp) -> PolyZp {
        assert_eq!(self.p, o.p);
        let n = self.c.len().max(o.c.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = o.c.get(i).copied().unwrap_or(0);
            *slot = (a + self.p - b) % self.p;
        }
        PolyZp::new(self.p, out)
    }

    pub fn mul(&self, o: &PolyZp) -> PolyZp {
        assert_eq!(self.p, o.p);
        if self.is_zero() || o.is_zero() {
            return PolyZp::zero(self.p);
        }
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                let t = mulmod(a, b, self.p);
                out[i + j] = (out[i + j] + t) % self.p;
            }
        }
        PolyZp::new(self.p, out)
    }

    pub fn scale(&self, k: u64) -> PolyZp {
        let k = k % self.p;
        PolyZp::new(
            self.p,
            self.c.iter().map(|&a| mulmod(a, k, self.p)).collect(),
        )
    }

    pub fn monic(&self) -> PolyZp {
        let lc = self.leading();
        if lc == 0 || lc == 1 {
            return self.clone();
        }
        self.scale(invmod(lc, self.p))
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn divmod(&self, d: &PolyZp) -> (PolyZp, PolyZp) {
        assert_eq!(self.p, d.p);
        assert!(!d.is_zero(), "division by zero polynomial");
        let ddeg = d.deg();
        if self.is_zero() || self.deg() < ddeg {
            return (PolyZp::zero(self.p), self.clone());
        }
        let p = self.p;
        let lc_inv = invmod(d.leading(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.deg() - ddeg + 1];
        for k in (0..q.len()).rev() {
            let lead = r[k + ddeg];
            if lead == 0 {
                continue;
            }
            let qk = mulmod(lead, lc_inv, p);
            q[k] = qk;
            for (i, &dc) in d.c.iter().enumerate() {
                let sub = mulmod(qk, dc, p);
                r[k + i] = (r[k + i] + p - sub) % p;
            }
        }
        (PolyZp::new(p, q), PolyZp::new(p, r))
    }

    pub fn rem(&self, d: &PolyZp) -> PolyZp {
        self.divmod(d).1
    }

    pub fn derivative(&self) -> PolyZp {
        if self.c.len() <= 1 {
            return PolyZp::zero(self.p);
        }
        let out: Vec<u64> = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mulmod(a, (i as u64) % self.p, self.p))
            .collect();
        PolyZp::new(self.p, out)
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &PolyZp) -> PolyZp {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: (g, s, t) with g monic, s·self + t·other = g.
    pub fn extended_gcd(&self, other: &PolyZp) -> (PolyZp, PolyZp, PolyZp) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (PolyZp::one(p), PolyZp::zero(p));
        let (mut t0, mut t1) = (PolyZp::zero(p), PolyZp::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        // normalize to monic gcd
        let lc = r0.leading();
        if lc > 1 {
            let inv = invmod(lc, p);
            r0 = r0.scale(inv);
            s0 = s0.scale(inv);
            t0 = t0.scale(inv);
        }
        (r0, s0, t0)
    }

    /// self^e mod m by binary exponentiation.
    pub fn powmod(&self, mut e: u64, m: &PolyZp) -> PolyZp {
        let mut base = self.rem(m);
        let mut acc = PolyZp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// self^p mod m (one Frobenius application).
    pub fn frobenius(&self, m: &PolyZp) -> PolyZp {
        self.powmod(self.p, m)
    }

    /// True iff gcd(f, f′) is constant (in particular f' ≠ 0).
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).deg() == 0
    }

    /// Factor a squarefree polynomial into monic irreducibles, sorted by
    /// (degree, coefficient vector). Panics if the input is not squarefree.
    pub fn factor_squarefree(&self) -> Vec<PolyZp> {
        assert!(self.is_squarefree(), "input must be squarefree mod p");
        let p = self.p;
        if self.deg() == 0 {
            return Vec::new();
        }
        let mut rng = SplitMix64::new(
            0x6C62_272E_07BB_0142 ^ p.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ self.deg() as u64,
        );
        let x = PolyZp::x(p);
        let mut out: Vec<PolyZp> = Vec::new();
        let mut f = self.monic();
        // distinct-degree pass: h tracks x^{p^d} mod f
        let mut h = x.rem(&f);
        let mut d = 0usize;
        while f.deg() > 0 {
            d += 1;
            if 2 * d > f.deg() {
                out.push(f.clone());
                break;
            }
            h = h.frobenius(&f);
            let g = h.sub(&x.rem(&f)).gcd(&f);
            if g.degree() == Some(0) || g.is_zero() {
                continue;
            }
            equal_degree_split(&g, d, &mut rng, &mut out);
            let (q, r) = f.divmod(&g);
            assert!(r.is_zero());
            f = q;
            h = h.rem(&f);
        }
        out.sort_by(|a, b| (a.c.len(), &a.c).cmp(&(b.c.len(), &b.c)));
        out
    }
}

/// Split a monic product of distinct irreducibles, all of degree d, into its
/// irreducible factors (Cantor–Zassenhaus; trace map when p = 2).
fn equal_degree_split(g: &PolyZp, d: usize, rng: &mut SplitMix64, out: &mut Vec<PolyZp>) {
    let p = g.modulus();
    if g.deg() == d {
        out.push(g.monic());
        return;
    }
    let one = PolyZp::one(p);
    for _attempt in 0..500 {
        // random nonconstant element of F_p[x]/(g)
        let mut coeffs = vec![0u64; g.deg()];
        for c in coeffs.iter_mut() {
            *c = rng.below(p);
        }
        let a = PolyZp::new(p, coeffs);
        if a.is_zero() || a.deg() == 0 {
            continue;
        }
        let candidate = if p == 2 {
            // trace map: a + a^2 + a^4 + … + a^{2^{d-1}} mod g
            let mut term = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                term = term.mul(&term).rem(g);
                acc = acc.add(&term);
            }
            acc.gcd(g)
        } else {
            // a^{(p^d-1)/2} = (a^{1+p+…+p^{d-1}})^{(p-1)/2}
            let mut norm = a.clone();
            for _ in 1..d {
                norm = norm.frobenius(g).mul(&a).rem(g);
            }
            let b = norm.powmod((p - 1) / 2, g);
            b.sub(&one).gcd(g)
        };
        if let Some(cd) = candidate.degree() {
            if cd > 0 && cd < g.deg() {
                let (q, r) = g.divmod(&candidate);
                assert!(r.is_zero());
                equal_degree_split(&candidate, d, rng, out);
                equal_degree_split(&q, d, rng, out);
                return;
            }
        }
    }
    panic!("equal-degree splitting failed to find a separating element");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(p: u64, c: &[u64]) -> PolyZp {
        PolyZp::new(p, c.to_vec())
    }

    #[test]
    fn division_and_gcd() {
        // (x^2+1)(x+3) mod 5 = x^3 + 3x^2 + x + 3
        let f = zp(5, &[3, 1, 3, 1]);
        let d = zp(5, &[3, 1]);
        let (q, r) = f.divmod(&d);
        assert!(r.is_zero());
        assert_eq!(q, zp(5, &[1, 0, 1]));
        assert_eq!(f.gcd(&zp(5, &[3, 1])), zp(5, &[3, 1]));
        // gcd of coprime polys is 1
        assert_eq!(zp(7, &[1, 1]).gcd(&zp(7, &[2, 1])), zp(7, &[1]));
    }

    #[test]
    fn extended_gcd_identity() {
        let a = zp(13, &[2, 0, 5, 1]);
        let b = zp(13, &[7, 1, 1]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g, zp(13, &[1]));
    }

    #[test]
    fn squarefree_detection() {
        assert!(zp(5, &[1, 0, 1]).is_squarefree());
        // (x+1)^2 mod 3
        assert!(!zp(3, &[1, 2, 1]).is_squarefree());
        // x^5 mod 5 has zero derivative
        assert!(!zp(5, &[0, 0, 0, 0, 0, 1]).is_squarefree());
    }

    #[test]
    fn factor_split_linear() {
        // x^2 + 1 mod 5 = (x+2)(x+3)
        let f = zp(5, &[1, 0, 1]);
        let fs = f.factor_squarefree();
        assert_eq!(fs, vec![zp(5, &[2, 1]), zp(5, &[3, 1])]);
    }

    #[test]
    fn factor_irreducible_stays_whole() {
        // x^3 + x + 1 is irreducible mod 2
        let f = zp(2, &[1, 1, 0, 1]);
        assert_eq!(f.factor_squarefree(), vec![f.clone()]);
        // x^4 + x^3 + x^2 + x + 1 is irreducible mod 2 (order of 2 mod 5 is 4)
        let g = zp(2, &[1, 1, 1, 1, 1]);
        assert_eq!(g.factor_squarefree(), vec![g.clone()]);
    }

    #[test]
    fn factor_distinct_degrees() {
        // (x^2+x+1)(x^3+x+1) mod 2
        let f = zp(2, &[1, 1, 1]).mul(&zp(2, &[1, 1, 0, 1]));
        let fs = f.factor_squarefree();
        assert_eq!(fs, vec![zp(2, &[1, 1, 1]), zp(2, &[1, 1, 0, 1])]);
    }

    #[test]
    fn factor_equal_degree_odd_p() {
        // (x^2+1)(x^2+x+2) mod 3, both irreducible
        let f = zp(3, &[1, 0, 1]).mul(&zp(3, &[2, 1, 1]));
        let fs = f.factor_squarefree();
        assert_eq!(fs, vec![zp(3, &[1, 0, 1]), zp(3, &[2, 1, 1])]);
    }

    #[test]
    fn factor_equal_degree_p2_trace() {
        // the two irreducible cubics mod 2 multiplied together
        let f = zp(2, &[1, 1, 0, 1]).mul(&zp(2, &[1, 0, 1, 1]));
        let fs = f.factor_squarefree();
        assert_eq!(fs, vec![zp(2, &[1, 0, 1, 1]), zp(2, &[1, 1, 0, 1])]);
    }

    #[test]
    fn factor_nonmonic_input() {
        // 2(x+1)(x+2) mod 5 — monic factors come back
        let f = zp(5, &[2, 1]).mul(&zp(5, &[1, 1])).scale(2);
        let fs = f.factor_squarefree();
        assert_eq!(fs, vec![zp(5, &[1, 1]), zp(5, &[2, 1])]);
    }

    #[test]
    fn powmod_fermat() {
        // x^p ≡ x mod (x^p - x) decomposition sanity: x^5 mod x^2+1 over F_5
        let x = PolyZp::x(5);
        let m = zp(5, &[1, 0, 1]);
        // x^2 ≡ -1, so x^4 ≡ 1, x^5 ≡ x
        assert_eq!(x.powmod(5, &m), x.rem(&m));
    }
}
