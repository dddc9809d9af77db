//! Polynomials in ℤ[t][x] — a dense vector of ℤ[t] coefficients indexed by
//! ascending x-power — with an exact resultant in x computed by evaluating t
//! at enough integer points and interpolating the univariate resultants back
//! through a factorial common denominator. All arithmetic is over ℤ.

use num::{BigInt, One, Zero};

use super::intpoly::IntPoly;

/// `cx[k]` is the ℤ[t]-coefficient of x^k; no trailing zero entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarPoly {
    cx: Vec<IntPoly>,
}

impl BivarPoly {
    pub fn from_x_coeffs(mut cx: Vec<IntPoly>) -> Self {
        while cx.last().is_some_and(|c| c.is_zero()) {
            cx.pop();
        }
        BivarPoly { cx }
    }

    pub fn is_zero(&self) -> bool {
        self.cx.is_empty()
    }

    pub fn x_coeffs(&self) -> &[IntPoly] {
        &self.cx
    }

    pub fn degree_x(&self) -> Option<usize> {
        if self.cx.is_empty() {
            None
        } else {
            Some(self.cx.len() - 1)
        }
    }

    pub fn degree_t(&self) -> Option<usize> {
        self.cx.iter().filter_map(|c| c.degree()).max()
    }

    /// Leading coefficient in x, an element of ℤ[t].
    pub fn leading_x(&self) -> IntPoly {
        self.cx.last().cloned().unwrap_or_else(IntPoly::zero)
    }

    /// Substitute an integer for t, producing a polynomial in x.
    pub fn eval_t(&self, t: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.cx.iter().map(|c| c.evaluate(t)).collect())
    }

    pub fn derivative_x(&self) -> BivarPoly {
        if self.cx.len() <= 1 {
            return BivarPoly::from_x_coeffs(Vec::new());
        }
        BivarPoly::from_x_coeffs(
            self.cx
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&BigInt::from(k)))
                .collect(),
        )
    }

    pub fn derivative_t(&self) -> BivarPoly {
        BivarPoly::from_x_coeffs(self.cx.iter().map(|c| c.derivative()).collect())
    }

    /// Resultant with respect to x: an element of ℤ[t], computed exactly.
    ///
    /// Strategy: deg_t Res ≤ D = deg_x(f)·deg_t(g) + deg_x(g)·deg_t(f), so
    /// evaluate both inputs at D+1 consecutive integers t = T₀,…,T₀+D chosen
    /// so neither leading x-coefficient vanishes in the window (keeping the
    /// specialized degrees honest), take univariate resultants, and
    /// interpolate. On consecutive nodes the Lagrange denominators all divide
    /// D!, so the interpolation stays in ℤ until one exact final division.
    pub fn resultant_x(&self, other: &BivarPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let dx_f = self.degree_x().unwrap();
        let dx_g = other.degree_x().unwrap();
        if dx_f == 0 {
            // Res(c(t), g) = c(t)^{deg_x g}
            return pow_poly(&self.cx[0], dx_g);
        }
        if dx_g == 0 {
            return pow_poly(&other.cx[0], dx_f);
        }
        let dt_f = self.degree_t().unwrap();
        let dt_g = other.degree_t().unwrap();
        let d_bound = dx_f * dt_g + dx_g * dt_f;
        if d_bound == 0 {
            // both inputs are constant in t
            let r = self
                .eval_t(&BigInt::zero())
                .resultant(&other.eval_t(&BigInt::zero()));
            return IntPoly::constant(r);
        }

        // find a window of D+1 consecutive integers avoiding roots of both
        // leading x-coefficients
        let lf = self.leading_x();
        let lg = other.leading_x();
        let mut t0 = BigInt::zero();
        'scan: loop {
            let mut t = t0.clone();
            for _ in 0..=d_bound {
                if lf.evaluate(&t).is_zero() || lg.evaluate(&t).is_zero() {
                    t0 = &t + 1;
                    continue 'scan;
                }
                t += 1;
            }
            break;
        }

        // evaluate
        let ys: Vec<BigInt> = (0..=d_bound)
            .map(|j| {
                let t = &t0 + BigInt::from(j);
                self.eval_t(&t).resultant(&other.eval_t(&t))
            })
            .collect();

        interpolate_consecutive(&t0, &ys)
    }

    /// Discriminant with respect to x with the convention
    /// `disc = (−1)^{d(d−1)/2}·Res_x(f, ∂f/∂x) / lc_x(f)`, exact in ℤ[t].
    pub fn discriminant_x(&self) -> IntPoly {
        let d = self.degree_x().expect("discriminant of zero polynomial");
        assert!(d >= 1);
        if d == 1 {
            return IntPoly::one();
        }
        let res = self.resultant_x(&self.derivative_x());
        let q = res
            .div_exact(&self.leading_x())
            .expect("leading coefficient divides Res(f, f_x)");
        if (d * (d - 1) / 2) % 2 == 1 {
            q.neg()
        } else {
            q
        }
    }
}

fn pow_poly(f: &IntPoly, e: usize) -> IntPoly {
    let mut acc = IntPoly::one();
    for _ in 0..e {
        acc = acc.mul(f);
    }
    acc
}

/// Interpolate the unique P ∈ ℚ[t] of degree ≤ D through
/// (t0+j, ys[j]), j = 0..=D, and return it, asserting it lands in ℤ[t]:
/// P = (1/D!)·Σ_j ys[j]·(−1)^{D−j}·C(D,j)·W(t)/(t−(t0+j)).
fn interpolate_consecutive(t0: &BigInt, ys: &[BigInt]) -> IntPoly {
    let d = ys.len() - 1;
    // W(t) = ∏_{i=0}^{D} (t - (t0+i))
    let mut w = IntPoly::one();
    for i in 0..=d {
        let root = t0 + BigInt::from(i);
        w = w.mul(&IntPoly::from_coeffs(vec![-root, BigInt::one()]));
    }
    // binomials C(D, j)
    let mut binom = vec![BigInt::one(); d + 1];
    for j in 1..=d {
        binom[j] = &binom[j - 1] * BigInt::from(d - j + 1) / BigInt::from(j);
    }
    let mut acc = IntPoly::zero();
    for (j, y) in ys.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        let root = t0 + BigInt::from(j);
        let mj = synthetic_quotient(&w, &root);
        let mut k = y * &binom[j];
        if (d - j) % 2 == 1 {
            k = -k;
        }
        acc = acc.add(&mj.scale(&k));
    }
    let mut dfact = BigInt::one();
    for i in 2..=d {
        dfact *= BigInt::from(i);
    }
    let out = acc
        .div_exact(&IntPoly::constant(dfact))
        .expect("interpolant has integer coefficients");
    debug_assert!(out.degree().map_or(0, |x| x) <= d);
    out
}

/// Exact quotient W(t)/(t − root) when root is a root of W.
fn synthetic_quotient(w: &IntPoly, root: &BigInt) -> IntPoly {
    let c = w.coeffs();
    let n = c.len();
    assert!(n >= 2);
    let mut q = vec![BigInt::zero(); n - 1];
    let mut carry = BigInt::zero();
    for k in (0..n - 1).rev() {
        carry = &c[k + 1] + root * &carry;
        q[k] = carry.clone();
    }
    debug_assert!((&c[0] + root * &carry).is_zero(), "root must divide");
    IntPoly::from_coeffs(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn degrees_and_eval() {
        // f = x^2 - 2(t+2)x + (t+1)(t+2)
        let f = BivarPoly::from_x_coeffs(vec![tp(&[2, 3, 1]), tp(&[-4, -2]), tp(&[1])]);
        assert_eq!(f.degree_x(), Some(2));
        assert_eq!(f.degree_t(), Some(2));
        assert_eq!(f.eval_t(&BigInt::from(0)), tp(&[2, -4, 1]));
        assert_eq!(f.derivative_x().eval_t(&BigInt::from(0)), tp(&[-4, 2]));
    }

    #[test]
    fn resultant_linear_pair() {
        // Res_x(x - t, x - 2t) = (x-2t) at x=t → -t
        let f = BivarPoly::from_x_coeffs(vec![tp(&[0, -1]), tp(&[1])]);
        let g = BivarPoly::from_x_coeffs(vec![tp(&[0, -2]), tp(&[1])]);
        assert_eq!(f.resultant_x(&g), tp(&[0, -1]));
    }

    #[test]
    fn resultant_matches_specialization() {
        // f = x^3 + t x + 1, g = t x^2 - x + t + 2; compare Res_x then t:=v
        // against t:=v then Res for several v
        let f = BivarPoly::from_x_coeffs(vec![tp(&[1]), tp(&[0, 1]), tp(&[]), tp(&[1])]);
        let g = BivarPoly::from_x_coeffs(vec![tp(&[2, 1]), tp(&[-1]), tp(&[0, 1])]);
        let r = f.resultant_x(&g);
        for v in [-3i64, -1, 1, 2, 5, 11] {
            let vb = BigInt::from(v);
            // specialized g keeps full x-degree whenever v ≠ 0
            assert_eq!(
                r.evaluate(&vb),
                f.eval_t(&vb).resultant(&g.eval_t(&vb)),
                "mismatch at t={v}"
            );
        }
    }

    #[test]
    fn quadratic_discriminant() {
        // x^2 - 2(t+2)x + (t+1)(t+2): disc = 4(t+2)² - 4(t+1)(t+2) = 4(t+2)
        let f = BivarPoly::from_x_coeffs(vec![tp(&[2, 3, 1]), tp(&[-4, -2]), tp(&[1])]);
        assert_eq!(f.discriminant_x(), tp(&[8, 4]));
    }

    #[test]
    fn cubic_discriminant() {
        // coefficient vector of x^j for
        // (t+1)(t+2)(t+3) - 3(t+2)(t+3)x + 3(t+3)x² - x³;
        // its x-discriminant is 108(t+2)(t+3)²
        let f = BivarPoly::from_x_coeffs(vec![
            tp(&[6, 11, 6, 1]),
            tp(&[-18, -15, -3]),
            tp(&[9, 3]),
            tp(&[-1]),
        ]);
        let disc = f.discriminant_x();
        assert_eq!(disc, tp(&[1944, 2268, 864, 108]));
        assert_eq!(disc.evaluate(&BigInt::from(0)), BigInt::from(1944));
    }

    #[test]
    fn window_scan_avoids_leading_roots() {
        // leading x-coefficient t(t-1)(t-2) vanishes at 0,1,2 — the scan
        // must slide past them and still get the right answer
        let f = BivarPoly::from_x_coeffs(vec![tp(&[1, 1]), tp(&[0, 2, -3, 1])]);
        let g = BivarPoly::from_x_coeffs(vec![tp(&[0, 1]), tp(&[1])]);
        let r = f.resultant_x(&g);
        for v in [3i64, 4, 7] {
            let vb = BigInt::from(v);
            assert_eq!(r.evaluate(&vb), f.eval_t(&vb).resultant(&g.eval_t(&vb)));
        }
    }

    #[test]
    fn constant_in_x_cases() {
        // Res_x(t+5, x^2 - t) = (t+5)^2
        let c = BivarPoly::from_x_coeffs(vec![tp(&[5, 1])]);
        let g = BivarPoly::from_x_coeffs(vec![tp(&[0, -1]), tp(&[]), tp(&[1])]);
        assert_eq!(c.resultant_x(&g), tp(&[25, 10, 1]));
    }
}
