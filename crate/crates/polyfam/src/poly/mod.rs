//! Exact polynomial arithmetic: integers mod p, ℤ[x], ℤ[t][x], and
//! factorization over ℚ.

pub mod arith;
pub mod bivar;
pub mod factor;
pub mod intpoly;
pub mod modp;

pub use bivar::BivarPoly;
pub use factor::{dedekind_cycle_type, factor_over_q, FactorError, FactorizationResult};
pub use intpoly::IntPoly;
pub use modp::PolyZp;

use num::rational::BigRational;
use num::{BigInt, Signed, Zero};

/// True iff q is the square of a rational number (0 counts).
pub fn is_rational_square(q: &BigRational) -> bool {
    if q.is_zero() {
        return true;
    }
    if q.is_negative() {
        return false;
    }
    let is_square = |n: &BigInt| {
        let r = n.sqrt();
        &r * &r == *n
    };
    is_square(q.numer()) && is_square(q.denom())
}
