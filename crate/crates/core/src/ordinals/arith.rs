//! Addition, multiplication and exponentiation on ω, each defined by
//! recursion in the right-hand argument: the function `x ↦ m ∘ x` is the
//! unique homomorphism from `(ω, ∅, succ)` to `(ω, base, step)`.

use super::{ord, Ordinal};

/// Evaluates at `x` the homomorphism from `(ω, ∅, succ)` into an iterative
/// structure with initial element `base` and operation `step`.
pub fn recurse<T>(x: &Ordinal, base: T, mut step: impl FnMut(T) -> T) -> T {
    let mut acc = base;
    let mut k = ord(0);
    while k != *x {
        acc = step(acc);
        k = k.succ();
    }
    acc
}

/// `m + 0 = m`, `m + s(x) = s(m + x)`
pub fn add(m: &Ordinal, x: &Ordinal) -> Ordinal {
    recurse(x, m.clone(), |y| y.succ())
}

/// `m · 0 = 0`, `m · s(x) = m · x + m`
pub fn mul(m: &Ordinal, x: &Ordinal) -> Ordinal {
    recurse(x, ord(0), |y| add(&y, m))
}

/// `m^0 = 1`, `m^s(x) = m^x · m`
pub fn exp(m: &Ordinal, x: &Ordinal) -> Ordinal {
    recurse(x, ord(1), |y| mul(&y, m))
}
