//! Von Neumann ordinals and the classical constructions of the natural
//! numbers inside the hereditarily finite sets.

pub mod arith;
pub mod sb;
mod zermelo;

use std::fmt;

use thiserror::Error;

use crate::hf::{succ_vn, von_neumann, HfSet};

pub use zermelo::{
    is_sis_wo_member, is_wr_finite, is_zm, is_zm_prime, sis_wo_order, zermelo_numerals,
    zm_prime_union, SIS_WO_BOUND, WR_FINITE_BOUND, ZM_PRIME_BOUND, ZM_UNION_MAX_RANK,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdError {
    #[error("{0} is not a von Neumann ordinal")]
    NotAnOrdinal(HfSet),
    #[error("{what}: size {size} exceeds bound {bound}")]
    SizeExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
}

/// A von Neumann ordinal together with the natural number it denotes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ordinal {
    value: HfSet,
    n: usize,
}

impl Ordinal {
    pub fn new(n: usize) -> Ordinal {
        Ordinal {
            value: von_neumann(n),
            n,
        }
    }

    pub fn try_from_set(x: &HfSet) -> Result<Ordinal, OrdError> {
        if !is_ordinal(x) {
            return Err(OrdError::NotAnOrdinal(x.clone()));
        }
        // A finite von Neumann ordinal has exactly as many elements as the
        // number it denotes.
        Ok(Ordinal {
            value: x.clone(),
            n: x.len(),
        })
    }

    pub fn as_set(&self) -> &HfSet {
        &self.value
    }

    pub fn value(&self) -> usize {
        self.n
    }

    pub fn succ(&self) -> Ordinal {
        Ordinal {
            value: succ_vn(&self.value),
            n: self.n + 1,
        }
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ord({})", self.n)
    }
}

/// `ord(n)`: `ord(0) = ∅`, `ord(n+1) = succ_vn(ord(n))`.
pub fn ord(n: usize) -> Ordinal {
    Ordinal::new(n)
}

pub fn ord_to_nat(x: &Ordinal) -> usize {
    x.value()
}

/// Every element is also a subset.
pub fn is_transitive(x: &HfSet) -> bool {
    x.iter().all(|y| y.is_subset(x))
}

/// A transitive set of transitive sets.
pub fn is_ordinal_vn(x: &HfSet) -> bool {
    is_transitive(x) && x.iter().all(is_transitive)
}

/// Robinson's definition: transitive and totally ordered by membership.
pub fn is_ordinal_robinson(x: &HfSet) -> bool {
    let xs = x.elements();
    is_transitive(x)
        && xs.iter().enumerate().all(|(i, a)| {
            xs[i + 1..]
                .iter()
                .all(|b| a.contains(b) || b.contains(a))
        })
}

/// Ordinal test; both classical definitions are evaluated and must agree.
pub fn is_ordinal(x: &HfSet) -> bool {
    let vn = is_ordinal_vn(x);
    assert_eq!(
        vn,
        is_ordinal_robinson(x),
        "ordinal definitions disagree on {x}"
    );
    vn
}

/// Neither ∅ nor a successor. Never true for a hereditarily finite ordinal.
pub fn is_limit_ord(x: &HfSet) -> Result<bool, OrdError> {
    if !is_ordinal(x) {
        return Err(OrdError::NotAnOrdinal(x.clone()));
    }
    let limit = !x.is_empty() && !x.iter().any(|y| succ_vn(y) == *x);
    assert!(!limit, "hereditarily finite limit ordinal {x}");
    Ok(limit)
}
