#![allow(dead_code)]

use hfalg::hf::HfSet;
use hfalg::term::{build, Signature, Term};
use proptest::prelude::*;

/// Small hereditarily finite sets of bounded depth and width.
pub fn hf_set() -> impl Strategy<Value = HfSet> {
    let leaf = Just(HfSet::empty());
    leaf.prop_recursive(4, 24, 4, |inner| prop::collection::vec(inner, 0..4).prop_map(HfSet::from_elems))
}

pub fn sig_0st() -> Signature {
    Signature::new([("0", 0), ("s", 1), ("t", 1)]).unwrap()
}

pub fn sig_0plus() -> Signature {
    Signature::new([("0", 0), ("+", 2)]).unwrap()
}

/// Random terms over `sig`, built from a stream of symbol choices.
pub fn term(sig: Signature, max_depth: usize) -> impl Strategy<Value = Term> {
    prop::collection::vec(any::<u8>(), 1..64).prop_map(move |choices| {
        let mut it = choices.into_iter().cycle();
        grow(&sig, &mut it, max_depth)
    })
}

fn grow(sig: &Signature, choices: &mut impl Iterator<Item = u8>, depth: usize) -> Term {
    let pick = choices.next().unwrap() as usize;
    let f = if depth == 0 {
        let constants: Vec<usize> = (0..sig.len()).filter(|&f| sig.arity(f) == 0).collect();
        constants[pick % constants.len()]
    } else {
        pick % sig.len()
    };
    let args = (0..sig.arity(f)).map(|_| grow(sig, choices, depth - 1)).collect();
    build(sig, f, args).unwrap()
}
