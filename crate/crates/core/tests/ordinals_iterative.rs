use hfalg::hf::level;
use hfalg::iterative::{
    admits_induction, find_homs, isomorphic, mk_lasso, mk_zn, rec_add, rec_exp, rec_mul, Convention,
};
use hfalg::ordinals::arith::{add, exp, mul};
use hfalg::ordinals::sb::{check_bijection, random_affine_instance, sb_bijection, sb_d_lfp, sb_d_union, sufficient_depth};
use hfalg::ordinals::{is_ordinal_robinson, is_ordinal_vn, ord, ord_to_nat, Ordinal};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

proptest! {
    #[test]
    fn ordinal_arithmetic(m in 0usize..8, x in 0usize..8) {
        prop_assert_eq!(ord_to_nat(&add(&ord(m), &ord(x))), m + x);
        prop_assert_eq!(ord_to_nat(&mul(&ord(m), &ord(x))), m * x);
        if m <= 3 && x <= 3 {
            prop_assert_eq!(exp(&ord(m), &ord(x)).value(), m.pow(x as u32));
        }
        prop_assert_eq!(Ordinal::try_from_set(ord(m).as_set()).unwrap().value(), m);
    }

    #[test]
    fn sb_constructions_agree(seed in any::<u64>()) {
        let inst = random_affine_instance(&mut StdRng::seed_from_u64(seed));
        let lfp = sb_d_lfp(&inst).unwrap();
        prop_assert_eq!(&lfp, &sb_d_union(&inst, sufficient_depth(&inst)).unwrap());
        prop_assert_eq!(check_bijection(&inst, &sb_bijection(&inst).unwrap()), Ok(()));
    }

    #[test]
    fn cyclic_homomorphisms(n in 1usize..16, m in 1usize..16) {
        let homs = find_homs(&mk_zn(n).unwrap(), &mk_zn(m).unwrap()).unwrap();
        prop_assert_eq!(homs.len(), usize::from(n % m == 0));
        if let Some(h) = homs.first() {
            prop_assert!(h.iter().enumerate().all(|(k, &v)| v == k % m));
        }
    }

    #[test]
    fn modular_arithmetic_by_recursion(n in 1usize..9, a in 1usize..9, b in 1usize..9) {
        // one-based numerals: the initial element is 1, element i denotes i + 1
        let z = mk_zn(n).unwrap();
        let conv = Convention::OneBased;
        let (ea, eb) = (conv.numeral(&z, a).unwrap(), conv.numeral(&z, b).unwrap());
        let residue = |v: usize| v % n;
        let add = rec_add(&z, ea, conv).unwrap().unwrap();
        prop_assert_eq!(residue(add[eb] + 1), (a + b) % n);
        let mul = rec_mul(&z, ea, conv).unwrap().unwrap();
        prop_assert_eq!(residue(mul[eb] + 1), (a * b) % n);
        if let Some(e) = rec_exp(&z, ea, conv).unwrap() {
            prop_assert_eq!(residue(e[eb] + 1), (a.pow(b as u32)) % n);
        }
    }
}

#[test]
fn ordinal_definitions_agree_on_r5() {
    let ordinals: Vec<_> = level(5).into_iter().filter(|x| {
        let vn = is_ordinal_vn(x);
        assert_eq!(vn, is_ordinal_robinson(x), "{x}");
        vn
    }).collect();
    assert_eq!(ordinals, (0..5).map(|n| ord(n).as_set().clone()).collect::<Vec<_>>());
}

#[test]
fn lassos() {
    let l = mk_lasso(3, 2).unwrap();
    assert!(admits_induction(&l));
    assert!(!isomorphic(&l, &mk_zn(l.size()).unwrap()));
    assert!(isomorphic(&mk_lasso(1, 4).unwrap(), &mk_zn(4).unwrap()));
}
