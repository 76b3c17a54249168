#![no_main]

use hfalg::hf::{kpair, kpair_decode, parse_hf, tuple_decode, tuple_encode};
use hfalg::term::Signature;
use hfalg::vnn::{first_failure, graded_view, in_ds};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(x) = parse_hf(text) else { return };
    if let Some((a, b)) = kpair_decode(&x) {
        assert_eq!(kpair(&a, &b), x);
    }
    if let Some(xs) = tuple_decode(&x) {
        assert_eq!(tuple_encode(&xs).as_ref(), Ok(&x));
    }
    if let Some(v) = graded_view(&x) {
        assert_eq!(v.encode(), x);
    }
    let sig = Signature::new([("0", 0), ("s", 1), ("t", 1)]).unwrap();
    if let Ok(f) = first_failure(&sig, &x) {
        assert_eq!(in_ds(&sig, &x), f.map_or(true, |c| c > hfalg::vnn::Condition::TransitiveElements));
    }
});
