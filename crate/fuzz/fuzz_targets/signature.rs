#![no_main]

use hfalg::term::{enumerate_terms, fragment_size, Signature};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(sig) = Signature::parse(text) {
        assert_eq!(Signature::parse(&sig.to_string()).as_ref(), Ok(&sig));
        if fragment_size(&sig, 2) <= 10_000 {
            let terms = enumerate_terms(&sig, 2).unwrap();
            assert_eq!(terms.len() as u128, fragment_size(&sig, 2));
        }
    }
});
