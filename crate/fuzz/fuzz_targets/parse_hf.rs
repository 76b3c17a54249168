#![no_main]

use hfalg::hf::{parse_hf, print_hf};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(x) = parse_hf(text) {
        let printed = print_hf(&x);
        assert_eq!(parse_hf(&printed).as_ref(), Ok(&x));
    }
});
