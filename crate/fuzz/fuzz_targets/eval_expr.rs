#![no_main]

use hfalg::hf::{eval_expr, parse_hf, print_hf};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match eval_expr(text) {
        Ok(x) => assert_eq!(parse_hf(&print_hf(&x)).as_ref(), Ok(&x)),
        Err(e) => assert!(e.offset() <= text.len()),
    }
});
