#![no_main]

use hfalg::term::{parse_term, parse_term_compact, print_term, print_term_compact, Signature};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&which, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let sig = match which % 3 {
        0 => Signature::new([("0", 0), ("s", 1), ("t", 1)]),
        1 => Signature::new([("0", 0), ("+", 2)]),
        _ => Signature::new([("a", 0), ("b", 0), ("f", 3)]),
    }
    .unwrap();
    if let Ok(t) = parse_term(&sig, text) {
        assert_eq!(parse_term(&sig, &print_term(&sig, &t)).as_ref(), Ok(&t));
    }
    if let Ok(t) = parse_term_compact(&sig, text) {
        assert_eq!(parse_term_compact(&sig, &print_term_compact(&sig, &t)).as_ref(), Ok(&t));
    }
});
