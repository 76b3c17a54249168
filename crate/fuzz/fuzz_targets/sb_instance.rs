#![no_main]

use hfalg::ordinals::sb::{parse_instance, sb_bijection, sb_d_lfp};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(inst) = parse_instance(text) else { return };
    assert_eq!(parse_instance(&inst.to_string()).as_ref(), Ok(&inst));
    if inst.window <= 4096 && inst.validate().is_ok() {
        if let (Ok(d), Ok(g)) = (sb_d_lfp(&inst), sb_bijection(&inst)) {
            assert!(d.iter().all(|x| g.contains_key(x)));
        }
    }
});
