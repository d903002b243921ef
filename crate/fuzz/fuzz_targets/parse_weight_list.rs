//! Fuzz the comma-separated weight-list parser: no panics, and accepted
//! lists round-trip through formatting.

#![no_main]

use libfuzzer_sys::fuzz_target;
use sphere_spectra::rat::{format_weight_list, parse_weight_list};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(w) = parse_weight_list(s) {
            let text = format_weight_list(&w);
            assert_eq!(parse_weight_list(&text).as_ref(), Ok(&w), "round trip of {text:?}");
        }
    }
});
