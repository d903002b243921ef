//! Fuzz the rational-number text parser: must never panic, and any accepted
//! value must survive a format/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use sphere_spectra::rat::{format_rational, parse_rational};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = parse_rational(s) {
            let text = format_rational(&r);
            assert_eq!(parse_rational(&text).as_ref(), Ok(&r), "round trip of {text:?}");
        }
    }
});
