//! Fuzz the CSV table decoder: no panics, and any accepted table reaches an
//! emit/parse fixpoint after one canonicalizing pass.

#![no_main]

use libfuzzer_sys::fuzz_target;
use sphere_spectra::output::{parse_csv, to_csv};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(lines) = parse_csv(s) {
            let text = to_csv(&lines);
            let again = parse_csv(&text).expect("own encoding parses");
            assert_eq!(again, lines, "emit/parse fixpoint");
        }
    }
});
