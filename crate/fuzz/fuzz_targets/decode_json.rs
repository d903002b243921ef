//! Fuzz the JSON document decoder: no panics, and any accepted document is a
//! fixpoint of encode/decode.

#![no_main]

use libfuzzer_sys::fuzz_target;
use sphere_spectra::output::{from_json, to_json};

fuzz_target!(|data: &[u8]| {
    if let Ok(doc) = from_json(data) {
        let text = to_json(&doc);
        let again = from_json(text.as_bytes()).expect("own encoding decodes");
        assert_eq!(again, doc, "encode/decode fixpoint");
    }
});
