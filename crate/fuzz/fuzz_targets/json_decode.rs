#![no_main]

use chibound::io::{decode_json, encode_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = decode_json(text) {
        let again = decode_json(&encode_json(&g)).expect("re-encoded JSON decodes");
        assert_eq!(again, g);
    }
});
