#![no_main]

use chibound::io::{decode_graph6, encode_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = decode_graph6(text) {
        let again = decode_graph6(&encode_graph6(&g)).expect("re-encoded graph6 decodes");
        assert_eq!(again, g);
    }
});
