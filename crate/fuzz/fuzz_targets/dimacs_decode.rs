#![no_main]

use chibound::io::{decode_dimacs, encode_dimacs};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = decode_dimacs(text) {
        let again = decode_dimacs(&encode_dimacs(&g)).expect("re-encoded DIMACS decodes");
        assert_eq!(again, g);
    }
});
