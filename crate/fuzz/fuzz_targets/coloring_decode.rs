#![no_main]

use chibound::io::decode_coloring;
use chibound::{verify_coloring, Graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(c) = decode_coloring(text) {
        let _ = verify_coloring(&Graph::cycle(5), &c);
    }
});
