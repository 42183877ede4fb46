#![no_main]

use chibound::groetzsch::{format_labelling, parse_labelling};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(l) = parse_labelling(text) {
        assert_eq!(parse_labelling(&format_labelling(&l)), Ok(l));
    }
});
