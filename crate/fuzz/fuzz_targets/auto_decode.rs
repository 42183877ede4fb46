#![no_main]

use chibound::io::decode_auto;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((format, g)) = decode_auto(None, text) {
        assert_eq!(format.decode(text).as_ref(), Ok(&g));
    }
});
