#![no_main]

use invgen::GroupHandle;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else {
        return;
    };
    if let Ok(text) = std::str::from_utf8(rest) {
        // Small degrees keep the stabilizer chain cheap.
        let _ = GroupHandle::parse(text, usize::from(d % 13));
    }
});
