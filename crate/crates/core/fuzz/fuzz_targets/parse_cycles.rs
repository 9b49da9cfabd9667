#![no_main]

use invgen::Permutation;
use libfuzzer_sys::fuzz_target;

// First byte picks the degree, the rest is cycle notation.
fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let degree = usize::from(d % 64);
    if let Ok(p) = Permutation::parse_cycles(text, degree) {
        let again = Permutation::parse_cycles(&p.to_string(), degree).expect("formatted output parses");
        assert_eq!(again, p);
    }
});
