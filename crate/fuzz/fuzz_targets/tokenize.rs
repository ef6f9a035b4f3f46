#![no_main]

use libfuzzer_sys::fuzz_target;
use vecq_core::expr::tokenize;

fuzz_target!(|data: &str| {
    let len = data.chars().count();
    match tokenize(data) {
        Ok(tokens) => {
            for pair in tokens.windows(2) {
                assert!(pair[0].position < pair[1].position);
            }
            assert!(tokens.iter().all(|t| t.position < len));
        }
        Err(e) => assert!(e.position() < len),
    }
});
