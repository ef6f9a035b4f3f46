#![no_main]

use libfuzzer_sys::fuzz_target;
use vecq_core::expr::eval_str;
use vecq_core::scalar::Mode;

fuzz_target!(|data: &str| {
    // Large exponents make exact evaluation arbitrarily slow.
    if data.len() > 256 {
        return;
    }
    for mode in [Mode::Exact, Mode::Approx] {
        match eval_str(data, mode) {
            Ok(value) => {
                assert!(value.is_finite());
                let _ = value.render(17);
            }
            Err(e) => assert!(e.position() <= data.chars().count()),
        }
    }
});
