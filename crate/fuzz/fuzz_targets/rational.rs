#![no_main]

use libfuzzer_sys::fuzz_target;
use vecq_core::scalar::Rational;

fuzz_target!(|data: &str| {
    if let Ok(r) = data.parse::<Rational>() {
        let text = r.to_string();
        assert_eq!(text.parse::<Rational>().as_ref(), Ok(&r));
        assert_eq!(text, text.parse::<Rational>().unwrap().to_string());
    }
});
