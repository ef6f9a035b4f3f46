#![no_main]

use libfuzzer_sys::fuzz_target;
use vecq_core::expr::parse_source;

fuzz_target!(|data: &str| {
    match parse_source(data) {
        Ok(tree) => {
            let printed = tree.to_string();
            assert_eq!(parse_source(&printed).as_ref(), Ok(&tree), "{printed}");
        }
        Err(e) => assert!(e.position() <= data.chars().count()),
    }
});
