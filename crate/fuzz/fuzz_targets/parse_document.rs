#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Must never panic; errors are the expected outcome for garbage.
    let _ = fimpl::dsl::parse(text);
});
