#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = fimpl::dsl::parse(text) else {
        return;
    };
    // Elaboration may reject the document, but it must not panic and
    // every diagnostic must carry a real source position.
    if let Err(diag) = fimpl::dsl::elaborate(&doc) {
        assert!(diag.span.line >= 1 && diag.span.col >= 1);
    }
});
