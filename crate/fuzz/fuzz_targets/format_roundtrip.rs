#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = fimpl::dsl::parse(text) else {
        return;
    };
    // Anything that parses must survive the canonical formatter: the
    // reformatted text reparses to a structurally equal document and the
    // formatter is idempotent on it.
    let formatted = fimpl::dsl::format_document(&doc);
    let reparsed = fimpl::dsl::parse(&formatted)
        .unwrap_or_else(|e| panic!("formatted output failed to parse: {e:?}\n{formatted}"));
    assert_eq!(doc, reparsed);
    assert_eq!(formatted, fimpl::dsl::format_document(&reparsed));
});
