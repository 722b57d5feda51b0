#![no_main]

use libfuzzer_sys::fuzz_target;
use timing_diversity::grid::parse_trials;
use timing_diversity::Error;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match parse_trials(text) {
        Ok(n) => assert!(n >= 1 && n <= 1_000_000_000_000_000),
        Err(Error::Parse(e)) => assert!(e.position <= text.len()),
        Err(e) => panic!("unexpected error kind {e}"),
    }
});
