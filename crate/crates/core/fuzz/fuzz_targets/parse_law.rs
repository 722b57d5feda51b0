#![no_main]

use libfuzzer_sys::fuzz_target;
use timing_diversity::{parse_law, Error, NoiseDensity};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match parse_law(text) {
        Ok(law) => {
            // Accepted specs print back to an equivalent spec.
            let again = parse_law(&law.to_string()).expect("display output parses");
            assert_eq!(again.to_string(), law.to_string());
            let s = law.support();
            assert!(s.lower < s.upper);
            let mid = if s.is_bounded() { 0.5 * (s.lower + s.upper) } else { s.lower + law.scale() };
            let c = law.cdf(mid);
            assert!((0.0..=1.0).contains(&c));
        }
        Err(Error::Parse(e)) => assert!(e.position <= text.len()),
        Err(_) => {}
    }
});
