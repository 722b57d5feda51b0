#![no_main]

use libfuzzer_sys::fuzz_target;
use timing_diversity::grid::{parse_m_grid, MAX_GRID_POINTS, MAX_PARTICLES};
use timing_diversity::Error;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match parse_m_grid(text) {
        Ok(g) => {
            assert!(!g.is_empty() && g.len() <= MAX_GRID_POINTS);
            assert!(g[0] >= 1 && *g.last().unwrap() <= MAX_PARTICLES);
            assert!(g.windows(2).all(|w| w[0] < w[1]));
        }
        Err(Error::Parse(e)) => assert!(e.position <= text.len()),
        Err(e) => panic!("unexpected error kind {e}"),
    }
});
