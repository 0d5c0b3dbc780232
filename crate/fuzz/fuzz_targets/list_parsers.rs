#![no_main]

use libfuzzer_sys::fuzz_target;
use rectjack::combinatorics::rsyt_from_contents;
use rectjack::json::{parse_composition, parse_contents};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = parse_composition(s) {
        let text: Vec<String> = c.0.iter().map(|a| a.to_string()).collect();
        assert_eq!(parse_composition(&text.join(",")).unwrap(), c);
    }
    if let Ok(c) = parse_contents(s) {
        if c.len() <= 40 {
            if let Ok(t) = rsyt_from_contents(&c) {
                assert!(t.is_rsyt());
                assert_eq!(t.content_vector(), c);
            }
        }
    }
});
