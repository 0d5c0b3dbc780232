#![no_main]

use libfuzzer_sys::fuzz_target;
use rectjack::combinatorics::{rsyt_from_contents, Tableau};
use rectjack::singular::{brick_map, fundamental_equation_holds};

fuzz_target!(|data: &[u8]| {
    let Ok(t) = serde_json::from_slice::<Tableau>(data) else { return };
    if t.n() > 40 {
        return;
    }
    let text = serde_json::to_string(&t).unwrap();
    assert_eq!(serde_json::from_str::<Tableau>(&text).unwrap(), t);
    if t.is_rsyt() {
        assert_eq!(rsyt_from_contents(&t.content_vector()).unwrap(), t);
    }
    for m in 1..=4 {
        if let Ok(pair) = brick_map(&t, m) {
            assert!(pair.tableau.is_rsyt());
            assert!(fundamental_equation_holds(&pair, &t, m));
        }
    }
});
