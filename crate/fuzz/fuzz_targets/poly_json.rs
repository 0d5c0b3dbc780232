#![no_main]

use libfuzzer_sys::fuzz_target;
use rectjack::json::{poly_from_json_infer, poly_to_json, PolyJson};

fuzz_target!(|data: &[u8]| {
    let Ok(terms) = serde_json::from_slice::<PolyJson>(data) else { return };
    if terms.len() > 64 || terms.iter().any(|t| t.exp.len() > 8 || t.exp.iter().any(|&e| e > 16)) {
        return;
    }
    if let Ok(p) = poly_from_json_infer(&terms) {
        let back = poly_to_json(&p);
        if !back.is_empty() {
            assert_eq!(poly_from_json_infer(&back).unwrap(), p);
        }
    }
});
