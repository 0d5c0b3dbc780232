#![no_main]

use libfuzzer_sys::fuzz_target;
use rectjack::field::RatFunc;
use rectjack::json::RatFuncJson;

fuzz_target!(|data: &[u8]| {
    let Ok(j) = serde_json::from_slice::<RatFuncJson>(data) else { return };
    if j.num.len() + j.den.len() > 64 {
        return;
    }
    if let Ok(f) = RatFunc::try_from(&j) {
        // reduced form is canonical, so a second trip is the identity
        let back = RatFuncJson::from(&f);
        assert_eq!(RatFunc::try_from(&back).unwrap(), f);
        assert_eq!(RatFuncJson::from(&RatFunc::try_from(&back).unwrap()), back);
    }
});
