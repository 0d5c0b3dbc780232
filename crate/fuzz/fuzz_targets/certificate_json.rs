#![no_main]

use libfuzzer_sys::fuzz_target;
use rectjack::singular::SingularCertificate;

fuzz_target!(|data: &[u8]| {
    let Ok(cert) = serde_json::from_slice::<SingularCertificate>(data) else { return };
    let _ = cert.check();
    let text = serde_json::to_string(&cert).unwrap();
    assert_eq!(serde_json::from_str::<SingularCertificate>(&text).unwrap(), cert);
    let small = cert.tau.len() <= 8 && cert.tau.iter().all(|&p| p <= 8) && cert.tau.iter().sum::<usize>() <= 8
        && cert.members.len() <= 4
        && cert.members.iter().all(|m| m.polynomial.len() <= 256 && m.polynomial.iter().all(|t| t.exp.iter().all(|&e| e <= 8)));
    if small {
        let _ = cert.reverify();
    }
});
