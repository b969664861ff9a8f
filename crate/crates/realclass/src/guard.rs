//! Enumeration guards, raisable through the `REALCLASS_GUARD` environment
//! variable (an absolute cap applied to both the census element guard and
//! the polynomial candidate guard; values below the defaults are ignored).

use std::sync::OnceLock;

fn env_value() -> Option<u128> {
    static VALUE: OnceLock<Option<u128>> = OnceLock::new();
    *VALUE.get_or_init(|| {
        std::env::var("REALCLASS_GUARD")
            .ok()
            .and_then(|s| s.trim().parse::<u128>().ok())
    })
}

/// The effective guard: the default, unless the environment raises it.
pub(crate) fn raised(default: u128, _what: &str) -> u128 {
    match env_value() {
        Some(v) if v > default => v,
        _ => default,
    }
}
